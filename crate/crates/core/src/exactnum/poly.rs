use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{NumError, Rational};

/// A univariate polynomial with integer coefficients, lowest degree first.
///
/// The coefficient list never ends in a zero; the zero polynomial is the
/// empty list.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(vec![c.into()])
    }

    /// The indeterminate `t`.
    pub fn var() -> Self {
        Self::from_i64s(&[0, 1])
    }

    /// Clears denominators of a rational coefficient list: returns `(p, s)`
    /// with `p` primitive and `coeffs = s * p` coefficientwise.
    pub fn from_rationals(coeffs: &[Rational]) -> (Self, Rational) {
        let lcm = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let scaled: Vec<BigInt> = coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let p = Self::new(scaled);
        if p.is_zero() {
            return (p, Rational::one());
        }
        let content = p.content();
        let prim = p.div_scalar(&content);
        let scale = Rational::new(content, lcm).expect("lcm of denominators is nonzero");
        (prim, scale)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Nonnegative gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides out the content and fixes the sign so the leading coefficient
    /// is positive.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading().is_some_and(|l| l.is_negative()) {
            c = -c;
        }
        self.div_scalar(&c)
    }

    pub fn eval(&self, at: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * at + Rational::from_integer(c.clone()))
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        IntPolynomial { coeffs: self.coeffs.iter().map(|c| c * k).collect() }
    }

    /// Exact coefficientwise division; the caller guarantees divisibility.
    fn div_scalar(&self, k: &BigInt) -> Self {
        IntPolynomial { coeffs: self.coeffs.iter().map(|c| c / k).collect() }
    }

    fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPolynomial { coeffs }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = BigInt::zero();
        Self::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) + other.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }

    pub fn neg(&self) -> Self {
        IntPolynomial { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Pseudo-remainder `lc(d)^(deg self - deg d + 1) * self mod d`.
    pub fn pseudo_rem(&self, d: &Self) -> Self {
        let dd = d.degree().expect("pseudo-division by the zero polynomial");
        let lc = d.leading().unwrap().clone();
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < dd {
                break;
            }
            let lr = r.leading().unwrap().clone();
            r = r.scale(&lc).sub(&d.scale(&lr).shift(dr - dd));
        }
        r
    }

    /// Division in ℤ[t]; `None` when `d` does not divide `self` exactly.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let dd = d.degree()?;
        let lc = d.leading().unwrap();
        let mut r = self.clone();
        let mut quot = vec![BigInt::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(dr) = r.degree() {
            if dr < dd {
                return None;
            }
            let (qc, rem) = r.leading().unwrap().div_rem(lc);
            if !rem.is_zero() {
                return None;
            }
            r = r.sub(&d.scale(&qc).shift(dr - dd));
            quot[dr - dd] = qc;
        }
        Some(Self::new(quot))
    }

    /// Primitive gcd with positive leading coefficient; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.primitive(), other.primitive());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive();
            a = b;
            b = r;
        }
        a.primitive()
    }

    /// Product of the distinct irreducible factors, primitive.
    pub fn squarefree_part(&self) -> Self {
        if self.is_constant() {
            return self.primitive();
        }
        let g = self.gcd(&self.derivative());
        self.primitive().div_exact(&g).expect("gcd divides").primitive()
    }

    /// All rational roots, sorted ascending, each confirmed by exact evaluation.
    pub fn rational_roots(&self) -> Result<Vec<Rational>, NumError> {
        if self.is_zero() {
            return Err(NumError::ZeroPolynomial);
        }
        let mut roots = Vec::new();
        let lowest = self.coeffs.iter().position(|c| !c.is_zero()).unwrap();
        if lowest > 0 {
            roots.push(Rational::zero());
        }
        let p = IntPolynomial::new(self.coeffs[lowest..].to_vec()).squarefree_part();
        if p.degree().unwrap_or(0) == 0 {
            return Ok(roots);
        }
        let nums = divisors(p.coeffs[0].magnitude());
        let dens = divisors(p.leading().unwrap().magnitude());
        for n in &nums {
            for d in &dens {
                for sign in [Sign::Plus, Sign::Minus] {
                    let r = Rational::new(BigInt::from_biguint(sign, n.clone()), BigInt::from(d.clone()))
                        .expect("divisors are positive");
                    if p.eval(&r).is_zero() {
                        roots.push(r);
                    }
                }
            }
        }
        roots.sort();
        roots.dedup();
        Ok(roots)
    }

    /// Removes every rational root (with multiplicity) and returns the
    /// primitive cofactor, which has no rational roots.
    pub fn strip_rational_roots(&self) -> Result<(Vec<Rational>, Self), NumError> {
        let roots = self.rational_roots()?;
        let mut rest = self.primitive();
        for r in &roots {
            // (den * t - num) is primitive since gcd(num, den) = 1.
            let lin = IntPolynomial::new(vec![-r.numer().clone(), r.denom().clone()]);
            while let Some(qt) = rest.div_exact(&lin) {
                rest = qt;
            }
        }
        Ok((roots, rest.primitive()))
    }
}

/// Positive divisors by trial division, ascending.
fn divisors(n: &BigUint) -> Vec<BigUint> {
    let mut factors: Vec<(BigUint, u32)> = Vec::new();
    let mut m = n.clone();
    let mut p = BigUint::from(2u32);
    while &p * &p <= m {
        let mut e = 0;
        while (&m % &p).is_zero() {
            m /= &p;
            e += 1;
        }
        if e > 0 {
            factors.push((p.clone(), e));
        }
        p += 1u32;
    }
    if m > BigUint::one() {
        factors.push((m, 1));
    }
    let mut divs = vec![BigUint::one()];
    for (p, e) in factors {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut pk = d.clone();
            next.push(pk.clone());
            for _ in 0..e {
                pk *= &p;
                next.push(pk.clone());
            }
        }
        divs = next;
    }
    divs.sort();
    divs
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            first = false;
            let a = c.abs();
            match (i, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (_, true) => write!(f, "t")?,
                _ => write!(f, "{a}t")?,
            }
            if i > 1 {
                write!(f, "^{i}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

// Coefficients go out as decimal strings so arbitrarily large values survive
// JSON readers that parse numbers as doubles.
impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(deserializer)?;
        raw.iter()
            .map(|s| s.parse::<BigInt>().map_err(serde::de::Error::custom))
            .collect::<Result<Vec<_>, _>>()
            .map(IntPolynomial::new)
    }
}
