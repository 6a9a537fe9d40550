//! Arithmetic in `ℚ[t]/(f)` for a squarefree `f`.
//!
//! When `f` is irreducible this is a number field. Otherwise inversion may
//! hit a zero divisor, which exposes a proper factor of `f`.

use super::{IntPolynomial, Rational};

/// Coefficients lowest degree first, no trailing zeros.
pub type RatPoly = Vec<Rational>;

fn trim(mut p: RatPoly) -> RatPoly {
    while p.last().is_some_and(Rational::is_zero) {
        p.pop();
    }
    p
}

fn sub(a: &[Rational], b: &[Rational]) -> RatPoly {
    let len = a.len().max(b.len());
    let zero = Rational::zero();
    trim((0..len).map(|i| a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero)).collect())
}

fn mul(a: &[Rational], b: &[Rational]) -> RatPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += &(x * y);
        }
    }
    trim(out)
}

/// Quotient and remainder; `b` is nonzero.
fn div_rem(a: &[Rational], b: &[Rational]) -> (RatPoly, RatPoly) {
    let lead = b.last().expect("nonzero divisor").recip().expect("trimmed");
    let mut r = a.to_vec();
    let mut quot = vec![Rational::zero(); a.len().saturating_sub(b.len()) + 1];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = r.last().unwrap() * &lead;
        for (i, y) in b.iter().enumerate() {
            r[shift + i] -= &(&c * y);
        }
        r.pop();
        quot[shift] = c;
        r = trim(r);
    }
    (trim(quot), r)
}

#[derive(Clone, Debug)]
pub struct ResidueRing {
    modulus: RatPoly,
}

impl ResidueRing {
    /// `f` must be nonconstant.
    pub fn new(f: &IntPolynomial) -> Self {
        let coeffs: RatPoly = f.coeffs().iter().map(|c| Rational::from_integer(c.clone())).collect();
        assert!(coeffs.len() > 1, "modulus must be nonconstant");
        ResidueRing { modulus: coeffs }
    }

    pub fn reduce(&self, p: &[Rational]) -> RatPoly {
        div_rem(&trim(p.to_vec()), &self.modulus).1
    }

    pub fn mul(&self, a: &[Rational], b: &[Rational]) -> RatPoly {
        self.reduce(&mul(a, b))
    }

    pub fn sub(&self, a: &[Rational], b: &[Rational]) -> RatPoly {
        sub(a, b)
    }

    /// The inverse of a nonzero reduced element, or `Err(g)` with `g` a
    /// proper primitive factor of the modulus when `a` is a zero divisor.
    pub fn inverse(&self, a: &[Rational]) -> Result<RatPoly, IntPolynomial> {
        // Extended Euclid tracking only the coefficient of `a`.
        let (mut r0, mut r1) = (self.modulus.clone(), trim(a.to_vec()));
        let (mut s0, mut s1): (RatPoly, RatPoly) = (Vec::new(), vec![Rational::one()]);
        while !r1.is_empty() {
            let (qt, r) = div_rem(&r0, &r1);
            let s = sub(&s0, &mul(&qt, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        if r0.len() > 1 {
            return Err(IntPolynomial::from_rationals(&r0).0.primitive());
        }
        let c = r0[0].recip().expect("gcd of nonzero polynomials is nonzero");
        Ok(self.reduce(&s0.iter().map(|x| x * &c).collect::<Vec<_>>()))
    }
}
