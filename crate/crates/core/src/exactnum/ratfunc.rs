use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed};

use super::{IntPolynomial, NumError, Rational};

/// A quotient of integer polynomials in lowest terms.
///
/// The denominator is nonzero with a positive leading coefficient, and
/// numerator and denominator share neither a polynomial factor nor an
/// integer content factor.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunction {
    num: IntPolynomial,
    den: IntPolynomial,
}

impl RatFunction {
    pub fn new(num: IntPolynomial, den: IntPolynomial) -> Result<Self, NumError> {
        if den.is_zero() {
            return Err(NumError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = (
            num.div_exact(&g).expect("gcd divides numerator"),
            den.div_exact(&g).expect("gcd divides denominator"),
        );
        let mut c = num.content().gcd(&den.content());
        if den.leading().is_some_and(|l| l.is_negative()) {
            c = -c;
        }
        if !c.is_one() {
            num = IntPolynomial::new(num.coeffs().iter().map(|x| x / &c).collect());
            den = IntPolynomial::new(den.coeffs().iter().map(|x| x / &c).collect());
        }
        Ok(RatFunction { num, den })
    }

    pub fn zero() -> Self {
        RatFunction { num: IntPolynomial::zero(), den: IntPolynomial::constant(1) }
    }

    pub fn from_poly(p: IntPolynomial) -> Self {
        RatFunction { num: p, den: IntPolynomial::constant(1) }
    }

    pub fn from_rational(r: &Rational) -> Self {
        RatFunction {
            num: IntPolynomial::constant(r.numer().clone()),
            den: IntPolynomial::constant(r.denom().clone()),
        }
    }

    /// `a + b·t` with rational coefficients.
    pub fn linear(a: &Rational, b: &Rational) -> Self {
        let (p, s) = IntPolynomial::from_rationals(&[a.clone(), b.clone()]);
        Self::from_poly(p).mul(&Self::from_rational(&s))
    }

    pub fn numer(&self) -> &IntPolynomial {
        &self.num
    }

    pub fn denom(&self) -> &IntPolynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
        .expect("product of nonzero denominators")
    }

    pub fn neg(&self) -> Self {
        RatFunction { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(self.num.mul(&other.num), self.den.mul(&other.den))
            .expect("product of nonzero denominators")
    }

    pub fn div(&self, other: &Self) -> Result<Self, NumError> {
        if other.is_zero() {
            return Err(NumError::DivisionByZero);
        }
        Self::new(self.num.mul(&other.den), self.den.mul(&other.num))
    }

    /// Value at `t = at`, or `None` at a pole.
    pub fn eval(&self, at: &Rational) -> Option<Rational> {
        let d = self.den.eval(at);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(at) / d)
        }
    }
}

impl fmt::Debug for RatFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() && self.den.leading().is_some_and(|l| l.is_one()) {
            write!(f, "{:?}", self.num)
        } else {
            write!(f, "({:?})/({:?})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::q;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn reduces_to_lowest_terms() {
        // (2t^2 - 2t) / (-4t + 4) = -t/2
        let f = RatFunction::new(p(&[0, -2, 2]), p(&[4, -4])).unwrap();
        assert_eq!(f.numer(), &p(&[0, -1]));
        assert_eq!(f.denom(), &p(&[2]));
    }

    #[test]
    fn arithmetic_and_evaluation() {
        let a = RatFunction::new(p(&[1]), p(&[-1, 1])).unwrap(); // 1/(t-1)
        let b = RatFunction::new(p(&[1]), p(&[1, 1])).unwrap(); // 1/(t+1)
        let s = a.add(&b); // 2t/(t^2-1)
        assert_eq!(s.numer(), &p(&[0, 2]));
        assert_eq!(s.denom(), &p(&[-1, 0, 1]));
        assert_eq!(s.eval(&q(2, 1)), Some(q(4, 3)));
        assert_eq!(s.eval(&q(1, 1)), None);
        assert!(a.sub(&a).is_zero());
        assert_eq!(a.mul(&b).div(&a).unwrap(), b);
        assert!(a.div(&RatFunction::zero()).is_err());
        assert!(RatFunction::new(p(&[1]), IntPolynomial::zero()).is_err());
    }

    #[test]
    fn linear_entries() {
        let f = RatFunction::linear(&q(1, 2), &q(-3, 4));
        assert_eq!(f.eval(&q(2, 1)), Some(q(-1, 1)));
    }
}
