use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::laurent::dense_div_rem;
use super::{LaurentPoly, Rational, Var};
use crate::error::{Error, Result};

/// Quotient of two Laurent polynomials in canonical form.
///
/// Canonical form: the denominator is a monic ordinary polynomial (in the
/// half-unit variable) with nonzero constant term, every power of the variable
/// is carried by the numerator, and numerator and denominator are coprime.
/// Two equal rational functions therefore compare equal structurally.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFunction {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        normalize(num, den)
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        let var = p.var();
        RationalFunction {
            num: p,
            den: LaurentPoly::one(var),
        }
    }

    pub fn zero(var: Var) -> Self {
        Self::from_poly(LaurentPoly::zero(var))
    }

    pub fn one(var: Var) -> Self {
        Self::from_poly(LaurentPoly::one(var))
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn var(&self) -> Var {
        self.num.var()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// True when the value is a Laurent polynomial.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The Laurent polynomial this function equals, or `NonExactDivision`.
    pub fn into_poly(self) -> Result<LaurentPoly> {
        if self.den.is_one() {
            Ok(self.num)
        } else {
            Err(Error::NonExactDivision {
                dividend: self.num.to_string(),
                divisor: self.den.to_string(),
            })
        }
    }

    pub fn recip(&self) -> Result<Self> {
        normalize(self.den.clone(), self.num.clone())
    }

    pub fn scale_poly(&self, p: &LaurentPoly) -> Self {
        normalize(&self.num * p, self.den.clone()).expect("denominator is nonzero")
    }
}

fn monic_gcd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let (_, mut r) = dense_div_rem(&a, &b);
        trim(&mut r);
        a = b;
        b = r;
    }
    if let Some(lead) = a.last().cloned() {
        for c in a.iter_mut() {
            *c = &*c / &lead;
        }
    }
    a
}

fn trim(v: &mut Vec<Rational>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

/// Reduces `num / den` to canonical form.
pub fn normalize(num: LaurentPoly, den: LaurentPoly) -> Result<RationalFunction> {
    assert_eq!(num.var(), den.var(), "variable mismatch in rational function");
    let var = den.var();
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if num.is_zero() {
        return Ok(RationalFunction::zero(var));
    }
    let (ln, n) = num.to_dense();
    let (ld, d) = den.to_dense();
    let g = monic_gcd(&n, &d);
    let (mut n, _) = dense_div_rem(&n, &g);
    let (mut d, _) = dense_div_rem(&d, &g);
    trim(&mut n);
    trim(&mut d);
    let lead = d.last().cloned().expect("nonzero denominator");
    if !lead.is_one() {
        for c in n.iter_mut().chain(d.iter_mut()) {
            *c = &*c / &lead;
        }
    }
    Ok(RationalFunction {
        num: LaurentPoly::from_dense(var, ln - ld, n),
        den: LaurentPoly::from_dense(var, 0, d),
    })
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({})", self)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.den == rhs.den {
            return normalize(&self.num + &rhs.num, self.den.clone()).expect("nonzero");
        }
        normalize(&self.num * &rhs.den + &rhs.num * &self.den, &self.den * &rhs.den)
            .expect("product of nonzero denominators")
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        normalize(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero")
    }
}

impl Div for &RationalFunction {
    type Output = Result<RationalFunction>;
    fn div(self, rhs: &RationalFunction) -> Result<RationalFunction> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        normalize(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Add for RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: RationalFunction) -> RationalFunction {
        &self + &rhs
    }
}

impl Mul for RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: RationalFunction) -> RationalFunction {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_int_terms(Var::Q, terms)
    }

    #[test]
    fn normalize_examples() {
        let r = normalize(q(&[(2, 1), (0, -1)]), q(&[(1, 1), (0, -1)])).unwrap();
        assert_eq!(r.numerator(), &q(&[(1, 1), (0, 1)]));
        assert!(r.is_polynomial());

        let z = normalize(LaurentPoly::zero(Var::Q), q(&[(3, 1)])).unwrap();
        assert!(z.is_zero());
        assert!(z.is_polynomial());

        let qm1 = q(&[(1, 1), (0, -1)]);
        let r = normalize(&qm1 * &qm1, qm1.clone()).unwrap();
        assert_eq!(r.into_poly().unwrap(), qm1);

        assert_eq!(
            normalize(q(&[(0, 1)]), LaurentPoly::zero(Var::Q)),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn canonical_denominator_is_monic_with_constant_term() {
        // (q - 1) / (2q^3 - 2q^2) = 1/(2q^2)
        let r = normalize(q(&[(1, 1), (0, -1)]), q(&[(3, 2), (2, -2)])).unwrap();
        assert!(r.is_polynomial());
        assert_eq!(r.numerator().coeff(-2), Rational::new(1.into(), 2.into()));

        // (q - 1) / (1 - q^2) = -1/(q + 1)
        let r = normalize(q(&[(1, 1), (0, -1)]), q(&[(0, 1), (2, -1)])).unwrap();
        assert_eq!(r.numerator(), &q(&[(0, -1)]));
        assert_eq!(r.denominator(), &q(&[(1, 1), (0, 1)]));
    }

    #[test]
    fn arithmetic_cancels() {
        let a = normalize(q(&[(0, 1)]), q(&[(1, 1), (0, 1)])).unwrap();
        let b = normalize(q(&[(1, 1)]), q(&[(1, 1), (0, 1)])).unwrap();
        assert_eq!((&a + &b).into_poly().unwrap(), q(&[(0, 1)]));
        let prod = &a * &RationalFunction::from_poly(q(&[(1, 1), (0, 1)]));
        assert!(prod.is_polynomial());
        assert!((&a / &RationalFunction::zero(Var::Q)).is_err());
    }
}
