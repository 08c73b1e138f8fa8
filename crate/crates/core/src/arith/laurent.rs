use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Rational, Var};
use crate::error::{Error, Result};

/// Laurent polynomial in one tagged variable with rational coefficients.
///
/// Exponents are stored in half-integer units: key `k` stands for `x^(k/2)`.
/// Zero coefficients are never stored, so structural equality is equality of
/// polynomials.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    var: Var,
    terms: BTreeMap<i64, Rational>,
}

impl LaurentPoly {
    pub fn zero(var: Var) -> Self {
        LaurentPoly {
            var,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(var: Var) -> Self {
        Self::constant(var, Rational::one())
    }

    pub fn constant(var: Var, c: Rational) -> Self {
        Self::monomial_half(var, c, 0)
    }

    pub fn from_int(var: Var, c: i64) -> Self {
        Self::constant(var, Rational::from_integer(BigInt::from(c)))
    }

    /// `c * x^e` for an integer exponent `e`.
    pub fn monomial(var: Var, c: Rational, e: i64) -> Self {
        Self::monomial_half(var, c, 2 * e)
    }

    /// `c * x^(h/2)`.
    pub fn monomial_half(var: Var, c: Rational, h: i64) -> Self {
        let mut p = Self::zero(var);
        if !c.is_zero() {
            p.terms.insert(h, c);
        }
        p
    }

    /// `x^e`.
    pub fn var_pow(var: Var, e: i64) -> Self {
        Self::monomial(var, Rational::one(), e)
    }

    /// `x^(h/2)`.
    pub fn var_pow_half(var: Var, h: i64) -> Self {
        Self::monomial_half(var, Rational::one(), h)
    }

    /// Builds from `(integer exponent, integer coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_int_terms(var: Var, terms: &[(i64, i64)]) -> Self {
        let mut p = Self::zero(var);
        for &(e, c) in terms {
            p.add_term(2 * e, Rational::from_integer(BigInt::from(c)));
        }
        p
    }

    /// Builds from `(half-unit exponent, coefficient)` pairs.
    pub fn from_half_terms<I>(var: Var, terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, Rational)>,
    {
        let mut p = Self::zero(var);
        for (h, c) in terms {
            p.add_term(h, c);
        }
        p
    }

    pub fn var(&self) -> Var {
        self.var
    }

    /// Same coefficients under a different variable tag.
    pub fn retag(mut self, var: Var) -> Self {
        self.var = var;
        self
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending order as `(half-unit exponent, coefficient)`.
    pub fn half_terms(&self) -> impl DoubleEndedIterator<Item = (i64, &Rational)> + '_ {
        self.terms.iter().map(|(&h, c)| (h, c))
    }

    /// Coefficient of `x^(h/2)`.
    pub fn coeff_half(&self, h: i64) -> Rational {
        self.terms.get(&h).cloned().unwrap_or_else(Rational::zero)
    }

    /// Coefficient of `x^e`.
    pub fn coeff(&self, e: i64) -> Rational {
        self.coeff_half(2 * e)
    }

    /// Highest exponent in half units.
    pub fn max_half(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Lowest exponent in half units.
    pub fn min_half(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.terms.values().next_back()
    }

    pub fn has_half_exponents(&self) -> bool {
        self.terms.keys().any(|h| h % 2 != 0)
    }

    pub fn has_negative_exponents(&self) -> bool {
        self.terms.keys().any(|&h| h < 0)
    }

    /// Only nonnegative integer exponents.
    pub fn is_ordinary(&self) -> bool {
        self.terms.keys().all(|&h| h >= 0 && h % 2 == 0)
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&h| h == 0)
    }

    /// Integer-exponent terms in ascending order. Panics on half exponents.
    pub fn int_terms(&self) -> impl DoubleEndedIterator<Item = (i64, &Rational)> + '_ {
        self.terms.iter().map(|(&h, c)| {
            assert!(
                h % 2 == 0,
                "half-integer exponent where an integer one was required"
            );
            (h / 2, c)
        })
    }

    fn add_term(&mut self, h: i64, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(h) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_var(&self, other: &Self) {
        assert!(
            self.var == other.var,
            "{}",
            Error::VariableMismatch(self.var, other.var)
        );
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.var);
        }
        LaurentPoly {
            var: self.var,
            terms: self.terms.iter().map(|(&h, a)| (h, a * c)).collect(),
        }
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&Rational::from_integer(BigInt::from(c)))
    }

    /// Multiplies by `x^(h/2)`.
    pub fn shift_half(&self, h: i64) -> Self {
        LaurentPoly {
            var: self.var,
            terms: self.terms.iter().map(|(&k, c)| (k + h, c.clone())).collect(),
        }
    }

    /// Multiplies by `x^e`.
    pub fn shift(&self, e: i64) -> Self {
        self.shift_half(2 * e)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.var);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `x -> x^{-1}` keeping the tag.
    pub fn invert_var(&self) -> Self {
        LaurentPoly {
            var: self.var,
            terms: self.terms.iter().map(|(&h, c)| (-h, c.clone())).collect(),
        }
    }

    /// Substitutes `t -> q^{-1}` (or `q -> t^{-1}`), swapping the tag.
    ///
    /// Applying it twice returns the input.
    pub fn substitute_inverse(&self) -> Self {
        let var = match self.var {
            Var::T => Var::Q,
            Var::Q => Var::T,
            Var::S => Var::S,
        };
        self.invert_var().retag(var)
    }

    /// Exact value at a rational point.
    pub fn evaluate(&self, x: &Rational) -> Result<Rational> {
        if self.has_half_exponents() {
            return Err(Error::Domain(
                "evaluation of half-integer exponents is not supported".into(),
            ));
        }
        if x.is_zero() && self.has_negative_exponents() {
            return Err(Error::Domain("negative exponent evaluated at 0".into()));
        }
        let mut acc = Rational::zero();
        for (e, c) in self.int_terms() {
            let xe = if e >= 0 {
                num_traits::pow(x.clone(), e as usize)
            } else {
                num_traits::pow(x.recip(), (-e) as usize)
            };
            acc += c * xe;
        }
        Ok(acc)
    }

    /// Splits `self = x^(low/2) * P(x^(1/2))` with `P(0) != 0`, returning
    /// `low` and the dense coefficients of `P` (ascending, in half units).
    pub(crate) fn to_dense(&self) -> (i64, Vec<Rational>) {
        let Some(low) = self.min_half() else {
            return (0, Vec::new());
        };
        let high = self.max_half().unwrap();
        let mut v = vec![Rational::zero(); (high - low + 1) as usize];
        for (&h, c) in &self.terms {
            v[(h - low) as usize] = c.clone();
        }
        (low, v)
    }

    pub(crate) fn from_dense(var: Var, low: i64, coeffs: Vec<Rational>) -> Self {
        let mut p = Self::zero(var);
        for (i, c) in coeffs.into_iter().enumerate() {
            if !c.is_zero() {
                p.terms.insert(low + i as i64, c);
            }
        }
        p
    }

    /// Exact quotient `self / divisor`; fails when the division leaves a
    /// remainder in the Laurent ring.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        self.check_var(divisor);
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero(self.var));
        }
        let (la, a) = self.to_dense();
        let (lb, b) = divisor.to_dense();
        let (quot, rem) = dense_div_rem(&a, &b);
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::NonExactDivision {
                dividend: self.to_string(),
                divisor: divisor.to_string(),
            });
        }
        Ok(Self::from_dense(self.var, la - lb, quot))
    }

    /// `(x - 1)^k` in this variable.
    pub fn x_minus_one_pow(var: Var, k: u32) -> Self {
        LaurentPoly::from_int_terms(var, &[(1, 1), (0, -1)]).pow(k)
    }

    /// `(1 - x^{-1})^k`.
    pub fn one_minus_inv_pow(var: Var, k: u32) -> Self {
        LaurentPoly::from_int_terms(var, &[(0, 1), (-1, -1)]).pow(k)
    }

    /// `(1 - x)^k`.
    pub fn one_minus_x_pow(var: Var, k: u32) -> Self {
        LaurentPoly::from_int_terms(var, &[(0, 1), (1, -1)]).pow(k)
    }
}

/// Long division of dense ascending polynomials, returning (quotient, remainder).
pub(crate) fn dense_div_rem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let db = b.len() - 1;
    let lead = &b[db];
    if a.len() < b.len() {
        return (Vec::new(), a.to_vec());
    }
    let mut rem = a.to_vec();
    let mut quot = vec![Rational::zero(); a.len() - db];
    for i in (0..quot.len()).rev() {
        let c = &rem[i + db] / lead;
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            rem[i + j] -= &c * bj;
        }
        quot[i] = c;
    }
    rem.truncate(db);
    (quot, rem)
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({})", self)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        super::format::write_poly(f, self)
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -self.clone()
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        self.check_var(rhs);
        for (&h, c) in &rhs.terms {
            self.add_term(h, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        self.check_var(rhs);
        for (&h, c) in &rhs.terms {
            self.add_term(h, -c.clone());
        }
    }
}

impl MulAssign<&LaurentPoly> for LaurentPoly {
    fn mul_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self * rhs;
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.check_var(rhs);
        let mut out = LaurentPoly::zero(self.var);
        for (&h1, c1) in &self.terms {
            for (&h2, c2) in &rhs.terms {
                out.add_term(h1 + h2, c1 * c2);
            }
        }
        out
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: LaurentPoly) {
        *self += &rhs;
    }
}

impl SubAssign<LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: LaurentPoly) {
        *self -= &rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_int_terms(Var::Q, terms)
    }

    #[test]
    fn exact_division_factors() {
        let a = q(&[(2, 1), (0, -1)]);
        let b = q(&[(1, 1), (0, -1)]);
        assert_eq!(a.exact_div(&b).unwrap(), q(&[(1, 1), (0, 1)]));
    }

    #[test]
    fn exact_division_round_trip() {
        let f = q(&[(2, 2), (1, -8), (0, 2)]);
        let qm1 = q(&[(1, 1), (0, -1)]);
        let prod = &f * &qm1;
        assert_eq!(prod, q(&[(3, 2), (2, -10), (1, 10), (0, -2)]));
        assert_eq!(prod.exact_div(&qm1).unwrap(), f);
    }

    #[test]
    fn exact_division_remainder_fails() {
        let a = q(&[(2, 1), (0, 1)]);
        let b = q(&[(1, 1), (0, -1)]);
        assert!(matches!(a.exact_div(&b), Err(Error::NonExactDivision { .. })));
        assert_eq!(
            a.exact_div(&LaurentPoly::zero(Var::Q)),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn laurent_division_shifts() {
        // (q - q^{-1}) / (1 - q^{-2}) = q
        let a = q(&[(1, 1), (-1, -1)]);
        let b = q(&[(0, 1), (-2, -1)]);
        assert_eq!(a.exact_div(&b).unwrap(), q(&[(1, 1)]));
    }

    #[test]
    fn substitute_inverse_examples() {
        let f = LaurentPoly::from_int_terms(Var::T, &[(0, 1), (1, -1)]);
        assert_eq!(f.substitute_inverse(), q(&[(0, 1), (-1, -1)]));
        let t3 = LaurentPoly::var_pow(Var::T, 3);
        assert_eq!(t3.substitute_inverse(), q(&[(-3, 1)]));
        assert!(LaurentPoly::zero(Var::T).substitute_inverse().is_zero());
        assert_eq!(f.substitute_inverse().substitute_inverse(), f);
    }

    #[test]
    fn evaluate_examples() {
        let f = q(&[(3, 2), (2, -10), (1, 10), (0, -2)]);
        assert_eq!(f.evaluate(&Rational::one()).unwrap(), Rational::zero());
        let mono = LaurentPoly::var_pow(Var::Q, 5 - 2);
        assert_eq!(
            mono.evaluate(&Rational::from_integer(2.into())).unwrap(),
            Rational::from_integer(8.into())
        );
        let inv = q(&[(-1, 1)]);
        assert!(matches!(inv.evaluate(&Rational::zero()), Err(Error::Domain(_))));
        let half = LaurentPoly::var_pow_half(Var::Q, 1);
        assert!(matches!(half.evaluate(&Rational::one()), Err(Error::Domain(_))));
    }

    #[test]
    fn pow_and_flags() {
        let p = LaurentPoly::x_minus_one_pow(Var::Q, 3);
        assert_eq!(p, q(&[(3, 1), (2, -3), (1, 3), (0, -1)]));
        assert!(p.is_ordinary());
        assert!(!q(&[(-1, 1)]).is_ordinary());
        assert!(!LaurentPoly::var_pow_half(Var::Q, 3).is_ordinary());
        assert!(LaurentPoly::one(Var::Q).is_one());
    }

    #[test]
    #[should_panic]
    fn mixed_variables_panic() {
        let _ = LaurentPoly::one(Var::Q) + LaurentPoly::one(Var::T);
    }
}
