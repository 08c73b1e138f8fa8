//! Exact scalars: rationals, Laurent polynomials with half-integer exponent
//! support, and reduced rational functions. No floating point is used anywhere.

mod format;
mod laurent;
mod ratfunc;

pub use format::parse_poly;
pub use laurent::LaurentPoly;
pub use ratfunc::{normalize as rf_normalize, RationalFunction};

use num_bigint::BigInt;

pub type Rational = num_rational::BigRational;

/// Tag naming the formal variable of a polynomial.
///
/// `Q` is the algebra parameter, `T` the Hall-Littlewood parameter and `S`
/// a square root of `q`. Half-integer exponents of `Q` are also available
/// directly, which is how the seminormal matrices carry `q^(1/2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    Q,
    T,
    S,
}

/// `a / b` as a reduced rational.
pub fn rat(a: i64, b: i64) -> Rational {
    Rational::new(BigInt::from(a), BigInt::from(b))
}

pub fn int(a: i64) -> Rational {
    Rational::from_integer(BigInt::from(a))
}

/// `a / b` with exact division; see [`LaurentPoly::exact_div`].
pub fn poly_exact_div(a: &LaurentPoly, b: &LaurentPoly) -> crate::Result<LaurentPoly> {
    a.exact_div(b)
}

/// `t^e -> q^{-e}`.
pub fn substitute_inverse(f: &LaurentPoly) -> LaurentPoly {
    f.substitute_inverse()
}

pub fn evaluate(f: &LaurentPoly, x: &Rational) -> crate::Result<Rational> {
    f.evaluate(x)
}
