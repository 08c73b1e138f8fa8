//! Closed forms through the `a_{ij}` and `b_{ij}` polynomial families.

use std::collections::HashMap;

use super::{chi_empty, CharacterEngine, Method};
use crate::arith::{int, LaurentPoly, RationalFunction, Var};
use crate::error::{Error, Result};
use crate::shapes::{binomial, f_lambda, gbs_weight_k, subcompositions, Partition, SkewShape};

fn q_pow(e: i64) -> LaurentPoly {
    LaurentPoly::var_pow(Var::Q, e)
}

fn one_minus_inv(k: usize) -> LaurentPoly {
    LaurentPoly::one_minus_inv_pow(Var::Q, k as u32)
}

fn one_minus_q(k: usize) -> LaurentPoly {
    LaurentPoly::one_minus_x_pow(Var::Q, k as u32)
}

/// `q^{shift} * num / (q-1)^{l(mu)}`, which must divide exactly.
fn normalize_by_length(num: &LaurentPoly, shift: i64, mu: &Partition) -> Result<LaurentPoly> {
    num.shift(shift)
        .exact_div(&LaurentPoly::x_minus_one_pow(Var::Q, mu.len() as u32))
}

#[derive(Clone, Copy)]
enum Family {
    A,
    B,
}

impl Family {
    /// Weight of a part of `mu - tau - theta` of the given length.
    fn rest_factor(self, k: usize) -> LaurentPoly {
        match self {
            Family::A => one_minus_q(k),
            Family::B => one_minus_inv(k),
        }
    }
}

fn direct(mu: &Partition, i: usize, j: usize, family: Family) -> LaurentPoly {
    let mut total = LaurentPoly::zero(Var::Q);
    if i + j > mu.weight() {
        return total;
    }
    let mc = mu.as_composition();
    for tau in subcompositions(mu.parts(), i) {
        let rest = mc.minus(&tau);
        for theta in subcompositions(rest.parts(), j) {
            let left = rest.minus(&theta);
            let w = &one_minus_inv(tau.len_nonzero() + theta.len_nonzero())
                * &family.rest_factor(left.len_nonzero());
            total += w;
        }
    }
    total
}

/// `a_{ij}(mu)` by enumerating pairs of nested subcompositions.
pub fn a_poly_direct(mu: &Partition, i: usize, j: usize) -> LaurentPoly {
    direct(mu, i, j, Family::A)
}

/// `b_{ij}(mu)` by enumerating pairs of nested subcompositions.
pub fn b_poly_direct(mu: &Partition, i: usize, j: usize) -> LaurentPoly {
    direct(mu, i, j, Family::B)
}

/// `a_{ij}(mu)` read off the generating product.
pub fn a_poly(mu: &Partition, i: usize, j: usize) -> LaurentPoly {
    AbFamily::new(mu).a(i, j)
}

/// `b_{ij}(mu)` read off the generating product.
pub fn b_poly(mu: &Partition, i: usize, j: usize) -> LaurentPoly {
    AbFamily::new(mu).b(i, j)
}

/// All `a_{ij}(mu)` and `b_{ij}(mu)`, expanded from
/// `prod_k sum_{r+s <= mu_k} x^r y^s c(r) c(s) d(mu_k - r - s)` with
/// `c(0) = d(0) = 1`, `c(>0) = 1 - q^{-1}` and `d(>0)` equal to `1 - q` for
/// `a` and `1 - q^{-1}` for `b`.
#[derive(Clone, Debug)]
pub struct AbFamily {
    n: usize,
    a: HashMap<(usize, usize), LaurentPoly>,
    b: HashMap<(usize, usize), LaurentPoly>,
}

impl AbFamily {
    pub fn new(mu: &Partition) -> Self {
        AbFamily {
            n: mu.weight(),
            a: Self::expand(mu, Family::A),
            b: Self::expand(mu, Family::B),
        }
    }

    fn expand(mu: &Partition, family: Family) -> HashMap<(usize, usize), LaurentPoly> {
        let c = |r: usize| one_minus_inv(usize::from(r > 0));
        let mut acc: HashMap<(usize, usize), LaurentPoly> = HashMap::new();
        acc.insert((0, 0), LaurentPoly::one(Var::Q));
        for &part in mu.parts() {
            let mut factor = Vec::new();
            for r in 0..=part {
                for s in 0..=part - r {
                    let w = &(&c(r) * &c(s)) * &family.rest_factor(usize::from(part - r - s > 0));
                    factor.push(((r, s), w));
                }
            }
            let mut next: HashMap<(usize, usize), LaurentPoly> = HashMap::new();
            for ((i, j), v) in &acc {
                for ((r, s), w) in &factor {
                    *next
                        .entry((i + r, j + s))
                        .or_insert_with(|| LaurentPoly::zero(Var::Q)) += v * w;
                }
            }
            acc = next;
        }
        acc
    }

    pub fn weight(&self) -> usize {
        self.n
    }

    pub fn a(&self, i: usize, j: usize) -> LaurentPoly {
        self.a
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(|| LaurentPoly::zero(Var::Q))
    }

    pub fn b(&self, i: usize, j: usize) -> LaurentPoly {
        self.b
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(|| LaurentPoly::zero(Var::Q))
    }

    fn b_signed(&self, i: i64, j: i64) -> LaurentPoly {
        if i < 0 || j < 0 {
            LaurentPoly::zero(Var::Q)
        } else {
            self.b(i as usize, j as usize)
        }
    }
}

/// `chi^{(k,1^{m-k})}_mu`.
pub fn chi_hook(k: usize, m: usize, mu: &Partition, ab: &AbFamily) -> Result<LaurentPoly> {
    let n = mu.weight();
    if !(1 <= k && k <= m && m <= n) {
        return Err(Error::Domain(format!(
            "hook ({}, 1^{}) does not fit {}",
            k,
            m.saturating_sub(k),
            mu
        )));
    }
    let sign = if (m - k).is_multiple_of(2) { 1 } else { -1 };
    let mut sum = LaurentPoly::zero(Var::Q);
    for i in k..=m {
        sum += ab.a(i, n - m).shift(i as i64);
    }
    normalize_by_length(&sum.scale_int(sign), (n - m) as i64, mu)
}

/// `chi^{(k,m-k)}_mu`.
pub fn chi_two_row(k: usize, m: usize, mu: &Partition, ab: &AbFamily) -> Result<LaurentPoly> {
    let n = mu.weight();
    if !(k >= 1 && k <= m && m <= n && m - k <= k) {
        return Err(Error::Domain(format!(
            "({}, {}) is not a two-row shape inside {}",
            k,
            m.saturating_sub(k),
            mu
        )));
    }
    let (k, m) = (k as i64, m as i64);
    let diff = &ab.b_signed(k, m - k) - &ab.b_signed(k + 1, m - k - 1);
    normalize_by_length(&diff, n as i64, mu)
}

/// Shape families with a dedicated closed form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpecialCase {
    /// `mu = (1^n)`, any `lambda`.
    Ones,
    /// `lambda = (m)`.
    Row,
    /// `lambda = (1^m)`.
    Column,
    /// `mu = (n)`.
    Single,
}

/// Closed form for the special shape families.
pub fn chi_special(case: SpecialCase, lambda: &Partition, mu: &Partition) -> Result<LaurentPoly> {
    super::check_weights(lambda, mu)?;
    let n = mu.weight();
    let m = lambda.weight();
    let mismatch = |what: &str| Err(Error::VariantMismatch(format!("{} / {}: {}", lambda, mu, what)));
    match case {
        SpecialCase::Ones => {
            if *mu != Partition::ones(n) {
                return mismatch("mu is not a column of ones");
            }
            let c = binomial(n, m) * f_lambda(lambda);
            Ok(LaurentPoly::from_int(Var::Q, c as i64))
        }
        SpecialCase::Row => {
            if lambda.len() > 1 {
                return mismatch("lambda is not a single row");
            }
            let mc = mu.as_composition();
            let mut sum = LaurentPoly::zero(Var::Q);
            for tau in subcompositions(mu.parts(), m) {
                sum += one_minus_inv(tau.len_nonzero() + mc.minus(&tau).len_nonzero());
            }
            normalize_by_length(&sum, n as i64, mu)
        }
        SpecialCase::Column => {
            if lambda.parts().iter().any(|&r| r != 1) {
                return mismatch("lambda is not a single column");
            }
            let mc = mu.as_composition();
            let mut sum = LaurentPoly::zero(Var::Q);
            for tau in subcompositions(mu.parts(), n - m) {
                let rest = mc.minus(&tau).len_nonzero();
                let e = m as i64 - rest as i64;
                let sign = if e.rem_euclid(2) == 0 { 1 } else { -1 };
                let w = &one_minus_inv(tau.len_nonzero() + rest) * &q_pow(-e).scale_int(sign);
                sum += w;
            }
            normalize_by_length(&sum, n as i64, mu)
        }
        SpecialCase::Single => {
            if mu.len() != 1 {
                return mismatch("mu has more than one part");
            }
            // removing any nonempty inner shape leaves chi^nu_∅ = 0
            let skew = SkewShape::new(lambda.clone(), Partition::empty())?;
            match gbs_weight_k(&skew, n, Var::Q) {
                Ok(w) => Ok(w),
                Err(Error::NotGbs(_)) => Ok(LaurentPoly::zero(Var::Q)),
                Err(e) => Err(e),
            }
        }
    }
}

/// `A(m; q)` from the third `a`-identity, as a rational function.
pub fn rook_a_factor(m: usize) -> RationalFunction {
    let neg_q_pow = LaurentPoly::monomial(Var::Q, int(if m % 2 == 1 { 1 } else { -1 }), m as i64 - 1);
    let q_plus_one = LaurentPoly::from_int_terms(Var::Q, &[(1, 1), (0, 1)]);
    let first = RationalFunction::new(
        &(&neg_q_pow * &LaurentPoly::from_int_terms(Var::Q, &[(2, 1), (1, 6), (0, 1)]))
            + &LaurentPoly::from_int(Var::Q, 4),
        &q_plus_one * &q_plus_one,
    )
    .expect("nonzero denominator");
    let second = RationalFunction::new(
        (&neg_q_pow * &LaurentPoly::from_int_terms(Var::Q, &[(1, 1), (0, -1)])).scale_int(2 * m as i64),
        q_plus_one,
    )
    .expect("nonzero denominator");
    &first + &second
}

/// `3m - 3q^{-1}(m-1) + (m-1)(m-2)(1-q^{-1})^2 / 2`.
fn b_factor(m: usize) -> LaurentPoly {
    let m = m as i64;
    let lin = LaurentPoly::from_int_terms(Var::Q, &[(0, 3 * m), (-1, -3 * (m - 1))]);
    let quad = one_minus_inv(2).scale(&crate::arith::rat((m - 1) * (m - 2), 2));
    &lin + &quad
}

/// One identity of the `a`/`b` families, both sides as rational functions.
#[derive(Clone, Debug)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub lhs: RationalFunction,
    pub rhs: RationalFunction,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// The four evaluations of the `a`/`b` generating functions.
pub fn identity_suite_ab(mu: &Partition) -> Vec<IdentityCheck> {
    let n = mu.weight();
    let ab = AbFamily::new(mu);
    let q = LaurentPoly::var_pow(Var::Q, 1);
    let neg_q = q.scale_int(-1);
    let sum_a = |x: &LaurentPoly, y: &LaurentPoly| {
        let mut s = LaurentPoly::zero(Var::Q);
        for i in 0..=n {
            for j in 0..=n - i {
                s += &(&ab.a(i, j) * &x.pow(i as u32)) * &y.pow(j as u32);
            }
        }
        RationalFunction::from_poly(s)
    };
    let prod = |f: &dyn Fn(usize) -> RationalFunction| {
        mu.parts()
            .iter()
            .fold(RationalFunction::one(Var::Q), |acc, &m| &acc * &f(m))
    };
    let signed_pow =
        |m: usize| LaurentPoly::monomial(Var::Q, int(if m % 2 == 1 { 1 } else { -1 }), m as i64 - 1);

    let mut b_sum = LaurentPoly::zero(Var::Q);
    for i in 0..=n {
        for j in 0..=n - i {
            b_sum += ab.b(i, j);
        }
    }
    let b_rhs = mu
        .parts()
        .iter()
        .fold(one_minus_inv(mu.len()), |acc, &m| &acc * &b_factor(m));

    vec![
        IdentityCheck {
            name: "a(q, q)",
            lhs: sum_a(&q, &q),
            rhs: prod(&|m| {
                RationalFunction::from_poly(LaurentPoly::x_minus_one_pow(Var::Q, 1).shift(m as i64 - 1))
            }),
        },
        IdentityCheck {
            name: "a(-q, q)",
            lhs: sum_a(&neg_q, &q),
            rhs: prod(&|m| RationalFunction::from_poly(&one_minus_q(1) * &signed_pow(m))),
        },
        IdentityCheck {
            name: "a(-q, -q)",
            lhs: sum_a(&neg_q, &neg_q),
            rhs: prod(&|m| rook_a_factor(m).scale_poly(&one_minus_q(1))),
        },
        IdentityCheck {
            name: "b(1, 1)",
            lhs: RationalFunction::from_poly(b_sum),
            rhs: RationalFunction::from_poly(b_rhs),
        },
    ]
}

/// Both sides of the hook sum and the weighted two-row sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermSums {
    pub hook_sum: LaurentPoly,
    pub hook_closed: LaurentPoly,
    pub two_row_sum: LaurentPoly,
    pub two_row_closed: LaurentPoly,
}

impl PermSums {
    pub fn holds(&self) -> bool {
        self.hook_sum == self.hook_closed && self.two_row_sum == self.two_row_closed
    }
}

/// Sums characters over all hooks and, with weights `m - 2k + 1`, over all
/// two-row shapes `(m-k, k)` with `k <= floor(m/2)`, and evaluates the
/// corresponding closed products.
pub fn perm_sums(engine: &CharacterEngine, mu: &Partition, method: Method) -> Result<PermSums> {
    let n = mu.weight();
    let l = mu.len();
    let mut hook_sum = LaurentPoly::zero(Var::Q);
    let mut two_row_sum = LaurentPoly::zero(Var::Q);
    for m in 0..=n {
        for k in 0..m {
            hook_sum += engine.chi(&Partition::hook(m - k, m), mu, method)?;
        }
        for k in 0..=m / 2 {
            let lambda = Partition::two_row(m - k, m);
            let chi = if lambda.is_empty() {
                chi_empty(mu)
            } else {
                engine.chi(&lambda, mu, method)?
            };
            two_row_sum += chi.scale_int((m - 2 * k + 1) as i64);
        }
    }

    let a_prod = mu
        .parts()
        .iter()
        .fold(RationalFunction::one(Var::Q), |acc, &m| &acc * &rook_a_factor(m));
    let e = n - l;
    let tail = LaurentPoly::monomial(Var::Q, int(if e.is_multiple_of(2) { 1 } else { -1 }), e as i64);
    let sign = if (n + l).is_multiple_of(2) { 1 } else { -1 };
    let hook_closed = (&a_prod - &RationalFunction::from_poly(tail))
        .into_poly()?
        .scale(&crate::arith::rat(sign, 2));
    let two_row_closed = mu
        .parts()
        .iter()
        .fold(q_pow(e as i64), |acc, &m| &acc * &b_factor(m));
    Ok(PermSums {
        hook_sum,
        hook_closed,
        two_row_sum,
        two_row_closed,
    })
}
