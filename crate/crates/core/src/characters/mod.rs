//! Irreducible characters `chi^lambda_mu(q)` of the q-rook monoid algebra on
//! standard elements, computed by independent routes.
//!
//! All routes meet in the Frobenius normalization
//! `chi^lambda_mu(q) = q^{|mu|} / (q-1)^{l(mu)} * X^lambda_mu(q^{-1})`, where
//! `X^lambda_mu(t) = <q̂_mu(t), s_lambda>`.

mod compact;
mod iterative;
mod mn;
mod oracle;
mod table;

use std::fmt;
use std::str::FromStr;

pub use compact::{
    a_poly, a_poly_direct, b_poly, b_poly_direct, chi_hook, chi_special, chi_two_row, identity_suite_ab,
    perm_sums, rook_a_factor, AbFamily, IdentityCheck, PermSums, SpecialCase,
};
pub use table::{CharacterTable, TableOrder, TableSpec};

use crate::arith::{LaurentPoly, Var};
use crate::error::{Error, Result};
use crate::par::Memo;
use crate::shapes::{subcompositions, Partition};
use crate::symfunc::{classical_char, PExpansion};

/// Algorithm used to produce a character value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    /// Power-sum inner product against the Frobenius characteristic.
    Oracle,
    /// Vertical-strip recursion on the first row of `lambda`.
    Iterative,
    /// Murnaghan-Nakayama rule over generalized border strips.
    Mn,
    Hook,
    TwoRow,
    /// Trace of explicit seminormal matrices.
    Seminormal,
}

impl Method {
    pub const ALL: [Method; 6] = [
        Method::Oracle,
        Method::Iterative,
        Method::Mn,
        Method::Hook,
        Method::TwoRow,
        Method::Seminormal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Oracle => "oracle",
            Method::Iterative => "iterative",
            Method::Mn => "mn",
            Method::Hook => "hook",
            Method::TwoRow => "two_row",
            Method::Seminormal => "seminormal",
        }
    }

    /// Whether the method handles the pair at all (hook and two-row formulas
    /// only cover their shapes).
    pub fn applies(self, lambda: &Partition) -> bool {
        match self {
            Method::Hook => !lambda.is_empty() && lambda.is_hook(),
            Method::TwoRow => !lambda.is_empty() && lambda.is_two_row(),
            _ => true,
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s || (s == "two-row" && *m == Method::TwoRow))
            .ok_or_else(|| Error::Parse(format!("unknown method {:?}", s)))
    }
}

/// A character value together with its `X` polynomial and provenance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterValue {
    pub lambda: Partition,
    pub mu: Partition,
    /// `X^lambda_mu(t)`.
    pub x_poly: LaurentPoly,
    /// `chi^lambda_mu(q)`, an integer polynomial in `q`.
    pub chi: LaurentPoly,
    pub method: Method,
}

/// `q^{|mu|} / (q-1)^{l(mu)} * X(q^{-1})` with exact division.
pub fn frobenius_from_x(x: &LaurentPoly, mu: &Partition) -> Result<LaurentPoly> {
    let scaled = x.substitute_inverse().shift(mu.weight() as i64);
    scaled.exact_div(&LaurentPoly::x_minus_one_pow(Var::Q, mu.len() as u32))
}

/// Inverse of [`frobenius_from_x`]: `X(t) = (1-t)^{l} t^{n-l} chi(t^{-1})`.
pub fn x_from_chi(chi: &LaurentPoly, mu: &Partition) -> LaurentPoly {
    let l = mu.len();
    let back = chi.substitute_inverse().shift((mu.weight() - l) as i64);
    &back * &LaurentPoly::one_minus_x_pow(Var::T, l as u32)
}

/// `chi^∅_mu = q^{|mu| - l(mu)}`.
pub fn chi_empty(mu: &Partition) -> LaurentPoly {
    LaurentPoly::var_pow(Var::Q, (mu.weight() - mu.len()) as i64)
}

/// Value at `q = 1`: the rook-monoid character
/// `sum_{S} chi^lambda_{type(S)}` over sub-multisets `S` of the parts of `mu`
/// with total `|lambda|`. For `|lambda| = |mu|` this is the symmetric-group
/// character.
pub fn chi_at_one(lambda: &Partition, mu: &Partition) -> Result<i64> {
    let k = lambda.weight();
    if k > mu.weight() {
        return Err(weight_error(lambda, mu));
    }
    let parts = mu.parts();
    let mut total = 0;
    for mask in 0u32..(1u32 << parts.len()) {
        let chosen: Vec<usize> = (0..parts.len())
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| parts[i])
            .collect();
        if chosen.iter().sum::<usize>() == k {
            total += classical_char(lambda, &Partition::from_unsorted(chosen))?;
        }
    }
    Ok(total)
}

pub(crate) fn weight_error(lambda: &Partition, mu: &Partition) -> Error {
    Error::WeightMismatch {
        left: lambda.to_string(),
        left_weight: lambda.weight(),
        right: mu.to_string(),
        right_weight: mu.weight(),
    }
}

fn check_weights(lambda: &Partition, mu: &Partition) -> Result<()> {
    if lambda.weight() > mu.weight() {
        Err(weight_error(lambda, mu))
    } else {
        Ok(())
    }
}

/// Shared memo service for all character routes.
///
/// Every route is a pure function of `(lambda, mu)`; the caches only avoid
/// recomputation and are safe to share across worker threads.
#[derive(Default)]
pub struct CharacterEngine {
    iterative: Memo<(Partition, Partition), LaurentPoly>,
    mn: Memo<(Partition, Partition), LaurentPoly>,
    qhat: Memo<Partition, PExpansion>,
    ab: Memo<Partition, std::sync::Arc<AbFamily>>,
}

impl CharacterEngine {
    pub fn new() -> Self {
        Self::default()
    }

    /// `chi^lambda_mu(q)` by the requested method.
    pub fn chi(&self, lambda: &Partition, mu: &Partition, method: Method) -> Result<LaurentPoly> {
        check_weights(lambda, mu)?;
        match method {
            Method::Oracle => self.chi_oracle(lambda, mu),
            Method::Iterative => self.chi_iterative(lambda, mu),
            Method::Mn => Ok(self.chi_mn(lambda, mu)),
            Method::Hook => {
                if !Method::Hook.applies(lambda) {
                    return Err(Error::VariantMismatch(format!("{} is not a hook", lambda)));
                }
                let m = lambda.weight();
                chi_hook(lambda.part(0), m, mu, &self.ab_family(mu))
            }
            Method::TwoRow => {
                if !Method::TwoRow.applies(lambda) {
                    return Err(Error::VariantMismatch(format!(
                        "{} has more than two rows",
                        lambda
                    )));
                }
                chi_two_row(lambda.part(0), lambda.weight(), mu, &self.ab_family(mu))
            }
            Method::Seminormal => crate::seminormal::trace_standard_element(lambda, mu),
        }
    }

    /// Character value with `X` polynomial attached.
    pub fn value(&self, lambda: &Partition, mu: &Partition, method: Method) -> Result<CharacterValue> {
        let chi = self.chi(lambda, mu, method)?;
        debug_assert!(chi.is_ordinary() && chi.has_integer_coeffs());
        Ok(CharacterValue {
            lambda: lambda.clone(),
            mu: mu.clone(),
            x_poly: x_from_chi(&chi, mu),
            chi,
            method,
        })
    }

    /// Fast path used by `auto`: hook or two-row closed forms when the shape
    /// allows, otherwise the Murnaghan-Nakayama rule.
    pub fn chi_auto(&self, lambda: &Partition, mu: &Partition) -> Result<(LaurentPoly, Method)> {
        let method = if Method::Hook.applies(lambda) {
            Method::Hook
        } else if Method::TwoRow.applies(lambda) {
            Method::TwoRow
        } else {
            Method::Mn
        };
        Ok((self.chi(lambda, mu, method)?, method))
    }

    pub(crate) fn qhat_cached(&self, mu: &Partition) -> PExpansion {
        if let Some(v) = self.qhat.get(mu) {
            return v;
        }
        let v = crate::symfunc::qhat_mu(mu.parts(), Var::T);
        self.qhat.insert(mu.clone(), v)
    }

    /// Generating-function tables of `a_{ij}(mu)` and `b_{ij}(mu)`.
    pub fn ab_family(&self, mu: &Partition) -> std::sync::Arc<AbFamily> {
        if let Some(v) = self.ab.get(mu) {
            return v;
        }
        let v = std::sync::Arc::new(AbFamily::new(mu));
        self.ab.insert(mu.clone(), v)
    }

    pub fn cached_entries(&self) -> usize {
        self.iterative.len() + self.mn.len()
    }
}

/// Cells of `mu` minus a subcomposition, sorted back into a partition.
pub(crate) fn remainders(mu: &Partition, k: usize) -> impl Iterator<Item = (usize, Partition)> + '_ {
    let mc = mu.as_composition();
    subcompositions(mu.parts(), k).into_iter().map(move |tau| {
        let rest = mc.minus(&tau);
        (tau.len_nonzero(), rest.sort_to_partition())
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    pub(crate) fn q(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_int_terms(Var::Q, terms)
    }

    #[test]
    fn empty_lambda() {
        assert_eq!(chi_empty(&p(&[5])), q(&[(4, 1)]));
        assert_eq!(chi_empty(&p(&[1, 1, 1, 1, 1])), q(&[(0, 1)]));
        assert_eq!(chi_empty(&Partition::empty()), q(&[(0, 1)]));
    }

    #[test]
    fn frobenius_round_trip() {
        let chi = q(&[(3, 2), (2, -10), (1, 10), (0, -2)]);
        let mu = p(&[3, 2, 1]);
        let x = x_from_chi(&chi, &mu);
        assert_eq!(x.var(), Var::T);
        assert_eq!(frobenius_from_x(&x, &mu).unwrap(), chi);
    }

    #[test]
    fn at_one_reduces_to_classical() {
        assert_eq!(chi_at_one(&p(&[3, 1, 1]), &p(&[3, 2, 1])).unwrap(), 0);
        assert_eq!(chi_at_one(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), 2);
        assert_eq!(chi_at_one(&p(&[1]), &p(&[1, 1, 1, 1, 1])).unwrap(), 5);
        assert_eq!(chi_at_one(&Partition::empty(), &p(&[3, 2])).unwrap(), 1);
    }

    #[test]
    fn method_names_round_trip() {
        for m in Method::ALL {
            assert_eq!(m.name().parse::<Method>().unwrap(), m);
        }
        assert!("fast".parse::<Method>().is_err());
    }

    #[test]
    fn weight_precondition() {
        let e = CharacterEngine::new();
        for m in Method::ALL {
            assert!(matches!(
                e.chi(&p(&[2, 1]), &p(&[2]), m),
                Err(Error::WeightMismatch { .. })
            ));
        }
    }
}
