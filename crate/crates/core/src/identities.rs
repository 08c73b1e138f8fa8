//! Named identity checks over all partitions up to a weight, shared by the
//! test suites and the `verify` command.

use crate::arith::{LaurentPoly, Var};
use crate::characters::{identity_suite_ab, perm_sums, CharacterEngine, Method};
use crate::error::Result;
use crate::par::{self, Execution};
use crate::shapes::{
    gbs_decompose, gbs_weight, partitions_up_to, sub_partitions, vertical_strip_removals, Gbs, Partition,
    SkewShape,
};
use crate::symfunc::{
    adjoint_apply, h_adjoint_qhat_combinatorial, hn_expansion, p_mul, qhat_mu, qhat_via_q, qn_expansion,
    schur_in_p, PExpansion,
};

/// `q̂_lambda` built from modified power sums equals its expansion through
/// ordinary one-row functions.
pub fn qhat_relation(lambda: &Partition) -> bool {
    qhat_mu(lambda.parts(), Var::T) == qhat_via_q(lambda, Var::T)
}

/// `h_k^*` applied to `q̂_mu` agrees with the subcomposition sum.
pub fn h_adjoint_on_qhat(mu: &Partition, k: usize) -> bool {
    let lhs = adjoint_apply(&hn_expansion(k, Var::T), &qhat_mu(mu.parts(), Var::T));
    lhs == h_adjoint_qhat_combinatorial(mu, k, Var::T)
}

/// `s_lambda = sum_nu (-1)^{n-|nu|-lambda_1} h_{n-|nu|} s_nu` over `nu` with
/// `lambda^{[1]} / nu` a vertical strip.
pub fn schur_decomposition(lambda: &Partition) -> bool {
    if lambda.is_empty() {
        return true;
    }
    let n = lambda.weight();
    let mut rhs = PExpansion::zero(Var::T);
    for nu in vertical_strip_removals(&lambda.tail(1)) {
        let d = n - nu.weight();
        let sign = if (d + lambda.part(0)).is_multiple_of(2) {
            1
        } else {
            -1
        };
        let term = p_mul(&hn_expansion(d, Var::T), &schur_in_p(&nu, Var::T));
        rhs = rhs.add(&term.scale(&LaurentPoly::from_int(Var::T, sign)));
    }
    rhs == schur_in_p(lambda, Var::T)
}

/// `q_k^*(t) s_lambda = sum_mu t^{k-1} (1-t) wt(lambda/mu; t^{-1}) s_mu` over
/// `mu` with `lambda / mu` a GBS of size `k`.
pub fn mn_adjoint(lambda: &Partition, k: usize) -> bool {
    let lhs = adjoint_apply(&qn_expansion(k, Var::T), &schur_in_p(lambda, Var::T));
    let prefactor = &LaurentPoly::var_pow(Var::T, k as i64 - 1) * &LaurentPoly::one_minus_x_pow(Var::T, 1);
    let mut rhs = PExpansion::zero(Var::T);
    for mu in sub_partitions(lambda) {
        if lambda.weight() - mu.weight() != k {
            continue;
        }
        let skew = SkewShape::new(lambda.clone(), mu.clone()).expect("mu is inside lambda");
        if gbs_decompose(&skew) == Gbs::NotGbs {
            continue;
        }
        let w = gbs_weight(&skew, Var::T).expect("checked GBS").invert_var();
        rhs = rhs.add(&schur_in_p(&mu, Var::T).scale(&(&prefactor * &w)));
    }
    lhs == rhs
}

/// Outcome of one family of checks.
#[derive(Clone, Debug)]
pub struct SuiteResult {
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn run<T: Sync>(
    name: &'static str,
    exec: Execution,
    cases: &[T],
    check: impl Fn(&T) -> Result<Option<String>> + Sync + Send,
) -> SuiteResult {
    let outcomes = par::map(exec, cases, |c| match check(c) {
        Ok(v) => v,
        Err(e) => Some(e.to_string()),
    });
    SuiteResult {
        name,
        cases: cases.len(),
        failures: outcomes.into_iter().flatten().collect(),
    }
}

fn fail_if(ok: bool, what: impl FnOnce() -> String) -> Result<Option<String>> {
    Ok(if ok { None } else { Some(what()) })
}

/// All symmetric-function and `a`/`b` identities for partitions of weight at
/// most `n`.
pub fn identity_suites(engine: &CharacterEngine, n: usize, exec: Execution) -> Vec<SuiteResult> {
    let parts = partitions_up_to(n);
    let with_k: Vec<(Partition, usize)> = parts
        .iter()
        .flat_map(|p| (1..=p.weight()).map(move |k| (p.clone(), k)))
        .collect();
    let with_k0: Vec<(Partition, usize)> = parts
        .iter()
        .flat_map(|p| (0..=p.weight()).map(move |k| (p.clone(), k)))
        .collect();
    vec![
        run("modified one-row relation", exec, &parts, |p| {
            fail_if(qhat_relation(p), || p.to_string())
        }),
        run("h-adjoint on modified one-row", exec, &with_k0, |(p, k)| {
            fail_if(h_adjoint_on_qhat(p, *k), || format!("{} k={}", p, k))
        }),
        run("Schur first-row decomposition", exec, &parts, |p| {
            fail_if(schur_decomposition(p), || p.to_string())
        }),
        run("MN adjoint identity", exec, &with_k, |(p, k)| {
            fail_if(mn_adjoint(p, *k), || format!("{} k={}", p, k))
        }),
        run("a/b generating identities", exec, &parts, |p| {
            let bad: Vec<&str> = identity_suite_ab(p)
                .into_iter()
                .filter(|c| !c.holds())
                .map(|c| c.name)
                .collect();
            fail_if(bad.is_empty(), || format!("{}: {}", p, bad.join(", ")))
        }),
        run("hook and two-row sums", exec, &parts, |p| {
            let s = perm_sums(engine, p, Method::Mn)?;
            fail_if(s.holds(), || format!("{}: {:?}", p, s))
        }),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn single_cases() {
        assert!(qhat_relation(&p(&[2, 1])));
        assert!(h_adjoint_on_qhat(&p(&[2, 1]), 2));
        assert!(schur_decomposition(&p(&[3, 2, 1])));
        assert!(mn_adjoint(&p(&[3, 1]), 2));
    }

    #[test]
    fn suites_small() {
        let e = CharacterEngine::new();
        for s in identity_suites(&e, 4, Execution::Parallel) {
            assert!(s.passed(), "{}: {:?}", s.name, s.failures);
            assert!(s.cases > 0);
        }
    }
}
