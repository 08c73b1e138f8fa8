//! Symmetric functions in the power-sum basis with coefficients that are
//! polynomials in a parameter (usually `t`).

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;

use crate::arith::{int, rat, LaurentPoly, Rational, Var};
use crate::error::{Error, Result};
use crate::par::Memo;
use crate::shapes::{partitions_of, z_lambda, Composition, Partition};

/// Finite sum `sum_rho c_rho p_rho`. Terms of different degree may coexist.
#[derive(Clone, PartialEq, Eq)]
pub struct PExpansion {
    var: Var,
    terms: BTreeMap<Partition, LaurentPoly>,
}

impl PExpansion {
    pub fn zero(var: Var) -> Self {
        PExpansion {
            var,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(var: Var) -> Self {
        Self::basis(Partition::empty(), var)
    }

    /// `p_rho`.
    pub fn basis(rho: Partition, var: Var) -> Self {
        Self::term(rho, LaurentPoly::one(var))
    }

    pub fn term(rho: Partition, c: LaurentPoly) -> Self {
        let mut e = Self::zero(c.var());
        e.add_term(rho, c);
        e
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, rho: &Partition) -> LaurentPoly {
        self.terms
            .get(rho)
            .cloned()
            .unwrap_or_else(|| LaurentPoly::zero(self.var))
    }

    /// Largest weight of a partition carrying a nonzero coefficient.
    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().map(Partition::weight).max()
    }

    pub fn add_term(&mut self, rho: Partition, c: LaurentPoly) {
        assert_eq!(c.var(), self.var);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(rho) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &PExpansion) -> PExpansion {
        let mut out = self.clone();
        for (rho, c) in &other.terms {
            out.add_term(rho.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &PExpansion) -> PExpansion {
        self.add(&other.scale(&LaurentPoly::from_int(self.var, -1)))
    }

    pub fn scale(&self, c: &LaurentPoly) -> PExpansion {
        let mut out = Self::zero(self.var);
        if c.is_zero() {
            return out;
        }
        for (rho, a) in &self.terms {
            out.add_term(rho.clone(), a * c);
        }
        out
    }

    pub fn scale_rational(&self, c: &Rational) -> PExpansion {
        self.scale(&LaurentPoly::constant(self.var, c.clone()))
    }

    /// Product in the power-sum basis: `p_a p_b = p_{a u b}`.
    pub fn mul(&self, other: &PExpansion) -> PExpansion {
        let mut out = Self::zero(self.var);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.union(b), ca * cb);
            }
        }
        out
    }

    pub fn map_coeffs(&self, f: impl Fn(&LaurentPoly) -> LaurentPoly) -> PExpansion {
        let mut out: Option<PExpansion> = None;
        for (rho, c) in &self.terms {
            let v = f(c);
            out.get_or_insert_with(|| PExpansion::zero(v.var()))
                .add_term(rho.clone(), v);
        }
        out.unwrap_or_else(|| PExpansion::zero(self.var))
    }

    /// Coefficient polynomials evaluated at a rational point.
    pub fn specialize(&self, x: &Rational) -> Result<PExpansion> {
        let mut out = Self::zero(self.var);
        for (rho, c) in &self.terms {
            out.add_term(rho.clone(), LaurentPoly::constant(self.var, c.evaluate(x)?));
        }
        Ok(out)
    }

    /// True when every coefficient is an ordinary polynomial.
    pub fn has_polynomial_coeffs(&self) -> bool {
        self.terms.values().all(LaurentPoly::is_ordinary)
    }
}

impl fmt::Debug for PExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (rho, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({})*p{}", c, rho)?;
        }
        Ok(())
    }
}

pub fn p_mul(f: &PExpansion, g: &PExpansion) -> PExpansion {
    f.mul(g)
}

/// `prod_i (1 - x^{lambda_i}) / z_lambda`.
fn hl_coeff(lambda: &Partition, var: Var) -> LaurentPoly {
    let mut c = LaurentPoly::constant(var, rat(1, z_lambda(lambda) as i64));
    for &part in lambda.parts() {
        c = &c * &LaurentPoly::from_int_terms(var, &[(0, 1), (part as i64, -1)]);
    }
    c
}

/// One-row Hall-Littlewood function `q_n(x) = sum_{lambda ⊢ n} p_lambda / z_lambda(x)`.
pub fn qn_expansion(n: usize, var: Var) -> PExpansion {
    let mut out = PExpansion::zero(var);
    for lambda in partitions_of(n) {
        let c = hl_coeff(&lambda, var);
        assert!(c.is_ordinary(), "q_n coefficient left the polynomial ring");
        out.add_term(lambda, c);
    }
    out
}

/// `q_tau = prod_i q_{tau_i}` for a composition (zero parts contribute 1).
pub fn q_composition(tau: &[usize], var: Var) -> PExpansion {
    tau.iter()
        .fold(PExpansion::one(var), |acc, &k| acc.mul(&qn_expansion(k, var)))
}

/// `p̂_lambda = prod_i (1 + p_{lambda_i})` expanded multilinearly.
fn phat(lambda: &Partition, var: Var) -> PExpansion {
    lambda.parts().iter().fold(PExpansion::one(var), |acc, &r| {
        let factor = PExpansion::one(var).add(&PExpansion::basis(Partition::row(r), var));
        acc.mul(&factor)
    })
}

/// Modified one-row function `q̂_n = sum_{lambda ⊢ n} p̂_lambda / z_lambda(x)`.
pub fn qhat_expansion(n: usize, var: Var) -> PExpansion {
    let mut out = PExpansion::zero(var);
    for lambda in partitions_of(n) {
        let c = hl_coeff(&lambda, var);
        out = out.add(&phat(&lambda, var).scale(&c));
    }
    out
}

/// `q̂_mu = q̂_{mu_1} q̂_{mu_2} ...`.
pub fn qhat_mu(mu: &[usize], var: Var) -> PExpansion {
    mu.iter()
        .fold(PExpansion::one(var), |acc, &k| acc.mul(&qhat_expansion(k, var)))
}

/// Complete homogeneous `h_n = sum_{lambda ⊢ n} p_lambda / z_lambda`.
pub fn hn_expansion(n: usize, var: Var) -> PExpansion {
    let mut out = PExpansion::zero(var);
    for lambda in partitions_of(n) {
        let z = z_lambda(&lambda) as i64;
        out.add_term(lambda, LaurentPoly::constant(var, rat(1, z)));
    }
    out
}

fn beta_set(lambda: &Partition, len: usize) -> Vec<usize> {
    (0..len).map(|i| lambda.part(i) + (len - 1 - i)).collect()
}

fn from_beta_set(mut beta: Vec<usize>) -> Partition {
    beta.sort_unstable_by(|a, b| b.cmp(a));
    let len = beta.len();
    Partition::from_unsorted(beta.iter().enumerate().map(|(i, b)| b - (len - 1 - i)).collect())
}

/// Rim hooks of size `r` removable from `lambda`, with their signs
/// `(-1)^{height}`, via bead moves on the beta set.
pub fn rim_hook_removals(lambda: &Partition, r: usize) -> Vec<(Partition, i64)> {
    let len = lambda.len();
    let beta = beta_set(lambda, len);
    let mut out = Vec::new();
    for (idx, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let between = beta.iter().filter(|&&x| x > b - r && x < b).count();
        let mut nb = beta.clone();
        nb[idx] = b - r;
        let sign = if between % 2 == 0 { 1 } else { -1 };
        out.push((from_beta_set(nb), sign));
    }
    out
}

fn classical_cache() -> &'static Memo<(Partition, Partition), i64> {
    static CACHE: OnceLock<Memo<(Partition, Partition), i64>> = OnceLock::new();
    CACHE.get_or_init(Memo::new)
}

/// Symmetric-group character `chi^lambda_rho` by the classical
/// Murnaghan-Nakayama recursion over rim hooks.
pub fn classical_char(lambda: &Partition, rho: &Partition) -> Result<i64> {
    if lambda.weight() != rho.weight() {
        return Err(Error::WeightMismatch {
            left: lambda.to_string(),
            left_weight: lambda.weight(),
            right: rho.to_string(),
            right_weight: rho.weight(),
        });
    }
    Ok(classical_rec(lambda, rho))
}

fn classical_rec(lambda: &Partition, rho: &Partition) -> i64 {
    if rho.is_empty() {
        return 1;
    }
    let key = (lambda.clone(), rho.clone());
    if let Some(v) = classical_cache().get(&key) {
        return v;
    }
    let rest = rho.tail(1);
    let v = rim_hook_removals(lambda, rho.part(0))
        .iter()
        .map(|(nu, sign)| sign * classical_rec(nu, &rest))
        .sum();
    classical_cache().insert(key, v)
}

/// `s_lambda = sum_rho chi^lambda_rho / z_rho p_rho`.
pub fn schur_in_p(lambda: &Partition, var: Var) -> PExpansion {
    let mut out = PExpansion::zero(var);
    for rho in partitions_of(lambda.weight()) {
        let chi = classical_rec(lambda, &rho);
        if chi != 0 {
            let c = rat(chi, z_lambda(&rho) as i64);
            out.add_term(rho, LaurentPoly::constant(var, c));
        }
    }
    out
}

/// Hall inner product `<p_a, p_b> = delta_{ab} z_a`, bilinear in the coefficients.
pub fn inner_product(f: &PExpansion, g: &PExpansion) -> LaurentPoly {
    let mut acc = LaurentPoly::zero(f.var());
    for (rho, a) in f.terms() {
        if let Some(b) = g.terms.get(rho) {
            let z = LaurentPoly::constant(f.var(), int(z_lambda(rho) as i64));
            acc += &(&(a * b) * &z);
        }
    }
    acc
}

/// Applies the adjoint of multiplication by `g`: each `p_rho` acts as
/// `prod_i rho_i d/dp_{rho_i}`.
pub fn adjoint_apply(g: &PExpansion, f: &PExpansion) -> PExpansion {
    let mut out = PExpansion::zero(f.var());
    for (rho, gc) in g.terms() {
        for (lambda, fc) in f.terms() {
            if let Some((rest, coef)) = differentiate(rho, lambda) {
                let c = LaurentPoly::constant(f.var(), Rational::from_integer(coef));
                out.add_term(rest, &(gc * fc) * &c);
            }
        }
    }
    out
}

/// `p_rho^* p_lambda = coef * p_{lambda - rho}` when `rho ⊂ lambda` as multisets.
fn differentiate(rho: &Partition, lambda: &Partition) -> Option<(Partition, BigInt)> {
    let mut coef = BigInt::from(1);
    let mut rest = lambda.parts().to_vec();
    let mut part_counts: BTreeMap<usize, usize> = BTreeMap::new();
    for &r in rho.parts() {
        *part_counts.entry(r).or_default() += 1;
    }
    for (&r, &m) in &part_counts {
        let have = lambda.multiplicity(r);
        if have < m {
            return None;
        }
        for i in 0..m {
            coef *= BigInt::from(r) * BigInt::from(have - i);
        }
        for _ in 0..m {
            let pos = rest.iter().position(|&x| x == r).unwrap();
            rest.remove(pos);
        }
    }
    Some((Partition::from_unsorted(rest), coef))
}

/// `(1 - x)^{l(tau)}` as a coefficient.
pub(crate) fn one_minus_pow(var: Var, k: usize) -> LaurentPoly {
    LaurentPoly::one_minus_x_pow(var, k as u32)
}

/// Right-hand side of the skewing rule for `h_k^*` on `q̂_mu`:
/// `sum_{tau in C(mu;k)} (1-x)^{l(tau)} q̂_{mu - tau}`.
pub fn h_adjoint_qhat_combinatorial(mu: &Partition, k: usize, var: Var) -> PExpansion {
    let mut out = PExpansion::zero(var);
    let mc = mu.as_composition();
    for tau in crate::shapes::subcompositions(mu.parts(), k) {
        let rest = mc.minus(&tau);
        let term = qhat_mu(rest.parts(), var).scale(&one_minus_pow(var, tau.len_nonzero()));
        out = out.add(&term);
    }
    out
}

/// `sum_{tau ⊂ lambda} (1-x)^{l(tau)} q_{lambda - tau}`, the expansion of
/// `q̂_lambda` through ordinary one-row functions.
pub fn qhat_via_q(lambda: &Partition, var: Var) -> PExpansion {
    let mut out = PExpansion::zero(var);
    let lc = lambda.as_composition();
    for tau in crate::shapes::all_subcompositions(lambda.parts()) {
        let rest: Composition = lc.minus(&tau);
        out = out.add(&q_composition(rest.parts(), var).scale(&one_minus_pow(var, tau.len_nonzero())));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn t(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_int_terms(Var::T, terms)
    }

    fn pe(rho: &[usize], c: LaurentPoly) -> PExpansion {
        PExpansion::term(p(rho), c)
    }

    #[test]
    fn products() {
        let one = PExpansion::one(Var::T);
        let p1 = PExpansion::basis(p(&[1]), Var::T);
        assert_eq!(
            PExpansion::basis(p(&[2]), Var::T).mul(&p1),
            PExpansion::basis(p(&[2, 1]), Var::T)
        );
        let a = one.add(&p1);
        let sq = a.mul(&a);
        let expect = one
            .add(&p1.scale(&t(&[(0, 2)])))
            .add(&PExpansion::basis(p(&[1, 1]), Var::T));
        assert_eq!(sq, expect);
        assert_eq!(sq.mul(&one), sq);
    }

    #[test]
    fn one_row_functions() {
        assert_eq!(qn_expansion(0, Var::T), PExpansion::one(Var::T));
        assert_eq!(qn_expansion(1, Var::T), pe(&[1], t(&[(0, 1), (1, -1)])));
        let half = |terms: &[(i64, i64)]| t(terms).scale(&rat(1, 2));
        let q2 = pe(&[2], half(&[(0, 1), (2, -1)])).add(&pe(&[1, 1], half(&[(0, 1), (1, -2), (2, 1)])));
        assert_eq!(qn_expansion(2, Var::T), q2);
        assert_eq!(
            qhat_expansion(1, Var::T),
            PExpansion::one(Var::T)
                .add(&PExpansion::basis(p(&[1]), Var::T))
                .scale(&t(&[(0, 1), (1, -1)]))
        );
        assert_eq!(qhat_mu(&[], Var::T), PExpansion::one(Var::T));
    }

    #[test]
    fn one_row_specializations() {
        for n in 0..=8 {
            let q = qn_expansion(n, Var::T);
            assert!(q.has_polynomial_coeffs());
            assert_eq!(q.specialize(&int(0)).unwrap(), hn_expansion(n, Var::T));
            if n >= 1 {
                assert!(q.specialize(&int(1)).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn modified_one_row_relation() {
        for n in 0..=8 {
            let mut rhs = qn_expansion(n, Var::T);
            for i in 1..=n {
                rhs = rhs.add(&qn_expansion(n - i, Var::T).scale(&t(&[(0, 1), (1, -1)])));
            }
            assert_eq!(qhat_expansion(n, Var::T), rhs, "n = {}", n);
        }
    }

    #[test]
    fn classical_characters() {
        for rho in partitions_of(5) {
            assert_eq!(classical_char(&p(&[5]), &rho).unwrap(), 1);
        }
        assert_eq!(classical_char(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), 2);
        assert_eq!(classical_char(&p(&[3, 1, 1]), &p(&[3, 2])).unwrap(), 0);
        assert!(classical_char(&p(&[3, 1, 1]), &p(&[3, 2, 1])).is_err());
        assert_eq!(classical_char(&p(&[1, 1, 1]), &p(&[2, 1])).unwrap(), -1);
        assert!(matches!(
            classical_char(&p(&[2]), &p(&[1])),
            Err(Error::WeightMismatch { .. })
        ));
    }

    #[test]
    fn classical_first_orthogonality() {
        for n in 0..=6 {
            let parts = partitions_of(n);
            for a in &parts {
                for b in &parts {
                    let s: Rational = parts
                        .iter()
                        .map(|rho| {
                            rat(
                                classical_char(a, rho).unwrap() * classical_char(b, rho).unwrap(),
                                z_lambda(rho) as i64,
                            )
                        })
                        .fold(num_traits::Zero::zero(), |x, y| x + y);
                    assert_eq!(s, int((a == b) as i64));
                }
            }
        }
    }

    #[test]
    fn schur_expansions() {
        assert_eq!(schur_in_p(&p(&[1]), Var::T), PExpansion::basis(p(&[1]), Var::T));
        let h = |c: i64| LaurentPoly::constant(Var::T, rat(c, 2));
        assert_eq!(
            schur_in_p(&p(&[2]), Var::T),
            pe(&[2], h(1)).add(&pe(&[1, 1], h(1)))
        );
        assert_eq!(
            schur_in_p(&p(&[1, 1]), Var::T),
            pe(&[2], h(-1)).add(&pe(&[1, 1], h(1)))
        );
        assert_eq!(hn_expansion(2, Var::T), schur_in_p(&p(&[2]), Var::T));
        assert_eq!(hn_expansion(0, Var::T), PExpansion::one(Var::T));
        assert_eq!(hn_expansion(1, Var::T), PExpansion::basis(p(&[1]), Var::T));
    }

    #[test]
    fn inner_products() {
        let p2 = PExpansion::basis(p(&[2]), Var::T);
        assert_eq!(inner_product(&p2, &p2), t(&[(0, 2)]));
        let one = PExpansion::one(Var::T);
        assert_eq!(inner_product(&one, &one), t(&[(0, 1)]));
        for n in 0..=6 {
            for a in partitions_up_to_n(n) {
                for b in partitions_up_to_n(n) {
                    let v = inner_product(&schur_in_p(&a, Var::T), &schur_in_p(&b, Var::T));
                    let expect = if a == b {
                        t(&[(0, 1)])
                    } else {
                        LaurentPoly::zero(Var::T)
                    };
                    assert_eq!(v, expect);
                }
            }
        }
    }

    fn partitions_up_to_n(n: usize) -> Vec<Partition> {
        partitions_of(n)
    }

    #[test]
    fn adjoint_examples() {
        let p1 = PExpansion::basis(p(&[1]), Var::T);
        let p11 = PExpansion::basis(p(&[1, 1]), Var::T);
        assert_eq!(adjoint_apply(&p1, &p11), p1.scale(&t(&[(0, 2)])));
        let p2 = PExpansion::basis(p(&[2]), Var::T);
        assert!(adjoint_apply(&p2, &p11).is_zero());
    }

    #[test]
    fn h_adjoint_on_qhat() {
        for n in 0..=5 {
            for mu in partitions_of(n) {
                let qh = qhat_mu(mu.parts(), Var::T);
                for k in 0..=n + 1 {
                    let lhs = adjoint_apply(&hn_expansion(k, Var::T), &qh);
                    let rhs = h_adjoint_qhat_combinatorial(&mu, k, Var::T);
                    assert_eq!(lhs, rhs, "mu = {}, k = {}", mu, k);
                }
            }
        }
    }
}
