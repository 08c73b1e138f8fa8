//! The bitrace `btr(mu, nu) = sum_lambda chi^lambda_mu chi^lambda_nu` and
//! its contingency-matrix expansion, the regular character and the algebra
//! dimension.

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::arith::{LaurentPoly, Var};
use crate::characters::{CharacterEngine, Method};
use crate::error::{Error, Result};
use crate::par::{self, Execution, Memo};
use crate::shapes::{binomial, factorial, partitions_of, subcompositions, Composition, Partition};
use crate::symfunc::{inner_product, q_composition};

/// `(r)_q = (q-1)(q^{2r}-1)/(q+1)` for `r > 0`, `1` at `r = 0` and `0` below.
pub fn bracket(r: i64) -> LaurentPoly {
    static CACHE: OnceLock<Memo<i64, LaurentPoly>> = OnceLock::new();
    if r < 0 {
        return LaurentPoly::zero(Var::Q);
    }
    if r == 0 {
        return LaurentPoly::one(Var::Q);
    }
    let cache = CACHE.get_or_init(Memo::new);
    if let Some(v) = cache.get(&r) {
        return v;
    }
    let num = &LaurentPoly::x_minus_one_pow(Var::Q, 1)
        * &LaurentPoly::from_int_terms(Var::Q, &[(2 * r, 1), (0, -1)]);
    let v = num
        .exact_div(&LaurentPoly::from_int_terms(Var::Q, &[(1, 1), (0, 1)]))
        .expect("q + 1 divides q^{2r} - 1");
    cache.insert(r, v)
}

/// Nonnegative integer matrix of size `(l(mu)+1) x (l(nu)+1)` with a zero
/// corner, equal first-row and first-column sums, row sums `mu_i` and column
/// sums `nu_j` beyond the first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ContingencyMatrix {
    entries: Vec<Vec<usize>>,
}

impl ContingencyMatrix {
    pub fn entries(&self) -> &[Vec<usize>] {
        &self.entries
    }

    /// Border entries weigh `(1 - q^{-1}) q^m` when nonzero, interior entries
    /// `(m)_q`.
    pub fn weight(&self) -> LaurentPoly {
        let mut w = LaurentPoly::one(Var::Q);
        for (i, row) in self.entries.iter().enumerate() {
            for (j, &m) in row.iter().enumerate() {
                if i == 0 || j == 0 {
                    if m > 0 {
                        w = &w * &LaurentPoly::one_minus_inv_pow(Var::Q, 1).shift(m as i64);
                    }
                } else {
                    w = &w * &bracket(m as i64);
                }
            }
        }
        w
    }
}

fn nonzero(parts: &[usize]) -> Vec<usize> {
    parts.iter().copied().filter(|&x| x > 0).collect()
}

fn check_same_weight(mu: &[usize], nu: &[usize]) -> Result<()> {
    let (a, b) = (mu.iter().sum::<usize>(), nu.iter().sum::<usize>());
    if a != b {
        return Err(Error::WeightMismatch {
            left: format!("{:?}", mu),
            left_weight: a,
            right: format!("{:?}", nu),
            right_weight: b,
        });
    }
    Ok(())
}

/// Every way to fill rows with the given sums under column capacities.
fn fillings(rows: &[usize], cols: &[usize]) -> Vec<Vec<Vec<usize>>> {
    fn row_choices(total: usize, caps: &[usize], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let j = cur.len();
        if j == caps.len() {
            if total == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let rest: usize = caps[j + 1..].iter().sum();
        let lo = total.saturating_sub(rest);
        for x in lo..=caps[j].min(total) {
            cur.push(x);
            row_choices(total - x, caps, cur, out);
            cur.pop();
        }
    }
    if rows.is_empty() {
        return if cols.iter().all(|&c| c == 0) {
            vec![Vec::new()]
        } else {
            Vec::new()
        };
    }
    let mut out = Vec::new();
    let mut choices = Vec::new();
    row_choices(rows[0], cols, &mut Vec::new(), &mut choices);
    for first in choices {
        let left: Vec<usize> = cols.iter().zip(&first).map(|(c, x)| c - x).collect();
        for mut tail in fillings(&rows[1..], &left) {
            tail.insert(0, first.clone());
            out.push(tail);
        }
    }
    out
}

/// All contingency matrices for `(mu, nu)` in the order: shared border sum
/// `k`, first column, first row, interior.
pub fn contingency_matrices(mu: &[usize], nu: &[usize]) -> Vec<ContingencyMatrix> {
    let (mu, nu) = (nonzero(mu), nonzero(nu));
    let n: usize = mu.iter().sum();
    let mut out = Vec::new();
    for k in 0..=n {
        for tau in subcompositions(&mu, k) {
            for theta in subcompositions(&nu, k) {
                let rows: Vec<usize> = mu.iter().zip(tau.parts()).map(|(a, b)| a - b).collect();
                let cols: Vec<usize> = nu.iter().zip(theta.parts()).map(|(a, b)| a - b).collect();
                for inner in fillings(&rows, &cols) {
                    let mut entries = vec![std::iter::once(0)
                        .chain(theta.parts().iter().copied())
                        .collect::<Vec<_>>()];
                    for (i, row) in inner.into_iter().enumerate() {
                        entries.push(std::iter::once(tau.parts()[i]).chain(row).collect());
                    }
                    out.push(ContingencyMatrix { entries });
                }
            }
        }
    }
    out
}

/// `sum_M prod (m_ij)_q` over matrices with the given margins, filled row by
/// row; memoized on the remaining column capacities.
fn interior_sum(rows: &[usize], cols: &[usize]) -> LaurentPoly {
    fn rec(
        rows: &[usize],
        cols: Vec<usize>,
        memo: &mut HashMap<(usize, Vec<usize>), LaurentPoly>,
    ) -> LaurentPoly {
        if rows.is_empty() {
            return if cols.iter().all(|&c| c == 0) {
                LaurentPoly::one(Var::Q)
            } else {
                LaurentPoly::zero(Var::Q)
            };
        }
        let key = (rows.len(), cols.clone());
        if let Some(v) = memo.get(&key) {
            return v.clone();
        }
        let mut total = LaurentPoly::zero(Var::Q);
        let mut stack = vec![(0usize, rows[0], LaurentPoly::one(Var::Q), cols.clone())];
        while let Some((j, left, w, caps)) = stack.pop() {
            if j == caps.len() {
                if left == 0 {
                    total += &w * &rec(&rows[1..], caps, memo);
                }
                continue;
            }
            let room: usize = caps[j + 1..].iter().sum();
            for x in left.saturating_sub(room)..=caps[j].min(left) {
                let mut next = caps.clone();
                next[j] -= x;
                stack.push((j + 1, left - x, &w * &bracket(x as i64), next));
            }
        }
        memo.insert(key, total.clone());
        total
    }
    rec(rows, cols.to_vec(), &mut HashMap::new())
}

/// `btr(mu, nu)` by the contingency-matrix formula. Zero parts are dropped;
/// otherwise the given part order is used.
pub fn btr_matrix(mu: &[usize], nu: &[usize]) -> Result<LaurentPoly> {
    btr_matrix_with(mu, nu, Execution::default())
}

pub fn btr_matrix_with(mu: &[usize], nu: &[usize], exec: Execution) -> Result<LaurentPoly> {
    check_same_weight(mu, nu)?;
    let (mu, nu) = (nonzero(mu), nonzero(nu));
    let n: usize = mu.iter().sum();
    let mut borders: Vec<(usize, Composition, Composition)> = Vec::new();
    for k in 0..=n {
        for tau in subcompositions(&mu, k) {
            for theta in subcompositions(&nu, k) {
                borders.push((k, tau.clone(), theta));
            }
        }
    }
    let total = par::map_reduce(
        exec,
        &borders,
        |(k, tau, theta)| {
            let rows: Vec<usize> = mu.iter().zip(tau.parts()).map(|(a, b)| a - b).collect();
            let cols: Vec<usize> = nu.iter().zip(theta.parts()).map(|(a, b)| a - b).collect();
            let border =
                LaurentPoly::one_minus_inv_pow(Var::Q, (tau.len_nonzero() + theta.len_nonzero()) as u32)
                    .shift(2 * *k as i64);
            &border * &interior_sum(&rows, &cols)
        },
        || LaurentPoly::zero(Var::Q),
        |a, b| &a + &b,
    );
    total.exact_div(&LaurentPoly::x_minus_one_pow(
        Var::Q,
        (mu.len() + nu.len()) as u32,
    ))
}

/// `btr(mu, nu)` from its definition as a sum of character products.
pub fn btr_def(engine: &CharacterEngine, mu: &[usize], nu: &[usize], method: Method) -> Result<LaurentPoly> {
    check_same_weight(mu, nu)?;
    let mu = Partition::from_unsorted(mu.to_vec());
    let nu = Partition::from_unsorted(nu.to_vec());
    let mut total = LaurentPoly::zero(Var::Q);
    for k in 0..=mu.weight() {
        for lambda in partitions_of(k) {
            let method = if method.applies(&lambda) {
                method
            } else {
                Method::Mn
            };
            total += &engine.chi(&lambda, &mu, method)? * &engine.chi(&lambda, &nu, method)?;
        }
    }
    Ok(total)
}

/// `<q_alpha(q^{-1}), q_beta(q^{-1})>` by enumerating matrices with row sums
/// `alpha` and column sums `beta`.
pub fn hl_inner_matrix(alpha: &[usize], beta: &[usize]) -> Result<LaurentPoly> {
    check_same_weight(alpha, beta)?;
    let n: usize = alpha.iter().sum();
    Ok(interior_sum(&nonzero(alpha), &nonzero(beta)).shift(-2 * n as i64))
}

/// The same inner product computed in the power-sum basis, then `t -> q^{-1}`.
pub fn hl_inner_pbasis(alpha: &[usize], beta: &[usize]) -> Result<LaurentPoly> {
    check_same_weight(alpha, beta)?;
    let ip = inner_product(&q_composition(alpha, Var::T), &q_composition(beta, Var::T));
    Ok(ip.substitute_inverse())
}

/// Trace of the regular representation at `T_mu`.
pub fn regular_char(mu: &Partition) -> Result<LaurentPoly> {
    let n = mu.weight();
    let mc = mu.as_composition();
    let mut sum = LaurentPoly::zero(Var::Q);
    for i in 0..=n {
        for tau in subcompositions(mu.parts(), i) {
            let multinomial = factorial(i) / tau.parts().iter().map(|&t| factorial(t)).product::<u64>();
            let c = binomial(n, i) * multinomial;
            let w = LaurentPoly::one_minus_inv_pow(Var::Q, (mc.minus(&tau).len_nonzero() + i) as u32);
            sum += w.scale_int(c as i64);
        }
    }
    sum.shift(n as i64)
        .exact_div(&LaurentPoly::x_minus_one_pow(Var::Q, mu.len() as u32))
}

/// `dim R_n(q) = sum_i C(n,i)^2 i!`, the number of partial permutations.
pub fn dim_rn(n: usize) -> u128 {
    (0..=n)
        .map(|i| {
            let c = binomial(n, i) as u128;
            c * c * (1..=i as u128).product::<u128>()
        })
        .sum()
}
