use std::collections::BTreeMap;

use super::{chi_empty, remainders, CharacterEngine};
use crate::arith::{LaurentPoly, RationalFunction, Var};
use crate::error::Result;
use crate::shapes::{vertical_strip_removals, Partition};

impl CharacterEngine {
    /// Recursion on the first row of `lambda`: strip a vertical strip from
    /// the remaining rows and a subcomposition from `mu`.
    ///
    /// Individual summands carry powers of `(q-1)` in the denominator; only
    /// the total is a polynomial.
    pub fn chi_iterative(&self, lambda: &Partition, mu: &Partition) -> Result<LaurentPoly> {
        super::check_weights(lambda, mu)?;
        if lambda.is_empty() {
            return Ok(chi_empty(mu));
        }
        let key = (lambda.clone(), mu.clone());
        if let Some(v) = self.iterative.get(&key) {
            return Ok(v);
        }
        let m = lambda.weight();
        let first = lambda.part(0);
        let l_mu = mu.len() as i64;
        // numerators grouped by the exponent of (q-1) they are divided by
        let mut buckets: BTreeMap<i64, LaurentPoly> = BTreeMap::new();
        for nu in vertical_strip_removals(&lambda.tail(1)) {
            let d = m - nu.weight();
            let sign = if (d + first).is_multiple_of(2) { 1 } else { -1 };
            for (tau_len, rest) in remainders(mu, d) {
                let inner = self.chi_iterative(&nu, &rest)?;
                if inner.is_zero() {
                    continue;
                }
                let e = l_mu - tau_len as i64 - rest.len() as i64;
                let term = inner.shift((d - tau_len) as i64).scale_int(sign);
                *buckets.entry(e).or_insert_with(|| LaurentPoly::zero(Var::Q)) += term;
            }
        }
        let mut total = RationalFunction::zero(Var::Q);
        for (e, num) in buckets {
            let term = if e >= 0 {
                RationalFunction::new(num, LaurentPoly::x_minus_one_pow(Var::Q, e as u32))?
            } else {
                RationalFunction::from_poly(&num * &LaurentPoly::x_minus_one_pow(Var::Q, (-e) as u32))
            };
            total = &total + &term;
        }
        let v = total.into_poly()?;
        Ok(self.iterative.insert(key, v))
    }
}
