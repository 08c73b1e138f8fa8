use super::CharacterEngine;
use crate::arith::{LaurentPoly, Var};
use crate::shapes::{gbs_weight_k, sub_partitions, Partition, SkewShape};

impl CharacterEngine {
    /// Murnaghan-Nakayama rule: remove a generalized border strip of size at
    /// most `mu_1` from `lambda` and recurse on the remaining parts of `mu`.
    pub fn chi_mn(&self, lambda: &Partition, mu: &Partition) -> LaurentPoly {
        if mu.is_empty() {
            return if lambda.is_empty() {
                LaurentPoly::one(Var::Q)
            } else {
                LaurentPoly::zero(Var::Q)
            };
        }
        let key = (lambda.clone(), mu.clone());
        if let Some(v) = self.mn.get(&key) {
            return v;
        }
        let k = mu.part(0);
        let rest = mu.tail(1);
        let mut total = LaurentPoly::zero(Var::Q);
        for nu in sub_partitions(lambda) {
            if nu.weight() > rest.weight() || lambda.weight() - nu.weight() > k {
                continue;
            }
            let skew = SkewShape::new(lambda.clone(), nu.clone()).expect("nu is inside lambda");
            // shapes containing a 2x2 block carry no weight
            let Ok(w) = gbs_weight_k(&skew, k, Var::Q) else {
                continue;
            };
            if w.is_zero() {
                continue;
            }
            let inner = self.chi_mn(&nu, &rest);
            if !inner.is_zero() {
                total += &w * &inner;
            }
        }
        self.mn.insert(key, total)
    }
}
