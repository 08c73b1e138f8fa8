use super::{chi_empty, frobenius_from_x, CharacterEngine};
use crate::arith::{LaurentPoly, Var};
use crate::error::Result;
use crate::shapes::Partition;
use crate::symfunc::{inner_product, schur_in_p};

impl CharacterEngine {
    /// `X^lambda_mu(t) = <q̂_mu(t), s_lambda>` in the power-sum basis.
    pub fn x_oracle(&self, lambda: &Partition, mu: &Partition) -> LaurentPoly {
        let qhat = self.qhat_cached(mu);
        inner_product(&qhat, &schur_in_p(lambda, Var::T))
    }

    /// Ground-truth route through the Frobenius characteristic.
    pub fn chi_oracle(&self, lambda: &Partition, mu: &Partition) -> Result<LaurentPoly> {
        super::check_weights(lambda, mu)?;
        if lambda.is_empty() {
            return Ok(chi_empty(mu));
        }
        frobenius_from_x(&self.x_oracle(lambda, mu), mu)
    }
}
