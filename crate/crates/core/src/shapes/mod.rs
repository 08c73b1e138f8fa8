//! Partitions, compositions and skew diagrams.

mod partition;
mod skew;

pub use partition::{
    all_subcompositions, binomial, conjugate, f_lambda, factorial, hook_lengths, partitions_of,
    partitions_up_to, sort_to_partition, subcompositions, z_lambda, Composition, Partition,
};
pub use skew::{
    gbs_decompose, gbs_weight, gbs_weight_k, is_vertical_strip, BorderStrip, Gbs, GbsDecomposition, SkewShape,
};

/// Partitions `nu ⊂ lambda` of every size, in a deterministic order.
pub fn sub_partitions(lambda: &Partition) -> Vec<Partition> {
    fn rec(lambda: &Partition, i: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if i == lambda.len() {
            out.push(Partition::from_unsorted(cur.clone()));
            return;
        }
        for v in (0..=lambda.part(i).min(max)).rev() {
            cur.push(v);
            rec(lambda, i + 1, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(lambda, 0, usize::MAX, &mut Vec::new(), &mut out);
    out
}

/// Partitions `nu ⊂ lambda` such that `lambda / nu` is a vertical strip.
pub fn vertical_strip_removals(lambda: &Partition) -> Vec<Partition> {
    sub_partitions(lambda)
        .into_iter()
        .filter(|nu| (0..lambda.len()).all(|i| lambda.part(i) - nu.part(i) <= 1))
        .collect()
}
