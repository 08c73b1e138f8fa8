use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Integer partition: weakly decreasing positive parts. The empty partition
/// is the unique partition of 0.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

/// Composition with zeros allowed. Its length `l` counts only nonzero parts,
/// matching how the weight formulas use `l(tau)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition(Vec<usize>);

impl Partition {
    /// Validates parts; trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!(
                "{:?} is not a weakly decreasing sequence of positive integers",
                parts
            )));
        }
        Ok(Partition(parts))
    }

    /// Sorts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `(1^n)`.
    pub fn ones(n: usize) -> Self {
        Partition(vec![1; n])
    }

    /// One row `(n)`, or the empty partition when `n = 0`.
    pub fn row(n: usize) -> Self {
        Self::from_unsorted(vec![n])
    }

    /// Hook `(k, 1^{m-k})` for `1 <= k <= m`.
    pub fn hook(k: usize, m: usize) -> Self {
        assert!(1 <= k && k <= m);
        let mut v = vec![k];
        v.extend(std::iter::repeat_n(1, m - k));
        Partition(v)
    }

    /// Two-row shape `(k, m-k)`.
    pub fn two_row(k: usize, m: usize) -> Self {
        assert!(m - k <= k);
        Self::from_unsorted(vec![k, m - k])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (0-based), zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Drops the first `i` parts.
    pub fn tail(&self, i: usize) -> Partition {
        Partition(self.0.iter().skip(i).copied().collect())
    }

    /// Multiplicity of the part `r`.
    pub fn multiplicity(&self, r: usize) -> usize {
        self.0.iter().filter(|&&p| p == r).count()
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.part(0);
        Partition(
            (1..=first)
                .map(|i| self.0.iter().filter(|&&p| p >= i).count())
                .collect(),
        )
    }

    /// Containment of Young diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    pub fn as_composition(&self) -> Composition {
        Composition(self.0.clone())
    }

    pub fn is_hook(&self) -> bool {
        self.0.iter().skip(1).all(|&p| p == 1)
    }

    pub fn is_two_row(&self) -> bool {
        self.len() <= 2
    }

    /// Multiset union, used for `p_lambda p_mu = p_{lambda u mu}`.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Partition::from_unsorted(v)
    }
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        Composition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len_nonzero(&self) -> usize {
        self.0.iter().filter(|&&p| p > 0).count()
    }

    /// Componentwise `self - other`; panics unless `other ⊂ self`.
    pub fn minus(&self, other: &Composition) -> Composition {
        assert_eq!(self.0.len(), other.0.len());
        Composition(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.checked_sub(*b).expect("composition not contained"))
                .collect(),
        )
    }

    pub fn sort_to_partition(&self) -> Partition {
        Partition::from_unsorted(self.0.clone())
    }
}

/// All partitions of `n` in reverse lexicographic order, `(n)` first.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Partitions of every weight `0..=n`, grouped by weight ascending.
pub fn partitions_up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

/// `z_lambda = prod_i i^{m_i} m_i!`.
pub fn z_lambda(lambda: &Partition) -> u64 {
    let mut z: u64 = 1;
    let parts = lambda.parts();
    let mut i = 0;
    while i < parts.len() {
        let r = parts[i];
        let mut m = 0u64;
        while i < parts.len() && parts[i] == r {
            m += 1;
            i += 1;
            z *= r as u64 * m;
        }
    }
    z
}

/// Compositions `tau` of length `l(mu)` with `0 <= tau_i <= mu_i` and
/// `sum tau_i = k`, in lexicographic order. Empty when `k > |mu|`.
pub fn subcompositions(mu: &[usize], k: usize) -> Vec<Composition> {
    fn rec(mu: &[usize], i: usize, rem: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if i == mu.len() {
            if rem == 0 {
                out.push(Composition(cur.clone()));
            }
            return;
        }
        let tail: usize = mu[i + 1..].iter().sum();
        let lo = rem.saturating_sub(tail);
        for t in lo..=mu[i].min(rem) {
            cur.push(t);
            rec(mu, i + 1, rem - t, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= mu.iter().sum() {
        rec(mu, 0, k, &mut Vec::with_capacity(mu.len()), &mut out);
    }
    out
}

/// All compositions `tau ⊂ mu` of every weight.
pub fn all_subcompositions(mu: &[usize]) -> Vec<Composition> {
    (0..=mu.iter().sum())
        .flat_map(|k| subcompositions(mu, k))
        .collect()
}

pub fn sort_to_partition(c: &Composition) -> Partition {
    c.sort_to_partition()
}

pub fn conjugate(lambda: &Partition) -> Partition {
    lambda.conjugate()
}

/// Hook lengths `h_{ij} = lambda_i + lambda'_j - i - j + 1`, row by row.
pub fn hook_lengths(lambda: &Partition) -> Vec<Vec<usize>> {
    let conj = lambda.conjugate();
    lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &row)| (0..row).map(|j| row - j + conj.part(j) - i - 1).collect())
        .collect()
}

/// Number of standard Young tableaux, `|lambda|! / prod h_{ij}`.
pub fn f_lambda(lambda: &Partition) -> u64 {
    let n = lambda.weight() as u128;
    let fact: u128 = (1..=n).product();
    let hooks: u128 = hook_lengths(lambda)
        .iter()
        .flatten()
        .map(|&h| h as u128)
        .product();
    (fact / hooks) as u64
}

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[usize]) -> fmt::Result {
    f.write_str("[")?;
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{}", p)?;
    }
    f.write_str("]")
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

fn parse_parts(s: &str) -> Result<Vec<usize>> {
    let t = s.trim();
    let inner = t
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("expected [a,b,...], got {:?}", s)))?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|e| Error::Parse(format!("bad part {:?} in {:?}: {}", p, s, e)))
        })
        .collect()
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_parts(s)?)
    }
}

impl FromStr for Composition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(Composition(parse_parts(s)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    /// Independent count: number of weakly decreasing sequences by brute
    /// force over all compositions of n into positive parts.
    fn brute_partition_count(n: usize) -> usize {
        fn comps(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for first in 1..=n {
                for mut rest in comps(n - first) {
                    rest.insert(0, first);
                    out.push(rest);
                }
            }
            out
        }
        comps(n)
            .into_iter()
            .filter(|c| c.windows(2).all(|w| w[0] >= w[1]))
            .count()
    }

    #[test]
    fn partition_counts() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(brute_partition_count(4), 5);
        assert_eq!(brute_partition_count(5), 7);
        assert_eq!(partitions_of(4).len(), 5);
        assert_eq!(partitions_of(5).len(), 7);
        for n in 0..=10 {
            assert_eq!(partitions_of(n).len(), brute_partition_count(n));
        }
        let p4 = partitions_of(4);
        assert_eq!(p4[0], p(&[4]));
        assert_eq!(p4[4], p(&[1, 1, 1, 1]));
        assert!(p4.windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[3, 1, 1]).conjugate(), p(&[3, 1, 1]));
        assert_eq!(p(&[4]).conjugate(), p(&[1, 1, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        for n in 0..=8 {
            for l in partitions_of(n) {
                assert_eq!(l.conjugate().conjugate(), l);
            }
        }
    }

    #[test]
    fn z_values() {
        assert_eq!(z_lambda(&p(&[1, 1, 1])), 6);
        assert_eq!(z_lambda(&p(&[3, 2, 1])), 6);
        assert_eq!(z_lambda(&p(&[2, 2])), 8);
        assert_eq!(z_lambda(&Partition::empty()), 1);
    }

    #[test]
    fn subcomposition_examples() {
        assert_eq!(
            subcompositions(&[3, 2, 1], 6),
            vec![Composition::new(vec![3, 2, 1])]
        );
        assert_eq!(
            subcompositions(&[2, 1], 1),
            vec![Composition::new(vec![0, 1]), Composition::new(vec![1, 0])]
        );
        // brute force over the box [0..3]x[0..2]x[0..1]
        let mut brute = 0;
        for a in 0..=3 {
            for b in 0..=2 {
                for c in 0..=1 {
                    if a + b + c == 3 {
                        brute += 1;
                    }
                }
            }
        }
        assert_eq!(brute, 6);
        assert_eq!(subcompositions(&[3, 2, 1], 3).len(), 6);
        assert!(subcompositions(&[2, 1], 4).is_empty());
        assert_eq!(subcompositions(&[], 0), vec![Composition::new(vec![])]);
    }

    #[test]
    fn subcomposition_count_matches_generating_product() {
        for n in 0..=8 {
            for mu in partitions_of(n) {
                // coefficients of prod (1 + x + ... + x^{mu_i})
                let mut gf = vec![1u64];
                for &m in mu.parts() {
                    let mut next = vec![0u64; gf.len() + m];
                    for (i, &c) in gf.iter().enumerate() {
                        for j in 0..=m {
                            next[i + j] += c;
                        }
                    }
                    gf = next;
                }
                for (k, &c) in gf.iter().enumerate() {
                    assert_eq!(subcompositions(mu.parts(), k).len() as u64, c, "{} {}", mu, k);
                }
            }
        }
    }

    #[test]
    fn sorting_compositions() {
        assert_eq!(Composition::new(vec![0, 2, 1]).sort_to_partition(), p(&[2, 1]));
        assert_eq!(
            Composition::new(vec![0, 0, 0]).sort_to_partition(),
            Partition::empty()
        );
        assert_eq!(Composition::new(vec![1, 3, 1]).sort_to_partition(), p(&[3, 1, 1]));
        assert_eq!(Composition::new(vec![0, 3, 1]).len_nonzero(), 2);
    }

    #[test]
    fn hook_formula() {
        assert_eq!(f_lambda(&p(&[3, 1])), 3);
        assert_eq!(binomial(5, 4) * f_lambda(&p(&[3, 1])), 15);
        assert_eq!(f_lambda(&p(&[6])), 1);
        assert_eq!(
            hook_lengths(&p(&[3, 1, 1])),
            vec![vec![5, 2, 1], vec![2], vec![1]]
        );
        assert_eq!(f_lambda(&p(&[3, 1, 1])), 6);
        for n in 0..=7 {
            let s: u64 = partitions_of(n).iter().map(|l| f_lambda(l).pow(2)).sum();
            assert_eq!(s, factorial(n));
        }
    }

    #[test]
    fn text_form() {
        assert_eq!(p(&[3, 2, 1]).to_string(), "[3,2,1]");
        assert_eq!(Partition::empty().to_string(), "[]");
        assert_eq!("[3, 2,1]".parse::<Partition>().unwrap(), p(&[3, 2, 1]));
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert!("[1,2]".parse::<Partition>().is_err());
        assert!("3,2".parse::<Partition>().is_err());
        assert!("[a]".parse::<Partition>().is_err());
        assert_eq!(
            "[0,2]".parse::<Composition>().unwrap(),
            Composition::new(vec![0, 2])
        );
    }
}
