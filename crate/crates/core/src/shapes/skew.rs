use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use super::Partition;
use crate::arith::{LaurentPoly, Var};
use crate::error::{Error, Result};

/// Skew diagram `outer / inner` with `inner ⊂ outer`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

/// A connected skew diagram without 2x2 blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BorderStrip {
    /// Cells as `(row, column)`, 0-based, sorted.
    pub cells: Vec<(usize, usize)>,
    pub rows: usize,
    pub cols: usize,
}

/// Connected components of a generalized border strip.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GbsDecomposition {
    pub components: Vec<BorderStrip>,
}

/// Result of [`gbs_decompose`]: a skew shape either splits into border strips
/// or contains a 2x2 block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Gbs {
    Strips(GbsDecomposition),
    NotGbs,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::Domain(format!("{} is not contained in {}", inner, outer)));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.weight() - self.inner.weight()
    }

    /// Row-length differences `outer_i - inner_i`.
    pub fn row_lengths(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.outer.len()).map(|i| self.outer.part(i) - self.inner.part(i))
    }

    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for i in 0..self.outer.len() {
            for j in self.inner.part(i)..self.outer.part(i) {
                out.push((i, j));
            }
        }
        out
    }

    pub fn is_vertical_strip(&self) -> bool {
        self.row_lengths().all(|d| d <= 1)
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

pub fn is_vertical_strip(s: &SkewShape) -> bool {
    s.is_vertical_strip()
}

/// Splits a skew shape into edge-connected components, or reports `NotGbs`
/// when it contains a 2x2 block.
pub fn gbs_decompose(s: &SkewShape) -> Gbs {
    let cells: BTreeSet<(usize, usize)> = s.cells().into_iter().collect();
    for &(i, j) in &cells {
        if cells.contains(&(i + 1, j)) && cells.contains(&(i, j + 1)) && cells.contains(&(i + 1, j + 1)) {
            return Gbs::NotGbs;
        }
    }
    let mut seen = BTreeSet::new();
    let mut components = Vec::new();
    for &start in &cells {
        if !seen.insert(start) {
            continue;
        }
        let mut comp = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some((i, j)) = queue.pop_front() {
            let mut nbrs = vec![(i + 1, j), (i, j + 1)];
            if i > 0 {
                nbrs.push((i - 1, j));
            }
            if j > 0 {
                nbrs.push((i, j - 1));
            }
            for c in nbrs {
                if cells.contains(&c) && seen.insert(c) {
                    comp.push(c);
                    queue.push_back(c);
                }
            }
        }
        comp.sort_unstable();
        let rows = comp.iter().map(|c| c.0).collect::<BTreeSet<_>>().len();
        let cols = comp.iter().map(|c| c.1).collect::<BTreeSet<_>>().len();
        components.push(BorderStrip {
            cells: comp,
            rows,
            cols,
        });
    }
    Gbs::Strips(GbsDecomposition { components })
}

/// `wt(theta; x) = (x-1)^{m-1} prod_i (-1)^{r_i - 1} x^{c_i - 1}` over the `m`
/// border strips; `1` on the empty shape.
pub fn gbs_weight(s: &SkewShape, var: Var) -> Result<LaurentPoly> {
    let Gbs::Strips(dec) = gbs_decompose(s) else {
        return Err(Error::NotGbs(s.to_string()));
    };
    let m = dec.components.len();
    if m == 0 {
        return Ok(LaurentPoly::one(var));
    }
    let mut sign = 1i64;
    let mut exp = 0i64;
    for c in &dec.components {
        if (c.rows - 1) % 2 == 1 {
            sign = -sign;
        }
        exp += c.cols as i64 - 1;
    }
    let mono = LaurentPoly::monomial(var, crate::arith::int(sign), exp);
    Ok(&LaurentPoly::x_minus_one_pow(var, (m - 1) as u32) * &mono)
}

/// Weight of a GBS relative to a removal length `k`: the shape may be smaller
/// than `k`, with the missing cells contributing `x^{k-1}` (empty shape) or
/// `(x-1) x^{k-|s|-1}` (partial), and is weightless when larger.
pub fn gbs_weight_k(s: &SkewShape, k: usize, var: Var) -> Result<LaurentPoly> {
    assert!(k >= 1, "k must be positive");
    let size = s.size();
    if size > k {
        // still reject non-GBS shapes for consistency with the other cases
        if gbs_decompose(s) == Gbs::NotGbs {
            return Err(Error::NotGbs(s.to_string()));
        }
        return Ok(LaurentPoly::zero(var));
    }
    let wt = gbs_weight(s, var)?;
    let k = k as i64;
    let size = size as i64;
    Ok(if size == 0 {
        wt.shift(k - 1)
    } else if size < k {
        (&LaurentPoly::x_minus_one_pow(var, 1) * &wt).shift(k - size - 1)
    } else {
        wt
    })
}
