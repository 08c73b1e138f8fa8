//! Seminormal representations of the q-rook monoid algebra on n-standard
//! tableaux, used as an independent check on the character formulas.
//!
//! Matrix entries live in `Q(q^{1/2})`; the square root is carried as a half
//! exponent of `q`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::arith::{LaurentPoly, RationalFunction, Var};
use crate::error::{Error, Result};
use crate::shapes::Partition;

/// Filling of `shape` with distinct labels from `1..=n`, increasing along
/// rows and down columns.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NStandardTableau {
    rows: Vec<Vec<usize>>,
}

impl NStandardTableau {
    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::from_unsorted(self.rows.iter().map(Vec::len).collect())
    }

    /// Cell `(row, column)` holding `label`.
    pub fn position(&self, label: usize) -> Option<(usize, usize)> {
        self.rows
            .iter()
            .enumerate()
            .find_map(|(r, row)| row.iter().position(|&x| x == label).map(|c| (r, c)))
    }

    pub fn contains(&self, label: usize) -> bool {
        self.position(label).is_some()
    }

    /// Content `column - row` of the cell holding `label`.
    pub fn content(&self, label: usize) -> Option<i64> {
        self.position(label).map(|(r, c)| c as i64 - r as i64)
    }

    /// Exchanges the labels `i` and `i + 1` wherever they occur.
    pub fn swap(&self, i: usize) -> NStandardTableau {
        let rows = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&x| {
                        if x == i {
                            i + 1
                        } else if x == i + 1 {
                            i
                        } else {
                            x
                        }
                    })
                    .collect()
            })
            .collect();
        NStandardTableau { rows }
    }

    pub fn is_standard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]));
        let cols_ok = self
            .rows
            .windows(2)
            .all(|pair| pair[1].iter().enumerate().all(|(c, &x)| pair[0][c] < x));
        rows_ok && cols_ok
    }
}

impl fmt::Display for NStandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "[{}]", rows.join(" / "))
    }
}

fn standard_fillings(shape: &Partition) -> Vec<Vec<Vec<usize>>> {
    // place labels 1..=k one at a time into addable corners
    fn rec(
        shape: &[usize],
        k: usize,
        next: usize,
        cur: &mut Vec<Vec<usize>>,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        if next > k {
            out.push(cur.clone());
            return;
        }
        for r in 0..shape.len() {
            let len = cur[r].len();
            if len < shape[r] && (r == 0 || cur[r - 1].len() > len) {
                cur[r].push(next);
                rec(shape, k, next + 1, cur, out);
                cur[r].pop();
            }
        }
    }
    let mut out = Vec::new();
    let mut cur = vec![Vec::new(); shape.len()];
    rec(shape.parts(), shape.weight(), 1, &mut cur, &mut out);
    out
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..=n {
            if n - x + 1 < k - cur.len() {
                break;
            }
            cur.push(x);
            rec(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, n, k, &mut Vec::new(), &mut out);
    out
}

/// All n-standard tableaux of `shape`: label sets in lexicographic order,
/// then standard fillings in placement order.
pub fn enumerate_tableaux(shape: &Partition, n: usize) -> Result<Vec<NStandardTableau>> {
    let k = shape.weight();
    if k > n {
        return Err(Error::ShapeTooLarge {
            shape: shape.to_string(),
            cells: k,
            n,
        });
    }
    let fillings = standard_fillings(shape);
    let mut out = Vec::new();
    for labels in subsets(n, k) {
        for f in &fillings {
            let rows = f
                .iter()
                .map(|row| row.iter().map(|&x| labels[x - 1]).collect())
                .collect();
            out.push(NStandardTableau { rows });
        }
    }
    Ok(out)
}

/// Square matrix over `Q(q^{1/2})` stored by columns; column `j` lists the
/// nonzero coordinates of the image of basis vector `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepMatrix {
    cols: Vec<BTreeMap<usize, RationalFunction>>,
}

impl RepMatrix {
    pub fn zero(dim: usize) -> Self {
        RepMatrix {
            cols: vec![BTreeMap::new(); dim],
        }
    }

    pub fn scalar(dim: usize, c: &RationalFunction) -> Self {
        let mut m = Self::zero(dim);
        if !c.is_zero() {
            for j in 0..dim {
                m.cols[j].insert(j, c.clone());
            }
        }
        m
    }

    pub fn identity(dim: usize) -> Self {
        Self::scalar(dim, &RationalFunction::one(Var::Q))
    }

    pub fn dim(&self) -> usize {
        self.cols.len()
    }

    pub fn get(&self, row: usize, col: usize) -> RationalFunction {
        self.cols[col]
            .get(&row)
            .cloned()
            .unwrap_or_else(|| RationalFunction::zero(Var::Q))
    }

    fn add_entry(&mut self, row: usize, col: usize, v: RationalFunction) {
        if v.is_zero() {
            return;
        }
        let slot = self.cols[col]
            .entry(row)
            .or_insert_with(|| RationalFunction::zero(Var::Q));
        *slot = &*slot + &v;
        if slot.is_zero() {
            self.cols[col].remove(&row);
        }
    }

    pub fn mul(&self, rhs: &RepMatrix) -> RepMatrix {
        assert_eq!(self.dim(), rhs.dim());
        let mut out = RepMatrix::zero(self.dim());
        for (j, col) in rhs.cols.iter().enumerate() {
            for (k, b) in col {
                for (i, a) in &self.cols[*k] {
                    out.add_entry(*i, j, a * b);
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &RepMatrix) -> RepMatrix {
        let mut out = self.clone();
        for (j, col) in rhs.cols.iter().enumerate() {
            for (i, v) in col {
                out.add_entry(*i, j, v.clone());
            }
        }
        out
    }

    pub fn sub(&self, rhs: &RepMatrix) -> RepMatrix {
        let mut out = self.clone();
        for (j, col) in rhs.cols.iter().enumerate() {
            for (i, v) in col {
                out.add_entry(*i, j, -v);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(BTreeMap::is_empty)
    }

    pub fn trace(&self) -> RationalFunction {
        let mut t = RationalFunction::zero(Var::Q);
        for j in 0..self.dim() {
            if let Some(v) = self.cols[j].get(&j) {
                t = &t + v;
            }
        }
        t
    }
}

/// The tableau basis of `V^lambda` for `R_n(q)` with index lookup.
pub struct SeminormalModule {
    n: usize,
    basis: Vec<NStandardTableau>,
    index: HashMap<NStandardTableau, usize>,
}

fn rf(p: LaurentPoly) -> RationalFunction {
    RationalFunction::from_poly(p)
}

fn sqrt_q() -> RationalFunction {
    rf(LaurentPoly::var_pow_half(Var::Q, 1))
}

/// `(q - 1) / (1 - q^d)`, the diagonal coefficient for content difference `d`.
fn axial(d: i64) -> RationalFunction {
    let num = LaurentPoly::from_int_terms(Var::Q, &[(1, 1), (0, -1)]);
    let den = LaurentPoly::from_int_terms(Var::Q, &[(0, 1), (d, -1)]);
    RationalFunction::new(num, den).expect("contents differ for distinct cells")
}

impl SeminormalModule {
    pub fn new(shape: &Partition, n: usize) -> Result<Self> {
        let basis = enumerate_tableaux(shape, n)?;
        let index = basis.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
        Ok(SeminormalModule { n, basis, index })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[NStandardTableau] {
        &self.basis
    }

    fn check_generator(&self, i: usize, upper: usize) {
        assert!(
            (1..=upper).contains(&i),
            "generator index {} out of range 1..={}",
            i,
            upper
        );
    }

    /// Image of `v_L` under `T_i` as a list of `(basis index, coefficient)`.
    fn t_column(&self, i: usize, l: &NStandardTableau) -> Vec<(usize, RationalFunction)> {
        let here = self.index[l];
        let q = rf(LaurentPoly::var_pow(Var::Q, 1));
        match (l.content(i), l.content(i + 1)) {
            (Some(ci), Some(cj)) => {
                let a = axial(ci - cj);
                let mut out = vec![(here, a.clone())];
                let swapped = l.swap(i);
                if swapped.is_standard() {
                    out.push((self.index[&swapped], &RationalFunction::one(Var::Q) + &a));
                }
                out
            }
            (None, Some(_)) => vec![
                (here, rf(LaurentPoly::from_int_terms(Var::Q, &[(1, 1), (0, -1)]))),
                (self.index[&l.swap(i)], sqrt_q()),
            ],
            (Some(_), None) => vec![(self.index[&l.swap(i)], sqrt_q())],
            (None, None) => vec![(here, q)],
        }
    }

    /// Matrix of the generator `T_i`, `1 <= i < n`.
    pub fn generator(&self, i: usize) -> RepMatrix {
        self.check_generator(i, self.n.saturating_sub(1));
        let mut m = RepMatrix::zero(self.dim());
        for (j, l) in self.basis.iter().enumerate() {
            for (r, v) in self.t_column(i, l) {
                m.add_entry(r, j, v);
            }
        }
        m
    }

    /// Matrix of `P_i`, `1 <= i <= n`: keeps `v_L` when `i` is not a label of
    /// `L` and kills it otherwise.
    pub fn projection(&self, i: usize) -> RepMatrix {
        self.check_generator(i, self.n);
        let mut m = RepMatrix::zero(self.dim());
        for (j, l) in self.basis.iter().enumerate() {
            if !l.contains(i) {
                m.add_entry(j, j, RationalFunction::one(Var::Q));
            }
        }
        m
    }

    /// `T_i v` for a sparse vector.
    fn apply(&self, i: usize, v: &BTreeMap<usize, RationalFunction>) -> BTreeMap<usize, RationalFunction> {
        let mut out: BTreeMap<usize, RationalFunction> = BTreeMap::new();
        for (j, c) in v {
            for (r, w) in self.t_column(i, &self.basis[*j]) {
                let slot = out.entry(r).or_insert_with(|| RationalFunction::zero(Var::Q));
                *slot = &*slot + &(&w * c);
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// Trace of `T_{gamma_mu}`: on each block of consecutive indices of length
    /// `mu_j` the cycle `T_b T_{b+1} ... T_{b+mu_j-2}`.
    pub fn trace_standard(&self, mu: &Partition) -> Result<LaurentPoly> {
        if mu.weight() != self.n {
            return Err(Error::Domain(format!("{} is not a partition of {}", mu, self.n)));
        }
        let mut word = Vec::new();
        let mut start = 1;
        for &part in mu.parts() {
            word.extend(start..start + part - 1);
            start += part;
        }
        let mut total = RationalFunction::zero(Var::Q);
        for j in 0..self.dim() {
            let mut v = BTreeMap::from([(j, RationalFunction::one(Var::Q))]);
            // the rightmost factor acts first
            for &i in word.iter().rev() {
                v = self.apply(i, &v);
            }
            if let Some(c) = v.get(&j) {
                total = &total + c;
            }
        }
        if !total.is_polynomial() {
            return Err(Error::HalfPowerResidue(total.to_string()));
        }
        let poly = total.into_poly()?;
        if !poly.is_ordinary() {
            return Err(Error::HalfPowerResidue(poly.to_string()));
        }
        Ok(poly)
    }

    /// `(T_i - q)(T_i + 1) = 0`.
    pub fn quadratic_holds(&self, i: usize) -> bool {
        let t = self.generator(i);
        let q = rf(LaurentPoly::var_pow(Var::Q, 1));
        let left = t.sub(&RepMatrix::scalar(self.dim(), &q));
        let right = t.add(&RepMatrix::identity(self.dim()));
        left.mul(&right).is_zero()
    }

    /// `T_i T_{i+1} T_i = T_{i+1} T_i T_{i+1}`.
    pub fn braid_holds(&self, i: usize) -> bool {
        let a = self.generator(i);
        let b = self.generator(i + 1);
        a.mul(&b).mul(&a) == b.mul(&a).mul(&b)
    }

    /// `T_i T_j = T_j T_i`.
    pub fn commute(&self, i: usize, j: usize) -> bool {
        let a = self.generator(i);
        let b = self.generator(j);
        a.mul(&b) == b.mul(&a)
    }
}

/// `T_i` on `V^lambda` for `R_n(q)`.
pub fn gen_matrix_t(i: usize, shape: &Partition, n: usize) -> Result<RepMatrix> {
    Ok(SeminormalModule::new(shape, n)?.generator(i))
}

/// The trace of the standard element `T_mu`, `mu ⊢ n`, on `V^lambda`.
pub fn trace_standard_element(shape: &Partition, mu: &Partition) -> Result<LaurentPoly> {
    let n = mu.weight();
    if shape.weight() > n {
        return Err(crate::characters::weight_error(shape, mu));
    }
    SeminormalModule::new(shape, n)?.trace_standard(mu)
}

/// Quadratic, braid and far-commutation relations for every generator of
/// `V^lambda`.
pub fn relations_hold(shape: &Partition, n: usize) -> Result<bool> {
    let m = SeminormalModule::new(shape, n)?;
    for i in 1..n {
        if !m.quadratic_holds(i) {
            return Ok(false);
        }
        if i + 1 < n && !m.braid_holds(i) {
            return Ok(false);
        }
        for j in i + 2..n {
            if !m.commute(i, j) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
