use std::fmt::Write as _;

use super::{CharacterEngine, CharacterValue, Method};
use crate::error::{Error, Mismatch, Result};
use crate::par::{self, Execution};
use crate::shapes::{partitions_of, Partition};

/// Row and column ordering of a character table.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum TableOrder {
    /// Rows by decreasing `|lambda|`, lexicographically increasing within a
    /// weight; columns lexicographically increasing. `(1^n)` comes first.
    #[default]
    Lex,
    /// Reverse-lexicographic within each weight; `(n)` comes first.
    RevLex,
}

/// What to compute.
#[derive(Clone, Debug)]
pub struct TableSpec {
    pub n: usize,
    /// Drop the rows with `|lambda| = n` (the Hecke-algebra block).
    pub below_top: bool,
    /// Methods to run; the first applicable one provides the stored value and
    /// every other applicable one is compared against it.
    pub methods: Vec<Method>,
    pub order: TableOrder,
    pub execution: Execution,
}

impl TableSpec {
    pub fn new(n: usize) -> Self {
        TableSpec {
            n,
            below_top: false,
            methods: vec![Method::Mn],
            order: TableOrder::default(),
            execution: Execution::default(),
        }
    }
}

/// `chi^lambda_mu(q)` for `lambda ⊢ k <= n` and every `mu ⊢ n`.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub n: usize,
    pub rows: Vec<Partition>,
    pub cols: Vec<Partition>,
    /// `cells[r][c]` is the value at `(rows[r], cols[c])`.
    pub cells: Vec<Vec<CharacterValue>>,
}

fn ordered(k: usize, order: TableOrder) -> Vec<Partition> {
    let mut ps = partitions_of(k);
    if order == TableOrder::Lex {
        ps.reverse();
    }
    ps
}

impl CharacterTable {
    pub fn build(engine: &CharacterEngine, spec: &TableSpec) -> Result<CharacterTable> {
        if spec.methods.is_empty() {
            return Err(Error::Domain("no methods requested".into()));
        }
        let top = if spec.below_top {
            spec.n.checked_sub(1)
        } else {
            Some(spec.n)
        };
        let rows: Vec<Partition> = match top {
            Some(top) => (0..=top).rev().flat_map(|k| ordered(k, spec.order)).collect(),
            None => Vec::new(),
        };
        let cols = ordered(spec.n, spec.order);
        let pairs: Vec<(usize, usize)> = (0..rows.len())
            .flat_map(|r| (0..cols.len()).map(move |c| (r, c)))
            .collect();
        let values = par::map(spec.execution, &pairs, |&(r, c)| {
            cell(engine, &rows[r], &cols[c], &spec.methods)
        });
        let mut cells: Vec<Vec<CharacterValue>> = Vec::with_capacity(rows.len());
        let mut it = values.into_iter();
        for _ in 0..rows.len() {
            let row: Result<Vec<_>> = it.by_ref().take(cols.len()).collect();
            cells.push(row?);
        }
        Ok(CharacterTable {
            n: spec.n,
            rows,
            cols,
            cells,
        })
    }

    pub fn get(&self, lambda: &Partition, mu: &Partition) -> Option<&CharacterValue> {
        let r = self.rows.iter().position(|x| x == lambda)?;
        let c = self.cols.iter().position(|x| x == mu)?;
        Some(&self.cells[r][c])
    }

    pub fn len(&self) -> usize {
        self.rows.len() * self.cols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("lambda");
        for mu in &self.cols {
            write!(out, ",\"{}\"", mu).unwrap();
        }
        out.push('\n');
        for (lambda, row) in self.rows.iter().zip(&self.cells) {
            write!(out, "\"{}\"", lambda).unwrap();
            for v in row {
                write!(out, ",{}", v.chi).unwrap();
            }
            out.push('\n');
        }
        out
    }

    pub fn to_latex(&self) -> String {
        let mut out = format!(
            "\\begin{{tabular}}{{|c|{}}}\n\\hline\n",
            "c|".repeat(self.cols.len())
        );
        out.push_str("$\\lambda\\backslash\\mu$");
        for mu in &self.cols {
            write!(out, " & ${}$", latex_partition(mu)).unwrap();
        }
        out.push_str("\\\\\n\\hline\n");
        for (lambda, row) in self.rows.iter().zip(&self.cells) {
            write!(out, "${}$", latex_partition(lambda)).unwrap();
            for v in row {
                write!(out, " & ${}$", latex_poly(&v.chi.to_string())).unwrap();
            }
            out.push_str("\\\\\n\\hline\n");
        }
        out.push_str("\\end{tabular}\n");
        out
    }
}

fn cell(
    engine: &CharacterEngine,
    lambda: &Partition,
    mu: &Partition,
    methods: &[Method],
) -> Result<CharacterValue> {
    let mut first: Option<CharacterValue> = None;
    for &m in methods.iter().filter(|m| m.applies(lambda)) {
        let v = engine.value(lambda, mu, m)?;
        match &first {
            None => first = Some(v),
            Some(f) if f.chi != v.chi => {
                return Err(Error::MethodMismatch(Box::new(Mismatch {
                    lambda: lambda.to_string(),
                    mu: mu.to_string(),
                    left: f.method.to_string(),
                    left_value: f.chi.to_string(),
                    right: m.to_string(),
                    right_value: v.chi.to_string(),
                })));
            }
            Some(_) => {}
        }
    }
    first
        .ok_or_else(|| Error::VariantMismatch(format!("none of the requested methods applies to {}", lambda)))
}

/// `(2^2 1)` style with exponents for repeated parts; `\emptyset` for the
/// empty partition.
pub fn latex_partition(p: &Partition) -> String {
    if p.is_empty() {
        return "\\emptyset".into();
    }
    let mut out = String::from("(");
    let parts = p.parts();
    let mut i = 0;
    while i < parts.len() {
        let r = parts[i];
        let mult = parts[i..].iter().take_while(|&&x| x == r).count();
        if mult == 1 {
            write!(out, "{}", r).unwrap();
        } else {
            write!(out, "{}^{{{}}}", r, mult).unwrap();
        }
        i += mult;
    }
    out.push(')');
    out
}

fn latex_poly(s: &str) -> String {
    let mut out = String::new();
    let mut chars = s.chars().peekable();
    while let Some(ch) = chars.next() {
        match ch {
            '*' => {}
            '^' => {
                let mut exp = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_ascii_digit() || c == '-' || c == '(' || c == ')' || c == '/' {
                        exp.push(c);
                        chars.next();
                    } else {
                        break;
                    }
                }
                let exp = exp.trim_start_matches('(').trim_end_matches(')');
                write!(out, "^{{{}}}", exp).unwrap();
            }
            _ => out.push(ch),
        }
    }
    out
}
