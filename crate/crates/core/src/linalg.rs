//! Exact sparse Gaussian elimination over GF(p).

use std::collections::HashMap;

use crate::field::{PrimeField, Scalar};

/// Nonzero entries `(column, value)` sorted by column.
pub type SparseRow = Vec<(usize, Scalar)>;

/// `a + c * b` for sorted sparse rows.
fn axpy(field: PrimeField, a: &[(usize, Scalar)], c: Scalar, b: &[(usize, Scalar)]) -> SparseRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push((b[j].0, field.mul(c, b[j].1)));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let v = field.add(a[i].1, field.mul(c, b[j].1));
                if !v.is_zero() {
                    out.push((a[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend(b[j..].iter().map(|&(k, v)| (k, field.mul(c, v))));
    out
}

/// Incremental row echelon form, pivoting on the first nonzero column.
pub struct Echelon {
    field: PrimeField,
    pivots: HashMap<usize, SparseRow>,
}

impl Echelon {
    pub fn new(field: PrimeField) -> Self {
        Echelon {
            field,
            pivots: HashMap::new(),
        }
    }

    /// Reduces `row` against the stored pivots; stores it if independent.
    /// Returns true when the row increased the rank.
    pub fn insert(&mut self, mut row: SparseRow) -> bool {
        row.retain(|e| !e.1.is_zero());
        while let Some(&(col, v)) = row.first() {
            match self.pivots.get(&col) {
                Some(p) => {
                    row = axpy(self.field, &row, self.field.neg(v), p);
                }
                None => {
                    let inv = self.field.inv(v).expect("nonzero");
                    for e in row.iter_mut() {
                        e.1 = self.field.mul(e.1, inv);
                    }
                    self.pivots.insert(col, row);
                    return true;
                }
            }
        }
        false
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

pub fn sparse_rank(field: PrimeField, rows: impl IntoIterator<Item = SparseRow>) -> usize {
    let mut e = Echelon::new(field);
    for r in rows {
        e.insert(r);
    }
    e.rank()
}
