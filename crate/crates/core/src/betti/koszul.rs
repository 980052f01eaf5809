//! Koszul homology on graded pieces.
//!
//! For a graded module `M` (either `R/I` or `I`), `beta_{i,j}(M)` is the
//! dimension of `H_i(K(x_1..x_n) (x) M)_j`, computed from the ranks of the
//! differentials `K_i (x) M_{j-i} -> K_{i-1} (x) M_{j-i+1}`.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use rayon::prelude::*;

use crate::field::{PrimeField, Scalar};
use crate::groebner::{reduce_by, GradedPieceBasis, GroebnerBasis};
use crate::linalg::{sparse_rank, SparseRow};
use crate::monomial::{binomial, Monomial};
use crate::monomial_ideal::MonomialIdeal;
use crate::poly::Polynomial;

/// Bases of the needed graded pieces and the multiplication maps
/// `x_k : M_a -> M_{a+1}` in those bases.
pub(crate) struct PieceTable {
    nvars: usize,
    field: PrimeField,
    dims: BTreeMap<u32, usize>,
    /// `mult[a][b][k]` = coordinates of `x_k * basis_a[b]` in `basis_{a+1}`
    mult: BTreeMap<u32, Vec<Vec<SparseRow>>>,
}

/// Degrees `a` for which the map `M_a -> M_{a+1}` is needed by the given cells.
pub(crate) fn needed_degrees(cells: &[(usize, u32)]) -> BTreeSet<u32> {
    let mut out = BTreeSet::new();
    for &(i, j) in cells {
        let a = j as i64 - i as i64;
        for d in [a - 1, a] {
            if d >= 0 {
                out.insert(d as u32);
            }
        }
    }
    out
}

impl PieceTable {
    /// Pieces of `R/I` spanned by standard monomials of `in(I)`.
    pub(crate) fn quotient(gb: &GroebnerBasis, degrees: &BTreeSet<u32>) -> Self {
        let ring = gb.ring();
        let n = ring.nvars();
        let init: MonomialIdeal = gb.initial_ideal();
        let monomial = gb.elements().iter().all(|g| g.is_monomial());
        let mut bases: BTreeMap<u32, (Vec<Monomial>, HashMap<Monomial, usize>)> = BTreeMap::new();
        let mut basis_of = |a: u32| {
            bases
                .entry(a)
                .or_insert_with(|| {
                    let b = init.standard_monomials(a);
                    let idx = b.iter().enumerate().map(|(i, m)| (*m, i)).collect();
                    (b, idx)
                })
                .clone()
        };
        let mut dims = BTreeMap::new();
        let mut mult = BTreeMap::new();
        for &a in degrees {
            let (src, _) = basis_of(a);
            let (tgt, tgt_idx) = basis_of(a + 1);
            dims.insert(a, src.len());
            dims.insert(a + 1, tgt.len());
            let mut cache: HashMap<Monomial, SparseRow> = HashMap::new();
            let table: Vec<Vec<SparseRow>> = src
                .iter()
                .map(|m| {
                    (0..n)
                        .map(|k| {
                            let xm = m.mul_var(k);
                            if let Some(&c) = tgt_idx.get(&xm) {
                                return vec![(c, Scalar::ONE)];
                            }
                            if monomial {
                                return Vec::new();
                            }
                            cache
                                .entry(xm)
                                .or_insert_with(|| {
                                    let nf = reduce_by(&Polynomial::monomial(ring, xm), gb.elements());
                                    let mut row: SparseRow =
                                        nf.terms().iter().map(|(c, t)| (tgt_idx[t], *c)).collect();
                                    row.sort_by_key(|e| e.0);
                                    row
                                })
                                .clone()
                        })
                        .collect()
                })
                .collect();
            mult.insert(a, table);
        }
        PieceTable {
            nvars: n,
            field: ring.field(),
            dims,
            mult,
        }
    }

    /// Pieces of `I` itself, in the reduced echelon bases of `I_a`.
    pub(crate) fn ideal(gb: &GroebnerBasis, degrees: &BTreeSet<u32>) -> Self {
        let ring = gb.ring();
        let n = ring.nvars();
        let mut pieces: BTreeMap<u32, GradedPieceBasis> = BTreeMap::new();
        for &a in degrees {
            for d in [a, a + 1] {
                pieces
                    .entry(d)
                    .or_insert_with(|| GradedPieceBasis::from_groebner_basis(gb, d));
            }
        }
        let dims = pieces.iter().map(|(d, p)| (*d, p.dimension())).collect();
        let mut mult = BTreeMap::new();
        for &a in degrees {
            let tgt = &pieces[&(a + 1)];
            let pivot: HashMap<Monomial, usize> =
                tgt.rows.iter().enumerate().map(|(i, r)| (r.lm(), i)).collect();
            let table = pieces[&a]
                .rows
                .iter()
                .map(|row| {
                    (0..n)
                        .map(|k| {
                            let xr = row.mul_term(Scalar::ONE, &Monomial::variable(n, k));
                            let mut out: SparseRow = xr
                                .terms()
                                .iter()
                                .filter_map(|(c, m)| pivot.get(m).map(|&i| (i, *c)))
                                .collect();
                            out.sort_by_key(|e| e.0);
                            out
                        })
                        .collect()
                })
                .collect();
            mult.insert(a, table);
        }
        PieceTable {
            nvars: n,
            field: ring.field(),
            dims,
            mult,
        }
    }

    fn dim(&self, a: i64) -> usize {
        if a < 0 {
            return 0;
        }
        *self.dims.get(&(a as u32)).expect("piece prepared")
    }

    /// Rank of `d_i` in internal degree `j`.
    fn rank(&self, i: usize, j: u32) -> usize {
        let n = self.nvars;
        let a = j as i64 - i as i64;
        if i == 0 || i > n || a < 0 {
            return 0;
        }
        let src_dim = self.dim(a);
        let tgt_dim = self.dim(a + 1);
        if src_dim == 0 || tgt_dim == 0 {
            return 0;
        }
        let mult = &self.mult[&(a as u32)];
        let sources = subsets(n, i);
        let targets = subsets(n, i - 1);
        let target_index: HashMap<u32, usize> =
            targets.iter().enumerate().map(|(k, &s)| (s, k)).collect();
        let field = self.field;
        let rows = sources.iter().flat_map(|&s| {
            let vars: Vec<usize> = (0..n).filter(|k| s & (1 << k) != 0).collect();
            let target_index = &target_index;
            (0..src_dim).map(move |b| {
                let mut row: SparseRow = Vec::new();
                for (pos, &k) in vars.iter().enumerate() {
                    let block = target_index[&(s & !(1 << k))] * tgt_dim;
                    let negate = pos % 2 == 1;
                    for &(c, v) in &mult[b][k] {
                        row.push((block + c, if negate { field.neg(v) } else { v }));
                    }
                }
                row.sort_by_key(|e| e.0);
                row
            })
        });
        sparse_rank(field, rows)
    }

    fn chain_dim(&self, i: usize, j: u32) -> usize {
        let a = j as i64 - i as i64;
        if i > self.nvars {
            return 0;
        }
        binomial(self.nvars as u64, i as u64) as usize * self.dim(a)
    }

    /// Betti numbers at the given cells; ranks are computed in parallel.
    pub(crate) fn betti_numbers(&self, cells: &[(usize, u32)]) -> BTreeMap<(usize, u32), u64> {
        let keys: BTreeSet<(usize, u32)> = cells
            .iter()
            .flat_map(|&(i, j)| [(i, j), (i + 1, j)])
            .collect();
        let keys: Vec<(usize, u32)> = keys.into_iter().collect();
        let ranks: HashMap<(usize, u32), usize> = keys
            .par_iter()
            .map(|&(i, j)| ((i, j), self.rank(i, j)))
            .collect();
        cells
            .iter()
            .map(|&(i, j)| {
                let v = self.chain_dim(i, j) - ranks[&(i, j)] - ranks[&(i + 1, j)];
                ((i, j), v as u64)
            })
            .collect()
    }
}

/// Bitmasks of the `k`-subsets of `0..n`, in increasing numeric order.
fn subsets(n: usize, k: usize) -> Vec<u32> {
    (0u32..(1 << n)).filter(|s| s.count_ones() as usize == k).collect()
}
