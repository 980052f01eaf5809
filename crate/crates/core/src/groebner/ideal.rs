use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock};

use super::{buchberger, reduce_by, GroebnerBasis};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{sparse_rank, SparseRow};
use crate::monomial::{monomials_of_degree, Monomial};
use crate::monomial_ideal::MonomialIdeal;
use crate::poly::Polynomial;
use crate::ring::{check_same_ring, Ring};

/// An ideal given by generators, with its reduced Groebner basis computed on
/// first use. Clones share the cached basis.
#[derive(Debug, Clone)]
pub struct IdealHandle {
    ring: Ring,
    generators: Vec<Polynomial>,
    gb: Arc<OnceLock<GroebnerBasis>>,
}

impl IdealHandle {
    pub fn new(ring: &Ring, generators: Vec<Polynomial>) -> Result<Self> {
        for g in &generators {
            check_same_ring(g.ring(), ring)?;
        }
        let generators = generators.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(IdealHandle {
            ring: ring.clone(),
            generators,
            gb: Arc::new(OnceLock::new()),
        })
    }

    pub fn zero(ring: &Ring) -> Self {
        IdealHandle {
            ring: ring.clone(),
            generators: Vec::new(),
            gb: Arc::new(OnceLock::new()),
        }
    }

    pub fn from_monomial_ideal(m: &MonomialIdeal) -> Self {
        let gb = GroebnerBasis {
            ring: m.ring().clone(),
            elements: m.to_polynomials(),
            reduced: true,
        };
        IdealHandle {
            ring: m.ring().clone(),
            generators: m.to_polynomials(),
            gb: Arc::new(OnceLock::from(gb)),
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    /// The reduced Groebner basis, computed once.
    pub fn gb(&self) -> &GroebnerBasis {
        self.gb.get_or_init(|| {
            buchberger(&self.generators, &self.ring).expect("generators share the ring")
        })
    }

    pub fn initial_ideal(&self) -> MonomialIdeal {
        self.gb().initial_ideal()
    }

    pub fn is_zero(&self) -> bool {
        self.gb().is_zero_ideal()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.generators.iter().all(|g| g.is_homogeneous())
    }

    pub fn require_homogeneous(&self) -> Result<()> {
        if self.is_homogeneous() {
            Ok(())
        } else {
            Err(Error::NonHomogeneous)
        }
    }

    /// True when the ideal is generated by monomials.
    pub fn is_monomial(&self) -> bool {
        self.gb().elements().iter().all(|g| g.is_monomial())
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        self.gb().contains(f)
    }

    /// Echelon basis of the degree-`d` piece `I_d`.
    pub fn graded_piece(&self, d: u32) -> Result<GradedPieceBasis> {
        self.require_homogeneous()?;
        Ok(GradedPieceBasis::from_groebner_basis(self.gb(), d))
    }

    /// `I_{<d>}`: the ideal generated by the degree-`d` elements.
    pub fn component(&self, d: u32) -> Result<IdealHandle> {
        let piece = self.graded_piece(d)?;
        IdealHandle::new(&self.ring, piece.rows)
    }

    /// `I_{<=d}`: the ideal generated by the elements of degree at most `d`.
    pub fn up_to_degree(&self, d: u32) -> Result<IdealHandle> {
        self.require_homogeneous()?;
        let mut gens = Vec::new();
        for e in 0..=d {
            gens.extend(self.graded_piece(e)?.rows);
        }
        IdealHandle::new(&self.ring, gens)
    }

    /// `m * I` generated by `x_k * g` over the given generators.
    pub fn times_max_ideal(&self) -> IdealHandle {
        let n = self.ring.nvars();
        let gens = self
            .generators
            .iter()
            .flat_map(|g| (0..n).map(move |k| g.mul_term(Scalar::ONE, &Monomial::variable(n, k))))
            .collect();
        IdealHandle::new(&self.ring, gens).expect("same ring")
    }

    /// `m^d * I` generated by products of degree-`d` monomials with the generators.
    pub fn times_max_ideal_power(&self, d: u32) -> IdealHandle {
        let us = monomials_of_degree(self.ring.nvars(), d);
        let gens = self
            .generators
            .iter()
            .flat_map(|g| us.iter().map(move |u| g.mul_term(Scalar::ONE, u)))
            .collect();
        IdealHandle::new(&self.ring, gens).expect("same ring")
    }

    /// Degrees and counts of a minimal homogeneous generating set, from
    /// `dim_K (I / m I)_e = dim I_e - dim (m I_{e-1})`.
    pub fn minimal_generator_counts(&self) -> Result<BTreeMap<u32, usize>> {
        self.require_homogeneous()?;
        let mut out = BTreeMap::new();
        let gb = self.gb();
        let (Some(lo), Some(hi)) = (gb.min_degree(), gb.max_degree()) else {
            return Ok(out);
        };
        let n = self.ring.nvars();
        let mut prev: Option<GradedPieceBasis> = None;
        for e in lo..=hi {
            let piece = GradedPieceBasis::from_groebner_basis(gb, e);
            let spanned = match &prev {
                None => 0,
                Some(p) => {
                    let index: HashMap<Monomial, usize> = self
                        .ring
                        .monomials_of_degree(e)
                        .into_iter()
                        .enumerate()
                        .map(|(i, m)| (m, i))
                        .collect();
                    let rows: Vec<SparseRow> = p
                        .rows
                        .iter()
                        .flat_map(|r| (0..n).map(move |k| r.mul_term(Scalar::ONE, &Monomial::variable(n, k))))
                        .map(|f| to_sparse(&f, &index))
                        .collect();
                    sparse_rank(self.ring.field(), rows)
                }
            };
            let count = piece.rows.len() - spanned;
            if count > 0 {
                out.insert(e, count);
            }
            prev = Some(piece);
        }
        Ok(out)
    }

    /// `beta_0`: the size of a minimal generating set.
    pub fn minimal_generator_count(&self) -> Result<usize> {
        Ok(self.minimal_generator_counts()?.values().sum())
    }
}

fn to_sparse(f: &Polynomial, index: &HashMap<Monomial, usize>) -> SparseRow {
    let mut row: SparseRow = f.terms().iter().map(|(c, m)| (index[m], *c)).collect();
    row.sort_by_key(|e| e.0);
    row
}

/// True iff the two ideals have identical reduced Groebner bases.
pub fn ideal_equality(a: &IdealHandle, b: &IdealHandle) -> Result<bool> {
    check_same_ring(&a.ring, &b.ring)?;
    Ok(a.gb().elements() == b.gb().elements())
}

/// Reduced row echelon basis of `I_d`: one row per degree-`d` monomial of the
/// initial ideal, monic, with no row's leading monomial appearing in another row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedPieceBasis {
    pub degree: u32,
    pub rows: Vec<Polynomial>,
}

impl GradedPieceBasis {
    /// Echelonizes `{u * g : g in G, deg(u * g) = d}`.
    pub fn from_groebner_basis(gb: &GroebnerBasis, d: u32) -> Self {
        let ring = gb.ring().clone();
        let n = ring.nvars();
        let mut pivots: HashMap<Monomial, Polynomial> = HashMap::new();
        for g in gb.elements() {
            let Some(deg) = g.degree() else { continue };
            if deg > d {
                continue;
            }
            for u in monomials_of_degree(n, d - deg) {
                let mut row = g.mul_term(Scalar::ONE, &u);
                while !row.is_zero() {
                    match pivots.get(&row.lm()) {
                        Some(p) => {
                            let c = row.lc();
                            row = row.combine(ring.field().neg(c), &ring.one(), p);
                        }
                        None => break,
                    }
                }
                if !row.is_zero() {
                    let row = row.monic();
                    pivots.insert(row.lm(), row);
                }
            }
        }
        // back-substitute in increasing pivot order
        let mut order: Vec<Monomial> = pivots.keys().copied().collect();
        order.sort_by(|a, b| ring.compare(a, b));
        let mut done: Vec<Polynomial> = Vec::with_capacity(order.len());
        let mut done_index: HashMap<Monomial, usize> = HashMap::new();
        for lm in order {
            let row = pivots.remove(&lm).expect("pivot");
            let mut head = vec![row.terms()[0]];
            let mut tail = Polynomial::from_sorted_terms(&ring, row.terms()[1..].to_vec());
            let mut kept = Vec::new();
            while !tail.is_zero() {
                let (c, m) = tail.terms()[0];
                match done_index.get(&m) {
                    Some(&k) => {
                        tail = tail.combine(ring.field().neg(c), &ring.one(), &done[k]);
                    }
                    None => {
                        kept.push((c, m));
                        tail = Polynomial::from_sorted_terms(&ring, tail.terms()[1..].to_vec());
                    }
                }
            }
            head.extend(kept);
            done_index.insert(lm, done.len());
            done.push(Polynomial::from_sorted_terms(&ring, head));
        }
        done.reverse();
        GradedPieceBasis { degree: d, rows: done }
    }

    pub fn dimension(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

/// `m - NF(m)` for each degree-`d` monomial `m` of `in(I)`; the same reduced
/// echelon basis built from normal forms instead of elimination.
pub fn graded_piece_by_normal_forms(gb: &GroebnerBasis, d: u32) -> Vec<Polynomial> {
    let ring = gb.ring();
    let init = gb.initial_ideal();
    ring.monomials_of_degree(d)
        .into_iter()
        .filter(|m| init.contains(m))
        .map(|m| {
            let f = Polynomial::monomial(ring, m);
            let r = reduce_by(&f, gb.elements());
            f.sub(&r).expect("same ring")
        })
        .collect()
}
