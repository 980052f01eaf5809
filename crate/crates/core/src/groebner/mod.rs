//! Normal forms, S-polynomials and Buchberger completion to reduced Groebner bases.

mod ideal;

pub use ideal::{graded_piece_by_normal_forms, ideal_equality, GradedPieceBasis, IdealHandle};

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::monomial::Monomial;
use crate::monomial_ideal::MonomialIdeal;
use crate::poly::{Polynomial, Term};
use crate::ring::{check_same_ring, Ring};

/// A Groebner basis tagged with its ring (and therefore its order).
///
/// When `reduced` is set, elements are monic, no leading monomial divides any
/// term of another element, and elements are sorted by decreasing leading
/// monomial. Such a basis is unique for the pair (ideal, order).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Ring,
    elements: Vec<Polynomial>,
    reduced: bool,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.elements.iter().any(|g| g.is_constant())
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements.iter().map(|g| g.lm()).collect()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.elements.iter().all(|g| g.is_homogeneous())
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.elements.iter().filter_map(|g| g.degree()).max()
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.elements.iter().filter_map(|g| g.degree()).min()
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(normal_form(f, self)?.is_zero())
    }

    pub fn initial_ideal(&self) -> MonomialIdeal {
        initial_ideal(self)
    }
}

/// Remainder of `f` on division by `divisors`, always rewriting the largest
/// reducible term with the first divisor (in sequence order) whose leading
/// monomial divides it.
pub(crate) fn reduce_by(f: &Polynomial, divisors: &[Polynomial]) -> Polynomial {
    let ring = f.ring().clone();
    let field = ring.field();
    let mut remainder: Vec<Term> = Vec::new();
    let mut cur = f.clone();
    let lms: Vec<(Monomial, Scalar)> = divisors.iter().map(|g| (g.lm(), g.lc())).collect();
    loop {
        // move irreducible leading terms into the remainder
        let terms = cur.terms();
        let mut k = 0;
        let mut hit = None;
        while k < terms.len() {
            let (c, m) = terms[k];
            if let Some(idx) = lms.iter().position(|(lm, _)| lm.divides(&m)) {
                hit = Some((k, idx, c, m));
                break;
            }
            remainder.push((c, m));
            k += 1;
        }
        let Some((k, idx, c, m)) = hit else { break };
        let (lm, lc) = lms[idx];
        let u = lm.quotient_of(&m).expect("divides");
        let coef = field.div(c, lc).expect("monic or nonzero lc");
        let rest = Polynomial::from_sorted_terms(&ring, terms[k..].to_vec());
        cur = rest.combine(field.neg(coef), &u, &divisors[idx]);
    }
    Polynomial::from_sorted_terms(&ring, remainder)
}

/// Fully reduced remainder of `f` modulo `g`.
pub fn normal_form(f: &Polynomial, g: &GroebnerBasis) -> Result<Polynomial> {
    check_same_ring(f.ring(), &g.ring)?;
    Ok(reduce_by(f, &g.elements))
}

/// `S(f, g) = (lcm / LT(f)) f - (lcm / LT(g)) g`.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    check_same_ring(f.ring(), g.ring())?;
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let field = f.ring().field();
    let lcm = f.lm().lcm(&g.lm());
    let uf = f.lm().quotient_of(&lcm).expect("lcm");
    let ug = g.lm().quotient_of(&lcm).expect("lcm");
    let cf = field.inv(f.lc()).expect("nonzero");
    let cg = field.inv(g.lc()).expect("nonzero");
    let left = f.mul_term(cf, &uf);
    Ok(left.combine(field.neg(cg), &ug, g))
}

/// Minimal generators of the initial ideal: the leading monomials of a reduced basis.
pub fn initial_ideal(g: &GroebnerBasis) -> MonomialIdeal {
    MonomialIdeal::minimalize(&g.ring, g.leading_monomials())
}

#[derive(Debug, Clone, Copy)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Reduced Groebner basis of the ideal generated by `gens`.
///
/// Pairs are selected by the normal strategy (smallest lcm in the ring order).
/// Pairs with coprime leading monomials are skipped, as are pairs `(i, j)` for
/// which some `k` has `lm(k) | lcm(i, j)` with `(i, k)` and `(j, k)` already
/// treated.
pub fn buchberger(gens: &[Polynomial], ring: &Ring) -> Result<GroebnerBasis> {
    for g in gens {
        check_same_ring(g.ring(), ring)?;
    }
    let mut basis: Vec<Polynomial> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();

    let unit = |ring: &Ring| GroebnerBasis {
        ring: ring.clone(),
        elements: vec![Polynomial::constant(ring, Scalar::ONE)],
        reduced: true,
    };

    let mut sorted: Vec<&Polynomial> = gens.iter().filter(|g| !g.is_zero()).collect();
    sorted.sort_by(|a, b| ring.compare(&a.lm(), &b.lm()));

    let add = |h: Polynomial, basis: &mut Vec<Polynomial>, pairs: &mut Vec<Pair>, pending: &mut HashSet<(usize, usize)>| {
        let h = h.monic();
        let k = basis.len();
        for (i, b) in basis.iter().enumerate() {
            pairs.push(Pair {
                i,
                j: k,
                lcm: b.lm().lcm(&h.lm()),
            });
            pending.insert((i, k));
        }
        basis.push(h);
    };

    for g in sorted {
        let h = reduce_by(g, &basis);
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return Ok(unit(ring));
        }
        add(h, &mut basis, &mut pairs, &mut pending);
    }

    while !pairs.is_empty() {
        let mut best = 0;
        for k in 1..pairs.len() {
            let (a, b) = (&pairs[k], &pairs[best]);
            let ord = ring
                .compare(&a.lcm, &b.lcm)
                .then((a.j, a.i).cmp(&(b.j, b.i)));
            if ord == std::cmp::Ordering::Less {
                best = k;
            }
        }
        let pair = pairs.swap_remove(best);
        pending.remove(&(pair.i, pair.j));

        let (fi, fj) = (&basis[pair.i], &basis[pair.j]);
        if fi.lm().is_coprime(&fj.lm()) {
            continue;
        }
        let chain = (0..basis.len()).any(|k| {
            k != pair.i
                && k != pair.j
                && basis[k].lm().divides(&pair.lcm)
                && !pending.contains(&(pair.i.min(k), pair.i.max(k)))
                && !pending.contains(&(pair.j.min(k), pair.j.max(k)))
        });
        if chain {
            continue;
        }
        let s = s_polynomial(fi, fj)?;
        let h = reduce_by(&s, &basis);
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return Ok(unit(ring));
        }
        add(h, &mut basis, &mut pairs, &mut pending);
    }

    Ok(GroebnerBasis {
        ring: ring.clone(),
        elements: interreduce(ring, basis),
        reduced: true,
    })
}

/// Turns a Groebner basis into the reduced one.
fn interreduce(ring: &Ring, basis: Vec<Polynomial>) -> Vec<Polynomial> {
    let mut by_lm: Vec<Polynomial> = basis;
    by_lm.sort_by(|a, b| ring.compare(&a.lm(), &b.lm()));
    let mut minimal: Vec<Polynomial> = Vec::new();
    for g in by_lm {
        if !minimal.iter().any(|k| k.lm().divides(&g.lm())) {
            minimal.push(g);
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for (idx, g) in minimal.iter().enumerate() {
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != idx)
            .map(|(_, p)| p.clone())
            .collect();
        let (c, m) = g.terms()[0];
        let tail = Polynomial::from_sorted_terms(ring, g.terms()[1..].to_vec());
        let tail = reduce_by(&tail, &others);
        let mut terms = vec![(c, m)];
        terms.extend_from_slice(tail.terms());
        reduced.push(Polynomial::from_sorted_terms(ring, terms).monic());
    }
    reduced.sort_by(|a, b| ring.compare(&b.lm(), &a.lm()));
    reduced
}

/// Checks the Buchberger criterion: every S-polynomial reduces to zero.
pub fn is_groebner_basis(elements: &[Polynomial]) -> bool {
    for i in 0..elements.len() {
        for j in i + 1..elements.len() {
            let s = s_polynomial(&elements[i], &elements[j]).expect("nonzero elements");
            if !reduce_by(&s, elements).is_zero() {
                return false;
            }
        }
    }
    true
}
