//! Sparse polynomials over GF(p).

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::monomial::Monomial;
use crate::ring::{check_same_ring, Ring};

pub type Term = (Scalar, Monomial);

/// A polynomial whose terms are kept strictly decreasing in the ring order,
/// with no zero coefficients. The empty term list is the zero polynomial.
#[derive(Clone)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<Term>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        crate::ring::same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Ring, c: Scalar) -> Self {
        Self::term(ring, c, ring.one())
    }

    pub fn term(ring: &Ring, c: Scalar, m: Monomial) -> Self {
        let terms = if c.is_zero() { Vec::new() } else { vec![(c, m)] };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn monomial(ring: &Ring, m: Monomial) -> Self {
        Self::term(ring, Scalar::ONE, m)
    }

    /// Builds a polynomial from arbitrary terms: sorts, merges duplicates, drops zeros.
    pub fn from_terms(ring: &Ring, mut terms: Vec<Term>) -> Self {
        let field = ring.field();
        terms.sort_by(|a, b| ring.compare(&b.1, &a.1));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for (c, m) in terms {
            match out.last_mut() {
                Some(last) if last.1 == m => last.0 = field.add(last.0, c),
                _ => out.push((c, m)),
            }
        }
        out.retain(|t| !t.0.is_zero());
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    /// Trusts that `terms` already satisfy the invariants.
    pub(crate) fn from_sorted_terms(ring: &Ring, terms: Vec<Term>) -> Self {
        debug_assert!(terms.windows(2).all(|w| ring.compare(&w[0].1, &w[1].1) == Ordering::Greater));
        debug_assert!(terms.iter().all(|t| !t.0.is_zero()));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Re-sorts and merges the terms under the ring's order.
    pub fn normalized(&self) -> Self {
        Self::from_terms(&self.ring, self.terms.clone())
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Result<Term> {
        self.terms.first().copied().ok_or(Error::ZeroPolynomial)
    }

    /// Leading monomial; panics on zero, so callers must rule that out.
    pub fn lm(&self) -> Monomial {
        self.terms[0].1
    }

    pub fn lc(&self) -> Scalar {
        self.terms[0].0
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].1.is_one()
    }

    /// Total degree; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.1.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some(t) => self.terms.iter().all(|s| s.1.degree() == t.1.degree()),
        }
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms
            .iter()
            .find(|t| &t.1 == m)
            .map(|t| t.0)
            .unwrap_or(Scalar::ZERO)
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        check_same_ring(&self.ring, &other.ring)?;
        Ok(self.combine(Scalar::ONE, &self.ring.one(), other))
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        check_same_ring(&self.ring, &other.ring)?;
        let m1 = self.ring.field().neg(Scalar::ONE);
        Ok(self.combine(m1, &self.ring.one(), other))
    }

    /// `self - c * u * g`.
    pub fn reduction_step(&self, c: Scalar, u: &Monomial, g: &Polynomial) -> Result<Polynomial> {
        check_same_ring(&self.ring, &g.ring)?;
        let nc = self.ring.field().neg(c);
        Ok(self.combine(nc, u, g))
    }

    /// `self + c * u * g` by a single merge pass. Both inputs must share a ring.
    pub(crate) fn combine(&self, c: Scalar, u: &Monomial, g: &Polynomial) -> Polynomial {
        if c.is_zero() || g.is_zero() {
            return self.clone();
        }
        let ring = &self.ring;
        let field = ring.field();
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let a = &self.terms;
        let mut i = 0;
        let mut j = 0;
        while i < a.len() || j < g.terms.len() {
            if j == g.terms.len() {
                out.extend_from_slice(&a[i..]);
                break;
            }
            let (gc, gm) = g.terms[j];
            let bm = gm.mul(u);
            if i == a.len() {
                out.push((field.mul(c, gc), bm));
                j += 1;
                continue;
            }
            match ring.compare(&a[i].1, &bm) {
                Ordering::Greater => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Less => {
                    out.push((field.mul(c, gc), bm));
                    j += 1;
                }
                Ordering::Equal => {
                    let s = field.add(a[i].0, field.mul(c, gc));
                    if !s.is_zero() {
                        out.push((s, bm));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    pub fn scale(&self, c: Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let f = self.ring.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|&(a, m)| (f.mul(a, c), m)).collect(),
        }
    }

    /// `c * u * self`; multiplication by a monomial preserves the order.
    pub fn mul_term(&self, c: Scalar, u: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let f = self.ring.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|&(a, m)| (f.mul(a, c), m.mul(u)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        check_same_ring(&self.ring, &other.ring)?;
        let mut acc = Polynomial::zero(&self.ring);
        for (c, m) in &other.terms {
            acc = acc.combine(*c, m, self);
        }
        Ok(acc)
    }

    /// Scales to leading coefficient one; zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.terms.first() {
            None => self.clone(),
            Some(&(c, _)) if c == Scalar::ONE => self.clone(),
            Some(&(c, _)) => {
                let inv = self.ring.field().inv(c).expect("nonzero leading coefficient");
                self.scale(inv)
            }
        }
    }

    /// Same terms reinterpreted in another ring with the same variables.
    pub fn in_ring(&self, ring: &Ring) -> Polynomial {
        assert_eq!(ring.nvars(), self.ring.nvars());
        Polynomial::from_terms(ring, self.terms.clone())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let field = self.ring.field();
        for (k, (c, m)) in self.terms.iter().enumerate() {
            let v = field.signed(*c);
            let (neg, abs) = (v < 0, v.unsigned_abs());
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs == 1 {
                f.write_str(&self.ring.fmt_monomial(m))?;
            } else {
                write!(f, "{abs}*{}", self.ring.fmt_monomial(m))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}
