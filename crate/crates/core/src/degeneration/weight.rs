//! Weight vectors realizing a term order on a Groebner basis, and
//! w-homogenization.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::simplex::{maximize, LpOutcome};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::groebner::{GroebnerBasis, IdealHandle};
use crate::monomial::Monomial;
use crate::order::WeightVector;
use crate::poly::Polynomial;
use crate::ring::Ring;

/// Upper bound on every weight entry.
pub const WEIGHT_BOUND: u64 = 1_000_000;

/// `lead - other` exponent differences for every trailing term of the basis.
fn difference_vectors(gb: &GroebnerBasis) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for g in gb.elements() {
        let lead = g.lm();
        for (_, m) in &g.terms()[1..] {
            out.push(
                lead.exponents()
                    .iter()
                    .zip(m.exponents())
                    .map(|(&a, &b)| a as i64 - b as i64)
                    .collect(),
            );
        }
    }
    out
}

/// True iff `w` strictly prefers every leading monomial of the basis to the
/// element's other monomials.
pub fn verify_weight(gb: &GroebnerBasis, w: &WeightVector) -> bool {
    w.len() == gb.ring().nvars()
        && gb.elements().iter().all(|g| {
            let lead = g.lm().weighted_degree(w.as_slice());
            g.terms()[1..].iter().all(|(_, m)| m.weighted_degree(w.as_slice()) < lead)
        })
}

/// Finds an integer weight vector `w >= 1` with `in_w(g) = in_<(g)` for every
/// element of the basis.
///
/// Solves `min sum w` subject to `(lead - other).w >= 1` and `1 <= w <= B`
/// exactly, then clears denominators and divides out the common factor.
pub fn find_weight_vector(gb: &GroebnerBasis) -> Result<WeightVector> {
    gb.ring().order().require_graded()?;
    let n = gb.ring().nvars();
    let diffs = difference_vectors(gb);
    if diffs.is_empty() {
        return WeightVector::new(vec![1; n]);
    }
    let int = |v: i64| BigRational::from_integer(BigInt::from(v));
    // substitute w = 1 + u with u >= 0
    let mut a = Vec::new();
    let mut b = Vec::new();
    for c in &diffs {
        a.push(c.iter().map(|&x| int(-x)).collect::<Vec<_>>());
        b.push(int(c.iter().sum::<i64>() - 1));
    }
    for k in 0..n {
        let mut row = vec![BigRational::zero(); n];
        row[k] = BigRational::one();
        a.push(row);
        b.push(int(WEIGHT_BOUND as i64 - 1));
    }
    let objective = vec![int(-1); n];
    let u = match maximize(&objective, &a, &b) {
        LpOutcome::Optimal(u) => u,
        LpOutcome::Infeasible | LpOutcome::Unbounded => return Err(Error::WeightInfeasible),
    };
    let w: Vec<BigRational> = u.into_iter().map(|x| x + BigRational::one()).collect();
    let denom = w.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let mut ints: Vec<BigInt> = w.iter().map(|x| (x * &denom).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() {
        for x in ints.iter_mut() {
            *x /= &g;
        }
    }
    let mut out = Vec::with_capacity(n);
    for x in &ints {
        match x.to_u64() {
            Some(v) if v <= WEIGHT_BOUND && x.is_positive() => out.push(v),
            _ => return Err(Error::WeightBoundExceeded(x.to_string(), WEIGHT_BOUND)),
        }
    }
    let w = WeightVector::new(out)?;
    if !verify_weight(gb, &w) {
        return Err(Error::InvalidWeight(w.as_slice().to_vec()));
    }
    Ok(w)
}

/// A polynomial in `R[t]`, stored as terms `c * x^a * t^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtendedRingPolynomial {
    ring: Ring,
    terms: Vec<(Scalar, Monomial, u64)>,
}

impl ExtendedRingPolynomial {
    pub fn terms(&self) -> &[(Scalar, Monomial, u64)] {
        &self.terms
    }

    /// The `w`-degree shared by all terms, with `t` of weight 1.
    pub fn weighted_degree(&self, w: &WeightVector) -> Option<u64> {
        self.terms
            .first()
            .map(|(_, m, k)| m.weighted_degree(w.as_slice()) + k)
    }

    pub fn is_w_homogeneous(&self, w: &WeightVector) -> bool {
        let d = self.weighted_degree(w);
        self.terms
            .iter()
            .all(|(_, m, k)| Some(m.weighted_degree(w.as_slice()) + k) == d)
    }

    pub fn at_t_one(&self) -> Polynomial {
        Polynomial::from_terms(&self.ring, self.terms.iter().map(|(c, m, _)| (*c, *m)).collect())
    }

    pub fn at_t_zero(&self) -> Polynomial {
        Polynomial::from_terms(
            &self.ring,
            self.terms
                .iter()
                .filter(|t| t.2 == 0)
                .map(|(c, m, _)| (*c, *m))
                .collect(),
        )
    }
}

impl fmt::Display for ExtendedRingPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let field = self.ring.field();
        for (idx, (c, m, k)) in self.terms.iter().enumerate() {
            let v = field.signed(*c);
            let abs = v.unsigned_abs();
            match (idx, v < 0) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mut factors = Vec::new();
            if abs != 1 || (m.is_one() && *k == 0) {
                factors.push(abs.to_string());
            }
            if !m.is_one() {
                factors.push(self.ring.fmt_monomial(m));
            }
            match k {
                0 => {}
                1 => factors.push("t".into()),
                _ => factors.push(format!("t^{k}")),
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

/// `w`-homogenizes each element of the reduced Groebner basis:
/// `sum c_a x^a  ->  sum c_a x^a t^(D - w.a)` with `D = max w.a`.
pub fn homogenize_ideal(ideal: &IdealHandle, w: &WeightVector) -> Result<Vec<ExtendedRingPolynomial>> {
    let gb = ideal.gb();
    if !verify_weight(gb, w) {
        return Err(Error::InvalidWeight(w.as_slice().to_vec()));
    }
    Ok(gb
        .elements()
        .iter()
        .map(|g| {
            let top = g
                .terms()
                .iter()
                .map(|(_, m)| m.weighted_degree(w.as_slice()))
                .max()
                .unwrap_or(0);
            ExtendedRingPolynomial {
                ring: g.ring().clone(),
                terms: g
                    .terms()
                    .iter()
                    .map(|(c, m)| (*c, *m, top - m.weighted_degree(w.as_slice())))
                    .collect(),
            }
        })
        .collect())
}
