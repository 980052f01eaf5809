//! Graded Betti tables, regularity and the linearity checks built on them.

mod checks;
mod koszul;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

pub use checks::{
    has_linear_resolution, hh_identity_check, hilbert_betti_consistency, is_componentwise_linear,
    CwlReport, DegreeVerdict, HhVerdict, CWL_RANGE_NOTE,
};

use crate::error::{Error, Result};
use crate::groebner::IdealHandle;
use crate::monomial_ideal::trim;
use koszul::{needed_degrees, PieceTable};

/// Which module a Betti table describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Subject {
    Ideal,
    Quotient,
}

impl fmt::Display for Subject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Subject::Ideal => "ideal",
            Subject::Quotient => "quotient",
        })
    }
}

/// Finite map `(i, j) -> beta_{i,j}`, zero entries omitted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    subject: Subject,
    characteristic: u32,
    entries: BTreeMap<(usize, u32), u64>,
}

impl BettiTable {
    pub fn new(subject: Subject, characteristic: u32) -> Self {
        BettiTable {
            subject,
            characteristic,
            entries: BTreeMap::new(),
        }
    }

    pub fn from_entries(
        subject: Subject,
        characteristic: u32,
        entries: impl IntoIterator<Item = ((usize, u32), u64)>,
    ) -> Self {
        let mut t = BettiTable::new(subject, characteristic);
        for ((i, j), v) in entries {
            t.set(i, j, v);
        }
        t
    }

    pub fn subject(&self) -> Subject {
        self.subject
    }

    pub fn characteristic(&self) -> u32 {
        self.characteristic
    }

    pub fn set(&mut self, i: usize, j: u32, v: u64) {
        if v == 0 {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), v);
        }
    }

    pub fn get(&self, i: usize, j: u32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> &BTreeMap<(usize, u32), u64> {
        &self.entries
    }

    pub fn support(&self) -> BTreeSet<(usize, u32)> {
        self.entries.keys().copied().collect()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Total Betti number `beta_i = sum_j beta_{i,j}`.
    pub fn total(&self, i: usize) -> u64 {
        self.entries
            .iter()
            .filter(|((a, _), _)| *a == i)
            .map(|(_, v)| v)
            .sum()
    }

    pub fn max_homological_index(&self) -> Option<usize> {
        self.entries.keys().map(|k| k.0).max()
    }

    /// `max (j - i)` over the support, or `None` for an empty table.
    pub fn regularity(&self) -> Option<i64> {
        self.entries.keys().map(|&(i, j)| j as i64 - i as i64).max()
    }

    /// `sum_i (-1)^i sum_j beta_{i,j} t^j` as a coefficient vector.
    pub fn euler_polynomial(&self) -> Vec<i64> {
        let top = self.entries.keys().map(|k| k.1).max().unwrap_or(0) as usize;
        let mut out = vec![0i64; top + 1];
        for (&(i, j), &v) in &self.entries {
            let v = v as i64;
            out[j as usize] += if i % 2 == 0 { v } else { -v };
        }
        trim(&mut out);
        out
    }

    /// Entries with `i <= max_i`.
    pub fn restricted(&self, max_i: usize) -> BTreeMap<(usize, u32), u64> {
        self.entries
            .iter()
            .filter(|((i, _), _)| *i <= max_i)
            .map(|(k, v)| (*k, *v))
            .collect()
    }

    /// The table of `I` from that of `R/I` (proper ideals) via
    /// `beta_{i,j}(I) = beta_{i+1,j}(R/I)`.
    fn quotient_to_ideal(&self) -> BettiTable {
        BettiTable::from_entries(
            Subject::Ideal,
            self.characteristic,
            self.entries
                .iter()
                .filter(|((i, _), _)| *i >= 1)
                .map(|(&(i, j), &v)| ((i - 1, j), v)),
        )
    }
}

/// A graded module attached to a homogeneous ideal.
#[derive(Debug, Clone)]
pub struct ModuleSpec {
    pub subject: Subject,
    pub ideal: IdealHandle,
}

impl ModuleSpec {
    pub fn quotient(ideal: &IdealHandle) -> Self {
        ModuleSpec {
            subject: Subject::Quotient,
            ideal: ideal.clone(),
        }
    }

    pub fn ideal(ideal: &IdealHandle) -> Self {
        ModuleSpec {
            subject: Subject::Ideal,
            ideal: ideal.clone(),
        }
    }
}

fn pieces_for(spec: &ModuleSpec, cells: &[(usize, u32)]) -> PieceTable {
    let degrees = needed_degrees(cells);
    let gb = spec.ideal.gb();
    match spec.subject {
        Subject::Quotient => PieceTable::quotient(gb, &degrees),
        Subject::Ideal => PieceTable::ideal(gb, &degrees),
    }
}

/// `beta_{i,j}` of the module as a Koszul homology dimension.
pub fn koszul_betti(spec: &ModuleSpec, i: usize, j: u32) -> Result<u64> {
    let n = spec.ideal.ring().nvars();
    if i > n {
        return Err(Error::IndexOutOfRange { index: i, max: n });
    }
    spec.ideal.require_homogeneous()?;
    Ok(pieces_for(spec, &[(i, j)]).betti_numbers(&[(i, j)])[&(i, j)])
}

/// Evaluates Koszul homology at every given cell, for one module.
pub fn koszul_cells(spec: &ModuleSpec, cells: &[(usize, u32)]) -> Result<BTreeMap<(usize, u32), u64>> {
    spec.ideal.require_homogeneous()?;
    let n = spec.ideal.ring().nvars();
    if let Some(&(i, _)) = cells.iter().find(|c| c.0 > n) {
        return Err(Error::IndexOutOfRange { index: i, max: n });
    }
    Ok(pieces_for(spec, cells).betti_numbers(cells))
}

/// Candidate cells of the ideal's table: Taylor degrees for monomial ideals
/// (a degree range when there are too many subsets), otherwise the support of the initial ideal's table.
fn ideal_candidates(ideal: &IdealHandle) -> Result<BTreeSet<(usize, u32)>> {
    let init = ideal.initial_ideal();
    if ideal.is_monomial() {
        return match init.betti_candidate_degrees() {
            Err(Error::TooManyGenerators { .. }) => Ok(init.betti_degree_range()),
            other => other,
        };
    }
    let handle = IdealHandle::from_monomial_ideal(&init);
    Ok(betti_table(&ModuleSpec::ideal(&handle))?.support())
}

/// Full graded Betti table of the module.
///
/// Both subjects are evaluated on the quotient `R/I`, whose pieces have the
/// standard monomials as bases; the ideal's table follows from the shift law.
pub fn betti_table(spec: &ModuleSpec) -> Result<BettiTable> {
    let ideal = &spec.ideal;
    ideal.require_homogeneous()?;
    let p = ideal.ring().characteristic();
    let gb = ideal.gb();
    if gb.is_zero_ideal() {
        return Ok(match spec.subject {
            Subject::Ideal => BettiTable::new(Subject::Ideal, p),
            Subject::Quotient => BettiTable::from_entries(Subject::Quotient, p, [((0, 0), 1)]),
        });
    }
    if gb.is_unit_ideal() {
        return Ok(match spec.subject {
            Subject::Ideal => BettiTable::from_entries(Subject::Ideal, p, [((0, 0), 1)]),
            Subject::Quotient => BettiTable::new(Subject::Quotient, p),
        });
    }
    let n = ideal.ring().nvars();
    let mut cells = vec![(0usize, 0u32)];
    cells.extend(
        ideal_candidates(ideal)?
            .into_iter()
            .filter(|&(i, _)| i < n)
            .map(|(i, j)| (i + 1, j)),
    );
    let quotient_spec = ModuleSpec::quotient(ideal);
    let values = pieces_for(&quotient_spec, &cells).betti_numbers(&cells);
    let quotient = BettiTable::from_entries(Subject::Quotient, p, values);
    Ok(match spec.subject {
        Subject::Quotient => quotient,
        Subject::Ideal => quotient.quotient_to_ideal(),
    })
}

/// Castelnuovo-Mumford regularity `max (j - i)` of the module's table.
///
/// For the quotient this is `reg(I) - 1`.
pub fn regularity(spec: &ModuleSpec) -> Result<i64> {
    if spec.ideal.gb().is_zero_ideal() {
        return Err(Error::ZeroIdealRegularity);
    }
    let table = betti_table(spec)?;
    table.regularity().ok_or(Error::ZeroIdealRegularity)
}

/// Number of minimal generators, `beta_0(I)`.
pub fn betti0(ideal: &IdealHandle) -> Result<u64> {
    Ok(betti_table(&ModuleSpec::ideal(ideal))?.total(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_input;

    const SYMMETRIC_MINORS: &str = "ring 101 [a,b,c,d,e,f] grevlex\n\
        I = -b^2+a*d, -b*c+a*e, -c*d+b*e, -c^2+a*f, -c*e+b*f, -e^2+d*f\n\
        J = b^2, b*c, c^2, c*d, c*e, e^2";

    fn handle(text: &str, name: &str) -> IdealHandle {
        let file = parse_input(text).unwrap();
        IdealHandle::new(&file.ring, file.ideal(name).unwrap().to_vec()).unwrap()
    }

    fn entries(t: &BettiTable) -> Vec<((usize, u32), u64)> {
        t.entries().iter().map(|(k, v)| (*k, *v)).collect()
    }

    #[test]
    fn symmetric_minor_quotient_tables() {
        let i = handle(SYMMETRIC_MINORS, "I");
        let t = betti_table(&ModuleSpec::quotient(&i)).unwrap();
        assert_eq!(entries(&t), [((0, 0), 1), ((1, 2), 6), ((2, 3), 8), ((3, 4), 3)]);
        let j = handle(SYMMETRIC_MINORS, "J");
        let t = betti_table(&ModuleSpec::quotient(&j)).unwrap();
        assert_eq!(
            entries(&t),
            [((0, 0), 1), ((1, 2), 6), ((2, 3), 8), ((2, 4), 1), ((3, 4), 4), ((3, 5), 1), ((4, 5), 1)]
        );
        assert_eq!(regularity(&ModuleSpec::ideal(&i)).unwrap(), 2);
        assert_eq!(regularity(&ModuleSpec::ideal(&j)).unwrap(), 3);
    }

    #[test]
    fn koszul_cells_examples() {
        let text = "ring 101 [x,y,z] grevlex\nA = x^2, x*y\nB = x, y, z";
        let a = ModuleSpec::ideal(&handle(text, "A"));
        assert_eq!(koszul_betti(&a, 0, 2).unwrap(), 2);
        assert_eq!(koszul_betti(&a, 1, 3).unwrap(), 1);
        assert_eq!(koszul_betti(&a, 1, 2).unwrap(), 0);
        let b = ModuleSpec::ideal(&handle(text, "B"));
        assert_eq!(koszul_betti(&b, 0, 1).unwrap(), 3);
        assert_eq!(koszul_betti(&b, 1, 2).unwrap(), 3);
        assert_eq!(koszul_betti(&b, 2, 3).unwrap(), 1);
        assert!(matches!(koszul_betti(&b, 4, 3), Err(Error::IndexOutOfRange { .. })));
        let q = ModuleSpec::quotient(&handle(SYMMETRIC_MINORS, "I"));
        assert_eq!(koszul_betti(&q, 1, 2).unwrap(), 6);
    }

    #[test]
    fn ideal_path_agrees_with_shift() {
        let i = handle(SYMMETRIC_MINORS, "I");
        let t = betti_table(&ModuleSpec::ideal(&i)).unwrap();
        let direct = koszul_cells(&ModuleSpec::ideal(&i), &t.support().into_iter().collect::<Vec<_>>()).unwrap();
        assert_eq!(&direct, t.entries());
    }

    #[test]
    fn zero_and_unit_conventions() {
        let text = "ring 101 [x,y] grevlex\nZ = 0\nU = x, 1\nP = x";
        let z = handle(text, "Z");
        assert!(betti_table(&ModuleSpec::ideal(&z)).unwrap().is_empty());
        assert_eq!(betti_table(&ModuleSpec::quotient(&z)).unwrap().get(0, 0), 1);
        assert_eq!(regularity(&ModuleSpec::ideal(&z)), Err(Error::ZeroIdealRegularity));
        let u = handle(text, "U");
        assert_eq!(entries(&betti_table(&ModuleSpec::ideal(&u)).unwrap()), [((0, 0), 1)]);
        assert!(betti_table(&ModuleSpec::quotient(&u)).unwrap().is_empty());
        let p = handle(text, "P");
        assert_eq!(entries(&betti_table(&ModuleSpec::ideal(&p)).unwrap()), [((0, 1), 1)]);
    }

    #[test]
    fn linearity_checks() {
        let i = handle(SYMMETRIC_MINORS, "I");
        let j = handle(SYMMETRIC_MINORS, "J");
        assert!(has_linear_resolution(&i, 2).unwrap());
        assert!(!has_linear_resolution(&j, 2).unwrap());
        assert!(is_componentwise_linear(&i).unwrap().componentwise_linear);
        let r = is_componentwise_linear(&j).unwrap();
        assert!(!r.componentwise_linear);
        assert_eq!(r.failing_degrees(), [2]);
        assert_eq!(hh_identity_check(&i).unwrap(), HhVerdict::Holds);
        assert_eq!(hh_identity_check(&j).unwrap(), HhVerdict::PreconditionViolated);
        let small = handle("ring 101 [x,y] grevlex\nI = x, y^2", "I");
        assert!(is_componentwise_linear(&small).unwrap().componentwise_linear);
        assert_eq!(hh_identity_check(&small).unwrap(), HhVerdict::Holds);
        let z = handle("ring 101 [x,y] grevlex\nI = 0", "I");
        assert!(has_linear_resolution(&z, 3).unwrap());
    }

    #[test]
    fn euler_polynomials_match_hilbert_numerators() {
        let i = handle(SYMMETRIC_MINORS, "I");
        let t = betti_table(&ModuleSpec::ideal(&i)).unwrap();
        assert_eq!(t.euler_polynomial(), [0, 0, 6, -8, 3]);
        assert!(hilbert_betti_consistency(&i).unwrap());
        assert!(hilbert_betti_consistency(&handle(SYMMETRIC_MINORS, "J")).unwrap());
        let x = handle("ring 101 [x] grevlex\nI = x", "I");
        assert_eq!(betti_table(&ModuleSpec::ideal(&x)).unwrap().euler_polynomial(), [0, 1]);
        assert!(hilbert_betti_consistency(&x).unwrap());
    }
}
