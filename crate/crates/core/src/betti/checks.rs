use std::collections::BTreeMap;

use crate::error::Result;
use crate::groebner::IdealHandle;

use super::{betti_table, BettiTable, ModuleSpec};

/// Why the componentwise linearity check stops at the top generator degree.
pub const CWL_RANGE_NOTE: &str = "degrees checked from the smallest to the largest minimal generator degree; \
below that I_<d> = 0, above it I_<d> = m*I_<d-1>, which keeps a linear resolution";

/// True iff `I` has a `d`-linear resolution. The zero ideal qualifies.
pub fn has_linear_resolution(ideal: &IdealHandle, d: u32) -> Result<bool> {
    ideal.require_homogeneous()?;
    if ideal.gb().is_zero_ideal() {
        return Ok(true);
    }
    let gens = ideal.minimal_generator_counts()?;
    if gens.keys().any(|&e| e != d) {
        return Ok(false);
    }
    let table = betti_table(&ModuleSpec::ideal(ideal))?;
    Ok(table.support().iter().all(|&(i, j)| j as i64 - i as i64 == d as i64))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeVerdict {
    pub degree: u32,
    pub linear: bool,
    /// Betti table of `I_{<d>}`.
    pub table: BettiTable,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CwlReport {
    pub componentwise_linear: bool,
    pub degrees: Vec<DegreeVerdict>,
    pub note: &'static str,
}

impl CwlReport {
    pub fn failing_degrees(&self) -> Vec<u32> {
        self.degrees.iter().filter(|v| !v.linear).map(|v| v.degree).collect()
    }
}

/// Checks that `I_{<d>}` has a `d`-linear resolution for each generator degree `d`.
pub fn is_componentwise_linear(ideal: &IdealHandle) -> Result<CwlReport> {
    ideal.require_homogeneous()?;
    let gens = ideal.minimal_generator_counts()?;
    let mut degrees = Vec::new();
    if let (Some(&lo), Some(&hi)) = (gens.keys().next(), gens.keys().next_back()) {
        for d in lo..=hi {
            let comp = ideal.component(d)?;
            let table = betti_table(&ModuleSpec::ideal(&comp))?;
            let linear = table.support().iter().all(|&(i, j)| j as i64 - i as i64 == d as i64);
            degrees.push(DegreeVerdict {
                degree: d,
                linear,
                table,
            });
        }
    }
    Ok(CwlReport {
        componentwise_linear: degrees.iter().all(|v| v.linear),
        degrees,
        note: CWL_RANGE_NOTE,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HhVerdict {
    Holds,
    /// First cell `(i, j)` where `beta_{i,i+j}(I)` differs from the right side.
    Fails { i: usize, j: u32, lhs: i64, rhs: i64 },
    PreconditionViolated,
}

/// `beta_{i,i+j}(I) = beta_i(I_{<j>}) - beta_i(m I_{<j-1>})` for componentwise
/// linear `I`.
pub fn hh_identity_check(ideal: &IdealHandle) -> Result<HhVerdict> {
    if !is_componentwise_linear(ideal)?.componentwise_linear {
        return Ok(HhVerdict::PreconditionViolated);
    }
    let n = ideal.ring().nvars();
    let table = betti_table(&ModuleSpec::ideal(ideal))?;
    let gens = ideal.minimal_generator_counts()?;
    let Some(&hi) = gens.keys().next_back() else {
        return Ok(HhVerdict::Holds);
    };
    let mut js: Vec<u32> = table.support().iter().map(|&(i, j)| j - i as u32).collect();
    js.extend(0..=hi + 1);
    js.sort_unstable();
    js.dedup();
    let mut totals: BTreeMap<u32, BettiTable> = BTreeMap::new();
    let mut comp_table = |j: u32| -> Result<BettiTable> {
        if let Some(t) = totals.get(&j) {
            return Ok(t.clone());
        }
        let t = betti_table(&ModuleSpec::ideal(&ideal.component(j)?))?;
        totals.insert(j, t.clone());
        Ok(t)
    };
    for j in js {
        let comp = comp_table(j)?;
        let shifted = if j == 0 {
            None
        } else {
            let prev = ideal.component(j - 1)?;
            Some(betti_table(&ModuleSpec::ideal(&prev.times_max_ideal()))?)
        };
        for i in 0..=n {
            let lhs = table.get(i, i as u32 + j) as i64;
            let rhs = comp.total(i) as i64 - shifted.as_ref().map_or(0, |t| t.total(i) as i64);
            if lhs != rhs {
                return Ok(HhVerdict::Fails { i, j, lhs, rhs });
            }
        }
    }
    Ok(HhVerdict::Holds)
}

/// The alternating Betti sums of `I` and `R/I` equal the Hilbert series
/// numerators computed from `in(I)`.
pub fn hilbert_betti_consistency(ideal: &IdealHandle) -> Result<bool> {
    let numerator = ideal.initial_ideal().hilbert_numerator();
    let ideal_table = betti_table(&ModuleSpec::ideal(ideal))?;
    let quotient_table = betti_table(&ModuleSpec::quotient(ideal))?;
    Ok(table_matches_numerator(&ideal_table, &numerator.ideal_numerator())
        && table_matches_numerator(&quotient_table, numerator.coefficients()))
}

/// True iff the table's Euler polynomial equals the given numerator.
pub fn table_matches_numerator(table: &BettiTable, numerator: &[i64]) -> bool {
    table.euler_polynomial() == numerator
}
