//! Executable forms of the statements about componentwise linear ideals and
//! their Groebner degenerations.

mod findings;
mod report;
mod simplex;
mod weight;

pub use findings::{Finding, FindingsLog};
pub use report::{
    corollary_check, fiber_full_equivalence_check, fiber_full_up_to, fiber_full_witness,
    full_report, open_question_probe, theorem_check, Check, DegenerationReport, FiberFullEquivalence,
    ProbeReport, Verdict, STABILIZATION_NOTE,
};
pub use weight::{
    find_weight_vector, homogenize_ideal, verify_weight, ExtendedRingPolynomial, WEIGHT_BOUND,
};

use crate::error::Result;
use crate::groebner::{ideal_equality, IdealHandle};
use crate::monomial_ideal::MonomialIdeal;

/// `I_{<d>}` for a homogeneous ideal.
pub fn component_ideal(ideal: &IdealHandle, d: u32) -> Result<IdealHandle> {
    ideal.component(d)
}

/// `I_{<=d}` for a homogeneous ideal.
pub fn ideal_up_to_degree(ideal: &IdealHandle, d: u32) -> Result<IdealHandle> {
    ideal.up_to_degree(d)
}

fn monomial_equal(a: &MonomialIdeal, b: &MonomialIdeal) -> Result<bool> {
    ideal_equality(&IdealHandle::from_monomial_ideal(a), &IdealHandle::from_monomial_ideal(b))
}

/// The three equivalent conditions on `I_{<d>}`, each computed on its own.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Lemma2Report {
    pub degree: u32,
    /// `beta_0(I_{<d>}) = beta_0(in(I_{<d>}))`
    pub cond_i: bool,
    /// `in(I_{<d>}) = in(I)_{<d>}`
    pub cond_ii: bool,
    /// `in(I_{<=d}) = in(I)_{<=d}`
    pub cond_iii: bool,
}

impl Lemma2Report {
    pub fn all_agree(&self) -> bool {
        self.cond_i == self.cond_ii && self.cond_ii == self.cond_iii
    }
}

pub fn lemma2_report(ideal: &IdealHandle, d: u32) -> Result<Lemma2Report> {
    ideal.ring().order().require_graded()?;
    ideal.require_homogeneous()?;
    let init = ideal.initial_ideal();

    let piece = ideal.graded_piece(d)?;
    let comp = ideal.component(d)?;
    let comp_init = comp.initial_ideal();
    let cond_i = piece.dimension() == comp_init.len();

    let cond_ii = monomial_equal(&comp_init, &init.trunc_geq(d))?;

    let upto = ideal.up_to_degree(d)?;
    let cond_iii = monomial_equal(&upto.initial_ideal(), &init.trunc_leq(d))?;

    Ok(Lemma2Report {
        degree: d,
        cond_i,
        cond_ii,
        cond_iii,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Lemma3Report {
    /// `J` is not generated in a single degree with `beta_0(J) = beta_0(in(J))`.
    PreconditionViolated(String),
    Checked {
        degree: u32,
        /// `in(m^d J) = m^d in(J)`
        initial_commutes: bool,
        /// `beta_0(m^d J) = beta_0(in(m^d J))`
        betti0_equal: bool,
    },
}

impl Lemma3Report {
    pub fn holds(&self) -> Option<bool> {
        match self {
            Lemma3Report::PreconditionViolated(_) => None,
            Lemma3Report::Checked {
                initial_commutes,
                betti0_equal,
                ..
            } => Some(*initial_commutes && *betti0_equal),
        }
    }
}

pub fn lemma3_report(ideal: &IdealHandle, d: u32) -> Result<Lemma3Report> {
    ideal.ring().order().require_graded()?;
    ideal.require_homogeneous()?;
    let gens = ideal.minimal_generator_counts()?;
    if gens.len() != 1 {
        let degrees: Vec<String> = gens.keys().map(|d| d.to_string()).collect();
        return Ok(Lemma3Report::PreconditionViolated(format!(
            "not generated in a single degree (degrees: {})",
            if degrees.is_empty() { "none".to_string() } else { degrees.join(",") }
        )));
    }
    let beta0: usize = gens.values().sum();
    let init = ideal.initial_ideal();
    if beta0 != init.len() {
        return Ok(Lemma3Report::PreconditionViolated(format!(
            "beta_0(J) = {beta0} but beta_0(in(J)) = {}",
            init.len()
        )));
    }
    let scaled = ideal.times_max_ideal_power(d);
    let scaled_init = scaled.initial_ideal();
    let initial_commutes = monomial_equal(&scaled_init, &init.scale_by_max_ideal_power(d))?;
    let betti0_equal = scaled.minimal_generator_count()? == scaled_init.len();
    Ok(Lemma3Report::Checked {
        degree: d,
        initial_commutes,
        betti0_equal,
    })
}
