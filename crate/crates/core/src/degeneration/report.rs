use std::fmt;

use super::findings::Finding;
use crate::betti::{betti_table, is_componentwise_linear, BettiTable, ModuleSpec};
use crate::error::Result;
use crate::groebner::IdealHandle;
use crate::monomial_ideal::MonomialIdeal;

/// Why the "for all d" hypothesis is only checked on a finite range.
pub const STABILIZATION_NOTE: &str = "in(I_<d>) = in(I)_<d> is checked for 1 <= d <= max generator degree of in(I); \
for larger d, I_<=d = I and in(I)_<=d = in(I), so the equivalent condition on I_<=d holds automatically";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    HypothesesFail,
    Verified,
    ViolationFound,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::HypothesesFail => "HYPOTHESES_FAIL",
            Verdict::Verified => "VERIFIED",
            Verdict::ViolationFound => "VIOLATION_FOUND",
        })
    }
}

/// A named boolean with an optional witness explaining a failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub holds: bool,
    pub witness: Option<String>,
}

impl Check {
    fn new(name: &str, holds: bool, witness: Option<String>) -> Self {
        Check {
            name: name.to_string(),
            holds,
            witness: if holds { None } else { witness },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegenerationReport {
    /// `theorem`, `corollary` or `report`
    pub check: &'static str,
    pub ring: String,
    pub order: String,
    pub characteristic: u32,
    pub generators: Vec<String>,
    pub hypotheses: Vec<Check>,
    pub conclusions: Vec<Check>,
    /// Betti table of `I`
    pub ideal_table: BettiTable,
    /// Betti table of `in(I)`
    pub initial_table: BettiTable,
    pub notes: Vec<String>,
    pub verdict: Verdict,
    /// Set when the verdict is `VIOLATION_FOUND`.
    pub finding: Option<Finding>,
}

impl DegenerationReport {
    pub fn failed_hypotheses(&self) -> Vec<&Check> {
        self.hypotheses.iter().filter(|c| !c.holds).collect()
    }
}

struct Context {
    ideal: IdealHandle,
    init: MonomialIdeal,
    init_handle: IdealHandle,
    ideal_table: BettiTable,
    initial_table: BettiTable,
}

impl Context {
    fn new(ideal: &IdealHandle) -> Result<Self> {
        ideal.ring().order().require_graded()?;
        ideal.require_homogeneous()?;
        let init = ideal.initial_ideal();
        let init_handle = IdealHandle::from_monomial_ideal(&init);
        Ok(Context {
            ideal_table: betti_table(&ModuleSpec::ideal(ideal))?,
            initial_table: betti_table(&ModuleSpec::ideal(&init_handle))?,
            ideal: ideal.clone(),
            init,
            init_handle,
        })
    }

    fn square_free(&self) -> Check {
        let bad: Vec<String> = self
            .init
            .generators()
            .iter()
            .filter(|m| !m.is_square_free())
            .map(|m| self.init.ring().fmt_monomial(m))
            .collect();
        Check::new(
            "squareFree(in)",
            bad.is_empty(),
            Some(format!("squareFree(in) = false: {}", bad.join(", "))),
        )
    }

    fn cwl(&self, of_initial: bool) -> Result<Check> {
        let (name, handle) = if of_initial {
            ("componentwiseLinear(in)", &self.init_handle)
        } else {
            ("componentwiseLinear(I)", &self.ideal)
        };
        let r = is_componentwise_linear(handle)?;
        let failing: Vec<String> = r.failing_degrees().iter().map(|d| d.to_string()).collect();
        Ok(Check::new(
            name,
            r.componentwise_linear,
            Some(format!("no linear resolution in degree(s) {}", failing.join(","))),
        ))
    }

    fn betti_equal(&self) -> Check {
        let diff = first_difference(&self.ideal_table, &self.initial_table);
        Check::new(
            "bettiEqual(I, in)",
            diff.is_none(),
            diff.map(|(i, j, a, b)| format!("beta_{{{i},{j}}}: {a} vs {b}")),
        )
    }

    fn report(&self, check: &'static str) -> DegenerationReport {
        let ring = self.ideal.ring();
        DegenerationReport {
            check,
            ring: ring.header(),
            order: ring.order().to_string(),
            characteristic: ring.characteristic(),
            generators: self.ideal.generators().iter().map(|g| g.to_string()).collect(),
            hypotheses: Vec::new(),
            conclusions: Vec::new(),
            ideal_table: self.ideal_table.clone(),
            initial_table: self.initial_table.clone(),
            notes: Vec::new(),
            verdict: Verdict::HypothesesFail,
            finding: None,
        }
    }
}

/// First cell, in `(i, j)` order, where the tables differ.
pub(crate) fn first_difference(a: &BettiTable, b: &BettiTable) -> Option<(usize, u32, u64, u64)> {
    let mut cells = a.support();
    cells.extend(b.support());
    cells
        .into_iter()
        .find(|&(i, j)| a.get(i, j) != b.get(i, j))
        .map(|(i, j)| (i, j, a.get(i, j), b.get(i, j)))
}

fn finalize(report: &mut DegenerationReport, ideal: &IdealHandle) {
    report.verdict = if report.hypotheses.iter().any(|c| !c.holds) {
        report.conclusions.clear();
        Verdict::HypothesesFail
    } else if report.conclusions.iter().all(|c| c.holds) {
        Verdict::Verified
    } else {
        Verdict::ViolationFound
    };
    if report.verdict == Verdict::ViolationFound {
        let failed = report
            .conclusions
            .iter()
            .find(|c| !c.holds)
            .map(|c| format!("{}: {}", c.name, c.witness.clone().unwrap_or_default()))
            .unwrap_or_default();
        report.finding = Some(Finding::new("VIOLATION_FOUND", ideal, failed));
    }
}

fn initial_commutes_check(ctx: &Context) -> Result<Check> {
    let top = ctx.init.max_degree().unwrap_or(0);
    for d in 1..=top {
        let comp = ctx.ideal.component(d)?;
        let lhs = comp.initial_ideal();
        if lhs != ctx.init.trunc_geq(d) {
            return Ok(Check::new(
                "in(I_<d>) = in(I)_<d>",
                false,
                Some(format!("fails at d = {d}")),
            ));
        }
    }
    Ok(Check::new("in(I_<d>) = in(I)_<d>", true, None))
}

/// Hypotheses: `I` componentwise linear, `in(I)` square-free and
/// `in(I_{<d>}) = in(I)_{<d>}` for all `d`. Conclusions: `in(I)` is
/// componentwise linear and the Betti tables agree.
pub fn theorem_check(ideal: &IdealHandle) -> Result<DegenerationReport> {
    let ctx = Context::new(ideal)?;
    let mut r = ctx.report("theorem");
    r.hypotheses.push(ctx.cwl(false)?);
    r.hypotheses.push(ctx.square_free());
    r.hypotheses.push(initial_commutes_check(&ctx)?);
    r.notes.push(STABILIZATION_NOTE.to_string());
    r.notes.push(crate::betti::CWL_RANGE_NOTE.to_string());
    if r.hypotheses.iter().all(|c| c.holds) {
        r.conclusions.push(ctx.cwl(true)?);
        r.conclusions.push(ctx.betti_equal());
    }
    finalize(&mut r, ideal);
    Ok(r)
}

/// Hypotheses: `in(I)` square-free and `beta_0(I) = beta_0(in(I))`.
/// Conclusions: `I` is componentwise linear iff `in(I)` is, and when either
/// is, the Betti tables agree.
pub fn corollary_check(ideal: &IdealHandle) -> Result<DegenerationReport> {
    let ctx = Context::new(ideal)?;
    let mut r = ctx.report("corollary");
    r.hypotheses.push(ctx.square_free());
    let (b0, b0_in) = (ctx.ideal_table.total(0), ctx.init.len() as u64);
    r.hypotheses.push(Check::new(
        "beta0(I) = beta0(in)",
        b0 == b0_in,
        Some(format!("beta_0(I) = {b0}, beta_0(in) = {b0_in}")),
    ));
    r.notes.push(crate::betti::CWL_RANGE_NOTE.to_string());
    if r.hypotheses.iter().all(|c| c.holds) {
        let a = ctx.cwl(false)?;
        let b = ctx.cwl(true)?;
        r.conclusions.push(Check::new(
            "componentwiseLinear(I) <=> componentwiseLinear(in)",
            a.holds == b.holds,
            Some(format!("componentwiseLinear(I) = {}, componentwiseLinear(in) = {}", a.holds, b.holds)),
        ));
        if a.holds || b.holds {
            r.conclusions.push(ctx.betti_equal());
        }
    }
    finalize(&mut r, ideal);
    Ok(r)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProbeReport {
    pub componentwise_linear: bool,
    pub square_free_initial: bool,
    /// `reg(I)`, absent for the zero ideal
    pub h: Option<i64>,
    pub applicable: bool,
    /// whether `in(I_{<=h-1})` is square-free, when applicable
    pub square_free_truncation: Option<bool>,
    /// Set when a counterexample was found.
    pub finding: Option<Finding>,
}

/// For componentwise linear `I` with square-free `in(I)` and `h = reg(I) >= 2`,
/// reports whether `in(I_{<=h-1})` is square-free.
pub fn open_question_probe(ideal: &IdealHandle) -> Result<ProbeReport> {
    ideal.ring().order().require_graded()?;
    ideal.require_homogeneous()?;
    let init = ideal.initial_ideal();
    let square_free_initial = init.is_square_free();
    let componentwise_linear = is_componentwise_linear(ideal)?.componentwise_linear;
    let h = betti_table(&ModuleSpec::ideal(ideal))?.regularity();
    let applicable = componentwise_linear && square_free_initial && h.is_some_and(|h| h >= 2);
    let mut report = ProbeReport {
        componentwise_linear,
        square_free_initial,
        h,
        applicable,
        square_free_truncation: None,
        finding: None,
    };
    if applicable {
        let h = h.expect("applicable") as u32;
        let truncated = ideal.up_to_degree(h - 1)?.initial_ideal();
        let sf = truncated.is_square_free();
        report.square_free_truncation = Some(sf);
        if !sf {
            report.finding = Some(Finding::new(
                "OPEN_QUESTION_COUNTEREXAMPLE",
                ideal,
                format!("d={}", h - 1),
            ));
        }
    }
    Ok(report)
}

/// First cell with `i <= h - 2` where the tables of `R/I` and `R/in(I)` differ.
pub fn fiber_full_witness(ideal: &IdealHandle, h: i64) -> Result<Option<(usize, u32, u64, u64)>> {
    ideal.require_homogeneous()?;
    if h < 2 {
        return Ok(None);
    }
    let max_i = (h - 2) as usize;
    let a = betti_table(&ModuleSpec::quotient(ideal))?;
    let init = IdealHandle::from_monomial_ideal(&ideal.initial_ideal());
    let b = betti_table(&ModuleSpec::quotient(&init))?;
    let restrict = |t: &BettiTable| {
        BettiTable::from_entries(t.subject(), t.characteristic(), t.restricted(max_i))
    };
    Ok(first_difference(&restrict(&a), &restrict(&b)))
}

/// `beta_{i,j}(R/I) = beta_{i,j}(R/in(I))` for all `i <= h - 2`.
pub fn fiber_full_up_to(ideal: &IdealHandle, h: i64) -> Result<bool> {
    Ok(fiber_full_witness(ideal, h)?.is_none())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberFullEquivalence {
    /// `I` componentwise linear and `in(I)` square-free
    pub cond_i: bool,
    /// `in(I)` componentwise linear
    pub cond_ii: bool,
    pub applicable: bool,
    pub fiber_full_3: bool,
    pub full_equality: bool,
    /// `fiber_full_3 <=> full_equality`, when applicable
    pub holds: Option<bool>,
    pub finding: Option<Finding>,
}

pub fn fiber_full_equivalence_check(ideal: &IdealHandle) -> Result<FiberFullEquivalence> {
    let ctx = Context::new(ideal)?;
    let cwl = is_componentwise_linear(ideal)?.componentwise_linear;
    let cond_i = cwl && ctx.init.is_square_free();
    let cond_ii = is_componentwise_linear(&ctx.init_handle)?.componentwise_linear;
    let applicable = cond_i || cond_ii;
    let fiber_full_3 = fiber_full_up_to(ideal, 3)?;
    let full_equality = first_difference(&ctx.ideal_table, &ctx.initial_table).is_none();
    let holds = applicable.then_some(fiber_full_3 == full_equality);
    let finding = (holds == Some(false)).then(|| {
        Finding::new(
            "FIBER_FULL_EQUIVALENCE_FAILS",
            ideal,
            format!("fiberFull(3) = {fiber_full_3}, bettiEqual = {full_equality}"),
        )
    });
    Ok(FiberFullEquivalence {
        cond_i,
        cond_ii,
        applicable,
        fiber_full_3,
        full_equality,
        holds,
        finding,
    })
}

/// Runs the theorem, corollary, open-question and fiber-fullness checks and
/// merges them into one report. The verdict is `VERIFIED` when the theorem
/// or the corollary applies and every evaluated conclusion holds.
pub fn full_report(ideal: &IdealHandle) -> Result<DegenerationReport> {
    let theorem = theorem_check(ideal)?;
    let corollary = corollary_check(ideal)?;
    let probe = open_question_probe(ideal)?;
    let fiber = fiber_full_equivalence_check(ideal)?;

    let mut r = theorem.clone();
    r.check = "report";
    for h in &corollary.hypotheses {
        if !r.hypotheses.iter().any(|c| c.name == h.name) {
            r.hypotheses.push(h.clone());
        }
    }
    r.conclusions.clear();
    for (tag, rep) in [("theorem", &theorem), ("corollary", &corollary)] {
        r.notes.push(format!("{tag}: {}", rep.verdict));
        for c in &rep.conclusions {
            let mut c = c.clone();
            c.name = format!("{tag}: {}", c.name);
            r.conclusions.push(c);
        }
    }
    if let Some(holds) = fiber.holds {
        r.conclusions.push(Check::new(
            "fiberFull(3) <=> bettiEqual(R/I, R/in)",
            holds,
            Some(format!(
                "fiberFull(3) = {}, bettiEqual = {}",
                fiber.fiber_full_3, fiber.full_equality
            )),
        ));
    }
    r.notes.push(format!(
        "fiber-full equivalence: applicable = {}, fiberFull(3) = {}, bettiEqual = {}",
        fiber.applicable, fiber.fiber_full_3, fiber.full_equality
    ));
    r.notes.push(match probe.square_free_truncation {
        Some(sf) => format!(
            "open question probe: h = {}, in(I_<=h-1) square-free = {sf}",
            probe.h.unwrap_or_default()
        ),
        None => "open question probe: not applicable".to_string(),
    });
    r.verdict = if r.conclusions.iter().any(|c| !c.holds) {
        Verdict::ViolationFound
    } else if theorem.verdict == Verdict::Verified || corollary.verdict == Verdict::Verified {
        Verdict::Verified
    } else {
        Verdict::HypothesesFail
    };
    r.finding = theorem.finding.or(corollary.finding).or(fiber.finding);
    if r.verdict == Verdict::ViolationFound && r.finding.is_none() {
        r.finding = Some(Finding::new("VIOLATION_FOUND", ideal, "report"));
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_input;

    const SYMMETRIC_MINORS: &str = "ring 101 [a,b,c,d,e,f] grevlex\n\
        I = -b^2+a*d, -b*c+a*e, -c*d+b*e, -c^2+a*f, -c*e+b*f, -e^2+d*f";
    const GENERIC: &str = "ring 101 [x1,x2,x3,y1,y2,y3] grevlex\n\
        I = x1*y2 - x2*y1, x1*y3 - x3*y1, x2*y3 - x3*y2";

    fn handle(text: &str) -> IdealHandle {
        let file = parse_input(text).unwrap();
        IdealHandle::new(&file.ring, file.ideal("I").unwrap().to_vec()).unwrap()
    }

    #[test]
    fn symmetric_minors_fail_square_freeness_only() {
        let i = handle(SYMMETRIC_MINORS);
        let t = theorem_check(&i).unwrap();
        assert_eq!(t.verdict, Verdict::HypothesesFail);
        let failed: Vec<&str> = t.failed_hypotheses().iter().map(|c| c.name.as_str()).collect();
        assert_eq!(failed, ["squareFree(in)"]);
        assert!(t.failed_hypotheses()[0].witness.as_ref().unwrap().starts_with("squareFree(in) = false"));
        let c = corollary_check(&i).unwrap();
        assert_eq!(c.verdict, Verdict::HypothesesFail);
        let failed: Vec<&str> = c.failed_hypotheses().iter().map(|c| c.name.as_str()).collect();
        assert_eq!(failed, ["squareFree(in)"]);
        assert!(!open_question_probe(&i).unwrap().applicable);
        assert!(fiber_full_up_to(&i, 3).unwrap());
        assert!(!fiber_full_up_to(&i, 5).unwrap());
        assert!(!fiber_full_equivalence_check(&i).unwrap().applicable);
        assert_eq!(full_report(&i).unwrap().verdict, Verdict::HypothesesFail);
    }

    #[test]
    fn generic_minors_verified() {
        let i = handle(GENERIC);
        let t = theorem_check(&i).unwrap();
        assert_eq!(t.verdict, Verdict::Verified);
        let cells: Vec<_> = t.ideal_table.entries().iter().map(|(k, v)| (*k, *v)).collect();
        assert_eq!(cells, [((0, 2), 3), ((1, 3), 2)]);
        assert_eq!(t.ideal_table, t.initial_table);
        assert_eq!(corollary_check(&i).unwrap().verdict, Verdict::Verified);
        let p = open_question_probe(&i).unwrap();
        assert!(p.applicable);
        assert_eq!(p.h, Some(2));
        assert_eq!(p.square_free_truncation, Some(true));
        let f = fiber_full_equivalence_check(&i).unwrap();
        assert!(f.applicable && f.cond_i && f.cond_ii);
        assert_eq!(f.holds, Some(true));
        assert_eq!(full_report(&i).unwrap().verdict, Verdict::Verified);
    }

    #[test]
    fn square_free_monomial_ideal() {
        let i = handle("ring 101 [x,y,z] grevlex\nI = x*y, x*z");
        assert_eq!(theorem_check(&i).unwrap().verdict, Verdict::Verified);
        assert_eq!(corollary_check(&i).unwrap().verdict, Verdict::Verified);
        let f = fiber_full_equivalence_check(&i).unwrap();
        assert_eq!((f.applicable, f.holds), (true, Some(true)));
        assert!(fiber_full_up_to(&i, 7).unwrap());
    }
}
