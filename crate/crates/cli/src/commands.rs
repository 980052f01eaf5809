use std::fmt::Write;
use std::fs;

use anyhow::{anyhow, bail, Context, Result};
use degen_core::betti::{betti_table, is_componentwise_linear, regularity, ModuleSpec};
use degen_core::corpus::{equigenerated_corpus, random_corpus, CorpusShape};
use degen_core::degeneration::{
    corollary_check, fiber_full_equivalence_check, fiber_full_witness, find_weight_vector,
    full_report, homogenize_ideal, lemma2_report, lemma3_report, open_question_probe,
    theorem_check, verify_weight, DegenerationReport, Finding, FindingsLog, Lemma3Report, Verdict,
};
use degen_core::{parse_input, HilbertSubject, IdealHandle, WeightVector};

use crate::render::{self, Mode};
use crate::{Command, Input, Of};

pub struct Outcome {
    pub text: String,
    pub status: u8,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, status: 0 }
    }
}

const HYPOTHESES_FAIL: u8 = 2;
const VIOLATION: u8 = 3;

fn load(input: &Input) -> Result<IdealHandle> {
    let path = input.file.display();
    let text = fs::read_to_string(&input.file).with_context(|| format!("cannot read {path}"))?;
    let file = parse_input(&text).map_err(|e| anyhow!("{path}: {e}"))?;
    let gens = file
        .ideal(&input.ideal)
        .ok_or_else(|| anyhow!("{path}: no ideal named `{}`", input.ideal))?;
    Ok(IdealHandle::new(&file.ring, gens.to_vec())?)
}

fn persist(input_findings: &std::path::Path, finding: &Finding) -> Result<()> {
    FindingsLog::new(input_findings)
        .append(finding)
        .with_context(|| format!("cannot append to {}", input_findings.display()))
}

fn status_of(verdict: Verdict) -> u8 {
    match verdict {
        Verdict::Verified => 0,
        Verdict::HypothesesFail => HYPOTHESES_FAIL,
        Verdict::ViolationFound => VIOLATION,
    }
}

fn report_outcome(input: &Input, r: DegenerationReport) -> Result<Outcome> {
    if let Some(f) = &r.finding {
        persist(&input.findings, f)?;
    }
    Ok(Outcome {
        text: render::report(&r, input.mode),
        status: status_of(r.verdict),
    })
}

pub fn run(command: Command) -> Result<Outcome> {
    match command {
        Command::Gb(input) => {
            let ideal = load(&input)?;
            let gb = ideal.gb();
            let mut out = String::new();
            if input.mode == Mode::Table {
                writeln!(out, "# reduced Groebner basis ({}), {} elements", ideal.ring().header(), gb.elements().len())?;
            }
            for g in gb.elements() {
                match input.mode {
                    Mode::Table => writeln!(out, "{g}")?,
                    Mode::Records => writeln!(out, "gb {g}")?,
                }
            }
            Ok(Outcome::ok(out))
        }
        Command::Initial(input) => {
            let init = load(&input)?.initial_ideal();
            let mut out = String::new();
            match input.mode {
                Mode::Table => writeln!(out, "{init}")?,
                Mode::Records => {
                    for m in init.generators() {
                        writeln!(out, "gen {}", init.ring().fmt_monomial(m))?;
                    }
                }
            }
            Ok(Outcome::ok(out))
        }
        Command::Betti { input, of } => {
            let ideal = load(&input)?;
            let spec = match of {
                Of::Ideal => ModuleSpec::ideal(&ideal),
                Of::Quotient => ModuleSpec::quotient(&ideal),
            };
            Ok(Outcome::ok(render::betti(&betti_table(&spec)?, input.mode)))
        }
        Command::Hilbert { input, degree } => {
            let ideal = load(&input)?;
            ideal.require_homogeneous()?;
            let init = ideal.initial_ideal();
            let mut out = String::new();
            match degree {
                Some(d) => {
                    writeln!(out, "HF(R/I, {d}) = {}", init.hilbert_function(HilbertSubject::Quotient, d))?;
                    writeln!(out, "HF(I, {d}) = {}", init.hilbert_function(HilbertSubject::Ideal, d))?;
                }
                None => {
                    let n = init.hilbert_numerator();
                    writeln!(out, "HS(R/I) = ({n}) / (1 - t)^{}", n.nvars())?;
                    writeln!(out, "codimension: {}", n.codimension())?;
                }
            }
            Ok(Outcome::ok(out))
        }
        Command::Reg(input) => {
            let ideal = load(&input)?;
            let r = regularity(&ModuleSpec::ideal(&ideal))?;
            Ok(Outcome::ok(format!("reg(I) = {r}\n")))
        }
        Command::Cwl(input) => {
            let ideal = load(&input)?;
            let r = is_componentwise_linear(&ideal)?;
            let mut out = format!("componentwise linear: {}\n", r.componentwise_linear);
            for v in &r.degrees {
                if v.linear {
                    writeln!(out, "degree {}: I_<{}> has a {}-linear resolution", v.degree, v.degree, v.degree)?;
                } else {
                    let bad: Vec<String> = v
                        .table
                        .support()
                        .into_iter()
                        .filter(|&(i, j)| j as i64 - i as i64 != v.degree as i64)
                        .map(|(i, j)| format!("({i},{j})"))
                        .collect();
                    writeln!(
                        out,
                        "degree {}: I_<{}> is not {}-linear, off-diagonal entries at {}",
                        v.degree,
                        v.degree,
                        v.degree,
                        bad.join(" ")
                    )?;
                }
            }
            writeln!(out, "note: {}", r.note)?;
            writeln!(out, "field: GF({})", ideal.ring().characteristic())?;
            Ok(Outcome::ok(out))
        }
        Command::Lemma2 { input, degree } => {
            let ideal = load(&input)?;
            let r = lemma2_report(&ideal, degree)?;
            let mut out = String::new();
            writeln!(out, "d = {degree}")?;
            writeln!(out, "i)   beta0(I_<d>) = beta0(in(I_<d>)): {}", r.cond_i)?;
            writeln!(out, "ii)  in(I_<d>) = in(I)_<d>: {}", r.cond_ii)?;
            writeln!(out, "iii) in(I_<=d) = in(I)_<=d: {}", r.cond_iii)?;
            writeln!(out, "agree: {}", r.all_agree())?;
            let mut status = 0;
            if !r.all_agree() {
                persist(&input.findings, &Finding::new("LEMMA2_DISAGREEMENT", &ideal, format!("d={degree}")))?;
                status = VIOLATION;
            }
            Ok(Outcome { text: out, status })
        }
        Command::Lemma3 { input, degree } => {
            let ideal = load(&input)?;
            match lemma3_report(&ideal, degree)? {
                Lemma3Report::PreconditionViolated(why) => Ok(Outcome {
                    text: format!("precondition violated: {why}\n"),
                    status: HYPOTHESES_FAIL,
                }),
                Lemma3Report::Checked {
                    initial_commutes,
                    betti0_equal,
                    ..
                } => {
                    let mut out = String::new();
                    writeln!(out, "d = {degree}")?;
                    writeln!(out, "in(m^d J) = m^d in(J): {initial_commutes}")?;
                    writeln!(out, "beta0(m^d J) = beta0(in(m^d J)): {betti0_equal}")?;
                    let mut status = 0;
                    if !(initial_commutes && betti0_equal) {
                        persist(&input.findings, &Finding::new("LEMMA3_FAILS", &ideal, format!("d={degree}")))?;
                        status = VIOLATION;
                    }
                    Ok(Outcome { text: out, status })
                }
            }
        }
        Command::Theorem(input) => {
            let r = theorem_check(&load(&input)?)?;
            report_outcome(&input, r)
        }
        Command::Corollary(input) => {
            let r = corollary_check(&load(&input)?)?;
            report_outcome(&input, r)
        }
        Command::Report(input) => {
            let r = full_report(&load(&input)?)?;
            report_outcome(&input, r)
        }
        Command::Probe(input) => {
            let ideal = load(&input)?;
            let p = open_question_probe(&ideal)?;
            let mut out = String::new();
            writeln!(out, "componentwise linear: {}", p.componentwise_linear)?;
            writeln!(out, "in(I) square-free: {}", p.square_free_initial)?;
            match p.h {
                Some(h) => writeln!(out, "h = reg(I) = {h}")?,
                None => writeln!(out, "h = reg(I): undefined (zero ideal)")?,
            }
            writeln!(out, "applicable: {}", p.applicable)?;
            if let Some(sf) = p.square_free_truncation {
                writeln!(out, "in(I_<=h-1) square-free: {sf}")?;
            }
            if let Some(f) = &p.finding {
                persist(&input.findings, f)?;
                writeln!(out, "counterexample recorded in {}", input.findings.display())?;
            }
            let status = if p.applicable { 0 } else { HYPOTHESES_FAIL };
            Ok(Outcome { text: out, status })
        }
        Command::Weight(input) => {
            let ideal = load(&input)?;
            let w = find_weight_vector(ideal.gb())?;
            let verified = verify_weight(ideal.gb(), &w);
            Ok(Outcome::ok(format!("w = {w}\nverified: {verified}\n")))
        }
        Command::Homogenize { input, weight } => {
            let ideal = load(&input)?;
            let w = match weight {
                Some(text) => {
                    let entries = text
                        .split(',')
                        .map(|s| s.trim().parse::<u64>().map_err(|_| anyhow!("bad weight entry `{s}`")))
                        .collect::<Result<Vec<_>>>()?;
                    if entries.len() != ideal.ring().nvars() {
                        bail!("weight has {} entries but the ring has {} variables", entries.len(), ideal.ring().nvars());
                    }
                    WeightVector::new(entries)?
                }
                None => find_weight_vector(ideal.gb())?,
            };
            let hom = homogenize_ideal(&ideal, &w)?;
            let mut out = format!("w = {w}\n");
            for h in hom {
                writeln!(out, "{h}")?;
            }
            Ok(Outcome::ok(out))
        }
        Command::Fiberfull { input, h } => {
            let ideal = load(&input)?;
            let mut out = String::new();
            match fiber_full_witness(&ideal, h)? {
                None => writeln!(out, "fiber-full up to {h}: true")?,
                Some((i, j, a, b)) => {
                    writeln!(out, "fiber-full up to {h}: false")?;
                    writeln!(out, "first difference at ({i},{j}): beta(R/I) = {a}, beta(R/in(I)) = {b}")?;
                }
            }
            Ok(Outcome::ok(out))
        }
        Command::FiberfullEquiv(input) => {
            let ideal = load(&input)?;
            let f = fiber_full_equivalence_check(&ideal)?;
            let mut out = String::new();
            writeln!(out, "condition i (I cwl, in(I) square-free): {}", f.cond_i)?;
            writeln!(out, "condition ii (in(I) cwl): {}", f.cond_ii)?;
            writeln!(out, "applicable: {}", f.applicable)?;
            writeln!(out, "fiber-full up to 3: {}", f.fiber_full_3)?;
            writeln!(out, "Betti tables equal: {}", f.full_equality)?;
            if let Some(holds) = f.holds {
                writeln!(out, "equivalence holds: {holds}")?;
            }
            if let Some(finding) = &f.finding {
                persist(&input.findings, finding)?;
            }
            let status = match f.holds {
                None => HYPOTHESES_FAIL,
                Some(true) => 0,
                Some(false) => VIOLATION,
            };
            Ok(Outcome { text: out, status })
        }
        Command::Fuzz { seed, count, findings } => fuzz(seed, count, &findings),
    }
}

fn fuzz(seed: u64, count: usize, findings: &std::path::Path) -> Result<Outcome> {
    let shape = CorpusShape::default();
    let mut failures = 0usize;
    let mut out = String::new();

    let mut lemma2_cases = 0;
    let (mut verified, mut hyp_fail, mut violated) = (0usize, 0usize, 0usize);
    let mut weights = 0;
    for ideal in random_corpus(seed, count, &shape) {
        for d in 1..=4 {
            lemma2_cases += 1;
            if !lemma2_report(&ideal, d)?.all_agree() {
                failures += 1;
                persist(findings, &Finding::new("LEMMA2_DISAGREEMENT", &ideal, format!("d={d}")))?;
            }
        }
        for r in [theorem_check(&ideal)?, corollary_check(&ideal)?] {
            match r.verdict {
                Verdict::Verified => verified += 1,
                Verdict::HypothesesFail => hyp_fail += 1,
                Verdict::ViolationFound => violated += 1,
            }
            if let Some(f) = &r.finding {
                failures += 1;
                persist(findings, f)?;
            }
        }
        let w = find_weight_vector(ideal.gb())?;
        let round_trip: Vec<_> = homogenize_ideal(&ideal, &w)?.iter().map(|h| h.at_t_one()).collect();
        if verify_weight(ideal.gb(), &w) && round_trip == ideal.gb().elements() {
            weights += 1;
        } else {
            failures += 1;
            persist(findings, &Finding::new("WEIGHT_FAILS", &ideal, format!("w={w}")))?;
        }
    }
    writeln!(out, "random corpus: seed {seed}, {count} ideals")?;
    writeln!(out, "lemma2 cases: {lemma2_cases}")?;
    writeln!(
        out,
        "theorem/corollary verdicts: {verified} verified, {hyp_fail} hypotheses fail, {violated} violations"
    )?;
    writeln!(out, "weight vectors verified: {weights}/{count}")?;

    let equi = equigenerated_corpus(seed, count.div_ceil(2), &shape);
    let mut lemma3_cases = 0;
    for ideal in &equi {
        for d in [1, 2] {
            lemma3_cases += 1;
            if lemma3_report(ideal, d)?.holds() != Some(true) {
                failures += 1;
                persist(findings, &Finding::new("LEMMA3_FAILS", ideal, format!("d={d}")))?;
            }
        }
    }
    writeln!(out, "lemma3 cases: {lemma3_cases} over {} equigenerated ideals", equi.len())?;
    writeln!(out, "failures: {failures}")?;
    Ok(Outcome {
        text: out,
        status: if failures == 0 { 0 } else { VIOLATION },
    })
}
