use std::fmt::Write;

use degen_core::degeneration::{Check, DegenerationReport};
use degen_core::{BettiTable, Subject};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Mode {
    Table,
    Records,
}

/// Grid with rows indexed by `j - i` and columns by `i`; zeros print as `.`.
pub fn betti_grid(table: &BettiTable) -> String {
    if table.is_empty() {
        return match table.subject() {
            Subject::Ideal => "(zero ideal)\n".to_string(),
            Subject::Quotient => "(zero module)\n".to_string(),
        };
    }
    let cells = table.entries();
    let max_i = cells.keys().map(|k| k.0).max().unwrap_or(0);
    let rows: Vec<i64> = cells.keys().map(|&(i, j)| j as i64 - i as i64).collect();
    let (lo, hi) = (*rows.iter().min().unwrap(), *rows.iter().max().unwrap());
    let width = cells
        .values()
        .map(|v| v.to_string().len())
        .chain(std::iter::once(max_i.to_string().len()))
        .max()
        .unwrap_or(1);
    let label = lo.to_string().len().max(hi.to_string().len());
    let mut out = String::new();
    let header: Vec<String> = (0..=max_i).map(|i| format!("{i:>width$}")).collect();
    writeln!(out, "{:label$}  {}", "", header.join(" ")).unwrap();
    for r in lo..=hi {
        let row: Vec<String> = (0..=max_i)
            .map(|i| {
                let j = r + i as i64;
                let v = if j < 0 { 0 } else { table.get(i, j as u32) };
                if v == 0 {
                    format!("{:>width$}", ".")
                } else {
                    format!("{v:>width$}")
                }
            })
            .collect();
        writeln!(out, "{r:>label$}: {}", row.join(" ")).unwrap();
    }
    out
}

/// `beta <i> <j> <value>` lines sorted by `(i, j)`.
pub fn betti_records(table: &BettiTable, prefix: &str) -> String {
    let mut out = String::new();
    for (&(i, j), v) in table.entries() {
        writeln!(out, "beta{prefix} {i} {j} {v}").unwrap();
    }
    out
}

pub fn betti(table: &BettiTable, mode: Mode) -> String {
    match mode {
        Mode::Table => {
            let what = match table.subject() {
                Subject::Ideal => "I",
                Subject::Quotient => "R/I",
            };
            format!(
                "# Betti table of {what} over GF({})\n{}",
                table.characteristic(),
                betti_grid(table)
            )
        }
        Mode::Records => betti_records(table, ""),
    }
}

fn check_line(c: &Check) -> String {
    match (&c.witness, c.holds) {
        (_, true) => format!("  [ok]   {}", c.name),
        (Some(w), false) if w.starts_with(&c.name) => format!("  [FAIL] {w}"),
        (Some(w), false) => format!("  [FAIL] {}: {w}", c.name),
        (None, false) => format!("  [FAIL] {}", c.name),
    }
}

pub fn report(r: &DegenerationReport, mode: Mode) -> String {
    let mut out = String::new();
    match mode {
        Mode::Table => {
            writeln!(out, "check: {}", r.check).unwrap();
            writeln!(out, "ring: {}", r.ring).unwrap();
            writeln!(out, "field: GF({})", r.characteristic).unwrap();
            writeln!(out, "generators: {}", r.generators.join(", ")).unwrap();
            writeln!(out, "hypotheses:").unwrap();
            for c in &r.hypotheses {
                writeln!(out, "{}", check_line(c)).unwrap();
            }
            writeln!(out, "conclusions:").unwrap();
            if r.conclusions.is_empty() {
                writeln!(out, "  (not evaluated)").unwrap();
            }
            for c in &r.conclusions {
                writeln!(out, "{}", check_line(c)).unwrap();
            }
            writeln!(out, "Betti table of I:").unwrap();
            out.push_str(&betti_grid(&r.ideal_table));
            writeln!(out, "Betti table of in(I):").unwrap();
            out.push_str(&betti_grid(&r.initial_table));
            if !r.notes.is_empty() {
                writeln!(out, "notes:").unwrap();
                for n in &r.notes {
                    writeln!(out, "  - {n}").unwrap();
                }
            }
            writeln!(out, "verdict: {}", r.verdict).unwrap();
        }
        Mode::Records => {
            writeln!(out, "check {}", r.check).unwrap();
            writeln!(out, "field {}", r.characteristic).unwrap();
            for c in &r.hypotheses {
                writeln!(out, "hypothesis {} {}", c.name.replace(' ', ""), c.holds).unwrap();
            }
            for c in &r.conclusions {
                writeln!(out, "conclusion {} {}", c.name.replace(' ', ""), c.holds).unwrap();
            }
            out.push_str(&betti_records(&r.ideal_table, " ideal"));
            out.push_str(&betti_records(&r.initial_table, " initial"));
            writeln!(out, "verdict {}", r.verdict).unwrap();
        }
    }
    out
}
