//! Plain-text rendering: vertex lists, a 2-D staircase sketch, verdicts.

use std::fmt::Write;

use num_traits::{One, ToPrimitive};
use pshdiag_core::{DecompositionCertificate, Diagram, NewtonNumber, Point, Rational, Verdict};

use crate::Report;

/// Sketches are at most this many cells wide and tall.
const MAX_CELLS: i64 = 20;

struct Style {
    color: bool,
}

impl Style {
    fn paint(&self, code: &str, s: &str) -> String {
        if self.color {
            format!("\x1b[{code}m{s}\x1b[0m")
        } else {
            s.to_string()
        }
    }

    fn good(&self, s: &str) -> String {
        self.paint("32", s)
    }

    fn bad(&self, s: &str) -> String {
        self.paint("31", s)
    }

    fn vertex(&self) -> String {
        self.paint("1;33", "*")
    }
}

pub(crate) fn text(report: &Report, color: bool) -> String {
    let style = Style { color };
    let mut out = String::new();
    match report {
        Report::Diagram(g) => diagram_block(&mut out, &style, g),
        Report::Lelong { weight, value } => {
            let a = weight.coords().iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
            writeln!(out, "lelong number along a = ({a}): {value}").unwrap();
        }
        Report::Sum { a, b, sum } => {
            writeln!(out, "{a} + {b}").unwrap();
            diagram_block(&mut out, &style, sum);
        }
        Report::Homothetic { a, b, witness } => match witness {
            Some(w) => writeln!(out, "{a} = {} * {b} + {}", w.c, w.x).unwrap(),
            None => writeln!(out, "{a} is not a positive homothetic translate of {b}").unwrap(),
        },
        Report::Decompose { diagram, certificate } => {
            diagram_block(&mut out, &style, diagram);
            certificate_block(&mut out, &style, certificate);
        }
        Report::Classify(r) => {
            writeln!(out, "input ({} polynomial(s) in {} variables):", r.input.polys().len(), r.input.dim()).unwrap();
            for p in r.input.polys() {
                writeln!(out, "  {p}").unwrap();
            }
            diagram_block(&mut out, &style, &r.diagram);
            certificate_block(&mut out, &style, &r.certificate);
            let verdict = match r.verdict {
                Verdict::Extreme => style.good(r.verdict.as_str()),
                Verdict::NotExtreme => style.bad(r.verdict.as_str()),
            };
            writeln!(out, "verdict: {verdict}").unwrap();
            writeln!(out, "caveat: {}", r.caveat).unwrap();
        }
        Report::NewtonNumber { diagram, value } => match value {
            NewtonNumber::Finite(v) => writeln!(out, "newton number of {diagram}: {v}").unwrap(),
            NewtonNumber::Infinite => {
                writeln!(out, "newton number of {diagram}: infinite (the diagram misses a coordinate axis)").unwrap()
            }
        },
        Report::Substitute(u) => {
            for p in u.polys() {
                writeln!(out, "{p}").unwrap();
            }
            if let Ok(g) = u.diagram() {
                diagram_block(&mut out, &style, &g);
            }
        }
        Report::Indicator { t, value } => {
            let t = t.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
            writeln!(out, "indicator at t = ({t}): {value}").unwrap();
        }
    }
    out
}

fn certificate_block(out: &mut String, style: &Style, c: &DecompositionCertificate) {
    match c {
        DecompositionCertificate::Decomposable { left, right, method } => {
            writeln!(out, "{} ({}, verified)", style.bad("decomposable"), method.as_str()).unwrap();
            writeln!(out, "  left:  {left}").unwrap();
            writeln!(out, "  right: {right}").unwrap();
        }
        DecompositionCertificate::Indecomposable { method, detail } => {
            writeln!(out, "{} ({})", style.good("indecomposable"), method.as_str()).unwrap();
            writeln!(out, "  {detail}").unwrap();
        }
    }
}

fn diagram_block(out: &mut String, style: &Style, g: &Diagram) {
    writeln!(out, "diagram in dimension {} with {} vertex(es):", g.dim(), g.generators().len()).unwrap();
    for v in g.generators() {
        writeln!(out, "  {v}").unwrap();
    }
    if g.dim() == 2 {
        staircase(out, style, g);
    }
}

/// Grid sketch of a planar diagram: `*` vertex, `#` inside, `.` outside.
fn staircase(out: &mut String, style: &Style, g: &Diagram) {
    let top = g
        .generators()
        .iter()
        .flat_map(|p| p.coords().iter())
        .max()
        .map(|m| m.ceil().to_integer())
        .and_then(|m| m.to_i64())
        .unwrap_or(0)
        + 1;
    let top = top.max(2);
    let cells = top.min(MAX_CELLS);
    let step = Rational::new(top.into(), cells.into());
    writeln!(out).unwrap();
    for row in (0..=cells).rev() {
        let y = &step * Rational::from_integer(row.into());
        let mut line = String::from("  ");
        for col in 0..=cells {
            let x = &step * Rational::from_integer(col.into());
            let p = Point::new(vec![x, y.clone()]).expect("nonnegative grid point");
            if g.generators().contains(&p) {
                line.push_str(&style.vertex());
            } else if g.contains(&p).expect("planar point") {
                line.push('#');
            } else {
                line.push('.');
            }
        }
        writeln!(out, "{line}").unwrap();
    }
    if !step.is_one() {
        writeln!(out, "  (one cell = {step})").unwrap();
    }
}
