//! Plain, JSON and LaTeX renderings of the CLI artifacts.

use clap::ValueEnum;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::polyring::{write_grid, Polynomial, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Latex,
}

/// A matrix or vector entry: a polynomial, or its value at a fixed `q`.
pub trait Cell {
    fn plain(&self) -> String;
    fn latex(&self) -> String;
    fn json(&self) -> Value;
}

fn latex_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.to_string()
    } else {
        let sign = if r.is_negative() { "-" } else { "" };
        format!("{sign}\\frac{{{}}}{{{}}}", r.numer().abs(), r.denom())
    }
}

impl Cell for Rational {
    fn plain(&self) -> String {
        self.to_string()
    }

    fn latex(&self) -> String {
        latex_rational(self)
    }

    fn json(&self) -> Value {
        Value::String(self.to_string())
    }
}

impl Cell for Polynomial {
    fn plain(&self) -> String {
        self.to_string()
    }

    /// Ascending powers, `q^{k}` exponents, unit coefficients suppressed.
    fn latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            match (out.is_empty(), c.is_negative()) {
                (true, true) => out.push('-'),
                (true, false) => {}
                (false, true) => out.push_str(" - "),
                (false, false) => out.push_str(" + "),
            }
            if k == 0 || !mag.is_one() {
                out.push_str(&latex_rational(&mag));
            }
            match k {
                0 => {}
                1 => out.push('q'),
                _ => out.push_str(&format!("q^{{{k}}}")),
            }
        }
        out
    }

    fn json(&self) -> Value {
        json!(self.to_coeff_strings())
    }
}

struct Grid<'a>(&'a [Vec<String>]);

impl std::fmt::Display for Grid<'_> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write_grid(f, self.0)
    }
}

fn grid(cells: &[Vec<String>]) -> String {
    format!("{}\n", Grid(cells))
}

fn latex_array(cells: &[Vec<String>]) -> String {
    let ncols = cells.first().map_or(0, Vec::len);
    let rows: Vec<String> = cells.iter().map(|r| r.join(" & ")).collect();
    format!(
        "\\left( \\begin{{array}}{{{}}}\n{}\n\\end{{array}} \\right)\n",
        "c".repeat(ncols),
        rows.join(" \\\\\n")
    )
}

pub fn matrix<C: Cell>(rows: &[Vec<C>], format: Format) -> String {
    match format {
        Format::Plain => grid(&rows.iter().map(|r| r.iter().map(Cell::plain).collect()).collect::<Vec<_>>()),
        Format::Latex => latex_array(&rows.iter().map(|r| r.iter().map(Cell::latex).collect()).collect::<Vec<_>>()),
        Format::Json => {
            let v: Vec<Vec<Value>> = rows.iter().map(|r| r.iter().map(Cell::json).collect()).collect();
            json_text(&json!(v))
        }
    }
}

/// Labelled column vectors, e.g. the dimension vectors of all projectives.
/// `symbol` prefixes plain and LaTeX lines, `kind` names them in JSON.
pub fn vectors<C: Cell>(symbol: &str, kind: &str, items: &[(String, Vec<C>)], format: Format) -> String {
    match format {
        Format::Plain => items
            .iter()
            .map(|(label, v)| {
                let entries: Vec<String> = v.iter().map(Cell::plain).collect();
                format!("{symbol}({label}) = ({})\n", entries.join(", "))
            })
            .collect(),
        Format::Latex => items
            .iter()
            .map(|(label, v)| {
                let col: Vec<Vec<String>> = v.iter().map(|c| vec![c.latex()]).collect();
                format!("{symbol}({label}) = {}", latex_array(&col))
            })
            .collect(),
        Format::Json => {
            let v: Vec<Value> = items
                .iter()
                .map(|(label, v)| {
                    json!({
                        "kind": kind,
                        "vertex": label,
                        "entries": v.iter().map(Cell::json).collect::<Vec<_>>(),
                    })
                })
                .collect();
            json_text(&json!(v))
        }
    }
}

pub fn scalar<C: Cell>(c: &C, format: Format) -> String {
    match format {
        Format::Plain => format!("{}\n", c.plain()),
        Format::Latex => format!("{}\n", c.latex()),
        Format::Json => json_text(&c.json()),
    }
}

pub fn json_text(v: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}
