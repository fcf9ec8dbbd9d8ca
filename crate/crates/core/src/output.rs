//! CSV serialization of sweep rows.

use std::io::{self, Write};

use crate::dynamics::SweepRow;

pub const HEADER: [&str; 19] = [
    "model",
    "state",
    "p",
    "theta",
    "phi",
    "B",
    "J",
    "g",
    "scaled_time",
    "concurrence",
    "eof",
    "c_l1",
    "c_r",
    "mid",
    "concurrence_analytic",
    "eof_analytic",
    "c_l1_analytic",
    "mid_analytic",
    "discrepancy",
];

/// Twelve significant digits, `%g` style: fixed notation for exponents in
/// `[-5, 12)`, scientific otherwise, trailing zeros dropped, `-0` printed as `0`.
pub fn format_number(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    let sci = format!("{x:.11e}");
    let (mantissa, exponent) = sci.split_once('e').expect("exponent in {:e} output");
    let exponent: i32 = exponent.parse().expect("integer exponent");
    if (-5..12).contains(&exponent) {
        let decimals = (11 - exponent) as usize;
        let fixed = trim_zeros(&format!("{x:.decimals$}"));
        if fixed == "-0" {
            "0".to_string()
        } else {
            fixed
        }
    } else {
        format!("{}e{exponent}", trim_zeros(mantissa))
    }
}

fn trim_zeros(s: &str) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s.to_string()
    }
}

fn optional(x: Option<f64>) -> String {
    x.map(format_number).unwrap_or_default()
}

pub fn record(row: &SweepRow) -> Vec<String> {
    let n = &row.numeric;
    let a = row.analytic.as_ref();
    let mut out = vec![row.model.name().to_string(), row.state.name().to_string()];
    out.extend(
        [
            row.p,
            row.theta,
            row.phi,
            row.b,
            row.j,
            row.g,
            row.scaled_time,
            n.concurrence,
            n.eof,
            n.c_l1,
            n.c_r,
            n.mid,
        ]
        .map(format_number),
    );
    out.extend([
        optional(a.map(|a| a.concurrence)),
        optional(a.map(|a| a.eof)),
        optional(a.map(|a| a.c_l1)),
        optional(a.map(|a| a.mid)),
        optional(row.discrepancy),
    ]);
    out
}

/// Header plus one line per row, `\n`-terminated.
pub fn write_csv<W: Write>(out: W, rows: &[SweepRow]) -> io::Result<()> {
    let mut writer = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    writer.write_record(HEADER)?;
    for row in rows {
        writer.write_record(record(row))?;
    }
    writer.flush()
}
