//! Fixed float formatting so identical runs give identical bytes.

use std::fmt::Write;

/// 17 significant digits in scientific notation; `-0` prints as `0`.
pub fn num(v: f64) -> String {
    let v = if v == 0.0 { 0.0 } else { v };
    format!("{v:.16e}")
}

/// One CSV row, `\n`-terminated.
pub fn row(out: &mut String, cells: impl IntoIterator<Item = String>) {
    let mut first = true;
    for c in cells {
        if !first {
            out.push(',');
        }
        first = false;
        out.push_str(&c);
    }
    out.push('\n');
}

pub fn comment(out: &mut String, text: &str) {
    writeln!(out, "# {text}").expect("writing to a String");
}
