use std::fmt::Write;

use num_complex::Complex64 as C64;

use crate::graph::WeightedDigraph;

/// Formats `x` with `sig` significant digits, trailing zeros trimmed, in the
/// style of C's `%g`.
pub fn format_significant(x: f64, sig: usize) -> String {
    if x == 0.0 || !x.is_finite() {
        return if x == 0.0 { "0".to_string() } else { x.to_string() };
    }
    let sig = sig.max(1);
    // round first so that e.g. 9.999995 is classified with exponent 1
    let sci = format!("{:.*e}", sig - 1, x);
    let (mantissa, exp) = sci.split_once('e').unwrap();
    let exp: i32 = exp.parse().unwrap();
    if exp < -4 || exp >= sig as i32 {
        format!("{}e{}", trim_zeros(mantissa), exp)
    } else {
        let decimals = (sig as i32 - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{:.*}", decimals, x)).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// `a+bi` with six significant digits in each part.
pub fn format_weight(w: C64) -> String {
    let re = format_significant(w.re, 6);
    let im = format_significant(w.im.abs(), 6);
    let sign = if w.im.is_sign_negative() && w.im != 0.0 { '-' } else { '+' };
    format!("{re}{sign}{im}i")
}

/// Graphviz DOT text: vertices `v1..vn`, one labelled line per edge in
/// `(origin, terminus)` order.
pub fn export_dot(g: &WeightedDigraph) -> String {
    let mut s = String::from("digraph G {\n");
    for v in 0..g.n_vertices() {
        writeln!(s, "  v{};", v + 1).unwrap();
    }
    for e in g.edges() {
        writeln!(
            s, "  v{} -> v{} [label=\"{}\"];",
            e.origin + 1, e.terminus + 1, format_weight(e.weight),
        ).unwrap();
    }
    s.push_str("}\n");
    s
}
