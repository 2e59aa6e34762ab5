use crate::diagram::{Diagram, LinComb, Obj};
use crate::ring::RingPoly;

fn id_text(wires: &[crate::diagram::Wire]) -> String {
    format!("id:{}", Obj(wires.to_vec()))
}

/// Sliding-form text: one non-identity cell per layer.
pub fn print_diagram(d: &Diagram) -> String {
    let slices = d.slices();
    if slices.is_empty() {
        return id_text(&d.dom.0);
    }
    let mut cur = d.dom.0.clone();
    let mut layers = Vec::with_capacity(slices.len());
    for s in &slices {
        let mut parts = Vec::with_capacity(3);
        if s.offset > 0 {
            parts.push(id_text(&cur[..s.offset]));
        }
        parts.push(s.gen.symbol());
        let end = s.offset + s.in_len();
        if end < cur.len() {
            parts.push(id_text(&cur[end..]));
        }
        layers.push(parts.join(" | "));
        cur = s.apply(&cur).expect("valid diagram");
    }
    layers.join(" ; ")
}

fn coeff_prefix(c: &RingPoly) -> String {
    if c.is_one() {
        return String::new();
    }
    if c == &RingPoly::i() {
        return "i*".into();
    }
    if let Some(g) = c.as_constant() {
        if g.im == 0.into() && g.re > 0.into() {
            return format!("{}*", g.re);
        }
    }
    format!("({})*", c.to_text())
}

/// Canonical text of a linear combination.
pub fn print(lc: &LinComb) -> String {
    if lc.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (c, d)) in lc.terms().iter().enumerate() {
        let body = print_diagram(d);
        // parenthesize so that a following ';' cannot extend the term
        let needs_parens = body.contains(';') && !c.is_one();
        let body = if needs_parens { format!("({body})") } else { body };
        if k == 0 {
            out.push_str(&coeff_prefix(c));
        } else if c.reads_negative() {
            out.push_str(" - ");
            out.push_str(&coeff_prefix(&-c));
        } else {
            out.push_str(" + ");
            out.push_str(&coeff_prefix(c));
        }
        out.push_str(&body);
    }
    out
}
