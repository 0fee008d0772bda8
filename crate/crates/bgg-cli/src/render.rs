//! Text and graph rendering.

use std::fmt::Write;

use bgg_core::chevalley::{cmp_mono, Uea};
use bgg_core::kostant::BggDiagram;
use bgg_core::rootcore::{RootSystem, Weight, WeylWord};
use bgg_core::Rat;
use num_traits::{One, Signed};

use crate::docs::rat_to_string;

/// `e` for the identity, otherwise `s1 s3 s2`-style reduced words
/// (1-based generator indices).
pub fn render_word(w: &WeylWord) -> String {
    if w.is_empty() {
        return String::from("e");
    }
    w.0.iter().map(|&i| format!("s{}", i + 1)).collect::<Vec<_>>().join(" ")
}

/// Fundamental coordinates as `[a,b,...]`.
pub fn render_weight_fundamental(rs: &RootSystem, w: &Weight) -> String {
    let coords = rs.to_fundamental(w);
    format!("[{}]", coords.iter().map(rat_to_string).collect::<Vec<_>>().join(","))
}

/// Simple-root coordinates as `[a,b,...]`.
pub fn render_weight_simple(w: &Weight) -> String {
    format!("[{}]", w.coords.iter().map(rat_to_string).collect::<Vec<_>>().join(","))
}

fn render_mono(m: &[u32]) -> String {
    let parts: Vec<String> = m
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| {
            if e == 1 {
                format!("x{}", i + 1)
            } else {
                format!("x{}^{}", i + 1, e)
            }
        })
        .collect();
    if parts.is_empty() {
        String::from("1")
    } else {
        parts.join(" ")
    }
}

/// Human-readable PBW element over generators `x1..xn`, leading term first.
pub fn render_uea(u: &Uea) -> String {
    if u.is_zero() {
        return String::from("0");
    }
    let mut terms: Vec<(&Vec<u32>, &Rat)> = u.terms.iter().collect();
    terms.sort_by(|(a, _), (b, _)| cmp_mono(b, a));
    let mut out = String::new();
    for (idx, (m, c)) in terms.iter().enumerate() {
        let mag = c.abs();
        let sign = c.is_negative();
        if idx == 0 {
            if sign {
                out.push('-');
            }
        } else if sign {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let mono = render_mono(m);
        if mag.is_one() && mono != "1" {
            out.push_str(&mono);
        } else if mono == "1" {
            out.push_str(&rat_to_string(&mag));
        } else {
            let _ = write!(out, "{} {}", rat_to_string(&mag), mono);
        }
    }
    out
}

/// Graph-description output with node labels `w / weight / rank` and edge
/// labels `order: symbol`.
pub fn diagram_dot(rs: &RootSystem, d: &BggDiagram) -> String {
    let mut out = String::new();
    out.push_str("digraph bgg {\n  rankdir=LR;\n  node [shape=box];\n");
    for (i, n) in d.nodes.iter().enumerate() {
        let _ = writeln!(
            out,
            "  n{} [label=\"{} / {} / {}\"];",
            i,
            render_word(&n.word),
            render_weight_fundamental(rs, &n.bundle_weight),
            n.rank
        );
    }
    for a in &d.arrows {
        let _ = writeln!(
            out,
            "  n{} -> n{} [label=\"{}: {}\"];",
            a.src,
            a.dst,
            a.order,
            render_uea(&a.symbol)
        );
    }
    out.push_str("}\n");
    out
}

pub fn diagram_text(rs: &RootSystem, d: &BggDiagram) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "operator diagram for {}{}  lambda={}",
        rs.label().letter(),
        rs.rank(),
        render_weight_fundamental(rs, &d.lambda)
    );
    let _ = writeln!(out, "nodes: {}   arrows: {}", d.nodes.len(), d.arrows.len());
    for (i, n) in d.nodes.iter().enumerate() {
        let _ = writeln!(
            out,
            "  node {:>2}  len {}  w = {:<12} bundle weight {} (simple {})  rank {}",
            i,
            n.length,
            render_word(&n.word),
            render_weight_fundamental(rs, &n.bundle_weight),
            render_weight_simple(&n.bundle_weight),
            n.rank
        );
    }
    for a in &d.arrows {
        let _ = writeln!(
            out,
            "  arrow n{} -> n{}  order {}  symbol {}",
            a.src,
            a.dst,
            a.order,
            render_uea(&a.symbol)
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use bgg_core::chevalley::{Chevalley, Side, Uea};
    use bgg_core::rat_int;
    use bgg_core::rootcore::{ParabolicSubset, TypeLabel};

    #[test]
    fn uea_rendering() {
        let rs = RootSystem::new(TypeLabel::A, 2).unwrap();
        let chev = Chevalley::new(&rs).unwrap();
        let nil = chev.nilpotent(&rs, &ParabolicSubset::borel(2), Side::Minus);
        let x = Uea::generator(&nil, 0);
        let y = Uea::generator(&nil, 1);
        let z = Uea::generator(&nil, 2);
        let elem = x.mul(&y, &nil).scale(&rat_int(-1)).sub(&z);
        assert_eq!(render_uea(&elem), "-x1 x2 - x3");
        assert_eq!(render_uea(&x.mul(&x, &nil)), "x1^2");
    }
}
