//! The relation set as rewrite rules `lhs = scalar · rhs`.

use std::sync::OnceLock;

use crate::dsl::parse_diagram;
use crate::ring::RingPoly;

use super::{Diagram, Gen, Obj, Slice, Wire};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RuleFamily {
    CircleFrobenius,
    WebFrobenius,
    Zipper,
    Local,
    ZigZag,
    Pairing,
    Reexpression,
    GenusOne,
    Structural,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteRule {
    pub name: String,
    pub family: RuleFamily,
    pub lhs: Diagram,
    pub rhs: Diagram,
    /// `lhs = scalar · rhs`
    pub scalar: RingPoly,
    /// Whether the two sides have different singular boundary permutations.
    pub changes_sigma: bool,
}

fn rule(name: &str, family: RuleFamily, lhs: &str, rhs: &str, scalar: RingPoly) -> RewriteRule {
    let lhs = parse_diagram(lhs).unwrap_or_else(|e| panic!("{name} lhs: {e}"));
    let rhs = parse_diagram(rhs).unwrap_or_else(|e| panic!("{name} rhs: {e}"));
    assert_eq!((&lhs.dom, &lhs.cod), (&rhs.dom, &rhs.cod), "{name} sides differ in type");
    RewriteRule { name: name.to_string(), family, lhs: lhs.slide(), rhs: rhs.slide(), scalar, changes_sigma: false }
}

fn one() -> RingPoly {
    RingPoly::one()
}

fn frobenius_family(out: &mut Vec<RewriteRule>, x: char) {
    use RuleFamily::*;
    let family = if x == 'C' { CircleFrobenius } else { WebFrobenius };
    let p = if x == 'C' { "c" } else { "w" };
    let b = if x == 'C' { "0" } else { "1" };
    let (m, d, u, e) = (format!("m{x}"), format!("d{x}"), format!("u{x}"), format!("e{x}"));
    let id = format!("id:{b}");
    let sw = format!("sw:{b}{b}");
    let mut add = |name: &str, l: String, r: String| out.push(rule(&format!("{p}-{name}"), family, &l, &r, one()));
    add("assoc", format!("({m} | {id}) ; {m}"), format!("({id} | {m}) ; {m}"));
    add("unit-left", format!("({u} | {id}) ; {m}"), id.clone());
    add("unit-right", format!("({id} | {u}) ; {m}"), id.clone());
    add("coassoc", format!("{d} ; ({d} | {id})"), format!("{d} ; ({id} | {d})"));
    add("counit-left", format!("{d} ; ({e} | {id})"), id.clone());
    add("counit-right", format!("{d} ; ({id} | {e})"), id.clone());
    add("frobenius-left", format!("({id} | {d}) ; ({m} | {id})"), format!("{m} ; {d}"));
    add("frobenius-right", format!("({d} | {id}) ; ({id} | {m})"), format!("{m} ; {d}"));
    if x == 'C' {
        add("commutative", format!("{sw} ; {m}"), m.clone());
        add("cocommutative", format!("{d} ; {sw}"), d.clone());
    } else {
        add("symmetric", format!("{sw} ; {m} ; {e}"), format!("{m} ; {e}"));
        add("cosymmetric", format!("{u} ; {d} ; {sw}"), format!("{u} ; {d}"));
    }
}

fn relations(out: &mut Vec<RewriteRule>) {
    use RuleFamily::*;
    let mi = -RingPoly::i();
    let m1 = RingPoly::from_int(-1);
    let mut add = |name: &str, family: RuleFamily, l: &str, r: &str, s: RingPoly| out.push(rule(name, family, l, r, s));

    add("zipper-alghom-mult", Zipper, "mC ; z", "(z | z) ; mW", one());
    add("zipper-alghom-unit", Zipper, "uC ; z", "uW", one());
    add("cozipper-dual", Zipper, "(id:0 | zs) ; mC ; eC", "(z | id:1) ; mW ; eW", one());
    add("center", Zipper, "(id:1 | z) ; mW", "(id:1 | z) ; sw:11 ; mW", one());
    add("cozipper-coalghom-comult", Zipper, "zs ; dC", "dW ; (zs | zs)", one());
    add("cozipper-coalghom-counit", Zipper, "zs ; eC", "eW", one());

    add("local-zip-cozip", Local, "z ; zs", "id:0", mi.clone());
    add("local-cozip-zip", Local, "zs ; z", "id:1", mi);

    add("zig-zag-left", ZigZag, "(id:0 | (uC ; dC)) ; ((mC ; eC) | id:0)", "id:0", one());
    add("zig-zag-right", ZigZag, "((uC ; dC) | id:0) ; (id:0 | (mC ; eC))", "id:0", one());
    add("sing-zig-zag-left", ZigZag, "(id:1 | (uW ; dW)) ; ((mW ; eW) | id:1)", "id:1", one());
    add("sing-zig-zag-right", ZigZag, "((uW ; dW) | id:1) ; (id:1 | (mW ; eW))", "id:1", one());

    add("cozipper-pairing", Pairing, "(zs | id:0) ; mC ; eC", "(id:1 | z) ; mW ; eW", one());
    add("cozipper-copairing-left", Pairing, "uC ; dC ; (z | id:0)", "uW ; dW ; (id:1 | zs)", one());
    add("cozipper-copairing-right", Pairing, "uC ; dC ; (id:0 | z)", "uW ; dW ; (zs | id:1)", one());

    add("singcomult-equiv-left", Reexpression, "((uW ; dW) | id:1) ; (id:1 | mW)", "dW", one());
    add("singcomult-equiv-right", Reexpression, "(id:1 | (uW ; dW)) ; (mW | id:1)", "dW", one());
    add("comult-equiv-left", Reexpression, "((uC ; dC) | id:0) ; (id:0 | mC)", "dC", one());
    add("comult-equiv-right", Reexpression, "(id:0 | (uC ; dC)) ; (mC | id:0)", "dC", one());
    add("singmult-equiv-left", Reexpression, "(id:1 | dW) ; ((mW ; eW) | id:1)", "mW", one());
    add("singmult-equiv-right", Reexpression, "(dW | id:1) ; (id:1 | (mW ; eW))", "mW", one());
    add("mult-equiv-left", Reexpression, "(id:0 | dC) ; ((mC ; eC) | id:0)", "mC", one());
    add("mult-equiv-right", Reexpression, "(dC | id:0) ; (id:0 | (mC ; eC))", "mC", one());
    add("weak-com", Reexpression, "(z | id:1) ; mW", "(z | id:1) ; sw:11 ; mW", one());
    add("weak-cocom", Reexpression, "dW ; (zs | id:1)", "dW ; sw:11 ; (zs | id:1)", one());

    add("sing-genus-one-comult", GenusOne, "dW ; mW ; dW", "dW ; ((dW ; mW) | id:1)", one());
    add("sing-genus-one-mult", GenusOne, "mW ; dW ; mW", "((dW ; mW) | id:1) ; mW", one());
    add("genus-one1", GenusOne, "dC ; mC ; dC", "dC ; ((dC ; mC) | id:0)", one());
    add("genus-one2", GenusOne, "mC ; dC ; mC", "((dC ; mC) | id:0) ; mC", one());
    add("genus-one-sign", GenusOne, "dW ; ((zs ; dC ; mC ; z ; eW) | id:1)", "dW ; mW", m1.clone());
    add("remove-sing-genusop-left", GenusOne, "dW ; mW ; zs", "zs ; dC ; mC ; z ; zs", m1.clone());
    add("remove-sing-genusop-right", GenusOne, "z ; dW ; mW", "z ; zs ; dC ; mC ; z", m1);
}

fn wire_name(w: Wire) -> char {
    w.bit()
}

/// `x ⊗ a -> a ⊗ x` as adjacent swaps moving the wire `x` rightwards.
fn braid_right(x: Wire, a: &[Wire]) -> Vec<Slice> {
    (0..a.len()).map(|k| Slice { offset: k, gen: Gen::Swap(x, a[k]) }).collect()
}

/// `a ⊗ x -> x ⊗ a` as adjacent swaps moving `x` leftwards.
fn braid_left(a: &[Wire], x: Wire) -> Vec<Slice> {
    (0..a.len()).rev().map(|k| Slice { offset: k, gen: Gen::Swap(a[k], x) }).collect()
}

fn from_slices(dom: Vec<Wire>, slices: Vec<Slice>) -> Diagram {
    Diagram::from_slices(Obj(dom), &slices).expect("structural rule sides type-check")
}

fn structural(out: &mut Vec<RewriteRule>) {
    let wires = [Wire::C, Wire::W];
    for &x in &wires {
        for &y in &wires {
            let lhs = from_slices(vec![x, y], vec![Slice { offset: 0, gen: Gen::Swap(x, y) }, Slice { offset: 0, gen: Gen::Swap(y, x) }]);
            let rhs = Diagram::identity(Obj(vec![x, y]));
            out.push(structural_rule(format!("swap-involution-{}{}", wire_name(x), wire_name(y)), lhs, rhs));
        }
    }
    let cells: Vec<Gen> = Gen::ALL.iter().copied().filter(|g| !g.is_identity()).collect();
    for &g in &cells {
        let (a, b) = (g.dom(), g.cod());
        for &x in &wires {
            // (g | x) ; braid(b, x) = braid(a, x) ; (x | g)
            let mut l = vec![Slice { offset: 0, gen: g }];
            l.extend(braid_left(b, x));
            let mut r = braid_left(a, x);
            r.push(Slice { offset: 1, gen: g });
            let dom: Vec<Wire> = a.iter().copied().chain([x]).collect();
            out.push(structural_rule(
                format!("naturality-right-{}-{}", g.symbol(), wire_name(x)),
                from_slices(dom, l),
                from_slices(a.iter().copied().chain([x]).collect(), r),
            ));
            // (x | g) ; braid(x, b) = braid(x, a) ; (g | x)
            let mut l = vec![Slice { offset: 1, gen: g }];
            l.extend(braid_right(x, b));
            let mut r = braid_right(x, a);
            r.push(Slice { offset: 0, gen: g });
            let dom: Vec<Wire> = [x].into_iter().chain(a.iter().copied()).collect();
            out.push(structural_rule(
                format!("naturality-left-{}-{}", g.symbol(), wire_name(x)),
                from_slices(dom.clone(), l),
                from_slices(dom, r),
            ));
        }
    }
    for &g in &cells {
        for &h in &cells {
            // g then h beside it, versus h first
            let dom: Vec<Wire> = g.dom().iter().chain(h.dom()).copied().collect();
            let l = vec![Slice { offset: 0, gen: g }, Slice { offset: g.cod().len(), gen: h }];
            let r = vec![Slice { offset: g.dom().len(), gen: h }, Slice { offset: 0, gen: g }];
            out.push(structural_rule(
                format!("interchange-{}-{}", g.symbol(), h.symbol()),
                from_slices(dom.clone(), l),
                from_slices(dom, r),
            ));
        }
    }
}

fn structural_rule(name: String, lhs: Diagram, rhs: Diagram) -> RewriteRule {
    assert_eq!((&lhs.dom, &lhs.cod), (&rhs.dom, &rhs.cod), "{name} sides differ in type");
    RewriteRule { name, family: RuleFamily::Structural, lhs, rhs, scalar: one(), changes_sigma: false }
}

fn build() -> Vec<RewriteRule> {
    let mut out = Vec::new();
    frobenius_family(&mut out, 'C');
    frobenius_family(&mut out, 'W');
    relations(&mut out);
    structural(&mut out);
    for r in &mut out {
        r.changes_sigma = r.name == "local-cozip-zip";
    }
    out
}

/// The fixed rule catalog.
pub fn rule_catalog() -> &'static [RewriteRule] {
    static CATALOG: OnceLock<Vec<RewriteRule>> = OnceLock::new();
    CATALOG.get_or_init(build)
}

pub fn rule_named(name: &str) -> Option<RewriteRule> {
    rule_catalog().iter().find(|r| r.name == name).cloned()
}
