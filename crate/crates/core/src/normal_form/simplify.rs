//! Deterministic clean-up with scalar-one, cell-removing rules.

use std::sync::OnceLock;

use crate::diagram::{find_sites, rewrite_apply, rule_catalog, Diagram, Orientation, RewriteRule};

const NAMES: &[&str] = &[
    "zig-zag-left",
    "zig-zag-right",
    "sing-zig-zag-left",
    "sing-zig-zag-right",
    "c-unit-left",
    "c-unit-right",
    "c-counit-left",
    "c-counit-right",
    "w-unit-left",
    "w-unit-right",
    "w-counit-left",
    "w-counit-right",
    "comult-equiv-left",
    "comult-equiv-right",
    "mult-equiv-left",
    "mult-equiv-right",
    "singcomult-equiv-left",
    "singcomult-equiv-right",
    "singmult-equiv-left",
    "singmult-equiv-right",
    "zipper-alghom-unit",
    "cozipper-coalghom-counit",
];

fn rules() -> &'static [RewriteRule] {
    static RULES: OnceLock<Vec<RewriteRule>> = OnceLock::new();
    RULES.get_or_init(|| {
        let cat = rule_catalog();
        let mut out: Vec<RewriteRule> = NAMES
            .iter()
            .map(|n| cat.iter().find(|r| r.name == *n).unwrap_or_else(|| panic!("catalog has {n}")).clone())
            .collect();
        out.extend(cat.iter().filter(|r| r.name.starts_with("swap-involution-")).cloned());
        out
    })
}

/// Applies the first matching rule at its first site until none applies.
/// Every rule used has scalar one and keeps σ.
pub fn simplify(d: &Diagram) -> Diagram {
    let mut cur = d.canonical();
    'outer: loop {
        for r in rules() {
            if let Some(&site) = find_sites(&cur, r, Orientation::Forward).first() {
                let (nd, _) = rewrite_apply(&cur, r, Orientation::Forward, site).expect("site was found");
                cur = nd.canonical();
                continue 'outer;
            }
        }
        return cur;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::parse_diagram;

    #[test]
    fn rules_are_safe() {
        for r in rules() {
            assert!(r.scalar.is_one() && !r.changes_sigma, "{}", r.name);
            assert!(r.lhs.num_cells() > r.rhs.num_cells(), "{}", r.name);
        }
    }

    #[test]
    fn removes_snakes() {
        let d = parse_diagram("(id:0 | (uC ; dC)) ; ((mC ; eC) | id:0) ; (uC | id:0) ; mC").unwrap();
        assert!(simplify(&d).structurally_eq(&parse_diagram("id:0").unwrap()));
        let keep = parse_diagram("dC ; mC").unwrap();
        assert!(simplify(&keep).structurally_eq(&keep));
    }
}
