//! Objects, generators, layered diagrams and linear combinations.

mod catalog;
mod gen;
mod lincomb;
mod random;
mod rewrite;
mod term;

pub use catalog::{rule_catalog, rule_named, RewriteRule, RuleFamily};
pub use gen::{Gen, Obj, Wire};
pub use lincomb::LinComb;
pub use random::{random_diagram, random_equivalent, random_walk, RandomConfig};
pub use rewrite::{find_sites, rewrite_apply, Orientation, Site};
pub use term::{Diagram, Slice};

use thiserror::Error;

use crate::perm::Perm;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("interface mismatch at position {position}: expected {expected}, found {found}")]
    Interface { position: usize, expected: Obj, found: Obj },
    #[error("layer {0} has no cells")]
    EmptyLayer(usize),
    #[error("permutation of size {perm} applied to an object of size {obj}")]
    PermutationSize { perm: usize, obj: usize },
    #[error("rule {rule} does not match at slice {slice}, offset {offset}")]
    NoMatch { rule: String, slice: usize, offset: usize },
    #[error("linear combination terms disagree on type: {0}")]
    MixedTypes(String),
}

/// The permutation cobordism moving wire `j` of `n` to position `sigma(j)`,
/// as adjacent swaps found by insertion sort scanning left to right.
pub fn permutation_diagram(sigma: &Perm, n: &Obj) -> Result<Diagram, DiagramError> {
    if sigma.len() != n.len() {
        return Err(DiagramError::PermutationSize { perm: sigma.len(), obj: n.len() });
    }
    // target[k] = final position of the wire currently at k
    let mut target: Vec<usize> = sigma.images().to_vec();
    let mut wires = n.0.clone();
    let mut slices = Vec::new();
    for k in 1..target.len() {
        let mut j = k;
        while j > 0 && target[j - 1] > target[j] {
            slices.push(Slice { offset: j - 1, gen: Gen::Swap(wires[j - 1], wires[j]) });
            target.swap(j - 1, j);
            wires.swap(j - 1, j);
            j -= 1;
        }
    }
    Ok(Diagram::from_slices(n.clone(), &slices).expect("swaps type-check"))
}

/// The object `sigma_* n`: wire `j` of `n` placed at `sigma(j)`.
pub fn permute_obj(sigma: &Perm, n: &Obj) -> Obj {
    let mut out = n.0.clone();
    for (j, &w) in n.0.iter().enumerate() {
        out[sigma.apply(j)] = w;
    }
    Obj(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use Wire::{C, W};

    #[test]
    fn permutation_cobordisms() {
        let n = Obj(vec![C, W]);
        assert_eq!(permutation_diagram(&Perm::identity(2), &n).unwrap(), Diagram::identity(n.clone()));
        let t = permutation_diagram(&Perm::parse_cycles(2, "(1 2)").unwrap(), &n).unwrap();
        assert_eq!(t.layers, vec![vec![Gen::Swap(C, W)]]);

        let n5 = Obj::parse("01101").unwrap();
        let s = Perm::parse_cycles(5, "(1 2)(3 5 4)").unwrap();
        let d = permutation_diagram(&s, &n5).unwrap();
        assert!(d.validate().is_ok());
        assert_eq!(d.cod, permute_obj(&s, &n5));
        assert!(permutation_diagram(&s, &n).is_err());
    }

    #[test]
    fn permutation_composition_law() {
        let n = Obj::parse("0110").unwrap();
        let s = Perm::parse_cycles(4, "(1 3 2)").unwrap();
        let t = Perm::parse_cycles(4, "(2 4)").unwrap();
        let a = permutation_diagram(&s, &n).unwrap();
        let b = permutation_diagram(&t, &a.cod).unwrap();
        let ab = a.compose(&b).unwrap();
        let direct = permutation_diagram(&t.compose(&s).unwrap(), &n).unwrap();
        assert_eq!(ab.cod, direct.cod);
    }
}
