//! Normal-form descriptors and the block form of W→C cobordisms.

use serde::Serialize;

use crate::diagram::{permutation_diagram, Diagram, Gen, Obj, Slice, Wire};
use crate::perm::Perm;
use crate::ring::RingPoly;
use crate::topology::singular_permutation;

use super::NfError;

/// Data determining a normal form of a connected W→C cobordism.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NormalFormDescriptor {
    /// Cycles of σ in block order, each listed from the bi-web that lands
    /// on the first input of its block.
    pub cycles: Vec<Vec<usize>>,
    pub genus: u64,
    pub out_circles: usize,
    /// `σ̄`, sending source bi-web `j` to block input `σ̄(j)`.
    pub conjugator: Perm,
    pub scalar: RingPoly,
}

impl NormalFormDescriptor {
    /// Descriptor for block lengths `lengths` permuted by `conjugator`.
    pub fn from_parts(lengths: &[usize], genus: u64, out_circles: usize, conjugator: Perm) -> Result<Self, NfError> {
        let total: usize = lengths.iter().sum();
        if conjugator.len() != total || lengths.contains(&0) {
            return Err(NfError::Descriptor(format!(
                "block lengths {lengths:?} do not fit a conjugator on {} bi-webs",
                conjugator.len()
            )));
        }
        let inv = conjugator.inverse();
        let mut cycles = Vec::with_capacity(lengths.len());
        let mut start = 0;
        for &q in lengths {
            cycles.push((start..start + q).map(|p| inv.apply(p)).collect());
            start += q;
        }
        Ok(Self { cycles, genus, out_circles, conjugator, scalar: RingPoly::one() })
    }

    /// Canonical descriptor for a W→C cobordism with singular boundary
    /// permutation `sigma`: blocks by decreasing length and the
    /// lexicographically smallest conjugator.
    pub fn from_sigma(sigma: &Perm, genus: u64, out_circles: usize) -> Self {
        let lengths = sigma.cycle_type();
        let conjugator = conjugator_for(sigma, &lengths);
        Self::from_parts(&lengths, genus, out_circles, conjugator).expect("consistent by construction")
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.cycles.iter().map(Vec::len).collect()
    }

    pub fn num_biwebs(&self) -> usize {
        self.conjugator.len()
    }

    /// The permutation `σ̄⁻¹ · τ · σ̄` the built diagram should carry.
    pub fn sigma(&self) -> Perm {
        let tau = block_tau(&self.lengths());
        self.conjugator.inverse().compose(&tau.compose(&self.conjugator).expect("sizes")).expect("sizes")
    }

    pub fn validate(&self) -> Result<(), NfError> {
        let again = Self::from_parts(&self.lengths(), self.genus, self.out_circles, self.conjugator.clone())?;
        if again.cycles != self.cycles {
            return Err(NfError::Descriptor("cycle members disagree with the conjugator".into()));
        }
        Ok(())
    }
}

/// `(1 2 … q₁)(q₁+1 …)…` on consecutive blocks.
pub(crate) fn block_tau(lengths: &[usize]) -> Perm {
    let n: usize = lengths.iter().sum();
    let mut images = vec![0; n];
    let mut start = 0;
    for &q in lengths {
        for j in 0..q {
            images[start + j] = start + (j + 1) % q;
        }
        start += q;
    }
    Perm::from_images(images).expect("block cycles")
}

/// Lexicographically smallest `π` with `π ∘ σ = τ ∘ π`.
fn conjugator_for(sigma: &Perm, lengths: &[usize]) -> Perm {
    let n = sigma.len();
    let mut block_start = Vec::with_capacity(lengths.len());
    let mut s = 0;
    for &q in lengths {
        block_start.push(s);
        s += q;
    }
    let mut used = vec![false; lengths.len()];
    let mut images = vec![usize::MAX; n];
    for x in 0..n {
        if images[x] != usize::MAX {
            continue;
        }
        let mut q = 1;
        let mut y = sigma.apply(x);
        while y != x {
            q += 1;
            y = sigma.apply(y);
        }
        // the unused block of this length with the smallest first position
        let k = (0..lengths.len()).find(|&k| !used[k] && lengths[k] == q).expect("cycle type matches");
        used[k] = true;
        let mut y = x;
        for j in 0..q {
            images[y] = block_start[k] + j;
            y = sigma.apply(y);
        }
    }
    Perm::from_images(images).expect("bijective")
}

/// The block part `D ∘ C ∘ B ∘ (∐ A(q_k))` as slices on `W^Σq`.
fn block_slices(lengths: &[usize], genus: u64, out_circles: usize) -> Vec<Slice> {
    let mut out = Vec::new();
    for (k, &q) in lengths.iter().enumerate() {
        for _ in 1..q {
            out.push(Slice { offset: k, gen: Gen::MultW });
        }
        out.push(Slice { offset: k, gen: Gen::Cozip });
    }
    if lengths.is_empty() {
        out.push(Slice { offset: 0, gen: Gen::UnitC });
    }
    for _ in 1..lengths.len() {
        out.push(Slice { offset: 0, gen: Gen::MultC });
    }
    for _ in 0..genus {
        out.push(Slice { offset: 0, gen: Gen::ComultC });
        out.push(Slice { offset: 0, gen: Gen::MultC });
    }
    if out_circles == 0 {
        out.push(Slice { offset: 0, gen: Gen::CounitC });
    }
    for _ in 1..out_circles {
        out.push(Slice { offset: 0, gen: Gen::ComultC });
    }
    out
}

fn webs(n: usize) -> Obj {
    Obj(vec![Wire::W; n])
}

/// Builds the normal-form diagram of `desc` (the scalar is not part of it).
pub fn nf_build(desc: &NormalFormDescriptor) -> Result<Diagram, NfError> {
    desc.validate()?;
    let n = desc.num_biwebs();
    let perm = permutation_diagram(&desc.conjugator, &webs(n)).expect("sizes agree");
    let blocks = Diagram::from_slices(webs(n), &block_slices(&desc.lengths(), desc.genus, desc.out_circles))
        .expect("blocks type-check");
    Ok(perm.compose(&blocks).expect("webs to webs").slide())
}

/// The singular boundary permutation of the block part alone.
pub fn standard_tau(desc: &NormalFormDescriptor) -> Perm {
    let lengths = desc.lengths();
    let n: usize = lengths.iter().sum();
    let blocks = Diagram::from_slices(webs(n), &block_slices(&lengths, desc.genus, desc.out_circles))
        .expect("blocks type-check");
    singular_permutation(&blocks).0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::parse_diagram;
    use crate::topology::invariants;

    fn desc(lengths: &[usize], g: u64, m: usize) -> NormalFormDescriptor {
        let n = lengths.iter().sum();
        NormalFormDescriptor::from_parts(lengths, g, m, Perm::identity(n)).unwrap()
    }

    #[test]
    fn small_builds() {
        assert!(nf_build(&desc(&[], 0, 1)).unwrap().structurally_eq(&parse_diagram("uC").unwrap()));
        assert!(nf_build(&desc(&[1], 0, 1)).unwrap().structurally_eq(&parse_diagram("zs").unwrap()));
        assert!(nf_build(&desc(&[], 1, 0)).unwrap().structurally_eq(&parse_diagram("uC ; dC ; mC ; eC").unwrap()));
        let comb = nf_build(&desc(&[3], 0, 1)).unwrap();
        assert!(comb.structurally_eq(&parse_diagram("(mW | id:1) ; mW ; zs").unwrap()));
    }

    #[test]
    fn tau_values() {
        assert_eq!(standard_tau(&desc(&[3], 0, 1)).to_string(), "(1 2 3)");
        let t = standard_tau(&desc(&[1, 1], 0, 1));
        assert!(t.is_identity() && t.len() == 2);
        assert!(standard_tau(&desc(&[], 2, 3)).is_empty());
        for lengths in [vec![2, 1], vec![3, 2, 2], vec![4], vec![1, 1, 1]] {
            assert_eq!(standard_tau(&desc(&lengths, 1, 2)), block_tau(&lengths));
        }
    }

    #[test]
    fn conjugator_realizes_sigma() {
        let sigma = Perm::parse_cycles(5, "(1 4)(2 5 3)").unwrap();
        let d = NormalFormDescriptor::from_sigma(&sigma, 2, 3);
        assert_eq!(d.lengths(), vec![3, 2]);
        assert_eq!(d.sigma(), sigma);
        let built = nf_build(&d).unwrap();
        let inv = invariants(&built).unwrap();
        assert_eq!(inv.sigma, sigma);
        assert_eq!(inv.components.len(), 1);
        assert_eq!(inv.components[0].genus, 2);
        assert_eq!(built.cod.len(), 3);
    }

    #[test]
    fn conjugator_is_lexicographically_smallest() {
        let sigma = Perm::parse_cycles(4, "(1 3)(2 4)").unwrap();
        let d = NormalFormDescriptor::from_sigma(&sigma, 0, 1);
        // brute force over all conjugators
        let mut best: Option<Vec<usize>> = None;
        let tau = block_tau(&[2, 2]);
        for p in all_perms(4) {
            let pi = Perm::from_images(p.clone()).unwrap();
            if pi.compose(&sigma).unwrap() == tau.compose(&pi).unwrap() && best.as_ref().is_none_or(|b| p < *b) {
                best = Some(p);
            }
        }
        assert_eq!(d.conjugator.images(), best.unwrap().as_slice());
    }

    fn all_perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in all_perms(n - 1) {
            for k in 0..n {
                let mut q = p.clone();
                q.insert(k, n - 1);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn inconsistent_descriptor_rejected() {
        let mut d = desc(&[2, 1], 0, 1);
        d.cycles.swap(0, 1);
        assert!(nf_build(&d).is_err());
        assert!(NormalFormDescriptor::from_parts(&[2], 0, 1, Perm::identity(3)).is_err());
    }
}
