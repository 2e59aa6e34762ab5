//! Random diagrams and random rewrite walks.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::ring::RingPoly;

use super::{find_sites, rewrite_apply, rule_catalog, Diagram, Gen, Obj, Orientation, Site, Slice, Wire};

#[derive(Clone, Debug)]
pub struct RandomConfig {
    /// Widest interface a generated or rewritten diagram may have.
    pub max_width: usize,
    /// Most slices a rewritten diagram may have.
    pub max_slices: usize,
    /// Widest random source object.
    pub max_boundary: usize,
    /// Whether walks may use rules whose sides differ in singular boundary permutation.
    pub allow_sigma_changing: bool,
}

impl Default for RandomConfig {
    fn default() -> Self {
        Self { max_width: 8, max_slices: 40, max_boundary: 3, allow_sigma_changing: false }
    }
}

/// One step of a rewrite walk.
#[derive(Clone, Debug)]
pub struct Step {
    pub rule: String,
    pub orientation: Orientation,
    pub site: Site,
    pub scalar: RingPoly,
}

/// A random valid diagram with `cells` non-identity cells.
pub fn random_diagram<R: Rng + ?Sized>(rng: &mut R, cells: usize, cfg: &RandomConfig) -> Diagram {
    let width = rng.gen_range(0..=cfg.max_boundary.min(cfg.max_width));
    let dom: Vec<Wire> = (0..width).map(|_| if rng.gen_bool(0.5) { Wire::W } else { Wire::C }).collect();
    let mut cur = dom.clone();
    let mut slices = Vec::with_capacity(cells);
    let gens: Vec<Gen> = Gen::ALL.iter().copied().filter(|g| !g.is_identity()).collect();
    for _ in 0..cells {
        let mut options: Vec<Slice> = Vec::new();
        for &g in &gens {
            let (i, o) = (g.dom().len(), g.cod().len());
            if cur.len() + o > cfg.max_width + i || cur.len() < i {
                continue;
            }
            for off in 0..=cur.len() - i {
                if &cur[off..off + i] == g.dom() {
                    options.push(Slice { offset: off, gen: g });
                }
            }
        }
        let Some(&s) = options.choose(rng) else { break };
        cur = s.apply(&cur).expect("chosen to fit");
        slices.push(s);
    }
    Diagram::from_slices(Obj(dom), &slices).expect("generated slices type-check")
}

/// Performs `steps` random rewrites; steps with nothing applicable are skipped.
pub fn random_walk(d: &Diagram, steps: usize, seed: u64, cfg: &RandomConfig) -> (Diagram, RingPoly, Vec<Step>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cur = d.clone();
    let mut scalar = RingPoly::one();
    let mut log = Vec::new();
    let rules: Vec<_> = rule_catalog().iter().filter(|r| cfg.allow_sigma_changing || !r.changes_sigma).collect();
    for _ in 0..steps {
        let mut candidates = Vec::new();
        for r in &rules {
            for o in [Orientation::Forward, Orientation::Reverse] {
                let target = if o == Orientation::Forward { &r.rhs } else { &r.lhs };
                let source = if o == Orientation::Forward { &r.lhs } else { &r.rhs };
                let grow = target.slices().len().saturating_sub(source.slices().len());
                if cur.slices().len() + grow > cfg.max_slices {
                    continue;
                }
                let sites: Vec<Site> = find_sites(&cur, r, o)
                    .into_iter()
                    .filter(|&s| target.width() + cur.width() <= cfg.max_width + source.dom.len() || {
                        rewrite_apply(&cur, r, o, s).map(|(nd, _)| nd.width() <= cfg.max_width).unwrap_or(false)
                    })
                    .collect();
                if !sites.is_empty() {
                    candidates.push((*r, o, sites));
                }
            }
        }
        let Some((r, o, sites)) = candidates.choose(&mut rng) else { continue };
        let site = *sites.choose(&mut rng).expect("nonempty");
        let (nd, s) = rewrite_apply(&cur, r, *o, site).expect("site was found");
        scalar = &scalar * &s;
        log.push(Step { rule: r.name.clone(), orientation: *o, site, scalar: s });
        cur = nd;
    }
    (cur, scalar, log)
}

/// `(d', s)` with `d = s · d'`, after `steps` seeded random rewrites.
pub fn random_equivalent(d: &Diagram, steps: usize, seed: u64) -> (Diagram, RingPoly) {
    let (nd, s, _) = random_walk(d, steps, seed, &RandomConfig::default());
    (nd, s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_steps_is_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let d = random_diagram(&mut rng, 5, &RandomConfig::default());
        assert_eq!(random_equivalent(&d, 0, 9), (d.clone(), RingPoly::one()));
    }

    #[test]
    fn deterministic_and_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..5 {
            let d = random_diagram(&mut rng, 6, &RandomConfig::default());
            assert!(d.validate().is_ok());
            let a = random_equivalent(&d, 6, 42);
            let b = random_equivalent(&d, 6, 42);
            assert_eq!(a, b);
            assert!(a.0.validate().is_ok());
            assert_eq!((a.0.dom.clone(), a.0.cod.clone()), (d.dom.clone(), d.cod.clone()));
            assert!(a.1.is_unit());
        }
    }
}
