//! Seeded fuzzing of normal forms against random rewrite walks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::universal_twin;
use crate::diagram::{random_diagram, random_equivalent, Diagram, RandomConfig};
use crate::dsl::print_diagram;
use crate::eval::{Images, DEFAULT_WIDTH_CAP};
use crate::normal_form::{normal_term, NfError};
use crate::ring::RingPoly;
use crate::topology::invariants;

pub const DEFAULT_STEPS: usize = 20;
pub const DEFAULT_COUNT: usize = 200;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CaseStatus {
    Pass,
    /// Terms agree but both scalars are indeterminate.
    ScalarUnresolved,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct FuzzCase {
    pub index: usize,
    pub diagram: String,
    pub rewritten: String,
    pub walk_scalar: RingPoly,
    pub status: CaseStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FuzzReport {
    pub seed: u64,
    pub steps: usize,
    pub count: usize,
    pub passed: usize,
    pub scalar_unresolved: usize,
    pub failed: usize,
    pub cases: Vec<FuzzCase>,
}

/// Source diagrams for fuzzing: boundaries of at most three strands so
/// every evaluation stays small.
pub fn fuzz_diagram<R: Rng + ?Sized>(rng: &mut R) -> Diagram {
    let cfg = RandomConfig { max_width: 6, max_boundary: 3, ..RandomConfig::default() };
    loop {
        let cells = rng.gen_range(1..=8);
        let d = random_diagram(rng, cells, &cfg);
        if d.cod.len() <= 3 {
            return d;
        }
    }
}

fn case_rng(seed: u64, index: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ (index as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

/// Checks one pair `d = s · d'` against the normal-form machinery.
pub fn check_pair(d: &Diagram, e: &Diagram, s: &RingPoly) -> Result<CaseStatus, String> {
    let (i1, i2) = (invariants(d).map_err(|x| x.to_string())?, invariants(e).map_err(|x| x.to_string())?);
    if i1.sigma != i2.sigma {
        return Err(format!("sigma {} became {}", i1.sigma, i2.sigma));
    }
    let mut g1: Vec<u64> = i1.components.iter().map(|c| c.genus).collect();
    let mut g2: Vec<u64> = i2.components.iter().map(|c| c.genus).collect();
    g1.sort_unstable();
    g2.sort_unstable();
    if g1 != g2 {
        return Err(format!("genera {g1:?} became {g2:?}"));
    }
    let images = Images::new(&universal_twin()).map_err(|x| x.to_string())?;
    let ev = |x: &Diagram| images.eval(x, DEFAULT_WIDTH_CAP).map_err(|x| x.to_string());
    if ev(d)? != ev(e)?.scale(s) {
        return Err("walk scalar disagrees with evaluation".into());
    }
    let (t1, t2) = (normal_term(d).map_err(|x| x.to_string())?, normal_term(e).map_err(|x| x.to_string())?);
    if t1.diagram != t2.diagram {
        return Err(format!("normal forms differ: {} vs {}", print_diagram(&t1.diagram), print_diagram(&t2.diagram)));
    }
    match (t1.scalar(), t2.scalar()) {
        (Ok(a), Ok(b)) => {
            if a != s * &b {
                return Err(format!("scalars {a} and {b} do not differ by {s}"));
            }
            if ev(d)? != ev(&t1.diagram)?.scale(&a) {
                return Err("normal-form scalar disagrees with evaluation".into());
            }
            Ok(CaseStatus::Pass)
        }
        (Err(NfError::ScalarIndeterminate(_)), Err(NfError::ScalarIndeterminate(_))) => Ok(CaseStatus::ScalarUnresolved),
        (a, b) => Err(format!("scalar outcomes differ: {a:?} vs {b:?}")),
    }
}

pub fn run_case(seed: u64, index: usize, steps: usize) -> FuzzCase {
    let mut rng = case_rng(seed, index);
    let d = fuzz_diagram(&mut rng);
    let (e, s) = random_equivalent(&d, steps, rng.gen());
    let (status, detail) = match check_pair(&d, &e, &s) {
        Ok(st) => (st, None),
        Err(msg) => (CaseStatus::Fail, Some(msg)),
    };
    FuzzCase { index, diagram: print_diagram(&d), rewritten: print_diagram(&e), walk_scalar: s, status, detail }
}

/// Runs `count` cases in parallel; the report lists them in index order.
pub fn run_fuzz(seed: u64, steps: usize, count: usize) -> FuzzReport {
    let cases: Vec<FuzzCase> = (0..count).into_par_iter().map(|i| run_case(seed, i, steps)).collect();
    let tally = |st: CaseStatus| cases.iter().filter(|c| c.status == st).count();
    FuzzReport {
        seed,
        steps,
        count,
        passed: tally(CaseStatus::Pass),
        scalar_unresolved: tally(CaseStatus::ScalarUnresolved),
        failed: tally(CaseStatus::Fail),
        cases,
    }
}
