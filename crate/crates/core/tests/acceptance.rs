//! The eight acceptance criteria, one PASS/FAIL line each.

mod common;

use std::fs;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use singcob::algebra::{truncated_twin, twin_axioms, universal_twin, TwinAlgebraPresentation};
use singcob::diagram::{random_diagram, random_equivalent, rule_catalog, Diagram, RandomConfig};
use singcob::dsl::{parse, parse_diagram, print, print_diagram};
use singcob::eval::{eval, foam_identities, relation_suite};
use singcob::fuzz::fuzz_diagram;
use singcob::matrix::Matrix;
use singcob::normal_form::{bend, nf_build, nf_of, normal_term, unbend, BendProfile, NfError, NormalFormDescriptor};
use singcob::perm::Perm;
use singcob::ring::{parse_poly, RingPoly};
use singcob::topology::{components, euler_characteristic, invariants};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t <= limit, || format!("took {t:.2?}, limit {limit:?}"))
}

fn algebras() -> Vec<(String, TwinAlgebraPresentation)> {
    let mut v = vec![("universal".to_string(), universal_twin())];
    for n in 2..=5 {
        v.push((format!("trunc:{n}"), truncated_twin(n).expect("n >= 2")));
    }
    v
}

fn axioms() -> Outcome {
    let start = Instant::now();
    let mut total = 0;
    for (name, t) in algebras() {
        let r = twin_axioms(&t).map_err(|e| format!("{name}: {e}"))?;
        let bad: Vec<_> = r.failed().map(|v| v.name.clone()).collect();
        ensure(bad.is_empty(), || format!("{name}: failing {bad:?}"))?;
        for family in ["associativity", "coassociativity", "frobenius", "commutativity", "symmetry", "duality", "centrality", "isomorphism"] {
            ensure(r.verdicts.iter().any(|v| v.name.ends_with(family)), || format!("{name}: no {family} verdict"))?;
        }
        total += r.verdicts.len();
    }
    within(start, Duration::from_secs(5))?;
    Ok(format!("{total} axiom verdicts over 5 algebras"))
}

fn relations() -> Outcome {
    let start = Instant::now();
    let examples = [("universal", universal_twin()), ("trunc:3", truncated_twin(3).expect("n >= 2"))];
    for (name, t) in &examples {
        let r = relation_suite(t).map_err(|e| e.to_string())?;
        let bad: Vec<_> = r.failed().map(|v| v.name.clone()).collect();
        ensure(bad.is_empty(), || format!("{name}: failing {bad:?}"))?;
        // independent Kronecker-product evaluation of both sides
        for rule in rule_catalog() {
            let l = common::kron_eval(&rule.lhs, t);
            let rhs = common::kron_eval(&rule.rhs, t).scale(&rule.scalar);
            ensure(l == rhs, || format!("{name}: oracle rejects {}", rule.name))?;
        }
    }
    let signed = rule_catalog().iter().filter(|r| !r.scalar.is_one()).count();
    ensure(signed >= 4, || format!("only {signed} rules carry a scalar"))?;
    within(start, Duration::from_secs(30))?;
    Ok(format!("{} rules ({signed} with scalars) under universal and trunc:3", rule_catalog().len()))
}

fn foams() -> Outcome {
    let t = universal_twin();
    let r = foam_identities(&t).map_err(|e| e.to_string())?;
    ensure(r.all_passed(), || format!("{r}"))?;
    let scalar = |s: &str| common::kron_eval(&parse_diagram(s).expect("fixed"), &t).get(0, 0).clone();
    ensure(scalar("uC ; eC").is_zero(), || "sphere".into())?;
    ensure(scalar("uW ; eW").is_zero(), || "singular sphere".into())?;
    ensure(scalar("uC ; dC ; mC ; eC") == RingPoly::from_int(2), || "torus".into())?;
    ensure(scalar("uC ; dC ; mC ; z ; eW") == RingPoly::from_int(-2) * RingPoly::i(), || "ufo".into())?;
    let gg = common::kron_eval(&parse_diagram("dC ; mC ; dC ; mC").expect("fixed"), &t);
    let want = Matrix::identity(2).scale(&parse_poly("h^2 + 4*a").expect("fixed"));
    ensure(gg == want, || format!("G^2 = {gg}"))?;
    Ok("sphere 0, singular sphere 0, torus 2, G^2 = (h^2+4a) id, ufo -2i".into())
}

fn check_topology(d: &Diagram) -> Result<(), String> {
    let text = print_diagram(d);
    let chi = euler_characteristic(d);
    ensure(chi == common::cw_euler(d), || format!("{text}: table {chi}, cells {}", common::cw_euler(d)))?;
    let comps = components(d).map_err(|e| format!("{text}: {e}"))?;
    let mut mine: Vec<(Vec<usize>, i64)> = comps.iter().map(|c| (c.boundary.clone(), c.euler)).collect();
    mine.sort();
    let oracle: Vec<(Vec<usize>, i64)> = common::cw_components(d).into_iter().map(|c| (c.boundary, c.euler)).collect();
    // closed oracle pieces made only of vertices never occur; compare the lists directly
    ensure(mine == oracle, || format!("{text}: components {mine:?} vs {oracle:?}"))?;
    for c in &comps {
        let twice = 2 - c.euler - c.boundary.len() as i64;
        ensure(twice >= 0 && twice % 2 == 0 && twice / 2 == c.genus as i64, || format!("{text}: genus {}", c.genus))?;
    }
    Ok(())
}

fn topology() -> Outcome {
    let words = common::all_words(3, 2, 5);
    for d in &words {
        check_topology(d)?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let cfg = RandomConfig::default();
    for _ in 0..500 {
        let cells = rng.gen_range(0..=10);
        check_topology(&random_diagram(&mut rng, cells, &cfg))?;
    }
    Ok(format!("{} words of depth <= 3 and 500 random diagrams", words.len()))
}

fn fuzz() -> Outcome {
    let start = Instant::now();
    let (mut resolved, mut unresolved) = (0, 0);
    for case in 0..200u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(1000 + case);
        let d = fuzz_diagram(&mut rng);
        let (e, s) = random_equivalent(&d, 20, case);
        let text = print_diagram(&d);
        let (i1, i2) = (invariants(&d).map_err(|x| x.to_string())?, invariants(&e).map_err(|x| x.to_string())?);
        ensure(i1.sigma == i2.sigma, || format!("case {case} {text}: sigma changed"))?;
        let genera = |i: &singcob::topology::Invariants| {
            let mut g: Vec<u64> = i.components.iter().map(|c| c.genus).collect();
            g.sort_unstable();
            g
        };
        ensure(genera(&i1) == genera(&i2), || format!("case {case} {text}: genera changed"))?;
        let (t1, t2) = (normal_term(&d).map_err(|x| x.to_string())?, normal_term(&e).map_err(|x| x.to_string())?);
        ensure(t1.diagram == t2.diagram, || format!("case {case} {text}: normal forms differ"))?;
        match (t1.scalar(), t2.scalar()) {
            (Ok(a), Ok(b)) => {
                // d = s·d', d = a·N, d' = b·N
                ensure(a == &s * &b, || format!("case {case} {text}: {a} != {s} * {b}"))?;
                resolved += 1;
            }
            (Err(NfError::ScalarIndeterminate(_)), Err(NfError::ScalarIndeterminate(_))) => unresolved += 1,
            (a, b) => return Err(format!("case {case} {text}: scalar outcomes {a:?} / {b:?}")),
        }
    }
    within(start, Duration::from_secs(120))?;
    Ok(format!("200 cases, {resolved} with scalar agreement, {unresolved} with both scalars indeterminate"))
}

fn block_tau(lengths: &[usize]) -> Perm {
    // k -> k+1 inside each consecutive block, last back to first
    let mut images = Vec::new();
    let mut start = 0;
    for &q in lengths {
        images.extend((1..q).map(|j| start + j));
        images.push(start);
        start += q;
    }
    Perm::from_images(images).expect("block cycles")
}

fn random_descriptor(rng: &mut ChaCha8Rng) -> NormalFormDescriptor {
    let total = rng.gen_range(0..=6);
    let mut lengths = Vec::new();
    let mut left = total;
    while left > 0 {
        let q = rng.gen_range(1..=left);
        lengths.push(q);
        left -= q;
    }
    let mut images: Vec<usize> = (0..total).collect();
    images.shuffle(rng);
    let genus = rng.gen_range(0..=3);
    let out = rng.gen_range(0..=4);
    NormalFormDescriptor::from_parts(&lengths, genus, out, Perm::from_images(images).expect("shuffled")).expect("consistent")
}

fn round_trip() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut idempotent_scalars = 0;
    for k in 0..500 {
        let desc = random_descriptor(&mut rng);
        let d = nf_build(&desc).map_err(|e| e.to_string())?;
        let inv = invariants(&d).map_err(|e| e.to_string())?;
        let lengths = desc.lengths();
        let pi = &desc.conjugator;
        let want = pi.inverse().compose(&block_tau(&lengths).compose(pi).expect("sizes")).expect("sizes");
        ensure(inv.sigma == want, || format!("descriptor {k}: sigma {} vs {want}", inv.sigma))?;
        let mut ct = lengths.clone();
        ct.sort_unstable_by(|a, b| b.cmp(a));
        ensure(inv.sigma.cycle_type() == ct, || format!("descriptor {k}: cycle type"))?;
        ensure(inv.components.len() == 1 && inv.components[0].genus == desc.genus, || format!("descriptor {k}: genus"))?;
        ensure(d.cod.len() == desc.out_circles, || format!("descriptor {k}: output circles"))?;
        // equal invariants give identical canonical forms
        let canon = nf_build(&NormalFormDescriptor::from_sigma(&inv.sigma, desc.genus, desc.out_circles)).map_err(|e| e.to_string())?;
        let (n1, n2) = (normal_term(&d).map_err(|e| e.to_string())?, normal_term(&canon).map_err(|e| e.to_string())?);
        ensure(n1.diagram == n2.diagram, || format!("descriptor {k}: collision gives different forms"))?;
        // idempotence
        let again = normal_term(&n1.diagram).map_err(|e| e.to_string())?;
        ensure(again.diagram == n1.diagram, || format!("descriptor {k}: not idempotent"))?;
        match again.scalar() {
            Ok(s) => {
                ensure(s.is_one(), || format!("descriptor {k}: re-normalizing gives scalar {s}"))?;
                idempotent_scalars += 1;
            }
            Err(NfError::ScalarIndeterminate(_)) => {
                ensure(eval(&d, &universal_twin()).map_err(|e| e.to_string())?.is_zero(), || format!("descriptor {k}: spurious indeterminate"))?;
            }
            Err(e) => return Err(format!("descriptor {k}: {e}")),
        }
    }
    let z = nf_of(&parse_diagram("z ; zs").expect("fixed")).map_err(|e| e.to_string())?;
    ensure(z.scalar == -RingPoly::i() && z.diagram == parse_diagram("id:0").expect("fixed"), || "z ; zs".into())?;
    Ok(format!("500 descriptors, {idempotent_scalars} with scalar 1 on re-normalization"))
}

fn bending() -> Outcome {
    let t = universal_twin();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for k in 0..200 {
        let d = fuzz_diagram(&mut rng);
        let back = unbend(&bend(&d), &BendProfile::of(&d));
        ensure(back.dom == d.dom && back.cod == d.cod, || format!("case {k}: type"))?;
        let (a, b) = (common::kron_eval(&back, &t), common::kron_eval(&d, &t));
        ensure(a == b, || format!("case {k}: {}", print_diagram(&d)))?;
    }
    Ok("200 random diagrams".into())
}

fn parser() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let cfg = RandomConfig::default();
    for k in 0..1000 {
        let cells = rng.gen_range(0..=12);
        let d = random_diagram(&mut rng, cells, &cfg);
        let text = print_diagram(&d);
        let back = parse_diagram(&text).map_err(|e| format!("case {k}: {text}: {e}"))?;
        ensure(back.structurally_eq(&d) && print_diagram(&back) == text, || format!("case {k}: {text}"))?;
        let c = RingPoly::from_int(rng.gen_range(-3..=3)) + RingPoly::i();
        let lc = singcob::diagram::LinComb::scaled(c, d.clone());
        let again = parse(&print(&lc)).map_err(|e| format!("case {k}: {e}"))?;
        ensure(print(&again) == print(&lc), || format!("case {k}: {}", print(&lc)))?;
    }
    let corpus = fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data/malformed.txt")).map_err(|e| e.to_string())?;
    let mut n = 0;
    for line in corpus.lines().filter(|l| !l.starts_with('#')) {
        let (span, src) = line.split_once('\t').ok_or("corpus line without tab")?;
        let mut it = span.split(' ').map(|x| x.parse::<usize>().expect("span"));
        let (lo, hi) = (it.next().expect("start"), it.next().expect("end"));
        match parse(src) {
            Ok(_) => return Err(format!("malformed entry {src:?} parsed")),
            Err(e) => ensure(lo <= e.position() && e.position() < hi, || format!("{src:?}: error at {} ({e}), expected in {lo}..{hi}", e.position()))?,
        }
        n += 1;
    }
    Ok(format!("1000 round trips, {n} malformed entries"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("axiom suite", axioms),
        ("relation suite", relations),
        ("foam identities", foams),
        ("topology oracle", topology),
        ("normal-form soundness", fuzz),
        ("normal-form round trip", round_trip),
        ("bending round trip", bending),
        ("parser", parser),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let t = start.elapsed();
        match outcome {
            Ok(msg) => println!("PASS {} {name}: {msg} [{t:.2?}]", k + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL {} {name}: {msg} [{t:.2?}]", k + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
