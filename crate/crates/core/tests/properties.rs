mod common;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use singcob::algebra::{truncated_twin, universal_twin};
use singcob::diagram::{random_diagram, Diagram, RandomConfig};
use singcob::dsl::{parse_diagram, print_diagram};
use singcob::eval::eval;
use singcob::normal_form::{bend, unbend, BendProfile};
use singcob::topology::euler_characteristic;

fn small(seed: u64) -> Diagram {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cfg = RandomConfig { max_width: 5, max_boundary: 3, ..RandomConfig::default() };
    let cells = rng.gen_range(0..=7);
    random_diagram(&mut rng, cells, &cfg)
}

/// Cuts `d` after its `k`-th slice.
fn cut(d: &Diagram, k: usize) -> (Diagram, Diagram) {
    let sl = d.slices();
    let k = k % (sl.len() + 1);
    let top = Diagram::from_slices(d.dom.clone(), &sl[..k]).unwrap();
    let bottom = Diagram::from_slices(top.cod.clone(), &sl[k..]).unwrap();
    (top, bottom)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn eval_matches_kronecker_oracle(seed in any::<u64>()) {
        let d = small(seed);
        for t in [universal_twin(), truncated_twin(3).unwrap()] {
            prop_assert_eq!(eval(&d, &t).unwrap(), common::kron_eval(&d, &t));
        }
    }

    #[test]
    fn composition_is_functorial(seed in any::<u64>(), k in 0usize..16) {
        let d = small(seed);
        let (a, b) = cut(&d, k);
        let t = universal_twin();
        let glued = a.compose(&b).unwrap();
        prop_assert_eq!(eval(&glued, &t).unwrap(), &eval(&b, &t).unwrap() * &eval(&a, &t).unwrap());
        prop_assert_eq!(euler_characteristic(&glued), euler_characteristic(&a) + euler_characteristic(&b));
    }

    #[test]
    fn tensor_is_monoidal(s1 in any::<u64>(), s2 in any::<u64>()) {
        let (a, b) = (small(s1), small(s2));
        prop_assume!(a.dom.len() + b.dom.len() <= 4 && a.cod.len() + b.cod.len() <= 4);
        let t = truncated_twin(2).unwrap();
        let ab = a.tensor(&b);
        prop_assert_eq!(eval(&ab, &t).unwrap(), eval(&a, &t).unwrap().kron(&eval(&b, &t).unwrap()));
        prop_assert_eq!(euler_characteristic(&ab), euler_characteristic(&a) + euler_characteristic(&b));
    }

    #[test]
    fn print_then_parse_is_identity(seed in any::<u64>()) {
        let d = small(seed);
        let text = print_diagram(&d);
        let back = parse_diagram(&text).unwrap();
        prop_assert!(back.structurally_eq(&d), "{}", text);
    }
}

#[test]
fn unbend_of_mixed_profile_typechecks() {
    let d = parse_diagram("id:0 | id:1 | zs").unwrap();
    let prof = BendProfile::of(&d);
    let back = unbend(&bend(&d), &prof);
    back.validate().unwrap();
    assert_eq!((back.dom.clone(), back.cod.clone()), (d.dom.clone(), d.cod.clone()));
    let t = universal_twin();
    assert_eq!(common::kron_eval(&back, &t), common::kron_eval(&d, &t));
}
