use crate::matrix::Matrix;
use crate::report::{Report, Verdict};
use crate::ring::RingPoly;

use super::{braiding_matrix, AlgebraError, FrobeniusPresentation, TwinAlgebraPresentation};

fn mismatch(lhs: &Matrix, rhs: &Matrix) -> String {
    if lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols() {
        return format!("shape {}x{} vs {}x{}", lhs.rows(), lhs.cols(), rhs.rows(), rhs.cols());
    }
    for r in 0..lhs.rows() {
        for c in 0..lhs.cols() {
            if lhs.get(r, c) != rhs.get(r, c) {
                return format!("entry ({r},{c}): {} vs {}", lhs.get(r, c), rhs.get(r, c));
            }
        }
    }
    String::new()
}

fn same(name: &str, lhs: &Matrix, rhs: &Matrix) -> Verdict {
    Verdict::from_bool(name, lhs == rhs, || mismatch(lhs, rhs))
}

/// Checks the Frobenius axioms plus commutativity and symmetry.
pub fn check_frobenius(p: &FrobeniusPresentation) -> Result<Report, AlgebraError> {
    p.validate_shape()?;
    let n = p.rank;
    let id = Matrix::identity(n);
    let m = p.mult_matrix();
    let u = p.unit_matrix();
    let d = p.comult_matrix();
    let e = p.counit_matrix();
    let tau = braiding_matrix(n, n);
    let mut r = Report::new();

    r.push(same("associativity", &(&m * &m.kron(&id)), &(&m * &id.kron(&m))));
    r.push(same("left-unit", &(&m * &u.kron(&id)), &id));
    r.push(same("right-unit", &(&m * &id.kron(&u)), &id));
    r.push(same("coassociativity", &(&d.kron(&id) * &d), &(&id.kron(&d) * &d)));
    r.push(same("left-counit", &(&e.kron(&id) * &d), &id));
    r.push(same("right-counit", &(&id.kron(&e) * &d), &id));

    let dm = &d * &m;
    let left = &m.kron(&id) * &id.kron(&d);
    let right = &id.kron(&m) * &d.kron(&id);
    let frob = if left != dm {
        Verdict::fail("frobenius", format!("(m⊗id)(id⊗Δ) ≠ Δm: {}", mismatch(&left, &dm)))
    } else if right != dm {
        Verdict::fail("frobenius", format!("(id⊗m)(Δ⊗id) ≠ Δm: {}", mismatch(&right, &dm)))
    } else {
        Verdict::pass("frobenius")
    };
    r.push(frob);

    r.push(same("commutativity", &(&m * &tau), &m));
    let em = &e * &m;
    r.push(same("symmetry", &(&em * &tau), &em));
    Ok(r)
}

/// The verdicts of `check_frobenius` that a twin requires of `C` (all of
/// them) or of `W` (everything except commutativity).
pub fn frobenius_axioms(p: &FrobeniusPresentation, require_commutative: bool) -> Result<Report, AlgebraError> {
    let mut r = check_frobenius(p)?;
    if !require_commutative {
        r.verdicts.retain(|v| v.name != "commutativity");
    }
    Ok(r)
}

/// Checks the twin conditions on top of valid Frobenius structures.
pub fn check_twin(t: &TwinAlgebraPresentation) -> Result<Report, AlgebraError> {
    t.validate_shape()?;
    let c = frobenius_axioms(&t.c, true)?;
    let w = frobenius_axioms(&t.w, false)?;
    let failed: Vec<String> = c
        .failed()
        .map(|v| format!("C/{}", v.name))
        .chain(w.failed().map(|v| format!("W/{}", v.name)))
        .collect();
    if !failed.is_empty() {
        return Err(AlgebraError::Precondition(failed));
    }

    let (rc, rw) = (t.c.rank, t.w.rank);
    let (id_c, id_w) = (Matrix::identity(rc), Matrix::identity(rw));
    let (mc, mw) = (t.c.mult_matrix(), t.w.mult_matrix());
    let (ec, ew) = (t.c.counit_matrix(), t.w.counit_matrix());
    let (z, zs) = (&t.z, &t.zstar);
    let mut r = Report::new();

    let hom_mult = z * &mc;
    let hom_mult_rhs = &mw * &z.kron(z);
    let hom_unit = z * &t.c.unit_matrix();
    let hom_unit_rhs = t.w.unit_matrix();
    r.push(if hom_mult != hom_mult_rhs {
        Verdict::fail("zipper-homomorphism", format!("z∘m_C ≠ m_W∘(z⊗z): {}", mismatch(&hom_mult, &hom_mult_rhs)))
    } else if hom_unit != hom_unit_rhs {
        Verdict::fail("zipper-homomorphism", format!("z∘ι_C ≠ ι_W: {}", mismatch(&hom_unit, &hom_unit_rhs)))
    } else {
        Verdict::pass("zipper-homomorphism")
    });

    if rc != rw {
        let detail = format!("rank_C = {rc} but rank_W = {rw}");
        r.push(Verdict::fail("duality", detail.clone()));
        r.push(Verdict::fail("centrality", detail.clone()));
        r.push(Verdict::fail("isomorphism", detail));
        return Ok(r);
    }

    let dual_l = &(&ec * &mc) * &id_c.kron(zs);
    let dual_r = &(&ew * &mw) * &z.kron(&id_w);
    r.push(same("duality", &dual_l, &dual_r));

    let cent_l = &mw * &id_w.kron(z);
    let cent_r = &(&mw * &braiding_matrix(rw, rw)) * &id_w.kron(z);
    r.push(same("centrality", &cent_l, &cent_r));

    let izs = zs.scale(&RingPoly::i());
    let back = &izs * z;
    let forth = z * &izs;
    r.push(if back != id_c {
        Verdict::fail("isomorphism", format!("(i·z*)∘z ≠ id_C: {}", mismatch(&back, &id_c)))
    } else if forth != id_w {
        Verdict::fail("isomorphism", format!("z∘(i·z*) ≠ id_W: {}", mismatch(&forth, &id_w)))
    } else {
        Verdict::pass("isomorphism")
    });
    Ok(r)
}

/// Every axiom a twin must satisfy, as one flat report. Frobenius
/// prerequisites that fail are reported as verdicts instead of an error.
pub fn twin_axioms(t: &TwinAlgebraPresentation) -> Result<Report, AlgebraError> {
    t.validate_shape()?;
    let mut r = Report::new();
    r.extend_prefixed("C", frobenius_axioms(&t.c, true)?);
    r.extend_prefixed("W", frobenius_axioms(&t.w, false)?);
    match check_twin(t) {
        Ok(twin) => r.extend_prefixed("twin", twin),
        Err(AlgebraError::Precondition(failed)) => {
            r.push(Verdict::fail("twin", format!("skipped, prerequisites failed: {}", failed.join(", "))))
        }
        Err(e) => return Err(e),
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{truncated_twin, twin_tensor, universal_twin};
    use crate::ring::parse_poly;

    fn trivial() -> FrobeniusPresentation {
        FrobeniusPresentation {
            rank: 1,
            mult: vec![vec![vec![RingPoly::one()]]],
            unit: vec![RingPoly::one()],
            comult: vec![vec![vec![RingPoly::one()]]],
            counit: vec![RingPoly::one()],
        }
    }

    #[test]
    fn trivial_algebra_passes() {
        assert!(check_frobenius(&trivial()).unwrap().all_passed());
    }

    #[test]
    fn universal_c_passes_including_commutativity() {
        let r = check_frobenius(&universal_twin().c).unwrap();
        assert!(r.all_passed(), "{r}");
        assert_eq!(r.passed("commutativity"), Some(true));
    }

    #[test]
    fn dropping_a_breaks_frobenius() {
        let mut c = universal_twin().c;
        c.mult[1][1][0] = RingPoly::zero();
        let r = check_frobenius(&c).unwrap();
        assert_eq!(r.passed("frobenius"), Some(false));
    }

    #[test]
    fn shape_errors_are_structural() {
        let mut c = trivial();
        c.unit.push(RingPoly::one());
        assert!(matches!(check_frobenius(&c), Err(AlgebraError::Shape(_))));
    }

    #[test]
    fn examples_are_twins() {
        assert!(check_twin(&universal_twin()).unwrap().all_passed());
        for n in 2..=5 {
            let r = check_twin(&truncated_twin(n).unwrap()).unwrap();
            assert!(r.all_passed(), "trunc {n}: {r}");
        }
    }

    #[test]
    fn scaled_zstar_breaks_isomorphism() {
        let mut t = universal_twin();
        t.zstar = t.zstar.scale(&RingPoly::from_int(2));
        let r = check_twin(&t).unwrap();
        assert_eq!(r.passed("isomorphism"), Some(false));
        assert_eq!(r.passed("duality"), Some(false));
    }

    #[test]
    fn mutated_w_counit_breaks_duality() {
        let mut t = universal_twin();
        t.w.counit[1] = RingPoly::i();
        let r = twin_axioms(&t).unwrap();
        assert!(!r.all_passed());
    }

    #[test]
    fn precondition_failure_names_the_axiom() {
        let mut t = universal_twin();
        t.c.mult[1][1][0] = RingPoly::zero();
        match check_twin(&t) {
            Err(AlgebraError::Precondition(list)) => assert!(list.contains(&"C/frobenius".to_string())),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn tensor_reports_isomorphism_without_asserting() {
        let t = universal_twin();
        let tt = twin_tensor(&t, &t);
        assert_eq!(tt.c.rank, 4);
        let r = check_twin(&tt).unwrap();
        assert_eq!(r.passed("duality"), Some(true));
        assert_eq!(r.passed("centrality"), Some(true));
        assert_eq!(r.passed("zipper-homomorphism"), Some(true));
        // (i·(z*⊗z*))∘(z⊗z) = -i·id
        assert_eq!(r.passed("isomorphism"), Some(false));
        assert_eq!(tt.c.unit[0], parse_poly("1").unwrap());
    }
}
