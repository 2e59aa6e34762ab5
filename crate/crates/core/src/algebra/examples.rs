use crate::matrix::Matrix;
use crate::ring::RingPoly;

use super::{AlgebraError, FrobeniusPresentation, TwinAlgebraPresentation};

fn cube(n: usize) -> Vec<Vec<Vec<RingPoly>>> {
    vec![vec![vec![RingPoly::zero(); n]; n]; n]
}

fn scale_cube(c: &[Vec<Vec<RingPoly>>], s: &RingPoly) -> Vec<Vec<Vec<RingPoly>>> {
    c.iter().map(|a| a.iter().map(|b| b.iter().map(|x| x * s).collect()).collect()).collect()
}

/// The universal twin over `Z[i][a,h]`: `A = R[X]/(X^2 - hX - a)` on the
/// basis `{1, X}` for both `C` and `W`, with `z = id` and `z* = -i·id`.
pub fn universal_twin() -> TwinAlgebraPresentation {
    let (a, h) = (RingPoly::a(), RingPoly::h());
    let one = RingPoly::one();

    let mut mult = cube(2);
    mult[0][0][0] = one.clone();
    mult[0][1][1] = one.clone();
    mult[1][0][1] = one.clone();
    mult[1][1][0] = a.clone();
    mult[1][1][1] = h.clone();

    // Δ(1) = 1⊗X + X⊗1 - h·1⊗1, Δ(X) = X⊗X + a·1⊗1
    let mut comult = cube(2);
    comult[0][0][0] = -&h;
    comult[0][0][1] = one.clone();
    comult[0][1][0] = one.clone();
    comult[1][0][0] = a;
    comult[1][1][1] = one.clone();

    let c = FrobeniusPresentation {
        rank: 2,
        mult: mult.clone(),
        unit: vec![one.clone(), RingPoly::zero()],
        comult: comult.clone(),
        counit: vec![RingPoly::zero(), one],
    };
    let mi = -RingPoly::i();
    let w = FrobeniusPresentation {
        rank: 2,
        mult,
        unit: c.unit.clone(),
        comult: scale_cube(&comult, &RingPoly::i()),
        counit: vec![RingPoly::zero(), mi.clone()],
    };
    TwinAlgebraPresentation { c, w, z: Matrix::identity(2), zstar: Matrix::identity(2).scale(&mi) }
}

/// Truncated polynomial twin `C = Z[i][x]/(x^n)`, `W = Z[i][y]/(y^n)`.
pub fn truncated_twin(n: usize) -> Result<TwinAlgebraPresentation, AlgebraError> {
    if n < 2 {
        return Err(AlgebraError::TruncationTooSmall(n));
    }
    let one = RingPoly::one();
    let mut mult = cube(n);
    for j in 0..n {
        for k in 0..n - j {
            mult[j][k][j + k] = one.clone();
        }
    }
    // Δ(x^k) = Σ_{j=0}^{n-1-k} x^{j+k} ⊗ x^{n-1-j}
    let mut comult = cube(n);
    for k in 0..n {
        for j in 0..n - k {
            comult[k][j + k][n - 1 - j] = one.clone();
        }
    }
    let mut unit = vec![RingPoly::zero(); n];
    unit[0] = one.clone();
    let mut counit_c = vec![RingPoly::zero(); n];
    counit_c[n - 1] = one;
    let mi = -RingPoly::i();
    let mut counit_w = vec![RingPoly::zero(); n];
    counit_w[n - 1] = mi.clone();

    let c = FrobeniusPresentation { rank: n, mult: mult.clone(), unit: unit.clone(), comult: comult.clone(), counit: counit_c };
    let w = FrobeniusPresentation {
        rank: n,
        mult,
        unit,
        comult: scale_cube(&comult, &RingPoly::i()),
        counit: counit_w,
    };
    Ok(TwinAlgebraPresentation { c, w, z: Matrix::identity(n), zstar: Matrix::identity(n).scale(&mi) })
}
