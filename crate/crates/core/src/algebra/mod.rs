//! Frobenius algebras and twin Frobenius algebras given by structure
//! constants on a finite free basis.

mod check;
mod examples;
mod file;

pub use check::{check_frobenius, check_twin, frobenius_axioms, twin_axioms};
pub use examples::{truncated_twin, universal_twin};
pub use file::{AlgebraFileError, TwinAlgebraFile};

use thiserror::Error;

use crate::matrix::Matrix;
use crate::ring::RingPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("malformed presentation: {0}")]
    Shape(String),
    #[error("twin axioms need valid Frobenius structures; failed prerequisites: {}", .0.join(", "))]
    Precondition(Vec<String>),
    #[error("truncated algebra needs n >= 2, got {0}")]
    TruncationTooSmall(usize),
}

/// Structure constants of a Frobenius algebra `(A, m, ι, Δ, ε)` on the basis
/// `e_0 .. e_{rank-1}`.
///
/// `mult[i][j][k]` is the coefficient of `e_k` in `m(e_i ⊗ e_j)` and
/// `comult[i][j][k]` the coefficient of `e_j ⊗ e_k` in `Δ(e_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusPresentation {
    pub rank: usize,
    pub mult: Vec<Vec<Vec<RingPoly>>>,
    pub unit: Vec<RingPoly>,
    pub comult: Vec<Vec<Vec<RingPoly>>>,
    pub counit: Vec<RingPoly>,
}

impl FrobeniusPresentation {
    pub fn validate_shape(&self) -> Result<(), AlgebraError> {
        let n = self.rank;
        if n == 0 {
            return Err(AlgebraError::Shape("rank must be at least 1".into()));
        }
        let cube_ok = |t: &Vec<Vec<Vec<RingPoly>>>| {
            t.len() == n && t.iter().all(|row| row.len() == n && row.iter().all(|v| v.len() == n))
        };
        if !cube_ok(&self.mult) {
            return Err(AlgebraError::Shape(format!("mult must be {n}x{n}x{n}")));
        }
        if !cube_ok(&self.comult) {
            return Err(AlgebraError::Shape(format!("comult must be {n}x{n}x{n}")));
        }
        if self.unit.len() != n || self.counit.len() != n {
            return Err(AlgebraError::Shape(format!("unit and counit must have length {n}")));
        }
        Ok(())
    }

    /// `rank x rank^2` matrix of `m`.
    pub fn mult_matrix(&self) -> Matrix {
        let n = self.rank;
        Matrix::from_fn(n, n * n, |k, ij| self.mult[ij / n][ij % n][k].clone())
    }

    /// `rank x 1` matrix of `ι`.
    pub fn unit_matrix(&self) -> Matrix {
        Matrix::from_fn(self.rank, 1, |k, _| self.unit[k].clone())
    }

    /// `rank^2 x rank` matrix of `Δ`.
    pub fn comult_matrix(&self) -> Matrix {
        let n = self.rank;
        Matrix::from_fn(n * n, n, |jk, i| self.comult[i][jk / n][jk % n].clone())
    }

    /// `1 x rank` matrix of `ε`.
    pub fn counit_matrix(&self) -> Matrix {
        Matrix::from_fn(1, self.rank, |_, k| self.counit[k].clone())
    }

    /// Tensor product of two Frobenius algebras, basis ordered `(i1, i2) -> i1 * rank2 + i2`.
    pub fn tensor(&self, other: &FrobeniusPresentation) -> FrobeniusPresentation {
        let (r1, r2) = (self.rank, other.rank);
        let r = r1 * r2;
        let split = |x: usize| (x / r2, x % r2);
        let cube = |a: &Vec<Vec<Vec<RingPoly>>>, b: &Vec<Vec<Vec<RingPoly>>>| {
            (0..r)
                .map(|i| {
                    (0..r)
                        .map(|j| {
                            (0..r)
                                .map(|k| {
                                    let ((i1, i2), (j1, j2), (k1, k2)) = (split(i), split(j), split(k));
                                    &a[i1][j1][k1] * &b[i2][j2][k2]
                                })
                                .collect()
                        })
                        .collect()
                })
                .collect()
        };
        let vec = |a: &Vec<RingPoly>, b: &Vec<RingPoly>| {
            (0..r).map(|i| &a[split(i).0] * &b[split(i).1]).collect()
        };
        FrobeniusPresentation {
            rank: r,
            mult: cube(&self.mult, &other.mult),
            unit: vec(&self.unit, &other.unit),
            comult: cube(&self.comult, &other.comult),
            counit: vec(&self.counit, &other.counit),
        }
    }
}

/// A twin Frobenius algebra `(C, W, z, z*)`.
///
/// `z` is a `rank_W x rank_C` matrix and `zstar` a `rank_C x rank_W` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwinAlgebraPresentation {
    pub c: FrobeniusPresentation,
    pub w: FrobeniusPresentation,
    pub z: Matrix,
    pub zstar: Matrix,
}

impl TwinAlgebraPresentation {
    pub fn validate_shape(&self) -> Result<(), AlgebraError> {
        self.c.validate_shape()?;
        self.w.validate_shape()?;
        if self.z.rows() != self.w.rank || self.z.cols() != self.c.rank {
            return Err(AlgebraError::Shape(format!("z must be {}x{}", self.w.rank, self.c.rank)));
        }
        if self.zstar.rows() != self.c.rank || self.zstar.cols() != self.w.rank {
            return Err(AlgebraError::Shape(format!("zstar must be {}x{}", self.c.rank, self.w.rank)));
        }
        Ok(())
    }

    /// Componentwise tensor product `(C1⊗C2, W1⊗W2, z1⊗z2, z1*⊗z2*)`.
    pub fn tensor(&self, other: &TwinAlgebraPresentation) -> TwinAlgebraPresentation {
        TwinAlgebraPresentation {
            c: self.c.tensor(&other.c),
            w: self.w.tensor(&other.w),
            z: self.z.kron(&other.z),
            zstar: self.zstar.kron(&other.zstar),
        }
    }
}

/// Tensor product of two twin algebras.
pub fn twin_tensor(t1: &TwinAlgebraPresentation, t2: &TwinAlgebraPresentation) -> TwinAlgebraPresentation {
    t1.tensor(t2)
}

/// Matrix of the symmetric braiding `A ⊗ B -> B ⊗ A`.
pub fn braiding_matrix(rank_a: usize, rank_b: usize) -> Matrix {
    let mut m = Matrix::zeros(rank_a * rank_b, rank_a * rank_b);
    for a in 0..rank_a {
        for b in 0..rank_b {
            m.set(b * rank_a + a, a * rank_b + b, RingPoly::one());
        }
    }
    m
}
