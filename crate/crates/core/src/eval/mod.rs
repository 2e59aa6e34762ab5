//! The twin TQFT functor: diagrams to exact matrices.

use thiserror::Error;

use crate::algebra::{braiding_matrix, AlgebraError, TwinAlgebraPresentation};
use crate::diagram::{rule_catalog, Diagram, Gen, LinComb, Slice, Wire};
use crate::dsl::parse_diagram;
use crate::matrix::Matrix;
use crate::report::{Report, Verdict};
use crate::ring::RingPoly;

/// Widest interface evaluated by default.
pub const DEFAULT_WIDTH_CAP: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("diagram has an interface of width {width}, above the cap of {cap}")]
    TooWide { width: usize, cap: usize },
}

/// Generator images for one algebra, built once per evaluation.
pub struct Images {
    rank_c: usize,
    rank_w: usize,
    mult_c: Matrix,
    unit_c: Matrix,
    comult_c: Matrix,
    counit_c: Matrix,
    mult_w: Matrix,
    unit_w: Matrix,
    comult_w: Matrix,
    counit_w: Matrix,
    z: Matrix,
    zstar: Matrix,
}

impl Images {
    pub fn new(t: &TwinAlgebraPresentation) -> Result<Self, EvalError> {
        t.validate_shape()?;
        Ok(Self {
            rank_c: t.c.rank,
            rank_w: t.w.rank,
            mult_c: t.c.mult_matrix(),
            unit_c: t.c.unit_matrix(),
            comult_c: t.c.comult_matrix(),
            counit_c: t.c.counit_matrix(),
            mult_w: t.w.mult_matrix(),
            unit_w: t.w.unit_matrix(),
            comult_w: t.w.comult_matrix(),
            counit_w: t.w.counit_matrix(),
            z: t.z.clone(),
            zstar: t.zstar.clone(),
        })
    }

    fn rank(&self, w: Wire) -> usize {
        match w {
            Wire::C => self.rank_c,
            Wire::W => self.rank_w,
        }
    }

    /// Matrix of a single generator.
    pub fn generator(&self, g: Gen) -> Matrix {
        match g {
            Gen::MultC => self.mult_c.clone(),
            Gen::ComultC => self.comult_c.clone(),
            Gen::UnitC => self.unit_c.clone(),
            Gen::CounitC => self.counit_c.clone(),
            Gen::MultW => self.mult_w.clone(),
            Gen::ComultW => self.comult_w.clone(),
            Gen::UnitW => self.unit_w.clone(),
            Gen::CounitW => self.counit_w.clone(),
            Gen::Zip => self.z.clone(),
            Gen::Cozip => self.zstar.clone(),
            Gen::IdC => Matrix::identity(self.rank_c),
            Gen::IdW => Matrix::identity(self.rank_w),
            Gen::Swap(x, y) => braiding_matrix(self.rank(x), self.rank(y)),
        }
    }

    fn dim(&self, ws: &[Wire]) -> usize {
        ws.iter().map(|&w| self.rank(w)).product()
    }

    /// `(id_L ⊗ G ⊗ id_R) · m`, without forming the Kronecker product.
    fn apply_slice(&self, m: &Matrix, above: &[Wire], s: &Slice) -> Matrix {
        let g = self.generator(s.gen);
        let (o, i) = (s.offset, s.in_len());
        let dim_l = self.dim(&above[..o]);
        let dim_x = self.dim(&above[o..o + i]);
        let dim_r = self.dim(&above[o + i..]);
        let dim_y = g.rows();
        debug_assert_eq!(g.cols(), dim_x);
        let cols = m.cols();
        let mut out = Matrix::zeros(dim_l * dim_y * dim_r, cols);
        let nonzero: Vec<(usize, usize, &RingPoly)> = (0..dim_y)
            .flat_map(|y| (0..dim_x).map(move |x| (y, x)))
            .map(|(y, x)| (y, x, g.get(y, x)))
            .filter(|(_, _, v)| !v.is_zero())
            .collect();
        for l in 0..dim_l {
            for r in 0..dim_r {
                for c in 0..cols {
                    for &(y, x, v) in &nonzero {
                        let src = m.get((l * dim_x + x) * dim_r + r, c);
                        if src.is_zero() {
                            continue;
                        }
                        out.add_at((l * dim_y + y) * dim_r + r, c, &(v * src));
                    }
                }
            }
        }
        out
    }

    pub fn eval(&self, d: &Diagram, width_cap: usize) -> Result<Matrix, EvalError> {
        let width = d.width();
        if width > width_cap {
            return Err(EvalError::TooWide { width, cap: width_cap });
        }
        let mut cur = d.dom.0.clone();
        let mut m = Matrix::identity(self.dim(&cur));
        for s in d.slices() {
            m = self.apply_slice(&m, &cur, &s);
            cur = s.apply(&cur).expect("valid diagram");
        }
        Ok(m)
    }
}

/// Evaluates `d` under `t`: a `dim(cod) x dim(dom)` matrix.
pub fn eval(d: &Diagram, t: &TwinAlgebraPresentation) -> Result<Matrix, EvalError> {
    Images::new(t)?.eval(d, DEFAULT_WIDTH_CAP)
}

pub fn eval_lincomb(lc: &LinComb, t: &TwinAlgebraPresentation) -> Result<Matrix, EvalError> {
    let images = Images::new(t)?;
    let mut acc = Matrix::zeros(images.dim(&lc.cod.0), images.dim(&lc.dom.0));
    for (c, d) in lc.terms() {
        let m = images.eval(d, DEFAULT_WIDTH_CAP)?;
        acc = &acc + &m.scale(c);
    }
    Ok(acc)
}

/// One verdict per catalog rule: `eval(lhs) = scalar · eval(rhs)`.
pub fn relation_suite(t: &TwinAlgebraPresentation) -> Result<Report, EvalError> {
    let images = Images::new(t)?;
    let mut report = Report::new();
    for rule in rule_catalog() {
        let l = images.eval(&rule.lhs, DEFAULT_WIDTH_CAP)?;
        let r = images.eval(&rule.rhs, DEFAULT_WIDTH_CAP)?.scale(&rule.scalar);
        report.push(Verdict::from_bool(rule.name.clone(), l == r, || {
            format!("lhs {l} differs from {}·rhs {r}", rule.scalar)
        }));
    }
    Ok(report)
}

fn scalar_of(images: &Images, text: &str) -> RingPoly {
    let m = images.eval(&parse_diagram(text).expect("fixed term"), DEFAULT_WIDTH_CAP).expect("closed term");
    m.get(0, 0).clone()
}

/// The closed-surface identities of the universal algebra.
pub fn foam_identities(t: &TwinAlgebraPresentation) -> Result<Report, EvalError> {
    let images = Images::new(t)?;
    let mut report = Report::new();
    let mut scalar_check = |name: &str, text: &str, want: RingPoly| {
        let got = scalar_of(&images, text);
        report.push(Verdict::from_bool(name, got == want, || format!("got {got}, expected {want}")));
    };
    scalar_check("sphere", "uC ; eC", RingPoly::zero());
    scalar_check("singular-sphere", "uW ; eW", RingPoly::zero());
    scalar_check("torus", "uC ; dC ; mC ; eC", RingPoly::from_int(2));
    // UFO read as ε_W ∘ z ∘ G ∘ ι_C
    scalar_check("ufo", "uC ; dC ; mC ; z ; eW", RingPoly::from_int(-2) * RingPoly::i());
    let gg = images.eval(&parse_diagram("dC ; mC ; dC ; mC").expect("fixed term"), DEFAULT_WIDTH_CAP)?;
    let want = Matrix::identity(images.rank_c).scale(&crate::ring::parse_poly("h^2 + 4*a").expect("fixed"));
    report.push(Verdict::from_bool("double-genus", gg == want, || format!("got {gg}")));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{truncated_twin, universal_twin};
    use crate::dsl::parse;

    fn ev(s: &str) -> Matrix {
        eval(&parse_diagram(s).unwrap(), &universal_twin()).unwrap()
    }

    #[test]
    fn basic_values() {
        assert_eq!(ev("id:0"), Matrix::identity(2));
        assert_eq!(ev("uC ; eC"), Matrix::zeros(1, 1));
        assert_eq!(ev("z ; zs"), Matrix::identity(2).scale(&-RingPoly::i()));
        assert_eq!(ev("sw:01 ; sw:10"), Matrix::identity(4));
        assert_eq!(ev("id:-"), Matrix::identity(1));
    }

    #[test]
    fn functorial_on_small_cases() {
        let t = universal_twin();
        let a = parse_diagram("dC").unwrap();
        let b = parse_diagram("(z | id:0) ; (id:1 | z) ; mW").unwrap();
        let ab = eval(&a.compose(&b).unwrap(), &t).unwrap();
        assert_eq!(ab, &eval(&b, &t).unwrap() * &eval(&a, &t).unwrap());
        let ten = eval(&a.tensor(&b), &t).unwrap();
        assert_eq!(ten, eval(&a, &t).unwrap().kron(&eval(&b, &t).unwrap()));
    }

    #[test]
    fn lincomb_evaluation() {
        let t = universal_twin();
        assert!(eval_lincomb(&parse("id:0 - id:0").unwrap(), &t).unwrap().is_zero());
        assert_eq!(
            eval_lincomb(&parse("(-i)*id:0").unwrap(), &t).unwrap(),
            eval_lincomb(&parse("z ; zs").unwrap(), &t).unwrap()
        );
        assert_eq!(eval_lincomb(&parse("2*id:0").unwrap(), &t).unwrap(), Matrix::identity(2).scale(&RingPoly::from_int(2)));
    }

    #[test]
    fn relations_hold_in_both_examples() {
        for t in [universal_twin(), truncated_twin(3).unwrap()] {
            let r = relation_suite(&t).unwrap();
            let bad: Vec<_> = r.failed().map(|v| v.name.clone()).collect();
            assert!(bad.is_empty(), "{bad:?}");
        }
    }

    #[test]
    fn duality_mutation_is_caught() {
        let mut t = universal_twin();
        t.w.counit[1] = RingPoly::i();
        let r = relation_suite(&t).unwrap();
        assert_eq!(r.passed("cozipper-dual"), Some(false));
    }

    #[test]
    fn foam_values() {
        let r = foam_identities(&universal_twin()).unwrap();
        assert!(r.all_passed(), "{r}");
    }

    #[test]
    fn truncated_torus() {
        for n in 2..=5 {
            let t = truncated_twin(n).unwrap();
            let m = eval(&parse_diagram("uC ; dC ; mC ; eC").unwrap(), &t).unwrap();
            assert_eq!(m.get(0, 0), &RingPoly::from_int(n as i64));
        }
    }
}
