//! Oracles shared by the integration tests. They avoid the library's
//! evaluation and topology code paths on purpose.

#![allow(dead_code)]

use std::collections::BTreeMap;

use singcob::algebra::TwinAlgebraPresentation;
use singcob::diagram::{Diagram, Gen, Wire};
use singcob::matrix::Matrix;
use singcob::ring::RingPoly;

fn rank(t: &TwinAlgebraPresentation, w: Wire) -> usize {
    match w {
        Wire::C => t.c.rank,
        Wire::W => t.w.rank,
    }
}

/// `e_i ⊗ e_j ↦ e_j ⊗ e_i`, built entry by entry.
fn swap_matrix(ra: usize, rb: usize) -> Matrix {
    let n = ra * rb;
    Matrix::from_fn(n, n, |r, c| {
        let (i, j) = (c / rb, c % rb);
        if r == j * ra + i {
            RingPoly::one()
        } else {
            RingPoly::zero()
        }
    })
}

fn gen_matrix(t: &TwinAlgebraPresentation, g: Gen) -> Matrix {
    match g {
        Gen::MultC => t.c.mult_matrix(),
        Gen::ComultC => t.c.comult_matrix(),
        Gen::UnitC => t.c.unit_matrix(),
        Gen::CounitC => t.c.counit_matrix(),
        Gen::MultW => t.w.mult_matrix(),
        Gen::ComultW => t.w.comult_matrix(),
        Gen::UnitW => t.w.unit_matrix(),
        Gen::CounitW => t.w.counit_matrix(),
        Gen::Zip => t.z.clone(),
        Gen::Cozip => t.zstar.clone(),
        Gen::IdC => Matrix::identity(t.c.rank),
        Gen::IdW => Matrix::identity(t.w.rank),
        Gen::Swap(a, b) => swap_matrix(rank(t, a), rank(t, b)),
    }
}

/// Evaluation as a product of per-layer Kronecker products.
pub fn kron_eval(d: &Diagram, t: &TwinAlgebraPresentation) -> Matrix {
    let dim: usize = d.dom.wires().iter().map(|&w| rank(t, w)).product();
    let mut acc = Matrix::identity(dim);
    for layer in &d.layers {
        let m = layer.iter().fold(Matrix::identity(1), |m, &g| m.kron(&gen_matrix(t, g)));
        acc = &m * &acc;
    }
    acc
}

/// Per-component data of the CW oracle.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct CwComponent {
    /// Boundary strands, source first then target.
    pub boundary: Vec<usize>,
    pub euler: i64,
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn find(&mut self, x: usize) -> usize {
        if self.0[x] != x {
            let r = self.find(self.0[x]);
            self.0[x] = r;
        }
        self.0[x]
    }
    fn join(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        self.0[a] = b;
    }
}

/// Cell structure of the layer grid: every interface strand is a circle
/// with one vertex and one edge. Per generator, the interior cells are:
/// an identity or (co)zipper cylinder has one seam edge and one face, a
/// swap two cylinders, a cap or cup one disk face, and a pair of pants
/// two seam edges and one face.
pub fn cw_components(d: &Diagram) -> Vec<CwComponent> {
    let mut widths = vec![d.dom.len()];
    for layer in &d.layers {
        widths.push(layer.iter().map(|g| g.cod().len()).sum());
    }
    let mut base = vec![0];
    for w in &widths {
        base.push(base.last().unwrap() + w);
    }
    let nv = *base.last().unwrap();
    let mut dsu = Dsu((0..nv).collect());
    // (vertex touched, edges, faces) per interior piece
    let mut pieces: Vec<(Vec<usize>, i64, i64)> = Vec::new();
    for (k, layer) in d.layers.iter().enumerate() {
        let (mut top, mut bot) = (0, 0);
        for &g in layer {
            let (i, o) = (g.dom().len(), g.cod().len());
            let ups: Vec<usize> = (0..i).map(|p| base[k] + top + p).collect();
            let downs: Vec<usize> = (0..o).map(|p| base[k + 1] + bot + p).collect();
            match g {
                Gen::Swap(..) => {
                    pieces.push((vec![ups[0], downs[1]], 1, 1));
                    pieces.push((vec![ups[1], downs[0]], 1, 1));
                }
                _ => {
                    let verts: Vec<usize> = ups.iter().chain(&downs).copied().collect();
                    let (e, f) = match i + o {
                        1 => (0, 1),
                        2 => (1, 1),
                        3 => (2, 1),
                        _ => unreachable!("generators have at most three legs"),
                    };
                    pieces.push((verts, e, f));
                }
            }
            top += i;
            bot += o;
        }
    }
    // pieces without vertices would be closed surfaces; generators always have legs
    for (verts, _, _) in &pieces {
        for w in verts.windows(2) {
            dsu.join(w[0], w[1]);
        }
    }
    let mut comps: BTreeMap<usize, CwComponent> = BTreeMap::new();
    for v in 0..nv {
        let r = dsu.find(v);
        // one vertex and one circle edge per strand
        comps.entry(r).or_insert(CwComponent { boundary: vec![], euler: 0 });
    }
    let last = widths.len() - 1;
    for p in 0..widths[0] {
        let r = dsu.find(base[0] + p);
        comps.get_mut(&r).unwrap().boundary.push(p);
    }
    for p in 0..widths[last] {
        let r = dsu.find(base[last] + p);
        comps.get_mut(&r).unwrap().boundary.push(widths[0] + p);
    }
    for (verts, e, f) in &pieces {
        let r = dsu.find(verts[0]);
        comps.get_mut(&r).unwrap().euler += f - e;
    }
    let mut out: Vec<CwComponent> = comps.into_values().collect();
    out.sort();
    out
}

/// Total `V − E + F`.
pub fn cw_euler(d: &Diagram) -> i64 {
    cw_components(d).iter().map(|c| c.euler).sum()
}

/// All diagrams reachable in at most `depth` slices from sources of width
/// at most `max_dom`, interfaces capped at `max_width`.
pub fn all_words(depth: usize, max_dom: usize, max_width: usize) -> Vec<Diagram> {
    use singcob::diagram::{Obj, Slice};
    let mut doms: Vec<Vec<Wire>> = vec![vec![]];
    for n in 1..=max_dom {
        let mut next = Vec::new();
        for d in doms.iter().filter(|d| d.len() == n - 1) {
            for w in [Wire::C, Wire::W] {
                let mut e = d.clone();
                e.push(w);
                next.push(e);
            }
        }
        doms.extend(next);
    }
    let mut out = Vec::new();
    let mut frontier: Vec<(Vec<Wire>, Vec<Wire>, Vec<Slice>)> = doms.into_iter().map(|d| (d.clone(), d, vec![])).collect();
    for _ in 0..depth {
        let mut next = Vec::new();
        for (dom, cur, slices) in &frontier {
            for g in Gen::ALL.iter().copied().filter(|g| !g.is_identity()) {
                let i = g.dom().len();
                if cur.len() < i || cur.len() - i + g.cod().len() > max_width {
                    continue;
                }
                for off in 0..=cur.len() - i {
                    if &cur[off..off + i] != g.dom() {
                        continue;
                    }
                    let s = Slice { offset: off, gen: g };
                    let mut sl = slices.clone();
                    sl.push(s);
                    next.push((dom.clone(), s.apply(cur).unwrap(), sl));
                }
            }
        }
        for (dom, _, sl) in &next {
            out.push(Diagram::from_slices(Obj(dom.clone()), sl).unwrap());
        }
        frontier = next;
    }
    out
}
