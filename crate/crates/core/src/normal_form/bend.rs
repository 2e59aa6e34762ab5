//! Bending boundary circles and target bi-webs so a connected cobordism
//! becomes W→C, and bending them back.
//!
//! For `d: n → m` with `n0` source circles, source bi-webs `S`, target
//! circles `T` and `m1` target bi-webs `y_1..y_m1`, the bent form is
//! `S ⊗ (v_m1 … v_1) → (p_n0 … p_1) ⊗ T`, where `v_j` is the bent `y_j`
//! and `p_i` the bent `i`-th source circle.

use crate::diagram::{permutation_diagram, Diagram, Gen, Obj, Slice, Wire};
use crate::perm::Perm;

/// Boundary of the unbent cobordism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BendProfile {
    pub dom: Obj,
    pub cod: Obj,
}

impl BendProfile {
    pub fn of(d: &Diagram) -> Self {
        Self { dom: d.dom.clone(), cod: d.cod.clone() }
    }

    fn positions(obj: &Obj, w: Wire) -> Vec<usize> {
        obj.wires().iter().enumerate().filter(|(_, &x)| x == w).map(|(p, _)| p).collect()
    }

    /// Source and target of the bent form.
    pub fn bent_type(&self) -> (Obj, Obj) {
        let n1 = self.dom.count(Wire::W) + self.cod.count(Wire::W);
        let m0 = self.dom.count(Wire::C) + self.cod.count(Wire::C);
        (Obj(vec![Wire::W; n1]), Obj(vec![Wire::C; m0]))
    }
}

fn seq(slices: &mut Vec<Slice>, cur: &mut Vec<Wire>, s: Slice) {
    *cur = s.apply(cur).expect("bend slices type-check");
    slices.push(s);
}

fn permute(slices: &mut Vec<Slice>, cur: &mut Vec<Wire>, images: Vec<usize>) {
    let p = Perm::from_images(images).expect("bend permutation");
    let d = permutation_diagram(&p, &Obj(cur.clone())).expect("sizes agree");
    for s in d.slices() {
        seq(slices, cur, s);
    }
}

fn embed(slices: &mut Vec<Slice>, cur: &mut Vec<Wire>, d: &Diagram, at: usize) {
    for s in d.slices() {
        seq(slices, cur, Slice { offset: s.offset + at, gen: s.gen });
    }
}

/// The W→C form of `d`.
pub fn bend(d: &Diagram) -> Diagram {
    let prof = BendProfile::of(d);
    let (n, m) = (&prof.dom, &prof.cod);
    let src_c = BendProfile::positions(n, Wire::C);
    let src_w = BendProfile::positions(n, Wire::W);
    let tgt_c = BendProfile::positions(m, Wire::C);
    let tgt_w = BendProfile::positions(m, Wire::W);
    let (n0, m1) = (src_c.len(), tgt_w.len());
    let dom = vec![Wire::W; src_w.len() + m1];
    let mut cur = dom.clone();
    let mut slices = Vec::new();

    // copairs (c_i, p_i) on the left
    for i in 0..n0 {
        seq(&mut slices, &mut cur, Slice { offset: 2 * i, gen: Gen::UnitC });
        seq(&mut slices, &mut cur, Slice { offset: 2 * i, gen: Gen::ComultC });
    }
    // [c1 p1 … c_n0 p_n0, S, v…] → [n, p_n0 … p_1, v…]
    let mut images = vec![0; cur.len()];
    for i in 0..n0 {
        images[2 * i] = src_c[i];
        images[2 * i + 1] = n.len() + (n0 - 1 - i);
    }
    for (j, &p) in src_w.iter().enumerate() {
        images[2 * n0 + j] = p;
    }
    for k in 0..m1 {
        images[2 * n0 + src_w.len() + k] = n.len() + n0 + k;
    }
    permute(&mut slices, &mut cur, images);
    embed(&mut slices, &mut cur, d, 0);

    // [m, p_n0 … p_1, v_m1 … v_1] → [p…, T, (y_1 v_1) … (y_m1 v_m1)]
    let mut images = vec![0; cur.len()];
    let t0 = n0 + tgt_c.len();
    for (k, &p) in tgt_c.iter().enumerate() {
        images[p] = n0 + k;
    }
    for (j, &p) in tgt_w.iter().enumerate() {
        images[p] = t0 + 2 * j;
    }
    for i in 0..n0 {
        images[m.len() + i] = i;
    }
    for k in 0..m1 {
        // v_{m1-k} sits at m.len() + n0 + k
        let j = m1 - 1 - k;
        images[m.len() + n0 + k] = t0 + 2 * j + 1;
    }
    permute(&mut slices, &mut cur, images);
    for _ in 0..m1 {
        seq(&mut slices, &mut cur, Slice { offset: t0, gen: Gen::MultW });
        seq(&mut slices, &mut cur, Slice { offset: t0, gen: Gen::CounitW });
    }
    Diagram::from_slices(Obj(dom), &slices).expect("bend type-checks")
}

/// Inverse of [`bend`] for a W→C cobordism `e` of the bent type of `prof`.
pub fn unbend(e: &Diagram, prof: &BendProfile) -> Diagram {
    let (n, m) = (&prof.dom, &prof.cod);
    let src_c = BendProfile::positions(n, Wire::C);
    let src_w = BendProfile::positions(n, Wire::W);
    let tgt_c = BendProfile::positions(m, Wire::C);
    let tgt_w = BendProfile::positions(m, Wire::W);
    let (n0, m1) = (src_c.len(), tgt_w.len());
    debug_assert_eq!((e.dom.clone(), e.cod.clone()), prof.bent_type());
    let mut cur = n.0.clone();
    let mut slices = Vec::new();

    // n → [c1 … c_n0, S]
    let mut images = vec![0; n.len()];
    for (i, &p) in src_c.iter().enumerate() {
        images[p] = i;
    }
    for (j, &p) in src_w.iter().enumerate() {
        images[p] = n0 + j;
    }
    permute(&mut slices, &mut cur, images);

    // nested copairs giving x_m1 … x_1 y_1 … y_m1 after S
    let base = n0 + src_w.len();
    for j in (1..=m1).rev() {
        let at = base + (m1 - j);
        seq(&mut slices, &mut cur, Slice { offset: at, gen: Gen::UnitW });
        seq(&mut slices, &mut cur, Slice { offset: at, gen: Gen::ComultW });
    }
    embed(&mut slices, &mut cur, e, n0);

    // [c1 … c_n0, p_n0 … p_1, T, y…]: pair innermost first
    for i in (0..n0).rev() {
        seq(&mut slices, &mut cur, Slice { offset: i, gen: Gen::MultC });
        seq(&mut slices, &mut cur, Slice { offset: i, gen: Gen::CounitC });
    }
    // [T, y_1 … y_m1] → m
    let mut images = vec![0; cur.len()];
    for (k, &p) in tgt_c.iter().enumerate() {
        images[k] = p;
    }
    for (j, &p) in tgt_w.iter().enumerate() {
        images[tgt_c.len() + j] = p;
    }
    permute(&mut slices, &mut cur, images);
    Diagram::from_slices(n.clone(), &slices).expect("unbend type-checks")
}
