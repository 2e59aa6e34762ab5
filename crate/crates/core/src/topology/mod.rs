//! Connected components, genus and the singular boundary permutation.
//!
//! Arc routing convention. Every bi-web strand carries two arc points: `D`
//! (the arc runs down through it) and `U` (the arc runs up). A source
//! bi-web's outlet is its `D` point and its inlet the `U` point; for a target
//! bi-web it is the other way round. Inside a cell the arcs are matched
//! entry to exit as follows (`t` = top strands, `b` = bottom strands):
//!
//! | cell            | arcs                                        |
//! |-----------------|---------------------------------------------|
//! | id, swap        | `t.D -> b.D`, `b.U -> t.U`                  |
//! | zip, unit W     | `b.U -> b.D`                                |
//! | cozip, counit W | `t.D -> t.U`                                |
//! | mult W          | `t0.D -> t1.U`, `t1.D -> b0.D`, `b0.U -> t0.U` |
//! | comult W        | `t0.D -> b1.D`, `b1.U -> b0.D`, `b0.U -> t0.U` |

use serde::Serialize;
use thiserror::Error;

use crate::diagram::{Diagram, Gen, Slice, Wire};
use crate::perm::Perm;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TopologyError {
    #[error("component {component} has Euler characteristic {chi} with {boundary} boundary circles; no valid genus")]
    Genus { component: usize, chi: i64, boundary: usize },
}

/// Plain union-find with path halving.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        Self { parent: (0..n).collect() }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// One connected component of a diagram.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Component {
    /// Boundary strand indices: source strands `0..|dom|`, then target strands.
    pub boundary: Vec<usize>,
    /// Bi-web indices (source bi-webs first, then target) on this component.
    pub biwebs: Vec<usize>,
    pub euler: i64,
    pub genus: u64,
    /// Number of non-identity, non-swap cells.
    pub cells: usize,
}

impl Component {
    pub fn is_closed(&self) -> bool {
        self.boundary.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Invariants {
    pub components: Vec<Component>,
    /// Permutation of the bi-web indices, 0-based internally.
    pub sigma: Perm,
    pub singular_circles: usize,
}

/// Layer grid of a sliding-form diagram with component labels.
#[derive(Clone, Debug)]
pub struct PortGraph {
    pub slices: Vec<Slice>,
    /// `interfaces[k]` is the object above slice `k` (and below slice `k-1`).
    pub interfaces: Vec<Vec<Wire>>,
    /// Component index of each wire of each interface.
    pub wire_comp: Vec<Vec<usize>>,
    /// Component index of each non-swap slice.
    pub slice_comp: Vec<Option<usize>>,
    pub num_components: usize,
}

/// Position that wire `p` of the interface above `s` has below it, if untouched.
pub(crate) fn pass_through(s: &Slice, p: usize) -> Option<usize> {
    let end = s.offset + s.in_len();
    if p < s.offset {
        Some(p)
    } else if p >= end {
        Some(p + s.out_len() - s.in_len())
    } else if let Gen::Swap(..) = s.gen {
        Some(if p == s.offset { p + 1 } else { p - 1 })
    } else {
        None
    }
}

impl PortGraph {
    pub fn new(d: &Diagram) -> Self {
        let slices = d.slices();
        let mut interfaces = vec![d.dom.0.clone()];
        for s in &slices {
            let next = s.apply(interfaces.last().unwrap()).expect("valid diagram");
            interfaces.push(next);
        }
        let mut base = Vec::with_capacity(interfaces.len());
        let mut total = 0;
        for iface in &interfaces {
            base.push(total);
            total += iface.len();
        }
        let cell_base = total;
        let mut uf = UnionFind::new(total + slices.len());
        for (k, s) in slices.iter().enumerate() {
            for p in 0..interfaces[k].len() {
                if let Some(q) = pass_through(s, p) {
                    uf.union(base[k] + p, base[k + 1] + q);
                }
            }
            if !matches!(s.gen, Gen::Swap(..)) {
                for p in s.offset..s.offset + s.in_len() {
                    uf.union(cell_base + k, base[k] + p);
                }
                for q in s.offset..s.offset + s.out_len() {
                    uf.union(cell_base + k, base[k + 1] + q);
                }
            }
        }
        // label components in order of first appearance: boundary strands
        // (source then target), then cells
        let mut label = vec![usize::MAX; total + slices.len()];
        let mut next = 0;
        let last = interfaces.len() - 1;
        let mut order: Vec<usize> = (0..interfaces[0].len()).map(|p| base[0] + p).collect();
        order.extend((0..interfaces[last].len()).map(|p| base[last] + p));
        order.extend((0..slices.len()).filter(|&k| !matches!(slices[k].gen, Gen::Swap(..))).map(|k| cell_base + k));
        for x in order {
            let r = uf.find(x);
            if label[r] == usize::MAX {
                label[r] = next;
                next += 1;
            }
        }
        let mut wire_comp = Vec::with_capacity(interfaces.len());
        for (k, iface) in interfaces.iter().enumerate() {
            wire_comp.push((0..iface.len()).map(|p| label[uf.find(base[k] + p)]).collect());
        }
        let slice_comp = (0..slices.len())
            .map(|k| (!matches!(slices[k].gen, Gen::Swap(..))).then(|| label[uf.find(cell_base + k)]))
            .collect();
        PortGraph { slices, interfaces, wire_comp, slice_comp, num_components: next }
    }
}

/// Connected components with Euler characteristic and genus.
pub fn components(d: &Diagram) -> Result<Vec<Component>, TopologyError> {
    let g = PortGraph::new(d);
    let n = g.num_components;
    let mut comps: Vec<Component> =
        (0..n).map(|_| Component { boundary: vec![], biwebs: vec![], euler: 0, genus: 0, cells: 0 }).collect();
    let last = g.interfaces.len() - 1;
    let n_src = g.interfaces[0].len();
    let mut biweb = 0;
    for (p, &w) in g.interfaces[0].iter().enumerate() {
        let c = g.wire_comp[0][p];
        comps[c].boundary.push(p);
        if w == Wire::W {
            comps[c].biwebs.push(biweb);
            biweb += 1;
        }
    }
    for (p, &w) in g.interfaces[last].iter().enumerate() {
        let c = g.wire_comp[last][p];
        comps[c].boundary.push(n_src + p);
        if w == Wire::W {
            comps[c].biwebs.push(biweb);
            biweb += 1;
        }
    }
    for (k, s) in g.slices.iter().enumerate() {
        if let Some(c) = g.slice_comp[k] {
            comps[c].euler += s.gen.euler();
            comps[c].cells += 1;
        }
    }
    for (idx, c) in comps.iter_mut().enumerate() {
        let twice = 2 - c.euler - c.boundary.len() as i64;
        if twice < 0 || twice % 2 != 0 {
            return Err(TopologyError::Genus { component: idx, chi: c.euler, boundary: c.boundary.len() });
        }
        c.genus = (twice / 2) as u64;
    }
    Ok(comps)
}

/// Per-component genus, in component order.
pub fn euler_genus(d: &Diagram) -> Result<Vec<u64>, TopologyError> {
    Ok(components(d)?.into_iter().map(|c| c.genus).collect())
}

/// Total Euler characteristic from the contribution table.
pub fn euler_characteristic(d: &Diagram) -> i64 {
    d.layers.iter().flatten().map(|g| g.euler()).sum()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Pt {
    D(usize, usize),
    U(usize, usize),
}

/// Singular boundary permutation and the number of closed singular arcs.
pub fn singular_permutation(d: &Diagram) -> (Perm, usize) {
    let slices = d.slices();
    let mut ifaces = vec![d.dom.0.clone()];
    for s in &slices {
        let next = s.apply(ifaces.last().unwrap()).expect("valid diagram");
        ifaces.push(next);
    }
    let n = slices.len();

    // successor of a point along its arc, None at an inlet
    let next = |pt: Pt| -> Option<Pt> {
        match pt {
            Pt::D(k, p) => {
                let s = slices.get(k)?;
                if let Some(q) = pass_through(s, p) {
                    return Some(Pt::D(k + 1, q));
                }
                let t = p - s.offset;
                Some(match (s.gen, t) {
                    (Gen::Cozip | Gen::CounitW, 0) => Pt::U(k, p),
                    (Gen::MultW, 0) => Pt::U(k, s.offset + 1),
                    (Gen::MultW, 1) => Pt::D(k + 1, s.offset),
                    (Gen::ComultW, 0) => Pt::D(k + 1, s.offset + 1),
                    _ => unreachable!("no down-arc entry for {:?}", s.gen),
                })
            }
            Pt::U(k, p) => {
                if k == 0 {
                    return None;
                }
                let s = &slices[k - 1];
                // wire p below s: find where it comes from
                let end_out = s.offset + s.out_len();
                let above = if p < s.offset {
                    Some(p)
                } else if p >= end_out {
                    Some(p + s.in_len() - s.out_len())
                } else if let Gen::Swap(..) = s.gen {
                    Some(if p == s.offset { p + 1 } else { p - 1 })
                } else {
                    None
                };
                if let Some(q) = above {
                    return Some(Pt::U(k - 1, q));
                }
                let b = p - s.offset;
                Some(match (s.gen, b) {
                    (Gen::Zip | Gen::UnitW, 0) => Pt::D(k, p),
                    (Gen::MultW, 0) => Pt::U(k - 1, s.offset),
                    (Gen::ComultW, 1) => Pt::D(k, s.offset),
                    (Gen::ComultW, 0) => Pt::U(k - 1, s.offset),
                    _ => unreachable!("no up-arc entry for {:?}", s.gen),
                })
            }
        }
    };

    // bi-web numbering: source first, then target
    let mut src_idx = vec![usize::MAX; ifaces[0].len()];
    let mut tgt_idx = vec![usize::MAX; ifaces[n].len()];
    let mut l = 0;
    for (p, &w) in ifaces[0].iter().enumerate() {
        if w == Wire::W {
            src_idx[p] = l;
            l += 1;
        }
    }
    for (p, &w) in ifaces[n].iter().enumerate() {
        if w == Wire::W {
            tgt_idx[p] = l;
            l += 1;
        }
    }

    let mut visited = std::collections::HashSet::new();
    let mut images = vec![usize::MAX; l];
    let outlets = (0..ifaces[0].len())
        .filter(|&p| ifaces[0][p] == Wire::W)
        .map(|p| (src_idx[p], Pt::D(0, p)))
        .chain((0..ifaces[n].len()).filter(|&p| ifaces[n][p] == Wire::W).map(|p| (tgt_idx[p], Pt::U(n, p))));
    for (from, start) in outlets {
        let mut pt = start;
        visited.insert(pt);
        while let Some(q) = next(pt) {
            visited.insert(q);
            pt = q;
        }
        images[from] = match pt {
            Pt::U(0, p) => src_idx[p],
            Pt::D(k, p) if k == n => tgt_idx[p],
            other => unreachable!("arc ended at interior point {other:?}"),
        };
    }
    let sigma = Perm::from_images(images).expect("arc tracing is a bijection");

    let mut circles = 0;
    for (k, iface) in ifaces.iter().enumerate() {
        for (p, &w) in iface.iter().enumerate() {
            if w != Wire::W {
                continue;
            }
            for start in [Pt::D(k, p), Pt::U(k, p)] {
                if visited.contains(&start) {
                    continue;
                }
                circles += 1;
                let mut pt = start;
                while visited.insert(pt) {
                    pt = next(pt).expect("closed arcs have no ends");
                }
            }
        }
    }
    (sigma, circles)
}

pub fn invariants(d: &Diagram) -> Result<Invariants, TopologyError> {
    let components = components(d)?;
    let (sigma, singular_circles) = singular_permutation(d);
    Ok(Invariants { components, sigma, singular_circles })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::parse_diagram;

    fn d(s: &str) -> Diagram {
        parse_diagram(s).unwrap()
    }

    #[test]
    fn component_counts() {
        assert_eq!(components(&d("uC | uC")).unwrap().len(), 2);
        let m = components(&d("mC")).unwrap();
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].boundary, vec![0, 1, 2]);
        let s = components(&d("(uC ; eC) | id:0")).unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!(s.iter().filter(|c| c.is_closed()).count(), 1);
    }

    #[test]
    fn genus_examples() {
        assert_eq!(euler_genus(&d("uC ; dC ; mC ; eC")).unwrap(), vec![1]);
        assert_eq!(euler_genus(&d("id:0")).unwrap(), vec![0]);
        assert_eq!(euler_genus(&d("dC ; mC")).unwrap(), vec![1]);
        assert_eq!(euler_characteristic(&d("uC ; dC ; mC ; eC")), 0);
    }

    #[test]
    fn sigma_examples() {
        let (s, c) = singular_permutation(&d("id:1"));
        assert_eq!(s.to_string(), "(1 2)");
        assert_eq!(c, 0);
        let (s, c) = singular_permutation(&d("z"));
        assert!(s.is_identity() && s.len() == 1);
        assert_eq!(c, 0);
        let (s, c) = singular_permutation(&d("z ; zs"));
        assert!(s.is_empty());
        assert_eq!(c, 1);
        let (s, _) = singular_permutation(&d("(mW | id:1) ; mW ; zs"));
        assert_eq!(s.to_string(), "(1 2 3)");
        let (s, _) = singular_permutation(&d("zs | zs"));
        assert!(s.is_identity());
    }

    #[test]
    fn sigma_preserved_by_w_associativity() {
        let a = singular_permutation(&d("(mW | id:1) ; mW")).0;
        let b = singular_permutation(&d("(id:1 | mW) ; mW")).0;
        assert_eq!(a, b);
    }

    #[test]
    fn catalog_rules_respect_invariants() {
        let mut bad = Vec::new();
        for r in crate::diagram::rule_catalog() {
            let (l, rr) = (invariants(&r.lhs).unwrap(), invariants(&r.rhs).unwrap());
            if (l.sigma == rr.sigma) == r.changes_sigma {
                bad.push(format!("{} sigma {} vs {}", r.name, l.sigma, rr.sigma));
            }
            let shape = |i: &Invariants| {
                let mut v: Vec<_> = i.components.iter().map(|c| (c.boundary.clone(), c.genus)).collect();
                v.sort();
                v
            };
            if shape(&l) != shape(&rr) {
                bad.push(format!("{} components", r.name));
            }
        }
        assert!(bad.is_empty(), "{bad:#?}");
    }
}
