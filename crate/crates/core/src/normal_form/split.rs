//! Splitting a diagram into its connected components.

use crate::diagram::{Diagram, Gen, Obj, Slice};
use crate::topology::{components, PortGraph, TopologyError};

/// One connected component, cut out as a diagram of its own.
#[derive(Clone, Debug)]
pub struct Part {
    pub diagram: Diagram,
    /// Indices into the source object, in order.
    pub src: Vec<usize>,
    /// Indices into the target object, in order.
    pub tgt: Vec<usize>,
    pub genus: u64,
}

/// Components ordered by their first source strand, then first target
/// strand; closed components last, by genus.
pub fn split(d: &Diagram) -> Result<Vec<Part>, TopologyError> {
    let comps = components(d)?;
    let g = PortGraph::new(d);
    let n_src = d.dom.len();
    let mut parts: Vec<Part> = Vec::with_capacity(comps.len());
    for (c, comp) in comps.iter().enumerate() {
        let restrict = |iface: usize, p: usize| (0..p).filter(|&q| g.wire_comp[iface][q] == c).count();
        let mut slices = Vec::new();
        for (k, s) in g.slices.iter().enumerate() {
            let mine = match s.gen {
                Gen::Swap(..) => g.wire_comp[k][s.offset] == c && g.wire_comp[k][s.offset + 1] == c,
                _ => g.slice_comp[k] == Some(c),
            };
            if mine {
                slices.push(Slice { offset: restrict(k, s.offset), gen: s.gen });
            }
        }
        let dom = Obj((0..n_src).filter(|&p| g.wire_comp[0][p] == c).map(|p| d.dom.0[p]).collect());
        let diagram = Diagram::from_slices(dom, &slices).expect("a component is a diagram");
        let src: Vec<usize> = comp.boundary.iter().copied().filter(|&b| b < n_src).collect();
        let tgt: Vec<usize> = comp.boundary.iter().filter(|&&b| b >= n_src).map(|&b| b - n_src).collect();
        debug_assert_eq!(diagram.cod.len(), tgt.len());
        parts.push(Part { diagram, src, tgt, genus: comp.genus });
    }
    parts.sort_by_key(|p| {
        let closed = p.src.is_empty() && p.tgt.is_empty();
        (closed, p.src.first().copied().unwrap_or(usize::MAX), p.tgt.first().copied().unwrap_or(usize::MAX), p.genus)
    });
    Ok(parts)
}
