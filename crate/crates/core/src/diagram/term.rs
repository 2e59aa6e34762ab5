use serde::Serialize;

use super::{DiagramError, Gen, Obj, Wire};

/// One generator placed at a wire offset of the interface above it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Slice {
    pub offset: usize,
    pub gen: Gen,
}

impl Slice {
    pub fn in_len(&self) -> usize {
        self.gen.dom().len()
    }

    pub fn out_len(&self) -> usize {
        self.gen.cod().len()
    }

    /// Applies the slice to an interface, returning the interface below.
    pub fn apply(&self, above: &[Wire]) -> Option<Vec<Wire>> {
        let end = self.offset + self.in_len();
        if end > above.len() || &above[self.offset..end] != self.gen.dom() {
            return None;
        }
        let mut out = above[..self.offset].to_vec();
        out.extend_from_slice(self.gen.cod());
        out.extend_from_slice(&above[end..]);
        Some(out)
    }
}

/// A layered word of generators read top to bottom.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Diagram {
    pub dom: Obj,
    pub cod: Obj,
    #[serde(skip)]
    pub layers: Vec<Vec<Gen>>,
}

fn layer_dom(layer: &[Gen]) -> Vec<Wire> {
    layer.iter().flat_map(|g| g.dom().iter().copied()).collect()
}

fn layer_cod(layer: &[Gen]) -> Vec<Wire> {
    layer.iter().flat_map(|g| g.cod().iter().copied()).collect()
}

fn identity_layer(obj: &Obj) -> Vec<Gen> {
    obj.wires().iter().map(|&w| Gen::identity(w)).collect()
}

impl Diagram {
    pub fn identity(obj: Obj) -> Diagram {
        Diagram { dom: obj.clone(), cod: obj, layers: Vec::new() }
    }

    pub fn generator(g: Gen) -> Diagram {
        Diagram { dom: Obj(g.dom().to_vec()), cod: Obj(g.cod().to_vec()), layers: vec![vec![g]] }
    }

    /// Builds a diagram from layers, inferring the boundary; the empty
    /// object is assumed when there are no layers.
    pub fn from_layers(layers: Vec<Vec<Gen>>) -> Result<Diagram, DiagramError> {
        let dom = layers.first().map_or_else(Obj::empty, |l| Obj(layer_dom(l)));
        let cod = layers.last().map_or_else(Obj::empty, |l| Obj(layer_cod(l)));
        let d = Diagram { dom, cod, layers };
        d.validate()?;
        Ok(d)
    }

    /// Wraps a slice sequence: one generator per layer, padded with identities.
    pub fn from_slices(dom: Obj, slices: &[Slice]) -> Result<Diagram, DiagramError> {
        let mut cur = dom.0.clone();
        let mut layers = Vec::with_capacity(slices.len());
        for (k, s) in slices.iter().enumerate() {
            let next = s.apply(&cur).ok_or_else(|| DiagramError::Interface {
                position: k,
                expected: Obj(cur.clone()),
                found: Obj(s.gen.dom().to_vec()),
            })?;
            let mut layer: Vec<Gen> = cur[..s.offset].iter().map(|&w| Gen::identity(w)).collect();
            layer.push(s.gen);
            layer.extend(cur[s.offset + s.in_len()..].iter().map(|&w| Gen::identity(w)));
            layers.push(layer);
            cur = next;
        }
        Ok(Diagram { dom, cod: Obj(cur), layers })
    }

    pub fn is_identity(&self) -> bool {
        self.layers.iter().all(|l| l.iter().all(|g| g.is_identity()))
    }

    /// Number of non-identity cells.
    pub fn num_cells(&self) -> usize {
        self.layers.iter().flatten().filter(|g| !g.is_identity()).count()
    }

    /// Widest interface, in wires.
    pub fn width(&self) -> usize {
        let mut w = self.dom.len();
        for l in &self.layers {
            w = w.max(layer_cod(l).len());
        }
        w
    }

    /// Interface objects, from `dom` (index 0) to `cod`.
    pub fn interfaces(&self) -> Vec<Obj> {
        let mut out = vec![self.dom.clone()];
        for l in &self.layers {
            out.push(Obj(layer_cod(l)));
        }
        out
    }

    pub fn validate(&self) -> Result<(), DiagramError> {
        let mut cur = self.dom.clone();
        for (k, layer) in self.layers.iter().enumerate() {
            if layer.is_empty() {
                return Err(DiagramError::EmptyLayer(k));
            }
            let d = Obj(layer_dom(layer));
            if d != cur {
                return Err(DiagramError::Interface { position: k, expected: cur, found: d });
            }
            cur = Obj(layer_cod(layer));
        }
        if cur != self.cod {
            return Err(DiagramError::Interface { position: self.layers.len(), expected: self.cod.clone(), found: cur });
        }
        Ok(())
    }

    /// `self` on top of `other`.
    pub fn compose(&self, other: &Diagram) -> Result<Diagram, DiagramError> {
        if self.cod != other.dom {
            return Err(DiagramError::Interface {
                position: self.layers.len(),
                expected: self.cod.clone(),
                found: other.dom.clone(),
            });
        }
        let mut layers = self.layers.clone();
        layers.extend(other.layers.iter().cloned());
        Ok(Diagram { dom: self.dom.clone(), cod: other.cod.clone(), layers })
    }

    /// Side-by-side union; the shorter layer list is padded with identity
    /// layers at its bottom.
    pub fn tensor(&self, other: &Diagram) -> Diagram {
        let n = self.layers.len().max(other.layers.len());
        let mut layers = Vec::with_capacity(n);
        for k in 0..n {
            let mut layer = match self.layers.get(k) {
                Some(l) => l.clone(),
                None => identity_layer(&self.cod),
            };
            match other.layers.get(k) {
                Some(l) => layer.extend_from_slice(l),
                None => layer.extend(identity_layer(&other.cod)),
            }
            layers.push(layer);
        }
        layers.retain(|l| !l.is_empty());
        Diagram { dom: self.dom.concat(&other.dom), cod: self.cod.concat(&other.cod), layers }
    }

    pub fn tensor_all<'a>(ds: impl IntoIterator<Item = &'a Diagram>) -> Diagram {
        ds.into_iter().fold(Diagram::identity(Obj::empty()), |acc, d| acc.tensor(d))
    }

    /// The non-identity cells as slices, left to right within each layer.
    pub fn slices(&self) -> Vec<Slice> {
        let mut out = Vec::new();
        for layer in &self.layers {
            // cells to the left that have already fired changed the offsets
            let mut shift: isize = 0;
            let mut pos = 0usize;
            for &g in layer {
                if !g.is_identity() {
                    out.push(Slice { offset: (pos as isize + shift) as usize, gen: g });
                    shift += g.cod().len() as isize - g.dom().len() as isize;
                }
                pos += g.dom().len();
            }
        }
        out
    }

    /// One non-identity cell per layer.
    pub fn slide(&self) -> Diagram {
        Diagram::from_slices(self.dom.clone(), &self.slices()).expect("slices of a valid diagram")
    }

    /// Sliding form with independent adjacent slices ordered leftmost first.
    pub fn canonical(&self) -> Diagram {
        let s = canonical_slices(self.slices());
        Diagram::from_slices(self.dom.clone(), &s).expect("interchange preserves typing")
    }

    pub fn structurally_eq(&self, other: &Diagram) -> bool {
        self.dom == other.dom && self.cod == other.cod && self.canonical().layers == other.canonical().layers
    }
}

/// If `lower` (applied after `upper`) can move above `upper`, returns the
/// swapped pair `(lower', upper')`.
pub(crate) fn interchange(upper: Slice, lower: Slice) -> Option<(Slice, Slice)> {
    let (uo, uc) = (upper.offset, upper.out_len());
    let (lo, li) = (lower.offset, lower.in_len());
    if lo + li <= uo {
        // lower sits left of upper's outputs
        let shift = lower.out_len() as isize - li as isize;
        let moved = Slice { offset: (uo as isize + shift) as usize, gen: upper.gen };
        return Some((lower, moved));
    }
    if lo >= uo + uc {
        let shift = upper.out_len() as isize - upper.in_len() as isize;
        let moved = Slice { offset: (lo as isize - shift) as usize, gen: lower.gen };
        return Some((moved, upper));
    }
    None
}

/// Bubble-sorts adjacent independent slices so that a lower slice strictly
/// left of the one above it moves up.
pub(crate) fn canonical_slices(mut s: Vec<Slice>) -> Vec<Slice> {
    let mut changed = true;
    while changed {
        changed = false;
        for k in 1..s.len() {
            let (upper, lower) = (s[k - 1], s[k]);
            // a cap directly above a cup touch at a point; leave them be
            let touching = lower.in_len() == 0 && upper.out_len() == 0 && lower.offset == upper.offset;
            if lower.offset + lower.in_len() <= upper.offset && !touching {
                let (a, b) = interchange(upper, lower).expect("left slices commute");
                s[k - 1] = a;
                s[k] = b;
                changed = true;
            }
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use Wire::{C, W};

    fn g(x: Gen) -> Diagram {
        Diagram::generator(x)
    }

    #[test]
    fn compose_checks_interfaces() {
        let zz = g(Gen::Zip).compose(&g(Gen::Cozip)).unwrap();
        assert_eq!(zz.dom, Obj(vec![C]));
        assert_eq!(zz.layers.len(), 2);
        let err = g(Gen::MultC).compose(&g(Gen::MultC)).unwrap_err();
        assert!(matches!(err, DiagramError::Interface { position: 1, .. }));
        let id = Diagram::identity(Obj(vec![C]));
        assert_eq!(id.compose(&g(Gen::ComultC)).unwrap(), g(Gen::ComultC));
        let sphere = g(Gen::UnitC).compose(&g(Gen::CounitC)).unwrap();
        assert!(sphere.dom.is_empty() && sphere.cod.is_empty());
    }

    #[test]
    fn tensor_pads_shorter_side() {
        let t = g(Gen::MultW).tensor(&g(Gen::IdW));
        assert_eq!(t.dom, Obj(vec![W, W, W]));
        assert_eq!(t.cod, Obj(vec![W, W]));
        let u = g(Gen::UnitC).tensor(&g(Gen::UnitW));
        assert_eq!(u.cod, Obj(vec![C, W]));
        assert!(u.validate().is_ok());
        let ids = Diagram::identity(Obj(vec![C])).tensor(&Diagram::identity(Obj(vec![W])));
        assert_eq!(ids, Diagram::identity(Obj(vec![C, W])));
        let two = g(Gen::ComultC).compose(&g(Gen::MultC)).unwrap().tensor(&g(Gen::Zip));
        assert!(two.validate().is_ok());
        assert_eq!(two.layers[1], vec![Gen::MultC, Gen::IdW]);
    }

    #[test]
    fn validate_reports_first_mismatch() {
        let bad = Diagram { dom: Obj(vec![C, C]), cod: Obj(vec![C]), layers: vec![vec![Gen::MultC], vec![Gen::IdC, Gen::IdC]] };
        assert!(matches!(bad.validate(), Err(DiagramError::Interface { position: 1, .. })));
        assert!(Diagram::identity(Obj(vec![C, W])).validate().is_ok());
    }

    #[test]
    fn slide_and_interchange() {
        let mm = Diagram { dom: Obj(vec![C, C, C, C]), cod: Obj(vec![C, C]), layers: vec![vec![Gen::MultC, Gen::MultC]] };
        let s = mm.slide();
        assert_eq!(s.layers, vec![vec![Gen::MultC, Gen::IdC, Gen::IdC], vec![Gen::IdC, Gen::MultC]]);
        // right one first, then left: canonical puts the left one on top
        let rl = Diagram::from_slices(mm.dom.clone(), &[Slice { offset: 2, gen: Gen::MultC }, Slice { offset: 0, gen: Gen::MultC }]).unwrap();
        assert_eq!(rl.canonical(), s);
        assert!(rl.structurally_eq(&mm));
    }

    #[test]
    fn unit_counit_interchange_terminates() {
        let d = Diagram::from_slices(
            Obj(vec![C, C]),
            &[Slice { offset: 1, gen: Gen::CounitC }, Slice { offset: 1, gen: Gen::UnitC }],
        )
        .unwrap();
        let c = d.canonical();
        assert_eq!(c.slices(), d.slices());
    }

    #[test]
    fn caps_over_cups_terminate() {
        let d = g(Gen::UnitW)
            .tensor(&g(Gen::UnitC).compose(&g(Gen::CounitC)).unwrap())
            .tensor(&g(Gen::UnitC).compose(&g(Gen::CounitC)).unwrap());
        let c = d.canonical();
        assert_eq!(c.canonical(), c);
        assert_eq!(c.num_cells(), 5);
    }
}
