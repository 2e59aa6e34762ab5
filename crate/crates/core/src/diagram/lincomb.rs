use crate::ring::RingPoly;

use super::{Diagram, DiagramError, Obj};

/// An R-linear combination of parallel diagrams. Terms are stored in
/// canonical sliding form, like terms merged, zero coefficients dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinComb {
    pub dom: Obj,
    pub cod: Obj,
    terms: Vec<(RingPoly, Diagram)>,
}

impl LinComb {
    pub fn zero(dom: Obj, cod: Obj) -> Self {
        Self { dom, cod, terms: Vec::new() }
    }

    pub fn single(d: Diagram) -> Self {
        Self::scaled(RingPoly::one(), d)
    }

    pub fn scaled(c: RingPoly, d: Diagram) -> Self {
        let mut lc = Self::zero(d.dom.clone(), d.cod.clone());
        lc.add_term(c, d).expect("same type");
        lc
    }

    pub fn terms(&self) -> &[(RingPoly, Diagram)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The lone diagram of a coefficient-one single-term combination.
    pub fn as_diagram(&self) -> Option<&Diagram> {
        match self.terms.as_slice() {
            [(c, d)] if c.is_one() => Some(d),
            _ => None,
        }
    }

    pub fn add_term(&mut self, c: RingPoly, d: Diagram) -> Result<(), DiagramError> {
        if d.dom != self.dom || d.cod != self.cod {
            return Err(DiagramError::MixedTypes(format!(
                "{} -> {} added to {} -> {}",
                d.dom, d.cod, self.dom, self.cod
            )));
        }
        if c.is_zero() {
            return Ok(());
        }
        let d = d.canonical();
        if let Some(k) = self.terms.iter().position(|(_, t)| *t == d) {
            let sum = &self.terms[k].0 + &c;
            if sum.is_zero() {
                self.terms.remove(k);
            } else {
                self.terms[k].0 = sum;
            }
        } else {
            self.terms.push((c, d));
        }
        Ok(())
    }

    pub fn add(&self, other: &LinComb) -> Result<LinComb, DiagramError> {
        let mut out = self.clone();
        for (c, d) in &other.terms {
            out.add_term(c.clone(), d.clone())?;
        }
        Ok(out)
    }

    pub fn scale(&self, s: &RingPoly) -> LinComb {
        let mut out = LinComb::zero(self.dom.clone(), self.cod.clone());
        for (c, d) in &self.terms {
            out.add_term(c * s, d.clone()).expect("same type");
        }
        out
    }
}
