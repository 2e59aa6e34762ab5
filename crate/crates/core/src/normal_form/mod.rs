//! Normal forms and equivalence of singular cobordisms.
//!
//! A connected cobordism is bent into W→C form, where it is determined by
//! its genus, its number of output circles and its singular boundary
//! permutation σ. Its normal form is rebuilt from these data and bent back;
//! a general diagram is normalized component by component. Scalars are
//! fixed by comparing evaluations in the universal twin algebra.

mod bend;
mod blocks;
mod simplify;
mod split;

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::algebra::universal_twin;
use crate::diagram::{permutation_diagram, Diagram, LinComb};
use crate::eval::{EvalError, Images, DEFAULT_WIDTH_CAP};
use crate::matrix::Matrix;
use crate::perm::Perm;
use crate::ring::{units, RingPoly};
use crate::topology::{singular_permutation, TopologyError};

pub use bend::{bend, unbend, BendProfile};
pub use blocks::{nf_build, standard_tau, NormalFormDescriptor};
pub use simplify::simplify;
pub use split::{split, Part};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NfError {
    #[error("invalid descriptor: {0}")]
    Descriptor(String),
    #[error(transparent)]
    Topology(#[from] TopologyError),
    #[error(transparent)]
    Eval(#[from] EvalError),
    /// Both the component and its normal form evaluate to zero, so the
    /// scalar relating them cannot be read off.
    #[error("scalar indeterminate: component and normal form {} both evaluate to zero", crate::dsl::print_diagram(&.0.normal_form))]
    ScalarIndeterminate(Box<ScalarWitness>),
    #[error("component evaluation is not a unit multiple of its normal form {}", crate::dsl::print_diagram(&.0.normal_form))]
    NonUnitScalar(Box<ScalarWitness>),
}

/// Evaluations that failed to fix a component's scalar.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScalarWitness {
    pub normal_form: Diagram,
    pub component: Matrix,
    pub normal: Matrix,
}

/// Normal form of one component.
#[derive(Clone, Debug)]
pub struct ComponentForm {
    pub part: Part,
    pub descriptor: NormalFormDescriptor,
    pub diagram: Diagram,
}

/// The normal-form term of a diagram, before scalars are resolved.
#[derive(Clone, Debug)]
pub struct NormalTerm {
    pub diagram: Diagram,
    pub components: Vec<ComponentForm>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NormalForm {
    /// `d = scalar · diagram`.
    pub scalar: RingPoly,
    pub diagram: Diagram,
}

fn component_form(part: Part) -> Result<ComponentForm, NfError> {
    let prof = BendProfile::of(&part.diagram);
    let bent = bend(&part.diagram);
    let (sigma, _) = singular_permutation(&bent);
    let descriptor = NormalFormDescriptor::from_sigma(&sigma, part.genus, bent.cod.len());
    let diagram = simplify(&unbend(&nf_build(&descriptor)?, &prof));
    Ok(ComponentForm { part, descriptor, diagram })
}

/// The normal-form diagram of `d` with per-component data.
pub fn normal_term(d: &Diagram) -> Result<NormalTerm, NfError> {
    let components: Vec<ComponentForm> = split(d)?.into_iter().map(component_form).collect::<Result<_, _>>()?;
    let mut src_img = vec![0; d.dom.len()];
    let mut tgt_img = vec![0; d.cod.len()];
    let (mut a, mut b) = (0, 0);
    for c in &components {
        for &s in &c.part.src {
            src_img[s] = a;
            a += 1;
        }
        for &t in &c.part.tgt {
            tgt_img[b] = t;
            b += 1;
        }
    }
    let mid = Diagram::tensor_all(components.iter().map(|c| &c.diagram));
    let top = permutation_diagram(&Perm::from_images(src_img).expect("bijection"), &d.dom).expect("sizes agree");
    let bot = permutation_diagram(&Perm::from_images(tgt_img).expect("bijection"), &mid.cod).expect("sizes agree");
    let diagram = top.compose(&mid).and_then(|x| x.compose(&bot)).expect("boundaries agree").canonical();
    Ok(NormalTerm { diagram, components })
}

fn component_scalar(images: &Images, c: &ComponentForm) -> Result<RingPoly, NfError> {
    let component = images.eval(&c.part.diagram, DEFAULT_WIDTH_CAP)?;
    let normal = images.eval(&c.diagram, DEFAULT_WIDTH_CAP)?;
    if let Some(u) = component.unit_ratio(&normal) {
        if !normal.is_zero() {
            return Ok(u);
        }
    }
    let normal_form = c.diagram.clone();
    if normal.is_zero() && component.is_zero() {
        Err(NfError::ScalarIndeterminate(Box::new(ScalarWitness { normal_form, component, normal })))
    } else {
        Err(NfError::NonUnitScalar(Box::new(ScalarWitness { normal_form, component, normal })))
    }
}

impl NormalTerm {
    /// The unit `s` with `d = s · diagram`.
    pub fn scalar(&self) -> Result<RingPoly, NfError> {
        let images = Images::new(&universal_twin())?;
        let mut s = RingPoly::one();
        for c in &self.components {
            s = &s * &component_scalar(&images, c)?;
        }
        Ok(s)
    }
}

/// `(s, N)` with `d = s · N` and `N` depending only on the invariants of `d`.
pub fn nf_of(d: &Diagram) -> Result<NormalForm, NfError> {
    let t = normal_term(d)?;
    Ok(NormalForm { scalar: t.scalar()?, diagram: t.diagram })
}

/// Normal form of a linear combination: normal-form terms with summed
/// coefficients, zero coefficients dropped.
pub fn nf_lincomb(lc: &LinComb) -> Result<BTreeMap<Diagram, RingPoly>, NfError> {
    let mut out: BTreeMap<Diagram, RingPoly> = BTreeMap::new();
    for (c, d) in lc.terms() {
        let nf = nf_of(d)?;
        let e = out.entry(nf.diagram).or_insert_with(RingPoly::zero);
        *e = &*e + &(c * &nf.scalar);
    }
    out.retain(|_, v| !v.is_zero());
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", content = "scalar", rename_all = "kebab-case")]
pub enum Equivalence {
    Equal,
    /// The first argument is this unit times the second.
    EqualUpToScalar(RingPoly),
    NotEqual,
}

impl Equivalence {
    fn from_unit(u: RingPoly) -> Self {
        if u.is_one() {
            Equivalence::Equal
        } else {
            Equivalence::EqualUpToScalar(u)
        }
    }
}

/// Shape data unaffected by the one σ-changing relation.
fn coarse_shape(t: &NormalTerm) -> Vec<(Vec<usize>, Vec<usize>, u64)> {
    let mut v: Vec<_> = t.components.iter().map(|c| (c.part.src.clone(), c.part.tgt.clone(), c.part.genus)).collect();
    v.sort();
    v
}

/// Decides `d1 = u · d2` for a unit `u`.
///
/// Equal normal-form terms settle it, with the unit from the two scalars.
/// When the terms differ only in σ (same boundary partition and genera),
/// the universal evaluations decide, since `zs ; z = −i·id` changes σ.
pub fn equivalent(d1: &Diagram, d2: &Diagram) -> Result<Equivalence, NfError> {
    if d1.dom != d2.dom || d1.cod != d2.cod {
        return Ok(Equivalence::NotEqual);
    }
    if d1.structurally_eq(d2) {
        return Ok(Equivalence::Equal);
    }
    let (t1, t2) = (normal_term(d1)?, normal_term(d2)?);
    if t1.diagram == t2.diagram {
        let s = &t1.scalar()? * &t2.scalar()?.conj();
        return Ok(Equivalence::from_unit(s));
    }
    if coarse_shape(&t1) != coarse_shape(&t2) {
        return Ok(Equivalence::NotEqual);
    }
    let images = Images::new(&universal_twin())?;
    let (m1, m2) = (images.eval(d1, DEFAULT_WIDTH_CAP)?, images.eval(d2, DEFAULT_WIDTH_CAP)?);
    Ok(match m1.unit_ratio(&m2) {
        Some(u) if !m2.is_zero() => Equivalence::from_unit(u),
        _ => Equivalence::NotEqual,
    })
}

/// [`equivalent`] for linear combinations.
pub fn equivalent_lincomb(a: &LinComb, b: &LinComb) -> Result<Equivalence, NfError> {
    if let (Some(d1), Some(d2)) = (a.as_diagram(), b.as_diagram()) {
        return equivalent(d1, d2);
    }
    if a.dom != b.dom || a.cod != b.cod {
        return Ok(Equivalence::NotEqual);
    }
    let (na, nb) = (nf_lincomb(a)?, nf_lincomb(b)?);
    if na.keys().ne(nb.keys()) {
        return Ok(Equivalence::NotEqual);
    }
    for u in units() {
        if na.iter().zip(&nb).all(|((_, x), (_, y))| *x == y * &u) {
            return Ok(Equivalence::from_unit(u));
        }
    }
    Ok(Equivalence::NotEqual)
}
