//! Applying rewrite rules at sites of a diagram's sliding form.

use crate::ring::RingPoly;

use super::{Diagram, DiagramError, RewriteRule, Slice, Wire};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orientation {
    /// lhs becomes rhs
    Forward,
    /// rhs becomes lhs
    Reverse,
}

/// Where a pattern starts: the index of the slice matching the pattern's
/// first slice (or the interface index for an empty pattern) and the wire
/// offset of the pattern's window in the interface above it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Site {
    pub slice: usize,
    pub offset: usize,
}

struct Pattern<'a> {
    from: &'a Diagram,
    to: &'a Diagram,
    scalar: RingPoly,
}

fn pattern(rule: &RewriteRule, o: Orientation) -> Pattern<'_> {
    match o {
        Orientation::Forward => Pattern { from: &rule.lhs, to: &rule.rhs, scalar: rule.scalar.clone() },
        // scalars are units, so the inverse is the conjugate
        Orientation::Reverse => Pattern { from: &rule.rhs, to: &rule.lhs, scalar: rule.scalar.conj() },
    }
}

fn interfaces(dom: &[Wire], slices: &[Slice]) -> Vec<Vec<Wire>> {
    let mut out = vec![dom.to_vec()];
    for s in slices {
        let next = s.apply(out.last().unwrap()).expect("valid slices");
        out.push(next);
    }
    out
}

/// Attempts the match; on success returns the rewritten slice list.
fn try_match(
    slices: &[Slice],
    iface: &[Wire],
    pat: &[Slice],
    pat_dom: &[Wire],
    replacement: &[Slice],
    site: Site,
) -> Option<Vec<Slice>> {
    let w0 = site.offset;
    let width0 = pat_dom.len();
    if w0 + width0 > iface.len() || &iface[w0..w0 + width0] != pat_dom {
        return None;
    }
    let mut w = w0;
    let mut cur_w = width0;
    let mut hoisted: Vec<Slice> = Vec::new();
    let mut i = 0;
    let mut j = site.slice;
    if !pat.is_empty() {
        let first = slices.get(j)?;
        if first.gen != pat[0].gen || first.offset != w + pat[0].offset {
            return None;
        }
    }
    while i < pat.len() {
        let s = *slices.get(j)?;
        let p = pat[i];
        if s.gen == p.gen && s.offset == w + p.offset {
            cur_w = cur_w + p.out_len() - p.in_len();
            i += 1;
        } else if s.offset + s.in_len() <= w {
            hoisted.push(s);
            w = w + s.out_len() - s.in_len();
        } else if s.offset >= w + cur_w {
            hoisted.push(Slice { offset: s.offset - cur_w + width0, gen: s.gen });
        } else {
            return None;
        }
        j += 1;
    }
    let mut out = slices[..site.slice].to_vec();
    out.extend(hoisted);
    out.extend(replacement.iter().map(|r| Slice { offset: r.offset + w, gen: r.gen }));
    out.extend_from_slice(&slices[j..]);
    Some(out)
}

/// Applies `rule` in orientation `o` at `site`. Returns `(d', s)` with
/// `d = s · d'` in the quotient category.
pub fn rewrite_apply(
    d: &Diagram,
    rule: &RewriteRule,
    o: Orientation,
    site: Site,
) -> Result<(Diagram, RingPoly), DiagramError> {
    let pat = pattern(rule, o);
    let slices = d.slices();
    let no_match = || DiagramError::NoMatch { rule: rule.name.clone(), slice: site.slice, offset: site.offset };
    if site.slice > slices.len() {
        return Err(no_match());
    }
    let ifaces = interfaces(&d.dom.0, &slices);
    let from = pat.from.slices();
    let to = pat.to.slices();
    let out = try_match(&slices, &ifaces[site.slice], &from, &pat.from.dom.0, &to, site).ok_or_else(no_match)?;
    let nd = Diagram::from_slices(d.dom.clone(), &out).expect("rewrites preserve typing");
    debug_assert_eq!(nd.cod, d.cod);
    Ok((nd, pat.scalar))
}

/// Every site where `rule` applies in orientation `o`.
pub fn find_sites(d: &Diagram, rule: &RewriteRule, o: Orientation) -> Vec<Site> {
    let pat = pattern(rule, o);
    let slices = d.slices();
    let ifaces = interfaces(&d.dom.0, &slices);
    let from = pat.from.slices();
    let to = pat.to.slices();
    let dom = &pat.from.dom.0;
    let mut sites = Vec::new();
    let last = if from.is_empty() { slices.len() } else { slices.len().saturating_sub(1) };
    if !from.is_empty() && slices.is_empty() {
        return sites;
    }
    for k in 0..=last {
        let iface = &ifaces[k];
        if iface.len() < dom.len() {
            continue;
        }
        for off in 0..=iface.len() - dom.len() {
            if !from.is_empty() && (slices[k].gen != from[0].gen || slices[k].offset != off + from[0].offset) {
                continue;
            }
            let site = Site { slice: k, offset: off };
            if try_match(&slices, iface, &from, dom, &to, site).is_some() {
                sites.push(site);
            }
        }
    }
    sites
}
