//! Permutations of `{0, .., n-1}` in one-line notation.
//!
//! Cycle notation is printed and parsed 1-based, as in `(1 2)(3 5 4)`.

use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("not a permutation of 0..{0}")]
    NotBijective(usize),
    #[error("permutation sizes differ: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("bad cycle notation at offset {0}")]
    Syntax(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Self { images: (0..n).collect() }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(PermError::NotBijective(n));
            }
            seen[x] = true;
        }
        Ok(Self { images })
    }

    /// Builds a permutation of `0..n` from 1-based cycles.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self, PermError> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cyc in cycles {
            for (k, &x) in cyc.iter().enumerate() {
                let y = cyc[(k + 1) % cyc.len()];
                if x == 0 || x > n || y == 0 || y > n || touched[x - 1] {
                    return Err(PermError::NotBijective(n));
                }
                touched[x - 1] = true;
                images[x - 1] = y - 1;
            }
        }
        Self::from_images(images)
    }

    /// Parses 1-based cycle notation such as `(1 2)(3 5 4)` or `()`.
    pub fn parse_cycles(n: usize, text: &str) -> Result<Self, PermError> {
        let mut cycles = Vec::new();
        let mut cur: Option<Vec<usize>> = None;
        let mut num: Option<(usize, usize)> = None;
        let flush = |num: &mut Option<(usize, usize)>, cur: &mut Option<Vec<usize>>| -> Result<(), PermError> {
            if let Some((start, v)) = num.take() {
                cur.as_mut().ok_or(PermError::Syntax(start))?.push(v);
            }
            Ok(())
        };
        for (pos, ch) in text.char_indices() {
            match ch {
                '0'..='9' => {
                    let d = ch as usize - '0' as usize;
                    num = Some(match num {
                        Some((s, v)) => (s, v * 10 + d),
                        None => (pos, d),
                    });
                }
                '(' => {
                    if cur.is_some() || num.is_some() {
                        return Err(PermError::Syntax(pos));
                    }
                    cur = Some(Vec::new());
                }
                ')' => {
                    flush(&mut num, &mut cur)?;
                    cycles.push(cur.take().ok_or(PermError::Syntax(pos))?);
                }
                c if c.is_whitespace() || c == ',' => flush(&mut num, &mut cur)?,
                _ => return Err(PermError::Syntax(pos)),
            }
        }
        if cur.is_some() || num.is_some() {
            return Err(PermError::Syntax(text.len()));
        }
        cycles.retain(|c| !c.is_empty());
        Self::from_cycles(n, &cycles)
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &v)| k == v)
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.len()];
        for (k, &v) in self.images.iter().enumerate() {
            inv[v] = k;
        }
        Perm { images: inv }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Result<Perm, PermError> {
        if self.len() != other.len() {
            return Err(PermError::SizeMismatch(self.len(), other.len()));
        }
        Ok(Perm { images: other.images.iter().map(|&x| self.images[x]).collect() })
    }

    /// All cycles including fixed points, each starting at its smallest
    /// element, ordered by that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cyc.push(x);
                x = self.images[x];
            }
            out.push(cyc);
        }
        out
    }

    /// Cycle lengths, sorted descending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nontrivial: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if nontrivial.is_empty() {
            return write!(f, "()");
        }
        for c in nontrivial {
            let parts: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

impl Serialize for Perm {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}
