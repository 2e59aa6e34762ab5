use std::fmt;

use serde::{Serialize, Serializer};

/// A boundary component: a circle (`0`) or a bi-web (`1`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Wire {
    C,
    W,
}

impl Wire {
    pub fn bit(self) -> char {
        match self {
            Wire::C => '0',
            Wire::W => '1',
        }
    }

    pub fn from_bit(c: char) -> Option<Wire> {
        match c {
            '0' => Some(Wire::C),
            '1' => Some(Wire::W),
            _ => None,
        }
    }
}

/// A finite sequence of wires; the empty sequence is the monoidal unit.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Obj(pub Vec<Wire>);

impl Obj {
    pub fn empty() -> Self {
        Obj(Vec::new())
    }

    /// Parses `0`/`1` strings; `-` is the empty object.
    pub fn parse(s: &str) -> Option<Obj> {
        if s == "-" {
            return Some(Obj::empty());
        }
        if s.is_empty() {
            return None;
        }
        s.chars().map(Wire::from_bit).collect::<Option<Vec<_>>>().map(Obj)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn wires(&self) -> &[Wire] {
        &self.0
    }

    pub fn concat(&self, other: &Obj) -> Obj {
        Obj(self.0.iter().chain(&other.0).copied().collect())
    }

    pub fn count(&self, w: Wire) -> usize {
        self.0.iter().filter(|&&x| x == w).count()
    }
}

impl From<&[Wire]> for Obj {
    fn from(w: &[Wire]) -> Self {
        Obj(w.to_vec())
    }
}

impl fmt::Display for Obj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "-");
        }
        for w in &self.0 {
            write!(f, "{}", w.bit())?;
        }
        Ok(())
    }
}

impl Serialize for Obj {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// The generating cobordisms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    MultC,
    ComultC,
    UnitC,
    CounitC,
    MultW,
    ComultW,
    UnitW,
    CounitW,
    Zip,
    Cozip,
    IdC,
    IdW,
    Swap(Wire, Wire),
}

use Wire::{C, W};

impl Gen {
    /// Every generator, swaps included, in a fixed order.
    pub const ALL: [Gen; 16] = [
        Gen::MultC,
        Gen::ComultC,
        Gen::UnitC,
        Gen::CounitC,
        Gen::MultW,
        Gen::ComultW,
        Gen::UnitW,
        Gen::CounitW,
        Gen::Zip,
        Gen::Cozip,
        Gen::IdC,
        Gen::IdW,
        Gen::Swap(C, C),
        Gen::Swap(C, W),
        Gen::Swap(W, C),
        Gen::Swap(W, W),
    ];

    pub fn dom(self) -> &'static [Wire] {
        match self {
            Gen::MultC => &[C, C],
            Gen::ComultC | Gen::CounitC | Gen::Zip | Gen::IdC => &[C],
            Gen::UnitC | Gen::UnitW => &[],
            Gen::MultW => &[W, W],
            Gen::ComultW | Gen::CounitW | Gen::Cozip | Gen::IdW => &[W],
            Gen::Swap(C, C) => &[C, C],
            Gen::Swap(C, W) => &[C, W],
            Gen::Swap(W, C) => &[W, C],
            Gen::Swap(W, W) => &[W, W],
        }
    }

    pub fn cod(self) -> &'static [Wire] {
        match self {
            Gen::MultC | Gen::UnitC | Gen::Cozip | Gen::IdC => &[C],
            Gen::ComultC => &[C, C],
            Gen::CounitC | Gen::CounitW => &[],
            Gen::MultW | Gen::UnitW | Gen::Zip | Gen::IdW => &[W],
            Gen::ComultW => &[W, W],
            Gen::Swap(x, y) => Gen::Swap(y, x).dom(),
        }
    }

    pub fn is_identity(self) -> bool {
        matches!(self, Gen::IdC | Gen::IdW)
    }

    pub fn identity(w: Wire) -> Gen {
        match w {
            C => Gen::IdC,
            W => Gen::IdW,
        }
    }

    /// Euler characteristic contribution of the cell.
    pub fn euler(self) -> i64 {
        match self {
            Gen::UnitC | Gen::CounitC | Gen::UnitW | Gen::CounitW => 1,
            Gen::MultC | Gen::ComultC | Gen::MultW | Gen::ComultW => -1,
            _ => 0,
        }
    }

    /// DSL spelling.
    pub fn symbol(self) -> String {
        match self {
            Gen::MultC => "mC".into(),
            Gen::ComultC => "dC".into(),
            Gen::UnitC => "uC".into(),
            Gen::CounitC => "eC".into(),
            Gen::MultW => "mW".into(),
            Gen::ComultW => "dW".into(),
            Gen::UnitW => "uW".into(),
            Gen::CounitW => "eW".into(),
            Gen::Zip => "z".into(),
            Gen::Cozip => "zs".into(),
            Gen::IdC => "id:0".into(),
            Gen::IdW => "id:1".into(),
            Gen::Swap(x, y) => format!("sw:{}{}", x.bit(), y.bit()),
        }
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.symbol())
    }
}
