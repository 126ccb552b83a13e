//! Symbolic descriptions of how a graph was built.
//!
//! A [`ConstructionSpec`] serializes as
//! `{"family": "join", "params": {...}, "children": [...]}` and has a compact
//! expression form such as `join(g3(7,0),empty(15))` or
//! `blow_up(cayley(25;1,3,4,9,10,15,16,21,22,24),2)`. Replaying a spec is
//! deterministic, so it reproduces the labeled graph exactly.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::constructions::{self, CliquePart};
use crate::error::{Error, Result};
use crate::graph::{self, Graph};
use crate::group_sets::SymmetricSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Cayley,
    Join,
    BlowUp,
    Empty,
    Petersen,
    G3,
    H4,
    Gprime,
    SuperSum,
    RecursiveClique,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Cayley => "cayley",
            Family::Join => "join",
            Family::BlowUp => "blow_up",
            Family::Empty => "empty",
            Family::Petersen => "petersen",
            Family::G3 => "g3",
            Family::H4 => "h4",
            Family::Gprime => "gprime",
            Family::SuperSum => "super_sum",
            Family::RecursiveClique => "recursive_clique",
        }
    }

    fn from_name(s: &str) -> Option<Family> {
        Some(match s {
            "cayley" => Family::Cayley,
            "join" => Family::Join,
            "blow_up" => Family::BlowUp,
            "empty" => Family::Empty,
            "petersen" => Family::Petersen,
            "g3" => Family::G3,
            "h4" => Family::H4,
            "gprime" => Family::Gprime,
            "super_sum" => Family::SuperSum,
            "recursive_clique" => Family::RecursiveClique,
            _ => return None,
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Param {
    Int(usize),
    Set(Vec<usize>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionSpec {
    pub family: Family,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub params: BTreeMap<String, Param>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub children: Vec<ConstructionSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl ConstructionSpec {
    fn leaf(family: Family, params: &[(&str, usize)]) -> Self {
        ConstructionSpec {
            family,
            params: params
                .iter()
                .map(|&(k, v)| (k.to_string(), Param::Int(v)))
                .collect(),
            children: Vec::new(),
            note: None,
        }
    }

    pub fn cayley(set: &SymmetricSet) -> Self {
        let mut s = Self::leaf(Family::Cayley, &[("n", set.modulus())]);
        s.params.insert("set".into(), Param::Set(set.elements().to_vec()));
        s
    }

    pub fn join(left: ConstructionSpec, right: ConstructionSpec) -> Self {
        let mut s = Self::leaf(Family::Join, &[]);
        s.children = vec![left, right];
        s
    }

    pub fn blow_up(base: ConstructionSpec, t: usize) -> Self {
        let mut s = Self::leaf(Family::BlowUp, &[("t", t)]);
        s.children = vec![base];
        s
    }

    pub fn empty(n: usize) -> Self {
        Self::leaf(Family::Empty, &[("n", n)])
    }

    pub fn petersen() -> Self {
        Self::leaf(Family::Petersen, &[])
    }

    pub fn g3(k: usize, r: usize) -> Self {
        Self::leaf(Family::G3, &[("k", k), ("r", r)])
    }

    pub fn h4(k: usize) -> Self {
        Self::leaf(Family::H4, &[("k", k)])
    }

    pub fn gprime(k: usize) -> Self {
        Self::leaf(Family::Gprime, &[("k", k)])
    }

    pub fn super_sum(alpha: usize, k: usize) -> Self {
        Self::leaf(Family::SuperSum, &[("alpha", alpha), ("k", k)])
    }

    pub fn recursive_clique(delta: usize, k: usize, r: usize, part: CliquePart) -> Self {
        Self::leaf(
            Family::RecursiveClique,
            &[("delta", delta), ("k", k), ("r", r), ("part", part.index())],
        )
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn with_children(mut self, children: Vec<ConstructionSpec>) -> Self {
        self.children = children;
        self
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn int(&self, key: &str) -> Result<usize> {
        match self.params.get(key) {
            Some(Param::Int(v)) => Ok(*v),
            _ => Err(Error::invalid(format!("{} spec lacks integer parameter {key:?}", self.family))),
        }
    }

    fn set(&self, key: &str) -> Result<&[usize]> {
        match self.params.get(key) {
            Some(Param::Set(v)) => Ok(v),
            _ => Err(Error::invalid(format!("{} spec lacks set parameter {key:?}", self.family))),
        }
    }

    fn child(&self, i: usize) -> Result<&ConstructionSpec> {
        self.children
            .get(i)
            .ok_or_else(|| Error::invalid(format!("{} spec lacks child {i}", self.family)))
    }

    pub fn params_json(&self) -> serde_json::Map<String, serde_json::Value> {
        self.params
            .iter()
            .map(|(k, v)| (k.clone(), serde_json::to_value(v).expect("params serialize")))
            .collect()
    }

    /// Rebuilds the graph this spec describes.
    pub fn build(&self) -> Result<Graph> {
        match self.family {
            Family::Cayley => {
                let set = SymmetricSet::new(self.int("n")?, self.set("set")?.iter().copied())?;
                Ok(graph::cayley_graph(&set))
            }
            Family::Join => Ok(graph::join(&self.child(0)?.build()?, &self.child(1)?.build()?)),
            Family::BlowUp => graph::blow_up(&self.child(0)?.build()?, self.int("t")?),
            Family::Empty => Ok(graph::empty_graph(self.int("n")?)),
            Family::Petersen => Ok(graph::petersen()),
            Family::G3 => Ok(constructions::g3(self.int("k")?, self.int("r")?)?.graph),
            Family::H4 => Ok(constructions::h4(self.int("k")?)?.graph),
            Family::Gprime => Ok(constructions::gprime(self.int("k")?)?.graph),
            Family::SuperSum => Ok(constructions::c_odd_cycle(self.int("alpha")?, self.int("k")?)?.graph),
            Family::RecursiveClique => {
                let part = CliquePart::from_index(self.int("part")?)?;
                Ok(constructions::large_clique_family(self.int("delta")?, self.int("k")?, self.int("r")?, part)?.graph)
            }
        }
    }
}

impl fmt::Display for ConstructionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ints = |keys: &[&str]| -> String {
            keys.iter()
                .map(|k| match self.params.get(*k) {
                    Some(Param::Int(v)) => v.to_string(),
                    _ => "?".into(),
                })
                .collect::<Vec<_>>()
                .join(",")
        };
        match self.family {
            Family::Cayley => {
                let set = match self.params.get("set") {
                    Some(Param::Set(s)) => s.iter().map(usize::to_string).collect::<Vec<_>>().join(","),
                    _ => String::new(),
                };
                write!(f, "cayley({};{set})", ints(&["n"]))
            }
            Family::Join => match (self.children.first(), self.children.get(1)) {
                (Some(a), Some(b)) => write!(f, "join({a},{b})"),
                _ => f.write_str("join(?,?)"),
            },
            Family::BlowUp => match self.children.first() {
                Some(a) => write!(f, "blow_up({a},{})", ints(&["t"])),
                None => f.write_str("blow_up(?)"),
            },
            Family::Petersen => f.write_str("petersen"),
            Family::Empty => write!(f, "empty({})", ints(&["n"])),
            Family::G3 => write!(f, "g3({})", ints(&["k", "r"])),
            Family::H4 => write!(f, "h4({})", ints(&["k"])),
            Family::Gprime => write!(f, "gprime({})", ints(&["k"])),
            Family::SuperSum => write!(f, "super_sum({})", ints(&["alpha", "k"])),
            Family::RecursiveClique => write!(f, "recursive_clique({})", ints(&["delta", "k", "r", "part"])),
        }
    }
}

struct ExprParser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> ExprParser<'a> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at offset {} in {:?}", self.pos, self.src))
    }

    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(&format!("expected {c:?}")))
        }
    }

    fn ident(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let len = rest
            .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
            .unwrap_or(rest.len());
        if len == 0 {
            return Err(self.err("expected a family name"));
        }
        self.pos += len;
        Ok(&rest[..len])
    }

    fn int(&mut self) -> Result<usize> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let len = rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len());
        let v = rest[..len].parse().map_err(|_| self.err("expected an integer"))?;
        self.pos += len;
        Ok(v)
    }

    fn ints(&mut self, count: usize) -> Result<Vec<usize>> {
        self.expect('(')?;
        let mut out = Vec::with_capacity(count);
        for i in 0..count {
            if i > 0 {
                self.expect(',')?;
            }
            out.push(self.int()?);
        }
        self.expect(')')?;
        Ok(out)
    }

    fn spec(&mut self) -> Result<ConstructionSpec> {
        let name = self.ident()?;
        let family = Family::from_name(name).ok_or_else(|| self.err(&format!("unknown family {name:?}")))?;
        Ok(match family {
            Family::Petersen => ConstructionSpec::petersen(),
            Family::Empty => ConstructionSpec::empty(self.ints(1)?[0]),
            Family::G3 => {
                let a = self.ints(2)?;
                ConstructionSpec::g3(a[0], a[1])
            }
            Family::H4 => ConstructionSpec::h4(self.ints(1)?[0]),
            Family::Gprime => ConstructionSpec::gprime(self.ints(1)?[0]),
            Family::SuperSum => {
                let a = self.ints(2)?;
                ConstructionSpec::super_sum(a[0], a[1])
            }
            Family::RecursiveClique => {
                let a = self.ints(4)?;
                ConstructionSpec::recursive_clique(a[0], a[1], a[2], CliquePart::from_index(a[3])?)
            }
            Family::Cayley => {
                self.expect('(')?;
                let n = self.int()?;
                self.expect(';')?;
                let mut elems = Vec::new();
                if !self.eat(')') {
                    loop {
                        elems.push(self.int()?);
                        if self.eat(')') {
                            break;
                        }
                        self.expect(',')?;
                    }
                }
                ConstructionSpec::cayley(&SymmetricSet::new(n, elems)?)
            }
            Family::Join => {
                self.expect('(')?;
                let a = self.spec()?;
                self.expect(',')?;
                let b = self.spec()?;
                self.expect(')')?;
                ConstructionSpec::join(a, b)
            }
            Family::BlowUp => {
                self.expect('(')?;
                let a = self.spec()?;
                self.expect(',')?;
                let t = self.int()?;
                self.expect(')')?;
                ConstructionSpec::blow_up(a, t)
            }
        })
    }
}

impl FromStr for ConstructionSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = ExprParser { src: s, pos: 0 };
        let spec = p.spec()?;
        p.skip_ws();
        if p.pos != s.len() {
            return Err(p.err("trailing input"));
        }
        Ok(spec)
    }
}
