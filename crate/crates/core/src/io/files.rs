use std::collections::HashSet;
use std::fmt;
use std::marker::PhantomData;

use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::{Deserialize, Serialize};

use super::number::to_json;
use crate::error::{Error, Result};
use crate::farey::FareyEdge;
use crate::lambda::LambdaMap;
use crate::shear::ShearMap;

/// An edge key checked for being a Farey edge while parsing, so that the
/// error carries the line and column.
struct Key(FareyEdge);

impl<'de> Deserialize<'de> for Key {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse::<FareyEdge>().map(Key).map_err(|e| de::Error::custom(format!("bad edge key `{s}`: {e}")))
    }
}

struct Positive(f64);

impl<'de> Deserialize<'de> for Positive {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = f64::deserialize(d)?;
        if v > 0.0 && v.is_finite() {
            Ok(Positive(v))
        } else {
            Err(de::Error::custom(format!("lambda length must be positive, got {v}")))
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ShearEntry {
    key: Key,
    s: f64,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct LambdaEntry {
    key: Key,
    lambda: Positive,
}

trait Keyed {
    fn edge(&self) -> &FareyEdge;
}

impl Keyed for ShearEntry {
    fn edge(&self) -> &FareyEdge {
        &self.key.0
    }
}

impl Keyed for LambdaEntry {
    fn edge(&self) -> &FareyEdge {
        &self.key.0
    }
}

/// The `edges` array, rejecting a repeated key at the position of the
/// repeat.
struct Entries<T>(Vec<T>);

impl<'de, T: Deserialize<'de> + Keyed> Deserialize<'de> for Entries<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct V<T>(PhantomData<T>);
        impl<'de, T: Deserialize<'de> + Keyed> Visitor<'de> for V<T> {
            type Value = Entries<T>;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an array of edge entries")
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> std::result::Result<Self::Value, A::Error> {
                let mut seen = HashSet::new();
                let mut out = Vec::new();
                while let Some(entry) = seq.next_element::<T>()? {
                    if !seen.insert(entry.edge().clone()) {
                        return Err(de::Error::custom(format!("duplicate edge key `{}`", entry.edge())));
                    }
                    out.push(entry);
                }
                Ok(Entries(out))
            }
        }
        d.deserialize_seq(V(PhantomData))
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ShearFile {
    #[serde(default)]
    default: f64,
    depth: u32,
    edges: Entries<ShearEntry>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct LambdaFile {
    default: Option<Positive>,
    depth: u32,
    edges: Entries<LambdaEntry>,
}

fn check_depth(i: usize, e: &FareyEdge, depth: u32) -> Result<()> {
    let g = e.generation();
    if g > depth {
        return Err(Error::Format(format!("edges[{i}]: edge {e} has generation {g}, beyond depth {depth}")));
    }
    Ok(())
}

/// Parses a shear file: `{"default": x, "depth": d, "edges": [{"key": "p/q|r/s", "s": x}]}`.
pub fn read_shear(text: &str) -> Result<ShearMap> {
    let f: ShearFile = serde_json::from_str(text)?;
    let mut s = ShearMap::new(f.depth, f.default);
    for (i, entry) in f.edges.0.into_iter().enumerate() {
        check_depth(i, &entry.key.0, f.depth)?;
        s.insert(entry.key.0, entry.s)?;
    }
    Ok(s)
}

/// Parses a lambda file: as a shear file, with `lambda` in place of `s`.
/// The default is 1 when absent.
pub fn read_lambda(text: &str) -> Result<LambdaMap> {
    let f: LambdaFile = serde_json::from_str(text)?;
    let mut l = LambdaMap::new(f.depth, f.default.map_or(1.0, |p| p.0))?;
    for (i, entry) in f.edges.0.into_iter().enumerate() {
        check_depth(i, &entry.key.0, f.depth)?;
        l.insert(entry.key.0, entry.lambda.0)?;
    }
    Ok(l)
}

#[derive(Serialize)]
struct Out<E> {
    default: f64,
    depth: u32,
    edges: Vec<E>,
}

#[derive(Serialize)]
struct ShearOut {
    key: String,
    s: f64,
}

#[derive(Serialize)]
struct LambdaOut {
    key: String,
    lambda: f64,
}

/// The explicit entries of `s` in canonical key order.
pub fn write_shear(s: &ShearMap) -> Result<String> {
    let edges = s.iter().map(|(e, v)| ShearOut { key: e.key(), s: v }).collect();
    to_json(&Out { default: s.default_value(), depth: s.depth(), edges })
}

pub fn write_lambda(l: &LambdaMap) -> Result<String> {
    let edges = l.iter().map(|(e, v)| LambdaOut { key: e.key(), lambda: v }).collect();
    to_json(&Out { default: l.default_value(), depth: l.depth(), edges })
}
