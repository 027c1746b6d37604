//! A JSON document model indexed by node kind.
//!
//! Every node has a [`JTy`]. Arrays and maps hold their children in
//! [`PredList`]s under [`JPred`], which has no witness for [`JTy::Doc`], so
//! a document node can never appear below the root. A document node can
//! only wrap a map.

use std::fmt;

use thiserror::Error;

use crate::error::ListError;
use crate::family::{Index, IndexedFamily};
use crate::predicate::{FiniteWitnesses, PredList, Predicate};

/// Kind of a JSON node.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum JTy {
    Doc,
    Array,
    Map,
    Value,
}

impl Index for JTy {
    const ALL: &'static [Self] = &[JTy::Doc, JTy::Array, JTy::Map, JTy::Value];
}

impl fmt::Display for JTy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            JTy::Doc => "DOC",
            JTy::Array => "ARRAY",
            JTy::Map => "MAP",
            JTy::Value => "VALUE",
        })
    }
}

/// Witness that a node kind may appear inside an array or map.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum JPred {
    MapW,
    ArrW,
    ValW,
}

impl Predicate for JPred {
    type Index = JTy;

    fn decide(index: JTy) -> Option<Self> {
        match index {
            JTy::Map => Some(JPred::MapW),
            JTy::Array => Some(JPred::ArrW),
            JTy::Value => Some(JPred::ValW),
            JTy::Doc => None,
        }
    }

    fn holds(&self, index: JTy) -> bool {
        matches!(
            (self, index),
            (JPred::MapW, JTy::Map) | (JPred::ArrW, JTy::Array) | (JPred::ValW, JTy::Value)
        )
    }
}

impl FiniteWitnesses for JPred {
    const WITNESSES: &'static [Self] = &[JPred::MapW, JPred::ArrW, JPred::ValW];
}

/// A key/value pair inside a map. Its index is the kind of the value; the
/// key does not contribute.
#[derive(Debug, Clone, PartialEq)]
pub struct MapEntry {
    pub key: String,
    pub value: JsonDoc,
}

impl IndexedFamily for MapEntry {
    type Index = JTy;

    fn index_of(&self) -> JTy {
        self.value.jty()
    }
}

pub type Children = PredList<JsonDoc, JPred>;
pub type Entries = PredList<MapEntry, JPred>;

/// The body of a document node. Always a map.
#[derive(Debug, Clone, PartialEq)]
pub struct Document(Box<JsonDoc>);

impl Document {
    pub fn body(&self) -> &JsonDoc {
        &self.0
    }

    pub fn entries(&self) -> &Entries {
        match &*self.0 {
            JsonDoc::Map(entries) => entries,
            _ => unreachable!("document body is always a map"),
        }
    }

    pub fn into_body(self) -> JsonDoc {
        *self.0
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum JsonDoc {
    Str(String),
    Num(f64),
    Bool(bool),
    Null,
    Array(Children),
    Map(Entries),
    Doc(Document),
}

impl IndexedFamily for JsonDoc {
    type Index = JTy;

    fn index_of(&self) -> JTy {
        self.jty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum JsonError {
    #[error("child at position {position} is a DOC node")]
    PredicateViolation { position: usize },
    #[error("document root must be a MAP, found {0}")]
    RootNotMap(JTy),
    #[error("expected a MAP node, found {0}")]
    NotAMap(JTy),
}

fn violation(err: ListError<JTy>) -> JsonError {
    match err {
        ListError::PredicateViolation { position, .. } => {
            JsonError::PredicateViolation { position }
        }
        other => unreachable!("batch proof search only reports predicate violations: {other}"),
    }
}

/// Builds an array node. Fails if any child is a document node.
pub fn jarray(children: Vec<JsonDoc>) -> Result<JsonDoc, JsonError> {
    Children::from_elements(children)
        .map(JsonDoc::Array)
        .map_err(violation)
}

/// Builds a map node, keeping entry order and duplicate keys. Fails if any
/// value is a document node.
pub fn jmap<K: Into<String>>(entries: Vec<(K, JsonDoc)>) -> Result<JsonDoc, JsonError> {
    let entries = entries
        .into_iter()
        .map(|(key, value)| MapEntry {
            key: key.into(),
            value,
        })
        .collect();
    Entries::from_elements(entries)
        .map(JsonDoc::Map)
        .map_err(violation)
}

/// Wraps a map node as a document.
pub fn jdoc(root: JsonDoc) -> Result<JsonDoc, JsonError> {
    match root.jty() {
        JTy::Map => Ok(JsonDoc::Doc(Document(Box::new(root)))),
        other => Err(JsonError::RootNotMap(other)),
    }
}

/// Per-kind node totals.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct KindCounts {
    pub doc: usize,
    pub array: usize,
    pub map: usize,
    pub value: usize,
}

impl KindCounts {
    pub fn get(&self, ty: JTy) -> usize {
        match ty {
            JTy::Doc => self.doc,
            JTy::Array => self.array,
            JTy::Map => self.map,
            JTy::Value => self.value,
        }
    }

    pub fn total(&self) -> usize {
        self.doc + self.array + self.map + self.value
    }

    fn bump(&mut self, ty: JTy) {
        match ty {
            JTy::Doc => self.doc += 1,
            JTy::Array => self.array += 1,
            JTy::Map => self.map += 1,
            JTy::Value => self.value += 1,
        }
    }
}

impl JsonDoc {
    pub fn string(s: impl Into<String>) -> Self {
        JsonDoc::Str(s.into())
    }

    pub fn jty(&self) -> JTy {
        match self {
            JsonDoc::Str(_) | JsonDoc::Num(_) | JsonDoc::Bool(_) | JsonDoc::Null => JTy::Value,
            JsonDoc::Array(_) => JTy::Array,
            JsonDoc::Map(_) => JTy::Map,
            JsonDoc::Doc(_) => JTy::Doc,
        }
    }

    /// First value stored under `key`, in insertion order.
    pub fn get(&self, key: &str) -> Result<Option<&JsonDoc>, JsonError> {
        match self {
            JsonDoc::Map(entries) => Ok(entries.iter().find(|e| e.key == key).map(|e| &e.value)),
            other => Err(JsonError::NotAMap(other.jty())),
        }
    }

    /// Direct children, with map entries contributing their values and a
    /// document contributing its map body.
    pub fn children(&self) -> Box<dyn Iterator<Item = &JsonDoc> + '_> {
        match self {
            JsonDoc::Array(items) => Box::new(items.iter()),
            JsonDoc::Map(entries) => Box::new(entries.iter().map(|e| &e.value)),
            JsonDoc::Doc(doc) => Box::new(std::iter::once(doc.body())),
            _ => Box::new(std::iter::empty()),
        }
    }

    /// Number of constructor occurrences, the document node included.
    pub fn count_nodes(&self) -> usize {
        1 + self.children().map(JsonDoc::count_nodes).sum::<usize>()
    }

    /// Leaves have depth 1; every enclosing node adds one.
    pub fn max_depth(&self) -> usize {
        1 + self.children().map(JsonDoc::max_depth).max().unwrap_or(0)
    }

    pub fn kind_counts(&self) -> KindCounts {
        let mut counts = KindCounts::default();
        let mut stack = vec![self];
        while let Some(node) = stack.pop() {
            counts.bump(node.jty());
            stack.extend(node.children());
        }
        counts
    }
}
