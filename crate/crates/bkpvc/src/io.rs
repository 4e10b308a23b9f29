//! JSON forest documents and DOT export.
//!
//! The on-disk schema is
//! `{"kind":"undirected","n":<int>,"edges":[[u,v],...]}` or
//! `{"kind":"directed","n":<int>,"parent":[<int or null>,...]}`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::forest::{Forest, RootedDirectedForest, UndirectedForest, VertexClass};

/// The serialized form of a [`Forest`]. Deserializing a document does not
/// validate it; convert with [`Forest::from_doc`] to get a checked forest.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ForestDoc {
    Undirected {
        n: usize,
        edges: Vec<(usize, usize)>,
    },
    Directed {
        n: usize,
        parent: Vec<Option<usize>>,
    },
}

impl Forest {
    pub fn from_doc(doc: &ForestDoc) -> Result<Self> {
        match doc {
            ForestDoc::Undirected { n, edges } => {
                Ok(Forest::Undirected(UndirectedForest::build(*n, edges)?))
            }
            ForestDoc::Directed { n, parent } => {
                if *n != parent.len() {
                    return Err(Error::InvalidParams(format!(
                        "directed document declares n = {} but lists {} parent entries",
                        n,
                        parent.len()
                    )));
                }
                Ok(Forest::Directed(RootedDirectedForest::build(parent)?))
            }
        }
    }

    pub fn to_doc(&self) -> ForestDoc {
        match self {
            Forest::Undirected(f) => ForestDoc::Undirected {
                n: f.n(),
                edges: f.edges().to_vec(),
            },
            Forest::Directed(f) => ForestDoc::Directed {
                n: f.n(),
                parent: f.parents().to_vec(),
            },
        }
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let doc: ForestDoc = serde_json::from_str(s)?;
        Forest::from_doc(&doc)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_doc()).expect("forest documents always serialize")
    }

    /// Graphviz rendering. Leaves and branching vertices get distinct shapes;
    /// this is cosmetic only.
    pub fn to_dot(&self) -> String {
        let classes = self.classify();
        let mut out = String::new();
        let (header, connector) = match self {
            Forest::Undirected(_) => ("graph forest {\n", " -- "),
            Forest::Directed(_) => ("digraph forest {\n", " -> "),
        };
        out.push_str(header);
        for (v, class) in classes.iter().enumerate() {
            match class {
                VertexClass::Leaf => out.push_str(&format!("  {v} [shape=doublecircle];\n")),
                VertexClass::Branching => out.push_str(&format!("  {v} [shape=box];\n")),
                VertexClass::Internal => {}
            }
        }
        match self {
            Forest::Undirected(f) => {
                for &(u, v) in f.edges() {
                    out.push_str(&format!("  {u}{connector}{v};\n"));
                }
            }
            Forest::Directed(f) => {
                for v in 0..f.n() {
                    for &c in f.children(v) {
                        out.push_str(&format!("  {v}{connector}{c};\n"));
                    }
                }
            }
        }
        out.push_str("}\n");
        out
    }
}
