//! Orbit diagrams: each element of a catalog set is followed up the chain
//! F4 ⊂ E6 ⊂ E7 ⊂ E8, and consecutive orbits give an inclusion edge.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write;

use crate::catalog::{build_named_set, suborbit_name, E8GroupElem};
use crate::e8model::Level;
use crate::error::{Error, Result};

/// One variant (A_1 or A_2) of an orbit diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cluster {
    pub name: String,
    pub set: String,
    /// orbit name → number of set elements in it
    pub nodes: BTreeMap<String, usize>,
    pub edges: BTreeSet<(String, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagram {
    pub name: String,
    pub clusters: Vec<Cluster>,
}

impl Diagram {
    pub fn cluster(&self, name: &str) -> Option<&Cluster> {
        self.clusters.iter().find(|c| c.name == name)
    }
}

/// Orbit names of `g` from F4 (when it normalizes f4) up to E8, repeats removed.
pub fn orbit_chain(g: &E8GroupElem) -> Result<Vec<String>> {
    let mut chain: Vec<String> = Vec::new();
    for level in [Level::F4, Level::E6, Level::E7, Level::E8] {
        let name = match suborbit_name(g, level) {
            Ok(n) => n,
            Err(Error::NotNormalizing(_)) if level == Level::F4 => continue,
            Err(e) => return Err(e),
        };
        if chain.last() != Some(&name) {
            chain.push(name);
        }
    }
    Ok(chain)
}

pub fn cluster_for(set_name: &str, cluster_name: &str) -> Result<Cluster> {
    let set = build_named_set(set_name)?;
    let mut members: BTreeMap<String, BTreeSet<E8GroupElem>> = BTreeMap::new();
    let mut edges = BTreeSet::new();
    for g in &set.elements {
        let chain = orbit_chain(g)?;
        for n in &chain {
            members.entry(n.clone()).or_default().insert(g.clone());
        }
        for w in chain.windows(2) {
            edges.insert((w[0].clone(), w[1].clone()));
        }
    }
    Ok(Cluster {
        name: cluster_name.to_string(),
        set: set_name.to_string(),
        nodes: members.into_iter().map(|(k, v)| (k, v.len())).collect(),
        edges,
    })
}

pub fn eix_orbits() -> Result<Diagram> {
    Ok(Diagram {
        name: "eix_orbits".into(),
        clusters: vec![
            cluster_for("A_1(EIX_+)", "A_1")?,
            cluster_for("A_2(EIX_+)", "A_2")?,
        ],
    })
}

pub fn eviii_orbits() -> Result<Diagram> {
    Ok(Diagram {
        name: "eviii_orbits".into(),
        clusters: vec![
            cluster_for("A_1(EVIII_+)", "A_1")?,
            cluster_for("A_2(EVIII_+)", "A_2")?,
        ],
    })
}

/// Symmetric-space type of an orbit name; `None` for fixed points.
pub fn orbit_type_of(node: &str) -> Option<String> {
    if node.starts_with("p_") || node == "pole" || node == "e" {
        return None;
    }
    let base = node.split('_').next().unwrap_or(node);
    Some(base.trim_end_matches('\'').to_string())
}

/// Type-level inclusions read off both orbit diagrams, with E8 on top.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InclusionGraph {
    pub nodes: BTreeSet<String>,
    pub edges: BTreeSet<(String, String)>,
}

pub fn inclusion_graph(diagrams: &[Diagram]) -> InclusionGraph {
    let mut nodes = BTreeSet::new();
    let mut edges = BTreeSet::new();
    for d in diagrams {
        for c in &d.clusters {
            for n in c.nodes.keys() {
                if let Some(t) = orbit_type_of(n) {
                    nodes.insert(t);
                }
            }
            for (a, b) in &c.edges {
                if let (Some(x), Some(y)) = (orbit_type_of(a), orbit_type_of(b)) {
                    if x != y {
                        edges.insert((x, y));
                    }
                }
            }
        }
    }
    // the two polars of the identity sit inside E8
    for top in ["EIX", "EVIII"] {
        if nodes.contains(top) {
            edges.insert((top.to_string(), "E8".to_string()));
        }
    }
    nodes.insert("E8".into());
    InclusionGraph { nodes, edges }
}

pub fn inclusion() -> Result<InclusionGraph> {
    Ok(inclusion_graph(&[eix_orbits()?, eviii_orbits()?]))
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('"', "\\\""))
}

pub fn diagram_dot(d: &Diagram) -> String {
    let mut out = String::new();
    writeln!(out, "digraph {} {{", d.name).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    for c in &d.clusters {
        let id = |n: &str| quote(&format!("{}:{}", c.name, n));
        writeln!(out, "  subgraph cluster_{} {{", c.name).unwrap();
        writeln!(out, "    label={};", quote(&c.set)).unwrap();
        for (n, k) in &c.nodes {
            writeln!(
                out,
                "    {} [label={}, count={}];",
                id(n),
                quote(&format!("{}\\n{}", n, k)),
                k
            )
            .unwrap();
        }
        for (a, b) in &c.edges {
            writeln!(out, "    {} -> {};", id(a), id(b)).unwrap();
        }
        writeln!(out, "  }}").unwrap();
    }
    writeln!(out, "}}").unwrap();
    out
}

pub fn inclusion_dot(g: &InclusionGraph) -> String {
    let mut out = String::new();
    writeln!(out, "digraph inclusion {{").unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    for n in &g.nodes {
        writeln!(out, "  {};", quote(n)).unwrap();
    }
    for (a, b) in &g.edges {
        writeln!(out, "  {} -> {};", quote(a), quote(b)).unwrap();
    }
    writeln!(out, "}}").unwrap();
    out
}

/// DOT text for `eix_orbits`, `eviii_orbits` or `inclusion`.
pub fn emit_diagram(which: &str) -> Result<String> {
    match which {
        "eix_orbits" => Ok(diagram_dot(&eix_orbits()?)),
        "eviii_orbits" => Ok(diagram_dot(&eviii_orbits()?)),
        "inclusion" => Ok(inclusion_dot(&inclusion()?)),
        other => Err(Error::UnknownName(other.to_string())),
    }
}
