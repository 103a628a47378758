//! Graphs of groups with symbolic vertex and edge groups.

use std::collections::{BTreeSet, VecDeque};
use std::fmt::{self, Write as _};

use petgraph::unionfind::UnionFind;

use crate::error::{GraphError, Result};

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    /// Orbit the vertex stands for, e.g. `O_A`.
    pub orbit: String,
    pub group: String,
}

/// A directed edge `source -> target` carrying its own group and the two
/// injections into the endpoint groups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub symbol: String,
    pub orbit: String,
    pub group: String,
    pub source: VertexId,
    pub target: VertexId,
    pub into_source: String,
    pub into_target: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphOfGroups {
    name: String,
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    tree: BTreeSet<EdgeId>,
}

impl GraphOfGroups {
    pub fn new(name: impl Into<String>) -> Self {
        GraphOfGroups { name: name.into(), vertices: Vec::new(), edges: Vec::new(), tree: BTreeSet::new() }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn tree(&self) -> &BTreeSet<EdgeId> {
        &self.tree
    }

    pub fn add_vertex(&mut self, orbit: impl Into<String>, group: impl Into<String>) -> VertexId {
        self.vertices.push(Vertex { orbit: orbit.into(), group: group.into() });
        self.vertices.len() - 1
    }

    /// Adds an edge with injections named `α_e`, `β_e`.
    pub fn add_edge(
        &mut self,
        orbit: impl Into<String>,
        group: impl Into<String>,
        source: VertexId,
        target: VertexId,
    ) -> Result<EdgeId> {
        let id = self.edges.len();
        for vertex in [source, target] {
            if vertex >= self.vertices.len() {
                return Err(GraphError::MissingVertex { edge: id, vertex });
            }
        }
        let symbol = format!("e{id}");
        self.edges.push(Edge {
            into_source: format!("α_{symbol}"),
            into_target: format!("β_{symbol}"),
            symbol,
            orbit: orbit.into(),
            group: group.into(),
            source,
            target,
        });
        Ok(id)
    }

    /// Replaces the maximal tree. Checked by [`GraphOfGroups::validate`].
    pub fn set_tree(&mut self, edges: impl IntoIterator<Item = EdgeId>) {
        self.tree = edges.into_iter().collect();
    }

    /// Picks a spanning tree greedily in edge order.
    pub fn choose_tree(&mut self) -> Result<()> {
        let mut uf = UnionFind::<usize>::new(self.vertices.len());
        self.tree = self
            .edges
            .iter()
            .enumerate()
            .filter(|(_, e)| uf.union(e.source, e.target))
            .map(|(i, _)| i)
            .collect();
        self.validate()
    }

    pub fn validate(&self) -> Result<()> {
        if self.vertices.is_empty() {
            return Err(GraphError::Empty);
        }
        let n = self.vertices.len();
        let mut all = UnionFind::<usize>::new(n);
        let mut tree = UnionFind::<usize>::new(n);
        for (i, e) in self.edges.iter().enumerate() {
            for vertex in [e.source, e.target] {
                if vertex >= n {
                    return Err(GraphError::MissingVertex { edge: i, vertex });
                }
            }
            all.union(e.source, e.target);
        }
        if (1..n).any(|v| !all.equiv(0, v)) {
            return Err(GraphError::Disconnected);
        }
        for &t in &self.tree {
            let e = self.edges.get(t).ok_or_else(|| GraphError::BadTree(format!("no edge {t}")))?;
            if !tree.union(e.source, e.target) {
                return Err(GraphError::BadTree(format!("edge {} closes a cycle", e.symbol)));
            }
        }
        if self.tree.len() + 1 != n {
            return Err(GraphError::BadTree("not spanning".into()));
        }
        Ok(())
    }

    /// True when every edge is a tree edge.
    pub fn is_tree(&self) -> bool {
        self.tree.len() == self.edges.len()
    }

    pub fn to_dot(&self) -> String {
        let mut out = format!("digraph \"{}\" {{\n", escape(&self.name));
        for (i, v) in self.vertices.iter().enumerate() {
            let _ = writeln!(out, "  v{i} [label=\"{}\\n{}\"];", escape(&v.orbit), escape(&v.group));
        }
        for (i, e) in self.edges.iter().enumerate() {
            let style = if self.tree.contains(&i) { "bold" } else { "dashed" };
            let _ = writeln!(
                out,
                "  v{} -> v{} [label=\"{}\\n{}\", style={style}];",
                e.source,
                e.target,
                escape(&e.orbit),
                escape(&e.group)
            );
        }
        out.push_str("}\n");
        out
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Generators are the vertex groups and the edges outside the tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub name: String,
    pub generators: Vec<String>,
    pub relations: Vec<String>,
    /// Amalgam over the tree, then a free factor on the remaining edges.
    pub text: String,
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.name.is_empty() {
            f.write_str(&self.text)
        } else {
            write!(f, "{} = {}", self.name, self.text)
        }
    }
}

fn factor(group: &str) -> String {
    if group.contains(['⋊', '∗', ' ']) {
        format!("({group})")
    } else {
        group.to_string()
    }
}

fn amalgam_symbol(group: &str) -> String {
    if group.chars().count() == 1 {
        format!("∗_{group}")
    } else {
        format!("∗_{{{group}}}")
    }
}

pub fn pi1_presentation(g: &GraphOfGroups) -> Result<Presentation> {
    g.validate()?;
    let mut generators: Vec<String> = g.vertices.iter().map(|v| v.group.clone()).collect();
    let mut relations = Vec::new();
    let mut free = Vec::new();
    for (i, e) in g.edges.iter().enumerate() {
        let (a, b) = (&e.into_source, &e.into_target);
        if g.tree.contains(&i) {
            relations.push(format!("{a}(h) = {b}(h), h ∈ {}", e.group));
        } else {
            generators.push(e.symbol.clone());
            free.push(e.symbol.clone());
            relations.push(format!("{s}⁻¹ {a}(h) {s} = {b}(h), h ∈ {}", e.group, s = e.symbol));
        }
    }

    // Breadth-first over tree edges from vertex 0; each later vertex is
    // amalgamated along the edge that reached it.
    let mut seen = vec![false; g.vertices.len()];
    seen[0] = true;
    let mut order: Vec<(VertexId, Option<EdgeId>)> = vec![(0, None)];
    let mut queue = VecDeque::from([0]);
    while let Some(v) = queue.pop_front() {
        for &t in &g.tree {
            let e = &g.edges[t];
            let next = match (e.source == v, e.target == v) {
                (true, _) => e.target,
                (_, true) => e.source,
                _ => continue,
            };
            if !seen[next] {
                seen[next] = true;
                order.push((next, Some(t)));
                queue.push_back(next);
            }
        }
    }
    // A root group equal to the first edge group is absorbed: T ∗_T H = H.
    let absorb = order.len() > 1 && order[1].1.is_some_and(|t| g.edges[t].group == g.vertices[0].group);
    let mut text = String::new();
    for (k, &(v, via)) in order.iter().enumerate().skip(usize::from(absorb)) {
        if k > usize::from(absorb) {
            let via = via.expect("non-root vertices are reached by an edge");
            let _ = write!(text, " {} ", amalgam_symbol(&g.edges[via].group));
        }
        text.push_str(&factor(&g.vertices[v].group));
    }
    if !free.is_empty() {
        let _ = write!(text, " ∗ ⟨{}⟩", free.join(", "));
    }
    Ok(Presentation { name: g.name.clone(), generators, relations, text })
}
