//! The fundamental group `π₁(X, A)` of a finite graph `X` relative to a
//! base subtree `A`.
//!
//! Elements are classes of edge paths with both endpoints in `A`, where two
//! paths are identified when they differ by pre- and post-composition with
//! paths in `A` up to homotopy rel endpoints. Because `A` is a tree, each
//! class has a unique representative: the freely reduced path with its
//! maximal leading and trailing runs of `A`-edges removed.

mod enumerate;

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use thiserror::Error;

pub use enumerate::{
    basepoint_independence_check, basepoint_iso_check, basepoint_iso_report, enumerate_classes,
    group_axioms_check, IsoReport,
};

pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph needs at least one vertex")]
    NoVertices,
    #[error("edge {edge} references vertex {vertex}, but there are only {count} vertices")]
    VertexOutOfRange { edge: u64, vertex: Vertex, count: usize },
    #[error("duplicate edge id {0}")]
    DuplicateEdge(u64),
    #[error("unknown edge id {0}")]
    UnknownEdge(u64),
    #[error("base vertex {0} is out of range")]
    BaseVertexOutOfRange(Vertex),
    #[error("step {position} (edge {edge}) does not start where the previous step ended")]
    Disconnected { position: usize, edge: u64 },
    #[error("path endpoint {0} is not in the base subtree")]
    EndpointOutsideBase(Vertex),
    #[error("graph is not connected or the base is not a nonempty subtree")]
    Invalid,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub id: u64,
    pub tail: Vertex,
    pub head: Vertex,
}

/// An edge traversed forwards (tail to head) or backwards.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Step {
    pub edge: u64,
    pub backward: bool,
}

impl Step {
    pub fn forward(edge: u64) -> Step {
        Step { edge, backward: false }
    }

    pub fn backward(edge: u64) -> Step {
        Step { edge, backward: true }
    }

    pub fn reversed(self) -> Step {
        Step {
            edge: self.edge,
            backward: !self.backward,
        }
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.backward {
            write!(f, "e{}^-1", self.edge)
        } else {
            write!(f, "e{}", self.edge)
        }
    }
}

fn render_steps(steps: &[Step]) -> String {
    steps.iter().map(Step::to_string).collect::<Vec<_>>().join(" ")
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgePath {
    start: Vertex,
    steps: Vec<Step>,
}

impl EdgePath {
    pub fn constant(v: Vertex) -> EdgePath {
        EdgePath { start: v, steps: Vec::new() }
    }

    pub fn start(&self) -> Vertex {
        self.start
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn render(&self) -> String {
        render_steps(&self.steps)
    }
}

/// A class in `π₁(X, A)`, held as its canonical representative. The empty
/// representative is the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RelClass {
    steps: Vec<Step>,
}

impl RelClass {
    pub fn identity() -> RelClass {
        RelClass { steps: Vec::new() }
    }

    pub fn is_identity(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn render(&self) -> String {
        render_steps(&self.steps)
    }
}

impl fmt::Display for RelClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            f.write_str("1")
        } else {
            f.write_str(&self.render())
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphComplex {
    vertex_count: usize,
    edges: BTreeMap<u64, Edge>,
    base_edges: BTreeSet<u64>,
    base_vertices: BTreeSet<Vertex>,
}

impl GraphComplex {
    /// Structural checks only (ids unique, vertices in range). Connectivity
    /// and the subtree condition are reported by [`GraphComplex::validate`].
    ///
    /// `base_vertex` names the base when it is a single vertex; with base
    /// edges present it is added to the base vertex set.
    pub fn new(
        vertex_count: usize,
        edges: Vec<Edge>,
        base_edges: Vec<u64>,
        base_vertex: Option<Vertex>,
    ) -> Result<GraphComplex, GraphError> {
        if vertex_count == 0 {
            return Err(GraphError::NoVertices);
        }
        let mut map = BTreeMap::new();
        for e in edges {
            for v in [e.tail, e.head] {
                if v >= vertex_count {
                    return Err(GraphError::VertexOutOfRange {
                        edge: e.id,
                        vertex: v,
                        count: vertex_count,
                    });
                }
            }
            if map.insert(e.id, e).is_some() {
                return Err(GraphError::DuplicateEdge(e.id));
            }
        }
        let mut base_vertices = BTreeSet::new();
        let mut base = BTreeSet::new();
        for id in base_edges {
            let e = map.get(&id).ok_or(GraphError::UnknownEdge(id))?;
            base_vertices.insert(e.tail);
            base_vertices.insert(e.head);
            base.insert(id);
        }
        if let Some(v) = base_vertex {
            if v >= vertex_count {
                return Err(GraphError::BaseVertexOutOfRange(v));
            }
            base_vertices.insert(v);
        }
        Ok(GraphComplex {
            vertex_count,
            edges: map,
            base_edges: base,
            base_vertices,
        })
    }

    /// Two vertices joined by three parallel edges `e0, e1, e2` (all
    /// `0 → 1`), with base `A = e0`.
    pub fn theta() -> GraphComplex {
        let edges = (0..3).map(|id| Edge { id, tail: 0, head: 1 }).collect();
        GraphComplex::new(2, edges, vec![0], None).expect("valid")
    }

    /// One vertex with `loops` loops `e0, e1, …`, base `A` = the vertex.
    pub fn wedge(loops: u64) -> GraphComplex {
        let edges = (0..loops).map(|id| Edge { id, tail: 0, head: 0 }).collect();
        GraphComplex::new(1, edges, vec![], Some(0)).expect("valid")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> impl Iterator<Item = &Edge> {
        self.edges.values()
    }

    pub fn base_edges(&self) -> &BTreeSet<u64> {
        &self.base_edges
    }

    pub fn base_vertices(&self) -> &BTreeSet<Vertex> {
        &self.base_vertices
    }

    pub fn in_base(&self, step: Step) -> bool {
        self.base_edges.contains(&step.edge)
    }

    /// `(from, to)` of a step.
    pub fn ends(&self, step: Step) -> Result<(Vertex, Vertex), GraphError> {
        let e = self.edges.get(&step.edge).ok_or(GraphError::UnknownEdge(step.edge))?;
        Ok(if step.backward { (e.head, e.tail) } else { (e.tail, e.head) })
    }

    fn ends_known(&self, step: Step) -> (Vertex, Vertex) {
        self.ends(step).expect("step over a known edge")
    }

    /// Steps leaving `v`, ordered by edge id then direction.
    pub fn steps_from(&self, v: Vertex) -> Vec<Step> {
        let mut out = Vec::new();
        for e in self.edges.values() {
            if e.tail == v {
                out.push(Step::forward(e.id));
            }
            if e.head == v {
                out.push(Step::backward(e.id));
            }
        }
        out
    }

    /// Connectivity of `X`; `A` nonempty, connected and acyclic.
    pub fn validate(&self) -> bool {
        if self.base_vertices.is_empty() {
            return false;
        }
        if self.reachable(0, |_| true).len() != self.vertex_count {
            return false;
        }
        let start = *self.base_vertices.first().expect("nonempty");
        let in_a = self.reachable(start, |s| self.base_edges.contains(&s.edge));
        if in_a != self.base_vertices {
            return false;
        }
        // a connected graph is a tree iff |E| = |V| - 1
        self.base_edges.len() + 1 == self.base_vertices.len()
    }

    fn reachable(&self, from: Vertex, allow: impl Fn(Step) -> bool) -> BTreeSet<Vertex> {
        let mut seen = BTreeSet::from([from]);
        let mut queue = VecDeque::from([from]);
        while let Some(v) = queue.pop_front() {
            for s in self.steps_from(v) {
                if !allow(s) {
                    continue;
                }
                let (_, to) = self.ends_known(s);
                if seen.insert(to) {
                    queue.push_back(to);
                }
            }
        }
        seen
    }

    pub fn path(&self, start: Vertex, steps: Vec<Step>) -> Result<EdgePath, GraphError> {
        if start >= self.vertex_count {
            return Err(GraphError::BaseVertexOutOfRange(start));
        }
        let mut at = start;
        for (position, &s) in steps.iter().enumerate() {
            let (from, to) = self.ends(s)?;
            if from != at {
                return Err(GraphError::Disconnected { position, edge: s.edge });
            }
            at = to;
        }
        Ok(EdgePath { start, steps })
    }

    /// A path from its steps alone; the start is the tail of the first step.
    /// The empty step list is the constant path at the first base vertex.
    pub fn path_from_steps(&self, steps: Vec<Step>) -> Result<EdgePath, GraphError> {
        let start = match steps.first() {
            Some(&s) => self.ends(s)?.0,
            None => *self.base_vertices.first().ok_or(GraphError::Invalid)?,
        };
        self.path(start, steps)
    }

    pub fn end_of(&self, p: &EdgePath) -> Vertex {
        p.steps
            .last()
            .map_or(p.start, |&s| self.ends_known(s).1)
    }

    pub fn reduce(&self, p: &EdgePath) -> EdgePath {
        let mut out: Vec<Step> = Vec::with_capacity(p.steps.len());
        for &s in &p.steps {
            if out.last() == Some(&s.reversed()) {
                out.pop();
            } else {
                out.push(s);
            }
        }
        EdgePath { start: p.start, steps: out }
    }

    pub fn concat(&self, p: &EdgePath, q: &EdgePath) -> Result<EdgePath, GraphError> {
        if self.end_of(p) != q.start {
            return Err(GraphError::Disconnected {
                position: p.len(),
                edge: q.steps.first().map_or(0, |s| s.edge),
            });
        }
        let mut steps = p.steps.clone();
        steps.extend_from_slice(&q.steps);
        Ok(EdgePath { start: p.start, steps })
    }

    pub fn reverse(&self, p: &EdgePath) -> EdgePath {
        EdgePath {
            start: self.end_of(p),
            steps: p.steps.iter().rev().map(|s| s.reversed()).collect(),
        }
    }

    /// The unique reduced path inside `A` from `u` to `v`.
    pub fn base_path(&self, u: Vertex, v: Vertex) -> Result<EdgePath, GraphError> {
        for w in [u, v] {
            if !self.base_vertices.contains(&w) {
                return Err(GraphError::EndpointOutsideBase(w));
            }
        }
        let mut parent: BTreeMap<Vertex, Option<Step>> = BTreeMap::from([(u, None)]);
        let mut queue = VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            if x == v {
                break;
            }
            for s in self.steps_from(x) {
                if !self.in_base(s) {
                    continue;
                }
                let (_, to) = self.ends_known(s);
                if let std::collections::btree_map::Entry::Vacant(slot) = parent.entry(to) {
                    slot.insert(Some(s));
                    queue.push_back(to);
                }
            }
        }
        let mut steps = Vec::new();
        let mut at = v;
        while let Some(Some(s)) = parent.get(&at) {
            steps.push(*s);
            at = self.ends_known(*s).0;
        }
        if at != u {
            return Err(GraphError::Invalid);
        }
        steps.reverse();
        Ok(EdgePath { start: u, steps })
    }

    /// Largest distance in `A` between two base vertices.
    pub fn base_diameter(&self) -> usize {
        let vs: Vec<Vertex> = self.base_vertices.iter().copied().collect();
        let mut best = 0;
        for &a in &vs {
            for &b in &vs {
                if let Ok(p) = self.base_path(a, b) {
                    best = best.max(p.len());
                }
            }
        }
        best
    }

    pub fn class_of(&self, p: &EdgePath) -> Result<RelClass, GraphError> {
        for v in [p.start, self.end_of(p)] {
            if !self.base_vertices.contains(&v) {
                return Err(GraphError::EndpointOutsideBase(v));
            }
        }
        let r = self.reduce(p);
        let lead = r.steps.iter().take_while(|&&s| self.in_base(s)).count();
        if lead == r.steps.len() {
            return Ok(RelClass::identity());
        }
        let trail = r.steps.iter().rev().take_while(|&&s| self.in_base(s)).count();
        Ok(RelClass {
            steps: r.steps[lead..r.steps.len() - trail].to_vec(),
        })
    }

    /// The canonical representative as a path. `None` for the identity.
    pub fn representative(&self, c: &RelClass) -> Option<EdgePath> {
        let first = *c.steps.first()?;
        Some(EdgePath {
            start: self.ends_known(first).0,
            steps: c.steps.clone(),
        })
    }

    pub fn rel_product(&self, p: &RelClass, q: &RelClass) -> RelClass {
        let (Some(a), Some(b)) = (self.representative(p), self.representative(q)) else {
            return if p.is_identity() { q.clone() } else { p.clone() };
        };
        let bridge = self
            .base_path(self.end_of(&a), b.start)
            .expect("class endpoints lie in A");
        let joined = self
            .concat(&self.concat(&a, &bridge).expect("bridge starts at a(1)"), &b)
            .expect("bridge ends at b(0)");
        self.class_of(&joined).expect("endpoints in A")
    }

    pub fn rel_inverse(&self, p: &RelClass) -> RelClass {
        RelClass {
            steps: p.steps.iter().rev().map(|s| s.reversed()).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(e: u64) -> Step {
        Step::forward(e)
    }

    fn b(e: u64) -> Step {
        Step::backward(e)
    }

    #[test]
    fn validate_examples() {
        assert!(GraphComplex::wedge(2).validate());
        assert!(GraphComplex::theta().validate());
        let edges = (0..3).map(|id| Edge { id, tail: 0, head: 1 }).collect();
        let cyclic_base = GraphComplex::new(2, edges, vec![0, 1], None).unwrap();
        assert!(!cyclic_base.validate());
        let disconnected =
            GraphComplex::new(3, vec![Edge { id: 0, tail: 0, head: 1 }], vec![0], None).unwrap();
        assert!(!disconnected.validate());
        let empty_base =
            GraphComplex::new(2, vec![Edge { id: 0, tail: 0, head: 1 }], vec![], None).unwrap();
        assert!(!empty_base.validate());
        let loop_base = GraphComplex::new(1, vec![Edge { id: 0, tail: 0, head: 0 }], vec![0], None).unwrap();
        assert!(!loop_base.validate());
    }

    #[test]
    fn construction_errors() {
        assert_eq!(GraphComplex::new(0, vec![], vec![], None).unwrap_err(), GraphError::NoVertices);
        assert_eq!(
            GraphComplex::new(1, vec![Edge { id: 3, tail: 0, head: 1 }], vec![], Some(0)).unwrap_err(),
            GraphError::VertexOutOfRange { edge: 3, vertex: 1, count: 1 }
        );
        assert_eq!(
            GraphComplex::new(1, vec![], vec![7], None).unwrap_err(),
            GraphError::UnknownEdge(7)
        );
    }

    #[test]
    fn paths_must_be_incident() {
        let g = GraphComplex::theta();
        assert!(g.path(0, vec![f(1), b(2)]).is_ok());
        assert_eq!(
            g.path(0, vec![f(1), f(2)]).unwrap_err(),
            GraphError::Disconnected { position: 1, edge: 2 }
        );
    }

    #[test]
    fn class_examples() {
        let g = GraphComplex::theta();
        assert!(g.class_of(&EdgePath::constant(0)).unwrap().is_identity());
        let inside = g.path(0, vec![f(0), b(0), f(0)]).unwrap();
        assert!(g.class_of(&inside).unwrap().is_identity());
        let p = g.path(0, vec![f(1), b(2)]).unwrap();
        assert_eq!(g.class_of(&p).unwrap().steps(), &[f(1), b(2)]);
        let padded = g.path(1, vec![b(0), f(1), b(2), f(0)]).unwrap();
        assert_eq!(g.class_of(&padded).unwrap(), g.class_of(&p).unwrap());
    }

    #[test]
    fn class_rejects_endpoints_outside_base() {
        let edges = vec![Edge { id: 0, tail: 0, head: 1 }, Edge { id: 1, tail: 1, head: 2 }];
        let g = GraphComplex::new(3, edges, vec![0], None).unwrap();
        let p = g.path(0, vec![f(0), f(1)]).unwrap();
        assert_eq!(g.class_of(&p).unwrap_err(), GraphError::EndpointOutsideBase(2));
    }

    #[test]
    fn product_examples() {
        let g = GraphComplex::theta();
        let p = g.class_of(&g.path(0, vec![f(1), b(0)]).unwrap()).unwrap();
        let q = g.class_of(&g.path(0, vec![f(2), b(0)]).unwrap()).unwrap();
        assert_eq!(g.rel_product(&RelClass::identity(), &q), q);
        assert!(g.rel_product(&p, &g.rel_inverse(&p)).is_identity());
        // e1 then the A-bridge e0^-1 from 1 back to 0, then e2
        assert_eq!(g.rel_product(&p, &q).steps(), &[f(1), b(0), f(2)]);
    }

    #[test]
    fn base_paths() {
        let g = GraphComplex::theta();
        assert_eq!(g.base_path(1, 0).unwrap().steps(), &[b(0)]);
        assert!(g.base_path(0, 0).unwrap().is_empty());
        assert_eq!(g.base_diameter(), 1);
        assert_eq!(GraphComplex::wedge(2).base_diameter(), 0);
    }

    /// Brute-force relation: `p ≈ q` iff some `A`-walks `u`, `v` (any length
    /// up to `walk_len`, not necessarily reduced) make `v^-1 p u` freely
    /// reduce to the same path as `q`.
    fn brute_equivalent(g: &GraphComplex, p: &EdgePath, q: &EdgePath, walk_len: usize) -> bool {
        let walks = |from: Vertex, to: Vertex| -> Vec<EdgePath> {
            let mut out = Vec::new();
            let mut stack = vec![EdgePath::constant(from)];
            while let Some(w) = stack.pop() {
                if g.end_of(&w) == to {
                    out.push(w.clone());
                }
                if w.len() < walk_len {
                    for s in g.steps_from(g.end_of(&w)) {
                        if g.in_base(s) {
                            let mut steps = w.steps.clone();
                            steps.push(s);
                            stack.push(EdgePath { start: w.start, steps });
                        }
                    }
                }
            }
            out
        };
        let target = g.reduce(q);
        for v in walks(p.start(), q.start()) {
            for u in walks(g.end_of(p), g.end_of(q)) {
                let c = g.concat(&g.concat(&g.reverse(&v), p).unwrap(), &u).unwrap();
                if g.reduce(&c) == target {
                    return true;
                }
            }
        }
        false
    }

    fn all_paths(g: &GraphComplex, max_len: usize) -> Vec<EdgePath> {
        let mut out = Vec::new();
        for &a in g.base_vertices() {
            let mut stack = vec![EdgePath::constant(a)];
            while let Some(p) = stack.pop() {
                if g.base_vertices().contains(&g.end_of(&p)) {
                    out.push(p.clone());
                }
                if p.len() < max_len {
                    for s in g.steps_from(g.end_of(&p)) {
                        let mut steps = p.steps.clone();
                        steps.push(s);
                        stack.push(EdgePath { start: p.start, steps });
                    }
                }
            }
        }
        out
    }

    #[test]
    fn canonical_classes_match_brute_force_equivalence() {
        let g = GraphComplex::theta();
        let paths = all_paths(&g, 5);
        let classes: Vec<RelClass> = paths.iter().map(|p| g.class_of(p).unwrap()).collect();
        // group paths by reduced form to keep the pair loop small; the
        // relation is invariant under free reduction on both sides
        let mut reps: BTreeMap<Vec<Step>, (EdgePath, RelClass)> = BTreeMap::new();
        for (p, c) in paths.iter().zip(&classes) {
            reps.entry(g.reduce(p).steps.clone()).or_insert((g.reduce(p), c.clone()));
        }
        let reps: Vec<_> = reps.into_values().collect();
        for (p, cp) in &reps {
            for (q, cq) in &reps {
                assert_eq!(cp == cq, brute_equivalent(&g, p, q, 3), "{} vs {}", p.render(), q.render());
            }
        }
    }
}
