//! Directed multigraphs with labelled vertices and edges.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::EulerianViolation;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge<E> {
    pub tail: usize,
    pub head: usize,
    pub label: E,
}

/// A directed multigraph. Loops and parallel edges are allowed. Out-edges of
/// a vertex are kept in insertion order.
#[derive(Debug, Clone)]
pub struct TransitionGraph<V, E> {
    vertices: Vec<V>,
    edges: Vec<Edge<E>>,
    out: Vec<Vec<usize>>,
    in_degree: Vec<usize>,
}

impl<V, E> Default for TransitionGraph<V, E> {
    fn default() -> Self {
        TransitionGraph {
            vertices: Vec::new(),
            edges: Vec::new(),
            out: Vec::new(),
            in_degree: Vec::new(),
        }
    }
}

impl<V, E> TransitionGraph<V, E> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_vertices(vertices: Vec<V>) -> Self {
        let n = vertices.len();
        TransitionGraph {
            vertices,
            edges: Vec::new(),
            out: vec![Vec::new(); n],
            in_degree: vec![0; n],
        }
    }

    pub fn add_vertex(&mut self, label: V) -> usize {
        self.vertices.push(label);
        self.out.push(Vec::new());
        self.in_degree.push(0);
        self.vertices.len() - 1
    }

    pub fn add_edge(&mut self, tail: usize, head: usize, label: E) -> usize {
        assert!(tail < self.vertices.len() && head < self.vertices.len());
        self.edges.push(Edge { tail, head, label });
        self.out[tail].push(self.edges.len() - 1);
        self.in_degree[head] += 1;
        self.edges.len() - 1
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex(&self, v: usize) -> &V {
        &self.vertices[v]
    }

    pub fn vertices(&self) -> &[V] {
        &self.vertices
    }

    pub fn edge(&self, e: usize) -> &Edge<E> {
        &self.edges[e]
    }

    pub fn edges(&self) -> &[Edge<E>] {
        &self.edges
    }

    /// Indices of the out-edges of `v`, in insertion order.
    pub fn out_edges(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn successors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.out[v].iter().map(move |&e| self.edges[e].head)
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].len()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.in_degree[v]
    }

    pub fn has_edge(&self, tail: usize, head: usize) -> bool {
        self.successors(tail).any(|h| h == head)
    }

    pub fn is_balanced(&self) -> bool {
        (0..self.vertex_count()).all(|v| self.out_degree(v) == self.in_degree(v))
    }

    fn reach(&self, from: usize, forward: bool, undirected: bool) -> Vec<bool> {
        let n = self.vertex_count();
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
        for e in &self.edges {
            if forward || undirected {
                adj[e.tail].push(e.head);
            }
            if !forward || undirected {
                adj[e.head].push(e.tail);
            }
        }
        let mut seen = vec![false; n];
        let mut stack = vec![from];
        seen[from] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen
    }

    /// Every vertex reaches every other vertex along directed edges.
    pub fn is_strongly_connected(&self) -> bool {
        if self.vertices.is_empty() {
            return true;
        }
        self.reach(0, true, false).iter().all(|&b| b) && self.reach(0, false, false).iter().all(|&b| b)
    }

    /// An Eulerian cycle as a sequence of edge indices, found with
    /// Hierholzer's algorithm. Out-edges are consumed in insertion order,
    /// starting from the tail of edge 0, so the result is deterministic.
    ///
    /// Isolated vertices are ignored; every vertex that carries an edge must
    /// be balanced and all of them must lie in one connected component.
    pub fn eulerian_cycle(&self) -> Result<Vec<usize>> {
        if self.edges.is_empty() {
            return Err(Error::NotEulerian(EulerianViolation::NoEdges));
        }
        for v in 0..self.vertex_count() {
            if self.out_degree(v) != self.in_degree(v) {
                return Err(Error::NotEulerian(EulerianViolation::Unbalanced {
                    vertex: v,
                    out_degree: self.out_degree(v),
                    in_degree: self.in_degree(v),
                }));
            }
        }
        let start = self.edges[0].tail;
        let reached = self.reach(start, true, true);
        if let Some(v) = (0..self.vertex_count()).find(|&v| self.out_degree(v) > 0 && !reached[v]) {
            return Err(Error::NotEulerian(EulerianViolation::Disconnected { vertex: v }));
        }

        let mut next_out = vec![0usize; self.vertex_count()];
        // Stack of (vertex, edge used to arrive there).
        let mut stack: Vec<(usize, Option<usize>)> = vec![(start, None)];
        let mut circuit = Vec::with_capacity(self.edges.len());
        while let Some(&(v, via)) = stack.last() {
            if next_out[v] < self.out[v].len() {
                let e = self.out[v][next_out[v]];
                next_out[v] += 1;
                stack.push((self.edges[e].head, Some(e)));
            } else {
                stack.pop();
                if let Some(e) = via {
                    circuit.push(e);
                }
            }
        }
        circuit.reverse();
        Ok(circuit)
    }

    /// The line graph: one vertex per edge of `self` (labelled by that edge's
    /// label), and an edge `e -> f` whenever the head of `e` is the tail of
    /// `f`. The new edge is labelled by `merge(label(e), label(f))`.
    pub fn line_graph<E2>(&self, mut merge: impl FnMut(&E, &E) -> E2) -> TransitionGraph<E, E2>
    where
        E: Clone,
    {
        let mut g = TransitionGraph::with_vertices(self.edges.iter().map(|e| e.label.clone()).collect());
        for (i, e) in self.edges.iter().enumerate() {
            for &f in &self.out[e.head] {
                let label = merge(&e.label, &self.edges[f].label);
                g.add_edge(i, f, label);
            }
        }
        g
    }

    /// True when `cycle` lists every vertex exactly once and each vertex has
    /// an edge to the next one (cyclically).
    pub fn is_hamiltonian_cycle(&self, cycle: &[usize]) -> bool {
        let n = self.vertex_count();
        if cycle.len() != n || n == 0 {
            return false;
        }
        let mut seen = vec![false; n];
        for &v in cycle {
            if v >= n || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        (0..n).all(|i| self.has_edge(cycle[i], cycle[(i + 1) % n]))
    }
}
