//! Simple undirected graphs on dense vertex identities `0..n`.

mod classes;
mod iso;

pub use classes::{is_bipartition, is_perfect_elimination_ordering, is_triangle_free, recognize, ClassReport};
pub use iso::{are_isomorphic, are_isomorphic_bounded, DEFAULT_ISO_LIMIT};

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const WORD: usize = 64;

/// Immutable simple graph. Adjacency is kept both as sorted lists and as
/// bit rows so that neighbourhood scans and edge tests are both cheap.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    rows: Vec<Vec<u64>>,
    edge_count: usize,
}

impl Graph {
    /// Builds the graph on `n` vertices with the given edges. Duplicate edges
    /// (in either orientation) are merged.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let words = n.div_ceil(WORD);
        let mut rows = vec![vec![0u64; words]; n];
        let mut adj = vec![Vec::new(); n];
        let mut edge_count = 0;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::invalid(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::invalid(format!("self-loop at vertex {u}")));
            }
            if rows[u][v / WORD] >> (v % WORD) & 1 == 1 {
                continue;
            }
            rows[u][v / WORD] |= 1 << (v % WORD);
            rows[v][u / WORD] |= 1 << (u % WORD);
            adj[u].push(v);
            adj[v].push(u);
            edge_count += 1;
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { adj, rows, edge_count })
    }

    pub fn empty(n: usize) -> Self {
        Graph::new(n, &[]).expect("edgeless graph is valid")
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &edges).expect("path is valid")
    }

    /// The cycle `C_n`; for `n < 3` this degenerates to the path on `n` vertices.
    pub fn cycle(n: usize) -> Self {
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        if n >= 3 {
            edges.push((n - 1, 0));
        }
        Graph::new(n, &edges).expect("cycle is valid")
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::new(n, &edges).expect("complete graph is valid")
    }

    /// Disjoint union, with `other`'s vertices shifted past `self`'s.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.vertex_count();
        let mut edges: Vec<_> = self.edges().collect();
        edges.extend(other.edges().map(|(u, v)| (u + shift, v + shift)));
        Graph::new(shift + other.vertex_count(), &edges).expect("union of valid graphs")
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.adj.len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.adj.len() && v < self.adj.len() && self.rows[u][v / WORD] >> (v % WORD) & 1 == 1
    }

    /// Sorted neighbours of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().copied().filter(move |&v| u < v).map(move |v| (u, v)))
    }

    /// Closed neighbourhoods agree: `N[u] = N[v]`.
    pub fn are_true_twins(&self, u: usize, v: usize) -> bool {
        if u == v {
            return true;
        }
        if !self.has_edge(u, v) {
            return false;
        }
        let nu = self.adj[u].iter().filter(|&&w| w != v);
        let nv = self.adj[v].iter().filter(|&&w| w != u);
        nu.eq(nv)
    }

    /// Number of neighbours of `v` inside `set`.
    pub fn degree_into(&self, v: usize, set: &VertexSet) -> usize {
        set.iter().filter(|&w| self.has_edge(v, w)).count()
    }

    pub fn check_set(&self, set: &VertexSet) -> Result<()> {
        match set.iter().find(|&v| v >= self.vertex_count()) {
            Some(v) => Err(Error::invalid(format!(
                "vertex {v} is outside 0..{}",
                self.vertex_count()
            ))),
            None => Ok(()),
        }
    }

    /// `G[U]`, relabelled `0..|U|` in the sorted order of `U`.
    pub fn induced_subgraph(&self, set: &VertexSet) -> Result<Graph> {
        self.check_set(set)?;
        let members = set.as_slice();
        let mut edges = Vec::new();
        for (i, &u) in members.iter().enumerate() {
            for (j, &v) in members.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    edges.push((i, j));
                }
            }
        }
        Graph::new(members.len(), &edges)
    }

    /// Every vertex of `G[U]` has degree exactly `d`. The empty set is
    /// vacuously d-regular.
    pub fn is_d_regular_set(&self, set: &VertexSet, d: usize) -> Result<bool> {
        self.check_set(set)?;
        Ok(set.iter().all(|v| self.degree_into(v, set) == d))
    }

    /// `G[U]` has exactly one connected component. The empty set is not connected.
    pub fn is_connected_set(&self, set: &VertexSet) -> Result<bool> {
        self.check_set(set)?;
        let Some(start) = set.iter().next() else {
            return Ok(false);
        };
        let mut seen = vec![false; self.vertex_count()];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if !seen[w] && set.contains(w) {
                    seen[w] = true;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        Ok(reached == set.len())
    }

    /// Component label per vertex, labels assigned in order of smallest member.
    pub fn components(&self) -> Vec<usize> {
        let n = self.vertex_count();
        let mut label = vec![usize::MAX; n];
        let mut next = 0;
        for s in 0..n {
            if label[s] != usize::MAX {
                continue;
            }
            label[s] = next;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if label[w] == usize::MAX {
                        label[w] = next;
                        queue.push_back(w);
                    }
                }
            }
            next += 1;
        }
        label
    }

    /// BFS distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Set is independent in the graph (0-regular).
    pub fn is_independent(&self, set: &VertexSet) -> bool {
        let m = set.as_slice();
        m.iter()
            .enumerate()
            .all(|(i, &u)| m[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    /// Same graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::invalid("relabelling is not a permutation"));
        }
        let edges: Vec<_> = self.edges().map(|(u, v)| (perm[u], perm[v])).collect();
        Graph::new(n, &edges)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.vertex_count())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Canonical (sorted, duplicate-free) set of vertex identities.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<usize>", into = "Vec<usize>")]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(vec![v])
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn min(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    /// Members of `self` not in `other`, sorted.
    pub fn difference(&self, other: &VertexSet) -> Vec<usize> {
        self.iter().filter(|&v| !other.contains(v)).collect()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.iter().chain(other.iter()).collect()
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        self.iter().filter(|&v| other.contains(v)).collect()
    }

    /// `self \ {out} ∪ {into}`.
    pub fn exchange(&self, out: usize, into: usize) -> VertexSet {
        self.iter().filter(|&v| v != out).chain([into]).collect()
    }

    pub fn with(&self, v: usize) -> VertexSet {
        self.iter().chain([v]).collect()
    }

    pub fn without(&self, v: usize) -> VertexSet {
        VertexSet(self.iter().filter(|&w| w != v).collect())
    }

    /// The unique pair `(removed, added)` when `other = self \ {removed} ∪ {added}`.
    pub fn single_exchange(&self, other: &VertexSet) -> Option<(usize, usize)> {
        if self.len() != other.len() {
            return None;
        }
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        let (mut out, mut inn) = (None, None);
        while i < a.len() || j < b.len() {
            let x = a.get(i).copied().unwrap_or(usize::MAX);
            let y = b.get(j).copied().unwrap_or(usize::MAX);
            if x == y {
                i += 1;
                j += 1;
            } else if x < y {
                if out.replace(x).is_some() {
                    return None;
                }
                i += 1;
            } else {
                if inn.replace(y).is_some() {
                    return None;
                }
                j += 1;
            }
        }
        out.zip(inn)
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(mut v: Vec<usize>) -> Self {
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl From<VertexSet> for Vec<usize> {
    fn from(s: VertexSet) -> Self {
        s.0
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(a: [usize; N]) -> Self {
        VertexSet::from(a.to_vec())
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from(iter.into_iter().collect::<Vec<_>>())
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}
