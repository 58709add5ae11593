//! Brute-force ground truth: enumerate every d-regular set of the relevant
//! size, connect each pair that is one move apart, and read off components.
//! Shares nothing with the BFS solver beyond the move predicate.

use std::collections::{HashMap, VecDeque};

use super::{moves, Decision, Instance, Limits, ReconfigSequence, Rule};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// All d-regular sets of exactly `k` vertices, in lexicographic order.
pub fn enumerate_d_regular_sets(g: &Graph, d: usize, k: usize) -> Result<Vec<VertexSet>> {
    enumerate_d_regular_sets_with(g, d, k, &Limits::default())
}

pub fn enumerate_d_regular_sets_with(g: &Graph, d: usize, k: usize, limits: &Limits) -> Result<Vec<VertexSet>> {
    if g.vertex_count() > limits.oracle_max_vertices {
        return Err(Error::ResourceLimit(format!(
            "enumeration limited to graphs with at most {} vertices (got {})",
            limits.oracle_max_vertices,
            g.vertex_count()
        )));
    }
    let mut search = SubsetSearch {
        g,
        d,
        k,
        max: limits.max_enumerated,
        chosen: Vec::with_capacity(k),
        inner: Vec::with_capacity(k),
        found: Vec::new(),
    };
    search.descend(0)?;
    Ok(search.found)
}

struct SubsetSearch<'a> {
    g: &'a Graph,
    d: usize,
    k: usize,
    max: usize,
    chosen: Vec<usize>,
    /// Degree of each chosen vertex inside the chosen set.
    inner: Vec<usize>,
    found: Vec<VertexSet>,
}

impl SubsetSearch<'_> {
    fn descend(&mut self, next: usize) -> Result<()> {
        let remaining = self.k - self.chosen.len();
        if remaining == 0 {
            if self.inner.iter().all(|&x| x == self.d) {
                if self.found.len() == self.max {
                    return Err(Error::ResourceLimit(format!("more than {} d-regular sets", self.max)));
                }
                self.found.push(VertexSet::from(self.chosen.clone()));
            }
            return Ok(());
        }
        let n = self.g.vertex_count();
        for v in next..n {
            if n - v < remaining {
                break;
            }
            let hits: Vec<usize> = (0..self.chosen.len())
                .filter(|&i| self.g.has_edge(self.chosen[i], v))
                .collect();
            if hits.len() > self.d || hits.iter().any(|&i| self.inner[i] == self.d) {
                continue;
            }
            for &i in &hits {
                self.inner[i] += 1;
            }
            self.chosen.push(v);
            self.inner.push(hits.len());
            // Every chosen vertex still short of degree d must be able to
            // reach it with the slots left.
            let left = remaining - 1;
            if self.inner.iter().all(|&x| x + left >= self.d) {
                self.descend(v + 1)?;
            }
            self.chosen.pop();
            self.inner.pop();
            for &i in &hits {
                self.inner[i] -= 1;
            }
        }
        Ok(())
    }
}

/// The explicit move graph over all d-regular sets of one cardinality.
#[derive(Debug, Clone)]
pub struct MoveGraph {
    sets: Vec<VertexSet>,
    index: HashMap<VertexSet, usize>,
    adjacency: Vec<Vec<usize>>,
    component: Vec<usize>,
}

impl MoveGraph {
    pub fn build(g: &Graph, d: usize, rule: Rule, k: usize, limits: &Limits) -> Result<Self> {
        let sets = enumerate_d_regular_sets_with(g, d, k, limits)?;
        let index: HashMap<VertexSet, usize> = sets.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
        let mut adjacency = vec![Vec::new(); sets.len()];
        for i in 0..sets.len() {
            for j in i + 1..sets.len() {
                if moves::exchange_allowed(g, rule, &sets[i], &sets[j]) {
                    adjacency[i].push(j);
                    adjacency[j].push(i);
                }
            }
        }
        let mut component = vec![usize::MAX; sets.len()];
        let mut label = 0;
        for s in 0..sets.len() {
            if component[s] != usize::MAX {
                continue;
            }
            component[s] = label;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &w in &adjacency[u] {
                    if component[w] == usize::MAX {
                        component[w] = label;
                        stack.push(w);
                    }
                }
            }
            label += 1;
        }
        Ok(MoveGraph {
            sets,
            index,
            adjacency,
            component,
        })
    }

    pub fn sets(&self) -> &[VertexSet] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Component label of a set, `None` if it is not one of the enumerated sets.
    pub fn component_of(&self, set: &VertexSet) -> Option<usize> {
        self.index.get(set).map(|&i| self.component[i])
    }

    pub fn reachable(&self, a: &VertexSet, b: &VertexSet) -> Option<bool> {
        Some(self.component_of(a)? == self.component_of(b)?)
    }

    /// A shortest path of sets from `a` to `b`, if one exists.
    pub fn path(&self, a: &VertexSet, b: &VertexSet) -> Option<Vec<VertexSet>> {
        let (&s, &t) = (self.index.get(a)?, self.index.get(b)?);
        if self.component[s] != self.component[t] {
            return None;
        }
        let mut parent = vec![usize::MAX; self.sets.len()];
        parent[s] = s;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            if u == t {
                break;
            }
            for &w in &self.adjacency[u] {
                if parent[w] == usize::MAX {
                    parent[w] = u;
                    queue.push_back(w);
                }
            }
        }
        let mut path = vec![t];
        while *path.last().unwrap() != s {
            path.push(parent[*path.last().unwrap()]);
        }
        path.reverse();
        Some(path.into_iter().map(|i| self.sets[i].clone()).collect())
    }
}

pub fn oracle_reachable(inst: &Instance) -> Result<Decision> {
    oracle_reachable_with(inst, &Limits::default())
}

pub fn oracle_reachable_with(inst: &Instance, limits: &Limits) -> Result<Decision> {
    let space = MoveGraph::build(inst.graph(), inst.d(), inst.rule(), inst.source().len(), limits)?;
    let explored = space.len();
    match space.path(inst.source(), inst.target()) {
        Some(path) => Ok(Decision::found(ReconfigSequence::new(path), explored)),
        None => match space.reachable(inst.source(), inst.target()) {
            Some(false) => Ok(Decision::unreachable(explored)),
            _ => Err(Error::internal("instance endpoint missing from the enumerated sets")),
        },
    }
}
