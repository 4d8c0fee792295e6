//! Simple undirected graphs on at most 64 vertices.
//!
//! Each vertex owns one `u64` neighbor bit row, so edge tests are branch-free
//! and whole neighborhoods move through the scans as single words. Values are
//! immutable once built; every combinator returns a fresh graph.

use std::fmt;

use crate::error::{Error, Result};

/// Hard vertex cap: one machine word per adjacency row.
pub const MAX_VERTICES: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        return Err(Error::capacity(format!(
            "graph order {n} exceeds the cap of {MAX_VERTICES} vertices"
        )));
    }
    Ok(())
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Result<Self> {
        check_order(n)?;
        let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let adj = (0..n).map(|v| mask & !(1u64 << v)).collect();
        Ok(Graph { n, adj })
    }

    /// Path `P_k` on vertices `0..k` with edges `{i, i+1}`.
    pub fn path(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::parameter("path order must be at least 1"));
        }
        let mut g = Graph::empty(k)?;
        for i in 0..k - 1 {
            g.add_edge(i, i + 1)?;
        }
        Ok(g)
    }

    /// Near-perfect matching `M_n`: floor(n/2) disjoint edges plus one
    /// isolated vertex when `n` is odd.
    pub fn matching(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for i in 0..n / 2 {
            g.add_edge(2 * i, 2 * i + 1)?;
        }
        Ok(g)
    }

    /// Graph from an explicit edge list.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Inserts the edge `{u, v}`; loops and out-of-range endpoints are errors.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::parameter(format!(
                "edge ({u}, {v}) out of range for order {}",
                self.n
            )));
        }
        if u == v {
            return Err(Error::parameter(format!("loop at vertex {u} rejected")));
        }
        self.adj[u] |= 1u64 << v;
        self.adj[v] |= 1u64 << u;
        Ok(())
    }

    /// Removes the edge `{u, v}` if present.
    pub fn remove_edge(&mut self, u: usize, v: usize) {
        if u < self.n && v < self.n && u != v {
            self.adj[u] &= !(1u64 << v);
            self.adj[v] &= !(1u64 << u);
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|row| row.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && (self.adj[u] >> v) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Degree sequence in vertex order.
    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Neighbor bit row of `v`.
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let row = self.adj[v];
        (0..self.n).filter(move |&u| (row >> u) & 1 == 1)
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            // keep only neighbors above u
            let mut row = if u + 1 >= 64 {
                0
            } else {
                self.adj[u] & !((1u64 << (u + 1)) - 1)
            };
            while row != 0 {
                let v = row.trailing_zeros() as usize;
                out.push((u, v));
                row &= row - 1;
            }
        }
        out
    }

    /// Disjoint union; the right graph's vertices are shifted by `self.n`.
    pub fn union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        check_order(n)?;
        let mut adj = Vec::with_capacity(n);
        adj.extend_from_slice(&self.adj);
        adj.extend(other.adj.iter().map(|row| row << self.n));
        let g = Graph { n, adj };
        g.debug_check();
        Ok(g)
    }

    /// Join: disjoint union plus every edge between the two parts.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let mut g = self.union(other)?;
        if other.n == 0 || self.n == 0 {
            return Ok(g);
        }
        let left_mask = if self.n == 64 { u64::MAX } else { (1u64 << self.n) - 1 };
        let right_mask = if g.n == 64 { u64::MAX } else { (1u64 << g.n) - 1 } & !left_mask;
        for v in 0..self.n {
            g.adj[v] |= right_mask;
        }
        for v in self.n..g.n {
            g.adj[v] |= left_mask;
        }
        g.debug_check();
        Ok(g)
    }

    /// Complement graph: edge exactly where `self` has a non-edge.
    pub fn complement(&self) -> Graph {
        let mask = if self.n == 64 { u64::MAX } else { (1u64 << self.n) - 1 };
        let adj = (0..self.n)
            .map(|v| mask & !self.adj[v] & !(1u64 << v))
            .collect();
        let g = Graph { n: self.n, adj };
        g.debug_check();
        g
    }

    /// Relabels vertices: old vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::parameter("permutation length must match order"));
        }
        let mut seen = 0u64;
        for &img in perm {
            if img >= self.n || (seen >> img) & 1 == 1 {
                return Err(Error::parameter("not a permutation"));
            }
            seen |= 1 << img;
        }
        let mut g = Graph::empty(self.n)?;
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v])?;
        }
        Ok(g)
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        self.component_masks().len() == 1
    }

    /// Connected components as vertex bit masks, ordered by least vertex.
    pub fn component_masks(&self) -> Vec<u64> {
        let full = if self.n == 64 { u64::MAX } else { (1u64 << self.n) - 1 };
        let mut unvisited = full;
        let mut comps = Vec::new();
        while unvisited != 0 {
            let start = unvisited.trailing_zeros() as usize;
            let mut comp = 1u64 << start;
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0u64;
                let mut f = frontier;
                while f != 0 {
                    let v = f.trailing_zeros() as usize;
                    next |= self.adj[v];
                    f &= f - 1;
                }
                frontier = next & !comp;
                comp |= next;
            }
            comps.push(comp);
            unvisited &= !comp;
        }
        comps
    }

    /// Subgraph induced by the vertices in `mask`, plus the map from new
    /// index to original vertex.
    pub fn induced_subgraph(&self, mask: u64) -> (Graph, Vec<usize>) {
        let verts: Vec<usize> = (0..self.n).filter(|&v| (mask >> v) & 1 == 1).collect();
        let mut g = Graph::empty(verts.len()).expect("induced order within cap");
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j).expect("in range");
                }
            }
        }
        (g, verts)
    }

    /// Panics in debug builds when symmetry or the no-loop rule is violated.
    pub(crate) fn debug_check(&self) {
        #[cfg(debug_assertions)]
        {
            let mask = if self.n == 64 { u64::MAX } else { (1u64 << self.n) - 1 };
            for v in 0..self.n {
                debug_assert_eq!(self.adj[v] & !mask, 0, "stray bits at vertex {v}");
                debug_assert_eq!((self.adj[v] >> v) & 1, 0, "loop at vertex {v}");
                for u in self.neighbors(v) {
                    debug_assert!(self.has_edge(u, v), "asymmetric edge ({u},{v})");
                }
            }
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_edge_counts() {
        assert_eq!(Graph::complete(0).unwrap().edge_count(), 0);
        assert_eq!(Graph::complete(1).unwrap().edge_count(), 0);
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(k4.edge_count(), 6);
        assert!(k4.degrees().iter().all(|&d| d == 3));
    }

    #[test]
    fn path_shapes() {
        assert_eq!(Graph::path(1).unwrap().edge_count(), 0);
        assert_eq!(Graph::path(2).unwrap().edge_count(), 1);
        let p5 = Graph::path(5).unwrap();
        assert_eq!(p5.degrees(), vec![1, 2, 2, 2, 1]);
        assert!(Graph::path(0).is_err());
    }

    #[test]
    fn matching_shapes() {
        assert_eq!(Graph::matching(4).unwrap().edge_count(), 2);
        let m5 = Graph::matching(5).unwrap();
        assert_eq!(m5.edge_count(), 2);
        assert_eq!(m5.degree(4), 0);
        assert_eq!(Graph::matching(0).unwrap().order(), 0);
    }

    #[test]
    fn union_cases() {
        let k2 = Graph::complete(2).unwrap();
        let m4 = k2.union(&k2).unwrap();
        assert_eq!(m4, Graph::matching(4).unwrap());
        let g = Graph::path(3).unwrap();
        assert_eq!(g.union(&Graph::empty(0).unwrap()).unwrap(), g);
        let k5k2 = Graph::complete(5).unwrap().union(&k2).unwrap();
        assert_eq!((k5k2.order(), k5k2.edge_count()), (7, 11));
    }

    #[test]
    fn union_capacity() {
        let g = Graph::empty(40).unwrap();
        assert!(g.union(&Graph::empty(30).unwrap()).is_err());
    }

    #[test]
    fn join_cases() {
        // K_1 joined to empty(n-1) is the star.
        let star = Graph::complete(1)
            .unwrap()
            .join(&Graph::empty(5).unwrap())
            .unwrap();
        assert_eq!(star.edge_count(), 5);
        assert_eq!(star.degree(0), 5);

        let s62 = Graph::complete(2)
            .unwrap()
            .join(&Graph::empty(4).unwrap())
            .unwrap();
        assert_eq!(s62.edge_count(), 9);

        let g = Graph::path(4).unwrap();
        assert_eq!(Graph::empty(0).unwrap().join(&g).unwrap(), g);
    }

    #[test]
    fn complement_cases() {
        let k5 = Graph::complete(5).unwrap();
        assert_eq!(k5.complement(), Graph::empty(5).unwrap());
        let p3 = Graph::path(3).unwrap();
        let c = p3.complement();
        assert_eq!(c.edge_count(), 1);
        assert!(c.has_edge(0, 2));
        assert_eq!(c.complement(), p3);
    }

    #[test]
    fn components_and_induced() {
        let g = Graph::complete(3)
            .unwrap()
            .union(&Graph::path(2).unwrap())
            .unwrap();
        let comps = g.component_masks();
        assert_eq!(comps.len(), 2);
        let (sub, verts) = g.induced_subgraph(comps[0]);
        assert_eq!(sub, Graph::complete(3).unwrap());
        assert_eq!(verts, vec![0, 1, 2]);
        assert!(!g.is_connected());
        assert!(Graph::empty(1).unwrap().is_connected());
    }

    #[test]
    fn permuted_preserves_structure() {
        let p4 = Graph::path(4).unwrap();
        let g = p4.permuted(&[3, 1, 0, 2]).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.degrees().iter().sum::<usize>(), 6);
        assert!(p4.permuted(&[0, 0, 1, 2]).is_err());
    }

    #[test]
    fn loops_rejected() {
        let mut g = Graph::empty(3).unwrap();
        assert!(g.add_edge(1, 1).is_err());
        assert!(g.add_edge(0, 3).is_err());
    }
}
