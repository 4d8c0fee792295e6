//! Canonical forms by permutation minimization.
//!
//! Two graphs get identical forms exactly when they are isomorphic. The form
//! is the lexicographically least column-major upper-triangle bit string over
//! all vertex relabelings, restricted to relabelings that list degrees in
//! ascending order (the restriction set is isomorphism-invariant, so the
//! minimum stays a class invariant while the search space collapses), with
//! branch-and-bound pruning on the shared prefix.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::encode_graph6;

/// Default order cap; factorial search with pruning stays comfortable here.
pub const DEFAULT_CANONICAL_CAP: usize = 9;

/// Largest order the u128 bit-string accumulator supports.
pub const MAX_CANONICAL_CAP: usize = 16;

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    target_deg: Vec<usize>,
    placed: Vec<usize>,
    /// adjacency of placed[k] restricted to earlier placements, one column per level
    columns: Vec<u64>,
    best: Option<(u128, Vec<usize>)>,
}

impl<'a> Search<'a> {
    /// Bit string of the current full placement, most significant bit first.
    fn placement_key(columns: &[u64], n: usize) -> u128 {
        let mut key = 0u128;
        let mut used_bits = 0u32;
        for (k, &col) in columns.iter().enumerate().take(n) {
            key = (key << k) | col as u128;
            used_bits += k as u32;
        }
        if used_bits == 0 {
            return 0;
        }
        key << (128 - used_bits)
    }

    fn run(&mut self) {
        self.descend(0, 0u64, 0u128, 0u32, false);
    }

    /// `prefix` holds the bits of columns 0..level left-aligned in value
    /// order; `strictly_less` records that the prefix already beat the best.
    fn descend(&mut self, level: usize, used: u64, prefix: u128, bits: u32, strictly_less: bool) {
        if level == self.n {
            let key = prefix << (128 - bits.min(128));
            match &self.best {
                Some((best_key, _)) if key >= *best_key => {}
                _ => self.best = Some((key, self.placed.clone())),
            }
            return;
        }
        for v in 0..self.n {
            if (used >> v) & 1 == 1 || self.g.degree(v) != self.target_deg[level] {
                continue;
            }
            // column bits: adjacency of v to placed[0..level], earlier first
            let mut col = 0u64;
            for (k, &u) in self.placed[..level].iter().enumerate() {
                if self.g.has_edge(u, v) {
                    col |= 1 << (level - 1 - k);
                }
            }
            let mut less = strictly_less;
            if !less && level > 0 {
                if let Some((best_key, _)) = &self.best {
                    let best_col =
                        ((best_key >> (128 - (bits + level as u32))) & ((1u128 << level) - 1)) as u64;
                    if col > best_col {
                        continue;
                    }
                    if col < best_col {
                        less = true;
                    }
                }
            }
            self.placed[level] = v;
            self.columns[level] = col;
            self.descend(
                level + 1,
                used | (1 << v),
                (prefix << level) | col as u128,
                bits + level as u32,
                less,
            );
            // with no best yet the first completed leaf sets it; afterwards
            // pruning above keeps the loop tight
        }
    }
}

fn canonical_permutation(g: &Graph, cap: usize) -> Result<Vec<usize>> {
    let n = g.order();
    if cap > MAX_CANONICAL_CAP {
        return Err(Error::parameter(format!(
            "canonical cap {cap} exceeds supported maximum {MAX_CANONICAL_CAP}"
        )));
    }
    if n > cap {
        return Err(Error::capacity(format!(
            "canonical form of an order-{n} graph exceeds the cap of {cap}"
        )));
    }
    if n <= 1 {
        return Ok((0..n).collect());
    }
    let mut target_deg = g.degrees();
    target_deg.sort_unstable();
    let mut search = Search {
        g,
        n,
        target_deg,
        placed: vec![0; n],
        columns: vec![0; n],
        best: None,
    };
    search.run();
    let (_, order) = search.best.expect("at least one degree-sorted placement exists");
    // order[k] = original vertex at canonical position k; invert for permuted()
    let mut perm = vec![0usize; n];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    Ok(perm)
}

/// The canonical relabeling of `g` under the default cap.
pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    canonical_graph_with_cap(g, DEFAULT_CANONICAL_CAP)
}

pub fn canonical_graph_with_cap(g: &Graph, cap: usize) -> Result<Graph> {
    let perm = canonical_permutation(g, cap)?;
    g.permuted(&perm)
}

/// Canonical form bytes: the graph6 record of the canonical relabeling.
/// Equal byte strings exactly characterize isomorphic graphs.
pub fn canonical_form(g: &Graph) -> Result<Vec<u8>> {
    canonical_form_with_cap(g, DEFAULT_CANONICAL_CAP)
}

pub fn canonical_form_with_cap(g: &Graph, cap: usize) -> Result<Vec<u8>> {
    Ok(encode_graph6(&canonical_graph_with_cap(g, cap)?).into_bytes())
}

/// Fast dedup key for same-order graphs: the minimized bit string itself.
pub(crate) fn canonical_key(g: &Graph, cap: usize) -> Result<u128> {
    let canon = canonical_graph_with_cap(g, cap)?;
    let n = canon.order();
    let mut cols = vec![0u64; n];
    for (level, slot) in cols.iter_mut().enumerate().skip(1) {
        let mut col = 0u64;
        for k in 0..level {
            if canon.has_edge(k, level) {
                col |= 1 << (level - 1 - k);
            }
        }
        *slot = col;
    }
    Ok(Search::placement_key(&cols, n))
}
