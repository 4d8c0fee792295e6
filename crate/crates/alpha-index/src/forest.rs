//! Linear forests: specification, case classification, and exact containment.
//!
//! A linear forest is a disjoint union of paths P_{k_1}, ..., P_{k_l}. The
//! containment test decides whether a host graph packs all of them on
//! disjoint vertex sets (as subgraphs, not induced), by backtracking with
//! memoization on (used-vertex mask, path index) and two symmetry breaks:
//! paths are placed longest first with endpoints ordered, and equal-length
//! paths are forced into increasing minimum-vertex order.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::{build_family, Family, FamilyParams};
use crate::graph::Graph;

/// Multiset of path orders k_1 >= ... >= k_l >= 2 with the derived clique
/// parameter p = sum(floor(k_i/2)) - 1 >= 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LinearForestSpec {
    ks: Vec<usize>,
}

/// Which of the three extremal regimes a forest falls into.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ForestCase {
    /// At least one even path order: S_{n,p} is extremal.
    EvenPresent,
    /// All orders odd, at least one above 3: S+_{n,p} is extremal.
    AllOddWithLarge,
    /// Every order equal to 3: F_{n,p} is extremal.
    AllThrees,
}

impl LinearForestSpec {
    pub fn new(orders: &[usize]) -> Result<Self> {
        if orders.is_empty() {
            return Err(Error::parameter("a linear forest needs at least one path"));
        }
        if let Some(&k) = orders.iter().find(|&&k| k < 2) {
            return Err(Error::parameter(format!("path order {k} below 2 rejected")));
        }
        let mut ks = orders.to_vec();
        ks.sort_unstable_by(|a, b| b.cmp(a));
        let spec = LinearForestSpec { ks };
        if spec.p() < 1 {
            return Err(Error::parameter(format!(
                "forest {spec} has p = 0 and falls outside the extremal regime"
            )));
        }
        Ok(spec)
    }

    /// Parses the CLI syntax "k1,k2,...".
    pub fn parse(text: &str) -> Result<Self> {
        let orders: Vec<usize> = text
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::parameter(format!("bad path order '{tok}'")))
            })
            .collect::<Result<_>>()?;
        LinearForestSpec::new(&orders)
    }

    /// Path orders, descending.
    pub fn orders(&self) -> &[usize] {
        &self.ks
    }

    pub fn path_count(&self) -> usize {
        self.ks.len()
    }

    /// Clique parameter p = sum(floor(k_i / 2)) - 1.
    pub fn p(&self) -> usize {
        self.ks.iter().map(|k| k / 2).sum::<usize>() - 1
    }

    /// Total vertex count of the forest.
    pub fn total_order(&self) -> usize {
        self.ks.iter().sum()
    }

    pub fn case(&self) -> ForestCase {
        if self.ks.iter().any(|k| k % 2 == 0) {
            ForestCase::EvenPresent
        } else if self.ks.iter().all(|&k| k == 3) {
            ForestCase::AllThrees
        } else {
            ForestCase::AllOddWithLarge
        }
    }

    /// The forest itself as a graph (handy for sanity checks).
    pub fn build_graph(&self) -> Result<Graph> {
        let mut g = Graph::empty(0)?;
        for &k in &self.ks {
            g = g.union(&Graph::path(k)?)?;
        }
        Ok(g)
    }
}

impl fmt::Display for LinearForestSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.ks.iter().map(|k| k.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

// ---------------------------------------------------------------------------
// Containment
// ---------------------------------------------------------------------------

struct Packing<'a> {
    g: &'a Graph,
    ks: &'a [usize],
    suffix_need: Vec<usize>,
    memo: HashMap<(u64, usize, u8), bool>,
}

const NO_MIN: u8 = u8::MAX;

impl<'a> Packing<'a> {
    /// Can paths `idx..` be packed avoiding `used`? `prev_min` is the least
    /// vertex of the previous path when it had the same length (the
    /// symmetry-break ordering applies within equal-length runs).
    fn solve(&mut self, idx: usize, used: u64, prev_min: u8) -> bool {
        if idx == self.ks.len() {
            return true;
        }
        let free = self.g.order() - used.count_ones() as usize;
        if free < self.suffix_need[idx] {
            return false;
        }
        let key = (used, idx, prev_min);
        if let Some(&cached) = self.memo.get(&key) {
            return cached;
        }
        let k = self.ks[idx];
        let mut found = false;
        let mut path = Vec::with_capacity(k);
        for start in 0..self.g.order() {
            if (used >> start) & 1 == 1 {
                continue;
            }
            path.push(start);
            if self.extend(idx, k, used | (1 << start), &mut path, prev_min) {
                found = true;
            }
            path.pop();
            if found {
                break;
            }
        }
        self.memo.insert(key, found);
        found
    }

    fn extend(&mut self, idx: usize, k: usize, used: u64, path: &mut Vec<usize>, prev_min: u8) -> bool {
        if path.len() == k {
            // endpoint order kills the reversal symmetry
            if k >= 2 && path[0] > *path.last().unwrap() {
                return false;
            }
            let my_min = *path.iter().min().unwrap() as u8;
            if prev_min != NO_MIN && my_min <= prev_min {
                return false;
            }
            let next_prev = if idx + 1 < self.ks.len() && self.ks[idx + 1] == k {
                my_min
            } else {
                NO_MIN
            };
            return self.solve(idx + 1, used, next_prev);
        }
        let tail = *path.last().unwrap();
        let mut row = self.g.neighbor_mask(tail) & !used;
        while row != 0 {
            let v = row.trailing_zeros() as usize;
            row &= row - 1;
            path.push(v);
            if self.extend(idx, k, used | (1 << v), path, prev_min) {
                path.pop();
                return true;
            }
            path.pop();
        }
        false
    }
}

/// Lower-level packing test: can `g` host vertex-disjoint paths with the
/// given orders (each >= 1)? Unlike [`contains`] this accepts multisets
/// outside the extremal regime, e.g. a single P_2.
pub fn packs_paths(g: &Graph, orders: &[usize]) -> bool {
    let mut ks: Vec<usize> = orders.iter().copied().filter(|&k| k > 0).collect();
    ks.sort_unstable_by(|a, b| b.cmp(a));
    let total: usize = ks.iter().sum();
    if total > g.order() {
        return false;
    }
    // each P_k spends k-1 edges
    if g.edge_count() + ks.len() < total {
        return false;
    }
    let mut suffix_need = vec![0usize; ks.len() + 1];
    for i in (0..ks.len()).rev() {
        suffix_need[i] = suffix_need[i + 1] + ks[i];
    }
    let mut packing = Packing { g, ks: &ks, suffix_need, memo: HashMap::new() };
    packing.solve(0, 0, NO_MIN)
}

/// True exactly when `g` packs vertex-disjoint paths with the spec's orders.
pub fn contains(g: &Graph, spec: &LinearForestSpec) -> bool {
    packs_paths(g, spec.orders())
}

/// The family the theory predicts extremal for this forest at order `n`,
/// together with its parameters. Needs n >= p + 3 so every family exists.
pub fn predicted_extremal(spec: &LinearForestSpec, n: usize) -> Result<(FamilyParams, Graph)> {
    let p = spec.p();
    let family = match spec.case() {
        ForestCase::EvenPresent => Family::S,
        ForestCase::AllOddWithLarge => Family::SPlus,
        ForestCase::AllThrees => Family::F,
    };
    let params = FamilyParams::new(family, n, p)?;
    let graph = build_family(&params);
    Ok((params, graph))
}
