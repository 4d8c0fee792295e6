//! The three extremal families and their equitable-partition quotients.
//!
//! S_{n,p} is the complete split graph K_p joined to an independent set,
//! S+_{n,p} adds one edge inside the independent part, and F_{n,p} joins
//! K_p to a near-perfect matching. Every vertex orbit has constant degree,
//! so the eigenvalue problem collapses to a 1x1..3x3 quotient whose largest
//! eigenvalue equals the spectral radius of the full graph — the exact
//! low-dimensional oracle the closed forms are verified against.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::roots::largest_real_root_monic;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    /// K_p joined to an empty graph on n-p vertices.
    S,
    /// S with one extra edge inside the independent part.
    SPlus,
    /// K_p joined to a maximal matching plus at most one isolated vertex.
    F,
}

impl Family {
    pub fn token(self) -> &'static str {
        match self {
            Family::S => "S",
            Family::SPlus => "S+",
            Family::F => "F",
        }
    }

    pub fn parse_token(s: &str) -> Result<Self> {
        match s {
            "S" | "s" => Ok(Family::S),
            "S+" | "s+" | "Splus" | "splus" => Ok(Family::SPlus),
            "F" | "f" => Ok(Family::F),
            other => Err(Error::parameter(format!(
                "unknown family token '{other}', expected S | S+ | F"
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyParams {
    pub family: Family,
    pub n: usize,
    pub p: usize,
}

impl FamilyParams {
    pub fn new(family: Family, n: usize, p: usize) -> Result<Self> {
        if p < 1 {
            return Err(Error::parameter("clique parameter p must be at least 1"));
        }
        match family {
            Family::S if n < p => {
                return Err(Error::parameter(format!("family S needs n >= p, got n={n}, p={p}")));
            }
            Family::SPlus if n < p + 3 => {
                return Err(Error::parameter(format!(
                    "family S+ needs n >= p+3, got n={n}, p={p}"
                )));
            }
            Family::F if n < p + 3 => {
                return Err(Error::parameter(format!(
                    "family F needs n >= p+3, got n={n}, p={p}"
                )));
            }
            _ => {}
        }
        Ok(FamilyParams { family, n, p })
    }

    /// Matching size t with n - p = 2t + r (family F only).
    pub fn matching_size(&self) -> Option<usize> {
        matches!(self.family, Family::F).then(|| (self.n - self.p) / 2)
    }

    /// Remainder r in {0, 1} (family F only).
    pub fn remainder(&self) -> Option<usize> {
        matches!(self.family, Family::F).then(|| (self.n - self.p) % 2)
    }
}

// ---------------------------------------------------------------------------
// Construction
// ---------------------------------------------------------------------------

/// Builds the family member. Vertices 0..p form the clique; the independent
/// part follows, with any internal edges placed on its trailing (S+) or
/// leading (F) vertices so that S_{n,p} is literally S+_{n,p} minus its
/// extra edge.
pub fn build_family(params: &FamilyParams) -> Graph {
    let (n, p) = (params.n, params.p);
    let clique = Graph::complete(p).expect("p <= n <= 64");
    let mut g = clique
        .join(&Graph::empty(n - p).expect("order checked"))
        .expect("order checked");
    match params.family {
        Family::S => {}
        Family::SPlus => {
            g.add_edge(n - 2, n - 1).expect("n >= p+3 >= 4");
        }
        Family::F => {
            let t = params.matching_size().unwrap();
            for i in 0..t {
                g.add_edge(p + 2 * i, p + 2 * i + 1).expect("within order");
            }
        }
    }
    g.debug_check();
    g
}

// ---------------------------------------------------------------------------
// Quotient matrices
// ---------------------------------------------------------------------------

/// Quotient of the degree-orbit partition. Entry (i, j) is the A_alpha row
/// sum from one vertex of orbit i into orbit j; the spectrum embeds in the
/// full graph's and contains its largest eigenvalue.
#[derive(Clone, Debug, Serialize)]
pub struct QuotientMatrix {
    pub dim: usize,
    /// Row-major dim x dim entries.
    pub entries: Vec<f64>,
    /// Orbit descriptions with their sizes.
    pub partition: Vec<(String, usize)>,
}

impl QuotientMatrix {
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.dim + j]
    }

    /// Largest eigenvalue, via the characteristic polynomial.
    pub fn largest_eigenvalue(&self) -> Result<f64> {
        let m = |i: usize, j: usize| self.get(i, j);
        match self.dim {
            1 => Ok(m(0, 0)),
            2 => {
                let trace = m(0, 0) + m(1, 1);
                let det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
                let disc = trace * trace - 4.0 * det;
                if disc < 0.0 {
                    return Err(Error::numeric("complex quotient eigenvalues"));
                }
                Ok((trace + disc.sqrt()) / 2.0)
            }
            3 => {
                let trace = m(0, 0) + m(1, 1) + m(2, 2);
                let minors = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0) + m(0, 0) * m(2, 2)
                    - m(0, 2) * m(2, 0)
                    + m(1, 1) * m(2, 2)
                    - m(1, 2) * m(2, 1);
                let det = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1))
                    - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0))
                    + m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
                // char poly x^3 - trace x^2 + minors x - det
                let hi = (0..3)
                    .map(|i| (0..3).map(|j| m(i, j)).sum::<f64>())
                    .fold(0.0f64, f64::max);
                largest_real_root_monic(&[-det, minors, -trace, 1.0], 0.0, hi + 1.0)
            }
            d => Err(Error::parameter(format!("unsupported quotient dimension {d}"))),
        }
    }
}

fn check_alpha(alpha: f64) -> Result<f64> {
    if !alpha.is_finite() || !(0.0..1.0).contains(&alpha) {
        return Err(Error::parameter(format!(
            "family quotients need 0 <= alpha < 1, got {alpha}"
        )));
    }
    Ok(alpha)
}

/// The eigenvalue system of the family member at `alpha`, one row per
/// nonempty vertex orbit. For S with n = p the split part is empty and the
/// quotient degenerates to the 1x1 complete-graph value.
pub fn quotient_matrix(params: &FamilyParams, alpha: f64) -> Result<QuotientMatrix> {
    let a = check_alpha(alpha)?;
    let b = 1.0 - a;
    let (nf, pf) = (params.n as f64, params.p as f64);
    // diagonal block shared by every family: clique vertices see the whole
    // graph, so their row is alpha(n-1) + (1-alpha)(p-1) on the diagonal.
    let clique_diag = a * (nf - 1.0) + b * (pf - 1.0);

    match params.family {
        Family::S => {
            if params.n == params.p {
                return Ok(QuotientMatrix {
                    dim: 1,
                    entries: vec![pf - 1.0],
                    partition: vec![("clique".into(), params.p)],
                });
            }
            Ok(QuotientMatrix {
                dim: 2,
                entries: vec![clique_diag, b * (nf - pf), b * pf, a * pf],
                partition: vec![
                    ("clique".into(), params.p),
                    ("independent".into(), params.n - params.p),
                ],
            })
        }
        Family::SPlus => {
            let m = nf - pf - 2.0;
            Ok(QuotientMatrix {
                dim: 3,
                entries: vec![
                    clique_diag,
                    2.0 * b,
                    m * b,
                    b * pf,
                    a * (pf + 1.0) + b,
                    0.0,
                    b * pf,
                    0.0,
                    a * pf,
                ],
                partition: vec![
                    ("clique".into(), params.p),
                    ("matched pair".into(), 2),
                    ("independent".into(), params.n - params.p - 2),
                ],
            })
        }
        Family::F => {
            let r = params.remainder().unwrap();
            if r == 0 {
                Ok(QuotientMatrix {
                    dim: 2,
                    entries: vec![clique_diag, b * (nf - pf), b * pf, a * (pf + 1.0) + b],
                    partition: vec![
                        ("clique".into(), params.p),
                        ("matching endpoints".into(), params.n - params.p),
                    ],
                })
            } else {
                Ok(QuotientMatrix {
                    dim: 3,
                    entries: vec![
                        clique_diag,
                        b * (nf - pf - 1.0),
                        b,
                        b * pf,
                        a * (pf + 1.0) + b,
                        0.0,
                        b * pf,
                        0.0,
                        a * pf,
                    ],
                    partition: vec![
                        ("clique".into(), params.p),
                        ("matching endpoints".into(), params.n - params.p - 1),
                        ("isolated in part".into(), 1),
                    ],
                })
            }
        }
    }
}

/// Quotient spectral radius: the family's exact alpha-index.
pub fn family_rho(params: &FamilyParams, alpha: f64) -> Result<f64> {
    quotient_matrix(params, alpha)?.largest_eigenvalue()
}
