//! Numeric A_alpha assembly and spectral-radius computation.
//!
//! This is the independent oracle the closed forms are checked against:
//! a dense cyclic-Jacobi eigensolver, exact to machine precision on the
//! tiny matrices this crate handles. Power iteration is provided purely
//! as a cross-check.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Off-diagonal annihilation threshold, relative to the matrix scale.
const JACOBI_EPS: f64 = 1e-12;
const JACOBI_MAX_SWEEPS: usize = 100;
/// Acceptance bound for the eigenpair residual.
pub const RESIDUAL_TOL: f64 = 1e-8;

// ---------------------------------------------------------------------------
// SymMatrix
// ---------------------------------------------------------------------------

/// Dense symmetric matrix, full row-major storage.
#[derive(Clone, Debug, PartialEq)]
pub struct SymMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    pub fn zero(n: usize) -> Self {
        SymMatrix { n, data: vec![0.0; n * n] }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    /// Sets both mirror entries.
    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        self.data[i * self.n + j] = value;
        self.data[j * self.n + i] = value;
    }

    /// y = M x
    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        self.data
            .chunks_exact(self.n)
            .map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }
}

/// The matrix alpha*D + (1-alpha)*A of a graph.
pub fn assemble_alpha(g: &Graph, alpha: AlphaParam) -> SymMatrix {
    let a = alpha.value();
    let n = g.order();
    let mut m = SymMatrix::zero(n);
    for v in 0..n {
        m.set(v, v, a * g.degree(v) as f64);
        for u in g.neighbors(v) {
            if u > v {
                m.set(v, u, 1.0 - a);
            }
        }
    }
    m
}

/// Signless Laplacian A + D, assembled directly (not through `assemble_alpha`)
/// so tests can cross-check the two routes.
pub fn assemble_signless_laplacian(g: &Graph) -> SymMatrix {
    let n = g.order();
    let mut m = SymMatrix::zero(n);
    for v in 0..n {
        m.set(v, v, g.degree(v) as f64);
        for u in g.neighbors(v) {
            if u > v {
                m.set(v, u, 1.0);
            }
        }
    }
    m
}

// ---------------------------------------------------------------------------
// Jacobi eigensolver
// ---------------------------------------------------------------------------

pub(crate) struct EigenDecomp {
    /// Eigenvalues, unsorted.
    pub values: Vec<f64>,
    /// Rotation product V stored row-major; eigenvector k is the column
    /// `vectors[i * n + k]` for row i.
    pub vectors: Vec<f64>,
}

/// Cyclic Jacobi rotations until every off-diagonal entry falls below the
/// threshold. Foolproof on real symmetric input; errors only if the sweep
/// cap is exhausted.
pub(crate) fn jacobi_eigen(m: &SymMatrix) -> Result<EigenDecomp> {
    let n = m.dim();
    let mut a = m.data.clone();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    if n <= 1 {
        return Ok(EigenDecomp { values: a, vectors: v });
    }

    let scale = a.iter().fold(0.0f64, |acc, x| acc.max(x.abs())).max(1.0);
    let eps = JACOBI_EPS * scale;
    let idx = |i: usize, j: usize| i * n + j;

    for _sweep in 0..JACOBI_MAX_SWEEPS {
        let mut off = 0.0f64;
        for p in 0..n - 1 {
            for q in p + 1..n {
                off = off.max(a[idx(p, q)].abs());
            }
        }
        if off < eps {
            return Ok(EigenDecomp { values: (0..n).map(|i| a[idx(i, i)]).collect(), vectors: v });
        }

        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = a[idx(p, q)];
                if apq.abs() < eps * 1e-3 {
                    continue;
                }
                let theta = (a[idx(q, q)] - a[idx(p, p)]) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    -1.0 / (-theta + (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;

                let app = a[idx(p, p)];
                let aqq = a[idx(q, q)];
                a[idx(p, p)] = app - t * apq;
                a[idx(q, q)] = aqq + t * apq;
                a[idx(p, q)] = 0.0;
                a[idx(q, p)] = 0.0;
                for r in 0..n {
                    if r == p || r == q {
                        continue;
                    }
                    let arp = a[idx(r, p)];
                    let arq = a[idx(r, q)];
                    a[idx(r, p)] = c * arp - s * arq;
                    a[idx(p, r)] = a[idx(r, p)];
                    a[idx(r, q)] = s * arp + c * arq;
                    a[idx(q, r)] = a[idx(r, q)];
                }
                for r in 0..n {
                    let vrp = v[idx(r, p)];
                    let vrq = v[idx(r, q)];
                    v[idx(r, p)] = c * vrp - s * vrq;
                    v[idx(r, q)] = s * vrp + c * vrq;
                }
            }
        }
    }

    let mut off = 0.0f64;
    for p in 0..n - 1 {
        for q in p + 1..n {
            off = off.max(a[idx(p, q)].abs());
        }
    }
    Err(Error::numeric(format!(
        "Jacobi sweeps exhausted with off-diagonal residual {off:.3e}"
    )))
}

/// All eigenvalues of a symmetric matrix, ascending.
pub fn symmetric_eigenvalues(m: &SymMatrix) -> Result<Vec<f64>> {
    let mut vals = jacobi_eigen(m)?.values;
    vals.sort_by(|a, b| a.partial_cmp(b).unwrap());
    Ok(vals)
}

// ---------------------------------------------------------------------------
// AlphaParam and SpectralResult
// ---------------------------------------------------------------------------

/// Convex-combination weight, 0 <= alpha <= 1. Perron guarantees hold only
/// for alpha < 1 on connected graphs.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AlphaParam(f64);

impl AlphaParam {
    pub fn new(alpha: f64) -> Result<Self> {
        if !alpha.is_finite() || !(0.0..=1.0).contains(&alpha) {
            return Err(Error::parameter(format!("alpha must lie in [0, 1], got {alpha}")));
        }
        Ok(AlphaParam(alpha))
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

impl TryFrom<f64> for AlphaParam {
    type Error = Error;
    fn try_from(v: f64) -> Result<Self> {
        AlphaParam::new(v)
    }
}

#[derive(Clone, Debug)]
pub struct SpectralResult {
    /// The alpha-index: largest eigenvalue of A_alpha.
    pub rho: f64,
    /// Unit 2-norm eigenvector; zero outside the attaining component.
    pub vector: Vec<f64>,
    /// Infinity norm of A_alpha x - rho x.
    pub residual: f64,
    /// Index of the connected component attaining the maximum.
    pub component_index: usize,
}

impl SpectralResult {
    /// The eigenvector rescaled so its maximum entry is 1.
    pub fn vector_max_normalized(&self) -> Vec<f64> {
        let max = self.vector.iter().cloned().fold(f64::MIN, f64::max);
        if max <= 0.0 {
            return self.vector.clone();
        }
        self.vector.iter().map(|x| x / max).collect()
    }
}

// ---------------------------------------------------------------------------
// Spectral radius
// ---------------------------------------------------------------------------

/// Largest eigenvalue of A_alpha(G) with its eigenvector. For disconnected
/// graphs the maximum is taken over the diagonal blocks, one per component;
/// ties go to the lowest component index.
pub fn spectral_radius(g: &Graph, alpha: AlphaParam) -> Result<SpectralResult> {
    let n = g.order();
    if n == 0 {
        return Err(Error::parameter("spectral radius needs at least one vertex"));
    }

    let comps = g.component_masks();
    let mut best: Option<(f64, Vec<f64>, usize, u64)> = None;
    for (ci, &mask) in comps.iter().enumerate() {
        let (sub, verts) = g.induced_subgraph(mask);
        let m = assemble_alpha(&sub, alpha);
        let eig = jacobi_eigen(&m)?;
        let (k, &rho) = eig
            .values
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.partial_cmp(b.1).unwrap())
            .expect("component has at least one vertex");
        if best.as_ref().is_none_or(|(r, ..)| rho > *r) {
            let dim = sub.order();
            let mut vec = vec![0.0; n];
            for (local, &orig) in verts.iter().enumerate() {
                vec[orig] = eig.vectors[local * dim + k];
            }
            best = Some((rho, vec, ci, mask));
        }
    }
    let (rho, mut vector, component_index, _) = best.expect("at least one component");

    // fix sign so the dominant entry is positive
    let (mut max_abs, mut max_val) = (0.0f64, 0.0f64);
    for &x in &vector {
        if x.abs() > max_abs {
            max_abs = x.abs();
            max_val = x;
        }
    }
    if max_val < 0.0 {
        for x in vector.iter_mut() {
            *x = -*x;
        }
    }

    let full = assemble_alpha(g, alpha);
    let image = full.mul_vec(&vector);
    let residual = image
        .iter()
        .zip(&vector)
        .map(|(y, x)| (y - rho * x).abs())
        .fold(0.0f64, f64::max);
    if residual > RESIDUAL_TOL {
        return Err(Error::numeric(format!(
            "eigenpair residual {residual:.3e} exceeds {RESIDUAL_TOL:.0e}"
        )));
    }

    Ok(SpectralResult { rho, vector, residual, component_index })
}

/// Convenience wrapper returning only the alpha-index.
pub fn alpha_index(g: &Graph, alpha: f64) -> Result<f64> {
    Ok(spectral_radius(g, AlphaParam::new(alpha)?)?.rho)
}

/// Rayleigh quotient over the edge set for a unit vector:
/// sum over edges uv of alpha*(x_u^2 + x_v^2) + 2(1-alpha) x_u x_v.
/// Never exceeds the spectral radius; equal at the Perron vector.
pub fn rayleigh_value(g: &Graph, alpha: AlphaParam, x: &[f64]) -> Result<f64> {
    if x.len() != g.order() {
        return Err(Error::parameter("vector length must equal the graph order"));
    }
    let norm2: f64 = x.iter().map(|v| v * v).sum();
    if (norm2.sqrt() - 1.0).abs() > 1e-12 {
        return Err(Error::parameter(format!(
            "rayleigh_value needs a unit vector, |x| = {}",
            norm2.sqrt()
        )));
    }
    let a = alpha.value();
    let mut acc = 0.0;
    for (u, v) in g.edges() {
        acc += a * (x[u] * x[u] + x[v] * x[v]) + 2.0 * (1.0 - a) * x[u] * x[v];
    }
    Ok(acc)
}

/// Shifted power iteration on A_alpha + I; a deliberately independent route
/// used to cross-check the Jacobi path in tests.
pub fn spectral_radius_power(g: &Graph, alpha: AlphaParam, max_iters: usize) -> Result<f64> {
    let n = g.order();
    if n == 0 {
        return Err(Error::parameter("spectral radius needs at least one vertex"));
    }
    let m = assemble_alpha(g, alpha);
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut lambda = 0.0;
    for _ in 0..max_iters {
        let mut y = m.mul_vec(&x);
        for (yi, xi) in y.iter_mut().zip(&x) {
            *yi += *xi; // +I shift keeps bipartite adjacency from oscillating
        }
        let norm = y.iter().map(|v| v * v).sum::<f64>().sqrt();
        if norm == 0.0 {
            return Ok(0.0);
        }
        for yi in y.iter_mut() {
            *yi /= norm;
        }
        let new_lambda = norm - 1.0;
        let done = (new_lambda - lambda).abs() < 1e-13;
        lambda = new_lambda;
        x = y;
        if done {
            break;
        }
    }
    Ok(lambda)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(v: f64) -> AlphaParam {
        AlphaParam::new(v).unwrap()
    }

    #[test]
    fn assemble_examples() {
        let k2 = Graph::complete(2).unwrap();
        let m = assemble_alpha(&k2, a(0.3));
        assert!((m.get(0, 0) - 0.3).abs() < 1e-15);
        assert!((m.get(0, 1) - 0.7).abs() < 1e-15);

        let e3 = Graph::empty(3).unwrap();
        let z = assemble_alpha(&e3, a(0.6));
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(z.get(i, j), 0.0);
            }
        }

        let p3 = Graph::path(3).unwrap();
        let d = assemble_alpha(&p3, a(1.0));
        assert_eq!((d.get(0, 0), d.get(1, 1), d.get(2, 2)), (1.0, 2.0, 1.0));
        assert_eq!(d.get(0, 1), 0.0);
    }

    #[test]
    fn complete_graph_radius_is_order_minus_one() {
        for n in 1..=8 {
            for alpha in [0.0, 0.3, 0.5, 0.9, 1.0] {
                let g = Graph::complete(n).unwrap();
                let r = spectral_radius(&g, a(alpha)).unwrap();
                assert!(
                    (r.rho - (n as f64 - 1.0)).abs() < 1e-10,
                    "K_{n} alpha={alpha}: {}",
                    r.rho
                );
            }
        }
    }

    #[test]
    fn star_adjacency_radius() {
        let star = Graph::complete(1)
            .unwrap()
            .join(&Graph::empty(3).unwrap())
            .unwrap();
        let r = spectral_radius(&star, a(0.0)).unwrap();
        assert!((r.rho - 3f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn bowtie_half_alpha_radius() {
        // two triangles sharing a vertex
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap();
        let expected = (7.0 + 17f64.sqrt()) / 4.0;
        let r = spectral_radius(&g, a(0.5)).unwrap();
        assert!((r.rho - expected).abs() < 1e-12, "got {}", r.rho);
    }

    #[test]
    fn paw_half_alpha_radius() {
        // triangle with a pendant vertex; root of x^3 - 3.5x^2 + 3x - 0.5
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (0, 3)]).unwrap();
        let r = spectral_radius(&g, a(0.5)).unwrap();
        let p = |x: f64| x * x * x - 3.5 * x * x + 3.0 * x - 0.5;
        assert!(p(r.rho).abs() < 1e-9, "rho {} is not a root", r.rho);
        assert!((r.rho - 2.280776).abs() < 1e-6);
    }

    #[test]
    fn disconnected_takes_component_maximum() {
        let g = Graph::path(2)
            .unwrap()
            .union(&Graph::complete(4).unwrap())
            .unwrap();
        let r = spectral_radius(&g, a(0.4)).unwrap();
        assert!((r.rho - 3.0).abs() < 1e-12);
        assert_eq!(r.component_index, 1);
        // vector is supported on the K_4 block only
        assert!(r.vector[0].abs() < 1e-14 && r.vector[1].abs() < 1e-14);
        assert!(r.vector[2..].iter().all(|&x| x > 0.0));
    }

    #[test]
    fn perron_vector_positive_and_unit() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)])
            .unwrap();
        for alpha in [0.0, 0.3, 0.7] {
            let r = spectral_radius(&g, a(alpha)).unwrap();
            assert!(r.vector.iter().all(|&x| x > 0.0), "alpha={alpha}");
            let norm: f64 = r.vector.iter().map(|x| x * x).sum();
            assert!((norm - 1.0).abs() < 1e-12);
            assert!(r.residual <= RESIDUAL_TOL);
            let mx = r
                .vector_max_normalized()
                .iter()
                .cloned()
                .fold(f64::MIN, f64::max);
            assert!((mx - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn rayleigh_examples() {
        let k2 = Graph::complete(2).unwrap();
        let inv = 1.0 / 2f64.sqrt();
        let v = rayleigh_value(&k2, a(0.4), &[inv, inv]).unwrap();
        assert!((v - 1.0).abs() < 1e-12);

        let p3 = Graph::path(3).unwrap();
        let u = 1.0 / 3f64.sqrt();
        let v = rayleigh_value(&p3, a(0.0), &[u, u, u]).unwrap();
        assert!((v - 4.0 / 3.0).abs() < 1e-12);

        // at the Perron vector the quotient equals rho
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]).unwrap();
        let r = spectral_radius(&g, a(0.3)).unwrap();
        let v = rayleigh_value(&g, a(0.3), &r.vector).unwrap();
        assert!((v - r.rho).abs() < 1e-9);

        assert!(rayleigh_value(&k2, a(0.4), &[1.0, 1.0]).is_err());
    }

    #[test]
    fn power_iteration_agrees_with_jacobi() {
        let graphs = [
            Graph::path(6).unwrap(),
            Graph::complete(5).unwrap(),
            Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5)]).unwrap(),
            Graph::matching(6).unwrap(),
        ];
        for g in &graphs {
            for alpha in [0.0, 0.5, 0.8] {
                let jr = spectral_radius(g, a(alpha)).unwrap().rho;
                let pr = spectral_radius_power(g, a(alpha), 50_000).unwrap();
                assert!((jr - pr).abs() < 1e-9, "jacobi {jr} vs power {pr}");
            }
        }
    }

    #[test]
    fn alpha_validation() {
        assert!(AlphaParam::new(-0.1).is_err());
        assert!(AlphaParam::new(1.1).is_err());
        assert!(AlphaParam::new(f64::NAN).is_err());
        assert!(spectral_radius(&Graph::empty(0).unwrap(), a(0.5)).is_err());
    }
}
