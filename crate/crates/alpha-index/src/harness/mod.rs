//! Verification grids, extremal scans, and report serialization.

pub mod report;
pub mod scan;
pub mod verify;

use crate::closed_forms::{
    make_poly, published_form_report, rho_s_closed, rho_s_lower_bounds, PolyLabel, PublishedForm,
    Verdict,
};
use crate::error::Result;
use crate::families::{build_family, family_rho, quotient_matrix, Family, FamilyParams, QuotientMatrix};
use crate::graph6::encode_graph6;
use crate::spectral::alpha_index;

/// Runs `f` on a rayon pool of the requested width; `None` keeps the global
/// default.
pub fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match jobs {
        Some(j) if j > 0 => rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .expect("thread pool")
            .install(f),
        _ => f(),
    }
}

/// Everything the `family` subcommand prints for one family member.
#[derive(Clone, Debug)]
pub struct FamilySummary {
    pub params: FamilyParams,
    pub alpha: f64,
    pub graph6: String,
    pub degree_sequence: Vec<usize>,
    pub edge_count: usize,
    pub quotient: QuotientMatrix,
    /// Quotient-matrix eigenvalue: the exact family value.
    pub oracle_rho: f64,
    /// Dense eigensolve of the built graph.
    pub numeric_rho: f64,
    /// The validated closed form at these parameters.
    pub closed_form_rho: f64,
    /// The published expression evaluated verbatim, with its verdict.
    pub published_rho: f64,
    pub published_verdict: Verdict,
    /// Lower bounds for the S family, when applicable.
    pub lower_bounds: Option<(f64, Option<f64>)>,
    /// Signless Laplacian radius q = 2 rho_{1/2}.
    pub signless_q: f64,
}

/// Builds the family member and evaluates every value the CLI reports.
pub fn family_summary(family: Family, n: usize, p: usize, alpha: f64) -> Result<FamilySummary> {
    let params = FamilyParams::new(family, n, p)?;
    let g = build_family(&params);
    let quotient = quotient_matrix(&params, alpha)?;
    let oracle_rho = quotient.largest_eigenvalue()?;
    let numeric_rho = alpha_index(&g, alpha)?;
    let closed_form_rho = match family {
        Family::S => rho_s_closed(n, p, alpha)?,
        Family::SPlus => make_poly(PolyLabel::SPlusCubic, n, p, alpha)?.largest_real_root()?,
        Family::F => {
            let label = if (n - p).is_multiple_of(2) { PolyLabel::FEvenQuadratic } else { PolyLabel::FOddCubic };
            make_poly(label, n, p, alpha)?.largest_real_root()?
        }
    };
    let published_form = match family {
        Family::S => PublishedForm::AlphaEven,
        Family::SPlus => PublishedForm::AlphaOddLarge,
        Family::F => PublishedForm::AlphaAllThrees,
    };
    let published = published_form_report(published_form, n, p, alpha)?;
    let lower_bounds = match family {
        Family::S => Some(rho_s_lower_bounds(n, p, alpha)?),
        _ => None,
    };
    let signless_q = 2.0 * family_rho(&params, 0.5)?;
    let mut degree_sequence = g.degrees();
    degree_sequence.sort_unstable_by(|a, b| b.cmp(a));
    Ok(FamilySummary {
        params,
        alpha,
        graph6: encode_graph6(&g),
        degree_sequence,
        edge_count: g.edge_count(),
        quotient,
        oracle_rho,
        numeric_rho,
        closed_form_rho,
        published_rho: published.printed_value,
        published_verdict: published.verdict,
        lower_bounds,
        signless_q,
    })
}

impl std::fmt::Display for FamilySummary {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(
            f,
            "{}_(n={}, p={}) at alpha = {}",
            self.params.family.token(),
            self.params.n,
            self.params.p,
            self.alpha
        )?;
        writeln!(f, "  graph6:          {}", self.graph6)?;
        writeln!(f, "  edges:           {}", self.edge_count)?;
        writeln!(f, "  degrees:         {:?}", self.degree_sequence)?;
        writeln!(f, "  quotient ({}x{}):", self.quotient.dim, self.quotient.dim)?;
        for i in 0..self.quotient.dim {
            let row: Vec<String> = (0..self.quotient.dim)
                .map(|j| format!("{:12.9}", self.quotient.get(i, j)))
                .collect();
            let (ref orbit, size) = self.quotient.partition[i];
            writeln!(f, "    [{}]  ({orbit}, size {size})", row.join(" "))?;
        }
        writeln!(f, "  oracle rho:      {:.9}", self.oracle_rho)?;
        writeln!(f, "  numeric rho:     {:.9}", self.numeric_rho)?;
        writeln!(f, "  closed form rho: {:.9}", self.closed_form_rho)?;
        writeln!(
            f,
            "  published form:  {:.9}  [{:?}]",
            self.published_rho, self.published_verdict
        )?;
        if let Some((b1, b2)) = self.lower_bounds {
            writeln!(f, "  lower bound 1:   {b1:.9}")?;
            match b2 {
                Some(b2) => writeln!(f, "  lower bound 2:   {b2:.9}")?,
                None => writeln!(f, "  lower bound 2:   (threshold not met)")?,
            }
        }
        write!(f, "  q = 2 rho(1/2):  {:.9}", self.signless_q)
    }
}
