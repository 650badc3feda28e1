use serde::Serialize;

use crate::error::{Error, Result};
use crate::order::{compare_multisets, hlp_majorize, CompareConfig, Verdict};
use crate::polynomials::{Monic, Poly};
use crate::rootfinding::{real_roots_with, RootConfig, SortedRoots};

/// How `R_t` failed at a ladder value.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LocalViolationKind {
    NotHyperbolic { re: f64, im: f64 },
    NotAbove { verdict: Box<Verdict<f64>> },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LocalViolation {
    pub lambda: f64,
    #[serde(flatten)]
    pub kind: LocalViolationKind,
}

/// `R_t(x) = P(x + t) - t Q(x + t)`.
pub fn local_pencil(p: &Monic<f64>, q: &Poly<f64>, t: f64) -> Result<Monic<f64>> {
    p.as_poly().taylor_shift(t).sub(&q.taylor_shift(t).scale(t)).to_monic()
}

fn check_q(p: &Monic<f64>, q: &Poly<f64>) -> Result<()> {
    if q.degree().is_some_and(|d| d >= p.degree()) {
        return Err(Error::Degree(format!(
            "Q must have degree below {}, got {:?}",
            p.degree(),
            q.degree()
        )));
    }
    Ok(())
}

/// Smallest `|t|` on the ladder for which `R_t` is not hyperbolic or
/// `R_0 ≼ R_t` fails. Ties in magnitude are resolved negative first.
pub fn falsify_local(p: &Monic<f64>, q: &Poly<f64>, ladder: &[f64]) -> Result<Option<LocalViolation>> {
    falsify_local_with(p, q, ladder, &CompareConfig::default())
}

pub fn falsify_local_with(
    p: &Monic<f64>,
    q: &Poly<f64>,
    ladder: &[f64],
    config: &CompareConfig<f64>,
) -> Result<Option<LocalViolation>> {
    check_q(p, q)?;
    let base = real_roots_with(p, &config.roots)?;
    if !base.is_strictly_increasing() {
        return Err(Error::MultipleRoots);
    }
    let r0 = local_pencil(p, q, 0.0)?;
    let r0 = real_roots_with(&r0, &config.roots)?;
    let mut order: Vec<f64> = ladder.to_vec();
    order.sort_by(|a, b| a.abs().total_cmp(&b.abs()).then(a.total_cmp(b)));
    for t in order {
        let r = local_pencil(p, q, t)?;
        let kind = match real_roots_with(&r, &config.roots) {
            Err(Error::NotHyperbolic { re, im }) => Some(LocalViolationKind::NotHyperbolic { re, im }),
            Err(e) => return Err(e),
            Ok(rt) => {
                let verdict = compare_multisets(&r0, &rt, config)?;
                (!verdict.relation.is_below()).then(|| LocalViolationKind::NotAbove {
                    verdict: Box::new(verdict),
                })
            }
        };
        if let Some(kind) = kind {
            return Ok(Some(LocalViolation { lambda: t, kind }));
        }
    }
    Ok(None)
}

/// Re-derives a reported violation from scratch with ten times looser root
/// and order tolerances, using only the partial-sum test.
pub fn recheck_local(p: &Monic<f64>, q: &Poly<f64>, t: f64, tol: f64) -> Result<bool> {
    let loose = RootConfig::with_eps_hyp(RootConfig::<f64>::default().eps_hyp * 10.0);
    let (r0, rt) = (local_pencil(p, q, 0.0)?, local_pencil(p, q, t)?);
    let r0: SortedRoots<f64> = real_roots_with(&r0, &loose)?;
    match real_roots_with(&rt, &loose) {
        Err(Error::NotHyperbolic { .. }) => Ok(true),
        Err(e) => Err(e),
        Ok(rt) => Ok(!hlp_majorize(&r0, &rt, 10.0 * tol)?.majorized),
    }
}
