use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootfinding::SortedRoots;
use crate::scalar::Real;

/// Why a partial-sum check failed.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum HlpFailure<T> {
    /// The totals differ by more than the tolerance.
    SumMismatch { difference: T },
    /// The `k + 1` largest entries of `X` outweigh those of `Y`.
    PartialSum { k: usize, excess: T },
}

/// Transcript of one partial-sum comparison `X ≺ Y`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HlpOutcome<T> {
    pub majorized: bool,
    pub failure: Option<HlpFailure<T>>,
    /// Smallest slack over all conditions before the tolerance is added;
    /// negative when some condition is violated outright.
    pub min_slack: T,
    pub scale: T,
}

/// Classical majorization test on sorted tuples.
///
/// `X ≺ Y` iff the totals agree and, for `0 <= k <= n-2`, the `k + 1` largest
/// entries of `X` sum to no more than those of `Y`. Every comparison carries
/// slack `tol * scale` with `scale = max(1, sum |y_i|)`.
pub fn hlp_majorize<T: Real>(x: &SortedRoots<T>, y: &SortedRoots<T>, tol: T) -> Result<HlpOutcome<T>> {
    if x.len() != y.len() {
        return Err(Error::Dimension {
            left: x.len(),
            right: y.len(),
        });
    }
    let n = x.len();
    let scale = y.abs_sum().max(T::one());
    let slack = tol * scale;
    let xs = x.top_sums();
    let ys = y.top_sums();

    let difference = xs[n - 1] - ys[n - 1];
    let mut min_slack = -difference.abs();
    let mut failure = (difference.abs() > slack).then_some(HlpFailure::SumMismatch { difference });
    for k in 0..n.saturating_sub(1) {
        let margin = ys[k] - xs[k];
        min_slack = min_slack.min(margin);
        if failure.is_none() && margin < -slack {
            failure = Some(HlpFailure::PartialSum { k, excess: -margin });
        }
    }
    Ok(HlpOutcome {
        majorized: failure.is_none(),
        failure,
        min_slack,
        scale,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(v: &[f64]) -> SortedRoots<f64> {
        SortedRoots::new(v.to_vec()).unwrap()
    }

    #[test]
    fn examples() {
        assert!(hlp_majorize(&r(&[1.0, 1.0]), &r(&[0.0, 2.0]), 1e-9).unwrap().majorized);
        assert!(hlp_majorize(&r(&[1.0, 2.0, 3.0]), &r(&[0.0, 2.0, 4.0]), 1e-9).unwrap().majorized);
        let out = hlp_majorize(&r(&[0.0, 2.0]), &r(&[1.0, 1.0]), 1e-9).unwrap();
        assert!(!out.majorized);
        assert_eq!(out.failure, Some(HlpFailure::PartialSum { k: 0, excess: 1.0 }));
    }

    #[test]
    fn sum_mismatch_is_reported_first() {
        let out = hlp_majorize(&r(&[0.0]), &r(&[1.0]), 1e-9).unwrap();
        assert_eq!(out.failure, Some(HlpFailure::SumMismatch { difference: -1.0 }));
    }

    #[test]
    fn dimension_mismatch() {
        assert!(matches!(
            hlp_majorize(&r(&[0.0]), &r(&[1.0, 2.0]), 1e-9),
            Err(Error::Dimension { left: 1, right: 2 })
        ));
    }

    #[test]
    fn tolerance_absorbs_rounding() {
        let out = hlp_majorize(&r(&[0.1 + 0.2, 1.0]), &r(&[0.3, 1.0]), 1e-9).unwrap();
        assert!(out.majorized);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn values() -> impl Strategy<Value = Vec<f64>> {
            prop::collection::vec(-5.0f64..5.0, 1..8)
        }

        /// `y` and a convex mixture of permuted copies of `y`.
        fn mixed() -> impl Strategy<Value = (Vec<f64>, Vec<f64>)> {
            values().prop_flat_map(|y| {
                let n = y.len();
                let perms = prop::collection::vec(Just((0..n).collect::<Vec<usize>>()).prop_shuffle(), 1..4);
                let weights = prop::collection::vec(0.05f64..1.0, 4);
                (Just(y), perms, weights)
            })
            .prop_map(|(y, perms, weights)| {
                let total: f64 = weights[..perms.len()].iter().sum();
                let mut x = vec![0.0; y.len()];
                for (perm, w) in perms.iter().zip(&weights) {
                    for (i, &j) in perm.iter().enumerate() {
                        x[i] += w / total * y[j];
                    }
                }
                (x, y)
            })
        }

        proptest! {
            #[test]
            fn reflexive(v in values()) {
                prop_assert!(hlp_majorize(&r(&v), &r(&v), 1e-9).unwrap().majorized);
            }

            #[test]
            fn doubly_stochastic_images_are_below((x, y) in mixed()) {
                prop_assert!(hlp_majorize(&r(&x), &r(&y), 1e-9).unwrap().majorized);
            }

            #[test]
            fn shifting_by_a_constant_keeps_the_verdict((x, y) in mixed(), c in -3.0f64..3.0) {
                let shift = |v: &[f64]| r(&v.iter().map(|a| a + c).collect::<Vec<_>>());
                prop_assert!(hlp_majorize(&shift(&x), &shift(&y), 1e-9).unwrap().majorized);
            }
        }
    }
}
