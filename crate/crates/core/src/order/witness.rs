use crate::error::{Error, Result};
use crate::rootfinding::SortedRoots;
use crate::scalar::Real;

use super::{hlp_majorize, DoublyStochastic};

/// Doubly stochastic `A` with `A * sorted(Y) = sorted(X)`, built as a product
/// of at most `n - 1` T-transforms.
///
/// Each step works in descending order: take the last index `j` where the
/// current vector still exceeds `X`, the first later index `k` where it falls
/// short, and average the pair just enough to pin one of them to its target.
pub fn classical_witness<T: Real>(
    x: &SortedRoots<T>,
    y: &SortedRoots<T>,
) -> Result<DoublyStochastic<T>> {
    let tol = T::tol(1e-9, 64.0);
    if !hlp_majorize(x, y, tol)?.majorized {
        return Err(Error::NotMajorized);
    }
    let n = x.len();
    let target: Vec<T> = x.values().iter().rev().copied().collect();
    let mut v: Vec<T> = y.values().iter().rev().copied().collect();
    let scale = y.abs_sum().max(T::one());
    let same = T::lit(64.0) * T::epsilon() * scale;

    // rows of the accumulated matrix, descending coordinates
    let mut a = DoublyStochastic::identity(n).into_rows();
    for _ in 1..n {
        let Some(j) = (0..n).rev().find(|&i| v[i] > target[i] + same) else {
            break;
        };
        let Some(k) = (j + 1..n).find(|&i| v[i] < target[i] - same) else {
            break;
        };
        let high = v[j] - target[j];
        let low = target[k] - v[k];
        let delta = high.min(low);
        let keep = T::one() - delta / (v[j] - v[k]);
        let mix = T::one() - keep;

        let (vj, vk) = (v[j], v[k]);
        v[j] = keep * vj + mix * vk;
        v[k] = keep * vk + mix * vj;
        if high <= low {
            v[j] = target[j];
        } else {
            v[k] = target[k];
        }
        for c in 0..n {
            let (aj, ak) = (a[j][c], a[k][c]);
            a[j][c] = keep * aj + mix * ak;
            a[k][c] = keep * ak + mix * aj;
        }
    }

    let ascending: Vec<T> = (0..n)
        .flat_map(|i| {
            let row = &a[n - 1 - i];
            (0..n).map(move |j| row[n - 1 - j])
        })
        .collect();
    let witness = DoublyStochastic::from_row_major_unchecked(n, ascending);
    let image = witness.apply(y.values());
    let err = image
        .iter()
        .zip(x.values())
        .map(|(a, b)| (*a - *b).abs())
        .fold(T::zero(), T::max);
    if err > T::tol(1e-8, 256.0) * scale {
        return Err(Error::NotMajorized);
    }
    Ok(witness)
}
