use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::Real;

use super::DoublyStochastic;

/// One term `weight * P_sigma` of a Birkhoff decomposition;
/// `permutation[i]` is the column of the unit entry in row `i`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BirkhoffTerm<T> {
    pub weight: T,
    pub permutation: Vec<usize>,
}

/// Writes `A` as a convex combination of permutation matrices.
///
/// Each round finds a perfect matching on the entries above `tol` and peels
/// off the smallest matched entry. Every round empties a face of the
/// Birkhoff polytope, so at most `(n-1)^2 + 1` terms are produced.
pub fn birkhoff_decompose<T: Real>(a: &DoublyStochastic<T>, tol: T) -> Result<Vec<BirkhoffTerm<T>>> {
    let n = a.n();
    let mut residual = a.rows();
    let mut terms = Vec::new();
    let cap = (n - 1) * (n - 1) + 1;
    loop {
        let mass = residual.iter().flatten().fold(T::zero(), |s, &v| s + v) / T::from_usize_lossy(n);
        if mass <= tol {
            break;
        }
        if terms.len() >= cap {
            return Err(Error::NotDoublyStochastic(format!(
                "decomposition exceeded {cap} terms"
            )));
        }
        let support: Vec<Vec<bool>> = residual
            .iter()
            .map(|row| row.iter().map(|&v| v > tol).collect())
            .collect();
        let Some(perm) = perfect_matching(&support) else {
            return Err(Error::NotDoublyStochastic(format!(
                "no perfect matching on the support with residual mass {}",
                mass.as_f64()
            )));
        };
        let weight = perm
            .iter()
            .enumerate()
            .map(|(i, &j)| residual[i][j])
            .fold(T::infinity(), T::min);
        for (i, &j) in perm.iter().enumerate() {
            residual[i][j] -= weight;
            if residual[i][j] <= tol {
                residual[i][j] = T::zero();
            }
        }
        terms.push(BirkhoffTerm {
            weight,
            permutation: perm,
        });
    }
    Ok(terms)
}

/// Sum of the weighted permutation matrices.
pub fn reconstruct<T: Real>(n: usize, terms: &[BirkhoffTerm<T>]) -> Vec<Vec<T>> {
    let mut m = vec![vec![T::zero(); n]; n];
    for term in terms {
        for (i, &j) in term.permutation.iter().enumerate() {
            m[i][j] += term.weight;
        }
    }
    m
}

/// Kuhn's augmenting-path matching; returns `row -> column` when perfect.
fn perfect_matching(support: &[Vec<bool>]) -> Option<Vec<usize>> {
    let n = support.len();
    let mut col_owner: Vec<Option<usize>> = vec![None; n];
    for row in 0..n {
        let mut seen = vec![false; n];
        if !augment(row, support, &mut seen, &mut col_owner) {
            return None;
        }
    }
    let mut perm = vec![0; n];
    for (col, owner) in col_owner.iter().enumerate() {
        perm[owner.expect("perfect matching covers every column")] = col;
    }
    Some(perm)
}

fn augment(row: usize, support: &[Vec<bool>], seen: &mut [bool], col_owner: &mut [Option<usize>]) -> bool {
    for col in 0..support.len() {
        if !support[row][col] || seen[col] {
            continue;
        }
        seen[col] = true;
        let free = match col_owner[col] {
            None => true,
            Some(other) => augment(other, support, seen, col_owner),
        };
        if free {
            col_owner[col] = Some(row);
            return true;
        }
    }
    false
}
