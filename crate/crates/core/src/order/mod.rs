//! The spectral order: partial-sum and doubly stochastic criteria, witnesses,
//! Birkhoff decompositions, and polynomial comparisons.

mod birkhoff;
mod compare;
mod hlp;
mod simplex;
mod witness;

pub use birkhoff::{birkhoff_decompose, reconstruct, BirkhoffTerm};
pub use compare::{
    compare_complex, compare_complex_with, compare_hyperbolic, compare_hyperbolic_with, compare_multisets,
    compare_points, compare_real_parts, compare_real_parts_with, multivariate_majorize, CompareConfig, Evidence,
    LpOutcome, Relation, Verdict,
};
pub use hlp::{hlp_majorize, HlpFailure, HlpOutcome};
pub use simplex::{phase_one, PhaseOne};
pub use witness::classical_witness;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Square matrix with non-negative entries whose rows and columns sum to one.
#[derive(Debug, Clone, PartialEq)]
pub struct DoublyStochastic<T> {
    n: usize,
    entries: Vec<T>,
}

impl<T: Real> DoublyStochastic<T> {
    /// Validates `entries >= -1e-12` and line sums within `1e-9` of one.
    pub fn new(n: usize, entries: Vec<T>) -> Result<Self> {
        if n == 0 || entries.len() != n * n {
            return Err(Error::Dimension {
                left: n * n,
                right: entries.len(),
            });
        }
        let m = Self { n, entries };
        if let Some((i, j)) = m.negative_entry(T::lit(1e-12)) {
            return Err(Error::NotDoublyStochastic(format!(
                "entry ({i}, {j}) is {}",
                m.get(i, j)
            )));
        }
        let defect = m.max_defect();
        if defect > T::lit(1e-9) {
            return Err(Error::NotDoublyStochastic(format!(
                "a line sum is off by {defect}"
            )));
        }
        Ok(m)
    }

    pub fn identity(n: usize) -> Self {
        let mut entries = vec![T::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = T::one();
        }
        Self { n, entries }
    }

    pub fn from_row_major_unchecked(n: usize, entries: Vec<T>) -> Self {
        assert_eq!(entries.len(), n * n, "matrix must be n x n");
        Self { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> T {
        self.entries[i * self.n + j]
    }

    pub fn row_major(&self) -> &[T] {
        &self.entries
    }

    pub fn rows(&self) -> Vec<Vec<T>> {
        self.entries.chunks(self.n).map(<[T]>::to_vec).collect()
    }

    pub fn into_rows(self) -> Vec<Vec<T>> {
        self.rows()
    }

    pub fn apply(&self, v: &[T]) -> Vec<T> {
        self.entries
            .chunks(self.n)
            .map(|row| row.iter().zip(v).fold(T::zero(), |s, (&a, &b)| s + a * b))
            .collect()
    }

    /// Largest deviation of a row or column sum from one.
    pub fn max_defect(&self) -> T {
        let n = self.n;
        let mut worst = T::zero();
        for i in 0..n {
            let row = (0..n).fold(T::zero(), |s, j| s + self.get(i, j));
            let col = (0..n).fold(T::zero(), |s, j| s + self.get(j, i));
            worst = worst.max((row - T::one()).abs()).max((col - T::one()).abs());
        }
        worst
    }

    pub fn min_entry(&self) -> T {
        self.entries.iter().copied().fold(T::infinity(), T::min)
    }

    fn negative_entry(&self, slack: T) -> Option<(usize, usize)> {
        let k = self.entries.iter().position(|&a| a < -slack || !a.is_finite())?;
        Some((k / self.n, k % self.n))
    }
}

impl<T: Serialize> Serialize for DoublyStochastic<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.entries.chunks(self.n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(DoublyStochastic::new(2, vec![0.5, 0.5, 0.5, 0.5]).is_ok());
        assert!(DoublyStochastic::new(2, vec![1.0, 0.0, 1.0, 0.0]).is_err());
        assert!(DoublyStochastic::new(2, vec![1.5, -0.5, -0.5, 1.5]).is_err());
        assert!(DoublyStochastic::new(2, vec![1.0; 3]).is_err());
    }

    #[test]
    fn serializes_as_rows() {
        let m = DoublyStochastic::<f64>::identity(2);
        assert_eq!(serde_json::to_string(&m).unwrap(), "[[1.0,0.0],[0.0,1.0]]");
    }

    #[test]
    fn apply_is_matrix_vector_product() {
        let m = DoublyStochastic::new(2, vec![0.25, 0.75, 0.75, 0.25]).unwrap();
        assert_eq!(m.apply(&[0.0, 4.0]), vec![3.0, 1.0]);
    }
}
