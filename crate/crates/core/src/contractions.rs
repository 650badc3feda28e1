//! Contractions of root multisets and chains of simple non-degenerate
//! contractions realizing a majorization.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::order::hlp_majorize;
use crate::rootfinding::SortedRoots;
use crate::scalar::Real;

/// Move the `k`-th and `l`-th smallest entries (1-based) towards each other
/// by `t`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Contraction<T> {
    pub k: usize,
    pub l: usize,
    pub t: T,
}

impl<T: Real> Contraction<T> {
    pub fn simple(k: usize, t: T) -> Self {
        Self { k, l: k + 1, t }
    }

    pub fn is_simple(&self) -> bool {
        self.l == self.k + 1
    }

    /// Half the gap `(x_l - x_k) / 2` this step may use on `r`.
    fn half_gap(&self, r: &SortedRoots<T>) -> Result<T> {
        let n = r.len();
        if self.k == 0 || self.k >= self.l || self.l > n {
            return Err(Error::InvalidContraction(format!(
                "indices (k, l) = ({}, {}) invalid for {n} entries",
                self.k, self.l
            )));
        }
        let v = r.values();
        Ok((v[self.l - 1] - v[self.k - 1]) / T::lit(2.0))
    }
}

impl<T: Serialize> Serialize for Contraction<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let simple = self.l == self.k + 1;
        let mut st = s.serialize_struct("Contraction", if simple { 2 } else { 3 })?;
        st.serialize_field("k", &self.k)?;
        if !simple {
            st.serialize_field("l", &self.l)?;
        }
        st.serialize_field("t", &self.t)?;
        st.end()
    }
}

/// A start multiset and the contractions applied to it in order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Chain<T> {
    pub start: SortedRoots<T>,
    pub steps: Vec<Contraction<T>>,
}

impl<T: Real> Chain<T> {
    /// Every intermediate multiset, starting with `start`.
    pub fn states(&self) -> Result<Vec<SortedRoots<T>>> {
        let mut out = vec![self.start.clone()];
        for step in &self.steps {
            let next = apply_contraction(out.last().expect("non-empty"), step)?;
            out.push(next);
        }
        Ok(out)
    }

    pub fn end(&self) -> Result<SortedRoots<T>> {
        Ok(self.states()?.pop().expect("non-empty"))
    }
}

/// `x_k + t`, `x_l - t`, re-sorted.
pub fn apply_contraction<T: Real>(r: &SortedRoots<T>, step: &Contraction<T>) -> Result<SortedRoots<T>> {
    let half = step.half_gap(r)?;
    if half <= T::zero() {
        return Err(Error::InvalidContraction(format!(
            "entries {} and {} coincide",
            step.k, step.l
        )));
    }
    if !(step.t > T::zero() && step.t <= half) {
        return Err(Error::InvalidContraction(format!(
            "coefficient {} outside (0, {}]",
            step.t, half
        )));
    }
    let mut v = r.values().to_vec();
    v[step.k - 1] += step.t;
    v[step.l - 1] -= step.t;
    SortedRoots::new(v)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChainOptions<T> {
    /// Non-degeneracy margin: each step uses at most `(1 - delta)` of the
    /// half-gap.
    pub delta: T,
    /// Accept repeated entries and steps reaching the half-gap.
    pub allow_degenerate: bool,
}

impl<T: Real> Default for ChainOptions<T> {
    fn default() -> Self {
        Self {
            delta: T::lit(1e-3),
            allow_degenerate: false,
        }
    }
}

/// Chain of simple non-degenerate contractions from `y` to `x`, for `x ≺ y`.
///
/// Works on the lower partial-sum slacks `s_k = L_k(x) - L_k(v)`, which a
/// simple step at `k` lowers by exactly `t`. Each round moves the current
/// vector `v` a fraction `sigma` of the way along the segment to `x` by one
/// step per positive slack, with `sigma` halved until every step of the round
/// fits its margin. Points of the segment keep strictly positive gaps, so a
/// full round (`sigma = 1`) eventually fits and lands on `x`.
pub fn chain_decompose<T: Real>(y: &SortedRoots<T>, x: &SortedRoots<T>) -> Result<Chain<T>> {
    chain_decompose_with(y, x, &ChainOptions::default())
}

pub fn chain_decompose_with<T: Real>(
    y: &SortedRoots<T>,
    x: &SortedRoots<T>,
    options: &ChainOptions<T>,
) -> Result<Chain<T>> {
    if !hlp_majorize(x, y, T::tol(1e-9, 64.0))?.majorized {
        return Err(Error::NotMajorized);
    }
    if !options.allow_degenerate && !(y.is_strictly_increasing() && x.is_strictly_increasing()) {
        return Err(Error::MultipleRoots);
    }
    let n = y.len();
    let scale = y.abs_sum().max(T::one());
    let done = T::tol(1e-10, 64.0) * scale;
    let target = x.values();
    let mut v = y.values().to_vec();
    let mut steps = Vec::new();

    let initial = slacks(&v, target).iter().fold(T::zero(), |a, &b| a + b);
    let cap = step_cap(n, initial, done);
    loop {
        let s = slacks(&v, target);
        if s.iter().copied().fold(T::zero(), T::max) <= done {
            break;
        }
        let mut sigma = T::one();
        let round = loop {
            if let Some(round) = try_round(&v, &s, sigma, options) {
                break round;
            }
            sigma /= T::lit(2.0);
            if sigma < T::epsilon() {
                return Err(Error::StepCapExceeded { cap });
            }
        };
        for step in round {
            v[step.k - 1] += step.t;
            v[step.k] -= step.t;
            steps.push(step);
        }
        if steps.len() > cap {
            return Err(Error::StepCapExceeded { cap });
        }
    }
    Ok(Chain {
        start: y.clone(),
        steps,
    })
}

/// `max(0, L_k(x) - L_k(v))` for `k = 1..n-1`.
fn slacks<T: Real>(v: &[T], x: &[T]) -> Vec<T> {
    let mut acc = T::zero();
    (0..v.len() - 1)
        .map(|k| {
            acc += x[k] - v[k];
            acc.max(T::zero())
        })
        .collect()
}

fn step_cap<T: Real>(n: usize, initial: T, done: T) -> usize {
    let ratio = (initial / done).max(T::lit(2.0));
    let rounds = ratio.log2().ceil().to_usize().unwrap_or(usize::MAX / (32 * n * n));
    16 * n * n * rounds.max(1)
}

/// One step per positive slack, scaled by `sigma`, applied in an order where
/// each step fits its margin at the moment it is taken.
fn try_round<T: Real>(v: &[T], s: &[T], sigma: T, options: &ChainOptions<T>) -> Option<Vec<Contraction<T>>> {
    let mut w = v.to_vec();
    let mut pending: Vec<usize> = (0..s.len()).filter(|&k| s[k] > T::zero()).collect();
    let mut round = Vec::with_capacity(pending.len());
    let two = T::lit(2.0);
    let fits = |gap: T, t: T| {
        if options.allow_degenerate {
            two * t <= gap
        } else {
            two * t < (T::one() - options.delta) * gap
        }
    };
    while !pending.is_empty() {
        let pos = pending.iter().position(|&k| {
            let t = sigma * s[k];
            t > T::zero() && fits(w[k + 1] - w[k], t)
        })?;
        let k = pending.remove(pos);
        let t = sigma * s[k];
        w[k] += t;
        w[k + 1] -= t;
        round.push(Contraction::simple(k + 1, t));
    }
    Some(round)
}

/// First reason a chain fails verification.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ChainViolation {
    NotSimple { step: usize },
    Degenerate { step: usize },
    NotApplicable { step: usize, reason: String },
    NotMajorized { step: usize },
    Endpoint { error: f64 },
    Dimension,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ChainCheck {
    pub valid: bool,
    pub violation: Option<ChainViolation>,
    /// `max_i |end_i - x_i|`, when the chain could be applied.
    pub endpoint_error: Option<f64>,
}

/// Every step simple, non-degenerate and applicable; each state majorizes
/// the next; the end matches `x` within `tol * max(1, sum |start|)`.
pub fn verify_chain<T: Real>(chain: &Chain<T>, x: &SortedRoots<T>, tol: T) -> ChainCheck {
    verify_chain_with(chain, x, tol, false)
}

pub fn verify_chain_with<T: Real>(chain: &Chain<T>, x: &SortedRoots<T>, tol: T, allow_degenerate: bool) -> ChainCheck {
    let fail = |violation, endpoint_error| ChainCheck {
        valid: false,
        violation: Some(violation),
        endpoint_error,
    };
    if chain.start.len() != x.len() {
        return fail(ChainViolation::Dimension, None);
    }
    let order_tol = T::tol(1e-9, 64.0);
    let mut current = chain.start.clone();
    for (i, step) in chain.steps.iter().enumerate() {
        if !step.is_simple() {
            return fail(ChainViolation::NotSimple { step: i }, None);
        }
        if !allow_degenerate {
            match step.half_gap(&current) {
                Ok(half) if step.t < half => {}
                Ok(_) => return fail(ChainViolation::Degenerate { step: i }, None),
                Err(e) => {
                    return fail(
                        ChainViolation::NotApplicable {
                            step: i,
                            reason: e.to_string(),
                        },
                        None,
                    )
                }
            }
        }
        let next = match apply_contraction(&current, step) {
            Ok(next) => next,
            Err(e) => {
                return fail(
                    ChainViolation::NotApplicable {
                        step: i,
                        reason: e.to_string(),
                    },
                    None,
                )
            }
        };
        if !hlp_majorize(&next, &current, order_tol).is_ok_and(|o| o.majorized) {
            return fail(ChainViolation::NotMajorized { step: i }, None);
        }
        current = next;
    }
    let error = current
        .values()
        .iter()
        .zip(x.values())
        .map(|(a, b)| (*a - *b).abs())
        .fold(T::zero(), T::max);
    let scale = chain.start.abs_sum().max(T::one());
    if error > tol * scale {
        return fail(ChainViolation::Endpoint { error: error.as_f64() }, Some(error.as_f64()));
    }
    ChainCheck {
        valid: true,
        violation: None,
        endpoint_error: Some(error.as_f64()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(v: &[f64]) -> SortedRoots<f64> {
        SortedRoots::new(v.to_vec()).unwrap()
    }

    #[test]
    fn apply_examples() {
        let y = r(&[0.0, 4.0]);
        assert_eq!(apply_contraction(&y, &Contraction::simple(1, 1.0)).unwrap(), r(&[1.0, 3.0]));
        assert_eq!(apply_contraction(&y, &Contraction::simple(1, 2.0)).unwrap(), r(&[2.0, 2.0]));
        assert!(matches!(
            apply_contraction(&y, &Contraction::simple(1, 3.0)),
            Err(Error::InvalidContraction(_))
        ));
        assert!(matches!(
            apply_contraction(&r(&[1.0, 1.0]), &Contraction::simple(1, 0.0)),
            Err(Error::InvalidContraction(_))
        ));
        assert!(apply_contraction(&y, &Contraction::simple(2, 1.0)).is_err());
    }

    #[test]
    fn non_adjacent_step_resorts() {
        let out = apply_contraction(&r(&[0.0, 1.0, 4.0]), &Contraction { k: 1, l: 3, t: 2.0 }).unwrap();
        assert_eq!(out, r(&[1.0, 2.0, 2.0]));
    }

    #[test]
    fn equal_inputs_give_empty_chain() {
        let x = r(&[-1.0, 0.5, 2.0]);
        let chain = chain_decompose(&x, &x).unwrap();
        assert!(chain.steps.is_empty());
        assert!(verify_chain(&chain, &x, 1e-9).valid);
    }

    #[test]
    fn three_point_chain() {
        let y = r(&[0.0, 2.0, 4.0]);
        let x = r(&[1.0, 2.0, 3.0]);
        let chain = chain_decompose(&y, &x).unwrap();
        let check = verify_chain(&chain, &x, 1e-9);
        assert!(check.valid, "{check:?}");

        let given = Chain {
            start: y,
            steps: vec![Contraction::simple(2, 0.5), Contraction::simple(1, 1.0), Contraction::simple(2, 0.5)],
        };
        assert!(verify_chain(&given, &x, 1e-9).valid);
    }

    #[test]
    fn single_step_suffices() {
        let chain = chain_decompose(&r(&[0.0, 2.0]), &r(&[0.5, 1.5])).unwrap();
        assert_eq!(chain.steps, vec![Contraction::simple(1, 0.5)]);
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(matches!(
            chain_decompose(&r(&[1.0, 1.5]), &r(&[0.0, 2.5])),
            Err(Error::NotMajorized)
        ));
        assert!(matches!(
            chain_decompose(&r(&[0.0, 2.0]), &r(&[1.0, 1.0])),
            Err(Error::MultipleRoots)
        ));
    }

    #[test]
    fn degenerate_target_reached_with_flag() {
        let y = r(&[0.0, 0.0, 3.0]);
        let x = r(&[1.0, 1.0, 1.0]);
        let options = ChainOptions {
            allow_degenerate: true,
            ..ChainOptions::default()
        };
        let chain = chain_decompose_with(&y, &x, &options).unwrap();
        assert!(verify_chain_with(&chain, &x, 1e-9, true).valid);
    }

    #[test]
    fn verify_reports_first_violation() {
        let y = r(&[0.0, 2.0]);
        let x = r(&[1.0, 1.0]);
        let half = Chain {
            start: y.clone(),
            steps: vec![Contraction::simple(1, 1.0)],
        };
        assert_eq!(
            verify_chain(&half, &x, 1e-9).violation,
            Some(ChainViolation::Degenerate { step: 0 })
        );
        let too_far = Chain {
            start: y,
            steps: vec![Contraction::simple(1, 1.5)],
        };
        assert!(!verify_chain(&too_far, &x, 1e-9).valid);
        let empty = Chain {
            start: r(&[0.0, 2.0]),
            steps: vec![],
        };
        assert_eq!(
            verify_chain(&empty, &x, 1e-9).violation,
            Some(ChainViolation::Endpoint { error: 1.0 })
        );
    }

    #[test]
    fn chain_json_layout() {
        let chain = Chain {
            start: r(&[0.0, 2.0]),
            steps: vec![Contraction::simple(1, 0.5)],
        };
        assert_eq!(
            serde_json::to_string(&chain).unwrap(),
            r#"{"start":[0.0,2.0],"steps":[{"k":1,"t":0.5}]}"#
        );
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn spread(v: Vec<f64>) -> Vec<f64> {
            // distinct entries, at least 1e-2 apart
            let mut v = v;
            v.sort_by(f64::total_cmp);
            for i in 1..v.len() {
                if v[i] < v[i - 1] + 1e-2 {
                    v[i] = v[i - 1] + 1e-2;
                }
            }
            v
        }

        fn strict() -> impl Strategy<Value = Vec<f64>> {
            prop::collection::vec(-5.0f64..5.0, 2..7).prop_map(spread)
        }

        proptest! {
            #[test]
            fn contraction_preserves_sum_and_moves_down(v in strict(), k in 0usize..6, s in 0.0f64..1.0) {
                let y = r(&v);
                let k = 1 + k % (v.len() - 1);
                let step = Contraction::simple(k, s * (v[k] - v[k - 1]) / 2.0);
                let x = apply_contraction(&y, &step).unwrap();
                prop_assert!((x.sum() - y.sum()).abs() < 1e-12);
                prop_assert!(hlp_majorize(&x, &y, 1e-9).unwrap().majorized);
            }

            #[test]
            fn chains_round_trip(v in strict(), s in 0.05f64..0.95) {
                let y = r(&v);
                let mean = y.sum() / v.len() as f64;
                let x = r(&spread(v.iter().map(|a| mean + s * (a - mean)).collect()));
                prop_assume!((x.sum() - y.sum()).abs() < 1e-12);
                prop_assume!(hlp_majorize(&x, &y, 1e-9).unwrap().majorized);
                let chain = chain_decompose(&y, &x).unwrap();
                let check = verify_chain(&chain, &x, 1e-9);
                prop_assert!(check.valid, "{:?}", check.violation);
                let end = chain.end().unwrap();
                for (a, b) in end.values().iter().zip(x.values()) {
                    prop_assert!((a - b).abs() < 1e-9);
                }
            }
        }
    }
}
