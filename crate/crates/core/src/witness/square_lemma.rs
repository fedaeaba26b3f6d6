//! Square-free decomposition and the consecutive-square scan for
//! `A_k = 6e² − 2ek²`.
//!
//! For `e ≥ 2` with `e = m²n`, `n` square-free, `A_k` and `A_{k+1}` are never
//! both perfect squares, and when `n ≥ 3` neither are `A_k` and `A_{k+2}`.
//! [`lemma_square_scan`] checks this over a range of `k` and reports any
//! counterexample.

use crate::error::{Error, Result};
use crate::scalar::{is_square, Scalar};
use crate::witness::fractional::family_self_int;

/// `e = m²·n` with `n` square-free.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SquarefreeDecomposition<T> {
    pub m: T,
    pub n: T,
}

/// Trial division up to `√e`.
pub fn squarefree_decompose<T: Scalar>(e: &T) -> Result<SquarefreeDecomposition<T>> {
    if !e.is_positive() {
        return Err(Error::InvalidArgument(format!("square-free decomposition needs e ≥ 1, got {e}")));
    }
    let mut rest = e.clone();
    let mut m = T::one();
    let mut n = T::one();
    let mut p = T::of(2);
    while p.clone() * p.clone() <= rest {
        let mut exp = 0u32;
        while (rest.clone() % p.clone()).is_zero() {
            rest = rest / p.clone();
            exp += 1;
        }
        for _ in 0..exp / 2 {
            m = m * p.clone();
        }
        if exp % 2 == 1 {
            n = n * p.clone();
        }
        p = if p == T::of(2) { T::of(3) } else { p + T::of(2) };
    }
    Ok(SquarefreeDecomposition { m, n: n * rest })
}

/// `A_k` and `A_{k+step}` are both perfect squares.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaViolation<T> {
    pub k: T,
    pub step: u8,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaScanReport<T> {
    pub e: T,
    pub decomposition: SquarefreeDecomposition<T>,
    pub k_max: T,
    /// Whether the two-step clause applied (`n ≥ 3`).
    pub two_step_checked: bool,
    /// Every `k` in `1..=k_max+2` with `A_k` a perfect square.
    pub square_ks: Vec<T>,
    pub violations: Vec<LemmaViolation<T>>,
}

impl<T> LemmaScanReport<T> {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// `A_k` is a perfect square. Negative values are not squares.
pub fn a_k_is_square<T: Scalar>(e: &T, k: &T) -> bool {
    is_square(&family_self_int(e, k))
}

/// Check the lemma for every `1 ≤ k ≤ k_max`.
pub fn lemma_square_scan<T: Scalar>(e: &T, k_max: &T) -> Result<LemmaScanReport<T>> {
    if *e < T::of(2) {
        return Err(Error::InvalidArgument(format!("the square lemma needs e ≥ 2, got {e}")));
    }
    let decomposition = squarefree_decompose(e)?;
    let two_step_checked = decomposition.n >= T::of(3);

    // squares[i] ⇔ A_{i+1} is a square, for i + 1 ∈ 1..=k_max+2
    let mut squares = Vec::new();
    let mut square_ks = Vec::new();
    let mut k = T::one();
    let last = k_max.clone() + T::of(2);
    while k <= last {
        let sq = a_k_is_square(e, &k);
        if sq {
            square_ks.push(k.clone());
        }
        squares.push(sq);
        k = k + T::one();
    }

    let mut violations = Vec::new();
    let mut k = T::one();
    for i in 0..squares.len().saturating_sub(2) {
        if squares[i] && squares[i + 1] {
            violations.push(LemmaViolation { k: k.clone(), step: 1 });
        }
        if two_step_checked && squares[i] && squares[i + 2] {
            violations.push(LemmaViolation { k: k.clone(), step: 2 });
        }
        k = k + T::one();
    }

    Ok(LemmaScanReport {
        e: e.clone(),
        decomposition,
        k_max: k_max.clone(),
        two_step_checked,
        square_ks,
        violations,
    })
}
