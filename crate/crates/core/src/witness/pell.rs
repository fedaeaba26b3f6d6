//! Minimal positive solution of `ℓ² − 2dk² = 1`.

use crate::error::{Error, Result};
use crate::scalar::{isqrt_floor, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PellSolution<T> {
    pub d: T,
    pub ell: T,
    pub k: T,
}

impl<T: Scalar> PellSolution<T> {
    pub fn satisfies(&self) -> bool {
        let n = T::of(2) * self.d.clone();
        self.ell.clone() * self.ell.clone() - n * self.k.clone() * self.k.clone() == T::one()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PellMethod<T> {
    /// Convergents of the continued fraction of `√(2d)`. No cutoff.
    ContinuedFraction,
    /// Ascending search over `ℓ = 2, 3, …, cutoff`.
    BruteForce { cutoff: T },
}

pub fn pell_min<T: Scalar>(d: &T) -> Result<PellSolution<T>> {
    pell_min_with(d, &PellMethod::ContinuedFraction)
}

pub fn pell_min_with<T: Scalar>(d: &T, method: &PellMethod<T>) -> Result<PellSolution<T>> {
    if !d.is_positive() {
        return Err(Error::InvalidArgument(format!("Pell parameter d must be positive, got {d}")));
    }
    let n = T::of(2) * d.clone();
    let root = isqrt_floor(&n);
    if root.is_square {
        return Err(Error::NotPellSolvable(n.to_string()));
    }
    match method {
        PellMethod::ContinuedFraction => Ok(by_continued_fraction(d, &n, root.root)),
        PellMethod::BruteForce { cutoff } => by_search(d, &n, cutoff),
    }
}

fn by_continued_fraction<T: Scalar>(d: &T, n: &T, a0: T) -> PellSolution<T> {
    // √n = [a0; a1, a2, …] with a_i = ⌊(a0 + m)/q⌋; the first convergent
    // h/k with h² − nk² = 1 is the fundamental solution.
    let (mut m, mut q, mut a) = (T::zero(), T::one(), a0.clone());
    let (mut h_prev, mut h) = (T::one(), a0.clone());
    let (mut k_prev, mut k) = (T::zero(), T::one());
    loop {
        if h.clone() * h.clone() - n.clone() * k.clone() * k.clone() == T::one() {
            return PellSolution { d: d.clone(), ell: h, k };
        }
        m = a.clone() * q.clone() - m;
        q = (n.clone() - m.clone() * m.clone()) / q;
        a = (a0.clone() + m.clone()) / q.clone();
        let h_next = a.clone() * h.clone() + h_prev;
        let k_next = a.clone() * k.clone() + k_prev;
        (h_prev, h) = (h, h_next);
        (k_prev, k) = (k, k_next);
    }
}

fn by_search<T: Scalar>(d: &T, n: &T, cutoff: &T) -> Result<PellSolution<T>> {
    let mut ell = T::of(2);
    while ell <= *cutoff {
        let rhs = ell.clone() * ell.clone() - T::one();
        if (rhs.clone() % n.clone()).is_zero() {
            let r = isqrt_floor(&(rhs / n.clone()));
            if r.is_square && r.root.is_positive() {
                return Ok(PellSolution { d: d.clone(), ell, k: r.root });
            }
        }
        ell = ell + T::one();
    }
    Err(Error::CutoffExceeded(cutoff.to_string()))
}
