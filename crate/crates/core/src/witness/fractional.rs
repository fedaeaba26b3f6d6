//! Ample bundles whose Seshadri constant is not computed by an elliptic curve.
//!
//! For `σ = √−e` the family is `L_k = 2e F₁ + 2e F₂ + e∇ + kΣ`; for
//! `σ = ½(1+√−e)` it is `L_k = 2e F₁ + 2e F₂ + (e−k)∇ + 2kΣ` with `k` odd. In
//! both cases `L_k² = 6e² − 2ek²` and every intersection number `L_k·M` is a
//! multiple of `2e`. Choosing `e < k² < 3e` makes `L_k` ample with
//! `√(L_k²) < 2e`, so no elliptic curve can compute `ε(L_k)`; a `k` for which
//! `L_k²` is not a perfect square additionally makes `√(L_k²)` irrational.

use crate::lattice::{is_ample, self_int, Basis, DivisorClass};
use crate::quad_order::{CmOrder, Form};
use crate::scalar::{isqrt_floor, Scalar, SqrtFloor};
use crate::seshadri::check_divisibility;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FractionalWitness<T> {
    pub order: CmOrder<T>,
    pub k: T,
    /// `L_k` in the orthogonal basis.
    pub bundle: DivisorClass<T>,
    /// `6e² − 2ek²`
    pub self_int: T,
    /// `⌊√(L_k²)⌋`
    pub nonsquare_root: T,
    /// `2e`
    pub divisibility_modulus: T,
}

/// `6e² − 2ek²`.
pub fn family_self_int<T: Scalar>(e: &T, k: &T) -> T {
    let e = e.clone();
    T::of(6) * e.clone() * e.clone() - T::of(2) * e * k.clone() * k.clone()
}

/// `L_k` for the order's family, in the orthogonal basis.
pub fn family_bundle<T: Scalar>(order: &CmOrder<T>, k: &T) -> DivisorClass<T> {
    let e = order.e().clone();
    let two_e = T::of(2) * e.clone();
    let coeffs = match order.form() {
        Form::Sqrt => [two_e.clone(), two_e, e, k.clone()],
        Form::Half => [two_e.clone(), two_e, e - k.clone(), T::of(2) * k.clone()],
    };
    DivisorClass::new(coeffs, Basis::Orthogonal)
}

/// `e < k² < 3e`, and `k` odd for the half form.
pub fn k_in_interval<T: Scalar>(order: &CmOrder<T>, k: &T) -> bool {
    let e = order.e().clone();
    let k2 = k.clone() * k.clone();
    let parity_ok = order.form() == Form::Sqrt || k.is_odd();
    k.is_positive() && parity_ok && e.clone() < k2 && k2 < T::of(3) * e
}

/// The search predicate: `k` lies in the interval and `L_k²` is not a square.
pub fn k_qualifies<T: Scalar>(order: &CmOrder<T>, k: &T) -> bool {
    k_in_interval(order, k) && !isqrt_floor(&family_self_int(order.e(), k)).is_square
}

impl<T: Scalar> FractionalWitness<T> {
    /// Build the certificate for a given `k`, or `None` if `k` does not qualify.
    pub fn for_k(order: &CmOrder<T>, k: T) -> Option<Self> {
        if !k_qualifies(order, &k) {
            return None;
        }
        let self_int = family_self_int(order.e(), &k);
        Some(Self {
            order: order.clone(),
            bundle: family_bundle(order, &k),
            nonsquare_root: isqrt_floor(&self_int).root,
            divisibility_modulus: T::of(2) * order.e().clone(),
            self_int,
            k,
        })
    }

    /// `(⌊√e⌋, ⌊√(3e)⌋)`; the open interval `(√e, √(3e))` holds `k`.
    pub fn interval(&self) -> (SqrtFloor<T>, SqrtFloor<T>) {
        let e = self.order.e();
        (isqrt_floor(e), isqrt_floor(&(T::of(3) * e.clone())))
    }

    /// For the half form every coefficient of `L_k` is even; this is `L_k / 2`.
    pub fn half_bundle(&self) -> Option<DivisorClass<T>> {
        if self.order.form() != Form::Half {
            return None;
        }
        let two = T::of(2);
        Some(DivisorClass::new(self.bundle.coeffs().clone().map(|c| c / two.clone()), Basis::Orthogonal))
    }

    /// `(L_k/2)² = (6e² − 2ek²)/4` for the half form.
    pub fn half_bundle_self_int(&self) -> Option<T> {
        self.half_bundle().map(|h| self_int(&h, &self.order))
    }

    /// Re-check every invariant from scratch against the lattice.
    pub fn verify(&self) -> bool {
        let sq = self_int(&self.bundle, &self.order);
        let root = isqrt_floor(&sq);
        k_in_interval(&self.order, &self.k)
            && self.bundle == family_bundle(&self.order, &self.k)
            && sq == self.self_int
            && sq == family_self_int(self.order.e(), &self.k)
            && sq.is_positive()
            && is_ample(&self.bundle, &self.order)
            && !root.is_square
            && root.root == self.nonsquare_root
            && self.divisibility_modulus == T::of(2) * self.order.e().clone()
            && check_divisibility(&self.bundle, &self.order, &self.divisibility_modulus)
            // √(L²) < 2e
            && sq < self.divisibility_modulus.clone() * self.divisibility_modulus.clone()
    }
}

/// The smallest qualifying `k` and its bundle. `None` exactly when the family
/// has no qualifying member, e.g. for `Z[i]` and `Z[½(1+√−3)]`.
pub fn witness_search<T: Scalar>(order: &CmOrder<T>) -> Option<FractionalWitness<T>> {
    let e = order.e();
    let mut k = isqrt_floor(e).root + T::one();
    if order.form() == Form::Half && k.is_even() {
        k = k + T::one();
    }
    let step = match order.form() {
        Form::Sqrt => T::one(),
        Form::Half => T::of(2),
    };
    let upper = T::of(3) * e.clone();
    while k.clone() * k.clone() < upper {
        if let Some(w) = FractionalWitness::for_k(order, k.clone()) {
            return Some(w);
        }
        k = k + step.clone();
    }
    None
}
