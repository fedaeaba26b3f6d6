//! Irreducible principal polarizations on `E×E` for `End(E) = Z[√−e]`,
//! `e ≡ 2, 3 (mod 4)`.
//!
//! With `e = 4n+2` the bundle is `2(n+1)F₁ + 2F₂ + ∇ + Σ`; with `e = 4n+3` it
//! is `2(n+1)F₁ + 2F₂ + Σ`. Both have `L² = 2` and only even intersection
//! numbers. A reducible principal polarization `E₁ + E₂` would meet `E₁` with
//! degree `E₁·E₂ = 1`, so evenness certifies irreducibility.

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::lattice::{is_ample, pair, self_int, Basis, DivisorClass};
use crate::quad_order::CmOrder;
use crate::scalar::Scalar;
use crate::seshadri::{check_divisibility, classes_with_half_square};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrincipalPolarizationCert<T: Scalar> {
    pub order: CmOrder<T>,
    /// Orthogonal basis.
    pub bundle: DivisorClass<T>,
    pub self_int: T,
    pub ample: bool,
    /// All four basis pairings are even.
    pub evenness: bool,
    /// `ε(L) = 4/3` for irreducible principal polarizations. This is a known
    /// result that is reported, not recomputed here.
    pub reported_epsilon: Ratio<T>,
}

impl<T: Scalar> PrincipalPolarizationCert<T> {
    pub fn holds(&self) -> bool {
        self.self_int == T::of(2) && self.ample && self.evenness
    }
}

pub fn principal_polarization<T: Scalar>(e: &T) -> Result<PrincipalPolarizationCert<T>> {
    let order = CmOrder::sqrt(e.clone())?;
    let (n, residue) = e.div_mod_floor(&T::of(4));
    let b1 = T::of(2) * (n + T::one());
    let b3 = if residue == T::of(2) {
        T::one()
    } else if residue == T::of(3) {
        T::zero()
    } else {
        return Err(Error::WrongResidue(e.to_string()));
    };
    let bundle = DivisorClass::new([b1, T::of(2), b3, T::one()], Basis::Orthogonal);
    Ok(PrincipalPolarizationCert {
        self_int: self_int(&bundle, &order),
        ample: is_ample(&bundle, &order),
        evenness: check_divisibility(&bundle, &order, &T::of(2)),
        reported_epsilon: Ratio::new(T::of(4), T::of(3)),
        bundle,
        order,
    })
}

/// Ample classes with `L² = 2` whose standard coefficients lie in
/// `[−bound, bound]`, in lexicographic order.
pub fn principal_classes<T: Scalar>(order: &CmOrder<T>, bound: u32) -> Vec<DivisorClass<T>> {
    classes_with_half_square(order, bound, &T::one())
        .into_iter()
        .filter(|l| is_ample(l, order))
        .collect()
}

/// An entry of `curves` meeting `l` with degree 1, if any. When `curves` are
/// elliptic this exhibits `l` as reducible.
pub fn degree_one_partner<'a, T: Scalar>(
    l: &DivisorClass<T>,
    curves: &'a [DivisorClass<T>],
    order: &CmOrder<T>,
) -> Option<&'a DivisorClass<T>> {
    curves.iter().find(|n| pair(l, n, order).is_one())
}
