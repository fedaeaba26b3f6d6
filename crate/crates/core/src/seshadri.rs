//! Seshadri constants on `E×E`: exact values on the cone spanned by
//! `F₁, F₂, Δ, Γ`, and upper bounds for arbitrary ample classes.
//!
//! Two facts about abelian surfaces are taken as known rather than checked:
//! `1 ≤ ε(L) ≤ √(L²)` for every ample `L`, and a primitive class `N` with
//! `N² = 0` and `N·(F₁+F₂) > 0` is the class of an elliptic curve. The second
//! is only used for upper bounds; exact values never depend on it.

use num_rational::Ratio;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::lattice::{change_basis, fiber_degree, is_ample, pair, self_int, Basis, DivisorClass};
use crate::quad_order::CmOrder;
use crate::scalar::{gcd_all, isqrt_floor, Scalar, SqrtFloor};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SeshadriMethod {
    /// All standard coefficients are non-negative; `ε(L) = min L·C` over
    /// the four generating curves.
    ConeFormula,
    /// One of `F₁, F₂, Δ, Γ` meets `L` with degree 1, so `ε(L) = 1`.
    EllipticWitness,
    /// Only upper bounds are known.
    BoundOnly,
}

impl std::fmt::Display for SeshadriMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SeshadriMethod::ConeFormula => "ConeFormula",
            SeshadriMethod::EllipticWitness => "EllipticWitness",
            SeshadriMethod::BoundOnly => "BoundOnly",
        })
    }
}

/// Smallest `L·N` over an enumerated family of elliptic classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EllipticMin<T> {
    pub value: T,
    pub class: DivisorClass<T>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeshadriEstimate<T: Scalar> {
    pub self_int: T,
    pub exact_value: Option<Ratio<T>>,
    pub upper_bound_sqrt: SqrtFloor<T>,
    pub elliptic_min: Option<EllipticMin<T>>,
    pub method: SeshadriMethod,
}

impl<T: Scalar> SeshadriEstimate<T> {
    /// `exact_value ≤ √(L²)`, checked as `p² ≤ L²·q²`.
    pub fn exact_within_sqrt_bound(&self) -> bool {
        match &self.exact_value {
            None => true,
            Some(v) => {
                let (p, q) = (v.numer().clone(), v.denom().clone());
                p.clone() * p <= self.self_int.clone() * q.clone() * q
            }
        }
    }
}

/// `(L·F₁, L·F₂, L·Δ, L·Γ)`.
pub fn curve_degrees<T: Scalar>(l: &DivisorClass<T>, order: &CmOrder<T>) -> [T; 4] {
    DivisorClass::standard_curves().map(|c| pair(l, &c, order))
}

/// `ε(L) = min{L·F₁, L·F₂, L·Δ, L·Γ}` for ample `L` with non-negative
/// standard coefficients.
pub fn seshadri_cone<T: Scalar>(l: &DivisorClass<T>, order: &CmOrder<T>) -> Result<T> {
    let std = change_basis(l, Basis::Standard, order);
    if std.coeffs().iter().any(Signed::is_negative) {
        return Err(Error::NegativeCoefficient);
    }
    if !is_ample(&std, order) {
        return Err(Error::NotAmple);
    }
    let [a1, a2, a3, a4] = std.coeffs().clone();
    let s = order.norm_sigma();
    let t = order.norm_one_minus_sigma();
    let candidates = [
        a2.clone() + a3.clone() + a4.clone(),
        a1.clone() + a3.clone() + s.clone() * a4.clone(),
        a1.clone() + a2.clone() + t.clone() * a4,
        a1 + s * a2 + t * a3,
    ];
    Ok(candidates.into_iter().min().expect("four candidates"))
}

/// All classes whose standard coefficients lie in `[−bound, bound]` and whose
/// self-intersection is `2·half_square`, in lexicographic order.
pub fn classes_with_half_square<T: Scalar>(order: &CmOrder<T>, bound: u32, half_square: &T) -> Vec<DivisorClass<T>> {
    let b = i64::from(bound);
    let s = order.norm_sigma();
    let t = order.norm_one_minus_sigma();
    let lim = T::of(b);
    let mut out = Vec::new();
    // L²/2 = (a₁a₂ + a₁a₃ + a₂a₃) + a₄(a₁ + |σ|²a₂ + |1−σ|²a₃) is linear in a₄.
    for a1 in -b..=b {
        for a2 in -b..=b {
            for a3 in -b..=b {
                let (x1, x2, x3) = (T::of(a1), T::of(a2), T::of(a3));
                let constant = x1.clone() * x2.clone() + x1.clone() * x3.clone() + x2.clone() * x3.clone();
                let slope = x1.clone() + s.clone() * x2.clone() + t.clone() * x3.clone();
                let rest = half_square.clone() - constant;
                if slope.is_zero() {
                    if rest.is_zero() {
                        for a4 in -b..=b {
                            out.push(DivisorClass::standard([x1.clone(), x2.clone(), x3.clone(), T::of(a4)]));
                        }
                    }
                } else {
                    let (q, r) = num_integer::Integer::div_rem(&rest, &slope);
                    if r.is_zero() && q.abs() <= lim {
                        out.push(DivisorClass::standard([x1, x2, x3, q]));
                    }
                }
            }
        }
    }
    out
}

/// All primitive classes `N` with `N² = 0` and `N·(F₁+F₂) > 0` whose standard
/// coefficients lie in `[−bound, bound]`, in lexicographic order.
pub fn enumerate_elliptic_classes<T: Scalar>(order: &CmOrder<T>, bound: u32) -> Vec<DivisorClass<T>> {
    classes_with_half_square(order, bound, &T::zero())
        .into_iter()
        .filter(|n| !n.is_zero() && gcd_all(n.coeffs()).is_one() && fiber_degree(n, order).is_positive())
        .collect()
}

/// Minimum of `L·N` over `classes`, ties broken by enumeration order.
pub fn elliptic_min<T: Scalar>(
    l: &DivisorClass<T>,
    classes: &[DivisorClass<T>],
    order: &CmOrder<T>,
) -> Option<EllipticMin<T>> {
    let mut best: Option<EllipticMin<T>> = None;
    for n in classes {
        let v = pair(l, n, order);
        if best.as_ref().is_none_or(|b| v < b.value) {
            best = Some(EllipticMin { value: v, class: n.clone() });
        }
    }
    best
}

/// Everything known about `ε(L)` for an ample class: `√(L²)`, the smallest
/// intersection with an enumerated elliptic class, and an exact value when
/// the cone formula applies or a generating curve has degree 1 against `L`.
pub fn seshadri_upper_bounds<T: Scalar>(
    l: &DivisorClass<T>,
    order: &CmOrder<T>,
    bound: u32,
) -> Result<SeshadriEstimate<T>> {
    if !is_ample(l, order) {
        return Err(Error::NotAmple);
    }
    let sq = self_int(l, order);
    let upper_bound_sqrt = isqrt_floor(&sq);
    let classes = enumerate_elliptic_classes(order, bound);
    let emin = elliptic_min(l, &classes, order);

    let (exact_value, method) = match seshadri_cone(l, order) {
        Ok(v) => (Some(Ratio::from_integer(v)), SeshadriMethod::ConeFormula),
        Err(_) if curve_degrees(l, order).iter().any(One::is_one) => {
            (Some(Ratio::one()), SeshadriMethod::EllipticWitness)
        }
        Err(_) => (None, SeshadriMethod::BoundOnly),
    };

    let est = SeshadriEstimate { self_int: sq, exact_value, upper_bound_sqrt, elliptic_min: emin, method };
    debug_assert!(est.exact_within_sqrt_bound());
    Ok(est)
}

/// True iff `modulus` divides `L·B` for each standard basis curve `B`, hence
/// `L·M` for every integral class `M`.
pub fn check_divisibility<T: Scalar>(l: &DivisorClass<T>, order: &CmOrder<T>, modulus: &T) -> bool {
    curve_degrees(l, order).iter().all(|v| v.is_multiple_of(modulus))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad_order::Form;

    fn ord(e: i64, form: Form) -> CmOrder<i64> {
        CmOrder::new(e, form).unwrap()
    }

    fn orders() -> Vec<CmOrder<i64>> {
        vec![ord(1, Form::Sqrt), ord(2, Form::Sqrt), ord(3, Form::Half), ord(5, Form::Sqrt), ord(7, Form::Half)]
    }

    #[test]
    fn cone_examples() {
        for o in orders() {
            assert_eq!(seshadri_cone(&DivisorClass::from_i64([1, 1, 0, 0], Basis::Standard), &o), Ok(1));
        }
        let l = DivisorClass::from_i64([1, 1, 1, 1], Basis::Standard);
        assert_eq!(seshadri_cone(&l, &ord(1, Form::Sqrt)), Ok(3));
        // Δ + Γ at e = 3 is principal: L·Δ = L·Γ = |1−σ|² = 1.
        let l = DivisorClass::from_i64([0, 0, 1, 1], Basis::Standard);
        assert_eq!(seshadri_cone(&l, &ord(3, Form::Half)), Ok(1));
    }

    #[test]
    fn cone_errors() {
        let o = ord(1, Form::Sqrt);
        let l = DivisorClass::from_i64([4, 2, -1, 0], Basis::Standard);
        assert_eq!(seshadri_cone(&l, &o), Err(Error::NegativeCoefficient));
        let l = DivisorClass::from_i64([1, 0, 0, 0], Basis::Standard);
        assert_eq!(seshadri_cone(&l, &o), Err(Error::NotAmple));
        // orthogonal input is converted first: (1,1,0,0) is the same class in both bases
        let l = DivisorClass::from_i64([1, 1, 0, 0], Basis::Orthogonal);
        assert_eq!(seshadri_cone(&l, &o), Ok(1));
    }

    #[test]
    fn enumeration_contains_generators() {
        for o in orders() {
            let list = enumerate_elliptic_classes(&o, 1);
            for c in DivisorClass::standard_curves() {
                assert!(list.contains(&c), "{c} missing for {o}");
            }
            assert!(enumerate_elliptic_classes(&o, 0).is_empty());
        }
        let o1 = ord(1, Form::Sqrt);
        let list = enumerate_elliptic_classes(&o1, 1);
        let extra = DivisorClass::from_i64([0, -1, 1, 1], Basis::Standard);
        assert!(list.contains(&extra));
        // (1,1,−1,0) has square −2 and degree 0, so it is not elliptic
        assert!(!list.contains(&DivisorClass::from_i64([1, 1, -1, 0], Basis::Standard)));
        assert_eq!(list.len(), 6);
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for o in orders() {
            let b = 3i64;
            let mut brute = Vec::new();
            for a1 in -b..=b {
                for a2 in -b..=b {
                    for a3 in -b..=b {
                        for a4 in -b..=b {
                            let n = DivisorClass::standard([a1, a2, a3, a4]);
                            if n.is_zero() {
                                continue;
                            }
                            if self_int(&n, &o) == 0
                                && n.is_primitive().unwrap()
                                && pair(&n, &DivisorClass::standard([1, 1, 0, 0]), &o) > 0
                            {
                                brute.push(n);
                            }
                        }
                    }
                }
            }
            assert_eq!(enumerate_elliptic_classes(&o, 3), brute, "{o}");
        }
    }

    #[test]
    fn bounds_examples() {
        let o1 = ord(1, Form::Sqrt);
        let l = DivisorClass::from_i64([4, 2, -1, 0], Basis::Standard);
        let est = seshadri_upper_bounds(&l, &o1, 1).unwrap();
        assert_eq!(est.exact_value, Some(Ratio::from_integer(1)));
        assert_eq!(est.method, SeshadriMethod::EllipticWitness);
        assert_eq!(est.self_int, 4);

        let l = DivisorClass::from_i64([1, 1, 0, 0], Basis::Standard);
        let est = seshadri_upper_bounds(&l, &o1, 2).unwrap();
        assert_eq!(est.elliptic_min.unwrap().value, 1);
        assert_eq!(est.method, SeshadriMethod::ConeFormula);

        let o2 = ord(2, Form::Sqrt);
        let w = DivisorClass::from_i64([4, 4, 2, 2], Basis::Orthogonal);
        let est = seshadri_upper_bounds(&w, &o2, 3).unwrap();
        let m = est.elliptic_min.unwrap().value;
        assert!(m >= 4 && m > est.upper_bound_sqrt.root);
        assert_eq!(est.upper_bound_sqrt, SqrtFloor { root: 2, is_square: false });
        assert_eq!(est.method, SeshadriMethod::BoundOnly);

        let not_ample = DivisorClass::from_i64([1, 0, 0, 0], Basis::Standard);
        assert_eq!(seshadri_upper_bounds(&not_ample, &o1, 1), Err(Error::NotAmple));
    }

    #[test]
    fn divisibility_examples() {
        let o2 = ord(2, Form::Sqrt);
        let w = DivisorClass::from_i64([4, 4, 2, 2], Basis::Orthogonal);
        assert!(check_divisibility(&w, &o2, &4));
        assert!(!check_divisibility(&DivisorClass::fiber1(), &o2, &2));
        let o6 = ord(6, Form::Sqrt);
        let pp = DivisorClass::from_i64([4, 2, 1, 1], Basis::Orthogonal);
        assert!(check_divisibility(&pp, &o6, &2));
    }

    proptest::proptest! {
        #[test]
        fn cone_value_within_sqrt(a in proptest::array::uniform4(0i64..30), idx in 0usize..5) {
            let o = &orders()[idx];
            let l = DivisorClass::standard(a);
            if let Ok(eps) = seshadri_cone(&l, o) {
                let sq = self_int(&l, o);
                proptest::prop_assert!(eps * eps <= sq);
                proptest::prop_assert!(eps <= isqrt_floor(&sq).root + 1);
            }
        }

        #[test]
        fn divisibility_is_bilinear(
            a in proptest::array::uniform4(-20i64..20),
            m in proptest::array::uniform4(-50i64..50),
            modulus in 1i64..6,
        ) {
            let o = ord(6, Form::Sqrt);
            let l = DivisorClass::standard(a.map(|x| x * modulus));
            proptest::prop_assert!(check_divisibility(&l, &o, &modulus));
            proptest::prop_assert_eq!(pair(&l, &DivisorClass::standard(m), &o) % modulus, 0);
        }
    }
}
