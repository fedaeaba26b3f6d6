//! Divisor classes on `E×E`, the intersection pairing and the ampleness test.
//!
//! Two bases of `NS(E×E)` are supported:
//!
//! * [`Basis::Standard`]: the curves `(F₁, F₂, Δ, Γ)`, i.e. the two fibers,
//!   the diagonal and the graph of `σ`;
//! * [`Basis::Orthogonal`]: `(F₁, F₂, ∇, Σ)` with `∇ = Δ − F₁ − F₂` and
//!   `Σ = Γ − |σ|²F₁ − F₂`, both orthogonal to the fibers.
//!
//! Pairings are evaluated in the orthogonal basis, where the Gram matrix is a
//! hyperbolic plane plus a negative definite `2×2` block.

use std::fmt;

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::quad_order::CmOrder;
use crate::scalar::{gcd_all, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    /// `(F₁, F₂, Δ, Γ)`
    Standard,
    /// `(F₁, F₂, ∇, Σ)`
    Orthogonal,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Basis::Standard => "standard",
            Basis::Orthogonal => "orthogonal",
        })
    }
}

/// An element of `NS(E×E)` given by four integer coefficients in a basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DivisorClass<T> {
    coeffs: [T; 4],
    basis: Basis,
}

impl<T: Scalar> DivisorClass<T> {
    pub fn new(coeffs: [T; 4], basis: Basis) -> Self {
        Self { coeffs, basis }
    }

    pub fn standard(coeffs: [T; 4]) -> Self {
        Self::new(coeffs, Basis::Standard)
    }

    pub fn orthogonal(coeffs: [T; 4]) -> Self {
        Self::new(coeffs, Basis::Orthogonal)
    }

    /// Convenience constructor from machine integers.
    pub fn from_i64(coeffs: [i64; 4], basis: Basis) -> Self {
        Self::new(coeffs.map(T::of), basis)
    }

    /// The `i`-th basis vector of `basis`.
    pub fn unit(i: usize, basis: Basis) -> Self {
        let mut coeffs = [T::zero(), T::zero(), T::zero(), T::zero()];
        coeffs[i] = T::one();
        Self::new(coeffs, basis)
    }

    pub fn fiber1() -> Self {
        Self::unit(0, Basis::Standard)
    }

    pub fn fiber2() -> Self {
        Self::unit(1, Basis::Standard)
    }

    pub fn diagonal() -> Self {
        Self::unit(2, Basis::Standard)
    }

    pub fn graph() -> Self {
        Self::unit(3, Basis::Standard)
    }

    /// The four curves `F₁, F₂, Δ, Γ` as standard-basis classes.
    pub fn standard_curves() -> [Self; 4] {
        [Self::fiber1(), Self::fiber2(), Self::diagonal(), Self::graph()]
    }

    pub fn coeffs(&self) -> &[T; 4] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> [T; 4] {
        self.coeffs
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Re-express the class in `target`.
    pub fn to_basis(&self, target: Basis, order: &CmOrder<T>) -> Self {
        change_basis(self, target, order)
    }

    /// True iff the coefficients are coprime. The zero class is an error.
    pub fn is_primitive(&self) -> Result<bool> {
        is_primitive(self)
    }
}

impl<T: Scalar> fmt::Display for DivisorClass<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = &self.coeffs;
        write!(f, "({a}, {b}, {c}, {d})[{}]", self.basis)
    }
}

/// Standard coefficients `a` from orthogonal coefficients `b` and vice versa.
///
/// `a = (b₁ − b₃ − |σ|²b₄, b₂ − b₃ − b₄, b₃, b₄)` and
/// `b = (a₁ + a₃ + |σ|²a₄, a₂ + a₃ + a₄, a₃, a₄)`.
pub fn change_basis<T: Scalar>(class: &DivisorClass<T>, target: Basis, order: &CmOrder<T>) -> DivisorClass<T> {
    if class.basis == target {
        return class.clone();
    }
    let s = order.norm_sigma();
    let [c1, c2, c3, c4] = class.coeffs.clone();
    let coeffs = match target {
        Basis::Orthogonal => [
            c1 + c3.clone() + s * c4.clone(),
            c2 + c3.clone() + c4.clone(),
            c3,
            c4,
        ],
        Basis::Standard => [
            c1 - c3.clone() - s * c4.clone(),
            c2 - c3.clone() - c4.clone(),
            c3,
            c4,
        ],
    };
    DivisorClass::new(coeffs, target)
}

/// Matrix `U` whose columns are `F₁, F₂, ∇, Σ` written in the standard basis,
/// so that `a = U·b`.
pub fn basis_change_matrix<T: Scalar>(order: &CmOrder<T>) -> [[T; 4]; 4] {
    let s = order.norm_sigma();
    let z = T::zero;
    let o = T::one;
    [
        [o(), z(), -o(), -s],
        [z(), o(), -o(), -o()],
        [z(), z(), o(), z()],
        [z(), z(), z(), o()],
    ]
}

/// A symmetric `4×4` integer matrix representing the intersection form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GramMatrix<T> {
    entries: [[T; 4]; 4],
}

impl<T: Scalar> GramMatrix<T> {
    pub fn new(entries: [[T; 4]; 4]) -> Self {
        Self { entries }
    }

    pub fn entries(&self) -> &[[T; 4]; 4] {
        &self.entries
    }

    pub fn entry(&self, i: usize, j: usize) -> &T {
        &self.entries[i][j]
    }

    pub fn is_symmetric(&self) -> bool {
        (0..4).all(|i| (0..4).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    /// `xᵀ·G·y`.
    pub fn bilinear(&self, x: &[T; 4], y: &[T; 4]) -> T {
        let mut acc = T::zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                acc = acc + xi.clone() * self.entries[i][j].clone() * yj.clone();
            }
        }
        acc
    }

    /// `Uᵀ·G·U`.
    pub fn congruent(&self, u: &[[T; 4]; 4]) -> Self {
        let col = |j: usize| [u[0][j].clone(), u[1][j].clone(), u[2][j].clone(), u[3][j].clone()];
        let cols = [col(0), col(1), col(2), col(3)];
        let entries = std::array::from_fn(|i| std::array::from_fn(|j| self.bilinear(&cols[i], &cols[j])));
        Self::new(entries)
    }

    pub fn determinant(&self) -> T {
        det4(&self.entries)
    }

    /// `(positive, negative)` inertia indices, computed by exact symmetric
    /// elimination over the rationals (Sylvester's law of inertia).
    pub fn signature(&self) -> (usize, usize) {
        let mut m: Vec<Vec<Ratio<T>>> = self
            .entries
            .iter()
            .map(|row| row.iter().map(|v| Ratio::from_integer(v.clone())).collect())
            .collect();
        let n = m.len();
        let (mut pos, mut neg) = (0, 0);
        for k in 0..n {
            if m[k][k].is_zero() {
                if let Some(j) = (k + 1..n).find(|&j| !m[j][j].is_zero()) {
                    swap_sym(&mut m, k, j);
                } else if let Some(j) = (k + 1..n).find(|&j| !m[k][j].is_zero()) {
                    // all remaining diagonal entries vanish, so e_k + e_j has square 2·m[k][j]
                    add_sym(&mut m, k, j, &Ratio::one());
                }
            }
            eliminate(&mut m, k, &mut pos, &mut neg);
        }
        (pos, neg)
    }
}

fn swap_sym<T: Scalar>(m: &mut [Vec<Ratio<T>>], a: usize, b: usize) {
    m.swap(a, b);
    for row in m.iter_mut() {
        row.swap(a, b);
    }
}

// row_k += c·row_j, col_k += c·col_j
fn add_sym<T: Scalar>(m: &mut [Vec<Ratio<T>>], k: usize, j: usize, c: &Ratio<T>) {
    let src = m[j].clone();
    for (dst, v) in m[k].iter_mut().zip(src) {
        *dst = dst.clone() + v * c.clone();
    }
    for row in m.iter_mut() {
        let v = row[j].clone() * c.clone();
        row[k] = row[k].clone() + v;
    }
}

fn eliminate<T: Scalar>(m: &mut [Vec<Ratio<T>>], k: usize, pos: &mut usize, neg: &mut usize) {
    let n = m.len();
    let p = m[k][k].clone();
    if p.is_zero() {
        return;
    }
    if p.is_positive() {
        *pos += 1;
    } else {
        *neg += 1;
    }
    let (head, tail) = m.split_at_mut(k + 1);
    let pivot_row = &mut head[k];
    for row in tail.iter_mut() {
        let f = row[k].clone() / p.clone();
        for (dst, v) in row[k..].iter_mut().zip(&pivot_row[k..]) {
            *dst = dst.clone() - f.clone() * v.clone();
        }
    }
    for v in &mut pivot_row[k + 1..n] {
        *v = Ratio::zero();
    }
}

fn det3<T: Scalar>(m: [[&T; 3]; 3]) -> T {
    let minor = |a: &T, b: &T, c: &T, d: &T| a.clone() * d.clone() - b.clone() * c.clone();
    m[0][0].clone() * minor(m[1][1], m[1][2], m[2][1], m[2][2])
        - m[0][1].clone() * minor(m[1][0], m[1][2], m[2][0], m[2][2])
        + m[0][2].clone() * minor(m[1][0], m[1][1], m[2][0], m[2][1])
}

/// Laplace expansion along the first row.
pub fn det4<T: Scalar>(m: &[[T; 4]; 4]) -> T {
    let mut acc = T::zero();
    for c in 0..4 {
        if m[0][c].is_zero() {
            continue;
        }
        let cols: Vec<usize> = (0..4).filter(|&j| j != c).collect();
        let sub = std::array::from_fn(|i| std::array::from_fn(|j| &m[i + 1][cols[j]]));
        let term = m[0][c].clone() * det3(sub);
        acc = if c % 2 == 0 { acc + term } else { acc - term };
    }
    acc
}

/// Intersection matrix of `(F₁, F₂, Δ, Γ)`.
pub fn gram_standard<T: Scalar>(order: &CmOrder<T>) -> GramMatrix<T> {
    let s = order.norm_sigma();
    let t = order.norm_one_minus_sigma();
    let (z, o) = (T::zero(), T::one());
    GramMatrix::new([
        [z.clone(), o.clone(), o.clone(), o.clone()],
        [o.clone(), z.clone(), o.clone(), s.clone()],
        [o.clone(), o.clone(), z.clone(), t.clone()],
        [o, s, t, z],
    ])
}

/// Intersection matrix of `(F₁, F₂, ∇, Σ)`.
pub fn gram_orthogonal<T: Scalar>(order: &CmOrder<T>) -> GramMatrix<T> {
    let s = order.norm_sigma();
    let r = order.twice_re_sigma();
    let (z, o, two) = (T::zero(), T::one(), T::of(2));
    GramMatrix::new([
        [z.clone(), o.clone(), z.clone(), z.clone()],
        [o, z.clone(), z.clone(), z.clone()],
        [z.clone(), z.clone(), -two.clone(), -r.clone()],
        [z.clone(), z, -r, -(two * s)],
    ])
}

/// The intersection number `L·M`. Either argument may be in either basis.
pub fn pair<T: Scalar>(l: &DivisorClass<T>, m: &DivisorClass<T>, order: &CmOrder<T>) -> T {
    let b = change_basis(l, Basis::Orthogonal, order).coeffs;
    let c = change_basis(m, Basis::Orthogonal, order).coeffs;
    pair_orthogonal(&b, &c, order)
}

fn pair_orthogonal<T: Scalar>(b: &[T; 4], c: &[T; 4], order: &CmOrder<T>) -> T {
    let s = order.norm_sigma();
    let r = order.twice_re_sigma();
    let two = T::of(2);
    b[0].clone() * c[1].clone() + b[1].clone() * c[0].clone()
        - two.clone() * b[2].clone() * c[2].clone()
        - r * (b[2].clone() * c[3].clone() + b[3].clone() * c[2].clone())
        - two * s * b[3].clone() * c[3].clone()
}

/// `L²`. Always even.
pub fn self_int<T: Scalar>(l: &DivisorClass<T>, order: &CmOrder<T>) -> T {
    pair(l, l, order)
}

/// `L·(F₁+F₂)`.
pub fn fiber_degree<T: Scalar>(l: &DivisorClass<T>, order: &CmOrder<T>) -> T {
    let b = change_basis(l, Basis::Orthogonal, order).coeffs;
    b[0].clone() + b[1].clone()
}

/// Ample iff `L·(F₁+F₂) > 0` and `L² > 0`.
pub fn is_ample<T: Scalar>(l: &DivisorClass<T>, order: &CmOrder<T>) -> bool {
    fiber_degree(l, order).is_positive() && self_int(l, order).is_positive()
}

/// The quadratic `a₁a₂+a₁a₃+a₁a₄+a₂a₃+|σ|²a₂a₄+|1−σ|²a₃a₄` in standard
/// coefficients. Equals `L²/2`.
pub fn standard_half_square<T: Scalar>(l: &DivisorClass<T>, order: &CmOrder<T>) -> T {
    let [a1, a2, a3, a4] = change_basis(l, Basis::Standard, order).coeffs;
    let s = order.norm_sigma();
    let t = order.norm_one_minus_sigma();
    a1.clone() * a2.clone()
        + a1.clone() * a3.clone()
        + a1 * a4.clone()
        + a2.clone() * a3.clone()
        + s * a2 * a4.clone()
        + t * a3 * a4
}

/// Ampleness via the two standard-basis inequalities
/// `a₁+a₂+2a₃+(|σ|²+1)a₄ > 0` and `standard_half_square > 0`.
pub fn is_ample_standard<T: Scalar>(l: &DivisorClass<T>, order: &CmOrder<T>) -> bool {
    let std = change_basis(l, Basis::Standard, order);
    let [a1, a2, a3, a4] = std.coeffs.clone();
    let linear = a1 + a2 + T::of(2) * a3 + (order.norm_sigma() + T::one()) * a4;
    linear.is_positive() && standard_half_square(&std, order).is_positive()
}

/// Ampleness via the orthogonal-basis pair `b₁+b₂ > 0` and
/// `b₁b₂ − b₃² − |σ|²b₄² − 2Re(σ)b₃b₄ > 0`.
pub fn is_ample_orthogonal<T: Scalar>(l: &DivisorClass<T>, order: &CmOrder<T>) -> bool {
    let [b1, b2, b3, b4] = change_basis(l, Basis::Orthogonal, order).coeffs;
    let quad = b1.clone() * b2.clone()
        - b3.clone() * b3.clone()
        - order.norm_sigma() * b4.clone() * b4.clone()
        - order.twice_re_sigma() * b3 * b4;
    (b1 + b2).is_positive() && quad.is_positive()
}

/// True iff the gcd of the four coefficients is 1. Primitivity does not
/// depend on the basis since the change of basis is unimodular.
pub fn is_primitive<T: Scalar>(l: &DivisorClass<T>) -> Result<bool> {
    if l.is_zero() {
        return Err(Error::ZeroClass);
    }
    Ok(gcd_all(&l.coeffs).is_one())
}
