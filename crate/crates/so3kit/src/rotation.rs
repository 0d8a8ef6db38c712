//! Exact SO(3) matrices, the quaternion-to-rotation homomorphism, rotation
//! axes, and an element-order decision procedure whose "infinite" answer is a
//! certificate rather than a heuristic.
//!
//! No angle ever appears as data: every trigonometric statement is recast as
//! an exact matrix or axis predicate over ℚ(√d).

use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::quaternion::Quaternion;
use crate::scalar::{QuadScalar, ScalarError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RotError {
    #[error("the zero quaternion has no rotation image")]
    ZeroQuaternion,
    #[error("the identity rotation has no axis")]
    IdentityHasNoAxis,
    #[error("matrix is not orthogonal (MᵀM ≠ E)")]
    NotOrthogonal,
    #[error("matrix has determinant ≠ 1")]
    DeterminantNotOne,
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// An exact rotation: a 3×3 matrix over ℚ(√d) with `MᵀM = E` and `det M = 1`,
/// both checked at construction.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Rot3 {
    m: [[QuadScalar; 3]; 3],
}

impl Rot3 {
    /// Validates orthogonality and determinant before accepting the entries.
    pub fn new(m: [[QuadScalar; 3]; 3]) -> Result<Self, RotError> {
        let d = m[0][0].ambient();
        for row in &m {
            for entry in row {
                if entry.ambient() != d {
                    return Err(RotError::Scalar(ScalarError::AmbientMismatch {
                        left: d,
                        right: entry.ambient(),
                    }));
                }
            }
        }
        let candidate = Rot3 { m };
        for r in 0..3 {
            for c in r..3 {
                let dot = candidate.row_dot(r, c);
                let expected = if r == c {
                    QuadScalar::one(d)
                } else {
                    QuadScalar::zero(d)
                };
                if dot != expected {
                    return Err(RotError::NotOrthogonal);
                }
            }
        }
        if candidate.det() != QuadScalar::one(d) {
            return Err(RotError::DeterminantNotOne);
        }
        Ok(candidate)
    }

    /// Builds a rotation with all-rational entries `num/den` in ambient `d`.
    pub fn from_ratios(entries: [[(i64, i64); 3]; 3], d: u64) -> Result<Self, RotError> {
        let m = entries.map(|row| row.map(|(n, q)| QuadScalar::from_ratio(n, q, d)));
        Self::new(m)
    }

    pub fn identity(d: u64) -> Self {
        let m = std::array::from_fn(|r| {
            std::array::from_fn(|c| {
                if r == c {
                    QuadScalar::one(d)
                } else {
                    QuadScalar::zero(d)
                }
            })
        });
        Rot3 { m }
    }

    fn row_dot(&self, r1: usize, r2: usize) -> QuadScalar {
        &self.m[r1][0] * &self.m[r2][0]
            + &self.m[r1][1] * &self.m[r2][1]
            + &self.m[r1][2] * &self.m[r2][2]
    }

    fn det(&self) -> QuadScalar {
        let m = &self.m;
        &m[0][0] * &(&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
            - &m[0][1] * &(&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
            + &m[0][2] * &(&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
    }

    pub fn ambient(&self) -> u64 {
        self.m[0][0].ambient()
    }

    pub fn entry(&self, r: usize, c: usize) -> &QuadScalar {
        &self.m[r][c]
    }

    pub fn entries(&self) -> &[[QuadScalar; 3]; 3] {
        &self.m
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.ambient())
    }

    /// Transpose, which for an orthogonal matrix is the inverse.
    pub fn inverse(&self) -> Self {
        let m = std::array::from_fn(|r| std::array::from_fn(|c| self.m[c][r].clone()));
        Rot3 { m }
    }

    pub fn trace(&self) -> QuadScalar {
        &self.m[0][0] + &self.m[1][1] + &self.m[2][2]
    }

    /// Integer power; negative exponents go through the inverse.
    pub fn pow(&self, n: i64) -> Self {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut acc = Self::identity(self.ambient());
        for _ in 0..n.unsigned_abs() {
            acc = &acc * &base;
        }
        acc
    }

    pub fn commutes_with(&self, other: &Rot3) -> bool {
        self * other == other * self
    }

    /// The fixed line of a non-identity rotation. Generic rotations are read
    /// off the skew part `(m32−m23, m13−m31, m21−m12)`; for half turns the
    /// skew part vanishes exactly and any nonzero column of `M + E`
    /// (deterministically the first) is parallel to the axis.
    pub fn axis(&self) -> Result<Axis, RotError> {
        if self.is_identity() {
            return Err(RotError::IdentityHasNoAxis);
        }
        let m = &self.m;
        let skew = [
            &m[2][1] - &m[1][2],
            &m[0][2] - &m[2][0],
            &m[1][0] - &m[0][1],
        ];
        if let Some(axis) = Axis::from_direction(skew) {
            return Ok(axis);
        }
        let d = self.ambient();
        let one = QuadScalar::one(d);
        let from_shifted_column = (0..3).find_map(|c| {
            let col = std::array::from_fn(|r| {
                if r == c {
                    &m[r][c] + &one
                } else {
                    m[r][c].clone()
                }
            });
            Axis::from_direction(col)
        });
        Ok(from_shifted_column.expect("a non-identity rotation fixes a line, so M + E is nonzero"))
    }

    /// Applies the rotation to a column vector.
    pub fn apply(&self, v: &[QuadScalar; 3]) -> [QuadScalar; 3] {
        std::array::from_fn(|r| {
            &self.m[r][0] * &v[0] + &self.m[r][1] * &v[1] + &self.m[r][2] * &v[2]
        })
    }

    /// Decides the order of the rotation. Powers are iterated up to `cap`;
    /// if the identity never appears the trace certificate takes over:
    /// `t = trace − 1` is twice the cosine of the rotation angle, and a
    /// finite-order rotation forces `t` to be an algebraic integer with both
    /// Galois conjugates in [−2, 2]. A certificate violation therefore
    /// proves infinite order.
    pub fn element_order(&self, cap: u64) -> OrderResult {
        assert!(cap >= 1, "cap must be positive");
        let identity = Self::identity(self.ambient());
        let mut power = self.clone();
        for n in 1..=cap {
            if power == identity {
                return OrderResult::Finite { order: n };
            }
            power = &power * self;
        }
        let one = QuadScalar::one(self.ambient());
        let trace_term = self.trace() - one;
        if admits_finite_order(&trace_term) {
            OrderResult::UnknownWithinCap { cap }
        } else {
            OrderResult::InfiniteCertified { trace_term }
        }
    }
}

impl std::ops::Mul<&Rot3> for &Rot3 {
    type Output = Rot3;

    /// Products of valid rotations stay valid, so no re-validation happens
    /// here.
    fn mul(self, rhs: &Rot3) -> Rot3 {
        let m = std::array::from_fn(|r| {
            std::array::from_fn(|c| {
                &self.m[r][0] * &rhs.m[0][c]
                    + &self.m[r][1] * &rhs.m[1][c]
                    + &self.m[r][2] * &rhs.m[2][c]
            })
        });
        Rot3 { m }
    }
}

impl std::ops::Mul<Rot3> for Rot3 {
    type Output = Rot3;
    fn mul(self, rhs: Rot3) -> Rot3 {
        &self * &rhs
    }
}

impl fmt::Display for Rot3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (r, row) in self.m.iter().enumerate() {
            if r > 0 {
                write!(f, ",")?;
            }
            write!(f, "[{},{},{}]", row[0], row[1], row[2])?;
        }
        write!(f, "]")
    }
}

/// The image of a nonzero quaternion under the homomorphism onto SO(3):
/// the classical 3×3 form scaled by the inverse norm. The kernel is exactly
/// the nonzero reals, so `theta(λx) = theta(x)` for rational λ ≠ 0.
pub fn theta(x: &Quaternion) -> Result<Rot3, RotError> {
    if x.is_zero() {
        return Err(RotError::ZeroQuaternion);
    }
    let (x0, x1, x2, x3) = (x.x0(), x.x1(), x.x2(), x.x3());
    let two = QuadScalar::from_int(2, x.ambient());
    let sq = |a: &QuadScalar| a * a;
    let raw = [
        [
            sq(x0) + sq(x1) - sq(x2) - sq(x3),
            &two * &(x1 * x2 - x0 * x3),
            &two * &(x1 * x3 + x0 * x2),
        ],
        [
            &two * &(x1 * x2 + x0 * x3),
            sq(x0) - sq(x1) + sq(x2) - sq(x3),
            &two * &(x2 * x3 - x0 * x1),
        ],
        [
            &two * &(x1 * x3 - x0 * x2),
            &two * &(x2 * x3 + x0 * x1),
            sq(x0) - sq(x1) - sq(x2) + sq(x3),
        ],
    ];
    let norm = x.norm_sq();
    let inv = norm.recip().expect("nonzero quaternion has nonzero norm");
    let m = raw.map(|row| row.map(|e| &e * &inv));
    Ok(Rot3::new(m).expect("quaternion images are rotations"))
}

/// A rotation axis in canonical scale: the first nonzero coordinate is 1, so
/// two axes span the same line exactly when they are equal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Axis {
    v: [QuadScalar; 3],
}

impl Axis {
    /// Canonicalizes a direction vector; `None` for the zero vector.
    pub fn from_direction(v: [QuadScalar; 3]) -> Option<Self> {
        let first = v.iter().find(|c| !c.is_zero())?;
        let inv = first.recip().expect("nonzero scalar");
        Some(Axis {
            v: [&v[0] * &inv, &v[1] * &inv, &v[2] * &inv],
        })
    }

    pub fn from_ints(x: i64, y: i64, z: i64, d: u64) -> Option<Self> {
        Self::from_direction([
            QuadScalar::from_int(x, d),
            QuadScalar::from_int(y, d),
            QuadScalar::from_int(z, d),
        ])
    }

    pub fn coordinates(&self) -> &[QuadScalar; 3] {
        &self.v
    }

    pub fn dot(&self, other: &Axis) -> QuadScalar {
        &self.v[0] * &other.v[0] + &self.v[1] * &other.v[1] + &self.v[2] * &other.v[2]
    }

    pub fn is_perpendicular_to(&self, other: &Axis) -> bool {
        self.dot(other).is_zero()
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.v[0], self.v[1], self.v[2])
    }
}

/// Outcome of [`Rot3::element_order`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum OrderResult {
    /// `M^order = E` and no smaller positive power is the identity.
    Finite { order: u64 },
    /// The trace certificate failed, which proves infinite order.
    InfiniteCertified { trace_term: QuadScalar },
    /// The certificate allows finite order but no identity power appeared
    /// within the cap. Cannot occur over ℚ(√d) once the cap reaches 12, but
    /// the honest outcome is kept.
    UnknownWithinCap { cap: u64 },
}

impl OrderResult {
    pub fn certificate(&self) -> String {
        match self {
            OrderResult::Finite { order } => format!("identity reached at power {order}"),
            OrderResult::InfiniteCertified { trace_term } => format!(
                "2cos(angle) = {trace_term} is not an algebraic integer with all conjugates in [-2,2]"
            ),
            OrderResult::UnknownWithinCap { cap } => {
                format!("no identity power within cap {cap}, certificate inconclusive")
            }
        }
    }
}

impl fmt::Display for OrderResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderResult::Finite { order } => write!(f, "finite order {order}"),
            OrderResult::InfiniteCertified { .. } => {
                write!(f, "infinite order ({})", self.certificate())
            }
            OrderResult::UnknownWithinCap { cap } => write!(f, "unknown within cap {cap}"),
        }
    }
}

/// Whether `t = 2cos(angle)` is consistent with finite order: `t` must be an
/// algebraic integer of ℚ(√d) — for `t = a + b√d` that means `2a` and
/// `a² − d·b²` are integers, for rational `t` simply `t ∈ ℤ` — and both
/// Galois conjugates must lie in [−2, 2]. For rational `t` the two conditions
/// collapse to `t ∈ {−2, −1, 0, 1, 2}`.
pub fn admits_finite_order(t: &QuadScalar) -> bool {
    let a = t.rat();
    let b = t.surd();
    let is_algebraic_integer = if b.is_zero() {
        a.is_integer()
    } else {
        let two_a = a * num_rational::BigRational::from_integer(2.into());
        let norm = a * a
            - b * b * num_rational::BigRational::from_integer(num_bigint::BigInt::from(t.ambient()));
        two_a.is_integer() && norm.is_integer()
    };
    if !is_algebraic_integer {
        return false;
    }
    let two = QuadScalar::from_int(2, t.ambient());
    let conj = t.surd_conjugate();
    let in_bounds = |v: &QuadScalar| !(v + &two).is_negative() && !(&two - v).is_negative();
    in_bounds(t) && in_bounds(&conj)
}
