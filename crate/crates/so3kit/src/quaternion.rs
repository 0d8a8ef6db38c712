//! Hamilton quaternions over ℚ(√d) and their commutation predicates.
//!
//! Besides the algebra itself this module carries the two exact
//! characterizations used throughout the crate: two nonzero quaternions
//! anticommute exactly when both are pure and perpendicular, and they
//! commute exactly when their vector parts are linearly dependent.

use std::fmt;

use thiserror::Error;

use crate::scalar::QuadScalar;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuatError {
    #[error("operation requires nonzero quaternions")]
    ZeroQuaternion,
}

/// A quaternion `x0 + x1·i + x2·j + x3·k` with components in one ℚ(√d).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Quaternion {
    x0: QuadScalar,
    x1: QuadScalar,
    x2: QuadScalar,
    x3: QuadScalar,
}

impl Quaternion {
    /// Panics when the components do not share one ambient field.
    pub fn new(x0: QuadScalar, x1: QuadScalar, x2: QuadScalar, x3: QuadScalar) -> Self {
        let d = x0.ambient();
        assert!(
            x1.ambient() == d && x2.ambient() == d && x3.ambient() == d,
            "quaternion components must share one ambient field"
        );
        Quaternion { x0, x1, x2, x3 }
    }

    pub fn from_ints(x0: i64, x1: i64, x2: i64, x3: i64, d: u64) -> Self {
        Quaternion::new(
            QuadScalar::from_int(x0, d),
            QuadScalar::from_int(x1, d),
            QuadScalar::from_int(x2, d),
            QuadScalar::from_int(x3, d),
        )
    }

    pub fn from_ratios(parts: [(i64, i64); 4], d: u64) -> Self {
        let [a, b, c, e] = parts;
        Quaternion::new(
            QuadScalar::from_ratio(a.0, a.1, d),
            QuadScalar::from_ratio(b.0, b.1, d),
            QuadScalar::from_ratio(c.0, c.1, d),
            QuadScalar::from_ratio(e.0, e.1, d),
        )
    }

    pub fn zero(d: u64) -> Self {
        Self::from_ints(0, 0, 0, 0, d)
    }

    pub fn one(d: u64) -> Self {
        Self::from_ints(1, 0, 0, 0, d)
    }

    pub fn i(d: u64) -> Self {
        Self::from_ints(0, 1, 0, 0, d)
    }

    pub fn j(d: u64) -> Self {
        Self::from_ints(0, 0, 1, 0, d)
    }

    pub fn k(d: u64) -> Self {
        Self::from_ints(0, 0, 0, 1, d)
    }

    pub fn x0(&self) -> &QuadScalar {
        &self.x0
    }

    pub fn x1(&self) -> &QuadScalar {
        &self.x1
    }

    pub fn x2(&self) -> &QuadScalar {
        &self.x2
    }

    pub fn x3(&self) -> &QuadScalar {
        &self.x3
    }

    pub fn ambient(&self) -> u64 {
        self.x0.ambient()
    }

    pub fn is_zero(&self) -> bool {
        self.x0.is_zero() && self.is_real()
    }

    /// True when the vector part vanishes, i.e. the quaternion is a real
    /// (central) element.
    pub fn is_real(&self) -> bool {
        self.x1.is_zero() && self.x2.is_zero() && self.x3.is_zero()
    }

    /// True when the real part vanishes.
    pub fn is_pure(&self) -> bool {
        self.x0.is_zero()
    }

    pub fn conjugate(&self) -> Self {
        Quaternion {
            x0: self.x0.clone(),
            x1: -&self.x1,
            x2: -&self.x2,
            x3: -&self.x3,
        }
    }

    /// `x0² + x1² + x2² + x3²`; zero only for the zero quaternion because the
    /// ambient field embeds in ℝ.
    pub fn norm_sq(&self) -> QuadScalar {
        &self.x0 * &self.x0 + &self.x1 * &self.x1 + &self.x2 * &self.x2 + &self.x3 * &self.x3
    }

    pub fn scale(&self, s: &QuadScalar) -> Self {
        Quaternion {
            x0: &self.x0 * s,
            x1: &self.x1 * s,
            x2: &self.x2 * s,
            x3: &self.x3 * s,
        }
    }
}

impl std::ops::Mul<&Quaternion> for &Quaternion {
    type Output = Quaternion;

    /// Hamilton product induced by i² = j² = k² = −1 and ij = −ji = k.
    fn mul(self, y: &Quaternion) -> Quaternion {
        let (x0, x1, x2, x3) = (&self.x0, &self.x1, &self.x2, &self.x3);
        let (y0, y1, y2, y3) = (&y.x0, &y.x1, &y.x2, &y.x3);
        Quaternion {
            x0: x0 * y0 - x1 * y1 - x2 * y2 - x3 * y3,
            x1: x0 * y1 + x1 * y0 + x2 * y3 - x3 * y2,
            x2: x0 * y2 - x1 * y3 + x2 * y0 + x3 * y1,
            x3: x0 * y3 + x1 * y2 - x2 * y1 + x3 * y0,
        }
    }
}

impl std::ops::Mul<Quaternion> for Quaternion {
    type Output = Quaternion;
    fn mul(self, rhs: Quaternion) -> Quaternion {
        &self * &rhs
    }
}

impl std::ops::Add<&Quaternion> for &Quaternion {
    type Output = Quaternion;
    fn add(self, rhs: &Quaternion) -> Quaternion {
        Quaternion {
            x0: &self.x0 + &rhs.x0,
            x1: &self.x1 + &rhs.x1,
            x2: &self.x2 + &rhs.x2,
            x3: &self.x3 + &rhs.x3,
        }
    }
}

impl std::ops::Neg for &Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion {
            x0: -&self.x0,
            x1: -&self.x1,
            x2: -&self.x2,
            x3: -&self.x3,
        }
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.x0, self.x1, self.x2, self.x3)
    }
}

/// Outcome of comparing `xy` with `yx` for nonzero quaternions. `Neither`
/// holds exactly when the two image rotations fail to commute.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Trichotomy {
    Commute,
    Anticommute,
    Neither,
}

impl fmt::Display for Trichotomy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Trichotomy::Commute => "Commute",
            Trichotomy::Anticommute => "Anticommute",
            Trichotomy::Neither => "Neither",
        };
        f.write_str(s)
    }
}

/// Dot product of the vector parts is zero.
pub fn perp(x: &Quaternion, y: &Quaternion) -> bool {
    let dot = x.x1() * y.x1() + x.x2() * y.x2() + x.x3() * y.x3();
    dot.is_zero()
}

/// Decides `xy = yx` by direct multiplication.
pub fn commutes(x: &Quaternion, y: &Quaternion) -> bool {
    x * y == y * x
}

/// The linear-dependence criterion for commutation: all three 2×2 minors of
/// the vector parts vanish. Equivalent to [`commutes`]; both routes are kept
/// so tests can play them against each other.
pub fn vector_parts_dependent(x: &Quaternion, y: &Quaternion) -> bool {
    let m1 = x.x2() * y.x3() - x.x3() * y.x2();
    let m2 = x.x3() * y.x1() - x.x1() * y.x3();
    let m3 = x.x1() * y.x2() - x.x2() * y.x1();
    m1.is_zero() && m2.is_zero() && m3.is_zero()
}

/// Decides `xy = −yx` by direct multiplication. Errors on zero input.
pub fn anticommutes(x: &Quaternion, y: &Quaternion) -> Result<bool, QuatError> {
    if x.is_zero() || y.is_zero() {
        return Err(QuatError::ZeroQuaternion);
    }
    Ok(x * y == -&(y * x))
}

/// The structural criterion for anticommutation: both real parts vanish and
/// the vector parts are perpendicular. Equivalent to [`anticommutes`] for
/// nonzero quaternions; kept separate as the independent route.
pub fn anticommute_criterion(x: &Quaternion, y: &Quaternion) -> bool {
    x.x0().is_zero() && y.x0().is_zero() && perp(x, y)
}

/// Classifies a nonzero pair as commuting, anticommuting, or neither.
/// Commutation is checked first so that a pair can never report both.
pub fn commutation_trichotomy(x: &Quaternion, y: &Quaternion) -> Result<Trichotomy, QuatError> {
    if x.is_zero() || y.is_zero() {
        return Err(QuatError::ZeroQuaternion);
    }
    let xy = x * y;
    let yx = y * x;
    if xy == yx {
        Ok(Trichotomy::Commute)
    } else if xy == -&yx {
        Ok(Trichotomy::Anticommute)
    } else {
        Ok(Trichotomy::Neither)
    }
}
