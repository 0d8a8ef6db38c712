//! Deterministic random generation for the verification suite and tests.
//!
//! A fixed seed reproduces the exact same stream on every platform, so the
//! suite's reports are byte-stable. Components are drawn as fractions p/q
//! with |p| ≤ 20 and 1 ≤ q ≤ 10; in a surd-enabled context the √d
//! coefficient is drawn from the same distribution.

use crate::quaternion::Quaternion;
use crate::scalar::QuadScalar;

/// SplitMix64: tiny, fast, and stable across platforms.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    /// Uniform value in `0..n`.
    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n > 0);
        self.next_u64() % n
    }

    /// Uniform value in `lo..=hi`.
    pub fn range_i64(&mut self, lo: i64, hi: i64) -> i64 {
        debug_assert!(lo <= hi);
        lo + self.below((hi - lo + 1) as u64) as i64
    }
}

/// Draws scalars and quaternions in one ambient field.
pub struct QuatFuzz {
    rng: SplitMix64,
    ambient: u64,
    with_surd: bool,
}

impl QuatFuzz {
    /// `with_surd` controls whether √d coefficients are drawn; it is ignored
    /// when `ambient == 0`.
    pub fn new(seed: u64, ambient: u64, with_surd: bool) -> Self {
        QuatFuzz {
            rng: SplitMix64::new(seed),
            ambient,
            with_surd: with_surd && ambient != 0,
        }
    }

    pub fn ambient(&self) -> u64 {
        self.ambient
    }

    fn small_fraction(&mut self) -> (i64, i64) {
        (self.rng.range_i64(-20, 20), self.rng.range_i64(1, 10))
    }

    pub fn scalar(&mut self) -> QuadScalar {
        let (rn, rd) = self.small_fraction();
        if self.with_surd {
            let (sn, sd) = self.small_fraction();
            QuadScalar::from_parts(rn, rd, sn, sd, self.ambient)
        } else {
            QuadScalar::from_ratio(rn, rd, self.ambient)
        }
    }

    pub fn nonzero_scalar(&mut self) -> QuadScalar {
        loop {
            let s = self.scalar();
            if !s.is_zero() {
                return s;
            }
        }
    }

    /// A nonzero rational scalar (no surd part even when the ambient has
    /// one), e.g. for kernel-scaling checks.
    pub fn nonzero_rational(&mut self) -> QuadScalar {
        loop {
            let (rn, rd) = self.small_fraction();
            if rn != 0 {
                return QuadScalar::from_ratio(rn, rd, self.ambient);
            }
        }
    }

    pub fn quaternion(&mut self) -> Quaternion {
        Quaternion::new(self.scalar(), self.scalar(), self.scalar(), self.scalar())
    }

    pub fn nonzero_quaternion(&mut self) -> Quaternion {
        loop {
            let q = self.quaternion();
            if !q.is_zero() {
                return q;
            }
        }
    }

    /// Nonzero vector part, i.e. a non-central quaternion.
    pub fn non_real_quaternion(&mut self) -> Quaternion {
        loop {
            let q = self.quaternion();
            if !q.is_real() {
                return q;
            }
        }
    }

    /// Zero real part and nonzero vector part.
    pub fn pure_quaternion(&mut self) -> Quaternion {
        loop {
            let q = Quaternion::new(
                QuadScalar::zero(self.ambient),
                self.scalar(),
                self.scalar(),
                self.scalar(),
            );
            if !q.is_zero() {
                return q;
            }
        }
    }

    /// A pure pair with exactly perpendicular vector parts, built from a
    /// cross product so the dot product vanishes identically.
    pub fn perpendicular_pure_pair(&mut self) -> (Quaternion, Quaternion) {
        loop {
            let x = self.pure_quaternion();
            let r = self.pure_quaternion();
            let y1 = x.x2() * r.x3() - x.x3() * r.x2();
            let y2 = x.x3() * r.x1() - x.x1() * r.x3();
            let y3 = x.x1() * r.x2() - x.x2() * r.x1();
            let y = Quaternion::new(QuadScalar::zero(self.ambient), y1, y2, y3);
            if !y.is_zero() {
                return (x, y);
            }
        }
    }

    /// A pair guaranteed to commute: y = α + β·x with β ≠ 0, which keeps y
    /// non-real whenever x is.
    pub fn commuting_companion(&mut self, x: &Quaternion) -> Quaternion {
        let alpha = self.scalar();
        let beta = self.nonzero_scalar();
        let scaled = x.scale(&beta);
        Quaternion::new(
            &alpha + scaled.x0(),
            scaled.x1().clone(),
            scaled.x2().clone(),
            scaled.x3().clone(),
        )
    }

    /// A pure quaternion of the form x2·j + x3·k, whose rotation image is a
    /// half turn about an axis in the yz-plane.
    pub fn yz_involution_quaternion(&mut self) -> Quaternion {
        loop {
            let q = Quaternion::new(
                QuadScalar::zero(self.ambient),
                QuadScalar::zero(self.ambient),
                self.scalar(),
                self.scalar(),
            );
            if !q.is_zero() {
                return q;
            }
        }
    }
}
