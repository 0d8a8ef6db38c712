//! Exact arithmetic in the real quadratic field ℚ(√d).
//!
//! A [`QuadScalar`] is a value `rat + surd·√d` where `rat` and `surd` are
//! reduced arbitrary-precision rationals and `d` is a fixed squarefree
//! non-negative integer shared by every scalar of one computation context
//! (`d = 0` means plain ℚ). Canonical components make equality, hashing and
//! ordering exact; nothing in this crate ever rounds.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Errors produced by scalar construction, parsing and checked arithmetic.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("ambient field mismatch: √{left} vs √{right}")]
    AmbientMismatch { left: u64, right: u64 },
    #[error("{0} is not a valid ambient: must be 0 or a squarefree integer ≥ 2")]
    InvalidAmbient(u64),
    #[error("ambient d = 0 admits no √d component")]
    SurdInRationalAmbient,
    #[error("cannot parse scalar {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

/// Exact sign of a real number.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

/// Checks that `d` may serve as the ambient radicand of a context.
pub fn validate_ambient(d: u64) -> Result<(), ScalarError> {
    if d == 0 {
        return Ok(());
    }
    if d == 1 {
        return Err(ScalarError::InvalidAmbient(d));
    }
    let mut p = 2u64;
    while p.checked_mul(p).is_some_and(|sq| sq <= d) {
        if d.is_multiple_of(p * p) {
            return Err(ScalarError::InvalidAmbient(d));
        }
        p += 1;
    }
    Ok(())
}

/// An exact element `rat + surd·√d` of ℚ(√d).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QuadScalar {
    rat: BigRational,
    surd: BigRational,
    d: u64,
}

fn rational_sign(r: &BigRational) -> Sign {
    if r.is_zero() {
        Sign::Zero
    } else if r.is_positive() {
        Sign::Positive
    } else {
        Sign::Negative
    }
}

impl QuadScalar {
    /// Builds a scalar from explicit components, validating the ambient.
    pub fn try_new(rat: BigRational, surd: BigRational, d: u64) -> Result<Self, ScalarError> {
        validate_ambient(d)?;
        if d == 0 && !surd.is_zero() {
            return Err(ScalarError::SurdInRationalAmbient);
        }
        Ok(QuadScalar { rat, surd, d })
    }

    /// Rational scalar `num/den` in ambient `d`.
    ///
    /// Panics if `den == 0` or `d` is not a valid ambient; intended for
    /// literals whose validity is clear at the call site.
    pub fn from_ratio(num: i64, den: i64, d: u64) -> Self {
        assert!(den != 0, "zero denominator");
        validate_ambient(d).expect("invalid ambient");
        QuadScalar {
            rat: BigRational::new(BigInt::from(num), BigInt::from(den)),
            surd: BigRational::zero(),
            d,
        }
    }

    /// Integer scalar in ambient `d`. Panics on an invalid ambient.
    pub fn from_int(n: i64, d: u64) -> Self {
        Self::from_ratio(n, 1, d)
    }

    /// Scalar `rn/rd + sn/sd·√d`. Panics on zero denominators, an invalid
    /// ambient, or a surd component with `d = 0`.
    pub fn from_parts(rn: i64, rd: i64, sn: i64, sd: i64, d: u64) -> Self {
        assert!(rd != 0 && sd != 0, "zero denominator");
        let surd = BigRational::new(BigInt::from(sn), BigInt::from(sd));
        Self::try_new(
            BigRational::new(BigInt::from(rn), BigInt::from(rd)),
            surd,
            d,
        )
        .expect("invalid scalar parts")
    }

    pub fn zero(d: u64) -> Self {
        Self::from_int(0, d)
    }

    pub fn one(d: u64) -> Self {
        Self::from_int(1, d)
    }

    /// The element √d itself (which is 0 when d = 0).
    pub fn sqrt_d(d: u64) -> Self {
        if d == 0 {
            Self::zero(0)
        } else {
            Self::from_parts(0, 1, 1, 1, d)
        }
    }

    pub fn ambient(&self) -> u64 {
        self.d
    }

    pub fn rat(&self) -> &BigRational {
        &self.rat
    }

    pub fn surd(&self) -> &BigRational {
        &self.surd
    }

    pub fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.surd.is_zero()
    }

    /// True when the value lies in ℚ (no √d component).
    pub fn is_rational(&self) -> bool {
        self.surd.is_zero()
    }

    fn require_same_ambient(&self, other: &Self) -> u64 {
        assert_eq!(
            self.d, other.d,
            "ambient field mismatch: √{} vs √{}",
            self.d, other.d
        );
        self.d
    }

    /// Exact sign of the real number `rat + surd·√d`, decided without any
    /// floating point: when the two components disagree in sign, compare
    /// `rat²` against `d·surd²` by exact rational arithmetic.
    pub fn sign(&self) -> Sign {
        if self.surd.is_zero() {
            return rational_sign(&self.rat);
        }
        if self.rat.is_zero() {
            return rational_sign(&self.surd);
        }
        let rat_positive = self.rat.is_positive();
        if rat_positive == self.surd.is_positive() {
            return if rat_positive {
                Sign::Positive
            } else {
                Sign::Negative
            };
        }
        let rat_sq = &self.rat * &self.rat;
        let d_surd_sq = &self.surd * &self.surd * BigRational::from_integer(BigInt::from(self.d));
        match rat_sq.cmp(&d_surd_sq) {
            Ordering::Greater => rational_sign(&self.rat),
            Ordering::Less => rational_sign(&self.surd),
            // rat² = d·surd² with both nonzero would make √d rational;
            // unreachable for a squarefree ambient, kept for totality.
            Ordering::Equal => Sign::Zero,
        }
    }

    pub fn is_positive(&self) -> bool {
        self.sign() == Sign::Positive
    }

    pub fn is_negative(&self) -> bool {
        self.sign() == Sign::Negative
    }

    /// Galois conjugate `rat − surd·√d`; fixes ℚ and is multiplicative.
    pub fn surd_conjugate(&self) -> Self {
        QuadScalar {
            rat: self.rat.clone(),
            surd: -self.surd.clone(),
            d: self.d,
        }
    }

    /// Multiplicative inverse. The norm `rat² − d·surd²` of a nonzero element
    /// is nonzero because √d is irrational for every valid ambient d ≥ 2.
    pub fn recip(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let norm = &self.rat * &self.rat
            - &self.surd * &self.surd * BigRational::from_integer(BigInt::from(self.d));
        debug_assert!(!norm.is_zero());
        Ok(QuadScalar {
            rat: &self.rat / &norm,
            surd: -(&self.surd / &norm),
            d: self.d,
        })
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self, ScalarError> {
        self.checked_ambient(rhs)?;
        Ok(self + rhs)
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self, ScalarError> {
        self.checked_ambient(rhs)?;
        Ok(self - rhs)
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self, ScalarError> {
        self.checked_ambient(rhs)?;
        Ok(self * rhs)
    }

    pub fn try_div(&self, rhs: &Self) -> Result<Self, ScalarError> {
        self.checked_ambient(rhs)?;
        Ok(self * &rhs.recip()?)
    }

    fn checked_ambient(&self, rhs: &Self) -> Result<(), ScalarError> {
        if self.d == rhs.d {
            Ok(())
        } else {
            Err(ScalarError::AmbientMismatch {
                left: self.d,
                right: rhs.d,
            })
        }
    }

    /// Total order by real value. Panics when the ambients differ.
    pub fn cmp_real(&self, other: &Self) -> Ordering {
        self.require_same_ambient(other);
        match (self - other).sign() {
            Sign::Negative => Ordering::Less,
            Sign::Zero => Ordering::Equal,
            Sign::Positive => Ordering::Greater,
        }
    }

    /// Approximate value, for diagnostics and cross-checks only; no
    /// production decision is ever based on this.
    pub fn to_f64(&self) -> f64 {
        let r = self.rat.to_f64().unwrap_or(f64::NAN);
        let s = self.surd.to_f64().unwrap_or(f64::NAN);
        r + s * (self.d as f64).sqrt()
    }

    /// Parses the wire syntax, e.g. `-3/5`, `2`, `1/2+1/2√3`, `7/4-√3`, `√5`.
    /// A √ term must name exactly the ambient radicand.
    pub fn parse(input: &str, ambient: u64) -> Result<Self, ScalarError> {
        validate_ambient(ambient)?;
        let s = input.trim();
        if s.is_empty() {
            return Err(parse_err(input, "empty string"));
        }
        let Some(radical_pos) = s.find('√') else {
            let rat = parse_rational(s).map_err(|reason| parse_err(input, &reason))?;
            return QuadScalar::try_new(rat, BigRational::zero(), ambient);
        };
        let d_str = &s[radical_pos + '√'.len_utf8()..];
        let d: u64 = d_str
            .parse()
            .map_err(|_| parse_err(input, "invalid radicand after √"))?;
        if d != ambient {
            return Err(ScalarError::AmbientMismatch {
                left: ambient,
                right: d,
            });
        }
        let head = &s[..radical_pos];
        // Split the head into a rational part and a signed surd coefficient at
        // the last '+'/'-' that is not a leading sign.
        let mut split_idx = None;
        for (i, c) in head.char_indices() {
            if i > 0 && (c == '+' || c == '-') {
                split_idx = Some(i);
            }
        }
        let (rat, coeff) = match split_idx {
            None => (
                BigRational::zero(),
                parse_coefficient(head).map_err(|reason| parse_err(input, &reason))?,
            ),
            Some(i) => (
                parse_rational(&head[..i]).map_err(|reason| parse_err(input, &reason))?,
                parse_coefficient(&head[i..]).map_err(|reason| parse_err(input, &reason))?,
            ),
        };
        QuadScalar::try_new(rat, coeff, ambient)
    }
}

fn parse_err(input: &str, reason: &str) -> ScalarError {
    ScalarError::Parse {
        input: input.to_string(),
        reason: reason.to_string(),
    }
}

fn parse_rational(s: &str) -> Result<BigRational, String> {
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: BigInt = num_str
        .parse()
        .map_err(|_| format!("invalid numerator {num_str:?}"))?;
    let den: BigInt = den_str
        .parse()
        .map_err(|_| format!("invalid denominator {den_str:?}"))?;
    if den <= BigInt::ZERO {
        return Err(format!("denominator must be positive, got {den_str:?}"));
    }
    Ok(BigRational::new(num, den))
}

/// Coefficient in front of √d: empty or a bare sign means ±1.
fn parse_coefficient(s: &str) -> Result<BigRational, String> {
    match s {
        "" | "+" => Ok(BigRational::from_integer(BigInt::from(1))),
        "-" => Ok(BigRational::from_integer(BigInt::from(-1))),
        _ => parse_rational(s),
    }
}

impl fmt::Display for QuadScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.surd.is_zero() {
            write!(f, "{}", self.rat)
        } else {
            let sign = if self.surd.is_negative() { '-' } else { '+' };
            write!(f, "{}{}{}√{}", self.rat, sign, self.surd.abs(), self.d)
        }
    }
}

impl PartialOrd for QuadScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuadScalar {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_real(other)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, |$a:ident, $b:ident| $body:expr) => {
        impl std::ops::$trait<&QuadScalar> for &QuadScalar {
            type Output = QuadScalar;
            fn $method(self, rhs: &QuadScalar) -> QuadScalar {
                let d = self.require_same_ambient(rhs);
                let ($a, $b) = (self, rhs);
                let (rat, surd) = $body;
                QuadScalar { rat, surd, d }
            }
        }
        impl std::ops::$trait<QuadScalar> for QuadScalar {
            type Output = QuadScalar;
            fn $method(self, rhs: QuadScalar) -> QuadScalar {
                std::ops::$trait::$method(&self, &rhs)
            }
        }
        impl std::ops::$trait<&QuadScalar> for QuadScalar {
            type Output = QuadScalar;
            fn $method(self, rhs: &QuadScalar) -> QuadScalar {
                std::ops::$trait::$method(&self, rhs)
            }
        }
        impl std::ops::$trait<QuadScalar> for &QuadScalar {
            type Output = QuadScalar;
            fn $method(self, rhs: QuadScalar) -> QuadScalar {
                std::ops::$trait::$method(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| (&a.rat + &b.rat, &a.surd + &b.surd));
forward_binop!(Sub, sub, |a, b| (&a.rat - &b.rat, &a.surd - &b.surd));
forward_binop!(Mul, mul, |a, b| {
    let d_big = BigRational::from_integer(BigInt::from(a.d));
    (
        &a.rat * &b.rat + (&a.surd * &b.surd) * d_big,
        &a.rat * &b.surd + &a.surd * &b.rat,
    )
});

impl std::ops::Neg for &QuadScalar {
    type Output = QuadScalar;
    fn neg(self) -> QuadScalar {
        QuadScalar {
            rat: -self.rat.clone(),
            surd: -self.surd.clone(),
            d: self.d,
        }
    }
}

impl std::ops::Neg for QuadScalar {
    type Output = QuadScalar;
    fn neg(self) -> QuadScalar {
        -&self
    }
}
