//! Exact scalars: arbitrary-precision rationals and prime-field residues.
//!
//! A [`FieldDescriptor`] names the ground field and owns all arithmetic, so a
//! bare [`Scalar`] stays small. Canonical form is unique — rationals fully
//! reduced with positive denominator, residues in `[0, p)` — and every
//! operation is exact; no floating point exists anywhere in this crate.

use crate::error::{Error, Result};
use num::{BigInt, BigRational, One, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// Largest allowed prime modulus (exclusive): keeps products inside `u64`.
pub const MAX_MODULUS: u64 = 1 << 31;

/// The ground field: exact rationals or integers modulo a prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum FieldDescriptor {
    Rational,
    Prime { p: u64 },
}

/// An element of the ambient field, in canonical form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Scalar {
    Rational(BigRational),
    Residue(u64),
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl FieldDescriptor {
    pub fn rational() -> Self {
        FieldDescriptor::Rational
    }

    pub fn prime(p: u64) -> Result<Self> {
        let f = FieldDescriptor::Prime { p };
        f.validate()?;
        Ok(f)
    }

    /// Check the descriptor itself: the modulus must be a prime below 2³¹.
    pub fn validate(&self) -> Result<()> {
        match self {
            FieldDescriptor::Rational => Ok(()),
            FieldDescriptor::Prime { p } => {
                if *p >= MAX_MODULUS || !is_prime(*p) {
                    Err(Error::NonPrime { p: *p })
                } else {
                    Ok(())
                }
            }
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldDescriptor::Rational => Scalar::Rational(BigRational::zero()),
            FieldDescriptor::Prime { .. } => Scalar::Residue(0),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            FieldDescriptor::Rational => Scalar::Rational(BigRational::one()),
            FieldDescriptor::Prime { .. } => Scalar::Residue(1),
        }
    }

    /// Embed a machine integer (reduced into range for a prime field).
    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            FieldDescriptor::Rational => Scalar::Rational(BigRational::from_integer(n.into())),
            FieldDescriptor::Prime { p } => {
                let m = n.rem_euclid(*p as i64);
                Scalar::Residue(m as u64)
            }
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldDescriptor::Rational, Scalar::Rational(x), Scalar::Rational(y)) => {
                Scalar::Rational(x + y)
            }
            (FieldDescriptor::Prime { p }, Scalar::Residue(x), Scalar::Residue(y)) => {
                Scalar::Residue((x + y) % p)
            }
            _ => unreachable!("scalar kind mismatch slipped past construction"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldDescriptor::Rational, Scalar::Rational(x), Scalar::Rational(y)) => {
                Scalar::Rational(x - y)
            }
            (FieldDescriptor::Prime { p }, Scalar::Residue(x), Scalar::Residue(y)) => {
                Scalar::Residue((x + p - y) % p)
            }
            _ => unreachable!("scalar kind mismatch slipped past construction"),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldDescriptor::Rational, Scalar::Rational(x), Scalar::Rational(y)) => {
                Scalar::Rational(x * y)
            }
            (FieldDescriptor::Prime { p }, Scalar::Residue(x), Scalar::Residue(y)) => {
                // p < 2³¹ keeps the product inside u64.
                Scalar::Residue((x * y) % p)
            }
            _ => unreachable!("scalar kind mismatch slipped past construction"),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (FieldDescriptor::Rational, Scalar::Rational(x)) => Scalar::Rational(-x),
            (FieldDescriptor::Prime { p }, Scalar::Residue(x)) => Scalar::Residue((p - x) % p),
            _ => unreachable!("scalar kind mismatch slipped past construction"),
        }
    }

    /// Does this scalar belong to the field, in canonical form?
    pub fn check_scalar(&self, s: &Scalar) -> Result<()> {
        let ok = match (self, s) {
            (FieldDescriptor::Rational, Scalar::Rational(_)) => true,
            (FieldDescriptor::Prime { p }, Scalar::Residue(v)) => v < p,
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::FieldMismatch {
                field: self.to_string(),
                scalar: s.to_string(),
            })
        }
    }

    /// Parse a scalar from its canonical text form: `"n"` or `"n/d"` for
    /// rationals, a decimal integer for residues (reduced into range).
    pub fn parse_scalar(&self, text: &str) -> Result<Scalar> {
        let bad = || Error::BadScalar {
            text: text.to_string(),
        };
        match self {
            FieldDescriptor::Rational => {
                let (num_text, den_text) = match text.split_once('/') {
                    Some((n, d)) => (n, d),
                    None => (text, "1"),
                };
                let numer = BigInt::from_str(num_text.trim()).map_err(|_| bad())?;
                let denom = BigInt::from_str(den_text.trim()).map_err(|_| bad())?;
                if denom.is_zero() {
                    return Err(bad());
                }
                Ok(Scalar::Rational(BigRational::new(numer, denom)))
            }
            FieldDescriptor::Prime { p } => {
                let v = u64::from_str(text.trim()).map_err(|_| bad())?;
                Ok(Scalar::Residue(v % p))
            }
        }
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Rational => write!(f, "rational"),
            FieldDescriptor::Prime { p } => write!(f, "F_{p}"),
        }
    }
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Residue(v) => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Residue(v) => *v == 1,
        }
    }
}

impl fmt::Display for Scalar {
    /// Canonical text form: `-3/4` with the integer denominator elided.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Residue(v) => write!(f, "{v}"),
        }
    }
}
