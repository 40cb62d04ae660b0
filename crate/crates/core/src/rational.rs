//! Exact rational arithmetic in ℚ/ℤ.
//!
//! Coefficients for the Dijkgraaf–Witten layer live in ℚ/ℤ (written
//! additively; the paper's ℂ/ℤ data is torsion, so exact rationals suffice).
//! Every value is stored reduced and normalized into [0, 1); identities on
//! this layer must hold exactly, never to floating tolerance.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use std::fmt;
use std::str::FromStr;

/// An element of ℚ/ℤ: a reduced rational p/q with 0 ≤ p < q.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QZ(BigRational);

impl fmt::Debug for QZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for QZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

/// Normalize an arbitrary rational into [0, 1).
fn reduce_mod_one(r: BigRational) -> BigRational {
    let floored = r.floor();
    r - floored
}

impl QZ {
    pub fn zero() -> Self {
        QZ(BigRational::zero())
    }

    pub fn new(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        QZ(reduce_mod_one(BigRational::new(
            BigInt::from(numer),
            BigInt::from(denom),
        )))
    }

    pub fn from_rational(r: BigRational) -> Self {
        QZ(reduce_mod_one(r))
    }

    /// The inclusion i: ℤ/2 → ℚ/ℤ, 1 ↦ 1/2.
    pub fn from_bit(bit: bool) -> Self {
        if bit {
            QZ::new(1, 2)
        } else {
            QZ::zero()
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn add(&self, other: &QZ) -> QZ {
        QZ(reduce_mod_one(&self.0 + &other.0))
    }

    pub fn sub(&self, other: &QZ) -> QZ {
        QZ(reduce_mod_one(&self.0 - &other.0))
    }

    pub fn neg(&self) -> QZ {
        QZ(reduce_mod_one(-&self.0))
    }

    /// Integer scalar action n·x in ℚ/ℤ.
    pub fn scale(&self, n: i64) -> QZ {
        QZ(reduce_mod_one(&self.0 * BigRational::from(BigInt::from(n))))
    }

    pub fn as_rational(&self) -> &BigRational {
        &self.0
    }
}

impl FromStr for QZ {
    type Err = String;

    /// Parse "p/q" or a bare integer "p".
    fn from_str(s: &str) -> Result<Self, String> {
        let r = match s.split_once('/') {
            Some((p, q)) => {
                let p: BigInt = p.trim().parse().map_err(|e| format!("bad numerator: {e}"))?;
                let q: BigInt = q.trim().parse().map_err(|e| format!("bad denominator: {e}"))?;
                if q.is_zero() {
                    return Err("zero denominator".into());
                }
                BigRational::new(p, q)
            }
            None => {
                let p: BigInt = s.trim().parse().map_err(|e| format!("bad rational: {e}"))?;
                BigRational::from(p)
            }
        };
        Ok(QZ(reduce_mod_one(r)))
    }
}

/// A dense vector of ℚ/ℤ entries.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QmodZVector {
    entries: Vec<QZ>,
}

impl QmodZVector {
    pub fn zeros(len: usize) -> Self {
        QmodZVector {
            entries: vec![QZ::zero(); len],
        }
    }

    pub fn from_entries(entries: Vec<QZ>) -> Self {
        QmodZVector { entries }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize) -> &QZ {
        &self.entries[i]
    }

    pub fn set(&mut self, i: usize, v: QZ) {
        self.entries[i] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(QZ::is_zero)
    }

    pub fn add(&self, other: &QmodZVector) -> QmodZVector {
        assert_eq!(self.len(), other.len());
        QmodZVector {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &QmodZVector) -> QmodZVector {
        assert_eq!(self.len(), other.len());
        QmodZVector {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = &QZ> {
        self.entries.iter()
    }
}

/// A plain exact rational, used for spins and central charges. Unlike [`QZ`]
/// it carries no implicit modulus; call sites normalize mod 1 or mod 8 as the
/// quantity demands.
pub type Rational = BigRational;

/// Normalize into [0, 1) (spins).
pub fn mod_one(r: Rational) -> Rational {
    reduce_mod_one(r)
}

/// Normalize into [0, 8) (chiral central charge).
pub fn mod_eight(r: Rational) -> Rational {
    let eight = BigRational::from(BigInt::from(8));
    let mut v = r;
    v = &v - (&v / &eight).floor() * &eight;
    if v.is_negative() {
        v += &eight;
    }
    v
}

pub fn rational(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rational_to_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn rational_from_str(s: &str) -> Result<Rational, String> {
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|e| format!("bad numerator: {e}"))?;
            let q: BigInt = q.trim().parse().map_err(|e| format!("bad denominator: {e}"))?;
            if q.is_zero() {
                return Err("zero denominator".into());
            }
            Ok(BigRational::new(p, q))
        }
        None => {
            let p: BigInt = s.trim().parse().map_err(|e| format!("bad rational: {e}"))?;
            Ok(BigRational::from(p))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization_into_unit_interval() {
        assert_eq!(QZ::new(3, 2), QZ::new(1, 2));
        assert_eq!(QZ::new(-1, 4), QZ::new(3, 4));
        assert_eq!(QZ::new(4, 2), QZ::zero());
        assert_eq!(QZ::new(6, 4), QZ::new(1, 2));
    }

    #[test]
    fn arithmetic_mod_one() {
        let a = QZ::new(3, 4);
        let b = QZ::new(1, 2);
        assert_eq!(a.add(&b), QZ::new(1, 4));
        assert_eq!(a.sub(&b), QZ::new(1, 4));
        assert_eq!(b.neg(), QZ::new(1, 2));
        assert_eq!(a.neg(), QZ::new(1, 4));
        assert_eq!(a.scale(4), QZ::zero());
    }

    #[test]
    fn parse_round_trip() {
        let v: QZ = "7/16".parse().unwrap();
        assert_eq!(v, QZ::new(7, 16));
        assert_eq!(v.to_string(), "7/16");
        let z: QZ = "0".parse().unwrap();
        assert!(z.is_zero());
        assert_eq!(z.to_string(), "0/1");
    }

    #[test]
    fn inclusion_of_f2() {
        assert_eq!(QZ::from_bit(true), QZ::new(1, 2));
        assert!(QZ::from_bit(false).is_zero());
        // i is additive: i(1) + i(1) = i(0).
        assert!(QZ::from_bit(true).add(&QZ::from_bit(true)).is_zero());
    }

    #[test]
    fn central_charge_normalization() {
        assert_eq!(mod_eight(rational(17, 2)), rational(1, 2));
        assert_eq!(mod_eight(rational(-1, 2)), rational(15, 2));
        assert_eq!(mod_eight(rational(16, 1)), rational(0, 1));
    }
}
