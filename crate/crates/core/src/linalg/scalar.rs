use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::field::{mod_inv, FieldDescriptor};
use super::LinalgError;

/// An exact field element.
///
/// Rationals are kept in lowest terms with a positive denominator (this is
/// what `BigRational` guarantees); residues live in `[0, modulus)`.
///
/// Arithmetic between scalars of different fields is a programming error and
/// panics. Public entry points that accept user data check fields up front
/// and report [`LinalgError::FieldMismatch`] instead.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Residue { value: u32, modulus: u32 },
}

impl Scalar {
    pub fn zero(field: FieldDescriptor) -> Self {
        Self::from_i64(field, 0)
    }

    pub fn one(field: FieldDescriptor) -> Self {
        Self::from_i64(field, 1)
    }

    pub fn from_i64(field: FieldDescriptor, v: i64) -> Self {
        match field {
            FieldDescriptor::Rationals => Scalar::Rational(BigRational::from_integer(v.into())),
            FieldDescriptor::PrimeField(p) => Scalar::Residue {
                value: v.rem_euclid(p as i64) as u32,
                modulus: p,
            },
        }
    }

    /// `num / den` in the given field. Fails when `den` vanishes in it.
    pub fn from_ratio(field: FieldDescriptor, num: &BigInt, den: &BigInt) -> Result<Self, LinalgError> {
        if den.is_zero() {
            return Err(LinalgError::DivisionByZero);
        }
        match field {
            FieldDescriptor::Rationals => Ok(Scalar::Rational(BigRational::new(num.clone(), den.clone()))),
            FieldDescriptor::PrimeField(p) => {
                let n = residue_of(num, p);
                let d = residue_of(den, p);
                if d == 0 {
                    return Err(LinalgError::DenominatorDivisibleByP { p });
                }
                Ok(Scalar::Residue {
                    value: (n as u64 * mod_inv(d as u64, p as u64) % p as u64) as u32,
                    modulus: p,
                })
            }
        }
    }

    pub fn field(&self) -> FieldDescriptor {
        match self {
            Scalar::Rational(_) => FieldDescriptor::Rationals,
            Scalar::Residue { modulus, .. } => FieldDescriptor::PrimeField(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Residue { value, .. } => *value == 1,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(q) => Some(q),
            Scalar::Residue { .. } => None,
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: mod_inv(*value as u64, *modulus as u64) as u32,
                modulus: *modulus,
            },
        })
    }

    /// Image of a rational scalar in `GF(p)`.
    pub fn reduce_mod(&self, p: u32) -> Result<Self, LinalgError> {
        match self {
            Scalar::Rational(q) => Self::from_ratio(FieldDescriptor::PrimeField(p), q.numer(), q.denom()),
            Scalar::Residue { modulus, .. } if *modulus == p => Ok(self.clone()),
            Scalar::Residue { .. } => Err(LinalgError::FieldMismatch {
                expected: FieldDescriptor::PrimeField(p),
                found: self.field(),
            }),
        }
    }

    fn expect_same_field(&self, other: &Self) {
        assert_eq!(self.field(), other.field(), "arithmetic on scalars of different fields");
    }
}

pub(crate) fn residue_of(v: &BigInt, p: u32) -> u32 {
    let r = v % BigInt::from(p);
    let r = if r.is_negative() { r + BigInt::from(p) } else { r };
    r.to_u32().expect("residue fits in u32")
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) if q.is_integer() => write!(f, "{}", q.numer()),
            Scalar::Rational(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            Scalar::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.expect_same_field(rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Residue { value: a, modulus }, Scalar::Residue { value: b, .. }) => Scalar::Residue {
                value: ((*a as u64 + *b as u64) % *modulus as u64) as u32,
                modulus: *modulus,
            },
            _ => unreachable!(),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.expect_same_field(rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Residue { value: a, modulus }, Scalar::Residue { value: b, .. }) => Scalar::Residue {
                value: (*a as u64 * *b as u64 % *modulus as u64) as u32,
                modulus: *modulus,
            },
            _ => unreachable!(),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Residue { value: 0, modulus } => Scalar::Residue { value: 0, modulus: *modulus },
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: modulus - value,
                modulus: *modulus,
            },
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}
