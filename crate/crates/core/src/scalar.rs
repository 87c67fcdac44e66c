//! Exact field coefficients: arbitrary-precision rationals and prime fields.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

use crate::Error;

/// The coefficient field of a polynomial ring: the rationals, or GF(p) for a
/// prime p below 2^31.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Q,
    Fp(u32),
}

impl FieldSpec {
    pub fn validate(self) -> Result<Self, Error> {
        match self {
            FieldSpec::Q => Ok(self),
            FieldSpec::Fp(p) => {
                if p < 2 || p > i32::MAX as u32 {
                    return Err(Error::Input(format!("characteristic {p} out of range")));
                }
                if !is_prime_u32(p) {
                    return Err(Error::Input(format!("{p} is not prime")));
                }
                Ok(self)
            }
        }
    }

    pub fn zero(self) -> Scalar {
        match self {
            FieldSpec::Q => Scalar::Q(BigRational::zero()),
            FieldSpec::Fp(p) => Scalar::Fp { p, val: 0 },
        }
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, v: i64) -> Scalar {
        match self {
            FieldSpec::Q => Scalar::Q(BigRational::from_integer(BigInt::from(v))),
            FieldSpec::Fp(p) => {
                let m = v.rem_euclid(p as i64) as u64;
                Scalar::Fp { p, val: m }
            }
        }
    }

    pub fn from_ratio(self, num: i64, den: i64) -> Result<Scalar, Error> {
        if den == 0 {
            return Err(Error::Input("zero denominator in literal".into()));
        }
        match self {
            FieldSpec::Q => Ok(Scalar::Q(BigRational::new(
                BigInt::from(num),
                BigInt::from(den),
            ))),
            FieldSpec::Fp(_) => {
                let d = self.from_i64(den);
                if d.is_zero() {
                    return Err(Error::Input(format!(
                        "denominator {den} vanishes in {self:?}"
                    )));
                }
                Ok(self.from_i64(num).div(&d))
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Q => write!(f, "Q"),
            FieldSpec::Fp(p) => write!(f, "GF({p})"),
        }
    }
}

pub fn is_prime_u32(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    let n = n as u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// A field element. Residues are kept reduced to [0, p); rationals are kept
/// in lowest terms by `BigRational` itself. Mixing fields is a programming
/// error and panics.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(BigRational),
    Fp { p: u32, val: u64 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Q(_) => FieldSpec::Q,
            Scalar::Fp { p, .. } => FieldSpec::Fp(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_zero(),
            Scalar::Fp { val, .. } => *val == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_one(),
            Scalar::Fp { val, .. } => *val == 1,
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            (Scalar::Fp { p, val: a }, Scalar::Fp { p: q, val: b }) => {
                assert_eq!(p, q, "mixed characteristics");
                Scalar::Fp {
                    p: *p,
                    val: (a + b) % (*p as u64),
                }
            }
            _ => panic!("mixed fields in scalar arithmetic"),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::Fp { p, val } => Scalar::Fp {
                p: *p,
                val: if *val == 0 { 0 } else { *p as u64 - val },
            },
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            (Scalar::Fp { p, val: a }, Scalar::Fp { p: q, val: b }) => {
                assert_eq!(p, q, "mixed characteristics");
                Scalar::Fp {
                    p: *p,
                    val: (a * b) % (*p as u64),
                }
            }
            _ => panic!("mixed fields in scalar arithmetic"),
        }
    }

    pub fn inv(&self) -> Scalar {
        assert!(!self.is_zero(), "inverse of zero");
        match self {
            Scalar::Q(a) => Scalar::Q(a.recip()),
            Scalar::Fp { p, val } => Scalar::Fp {
                p: *p,
                val: pow_mod(*val, *p as u64 - 2, *p as u64),
            },
        }
    }

    pub fn div(&self, other: &Scalar) -> Scalar {
        self.mul(&other.inv())
    }
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Fp { val, .. } => write!(f, "{val}"),
        }
    }
}

/// Sign information used by the rational printer; GF(p) residues are never
/// printed with a minus sign.
pub fn is_negative(s: &Scalar) -> bool {
    match s {
        Scalar::Q(r) => r.is_negative(),
        Scalar::Fp { .. } => false,
    }
}
