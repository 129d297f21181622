use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

/// Arbitrary-precision integer exponent.
///
/// Values that fit in an `i64` are kept inline; anything larger spills to a
/// [`BigInt`]. The representation is canonical (a `Big` never fits in `i64`),
/// so derived equality and hashing are value equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Exp {
    Small(i64),
    Big(Box<BigInt>),
}

impl Exp {
    pub const ZERO: Exp = Exp::Small(0);
    pub const ONE: Exp = Exp::Small(1);

    fn from_big(b: BigInt) -> Self {
        match b.to_i64() {
            Some(s) => Exp::Small(s),
            None => Exp::Big(Box::new(b)),
        }
    }

    pub fn to_bigint(&self) -> BigInt {
        match self {
            Exp::Small(s) => BigInt::from(*s),
            Exp::Big(b) => (**b).clone(),
        }
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        matches!(self, Exp::Small(0))
    }

    pub fn is_positive(&self) -> bool {
        match self {
            Exp::Small(s) => *s > 0,
            Exp::Big(b) => b.is_positive(),
        }
    }

    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Exp::Small(s) => Some(*s),
            Exp::Big(_) => None,
        }
    }

    pub fn abs(&self) -> Exp {
        match self {
            Exp::Small(s) => s
                .checked_abs()
                .map(Exp::Small)
                .unwrap_or_else(|| Exp::from_big(BigInt::from(*s).abs())),
            Exp::Big(b) => Exp::from_big(b.abs()),
        }
    }

    /// Least non-negative residue modulo `n` (`n >= 1`).
    pub fn rem_euclid(&self, n: u64) -> u64 {
        assert!(n >= 1);
        match self {
            Exp::Small(s) => (*s as i128).rem_euclid(n as i128) as u64,
            Exp::Big(b) => {
                let r = (**b).clone() % BigInt::from(n);
                let r = if r.is_negative() {
                    r + BigInt::from(n)
                } else {
                    r
                };
                r.to_u64().expect("residue below modulus")
            }
        }
    }
}

impl Default for Exp {
    fn default() -> Self {
        Exp::ZERO
    }
}

impl From<i64> for Exp {
    fn from(v: i64) -> Self {
        Exp::Small(v)
    }
}

impl From<BigInt> for Exp {
    fn from(v: BigInt) -> Self {
        Exp::from_big(v)
    }
}

impl<'a> Add<&'a Exp> for &'a Exp {
    type Output = Exp;
    fn add(self, rhs: &'a Exp) -> Exp {
        if let (Exp::Small(a), Exp::Small(b)) = (self, rhs) {
            if let Some(s) = a.checked_add(*b) {
                return Exp::Small(s);
            }
        }
        Exp::from_big(self.to_bigint() + rhs.to_bigint())
    }
}

impl Add for Exp {
    type Output = Exp;
    fn add(self, rhs: Exp) -> Exp {
        &self + &rhs
    }
}

impl AddAssign<&Exp> for Exp {
    fn add_assign(&mut self, rhs: &Exp) {
        *self = &*self + rhs;
    }
}

impl<'a> Sub<&'a Exp> for &'a Exp {
    type Output = Exp;
    fn sub(self, rhs: &'a Exp) -> Exp {
        self + &(-rhs)
    }
}

impl Neg for &Exp {
    type Output = Exp;
    fn neg(self) -> Exp {
        match self {
            Exp::Small(s) => s
                .checked_neg()
                .map(Exp::Small)
                .unwrap_or_else(|| Exp::from_big(-BigInt::from(*s))),
            Exp::Big(b) => Exp::from_big(-(**b).clone()),
        }
    }
}

impl Neg for Exp {
    type Output = Exp;
    fn neg(self) -> Exp {
        -&self
    }
}

impl<'a> Mul<&'a Exp> for &'a Exp {
    type Output = Exp;
    fn mul(self, rhs: &'a Exp) -> Exp {
        if let (Exp::Small(a), Exp::Small(b)) = (self, rhs) {
            if let Some(p) = a.checked_mul(*b) {
                return Exp::Small(p);
            }
        }
        Exp::from_big(self.to_bigint() * rhs.to_bigint())
    }
}

impl Ord for Exp {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Exp::Small(a), Exp::Small(b)) => a.cmp(b),
            _ => self.to_bigint().cmp(&other.to_bigint()),
        }
    }
}

impl PartialOrd for Exp {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Zero for Exp {
    fn zero() -> Self {
        Exp::ZERO
    }
    fn is_zero(&self) -> bool {
        Exp::is_zero(self)
    }
}

impl fmt::Display for Exp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exp::Small(s) => write!(f, "{s}"),
            Exp::Big(b) => write!(f, "{b}"),
        }
    }
}

impl fmt::Debug for Exp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Exp {
    type Err = num_bigint::ParseBigIntError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.parse::<i64>() {
            Ok(v) => Ok(Exp::Small(v)),
            Err(_) => s.parse::<BigInt>().map(Exp::from_big),
        }
    }
}
