//! Exact scalars: arbitrary-precision rationals, prime fields 𝔽ₚ (p < 2³¹),
//! and arbitrary-precision integers.
//!
//! The rest of the crate is generic over [`Field`]; `BigRational` and [`Fp`]
//! are the two concrete instances. Integer (ℤ) matrices are handled
//! separately through Smith normal form, since ℤ is not a field.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Exact field scalar. Implementors: `BigRational` (ℚ) and [`Fp`].
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Send
    + Sync
    + 'static
{
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self) -> Self;

    /// Embed a small integer, using `like` to pick up the modulus when the
    /// field needs one (𝔽ₚ). For ℚ the hint is ignored.
    fn from_int_like(n: i64, like: &Self) -> Self;

    /// Short human-readable form for reports.
    fn display(&self) -> String;
}

impl Field for BigRational {
    fn inv(&self) -> Self {
        BigRational::one() / self.clone()
    }

    fn from_int_like(n: i64, _like: &Self) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn display(&self) -> String {
        if self.is_integer() {
            self.numer().to_string()
        } else {
            format!("{}/{}", self.numer(), self.denom())
        }
    }
}

/// Convenience constructor for rational scalars.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Residue modulo a prime p < 2³¹.
///
/// A modulus of 0 marks the "unbound" neutral element produced by
/// `Zero::zero()` / `One::one()` in generic code; it coerces to the other
/// operand's modulus on first contact. All elements inside a single matrix
/// share the same modulus.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    v: u64,
    p: u64,
}

impl Fp {
    pub fn new(v: i64, p: u64) -> Self {
        assert!(p >= 2 && p < (1 << 31), "modulus out of range");
        let r = v.rem_euclid(p as i64) as u64;
        Fp { v: r, p }
    }

    pub fn value(&self) -> u64 {
        self.v
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn unify(a: Fp, b: Fp) -> (u64, u64, u64) {
        let p = if a.p == 0 { b.p } else { a.p };
        debug_assert!(b.p == 0 || b.p == p, "mixed moduli {} vs {}", a.p, b.p);
        if p == 0 {
            // both unbound: plain small-integer arithmetic on {0,1}
            return (a.v, b.v, 0);
        }
        (a.v % p, b.v % p, p)
    }

    fn pow(mut base: u64, mut e: u64, p: u64) -> u64 {
        let mut acc = 1u64;
        base %= p;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        acc
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.v)
    }
}

impl Zero for Fp {
    fn zero() -> Self {
        Fp { v: 0, p: 0 }
    }
    fn is_zero(&self) -> bool {
        self.v == 0
    }
}

impl One for Fp {
    fn one() -> Self {
        Fp { v: 1, p: 0 }
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        let (a, b, p) = Fp::unify(self, rhs);
        if p == 0 {
            return Fp { v: a + b, p: 0 };
        }
        let mut s = a + b;
        if s >= p {
            s -= p;
        }
        Fp { v: s, p }
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        let (a, b, p) = Fp::unify(self, rhs);
        if p == 0 {
            return Fp { v: a - b, p: 0 };
        }
        Fp { v: (a + p - b) % p, p }
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        let (a, b, p) = Fp::unify(self, rhs);
        if p == 0 {
            return Fp { v: a * b, p: 0 };
        }
        Fp { v: a * b % p, p }
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        if self.p == 0 || self.v == 0 {
            return Fp { v: self.v, p: self.p };
        }
        Fp { v: self.p - self.v, p: self.p }
    }
}

impl Field for Fp {
    fn inv(&self) -> Self {
        assert!(self.v != 0, "division by zero in F_p");
        assert!(self.p != 0, "unbound F_p element has no inverse");
        Fp {
            v: Fp::pow(self.v, self.p - 2, self.p),
            p: self.p,
        }
    }

    fn from_int_like(n: i64, like: &Self) -> Self {
        if like.p == 0 {
            // keep unbound; will coerce later
            return Fp {
                v: if n >= 0 { n as u64 } else { 0u64.wrapping_sub((-n) as u64) },
                p: 0,
            };
        }
        Fp::new(n, like.p)
    }

    fn display(&self) -> String {
        self.v.to_string()
    }
}

/// Canonical representative of a big integer mod p.
pub fn bigint_mod_p(x: &BigInt, p: u64) -> Fp {
    let m = BigInt::from(p);
    let mut r = x % &m;
    if r.is_negative() {
        r += &m;
    }
    let digits = r.to_u64_digits().1;
    let v = if digits.is_empty() { 0 } else { digits[0] };
    Fp { v, p }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fp_arithmetic() {
        let a = Fp::new(5, 7);
        let b = Fp::new(4, 7);
        assert_eq!((a + b).value(), 2);
        assert_eq!((a * b).value(), 6);
        assert_eq!((a - b).value(), 1);
        assert_eq!((-b).value(), 3);
        assert_eq!((a.inv() * a).value(), 1);
    }

    #[test]
    fn fp_neutral_coerces() {
        let one: Fp = One::one();
        let a = Fp::new(4, 5);
        assert_eq!((one * a).value(), 4);
        assert_eq!((one + a).value(), 0);
        let zero: Fp = Zero::zero();
        assert_eq!((zero + a).value(), 4);
    }

    #[test]
    fn rational_inv() {
        let x = rat(3) / rat(4);
        assert_eq!(x.clone() * Field::inv(&x), rat(1));
    }

    #[test]
    fn bigint_reduction() {
        let x = BigInt::from(-3);
        assert_eq!(bigint_mod_p(&x, 7).value(), 4);
    }
}
