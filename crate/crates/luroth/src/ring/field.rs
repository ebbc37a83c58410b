//! Exact coefficient fields: arbitrary-precision rationals and odd prime fields Z/p.
//!
//! Every arithmetic routine in this crate is generic over [`Field`]. A field value is a
//! lightweight handle (zero-sized for the rationals, a single `u64` modulus for Z/p) that
//! is threaded through computations inside a [`crate::ring::Ctx`]; elements themselves
//! carry no field tag.

use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Errors produced by field arithmetic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldError {
    /// Division by zero or inversion of zero.
    DivisionByZero,
    /// A rational number whose denominator vanishes modulo p cannot be mapped into Z/p.
    BadReduction { p: u64 },
    /// The modulus is not an odd prime > 3 (2 and 3 divide 4!, which the degree-4
    /// basis conversions must invert).
    BadModulus { p: u64 },
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldError::DivisionByZero => write!(f, "division by zero"),
            FieldError::BadReduction { p } => {
                write!(f, "denominator vanishes modulo {p}; choose another prime")
            }
            FieldError::BadModulus { p } => {
                write!(f, "{p} is not an odd prime > 3")
            }
        }
    }
}

impl std::error::Error for FieldError {}

/// An exact field with deterministic element representatives.
///
/// Invariants: rationals are kept in lowest terms with positive denominator (enforced by
/// `BigRational` itself); prime-field elements are canonical representatives in `[0, p)`.
pub trait Field: Clone + fmt::Debug {
    type Elem: Clone + PartialEq + Eq + fmt::Debug + std::hash::Hash;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;
    /// Map an exact rational into the field. Fails over Z/p when the denominator is
    /// divisible by p.
    fn from_rational(&self, q: &BigRational) -> Result<Self::Elem, FieldError>;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem, FieldError>;
    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, FieldError> {
        Ok(self.mul(a, &self.inv(b)?))
    }
    /// A square root when one exists in the field.
    fn sqrt(&self, a: &Self::Elem) -> Option<Self::Elem>;
    /// The element as an exact rational, for characteristic-zero fields only.
    fn to_rational(&self, _a: &Self::Elem) -> Option<BigRational> {
        None
    }
    /// The characteristic: `None` for characteristic zero.
    fn characteristic(&self) -> Option<u64>;
    /// Deterministic display form (used by reports and polynomial printers).
    fn fmt_elem(&self, a: &Self::Elem) -> String;
}

/// The rational field Q with arbitrary-precision `BigRational` elements.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rat;

impl Rat {
    pub fn int(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    pub fn ratio(num: i64, den: i64) -> BigRational {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }
}

fn bigint_sqrt_exact(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let mag = n.magnitude();
    let r = mag.sqrt();
    if &r * &r == *mag {
        Some(BigInt::from_biguint(Sign::Plus, r))
    } else {
        None
    }
}

impl Field for Rat {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn from_i64(&self, n: i64) -> BigRational {
        Rat::int(n)
    }

    fn from_rational(&self, q: &BigRational) -> Result<BigRational, FieldError> {
        Ok(q.clone())
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn inv(&self, a: &BigRational) -> Result<BigRational, FieldError> {
        if a.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(a.recip())
    }

    fn sqrt(&self, a: &BigRational) -> Option<BigRational> {
        let num = bigint_sqrt_exact(a.numer())?;
        let den = bigint_sqrt_exact(a.denom())?;
        Some(BigRational::new(num, den))
    }

    fn to_rational(&self, a: &BigRational) -> Option<BigRational> {
        Some(a.clone())
    }

    fn characteristic(&self) -> Option<u64> {
        None
    }

    fn fmt_elem(&self, a: &BigRational) -> String {
        if a.denom().is_one() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
}

/// The prime field Z/p for an odd prime p > 3, elements stored in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fp {
    p: u64,
}

/// Deterministic Miller–Rabin primality test, exact for all `u64` inputs.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    // This witness set is deterministic for every 64-bit integer.
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[inline]
fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

impl Fp {
    /// The default working prime for modular Gröbner runs.
    pub const DEFAULT_PRIME: u64 = 65521;
    /// Follow-up primes used by the multi-prime agreement mode.
    pub const VERIFY_PRIMES: [u64; 2] = [65537, 65539];

    pub fn new(p: u64) -> Result<Self, FieldError> {
        // 2 and 3 divide 4! = 24, whose inverse the degree-4 basis conversions need.
        if p <= 3 || !is_prime_u64(p) {
            return Err(FieldError::BadModulus { p });
        }
        Ok(Fp { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn reduce_i64(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }

    pub fn reduce_bigint(&self, n: &BigInt) -> u64 {
        let m = n.mod_floor(&BigInt::from(self.p));
        let digits = m.magnitude().to_u64_digits();
        match digits.len() {
            0 => 0,
            1 => digits[0],
            _ => unreachable!("residue already reduced below a u64 modulus"),
        }
    }
}

impl Field for Fp {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1
    }

    fn from_i64(&self, n: i64) -> u64 {
        self.reduce_i64(n)
    }

    fn from_rational(&self, q: &BigRational) -> Result<u64, FieldError> {
        let den = self.reduce_bigint(q.denom());
        if den == 0 {
            return Err(FieldError::BadReduction { p: self.p });
        }
        let num = self.reduce_bigint(q.numer());
        self.div(&num, &den)
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        mul_mod(*a, *b, self.p)
    }

    fn inv(&self, a: &u64) -> Result<u64, FieldError> {
        if *a == 0 {
            return Err(FieldError::DivisionByZero);
        }
        Ok(pow_mod(*a, self.p - 2, self.p))
    }

    fn sqrt(&self, a: &u64) -> Option<u64> {
        let p = self.p;
        if *a == 0 {
            return Some(0);
        }
        if pow_mod(*a, (p - 1) / 2, p) != 1 {
            return None;
        }
        if p % 4 == 3 {
            return Some(pow_mod(*a, (p + 1) / 4, p));
        }
        // Tonelli–Shanks, with a deterministic search for a non-residue.
        let mut q = p - 1;
        let mut s = 0u32;
        while q % 2 == 0 {
            q /= 2;
            s += 1;
        }
        let mut z = 2u64;
        while pow_mod(z, (p - 1) / 2, p) != p - 1 {
            z += 1;
        }
        let mut m = s;
        let mut c = pow_mod(z, q, p);
        let mut t = pow_mod(*a, q, p);
        let mut r = pow_mod(*a, (q + 1) / 2, p);
        while t != 1 {
            let mut i = 0u32;
            let mut tt = t;
            while tt != 1 {
                tt = mul_mod(tt, tt, p);
                i += 1;
            }
            let b = pow_mod(c, 1u64 << (m - i - 1), p);
            m = i;
            c = mul_mod(b, b, p);
            t = mul_mod(t, c, p);
            r = mul_mod(r, b, p);
        }
        Some(r)
    }

    fn characteristic(&self) -> Option<u64> {
        Some(self.p)
    }

    fn fmt_elem(&self, a: &u64) -> String {
        a.to_string()
    }
}
