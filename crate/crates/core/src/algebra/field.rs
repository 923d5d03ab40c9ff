//! Exact coefficient fields: the rationals and prime fields `Z/pZ`.
//!
//! Every algorithm in the crate is generic over [`Field`]. A field value is a
//! cheap context object (`Rationals` is zero-sized, `PrimeField` carries the
//! modulus) and elements are plain data operated on through the context.

use std::fmt::{self, Debug};
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Half-width of the integer pool used for "general" coefficients over the rationals.
pub const RATIONAL_POOL_BOUND: i64 = 1 << 15;

/// Which field a computation runs over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum FieldSpec {
    Rationals,
    PrimeField { p: u64 },
}

impl FieldSpec {
    pub const DEFAULT_PRIME: u64 = 2_147_483_647;
    pub const DEFAULT_PRIME_FLOOR: u64 = 1 << 20;

    pub fn default_prime() -> Self {
        FieldSpec::PrimeField {
            p: Self::DEFAULT_PRIME,
        }
    }

    /// Checks the modulus is a prime above `floor`.
    pub fn validate(&self, floor: u64) -> Result<()> {
        match *self {
            FieldSpec::Rationals => Ok(()),
            FieldSpec::PrimeField { p } => {
                if p >= (1u64 << 62) {
                    return Err(Error::invalid(format!("modulus {p} exceeds 2^62")));
                }
                if !is_prime_u64(p) {
                    return Err(Error::invalid(format!("{p} is not prime")));
                }
                if p < floor {
                    return Err(Error::invalid(format!(
                        "prime {p} is below the configured floor {floor}"
                    )));
                }
                Ok(())
            }
        }
    }

    /// Prime-field answers rest on random choices being general.
    pub fn is_probabilistic(&self) -> bool {
        matches!(self, FieldSpec::PrimeField { .. })
    }
}

impl Default for FieldSpec {
    fn default() -> Self {
        Self::default_prime()
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "rationals"),
            FieldSpec::PrimeField { p } => write!(f, "fp:{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "rationals" | "qq" | "QQ" | "q" => Ok(FieldSpec::Rationals),
            "fp" => Ok(FieldSpec::default_prime()),
            _ => {
                let rest = s
                    .strip_prefix("fp:")
                    .ok_or_else(|| Error::invalid(format!("unknown field `{s}`")))?;
                let p: u64 = rest
                    .parse()
                    .map_err(|_| Error::invalid(format!("bad modulus `{rest}`")))?;
                let spec = FieldSpec::PrimeField { p };
                spec.validate(2)?;
                Ok(spec)
            }
        }
    }
}

/// Arithmetic context for an exact field.
pub trait Field: Clone + Debug + PartialEq + Send + Sync + 'static {
    type Elem: Clone + PartialEq + Eq + Hash + Debug + Send + Sync + 'static;

    fn spec(&self) -> FieldSpec;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn from_bigint(&self, v: &BigInt) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    /// Uniform draw from the pool used for "general" choices.
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;
    /// Integer or `p/q` text; prime-field residues print as symmetric representatives.
    fn format(&self, a: &Self::Elem) -> String;
    /// Size of the element's representation, used by the coefficient budget.
    fn bits(&self, a: &Self::Elem) -> u64;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Self::Elem> {
        let d = self.from_bigint(den);
        let n = self.from_bigint(num);
        self.div(&n, &d)
            .ok_or_else(|| Error::invalid(format!("denominator {den} vanishes in {}", self.spec())))
    }

    fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem {
        loop {
            let c = self.random(rng);
            if !self.is_zero(&c) {
                return c;
            }
        }
    }

    /// `a * b + c` in one call; the hot path of every elimination.
    fn mul_add(&self, a: &Self::Elem, b: &Self::Elem, c: &Self::Elem) -> Self::Elem {
        self.add(&self.mul(a, b), c)
    }

    /// A square root in the field, if one exists.
    fn square_root(&self, a: &Self::Elem) -> Option<Self::Elem>;

    /// `dst += c * src` elementwise.
    fn axpy(&self, dst: &mut [Self::Elem], c: &Self::Elem, src: &[Self::Elem]) {
        for (d, s) in dst.iter_mut().zip(src) {
            if !self.is_zero(s) {
                *d = self.mul_add(c, s, d);
            }
        }
    }
}

/// `Z/pZ` with `p < 2^62`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        FieldSpec::PrimeField { p }.validate(2)?;
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    #[inline]
    fn reduce_i64(&self, v: i64) -> u64 {
        let p = self.p as i128;
        (((v as i128) % p + p) % p) as u64
    }

    fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mulmod(acc, base);
            }
            base = self.mulmod(base, base);
            exp >>= 1;
        }
        acc
    }

    #[inline]
    fn mulmod(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    /// Square root of a residue when `p ≡ 3 (mod 4)`; `None` for non-residues.
    pub fn sqrt(&self, a: u64) -> Option<u64> {
        if a == 0 {
            return Some(0);
        }
        if self.p % 4 != 3 {
            // Tonelli-Shanks
            return self.tonelli_shanks(a);
        }
        let r = self.pow(a, (self.p + 1) / 4);
        (self.mulmod(r, r) == a).then_some(r)
    }

    fn tonelli_shanks(&self, a: u64) -> Option<u64> {
        let p = self.p;
        if self.pow(a, (p - 1) / 2) != 1 {
            return None;
        }
        let mut q = p - 1;
        let mut s = 0;
        while q % 2 == 0 {
            q /= 2;
            s += 1;
        }
        let mut z = 2;
        while self.pow(z, (p - 1) / 2) != p - 1 {
            z += 1;
        }
        let mut m = s;
        let mut c = self.pow(z, q);
        let mut t = self.pow(a, q);
        let mut r = self.pow(a, q.div_ceil(2));
        while t != 1 {
            let mut i = 0;
            let mut tt = t;
            while tt != 1 {
                tt = self.mulmod(tt, tt);
                i += 1;
            }
            let b = self.pow(c, 1 << (m - i - 1));
            m = i;
            c = self.mulmod(b, b);
            t = self.mulmod(t, c);
            r = self.mulmod(r, b);
        }
        Some(r)
    }
}

impl Default for PrimeField {
    fn default() -> Self {
        PrimeField {
            p: FieldSpec::DEFAULT_PRIME,
        }
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn spec(&self) -> FieldSpec {
        FieldSpec::PrimeField { p: self.p }
    }
    #[inline]
    fn zero(&self) -> u64 {
        0
    }
    #[inline]
    fn one(&self) -> u64 {
        1
    }
    fn from_i64(&self, v: i64) -> u64 {
        self.reduce_i64(v)
    }
    fn from_bigint(&self, v: &BigInt) -> u64 {
        let p = BigInt::from(self.p);
        v.mod_floor(&p).to_u64().expect("residue fits in u64")
    }
    #[inline]
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    #[inline]
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    #[inline]
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    #[inline]
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        self.mulmod(*a, *b)
    }
    #[inline]
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            return None;
        }
        // extended Euclid on signed values
        let (mut r0, mut r1) = (self.p as i128, *a as i128);
        let (mut s0, mut s1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        let p = self.p as i128;
        Some((((s0 % p) + p) % p) as u64)
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> u64 {
        rng.random_range(0..self.p)
    }
    fn format(&self, a: &u64) -> String {
        if *a > self.p / 2 {
            format!("-{}", self.p - a)
        } else {
            a.to_string()
        }
    }
    fn square_root(&self, a: &u64) -> Option<u64> {
        PrimeField::sqrt(self, *a)
    }
    fn bits(&self, _a: &u64) -> u64 {
        64 - self.p.leading_zeros() as u64
    }
    #[inline]
    fn mul_add(&self, a: &u64, b: &u64, c: &u64) -> u64 {
        ((*a as u128 * *b as u128 + *c as u128) % self.p as u128) as u64
    }
    fn axpy(&self, dst: &mut [u64], c: &u64, src: &[u64]) {
        if *c == 0 {
            return;
        }
        if self.p < (1 << 31) {
            // products and sums stay below 2^63
            let p = self.p;
            for (d, s) in dst.iter_mut().zip(src) {
                if *s != 0 {
                    *d = (*d + c * s) % p;
                }
            }
        } else {
            for (d, s) in dst.iter_mut().zip(src) {
                if *s != 0 {
                    *d = self.mul_add(c, s, d);
                }
            }
        }
    }
}

/// The field of rational numbers with arbitrary precision.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Rationals
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn from_bigint(&self, v: &BigInt) -> BigRational {
        BigRational::from_integer(v.clone())
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
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> BigRational {
        self.from_i64(rng.random_range(-RATIONAL_POOL_BOUND..=RATIONAL_POOL_BOUND))
    }
    fn format(&self, a: &BigRational) -> String {
        if a.is_integer() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
    fn bits(&self, a: &BigRational) -> u64 {
        a.numer().abs().bits().max(a.denom().bits())
    }
    fn square_root(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_negative() {
            return None;
        }
        let (n, d) = (a.numer().sqrt(), a.denom().sqrt());
        (&n * &n == *a.numer() && &d * &d == *a.denom()).then(|| BigRational::new(n, d))
    }
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut b: u64, mut e: u64| {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(acc, b);
            }
            b = mulmod(b, b);
            e >>= 1;
        }
        acc
    };
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
