//! Exact integer and rational helpers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Z = BigInt;
pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(Z::from(n))
}

pub fn qz(n: Z) -> Q {
    Q::from_integer(n)
}

pub fn frac(num: i64, den: i64) -> Q {
    Q::new(Z::from(num), Z::from(den))
}

pub fn factorial(n: usize) -> Z {
    (2..=n).fold(Z::one(), |acc, i| acc * Z::from(i))
}

/// Generalized binomial coefficient a(a−1)…(a−b+1)/b!, zero for b < 0.
pub fn binom(a: i64, b: i64) -> Z {
    if b < 0 {
        return Z::zero();
    }
    if a >= 0 && b > a {
        return Z::zero();
    }
    let mut num = Z::one();
    for i in 0..b {
        num *= Z::from(a - i);
    }
    num / factorial(b as usize)
}

/// Returns the integer value of `x` if its denominator is 1.
pub fn to_integer(x: &Q) -> Option<Z> {
    if x.is_integer() {
        Some(x.to_integer())
    } else {
        None
    }
}

/// Canonical residue of `x` in `[0, p)`.
pub fn residue(x: &Z, p: u64) -> u64 {
    let m = x.mod_floor(&Z::from(p));
    m.to_u64().expect("residue fits")
}

/// Residue of a rational whose denominator is prime to the prime `p`.
pub fn residue_q(x: &Q, p: u64) -> Option<u64> {
    let d = residue(x.denom(), p);
    if d == 0 {
        return None;
    }
    let n = residue(x.numer(), p);
    let inv = Z::from(d).modpow(&Z::from(p - 2), &Z::from(p));
    Some(residue(&(Z::from(n) * inv), p))
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn sign(k: usize) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn abs_z(x: &Z) -> Z {
    x.abs()
}
