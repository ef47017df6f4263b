//! Reduction of exact scalars into the prime field `F_p`, used to reject
//! non-divisibility cheaply before an exact polynomial division.
//!
//! `p ≡ 1 (mod 8)` and every prime below 32 is a quadratic residue, so `i` and
//! the usual radicals have images; other radicands are mapped when a root
//! exists and otherwise make the reduction unavailable.

use std::cell::RefCell;
use std::collections::HashMap;

use num_bigint::{BigInt, Sign};
use num_traits::ToPrimitive;

use super::Rational;

pub const P: u64 = 4_294_905_169;

pub fn add(a: u64, b: u64) -> u64 {
    let s = a + b;
    if s >= P {
        s - P
    } else {
        s
    }
}

pub fn sub(a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + P - b
    }
}

pub fn mul(a: u64, b: u64) -> u64 {
    a * b % P
}

pub fn pow(mut b: u64, mut e: u64) -> u64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(acc, b);
        }
        b = mul(b, b);
        e >>= 1;
    }
    acc
}

pub fn inv(a: u64) -> Option<u64> {
    (a != 0).then(|| pow(a, P - 2))
}

/// Square root by Tonelli-Shanks, normalized to the smaller of the two roots.
pub fn sqrt(a: u64) -> Option<u64> {
    let a = a % P;
    if a == 0 {
        return Some(0);
    }
    if pow(a, (P - 1) / 2) != 1 {
        return None;
    }
    let mut q = P - 1;
    let mut s = 0;
    while q % 2 == 0 {
        q /= 2;
        s += 1;
    }
    let z = (2..).find(|&z| pow(z, (P - 1) / 2) == P - 1).expect("non-residue exists");
    let mut m = s;
    let mut c = pow(z, q);
    let mut t = pow(a, q);
    let mut r = pow(a, (q + 1) / 2);
    while t != 1 {
        let mut i = 0;
        let mut t2 = t;
        while t2 != 1 {
            t2 = mul(t2, t2);
            i += 1;
        }
        let b = pow(c, 1 << (m - i - 1));
        m = i;
        c = mul(b, b);
        t = mul(t, c);
        r = mul(r, b);
    }
    Some(r.min(P - r))
}

pub fn imag_unit() -> u64 {
    thread_local!(static I: u64 = sqrt(P - 1).expect("p = 1 mod 4"));
    I.with(|i| *i)
}

fn of_bigint(n: &BigInt) -> u64 {
    let r = (n.magnitude() % P).to_u64().expect("reduced below p");
    if n.sign() == Sign::Minus {
        sub(0, r)
    } else {
        r
    }
}

fn of_i64(n: i64) -> u64 {
    let r = n.unsigned_abs() % P;
    if n < 0 {
        sub(0, r)
    } else {
        r
    }
}

pub fn of_rational(r: &Rational) -> Option<u64> {
    if let Some((n, d)) = r.small_parts() {
        return if d == 1 { Some(of_i64(n)) } else { Some(mul(of_i64(n), inv(of_i64(d))?)) };
    }
    Some(mul(of_bigint(&r.numer()), inv(of_bigint(&r.denom()))?))
}

/// Image of `sqrt(d)` for a square-free radicand, as the product of the
/// images of its prime square roots (so `sqrt(6) = sqrt(2) sqrt(3)` holds).
pub fn sqrt_radicand(d: u64) -> Option<u64> {
    thread_local!(static CACHE: RefCell<HashMap<u64, Option<u64>>> = RefCell::new(HashMap::new()));
    if d == 1 {
        return Some(1);
    }
    CACHE.with(|c| {
        *c.borrow_mut().entry(d).or_insert_with(|| {
            let mut n = d;
            let mut acc = 1;
            let mut q = 2;
            while q * q <= n {
                if n % q == 0 {
                    acc = mul(acc, sqrt(q)?);
                    n /= q;
                }
                q += 1;
            }
            if n > 1 {
                acc = mul(acc, sqrt(n)?);
            }
            Some(acc)
        })
    })
}
