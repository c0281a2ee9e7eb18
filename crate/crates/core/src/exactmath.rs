//! Exact arbitrary-precision integer and rational primitives.
//!
//! Everything downstream (admissibility reports, elimination certificates,
//! certificate replay) is built on these functions. There is no floating
//! point anywhere: eliminations are proofs, and a rounded bound is not a
//! proof. Floor expressions such as `floor(sqrt(v) + 11/2)` are evaluated
//! by integer comparisons only.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::Ratio as NumRatio;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::Error;

/// Non-negative exact integer. All engine quantities (v, k, t, b, q, ...)
/// live here once they leave the u64 range of the CLI surface.
pub type Nat = BigUint;

/// Exact rational with positive denominator, always reduced.
pub type Ratio = NumRatio<BigInt>;

/// Shorthand constructor.
pub fn nat(n: u64) -> Nat {
    BigUint::from(n)
}

/// Exact rational from a u64.
pub fn ratio_int(n: u64) -> Ratio {
    Ratio::from_integer(BigInt::from(n))
}

/// Exact rational num/den (den must be nonzero).
pub fn ratio(num: &Nat, den: &Nat) -> Ratio {
    Ratio::new(BigInt::from(num.clone()), BigInt::from(den.clone()))
}

/// Binomial coefficient C(n, r); 0 when r > n.
///
/// Multiplicative evaluation with exact division at every step.
pub fn binom(n: &Nat, r: &Nat) -> Nat {
    if r > n {
        return Nat::zero();
    }
    // symmetry: use the smaller of r, n-r
    let nr = n - r;
    let r = if &nr < r { &nr } else { r };
    let Some(r) = r.to_u64() else {
        // r and n-r both enormous is outside any use this engine has
        panic!("binom: index too large to iterate");
    };
    let mut acc = Nat::one();
    let mut num = n.clone();
    for i in 1..=r {
        acc *= &num;
        acc /= nat(i);
        num -= 1u32;
    }
    acc
}

/// Falling factorial n (n-1) ... (n-m+1); 1 when m = 0.
pub fn falling(n: &Nat, m: u64) -> Nat {
    let mut acc = Nat::one();
    let mut cur = n.clone();
    for _ in 0..m {
        acc *= &cur;
        if cur.is_zero() {
            break;
        }
        cur -= 1u32;
    }
    acc
}

/// All positive divisors of n in increasing order. Rejects n = 0.
pub fn divisors(n: &Nat) -> Result<Vec<Nat>, Error> {
    if n.is_zero() {
        return Err(Error::InvalidInput("divisors of 0 are undefined".into()));
    }
    if let Some(n) = n.to_u64() {
        let mut small = Vec::new();
        let mut large = Vec::new();
        let mut d = 1u64;
        while d.saturating_mul(d) <= n {
            if n % d == 0 {
                small.push(d);
                if d != n / d {
                    large.push(n / d);
                }
            }
            d += 1;
        }
        large.reverse();
        small.extend(large);
        return Ok(small.into_iter().map(nat).collect());
    }
    // bignum fallback, trial division; only hit by off-label use
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = Nat::one();
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            let q = n / &d;
            small.push(d.clone());
            if q != d {
                large.push(q);
            }
        }
        d += 1u32;
    }
    large.reverse();
    small.extend(large);
    Ok(small)
}

/// If n = p^e with p prime, returns (p, e). Rejects n < 2.
pub fn prime_power(n: &Nat) -> Result<Option<(Nat, u64)>, Error> {
    let two = nat(2);
    if *n < two {
        return Err(Error::InvalidInput("prime_power needs n >= 2".into()));
    }
    if let Some(n64) = n.to_u64() {
        return Ok(prime_power_u64(n64).map(|(p, e)| (nat(p), e)));
    }
    // bignum trial division
    let mut p = two;
    while &p * &p <= *n {
        if (n % &p).is_zero() {
            let mut m = n.clone();
            let mut e = 0u64;
            while (&m % &p).is_zero() {
                m /= &p;
                e += 1;
            }
            return Ok(if m.is_one() { Some((p, e)) } else { None });
        }
        p += 1u32;
    }
    Ok(Some((n.clone(), 1)))
}

/// u64 fast path of [`prime_power`]. n >= 2 assumed.
pub fn prime_power_u64(n: u64) -> Option<(u64, u64)> {
    debug_assert!(n >= 2);
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            let mut m = n;
            let mut e = 0u64;
            while m.is_multiple_of(d) {
                m /= d;
                e += 1;
            }
            return if m == 1 { Some((d, e)) } else { None };
        }
        d += 1;
    }
    Some((n, 1))
}

/// 2-adic valuation: largest m with 2^m | n. Rejects n = 0.
pub fn val2(n: &Nat) -> Result<u64, Error> {
    if n.is_zero() {
        return Err(Error::InvalidInput("val2 of 0 is undefined".into()));
    }
    Ok(n.trailing_zeros().unwrap_or(0))
}

/// Integer square root: largest s with s^2 <= n.
pub fn isqrt(n: &Nat) -> Nat {
    n.sqrt()
}

/// u64 integer square root.
pub fn isqrt_u64(n: u64) -> u64 {
    use num_integer::Roots;
    n.sqrt()
}

/// Exact quotient and remainder.
pub fn div_rem(a: &Nat, b: &Nat) -> (Nat, Nat) {
    a.div_rem(b)
}
