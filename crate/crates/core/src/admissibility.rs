//! Combinatorial existence conditions for t-(v,k,lambda) parameter tuples.
//!
//! A tuple is *admissible* when it survives every elementary counting
//! condition: integrality of all block counts lambda_s, the Tits and Cameron
//! lower bounds on v, and the Ray-Chaudhuri--Wilson bound on the number of
//! blocks. Admissibility never asserts existence; it only refuses tuples that
//! cannot be realized.

use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::exactmath::{binom, isqrt_u64, nat, ratio, Nat, Ratio};

/// The parameter tuple t-(v,k,lambda) under test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DesignParams {
    pub t: u64,
    pub v: u64,
    pub k: u64,
    pub lambda: u64,
}

impl DesignParams {
    /// Validates 1 <= t <= k <= v and lambda >= 1.
    pub fn new(t: u64, v: u64, k: u64, lambda: u64) -> Result<Self, Error> {
        if t < 1 || t > k || k > v {
            return Err(Error::InvalidInput(format!(
                "need 1 <= t <= k <= v, got t={t} k={k} v={v}"
            )));
        }
        if lambda < 1 {
            return Err(Error::InvalidInput("lambda must be >= 1".into()));
        }
        Ok(DesignParams { t, v, k, lambda })
    }

    /// Steiner parameters t-(v,k,1).
    pub fn steiner(t: u64, v: u64, k: u64) -> Result<Self, Error> {
        Self::new(t, v, k, 1)
    }

    /// Non-trivial means t < k < v.
    pub fn non_trivial(&self) -> bool {
        self.t < self.k && self.k < self.v
    }
}

/// Outcome of the Cameron bound v-t+1 >= (k-t+2)(k-t+1) for t > 2.
///
/// Equality is a dichotomy: it can only be realized at one of five listed
/// (t,k,v) triples; equality anywhere else refutes the tuple.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CameronVerdict {
    Ok,
    EqualityListed,
    EqualityUnlisted,
    Violated,
}

/// The five (t,k,v) triples that realize Cameron equality.
pub const CAMERON_EQUALITY_TRIPLES: [(u64, u64, u64); 5] =
    [(3, 4, 8), (3, 6, 22), (3, 12, 112), (4, 7, 23), (5, 8, 24)];

/// Full admissibility report for one parameter tuple.
#[derive(Debug, Clone)]
pub struct AdmissibilityReport {
    /// (s, lambda_s) for s = 0..=t; lambda_0 = b, lambda_1 = r.
    pub lambdas: Vec<(u64, Ratio)>,
    pub b: Ratio,
    pub r: Ratio,
    /// Every s in 0..=t whose integrality condition fails, ascending.
    pub failed_divisibility: Vec<u64>,
    pub tits_ok: bool,
    pub cameron_verdict: CameronVerdict,
    pub rw_ok: bool,
    pub admissible: bool,
}

/// The defining fraction of lambda_s before reduction:
/// (lambda * C(v-s, t-s), C(k-s, t-s)). Rejects s > t.
pub fn lambda_raw(p: &DesignParams, s: u64) -> Result<(Nat, Nat), Error> {
    if s > p.t {
        return Err(Error::InvalidInput(format!("s={s} exceeds t={}", p.t)));
    }
    let num = nat(p.lambda) * binom(&nat(p.v - s), &nat(p.t - s));
    let den = binom(&nat(p.k - s), &nat(p.t - s));
    Ok((num, den))
}

/// lambda_s = lambda * C(v-s, t-s) / C(k-s, t-s), exact and reduced.
/// Rejects s > t.
pub fn lambda_s(p: &DesignParams, s: u64) -> Result<Ratio, Error> {
    let (num, den) = lambda_raw(p, s)?;
    Ok(ratio(&num, &den))
}

/// (b, r) = (lambda_0, lambda_1) as exact rationals.
pub fn basic_counts(p: &DesignParams) -> (Ratio, Ratio) {
    let b = lambda_s(p, 0).expect("s=0 is always valid");
    let r = lambda_s(p, 1).expect("s=1 is valid since t >= 1");
    (b, r)
}

/// Every s in 0..=t whose divisibility condition
/// lambda * C(v-s,t-s) = 0 mod C(k-s,t-s) fails, in ascending order.
///
/// s = 0 (integrality of b) is included: any design has an integral block
/// count, forced by the same counting identity.
pub fn divisibility_check(p: &DesignParams) -> Vec<u64> {
    (0..=p.t)
        .filter(|&s| {
            let num = nat(p.lambda) * binom(&nat(p.v - s), &nat(p.t - s));
            let den = binom(&nat(p.k - s), &nat(p.t - s));
            !(num % den).is_zero()
        })
        .collect()
}

/// Tits bound: v >= (t+1)(k-t+1).
pub fn tits_ok(p: &DesignParams) -> bool {
    nat(p.v) >= nat(p.t + 1) * nat(p.k - p.t + 1)
}

/// Cameron bound v-t+1 >= (k-t+2)(k-t+1) for t > 2, with the equality
/// dichotomy. For t <= 2 the bound does not apply and the verdict is Ok.
pub fn cameron_verdict(p: &DesignParams) -> CameronVerdict {
    if p.t <= 2 {
        return CameronVerdict::Ok;
    }
    let lhs = nat(p.v - p.t + 1);
    let rhs = nat(p.k - p.t + 2) * nat(p.k - p.t + 1);
    if lhs > rhs {
        CameronVerdict::Ok
    } else if lhs < rhs {
        CameronVerdict::Violated
    } else if CAMERON_EQUALITY_TRIPLES.contains(&(p.t, p.k, p.v)) {
        CameronVerdict::EqualityListed
    } else {
        CameronVerdict::EqualityUnlisted
    }
}

/// Ray-Chaudhuri--Wilson block-count bound with s = floor(t/2).
///
/// t = 2s:   if v >= k+s then b >= C(v, s).
/// t = 2s+1: if v-1 >= k+s then b >= 2 C(v-1, s).
///
/// b is always computed from the parameters, never taken from a caller.
/// When the theorem's hypothesis on v fails the check is vacuous.
pub fn rw_ok(p: &DesignParams) -> bool {
    let s = p.t / 2;
    let (b, _) = basic_counts(p);
    if p.t.is_multiple_of(2) {
        if p.v < p.k + s {
            return true;
        }
        let bound = binom(&nat(p.v), &nat(s));
        b >= ratio(&bound, &Nat::one())
    } else {
        if p.v - 1 < p.k + s {
            return true;
        }
        let bound = nat(2) * binom(&nat(p.v - 1), &nat(s));
        b >= ratio(&bound, &Nat::one())
    }
}

/// Bundled bound checks: (tits_ok, cameron_verdict, rw_ok).
pub fn bounds_check(p: &DesignParams) -> (bool, CameronVerdict, bool) {
    (tits_ok(p), cameron_verdict(p), rw_ok(p))
}

/// Aggregated report. `admissible` holds iff there is no divisibility
/// failure, Tits and RW pass, and the Cameron verdict is Ok or a listed
/// equality.
pub fn admissible_report(p: &DesignParams) -> AdmissibilityReport {
    let lambdas: Vec<(u64, Ratio)> = (0..=p.t)
        .map(|s| (s, lambda_s(p, s).expect("s <= t")))
        .collect();
    let (b, r) = basic_counts(p);
    let failed = divisibility_check(p);
    let (tits, cam, rw) = bounds_check(p);
    let admissible = failed.is_empty()
        && tits
        && matches!(cam, CameronVerdict::Ok | CameronVerdict::EqualityListed)
        && rw;
    AdmissibilityReport {
        lambdas,
        b,
        r,
        failed_divisibility: failed,
        tits_ok: tits,
        cameron_verdict: cam,
        rw_ok: rw,
        admissible,
    }
}

/// k-cap for non-trivial Steiner 7-designs: floor(sqrt(v) + 11/2),
/// evaluated without floating point. Rejects v < 9.
///
/// With s = isqrt(v): the fractional part of sqrt(v) reaches 1/2 exactly
/// when 4v >= (2s+1)^2, so the floor is s+5 below that threshold and s+6
/// at or above it.
pub fn kmax7(v: u64) -> Result<u64, Error> {
    if v < 9 {
        return Err(Error::InvalidInput(format!("kmax7 needs v >= 9, got {v}")));
    }
    let s = isqrt_u64(v);
    // 4v and (2s+1)^2 fit in u128 for every u64 input
    let reach_half = (4 * v as u128) >= (2 * s as u128 + 1).pow(2);
    Ok(if reach_half { s + 6 } else { s + 5 })
}

/// Pretty rational for report text: integer when integral, num/den otherwise.
pub fn ratio_display(x: &Ratio) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Render the report as the CLI prints it. Fractions are shown unreduced
/// (the defining counting quotient), integers plain.
pub fn report_text(p: &DesignParams, rep: &AdmissibilityReport) -> String {
    let raw = |s: u64| {
        let (num, den) = lambda_raw(p, s).expect("s <= t");
        if (&num % &den).is_zero() {
            (num / den).to_string()
        } else {
            format!("{num}/{den}")
        }
    };
    let mut out = String::new();
    out.push_str(&format!(
        "params: {}-({},{},{})\n",
        p.t, p.v, p.k, p.lambda
    ));
    out.push_str(&format!("b = {}\n", raw(0)));
    out.push_str(&format!("r = {}\n", raw(1)));
    for (s, _) in &rep.lambdas {
        out.push_str(&format!("lambda_{s} = {}\n", raw(*s)));
    }
    out.push_str(&format!(
        "tits: {} cameron: {} rw: {}\n",
        if rep.tits_ok { "ok" } else { "violated" },
        match rep.cameron_verdict {
            CameronVerdict::Ok => "ok",
            CameronVerdict::EqualityListed => "equality_listed",
            CameronVerdict::EqualityUnlisted => "equality_unlisted",
            CameronVerdict::Violated => "violated",
        },
        if rep.rw_ok { "ok" } else { "violated" },
    ));
    if rep.admissible {
        out.push_str("admissible\n");
    } else if let Some(&s) = rep.failed_divisibility.first() {
        out.push_str(&format!("inadmissible: lambda_{s} = {}\n", raw(s)));
    } else {
        out.push_str("inadmissible: bound violation\n");
    }
    out
}

/// True iff the rational is a (non-negative) integer.
pub fn is_integral(x: &Ratio) -> bool {
    x.denom().is_one() && !x.numer().is_negative()
}

/// Numerator as Nat for an integral non-negative rational.
pub fn to_nat(x: &Ratio) -> Option<Nat> {
    if is_integral(x) {
        x.numer().to_biguint()
    } else {
        None
    }
}
