//! Case-by-case elimination of block-transitive Steiner designs, with
//! replayable certificates.
//!
//! For t = 7 the engine walks, for every degree v up to a bound, each
//! 3-homogeneous candidate group and each admissible block size
//! k in [8, min(kmax7(v), v-1)], and emits exactly one certificate per
//! eliminated (group, k) case. Alternating socles are never eliminated
//! arithmetically: their exclusion is a cited literature result, recorded
//! as such, so the dependency structure of the final statement stays
//! honest. Everything else is killed by one of a fixed set of named exact
//! checks, and each certificate stores the integers needed to re-run the
//! failed check from scratch (see [`replay`]).
//!
//! Check order is a fixed engine convention. The PSL(2,q) pipeline tries
//! the exact Cameron inequality first (strict failure, then the equality
//! dichotomy), then the block-stabilizer equation over every admissible
//! extension degree, then the lambda_s divisibility ladder. The generic
//! pipeline (Mathieu degrees) tries the Cameron equality dichotomy, then
//! divisibility, then the strict Cameron and Tits bounds, then the
//! stabilizer divisor check. The small affine groups at v = 32 lead with
//! block-count integrality, matching the shape of the case they replay.

pub mod json;
pub mod replay;

use std::collections::BTreeMap;
use std::sync::mpsc;

use num_traits::{One, ToPrimitive, Zero};

use crate::admissibility::{kmax7, lambda_raw, DesignParams, CAMERON_EQUALITY_TRIPLES};
use crate::catalog::{candidates_for_degree, psl2_is_3homog, psl2_n, Family, GroupSpec};
use crate::error::Error;
use crate::exactmath::{div_rem, divisors, falling, nat, prime_power_u64, val2, Nat};

/// Literature pointer attached to every alternating-socle entry.
pub const ALTERNATING_CITATION: &str =
    "Cameron & Praeger 1993, Sect. 2 (Prop. 2.4): alternating socle admits no \
     non-trivial block-transitive Steiner t-design with t >= 7; cited, not re-derived";

/// Block sizes a certificate covers: one k or a closed range.
/// A range with hi < lo is the empty interval (the v = 8 degree, where no
/// non-trivial block size exists at all).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KScope {
    Single(u64),
    Range { lo: u64, hi: u64 },
}

impl KScope {
    pub fn covers(&self, k: u64) -> bool {
        match *self {
            KScope::Single(x) => x == k,
            KScope::Range { lo, hi } => lo <= k && k <= hi,
        }
    }
}

/// Reason codes, one per named check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Reason {
    KExceedsDegree,
    CameronBound,
    CameronEqualityUnlisted,
    TitsBound,
    DivisibilityFail,
    BExceedsGroupOrder,
    StabilizerNotIntegral,
    StabilizerNotDivisor,
    EqAFail,
    Eq0NoSolution,
    Parity16,
    SpanArgument,
}

impl Reason {
    pub fn code(&self) -> &'static str {
        match self {
            Reason::KExceedsDegree => "K_EXCEEDS_DEGREE",
            Reason::CameronBound => "CAMERON_BOUND",
            Reason::CameronEqualityUnlisted => "CAMERON_EQUALITY_UNLISTED",
            Reason::TitsBound => "TITS_BOUND",
            Reason::DivisibilityFail => "DIVISIBILITY_FAIL",
            Reason::BExceedsGroupOrder => "B_EXCEEDS_GROUP_ORDER",
            Reason::StabilizerNotIntegral => "STABILIZER_NOT_INTEGRAL",
            Reason::StabilizerNotDivisor => "STABILIZER_NOT_DIVISOR",
            Reason::EqAFail => "EQ_A_FAIL",
            Reason::Eq0NoSolution => "EQ0_NO_SOLUTION",
            Reason::Parity16 => "PARITY_16",
            Reason::SpanArgument => "SPAN_ARGUMENT",
        }
    }

    pub fn from_code(code: &str) -> Result<Reason, Error> {
        Ok(match code {
            "K_EXCEEDS_DEGREE" => Reason::KExceedsDegree,
            "CAMERON_BOUND" => Reason::CameronBound,
            "CAMERON_EQUALITY_UNLISTED" => Reason::CameronEqualityUnlisted,
            "TITS_BOUND" => Reason::TitsBound,
            "DIVISIBILITY_FAIL" => Reason::DivisibilityFail,
            "B_EXCEEDS_GROUP_ORDER" => Reason::BExceedsGroupOrder,
            "STABILIZER_NOT_INTEGRAL" => Reason::StabilizerNotIntegral,
            "STABILIZER_NOT_DIVISOR" => Reason::StabilizerNotDivisor,
            "EQ_A_FAIL" => Reason::EqAFail,
            "EQ0_NO_SOLUTION" => Reason::Eq0NoSolution,
            "PARITY_16" => Reason::Parity16,
            "SPAN_ARGUMENT" => Reason::SpanArgument,
            other => return Err(Error::Parse(format!("unknown reason code {other}"))),
        })
    }
}

/// One eliminated case with the exact integers needed to recheck it.
/// Witnesses are kept sorted by name; values serialize as decimal strings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub t: u64,
    pub family: Family,
    pub v: u64,
    pub k: KScope,
    pub reason: Reason,
    pub witnesses: Vec<(String, Nat)>,
}

impl Certificate {
    fn new(
        t: u64,
        family: Family,
        v: u64,
        k: KScope,
        reason: Reason,
        mut witnesses: Vec<(String, Nat)>,
    ) -> Certificate {
        witnesses.sort_by(|a, b| a.0.cmp(&b.0));
        Certificate {
            t,
            family,
            v,
            k,
            reason,
            witnesses,
        }
    }

    pub fn witness(&self, name: &str) -> Option<&Nat> {
        self.witnesses
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, v)| v)
    }

    /// One human-readable line.
    pub fn display_line(&self) -> String {
        let k = match self.k {
            KScope::Single(k) => format!("k={k}"),
            KScope::Range { lo, hi } => format!("k={lo}..{hi}"),
        };
        let wits: Vec<String> = self
            .witnesses
            .iter()
            .map(|(n, v)| format!("{n}={v}"))
            .collect();
        format!(
            "{} v={} {} {} [{}]",
            self.family.display(),
            self.v,
            k,
            self.reason.code(),
            wits.join(" ")
        )
    }
}

/// A candidate case no check eliminated. The t = 7 sweep expects none.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Survivor {
    pub family: Family,
    pub v: u64,
    pub k: u64,
}

/// A family whose exclusion is consumed from the literature.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExternalEntry {
    pub family: Family,
    pub v: u64,
    pub citation: &'static str,
}

/// Everything one degree contributes to the sweep.
#[derive(Debug, Clone, Default)]
pub struct DegreeOutcome {
    pub v: u64,
    pub certificates: Vec<Certificate>,
    pub survivors: Vec<Survivor>,
    pub external: Vec<ExternalEntry>,
}

/// Collected sweep output (small bounds; the CLI streams instead).
#[derive(Debug, Clone)]
pub struct SweepResult {
    pub t: u64,
    pub v_max: u64,
    pub certificates: Vec<Certificate>,
    pub survivors: Vec<Survivor>,
    pub external: Vec<ExternalEntry>,
}

/// Running counters for a streaming sweep.
#[derive(Debug, Clone, Default)]
pub struct SweepStats {
    pub degrees: u64,
    pub certificates: u64,
    pub survivors: u64,
    pub external: u64,
    pub reasons: BTreeMap<&'static str, u64>,
}

fn wit(name: &str, value: Nat) -> (String, Nat) {
    (name.to_string(), value)
}

/// b = C(v,t)/C(k,t) as an exact (num, den) pair before reduction.
fn block_count_raw(t: u64, v: u64, k: u64) -> (Nat, Nat) {
    let p = DesignParams::steiner(t, v, k).expect("t <= k <= v checked by caller");
    lambda_raw(&p, 0).expect("s = 0 always valid")
}

/// Highest s in 0..=t whose divisibility condition fails, with the raw
/// fraction and remainder.
fn highest_divisibility_failure(t: u64, v: u64, k: u64) -> Option<(u64, Nat, Nat, Nat)> {
    let p = DesignParams::steiner(t, v, k).ok()?;
    for s in (0..=t).rev() {
        let (num, den) = lambda_raw(&p, s).expect("s <= t");
        let (_, rem) = div_rem(&num, &den);
        if !rem.is_zero() {
            return Some((s, num, den, rem));
        }
    }
    None
}

/// Block stabilizer orders |G_B| = |G|/b per extension multiplier of the
/// family: (multiplier, Some(|G_B|) when integral and >= 1).
///
/// Callers must have established that b is a positive integer.
pub fn stab_orders(g: &GroupSpec, p: &DesignParams) -> Vec<(u64, Option<Nat>)> {
    let (num, den) = lambda_raw(p, 0).expect("s = 0");
    let (b, rem) = div_rem(&num, &den);
    assert!(rem.is_zero(), "stab_orders needs an integral block count");
    let socle = g.socle_order();
    g.extension_multipliers()
        .into_iter()
        .map(|m| {
            let order = &socle * nat(m);
            let (q, r) = div_rem(&order, &b);
            let ok = r.is_zero() && !q.is_zero();
            (m, if ok { Some(q) } else { None })
        })
        .collect()
}

/// |G_B| for the maximal extension, when the division is exact: the single
/// number b = |G|/|G_B| forces. Empty when the order is not an exact
/// positive multiple of b.
pub fn stab_order(g: &GroupSpec, p: &DesignParams) -> Option<Nat> {
    let (num, den) = lambda_raw(p, 0).expect("s = 0");
    let (b, rem) = div_rem(&num, &den);
    if !rem.is_zero() || b.is_zero() {
        return None;
    }
    let order = g.order();
    let (q, r) = div_rem(&order, &b);
    if r.is_zero() && !q.is_zero() {
        Some(q)
    } else {
        None
    }
}

// ---------------------------------------------------------------------------
// t = 7 case handlers
// ---------------------------------------------------------------------------

/// The one-dimensional affine degrees of the t = 7 proof: v = 8 and v = 32.
///
/// v = 8 dies wholesale: a non-trivial block size needs 7 < k < 8. The
/// certificate carries the empty admissible interval [8, 7] on the maximal
/// v = 8 family. v = 32 has |G| = 5v(v-1) = 4960 and k <= 11; each k dies
/// by block-count integrality or because b outgrows the group.
pub fn eliminate_affine_small(v: u64) -> Result<Vec<Certificate>, Error> {
    let t = 7u64;
    match v {
        8 => Ok(vec![Certificate::new(
            t,
            Family::AGammaL1_8,
            8,
            KScope::Range { lo: t + 1, hi: v - 1 },
            Reason::KExceedsDegree,
            vec![wit("k_min", nat(t + 1)), wit("k_max", nat(v - 1))],
        )]),
        32 => {
            let spec = GroupSpec::new(Family::AGammaL1_32);
            let group_order = spec.order();
            let mut out = Vec::new();
            for k in (t + 1)..=kmax7(v)?.min(v - 1) {
                let (num, den) = block_count_raw(t, v, k);
                let (b, rem) = div_rem(&num, &den);
                if !rem.is_zero() {
                    out.push(Certificate::new(
                        t,
                        spec.family,
                        v,
                        KScope::Single(k),
                        Reason::DivisibilityFail,
                        vec![
                            wit("s", nat(0)),
                            wit("num", num),
                            wit("den", den),
                            wit("rem", rem),
                        ],
                    ));
                    continue;
                }
                if b > group_order {
                    out.push(Certificate::new(
                        t,
                        spec.family,
                        v,
                        KScope::Single(k),
                        Reason::BExceedsGroupOrder,
                        vec![wit("b", b), wit("group_order", group_order.clone())],
                    ));
                    continue;
                }
                let (_, r) = div_rem(&group_order, &b);
                if !r.is_zero() {
                    out.push(Certificate::new(
                        t,
                        spec.family,
                        v,
                        KScope::Single(k),
                        Reason::StabilizerNotDivisor,
                        vec![
                            wit("b", b),
                            wit("order_0", group_order.clone()),
                            wit("rem_0", r),
                        ],
                    ));
                    continue;
                }
                // stabilizer arithmetic passes; fall back to the ladder
                if let Some((s, num, den, rem)) = highest_divisibility_failure(t, v, k) {
                    out.push(Certificate::new(
                        t,
                        spec.family,
                        v,
                        KScope::Single(k),
                        Reason::DivisibilityFail,
                        vec![
                            wit("s", nat(s)),
                            wit("num", num),
                            wit("den", den),
                            wit("rem", rem),
                        ],
                    ));
                } else {
                    return Err(Error::InvalidInput(format!(
                        "unexpected surviving case AGammaL1_32 k={k}"
                    )));
                }
            }
            Ok(out)
        }
        other => Err(Error::InvalidInput(format!(
            "eliminate_affine_small handles v = 8 or 32, got {other}"
        ))),
    }
}

/// Affine SL(d,2) degrees, d >= 4: the span argument.
///
/// Seven points of AG(d,2) spanning a 3-dimensional subspace E force their
/// block either inside E (then block-transitivity traps every block in a
/// 3-flat, contradicting Steiner uniqueness for non-coplanar 7-sets) or
/// onto all of V minus E, making k >= 2^d - 1, which the k-cap forbids.
/// One certificate covers the whole k-range. The transitivity premise
/// (the stabilizer of E sweeps V minus E) is verified by permutation
/// machinery for d <= 5 and recorded as structurally justified above that.
pub fn eliminate_sl_d2(d: u32) -> Result<Certificate, Error> {
    if d < 4 {
        return Err(Error::InvalidInput(format!(
            "eliminate_sl_d2 needs d >= 4 (v = 8 is the degree-8 case), got {d}"
        )));
    }
    let t = 7u64;
    let v = 1u64 << d;
    let cap = kmax7(v)?;
    let forced = v - 1;
    if forced <= cap {
        return Err(Error::InvalidInput(format!(
            "span argument inequality failed at d={d}: {forced} <= {cap}"
        )));
    }
    if d <= 5 && !span_premise_holds(d) {
        return Err(Error::InvalidInput(format!(
            "span premise verification failed at d={d}"
        )));
    }
    Ok(Certificate::new(
        t,
        Family::AffineSl { d },
        v,
        KScope::Range {
            lo: t + 1,
            hi: cap.min(v - 1),
        },
        Reason::SpanArgument,
        vec![wit("k_forced", nat(forced)), wit("k_cap", nat(cap))],
    ))
}

/// Desk-scale check of the span-argument premise: the setwise stabilizer of
/// E = span(e1,e2,e3) in SL(d,2) has a single orbit on the 2^d - 8 vectors
/// outside E.
pub fn span_premise_holds(d: u32) -> bool {
    use crate::permgroup::{generators::sl2d_linear_generators, orbit, set_stabilizer_generators, GeneratorSet};
    let n = 1u64 << d;
    let gs = match GeneratorSet::new(sl2d_linear_generators(d)) {
        Ok(gs) => gs,
        Err(_) => return false,
    };
    let subspace: Vec<u32> = (0..8).collect();
    let stab = set_stabilizer_generators(&gs, &subspace);
    let stab_gs = match GeneratorSet::new(stab) {
        Ok(gs) => gs,
        Err(_) => return false,
    };
    let outside = orbit(&stab_gs, 8);
    outside.len() as u64 == n - 8 && outside.iter().all(|&p| p >= 8)
}

/// The exceptional affine A7 on 16 points: k <= 9, and lambda_2 is
/// non-integral for both k = 8 (2002/6) and k = 9 (2002/21).
pub fn eliminate_a7_16() -> Vec<Certificate> {
    let t = 7u64;
    let v = 16u64;
    let mut out = Vec::new();
    for k in [8u64, 9] {
        let p = DesignParams::steiner(t, v, k).expect("valid");
        let (num, den) = lambda_raw(&p, 2).expect("s = 2");
        let (_, rem) = div_rem(&num, &den);
        assert!(!rem.is_zero(), "A7 case k={k} must fail lambda_2 integrality");
        out.push(Certificate::new(
            t,
            Family::AffineA7,
            v,
            KScope::Single(k),
            Reason::DivisibilityFail,
            vec![
                wit("s", nat(2)),
                wit("num", num),
                wit("den", den),
                wit("rem", rem),
            ],
        ));
    }
    out
}

/// Outcome of one (group, k) case.
enum CaseOutcome {
    Eliminated(Certificate),
    Survived,
}

/// PSL(2,q) pipeline for one k. Order: exact Cameron strict, Cameron
/// equality dichotomy, the block-stabilizer equation over every a | ne,
/// then the divisibility ladder.
fn psl2_case(q: u64, k: u64) -> CaseOutcome {
    let t = 7u64;
    let v = q + 1;
    let family = Family::Psl2 { q };
    // Inequality (Eq-A): q - 5 >= (k-5)(k-6), the Cameron bound in this
    // degree parameterization.
    let lhs = nat(q - 5);
    let rhs = nat(k - 5) * nat(k - 6);
    if lhs < rhs {
        return CaseOutcome::Eliminated(Certificate::new(
            t,
            family,
            v,
            KScope::Single(k),
            Reason::EqAFail,
            vec![wit("lhs", lhs), wit("rhs", rhs)],
        ));
    }
    if lhs == rhs && !CAMERON_EQUALITY_TRIPLES.contains(&(t, k, v)) {
        return CaseOutcome::Eliminated(Certificate::new(
            t,
            family,
            v,
            KScope::Single(k),
            Reason::CameronEqualityUnlisted,
            vec![wit("lhs", lhs), wit("rhs", rhs)],
        ));
    }
    // Block-stabilizer equation:
    // (q-2)(q-3)(q-4)(q-5) |G_B| n = k(k-1)...(k-6) a, a | ne.
    let n = psl2_n(q);
    let (_, e) = prime_power_u64(q).expect("catalog q is a prime power");
    let ne = n * e;
    let p_product = nat(q - 2) * nat(q - 3) * nat(q - 4) * nat(q - 5);
    let falling_k7 = falling(&nat(k), 7);
    let den = &p_product * nat(n);
    let socle = crate::catalog::psl2_socle_order(q);
    let mut witnesses = vec![
        wit("p_product", p_product.clone()),
        wit("n", nat(n)),
        wit("falling_k7", falling_k7.clone()),
    ];
    let mut surviving: Vec<(u64, Nat)> = Vec::new();
    for a in divisors(&nat(ne)).expect("ne >= 1") {
        let a64 = a.to_u64().expect("ne is small");
        let num = &falling_k7 * &a;
        let (quot, rem) = div_rem(&num, &den);
        witnesses.push(wit(&format!("quot_a{a64}"), quot.clone()));
        witnesses.push(wit(&format!("rem_a{a64}"), rem.clone()));
        if quot.is_zero() || !rem.is_zero() {
            continue;
        }
        // integral candidate |G_B|; Lagrange demands it divide |G| = socle * a
        let group_order = &socle * &a;
        let (_, ord_rem) = div_rem(&group_order, &quot);
        witnesses.push(wit(&format!("ordrem_a{a64}"), ord_rem.clone()));
        if !ord_rem.is_zero() {
            continue;
        }
        surviving.push((a64, quot));
    }
    if surviving.is_empty() {
        return CaseOutcome::Eliminated(Certificate::new(
            t,
            family,
            v,
            KScope::Single(k),
            Reason::Eq0NoSolution,
            witnesses,
        ));
    }
    // All surviving branches forcing |G_B| n = 1 with q even contradict the
    // 2-adic valuations of the two sides.
    if q.is_multiple_of(2) && surviving.iter().all(|(_, gb)| gb.is_one()) {
        let (a, gb) = surviving[0].clone();
        let lhs_val = val2(&(&p_product * nat(n) * &gb)).expect("positive");
        let rhs_val = val2(&(&falling_k7 * nat(a))).expect("positive");
        return CaseOutcome::Eliminated(Certificate::new(
            t,
            family,
            v,
            KScope::Single(k),
            Reason::Parity16,
            vec![
                wit("a", nat(a)),
                wit("g_b", gb),
                wit("val2_lhs", nat(lhs_val)),
                wit("val2_rhs", nat(rhs_val)),
            ],
        ));
    }
    // the stabilizer equation has a live branch: fall to the ladder
    if let Some((s, num, den, rem)) = highest_divisibility_failure(t, v, k) {
        return CaseOutcome::Eliminated(Certificate::new(
            t,
            family,
            v,
            KScope::Single(k),
            Reason::DivisibilityFail,
            vec![
                wit("s", nat(s)),
                wit("num", num),
                wit("den", den),
                wit("rem", rem),
            ],
        ));
    }
    CaseOutcome::Survived
}

/// Internal PSL(2,q) sweep over the k-range, separating certificates from
/// unexpected survivors.
fn psl2_outcomes(q: u64) -> Result<(Vec<Certificate>, Vec<Survivor>), Error> {
    if q < 8 {
        return Err(Error::InvalidInput(format!(
            "eliminate_psl2 needs q >= 8, got {q}"
        )));
    }
    if !psl2_is_3homog(q)? {
        return Err(Error::InvalidInput(format!(
            "PSL(2,{q}) is not 3-homogeneous (q = 1 mod 4)"
        )));
    }
    let v = q + 1;
    let mut certs = Vec::new();
    let mut survivors = Vec::new();
    for k in 8..=kmax7(v)?.min(v - 1) {
        match psl2_case(q, k) {
            CaseOutcome::Eliminated(c) => certs.push(c),
            CaseOutcome::Survived => survivors.push(Survivor {
                family: Family::Psl2 { q },
                v,
                k,
            }),
        }
    }
    Ok((certs, survivors))
}

/// PSL(2,q) handler for t = 7: one certificate per k in the admissible
/// range. Rejects q that is not a 3-homogeneous prime power >= 8.
pub fn eliminate_psl2(q: u64) -> Result<Vec<Certificate>, Error> {
    let (certs, survivors) = psl2_outcomes(q)?;
    if let Some(s) = survivors.first() {
        return Err(Error::InvalidInput(format!(
            "PSL(2,{q}) k={} survived every check",
            s.k
        )));
    }
    Ok(certs)
}

// ---------------------------------------------------------------------------
// generic pipeline (Mathieu degrees for t = 7; every family for other t)
// ---------------------------------------------------------------------------

/// Largest admissible k for the sweep at degree v: the 7-design cap for
/// t = 7, the exact Cameron cap otherwise (v-1 for t <= 2).
pub fn k_cap(t: u64, v: u64) -> Result<u64, Error> {
    if t == 7 {
        return Ok(kmax7(v)?.min(v - 1));
    }
    if t <= 2 {
        return Ok(v - 1);
    }
    let mut k = t; // will step to at least t+1 or stay below the range floor
    while (k + 1) < v {
        let cand = k + 1;
        if nat(cand - t + 2) * nat(cand - t + 1) <= nat(v - t + 1) {
            k = cand;
        } else {
            break;
        }
    }
    Ok(k.min(v - 1))
}

/// Generic per-case pipeline: Cameron equality dichotomy, divisibility
/// ladder, strict Cameron, Tits, stabilizer divisor check over every
/// admissible extension order.
fn generic_case(g: &GroupSpec, t: u64, k: u64) -> CaseOutcome {
    let v = g.degree;
    let family = g.family;
    let p = DesignParams::steiner(t, v, k).expect("range-checked");
    if t > 2 {
        let lhs = nat(v - t + 1);
        let rhs = nat(k - t + 2) * nat(k - t + 1);
        if lhs == rhs && !CAMERON_EQUALITY_TRIPLES.contains(&(t, k, v)) {
            return CaseOutcome::Eliminated(Certificate::new(
                t,
                family,
                v,
                KScope::Single(k),
                Reason::CameronEqualityUnlisted,
                vec![wit("lhs", lhs), wit("rhs", rhs)],
            ));
        }
    }
    if let Some((s, num, den, rem)) = highest_divisibility_failure(t, v, k) {
        return CaseOutcome::Eliminated(Certificate::new(
            t,
            family,
            v,
            KScope::Single(k),
            Reason::DivisibilityFail,
            vec![
                wit("s", nat(s)),
                wit("num", num),
                wit("den", den),
                wit("rem", rem),
            ],
        ));
    }
    if t > 2 {
        let lhs = nat(v - t + 1);
        let rhs = nat(k - t + 2) * nat(k - t + 1);
        if lhs < rhs {
            return CaseOutcome::Eliminated(Certificate::new(
                t,
                family,
                v,
                KScope::Single(k),
                Reason::CameronBound,
                vec![wit("lhs", lhs), wit("rhs", rhs)],
            ));
        }
    }
    let tits_bound = nat(t + 1) * nat(k - t + 1);
    if nat(v) < tits_bound {
        return CaseOutcome::Eliminated(Certificate::new(
            t,
            family,
            v,
            KScope::Single(k),
            Reason::TitsBound,
            vec![wit("v", nat(v)), wit("bound", tits_bound)],
        ));
    }
    // stabilizer arithmetic: b | |G| for some admissible extension order
    let (num, den) = lambda_raw(&p, 0).expect("s = 0");
    let (b, rem) = div_rem(&num, &den);
    debug_assert!(rem.is_zero(), "divisibility ladder includes s = 0");
    let socle = g.socle_order();
    let mut witnesses = vec![wit("b", b.clone())];
    let mut alive = false;
    let mut max_order = Nat::zero();
    for (i, m) in g.extension_multipliers().into_iter().enumerate() {
        let order = &socle * nat(m);
        let (_, r) = div_rem(&order, &b);
        witnesses.push(wit(&format!("order_{i}"), order.clone()));
        witnesses.push(wit(&format!("rem_{i}"), r.clone()));
        if r.is_zero() {
            alive = true;
        }
        if order > max_order {
            max_order = order;
        }
    }
    if !alive {
        let reason = if b > max_order {
            Reason::BExceedsGroupOrder
        } else {
            Reason::StabilizerNotDivisor
        };
        return CaseOutcome::Eliminated(Certificate::new(
            t,
            family,
            v,
            KScope::Single(k),
            reason,
            witnesses,
        ));
    }
    CaseOutcome::Survived
}

fn generic_outcomes(g: &GroupSpec, t: u64) -> Result<(Vec<Certificate>, Vec<Survivor>), Error> {
    let v = g.degree;
    let mut certs = Vec::new();
    let mut survivors = Vec::new();
    let lo = t + 1;
    let hi = k_cap(t, v)?;
    for k in lo..=hi {
        match generic_case(g, t, k) {
            CaseOutcome::Eliminated(c) => certs.push(c),
            CaseOutcome::Survived => survivors.push(Survivor {
                family: g.family,
                v,
                k,
            }),
        }
    }
    Ok((certs, survivors))
}

// ---------------------------------------------------------------------------
// degree dispatch and sweep
// ---------------------------------------------------------------------------

/// Run every candidate family at degree v through its handler. Rejects
/// v < 9 (the v = 8 special case is reachable only through [`sweep`]).
pub fn eliminate_degree(v: u64, t: u64) -> Result<DegreeOutcome, Error> {
    let mut out = DegreeOutcome {
        v,
        ..Default::default()
    };
    for g in candidates_for_degree(v)? {
        match g.family {
            Family::Alternating { .. } => out.external.push(ExternalEntry {
                family: g.family,
                v,
                citation: ALTERNATING_CITATION,
            }),
            Family::Psl2 { q } if t == 7 => {
                let (c, s) = psl2_outcomes(q)?;
                out.certificates.extend(c);
                out.survivors.extend(s);
            }
            Family::AffineSl { d } if t == 7 => {
                out.certificates.push(eliminate_sl_d2(d)?);
            }
            Family::AffineA7 if t == 7 => {
                out.certificates.extend(eliminate_a7_16());
            }
            Family::AGammaL1_32 if t == 7 => {
                out.certificates.extend(eliminate_affine_small(32)?);
            }
            _ => {
                let (c, s) = generic_outcomes(&g, t)?;
                out.certificates.extend(c);
                out.survivors.extend(s);
            }
        }
    }
    out.certificates.sort_by_key(|c| {
        (
            c.v,
            c.family,
            match c.k {
                KScope::Single(k) => k,
                KScope::Range { lo, .. } => lo,
            },
        )
    });
    Ok(out)
}

/// True when the degree has a candidate family besides the alternating one.
pub fn has_non_alternating_candidate(v: u64) -> bool {
    candidates_for_degree(v)
        .map(|cs| cs.iter().any(|g| !matches!(g.family, Family::Alternating { .. })))
        .unwrap_or(false)
}

/// The degrees a sweep to v_max visits, ascending: every v with a
/// non-alternating candidate, plus the affine degree 8 when t = 7.
pub fn sweep_degrees(t: u64, v_max: u64) -> Vec<u64> {
    let mut out = Vec::new();
    if t == 7 && v_max >= 8 {
        out.push(8);
    }
    out.extend((9..=v_max).filter(|&v| has_non_alternating_candidate(v)));
    out
}

fn degree_outcome(t: u64, v: u64) -> Result<DegreeOutcome, Error> {
    if v == 8 {
        return Ok(DegreeOutcome {
            v: 8,
            certificates: eliminate_affine_small(8)?,
            survivors: vec![],
            external: vec![],
        });
    }
    eliminate_degree(v, t)
}

/// Streaming sweep: calls `sink` once per visited degree, in ascending
/// degree order, regardless of worker count. `jobs` only partitions work;
/// the merged output is byte-identical for every value.
pub fn sweep_streaming(
    t: u64,
    v_max: u64,
    jobs: u64,
    mut sink: impl FnMut(&DegreeOutcome) -> Result<(), Error>,
) -> Result<SweepStats, Error> {
    if v_max < 9 {
        return Err(Error::InvalidInput(format!(
            "sweep needs v_max >= 9, got {v_max}"
        )));
    }
    let degrees = sweep_degrees(t, v_max);
    let mut stats = SweepStats::default();
    let mut consume = |outcome: &DegreeOutcome, sink: &mut dyn FnMut(&DegreeOutcome) -> Result<(), Error>| -> Result<(), Error> {
        stats.degrees += 1;
        stats.certificates += outcome.certificates.len() as u64;
        stats.survivors += outcome.survivors.len() as u64;
        stats.external += outcome.external.len() as u64;
        for c in &outcome.certificates {
            *stats.reasons.entry(c.reason.code()).or_insert(0) += 1;
        }
        sink(outcome)
    };
    let jobs = jobs.max(1);
    if jobs == 1 {
        for v in degrees {
            let outcome = degree_outcome(t, v)?;
            consume(&outcome, &mut sink)?;
        }
        return Ok(stats);
    }
    // fixed round-robin partition; a reorder buffer restores degree order
    let (tx, rx) = mpsc::channel::<Result<DegreeOutcome, Error>>();
    std::thread::scope(|scope| -> Result<(), Error> {
        for w in 0..jobs as usize {
            let tx = tx.clone();
            let chunk: Vec<u64> = degrees
                .iter()
                .copied()
                .skip(w)
                .step_by(jobs as usize)
                .collect();
            scope.spawn(move || {
                for v in chunk {
                    if tx.send(degree_outcome(t, v)).is_err() {
                        return;
                    }
                }
            });
        }
        drop(tx);
        let mut pending: BTreeMap<u64, DegreeOutcome> = BTreeMap::new();
        let mut next_idx = 0usize;
        for msg in rx {
            let outcome = msg?;
            pending.insert(outcome.v, outcome);
            while next_idx < degrees.len() {
                let want = degrees[next_idx];
                match pending.remove(&want) {
                    Some(o) => {
                        consume(&o, &mut sink)?;
                        next_idx += 1;
                    }
                    None => break,
                }
            }
        }
        debug_assert_eq!(next_idx, degrees.len());
        Ok(())
    })?;
    Ok(stats)
}

/// Collecting sweep for modest bounds.
pub fn sweep(t: u64, v_max: u64, jobs: u64) -> Result<SweepResult, Error> {
    let mut result = SweepResult {
        t,
        v_max,
        certificates: Vec::new(),
        survivors: Vec::new(),
        external: Vec::new(),
    };
    sweep_streaming(t, v_max, jobs, |outcome| {
        result.certificates.extend(outcome.certificates.iter().cloned());
        result.survivors.extend(outcome.survivors.iter().cloned());
        result.external.extend(outcome.external.iter().cloned());
        Ok(())
    })?;
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn reasons(certs: &[Certificate]) -> Vec<(u64, &'static str)> {
        certs
            .iter()
            .map(|c| {
                let k = match c.k {
                    KScope::Single(k) => k,
                    KScope::Range { lo, .. } => lo,
                };
                (k, c.reason.code())
            })
            .collect()
    }

    #[test]
    fn affine_small_v8() {
        let certs = eliminate_affine_small(8).unwrap();
        assert_eq!(certs.len(), 1);
        assert_eq!(certs[0].reason, Reason::KExceedsDegree);
        assert_eq!(certs[0].k, KScope::Range { lo: 8, hi: 7 });
        assert!(eliminate_affine_small(16).is_err());
    }

    #[test]
    fn affine_small_v32_table() {
        let certs = eliminate_affine_small(32).unwrap();
        assert_eq!(
            reasons(&certs),
            vec![
                (8, "B_EXCEEDS_GROUP_ORDER"),
                (9, "B_EXCEEDS_GROUP_ORDER"),
                (10, "DIVISIBILITY_FAIL"),
                (11, "DIVISIBILITY_FAIL"),
            ]
        );
        // k = 8: b = 3365856/8 = 420732 > 4960
        assert_eq!(certs[0].witness("b"), Some(&nat(420732)));
        assert_eq!(certs[0].witness("group_order"), Some(&nat(4960)));
        // k = 10: b = 3365856/120 is non-integral
        assert_eq!(certs[2].witness("s"), Some(&nat(0)));
        assert_eq!(certs[2].witness("num"), Some(&nat(3365856)));
        assert_eq!(certs[2].witness("den"), Some(&nat(120)));
    }

    #[test]
    fn sl_d2_span_certificates() {
        let c4 = eliminate_sl_d2(4).unwrap();
        assert_eq!(c4.witness("k_forced"), Some(&nat(15)));
        assert_eq!(c4.witness("k_cap"), Some(&nat(9)));
        assert_eq!(c4.k, KScope::Range { lo: 8, hi: 9 });
        let c5 = eliminate_sl_d2(5).unwrap();
        assert_eq!(c5.witness("k_forced"), Some(&nat(31)));
        assert_eq!(c5.witness("k_cap"), Some(&nat(11)));
        let c20 = eliminate_sl_d2(20).unwrap();
        assert_eq!(c20.witness("k_forced"), Some(&nat(1_048_575)));
        assert_eq!(c20.witness("k_cap"), Some(&nat(1029)));
        assert!(eliminate_sl_d2(3).is_err());
    }

    #[test]
    fn a7_16_lambda2_certificates() {
        let certs = eliminate_a7_16();
        assert_eq!(certs.len(), 2);
        assert_eq!(certs[0].witness("num"), Some(&nat(2002)));
        assert_eq!(certs[0].witness("den"), Some(&nat(6)));
        assert_eq!(certs[1].witness("num"), Some(&nat(2002)));
        assert_eq!(certs[1].witness("den"), Some(&nat(21)));
        assert!(certs.iter().all(|c| c.reason == Reason::DivisibilityFail
            && c.witness("s") == Some(&nat(2))));
    }

    #[test]
    fn psl2_32_full_table() {
        let certs = eliminate_psl2(32).unwrap();
        assert_eq!(
            reasons(&certs),
            vec![
                (8, "EQ0_NO_SOLUTION"),
                (9, "EQ0_NO_SOLUTION"),
                (10, "EQ0_NO_SOLUTION"),
                (11, "EQ_A_FAIL"),
            ]
        );
        // pinned witness numbers: 657720 = 30*29*28*27 and falling(k,7)
        for (i, fk) in [(0usize, 40320u64), (1, 181440), (2, 604800)] {
            assert_eq!(certs[i].witness("p_product"), Some(&nat(657720)));
            assert_eq!(certs[i].witness("falling_k7"), Some(&nat(fk)));
            assert_eq!(certs[i].witness("n"), Some(&nat(1)));
            // both extension branches a = 1, 5 recorded
            assert!(certs[i].witness("rem_a1").is_some());
            assert!(certs[i].witness("rem_a5").is_some());
        }
        // k = 11 fails inequality (2): 27 < 30
        assert_eq!(certs[3].witness("lhs"), Some(&nat(27)));
        assert_eq!(certs[3].witness("rhs"), Some(&nat(30)));
        // q = 32, k = 9, a = 5: 907200/657720 is non-integral
        assert_eq!(
            certs[1].witness("rem_a5"),
            Some(&nat(907200 - 657720))
        );
    }

    #[test]
    fn psl2_small_cases() {
        let c8 = eliminate_psl2(8).unwrap();
        assert_eq!(reasons(&c8), vec![(8, "EQ_A_FAIL")]);
        assert_eq!(c8[0].witness("lhs"), Some(&nat(3)));
        assert_eq!(c8[0].witness("rhs"), Some(&nat(6)));
        let c11 = eliminate_psl2(11).unwrap();
        assert_eq!(reasons(&c11), vec![(8, "CAMERON_EQUALITY_UNLISTED")]);
        assert!(eliminate_psl2(25).is_err());
        assert!(eliminate_psl2(7).is_err());
        assert!(eliminate_psl2(12).is_err());
    }

    #[test]
    fn stab_order_examples() {
        let p32 = DesignParams::steiner(7, 32, 8).unwrap();
        let agl32 = GroupSpec::new(Family::AGammaL1_32);
        assert_eq!(stab_order(&agl32, &p32), None); // b = 420732 > 4960
        let p24 = DesignParams::steiner(7, 24, 8).unwrap();
        let m24 = GroupSpec::new(Family::Mathieu { v: 24 });
        assert_eq!(stab_order(&m24, &p24), None); // 43263 does not divide |M24|
        // regular block action: b = |G| gives |G_B| = 1. A synthetic check
        // via M12 with the complete parameter t=k=v is out of range, so use
        // the identity |G|/b with the PSL2(8) socle against its own order.
        let m11 = GroupSpec::new(Family::M11On12);
        let p12 = DesignParams::steiner(2, 12, 2).unwrap(); // b = 66, r = 11
        let so = stab_orders(&m11, &p12);
        assert_eq!(so.len(), 1);
        assert_eq!(so[0].1, Some(nat(7920 / 66)));
    }

    #[test]
    fn mathieu_degree_tables() {
        let out24 = eliminate_degree(24, 7).unwrap();
        let m24: Vec<_> = out24
            .certificates
            .iter()
            .filter(|c| matches!(c.family, Family::Mathieu { .. }))
            .collect();
        assert_eq!(
            m24.iter().map(|c| (c.k, c.reason.code())).collect::<Vec<_>>(),
            vec![
                (KScope::Single(8), "STABILIZER_NOT_DIVISOR"),
                (KScope::Single(9), "DIVISIBILITY_FAIL"),
                (KScope::Single(10), "DIVISIBILITY_FAIL"),
            ]
        );
        assert_eq!(m24[0].witness("b"), Some(&nat(43263)));
        assert_eq!(m24[1].witness("s"), Some(&nat(5)));
        assert_eq!(m24[2].witness("s"), Some(&nat(6)));
        // v = 23: all three k die at s = 6 with 17/2, 17/3, 17/4
        let out23 = eliminate_degree(23, 7).unwrap();
        for (c, den) in out23.certificates.iter().zip([2u64, 3, 4]) {
            assert_eq!(c.reason, Reason::DivisibilityFail);
            assert_eq!(c.witness("s"), Some(&nat(6)));
            assert_eq!(c.witness("num"), Some(&nat(17)));
            assert_eq!(c.witness("den"), Some(&nat(den)));
        }
        // v = 12: every family's k = 8 hits the Cameron equality dichotomy
        let out12 = eliminate_degree(12, 7).unwrap();
        assert!(out12
            .certificates
            .iter()
            .all(|c| c.reason == Reason::CameronEqualityUnlisted));
        assert_eq!(out12.certificates.len(), 3); // PSL2(11), M12, M11_on_12
        // v = 11: M11's only k dies in the divisibility ladder (5/2 at s=6)
        let out11 = eliminate_degree(11, 7).unwrap();
        assert_eq!(out11.certificates.len(), 1);
        assert_eq!(out11.certificates[0].witness("s"), Some(&nat(6)));
    }

    #[test]
    fn sweep_to_33_has_no_survivors() {
        let res = sweep(7, 33, 1).unwrap();
        assert!(res.survivors.is_empty());
        // processed degrees (q = 16 contributes v = 17)
        let mut vs: Vec<u64> = res.certificates.iter().map(|c| c.v).collect();
        vs.dedup();
        assert_eq!(vs, vec![8, 9, 11, 12, 16, 17, 20, 22, 23, 24, 28, 32, 33]);
        // alternating entries are external only
        assert!(res
            .external
            .iter()
            .all(|e| matches!(e.family, Family::Alternating { .. })));
        assert_eq!(res.external.len(), 12); // every degree but v = 8
        assert!(res
            .certificates
            .iter()
            .all(|c| !matches!(c.family, Family::Alternating { .. })));
    }

    #[test]
    fn sweep_degree_9_only() {
        let res = sweep(7, 9, 1).unwrap();
        assert!(res.survivors.is_empty());
        let non_v8: Vec<_> = res.certificates.iter().filter(|c| c.v != 8).collect();
        assert_eq!(non_v8.len(), 1);
        assert_eq!(non_v8[0].family, Family::Psl2 { q: 8 });
    }

    #[test]
    fn sweep_deterministic_across_jobs() {
        let a = sweep(7, 700, 1).unwrap();
        for jobs in [2u64, 3, 7] {
            let b = sweep(7, 700, jobs).unwrap();
            assert_eq!(a.certificates, b.certificates, "jobs={jobs}");
            assert_eq!(a.survivors, b.survivors);
            assert_eq!(a.external, b.external);
        }
    }

    #[test]
    fn k_cap_matches_exact_cameron_for_t6() {
        // brute-force reference
        for v in 9u64..200 {
            let cap = k_cap(6, v).unwrap();
            for k in 7..=cap {
                assert!(nat(k - 4) * nat(k - 5) <= nat(v - 5), "v={v} k={k}");
            }
            if cap + 1 < v {
                assert!(nat(cap - 3) * nat(cap - 4) > nat(v - 5), "v={v}");
            }
        }
    }

    #[test]
    fn universal_magnitude_lemma() {
        // k(k-1)(k-2)(k-3) < 2 [(k-5)(k-6)]^2 for 27 <= k <= 10^4
        for k in 27u64..=10_000 {
            let lhs = nat(k) * nat(k - 1) * nat(k - 2) * nat(k - 3);
            let inner = nat(k - 5) * nat(k - 6);
            let rhs = nat(2) * &inner * &inner;
            assert!(lhs < rhs, "k={k}");
        }
    }

    #[test]
    fn universal_parity_lemmas() {
        // val2(falling(k,7)) >= 4 for 8 <= k <= 10^4
        for k in 8u64..=10_000 {
            assert!(val2(&falling(&nat(k), 7)).unwrap() >= 4, "k={k}");
        }
        // val2((2^e-2)(2^e-3)(2^e-4)(2^e-5)) = 3 for 3 <= e <= 60
        for e in 3u32..=60 {
            let q = Nat::one() << e;
            let p = (&q - nat(2)) * (&q - nat(3)) * (&q - nat(4)) * (&q - nat(5));
            assert_eq!(val2(&p).unwrap(), 3, "e={e}");
        }
    }

    #[test]
    fn eq0_identity_on_surviving_branches() {
        // whenever a branch survives the stabilizer equation, the defining
        // identity (q-2)(q-3)(q-4)(q-5) |G_B| n = falling(k,7) a holds; the
        // sweep never finds one below 10^5, so check the recorded quotient
        // and remainder instead over a sample of degrees.
        for q in [8u64, 11, 19, 23, 27, 31, 32, 43, 47, 59, 64, 8192] {
            let (certs, _) = psl2_outcomes(q).unwrap();
            let n = psl2_n(q);
            let p_prod = nat(q - 2) * nat(q - 3) * nat(q - 4) * nat(q - 5);
            for c in certs.iter().filter(|c| c.reason == Reason::Eq0NoSolution) {
                let KScope::Single(k) = c.k else { panic!() };
                let fk = falling(&nat(k), 7);
                for (name, val) in &c.witnesses {
                    if let Some(a) = name.strip_prefix("quot_a") {
                        let a: u64 = a.parse().unwrap();
                        let rem = c.witness(&format!("rem_a{a}")).unwrap();
                        // quotient-remainder identity against the recompute
                        assert_eq!(
                            &(&p_prod * nat(n)) * val + rem,
                            &fk * nat(a),
                            "q={q} k={k} a={a}"
                        );
                    }
                }
            }
        }
    }
}
