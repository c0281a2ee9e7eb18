//! Independent certificate recheck.
//!
//! The checker recomputes every witness value from the case coordinates
//! (t, family parameters, v, k and the recorded s or extension index) using
//! the arithmetic primitives alone, compares the full witness map exactly,
//! and then re-verifies the defining inequality or non-divisibility of the
//! reason code. Nothing is trusted from the emitting pipeline: a
//! certificate whose witnesses were perturbed in any single entry fails
//! either the recomputation match or the condition itself.

use num_traits::{One, ToPrimitive, Zero};

use crate::admissibility::{kmax7, lambda_raw, DesignParams, CAMERON_EQUALITY_TRIPLES};
use crate::catalog::{psl2_n, psl2_socle_order, Family, GroupSpec};
use crate::error::Error;
use crate::exactmath::{div_rem, divisors, falling, nat, prime_power_u64, val2, Nat};

use super::{Certificate, KScope, Reason};

fn fail(cert: &Certificate, why: &str) -> Error {
    Error::Replay(format!(
        "{} v={} {}: {why}",
        cert.family.display(),
        cert.v,
        cert.reason.code()
    ))
}

fn single_k(cert: &Certificate) -> Result<u64, Error> {
    match cert.k {
        KScope::Single(k) => Ok(k),
        KScope::Range { .. } => Err(fail(cert, "reason needs a single block size")),
    }
}

fn witness<'a>(cert: &'a Certificate, name: &str) -> Result<&'a Nat, Error> {
    cert.witness(name)
        .ok_or_else(|| fail(cert, &format!("missing witness {name}")))
}

/// Compare the stored witness list against the recomputed one, exactly.
fn expect_witnesses(cert: &Certificate, mut expected: Vec<(String, Nat)>) -> Result<(), Error> {
    expected.sort_by(|a, b| a.0.cmp(&b.0));
    if cert.witnesses == expected {
        return Ok(());
    }
    // name the first mismatch for the error message
    for (name, value) in &expected {
        match cert.witness(name) {
            None => return Err(fail(cert, &format!("missing witness {name}"))),
            Some(got) if got != value => {
                return Err(fail(
                    cert,
                    &format!("witness {name} is {got}, recomputed {value}"),
                ))
            }
            _ => {}
        }
    }
    Err(fail(cert, "extra witnesses present"))
}

fn check(cert: &Certificate, cond: bool, why: &str) -> Result<(), Error> {
    if cond {
        Ok(())
    } else {
        Err(fail(cert, why))
    }
}

/// Recheck one certificate from scratch.
pub fn replay_certificate(cert: &Certificate) -> Result<(), Error> {
    let t = cert.t;
    let v = cert.v;
    check(cert, cert.family.degree() == v, "family degree mismatch")?;
    match cert.reason {
        Reason::KExceedsDegree => {
            let expected = vec![
                ("k_min".into(), nat(t + 1)),
                ("k_max".into(), nat(v - 1)),
            ];
            expect_witnesses(cert, expected)?;
            check(cert, t + 1 > v - 1, "admissible k interval is not empty")?;
            check(
                cert,
                cert.k == KScope::Range { lo: t + 1, hi: v - 1 },
                "k scope must be the empty admissible interval",
            )
        }
        Reason::CameronBound | Reason::CameronEqualityUnlisted => {
            let k = single_k(cert)?;
            check(cert, t > 2 && k >= t, "Cameron bound needs t > 2, k >= t")?;
            let lhs = nat(v - t + 1);
            let rhs = nat(k - t + 2) * nat(k - t + 1);
            expect_witnesses(
                cert,
                vec![("lhs".into(), lhs.clone()), ("rhs".into(), rhs.clone())],
            )?;
            if cert.reason == Reason::CameronBound {
                check(cert, lhs < rhs, "Cameron inequality not strictly violated")
            } else {
                check(cert, lhs == rhs, "Cameron equality does not hold")?;
                check(
                    cert,
                    !CAMERON_EQUALITY_TRIPLES.contains(&(t, k, v)),
                    "(t,k,v) is a listed equality triple",
                )
            }
        }
        Reason::TitsBound => {
            let k = single_k(cert)?;
            let bound = nat(t + 1) * nat(k - t + 1);
            expect_witnesses(
                cert,
                vec![("v".into(), nat(v)), ("bound".into(), bound.clone())],
            )?;
            check(cert, nat(v) < bound, "Tits bound not violated")
        }
        Reason::DivisibilityFail => {
            let k = single_k(cert)?;
            let s = witness(cert, "s")?
                .to_u64()
                .ok_or_else(|| fail(cert, "witness s out of range"))?;
            check(cert, s <= t, "witness s exceeds t")?;
            let p = DesignParams::steiner(t, v, k)
                .map_err(|_| fail(cert, "parameters violate t <= k <= v"))?;
            let (num, den) = lambda_raw(&p, s).map_err(|_| fail(cert, "lambda_s rejected"))?;
            let (_, rem) = div_rem(&num, &den);
            expect_witnesses(
                cert,
                vec![
                    ("s".into(), nat(s)),
                    ("num".into(), num),
                    ("den".into(), den),
                    ("rem".into(), rem.clone()),
                ],
            )?;
            check(cert, !rem.is_zero(), "divisibility condition actually holds")
        }
        Reason::BExceedsGroupOrder => {
            let k = single_k(cert)?;
            let (b, order) = recompute_b_and_max_order(cert, t, v, k)?;
            expect_witnesses(
                cert,
                vec![("b".into(), b.clone()), ("group_order".into(), order.clone())],
            )?;
            check(cert, b > order, "block count does not exceed the group order")
        }
        Reason::StabilizerNotDivisor | Reason::StabilizerNotIntegral => {
            let k = single_k(cert)?;
            let (b, _) = recompute_b_and_max_order(cert, t, v, k)?;
            let spec = GroupSpec::new(cert.family);
            let socle = spec.socle_order();
            let mut expected = vec![("b".into(), b.clone())];
            let mut any_divides = false;
            for (i, m) in spec.extension_multipliers().into_iter().enumerate() {
                let order = &socle * nat(m);
                let (_, r) = div_rem(&order, &b);
                if r.is_zero() {
                    any_divides = true;
                }
                expected.push((format!("order_{i}"), order));
                expected.push((format!("rem_{i}"), r));
            }
            // the v = 32 hand case stores only the single AGammaL1_32 order
            if cert.family == Family::AGammaL1_32 {
                expected.retain(|(n, _)| n == "b" || n == "order_0" || n == "rem_0");
            }
            expect_witnesses(cert, expected)?;
            check(
                cert,
                !any_divides,
                "some admissible extension order is a multiple of b",
            )
        }
        Reason::EqAFail => {
            let k = single_k(cert)?;
            let q = psl2_q(cert)?;
            check(cert, t == 7, "Eq-A is the 7-design inequality")?;
            let lhs = nat(q - 5);
            let rhs = nat(k - 5) * nat(k - 6);
            expect_witnesses(
                cert,
                vec![("lhs".into(), lhs.clone()), ("rhs".into(), rhs.clone())],
            )?;
            check(cert, lhs < rhs, "inequality (2) not violated")
        }
        Reason::Eq0NoSolution => {
            let k = single_k(cert)?;
            let q = psl2_q(cert)?;
            check(cert, t == 7, "the stabilizer equation is 7-design specific")?;
            let n = psl2_n(q);
            let (_, e) = prime_power_u64(q)
                .ok_or_else(|| fail(cert, "q is not a prime power"))?;
            let p_product = nat(q - 2) * nat(q - 3) * nat(q - 4) * nat(q - 5);
            let falling_k7 = falling(&nat(k), 7);
            let den = &p_product * nat(n);
            let socle = psl2_socle_order(q);
            let mut expected = vec![
                ("p_product".into(), p_product.clone()),
                ("n".into(), nat(n)),
                ("falling_k7".into(), falling_k7.clone()),
            ];
            let mut all_dead = true;
            for a in divisors(&nat(n * e)).expect("ne >= 1") {
                let a64 = a.to_u64().expect("small");
                let num = &falling_k7 * &a;
                let (quot, rem) = div_rem(&num, &den);
                expected.push((format!("quot_a{a64}"), quot.clone()));
                expected.push((format!("rem_a{a64}"), rem.clone()));
                if quot.is_zero() || !rem.is_zero() {
                    continue;
                }
                let order = &socle * &a;
                let (_, ord_rem) = div_rem(&order, &quot);
                expected.push((format!("ordrem_a{a64}"), ord_rem.clone()));
                if ord_rem.is_zero() {
                    all_dead = false;
                }
            }
            expect_witnesses(cert, expected)?;
            check(cert, all_dead, "an extension branch solves the equation")
        }
        Reason::Parity16 => {
            let k = single_k(cert)?;
            let q = psl2_q(cert)?;
            check(cert, t == 7 && q % 2 == 0, "parity contradiction needs even q")?;
            let a = witness(cert, "a")?
                .to_u64()
                .ok_or_else(|| fail(cert, "witness a out of range"))?;
            let gb = witness(cert, "g_b")?.clone();
            let n = psl2_n(q);
            check(cert, (&gb * nat(n)).is_one(), "branch does not force |G_B| n = 1")?;
            let p_product = nat(q - 2) * nat(q - 3) * nat(q - 4) * nat(q - 5);
            let lhs = &p_product * nat(n) * &gb;
            let rhs = falling(&nat(k), 7) * nat(a);
            let lv = val2(&lhs).map_err(|_| fail(cert, "zero lhs"))?;
            let rv = val2(&rhs).map_err(|_| fail(cert, "zero rhs"))?;
            expect_witnesses(
                cert,
                vec![
                    ("a".into(), nat(a)),
                    ("g_b".into(), gb),
                    ("val2_lhs".into(), nat(lv)),
                    ("val2_rhs".into(), nat(rv)),
                ],
            )?;
            check(cert, lv == 3 && rv >= 4, "2-adic valuations do not clash")
        }
        Reason::SpanArgument => {
            let Family::AffineSl { d } = cert.family else {
                return Err(fail(cert, "span argument applies to affine SL only"));
            };
            check(cert, t == 7 && d >= 4, "span argument needs t = 7, d >= 4")?;
            check(cert, v == 1u64 << d, "degree is not 2^d")?;
            let cap = kmax7(v).map_err(|_| fail(cert, "degree below k-cap domain"))?;
            let forced = v - 1;
            expect_witnesses(
                cert,
                vec![
                    ("k_forced".into(), nat(forced)),
                    ("k_cap".into(), nat(cap)),
                ],
            )?;
            check(cert, forced > cap, "forced block size does not exceed the cap")?;
            check(
                cert,
                cert.k == KScope::Range { lo: t + 1, hi: cap.min(v - 1) },
                "k scope must be the full admissible range",
            )
        }
    }
}

fn psl2_q(cert: &Certificate) -> Result<u64, Error> {
    match cert.family {
        Family::Psl2 { q } => Ok(q),
        _ => Err(fail(cert, "reason applies to PSL(2,q) only")),
    }
}

/// b = C(v,t)/C(k,t), required integral, plus the family's maximal order.
fn recompute_b_and_max_order(
    cert: &Certificate,
    t: u64,
    v: u64,
    k: u64,
) -> Result<(Nat, Nat), Error> {
    let p = DesignParams::steiner(t, v, k)
        .map_err(|_| fail(cert, "parameters violate t <= k <= v"))?;
    let (num, den) = lambda_raw(&p, 0).expect("s = 0");
    let (b, rem) = div_rem(&num, &den);
    if !rem.is_zero() {
        return Err(fail(cert, "block count is not integral"));
    }
    Ok((b, GroupSpec::new(cert.family).order()))
}

#[cfg(test)]
mod tests {
    use super::super::{
        eliminate_a7_16, eliminate_affine_small, eliminate_degree, eliminate_psl2,
        eliminate_sl_d2, sweep, Certificate, KScope, Reason,
    };
    use super::*;

    #[test]
    fn all_handler_outputs_replay() {
        for cert in eliminate_affine_small(8).unwrap() {
            replay_certificate(&cert).unwrap();
        }
        for cert in eliminate_affine_small(32).unwrap() {
            replay_certificate(&cert).unwrap();
        }
        for d in [4u32, 5, 6, 10, 20] {
            replay_certificate(&eliminate_sl_d2(d).unwrap()).unwrap();
        }
        for cert in eliminate_a7_16() {
            replay_certificate(&cert).unwrap();
        }
        for q in [8u64, 11, 19, 23, 27, 31, 32, 64, 127, 8192] {
            for cert in eliminate_psl2(q).unwrap() {
                replay_certificate(&cert).unwrap();
            }
        }
        for v in [11u64, 12, 22, 23, 24] {
            for cert in eliminate_degree(v, 7).unwrap().certificates {
                replay_certificate(&cert).unwrap();
            }
        }
    }

    #[test]
    fn sweep_certificates_replay() {
        let res = sweep(7, 200, 1).unwrap();
        assert!(res.survivors.is_empty());
        for cert in &res.certificates {
            replay_certificate(cert).unwrap();
        }
    }

    fn mutate(cert: &Certificate, idx: usize, up: bool) -> Certificate {
        let mut c = cert.clone();
        let (_, v) = &mut c.witnesses[idx];
        if up {
            *v += 1u32;
        } else {
            assert!(!v.is_zero(), "mutation harness should bump zero upward");
            *v -= 1u32;
        }
        c
    }

    #[test]
    fn every_single_witness_mutation_is_rejected() {
        let res = sweep(7, 40, 1).unwrap();
        let mut mutations = 0;
        for cert in &res.certificates {
            for idx in 0..cert.witnesses.len() {
                let up = cert.witnesses[idx].1.is_zero();
                let bad = mutate(cert, idx, up);
                assert!(
                    replay_certificate(&bad).is_err(),
                    "mutation of {} in {} not caught",
                    bad.witnesses[idx].0,
                    cert.display_line()
                );
                mutations += 1;
                if !cert.witnesses[idx].1.is_zero() {
                    let bad = mutate(cert, idx, true);
                    assert!(replay_certificate(&bad).is_err());
                    mutations += 1;
                }
            }
        }
        assert!(mutations > 100, "only {mutations} mutations exercised");
    }

    #[test]
    fn wrong_reason_or_scope_rejected() {
        let certs = eliminate_psl2(32).unwrap();
        // swap a reason code
        let mut c = certs[0].clone();
        c.reason = Reason::EqAFail;
        assert!(replay_certificate(&c).is_err());
        // widen a k scope
        let mut c = certs[0].clone();
        c.k = KScope::Range { lo: 8, hi: 9 };
        assert!(replay_certificate(&c).is_err());
        // drop a witness
        let mut c = certs[0].clone();
        c.witnesses.pop();
        assert!(replay_certificate(&c).is_err());
        // add a witness
        let mut c = certs[0].clone();
        c.witnesses.push(("zz_extra".into(), nat(1)));
        assert!(replay_certificate(&c).is_err());
    }

    #[test]
    fn synthetic_parity16_replay_semantics() {
        // the sweep never emits PARITY_16 (the branch it guards cannot pass
        // the integrality test), so exercise the checker on a hand-built
        // certificate with the correct valuation witnesses: q = 8, k = 8,
        // a = 1 claims |G_B| n = 1, and val2(360) = 3 vs val2(40320) = 7.
        let cert = Certificate::new(
            7,
            Family::Psl2 { q: 8 },
            9,
            KScope::Single(8),
            Reason::Parity16,
            vec![
                ("a".into(), nat(1)),
                ("g_b".into(), nat(1)),
                ("val2_lhs".into(), nat(3)),
                ("val2_rhs".into(), nat(7)),
            ],
        );
        replay_certificate(&cert).unwrap();
        let mut bad = cert.clone();
        bad.witnesses[2].1 = nat(4); // val2_lhs
        assert!(replay_certificate(&bad).is_err());
    }
}
