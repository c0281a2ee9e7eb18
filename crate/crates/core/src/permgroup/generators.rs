//! Standard generator sets for the catalog families, in their natural
//! actions.
//!
//! Projective line points for PSL(2,q) are ordered infinity, 0, 1, ...,
//! q-1 and mapped to indices 0..=q. Affine groups act on the 2^d vectors
//! of V(d,2) encoded as integers (bit i = coordinate i).

use super::field::SmallField;
use super::{GeneratorSet, Permutation};
use crate::catalog::{Family, GroupSpec};
use crate::error::Error;

/// Largest degree standard_generators will build.
pub const DEGREE_CAP: u64 = 10_000;

fn perm_from_fn(degree: usize, f: impl Fn(u32) -> u32) -> Permutation {
    Permutation::from_images((0..degree as u32).map(f).collect())
        .expect("generator construction produced a non-bijection")
}

/// x -> a x + b type generators of AGL(1,q); with the field automorphism
/// appended this generates AGammaL(1,q).
fn agl1_generators(q: u64, semilinear: bool) -> Result<GeneratorSet, Error> {
    let f = SmallField::new(q)?;
    let lam = f.primitive_element();
    let n = q as usize;
    let mut gens = vec![
        perm_from_fn(n, |x| f.add(x as u64, 1) as u32),
        perm_from_fn(n, |x| f.mul(lam, x as u64) as u32),
    ];
    if semilinear {
        gens.push(perm_from_fn(n, |x| f.frobenius(x as u64) as u32));
    }
    GeneratorSet::new(gens)
}

/// PSL(2,q) on the projective line: the full unipotent root group
/// x -> x + lam^i (i < e) together with the inversion x -> -1/x.
pub fn psl2_socle_generators(q: u64) -> Result<GeneratorSet, Error> {
    let f = SmallField::new(q)?;
    let lam = f.primitive_element();
    let n = (q + 1) as usize;
    // index 0 = infinity, index x+1 = field element x
    let mut gens = Vec::new();
    for i in 0..f.e as u64 {
        let c = f.pow(lam, i);
        gens.push(perm_from_fn(n, |pt| {
            if pt == 0 {
                0
            } else {
                f.add((pt - 1) as u64, c) as u32 + 1
            }
        }));
    }
    gens.push(perm_from_fn(n, |pt| {
        if pt == 0 {
            1 // infinity -> 0
        } else if pt == 1 {
            0 // 0 -> infinity
        } else {
            f.neg(f.inv((pt - 1) as u64)) as u32 + 1
        }
    }));
    GeneratorSet::new(gens)
}

/// PGammaL(2,q): the socle generators plus the diagonal x -> lam x and the
/// field automorphism x -> x^p.
pub fn pgammal2_generators(q: u64) -> Result<GeneratorSet, Error> {
    let f = SmallField::new(q)?;
    let lam = f.primitive_element();
    let n = (q + 1) as usize;
    let mut gens = psl2_socle_generators(q)?.gens().to_vec();
    gens.push(perm_from_fn(n, |pt| {
        if pt == 0 {
            0
        } else {
            f.mul(lam, (pt - 1) as u64) as u32 + 1
        }
    }));
    gens.push(perm_from_fn(n, |pt| {
        if pt == 0 {
            0
        } else {
            f.frobenius((pt - 1) as u64) as u32 + 1
        }
    }));
    GeneratorSet::new(gens)
}

/// Image of vector x under the linear map with column images `cols`
/// (cols[j] = image of basis vector e_j, vectors as bitmask integers).
fn linear_apply(cols: &[u32], x: u32) -> u32 {
    let mut y = 0;
    for (j, &c) in cols.iter().enumerate() {
        if x >> j & 1 == 1 {
            y ^= c;
        }
    }
    y
}

/// Generators of SL(d,2) = GL(d,2) as permutations of the 2^d vectors:
/// all elementary transvections row_i += row_j. Plain but dependable.
pub fn sl2d_linear_generators(d: u32) -> Vec<Permutation> {
    let n = 1usize << d;
    let mut gens = Vec::new();
    for i in 0..d {
        for j in 0..d {
            if i == j {
                continue;
            }
            // column form of I + E_{ij}: e_j additionally maps onto e_i
            let cols: Vec<u32> = (0..d)
                .map(|c| {
                    let mut img = 1u32 << c;
                    if c == j {
                        img |= 1 << i;
                    }
                    img
                })
                .collect();
            gens.push(perm_from_fn(n, |x| linear_apply(&cols, x)));
        }
    }
    gens
}

/// A7 inside GL(4,2), frozen as basis-image columns. Found by deterministic
/// search (first order-7 element of GL(4,2) in image-list order, then the
/// first order-5 element generating a subgroup of order 2520 with it);
/// the unit tests re-verify order, degree and 3-homogeneity from scratch.
pub const A7_GL42_GEN_A_COLS: [u32; 4] = [1, 4, 8, 6];
pub const A7_GL42_GEN_B_COLS: [u32; 4] = [2, 4, 9, 12];

/// The two frozen A7 generators as permutations of the 16 vectors.
pub fn a7_linear_generators() -> Vec<Permutation> {
    vec![
        perm_from_fn(16, |x| linear_apply(&A7_GL42_GEN_A_COLS, x)),
        perm_from_fn(16, |x| linear_apply(&A7_GL42_GEN_B_COLS, x)),
    ]
}

/// Affine closure: linear generators plus the translation x -> x + e_1.
/// Conjugation by the linear part reaches every translation.
fn affine_from_linear(d: u32, mut linear: Vec<Permutation>) -> Result<GeneratorSet, Error> {
    let n = 1usize << d;
    linear.push(perm_from_fn(n, |x| x ^ 1));
    GeneratorSet::new(linear)
}

/// Generators of A_n: a 3-cycle plus a long even cycle.
pub fn alternating_generators(v: u64) -> Result<GeneratorSet, Error> {
    if v < 3 {
        return Err(Error::UnsupportedFamily(format!(
            "alternating group needs degree >= 3, got {v}"
        )));
    }
    let n = v as usize;
    let three_cycle = perm_from_fn(n, |x| match x {
        0 => 1,
        1 => 2,
        2 => 0,
        other => other,
    });
    let long = if v % 2 == 1 {
        // n-cycle (even permutation for odd n)
        perm_from_fn(n, |x| if x as u64 == v - 1 { 0 } else { x + 1 })
    } else {
        // (n-1)-cycle on points 1..n
        perm_from_fn(n, |x| {
            if x == 0 {
                0
            } else if x as u64 == v - 1 {
                1
            } else {
                x + 1
            }
        })
    };
    GeneratorSet::new(vec![three_cycle, long])
}

/// Standard generators for a catalog entry in its natural action.
///
/// Supported: the three one-dimensional affine families, PSL(2,q) for
/// q <= 128 (socle generators; see [`pgammal2_generators`] for the full
/// semilinear extension), affine SL(d,2) for d <= 5, affine A7, and A_v for
/// v <= 16. Mathieu families have no generators here and are rejected.
pub fn standard_generators(g: &GroupSpec) -> Result<GeneratorSet, Error> {
    if g.degree > DEGREE_CAP {
        return Err(Error::SizeExceeded(format!(
            "degree {} exceeds generator cap {DEGREE_CAP}",
            g.degree
        )));
    }
    match g.family {
        Family::Agl1_8 => agl1_generators(8, false),
        Family::AGammaL1_8 => agl1_generators(8, true),
        Family::AGammaL1_32 => agl1_generators(32, true),
        Family::Psl2 { q } => {
            if q > 128 {
                return Err(Error::UnsupportedFamily(format!(
                    "PSL(2,{q}) generators supported only for q <= 128"
                )));
            }
            psl2_socle_generators(q)
        }
        Family::AffineSl { d } => {
            if !(2..=5).contains(&d) {
                return Err(Error::UnsupportedFamily(format!(
                    "affine SL({d},2) generators supported only for d <= 5"
                )));
            }
            affine_from_linear(d, sl2d_linear_generators(d))
        }
        Family::AffineA7 => affine_from_linear(4, a7_linear_generators()),
        Family::Alternating { v } => {
            if v > 16 {
                return Err(Error::UnsupportedFamily(format!(
                    "A_{v} enumeration-scale generators capped at degree 16"
                )));
            }
            alternating_generators(v)
        }
        Family::Mathieu { .. } | Family::M11On12 => Err(Error::UnsupportedFamily(format!(
            "no generators implemented for {}",
            g.family.display()
        ))),
    }
}

/// The order standard_generators is expected to reach: the socle for the
/// almost simple families whose generators build N rather than Aut(N)
/// (PSL(2,q) and A_v), the full catalog order for the rest.
pub fn expected_enumerated_order(g: &GroupSpec) -> crate::exactmath::Nat {
    match g.family {
        Family::Psl2 { .. } | Family::Alternating { .. } => g.socle_order(),
        _ => g.order(),
    }
}
