//! Catalog of the finite 3-homogeneous permutation groups, as queryable data.
//!
//! Two types of families exist. Affine type: a regular normal subgroup of
//! order v = 2^d, with point stabilizer AGL(1,8)/AGammaL(1,8)/AGammaL(1,32)
//! style one-dimensional groups, SL(d,2), or the exceptional A7 inside
//! GL(4,2) at v = 16. Almost simple type: socle A_v, PSL(2,q) on the
//! projective line (v = q+1), the Mathieu groups in their natural degrees,
//! and M11 in its exceptional degree-12 action.
//!
//! Caveat: the published classification this mirrors has been reported in
//! the literature to have minor omissions, without specifics. The catalog
//! follows the printed list exactly and makes no attempt to repair it. One
//! visible consequence: for q = 1 (mod 4) the PSL(2,q) entry is dropped
//! wholesale, although groups strictly between PSL(2,q) and PGammaL(2,q)
//! can still be 3-homogeneous (PGammaL(2,9) on 10 points is); the degree
//! sweep therefore skips those degrees rather than certifying them.
//!
//! For PSL(2,q) the catalog keeps the socle order and the extension
//! multiplier set separately: with n = gcd(2, q-1) and q = p^e, a group
//! between PSL(2,q) and PGammaL(2,q) has order (q+1)q(q-1)/n * a for some
//! a | ne. Downstream elimination quantifies over that exact divisor set
//! rather than over the asymptotic bound a <= log2 q, which is what makes
//! every per-case check replayable.

use num_traits::One;

use crate::error::Error;
use crate::exactmath::{divisors, falling, nat, prime_power_u64, Nat};

/// Family tag plus its parameter. Declaration order is the canonical sort
/// order used everywhere (candidate lists, certificate merge keys).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    /// Socle A_v in its natural action, any degree v >= 5.
    Alternating { v: u64 },
    /// Socle PSL(2,q) on the q+1 points of the projective line.
    Psl2 { q: u64 },
    /// Mathieu group M_v in its natural degree, v in {11,12,22,23,24}.
    Mathieu { v: u64 },
    /// M11 acting 3-transitively on 12 points.
    M11On12,
    /// AGL(1,8) on 8 points.
    Agl1_8,
    /// AGammaL(1,8) on 8 points.
    AGammaL1_8,
    /// AGammaL(1,32) on 32 points.
    AGammaL1_32,
    /// 2^d : SL(d,2) acting affinely on V(d,2), d >= 2.
    AffineSl { d: u32 },
    /// 2^4 : A7, the exceptional affine group on 16 points.
    AffineA7,
}

impl Family {
    /// Number of points of the natural action.
    pub fn degree(&self) -> u64 {
        match *self {
            Family::Alternating { v } => v,
            Family::Psl2 { q } => q + 1,
            Family::Mathieu { v } => v,
            Family::M11On12 => 12,
            Family::Agl1_8 | Family::AGammaL1_8 => 8,
            Family::AGammaL1_32 => 32,
            Family::AffineSl { d } => 1u64 << d,
            Family::AffineA7 => 16,
        }
    }

    /// Canonical tag string, used in certificate files and CLI output.
    pub fn tag(&self) -> &'static str {
        match self {
            Family::Alternating { .. } => "Alternating",
            Family::Psl2 { .. } => "PSL2",
            Family::Mathieu { .. } => "Mathieu",
            Family::M11On12 => "M11_on_12",
            Family::Agl1_8 => "AGL1_8",
            Family::AGammaL1_8 => "AGammaL1_8",
            Family::AGammaL1_32 => "AGammaL1_32",
            Family::AffineSl { .. } => "Affine_SL",
            Family::AffineA7 => "Affine_A7",
        }
    }

    /// Family parameters as plain integers (q, d or v; empty when fixed).
    pub fn params(&self) -> Vec<u64> {
        match *self {
            Family::Alternating { v } => vec![v],
            Family::Psl2 { q } => vec![q],
            Family::Mathieu { v } => vec![v],
            Family::AffineSl { d } => vec![d as u64],
            _ => vec![],
        }
    }

    /// Human-readable name with parameter, e.g. "PSL2(32)".
    pub fn display(&self) -> String {
        let ps = self.params();
        if ps.is_empty() {
            self.tag().to_string()
        } else {
            format!("{}({})", self.tag(), ps[0])
        }
    }

    /// Parse the display form, e.g. "PSL2(32)", "Affine_SL(4)", "AGL1_8".
    pub fn parse_display(s: &str) -> Result<Family, Error> {
        let s = s.trim();
        if let Some((name, rest)) = s.split_once('(') {
            let inner = rest
                .strip_suffix(')')
                .ok_or_else(|| Error::Parse(format!("unbalanced parameter in {s:?}")))?;
            let param: u64 = inner
                .trim()
                .parse()
                .map_err(|e| Error::Parse(format!("bad family parameter {inner:?}: {e}")))?;
            Family::from_tag_params(name.trim(), &[param])
        } else {
            Family::from_tag_params(s, &[])
        }
    }

    /// Rebuild a family from tag + params (certificate file parsing).
    pub fn from_tag_params(tag: &str, params: &[u64]) -> Result<Family, Error> {
        let need1 = || -> Result<u64, Error> {
            params
                .first()
                .copied()
                .ok_or_else(|| Error::Parse(format!("family {tag} needs a parameter")))
        };
        Ok(match tag {
            "Alternating" => Family::Alternating { v: need1()? },
            "PSL2" => Family::Psl2 { q: need1()? },
            "Mathieu" => Family::Mathieu { v: need1()? },
            "M11_on_12" => Family::M11On12,
            "AGL1_8" => Family::Agl1_8,
            "AGammaL1_8" => Family::AGammaL1_8,
            "AGammaL1_32" => Family::AGammaL1_32,
            "Affine_SL" => Family::AffineSl {
                d: need1()? as u32,
            },
            "Affine_A7" => Family::AffineA7,
            other => return Err(Error::Parse(format!("unknown family tag {other}"))),
        })
    }
}

/// One catalog entry: a 3-homogeneous family instance at a fixed degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupSpec {
    pub family: Family,
    pub degree: u64,
    /// Every catalog entry is 2-transitive in its natural action.
    pub two_transitive: bool,
}

impl GroupSpec {
    pub fn new(family: Family) -> GroupSpec {
        GroupSpec {
            family,
            degree: family.degree(),
            two_transitive: true,
        }
    }
}

/// Mathieu group orders (socle), standard constants.
pub fn mathieu_order(v: u64) -> Option<u64> {
    match v {
        11 => Some(7_920),
        12 => Some(95_040),
        22 => Some(443_520),
        23 => Some(10_200_960),
        24 => Some(244_823_040),
        _ => None,
    }
}

/// |SL(d,2)| = prod_{i=0}^{d-1} (2^d - 2^i).
pub fn sl2d_order(d: u32) -> Nat {
    let v = Nat::one() << d;
    let mut acc = Nat::one();
    for i in 0..d {
        acc *= &v - (Nat::one() << i);
    }
    acc
}

/// n = gcd(2, q-1): 1 for even q, 2 for odd q.
pub fn psl2_n(q: u64) -> u64 {
    if q.is_multiple_of(2) {
        1
    } else {
        2
    }
}

/// |PSL(2,q)| = (q+1) q (q-1) / n.
pub fn psl2_socle_order(q: u64) -> Nat {
    nat(q + 1) * nat(q) * nat(q - 1) / nat(psl2_n(q))
}

/// True iff PSL(2,q) itself is 3-homogeneous on the projective line:
/// q even, or q = 3 (mod 4). Rejects q that is not a prime power > 3.
pub fn psl2_is_3homog(q: u64) -> Result<bool, Error> {
    if q < 4 || prime_power_u64(q).is_none() {
        return Err(Error::InvalidInput(format!(
            "PSL(2,{q}) needs a prime power q > 3"
        )));
    }
    Ok(q.is_multiple_of(2) || q % 4 == 3)
}

impl GroupSpec {
    /// Order of the socle (the regular normal 2-group for affine type,
    /// the simple normal subgroup for almost simple type).
    pub fn socle_order(&self) -> Nat {
        match self.family {
            Family::Alternating { v } => falling(&nat(v), v) / nat(2),
            Family::Psl2 { q } => psl2_socle_order(q),
            Family::Mathieu { v } => nat(mathieu_order(v).expect("catalog degree")),
            Family::M11On12 => nat(7_920),
            Family::Agl1_8 | Family::AGammaL1_8 => nat(8),
            Family::AGammaL1_32 => nat(32),
            Family::AffineSl { d } => Nat::one() << d,
            Family::AffineA7 => nat(16),
        }
    }

    /// Maximal order over the family's admissible extensions as a
    /// permutation group of this degree: ne for PSL(2,q) (reaching
    /// PGammaL(2,q)), the full semilinear twist for the affine
    /// one-dimensional families, S_v over A_v, M22:2 over M22.
    pub fn order(&self) -> Nat {
        match self.family {
            Family::Alternating { v } => falling(&nat(v), v),
            Family::Psl2 { q } => {
                let (_, e) = prime_power_u64(q).expect("catalog q is a prime power");
                psl2_socle_order(q) * nat(psl2_n(q) * e)
            }
            Family::Mathieu { v } => {
                let m = if v == 22 { 2 } else { 1 };
                nat(mathieu_order(v).expect("catalog degree") * m)
            }
            Family::M11On12 => nat(7_920),
            Family::Agl1_8 => nat(8 * 7),
            Family::AGammaL1_8 => nat(8 * 7 * 3),
            Family::AGammaL1_32 => nat(32 * 31 * 5),
            Family::AffineSl { d } => (Nat::one() << d) * sl2d_order(d),
            Family::AffineA7 => nat(16 * 2520),
        }
    }

    /// The multipliers m for which socle_order * m is the order of an
    /// admissible group N <= G in this degree. For PSL(2,q) these are the
    /// divisors of ne; for Mathieu(22) the index-2 extension exists on 22
    /// points; everywhere else only the group itself.
    pub fn extension_multipliers(&self) -> Vec<u64> {
        match self.family {
            Family::Psl2 { q } => {
                let (_, e) = prime_power_u64(q).expect("catalog q is a prime power");
                let ne = psl2_n(q) * e;
                divisors(&nat(ne))
                    .expect("ne >= 1")
                    .iter()
                    .map(|d| {
                        use num_traits::ToPrimitive;
                        d.to_u64().expect("ne is small")
                    })
                    .collect()
            }
            Family::Mathieu { v: 22 } => vec![1, 2],
            Family::Alternating { .. } => vec![1, 2],
            _ => vec![1],
        }
    }
}

/// Maximal admissible extension order for one PSL(2,q) branch multiplier a:
/// (q+1) q (q-1) / n * a.
pub fn psl2_group_order(q: u64, a: u64) -> Nat {
    psl2_socle_order(q) * nat(a)
}

/// Every catalog family instance of degree v, stable-sorted by family tag.
///
/// PSL(2,q) appears only when v-1 is a prime power whose projective group is
/// 3-homogeneous; Alternating(v) always appears; Mathieu only in its natural
/// degrees; the exceptional M11 action at v = 12; affine families at v = 2^d.
/// Rejects v < 9 (the engine's degree floor; smaller degrees cannot carry a
/// block size above 7).
pub fn candidates_for_degree(v: u64) -> Result<Vec<GroupSpec>, Error> {
    if v < 9 {
        return Err(Error::InvalidInput(format!(
            "candidates_for_degree needs v >= 9, got {v}"
        )));
    }
    let mut out = vec![GroupSpec::new(Family::Alternating { v })];
    let q = v - 1;
    if prime_power_u64(q).is_some() && psl2_is_3homog(q).unwrap_or(false) {
        out.push(GroupSpec::new(Family::Psl2 { q }));
    }
    if mathieu_order(v).is_some() {
        out.push(GroupSpec::new(Family::Mathieu { v }));
    }
    if v == 12 {
        out.push(GroupSpec::new(Family::M11On12));
    }
    if v.is_power_of_two() {
        let d = v.trailing_zeros();
        if d >= 4 {
            out.push(GroupSpec::new(Family::AffineSl { d }));
        }
        if v == 16 {
            out.push(GroupSpec::new(Family::AffineA7));
        }
        if v == 32 {
            out.push(GroupSpec::new(Family::AGammaL1_32));
        }
    }
    out.sort();
    Ok(out)
}

/// One line per entry: family, degree, order (decimal), socle order.
pub fn dump_line(g: &GroupSpec) -> String {
    format!(
        "{} degree={} order={} socle={}",
        g.family.display(),
        g.degree,
        g.order(),
        g.socle_order()
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    #[test]
    fn candidates_examples() {
        let fams = |v: u64| -> Vec<String> {
            candidates_for_degree(v)
                .unwrap()
                .iter()
                .map(|g| g.family.display())
                .collect()
        };
        assert_eq!(fams(33), vec!["Alternating(33)", "PSL2(32)"]);
        assert_eq!(
            fams(16),
            vec!["Alternating(16)", "Affine_SL(4)", "Affine_A7"]
        );
        // 25 = 1 mod 4: PSL2(25) excluded
        assert_eq!(fams(26), vec!["Alternating(26)"]);
        assert_eq!(
            fams(12),
            vec!["Alternating(12)", "PSL2(11)", "Mathieu(12)", "M11_on_12"]
        );
        assert_eq!(
            fams(32),
            vec![
                "Alternating(32)",
                "PSL2(31)",
                "AGammaL1_32",
                "Affine_SL(5)"
            ]
        );
        assert_eq!(fams(9), vec!["Alternating(9)", "PSL2(8)"]);
        assert_eq!(fams(10), vec!["Alternating(10)"]);
        assert!(candidates_for_degree(8).is_err());
    }

    #[test]
    fn candidates_deterministic() {
        for v in 9..200 {
            let a = candidates_for_degree(v).unwrap();
            let b = candidates_for_degree(v).unwrap();
            assert_eq!(a, b);
            assert!(a.windows(2).all(|w| w[0] < w[1]));
            assert!(a.iter().all(|g| g.two_transitive && g.degree == v));
        }
    }

    #[test]
    fn order_examples() {
        let ord = |f: Family| GroupSpec::new(f).order().to_u64().unwrap();
        assert_eq!(ord(Family::AGammaL1_32), 4960);
        assert_eq!(ord(Family::AffineA7), 40320);
        assert_eq!(ord(Family::Psl2 { q: 8 }), 1512); // 9*8*7*3, n = 1, ne = 3
        assert_eq!(ord(Family::Agl1_8), 56);
        assert_eq!(ord(Family::AGammaL1_8), 168);
        assert_eq!(ord(Family::AffineSl { d: 4 }), 322_560);
        assert_eq!(
            GroupSpec::new(Family::Psl2 { q: 7 }).socle_order().to_u64(),
            Some(168)
        );
    }

    #[test]
    fn psl2_3homog_examples() {
        assert!(psl2_is_3homog(7).unwrap());
        assert!(!psl2_is_3homog(25).unwrap());
        assert!(psl2_is_3homog(32).unwrap());
        assert!(psl2_is_3homog(8).unwrap());
        assert!(!psl2_is_3homog(9).unwrap());
        assert!(psl2_is_3homog(12).is_err());
        assert!(psl2_is_3homog(3).is_err());
    }

    #[test]
    fn mathieu_orders_cross_checked_against_products() {
        // sharply 4-transitive: |M11| = 11*10*9*8; sharply 5-transitive:
        // |M12| = 12 |M11|; one-point extensions: |M23| = 23 |M22|,
        // |M24| = 24 |M23|.
        assert_eq!(mathieu_order(11).unwrap(), 11 * 10 * 9 * 8);
        assert_eq!(mathieu_order(12).unwrap(), 12 * mathieu_order(11).unwrap());
        assert_eq!(mathieu_order(23).unwrap(), 23 * mathieu_order(22).unwrap());
        assert_eq!(mathieu_order(24).unwrap(), 24 * mathieu_order(23).unwrap());
        // |M22| against its point-stabilizer chain in M24: 24*23*22*21*20*48
        assert_eq!(
            mathieu_order(24).unwrap(),
            24 * 23 * 22 * 21 * 20 * 48
        );
    }

    #[test]
    fn extension_multipliers_examples() {
        let ext = |f: Family| GroupSpec::new(f).extension_multipliers();
        assert_eq!(ext(Family::Psl2 { q: 32 }), vec![1, 5]); // n=1, e=5
        assert_eq!(ext(Family::Psl2 { q: 31 }), vec![1, 2]); // n=2, e=1
        assert_eq!(ext(Family::Psl2 { q: 27 }), vec![1, 2, 3, 6]); // n=2, e=3
        assert_eq!(ext(Family::Mathieu { v: 22 }), vec![1, 2]);
        assert_eq!(ext(Family::Mathieu { v: 24 }), vec![1]);
        assert_eq!(ext(Family::M11On12), vec![1]);
    }

    #[test]
    fn family_tag_round_trip() {
        let fams = [
            Family::Alternating { v: 33 },
            Family::Psl2 { q: 32 },
            Family::Mathieu { v: 24 },
            Family::M11On12,
            Family::Agl1_8,
            Family::AGammaL1_8,
            Family::AGammaL1_32,
            Family::AffineSl { d: 5 },
            Family::AffineA7,
        ];
        for f in fams {
            let g = Family::from_tag_params(f.tag(), &f.params()).unwrap();
            assert_eq!(f, g);
        }
        assert!(Family::from_tag_params("NoSuch", &[]).is_err());
    }

    #[test]
    fn display_parse_round_trip() {
        for s in ["PSL2(32)", "Affine_SL(4)", "AGL1_8", "Mathieu(24)", "M11_on_12"] {
            assert_eq!(Family::parse_display(s).unwrap().display(), s);
        }
        assert!(Family::parse_display("PSL2(").is_err());
        assert!(Family::parse_display("PSL2(x)").is_err());
        assert!(Family::parse_display("Sporadic(1)").is_err());
    }

    #[test]
    fn dump_format() {
        let g = GroupSpec::new(Family::AGammaL1_32);
        assert_eq!(dump_line(&g), "AGammaL1_32 degree=32 order=4960 socle=32");
    }
}
