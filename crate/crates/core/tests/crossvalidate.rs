//! Cross-validation between the group catalog, the permutation machinery,
//! and the design fixtures.

use steiner7_core::admissibility::{basic_counts, DesignParams};
use steiner7_core::catalog::{candidates_for_degree, psl2_is_3homog, Family, GroupSpec};
use steiner7_core::designs::{block_transitive, boolean_sqs, point_transitive, verify_design};
use steiner7_core::error::Error;
use steiner7_core::exactmath::prime_power_u64;
use steiner7_core::permgroup::{
    enumerated_order, generators, homogeneity_orbits, orbit, GeneratorSet, Permutation,
};
use num_traits::ToPrimitive;

#[test]
fn psl2_socle_orders_and_3homogeneity_match_formulas_to_q27() {
    for q in [4u64, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27] {
        assert!(prime_power_u64(q).is_some());
        let spec = GroupSpec::new(Family::Psl2 { q });
        let gs = generators::psl2_socle_generators(q).unwrap();
        assert_eq!(
            enumerated_order(&gs).unwrap(),
            spec.socle_order().to_u64().unwrap(),
            "socle order mismatch at q={q}"
        );
        let orbits = homogeneity_orbits(&gs, 3).unwrap();
        assert_eq!(
            orbits == 1,
            psl2_is_3homog(q).unwrap(),
            "3-homogeneity mismatch at q={q}: {orbits} orbits"
        );
    }
}

#[test]
fn catalog_families_up_to_degree_33_are_3_homogeneous_at_desk_scale() {
    let mut tested = 0;
    for v in 9u64..=33 {
        for g in candidates_for_degree(v).unwrap() {
            let gs = match generators::standard_generators(&g) {
                Ok(gs) => gs,
                Err(Error::UnsupportedFamily(_)) => continue,
                Err(e) => panic!("{}: {e}", g.family.display()),
            };
            assert_eq!(
                homogeneity_orbits(&gs, 3).unwrap(),
                1,
                "{} is not 3-homogeneous",
                g.family.display()
            );
            tested += 1;
        }
    }
    assert!(tested >= 15, "only {tested} catalog entries had generators");
}

#[test]
fn enumerated_orders_match_catalog_orders_where_enumerable() {
    // the PSL2 entry enumerates its socle; everything else the full group
    let cases = [
        (Family::Agl1_8, 56u64),
        (Family::AGammaL1_8, 168),
        (Family::AGammaL1_32, 4960),
        (Family::AffineSl { d: 4 }, 322_560),
        (Family::AffineA7, 40_320),
        (Family::Alternating { v: 9 }, 181_440),
    ];
    for (family, expect) in cases {
        let spec = GroupSpec::new(family);
        let gs = generators::standard_generators(&spec).unwrap();
        let enumerated = enumerated_order(&gs).unwrap();
        assert_eq!(enumerated, expect, "{}", family.display());
        assert_eq!(
            generators::expected_enumerated_order(&spec).to_u64().unwrap(),
            enumerated
        );
    }
}

#[test]
fn boolean_sqs_block_counts_match_lambda0() {
    for n in [3u32, 4, 5] {
        let s = boolean_sqs(n).unwrap();
        assert_eq!(verify_design(&s, 3).unwrap(), Some(1), "n={n}");
        let p = DesignParams::steiner(3, 1 << n, 4).unwrap();
        let (b, _) = basic_counts(&p);
        assert_eq!(
            b.to_integer().to_u64().unwrap(),
            s.b(),
            "block count vs lambda_0 at n={n}"
        );
    }
}

#[test]
fn blocks_lemma_and_floor_homogeneity_instances() {
    // every generator set found block-transitive on a verified design with
    // t >= 2 must be point-transitive (and 1-homogeneous, the floor(3/2)
    // instance of the block-transitivity homogeneity bound)
    let fixtures: Vec<(GeneratorSet, _)> = vec![
        (
            generators::standard_generators(&GroupSpec::new(Family::AffineSl { d: 3 })).unwrap(),
            boolean_sqs(3).unwrap(),
        ),
        (
            generators::standard_generators(&GroupSpec::new(Family::AffineSl { d: 4 })).unwrap(),
            boolean_sqs(4).unwrap(),
        ),
        (
            generators::standard_generators(&GroupSpec::new(Family::AffineA7)).unwrap(),
            boolean_sqs(4).unwrap(),
        ),
        (
            // translations only: point-transitive but not block-transitive
            GeneratorSet::new(
                (0..3u32)
                    .map(|i| {
                        Permutation::from_images((0..8).map(|x| x ^ (1 << i)).collect()).unwrap()
                    })
                    .collect(),
            )
            .unwrap(),
            boolean_sqs(3).unwrap(),
        ),
    ];
    let mut block_transitive_seen = 0;
    for (gs, s) in &fixtures {
        assert_eq!(verify_design(s, 3).unwrap(), Some(1));
        if block_transitive(gs, s).unwrap() {
            block_transitive_seen += 1;
            assert!(point_transitive(gs, s).unwrap(), "Block's lemma violated");
            assert_eq!(orbit(gs, 0).len() as u64, s.v, "not 1-homogeneous");
        }
    }
    assert!(block_transitive_seen >= 3);
}
