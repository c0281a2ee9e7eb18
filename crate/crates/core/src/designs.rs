//! Explicit incidence structures: boolean quadruple systems, brute-force
//! t-design verification, and automorphism/transitivity checks.
//!
//! Blocks are stored as sorted point lists and the block list itself is
//! sorted lexicographically, so a structure has exactly one canonical form
//! and file round-trips are byte-stable.

use std::collections::{HashMap, HashSet};
use std::io::{BufRead, Write};

use num_traits::ToPrimitive;

use crate::error::Error;
use crate::exactmath::{binom, nat};
use crate::permgroup::{combinations, orbit, set_orbit, GeneratorSet, Permutation};

/// Cap on C(v,t) for brute-force verification.
pub const VERIFY_CAP: u64 = 10_000_000;

/// Point set {0,...,v-1} plus a list of distinct k-blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceStructure {
    pub v: u64,
    pub k: u64,
    blocks: Vec<Vec<u32>>,
}

impl IncidenceStructure {
    /// Validates block sizes, point range, distinctness; canonicalizes order.
    pub fn new(v: u64, k: u64, mut blocks: Vec<Vec<u32>>) -> Result<Self, Error> {
        for b in blocks.iter_mut() {
            b.sort_unstable();
            if b.len() as u64 != k {
                return Err(Error::InvalidInput(format!(
                    "block {:?} does not have k={k} points",
                    b
                )));
            }
            if b.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidInput(format!(
                    "block {:?} repeats a point",
                    b
                )));
            }
            if b.iter().any(|&p| p as u64 >= v) {
                return Err(Error::InvalidInput(format!(
                    "block {:?} has a point outside 0..{v}",
                    b
                )));
            }
        }
        blocks.sort();
        if blocks.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidInput("duplicate block".into()));
        }
        Ok(IncidenceStructure { v, k, blocks })
    }

    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    pub fn b(&self) -> u64 {
        self.blocks.len() as u64
    }

    /// Canonical plain-text form:
    /// line 1 "STEINER v k b", then b sorted lines of k sorted points.
    pub fn write_to(&self, w: &mut impl Write) -> Result<(), Error> {
        writeln!(w, "STEINER {} {} {}", self.v, self.k, self.b())?;
        for block in &self.blocks {
            let line: Vec<String> = block.iter().map(|p| p.to_string()).collect();
            writeln!(w, "{}", line.join(" "))?;
        }
        Ok(())
    }

    /// Parses the STEINER format. Unsorted input lines are accepted and
    /// canonicalized; duplicates, out-of-range points and count mismatches
    /// are rejected.
    pub fn read_from(r: &mut impl BufRead) -> Result<Self, Error> {
        let mut header = String::new();
        r.read_line(&mut header)?;
        let parts: Vec<&str> = header.split_whitespace().collect();
        let [tag, v, k, b] = parts.as_slice() else {
            return Err(Error::Parse("header must be 'STEINER v k b'".into()));
        };
        if *tag != "STEINER" {
            return Err(Error::Parse(format!("unknown format tag {tag}")));
        }
        let parse = |s: &str| -> Result<u64, Error> {
            s.parse::<u64>()
                .map_err(|e| Error::Parse(format!("bad header number {s}: {e}")))
        };
        let (v, k, b) = (parse(v)?, parse(k)?, parse(b)?);
        let mut blocks = Vec::with_capacity(b as usize);
        for line in r.lines() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let pts: Result<Vec<u32>, _> = line.split_whitespace().map(|t| t.parse()).collect();
            blocks.push(pts.map_err(|e| Error::Parse(format!("bad block line: {e}")))?);
        }
        if blocks.len() as u64 != b {
            return Err(Error::Parse(format!(
                "header announces {b} blocks, file has {}",
                blocks.len()
            )));
        }
        Self::new(v, k, blocks)
    }
}

/// The boolean Steiner quadruple system on 2^n points: all 4-subsets of
/// V(n,2) with zero vector sum. Desk scale: 3 <= n <= 7.
pub fn boolean_sqs(n: u32) -> Result<IncidenceStructure, Error> {
    if !(3..=7).contains(&n) {
        return Err(Error::InvalidInput(format!(
            "boolean_sqs supports 3 <= n <= 7, got {n}"
        )));
    }
    let v = 1u32 << n;
    let mut blocks = Vec::new();
    for a in 0..v {
        for b in a + 1..v {
            for c in b + 1..v {
                let d = a ^ b ^ c;
                if d > c {
                    blocks.push(vec![a, b, c, d]);
                }
            }
        }
    }
    IncidenceStructure::new(v as u64, 4, blocks)
}

/// Brute-force verification: Some(lambda) iff every t-subset of points lies
/// in exactly lambda blocks. Errors when C(v,t) exceeds [`VERIFY_CAP`].
pub fn verify_design(s: &IncidenceStructure, t: u64) -> Result<Option<u64>, Error> {
    if t == 0 || t > s.k {
        return Err(Error::InvalidInput(format!(
            "t={t} out of range for block size {}",
            s.k
        )));
    }
    let total = binom(&nat(s.v), &nat(t))
        .to_u64()
        .filter(|&x| x <= VERIFY_CAP)
        .ok_or_else(|| Error::SizeExceeded(format!("C({},{t}) exceeds {VERIFY_CAP}", s.v)))?;
    let mut counts: HashMap<Vec<u32>, u64> = HashMap::new();
    for block in s.blocks() {
        for idx in combinations(block.len() as u32, t as usize) {
            let sub: Vec<u32> = idx.iter().map(|&i| block[i as usize]).collect();
            *counts.entry(sub).or_insert(0) += 1;
        }
    }
    // uniform and covering all C(v,t) subsets
    let mut values: Vec<u64> = counts.values().copied().collect();
    values.dedup();
    values.sort_unstable();
    values.dedup();
    match values.as_slice() {
        [lambda] if counts.len() as u64 == total => Ok(Some(*lambda)),
        _ => Ok(None),
    }
}

/// True iff the image of every block is a block.
pub fn is_automorphism(p: &Permutation, s: &IncidenceStructure) -> Result<bool, Error> {
    if p.degree() as u64 != s.v {
        return Err(Error::InvalidInput(format!(
            "permutation degree {} does not match v={}",
            p.degree(),
            s.v
        )));
    }
    let blockset: HashSet<&[u32]> = s.blocks().iter().map(|b| b.as_slice()).collect();
    Ok(s.blocks()
        .iter()
        .all(|b| blockset.contains(p.apply_set(b).as_slice())))
}

fn require_automorphisms(gs: &GeneratorSet, s: &IncidenceStructure) -> Result<(), Error> {
    for g in gs.gens() {
        if !is_automorphism(g, s)? {
            return Err(Error::InvalidInput(
                "generator is not an automorphism of the structure".into(),
            ));
        }
    }
    Ok(())
}

/// True iff the orbit of blocks[0] under gs is the full block set.
/// Rejects generator sets containing a non-automorphism.
pub fn block_transitive(gs: &GeneratorSet, s: &IncidenceStructure) -> Result<bool, Error> {
    require_automorphisms(gs, s)?;
    let Some(first) = s.blocks().first() else {
        return Ok(true);
    };
    let orb = set_orbit(gs, first);
    Ok(orb.len() as u64 == s.b())
}

/// True iff the point action has a single orbit of size v.
pub fn point_transitive(gs: &GeneratorSet, s: &IncidenceStructure) -> Result<bool, Error> {
    require_automorphisms(gs, s)?;
    Ok(orbit(gs, 0).len() as u64 == s.v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{Family, GroupSpec};
    use crate::permgroup::generators::standard_generators;
    use proptest::prelude::*;

    #[test]
    fn boolean_sqs_counts() {
        let s3 = boolean_sqs(3).unwrap();
        assert_eq!((s3.v, s3.k, s3.b()), (8, 4, 14));
        let s4 = boolean_sqs(4).unwrap();
        assert_eq!((s4.v, s4.k, s4.b()), (16, 4, 140));
        assert!(boolean_sqs(2).is_err());
        // {0,1,2,3}: 000+001+010+011 = 0
        assert!(s3.blocks().contains(&vec![0, 1, 2, 3]));
    }

    #[test]
    fn verify_design_examples() {
        let s3 = boolean_sqs(3).unwrap();
        assert_eq!(verify_design(&s3, 3).unwrap(), Some(1));
        let s4 = boolean_sqs(4).unwrap();
        assert_eq!(verify_design(&s4, 3).unwrap(), Some(1));
        // delete one block: a covered triple loses its block
        let damaged =
            IncidenceStructure::new(8, 4, s3.blocks()[1..].to_vec()).unwrap();
        assert_eq!(verify_design(&damaged, 3).unwrap(), None);
        // complete 4-subsets of a 5-set: every triple in exactly 2 blocks
        let blocks = combinations(5, 4);
        let complete = IncidenceStructure::new(5, 4, blocks).unwrap();
        assert_eq!(verify_design(&complete, 3).unwrap(), Some(2));
    }

    #[test]
    fn automorphism_examples() {
        let s3 = boolean_sqs(3).unwrap();
        let id = Permutation::identity(8);
        assert!(is_automorphism(&id, &s3).unwrap());
        // any translation x -> x + u preserves zero-sum 4-sets
        for u in 1..8u32 {
            let tr = Permutation::from_images((0..8).map(|x| x ^ u).collect()).unwrap();
            assert!(is_automorphism(&tr, &s3).unwrap());
        }
        // a transposition breaking one block
        let tp = Permutation::from_images(vec![1, 0, 2, 3, 4, 5, 6, 7]).unwrap();
        assert!(!is_automorphism(&tp, &s3).unwrap());
    }

    #[test]
    fn transitivity_examples() {
        let s3 = boolean_sqs(3).unwrap();
        let affine = standard_generators(&GroupSpec::new(Family::AffineSl { d: 3 })).unwrap();
        assert!(block_transitive(&affine, &s3).unwrap());
        assert!(point_transitive(&affine, &s3).unwrap());
        let id = GeneratorSet::new(vec![Permutation::identity(8)]).unwrap();
        assert!(!block_transitive(&id, &s3).unwrap());
        assert!(!point_transitive(&id, &s3).unwrap());
        // translations only: regular, hence point- but not block-transitive
        let translations = GeneratorSet::new(
            (0..3u32)
                .map(|i| {
                    Permutation::from_images((0..8).map(|x| x ^ (1 << i)).collect()).unwrap()
                })
                .collect(),
        )
        .unwrap();
        assert!(point_transitive(&translations, &s3).unwrap());
        assert!(!block_transitive(&translations, &s3).unwrap());
        // non-automorphism generators are rejected
        let bad = GeneratorSet::new(vec![Permutation::from_images(vec![
            1, 0, 2, 3, 4, 5, 6, 7,
        ])
        .unwrap()])
        .unwrap();
        assert!(block_transitive(&bad, &s3).is_err());
        let s4 = boolean_sqs(4).unwrap();
        let affine4 = standard_generators(&GroupSpec::new(Family::AffineSl { d: 4 })).unwrap();
        assert!(block_transitive(&affine4, &s4).unwrap());
        assert!(point_transitive(&affine4, &s4).unwrap());
    }

    #[test]
    fn file_round_trip_and_rejects() {
        let s3 = boolean_sqs(3).unwrap();
        let mut buf = Vec::new();
        s3.write_to(&mut buf).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with("STEINER 8 4 14\n"));
        let parsed = IncidenceStructure::read_from(&mut &buf[..]).unwrap();
        assert_eq!(parsed, s3);
        // second serialization is byte-identical (canonical form)
        let mut buf2 = Vec::new();
        parsed.write_to(&mut buf2).unwrap();
        assert_eq!(buf, buf2);

        let reject = |t: &str| {
            assert!(
                IncidenceStructure::read_from(&mut t.as_bytes()).is_err(),
                "{t:?}"
            )
        };
        reject("STEINER 8 4 2\n0 1 2 3\n");           // count mismatch
        reject("STEINER 8 4 1\n0 1 2 9\n");           // out of range
        reject("STEINER 8 4 1\n0 1 2\n");             // wrong block size
        reject("STEINER 8 4 2\n0 1 2 3\n3 2 1 0\n");  // duplicate block
        reject("STEINER 8 4 1\n0 1 1 3\n");           // repeated point
        reject("NOPE 8 4 0\n");                       // bad tag
    }

    proptest! {
        #[test]
        fn verify_invariant_under_relabeling(seed in any::<u64>()) {
            // permute points of the SQS(8) by a pseudo-random bijection
            let s3 = boolean_sqs(3).unwrap();
            let mut imgs: Vec<u32> = (0..8).collect();
            let mut x = seed | 1;
            for i in (1..8usize).rev() {
                x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let j = (x >> 33) as usize % (i + 1);
                imgs.swap(i, j);
            }
            let relabeled: Vec<Vec<u32>> = s3
                .blocks()
                .iter()
                .map(|b| b.iter().map(|&p| imgs[p as usize]).collect())
                .collect();
            let t = IncidenceStructure::new(8, 4, relabeled).unwrap();
            prop_assert_eq!(verify_design(&t, 3).unwrap(), Some(1));
        }
    }
}
