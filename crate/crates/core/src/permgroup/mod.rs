//! Desk-scale permutation group machinery.
//!
//! Orbit computation is plain breadth-first closure with hashing of images;
//! there is no stabilizer-chain machinery. Group enumeration is capped at
//! 10^7 elements and subset enumeration at 10^6 subsets, which covers every
//! verification this engine performs. Setwise stabilizers are reached
//! through Schreier generators read off the set-orbit traversal, so the
//! stabilizer can act on points without enumerating the parent group.
//!
//! Points are 0-based throughout.

pub mod field;
pub mod generators;

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::exactmath::{binom, nat};
use num_traits::ToPrimitive;

/// Enumeration cap for closure-based group order computation.
pub const ORDER_CAP: u64 = 10_000_000;
/// Cap on the number of s-subsets a homogeneity count may visit.
pub const SUBSET_CAP: u64 = 1_000_000;

/// A permutation of {0, ..., degree-1}, stored as the image list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Permutation {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Validates that `images` is a bijection.
    pub fn from_images(images: Vec<u32>) -> Result<Permutation, Error> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x as usize >= n || seen[x as usize] {
                return Err(Error::InvalidInput(format!(
                    "image list is not a bijection on 0..{n}"
                )));
            }
            seen[x as usize] = true;
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, p: u32) -> u32 {
        self.images[p as usize]
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// Composition: (self * other)(x) = self(other(x)).
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&x| self.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    /// Pointwise image of a set, returned sorted (canonical set form).
    pub fn apply_set(&self, set: &[u32]) -> Vec<u32> {
        let mut out: Vec<u32> = set.iter().map(|&x| self.apply(x)).collect();
        out.sort_unstable();
        out
    }
}

impl fmt::Display for Permutation {
    /// One-line image list, space-separated, 0-based.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for x in &self.images {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{x}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Permutation, Error> {
        let images: Result<Vec<u32>, _> = s.split_whitespace().map(|t| t.parse::<u32>()).collect();
        let images = images.map_err(|e| Error::Parse(format!("bad permutation: {e}")))?;
        if images.is_empty() {
            return Err(Error::Parse("empty permutation line".into()));
        }
        Permutation::from_images(images)
    }
}

/// A non-empty list of same-degree generators.
#[derive(Debug, Clone)]
pub struct GeneratorSet {
    degree: usize,
    gens: Vec<Permutation>,
}

impl GeneratorSet {
    pub fn new(gens: Vec<Permutation>) -> Result<GeneratorSet, Error> {
        let Some(first) = gens.first() else {
            return Err(Error::InvalidInput("generator set must be non-empty".into()));
        };
        let degree = first.degree();
        if !gens.iter().all(|g| g.degree() == degree) {
            return Err(Error::InvalidInput("generators have mixed degrees".into()));
        }
        Ok(GeneratorSet { degree, gens })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn gens(&self) -> &[Permutation] {
        &self.gens
    }
}

/// Orbit of a point, sorted ascending.
pub fn orbit(gs: &GeneratorSet, seed: u32) -> Vec<u32> {
    assert!((seed as usize) < gs.degree(), "seed out of range");
    let mut seen = vec![false; gs.degree()];
    seen[seed as usize] = true;
    let mut queue = VecDeque::from([seed]);
    let mut out = vec![seed];
    while let Some(x) = queue.pop_front() {
        for g in gs.gens() {
            let y = g.apply(x);
            if !seen[y as usize] {
                seen[y as usize] = true;
                out.push(y);
                queue.push_back(y);
            }
        }
    }
    out.sort_unstable();
    out
}

/// Orbit of a point set under pointwise action with set equality.
/// Returns canonical (sorted) member sets, sorted lexicographically.
pub fn set_orbit(gs: &GeneratorSet, seed: &[u32]) -> Vec<Vec<u32>> {
    let mut start = seed.to_vec();
    start.sort_unstable();
    start.dedup();
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    seen.insert(start.clone());
    let mut queue = VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        for g in gs.gens() {
            let y = g.apply_set(&x);
            if !seen.contains(&y) {
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    let mut out: Vec<Vec<u32>> = seen.into_iter().collect();
    out.sort();
    out
}

/// Exact group order via breadth-first closure. Errors above [`ORDER_CAP`].
pub fn enumerated_order(gs: &GeneratorSet) -> Result<u64, Error> {
    let ident = Permutation::identity(gs.degree());
    let mut seen: HashSet<Permutation> = HashSet::new();
    seen.insert(ident.clone());
    let mut queue = VecDeque::from([ident]);
    while let Some(x) = queue.pop_front() {
        for g in gs.gens() {
            let y = g.compose(&x);
            if !seen.contains(&y) {
                if seen.len() as u64 >= ORDER_CAP {
                    return Err(Error::SizeExceeded(format!(
                        "group enumeration exceeds {ORDER_CAP}"
                    )));
                }
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    Ok(seen.len() as u64)
}

/// All s-subsets of {0,...,n-1} in lexicographic order.
pub fn combinations(n: u32, s: usize) -> Vec<Vec<u32>> {
    if s == 0 || s as u32 > n {
        return vec![];
    }
    let mut out = Vec::new();
    let mut cur: Vec<u32> = (0..s as u32).collect();
    loop {
        out.push(cur.clone());
        // rightmost position that can still advance
        let mut i = s;
        while i > 0 && cur[i - 1] == n - (s - i + 1) as u32 {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        cur[i - 1] += 1;
        for j in i..s {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// Number of orbits on s-subsets; 1 means the group is s-homogeneous.
/// Errors when C(degree, s) exceeds [`SUBSET_CAP`].
pub fn homogeneity_orbits(gs: &GeneratorSet, s: u64) -> Result<u64, Error> {
    let degree = gs.degree() as u64;
    if s == 0 || s > degree {
        return Err(Error::InvalidInput(format!(
            "subset size {s} out of range for degree {degree}"
        )));
    }
    let total = binom(&nat(degree), &nat(s))
        .to_u64()
        .filter(|&t| t <= SUBSET_CAP)
        .ok_or_else(|| Error::SizeExceeded(format!("C({degree},{s}) exceeds {SUBSET_CAP}")))?;
    let subsets = combinations(gs.degree() as u32, s as usize);
    debug_assert_eq!(subsets.len() as u64, total);
    let index: HashMap<&[u32], usize> = subsets
        .iter()
        .enumerate()
        .map(|(i, c)| (c.as_slice(), i))
        .collect();
    let mut seen = vec![false; subsets.len()];
    let mut orbits = 0u64;
    for start in 0..subsets.len() {
        if seen[start] {
            continue;
        }
        orbits += 1;
        seen[start] = true;
        let mut stack = vec![subsets[start].clone()];
        while let Some(x) = stack.pop() {
            for g in gs.gens() {
                let y = g.apply_set(&x);
                let yid = index[y.as_slice()];
                if !seen[yid] {
                    seen[yid] = true;
                    stack.push(y);
                }
            }
        }
    }
    Ok(orbits)
}

/// Order of the setwise stabilizer of `pointset`, via orbit-stabilizer:
/// |G| / |orbit of the set|. Needs the full enumeration, so the
/// [`ORDER_CAP`] applies.
pub fn setwise_stabilizer_order(gs: &GeneratorSet, pointset: &[u32]) -> Result<u64, Error> {
    let order = enumerated_order(gs)?;
    let orbit_len = set_orbit(gs, pointset).len() as u64;
    debug_assert_eq!(order % orbit_len, 0);
    Ok(order / orbit_len)
}

/// Schreier generators for the setwise stabilizer of `pointset`.
///
/// Runs the set-orbit traversal keeping a transversal permutation per orbit
/// member; every closed edge t_y^{-1} g t_x with y = g(x) lands in the
/// stabilizer, and together those elements generate it. The identity is
/// dropped; the base set's stabilizer may legitimately come back empty for
/// a trivial stabilizer.
pub fn set_stabilizer_generators(gs: &GeneratorSet, pointset: &[u32]) -> Vec<Permutation> {
    let mut base = pointset.to_vec();
    base.sort_unstable();
    base.dedup();
    let ident = Permutation::identity(gs.degree());
    let mut transversal: HashMap<Vec<u32>, Permutation> = HashMap::new();
    transversal.insert(base.clone(), ident);
    let mut queue = VecDeque::from([base]);
    let mut out: HashSet<Permutation> = HashSet::new();
    while let Some(x) = queue.pop_front() {
        let tx = transversal[&x].clone();
        for g in gs.gens() {
            let y = g.apply_set(&x);
            let gtx = g.compose(&tx);
            match transversal.get(&y) {
                None => {
                    transversal.insert(y.clone(), gtx);
                    queue.push_back(y);
                }
                Some(ty) => {
                    let schreier = ty.inverse().compose(&gtx);
                    if !schreier.is_identity() {
                        out.insert(schreier);
                    }
                }
            }
        }
    }
    let mut v: Vec<Permutation> = out.into_iter().collect();
    v.sort();
    v
}
