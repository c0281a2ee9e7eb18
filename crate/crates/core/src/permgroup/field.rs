//! Small finite fields F_q for q <= 128, table-driven.
//!
//! Elements are integers 0..q encoding polynomial coefficients over F_p in
//! base p (lowest coefficient first). Non-prime fields reduce modulo a fixed
//! irreducible polynomial from the table below, so generator sets built on
//! top of this arithmetic are reproducible byte-for-byte:
//!
//! | q   | polynomial          |
//! |-----|---------------------|
//! | 4   | x^2 + x + 1         |
//! | 8   | x^3 + x + 1         |
//! | 9   | x^2 + 1             |
//! | 16  | x^4 + x + 1         |
//! | 25  | x^2 + 2             |
//! | 27  | x^3 + 2x + 1        |
//! | 32  | x^5 + x^2 + 1       |
//! | 49  | x^2 + 1             |
//! | 64  | x^6 + x + 1         |
//! | 81  | x^4 + x + 2         |
//! | 121 | x^2 + 1             |
//! | 125 | x^3 + x + 1         |
//! | 128 | x^7 + x + 1         |

use crate::error::Error;
use crate::exactmath::prime_power_u64;

/// Modulus polynomials, coefficients low-to-high including the leading 1.
fn modulus_poly(q: u64) -> Option<&'static [u64]> {
    Some(match q {
        4 => &[1, 1, 1],
        8 => &[1, 1, 0, 1],
        9 => &[1, 0, 1],
        16 => &[1, 1, 0, 0, 1],
        25 => &[2, 0, 1],
        27 => &[1, 2, 0, 1],
        32 => &[1, 0, 1, 0, 0, 1],
        49 => &[1, 0, 1],
        64 => &[1, 1, 0, 0, 0, 0, 1],
        81 => &[2, 1, 0, 0, 1],
        121 => &[1, 0, 1],
        125 => &[1, 1, 0, 1],
        128 => &[1, 1, 0, 0, 0, 0, 0, 1],
        _ => return None,
    })
}

/// F_q with precomputed multiplication table.
#[derive(Debug, Clone)]
pub struct SmallField {
    pub q: u64,
    pub p: u64,
    pub e: u32,
    mul_table: Vec<u64>,
}

impl SmallField {
    /// Builds F_q. Supported: every prime power q <= 128 with a table entry,
    /// and every prime q <= 128 directly.
    pub fn new(q: u64) -> Result<SmallField, Error> {
        if !(2..=128).contains(&q) {
            return Err(Error::UnsupportedFamily(format!(
                "field size {q} outside supported range 2..=128"
            )));
        }
        let Some((p, e)) = prime_power_u64(q) else {
            return Err(Error::UnsupportedFamily(format!("{q} is not a prime power")));
        };
        let e = e as u32;
        if e > 1 && modulus_poly(q).is_none() {
            return Err(Error::UnsupportedFamily(format!(
                "no modulus polynomial stored for F_{q}"
            )));
        }
        let mut f = SmallField {
            q,
            p,
            e,
            mul_table: Vec::new(),
        };
        let mut table = vec![0u64; (q * q) as usize];
        for a in 0..q {
            for b in 0..q {
                table[(a * q + b) as usize] = f.mul_slow(a, b);
            }
        }
        f.mul_table = table;
        Ok(f)
    }

    fn digits(&self, mut a: u64) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.e as usize);
        for _ in 0..self.e {
            out.push(a % self.p);
            a /= self.p;
        }
        out
    }

    fn undigits(&self, ds: &[u64]) -> u64 {
        ds.iter().rev().fold(0, |acc, &d| acc * self.p + d)
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        if self.e == 1 {
            return (a + b) % self.p;
        }
        let (da, db) = (self.digits(a), self.digits(b));
        let sum: Vec<u64> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        self.undigits(&sum)
    }

    pub fn neg(&self, a: u64) -> u64 {
        if self.e == 1 {
            return (self.p - a % self.p) % self.p;
        }
        let da = self.digits(a);
        let neg: Vec<u64> = da.iter().map(|&x| (self.p - x) % self.p).collect();
        self.undigits(&neg)
    }

    fn mul_slow(&self, a: u64, b: u64) -> u64 {
        if self.e == 1 {
            return (a * b) % self.p;
        }
        let (da, db) = (self.digits(a), self.digits(b));
        let deg = self.e as usize;
        let mut prod = vec![0u64; 2 * deg - 1];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        let m = modulus_poly(self.q).expect("checked at construction");
        for i in (deg..prod.len()).rev() {
            let c = prod[i];
            if c != 0 {
                prod[i] = 0;
                for (j, &mj) in m.iter().enumerate().take(deg) {
                    let idx = i - deg + j;
                    prod[idx] = (prod[idx] + (self.p - mj % self.p) % self.p * c) % self.p;
                }
            }
        }
        self.undigits(&prod[..deg])
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        self.mul_table[(a * self.q + b) as usize]
    }

    pub fn pow(&self, a: u64, n: u64) -> u64 {
        let mut acc = 1;
        for _ in 0..n {
            acc = self.mul(acc, a);
        }
        acc
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert!(a != 0, "division by zero in F_{}", self.q);
        (1..self.q)
            .find(|&b| self.mul(a, b) == 1)
            .expect("nonzero element has an inverse")
    }

    /// Smallest multiplicative generator of F_q*.
    pub fn primitive_element(&self) -> u64 {
        'outer: for g in 2..self.q {
            let mut x = 1;
            for i in 1..self.q - 1 {
                x = self.mul(x, g);
                if x == 1 && i < self.q - 1 {
                    continue 'outer;
                }
            }
            return g;
        }
        // q = 2: the unit is the generator
        1
    }

    /// Field automorphism x -> x^p.
    pub fn frobenius(&self, a: u64) -> u64 {
        self.pow(a, self.p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field_axioms(q: u64) {
        let f = SmallField::new(q).unwrap();
        for a in 0..q {
            assert_eq!(f.add(a, f.neg(a)), 0);
            assert_eq!(f.mul(a, 1), a);
            if a != 0 {
                assert_eq!(f.mul(a, f.inv(a)), 1);
            }
            for b in 0..q {
                assert_eq!(f.mul(a, b), f.mul(b, a));
                for c in 0..q {
                    // distributivity
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
        // multiplicative group is cyclic of order q-1
        let g = f.primitive_element();
        let mut seen = std::collections::HashSet::new();
        let mut x = 1;
        for _ in 0..q - 1 {
            x = f.mul(x, g);
            seen.insert(x);
        }
        assert_eq!(seen.len() as u64, q - 1);
        // frobenius is additive and fixes exactly F_p
        let fixed = (0..q).filter(|&a| f.frobenius(a) == a).count() as u64;
        assert_eq!(fixed, f.p);
    }

    #[test]
    fn axioms_hold_for_engine_fields() {
        for q in [8, 32, 7, 11, 31] {
            field_axioms(q);
        }
    }

    #[test]
    fn axioms_hold_for_remaining_table_fields() {
        for q in [4, 9, 16, 25, 27, 49, 64, 81, 121, 125, 128] {
            field_axioms(q);
        }
    }

    #[test]
    fn rejects_non_prime_powers_and_oversize() {
        assert!(SmallField::new(12).is_err());
        assert!(SmallField::new(129).is_err());
        assert!(SmallField::new(0).is_err());
    }
}
