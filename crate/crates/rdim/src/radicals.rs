//! Exact comparison of integer combinations of square roots.
//!
//! Values of the form `sum c_i * sqrt(m_i)` are canonicalized over squarefree
//! radicands, where the square roots are linearly independent over the
//! rationals. Equality is then coefficient equality, and a nonzero value is
//! signed by interval refinement with integer square roots. No floating point
//! is involved in any decision.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;

/// Splits n = s^2 * f with f squarefree; returns (s, f).
fn squarefree_split(mut n: u64) -> (u64, u64) {
    let mut square = 1u64;
    let mut free = 1u64;
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut count = 0;
            while n.is_multiple_of(d) {
                n /= d;
                count += 1;
            }
            square *= d.pow(count / 2);
            if count % 2 == 1 {
                free *= d;
            }
        }
        d += 1;
    }
    (square, free * n)
}

/// sum of coeff * sqrt(radicand) in canonical form.
#[derive(Clone, Debug, Default)]
pub struct SqrtSum {
    /// squarefree radicand -> integer coefficient (zero entries removed)
    terms: BTreeMap<u64, BigInt>,
}

impl SqrtSum {
    pub fn zero() -> Self {
        SqrtSum::default()
    }

    pub fn add_term(&mut self, coeff: i64, radicand: u64) {
        self.add_big(BigInt::from(coeff), radicand);
    }

    pub fn add_big(&mut self, coeff: BigInt, radicand: u64) {
        if coeff.is_zero() || radicand == 0 {
            return;
        }
        let (s, f) = squarefree_split(radicand);
        let entry = self.terms.entry(f).or_insert_with(BigInt::zero);
        *entry += coeff * BigInt::from(s);
        if entry.is_zero() {
            self.terms.remove(&f);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sign of the value: exact, terminating because distinct squarefree
    /// square roots are linearly independent over Q (a nonzero combination is
    /// bounded away from zero, so refinement separates it).
    pub fn sign(&self) -> Ordering {
        if self.terms.is_empty() {
            return Ordering::Equal;
        }
        if self.terms.values().all(|c| c.is_positive()) {
            return Ordering::Greater;
        }
        if self.terms.values().all(|c| c.is_negative()) {
            return Ordering::Less;
        }
        // bracket each sqrt(f) by k-bit dyadic bounds and refine
        let mut bits = 16u32;
        loop {
            let scale = BigInt::from(1u8) << bits;
            let mut lower = BigInt::zero();
            let mut upper = BigInt::zero();
            for (&f, c) in &self.terms {
                let scaled = BigInt::from(f) << (2 * bits);
                let root_lo = scaled.sqrt();
                let root_hi = &root_lo + 1;
                if c.is_positive() {
                    lower += c * &root_lo;
                    upper += c * &root_hi;
                } else {
                    lower += c * &root_hi;
                    upper += c * &root_lo;
                }
            }
            if lower.is_positive() {
                return Ordering::Greater;
            }
            if upper.is_negative() {
                return Ordering::Less;
            }
            let _ = scale;
            bits *= 2;
            debug_assert!(bits <= 1 << 16, "refinement failed to separate a nonzero value");
        }
    }
}

/// Compares `lhs_coeff * sqrt(lhs_rad)` with `sum of sqrt(r) for r in rhs_rads`.
pub fn cmp_sqrt_vs_sqrt_sum(lhs_coeff: i64, lhs_rad: u64, rhs_rads: &[u64]) -> Ordering {
    let mut s = SqrtSum::zero();
    s.add_term(lhs_coeff, lhs_rad);
    for &r in rhs_rads {
        s.add_term(-1, r);
    }
    s.sign()
}

/// Exact decision of `sum over j of prod over k != j of a_k^(-1/2)  vs  1`
/// for integers a_k >= 2, via the cleared form
/// `sum of sqrt(a_j)  vs  sqrt(prod of a_k)`.
pub fn cmp_reciprocal_sqrt_sum_vs_one(tuple: &[u64]) -> Ordering {
    let prod: u64 = tuple.iter().product();
    let mut s = SqrtSum::zero();
    for &a in tuple {
        s.add_term(1, a);
    }
    s.add_term(-1, prod);
    s.sign()
}
