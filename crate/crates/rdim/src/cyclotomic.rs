//! Exact integers in Z[zeta_e], stored as coefficient vectors reduced modulo
//! the e-th cyclotomic polynomial. Equality is coefficient equality; there is
//! no floating point anywhere.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

/// Coefficients of the e-th cyclotomic polynomial, low degree first, monic.
fn cyclotomic_poly(e: u32) -> Vec<i64> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Vec<i64>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&e) {
        return p.clone();
    }
    // (x^e - 1) / prod of cyclotomic polynomials of proper divisors
    let mut num = vec![0i64; e as usize + 1];
    num[0] = -1;
    num[e as usize] = 1;
    for d in 1..e {
        if e.is_multiple_of(d) {
            num = poly_div_exact(&num, &cyclotomic_poly(d));
        }
    }
    cache.lock().unwrap().insert(e, num.clone());
    num
}

/// Exact division of integer polynomials (divisor monic), low degree first.
fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    debug_assert_eq!(*den.last().unwrap(), 1);
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qd = rem.len() - 1 - dd;
    let mut quot = vec![0i64; qd + 1];
    for k in (0..=qd).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        if c != 0 {
            for (i, &d) in den.iter().enumerate() {
                rem[k + i] -= c * d;
            }
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0), "non-exact polynomial division");
    quot
}

/// An element of Z[zeta_e] in canonical reduced form.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CycInt {
    e: u32,
    /// Length-e coefficient vector; entries at degree >= phi(e) are zero
    /// after reduction.
    coeffs: Vec<i64>,
}

impl CycInt {
    pub fn zero(e: u32) -> Self {
        CycInt {
            e,
            coeffs: vec![0; e as usize],
        }
    }

    pub fn from_int(e: u32, n: i64) -> Self {
        let mut v = CycInt::zero(e);
        v.coeffs[0] = n;
        v.reduce();
        v
    }

    /// zeta_e^m
    pub fn root_power(e: u32, m: u64) -> Self {
        let mut v = CycInt::zero(e);
        v.coeffs[(m % e as u64) as usize] += 1;
        v.reduce();
        v
    }

    pub fn exponent(&self) -> u32 {
        self.e
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn from_coeffs(e: u32, raw: &[i64]) -> Self {
        let mut coeffs = vec![0i64; e as usize];
        for (i, &c) in raw.iter().enumerate() {
            coeffs[i % e as usize] += c;
        }
        let mut v = CycInt { e, coeffs };
        v.reduce();
        v
    }

    fn reduce(&mut self) {
        let phi = cyclotomic_poly(self.e);
        let deg = phi.len() - 1;
        // divide with remainder by the monic cyclotomic polynomial
        for k in (deg..self.e as usize).rev() {
            let c = self.coeffs[k];
            if c != 0 {
                for (i, &d) in phi.iter().enumerate() {
                    self.coeffs[k - deg + i] -= c * d;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Some(n) when the value is the rational integer n.
    pub fn as_int(&self) -> Option<i64> {
        if self.coeffs[1..].iter().all(|&c| c == 0) {
            Some(self.coeffs[0])
        } else {
            None
        }
    }

    pub fn add(&self, other: &CycInt) -> CycInt {
        debug_assert_eq!(self.e, other.e);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        CycInt { e: self.e, coeffs }
    }

    pub fn sub(&self, other: &CycInt) -> CycInt {
        debug_assert_eq!(self.e, other.e);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        CycInt { e: self.e, coeffs }
    }

    pub fn neg(&self) -> CycInt {
        CycInt {
            e: self.e,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &CycInt) -> CycInt {
        debug_assert_eq!(self.e, other.e);
        let e = self.e as usize;
        // convolution folded through zeta^e = 1, then reduction
        let mut coeffs = vec![0i64; e];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                if b != 0 {
                    coeffs[(i + j) % e] += a * b;
                }
            }
        }
        let mut v = CycInt { e: self.e, coeffs };
        v.reduce();
        v
    }

    pub fn scale(&self, k: i64) -> CycInt {
        CycInt {
            e: self.e,
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// Complex conjugation zeta^j -> zeta^(e-j).
    pub fn conj(&self) -> CycInt {
        let e = self.e as usize;
        let mut coeffs = vec![0i64; e];
        for (j, &c) in self.coeffs.iter().enumerate() {
            coeffs[(e - j) % e] += c;
        }
        let mut v = CycInt { e: self.e, coeffs };
        v.reduce();
        v
    }

    /// Exact division by a nonzero integer; None when any coefficient is not
    /// divisible.
    pub fn div_exact(&self, k: i64) -> Option<CycInt> {
        debug_assert!(k != 0);
        let coeffs = self
            .coeffs
            .iter()
            .map(|&c| if c % k == 0 { Some(c / k) } else { None })
            .collect::<Option<Vec<_>>>()?;
        Some(CycInt { e: self.e, coeffs })
    }
}
