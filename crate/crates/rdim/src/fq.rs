//! Arithmetic and dense linear algebra over the prime field F_q used by the
//! character-table solver.

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug)]
pub struct Fq {
    pub q: u64,
}

impl Fq {
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.q {
            s - self.q
        } else {
            s
        }
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.q - b
        }
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.q as u128) as u64
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        base %= self.q;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(!a.is_multiple_of(self.q));
        self.pow(a, self.q - 2)
    }

    /// A fixed element of multiplicative order n (n must divide q - 1).
    pub fn root_of_unity(&self, n: u64) -> Result<u64> {
        if !(self.q - 1).is_multiple_of(n) {
            return Err(Error::internal(format!(
                "{} does not divide q - 1 = {}",
                n,
                self.q - 1
            )));
        }
        let g = self.primitive_root()?;
        Ok(self.pow(g, (self.q - 1) / n))
    }

    fn primitive_root(&self) -> Result<u64> {
        let phi = self.q - 1;
        let mut factors = Vec::new();
        let mut m = phi;
        let mut d = 2;
        while d * d <= m {
            if m.is_multiple_of(d) {
                factors.push(d);
                while m.is_multiple_of(d) {
                    m /= d;
                }
            }
            d += 1;
        }
        if m > 1 {
            factors.push(m);
        }
        'candidates: for g in 2..self.q {
            for &f in &factors {
                if self.pow(g, phi / f) == 1 {
                    continue 'candidates;
                }
            }
            return Ok(g);
        }
        Err(Error::internal("no primitive root found"))
    }
}

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Smallest prime q with q = 1 (mod exponent) and q^2 > 4|G|, so that F_q has
/// e-th roots of unity and character degrees lift uniquely from their squares.
pub fn dixon_prime(exponent: u64, group_order: u64) -> Result<u64> {
    let bound = exponent.saturating_mul(1 << 24);
    let mut q = exponent + 1;
    loop {
        if q > bound {
            return Err(Error::NoDixonPrime { exponent, bound });
        }
        if q * q > 4 * group_order && is_prime_u64(q) {
            return Ok(q);
        }
        q += exponent.max(1);
    }
}

/// Dense row-major matrix over F_q.
#[derive(Clone, Debug)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<u64>,
}

impl Mat {
    pub fn zero(rows: usize, cols: usize) -> Mat {
        Mat {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn at(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.data[r * self.cols + c] = v;
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref(&mut self, f: Fq) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(pivot_row) = (row..self.rows).find(|&r| self.at(r, col) != 0) else {
                continue;
            };
            if pivot_row != row {
                for c in 0..self.cols {
                    self.data.swap(row * self.cols + c, pivot_row * self.cols + c);
                }
            }
            let inv = f.inv(self.at(row, col));
            for c in col..self.cols {
                let v = f.mul(self.at(row, c), inv);
                self.set(row, c, v);
            }
            for r in 0..self.rows {
                if r != row && self.at(r, col) != 0 {
                    let factor = self.at(r, col);
                    for c in col..self.cols {
                        let v = f.sub(self.at(r, c), f.mul(factor, self.at(row, c)));
                        self.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    /// Canonical basis of the right kernel (one vector per free column).
    pub fn kernel_basis(&self, f: Fq) -> Vec<Vec<u64>> {
        let mut m = self.clone();
        let pivots = m.rref(f);
        let pivot_of_col: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (i, &c) in pivots.iter().enumerate() {
                v[c] = Some(i);
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut vec = vec![0u64; self.cols];
            vec[free] = 1;
            for (i, &c) in pivots.iter().enumerate() {
                vec[c] = f.sub(0, m.at(i, free));
            }
            basis.push(vec);
        }
        basis
    }

    /// Characteristic polynomial via Hessenberg reduction, low degree first,
    /// monic of degree `rows`.
    pub fn charpoly(&self, f: Fq) -> Vec<u64> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut h = self.clone();
        // similarity reduction to upper Hessenberg form
        for col in 0..n.saturating_sub(2) {
            let Some(pivot) = (col + 1..n).find(|&r| h.at(r, col) != 0) else {
                continue;
            };
            if pivot != col + 1 {
                for c in 0..n {
                    h.data.swap((col + 1) * n + c, pivot * n + c);
                }
                for r in 0..n {
                    h.data.swap(r * n + col + 1, r * n + pivot);
                }
            }
            let inv = f.inv(h.at(col + 1, col));
            for r in col + 2..n {
                let factor = f.mul(h.at(r, col), inv);
                if factor == 0 {
                    continue;
                }
                for c in 0..n {
                    let v = f.sub(h.at(r, c), f.mul(factor, h.at(col + 1, c)));
                    h.set(r, c, v);
                }
                for rr in 0..n {
                    let v = f.add(h.at(rr, col + 1), f.mul(factor, h.at(rr, r)));
                    h.set(rr, col + 1, v);
                }
            }
        }
        // p_k(x) = (x - h[k-1][k-1]) p_{k-1}(x)
        //          - sum_i h[i][k-1] (prod subdiagonals) p_i(x)
        let mut polys: Vec<Vec<u64>> = vec![vec![1]];
        for k in 1..=n {
            let mut p = poly_shift_mul_sub(f, &polys[k - 1], h.at(k - 1, k - 1));
            let mut beta = 1u64;
            for i in (0..k - 1).rev() {
                beta = f.mul(beta, h.at(i + 1, i));
                let coeff = f.mul(beta, h.at(i, k - 1));
                if coeff != 0 {
                    for (d, &c) in polys[i].iter().enumerate() {
                        p[d] = f.sub(p[d], f.mul(coeff, c));
                    }
                }
            }
            polys.push(p);
        }
        polys.pop().unwrap()
    }
}

/// (x - a) * p
fn poly_shift_mul_sub(f: Fq, p: &[u64], a: u64) -> Vec<u64> {
    let mut out = vec![0u64; p.len() + 1];
    for (d, &c) in p.iter().enumerate() {
        out[d + 1] = f.add(out[d + 1], c);
        out[d] = f.sub(out[d], f.mul(a, c));
    }
    out
}

pub fn poly_eval(f: Fq, p: &[u64], x: u64) -> u64 {
    let mut acc = 0u64;
    for &c in p.iter().rev() {
        acc = f.add(f.mul(acc, x), c);
    }
    acc
}

/// All roots in F_q by direct scan, ascending.
pub fn poly_roots(f: Fq, p: &[u64]) -> Vec<u64> {
    (0..f.q).filter(|&x| poly_eval(f, p, x) == 0).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dixon_prime_examples() {
        // q = 1 mod e and q > 2 sqrt(|G|)
        assert_eq!(dixon_prime(6, 6).unwrap(), 7);
        assert_eq!(dixon_prime(4, 8).unwrap(), 13);
        assert_eq!(dixon_prime(64, 64).unwrap(), 193);
    }

    #[test]
    fn roots_of_unity_have_exact_order() {
        let f = Fq { q: 13 };
        let z = f.root_of_unity(4).unwrap();
        assert_eq!(f.pow(z, 4), 1);
        assert_ne!(f.pow(z, 2), 1);
    }

    #[test]
    fn charpoly_of_diagonal_matrix() {
        let f = Fq { q: 101 };
        let mut m = Mat::zero(3, 3);
        m.set(0, 0, 2);
        m.set(1, 1, 3);
        m.set(2, 2, 3);
        let p = m.charpoly(f);
        let mut roots = poly_roots(f, &p);
        roots.sort_unstable();
        assert_eq!(roots, vec![2, 3]);
        // multiplicity: p(x) = (x-2)(x-3)^2
        assert_eq!(p.len(), 4);
        assert_eq!(*p.last().unwrap(), 1);
    }

    #[test]
    fn charpoly_of_companion_matrix() {
        // companion of x^3 - 1 over F_7: eigenvalues are cube roots of unity
        let f = Fq { q: 7 };
        let mut m = Mat::zero(3, 3);
        m.set(0, 2, 1);
        m.set(1, 0, 1);
        m.set(2, 1, 1);
        let p = m.charpoly(f);
        let roots = poly_roots(f, &p);
        assert_eq!(roots.len(), 3); // 1, 2, 4
        for r in roots {
            assert_eq!(f.pow(r, 3), 1);
        }
    }

    #[test]
    fn kernel_basis_is_canonical() {
        let f = Fq { q: 5 };
        // x + 2y + 3z = 0 has a 2-dimensional kernel
        let mut m = Mat::zero(1, 3);
        m.set(0, 0, 1);
        m.set(0, 1, 2);
        m.set(0, 2, 3);
        let basis = m.kernel_basis(f);
        assert_eq!(basis.len(), 2);
        for v in &basis {
            let s = f.add(v[0], f.add(f.mul(2, v[1]), f.mul(3, v[2])));
            assert_eq!(s, 0);
        }
    }
}
