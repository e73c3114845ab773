//! Exact ordinary character tables.
//!
//! The table is computed by splitting the common eigenspaces of the class
//! matrices over a prime field F_q with q = 1 (mod exponent), recovering
//! degrees from orthogonality, and lifting every value to an exact cyclotomic
//! integer through the power-map discrete Fourier formula. Every table is
//! re-verified (orthogonality, degree sums, degree bounds) before being
//! returned; a verification failure is an internal error, never a silently
//! wrong table.

use crate::classes::ClassesRef;
use crate::cyclotomic::CycInt;
use crate::error::{Error, Result};
use crate::fq::{dixon_prime, poly_roots, Fq, Mat};
use crate::group::GroupRef;
use crate::structure::{center, Subgroup};
use crate::util::{hash_hex, isqrt};
use serde::{Deserialize, Serialize};
use std::sync::Arc;

/// Class multiplication coefficients a_{ijk}: the number of pairs
/// (x, y) in C_i x C_j with xy = z_k for one fixed representative z_k.
/// Matrices are materialized on demand; the full tensor is only built by
/// callers that ask for it.
pub struct ClassMatrices {
    classes: ClassesRef,
}

pub fn class_matrices(classes: &ClassesRef) -> ClassMatrices {
    ClassMatrices {
        classes: classes.clone(),
    }
}

impl ClassMatrices {
    pub fn class_count(&self) -> usize {
        self.classes.count()
    }

    /// The matrix A_i with A_i[j][m] = a_{ijm}; its right eigenvectors are
    /// the central character vectors.
    pub fn matrix(&self, i: usize) -> Vec<u64> {
        let cd = &self.classes;
        let g = cd.group();
        let k = cd.count();
        let mut a = vec![0u64; k * k];
        for m in 0..k {
            let z = cd.representative(m);
            for &x in cd.members(i) {
                let j = cd.class_of(g.mul(g.inv(x as usize), z));
                a[j * k + m] += 1;
            }
        }
        a
    }

    pub fn coeff(&self, i: usize, j: usize, m: usize) -> u64 {
        let cd = &self.classes;
        let g = cd.group();
        let z = cd.representative(m);
        cd.members(i)
            .iter()
            .filter(|&&x| cd.class_of(g.mul(g.inv(x as usize), z)) == j)
            .count() as u64
    }

    /// Total-count consistency: sum over m of a_{ijm} |C_m| = |C_i||C_j|.
    pub fn verify_counts(&self, i: usize) -> Result<()> {
        let cd = &self.classes;
        let k = cd.count();
        let a = self.matrix(i);
        for j in 0..k {
            let total: u64 = (0..k).map(|m| a[j * k + m] * cd.size(m) as u64).sum();
            if total != (cd.size(i) * cd.size(j)) as u64 {
                return Err(Error::internal(format!(
                    "class matrix count mismatch at (i={i}, j={j})"
                )));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct Character {
    pub degree: u64,
    pub values: Vec<CycInt>,
}

pub struct CharTable {
    group: GroupRef,
    classes: ClassesRef,
    exponent: u32,
    prime: u64,
    rows: Vec<Character>,
    center: Subgroup,
    /// Classes whose elements lie in the center.
    center_classes: Vec<usize>,
}

pub type CharTableRef = Arc<CharTable>;

impl CharTable {
    pub fn group(&self) -> &GroupRef {
        &self.group
    }

    pub fn classes(&self) -> &ClassesRef {
        &self.classes
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn dixon_prime(&self) -> u64 {
        self.prime
    }

    pub fn rows(&self) -> &[Character] {
        &self.rows
    }

    pub fn degree(&self, row: usize) -> u64 {
        self.rows[row].degree
    }

    pub fn value(&self, row: usize, class: usize) -> &CycInt {
        &self.rows[row].values[class]
    }

    pub fn center(&self) -> &Subgroup {
        &self.center
    }

    pub fn degrees(&self) -> Vec<u64> {
        self.rows.iter().map(|r| r.degree).collect()
    }

    /// Classes where the value equals the degree, i.e. the kernel.
    pub fn kernel_classes(&self, row: usize) -> Vec<usize> {
        let deg = CycInt::from_int(self.exponent, self.rows[row].degree as i64);
        (0..self.classes.count())
            .filter(|&c| self.rows[row].values[c] == deg)
            .collect()
    }

    /// The kernel as a subgroup; verifies that the union of kernel classes is
    /// closed under multiplication.
    pub fn kernel_subgroup(&self, row: usize) -> Result<Subgroup> {
        let classes = self.kernel_classes(row);
        let mut elements: Vec<u32> = Vec::new();
        for &c in &classes {
            elements.extend_from_slice(self.classes.members(c));
        }
        elements.sort_unstable();
        let sub = Subgroup::generated(&self.group, &elements.iter().map(|&x| x as usize).collect::<Vec<_>>());
        if sub.order() != elements.len() {
            return Err(Error::internal("kernel classes are not closed under multiplication"));
        }
        Ok(sub)
    }

    /// Rows whose kernel does not contain Z(G).
    pub fn irr_over_center_nonprincipal(&self) -> Vec<usize> {
        (0..self.rows.len())
            .filter(|&r| {
                let deg = CycInt::from_int(self.exponent, self.rows[r].degree as i64);
                self.center_classes
                    .iter()
                    .any(|&c| self.rows[r].values[c] != deg)
            })
            .collect()
    }

    /// Restriction of a row to a central subgroup: central elements act by
    /// scalars, so chi(z)/chi(1) is an exact root of unity.
    pub fn restrict_to_central(&self, row: usize, a: &Subgroup) -> Result<CentralCharacter> {
        if !a.is_central() {
            return Err(Error::NotCentral);
        }
        let e = self.exponent;
        let deg = self.rows[row].degree as i64;
        let mut exps = Vec::with_capacity(a.order());
        for &z in a.elements() {
            let class = self.classes.class_of(z as usize);
            let lambda = self.rows[row].values[class]
                .div_exact(deg)
                .ok_or_else(|| Error::internal("central value is not degree * root of unity"))?;
            let ord = self.group.element_order(z as usize);
            let step = e as u64 / ord;
            let m = (0..ord)
                .map(|t| t * step)
                .find(|&m| CycInt::root_power(e, m) == lambda)
                .ok_or_else(|| Error::internal("central restriction is not a root of unity"))?;
            exps.push(m as u32);
        }
        Ok(CentralCharacter {
            elements: a.elements().to_vec(),
            exps,
            exponent: e,
        })
    }

    pub fn lies_over(&self, row: usize, lambda: &CentralCharacter, a: &Subgroup) -> Result<bool> {
        Ok(self.restrict_to_central(row, a)? == *lambda)
    }

    pub fn irr_over(&self, lambda: &CentralCharacter, a: &Subgroup) -> Result<Vec<usize>> {
        (0..self.rows.len())
            .filter_map(|r| match self.lies_over(r, lambda, a) {
                Ok(true) => Some(Ok(r)),
                Ok(false) => None,
                Err(e) => Some(Err(e)),
            })
            .collect()
    }

    /// True iff chi(1)^2 = |G : Z(G)|, cross-checked against the vanishing
    /// criterion (chi = 0 off the center). Rows over the principal central
    /// character return false by convention.
    pub fn is_fully_ramified(&self, row: usize) -> Result<bool> {
        let z = &self.center;
        let restriction = self.restrict_to_central(row, z)?;
        if restriction.is_principal() {
            return Ok(false);
        }
        let deg = self.rows[row].degree;
        let ramified = deg * deg == (self.group.order() / z.order()) as u64;
        let vanishing = (0..self.classes.count())
            .filter(|&c| !z.contains(self.classes.representative(c)))
            .all(|c| self.rows[row].values[c].is_zero());
        if ramified != vanishing {
            return Err(Error::internal(
                "fully-ramified square criterion disagrees with the vanishing criterion",
            ));
        }
        Ok(ramified)
    }

    /// Stable hash of the serialized table, used to bind certificates.
    pub fn table_hash(&self) -> String {
        hash_hex(self.to_cache_json().as_bytes())
    }

    pub fn to_cache_json(&self) -> String {
        let file = TableFile {
            version: 1,
            group_hash: crate::group::group_hash(&self.group),
            order: self.group.order() as u64,
            exponent: self.exponent,
            prime: self.prime,
            class_sizes: self.classes.sizes().iter().map(|&s| s as u64).collect(),
            class_reps: (0..self.classes.count())
                .map(|c| self.classes.representative(c) as u64)
                .collect(),
            rows: self
                .rows
                .iter()
                .map(|r| TableRow {
                    degree: r.degree,
                    values: r.values.iter().map(|v| v.coeffs().to_vec()).collect(),
                })
                .collect(),
        };
        let mut s = serde_json::to_string(&file).expect("table serialization cannot fail");
        s.push('\n');
        s
    }

    /// Reads a cached table back, checking it belongs to this exact group.
    pub fn from_cache_json(text: &str, classes: &ClassesRef) -> Result<CharTableRef> {
        let file: TableFile = serde_json::from_str(text)?;
        let group = classes.group().clone();
        if file.group_hash != crate::group::group_hash(&group)
            || file.order != group.order() as u64
            || file.class_sizes != classes.sizes().iter().map(|&s| s as u64).collect::<Vec<_>>()
        {
            return Err(Error::CacheMismatch);
        }
        let rows = file
            .rows
            .iter()
            .map(|r| Character {
                degree: r.degree,
                values: r
                    .values
                    .iter()
                    .map(|c| CycInt::from_coeffs(file.exponent, c))
                    .collect(),
            })
            .collect();
        let z = center(&group);
        let center_classes = center_class_list(classes, &z);
        let table = CharTable {
            group: group.clone(),
            classes: classes.clone(),
            exponent: file.exponent,
            prime: file.prime,
            rows,
            center: z,
            center_classes,
        };
        // cheap structural re-checks; the hash binds the heavy invariants
        if table.rows.len() != classes.count() {
            return Err(Error::CacheMismatch);
        }
        let sum: u64 = table.rows.iter().map(|r| r.degree * r.degree).sum();
        if sum != group.order() as u64 {
            return Err(Error::CacheMismatch);
        }
        Ok(Arc::new(table))
    }
}

/// A linear character of a central subgroup, stored as the root-of-unity
/// exponent at every element of the subgroup.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CentralCharacter {
    elements: Vec<u32>,
    /// zeta_e exponent of the value at the matching element.
    exps: Vec<u32>,
    exponent: u32,
}

impl CentralCharacter {
    pub fn is_principal(&self) -> bool {
        self.exps.iter().all(|&m| m == 0)
    }

    pub fn subgroup_elements(&self) -> &[u32] {
        &self.elements
    }

    /// Builds the character with the given zeta_e exponents on a fixed basis
    /// of an elementary abelian central subgroup, extended multiplicatively.
    pub fn from_basis_exponents(
        group: &GroupRef,
        a: &Subgroup,
        basis: &[usize],
        p: u64,
        vector: &[u64],
        exponent: u32,
    ) -> Result<CentralCharacter> {
        if !(exponent as u64).is_multiple_of(p) {
            return Err(Error::internal("exponent not divisible by p"));
        }
        let step = exponent as u64 / p;
        // decompose each element over the basis by brute-force digits
        let r = basis.len();
        let mut exps = Vec::with_capacity(a.order());
        for &z in a.elements() {
            let mut digits = vec![0u64; r];
            let found = find_decomposition(group, basis, z as usize, &mut digits, 0, p);
            if !found {
                return Err(Error::internal("element not in the span of the basis"));
            }
            let m: u64 = digits
                .iter()
                .zip(vector)
                .map(|(&d, &v)| d * v % p)
                .sum::<u64>()
                % p;
            exps.push((m * step % exponent as u64) as u32);
        }
        Ok(CentralCharacter {
            elements: a.elements().to_vec(),
            exps,
            exponent,
        })
    }

    /// Exponent vector over the given basis, for elementary abelian subgroups
    /// of exponent p: value at basis[i] is zeta_p^(result[i]).
    pub fn exponent_vector(&self, basis: &[usize], p: u64) -> Result<Vec<u64>> {
        let step = self.exponent as u64 / p;
        basis
            .iter()
            .map(|&b| {
                let pos = self
                    .elements
                    .binary_search(&(b as u32))
                    .map_err(|_| Error::internal("basis element outside subgroup"))?;
                let m = self.exps[pos] as u64;
                if !m.is_multiple_of(step) {
                    return Err(Error::internal("value is not a p-th root of unity"));
                }
                Ok(m / step % p)
            })
            .collect()
    }
}

fn find_decomposition(
    group: &GroupRef,
    basis: &[usize],
    target: usize,
    digits: &mut [u64],
    from: usize,
    p: u64,
) -> bool {
    // depth-first over digit vectors; fine for the tiny central subgroups here
    fn build(group: &GroupRef, basis: &[usize], digits: &[u64]) -> usize {
        let mut acc = 0usize;
        for (i, &b) in basis.iter().enumerate() {
            acc = group.mul(acc, group.pow(b, digits[i]));
        }
        acc
    }
    if from == basis.len() {
        return build(group, basis, digits) == target;
    }
    for d in 0..p {
        digits[from] = d;
        if find_decomposition(group, basis, target, digits, from + 1, p) {
            return true;
        }
    }
    digits[from] = 0;
    false
}

/// Canonical basis of an elementary abelian subgroup: greedy over the sorted
/// element list, keeping elements independent of the span so far.
pub fn elementary_abelian_basis(a: &Subgroup) -> Result<Vec<usize>> {
    let p = a
        .is_elementary_abelian()
        .ok_or_else(|| Error::internal("subgroup is not elementary abelian"))?;
    let _ = p;
    let mut basis: Vec<usize> = Vec::new();
    let mut span = Subgroup::trivial(a.parent());
    for &x in a.elements() {
        if !span.contains(x as usize) {
            basis.push(x as usize);
            let mut gens: Vec<usize> = basis.clone();
            gens.extend(span.elements().iter().map(|&e| e as usize));
            span = Subgroup::generated(a.parent(), &gens);
        }
    }
    Ok(basis)
}

#[derive(Serialize, Deserialize)]
struct TableFile {
    version: u32,
    group_hash: String,
    order: u64,
    exponent: u32,
    prime: u64,
    class_sizes: Vec<u64>,
    class_reps: Vec<u64>,
    rows: Vec<TableRow>,
}

#[derive(Serialize, Deserialize)]
struct TableRow {
    degree: u64,
    values: Vec<Vec<i64>>,
}

fn center_class_list(classes: &ClassesRef, z: &Subgroup) -> Vec<usize> {
    (0..classes.count())
        .filter(|&c| z.contains(classes.representative(c)))
        .collect()
}

/// Computes the exact character table of the group underlying `classes`.
pub fn character_table(classes: &ClassesRef) -> Result<CharTableRef> {
    let group = classes.group().clone();
    let k = classes.count();
    let e = u32::try_from(group.exponent())
        .map_err(|_| Error::internal("group exponent exceeds u32"))?;
    let q = dixon_prime(e as u64, group.order() as u64)?;
    let f = Fq { q };
    let matrices = class_matrices(classes);

    // split the common eigenspaces of the class matrices
    let mut spaces: Vec<Vec<Vec<u64>>> = vec![(0..k)
        .map(|i| {
            let mut v = vec![0u64; k];
            v[i] = 1;
            v
        })
        .collect()];
    for i in 1..k {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let a = matrices.matrix(i); // A[j*k + m]
        let mut next: Vec<Vec<Vec<u64>>> = Vec::with_capacity(spaces.len());
        for basis in &spaces {
            let d = basis.len();
            if d == 1 {
                next.push(basis.clone());
                continue;
            }
            next.extend(split_space(f, &a, k, basis)?);
        }
        spaces = next;
    }
    if spaces.iter().any(|s| s.len() != 1) {
        return Err(Error::internal("class matrices failed to split the eigenspaces"));
    }

    // normalize so the identity-class coordinate is 1, recover degrees, lift
    let order = group.order() as u64;
    let size_inv: Vec<u64> = (0..k).map(|c| f.inv(classes.size(c) as u64)).collect();
    let theta = f.root_of_unity(e as u64)?;
    let theta_pow: Vec<u64> = {
        let mut v = Vec::with_capacity(e as usize);
        let mut acc = 1u64;
        for _ in 0..e {
            v.push(acc);
            acc = f.mul(acc, theta);
        }
        v
    };
    // class-power data shared by all rows
    let power_classes: Vec<Vec<usize>> = (0..k)
        .map(|c| {
            let rep = classes.representative(c);
            let d = group.element_order(rep);
            let mut acc = 0usize;
            (0..d)
                .map(|_| {
                    let cls = classes.class_of(acc);
                    acc = group.mul(acc, rep);
                    cls
                })
                .collect()
        })
        .collect();

    let mut rows: Vec<Character> = Vec::with_capacity(k);
    for space in &spaces {
        let raw = &space[0];
        if raw[0] == 0 {
            return Err(Error::internal("central character has zero identity coordinate"));
        }
        let scale = f.inv(raw[0]);
        let omega: Vec<u64> = raw.iter().map(|&x| f.mul(x, scale)).collect();
        // 1/chi(1)^2 * |G| = sum over classes of w_j w_{j*} / |C_j|
        let mut s = 0u64;
        for j in 0..k {
            let term = f.mul(f.mul(omega[j], omega[classes.inverse_class(j)]), size_inv[j]);
            s = f.add(s, term);
        }
        if s == 0 {
            return Err(Error::internal("degree recovery hit a zero norm"));
        }
        let deg_sq_mod = f.mul(order % q, f.inv(s));
        let max_deg = isqrt(order);
        let mut found: Option<u64> = None;
        for d in 1..=max_deg {
            if f.mul(d, d) == deg_sq_mod {
                if found.is_some() {
                    return Err(Error::internal("ambiguous degree recovery"));
                }
                found = Some(d);
            }
        }
        let degree = found.ok_or_else(|| Error::internal("no degree matches its square mod q"))?;

        // chi(g_j) mod q
        let w: Vec<u64> = (0..k)
            .map(|j| f.mul(f.mul(degree % q, omega[j]), size_inv[j]))
            .collect();
        // lift each value to an exact cyclotomic integer via eigenvalue
        // multiplicities of the class representative
        let mut values = Vec::with_capacity(k);
        for j in 0..k {
            let d = power_classes[j].len() as u64;
            let step = e as u64 / d;
            let inv_d = f.inv(d % q);
            let mut coeffs = vec![0i64; e as usize];
            let mut total = 0u64;
            for l in 0..d {
                let mut acc = 0u64;
                for (s_exp, &cls) in power_classes[j].iter().enumerate() {
                    let idx = (l * s_exp as u64 * step) % e as u64;
                    let t = theta_pow[((e as u64 - idx) % e as u64) as usize];
                    acc = f.add(acc, f.mul(w[cls], t));
                }
                let m_l = f.mul(inv_d, acc);
                if m_l > degree {
                    return Err(Error::internal("eigenvalue multiplicity exceeds the degree"));
                }
                total += m_l;
                coeffs[(l * step % e as u64) as usize] += m_l as i64;
            }
            if total != degree {
                return Err(Error::internal("eigenvalue multiplicities do not sum to the degree"));
            }
            values.push(CycInt::from_coeffs(e, &coeffs));
        }
        rows.push(Character { degree, values });
    }

    // canonical row order: principal first, then by (degree, values)
    let one = CycInt::from_int(e, 1);
    rows.sort_by(|a, b| {
        let pa = a.values.iter().all(|v| *v == one);
        let pb = b.values.iter().all(|v| *v == one);
        (a.degree, !pa)
            .cmp(&(b.degree, !pb))
            .then_with(|| value_key(a).cmp(&value_key(b)))
    });

    let z = center(&group);
    let center_classes = center_class_list(classes, &z);
    let table = CharTable {
        group,
        classes: classes.clone(),
        exponent: e,
        prime: q,
        rows,
        center: z,
        center_classes,
    };
    verify_table(&table)?;
    Ok(Arc::new(table))
}

fn value_key(c: &Character) -> Vec<i64> {
    c.values.iter().flat_map(|v| v.coeffs().iter().copied()).collect()
}

/// Splits an invariant subspace into the eigenspaces of `a` restricted to it.
fn split_space(f: Fq, a: &[u64], k: usize, basis: &[Vec<u64>]) -> Result<Vec<Vec<Vec<u64>>>> {
    let d = basis.len();
    // RREF the basis to get pivot columns for coordinate extraction
    let mut bm = Mat::zero(d, k);
    for (r, v) in basis.iter().enumerate() {
        for (c, &x) in v.iter().enumerate() {
            bm.set(r, c, x);
        }
    }
    let pivots = bm.rref(f);
    if pivots.len() != d {
        return Err(Error::internal("subspace basis is degenerate"));
    }
    // images of basis vectors and their coordinates over the basis
    let mut restricted = Mat::zero(d, d); // restricted[m][j]: coords of A b_j
    for j in 0..d {
        let mut image = vec![0u64; k];
        for (r, img) in image.iter_mut().enumerate() {
            let mut acc = 0u64;
            for m in 0..k {
                let av = a[r * k + m];
                if av != 0 {
                    acc = f.add(acc, f.mul(av % f.q, bm.at(j, m)));
                }
            }
            *img = acc;
        }
        let mut coords = vec![0u64; d];
        for (m, &p) in pivots.iter().enumerate() {
            coords[m] = image[p];
        }
        // invariance check: the image must reconstruct exactly
        for c in 0..k {
            let mut acc = 0u64;
            for (m, &coord) in coords.iter().enumerate() {
                acc = f.add(acc, f.mul(coord, bm.at(m, c)));
            }
            if acc != image[c] {
                return Err(Error::internal("subspace is not invariant under a class matrix"));
            }
        }
        for m in 0..d {
            restricted.set(m, j, coords[m]);
        }
    }
    let charpoly = restricted.charpoly(f);
    let roots = poly_roots(f, &charpoly);
    let mut out = Vec::new();
    let mut total = 0;
    for lambda in roots {
        let mut shifted = restricted.clone();
        for i in 0..d {
            let v = f.sub(shifted.at(i, i), lambda);
            shifted.set(i, i, v);
        }
        let kernel = shifted.kernel_basis(f);
        if kernel.is_empty() {
            continue;
        }
        total += kernel.len();
        // map kernel vectors back to ambient coordinates and canonicalize
        let mut amb = Mat::zero(kernel.len(), k);
        for (r, w) in kernel.iter().enumerate() {
            for c in 0..k {
                let mut acc = 0u64;
                for (m, &wm) in w.iter().enumerate() {
                    acc = f.add(acc, f.mul(wm, bm.at(m, c)));
                }
                amb.set(r, c, acc);
            }
        }
        amb.rref(f);
        let vectors: Vec<Vec<u64>> = (0..kernel.len())
            .map(|r| (0..k).map(|c| amb.at(r, c)).collect())
            .collect();
        out.push(vectors);
    }
    if total != d {
        return Err(Error::internal("class matrix is not diagonalizable over F_q"));
    }
    Ok(out)
}

fn verify_table(t: &CharTable) -> Result<()> {
    let k = t.classes.count();
    let order = t.group.order() as u64;
    if t.rows.len() != k {
        return Err(Error::internal("row count differs from class count"));
    }
    let sum: u64 = t.rows.iter().map(|r| r.degree * r.degree).sum();
    if sum != order {
        return Err(Error::internal("degree squares do not sum to |G|"));
    }
    let one = CycInt::from_int(t.exponent, 1);
    if t.rows[0].degree != 1 || t.rows[0].values.iter().any(|v| *v != one) {
        return Err(Error::internal("row 0 is not the principal character"));
    }
    let index_z = (t.group.order() / t.center.order()) as u64;
    for r in &t.rows {
        if !order.is_multiple_of(r.degree) {
            return Err(Error::internal("character degree does not divide |G|"));
        }
        if r.degree * r.degree > index_z {
            return Err(Error::internal("character degree exceeds sqrt(|G:Z(G)|)"));
        }
    }
    // chi(g^-1) = conj(chi(g)) must hold exactly
    for r in &t.rows {
        for c in 0..k {
            if r.values[t.classes.inverse_class(c)] != r.values[c].conj() {
                return Err(Error::internal("value at inverse class differs from conjugate"));
            }
        }
    }
    // first orthogonality, all pairs
    for a in 0..k {
        for b in a..k {
            let mut acc = CycInt::zero(t.exponent);
            for c in 0..k {
                let term = t.rows[a].values[c]
                    .mul(&t.rows[b].values[t.classes.inverse_class(c)])
                    .scale(t.classes.size(c) as i64);
                acc = acc.add(&term);
            }
            let expected = if a == b { order as i64 } else { 0 };
            if acc.as_int() != Some(expected) {
                return Err(Error::internal(format!(
                    "first orthogonality fails for rows {a}, {b}"
                )));
            }
        }
    }
    // second orthogonality, all column pairs
    for i in 0..k {
        for j in i..k {
            let mut acc = CycInt::zero(t.exponent);
            for r in &t.rows {
                acc = acc.add(&r.values[i].mul(&r.values[t.classes.inverse_class(j)]));
            }
            let expected = if i == j {
                (order / t.classes.size(i) as u64) as i64
            } else {
                0
            };
            if acc.as_int() != Some(expected) {
                return Err(Error::internal(format!(
                    "second orthogonality fails for classes {i}, {j}"
                )));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::conjugacy_classes;
    use crate::families::FamilySpec;
    use crate::group::{load_group, parse_spec, GroupSpec, LoadLimits};

    fn table_for(f: FamilySpec) -> CharTableRef {
        let g = load_group(&GroupSpec::Family(f), &LoadLimits::default()).unwrap();
        let cd = conjugacy_classes(&g).unwrap();
        character_table(&cd).unwrap()
    }

    fn s3_table() -> CharTableRef {
        let spec =
            parse_spec(r#"{"kind":"perm","degree":3,"generators":[[[0,1]],[[0,1,2]]]}"#).unwrap();
        let g = load_group(&spec, &LoadLimits::default()).unwrap();
        let cd = conjugacy_classes(&g).unwrap();
        character_table(&cd).unwrap()
    }

    #[test]
    fn s3_degrees() {
        let t = s3_table();
        assert_eq!(t.degrees(), vec![1, 1, 2]);
    }

    #[test]
    fn q8_degrees() {
        let t = table_for(FamilySpec::GeneralizedQuaternion { order: 8 });
        assert_eq!(t.degrees(), vec![1, 1, 1, 1, 2]);
    }

    #[test]
    fn extraspecial_32_degrees() {
        // sixteen linear characters and a single degree-4 row
        for plus in [true, false] {
            let t = table_for(FamilySpec::Extraspecial { p: 2, n: 5, plus });
            let degs = t.degrees();
            assert_eq!(degs.iter().filter(|&&d| d == 1).count(), 16);
            assert_eq!(degs.iter().filter(|&&d| d == 4).count(), 1);
            assert_eq!(degs.len(), 17);
        }
    }

    #[test]
    fn class_matrix_identity_row_is_neutral() {
        let t = s3_table();
        let cm = class_matrices(t.classes());
        let k = cm.class_count();
        for j in 0..k {
            for m in 0..k {
                assert_eq!(cm.coeff(0, j, m), u64::from(j == m));
            }
        }
    }

    #[test]
    fn class_matrix_of_c2_is_forced() {
        // the nonidentity class squared hits the identity representative once
        let t = table_for(FamilySpec::Cyclic { n: 2 });
        let cm = class_matrices(t.classes());
        assert_eq!(cm.coeff(1, 1, 0), 1);
        assert_eq!(cm.coeff(1, 1, 1), 0);
    }

    #[test]
    fn class_matrix_counts_match_brute_force() {
        // independent oracle: enumerate all pairs (x, y) directly
        let t = s3_table();
        let cd = t.classes();
        let g = cd.group();
        let cm = class_matrices(cd);
        let k = cd.count();
        for i in 0..k {
            cm.verify_counts(i).unwrap();
            for j in 0..k {
                for m in 0..k {
                    let z = cd.representative(m);
                    let mut count = 0;
                    for &x in cd.members(i) {
                        for &y in cd.members(j) {
                            if g.mul(x as usize, y as usize) == z {
                                count += 1;
                            }
                        }
                    }
                    assert_eq!(cm.coeff(i, j, m), count, "(i,j,m)=({i},{j},{m})");
                }
            }
        }
    }

    #[test]
    fn s3_transposition_class_squared() {
        let t = s3_table();
        let cd = t.classes();
        let cm = class_matrices(cd);
        // classes are ordered: identity (size 1), 3-cycles (size 2),
        // transpositions (size 3)
        assert_eq!(cd.sizes(), &[1, 2, 3]);
        assert_eq!(cm.coeff(2, 2, 0), 3);
        assert_eq!(cm.coeff(2, 2, 1), 3);
        assert_eq!(cm.coeff(2, 2, 2), 0);
    }

    #[test]
    fn abelian_table_matches_direct_construction() {
        // independent oracle for abelian groups: characters are products of
        // root-of-unity powers determined by the invariant factors
        for (divisors, f) in [
            (vec![4u64], FamilySpec::Cyclic { n: 4 }),
            (
                vec![2, 4],
                FamilySpec::DirectProduct(vec![
                    FamilySpec::Cyclic { n: 2 },
                    FamilySpec::Cyclic { n: 4 },
                ]),
            ),
            (vec![6], FamilySpec::Cyclic { n: 6 }),
        ] {
            let g = load_group(&GroupSpec::Family(f), &LoadLimits::default()).unwrap();
            let cd = conjugacy_classes(&g).unwrap();
            let t = character_table(&cd).unwrap();
            let e = t.exponent();
            // expected: choose independent generators x_i of order d_i; all
            // value vectors are products over characters lambda(x) = zeta^(...)
            let gens = crate::chartab::tests_support::independent_generators(&g, &divisors);
            let mut expected: Vec<Vec<CycInt>> = Vec::new();
            let mut choice = vec![0u64; divisors.len()];
            loop {
                let row: Vec<CycInt> = (0..cd.count())
                    .map(|c| {
                        let x = cd.representative(c);
                        let digits = crate::chartab::tests_support::decompose(&g, &gens, &divisors, x);
                        let mut exp = 0u64;
                        for (i, &d) in digits.iter().enumerate() {
                            exp = (exp + choice[i] * d * (e as u64 / divisors[i])) % e as u64;
                        }
                        CycInt::root_power(e, exp)
                    })
                    .collect();
                expected.push(row);
                // odometer
                let mut pos = 0;
                loop {
                    if pos == divisors.len() {
                        break;
                    }
                    choice[pos] += 1;
                    if choice[pos] < divisors[pos] {
                        break;
                    }
                    choice[pos] = 0;
                    pos += 1;
                }
                if pos == divisors.len() {
                    break;
                }
            }
            // compare as sets of value vectors
            for row in t.rows() {
                assert_eq!(row.degree, 1);
                assert!(
                    expected.iter().any(|exp| exp == &row.values),
                    "computed row not among directly constructed characters"
                );
            }
            assert_eq!(expected.len(), t.rows().len());
        }
    }

    #[test]
    fn kernel_of_sign_character_of_s3_is_a3() {
        let t = s3_table();
        // row 1 is the sign character (degree 1, not principal)
        let kc = t.kernel_classes(1);
        assert_eq!(kc, vec![0, 1]); // identity and 3-cycles
        let ker = t.kernel_subgroup(1).unwrap();
        assert_eq!(ker.order(), 3);
    }

    #[test]
    fn kernel_of_degree2_q8_row_is_trivial() {
        let t = table_for(FamilySpec::GeneralizedQuaternion { order: 8 });
        let row = t.rows().iter().position(|r| r.degree == 2).unwrap();
        assert_eq!(t.kernel_classes(row), vec![0]);
    }

    #[test]
    fn principal_kernel_is_everything() {
        let t = s3_table();
        assert_eq!(t.kernel_classes(0).len(), t.classes().count());
    }

    #[test]
    fn restriction_to_trivial_subgroup_is_principal() {
        let t = s3_table();
        let trivial = crate::structure::Subgroup::trivial(t.group());
        for row in 0..t.rows().len() {
            assert!(t.restrict_to_central(row, &trivial).unwrap().is_principal());
        }
    }

    #[test]
    fn q8_degree2_restricts_to_minus_one_on_center() {
        let t = table_for(FamilySpec::GeneralizedQuaternion { order: 8 });
        let row = t.rows().iter().position(|r| r.degree == 2).unwrap();
        let z = t.center().clone();
        let lambda = t.restrict_to_central(row, &z).unwrap();
        assert!(!lambda.is_principal());
        // the central involution maps to -1 = zeta_e^(e/2)
        let e = t.exponent();
        assert!(lambda.exps.contains(&(e / 2)));
        // exactly the degree-2 row lies over this lambda
        assert_eq!(t.irr_over(&lambda, &z).unwrap(), vec![row]);
    }

    #[test]
    fn fully_ramified_examples() {
        let t = table_for(FamilySpec::GeneralizedQuaternion { order: 8 });
        let row = t.rows().iter().position(|r| r.degree == 2).unwrap();
        assert!(t.is_fully_ramified(row).unwrap());
        // linear rows of a nonabelian group are never fully ramified
        assert!(!t.is_fully_ramified(0).unwrap());

        let t32 = table_for(FamilySpec::Extraspecial { p: 2, n: 5, plus: true });
        let row4 = t32.rows().iter().position(|r| r.degree == 4).unwrap();
        assert!(t32.is_fully_ramified(row4).unwrap());
    }

    #[test]
    fn irr_over_center_nonprincipal_examples() {
        let q8 = table_for(FamilySpec::GeneralizedQuaternion { order: 8 });
        let rows = q8.irr_over_center_nonprincipal();
        assert_eq!(rows.len(), 1);
        assert_eq!(q8.degree(rows[0]), 2);

        let c2cubed = table_for(FamilySpec::Elementary { p: 2, r: 3 });
        assert_eq!(c2cubed.irr_over_center_nonprincipal().len(), 7);
    }

    #[test]
    fn heisenberg_f4_single_row_over_each_nonprincipal_central_character() {
        let t = table_for(FamilySpec::Heisenberg { q: 4 });
        let z = t.center().clone();
        assert_eq!(z.order(), 4);
        let mut seen = 0;
        for row in 0..t.rows().len() {
            let lambda = t.restrict_to_central(row, &z).unwrap();
            if !lambda.is_principal() && t.degree(row) == 4 {
                let over = t.irr_over(&lambda, &z).unwrap();
                assert_eq!(over.len(), 1);
                seen += 1;
            }
        }
        assert_eq!(seen, 3);
    }

    #[test]
    fn cache_round_trip_is_byte_exact() {
        let t = table_for(FamilySpec::Dihedral { n: 8 });
        let json = t.to_cache_json();
        let back = CharTable::from_cache_json(&json, t.classes()).unwrap();
        assert_eq!(back.to_cache_json(), json);
        assert_eq!(back.table_hash(), t.table_hash());
    }

    #[test]
    fn cache_rejects_wrong_group() {
        let t = table_for(FamilySpec::Dihedral { n: 8 });
        let other = load_group(
            &GroupSpec::Family(FamilySpec::GeneralizedQuaternion { order: 16 }),
            &LoadLimits::default(),
        )
        .unwrap();
        let other_cd = conjugacy_classes(&other).unwrap();
        let err = CharTable::from_cache_json(&t.to_cache_json(), &other_cd);
        assert!(matches!(err, Err(Error::CacheMismatch)));
    }

    #[test]
    fn trivial_group_table() {
        let t = table_for(FamilySpec::Cyclic { n: 1 });
        assert_eq!(t.degrees(), vec![1]);
    }

    #[test]
    fn central_lambda_degree_square_sum_is_index_of_center() {
        // for p-groups: sum of chi(1)^2 over Irr(G|lambda) = |G : Z(G)|
        for f in [
            FamilySpec::GeneralizedQuaternion { order: 16 },
            FamilySpec::Heisenberg { q: 4 },
            FamilySpec::Extraspecial { p: 3, n: 3, plus: false },
        ] {
            let t = table_for(f);
            let z = t.center().clone();
            let index = (t.group().order() / z.order()) as u64;
            let mut by_lambda: std::collections::HashMap<Vec<u32>, u64> =
                std::collections::HashMap::new();
            for row in 0..t.rows().len() {
                let lambda = t.restrict_to_central(row, &z).unwrap();
                if !lambda.is_principal() {
                    *by_lambda.entry(lambda.exps.clone()).or_default() +=
                        t.degree(row) * t.degree(row);
                }
            }
            for (_, sum) in by_lambda {
                assert_eq!(sum, index);
            }
        }
    }
}

#[cfg(test)]
pub(crate) mod tests_support {
    use crate::group::GroupRef;

    /// Independent generators realizing the invariant factor decomposition,
    /// found by searching elements of the right orders.
    pub fn independent_generators(g: &GroupRef, divisors: &[u64]) -> Vec<usize> {
        fn search(
            g: &GroupRef,
            divisors: &[u64],
            chosen: &mut Vec<usize>,
            produced: &mut std::collections::HashSet<usize>,
        ) -> bool {
            if chosen.len() == divisors.len() {
                return produced.len() == g.order();
            }
            let want = divisors[chosen.len()];
            for x in 0..g.order() {
                if g.element_order(x) != want {
                    continue;
                }
                let before: std::collections::HashSet<usize> = produced.clone();
                let mut frontier: Vec<usize> = produced.iter().copied().collect();
                // extend the generated set by x
                let mut pow = 0usize;
                for _ in 0..want {
                    pow = g.mul(pow, x);
                    for &b in &before {
                        frontier.push(g.mul(b, pow));
                    }
                }
                let mut ok = true;
                let mut added = Vec::new();
                for y in frontier {
                    if produced.insert(y) {
                        added.push(y);
                    }
                }
                // direct factor requires |span| to multiply
                if produced.len() != before.len() * want as usize {
                    ok = false;
                }
                if ok {
                    chosen.push(x);
                    if search(g, divisors, chosen, produced) {
                        return true;
                    }
                    chosen.pop();
                }
                for y in added {
                    produced.remove(&y);
                }
            }
            false
        }
        let mut chosen = Vec::new();
        let mut produced = std::collections::HashSet::new();
        produced.insert(0);
        assert!(search(g, divisors, &mut chosen, &mut produced));
        chosen
    }

    /// Digits of x over the independent generators.
    pub fn decompose(g: &GroupRef, gens: &[usize], divisors: &[u64], x: usize) -> Vec<u64> {
        fn rec(g: &GroupRef, gens: &[usize], divisors: &[u64], x: usize, acc: usize, digits: &mut Vec<u64>) -> bool {
            if digits.len() == gens.len() {
                return acc == x;
            }
            let i = digits.len();
            for d in 0..divisors[i] {
                digits.push(d);
                let next = g.mul(acc, g.pow(gens[i], d));
                if rec(g, gens, divisors, x, next, digits) {
                    return true;
                }
                digits.pop();
            }
            false
        }
        let mut digits = Vec::new();
        assert!(rec(g, gens, divisors, x, 0, &mut digits));
        digits
    }
}
