//! Subgroup-level structure: center, derived subgroup, minimal normal
//! subgroups, socle decomposition, quotients, and abelian invariants.

use crate::classes::ClassesRef;
use crate::error::{Error, Result};
use crate::group::{Group, GroupRef};
use crate::util::Bitset;
use std::collections::HashSet;
use std::sync::Arc;

/// A subgroup given by its sorted element indices.
#[derive(Clone)]
pub struct Subgroup {
    parent: GroupRef,
    elements: Vec<u32>,
    bits: Bitset,
}

impl std::fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subgroup(order={})", self.order())
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.parent, &other.parent) && self.elements == other.elements
    }
}

impl Subgroup {
    fn from_sorted(parent: GroupRef, elements: Vec<u32>) -> Result<Subgroup> {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        if !parent.order().is_multiple_of(elements.len()) {
            return Err(Error::internal("subgroup order does not divide |G|"));
        }
        let bits = Bitset::from_indices(parent.order(), elements.iter().map(|&e| e as usize));
        Ok(Subgroup {
            parent,
            elements,
            bits,
        })
    }

    pub fn trivial(parent: &GroupRef) -> Subgroup {
        Subgroup::from_sorted(parent.clone(), vec![0]).expect("trivial subgroup")
    }

    pub fn full(parent: &GroupRef) -> Subgroup {
        let elems = (0..parent.order() as u32).collect();
        Subgroup::from_sorted(parent.clone(), elems).expect("full subgroup")
    }

    /// Closure of the given elements; checks nothing about normality.
    pub fn generated(parent: &GroupRef, generators: &[usize]) -> Subgroup {
        let elems = closure(parent, generators.iter().map(|&x| x as u32));
        Subgroup::from_sorted(parent.clone(), elems).expect("closure is a subgroup")
    }

    pub fn parent(&self) -> &GroupRef {
        &self.parent
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn index(&self) -> usize {
        self.parent.order() / self.order()
    }

    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn bits(&self) -> &Bitset {
        &self.bits
    }

    pub fn contains(&self, x: usize) -> bool {
        self.bits.contains(x)
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn is_normal(&self) -> bool {
        let g = &self.parent;
        let gens = g.small_generating_set();
        self.elements
            .iter()
            .all(|&x| gens.iter().all(|&s| self.contains(g.conjugate(s, x as usize))))
    }

    pub fn is_central(&self) -> bool {
        let g = &self.parent;
        self.elements
            .iter()
            .all(|&z| (0..g.order()).all(|x| g.mul(z as usize, x) == g.mul(x, z as usize)))
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.parent;
        self.elements.iter().all(|&a| {
            self.elements
                .iter()
                .all(|&b| g.mul(a as usize, b as usize) == g.mul(b as usize, a as usize))
        })
    }

    pub fn is_elementary_abelian(&self) -> Option<u64> {
        if self.order() < 2 || !self.is_abelian() {
            return None;
        }
        let p = self.parent.element_order(self.elements[1] as usize);
        if !crate::families::is_prime(p as usize) {
            return None;
        }
        let ok = self
            .elements
            .iter()
            .skip(1)
            .all(|&x| self.parent.element_order(x as usize) == p);
        ok.then_some(p)
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        let elems: Vec<u32> = self
            .elements
            .iter()
            .copied()
            .filter(|&x| other.contains(x as usize))
            .collect();
        Subgroup::from_sorted(self.parent.clone(), elems).expect("intersection is a subgroup")
    }

    /// Subgroup generated by the union.
    pub fn join(&self, other: &Subgroup) -> Subgroup {
        let gens: Vec<usize> = self
            .elements
            .iter()
            .chain(other.elements.iter())
            .map(|&x| x as usize)
            .collect();
        Subgroup::generated(&self.parent, &gens)
    }
}

fn closure(g: &Group, seeds: impl IntoIterator<Item = u32>) -> Vec<u32> {
    let mut bits = Bitset::new(g.order());
    bits.insert(0);
    let mut gens: Vec<u32> = Vec::new();
    for s in seeds {
        if (!bits.contains(s as usize) || s == 0)
            && s != 0 {
                gens.push(s);
            }
    }
    gens.sort_unstable();
    gens.dedup();
    let mut elems = vec![0u32];
    let mut head = 0;
    while head < elems.len() {
        let a = elems[head] as usize;
        head += 1;
        for &s in &gens {
            let b = g.mul(a, s as usize) as u32;
            if !bits.contains(b as usize) {
                bits.insert(b as usize);
                elems.push(b);
            }
        }
    }
    elems.sort_unstable();
    elems
}

pub fn center(g: &GroupRef) -> Subgroup {
    let n = g.order();
    let elems: Vec<u32> = (0..n)
        .filter(|&z| (0..n).all(|x| g.mul(z, x) == g.mul(x, z)))
        .map(|z| z as u32)
        .collect();
    Subgroup::from_sorted(g.clone(), elems).expect("center is a subgroup")
}

/// Normal closure of the subgroup generated by `seeds`.
pub fn normal_closure(g: &GroupRef, seeds: &[usize]) -> Subgroup {
    let gens = g.small_generating_set();
    // close the seed set under conjugation first; the subgroup generated by a
    // conjugation-closed set is normal
    let mut conj_closed: Vec<u32> = Vec::new();
    let mut seen = Bitset::new(g.order());
    let mut stack: Vec<usize> = seeds.to_vec();
    while let Some(x) = stack.pop() {
        if seen.contains(x) {
            continue;
        }
        seen.insert(x);
        conj_closed.push(x as u32);
        for &s in &gens {
            stack.push(g.conjugate(s, x));
        }
    }
    let elems = closure(g, conj_closed);
    Subgroup::from_sorted(g.clone(), elems).expect("normal closure is a subgroup")
}

pub fn derived_subgroup(g: &GroupRef) -> Subgroup {
    let gens = g.small_generating_set();
    let mut comms: Vec<usize> = Vec::new();
    for &a in &gens {
        for &b in &gens {
            comms.push(g.commutator(a, b));
        }
    }
    normal_closure(g, &comms)
}

/// Central elements z with z^p = 1. Requires p to divide |G|.
pub fn omega1_center(g: &GroupRef, p: u64) -> Result<Subgroup> {
    if p == 0 || !(g.order() as u64).is_multiple_of(p) {
        return Err(Error::InvalidSpec(format!(
            "p = {p} does not divide |G| = {}",
            g.order()
        )));
    }
    let z = center(g);
    let elems: Vec<u32> = z
        .elements()
        .iter()
        .copied()
        .filter(|&x| g.pow(x as usize, p) == 0)
        .collect();
    Subgroup::from_sorted(g.clone(), elems)
}

/// All inclusion-minimal nontrivial normal subgroups, computed from normal
/// closures of class representatives. Empty for the trivial group.
pub fn minimal_normal_subgroups(g: &GroupRef, classes: &ClassesRef) -> Vec<Subgroup> {
    let mut candidates: Vec<Subgroup> = Vec::new();
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    for c in 1..classes.count() {
        let ncl = normal_closure(g, &[classes.representative(c)]);
        if seen.insert(ncl.elements().to_vec()) {
            candidates.push(ncl);
        }
    }
    let mut minimal: Vec<Subgroup> = Vec::new();
    'outer: for i in 0..candidates.len() {
        for j in 0..candidates.len() {
            if i != j
                && candidates[j].is_subgroup_of(&candidates[i])
                && candidates[j].order() < candidates[i].order()
            {
                continue 'outer;
            }
        }
        minimal.push(candidates[i].clone());
    }
    minimal.sort_by(|a, b| (a.order(), a.elements()).cmp(&(b.order(), b.elements())));
    minimal
}

/// Soc(G) split into the product of all nonabelian minimal normal subgroups
/// and a maximal direct sequence of abelian ones.
pub struct SocleDecomposition {
    pub minimals: Vec<Subgroup>,
    /// Product of all nonabelian minimal normal subgroups.
    pub nonabelian_part: Subgroup,
    /// The chosen abelian factors, greedy in canonical order.
    pub abelian_factors: Vec<Subgroup>,
    /// Orders of the abelian factors, nonincreasing.
    pub abelian_orders: Vec<u64>,
    pub socle: Subgroup,
}

impl SocleDecomposition {
    pub fn t(&self) -> usize {
        self.abelian_factors.len()
    }
}

pub fn socle_decomposition(g: &GroupRef, classes: &ClassesRef) -> Result<SocleDecomposition> {
    let minimals = minimal_normal_subgroups(g, classes);
    let mut t_part = Subgroup::trivial(g);
    for m in &minimals {
        if !m.is_abelian() {
            t_part = t_part.join(m);
        }
    }
    let mut running = t_part.clone();
    let mut abelian_factors: Vec<Subgroup> = Vec::new();
    for m in &minimals {
        if m.is_abelian() && m.intersection(&running).is_trivial() {
            running = running.join(m);
            abelian_factors.push(m.clone());
        }
    }
    // every minimal normal must now be inside the running product
    let socle = running;
    for m in &minimals {
        if !m.is_subgroup_of(&socle) {
            return Err(Error::internal("socle decomposition missed a minimal normal subgroup"));
        }
    }
    let product: u64 = abelian_factors
        .iter()
        .map(|a| a.order() as u64)
        .product::<u64>()
        * t_part.order() as u64;
    if product != socle.order() as u64 {
        return Err(Error::internal("socle decomposition is not direct"));
    }
    for a in &abelian_factors {
        if a.is_elementary_abelian().is_none() {
            return Err(Error::internal("abelian minimal normal subgroup is not elementary abelian"));
        }
    }
    let mut abelian_orders: Vec<u64> = abelian_factors.iter().map(|a| a.order() as u64).collect();
    abelian_orders.sort_unstable_by(|a, b| b.cmp(a));
    Ok(SocleDecomposition {
        minimals,
        nonabelian_part: t_part,
        abelian_factors,
        abelian_orders,
        socle,
    })
}

/// Quotient group on cosets, with coset labels derived from representatives.
pub fn quotient(g: &GroupRef, n: &Subgroup) -> Result<GroupRef> {
    Ok(quotient_with_map(g, n)?.0)
}

/// Quotient group plus the element -> coset index projection.
pub fn quotient_with_map(g: &GroupRef, n: &Subgroup) -> Result<(GroupRef, Vec<u32>)> {
    if !n.is_normal() {
        return Err(Error::NotNormal);
    }
    let order = g.order();
    let mut coset_of = vec![u32::MAX; order];
    let mut reps: Vec<usize> = Vec::new();
    for x in 0..order {
        if coset_of[x] != u32::MAX {
            continue;
        }
        let id = reps.len() as u32;
        reps.push(x);
        for &h in n.elements() {
            coset_of[g.mul(x, h as usize)] = id;
        }
    }
    let q = reps.len();
    let mut mul = vec![0u32; q * q];
    for (i, &a) in reps.iter().enumerate() {
        for (j, &b) in reps.iter().enumerate() {
            mul[i * q + j] = coset_of[g.mul(a, b)];
        }
    }
    let labels = reps.iter().map(|&r| format!("[{}]", g.label(r))).collect();
    let table = crate::families::RawTable {
        order: q,
        identity: 0,
        mul,
        labels,
    };
    let quot = crate::group::load_group(
        &crate::group::GroupSpec::Table { table },
        &crate::group::LoadLimits {
            max_order: order.max(1),
        },
    )?;
    Ok((quot, coset_of))
}

/// Invariant factors c_1 | c_2 | ... | c_d with product |G|, plus d(G).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianInvariants {
    pub divisors: Vec<u64>,
    pub rank: usize,
}

/// Invariant-factor decomposition of an abelian group. Errors on nonabelian
/// input; callers wanting d(G/G') must quotient first.
pub fn abelian_invariants(g: &GroupRef) -> Result<AbelianInvariants> {
    if !g.is_abelian() {
        return Err(Error::NotAbelian);
    }
    if g.order() == 1 {
        return Ok(AbelianInvariants {
            divisors: vec![],
            rank: 0,
        });
    }
    // per prime p: multiplicity of C_{p^i} from the sizes of {x : x^(p^i) = 1}
    let mut primes: Vec<u64> = Vec::new();
    let mut m = g.order() as u64;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            primes.push(p);
            while m.is_multiple_of(p) {
                m /= p;
            }
        }
        p += 1;
    }
    if m > 1 {
        primes.push(m);
    }
    // partitions[p] = exponents of the cyclic p-power factors, descending
    let mut partitions: Vec<Vec<u32>> = Vec::new();
    for &p in &primes {
        let log_omega = |i: u32| -> u32 {
            let pk = p.pow(i);
            let count = (0..g.order()).filter(|&x| g.pow(x, pk) == 0).count() as u64;
            let mut l = 0;
            let mut c = count;
            while c > 1 {
                c /= p;
                l += 1;
            }
            l
        };
        let mut parts: Vec<u32> = Vec::new();
        let mut i = 1;
        let mut prev = 0;
        loop {
            let s = log_omega(i);
            if s == prev {
                break;
            }
            // number of factors of order >= p^i
            let count_ge = s - prev;
            parts.push(count_ge);
            prev = s;
            i += 1;
        }
        // parts[i] = #factors with exponent >= i+1; convert to exponent list
        let rank = parts.first().copied().unwrap_or(0) as usize;
        let mut exps = vec![0u32; rank];
        for (i, &count_ge) in parts.iter().enumerate() {
            for e in exps.iter_mut().take(count_ge as usize) {
                *e = (i + 1) as u32;
            }
        }
        partitions.push(exps);
    }
    let rank = partitions.iter().map(|v| v.len()).max().unwrap_or(0);
    // divisors from largest: k-th largest = product over p of p^(k-th largest exponent)
    let mut divisors_desc: Vec<u64> = Vec::new();
    for k in 0..rank {
        let mut d = 1u64;
        for (pi, exps) in partitions.iter().enumerate() {
            if let Some(&e) = exps.get(k) {
                d *= primes[pi].pow(e);
            }
        }
        divisors_desc.push(d);
    }
    divisors_desc.reverse();
    let product: u64 = divisors_desc.iter().product();
    if product != g.order() as u64 {
        return Err(Error::internal("abelian invariants do not multiply to |G|"));
    }
    for w in divisors_desc.windows(2) {
        if w[1] % w[0] != 0 {
            return Err(Error::internal("abelian invariants do not form a divisor chain"));
        }
    }
    Ok(AbelianInvariants {
        divisors: divisors_desc,
        rank,
    })
}

/// Rank (minimal generator count) of the center.
pub fn center_rank(g: &GroupRef) -> Result<usize> {
    let z = center(g);
    if z.is_trivial() {
        return Ok(0);
    }
    let zg = subgroup_as_group(&z)?;
    Ok(abelian_invariants(&zg)?.rank)
}

/// Reifies a subgroup as a standalone group (its own multiplication table).
pub fn subgroup_as_group(s: &Subgroup) -> Result<GroupRef> {
    let g = s.parent();
    let n = s.order();
    let index_of: std::collections::HashMap<u32, usize> = s
        .elements()
        .iter()
        .enumerate()
        .map(|(i, &x)| (x, i))
        .collect();
    let mut mul = vec![0u32; n * n];
    for (i, &a) in s.elements().iter().enumerate() {
        for (j, &b) in s.elements().iter().enumerate() {
            mul[i * n + j] = index_of[&(g.mul(a as usize, b as usize) as u32)] as u32;
        }
    }
    let labels = s.elements().iter().map(|&x| g.label(x as usize).to_string()).collect();
    let identity = index_of[&0];
    crate::group::load_group(
        &crate::group::GroupSpec::Table {
            table: crate::families::RawTable {
                order: n,
                identity,
                mul,
                labels,
            },
        },
        &crate::group::LoadLimits { max_order: n },
    )
}

/// Every normal subgroup, as joins of conjugacy-class closures. Includes the
/// trivial subgroup and G itself. Deterministic order by (order, elements).
pub fn normal_subgroups(g: &GroupRef, classes: &ClassesRef) -> Vec<Subgroup> {
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    let trivial = Subgroup::trivial(g);
    seen.insert(trivial.elements().to_vec());
    // store generating seeds alongside each subgroup to keep closures cheap
    let mut queue: Vec<(Subgroup, Vec<usize>)> = vec![(trivial, vec![])];
    let mut head = 0;
    while head < queue.len() {
        let (current, seeds) = queue[head].clone();
        head += 1;
        for c in 1..classes.count() {
            let rep = classes.representative(c);
            if current.contains(rep) {
                continue;
            }
            let mut new_seeds = seeds.clone();
            new_seeds.push(rep);
            let bigger = normal_closure(g, &new_seeds);
            if seen.insert(bigger.elements().to_vec()) {
                queue.push((bigger, new_seeds));
            }
        }
    }
    let mut result: Vec<Subgroup> = queue.into_iter().map(|(s, _)| s).collect();
    result.sort_by(|a, b| (a.order(), a.elements()).cmp(&(b.order(), b.elements())));
    result
}

/// Nilpotency class via the upper central series; None if not nilpotent.
pub fn nilpotency_class(g: &GroupRef) -> Option<usize> {
    if g.order() == 1 {
        return Some(0);
    }
    let gens = g.small_generating_set();
    let mut z = center(g);
    let mut class = 1;
    loop {
        if z.order() == g.order() {
            return Some(class);
        }
        let next: Vec<u32> = (0..g.order())
            .filter(|&x| gens.iter().all(|&s| z.contains(g.commutator(x, s))))
            .map(|x| x as u32)
            .collect();
        if next.len() == z.order() {
            return None;
        }
        z = Subgroup::from_sorted(g.clone(), next).expect("upper central series member");
        class += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::conjugacy_classes;
    use crate::families::FamilySpec;
    use crate::group::{load_group, parse_spec, GroupSpec, LoadLimits};

    fn family(f: FamilySpec) -> GroupRef {
        load_group(&GroupSpec::Family(f), &LoadLimits::default()).unwrap()
    }

    fn s3() -> GroupRef {
        let spec =
            parse_spec(r#"{"kind":"perm","degree":3,"generators":[[[0,1]],[[0,1,2]]]}"#).unwrap();
        load_group(&spec, &LoadLimits::default()).unwrap()
    }

    #[test]
    fn center_of_q8_has_order_2() {
        let g = family(FamilySpec::GeneralizedQuaternion { order: 8 });
        assert_eq!(center(&g).order(), 2);
    }

    #[test]
    fn derived_subgroup_of_s3_is_a3() {
        let g = s3();
        let d = derived_subgroup(&g);
        assert_eq!(d.order(), 3);
        assert!(d.is_normal());
    }

    #[test]
    fn omega1_of_c4() {
        let g = family(FamilySpec::Cyclic { n: 4 });
        let o = omega1_center(&g, 2).unwrap();
        assert_eq!(o.order(), 2);
        assert!(omega1_center(&g, 3).is_err());
    }

    #[test]
    fn minimal_normals_of_klein_four() {
        let g = family(FamilySpec::Elementary { p: 2, r: 2 });
        let cd = conjugacy_classes(&g).unwrap();
        let mins = minimal_normal_subgroups(&g, &cd);
        assert_eq!(mins.len(), 3);
        assert!(mins.iter().all(|m| m.order() == 2));
    }

    #[test]
    fn q8_has_unique_minimal_normal() {
        let g = family(FamilySpec::GeneralizedQuaternion { order: 8 });
        let cd = conjugacy_classes(&g).unwrap();
        let mins = minimal_normal_subgroups(&g, &cd);
        assert_eq!(mins.len(), 1);
        assert_eq!(mins[0].order(), 2);
        assert!(mins[0].is_central());
    }

    #[test]
    fn s3_has_unique_minimal_normal_a3() {
        let g = s3();
        let cd = conjugacy_classes(&g).unwrap();
        let mins = minimal_normal_subgroups(&g, &cd);
        assert_eq!(mins.len(), 1);
        assert_eq!(mins[0].order(), 3);
    }

    #[test]
    fn socle_of_elementary_2_3() {
        let g = family(FamilySpec::Elementary { p: 2, r: 3 });
        let cd = conjugacy_classes(&g).unwrap();
        let soc = socle_decomposition(&g, &cd).unwrap();
        assert_eq!(soc.t(), 3);
        assert_eq!(soc.abelian_orders, vec![2, 2, 2]);
        assert!(soc.nonabelian_part.is_trivial());
        assert_eq!(soc.socle.order(), 8);
    }

    #[test]
    fn socle_of_a5_is_itself() {
        let g = family(FamilySpec::Alternating { m: 5 });
        let cd = conjugacy_classes(&g).unwrap();
        let soc = socle_decomposition(&g, &cd).unwrap();
        assert_eq!(soc.t(), 0);
        assert_eq!(soc.nonabelian_part.order(), 60);
    }

    #[test]
    fn socle_of_s3() {
        let g = s3();
        let cd = conjugacy_classes(&g).unwrap();
        let soc = socle_decomposition(&g, &cd).unwrap();
        assert_eq!(soc.t(), 1);
        assert_eq!(soc.abelian_orders, vec![3]);
        assert!(soc.nonabelian_part.is_trivial());
    }

    #[test]
    fn quotient_q8_by_center_is_klein() {
        let g = family(FamilySpec::GeneralizedQuaternion { order: 8 });
        let z = center(&g);
        let q = quotient(&g, &z).unwrap();
        assert_eq!(q.order(), 4);
        // every nonidentity element has order 2
        assert!((1..4).all(|x| q.element_order(x) == 2));
    }

    #[test]
    fn quotient_s3_by_a3_is_c2() {
        let g = s3();
        let a3 = derived_subgroup(&g);
        let q = quotient(&g, &a3).unwrap();
        assert_eq!(q.order(), 2);
    }

    #[test]
    fn quotient_by_full_group_is_trivial() {
        let g = s3();
        let q = quotient(&g, &Subgroup::full(&g)).unwrap();
        assert_eq!(q.order(), 1);
    }

    #[test]
    fn quotient_by_trivial_subgroup_reproduces_the_table() {
        let g = s3();
        let q = quotient(&g, &Subgroup::trivial(&g)).unwrap();
        assert_eq!(q.order(), g.order());
        for a in 0..g.order() {
            for b in 0..g.order() {
                assert_eq!(q.mul(a, b), g.mul(a, b));
            }
        }
    }

    #[test]
    fn quotient_by_non_normal_errors() {
        let g = s3();
        // a transposition generates a non-normal C2
        let t = (1..6).find(|&x| g.element_order(x) == 2).unwrap();
        let h = Subgroup::generated(&g, &[t]);
        assert!(matches!(quotient(&g, &h), Err(Error::NotNormal)));
    }

    #[test]
    fn abelian_invariants_examples() {
        let c2c4 = family(FamilySpec::DirectProduct(vec![
            FamilySpec::Cyclic { n: 2 },
            FamilySpec::Cyclic { n: 4 },
        ]));
        let inv = abelian_invariants(&c2c4).unwrap();
        assert_eq!(inv.divisors, vec![2, 4]);
        assert_eq!(inv.rank, 2);

        let c6 = family(FamilySpec::Cyclic { n: 6 });
        let inv = abelian_invariants(&c6).unwrap();
        assert_eq!(inv.divisors, vec![6]);
        assert_eq!(inv.rank, 1);

        let c2cubed = family(FamilySpec::Elementary { p: 2, r: 3 });
        let inv = abelian_invariants(&c2cubed).unwrap();
        assert_eq!(inv.divisors, vec![2, 2, 2]);
        assert_eq!(inv.rank, 3);

        assert!(abelian_invariants(&s3()).is_err());
    }

    #[test]
    fn normal_subgroup_enumeration_s3() {
        let g = s3();
        let cd = conjugacy_classes(&g).unwrap();
        let ns = normal_subgroups(&g, &cd);
        let orders: Vec<usize> = ns.iter().map(|n| n.order()).collect();
        assert_eq!(orders, vec![1, 3, 6]);
    }

    #[test]
    fn normal_subgroup_enumeration_counts_subspaces() {
        // all subgroups of C2^4 are normal: 1 + 15 + 35 + 15 + 1 = 67
        let g = family(FamilySpec::Elementary { p: 2, r: 4 });
        let cd = conjugacy_classes(&g).unwrap();
        assert_eq!(normal_subgroups(&g, &cd).len(), 67);
    }

    #[test]
    fn nilpotency_classes() {
        assert_eq!(nilpotency_class(&family(FamilySpec::Cyclic { n: 8 })), Some(1));
        assert_eq!(
            nilpotency_class(&family(FamilySpec::Dihedral { n: 4 })),
            Some(2)
        );
        assert_eq!(
            nilpotency_class(&family(FamilySpec::Dihedral { n: 8 })),
            Some(3)
        );
        assert_eq!(nilpotency_class(&s3()), None);
    }

    #[test]
    fn p_group_socle_equals_omega1_center() {
        for f in [
            FamilySpec::GeneralizedQuaternion { order: 16 },
            FamilySpec::Dihedral { n: 8 },
            FamilySpec::Heisenberg { q: 4 },
            FamilySpec::Extraspecial { p: 3, n: 3, plus: false },
        ] {
            let g = family(f);
            let (p, _) = g.p_group().unwrap();
            let cd = conjugacy_classes(&g).unwrap();
            let soc = socle_decomposition(&g, &cd).unwrap();
            let omega = omega1_center(&g, p).unwrap();
            assert_eq!(soc.socle.elements(), omega.elements());
        }
    }
}
