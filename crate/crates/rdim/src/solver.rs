//! Exact computation of the minimal faithful character degree.
//!
//! A set of irreducible characters has trivial joint kernel exactly when
//! every minimal normal subgroup escapes some kernel, so the minimization
//! reduces to a weighted set cover over the minimal normal subgroups. The
//! solver is exact branch and bound; an independent brute-force search over
//! kernel intersections double-checks it on small instances, and abelian and
//! p-group fast paths give two more routes to the same number.

use crate::chartab::{elementary_abelian_basis, CharTableRef};
use crate::error::{Error, Result};
use crate::group::GroupRef;
use crate::radicals::SqrtSum;
use crate::structure::{abelian_invariants, omega1_center, SocleDecomposition, Subgroup};
use crate::util::{Bitset, Frac};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;

/// Weighted set-cover form of the faithfulness constraint.
pub struct CoverInstance {
    universe: Vec<Subgroup>,
    row_weight: Vec<u64>,
    row_covered: Vec<Bitset>,
    row_prunable: Vec<bool>,
    row_kernel_elements: Vec<Bitset>,
    table_hash: String,
}

impl CoverInstance {
    pub fn universe_size(&self) -> usize {
        self.universe.len()
    }

    pub fn rows(&self) -> usize {
        self.row_weight.len()
    }

    pub fn weight(&self, row: usize) -> u64 {
        self.row_weight[row]
    }

    pub fn covered(&self, row: usize) -> &Bitset {
        &self.row_covered[row]
    }

    pub fn is_prunable(&self, row: usize) -> bool {
        self.row_prunable[row]
    }
}

/// Builds the cover instance: row r covers minimal normal M iff M is not
/// inside Ker r.
pub fn build_cover(table: &CharTableRef, minimals: &[Subgroup]) -> Result<CoverInstance> {
    let u = minimals.len();
    let k = table.rows().len();
    let mut row_covered = Vec::with_capacity(k);
    let mut row_kernel_elements = Vec::with_capacity(k);
    let mut row_weight = Vec::with_capacity(k);
    for r in 0..k {
        let kernel = table.kernel_subgroup(r)?;
        let mut covered = Bitset::new(u);
        for (m, minimal) in minimals.iter().enumerate() {
            if !minimal.bits().is_subset(kernel.bits()) {
                covered.insert(m);
            }
        }
        row_covered.push(covered);
        row_kernel_elements.push(kernel.bits().clone());
        row_weight.push(table.degree(r));
    }
    if !row_covered[0].is_empty() {
        return Err(Error::internal("principal row covers a minimal normal subgroup"));
    }
    let mut all = Bitset::new(u);
    for c in &row_covered {
        all.union_with(c);
    }
    if all.count() != u {
        return Err(Error::internal("some minimal normal subgroup is covered by no row"));
    }
    // dominance: r is prunable when another row covers at least as much for
    // at most the same weight
    let mut row_prunable = vec![false; k];
    for r in 0..k {
        for s in 0..k {
            if r == s || !row_covered[r].is_subset(&row_covered[s]) {
                continue;
            }
            let strictly_smaller = row_covered[r] != row_covered[s];
            if row_weight[s] < row_weight[r]
                || (row_weight[s] == row_weight[r] && (strictly_smaller || s < r))
            {
                row_prunable[r] = true;
                break;
            }
        }
    }
    Ok(CoverInstance {
        universe: minimals.to_vec(),
        row_weight,
        row_covered,
        row_prunable,
        row_kernel_elements,
        table_hash: table.table_hash(),
    })
}

#[derive(Clone, Copy, Debug)]
pub struct SolverConfig {
    pub node_limit: u64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            node_limit: 10_000_000,
        }
    }
}

/// Optimal solution with its faithfulness witness.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RdimCertificate {
    pub rows: Vec<usize>,
    pub degrees: Vec<u64>,
    pub total_degree: u64,
    /// For each minimal normal subgroup, a chosen row excluding it.
    pub witness: Vec<(usize, usize)>,
    pub table_hash: String,
}

impl RdimCertificate {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("certificate serialization cannot fail");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<RdimCertificate> {
        Ok(serde_json::from_str(text)?)
    }
}

struct SearchState<'a> {
    instance: &'a CoverInstance,
    full: Bitset,
    best_weight: u64,
    best_rows: Vec<usize>,
    nodes: u64,
    node_limit: u64,
}

/// Exact minimum-weight cover by branch and bound with a greedy seed,
/// fractional lower bound, and choose/forbid branching on the element with
/// the fewest remaining covering rows.
pub fn solve_rdim(instance: &CoverInstance, cfg: &SolverConfig) -> Result<RdimCertificate> {
    let u = instance.universe_size();
    if u == 0 {
        return Ok(RdimCertificate {
            rows: vec![],
            degrees: vec![],
            total_degree: 0,
            witness: vec![],
            table_hash: instance.table_hash.clone(),
        });
    }
    let full = Bitset::from_indices(u, 0..u);
    let (seed_rows, seed_weight) = greedy_cover(instance, &full)
        .ok_or_else(|| Error::internal("greedy cover failed on a feasible instance"))?;
    let mut state = SearchState {
        instance,
        full: full.clone(),
        best_weight: seed_weight,
        best_rows: seed_rows,
        nodes: 0,
        node_limit: cfg.node_limit,
    };
    let mut forbidden = vec![false; instance.rows()];
    // the principal row and dominated rows never enter the search
    for r in 0..instance.rows() {
        if instance.is_prunable(r) || instance.covered(r).is_empty() {
            forbidden[r] = true;
        }
    }
    branch(&mut state, &Bitset::new(u), &mut forbidden, &mut Vec::new(), 0)?;
    let mut rows = state.best_rows;
    rows.sort_unstable();
    let degrees: Vec<u64> = rows.iter().map(|&r| instance.weight(r)).collect();
    let total: u64 = degrees.iter().sum();
    let witness: Vec<(usize, usize)> = (0..u)
        .map(|m| {
            let row = rows
                .iter()
                .copied()
                .find(|&r| instance.covered(r).contains(m))
                .expect("verified cover");
            (m, row)
        })
        .collect();
    let cert = RdimCertificate {
        rows,
        degrees,
        total_degree: total,
        witness,
        table_hash: instance.table_hash.clone(),
    };
    verify_certificate(instance, &cert)?;
    Ok(cert)
}

fn branch(
    state: &mut SearchState,
    covered: &Bitset,
    forbidden: &mut Vec<bool>,
    chosen: &mut Vec<usize>,
    weight: u64,
) -> Result<()> {
    state.nodes += 1;
    if state.nodes > state.node_limit {
        return Err(Error::NodeLimit {
            limit: state.node_limit,
            explored: state.nodes,
        });
    }
    if weight >= state.best_weight {
        return Ok(());
    }
    if covered == &state.full {
        state.best_weight = weight;
        state.best_rows = chosen.clone();
        return Ok(());
    }
    let instance = state.instance;
    // pivot: uncovered element with fewest available covering rows; also
    // accumulate the fractional lower bound over all uncovered elements
    let mut pivot: Option<(usize, usize)> = None;
    let mut lb = Frac::ZERO;
    // weight per newly covered element, reused across the uncovered scan
    let ratios: Vec<Option<Frac>> = (0..instance.rows())
        .map(|r| {
            if forbidden[r] {
                return None;
            }
            let new = instance.covered(r).count_and_not(covered);
            Some(Frac::new(instance.weight(r) as u128, new.max(1) as u128))
        })
        .collect();
    for m in 0..instance.universe_size() {
        if covered.contains(m) {
            continue;
        }
        let mut count = 0;
        let mut cheapest: Option<Frac> = None;
        for r in 0..instance.rows() {
            if forbidden[r] || !instance.covered(r).contains(m) {
                continue;
            }
            count += 1;
            let ratio = ratios[r].expect("not forbidden");
            cheapest = Some(match cheapest {
                None => ratio,
                Some(c) => {
                    if ratio.num * c.den < c.num * ratio.den {
                        ratio
                    } else {
                        c
                    }
                }
            });
        }
        if count == 0 {
            return Ok(()); // dead branch: element can no longer be covered
        }
        lb = lb + cheapest.expect("count > 0");
        if pivot.map(|(_, c)| count < c).unwrap_or(true) {
            pivot = Some((m, count));
        }
    }
    if lb.ge_int((state.best_weight - weight) as u128) {
        return Ok(());
    }
    let (pivot_elem, _) = pivot.expect("uncovered element exists");
    let mut candidates: Vec<usize> = (0..instance.rows())
        .filter(|&r| !forbidden[r] && instance.covered(r).contains(pivot_elem))
        .collect();
    candidates.sort_by_key(|&r| (instance.weight(r), r));
    let mut locally_forbidden = Vec::new();
    for r in candidates {
        let mut next_covered = covered.clone();
        next_covered.union_with(instance.covered(r));
        chosen.push(r);
        forbidden[r] = true;
        locally_forbidden.push(r);
        branch(state, &next_covered, forbidden, chosen, weight + instance.weight(r))?;
        chosen.pop();
        // r stays forbidden for the remaining siblings: subsets are visited once
    }
    for r in locally_forbidden {
        forbidden[r] = false;
    }
    Ok(())
}

fn greedy_cover(instance: &CoverInstance, full: &Bitset) -> Option<(Vec<usize>, u64)> {
    let mut covered = Bitset::new(full.len());
    let mut rows = Vec::new();
    let mut weight = 0u64;
    while &covered != full {
        let mut best: Option<(usize, u64, usize)> = None; // (row, w, new)
        for r in 0..instance.rows() {
            if instance.is_prunable(r) || rows.contains(&r) {
                continue;
            }
            let new = instance.covered(r).count_and_not(&covered);
            if new == 0 {
                continue;
            }
            let better = match best {
                None => true,
                Some((_, bw, bn)) => {
                    // minimize weight per newly covered element
                    (instance.weight(r) as u128) * (bn as u128) < (bw as u128) * (new as u128)
                }
            };
            if better {
                best = Some((r, instance.weight(r), new));
            }
        }
        let (r, w, _) = best?;
        rows.push(r);
        weight += w;
        covered.union_with(instance.covered(r));
    }
    Some((rows, weight))
}

/// Checks a certificate directly: the joint kernel of the chosen rows is the
/// identity, every chosen row covers something (the socle is in no kernel),
/// and the weights add up.
pub fn verify_certificate(instance: &CoverInstance, cert: &RdimCertificate) -> Result<()> {
    if cert.table_hash != instance.table_hash {
        return Err(Error::CacheMismatch);
    }
    let order = instance
        .row_kernel_elements
        .first()
        .map(|b| b.len())
        .unwrap_or(1);
    let mut joint = Bitset::from_indices(order, 0..order);
    for &r in &cert.rows {
        joint.intersect_with(&instance.row_kernel_elements[r]);
        if instance.covered(r).is_empty() {
            return Err(Error::internal("certificate row covers no minimal normal subgroup"));
        }
    }
    if instance.universe_size() > 0 && (joint.count() != 1 || !joint.contains(0)) {
        return Err(Error::internal("certificate kernel intersection is not trivial"));
    }
    let total: u64 = cert.rows.iter().map(|&r| instance.weight(r)).sum();
    if total != cert.total_degree || cert.degrees.iter().sum::<u64>() != cert.total_degree {
        return Err(Error::internal("certificate degree total mismatch"));
    }
    let mut covered = Bitset::new(instance.universe_size());
    for &r in &cert.rows {
        covered.union_with(instance.covered(r));
    }
    if covered.count() != instance.universe_size() {
        return Err(Error::internal("certificate does not cover the universe"));
    }
    for &(m, r) in &cert.witness {
        if !instance.covered(r).contains(m) {
            return Err(Error::internal("certificate witness row does not exclude its subgroup"));
        }
    }
    Ok(())
}

/// Independent oracle: exhaustive search over row subsets using kernel
/// intersections at the class level, with only exhaustiveness-preserving
/// pruning (weight bound, non-shrinking rows, unreachable-kernel suffix).
pub fn brute_force_rdim(table: &CharTableRef, max_rows: usize) -> Result<u64> {
    let k = table.rows().len();
    if k > max_rows {
        return Err(Error::OracleSkipped(format!(
            "{k} rows exceed the brute-force guard of {max_rows}"
        )));
    }
    if table.group().order() == 1 {
        return Ok(0);
    }
    let classes = table.classes().count();
    // heaviest rows first: once only light rows remain, the suffix
    // intersection goes stale quickly and whole subtrees drop out
    let mut order: Vec<usize> = (1..k).collect();
    order.sort_by_key(|&r| (std::cmp::Reverse(table.degree(r)), r));
    let kernels: Vec<Bitset> = order
        .iter()
        .map(|&r| Bitset::from_indices(classes, table.kernel_classes(r)))
        .collect();
    let weights: Vec<u64> = order.iter().map(|&r| table.degree(r)).collect();
    let rows = kernels.len();
    // greedy seed on class masks only
    let mut best = {
        let mut mask = Bitset::from_indices(classes, 0..classes);
        let mut total = 0u64;
        while mask.count() > 1 {
            let mut pick: Option<(usize, usize)> = None; // (row, removed count)
            for r in 0..rows {
                let removed = mask.count_and_not(&kernels[r]);
                if removed == 0 {
                    continue;
                }
                let better = match pick {
                    None => true,
                    Some((pr, prem)) => {
                        (weights[r] as u128) * (prem as u128) < (weights[pr] as u128) * (removed as u128)
                    }
                };
                if better {
                    pick = Some((r, removed));
                }
            }
            let (r, _) = pick.ok_or_else(|| Error::internal("no faithful row set exists"))?;
            mask.intersect_with(&kernels[r]);
            total += weights[r];
        }
        total
    };
    // suffix data: the furthest any extension from row r can shrink the
    // kernel, and the lightest weight still ahead
    let mut suffix = vec![Bitset::from_indices(classes, 0..classes); rows + 1];
    let mut min_weight_from = vec![u64::MAX; rows + 1];
    for r in (0..rows).rev() {
        let mut s = suffix[r + 1].clone();
        s.intersect_with(&kernels[r]);
        suffix[r] = s;
        min_weight_from[r] = min_weight_from[r + 1].min(weights[r]);
    }
    struct Ctx<'a> {
        kernels: &'a [Bitset],
        weights: &'a [u64],
        suffix: &'a [Bitset],
        min_weight_from: &'a [u64],
    }
    fn dfs(ctx: &Ctx, mask: &Bitset, mask_count: usize, from: usize, weight: u64, best: &mut u64) {
        for r in from..ctx.kernels.len() {
            if weight + ctx.min_weight_from[r] >= *best {
                break; // weights ahead only get lighter; none fits the budget
            }
            if weight + ctx.weights[r] >= *best {
                continue;
            }
            if mask.count_and(&ctx.suffix[r]) > 1 {
                break; // even taking every remaining row leaves a kernel
            }
            let shrunk = mask.count_and(&ctx.kernels[r]);
            if shrunk == mask_count {
                continue; // redundant row: any superset does better without it
            }
            if shrunk == 1 {
                *best = weight + ctx.weights[r];
                continue;
            }
            let mut next = mask.clone();
            next.intersect_with(&ctx.kernels[r]);
            dfs(ctx, &next, shrunk, r + 1, weight + ctx.weights[r], best);
        }
    }
    let all = Bitset::from_indices(classes, 0..classes);
    let ctx = Ctx {
        kernels: &kernels,
        weights: &weights,
        suffix: &suffix,
        min_weight_from: &min_weight_from,
    };
    dfs(&ctx, &all, classes, 0, 0, &mut best);
    Ok(best)
}

/// rdim of an abelian group is its minimal generator count.
pub fn rdim_abelian(g: &GroupRef) -> Result<u64> {
    Ok(abelian_invariants(g)?.rank as u64)
}

/// p-group fast path result.
#[derive(Clone, Debug)]
pub struct PGroupRdim {
    pub value: u64,
    /// Chosen basis of nonprincipal central characters, as exponent vectors.
    pub basis: Vec<Vec<u64>>,
    /// Minimum degree over the rows lying over each nonprincipal character.
    pub min_degrees: Vec<(Vec<u64>, u64)>,
}

/// rdim of a p-group: minimum over bases of the characters of the socle of
/// the summed minimal degrees, found by the matroid greedy on the weighted
/// vectors of (Z/p)^r.
pub fn rdim_pgroup(g: &GroupRef, table: &CharTableRef) -> Result<PGroupRdim> {
    let (p, _) = g.p_group().ok_or(Error::NotPGroup)?;
    let a = omega1_center(g, p)?;
    let basis_elems = elementary_abelian_basis(&a)?;
    let r = basis_elems.len();
    let mut min_deg: std::collections::BTreeMap<Vec<u64>, u64> = std::collections::BTreeMap::new();
    for row in 0..table.rows().len() {
        let lambda = table.restrict_to_central(row, &a)?;
        let vec = lambda.exponent_vector(&basis_elems, p)?;
        if vec.iter().all(|&v| v == 0) {
            continue;
        }
        let deg = table.degree(row);
        min_deg
            .entry(vec)
            .and_modify(|d| *d = (*d).min(deg))
            .or_insert(deg);
    }
    let expected = (p as usize).pow(r as u32) - 1;
    if min_deg.len() != expected {
        return Err(Error::internal(format!(
            "{} of {expected} nonprincipal socle characters appear under a row",
            min_deg.len()
        )));
    }
    let mut order: Vec<(&Vec<u64>, &u64)> = min_deg.iter().collect();
    order.sort_by(|a, b| (a.1, a.0).cmp(&(b.1, b.0)));
    let mut echelon: Vec<Vec<u64>> = Vec::new();
    let mut basis = Vec::new();
    let mut value = 0u64;
    for (vec, &deg) in order {
        if independent_mod_p(&echelon, vec, p) {
            echelon.push(reduce_mod_p(&echelon, vec, p));
            basis.push(vec.clone());
            value += deg;
            if basis.len() == r {
                break;
            }
        }
    }
    if basis.len() != r {
        return Err(Error::internal("matroid greedy failed to complete a basis"));
    }
    Ok(PGroupRdim {
        value,
        basis,
        min_degrees: min_deg.into_iter().collect(),
    })
}

/// Exhaustive minimum over all bases; test oracle for the greedy, guarded to
/// small ranks.
pub fn rdim_pgroup_exhaustive(g: &GroupRef, table: &CharTableRef) -> Result<u64> {
    let (p, _) = g.p_group().ok_or(Error::NotPGroup)?;
    let a = omega1_center(g, p)?;
    let basis_elems = elementary_abelian_basis(&a)?;
    let r = basis_elems.len();
    if r > 4 {
        return Err(Error::OracleSkipped(format!(
            "rank {r} exceeds the exhaustive basis guard of 4"
        )));
    }
    let mut min_deg: std::collections::BTreeMap<Vec<u64>, u64> = std::collections::BTreeMap::new();
    for row in 0..table.rows().len() {
        let lambda = table.restrict_to_central(row, &a)?;
        let vec = lambda.exponent_vector(&basis_elems, p)?;
        if vec.iter().all(|&v| v == 0) {
            continue;
        }
        let deg = table.degree(row);
        min_deg
            .entry(vec)
            .and_modify(|d| *d = (*d).min(deg))
            .or_insert(deg);
    }
    let vectors: Vec<(Vec<u64>, u64)> = min_deg.into_iter().collect();
    #[allow(clippy::too_many_arguments)]
    fn rec(
        vectors: &[(Vec<u64>, u64)],
        echelon: &mut Vec<Vec<u64>>,
        chosen: usize,
        weight: u64,
        r: usize,
        p: u64,
        from: usize,
        best: &mut u64,
    ) {
        if chosen == r {
            *best = (*best).min(weight);
            return;
        }
        for i in from..vectors.len() {
            let (v, w) = &vectors[i];
            if independent_mod_p(echelon, v, p) {
                echelon.push(reduce_mod_p(echelon, v, p));
                rec(vectors, echelon, chosen + 1, weight + w, r, p, i + 1, best);
                echelon.pop();
            }
        }
    }
    let mut best = u64::MAX;
    rec(&vectors, &mut Vec::new(), 0, 0, r, p, 0, &mut best);
    if best == u64::MAX {
        return Err(Error::internal("no basis found in exhaustive enumeration"));
    }
    Ok(best)
}

fn reduce_mod_p(echelon: &[Vec<u64>], v: &[u64], p: u64) -> Vec<u64> {
    let mut v = v.to_vec();
    for row in echelon {
        let pivot = row.iter().position(|&x| x != 0).expect("echelon rows are nonzero");
        if v[pivot] != 0 {
            let factor = v[pivot] * mod_inv(row[pivot], p) % p;
            for (x, &rxi) in v.iter_mut().zip(row) {
                *x = (*x + (p - factor * rxi % p)) % p;
            }
        }
    }
    v
}

fn independent_mod_p(echelon: &[Vec<u64>], v: &[u64], p: u64) -> bool {
    reduce_mod_p(echelon, v, p).iter().any(|&x| x != 0)
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // p is prime
    let mut result = 1u64;
    let mut base = a % p;
    let mut exp = p - 2;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    result
}

/// Constructive upper bound from the socle decomposition: one row per
/// abelian factor, each containing the complementary product in its kernel
/// and meeting the nonabelian part trivially.
pub fn upper_bound_socle(
    table: &CharTableRef,
    soc: &SocleDecomposition,
) -> Result<(u64, Vec<usize>)> {
    let g = table.group();
    let t = soc.t();
    if t == 0 {
        if g.order() == 1 {
            return Ok((0, vec![]));
        }
        let row = has_faithful_irreducible(table)
            .ok_or_else(|| Error::internal("socle equals its nonabelian part but no faithful row exists"))?;
        return Ok((table.degree(row), vec![row]));
    }
    let kernels: Vec<Subgroup> = (0..table.rows().len())
        .map(|r| table.kernel_subgroup(r))
        .collect::<Result<_>>()?;
    let t_bits = soc.nonabelian_part.bits();
    let mut chosen = Vec::with_capacity(t);
    let mut bound = 0u64;
    for i in 0..t {
        let mut complement = Subgroup::trivial(g);
        for (j, aj) in soc.abelian_factors.iter().enumerate() {
            if j != i {
                complement = complement.join(aj);
            }
        }
        let ai = &soc.abelian_factors[i];
        let pick = (0..table.rows().len())
            .filter(|&r| {
                let ker = &kernels[r];
                complement.bits().is_subset(ker.bits())
                    && !ai.bits().is_subset(ker.bits())
                    && {
                        let mut meet = ker.bits().clone();
                        meet.intersect_with(t_bits);
                        meet.count() == 1
                    }
            })
            .min_by_key(|&r| (table.degree(r), r))
            .ok_or_else(|| Error::internal("no row realizes the socle-factor kernel pattern"))?;
        chosen.push(pick);
        bound += table.degree(pick);
    }
    // the joint kernel must be trivial
    let order = g.order();
    let mut joint = Bitset::from_indices(order, 0..order);
    for &r in &chosen {
        joint.intersect_with(kernels[r].bits());
    }
    if joint.count() != 1 {
        return Err(Error::internal("socle upper-bound rows do not intersect trivially"));
    }
    // strict inequality: bound < sqrt|G| * sum over j of prod_{k != j} a_k^(-1/2),
    // in cleared form bound * sqrt(prod a) < sum of sqrt(|G| * a_j)
    let prod: u64 = soc.abelian_orders.iter().product();
    let mut cmp = SqrtSum::zero();
    cmp.add_term(bound as i64, prod);
    for &aj in &soc.abelian_orders {
        cmp.add_term(-1, g.order() as u64 * aj);
    }
    if cmp.sign() != Ordering::Less {
        return Err(Error::internal("socle bound violates the strict product inequality"));
    }
    Ok((bound, chosen))
}

/// The minimal-degree row with trivial kernel, when one exists.
pub fn has_faithful_irreducible(table: &CharTableRef) -> Option<usize> {
    (0..table.rows().len()).find(|&r| table.kernel_classes(r) == vec![0])
}

/// Full pipeline from a group to its exact rdim: classes, table, minimal
/// normal subgroups, cover, branch and bound.
pub fn rdim_of_group(g: &GroupRef, cfg: &SolverConfig) -> Result<u64> {
    let cd = crate::classes::conjugacy_classes(g)?;
    let table = crate::chartab::character_table(&cd)?;
    let minimals = crate::structure::minimal_normal_subgroups(g, &cd);
    let cover = build_cover(&table, &minimals)?;
    Ok(solve_rdim(&cover, cfg)?.total_degree)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartab::character_table;
    use crate::classes::conjugacy_classes;
    use crate::families::FamilySpec;
    use crate::group::{load_group, parse_spec, GroupSpec, LoadLimits};
    use crate::structure::minimal_normal_subgroups;

    fn pipeline(f: FamilySpec) -> (GroupRef, CharTableRef, Vec<Subgroup>) {
        let g = load_group(&GroupSpec::Family(f), &LoadLimits::default()).unwrap();
        let cd = conjugacy_classes(&g).unwrap();
        let t = character_table(&cd).unwrap();
        let mins = minimal_normal_subgroups(&g, &cd);
        (g, t, mins)
    }

    fn s3_pipeline() -> (GroupRef, CharTableRef, Vec<Subgroup>) {
        let spec =
            parse_spec(r#"{"kind":"perm","degree":3,"generators":[[[0,1]],[[0,1,2]]]}"#).unwrap();
        let g = load_group(&spec, &LoadLimits::default()).unwrap();
        let cd = conjugacy_classes(&g).unwrap();
        let t = character_table(&cd).unwrap();
        let mins = minimal_normal_subgroups(&g, &cd);
        (g, t, mins)
    }

    #[test]
    fn cover_of_klein_four() {
        let (_, t, mins) = pipeline(FamilySpec::Elementary { p: 2, r: 2 });
        let cover = build_cover(&t, &mins).unwrap();
        assert_eq!(cover.universe_size(), 3);
        // each nonprincipal linear row covers exactly 2 of the 3
        for r in 1..cover.rows() {
            assert_eq!(cover.covered(r).count(), 2);
        }
        assert!(cover.covered(0).is_empty());
    }

    #[test]
    fn cover_of_q8_has_single_covering_row() {
        let (_, t, mins) = pipeline(FamilySpec::GeneralizedQuaternion { order: 8 });
        let cover = build_cover(&t, &mins).unwrap();
        assert_eq!(cover.universe_size(), 1);
        let covering: Vec<usize> = (0..cover.rows())
            .filter(|&r| cover.covered(r).count() > 0)
            .collect();
        assert_eq!(covering.len(), 1);
        assert_eq!(cover.weight(covering[0]), 2);
    }

    #[test]
    fn s3_cover_and_solve() {
        let (_, t, mins) = s3_pipeline();
        let cover = build_cover(&t, &mins).unwrap();
        assert_eq!(cover.universe_size(), 1);
        let cert = solve_rdim(&cover, &SolverConfig::default()).unwrap();
        assert_eq!(cert.total_degree, 2);
        assert_eq!(brute_force_rdim(&t, 128).unwrap(), 2);
    }

    #[test]
    fn rdim_examples_match_brute_force() {
        for (f, expected) in [
            (FamilySpec::GeneralizedQuaternion { order: 8 }, 2),
            (FamilySpec::Dihedral { n: 4 }, 2),
            (FamilySpec::Elementary { p: 2, r: 3 }, 3),
            (FamilySpec::Extraspecial { p: 2, n: 5, plus: true }, 4),
            (FamilySpec::Extraspecial { p: 2, n: 5, plus: false }, 4),
            (FamilySpec::Cyclic { n: 12 }, 1),
            (FamilySpec::FrobeniusP { p: 5 }, 4),
        ] {
            let (_, t, mins) = pipeline(f.clone());
            let cover = build_cover(&t, &mins).unwrap();
            let cert = solve_rdim(&cover, &SolverConfig::default()).unwrap();
            assert_eq!(cert.total_degree, expected, "{f:?}");
            assert_eq!(brute_force_rdim(&t, 128).unwrap(), expected, "{f:?}");
        }
    }

    #[test]
    fn trivial_group_has_rdim_zero() {
        let (_, t, mins) = pipeline(FamilySpec::Cyclic { n: 1 });
        let cover = build_cover(&t, &mins).unwrap();
        let cert = solve_rdim(&cover, &SolverConfig::default()).unwrap();
        assert_eq!(cert.total_degree, 0);
        assert!(cert.rows.is_empty());
        assert_eq!(brute_force_rdim(&t, 128).unwrap(), 0);
    }

    #[test]
    fn node_limit_is_reported() {
        let (_, t, mins) = pipeline(FamilySpec::Elementary { p: 2, r: 4 });
        let cover = build_cover(&t, &mins).unwrap();
        let err = solve_rdim(&cover, &SolverConfig { node_limit: 2 });
        assert!(matches!(err, Err(Error::NodeLimit { .. })));
    }

    #[test]
    fn abelian_fast_path() {
        let g = load_group(
            &GroupSpec::Family(FamilySpec::Cyclic { n: 6 }),
            &LoadLimits::default(),
        )
        .unwrap();
        assert_eq!(rdim_abelian(&g).unwrap(), 1);
        let (g2, t2, mins2) = pipeline(FamilySpec::Elementary { p: 2, r: 3 });
        assert_eq!(rdim_abelian(&g2).unwrap(), 3);
        let cover = build_cover(&t2, &mins2).unwrap();
        assert_eq!(solve_rdim(&cover, &SolverConfig::default()).unwrap().total_degree, 3);
    }

    #[test]
    fn pgroup_fast_path_examples() {
        let (g, t, _) = pipeline(FamilySpec::GeneralizedQuaternion { order: 8 });
        let res = rdim_pgroup(&g, &t).unwrap();
        assert_eq!(res.value, 2);
        assert_eq!(res.basis.len(), 1);
        assert_eq!(res.min_degrees, vec![(vec![1], 2)]);

        let (g, t, _) = pipeline(FamilySpec::Elementary { p: 2, r: 3 });
        let res = rdim_pgroup(&g, &t).unwrap();
        assert_eq!(res.value, 3);
        assert!(res.min_degrees.iter().all(|(_, d)| *d == 1));

        let (g, t, _) = pipeline(FamilySpec::Heisenberg { q: 8 });
        let res = rdim_pgroup(&g, &t).unwrap();
        assert_eq!(res.value, 24);
        assert_eq!(res.min_degrees.len(), 7);
        assert!(res.min_degrees.iter().all(|(_, d)| *d == 8));
    }

    #[test]
    fn pgroup_greedy_matches_exhaustive() {
        for f in [
            FamilySpec::GeneralizedQuaternion { order: 16 },
            FamilySpec::Heisenberg { q: 4 },
            FamilySpec::DirectProduct(vec![
                FamilySpec::Cyclic { n: 2 },
                FamilySpec::GeneralizedQuaternion { order: 8 },
            ]),
            FamilySpec::Elementary { p: 3, r: 2 },
            FamilySpec::DirectProduct(vec![
                FamilySpec::Cyclic { n: 4 },
                FamilySpec::Dihedral { n: 4 },
            ]),
        ] {
            let (g, t, _) = pipeline(f.clone());
            let greedy = rdim_pgroup(&g, &t).unwrap().value;
            let exhaustive = rdim_pgroup_exhaustive(&g, &t).unwrap();
            assert_eq!(greedy, exhaustive, "{f:?}");
        }
    }

    #[test]
    fn pgroup_path_rejects_non_p_groups() {
        let (g, t, _) = s3_pipeline();
        assert!(matches!(rdim_pgroup(&g, &t), Err(Error::NotPGroup)));
    }

    #[test]
    fn socle_upper_bound_examples() {
        for (f, expected) in [
            (FamilySpec::Elementary { p: 2, r: 2 }, 2),
            (FamilySpec::Elementary { p: 2, r: 3 }, 3),
        ] {
            let g = load_group(&GroupSpec::Family(f), &LoadLimits::default()).unwrap();
            let cd = conjugacy_classes(&g).unwrap();
            let t = character_table(&cd).unwrap();
            let soc = crate::structure::socle_decomposition(&g, &cd).unwrap();
            let (bound, rows) = upper_bound_socle(&t, &soc).unwrap();
            assert_eq!(bound, expected);
            assert_eq!(rows.len(), soc.t());
        }
        // S3: t = 1, bound via the degree-2 row
        let (_, t, _) = s3_pipeline();
        let g = t.group().clone();
        let cd = t.classes().clone();
        let soc = crate::structure::socle_decomposition(&g, &cd).unwrap();
        let (bound, _) = upper_bound_socle(&t, &soc).unwrap();
        assert_eq!(bound, 2);
    }

    #[test]
    fn faithful_irreducible_detection() {
        let (_, q8, _) = pipeline(FamilySpec::GeneralizedQuaternion { order: 8 });
        let row = has_faithful_irreducible(&q8).unwrap();
        assert_eq!(q8.degree(row), 2);

        let (_, klein, _) = pipeline(FamilySpec::Elementary { p: 2, r: 2 });
        assert!(has_faithful_irreducible(&klein).is_none());

        let (_, a5, _) = pipeline(FamilySpec::Alternating { m: 5 });
        let row = has_faithful_irreducible(&a5).unwrap();
        // any nonprincipal row of a simple group is faithful
        assert!(a5.degree(row) > 1);
        assert!(a5.degree(row) * a5.degree(row) < 60);

        // the affine group of order 20 has a faithful row of degree 4
        let (_, f20, _) = pipeline(FamilySpec::FrobeniusP { p: 5 });
        let row = has_faithful_irreducible(&f20).unwrap();
        assert_eq!(f20.degree(row), 4);
    }

    #[test]
    fn certificate_round_trip() {
        let (_, t, mins) = pipeline(FamilySpec::GeneralizedQuaternion { order: 8 });
        let cover = build_cover(&t, &mins).unwrap();
        let cert = solve_rdim(&cover, &SolverConfig::default()).unwrap();
        let json = cert.to_json();
        let back = RdimCertificate::from_json(&json).unwrap();
        assert_eq!(back.to_json(), json);
        verify_certificate(&cover, &back).unwrap();
    }
}
