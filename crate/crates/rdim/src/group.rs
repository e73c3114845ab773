//! Element-indexed finite groups with a total in-memory multiplication
//! oracle, built from permutation generators, explicit tables, or family
//! builders.

use crate::error::{Error, Result};
use crate::families::{self, FamilySpec, RawTable};
use crate::perm::Perm;
use crate::util::lcm;
use serde::{Deserialize, Serialize};
use std::sync::Arc;

pub const DEFAULT_MAX_ORDER: usize = 10_000;

#[derive(Clone, Copy, Debug)]
pub struct LoadLimits {
    pub max_order: usize,
}

impl Default for LoadLimits {
    fn default() -> Self {
        LoadLimits {
            max_order: DEFAULT_MAX_ORDER,
        }
    }
}

/// Input description of a group.
#[derive(Clone, Debug)]
pub enum GroupSpec {
    Permutation { degree: usize, generators: Vec<Perm> },
    Table { table: RawTable },
    Family(FamilySpec),
}

/// A finite group on element indices `0..order`, immutable after
/// construction. Index 0 is always the identity.
pub struct Group {
    order: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    element_orders: Vec<u32>,
    labels: Vec<String>,
    exponent: u64,
}

impl std::fmt::Debug for Group {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Group(order={})", self.order)
    }
}

pub type GroupRef = Arc<Group>;

impl Group {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// g x g^-1
    #[inline]
    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// x^-1 y^-1 x y
    pub fn commutator(&self, x: usize, y: usize) -> usize {
        self.mul(self.mul(self.inv(x), self.inv(y)), self.mul(x, y))
    }

    pub fn pow(&self, x: usize, mut e: u64) -> usize {
        let ord = self.element_orders[x] as u64;
        e %= ord;
        let mut acc = 0; // identity
        let mut base = x;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn element_order(&self, x: usize) -> u64 {
        self.element_orders[x] as u64
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Some((p, n)) when |G| = p^n for a prime p and n >= 1.
    pub fn p_group(&self) -> Option<(u64, u32)> {
        if self.order < 2 {
            return None;
        }
        let mut p = 2usize;
        while p * p <= self.order {
            if self.order.is_multiple_of(p) {
                let mut n = 0;
                let mut m = self.order;
                while m.is_multiple_of(p) {
                    m /= p;
                    n += 1;
                }
                return if m == 1 { Some((p as u64, n)) } else { None };
            }
            p += 1;
        }
        Some((self.order as u64, 1))
    }

    /// A small generating set found greedily in element order; used to speed
    /// up closures and conjugation orbits. Size is at most log2 |G|.
    pub fn small_generating_set(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut reached = vec![false; self.order];
        reached[0] = true;
        let mut count = 1;
        for x in 1..self.order {
            if reached[x] {
                continue;
            }
            gens.push(x);
            // close the current subgroup under the new generator
            let mut frontier: Vec<usize> = (0..self.order).filter(|&e| reached[e]).collect();
            while let Some(a) = frontier.pop() {
                for &g in &gens {
                    for b in [self.mul(a, g), self.mul(g, a)] {
                        if !reached[b] {
                            reached[b] = true;
                            count += 1;
                            frontier.push(b);
                        }
                    }
                }
            }
            if count == self.order {
                break;
            }
        }
        gens
    }

    /// Canonical serialized table form, used for hashing and export.
    pub fn to_raw_table(&self) -> RawTable {
        RawTable {
            order: self.order,
            identity: 0,
            mul: self.mul.clone(),
            labels: self.labels.clone(),
        }
    }
}

/// Constructs a [`Group`] from a spec, validating the group axioms.
///
/// Element ordering is deterministic: BFS closure order from the generators
/// for permutation specs, table row order otherwise (with the designated
/// identity moved to index 0).
pub fn load_group(spec: &GroupSpec, limits: &LoadLimits) -> Result<GroupRef> {
    let table = match spec {
        GroupSpec::Permutation { degree, generators } => {
            families::perm_closure_table(*degree, generators, limits.max_order)?
        }
        GroupSpec::Table { table } => {
            if table.order > limits.max_order {
                return Err(Error::SizeLimit {
                    limit: limits.max_order,
                });
            }
            table.clone()
        }
        GroupSpec::Family(f) => {
            let t = families::build(f)?;
            if t.order > limits.max_order {
                return Err(Error::SizeLimit {
                    limit: limits.max_order,
                });
            }
            t
        }
    };
    from_table(table)
}

fn from_table(mut table: RawTable) -> Result<GroupRef> {
    let n = table.order;
    if n == 0 || table.mul.len() != n * n {
        return Err(Error::InvalidSpec(format!(
            "table has {} entries, expected {}",
            table.mul.len(),
            n * n
        )));
    }
    if table.mul.iter().any(|&v| v as usize >= n) {
        return Err(Error::InvalidSpec("table entry out of range".into()));
    }
    // move the designated identity to index 0 by relabeling
    if table.identity >= n {
        return Err(Error::NoIdentity);
    }
    if table.identity != 0 {
        table = relabel_identity_first(&table);
    }
    let identity = 0usize;
    if (0..n).any(|j| table.mul(identity, j) != j || table.mul(j, identity) != j) {
        return Err(Error::NoIdentity);
    }
    // Latin square check
    for r in 0..n {
        let mut seen_row = vec![false; n];
        let mut seen_col = vec![false; n];
        for c in 0..n {
            let rc = table.mul(r, c);
            let cr = table.mul(c, r);
            if seen_row[rc] || seen_col[cr] {
                return Err(Error::NotLatinSquare(r));
            }
            seen_row[rc] = true;
            seen_col[cr] = true;
        }
    }
    // inverses
    let mut inv = vec![u32::MAX; n];
    for a in 0..n {
        for b in 0..n {
            if table.mul(a, b) == identity {
                if table.mul(b, a) != identity {
                    return Err(Error::NotAGroup(format!(
                        "one-sided inverse at element {a}"
                    )));
                }
                inv[a] = b as u32;
                break;
            }
        }
        if inv[a] == u32::MAX {
            return Err(Error::NotAGroup(format!("element {a} has no inverse")));
        }
    }
    // associativity: full check up to order 512, deterministic sample above
    let assoc_ok = if n <= 512 {
        (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| table.mul(table.mul(a, b), c) == table.mul(a, table.mul(b, c)))))
    } else {
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state % n as u64) as usize
        };
        (0..3 * n).all(|_| {
            let (a, b, c) = (next(), next(), next());
            table.mul(table.mul(a, b), c) == table.mul(a, table.mul(b, c))
        })
    };
    if !assoc_ok {
        return Err(Error::NotAGroup("associativity fails".into()));
    }

    let mut element_orders = vec![0u32; n];
    let mut exponent = 1u64;
    for x in 0..n {
        let mut ord = 1u32;
        let mut acc = x;
        while acc != identity {
            acc = table.mul(acc, x);
            ord += 1;
        }
        element_orders[x] = ord;
        exponent = lcm(exponent, ord as u64);
    }

    Ok(Arc::new(Group {
        order: n,
        mul: table.mul,
        inv,
        element_orders,
        labels: table.labels,
        exponent,
    }))
}

fn relabel_identity_first(t: &RawTable) -> RawTable {
    let n = t.order;
    let e = t.identity;
    // swap indices 0 and e
    let map = |x: usize| {
        if x == 0 {
            e
        } else if x == e {
            0
        } else {
            x
        }
    };
    let mut mul = vec![0u32; n * n];
    for a in 0..n {
        for b in 0..n {
            mul[a * n + b] = map(t.mul(map(a), map(b))) as u32;
        }
    }
    let labels = (0..n).map(|i| t.labels[map(i)].clone()).collect();
    RawTable {
        order: n,
        identity: 0,
        mul,
        labels,
    }
}

// ---------------------------------------------------------------------------
// Spec file format
// ---------------------------------------------------------------------------

/// On-disk group spec. `kind` selects among `perm`, `table`, and `family`.
#[derive(Serialize, Deserialize, Debug)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum SpecFile {
    Perm {
        degree: usize,
        generators: Vec<serde_json::Value>,
    },
    Table {
        order: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        identity: Option<usize>,
        mul: Vec<Vec<u32>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<String>>,
    },
    Family {
        name: String,
        params: serde_json::Value,
    },
}

/// Parses the textual group spec format.
///
/// Permutation generators may be written as flat image lists
/// (`[1, 0, 2]`) or as lists of cycles (`[[0, 1]]`).
pub fn parse_spec(text: &str) -> Result<GroupSpec> {
    let file: SpecFile = serde_json::from_str(text)?;
    match file {
        SpecFile::Perm { degree, generators } => {
            let gens = generators
                .iter()
                .enumerate()
                .map(|(i, v)| parse_generator(degree, v, i))
                .collect::<Result<Vec<_>>>()?;
            Ok(GroupSpec::Permutation {
                degree,
                generators: gens,
            })
        }
        SpecFile::Table {
            order,
            identity,
            mul,
            labels,
        } => {
            if mul.len() != order || mul.iter().any(|row| row.len() != order) {
                return Err(Error::InvalidSpec("table shape mismatch".into()));
            }
            let flat: Vec<u32> = mul.into_iter().flatten().collect();
            let identity = match identity {
                Some(e) => e,
                None => detect_identity(order, &flat)?,
            };
            let labels =
                labels.unwrap_or_else(|| (0..order).map(|i| format!("e{i}")).collect());
            if labels.len() != order {
                return Err(Error::InvalidSpec("label count mismatch".into()));
            }
            Ok(GroupSpec::Table {
                table: RawTable {
                    order,
                    identity,
                    mul: flat,
                    labels,
                },
            })
        }
        SpecFile::Family { name, params } => Ok(GroupSpec::Family(parse_family(&name, &params)?)),
    }
}

fn detect_identity(order: usize, mul: &[u32]) -> Result<usize> {
    (0..order)
        .find(|&e| (0..order).all(|j| mul[e * order + j] as usize == j))
        .ok_or(Error::NoIdentity)
}

fn parse_generator(degree: usize, v: &serde_json::Value, index: usize) -> Result<Perm> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::InvalidSpec(format!("generator {index} is not an array")))?;
    let nested = arr.first().map(|x| x.is_array()).unwrap_or(false);
    let to_u32 = |x: &serde_json::Value| -> Result<u32> {
        x.as_u64()
            .map(|n| n as u32)
            .ok_or_else(|| Error::InvalidSpec(format!("generator {index} has a non-integer point")))
    };
    if nested {
        let cycles = arr
            .iter()
            .map(|c| {
                c.as_array()
                    .ok_or_else(|| Error::InvalidSpec(format!("generator {index} mixes cycles and points")))?
                    .iter()
                    .map(to_u32)
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Perm::from_cycles(degree, &cycles, index)
    } else {
        if arr.len() != degree {
            return Err(Error::InvalidSpec(format!(
                "generator {index} image list has length {}, expected {degree}",
                arr.len()
            )));
        }
        let images = arr.iter().map(to_u32).collect::<Result<Vec<_>>>()?;
        Perm::from_images(images, index)
    }
}

fn parse_family(name: &str, params: &serde_json::Value) -> Result<FamilySpec> {
    let get = |key: &str| -> Result<usize> {
        params
            .get(key)
            .and_then(|v| v.as_u64())
            .map(|v| v as usize)
            .ok_or_else(|| Error::InvalidSpec(format!("family `{name}` needs integer param `{key}`")))
    };
    Ok(match name {
        "cyclic" => FamilySpec::Cyclic { n: get("n")? },
        "elementary" => FamilySpec::Elementary {
            p: get("p")?,
            r: get("r")?,
        },
        "dihedral" => FamilySpec::Dihedral { n: get("n")? },
        "quaternion" => FamilySpec::GeneralizedQuaternion { order: get("order")? },
        "extraspecial_plus" => FamilySpec::Extraspecial {
            p: get("p")?,
            n: get("n")?,
            plus: true,
        },
        "extraspecial_minus" => FamilySpec::Extraspecial {
            p: get("p")?,
            n: get("n")?,
            plus: false,
        },
        "heisenberg" => FamilySpec::Heisenberg { q: get("q")? },
        "frobenius_p" => FamilySpec::FrobeniusP { p: get("p")? },
        other => {
            return Err(Error::InvalidSpec(format!("unknown family `{other}`")));
        }
    })
}

/// Canonical serialization of a spec as a table file. Byte-identical across
/// runs for the same group; this is the form `corpus export` writes and the
/// form the input hash binds to.
pub fn canonical_table_json(g: &Group) -> String {
    let rows: Vec<Vec<u32>> = (0..g.order())
        .map(|a| (0..g.order()).map(|b| g.mul(a, b) as u32).collect())
        .collect();
    let file = SpecFile::Table {
        order: g.order(),
        identity: Some(0),
        mul: rows,
        labels: Some((0..g.order()).map(|i| g.label(i).to_string()).collect()),
    };
    let mut s = serde_json::to_string(&file).expect("table serialization cannot fail");
    s.push('\n');
    s
}

/// Stable content hash binding cached artifacts to their group.
pub fn group_hash(g: &Group) -> String {
    // hash the table only; labels are presentation, not structure
    let mut bytes = Vec::with_capacity(8 + g.order() * g.order() * 4);
    bytes.extend_from_slice(&(g.order() as u64).to_le_bytes());
    for a in 0..g.order() {
        for b in 0..g.order() {
            bytes.extend_from_slice(&(g.mul(a, b) as u32).to_le_bytes());
        }
    }
    crate::util::hash_hex(&bytes)
}
