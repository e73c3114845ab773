//! The curated group corpus: deterministic builders covering every branch of
//! the classification checks, including the extremal unitriangular groups
//! and the order-32 central products with abelian maximal subgroups.

use crate::error::Result;
use crate::families::{self, FamilySpec};
use crate::group::GroupSpec;

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub id: String,
    pub spec: GroupSpec,
    /// Entries too heavy for default runs; opt-in via --slow.
    pub slow: bool,
}

impl CorpusEntry {
    fn family(id: impl Into<String>, f: FamilySpec) -> CorpusEntry {
        CorpusEntry {
            id: id.into(),
            spec: GroupSpec::Family(f),
            slow: false,
        }
    }
}

/// Invariant-factor chains d_1 | d_2 | ... | d_k with product n, smallest
/// first; one chain per isomorphism class of abelian groups of order n.
pub fn abelian_chains(n: u64) -> Vec<Vec<u64>> {
    fn rec(m: u64, prev: u64, chain: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if m == 1 {
            out.push(chain.clone());
            return;
        }
        let mut d = prev.max(2);
        while d <= m {
            if m.is_multiple_of(d) && d.is_multiple_of(prev) {
                chain.push(d);
                rec(m / d, d, chain, out);
                chain.pop();
            }
            d += 1;
        }
    }
    let mut out = Vec::new();
    if n == 1 {
        out.push(vec![]);
        return out;
    }
    rec(n, 1, &mut Vec::new(), &mut out);
    out
}

fn abelian_spec(chain: &[u64]) -> FamilySpec {
    match chain.len() {
        0 => FamilySpec::Cyclic { n: 1 },
        1 => FamilySpec::Cyclic { n: chain[0] as usize },
        _ => FamilySpec::DirectProduct(
            chain
                .iter()
                .map(|&d| FamilySpec::Cyclic { n: d as usize })
                .collect(),
        ),
    }
}

fn central_product_entry(id: &str, a: FamilySpec, b: FamilySpec) -> Result<CorpusEntry> {
    let ta = families::build(&a)?;
    let tb = families::build(&b)?;
    let table = families::central_product(&ta, &tb)?;
    Ok(CorpusEntry {
        id: id.into(),
        spec: GroupSpec::Table { table },
        slow: false,
    })
}

/// The fixed corpus, in deterministic order.
pub fn standard_corpus() -> Result<Vec<CorpusEntry>> {
    let mut out = Vec::new();

    out.push(CorpusEntry::family("trivial", FamilySpec::Cyclic { n: 1 }));

    // all abelian groups of order <= 64, one per isomorphism class
    for n in 2..=64u64 {
        for chain in abelian_chains(n) {
            let id = format!(
                "abelian_{}",
                chain.iter().map(|d| d.to_string()).collect::<Vec<_>>().join("x")
            );
            out.push(CorpusEntry::family(id, abelian_spec(&chain)));
        }
    }

    // dihedral and generalized quaternion groups up to order 64
    for m in 3..=32usize {
        out.push(CorpusEntry::family(
            format!("dihedral_{}", 2 * m),
            FamilySpec::Dihedral { n: m },
        ));
    }
    for order in [8usize, 16, 32, 64] {
        out.push(CorpusEntry::family(
            format!("quaternion_{order}"),
            FamilySpec::GeneralizedQuaternion { order },
        ));
    }

    // extraspecial groups of order p^3 for p <= 7, and both of order 32
    for p in [2usize, 3, 5, 7] {
        for (plus, tag) in [(true, "plus"), (false, "minus")] {
            out.push(CorpusEntry::family(
                format!("extraspecial_{}_{}", p * p * p, tag),
                FamilySpec::Extraspecial { p, n: 3, plus },
            ));
        }
    }
    for (plus, tag) in [(true, "plus"), (false, "minus")] {
        out.push(CorpusEntry::family(
            format!("extraspecial_32_{tag}"),
            FamilySpec::Extraspecial { p: 2, n: 5, plus },
        ));
    }

    // unitriangular groups; q = 16 is the heavyweight opt-in entry
    for q in [2usize, 3, 4, 8] {
        out.push(CorpusEntry::family(
            format!("heisenberg_{q}"),
            FamilySpec::Heisenberg { q },
        ));
    }
    out.push(CorpusEntry {
        id: "heisenberg_16".into(),
        spec: GroupSpec::Family(FamilySpec::Heisenberg { q: 16 }),
        slow: true,
    });

    for p in [5usize, 7, 13] {
        out.push(CorpusEntry::family(
            format!("frobenius_{}", p * (p - 1)),
            FamilySpec::FrobeniusP { p },
        ));
    }

    for m in [3usize, 4, 5] {
        out.push(CorpusEntry::family(
            format!("symmetric_{m}"),
            FamilySpec::Symmetric { m },
        ));
    }
    for m in [4usize, 5] {
        out.push(CorpusEntry::family(
            format!("alternating_{m}"),
            FamilySpec::Alternating { m },
        ));
    }

    // order-32 central products: scalar extensions of the order-16 maximal
    // 2-subgroups of GL(2, C); all have abelian maximal subgroups and a
    // faithful row of degree 2
    out.push(central_product_entry(
        "cproduct_c4_d8",
        FamilySpec::Cyclic { n: 4 },
        FamilySpec::Dihedral { n: 4 },
    )?);
    out.push(central_product_entry(
        "cproduct_c8_d8",
        FamilySpec::Cyclic { n: 8 },
        FamilySpec::Dihedral { n: 4 },
    )?);
    out.push(central_product_entry(
        "cproduct_c8_q8",
        FamilySpec::Cyclic { n: 8 },
        FamilySpec::GeneralizedQuaternion { order: 8 },
    )?);
    out.push(central_product_entry(
        "cproduct_c4_d16",
        FamilySpec::Cyclic { n: 4 },
        FamilySpec::Dihedral { n: 8 },
    )?);
    out.push(central_product_entry(
        "cproduct_c4_q16",
        FamilySpec::Cyclic { n: 4 },
        FamilySpec::GeneralizedQuaternion { order: 16 },
    )?);

    // direct products mixing the families, up to order 512
    let products: Vec<(&str, Vec<FamilySpec>)> = vec![
        (
            "product_c2_q8",
            vec![FamilySpec::Cyclic { n: 2 }, FamilySpec::GeneralizedQuaternion { order: 8 }],
        ),
        (
            "product_c2_d8",
            vec![FamilySpec::Cyclic { n: 2 }, FamilySpec::Dihedral { n: 4 }],
        ),
        (
            "product_c2c2_q8",
            vec![
                FamilySpec::Elementary { p: 2, r: 2 },
                FamilySpec::GeneralizedQuaternion { order: 8 },
            ],
        ),
        (
            "product_c2c2_d8",
            vec![FamilySpec::Elementary { p: 2, r: 2 }, FamilySpec::Dihedral { n: 4 }],
        ),
        (
            "product_c4_d8",
            vec![FamilySpec::Cyclic { n: 4 }, FamilySpec::Dihedral { n: 4 }],
        ),
        (
            "product_c2_d16",
            vec![FamilySpec::Cyclic { n: 2 }, FamilySpec::Dihedral { n: 8 }],
        ),
        (
            "product_c2_q16",
            vec![FamilySpec::Cyclic { n: 2 }, FamilySpec::GeneralizedQuaternion { order: 16 }],
        ),
        (
            "product_c3_q8",
            vec![FamilySpec::Cyclic { n: 3 }, FamilySpec::GeneralizedQuaternion { order: 8 }],
        ),
        (
            "product_q8_q8",
            vec![
                FamilySpec::GeneralizedQuaternion { order: 8 },
                FamilySpec::GeneralizedQuaternion { order: 8 },
            ],
        ),
        (
            "product_d8_d8",
            vec![FamilySpec::Dihedral { n: 4 }, FamilySpec::Dihedral { n: 4 }],
        ),
        (
            "product_c2_a4",
            vec![FamilySpec::Cyclic { n: 2 }, FamilySpec::Alternating { m: 4 }],
        ),
        (
            "product_c2_s4",
            vec![FamilySpec::Cyclic { n: 2 }, FamilySpec::Symmetric { m: 4 }],
        ),
        (
            "product_c3_heisenberg3",
            vec![FamilySpec::Cyclic { n: 3 }, FamilySpec::Heisenberg { q: 3 }],
        ),
        (
            "product_c2_heisenberg4",
            vec![FamilySpec::Cyclic { n: 2 }, FamilySpec::Heisenberg { q: 4 }],
        ),
        (
            "product_c5_frobenius20",
            vec![FamilySpec::Cyclic { n: 5 }, FamilySpec::FrobeniusP { p: 5 }],
        ),
        (
            "product_c4_a5",
            vec![FamilySpec::Cyclic { n: 4 }, FamilySpec::Alternating { m: 5 }],
        ),
        (
            "product_c2_s5",
            vec![FamilySpec::Cyclic { n: 2 }, FamilySpec::Symmetric { m: 5 }],
        ),
    ];
    for (id, factors) in products {
        out.push(CorpusEntry::family(id, FamilySpec::DirectProduct(factors)));
    }

    Ok(out)
}
