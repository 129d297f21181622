//! Checkable evidence that an EAFC group is large, or that it is free abelian.

use std::sync::Arc;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{abelianization_invariants, smith_normal_form};
use crate::artin_system::ArtinSystem;
use crate::decompose::Presentation;
use crate::dihedral::DihedralContext;
use crate::error::{Error, Result};
use crate::exponent::Exp;
use crate::vertex_set::VertexSet;
use crate::words::{Syllable, Word};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Largeness {
    /// Complete with every label 2: the group is `Z^rank`.
    VirtuallyAbelian {
        rank: usize,
    },
    Large {
        certificate: LargenessCertificate,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "route", rename_all = "snake_case")]
pub enum LargenessCertificate {
    /// `ρ_{u,v}` maps onto `G_{u,v} ≅ F_2`.
    FreeRetraction { u: String, v: String },
    /// On the edge `{a, b}` with label `2n`, `n >= 2`: the subgroup generated
    /// by `generators` has index `n`, lies over `0 ∈ C_n` and maps onto `F_n`
    /// (letters `f0 .. f{n-1}`, relators `quotient_relators`) via the listed
    /// images.
    DihedralRoute {
        a: String,
        b: String,
        n: u64,
        index: u64,
        generators: Vec<String>,
        images: Vec<String>,
        quotient_relators: Vec<String>,
    },
}

/// Largest half-label for which a dihedral route is written out explicitly.
pub const MAX_ROUTE_HALF_LABEL: u64 = 1 << 16;

/// Free-group letter names for the `F_n` quotient.
fn free_names(n: u64) -> Vec<String> {
    (0..n).map(|i| format!("f{i}")).collect()
}

fn free_word(image: &[(usize, Exp)]) -> String {
    let parts: Vec<String> = image
        .iter()
        .map(|(i, e)| {
            if *e == Exp::ONE {
                format!("f{i}")
            } else {
                format!("f{i}^{e}")
            }
        })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join(" ")
    }
}

pub fn largeness_certificate(sys: &ArtinSystem) -> Result<Largeness> {
    sys.check_eafc()?;
    let nv = sys.vertex_count();
    for u in 0..nv {
        for v in u + 1..nv {
            if !sys.adjacent(u, v) {
                return Ok(Largeness::Large {
                    certificate: LargenessCertificate::FreeRetraction {
                        u: sys.name(u).into(),
                        v: sys.name(v).into(),
                    },
                });
            }
        }
    }
    let Some(edge) = sys.edges().iter().filter(|e| e.m > 2).min_by_key(|e| e.m) else {
        return Ok(Largeness::VirtuallyAbelian { rank: nv });
    };
    let (a, b) = if sys.name(edge.u) < sys.name(edge.v) {
        (edge.u, edge.v)
    } else {
        (edge.v, edge.u)
    };
    let n = edge.half_label();
    if n > MAX_ROUTE_HALF_LABEL {
        return Err(Error::Input(format!(
            "label {} is too large for an explicit dihedral certificate",
            edge.m
        )));
    }
    let ctx = DihedralContext::with_names(n, sys.name(a), sys.name(b))?;
    let gens = ctx.appropriate_gens();
    let images = gens
        .iter()
        .map(|g| {
            free_word(
                &ctx.free_quotient_image(g)
                    .expect("generators lie in the subgroup"),
            )
        })
        .collect();
    Ok(Largeness::Large {
        certificate: LargenessCertificate::DihedralRoute {
            a: sys.name(a).into(),
            b: sys.name(b).into(),
            n,
            index: n,
            generators: gens.iter().map(|g| g.to_string()).collect(),
            images,
            quotient_relators: Vec::new(),
        },
    })
}

/// `Ok(false)` for a well-formed but wrong claim, `Err` for a malformed one.
pub fn verify_certificate(sys: &ArtinSystem, claim: &Largeness) -> Result<bool> {
    match claim {
        Largeness::VirtuallyAbelian { rank } => Ok(*rank == sys.vertex_count()
            && sys.is_complete()
            && sys.edges().iter().all(|e| e.m == 2)),
        Largeness::Large { certificate } => match certificate {
            LargenessCertificate::FreeRetraction { u, v } => verify_free_retraction(sys, u, v),
            LargenessCertificate::DihedralRoute {
                a,
                b,
                n,
                index,
                generators,
                images,
                quotient_relators,
            } => {
                verify_dihedral_route(sys, a, b, *n, *index, generators, images, quotient_relators)
            }
        },
    }
}

fn malformed(msg: impl Into<String>) -> Error {
    Error::Certificate(msg.into())
}

fn verify_free_retraction(sys: &ArtinSystem, u: &str, v: &str) -> Result<bool> {
    let iu = sys
        .index_of(u)
        .map_err(|_| malformed(format!("unknown vertex `{u}`")))?;
    let iv = sys
        .index_of(v)
        .map_err(|_| malformed(format!("unknown vertex `{v}`")))?;
    if iu == iv || sys.adjacent(iu, iv) {
        return Ok(false);
    }
    // The retraction fixes both generators, so it is onto G_{u,v} = F_2.
    let host = Arc::new(sys.clone());
    let keep: VertexSet = [iu, iv].into_iter().collect();
    let hits = |i: usize| {
        let g = Word::from_syllables(&host, [Syllable::new(i, 1)]).expect("vertex in range");
        g.retraction(&keep) == g
    };
    Ok(hits(iu) && hits(iv))
}

#[allow(clippy::too_many_arguments)]
fn verify_dihedral_route(
    sys: &ArtinSystem,
    a: &str,
    b: &str,
    n: u64,
    index: u64,
    generators: &[String],
    images: &[String],
    quotient_relators: &[String],
) -> Result<bool> {
    let ia = sys
        .index_of(a)
        .map_err(|_| malformed(format!("unknown vertex `{a}`")))?;
    let ib = sys
        .index_of(b)
        .map_err(|_| malformed(format!("unknown vertex `{b}`")))?;
    if generators.len() != images.len() {
        return Err(malformed("generators and images differ in length"));
    }
    let Some(m) = sys.label(ia, ib) else {
        return Ok(false);
    };
    if n > MAX_ROUTE_HALF_LABEL {
        return Err(malformed("half-label too large"));
    }
    if m != 2 * n || n < 2 || index != n {
        return Ok(false);
    }
    let ctx = DihedralContext::with_names(n, a, b)?;
    let free = Arc::new(
        ArtinSystem::new(&free_names(n), &[] as &[(String, String, u64)])
            .expect("free letters are valid names"),
    );
    let host = Arc::new(sys.clone());
    let keep: VertexSet = [ia, ib].into_iter().collect();
    let mut abelian_rows = Vec::with_capacity(generators.len());
    for (g, img) in generators.iter().zip(images) {
        let word = Word::parse(&host, g).map_err(|e| malformed(format!("generator `{g}`: {e}")))?;
        let claimed =
            Word::parse(&free, img).map_err(|e| malformed(format!("image `{img}`: {e}")))?;
        let local = word.retraction(&keep).transfer(ctx.system())?;
        if ctx.cn_quotient_image(&local) != 0 {
            return Ok(false);
        }
        let Some(actual) = ctx.free_quotient_image(&local) else {
            return Ok(false);
        };
        let actual =
            Word::from_syllables(&free, actual.into_iter().map(|(i, e)| Syllable::new(i, e)))?;
        if actual != claimed {
            return Ok(false);
        }
        abelian_rows.push(
            claimed
                .abelian_image()
                .0
                .iter()
                .map(Exp::to_bigint)
                .collect::<Vec<BigInt>>(),
        );
    }
    let relators = quotient_relators
        .iter()
        .map(|r| Word::parse(&free, r).map(|w| w.syllables().to_vec()))
        .collect::<Result<Vec<_>>>()
        .map_err(|e| malformed(format!("quotient relator: {e}")))?;
    let quotient = Presentation {
        generators: free_names(n),
        relators,
    };
    if abelianization_invariants(&quotient).free_rank < 2 {
        return Ok(false);
    }
    // The images must span a rank >= 2 sublattice, so they generate a
    // non-abelian free subgroup of F_n.
    let span = if abelian_rows.is_empty() {
        0
    } else {
        smith_normal_form(&abelian_rows).rank()
    };
    Ok(span >= 2)
}
