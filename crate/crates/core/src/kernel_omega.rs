//! The kernel graph `Ω` for a vertex `x` adjacent to everything: `G_Ω` is
//! the kernel of `ρ_x`, embedded by `u_j ↦ x^j u x^-j`.

use std::sync::Arc;

use crate::artin_system::ArtinSystem;
use crate::error::{Error, Result};
use crate::words::{same_host, Syllable, Word};

/// Refuse to build graphs with more vertices than this.
pub const MAX_OMEGA_VERTICES: u64 = 1 << 16;

#[derive(Debug, Clone)]
pub struct OmegaSystem {
    system: Arc<ArtinSystem>,
    host: Arc<ArtinSystem>,
    type_of: Vec<usize>,
    index_of: Vec<u64>,
    apex: usize,
}

/// `Ω`-vertex name for `(u, j)`.
pub fn omega_name(u: &str, j: u64) -> String {
    format!("{u}__{j}")
}

pub fn build_omega(sys: &Arc<ArtinSystem>, x: usize) -> Result<OmegaSystem> {
    sys.check_eafc()?;
    build_unchecked(sys, x)
}

fn build_unchecked(sys: &Arc<ArtinSystem>, x: usize) -> Result<OmegaSystem> {
    if x >= sys.vertex_count() {
        return Err(Error::UnknownVertex(format!("#{x}")));
    }
    if sys.vertex_count() == 1 {
        return Err(Error::EmptyOmega);
    }
    if sys.star(x) != sys.all() {
        return Err(Error::StarNotFull(sys.name(x).into()));
    }
    let link: Vec<usize> = sys.link(x).iter().collect();
    let total: u64 = link
        .iter()
        .map(|&u| sys.label(u, x).expect("linked") / 2)
        .fold(0u64, u64::saturating_add);
    if total > MAX_OMEGA_VERTICES {
        return Err(Error::Input(format!(
            "kernel graph would have {total} vertices"
        )));
    }
    let mut names = Vec::new();
    let mut type_of = Vec::new();
    let mut index_of = Vec::new();
    for &u in &link {
        for j in 0..sys.label(u, x).expect("linked") / 2 {
            names.push(omega_name(sys.name(u), j));
            type_of.push(u);
            index_of.push(j);
        }
    }
    let mut edges = Vec::new();
    for p in 0..names.len() {
        for q in p + 1..names.len() {
            if let Some(m) = sys.label(type_of[p], type_of[q]) {
                edges.push((names[p].clone(), names[q].clone(), m));
            }
        }
    }
    let system = Arc::new(ArtinSystem::new(&names, &edges)?);
    Ok(OmegaSystem {
        system,
        host: Arc::clone(sys),
        type_of,
        index_of,
        apex: x,
    })
}

impl OmegaSystem {
    pub fn system(&self) -> &Arc<ArtinSystem> {
        &self.system
    }

    pub fn host(&self) -> &Arc<ArtinSystem> {
        &self.host
    }

    pub fn apex(&self) -> usize {
        self.apex
    }

    /// Underlying vertex of `Γ` for each `Ω`-vertex.
    pub fn type_of(&self) -> &[usize] {
        &self.type_of
    }

    /// Shift `j` of each `Ω`-vertex.
    pub fn index_of(&self) -> &[u64] {
        &self.index_of
    }

    /// Image of the `Ω`-vertex `i` in `G_Γ`.
    pub fn image_of(&self, i: usize) -> Word {
        let x = self.apex;
        let j = self.index_of[i] as i64;
        Word::from_syllables(
            &self.host,
            [
                Syllable::new(x, j),
                Syllable::new(self.type_of[i], 1),
                Syllable::new(x, -j),
            ]
            .into_iter()
            .filter(|s| !s.exp.is_zero()),
        )
        .expect("generators in range")
    }

    /// `(Ω-vertex, image word)` pairs.
    pub fn substitution_table(&self) -> Vec<(String, String)> {
        (0..self.type_of.len())
            .map(|i| {
                (
                    self.system.name(i).to_string(),
                    self.image_of(i).to_string(),
                )
            })
            .collect()
    }

    /// Substitutes `u_j ↦ x^j u x^-j` and reduces.
    pub fn embed(&self, w: &Word) -> Result<Word> {
        if !same_host(&self.system, w.host()) {
            return Err(Error::HostMismatch);
        }
        let mut out = Word::identity(&self.host);
        for s in w.syllables() {
            let x = self.apex;
            let j = self.index_of[s.gen] as i64;
            let piece = Word::from_syllables(
                &self.host,
                [
                    Syllable::new(x, j),
                    Syllable {
                        gen: self.type_of[s.gen],
                        exp: s.exp.clone(),
                    },
                    Syllable::new(x, -j),
                ]
                .into_iter()
                .filter(|s| !s.exp.is_zero()),
            )?;
            out = out.concat(&piece)?;
        }
        Ok(out)
    }
}
