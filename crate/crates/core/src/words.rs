//! Freely reduced words over the generators of an [`ArtinSystem`].
//!
//! Free reduction is the only normalization performed here. Equality in the
//! group is decided by [`crate::word_problem`].

use std::fmt;
use std::sync::Arc;

use crate::artin_system::ArtinSystem;
use crate::error::{Error, Result};
use crate::exponent::Exp;
use crate::vertex_set::VertexSet;

/// A power `gen^exp` with `exp != 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Syllable {
    pub gen: usize,
    pub exp: Exp,
}

impl Syllable {
    pub fn new(gen: usize, exp: impl Into<Exp>) -> Self {
        Self {
            gen,
            exp: exp.into(),
        }
    }
}

/// Appends `gen^exp`, merging with or cancelling against the last syllable.
#[inline]
pub(crate) fn push_syllable(out: &mut Vec<Syllable>, gen: usize, exp: &Exp) {
    if exp.is_zero() {
        return;
    }
    if let Some(last) = out.last_mut() {
        if last.gen == gen {
            last.exp += exp;
            if last.exp.is_zero() {
                out.pop();
            }
            return;
        }
    }
    out.push(Syllable {
        gen,
        exp: exp.clone(),
    });
}

pub(crate) fn extend_reduced(out: &mut Vec<Syllable>, tail: &[Syllable]) {
    for s in tail {
        push_syllable(out, s.gen, &s.exp);
    }
}

pub(crate) fn concat_raw(a: &[Syllable], b: &[Syllable]) -> Vec<Syllable> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    out.extend_from_slice(a);
    extend_reduced(&mut out, b);
    out
}

pub(crate) fn invert_raw(a: &[Syllable]) -> Vec<Syllable> {
    a.iter()
        .rev()
        .map(|s| Syllable {
            gen: s.gen,
            exp: -&s.exp,
        })
        .collect()
}

pub(crate) fn retract_raw(a: &[Syllable], keep: &VertexSet) -> Vec<Syllable> {
    let mut out = Vec::with_capacity(a.len());
    for s in a {
        if keep.contains(s.gen) {
            push_syllable(&mut out, s.gen, &s.exp);
        }
    }
    out
}

pub(crate) fn exponent_sum_raw(a: &[Syllable], gen: usize) -> Exp {
    let mut total = Exp::ZERO;
    for s in a.iter().filter(|s| s.gen == gen) {
        total += &s.exp;
    }
    total
}

/// Splits `w = u v u^-1` with `v` cyclically reduced at the syllable level.
fn cyclic_split(a: &[Syllable]) -> (&[Syllable], &[Syllable]) {
    let (mut i, mut j) = (0, a.len());
    while j >= i + 2 && a[i].gen == a[j - 1].gen && a[i].exp == -&a[j - 1].exp {
        i += 1;
        j -= 1;
    }
    (&a[..i], &a[i..j])
}

pub(crate) fn power_raw(a: &[Syllable], k: &Exp) -> Vec<Syllable> {
    if k.is_zero() || a.is_empty() {
        return Vec::new();
    }
    let (u, v) = cyclic_split(a);
    let mut out = u.to_vec();
    if v.len() == 1 {
        push_syllable(&mut out, v[0].gen, &(&v[0].exp * k));
    } else {
        let base = if k.is_positive() {
            v.to_vec()
        } else {
            invert_raw(v)
        };
        let reps = k
            .abs()
            .to_i64()
            .and_then(|r| usize::try_from(r).ok())
            .expect("power of a non-syllable word with an exponent beyond usize");
        for _ in 0..reps {
            extend_reduced(&mut out, &base);
        }
    }
    extend_reduced(&mut out, &invert_raw(u));
    out
}

/// A group element of `G_Γ` given by a freely reduced word.
#[derive(Clone)]
pub struct Word {
    host: Arc<ArtinSystem>,
    syllables: Vec<Syllable>,
}

impl PartialEq for Word {
    fn eq(&self, other: &Self) -> bool {
        same_host(&self.host, &other.host) && self.syllables == other.syllables
    }
}

impl Eq for Word {}

pub(crate) fn same_host(a: &Arc<ArtinSystem>, b: &Arc<ArtinSystem>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl Word {
    pub fn identity(host: &Arc<ArtinSystem>) -> Self {
        Self {
            host: host.clone(),
            syllables: Vec::new(),
        }
    }

    pub fn generator(host: &Arc<ArtinSystem>, name: &str) -> Result<Self> {
        let g = host.index_of(name)?;
        Ok(Self::from_raw(host, vec![Syllable::new(g, 1)]))
    }

    /// Builds a word from arbitrary syllables, freely reducing them.
    pub fn from_syllables<I>(host: &Arc<ArtinSystem>, syllables: I) -> Result<Self>
    where
        I: IntoIterator<Item = Syllable>,
    {
        let mut out = Vec::new();
        for s in syllables {
            if s.gen >= host.vertex_count() {
                return Err(Error::UnknownVertex(format!("#{}", s.gen)));
            }
            push_syllable(&mut out, s.gen, &s.exp);
        }
        Ok(Self::from_raw(host, out))
    }

    /// Wraps syllables already known to be freely reduced over `host`.
    pub(crate) fn from_raw(host: &Arc<ArtinSystem>, syllables: Vec<Syllable>) -> Self {
        debug_assert!(syllables.windows(2).all(|w| w[0].gen != w[1].gen));
        debug_assert!(syllables.iter().all(|s| !s.exp.is_zero()));
        Self {
            host: host.clone(),
            syllables,
        }
    }

    /// Parses whitespace-separated tokens `name` or `name^k` (`k` a nonzero
    /// integer). The token `1` and the empty string denote the identity.
    pub fn parse(host: &Arc<ArtinSystem>, text: &str) -> Result<Self> {
        let mut out = Vec::new();
        for (position, token) in text.split_whitespace().enumerate() {
            if token == "1" {
                continue;
            }
            let err = |reason: &str| Error::WordParse {
                position,
                token: token.to_string(),
                reason: reason.to_string(),
            };
            let (name, exp) = match token.split_once('^') {
                Some((name, k)) => {
                    let k: Exp = k.parse().map_err(|_| err("malformed exponent"))?;
                    if k.is_zero() {
                        return Err(err("exponent 0"));
                    }
                    (name, k)
                }
                None => (token, Exp::ONE),
            };
            let gen = host.index_of(name).map_err(|_| err("unknown generator"))?;
            push_syllable(&mut out, gen, &exp);
        }
        Ok(Self::from_raw(host, out))
    }

    pub fn host(&self) -> &Arc<ArtinSystem> {
        &self.host
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Sum of absolute exponents.
    pub fn letter_length(&self) -> Exp {
        let mut total = Exp::ZERO;
        for s in &self.syllables {
            total += &s.exp.abs();
        }
        total
    }

    fn check_host(&self, other: &Word) -> Result<()> {
        if same_host(&self.host, &other.host) {
            Ok(())
        } else {
            Err(Error::HostMismatch)
        }
    }

    pub fn invert(&self) -> Word {
        Self::from_raw(&self.host, invert_raw(&self.syllables))
    }

    pub fn concat(&self, other: &Word) -> Result<Word> {
        self.check_host(other)?;
        Ok(Self::from_raw(
            &self.host,
            concat_raw(&self.syllables, &other.syllables),
        ))
    }

    /// `c · self · c^-1`.
    pub fn conjugate(&self, c: &Word) -> Result<Word> {
        self.check_host(c)?;
        let mut out = c.syllables.clone();
        extend_reduced(&mut out, &self.syllables);
        extend_reduced(&mut out, &invert_raw(&c.syllables));
        Ok(Self::from_raw(&self.host, out))
    }

    /// `self^k`. Words conjugate to a single syllable take any exponent; other
    /// words are expanded, so `|k|` must fit in memory.
    pub fn power(&self, k: impl Into<Exp>) -> Word {
        Self::from_raw(&self.host, power_raw(&self.syllables, &k.into()))
    }

    /// `ρ_S`: deletes generators outside `keep`, then freely reduces.
    pub fn retraction(&self, keep: &VertexSet) -> Word {
        Self::from_raw(&self.host, retract_raw(&self.syllables, keep))
    }

    pub fn exponent_sum(&self, gen: usize) -> Exp {
        exponent_sum_raw(&self.syllables, gen)
    }

    pub fn abelian_image(&self) -> AbelianImage {
        let mut v = vec![Exp::ZERO; self.host.vertex_count()];
        for s in &self.syllables {
            v[s.gen] += &s.exp;
        }
        AbelianImage(v)
    }

    /// Image under `v ↦ 1` for every vertex.
    pub fn total_exponent(&self) -> Exp {
        let mut total = Exp::ZERO;
        for s in &self.syllables {
            total += &s.exp;
        }
        total
    }

    /// Generators occurring in the word.
    pub fn support(&self) -> VertexSet {
        self.syllables.iter().map(|s| s.gen).collect()
    }

    /// Rebinds to another host with the same vertex names in the same order
    /// as far as this word needs them.
    pub fn transfer(&self, host: &Arc<ArtinSystem>) -> Result<Word> {
        let syllables = self
            .syllables
            .iter()
            .map(|s| {
                host.index_of(self.host.name(s.gen)).map(|g| Syllable {
                    gen: g,
                    exp: s.exp.clone(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Word::from_syllables(host, syllables)
    }
}

/// `prod(u, v, m) · prod(v, u, m)^-1` for the edge `{u, v}`.
pub fn artin_relator(host: &Arc<ArtinSystem>, u: usize, v: usize) -> Result<Word> {
    let m = host
        .label(u, v)
        .ok_or_else(|| Error::NotAnEdge(host.name(u).into(), host.name(v).into()))?;
    let prod = |first: usize, second: usize| {
        (0..m).map(move |i| Syllable::new(if i % 2 == 0 { first } else { second }, 1))
    };
    let mut out = Vec::new();
    for s in prod(u, v) {
        push_syllable(&mut out, s.gen, &s.exp);
    }
    let back: Vec<Syllable> = prod(v, u).collect();
    extend_reduced(&mut out, &invert_raw(&back));
    Ok(Word::from_raw(host, out))
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return write!(f, "1");
        }
        for (i, s) in self.syllables.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", self.host.name(s.gen))?;
            if s.exp != Exp::ONE {
                write!(f, "^{}", s.exp)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

/// Exponent-sum vector indexed by the host's vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianImage(pub Vec<Exp>);

impl AbelianImage {
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Exp::is_zero)
    }

    pub fn total(&self) -> Exp {
        let mut t = Exp::ZERO;
        for e in &self.0 {
            t += e;
        }
        t
    }
}
