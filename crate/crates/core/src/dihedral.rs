//! Even dihedral Artin groups `D_2n = <a, b | (ab)^n = (ba)^n>`.
//!
//! Two independent triviality tests are provided:
//!
//! * the production route substitutes `x = ab`, so the group becomes
//!   `<a, x | x^n = a^-1 x^n a>`; it then reduces in `Z * C_n`, the quotient
//!   by the central subgroup `<x^n>`, and tracks the integer exponent sum of
//!   `x` to recover the central part;
//! * the oracle route rewrites into the kernel of `a, b ↦ 1`, which is free
//!   on `a_0 .. a_{2n-2}` where `a_i = b^i a b^-(i+1)`.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::artin_system::ArtinSystem;
use crate::error::{Error, Result};
use crate::exponent::Exp;
use crate::words::{push_syllable, Syllable, Word};

const A: usize = 0;
const B: usize = 1;
const X: usize = 1;

/// The group `D_2n` with named generators.
#[derive(Debug, Clone)]
pub struct DihedralContext {
    n: u64,
    system: Arc<ArtinSystem>,
}

impl DihedralContext {
    pub fn new(n: u64) -> Result<Self> {
        Self::with_names(n, "a", "b")
    }

    pub fn with_names(n: u64, a: &str, b: &str) -> Result<Self> {
        if n == 0 {
            return Err(Error::Input(
                "dihedral half-label must be at least 1".into(),
            ));
        }
        let m = n
            .checked_mul(2)
            .ok_or_else(|| Error::Input("dihedral half-label too large".into()))?;
        let system = Arc::new(ArtinSystem::new(&[a, b], &[(a, b, m)])?);
        Ok(Self { n, system })
    }

    /// Half-label `n`, so the edge label is `2n`.
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn system(&self) -> &Arc<ArtinSystem> {
        &self.system
    }

    pub fn word(&self, text: &str) -> Result<Word> {
        Word::parse(&self.system, text)
    }

    fn ab(&self) -> Word {
        Word::from_raw(&self.system, vec![Syllable::new(A, 1), Syllable::new(B, 1)])
    }

    /// Substitutes `b ↦ a^-1 x`.
    pub fn to_ax(&self, w: &Word) -> AxWord {
        AxWord(to_ax_raw(w.syllables()))
    }

    pub fn central_coords(&self, w: &AxWord) -> CentralCoords {
        central_coords_raw(self.n, &w.0)
    }

    /// Triviality through the central-extension route.
    pub fn is_trivial(&self, w: &Word) -> bool {
        is_trivial_raw(self.n, w.syllables())
    }

    /// Rewrites `w = k · b^e` with `k` in the free kernel of `a, b ↦ 1`.
    pub fn semidirect_coords(&self, w: &Word) -> SemidirectCoords {
        semidirect_coords_raw(self.n, w.syllables())
    }

    /// Image in `C_n` under `a ↦ 0`, `ab ↦ 1`: the exponent sum of `b` mod `n`.
    pub fn cn_quotient_image(&self, w: &Word) -> u64 {
        w.exponent_sum(B).rem_euclid(self.n)
    }

    /// `{ (ab)^i a (ab)^-i | 0 <= i < n }`, a free basis of the kernel of
    /// `Z * C_n → C_n`.
    pub fn kernel_basis(&self) -> Vec<Word> {
        let a = Word::from_raw(&self.system, vec![Syllable::new(A, 1)]);
        let x = self.ab();
        (0..self.n)
            .map(|i| a.conjugate(&x.power(i as i64)).expect("same host"))
            .collect()
    }

    /// Generators `(ab)^n, a, (ab) a (ab)^-1, ..` of the index-`n` normal
    /// subgroup isomorphic to `F_n × Z`.
    pub fn appropriate_gens(&self) -> Vec<Word> {
        let mut gens = vec![self.ab().power(self.n as i64)];
        gens.extend(self.kernel_basis());
        gens
    }

    /// For `w` in the `F_n × Z` subgroup, its image in `F_n` written over the
    /// basis of [`kernel_basis`](Self::kernel_basis) as `(basis index,
    /// exponent)` pairs. `None` when `w` lies outside the subgroup.
    pub fn free_quotient_image(&self, w: &Word) -> Option<Vec<(usize, Exp)>> {
        let coords = central_coords_raw(self.n, &to_ax_raw(w.syllables()));
        let mut level = 0u64;
        let mut out = Vec::new();
        for s in &coords.syllables {
            match s {
                CoordSyllable::A(k) => out.push((level as usize, k.clone())),
                CoordSyllable::X(r) => level = (level + r) % self.n,
            }
        }
        (level == 0).then_some(out)
    }
}

/// A word over `{a, x}`; generator 0 is `a`, generator 1 is `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxWord(pub Vec<Syllable>);

impl fmt::Display for AxWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|s| {
                let g = if s.gen == A { "a" } else { "x" };
                if s.exp == Exp::ONE {
                    g.to_string()
                } else {
                    format!("{g}^{}", s.exp)
                }
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoordSyllable {
    /// `a^k`, `k != 0`
    A(Exp),
    /// `x^r`, `r` in `1..n`
    X(u64),
}

/// Image in `Z * C_n` plus the integer exponent sum of `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralCoords {
    pub syllables: Vec<CoordSyllable>,
    pub x_exponent_sum: Exp,
}

impl CentralCoords {
    /// Trivial iff the `Z * C_n` image is empty and the central part vanishes.
    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty() && self.x_exponent_sum.is_zero()
    }

    /// Central elements `x^(kn)` have an empty `Z * C_n` image.
    pub fn is_central(&self) -> bool {
        self.syllables.is_empty()
    }
}

/// Kernel coordinates `w = k · b^t_exponent`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemidirectCoords {
    /// Freely reduced word over the basis `a_0 .. a_{2n-2}`.
    pub kernel: Vec<(usize, Exp)>,
    pub t_exponent: Exp,
}

impl SemidirectCoords {
    pub fn is_identity(&self) -> bool {
        self.kernel.is_empty() && self.t_exponent.is_zero()
    }
}

impl fmt::Display for SemidirectCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k: Vec<String> = self
            .kernel
            .iter()
            .map(|(i, e)| {
                if *e == Exp::ONE {
                    format!("a_{i}")
                } else {
                    format!("a_{i}^{e}")
                }
            })
            .collect();
        let k = if k.is_empty() {
            "1".to_string()
        } else {
            k.join(" ")
        };
        write!(f, "{k} · t^{}", self.t_exponent)
    }
}

fn expand_count(e: &Exp) -> usize {
    e.abs()
        .to_i64()
        .and_then(|v| usize::try_from(v).ok())
        .expect("dihedral exponent too large to expand")
}

pub(crate) fn to_ax_raw(w: &[Syllable]) -> Vec<Syllable> {
    let mut out = Vec::with_capacity(w.len() * 2);
    let one = Exp::ONE;
    let minus = Exp::from(-1);
    for s in w {
        if s.gen == A {
            push_syllable(&mut out, A, &s.exp);
        } else if s.exp.is_positive() {
            for _ in 0..expand_count(&s.exp) {
                push_syllable(&mut out, A, &minus);
                push_syllable(&mut out, X, &one);
            }
        } else {
            for _ in 0..expand_count(&s.exp) {
                push_syllable(&mut out, X, &minus);
                push_syllable(&mut out, A, &one);
            }
        }
    }
    out
}

pub(crate) fn central_coords_raw(n: u64, w: &[Syllable]) -> CentralCoords {
    let mut stack: Vec<CoordSyllable> = Vec::with_capacity(w.len());
    let mut x_sum = Exp::ZERO;
    for s in w {
        if s.gen == A {
            match stack.last_mut() {
                Some(CoordSyllable::A(k)) => {
                    *k += &s.exp;
                    if k.is_zero() {
                        stack.pop();
                    }
                }
                _ => stack.push(CoordSyllable::A(s.exp.clone())),
            }
        } else {
            x_sum += &s.exp;
            let r = s.exp.rem_euclid(n);
            if r == 0 {
                continue;
            }
            match stack.last_mut() {
                Some(CoordSyllable::X(q)) => {
                    *q = (*q + r) % n;
                    if *q == 0 {
                        stack.pop();
                    }
                }
                _ => stack.push(CoordSyllable::X(r)),
            }
        }
    }
    CentralCoords {
        syllables: stack,
        x_exponent_sum: x_sum,
    }
}

/// Triviality of a word over generators 0 = `a`, 1 = `b` in `D_2n`.
pub(crate) fn is_trivial_raw(n: u64, w: &[Syllable]) -> bool {
    central_coords_raw(n, &to_ax_raw(w)).is_identity()
}

fn push_indexed(out: &mut Vec<(i64, Exp)>, idx: i64, e: &Exp) {
    if let Some(last) = out.last_mut() {
        if last.0 == idx {
            last.1 += e;
            if last.1.is_zero() {
                out.pop();
            }
            return;
        }
    }
    out.push((idx, e.clone()));
}

/// Rewriting of the kernel generators `a_j` into the basis `a_0 .. a_{2n-2}`.
///
/// From `(ab)^n = (ba)^n` conjugated by `b^i`:
/// `a_i a_{i+2} .. a_{i+2n-2} = a_{i+1} a_{i+3} .. a_{i+2n-1}`.
struct KernelRewriter {
    n: i64,
    memo: HashMap<i64, Vec<(i64, Exp)>>,
}

impl KernelRewriter {
    fn new(n: u64) -> Self {
        Self {
            n: n as i64,
            memo: HashMap::new(),
        }
    }

    fn rank(&self) -> i64 {
        2 * self.n - 1
    }

    fn product(&mut self, indices: impl Iterator<Item = i64>, inverse: bool) -> Vec<(i64, Exp)> {
        let mut out = Vec::new();
        let idx: Vec<i64> = indices.collect();
        let ordered: Vec<i64> = if inverse {
            idx.into_iter().rev().collect()
        } else {
            idx
        };
        for j in ordered {
            let w = self.basis_word(j);
            if inverse {
                for (g, e) in w.iter().rev() {
                    push_indexed(&mut out, *g, &(-e));
                }
            } else {
                for (g, e) in &w {
                    push_indexed(&mut out, *g, e);
                }
            }
        }
        out
    }

    /// `a_j` over the basis. Indices step towards the range one at a time.
    fn basis_word(&mut self, j: i64) -> Vec<(i64, Exp)> {
        if (0..self.rank()).contains(&j) {
            return vec![(j, Exp::ONE)];
        }
        if let Some(w) = self.memo.get(&j) {
            return w.clone();
        }
        let n = self.n;
        let word = if j >= self.rank() {
            // a_{i+2n-1} = (a_{i+1} a_{i+3} .. a_{i+2n-3})^-1 a_i a_{i+2} .. a_{i+2n-2}
            let i = j - (2 * n - 1);
            let mut w = self.product((0..n - 1).map(|k| i + 1 + 2 * k), true);
            let tail = self.product((0..n).map(|k| i + 2 * k), false);
            for (g, e) in &tail {
                push_indexed(&mut w, *g, e);
            }
            w
        } else {
            // a_i = a_{i+1} a_{i+3} .. a_{i+2n-1} (a_{i+2} a_{i+4} .. a_{i+2n-2})^-1
            let i = j;
            let mut w = self.product((0..n).map(|k| i + 1 + 2 * k), false);
            let tail = self.product((0..n - 1).map(|k| i + 2 + 2 * k), true);
            for (g, e) in &tail {
                push_indexed(&mut w, *g, e);
            }
            w
        };
        self.memo.insert(j, word.clone());
        word
    }
}

pub(crate) fn semidirect_coords_raw(n: u64, w: &[Syllable]) -> SemidirectCoords {
    // Schreier rewriting over the transversal b^i.
    let mut raw: Vec<(i64, Exp)> = Vec::new();
    let mut level: i64 = 0;
    let step = |e: &Exp| e.to_i64().expect("dihedral exponent too large to expand");
    for s in w {
        let k = step(&s.exp);
        if s.gen == B {
            level += k;
        } else if k > 0 {
            for _ in 0..k {
                push_indexed(&mut raw, level, &Exp::ONE);
                level += 1;
            }
        } else {
            for _ in 0..-k {
                level -= 1;
                push_indexed(&mut raw, level, &Exp::from(-1));
            }
        }
    }
    let mut rw = KernelRewriter::new(n);
    let mut kernel: Vec<(i64, Exp)> = Vec::new();
    for (j, e) in raw {
        let basis = rw.basis_word(j);
        let reps = expand_count(&e);
        for _ in 0..reps {
            if e.is_positive() {
                for (g, f) in &basis {
                    push_indexed(&mut kernel, *g, f);
                }
            } else {
                for (g, f) in basis.iter().rev() {
                    push_indexed(&mut kernel, *g, &(-f));
                }
            }
        }
    }
    SemidirectCoords {
        kernel: kernel.into_iter().map(|(g, e)| (g as usize, e)).collect(),
        t_exponent: Exp::from(level),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(n: u64) -> DihedralContext {
        DihedralContext::new(n).unwrap()
    }

    fn relator(c: &DihedralContext) -> Word {
        let ab = c.word("a b").unwrap().power(c.n() as i64);
        let ba = c.word("b a").unwrap().power(c.n() as i64);
        ab.concat(&ba.invert()).unwrap()
    }

    #[test]
    fn to_ax_examples() {
        let c = ctx(2);
        assert_eq!(c.to_ax(&c.word("b").unwrap()).to_string(), "a^-1 x");
        assert_eq!(c.to_ax(&c.word("a b").unwrap()).to_string(), "x");
        let r = c.to_ax(&relator(&c));
        assert!(c.central_coords(&r).is_identity());
    }

    #[test]
    fn central_coords_examples() {
        let c = ctx(2);
        let xn = AxWord(vec![Syllable::new(X, 2)]);
        let cc = c.central_coords(&xn);
        assert!(cc.syllables.is_empty());
        assert_eq!(cc.x_exponent_sum, Exp::from(2));
        assert!(!cc.is_identity());
        assert!(c.central_coords(&AxWord(vec![])).is_identity());
        let comm = AxWord(vec![
            Syllable::new(A, 1),
            Syllable::new(X, 1),
            Syllable::new(A, -1),
            Syllable::new(X, -1),
        ]);
        let cc = c.central_coords(&comm);
        assert!(!cc.syllables.is_empty());
        // the same element written over {a, b}: x = ab
        let over_ab = c.word("a a b a^-1 b^-1 a^-1").unwrap();
        assert!(!c.semidirect_coords(&over_ab).is_identity());
    }

    #[test]
    fn triviality_examples() {
        let d4 = ctx(2);
        assert!(d4.is_trivial(&relator(&d4)));
        let comm = d4.word("a b a^-1 b^-1").unwrap();
        assert!(!d4.is_trivial(&comm));
        assert!(!d4.semidirect_coords(&comm).is_identity());
        let d2 = ctx(1);
        assert!(d2.is_trivial(&d2.word("a b a^-1 b^-1").unwrap()));
        assert!(d2.is_trivial(&d2.word("a^2 b^-1 a^-2 b").unwrap()));
    }

    #[test]
    fn semidirect_examples() {
        let c = ctx(2);
        let b = c.semidirect_coords(&c.word("b").unwrap());
        assert!(b.kernel.is_empty());
        assert_eq!(b.t_exponent, Exp::ONE);
        let ab = c.semidirect_coords(&c.word("a b^-1").unwrap());
        assert_eq!(ab.kernel, vec![(0, Exp::ONE)]);
        assert_eq!(ab.t_exponent, Exp::ZERO);
        assert!(!c.is_trivial(&c.word("a b^-1").unwrap()));
        for n in 1..=4 {
            let c = ctx(n);
            assert!(c.semidirect_coords(&relator(&c)).is_identity());
        }
    }

    #[test]
    fn kernel_rewriting_respects_relation() {
        // a_i a_{i+2} .. = a_{i+1} a_{i+3} .. must hold after rewriting
        for n in 1..=3u64 {
            for i in -6..6i64 {
                let mut rw = KernelRewriter::new(n);
                let lhs = rw.product((0..n as i64).map(|k| i + 2 * k), false);
                let rhs = rw.product((0..n as i64).map(|k| i + 1 + 2 * k), false);
                assert_eq!(lhs, rhs, "n={n} i={i}");
            }
        }
    }

    #[test]
    fn cn_images() {
        let c = ctx(3);
        assert_eq!(c.cn_quotient_image(&c.word("a").unwrap()), 0);
        assert_eq!(c.cn_quotient_image(&c.word("a b").unwrap()), 1);
        assert_eq!(c.cn_quotient_image(&c.word("a b").unwrap().power(3)), 0);
    }

    #[test]
    fn basis_and_appropriate_generators() {
        let d2 = ctx(1);
        let names: Vec<String> = d2.kernel_basis().iter().map(|w| w.to_string()).collect();
        assert_eq!(names, vec!["a"]);
        let gens: Vec<String> = d2
            .appropriate_gens()
            .iter()
            .map(|w| w.to_string())
            .collect();
        assert_eq!(gens, vec!["a b", "a"]);
        let d4 = ctx(2);
        let basis: Vec<String> = d4.kernel_basis().iter().map(|w| w.to_string()).collect();
        assert_eq!(basis, vec!["a", "a b a b^-1 a^-1"]);
        for n in 1..=4 {
            let c = ctx(n);
            assert_eq!(c.appropriate_gens().len() as u64, n + 1);
            for g in c.appropriate_gens() {
                assert_eq!(c.cn_quotient_image(&g), 0);
            }
        }
    }

    #[test]
    fn klein_witness() {
        let c = ctx(2);
        let x = c.word("a b").unwrap();
        let y = c.word("b a").unwrap();
        let x2y2 = x.power(2).concat(&y.power(-2)).unwrap();
        assert!(c.is_trivial(&x2y2));
        let comm = x
            .concat(&y)
            .unwrap()
            .concat(&x.invert())
            .unwrap()
            .concat(&y.invert())
            .unwrap();
        assert!(!c.is_trivial(&comm));
    }

    #[test]
    fn free_quotient_image_on_generators() {
        let c = ctx(3);
        let gens = c.appropriate_gens();
        assert_eq!(c.free_quotient_image(&gens[0]), Some(vec![]));
        for (i, g) in gens[1..].iter().enumerate() {
            assert_eq!(c.free_quotient_image(g), Some(vec![(i, Exp::ONE)]));
        }
        assert_eq!(c.free_quotient_image(&c.word("b").unwrap()), None);
    }

    #[test]
    fn rejects_zero_half_label() {
        assert!(DihedralContext::new(0).is_err());
    }
}
