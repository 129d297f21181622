//! Deciding equality in an EAFC group by recursion over its decomposition,
//! plus membership tests built on top of it.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use serde::{Deserialize, Serialize};

use crate::artin_system::ArtinSystem;
use crate::decompose::{shape_of, Factor, Shape, SplitRule};
use crate::dihedral;
use crate::error::{Error, Result};
use crate::subgroups::G0Map;
use crate::vertex_set::VertexSet;
use crate::words::{
    concat_raw, exponent_sum_raw, extend_reduced, invert_raw, retract_raw, same_host, Syllable,
    Word,
};

/// Side of an amalgam `G_A *_{G_C} G_B` with `A = Star(v)`, `B = V \ {v}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    A,
    B,
}

/// Alternating factorization of a word at an amalgam node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyllableDecomposition {
    pub vertex: usize,
    pub pieces: Vec<(Side, Word)>,
}

/// Word problem solver for one EAFC system.
///
/// Per-subset decomposition steps are cached; the cache is the only shared
/// state and is safe to use from several threads.
#[derive(Debug)]
pub struct WordProblem {
    sys: Arc<ArtinSystem>,
    rule: SplitRule,
    memo: RwLock<HashMap<VertexSet, Arc<Shape>>>,
}

impl WordProblem {
    pub fn new(sys: Arc<ArtinSystem>) -> Result<Self> {
        Self::with_rule(sys, SplitRule::MinStar)
    }

    pub fn with_rule(sys: Arc<ArtinSystem>, rule: SplitRule) -> Result<Self> {
        sys.check_eafc()?;
        Ok(Self {
            sys,
            rule,
            memo: RwLock::new(HashMap::new()),
        })
    }

    pub fn system(&self) -> &Arc<ArtinSystem> {
        &self.sys
    }

    pub fn rule(&self) -> SplitRule {
        self.rule
    }

    fn check_host(&self, w: &Word) -> Result<()> {
        if same_host(&self.sys, w.host()) {
            Ok(())
        } else {
            Err(Error::HostMismatch)
        }
    }

    fn shape(&self, set: &VertexSet) -> Arc<Shape> {
        if let Some(s) = self.memo.read().expect("memo lock").get(set) {
            return Arc::clone(s);
        }
        let shape = Arc::new(shape_of(&self.sys, set, self.rule));
        let mut memo = self.memo.write().expect("memo lock");
        Arc::clone(memo.entry(set.clone()).or_insert(shape))
    }

    pub fn is_trivial(&self, w: &Word) -> Result<bool> {
        self.check_host(w)?;
        Ok(self.trivial_raw(w.syllables()))
    }

    pub fn are_equal(&self, w1: &Word, w2: &Word) -> Result<bool> {
        self.check_host(w1)?;
        self.check_host(w2)?;
        Ok(self.equal_raw(w1.syllables(), w2.syllables()))
    }

    /// `w ∈ G_S`, decided as `w = ρ_S(w)`.
    pub fn in_standard_parabolic(&self, s: &VertexSet, w: &Word) -> Result<bool> {
        self.check_host(w)?;
        Ok(self.in_parabolic_raw(s, w.syllables()))
    }

    /// `w ∈ c G_S c^-1`, decided as `c^-1 w c ∈ G_S`.
    pub fn in_parabolic(&self, s: &VertexSet, c: &Word, w: &Word) -> Result<bool> {
        self.check_host(c)?;
        let conj = w.conjugate(&c.invert())?;
        self.in_standard_parabolic(s, &conj)
    }

    /// Whether `g` commutes with every generator in `s`.
    pub fn in_quasi_centralizer(&self, s: &VertexSet, g: &Word) -> Result<bool> {
        self.check_host(g)?;
        let gi = invert_raw(g.syllables());
        Ok(s.iter().all(|v| {
            let gen = [Syllable::new(v, 1)];
            let conj = concat_raw(&concat_raw(g.syllables(), &gen), &gi);
            self.equal_raw(&conj, &gen)
        }))
    }

    /// Records `(w^n ∈ cG_Sc^-1, w ∈ cG_Sc^-1)` for `n = 1..=n_max`.
    pub fn check_root_closure(
        &self,
        s: &VertexSet,
        c: &Word,
        w: &Word,
        n_max: u32,
    ) -> Result<RootClosureReport> {
        let member = self.in_parabolic(s, c, w)?;
        let mut rows = Vec::with_capacity(n_max as usize);
        for n in 1..=n_max {
            let power_member = self.in_parabolic(s, c, &w.power(i64::from(n)))?;
            rows.push(RootClosureRow {
                n,
                power_member,
                member,
            });
        }
        Ok(RootClosureReport { rows })
    }

    /// For `x, y, z ∈ G_0`: `xy = yx` and `zxz^-1 = y` should force `x = y`.
    pub fn check_equation_property(
        &self,
        g0: &G0Map,
        x: &Word,
        y: &Word,
        z: &Word,
    ) -> Result<EquationOutcome> {
        for w in [x, y, z] {
            self.check_host(w)?;
            if !g0.in_g0(w)? {
                return Ok(EquationOutcome::Vacuous);
            }
        }
        let xy = x.concat(y)?;
        let yx = y.concat(x)?;
        if !self.are_equal(&xy, &yx)? || !self.are_equal(&x.conjugate(z)?, y)? {
            return Ok(EquationOutcome::Vacuous);
        }
        Ok(if self.are_equal(x, y)? {
            EquationOutcome::Confirmed
        } else {
            EquationOutcome::Violation
        })
    }

    /// Initial side assignment at the top node, when that node is an amalgam.
    pub fn syllable_decomposition(&self, w: &Word) -> Result<Option<SyllableDecomposition>> {
        self.check_host(w)?;
        let all = self.sys.all();
        match &*self.shape(&all) {
            Shape::Amalgam { vertex, link, .. } => Ok(Some(SyllableDecomposition {
                vertex: *vertex,
                pieces: split_sides(w.syllables(), *vertex, link)
                    .into_iter()
                    .map(|(s, p)| (s, Word::from_raw(&self.sys, p)))
                    .collect(),
            })),
            _ => Ok(None),
        }
    }

    pub(crate) fn equal_raw(&self, a: &[Syllable], b: &[Syllable]) -> bool {
        self.trivial_raw(&concat_raw(a, &invert_raw(b)))
    }

    pub(crate) fn in_parabolic_raw(&self, s: &VertexSet, w: &[Syllable]) -> bool {
        let r = retract_raw(w, s);
        r.len() == w.len() || self.equal_raw(w, &r)
    }

    pub(crate) fn trivial_raw(&self, w: &[Syllable]) -> bool {
        if w.is_empty() {
            return true;
        }
        // Even labels make the abelianization free abelian on the vertices.
        let support: VertexSet = w.iter().map(|s| s.gen).collect();
        if support.iter().any(|g| !exponent_sum_raw(w, g).is_zero()) {
            return false;
        }
        // Standard parabolics embed, so only the support matters.
        let shape = self.shape(&support);
        match &*shape {
            Shape::DirectProduct(parts) => {
                parts.iter().all(|p| self.trivial_raw(&retract_raw(w, p)))
            }
            Shape::FreeProduct(parts) => self.free_product_trivial(parts, w),
            Shape::CompleteBase(factors) => factors.iter().all(|f| match *f {
                Factor::Cyclic(v) => exponent_sum_raw(w, v).is_zero(),
                Factor::Dihedral { a, b, n } => {
                    let keep: VertexSet = [a, b].into_iter().collect();
                    let local: Vec<Syllable> = retract_raw(w, &keep)
                        .into_iter()
                        .map(|s| Syllable {
                            gen: usize::from(s.gen == b),
                            exp: s.exp,
                        })
                        .collect();
                    dihedral::is_trivial_raw(n, &local)
                }
            }),
            Shape::Amalgam { vertex, link, .. } => self.amalgam_trivial(*vertex, link, w),
        }
    }

    fn free_product_trivial(&self, parts: &[VertexSet], w: &[Syllable]) -> bool {
        let part_of = |g: usize| parts.iter().position(|p| p.contains(g)).expect("partition");
        let mut stack: Vec<(usize, Vec<Syllable>)> = Vec::new();
        for run in runs(w, part_of) {
            let (part, mut cur) = run;
            if let Some((top_part, _)) = stack.last() {
                if *top_part == part {
                    let (_, top) = stack.pop().expect("nonempty");
                    cur = concat_raw(&top, &cur);
                }
            }
            if !self.trivial_raw(&cur) {
                stack.push((part, cur));
            }
        }
        stack.is_empty()
    }

    fn amalgam_trivial(&self, vertex: usize, link: &VertexSet, w: &[Syllable]) -> bool {
        let pieces = split_sides(w, vertex, link);
        let mut stack: Vec<(Side, Vec<Syllable>)> = Vec::new();
        let mut carry: Vec<Syllable> = Vec::new();
        for (side, piece) in pieces {
            let mut cur = if stack.is_empty() && !carry.is_empty() {
                concat_raw(&std::mem::take(&mut carry), &piece)
            } else {
                piece
            };
            let mut cur_side = side;
            loop {
                if let Some((top_side, _)) = stack.last() {
                    if *top_side == cur_side {
                        let (_, top) = stack.pop().expect("nonempty");
                        cur = concat_raw(&top, &cur);
                    }
                }
                // cur lies in G_C iff it equals its retraction onto C.
                let r = retract_raw(&cur, link);
                let in_link = r.len() == cur.len() || self.equal_raw(&cur, &r);
                if !in_link {
                    stack.push((cur_side, cur));
                    break;
                }
                match stack.pop() {
                    Some((top_side, top)) => {
                        cur = concat_raw(&top, &r);
                        cur_side = top_side;
                    }
                    None => {
                        carry = r;
                        break;
                    }
                }
            }
        }
        stack.is_empty() && self.trivial_raw(&carry)
    }
}

/// Maximal runs of syllables whose generators fall in the same class.
fn runs(w: &[Syllable], class: impl Fn(usize) -> usize) -> Vec<(usize, Vec<Syllable>)> {
    let mut out: Vec<(usize, Vec<Syllable>)> = Vec::new();
    for s in w {
        let c = class(s.gen);
        match out.last_mut() {
            Some((last, run)) if *last == c => run.push(s.clone()),
            _ => out.push((c, vec![s.clone()])),
        }
    }
    out
}

/// `vertex` goes to side A, link letters join the neighbouring piece (the
/// previous one, or the next one at the start), everything else is side B.
fn split_sides(w: &[Syllable], vertex: usize, link: &VertexSet) -> Vec<(Side, Vec<Syllable>)> {
    let mut pieces: Vec<(Side, Vec<Syllable>)> = Vec::new();
    let mut leading: Vec<Syllable> = Vec::new();
    for s in w {
        if link.contains(s.gen) {
            match pieces.last_mut() {
                Some((_, p)) => p.push(s.clone()),
                None => leading.push(s.clone()),
            }
            continue;
        }
        let side = if s.gen == vertex { Side::A } else { Side::B };
        match pieces.last_mut() {
            Some((last, p)) if *last == side => p.push(s.clone()),
            _ => {
                let mut p = std::mem::take(&mut leading);
                p.push(s.clone());
                pieces.push((side, p));
            }
        }
    }
    if pieces.is_empty() && !leading.is_empty() {
        // Entirely inside the link; either side holds it.
        pieces.push((Side::B, leading));
    }
    pieces
        .into_iter()
        .map(|(side, p)| {
            let mut reduced = Vec::with_capacity(p.len());
            extend_reduced(&mut reduced, &p);
            (side, reduced)
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootClosureRow {
    pub n: u32,
    pub power_member: bool,
    pub member: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootClosureReport {
    pub rows: Vec<RootClosureRow>,
}

impl RootClosureReport {
    /// Exponents `n` with `w^n` in the subgroup but `w` outside it.
    pub fn violations(&self) -> Vec<u32> {
        self.rows
            .iter()
            .filter(|r| r.power_member && !r.member)
            .map(|r| r.n)
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EquationOutcome {
    Vacuous,
    Confirmed,
    Violation,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::artin_relator;
    use proptest::prelude::*;

    fn solver(v: &[&str], e: &[(&str, &str, u64)]) -> WordProblem {
        WordProblem::new(Arc::new(ArtinSystem::new(v, e).unwrap())).unwrap()
    }

    fn w(s: &WordProblem, text: &str) -> Word {
        Word::parse(s.system(), text).unwrap()
    }

    /// Right-angled normal form by piling: one stack per generator.
    fn piling_trivial(sys: &ArtinSystem, word: &[Syllable]) -> bool {
        #[derive(Clone, Copy, PartialEq)]
        enum Bead {
            Letter(bool),
            Marker,
        }
        let n = sys.vertex_count();
        let mut piles: Vec<Vec<Bead>> = vec![Vec::new(); n];
        for s in word {
            let pos = s.exp.is_positive();
            let count = s.exp.abs().to_i64().unwrap();
            for _ in 0..count {
                let x = s.gen;
                if piles[x].last() == Some(&Bead::Letter(!pos)) {
                    piles[x].pop();
                    for (y, pile) in piles.iter_mut().enumerate() {
                        if y != x && !sys.commute(x, y) {
                            pile.pop();
                        }
                    }
                } else {
                    piles[x].push(Bead::Letter(pos));
                    for (y, pile) in piles.iter_mut().enumerate() {
                        if y != x && !sys.commute(x, y) {
                            pile.push(Bead::Marker);
                        }
                    }
                }
            }
        }
        piles.iter().all(|p| p.is_empty())
    }

    #[test]
    fn relators_are_trivial() {
        let s = solver(
            &["a", "b", "c", "d"],
            &[("a", "b", 4), ("b", "c", 2), ("c", "d", 6), ("a", "c", 2)],
        );
        for e in s.system().edges() {
            let r = artin_relator(s.system(), e.u, e.v).unwrap();
            assert!(s.is_trivial(&r).unwrap());
        }
        assert!(!s.is_trivial(&w(&s, "a")).unwrap());
    }

    #[test]
    fn square_commutator_of_diagonal() {
        let s = solver(
            &["a", "b", "c", "d"],
            &[("a", "b", 2), ("b", "c", 2), ("c", "d", 2), ("d", "a", 2)],
        );
        assert!(!s.is_trivial(&w(&s, "a c a^-1 c^-1")).unwrap());
        assert!(s.is_trivial(&w(&s, "a b a^-1 b^-1")).unwrap());
        assert!(s.is_trivial(&w(&s, "a b c b^-1 c^-1 a^-1")).unwrap());
        assert!(!s.is_trivial(&w(&s, "a c b a^-1 c^-1 b^-1")).unwrap());
    }

    #[test]
    fn equality_examples() {
        for n in 1..=3u64 {
            let s = solver(&["a", "b"], &[("a", "b", 2 * n)]);
            let ab = w(&s, "a b").power(n as i64);
            let ba = w(&s, "b a").power(n as i64);
            assert!(s.are_equal(&ab, &ba).unwrap());
            assert!(!s.are_equal(&w(&s, "a"), &w(&s, "b")).unwrap());
            let a = w(&s, "a");
            assert!(s.are_equal(&a.conjugate(&ab).unwrap(), &a).unwrap());
        }
    }

    #[test]
    fn parabolic_examples() {
        let f2 = solver(&["a", "b"], &[]);
        let sa = VertexSet::singleton(0);
        assert!(f2.in_standard_parabolic(&sa, &w(&f2, "a^3")).unwrap());
        assert!(!f2.in_standard_parabolic(&sa, &w(&f2, "b")).unwrap());
        assert!(!f2.in_standard_parabolic(&sa, &w(&f2, "b a b^-1")).unwrap());
        let c = w(&f2, "b a^2");
        assert!(f2
            .in_parabolic(&sa, &c, &w(&f2, "a^5").conjugate(&c).unwrap())
            .unwrap());
        assert!(!f2.in_parabolic(&sa, &c, &w(&f2, "b")).unwrap());
        assert_eq!(
            f2.in_parabolic(&sa, &Word::identity(f2.system()), &w(&f2, "a b"))
                .unwrap(),
            f2.in_standard_parabolic(&sa, &w(&f2, "a b")).unwrap()
        );
        // In a commuting pair, b a b^-1 = a.
        let z2 = solver(&["a", "b"], &[("a", "b", 2)]);
        assert!(z2.in_standard_parabolic(&sa, &w(&z2, "b a b^-1")).unwrap());
    }

    #[test]
    fn quasi_centralizer_examples() {
        let d4 = solver(&["a", "b"], &[("a", "b", 4)]);
        let s = d4.system().all();
        assert!(d4
            .in_quasi_centralizer(&s, &Word::identity(d4.system()))
            .unwrap());
        assert!(d4.in_quasi_centralizer(&s, &w(&d4, "a b a b")).unwrap());
        assert!(!d4.in_quasi_centralizer(&s, &w(&d4, "a")).unwrap());
    }

    #[test]
    fn root_closure_examples() {
        let f2 = solver(&["a", "b"], &[]);
        let id = Word::identity(f2.system());
        let r = f2
            .check_root_closure(&VertexSet::singleton(1), &id, &w(&f2, "a"), 4)
            .unwrap();
        assert!(r.rows.iter().all(|row| !row.member && !row.power_member));
        let r = f2
            .check_root_closure(&VertexSet::singleton(0), &id, &w(&f2, "a^2"), 3)
            .unwrap();
        assert!(r.rows.iter().all(|row| row.member && row.power_member));
        assert!(r.violations().is_empty());
    }

    #[test]
    fn equation_examples() {
        let d4 = solver(&["a", "b"], &[("a", "b", 4)]);
        let g0 = G0Map::new(Arc::clone(d4.system()));
        let id = Word::identity(d4.system());
        assert_eq!(
            d4.check_equation_property(&g0, &id, &id, &id).unwrap(),
            EquationOutcome::Confirmed
        );
        let b = w(&d4, "b");
        assert_eq!(
            d4.check_equation_property(&g0, &b, &b, &id).unwrap(),
            EquationOutcome::Vacuous
        );
        let x = w(&d4, "a b a b");
        let z = w(&d4, "a");
        assert_eq!(
            d4.check_equation_property(&g0, &x, &x, &z.power(2))
                .unwrap(),
            EquationOutcome::Confirmed
        );
    }

    #[test]
    fn syllable_decomposition_alternates() {
        let s = solver(&["a", "b", "c"], &[("a", "b", 4), ("b", "c", 4)]);
        let d = s
            .syllable_decomposition(&w(&s, "b a c b a^-1 b"))
            .unwrap()
            .unwrap();
        assert_eq!(d.vertex, 0);
        let sides: Vec<Side> = d.pieces.iter().map(|(s, _)| *s).collect();
        assert_eq!(sides, vec![Side::A, Side::B, Side::A]);
        assert_eq!(d.pieces[0].1.to_string(), "b a");
        assert_eq!(d.pieces[1].1.to_string(), "c b");
        assert_eq!(d.pieces[2].1.to_string(), "a^-1 b");
    }

    #[test]
    fn wrong_host_is_rejected() {
        let s = solver(&["a"], &[]);
        let other = solver(&["a", "b"], &[]);
        assert!(matches!(
            s.is_trivial(&w(&other, "a")),
            Err(Error::HostMismatch)
        ));
    }

    fn raag_strategy() -> impl Strategy<Value = (ArtinSystem, Vec<(usize, i64)>)> {
        (1usize..=4)
            .prop_flat_map(|n| {
                let pairs: Vec<(usize, usize)> = (0..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .collect();
                let np = pairs.len();
                (
                    Just(n),
                    Just(pairs),
                    proptest::collection::vec(any::<bool>(), np),
                    proptest::collection::vec((0..n, prop_oneof![Just(-1i64), Just(1i64)]), 0..14),
                )
            })
            .prop_map(|(n, pairs, on, letters)| {
                let names: Vec<String> = (0..n).map(|i| format!("g{i}")).collect();
                let edges: Vec<(String, String, u64)> = pairs
                    .iter()
                    .zip(on)
                    .filter(|(_, b)| *b)
                    .map(|(&(i, j), _)| (names[i].clone(), names[j].clone(), 2))
                    .collect();
                (ArtinSystem::new(&names, &edges).unwrap(), letters)
            })
    }

    proptest! {
        #[test]
        fn agrees_with_piling((sys, letters) in raag_strategy()) {
            let sys = Arc::new(sys);
            let wp = WordProblem::new(Arc::clone(&sys)).unwrap();
            let word = Word::from_syllables(&sys, letters.iter().map(|&(g, e)| Syllable::new(g, e))).unwrap();
            // Make trivial words common by appending an inverse in shuffled order.
            let doubled = word.concat(&word.invert()).unwrap();
            prop_assert_eq!(wp.is_trivial(&word).unwrap(), piling_trivial(&sys, word.syllables()));
            prop_assert!(wp.is_trivial(&doubled).unwrap());
        }

        #[test]
        fn split_rule_independence(
            letters in proptest::collection::vec((0usize..4, -2i64..=2), 0..12),
            pref in 0usize..4,
        ) {
            let sys = Arc::new(ArtinSystem::new(
                &["a", "b", "c", "d"],
                &[("a", "b", 4), ("b", "c", 2), ("c", "d", 6), ("a", "c", 2)],
            ).unwrap());
            let word = Word::from_syllables(&sys, letters.iter().filter(|l| l.1 != 0).map(|&(g, e)| Syllable::new(g, e))).unwrap();
            let probe = word.concat(&artin_relator(&sys, 0, 1).unwrap()).unwrap().concat(&word.invert()).unwrap();
            let base = WordProblem::new(Arc::clone(&sys)).unwrap();
            let alt = WordProblem::with_rule(Arc::clone(&sys), SplitRule::Prefer(pref)).unwrap();
            let max = WordProblem::with_rule(Arc::clone(&sys), SplitRule::MaxStar).unwrap();
            for x in [&word, &probe] {
                let v = base.is_trivial(x).unwrap();
                prop_assert_eq!(v, alt.is_trivial(x).unwrap());
                prop_assert_eq!(v, max.is_trivial(x).unwrap());
            }
            prop_assert!(base.is_trivial(&probe).unwrap());
        }

        #[test]
        fn retraction_compatibility(
            letters in proptest::collection::vec((0usize..4, -2i64..=2), 0..10),
            s_bits in 0u8..16,
            t_bits in 0u8..16,
        ) {
            let sys = Arc::new(ArtinSystem::new(
                &["a", "b", "c", "d"],
                &[("a", "b", 4), ("b", "c", 2), ("c", "d", 4), ("a", "c", 2)],
            ).unwrap());
            let wp = WordProblem::new(Arc::clone(&sys)).unwrap();
            let s: VertexSet = (0..4).filter(|i| s_bits & (1 << i) != 0).collect();
            let t: VertexSet = (0..4).filter(|i| t_bits & (1 << i) != 0).collect();
            let word = Word::from_syllables(&sys, letters.iter().filter(|l| l.1 != 0).map(|&(g, e)| Syllable::new(g, e))).unwrap();
            if wp.in_standard_parabolic(&s, &word).unwrap() {
                let r = word.retraction(&t);
                prop_assert!(wp.in_standard_parabolic(&s.intersection(&t), &r).unwrap());
            }
        }

        #[test]
        fn congruence(
            a in proptest::collection::vec((0usize..3, -2i64..=2), 0..6),
            c in proptest::collection::vec((0usize..3, -2i64..=2), 0..4),
        ) {
            let sys = Arc::new(ArtinSystem::new(&["a", "b", "c"], &[("a", "b", 4), ("b", "c", 6)]).unwrap());
            let wp = WordProblem::new(Arc::clone(&sys)).unwrap();
            let mk = |v: &[(usize, i64)]| Word::from_syllables(&sys, v.iter().filter(|l| l.1 != 0).map(|&(g, e)| Syllable::new(g, e))).unwrap();
            let x = mk(&a);
            let c = mk(&c);
            // x and x·relator are equal; the relation must survive concat and conjugation.
            let y = x.concat(&artin_relator(&sys, 1, 2).unwrap()).unwrap();
            prop_assert!(wp.are_equal(&x, &x).unwrap());
            prop_assert!(wp.are_equal(&x, &y).unwrap() && wp.are_equal(&y, &x).unwrap());
            prop_assert!(wp.are_equal(&x.concat(&c).unwrap(), &y.concat(&c).unwrap()).unwrap());
            prop_assert!(wp.are_equal(&x.conjugate(&c).unwrap(), &y.conjugate(&c).unwrap()).unwrap());
        }
    }
}
