#![allow(dead_code)]

use std::sync::Arc;

use eafc::{ArtinSystem, Syllable, Word};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn sys(v: &[&str], e: &[(&str, &str, u64)]) -> Arc<ArtinSystem> {
    Arc::new(ArtinSystem::new(v, e).expect("catalog graphs are valid"))
}

/// Ten small EAFC systems covering trees, cycles, chords and complete graphs.
pub fn catalog() -> Vec<(&'static str, Arc<ArtinSystem>)> {
    vec![
        ("vertex", sys(&["a"], &[])),
        ("edge4", sys(&["a", "b"], &[("a", "b", 4)])),
        (
            "path46",
            sys(&["a", "b", "c"], &[("a", "b", 4), ("b", "c", 6)]),
        ),
        (
            "tri422",
            sys(
                &["a", "b", "c"],
                &[("a", "b", 4), ("a", "c", 2), ("b", "c", 2)],
            ),
        ),
        (
            "z3",
            sys(
                &["a", "b", "c"],
                &[("a", "b", 2), ("a", "c", 2), ("b", "c", 2)],
            ),
        ),
        (
            "square4",
            sys(
                &["a", "b", "c", "d"],
                &[("a", "b", 4), ("b", "c", 4), ("c", "d", 4), ("d", "a", 4)],
            ),
        ),
        (
            "square2",
            sys(
                &["a", "b", "c", "d"],
                &[("a", "b", 2), ("b", "c", 2), ("c", "d", 2), ("d", "a", 2)],
            ),
        ),
        (
            "chord4",
            sys(
                &["a", "b", "c", "d"],
                &[
                    ("a", "b", 2),
                    ("b", "c", 2),
                    ("c", "d", 2),
                    ("d", "a", 2),
                    ("a", "c", 4),
                ],
            ),
        ),
        (
            "diamond2",
            sys(
                &["a", "b", "c", "d"],
                &[
                    ("a", "b", 2),
                    ("b", "c", 2),
                    ("c", "d", 2),
                    ("d", "a", 2),
                    ("a", "c", 2),
                ],
            ),
        ),
        (
            "star462",
            sys(
                &["x", "a", "b", "c"],
                &[("x", "a", 4), ("x", "b", 6), ("x", "c", 2)],
            ),
        ),
    ]
}

/// Uniform letters `g^{±1}` over the given generators, freely reduced on
/// construction, with letter length at most `max_len`.
pub fn random_word(rng: &mut ChaCha8Rng, sys: &Arc<ArtinSystem>, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    random_word_exact(rng, sys, len)
}

pub fn random_word_exact(rng: &mut ChaCha8Rng, sys: &Arc<ArtinSystem>, len: usize) -> Word {
    let n = sys.vertex_count();
    let letters: Vec<Syllable> = (0..len)
        .map(|_| {
            let g = rng.gen_range(0..n);
            let e = if rng.gen_bool(0.5) { 1 } else { -1 };
            Syllable::new(g, e)
        })
        .collect();
    Word::from_syllables(sys, letters).expect("in range")
}

/// Letter-by-letter enumeration of freely reduced words of length
/// `0..=max_len` over `2 * gens` letters. Letters are `(generator, ±1)`.
pub type Visit<'a> = &'a mut dyn FnMut(&[(usize, i64)]);

pub fn for_each_reduced_word(gens: usize, max_len: usize, mut f: impl FnMut(&[(usize, i64)])) {
    fn rec(gens: usize, max_len: usize, cur: &mut Vec<(usize, i64)>, f: Visit<'_>) {
        f(cur);
        if cur.len() == max_len {
            return;
        }
        for g in 0..gens {
            for e in [1i64, -1] {
                if cur.last() == Some(&(g, -e)) {
                    continue;
                }
                cur.push((g, e));
                rec(gens, max_len, cur, f);
                cur.pop();
            }
        }
    }
    rec(gens, max_len, &mut Vec::new(), &mut f);
}

pub fn letters_to_word(sys: &Arc<ArtinSystem>, letters: &[(usize, i64)]) -> Word {
    Word::from_syllables(sys, letters.iter().map(|&(g, e)| Syllable::new(g, e))).expect("in range")
}
