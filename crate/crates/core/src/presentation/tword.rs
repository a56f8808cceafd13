//! Type words over `T = {1, .., n-1}` and the rewriting `->` generated by
//! (T0)-(T3) in context.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TRule {
    /// `() -> (i)`
    T0,
    /// `(i, i) -> (i)`
    T1,
    /// `(i, j) -> (j, i)`, `|i - j| > 1`
    T2,
    /// `(i, i+1, i) -> (i+1, i, i+1)`
    T3,
}

impl TRule {
    pub fn name(self) -> &'static str {
        match self {
            TRule::T0 => "T0",
            TRule::T1 => "T1",
            TRule::T2 => "T2",
            TRule::T3 => "T3",
        }
    }
}

/// One rewriting step at `pos`; `letter` is the inserted letter for (T0).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TStep {
    pub rule: TRule,
    pub pos: usize,
    pub letter: usize,
}

/// Apply a step, checking its side conditions.
pub fn apply_t_step(n: usize, w: &[usize], s: &TStep) -> Result<Vec<usize>> {
    let bad = |why: &str| Error::InapplicableMove(format!("{} at {}: {why}", s.rule.name(), s.pos));
    let mut out = w.to_vec();
    let at = |k: usize| w.get(s.pos + k).copied();
    match s.rule {
        TRule::T0 => {
            if s.pos > w.len() {
                return Err(bad("position out of range"));
            }
            if s.letter == 0 || s.letter >= n {
                return Err(bad("letter outside T"));
            }
            out.insert(s.pos, s.letter);
        }
        TRule::T1 => match (at(0), at(1)) {
            (Some(i), Some(j)) if i == j => {
                out.remove(s.pos);
            }
            _ => return Err(bad("needs (i, i)")),
        },
        TRule::T2 => match (at(0), at(1)) {
            (Some(i), Some(j)) if i.abs_diff(j) > 1 => out.swap(s.pos, s.pos + 1),
            _ => return Err(bad("needs (i, j) with |i - j| > 1")),
        },
        TRule::T3 => match (at(0), at(1), at(2)) {
            (Some(i), Some(j), Some(k)) if i == k && j == i + 1 => {
                out[s.pos] = j;
                out[s.pos + 1] = i;
                out[s.pos + 2] = j;
            }
            _ => return Err(bad("needs (i, i+1, i)")),
        },
    }
    Ok(out)
}

/// Replay a derivation, validating every step.
pub fn replay_t(n: usize, start: &[usize], steps: &[TStep]) -> Result<Vec<usize>> {
    steps.iter().try_fold(start.to_vec(), |w, s| apply_t_step(n, &w, s))
}

/// `D_i = (n-1, .., i)(n-1, .., i+1) .. (n-1)`.
pub fn d_word(n: usize, i: usize) -> Vec<usize> {
    let mut v = Vec::new();
    for lo in i..n {
        v.extend((lo..n).rev());
    }
    v
}

struct Deriv {
    n: usize,
    word: Vec<usize>,
    steps: Vec<TStep>,
}

impl Deriv {
    fn step(&mut self, rule: TRule, pos: usize, letter: usize) {
        let s = TStep { rule, pos, letter };
        self.word = apply_t_step(self.n, &self.word, &s).expect("rewriting step is valid by construction");
        self.steps.push(s);
    }

    /// Move the letter at `pos` left by (T2) while it commutes; returns its new position.
    fn push_left(&mut self, mut pos: usize) -> usize {
        while pos > 0 && self.word[pos - 1].abs_diff(self.word[pos]) > 1 {
            self.step(TRule::T2, pos - 1, 0);
            pos -= 1;
        }
        pos
    }

    fn push_right(&mut self, mut pos: usize, stop: usize) -> usize {
        while pos + 1 < stop && self.word[pos + 1].abs_diff(self.word[pos]) > 1 {
            self.step(TRule::T2, pos, 0);
            pos += 1;
        }
        pos
    }

    /// `(k, .., b)(k, .., b) -> (k, .., b)(k, .., b+1)` on the segment at `start`.
    fn lemma(&mut self, start: usize, k: usize, b: usize) {
        if k == b {
            self.step(TRule::T1, start, 0);
            return;
        }
        let len = k - b + 1;
        let p = self.push_left(start + len);
        debug_assert_eq!(p, start + 2);
        self.step(TRule::T0, start + 3, k - 1);
        self.lemma(start + 3, k - 1, b);
        self.step(TRule::T3, start + 1, 0);
        self.step(TRule::T1, start, 0);
        let end = start + 2 + (k - 1 - b);
        let q = self.push_right(start + 2, end + 1);
        debug_assert_eq!(q, end);
    }

    /// `D_lo (i) -> D_lo` on the segment at `start`.
    fn absorb(&mut self, start: usize, lo: usize, i: usize) {
        let n = self.n;
        if i != lo {
            self.absorb(start + (n - lo), lo + 1, i);
            return;
        }
        let end = start + d_word(n, lo).len();
        self.push_left(end);
        self.lemma(start, n - 1, lo);
    }
}

/// A validated derivation `t -> D_1`.
pub fn t_rewrite_to_d1(n: usize, t: &[usize]) -> Result<Vec<TStep>> {
    if let Some(&bad) = t.iter().find(|&&i| i == 0 || i >= n) {
        return Err(Error::Precondition(format!("type letter {bad} outside 1..{}", n.saturating_sub(1))));
    }
    let mut d = Deriv { n, word: t.to_vec(), steps: Vec::new() };
    for (k, &x) in d_word(n, 1).iter().enumerate() {
        d.step(TRule::T0, k, x);
    }
    for &i in t {
        d.absorb(0, 1, i);
    }
    debug_assert_eq!(d.word, d_word(n, 1));
    Ok(d.steps)
}

/// The derivation `(k, .., 1)(k, .., 1) -> (k, .., 1)(k, .., 2)`.
pub fn lemma_derivation(n: usize, k: usize) -> Result<(Vec<usize>, Vec<TStep>)> {
    if k == 0 || k >= n {
        return Err(Error::Precondition(format!("need 0 < k < n, got k = {k}, n = {n}")));
    }
    let run: Vec<usize> = (1..=k).rev().collect();
    let start: Vec<usize> = run.iter().chain(&run).copied().collect();
    let mut d = Deriv { n, word: start.clone(), steps: Vec::new() };
    d.lemma(0, k, 1);
    Ok((start, d.steps))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn d_words() {
        assert_eq!(d_word(3, 1), vec![2, 1, 2]);
        assert_eq!(d_word(4, 1), vec![3, 2, 1, 3, 2, 3]);
        assert_eq!(d_word(4, 3), vec![3]);
    }

    #[test]
    fn empty_word_is_filled_by_insertions() {
        let s = t_rewrite_to_d1(3, &[]).unwrap();
        assert!(s.iter().all(|x| x.rule == TRule::T0));
        assert_eq!(replay_t(3, &[], &s).unwrap(), vec![2, 1, 2]);
    }

    #[test]
    fn examples_reach_d1() {
        for t in [vec![1, 1], vec![2, 1, 2, 1], vec![1, 2, 1, 2, 1, 1]] {
            let s = t_rewrite_to_d1(3, &t).unwrap();
            assert_eq!(replay_t(3, &t, &s).unwrap(), vec![2, 1, 2]);
        }
        assert!(t_rewrite_to_d1(3, &[3]).is_err());
    }

    #[test]
    fn lemma_holds_for_small_k() {
        for n in 2..=5 {
            for k in 1..n {
                let (start, steps) = lemma_derivation(n, k).unwrap();
                let end = replay_t(n, &start, &steps).unwrap();
                let mut expect: Vec<usize> = (1..=k).rev().collect();
                expect.extend((2..=k).rev());
                assert_eq!(end, expect);
            }
        }
    }

    #[test]
    fn braid_rule_is_directional() {
        let s = TStep { rule: TRule::T3, pos: 0, letter: 0 };
        assert!(apply_t_step(3, &[2, 1, 2], &s).is_err());
        assert_eq!(apply_t_step(3, &[1, 2, 1], &s).unwrap(), vec![2, 1, 2]);
    }
}
