//! Monomial algebras `K<X>/(W)`: normal words, Anick chains, global dimension,
//! Hilbert series and the PBW normal basis of a Lyndon pair.

use std::collections::{BTreeMap, VecDeque};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::words::{is_factor, Word};

/// Whether no element of `obstructions` is a factor of `w`.
pub fn is_normal(w: &[u8], obstructions: &[Word]) -> bool {
    !obstructions.iter().any(|o| is_factor(o, w))
}

/// Factor-avoidance automaton (Aho–Corasick) over the prefixes of the obstructions.
#[derive(Clone, Debug)]
pub struct NormalWordAutomaton {
    alphabet_size: usize,
    delta: Vec<Vec<usize>>,
    dead: Vec<bool>,
}

impl NormalWordAutomaton {
    pub fn new(alphabet_size: usize, obstructions: &[Word]) -> Self {
        let mut delta: Vec<Vec<Option<usize>>> = vec![vec![None; alphabet_size]];
        let mut dead = vec![false];
        for w in obstructions {
            let mut s = 0;
            for &a in w.iter() {
                s = match delta[s][a as usize] {
                    Some(t) => t,
                    None => {
                        delta.push(vec![None; alphabet_size]);
                        dead.push(false);
                        let t = delta.len() - 1;
                        delta[s][a as usize] = Some(t);
                        t
                    }
                };
            }
            dead[s] = true;
        }
        let mut fail = vec![0usize; delta.len()];
        let mut full = vec![vec![0usize; alphabet_size]; delta.len()];
        let mut queue = VecDeque::new();
        for a in 0..alphabet_size {
            match delta[0][a] {
                Some(t) => {
                    full[0][a] = t;
                    queue.push_back(t);
                }
                None => full[0][a] = 0,
            }
        }
        while let Some(s) = queue.pop_front() {
            dead[s] = dead[s] || dead[fail[s]];
            for a in 0..alphabet_size {
                match delta[s][a] {
                    Some(t) => {
                        fail[t] = full[fail[s]][a];
                        full[s][a] = t;
                        queue.push_back(t);
                    }
                    None => full[s][a] = full[fail[s]][a],
                }
            }
        }
        NormalWordAutomaton { alphabet_size, delta: full, dead }
    }

    pub fn state_count(&self) -> usize {
        self.delta.len()
    }

    pub fn accepts(&self, w: &[u8]) -> bool {
        let mut s = 0;
        for &a in w {
            s = self.delta[s][a as usize];
            if self.dead[s] {
                return false;
            }
        }
        true
    }

    /// Number of normal words of each length `0..=max_len` (transfer-matrix iteration).
    pub fn count(&self, max_len: usize) -> Vec<BigUint> {
        let mut cur = vec![BigUint::zero(); self.delta.len()];
        cur[0] = BigUint::one();
        let mut out = Vec::with_capacity(max_len + 1);
        for step in 0..=max_len {
            out.push(cur.iter().sum());
            if step == max_len {
                break;
            }
            let mut next = vec![BigUint::zero(); self.delta.len()];
            for (s, c) in cur.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for a in 0..self.alphabet_size {
                    let t = self.delta[s][a];
                    if !self.dead[t] {
                        next[t] += c;
                    }
                }
            }
            cur = next;
        }
        out
    }
}

/// `dim A_m` for `m = 0..=max_len`, counted with the factor-avoidance automaton.
pub fn count_normal(alphabet_size: usize, obstructions: &[Word], max_len: usize) -> Vec<BigUint> {
    NormalWordAutomaton::new(alphabet_size, obstructions).count(max_len)
}

/// A 2-chain `ω = h·b·t` with `u = hb` and `v = bt` in `W`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoChain {
    pub omega: Word,
    pub u: Word,
    pub v: Word,
    pub h: Word,
    pub b: Word,
    pub t: Word,
}

/// One minimal extension of a chain tail: `tail·q` ends with the obstruction
/// `obstructions[index]`, which starts at `start` inside the tail.
struct Extension {
    q: Word,
    index: usize,
    start: usize,
}

fn extensions(tail: &[u8], obstructions: &[Word]) -> Vec<Extension> {
    let mut cands: Vec<Extension> = Vec::new();
    for start in 0..tail.len() {
        let rest = &tail[start..];
        for (index, o) in obstructions.iter().enumerate() {
            if o.len() > rest.len() && o.starts_with(rest) {
                cands.push(Extension { q: Word::from(&o[rest.len()..]), index, start });
            }
        }
    }
    let keep: Vec<bool> = cands
        .iter()
        .map(|c| !cands.iter().any(|d| d.q.len() < c.q.len() && c.q.starts_with(&d.q)))
        .collect();
    let mut out: Vec<Extension> = cands.into_iter().zip(keep).filter(|(_, k)| *k).map(|(c, _)| c).collect();
    out.sort_by(|a, b| a.q.cmp(&b.q));
    out.dedup_by(|a, b| a.q == b.q);
    out
}

/// All 2-chains on `W`, sorted by length and then lexicographically.
pub fn two_chains(obstructions: &[Word], max_len: Option<usize>) -> Vec<TwoChain> {
    let mut out = Vec::new();
    for u in obstructions {
        if u.len() < 2 {
            continue;
        }
        for e in extensions(&u[1..], obstructions) {
            let omega = u.concat(&e.q);
            if max_len.is_some_and(|m| omega.len() > m) {
                continue;
            }
            let split = 1 + e.start;
            out.push(TwoChain {
                h: Word::from(&omega[..split]),
                b: Word::from(&u[split..]),
                t: e.q.clone(),
                v: obstructions[e.index].clone(),
                u: u.clone(),
                omega,
            });
        }
    }
    out.sort_by(|a, b| a.omega.len().cmp(&b.omega.len()).then_with(|| a.omega.cmp(&b.omega)));
    out
}

/// Outcome of a bounded chain search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChainSearch {
    Exists(Word),
    Absent,
    BoundHit,
}

/// Existence data for one chain level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainLevel {
    pub n: usize,
    /// Distinct chain tails found within the bound.
    pub tails: usize,
    /// Shortest chain word found, if any.
    pub witness: Option<Word>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainReport {
    pub levels: Vec<ChainLevel>,
    pub global_dimension: Option<usize>,
    pub bound_hit: bool,
    pub search_bound: usize,
}

/// Walks the chain levels `0, 1, 2, ...` until a level is empty, `max_level`
/// is reached, or chain words exceed `search_bound` letters. Chains with the
/// same tail extend identically, so each level keeps one shortest word per tail.
pub fn chain_report(
    alphabet_size: usize,
    obstructions: &[Word],
    max_level: Option<usize>,
    search_bound: usize,
) -> ChainReport {
    let mut level: BTreeMap<Word, Word> =
        (0..alphabet_size as u8).map(|a| (Word::letter(a), Word::letter(a))).collect();
    let mut levels = vec![summary(0, &level)];
    let mut truncated = false;
    let mut n = 0;
    loop {
        if max_level.is_some_and(|m| n >= m) {
            return ChainReport { levels, global_dimension: None, bound_hit: false, search_bound };
        }
        n += 1;
        let mut next: BTreeMap<Word, Word> = BTreeMap::new();
        for (tail, word) in &level {
            for e in extensions(tail, obstructions) {
                let w = word.concat(&e.q);
                if w.len() > search_bound {
                    truncated = true;
                    continue;
                }
                let better = match next.get(&e.q) {
                    Some(old) => (w.len(), &w) < (old.len(), old),
                    None => true,
                };
                if better {
                    next.insert(e.q, w);
                }
            }
        }
        if next.is_empty() {
            return if truncated {
                ChainReport { levels, global_dimension: None, bound_hit: true, search_bound }
            } else {
                levels.push(summary(n, &next));
                ChainReport { levels, global_dimension: Some(n), bound_hit: false, search_bound }
            };
        }
        levels.push(summary(n, &next));
        level = next;
    }
}

fn summary(n: usize, level: &BTreeMap<Word, Word>) -> ChainLevel {
    let witness = level.values().min_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b))).cloned();
    ChainLevel { n, tails: level.len(), witness }
}

/// Whether an `n`-chain exists, searching chain words of at most `search_bound` letters.
pub fn n_chain_exists(alphabet_size: usize, obstructions: &[Word], n: usize, search_bound: usize) -> ChainSearch {
    let report = chain_report(alphabet_size, obstructions, Some(n), search_bound);
    match report.levels.get(n) {
        Some(ChainLevel { witness: Some(w), .. }) => ChainSearch::Exists(w.clone()),
        _ if report.bound_hit => ChainSearch::BoundHit,
        Some(_) => ChainSearch::Absent,
        None if report.global_dimension.is_some() => ChainSearch::Absent,
        None => ChainSearch::BoundHit,
    }
}

/// The smallest `d` such that no `d`-chain exists (a `(d−1)`-chain then exists).
pub fn global_dimension(alphabet_size: usize, obstructions: &[Word], search_bound: usize) -> Result<usize> {
    chain_report(alphabet_size, obstructions, None, search_bound)
        .global_dimension
        .ok_or(Error::BoundExhausted(search_bound))
}

/// Coefficients `0..=max_len` of `∏_{l ∈ N} 1/(1 − t^{|l|})`.
pub fn hilbert_from_atoms(atoms: &[Word], max_len: usize) -> Vec<BigUint> {
    let mut c = vec![BigUint::zero(); max_len + 1];
    c[0] = BigUint::one();
    for l in atoms {
        let k = l.len();
        if k == 0 {
            continue;
        }
        for i in k..=max_len {
            let prev = c[i - k].clone();
            c[i] += prev;
        }
    }
    c
}

/// All products `l1 l2 ⋯ ls` of atoms with `l1 ≥ l2 ≥ ⋯ ≥ ls` and total length `len`, lex-sorted.
pub fn pbw_normal_basis(atoms: &[Word], len: usize) -> Vec<Word> {
    let mut sorted: Vec<&Word> = atoms.iter().filter(|a| !a.is_empty()).collect();
    sorted.sort_by(|a, b| b.cmp(a));
    sorted.dedup();
    let mut out = Vec::new();
    let mut cur = Vec::new();
    pbw_rec(&sorted, 0, len, &mut cur, &mut out);
    out.sort();
    out
}

fn pbw_rec(atoms: &[&Word], from: usize, left: usize, cur: &mut Vec<u8>, out: &mut Vec<Word>) {
    if left == 0 {
        out.push(Word::from(cur.clone()));
        return;
    }
    for i in from..atoms.len() {
        let a = atoms[i];
        if a.len() <= left {
            cur.extend_from_slice(a);
            pbw_rec(atoms, i, left - a.len(), cur, out);
            cur.truncate(cur.len() - a.len());
        }
    }
}
