//! Antichains, the duality between Lyndon atoms `N` and obstructions `W`,
//! connectedness, canonical forms and exhaustive enumeration of Lyndon pairs.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::two_chains;
use crate::words::{is_lyndon, is_proper_factor, lyndon_factors, Alphabet, Word};

/// Whether no word of `words` is a factor of another.
pub fn is_antichain(words: &[Word]) -> bool {
    check_antichain(words).is_ok()
}

fn check_antichain(words: &[Word]) -> Result<()> {
    for (i, a) in words.iter().enumerate() {
        for (j, b) in words.iter().enumerate() {
            if i != j && (a == b || is_proper_factor(a, b)) {
                return Err(Error::NotAntichain(a.to_string(), b.to_string()));
            }
        }
    }
    Ok(())
}

/// Result of [`atoms_from_obstructions`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AtomSet {
    /// Lex-sorted atoms; a truncation when `finite` is false.
    pub atoms: Vec<Word>,
    pub finite: bool,
    /// Longest atom length listed when the set is truncated.
    pub truncated_at: Option<usize>,
}

fn check_obstructions(alphabet_size: usize, obstructions: &[Word]) -> Result<()> {
    for w in obstructions {
        if w.is_empty() {
            return Err(Error::EmptyWord);
        }
        if let Some(&a) = w.iter().find(|&&a| a as usize >= alphabet_size) {
            return Err(Error::LetterOutOfRange { index: a, size: alphabet_size });
        }
        if w.len() == 1 {
            return Err(Error::LetterObstruction(w.to_string()));
        }
        if !is_lyndon(w) {
            return Err(Error::NotLyndon(w.to_string()));
        }
    }
    check_antichain(obstructions)
}

/// The Lyndon words with no factor in `W`.
///
/// Every such word of length at least 2 is `uv` for shorter atoms `u < v`, so
/// atoms are built by length from products. `N` is infinite exactly when an
/// atom of length in `[m, 2(m−1)]` exists (`m` the longest obstruction): the
/// shortest atom of length `≥ m` is a product of two atoms shorter than `m`.
/// Infinite sets are truncated at `length_bound` (default `max(2(m−1), 1)`).
pub fn atoms_from_obstructions(
    alphabet_size: usize,
    obstructions: &[Word],
    length_bound: Option<usize>,
) -> Result<AtomSet> {
    check_obstructions(alphabet_size, obstructions)?;
    let m = obstructions.iter().map(|w| w.len()).max().unwrap_or(0);
    let probe = if m == 0 { 1 } else { 2 * (m - 1) };
    let limit = probe.max(length_bound.unwrap_or(0));

    let mut by_len: BTreeMap<usize, BTreeSet<Word>> = BTreeMap::new();
    by_len.insert(1, (0..alphabet_size as u8).map(Word::letter).collect());
    for k in 2..=limit {
        let mut level = BTreeSet::new();
        for i in 1..k {
            let (Some(left), Some(right)) = (by_len.get(&i), by_len.get(&(k - i))) else { continue };
            for u in left {
                for v in right.range(u.clone()..).skip_while(|v| *v == u) {
                    let w = u.concat(v);
                    if !obstructions.iter().any(|o| crate::words::is_factor(o, &w)) {
                        level.insert(w);
                    }
                }
            }
        }
        by_len.insert(k, level);
    }

    let finite = m > 0 && (m..=probe).all(|k| by_len.get(&k).is_none_or(|s| s.is_empty()));
    let keep = if finite { probe } else { length_bound.unwrap_or(probe.max(1)) };
    let mut atoms: Vec<Word> = by_len.into_iter().filter(|(k, _)| *k <= keep).flat_map(|(_, s)| s).collect();
    atoms.sort();
    Ok(AtomSet { atoms, finite, truncated_at: (!finite).then_some(keep) })
}

fn check_atoms(alphabet_size: usize, atoms: &[Word]) -> Result<BTreeSet<Word>> {
    let set: BTreeSet<Word> = atoms.iter().cloned().collect();
    for w in &set {
        if w.is_empty() {
            return Err(Error::EmptyWord);
        }
        if let Some(&a) = w.iter().find(|&&a| a as usize >= alphabet_size) {
            return Err(Error::LetterOutOfRange { index: a, size: alphabet_size });
        }
        if !is_lyndon(w) {
            return Err(Error::NotLyndon(w.to_string()));
        }
    }
    for a in 0..alphabet_size as u8 {
        if !set.contains(&Word::letter(a)) {
            return Err(Error::MissingLetter(Word::letter(a).to_string()));
        }
    }
    for w in &set {
        if let Some(f) = lyndon_factors(w).into_iter().find(|f| !set.contains(f)) {
            return Err(Error::NotFactorClosed { word: w.to_string(), factor: f.to_string() });
        }
    }
    Ok(set)
}

/// The maximal antichain of `L ∖ N`: Lyndon words outside `N` whose proper
/// Lyndon factors all lie in `N`. Candidates are products `uv`, `u < v` in `N`.
pub fn obstructions_from_atoms(alphabet_size: usize, atoms: &[Word]) -> Result<Vec<Word>> {
    let set = check_atoms(alphabet_size, atoms)?;
    let list: Vec<&Word> = set.iter().collect();
    let mut out = BTreeSet::new();
    for (i, u) in list.iter().enumerate() {
        for v in &list[i + 1..] {
            let w = u.concat(v);
            if !set.contains(&w) && lyndon_factors(&w).iter().all(|f| *f == w || set.contains(f)) {
                out.insert(w);
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// Whether the atom lengths form an initial interval `1..=m`.
pub fn is_connected(atoms: &[Word]) -> bool {
    connected_component(atoms).len() == atoms.len()
}

/// Atoms of length `≤ k`, where `k + 1` is the smallest length with no atom.
pub fn connected_component(atoms: &[Word]) -> Vec<Word> {
    let lengths: BTreeSet<usize> = atoms.iter().map(|w| w.len()).collect();
    let mut k = 0;
    while lengths.contains(&(k + 1)) {
        k += 1;
    }
    let mut out: Vec<Word> = atoms.iter().filter(|w| w.len() <= k).cloned().collect();
    out.sort();
    out
}

/// A Lyndon pair `(N, W)` with finite `N`; both lists lex-sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LyndonPair {
    alphabet_size: usize,
    atoms: Vec<Word>,
    obstructions: Vec<Word>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairInvariants {
    pub d: usize,
    pub m: usize,
    pub c: Option<usize>,
    pub connected: bool,
}

impl LyndonPair {
    pub fn from_atoms(alphabet_size: usize, atoms: &[Word]) -> Result<Self> {
        let obstructions = obstructions_from_atoms(alphabet_size, atoms)?;
        let mut atoms = atoms.to_vec();
        atoms.sort();
        atoms.dedup();
        Ok(LyndonPair { alphabet_size, atoms, obstructions })
    }

    pub fn from_obstructions(alphabet_size: usize, obstructions: &[Word]) -> Result<Self> {
        let set = atoms_from_obstructions(alphabet_size, obstructions, None)?;
        if !set.finite {
            return Err(Error::InfiniteAtoms);
        }
        let pair = Self::from_atoms(alphabet_size, &set.atoms)?;
        let mut given = obstructions.to_vec();
        given.sort();
        given.dedup();
        if pair.obstructions != given {
            return Err(Error::InvalidParameter("obstruction set is not the dual of its atoms".into()));
        }
        Ok(pair)
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn atoms(&self) -> &[Word] {
        &self.atoms
    }

    pub fn obstructions(&self) -> &[Word] {
        &self.obstructions
    }

    pub fn d(&self) -> usize {
        self.atoms.len()
    }

    /// Longest atom length `m(N)`.
    pub fn m(&self) -> usize {
        self.atoms.iter().map(|w| w.len()).max().unwrap_or(0)
    }

    /// Shortest 2-chain length `c(W)`, if any 2-chain exists.
    pub fn c(&self) -> Option<usize> {
        two_chains(&self.obstructions, None).first().map(|c| c.omega.len())
    }

    pub fn is_connected(&self) -> bool {
        is_connected(&self.atoms)
    }

    pub fn connected_component(&self) -> Vec<Word> {
        connected_component(&self.atoms)
    }

    pub fn invariants(&self) -> PairInvariants {
        PairInvariants { d: self.d(), m: self.m(), c: self.c(), connected: self.is_connected() }
    }

    /// Whether `uv ∈ W` for every pair of lex-adjacent atoms `u < v`.
    pub fn adjacent_products_property(&self) -> bool {
        self.atoms.windows(2).all(|p| self.obstructions.binary_search(&p[0].concat(&p[1])).is_ok())
    }

    /// The three conditions of the maximal case: `|W| = d(d−1)/2`; `N = X`;
    /// `W = {x_i x_j : i < j}`. They are equivalent for Lyndon pairs.
    pub fn maximal_w_conditions(&self) -> [bool; 3] {
        let d = self.d();
        let n = self.alphabet_size as u8;
        let quadratic: Vec<Word> =
            (0..n).flat_map(|i| (i + 1..n).map(move |j| Word::new(vec![i, j]))).collect::<BTreeSet<_>>().into_iter().collect();
        [
            self.obstructions.len() == d * (d - 1) / 2,
            self.atoms.iter().all(|w| w.len() == 1),
            self.obstructions == quadratic,
        ]
    }

    pub fn maximal_w_check(&self) -> bool {
        self.maximal_w_conditions().iter().all(|&c| c)
    }

    /// The pair with obstructions `σ(W)`, when `σ(W)` is again an antichain of
    /// Lyndon words with finite dual. Then `A_{σ(W)}` is the opposite algebra of
    /// `A_W` up to relabeling. `σ` does not preserve Lyndon words in general
    /// (`xyxyyyxyy ↦ xxyxxxyxy`), so many pairs have no partner.
    pub fn mirror_partner(&self) -> Option<LyndonPair> {
        let n = self.alphabet_size;
        let image: Vec<Word> = self.obstructions.iter().map(|w| mirror(w, n)).collect();
        if !image.iter().all(|w| is_lyndon(w)) {
            return None;
        }
        LyndonPair::from_obstructions(n, &image).ok()
    }

    /// Representative of the class `{self, σ-partner}`: the one with the
    /// lex-least sorted obstruction list.
    pub fn canonical(&self) -> LyndonPair {
        match self.mirror_partner() {
            Some(other) if other.obstructions < self.obstructions => other,
            _ => self.clone(),
        }
    }

    pub fn to_document(&self, alphabet: &Alphabet) -> PairDocument {
        PairDocument {
            alphabet: alphabet.symbols().to_vec(),
            atoms: self.atoms.iter().map(|w| alphabet.format(w)).collect(),
            obstructions: self.obstructions.iter().map(|w| alphabet.format(w)).collect(),
            invariants: Some(self.invariants()),
        }
    }
}

/// `σ(w)`: reversal composed with the relabeling `i ↦ n−1−i`.
pub fn mirror(w: &[u8], alphabet_size: usize) -> Word {
    Word::new(w.iter().rev().map(|&a| (alphabet_size - 1) as u8 - a).collect())
}

/// Serialized pair: words as symbol strings over a declared alphabet. Inputs may
/// give atoms, obstructions or both (both are then checked to be dual).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairDocument {
    pub alphabet: Vec<String>,
    #[serde(default)]
    pub atoms: Vec<String>,
    #[serde(default)]
    pub obstructions: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub invariants: Option<PairInvariants>,
}

impl PairDocument {
    pub fn parse(&self) -> Result<(Alphabet, LyndonPair)> {
        let alphabet = Alphabet::new(self.alphabet.iter().cloned())?;
        let parse = |ws: &[String]| ws.iter().map(|s| alphabet.parse_word(s)).collect::<Result<Vec<_>>>();
        let atoms = parse(&self.atoms)?;
        let obstructions = parse(&self.obstructions)?;
        let pair = match (atoms.is_empty(), obstructions.is_empty()) {
            (false, _) => LyndonPair::from_atoms(alphabet.size(), &atoms)?,
            (true, false) => LyndonPair::from_obstructions(alphabet.size(), &obstructions)?,
            (true, true) => return Err(Error::InvalidParameter("pair has neither atoms nor obstructions".into())),
        };
        if !atoms.is_empty() && !obstructions.is_empty() {
            let mut given = obstructions;
            given.sort();
            given.dedup();
            if given != pair.obstructions {
                return Err(Error::InvalidParameter("atoms and obstructions are not dual".into()));
            }
        }
        Ok((alphabet, pair))
    }
}

/// All Lyndon pairs with `|N| = d`, one per isomorphism class, sorted by
/// canonical obstruction list.
///
/// Every pair of order `d` arises from one of order `d − 1` by adjoining an
/// obstruction (drop a longest atom to go back). The search keeps every pair
/// of each order and canonicalizes only at the end: `σ` is not defined on all
/// pairs, so extending class representatives alone can miss classes.
pub fn enumerate_pairs(alphabet_size: usize, d: usize) -> Result<Vec<LyndonPair>> {
    if alphabet_size < 2 {
        return Err(Error::InvalidAlphabet(format!("need at least 2 letters, got {alphabet_size}")));
    }
    if d < alphabet_size {
        return Err(Error::InvalidOrder { d, alphabet: alphabet_size });
    }
    let letters: Vec<Word> = (0..alphabet_size as u8).map(Word::letter).collect();
    let mut level = vec![LyndonPair::from_atoms(alphabet_size, &letters)?];
    for _ in alphabet_size..d {
        let next: BTreeSet<LyndonPair> = level
            .par_iter()
            .flat_map_iter(|p| {
                p.obstructions.iter().map(move |w| {
                    let mut atoms = p.atoms.clone();
                    atoms.push(w.clone());
                    LyndonPair::from_atoms(alphabet_size, &atoms)
                })
            })
            .collect::<Result<_>>()?;
        level = next.into_iter().collect();
    }
    let classes: Vec<LyndonPair> = level.par_iter().map(LyndonPair::canonical).collect();
    let mut seen = HashSet::new();
    let mut out: Vec<LyndonPair> = classes.into_iter().filter(|p| seen.insert(p.obstructions.clone())).collect();
    out.sort_by(|a, b| a.obstructions.cmp(&b.obstructions));
    Ok(out)
}

/// The unique connected pair with `|W| = d − 1`: `N = {x < xy < ⋯ < xy^{d−2} < y}`.
pub fn minimal_w_classification(d: usize) -> Result<LyndonPair> {
    if d < 2 {
        return Err(Error::InvalidOrder { d, alphabet: 2 });
    }
    let atoms: Vec<Word> =
        (0..d - 1).map(|j| Word::letter(0).concat(&Word::letter(1).pow(j))).chain([Word::letter(1)]).collect();
    LyndonPair::from_atoms(2, &atoms)
}
