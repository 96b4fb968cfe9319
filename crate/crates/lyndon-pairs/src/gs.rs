//! Gröbner–Shirshov compositions for Lie ideals generated by Lyndon monomials
//! `[W]`: solvability checks with skip rules, bounded completion and the
//! structure constants of standard pairs.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use num_rational::BigRational;
use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lie::{LieEngine, LiePoly};
use crate::monomial::two_chains;
use crate::pairs::LyndonPair;
use crate::words::{find_factor, is_lyndon, multidegree, Alphabet, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CompositionKind {
    Overlap,
    Inclusion,
}

/// A composition and its normal form modulo the relations in force.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Composition {
    pub kind: CompositionKind,
    pub omega: Word,
    pub left: Word,
    pub right: Word,
    pub value: LiePoly,
    pub normal_form: LiePoly,
}

impl Composition {
    pub fn solvable(&self) -> bool {
        self.normal_form.is_zero()
    }
}

/// Why a 2-chain composition was not computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Shortcut {
    /// `|ω| > m(N)`: no atom is as long as `ω`.
    LongerThanAtoms,
    /// No atom of the multidegree of `ω` is `≺ ω`, so the normal form, which
    /// lives in the span of such atoms, vanishes.
    NoSmallerAtom,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainOutcome {
    pub omega: Word,
    pub u: Word,
    pub v: Word,
    pub skipped: Option<Shortcut>,
    /// Present when the composition was computed.
    pub composition: Option<Composition>,
}

impl ChainOutcome {
    pub fn solvable(&self) -> bool {
        self.composition.as_ref().is_none_or(Composition::solvable)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// `[W]` is a Gröbner–Shirshov basis.
    Standard,
    /// Some composition on a 2-chain is not solvable (verification only).
    NotStandard,
    /// Completion changed the basis; `(Ñ, W̃)` differs from `(N, W)`.
    Degenerates,
    /// Completion met a composition longer than the degree bound.
    BoundExhausted,
}

#[derive(Clone, Debug)]
pub struct GsReport {
    pub verdict: Verdict,
    /// Reduced basis, sorted by leading word.
    pub basis: Vec<LiePoly>,
    /// Leading words `W̃` of the basis.
    pub obstructions: Vec<Word>,
    /// Atoms `Ñ` of `W̃`.
    pub atoms: Vec<Word>,
    pub chains: Vec<ChainOutcome>,
    /// Whether `Ñ` lies in the connected component of `N`.
    pub within_connected_component: bool,
    pub degree_bound: Option<usize>,
}

impl GsReport {
    pub fn skip_log(&self) -> Vec<(Word, Shortcut)> {
        self.chains.iter().filter_map(|c| c.skipped.map(|s| (c.omega.clone(), s))).collect()
    }

    pub fn to_document(&self, alphabet: &Alphabet) -> GsReportDocument {
        let f = |w: &Word| alphabet.format(w);
        GsReportDocument {
            verdict: self.verdict,
            basis: self.basis.iter().map(|p| p.to_documents(alphabet)).collect(),
            obstructions: self.obstructions.iter().map(f).collect(),
            atoms: self.atoms.iter().map(f).collect(),
            chains: self
                .chains
                .iter()
                .map(|c| ChainDocument {
                    omega: f(&c.omega),
                    u: f(&c.u),
                    v: f(&c.v),
                    shortcut: c.skipped,
                    normal_form: c.composition.as_ref().map(|k| k.normal_form.to_documents(alphabet)),
                })
                .collect(),
            skipped: self.skip_log().iter().map(|(w, s)| SkipDocument { omega: f(w), shortcut: *s }).collect(),
            within_connected_component: self.within_connected_component,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GsReportDocument {
    pub verdict: Verdict,
    pub basis: Vec<Vec<crate::lie::TermDocument>>,
    pub obstructions: Vec<String>,
    pub atoms: Vec<String>,
    pub chains: Vec<ChainDocument>,
    pub skipped: Vec<SkipDocument>,
    pub within_connected_component: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ChainDocument {
    pub omega: String,
    pub u: String,
    pub v: String,
    pub shortcut: Option<Shortcut>,
    pub normal_form: Option<Vec<crate::lie::TermDocument>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SkipDocument {
    pub omega: String,
    pub shortcut: Shortcut,
}

fn check_overlap(u: &Word, v: &Word, omega: &Word) -> Result<()> {
    let ok = u.len() < omega.len()
        && v.len() < omega.len()
        && u.len() + v.len() > omega.len()
        && omega.starts_with(u)
        && omega.ends_with(v);
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidOverlap(format!("{omega} is not an overlap of {u} and {v}")))
    }
}

/// `(f, g)_ω = (f t) − (h g)` for relations led by `u = hb` and `v = bt`.
fn overlap_value(engine: &mut LieEngine, f: &LiePoly, g: &LiePoly, omega: &Word) -> Result<LiePoly> {
    let (u, v) = (lead(f), lead(g));
    check_overlap(&u, &v, omega)?;
    let left = engine.regular(&[], &u, &omega[u.len()..], f)?;
    let right = engine.regular(&omega[..omega.len() - v.len()], &v, &[], g)?;
    Ok(left.sub(&right))
}

/// The overlap composition `([u]t) − (h[v])` of Lyndon monomials on `ω = hbt`.
pub fn overlap_composition(u: &Word, v: &Word, omega: &Word) -> Result<LiePoly> {
    overlap_composition_with(&mut LieEngine::new(), u, v, omega)
}

fn overlap_composition_with(engine: &mut LieEngine, u: &Word, v: &Word, omega: &Word) -> Result<LiePoly> {
    check_overlap(u, v, omega)?;
    let (fu, fv) = (LiePoly::basis(u.clone())?, LiePoly::basis(v.clone())?);
    let h = &omega[..omega.len() - v.len()];
    let right = engine.regular(h, v, &[], &fv)?;
    assert_eq!(right, LiePoly::basis(omega.clone())?, "(h[v]) = [hv]");
    let left = engine.regular(&[], u, &omega[u.len()..], &fu)?;
    Ok(left.sub(&right))
}

/// `f − (a g b)` where the leading word of `g` is a factor `a·lead(g)·b` of `lead(f)`.
pub fn inclusion_composition(f: &LiePoly, g: &LiePoly) -> Result<LiePoly> {
    let (w, u) = (lead(f), lead(g));
    let i = find_factor(&u, &w).ok_or_else(|| Error::InvalidOverlap(format!("{u} is not a factor of {w}")))?;
    let (_, c) = f.leading().expect("nonzero relation");
    let inner = LieEngine::new().regular(&w[..i], &u, &w[i + u.len()..], g)?;
    Ok(f.sub(&inner.scale(c)))
}

fn lead(f: &LiePoly) -> Word {
    f.leading().map(|(w, _)| w.clone()).unwrap_or_default()
}

/// Relations with Lyndon leading words, monic.
struct Relations {
    rels: Vec<LiePoly>,
    leads: Vec<Word>,
}

impl Relations {
    fn new(rels: Vec<LiePoly>) -> Self {
        let leads = rels.iter().map(lead).collect();
        Relations { rels, leads }
    }

    fn find(&self, t: &Word, skip: Option<usize>) -> Option<(usize, usize)> {
        self.leads
            .iter()
            .enumerate()
            .filter(|(i, _)| Some(*i) != skip)
            .find_map(|(i, w)| find_factor(w, t).map(|j| (i, j)))
    }

    /// One reduction step on the term `c·[t]`: `c·(a r b)` with `r` led by a factor of `t`.
    fn step(&self, engine: &mut LieEngine, t: &Word, i: usize, j: usize) -> LiePoly {
        let w = &self.leads[i];
        let q = engine
            .regular(&t[..j], w, &t[j + w.len()..], &self.rels[i])
            .expect("factor of a Lyndon word inside a Lyndon word");
        debug_assert_eq!(q.leading().map(|(w, c)| (w.clone(), c.clone())), Some((t.clone(), BigRational::one())));
        q
    }

    /// Reduces only while the leading word is reducible.
    fn head_reduce(&self, engine: &mut LieEngine, f: &LiePoly) -> LiePoly {
        let mut f = f.clone();
        while let Some((t, c)) = f.leading().map(|(t, c)| (t.clone(), c.clone())) {
            let Some((i, j)) = self.find(&t, None) else { break };
            let q = self.step(engine, &t, i, j);
            f.add_scaled(&q, &-c);
        }
        f
    }

    /// Reduces every term; the result involves only words avoiding all leading words.
    fn normal_form(&self, engine: &mut LieEngine, f: &LiePoly, skip: Option<usize>) -> LiePoly {
        let mut rest = f.clone();
        let mut out = LiePoly::zero();
        while let Some((t, c)) = rest.leading().map(|(t, c)| (t.clone(), c.clone())) {
            match self.find(&t, skip) {
                Some((i, j)) => {
                    let q = self.step(engine, &t, i, j);
                    rest.add_scaled(&q, &-c);
                }
                None => {
                    let term = LiePoly::from_terms([(t, c.clone())]).expect("Lyndon term");
                    rest.add_scaled(&term, &-BigRational::one());
                    out.add_scaled(&term, &BigRational::one());
                }
            }
        }
        out
    }
}

fn monic_relations(relations: &[LiePoly]) -> Result<Relations> {
    let mut rels = Vec::with_capacity(relations.len());
    for r in relations {
        let (w, _) = r.leading().ok_or(Error::ZeroPolynomial)?;
        if !is_lyndon(w) {
            return Err(Error::NotLyndon(w.to_string()));
        }
        rels.push(r.monic());
    }
    Ok(Relations::new(rels))
}

/// Head reduction: subtracts multiples of `(a r b)` while the leading word of
/// `f` contains the leading word of some relation `r`.
pub fn reduce_mod(f: &LiePoly, relations: &[LiePoly]) -> Result<LiePoly> {
    Ok(monic_relations(relations)?.head_reduce(&mut LieEngine::new(), f))
}

/// Full normal form: every remaining word avoids all leading words.
pub fn normal_form(f: &LiePoly, relations: &[LiePoly]) -> Result<LiePoly> {
    Ok(monic_relations(relations)?.normal_form(&mut LieEngine::new(), f, None))
}

fn monomial_relations(pair: &LyndonPair) -> Vec<LiePoly> {
    pair.obstructions().iter().map(|w| LiePoly::basis(w.clone()).expect("obstructions are Lyndon")).collect()
}

fn shortcut_for(omega: &Word, atoms: &[Word], m: usize) -> Option<Shortcut> {
    if omega.len() > m {
        return Some(Shortcut::LongerThanAtoms);
    }
    let alpha = multidegree(omega, 0);
    let smaller = atoms.iter().any(|a| a.len() == omega.len() && multidegree(a, 0) == alpha && a > omega);
    (!smaller).then_some(Shortcut::NoSmallerAtom)
}

/// Checks whether `[W]` is a Gröbner–Shirshov basis by reducing the overlap
/// composition of every 2-chain modulo `[W]`. With `use_shortcuts`, chains
/// covered by a [`Shortcut`] are logged instead of computed.
pub fn is_gs_basis(pair: &LyndonPair, use_shortcuts: bool) -> GsReport {
    let w = pair.obstructions();
    let relations = Relations::new(monomial_relations(pair));
    let chains = two_chains(w, None);
    let m = pair.m();
    let outcomes: Vec<ChainOutcome> = chains
        .par_iter()
        .map_init(LieEngine::new, |engine, ch| {
            let skipped = if use_shortcuts { shortcut_for(&ch.omega, pair.atoms(), m) } else { None };
            let composition = skipped.is_none().then(|| {
                let value = overlap_composition_with(engine, &ch.u, &ch.v, &ch.omega).expect("2-chain geometry");
                let normal_form = relations.normal_form(engine, &value, None);
                Composition {
                    kind: CompositionKind::Overlap,
                    omega: ch.omega.clone(),
                    left: ch.u.clone(),
                    right: ch.v.clone(),
                    value,
                    normal_form,
                }
            });
            ChainOutcome { omega: ch.omega.clone(), u: ch.u.clone(), v: ch.v.clone(), skipped, composition }
        })
        .collect();
    let verdict = if outcomes.iter().all(ChainOutcome::solvable) { Verdict::Standard } else { Verdict::NotStandard };
    GsReport {
        verdict,
        basis: relations.rels,
        obstructions: w.to_vec(),
        atoms: pair.atoms().to_vec(),
        chains: outcomes,
        within_connected_component: pair.is_connected(),
        degree_bound: None,
    }
}

/// A disconnected atom set rules out a standard pair, so the class contains no
/// enveloping algebra with this normal basis.
pub fn disconnected_shortcut(pair: &LyndonPair) -> bool {
    !pair.is_connected()
}

/// Default completion bound `2·m(N) + 2`.
pub fn default_degree_bound(pair: &LyndonPair) -> usize {
    2 * pair.m() + 2
}

fn current_atoms(pair: &LyndonPair, leads: &[Word]) -> Vec<Word> {
    pair.atoms().iter().filter(|a| !leads.iter().any(|w| find_factor(w, a).is_some())).cloned().collect()
}

/// Buchberger–Shirshov completion of `[W]`.
///
/// Overlap compositions between current leading words are reduced and nonzero
/// normal forms adjoined (monic), after which the basis is interreduced; this
/// interreduction is where inclusion compositions are resolved. An overlap is
/// skipped when no current atom has its multidegree and is `≺ ω`, which in
/// particular covers `|ω| > m(N)`. Zero results are cached by relation
/// identity, and a final uncached pass confirms every overlap of the final basis.
pub fn gs_complete(pair: &LyndonPair, degree_bound: Option<usize>) -> Result<GsReport> {
    let bound = degree_bound.unwrap_or_else(|| default_degree_bound(pair));
    let mut engine = LieEngine::new();
    let mut next_id = 0usize;
    let mut ids = Vec::new();
    let mut rels: Vec<LiePoly> = Vec::new();
    for r in monomial_relations(pair) {
        rels.push(r);
        ids.push(next_id);
        next_id += 1;
    }
    let mut zero_cache: HashSet<(usize, usize, usize)> = HashSet::new();
    let mut verified = false;
    let mut exhausted = false;
    loop {
        let set = Relations::new(rels.clone());
        let atoms = current_atoms(pair, &set.leads);
        let mut found = None;
        'search: for (i, u) in set.leads.iter().enumerate() {
            for (j, v) in set.leads.iter().enumerate() {
                for k in 1..u.len().min(v.len()) {
                    if u[u.len() - k..] != v[..k] {
                        continue;
                    }
                    let omega = u.concat(&v[k..]);
                    if shortcut_for(&omega, &atoms, usize::MAX).is_some() {
                        continue;
                    }
                    if omega.len() > bound {
                        exhausted = true;
                        continue;
                    }
                    let key = (ids[i], ids[j], k);
                    if zero_cache.contains(&key) {
                        continue;
                    }
                    let value = overlap_value(&mut engine, &set.rels[i], &set.rels[j], &omega)?;
                    let nf = set.normal_form(&mut engine, &value, None);
                    if nf.is_zero() {
                        zero_cache.insert(key);
                    } else {
                        found = Some(nf.monic());
                        break 'search;
                    }
                }
            }
        }
        let Some(new) = found else {
            if verified || zero_cache.is_empty() {
                break;
            }
            zero_cache.clear();
            verified = true;
            continue;
        };
        verified = false;
        rels.push(new);
        ids.push(next_id);
        next_id += 1;
        interreduce(&mut engine, &mut rels, &mut ids, &mut next_id);
    }

    let mut basis: Vec<(Word, LiePoly)> = rels.into_iter().map(|r| (lead(&r), r)).collect();
    basis.sort_by(|a, b| a.0.cmp(&b.0));
    let obstructions: Vec<Word> = basis.iter().map(|(w, _)| w.clone()).collect();
    let reduced = LyndonPair::from_obstructions(pair.alphabet_size(), &obstructions)?;
    let component: BTreeSet<Word> = pair.connected_component().into_iter().collect();
    let within = reduced.atoms().iter().all(|a| component.contains(a));
    let verdict = if exhausted {
        Verdict::BoundExhausted
    } else if obstructions == pair.obstructions() {
        Verdict::Standard
    } else {
        Verdict::Degenerates
    };
    Ok(GsReport {
        verdict,
        basis: basis.into_iter().map(|(_, r)| r).collect(),
        obstructions,
        atoms: reduced.atoms().to_vec(),
        chains: Vec::new(),
        within_connected_component: within,
        degree_bound: Some(bound),
    })
}

/// Reduces each relation modulo the others until nothing changes; zero
/// results are dropped, changed relations get fresh identities.
fn interreduce(engine: &mut LieEngine, rels: &mut Vec<LiePoly>, ids: &mut Vec<usize>, next_id: &mut usize) {
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..rels.len() {
            let set = Relations::new(rels.clone());
            let nf = set.normal_form(engine, &rels[i], Some(i));
            if nf != rels[i] {
                rels.remove(i);
                ids.remove(i);
                if !nf.is_zero() {
                    rels.push(nf.monic());
                    ids.push(*next_id);
                    *next_id += 1;
                }
                changed = true;
                break;
            }
        }
    }
}

/// Bracket table of the Lie algebra `Lie(X)/([W])` in the basis `[N]`.
#[derive(Clone, Debug)]
pub struct StructureConstants {
    pub atoms: Vec<Word>,
    /// `[[u],[v]]` for atoms `u < v`, as a combination of atoms.
    pub table: BTreeMap<(Word, Word), LiePoly>,
}

impl StructureConstants {
    pub fn bracket_atoms(&self, u: &Word, v: &Word) -> LiePoly {
        match u.cmp(v) {
            std::cmp::Ordering::Equal => LiePoly::zero(),
            std::cmp::Ordering::Less => self.table.get(&(u.clone(), v.clone())).cloned().unwrap_or_default(),
            std::cmp::Ordering::Greater => self.bracket_atoms(v, u).scale(&-BigRational::one()),
        }
    }

    /// Bilinear extension of the table.
    pub fn bracket(&self, f: &LiePoly, g: &LiePoly) -> LiePoly {
        let mut out = LiePoly::zero();
        for (u, a) in f.iter() {
            for (v, b) in g.iter() {
                out.add_scaled(&self.bracket_atoms(u, v), &(a * b));
            }
        }
        out
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.atoms.iter().all(|u| {
            self.atoms.iter().all(|v| self.bracket_atoms(u, v).add(&self.bracket_atoms(v, u)).is_zero())
        })
    }

    pub fn satisfies_jacobi(&self) -> bool {
        let basis: Vec<LiePoly> = self.atoms.iter().map(|a| LiePoly::basis(a.clone()).expect("atoms")).collect();
        for a in &basis {
            for b in &basis {
                for c in &basis {
                    let s = self
                        .bracket(a, &self.bracket(b, c))
                        .add(&self.bracket(b, &self.bracket(c, a)))
                        .add(&self.bracket(c, &self.bracket(a, b)));
                    if !s.is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Structure constants of a standard pair: normal forms of `[[u],[v]]` modulo `[W]`.
pub fn structure_constants(pair: &LyndonPair) -> Result<StructureConstants> {
    if is_gs_basis(pair, true).verdict != Verdict::Standard {
        return Err(Error::NotStandard);
    }
    let relations = Relations::new(monomial_relations(pair));
    let mut engine = LieEngine::new();
    let atoms = pair.atoms().to_vec();
    let mut table = BTreeMap::new();
    for (i, u) in atoms.iter().enumerate() {
        for v in &atoms[i + 1..] {
            let b = engine.bracket(&LiePoly::basis(u.clone())?, &LiePoly::basis(v.clone())?);
            let nf = relations.normal_form(&mut engine, &b, None);
            if !nf.is_zero() {
                table.insert((u.clone(), v.clone()), nf);
            }
        }
    }
    Ok(StructureConstants { atoms, table })
}

/// Coefficient helper for callers building expected values.
pub fn rational(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}
