//! Invariant checks shared by the acceptance harness and the proptest suite.

#![allow(dead_code)]

use lyndon_pairs::lie::{expand, lie_bracket, lyndon_decompose, regular_bracketing, LieEngine, LiePoly};
use lyndon_pairs::pairs::{obstructions_from_atoms, LyndonPair};
use lyndon_pairs::words::{is_lyndon, lyndon_words};
use lyndon_pairs::{Alphabet, Word};
use num_bigint::BigInt;
use num_rational::BigRational;

pub fn w(s: &str) -> Word {
    Alphabet::binary().parse_word(s).unwrap()
}

pub fn ws(s: &str) -> Vec<Word> {
    s.split_whitespace().map(w).collect()
}

pub fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// A Lie polynomial from Lyndon words and integer coefficients.
pub fn lie(terms: &[(Word, i64)]) -> LiePoly {
    LiePoly::from_terms(terms.iter().map(|(u, c)| (u.clone(), q(*c)))).unwrap()
}

pub fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Expanding into the free associative algebra and decomposing back is the identity.
pub fn round_trip(f: &LiePoly) -> Result<(), String> {
    let back = lyndon_decompose(&f.expand()).map_err(|e| e.to_string())?;
    ensure(&back == f, || format!("decompose(expand({f:?})) = {back:?}"))
}

/// Antisymmetry, Jacobi, and agreement of the rewriting engine with the commutator oracle.
pub fn bracket_laws(engine: &mut LieEngine, f: &LiePoly, g: &LiePoly, h: &LiePoly) -> Result<(), String> {
    let fg = lie_bracket(f, g);
    ensure(fg.add(&lie_bracket(g, f)).is_zero(), || format!("[f,g] + [g,f] ≠ 0 for {f:?}, {g:?}"))?;
    let jacobi = lie_bracket(f, &lie_bracket(g, h))
        .add(&lie_bracket(g, &lie_bracket(h, f)))
        .add(&lie_bracket(h, &lie_bracket(f, g)));
    ensure(jacobi.is_zero(), || format!("Jacobi fails for {f:?}, {g:?}, {h:?}"))?;
    let rewritten = engine.bracket(f, g);
    ensure(rewritten == fg, || format!("engine [{f:?},{g:?}] = {rewritten:?}, oracle {fg:?}"))
}

/// Every regular bracketing of `τ = a·u·b` has leading monomial `τ` with
/// coefficient 1, and the engine evaluates it to the oracle value.
pub fn regular_triangularity(engine: &mut LieEngine, tau: &Word) -> Result<(), String> {
    for i in 0..tau.len() {
        for j in i + 1..=tau.len() {
            let u = &tau[i..j];
            if !is_lyndon(u) {
                continue;
            }
            let tree = regular_bracketing(&tau[..i], u, &tau[j..]).map_err(|e| e.to_string())?;
            let p = expand(&tree);
            let lead = p.leading().map(|(m, c)| (m.clone(), c.clone()));
            ensure(lead == Some((tau.clone(), q(1))), || format!("leading term of {tau} around {} is {lead:?}", Word::from(u)))?;
            let oracle = lyndon_decompose(&p).map_err(|e| e.to_string())?;
            let leaf = LiePoly::basis(Word::from(u)).map_err(|e| e.to_string())?;
            let fast = engine.regular(&tau[..i], u, &tau[j..], &leaf).map_err(|e| e.to_string())?;
            ensure(fast == oracle, || format!("engine regular bracketing of {tau} around {} differs", Word::from(u)))?;
        }
    }
    Ok(())
}

/// Atoms → obstructions → atoms and back are inverse.
pub fn duality_round_trip(p: &LyndonPair) -> Result<(), String> {
    let n = p.alphabet_size();
    let w = obstructions_from_atoms(n, p.atoms()).map_err(|e| e.to_string())?;
    ensure(w == p.obstructions(), || format!("W(N) differs for {:?}", p.atoms()))?;
    let back = LyndonPair::from_obstructions(n, &w).map_err(|e| e.to_string())?;
    ensure(&back == p, || format!("N(W(N)) differs for {:?}", p.atoms()))
}

/// Canonicalization is idempotent and constant on mirror partners.
pub fn canonical_laws(p: &LyndonPair) -> Result<(), String> {
    let c = p.canonical();
    ensure(c.canonical() == c, || format!("canonical not idempotent on {:?}", p.atoms()))?;
    if let Some(m) = p.mirror_partner() {
        ensure(m.canonical() == c, || format!("mirror partner of {:?} canonicalizes differently", p.atoms()))?;
        ensure(m.mirror_partner().as_ref() == Some(p), || format!("mirror not an involution on {:?}", p.atoms()))?;
    }
    Ok(())
}

/// All Lyndon basis elements up to the given length.
pub fn basis_upto(max_len: usize) -> Vec<LiePoly> {
    lyndon_words(2, max_len).into_iter().map(|u| LiePoly::basis(u).unwrap()).collect()
}

/// Every binary Lyndon pair of order at most `d_max`, grown one atom at a time.
pub fn raw_pairs(d_max: usize) -> Vec<LyndonPair> {
    let mut level = vec![LyndonPair::from_atoms(2, &ws("x y")).unwrap()];
    let mut all = level.clone();
    for _ in 2..d_max {
        let mut next = std::collections::BTreeSet::new();
        for p in &level {
            for o in p.obstructions() {
                let mut atoms = p.atoms().to_vec();
                atoms.push(o.clone());
                next.insert(LyndonPair::from_atoms(2, &atoms).unwrap());
            }
        }
        level = next.into_iter().collect();
        all.extend(level.iter().cloned());
    }
    all
}
