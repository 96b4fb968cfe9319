//! Cross-checks of the fast routes against brute-force computations.

mod common;

use std::collections::BTreeMap;

use common::*;
use lyndon_pairs::catalog;
use lyndon_pairs::gs::{disconnected_shortcut, gs_complete, is_gs_basis, structure_constants, Verdict};
use lyndon_pairs::lie::{lie_bracket, LiePoly};
use lyndon_pairs::monomial::global_dimension;
use lyndon_pairs::pairs::{enumerate_pairs, LyndonPair};
use lyndon_pairs::words::{lyndon_words_of_length, Word};
use num_rational::BigRational;
use num_traits::Zero;

/// Row-echelon basis keyed by pivot word.
#[derive(Default)]
struct Echelon(BTreeMap<Word, BTreeMap<Word, BigRational>>);

impl Echelon {
    fn insert(&mut self, f: &LiePoly) {
        let mut v: BTreeMap<Word, BigRational> = f.iter().map(|(w, c)| (w.clone(), c.clone())).collect();
        while let Some((p, c)) = v.iter().next().map(|(w, c)| (w.clone(), c.clone())) {
            let Some(row) = self.0.get(&p) else {
                let v = v.into_iter().map(|(w, x)| (w, x / &c)).collect();
                self.0.insert(p, v);
                return;
            };
            for (w, r) in row {
                let e = v.entry(w.clone()).or_insert_with(BigRational::zero);
                *e -= &c * r;
                if e.is_zero() {
                    v.remove(w);
                }
            }
        }
    }

    fn rank(&self) -> usize {
        self.0.len()
    }
}

/// Rank of the ideal `([W])` of the free Lie algebra in each length `0..=max_len`.
/// The ideal in length `k + 1` is spanned by the generators of that length and
/// `[f, a]` for `f` in a basis of length `k` and letters `a`.
fn ideal_ranks(obstructions: &[Word], max_len: usize) -> Vec<usize> {
    let letters = [lie(&[(w("x"), 1)]), lie(&[(w("y"), 1)])];
    let mut ranks = vec![0];
    let mut prev = Echelon::default();
    for k in 1..=max_len {
        let mut cur = Echelon::default();
        for o in obstructions.iter().filter(|o| o.len() == k) {
            cur.insert(&LiePoly::basis(o.clone()).unwrap());
        }
        for row in prev.0.values() {
            let f = LiePoly::from_terms(row.iter().map(|(w, c)| (w.clone(), c.clone()))).unwrap();
            for a in &letters {
                cur.insert(&lie_bracket(&f, a));
            }
        }
        ranks.push(cur.rank());
        prev = cur;
    }
    ranks
}

#[test]
fn completion_matches_ideal_rank() {
    const MAX: usize = 8;
    for e in catalog::golden() {
        let ranks = ideal_ranks(e.pair.obstructions(), MAX);
        let completed = gs_complete(&e.pair, None).unwrap();
        for (k, &rank) in ranks.iter().enumerate().skip(1) {
            let lyndon = lyndon_words_of_length(2, k).len();
            let atoms = completed.atoms.iter().filter(|a| a.len() == k).count();
            assert_eq!(rank, lyndon - atoms, "{}: length {k}", e.id);
        }
        assert_eq!(completed.verdict == Verdict::Standard, e.expected_standard, "{}", e.id);
    }
}

#[test]
fn shortcut_modes_agree_on_all_classes() {
    for d in 3..=7 {
        for p in enumerate_pairs(2, d).unwrap() {
            let (fast, full) = (is_gs_basis(&p, true), is_gs_basis(&p, false));
            assert_eq!(fast.verdict, full.verdict, "{:?}", p.atoms());
            for (a, b) in fast.chains.iter().zip(&full.chains) {
                assert_eq!(a.omega, b.omega);
                assert_eq!(a.solvable(), b.solvable(), "{} in {:?}", a.omega, p.atoms());
            }
            let completed = gs_complete(&p, None).unwrap();
            assert_eq!(completed.verdict == Verdict::Standard, fast.verdict == Verdict::Standard, "{:?}", p.atoms());
        }
    }
}

#[test]
fn global_dimension_is_atom_count() {
    for p in raw_pairs(7) {
        let bound = 8 * p.m() * p.d();
        assert_eq!(global_dimension(2, p.obstructions(), bound).unwrap(), p.d(), "{:?}", p.atoms());
    }
}

#[test]
fn filiform_structure_tables() {
    for d in 4..=9 {
        let pair = catalog::filiform_l(d).unwrap();
        let t = structure_constants(&pair).unwrap();
        assert!(t.is_antisymmetric() && t.satisfies_jacobi(), "L at d = {d}");
        // [x y^j, y] = x y^{j+1}, and y^{d−2} lands in the center.
        let atoms = pair.atoms();
        let y = w("y");
        for a in atoms.iter().filter(|a| a.len() < d - 1 && **a != y) {
            let next = a.concat(&y);
            assert_eq!(t.bracket_atoms(a, &y), lie(&[(next, 1)]), "d = {d}, atom {a}");
        }
    }
    for d in [6, 8] {
        let t = structure_constants(&catalog::filiform_q(d).unwrap()).unwrap();
        assert!(t.is_antisymmetric() && t.satisfies_jacobi(), "Q at d = {d}");
    }
}

#[test]
fn disconnected_shortcut_matches_annotations() {
    for e in catalog::golden() {
        assert_eq!(disconnected_shortcut(&e.pair), e.component.is_some(), "{}", e.id);
    }
}

#[test]
fn completion_stays_in_connected_component() {
    for e in catalog::golden().iter().filter(|e| e.component.is_some()) {
        let r = gs_complete(&e.pair, None).unwrap();
        assert!(r.within_connected_component, "{}", e.id);
        let component = LyndonPair::from_atoms(2, &e.pair.connected_component()).unwrap();
        assert!(r.atoms.len() <= component.d(), "{}", e.id);
    }
}
