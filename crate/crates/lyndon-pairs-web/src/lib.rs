//! Browser bindings: a pair explorer, Hilbert series, and bracket
//! expansion/decomposition. Each export takes strings and returns JSON; the
//! plain-Rust functions behind them are what the tests exercise.

use lyndon_pairs::gs::{gs_complete, is_gs_basis, Verdict};
use lyndon_pairs::lie::{expand, lyndon_decompose, standard_bracketing, BracketTree};
use lyndon_pairs::monomial::{count_normal, hilbert_from_atoms};
use lyndon_pairs::pairs::{atoms_from_obstructions, LyndonPair, PairInvariants};
use lyndon_pairs::{Alphabet, Word};
use serde::Serialize;
use wasm_bindgen::prelude::*;

#[derive(Debug, Serialize, PartialEq)]
pub struct PairView {
    pub atoms: Vec<String>,
    pub obstructions: Vec<String>,
    pub invariants: PairInvariants,
    pub verdict: Verdict,
    /// Atoms after completion, when `[W]` is not already a basis.
    pub completed_atoms: Option<Vec<String>>,
}

#[derive(Debug, Serialize, PartialEq)]
pub struct HilbertView {
    /// Normal words per degree.
    pub normal_words: Vec<String>,
    /// PBW counts from the atoms, present when the atom set is finite.
    pub pbw: Option<Vec<String>>,
}

#[derive(Debug, Serialize, PartialEq)]
pub struct BracketView {
    pub bracketing: String,
    pub expansion: String,
    /// The expression in the Lyndon basis.
    pub lyndon: String,
}

fn words(alphabet: &Alphabet, list: &str) -> Result<Vec<Word>, String> {
    list.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| alphabet.parse_word(s).map_err(|e| e.to_string()))
        .collect()
}

fn names(alphabet: &Alphabet, ws: &[Word]) -> Vec<String> {
    ws.iter().map(|w| alphabet.format(w)).collect()
}

/// Builds a binary pair from atoms (`from_atoms`) or obstructions, checks it and completes it if needed.
pub fn explore(list: &str, from_atoms: bool) -> Result<PairView, String> {
    let a = Alphabet::binary();
    let ws = words(&a, list)?;
    let pair = if from_atoms { LyndonPair::from_atoms(2, &ws) } else { LyndonPair::from_obstructions(2, &ws) }
        .map_err(|e| e.to_string())?;
    let verdict = is_gs_basis(&pair, true).verdict;
    let completed_atoms = match verdict {
        Verdict::Standard => None,
        _ => Some(names(&a, &gs_complete(&pair, None).map_err(|e| e.to_string())?.atoms)),
    };
    Ok(PairView {
        atoms: names(&a, pair.atoms()),
        obstructions: names(&a, pair.obstructions()),
        invariants: pair.invariants(),
        verdict,
        completed_atoms,
    })
}

/// Hilbert series of the monomial algebra on the given relations, up to `degree`.
pub fn hilbert(obstructions: &str, degree: usize) -> Result<HilbertView, String> {
    let a = Alphabet::binary();
    let ws = words(&a, obstructions)?;
    let count = |v: Vec<_>| v.iter().map(ToString::to_string).collect::<Vec<String>>();
    let normal_words = count(count_normal(2, &ws, degree));
    let pbw = match atoms_from_obstructions(2, &ws, Some(degree)) {
        Ok(set) if set.finite => Some(count(hilbert_from_atoms(&set.atoms, degree))),
        _ => None,
    };
    Ok(HilbertView { normal_words, pbw })
}

/// Parses `[a,b]` trees whose leaves are words; a Lyndon leaf of length > 1
/// stands for its standard bracketing.
pub fn parse_bracket(alphabet: &Alphabet, input: &str) -> Result<BracketTree, String> {
    let chars: Vec<char> = input.chars().filter(|c| !c.is_whitespace()).collect();
    let mut pos = 0;
    let tree = parse_tree(alphabet, &chars, &mut pos)?;
    if pos != chars.len() {
        return Err(format!("unexpected `{}` at position {pos}", chars[pos]));
    }
    Ok(tree)
}

fn parse_tree(alphabet: &Alphabet, s: &[char], pos: &mut usize) -> Result<BracketTree, String> {
    if s.get(*pos) == Some(&'[') {
        *pos += 1;
        let left = parse_tree(alphabet, s, pos)?;
        expect(s, pos, ',')?;
        let right = parse_tree(alphabet, s, pos)?;
        expect(s, pos, ']')?;
        return Ok(BracketTree::node(left, right));
    }
    let start = *pos;
    while *pos < s.len() && !matches!(s[*pos], '[' | ']' | ',') {
        *pos += 1;
    }
    let token: String = s[start..*pos].iter().collect();
    if token.is_empty() {
        return Err(format!("expected a word at position {start}"));
    }
    let w = alphabet.parse_word(&token).map_err(|e| e.to_string())?;
    standard_bracketing(&w).map_err(|e| e.to_string())
}

fn expect(s: &[char], pos: &mut usize, c: char) -> Result<(), String> {
    if s.get(*pos) == Some(&c) {
        *pos += 1;
        Ok(())
    } else {
        Err(format!("expected `{c}` at position {pos}"))
    }
}

/// Expands a bracket expression and rewrites it in the Lyndon basis.
pub fn bracket(input: &str) -> Result<BracketView, String> {
    let a = Alphabet::binary();
    let tree = parse_bracket(&a, input)?;
    let p = expand(&tree);
    let lie = lyndon_decompose(&p).map_err(|e| e.to_string())?;
    Ok(BracketView {
        bracketing: tree.display(&a),
        expansion: if p.is_zero() { "0".into() } else { p.display(&a) },
        lyndon: if lie.is_zero() { "0".into() } else { lie.display(&a) },
    })
}

fn to_js<T: Serialize>(r: Result<T, String>) -> Result<String, JsError> {
    r.map(|v| serde_json::to_string(&v).expect("views serialize")).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = explorePair)]
pub fn explore_pair_js(list: &str, from_atoms: bool) -> Result<String, JsError> {
    to_js(explore(list, from_atoms))
}

#[wasm_bindgen(js_name = hilbertSeries)]
pub fn hilbert_js(obstructions: &str, degree: usize) -> Result<String, JsError> {
    to_js(hilbert(obstructions, degree))
}

#[wasm_bindgen(js_name = expandBracket)]
pub fn bracket_js(input: &str) -> Result<String, JsError> {
    to_js(bracket(input))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn explorer() {
        let v = explore("x, xy, xyy, y", true).unwrap();
        assert_eq!(v.obstructions, ["xxy", "xyxyy", "xyyy"]);
        assert_eq!(v.verdict, Verdict::Standard);
        let v = explore("x xxy xxyxy xy xyy xyyy y", true).unwrap();
        assert_eq!(v.completed_atoms.unwrap(), ["x", "xxy", "xy", "xyy", "xyyy", "y"]);
        assert!(explore("xxy xyy", false).unwrap().completed_atoms.is_none());
        assert!(explore("xy xxy", false).is_err());
    }

    #[test]
    fn series() {
        let h = hilbert("xxy xyy", 5).unwrap();
        assert_eq!(h.normal_words, ["1", "2", "4", "6", "9", "12"]);
        assert_eq!(h.pbw.as_ref(), Some(&h.normal_words));
        assert_eq!(hilbert("xx", 3).unwrap().pbw, None);
    }

    #[test]
    fn brackets() {
        let b = bracket("[[xxy,y],y]").unwrap();
        assert_eq!(b.lyndon, "[xxyyy] + [xyxyy]");
        assert_eq!(bracket("[xy, xy]").unwrap().lyndon, "0");
        assert_eq!(bracket("[y,x]").unwrap().lyndon, "-[xy]");
        assert_eq!(bracket("xyy").unwrap().bracketing, "[[x,y],y]");
        assert!(bracket("[x,y").is_err());
        assert!(bracket("yx").is_err());
    }
}
