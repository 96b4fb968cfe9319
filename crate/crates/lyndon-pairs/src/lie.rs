//! The free Lie algebra in the Lyndon basis over exact rationals.
//!
//! Two routes compute the same things. The oracle route expands bracket trees
//! into the free associative algebra and decomposes the result back into
//! Lyndon coordinates. [`LieEngine`] brackets Lyndon basis elements directly by
//! rewriting on standard factorizations; it is what the Gröbner–Shirshov code
//! uses, since associative expansions of long words are far too large.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::rc::Rc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::words::{
    is_lyndon, left_standard_factorization, multidegree, right_standard_factorization, Alphabet, MultiDegree, Word,
};

/// Term key ordered so that iteration runs `≺`-descending: longer words
/// first, then lexicographically increasing.
#[derive(Clone, PartialEq, Eq, Hash)]
struct Key(Word);

impl Ord for Key {
    fn cmp(&self, other: &Self) -> Ordering {
        other.0.len().cmp(&self.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Key {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse rational combination of words, no zero coefficients stored.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct Terms(BTreeMap<Key, BigRational>);

impl Terms {
    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Terms in `≺`-descending order.
    pub fn iter(&self) -> impl Iterator<Item = (&Word, &BigRational)> {
        self.0.iter().map(|(k, c)| (&k.0, c))
    }

    pub fn coeff(&self, w: &Word) -> BigRational {
        self.0.get(&Key(w.clone())).cloned().unwrap_or_else(BigRational::zero)
    }

    /// `≺`-maximal word and its coefficient.
    pub fn leading(&self) -> Option<(&Word, &BigRational)> {
        self.0.iter().next().map(|(k, c)| (&k.0, c))
    }

    pub fn add_term(&mut self, w: Word, c: &BigRational) {
        if c.is_zero() {
            return;
        }
        let key = Key(w);
        let sum = match self.0.get(&key) {
            Some(old) => old + c,
            None => c.clone(),
        };
        if sum.is_zero() {
            self.0.remove(&key);
        } else {
            self.0.insert(key, sum);
        }
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, other: &Terms, c: &BigRational) {
        for (w, d) in other.iter() {
            self.add_term(w.clone(), &(d * c));
        }
    }

    pub fn scaled(&self, c: &BigRational) -> Terms {
        let mut out = Terms::default();
        out.add_scaled(self, c);
        out
    }

    /// Whether all words share one multidegree.
    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.iter().map(|(w, _)| multidegree(w, 0));
        match it.next() {
            Some(first) => it.all(|d| d == first),
            None => true,
        }
    }

    pub fn multidegree(&self) -> Option<MultiDegree> {
        self.leading().map(|(w, _)| multidegree(w, 0))
    }

    fn format(&self, fmt_word: impl Fn(&Word) -> String, brackets: bool) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (w, c)) in self.iter().enumerate() {
            let neg = c.is_negative();
            if i > 0 {
                s.push_str(if neg { " - " } else { " + " });
            } else if neg {
                s.push('-');
            }
            let a = c.abs();
            if !a.is_one() {
                s.push_str(&a.to_string());
            }
            if brackets {
                s.push_str(&format!("[{}]", fmt_word(w)));
            } else {
                s.push_str(&fmt_word(w));
            }
        }
        s
    }
}

/// Serialized term: coefficient as an exact fraction of decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDocument {
    pub word: String,
    pub numerator: String,
    pub denominator: String,
}

fn to_documents(t: &Terms, alphabet: &Alphabet) -> Vec<TermDocument> {
    t.iter()
        .map(|(w, c)| TermDocument {
            word: alphabet.format(w),
            numerator: c.numer().to_string(),
            denominator: c.denom().to_string(),
        })
        .collect()
}

fn from_documents(docs: &[TermDocument], alphabet: &Alphabet) -> Result<Terms> {
    let mut t = Terms::default();
    for d in docs {
        let w = alphabet.parse_word(&d.word)?;
        let bad = |reason: &str| Error::Parse { input: d.word.clone(), reason: reason.into() };
        let n: BigInt = d.numerator.parse().map_err(|_| bad("bad numerator"))?;
        let m: BigInt = d.denominator.parse().map_err(|_| bad("bad denominator"))?;
        if m.is_zero() {
            return Err(bad("zero denominator"));
        }
        t.add_term(w, &BigRational::new(n, m));
    }
    Ok(t)
}

/// Element of the free associative algebra `K<X>`.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct AssocPoly(pub Terms);

/// Element of the free Lie algebra, as coordinates in the Lyndon basis `{[u]}`.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct LiePoly(pub Terms);

impl std::ops::Deref for AssocPoly {
    type Target = Terms;
    fn deref(&self) -> &Terms {
        &self.0
    }
}

impl std::ops::Deref for LiePoly {
    type Target = Terms;
    fn deref(&self) -> &Terms {
        &self.0
    }
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl AssocPoly {
    pub fn zero() -> Self {
        AssocPoly::default()
    }

    pub fn monomial(w: Word) -> Self {
        let mut t = Terms::default();
        t.add_term(w, &BigRational::one());
        AssocPoly(t)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, BigRational)>) -> Self {
        let mut t = Terms::default();
        for (w, c) in terms {
            t.add_term(w, &c);
        }
        AssocPoly(t)
    }

    pub fn add(&self, other: &AssocPoly) -> AssocPoly {
        let mut t = self.0.clone();
        t.add_scaled(&other.0, &BigRational::one());
        AssocPoly(t)
    }

    pub fn sub(&self, other: &AssocPoly) -> AssocPoly {
        let mut t = self.0.clone();
        t.add_scaled(&other.0, &int(-1));
        AssocPoly(t)
    }

    pub fn mul(&self, other: &AssocPoly) -> AssocPoly {
        let mut t = Terms::default();
        for (u, a) in self.iter() {
            for (v, b) in other.iter() {
                t.add_term(u.concat(v), &(a * b));
            }
        }
        AssocPoly(t)
    }

    /// `fg − gf`.
    pub fn commutator(&self, other: &AssocPoly) -> AssocPoly {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn leading_monomial(&self) -> Result<&Word> {
        self.leading().map(|(w, _)| w).ok_or(Error::ZeroPolynomial)
    }

    pub fn to_documents(&self, alphabet: &Alphabet) -> Vec<TermDocument> {
        to_documents(&self.0, alphabet)
    }

    pub fn display(&self, alphabet: &Alphabet) -> String {
        self.0.format(|w| alphabet.format(w), false)
    }
}

impl LiePoly {
    pub fn zero() -> Self {
        LiePoly::default()
    }

    /// The basis element `[u]`.
    pub fn basis(u: Word) -> Result<Self> {
        if !is_lyndon(&u) {
            return Err(Error::NotLyndon(u.to_string()));
        }
        Ok(Self::basis_unchecked(u))
    }

    fn basis_unchecked(u: Word) -> Self {
        let mut t = Terms::default();
        t.add_term(u, &BigRational::one());
        LiePoly(t)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, BigRational)>) -> Result<Self> {
        let mut t = Terms::default();
        for (w, c) in terms {
            if !is_lyndon(&w) {
                return Err(Error::NotLyndon(w.to_string()));
            }
            t.add_term(w, &c);
        }
        Ok(LiePoly(t))
    }

    pub fn add(&self, other: &LiePoly) -> LiePoly {
        let mut t = self.0.clone();
        t.add_scaled(&other.0, &BigRational::one());
        LiePoly(t)
    }

    pub fn sub(&self, other: &LiePoly) -> LiePoly {
        let mut t = self.0.clone();
        t.add_scaled(&other.0, &int(-1));
        LiePoly(t)
    }

    pub fn scale(&self, c: &BigRational) -> LiePoly {
        LiePoly(self.0.scaled(c))
    }

    pub fn add_scaled(&mut self, other: &LiePoly, c: &BigRational) {
        self.0.add_scaled(&other.0, c);
    }

    /// Divided by its leading coefficient.
    pub fn monic(&self) -> LiePoly {
        match self.leading() {
            Some((_, c)) => {
                let inv = c.recip();
                self.scale(&inv)
            }
            None => self.clone(),
        }
    }

    /// Associative image `Σ c·expand([w])`.
    pub fn expand(&self) -> AssocPoly {
        let mut cache = HashMap::new();
        let mut t = Terms::default();
        for (w, c) in self.iter() {
            t.add_scaled(&expand_standard(w, &mut cache).0, c);
        }
        AssocPoly(t)
    }

    pub fn to_documents(&self, alphabet: &Alphabet) -> Vec<TermDocument> {
        to_documents(&self.0, alphabet)
    }

    pub fn from_documents(docs: &[TermDocument], alphabet: &Alphabet) -> Result<Self> {
        let t = from_documents(docs, alphabet)?;
        if let Some((w, _)) = t.iter().find(|(w, _)| !is_lyndon(w)) {
            return Err(Error::NotLyndon(alphabet.format(w)));
        }
        Ok(LiePoly(t))
    }

    pub fn display(&self, alphabet: &Alphabet) -> String {
        self.0.format(|w| alphabet.format(w), true)
    }
}

impl fmt::Debug for AssocPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.format(|w| w.to_string(), false))
    }
}

impl fmt::Debug for LiePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.format(|w| w.to_string(), true))
    }
}

impl fmt::Display for LiePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// `≺`-maximal Lyndon word of a nonzero Lie element.
pub fn leading_lyndon(f: &LiePoly) -> Result<Word> {
    f.leading().map(|(w, _)| w.clone()).ok_or(Error::ZeroPolynomial)
}

/// A bracketing of a word. `Std(w)` stands for the standard bracketing `[w]`
/// kept folded; a letter is `Std` of a one-letter word.
#[derive(Clone, PartialEq, Eq)]
pub enum BracketTree {
    Std(Word),
    Node(Box<BracketTree>, Box<BracketTree>),
}

impl BracketTree {
    pub fn node(a: BracketTree, b: BracketTree) -> Self {
        BracketTree::Node(Box::new(a), Box::new(b))
    }

    /// The word read off the leaves.
    pub fn word(&self) -> Word {
        match self {
            BracketTree::Std(w) => w.clone(),
            BracketTree::Node(a, b) => a.word().concat(&b.word()),
        }
    }

    /// Unfolds every `Std` leaf into its right standard bracketing down to letters.
    pub fn unfold(&self) -> BracketTree {
        match self {
            BracketTree::Std(w) if w.len() <= 1 => self.clone(),
            BracketTree::Std(w) => {
                let (u, v) = right_standard_factorization(w).expect("Std leaves hold Lyndon words");
                BracketTree::node(BracketTree::Std(u).unfold(), BracketTree::Std(v).unfold())
            }
            BracketTree::Node(a, b) => BracketTree::node(a.unfold(), b.unfold()),
        }
    }

    pub fn display(&self, alphabet: &Alphabet) -> String {
        match self.unfold() {
            BracketTree::Std(w) => alphabet.format(&w),
            BracketTree::Node(a, b) => format!("[{},{}]", a.display(alphabet), b.display(alphabet)),
        }
    }
}

impl fmt::Debug for BracketTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BracketTree::Std(w) if w.len() <= 1 => write!(f, "{w}"),
            BracketTree::Std(w) => write!(f, "[{w}]"),
            BracketTree::Node(a, b) => write!(f, "[{a:?},{b:?}]"),
        }
    }
}

/// Right standard bracketing `[u]`, unfolded to letters.
pub fn standard_bracketing(u: &[u8]) -> Result<BracketTree> {
    check_lyndon(u)?;
    Ok(BracketTree::Std(Word::from(u)).unfold())
}

/// Left standard bracketing `[u]_l`, built from left standard factorizations.
pub fn left_standard_bracketing(u: &[u8]) -> Result<BracketTree> {
    check_lyndon(u)?;
    Ok(left_rec(u))
}

fn left_rec(u: &[u8]) -> BracketTree {
    if u.len() == 1 {
        return BracketTree::Std(Word::from(u));
    }
    let (p, q) = left_standard_factorization(u).expect("Lyndon word of length at least 2");
    BracketTree::node(left_rec(&p), left_rec(&q))
}

fn check_lyndon(u: &[u8]) -> Result<()> {
    if u.is_empty() {
        return Err(Error::EmptyWord);
    }
    if !is_lyndon(u) {
        return Err(Error::NotLyndon(Word::from(u).to_string()));
    }
    Ok(())
}

fn expand_standard(w: &Word, cache: &mut HashMap<Word, AssocPoly>) -> AssocPoly {
    if w.len() == 1 {
        return AssocPoly::monomial(w.clone());
    }
    if let Some(p) = cache.get(w) {
        return p.clone();
    }
    let (u, v) = right_standard_factorization(w).expect("expansion of a Lyndon word");
    let p = expand_standard(&u, cache).commutator(&expand_standard(&v, cache));
    cache.insert(w.clone(), p.clone());
    p
}

/// Commutator expansion `[f,g] = fg − gf` of a bracket tree.
pub fn expand(t: &BracketTree) -> AssocPoly {
    let mut cache = HashMap::new();
    expand_rec(t, &mut cache)
}

fn expand_rec(t: &BracketTree, cache: &mut HashMap<Word, AssocPoly>) -> AssocPoly {
    match t {
        BracketTree::Std(w) => expand_standard(w, cache),
        BracketTree::Node(a, b) => expand_rec(a, cache).commutator(&expand_rec(b, cache)),
    }
}

/// Lyndon coordinates of a Lie element given in `K<X>`: peel off the leading
/// monomial `w` (it must be Lyndon) with `c·expand([w])` until nothing is left.
pub fn lyndon_decompose(p: &AssocPoly) -> Result<LiePoly> {
    let mut cache = HashMap::new();
    let mut rest = p.0.clone();
    let mut out = Terms::default();
    while let Some((w, c)) = rest.leading() {
        if !is_lyndon(w) {
            return Err(Error::NotLieElement(w.to_string()));
        }
        let (w, c) = (w.clone(), c.clone());
        rest.add_scaled(&expand_standard(&w, &mut cache).0, &-c.clone());
        out.add_term(w, &c);
    }
    Ok(LiePoly(out))
}

/// Oracle bracket through associative expansion.
pub fn lie_bracket(f: &LiePoly, g: &LiePoly) -> LiePoly {
    let (a, b) = (f.expand(), g.expand());
    lyndon_decompose(&a.commutator(&b)).expect("a commutator of Lie elements is a Lie element")
}

/// A bracketing of the Lyndon word `τ = a·u·b` with `[u]` as a subtree and
/// leading monomial `τ`. With `a` empty `u` is a prefix of the left standard
/// factor; otherwise `u` lies inside one right standard factor.
pub fn regular_bracketing(a: &[u8], u: &[u8], b: &[u8]) -> Result<BracketTree> {
    check_lyndon(u)?;
    let tau = Word::from(a).concat(u).concat(b);
    check_lyndon(&tau)?;
    regular_rec(a, u, b)
}

fn regular_rec(a: &[u8], u: &[u8], b: &[u8]) -> Result<BracketTree> {
    let tau = Word::from(a).concat(u).concat(b);
    if a.is_empty() && b.is_empty() {
        return Ok(BracketTree::Std(tau));
    }
    if a.is_empty() {
        let (p, q) = left_standard_factorization(&tau)?;
        return Ok(BracketTree::node(regular_rec(&[], u, &p[u.len()..])?, BracketTree::Std(q)));
    }
    let (p, q) = right_standard_factorization(&tau)?;
    if a.len() + u.len() <= p.len() {
        Ok(BracketTree::node(regular_rec(a, u, &p[a.len() + u.len()..])?, BracketTree::Std(q)))
    } else if a.len() >= p.len() {
        Ok(BracketTree::node(BracketTree::Std(p.clone()), regular_rec(&a[p.len()..], u, b)?))
    } else {
        Err(Error::InvalidOverlap(format!("{} straddles the standard factorization of {tau}", Word::from(u))))
    }
}

type Bracket = Rc<Vec<(Word, BigInt)>>;

/// Lyndon-basis bracket by rewriting, with a memo table of `[[a],[b]]` for
/// Lyndon `a < b`. Not thread-safe; use one engine per worker.
#[derive(Default)]
pub struct LieEngine {
    cache: HashMap<(Word, Word), Bracket>,
    rsf: HashMap<Word, (Word, Word)>,
}

impl LieEngine {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn cache_size(&self) -> usize {
        self.cache.len()
    }

    fn rsf(&mut self, w: &Word) -> (Word, Word) {
        if let Some(f) = self.rsf.get(w) {
            return f.clone();
        }
        let f = right_standard_factorization(w).expect("Lyndon word of length at least 2");
        self.rsf.insert(w.clone(), f.clone());
        f
    }

    /// `[[a],[b]]` in the Lyndon basis, for Lyndon `a` and `b`.
    ///
    /// If `a < b` and either `a` is a letter or the right factor of `a` is at
    /// least `b`, then `(a, b)` is the standard factorization of `ab`. Otherwise
    /// Jacobi with `[a] = [[a₁],[a₂]]` gives `[a₁,[a₂,b]] − [a₂,[a₁,b]]`.
    pub fn bracket_words(&mut self, a: &Word, b: &Word) -> Vec<(Word, BigInt)> {
        match a.cmp(b) {
            Ordering::Equal => Vec::new(),
            Ordering::Greater => self.bracket_sorted(b, a).iter().map(|(w, c)| (w.clone(), -c)).collect(),
            Ordering::Less => self.bracket_sorted(a, b).as_ref().clone(),
        }
    }

    fn bracket_sorted(&mut self, a: &Word, b: &Word) -> Bracket {
        let key = (a.clone(), b.clone());
        if let Some(r) = self.cache.get(&key) {
            return r.clone();
        }
        let result = if a.len() == 1 || self.rsf(a).1 >= *b {
            vec![(a.concat(b), BigInt::one())]
        } else {
            let (a1, a2) = self.rsf(a);
            let mut acc: HashMap<Word, BigInt> = HashMap::new();
            for (k, c) in self.bracket_words(&a2, b) {
                for (w, d) in self.bracket_words(&a1, &k) {
                    *acc.entry(w).or_default() += &c * d;
                }
            }
            for (k, c) in self.bracket_words(&a1, b) {
                for (w, d) in self.bracket_words(&a2, &k) {
                    *acc.entry(w).or_default() -= &c * d;
                }
            }
            let mut v: Vec<(Word, BigInt)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
            v.sort();
            v
        };
        let r = Rc::new(result);
        self.cache.insert(key, r.clone());
        r
    }

    pub fn bracket(&mut self, f: &LiePoly, g: &LiePoly) -> LiePoly {
        let mut out = Terms::default();
        for (u, a) in f.iter() {
            for (v, b) in g.iter() {
                let ab = a * b;
                for (w, c) in self.bracket_words(u, v) {
                    out.add_term(w, &(&ab * BigRational::from_integer(c)));
                }
            }
        }
        LiePoly(out)
    }

    /// Lyndon coordinates of a bracket tree.
    pub fn evaluate(&mut self, t: &BracketTree) -> LiePoly {
        match t {
            BracketTree::Std(w) => LiePoly::basis_unchecked(w.clone()),
            BracketTree::Node(a, b) => {
                let (x, y) = (self.evaluate(a), self.evaluate(b));
                self.bracket(&x, &y)
            }
        }
    }

    /// The regular bracketing `(a[u]b)` evaluated with the leaf `[u]` replaced
    /// by `leaf`. With `leaf = [u]` this is the regular bracketing itself; with
    /// a relation `r` whose leading word is `u` it is an ideal element led by `aub`.
    pub fn regular(&mut self, a: &[u8], u: &[u8], b: &[u8], leaf: &LiePoly) -> Result<LiePoly> {
        check_lyndon(u)?;
        let tau = Word::from(a).concat(u).concat(b);
        check_lyndon(&tau)?;
        self.regular_rec(a, u, b, leaf)
    }

    fn regular_rec(&mut self, a: &[u8], u: &[u8], b: &[u8], leaf: &LiePoly) -> Result<LiePoly> {
        if a.is_empty() && b.is_empty() {
            return Ok(leaf.clone());
        }
        let tau = Word::from(a).concat(u).concat(b);
        if a.is_empty() {
            let (p, q) = left_standard_factorization(&tau)?;
            let inner = self.regular_rec(&[], u, &p[u.len()..], leaf)?;
            return Ok(self.bracket(&inner, &LiePoly::basis_unchecked(q)));
        }
        let (p, q) = self.rsf(&tau);
        if a.len() + u.len() <= p.len() {
            let inner = self.regular_rec(a, u, &p[a.len() + u.len()..], leaf)?;
            Ok(self.bracket(&inner, &LiePoly::basis_unchecked(q)))
        } else if a.len() >= p.len() {
            let inner = self.regular_rec(&a[p.len()..], u, b, leaf)?;
            Ok(self.bracket(&LiePoly::basis_unchecked(p), &inner))
        } else {
            Err(Error::InvalidOverlap(format!("{} straddles the standard factorization of {tau}", Word::from(u))))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::lyndon_words;

    fn w(s: &str) -> Word {
        Alphabet::binary().parse_word(s).unwrap()
    }

    fn lie(terms: &[(&str, i64)]) -> LiePoly {
        LiePoly::from_terms(terms.iter().map(|(s, c)| (w(s), int(*c)))).unwrap()
    }

    fn assoc(terms: &[(&str, i64)]) -> AssocPoly {
        AssocPoly::from_terms(terms.iter().map(|(s, c)| (w(s), int(*c))))
    }

    #[test]
    fn bracketings() {
        assert_eq!(format!("{:?}", standard_bracketing(&w("x")).unwrap()), "x");
        assert_eq!(format!("{:?}", standard_bracketing(&w("xyy")).unwrap()), "[[x,y],y]");
        assert_eq!(format!("{:?}", standard_bracketing(&w("xyyy")).unwrap()), "[[[x,y],y],y]");
        assert_eq!(format!("{:?}", left_standard_bracketing(&w("xxyy")).unwrap()), "[[x,[x,y]],y]");
        assert!(standard_bracketing(&w("yx")).is_err());
    }

    #[test]
    fn expansions() {
        let t = standard_bracketing(&w("xy")).unwrap();
        assert_eq!(expand(&t), assoc(&[("xy", 1), ("yx", -1)]));
        let t = standard_bracketing(&w("xyy")).unwrap();
        assert_eq!(expand(&t), assoc(&[("xyy", 1), ("yxy", -2), ("yyx", 1)]));
    }

    #[test]
    fn triangularity() {
        for u in lyndon_words(2, 8) {
            let p = expand(&standard_bracketing(&u).unwrap());
            let (lead, c) = p.leading().unwrap();
            assert_eq!((lead, c), (&u, &BigRational::one()));
            assert!(p.is_homogeneous());
            assert!(p.iter().all(|(_, c)| c.is_integer()));
        }
    }

    #[test]
    fn decomposition() {
        assert_eq!(lyndon_decompose(&assoc(&[("xy", 1), ("yx", -1)])).unwrap(), lie(&[("xy", 1)]));
        assert!(matches!(lyndon_decompose(&assoc(&[("xy", 1), ("yx", 1)])), Err(Error::NotLieElement(_))));
        let tree = BracketTree::node(
            BracketTree::node(BracketTree::Std(w("xxy")), BracketTree::Std(w("y"))),
            BracketTree::Std(w("y")),
        );
        let expected = lie(&[("xxyyy", 1), ("xyxyy", 1)]);
        assert_eq!(lyndon_decompose(&expand(&tree)).unwrap(), expected);
        let sum = lie_bracket(&lie(&[("xy", 1)]), &lie(&[("xyy", 1)]))
            .add(&lie_bracket(&lie(&[("x", 1)]), &lie(&[("xyyy", 1)])));
        assert_eq!(sum, expected);
        assert_eq!(LieEngine::new().evaluate(&tree), expected);
    }

    #[test]
    fn brackets_basic() {
        assert_eq!(lie_bracket(&lie(&[("x", 1)]), &lie(&[("y", 1)])), lie(&[("xy", 1)]));
        assert!(lie_bracket(&lie(&[("xy", 1)]), &lie(&[("xy", 1)])).is_zero());
    }

    #[test]
    fn rewriting_matches_expansion() {
        let words = lyndon_words(2, 6);
        let mut engine = LieEngine::new();
        for a in &words {
            for b in &words {
                if a.len() + b.len() > 8 {
                    continue;
                }
                let (f, g) = (LiePoly::basis(a.clone()).unwrap(), LiePoly::basis(b.clone()).unwrap());
                assert_eq!(engine.bracket(&f, &g), lie_bracket(&f, &g), "[{a},{b}]");
            }
        }
    }

    #[test]
    fn regular_bracketings() {
        let t = regular_bracketing(&[], &w("xxy"), &w("yy")).unwrap();
        assert_eq!(t.word(), w("xxyyy"));
        let expected = lie(&[("xxyyy", 1), ("xyxyy", 1)]);
        assert_eq!(lyndon_decompose(&expand(&t)).unwrap(), expected);
        let mut engine = LieEngine::new();
        let leaf = LiePoly::basis(w("xxy")).unwrap();
        assert_eq!(engine.regular(&[], &w("xxy"), &w("yy"), &leaf).unwrap(), expected);
        // Right-segment case: (h[v]) is [hv] itself.
        let r = engine.regular(&w("xx"), &w("xyyyy"), &[], &LiePoly::basis(w("xyyyy")).unwrap()).unwrap();
        assert_eq!(r, LiePoly::basis(w("xxxyyyy")).unwrap());
        assert!(regular_bracketing(&w("y"), &w("x"), &[]).is_err());
    }

    #[test]
    fn regular_routes_agree() {
        let mut engine = LieEngine::new();
        for tau in lyndon_words(2, 8) {
            for i in 0..tau.len() {
                for j in i + 1..=tau.len() {
                    let u = &tau[i..j];
                    if !is_lyndon(u) {
                        continue;
                    }
                    let tree = regular_bracketing(&tau[..i], u, &tau[j..]).unwrap();
                    let oracle = lyndon_decompose(&expand(&tree)).unwrap();
                    assert_eq!(leading_lyndon(&oracle).unwrap(), tau);
                    let leaf = LiePoly::basis(Word::from(u)).unwrap();
                    assert_eq!(engine.regular(&tau[..i], u, &tau[j..], &leaf).unwrap(), oracle);
                }
            }
        }
    }

    #[test]
    fn serialization() {
        let a = Alphabet::binary();
        let f = lie(&[("xxyxyyy", 1), ("xxyyxyy", -3)]).scale(&BigRational::new(1.into(), 2.into()));
        let docs = f.to_documents(&a);
        assert_eq!(docs[0].word, "xxyxyyy");
        assert_eq!((docs[1].numerator.as_str(), docs[1].denominator.as_str()), ("-3", "2"));
        assert_eq!(LiePoly::from_documents(&docs, &a).unwrap(), f);
        assert_eq!(f.display(&a), "1/2[xxyxyyy] - 3/2[xxyyxyy]");
        assert_eq!(leading_lyndon(&LiePoly::zero()), Err(Error::ZeroPolynomial));
    }
}
