//! Words over an ordered alphabet, the two word orders, and Lyndon word primitives.
//!
//! Letters are stored as indices `0..n`. The lexicographic order `<` puts
//! `x1 < x2 < ...`; the degree-lexicographic order `≺` compares lengths first
//! and breaks ties by the *reversed* lexicographic order, so `xxy ≻ xyy`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Deref;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A finite sequence of letter indices. The empty word is the identity of `X*`.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<u8>);

/// Per-letter occurrence counts of a word.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiDegree(pub Vec<usize>);

impl MultiDegree {
    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }
}

impl Word {
    pub fn new(letters: Vec<u8>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(index: u8) -> Self {
        Word(vec![index])
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<u8> {
        self.0
    }

    pub fn concat(&self, other: &[u8]) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(other);
        Word(v)
    }

    /// Repeats the word `k` times.
    pub fn pow(&self, k: usize) -> Word {
        Word(self.0.repeat(k))
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn multidegree(&self, alphabet_size: usize) -> MultiDegree {
        multidegree(&self.0, alphabet_size)
    }

    /// Largest letter index plus one, i.e. the smallest alphabet that contains the word.
    pub fn min_alphabet(&self) -> usize {
        self.0.iter().map(|&a| a as usize + 1).max().unwrap_or(0)
    }
}

impl Deref for Word {
    type Target = [u8];
    fn deref(&self) -> &[u8] {
        &self.0
    }
}

impl From<&[u8]> for Word {
    fn from(s: &[u8]) -> Self {
        Word(s.to_vec())
    }
}

impl From<Vec<u8>> for Word {
    fn from(v: Vec<u8>) -> Self {
        Word(v)
    }
}

const DEFAULT_NAMES: [&str; 3] = ["x", "y", "z"];

fn default_symbol(i: u8) -> String {
    match DEFAULT_NAMES.get(i as usize) {
        Some(s) => s.to_string(),
        None => format!("x{}", i + 1),
    }
}

/// Uses `x, y, z` for the first three letters; words carry no alphabet, so
/// callers with custom symbol names should go through [`Alphabet::format`].
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for &a in &self.0 {
            f.write_str(&default_symbol(a))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

pub fn multidegree(w: &[u8], alphabet_size: usize) -> MultiDegree {
    let mut counts = vec![0; alphabet_size.max(w.iter().map(|&a| a as usize + 1).max().unwrap_or(0))];
    for &a in w {
        counts[a as usize] += 1;
    }
    MultiDegree(counts)
}

/// Ordered list of distinct symbol names; index order is the letter order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    symbols: Vec<String>,
}

impl Alphabet {
    pub fn new<S: Into<String>>(symbols: impl IntoIterator<Item = S>) -> Result<Self> {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        if symbols.is_empty() {
            return Err(Error::InvalidAlphabet("no symbols".into()));
        }
        if symbols.len() > u8::MAX as usize {
            return Err(Error::InvalidAlphabet("too many symbols".into()));
        }
        for (i, s) in symbols.iter().enumerate() {
            if s.is_empty() || s.chars().any(|c| c.is_whitespace() || "()^,".contains(c)) {
                return Err(Error::InvalidAlphabet(format!("bad symbol `{s}`")));
            }
            if symbols[..i].contains(s) {
                return Err(Error::InvalidAlphabet(format!("duplicate symbol `{s}`")));
            }
        }
        Ok(Alphabet { symbols })
    }

    /// The two-letter alphabet `x < y`.
    pub fn binary() -> Self {
        Alphabet { symbols: vec!["x".into(), "y".into()] }
    }

    /// Parses a comma separated symbol list such as `x,y,z`.
    pub fn parse(spec: &str) -> Result<Self> {
        Alphabet::new(spec.split(',').map(str::trim))
    }

    /// The default alphabet `x, y, z, x4, x5, ...` of the given size.
    pub fn standard(size: usize) -> Result<Self> {
        Alphabet::new((0..size).map(|i| default_symbol(i as u8)))
    }

    pub fn size(&self) -> usize {
        self.symbols.len()
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn letters(&self) -> Vec<Word> {
        (0..self.size() as u8).map(Word::letter).collect()
    }

    pub fn check(&self, w: &[u8]) -> Result<()> {
        match w.iter().find(|&&a| a as usize >= self.size()) {
            Some(&index) => Err(Error::LetterOutOfRange { index, size: self.size() }),
            None => Ok(()),
        }
    }

    pub fn format(&self, w: &[u8]) -> String {
        if w.is_empty() {
            return "1".into();
        }
        w.iter().map(|&a| self.symbols[a as usize].as_str()).collect()
    }

    /// Parses a word. Symbols are matched greedily; `^k` repeats the preceding
    /// symbol or parenthesised group, so `xy^2`, `(xy)^2x` and `x^2yxy` are accepted.
    /// `1` and the empty string denote the empty word.
    pub fn parse_word(&self, input: &str) -> Result<Word> {
        let s: Vec<char> = input.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() || s == ['1'] {
            return Ok(Word::empty());
        }
        let mut pos = 0;
        let w = self.parse_seq(input, &s, &mut pos, 0)?;
        if pos != s.len() {
            return Err(parse_err(input, "unbalanced parenthesis"));
        }
        Ok(Word(w))
    }

    fn parse_seq(&self, input: &str, s: &[char], pos: &mut usize, depth: usize) -> Result<Vec<u8>> {
        let mut out = Vec::new();
        while *pos < s.len() {
            let item = match s[*pos] {
                ')' if depth > 0 => return Ok(out),
                '(' => {
                    *pos += 1;
                    let inner = self.parse_seq(input, s, pos, depth + 1)?;
                    if *pos >= s.len() || s[*pos] != ')' {
                        return Err(parse_err(input, "missing `)`"));
                    }
                    *pos += 1;
                    inner
                }
                _ => vec![self.parse_symbol(input, s, pos)?],
            };
            let reps = parse_exponent(input, s, pos)?;
            for _ in 0..reps {
                out.extend_from_slice(&item);
            }
        }
        if depth > 0 {
            return Err(parse_err(input, "missing `)`"));
        }
        Ok(out)
    }

    fn parse_symbol(&self, input: &str, s: &[char], pos: &mut usize) -> Result<u8> {
        let rest: String = s[*pos..].iter().collect();
        let best = self
            .symbols
            .iter()
            .enumerate()
            .filter(|(_, sym)| rest.starts_with(sym.as_str()))
            .max_by_key(|(_, sym)| sym.chars().count());
        match best {
            Some((i, sym)) => {
                *pos += sym.chars().count();
                Ok(i as u8)
            }
            None => Err(parse_err(input, &format!("unknown symbol at `{rest}`"))),
        }
    }
}

fn parse_exponent(input: &str, s: &[char], pos: &mut usize) -> Result<usize> {
    if *pos >= s.len() || s[*pos] != '^' {
        return Ok(1);
    }
    *pos += 1;
    let start = *pos;
    while *pos < s.len() && s[*pos].is_ascii_digit() {
        *pos += 1;
    }
    let digits: String = s[start..*pos].iter().collect();
    digits.parse().map_err(|_| parse_err(input, "expected digits after `^`"))
}

fn parse_err(input: &str, reason: &str) -> Error {
    Error::Parse { input: input.to_string(), reason: reason.to_string() }
}

/// Lexicographic order: a proper prefix is smaller, otherwise the first differing letter decides.
pub fn lex_cmp(u: &[u8], v: &[u8]) -> Ordering {
    u.cmp(v)
}

/// Degree-lexicographic order `≺`: shorter is smaller; equal lengths compare by reversed lex.
pub fn deglex_cmp(u: &[u8], v: &[u8]) -> Ordering {
    u.len().cmp(&v.len()).then_with(|| v.cmp(u))
}

/// Wrapper ordering words by `≺`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DegLex(pub Word);

impl Ord for DegLex {
    fn cmp(&self, other: &Self) -> Ordering {
        deglex_cmp(&self.0, &other.0)
    }
}

impl PartialOrd for DegLex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lyndon test in one left-to-right scan (Duval): the word must be strictly
/// smaller than each of its proper suffixes. The empty word is not Lyndon.
pub fn is_lyndon(w: &[u8]) -> bool {
    if w.is_empty() {
        return false;
    }
    let mut k = 0;
    for j in 1..w.len() {
        match w[k].cmp(&w[j]) {
            Ordering::Less => k = 0,
            Ordering::Equal => k += 1,
            Ordering::Greater => return false,
        }
    }
    k == 0
}

/// All Lyndon words of length at most `max_len` over `alphabet_size` letters, lex-sorted.
pub fn lyndon_words(alphabet_size: usize, max_len: usize) -> Vec<Word> {
    let mut out = Vec::new();
    if alphabet_size == 0 || max_len == 0 {
        return out;
    }
    let top = (alphabet_size - 1) as u8;
    let mut w: Vec<u8> = vec![0];
    loop {
        out.push(Word(w.clone()));
        let m = w.len();
        while w.len() < max_len {
            w.push(w[w.len() - m]);
        }
        while w.last() == Some(&top) {
            w.pop();
        }
        match w.last_mut() {
            Some(a) => *a += 1,
            None => break,
        }
    }
    out
}

/// All Lyndon words of length exactly `len` over `alphabet_size` letters, lex-sorted.
pub fn lyndon_words_of_length(alphabet_size: usize, len: usize) -> Vec<Word> {
    lyndon_words(alphabet_size, len).into_iter().filter(|w| w.len() == len).collect()
}

fn mobius(mut n: usize) -> i32 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Number of Lyndon words of length `n` over `g` letters, `(1/n) Σ_{d|n} μ(d) g^{n/d}`.
pub fn witt_count(g: usize, n: usize) -> BigUint {
    if n == 0 {
        return BigUint::zero();
    }
    let base = BigInt::from(g);
    let mut sum = BigInt::zero();
    for d in (1..=n).filter(|d| n.is_multiple_of(*d)) {
        let term = num_traits::pow(base.clone(), n / d);
        match mobius(d) {
            1 => sum += term,
            -1 => sum -= term,
            _ => {}
        }
    }
    let q = sum / BigInt::from(n);
    q.to_biguint().unwrap_or_else(BigUint::one)
}

/// Chen–Fox–Lyndon factorization into a non-increasing product of Lyndon words (Duval).
pub fn cfl_factorize(w: &[u8]) -> Vec<Word> {
    let n = w.len();
    let mut out = Vec::new();
    let mut i = 0;
    while i < n {
        let mut j = i + 1;
        let mut k = i;
        while j < n && w[k] <= w[j] {
            if w[k] < w[j] {
                k = i;
            } else {
                k += 1;
            }
            j += 1;
        }
        while i <= k {
            out.push(Word::from(&w[i..i + j - k]));
            i += j - k;
        }
    }
    out
}

fn check_factorizable(w: &[u8]) -> Result<()> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    if !is_lyndon(w) {
        return Err(Error::NotLyndon(Word::from(w).to_string()));
    }
    if w.len() < 2 {
        return Err(Error::NoFactorization(Word::from(w).to_string()));
    }
    Ok(())
}

/// Split position of the right standard factorization: the suffix is the longest proper Lyndon suffix.
pub fn right_standard_split(w: &[u8]) -> Result<usize> {
    check_factorizable(w)?;
    Ok((1..w.len()).find(|&i| is_lyndon(&w[i..])).expect("a letter suffix is Lyndon"))
}

/// Split position of the left standard factorization: the prefix is the longest proper Lyndon prefix.
pub fn left_standard_split(w: &[u8]) -> Result<usize> {
    check_factorizable(w)?;
    Ok((1..w.len()).rev().find(|&i| is_lyndon(&w[..i])).expect("a letter prefix is Lyndon"))
}

/// `w = uv` with `v` the longest proper Lyndon suffix of the Lyndon word `w`.
pub fn right_standard_factorization(w: &[u8]) -> Result<(Word, Word)> {
    let i = right_standard_split(w)?;
    Ok((Word::from(&w[..i]), Word::from(&w[i..])))
}

/// `w = uv` with `u` the longest proper Lyndon prefix of the Lyndon word `w`.
pub fn left_standard_factorization(w: &[u8]) -> Result<(Word, Word)> {
    let i = left_standard_split(w)?;
    Ok((Word::from(&w[..i]), Word::from(&w[i..])))
}

/// Whether `a` occurs as a (not necessarily proper) factor of `b`.
pub fn is_factor(a: &[u8], b: &[u8]) -> bool {
    find_factor(a, b).is_some()
}

/// Whether `a` is a factor of `b` distinct from `b`.
pub fn is_proper_factor(a: &[u8], b: &[u8]) -> bool {
    a.len() < b.len() && is_factor(a, b)
}

/// Position of the leftmost occurrence of `a` in `b`.
pub fn find_factor(a: &[u8], b: &[u8]) -> Option<usize> {
    if a.is_empty() {
        return Some(0);
    }
    if a.len() > b.len() {
        return None;
    }
    b.windows(a.len()).position(|s| s == a)
}

/// All Lyndon factors of `w`, including `w` itself when it is Lyndon.
pub fn lyndon_factors(w: &[u8]) -> Vec<Word> {
    let mut out: Vec<Word> = Vec::new();
    for i in 0..w.len() {
        for j in i + 1..=w.len() {
            if is_lyndon(&w[i..j]) {
                out.push(Word::from(&w[i..j]));
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy(s: &str) -> Word {
        Alphabet::binary().parse_word(s).unwrap()
    }

    fn rotation_lyndon(w: &[u8]) -> bool {
        let n = w.len();
        n > 0
            && (1..n).all(|i| {
                let mut r = w[i..].to_vec();
                r.extend_from_slice(&w[..i]);
                w < r.as_slice()
            })
    }

    fn all_words(g: u8, n: usize) -> Vec<Vec<u8>> {
        let mut out = vec![vec![]];
        for _ in 0..n {
            out = out
                .into_iter()
                .flat_map(|w| {
                    (0..g).map(move |a| {
                        let mut v = w.clone();
                        v.push(a);
                        v
                    })
                })
                .collect();
        }
        out
    }

    #[test]
    fn orders() {
        assert_eq!(lex_cmp(&xy("x"), &xy("xy")), Ordering::Less);
        assert_eq!(lex_cmp(&xy("xxy"), &xy("xyy")), Ordering::Less);
        assert_eq!(lex_cmp(&xy("xy"), &xy("x^2y")), Ordering::Greater);
        assert_eq!(deglex_cmp(&xy("xxy"), &xy("xyy")), Ordering::Greater);
        assert_eq!(deglex_cmp(&xy("x"), &xy("xy")), Ordering::Less);
        assert_eq!(deglex_cmp(&xy("xy"), &xy("yx")), Ordering::Greater);
    }

    #[test]
    fn lyndon_examples() {
        assert!(is_lyndon(&xy("xxy")));
        assert!(!is_lyndon(&xy("xyxy")));
        assert!(!is_lyndon(&xy("yx")));
        assert!(!is_lyndon(&[]));
    }

    #[test]
    fn lyndon_matches_rotation_definition() {
        for n in 1..=12 {
            for w in all_words(2, n) {
                assert_eq!(is_lyndon(&w), rotation_lyndon(&w), "{w:?}");
            }
        }
        for n in 1..=7 {
            for w in all_words(3, n) {
                assert_eq!(is_lyndon(&w), rotation_lyndon(&w), "{w:?}");
            }
        }
    }

    #[test]
    fn generation_is_sorted_and_counted() {
        let two: Vec<String> = lyndon_words(2, 2).iter().map(|w| w.to_string()).collect();
        assert_eq!(two, ["x", "xy", "y"]);
        let three: Vec<String> = lyndon_words(2, 3).iter().map(|w| w.to_string()).collect();
        assert_eq!(three, ["x", "xxy", "xy", "xyy", "y"]);
        for g in 2..=3 {
            let all = lyndon_words(g, 12);
            assert!(all.windows(2).all(|p| p[0] < p[1]));
            for m in 1..=12 {
                let block = all.iter().filter(|w| w.len() == m).count();
                assert_eq!(BigUint::from(block), witt_count(g, m), "g={g} m={m}");
            }
        }
        let brute = all_words(2, 9).into_iter().filter(|w| rotation_lyndon(w)).count();
        assert_eq!(brute, lyndon_words_of_length(2, 9).len());
    }

    #[test]
    fn witt_values() {
        let expected = [2u32, 1, 2, 3, 6, 9, 18, 30, 56, 99, 186, 335];
        for (i, &e) in expected.iter().enumerate() {
            assert_eq!(witt_count(2, i + 1), BigUint::from(e));
        }
    }

    #[test]
    fn cfl_examples() {
        let f = |s: &str| cfl_factorize(&xy(s)).iter().map(|w| w.to_string()).collect::<Vec<_>>();
        assert_eq!(f("yx"), ["y", "x"]);
        assert_eq!(f("xyxy"), ["xy", "xy"]);
        assert_eq!(f("xxyyxy"), ["xxyyxy"]);
    }

    #[test]
    fn cfl_is_unique_factorization() {
        for n in 1..=10 {
            for w in all_words(2, n) {
                let f = cfl_factorize(&w);
                assert_eq!(f.concat_letters(), w);
                assert!(f.iter().all(|l| rotation_lyndon(l)));
                assert!(f.windows(2).all(|p| p[0] >= p[1]));
            }
        }
    }

    trait Concat {
        fn concat_letters(&self) -> Vec<u8>;
    }
    impl Concat for Vec<Word> {
        fn concat_letters(&self) -> Vec<u8> {
            self.iter().flat_map(|w| w.letters().to_vec()).collect()
        }
    }

    #[test]
    fn standard_factorizations() {
        let r = |s: &str| {
            let (u, v) = right_standard_factorization(&xy(s)).unwrap();
            (u.to_string(), v.to_string())
        };
        let l = |s: &str| {
            let (u, v) = left_standard_factorization(&xy(s)).unwrap();
            (u.to_string(), v.to_string())
        };
        assert_eq!(r("xy"), ("x".into(), "y".into()));
        assert_eq!(r("xyyyy"), ("xyyy".into(), "y".into()));
        assert_eq!(r("xxxy"), ("x".into(), "xxy".into()));
        assert_eq!(l("xy"), ("x".into(), "y".into()));
        assert_eq!(l("xyyy"), ("xyy".into(), "y".into()));
        assert_eq!(l("xxyy"), ("xxy".into(), "y".into()));
        assert!(right_standard_factorization(&xy("x")).is_err());
        assert!(right_standard_factorization(&xy("yx")).is_err());
        assert!(left_standard_factorization(&[]).is_err());
    }

    #[test]
    fn factorizations_match_brute_force() {
        for w in lyndon_words(2, 10).into_iter().filter(|w| w.len() > 1) {
            let (u, v) = right_standard_factorization(&w).unwrap();
            let longest = (1..w.len()).filter(|&i| rotation_lyndon(&w[i..])).min().unwrap();
            assert_eq!(v.len(), w.len() - longest);
            assert!(is_lyndon(&u));
            let (p, q) = left_standard_factorization(&w).unwrap();
            let longest = (1..w.len()).filter(|&i| rotation_lyndon(&w[..i])).max().unwrap();
            assert_eq!(p.len(), longest);
            assert!(is_lyndon(&q));
        }
    }

    #[test]
    fn factor_relation() {
        assert!(is_factor(&xy("xy"), &xy("xxyy")));
        assert!(!is_factor(&xy("xxy"), &xy("xyxy")));
        let w = xy("xyy");
        assert!(is_factor(&w, &w));
        assert!(!is_proper_factor(&w, &w));
    }

    #[test]
    fn parsing() {
        let a = Alphabet::binary();
        assert_eq!(a.parse_word("x^2y^2").unwrap(), xy("xxyy"));
        assert_eq!(a.parse_word("(xy)(xyxy^2)").unwrap(), xy("xyxyxyy"));
        assert_eq!(a.parse_word("(xy)^2").unwrap(), xy("xyxy"));
        assert_eq!(a.parse_word("1").unwrap(), Word::empty());
        assert!(a.parse_word("xz").is_err());
        assert!(a.parse_word("(xy").is_err());
        assert!(a.parse_word("x)").is_err());
        let abc = Alphabet::parse("a,b,c").unwrap();
        assert_eq!(abc.format(&abc.parse_word("abc^2").unwrap()), "abcc");
        assert!(Alphabet::parse("x,x").is_err());
    }

    #[test]
    fn multidegree_counts() {
        assert_eq!(xy("xxyxy").multidegree(2), MultiDegree(vec![3, 2]));
        assert_eq!(xy("").multidegree(2).total(), 0);
    }
}
