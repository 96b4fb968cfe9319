//! Named families of Lyndon pairs and the reference lists for `d = 6, 7`.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pairs::LyndonPair;
use crate::words::{is_factor, lyndon_words, Alphabet, Word};

const GOLDEN: &str = include_str!("../data/golden_pairs.json");

fn x() -> Word {
    Word::letter(0)
}

fn y() -> Word {
    Word::letter(1)
}

/// `x y^j`.
fn xy(j: usize) -> Word {
    x().concat(&y().pow(j))
}

/// The filiform pair of order `d ≥ 3`, given by its obstructions
/// `W = {xyⁱxyⁱ⁺¹ : 0 ≤ i ≤ d−3} ∪ {xy^{d−1}}`.
pub fn filiform_l(d: usize) -> Result<LyndonPair> {
    if d < 3 {
        return Err(Error::InvalidParameter(format!("filiform order must be at least 3, got {d}")));
    }
    let mut w: Vec<Word> = (0..=d - 3).map(|i| xy(i).concat(&xy(i + 1))).collect();
    w.push(xy(d - 1));
    LyndonPair::from_obstructions(2, &w)
}

/// The second filiform family, `d = 2m ≥ 6`, given by its atoms
/// `{xy^j : 0 ≤ j ≤ 2m−3} ∪ {xy^{m−2}xy^{m−1}} ∪ {y}`.
pub fn filiform_q(d: usize) -> Result<LyndonPair> {
    if d < 6 || !d.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!("order must be even and at least 6, got {d}")));
    }
    let m = d / 2;
    let mut atoms: Vec<Word> = (0..=2 * m - 3).map(xy).collect();
    atoms.push(xy(m - 2).concat(&xy(m - 1)));
    atoms.push(y());
    LyndonPair::from_atoms(2, &atoms)
}

/// All Lyndon words of length at most `m`: the free nilpotent Lie algebra of class `m`.
pub fn free_nilpotent(alphabet_size: usize, m: usize) -> Result<LyndonPair> {
    if m == 0 || alphabet_size == 0 {
        return Err(Error::InvalidParameter("need m ≥ 1 and a nonempty alphabet".into()));
    }
    LyndonPair::from_atoms(alphabet_size, &lyndon_words(alphabet_size, m))
}

/// `f₀ = x, f₁ = y, f_{2k} = f_{2k−2} f_{2k−1}, f_{2k+1} = f_{2k} f_{2k−1}`.
pub fn fibonacci_words(count: usize) -> Vec<Word> {
    let mut f: Vec<Word> = Vec::with_capacity(count);
    for i in 0..count {
        let w = match i {
            0 => x(),
            1 => y(),
            _ if i % 2 == 0 => f[i - 2].concat(&f[i - 1]),
            _ => f[i - 1].concat(&f[i - 2]),
        };
        f.push(w);
    }
    f
}

/// The Fibonacci pair `F_n`: obstructions are the minimal elements of
/// `{f_{2k−2} f_{2k}, f_{2k+1} f_{2k−1} : k ≥ 1} ∪ {f_n}` under the factor order.
/// Words `f_j` with `j ≥ n` contain `f_n`, so finitely many `k` suffice.
pub fn fibonacci_pair(n: usize) -> Result<LyndonPair> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("Fibonacci pair needs n ≥ 2, got {n}")));
    }
    let f = fibonacci_words(n + 4);
    let mut cands: BTreeSet<Word> = BTreeSet::new();
    for k in 1..=n / 2 + 1 {
        cands.insert(f[2 * k - 2].concat(&f[2 * k]));
        cands.insert(f[2 * k + 1].concat(&f[2 * k - 1]));
    }
    cands.insert(f[n].clone());
    let minimal: Vec<Word> =
        cands.iter().filter(|w| !cands.iter().any(|v| v.len() < w.len() && is_factor(v, w))).cloned().collect();
    LyndonPair::from_obstructions(2, &minimal)
}

/// Eighteen atoms whose completed basis gains a relation that is not a Lie
/// monomial: the Lyndon words of length at most 7 avoiding `xxxy` and `xyyyy`,
/// except `xxyxxyy` and `xyyxyyy`.
pub fn nonmonomial_basis_pair() -> LyndonPair {
    let avoid = [Word::new(vec![0, 0, 0, 1]), Word::new(vec![0, 1, 1, 1, 1])];
    let drop = [Word::new(vec![0, 0, 1, 0, 0, 1, 1]), Word::new(vec![0, 1, 1, 0, 1, 1, 1])];
    let atoms: Vec<Word> = lyndon_words(2, 7)
        .into_iter()
        .filter(|w| !avoid.iter().any(|a| is_factor(a, w)) && !drop.contains(w))
        .collect();
    LyndonPair::from_atoms(2, &atoms).expect("closed under Lyndon factors")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PrintedStatus {
    /// Printed list equals the derived obstructions.
    Verbatim,
    /// Equal after applying the recorded errata.
    Corrected,
    /// Printed list is a partial list; it must be contained in the derived set.
    Fragment,
    /// No obstruction list printed; obstructions are derived only.
    NotListed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrintedObstructions {
    pub status: PrintedStatus,
    pub words: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ErratumKind {
    Misprint,
    Duplicate,
    Omitted,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Erratum {
    pub kind: ErratumKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub printed: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reading: Option<String>,
}

#[derive(Clone, Debug, Deserialize)]
struct GoldenEntry {
    id: String,
    name: Option<String>,
    atoms: Vec<String>,
    obstructions: Vec<String>,
    printed_obstructions: PrintedObstructions,
    #[serde(default)]
    errata: Vec<Erratum>,
    #[serde(default)]
    atom_errata: Vec<Erratum>,
    component: Option<String>,
    expected_standard: bool,
}

#[derive(Clone, Debug, Deserialize)]
struct GoldenFile {
    version: u32,
    alphabet: Vec<String>,
    entries: Vec<GoldenEntry>,
}

/// One reference pair with its annotations.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    /// `d.m.j`: order, longest atom length, list position.
    pub id: String,
    pub name: Option<String>,
    pub pair: LyndonPair,
    /// Obstructions as stored in the data file (checked against duality in tests).
    pub stored_obstructions: Vec<Word>,
    pub printed: PrintedObstructions,
    pub errata: Vec<Erratum>,
    pub atom_errata: Vec<Erratum>,
    /// Label of the connected component when the atoms are disconnected.
    pub component: Option<String>,
    pub expected_standard: bool,
}

impl CatalogEntry {
    pub fn d(&self) -> usize {
        self.id_part(0)
    }

    pub fn m(&self) -> usize {
        self.id_part(1)
    }

    fn id_part(&self, i: usize) -> usize {
        self.id.split('.').nth(i).and_then(|s| s.parse().ok()).unwrap_or(0)
    }

    /// Printed obstruction list with misprints replaced and duplicates dropped.
    pub fn printed_corrected(&self) -> Result<Vec<Word>> {
        let a = Alphabet::binary();
        let mut out = BTreeSet::new();
        for t in &self.printed.words {
            let fix = self.errata.iter().find(|e| e.kind == ErratumKind::Misprint && e.printed.as_deref() == Some(t));
            let token = fix.and_then(|e| e.reading.as_deref()).unwrap_or(t);
            out.insert(a.parse_word(token)?);
        }
        for e in self.errata.iter().filter(|e| e.kind == ErratumKind::Omitted) {
            if let Some(r) = &e.reading {
                out.insert(a.parse_word(r)?);
            }
        }
        Ok(out.into_iter().collect())
    }
}

fn load() -> Result<Vec<CatalogEntry>> {
    let file: GoldenFile = serde_json::from_str(GOLDEN)
        .map_err(|e| Error::Parse { input: "golden_pairs.json".into(), reason: e.to_string() })?;
    if file.version != 1 {
        return Err(Error::InvalidParameter(format!("unsupported catalog version {}", file.version)));
    }
    let alphabet = Alphabet::new(file.alphabet)?;
    let parse = |ws: &[String]| ws.iter().map(|s| alphabet.parse_word(s)).collect::<Result<Vec<_>>>();
    file.entries
        .into_iter()
        .map(|e| {
            Ok(CatalogEntry {
                pair: LyndonPair::from_atoms(alphabet.size(), &parse(&e.atoms)?)?,
                stored_obstructions: parse(&e.obstructions)?,
                id: e.id,
                name: e.name,
                printed: e.printed_obstructions,
                errata: e.errata,
                atom_errata: e.atom_errata,
                component: e.component,
                expected_standard: e.expected_standard,
            })
        })
        .collect()
}

/// All reference entries, `d = 6` first.
pub fn golden() -> &'static [CatalogEntry] {
    static CELL: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    CELL.get_or_init(|| load().expect("embedded catalog is valid"))
}

pub fn golden_d6() -> Vec<CatalogEntry> {
    golden().iter().filter(|e| e.d() == 6).cloned().collect()
}

pub fn golden_d7() -> Vec<CatalogEntry> {
    golden().iter().filter(|e| e.d() == 7).cloned().collect()
}

pub fn entry(id: &str) -> Option<&'static CatalogEntry> {
    golden().iter().find(|e| e.id == id)
}

/// Resolves a component label: `L(m)` free nilpotent, `Ln` filiform of
/// dimension `n + 1`, `Qn` second filiform family of dimension `n + 1`,
/// `N1`/`N2` the first two connected pairs of order 6.
pub fn labeled_pair(label: &str) -> Option<LyndonPair> {
    if let Some(m) = label.strip_prefix("L(").and_then(|s| s.strip_suffix(')')) {
        return free_nilpotent(2, m.parse().ok()?).ok();
    }
    if let Some(n) = label.strip_prefix('L') {
        return filiform_l(n.parse::<usize>().ok()? + 1).ok();
    }
    if let Some(n) = label.strip_prefix('Q') {
        return filiform_q(n.parse::<usize>().ok()? + 1).ok();
    }
    match label {
        "N1" => entry("6.4.1").map(|e| e.pair.clone()),
        "N2" => entry("6.4.2").map(|e| e.pair.clone()),
        _ => None,
    }
}
