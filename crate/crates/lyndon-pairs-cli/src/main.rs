//! `lyndon-pairs`: batch access to Lyndon words, Lyndon pairs, monomial
//! algebras and Gröbner–Shirshov checks.
//!
//! Exit codes: 0 success, 1 malformed input, 2 search or degree bound exhausted.

mod render;

use std::fs;
use std::io::{self, Read};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use lyndon_pairs::catalog;
use lyndon_pairs::gs::{gs_complete, is_gs_basis, Verdict};
use lyndon_pairs::lie::{expand, left_standard_bracketing, standard_bracketing};
use lyndon_pairs::monomial::{chain_report, count_normal};
use lyndon_pairs::pairs::{enumerate_pairs, LyndonPair, PairDocument};
use lyndon_pairs::words::{cfl_factorize, lyndon_words, lyndon_words_of_length};
use lyndon_pairs::{Alphabet, Error, Word};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use render::{join, Format, Output};

const TSV_COLUMNS: &str = "\
TSV columns:
  lyndon list        word, length
  lyndon factor      factor
  lyndon bracket     word, bracketing, expansion
  pair atoms|obstructions|connected
                     word
  pair check         key, value
  enumerate, catalog id, d, m, c, connected, atoms, obstructions
  gldim              n, tails, witness
  hilbert            degree, coefficient
  gs check           omega, u, v, status
  gs complete        leading, relation
  classify           id, m, c, connected, verdict, completed_atoms";

#[derive(Parser)]
#[command(name = "lyndon-pairs", version, about = "Lyndon pairs, monomial Lie algebras and Gröbner–Shirshov bases", after_help = TSV_COLUMNS)]
struct Cli {
    /// Comma-separated alphabet symbols, smallest first.
    #[arg(long, global = true, default_value = "x,y")]
    alphabet: String,
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    /// Worker threads for enumerate and classify (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Lyndon words, factorizations and bracketings.
    #[command(subcommand)]
    Lyndon(LyndonCmd),
    /// Atom/obstruction duality and pair invariants.
    #[command(subcommand)]
    Pair(PairCmd),
    /// All Lyndon pairs of order d up to isomorphism.
    Enumerate {
        #[arg(long)]
        d: usize,
    },
    /// Global dimension by the n-chain criterion.
    Gldim {
        #[command(flatten)]
        input: PairInput,
        /// Longest chain word searched.
        #[arg(long, default_value_t = 256)]
        bound: usize,
    },
    /// Hilbert series coefficients of the monomial algebra up to a degree.
    Hilbert {
        #[command(flatten)]
        input: PairInput,
        #[arg(long)]
        degree: usize,
    },
    /// Gröbner–Shirshov verification and completion.
    #[command(subcommand)]
    Gs(GsCmd),
    /// Named families and the reference pairs.
    Catalog {
        /// filiform-l, filiform-q, free, fibonacci, nonmonomial or golden.
        #[arg(long)]
        family: String,
        /// Comma-separated integer parameters.
        #[arg(long, default_value = "")]
        params: String,
    },
    /// Enumerate order d, check every class and complete the nonstandard ones.
    Classify {
        #[arg(long)]
        d: usize,
    },
}

#[derive(Subcommand)]
enum LyndonCmd {
    List {
        /// Longest word listed.
        #[arg(long)]
        max_length: usize,
        /// List only this length.
        #[arg(long)]
        exact: bool,
    },
    Factor {
        word: String,
    },
    Bracket {
        word: String,
        /// Use the left standard factorization.
        #[arg(long)]
        left: bool,
    },
}

#[derive(Subcommand)]
enum PairCmd {
    /// Atoms N(W) of an obstruction set.
    Atoms(PairInput),
    /// Obstructions W(N) of an atom set.
    Obstructions(PairInput),
    /// Validate a pair and report its invariants.
    Check(PairInput),
    /// The connected component of the atoms.
    Connected(PairInput),
}

#[derive(Subcommand)]
enum GsCmd {
    /// Compute every 2-chain composition of [W].
    Check {
        #[command(flatten)]
        input: PairInput,
        /// Compute compositions the shortcuts would skip.
        #[arg(long)]
        no_shortcuts: bool,
    },
    /// Complete [W] to a reduced Gröbner–Shirshov basis.
    Complete {
        #[command(flatten)]
        input: PairInput,
        /// Longest composition considered (default 2m + 2).
        #[arg(long)]
        bound: Option<usize>,
    },
}

/// A pair given inline or as a JSON pair document (`-` reads stdin).
#[derive(Args, Clone)]
struct PairInput {
    #[arg(long, conflicts_with_all = ["atoms", "obstructions"])]
    pair: Option<String>,
    /// Atom words separated by commas or spaces.
    #[arg(long, conflicts_with = "obstructions")]
    atoms: Option<String>,
    /// Obstruction words separated by commas or spaces.
    #[arg(long)]
    obstructions: Option<String>,
}

enum Failure {
    Input(String),
    Bound(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BoundExhausted(_) => Failure::Bound(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

type Res<T> = Result<T, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(n) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    let format = cli.format;
    match run(cli) {
        Ok((out, code)) => match out.emit(format) {
            Ok(()) => ExitCode::from(code),
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(1)
            }
        },
        Err(Failure::Input(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Bound(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}

/// Runs one command; the exit code is 2 when output is partial because a bound was hit.
fn run(cli: Cli) -> Res<(Output, u8)> {
    let alphabet = Alphabet::parse(&cli.alphabet)?;
    let ok = |o: Output| Ok((o, 0));
    match cli.command {
        Command::Lyndon(cmd) => ok(lyndon(&alphabet, cmd)?),
        Command::Pair(cmd) => ok(pair(&alphabet, cmd)?),
        Command::Enumerate { d } => {
            eprintln!("enumerating pairs of order {d}");
            let pairs = enumerate_pairs(alphabet.size(), d)?;
            eprintln!("{} classes", pairs.len());
            let listed: Vec<(String, LyndonPair)> =
                pairs.into_iter().enumerate().map(|(i, p)| ((i + 1).to_string(), p)).collect();
            ok(pair_table(&alphabet, &listed))
        }
        Command::Gldim { input, bound } => gldim(&alphabet, &input, bound),
        Command::Hilbert { input, degree } => {
            let (alphabet, w) = obstruction_input(&alphabet, &input)?;
            let coeffs: Vec<String> = count_normal(alphabet.size(), &w, degree).iter().map(|c| c.to_string()).collect();
            let rows = coeffs.iter().enumerate().map(|(k, c)| vec![k.to_string(), c.clone()]).collect();
            ok(Output::new(json!({ "coefficients": coeffs }), vec!["degree", "coefficient"], rows))
        }
        Command::Gs(cmd) => gs(&alphabet, cmd),
        Command::Catalog { family, params } => ok(catalog_cmd(&family, &params)?),
        Command::Classify { d } => ok(classify(&alphabet, d)?),
    }
}

fn parse_words(alphabet: &Alphabet, list: &str) -> Res<Vec<Word>> {
    list.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| alphabet.parse_word(s).map_err(Failure::from))
        .collect()
}

fn fmt_words(alphabet: &Alphabet, ws: &[Word]) -> Vec<String> {
    ws.iter().map(|w| alphabet.format(w)).collect()
}

fn word_list(alphabet: &Alphabet, key: &str, ws: &[Word]) -> Output {
    let words = fmt_words(alphabet, ws);
    let rows = words.iter().map(|w| vec![w.clone()]).collect();
    Output::new(json!({ key: words }), vec!["word"], rows)
}

fn read_document(path: &str) -> Res<PairDocument> {
    let text = if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| Failure::Input(format!("stdin: {e}")))?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Input(format!("{path}: {e}")))?
    };
    serde_json::from_str(&text).map_err(|e| Failure::Input(format!("{path}: {e}")))
}

/// The pair described by the input; a document's alphabet overrides `--alphabet`.
fn pair_input(alphabet: &Alphabet, input: &PairInput) -> Res<(Alphabet, LyndonPair)> {
    if let Some(path) = &input.pair {
        return Ok(read_document(path)?.parse()?);
    }
    let pair = match (&input.atoms, &input.obstructions) {
        (Some(a), _) => LyndonPair::from_atoms(alphabet.size(), &parse_words(alphabet, a)?)?,
        (None, Some(w)) => LyndonPair::from_obstructions(alphabet.size(), &parse_words(alphabet, w)?)?,
        (None, None) => return Err(Failure::Input("give --pair, --atoms or --obstructions".into())),
    };
    Ok((alphabet.clone(), pair))
}

/// Monomial relations given inline need not be Lyndon words or have finitely many atoms.
fn obstruction_input(alphabet: &Alphabet, input: &PairInput) -> Res<(Alphabet, Vec<Word>)> {
    if let (None, None, Some(w)) = (&input.pair, &input.atoms, &input.obstructions) {
        let mut w = parse_words(alphabet, w)?;
        if w.iter().any(|w| w.is_empty()) {
            return Err(Failure::Input("the empty word cannot be a relation".into()));
        }
        w.sort();
        w.dedup();
        return Ok((alphabet.clone(), w));
    }
    let (alphabet, pair) = pair_input(alphabet, input)?;
    Ok((alphabet, pair.obstructions().to_vec()))
}

fn lyndon(alphabet: &Alphabet, cmd: LyndonCmd) -> Res<Output> {
    match cmd {
        LyndonCmd::List { max_length, exact } => {
            let words =
                if exact { lyndon_words_of_length(alphabet.size(), max_length) } else { lyndon_words(alphabet.size(), max_length) };
            let mut words = words;
            words.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
            let names = fmt_words(alphabet, &words);
            let rows = names.iter().zip(&words).map(|(s, w)| vec![s.clone(), w.len().to_string()]).collect();
            Ok(Output::new(json!({ "words": names }), vec!["word", "length"], rows))
        }
        LyndonCmd::Factor { word } => {
            let w = alphabet.parse_word(&word)?;
            Ok(word_list(alphabet, "factors", &cfl_factorize(&w)))
        }
        LyndonCmd::Bracket { word, left } => {
            let w = alphabet.parse_word(&word)?;
            let tree = if left { left_standard_bracketing(&w)? } else { standard_bracketing(&w)? };
            let p = expand(&tree);
            let (bracketing, expansion) = (tree.display(alphabet), p.display(alphabet));
            let doc = json!({
                "word": alphabet.format(&w),
                "bracketing": bracketing,
                "expansion": p.to_documents(alphabet),
            });
            Ok(Output::new(doc, vec!["word", "bracketing", "expansion"], vec![vec![alphabet.format(&w), bracketing, expansion]]))
        }
    }
}

fn pair(alphabet: &Alphabet, cmd: PairCmd) -> Res<Output> {
    match cmd {
        PairCmd::Atoms(input) => {
            let (alphabet, pair) = pair_input(alphabet, &input)?;
            Ok(word_list(&alphabet, "atoms", pair.atoms()))
        }
        PairCmd::Obstructions(input) => {
            let (alphabet, pair) = pair_input(alphabet, &input)?;
            Ok(word_list(&alphabet, "obstructions", pair.obstructions()))
        }
        PairCmd::Connected(input) => {
            let (alphabet, pair) = pair_input(alphabet, &input)?;
            Ok(word_list(&alphabet, "component", &pair.connected_component()))
        }
        PairCmd::Check(input) => {
            let (alphabet, pair) = pair_input(alphabet, &input)?;
            let inv = pair.invariants();
            let canonical = pair.canonical();
            let doc = json!({
                "pair": pair.to_document(&alphabet),
                "adjacent_products": pair.adjacent_products_property(),
                "canonical_obstructions": fmt_words(&alphabet, canonical.obstructions()),
            });
            let c = inv.c.map_or_else(|| "-".into(), |c| c.to_string());
            let rows = [
                ("d", inv.d.to_string()),
                ("m", inv.m.to_string()),
                ("c", c),
                ("connected", inv.connected.to_string()),
                ("adjacent_products", pair.adjacent_products_property().to_string()),
                ("atoms", join(&fmt_words(&alphabet, pair.atoms()))),
                ("obstructions", join(&fmt_words(&alphabet, pair.obstructions()))),
                ("canonical_obstructions", join(&fmt_words(&alphabet, canonical.obstructions()))),
            ];
            Ok(Output::new(doc, vec!["key", "value"], rows.into_iter().map(|(k, v)| vec![k.to_string(), v]).collect()))
        }
    }
}

#[derive(Serialize)]
struct PairRow {
    id: String,
    #[serde(flatten)]
    pair: PairDocument,
}

fn pair_table(alphabet: &Alphabet, pairs: &[(String, LyndonPair)]) -> Output {
    let docs: Vec<PairRow> =
        pairs.iter().map(|(id, p)| PairRow { id: id.clone(), pair: p.to_document(alphabet) }).collect();
    let rows = pairs
        .iter()
        .map(|(id, p)| {
            let inv = p.invariants();
            vec![
                id.clone(),
                inv.d.to_string(),
                inv.m.to_string(),
                inv.c.map_or_else(|| "-".into(), |c| c.to_string()),
                inv.connected.to_string(),
                join(&fmt_words(alphabet, p.atoms())),
                join(&fmt_words(alphabet, p.obstructions())),
            ]
        })
        .collect();
    Output::new(docs, vec!["id", "d", "m", "c", "connected", "atoms", "obstructions"], rows)
}

fn gldim(alphabet: &Alphabet, input: &PairInput, bound: usize) -> Res<(Output, u8)> {
    let (alphabet, w) = obstruction_input(alphabet, input)?;
    let report = chain_report(alphabet.size(), &w, None, bound);
    let levels: Vec<_> = report
        .levels
        .iter()
        .map(|l| json!({ "n": l.n, "tails": l.tails, "witness": l.witness.as_ref().map(|w| alphabet.format(w)) }))
        .collect();
    let rows = report
        .levels
        .iter()
        .map(|l| vec![l.n.to_string(), l.tails.to_string(), l.witness.as_ref().map_or("-".into(), |w| alphabet.format(w))])
        .collect();
    let doc = json!({
        "global_dimension": report.global_dimension,
        "bound_hit": report.bound_hit,
        "search_bound": report.search_bound,
        "levels": levels,
    });
    if report.global_dimension.is_none() {
        eprintln!("error: chain search bound {bound} exhausted; levels shown are partial");
    }
    Ok((Output::new(doc, vec!["n", "tails", "witness"], rows), if report.global_dimension.is_some() { 0 } else { 2 }))
}

fn gs(alphabet: &Alphabet, cmd: GsCmd) -> Res<(Output, u8)> {
    match cmd {
        GsCmd::Check { input, no_shortcuts } => {
            let (alphabet, pair) = pair_input(alphabet, &input)?;
            let report = is_gs_basis(&pair, !no_shortcuts);
            let rows = report
                .chains
                .iter()
                .map(|c| {
                    let status = match (&c.skipped, &c.composition) {
                        (Some(s), _) => format!("skipped:{}", serde_json::to_value(s).unwrap().as_str().unwrap_or("")),
                        (None, Some(k)) if k.solvable() => "solvable".into(),
                        (None, Some(k)) => format!("nonzero:{}", k.normal_form.display(&alphabet)),
                        (None, None) => "-".into(),
                    };
                    vec![alphabet.format(&c.omega), alphabet.format(&c.u), alphabet.format(&c.v), status]
                })
                .collect();
            Ok((Output::new(report.to_document(&alphabet), vec!["omega", "u", "v", "status"], rows), 0))
        }
        GsCmd::Complete { input, bound } => {
            let (alphabet, pair) = pair_input(alphabet, &input)?;
            let report = gs_complete(&pair, bound)?;
            let rows = report
                .basis
                .iter()
                .zip(&report.obstructions)
                .map(|(p, w)| vec![alphabet.format(w), p.display(&alphabet)])
                .collect();
            let code = if report.verdict == Verdict::BoundExhausted {
                eprintln!("error: degree bound {} exhausted; basis is partial", report.degree_bound.unwrap_or(0));
                2
            } else {
                0
            };
            Ok((Output::new(report.to_document(&alphabet), vec!["leading", "relation"], rows), code))
        }
    }
}

fn int_params(params: &str) -> Res<Vec<usize>> {
    params
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| s.trim().parse().map_err(|_| Failure::Input(format!("bad parameter `{s}`"))))
        .collect()
}

fn catalog_cmd(family: &str, params: &str) -> Res<Output> {
    let p = int_params(params)?;
    let arg = |i: usize| p.get(i).copied().ok_or_else(|| Failure::Input(format!("{family} needs {} parameter(s)", i + 1)));
    let (alphabet, pairs): (Alphabet, Vec<(String, LyndonPair)>) = match family {
        "filiform-l" => (Alphabet::binary(), vec![(format!("L{}", arg(0)? - 1), catalog::filiform_l(arg(0)?)?)]),
        "filiform-q" => (Alphabet::binary(), vec![(format!("Q{}", arg(0)? - 1), catalog::filiform_q(arg(0)?)?)]),
        "free" => {
            let (n, m) = (arg(0)?, arg(1)?);
            (Alphabet::standard(n)?, vec![(format!("L({m})"), catalog::free_nilpotent(n, m)?)])
        }
        "fibonacci" => (Alphabet::binary(), vec![(format!("F{}", arg(0)?), catalog::fibonacci_pair(arg(0)?)?)]),
        "nonmonomial" => (Alphabet::binary(), vec![("18-atoms".into(), catalog::nonmonomial_basis_pair())]),
        "golden" => {
            let d = arg(0)?;
            let entries = match d {
                6 => catalog::golden_d6(),
                7 => catalog::golden_d7(),
                _ => return Err(Failure::Input(format!("reference pairs exist for d = 6, 7, not {d}"))),
            };
            (Alphabet::binary(), entries.into_iter().map(|e| (e.id, e.pair)).collect())
        }
        _ => return Err(Failure::Input(format!("unknown family `{family}`"))),
    };
    Ok(pair_table(&alphabet, &pairs))
}

#[derive(Serialize)]
struct ClassRow {
    id: String,
    pair: PairDocument,
    verdict: Verdict,
    completed_atoms: Option<Vec<String>>,
}

/// Reference id of a class, if it appears in the reference lists. Classes
/// without one get `d.m.#k`, `k` being the row number.
fn reference_id(p: &LyndonPair) -> Option<(usize, String)> {
    catalog::golden()
        .iter()
        .enumerate()
        .find(|(_, e)| e.pair.canonical() == *p)
        .map(|(i, e)| (i, e.id.clone()))
}

struct Classified {
    /// Position in the reference lists, if listed.
    position: Option<usize>,
    id: Option<String>,
    pair: LyndonPair,
    verdict: Verdict,
    completed: Option<Vec<Word>>,
}

fn classify(alphabet: &Alphabet, d: usize) -> Res<Output> {
    eprintln!("enumerating pairs of order {d}");
    let pairs = enumerate_pairs(alphabet.size(), d)?;
    eprintln!("checking {} classes", pairs.len());
    let mut rows: Vec<Classified> = pairs
        .into_par_iter()
        .map(|pair| {
            let verdict = is_gs_basis(&pair, true).verdict;
            let completed = match verdict {
                Verdict::Standard => None,
                _ => Some(gs_complete(&pair, None)?.atoms),
            };
            let reference = if alphabet.size() == 2 { reference_id(&pair) } else { None };
            let (position, id) = reference.unzip();
            Ok(Classified { position, id, pair, verdict, completed })
        })
        .collect::<Result<_, Error>>()?;
    rows.sort_by(|a, b| {
        (a.position.unwrap_or(usize::MAX), a.pair.m(), &a.pair).cmp(&(b.position.unwrap_or(usize::MAX), b.pair.m(), &b.pair))
    });
    let docs: Vec<ClassRow> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| ClassRow {
            id: r.id.clone().unwrap_or_else(|| format!("{d}.{}.#{}", r.pair.m(), i + 1)),
            pair: r.pair.to_document(alphabet),
            verdict: r.verdict,
            completed_atoms: r.completed.as_ref().map(|c| fmt_words(alphabet, c)),
        })
        .collect();
    let table = docs
        .iter()
        .zip(&rows)
        .map(|(doc, r)| {
            let inv = r.pair.invariants();
            vec![
                doc.id.clone(),
                inv.m.to_string(),
                inv.c.map_or_else(|| "-".into(), |c| c.to_string()),
                inv.connected.to_string(),
                serde_json::to_value(doc.verdict).unwrap().as_str().unwrap_or("").to_string(),
                r.completed.as_ref().map_or_else(|| "-".into(), |c| join(&fmt_words(alphabet, c))),
            ]
        })
        .collect();
    Ok(Output::new(docs, vec!["id", "m", "c", "connected", "verdict", "completed_atoms"], table))
}
