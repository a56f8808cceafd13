//! The `zbraid` command line. `run` does all the work and returns the exit
//! code with the text destined for stdout and stderr, so it can be tested
//! without spawning a process.

use std::fmt::Display;

use clap::{Parser, ValueEnum};
use serde_json::{json, Value};
use zbraid_core::bruhat::{BraidGerm, Perm};
use zbraid_core::engine::{group_eq, group_inv, group_mul, group_normal_form, Germ, GroupNF};
use zbraid_core::lattice::ZnGerm;
use zbraid_core::lex::precedes_witness;
use zbraid_core::presentation::{connect, decompose, replay_t, t_rewrite_to_d1, SWord};

use crate::format::{self, FormatError};
use crate::suites::{self, Config};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Verb {
    Nf,
    Eq,
    Mul,
    Inv,
    Precedes,
    Join,
    Meet,
    Decompose,
    RewriteType,
    Connect,
    Check,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GermKind {
    Zn,
    Braid,
}

/// Normal forms, lattice operations and presentation derivations for the
/// braid group of Z^n and the classical braid groups.
#[derive(Debug, Parser)]
#[command(name = "zbraid", version)]
pub struct Cli {
    pub verb: Verb,
    /// Words (`x | y^-1 | ..`), matrices (`a b; c d`), type words or S-words.
    #[arg(allow_hyphen_values = true)]
    pub args: Vec<String>,
    #[arg(long, value_enum, default_value = "zn")]
    pub germ: GermKind,
    /// Dimension for `--germ zn`; inferred from the first matrix if omitted.
    #[arg(long)]
    pub dim: Option<usize>,
    /// Strand count for `--germ braid`.
    #[arg(long, default_value_t = 3)]
    pub strands: usize,
    #[arg(long)]
    pub json: bool,
    /// Attach step logs to `rewrite-type` and `connect`.
    #[arg(long)]
    pub trace: bool,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long)]
    pub trials: Option<usize>,
    #[arg(long, default_value_t = zbraid_core::presentation::DEFAULT_DEPTH)]
    pub depth: usize,
    /// Property suite for `check`, or `all`.
    #[arg(long, default_value = "all")]
    pub suite: String,
}

/// Exit code and captured output of one invocation.
#[derive(Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Format(FormatError),
}

impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Self {
        Failure::Format(e)
    }
}

impl From<zbraid_core::Error> for Failure {
    fn from(e: zbraid_core::Error) -> Self {
        Failure::Format(e.into())
    }
}

type Res = Result<(i32, String), Failure>;

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(reorder(argv)) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match dispatch(&cli) {
        Ok((code, mut out)) => {
            if !out.is_empty() && !out.ends_with('\n') {
                out.push('\n');
            }
            Outcome { code, stdout: out, stderr: String::new() }
        }
        Err(f) => {
            let msg = match f {
                Failure::Usage(m) => m,
                Failure::Format(e) => e.to_string(),
            };
            Outcome { code: 2, stdout: String::new(), stderr: format!("error: {msg}\n") }
        }
    }
}

/// Move flags ahead of a `--` so that payloads such as `-1 0; 0 1` are never
/// mistaken for options, wherever the flags were written.
fn reorder<I, T>(argv: I) -> Vec<std::ffi::OsString>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    const SWITCHES: &[&str] = &["--json", "--trace", "--help", "-h", "--version", "-V"];
    let mut it = argv.into_iter().map(Into::into);
    let mut flags: Vec<std::ffi::OsString> = it.next().into_iter().collect();
    let mut rest = Vec::new();
    while let Some(a) = it.next() {
        match a.to_str() {
            Some("--") => {
                rest.extend(it.by_ref());
            }
            Some(s) if SWITCHES.contains(&s) || (s.starts_with("--") && s.contains('=')) => flags.push(a),
            Some(s) if s.starts_with("--") => {
                flags.push(a);
                flags.extend(it.next());
            }
            _ => rest.push(a),
        }
    }
    flags.push("--".into());
    flags.extend(rest);
    flags
}

fn arity(cli: &Cli, k: usize) -> Result<(), Failure> {
    if cli.args.len() != k {
        let verb = cli.verb.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
        return Err(Failure::Usage(format!("`{verb}` takes {k} argument(s), got {}", cli.args.len())));
    }
    Ok(())
}

/// Explicit `--dim`, or the size of the first matrix found in the input.
fn zn_dim(cli: &Cli) -> Result<usize, Failure> {
    if let Some(n) = cli.dim {
        return Ok(n);
    }
    for a in &cli.args {
        for (tok, _) in format::split_word(a) {
            let tok = tok.split('@').next().unwrap_or(tok);
            let body = tok.strip_prefix("h:").unwrap_or(tok);
            if let Ok(m) = format::parse_matrix(body, None) {
                return Ok(m.dim());
            }
        }
    }
    // report a malformed matrix before complaining about the dimension
    if let Some((tok, _)) = cli.args.iter().flat_map(|a| format::split_word(a)).next() {
        if tok.starts_with(|c: char| c.is_ascii_digit() || c == '-' || c == '[') {
            format::parse_matrix(tok.split('@').next().unwrap_or(tok), None)?;
        }
    }
    Err(Failure::Usage("cannot infer the dimension; pass --dim".into()))
}

fn dispatch(cli: &Cli) -> Res {
    match cli.verb {
        Verb::Check => check(cli),
        Verb::Decompose | Verb::RewriteType | Verb::Connect => presentation(cli, zn_dim(cli)?),
        _ => match cli.germ {
            GermKind::Zn => {
                let n = zn_dim(cli)?;
                let ops = Ops {
                    germ: ZnGerm::new(n),
                    letter: Box::new(move |s| format::parse_zn_letter(s, n)),
                    to_json: Box::new(format::matrix_json),
                    witness: Box::new(|a, b| {
                        precedes_witness(a, b).map(|x| x.iter().map(|v| v.to_string()).collect())
                    }),
                };
                germ_verb(cli, &ops)
            }
            GermKind::Braid => {
                let m = cli.strands;
                if m == 0 {
                    return Err(Failure::Usage("--strands must be positive".into()));
                }
                let ops = Ops {
                    germ: BraidGerm::new(m),
                    letter: Box::new(move |s| format::parse_perm(s, m)),
                    to_json: Box::new(format::perm_json),
                    witness: Box::new(braid_witness),
                };
                germ_verb(cli, &ops)
            }
        },
    }
}

/// An inversion of `a` that `b` lacks, as a pair of values.
fn braid_witness(a: &Perm, b: &Perm) -> Option<Vec<String>> {
    let ia = zbraid_core::bruhat::inversion_set(a);
    let ib = zbraid_core::bruhat::inversion_set(b);
    ia.into_iter().find(|p| !ib.contains(p)).map(|(i, j)| vec![i.to_string(), j.to_string()])
}

struct Ops<G: Germ> {
    germ: G,
    letter: Box<dyn Fn(&str) -> format::Result<G::Elem>>,
    to_json: Box<dyn Fn(&G::Elem) -> Value>,
    witness: Box<dyn Fn(&G::Elem, &G::Elem) -> Option<Vec<String>>>,
}

impl<G: Germ> Ops<G>
where
    G::Elem: Display,
{
    fn nf(&self, s: &str) -> Result<GroupNF<G::Elem>, Failure> {
        let w = format::parse_signed_word(s, &self.letter)?;
        Ok(group_normal_form(&self.germ, &w)?)
    }

    fn show(&self, cli: &Cli, nf: &GroupNF<G::Elem>) -> String {
        if cli.json {
            format::group_nf_json(nf, &self.to_json).to_string()
        } else {
            format::format_group_nf(nf)
        }
    }

    fn single(&self, s: &str) -> Result<G::Elem, Failure> {
        let w = format::split_word(s);
        match w.as_slice() {
            [(t, false)] => Ok((self.letter)(t)?),
            _ => Err(FormatError::Token { token: s.to_string(), why: "expected a single letter".into() }.into()),
        }
    }
}

fn germ_verb<G: Germ>(cli: &Cli, ops: &Ops<G>) -> Res
where
    G::Elem: Display,
{
    let g = &ops.germ;
    match cli.verb {
        Verb::Nf => {
            arity(cli, 1)?;
            Ok((0, ops.show(cli, &ops.nf(&cli.args[0])?)))
        }
        Verb::Inv => {
            arity(cli, 1)?;
            Ok((0, ops.show(cli, &group_inv(g, &ops.nf(&cli.args[0])?)?)))
        }
        Verb::Mul => {
            arity(cli, 2)?;
            let (a, b) = (ops.nf(&cli.args[0])?, ops.nf(&cli.args[1])?);
            Ok((0, ops.show(cli, &group_mul(g, &a, &b)?)))
        }
        Verb::Eq => {
            arity(cli, 2)?;
            let (a, b) = (ops.nf(&cli.args[0])?, ops.nf(&cli.args[1])?);
            let same = group_eq(g, &a, &b);
            let out = if cli.json { json!({ "equal": same }).to_string() } else { same.to_string() };
            Ok((if same { 0 } else { 1 }, out))
        }
        Verb::Precedes => {
            arity(cli, 2)?;
            let (a, b) = (ops.single(&cli.args[0])?, ops.single(&cli.args[1])?);
            let w = (ops.witness)(&a, &b);
            let out = match (cli.json, w) {
                (true, w) => {
                    let w: Option<Vec<Value>> =
                        w.map(|w| w.iter().map(|x| x.parse::<i64>().map_or_else(|_| json!(x), |v| json!(v))).collect());
                    json!({ "precedes": w.is_none(), "witness": w }).to_string()
                }
                (false, None) => "true".into(),
                (false, Some(w)) => format!("false\nwitness: {}", w.join(" ")),
            };
            Ok((0, out))
        }
        Verb::Join | Verb::Meet => {
            arity(cli, 2)?;
            let (a, b) = (ops.single(&cli.args[0])?, ops.single(&cli.args[1])?);
            let c = if cli.verb == Verb::Join { g.join_coset(&a, &b)? } else { g.meet_coset(&a, &b)? };
            let c = g.coset_key(&c);
            Ok((0, if cli.json { (ops.to_json)(&c).to_string() } else { c.to_string() }))
        }
        _ => unreachable!("handled by dispatch"),
    }
}

fn parse_type_word(s: &str) -> format::Result<Vec<usize>> {
    s.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| FormatError::Token { token: t.to_string(), why: "not a type letter".into() }))
        .collect()
}

fn show_sword(cli: &Cli, w: &SWord) -> String {
    if cli.json {
        format::sword_json(w).to_string()
    } else {
        format::format_sword(w)
    }
}

fn presentation(cli: &Cli, n: usize) -> Res {
    match cli.verb {
        Verb::Decompose => {
            arity(cli, 1)?;
            let x = format::parse_matrix(&cli.args[0], Some(n))?;
            Ok((0, show_sword(cli, &decompose(&x)?)))
        }
        Verb::RewriteType => {
            arity(cli, 1)?;
            let t = parse_type_word(&cli.args[0])?;
            let steps = t_rewrite_to_d1(n, &t)?;
            let end = replay_t(n, &t, &steps)?;
            let mut log = Vec::new();
            let mut cur = t.clone();
            for s in &steps {
                cur = zbraid_core::presentation::apply_t_step(n, &cur, s)?;
                log.push((s.clone(), cur.clone()));
            }
            if cli.json {
                let mut v = json!({ "start": t, "end": end, "steps": steps.len() });
                if cli.trace {
                    v["derivation"] = log.iter().map(|(s, w)| format::tstep_json(s, w)).collect();
                }
                return Ok((0, v.to_string()));
            }
            let words = |w: &[usize]| w.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(" ");
            let mut out = format!("{} -> {} in {} steps", words(&t), words(&end), steps.len());
            if cli.trace {
                for (s, w) in &log {
                    out.push_str(&format!("\n{} @{}: {}", s.rule.name(), s.pos, words(w)));
                }
            }
            Ok((0, out))
        }
        Verb::Connect => {
            arity(cli, 2)?;
            let w1 = format::parse_sword(&cli.args[0], n)?;
            let w2 = format::parse_sword(&cli.args[1], n)?;
            let steps = connect(&w1, &w2, cli.depth)?;
            if cli.json {
                let mut v = json!({ "moves": steps.len() });
                if cli.trace {
                    v["derivation"] = format::derivation_json(&w1, &steps)?;
                }
                return Ok((0, v.to_string()));
            }
            let mut out = format!("connected in {} moves", steps.len());
            if cli.trace {
                let mut cur = w1.clone();
                for s in &steps {
                    cur = zbraid_core::presentation::s_move(&cur, s)?;
                    out.push_str(&format!("\n{} @{}: {}", s.rule.name(), s.pos, format::format_sword(&cur)));
                }
            }
            Ok((0, out))
        }
        _ => unreachable!("handled by dispatch"),
    }
}

fn check(cli: &Cli) -> Res {
    let names: Vec<&str> = if cli.suite == "all" { suites::SUITES.to_vec() } else { vec![cli.suite.as_str()] };
    let cfg = Config { seed: cli.seed, trials: cli.trials, dims: cli.dim.into_iter().collect(), depth: cli.depth };
    let mut out = Vec::new();
    let mut ok = true;
    for name in names {
        let r = suites::run(name, &cfg)
            .ok_or_else(|| Failure::Usage(format!("unknown suite `{name}`; known: {}", suites::SUITES.join(", "))))?;
        ok &= r.passed();
        out.push(if cli.json { r.to_json().to_string() } else { r.to_string() });
    }
    Ok((if ok { 0 } else { 1 }, out.join("\n")))
}
