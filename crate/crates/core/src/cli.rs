//! Command-line front end.
//!
//! Every command prints its report line by line and finishes with
//! `RESULT: ok`, `RESULT: fail` or `RESULT: none`. Exit status is 0 for ok,
//! 1 for fail and none, 2 for usage or input-format errors, 3 for I/O errors.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::endo::{
    check_conj_idem, e_hom, is_inner, kernel_witness_to_splitting, splitting_power,
    verify_conjugation_identity, ConjIdemWitness, FreeEndo, InnerVerdict, SplitResult,
};
use crate::pi1::{basepoint_iso_report, enumerate_classes, GraphComplex};
use crate::text::{parse_endo, parse_fword, parse_graph, parse_path, parse_word, TextError};
use crate::thompson::{
    commuting_family_report, standard_form_check, standard_form_of, standard_form_search, to_pl,
    verify_presentation, word_problem_verdicts,
};
use crate::verify::{run_all, Profile};
use crate::word::Word;

#[derive(Debug, Parser)]
#[command(name = "idemsplit", version, about = "Thompson's group F, free-group endomorphisms and graph groups")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Normal form of an F-word.
    Nf { word: String },
    /// Decide equality of two F-words with both word-problem oracles.
    Eq { u: String, v: String },
    /// Breakpoints of the PL map of an F-word.
    Pl { word: String },
    /// Check the defining relations of F in the PL model.
    VerifyPresentation {
        #[arg(long)]
        depth: u64,
    },
    /// Check that c_i = a_3i^-1 a_3i+1 commute and are independent.
    #[command(name = "verify-l31")]
    VerifyL31 {
        #[arg(long)]
        imax: u64,
        #[arg(long)]
        bound: u32,
    },
    /// Decompose an F-word as a_i^n s^(i+1)(b).
    StandardForm { word: String },
    /// Search for a conjugate of an F-word in standard form.
    StandardFormSearch {
        word: String,
        #[arg(long)]
        radius: usize,
    },
    /// Endomorphisms of free groups, read from a file.
    Endo {
        #[command(subcommand)]
        action: EndoCommand,
    },
    /// Relative fundamental groups of graphs, read from a file.
    Pi1 {
        #[command(subcommand)]
        action: Pi1Command,
    },
    /// Run the full verification suite.
    VerifyAll {
        #[arg(long, default_value = "small")]
        profile: Profile,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Subcommand)]
enum EndoCommand {
    /// Check f^2(x) = x0^-1 f(x) x0 on generators.
    Check { file: PathBuf },
    /// Check x_i^-k f^m(x) x_i^k = f^(m+k)(x) on generators.
    VerifyIdentity {
        file: PathBuf,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        i: u32,
        #[arg(long)]
        k: u32,
    },
    /// Image of an F-word under e(a_k) = f^k(x0).
    EHom { file: PathBuf, word: String },
    /// Split a power of f from f^(i+1)(v) = x_i^k.
    Split {
        file: PathBuf,
        #[arg(long)]
        i: u32,
        #[arg(long)]
        k: u32,
        #[arg(long, allow_hyphen_values = true)]
        witness: String,
    },
    /// Split a power of f from a kernel element of e in standard form.
    SplitFromKernel { file: PathBuf, word: String },
    /// Look for a with f(x) = a^-1 x a.
    IsInner {
        file: PathBuf,
        #[arg(long, default_value_t = 8)]
        bound: u32,
    },
}

#[derive(Debug, Subcommand)]
enum Pi1Command {
    /// Check that the graph is connected and the base is a subtree.
    Validate { file: PathBuf },
    /// Canonical representative of a path's class.
    Class { file: PathBuf, path: String },
    /// Product of the classes of two paths.
    Product { file: PathBuf, p: String, q: String },
    /// All classes with canonical length at most L.
    Enumerate {
        file: PathBuf,
        #[arg(long)]
        maxlen: usize,
    },
    /// Check loops at x0 map isomorphically onto the relative group.
    IsoCheck {
        file: PathBuf,
        #[arg(long)]
        x0: usize,
        #[arg(long)]
        maxlen: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Ok,
    Fail,
    None,
}

impl Verdict {
    fn from_bool(b: bool) -> Verdict {
        if b {
            Verdict::Ok
        } else {
            Verdict::Fail
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Ok => 0,
            Verdict::Fail | Verdict::None => 1,
        }
    }

    fn label(self) -> &'static str {
        match self {
            Verdict::Ok => "ok",
            Verdict::Fail => "fail",
            Verdict::None => "none",
        }
    }
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Io(String),
}

impl From<TextError> for CliError {
    fn from(e: TextError) -> CliError {
        CliError::Usage(e.to_string())
    }
}

struct Report {
    lines: Vec<String>,
    verdict: Verdict,
}

impl Report {
    fn new() -> Report {
        Report { lines: Vec::new(), verdict: Verdict::Ok }
    }

    fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    fn done(mut self, verdict: Verdict) -> Result<Report, CliError> {
        self.verdict = verdict;
        Ok(self)
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn load_endo(path: &Path) -> Result<(FreeEndo, Option<Word>), CliError> {
    Ok(parse_endo(&read(path)?)?)
}

fn load_witness(path: &Path) -> Result<Result<ConjIdemWitness, String>, CliError> {
    let (f, x0) = load_endo(path)?;
    let x0 = x0.ok_or_else(|| CliError::Usage(format!("{}: no `x0 = <word>` line", path.display())))?;
    Ok(ConjIdemWitness::new(f, x0).map_err(|e| e.to_string()))
}

fn load_graph(path: &Path) -> Result<GraphComplex, CliError> {
    Ok(parse_graph(&read(path)?)?)
}

fn endo_lines(r: &mut Report, name: &str, f: &FreeEndo) {
    for (s, img) in f.images().iter().enumerate() {
        r.line(format!("{name}(x{s}) = {}", show_x(img)));
    }
}

fn show_x(w: &Word) -> String {
    if w.is_identity() {
        "1".into()
    } else {
        w.render('x')
    }
}

fn split_report(mut r: Report, result: Result<SplitResult, String>) -> Result<Report, CliError> {
    match result {
        Ok(s) => {
            r.line(format!("power: {}", s.power));
            r.line(format!("conjugator: {}", show_x(&s.conjugator)));
            endo_lines(&mut r, "g", &s.idempotent);
            r.line(format!("idempotent: {}", s.idempotent.is_idempotent()));
            r.done(Verdict::Ok)
        }
        Err(e) => {
            r.line(format!("error: {e}"));
            r.done(Verdict::Fail)
        }
    }
}

fn run_endo(action: EndoCommand) -> Result<Report, CliError> {
    let mut r = Report::new();
    match action {
        EndoCommand::Check { file } => {
            let (f, x0) = load_endo(&file)?;
            let x0 = x0.ok_or_else(|| CliError::Usage("no `x0 = <word>` line".into()))?;
            let ok = check_conj_idem(&f, &x0);
            r.line(format!("conjugate-idempotent: {ok}"));
            r.done(Verdict::from_bool(ok))
        }
        EndoCommand::VerifyIdentity { file, m, i, k } => {
            let wit = match load_witness(&file)? {
                Ok(w) => w,
                Err(e) => {
                    r.line(format!("error: {e}"));
                    return r.done(Verdict::Fail);
                }
            };
            let ok = verify_conjugation_identity(&wit, m, i, k)
                .map_err(|e| CliError::Usage(e.to_string()))?;
            r.line(format!("x_{i}^-{k} f^{m}(x) x_{i}^{k} = f^{}(x): {ok}", m + k));
            r.done(Verdict::from_bool(ok))
        }
        EndoCommand::EHom { file, word } => {
            let w = parse_fword(&word)?;
            match load_witness(&file)? {
                Ok(wit) => {
                    r.line(format!("e({}) = {}", w, show_x(&e_hom(&wit, &w))));
                    r.done(Verdict::Ok)
                }
                Err(e) => {
                    r.line(format!("error: {e}"));
                    r.done(Verdict::Fail)
                }
            }
        }
        EndoCommand::Split { file, i, k, witness } => {
            let v = parse_word(&witness, 'x')?;
            let res = load_witness(&file)?
                .and_then(|wit| splitting_power(&wit, i, k, &v).map_err(|e| e.to_string()));
            split_report(r, res)
        }
        EndoCommand::SplitFromKernel { file, word } => {
            let w = parse_fword(&word)?;
            let res = load_witness(&file)?
                .and_then(|wit| kernel_witness_to_splitting(&wit, &w).map_err(|e| e.to_string()));
            split_report(r, res)
        }
        EndoCommand::IsInner { file, bound } => {
            let (f, _) = load_endo(&file)?;
            match is_inner(&f, bound) {
                InnerVerdict::Inner(a) => {
                    r.line(format!("conjugator: {}", show_x(&a)));
                    r.done(Verdict::Ok)
                }
                InnerVerdict::NotConjugate { generator } => {
                    r.line(format!("not inner: f(x{generator}) is not conjugate to x{generator}"));
                    r.done(Verdict::Fail)
                }
                InnerVerdict::NotFound => {
                    r.line(format!("no common conjugator with exponent bound {bound}"));
                    r.done(Verdict::None)
                }
            }
        }
    }
}

fn run_pi1(action: Pi1Command) -> Result<Report, CliError> {
    let mut r = Report::new();
    let class_of = |g: &GraphComplex, text: &str| -> Result<Result<_, String>, CliError> {
        let steps = parse_path(text)?;
        Ok(g.path_from_steps(steps)
            .and_then(|p| g.class_of(&p))
            .map_err(|e| e.to_string()))
    };
    match action {
        Pi1Command::Validate { file } => {
            let ok = load_graph(&file)?.validate();
            r.line(format!("valid: {ok}"));
            r.done(Verdict::from_bool(ok))
        }
        Pi1Command::Class { file, path } => {
            let g = load_graph(&file)?;
            match class_of(&g, &path)? {
                Ok(c) => {
                    r.line(format!("class: {c}"));
                    r.done(Verdict::Ok)
                }
                Err(e) => {
                    r.line(format!("error: {e}"));
                    r.done(Verdict::Fail)
                }
            }
        }
        Pi1Command::Product { file, p, q } => {
            let g = load_graph(&file)?;
            if !g.validate() {
                r.line("error: graph is not connected or the base is not a subtree");
                return r.done(Verdict::Fail);
            }
            match (class_of(&g, &p)?, class_of(&g, &q)?) {
                (Ok(a), Ok(b)) => {
                    r.line(format!("product: {}", g.rel_product(&a, &b)));
                    r.done(Verdict::Ok)
                }
                (Err(e), _) | (_, Err(e)) => {
                    r.line(format!("error: {e}"));
                    r.done(Verdict::Fail)
                }
            }
        }
        Pi1Command::Enumerate { file, maxlen } => {
            let g = load_graph(&file)?;
            let classes = enumerate_classes(&g, maxlen);
            for c in &classes {
                r.line(c.to_string());
            }
            r.line(format!("count: {}", classes.len()));
            r.done(Verdict::Ok)
        }
        Pi1Command::IsoCheck { file, x0, maxlen } => {
            let g = load_graph(&file)?;
            match basepoint_iso_report(&g, x0, maxlen) {
                Ok(rep) => {
                    r.line(format!("loops: {}", rep.loops));
                    r.line(format!("classes: {}", rep.classes));
                    r.line(format!("injective: {}", rep.injective));
                    r.line(format!("multiplicative: {}", rep.multiplicative));
                    r.line(format!("surjective: {}", rep.surjective));
                    r.done(Verdict::from_bool(rep.holds()))
                }
                Err(e) => {
                    r.line(format!("error: {e}"));
                    r.done(Verdict::Fail)
                }
            }
        }
    }
}

fn run(cmd: Command) -> Result<Report, CliError> {
    let mut r = Report::new();
    match cmd {
        Command::Nf { word } => {
            let w = parse_fword(&word)?;
            r.line(format!("normal form: {}", w.normal_form()));
            r.done(Verdict::Ok)
        }
        Command::Eq { u, v } => {
            let (u, v) = (parse_fword(&u)?, parse_fword(&v)?);
            let (nf, pl) = word_problem_verdicts(&u, &v);
            let say = |b: bool| if b { "equal" } else { "distinct" };
            r.line(format!("normal form: {}", say(nf)));
            r.line(format!("pl: {}", say(pl)));
            if nf != pl {
                r.line("error: the two oracles disagree");
                return r.done(Verdict::Fail);
            }
            r.done(Verdict::from_bool(nf))
        }
        Command::Pl { word } => {
            let w = parse_fword(&word)?;
            for l in to_pl(&w).render().lines() {
                r.line(l);
            }
            r.done(Verdict::Ok)
        }
        Command::VerifyPresentation { depth } => {
            let ok = verify_presentation(depth);
            let pairs = depth * (depth + 1) / 2;
            r.line(format!("relations checked: {pairs}"));
            r.line(format!("all hold: {ok}"));
            r.done(Verdict::from_bool(ok))
        }
        Command::VerifyL31 { imax, bound } => {
            let rep = commuting_family_report(imax, bound);
            r.line(format!("pairs checked: {}", rep.pairs_checked));
            r.line(format!("products checked: {}", rep.products_checked));
            for (i, j) in &rep.non_commuting {
                r.line(format!("c{i} and c{j} do not commute"));
            }
            for e in &rep.trivial_products {
                r.line(format!("trivial product with exponents {e:?}"));
            }
            r.done(Verdict::from_bool(rep.holds()))
        }
        Command::StandardForm { word } => {
            let w = parse_fword(&word)?;
            let literal = standard_form_check(&w);
            match literal.clone().or_else(|| standard_form_of(&w)) {
                Some(sf) => {
                    r.line(format!("i: {}", sf.i));
                    r.line(format!("n: {}", sf.n));
                    r.line(format!("b: {}", sf.b));
                    r.line(format!("literal: {}", literal.is_some()));
                    r.done(Verdict::Ok)
                }
                None => {
                    r.line("not in standard form");
                    r.done(Verdict::None)
                }
            }
        }
        Command::StandardFormSearch { word, radius } => {
            let w = parse_fword(&word)?;
            match standard_form_search(&w, radius) {
                Some((h, sf)) => {
                    r.line(format!("conjugator: {h}"));
                    r.line(format!("conjugate: {}", sf.render()));
                    r.line(format!("i: {}", sf.i));
                    r.line(format!("n: {}", sf.n));
                    r.line(format!("b: {}", sf.b));
                    r.done(Verdict::Ok)
                }
                None => {
                    r.line(format!("no standard-form conjugate within radius {radius}"));
                    r.done(Verdict::None)
                }
            }
        }
        Command::Endo { action } => run_endo(action),
        Command::Pi1 { action } => run_pi1(action),
        Command::VerifyAll { profile, seed } => {
            r.line(format!("profile: {profile}, seed: {seed}"));
            let outcomes = run_all(profile, seed);
            for o in &outcomes {
                r.line(o.to_string());
            }
            let failed: Vec<String> =
                outcomes.iter().filter(|o| !o.passed).map(|o| o.id.to_string()).collect();
            if !failed.is_empty() {
                r.line(format!("failed criteria: {}", failed.join(", ")));
            }
            r.done(Verdict::from_bool(failed.is_empty()))
        }
    }
}

/// Parses `args` (including the program name), runs the command and writes
/// the report to `out` and errors to `err`. Returns the exit status.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                2
            } else {
                let _ = write!(out, "{}", e.render());
                0
            };
            return code;
        }
    };
    match run(cli.command) {
        Ok(report) => {
            for l in &report.lines {
                let _ = writeln!(out, "{l}");
            }
            let _ = writeln!(out, "RESULT: {}", report.verdict.label());
            report.verdict.exit_code()
        }
        Err(CliError::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            2
        }
        Err(CliError::Io(m)) => {
            let _ = writeln!(err, "error: {m}");
            3
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run_with(std::iter::once("idemsplit").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn eq_examples() {
        let (code, out, _) = run_args(&["eq", "a0^-1 a1 a0", "a2"]);
        assert_eq!(code, 0);
        assert!(out.ends_with("RESULT: ok\n"));
        let (code, out, _) = run_args(&["eq", "a0", "a1"]);
        assert_eq!(code, 1);
        assert!(out.ends_with("RESULT: fail\n"));
    }

    #[test]
    fn parse_errors_are_usage_errors() {
        let (code, out, err) = run_args(&["nf", "a0^0"]);
        assert_eq!(code, 2);
        assert!(out.is_empty());
        assert!(err.contains("zero exponent at token 1"), "{err}");
        let (code, _, _) = run_args(&["frobnicate"]);
        assert_eq!(code, 2);
        let (code, _, _) = run_args(&["verify-all", "--profile", "huge"]);
        assert_eq!(code, 2);
        let (code, _, _) = run_args(&["verify-presentation", "--depth", "x"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn missing_file_is_io_error() {
        let (code, _, err) = run_args(&["pi1", "validate", "/nonexistent/graph.txt"]);
        assert_eq!(code, 3);
        assert!(err.contains("nonexistent"));
    }

    #[test]
    fn l31_and_presentation() {
        let (code, out, _) = run_args(&["verify-l31", "--imax", "2", "--bound", "2"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("products checked: 124"));
        let (code, _, _) = run_args(&["verify-presentation", "--depth", "6"]);
        assert_eq!(code, 0);
    }
}
