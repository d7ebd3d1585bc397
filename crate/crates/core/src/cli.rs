//! Command line front end.
//!
//! A problem file names the alphabet on its first line, may fix an ordering,
//! and lists one generator per line:
//!
//! ```text
//! # comments run to the end of the line
//! vars: x > y > z
//! ordering: deglex
//! x*y - z
//! y*z + 2*x + z
//! ```
//!
//! Result files use the same format followed by `# stats:` lines, so they can
//! be read back as problem files.

use std::ffi::OsString;
use std::fmt;
use std::io::{BufRead, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, ValueEnum};

use crate::algebra::{parse_polynomial, Alphabet, Polynomial};
use crate::error::Error;
use crate::groebner::{
    mora, normal_form, reduce_basis, reduce_basis_logged, GroebnerOptions, Limits, LoggedRepresentation,
    SelectionStrategy, Status,
};
use crate::involutive::{involutive_basis, Division, DivisorMode, InvolutiveOptions};
use crate::orderings::MonomialOrdering;
use crate::walk::{groebner_walk, involutive_walk};

pub const EXIT_COMPLETE: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_CAP: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Algorithm {
    Groebner,
    Involutive,
    Gwalk,
    Iwalk,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Groebner => "groebner",
            Algorithm::Involutive => "involutive",
            Algorithm::Gwalk => "gwalk",
            Algorithm::Iwalk => "iwalk",
        }
    }

    /// Extension of the result file.
    pub fn abbrev(self) -> &'static str {
        match self {
            Algorithm::Groebner => "gb",
            Algorithm::Involutive => "inv",
            Algorithm::Gwalk => "gw",
            Algorithm::Iwalk => "iw",
        }
    }

    fn is_involutive(self) -> bool {
        matches!(self, Algorithm::Involutive | Algorithm::Iwalk)
    }

    fn is_walk(self) -> bool {
        matches!(self, Algorithm::Gwalk | Algorithm::Iwalk)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Divisors {
    Thin,
    Thick,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Strategy {
    Normal,
    Sugar,
}

#[derive(Debug, Parser)]
#[command(name = "ncbasis", version, about = "Noncommutative Groebner and involutive bases over the rationals")]
pub struct Args {
    /// Problem file: `vars:` line, optional `ordering:` line, one generator per line.
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = Algorithm::Groebner)]
    pub algorithm: Algorithm,
    /// deglex, deginvlex or degrevlex; overrides the file. Target ordering for walks.
    #[arg(long)]
    pub ordering: Option<String>,
    /// Source ordering of a walk; the source basis is computed first.
    #[arg(long)]
    pub from: Option<String>,
    /// Involutive division key, 1 to 12 (default 1, the left division).
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=12))]
    pub division: Option<u8>,
    /// Involutive divisor mode (default thin).
    #[arg(long, value_enum)]
    pub divisors: Option<Divisors>,
    #[arg(long, value_enum, default_value_t = Strategy::Normal)]
    pub strategy: Strategy,
    /// Disable the second criterion in the Groebner basis algorithm.
    #[arg(long)]
    pub no_criterion: bool,
    #[arg(long, default_value_t = 20)]
    pub max_degree: usize,
    #[arg(long, default_value_t = 100_000)]
    pub max_iterations: usize,
    /// Repeat for more detail on stderr.
    #[arg(short, long, action = clap::ArgAction::Count)]
    pub verbose: u8,
    /// Append each basis element's representation over the generators.
    #[arg(long)]
    pub log: bool,
    /// After the run, answer ideal membership queries read from stdin.
    #[arg(long)]
    pub membership: bool,
    /// Result file (default `<stem>.<ordering>.<algorithm>` next to the input).
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

/// A parse failure in a problem file; line and column are 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProblemError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

impl fmt::Display for ProblemError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.col, self.msg)
    }
}

impl std::error::Error for ProblemError {}

#[derive(Clone, Debug)]
pub struct ProblemFile {
    pub alphabet: Alphabet,
    pub ordering: Option<MonomialOrdering>,
    /// Tagged with `ordering`, or DegRevLex when the file sets none.
    pub generators: Vec<Polynomial>,
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("")
}

/// Character column (1-based) of byte offset `at` in `line`.
fn column(line: &str, at: usize) -> usize {
    line[..at].chars().count() + 1
}

fn leading_ws(s: &str) -> usize {
    s.len() - s.trim_start().len()
}

fn parse_vars(line: &str, rest_at: usize, lno: usize) -> Result<Alphabet, ProblemError> {
    let rest = &line[rest_at..];
    let mut names = Vec::new();
    let mut at = rest_at;
    for piece in rest.split('>') {
        let name = piece.trim();
        let start = at + leading_ws(piece);
        if name.is_empty() {
            return Err(ProblemError { line: lno, col: column(line, start), msg: "empty variable name".into() });
        }
        if names.iter().any(|(n, _): &(String, usize)| n == name) {
            return Err(ProblemError { line: lno, col: column(line, start), msg: format!("duplicate variable `{name}`") });
        }
        names.push((name.to_string(), start));
        at += piece.len() + 1;
    }
    let plain: Vec<&str> = names.iter().map(|(n, _)| n.as_str()).collect();
    Alphabet::new(&plain).map_err(|e| {
        let col = names.first().map_or(rest_at, |(_, s)| *s);
        ProblemError { line: lno, col: column(line, col), msg: e.to_string() }
    })
}

/// Parses a problem file (or a result file, whose extra lines are comments).
pub fn parse_problem(text: &str) -> Result<ProblemFile, ProblemError> {
    let mut alphabet: Option<Alphabet> = None;
    let mut ordering = None;
    let mut raw: Vec<(usize, usize, &str)> = Vec::new();
    let mut last_line = 1;
    for (k, full) in text.lines().enumerate() {
        let lno = k + 1;
        last_line = lno;
        let line = strip_comment(full);
        if line.trim().is_empty() {
            continue;
        }
        let at = leading_ws(line);
        let body = line.trim();
        match &alphabet {
            None => {
                if !body.starts_with("vars:") {
                    return Err(ProblemError { line: lno, col: column(line, at), msg: "expected `vars: <name> > <name> ...`".into() });
                }
                alphabet = Some(parse_vars(line, at + "vars:".len(), lno)?);
            }
            Some(_) => {
                if let Some(rest) = body.strip_prefix("ordering:") {
                    if ordering.is_some() || !raw.is_empty() {
                        return Err(ProblemError { line: lno, col: column(line, at), msg: "the ordering line must precede the generators".into() });
                    }
                    let name = rest.trim();
                    let col = column(line, at + "ordering:".len() + leading_ws(rest));
                    ordering = Some(
                        MonomialOrdering::from_name(name, false)
                            .map_err(|e| ProblemError { line: lno, col, msg: e.to_string() })?,
                    );
                } else {
                    raw.push((lno, at, line));
                }
            }
        }
    }
    let Some(alphabet) = alphabet else {
        return Err(ProblemError { line: last_line, col: 1, msg: "missing `vars:` line".into() });
    };
    if raw.is_empty() {
        return Err(ProblemError { line: last_line, col: 1, msg: "no generator polynomials".into() });
    }
    let ord = ordering.unwrap_or(MonomialOrdering::DegRevLex);
    let generators = raw
        .into_iter()
        .map(|(lno, at, line)| {
            parse_polynomial(&line[at..], &alphabet, ord).map_err(|e| {
                let (col, msg) = match &e {
                    Error::Parse { col, .. } | Error::UnknownGenerator { col, .. } => (*col, e.to_string()),
                    _ => (1, e.to_string()),
                };
                ProblemError { line: lno, col: column(line, at) + col - 1, msg }
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ProblemFile { alphabet, ordering, generators })
}

/// Renders a basis in the problem-file format.
pub fn format_basis(alphabet: &Alphabet, ord: MonomialOrdering, basis: &[Polynomial]) -> String {
    let mut s = format!("vars: {}\nordering: {}\n", alphabet.names().join(" > "), ord.name());
    for p in basis {
        s.push_str(&p.format(alphabet));
        s.push('\n');
    }
    s
}

fn format_log(alphabet: &Alphabet, log: &LoggedRepresentation) -> String {
    let parts: Vec<String> = log
        .triples()
        .into_iter()
        .map(|(l, k, r)| {
            let mut s = format!("({})", l.coeff);
            if !l.word.is_one() {
                s.push_str(&format!("*{}", l.word.format(alphabet)));
            }
            s.push_str(&format!("*[{}]", k + 1));
            if !r.word.is_one() {
                s.push_str(&format!("*{}", r.word.format(alphabet)));
            }
            s
        })
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

/// Output of one dispatched run.
struct Outcome {
    basis: Vec<Polynomial>,
    logs: Option<Vec<LoggedRepresentation>>,
    status: Status,
    stats: Vec<(&'static str, String)>,
}

fn parse_ordering(name: &str) -> Result<MonomialOrdering, String> {
    MonomialOrdering::from_name(name, false).map_err(|e| e.to_string())
}

fn involutive_options(args: &Args, limits: Limits) -> Result<InvolutiveOptions, String> {
    let division = Division::from_key(args.division.unwrap_or(1)).map_err(|e| e.to_string())?;
    let mode = match args.divisors.unwrap_or(Divisors::Thin) {
        Divisors::Thin => DivisorMode::Thin,
        Divisors::Thick => DivisorMode::Thick,
    };
    Ok(InvolutiveOptions { division, mode, limits, logging: args.log })
}

fn dispatch(args: &Args, problem: &ProblemFile, target: MonomialOrdering) -> Result<Outcome, String> {
    let limits = Limits { max_degree: args.max_degree, max_iterations: args.max_iterations };
    let gopts = GroebnerOptions {
        strategy: match args.strategy {
            Strategy::Normal => SelectionStrategy::Normal,
            Strategy::Sugar => SelectionStrategy::Sugar,
        },
        criterion: !args.no_criterion,
        limits,
        logging: args.log,
    };
    let iopts = involutive_options(args, limits)?;
    let nvars = problem.alphabet.len();
    let source = if args.algorithm.is_walk() {
        let from = args.from.as_deref().ok_or("walks need a source ordering (--from)")?;
        parse_ordering(from)?
    } else {
        target
    };
    let inputs: Vec<Polynomial> = problem.generators.iter().map(|g| g.with_ordering(source)).collect();
    let mut stats = Vec::new();
    if args.algorithm.is_involutive() {
        stats.push(("division", format!("{} ({})", iopts.division.key(), iopts.division.name())));
        stats.push(("divisors", if iopts.mode == DivisorMode::Thin { "thin" } else { "thick" }.to_string()));
    }
    let outcome = match args.algorithm {
        Algorithm::Groebner => {
            let r = mora(&inputs, &gopts).map_err(|e| e.to_string())?;
            push_groebner_stats(&mut stats, &r.stats);
            let (basis, logs) = if r.status == Status::Complete {
                reduce_basis_logged(&r.basis, r.logs.as_deref())
            } else {
                (r.basis, r.logs)
            };
            Outcome { basis, logs, status: r.status, stats }
        }
        Algorithm::Involutive => {
            let r = involutive_basis(&inputs, nvars, &iopts).map_err(|e| e.to_string())?;
            stats.push(("prolongations", r.stats.prolongations.to_string()));
            stats.push(("involutive_reductions", r.stats.reductions.to_string()));
            stats.push(("involutive", r.involutive.to_string()));
            Outcome { basis: r.basis, logs: r.logs, status: r.status, stats }
        }
        Algorithm::Gwalk => {
            let src = mora(&inputs, &GroebnerOptions { logging: false, ..gopts }).map_err(|e| e.to_string())?;
            push_groebner_stats(&mut stats, &src.stats);
            if src.status != Status::Complete {
                return Ok(Outcome { basis: src.basis, logs: None, status: src.status, stats });
            }
            let source_basis = reduce_basis(&src.basis);
            stats.push(("source_basis_size", source_basis.len().to_string()));
            let w = groebner_walk(&source_basis, target, nvars, &gopts).map_err(|e| e.to_string())?;
            stats.push(("intermediate_size", w.intermediate.len().to_string()));
            let logs = args.log.then_some(w.lifts);
            Outcome { basis: w.basis, logs, status: w.status, stats }
        }
        Algorithm::Iwalk => {
            let src = involutive_basis(&inputs, nvars, &InvolutiveOptions { logging: false, ..iopts })
                .map_err(|e| e.to_string())?;
            stats.push(("prolongations", src.stats.prolongations.to_string()));
            stats.push(("involutive_reductions", src.stats.reductions.to_string()));
            if src.status != Status::Complete {
                return Ok(Outcome { basis: src.basis, logs: None, status: src.status, stats });
            }
            stats.push(("source_basis_size", src.basis.len().to_string()));
            let w = involutive_walk(&src.basis, target, nvars, &iopts).map_err(|e| e.to_string())?;
            stats.push(("intermediate_size", w.intermediate.len().to_string()));
            let logs = args.log.then_some(w.lifts);
            Outcome { basis: w.basis, logs, status: w.status, stats }
        }
    };
    Ok(outcome)
}

fn push_groebner_stats(stats: &mut Vec<(&'static str, String)>, s: &crate::groebner::GroebnerStats) {
    stats.push(("s_polynomials", s.s_polynomials.to_string()));
    stats.push(("zero_reductions", s.zero_reductions.to_string()));
    stats.push(("criterion_skips", s.criterion_skips.to_string()));
    stats.push(("reduction_steps", s.reduction_steps.to_string()));
}

/// `<dir>/<stem>.<ordering abbrev>.<algorithm abbrev>` for `input`.
pub fn default_output_path(input: &Path, ord: MonomialOrdering, algorithm: Algorithm) -> PathBuf {
    let stem = input.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| "out".into());
    input.with_file_name(format!("{stem}.{}.{}", ord.abbrev(), algorithm.abbrev()))
}

/// Answers one membership query against the reduced Gröbner basis `g`.
pub fn membership_answer(line: &str, alphabet: &Alphabet, ord: MonomialOrdering, g: &[Polynomial]) -> Result<String, Error> {
    let p = parse_polynomial(line, alphabet, ord)?;
    let r = normal_form(&p, g);
    Ok(if r.is_zero() { "member".to_string() } else { format!("non-member (remainder: {})", r.format(alphabet)) })
}

fn membership_loop<I: BufRead, O: Write, E: Write>(
    stdin: I,
    stdout: &mut O,
    stderr: &mut E,
    alphabet: &Alphabet,
    ord: MonomialOrdering,
    g: &[Polynomial],
) -> std::io::Result<()> {
    for line in stdin.lines() {
        let line = line?;
        let q = strip_comment(&line).trim();
        if q.is_empty() {
            continue;
        }
        if q == "quit" {
            break;
        }
        match membership_answer(q, alphabet, ord, g) {
            Ok(a) => writeln!(stdout, "{a}")?,
            Err(e) => writeln!(stderr, "error: {e}")?,
        }
    }
    Ok(())
}

/// Runs the command line on `argv` (program name first) and returns the exit code.
pub fn run<A, T, I, O, E>(argv: A, stdin: I, stdout: &mut O, stderr: &mut E) -> i32
where
    A: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
    I: BufRead,
    O: Write,
    E: Write,
{
    let args = match Args::try_parse_from(argv) {
        Ok(a) => a,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{text}");
                EXIT_COMPLETE
            } else {
                let _ = write!(stderr, "{text}");
                EXIT_ERROR
            };
        }
    };
    match execute(&args, stdin, stdout, stderr) {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_ERROR
        }
    }
}

fn execute<I: BufRead, O: Write, E: Write>(args: &Args, stdin: I, stdout: &mut O, stderr: &mut E) -> Result<i32, String> {
    let io = |e: std::io::Error| e.to_string();
    let text = std::fs::read_to_string(&args.input).map_err(|e| format!("{}: {e}", args.input.display()))?;
    let problem = parse_problem(&text).map_err(|e| format!("{}: {e}", args.input.display()))?;
    let target = match &args.ordering {
        Some(name) => parse_ordering(name)?,
        None => problem.ordering.unwrap_or(MonomialOrdering::DegRevLex),
    };
    if !args.algorithm.is_involutive() && (args.division.is_some() || args.divisors.is_some()) {
        writeln!(stderr, "warning: --division and --divisors only apply to involutive algorithms; ignored").map_err(io)?;
    }
    if !args.algorithm.is_walk() && args.from.is_some() {
        writeln!(stderr, "warning: --from only applies to walks; ignored").map_err(io)?;
    }
    if args.verbose > 0 {
        writeln!(stderr, "{} generators over {} variables, target ordering {}", problem.generators.len(), problem.alphabet.len(), target)
            .map_err(io)?;
    }
    let start = Instant::now();
    let outcome = dispatch(args, &problem, target)?;
    let elapsed = start.elapsed().as_millis();
    let ord = outcome.basis.first().map_or(target, |p| p.ordering());

    let mut out = format_basis(&problem.alphabet, ord, &outcome.basis);
    out.push_str(&format!("# stats: algorithm = {}\n", args.algorithm.name()));
    out.push_str(&format!("# stats: basis_size = {}\n", outcome.basis.len()));
    out.push_str(&format!("# stats: status = {}\n", outcome.status.name()));
    for (k, v) in &outcome.stats {
        out.push_str(&format!("# stats: {k} = {v}\n"));
    }
    out.push_str(&format!("# stats: wall_time_ms = {elapsed}\n"));
    if let Some(logs) = &outcome.logs {
        for (k, l) in logs.iter().enumerate() {
            out.push_str(&format!("# log {}: {}\n", k + 1, format_log(&problem.alphabet, l)));
        }
    }
    let path = args.output.clone().unwrap_or_else(|| default_output_path(&args.input, target, args.algorithm));
    std::fs::write(&path, &out).map_err(|e| format!("{}: {e}", path.display()))?;

    writeln!(stdout, "{} basis of {} elements ({}) written to {}", args.algorithm.abbrev(), outcome.basis.len(), outcome.status.name(), path.display())
        .map_err(io)?;
    if args.verbose > 0 {
        for p in &outcome.basis {
            writeln!(stderr, "  {}", p.format(&problem.alphabet)).map_err(io)?;
        }
    }
    if args.verbose > 1 {
        for (k, v) in &outcome.stats {
            writeln!(stderr, "  {k} = {v}").map_err(io)?;
        }
        writeln!(stderr, "  wall_time_ms = {elapsed}").map_err(io)?;
    }
    if outcome.status != Status::Complete {
        if args.membership {
            writeln!(stderr, "error: membership queries need a complete basis").map_err(io)?;
        }
        return Ok(EXIT_CAP);
    }
    if args.membership {
        let g = reduce_basis(&outcome.basis);
        membership_loop(stdin, stdout, stderr, &problem.alphabet, ord, &g).map_err(io)?;
    }
    Ok(EXIT_COMPLETE)
}
