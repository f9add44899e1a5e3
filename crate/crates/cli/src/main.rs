mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use hopf_forests::characters::{compare_characters, validate_character, PolyPath};
use hopf_forests::fno::{check_chen, check_j_equals_j_prime, Fno, TiePolicy, TrigPath};
use hopf_forests::hopf::{check_heap_closure, check_hopf_axioms, ConnesKreimer, Fqsym, HopfAlgebra, OrderedForests, Shuffle};
use hopf_forests::morphisms::{
    check_t_sigma_coproduct, check_t_sigma_product, check_shuffle_action, check_theta_algebra, check_theta_coalgebra, check_theta_inverse,
    t_sigma_decorated, theta, theta_dec, verify_square, TSigma, DEFAULT_BOUND,
};
use hopf_forests::report::Check;
use hopf_forests::trees::{enumerate_heap_ordered, PlainTree};
use hopf_forests::{Error, FnoError, LinComb, OrderedForest, Permutation, PlainForest, Var, Word};

use report::RunReport;

#[derive(Parser)]
#[command(name = "hopf-forests", version, about = "Exact computations with Hopf algebras of ordered forests")]
struct Cli {
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Θ(F) for an ordered forest such as `1:1|2:1[3:2]`.
    Theta { forest: String },
    /// Θ⁻¹(τ) as a combination of ordered forests.
    ThetaInv {
        perm: String,
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: usize,
    },
    /// T^σ, or its decorated plain image when `--dec` is given.
    Tsigma {
        perm: String,
        #[arg(long)]
        dec: Option<String>,
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: usize,
    },
    /// Hopf axioms for one structure, exhaustively up to a degree.
    HopfCheck {
        structure: Structure,
        #[arg(long, default_value_t = 4)]
        degree: usize,
        #[arg(long, default_value_t = 1)]
        d: u32,
    },
    /// The square π_Σ∘Θ^d = θ^d∘π_ho, exhaustively up to a degree.
    SquareCheck {
        #[arg(long, default_value_t = 4)]
        degree: usize,
        #[arg(long, default_value_t = 2)]
        d: u32,
    },
    /// Grouped identity checks.
    Verify {
        target: VerifyTarget,
        #[arg(long, default_value_t = 4)]
        degree: usize,
        #[arg(long, default_value_t = 2)]
        d: u32,
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: usize,
    },
    /// Iterated integral from s to t of a polynomial path over a word or a forest.
    Iterint {
        #[arg(long)]
        path: PathBuf,
        /// A word such as `12`, or a plain forest with `--tree`.
        element: String,
        #[arg(long)]
        tree: bool,
    },
    /// Shuffle and Chen identities for the signature of a polynomial path.
    ChenCheck {
        #[arg(long)]
        path: PathBuf,
        #[arg(long, default_value_t = 4)]
        degree: usize,
    },
    /// Fourier normal ordering of a trigonometric path.
    Fno {
        #[arg(long)]
        path: PathBuf,
        /// Reject tied frequency magnitudes instead of sharing them between sectors.
        #[arg(long)]
        strict: bool,
        #[command(subcommand)]
        action: FnoAction,
    },
    /// Heap-ordered forests with n vertices.
    Enumerate {
        n: usize,
        /// Print the count only.
        #[arg(long)]
        count: bool,
    },
}

#[derive(Subcommand)]
enum FnoAction {
    /// χ^t(w).
    Chi { word: String },
    /// J^{ts}(w), computed by sectors and by shuffle convolution.
    J { word: String },
    /// χ is a character, J = J′ and Chen, for words up to `--degree`.
    Verify {
        #[arg(long, default_value_t = 3)]
        degree: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Structure {
    Shuffle,
    Ck,
    Ordered,
    HeapOrdered,
    Fqsym,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyTarget {
    Square,
    Theta,
    Tsigma,
}

enum Failure {
    Usage(String),
    Singular(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Fno(f @ (FnoError::Singular { .. } | FnoError::MagnitudeTie(_))) => Failure::Singular(f.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn fail<E: Into<Error>>(e: E) -> Failure {
    Failure::from(e.into())
}

fn render_lin<B: Ord + Clone>(x: &LinComb<B>, mut basis: impl FnMut(&B) -> String) -> String {
    if x.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (n, (b, c)) in x.iter().enumerate() {
        if c.is_negative() {
            out.push('-');
        } else if n > 0 {
            out.push('+');
        }
        let mag = c.abs();
        if !mag.is_one() {
            out.push_str(&format!("{}*", mag));
        }
        out.push_str(&basis(b));
    }
    out
}

fn letter_tree(t: &PlainTree, out: &mut String) {
    out.push(char::from_u32('a' as u32 + t.dec() - 1).unwrap_or('?'));
    if !t.children().is_empty() {
        out.push('[');
        for (i, c) in t.children().iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            letter_tree(c, out);
        }
        out.push(']');
    }
}

fn letter_forest(f: &PlainForest) -> String {
    if f.is_empty() {
        return "∅".into();
    }
    let mut out = String::new();
    for (i, t) in f.trees().iter().enumerate() {
        if i > 0 {
            out.push('|');
        }
        letter_tree(t, &mut out);
    }
    out
}

fn parse<T: std::str::FromStr>(s: &str) -> Result<T, Failure>
where
    T::Err: Into<Error>,
{
    s.parse::<T>().map_err(fail)
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {}", path.display(), e)))
}

fn hopf_sweep<H: HopfAlgebra>(h: &H, degree: usize, out: &mut Vec<Check>) {
    out.extend(check_hopf_axioms(h, degree));
}

fn run(cli: &Cli, argv: Vec<String>) -> Result<RunReport, Failure> {
    match &cli.command {
        Command::Theta { forest } => {
            let f: OrderedForest = parse(forest)?;
            let result = if f.max_dec() > 1 { theta_dec(&f).to_string() } else { theta(&f).to_string() };
            Ok(RunReport::value(argv, result))
        }
        Command::ThetaInv { perm, bound } => {
            let tau: Permutation = parse(perm)?;
            let inv = TSigma::new(*bound).theta_inverse(&tau).map_err(fail)?;
            Ok(RunReport::value(argv, inv.to_string()))
        }
        Command::Tsigma { perm, dec, bound } => {
            let sigma: Permutation = parse(perm)?;
            let tables = TSigma::new(*bound);
            let result = match dec {
                None => tables.t_sigma(&sigma).map_err(fail)?.to_string(),
                Some(dec) => {
                    let ell: Word = parse(dec)?;
                    let t = t_sigma_decorated(&tables, &sigma, ell.letters()).map_err(fail)?;
                    if dec.trim_start().starts_with(|c: char| c.is_ascii_lowercase()) {
                        render_lin(&t, letter_forest)
                    } else {
                        t.to_string()
                    }
                }
            };
            Ok(RunReport::value(argv, result))
        }
        Command::HopfCheck { structure, degree, d } => {
            let mut checks = Vec::new();
            let all = matches!(structure, Structure::All);
            if all || matches!(structure, Structure::Shuffle) {
                hopf_sweep(&Shuffle::new(*d), *degree, &mut checks);
            }
            if all || matches!(structure, Structure::Ck) {
                hopf_sweep(&ConnesKreimer::new(*d), *degree, &mut checks);
            }
            if all || matches!(structure, Structure::Ordered) {
                hopf_sweep(&OrderedForests::ordered(*d), *degree, &mut checks);
            }
            if all || matches!(structure, Structure::HeapOrdered) {
                hopf_sweep(&OrderedForests::heap_ordered(*d), *degree, &mut checks);
                checks.push(check_heap_closure(*degree, *d));
            }
            if all || matches!(structure, Structure::Fqsym) {
                hopf_sweep(&Fqsym::new(*d), *degree, &mut checks);
            }
            Ok(RunReport::checks(argv, &checks))
        }
        Command::SquareCheck { degree, d } => Ok(RunReport::checks(argv, &[verify_square(*degree, *d)])),
        Command::Verify { target, degree, d, bound } => {
            let checks = match target {
                VerifyTarget::Square => vec![verify_square(*degree, *d)],
                VerifyTarget::Theta => {
                    let tables = TSigma::new(*bound);
                    let mut c = vec![check_theta_algebra(*degree), check_theta_coalgebra(*degree)];
                    for n in 0..=*degree {
                        c.push(check_theta_inverse(&tables, n).map_err(fail)?);
                    }
                    c
                }
                VerifyTarget::Tsigma => {
                    let tables = TSigma::new(*bound);
                    vec![
                        check_t_sigma_product(&tables, *degree).map_err(fail)?,
                        check_t_sigma_coproduct(&tables, *degree).map_err(fail)?,
                        check_shuffle_action(&tables, *degree).map_err(fail)?,
                    ]
                }
            };
            Ok(RunReport::checks(argv, &checks))
        }
        Command::Iterint { path, element, tree } => {
            let p: PolyPath = parse(&read(path)?)?;
            let value = if *tree {
                let f: PlainForest = parse(element)?;
                p.tree_integral(&f, Var::T, Var::S).map_err(fail)?
            } else {
                let w: Word = parse(element)?;
                p.word_integral(&w, Var::T, Var::S).map_err(fail)?
            };
            Ok(RunReport::value(argv, value.to_string()))
        }
        Command::ChenCheck { path, degree } => {
            let p: Arc<PolyPath> = Arc::new(parse(&read(path)?)?);
            let ts = p.signature(Var::T, Var::S);
            let tu = p.signature(Var::T, Var::U);
            let us = p.signature(Var::U, Var::S);
            let checks = vec![
                validate_character(&ts, *degree)?,
                compare_characters("Chen I^ts = I^tu * I^us", &ts, &tu.convolve(&us)?, *degree)?,
            ];
            Ok(RunReport::checks(argv, &checks))
        }
        Command::Fno { path, strict, action } => {
            let p: TrigPath = parse(&read(path)?)?;
            let policy = if *strict { TiePolicy::Strict } else { TiePolicy::Symmetric };
            let fno = Arc::new(Fno::new(p, policy));
            match action {
                FnoAction::Chi { word } => {
                    let w: Word = parse(word)?;
                    Ok(RunReport::value(argv, fno.chi(&w, Var::T)?.to_string()))
                }
                FnoAction::J { word } => {
                    let w: Word = parse(word)?;
                    let v = fno.rough_path(&w, Var::T, Var::S)?;
                    let mut check = Check::new("J = J'");
                    check.record(&w, &v.j, &v.j_prime);
                    let mut report = RunReport::checks(argv, &[check]);
                    report.result = Some(v.j.to_string());
                    Ok(report)
                }
                FnoAction::Verify { degree } => {
                    let checks = vec![
                        validate_character(&fno.chi_character(Var::T), *degree)?,
                        check_j_equals_j_prime(&fno, *degree)?,
                        check_chen(&fno, *degree)?,
                    ];
                    Ok(RunReport::checks(argv, &checks))
                }
            }
        }
        Command::Enumerate { n, count } => {
            let forests = enumerate_heap_ordered(*n);
            let items = if *count { Vec::new() } else { forests.iter().map(|f| f.to_string()).collect() };
            Ok(RunReport::list(argv, forests.len().to_string(), items))
        }
    }
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let start = Instant::now();
    let outcome = run(&cli, argv[1..].to_vec());
    eprintln!("time: {:?}", start.elapsed());
    match outcome {
        Ok(report) => {
            if cli.json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            ExitCode::from(if report.failed() { 1 } else { 0 })
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {}", msg);
            ExitCode::from(2)
        }
        Err(Failure::Singular(msg)) => {
            eprintln!("error: {}", msg);
            ExitCode::from(3)
        }
    }
}
