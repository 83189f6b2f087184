//! Command-line front end. Every subcommand reads JSON documents and writes
//! one document (or a short report) to standard output or `--out`.
//!
//! Exit status: 0 on success, 1 when an input fails validation or a
//! precondition, 2 on usage and format errors.

pub mod document;
pub mod dot;
pub mod selftest;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};

use crate::exactlin::FieldSpec;
use crate::interleave::{pack, square_interleave, unpack, untwist_square, upgrade_interleaving};
use crate::proset::{shoelace, Translation};
use crate::zed::{
    barcode, expand_decomposed, find_matching, is_essential, matching_to_rep, rep_to_matching, validate_matching,
    Boundary, Variant, Window,
};
use document::{DocError, Document};

#[derive(Debug, Parser)]
#[command(name = "shoelace", version, about = "Shoelace prosets, interleavings and barcode matchings")]
struct Cli {
    /// Write the output here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum BoundaryArg {
    Finite,
    Infinite,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum VariantArg {
    #[value(name = "F")]
    F,
    #[value(name = "Fprime")]
    Fprime,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Dot,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Load a document and run its validator.
    Validate { file: PathBuf },
    /// Build the shoelace of a proset and translation.
    Shoelace {
        #[arg(long)]
        proset: PathBuf,
        #[arg(long)]
        translation: PathBuf,
    },
    /// Lift a translation commuting with Λ to the shoelace.
    Induce {
        #[arg(long)]
        shoelace: PathBuf,
        #[arg(long)]
        gamma: PathBuf,
        /// Swap the plain and primed copies.
        #[arg(long)]
        twist: bool,
    },
    /// Turn an interleaving into a representation of its shoelace.
    Pack {
        #[arg(long)]
        interleaving: PathBuf,
    },
    /// Read an interleaving back from a representation of a shoelace.
    Unpack {
        #[arg(long)]
        rep: PathBuf,
        #[arg(long)]
        translation: PathBuf,
    },
    /// Interleave two interleavings of the same pair over the twisted lift.
    Square {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
        /// Upgrade the result to the untwisted lift of Λ∘Λ.
        #[arg(long)]
        untwist: bool,
    },
    /// Upgrade a Λ-interleaving to Γ ≥ Λ.
    Upgrade {
        #[arg(long)]
        interleaving: PathBuf,
        #[arg(long)]
        gamma: PathBuf,
    },
    /// Extract the barcode of a window module.
    Barcode {
        #[arg(long)]
        module: PathBuf,
        #[arg(long, value_enum, default_value = "finite")]
        boundary: BoundaryArg,
    },
    /// Check that a matching is an ε-matching.
    MatchCheck {
        #[arg(long)]
        matching: PathBuf,
        /// Also require every matched short pair to satisfy (⋆).
        #[arg(long)]
        essential: bool,
    },
    /// The decomposed shoelace representation of a matching.
    MatchToRep {
        #[arg(long)]
        matching: PathBuf,
        /// Integer window LO:HI.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_window)]
        window: Window,
        #[arg(long, value_enum, default_value = "F")]
        variant: VariantArg,
        #[arg(long, default_value_t = 2)]
        prime: u64,
    },
    /// The matching read off a decomposed shoelace representation.
    RepToMatch {
        #[arg(long)]
        decomposed: PathBuf,
    },
    /// The explicit representation of a decomposed shoelace representation.
    Expand {
        #[arg(long)]
        decomposed: PathBuf,
    },
    /// Search for an ε-matching between two barcodes.
    FindMatching {
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
        #[arg(long)]
        epsilon: u64,
        #[arg(long)]
        essential: bool,
    },
    /// Render a proset or decomposed representation as a diagram.
    Render {
        #[arg(long)]
        file: PathBuf,
        #[arg(long, value_enum, default_value = "dot")]
        format: Format,
    },
    /// Run the seeded property suites.
    Selftest {
        /// Defaults to SHOELACE_SEED, then 42.
        #[arg(long)]
        seed: Option<u64>,
        /// Cases per randomised suite.
        #[arg(long)]
        cases: Option<usize>,
        #[arg(long)]
        suite: Option<String>,
    },
}

fn parse_window(s: &str) -> Result<Window, String> {
    let (lo, hi) = s.split_once(':').ok_or("expected LO:HI")?;
    let lo: i64 = lo.trim().parse().map_err(|e| format!("bad LO: {e}"))?;
    let hi: i64 = hi.trim().parse().map_err(|e| format!("bad HI: {e}"))?;
    Window::new(lo, hi).map_err(|e| e.to_string())
}

/// A failed invocation: exit status and message for standard error.
struct Failure(i32, String);

impl From<DocError> for Failure {
    fn from(e: DocError) -> Self {
        match e {
            DocError::Format(_) => Failure(2, e.to_string()),
            DocError::Invalid(_) => Failure(1, e.to_string()),
        }
    }
}

fn invalid(e: impl std::fmt::Display) -> Failure {
    Failure(1, format!("validation failed: {e}"))
}

fn load(path: &Path) -> Result<Document, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure(2, format!("cannot read {}: {e}", path.display())))?;
    Document::from_json(&text).map_err(|e| {
        let mut f = Failure::from(e);
        f.1 = format!("{}: {}", path.display(), f.1);
        f
    })
}

fn wrong_kind(path: &Path, want: &str, got: &Document) -> Failure {
    Failure(2, format!("{}: expected a {want} document, found {}", path.display(), got.kind()))
}

macro_rules! expect_kind {
    ($path:expr, $want:literal, $pat:pat => $val:expr) => {{
        match load($path)? {
            $pat => $val,
            other => return Err(wrong_kind($path, $want, &other)),
        }
    }};
}

/// What a subcommand produced.
enum Output {
    Doc(Document),
    Text(String),
    /// A report whose overall verdict sets the exit status.
    Report(String, bool),
}

fn run(cli: Cli) -> Result<Output, Failure> {
    use Document as D;
    Ok(match cli.command {
        Command::Validate { file } => {
            load(&file)?;
            Output::Text("ok\n".into())
        }
        Command::Shoelace { proset, translation } => {
            let p = expect_kind!(&proset, "proset", D::Proset(p) => p);
            let t = expect_kind!(&translation, "translation", D::Translation(t) => t);
            if **t.base() != *p {
                return Err(invalid("the translation is over a different proset"));
            }
            Output::Doc(D::Shoelace(shoelace(&p, &t).map_err(invalid)?))
        }
        Command::Induce { shoelace: s, gamma, twist } => {
            let sh = expect_kind!(&s, "shoelace proset", D::Shoelace(sh) => sh);
            let g = expect_kind!(&gamma, "translation", D::Translation(t) => t);
            let g = Translation::from_raw(sh.base().clone(), g.map().to_vec());
            if **g.base() != **sh.base() {
                return Err(invalid("gamma is over a different proset"));
            }
            Output::Doc(D::Translation(sh.induced_translation(&g, twist).map_err(invalid)?))
        }
        Command::Pack { interleaving } => {
            let x = expect_kind!(&interleaving, "interleaving", D::Interleaving(x) => x);
            Output::Doc(D::Representation(pack(&x).map_err(invalid)?.rep))
        }
        Command::Unpack { rep, translation } => {
            let v = expect_kind!(&rep, "representation", D::Representation(v) => v);
            let t = expect_kind!(&translation, "translation", D::Translation(t) => t);
            let sh = shoelace(t.base(), &t).map_err(invalid)?;
            Output::Doc(D::Interleaving(unpack(&sh, &v).map_err(invalid)?))
        }
        Command::Square { a, b, untwist } => {
            let a = expect_kind!(&a, "interleaving", D::Interleaving(x) => x);
            let b = expect_kind!(&b, "interleaving", D::Interleaving(x) => x);
            let (_, sq) = if untwist { untwist_square(&a, &b) } else { square_interleave(&a, &b) }.map_err(invalid)?;
            Output::Doc(D::Interleaving(sq))
        }
        Command::Upgrade { interleaving, gamma } => {
            let x = expect_kind!(&interleaving, "interleaving", D::Interleaving(x) => x);
            let g = expect_kind!(&gamma, "translation", D::Translation(t) => t);
            Output::Doc(D::Interleaving(upgrade_interleaving(&x, &g).map_err(invalid)?))
        }
        Command::Barcode { module, boundary } => {
            let wm = expect_kind!(&module, "window_module", D::WindowModule(wm) => wm);
            let b = match boundary {
                BoundaryArg::Finite => Boundary::Finite,
                BoundaryArg::Infinite => Boundary::Infinite,
            };
            Output::Doc(D::Barcode(barcode(&wm, b)))
        }
        Command::MatchCheck { matching, essential } => {
            let m = expect_kind!(&matching, "matching", D::Matching(m) => m);
            let mut problems: Vec<String> = validate_matching(&m).iter().map(|v| v.to_string()).collect();
            if essential && problems.is_empty() {
                let bad = is_essential(&m).map_err(invalid)?;
                problems.extend(bad.iter().map(|(i, j)| format!("matched pair {i} ~ {j} violates (⋆)")));
            }
            if problems.is_empty() {
                Output::Text("ok\n".into())
            } else {
                return Err(Failure(1, format!("validation failed:\n  {}", problems.join("\n  "))));
            }
        }
        Command::MatchToRep { matching, window, variant, prime } => {
            let m = expect_kind!(&matching, "matching", D::Matching(m) => m);
            let field = FieldSpec::new(prime).map_err(|e| Failure(2, e.to_string()))?;
            let variant = match variant {
                VariantArg::F => Variant::Essential,
                VariantArg::Fprime => Variant::NonEssential,
            };
            Output::Doc(D::DecomposedRep(matching_to_rep(&m, &window, variant, field).map_err(invalid)?))
        }
        Command::RepToMatch { decomposed } => {
            let l = expect_kind!(&decomposed, "decomposed_rep", D::DecomposedRep(l) => l);
            Output::Doc(D::Matching(rep_to_matching(&l).map_err(invalid)?))
        }
        Command::Expand { decomposed } => {
            let l = expect_kind!(&decomposed, "decomposed_rep", D::DecomposedRep(l) => l);
            let e = expand_decomposed(&l).map_err(invalid)?;
            Output::Doc(D::Representation(Arc::new(e.sum.rep)))
        }
        Command::FindMatching { left, right, epsilon, essential } => {
            let bm = expect_kind!(&left, "barcode", D::Barcode(b) => b);
            let bn = expect_kind!(&right, "barcode", D::Barcode(b) => b);
            match find_matching(&bm, &bn, epsilon, essential) {
                Some(m) => Output::Doc(D::Matching(m)),
                None => return Err(Failure(1, format!("no {}{epsilon}-matching exists", if essential { "essential " } else { "" }))),
            }
        }
        Command::Render { file, format: Format::Dot } => match load(&file)? {
            D::Proset(p) => Output::Text(dot::proset_dot(&p)),
            D::Shoelace(sh) => Output::Text(dot::proset_dot(sh.carrier())),
            D::DecomposedRep(l) => Output::Text(dot::decomposed_dot(&l)),
            other => return Err(wrong_kind(&file, "proset or decomposed_rep", &other)),
        },
        Command::Selftest { seed, cases, suite } => {
            let seed = match seed {
                Some(s) => s,
                None => match std::env::var("SHOELACE_SEED") {
                    Ok(v) => v.trim().parse().map_err(|_| Failure(2, format!("SHOELACE_SEED is not an integer: {v}")))?,
                    Err(_) => selftest::DEFAULT_SEED,
                },
            };
            let report = selftest::run(seed, cases, suite.as_deref())
                .ok_or_else(|| Failure(2, format!("unknown suite {}", suite.unwrap_or_default())))?;
            Output::Report(report.to_json(), report.passed)
        }
    })
}

/// Parses `args` (including the program name) and runs the subcommand.
/// Returns the process exit status.
pub fn dispatch<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    0
                }
                _ => {
                    let _ = write!(err, "{text}");
                    2
                }
            };
        }
    };
    let target = cli.out.clone();
    let (text, code) = match run(cli) {
        Ok(Output::Doc(d)) => (d.to_json(), 0),
        Ok(Output::Text(t)) => (t, 0),
        Ok(Output::Report(r, passed)) => (r, if passed { 0 } else { 1 }),
        Err(Failure(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            return code;
        }
    };
    match target {
        Some(path) => {
            if let Err(e) = std::fs::write(&path, text) {
                let _ = writeln!(err, "error: cannot write {}: {e}", path.display());
                return 2;
            }
        }
        None => {
            let _ = out.write_all(text.as_bytes());
        }
    }
    if code != 0 {
        let _ = writeln!(err, "error: some suites failed");
    }
    code
}
