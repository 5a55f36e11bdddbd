use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use quatlat::lattice::{
    build_square_table, check_finite_lemmas, compute_k_tau, gamma3_cube_map, gamma4_map, oracle_check_table, phi_k_map,
    preset, verify_homomorphism, PRESET_NAMES,
};
use quatlat::parikh::{
    compare, enumerate_parikh, language_preset, language_presets, theorem_expected, BoundedLanguageSpec, EnumOptions,
    ExpectedSet, Growth, ParikhSet,
};
use quatlat::quat::{gamma3_matrices, gamma3_relation_checks};
use quatlat::rewrite::{orbit_size, orbit_size_right};
use quatlat::{FieldCtx, FqElem, LatticeParams, Presentation};
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "quatlat", version, about = "Quaternionic lattices: square tables, verification and Parikh images")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write JSON here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Build a lattice and print its presentation.
    Construct(LatticeArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Enumerate the Parikh image of a bounded language.
    Parikh(LanguageArgs),
    /// Enumerate and compare against a predicted set.
    Compare(CompareArgs),
    /// Count members of a set inside the box of radius `--bound`.
    Growth(GrowthArgs),
    /// Run the acceptance suite in order.
    Repro(ReproArgs),
}

#[derive(Args, Default)]
struct LatticeArgs {
    /// Preset name (gamma3, gamma4, gamma32) or a presentation JSON file.
    #[arg(long)]
    lattice: Option<String>,
    /// Characteristic.
    #[arg(long)]
    p: Option<u64>,
    /// Field size p^e; an alternative to --p/--e.
    #[arg(long)]
    q: Option<u64>,
    #[arg(long)]
    e: Option<u32>,
    /// Non-square c: an integer, or comma-separated coefficients over F_p.
    #[arg(long, allow_hyphen_values = true)]
    c: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    tau: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Oracle,
    Matrix,
    Lemmas,
    Endo,
    Orbits,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    lattice: LatticeArgs,
    #[arg(long, value_enum)]
    suite: Suite,
    /// Largest n for the lemmas suite.
    #[arg(long, default_value_t = 4)]
    bound: u32,
    /// `g;h` for the orbits suite.
    #[arg(long, allow_hyphen_values = true)]
    words: Option<String>,
}

#[derive(Args)]
struct LanguageArgs {
    #[command(flatten)]
    lattice: LatticeArgs,
    /// Bundled language id; supplies lattice, words and bound.
    #[arg(long, conflicts_with_all = ["words", "lattice", "p", "q", "e", "c", "tau"])]
    language: Option<String>,
    /// Blocks `w1;w2;...`, e.g. `a;x;b^-1;x`.
    #[arg(long, allow_hyphen_values = true)]
    words: Option<String>,
    #[arg(long)]
    bound: Option<u64>,
    /// Allow negative exponents.
    #[arg(long)]
    signed: bool,
    /// Block concatenation order, e.g. `0,1,3,2`.
    #[arg(long, value_delimiter = ',')]
    order: Option<Vec<usize>>,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Disable the length bound on partial words.
    #[arg(long)]
    no_prune: bool,
}

#[derive(Args)]
struct CompareArgs {
    #[command(flatten)]
    language: LanguageArgs,
    /// `power:m:d`, `theorem`, `preset`, a JSON object or a JSON file.
    #[arg(long)]
    expected: Option<String>,
}

#[derive(Args)]
struct GrowthArgs {
    #[command(flatten)]
    language: LanguageArgs,
    /// Count a predicted set instead of enumerating.
    #[arg(long)]
    expected: Option<String>,
}

#[derive(Args)]
struct ReproArgs {
    /// Run a single criterion.
    #[arg(long)]
    criterion: Option<u32>,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Lib(#[from] quatlat::Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Lib(quatlat::Error::OracleFailure(_)) => 1,
            _ => 2,
        }
    }
}

type CliResult<T> = Result<T, CliError>;

fn usage<T>(msg: impl Into<String>) -> CliResult<T> {
    Err(CliError::Usage(msg.into()))
}

/// JSON to print plus whether the run passed.
struct Outcome {
    value: Value,
    pass: bool,
}

impl Outcome {
    fn new(value: impl Serialize, pass: bool) -> CliResult<Self> {
        Ok(Outcome { value: serde_json::to_value(value).map_err(quatlat::Error::from)?, pass })
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(cli.command).and_then(|o| {
        let mut text = serde_json::to_string_pretty(&o.value).map_err(quatlat::Error::from)?;
        text.push('\n');
        match &cli.out {
            Some(path) => fs::write(path, text)?,
            None => print!("{text}"),
        }
        Ok(o.pass)
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(cmd: Command) -> CliResult<Outcome> {
    match cmd {
        Command::Construct(args) => {
            let pres = load_lattice(&args)?;
            Outcome::new(pres.to_json()?, true)
        }
        Command::Verify(args) => verify(args),
        Command::Parikh(args) => {
            let (set, bound) = enumerate(&args)?.finish()?;
            Outcome::new(json!({ "points": set.points, "bound": bound }), true)
        }
        Command::Compare(args) => {
            let run = enumerate(&args.language)?;
            let expected = match (&args.expected, &run.preset_expected) {
                (Some(desc), _) => parse_expected(desc, &run)?,
                (None, Some(e)) => e.clone(),
                (None, None) => return usage("--expected is required without --language"),
            };
            let (set, bound) = run.finish()?;
            let report = compare(&set, &expected, bound, run.spec.signed);
            let pass = report.pass();
            Outcome::new(json!({ "pass": pass, "report": report }), pass)
        }
        Command::Growth(args) => {
            let lang = &args.language;
            let n = match (args.expected.is_some(), lang.bound) {
                (true, Some(n)) => n,
                (true, None) => return usage("--bound is required with --expected"),
                (false, _) => 0,
            };
            if let Some(desc) = &args.expected {
                if lang.language.is_some() || lang.words.is_some() {
                    return usage("--expected counts a predicted set; drop --language/--words");
                }
                let e = parse_plain_expected(desc)?;
                return Outcome::new(json!({ "n": n, "growth": e.growth(n) }), true);
            }
            let (set, bound) = enumerate(lang)?.finish()?;
            Outcome::new(json!({ "n": bound, "growth": set.growth(bound) }), true)
        }
        Command::Repro(args) => {
            let results = match args.criterion {
                Some(n) => match quatlat::repro::criterion(n) {
                    Some(c) => vec![c.run()],
                    None => return usage(format!("no criterion {n}")),
                },
                None => quatlat::repro::CRITERIA.iter().map(|c| c.run()).collect(),
            };
            for r in &results {
                eprintln!("{}", r.summary());
            }
            let pass = results.iter().all(|r| r.pass);
            Outcome::new(json!({ "pass": pass, "criteria": results }), pass)
        }
    }
}

fn verify(args: VerifyArgs) -> CliResult<Outcome> {
    let pres = load_lattice(&args.lattice)?;
    let is_named = |n: &str| pres.name() == Some(n);
    let (suite, value, pass) = match args.suite {
        Suite::Oracle => {
            if !pres.is_parametric() {
                return usage("the oracle suite needs a parametric lattice");
            }
            let r = oracle_check_table(&pres)?;
            let pass = r.all_pass();
            ("oracle", serde_json::to_value(r).map_err(quatlat::Error::from)?, pass)
        }
        Suite::Matrix => {
            if !is_named("gamma3") {
                return usage("the matrix suite applies to gamma3");
            }
            let checks = gamma3_relation_checks(&gamma3_matrices())?;
            let pass = checks.iter().all(|(_, ok)| *ok);
            let rows: Vec<Value> = checks.iter().map(|(rel, ok)| json!({ "relation": rel, "pass": ok })).collect();
            ("matrix", json!({ "relations": rows }), pass)
        }
        Suite::Lemmas => {
            if !pres.is_parametric() {
                return usage("the lemmas suite needs a parametric lattice");
            }
            let r = check_finite_lemmas(&pres, args.bound)?;
            let pass = r.all_pass();
            ("lemmas", serde_json::to_value(r).map_err(quatlat::Error::from)?, pass)
        }
        Suite::Endo => {
            let (map, k) = if let Some(params) = pres.params() {
                let k = compute_k_tau(params);
                (phi_k_map(&pres, &pres, k)?, Some(k))
            } else if is_named("gamma3") {
                let cube = gamma3_cube_map(&pres)?;
                (cube.then(&cube), None)
            } else if is_named("gamma4") {
                (gamma4_map(&pres)?, None)
            } else {
                return usage("no endomorphism is known for this lattice");
            };
            let r = verify_homomorphism(&pres, &pres, &map)?;
            let pass = r.pass();
            ("endo", json!({ "k_tau": k, "relations": r.relations, "failures": r.failures }), pass)
        }
        Suite::Orbits => {
            let t = pres.table();
            let (value, pass) = match (&args.words, is_named("gamma3")) {
                (Some(words), _) => {
                    let Some((g, h)) = words.split_once(';') else {
                        return usage("--words must be `g;h`");
                    };
                    let (g, h) = (pres.word(g)?, pres.word(h)?);
                    let left = orbit_size(t, &g, &h)?;
                    let right = orbit_size_right(t, &h, &g)?;
                    (json!({ "left": left, "right": right }), true)
                }
                (None, true) => {
                    let left = orbit_size(t, &pres.word("a")?, &pres.word("x^2")?)?;
                    let right = orbit_size_right(t, &pres.word("x")?, &pres.word("a^2")?)?;
                    (json!({ "left": left, "right": right, "expected": 12 }), left == 12 && right == 12)
                }
                (None, false) => return usage("--words g;h is required outside gamma3"),
            };
            ("orbits", value, pass)
        }
    };
    Outcome::new(json!({ "suite": suite, "pass": pass, "report": value }), pass)
}

fn load_lattice(args: &LatticeArgs) -> CliResult<Presentation> {
    let parametric = args.p.is_some() || args.q.is_some() || args.e.is_some() || args.c.is_some() || args.tau.is_some();
    match (&args.lattice, parametric) {
        (Some(_), true) => usage("give either --lattice or field parameters, not both"),
        (None, false) => usage("a lattice is required: --lattice <preset|file> or --p/--q, --c, --tau"),
        (Some(src), false) => {
            if PRESET_NAMES.contains(&src.as_str()) {
                Ok(preset(src)?)
            } else if Path::new(src).is_file() {
                Ok(Presentation::from_json_str(&fs::read_to_string(src)?)?)
            } else {
                usage(format!("`{src}` is neither a preset ({}) nor a file", PRESET_NAMES.join(", ")))
            }
        }
        (None, true) => Ok(build_square_table(&params_from(args)?)?),
    }
}

fn params_from(args: &LatticeArgs) -> CliResult<LatticeParams> {
    let (p, e) = match (args.p, args.q) {
        (Some(p), None) => (p, args.e.unwrap_or(1)),
        (None, Some(q)) => {
            let (p, e) = prime_power(q).ok_or_else(|| CliError::Usage(format!("q = {q} is not a prime power")))?;
            if args.e.is_some_and(|x| x != e) {
                return usage(format!("--e disagrees with q = {q}"));
            }
            (p, e)
        }
        (Some(p), Some(q)) => {
            let e = args.e.unwrap_or(1);
            if p.checked_pow(e) != Some(q) {
                return usage(format!("q = {q} is not {p}^{e}"));
            }
            (p, e)
        }
        (None, None) => return usage("--p or --q is required"),
    };
    let field = FieldCtx::new(p, e)?;
    let tau = match &args.tau {
        Some(s) => parse_elem(&field, s)?,
        None => return usage("--tau is required"),
    };
    let c = match &args.c {
        Some(s) => parse_elem(&field, s)?,
        None => field.find_nonsquare(),
    };
    Ok(LatticeParams::new(field, c, tau)?)
}

fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut e = 0;
    let mut rest = q;
    while rest.is_multiple_of(p) {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p, e))
}

fn parse_elem(field: &FieldCtx, s: &str) -> CliResult<FqElem> {
    let coeffs = s
        .split(',')
        .map(|c| c.trim().parse::<i64>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| CliError::Usage(format!("`{s}` is not an integer or coefficient list")))?;
    Ok(field.from_coeffs(&coeffs)?)
}

struct Enumeration {
    pres: Presentation,
    spec: BoundedLanguageSpec,
    bound: u64,
    opts: EnumOptions,
    preset_expected: Option<ExpectedSet>,
}

impl Enumeration {
    fn finish(&self) -> CliResult<(ParikhSet, u64)> {
        Ok((enumerate_parikh(self.pres.table(), &self.spec, self.bound, self.opts)?, self.bound))
    }
}

fn enumerate(args: &LanguageArgs) -> CliResult<Enumeration> {
    if args.jobs == 0 {
        return usage("--jobs must be at least 1");
    }
    let opts = EnumOptions { prune: !args.no_prune, jobs: args.jobs };
    if let Some(id) = &args.language {
        let p = language_preset(id).map_err(|_| {
            let ids: Vec<_> = language_presets().unwrap_or_default().iter().map(|p| p.id).collect();
            CliError::Usage(format!("unknown language `{id}`; known: {}", ids.join(", ")))
        })?;
        if args.signed || args.order.is_some() {
            return usage("--language fixes signedness and block order");
        }
        let pres = p.lattice.load()?;
        let spec = p.spec(&pres)?;
        let bound = args.bound.unwrap_or(p.bound);
        return Ok(Enumeration { pres, spec, bound, opts, preset_expected: Some(p.expected) });
    }
    let Some(words) = &args.words else {
        return usage("--words or --language is required");
    };
    let Some(bound) = args.bound else {
        return usage("--bound is required");
    };
    let pres = load_lattice(&args.lattice)?;
    let words = words.split(';').map(|w| pres.word(w.trim())).collect::<Result<Vec<_>, _>>()?;
    let spec = BoundedLanguageSpec::with_order(words, args.signed, args.order.clone())?;
    Ok(Enumeration { pres, spec, bound, opts, preset_expected: None })
}

fn parse_plain_expected(desc: &str) -> CliResult<ExpectedSet> {
    if desc.starts_with("power:") || desc.trim_start().starts_with('{') {
        Ok(ExpectedSet::parse(desc)?)
    } else if Path::new(desc).is_file() {
        Ok(ExpectedSet::parse(&fs::read_to_string(desc)?)?)
    } else {
        usage(format!("cannot read expected set `{desc}`"))
    }
}

fn parse_expected(desc: &str, run: &Enumeration) -> CliResult<ExpectedSet> {
    match desc {
        "theorem" => Ok(theorem_expected(&run.pres, &run.spec)?),
        "preset" => {
            run.preset_expected.clone().ok_or_else(|| CliError::Usage("`--expected preset` needs --language".into()))
        }
        _ => parse_plain_expected(desc),
    }
}
