mod qlist;

use clap::{Parser, Subcommand, ValueEnum};
use codegree::catalog::{
    catalog_json, order, order_factorization, sylow_profile, LieFamily, LieGroup,
};
use codegree::chartab::{cached_character_table, codegrees, Caps, GroupInput, TableCache};
use codegree::exactnum::zsigmondy;
use codegree::verifier::{
    canonical_json, markdown_report, run_certificate, run_symbolic_sweep, Certificate, GateVerdict,
    RunOptions, Step1Verdict, Step3Verdict, Verdict, VerifyError,
};
use num_bigint::BigUint;
use rayon::prelude::*;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

const EXIT_GATE: u8 = 1;
const EXIT_PARAMS: u8 = 2;
const EXIT_CAP: u8 = 3;

#[derive(Parser)]
#[command(name = "codegree", version, about = "Exact checks for codegree sets of groups of Lie type")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Worker threads for sweeps (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[arg(long, global = true, default_value_t = Caps::default().max_order)]
    cap_order: u64,
    #[arg(long, global = true, default_value_t = Caps::default().max_classes)]
    cap_classes: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Markdown,
}

#[derive(Subcommand)]
enum Cmd {
    /// |H| and its factorization.
    Order {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        q: u64,
    },
    /// The Sylow r-part of |H| with its formula trace.
    Sylow {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        r: u64,
    },
    /// A primitive prime divisor of q^n - 1.
    Zsigmondy {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u64,
    },
    /// Character degrees, kernel orders and codegrees of a permutation group.
    Cod {
        /// Group file: `degree N` then `gen <cycles>` lines.
        file: PathBuf,
        /// Write the codegree record as JSON here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Certificates for one or more instances, or the symbolic bundle.
    Verify {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: Option<u32>,
        /// q, a comma list, or a range a..b
        #[arg(long)]
        q: Option<String>,
        /// Only show Step-2 rows for this prime in the summary.
        #[arg(long)]
        r: Option<u64>,
        /// Include the family's symbolic entries (alone when --q is absent).
        #[arg(long)]
        symbolic: bool,
        /// Output directory.
        #[arg(long, default_value = ".")]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Add an RFC 3339 timestamp to each certificate.
        #[arg(long)]
        timestamp: bool,
    },
    /// The family catalog as JSON.
    Catalog {
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

struct Failure {
    code: u8,
    msg: String,
}

impl Failure {
    fn params(msg: impl Into<String>) -> Self {
        Failure { code: EXIT_PARAMS, msg: msg.into() }
    }
}

impl From<VerifyError> for Failure {
    fn from(e: VerifyError) -> Self {
        let code = if e.is_cap() { EXIT_CAP } else { EXIT_PARAMS };
        Failure { code, msg: e.to_string() }
    }
}

impl From<codegree::catalog::CatalogError> for Failure {
    fn from(e: codegree::catalog::CatalogError) -> Self {
        Failure::params(e.to_string())
    }
}

impl From<codegree::chartab::ChartabError> for Failure {
    fn from(e: codegree::chartab::ChartabError) -> Self {
        VerifyError::from(e).into()
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::params(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.jobs {
        if rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build_global().is_err() {
            eprintln!("error: could not size the worker pool");
            return ExitCode::from(EXIT_PARAMS);
        }
    }
    let caps = Caps { max_order: cli.cap_order, max_classes: cli.cap_classes };
    match run(cli.cmd, caps) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}

fn group(family: &str, n: Option<u32>, q: u64) -> Result<LieGroup, Failure> {
    Ok(LieGroup::from_u64(LieFamily::parse(family, n)?, q)?)
}

fn run(cmd: Cmd, caps: Caps) -> Result<u8, Failure> {
    match cmd {
        Cmd::Order { family, n, q } => {
            let g = group(&family, n, q)?;
            println!("{} = {}", order(&g), order_factorization(&g)?);
            Ok(0)
        }
        Cmd::Sylow { family, n, q, r } => {
            let g = group(&family, n, q)?;
            let prof = sylow_profile(&g, &BigUint::from(r))?;
            println!("|H|_{r} = {} = {r}^{}", prof.value, prof.exponent);
            println!("trace: {}", prof.trace);
            Ok(0)
        }
        Cmd::Zsigmondy { q, n } => {
            if q < 2 || n < 1 {
                return Err(Failure::params("need q >= 2 and n >= 1"));
            }
            match zsigmondy(&BigUint::from(q), n).map_err(|e| Failure::params(e.to_string()))? {
                Some(r) => println!("{r}"),
                None => println!("none (exception case)"),
            }
            Ok(0)
        }
        Cmd::Cod { file, out } => cmd_cod(&file, out.as_deref(), &caps),
        Cmd::Verify { family, n, q, r, symbolic, out, format, timestamp } => {
            let fam = LieFamily::parse(&family, n)?;
            match q {
                None if symbolic => cmd_symbolic(fam, &out),
                None => Err(Failure::params("verify needs --q or --symbolic")),
                Some(spec) => {
                    let opts = RunOptions {
                        caps,
                        cache: Some(TableCache::default_location()),
                        symbolic,
                        timestamp: timestamp.then(now_rfc3339),
                    };
                    cmd_verify(fam, &spec, r, &opts, &out, format)
                }
            }
        }
        Cmd::Catalog { out } => {
            let json = catalog_json();
            match out {
                Some(p) => write_atomic(&p, &json)?,
                None => println!("{json}"),
            }
            Ok(0)
        }
    }
}

fn now_rfc3339() -> String {
    time::OffsetDateTime::now_utc()
        .format(&time::format_description::well_known::Rfc3339)
        .unwrap_or_default()
}

/// Write through a temporary file in the target directory, then rename.
fn write_atomic(path: &Path, text: &str) -> Result<(), Failure> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    std::fs::create_dir_all(dir)?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(text.as_bytes())?;
    tmp.persist(path).map_err(|e| Failure::params(e.to_string()))?;
    Ok(())
}

fn cmd_cod(file: &Path, out: Option<&Path>, caps: &Caps) -> Result<u8, Failure> {
    let text = std::fs::read_to_string(file)?;
    let input = GroupInput::parse(&text)?;
    let cache = TableCache::default_location();
    let (_, table) = cached_character_table(&input, caps, Some(&cache))?;
    let cod = codegrees(&table)?;
    println!("|G| = {}, {} classes", table.group_order, table.num_classes());
    println!("chi  degree  |ker|  cod");
    for (i, c) in cod.characters.iter().enumerate() {
        println!("{:<4} {:<7} {:<6} {}", i + 1, c.degree, c.kernel_order, c.codegree);
    }
    let set: Vec<String> = cod.values.iter().map(u64::to_string).collect();
    println!("cod = {{{}}}", set.join(", "));
    if let Some(p) = out {
        let json = serde_json::to_string_pretty(&cod).map_err(|e| Failure::params(e.to_string()))?;
        write_atomic(p, &json)?;
    }
    Ok(0)
}

fn cmd_symbolic(fam: LieFamily, out: &Path) -> Result<u8, Failure> {
    let proofs = run_symbolic_sweep(fam);
    let json = serde_json::to_string_pretty(&serde_json::to_value(&proofs).map_err(|e| Failure::params(e.to_string()))?)
        .map_err(|e| Failure::params(e.to_string()))?;
    let stem = match fam {
        LieFamily::Psl { n } | LieFamily::Psp { n } => format!("{}_{n}", fam.id()),
        _ => fam.id().to_string(),
    };
    let path = out.join(format!("{stem}.symbolic.json"));
    write_atomic(&path, &json)?;
    let mut bad = 0;
    for p in &proofs {
        let v = if p.proof.is_proven() { "proven" } else { "NOT PROVEN" };
        if !p.proof.is_proven() {
            bad += 1;
        }
        println!("{:<24} {:<12} {}", p.id, v, p.case);
    }
    println!("{} entries, {} proven -> {}", proofs.len(), proofs.len() - bad, path.display());
    Ok(if bad == 0 { 0 } else { EXIT_GATE })
}

fn step_summary(c: &Certificate) -> [String; 4] {
    let s1 = if c.step1.is_empty() {
        "trivial".to_string()
    } else if c.step1.iter().any(|s| s.verdict == Step1Verdict::Inconclusive) {
        "INCONCLUSIVE".into()
    } else if c.step1.iter().any(|s| s.verdict == Step1Verdict::AssumedCited) {
        "ASSUMED-CITED".into()
    } else {
        "REFUTED".into()
    };
    let s2 = if c.step2.iter().any(|s| s.verdict == GateVerdict::GateFail) { "GATE-FAIL" } else { "PASS" };
    let s3 = match c.step3.verdict {
        Step3Verdict::Pass => "PASS",
        Step3Verdict::Residual => "RESIDUAL",
        Step3Verdict::GateFail => "GATE-FAIL",
    };
    let s4 = match c.step4.as_ref().map(|s| s.verdict) {
        None => "-",
        Some(GateVerdict::Pass) => "PASS",
        Some(GateVerdict::VacuousPass) => "VACUOUS-PASS",
        Some(GateVerdict::GateFail) => "GATE-FAIL",
    };
    [s1, s2.into(), s3.into(), s4.into()]
}

fn verdict_text(v: Verdict) -> &'static str {
    match v {
        Verdict::Pass => "PASS",
        Verdict::GateFail => "GATE-FAIL",
        Verdict::PartialPerPaper => "PARTIAL-PER-PAPER",
    }
}

fn cmd_verify(
    fam: LieFamily,
    spec: &str,
    r_filter: Option<u64>,
    opts: &RunOptions,
    out: &Path,
    format: Format,
) -> Result<u8, Failure> {
    let qs = qlist::parse_q(spec).map_err(Failure::params)?;
    let mut groups = Vec::new();
    for &q in &qs.values {
        match LieGroup::from_u64(fam, q) {
            Ok(g) => groups.push(g),
            Err(e) if qs.from_range => eprintln!("skipping q = {q}: {e}"),
            Err(e) => return Err(e.into()),
        }
    }
    if groups.is_empty() {
        return Err(Failure::params(format!("no admissible instance of {} in {spec}", fam.id())));
    }
    let results: Vec<Result<Certificate, VerifyError>> =
        groups.par_iter().map(|g| run_certificate(g, opts)).collect();
    let mut certs = Vec::new();
    let mut worst: Option<Failure> = None;
    for (g, r) in groups.iter().zip(results) {
        match r {
            Ok(c) => certs.push(c),
            Err(e) => {
                eprintln!("{}: {e}", g.name());
                let f: Failure = e.into();
                if worst.as_ref().is_none_or(|w| f.code > w.code) {
                    worst = Some(f);
                }
            }
        }
    }
    for c in &certs {
        let g = c.group()?;
        write_atomic(&out.join(format!("{}.cert.json", g.file_stem())), &canonical_json(c))?;
    }
    if format == Format::Markdown {
        write_atomic(&out.join("report.md"), &markdown_report(&certs))?;
    }

    println!("{:<16} {:<14} {:<10} {:<10} {:<13} verdict", "group", "step1", "step2", "step3", "step4");
    let mut failed = false;
    for c in &certs {
        let [s1, s2, s3, s4] = step_summary(c);
        println!("{:<16} {:<14} {:<10} {:<10} {:<13} {}", c.name, s1, s2, s3, s4, verdict_text(c.verdict));
        if let Some(r) = r_filter {
            for s in c.step2.iter().filter(|s| s.r == BigUint::from(r)) {
                println!("  r = {}: j = {}, {} [{:?}]", s.r, s.j, s.gate, s.verdict);
            }
        }
        if c.verdict == Verdict::GateFail {
            failed = true;
            print_failures(c);
        }
    }
    println!("{} certificate(s) written to {}", certs.len(), out.display());
    if let Some(f) = worst {
        return Err(f);
    }
    Ok(if failed { EXIT_GATE } else { 0 })
}

fn print_failures(c: &Certificate) {
    let show = |v: serde_json::Result<String>| eprintln!("{}", v.unwrap_or_default());
    for s in c.step1.iter().filter(|s| s.verdict == Step1Verdict::Inconclusive) {
        show(serde_json::to_string_pretty(s));
    }
    for s in c.step2.iter().filter(|s| s.verdict == GateVerdict::GateFail) {
        show(serde_json::to_string_pretty(s));
    }
    if c.step3.verdict == Step3Verdict::GateFail {
        show(serde_json::to_string_pretty(&c.step3));
    }
    if let Some(s) = c.step4.as_ref().filter(|s| s.verdict == GateVerdict::GateFail) {
        show(serde_json::to_string_pretty(s));
    }
    for n in &c.notes {
        eprintln!("{}: {n}", c.name);
    }
}
