use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use kronecker_tableaux::checks::{run_all, Bounds, Report};
use kronecker_tableaux::oracle::{default_cap, lr as character_lr, stable_kronecker_oracle, stable_kronecker_probe};
use kronecker_tableaux::partitions::{is_copieri, is_maximal_depth, min_degree, within_bounds};
use kronecker_tableaux::tableaux::{classical_lr, count_latticed, count_sstd, mu_classes, stable_kronecker};
use kronecker_tableaux::{minmax, Error, Partition};

// Writes to stdout, ignoring a closed pipe (`kron ... | head`).
macro_rules! out {
    ($($t:tt)*) => {{
        use std::io::Write;
        let _ = writeln!(std::io::stdout(), $($t)*);
    }};
}

#[derive(Parser)]
#[command(name = "kron", version, about = "Stable Kronecker coefficients from Kronecker tableaux")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Emit::Text, global = true)]
    emit: Emit,

    #[arg(long, short, global = true)]
    verbose: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Emit {
    Text,
    Json,
    Tsv,
}

#[derive(Args)]
struct Triple {
    /// λ, e.g. `6,2` or `[6,2]`; `0` is the empty partition.
    #[arg(value_parser = parse_partition)]
    lambda: Partition,
    #[arg(value_parser = parse_partition)]
    nu: Partition,
    #[arg(value_parser = parse_partition)]
    mu: Partition,
}

#[derive(Subcommand)]
enum Command {
    /// ḡ(λ, ν, μ) by counting latticed semistandard Kronecker tableaux.
    Coeff {
        #[command(flatten)]
        triple: Triple,
        /// Send triples the tableaux rule does not cover to the oracle.
        #[arg(long)]
        fallback_oracle: bool,
        #[arg(long)]
        n_cap: Option<usize>,
    },
    /// List the μ-classes of Kronecker tableaux from λ to ν.
    Tableaux {
        #[command(flatten)]
        triple: Triple,
        /// Include classes that are not semistandard.
        #[arg(long)]
        all: bool,
    },
    /// Report which regime a triple falls in.
    Classify {
        #[command(flatten)]
        triple: Triple,
    },
    /// ḡ(λ, ν, μ) from characters of growing symmetric groups.
    Oracle {
        #[command(flatten)]
        triple: Triple,
        #[arg(long)]
        n_cap: Option<usize>,
        /// Also print the first n of the constant tail.
        #[arg(long)]
        report_onset: bool,
    },
    /// Littlewood–Richardson coefficient c(λ, μ; ν) for λ ⊆ ν.
    Lr {
        #[command(flatten)]
        triple: Triple,
    },
    /// Run the verification sweeps.
    Verify {
        /// Largest |λ|, |ν|, |μ| in the size-indexed sweeps.
        #[arg(long)]
        max_size: Option<usize>,
        /// Largest degree s in the decomposition sweep.
        #[arg(long)]
        max_s: Option<usize>,
        /// Largest rank for the partition algebra identities.
        #[arg(long)]
        thm33_r: Option<usize>,
        #[arg(long)]
        n_cap: Option<usize>,
    },
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parts(p: &Partition) -> Vec<usize> {
    p.parts().to_vec()
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotApplicable => 3,
            Error::Parse { .. } | Error::NotAPartition(_) => 2,
            _ => 1,
        };
        Failure { code, message: e.to_string() }
    }
}

fn print_json<T: Serialize>(v: &T) {
    out!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

#[derive(Serialize)]
struct CoeffOut {
    lambda: Vec<usize>,
    nu: Vec<usize>,
    mu: Vec<usize>,
    value: String,
    source: &'static str,
}

fn cmd_coeff(cli: &Cli, t: &Triple, fallback: bool, n_cap: Option<usize>) -> Result<(), Failure> {
    let (value, source) = match stable_kronecker(&t.lambda, &t.nu, &t.mu) {
        Ok(v) => (v.to_string(), "tableaux"),
        Err(Error::NotApplicable) if fallback => {
            (stable_kronecker_oracle(&t.lambda, &t.nu, &t.mu, n_cap)?.value.to_string(), "oracle")
        }
        Err(e) => return Err(e.into()),
    };
    let out = CoeffOut { lambda: parts(&t.lambda), nu: parts(&t.nu), mu: parts(&t.mu), value, source };
    match cli.emit {
        Emit::Text if cli.verbose => out!("{} (from {})", out.value, out.source),
        Emit::Text => out!("{}", out.value),
        Emit::Json => print_json(&out),
        Emit::Tsv => {
            out!("lambda\tnu\tmu\tvalue\tsource");
            out!("{}\t{}\t{}\t{}\t{}", t.lambda, t.nu, t.mu, out.value, out.source);
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct ClassOut {
    word_steps: Vec<String>,
    word_frames: Vec<usize>,
    semistandard: bool,
    lattice: bool,
    size: usize,
    representative: Vec<String>,
}

#[derive(Serialize)]
struct TableauxOut {
    lambda: Vec<usize>,
    nu: Vec<usize>,
    mu: Vec<usize>,
    copieri: bool,
    maximal_depth: bool,
    sstd: String,
    latt: String,
    classes: Vec<ClassOut>,
}

fn cmd_tableaux(cli: &Cli, t: &Triple, all: bool) -> Result<(), Failure> {
    let s = t.mu.size();
    let mu = (&t.mu).into();
    let classes: Vec<ClassOut> = mu_classes(&t.lambda, &t.nu, &mu)
        .into_iter()
        .filter(|c| all || c.is_semistandard())
        .map(|c| {
            let w = c.reading_word();
            ClassOut {
                word_steps: w.steps().iter().map(|x| x.to_string()).collect(),
                word_frames: w.frames(),
                semistandard: c.is_semistandard(),
                lattice: c.is_semistandard() && c.is_lattice(),
                size: c.len(),
                representative: c.members()[0].steps().iter().map(|x| x.to_string()).collect(),
            }
        })
        .collect();
    let out = TableauxOut {
        lambda: parts(&t.lambda),
        nu: parts(&t.nu),
        mu: parts(&t.mu),
        copieri: is_copieri(&t.lambda, &t.nu, s),
        maximal_depth: is_maximal_depth(&t.lambda, &t.nu, s),
        sstd: count_sstd(&t.lambda, &t.nu, &mu).to_string(),
        latt: count_latticed(&t.lambda, &t.nu, &t.mu).to_string(),
        classes,
    };
    match cli.emit {
        Emit::Json => print_json(&out),
        Emit::Tsv => {
            out!("word_steps\tword_frames\tsemistandard\tlattice\tsize\trepresentative");
            for c in &out.classes {
                let frames: Vec<String> = c.word_frames.iter().map(|f| f.to_string()).collect();
                out!(
                    "{}\t{}\t{}\t{}\t{}\t{}",
                    c.word_steps.join(" "),
                    frames.join(" "),
                    c.semistandard,
                    c.lattice,
                    c.size,
                    c.representative.join(" ")
                );
            }
        }
        Emit::Text => {
            out!("{} classes, {} lattice", out.classes.len(), out.classes.iter().filter(|c| c.lattice).count());
            for (i, c) in out.classes.iter().enumerate() {
                let mut marks = Vec::new();
                if !c.semistandard {
                    marks.push("not semistandard");
                }
                if c.lattice {
                    marks.push("lattice");
                }
                let frames: Vec<String> = c.word_frames.iter().map(|f| f.to_string()).collect();
                out!(
                    "t{}: {}  (size {}{}{})",
                    i + 1,
                    c.representative.join(" "),
                    c.size,
                    if marks.is_empty() { "" } else { ", " },
                    marks.join(", ")
                );
                if cli.verbose {
                    out!("    steps  {}", c.word_steps.join(" "));
                    out!("    frames {}", frames.join(" "));
                }
            }
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct ClassifyOut {
    lambda: Vec<usize>,
    nu: Vec<usize>,
    mu: Vec<usize>,
    s: usize,
    min_degree: usize,
    minmax: Option<i64>,
    within_bounds: bool,
    copieri: bool,
    maximal_depth: bool,
}

fn cmd_classify(cli: &Cli, t: &Triple) -> Result<(), Failure> {
    let s = t.mu.size();
    let out = ClassifyOut {
        lambda: parts(&t.lambda),
        nu: parts(&t.nu),
        mu: parts(&t.mu),
        s,
        min_degree: min_degree(&t.lambda, &t.nu),
        minmax: minmax(&t.lambda, &t.nu),
        within_bounds: within_bounds(&t.lambda, &t.nu, s),
        copieri: is_copieri(&t.lambda, &t.nu, s),
        maximal_depth: is_maximal_depth(&t.lambda, &t.nu, s),
    };
    let mm = out.minmax.map_or("none".to_string(), |m| m.to_string());
    match cli.emit {
        Emit::Json => print_json(&out),
        Emit::Tsv => {
            out!("s\tmin_degree\tminmax\twithin_bounds\tcopieri\tmaximal_depth");
            out!("{}\t{}\t{}\t{}\t{}\t{}", s, out.min_degree, mm, out.within_bounds, out.copieri, out.maximal_depth);
        }
        Emit::Text => {
            let regime = match (out.within_bounds, out.copieri, out.maximal_depth) {
                (false, _, _) => "outside the degree window (coefficient 0)",
                (true, true, true) => "co-Pieri and maximal depth",
                (true, true, false) => "co-Pieri",
                (true, false, true) => "maximal depth",
                (true, false, false) => "not covered by the tableaux rule",
            };
            out!("{regime}");
            if cli.verbose {
                out!("s = {s}, min degree = {}, minmax = {mm}", out.min_degree);
            }
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct OracleOut {
    value: String,
    onset_n: usize,
    capped: bool,
}

fn cmd_oracle(cli: &Cli, t: &Triple, n_cap: Option<usize>, report_onset: bool) -> Result<(), Failure> {
    let cap = n_cap.unwrap_or_else(|| default_cap(&t.lambda, &t.nu, &t.mu));
    let v = stable_kronecker_probe(&t.lambda, &t.nu, &t.mu, cap);
    let out = OracleOut { value: v.value.to_string(), onset_n: v.onset_n, capped: v.capped };
    match cli.emit {
        Emit::Json => print_json(&out),
        Emit::Tsv => {
            out!("value\tonset_n\tcapped");
            out!("{}\t{}\t{}", out.value, out.onset_n, out.capped);
        }
        Emit::Text => {
            let tail = if out.capped { format!(" (not yet stable at n = {cap})") } else { String::new() };
            if report_onset || cli.verbose {
                out!("{} from n = {}{tail}", out.value, out.onset_n);
            } else {
                out!("{}{tail}", out.value);
            }
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct LrOut {
    lambda: Vec<usize>,
    nu: Vec<usize>,
    mu: Vec<usize>,
    value: String,
    characters: String,
}

fn cmd_lr(cli: &Cli, t: &Triple) -> Result<(), Failure> {
    let value = classical_lr(&t.lambda, &t.nu, &t.mu)?;
    let chars = character_lr(&t.lambda, &t.mu, &t.nu)?;
    let out = LrOut {
        lambda: parts(&t.lambda),
        nu: parts(&t.nu),
        mu: parts(&t.mu),
        value: value.to_string(),
        characters: chars.to_string(),
    };
    match cli.emit {
        Emit::Json => print_json(&out),
        Emit::Tsv => {
            out!("value\tcharacters");
            out!("{}\t{}", out.value, out.characters);
        }
        Emit::Text if cli.verbose => out!("{} (characters give {})", out.value, out.characters),
        Emit::Text => out!("{}", out.value),
    }
    if out.value != out.characters {
        return Err(Failure {
            code: 1,
            message: format!("tableaux give {} but characters give {}", out.value, out.characters),
        });
    }
    Ok(())
}

#[derive(Serialize)]
struct ReportOut<'a> {
    name: &'a str,
    checked: usize,
    passed: bool,
    failures: &'a [String],
}

fn cmd_verify(cli: &Cli, bounds: Bounds) -> Result<(), Failure> {
    let reports: Vec<Report> = run_all(&bounds);
    match cli.emit {
        Emit::Json => {
            let out: Vec<ReportOut> = reports
                .iter()
                .map(|r| ReportOut { name: r.name, checked: r.checked, passed: r.passed(), failures: &r.failures })
                .collect();
            print_json(&out);
        }
        Emit::Tsv => {
            out!("name\tchecked\tfailed");
            for r in &reports {
                out!("{}\t{}\t{}", r.name, r.checked, r.failures.len());
            }
        }
        Emit::Text => {
            for r in &reports {
                out!("{r}");
                let shown = if cli.verbose { r.failures.len() } else { 5 };
                for f in r.failures.iter().take(shown) {
                    out!("    {f}");
                }
            }
        }
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    if failed > 0 {
        return Err(Failure { code: 1, message: format!("{failed} sweep(s) failed") });
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Coeff { triple, fallback_oracle, n_cap } => cmd_coeff(cli, triple, *fallback_oracle, *n_cap),
        Command::Tableaux { triple, all } => cmd_tableaux(cli, triple, *all),
        Command::Classify { triple } => cmd_classify(cli, triple),
        Command::Oracle { triple, n_cap, report_onset } => cmd_oracle(cli, triple, *n_cap, *report_onset),
        Command::Lr { triple } => cmd_lr(cli, triple),
        Command::Verify { max_size, max_s, thm33_r, n_cap } => {
            let mut b = Bounds::default();
            if let Some(k) = max_size {
                b = b.with_max_size(*k);
            }
            if let Some(s) = max_s {
                b.max_s = *s;
            }
            if let Some(r) = thm33_r {
                b.thm33_r = *r;
            }
            b.n_cap = *n_cap;
            cmd_verify(cli, b)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("kron: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
