use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use diagmon::enumeration::{self as engine, Engine, Method};
use diagmon::idempotent::{is_idempotent_direct, is_twisted_idempotent};
use diagmon::oracle::{brute_report, enumerate_elements, DEFAULT_CAP};
use diagmon::tables::{build_table, known_discrepancies, parse_discrepancies, Discrepancy};
use diagmon::verify::{run_verify, tally, Profile, VerifyOptions};
use diagmon::{Count, MonoidFamily, TwistOrder};

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Lib(#[from] diagmon::Error),
    #[error("{0}")]
    Io(#[from] io::Error),
    #[error("{0}")]
    Usage(String),
    #[error("verification failed: {0} check(s)")]
    Verify(usize),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Verify(_) => 1,
            CliError::Lib(diagmon::Error::TooLarge { .. }) => 3,
            _ => 2,
        }
    }
}

type CliResult<T> = Result<T, CliError>;

#[derive(Parser)]
#[command(
    name = "diagmon",
    version,
    about = "Idempotent counts in diagram monoids"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
    Markdown,
}

#[derive(Clone, Copy, ValueEnum)]
enum Filter {
    All,
    Idempotent,
    Twisted,
}

#[derive(Subcommand)]
enum Command {
    /// Print one exact count.
    Count {
        #[arg(long)]
        family: MonoidFamily,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        rank: Option<usize>,
        /// Root-of-unity order of the twist; 0 for none.
        #[arg(long = "M")]
        m: Option<usize>,
        #[arg(long, default_value = "formula")]
        method: Method,
        #[arg(long)]
        cache_dir: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: u64,
    },
    /// Regenerate one of the reference tables.
    Table {
        #[arg(long)]
        which: u8,
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        /// JSON list of known misprints; defaults to the bundled list.
        #[arg(long)]
        known_discrepancies: Option<PathBuf>,
    },
    /// Run the verification matrix.
    Verify {
        #[arg(long, default_value = "quick")]
        profile: Profile,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: u64,
        #[arg(long)]
        known_discrepancies: Option<PathBuf>,
        /// Replace c-values before checking, as FAMILY:N:C0:C1.
        #[arg(long)]
        tamper: Vec<String>,
        /// Print every check, not only failures.
        #[arg(long)]
        verbose: bool,
    },
    /// List the elements of a small monoid.
    Enumerate {
        #[arg(long)]
        family: MonoidFamily,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "all")]
        filter: Filter,
        #[arg(long = "M", default_value_t = 0)]
        m: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}

fn run(command: Command) -> CliResult<()> {
    match command {
        Command::Count {
            family,
            n,
            rank,
            m,
            method,
            cache_dir,
            cap,
        } => {
            let key = format!(
                "count:{family}:{n}:{}:{}:{method}",
                rank.map_or("-".into(), |r| r.to_string()),
                m.map_or("-".into(), |m| m.to_string())
            );
            let mut cache = Cache::load(cache_dir.as_deref())?;
            let value = match cache.get(&key) {
                Some(v) => v,
                None => {
                    let v = count(family, n, rank, m.map(TwistOrder::new), method, cap)?;
                    cache.insert(key, &v);
                    cache.save()?;
                    v
                }
            };
            println!("{value}");
            Ok(())
        }
        Command::Table {
            which,
            max_n,
            format,
            out,
            known_discrepancies: list,
        } => {
            let discrepancies = load_discrepancies(list.as_deref())?;
            let mut table = build_table(which, max_n)?;
            table.annotate(&discrepancies);
            let text = match format {
                Format::Csv => {
                    for note in &table.footnotes {
                        eprintln!("note: {note}");
                    }
                    table.to_csv()
                }
                Format::Markdown => table.to_markdown(),
                Format::Json => {
                    let mut s = serde_json::to_string_pretty(&table.to_json())
                        .map_err(|e| CliError::Usage(e.to_string()))?;
                    s.push('\n');
                    s
                }
            };
            write_output(out.as_deref(), &text)
        }
        Command::Verify {
            profile,
            cap,
            known_discrepancies: list,
            tamper,
            verbose,
        } => {
            let mut opts = VerifyOptions::new(profile);
            opts.cap = cap;
            opts.discrepancies = load_discrepancies(list.as_deref())?;
            let mut tampered = Engine::default();
            for raw in &tamper {
                let (f, n, c0, c1) = parse_tamper(raw)?;
                tampered = tampered.with_c_override(f, n, c0, c1);
            }
            opts.engine = tampered;
            let report = run_verify(&opts);
            let mut stdout = io::stdout().lock();
            for c in &report.checks {
                if verbose || !c.passed || c.known_discrepancy {
                    let tag = match (c.passed, c.known_discrepancy) {
                        (false, _) => "FAIL",
                        (true, true) => "KNOWN",
                        _ => "ok",
                    };
                    writeln!(stdout, "{tag:5} {}  [{}]", c.name, c.detail)?;
                }
            }
            let t = tally(&report);
            writeln!(
                stdout,
                "{} checks: {} passed, {} known discrepancies, {} failed",
                report.checks.len(),
                t.get("passed").unwrap_or(&0),
                t.get("known").unwrap_or(&0),
                t.get("failed").unwrap_or(&0)
            )?;
            match t.get("failed") {
                Some(&k) if k > 0 => Err(CliError::Verify(k)),
                _ => Ok(()),
            }
        }
        Command::Enumerate {
            family,
            n,
            filter,
            m,
            out,
            cap,
        } => {
            let t = TwistOrder::new(m);
            let mut text = String::new();
            let mut k = 0u64;
            for a in enumerate_elements(family, n, cap)? {
                let keep = match filter {
                    Filter::All => true,
                    Filter::Idempotent => is_idempotent_direct(&a),
                    Filter::Twisted => is_twisted_idempotent(&a, t),
                };
                if keep {
                    text.push_str(&a.to_string());
                    text.push('\n');
                    k += 1;
                }
            }
            text.push_str(&format!("# {k} elements\n"));
            write_output(out.as_deref(), &text)
        }
    }
}

fn count(
    f: MonoidFamily,
    n: usize,
    rank: Option<usize>,
    twist: Option<TwistOrder>,
    method: Method,
    cap: u64,
) -> CliResult<Count> {
    if method == Method::Bruteforce {
        let report = brute_report(f, n, twist, cap)?;
        if let Some(r) = rank {
            if r > n {
                return Err(diagmon::Error::Domain(format!("rank {r} exceeds n = {n}")).into());
            }
        }
        let zero = Count::default();
        return Ok(match (rank, twist) {
            (None, None) => report.idempotents_total,
            (Some(r), None) => report.idempotents_by_rank.get(&r).unwrap_or(&zero).clone(),
            (None, Some(_)) => report.twisted_total,
            (Some(r), Some(t)) => {
                if t.m != 0 {
                    return Err(diagmon::Error::Domain(
                        "per-rank twisted counts need M = 0".into(),
                    )
                    .into());
                }
                report.twisted_by_rank.get(&r).unwrap_or(&zero).clone()
            }
        });
    }
    let e = Engine::standard();
    Ok(match (rank, twist) {
        (None, None) => e.e_total(f, n, method)?,
        (Some(r), None) => e.e_rank(f, n, r, method)?,
        (None, Some(t)) => e.exi_total(f, n, t, method)?,
        (Some(r), Some(t)) => engine::exi_rank(f, n, r, t, method)?,
    })
}

fn parse_tamper(raw: &str) -> CliResult<(MonoidFamily, usize, Count, Count)> {
    let parts: Vec<&str> = raw.split(':').collect();
    let bad = || CliError::Usage(format!("--tamper expects FAMILY:N:C0:C1, got `{raw}`"));
    if parts.len() != 4 {
        return Err(bad());
    }
    let f: MonoidFamily = parts[0].parse()?;
    let n: usize = parts[1].parse().map_err(|_| bad())?;
    let c0: Count = parts[2].parse().map_err(|_| bad())?;
    let c1: Count = parts[3].parse().map_err(|_| bad())?;
    Ok((f, n, c0, c1))
}

fn load_discrepancies(path: Option<&Path>) -> CliResult<Vec<Discrepancy>> {
    match path {
        None => Ok(known_discrepancies()),
        Some(p) => Ok(parse_discrepancies(&fs::read_to_string(p)?)?),
    }
}

fn write_output(path: Option<&Path>, text: &str) -> CliResult<()> {
    match path {
        Some(p) => fs::write(p, text)?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

/// Persisted counts: a JSON object from query keys to decimal strings.
struct Cache {
    path: Option<PathBuf>,
    entries: BTreeMap<String, String>,
    dirty: bool,
}

impl Cache {
    fn load(dir: Option<&Path>) -> CliResult<Self> {
        let path = dir.map(|d| d.join("diagmon-cache.json"));
        let entries = match &path {
            Some(p) if p.exists() => serde_json::from_str(&fs::read_to_string(p)?)
                .map_err(|e| CliError::Usage(format!("unreadable cache {}: {e}", p.display())))?,
            _ => BTreeMap::new(),
        };
        Ok(Cache {
            path,
            entries,
            dirty: false,
        })
    }

    fn get(&self, key: &str) -> Option<Count> {
        self.entries.get(key).and_then(|v| v.parse().ok())
    }

    fn insert(&mut self, key: String, value: &Count) {
        if self.path.is_some() {
            self.entries.insert(key, value.to_string());
            self.dirty = true;
        }
    }

    fn save(&self) -> CliResult<()> {
        if let (Some(p), true) = (&self.path, self.dirty) {
            if let Some(dir) = p.parent() {
                fs::create_dir_all(dir)?;
            }
            let text = serde_json::to_string_pretty(&self.entries)
                .map_err(|e| CliError::Usage(e.to_string()))?;
            fs::write(p, text + "\n")?;
        }
        Ok(())
    }
}
