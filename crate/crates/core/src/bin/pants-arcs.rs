use std::fmt::Write as _;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use pants_arcs::census::{census_with, enumerate_words, CensusOptions};
use pants_arcs::family::{family_predicted_i, family_word, FamilyId};
use pants_arcs::fixtures::{load_fixtures, parse_fixtures, verify_fixtures, LOW_LYING_EXAMPLES};
use pants_arcs::intersect::{self_intersection, trace};
use pants_arcs::lowlying::{cf_eval, cover_check, family_cf, spectrum_check, witness};
use pants_arcs::lowlying::ContinuedFraction;
use pants_arcs::tables::verify_tables;
use pants_arcs::word::ArcWord;
use pants_arcs::CensusError;

const OK: u8 = 0;
const INVALID: u8 = 1;
const FAILED: u8 = 2;
const INTERNAL: u8 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Parser)]
#[command(name = "pants-arcs", version, about = "Self-intersection numbers of arcs on a pair of pants")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "json", global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a word against the grammar.
    Validate { word: String },
    /// Self-intersection number of a word.
    Intersect {
        word: String,
        /// Include the per-pair grid.
        #[arg(long)]
        trace: bool,
    },
    /// List every valid word of a given length.
    Enumerate {
        #[arg(long)]
        length: usize,
        #[arg(long)]
        count_only: bool,
    },
    /// Minimum, maximum and histogram over all words of a length.
    Census {
        #[arg(long)]
        length: usize,
        /// Also write the histogram as CSV to this file.
        #[arg(long)]
        histogram: Option<PathBuf>,
        /// Worker threads (default: ARC_JOBS, else all logical CPUs).
        #[arg(long)]
        jobs: Option<usize>,
        /// Allow word lengths above 12.
        #[arg(long)]
        extended: bool,
        /// Give up after this many seconds.
        #[arg(long)]
        budget_secs: Option<u64>,
    },
    /// Expand a family word and optionally check its predicted value.
    Family {
        #[arg(long)]
        id: String,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: Option<u32>,
        #[arg(long)]
        verify: bool,
    },
    /// Low-lying witness word for a value.
    Witness { n: u64 },
    /// Check witnesses for every value up to a bound.
    Spectrum {
        #[arg(long)]
        max: u64,
    },
    /// Check the five-set cover up to a bound.
    Cover {
        #[arg(long)]
        max: u64,
    },
    /// Compare regenerated decidable pair tables with the transcription.
    Tables {
        #[arg(long)]
        verify: bool,
    },
    /// Evaluate a continued fraction given as a1,a2,...
    Cf { quotients: String },
    /// Check a word,expected_i fixture file (default: the bundled examples).
    Fixtures {
        #[arg(long)]
        file: Option<PathBuf>,
    },
}

struct Out {
    format: Format,
    stdout: BufWriter<io::Stdout>,
}

impl Out {
    /// Writes `value` as JSON, or the given csv/text rendering.
    fn emit<T: Serialize>(&mut self, value: &T, csv: impl FnOnce() -> String, text: impl FnOnce() -> String) -> io::Result<()> {
        let s = match self.format {
            Format::Json => serde_json::to_string(value).map_err(io::Error::other)? + "\n",
            Format::Csv => csv(),
            Format::Text => text(),
        };
        self.stdout.write_all(s.as_bytes())
    }
}

fn parse(word: &str) -> Result<ArcWord, u8> {
    word.parse().map_err(|e| {
        eprintln!("error: invalid word {word:?}: {e}");
        INVALID
    })
}

fn jobs(flag: Option<usize>) -> usize {
    flag.or_else(|| std::env::var("ARC_JOBS").ok()?.parse().ok())
        .unwrap_or(0)
}

fn verdict(passed: bool) -> u8 {
    if passed {
        OK
    } else {
        FAILED
    }
}

#[derive(Serialize)]
struct Validation {
    word: String,
    valid: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    word_length: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    alpha: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    beta: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    positive: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    position: Option<usize>,
}

#[derive(Serialize)]
struct Intersection {
    word: ArcWord,
    i: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    trace: Option<TraceOut>,
}

#[derive(Serialize)]
struct TraceOut {
    labels: Vec<String>,
    rows: Vec<Vec<&'static str>>,
}

#[derive(Serialize)]
struct FamilyOut {
    family: FamilyId,
    template: &'static str,
    n: u32,
    m: Option<u32>,
    word: ArcWord,
    word_length: usize,
    predicted_i: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    i_computed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    passed: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    cf: Option<ContinuedFraction>,
}

#[derive(Serialize)]
struct Summary<T: Serialize> {
    passed: bool,
    #[serde(flatten)]
    report: T,
}

#[derive(Serialize)]
struct Failure {
    passed: bool,
    error: String,
}

#[derive(Serialize)]
struct CfOut {
    cf: ContinuedFraction,
    value: String,
    numerator: String,
    denominator: String,
    max_quotient: u32,
    in_r2: bool,
}

fn run(cli: Cli) -> io::Result<u8> {
    let mut out = Out {
        format: cli.format,
        stdout: BufWriter::new(io::stdout()),
    };
    let code = match cli.command {
        Command::Validate { word } => {
            let v = match word.parse::<ArcWord>() {
                Ok(w) => {
                    let c = w.seam_counts();
                    Validation {
                        word: word.clone(),
                        valid: true,
                        word_length: Some(w.word_length()),
                        alpha: Some(c.alpha),
                        beta: Some(c.beta),
                        positive: Some(w.is_positive()),
                        error: None,
                        position: None,
                    }
                }
                Err(e) => {
                    eprintln!("error: invalid word {word:?}: {e}");
                    Validation {
                        word: word.clone(),
                        valid: false,
                        word_length: None,
                        alpha: None,
                        beta: None,
                        positive: None,
                        error: Some(e.to_string()),
                        position: Some(e.position()),
                    }
                }
            };
            let valid = v.valid;
            out.emit(
                &v,
                || format!("word,valid\n{},{}\n", v.word, v.valid),
                || {
                    if v.valid {
                        format!("{}: valid\n", v.word)
                    } else {
                        format!("{}: invalid ({})\n", v.word, v.error.clone().unwrap_or_default())
                    }
                },
            )?;
            if valid {
                OK
            } else {
                INVALID
            }
        }
        Command::Intersect { word, trace: with_trace } => {
            let w = match parse(&word) {
                Ok(w) => w,
                Err(c) => return Ok(c),
            };
            let i = self_intersection(&w);
            let grid = with_trace.then(|| trace(&w));
            let res = Intersection {
                word: w.clone(),
                i,
                trace: grid.as_ref().map(|g| TraceOut {
                    labels: g.labels.clone(),
                    rows: g.rows(),
                }),
            };
            out.emit(
                &res,
                || {
                    let mut s = format!("word,i\n{w},{i}\n");
                    if let Some(g) = &grid {
                        s.push_str("row,col,cell\n");
                        for (r, row) in g.rows().iter().enumerate() {
                            for (k, c) in row.iter().enumerate() {
                                let _ = writeln!(s, "{},{},{}", r + 1, r + k + 2, c);
                            }
                        }
                    }
                    s
                },
                || {
                    let mut s = format!("{w}: i = {i}\n");
                    if let Some(g) = &grid {
                        s.push_str(&g.to_string());
                    }
                    s
                },
            )?;
            OK
        }
        Command::Enumerate { length, count_only } => {
            if length < 2 {
                eprintln!("error: --length must be at least 2");
                return Ok(INVALID);
            }
            if length > 16 {
                eprintln!("note: word lengths above 16 have no reference values");
            }
            if count_only {
                #[derive(Serialize)]
                struct Count {
                    word_length: usize,
                    count: u64,
                }
                let c = Count {
                    word_length: length,
                    count: enumerate_words(length).count() as u64,
                };
                out.emit(
                    &c,
                    || format!("word_length,count\n{},{}\n", c.word_length, c.count),
                    || format!("{}\n", c.count),
                )?;
            } else {
                let w = &mut out.stdout;
                match out.format {
                    Format::Json => {
                        w.write_all(b"[")?;
                        for (k, word) in enumerate_words(length).enumerate() {
                            if k > 0 {
                                w.write_all(b",")?;
                            }
                            write!(w, "\"{word}\"")?;
                        }
                        w.write_all(b"]\n")?;
                    }
                    Format::Csv | Format::Text => {
                        if out.format == Format::Csv {
                            w.write_all(b"word\n")?;
                        }
                        for word in enumerate_words(length) {
                            writeln!(w, "{word}")?;
                        }
                    }
                }
            }
            OK
        }
        Command::Census {
            length,
            histogram,
            jobs: j,
            extended,
            budget_secs,
        } => {
            if length < 2 {
                eprintln!("error: --length must be at least 2");
                return Ok(INVALID);
            }
            if length > 12 && !extended {
                eprintln!("error: word lengths above 12 need --extended");
                return Ok(INVALID);
            }
            if length > 16 {
                eprintln!("note: word lengths above 16 have no reference values");
            }
            let opts = CensusOptions {
                parallelism: jobs(j),
                budget: budget_secs.map(Duration::from_secs),
            };
            let report = match census_with(length, &opts) {
                Ok(r) => r,
                Err(CensusError::BudgetExceeded) => {
                    eprintln!("error: census did not finish within the time budget");
                    return Ok(FAILED);
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    return Ok(INVALID);
                }
            };
            if let Some(path) = histogram {
                std::fs::write(&path, report.histogram_csv())?;
            }
            out.emit(
                &report,
                || report.histogram_csv(),
                || {
                    format!(
                        "word length {}: {} words, min {}, max {}\n",
                        report.word_length, report.word_count, report.min_i, report.max_i
                    )
                },
            )?;
            OK
        }
        Command::Family { id, n, m, verify } => {
            let id: FamilyId = match id.parse() {
                Ok(f) => f,
                Err(e) => {
                    eprintln!("error: {e}");
                    return Ok(INVALID);
                }
            };
            let (w, predicted) = match family_word(id, n, m).and_then(|w| Ok((w, family_predicted_i(id, n, m)?))) {
                Ok(x) => x,
                Err(e) => {
                    eprintln!("error: {e}");
                    return Ok(INVALID);
                }
            };
            let computed = verify.then(|| self_intersection(&w));
            let passed = computed.map(|c| c == predicted);
            let res = FamilyOut {
                family: id,
                template: id.template(),
                n,
                m,
                word_length: w.word_length(),
                word: w,
                predicted_i: predicted,
                i_computed: computed,
                passed,
                cf: family_cf(id, n, m).ok(),
            };
            out.emit(
                &res,
                || {
                    let c = res.i_computed.map(|c| c.to_string()).unwrap_or_default();
                    format!("family,n,word,predicted_i,i_computed\n{},{},{},{},{}\n", res.family, n, res.word, predicted, c)
                },
                || {
                    let mut s = format!("{} {}: {} predicted {}", res.family, res.template, res.word, predicted);
                    if let Some(c) = res.i_computed {
                        let _ = write!(s, ", computed {c} {}", if passed == Some(true) { "PASS" } else { "FAIL" });
                    }
                    s + "\n"
                },
            )?;
            verdict(passed.unwrap_or(true))
        }
        Command::Witness { n } => {
            let wc = witness(n);
            let passed = wc.i_computed == n && wc.max_quotient <= 2;
            out.emit(
                &wc,
                || {
                    format!(
                        "N,family,n,m,word,i_computed,max_quotient\n{},{},{},{},{},{},{}\n",
                        wc.target,
                        wc.family,
                        wc.n,
                        wc.m.map(|m| m.to_string()).unwrap_or_default(),
                        wc.word,
                        wc.i_computed,
                        wc.max_quotient
                    )
                },
                || format!("{} = i({}) via {} cf {}\n", wc.i_computed, wc.word, wc.family, wc.cf),
            )?;
            verdict(passed)
        }
        Command::Spectrum { max } => summarize(&mut out, spectrum_check(max), "spectrum")?,
        Command::Cover { max } => summarize(&mut out, cover_check(max), "cover")?,
        Command::Tables { verify: _ } => {
            let r = verify_tables();
            let passed = r.passed();
            let s = Summary { passed, report: &r };
            out.emit(
                &s,
                || format!("passed,intersecting,nonintersecting,mismatches\n{},{},{},{}\n", passed, r.intersecting, r.nonintersecting, r.mismatches.len()),
                || {
                    let mut t = format!(
                        "tables: {} ({} intersecting, {} non-intersecting ordered pairs)\n",
                        if passed { "PASS" } else { "FAIL" },
                        r.intersecting,
                        r.nonintersecting
                    );
                    for m in &r.mismatches {
                        let _ = writeln!(t, "  {} {}: expected {:?}, computed {:?}", m.pair.0, m.pair.1, m.expected, m.computed);
                    }
                    t
                },
            )?;
            verdict(passed)
        }
        Command::Cf { quotients } => {
            let cf: ContinuedFraction = match quotients.parse() {
                Ok(c) => c,
                Err(e) => {
                    eprintln!("error: {e}");
                    return Ok(INVALID);
                }
            };
            let v = cf_eval(&cf);
            let res = CfOut {
                value: v.to_string(),
                numerator: v.numerator().to_string(),
                denominator: v.denominator().to_string(),
                max_quotient: cf.max_partial_quotient(),
                in_r2: v.in_r(2),
                cf,
            };
            out.emit(
                &res,
                || format!("cf,value,max_quotient\n\"{}\",{},{}\n", res.cf, res.value, res.max_quotient),
                || format!("{} = {}\n", res.cf, res.value),
            )?;
            OK
        }
        Command::Fixtures { file } => {
            let rows = match &file {
                Some(p) => load_fixtures(p),
                None => parse_fixtures(LOW_LYING_EXAMPLES),
            };
            let rows = match rows {
                Ok(r) => r,
                Err(e) => {
                    eprintln!("error: {e}");
                    return Ok(INVALID);
                }
            };
            let r = verify_fixtures(&rows);
            let passed = r.all_passed();
            let s = Summary { passed, report: &r };
            out.emit(
                &s,
                || {
                    let mut t = String::from("word,expected_i,computed_i\n");
                    for f in &r.failures {
                        let _ = writeln!(t, "{},{},{}", f.word, f.expected_i, f.computed_i);
                    }
                    t
                },
                || {
                    let mut t = format!("fixtures: {} ({}/{} rows match)\n", if passed { "PASS" } else { "FAIL" }, r.passed, r.total);
                    for f in &r.failures {
                        let _ = writeln!(t, "  {}: expected {}, computed {}", f.word, f.expected_i, f.computed_i);
                    }
                    t
                },
            )?;
            verdict(passed)
        }
    };
    out.stdout.flush()?;
    Ok(code)
}

fn summarize<T: Serialize, E: std::fmt::Display>(out: &mut Out, result: Result<T, E>, name: &str) -> io::Result<u8> {
    match result {
        Ok(report) => {
            let s = Summary { passed: true, report: &report };
            let json = serde_json::to_string(&report).unwrap_or_default();
            out.emit(&s, || format!("check,passed\n{name},true\n"), || format!("{name}: PASS {json}\n"))?;
            Ok(OK)
        }
        Err(e) => {
            let f = Failure { passed: false, error: e.to_string() };
            out.emit(&f, || format!("check,passed\n{name},false\n"), || format!("{name}: FAIL {e}\n"))?;
            eprintln!("{name}: {e}");
            Ok(FAILED)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::from(OK);
            }
            let msg = e.to_string();
            let first = msg.lines().next().unwrap_or("usage error");
            eprintln!("{first}");
            return ExitCode::from(INVALID);
        }
    };
    match std::panic::catch_unwind(|| run(cli)) {
        Ok(Ok(code)) => ExitCode::from(code),
        Ok(Err(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::from(OK),
        Ok(Err(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(INTERNAL)
        }
        Err(_) => ExitCode::from(INTERNAL),
    }
}
