mod args;

use std::fs;
use std::path::Path;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use serde_json::json;

use args::{Cli, Command, Format, GroupArgs, MethodArg, SpecArgs, SymbolSource};
use schubert_ed::bruhat::leq;
use schubert_ed::coset::cache::{load_or_enumerate, CACHE_VERSION};
use schubert_ed::coset::{enumerate_wp, EnumOptions};
use schubert_ed::ed_engine::morphism::same_type_rank_obstruction;
use schubert_ed::ed_engine::{
    ed_bruteforce, ed_flag, ed_report_closed, morphism_obstruction, morphism_obstruction_cor14, Budget, EdReport,
    VarietySpec,
};
use schubert_ed::schubert_symbols::{dual_index_set, index_set, Dictionary, GrassContext, IndexSet, KStrictPartition};
use schubert_ed::verify::{run_suite, Suite, SuiteOptions};
use schubert_ed::{build_root_system, format_word, parse_word, LieFamily};

const EXIT_USAGE: u8 = 1;
const EXIT_DISAGREE: u8 = 2;
const EXIT_TRUNCATED: u8 = 3;

/// A failed command: exit status and message.
struct Failure(u8, String);

impl From<schubert_ed::Error> for Failure {
    fn from(e: schubert_ed::Error) -> Self {
        Failure(EXIT_USAGE, e.to_string())
    }
}

type Outcome = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(EXIT_USAGE),
            };
        }
    };
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t as usize).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}

fn budget(cli: &Cli) -> Budget {
    Budget {
        pairs: (cli.budget_pairs > 0).then_some(cli.budget_pairs),
        seconds: (cli.budget_seconds > 0).then_some(cli.budget_seconds as f64),
        max_elements: None,
    }
}

fn resolve_group(g: &GroupArgs) -> Result<(LieFamily, usize), Failure> {
    Ok(LieFamily::resolve(&g.family, g.rank)?)
}

fn resolve_spec(s: &SpecArgs) -> Result<VarietySpec, Failure> {
    let (family, rank) = resolve_group(&s.group)?;
    Ok(if s.flag { VarietySpec::flag(family, rank)? } else { VarietySpec::new(family, rank, &s.nodes)? })
}

fn print_json(value: &impl serde::Serialize) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Ed { spec, method } => cmd_ed(cli, &resolve_spec(spec)?, *method),
        Command::Bruhat { group, u, w } => cmd_bruhat(cli, group, u, w),
        Command::Wp { spec, max_length } => cmd_wp(cli, &resolve_spec(spec)?, *max_length),
        Command::Symbols { family, n, m, from, value, t } => cmd_symbols(cli, family, *n, *m, *from, value, *t),
        Command::Morphism { source, source_ed, target_family, target_rank, target_node, q, pbar } => {
            let src = resolve_spec(source)?;
            let ed = match source_ed {
                Some(e) => *e,
                None => ed_flag(&src)?,
            };
            if let Some(tf) = target_family {
                let (family, rank) = LieFamily::resolve(tf, *target_rank)?;
                let target = VarietySpec::new(family, rank, target_node)?;
                let verdict = morphism_obstruction(ed, &target)?;
                let same_type = same_type_rank_obstruction(&src, &target)?;
                print_json(&json!({
                    "source": src.to_string(),
                    "source_ed": ed,
                    "target": target.to_string(),
                    "target_ed": target.family.is_classical().then(|| ed_flag(&target)).transpose()?,
                    "verdict": verdict.to_string(),
                    "same_type_smaller_rank": same_type.to_string(),
                }));
            } else if !q.is_empty() {
                let pbar = (!pbar.is_empty()).then_some(pbar.as_slice());
                print_json(&morphism_obstruction_cor14(&src, q, pbar)?);
            } else {
                return Err(Failure(EXIT_USAGE, "give --target-family/--target-node or --q".into()));
            }
            Ok(0)
        }
        Command::Verify { suite, max_rank, n, m, heavy_e8 } => cmd_verify(cli, suite, *max_rank, n.zip(*m), *heavy_e8),
        Command::Cache { clear, list: _ } => cmd_cache(cli, *clear),
    }
}

fn tsv_report(r: &EdReport) -> String {
    let ed = r.ed.map_or("-".to_string(), |e| e.to_string());
    let (u, w, l) = match &r.witness {
        Some(w) => (w.u.clone(), w.w.clone(), w.total_degree.to_string()),
        None => ("-".into(), "-".into(), r.ed.map_or("-".into(), |e| (e + 1).to_string())),
    };
    format!("{}\t{ed}\t{}\t{u}\t{w}\t{l}", r.spec, r.method)
}

fn emit_report(cli: &Cli, r: &EdReport) {
    match cli.format {
        Format::Json => print_json(r),
        Format::Tsv => {
            println!("spec\ted\tmethod\twitness_u\twitness_w\tL");
            println!("{}", tsv_report(r));
        }
    }
}

fn cmd_ed(cli: &Cli, spec: &VarietySpec, method: MethodArg) -> Outcome {
    let closed = ed_report_closed(spec)?;
    if method == MethodArg::Closed {
        emit_report(cli, &closed);
        return Ok(0);
    }
    let mut brute = ed_bruteforce(spec, budget(cli), cli.cache_dir.as_deref())?;
    let mut code = 0;
    if brute.truncated {
        code = EXIT_TRUNCATED;
    } else if method == MethodArg::Both {
        if brute.ed == closed.ed {
            brute.notes.push(format!("closed form agrees: {}", closed.ed.expect("closed form")));
        } else {
            brute.notes.push(format!("closed form disagrees: {}", closed.ed.expect("closed form")));
            code = EXIT_DISAGREE;
        }
    }
    emit_report(cli, &brute);
    for note in &brute.notes {
        eprintln!("note: {note}");
    }
    Ok(code)
}

fn cmd_bruhat(cli: &Cli, group: &GroupArgs, u: &str, w: &str) -> Outcome {
    let (family, rank) = resolve_group(group)?;
    let rs = build_root_system(family, rank)?;
    let ue = rs.from_word(&parse_word(u)?)?;
    let we = rs.from_word(&parse_word(w)?)?;
    let result = leq(&rs, &ue, &we)?;
    match cli.format {
        Format::Json => print_json(&json!({
            "family": family,
            "rank": rank,
            "u": format_word(&rs.reduced_word(&ue)),
            "w": format_word(&rs.reduced_word(&we)),
            "u_length": ue.length(),
            "w_length": we.length(),
            "leq": result,
        })),
        Format::Tsv => println!("{}\t{}\t{result}", u.trim(), w.trim()),
    }
    Ok(0)
}

fn cmd_wp(cli: &Cli, spec: &VarietySpec, max_length: Option<usize>) -> Outcome {
    let rs = spec.weyl_root_system();
    let p = spec.parabolic();
    let e = match max_length {
        Some(l) => enumerate_wp(&rs, &p, EnumOptions { max_length: Some(l), max_elements: None })?,
        None => load_or_enumerate(cli.cache_dir.as_deref(), &rs, &p, EnumOptions::full())?,
    };
    let strata = e.strata_counts();
    match cli.format {
        Format::Json => print_json(&json!({
            "spec": spec.to_string(),
            "dimension": e.dimension(),
            "strata": strata,
            "total": e.total_count(),
            "expected_total": e.expected_total(),
            "truncated": e.is_truncated(),
        })),
        Format::Tsv => {
            println!("length\tcount");
            for (l, c) in strata.iter().enumerate() {
                println!("{l}\t{c}");
            }
            println!("total\t{}", e.total_count());
        }
    }
    if e.is_truncated() {
        eprintln!("note: stopped at length {}, counts are partial", strata.len() - 1);
    }
    Ok(0)
}

fn cmd_symbols(
    cli: &Cli,
    family: &str,
    n: usize,
    m: usize,
    from: SymbolSource,
    value: &[usize],
    t: u8,
) -> Outcome {
    let family: LieFamily = family.parse()?;
    let ctx = GrassContext::new(family, n, m)?;
    let dict = Dictionary::new(&ctx)?;
    let p = match from {
        SymbolSource::Partition => index_set(&KStrictPartition::new(value, t, &ctx)?, &ctx)?,
        SymbolSource::Indexset => IndexSet::new(value.to_vec(), &ctx)?,
    };
    let lam = dict.table().partition_of(&p)?.clone();
    let dual = dual_index_set(&p, &ctx)?;
    let dual_lam = dict.table().partition_of(&dual)?.clone();
    let rs = ctx.root_system();
    let u = dict.weyl_of_symbol(&p)?;
    match cli.format {
        Format::Json => print_json(&json!({
            "context": ctx.to_string(),
            "partition": lam,
            "index_set": p,
            "dual_partition": dual_lam,
            "dual_index_set": dual,
            "weight": lam.weight(),
            "weyl_word": format_word(&rs.reduced_word(&u)),
        })),
        Format::Tsv => {
            println!("partition\tindex_set\tdual_partition\tdual_index_set\tweyl_word");
            println!("{lam}\t{p}\t{dual_lam}\t{dual}\t{}", format_word(&rs.reduced_word(&u)));
        }
    }
    Ok(0)
}

fn cmd_verify(
    cli: &Cli,
    names: &[String],
    max_rank: Option<usize>,
    context: Option<(usize, usize)>,
    heavy_e8: bool,
) -> Outcome {
    let suites: Vec<Suite> = if names.iter().any(|s| s == "all") {
        Suite::ALL.to_vec()
    } else {
        names.iter().map(|s| s.parse()).collect::<Result<_, _>>()?
    };
    let opts = SuiteOptions { max_rank, context, heavy_e8, budget: budget(cli), cache_dir: cli.cache_dir.clone() };
    let reports = suites.iter().map(|&s| run_suite(s, &opts)).collect::<Result<Vec<_>, _>>()?;
    match cli.format {
        Format::Json => print_json(&reports),
        Format::Tsv => {
            println!("suite\tcase\tresult\tdetail");
            for r in &reports {
                for c in &r.cases {
                    let res = if c.passed { "pass" } else if c.truncated { "truncated" } else { "FAIL" };
                    println!("{}\t{}\t{res}\t{}", r.suite, c.label, c.detail);
                }
            }
        }
    }
    for r in &reports {
        eprintln!("{}: {} of {} cases pass", r.suite, r.cases.len() - r.failures(), r.cases.len());
    }
    let hard_failure = reports.iter().flat_map(|r| &r.cases).any(|c| !c.passed && !c.truncated);
    Ok(if hard_failure {
        EXIT_DISAGREE
    } else if reports.iter().any(|r| r.truncated()) {
        EXIT_TRUNCATED
    } else {
        0
    })
}

fn cache_files(dir: &Path) -> std::io::Result<Vec<std::path::PathBuf>> {
    let mut files: Vec<_> = fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| {
            p.file_name()
                .and_then(|n| n.to_str())
                .is_some_and(|n| n.starts_with("wp-") && n.ends_with(".bin"))
        })
        .collect();
    files.sort();
    Ok(files)
}

fn cmd_cache(cli: &Cli, clear: bool) -> Outcome {
    let dir = cli
        .cache_dir
        .as_deref()
        .ok_or_else(|| Failure(EXIT_USAGE, "no cache directory (use --cache-dir or SCHUBERT_ED_CACHE)".into()))?;
    if !dir.exists() {
        println!("{}", json!({ "dir": dir, "files": [], "version": CACHE_VERSION }));
        return Ok(0);
    }
    let io = |e: std::io::Error| Failure(EXIT_USAGE, format!("{}: {e}", dir.display()));
    let files = cache_files(dir).map_err(io)?;
    if clear {
        for f in &files {
            fs::remove_file(f).map_err(io)?;
        }
    }
    let names: Vec<String> =
        files.iter().filter_map(|p| p.file_name().and_then(|n| n.to_str()).map(String::from)).collect();
    match cli.format {
        Format::Json => print_json(&json!({
            "dir": dir,
            "version": CACHE_VERSION,
            "files": names,
            "removed": clear,
        })),
        Format::Tsv => names.iter().for_each(|n| println!("{n}")),
    }
    Ok(0)
}
