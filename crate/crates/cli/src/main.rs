//! Command-line front end: verify arrays, enumerate distributions and
//! catalogues, and work with permutation groups.
//!
//! Exit status: 0 for success or a positive verdict, 1 for a negative
//! verdict (not a PSCA, not isomorphic, no witness), 2 for usage or input
//! errors.

use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use psca_core::catalogue::{group_flag_count, read_catalogue, realised_distributions, CatalogueWriter};
use psca_core::distributions::{enumerate_feasible, filter_chain, Params};
use psca_core::groups::{
    builtin, builtin_names, close, conjugate_search, is_group, sample_conjugates, BuiltinKind, GroupSpec,
    DEFAULT_MAX_ORDER,
};
use psca_core::iso::{canonical_form, isomorphic};
use psca_core::search::{build_catalogue_streaming, largest_automorphism_class, BuildOptions, Method};
use psca_core::{verify, Error, PermArray};
use serde_json::json;

#[derive(Parser)]
#[command(name = "psca", version, about = "Perfect sequence covering arrays: verify, enumerate, construct")]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Worker threads (defaults to all cores).
    #[arg(long, global = true, env = "PSCA_JOBS")]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that an array file is a PSCA of strength T.
    Verify {
        file: PathBuf,
        #[arg(long)]
        t: usize,
    },
    /// Count feasible distribution vectors, optionally with chain survivors.
    Feasible {
        v: usize,
        t: usize,
        lambda: u64,
        #[arg(long)]
        survivors: bool,
        /// Also print the vectors (survivors if requested, else all).
        #[arg(long)]
        list: bool,
    },
    /// Build the isomorph-free catalogue of PSCA(V,T,LAMBDA).
    Enumerate(EnumerateArgs),
    /// Distribution vectors realised in a catalogue file.
    Realised {
        catalogue: PathBuf,
        #[arg(long)]
        list: bool,
    },
    /// Canonical representative of an array and its digest.
    Canon { file: PathBuf },
    /// Are two arrays isomorphic (relabelling symbols and/or reversing rows)?
    Iso { file_a: PathBuf, file_b: PathBuf },
    /// Permutation group operations.
    #[command(subcommand)]
    Group(GroupCommand),
    /// Distribution vector of every symbol of an array.
    Distributions { file: PathBuf },
}

#[derive(Args)]
struct EnumerateArgs {
    v: usize,
    t: usize,
    lambda: u64,
    /// Catalogue file (JSON lines), written as classes are confirmed.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value = "fixed")]
    method: Method,
    /// Stop a level after this many classes; the result is then incomplete.
    #[arg(long)]
    limit_classes: Option<usize>,
    /// Wall-clock limit in seconds; the result is then incomplete.
    #[arg(long)]
    time_limit: Option<f64>,
    /// Keep only classes where every symbol has this distribution, e.g. 3,3,3,3,3,3.
    #[arg(long, value_delimiter = ',')]
    require_distribution: Option<Vec<u64>>,
    /// Start from this class: an array file, or a catalogue file together
    /// with --seed-class or --seed-largest-aut.
    #[arg(long)]
    seed: Option<PathBuf>,
    /// Digest (or digest prefix) of the class to pick from the --seed catalogue.
    #[arg(long, requires = "seed", conflicts_with = "seed_largest_aut")]
    seed_class: Option<String>,
    /// Pick the class with the most automorphisms from the --seed catalogue.
    #[arg(long, requires = "seed")]
    seed_largest_aut: bool,
}

#[derive(Args)]
struct GroupSource {
    /// A registered construction (see `group builtin --list`).
    #[arg(long, conflicts_with_all = ["degree", "generators"])]
    builtin: Option<String>,
    /// Degree of the generators given on the command line.
    #[arg(long = "v", requires = "generators")]
    degree: Option<usize>,
    /// Generators in cycle notation, e.g. "(0,5,4)(1,2,3)".
    generators: Vec<String>,
}

#[derive(Subcommand)]
enum GroupCommand {
    /// Close a generating set and report the group order.
    Close {
        #[command(flatten)]
        source: GroupSource,
        #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
        max_order: usize,
        /// Write the elements as an array file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Do the distinct rows of an array form a group after relabelling?
    IsGroup { file: PathBuf },
    /// Look for a column permutation h making the right translate Gh a PSCA.
    Search {
        #[command(flatten)]
        source: GroupSource,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        lambda: u64,
        /// Node budget for the exhaustive search.
        #[arg(long, conflicts_with = "samples")]
        budget: Option<u64>,
        /// Try this many random column permutations instead.
        #[arg(long, requires = "seed")]
        samples: Option<u64>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
        max_order: usize,
    },
    /// List or show registered constructions.
    Builtin {
        name: Option<String>,
        #[arg(long, conflicts_with = "name")]
        list: bool,
        /// Verify the construction at its strength.
        #[arg(long)]
        verify: bool,
        /// Write the rows as an array file.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
        max_order: usize,
    },
}

/// Result of a command that succeeded in running.
enum Verdict {
    Yes,
    No,
}

type Result<T> = std::result::Result<T, Error>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(Verdict::Yes) => ExitCode::SUCCESS,
        Ok(Verdict::No) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn read_array(path: &Path) -> Result<PermArray> {
    let text = std::fs::read_to_string(path)?;
    PermArray::parse(&text).map_err(|e| match e {
        Error::Parse { line, msg } => Error::Parse { line, msg: format!("{}: {msg}", path.display()) },
        other => other,
    })
}

fn write_array(path: &Path, x: &PermArray) -> Result<()> {
    std::fs::write(path, x.to_text())?;
    Ok(())
}

fn emit(json: bool, value: serde_json::Value, text: impl FnOnce() -> String) {
    let line = if json { value.to_string() } else { text() };
    let mut out = std::io::stdout().lock();
    // A closed pipe (e.g. `| head`) is not an error worth reporting.
    if let Err(e) = writeln!(out, "{line}") {
        if e.kind() != std::io::ErrorKind::BrokenPipe {
            eprintln!("error: {e}");
        }
    }
}

fn fmt_vec(d: &[u64]) -> String {
    let parts: Vec<String> = d.iter().map(u64::to_string).collect();
    format!("({})", parts.join(","))
}

fn run(cli: &Cli) -> Result<Verdict> {
    let json = cli.json;
    match &cli.command {
        Command::Verify { file, t } => {
            let x = read_array(file)?;
            let res = verify(&x, *t)?;
            let violation = res.first_violation.as_ref().map(|w| {
                json!({"sequence": w.sequence.symbols(), "observed": w.observed, "expected": w.expected})
            });
            emit(
                json,
                json!({"is_psca": res.is_psca, "v": x.v(), "t": t, "lambda": res.lambda, "rows": x.len(), "violation": violation}),
                || match (&res.lambda, &res.first_violation) {
                    (Some(l), _) => format!("PSCA({},{t},{l})", x.v()),
                    (None, Some(w)) => format!(
                        "not a PSCA: sequence {:?} covered {} times, expected {}",
                        w.sequence.symbols(),
                        w.observed,
                        w.expected
                    ),
                    (None, None) => format!("not a PSCA: {} rows is not a multiple of {t}!", x.len()),
                },
            );
            Ok(if res.is_psca { Verdict::Yes } else { Verdict::No })
        }
        Command::Feasible { v, t, lambda, survivors, list } => {
            let p = Params::new(*v, *t, *lambda)?;
            let set = if *survivors { filter_chain(p) } else { enumerate_feasible(p) };
            let shown = set.survivors.as_ref().unwrap_or(&set.vectors);
            emit(
                json,
                json!({"feasible": set.vectors.len(), "survivors": set.survivor_count(),
                       "vectors": if *list { Some(shown) } else { None }}),
                || {
                    let mut s = format!("feasible={}", set.vectors.len());
                    if let Some(n) = set.survivor_count() {
                        s.push_str(&format!(" survivors={n}"));
                    }
                    if *list {
                        for d in shown {
                            s.push('\n');
                            s.push_str(&fmt_vec(d));
                        }
                    }
                    s
                },
            );
            Ok(Verdict::Yes)
        }
        Command::Enumerate(args) => enumerate(args, json),
        Command::Realised { catalogue, list } => {
            let c = read_catalogue(BufReader::new(File::open(catalogue)?))?;
            let r = realised_distributions(&c)?;
            emit(
                json,
                json!({"realised": r.vectors.len(), "complete": r.complete, "classes": c.len(),
                       "groups": group_flag_count(&c),
                       "vectors": if *list { Some(&r.vectors) } else { None }}),
                || {
                    let mut s = format!("realised={} complete={}", r.vectors.len(), r.complete);
                    if *list {
                        for d in &r.vectors {
                            s.push('\n');
                            s.push_str(&fmt_vec(d));
                        }
                    }
                    s
                },
            );
            Ok(Verdict::Yes)
        }
        Command::Canon { file } => {
            let x = read_array(file)?;
            let c = canonical_form(&x);
            let rep = c.to_array();
            emit(
                json,
                json!({"digest": c.digest(), "rows": rep.rows().iter().map(|r| r.row()).collect::<Vec<_>>()}),
                || format!("{}digest={}", rep.to_text(), c.digest()),
            );
            Ok(Verdict::Yes)
        }
        Command::Iso { file_a, file_b } => {
            let a = read_array(file_a)?;
            let b = read_array(file_b)?;
            let same = isomorphic(&a, &b);
            emit(json, json!({"isomorphic": same}), || {
                if same { "isomorphic" } else { "not isomorphic" }.to_string()
            });
            Ok(if same { Verdict::Yes } else { Verdict::No })
        }
        Command::Distributions { file } => {
            let x = read_array(file)?;
            let ds = (0..x.v()).map(|w| x.distribution_vector(w)).collect::<Result<Vec<_>>>()?;
            emit(json, json!({"distributions": ds}), || {
                ds.iter().enumerate().map(|(w, d)| format!("{w}: {}", fmt_vec(d))).collect::<Vec<_>>().join("\n")
            });
            Ok(Verdict::Yes)
        }
        Command::Group(g) => group(g, json),
    }
}

fn enumerate(args: &EnumerateArgs, json: bool) -> Result<Verdict> {
    let p = Params::new(args.v, args.t, args.lambda)?;
    let seed = match &args.seed {
        None => None,
        Some(path) => Some(load_seed(path, args)?),
    };
    let opts = BuildOptions {
        method: args.method,
        max_classes: args.limit_classes,
        time_limit: match args.time_limit {
            Some(s) if !(s.is_finite() && s >= 0.0) => {
                return Err(Error::Input(format!("invalid time limit {s}")));
            }
            s => s.map(Duration::from_secs_f64),
        },
        require_distribution: args.require_distribution.clone(),
        seed,
    };
    let mut writer = match &args.out {
        Some(path) => Some(CatalogueWriter::new(BufWriter::new(File::create(path)?), p)),
        None => None,
    };
    let mut sink = |x: &PermArray, g: bool| -> Result<()> {
        match writer.as_mut() {
            Some(w) => w.write_class(x, g),
            None => Ok(()),
        }
    };
    let c = build_catalogue_streaming(p, &opts, &mut sink)?;
    if let Some(w) = writer {
        w.finish(c.complete)?.flush()?;
    }
    let groups = group_flag_count(&c);
    emit(json, json!({"classes": c.len(), "complete": c.complete, "groups": groups}), || {
        format!("classes={} complete={}\ngroups={groups}", c.len(), c.complete)
    });
    Ok(Verdict::Yes)
}

fn load_seed(path: &Path, args: &EnumerateArgs) -> Result<PermArray> {
    if args.seed_class.is_none() && !args.seed_largest_aut {
        return read_array(path);
    }
    let c = read_catalogue(BufReader::new(File::open(path)?))?;
    let index = if let Some(prefix) = &args.seed_class {
        let hits: Vec<usize> =
            (0..c.len()).filter(|&i| canonical_form(&c.classes[i]).digest().starts_with(prefix.as_str())).collect();
        match hits.as_slice() {
            [i] => *i,
            [] => return Err(Error::Input(format!("no class with digest {prefix}"))),
            _ => return Err(Error::Input(format!("digest prefix {prefix} is ambiguous"))),
        }
    } else {
        largest_automorphism_class(&c).ok_or_else(|| Error::Input("seed catalogue is empty".into()))?
    };
    Ok(c.classes[index].clone())
}

fn group_spec(source: &GroupSource) -> Result<GroupSpec> {
    match (&source.builtin, source.degree) {
        (Some(name), _) => match builtin(name)?.kind {
            BuiltinKind::Group(spec) => Ok(spec),
            BuiltinKind::Array(_) => Err(Error::Input(format!("built-in {name} is an array, not a group"))),
        },
        (None, Some(v)) => {
            let gens: Vec<&str> = source.generators.iter().map(String::as_str).collect();
            GroupSpec::parse(v, &gens)
        }
        (None, None) => Err(Error::Input("give --builtin NAME or --v V with generators".into())),
    }
}

fn group(cmd: &GroupCommand, json: bool) -> Result<Verdict> {
    match cmd {
        GroupCommand::Close { source, max_order, out } => {
            let spec = group_spec(source)?;
            let g = close(&spec, *max_order)?;
            if let Some(path) = out {
                write_array(path, &g.to_array())?;
            }
            emit(
                json,
                json!({"v": g.v(), "order": g.order(), "transitive": g.is_transitive()}),
                || format!("order={} transitive={}", g.order(), g.is_transitive()),
            );
            Ok(Verdict::Yes)
        }
        GroupCommand::IsGroup { file } => {
            let x = read_array(file)?;
            let yes = is_group(&x);
            emit(json, json!({"is_group": yes}), || if yes { "group" } else { "not a group" }.to_string());
            Ok(if yes { Verdict::Yes } else { Verdict::No })
        }
        GroupCommand::Search { source, t, lambda, budget, samples, seed, max_order } => {
            let g = close(&group_spec(source)?, *max_order)?;
            let (witness, detail, summary) = match samples {
                Some(n) => {
                    let (w, used) = sample_conjugates(&g, *t, *lambda, *n, seed.unwrap_or(0))?;
                    (w, json!({"samples": used}), format!("samples={used}"))
                }
                None => {
                    let out = conjugate_search(&g, *t, *lambda, *budget)?;
                    let summary = format!("nodes={} exhausted={}", out.nodes, out.exhausted);
                    (out.witness, json!({"nodes": out.nodes, "exhausted": out.exhausted}), summary)
                }
            };
            let cycles = witness.as_ref().map(|h| h.to_cycle_string());
            emit(json, json!({"witness": cycles, "detail": detail}), || match &cycles {
                Some(c) => format!("witness={c} {summary}"),
                None => format!("no witness {summary}"),
            });
            Ok(if witness.is_some() { Verdict::Yes } else { Verdict::No })
        }
        GroupCommand::Builtin { name, list, verify: check, out, max_order } => {
            let Some(name) = name.as_deref().filter(|_| !*list) else {
                let names = builtin_names();
                emit(json, json!(names), || names.join("\n"));
                return Ok(Verdict::Yes);
            };
            let b = builtin(name)?;
            let gens = match &b.kind {
                BuiltinKind::Group(spec) => Some(spec.to_cycle_strings()),
                BuiltinKind::Array(_) => None,
            };
            let x = if *check || out.is_some() { Some(b.to_array(*max_order)?) } else { None };
            if let (Some(path), Some(x)) = (out, &x) {
                write_array(path, x)?;
            }
            let verdict = match (&x, *check) {
                (Some(x), true) => Some(verify(x, b.t)?),
                _ => None,
            };
            let ok = verdict.as_ref().map_or(true, |r| r.lambda == Some(b.lambda));
            emit(
                json,
                json!({"name": b.name, "description": b.description, "v": b.v(), "t": b.t, "lambda": b.lambda,
                       "generators": gens, "rows": x.as_ref().map(PermArray::len),
                       "verified": verdict.as_ref().map(|r| r.lambda == Some(b.lambda))}),
                || {
                    let mut s = format!("{}: {} (v={}, t={}, λ={})", b.name, b.description, b.v(), b.t, b.lambda);
                    for g in gens.iter().flatten() {
                        s.push_str(&format!("\n  {g}"));
                    }
                    if let (Some(x), Some(r)) = (&x, &verdict) {
                        s.push('\n');
                        s.push_str(&match r.lambda {
                            Some(l) => format!("PSCA({},{},{l})", x.v(), b.t),
                            None => "not a PSCA".to_string(),
                        });
                    }
                    s
                },
            );
            Ok(if ok { Verdict::Yes } else { Verdict::No })
        }
    }
}
