//! The `risr` command line.
//!
//! Exit status: 0 yes/valid, 1 no/invalid, 2 usage or input error,
//! 3 resource limit, 4 internal consistency failure.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use super::{
    export_dot, instance_to_document, parse_document, parse_graph, parse_instance, parse_sequence, reduce_paths,
    sequence_to_document, to_document, write_atomic, Artifact, InstanceFile, MapFile, PathInstanceFile,
};
use crate::engine::{
    adjacent_under, enumerate_d_regular_sets_with, oracle_reachable_with, validate_sequence, Decision, Limits,
    ReconfigSequence, Rule, Solver,
};
use crate::error::{Error, Result};
use crate::fixtures;
use crate::graph::recognize;
use crate::reductions::{blowup_reduce, pendant_reduce, SprMode};
use crate::sketch::{
    blowup_width_bound, exact_bandwidth, lift_ordering, ordering_width, sketch_of_reduction, spr_width_bound,
    ReductionRef,
};

#[derive(Parser, Debug)]
#[command(name = "risr", version, about = "Reconfiguration of regular induced subgraphs")]
struct Cli {
    /// Maximum number of states the solver may visit.
    #[arg(long, global = true, env = "RISR_LIMIT_STATES")]
    limit_states: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide reachability by breadth-first search.
    Solve {
        file: PathBuf,
        /// Write the witness sequence here instead of printing it.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Skip the polynomial shortcuts.
        #[arg(long)]
        no_fast_paths: bool,
    },
    /// Decide reachability by building the full move graph.
    Oracle {
        file: PathBuf,
        /// Largest graph the oracle accepts.
        #[arg(long, default_value_t = Limits::default().oracle_max_vertices)]
        max_vertices: usize,
    },
    /// Check a sequence against an instance.
    Validate { file: PathBuf, seq: PathBuf },
    /// List the d-regular sets of one size.
    Enumerate {
        file: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Report graph classes with certificates.
    Recognize { file: PathBuf },
    /// Build a reduced instance and its map file.
    Reduce {
        kind: ReduceKind,
        file: PathBuf,
        #[arg(long)]
        d: Option<usize>,
        /// Output prefix; writes PREFIX.inst and PREFIX.map.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Map a source-side sequence onto the reduced instance.
    Lift {
        map: PathBuf,
        seq: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Map a reduced-side sequence back to the source problem.
    Project {
        map: PathBuf,
        seq: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact bandwidth with an optimal ordering.
    Bandwidth { file: PathBuf },
    /// Verify the sketch induced by a reduction and its width bounds.
    SketchCheck { file: PathBuf, map: PathBuf },
    /// Run the eight-vertex example checks.
    Selftest,
    /// Graphviz export, one frame per set when a sequence is given.
    Dot {
        file: PathBuf,
        seq: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ReduceKind {
    Blowup,
    Spr,
    SprTs,
    Pendant,
}

/// Runs one invocation; returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match execute(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::invalid(format!("{}: {e}", path.display())))
}

/// Attaches the file name to parse errors.
fn in_file<T>(path: &Path, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        Error::Syntax { line, column, message } => Error::Syntax {
            line,
            column,
            message: format!("{}: {message}", path.display()),
        },
        other => other,
    })
}

fn emit(out: &mut dyn Write, dest: Option<&Path>, text: &str) -> Result<()> {
    match dest {
        Some(p) => write_atomic(p, text),
        None => Ok(out.write_all(text.as_bytes())?),
    }
}

fn report_decision(out: &mut dyn Write, dec: &Decision, dest: Option<&Path>) -> Result<i32> {
    match &dec.witness {
        Some(w) => {
            writeln!(out, "reachable: {} moves, {} states explored", w.moves(), dec.explored)?;
            emit(out, dest, &sequence_to_document(w))?;
            Ok(0)
        }
        None => {
            writeln!(out, "unreachable: {} states explored", dec.explored)?;
            Ok(1)
        }
    }
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<i32> {
    let mut limits = Limits::default();
    if let Some(n) = cli.limit_states {
        limits = limits.with_max_states(n);
    }
    match cli.command {
        Command::Solve {
            file,
            out: dest,
            no_fast_paths,
        } => {
            let inst = in_file(&file, parse_instance(&read(&file)?))?;
            let solver = Solver {
                limits,
                fast_paths: !no_fast_paths,
            };
            report_decision(out, &solver.solve(&inst)?, dest.as_deref())
        }
        Command::Oracle { file, max_vertices } => {
            let inst = in_file(&file, parse_instance(&read(&file)?))?;
            let dec = oracle_reachable_with(&inst, &limits.with_oracle_vertices(max_vertices))?;
            report_decision(out, &dec, None)
        }
        Command::Validate { file, seq } => {
            let inst = in_file(&file, parse_instance(&read(&file)?))?;
            let seq = in_file(&seq, parse_sequence(&read(&seq)?))?;
            let verdict = validate_sequence(&inst, &seq);
            match &verdict.violation {
                None => writeln!(out, "valid: {} moves", seq.moves())?,
                Some(v) => writeln!(out, "invalid: {v}")?,
            }
            if let Some(c) = verdict.all_connected {
                writeln!(out, "all sets connected: {c}")?;
            }
            Ok(if verdict.is_ok() { 0 } else { 1 })
        }
        Command::Enumerate { file, k } => {
            let inst = in_file(&file, parse_instance(&read(&file)?))?;
            let sets = enumerate_d_regular_sets_with(inst.graph(), inst.d(), k, &limits)?;
            writeln!(out, "{} sets", sets.len())?;
            for s in &sets {
                writeln!(out, "{}", serde_json::to_string(s.as_slice()).expect("plain data"))?;
            }
            Ok(if sets.is_empty() { 1 } else { 0 })
        }
        Command::Recognize { file } => {
            let g = in_file(&file, parse_graph(&read(&file)?))?;
            out.write_all(to_document(&recognize(&g)).as_bytes())?;
            Ok(0)
        }
        Command::Reduce {
            kind,
            file,
            d,
            out: prefix,
        } => {
            let text = read(&file)?;
            let art = match kind {
                ReduceKind::Blowup | ReduceKind::Pendant => {
                    let src: InstanceFile = in_file(&file, parse_document(&text))?;
                    if src.d != 0 || src.rule != Rule::TS {
                        return Err(Error::invalid(
                            "source must be an independent set instance (d = 0, rule TS)",
                        ));
                    }
                    let inst = src.into_instance()?;
                    if kind == ReduceKind::Blowup {
                        Artifact::Blowup(blowup_reduce(
                            inst.graph(),
                            inst.source(),
                            inst.target(),
                            d.unwrap_or(1),
                        )?)
                    } else {
                        if d.is_some_and(|d| d != 1) {
                            return Err(Error::invalid("the pendant reduction always produces d = 1"));
                        }
                        Artifact::Pendant(pendant_reduce(inst.graph(), inst.source(), inst.target())?)
                    }
                }
                ReduceKind::Spr | ReduceKind::SprTs => {
                    let src: PathInstanceFile = in_file(&file, parse_document(&text))?;
                    let mode = if kind == ReduceKind::Spr {
                        SprMode::TjBipartite
                    } else {
                        SprMode::TsCliqueLayers
                    };
                    reduce_paths(&src, d.unwrap_or(2), mode)?
                }
            };
            let prefix = prefix.unwrap_or_else(|| {
                let stem = file
                    .file_stem()
                    .map(|s| s.to_string_lossy().into_owned())
                    .unwrap_or_default();
                file.with_file_name(format!("{stem}-{}", art.kind()))
            });
            let inst_path = with_suffix(&prefix, "inst");
            let map_path = with_suffix(&prefix, "map");
            write_atomic(&inst_path, &instance_to_document(art.instance()))?;
            write_atomic(&map_path, &to_document(&art.to_map()))?;
            writeln!(out, "instance: {}", inst_path.display())?;
            writeln!(out, "map: {}", map_path.display())?;
            Ok(0)
        }
        Command::Lift { map, seq, out: dest } => {
            let art = load_map(&map)?;
            let seq = in_file(&seq, parse_sequence(&read(&seq)?))?;
            let lifted = art.lift(&seq)?;
            emit(out, dest.as_deref(), &sequence_to_document(&lifted))?;
            Ok(0)
        }
        Command::Project { map, seq, out: dest } => {
            let art = load_map(&map)?;
            let seq = in_file(&seq, parse_sequence(&read(&seq)?))?;
            let projected = art.project(&seq)?;
            emit(out, dest.as_deref(), &sequence_to_document(&projected))?;
            Ok(0)
        }
        Command::Bandwidth { file } => {
            let g = in_file(&file, parse_graph(&read(&file)?))?;
            let (b, pi) = exact_bandwidth(&g)?;
            writeln!(out, "bandwidth: {b}")?;
            writeln!(
                out,
                "ordering: {}",
                serde_json::to_string(pi.order()).expect("plain data")
            )?;
            Ok(0)
        }
        Command::SketchCheck { file, map } => {
            let g = in_file(&file, parse_graph(&read(&file)?))?;
            let art = load_map(&map)?;
            if &g != art.instance().graph() {
                return Err(Error::invalid("graph does not match the reduction in the map file"));
            }
            sketch_check(out, &art)
        }
        Command::Selftest => selftest(out),
        Command::Dot { file, seq, out: dest } => {
            let g = in_file(&file, parse_graph(&read(&file)?))?;
            let seq = match seq {
                Some(p) => Some(in_file(&p, parse_sequence(&read(&p)?))?),
                None => None,
            };
            emit(out, dest.as_deref(), &export_dot(&g, seq.as_ref()))?;
            Ok(0)
        }
    }
}

fn with_suffix(prefix: &Path, ext: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_owned();
    s.push(".");
    s.push(ext);
    PathBuf::from(s)
}

fn load_map(path: &Path) -> Result<Artifact> {
    let map: MapFile = in_file(path, parse_document(&read(path)?))?;
    Artifact::from_map(&map)
}

fn sketch_check(out: &mut dyn Write, art: &Artifact) -> Result<i32> {
    let reduction = match art {
        Artifact::Blowup(a) => ReductionRef::Blowup(a),
        Artifact::Spr(a, _) => ReductionRef::Spr(a),
        Artifact::Pendant(_) => return Err(Error::invalid("the pendant reduction has no sketch")),
    };
    let s = sketch_of_reduction(reduction)?;
    let (b, pi) = exact_bandwidth(&s.small)?;
    let lifted = lift_ordering(&s, &pi)?;
    let width = ordering_width(&s.big, &lifted)?;
    writeln!(
        out,
        "sketch: t = {}, {} -> {} vertices",
        s.t,
        s.big.vertex_count(),
        s.small.vertex_count()
    )?;
    writeln!(out, "small graph bandwidth: {b}")?;
    writeln!(out, "lifted ordering width: {width} (bound t(b+1) = {})", s.t * (b + 1))?;
    let mut ok = width <= s.t * (b + 1);
    match reduction {
        ReductionRef::Blowup(a) => {
            let bound = blowup_width_bound(a.d(), b);
            writeln!(out, "blow-up bound (d+1)(b0+1) = {bound}")?;
            ok &= width <= bound;
        }
        ReductionRef::Spr(a) => {
            let layer = a.layout().max_layer_size();
            let bound = spr_width_bound(a.d(), layer);
            if s.small.vertex_count() <= 2 {
                writeln!(out, "clique-layer bound 2(2db+2(d-2)) = {bound} with b = {layer}")?;
                ok &= width <= bound;
            } else {
                writeln!(out, "cycle of {} blocks: bound t(b+1) applies", s.small.vertex_count())?;
            }
        }
    }
    writeln!(out, "{}", if ok { "ok" } else { "bound violated" })?;
    Ok(if ok { 0 } else { 1 })
}

fn selftest(out: &mut dyn Write) -> Result<i32> {
    let g = fixtures::eight_vertex_graph();
    let sets = fixtures::eight_vertex_sets();
    let tj = fixtures::eight_vertex_instance(Rule::TJ);
    let ts = fixtures::eight_vertex_instance(Rule::TS);
    let seq = fixtures::eight_vertex_sequence();
    let mut checks: Vec<(&str, bool)> = Vec::new();
    checks.push((
        "all six sets are 1-regular",
        sets.iter().all(|s| g.is_d_regular_set(s, 1).unwrap_or(false)),
    ));
    checks.push(("sequence is a TJ-sequence", validate_sequence(&tj, &seq).is_ok()));
    let slides: Vec<bool> = sets
        .windows(2)
        .map(|w| adjacent_under(&g, 1, Rule::TS, &w[0], &w[1]).unwrap_or(false))
        .collect();
    checks.push((
        "only U_2, U_3 are TS-adjacent",
        slides == [false, false, true, false, false],
    ));
    let solved = crate::engine::solve(&tj)?;
    checks.push((
        "solver finds 5 jumps",
        solved.witness.as_ref().map(ReconfigSequence::moves) == Some(5),
    ));
    checks.push(("TS instance is unreachable", !crate::engine::solve(&ts)?.reachable));
    let oracle = oracle_reachable_with(&tj, &Limits::default())?;
    checks.push(("oracle agrees under TJ", oracle.reachable));
    let mut ok = true;
    for (name, pass) in checks {
        writeln!(out, "{} {name}", if pass { "PASS" } else { "FAIL" })?;
        ok &= pass;
    }
    Ok(if ok { 0 } else { 1 })
}
