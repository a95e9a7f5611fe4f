//! Command-line front end. [`run`] takes the arguments and output streams so
//! tests can drive it without spawning a process.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cpm_core::cycles::{cycle_census, MAX_CYCLE_LEN};
use cpm_core::graphs::{build_component, build_full, Attachment};
use cpm_core::isomorphisms::{decide_isomorphic, realize_certificate, IsoAnswer, Witness};
use cpm_core::permgroup::{automorphism_group, transitivity_report, SearchConfig};
use cpm_core::{classify, Params, SymKind};

use crate::census::{self, CensusOptions, ClassFilter, Empirical, RadiusFilter};
use crate::error::{CliError, Result};
use crate::formats;

#[derive(Parser, Debug)]
#[command(name = "cpm", version, about = "Construct, classify and census CPM graphs")]
struct Cli {
    /// Worker threads for the census (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Write the main output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
struct ParamArgs {
    #[arg(long)]
    m: u64,
    #[arg(long)]
    s: u64,
    #[arg(long)]
    n: u64,
    #[arg(long)]
    r: u64,
}

impl ParamArgs {
    fn params(self) -> Result<Params> {
        Ok(Params::new(self.m, self.s, self.n, self.r)?)
    }
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ClassArg {
    Hat,
    At,
    #[value(name = "2at")]
    TwoAt,
    All,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum RadiusArg {
    Odd,
    Even,
    All,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum CensusFormat {
    Jsonl,
    Table,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ExportFormat {
    Adjacency,
    Edges,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Symmetry type, stabilizer and |Aut| of one graph.
    Classify {
        #[command(flatten)]
        params: ParamArgs,
        /// Confirm by brute force when the graph has at most this many vertices.
        #[arg(long, default_value_t = 500)]
        verify_below: u64,
    },
    /// All graphs up to a vertex bound, one line per isomorphism class.
    Census {
        #[arg(long)]
        max_order: u64,
        #[arg(long, default_value_t = 2)]
        s_min: u64,
        #[arg(long, value_enum, default_value_t = ClassArg::All)]
        class: ClassArg,
        #[arg(long, value_enum, default_value_t = RadiusArg::All)]
        radius: RadiusArg,
        #[arg(long, default_value_t = 500)]
        verify_below: u64,
        #[arg(long, value_enum, default_value_t = CensusFormat::Table)]
        format: CensusFormat,
        /// List every member of each class, not just its first tuple.
        #[arg(long)]
        members: bool,
        /// Sweep every valid r instead of normal forms only.
        #[arg(long)]
        all_r: bool,
    },
    /// Decide whether two graphs are isomorphic.
    Iso {
        /// `m,s,n,r`
        #[arg(long)]
        left: Params,
        #[arg(long)]
        right: Params,
        /// Also run the computational check when both graphs are this small.
        #[arg(long, default_value_t = 0)]
        verify_below: u64,
        /// Vertex bound for the exhaustive search.
        #[arg(long, default_value_t = cpm_core::permgroup::DEFAULT_GUARD)]
        guard: usize,
        /// Write the vertex map of an isomorphism as JSON pairs.
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Cycles by trace, with counts through the anchors and the non-anchor at a vertex.
    Cycles {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, default_value_t = 8)]
        max_len: usize,
    },
    /// Write the graph as an adjacency list or an edge list.
    Export {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, value_enum, default_value_t = ExportFormat::Adjacency)]
        format: ExportFormat,
        /// The whole, possibly disconnected, graph instead of the component of ⟨0;0⟩.
        #[arg(long)]
        full: bool,
    },
}

/// Runs the CLI and returns the process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    match dispatch(cli, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<()> {
    let pool = {
        let mut b = rayon::ThreadPoolBuilder::new();
        if let Some(k) = cli.threads {
            b = b.num_threads(k);
        }
        b.build()?
    };
    let text = pool.install(|| execute(cli.command))?;
    match cli.out {
        Some(path) => std::fs::write(path, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn execute(command: Command) -> Result<String> {
    match command {
        Command::Classify { params, verify_below } => classify_cmd(params.params()?, verify_below),
        Command::Census {
            max_order,
            s_min,
            class,
            radius,
            verify_below,
            format,
            members,
            all_r,
        } => {
            let opts = CensusOptions {
                max_order,
                s_min,
                verify_below,
                all_r,
                ..CensusOptions::default()
            };
            let c = census::enumerate_census_with(&opts)?;
            let class = match class {
                ClassArg::Hat => ClassFilter::Hat,
                ClassArg::At => ClassFilter::At,
                ClassArg::TwoAt => ClassFilter::TwoAt,
                ClassArg::All => ClassFilter::All,
            };
            let radius = match radius {
                RadiusArg::Odd => RadiusFilter::Odd,
                RadiusArg::Even => RadiusFilter::Even,
                RadiusArg::All => RadiusFilter::All,
            };
            let rows = c.select(class, radius, members);
            Ok(match format {
                CensusFormat::Jsonl => formats::census_jsonl(&rows),
                CensusFormat::Table => {
                    let mut t = formats::census_table(&rows);
                    for pair in &c.open_pairs {
                        t.push_str(&format!(
                            "open case {} vs {}: {}\n",
                            pair.left,
                            pair.right,
                            empirical_text(&pair.empirical)
                        ));
                    }
                    t
                }
            })
        }
        Command::Iso {
            left,
            right,
            verify_below,
            guard,
            witness,
        } => iso_cmd(left, right, verify_below, guard, witness),
        Command::Cycles { params, max_len } => {
            if max_len > MAX_CYCLE_LEN {
                return Err(cpm_core::Error::CycleLengthCap(max_len).into());
            }
            let g = build_component(params.params()?)?;
            Ok(formats::cycle_table(&cycle_census(&g, max_len)?))
        }
        Command::Export { params, format, full } => {
            let p = params.params()?;
            let g = if full { build_full(p)? } else { build_component(p)? };
            Ok(match format {
                ExportFormat::Adjacency => formats::adjacency_text(&g),
                ExportFormat::Edges => formats::edge_list_text(&g),
            })
        }
    }
}

fn classify_cmd(p: Params, verify_below: u64) -> Result<String> {
    let c = classify(p)?;
    let mut text = format!(
        "CPM{p}: {}, stabilizer {}, |Aut| {}\n",
        c.kind.short_name(),
        c.stabilizer_order,
        c.predicted_aut_order
    );
    let attach = match p.attachment() {
        Attachment::Tight => "tight",
        Attachment::Loose => "loose",
    };
    text.push_str(&format!("normal form: {}\n", c.normalized));
    text.push_str(&format!("order: {}, radius: {} ({attach})\n", p.component_order(), p.radius()));
    text.push_str(&format!("generators: {}\n", c.witness_recipe.join(" ")));
    if p.component_order() <= verify_below {
        let g = build_component(p)?;
        let aut = automorphism_group(&g)?;
        let rep = transitivity_report(&aut, &g)?;
        let kind_ok = match c.kind {
            SymKind::HalfArcTransitive => rep.half_arc_transitive(),
            SymKind::TwoArcTransitive => rep.two_arc_transitive(),
            _ => rep.arc_transitive() && !rep.two_arc_transitive(),
        };
        if aut.order() != c.predicted_aut_order || !kind_ok {
            return Err(CliError::Mismatch {
                params: p,
                detail: format!("brute force found |Aut| {} (flags {rep:?})", aut.order()),
            });
        }
        text.push_str(&format!("brute force: |Aut| {} confirmed\n", aut.order()));
    }
    Ok(text)
}

fn empirical_text(e: &Empirical) -> String {
    match e {
        Empirical::Isomorphic => "isomorphic (search)".into(),
        Empirical::NotIsomorphic("exhaustive search") => "NOT isomorphic (search)".into(),
        Empirical::NotIsomorphic(_) => "NOT isomorphic (invariants)".into(),
        Empirical::Undecided => "undecided (guard exceeded)".into(),
    }
}

fn iso_cmd(a: Params, b: Params, verify_below: u64, guard: usize, witness: Option<PathBuf>) -> Result<String> {
    let v = decide_isomorphic(a, b)?;
    let theory = match v.answer {
        IsoAnswer::Isomorphic => "isomorphic (theory)",
        IsoAnswer::NotIsomorphic => "NOT isomorphic (theory)",
        IsoAnswer::UnknownOpenCase => "open-case (theory)",
    };
    let check = v.answer == IsoAnswer::UnknownOpenCase
        || (a.component_order() <= verify_below && b.component_order() <= verify_below);
    let cfg = SearchConfig {
        max_vertices: guard,
        ..SearchConfig::default()
    };
    let mut line = theory.to_string();
    if check {
        let e = census::fallback(a, b, &cfg)?;
        let contradiction = match v.answer {
            IsoAnswer::Isomorphic => matches!(e, Empirical::NotIsomorphic(_)),
            IsoAnswer::NotIsomorphic => e == Empirical::Isomorphic,
            IsoAnswer::UnknownOpenCase => false,
        };
        if contradiction {
            return Err(CliError::Mismatch {
                params: a,
                detail: format!("theory says {theory} for {b}, computation says {}", empirical_text(&e)),
            });
        }
        line.push_str("; ");
        line.push_str(&empirical_text(&e));
    }
    let mut text = format!("{line}\n");
    match &v.witness {
        Some(Witness::Certificate { left, right, bridge }) => {
            text.push_str(&format!("normal forms {left} and {right}, bridge {bridge:?}\n"));
            if let Some(path) = witness {
                let map = realize_certificate(a, b, *bridge)?;
                std::fs::write(path, formats::witness_json(&map))?;
            }
        }
        Some(Witness::Invariant(why)) => text.push_str(&format!("separated by {why}\n")),
        Some(Witness::Open(why)) => text.push_str(&format!("open: {why}\n")),
        Some(Witness::Map(_)) | None => {}
    }
    let (ga, gb) = (a.component_order(), b.component_order());
    if ga != gb {
        text.push_str(&format!("orders {ga} and {gb}\n"));
    }
    Ok(text)
}

