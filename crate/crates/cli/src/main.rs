use std::path::Path;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use qtilt::algebra::Algebra;
use qtilt::ar::enumerate_indecomposables;
use qtilt::config::Config;
use qtilt::corpus::{algebra_text, corpus, resolve_module, run_entries, CorpusEntry};
use qtilt::dsl::{parse_document, parse_spec};
use qtilt::homology::{inj_dim, proj_dim, HomDim};
use qtilt::module::Module;
use qtilt::opext::{check_extension, check_pd_lemma, emit, one_point_extension, Emission};
use qtilt::parts::{audit_analysis, members, trisection, Analysis, Check};
use qtilt::presentation::build_algebra;
use qtilt::tilting::{
    check_tilting, check_transfer, dedup_indecomposables, endomorphism_algebra, is_splitting, torsion_pair,
    verify_chain, ChainSpec, TiltKind,
};
use qtilt::{Error, Result};

#[derive(Parser)]
#[command(name = "qtilt", version, about = "Homological checks for bound quiver algebras over prime fields")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Override the field of every algebra read.
    #[arg(long, global = true)]
    field: Option<u32>,
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[arg(long, global = true)]
    max_modules: Option<usize>,
    #[arg(long, global = true)]
    max_dim: Option<usize>,
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    /// Graphviz output of the Auslander-Reiten quiver (indec).
    #[arg(long, global = true)]
    dot: bool,
}

#[derive(Args)]
struct Mn {
    #[arg(long, default_value_t = 1)]
    m: usize,
    #[arg(long, default_value_t = 1)]
    n: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Build an algebra and print its basis data.
    Build { algebra: String },
    /// Audit (m,n)-almost heredity.
    Audit {
        algebra: String,
        #[command(flatten)]
        mn: Mn,
    },
    /// List the indecomposable modules.
    Indec { algebra: String },
    /// Left and right parts and the trisection.
    Parts {
        algebra: String,
        #[command(flatten)]
        mn: Mn,
    },
    /// Projective and injective dimensions.
    Homdim {
        algebra: String,
        /// Module names joined by `+`, or a module file.
        #[arg(long)]
        module: Option<String>,
    },
    /// Check a (co)tilting module and its consequences.
    Tilt {
        algebra: String,
        #[arg(long)]
        module: String,
        #[arg(long)]
        cotilt: bool,
        #[command(flatten)]
        mn: Mn,
    },
    /// Verify a chain of (co)tilting steps given as JSON.
    Chain {
        spec: String,
        #[command(flatten)]
        mn: Mn,
    },
    /// One-point extension B[M] and its checks.
    Opext {
        algebra: String,
        #[arg(long)]
        module: String,
        /// Label of the new vertex.
        #[arg(long)]
        label: Option<String>,
        #[arg(long, default_value_t = 1)]
        m: usize,
        /// Print the extension as DSL (or structure constants as JSON).
        #[arg(long)]
        emit: bool,
    },
    /// Check the built-in examples.
    Corpus {
        #[arg(long)]
        filter: Option<String>,
        /// Read entries from a JSON file instead of the built-in corpus.
        #[arg(long)]
        file: Option<String>,
        /// Print the entries as JSON without running them.
        #[arg(long)]
        dump: bool,
    },
}

struct Ctx {
    cfg: Config,
    field: Option<u32>,
    json: bool,
    dot: bool,
}

impl Ctx {
    fn algebra(&self, arg: &str) -> Result<Arc<Algebra>> {
        let text = match algebra_text(arg) {
            Some(t) => t,
            None => std::fs::read_to_string(arg)
                .map_err(|e| Error::Input(format!("{arg}: not a corpus id and not readable ({e})")))?,
        };
        let mut spec = parse_spec(&text)?;
        if let Some(p) = self.field {
            spec.field = p;
        }
        build_algebra(&spec)
    }

    fn analysis(&self, arg: &str) -> Result<Analysis> {
        Analysis::new(&self.algebra(arg)?, &self.cfg)
    }

    /// A module file, or names resolved against the enumeration.
    fn module(&self, an: &Analysis, arg: &str) -> Result<Module> {
        if Path::new(arg).is_file() {
            let text = std::fs::read_to_string(arg).map_err(|e| Error::Input(format!("{arg}: {e}")))?;
            let doc = parse_document(&text)?;
            let spec = doc.modules.first().ok_or_else(|| Error::Input(format!("{arg}: no module block")))?;
            return Module::from_spec(an.alg(), spec);
        }
        resolve_module(an, arg)
    }

    fn print(&self, value: serde_json::Value, text: String) {
        if self.json {
            println!("{}", serde_json::to_string_pretty(&value).expect("json"));
        } else {
            print!("{text}");
        }
    }
}

fn check_lines(checks: &[Check]) -> String {
    let mut s = String::new();
    for c in checks {
        let v = serde_json::to_value(c.verdict).expect("verdict");
        s.push_str(&format!("{:<28} {}", c.name, v.as_str().unwrap_or("")));
        if !c.witnesses.is_empty() {
            s.push_str(&format!(" [{}]", c.witnesses.join(", ")));
        }
        if !c.detail.is_empty() {
            s.push_str(&format!("  {}", c.detail));
        }
        s.push('\n');
    }
    s
}

fn code(fail: bool) -> u8 {
    u8::from(fail)
}

fn dim(d: HomDim) -> String {
    d.to_string()
}

fn run(cli: Cli) -> Result<u8> {
    let g = cli.global;
    let mut cfg = Config::default();
    if let Some(s) = g.seed {
        cfg.seed = s;
    }
    if let Some(k) = g.max_modules {
        cfg.max_modules = k;
    }
    if let Some(k) = g.max_dim {
        cfg.max_dim = k;
    }
    let ctx = Ctx { cfg, field: g.field, json: g.json, dot: g.dot };
    let cfg = &ctx.cfg;
    match cli.command {
        Command::Build { algebra } => {
            let a = ctx.algebra(&algebra)?;
            let cartan = a.cartan();
            let mut text = format!("algebra {} over GF({})\ndim {}\nvertices {}\n", a.id(), a.field().p(), a.dim(), a.vertices().join(","));
            text.push_str("cartan\n");
            for row in &cartan {
                let r: Vec<String> = row.iter().map(|x| x.to_string()).collect();
                text.push_str(&format!("  {}\n", r.join(" ")));
            }
            let value = json!({
                "id": a.id(), "field": a.field().p(), "dim": a.dim(),
                "vertices": a.vertices(), "basis": a.labels(), "cartan": cartan,
            });
            ctx.print(value, text);
            Ok(0)
        }
        Command::Audit { algebra, mn } => {
            let an = ctx.analysis(&algebra)?;
            let report = audit_analysis(&an, mn.m, mn.n);
            let verdict = if report.is_almost_hereditary() { "almost hereditary" } else { "not almost hereditary" };
            let text = format!(
                "{} gl.dim {} ({},{}): {verdict}\n{}",
                an.alg().id(),
                an.gldim,
                mn.m,
                mn.n,
                check_lines(&report.checks)
            );
            let fail = !report.is_almost_hereditary() || !report.violations().is_empty();
            ctx.print(serde_json::to_value(&report).expect("json"), text);
            Ok(code(fail))
        }
        Command::Indec { algebra } => {
            let alg = ctx.algebra(&algebra)?;
            let inds = enumerate_indecomposables(&alg, cfg)?;
            inds.require_complete()?;
            if ctx.dot {
                print!("{}", inds.to_dot());
                return Ok(0);
            }
            let mut text = String::new();
            let mut rows = Vec::new();
            for x in &inds.items {
                let tau = x.tau.map(|t| inds.items[t].name.clone()).unwrap_or_else(|| "-".into());
                text.push_str(&format!("{:<24} {:<24} pd {:<3} id {:<3} tau {}\n", x.name, x.module.dimvec_string(), dim(x.pd), dim(x.id), tau));
                rows.push(json!({
                    "id": x.name, "dimvec": x.module.dims(), "pd": dim(x.pd), "injdim": dim(x.id), "tau": tau,
                }));
            }
            ctx.print(json!(rows), text);
            Ok(0)
        }
        Command::Parts { algebra, mn } => {
            let an = ctx.analysis(&algebra)?;
            let (l, r) = (an.part_l(mn.m), an.part_r(mn.n));
            let t = trisection(&an.graph, &l, &r);
            let names = |v: &[usize]| -> Vec<String> { v.iter().map(|&i| an.name(i)).collect() };
            let ln = names(&members(&l));
            let rn = names(&members(&r));
            let (a, b, c, o) = (names(&t.left_only), names(&t.both), names(&t.right_only), names(&t.outside));
            let cross: Vec<String> = t.cross_homs.iter().map(|&(i, j)| format!("{}->{}", an.name(i), an.name(j))).collect();
            let text = format!(
                "L^{}: {}\nR^{}: {}\nL\\R: {}\nL∩R: {}\nR\\L: {}\noutside: {}\ncross homs: {}\n",
                mn.m,
                ln.join(" "),
                mn.n,
                rn.join(" "),
                a.join(" "),
                b.join(" "),
                c.join(" "),
                o.join(" "),
                cross.join(" ")
            );
            let value = json!({
                "L": ln, "R": rn, "trisection": {"left_only": a, "both": b, "right_only": c, "outside": o},
                "cross_homs": cross,
            });
            ctx.print(value, text);
            Ok(0)
        }
        Command::Homdim { algebra, module } => match module {
            Some(mtext) => {
                let alg = ctx.algebra(&algebra)?;
                let inds = enumerate_indecomposables(&alg, cfg);
                let m = match inds.and_then(Analysis::from_indecs) {
                    Ok(an) => ctx.module(&an, &mtext)?,
                    Err(_) => return Err(Error::Input("module names need a complete enumeration".into())),
                };
                let (p, i) = (proj_dim(&m, cfg)?, inj_dim(&m, cfg)?);
                let text = format!("{} pd {} id {}\n", m.dimvec_string(), p, i);
                ctx.print(json!({"dimvec": m.dims(), "pd": dim(p), "injdim": dim(i)}), text);
                Ok(0)
            }
            None => {
                let alg = ctx.algebra(&algebra)?;
                let mut text = String::new();
                let mut rows = Vec::new();
                let mut gl = HomDim::Finite(0);
                for v in 0..alg.num_vertices() {
                    let s = Module::simple(&alg, v);
                    let (p, i) = (proj_dim(&s, cfg)?, inj_dim(&s, cfg)?);
                    gl = gl.max(p);
                    text.push_str(&format!("S{} pd {} id {}\n", alg.vertices()[v], p, i));
                    rows.push(json!({"vertex": alg.vertices()[v], "pd": dim(p), "injdim": dim(i)}));
                }
                text.push_str(&format!("gl.dim {gl}\n"));
                ctx.print(json!({"simples": rows, "gldim": dim(gl)}), text);
                Ok(0)
            }
        },
        Command::Tilt { algebra, module, cotilt, mn } => {
            let an = ctx.analysis(&algebra)?;
            let kind = if cotilt { TiltKind::Cotilt } else { TiltKind::Tilt };
            let t = dedup_indecomposables(&qtilt::tilting::basic_summands(&ctx.module(&an, &module)?, cfg)?);
            let verdict = check_tilting(&t, kind, cfg)?;
            let mut text = check_lines(&verdict.conditions);
            let mut value = json!({"verdict": verdict});
            if !verdict.pass {
                text.push_str("not a (co)tilting module\n");
                ctx.print(value, text);
                return Ok(1);
            }
            let pair = torsion_pair(&an, &t, kind);
            let names = |mask: &[bool]| -> Vec<String> { members(mask).into_iter().map(|i| an.name(i)).collect() };
            let split = is_splitting(&an, &t, kind);
            let end = endomorphism_algebra(&t, &format!("End({})", an.alg().id()))?;
            let b = Analysis::new(&end.alg, cfg)?;
            let transfer = check_transfer(&an, &t, kind, mn.m, mn.n, cfg)?;
            text.push_str(&format!(
                "torsion: {}\ntorsion-free: {}\nsplitting: {split}\nB: dim {}, gl.dim {} -> {}\n",
                names(&pair.torsion).join(" "),
                names(&pair.torsion_free).join(" "),
                end.alg.dim(),
                an.gldim,
                b.gldim
            ));
            text.push_str(&check_lines(&transfer.checks));
            value["torsion"] = json!(names(&pair.torsion));
            value["torsion_free"] = json!(names(&pair.torsion_free));
            value["splitting"] = json!(split);
            value["end"] = json!({"dim": end.alg.dim(), "gldim": dim(b.gldim)});
            value["transfer"] = serde_json::to_value(&transfer).expect("json");
            let fail = !transfer.violations().is_empty();
            ctx.print(value, text);
            Ok(code(fail))
        }
        Command::Chain { spec, mn } => {
            let text = std::fs::read_to_string(&spec).map_err(|e| Error::Input(format!("{spec}: {e}")))?;
            let chain: ChainSpec =
                serde_json::from_str(&text).map_err(|e| Error::Input(format!("{spec}: bad chain spec: {e}")))?;
            let base = ctx.algebra(&chain.base)?;
            let report = verify_chain(&base, &chain.steps, mn.m, mn.n, cfg)?;
            let mut out = check_lines(&report.base);
            for (k, s) in report.steps.iter().enumerate() {
                out.push_str(&format!("step {} ({:?}): gl.dim {} -> {}\n", k + 1, s.kind, s.gldim_before, s.gldim_after.map(dim).unwrap_or("-".into())));
                out.push_str(&check_lines(&s.verdict.conditions));
                out.push_str(&check_lines(&[s.splitting.clone(), s.stair.clone()]));
            }
            out.push_str(&check_lines(&[report.counts.clone(), report.conclusion.clone()]));
            out.push_str(&format!("certified: {}\n", report.certified()));
            let fail = !report.certified() || report.violation();
            ctx.print(serde_json::to_value(&report).expect("json"), out);
            Ok(code(fail))
        }
        Command::Opext { algebra, module, label, m, emit: do_emit } => {
            let b = ctx.analysis(&algebra)?;
            let mm = ctx.module(&b, &module)?;
            let ext = one_point_extension(&mm, label.as_deref(), &format!("{}_ext", b.alg().id()))?;
            if do_emit {
                match emit(&ext) {
                    Emission::Dsl(text) => print!("{text}"),
                    Emission::Json(v) => println!("{}", serde_json::to_string_pretty(&v).expect("json")),
                }
                return Ok(0);
            }
            let a = Analysis::new(&ext.alg, cfg)?;
            let report = check_extension(&ext, &a, &b, m, cfg)?;
            let mut checks = report.checks.clone();
            let lemma = if b.gldim.at_most(m + 1) && m >= 1 {
                let l = check_pd_lemma(&ext, &a, &b, m, cfg)?;
                checks.push(l.check.clone());
                Some(l)
            } else {
                checks.push(Check::skipped("pd-lemma", format!("gl.dim B = {} > m+1", b.gldim)));
                None
            };
            let text = format!(
                "B[M]: dim {}, gl.dim {} (B: {}, pd M = {})\n{}",
                ext.alg.dim(),
                a.gldim,
                b.gldim,
                report.pd_m,
                check_lines(&checks)
            );
            let fail = checks.iter().any(|c| c.failed());
            ctx.print(json!({"extension": report, "pd_lemma": lemma}), text);
            Ok(code(fail))
        }
        Command::Corpus { filter, file, dump } => {
            let mut entries = match file {
                Some(path) => {
                    let text = std::fs::read_to_string(&path).map_err(|e| Error::Input(format!("{path}: {e}")))?;
                    serde_json::from_str::<Vec<CorpusEntry>>(&text)
                        .map_err(|e| Error::Input(format!("{path}: bad corpus file: {e}")))?
                }
                None => corpus(),
            };
            if let Some(f) = &filter {
                entries.retain(|e| e.id.contains(f.as_str()));
            }
            if dump {
                println!("{}", serde_json::to_string_pretty(&entries).expect("json"));
                return Ok(0);
            }
            let report = run_entries(&entries, cfg);
            ctx.print(serde_json::to_value(&report).expect("json"), report.table());
            for f in report.failures() {
                eprintln!("failed: {}/{}", f.entry, f.fact);
            }
            Ok(code(!report.passed()))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(c) => ExitCode::from(c),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
