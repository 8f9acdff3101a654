//! Command-line front end: argument parsing, catalog caching and reports.
//!
//! Every command writes one report, as text or as a JSON document. Reports
//! contain no timing or other run-dependent data, so identical inputs give
//! byte-identical output.

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::artrans::{ArQuiver, Budget, Catalog, CatalogData, OrbitTable};
use crate::error::{Error, Result};
use crate::gencog::{self, GenCog, MDim, Workspace};
use crate::quiver::Quiver;
use crate::replicated::{LayeredJson, ReplicatedAlgebra};
use crate::verify::{self, SuiteParams};
use crate::window;

#[derive(Parser, Debug)]
#[command(name = "mrep", version, about = "Exact computations over m-replicated algebras of path algebras")]
pub struct Cli {
    #[command(flatten)]
    pub config: Config,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Config {
    /// Quiver file (text or JSON) or a built-in name: a1, a2, a2op, a3, a3mid, a3src, d4, kronecker.
    #[arg(long, global = true)]
    pub quiver: Option<String>,
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    pub m: u32,
    #[arg(long, global = true, default_value_t = 32003)]
    pub prime: u32,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Maximal number of catalog entries.
    #[arg(long, global = true, default_value_t = 10_000)]
    pub budget: usize,
    /// Per-vertex dimension bound of windows over representation-infinite bases.
    #[arg(long, global = true, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
    pub window: u32,
    /// Number of random generator-cogenerators in sampling suites.
    #[arg(long, global = true, default_value_t = 200)]
    pub samples: usize,
    #[arg(long, global = true)]
    pub json: bool,
    /// Directory for cached catalogs.
    #[arg(long, global = true)]
    pub cache: Option<PathBuf>,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// The quiver, the replicated algebra and its fingerprint.
    Info,
    /// The catalog of indecomposable modules.
    Indecs,
    /// Irreducible maps and meshes; `--dot` writes a Graphviz file.
    ArQuiver {
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// The τ-orbits of the catalog.
    TauOrbits,
    /// The strata Σ_k and their parts U_k inside the algebra.
    Strata {
        #[arg(long)]
        k: Option<usize>,
    },
    /// Global dimension of the replicated algebra.
    Gldim,
    /// Global dimension of End(M) for a generator-cogenerator file.
    GldimEnd {
        #[arg(long)]
        gencog: PathBuf,
    },
    /// One of the explicit generator-cogenerator constructions.
    Construct {
        #[command(subcommand)]
        which: Construction,
        /// Write the generator-cogenerator file here.
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
    /// Run a verification suite.
    Verify {
        suite: String,
        /// Target dimension for suites that take one.
        #[arg(long)]
        d: Option<usize>,
    },
}

#[derive(Subcommand, Debug, Clone)]
pub enum Construction {
    /// Generator-cogenerator with gl.dim End = d, built by removing part of a τ-orbit
    Thm32 {
        #[arg(long)]
        d: usize,
    },
    /// The stratified generator-cogenerator E_i
    #[command(name = "E", alias = "e")]
    E {
        #[arg(long)]
        i: usize,
    },
    /// Kronecker generator-cogenerator with gl.dim End = d
    Lem47 {
        #[arg(long)]
        d: usize,
    },
    /// Kronecker generator-cogenerator with infinite gl.dim End
    Lem48,
}

/// A generator-cogenerator on file: catalog ids for representation-finite
/// bases, inline modules otherwise.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenCogSpec {
    pub fingerprint: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ids: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modules: Option<Vec<LayeredJson>>,
    #[serde(default)]
    pub labels: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    fingerprint: String,
    catalog: CatalogData,
}

#[derive(Serialize)]
struct Report {
    command: String,
    inputs: Value,
    result: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    verdict: Option<String>,
}

/// Outcome of a command: the report and the exit code.
pub struct Output {
    pub text: String,
    pub code: i32,
}

pub fn resolve_quiver(spec: &str) -> Result<Quiver> {
    let path = Path::new(spec);
    if path.is_file() {
        let text = fs::read_to_string(path)?;
        return Quiver::parse(&text);
    }
    let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or(spec);
    Quiver::named(stem).map_err(|_| Error::input(format!("`{spec}` is neither a quiver file nor a built-in quiver")))
}

pub fn fingerprint(q: &Quiver, m: usize, p: u32) -> String {
    let digest = Sha256::digest(format!("{}\nm={m}\np={p}\n", q.canonical_text()).as_bytes());
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

struct Ctx {
    cfg: Config,
    quiver: Quiver,
    rep: Arc<ReplicatedAlgebra>,
    fp: String,
    warnings: Vec<String>,
}

impl Ctx {
    fn new(cfg: &Config) -> Result<Ctx> {
        let spec = cfg.quiver.as_deref().ok_or_else(|| Error::input("--quiver is required"))?;
        let quiver = resolve_quiver(spec)?;
        if cfg.prime < 2 {
            return Err(Error::input("--prime must be a prime"));
        }
        let m = cfg.m as usize;
        let rep = Arc::new(ReplicatedAlgebra::new(&quiver, m, cfg.prime)?);
        let fp = fingerprint(&quiver, m, cfg.prime);
        Ok(Ctx {
            cfg: cfg.clone(),
            quiver,
            rep,
            fp,
            warnings: Vec::new(),
        })
    }

    fn m(&self) -> usize {
        self.cfg.m as usize
    }

    fn budget(&self) -> Budget {
        Budget::entries(self.cfg.budget)
    }

    fn inputs(&self) -> Value {
        json!({
            "quiver": self.quiver.canonical_text(),
            "m": self.m(),
            "p": self.cfg.prime,
            "seed": self.cfg.seed,
            "fingerprint": self.fp,
        })
    }

    /// The full catalog, from the cache when a valid entry exists.
    fn catalog(&mut self) -> Result<Catalog> {
        if !self.quiver.is_dynkin() {
            return Err(Error::Budget(
                "the base quiver is representation-infinite, so no catalog budget suffices".into(),
            ));
        }
        let path = self.cfg.cache.as_ref().map(|d| d.join(format!("{}.json", self.fp)));
        if let Some(path) = &path {
            if path.exists() {
                match self.load_cache(path) {
                    Ok(cat) => return Ok(cat),
                    Err(e) => self.warnings.push(format!("ignoring cache {}: {e}", path.display())),
                }
            }
        }
        let cat = Catalog::build(self.rep.clone(), self.budget())?;
        if let Some(path) = &path {
            let file = CacheFile {
                fingerprint: self.fp.clone(),
                catalog: cat.to_data(),
            };
            let text = serde_json::to_string(&file).map_err(|e| Error::Io(e.to_string()))?;
            if let Some(dir) = path.parent() {
                fs::create_dir_all(dir)?;
            }
            let tmp = path.with_extension("tmp");
            fs::write(&tmp, text)?;
            fs::rename(&tmp, path)?;
        }
        Ok(cat)
    }

    fn load_cache(&self, path: &Path) -> Result<Catalog> {
        let text = fs::read_to_string(path)?;
        let file: CacheFile = serde_json::from_str(&text).map_err(|e| Error::input(e.to_string()))?;
        if file.fingerprint != self.fp {
            return Err(Error::input("stale fingerprint"));
        }
        Catalog::from_data(self.rep.clone(), file.catalog)
    }

    fn window(&self, ws: &mut Workspace) -> Result<window::Window> {
        window::replicated_window(ws, self.cfg.window as usize, &self.budget())
    }

    fn spec_of(&self, ws: &Workspace, m: &GenCog, with_ids: bool) -> GenCogSpec {
        let ids = m.summands();
        GenCogSpec {
            fingerprint: self.fp.clone(),
            ids: with_ids.then(|| ids.to_vec()),
            modules: (!with_ids).then(|| ids.iter().map(|&i| self.rep.to_json(ws.module(i))).collect()),
            labels: ids.iter().map(|&i| ws.label(i)).collect(),
        }
    }
}

/// Parse arguments and run; returns the process exit code.
pub fn main() -> i32 {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            out.code
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

pub fn run(cli: &Cli) -> Result<Output> {
    let mut ctx = Ctx::new(&cli.config)?;
    let (report, text, code) = dispatch(&mut ctx, &cli.command)?;
    for w in &ctx.warnings {
        eprintln!("warning: {w}");
    }
    let text = if ctx.cfg.json {
        let mut s = serde_json::to_string_pretty(&report).map_err(|e| Error::Io(e.to_string()))?;
        s.push('\n');
        s
    } else {
        text
    };
    Ok(Output { text, code })
}

fn report(ctx: &Ctx, command: &str, result: Value, verdict: Option<String>) -> Report {
    Report {
        command: command.to_string(),
        inputs: ctx.inputs(),
        result,
        verdict,
    }
}

fn dispatch(ctx: &mut Ctx, cmd: &Command) -> Result<(Report, String, i32)> {
    match cmd {
        Command::Info => {
            let rep = ctx.rep.clone();
            let gl = rep.global_dimension()?;
            let finite = ctx.quiver.is_dynkin();
            let result = json!({
                "vertices": ctx.quiver.vertices(),
                "arrows": ctx.quiver.arrows().iter().map(|a| json!({"name": a.name, "source": ctx.quiver.vertex_name(a.source), "target": ctx.quiver.vertex_name(a.target)})).collect::<Vec<_>>(),
                "representation_finite": finite,
                "algebra_vertices": rep.alg().num_vertices(),
                "algebra_dimension": rep.dim(),
                "global_dimension": gl,
            });
            let text = format!(
                "quiver: {} vertices, {} arrow(s) ({})\nA^({}) over F_{}: {} vertices, dimension {}\nglobal dimension: {gl}\nfingerprint: {}\n",
                ctx.quiver.num_vertices(),
                ctx.quiver.arrows().len(),
                if finite { "representation-finite" } else { "representation-infinite" },
                ctx.m(),
                ctx.cfg.prime,
                rep.alg().num_vertices(),
                rep.dim(),
                ctx.fp
            );
            Ok((report(ctx, "info", result, None), text, 0))
        }
        Command::Indecs => {
            let cat = ctx.catalog()?;
            let mut text = format!("{} indecomposables\n", cat.len());
            let mut rows = Vec::new();
            for i in cat.ids() {
                let f = cat.flags(i);
                let kind = match (f.projective, f.injective) {
                    (true, true) => "PI",
                    (true, false) => "P",
                    (false, true) => "I",
                    _ => "",
                };
                text.push_str(&format!("{i:>4}  {:<24} {kind}\n", cat.label(i)));
                rows.push(json!({
                    "id": i,
                    "label": cat.label(i),
                    "dims": cat.module(i).dims(),
                    "projective": f.projective,
                    "injective": f.injective,
                    "layer0": f.layer0,
                    "tau": cat.tau(i),
                    "tau_inverse": cat.tau_inv(i),
                }));
            }
            Ok((report(ctx, "indecs", json!({"count": cat.len(), "modules": rows}), None), text, 0))
        }
        Command::ArQuiver { dot } => {
            let cat = ctx.catalog()?;
            let ar = ArQuiver::build(&cat);
            if let Some(path) = dot {
                fs::write(path, ar.to_dot(&cat))?;
            }
            let mut text = format!("{} vertices, {} arrows, {} meshes\n", cat.len(), ar.arrows.len(), ar.meshes.len());
            for &(a, b, mult) in &ar.arrows {
                let times = if mult > 1 { format!(" x{mult}") } else { String::new() };
                text.push_str(&format!("{a} {} -> {b} {}{times}\n", cat.label(a), cat.label(b)));
            }
            let result = json!({
                "arrows": ar.arrows.iter().map(|&(a, b, k)| json!({"from": a, "to": b, "multiplicity": k})).collect::<Vec<_>>(),
                "meshes": ar.meshes,
                "mesh_violations": ar.mesh_violations(&cat),
            });
            Ok((report(ctx, "ar-quiver", result, None), text, 0))
        }
        Command::TauOrbits => {
            let cat = ctx.catalog()?;
            let table = OrbitTable::build(&cat);
            let mut text = format!(
                "{} orbits, maximal cardinality {}\n",
                table.orbits.len(),
                table.max_cardinality()
            );
            for o in &table.orbits {
                let labels: Vec<&str> = o.iter().map(|&i| cat.label(i)).collect();
                text.push_str(&format!("[{}] {}\n", o.len(), labels.join(" -> ")));
            }
            Ok((report(ctx, "tau-orbits", table.to_json(&cat), None), text, 0))
        }
        Command::Strata { k } => {
            let rep = ctx.rep.clone();
            let ks: Vec<usize> = match k {
                Some(k) => vec![*k],
                None => (0..=2 * ctx.m() + 1).collect(),
            };
            let mut text = String::new();
            let mut rows = Vec::new();
            for k in ks {
                let s = rep.sigma_stratum(k)?;
                let sigma: Vec<String> = s.members.iter().map(|x| s.window.format_dims(x)).collect();
                let u: Vec<String> = rep.u_stratum(k)?.iter().map(|x| rep.format_dims(x)).collect();
                text.push_str(&format!("Σ_{k}: {}\nU_{k}: {}\n", sigma.join(" "), u.join(" ")));
                rows.push(json!({"k": k, "window": s.window.m(), "sigma": sigma, "u": u}));
            }
            Ok((report(ctx, "strata", json!({"strata": rows}), None), text, 0))
        }
        Command::Gldim => {
            let gl = ctx.rep.global_dimension()?;
            Ok((report(ctx, "gldim", json!({"global_dimension": gl}), None), format!("{gl}\n"), 0))
        }
        Command::GldimEnd { gencog } => gldim_end(ctx, gencog),
        Command::Construct { which, out } => construct(ctx, which, out.as_deref()),
        Command::Verify { suite, d } => {
            let mut params = SuiteParams::new(ctx.quiver.clone(), ctx.m(), ctx.cfg.prime);
            params.seed = ctx.cfg.seed;
            params.window = ctx.cfg.window as usize;
            params.budget = ctx.budget();
            params.samples = ctx.cfg.samples;
            params.d = *d;
            let r = verify::run(suite, &params)?;
            let verdict = if r.passed { "pass" } else { "fail" };
            let mut text = format!(
                "{}: {verdict} ({} checks{})\n{}\n",
                r.suite,
                r.checks,
                if r.window_verified { ", upper bounds window-verified" } else { "" },
                serde_json::to_string_pretty(&r.summary).unwrap_or_default()
            );
            for c in &r.counterexamples {
                text.push_str(&format!("counterexample: {c}\n"));
            }
            let code = if r.passed { 0 } else { 1 };
            let result = serde_json::to_value(&r).map_err(|e| Error::Io(e.to_string()))?;
            Ok((report(ctx, "verify", result, Some(verdict.into())), text, code))
        }
    }
}

fn read_spec(path: &Path) -> Result<GenCogSpec> {
    let text = fs::read_to_string(path)?;
    serde_json::from_str(&text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

fn gldim_end(ctx: &mut Ctx, path: &Path) -> Result<(Report, String, i32)> {
    let spec = read_spec(path)?;
    if spec.fingerprint != ctx.fp {
        return Err(Error::input("generator-cogenerator file belongs to a different algebra"));
    }
    if ctx.quiver.is_dynkin() {
        let cat = ctx.catalog()?;
        let mut ws = Workspace::from_catalog(&cat);
        let ids = match (&spec.ids, &spec.modules) {
            (Some(ids), _) => {
                if let Some(&bad) = ids.iter().find(|&&i| i >= cat.len()) {
                    return Err(Error::input(format!("catalog id {bad} out of range")));
                }
                ids.clone()
            }
            (None, Some(mods)) => register(ctx, &mut ws, mods)?,
            (None, None) => return Err(Error::input("file lists neither ids nor modules")),
        };
        let m = GenCog::new(&mut ws, ids)?;
        m.require()?;
        let value = ws.gldim_end_resolved(&m)?;
        let raw = ws.gldim_end(&m)?;
        let result = json!({
            "summands": m.len(),
            "gldim": value.to_string(),
            "witness": raw.witness.map(|x| ws.label(x)),
        });
        return Ok((report(ctx, "gldim-end", result, None), format!("{value}\n"), 0));
    }
    let mut ws = Workspace::new(ctx.rep.clone(), ctx.cfg.seed);
    let mods = spec
        .modules
        .as_ref()
        .ok_or_else(|| Error::input("representation-infinite bases need inline modules"))?;
    let ids = register(ctx, &mut ws, mods)?;
    let m = GenCog::new(&mut ws, ids)?;
    m.require()?;
    let w = ctx.window(&mut ws)?;
    let r = ws.gldim_end_windowed(&m, &w.ids)?;
    let upper = r.upper_on_window.map_or("undecided".to_string(), |u| u.to_string());
    let text = format!(
        "lower bound {} (witness {}), upper bound on the window {upper} ({} modules, B = {}, p = {})\n",
        r.lower,
        r.lower_witness.map_or("-".into(), |x| ws.label(x)),
        w.ids.len(),
        w.bound,
        w.p
    );
    let result = json!({
        "summands": m.len(),
        "lower": r.lower.to_string(),
        "lower_witness": r.lower_witness.map(|x| ws.label(x)),
        "upper_on_window": r.upper_on_window,
        "window": {"bound": w.bound, "p": w.p, "modules": w.ids.len()},
        "window_verified": true,
    });
    Ok((report(ctx, "gldim-end", result, None), text, 0))
}

fn register(ctx: &Ctx, ws: &mut Workspace, mods: &[LayeredJson]) -> Result<Vec<usize>> {
    let mut ids = Vec::new();
    for j in mods {
        let x = ctx.rep.from_json(j)?;
        let parts = ws.register_all(&x)?;
        if parts.len() != 1 {
            return Err(Error::input("generator-cogenerator summands must be indecomposable"));
        }
        ids.extend(parts);
    }
    Ok(ids)
}

fn construct(ctx: &mut Ctx, which: &Construction, out: Option<&Path>) -> Result<(Report, String, i32)> {
    let finite = ctx.quiver.is_dynkin();
    let (mut ws, cat) = if finite {
        let cat = ctx.catalog()?;
        (Workspace::from_catalog(&cat), Some(cat))
    } else {
        (Workspace::new(ctx.rep.clone(), ctx.cfg.seed), None)
    };
    let mut extra = serde_json::Map::new();
    let (name, m) = match which {
        Construction::Thm32 { d } => {
            let cat = cat.as_ref().ok_or_else(|| Error::contract("thm32 needs a representation-finite base"))?;
            let c = gencog::construct_thm32(&mut ws, cat, *d)?;
            extra.insert("z".into(), json!(cat.label(c.z)));
            extra.insert("removed".into(), json!(c.removed.iter().map(|&i| cat.label(i)).collect::<Vec<_>>()));
            ("thm32", c.gencog)
        }
        Construction::E { i } => ("E", gencog::construct_e(&mut ws, *i)?),
        Construction::Lem47 { d } => {
            let c = gencog::construct_lem47(&mut ws, *d)?;
            extra.insert("z".into(), json!(ws.label(c.z)));
            extra.insert("n".into(), json!(ws.label(c.n)));
            extra.insert("y".into(), json!(c.y.iter().map(|&i| ws.label(i)).collect::<Vec<_>>()));
            ("lem47", c.gencog)
        }
        Construction::Lem48 => {
            let c = gencog::construct_lem48(&mut ws, (ctx.cfg.window as usize).min(2))?;
            extra.insert("n".into(), json!(ws.label(c.n)));
            extra.insert("n_prime".into(), json!(ws.label(c.n_prime)));
            let r = ws.m_dimension(&c.gencog, c.n, 16)?;
            extra.insert("mdim_n".into(), json!(format!("{:?}", r.value)));
            extra.insert("cycle".into(), json!(r.cycle));
            ("lem48", c.gencog)
        }
    };
    let gl = if finite {
        ws.gldim_end_resolved(&m)?.to_string()
    } else if matches!(which, Construction::Lem48) {
        if extra.get("mdim_n") == Some(&json!(format!("{:?}", MDim::Infinite))) {
            "∞".to_string()
        } else {
            "undecided".to_string()
        }
    } else {
        let w = ctx.window(&mut ws)?;
        let r = ws.gldim_end_windowed(&m, &w.ids)?;
        extra.insert("lower".into(), json!(r.lower.to_string()));
        extra.insert("upper_on_window".into(), json!(r.upper_on_window));
        match r.upper_on_window {
            Some(u) if r.lower == gencog::GlDim::Finite(u) => format!("{u} (window-verified)"),
            _ => format!("≥ {}", r.lower),
        }
    };
    let spec = ctx.spec_of(&ws, &m, finite);
    if let Some(path) = out {
        let text = serde_json::to_string_pretty(&spec).map_err(|e| Error::Io(e.to_string()))?;
        fs::write(path, text + "\n")?;
    }
    let mut text = format!("{name}: {} summands, gl.dim End = {gl}\n", m.len());
    for (k, v) in &extra {
        text.push_str(&format!("{k}: {v}\n"));
    }
    text.push_str(&format!("summands: {}\n", spec.labels.join(" ")));
    let mut result = json!({"construction": name, "summands": m.len(), "gldim": gl, "gencog": spec});
    if let Value::Object(o) = &mut result {
        o.extend(extra);
    }
    Ok((report(ctx, "construct", result, None), text, 0))
}
