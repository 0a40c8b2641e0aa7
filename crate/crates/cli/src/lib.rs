//! Command line front end: load definition files, run one operation, report.

pub mod report;

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use colorhopf::actions::{smash_product, validate_module_action, ModuleAction, SplitExtension};
use colorhopf::commutators::{
    commute_in_quotient, commutator_subalgebra, hall_check, huq_commute, nilpotency, zassenhaus_verify,
};
use colorhopf::format::{self, Document, Loaded, Morphism};
use colorhopf::simplicial::{
    moore_complex, moore_length, semidirect_decomposition_check, simplicial_to_xmod, validate_simplicial,
    xmod_to_simplicial_to, SimplicialHopf,
};
use colorhopf::sub::{hopf_kernel, is_normal, quotient_by_normal, HopfSubalgebra};
use colorhopf::xmod::{
    graph_roundtrip, is_multiplicative, multiplicativity_witness, rmg_to_xmod, validate_crossed_module, validate_graph,
    xmod_roundtrip, xmod_to_rmg, CrossedModule,
};
use colorhopf::{zoo, Check, ColorHopfAlgebra, Error, Field, Hopf, Vector, Witness};

pub use report::Report;

#[derive(Parser, Debug, Clone)]
#[command(name = "colorhopf", version, about = "Exact checks on cocommutative color Hopf algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub verb: Verb,
    /// rational or gf:p; overrides the field named in input files
    #[arg(long, global = true)]
    pub field: Option<String>,
    /// simplicial truncation level
    #[arg(long, global = true, default_value_t = 3)]
    pub level: usize,
    /// nilpotency search bound
    #[arg(long, global = true, default_value_t = 16)]
    pub bound: usize,
    /// where to write the constructed object (a directory for zoo-export)
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = OutFormat::Text)]
    pub format: OutFormat,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutFormat {
    Text,
    Structured,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Verb {
    /// Hopf axioms of every algebra in the file
    Verify { file: PathBuf },
    /// Hopf kernel of a morphism
    Kernel { file: PathBuf },
    /// A/A·N⁺ for the Hopf subalgebra N generated by basis labels
    Quotient {
        file: PathBuf,
        /// comma-separated basis labels
        #[arg(long)]
        gens: String,
    },
    /// Huq commutator [X,Y]; X and Y default to the whole algebra
    Commutator {
        file: PathBuf,
        /// comma-separated basis labels generating X
        #[arg(long)]
        x: Option<String>,
        /// comma-separated basis labels generating Y
        #[arg(long)]
        y: Option<String>,
    },
    /// The four commuting conditions for X and Y
    Huq {
        file: PathBuf,
        /// comma-separated basis labels generating X
        #[arg(long)]
        x: Option<String>,
        /// comma-separated basis labels generating Y
        #[arg(long)]
        y: Option<String>,
    },
    /// Lower central series and class
    Nilpotency { file: PathBuf },
    /// Hall's criterion for a morphism p: E → B and N ⊆ E (default N = E)
    Hall {
        file: PathBuf,
        /// comma-separated basis labels generating N
        #[arg(long)]
        n: Option<String>,
    },
    /// The three Zassenhaus quotients and their induced maps
    Zassenhaus {
        file: PathBuf,
        /// generators of U
        #[arg(long)]
        u: String,
        /// generators of V
        #[arg(long)]
        v: String,
        /// generators of K
        #[arg(long)]
        k: String,
        /// generators of L
        #[arg(long)]
        l: String,
    },
    /// Smash product of an action (or of a crossed module's action)
    Smash { file: PathBuf },
    /// Action laws, d a Hopf morphism, (cm1) and (cm2)
    XmodCheck { file: PathBuf },
    /// The reflexive multiplicative graph H⋊A ⇉ A of a crossed module
    XmodToGraph { file: PathBuf },
    /// The crossed module Hker(p) → A of a multiplicative graph
    GraphToXmod { file: PathBuf },
    /// Simplicial object of a crossed module up to --level
    XmodToSimplicial { file: PathBuf },
    /// Moore complex of a simplicial file, or of a crossed module at --level
    Moore { file: PathBuf },
    /// H₁ ≅ M₁⋊M₀ and H₂ ≅ (M₂⋊M₁)⋊(M₁⋊M₀) for a simplicial file or a crossed module
    Decompose { file: PathBuf },
    /// Write the corpus as definition files into --out
    ZooExport,
}

impl Verb {
    pub fn name(&self) -> &'static str {
        match self {
            Verb::Verify { .. } => "verify",
            Verb::Kernel { .. } => "kernel",
            Verb::Quotient { .. } => "quotient",
            Verb::Commutator { .. } => "commutator",
            Verb::Huq { .. } => "huq",
            Verb::Nilpotency { .. } => "nilpotency",
            Verb::Hall { .. } => "hall",
            Verb::Zassenhaus { .. } => "zassenhaus",
            Verb::Smash { .. } => "smash",
            Verb::XmodCheck { .. } => "xmod-check",
            Verb::XmodToGraph { .. } => "xmod-to-graph",
            Verb::GraphToXmod { .. } => "graph-to-xmod",
            Verb::XmodToSimplicial { .. } => "xmod-to-simplicial",
            Verb::Moore { .. } => "moore",
            Verb::Decompose { .. } => "decompose",
            Verb::ZooExport => "zoo-export",
        }
    }
}

/// Something a verb built, to be written with --out.
pub enum Artifact {
    Document(Document),
    Files(Vec<(String, Document)>),
}

pub struct Outcome {
    /// 0 all checks pass, 1 a check failed, 2 the input did not parse
    pub code: i32,
    pub report: Report,
    pub artifact: Option<Artifact>,
}

impl Cli {
    /// Verb, inputs and the options that affect the result.
    pub fn echo(&self) -> String {
        let mut parts = vec![self.verb.name().to_string()];
        let mut opt = |k: &str, v: &Option<String>| {
            if let Some(v) = v {
                parts.push(format!("--{k} {v}"));
            }
        };
        match &self.verb {
            Verb::Quotient { gens, .. } => opt("gens", &Some(gens.clone())),
            Verb::Commutator { x, y, .. } | Verb::Huq { x, y, .. } => {
                opt("x", x);
                opt("y", y);
            }
            Verb::Hall { n, .. } => opt("n", n),
            Verb::Zassenhaus { u, v, k, l, .. } => {
                for (key, val) in [("u", u), ("v", v), ("k", k), ("l", l)] {
                    opt(key, &Some(val.clone()));
                }
            }
            _ => {}
        }
        if let Some(f) = self.file() {
            parts.insert(1, f.display().to_string());
        }
        if let Some(f) = &self.field {
            parts.push(format!("--field {f}"));
        }
        match self.verb {
            Verb::Nilpotency { .. } | Verb::Hall { .. } => parts.push(format!("--bound {}", self.bound)),
            Verb::XmodToSimplicial { .. } | Verb::Moore { .. } | Verb::Decompose { .. } => {
                parts.push(format!("--level {}", self.level))
            }
            _ => {}
        }
        parts.join(" ")
    }

    pub fn file(&self) -> Option<&Path> {
        match &self.verb {
            Verb::Verify { file }
            | Verb::Kernel { file }
            | Verb::Quotient { file, .. }
            | Verb::Commutator { file, .. }
            | Verb::Huq { file, .. }
            | Verb::Nilpotency { file }
            | Verb::Hall { file, .. }
            | Verb::Zassenhaus { file, .. }
            | Verb::Smash { file }
            | Verb::XmodCheck { file }
            | Verb::XmodToGraph { file }
            | Verb::GraphToXmod { file }
            | Verb::XmodToSimplicial { file }
            | Verb::Moore { file }
            | Verb::Decompose { file } => Some(file),
            Verb::ZooExport => None,
        }
    }
}

fn parse_error(location: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Parse { location: location.into(), message: message.into() }
}

/// Run one command. Never panics on bad input; parse problems give code 2.
pub fn run(cli: &Cli) -> Outcome {
    let mut report = Report::new(cli.echo());
    let start = Instant::now();
    let result = execute(cli, &mut report);
    report.time(cli.verb.name(), start.elapsed());
    let (code, artifact) = match result {
        Ok(a) => (if report.passed() { 0 } else { 1 }, a),
        Err(e @ Error::Parse { .. }) => {
            report.check("input", Check::fail("parse", Witness::note(vec![], e.to_string())));
            (2, None)
        }
        Err(e) => {
            report.check("error", Check::fail(error_kind(&e), Witness::note(vec![], e.to_string())));
            (1, None)
        }
    };
    report.finish();
    Outcome { code, report, artifact }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Hypothesis(_) => "hypothesis",
        Error::NotNormal(_) => "normality",
        Error::Axiom(_) => "axiom",
        Error::TooLarge(_) => "size limit",
        _ => "construction",
    }
}

fn load(cli: &Cli) -> colorhopf::Result<Loaded> {
    let field = cli
        .field
        .as_deref()
        .map(|f| Field::from_spec(f).map_err(|e| parse_error("--field", e.to_string())))
        .transpose()?;
    let path = cli.file().expect("verb takes a file");
    let text = std::fs::read_to_string(path)
        .map_err(|e| parse_error(path.display().to_string(), e.to_string()))?;
    format::parse(&text, field).map_err(|e| match e {
        Error::Parse { location, message } => parse_error(format!("{}: {location}", path.display()), message),
        e => e,
    })
}

fn wrong_kind(l: &Loaded, want: &str) -> Error {
    parse_error("kind", format!("expected {want}, found {}", l.kind()))
}

fn algebra(cli: &Cli) -> colorhopf::Result<Hopf> {
    match load(cli)? {
        Loaded::Algebra(a) => Ok(a),
        l => Err(wrong_kind(&l, "algebra")),
    }
}

fn morphism(cli: &Cli) -> colorhopf::Result<Morphism> {
    match load(cli)? {
        Loaded::Morphism(m) => Ok(m),
        l => Err(wrong_kind(&l, "morphism")),
    }
}

fn xmod(cli: &Cli) -> colorhopf::Result<CrossedModule> {
    match load(cli)? {
        Loaded::CrossedModule(x) => Ok(x),
        l => Err(wrong_kind(&l, "crossed_module")),
    }
}

fn simplicial(cli: &Cli) -> colorhopf::Result<SimplicialHopf> {
    match load(cli)? {
        Loaded::Simplicial(s) => Ok(s),
        Loaded::CrossedModule(x) => xmod_to_simplicial_to(&x, cli.level),
        l => Err(wrong_kind(&l, "simplicial or crossed_module")),
    }
}

/// Hopf subalgebra generated by comma-separated basis labels; `None` is A.
fn subalgebra(a: &Hopf, gens: Option<&str>, flag: &str) -> colorhopf::Result<HopfSubalgebra> {
    let Some(gens) = gens else { return Ok(HopfSubalgebra::whole(a)) };
    let mut vs = vec![];
    for g in gens.split(',').map(str::trim).filter(|g| !g.is_empty()) {
        let i = a
            .labels()
            .iter()
            .position(|l| l == g)
            .ok_or_else(|| parse_error(format!("--{flag}"), format!("{} has no basis element `{g}`", a.name())))?;
        vs.push(Vector::basis(i));
    }
    Ok(HopfSubalgebra::generated(a, &vs))
}

fn describe(r: &mut Report, key: &str, a: &ColorHopfAlgebra) {
    if key != a.name() {
        r.fact(key, a.name());
    }
    r.fact(format!("{key} dim"), a.dim());
    by_degree(r, key, a, &a.space().dims_by_degree(&a.ctx().group));
}

fn by_degree(r: &mut Report, key: &str, a: &ColorHopfAlgebra, dims: &[usize]) {
    let g = &a.ctx().group;
    if g.size() > 1 {
        let items = dims.iter().enumerate().filter(|(_, &d)| d > 0).map(|(k, d)| format!("{}: {d}", g.format(k)));
        r.list(format!("{key} dims by degree"), items);
    }
}

fn describe_sub(r: &mut Report, key: &str, x: &HopfSubalgebra) {
    let a = &x.ambient;
    r.fact(format!("{key} dim"), x.dim());
    by_degree(r, key, a, &x.dims_by_degree());
    r.list(format!("{key} basis"), x.basis().iter().map(|b| a.render(b)));
}

fn execute(cli: &Cli, r: &mut Report) -> colorhopf::Result<Option<Artifact>> {
    match &cli.verb {
        Verb::Verify { .. } => {
            let l = load(cli)?;
            for a in algebras_of(&l) {
                describe(r, a.name(), &a);
                r.checks_from(colorhopf::verify_hopf(&a));
            }
            Ok(None)
        }
        Verb::Kernel { .. } => {
            let m = morphism(cli)?;
            r.checks_from(colorhopf::verify_morphism(&m.map, &m.source, &m.target));
            let k = HopfSubalgebra::new(m.source.clone(), hopf_kernel(&m.map, &m.source, &m.target))?;
            describe_sub(r, "Hker", &k);
            r.check("Hker", Check::from_bool("Hker is normal", is_normal(&m.source, &k.space), || Witness::note(vec![], "not normal")));
            let (alg, _) = k.to_algebra(&format!("Hker({})", m.name))?;
            Ok(Some(Artifact::Document(format::algebra_document(&alg))))
        }
        Verb::Quotient { gens, .. } => {
            let a = algebra(cli)?;
            let n = subalgebra(&a, Some(gens), "gens")?;
            describe_sub(r, "N", &n);
            let q = quotient_by_normal(&a, &n, &format!("{}/N", a.name()))?;
            describe(r, "quotient", &q.algebra);
            r.list("representatives", q.representatives.iter().map(|&i| a.label(i)));
            r.checks_from(colorhopf::verify_hopf(&q.algebra));
            r.checks_from(colorhopf::verify_morphism(&q.map, &a, &q.algebra));
            Ok(Some(Artifact::Document(format::algebra_document(&q.algebra))))
        }
        Verb::Commutator { x, y, .. } => {
            let a = algebra(cli)?;
            let xs = subalgebra(&a, x.as_deref(), "x")?;
            let ys = subalgebra(&a, y.as_deref(), "y")?;
            let c = commutator_subalgebra(&xs, &ys)?;
            describe_sub(r, "[X,Y]", &c);
            let sec = "[X,Y]";
            r.check(sec, Check::from_option("normal", colorhopf::sub::normality_witness(&a, &c.space)));
            r.check(sec, Check::from_option("Hopf subalgebra", colorhopf::sub::subalgebra_defect(&a, &c.space).map(|d| Witness::note(vec![], d))));
            let ok = commute_in_quotient(&xs, &ys, &c)?;
            r.check(sec, Check::from_bool("images commute in A/A[X,Y]⁺", ok, || Witness::note(vec![], "images do not commute")));
            let (alg, _) = c.to_algebra("[X,Y]")?;
            Ok(Some(Artifact::Document(format::algebra_document(&alg))))
        }
        Verb::Huq { x, y, .. } => {
            let a = algebra(cli)?;
            let xs = subalgebra(&a, x.as_deref(), "x")?;
            let ys = subalgebra(&a, y.as_deref(), "y")?;
            let h = huq_commute(&xs, &ys)?;
            r.fact("commute", h.commute);
            let names = ["(1) m∘(i⊗j) is a Hopf morphism", "(2) xy = φ(|x|,|y|)yx", "(3) [x,y] = ε(x)ε(y)1", "(4) x ▷ y = ε(x)y"];
            r.list("conditions", names.iter().zip(h.conditions).map(|(n, c)| format!("{n}: {c}")));
            let agree = h.conditions.iter().all(|&c| c == h.conditions[0]);
            r.check("Huq", Check::from_bool("conditions agree", agree, || Witness::note(vec![], format!("{:?}", h.conditions))));
            if let Some(w) = h.witness {
                r.fact("non-commuting pair", w);
            }
            Ok(None)
        }
        Verb::Nilpotency { .. } => {
            let a = algebra(cli)?;
            let s = nilpotency(&a, cli.bound)?;
            r.list("series dims", s.dims());
            match s.class {
                Some(c) => r.fact("class", c),
                None if s.stabilized => r.fact("class", format!("none (series stabilizes at dim {})", s.terms.last().unwrap().dim())),
                None => r.fact("class", format!("none within bound {}", cli.bound)),
            }
            if s.stabilized {
                describe_sub(r, "stable term", s.terms.last().unwrap());
            }
            Ok(None)
        }
        Verb::Hall { n, .. } => {
            let m = morphism(cli)?;
            let ns = subalgebra(&m.source, n.as_deref(), "n")?;
            let h = hall_check(&m.map, &m.source, &m.target, &ns, cli.bound)?;
            let opt = |v: Option<usize>| v.map_or("none".to_string(), |c| c.to_string());
            r.fact("hypotheses", h.hypotheses);
            r.fact("c = class(N)", opt(h.c));
            r.fact("d = class(B)", opt(h.d));
            r.fact("class(E)", opt(h.class_e));
            if let Some(b) = h.bound {
                r.fact("c(c+1)/2·(d−1)+c", b);
            }
            r.checks_from(h.report);
            Ok(None)
        }
        Verb::Zassenhaus { u, v, k, l, .. } => {
            let a = algebra(cli)?;
            let sub = |g: &str, f: &str| subalgebra(&a, Some(g), f);
            let z = zassenhaus_verify(&sub(u, "u")?, &sub(v, "v")?, &sub(k, "k")?, &sub(l, "l")?)?;
            for (name, alg) in [("left", &z.left), ("middle", &z.middle), ("right", &z.right)] {
                describe(r, name, alg);
            }
            r.checks_from(z.report);
            Ok(None)
        }
        Verb::Smash { .. } => {
            let m: ModuleAction = match load(cli)? {
                Loaded::Action(m) => m,
                Loaded::CrossedModule(x) => x.action,
                l => return Err(wrong_kind(&l, "action or crossed_module")),
            };
            r.checks_from(validate_module_action(&m));
            let s = smash_product(&m)?;
            describe(r, "smash", &s);
            r.checks_from(colorhopf::verify_hopf(&s));
            let ext = SplitExtension::from_action(&m)?;
            r.checks_from(ext.validate());
            Ok(Some(Artifact::Document(format::algebra_document(&s))))
        }
        Verb::XmodCheck { .. } => {
            let x = xmod(cli)?;
            describe(r, "A", x.base());
            describe(r, "H", x.top());
            r.checks_from(validate_crossed_module(&x));
            Ok(None)
        }
        Verb::XmodToGraph { .. } => {
            let x = xmod(cli)?;
            let g = xmod_to_rmg(&x)?;
            describe(r, "A₁", &g.a1);
            r.checks_from(validate_graph(&g));
            r.check("graph", Check::from_option("multiplicative", multiplicativity_witness(&g)));
            r.checks_from(xmod_roundtrip(&x)?);
            Ok(Some(Artifact::Document(format::graph_document(&g))))
        }
        Verb::GraphToXmod { .. } => {
            let g = match load(cli)? {
                Loaded::Graph(g) => g,
                l => return Err(wrong_kind(&l, "graph")),
            };
            r.checks_from(validate_graph(&g));
            r.fact("multiplicative", is_multiplicative(&g));
            let f = rmg_to_xmod(&g)?;
            describe(r, "H", f.xmod.top());
            r.checks_from(validate_crossed_module(&f.xmod));
            r.checks_from(graph_roundtrip(&g)?);
            Ok(Some(Artifact::Document(format::xmod_document(&f.xmod))))
        }
        Verb::XmodToSimplicial { .. } => {
            let x = xmod(cli)?;
            let s = xmod_to_simplicial_to(&x, cli.level)?;
            r.list("level dims", s.dims());
            r.checks_from(validate_simplicial(&s));
            Ok(Some(Artifact::Document(format::simplicial_document(&s))))
        }
        Verb::Moore { .. } => {
            let s = simplicial(cli)?;
            r.list("level dims", s.dims());
            let m = moore_complex(&s)?;
            r.list("Moore dims", m.dims());
            let len = moore_length(&s)?;
            r.fact("Moore length", len.length);
            r.fact("higher terms trivial by coskeletality", len.certified);
            r.checks_from(m.chain);
            if len.length <= 1 && s.top() >= 2 {
                let f = simplicial_to_xmod(&s)?;
                r.checks_from(validate_crossed_module(&f.xmod));
            }
            Ok(None)
        }
        Verb::Decompose { .. } => {
            let s = simplicial(cli)?;
            let d = semidirect_decomposition_check(&s)?;
            r.list("Moore dims", d.moore_dims);
            r.list("level dims", s.dims());
            r.checks_from(d.report);
            Ok(None)
        }
        Verb::ZooExport => {
            if cli.out.is_none() {
                return Err(parse_error("--out", "zoo-export needs an output directory"));
            }
            let files = zoo_files();
            r.list("files", files.iter().map(|(n, _)| n.clone()));
            Ok(Some(Artifact::Files(files)))
        }
    }
}

fn algebras_of(l: &Loaded) -> Vec<Hopf> {
    match l {
        Loaded::Algebra(a) => vec![a.clone()],
        Loaded::Morphism(m) => vec![m.source.clone(), m.target.clone()],
        Loaded::Action(m) => vec![m.actor.clone(), m.carrier.clone()],
        Loaded::CrossedModule(x) => vec![x.base().clone(), x.top().clone()],
        Loaded::Graph(g) => vec![g.a1.clone(), g.a0.clone()],
        Loaded::Simplicial(s) => s.levels.clone(),
    }
}

fn slug(s: &str) -> String {
    let mut out = String::new();
    for c in s.chars() {
        match c {
            'Λ' => out.push('L'),
            '⋊' => {
                let t = out.trim_end_matches('-').len();
                out.truncate(t);
                out.push_str("-smash-");
            }
            c if c.is_ascii_alphanumeric() => out.push(c),
            _ if !out.ends_with('-') && !out.is_empty() => out.push('-'),
            _ => {}
        }
    }
    out.trim_end_matches('-').to_string()
}

/// Algebras, actions and crossed modules of the corpus as named documents.
pub fn zoo_files() -> Vec<(String, Document)> {
    let mut out = vec![];
    for z in zoo::standard_zoo() {
        out.push((format!("{}.json", slug(&z.name)), format::algebra_document(&z.algebra)));
    }
    for (k, m) in zoo::standard_actions().into_iter().enumerate() {
        let name = format!("{} on {}", m.actor.name(), m.carrier.name());
        out.push((format!("action-{k}-{}.json", slug(&name)), format::action_document(&name, &m)));
    }
    for (k, x) in zoo::standard_crossed_modules().into_iter().enumerate() {
        out.push((format!("xmod-{k}-{}.json", slug(&x.name)), format::xmod_document(&x)));
    }
    out.push(("morphism-kD4-quotient.json".into(), format::morphism_document(&zoo::d4_extension())));
    out
}

/// Writes the artifact of a finished run.
pub fn write_artifact(out: &Path, a: &Artifact) -> std::io::Result<()> {
    match a {
        Artifact::Document(d) => std::fs::write(out, format::to_json(d)),
        Artifact::Files(fs) => {
            std::fs::create_dir_all(out)?;
            for (name, d) in fs {
                std::fs::write(out.join(name), format::to_json(d))?;
            }
            Ok(())
        }
    }
}

/// Structured or text rendering of the report.
pub fn render(cli: &Cli, r: &Report) -> String {
    match cli.format {
        OutFormat::Structured => r.to_json(),
        OutFormat::Text => r.to_text(),
    }
}
