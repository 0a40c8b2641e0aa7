//! JSON definition files for algebras, crossed modules, graphs and
//! simplicial objects.
//!
//! Every document carries one `context` block (field, grading orders and a
//! dense row-major bicharacter table) and sparse `[row, col, scalar]` triples
//! for each structure map. Scalars are written as strings (`"3"`, `"-1/2"`)
//! and read back from strings or JSON integers.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::actions::ModuleAction;
use crate::error::{Error, Result};
use crate::grading::{Bicharacter, ColorContext, Ctx, GradingGroup};
use crate::hopf::{ColorHopfAlgebra, Hopf};
use crate::linalg::{GradedSpace, LinMap, Vector};
use crate::scalar::{Field, Scalar};
use crate::simplicial::SimplicialHopf;
use crate::xmod::{CrossedModule, ReflexiveGraph};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Literal {
    Int(i64),
    Text(String),
}

impl Literal {
    fn text(&self) -> String {
        match self {
            Literal::Int(n) => n.to_string(),
            Literal::Text(s) => s.clone(),
        }
    }
}

/// `[row, col, scalar]`.
pub type Entry = (usize, usize, Literal);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ContextBlock {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<String>,
    pub grading: Vec<u32>,
    pub bicharacter: Vec<Vec<Literal>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraBlock {
    pub name: String,
    pub labels: Vec<String>,
    pub degrees: Vec<Vec<u32>>,
    pub unit: Vec<Entry>,
    pub mult: Vec<Entry>,
    pub counit: Vec<Entry>,
    pub comult: Vec<Entry>,
    pub antipode: Vec<Entry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum Document {
    Algebra {
        context: ContextBlock,
        algebra: AlgebraBlock,
    },
    Morphism {
        context: ContextBlock,
        name: String,
        source: AlgebraBlock,
        target: AlgebraBlock,
        map: Vec<Entry>,
    },
    /// `action` is A⊗H → H with column index a·dim H + h.
    Action {
        context: ContextBlock,
        name: String,
        actor: AlgebraBlock,
        carrier: AlgebraBlock,
        action: Vec<Entry>,
    },
    /// `action` as for [`Document::Action`]; `d` is H → A.
    CrossedModule {
        context: ContextBlock,
        name: String,
        base: AlgebraBlock,
        top: AlgebraBlock,
        d: Vec<Entry>,
        action: Vec<Entry>,
    },
    Graph {
        context: ContextBlock,
        name: String,
        arrows: AlgebraBlock,
        objects: AlgebraBlock,
        source: Vec<Entry>,
        target: Vec<Entry>,
        section: Vec<Entry>,
    },
    Simplicial {
        context: ContextBlock,
        name: String,
        levels: Vec<AlgebraBlock>,
        faces: Vec<Vec<Vec<Entry>>>,
        degeneracies: Vec<Vec<Vec<Entry>>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        coskeletal: Option<usize>,
    },
}

/// f: source → target.
#[derive(Clone, Debug)]
pub struct Morphism {
    pub name: String,
    pub source: Hopf,
    pub target: Hopf,
    pub map: LinMap,
}

/// What a document turns into.
#[derive(Clone, Debug)]
pub enum Loaded {
    Algebra(Hopf),
    Morphism(Morphism),
    Action(ModuleAction),
    CrossedModule(CrossedModule),
    Graph(ReflexiveGraph),
    Simplicial(SimplicialHopf),
}

impl Loaded {
    pub fn kind(&self) -> &'static str {
        match self {
            Loaded::Algebra(_) => "algebra",
            Loaded::Morphism(_) => "morphism",
            Loaded::Action(_) => "action",
            Loaded::CrossedModule(_) => "crossed_module",
            Loaded::Graph(_) => "graph",
            Loaded::Simplicial(_) => "simplicial",
        }
    }
}

fn parse_err(location: impl Into<String>, message: impl ToString) -> Error {
    Error::Parse { location: location.into(), message: message.to_string() }
}

fn at<T>(location: &str, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        Error::Parse { location: inner, message } => parse_err(format!("{location}.{inner}"), message),
        e => parse_err(location, e),
    })
}

fn lit(s: &Scalar) -> Literal {
    Literal::Text(s.to_string())
}

fn entries(m: &LinMap) -> Vec<Entry> {
    m.triples().iter().map(|(r, c, v)| (*r, *c, lit(v))).collect()
}

/// Parse a document; `field` overrides the field named in the file.
pub fn parse(text: &str, field: Option<Field>) -> Result<Loaded> {
    let doc: Document = serde_json::from_str(text)
        .map_err(|e| parse_err(format!("line {} column {}", e.line(), e.column()), e))?;
    load(&doc, field)
}

pub fn load(doc: &Document, field: Option<Field>) -> Result<Loaded> {
    match doc {
        Document::Algebra { context, algebra } => {
            let ctx = at("context", load_context(context, field))?;
            Ok(Loaded::Algebra(at("algebra", load_algebra(&ctx, algebra))?))
        }
        Document::Morphism { context, name, source, target, map } => {
            let ctx = at("context", load_context(context, field))?;
            let a = at("source", load_algebra(&ctx, source))?;
            let b = at("target", load_algebra(&ctx, target))?;
            let map = at("map", load_map(ctx.field, b.dim(), a.dim(), map))?;
            Ok(Loaded::Morphism(Morphism { name: name.clone(), source: a, target: b, map }))
        }
        Document::Action { context, name: _, actor, carrier, action } => {
            let ctx = at("context", load_context(context, field))?;
            let a = at("actor", load_algebra(&ctx, actor))?;
            let h = at("carrier", load_algebra(&ctx, carrier))?;
            let act = at("action", load_map(ctx.field, h.dim(), a.dim() * h.dim(), action))?;
            Ok(Loaded::Action(at("action", ModuleAction::new(a, h, act))?))
        }
        Document::CrossedModule { context, name, base, top, d, action } => {
            let ctx = at("context", load_context(context, field))?;
            let a = at("base", load_algebra(&ctx, base))?;
            let h = at("top", load_algebra(&ctx, top))?;
            let f = ctx.field;
            let d = at("d", load_map(f, a.dim(), h.dim(), d))?;
            let act = at("action", load_map(f, h.dim(), a.dim() * h.dim(), action))?;
            let m = at("action", ModuleAction::new(a, h, act))?;
            Ok(Loaded::CrossedModule(at("d", CrossedModule::new(name.clone(), m, d))?))
        }
        Document::Graph { context, name, arrows, objects, source, target, section } => {
            let ctx = at("context", load_context(context, field))?;
            let a1 = at("arrows", load_algebra(&ctx, arrows))?;
            let a0 = at("objects", load_algebra(&ctx, objects))?;
            let f = ctx.field;
            let p = at("source", load_map(f, a0.dim(), a1.dim(), source))?;
            let g = at("target", load_map(f, a0.dim(), a1.dim(), target))?;
            let i = at("section", load_map(f, a1.dim(), a0.dim(), section))?;
            Ok(Loaded::Graph(ReflexiveGraph::new(name.clone(), a1, a0, p, g, i)))
        }
        Document::Simplicial { context, name, levels, faces, degeneracies, coskeletal } => {
            let ctx = at("context", load_context(context, field))?;
            let lv = levels
                .iter()
                .enumerate()
                .map(|(k, b)| at(&format!("levels[{k}]"), load_algebra(&ctx, b)))
                .collect::<Result<Vec<_>>>()?;
            let f = ctx.field;
            let dim = |k: usize, what: &str| {
                lv.get(k).map(|l| l.dim()).ok_or_else(|| parse_err(what, format!("no level {k}")))
            };
            let mut fs = vec![];
            for (n, fam) in faces.iter().enumerate() {
                let mut row = vec![];
                for (i, e) in fam.iter().enumerate() {
                    let loc = format!("faces[{n}][{i}]");
                    let src = dim(n, &loc)?;
                    let tgt = if n == 0 { 0 } else { dim(n - 1, &loc)? };
                    row.push(at(&loc, load_map(f, tgt, src, e))?);
                }
                fs.push(row);
            }
            let mut ds = vec![];
            for (n, fam) in degeneracies.iter().enumerate() {
                let mut row = vec![];
                for (j, e) in fam.iter().enumerate() {
                    let loc = format!("degeneracies[{n}][{j}]");
                    row.push(at(&loc, load_map(f, dim(n + 1, &loc)?, dim(n, &loc)?, e))?);
                }
                ds.push(row);
            }
            let mut s = at("levels", SimplicialHopf::new(name.clone(), lv, fs, ds))?;
            s.coskeletal = *coskeletal;
            Ok(Loaded::Simplicial(s))
        }
    }
}

fn load_context(c: &ContextBlock, field: Option<Field>) -> Result<Ctx> {
    let field = match (field, &c.field) {
        (Some(f), _) => f,
        (None, Some(s)) => at("field", Field::from_spec(s))?,
        (None, None) => Field::Rational,
    };
    let group = at("grading", GradingGroup::new(c.grading.clone()))?;
    let n = group.size();
    if c.bicharacter.len() != n || c.bicharacter.iter().any(|r| r.len() != n) {
        return Err(parse_err("bicharacter", format!("expected a {n}×{n} table")));
    }
    let mut table = Vec::with_capacity(n * n);
    for (i, row) in c.bicharacter.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            table.push(at(&format!("bicharacter[{i}][{j}]"), field.parse(&x.text()))?);
        }
    }
    let bichar = at("bicharacter", Bicharacter::from_table(&group, field, table))?;
    at("bicharacter", ColorContext::new(field, group, bichar))
}

fn load_triples(field: Field, e: &[Entry]) -> Result<Vec<(usize, usize, Scalar)>> {
    e.iter()
        .enumerate()
        .map(|(k, (r, c, x))| Ok((*r, *c, at(&format!("[{k}]"), field.parse(&x.text()))?)))
        .collect()
}

fn load_map(field: Field, rows: usize, cols: usize, e: &[Entry]) -> Result<LinMap> {
    LinMap::from_triples(rows, cols, &load_triples(field, e)?)
}

fn load_algebra(ctx: &Ctx, b: &AlgebraBlock) -> Result<Hopf> {
    let n = b.labels.len();
    if b.degrees.len() != n {
        return Err(parse_err("degrees", format!("{} degrees for {n} labels", b.degrees.len())));
    }
    let degrees = b
        .degrees
        .iter()
        .enumerate()
        .map(|(k, d)| at(&format!("degrees[{k}]"), ctx.group.encode(d)))
        .collect::<Result<Vec<_>>>()?;
    let space = at("labels", GradedSpace::new(degrees, b.labels.clone()))?;
    let f = ctx.field;
    let unit = at("unit", load_map(f, n, 1, &b.unit))?;
    let mult = at("mult", load_map(f, n, n * n, &b.mult))?;
    let counit = at("counit", load_map(f, 1, n, &b.counit))?;
    let comult = at("comult", load_map(f, n * n, n, &b.comult))?;
    let antipode = at("antipode", load_map(f, n, n, &b.antipode))?;
    let counit = (0..n).map(|j| counit.entry(0, j)).collect();
    let a = ColorHopfAlgebra::from_parts(ctx.clone(), b.name.clone(), space, unit.col_vec(0), mult, counit, comult, antipode)?;
    Ok(Arc::new(a))
}

pub fn context_block(ctx: &ColorContext) -> ContextBlock {
    let n = ctx.group.size();
    ContextBlock {
        field: Some(ctx.field.spec()),
        grading: ctx.group.orders().to_vec(),
        bicharacter: (0..n).map(|i| (0..n).map(|j| lit(ctx.phi(i, j))).collect()).collect(),
    }
}

pub fn algebra_block(a: &ColorHopfAlgebra) -> AlgebraBlock {
    let n = a.dim();
    let unit = LinMap::from_columns(n, vec![a.one().clone()]);
    let counit = LinMap::from_fn(1, n, |j| Vector::monomial(0, a.counit_basis(j).clone()));
    AlgebraBlock {
        name: a.name().to_string(),
        labels: a.labels().to_vec(),
        degrees: a.degrees().iter().map(|&d| a.ctx().group.decode(d)).collect(),
        unit: entries(&unit),
        mult: entries(a.mult_map()),
        counit: entries(&counit),
        comult: entries(a.comult_map()),
        antipode: entries(a.antipode_map()),
    }
}

pub fn algebra_document(a: &ColorHopfAlgebra) -> Document {
    Document::Algebra { context: context_block(a.ctx()), algebra: algebra_block(a) }
}

pub fn morphism_document(m: &Morphism) -> Document {
    Document::Morphism {
        context: context_block(m.source.ctx()),
        name: m.name.clone(),
        source: algebra_block(&m.source),
        target: algebra_block(&m.target),
        map: entries(&m.map),
    }
}

pub fn action_document(name: &str, m: &ModuleAction) -> Document {
    Document::Action {
        context: context_block(m.actor.ctx()),
        name: name.to_string(),
        actor: algebra_block(&m.actor),
        carrier: algebra_block(&m.carrier),
        action: entries(&m.act),
    }
}

pub fn xmod_document(x: &CrossedModule) -> Document {
    Document::CrossedModule {
        context: context_block(x.base().ctx()),
        name: x.name.clone(),
        base: algebra_block(x.base()),
        top: algebra_block(x.top()),
        d: entries(&x.d),
        action: entries(&x.action.act),
    }
}

pub fn graph_document(g: &ReflexiveGraph) -> Document {
    Document::Graph {
        context: context_block(g.a1.ctx()),
        name: g.name.clone(),
        arrows: algebra_block(&g.a1),
        objects: algebra_block(&g.a0),
        source: entries(&g.p),
        target: entries(&g.gamma),
        section: entries(&g.i),
    }
}

pub fn simplicial_document(s: &SimplicialHopf) -> Document {
    Document::Simplicial {
        context: context_block(s.levels[0].ctx()),
        name: s.name.clone(),
        levels: s.levels.iter().map(|l| algebra_block(l)).collect(),
        faces: s.faces.iter().map(|f| f.iter().map(entries).collect()).collect(),
        degeneracies: s.degens.iter().map(|f| f.iter().map(entries).collect()).collect(),
        coskeletal: s.coskeletal,
    }
}

/// Indented JSON where arrays of scalars stay on one line, so every triple
/// and label list reads as a single row. Ends with a newline.
pub fn to_json(doc: &Document) -> String {
    let v = serde_json::to_value(doc).expect("documents serialize");
    let mut out = String::new();
    write_value(&v, 0, &mut out);
    out.push('\n');
    out
}

fn flat(v: &serde_json::Value) -> bool {
    !matches!(v, serde_json::Value::Array(_) | serde_json::Value::Object(_))
}

fn write_value(v: &serde_json::Value, depth: usize, out: &mut String) {
    use serde_json::Value;
    let pad = |d: usize| "  ".repeat(d);
    match v {
        Value::Array(xs) if xs.is_empty() => out.push_str("[]"),
        Value::Array(xs) if xs.iter().all(flat) => {
            let inner: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
            out.push('[');
            out.push_str(&inner.join(", "));
            out.push(']');
        }
        Value::Array(xs) => {
            out.push_str("[\n");
            for (k, x) in xs.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                write_value(x, depth + 1, out);
                out.push_str(if k + 1 < xs.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push(']');
        }
        Value::Object(m) => {
            out.push_str("{\n");
            for (k, (key, x)) in m.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                out.push_str(&Value::String(key.clone()).to_string());
                out.push_str(": ");
                write_value(x, depth + 1, out);
                out.push_str(if k + 1 < m.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push('}');
        }
        x => out.push_str(&x.to_string()),
    }
}
