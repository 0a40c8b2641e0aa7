//! One PASS/FAIL line per acceptance criterion.
//!
//! Each criterion produces a structured record (facts and failures, no
//! timings). The whole suite runs twice and the records must match byte for
//! byte.

use std::time::{Duration, Instant};

use colorhopf::actions::*;
use colorhopf::commutators::*;
use colorhopf::format::{self, AlgebraBlock, Document, Literal, Loaded};
use colorhopf::simplicial::*;
use colorhopf::sub::{is_normal, legs, HopfSubalgebra};
use colorhopf::verify::Axiom;
use colorhopf::xmod::*;
use colorhopf::zoo::{self, oracle, FiniteGroup};
use colorhopf::*;
use serde_json::{json, Value};

#[derive(Default)]
struct Sheet {
    facts: Vec<(String, Value)>,
    failures: Vec<String>,
}

impl Sheet {
    fn fact(&mut self, key: impl Into<String>, v: impl Into<Value>) {
        self.facts.push((key.into(), v.into()));
    }

    fn require(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }

    fn record(&self) -> Value {
        let facts: serde_json::Map<String, Value> = self.facts.iter().cloned().collect();
        json!({ "facts": facts, "failures": self.failures })
    }
}

fn sub(a: &Hopf, s: &oracle::Set) -> HopfSubalgebra {
    zoo::group_subalgebra(a, s.iter().copied())
}

fn gen(g: &FiniteGroup, labels: &[&str]) -> oracle::Set {
    let idx: Vec<usize> = labels.iter().map(|l| g.index_of(l).unwrap()).collect();
    g.generated(&idx).into_iter().collect()
}

// naive dense evaluator over i64, read straight from a document

struct Dense {
    n: usize,
    deg: Vec<usize>,
    phi: Vec<Vec<i64>>,
    unit: Vec<i64>,
    mult: Vec<Vec<i64>>,
    counit: Vec<i64>,
    comult: Vec<Vec<i64>>,
    antipode: Vec<Vec<i64>>,
}

fn int(l: &Literal) -> i64 {
    match l {
        Literal::Int(n) => *n,
        Literal::Text(s) => s.parse().expect("integer constants"),
    }
}

fn dense(rows: usize, cols: usize, entries: &[format::Entry]) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0; rows]; cols];
    for (r, c, x) in entries {
        m[*c][*r] += int(x);
    }
    m
}

impl Dense {
    fn new(ctx: &format::ContextBlock, a: &AlgebraBlock) -> Self {
        assert!(ctx.grading.len() <= 1);
        let n = a.labels.len();
        let deg = a.degrees.iter().map(|d| d.first().copied().unwrap_or(0) as usize).collect();
        let phi = ctx.bicharacter.iter().map(|r| r.iter().map(int).collect()).collect();
        Dense {
            n,
            deg,
            phi,
            unit: dense(n, 1, &a.unit).remove(0),
            mult: dense(n, n * n, &a.mult),
            counit: dense(1, n, &a.counit).into_iter().map(|c| c[0]).collect(),
            comult: dense(n * n, n, &a.comult),
            antipode: dense(n, n, &a.antipode),
        }
    }

    fn mul(&self, x: &[i64], y: &[i64]) -> Vec<i64> {
        let mut out = vec![0; self.n];
        for i in 0..self.n {
            for j in 0..self.n {
                let c = x[i] * y[j];
                if c != 0 {
                    for k in 0..self.n {
                        out[k] += c * self.mult[i * self.n + j][k];
                    }
                }
            }
        }
        out
    }

    fn e(&self, i: usize) -> Vec<i64> {
        let mut v = vec![0; self.n];
        v[i] = 1;
        v
    }

    /// nonzero (a1, a2, c) of Δ(e_i)
    fn sweedler(&self, i: usize) -> Vec<(usize, usize, i64)> {
        let n = self.n;
        (0..n * n).filter(|&k| self.comult[i][k] != 0).map(|k| (k / n, k % n, self.comult[i][k])).collect()
    }

    fn comul_vec(&self, x: &[i64]) -> Vec<i64> {
        let mut out = vec![0; self.n * self.n];
        for (i, &c) in x.iter().enumerate() {
            for k in 0..out.len() {
                out[k] += c * self.comult[i][k];
            }
        }
        out
    }

    fn eps(&self, x: &[i64]) -> i64 {
        x.iter().zip(&self.counit).map(|(a, b)| a * b).sum()
    }

    fn fails(&self, ax: Axiom, idx: &[usize]) -> bool {
        let n = self.n;
        let add = |v: &mut Vec<i64>, w: &[i64], c: i64| v.iter_mut().zip(w).for_each(|(a, b)| *a += c * b);
        match ax {
            Axiom::Associativity => {
                let (a, b, c) = (self.e(idx[0]), self.e(idx[1]), self.e(idx[2]));
                self.mul(&self.mul(&a, &b), &c) != self.mul(&a, &self.mul(&b, &c))
            }
            Axiom::LeftUnit => self.mul(&self.unit, &self.e(idx[0])) != self.e(idx[0]),
            Axiom::RightUnit => self.mul(&self.e(idx[0]), &self.unit) != self.e(idx[0]),
            Axiom::Coassociativity => {
                let (mut l, mut r) = (vec![0; n * n * n], vec![0; n * n * n]);
                for (a1, a2, c) in self.sweedler(idx[0]) {
                    for k in 0..n * n {
                        l[k * n + a2] += c * self.comult[a1][k];
                        r[a1 * n * n + k] += c * self.comult[a2][k];
                    }
                }
                l != r
            }
            Axiom::LeftCounit | Axiom::RightCounit => {
                let mut v = vec![0; n];
                for (a1, a2, c) in self.sweedler(idx[0]) {
                    if ax == Axiom::LeftCounit {
                        v[a2] += c * self.counit[a1];
                    } else {
                        v[a1] += c * self.counit[a2];
                    }
                }
                v != self.e(idx[0])
            }
            Axiom::Compatibility => {
                let lhs = self.comul_vec(&self.mul(&self.e(idx[0]), &self.e(idx[1])));
                let mut rhs = vec![0; n * n];
                for (a1, a2, c) in self.sweedler(idx[0]) {
                    for (b1, b2, d) in self.sweedler(idx[1]) {
                        let s = c * d * self.phi[self.deg[a2]][self.deg[b1]];
                        let x = self.mul(&self.e(a1), &self.e(b1));
                        let y = self.mul(&self.e(a2), &self.e(b2));
                        for p in 0..n {
                            for q in 0..n {
                                rhs[p * n + q] += s * x[p] * y[q];
                            }
                        }
                    }
                }
                lhs != rhs
            }
            Axiom::ComultUnit => {
                let mut uu = vec![0; n * n];
                for p in 0..n {
                    for q in 0..n {
                        uu[p * n + q] = self.unit[p] * self.unit[q];
                    }
                }
                self.comul_vec(&self.unit) != uu
            }
            Axiom::CounitMultiplicative => {
                let (a, b) = (self.e(idx[0]), self.e(idx[1]));
                self.eps(&self.mul(&a, &b)) != self.eps(&a) * self.eps(&b)
            }
            Axiom::CounitUnit => self.eps(&self.unit) != 1,
            Axiom::AntipodeLeft | Axiom::AntipodeRight => {
                let mut v = vec![0; n];
                for (a1, a2, c) in self.sweedler(idx[0]) {
                    let p = if ax == Axiom::AntipodeLeft {
                        self.mul(&self.antipode[a1], &self.e(a2))
                    } else {
                        self.mul(&self.e(a1), &self.antipode[a2])
                    };
                    add(&mut v, &p, c);
                }
                let mut u = vec![0; n];
                add(&mut u, &self.unit, self.counit[idx[0]]);
                v != u
            }
            Axiom::Cocommutativity => {
                let mut flip = vec![0; n * n];
                for (a1, a2, c) in self.sweedler(idx[0]) {
                    flip[a2 * n + a1] += c * self.phi[self.deg[a1]][self.deg[a2]];
                }
                self.comul_vec(&self.e(idx[0])) != flip
            }
        }
    }

    fn fails_somewhere(&self, ax: Axiom) -> bool {
        let n = self.n;
        let k = ax.arity();
        (0..n.pow(k as u32)).any(|mut t| {
            let mut idx = vec![0; k];
            for s in (0..k).rev() {
                idx[s] = t % n;
                t /= n;
            }
            self.fails(ax, &idx)
        })
    }
}

#[derive(Clone, Copy, Debug)]
enum Slot {
    Unit,
    Mult,
    Counit,
    Comult,
    Antipode,
}

fn mutate(doc: &Document, slot: Slot, row: usize, col: usize, value: i64) -> Document {
    let mut doc = doc.clone();
    let Document::Algebra { algebra, .. } = &mut doc else { unreachable!() };
    let entries = match slot {
        Slot::Unit => &mut algebra.unit,
        Slot::Mult => &mut algebra.mult,
        Slot::Counit => &mut algebra.counit,
        Slot::Comult => &mut algebra.comult,
        Slot::Antipode => &mut algebra.antipode,
    };
    match entries.iter_mut().find(|(r, c, _)| (*r, *c) == (row, col)) {
        Some(e) => e.2 = Literal::Int(value),
        None => entries.push((row, col, Literal::Int(value))),
    }
    doc
}

fn criterion_axioms() -> Sheet {
    let mut s = Sheet::default();
    let zoo_all = zoo::standard_zoo();
    for z in &zoo_all {
        let rep = verify_hopf(&z.algebra);
        s.require(rep.passed(), || format!("{} fails verify_hopf", z.name));
    }
    s.fact("zoo algebras verified", zoo_all.len());

    use Slot::*;
    let line: &[(Slot, usize, usize, i64)] = &[
        (Mult, 0, 0, 2),
        (Mult, 1, 1, 2),
        (Mult, 1, 2, -1),
        (Mult, 0, 3, 1),
        (Comult, 0, 0, 2),
        (Comult, 3, 0, 1),
        (Counit, 0, 0, 2),
        (Antipode, 1, 1, 1),
        (Antipode, 0, 0, -1),
        (Unit, 0, 0, 2),
    ];
    let z4: &[(Slot, usize, usize, i64)] = &[
        (Mult, 1, 1, 2),
        (Mult, 2, 5, 3),
        (Mult, 0, 5, 1),
        (Mult, 3, 15, 1),
        (Comult, 5, 1, 2),
        (Comult, 0, 1, 1),
        (Counit, 0, 2, 3),
        (Antipode, 1, 1, 1),
        (Antipode, 1, 3, 2),
        (Unit, 1, 0, 1),
    ];
    let mut rejected = vec![];
    for (alg, muts) in [(zoo::exterior(1), line), (zoo::kgroup(&FiniteGroup::cyclic(4)), z4)] {
        let base = format::algebra_document(&alg);
        for &(slot, row, col, value) in muts {
            let doc = mutate(&base, slot, row, col, value);
            let Document::Algebra { context, algebra } = &doc else { unreachable!() };
            let naive = Dense::new(context, algebra);
            let tag = format!("{} {} [{row}, {col}] := {value}", alg.name(), format!("{slot:?}").to_lowercase());
            let Ok(Loaded::Algebra(m)) = format::load(&doc, None) else {
                s.failures.push(format!("{tag}: did not load"));
                continue;
            };
            let rep = verify_hopf(&m);
            s.require(!rep.passed(), || format!("{tag}: accepted"));
            let mut failed = vec![];
            for ax in Axiom::ALL {
                let c = rep.get(ax.name()).unwrap();
                s.require(c.passed != naive.fails_somewhere(ax), || format!("{tag}: {} disagrees with the naive check", ax.name()));
                if let Some(w) = &c.witness {
                    s.require(naive.fails(ax, &w.basis), || format!("{tag}: witness for {} does not fail", ax.name()));
                    failed.push(format!("{} at ({})", ax.name(), w.labels.join(", ")));
                }
            }
            rejected.push(json!({ "mutation": tag, "failed": failed }));
        }
    }
    s.require(rejected.len() == 20, || format!("{} mutations", rejected.len()));
    s.fact("mutations", rejected);
    s
}

fn criterion_commuting_lemma() -> Sheet {
    let mut s = Sheet::default();
    let mut pairs = 0;
    for g in [FiniteGroup::s3(), FiniteGroup::d4(), FiniteGroup::q8()] {
        let a = zoo::kgroup(&g);
        let subs = oracle::all_subgroups(&g);
        for h in &subs {
            for k in &subs {
                let r = huq_commute(&sub(&a, h), &sub(&a, k)).unwrap();
                let elementwise = h.iter().all(|&x| k.iter().all(|&y| g.mul(x, y) == g.mul(y, x)));
                s.require(r.conditions.iter().all(|&c| c == r.commute), || {
                    format!("{} {h:?} {k:?}: conditions {:?}", g.name, r.conditions)
                });
                s.require(r.commute == elementwise, || format!("{} {h:?} {k:?}: oracle says {elementwise}", g.name));
                pairs += 1;
            }
        }
    }
    s.require(pairs >= 40, || format!("only {pairs} pairs"));
    s.fact("pairs", pairs);
    s
}

fn criterion_commutators() -> Sheet {
    let mut s = Sheet::default();
    let mut pairs = 0;
    for g in zoo::standard_groups() {
        let a = zoo::kgroup(&g);
        let normals = oracle::normal_subgroups(&g);
        for n in &normals {
            for m in &normals {
                let (x, y) = (sub(&a, n), sub(&a, m));
                let c = commutator_subalgebra(&x, &y).unwrap();
                let expected = oracle::commutator(&g, n, m);
                let tag = format!("{} {n:?} {m:?}", g.name);
                s.require(c.space == sub(&a, &expected).space, || format!("{tag}: differs from the oracle"));
                s.require(is_normal(&a, &c.space), || format!("{tag}: not normal"));
                let dim = a.dim();
                let closed = c.basis().iter().all(|v| {
                    let (l, r) = legs(&a.comul(v), dim, dim);
                    c.space.contains_space(&l) && c.space.contains_space(&r) && c.contains(&a.antipode(v))
                });
                s.require(closed, || format!("{tag}: not closed under Δ and S"));
                s.require(commute_in_quotient(&x, &y, &c).unwrap(), || format!("{tag}: images do not commute"));
                pairs += 1;
            }
        }
    }
    s.fact("normal pairs", pairs);
    let mut certified = 0;
    for g in [FiniteGroup::s3(), FiniteGroup::d4()] {
        let a = zoo::kgroup(&g);
        let normals = oracle::normal_subgroups(&g);
        for n in &normals {
            for m in &normals {
                let ok = huq_minimality_certify(&sub(&a, n), &sub(&a, m), &g).unwrap();
                s.require(ok, || format!("{} {n:?} {m:?}: minimality", g.name));
                certified += 1;
            }
        }
    }
    s.fact("minimality certified", certified);
    s
}

fn criterion_split() -> Sheet {
    let mut s = Sheet::default();
    let mut names = vec![];
    for m in zoo::standard_actions() {
        let tag = format!("{} on {}", m.actor.name(), m.carrier.name());
        let ext = SplitExtension::from_action(&m).unwrap();
        let sa = split_to_action(&ext).unwrap();
        s.require(verify_morphism(&sa.f, &sa.smash, &ext.h).passed(), || format!("{tag}: f"));
        s.require(verify_morphism(&sa.g, &ext.h, &sa.smash).passed(), || format!("{tag}: g"));
        s.require(sa.f.compose(&sa.g) == LinMap::identity(ext.h.dim()), || format!("{tag}: f∘g"));
        s.require(sa.g.compose(&sa.f) == LinMap::identity(sa.smash.dim()), || format!("{tag}: g∘f"));
        let alpha = smash_kernel_identification(&m, &sa).unwrap();
        s.require(alpha.rank() == m.carrier.dim() && alpha.rows() == alpha.cols(), || format!("{tag}: identification"));
        s.require(actions_agree(&m, &sa.action, &alpha).passed, || format!("{tag}: action not recovered"));
        names.push(tag);
    }
    s.fact("actions", names);
    s
}

fn criterion_graphs() -> Sheet {
    let mut s = Sheet::default();
    let mut names = vec![];
    for x in zoo::standard_crossed_modules() {
        let g = xmod_to_rmg(&x).unwrap();
        s.require(is_multiplicative(&g), || format!("{}: G(X) not multiplicative", x.name));
        let there = xmod_roundtrip(&x).unwrap();
        s.require(there.passed(), || format!("{there}"));
        let back = graph_roundtrip(&g).unwrap();
        s.require(back.passed(), || format!("{back}"));
        names.push(x.name.clone());
    }
    s.fact("crossed modules", names);
    s
}

fn criterion_simplicial() -> Sheet {
    let mut s = Sheet::default();
    let mut xs = zoo::standard_crossed_modules();
    xs.push(CrossedModule::identity(&zoo::exterior(2)));
    let mut rows = vec![];
    for x in xs {
        let (na, nh) = (x.base().dim(), x.top().dim());
        let tag = x.name.clone();
        let sx = xmod_to_simplicial(&x).unwrap();
        let rep = validate_simplicial(&sx);
        s.require(rep.passed(), || format!("{rep}"));
        let l = moore_length(&sx).unwrap();
        s.require(l.dims == vec![na, nh, 1, 1], || format!("{tag}: Moore dims {:?}", l.dims));
        s.require((l.length, l.certified) == (1, true), || format!("{tag}: length {}", l.length));
        let rt = simplicial_roundtrip(&x, &sx).unwrap();
        s.require(rt.passed(), || format!("{rt}"));
        let d = semidirect_decomposition_check(&sx).unwrap();
        s.require(d.report.passed(), || format!("{}", d.report));
        s.require(sx.levels[2].dim() == nh * nh * na, || format!("{tag}: dim H₂ = {}", sx.levels[2].dim()));
        rows.push(json!({ "xmod": tag, "levels": sx.dims(), "moore": l.dims }));
    }
    s.fact("objects", rows);
    s
}

fn criterion_nilpotency() -> Sheet {
    let mut s = Sheet::default();
    let z2 = FiniteGroup::cyclic(2);
    let mut classes = vec![];
    for g in [z2.clone(), FiniteGroup::product(&z2, &z2), FiniteGroup::cyclic(6), FiniteGroup::d4(), FiniteGroup::q8()] {
        let c = nilpotency(&zoo::kgroup(&g), 16).unwrap().class;
        let expected = oracle::nilpotency_class(&g);
        s.require(c.is_some() && c == expected, || format!("{}: {c:?} vs {expected:?}", g.name));
        classes.push(json!([g.name, c]));
    }
    s.fact("classes", classes);

    let s3 = FiniteGroup::s3();
    let a = zoo::kgroup(&s3);
    let series = nilpotency(&a, 16).unwrap();
    s.require(series.class.is_none() && series.stabilized, || "kS3 reported nilpotent".into());
    let a3 = sub(&a, &gen(&s3, &["(123)"]));
    s.require(series.terms.last().unwrap().space == a3.space, || "kS3 series does not stop at kA3".into());
    s.fact("kS3 series", series.dims());

    let m = zoo::d4_extension();
    let n = HopfSubalgebra::whole(&m.source);
    let h = hall_check(&m.map, &m.source, &m.target, &n, 16).unwrap();
    s.require(h.hypotheses, || format!("{}", h.report));
    if let (Some(c), Some(d), Some(e)) = (h.c, h.d, h.class_e) {
        let (c, d) = (c as i64, d as i64);
        let bound = c * (c + 1) / 2 * (d - 1) + c;
        s.require(h.bound == Some(bound) && (e as i64) <= bound, || format!("class {e} vs bound {bound}"));
        s.require(Some(e) == oracle::nilpotency_class(&FiniteGroup::d4()), || "class(kD4)".into());
        s.fact("Hall", json!({ "c": c, "d": d, "class": e, "bound": bound }));
    } else {
        s.failures.push("Hall data missing".into());
    }
    s
}

fn criterion_zassenhaus() -> Sheet {
    let mut s = Sheet::default();
    let d4 = FiniteGroup::d4();
    let s3 = FiniteGroup::s3();
    let configs = [
        (d4.clone(), gen(&d4, &["r"]), gen(&d4, &["r^2", "s"]), gen(&d4, &["r^2"]), gen(&d4, &["s"])),
        (s3.clone(), oracle::whole(&s3), gen(&s3, &["(123)"]), gen(&s3, &["(123)"]), gen(&s3, &[])),
        (s3.clone(), oracle::whole(&s3), oracle::whole(&s3), gen(&s3, &["(123)"]), gen(&s3, &[])),
    ];
    let mut rows = vec![];
    for (g, u, v, k, l) in configs {
        let a = zoo::kgroup(&g);
        let z = zassenhaus_verify(&sub(&a, &u), &sub(&a, &v), &sub(&a, &k), &sub(&a, &l)).unwrap();
        s.require(z.report.passed(), || format!("{}", z.report));
        let [x, y, w] = &z.dims_by_degree;
        s.require(x == y && y == w, || format!("{}: per-degree dims {x:?} {y:?} {w:?}", g.name));
        let orders = oracle::zassenhaus_orders(&g, &u, &v, &k, &l);
        let dims = [z.left.dim(), z.middle.dim(), z.right.dim()];
        s.require(dims == orders, || format!("{}: {dims:?} vs oracle {orders:?}", g.name));
        rows.push(json!({ "group": g.name, "dims": dims }));
    }
    s.fact("configurations", rows);
    s
}

type Criterion = (usize, &'static str, fn() -> Sheet, u64);

const CRITERIA: [Criterion; 8] = [
    (1, "axiom suite", criterion_axioms, 5),
    (2, "commuting-lemma equivalence", criterion_commuting_lemma, 10),
    (3, "commutator correctness", criterion_commutators, 30),
    (4, "split-extension equivalence", criterion_split, 10),
    (5, "crossed-module/graph round trip", criterion_graphs, 10),
    (6, "simplicial/Moore", criterion_simplicial, 60),
    (7, "nilpotency and Hall", criterion_nilpotency, 10),
    (8, "Zassenhaus", criterion_zassenhaus, 10),
];

struct Line {
    id: usize,
    title: &'static str,
    passed: bool,
    elapsed: Duration,
    note: String,
}

fn suite() -> (Vec<Line>, String) {
    let mut lines = vec![];
    let mut records = vec![];
    for (id, title, run, limit) in CRITERIA {
        let t = Instant::now();
        let sheet = run();
        let elapsed = t.elapsed();
        let in_time = elapsed < Duration::from_secs(limit);
        let note = match (sheet.failures.first(), in_time) {
            (Some(f), _) => f.lines().next().unwrap_or_default().to_string(),
            (None, false) => format!("over the {limit} s budget"),
            (None, true) => String::new(),
        };
        lines.push(Line { id, title, passed: sheet.failures.is_empty() && in_time, elapsed, note });
        records.push(json!({ "criterion": id, "title": title, "record": sheet.record() }));
    }
    (lines, serde_json::to_string_pretty(&records).unwrap())
}

fn main() {
    let (first, report) = suite();
    let (second, again) = suite();
    let dir = std::path::Path::new(env!("CARGO_TARGET_TMPDIR"));
    std::fs::write(dir.join("acceptance-1.json"), &report).unwrap();
    std::fs::write(dir.join("acceptance-2.json"), &again).unwrap();

    let mut all = true;
    for (a, b) in first.iter().zip(&second) {
        let passed = a.passed && b.passed;
        all &= passed;
        let secs = a.elapsed.max(b.elapsed).as_secs_f64();
        let note = if a.note.is_empty() { &b.note } else { &a.note };
        println!(
            "{} criterion {} {}: {secs:.2} s{}",
            if passed { "PASS" } else { "FAIL" },
            a.id,
            a.title,
            if note.is_empty() { String::new() } else { format!(" ({note})") }
        );
    }
    let same = report == again;
    all &= same;
    println!(
        "{} criterion 9 determinism: {} bytes{}",
        if same { "PASS" } else { "FAIL" },
        report.len(),
        if same { "" } else { " (reports differ)" }
    );
    if !all {
        std::process::exit(1);
    }
}
