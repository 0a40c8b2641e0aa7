//! Axiom checks with basis-vector witnesses.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hopf::ColorHopfAlgebra;
use crate::linalg::{LinMap, Vector};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    Associativity,
    LeftUnit,
    RightUnit,
    Coassociativity,
    LeftCounit,
    RightCounit,
    Compatibility,
    ComultUnit,
    CounitMultiplicative,
    CounitUnit,
    AntipodeLeft,
    AntipodeRight,
    Cocommutativity,
}

impl Axiom {
    pub const ALL: [Axiom; 13] = [
        Axiom::Associativity,
        Axiom::LeftUnit,
        Axiom::RightUnit,
        Axiom::Coassociativity,
        Axiom::LeftCounit,
        Axiom::RightCounit,
        Axiom::Compatibility,
        Axiom::ComultUnit,
        Axiom::CounitMultiplicative,
        Axiom::CounitUnit,
        Axiom::AntipodeLeft,
        Axiom::AntipodeRight,
        Axiom::Cocommutativity,
    ];

    /// Number of basis indices a witness carries.
    pub fn arity(self) -> usize {
        match self {
            Axiom::Associativity => 3,
            Axiom::Compatibility | Axiom::CounitMultiplicative => 2,
            Axiom::ComultUnit | Axiom::CounitUnit => 0,
            _ => 1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Axiom::Associativity => "associativity",
            Axiom::LeftUnit => "left unit",
            Axiom::RightUnit => "right unit",
            Axiom::Coassociativity => "coassociativity",
            Axiom::LeftCounit => "left counit",
            Axiom::RightCounit => "right counit",
            Axiom::Compatibility => "Δ∘m = (m⊗m)(id⊗c⊗id)(Δ⊗Δ)",
            Axiom::ComultUnit => "Δ(1) = 1⊗1",
            Axiom::CounitMultiplicative => "ε multiplicative",
            Axiom::CounitUnit => "ε(1) = 1",
            Axiom::AntipodeLeft => "m(S⊗id)Δ = uε",
            Axiom::AntipodeRight => "m(id⊗S)Δ = uε",
            Axiom::Cocommutativity => "cocommutativity Δ = c∘Δ",
        }
    }
}

/// Basis elements at which an identity fails, with both sides rendered.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub basis: Vec<usize>,
    pub labels: Vec<String>,
    pub lhs: String,
    pub rhs: String,
}

impl Witness {
    pub fn new(basis: Vec<usize>, labels: Vec<String>, lhs: String, rhs: String) -> Self {
        Witness { basis, labels, lhs, rhs }
    }

    pub fn note(labels: Vec<String>, detail: impl Into<String>) -> Self {
        Witness { basis: vec![], labels, lhs: detail.into(), rhs: String::new() }
    }
}

impl std::fmt::Display for Witness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "at ({}): {}", self.labels.join(", "), self.lhs)?;
        if !self.rhs.is_empty() {
            write!(f, " ≠ {}", self.rhs)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Self {
        Check { name: name.into(), passed: true, witness: None }
    }

    pub fn fail(name: impl Into<String>, w: Witness) -> Self {
        Check { name: name.into(), passed: false, witness: Some(w) }
    }

    pub fn from_option(name: impl Into<String>, w: Option<Witness>) -> Self {
        match w {
            None => Check::pass(name),
            Some(w) => Check::fail(name, w),
        }
    }

    pub fn from_bool(name: impl Into<String>, ok: bool, detail: impl FnOnce() -> Witness) -> Self {
        if ok {
            Check::pass(name)
        } else {
            Check::fail(name, detail())
        }
    }
}

/// Ordered list of named checks.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub subject: String,
    pub checks: Vec<Check>,
}

impl ValidationReport {
    pub fn new(subject: impl Into<String>) -> Self {
        ValidationReport { subject: subject.into(), checks: vec![] }
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn extend(&mut self, prefix: &str, other: ValidationReport) {
        for mut c in other.checks {
            c.name = format!("{prefix}{}", c.name);
            self.checks.push(c);
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn into_result(self) -> Result<()> {
        match self.failures().next() {
            None => Ok(()),
            Some(c) => Err(Error::Axiom(format!(
                "{}: {} {}",
                self.subject,
                c.name,
                c.witness.as_ref().map(|w| w.to_string()).unwrap_or_default()
            ))),
        }
    }
}

impl std::fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "{}", self.subject)?;
        for c in &self.checks {
            write!(f, "  [{}] {}", if c.passed { "ok" } else { "FAIL" }, c.name)?;
            if let Some(w) = &c.witness {
                write!(f, " {w}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Both sides of `axiom` at the given basis indices.
pub fn axiom_sides(a: &ColorHopfAlgebra, axiom: Axiom, idx: &[usize]) -> (Vector, Vector) {
    let n = a.dim();
    let e = Vector::basis;
    match axiom {
        Axiom::Associativity => {
            let (i, j, k) = (idx[0], idx[1], idx[2]);
            let lhs = a.mul(&a.mul(&e(i), &e(j)), &e(k));
            let rhs = a.mul(&e(i), &a.mul(&e(j), &e(k)));
            (lhs, rhs)
        }
        Axiom::LeftUnit => (a.mul(a.one(), &e(idx[0])), e(idx[0])),
        Axiom::RightUnit => (a.mul(&e(idx[0]), a.one()), e(idx[0])),
        Axiom::Coassociativity => {
            let d = a.comul(&e(idx[0]));
            let mut l = vec![];
            let mut r = vec![];
            for (k, c) in d.iter() {
                let (x, y) = (k / n, k % n);
                for (p, cp) in a.comul_basis(x) {
                    l.push((p * n + y, cp * c));
                }
                for (p, cp) in a.comul_basis(y) {
                    r.push((x * n * n + p, cp * c));
                }
            }
            (Vector::from_terms(l), Vector::from_terms(r))
        }
        Axiom::LeftCounit | Axiom::RightCounit => {
            let mut t = vec![];
            for (x, y, c) in a.sweedler_basis(idx[0]) {
                if axiom == Axiom::LeftCounit {
                    t.push((y, c * a.counit_basis(x)));
                } else {
                    t.push((x, c * a.counit_basis(y)));
                }
            }
            (Vector::from_terms(t), e(idx[0]))
        }
        Axiom::Compatibility => {
            let (i, j) = (idx[0], idx[1]);
            let lhs = a.comul(&a.mul(&e(i), &e(j)));
            let mut t = vec![];
            for (a1, a2, c) in a.sweedler_basis(i) {
                for (b1, b2, d) in a.sweedler_basis(j) {
                    let s = &(c * d) * a.phi(a.deg(a2), a.deg(b1));
                    for (p, x) in a.mul_basis(a1, b1) {
                        for (q, y) in a.mul_basis(a2, b2) {
                            t.push((p * n + q, &(x * y) * &s));
                        }
                    }
                }
            }
            (lhs, Vector::from_terms(t))
        }
        Axiom::ComultUnit => (a.comul(a.one()), a.one().tensor(a.one(), n)),
        Axiom::CounitMultiplicative => {
            let (i, j) = (idx[0], idx[1]);
            let lhs = a.counit(&a.mul(&e(i), &e(j)));
            let rhs = a.counit_basis(i) * a.counit_basis(j);
            (Vector::monomial(0, lhs), Vector::monomial(0, rhs))
        }
        Axiom::CounitUnit => (Vector::monomial(0, a.counit(a.one())), Vector::basis(0)),
        Axiom::AntipodeLeft | Axiom::AntipodeRight => {
            let i = idx[0];
            let mut acc = Vector::zero();
            for (x, y, c) in a.sweedler_basis(i) {
                let p = if axiom == Axiom::AntipodeLeft {
                    a.mul(&a.antipode(&e(x)), &e(y))
                } else {
                    a.mul(&e(x), &a.antipode(&e(y)))
                };
                acc = acc.add_scaled(&p, c);
            }
            (acc, a.one().scale(a.counit_basis(i)))
        }
        Axiom::Cocommutativity => {
            let d = a.comul(&e(idx[0]));
            let flipped = Vector::from_terms(
                d.iter()
                    .map(|(k, c)| {
                        let (x, y) = (k / n, k % n);
                        (y * n + x, c * a.phi(a.deg(x), a.deg(y)))
                    })
                    .collect(),
            );
            (d, flipped)
        }
    }
}

fn render_side(a: &ColorHopfAlgebra, axiom: Axiom, v: &Vector) -> String {
    let n = a.dim();
    let labels = a.labels();
    match axiom {
        Axiom::Coassociativity => v.render(&|k| {
            format!("{}⊗{}⊗{}", labels[k / (n * n)], labels[(k / n) % n], labels[k % n])
        }),
        Axiom::Compatibility | Axiom::ComultUnit | Axiom::Cocommutativity => a.render_pair(v),
        Axiom::CounitMultiplicative | Axiom::CounitUnit => v.get(0).to_string(),
        _ => a.render(v),
    }
}

/// Witness if `axiom` fails at `idx`.
pub fn axiom_witness(a: &ColorHopfAlgebra, axiom: Axiom, idx: &[usize]) -> Option<Witness> {
    let (l, r) = axiom_sides(a, axiom, idx);
    if l == r {
        return None;
    }
    Some(Witness::new(
        idx.to_vec(),
        idx.iter().map(|&i| a.label(i).to_string()).collect(),
        render_side(a, axiom, &l),
        render_side(a, axiom, &r),
    ))
}

fn first_failure(a: &ColorHopfAlgebra, axiom: Axiom) -> Option<Witness> {
    let n = a.dim();
    match axiom.arity() {
        0 => axiom_witness(a, axiom, &[]),
        1 => (0..n).find_map(|i| axiom_witness(a, axiom, &[i])),
        2 => (0..n * n).find_map(|k| axiom_witness(a, axiom, &[k / n, k % n])),
        _ => {
            // Reuse the products e_i e_j across k.
            for i in 0..n {
                for j in 0..n {
                    let ij = Vector::from_canonical(a.mul_basis(i, j).to_vec());
                    for k in 0..n {
                        let lhs = a.mul(&ij, &Vector::basis(k));
                        let jk = a.mul_basis(j, k);
                        let mut t = vec![];
                        for (p, c) in jk {
                            for (q, d) in a.mul_basis(i, *p) {
                                t.push((*q, c * d));
                            }
                        }
                        if lhs != Vector::from_terms(t) {
                            return axiom_witness(a, axiom, &[i, j, k]);
                        }
                    }
                }
            }
            None
        }
    }
}

/// Check every Hopf axiom on basis elements.
pub fn verify_hopf(a: &ColorHopfAlgebra) -> ValidationReport {
    let mut rep = ValidationReport::new(format!("verify_hopf {}", a.name()));
    for ax in Axiom::ALL {
        rep.push(Check::from_option(ax.name(), first_failure(a, ax)));
    }
    rep
}

/// Check that `f: A → B` is a Hopf morphism.
pub fn verify_morphism(f: &LinMap, a: &ColorHopfAlgebra, b: &ColorHopfAlgebra) -> ValidationReport {
    let mut rep = ValidationReport::new(format!("verify_morphism {} → {}", a.name(), b.name()));
    let (n, m) = (a.dim(), b.dim());
    if f.cols() != n || f.rows() != m {
        rep.push(Check::fail(
            "shape",
            Witness::note(vec![], format!("{}×{} for {n} → {m}", f.rows(), f.cols())),
        ));
        return rep;
    }
    if !a.same_context(b) {
        rep.push(Check::fail("context", Witness::note(vec![], "different color contexts")));
        return rep;
    }
    rep.push(Check::pass("shape"));
    let graded = f.degree_violation(a.degrees(), b.degrees()).map(|(i, j)| {
        Witness::note(vec![a.label(j).into()], format!("image has a {} term", b.label(i)))
    });
    rep.push(Check::from_option("graded", graded));

    let img: Vec<Vector> = (0..n).map(|j| f.col_vec(j)).collect();
    let mult = (|| {
        for i in 0..n {
            for j in 0..n {
                let lhs = f.apply(&Vector::from_terms(a.mul_basis(i, j).to_vec()));
                let rhs = b.mul(&img[i], &img[j]);
                if lhs != rhs {
                    return Some(Witness::new(
                        vec![i, j],
                        vec![a.label(i).into(), a.label(j).into()],
                        b.render(&lhs),
                        b.render(&rhs),
                    ));
                }
            }
        }
        None
    })();
    rep.push(Check::from_option("f∘m = m'∘(f⊗f)", mult));

    let fu = f.apply(a.one());
    rep.push(Check::from_bool("f(1) = 1", fu == *b.one(), || {
        Witness::new(vec![], vec!["1".into()], b.render(&fu), b.render(b.one()))
    }));

    let comult = (0..n).find_map(|j| {
        let lhs = b.comul(&img[j]);
        let d = Vector::from_terms(a.comul_basis(j).to_vec());
        let rhs = tensor_apply_same(f, &d, n, m);
        (lhs != rhs).then(|| {
            Witness::new(vec![j], vec![a.label(j).into()], b.render_pair(&lhs), b.render_pair(&rhs))
        })
    });
    rep.push(Check::from_option("Δ'∘f = (f⊗f)∘Δ", comult));

    let counit = (0..n).find_map(|j| {
        let lhs = b.counit(&img[j]);
        let rhs = a.counit_basis(j).clone();
        (lhs != rhs).then(|| {
            Witness::new(vec![j], vec![a.label(j).into()], lhs.to_string(), rhs.to_string())
        })
    });
    rep.push(Check::from_option("ε'∘f = ε", counit));
    rep
}

/// (f⊗f)(v) for `v` in A⊗A.
pub fn tensor_apply_same(f: &LinMap, v: &Vector, n: usize, m: usize) -> Vector {
    let mut t = vec![];
    for (k, c) in v.iter() {
        let (x, y) = (k / n, k % n);
        for (p, cp) in f.col(x) {
            for (q, cq) in f.col(y) {
                t.push((p * m + q, &(cp * cq) * c));
            }
        }
    }
    Vector::from_terms(t)
}

/// Checks that hold in every cocommutative color Hopf algebra and are
/// consequences of the axioms: Δ∘S = (S⊗S)∘Δ and S∘m = m∘(S⊗S)∘c.
pub fn derived_identities(a: &ColorHopfAlgebra) -> ValidationReport {
    let n = a.dim();
    let mut rep = ValidationReport::new(format!("derived identities {}", a.name()));
    let s = a.antipode_map();
    let w = (0..n).find_map(|i| {
        let lhs = a.comul(&a.antipode(&Vector::basis(i)));
        let rhs = tensor_apply_same(s, &Vector::from_terms(a.comul_basis(i).to_vec()), n, n);
        (lhs != rhs).then(|| {
            Witness::new(vec![i], vec![a.label(i).into()], a.render_pair(&lhs), a.render_pair(&rhs))
        })
    });
    rep.push(Check::from_option("Δ∘S = (S⊗S)∘Δ", w));
    let w = (|| {
        for i in 0..n {
            for j in 0..n {
                let lhs = a.antipode(&Vector::from_terms(a.mul_basis(i, j).to_vec()));
                let sign: &Scalar = a.phi(a.deg(i), a.deg(j));
                let rhs = a
                    .mul(&a.antipode(&Vector::basis(j)), &a.antipode(&Vector::basis(i)))
                    .scale(sign);
                if lhs != rhs {
                    return Some(Witness::new(
                        vec![i, j],
                        vec![a.label(i).into(), a.label(j).into()],
                        a.render(&lhs),
                        a.render(&rhs),
                    ));
                }
            }
        }
        None
    })();
    rep.push(Check::from_option("S∘m = m∘(S⊗S)∘c", w));
    rep
}

/// Whether S∘S = id; not an axiom, recorded for information.
pub fn antipode_is_involutive(a: &ColorHopfAlgebra) -> bool {
    let s = a.antipode_map();
    s.compose(s) == LinMap::identity(a.dim())
}
