//! Adjoint action laws, commutators, nilpotency, joins and the Zassenhaus
//! isomorphisms.

use std::sync::Arc;

use crate::builders::hopf_tensor_product;
use crate::error::{Error, Result};
use crate::hopf::{ColorHopfAlgebra, Hopf};
use crate::linalg::{LinMap, Subspace, Vector};
use crate::scalar::Scalar;
use crate::sub::{
    closure, hopf_kernel, normality_witness, quotient_by_normal, ClosureMode,
    HopfSubalgebra, Quotient,
};
use crate::verify::{verify_morphism, Check, ValidationReport, Witness};
use crate::zoo::{oracle, FiniteGroup};

/// Σ φ(|x₂|,|y₁|) x₁ y₁ S(x₂) S(y₂) on basis elements.
pub fn commutator_basis(a: &ColorHopfAlgebra, i: usize, j: usize) -> Vector {
    let mut terms = vec![];
    for (x1, x2, c) in a.sweedler_basis(i) {
        let sx2 = a.antipode(&Vector::basis(x2));
        for (y1, y2, d) in a.sweedler_basis(j) {
            let s = &(c * d) * a.phi(a.deg(x2), a.deg(y1));
            let sy2 = a.antipode(&Vector::basis(y2));
            let w = a.mul_all(&[&Vector::basis(x1), &Vector::basis(y1), &sx2, &sy2]);
            for (k, e) in w.iter() {
                terms.push((k, e * &s));
            }
        }
    }
    Vector::from_terms(terms)
}

/// [x,y], extended bilinearly.
pub fn commutator_element(a: &ColorHopfAlgebra, x: &Vector, y: &Vector) -> Vector {
    let mut terms = vec![];
    for (i, c) in x.iter() {
        for (j, d) in y.iter() {
            let cd = c * d;
            for (k, e) in commutator_basis(a, i, j).iter() {
                terms.push((k, e * &cd));
            }
        }
    }
    Vector::from_terms(terms)
}

/// Module, antipode, multiplicativity and comultiplicativity laws of ξ.
pub fn adjoint_laws_check(a: &ColorHopfAlgebra) -> ValidationReport {
    let n = a.dim();
    let e = Vector::basis;
    let ad = |u: &Vector, v: &Vector| a.adjoint(u, v);
    let mut rep = ValidationReport::new(format!("adjoint action of {}", a.name()));

    let mut w = None;
    'module: for i in 0..n {
        let l = ad(a.one(), &e(i));
        if l != e(i) {
            w = Some(Witness::new(
                vec![i],
                vec![a.label(i).into()],
                format!("1 ▷ {} = {}", a.label(i), a.render(&l)),
                a.label(i).into(),
            ));
            break;
        }
        for j in 0..n {
            let ab = a.mul(&e(i), &e(j));
            for k in 0..n {
                let lhs = ad(&e(i), &ad(&e(j), &e(k)));
                let rhs = ad(&ab, &e(k));
                if lhs != rhs {
                    w = Some(Witness::new(
                        vec![i, j, k],
                        vec![a.label(i).into(), a.label(j).into(), a.label(k).into()],
                        a.render(&lhs),
                        a.render(&rhs),
                    ));
                    break 'module;
                }
            }
        }
    }
    rep.push(Check::from_option("a ▷ (b ▷ c) = ab ▷ c, 1 ▷ a = a", w));

    let mut w = None;
    'anti: for i in 0..n {
        for j in 0..n {
            let lhs = a.antipode(&ad(&e(i), &e(j)));
            let rhs = ad(&e(i), &a.antipode(&e(j)));
            if lhs != rhs {
                w = Some(Witness::new(
                    vec![i, j],
                    vec![a.label(i).into(), a.label(j).into()],
                    a.render(&lhs),
                    a.render(&rhs),
                ));
                break 'anti;
            }
        }
    }
    rep.push(Check::from_option("S(a ▷ b) = a ▷ S(b)", w));

    let mut w = None;
    'mult: for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let lhs = ad(&e(i), &a.mul(&e(j), &e(k)));
                let mut rhs = Vector::zero();
                for (a1, a2, c) in a.sweedler_basis(i) {
                    let s = c * a.phi(a.deg(a2), a.deg(j));
                    let p = a.mul(&ad(&e(a1), &e(j)), &ad(&e(a2), &e(k)));
                    rhs = rhs.add_scaled(&p, &s);
                }
                if lhs != rhs {
                    w = Some(Witness::new(
                        vec![i, j, k],
                        vec![a.label(i).into(), a.label(j).into(), a.label(k).into()],
                        a.render(&lhs),
                        a.render(&rhs),
                    ));
                    break 'mult;
                }
            }
        }
    }
    rep.push(Check::from_option("a ▷ bc = φ(|a₂|,|b|)(a₁ ▷ b)(a₂ ▷ c)", w));

    let mut w = None;
    'comult: for i in 0..n {
        for j in 0..n {
            let lhs = a.comul(&ad(&e(i), &e(j)));
            let mut rhs = Vector::zero();
            for (a1, a2, c) in a.sweedler_basis(i) {
                for (b1, b2, d) in a.sweedler_basis(j) {
                    let s = &(c * d) * a.phi(a.deg(a2), a.deg(b1));
                    let t = ad(&e(a1), &e(b1)).tensor(&ad(&e(a2), &e(b2)), n);
                    rhs = rhs.add_scaled(&t, &s);
                }
            }
            if lhs != rhs {
                w = Some(Witness::new(
                    vec![i, j],
                    vec![a.label(i).into(), a.label(j).into()],
                    a.render_pair(&lhs),
                    a.render_pair(&rhs),
                ));
                break 'comult;
            }
        }
    }
    rep.push(Check::from_option("Δ(a ▷ b) = φ(|a₂|,|b₁|)(a₁ ▷ b₁)⊗(a₂ ▷ b₂)", w));
    rep
}

/// f(a ▷ b) = f(a) ▷ f(b) on basis pairs.
pub fn adjoint_naturality(f: &LinMap, a: &ColorHopfAlgebra, b: &ColorHopfAlgebra) -> Check {
    let n = a.dim();
    for i in 0..n {
        for j in 0..n {
            let lhs = f.apply(&a.adjoint(&Vector::basis(i), &Vector::basis(j)));
            let rhs = b.adjoint(&f.col_vec(i), &f.col_vec(j));
            if lhs != rhs {
                return Check::fail(
                    "f(a ▷ b) = f(a) ▷ f(b)",
                    Witness::new(
                        vec![i, j],
                        vec![a.label(i).into(), a.label(j).into()],
                        b.render(&lhs),
                        b.render(&rhs),
                    ),
                );
            }
        }
    }
    Check::pass("f(a ▷ b) = f(a) ▷ f(b)")
}

fn require_normal(x: &HopfSubalgebra, what: &str) -> Result<()> {
    match normality_witness(&x.ambient, &x.space) {
        Some(w) => Err(Error::NotNormal(format!("{what}: {w}"))),
        None => Ok(()),
    }
}

/// Span of [x_i, y_j] over basis pairs, before closure.
pub fn commutator_span(x: &HopfSubalgebra, y: &HopfSubalgebra) -> Vec<Vector> {
    let a = &x.ambient;
    let mut out = vec![];
    for u in x.basis() {
        for v in y.basis() {
            out.push(commutator_element(a, u, v));
        }
    }
    out
}

/// [X,Y]: the subalgebra generated by all [x,y]. The Hopf and normality
/// properties of the result are checked, not assumed.
pub fn commutator_subalgebra(x: &HopfSubalgebra, y: &HopfSubalgebra) -> Result<HopfSubalgebra> {
    if x.ambient.dim() != y.ambient.dim() || !x.ambient.same_context(&y.ambient) {
        return Err(Error::ContextMismatch);
    }
    require_normal(x, "X")?;
    require_normal(y, "Y")?;
    let a = &x.ambient;
    let gens = commutator_span(x, y);
    let space = closure(a, &gens, ClosureMode::Algebra);
    let sub = HopfSubalgebra::new(a.clone(), space)
        .map_err(|e| Error::Disagreement(format!("[X,Y] is not a Hopf subalgebra: {e}")))?;
    if let Some(w) = normality_witness(a, &sub.space) {
        return Err(Error::Disagreement(format!("[X,Y] is not normal: {w}")));
    }
    Ok(sub)
}

/// Outcome of the four equivalent commuting conditions.
#[derive(Clone, Debug)]
pub struct HuqCommute {
    pub commute: bool,
    /// conditions (1)-(4) individually
    pub conditions: [bool; 4],
    /// p = m∘(i⊗j): X⊗Y → A in the RREF bases of X and Y
    pub p: Option<LinMap>,
    pub witness: Option<Witness>,
}

fn homogeneous_basis(x: &HopfSubalgebra) -> Vec<(Vector, usize)> {
    x.basis().iter().map(|b| (b.clone(), x.ambient.degree_of(b).expect("homogeneous basis"))).collect()
}

fn pair_witness(a: &ColorHopfAlgebra, x: &Vector, y: &Vector, lhs: &Vector, rhs: &Vector) -> Witness {
    Witness::new(
        vec![],
        vec![a.render(x), a.render(y)],
        a.render(lhs),
        a.render(rhs),
    )
}

/// (1): m∘(i⊗j) is a Hopf morphism X⊗Y → A. Multiplicativity is checked
/// against the algebra generators x⊗1 and 1⊗y, which suffices.
fn condition_morphism(
    a: &ColorHopfAlgebra,
    xs: &[(Vector, usize)],
    ys: &[(Vector, usize)],
) -> Option<Witness> {
    let n = a.dim();
    let one = a.one().clone();
    for (x, _) in xs {
        for (y, dy) in ys {
            let u = a.mul(x, y);
            // (x⊗y)(x'⊗1) = φ(|y|,|x'|) xx'⊗y
            for (x2, dx2) in xs {
                let lhs = a.mul(&a.mul(x, x2), y).scale(a.phi(*dy, *dx2));
                let rhs = a.mul(&u, x2);
                if lhs != rhs {
                    return Some(Witness::note(
                        vec![a.render(x), a.render(y), a.render(x2)],
                        format!("p((x⊗y)(x'⊗1)) = {} but p(x⊗y)p(x'⊗1) = {}", a.render(&lhs), a.render(&rhs)),
                    ));
                }
            }
            // (x⊗y)(1⊗y') = x⊗yy'
            for (y2, _) in ys {
                let lhs = a.mul(x, &a.mul(y, y2));
                let rhs = a.mul(&u, y2);
                if lhs != rhs {
                    return Some(Witness::note(
                        vec![a.render(x), a.render(y), a.render(y2)],
                        "p((x⊗y)(1⊗y')) ≠ p(x⊗y)p(1⊗y')".to_string(),
                    ));
                }
            }
            // Δ(xy) = φ(|x₂|,|y₁|) x₁y₁ ⊗ x₂y₂
            let lhs = a.comul(&u);
            let mut rhs = Vector::zero();
            for (x1, x2, c) in a.sweedler(x) {
                for (y1, y2, d) in a.sweedler(y) {
                    let s = &(&c * &d) * a.phi(a.deg(x2), a.deg(y1));
                    let l = a.mul(&Vector::basis(x1), &Vector::basis(y1));
                    let r = a.mul(&Vector::basis(x2), &Vector::basis(y2));
                    rhs = rhs.add_scaled(&l.tensor(&r, n), &s);
                }
            }
            if lhs != rhs {
                return Some(Witness::note(
                    vec![a.render(x), a.render(y)],
                    format!("Δ(p(x⊗y)) = {} but (p⊗p)Δ(x⊗y) = {}", a.render_pair(&lhs), a.render_pair(&rhs)),
                ));
            }
            if a.counit(&u) != &a.counit(x) * &a.counit(y) {
                return Some(Witness::note(vec![a.render(x), a.render(y)], "ε(xy) ≠ ε(x)ε(y)"));
            }
        }
    }
    if a.mul(&one, &one) != one {
        return Some(Witness::note(vec![], "p(1⊗1) ≠ 1"));
    }
    None
}

/// Evaluate the four commuting conditions for X, Y ⊆ A independently and
/// insist that they agree.
pub fn huq_commute(x: &HopfSubalgebra, y: &HopfSubalgebra) -> Result<HuqCommute> {
    if x.ambient.dim() != y.ambient.dim() || !x.ambient.same_context(&y.ambient) {
        return Err(Error::ContextMismatch);
    }
    let a = &*x.ambient;
    let xs = homogeneous_basis(x);
    let ys = homogeneous_basis(y);

    let w1 = condition_morphism(a, &xs, &ys);

    let mut w2 = None;
    'c2: for (u, du) in &xs {
        for (v, dv) in &ys {
            let lhs = a.mul(u, v);
            let rhs = a.mul(v, u).scale(a.phi(*du, *dv));
            if lhs != rhs {
                w2 = Some(pair_witness(a, u, v, &lhs, &rhs));
                break 'c2;
            }
        }
    }

    let mut w3 = None;
    'c3: for (u, _) in &xs {
        for (v, _) in &ys {
            let lhs = commutator_element(a, u, v);
            let rhs = a.one().scale(&(&a.counit(u) * &a.counit(v)));
            if lhs != rhs {
                w3 = Some(pair_witness(a, u, v, &lhs, &rhs));
                break 'c3;
            }
        }
    }

    let mut w4 = None;
    'c4: for (u, _) in &xs {
        for (v, _) in &ys {
            let lhs = a.adjoint(u, v);
            let rhs = v.scale(&a.counit(u));
            if lhs != rhs {
                w4 = Some(pair_witness(a, u, v, &lhs, &rhs));
                break 'c4;
            }
        }
    }

    let conditions = [w1.is_none(), w2.is_none(), w3.is_none(), w4.is_none()];
    if conditions.iter().any(|&c| c != conditions[0]) {
        return Err(Error::Disagreement(format!(
            "commuting conditions disagree: {conditions:?} for X = {}, Y = {}",
            span_label(x),
            span_label(y)
        )));
    }
    let commute = conditions[0];
    let p = commute.then(|| {
        let (dx, dy) = (xs.len(), ys.len());
        LinMap::from_fn(a.dim(), dx * dy, |k| a.mul(&xs[k / dy].0, &ys[k % dy].0))
    });
    Ok(HuqCommute { commute, conditions, p, witness: w2 })
}

fn span_label(x: &HopfSubalgebra) -> String {
    let names: Vec<String> = x.basis().iter().map(|b| x.ambient.render(b)).collect();
    format!("span{{{}}}", names.join(", "))
}

/// The inclusion of the standalone X⊗Y into A as a checked Hopf morphism
/// (small X, Y only).
pub fn huq_morphism_report(x: &HopfSubalgebra, y: &HopfSubalgebra, p: &LinMap) -> Result<ValidationReport> {
    let (xa, _) = x.to_algebra("X")?;
    let (ya, _) = y.to_algebra("Y")?;
    let t = hopf_tensor_product(&xa, &ya)?;
    Ok(verify_morphism(p, &t, &x.ambient))
}

/// Subalgebra of the quotient spanned by the image of X.
pub fn image_in_quotient(q: &Quotient, x: &HopfSubalgebra) -> HopfSubalgebra {
    let space = Subspace::from_vectors(q.algebra.dim(), x.basis().iter().map(|b| q.project(b)));
    HopfSubalgebra { ambient: q.algebra.clone(), space }
}

/// Images of X and Y commute in A/A[X,Y]⁺.
pub fn commute_in_quotient(x: &HopfSubalgebra, y: &HopfSubalgebra, c: &HopfSubalgebra) -> Result<bool> {
    let q = quotient_by_normal(&x.ambient, c, "A/A[X,Y]⁺")?;
    let qx = image_in_quotient(&q, x);
    let qy = image_in_quotient(&q, y);
    Ok(huq_commute(&qx, &qy)?.commute)
}

/// Elements of Γ lying in a Hopf subalgebra of kΓ spanned by group-likes.
pub fn group_support(x: &HopfSubalgebra) -> Result<Vec<usize>> {
    let a = &x.ambient;
    let elems: Vec<usize> = (0..a.dim()).filter(|&g| x.contains(&Vector::basis(g))).collect();
    if elems.len() != x.dim() {
        return Err(Error::InvalidInput("subalgebra is not spanned by group elements".into()));
    }
    Ok(elems)
}

fn check_group_algebra(a: &ColorHopfAlgebra, g: &FiniteGroup) -> Result<()> {
    let n = g.order();
    if a.dim() != n {
        return Err(Error::InvalidInput(format!("{} is not a group algebra of {}", a.name(), g.name)));
    }
    for i in 0..n {
        if !a.is_group_like(&Vector::basis(i)) {
            return Err(Error::InvalidInput(format!("{} is not group-like", a.label(i))));
        }
        for j in 0..n {
            if a.mul_basis(i, j) != [(g.mul(i, j), Scalar::one())] {
                return Err(Error::InvalidInput(format!("{} does not follow the table of {}", a.name(), g.name)));
            }
        }
    }
    Ok(())
}

/// Minimality of [X,Y] among normal Hopf subalgebras kZ with commuting
/// images, certified by enumerating normal subgroups of Γ.
pub fn huq_minimality_certify(x: &HopfSubalgebra, y: &HopfSubalgebra, g: &FiniteGroup) -> Result<bool> {
    let a = &x.ambient;
    check_group_algebra(a, g)?;
    if g.order() > 24 {
        return Err(Error::TooLarge("minimality is only certified for |Γ| ≤ 24".into()));
    }
    let c = commutator_subalgebra(x, y)?;
    let n_set = group_support(x)?;
    let m_set = group_support(y)?;
    let expected = oracle::commutator(g, &n_set.into_iter().collect(), &m_set.into_iter().collect());
    let mut minimal: Option<Subspace> = None;
    for z in oracle::normal_subgroups(g) {
        let elems: Vec<usize> = z.iter().copied().collect();
        let kz = HopfSubalgebra::new(a.clone(), crate::zoo::subgroup_span(a, &elems))?;
        let q = quotient_by_normal(a, &kz, "A/AkZ⁺")?;
        let commute = huq_commute(&image_in_quotient(&q, x), &image_in_quotient(&q, y))?.commute;
        if kz.space.contains_space(&c.space) != commute {
            return Ok(false);
        }
        if commute && minimal.as_ref().is_none_or(|m| m.dim() > kz.dim()) {
            minimal = Some(kz.space.clone());
        }
    }
    let z0 = crate::zoo::subgroup_span(a, &expected.into_iter().collect::<Vec<_>>());
    Ok(minimal.as_ref() == Some(&c.space) && c.space == z0)
}

/// X₀ = A, X_{n+1} = [A, X_n].
#[derive(Clone, Debug)]
pub struct NilpotencySeries {
    pub terms: Vec<HopfSubalgebra>,
    /// least n with X_n = k
    pub class: Option<usize>,
    /// the series became constant above k before reaching the bound
    pub stabilized: bool,
}

impl NilpotencySeries {
    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(|t| t.dim()).collect()
    }
}

pub fn nilpotency(a: &Hopf, bound: usize) -> Result<NilpotencySeries> {
    if bound == 0 {
        return Err(Error::InvalidInput("nilpotency bound must be at least 1".into()));
    }
    let whole = HopfSubalgebra::whole(a);
    let mut terms = vec![whole.clone()];
    loop {
        let last = terms.last().unwrap();
        if last.is_trivial() {
            let class = terms.len() - 1;
            return Ok(NilpotencySeries { terms, class: Some(class), stabilized: false });
        }
        if terms.len() > bound {
            return Ok(NilpotencySeries { terms, class: None, stabilized: false });
        }
        let next = commutator_subalgebra(&whole, last)?;
        if !last.space.contains_space(&next.space) {
            return Err(Error::Disagreement("commutator series is not descending".into()));
        }
        let stable = next.space == last.space;
        terms.push(next);
        if stable && !terms.last().unwrap().is_trivial() {
            return Ok(NilpotencySeries { terms, class: None, stabilized: true });
        }
    }
}

#[derive(Clone, Debug)]
pub struct HallReport {
    pub hypotheses: bool,
    pub report: ValidationReport,
    /// class of N
    pub c: Option<usize>,
    /// class of B
    pub d: Option<usize>,
    pub class_e: Option<usize>,
    pub bound: Option<i64>,
    pub class_bound_satisfied: Option<bool>,
}

/// Hall's criterion for p: E → B surjective and N normal in E with
/// Hker(p) ⊆ [N,N]: class(E) ≤ c(c+1)/2·(d−1)+c.
pub fn hall_check(p: &LinMap, e: &Hopf, b: &Hopf, n: &HopfSubalgebra, bound: usize) -> Result<HallReport> {
    let mut rep = ValidationReport::new(format!("Hall criterion for {} → {}", e.name(), b.name()));
    let morph = verify_morphism(p, e, b);
    rep.push(Check::from_bool("p is a Hopf morphism", morph.passed(), || {
        Witness::note(vec![], morph.failures().map(|c| c.name.clone()).collect::<Vec<_>>().join(", "))
    }));
    rep.push(Check::from_bool("p is surjective", p.is_surjective(), || {
        Witness::note(vec![], format!("rank {} < {}", p.rank(), b.dim()))
    }));
    rep.push(Check::from_option("N is normal in E", normality_witness(e, &n.space)));
    let nn = commutator_subalgebra(n, n)?;
    let ker = hopf_kernel(p, e, b);
    rep.push(Check::from_bool("Hker(p) ⊆ [N,N]", nn.space.contains_space(&ker), || {
        Witness::note(vec![], format!("dim Hker(p) = {}, dim [N,N] = {}", ker.dim(), nn.dim()))
    }));
    let (n_alg, _) = n.to_algebra("N")?;
    let n_alg = Arc::new(n_alg);
    let c = nilpotency(&n_alg, bound)?.class;
    let d = nilpotency(b, bound)?.class;
    rep.push(Check::from_bool("N nilpotent", c.is_some(), || Witness::note(vec![], "no class within bound")));
    rep.push(Check::from_bool("B nilpotent", d.is_some(), || Witness::note(vec![], "no class within bound")));
    let hypotheses = rep.passed();
    if !hypotheses {
        return Ok(HallReport { hypotheses, report: rep, c, d, class_e: None, bound: None, class_bound_satisfied: None });
    }
    let (ci, di) = (c.unwrap() as i64, d.unwrap() as i64);
    let value = ci * (ci + 1) / 2 * (di - 1) + ci;
    let class_e = nilpotency(e, bound)?.class;
    let ok = class_e.is_some_and(|k| k as i64 <= value);
    rep.push(Check::from_bool("class(E) ≤ c(c+1)/2·(d−1)+c", ok, || {
        Witness::note(vec![], format!("class(E) = {class_e:?}, bound = {value}"))
    }));
    Ok(HallReport { hypotheses, report: rep, c, d, class_e, bound: Some(value), class_bound_satisfied: Some(ok) })
}

/// K normal in U: ξ(u ⊗ k) ∈ K for u ∈ U, k ∈ K.
pub fn normal_in_witness(k: &HopfSubalgebra, u: &HopfSubalgebra) -> Option<Witness> {
    let a = &k.ambient;
    for x in u.basis() {
        for y in k.basis() {
            let v = a.adjoint(x, y);
            if !k.contains(&v) {
                return Some(Witness::new(
                    vec![],
                    vec![a.render(x), a.render(y)],
                    format!("{} ▷ {} = {}", a.render(x), a.render(y), a.render(&v)),
                    "outside K".into(),
                ));
            }
        }
    }
    None
}

fn product_space(k: &HopfSubalgebra, m: &HopfSubalgebra) -> Subspace {
    let a = &k.ambient;
    let mut vs = vec![];
    for x in k.basis() {
        for y in m.basis() {
            vs.push(a.mul(x, y));
        }
    }
    Subspace::from_vectors(a.dim(), vs)
}

/// KM for K normal in a host U containing K and M. Checks KM = MK, that KM
/// is a Hopf subalgebra and that it is the Hopf closure of K ∪ M.
pub fn join(k: &HopfSubalgebra, m: &HopfSubalgebra, host: &HopfSubalgebra) -> Result<HopfSubalgebra> {
    if !host.space.contains_space(&k.space) || !host.space.contains_space(&m.space) {
        return Err(Error::InvalidInput("K and M must lie in the host".into()));
    }
    if let Some(w) = normal_in_witness(k, host) {
        return Err(Error::NotNormal(format!("K is not normal in the host: {w}")));
    }
    let a = &k.ambient;
    let km = product_space(k, m);
    let mk = product_space(m, k);
    if km != mk {
        return Err(Error::Disagreement("KM ≠ MK".into()));
    }
    let sub = HopfSubalgebra::new(a.clone(), km)
        .map_err(|e| Error::Disagreement(format!("KM is not a Hopf subalgebra: {e}")))?;
    let mut gens = k.basis().to_vec();
    gens.extend(m.basis().iter().cloned());
    if closure(a, &gens, ClosureMode::Hopf) != sub.space {
        return Err(Error::Disagreement("KM is not the supremum of K and M".into()));
    }
    Ok(sub)
}

/// Standalone algebra on a Hopf subalgebra together with a way to express
/// ambient subspaces in its coordinates.
struct Local {
    host: HopfSubalgebra,
    alg: Hopf,
}

impl Local {
    fn new(host: &HopfSubalgebra, name: &str) -> Result<Self> {
        let (alg, _) = host.to_algebra(name)?;
        Ok(Local { host: host.clone(), alg: Arc::new(alg) })
    }

    fn coords(&self, v: &Vector) -> Vector {
        self.host.coordinates(v).expect("vector lies in the host")
    }

    fn sub(&self, x: &HopfSubalgebra) -> Result<HopfSubalgebra> {
        let space = Subspace::from_vectors(self.alg.dim(), x.basis().iter().map(|b| self.coords(b)));
        HopfSubalgebra::new(self.alg.clone(), space)
    }

    fn quotient(&self, x: &HopfSubalgebra, name: &str) -> Result<Quotient> {
        quotient_by_normal(&self.alg, &self.sub(x)?, name)
    }
}

#[derive(Clone, Debug)]
pub struct ZassenhausReport {
    pub left: Hopf,
    pub middle: Hopf,
    pub right: Hopf,
    /// middle → left
    pub to_left: LinMap,
    /// middle → right
    pub to_right: LinMap,
    pub dims_by_degree: [Vec<usize>; 3],
    pub report: ValidationReport,
}

/// Induced map W/I → T/J from the inclusion W ⊆ T followed by projection.
fn induced_map(w: &Local, mid: &Quotient, t: &Local, target: &Quotient, rep: &mut ValidationReport, side: &str) -> LinMap {
    let wa = &w.alg;
    // ambient basis of W, then coordinates in T, then project
    let through = |v: &Vector| -> Vector {
        let mut amb = Vector::zero();
        for (k, c) in v.iter() {
            amb = amb.add_scaled(&w.host.basis()[k], c);
        }
        target.project(&t.coords(&amb))
    };
    let mut bad = None;
    for u in mid.ideal.basis() {
        let img = through(u);
        if !img.is_zero() {
            bad = Some(Witness::note(
                vec![wa.render(u)],
                format!("ideal element maps to {}", target.algebra.render(&img)),
            ));
            break;
        }
    }
    rep.push(Check::from_option(format!("{side}: well-defined"), bad));
    let f = LinMap::from_fn(target.algebra.dim(), mid.algebra.dim(), |r| {
        through(&Vector::basis(mid.representatives[r]))
    });
    let morph = verify_morphism(&f, &mid.algebra, &target.algebra);
    rep.extend(&format!("{side}: "), morph);
    let bij = f.rows() == f.cols() && f.rank() == f.rows();
    rep.push(Check::from_bool(format!("{side}: bijective"), bij, || {
        Witness::note(vec![], format!("{}×{} of rank {}", f.rows(), f.cols(), f.rank()))
    }));
    f
}

/// K(U∩V)/K(U∩V)(K(L∩U))⁺ ≅ (U∩V)/(U∩V)((K∩V)(L∩U))⁺ ≅ L(U∩V)/L(U∩V)(L(K∩V))⁺.
pub fn zassenhaus_verify(
    u: &HopfSubalgebra,
    v: &HopfSubalgebra,
    k: &HopfSubalgebra,
    l: &HopfSubalgebra,
) -> Result<ZassenhausReport> {
    let mut rep = ValidationReport::new("Zassenhaus isomorphisms");
    if !u.space.contains_space(&k.space) || !v.space.contains_space(&l.space) {
        return Err(Error::Hypothesis("need K ⊆ U and L ⊆ V".into()));
    }
    if let Some(w) = normal_in_witness(k, u) {
        return Err(Error::NotNormal(format!("K in U: {w}")));
    }
    if let Some(w) = normal_in_witness(l, v) {
        return Err(Error::NotNormal(format!("L in V: {w}")));
    }
    let w = u.intersect(v);
    let kv = k.intersect(v);
    let lu = l.intersect(u);
    let k_w = join(k, &w, u)?;
    let k_lu = join(k, &lu, u)?;
    let kv_lu = join(&kv, &lu, &w)?;
    let l_w = join(l, &w, v)?;
    let l_kv = join(l, &kv, v)?;

    let left_host = Local::new(&k_w, "K(U∩V)")?;
    let mid_host = Local::new(&w, "U∩V")?;
    let right_host = Local::new(&l_w, "L(U∩V)")?;
    let left = left_host.quotient(&k_lu, "K(U∩V)/K(U∩V)(K(L∩U))⁺")?;
    let mid = mid_host.quotient(&kv_lu, "(U∩V)/(U∩V)((K∩V)(L∩U))⁺")?;
    let right = right_host.quotient(&l_kv, "L(U∩V)/L(U∩V)(L(K∩V))⁺")?;

    let to_left = induced_map(&mid_host, &mid, &left_host, &left, &mut rep, "middle → left");
    let to_right = induced_map(&mid_host, &mid, &right_host, &right, &mut rep, "middle → right");

    let g = &u.ambient.ctx().group;
    let dims = [
        left.algebra.space().dims_by_degree(g),
        mid.algebra.space().dims_by_degree(g),
        right.algebra.space().dims_by_degree(g),
    ];
    rep.push(Check::from_bool("per-degree dimensions agree", dims[0] == dims[1] && dims[1] == dims[2], || {
        Witness::note(vec![], format!("{dims:?}"))
    }));
    Ok(ZassenhausReport {
        left: left.algebra,
        middle: mid.algebra,
        right: right.algebra,
        to_left,
        to_right,
        dims_by_degree: dims,
        report: rep,
    })
}
