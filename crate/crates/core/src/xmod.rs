//! Crossed modules and reflexive-multiplicative graphs, and the functors
//! between them.

use std::sync::Arc;

use crate::actions::{
    actions_agree, smash_inclusion_right, smash_product, smash_projection_right, split_to_action,
    validate_module_action, ModuleAction, SplitAction, SplitExtension,
};
use crate::error::{Error, Result};
use crate::hopf::Hopf;
use crate::linalg::{LinMap, Vector};
use crate::sub::{hopf_kernel, pullback, HopfSubalgebra, Pullback};
use crate::verify::{verify_morphism, Check, ValidationReport, Witness};

/// (A, H, d) with an action of A on H.
#[derive(Clone, Debug)]
pub struct CrossedModule {
    pub name: String,
    pub action: ModuleAction,
    /// d: H → A
    pub d: LinMap,
}

impl CrossedModule {
    pub fn new(name: impl Into<String>, action: ModuleAction, d: LinMap) -> Result<Self> {
        if d.rows() != action.actor.dim() || d.cols() != action.carrier.dim() {
            return Err(Error::Dimension("d must map the carrier to the actor".into()));
        }
        Ok(CrossedModule { name: name.into(), action, d })
    }

    pub fn base(&self) -> &Hopf {
        &self.action.actor
    }

    pub fn top(&self) -> &Hopf {
        &self.action.carrier
    }

    /// (A, A, id, ξ).
    pub fn identity(a: &Hopf) -> Self {
        CrossedModule {
            name: format!("({0}, {0}, id, ξ)", a.name()),
            action: ModuleAction::adjoint(a),
            d: LinMap::identity(a.dim()),
        }
    }

    /// (A, N, inclusion, conjugation) for N normal in A.
    pub fn normal_inclusion(a: &Hopf, n: &HopfSubalgebra, name: &str) -> Result<Self> {
        let (h, incl) = n.to_algebra(name)?;
        let h = Arc::new(h);
        let nh = h.dim();
        let mut cols = Vec::with_capacity(a.dim() * nh);
        for x in 0..a.dim() {
            for y in n.basis() {
                let v = a.adjoint(&Vector::basis(x), y);
                cols.push(n.coordinates(&v).ok_or_else(|| {
                    Error::NotNormal(format!("{} ▷ {} leaves {name}", a.label(x), a.render(y)))
                })?);
            }
        }
        let action = ModuleAction::new(a.clone(), h, LinMap::from_columns(nh, cols))?;
        CrossedModule::new(format!("({}, {name}, incl, conj)", a.name()), action, incl)
    }

    /// Same action with a different d.
    pub fn with_d(&self, d: LinMap) -> Result<Self> {
        CrossedModule::new(self.name.clone(), self.action.clone(), d)
    }
}

/// Action laws, d a Hopf morphism, (cm1) d(a·h) = a ▷ d(h) and
/// (cm2) d(g)·h = g ▷ h.
pub fn validate_crossed_module(x: &CrossedModule) -> ValidationReport {
    let (a, h) = (x.base(), x.top());
    let mut rep = ValidationReport::new(format!("crossed module {}", x.name));
    rep.extend("action: ", validate_module_action(&x.action));
    rep.extend("d: ", verify_morphism(&x.d, h, a));
    if rep.get("d: shape").is_some_and(|c| !c.passed) {
        return rep;
    }
    let mut w = None;
    'cm1: for i in 0..a.dim() {
        for j in 0..h.dim() {
            let lhs = x.d.apply(&x.action.apply_basis(i, j));
            let rhs = a.adjoint(&Vector::basis(i), &x.d.col_vec(j));
            if lhs != rhs {
                w = Some(Witness::new(
                    vec![i, j],
                    vec![a.label(i).into(), h.label(j).into()],
                    a.render(&lhs),
                    a.render(&rhs),
                ));
                break 'cm1;
            }
        }
    }
    rep.push(Check::from_option("(cm1) d(a·h) = a ▷ d(h)", w));
    let mut w = None;
    'cm2: for g in 0..h.dim() {
        for j in 0..h.dim() {
            let lhs = x.action.apply(&x.d.col_vec(g), &Vector::basis(j));
            let rhs = h.adjoint(&Vector::basis(g), &Vector::basis(j));
            if lhs != rhs {
                w = Some(Witness::new(
                    vec![g, j],
                    vec![h.label(g).into(), h.label(j).into()],
                    h.render(&lhs),
                    h.render(&rhs),
                ));
                break 'cm2;
            }
        }
    }
    rep.push(Check::from_option("(cm2) d(g)·h = g ▷ h", w));
    rep
}

/// Composition on the pullback A₁ ×_{A₀} A₁ of source (first factor) and
/// target (second factor).
#[derive(Clone, Debug)]
pub struct GraphMult {
    pub pullback: Pullback,
    /// m: P → A₁
    pub m: LinMap,
}

/// A₁ ⇉ A₀ with source `p`, target `gamma` and common section `i`.
#[derive(Clone, Debug)]
pub struct ReflexiveGraph {
    pub name: String,
    pub a1: Hopf,
    pub a0: Hopf,
    pub p: LinMap,
    pub gamma: LinMap,
    pub i: LinMap,
    pub mult: Option<GraphMult>,
}

impl ReflexiveGraph {
    pub fn new(name: impl Into<String>, a1: Hopf, a0: Hopf, p: LinMap, gamma: LinMap, i: LinMap) -> Self {
        ReflexiveGraph { name: name.into(), a1, a0, p, gamma, i, mult: None }
    }

    /// A₀ with all three maps the identity.
    pub fn discrete(a0: &Hopf) -> Self {
        let id = LinMap::identity(a0.dim());
        ReflexiveGraph::new(format!("disc({})", a0.name()), a0.clone(), a0.clone(), id.clone(), id.clone(), id)
    }

    pub fn as_split(&self) -> SplitExtension {
        SplitExtension { h: self.a1.clone(), a: self.a0.clone(), p: self.p.clone(), i: self.i.clone() }
    }
}

fn pair_map(a1: &Hopf, f: &LinMap, g: &LinMap, v: usize) -> Vector {
    let n = a1.dim();
    let mut out = Vector::zero();
    for (x1, x2, c) in a1.sweedler_basis(v) {
        out = out.add_scaled(&f.col_vec(x1).tensor(&g.col_vec(x2), n), c);
    }
    out
}

/// Splitting identities, morphism checks and, when present, the
/// multiplication and its unit laws.
pub fn validate_graph(g: &ReflexiveGraph) -> ValidationReport {
    let (a1, a0) = (&g.a1, &g.a0);
    let mut rep = ValidationReport::new(format!("reflexive graph {}", g.name));
    rep.extend("p: ", verify_morphism(&g.p, a1, a0));
    rep.extend("γ: ", verify_morphism(&g.gamma, a1, a0));
    rep.extend("i: ", verify_morphism(&g.i, a0, a1));
    if !rep.passed() {
        return rep;
    }
    let id0 = LinMap::identity(a0.dim());
    for (name, f) in [("p∘i = id", &g.p), ("γ∘i = id", &g.gamma)] {
        let c = f.compose(&g.i);
        rep.push(Check::from_option(
            name,
            c.first_difference(&id0).map(|j| Witness::note(vec![a0.label(j).into()], "not fixed")),
        ));
    }
    if let Some(gm) = &g.mult {
        let pb = &gm.pullback;
        rep.extend("m: ", verify_morphism(&gm.m, &pb.algebra, a1));
        let ip = g.i.compose(&g.p);
        let ig = g.i.compose(&g.gamma);
        let id1 = LinMap::identity(a1.dim());
        let mut w = None;
        for v in 0..a1.dim() {
            for (name, l, r) in [("m∘(id, i∘p) = id", &id1, &ip), ("m∘(i∘γ, id) = id", &ig, &id1)] {
                let pair = pair_map(a1, l, r, v);
                let back = match pb.space.coordinates(&pair) {
                    Some(c) => gm.m.apply(&Vector::from_dense(&c)),
                    None => {
                        w = Some((name, Witness::note(vec![a1.label(v).into()], "pair leaves the pullback")));
                        break;
                    }
                };
                if back != Vector::basis(v) {
                    w = Some((name, Witness::new(vec![v], vec![a1.label(v).into()], a1.render(&back), a1.label(v).into())));
                    break;
                }
            }
            if w.is_some() {
                break;
            }
        }
        match w {
            Some((name, wit)) => rep.push(Check::fail(name, wit)),
            None => rep.push(Check::pass("unit laws")),
        }
    }
    rep
}

/// First pair of kernel basis vectors x ∈ Hker(p), y ∈ Hker(γ) with
/// xy ≠ φ(|x|,|y|)yx.
pub fn multiplicativity_witness(g: &ReflexiveGraph) -> Option<Witness> {
    let a1 = &g.a1;
    let kp = hopf_kernel(&g.p, a1, &g.a0);
    let kg = hopf_kernel(&g.gamma, a1, &g.a0);
    for x in kp.basis() {
        let dx = a1.degree_of(x).unwrap_or(0);
        for y in kg.basis() {
            let dy = a1.degree_of(y).unwrap_or(0);
            let lhs = a1.mul(x, y);
            let rhs = a1.mul(y, x).scale(a1.phi(dx, dy));
            if lhs != rhs {
                return Some(Witness::new(
                    vec![],
                    vec![a1.render(x), a1.render(y)],
                    a1.render(&lhs),
                    a1.render(&rhs),
                ));
            }
        }
    }
    None
}

pub fn is_multiplicative(g: &ReflexiveGraph) -> bool {
    multiplicativity_witness(g).is_none()
}

/// p₁: H⋊A → A, x⊗b ↦ d(x)b.
pub fn smash_target_map(x: &CrossedModule) -> LinMap {
    let a = x.base();
    let na = a.dim();
    LinMap::from_fn(na, x.top().dim() * na, |k| a.mul(&x.d.col_vec(k / na), &Vector::basis(k % na)))
}

/// The functor to graphs: A₁ = H⋊A, source p₂, target p₁, section ι₂ and
/// m(x⊗b⊗x'⊗b') = x ε(b) x' ⊗ b'.
pub fn xmod_to_rmg(x: &CrossedModule) -> Result<ReflexiveGraph> {
    validate_crossed_module(x).into_result()?;
    let (a, h) = (x.base(), x.top());
    let na = a.dim();
    let a1 = smash_product(&x.action)?;
    let p = smash_projection_right(&x.action);
    let gamma = smash_target_map(x);
    let i = smash_inclusion_right(&x.action);
    let pb = pullback(&a1, &a1, a, &p, &gamma, &format!("{0} ×_{1} {0}", a1.name(), a.name()))?;
    let n1 = a1.dim();
    let full_m = |k: usize| -> Vector {
        let (u, v) = (k / n1, k % n1);
        let (xi, bi, xj, bj) = (u / na, u % na, v / na, v % na);
        let e = a.counit_basis(bi);
        if e.is_zero() {
            return Vector::zero();
        }
        h.mul(&Vector::basis(xi), &Vector::basis(xj)).tensor(&Vector::basis(bj), na).scale(e)
    };
    let m = LinMap::from_fn(n1, pb.space.dim(), |k| {
        let mut out = Vector::zero();
        for (idx, c) in pb.space.basis()[k].iter() {
            out = out.add_scaled(&full_m(idx), c);
        }
        out
    });
    let g = ReflexiveGraph {
        name: format!("G{}", x.name),
        a1,
        a0: a.clone(),
        p,
        gamma,
        i,
        mult: Some(GraphMult { pullback: pb, m }),
    };
    validate_graph(&g).into_result()?;
    Ok(g)
}

/// The crossed module of a multiplicative graph together with the split
/// data it came from.
#[derive(Clone, Debug)]
pub struct GraphXmod {
    pub xmod: CrossedModule,
    pub split: SplitAction,
}

/// The functor to crossed modules: H = Hker(p), d = γ∘j, action by
/// conjugation through the section.
pub fn rmg_to_xmod(g: &ReflexiveGraph) -> Result<GraphXmod> {
    if let Some(w) = multiplicativity_witness(g) {
        return Err(Error::Hypothesis(format!("graph is not multiplicative: {w}")));
    }
    let split = split_to_action(&g.as_split())?;
    split.report.clone().into_result()?;
    let nk = split.kernel.dim();
    let d = LinMap::from_fn(g.a0.dim(), nk, |k| g.gamma.apply(&split.kernel.basis()[k]));
    let xmod = CrossedModule::new(format!("F{}", g.name), split.action.clone(), d)?;
    let rep = validate_crossed_module(&xmod);
    if !rep.passed() {
        return Err(Error::Disagreement(format!("F(graph) is not a crossed module:\n{rep}")));
    }
    Ok(GraphXmod { xmod, split })
}

pub(crate) fn iso_checks(rep: &mut ValidationReport, name: &str, f: &LinMap, a: &Hopf, b: &Hopf) {
    rep.extend(&format!("{name}: "), verify_morphism(f, a, b));
    let bij = f.rows() == f.cols() && f.rank() == f.rows();
    rep.push(Check::from_bool(format!("{name}: bijective"), bij, || {
        Witness::note(vec![], format!("{}×{} of rank {}", f.rows(), f.cols(), f.rank()))
    }));
}

pub(crate) fn maps_equal(rep: &mut ValidationReport, name: &str, l: &LinMap, r: &LinMap) {
    let diff = if l.rows() != r.rows() || l.cols() != r.cols() { Some(0) } else { l.first_difference(r) };
    rep.push(Check::from_option(
        name,
        diff.map(|j| Witness::note(vec![format!("column {j}")], "maps differ")),
    ));
}

/// F(G(X)) ≅ X through H → Hker(p₂), h ↦ h⊗1, over the identity on A.
pub fn xmod_roundtrip(x: &CrossedModule) -> Result<ValidationReport> {
    let g = xmod_to_rmg(x)?;
    let back = rmg_to_xmod(&g)?;
    let mut rep = ValidationReport::new(format!("F(G(X)) ≅ X for {}", x.name));
    let h = x.top();
    let na = x.base().dim();
    let kernel = &back.split.kernel;
    let cols = (0..h.dim())
        .map(|j| {
            kernel
                .coordinates(&Vector::basis(j).tensor(x.base().one(), na))
                .ok_or_else(|| Error::Disagreement("H⊗1 is not Hker(p₂)".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let alpha = LinMap::from_columns(kernel.dim(), cols);
    iso_checks(&mut rep, "α: H → Hker(p₂)", &alpha, h, back.xmod.top());
    maps_equal(&mut rep, "d'∘α = d", &back.xmod.d.compose(&alpha), &x.d);
    rep.push(actions_agree(&x.action, &back.xmod.action, &alpha));
    Ok(rep)
}

/// G(F(graph)) ≅ graph through Hker(p)⋊A₀ → A₁, k⊗a ↦ k i(a).
pub fn graph_roundtrip(g: &ReflexiveGraph) -> Result<ValidationReport> {
    let f = rmg_to_xmod(g)?;
    let g2 = xmod_to_rmg(&f.xmod)?;
    let mut rep = ValidationReport::new(format!("G(F(graph)) ≅ graph for {}", g.name));
    let phi = &f.split.f;
    iso_checks(&mut rep, "φ", phi, &g2.a1, &g.a1);
    maps_equal(&mut rep, "p∘φ = p'", &g.p.compose(phi), &g2.p);
    maps_equal(&mut rep, "γ∘φ = γ'", &g.gamma.compose(phi), &g2.gamma);
    maps_equal(&mut rep, "φ∘i' = i", &phi.compose(&g2.i), &g.i);
    if let (Some(m), Some(m2)) = (&g.mult, &g2.mult) {
        let pp = phi.tensor(phi);
        let mut w = None;
        for (k, v) in m2.pullback.space.basis().iter().enumerate() {
            let image = pp.apply(v);
            let lhs = phi.apply(&m2.m.col_vec(k));
            match m.pullback.space.coordinates(&image) {
                Some(c) => {
                    let rhs = m.m.apply(&Vector::from_dense(&c));
                    if lhs != rhs {
                        w = Some(Witness::new(vec![k], vec![m2.pullback.algebra.label(k).into()], g.a1.render(&lhs), g.a1.render(&rhs)));
                        break;
                    }
                }
                None => {
                    w = Some(Witness::note(vec![m2.pullback.algebra.label(k).into()], "(φ⊗φ) leaves the pullback"));
                    break;
                }
            }
        }
        rep.push(Check::from_option("φ∘m' = m∘(φ⊗φ)", w));
    }
    Ok(rep)
}
