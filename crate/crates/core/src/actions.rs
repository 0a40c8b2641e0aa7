//! Module color Hopf algebras, smash products and split extensions.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::hopf::{ColorHopfAlgebra, Hopf};
use crate::linalg::{LinMap, Vector};
use crate::sub::{hopf_kernel, HopfSubalgebra};
use crate::verify::{verify_hopf, verify_morphism, Check, ValidationReport, Witness};

/// Left action of `actor` A on `carrier` H, as a map A⊗H → H with column
/// index a·dim(H) + h.
#[derive(Clone, Debug)]
pub struct ModuleAction {
    pub actor: Hopf,
    pub carrier: Hopf,
    pub act: LinMap,
}

impl ModuleAction {
    pub fn new(actor: Hopf, carrier: Hopf, act: LinMap) -> Result<Self> {
        if !actor.same_context(&carrier) {
            return Err(Error::ContextMismatch);
        }
        if act.rows() != carrier.dim() || act.cols() != actor.dim() * carrier.dim() {
            return Err(Error::Dimension(format!(
                "action matrix is {}×{}, expected {}×{}",
                act.rows(),
                act.cols(),
                carrier.dim(),
                actor.dim() * carrier.dim()
            )));
        }
        Ok(ModuleAction { actor, carrier, act })
    }

    /// a·h = ε(a)h.
    pub fn trivial(actor: &Hopf, carrier: &Hopf) -> Result<Self> {
        let nh = carrier.dim();
        let act = LinMap::from_fn(nh, actor.dim() * nh, |k| {
            Vector::basis(k % nh).scale(actor.counit_basis(k / nh))
        });
        ModuleAction::new(actor.clone(), carrier.clone(), act)
    }

    /// The adjoint action of A on itself.
    pub fn adjoint(a: &Hopf) -> Self {
        ModuleAction { actor: a.clone(), carrier: a.clone(), act: a.adjoint_map().clone() }
    }

    /// Conjugation of `acting` on `carrier`, both Hopf subalgebras of one
    /// ambient, with `carrier` stable under it. Actor and carrier are the
    /// standalone algebras on the RREF bases.
    pub fn restricted_adjoint(
        acting: &HopfSubalgebra,
        carrier: &HopfSubalgebra,
        names: (&str, &str),
    ) -> Result<Self> {
        let amb = &acting.ambient;
        let a = Arc::new(acting.to_algebra(names.0)?.0);
        let h = Arc::new(carrier.to_algebra(names.1)?.0);
        let nh = h.dim();
        let mut cols = Vec::with_capacity(a.dim() * nh);
        for x in acting.basis() {
            for y in carrier.basis() {
                let v = amb.adjoint(x, y);
                let c = carrier.coordinates(&v).ok_or_else(|| {
                    Error::NotNormal(format!("{} ▷ {} leaves the carrier", amb.render(x), amb.render(y)))
                })?;
                cols.push(c);
            }
        }
        ModuleAction::new(a, h, LinMap::from_columns(nh, cols))
    }

    pub fn apply_basis(&self, a: usize, h: usize) -> Vector {
        self.act.col_vec(a * self.carrier.dim() + h)
    }

    pub fn apply(&self, a: &Vector, h: &Vector) -> Vector {
        self.act.apply(&a.tensor(h, self.carrier.dim()))
    }

    pub fn with_act(&self, act: LinMap) -> Result<Self> {
        ModuleAction::new(self.actor.clone(), self.carrier.clone(), act)
    }
}

fn w2(a: &ColorHopfAlgebra, i: usize, h: &ColorHopfAlgebra, j: usize, lhs: String, rhs: String) -> Witness {
    Witness::new(vec![i, j], vec![a.label(i).into(), h.label(j).into()], lhs, rhs)
}

/// The module-algebra and module-coalgebra identities of an action.
pub fn validate_module_action(m: &ModuleAction) -> ValidationReport {
    let (a, h) = (&*m.actor, &*m.carrier);
    let (na, nh) = (a.dim(), h.dim());
    let mut rep = ValidationReport::new(format!("action of {} on {}", a.name(), h.name()));
    let e = Vector::basis;

    let mut src = Vec::with_capacity(na * nh);
    for i in 0..na {
        for j in 0..nh {
            src.push(a.ctx().group.add(a.deg(i), h.deg(j)));
        }
    }
    let graded = m.act.degree_violation(&src, h.degrees());
    rep.push(Check::from_option(
        "graded",
        graded.map(|(r, c)| {
            Witness::note(
                vec![a.label(c / nh).into(), h.label(c % nh).into()],
                format!("output has a {} component", h.label(r)),
            )
        }),
    ));

    let mut w = None;
    'assoc: for i in 0..na {
        for k in 0..na {
            let ik = a.mul(&e(i), &e(k));
            for j in 0..nh {
                let lhs = m.apply(&ik, &e(j));
                let rhs = m.apply(&e(i), &m.apply_basis(k, j));
                if lhs != rhs {
                    w = Some(Witness::new(
                        vec![i, k, j],
                        vec![a.label(i).into(), a.label(k).into(), h.label(j).into()],
                        h.render(&lhs),
                        h.render(&rhs),
                    ));
                    break 'assoc;
                }
            }
        }
    }
    rep.push(Check::from_option("(ab)·h = a·(b·h)", w));

    let mut w = None;
    for j in 0..nh {
        let lhs = m.apply(a.one(), &e(j));
        if lhs != e(j) {
            w = Some(Witness::new(vec![j], vec![h.label(j).into()], h.render(&lhs), h.label(j).into()));
            break;
        }
    }
    rep.push(Check::from_option("1·h = h", w));

    let mut w = None;
    for i in 0..na {
        let lhs = m.apply(&e(i), h.one());
        let rhs = h.one().scale(a.counit_basis(i));
        if lhs != rhs {
            w = Some(Witness::new(vec![i], vec![a.label(i).into()], h.render(&lhs), h.render(&rhs)));
            break;
        }
    }
    rep.push(Check::from_option("a·1 = ε(a)1", w));

    let mut w = None;
    'eps: for i in 0..na {
        for j in 0..nh {
            let lhs = h.counit(&m.apply_basis(i, j));
            let rhs = a.counit_basis(i) * h.counit_basis(j);
            if lhs != rhs {
                w = Some(w2(a, i, h, j, lhs.to_string(), rhs.to_string()));
                break 'eps;
            }
        }
    }
    rep.push(Check::from_option("ε(a·h) = ε(a)ε(h)", w));

    let mut w = None;
    'comul: for i in 0..na {
        for j in 0..nh {
            let lhs = h.comul(&m.apply_basis(i, j));
            let mut rhs = Vector::zero();
            for (a1, a2, c) in a.sweedler_basis(i) {
                for (h1, h2, d) in h.sweedler_basis(j) {
                    let s = &(c * d) * a.phi(a.deg(a2), h.deg(h1));
                    let t = m.apply_basis(a1, h1).tensor(&m.apply_basis(a2, h2), nh);
                    rhs = rhs.add_scaled(&t, &s);
                }
            }
            if lhs != rhs {
                w = Some(w2(a, i, h, j, h.render_pair(&lhs), h.render_pair(&rhs)));
                break 'comul;
            }
        }
    }
    rep.push(Check::from_option("Δ(a·h) = φ(|a₂|,|h₁|)(a₁·h₁)⊗(a₂·h₂)", w));

    let mut w = None;
    'mult: for i in 0..na {
        for j in 0..nh {
            for k in 0..nh {
                let lhs = m.apply(&e(i), &h.mul(&e(j), &e(k)));
                let mut rhs = Vector::zero();
                for (a1, a2, c) in a.sweedler_basis(i) {
                    let s = c * a.phi(a.deg(a2), h.deg(j));
                    rhs = rhs.add_scaled(&h.mul(&m.apply_basis(a1, j), &m.apply_basis(a2, k)), &s);
                }
                if lhs != rhs {
                    w = Some(Witness::new(
                        vec![i, j, k],
                        vec![a.label(i).into(), h.label(j).into(), h.label(k).into()],
                        h.render(&lhs),
                        h.render(&rhs),
                    ));
                    break 'mult;
                }
            }
        }
    }
    rep.push(Check::from_option("a·(hh') = φ(|a₂|,|h|)(a₁·h)(a₂·h')", w));
    rep
}

/// H⋊A on H⊗A, basis index h·dim(A) + a, with the braided tensor coalgebra.
pub fn smash_product_unchecked(m: &ModuleAction) -> Result<ColorHopfAlgebra> {
    let (h, a) = (&*m.carrier, &*m.actor);
    let (nh, na) = (h.dim(), a.dim());
    let n = nh * na;
    let ctx = h.ctx();
    let space = h.space().tensor(a.space(), &ctx.group);
    // (h⊗a)(h'⊗a') = φ(|a₂|,|h'|) h(a₁·h') ⊗ a₂a'
    let mult = LinMap::from_fn(n, n * n, |k| {
        let (x, y) = (k / n, k % n);
        let (hi, ai, hj, aj) = (x / na, x % na, y / na, y % na);
        let mut t = vec![];
        for (a1, a2, c) in a.sweedler_basis(ai) {
            let s = c * a.phi(a.deg(a2), h.deg(hj));
            let left = h.mul(&Vector::basis(hi), &m.apply_basis(a1, hj));
            for (p, d) in a.mul_basis(a2, aj) {
                let sd = &s * d;
                for (q, e) in left.iter() {
                    t.push((q * na + p, e * &sd));
                }
            }
        }
        Vector::from_terms(t)
    });
    let comult = LinMap::from_fn(n * n, n, |x| {
        let (hi, ai) = (x / na, x % na);
        let mut t = vec![];
        for (h1, h2, c) in h.sweedler_basis(hi) {
            for (a1, a2, d) in a.sweedler_basis(ai) {
                let s = &(c * d) * h.phi(h.deg(h2), a.deg(a1));
                t.push(((h1 * na + a1) * n + h2 * na + a2, s));
            }
        }
        Vector::from_terms(t)
    });
    // S(h⊗a) = φ(|h|,|a₁|)(S(a₁)·S(h)) ⊗ S(a₂)
    let antipode = LinMap::from_fn(n, n, |x| {
        let (hi, ai) = (x / na, x % na);
        let sh = h.antipode(&Vector::basis(hi));
        let mut t = vec![];
        for (a1, a2, c) in a.sweedler_basis(ai) {
            let s = c * h.phi(h.deg(hi), a.deg(a1));
            let left = m.apply(&a.antipode(&Vector::basis(a1)), &sh);
            for (p, d) in a.antipode_map().col(a2) {
                let sd = &s * d;
                for (q, e) in left.iter() {
                    t.push((q * na + p, e * &sd));
                }
            }
        }
        Vector::from_terms(t)
    });
    let counit = (0..n).map(|x| h.counit_basis(x / na) * a.counit_basis(x % na)).collect();
    ColorHopfAlgebra::from_parts(
        ctx.clone(),
        format!("{}⋊{}", h.name(), a.name()),
        space,
        h.one().tensor(a.one(), na),
        mult,
        counit,
        comult,
        antipode,
    )
}

/// H⋊A for a valid action; the result is re-verified as a Hopf algebra.
pub fn smash_product(m: &ModuleAction) -> Result<Hopf> {
    validate_module_action(m).into_result()?;
    let s = smash_product_unchecked(m)?;
    verify_hopf(&s).into_result()?;
    Ok(Arc::new(s))
}

/// ι₁: H → H⋊A, h ↦ h⊗1.
pub fn smash_inclusion_left(m: &ModuleAction) -> LinMap {
    let na = m.actor.dim();
    LinMap::from_fn(m.carrier.dim() * na, m.carrier.dim(), |h| Vector::basis(h).tensor(m.actor.one(), na))
}

/// ι₂: A → H⋊A, a ↦ 1⊗a.
pub fn smash_inclusion_right(m: &ModuleAction) -> LinMap {
    let na = m.actor.dim();
    LinMap::from_fn(m.carrier.dim() * na, na, |a| m.carrier.one().tensor(&Vector::basis(a), na))
}

/// p₂: H⋊A → A, h⊗a ↦ ε(h)a.
pub fn smash_projection_right(m: &ModuleAction) -> LinMap {
    let na = m.actor.dim();
    LinMap::from_fn(na, m.carrier.dim() * na, |x| {
        Vector::basis(x % na).scale(m.carrier.counit_basis(x / na))
    })
}

/// H with p: H → A and i: A → H, p∘i = id.
#[derive(Clone, Debug)]
pub struct SplitExtension {
    pub h: Hopf,
    pub a: Hopf,
    pub p: LinMap,
    pub i: LinMap,
}

impl SplitExtension {
    pub fn validate(&self) -> ValidationReport {
        let mut rep = ValidationReport::new(format!("split extension {} ⇄ {}", self.h.name(), self.a.name()));
        rep.extend("p: ", verify_morphism(&self.p, &self.h, &self.a));
        rep.extend("i: ", verify_morphism(&self.i, &self.a, &self.h));
        if rep.passed() {
            let pi = self.p.compose(&self.i);
            let id = LinMap::identity(self.a.dim());
            rep.push(Check::from_option(
                "p∘i = id",
                pi.first_difference(&id).map(|j| {
                    Witness::note(vec![self.a.label(j).into()], format!("p(i(e)) = {}", self.a.render(&pi.col_vec(j))))
                }),
            ));
        }
        rep
    }

    /// (H⋊A, p₂, ι₂) for an action.
    pub fn from_action(m: &ModuleAction) -> Result<Self> {
        Ok(SplitExtension {
            h: smash_product(m)?,
            a: m.actor.clone(),
            p: smash_projection_right(m),
            i: smash_inclusion_right(m),
        })
    }
}

/// The action on Hker(p) together with the mutually inverse morphisms
/// f: Hker(p)⋊A → H and g: H → Hker(p)⋊A.
#[derive(Clone, Debug)]
pub struct SplitAction {
    pub kernel: HopfSubalgebra,
    pub action: ModuleAction,
    pub smash: Hopf,
    pub f: LinMap,
    pub g: LinMap,
    pub report: ValidationReport,
}

/// a·k = φ(|a₂|,|k|) i(a₁) k i(S(a₂)) on Hker(p), computed in H.
pub fn split_conjugation(ext: &SplitExtension, a: usize, k: &Vector) -> Vector {
    let (h, alg) = (&*ext.h, &*ext.a);
    let dk = h.degree_of(k).unwrap_or(0);
    let mut out = Vector::zero();
    for (a1, a2, c) in alg.sweedler_basis(a) {
        let s = c * alg.phi(alg.deg(a2), dk);
        let ia1 = ext.i.col_vec(a1);
        let isa2 = ext.i.apply(&alg.antipode(&Vector::basis(a2)));
        out = out.add_scaled(&h.mul_all(&[&ia1, k, &isa2]), &s);
    }
    out
}

pub fn split_to_action(ext: &SplitExtension) -> Result<SplitAction> {
    ext.validate().into_result()?;
    let (h, a) = (&ext.h, &ext.a);
    let (nh, na) = (h.dim(), a.dim());
    let kernel = HopfSubalgebra::new(h.clone(), hopf_kernel(&ext.p, h, a))?;
    let kalg: Hopf = Arc::new(kernel.to_algebra(&format!("Hker({})", h.name()))?.0);
    let nk = kalg.dim();
    let mut cols = Vec::with_capacity(na * nk);
    for x in 0..na {
        for kb in kernel.basis() {
            let v = split_conjugation(ext, x, kb);
            cols.push(kernel.coordinates(&v).ok_or_else(|| {
                Error::Disagreement(format!("{} acts outside Hker(p)", a.label(x)))
            })?);
        }
    }
    let action = ModuleAction::new(a.clone(), kalg.clone(), LinMap::from_columns(nk, cols))?;
    let mut report = validate_module_action(&action);
    report.clone().into_result()?;
    // the smash product is certified through f below: a bijective bialgebra
    // map that also intertwines the antipodes
    let smash: Hopf = Arc::new(smash_product_unchecked(&action)?);
    // f(k⊗a) = k i(a)
    let f = LinMap::from_fn(nh, nk * na, |x| h.mul(&kernel.basis()[x / na], &ext.i.col_vec(x % na)));
    // g(h) = h₁ i(p(S(h₂))) ⊗ p(h₃), summed in H⊗A before taking kernel coordinates
    let mut g_cols = Vec::with_capacity(nh);
    for x in 0..nh {
        let mut acc = Vector::zero();
        for (h1, rest, c) in h.sweedler_basis(x) {
            for (h2, h3, d) in h.sweedler_basis(rest) {
                let left = h.mul(&Vector::basis(h1), &ext.i.apply(&ext.p.apply(&h.antipode(&Vector::basis(h2)))));
                acc = acc.add_scaled(&left.tensor(&ext.p.col_vec(h3), na), &(c * d));
            }
        }
        let mut col = Vector::zero();
        for ai in 0..na {
            let part = Vector::from_terms(
                acc.iter().filter(|(k, _)| k % na == ai).map(|(k, c)| (k / na, c.clone())).collect(),
            );
            if part.is_zero() {
                continue;
            }
            let kc = kernel.coordinates(&part).ok_or_else(|| {
                Error::Disagreement(format!("g({}) leaves Hker(p)⊗A", h.label(x)))
            })?;
            col = col.add(&kc.tensor(&Vector::basis(ai), na));
        }
        g_cols.push(col);
    }
    let g = LinMap::from_columns(nk * na, g_cols);
    report.extend("f: ", verify_morphism(&f, &smash, h));
    report.extend("g: ", verify_morphism(&g, h, &smash));
    let fg = f.compose(&g);
    let gf = g.compose(&f);
    report.push(Check::from_option(
        "f∘g = id",
        fg.first_difference(&LinMap::identity(nh)).map(|j| Witness::note(vec![h.label(j).into()], "f(g(h)) ≠ h")),
    ));
    report.push(Check::from_option(
        "g∘f = id",
        gf.first_difference(&LinMap::identity(nk * na))
            .map(|j| Witness::note(vec![smash.label(j).into()], "g(f(x)) ≠ x")),
    ));
    let fs = f.compose(smash.antipode_map());
    let sf = h.antipode_map().compose(&f);
    report.push(Check::from_option(
        "f∘S = S∘f",
        fs.first_difference(&sf).map(|j| Witness::note(vec![smash.label(j).into()], "antipodes differ")),
    ));
    Ok(SplitAction { kernel, action, smash, f, g, report })
}

/// α(a·h) = a·'α(h) for an identification α of carriers over the same actor.
pub fn actions_agree(x: &ModuleAction, y: &ModuleAction, alpha: &LinMap) -> Check {
    let (na, nh) = (x.actor.dim(), x.carrier.dim());
    if y.actor.dim() != na || alpha.cols() != nh || alpha.rows() != y.carrier.dim() {
        return Check::fail("actions agree", Witness::note(vec![], "shapes differ"));
    }
    for a in 0..na {
        for h in 0..nh {
            let lhs = alpha.apply(&x.apply_basis(a, h));
            let rhs = y.apply(&Vector::basis(a), &alpha.col_vec(h));
            if lhs != rhs {
                return Check::fail(
                    "actions agree",
                    Witness::new(
                        vec![a, h],
                        vec![x.actor.label(a).into(), x.carrier.label(h).into()],
                        y.carrier.render(&lhs),
                        y.carrier.render(&rhs),
                    ),
                );
            }
        }
    }
    Check::pass("actions agree")
}

/// Coordinates of h⊗1 ∈ Hker(p₂) for the split extension of a smash product.
pub fn smash_kernel_identification(m: &ModuleAction, s: &SplitAction) -> Result<LinMap> {
    let incl = smash_inclusion_left(m);
    let cols = (0..m.carrier.dim())
        .map(|h| {
            s.kernel
                .coordinates(&incl.col_vec(h))
                .ok_or_else(|| Error::Disagreement("H⊗1 is not Hker(p₂)".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(LinMap::from_columns(s.kernel.dim(), cols))
}

