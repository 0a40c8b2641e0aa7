//! Truncated simplicial color Hopf algebras, Moore complexes, the passage to
//! and from crossed modules, and one coskeleton step.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::actions::{
    smash_inclusion_right, smash_product, smash_product_unchecked, smash_projection_right, split_to_action,
    validate_module_action, ModuleAction, SplitAction, SplitExtension,
};
use crate::error::{Error, Result};
use crate::hopf::{ColorHopfAlgebra, Hopf};
use crate::linalg::{kernel_lazy, LinMap, Subspace, Vector};
use crate::scalar::Scalar;
use crate::sub::{hopf_kernel, restrict_map, HopfSubalgebra};
use crate::tensor::{materialize_labeled, TensorAmbient};
use crate::verify::{verify_morphism, Check, ValidationReport, Witness};
use crate::xmod::{iso_checks, maps_equal, smash_target_map, validate_crossed_module, CrossedModule};

/// Levels H₀..H_N with faces and degeneracies.
#[derive(Clone, Debug)]
pub struct SimplicialHopf {
    pub name: String,
    pub levels: Vec<Hopf>,
    /// `faces[n][i]` is d^n_i: H_n → H_{n−1}; `faces[0]` is empty.
    pub faces: Vec<Vec<LinMap>>,
    /// `degens[n][j]` is s^{n+1}_j: H_n → H_{n+1}, for n < N.
    pub degens: Vec<Vec<LinMap>>,
    /// `Some(c)` when the object is cosk_c of its c-truncation, so that
    /// M_i = k for i > c + 1.
    pub coskeletal: Option<usize>,
}

impl SimplicialHopf {
    pub fn new(
        name: impl Into<String>,
        levels: Vec<Hopf>,
        faces: Vec<Vec<LinMap>>,
        degens: Vec<Vec<LinMap>>,
    ) -> Result<Self> {
        let s = SimplicialHopf { name: name.into(), levels, faces, degens, coskeletal: None };
        s.check_shapes()?;
        Ok(s)
    }

    fn check_shapes(&self) -> Result<()> {
        let n = self.levels.len();
        if n == 0 {
            return Err(Error::InvalidInput("no levels".into()));
        }
        if self.faces.len() != n || self.degens.len() != n - 1 {
            return Err(Error::Dimension("wrong number of face or degeneracy families".into()));
        }
        if self.levels.iter().any(|l| !l.same_context(&self.levels[0])) {
            return Err(Error::ContextMismatch);
        }
        for k in 0..n {
            if self.faces[k].len() != if k == 0 { 0 } else { k + 1 } {
                return Err(Error::Dimension(format!("level {k} needs {} faces", if k == 0 { 0 } else { k + 1 })));
            }
            for (i, d) in self.faces[k].iter().enumerate() {
                if d.cols() != self.levels[k].dim() || d.rows() != self.levels[k - 1].dim() {
                    return Err(Error::Dimension(format!("d^{k}_{i} has the wrong shape")));
                }
            }
        }
        for k in 0..n - 1 {
            if self.degens[k].len() != k + 1 {
                return Err(Error::Dimension(format!("level {k} needs {} degeneracies", k + 1)));
            }
            for (j, s) in self.degens[k].iter().enumerate() {
                if s.cols() != self.levels[k].dim() || s.rows() != self.levels[k + 1].dim() {
                    return Err(Error::Dimension(format!("s^{}_{j} has the wrong shape", k + 1)));
                }
            }
        }
        Ok(())
    }

    /// Truncation level N.
    pub fn top(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn dims(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.dim()).collect()
    }

    pub fn face(&self, n: usize, i: usize) -> &LinMap {
        &self.faces[n][i]
    }

    /// s^{n+1}_j: H_n → H_{n+1}.
    pub fn degen(&self, n: usize, j: usize) -> &LinMap {
        &self.degens[n][j]
    }

    /// Levels 0..=n only.
    pub fn truncate(&self, n: usize) -> Result<Self> {
        if n > self.top() {
            return Err(Error::InvalidInput(format!("cannot truncate level {} at {n}", self.top())));
        }
        Ok(SimplicialHopf {
            name: format!("tr_{n} {}", self.name),
            levels: self.levels[..=n].to_vec(),
            faces: self.faces[..=n].to_vec(),
            degens: self.degens[..n].to_vec(),
            coskeletal: self.coskeletal.filter(|&c| c <= n),
        })
    }

    /// Every face and degeneracy the identity of A, up to level n.
    pub fn constant(a: &Hopf, n: usize) -> Self {
        let id = LinMap::identity(a.dim());
        SimplicialHopf {
            name: format!("const {}", a.name()),
            levels: vec![a.clone(); n + 1],
            faces: (0..=n).map(|k| if k == 0 { vec![] } else { vec![id.clone(); k + 1] }).collect(),
            degens: (0..n).map(|k| vec![id.clone(); k + 1]).collect(),
            // every matching object of a constant object is the diagonal
            coskeletal: Some(1),
        }
    }
}

fn first_col_diff(l: &LinMap, r: &LinMap) -> Option<usize> {
    if l.rows() != r.rows() || l.cols() != r.cols() {
        return Some(0);
    }
    l.first_difference(r)
}

fn identity_check(rep: &mut ValidationReport, name: String, src: &ColorHopfAlgebra, l: LinMap, r: LinMap) {
    let w = first_col_diff(&l, &r)
        .map(|j| Witness::new(vec![j], vec![src.label(j).into()], render_col(&l, j), render_col(&r, j)));
    rep.push(Check::from_option(name, w));
}

fn render_col(m: &LinMap, j: usize) -> String {
    if j < m.cols() {
        m.col_vec(j).to_string()
    } else {
        "-".into()
    }
}

/// The simplicial identities up to level N, and each face and degeneracy as a
/// Hopf morphism.
pub fn validate_simplicial(s: &SimplicialHopf) -> ValidationReport {
    let mut rep = ValidationReport::new(format!("simplicial {}", s.name));
    if let Err(e) = s.check_shapes() {
        rep.push(Check::fail("shape", Witness::note(vec![], e.to_string())));
        return rep;
    }
    let top = s.top();
    let l = &s.levels;
    for n in 1..=top {
        for i in 0..=n {
            rep.extend(&format!("d^{n}_{i}: "), verify_morphism(s.face(n, i), &l[n], &l[n - 1]));
        }
    }
    for n in 0..top {
        for j in 0..=n {
            rep.extend(&format!("s^{}_{j}: ", n + 1), verify_morphism(s.degen(n, j), &l[n], &l[n + 1]));
        }
    }
    // 1) d_i d_j = d_{j−1} d_i for i < j
    for n in 2..=top {
        for j in 1..=n {
            for i in 0..j {
                let lhs = s.face(n - 1, i).compose(s.face(n, j));
                let rhs = s.face(n - 1, j - 1).compose(s.face(n, i));
                let name = format!("1) d^{}_{i}∘d^{n}_{j} = d^{}_{}∘d^{n}_{i}", n - 1, n - 1, j - 1);
                identity_check(&mut rep, name, &l[n], lhs, rhs);
            }
        }
    }
    // 2) s_i s_j = s_{j+1} s_i for i ≤ j, on H_n
    for n in 0..top.saturating_sub(1) {
        for j in 0..=n {
            for i in 0..=j {
                let lhs = s.degen(n + 1, i).compose(s.degen(n, j));
                let rhs = s.degen(n + 1, j + 1).compose(s.degen(n, i));
                let name = format!("2) s^{}_{i}∘s^{}_{j} = s^{}_{}∘s^{}_{i}", n + 2, n + 1, n + 2, j + 1, n + 1);
                identity_check(&mut rep, name, &l[n], lhs, rhs);
            }
        }
    }
    // 3) d_i s_j on H_n
    for n in 0..top {
        for j in 0..=n {
            for i in 0..=n + 1 {
                let lhs = s.face(n + 1, i).compose(s.degen(n, j));
                let (rhs, form) = if i < j {
                    (s.degen(n - 1, j - 1).compose(s.face(n, i)), format!("s^{n}_{}∘d^{n}_{i}", j - 1))
                } else if i == j || i == j + 1 {
                    (LinMap::identity(l[n].dim()), "id".to_string())
                } else {
                    (s.degen(n - 1, j).compose(s.face(n, i - 1)), format!("s^{n}_{j}∘d^{n}_{}", i - 1))
                };
                let name = format!("3) d^{}_{i}∘s^{}_{j} = {form}", n + 1, n + 1);
                identity_check(&mut rep, name, &l[n], lhs, rhs);
            }
        }
    }
    rep
}

/// M_n = ⋂_{i<n} Hker(d^n_i) with ∂_n the restriction of d^n_n.
#[derive(Clone, Debug)]
pub struct MooreComplex {
    pub terms: Vec<HopfSubalgebra>,
    /// `boundaries[n]`: M_n → M_{n−1} in RREF coordinates; `boundaries[0]` is
    /// the zero map to the zero space.
    pub boundaries: Vec<LinMap>,
    /// ∂_{n−1}∘∂_n = u∘ε on each M_n.
    pub chain: ValidationReport,
}

impl MooreComplex {
    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(|t| t.dim()).collect()
    }
}

pub fn moore_complex(s: &SimplicialHopf) -> Result<MooreComplex> {
    moore_complex_upto(s, s.top())
}

pub fn moore_complex_upto(s: &SimplicialHopf, top: usize) -> Result<MooreComplex> {
    let top = top.min(s.top());
    let mut terms = vec![HopfSubalgebra::whole(&s.levels[0])];
    let mut boundaries = vec![LinMap::zero(0, s.levels[0].dim())];
    for n in 1..=top {
        let h = &s.levels[n];
        let mut space = Subspace::full(h.dim());
        for i in 0..n {
            space = space.intersection(&hopf_kernel(s.face(n, i), h, &s.levels[n - 1]));
        }
        let m = HopfSubalgebra::new(h.clone(), space)?;
        boundaries.push(restrict_map(s.face(n, n), &m.space, &terms[n - 1].space)?);
        terms.push(m);
    }
    let mut chain = ValidationReport::new(format!("Moore complex of {}", s.name));
    for n in 2..=top {
        let dd = boundaries[n - 1].compose(&boundaries[n]);
        let one = terms[n - 2].coordinates(s.levels[n - 2].one()).expect("1 lies in every Moore term");
        let ue = LinMap::from_fn(dd.rows(), dd.cols(), |k| one.scale(&s.levels[n].counit(&terms[n].basis()[k])));
        let w = first_col_diff(&dd, &ue).map(|j| {
            Witness::note(vec![s.levels[n].render(&terms[n].basis()[j])], format!("{} vs {}", render_col(&dd, j), render_col(&ue, j)))
        });
        chain.push(Check::from_option(format!("∂_{}∘∂_{n} = u∘ε", n - 1), w));
    }
    Ok(MooreComplex { terms, boundaries, chain })
}

/// Largest n ≤ N with M_n ≠ k. `certified` records that M_i = k above N
/// follows from the object being a coskeleton.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MooreLength {
    pub length: usize,
    pub certified: bool,
    pub dims: Vec<usize>,
}

pub fn moore_length(s: &SimplicialHopf) -> Result<MooreLength> {
    let m = moore_complex(s)?;
    Ok(length_of(&m, s))
}

fn length_of(m: &MooreComplex, s: &SimplicialHopf) -> MooreLength {
    let dims = m.dims();
    let length = (1..dims.len()).rev().find(|&n| dims[n] > 1).unwrap_or(0);
    let certified = s.coskeletal.is_some_and(|c| c < s.top());
    MooreLength { length, certified, dims }
}

/// x ↦ x₁ s_i d_i(S(x₂)) on H_n, landing in Hker(d^n_i).
pub fn moore_projection(s: &SimplicialHopf, n: usize, i: usize) -> LinMap {
    let h = &s.levels[n];
    let sd = s.degen(n - 1, i).compose(s.face(n, i));
    LinMap::from_fn(h.dim(), h.dim(), |x| {
        let mut out = Vector::zero();
        for (x1, x2, c) in h.sweedler_basis(x) {
            let t = sd.apply(&h.antipode(&Vector::basis(x2)));
            out = out.add_scaled(&h.mul(&Vector::basis(x1), &t), c);
        }
        out
    })
}

/// Iterated coproduct of a basis element into `legs` tensor factors.
fn iterated_comul(h: &ColorHopfAlgebra, x: usize, legs: usize) -> Vec<(Vec<usize>, Scalar)> {
    let mut acc = vec![(vec![x], Scalar::one())];
    for _ in 1..legs {
        let mut next = vec![];
        for (t, c) in &acc {
            let last = *t.last().unwrap();
            for (a, b, d) in h.sweedler_basis(last) {
                let mut u = t[..t.len() - 1].to_vec();
                u.push(a);
                u.push(b);
                next.push((u, c * d));
            }
        }
        acc = next;
    }
    acc
}

/// One leg of the matching object: L_k ⊆ L_{k−1} ⊗ X_n with its leg projections.
struct Leg {
    alg: Hopf,
    space: Option<Subspace>,
    proj: Vec<LinMap>,
}

/// Coordinates in `legs[k]` of an element of X_n^{⊗(k+1)} given by tuples.
fn leg_coords(legs: &[Leg], k: usize, dn: usize, terms: Vec<(Vec<usize>, Scalar)>) -> Option<Vector> {
    if k == 0 {
        return Some(Vector::from_terms(terms.into_iter().map(|(t, c)| (t[0], c)).collect()));
    }
    let mut by_last: BTreeMap<usize, Vec<(Vec<usize>, Scalar)>> = BTreeMap::new();
    for (mut t, c) in terms {
        let e = t.pop().unwrap();
        by_last.entry(e).or_default().push((t, c));
    }
    let mut flat = vec![];
    for (e, sub) in by_last {
        let u = leg_coords(legs, k - 1, dn, sub)?;
        flat.extend(u.into_entries().into_iter().map(|(a, c)| (a * dn + e, c)));
    }
    let c = legs[k].space.as_ref().unwrap().coordinates(&Vector::from_terms(flat))?;
    Some(Vector::from_dense(&c))
}

/// Extend an n-truncated object by the matching object
/// X_{n+1} = {(x_0..x_{n+1}) : d_i x_j = d_{j−1} x_i, i < j} ⊆ X_n^{⊗(n+2)}.
/// The tensor power is the product of cocommutative Hopf algebras, so the
/// limit is an iterated pullback: leg k is cut out of L_{k−1} ⊗ X_n by
/// w₁ ⊗ d_{k−1}π_i(w₂) = w₁ ⊗ d_iπ_k(w₂) for i < k, and each L_k is
/// materialized before the next leg.
pub fn coskeleton_step(s: &SimplicialHopf) -> Result<SimplicialHopf> {
    let n = s.top();
    let xn = &s.levels[n];
    let dn = xn.dim();
    let prev = if n > 0 { s.levels[n - 1].dim() } else { 1 };
    let ctx = xn.ctx();
    let name = format!("{}_{}", s.name, n + 1);

    let mut legs = vec![Leg { alg: xn.clone(), space: None, proj: vec![LinMap::identity(dn)] }];
    for k in 1..=n + 1 {
        let l = legs[k - 1].alg.clone();
        let rk = l.dim();
        let cols = rk * dn;
        cols.checked_mul(prev)
            .and_then(|r| r.checked_mul(k))
            .ok_or_else(|| Error::TooLarge(format!("matching object at level {}", n + 1)))?;
        let f: Vec<LinMap> = if n > 0 {
            legs[k - 1].proj.iter().map(|p| s.face(n, k - 1).compose(p)).collect()
        } else {
            vec![]
        };
        let vecs = kernel_lazy(cols, |col| {
            if n == 0 {
                return Vector::zero();
            }
            let (a, e) = (col / dn, col % dn);
            let de = xn.deg(e);
            let mut t = vec![];
            for i in 0..k {
                let row = |a1: usize, e1: usize, y: usize| ((i * rk + a1) * dn + e1) * prev + y;
                for (a1, a2, c) in l.sweedler_basis(a) {
                    let sign = ctx.phi(l.deg(a2), de);
                    for (y, dy) in f[i].col(a2) {
                        t.push((row(a1, e, *y), &(c * sign) * dy));
                    }
                }
                for (e1, e2, c) in xn.sweedler_basis(e) {
                    for (y, dy) in s.face(n, i).col(e2) {
                        t.push((row(a, e1, *y), -(c * dy)));
                    }
                }
            }
            Vector::from_terms(t)
        });
        let sub = Subspace::from_vectors(cols, vecs);
        let amb = TensorAmbient::new(vec![&*l, &**xn])?;
        let label = |v: &Vector| {
            let lead = v.leading().unwrap();
            if v.nnz() == 1 && v.entries()[0].1.is_one() {
                amb.label(lead)
            } else {
                format!("⟨{}⟩", amb.label(lead))
            }
        };
        let alg = Arc::new(materialize_labeled(&amb, sub.basis(), &name, &label)?);
        let mut proj: Vec<LinMap> = legs[k - 1]
            .proj
            .iter()
            .map(|p| {
                LinMap::from_fn(dn, alg.dim(), |b| {
                    let mut acc = Vector::zero();
                    for (ae, c) in sub.basis()[b].iter() {
                        let (a, e) = (ae / dn, ae % dn);
                        let ce = xn.counit_basis(e);
                        if !ce.is_zero() {
                            acc = acc.add_scaled(&p.col_vec(a), &(c * ce));
                        }
                    }
                    acc
                })
            })
            .collect();
        proj.push(LinMap::from_fn(dn, alg.dim(), |b| {
            let mut t = vec![];
            for (ae, c) in sub.basis()[b].iter() {
                let (a, e) = (ae / dn, ae % dn);
                let ca = l.counit_basis(a);
                if !ca.is_zero() {
                    t.push((e, c * ca));
                }
            }
            Vector::from_terms(t)
        }));
        legs.push(Leg { alg, space: Some(sub), proj });
    }

    let top = legs[n + 1].alg.clone();
    let r = top.dim();
    let faces = legs[n + 1].proj.clone();

    // s_j from the cone d_i s_j given by the simplicial identities
    let mut degens = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let cone: Vec<LinMap> = (0..=n + 1)
            .map(|i| {
                if i == j || i == j + 1 {
                    LinMap::identity(dn)
                } else if i < j {
                    s.degen(n - 1, j - 1).compose(s.face(n, i))
                } else {
                    s.degen(n - 1, j).compose(s.face(n, i - 1))
                }
            })
            .collect();
        let mut cols = Vec::with_capacity(dn);
        for x in 0..dn {
            let mut terms = vec![];
            for (t, c) in iterated_comul(xn, x, n + 2) {
                let mut acc: Vec<(Vec<usize>, Scalar)> = vec![(vec![], c)];
                for (leg, &y) in t.iter().enumerate() {
                    let col = cone[leg].col(y);
                    let mut next = Vec::with_capacity(acc.len() * col.len());
                    for (u, a) in &acc {
                        for (p, b) in col {
                            let mut u = u.clone();
                            u.push(*p);
                            next.push((u, a * b));
                        }
                    }
                    acc = next;
                }
                terms.extend(acc);
            }
            let v = leg_coords(&legs, n + 1, dn, terms).ok_or_else(|| {
                Error::Factorization(format!("s^{}_{j}({}) is not in the matching object", n + 1, xn.label(x)))
            })?;
            cols.push(v);
        }
        degens.push(LinMap::from_columns(r, cols));
    }

    let mut out = s.clone();
    out.levels.push(top);
    out.faces.push(faces);
    out.degens.push(degens);
    out.coskeletal = Some(s.coskeletal.filter(|&c| c <= n).unwrap_or(n));
    Ok(out)
}

/// The simplicial object of a crossed module, up to level 3.
pub fn xmod_to_simplicial(x: &CrossedModule) -> Result<SimplicialHopf> {
    xmod_to_simplicial_to(x, 3)
}

/// H₀ = A, H₁ = H⋊A, H₂ = H⋊(H⋊A) with (h'⊗a)·h = (d(h')a)·h, extended by
/// coskeleton steps up to `level` (2 ≤ level ≤ 4).
pub fn xmod_to_simplicial_to(x: &CrossedModule, level: usize) -> Result<SimplicialHopf> {
    if !(2..=4).contains(&level) {
        return Err(Error::InvalidInput(format!("truncation level {level} outside 2..=4")));
    }
    validate_crossed_module(x).into_result()?;
    let (a, h) = (x.base(), x.top());
    let (na, nh) = (a.dim(), h.dim());
    let h1 = smash_product(&x.action)?;
    let n1 = h1.dim();
    let gamma = smash_target_map(x);
    let act = LinMap::from_fn(nh, n1 * nh, |k| {
        let (u, hh) = (k / nh, k % nh);
        x.action.apply(&gamma.col_vec(u), &Vector::basis(hh))
    });
    let m2 = ModuleAction::new(h1.clone(), h.clone(), act)?;
    validate_module_action(&m2).into_result()?;
    let h2: Hopf = Arc::new(
        smash_product_unchecked(&m2)?.with_name(format!("{0}⋊({0}⋊{1})", h.name(), a.name())),
    );

    let d10 = smash_projection_right(&x.action);
    let d11 = gamma.clone();
    let d20 = smash_projection_right(&m2);
    let d21 = LinMap::from_fn(n1, nh * n1, |k| {
        let (hh, u) = (k / n1, k % n1);
        h1.mul(&Vector::basis(hh).tensor(a.one(), na), &Vector::basis(u))
    });
    let d22 = LinMap::from_fn(n1, nh * n1, |k| {
        let (hh, u) = (k / n1, k % n1);
        Vector::basis(hh).tensor(&gamma.col_vec(u), na)
    });
    let s00 = smash_inclusion_right(&x.action);
    let s10 = smash_inclusion_right(&m2);
    let s11 = LinMap::from_fn(nh * n1, n1, |u| {
        let (hh, aa) = (u / na, u % na);
        Vector::basis(hh).tensor(&h.one().tensor(&Vector::basis(aa), na), n1)
    });
    // the computation that needs (cm2)
    verify_morphism(&d21, &h2, &h1).into_result()?;

    let mut s = SimplicialHopf::new(
        format!("N{}", x.name),
        vec![a.clone(), h1, h2],
        vec![vec![], vec![d10, d11], vec![d20, d21, d22]],
        vec![vec![s00], vec![s10, s11]],
    )?;
    while s.top() < level {
        s = coskeleton_step(&s)?;
    }
    s.coskeletal = Some(2);
    Ok(s)
}

/// The crossed module (H₀, M₁, ∂₁) with H₀ acting by conjugation through s¹₀.
#[derive(Clone, Debug)]
pub struct SimplicialXmod {
    pub xmod: CrossedModule,
    pub split: SplitAction,
}

pub fn simplicial_to_xmod(s: &SimplicialHopf) -> Result<SimplicialXmod> {
    if s.top() < 2 {
        return Err(Error::Hypothesis("Moore length one needs level 2".into()));
    }
    let m = moore_complex_upto(s, 2)?;
    if !m.terms[2].is_trivial() {
        return Err(Error::Hypothesis(format!("M₂ has dimension {}, Moore length is at least 2", m.terms[2].dim())));
    }
    let ext = SplitExtension {
        h: s.levels[1].clone(),
        a: s.levels[0].clone(),
        p: s.face(1, 0).clone(),
        i: s.degen(0, 0).clone(),
    };
    let split = split_to_action(&ext)?;
    split.report.clone().into_result()?;
    let d = LinMap::from_fn(s.levels[0].dim(), split.kernel.dim(), |k| s.face(1, 1).apply(&split.kernel.basis()[k]));
    let xmod = CrossedModule::new(format!("F{}", s.name), split.action.clone(), d)?;
    let rep = validate_crossed_module(&xmod);
    if !rep.passed() {
        return Err(Error::Disagreement(format!("F(simplicial) is not a crossed module:\n{rep}")));
    }
    Ok(SimplicialXmod { xmod, split })
}

/// F(N(X)) ≅ X through h ↦ h⊗1 ∈ M₁, over the identity on A.
pub fn simplicial_roundtrip(x: &CrossedModule, s: &SimplicialHopf) -> Result<ValidationReport> {
    let back = simplicial_to_xmod(s)?;
    let mut rep = ValidationReport::new(format!("F(N(X)) ≅ X for {}", x.name));
    let h = x.top();
    let na = x.base().dim();
    let kernel = &back.split.kernel;
    let cols = (0..h.dim())
        .map(|j| {
            kernel
                .coordinates(&Vector::basis(j).tensor(x.base().one(), na))
                .ok_or_else(|| Error::Disagreement("H⊗1 is not M₁".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let alpha = LinMap::from_columns(kernel.dim(), cols);
    iso_checks(&mut rep, "α: H → M₁", &alpha, h, back.xmod.top());
    maps_equal(&mut rep, "∂₁∘α = d", &back.xmod.d.compose(&alpha), &x.d);
    rep.push(crate::actions::actions_agree(&x.action, &back.xmod.action, &alpha));
    Ok(rep)
}

/// H₁ ≅ M₁⋊₀M₀ and H₂ ≅ (M₂⋊₁M₁)⋊₀(M₁⋊₀M₀).
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub moore_dims: Vec<usize>,
    /// Composite iso onto H₁.
    pub level1: LinMap,
    /// Composite iso onto H₂, when N ≥ 2.
    pub level2: Option<LinMap>,
    pub report: ValidationReport,
}

pub fn semidirect_decomposition_check(s: &SimplicialHopf) -> Result<Decomposition> {
    if s.top() < 1 {
        return Err(Error::InvalidInput("decomposition needs level 1".into()));
    }
    let top = s.top().min(2);
    let moore = moore_complex_upto(s, top)?;
    let md = moore.dims();
    let l = &s.levels;
    let mut rep = ValidationReport::new(format!("semidirect decomposition of {}", s.name));

    let ext1 = SplitExtension { h: l[1].clone(), a: l[0].clone(), p: s.face(1, 0).clone(), i: s.degen(0, 0).clone() };
    let sa1 = split_to_action(&ext1)?;
    rep.extend("H₁ ≅ M₁⋊₀M₀: ", sa1.report.clone());
    rep.push(Check::from_bool("dim H₁ = dim M₁·dim M₀", l[1].dim() == md[1] * md[0], || {
        Witness::note(vec![], format!("{} vs {}·{}", l[1].dim(), md[1], md[0]))
    }));
    if top < 2 {
        return Ok(Decomposition { moore_dims: md, level1: sa1.f.clone(), level2: None, report: rep });
    }

    let ext2 = SplitExtension { h: l[2].clone(), a: l[1].clone(), p: s.face(2, 0).clone(), i: s.degen(1, 0).clone() };
    let sa2 = split_to_action(&ext2)?;
    rep.extend("H₂ ≅ Hker(d₀)⋊₀H₁: ", sa2.report.clone());
    // Hker(d₀) ⇄ M₁ through d₁ and s₁
    let k2 = &sa2.kernel;
    let p_in = LinMap::from_fn(sa1.kernel.dim(), k2.dim(), |k| {
        let v = s.face(2, 1).apply(&k2.basis()[k]);
        sa1.kernel.coordinates(&v).unwrap_or_else(Vector::zero)
    });
    let i_in = LinMap::from_fn(k2.dim(), sa1.kernel.dim(), |k| {
        let v = s.degen(1, 1).apply(&sa1.kernel.basis()[k]);
        k2.coordinates(&v).unwrap_or_else(Vector::zero)
    });
    let ext_in = SplitExtension { h: sa2.action.carrier.clone(), a: sa1.action.carrier.clone(), p: p_in, i: i_in };
    let sa_in = split_to_action(&ext_in)?;
    rep.extend("Hker(d₀) ≅ M₂⋊₁M₁: ", sa_in.report.clone());
    let m2_in_h2 = Subspace::from_vectors(
        l[2].dim(),
        sa_in.kernel.basis().iter().map(|v| k2.space.inclusion().apply(v)),
    );
    rep.push(Check::from_bool("Hker(d₁|) = M₂", m2_in_h2 == moore.terms[2].space, || {
        Witness::note(vec![], format!("dimensions {} and {}", m2_in_h2.dim(), md[2]))
    }));

    // transport the outer action to (M₁⋊₀M₀) acting on (M₂⋊₁M₁)
    let (phi1, psi, psi_inv) = (&sa1.f, &sa_in.f, &sa_in.g);
    let (actor, carrier) = (sa1.smash.clone(), sa_in.smash.clone());
    let nc = carrier.dim();
    let act = LinMap::from_fn(nc, actor.dim() * nc, |k| {
        let (u, y) = (k / nc, k % nc);
        psi_inv.apply(&sa2.action.apply(&phi1.col_vec(u), &psi.col_vec(y)))
    });
    let outer = ModuleAction::new(actor, carrier, act)?;
    rep.extend("outer action: ", validate_module_action(&outer));
    let big = Arc::new(smash_product_unchecked(&outer)?);
    let f = sa2.f.compose(&psi.tensor(phi1));
    iso_checks(&mut rep, "(M₂⋊₁M₁)⋊₀(M₁⋊₀M₀) → H₂", &f, &big, &l[2]);
    let fs = f.compose(big.antipode_map());
    let sf = l[2].antipode_map().compose(&f);
    maps_equal(&mut rep, "composite commutes with S", &fs, &sf);
    rep.push(Check::from_bool("dim H₂ = dim M₂·dim M₁·dim M₁·dim M₀", l[2].dim() == md[2] * md[1] * md[1] * md[0], || {
        Witness::note(vec![], format!("{} vs {}·{}·{}·{}", l[2].dim(), md[2], md[1], md[1], md[0]))
    }));

    rep.push(f2_lemma(s, &moore));
    Ok(Decomposition { moore_dims: md, level1: sa1.f.clone(), level2: Some(f), report: rep })
}

/// f²(s₀(x) ▷ s₁(y)) ∈ M₂ and equals φ(|x₂|,|y₁|)(s₀(x₁)▷s₁(y₁))S(s₁(x₂)▷s₁(y₂))
/// for x ∈ H₁, y ∈ M₁.
fn f2_lemma(s: &SimplicialHopf, moore: &MooreComplex) -> Check {
    let (h1, h2) = (&s.levels[1], &s.levels[2]);
    let f2 = moore_projection(s, 2, 1).compose(&moore_projection(s, 2, 0));
    let (s0, s1) = (s.degen(1, 0), s.degen(1, 1));
    let name = "f²(s₀(x)▷s₁(y)) ∈ M₂ expands as in the lemma";
    for x in 0..h1.dim() {
        for y in moore.terms[1].basis() {
            let xv = Vector::basis(x);
            let lhs = f2.apply(&h2.adjoint(&s0.apply(&xv), &s1.apply(y)));
            if !moore.terms[2].contains(&lhs) {
                return Check::fail(name, Witness::note(vec![h1.label(x).into(), h1.render(y)], "value leaves M₂"));
            }
            let mut rhs = Vector::zero();
            for (x1, x2, c) in h1.sweedler_basis(x) {
                for (y1, y2, d) in h1.sweedler(y) {
                    let sign = &(c * &d) * h1.phi(h1.deg(x2), h1.deg(y1));
                    let left = h2.adjoint(&s0.col_vec(x1), &s1.col_vec(y1));
                    let right = h2.antipode(&h2.adjoint(&s1.col_vec(x2), &s1.col_vec(y2)));
                    rhs = rhs.add_scaled(&h2.mul(&left, &right), &sign);
                }
            }
            if lhs != rhs {
                return Check::fail(
                    name,
                    Witness::new(vec![x], vec![h1.label(x).into(), h1.render(y)], h2.render(&lhs), h2.render(&rhs)),
                );
            }
        }
    }
    Check::pass(name)
}
