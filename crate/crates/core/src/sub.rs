//! Hopf subalgebras, Hopf kernels, generated subalgebras, quotients by normal
//! Hopf subalgebras, and pullbacks.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::hopf::{ColorHopfAlgebra, Hopf};
use crate::linalg::{kernel_lazy, Echelon, GradedSpace, LinMap, Subspace, Vector};
use crate::scalar::Scalar;
use crate::tensor::{materialize, TensorAmbient};
use crate::verify::{verify_morphism, Witness};

/// Spans of the left and right tensor legs of `w ∈ k^n ⊗ k^m`.
pub fn legs(w: &Vector, n: usize, m: usize) -> (Subspace, Subspace) {
    let mut left: HashMap<usize, Vec<(usize, Scalar)>> = HashMap::new();
    let mut right: HashMap<usize, Vec<(usize, Scalar)>> = HashMap::new();
    for (k, c) in w.iter() {
        let (i, j) = (k / m, k % m);
        left.entry(j).or_default().push((i, c.clone()));
        right.entry(i).or_default().push((j, c.clone()));
    }
    (
        Subspace::from_vectors(n, left.into_values().map(Vector::from_terms)),
        Subspace::from_vectors(m, right.into_values().map(Vector::from_terms)),
    )
}

/// Subspace of A containing 1 and closed under m, Δ and S.
#[derive(Clone, Debug)]
pub struct HopfSubalgebra {
    pub ambient: Hopf,
    pub space: Subspace,
}

/// What is missing for a subspace to be a Hopf subalgebra.
pub fn subalgebra_defect(a: &ColorHopfAlgebra, x: &Subspace) -> Option<String> {
    if !x.contains(a.one()) {
        return Some("does not contain 1".into());
    }
    let basis = x.basis();
    for u in basis {
        if a.degree_of(u).is_none() {
            return Some(format!("basis vector {} is not homogeneous", a.render(u)));
        }
    }
    for u in basis {
        for v in basis {
            let p = a.mul(u, v);
            if !x.contains(&p) {
                return Some(format!("{} · {} = {} lies outside", a.render(u), a.render(v), a.render(&p)));
            }
        }
    }
    for u in basis {
        let (l, r) = legs(&a.comul(u), a.dim(), a.dim());
        if !x.contains_space(&l) || !x.contains_space(&r) {
            return Some(format!("Δ({}) leaves the subspace", a.render(u)));
        }
        let s = a.antipode(u);
        if !x.contains(&s) {
            return Some(format!("S({}) = {} lies outside", a.render(u), a.render(&s)));
        }
    }
    None
}

impl HopfSubalgebra {
    pub fn new(ambient: Hopf, space: Subspace) -> Result<Self> {
        if space.ambient_dim() != ambient.dim() {
            return Err(Error::Dimension("subspace of a different space".into()));
        }
        if let Some(d) = subalgebra_defect(&ambient, &space) {
            return Err(Error::NotSubalgebra(d));
        }
        Ok(HopfSubalgebra { ambient, space })
    }

    pub fn whole(ambient: &Hopf) -> Self {
        HopfSubalgebra { space: Subspace::full(ambient.dim()), ambient: ambient.clone() }
    }

    pub fn trivial(ambient: &Hopf) -> Self {
        HopfSubalgebra {
            space: Subspace::from_vectors(ambient.dim(), [ambient.one().clone()]),
            ambient: ambient.clone(),
        }
    }

    /// Hopf closure of the given elements.
    pub fn generated(ambient: &Hopf, gens: &[Vector]) -> Self {
        HopfSubalgebra {
            space: closure(ambient, gens, ClosureMode::Hopf),
            ambient: ambient.clone(),
        }
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn basis(&self) -> &[Vector] {
        self.space.basis()
    }

    pub fn contains(&self, v: &Vector) -> bool {
        self.space.contains(v)
    }

    pub fn is_trivial(&self) -> bool {
        self.space.dim() == 1
    }

    pub fn intersect(&self, other: &HopfSubalgebra) -> HopfSubalgebra {
        HopfSubalgebra { ambient: self.ambient.clone(), space: self.space.intersection(&other.space) }
    }

    /// Standalone algebra on the RREF basis and its inclusion into the ambient.
    pub fn to_algebra(&self, name: &str) -> Result<(ColorHopfAlgebra, LinMap)> {
        let amb = TensorAmbient::new(vec![&*self.ambient])?;
        let alg = materialize(&amb, self.space.basis(), name)?;
        Ok((alg, self.space.inclusion()))
    }

    /// Coordinates of an ambient vector in the RREF basis.
    pub fn coordinates(&self, v: &Vector) -> Option<Vector> {
        self.space.coordinates(v).map(|c| Vector::from_dense(&c))
    }

    pub fn dims_by_degree(&self) -> Vec<usize> {
        let a = &self.ambient;
        let mut out = vec![0; a.ctx().group.size()];
        for b in self.space.basis() {
            out[a.degree_of(b).unwrap()] += 1;
        }
        out
    }
}

/// Hker(f) = {a : (id⊗f)Δ(a) = a⊗1_B}.
pub fn hopf_kernel(f: &LinMap, a: &ColorHopfAlgebra, b: &ColorHopfAlgebra) -> Subspace {
    let nb = b.dim();
    let one_b = b.one();
    let vecs = kernel_lazy(a.dim(), |i| {
        let mut t = vec![];
        for (a1, a2, c) in a.sweedler_basis(i) {
            for (y, d) in f.col(a2) {
                t.push((a1 * nb + y, c * d));
            }
        }
        for (y, d) in one_b.iter() {
            t.push((i * nb + y, -d));
        }
        Vector::from_terms(t)
    });
    Subspace::from_vectors(a.dim(), vecs)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosureMode {
    Algebra,
    Hopf,
}

fn algebra_closure(a: &ColorHopfAlgebra, start: Subspace, gens: &[Vector]) -> Subspace {
    // Words in the generators: close span{1} ∪ start under left multiplication.
    let mut ech = Echelon::new(false);
    let mut frontier: Vec<Vector> = vec![];
    for v in std::iter::once(a.one().clone()).chain(start.basis().iter().cloned()) {
        if ech.insert(v.clone()) {
            frontier.push(v);
        }
    }
    let gens: Vec<Vector> = if gens.is_empty() { start.basis().to_vec() } else { gens.to_vec() };
    while let Some(v) = frontier.pop() {
        for g in &gens {
            for w in [a.mul(g, &v), a.mul(&v, g)] {
                if ech.insert(w.clone()) {
                    frontier.push(w);
                }
            }
        }
    }
    Subspace::from_rref_unchecked(a.dim(), ech.into_rref())
}

/// Smallest subalgebra (or Hopf subalgebra) containing `gens`.
pub fn closure(a: &ColorHopfAlgebra, gens: &[Vector], mode: ClosureMode) -> Subspace {
    let n = a.dim();
    let mut parts = vec![];
    for g in gens {
        for (_, h) in a.homogeneous_parts(g) {
            parts.push(h);
        }
    }
    let mut cur = algebra_closure(a, Subspace::from_vectors(n, parts.clone()), &parts);
    if mode == ClosureMode::Algebra {
        return cur;
    }
    loop {
        let mut extra: Vec<Vector> = cur.basis().to_vec();
        for u in cur.basis() {
            extra.push(a.antipode(u));
            let (l, r) = legs(&a.comul(u), n, n);
            extra.extend(l.basis().iter().cloned());
            extra.extend(r.basis().iter().cloned());
        }
        let grown = Subspace::from_vectors(n, extra);
        if grown == cur {
            return cur;
        }
        let gens = grown.basis().to_vec();
        cur = algebra_closure(a, grown, &gens);
    }
}

/// First `(a, x)` with `ad_a(x) ∉ X`.
pub fn normality_witness(a: &ColorHopfAlgebra, x: &Subspace) -> Option<Witness> {
    for i in 0..a.dim() {
        for b in x.basis() {
            let v = a.adjoint(&Vector::basis(i), b);
            if !x.contains(&v) {
                return Some(Witness::new(
                    vec![i],
                    vec![a.label(i).to_string(), a.render(b)],
                    format!("{} ▷ {} = {}", a.label(i), a.render(b), a.render(&v)),
                    "outside the subalgebra".into(),
                ));
            }
        }
    }
    None
}

pub fn is_normal(a: &ColorHopfAlgebra, x: &Subspace) -> bool {
    normality_witness(a, x).is_none()
}

/// A/A·B⁺ with its projection.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub algebra: Hopf,
    /// q: A → A/I
    pub map: LinMap,
    pub ideal: Subspace,
    /// Basis indices of A whose images form the quotient basis.
    pub representatives: Vec<usize>,
}

impl Quotient {
    /// Reduce modulo I and express in the quotient basis.
    pub fn project(&self, v: &Vector) -> Vector {
        self.map.apply(v)
    }
}

/// B⁺ = B ∩ ker ε, spanned by b − ε(b)1.
pub fn augmentation_ideal_basis(a: &ColorHopfAlgebra, b: &Subspace) -> Vec<Vector> {
    b.basis()
        .iter()
        .map(|v| v.add_scaled(a.one(), &-a.counit(v)))
        .filter(|v| !v.is_zero())
        .collect()
}

/// The ideal A·X⁺ for a subspace X.
pub fn left_ideal_of(a: &ColorHopfAlgebra, x: &Subspace) -> Subspace {
    let plus = augmentation_ideal_basis(a, x);
    let mut vs = vec![];
    for i in 0..a.dim() {
        for p in &plus {
            vs.push(a.mul(&Vector::basis(i), p));
        }
    }
    Subspace::from_vectors(a.dim(), vs)
}

/// Projection onto the complement of `ideal` spanned by non-pivot unit vectors.
fn projection_onto_complement(ideal: &Subspace) -> (LinMap, Vec<usize>) {
    let n = ideal.ambient_dim();
    let reps = ideal.complement_indices();
    let pos: HashMap<usize, usize> = reps.iter().enumerate().map(|(k, &j)| (j, k)).collect();
    let piv = ideal.pivot_index();
    let q = LinMap::from_fn(reps.len(), n, |j| {
        if let Some(&k) = pos.get(&j) {
            Vector::basis(k)
        } else {
            let row = &ideal.basis()[piv[&j]];
            Vector::from_terms(
                row.iter().filter(|(i, _)| *i != j).map(|(i, c)| (pos[&i], -c)).collect(),
            )
        }
    });
    (q, reps)
}

/// A/A·B⁺ for a normal Hopf subalgebra B of A.
pub fn quotient_by_normal(a: &Hopf, b: &HopfSubalgebra, name: &str) -> Result<Quotient> {
    if !Arc::ptr_eq(a, &b.ambient) && a.dim() != b.ambient.dim() {
        return Err(Error::Dimension("subalgebra of a different algebra".into()));
    }
    if let Some(w) = normality_witness(a, &b.space) {
        return Err(Error::NotNormal(w.to_string()));
    }
    let ideal = left_ideal_of(a, &b.space);
    let n = a.dim();
    for u in ideal.basis() {
        for j in 0..n {
            let v = a.mul(u, &Vector::basis(j));
            if !ideal.contains(&v) {
                return Err(Error::NotNormal(format!(
                    "A·B⁺ is not a right ideal: {} · {} = {}",
                    a.render(u),
                    a.label(j),
                    a.render(&v)
                )));
            }
        }
        if !a.counit(u).is_zero() || !ideal.contains(&a.antipode(u)) {
            return Err(Error::NotNormal(format!(
                "A·B⁺ is not ε- or S-stable at {}",
                a.render(u)
            )));
        }
    }
    let (q, reps) = projection_onto_complement(&ideal);
    let r = reps.len();
    for u in ideal.basis() {
        let d = a.comul(u);
        let img = crate::verify::tensor_apply_same(&q, &d, n, r);
        if !img.is_zero() {
            return Err(Error::NotNormal(format!("A·B⁺ is not a coideal at {}", a.render(u))));
        }
    }
    let labels = reps.iter().map(|&j| format!("[{}]", a.label(j))).collect();
    let degrees = reps.iter().map(|&j| a.deg(j)).collect();
    let mult = LinMap::from_fn(r, r * r, |k| {
        q.apply(&Vector::from_canonical(a.mul_basis(reps[k / r], reps[k % r]).to_vec()))
    });
    let comult = LinMap::from_fn(r * r, r, |k| {
        crate::verify::tensor_apply_same(
            &q,
            &Vector::from_canonical(a.comul_basis(reps[k]).to_vec()),
            n,
            r,
        )
    });
    let antipode = LinMap::from_fn(r, r, |k| q.apply(&a.antipode(&Vector::basis(reps[k]))));
    let counit = reps.iter().map(|&j| a.counit_basis(j).clone()).collect();
    let alg = ColorHopfAlgebra::from_parts(
        a.ctx().clone(),
        name,
        GradedSpace::new(degrees, labels)?,
        q.apply(a.one()),
        mult,
        counit,
        comult,
        antipode,
    )?;
    verify_morphism(&q, a, &alg).into_result()?;
    Ok(Quotient { algebra: Arc::new(alg), map: q, ideal, representatives: reps })
}

/// A ×_C B as a Hopf subalgebra of A⊗B.
#[derive(Clone, Debug)]
pub struct Pullback {
    pub algebra: Hopf,
    /// The pullback as a subspace of A⊗B.
    pub space: Subspace,
    /// Basis of the pullback inside A⊗B.
    pub embedding: LinMap,
    pub proj_a: LinMap,
    pub proj_b: LinMap,
}

/// {x ∈ A⊗B : x₁ ⊗ f(x₂) ⊗ x₃ = x₁ ⊗ g(x₂) ⊗ x₃ across the middle leg}.
pub fn pullback(
    a: &ColorHopfAlgebra,
    b: &ColorHopfAlgebra,
    c: &ColorHopfAlgebra,
    f: &LinMap,
    g: &LinMap,
    name: &str,
) -> Result<Pullback> {
    if f.cols() != a.dim() || g.cols() != b.dim() || f.rows() != c.dim() || g.rows() != c.dim() {
        return Err(Error::Dimension("pullback maps do not match".into()));
    }
    let (na, nb, nc) = (a.dim(), b.dim(), c.dim());
    let vecs = kernel_lazy(na * nb, |k| {
        let (i, j) = (k / nb, k % nb);
        let mut t = vec![];
        for (a1, a2, x) in a.sweedler_basis(i) {
            for (y, d) in f.col(a2) {
                t.push(((a1 * nc + y) * nb + j, x * d));
            }
        }
        for (b1, b2, x) in b.sweedler_basis(j) {
            for (y, d) in g.col(b1) {
                t.push(((i * nc + y) * nb + b2, -(x * d)));
            }
        }
        Vector::from_terms(t)
    });
    let space = Subspace::from_vectors(na * nb, vecs);
    let amb = TensorAmbient::new(vec![a, b])?;
    let alg = materialize(&amb, space.basis(), name)?;
    let emb = space.inclusion();
    let proj_a = LinMap::from_fn(na, space.dim(), |k| amb.project(&space.basis()[k], 0));
    let proj_b = LinMap::from_fn(nb, space.dim(), |k| amb.project(&space.basis()[k], 1));
    Ok(Pullback { algebra: Arc::new(alg), space, embedding: emb, proj_a, proj_b })
}

/// Image of a Hopf morphism as a subspace of the target.
pub fn image(f: &LinMap) -> Subspace {
    f.image()
}

/// Restriction of `f: A → B` to subalgebras X ⊆ A, Y ⊆ B, in RREF coordinates.
pub fn restrict_map(f: &LinMap, x: &Subspace, y: &Subspace) -> Result<LinMap> {
    let mut cols = Vec::with_capacity(x.dim());
    for v in x.basis() {
        let w = f.apply(v);
        let c = y
            .coordinates(&w)
            .ok_or_else(|| Error::NotMorphism("image leaves the target subalgebra".into()))?;
        cols.push(Vector::from_dense(&c));
    }
    Ok(LinMap::from_columns(y.dim(), cols))
}
