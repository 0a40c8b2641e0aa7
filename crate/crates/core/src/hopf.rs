//! Finite-dimensional color Hopf algebras given by structure constants.

use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grading::{ColorContext, Ctx, Deg};
use crate::linalg::{GradedMap, GradedSpace, LinMap, Vector};
use crate::scalar::Scalar;

pub type Hopf = Arc<ColorHopfAlgebra>;

/// One of the five structure maps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StructureMap {
    Unit,
    Mult,
    Counit,
    Comult,
    Antipode,
}

/// (A, m, u, Δ, ε, S) over a color context. Tensor indices are row-major:
/// the pair `(i, j)` of `A⊗A` has index `i·dim + j`.
#[derive(Clone, Debug)]
pub struct ColorHopfAlgebra {
    ctx: Ctx,
    name: String,
    space: GradedSpace,
    unit: Vector,
    mult: LinMap,
    counit: Vec<Scalar>,
    comult: LinMap,
    antipode: LinMap,
    adjoint: OnceLock<LinMap>,
}

impl ColorHopfAlgebra {
    /// Assemble from structure constants. Checks shapes and grading only;
    /// use [`crate::verify::verify_hopf`] for the axioms.
    pub fn from_parts(
        ctx: Ctx,
        name: impl Into<String>,
        space: GradedSpace,
        unit: Vector,
        mult: LinMap,
        counit: Vec<Scalar>,
        comult: LinMap,
        antipode: LinMap,
    ) -> Result<Self> {
        let n = space.dim();
        let name = name.into();
        let shape = |what: &str, m: &LinMap, r: usize, c: usize| {
            if m.rows() != r || m.cols() != c {
                Err(Error::Dimension(format!(
                    "{name}: {what} is {}×{}, expected {r}×{c}",
                    m.rows(),
                    m.cols()
                )))
            } else {
                Ok(())
            }
        };
        shape("m", &mult, n, n * n)?;
        shape("Δ", &comult, n * n, n)?;
        shape("S", &antipode, n, n)?;
        if counit.len() != n || unit.max_index().map_or(false, |m| m >= n) {
            return Err(Error::Dimension(format!("{name}: unit or counit has wrong length")));
        }
        let g = &ctx.group;
        let pair_deg: Vec<Deg> = (0..n * n)
            .map(|k| g.add(space.degrees[k / n], space.degrees[k % n]))
            .collect();
        let lab = |k: usize| space.labels[k].clone();
        let plab = |k: usize| format!("{}⊗{}", space.labels[k / n], space.labels[k % n]);
        if let Some((i, j)) = mult.degree_violation(&pair_deg, &space.degrees) {
            return Err(Error::NotGraded(format!("{name}: m({}) has a {} term", plab(j), lab(i))));
        }
        if let Some((i, j)) = comult.degree_violation(&space.degrees, &pair_deg) {
            return Err(Error::NotGraded(format!("{name}: Δ({}) has a {} term", lab(j), plab(i))));
        }
        if let Some((i, j)) = antipode.degree_violation(&space.degrees, &space.degrees) {
            return Err(Error::NotGraded(format!("{name}: S({}) has a {} term", lab(j), lab(i))));
        }
        if let Some((i, _)) = unit.iter().find(|(i, _)| space.degrees[*i] != 0) {
            return Err(Error::NotGraded(format!("{name}: unit has a {} term", lab(i))));
        }
        if let Some(i) = (0..n).find(|&i| !counit[i].is_zero() && space.degrees[i] != 0) {
            return Err(Error::NotGraded(format!("{name}: ε({}) ≠ 0", lab(i))));
        }
        let f = ctx.field;
        let norm = |m: LinMap| {
            LinMap::from_fn(m.rows(), m.cols(), |j| {
                Vector::from_terms(m.col(j).iter().map(|(i, c)| (*i, c.in_field(f))).collect())
            })
        };
        let unit = Vector::from_terms(unit.iter().map(|(i, c)| (i, c.in_field(f))).collect());
        Ok(ColorHopfAlgebra {
            mult: norm(mult),
            comult: norm(comult),
            antipode: norm(antipode),
            counit: counit.iter().map(|c| c.in_field(f)).collect(),
            unit,
            ctx,
            name,
            space,
            adjoint: OnceLock::new(),
        })
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn space(&self) -> &GradedSpace {
        &self.space
    }

    pub fn degrees(&self) -> &[Deg] {
        &self.space.degrees
    }

    pub fn deg(&self, i: usize) -> Deg {
        self.space.degrees[i]
    }

    pub fn label(&self, i: usize) -> &str {
        &self.space.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.space.labels
    }

    pub fn phi(&self, a: Deg, b: Deg) -> &Scalar {
        self.ctx.phi(a, b)
    }

    pub fn same_context(&self, other: &ColorHopfAlgebra) -> bool {
        ColorContext::same(&self.ctx, &other.ctx)
    }

    pub fn pair(&self, i: usize, j: usize) -> usize {
        i * self.dim() + j
    }

    pub fn unpair(&self, k: usize) -> (usize, usize) {
        (k / self.dim(), k % self.dim())
    }

    pub fn one(&self) -> &Vector {
        &self.unit
    }

    pub fn mult_map(&self) -> &LinMap {
        &self.mult
    }

    pub fn comult_map(&self) -> &LinMap {
        &self.comult
    }

    pub fn antipode_map(&self) -> &LinMap {
        &self.antipode
    }

    pub fn counit_values(&self) -> &[Scalar] {
        &self.counit
    }

    pub fn unit_map(&self) -> LinMap {
        LinMap::from_columns(self.dim(), vec![self.unit.clone()])
    }

    pub fn counit_map(&self) -> LinMap {
        LinMap::from_fn(1, self.dim(), |j| Vector::monomial(0, self.counit[j].clone()))
    }

    pub fn structure_map(&self, which: StructureMap) -> LinMap {
        match which {
            StructureMap::Unit => self.unit_map(),
            StructureMap::Mult => self.mult.clone(),
            StructureMap::Counit => self.counit_map(),
            StructureMap::Comult => self.comult.clone(),
            StructureMap::Antipode => self.antipode.clone(),
        }
    }

    /// The same data with one structure map replaced; no axiom checks.
    pub fn with_structure_map(&self, which: StructureMap, m: LinMap) -> Result<Self> {
        let mut parts = (
            self.unit.clone(),
            self.mult.clone(),
            self.counit.clone(),
            self.comult.clone(),
            self.antipode.clone(),
        );
        match which {
            StructureMap::Unit => {
                if m.cols() != 1 {
                    return Err(Error::Dimension("unit must have one column".into()));
                }
                parts.0 = m.col_vec(0);
            }
            StructureMap::Mult => parts.1 = m,
            StructureMap::Counit => {
                if m.rows() != 1 {
                    return Err(Error::Dimension("counit must have one row".into()));
                }
                parts.2 = (0..m.cols()).map(|j| m.entry(0, j)).collect();
            }
            StructureMap::Comult => parts.3 = m,
            StructureMap::Antipode => parts.4 = m,
        }
        ColorHopfAlgebra::from_parts(
            self.ctx.clone(),
            self.name.clone(),
            self.space.clone(),
            parts.0,
            parts.1,
            parts.2,
            parts.3,
            parts.4,
        )
    }

    pub fn graded_map(&self, which: StructureMap) -> GradedMap {
        let g = &self.ctx.group;
        let aa = self.space.tensor(&self.space, g);
        let k = GradedSpace::unit();
        let (s, t) = match which {
            StructureMap::Unit => (k, self.space.clone()),
            StructureMap::Mult => (aa, self.space.clone()),
            StructureMap::Counit => (self.space.clone(), k),
            StructureMap::Comult => (self.space.clone(), aa),
            StructureMap::Antipode => (self.space.clone(), self.space.clone()),
        };
        GradedMap { source: s, target: t, matrix: self.structure_map(which) }
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        self.mult.col(i * self.dim() + j)
    }

    pub fn mul(&self, a: &Vector, b: &Vector) -> Vector {
        let mut terms = Vec::with_capacity(a.nnz() * b.nnz());
        for (i, x) in a.iter() {
            for (j, y) in b.iter() {
                let xy = x * y;
                for (k, z) in self.mul_basis(i, j) {
                    terms.push((*k, z * &xy));
                }
            }
        }
        Vector::from_terms(terms)
    }

    pub fn mul_all(&self, factors: &[&Vector]) -> Vector {
        let mut acc = self.unit.clone();
        for f in factors {
            acc = self.mul(&acc, f);
        }
        acc
    }

    pub fn comul_basis(&self, i: usize) -> &[(usize, Scalar)] {
        self.comult.col(i)
    }

    pub fn comul(&self, a: &Vector) -> Vector {
        self.comult.apply(a)
    }

    /// Δ(a) as a list of `(a₁, a₂, coefficient)` basis terms.
    pub fn sweedler(&self, a: &Vector) -> Vec<(usize, usize, Scalar)> {
        self.comul(a)
            .iter()
            .map(|(k, c)| (k / self.dim(), k % self.dim(), c.clone()))
            .collect()
    }

    pub fn sweedler_basis(&self, i: usize) -> impl Iterator<Item = (usize, usize, &Scalar)> + '_ {
        let n = self.dim();
        self.comul_basis(i).iter().map(move |(k, c)| (k / n, k % n, c))
    }

    pub fn counit(&self, a: &Vector) -> Scalar {
        let mut s = Scalar::zero();
        for (i, c) in a.iter() {
            if !self.counit[i].is_zero() {
                s = &s + &(c * &self.counit[i]);
            }
        }
        s
    }

    pub fn counit_basis(&self, i: usize) -> &Scalar {
        &self.counit[i]
    }

    pub fn antipode(&self, a: &Vector) -> Vector {
        self.antipode.apply(a)
    }

    pub fn degree_of(&self, v: &Vector) -> Option<Deg> {
        self.space.degree_of(v)
    }

    /// Split a vector into its homogeneous components.
    pub fn homogeneous_parts(&self, v: &Vector) -> Vec<(Deg, Vector)> {
        let mut by: std::collections::BTreeMap<Deg, Vec<(usize, Scalar)>> = Default::default();
        for (i, c) in v.iter() {
            by.entry(self.deg(i)).or_default().push((i, c.clone()));
        }
        by.into_iter().map(|(d, t)| (d, Vector::from_terms(t))).collect()
    }

    pub fn render(&self, v: &Vector) -> String {
        v.render(&|i| self.space.labels[i].clone())
    }

    pub fn render_pair(&self, v: &Vector) -> String {
        let n = self.dim();
        v.render(&|k| format!("{}⊗{}", self.space.labels[k / n], self.space.labels[k % n]))
    }

    /// ξ(e_i⊗e_j) = φ(|a₂|,|e_j|) a₁ e_j S(a₂), as a dim × dim² matrix.
    pub fn adjoint_map(&self) -> &LinMap {
        self.adjoint.get_or_init(|| {
            let n = self.dim();
            LinMap::from_fn(n, n * n, |k| {
                let (i, j) = (k / n, k % n);
                let mut terms = vec![];
                for (a1, a2, c) in self.sweedler_basis(i) {
                    let s = c * self.phi(self.deg(a2), self.deg(j));
                    for (p, x) in self.mul_basis(a1, j) {
                        for (q, y) in self.antipode_map().col(a2) {
                            for (r, z) in self.mul_basis(*p, *q) {
                                terms.push((*r, &(&(x * y) * z) * &s));
                            }
                        }
                    }
                }
                Vector::from_terms(terms)
            })
        })
    }

    /// Adjoint action a ▷ b.
    pub fn adjoint(&self, a: &Vector, b: &Vector) -> Vector {
        self.adjoint_map().apply(&a.tensor(b, self.dim()))
    }

    pub fn is_group_like(&self, v: &Vector) -> bool {
        self.counit(v).is_one() && self.comul(v) == v.tensor(v, self.dim())
    }

    pub fn is_primitive(&self, v: &Vector) -> bool {
        let n = self.dim();
        self.comul(v) == v.tensor(&self.unit, n).add(&self.unit.tensor(v, n))
    }
}

impl fmt::Display for ColorHopfAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (dim {}, {})", self.name, self.dim(), self.ctx)
    }
}

/// (f⊗g)(Σ c·a⊗b) where the pair lives in A⊗B with `dim_b` columns.
pub fn tensor_apply(
    f: impl Fn(usize) -> Vector,
    g: impl Fn(usize) -> Vector,
    v: &Vector,
    dim_b: usize,
    dim_g_target: usize,
) -> Vector {
    let mut terms = vec![];
    for (k, c) in v.iter() {
        let (a, b) = (k / dim_b, k % dim_b);
        let fa = f(a);
        if fa.is_zero() {
            continue;
        }
        let gb = g(b);
        for (x, y) in fa.iter() {
            for (z, w) in gb.iter() {
                terms.push((x * dim_g_target + z, &(y * w) * c));
            }
        }
    }
    Vector::from_terms(terms)
}
