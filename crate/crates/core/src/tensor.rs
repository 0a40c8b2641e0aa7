//! Tensor products of Hopf algebras evaluated on the fly, and subalgebras of
//! them turned into standalone algebras.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::grading::{Ctx, Deg};
use crate::hopf::ColorHopfAlgebra;
use crate::linalg::{GradedSpace, LinMap, Vector};
use crate::scalar::Scalar;

/// A_0 ⊗ … ⊗ A_{k-1} with mixed-radix basis indices, first factor most significant.
#[derive(Clone)]
pub struct TensorAmbient<'a> {
    factors: Vec<&'a ColorHopfAlgebra>,
    strides: Vec<usize>,
    total: usize,
}

impl<'a> TensorAmbient<'a> {
    pub fn new(factors: Vec<&'a ColorHopfAlgebra>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidInput("empty tensor product".into()));
        }
        if factors.iter().any(|f| !f.same_context(factors[0])) {
            return Err(Error::ContextMismatch);
        }
        let mut strides = vec![1; factors.len()];
        let mut total = 1usize;
        for i in (0..factors.len()).rev() {
            strides[i] = total;
            total = total
                .checked_mul(factors[i].dim())
                .ok_or_else(|| Error::TooLarge("tensor power index overflows".into()))?;
        }
        Ok(TensorAmbient { factors, strides, total })
    }

    pub fn power(a: &'a ColorHopfAlgebra, k: usize) -> Result<Self> {
        TensorAmbient::new(vec![a; k])
    }

    pub fn ctx(&self) -> &Ctx {
        self.factors[0].ctx()
    }

    pub fn legs(&self) -> usize {
        self.factors.len()
    }

    pub fn factor(&self, i: usize) -> &'a ColorHopfAlgebra {
        self.factors[i]
    }

    pub fn dim(&self) -> usize {
        self.total
    }

    pub fn decode(&self, mut x: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.factors.len());
        for s in &self.strides {
            out.push(x / s);
            x %= s;
        }
        out
    }

    pub fn encode(&self, t: &[usize]) -> usize {
        t.iter().zip(&self.strides).map(|(a, s)| a * s).sum()
    }

    pub fn leg(&self, x: usize, i: usize) -> usize {
        (x / self.strides[i]) % self.factors[i].dim()
    }

    pub fn degree(&self, x: usize) -> Deg {
        let g = &self.ctx().group;
        self.decode(x)
            .iter()
            .zip(&self.factors)
            .fold(0, |acc, (&i, f)| g.add(acc, f.deg(i)))
    }

    pub fn label(&self, x: usize) -> String {
        self.decode(x)
            .iter()
            .zip(&self.factors)
            .map(|(&i, f)| f.label(i).to_string())
            .collect::<Vec<_>>()
            .join("⊗")
    }

    /// Product of basis tuples with the braiding sign ∏_{i>j} φ(|a_i|,|b_j|).
    pub fn mul_basis(&self, x: usize, y: usize) -> Vector {
        let a = self.decode(x);
        let b = self.decode(y);
        let ctx = self.ctx();
        let mut sign = Scalar::one();
        if !ctx.bichar.is_trivial() {
            for i in 0..a.len() {
                for j in 0..i {
                    let s = ctx.phi(self.factors[i].deg(a[i]), self.factors[j].deg(b[j]));
                    if !s.is_one() {
                        sign = &sign * s;
                    }
                }
            }
        }
        let mut acc: Vec<(usize, Scalar)> = vec![(0, sign)];
        for (i, f) in self.factors.iter().enumerate() {
            let prod = f.mul_basis(a[i], b[i]);
            if prod.is_empty() {
                return Vector::zero();
            }
            let mut next = Vec::with_capacity(acc.len() * prod.len());
            for (idx, c) in &acc {
                for (p, d) in prod {
                    next.push((idx + p * self.strides[i], c * d));
                }
            }
            acc = next;
        }
        Vector::from_terms(acc)
    }

    /// Adds c·(a·b) for basis tuples a, b into `acc`.
    pub fn mul_tuples_into(&self, a: &[usize], b: &[usize], c: &Scalar, acc: &mut Accum) {
        let ctx = self.ctx();
        let mut sign = c.clone();
        if !ctx.bichar.is_trivial() {
            for i in 0..a.len() {
                for j in 0..i {
                    let s = ctx.phi(self.factors[i].deg(a[i]), self.factors[j].deg(b[j]));
                    if !s.is_one() {
                        sign = &sign * s;
                    }
                }
            }
        }
        self.mul_rec(a, b, 0, 0, sign, acc);
    }

    fn mul_rec(&self, a: &[usize], b: &[usize], leg: usize, idx: usize, c: Scalar, acc: &mut Accum) {
        if leg == a.len() {
            acc.add(idx, &c);
            return;
        }
        for (p, d) in self.factors[leg].mul_basis(a[leg], b[leg]) {
            self.mul_rec(a, b, leg + 1, idx + p * self.strides[leg], &c * d, acc);
        }
    }

    pub fn mul(&self, u: &Vector, v: &Vector) -> Vector {
        let mut terms = vec![];
        for (x, c) in u.iter() {
            for (y, d) in v.iter() {
                let cd = c * d;
                for (z, e) in self.mul_basis(x, y).iter() {
                    terms.push((z, e * &cd));
                }
            }
        }
        Vector::from_terms(terms)
    }

    /// Δ of a basis tuple as `(left, right, coefficient)` with sign
    /// ∏_{i<j} φ(|x_{i,2}|, |x_{j,1}|).
    pub fn comul_basis(&self, x: usize) -> Vec<(usize, usize, Scalar)> {
        let t = self.decode(x);
        let ctx = self.ctx();
        let trivial = ctx.bichar.is_trivial();
        // partial: (left index, right index, coefficient, degrees of right parts so far)
        let mut acc: Vec<(usize, usize, Scalar, Vec<Deg>)> = vec![(0, 0, Scalar::one(), vec![])];
        for (i, f) in self.factors.iter().enumerate() {
            let mut next = vec![];
            for (l, r, c, rdegs) in &acc {
                for (x1, x2, d) in f.sweedler_basis(t[i]) {
                    let mut coef = c * d;
                    if !trivial {
                        let d1 = f.deg(x1);
                        for &rd in rdegs {
                            let s = ctx.phi(rd, d1);
                            if !s.is_one() {
                                coef = &coef * s;
                            }
                        }
                    }
                    let mut nd = rdegs.clone();
                    if !trivial {
                        nd.push(f.deg(x2));
                    }
                    next.push((l + x1 * self.strides[i], r + x2 * self.strides[i], coef, nd));
                }
            }
            acc = next;
        }
        let mut merged: HashMap<(usize, usize), Scalar> = HashMap::new();
        for (l, r, c, _) in acc {
            let e = merged.entry((l, r)).or_insert_with(Scalar::zero);
            *e = &*e + &c;
        }
        let mut out: Vec<(usize, usize, Scalar)> =
            merged.into_iter().filter(|(_, c)| !c.is_zero()).map(|((l, r), c)| (l, r, c)).collect();
        out.sort_by_key(|t| (t.0, t.1));
        out
    }

    pub fn comul(&self, v: &Vector) -> Vec<(usize, usize, Scalar)> {
        let mut merged: HashMap<(usize, usize), Scalar> = HashMap::new();
        for (x, c) in v.iter() {
            for (l, r, d) in self.comul_basis(x) {
                let e = merged.entry((l, r)).or_insert_with(Scalar::zero);
                *e = &*e + &(c * &d);
            }
        }
        let mut out: Vec<(usize, usize, Scalar)> =
            merged.into_iter().filter(|(_, c)| !c.is_zero()).map(|((l, r), c)| (l, r, c)).collect();
        out.sort_by_key(|t| (t.0, t.1));
        out
    }

    pub fn counit_basis(&self, x: usize) -> Scalar {
        let t = self.decode(x);
        let mut s = Scalar::one();
        for (i, f) in self.factors.iter().enumerate() {
            let e = f.counit_basis(t[i]);
            if e.is_zero() {
                return Scalar::zero();
            }
            s = &s * e;
        }
        s
    }

    pub fn counit(&self, v: &Vector) -> Scalar {
        v.iter().fold(Scalar::zero(), |acc, (x, c)| &acc + &(c * &self.counit_basis(x)))
    }

    pub fn antipode_basis(&self, x: usize) -> Vector {
        let t = self.decode(x);
        let mut acc: Vec<(usize, Scalar)> = vec![(0, Scalar::one())];
        for (i, f) in self.factors.iter().enumerate() {
            let col = f.antipode_map().col(t[i]);
            let mut next = Vec::with_capacity(acc.len() * col.len());
            for (idx, c) in &acc {
                for (p, d) in col {
                    next.push((idx + p * self.strides[i], c * d));
                }
            }
            acc = next;
        }
        Vector::from_terms(acc)
    }

    pub fn antipode(&self, v: &Vector) -> Vector {
        let mut terms = vec![];
        for (x, c) in v.iter() {
            for (y, d) in self.antipode_basis(x).iter() {
                terms.push((y, c * d));
            }
        }
        Vector::from_terms(terms)
    }

    pub fn one(&self) -> Vector {
        let mut acc: Vec<(usize, Scalar)> = vec![(0, Scalar::one())];
        for (i, f) in self.factors.iter().enumerate() {
            let mut next = vec![];
            for (idx, c) in &acc {
                for (p, d) in f.one().iter() {
                    next.push((idx + p * self.strides[i], c * d));
                }
            }
            acc = next;
        }
        Vector::from_terms(acc)
    }

    /// Leg projection ε⊗…⊗id_i⊗…⊗ε applied to a basis tuple.
    pub fn project_basis(&self, x: usize, leg: usize) -> Vector {
        let t = self.decode(x);
        let mut c = Scalar::one();
        for (i, f) in self.factors.iter().enumerate() {
            if i != leg {
                let e = f.counit_basis(t[i]);
                if e.is_zero() {
                    return Vector::zero();
                }
                c = &c * e;
            }
        }
        Vector::monomial(t[leg], c)
    }

    pub fn project(&self, v: &Vector, leg: usize) -> Vector {
        let mut terms = vec![];
        for (x, c) in v.iter() {
            for (y, d) in self.project_basis(x, leg).iter() {
                terms.push((y, c * d));
            }
        }
        Vector::from_terms(terms)
    }

    /// Full tensor product as a standalone algebra (small inputs only).
    pub fn materialize_full(&self, name: &str) -> Result<ColorHopfAlgebra> {
        let basis: Vec<Vector> = (0..self.total).map(Vector::basis).collect();
        materialize(self, &basis, name)
    }
}

/// Standalone algebra on the span of an RREF basis inside a tensor ambient.
/// Fails if the span is not closed under the structure maps.
pub fn materialize(amb: &TensorAmbient, basis: &[Vector], name: &str) -> Result<ColorHopfAlgebra> {
    let label = |b: &Vector| {
        if b.nnz() == 1 && b.entries()[0].1.is_one() {
            amb.label(b.entries()[0].0)
        } else {
            format!("({})", b.render(&|i| amb.label(i)))
        }
    };
    materialize_labeled(amb, basis, name, &label)
}

/// As [`materialize`] with caller-chosen basis labels.
pub fn materialize_labeled(
    amb: &TensorAmbient,
    basis: &[Vector],
    name: &str,
    label: &dyn Fn(&Vector) -> String,
) -> Result<ColorHopfAlgebra> {
    let r = basis.len();
    let pivots: Vec<usize> = basis.iter().map(|b| b.leading().expect("nonzero basis")).collect();
    let pos: HashMap<usize, usize> = pivots.iter().enumerate().map(|(k, p)| (*p, k)).collect();
    let coords = |v: &Vector| -> Result<Vector> {
        let c = Vector::from_terms(
            v.iter().filter_map(|(i, x)| pos.get(&i).map(|&k| (k, x.clone()))).collect(),
        );
        let mut back = Vector::zero();
        for (k, x) in c.iter() {
            back = back.add_scaled(&basis[k], x);
        }
        if back != *v {
            return Err(Error::NotSubalgebra(format!("{name}: span is not closed")));
        }
        Ok(c)
    };
    let mut degrees = Vec::with_capacity(r);
    let mut labels = Vec::with_capacity(r);
    for b in basis {
        let d = amb.degree(b.leading().unwrap());
        if b.iter().any(|(i, _)| amb.degree(i) != d) {
            return Err(Error::NotGraded(format!("{name}: basis vector is not homogeneous")));
        }
        degrees.push(d);
        labels.push(label(b));
    }
    let unit = coords(&amb.one())?;
    let split: Vec<Vec<(Vec<usize>, &Scalar)>> =
        basis.iter().map(|b| b.iter().map(|(x, c)| (amb.decode(x), c)).collect()).collect();
    let rows: Vec<Vec<Vector>> = (0..r)
        .into_par_iter()
        .map(|i| {
            let mut acc = Accum::new(amb.dim());
            (0..r)
                .map(|j| {
                    for (a, c) in &split[i] {
                        for (b, d) in &split[j] {
                            amb.mul_tuples_into(a, b, &(*c * *d), &mut acc);
                        }
                    }
                    coords(&acc.take())
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let mult_cols: Vec<Vector> = rows.into_iter().flatten().collect();
    let mut comult_cols = Vec::with_capacity(r);
    for b in basis {
        let mut terms = vec![];
        for (x, y, c) in amb.comul(b) {
            if let (Some(&k), Some(&l)) = (pos.get(&x), pos.get(&y)) {
                terms.push((k * r + l, c));
            }
        }
        let d = Vector::from_terms(terms);
        // check: Σ d_{kl} b_k⊗b_l reproduces Δ(b)
        let mut back: HashMap<(usize, usize), Scalar> = HashMap::new();
        for (kl, c) in d.iter() {
            let (k, l) = (kl / r, kl % r);
            for (x, cx) in basis[k].iter() {
                for (y, cy) in basis[l].iter() {
                    let e = back.entry((x, y)).or_insert_with(Scalar::zero);
                    *e = &*e + &(&(cx * cy) * c);
                }
            }
        }
        back.retain(|_, c| !c.is_zero());
        let full = amb.comul(b);
        if back.len() != full.len() || full.iter().any(|(x, y, c)| back.get(&(*x, *y)) != Some(c)) {
            return Err(Error::NotSubalgebra(format!("{name}: span is not a subcoalgebra")));
        }
        comult_cols.push(d);
    }
    let mut anti_cols = Vec::with_capacity(r);
    for b in basis {
        anti_cols.push(coords(&amb.antipode(b))?);
    }
    let counit = basis.iter().map(|b| amb.counit(b)).collect();
    ColorHopfAlgebra::from_parts(
        amb.ctx().clone(),
        name,
        GradedSpace::new(degrees, labels)?,
        unit,
        LinMap::from_columns(r, mult_cols),
        counit,
        LinMap::from_columns(r * r, comult_cols),
        LinMap::from_columns(r, anti_cols),
    )
}

/// Dense scratch accumulator that remembers which slots it touched.
pub struct Accum {
    vals: Vec<Scalar>,
    touched: Vec<usize>,
}

impl Accum {
    pub fn new(dim: usize) -> Self {
        Accum { vals: vec![Scalar::zero(); dim], touched: vec![] }
    }

    pub fn add(&mut self, i: usize, c: &Scalar) {
        if self.vals[i].is_zero() {
            self.touched.push(i);
        }
        self.vals[i] = &self.vals[i] + c;
    }

    /// Drains into a sparse vector, leaving the accumulator empty.
    pub fn take(&mut self) -> Vector {
        self.touched.sort_unstable();
        self.touched.dedup();
        let mut out = Vec::with_capacity(self.touched.len());
        for &i in &self.touched {
            let v = std::mem::replace(&mut self.vals[i], Scalar::zero());
            if !v.is_zero() {
                out.push((i, v));
            }
        }
        self.touched.clear();
        Vector::from_canonical(out)
    }
}
