//! Sparse exact linear algebra over a [`Scalar`] field, plus graded spaces.
//!
//! Vectors are sorted `(index, value)` lists without zeros. Maps are stored
//! column by column. Subspaces keep a canonical reduced row echelon basis.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::grading::{Ctx, Deg, GradingGroup};
use crate::scalar::Scalar;

/// Sparse vector: strictly increasing indices, no stored zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Vector {
    entries: Vec<(usize, Scalar)>,
}

impl Vector {
    pub fn zero() -> Self {
        Vector { entries: vec![] }
    }

    pub fn basis(i: usize) -> Self {
        Vector { entries: vec![(i, Scalar::one())] }
    }

    pub fn monomial(i: usize, c: Scalar) -> Self {
        if c.is_zero() {
            Vector::zero()
        } else {
            Vector { entries: vec![(i, c)] }
        }
    }

    /// Sum arbitrary terms, merging repeated indices.
    pub fn from_terms(mut terms: Vec<(usize, Scalar)>) -> Self {
        if terms.len() <= 1 {
            terms.retain(|(_, c)| !c.is_zero());
            return Vector { entries: terms };
        }
        terms.sort_unstable_by_key(|t| t.0);
        let mut out: Vec<(usize, Scalar)> = Vec::with_capacity(terms.len());
        for (i, c) in terms {
            match out.last_mut() {
                Some((j, d)) if *j == i => *d = &*d + &c,
                _ => {
                    if let Some((_, d)) = out.last() {
                        if d.is_zero() {
                            out.pop();
                        }
                    }
                    out.push((i, c));
                }
            }
        }
        if let Some((_, d)) = out.last() {
            if d.is_zero() {
                out.pop();
            }
        }
        Vector { entries: out }
    }

    /// Entries already sorted, distinct and nonzero.
    pub fn from_canonical(entries: Vec<(usize, Scalar)>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(entries.iter().all(|(_, c)| !c.is_zero()));
        Vector { entries }
    }

    pub fn from_dense(v: &[Scalar]) -> Self {
        Vector {
            entries: v
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i, c.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, dim: usize) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); dim];
        for (i, c) in &self.entries {
            out[*i] = c.clone();
        }
        out
    }

    pub fn entries(&self) -> &[(usize, Scalar)] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<(usize, Scalar)> {
        self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.entries.iter().map(|(i, c)| (*i, c))
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize) -> Scalar {
        match self.entries.binary_search_by_key(&i, |t| t.0) {
            Ok(k) => self.entries[k].1.clone(),
            Err(_) => Scalar::zero(),
        }
    }

    pub fn leading(&self) -> Option<usize> {
        self.entries.first().map(|t| t.0)
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|t| t.0)
    }

    pub fn scale(&self, c: &Scalar) -> Vector {
        if c.is_zero() {
            return Vector::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        Vector { entries: self.entries.iter().map(|(i, x)| (*i, x * c)).collect() }
    }

    /// `self + c·other`.
    pub fn add_scaled(&self, other: &Vector, c: &Scalar) -> Vector {
        if c.is_zero() {
            return self.clone();
        }
        let (a, b) = (&self.entries, &other.entries);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                out.push(a[i].clone());
                i += 1;
            } else if i == a.len() || b[j].0 < a[i].0 {
                out.push((b[j].0, &b[j].1 * c));
                j += 1;
            } else {
                let s = &a[i].1 + &(&b[j].1 * c);
                if !s.is_zero() {
                    out.push((a[i].0, s));
                }
                i += 1;
                j += 1;
            }
        }
        Vector { entries: out }
    }

    pub fn add(&self, other: &Vector) -> Vector {
        self.add_scaled(other, &Scalar::one())
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        self.add_scaled(other, &Scalar::from_int(-1))
    }

    pub fn neg(&self) -> Vector {
        self.scale(&Scalar::from_int(-1))
    }

    /// `self ⊗ other` in row-major pair coordinates.
    pub fn tensor(&self, other: &Vector, other_dim: usize) -> Vector {
        let mut out = Vec::with_capacity(self.nnz() * other.nnz());
        for (i, a) in &self.entries {
            for (j, b) in &other.entries {
                out.push((i * other_dim + j, a * b));
            }
        }
        Vector { entries: out }
    }

    pub fn shift(&self, offset: usize) -> Vector {
        Vector { entries: self.entries.iter().map(|(i, c)| (i + offset, c.clone())).collect() }
    }

    /// Keep entries with index in `lo..hi`, shifted down by `lo`.
    pub fn window(&self, lo: usize, hi: usize) -> Vector {
        Vector {
            entries: self
                .entries
                .iter()
                .filter(|(i, _)| *i >= lo && *i < hi)
                .map(|(i, c)| (i - lo, c.clone()))
                .collect(),
        }
    }

    pub fn map_indices(&self, f: impl Fn(usize) -> usize) -> Vector {
        Vector::from_terms(self.entries.iter().map(|(i, c)| (f(*i), c.clone())).collect())
    }

    /// Render with basis labels, e.g. `2·g + -1/2·h`.
    pub fn render(&self, labels: &dyn Fn(usize) -> String) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.entries
            .iter()
            .map(|(i, c)| if c.is_one() { labels(*i) } else { format!("{c}·{}", labels(*i)) })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&|i| format!("e{i}")))
    }
}

/// Sparse matrix in compressed column form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinMap {
    rows: usize,
    cols: usize,
    ptr: Vec<usize>,
    data: Vec<(usize, Scalar)>,
}

impl LinMap {
    pub fn from_columns(rows: usize, columns: Vec<Vector>) -> Self {
        let cols = columns.len();
        let mut ptr = Vec::with_capacity(cols + 1);
        ptr.push(0);
        let mut data = Vec::new();
        for c in columns {
            debug_assert!(c.max_index().map_or(true, |m| m < rows), "row out of range");
            data.extend(c.into_entries());
            ptr.push(data.len());
        }
        LinMap { rows, cols, ptr, data }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize) -> Vector) -> Self {
        let mut ptr = Vec::with_capacity(cols + 1);
        ptr.push(0);
        let mut data = Vec::new();
        for j in 0..cols {
            let c = f(j);
            debug_assert!(c.max_index().map_or(true, |m| m < rows), "row out of range");
            data.extend(c.into_entries());
            ptr.push(data.len());
        }
        LinMap { rows, cols, ptr, data }
    }

    /// From `(row, col, value)` triples; repeated positions are summed.
    pub fn from_triples(rows: usize, cols: usize, triples: &[(usize, usize, Scalar)]) -> Result<Self> {
        let mut per_col: Vec<Vec<(usize, Scalar)>> = vec![vec![]; cols];
        for (r, c, v) in triples {
            if *r >= rows || *c >= cols {
                return Err(Error::Dimension(format!(
                    "entry ({r}, {c}) outside {rows}×{cols}"
                )));
            }
            per_col[*c].push((*r, v.clone()));
        }
        Ok(LinMap::from_columns(rows, per_col.into_iter().map(Vector::from_terms).collect()))
    }

    pub fn identity(n: usize) -> Self {
        LinMap::from_fn(n, n, Vector::basis)
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        LinMap::from_fn(rows, cols, |_| Vector::zero())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn col(&self, j: usize) -> &[(usize, Scalar)] {
        &self.data[self.ptr[j]..self.ptr[j + 1]]
    }

    pub fn col_vec(&self, j: usize) -> Vector {
        Vector { entries: self.col(j).to_vec() }
    }

    pub fn entry(&self, i: usize, j: usize) -> Scalar {
        let c = self.col(j);
        match c.binary_search_by_key(&i, |t| t.0) {
            Ok(k) => c[k].1.clone(),
            Err(_) => Scalar::zero(),
        }
    }

    pub fn nnz(&self) -> usize {
        self.data.len()
    }

    pub fn triples(&self) -> Vec<(usize, usize, Scalar)> {
        let mut out = Vec::with_capacity(self.nnz());
        for j in 0..self.cols {
            for (i, c) in self.col(j) {
                out.push((*i, j, c.clone()));
            }
        }
        out.sort_by_key(|t| (t.0, t.1));
        out
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        if v.nnz() == 1 {
            let (j, c) = &v.entries()[0];
            let col = self.col(*j);
            return if c.is_one() {
                Vector { entries: col.to_vec() }
            } else {
                Vector { entries: col.iter().map(|(i, x)| (*i, x * c)).collect() }
            };
        }
        let mut terms = Vec::new();
        for (j, c) in v.iter() {
            for (i, x) in self.col(j) {
                terms.push((*i, x * c));
            }
        }
        Vector::from_terms(terms)
    }

    /// `self ∘ rhs`.
    pub fn compose(&self, rhs: &LinMap) -> LinMap {
        assert_eq!(self.cols, rhs.rows, "compose: inner dimensions differ");
        LinMap::from_fn(self.rows, rhs.cols, |j| self.apply(&rhs.col_vec(j)))
    }

    /// Kronecker product with row-major pair indexing.
    pub fn tensor(&self, other: &LinMap) -> LinMap {
        let (r2, c2) = (other.rows, other.cols);
        LinMap::from_fn(self.rows * r2, self.cols * c2, |j| {
            let (a, b) = (j / c2, j % c2);
            let mut terms = Vec::with_capacity(self.col(a).len() * other.col(b).len());
            for (i1, x) in self.col(a) {
                for (i2, y) in other.col(b) {
                    terms.push((i1 * r2 + i2, x * y));
                }
            }
            Vector { entries: terms }
        })
    }

    pub fn add(&self, other: &LinMap) -> LinMap {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        LinMap::from_fn(self.rows, self.cols, |j| self.col_vec(j).add(&other.col_vec(j)))
    }

    pub fn sub(&self, other: &LinMap) -> LinMap {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        LinMap::from_fn(self.rows, self.cols, |j| self.col_vec(j).sub(&other.col_vec(j)))
    }

    pub fn scale(&self, c: &Scalar) -> LinMap {
        LinMap::from_fn(self.rows, self.cols, |j| self.col_vec(j).scale(c))
    }

    /// First column where the two maps differ.
    pub fn first_difference(&self, other: &LinMap) -> Option<usize> {
        (0..self.cols.min(other.cols)).find(|&j| self.col(j) != other.col(j))
    }

    pub fn image(&self) -> Subspace {
        Subspace::from_vectors(self.rows, (0..self.cols).map(|j| self.col_vec(j)))
    }

    pub fn kernel(&self) -> Subspace {
        Subspace::from_vectors(self.cols, kernel_lazy(self.cols, |j| self.col_vec(j)))
    }

    pub fn rank(&self) -> usize {
        self.image().dim()
    }

    /// Some `x` with `self·x = b`, or `None` when inconsistent.
    pub fn solve(&self, b: &Vector) -> Option<Vector> {
        let mut ech = Echelon::new(true);
        for j in 0..self.cols {
            ech.insert_tagged(self.col_vec(j), Vector::basis(j));
        }
        let (rest, tag) = ech.reduce_tagged(b.clone(), Vector::zero());
        if rest.is_zero() {
            Some(tag.neg())
        } else {
            None
        }
    }

    /// Entry `(i, j)` is zero unless `deg_t(i) = deg_s(j)`.
    pub fn degree_violation(&self, src: &[Deg], tgt: &[Deg]) -> Option<(usize, usize)> {
        for j in 0..self.cols {
            for (i, _) in self.col(j) {
                if tgt[*i] != src[j] {
                    return Some((*i, j));
                }
            }
        }
        None
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.cols
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.rows
    }
}

/// Incremental row echelon form. Every stored row has leading coefficient 1
/// at its pivot and no entry at the pivots of earlier rows' leading positions.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: Vec<Vector>,
    tags: Vec<Vector>,
    pivot_of: HashMap<usize, usize>,
    tagged: bool,
}

impl Echelon {
    pub fn new(tagged: bool) -> Self {
        Echelon { tagged, ..Default::default() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce_tagged(&self, mut v: Vector, mut tag: Vector) -> (Vector, Vector) {
        let mut from = 0usize;
        loop {
            let hit = v
                .entries()
                .iter()
                .skip_while(|(i, _)| *i < from)
                .find(|(i, _)| self.pivot_of.contains_key(i))
                .map(|(i, c)| (*i, c.clone()));
            let Some((p, c)) = hit else { break };
            let r = self.pivot_of[&p];
            let neg = -&c;
            v = v.add_scaled(&self.rows[r], &neg);
            if self.tagged {
                tag = tag.add_scaled(&self.tags[r], &neg);
            }
            from = p + 1;
        }
        (v, tag)
    }

    pub fn reduce(&self, v: Vector) -> Vector {
        self.reduce_tagged(v, Vector::zero()).0
    }

    /// Insert `v`; returns false when it was already in the span.
    pub fn insert(&mut self, v: Vector) -> bool {
        self.insert_tagged(v, Vector::zero()).is_none()
    }

    /// Insert with a bookkeeping tag. When `v` lies in the span, returns the
    /// tag combination that reduces it to zero.
    pub fn insert_tagged(&mut self, v: Vector, tag: Vector) -> Option<Vector> {
        let (v, tag) = self.reduce_tagged(v, tag);
        match v.entries().first() {
            None => Some(tag),
            Some((p, c)) => {
                let inv = c.inv().expect("nonzero leading entry");
                let p = *p;
                self.pivot_of.insert(p, self.rows.len());
                self.rows.push(v.scale(&inv));
                if self.tagged {
                    self.tags.push(tag.scale(&inv));
                }
                None
            }
        }
    }

    /// Canonical reduced basis sorted by pivot.
    pub fn into_rref(self) -> Vec<Vector> {
        let mut rows = self.rows;
        rows.sort_by_key(|r| r.leading().unwrap());
        let pivots: Vec<usize> = rows.iter().map(|r| r.leading().unwrap()).collect();
        let pos: HashMap<usize, usize> = pivots.iter().enumerate().map(|(k, p)| (*p, k)).collect();
        for k in (0..rows.len()).rev() {
            let mut r = rows[k].clone();
            let mut from = pivots[k] + 1;
            loop {
                let hit = r
                    .entries()
                    .iter()
                    .skip_while(|(i, _)| *i < from)
                    .find(|(i, _)| pos.contains_key(i))
                    .map(|(i, c)| (*i, c.clone()));
                let Some((p, c)) = hit else { break };
                r = r.add_scaled(&rows[pos[&p]], &-&c);
                from = p + 1;
            }
            rows[k] = r;
        }
        rows
    }
}

/// Kernel basis (not canonicalised) of the map whose `j`-th column is `col(j)`.
pub fn kernel_lazy(cols: usize, mut col: impl FnMut(usize) -> Vector) -> Vec<Vector> {
    let mut ech = Echelon::new(true);
    let mut out = vec![];
    for j in 0..cols {
        if let Some(k) = ech.insert_tagged(col(j), Vector::basis(j)) {
            out.push(k);
        }
    }
    out
}

/// Subspace of k^n with canonical RREF basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<Vector>,
}

impl Subspace {
    pub fn from_vectors(ambient: usize, vs: impl IntoIterator<Item = Vector>) -> Self {
        let mut ech = Echelon::new(false);
        for v in vs {
            debug_assert!(v.max_index().map_or(true, |m| m < ambient));
            ech.insert(v);
        }
        Subspace { ambient, rows: ech.into_rref() }
    }

    /// Trust that `rows` is already in canonical form.
    pub fn from_rref_unchecked(ambient: usize, rows: Vec<Vector>) -> Self {
        Subspace { ambient, rows }
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, rows: vec![] }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace { ambient, rows: (0..ambient).map(Vector::basis).collect() }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.rows
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.leading().unwrap()).collect()
    }

    /// Non-pivot coordinates: the smallest complement spanned by unit vectors.
    pub fn complement_indices(&self) -> Vec<usize> {
        let piv: std::collections::HashSet<usize> = self.pivots().into_iter().collect();
        (0..self.ambient).filter(|i| !piv.contains(i)).collect()
    }

    pub fn pivot_index(&self) -> HashMap<usize, usize> {
        self.pivots().into_iter().enumerate().map(|(k, p)| (p, k)).collect()
    }

    /// Coordinates in the RREF basis, or `None` if `v` is outside.
    pub fn coordinates(&self, v: &Vector) -> Option<Vec<Scalar>> {
        let coords: Vec<Scalar> =
            self.rows.iter().map(|r| v.get(r.leading().unwrap())).collect();
        let mut rebuilt = Vector::zero();
        for (r, c) in self.rows.iter().zip(&coords) {
            rebuilt = rebuilt.add_scaled(r, c);
        }
        if rebuilt == *v {
            Some(coords)
        } else {
            None
        }
    }

    pub fn contains(&self, v: &Vector) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_space(&self, other: &Subspace) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        Subspace::from_vectors(self.ambient, self.rows.iter().chain(&other.rows).cloned())
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        let n = self.ambient;
        let mut ech = Echelon::new(false);
        for u in &self.rows {
            ech.insert(u.add(&u.shift(n)));
        }
        for v in &other.rows {
            ech.insert(v.clone());
        }
        let vs = ech.rows.iter().filter(|r| r.leading().unwrap() >= n).map(|r| r.window(n, 2 * n));
        Subspace::from_vectors(n, vs)
    }

    pub fn map(&self, f: &LinMap) -> Subspace {
        Subspace::from_vectors(f.rows(), self.rows.iter().map(|r| f.apply(r)))
    }

    /// Inclusion matrix (ambient × dim) whose columns are the basis.
    pub fn inclusion(&self) -> LinMap {
        LinMap::from_columns(self.ambient, self.rows.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }
}

/// Finite graded space: one degree and one label per basis vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedSpace {
    pub degrees: Vec<Deg>,
    pub labels: Vec<String>,
}

impl GradedSpace {
    pub fn new(degrees: Vec<Deg>, labels: Vec<String>) -> Result<Self> {
        if degrees.len() != labels.len() {
            return Err(Error::Dimension("degrees and labels differ in length".into()));
        }
        Ok(GradedSpace { degrees, labels })
    }

    pub fn unit() -> Self {
        GradedSpace { degrees: vec![0], labels: vec!["1".into()] }
    }

    pub fn dim(&self) -> usize {
        self.degrees.len()
    }

    pub fn tensor(&self, other: &GradedSpace, group: &GradingGroup) -> GradedSpace {
        let mut degrees = Vec::with_capacity(self.dim() * other.dim());
        let mut labels = Vec::with_capacity(self.dim() * other.dim());
        for i in 0..self.dim() {
            for j in 0..other.dim() {
                degrees.push(group.add(self.degrees[i], other.degrees[j]));
                labels.push(format!("{}⊗{}", self.labels[i], other.labels[j]));
            }
        }
        GradedSpace { degrees, labels }
    }

    /// Degree of a homogeneous nonzero vector.
    pub fn degree_of(&self, v: &Vector) -> Option<Deg> {
        let mut it = v.iter().map(|(i, _)| self.degrees[i]);
        let d = it.next()?;
        if it.all(|e| e == d) {
            Some(d)
        } else {
            None
        }
    }

    pub fn dims_by_degree(&self, group: &GradingGroup) -> Vec<usize> {
        let mut out = vec![0; group.size()];
        for d in &self.degrees {
            out[*d] += 1;
        }
        out
    }
}

/// Degree-preserving linear map between graded spaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMap {
    pub source: GradedSpace,
    pub target: GradedSpace,
    pub matrix: LinMap,
}

impl GradedMap {
    pub fn new(source: GradedSpace, target: GradedSpace, matrix: LinMap) -> Result<Self> {
        if matrix.cols() != source.dim() || matrix.rows() != target.dim() {
            return Err(Error::Dimension(format!(
                "matrix is {}×{}, spaces have dims {} → {}",
                matrix.rows(),
                matrix.cols(),
                source.dim(),
                target.dim()
            )));
        }
        if let Some((i, j)) = matrix.degree_violation(&source.degrees, &target.degrees) {
            return Err(Error::NotGraded(format!(
                "entry ({}, {}) links degrees {} and {}",
                target.labels[i], source.labels[j], target.degrees[i], source.degrees[j]
            )));
        }
        Ok(GradedMap { source, target, matrix })
    }

    pub fn identity(space: &GradedSpace) -> Self {
        GradedMap {
            source: space.clone(),
            target: space.clone(),
            matrix: LinMap::identity(space.dim()),
        }
    }

    pub fn compose(&self, rhs: &GradedMap) -> Result<GradedMap> {
        if rhs.target.degrees != self.source.degrees {
            return Err(Error::Dimension("compose: spaces do not match".into()));
        }
        Ok(GradedMap {
            source: rhs.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.compose(&rhs.matrix),
        })
    }

    pub fn tensor(&self, other: &GradedMap, group: &GradingGroup) -> GradedMap {
        GradedMap {
            source: self.source.tensor(&other.source, group),
            target: self.target.tensor(&other.target, group),
            matrix: self.matrix.tensor(&other.matrix),
        }
    }

    pub fn kernel(&self) -> Subspace {
        self.matrix.kernel()
    }

    pub fn image(&self) -> Subspace {
        self.matrix.image()
    }
}

/// c: V⊗W → W⊗V, x⊗y ↦ φ(|x|,|y|) y⊗x.
pub fn braiding(ctx: &Ctx, v: &GradedSpace, w: &GradedSpace) -> GradedMap {
    let (n, m) = (v.dim(), w.dim());
    let matrix = LinMap::from_fn(m * n, n * m, |k| {
        let (i, j) = (k / m, k % m);
        Vector::monomial(j * n + i, ctx.phi(v.degrees[i], w.degrees[j]).clone())
    });
    GradedMap {
        source: v.tensor(w, &ctx.group),
        target: w.tensor(v, &ctx.group),
        matrix,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grading::ColorContext;
    use crate::scalar::Field;

    fn q(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    fn dense(rows: usize, cols: usize, vals: &[i64]) -> LinMap {
        LinMap::from_fn(rows, cols, |j| {
            Vector::from_dense(&(0..rows).map(|i| q(vals[i * cols + j])).collect::<Vec<_>>())
        })
    }

    #[test]
    fn rref_is_canonical() {
        let a = Subspace::from_vectors(
            3,
            vec![Vector::from_dense(&[q(1), q(1), q(0)]), Vector::from_dense(&[q(0), q(1), q(1)])],
        );
        let b = Subspace::from_vectors(
            3,
            vec![Vector::from_dense(&[q(1), q(2), q(1)]), Vector::from_dense(&[q(1), q(0), q(-1)])],
        );
        assert_eq!(a, b);
        assert_eq!(a.basis()[0], Vector::from_dense(&[q(1), q(0), q(-1)]));
    }

    #[test]
    fn kernel_image_rank_nullity() {
        let m = dense(2, 3, &[1, 2, 3, 2, 4, 6]);
        assert_eq!(m.rank(), 1);
        assert_eq!(m.kernel().dim(), 2);
        for v in m.kernel().basis() {
            assert!(m.apply(v).is_zero());
        }
    }

    #[test]
    fn solve_consistent_and_not() {
        let m = dense(2, 2, &[1, 1, 1, 1]);
        assert!(m.solve(&Vector::from_dense(&[q(1), q(0)])).is_none());
        let b = Vector::from_dense(&[q(2), q(2)]);
        let x = m.solve(&b).unwrap();
        assert_eq!(m.apply(&x), b);
    }

    #[test]
    fn intersection_and_sum() {
        let u = Subspace::from_vectors(3, vec![Vector::basis(0), Vector::basis(1)]);
        let v = Subspace::from_vectors(3, vec![Vector::basis(1), Vector::basis(2)]);
        let i = u.intersection(&v);
        assert_eq!(i, Subspace::from_vectors(3, vec![Vector::basis(1)]));
        assert_eq!(u.sum(&v), Subspace::full(3));
    }

    #[test]
    fn super_braiding_sign() {
        let ctx = ColorContext::super_context(Field::Rational);
        let v = GradedSpace::new(vec![0, 1], vec!["1".into(), "v".into()]).unwrap();
        let c = braiding(&ctx, &v, &v);
        // v⊗v ↦ −v⊗v
        assert_eq!(c.matrix.entry(3, 3), q(-1));
        let cc = c.compose(&c).unwrap();
        assert_eq!(cc.matrix, LinMap::identity(4));
    }

    #[test]
    fn graded_map_rejects_degree_mixing() {
        let v = GradedSpace::new(vec![0, 1], vec!["a".into(), "b".into()]).unwrap();
        let m = LinMap::from_triples(2, 2, &[(0, 1, q(1))]).unwrap();
        assert!(matches!(GradedMap::new(v.clone(), v, m), Err(Error::NotGraded(_))));
    }
}
