//! Standard constructions: group algebras, super exterior algebras, tensor products.

use crate::error::{Error, Result};
use crate::grading::{Ctx, Deg};
use crate::hopf::ColorHopfAlgebra;
use crate::linalg::{GradedSpace, LinMap, Vector};
use crate::scalar::{Field, Scalar};

/// The one-dimensional Hopf algebra k.
pub fn trivial_algebra(ctx: &Ctx) -> ColorHopfAlgebra {
    ColorHopfAlgebra::from_parts(
        ctx.clone(),
        "k",
        GradedSpace::unit(),
        Vector::basis(0),
        LinMap::identity(1),
        vec![Scalar::one()],
        LinMap::identity(1),
        LinMap::identity(1),
    )
    .expect("k is well formed")
}

/// kΓ for a group given by its multiplication table, identity at index 0.
/// Group-likes must pairwise satisfy φ(|a|,|b|) = 1, and since Δ(g) = g⊗g they
/// must sit in degree zero.
pub fn group_algebra(
    ctx: &Ctx,
    name: &str,
    table: &[Vec<usize>],
    labels: &[String],
    grading: &[Deg],
) -> Result<ColorHopfAlgebra> {
    let n = table.len();
    if labels.len() != n || grading.len() != n || table.iter().any(|r| r.len() != n) {
        return Err(Error::Dimension("group table, labels and grading differ in size".into()));
    }
    if (0..n).any(|g| table[0][g] != g || table[g][0] != g) {
        return Err(Error::InvalidInput("element 0 is not the identity".into()));
    }
    let mut inv = vec![usize::MAX; n];
    for g in 0..n {
        match (0..n).find(|&h| table[g][h] == 0) {
            Some(h) if table[h][g] == 0 => inv[g] = h,
            _ => return Err(Error::InvalidInput(format!("{} has no inverse", labels[g]))),
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return Err(Error::InvalidInput(format!(
                        "table not associative at ({}, {}, {})",
                        labels[a], labels[b], labels[c]
                    )));
                }
            }
        }
    }
    let grp = &ctx.group;
    if let Some(&d) = grading.iter().find(|&&d| d >= grp.size()) {
        return Err(Error::InvalidInput(format!("degree index {d} outside grading group")));
    }
    for a in 0..n {
        for b in 0..n {
            if grading[table[a][b]] != grp.add(grading[a], grading[b]) {
                return Err(Error::NotGraded(format!(
                    "grading is not a homomorphism at ({}, {})",
                    labels[a], labels[b]
                )));
            }
            if !ctx.phi(grading[a], grading[b]).is_one() {
                return Err(Error::Hypothesis(format!(
                    "group-likes {} and {} have φ(|{}|,|{}|) = {} ≠ 1",
                    labels[a],
                    labels[b],
                    labels[a],
                    labels[b],
                    ctx.phi(grading[a], grading[b])
                )));
            }
        }
    }
    if let Some(g) = (0..n).find(|&g| grading[g] != 0) {
        return Err(Error::NotGraded(format!(
            "group-like {} has nonzero degree {}",
            labels[g],
            grp.format(grading[g])
        )));
    }
    let space = GradedSpace::new(grading.to_vec(), labels.to_vec())?;
    let mult = LinMap::from_fn(n, n * n, |k| Vector::basis(table[k / n][k % n]));
    let comult = LinMap::from_fn(n * n, n, |g| Vector::basis(g * n + g));
    let antipode = LinMap::from_fn(n, n, |g| Vector::basis(inv[g]));
    ColorHopfAlgebra::from_parts(
        ctx.clone(),
        name,
        space,
        Vector::basis(0),
        mult,
        vec![Scalar::one(); n],
        comult,
        antipode,
    )
}

/// k[x]/(x^p) over GF(p) with x primitive of degree `d`, which needs φ(d,d) = 1.
/// `var` names the generator.
pub fn truncated_line(ctx: &Ctx, var: &str, d: Deg) -> Result<ColorHopfAlgebra> {
    let p = match ctx.field {
        Field::Prime(p) => p as usize,
        Field::Rational => {
            return Err(Error::Hypothesis("truncated line needs positive characteristic".into()))
        }
    };
    if p > 11 {
        return Err(Error::TooLarge(format!("truncated line of dimension {p}")));
    }
    if !ctx.phi(d, d).is_one() {
        return Err(Error::Hypothesis("generator degree must satisfy φ(d,d) = 1".into()));
    }
    let grp = &ctx.group;
    let degree = |k: usize| (0..k).fold(0, |acc, _| grp.add(acc, d));
    let label = |k: usize| match k {
        0 => "1".to_string(),
        1 => var.to_string(),
        _ => format!("{var}^{k}"),
    };
    let space = GradedSpace::new((0..p).map(degree).collect(), (0..p).map(label).collect())?;
    let mult = LinMap::from_fn(p, p * p, |k| {
        let e = k / p + k % p;
        if e < p {
            Vector::basis(e)
        } else {
            Vector::zero()
        }
    });
    let mut binom = vec![vec![Scalar::one(); 1]; p];
    for n in 1..p {
        let mut row = vec![Scalar::one(); n + 1];
        for k in 1..n {
            row[k] = &binom[n - 1][k - 1] + &binom[n - 1][k];
        }
        binom[n] = row;
    }
    let comult = LinMap::from_fn(p * p, p, |n| {
        Vector::from_terms((0..=n).map(|k| (k * p + n - k, binom[n][k].clone())).collect())
    });
    let antipode = LinMap::from_fn(p, p, |n| Vector::monomial(n, sign(n as u32)));
    let mut counit = vec![Scalar::zero(); p];
    counit[0] = Scalar::one();
    ColorHopfAlgebra::from_parts(
        ctx.clone(),
        format!("k[{var}]/({var}^{p})"),
        space,
        Vector::basis(0),
        mult,
        counit,
        comult,
        antipode,
    )
}

fn inversions(s: u32, t: u32) -> u32 {
    // pairs (x ∈ s, y ∈ t) with x > y
    let mut count = 0;
    for x in 0..32 {
        if s >> x & 1 == 1 {
            count += (t & ((1u32 << x) - 1)).count_ones();
        }
    }
    count
}

fn sign(k: u32) -> Scalar {
    if k % 2 == 0 {
        Scalar::one()
    } else {
        Scalar::from_int(-1)
    }
}

/// Λ(n): exterior algebra on `n ≤ 4` odd primitive generators.
/// `odd` is a degree with φ(odd, odd) = −1.
pub fn super_exterior(ctx: &Ctx, n: u32, odd: Deg) -> Result<ColorHopfAlgebra> {
    if n > 4 {
        return Err(Error::TooLarge("exterior algebras are limited to 4 generators".into()));
    }
    if *ctx.phi(odd, odd) != Scalar::from_int(-1) {
        return Err(Error::Hypothesis("generator degree must satisfy φ(d,d) = -1".into()));
    }
    let grp = &ctx.group;
    let dim = 1usize << n;
    let degree = |s: usize| (0..s.count_ones()).fold(0, |acc, _| grp.add(acc, odd));
    let label = |s: usize| {
        if s == 0 {
            "1".to_string()
        } else {
            (0..n).filter(|i| s >> i & 1 == 1).map(|i| format!("v{}", i + 1)).collect()
        }
    };
    let space = GradedSpace::new((0..dim).map(degree).collect(), (0..dim).map(label).collect())?;
    let mult = LinMap::from_fn(dim, dim * dim, |k| {
        let (s, t) = (k / dim, k % dim);
        if s & t != 0 {
            Vector::zero()
        } else {
            Vector::monomial(s | t, sign(inversions(s as u32, t as u32)))
        }
    });
    let comult = LinMap::from_fn(dim * dim, dim, |s| {
        let mut terms = vec![];
        let mut t = s;
        loop {
            let rest = s & !t;
            terms.push((t * dim + rest, sign(inversions(t as u32, rest as u32))));
            if t == 0 {
                break;
            }
            t = (t - 1) & s;
        }
        Vector::from_terms(terms)
    });
    let antipode =
        LinMap::from_fn(dim, dim, |s| Vector::monomial(s, sign(s.count_ones())));
    let mut counit = vec![Scalar::zero(); dim];
    counit[0] = Scalar::one();
    ColorHopfAlgebra::from_parts(
        ctx.clone(),
        format!("Λ({n})"),
        space,
        Vector::basis(0),
        mult,
        counit,
        comult,
        antipode,
    )
}

/// Braided tensor product A⊗B with basis index `a·dim B + b`.
pub fn hopf_tensor_product(a: &ColorHopfAlgebra, b: &ColorHopfAlgebra) -> Result<ColorHopfAlgebra> {
    if !a.same_context(b) {
        return Err(Error::ContextMismatch);
    }
    let (na, nb) = (a.dim(), b.dim());
    let n = na * nb;
    let ctx = a.ctx();
    let space = a.space().tensor(b.space(), &ctx.group);
    let mult = LinMap::from_fn(n, n * n, |k| {
        let (x, y) = (k / n, k % n);
        let (a1, b1, a2, b2) = (x / nb, x % nb, y / nb, y % nb);
        let s = a.phi(b.deg(b1), a.deg(a2));
        let mut t = vec![];
        for (p, c) in a.mul_basis(a1, a2) {
            for (q, d) in b.mul_basis(b1, b2) {
                t.push((p * nb + q, &(c * d) * s));
            }
        }
        Vector::from_terms(t)
    });
    let comult = LinMap::from_fn(n * n, n, |x| {
        let (ai, bi) = (x / nb, x % nb);
        let mut t = vec![];
        for (a1, a2, c) in a.sweedler_basis(ai) {
            for (b1, b2, d) in b.sweedler_basis(bi) {
                let s = a.phi(a.deg(a2), b.deg(b1));
                t.push(((a1 * nb + b1) * n + a2 * nb + b2, &(c * d) * s));
            }
        }
        Vector::from_terms(t)
    });
    let antipode = a.antipode_map().tensor(b.antipode_map());
    let counit = (0..n).map(|x| a.counit_basis(x / nb) * b.counit_basis(x % nb)).collect();
    ColorHopfAlgebra::from_parts(
        ctx.clone(),
        format!("{}⊗{}", a.name(), b.name()),
        space,
        a.one().tensor(b.one(), nb),
        mult,
        counit,
        comult,
        antipode,
    )
}

/// Projections `id⊗ε`, `ε⊗id` and injections `a ↦ a⊗1`, `b ↦ 1⊗b`.
pub struct TensorMaps {
    pub proj_left: LinMap,
    pub proj_right: LinMap,
    pub inj_left: LinMap,
    pub inj_right: LinMap,
}

pub fn tensor_maps(a: &ColorHopfAlgebra, b: &ColorHopfAlgebra) -> TensorMaps {
    let (na, nb) = (a.dim(), b.dim());
    TensorMaps {
        proj_left: LinMap::from_fn(na, na * nb, |x| {
            Vector::monomial(x / nb, b.counit_basis(x % nb).clone())
        }),
        proj_right: LinMap::from_fn(nb, na * nb, |x| {
            Vector::monomial(x % nb, a.counit_basis(x / nb).clone())
        }),
        inj_left: LinMap::from_fn(na * nb, na, |i| Vector::basis(i).tensor(b.one(), nb)),
        inj_right: LinMap::from_fn(na * nb, nb, |j| a.one().tensor(&Vector::basis(j), nb)),
    }
}
