use std::sync::OnceLock;

use colorhopf::commutators::commutator_subalgebra;
use colorhopf::grading::{Bicharacter, ColorContext, GradingGroup};
use colorhopf::linalg::{braiding, GradedMap, GradedSpace, Subspace};
use colorhopf::simplicial::*;
use colorhopf::sub::{hopf_kernel, quotient_by_normal, HopfSubalgebra};
use colorhopf::xmod::CrossedModule;
use colorhopf::zoo::{self, oracle, FiniteGroup, ZooAlgebra};
use colorhopf::*;
use proptest::prelude::*;

fn q(n: i64) -> Scalar {
    Scalar::from_int(n)
}

fn zoo_all() -> &'static [ZooAlgebra] {
    static Z: OnceLock<Vec<ZooAlgebra>> = OnceLock::new();
    Z.get_or_init(zoo::standard_zoo)
}

fn groups() -> &'static [(FiniteGroup, Hopf, Vec<oracle::Set>)] {
    static G: OnceLock<Vec<(FiniteGroup, Hopf, Vec<oracle::Set>)>> = OnceLock::new();
    G.get_or_init(|| {
        zoo::standard_groups()
            .into_iter()
            .map(|g| {
                let a = zoo::kgroup(&g);
                let n = oracle::normal_subgroups(&g);
                (g, a, n)
            })
            .collect()
    })
}

/// Random homogeneous element: the degree is that of basis vector `pick`.
fn homogeneous(a: &ColorHopfAlgebra, pick: usize, coeffs: &[i64]) -> Vector {
    let d = a.deg(pick % a.dim());
    let terms = (0..a.dim())
        .filter(|&i| a.deg(i) == d)
        .zip(coeffs.iter().cycle())
        .map(|(i, &c)| (i, q(c)))
        .collect();
    let v = Vector::from_terms(terms);
    if v.is_zero() {
        Vector::basis(pick % a.dim())
    } else {
        v
    }
}

fn combination(basis: &[Vector], coeffs: &[i64]) -> Vector {
    basis.iter().zip(coeffs.iter().cycle()).fold(Vector::zero(), |acc, (b, &c)| acc.add_scaled(b, &q(c)))
}

fn scalar() -> impl Strategy<Value = (i64, i64)> {
    (any::<i64>(), 1..i64::MAX).prop_map(|(n, d)| (n / 3, d))
}

proptest! {
    #[test]
    fn rational_field_laws(a in scalar(), b in scalar(), c in scalar()) {
        let (a, b, c) = (Scalar::ratio(a.0, a.1), Scalar::ratio(b.0, b.1), Scalar::ratio(c.0, c.1));
        prop_assert_eq!((&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn prime_field_laws(p in prop::sample::select(vec![3u64, 5, 7, 13, 65537, 2147483647]), a in any::<i64>(), b in any::<i64>()) {
        let f = Field::Prime(p);
        let (x, y) = (q(a).in_field(f), q(b).in_field(f));
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(x.pow(p - 1), if x.is_zero() { f.zero() } else { f.one() });
        if !y.is_zero() {
            prop_assert_eq!(&(&x / &y) * &y, x.clone());
        }
    }

    // φ(g,h) = ω^{Σ k_ij g_i h_j} over GF(13), ω of order 12
    #[test]
    fn bicharacter_laws(orders in prop::collection::vec(prop::sample::select(vec![2u32, 3, 4, 6]), 1..3), ks in prop::collection::vec(0u32..12, 4)) {
        let f = Field::Prime(13);
        let r = orders.len();
        let mut k = vec![vec![0u32; r]; r];
        for i in 0..r {
            for j in 0..r {
                // exponents must be multiples of lcm(12/n_i, 12/n_j)
                let (a, b) = (12 / orders[i], 12 / orders[j]);
                let step = a * b / gcd(a, b);
                if i < j {
                    k[i][j] = step * ks[i * r + j] % 12;
                    k[j][i] = (12 - k[i][j]) % 12;
                } else if i == j && 6 % step == 0 && ks[i] % 2 == 1 {
                    k[i][i] = 6;
                }
            }
        }
        let group = GradingGroup::new(orders).unwrap();
        let omega = q(2).in_field(f);
        let phi = Bicharacter::from_fn(&group, f, |g, h| {
            let mut e = 0;
            for i in 0..r {
                for j in 0..r {
                    e += k[i][j] * g[i] * h[j];
                }
            }
            omega.pow(u64::from(e % 12))
        });
        prop_assert!(phi.violations(&group).is_empty());
        let ctx = ColorContext::new(f, group.clone(), phi).unwrap();
        let n = group.size();
        for g in 0..n {
            prop_assert!(ctx.phi(0, g).is_one() && ctx.phi(g, 0).is_one());
            prop_assert!(ctx.phi(g, g).pow(n as u64).is_one());
            for h in 0..n {
                prop_assert!((ctx.phi(g, h) * ctx.phi(h, g)).is_one());
            }
        }
    }

    #[test]
    fn subspace_lattice(vs in prop::collection::vec(prop::collection::vec(-2i64..3, 5), 9)) {
        let span = |r: &[Vec<i64>]| {
            Subspace::from_vectors(5, r.iter().map(|v| Vector::from_dense(&v.iter().map(|&x| q(x)).collect::<Vec<_>>())))
        };
        let (u, v, w) = (span(&vs[0..3]), span(&vs[3..6]), span(&vs[6..9]));
        prop_assert_eq!(u.intersection(&v).intersection(&w), u.intersection(&v.intersection(&w)));
        prop_assert_eq!(u.sum(&v).dim() + u.intersection(&v).dim(), u.dim() + v.dim());
        prop_assert!(u.sum(&v).contains_space(&u));
        prop_assert_eq!(u.sum(&v), v.sum(&u));
    }

    #[test]
    fn braiding_is_natural(
        dv in prop::collection::vec(0usize..2, 1..4),
        dw in prop::collection::vec(0usize..2, 1..4),
        fe in prop::collection::vec(-3i64..4, 9),
        ge in prop::collection::vec(-3i64..4, 9),
    ) {
        let ctx = ColorContext::super_context(Field::Rational);
        let space = |d: &[usize]| GradedSpace::new(d.to_vec(), (0..d.len()).map(|i| format!("x{i}")).collect()).unwrap();
        let (v, w) = (space(&dv), space(&dw));
        // graded endomorphisms
        let endo = |s: &GradedSpace, e: &[i64]| {
            let n = s.dim();
            let m = LinMap::from_fn(n, n, |j| {
                Vector::from_terms((0..n).filter(|&i| s.degrees[i] == s.degrees[j]).map(|i| (i, q(e[i * 3 + j]))).collect())
            });
            GradedMap::new(s.clone(), s.clone(), m).unwrap()
        };
        let (f, g) = (endo(&v, &fe), endo(&w, &ge));
        let c = braiding(&ctx, &v, &w);
        let lhs = c.compose(&f.tensor(&g, &ctx.group)).unwrap();
        let rhs = g.tensor(&f, &ctx.group).compose(&c).unwrap();
        prop_assert_eq!(lhs.matrix, rhs.matrix);
        let back = braiding(&ctx, &w, &v).compose(&c).unwrap();
        prop_assert_eq!(back.matrix, LinMap::identity(v.dim() * w.dim()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn antipode_identities(which in 0usize..64, i in 0usize..64, j in 0usize..64, ca in prop::collection::vec(-3i64..4, 1..6), cb in prop::collection::vec(-3i64..4, 1..6)) {
        let a = &zoo_all()[which % zoo_all().len()].algebra;
        let (x, y) = (homogeneous(a, i, &ca), homogeneous(a, j, &cb));
        let (dx, dy) = (a.degree_of(&x).unwrap(), a.degree_of(&y).unwrap());
        // S(xy) = φ(|x|,|y|) S(y)S(x)
        let lhs = a.antipode(&a.mul(&x, &y));
        let rhs = a.mul(&a.antipode(&y), &a.antipode(&x)).scale(a.phi(dx, dy));
        prop_assert_eq!(lhs, rhs);
        // Δ∘S = (S⊗S)∘Δ
        let ss = a.antipode_map().tensor(a.antipode_map());
        prop_assert_eq!(a.comul(&a.antipode(&x)), ss.apply(&a.comul(&x)));
        prop_assert_eq!(a.antipode(&a.antipode(&x)), x);
    }

    #[test]
    fn quotients_and_kernels(which in 0usize..64, pick in 0usize..64, ca in prop::collection::vec(-3i64..4, 1..6), cb in prop::collection::vec(-3i64..4, 1..6)) {
        let (g, a, normals) = &groups()[which % groups().len()];
        let n = &normals[pick % normals.len()];
        let b = zoo::group_subalgebra(a, n.iter().copied());
        let quot = quotient_by_normal(a, &b, "Q").unwrap();
        prop_assert_eq!(quot.algebra.dim() * b.dim(), g.order());
        prop_assert!(quot.map.is_surjective());
        let ker = hopf_kernel(&quot.map, a, &quot.algebra);
        prop_assert_eq!(&ker, &b.space);
        prop_assert!(HopfSubalgebra::new(a.clone(), ker).is_ok());
        // q(x▷y) = q(x)▷q(y)
        let x = combination(&(0..a.dim()).map(Vector::basis).collect::<Vec<_>>(), &ca);
        let y = combination(&(0..a.dim()).rev().map(Vector::basis).collect::<Vec<_>>(), &cb);
        let (qx, qy) = (quot.project(&x), quot.project(&y));
        prop_assert_eq!(quot.project(&a.adjoint(&x, &y)), quot.algebra.adjoint(&qx, &qy));
    }

    #[test]
    fn commutators_absorb_commutation(which in 0usize..64, p1 in 0usize..64, p2 in 0usize..64, ca in prop::collection::vec(-3i64..4, 1..6), cb in prop::collection::vec(-3i64..4, 1..6)) {
        let (_, a, normals) = &groups()[which % groups().len()];
        let x = zoo::group_subalgebra(a, normals[p1 % normals.len()].iter().copied());
        let y = zoo::group_subalgebra(a, normals[p2 % normals.len()].iter().copied());
        let c = commutator_subalgebra(&x, &y).unwrap();
        let quot = quotient_by_normal(a, &c, "A/A[X,Y]⁺").unwrap();
        let (u, v) = (combination(x.basis(), &ca), combination(y.basis(), &cb));
        let diff = a.mul(&u, &v).sub(&a.mul(&v, &u));
        prop_assert!(quot.project(&diff).is_zero());
    }

    #[test]
    fn super_commutators_absorb_commutation(i in 0usize..4, j in 0usize..4, ca in prop::collection::vec(-3i64..4, 1..4), cb in prop::collection::vec(-3i64..4, 1..4)) {
        let l = zoo::exterior(2);
        let w = HopfSubalgebra::whole(&l);
        let c = commutator_subalgebra(&w, &w).unwrap();
        let quot = quotient_by_normal(&l, &c, "Λ(2)/[Λ(2),Λ(2)]").unwrap();
        let (u, v) = (homogeneous(&l, i, &ca), homogeneous(&l, j, &cb));
        let s = l.phi(l.degree_of(&u).unwrap(), l.degree_of(&v).unwrap());
        let diff = l.mul(&u, &v).sub(&l.mul(&v, &u).scale(s));
        prop_assert!(quot.project(&diff).is_zero());
    }
}

fn small_objects() -> &'static [SimplicialHopf] {
    static S: OnceLock<Vec<SimplicialHopf>> = OnceLock::new();
    S.get_or_init(|| {
        let a3 = zoo::standard_crossed_modules().into_iter().find(|x| x.name.contains("kA3")).unwrap();
        vec![
            xmod_to_simplicial_to(&CrossedModule::identity(&zoo::exterior(1)), 3).unwrap(),
            xmod_to_simplicial_to(&CrossedModule::identity(&zoo::kgroup(&FiniteGroup::cyclic(2))), 3).unwrap(),
            xmod_to_simplicial_to(&a3, 2).unwrap(),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn moore_projections_land_in_face_kernels(which in 0usize..3, level in 1usize..4, face in 0usize..4, coeffs in prop::collection::vec(-3i64..4, 1..8)) {
        let s = &small_objects()[which];
        let n = 1 + (level - 1) % s.top();
        let i = face % n;
        let h = &s.levels[n];
        let x = combination(&(0..h.dim()).map(Vector::basis).collect::<Vec<_>>(), &coeffs);
        let y = moore_projection(s, n, i).apply(&x);
        let ker = hopf_kernel(s.face(n, i), h, &s.levels[n - 1]);
        prop_assert!(ker.contains(&y));
    }
}

#[test]
fn constructed_objects_satisfy_identities() {
    for s in small_objects() {
        let rep = validate_simplicial(s);
        assert!(rep.passed(), "{rep}");
        let m = moore_complex(s).unwrap();
        assert!(m.chain.passed(), "{}", m.chain);
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
