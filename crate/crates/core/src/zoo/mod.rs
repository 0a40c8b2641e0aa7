//! Example corpus and a brute-force finite-group oracle.

pub mod groups;
pub mod oracle;

use std::sync::Arc;

pub use groups::FiniteGroup;

use crate::builders::{group_algebra, hopf_tensor_product, super_exterior, truncated_line};
use crate::grading::{Bicharacter, ColorContext, Ctx, GradingGroup};
use crate::hopf::Hopf;
use crate::linalg::Vector;
use crate::scalar::{Field, Scalar};

/// kΓ with trivial grading.
pub fn group_algebra_in(ctx: &Ctx, g: &FiniteGroup) -> Hopf {
    let grading = vec![0; g.order()];
    Arc::new(
        group_algebra(ctx, &format!("k{}", g.name), &g.table, &g.labels, &grading)
            .expect("group tables from the zoo are valid"),
    )
}

/// kΓ over the rationals, ungraded.
pub fn kgroup(g: &FiniteGroup) -> Hopf {
    group_algebra_in(&ColorContext::plain(Field::Rational), g)
}

/// Λ(n) over the rationals with the super sign.
pub fn exterior(n: u32) -> Hopf {
    Arc::new(super_exterior(&ColorContext::super_context(Field::Rational), n, 1).unwrap())
}

/// Z3 × Z3 with φ((a1,a2),(b1,b2)) = ω^{a1 b2 − a2 b1}, ω = 2 in GF(7).
pub fn gf7_context() -> Ctx {
    let f = Field::Prime(7);
    let g = GradingGroup::new(vec![3, 3]).unwrap();
    let w = f.int(2);
    let b = Bicharacter::from_fn(&g, f, |x, y| {
        let e = (3 + x[0] * y[1] % 3 - x[1] * y[0] % 3) % 3;
        w.pow(e as u64)
    });
    ColorContext::new(f, g, b).expect("alternating bicharacter is valid")
}

/// k[x]/(x^7) over GF(7), x primitive in degree (1,0).
pub fn gf7_example() -> Hopf {
    let ctx = gf7_context();
    let d = ctx.group.encode(&[1, 0]).unwrap();
    Arc::new(truncated_line(&ctx, "x", d).unwrap())
}

/// k[x]/(x^7) ⊗ k[y]/(y^7) with |x| = (1,0), |y| = (0,1); here yx = 4xy.
pub fn gf7_plane() -> Hopf {
    let ctx = gf7_context();
    let dx = ctx.group.encode(&[1, 0]).unwrap();
    let dy = ctx.group.encode(&[0, 1]).unwrap();
    let x = truncated_line(&ctx, "x", dx).unwrap();
    let y = truncated_line(&ctx, "y", dy).unwrap();
    Arc::new(hopf_tensor_product(&x, &y).unwrap().with_name("k[x,y]/(x^7,y^7)"))
}

/// Element of kΓ given by a group label.
pub fn element(a: &Hopf, label: &str) -> Vector {
    Vector::basis(
        a.labels()
            .iter()
            .position(|l| l == label)
            .unwrap_or_else(|| panic!("{} has no basis element {label}", a.name())),
    )
}

/// Span of the group elements in `elems` inside kΓ.
pub fn subgroup_span(a: &Hopf, elems: &[usize]) -> crate::linalg::Subspace {
    crate::linalg::Subspace::from_vectors(a.dim(), elems.iter().map(|&e| Vector::basis(e)))
}

pub fn scalar(n: i64) -> Scalar {
    Scalar::from_int(n)
}

pub struct ZooAlgebra {
    pub name: String,
    pub algebra: Hopf,
    pub group: Option<FiniteGroup>,
}

pub fn standard_groups() -> Vec<FiniteGroup> {
    let z2 = FiniteGroup::cyclic(2);
    vec![
        z2.clone(),
        FiniteGroup::cyclic(3),
        FiniteGroup::cyclic(4),
        FiniteGroup::product(&z2, &z2),
        FiniteGroup::cyclic(6),
        FiniteGroup::s3(),
        FiniteGroup::d4(),
        FiniteGroup::q8(),
    ]
}

/// Group algebras, exterior algebras, the GF(7) example and a super smash product.
pub fn standard_zoo() -> Vec<ZooAlgebra> {
    let mut out: Vec<ZooAlgebra> = standard_groups()
        .into_iter()
        .map(|g| ZooAlgebra { name: format!("k{}", g.name), algebra: kgroup(&g), group: Some(g) })
        .collect();
    for n in [1, 2] {
        out.push(ZooAlgebra { name: format!("Λ({n})"), algebra: exterior(n), group: None });
    }
    for a in [gf7_example(), gf7_plane(), super_smash()] {
        out.push(ZooAlgebra { name: a.name().to_string(), algebra: a, group: None });
    }
    out
}

/// kH ⊆ kΓ for a subgroup H given by element indices.
pub fn group_subalgebra(a: &Hopf, elems: impl IntoIterator<Item = usize>) -> crate::sub::HopfSubalgebra {
    let elems: Vec<usize> = elems.into_iter().collect();
    crate::sub::HopfSubalgebra::new(a.clone(), subgroup_span(a, &elems))
        .expect("subgroup spans are Hopf subalgebras")
}

/// Crossed modules of the corpus: identities (A, A, id, ξ), normal
/// inclusions (kΓ, kN, incl, conj) and one with trivial boundary.
pub fn standard_crossed_modules() -> Vec<crate::xmod::CrossedModule> {
    use crate::actions::ModuleAction;
    use crate::xmod::CrossedModule;
    let mut out = vec![];
    for a in [kgroup(&FiniteGroup::cyclic(2)), kgroup(&FiniteGroup::s3()), exterior(1)] {
        out.push(CrossedModule::identity(&a));
    }
    let s3 = FiniteGroup::s3();
    let d4 = FiniteGroup::d4();
    let q8 = FiniteGroup::q8();
    for (g, gens, name) in [
        (&s3, &["(123)"][..], "kA3"),
        (&d4, &["r"][..], "k<r>"),
        (&d4, &["r^2"][..], "k<r^2>"),
        (&q8, &["i"][..], "k<i>"),
    ] {
        let a = kgroup(g);
        let idx: Vec<usize> = gens.iter().map(|l| g.index_of(l).unwrap()).collect();
        let n = group_subalgebra(&a, g.generated(&idx));
        out.push(CrossedModule::normal_inclusion(&a, &n, name).unwrap());
    }
    let z2 = kgroup(&FiniteGroup::cyclic(2));
    let trivial = ModuleAction::trivial(&z2, &z2).unwrap();
    let d = z2.unit_map().compose(&z2.counit_map());
    out.push(CrossedModule::new("(kZ2, kZ2, uε, trivial)", trivial, d).unwrap());
    out
}

/// Actions of the corpus: adjoint, trivial, restricted conjugation.
pub fn standard_actions() -> Vec<crate::actions::ModuleAction> {
    use crate::actions::ModuleAction;
    let mut out = vec![];
    let s3 = FiniteGroup::s3();
    let a = kgroup(&s3);
    out.push(ModuleAction::adjoint(&a));
    out.push(ModuleAction::adjoint(&exterior(1)));
    out.push(ModuleAction::trivial(&kgroup(&FiniteGroup::cyclic(2)), &kgroup(&FiniteGroup::cyclic(3))).unwrap());
    out.push(z2_on_a3());
    let super_z2 = group_algebra_in(&ColorContext::super_context(Field::Rational), &FiniteGroup::cyclic(2));
    out.push(ModuleAction::trivial(&super_z2, &exterior(1)).unwrap());
    out
}

/// k<(12)> acting on kA3 by conjugation inside kS3.
pub fn z2_on_a3() -> crate::actions::ModuleAction {
    let s3 = FiniteGroup::s3();
    let a = kgroup(&s3);
    let t = group_subalgebra(&a, s3.generated(&[s3.index_of("(12)").unwrap()]));
    let n = group_subalgebra(&a, s3.generated(&[s3.index_of("(123)").unwrap()]));
    crate::actions::ModuleAction::restricted_adjoint(&t, &n, ("kZ2", "kZ3")).unwrap()
}

/// Λ(1) ⋊ kZ2 where the generator of Z2 acts on v by −1.
pub fn super_smash() -> Hopf {
    use crate::actions::{smash_product, ModuleAction};
    let z2 = group_algebra_in(&ColorContext::super_context(Field::Rational), &FiniteGroup::cyclic(2));
    let l = exterior(1);
    // g·1 = 1, g·v = −v
    let act = crate::linalg::LinMap::from_fn(2, 4, |k| {
        let (g, h) = (k / 2, k % 2);
        if g == 1 && h == 1 {
            Vector::monomial(1, Scalar::from_int(-1))
        } else {
            Vector::basis(h)
        }
    });
    let m = ModuleAction::new(z2, l, act).unwrap();
    Arc::new(Arc::try_unwrap(smash_product(&m).unwrap()).unwrap().with_name("Λ(1)⋊kZ2"))
}

/// kD4 → kD4/kZ(D4), the extension used for Hall's criterion.
pub fn d4_extension() -> crate::format::Morphism {
    let g = FiniteGroup::d4();
    let e = kgroup(&g);
    let z = group_subalgebra(&e, g.generated(&[g.index_of("r^2").unwrap()]));
    let q = crate::sub::quotient_by_normal(&e, &z, "kZ2²").unwrap();
    crate::format::Morphism { name: "kD4 → kZ2²".into(), source: e, target: q.algebra, map: q.map }
}
