use std::sync::Arc;

use colorhopf::builders::{group_algebra, hopf_tensor_product, super_exterior, tensor_maps};
use colorhopf::sub::{hopf_kernel, quotient_by_normal, pullback, HopfSubalgebra};
use colorhopf::verify::{antipode_is_involutive, derived_identities};
use colorhopf::zoo::{self, oracle, FiniteGroup};
use colorhopf::*;

#[test]
fn zoo_algebras_are_hopf() {
    for z in zoo::standard_zoo() {
        let rep = verify_hopf(&z.algebra);
        assert!(rep.passed(), "{rep}");
        assert!(derived_identities(&z.algebra).passed(), "{}", z.name);
        assert!(antipode_is_involutive(&z.algebra), "{}", z.name);
    }
}

#[test]
fn exterior_signs() {
    let a = zoo::exterior(2);
    let v1 = zoo::element(&a, "v1");
    let v2 = zoo::element(&a, "v2");
    let v12 = zoo::element(&a, "v1v2");
    assert_eq!(a.mul(&v1, &v2), v12);
    assert_eq!(a.mul(&v2, &v1), v12.neg());
    assert!(a.mul(&v1, &v1).is_zero());
    assert!(a.is_primitive(&v1));
    assert_eq!(a.antipode(&v12), v12);
}

#[test]
fn super_graded_z4_rejected() {
    let ctx = ColorContext::super_context(Field::Rational);
    let z4 = FiniteGroup::cyclic(4);
    let err = group_algebra(&ctx, "kZ4", &z4.table, &z4.labels, &[0, 1, 0, 1]).unwrap_err();
    assert!(matches!(err, Error::Hypothesis(_)), "{err}");
}

#[test]
fn tensor_of_cyclic_is_cyclic_six() {
    let a = zoo::kgroup(&FiniteGroup::cyclic(2));
    let b = zoo::kgroup(&FiniteGroup::cyclic(3));
    let t = Arc::new(hopf_tensor_product(&a, &b).unwrap());
    assert!(verify_hopf(&t).passed());
    let gl: Vec<usize> = (0..t.dim()).filter(|&i| t.is_group_like(&Vector::basis(i))).collect();
    assert_eq!(gl.len(), 6);
    // some group-like has order 6
    let has_order_six = gl.iter().any(|&g| {
        let mut x = Vector::basis(g);
        let mut k = 1;
        while x != *t.one() {
            x = t.mul(&x, &Vector::basis(g));
            k += 1;
        }
        k == 6
    });
    assert!(has_order_six);
    let m = tensor_maps(&a, &b);
    assert!(verify_morphism(&m.proj_left, &t, &a).passed());
    assert!(verify_morphism(&m.inj_right, &b, &t).passed());
}

#[test]
fn super_tensor_square_is_hopf() {
    let a = zoo::exterior(1);
    let t = hopf_tensor_product(&a, &a).unwrap();
    assert!(verify_hopf(&t).passed(), "{}", verify_hopf(&t));
    let b = super_exterior(a.ctx(), 2, 1).unwrap();
    assert_eq!(t.dim(), b.dim());
}

#[test]
fn kernel_of_sign_map() {
    let s3 = FiniteGroup::s3();
    let a = zoo::kgroup(&s3);
    let z2 = zoo::kgroup(&FiniteGroup::cyclic(2));
    // sign: transpositions to g
    let f = LinMap::from_fn(2, 6, |i| {
        let odd = ["(12)", "(23)", "(13)"].contains(&s3.labels[i].as_str());
        Vector::basis(odd as usize)
    });
    assert!(verify_morphism(&f, &a, &z2).passed());
    let k = hopf_kernel(&f, &a, &z2);
    assert_eq!(k.dim(), 3);
    let a3 = oracle::commutator(&s3, &oracle::whole(&s3), &oracle::whole(&s3));
    assert_eq!(k, zoo::subgroup_span(&a, &a3.into_iter().collect::<Vec<_>>()));
}

#[test]
fn quotient_by_a3() {
    let s3 = FiniteGroup::s3();
    let a = zoo::kgroup(&s3);
    let a3: Vec<usize> =
        oracle::commutator(&s3, &oracle::whole(&s3), &oracle::whole(&s3)).into_iter().collect();
    let b = HopfSubalgebra::new(a.clone(), zoo::subgroup_span(&a, &a3)).unwrap();
    let q = quotient_by_normal(&a, &b, "kS3/kA3").unwrap();
    assert_eq!(q.algebra.dim(), 2);
    assert!(verify_hopf(&q.algebra).passed());
}

#[test]
fn quotient_rejects_non_normal() {
    let s3 = FiniteGroup::s3();
    let a = zoo::kgroup(&s3);
    let t = s3.index_of("(12)").unwrap();
    let b = HopfSubalgebra::new(a.clone(), zoo::subgroup_span(&a, &[0, t])).unwrap();
    assert!(matches!(quotient_by_normal(&a, &b, "bad"), Err(Error::NotNormal(_))));
}

#[test]
fn pullback_over_trivial_is_tensor() {
    let a = zoo::kgroup(&FiniteGroup::cyclic(2));
    let b = zoo::kgroup(&FiniteGroup::cyclic(3));
    let k = colorhopf::builders::trivial_algebra(a.ctx());
    let fa = a.counit_map();
    let fb = b.counit_map();
    let p = pullback(&a, &b, &k, &fa, &fb, "P").unwrap();
    assert_eq!(p.algebra.dim(), 6);
    assert!(verify_hopf(&p.algebra).passed());
    assert!(verify_morphism(&p.proj_a, &p.algebra, &a).passed());
}

#[test]
fn gf7_context_values() {
    let a = zoo::gf7_example();
    assert_eq!(a.ctx().field, Field::Prime(7));
    let g = a.ctx().group.encode(&[1, 0]).unwrap();
    let h = a.ctx().group.encode(&[0, 1]).unwrap();
    assert_eq!(a.phi(g, h).to_string(), "2");
    assert_eq!(a.phi(h, g).to_string(), "4");
    assert_eq!(a.dim(), 7);

    let b = zoo::gf7_plane();
    let x = zoo::element(&b, "x⊗1");
    let y = zoo::element(&b, "1⊗y");
    assert_eq!(b.mul(&y, &x), b.mul(&x, &y).scale(&zoo::scalar(4)));
    assert!(b.is_primitive(&x) && b.is_primitive(&y));
}

#[test]
fn graded_group_likes_rejected() {
    let ctx = zoo::gf7_context();
    let z3 = FiniteGroup::cyclic(3);
    let d = ctx.group.encode(&[1, 0]).unwrap();
    let grading = [0, d, ctx.group.add(d, d)];
    let err = group_algebra(&ctx, "kZ3", &z3.table, &z3.labels, &grading).unwrap_err();
    assert!(matches!(err, Error::NotGraded(_)), "{err}");
}
