use colorhopf::simplicial::*;
use colorhopf::sub::hopf_kernel;
use colorhopf::xmod::CrossedModule;
use colorhopf::zoo::{self, FiniteGroup};
use colorhopf::*;

fn kz2_trivial_boundary() -> CrossedModule {
    zoo::standard_crossed_modules().into_iter().find(|x| x.name.contains("uε")).unwrap()
}

#[test]
fn constant_object() {
    let a = zoo::kgroup(&FiniteGroup::s3());
    let s = SimplicialHopf::constant(&a, 3);
    assert!(validate_simplicial(&s).passed());
    let m = moore_complex(&s).unwrap();
    assert_eq!(m.dims(), vec![6, 1, 1, 1]);
    assert!(m.chain.passed());
    let l = moore_length(&s).unwrap();
    assert_eq!((l.length, l.certified), (0, true));

    let f = simplicial_to_xmod(&s).unwrap();
    assert_eq!(f.xmod.top().dim(), 1);
    assert_eq!(f.xmod.d.col_vec(0), *a.one());

    let d = semidirect_decomposition_check(&s).unwrap();
    assert!(d.report.passed(), "{}", d.report);
    assert_eq!(d.moore_dims, vec![6, 1, 1]);
}

#[test]
fn coskeleton_of_constant_is_constant() {
    let a = zoo::exterior(1);
    let s = coskeleton_step(&SimplicialHopf::constant(&a, 1)).unwrap();
    assert_eq!(s.dims(), vec![2, 2, 2]);
    assert!(validate_simplicial(&s).passed());
    for d in &s.faces[2] {
        assert!(d.is_injective() && d.is_surjective());
    }
}

#[test]
fn xmod_objects_have_moore_length_one() {
    for x in zoo::standard_crossed_modules().into_iter().filter(|x| !x.name.contains("uε")) {
        let (na, nh) = (x.base().dim(), x.top().dim());
        let s = xmod_to_simplicial(&x).unwrap();
        assert_eq!(s.dims(), vec![na, nh * na, nh * nh * na, nh * nh * nh * na], "{}", x.name);
        let rep = validate_simplicial(&s);
        assert!(rep.passed(), "{rep}");

        let m = moore_complex(&s).unwrap();
        assert_eq!(m.dims(), vec![na, nh, 1, 1], "{}", x.name);
        assert!(m.chain.passed());
        let l = moore_length(&s).unwrap();
        assert_eq!((l.length, l.certified), (1, true));

        let rt = simplicial_roundtrip(&x, &s).unwrap();
        assert!(rt.passed(), "{rt}");

        let d = semidirect_decomposition_check(&s).unwrap();
        assert!(d.report.passed(), "{}", d.report);
    }
}

#[test]
fn trivial_boundary_is_not_length_one_after_one_coskeleton() {
    // (kZ2, kZ2, uε, trivial): d = ε so M₂ of cosk₁ is Hker(∂₁) ≅ kZ2
    let x = kz2_trivial_boundary();
    let s = xmod_to_simplicial_to(&x, 2).unwrap();
    let c = coskeleton_step(&s.truncate(1).unwrap()).unwrap();
    assert!(validate_simplicial(&c).passed());
    assert_eq!(c.dims(), vec![2, 4, 16]);
    let l = moore_length(&c).unwrap();
    assert_eq!(l.dims, vec![2, 2, 2]);
    assert_eq!((l.length, l.certified), (2, true));
    assert!(matches!(simplicial_to_xmod(&c), Err(Error::Hypothesis(_))));

    // the 2-level object of the crossed module itself is fine
    let s = xmod_to_simplicial(&x).unwrap();
    assert_eq!(moore_length(&s).unwrap().length, 1);
}

#[test]
fn swapped_faces_break_identity_one() {
    let x = CrossedModule::identity(&zoo::kgroup(&FiniteGroup::cyclic(3)));
    let mut s = xmod_to_simplicial_to(&x, 2).unwrap();
    s.faces[2].swap(0, 1);
    let rep = validate_simplicial(&s);
    let bad: Vec<&str> = rep.failures().map(|c| c.name.as_str()).collect();
    assert!(bad.contains(&"1) d^1_0∘d^2_1 = d^1_0∘d^2_0") || bad.iter().any(|n| n.starts_with("1)")), "{rep}");
    let c = rep.failures().find(|c| c.name.starts_with("1)")).unwrap();
    assert!(c.witness.is_some());
}

#[test]
fn faces_on_group_likes() {
    let g = FiniteGroup::s3();
    let a = zoo::kgroup(&g);
    let x = zoo::standard_crossed_modules().into_iter().find(|x| x.name.contains("kA3")).unwrap();
    let s = xmod_to_simplicial_to(&x, 2).unwrap();
    let (nh, na) = (x.top().dim(), a.dim());
    let elem = |k: usize| x.d.col_vec(k).leading().unwrap();
    for n in 0..nh {
        for n2 in 0..nh {
            for e in 0..na {
                let col = (n * nh + n2) * na + e;
                // d²₂(n⊗n'⊗g) = n⊗n'g
                let want = Vector::basis(n * na + g.mul(elem(n2), e));
                assert_eq!(s.face(2, 2).col_vec(col), want);
                // d²₀(n⊗n'⊗g) = ε(n) n'⊗g = n'⊗g
                assert_eq!(s.face(2, 0).col_vec(col), Vector::basis(n2 * na + e));
                // d²₁(n⊗n'⊗g) = nn'⊗g
                let nn = g.mul(elem(n), elem(n2));
                let k = (0..nh).find(|&k| elem(k) == nn).unwrap();
                assert_eq!(s.face(2, 1).col_vec(col), Vector::basis(k * na + e));
            }
        }
    }
}

#[test]
fn moore_projections_land_in_kernels() {
    for x in [CrossedModule::identity(&zoo::exterior(1)), CrossedModule::identity(&zoo::kgroup(&FiniteGroup::s3()))] {
        let s = xmod_to_simplicial(&x).unwrap();
        for n in 1..=3 {
            for i in 0..n {
                let f = moore_projection(&s, n, i);
                let k = hopf_kernel(s.face(n, i), &s.levels[n], &s.levels[n - 1]);
                assert_eq!(f.image().intersection(&k), f.image(), "n={n} i={i}");
            }
        }
    }
}

#[test]
fn deeper_truncation() {
    let x = CrossedModule::identity(&zoo::kgroup(&FiniteGroup::cyclic(2)));
    let s = xmod_to_simplicial_to(&x, 4).unwrap();
    assert_eq!(s.dims(), vec![2, 4, 8, 16, 32]);
    assert!(validate_simplicial(&s).passed());
    assert_eq!(moore_complex(&s).unwrap().dims(), vec![2, 2, 1, 1, 1]);
    assert!(xmod_to_simplicial_to(&x, 5).is_err());
}

#[test]
fn super_crossed_module() {
    let l = zoo::exterior(2);
    let x = CrossedModule::identity(&l);
    let s = xmod_to_simplicial(&x).unwrap();
    assert!(validate_simplicial(&s).passed());
    assert_eq!(moore_complex(&s).unwrap().dims(), vec![4, 4, 1, 1]);
    assert!(simplicial_roundtrip(&x, &s).unwrap().passed());
}
