use colorhopf::format::*;
use colorhopf::simplicial::xmod_to_simplicial_to;
use colorhopf::xmod::{xmod_to_rmg, CrossedModule};
use colorhopf::zoo::{self, FiniteGroup};
use colorhopf::*;

fn same_algebra(a: &ColorHopfAlgebra, b: &ColorHopfAlgebra) {
    assert_eq!(a.name(), b.name());
    assert_eq!(a.labels(), b.labels());
    assert_eq!(a.degrees(), b.degrees());
    assert_eq!(a.one(), b.one());
    assert_eq!(a.mult_map(), b.mult_map());
    assert_eq!(a.comult_map(), b.comult_map());
    assert_eq!(a.antipode_map(), b.antipode_map());
    assert_eq!(a.counit_values(), b.counit_values());
    assert_eq!(a.ctx(), b.ctx());
}

#[test]
fn zoo_algebras_round_trip() {
    for z in zoo::standard_zoo() {
        let text = to_json(&algebra_document(&z.algebra));
        let Loaded::Algebra(b) = parse(&text, None).unwrap() else { panic!() };
        same_algebra(&z.algebra, &b);
        assert_eq!(to_json(&algebra_document(&b)), text, "{}", z.name);
    }
}

#[test]
fn crossed_module_graph_and_simplicial_round_trip() {
    let x = CrossedModule::identity(&zoo::kgroup(&FiniteGroup::cyclic(3)));
    let text = to_json(&xmod_document(&x));
    let Loaded::CrossedModule(y) = parse(&text, None).unwrap() else { panic!() };
    assert_eq!(y.d, x.d);
    assert_eq!(y.action.act, x.action.act);
    same_algebra(y.top(), x.top());

    let g = xmod_to_rmg(&x).unwrap();
    let text = to_json(&graph_document(&g));
    let Loaded::Graph(h) = parse(&text, None).unwrap() else { panic!() };
    assert_eq!((h.p, h.gamma, h.i), (g.p.clone(), g.gamma.clone(), g.i.clone()));

    let s = xmod_to_simplicial_to(&x, 2).unwrap();
    let text = to_json(&simplicial_document(&s));
    let Loaded::Simplicial(t) = parse(&text, None).unwrap() else { panic!() };
    assert_eq!(t.dims(), s.dims());
    assert_eq!(t.faces, s.faces);
    assert_eq!(t.degens, s.degens);
    assert_eq!(t.coskeletal, Some(2));
}

const LINE: &str = r#"{
  "kind": "algebra",
  "context": { "grading": [2], "bicharacter": [[1, 1], [1, -1]] },
  "algebra": {
    "name": "Λ(1)",
    "labels": ["1", "v"],
    "degrees": [[0], [1]],
    "unit": [[0, 0, 1]],
    "mult": [[0, 0, 1], [1, 1, 1], [1, 2, "1"]],
    "counit": [[0, 0, 1]],
    "comult": [[0, 0, 1], [1, 1, 1], [2, 1, 1]],
    "antipode": [[0, 0, 1], [1, 1, -1]]
  }
}"#;

#[test]
fn hand_written_super_line() {
    let Loaded::Algebra(a) = parse(LINE, None).unwrap() else { panic!() };
    assert!(verify_hopf(&a).passed());
    assert_eq!(a.mult_map(), zoo::exterior(1).mult_map());
    // over GF(5) the same file still describes a Hopf algebra
    let Loaded::Algebra(b) = parse(LINE, Some(Field::Prime(5))).unwrap() else { panic!() };
    assert_eq!(b.ctx().field, Field::Prime(5));
    assert!(verify_hopf(&b).passed());
}

#[test]
fn errors_carry_locations() {
    let loc = |text: &str| match parse(text, None) {
        Err(Error::Parse { location, .. }) => location,
        other => panic!("{other:?}"),
    };
    assert!(loc("{ \"kind\": \"algebra\", ").starts_with("line 1"));
    assert_eq!(loc(&LINE.replace("[1, 2, \"1\"]", "[1, 9, 1]")), "algebra.mult");
    assert_eq!(loc(&LINE.replace("[1, 1, -1]]", "[1, 1, \"x\"]]")), "algebra.antipode.[1]");
    assert_eq!(loc(&LINE.replace("[[1, 1], [1, -1]]", "[[1, 1], [1, 3]]")), "context.bicharacter");
    assert_eq!(loc(&LINE.replace("[[0], [1]]", "[[0]]")), "algebra.degrees");
}
