//! File formats: quiver text with diagnostics, representation JSON and
//! layered-module JSON.

use mrep::artrans::{Budget, Catalog};
use mrep::quiver::Quiver;
use mrep::rep::Representation;
use mrep::replicated::{LayeredJson, ReplicatedAlgebra};
use mrep::Error;
use proptest::prelude::*;
use std::sync::Arc;

#[test]
fn shipped_quiver_files_match_builtins() {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/data");
    for (file, name) in [("a2", "a2"), ("a2op", "a2op"), ("a3", "a3"), ("a3mid", "a3mid"), ("d4", "d4"), ("kron", "kronecker")] {
        let text = std::fs::read_to_string(format!("{dir}/{file}.q")).unwrap();
        let q = Quiver::parse(&text).unwrap();
        assert_eq!(q.canonical_text(), Quiver::named(name).unwrap().canonical_text(), "{file}");
    }
}

#[test]
fn parse_errors_carry_positions() {
    let cases = [
        ("vertex 1\nvertex 2\narrow a: 2 -> 3\n", 3, 15),
        ("vertex 1\n  edge a\n", 2, 3),
        ("vertex 1\nvertex 1\n", 2, 8),
        ("vertex 1\narrow a 1 -> 1\n", 2, 15),
    ];
    for (text, line, column) in cases {
        match Quiver::parse(text) {
            Err(Error::Parse { line: l, column: c, .. }) => assert_eq!((l, c), (line, column), "{text:?}"),
            other => panic!("{text:?} gave {other:?}"),
        }
    }
}

#[test]
fn cyclic_quivers_are_rejected() {
    assert!(Quiver::parse("vertex 1\nvertex 2\narrow a: 1 -> 2\narrow b: 2 -> 1\n").is_err());
}

#[test]
fn quiver_json_round_trips() {
    let q = Quiver::named("d4").unwrap();
    let back = Quiver::parse(&q.to_json()).unwrap();
    assert_eq!(back.canonical_text(), q.canonical_text());
}

#[test]
fn representation_json() {
    let q = Quiver::named("kronecker").unwrap();
    let text = r#"{"dims": {"1": 1, "2": 1}, "arrows": {"a": [[1]], "b": [[0]]}}"#;
    let r = Representation::from_json(&q, 5, text).unwrap();
    assert_eq!(r.dims(), &[1, 1]);
    let bad = r#"{"dims": {"1": 1, "2": 2}, "arrows": {"a": [[1]], "b": [[0]]}}"#;
    assert!(Representation::from_json(&q, 5, bad).is_err());
    let unknown = r#"{"dims": {"7": 1}, "arrows": {}}"#;
    assert!(Representation::from_json(&q, 5, unknown).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn representation_json_round_trips(dims in proptest::collection::vec(0usize..3, 2), entries in proptest::collection::vec(0u32..7, 8)) {
        let q = Quiver::named("kronecker").unwrap();
        let n = dims[0] * dims[1];
        let mk = |off: usize| (0..dims[0]).map(|r| (0..dims[1]).map(|c| entries[(off + r * dims[1] + c) % 8] as i64).collect()).collect::<Vec<Vec<i64>>>();
        let r = Representation::from_ints(&q, 7, &dims, &[mk(0), mk(n)]).unwrap();
        let text = serde_json::to_string(&r.to_json(&q)).unwrap();
        let back = Representation::from_json(&q, 7, &text).unwrap();
        prop_assert_eq!(back, r);
    }
}

#[test]
fn layered_json_round_trips_over_a_catalog() {
    let rep = Arc::new(ReplicatedAlgebra::new(&Quiver::named("a3mid").unwrap(), 2, 101).unwrap());
    let cat = Catalog::build(rep.clone(), Budget::default()).unwrap();
    for i in cat.ids() {
        let j = rep.to_json(cat.module(i));
        let text = serde_json::to_string(&j).unwrap();
        let parsed: LayeredJson = serde_json::from_str(&text).unwrap();
        let back = rep.from_json(&parsed).unwrap();
        assert_eq!(&back, cat.module(i));
    }
}

#[test]
fn layered_json_relations_are_checked() {
    let rep = ReplicatedAlgebra::new(&Quiver::named("a2").unwrap(), 1, 101).unwrap();
    let mut j = rep.to_json(&rep.proj(0, 1).unwrap());
    // dropping the connecting map leaves a valid but different module
    j.connecting.clear();
    let x = rep.from_json(&j).unwrap();
    assert_ne!(&x, &rep.proj(0, 1).unwrap());
    // a wrong matrix shape is an input error
    let mut k = rep.to_json(&rep.proj(0, 1).unwrap());
    k.layers[0].dims.insert("1".into(), 2);
    assert!(rep.from_json(&k).is_err());
    assert_eq!(rep.layer(&x, 0), rep.layer(&rep.proj(0, 1).unwrap(), 0));
}
