//! Catalog-level properties: the predecessor preorder, τ on layer 0, the
//! serialized form and the embedding of mod A.

use std::sync::Arc;

use mrep::artrans::{ArQuiver, Budget, Catalog, CatalogData};
use mrep::module;
use mrep::quiver::Quiver;
use mrep::rep::PathAlgebra;
use mrep::replicated::ReplicatedAlgebra;
use proptest::prelude::*;

fn catalog(name: &str, m: usize, p: u32) -> Catalog {
    let rep = ReplicatedAlgebra::new(&Quiver::named(name).unwrap(), m, p).unwrap();
    Catalog::build(Arc::new(rep), Budget::default()).unwrap()
}

#[test]
fn catalog_sizes() {
    // 9 = 4 + 3 + 1 + 1 over A_2; every catalog has no mesh violation
    for (name, m, size) in [("a2", 1, 9), ("a2op", 1, 9), ("a3", 1, 18), ("a3mid", 1, 18), ("d4", 1, 36)] {
        let c = catalog(name, m, 101);
        assert_eq!(c.len(), size, "{name}");
        assert!(ArQuiver::build(&c).mesh_violations(&c).is_empty(), "{name}");
    }
}

#[test]
fn predecessor_relation_is_a_preorder() {
    let c = catalog("a3mid", 1, 101);
    let n = c.len();
    for i in 0..n {
        assert!(c.leq(i, i));
        for j in 0..n {
            if !c.hom(i, j).is_empty() {
                assert!(c.leq(i, j));
            }
            for k in 0..n {
                if c.leq(i, j) && c.leq(j, k) {
                    assert!(c.leq(i, k));
                }
            }
        }
    }
    // P(1,0) -> S(2,0) -> (0,1|1,0) -> I(1,1) over A_2
    let a2 = catalog("a2", 1, 101);
    let p = a2.id_of_label("(1,0|0,0)").unwrap();
    let i = a2.id_of_label("(0,0|1,1)").unwrap();
    assert!(a2.leq(p, i));
    assert!(!a2.leq(i, p));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn set_relation_is_never_symmetric(s1 in proptest::collection::btree_set(0usize..18, 1..5),
                                       s2 in proptest::collection::btree_set(0usize..18, 1..5),
                                       strict in any::<bool>()) {
        let c = catalog("a3", 1, 101);
        let (s1, s2): (Vec<usize>, Vec<usize>) = (s1.into_iter().collect(), s2.into_iter().collect());
        prop_assert!(!(c.set_leq(&s1, &s2, strict) && c.set_leq(&s2, &s1, strict)));
    }
}

#[test]
fn layer0_tau_agrees_with_the_base_algebra() {
    for name in ["a2", "a3", "a3mid", "d4"] {
        let q = Quiver::named(name).unwrap();
        let c = catalog(name, 1, 101);
        let pa = PathAlgebra::new(&q, 101).unwrap();
        for x in c.ids().filter(|&x| c.flags(x).layer0) {
            let base = c.rep().layer(c.module(x), 0);
            let t = module::tau(pa.alg(), &pa.to_module(&base));
            let expected = if t.is_zero() { None } else { Some(c.rep().embed(&pa.from_module(&t), 0).unwrap()) };
            match (c.tau(x), expected) {
                (None, None) => {}
                (Some(y), Some(e)) if c.rep().is_layer0(c.module(y)) => {
                    assert_eq!(c.find(&e), Some(y), "{name}: τ{}", c.label(x));
                }
                (got, want) => panic!("{name}: τ{} is {got:?}, base gives {:?}", c.label(x), want.map(|w| w.dims().to_vec())),
            }
        }
    }
}

#[test]
fn embedding_of_mod_a_is_full() {
    let q = Quiver::named("a3mid").unwrap();
    let pa = PathAlgebra::new(&q, 101).unwrap();
    let rep = ReplicatedAlgebra::new(&q, 2, 101).unwrap();
    let base: Vec<_> = (0..3).flat_map(|i| [pa.projective(i).unwrap(), pa.injective(i).unwrap(), pa.simple(i).unwrap()]).collect();
    for x in &base {
        for y in &base {
            let (ex, ey) = (rep.embed(x, 0).unwrap(), rep.embed(y, 0).unwrap());
            assert_eq!(module::hom_dim(rep.alg(), &ex, &ey), pa.hom_dim(x, y));
        }
    }
}

#[test]
fn serialized_catalog_round_trips() {
    let c = catalog("a3", 1, 101);
    let text = serde_json::to_string(&c.to_data()).unwrap();
    let data: CatalogData = serde_json::from_str(&text).unwrap();
    assert_eq!(data, c.to_data());
    let back = Catalog::from_data(c.rep_arc(), data).unwrap();
    assert_eq!(back.to_data(), c.to_data());
    let labels: Vec<&str> = c.ids().map(|i| c.label(i)).collect();
    let back_labels: Vec<&str> = back.ids().map(|i| back.label(i)).collect();
    assert_eq!(labels, back_labels);
}

#[test]
fn kronecker_catalog_exceeds_budget() {
    let rep = ReplicatedAlgebra::new(&Quiver::named("kronecker").unwrap(), 1, 3).unwrap();
    let r = Catalog::build(Arc::new(rep), Budget::entries(40));
    assert!(matches!(r, Err(mrep::Error::Budget(_))));
}
