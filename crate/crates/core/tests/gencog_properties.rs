//! Properties of approximations, relative syzygies and gl.dim End(M) over
//! random generator-cogenerators of representation-finite catalogs.

use std::sync::{Arc, OnceLock};

use mrep::artrans::{Budget, Catalog};
use mrep::endalg;
use mrep::gencog::{GenCog, GlDim, MDim, Workspace};
use mrep::quiver::Quiver;
use mrep::replicated::ReplicatedAlgebra;
use proptest::prelude::*;

fn cat(name: &str) -> &'static Catalog {
    static A2: OnceLock<Catalog> = OnceLock::new();
    static A3: OnceLock<Catalog> = OnceLock::new();
    static A3MID: OnceLock<Catalog> = OnceLock::new();
    let cell = match name {
        "a2" => &A2,
        "a3" => &A3,
        _ => &A3MID,
    };
    cell.get_or_init(|| {
        let rep = ReplicatedAlgebra::new(&Quiver::named(name).unwrap(), 1, 32003).unwrap();
        Catalog::build(Arc::new(rep), Budget::default()).unwrap()
    })
}

/// A workspace and a generator-cogenerator: the basic parts plus the
/// catalog members selected by `mask`.
fn gencog(name: &str, mask: &[bool]) -> (Workspace, GenCog) {
    let c = cat(name);
    let mut ws = Workspace::from_catalog(c);
    let mut ids = ws.basic_parts().unwrap().all();
    ids.extend(c.ids().filter(|&i| mask[i % mask.len()]));
    let m = GenCog::new(&mut ws, ids).unwrap();
    (ws, m)
}

fn quiver_name() -> impl Strategy<Value = &'static str> {
    prop_oneof![Just("a2"), Just("a3"), Just("a3mid")]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn approximations_are_minimal_and_surjective(name in quiver_name(), mask in proptest::collection::vec(any::<bool>(), 18)) {
        let (mut ws, m) = gencog(name, &mask);
        prop_assert!(m.is_gencog());
        for x in cat(name).ids() {
            let a = ws.approximate(&m, x).unwrap();
            let check = ws.check_approximation(&m, &a).unwrap();
            prop_assert!(check.approximation && check.minimal, "{} over {:?}", ws.label(x), m.summands());
            prop_assert!(a.surjective);
            if m.contains(x) {
                prop_assert!(a.kernel_ids.is_empty());
                prop_assert_eq!(a.parts.clone(), vec![x]);
            }
        }
    }

    #[test]
    fn lemma_2_1_matches_end_algebra(name in quiver_name(), mask in proptest::collection::vec(any::<bool>(), 18)) {
        let (mut ws, m) = gencog(name, &mask);
        if let Some(oracle) = endalg::end_algebra_gldim(&mut ws, &m, endalg::DEFAULT_CAP).unwrap() {
            prop_assert_eq!(ws.gldim_end_resolved(&m).unwrap(), oracle);
        }
    }

    #[test]
    fn gldim_bounded_by_longest_orbit(name in quiver_name(), mask in proptest::collection::vec(any::<bool>(), 18)) {
        let c = cat(name);
        let l = mrep::artrans::OrbitTable::build(c).max_cardinality();
        let (mut ws, m) = gencog(name, &mask);
        let g = ws.gldim_end_resolved(&m).unwrap();
        prop_assert!(g <= GlDim::Finite(l));
    }
}

#[test]
fn layer0_gencogs_reach_mod_a_after_2m_steps() {
    for name in ["a2", "a3", "a3mid"] {
        let c = cat(name);
        let (mut ws, m) = gencog(name, &[false]);
        for x in c.ids().filter(|&x| !c.flags(x).injective) {
            let r = ws.m_dimension(&m, x, 64).unwrap();
            let step = r.chain.get(2).cloned().unwrap_or_default();
            assert!(step.iter().all(|&y| ws.is_layer0(y)), "{name}: {}", ws.label(x));
        }
    }
}

#[test]
fn non_gencog_is_rejected() {
    let c = cat("a2");
    let mut ws = Workspace::from_catalog(c);
    let (projs, _) = ws.projective_and_injective_ids().unwrap();
    let m = GenCog::new(&mut ws, projs).unwrap();
    assert!(matches!(ws.gldim_end(&m), Err(mrep::Error::Contract(_))));
}

/// Adding a summand can raise an M-dimension. Over A_3 (1 <- 2 <- 3), m = 1,
/// with M = A ⊕ DA_1 ⊕ P: S3 is approximated by P3 with kernel P2 in add M,
/// so M-dim S3 = 1. After adding I2 = (0,1,1), the minimal approximation of
/// S3 is I2 -> S3 with kernel S2, and S2 needs one more step (kernel P1).
#[test]
fn enlarging_m_can_raise_m_dimension() {
    let c = cat("a3");
    let (mut ws, small) = gencog("a3", &[false]);
    let find = |label: &str| c.ids().find(|&i| c.label(i) == label).unwrap();
    let (s3, s2, p1, i2) = (find("(0,0,1|0,0,0)"), find("(0,1,0|0,0,0)"), find("(1,0,0|0,0,0)"), find("(0,1,1|0,0,0)"));
    let mut ids = small.summands().to_vec();
    ids.push(i2);
    let big = GenCog::new(&mut ws, ids).unwrap();
    let before = ws.m_dimension(&small, s3, 16).unwrap();
    let after = ws.m_dimension(&big, s3, 16).unwrap();
    assert_eq!(before.value, MDim::Finite(1));
    assert_eq!(after.value, MDim::Finite(2));
    assert_eq!(after.chain, vec![vec![s3], vec![s2], vec![p1]]);
}
