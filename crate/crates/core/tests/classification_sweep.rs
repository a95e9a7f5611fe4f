use cpm_core::graphs::{build_component, Adjacency};
use cpm_core::isomorphisms::normalized_params_up_to;
use cpm_core::permgroup::{automorphism_group, transitivity_report, PermGroup};
use cpm_core::symmetry::{classify, group_g, levels_are_blocks, witness_generators, SymKind};
use num_bigint::BigUint;

#[test]
fn predicted_and_computed_automorphisms_agree() {
    let tuples = normalized_params_up_to(500, 2);
    assert!(tuples.len() >= 40, "{}", tuples.len());
    let mut kinds = [0usize; 4];
    for p in tuples {
        let g = build_component(p).unwrap();
        let aut = automorphism_group(&g).unwrap();
        let c = classify(p).unwrap();
        assert_eq!(aut.order(), c.predicted_aut_order, "{p}");
        assert_eq!(c.predicted_aut_order, BigUint::from(g.order()) * &c.stabilizer_order, "{p}");

        let rep = transitivity_report(&aut, &g).unwrap();
        assert!(rep.vertex_transitive() && rep.edge_transitive(), "{p}");
        match c.kind {
            SymKind::HalfArcTransitive => assert!(rep.half_arc_transitive(), "{p}"),
            SymKind::TwoArcTransitive => assert!(rep.two_arc_transitive(), "{p}"),
            _ => assert!(rep.arc_transitive() && !rep.two_arc_transitive(), "{p}"),
        }
        assert_eq!(
            levels_are_blocks(&aut, &g).unwrap(),
            c.kind != SymKind::TwoArcTransitive,
            "{p}"
        );

        let gg = group_g(&g).unwrap();
        assert_eq!(gg.order(), BigUint::from(g.order() as u64) << p.s, "{p}");
        if c.kind != SymKind::ArcTransitiveNot2AtPx {
            let w = PermGroup::new(g.order(), witness_generators(&g).unwrap()).unwrap();
            assert_eq!(w.order(), aut.order(), "{p}");
        }
        kinds[c.kind as usize] += 1;
    }
    assert!(kinds.iter().all(|&k| k > 0), "{kinds:?}");
}
