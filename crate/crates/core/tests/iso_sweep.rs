use cpm_core::graphs::{build_component, Adjacency, CpmGraph, Params};
use cpm_core::isomorphisms::*;
use cpm_core::permgroup::SearchConfig;

/// Brute-force isomorphism classes, found by comparing each graph with one
/// representative per class.
fn classes(graphs: &[CpmGraph]) -> Vec<usize> {
    let cfg = SearchConfig::default();
    let mut reps: Vec<usize> = Vec::new();
    let mut class = Vec::with_capacity(graphs.len());
    for (i, g) in graphs.iter().enumerate() {
        let found = reps.iter().position(|&j| {
            brute_force_iso(g, &graphs[j], &cfg).unwrap().answer == IsoAnswer::Isomorphic
        });
        class.push(found.unwrap_or_else(|| {
            reps.push(i);
            reps.len() - 1
        }));
    }
    class
}

#[test]
fn theory_agrees_with_search() {
    let tuples: Vec<Params> = params_up_to(260, 2).into_iter().filter(|p| p.s == 2).collect();
    let graphs: Vec<CpmGraph> = tuples.iter().map(|&p| build_component(p).unwrap()).collect();
    let class = classes(&graphs);
    let (mut definite, mut open) = (0, 0);
    for (i, &a) in tuples.iter().enumerate() {
        for (j, &b) in tuples.iter().enumerate() {
            let v = decide_isomorphic(a, b).unwrap();
            let same = class[i] == class[j];
            match v.answer {
                IsoAnswer::UnknownOpenCase => {
                    open += 1;
                    let (na, nb) = (normalize_params(a), normalize_params(b));
                    let outside = !meets_standing_hypotheses(&na) || !meets_standing_hypotheses(&nb);
                    assert!(outside || (na.n % 4 == 0 && na.m % 4 == 2), "{a} {b}");
                }
                answer => {
                    definite += 1;
                    assert_eq!(answer == IsoAnswer::Isomorphic, same, "{a} {b}");
                    if let Some(Witness::Certificate { bridge, .. }) = v.witness {
                        if i < j && bridge != Bridge::Identical {
                            realize_certificate(a, b, bridge).unwrap();
                        }
                    }
                }
            }
        }
    }
    assert!(definite > 10_000 && open > 0, "{definite} {open}");
}

#[test]
fn open_pair_is_separated_by_invariants() {
    let a = Params::new(6, 2, 52, 3).unwrap();
    let b = Params::new(6, 2, 52, 15).unwrap();
    assert_eq!(decide_isomorphic(a, b).unwrap().answer, IsoAnswer::UnknownOpenCase);
    let (ga, gb) = (build_component(a).unwrap(), build_component(b).unwrap());
    assert_eq!(ga.order(), 8112);
    let v = brute_force_iso(&ga, &gb, &SearchConfig::default()).unwrap();
    assert_eq!(v.answer, IsoAnswer::NotIsomorphic);
}
