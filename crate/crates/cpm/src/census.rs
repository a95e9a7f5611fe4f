//! Enumeration of all CPM graphs up to a vertex bound, grouped into
//! isomorphism classes and classified.

use std::collections::BTreeMap;

use cpm_core::graphs::build_component;
use cpm_core::isomorphisms::{
    brute_force_iso, decide_isomorphic, normalized_params_up_to, params_up_to, IsoAnswer, Witness,
};
use cpm_core::permgroup::{automorphism_group, transitivity_report, SearchConfig};
use cpm_core::{classify, Params, SymClass, SymKind};
use rayon::prelude::*;

use crate::error::{CliError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verification {
    TheoryOnly,
    BruteForceConfirmed,
}

impl Verification {
    pub fn as_str(self) -> &'static str {
        match self {
            Verification::TheoryOnly => "theory_only",
            Verification::BruteForceConfirmed => "brute_force_confirmed",
        }
    }
}

#[derive(Clone, Debug)]
pub struct CensusRecord {
    pub params: Params,
    pub order: u64,
    pub radius: u64,
    pub sym_class: SymClass,
    pub verified: Verification,
    pub iso_class_id: usize,
}

/// Outcome of the computational fallback for a pair the theory leaves open.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Empirical {
    Isomorphic,
    NotIsomorphic(&'static str),
    Undecided,
}

#[derive(Clone, Debug)]
pub struct OpenPair {
    pub left: Params,
    pub right: Params,
    pub empirical: Empirical,
}

#[derive(Clone, Debug)]
pub struct CensusOptions {
    pub max_order: u64,
    pub s_min: u64,
    /// Records with at most this many vertices get a brute-force check.
    pub verify_below: u64,
    /// Keep every valid `r` instead of only normal forms.
    pub all_r: bool,
    pub search: SearchConfig,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions {
            max_order: 1000,
            s_min: 2,
            verify_below: 500,
            all_r: false,
            search: SearchConfig::default(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassFilter {
    Hat,
    At,
    TwoAt,
    All,
}

impl ClassFilter {
    pub fn accepts(self, kind: SymKind) -> bool {
        match self {
            ClassFilter::Hat => kind == SymKind::HalfArcTransitive,
            ClassFilter::At => matches!(kind, SymKind::ArcTransitiveNot2AtPx | SymKind::ArcTransitiveNot2AtGeneric),
            ClassFilter::TwoAt => kind == SymKind::TwoArcTransitive,
            ClassFilter::All => true,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RadiusFilter {
    Odd,
    Even,
    All,
}

impl RadiusFilter {
    pub fn accepts(self, radius: u64) -> bool {
        match self {
            RadiusFilter::Odd => radius % 2 == 1,
            RadiusFilter::Even => radius % 2 == 0,
            RadiusFilter::All => true,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Census {
    /// Sorted by `(order, m, s, n, r)`.
    pub records: Vec<CensusRecord>,
    pub open_pairs: Vec<OpenPair>,
}

impl Census {
    /// The first record of every isomorphism class.
    pub fn representatives(&self) -> impl Iterator<Item = &CensusRecord> {
        let mut seen = vec![false; self.class_count()];
        self.records.iter().filter(move |r| !std::mem::replace(&mut seen[r.iso_class_id], true))
    }

    pub fn class_count(&self) -> usize {
        self.records.iter().map(|r| r.iso_class_id + 1).max().unwrap_or(0)
    }

    /// Records passing both filters, one per class unless `members` is set.
    pub fn select(&self, class: ClassFilter, radius: RadiusFilter, members: bool) -> Vec<&CensusRecord> {
        let keep = |r: &&CensusRecord| class.accepts(r.sym_class.kind) && radius.accepts(r.radius);
        if members {
            self.records.iter().filter(keep).collect()
        } else {
            self.representatives().filter(keep).collect()
        }
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.0[root] != root {
            root = self.0[root];
        }
        let mut y = x;
        while self.0[y] != root {
            y = std::mem::replace(&mut self.0[y], root);
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            self.0[hi] = lo;
        }
    }
}

pub fn enumerate_census(max_order: u64, s_min: u64, verify_below: u64) -> Result<Census> {
    enumerate_census_with(&CensusOptions {
        max_order,
        s_min,
        verify_below,
        ..CensusOptions::default()
    })
}

pub fn enumerate_census_with(opts: &CensusOptions) -> Result<Census> {
    let mut tuples = if opts.all_r {
        params_up_to(opts.max_order, opts.s_min)
    } else {
        normalized_params_up_to(opts.max_order, opts.s_min)
    };
    tuples.sort_by_key(|p| (p.component_order(), p.m, p.s, p.n, p.r));

    let classified: Vec<(Params, SymClass, Verification)> = tuples
        .par_iter()
        .map(|&p| {
            let class = classify(p)?;
            let verified = if p.component_order() <= opts.verify_below {
                verify(p, &class)?;
                Verification::BruteForceConfirmed
            } else {
                Verification::TheoryOnly
            };
            Ok((p, class, verified))
        })
        .collect::<Result<_>>()?;

    let mut groups: BTreeMap<(u64, &num_bigint::BigUint), Vec<usize>> = BTreeMap::new();
    for (i, (p, class, _)) in classified.iter().enumerate() {
        groups.entry((p.component_order(), &class.predicted_aut_order)).or_default().push(i);
    }
    let mut uf = UnionFind((0..classified.len()).collect());
    let mut open_pairs = Vec::new();
    for members in groups.values() {
        for (a, &i) in members.iter().enumerate() {
            for &j in &members[a + 1..] {
                if uf.find(i) == uf.find(j) {
                    continue;
                }
                let (pi, pj) = (classified[i].0, classified[j].0);
                match decide_isomorphic(pi, pj)?.answer {
                    IsoAnswer::Isomorphic => uf.union(i, j),
                    IsoAnswer::NotIsomorphic => {}
                    IsoAnswer::UnknownOpenCase => {
                        let empirical = fallback(pi, pj, &opts.search)?;
                        if empirical == Empirical::Isomorphic {
                            uf.union(i, j);
                        }
                        open_pairs.push(OpenPair {
                            left: pi,
                            right: pj,
                            empirical,
                        });
                    }
                }
            }
        }
    }

    let mut ids: BTreeMap<usize, usize> = BTreeMap::new();
    let records = classified
        .into_iter()
        .enumerate()
        .map(|(i, (p, sym_class, verified))| {
            let next = ids.len();
            let iso_class_id = *ids.entry(uf.find(i)).or_insert(next);
            CensusRecord {
                params: p,
                order: p.component_order(),
                radius: p.radius(),
                sym_class,
                verified,
                iso_class_id,
            }
        })
        .collect();
    Ok(Census { records, open_pairs })
}

/// Brute-force `|Aut|` and transitivity flags against the prediction.
fn verify(p: Params, class: &SymClass) -> Result<()> {
    let g = build_component(p)?;
    let aut = automorphism_group(&g)?;
    let mismatch = |detail: String| CliError::Mismatch { params: p, detail };
    if aut.order() != class.predicted_aut_order {
        return Err(mismatch(format!(
            "|Aut| is {} but {} was predicted",
            aut.order(),
            class.predicted_aut_order
        )));
    }
    let rep = transitivity_report(&aut, &g)?;
    let kind_ok = match class.kind {
        SymKind::HalfArcTransitive => rep.half_arc_transitive(),
        SymKind::TwoArcTransitive => rep.two_arc_transitive(),
        _ => rep.arc_transitive() && !rep.two_arc_transitive(),
    };
    if !kind_ok {
        return Err(mismatch(format!("transitivity flags disagree with {}", class.kind.short_name())));
    }
    Ok(())
}

pub fn fallback(a: Params, b: Params, cfg: &SearchConfig) -> Result<Empirical> {
    let (ga, gb) = (build_component(a)?, build_component(b)?);
    match brute_force_iso(&ga, &gb, cfg) {
        Ok(v) => Ok(match (v.answer, v.witness) {
            (IsoAnswer::Isomorphic, _) => Empirical::Isomorphic,
            (_, Some(Witness::Invariant(why))) => Empirical::NotIsomorphic(why),
            _ => Empirical::NotIsomorphic("exhaustive search"),
        }),
        Err(cpm_core::Error::Undecided { .. }) => Ok(Empirical::Undecided),
        Err(e) => Err(e.into()),
    }
}
