use alloc::vec::Vec;

use super::group::PermGroup;
use super::perm::Permutation;
use crate::error::{Error, Result};
use crate::graphs::Adjacency;

/// Which of vertices, edges, arcs and 2-arcs form a single orbit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct TransitivityReport {
    pub vertex_orbits: usize,
    pub edge_orbits: usize,
    pub arc_orbits: usize,
    pub two_arc_orbits: usize,
}

impl TransitivityReport {
    pub fn vertex_transitive(&self) -> bool {
        self.vertex_orbits == 1
    }
    pub fn edge_transitive(&self) -> bool {
        self.edge_orbits == 1
    }
    pub fn arc_transitive(&self) -> bool {
        self.arc_orbits == 1
    }
    pub fn two_arc_transitive(&self) -> bool {
        self.two_arc_orbits == 1
    }
    /// Vertex- and edge-transitive but not arc-transitive.
    pub fn half_arc_transitive(&self) -> bool {
        self.vertex_transitive() && self.edge_transitive() && !self.arc_transitive()
    }
}

struct UnionFind {
    parent: Vec<u32>,
    classes: usize,
}

impl UnionFind {
    fn new(n: usize) -> UnionFind {
        UnionFind {
            parent: (0..n as u32).collect(),
            classes: n,
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] as usize != x {
            let p = self.parent[x] as usize;
            self.parent[x] = self.parent[p];
            x = p;
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.parent[a.max(b)] = a.min(b) as u32;
            self.classes -= 1;
        }
    }
}

/// Orbit counts of `group` on the vertices, edges, arcs and 2-arcs of `g`.
///
/// Every generator must be an automorphism of `g`; otherwise an error names
/// the first one that is not.
pub fn transitivity_report<G: Adjacency + ?Sized>(group: &PermGroup, g: &G) -> Result<TransitivityReport> {
    let n = g.order();
    if group.degree() != n {
        return Err(Error::DegreeMismatch {
            expected: n,
            found: group.degree(),
        });
    }
    let mut arc_offset = Vec::with_capacity(n + 1);
    let mut two_offset = Vec::with_capacity(n + 1);
    let (mut arcs, mut twos) = (0usize, 0usize);
    for v in 0..n {
        arc_offset.push(arcs);
        two_offset.push(twos);
        let d = g.neighbors(v).len();
        arcs += d;
        twos += d * d;
    }
    let arc_id = |u: usize, w: usize| -> Option<usize> {
        g.neighbors(u).iter().position(|&x| x as usize == w).map(|k| arc_offset[u] + k)
    };
    let two_id = |u: usize, v: usize, w: usize| -> Option<usize> {
        let nb = g.neighbors(v);
        let a = nb.iter().position(|&x| x as usize == u)?;
        let b = nb.iter().position(|&x| x as usize == w)?;
        Some(two_offset[v] + a * nb.len() + b)
    };

    let mut verts = UnionFind::new(n);
    let mut arc_uf = UnionFind::new(arcs);
    let mut two_uf = UnionFind::new(twos);
    for (gi, p) in group.generators().iter().enumerate() {
        let bad = || Error::NotAnAutomorphism(alloc::format!("generator {gi} does not preserve adjacency"));
        for v in 0..n {
            verts.union(v, p.apply(v));
            let nb = g.neighbors(v);
            let pv = p.apply(v);
            for &w in nb {
                let a = arc_id(v, w as usize).expect("arc");
                let b = arc_id(pv, p.apply(w as usize)).ok_or_else(bad)?;
                arc_uf.union(a, b);
            }
            for &u in nb {
                for &w in nb {
                    if u != w {
                        let a = two_id(u as usize, v, w as usize).expect("2-arc");
                        let b = two_id(p.apply(u as usize), pv, p.apply(w as usize)).ok_or_else(bad)?;
                        two_uf.union(a, b);
                    }
                }
            }
        }
    }

    // degenerate (u,v,u) slots are never touched; each is its own class
    let degenerate: usize = (0..n).map(|v| g.neighbors(v).len()).sum();
    let arc_orbits = arc_uf.classes;
    let mut edge_uf = arc_uf;
    for v in 0..n {
        for &w in g.neighbors(v) {
            let a = arc_id(v, w as usize).expect("arc");
            let b = arc_id(w as usize, v).expect("symmetric adjacency");
            edge_uf.union(a, b);
        }
    }
    Ok(TransitivityReport {
        vertex_orbits: verts.classes,
        edge_orbits: edge_uf.classes,
        arc_orbits,
        two_arc_orbits: two_uf.classes - degenerate,
    })
}

/// Whether `parts` is a partition of the points preserved by every generator.
pub fn is_block_partition(group: &PermGroup, parts: &[Vec<u32>]) -> Result<bool> {
    let n = group.degree();
    let mut part_of = alloc::vec![usize::MAX; n];
    for (k, part) in parts.iter().enumerate() {
        if part.is_empty() {
            return Err(Error::MalformedPartition(alloc::format!("part {k} is empty")));
        }
        for &x in part {
            let slot = part_of
                .get_mut(x as usize)
                .ok_or_else(|| Error::MalformedPartition(alloc::format!("point {x} out of range")))?;
            if *slot != usize::MAX {
                return Err(Error::MalformedPartition(alloc::format!("point {x} appears twice")));
            }
            *slot = k;
        }
    }
    if let Some(x) = part_of.iter().position(|&k| k == usize::MAX) {
        return Err(Error::MalformedPartition(alloc::format!("point {x} is not covered")));
    }
    for g in group.generators() {
        for part in parts {
            let target = part_of[g.apply(part[0] as usize)];
            if parts[target].len() != part.len() || part.iter().any(|&x| part_of[g.apply(x as usize)] != target) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The permutation group induced by a vertex stabilizer on the neighbourhood.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalAction {
    pub degree: usize,
    pub order: usize,
    /// Largest `t` with the action `t`-transitive; 0 when intransitive.
    pub transitivity: usize,
}

pub fn local_action_at<G: Adjacency + ?Sized>(group: &PermGroup, g: &G, x: usize) -> Result<LocalAction> {
    let nb = g.neighbors(x);
    let k = nb.len();
    let local_index = |y: usize| nb.iter().position(|&z| z as usize == y);
    let mut gens = Vec::new();
    for h in group.stabilizer_generators(x) {
        let images = nb
            .iter()
            .map(|&y| local_index(h.apply(y as usize)).map(|i| i as u32))
            .collect::<Option<Vec<u32>>>()
            .ok_or_else(|| Error::NotAnAutomorphism(alloc::format!("stabilizer of {x} moves its neighbourhood off itself")))?;
        gens.push(Permutation::from_images(images)?);
    }
    // closure on at most k! elements
    let mut elements = alloc::vec![Permutation::identity(k)];
    let mut idx = 0;
    while idx < elements.len() {
        for s in &gens {
            let e = elements[idx].then(s);
            if !elements.contains(&e) {
                elements.push(e);
            }
        }
        idx += 1;
    }
    let mut transitivity = 0;
    for t in 1..=k {
        if is_t_transitive(&elements, k, t) {
            transitivity = t;
        } else {
            break;
        }
    }
    Ok(LocalAction {
        degree: k,
        order: elements.len(),
        transitivity,
    })
}

fn is_t_transitive(elements: &[Permutation], k: usize, t: usize) -> bool {
    // orbit of the tuple (0, 1, ..., t-1) must be every injective t-tuple
    let mut images: Vec<Vec<u32>> = elements
        .iter()
        .map(|e| (0..t).map(|i| e.apply(i) as u32).collect())
        .collect();
    images.sort_unstable();
    images.dedup();
    let injective: usize = (0..t).map(|i| k - i).product();
    images.len() == injective
}
