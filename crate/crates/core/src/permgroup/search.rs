//! Individualization-refinement search for automorphism groups and
//! isomorphisms of simple graphs.
//!
//! The search follows the first path of the search tree down to a discrete
//! partition, then works bottom-up: at each level it tries every vertex of
//! the target cell that is not yet known to be equivalent to the first
//! choice, and any leaf whose trace matches the first leaf and whose map is
//! an automorphism becomes a new generator. The generators found this way
//! form a strong generating set relative to the first path.

use alloc::collections::VecDeque;
use alloc::vec::Vec;

use super::group::PermGroup;
use super::perm::Permutation;
use crate::error::{Error, Result};
use crate::graphs::Adjacency;

/// Largest graph the exhaustive searches accept by default.
pub const DEFAULT_GUARD: usize = 1500;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub max_vertices: usize,
    /// Upper bound on refined search-tree nodes.
    pub max_nodes: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            max_vertices: DEFAULT_GUARD,
            max_nodes: 50_000_000,
        }
    }
}

#[derive(Clone, Debug)]
struct Partition {
    lab: Vec<u32>,
    pos: Vec<u32>,
    /// Start position of the cell containing each position.
    start: Vec<u32>,
    /// Cell length, valid at cell start positions.
    len: Vec<u32>,
    cells: usize,
}

impl Partition {
    fn unit(n: usize) -> Partition {
        let mut len = alloc::vec![0u32; n];
        if n > 0 {
            len[0] = n as u32;
        }
        Partition {
            lab: (0..n as u32).collect(),
            pos: (0..n as u32).collect(),
            start: alloc::vec![0; n],
            len,
            cells: usize::from(n > 0),
        }
    }

    fn is_discrete(&self) -> bool {
        self.cells == self.lab.len()
    }

    /// First smallest non-singleton cell.
    fn target_cell(&self) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        let mut k = 0;
        while k < self.lab.len() {
            let l = self.len[k] as usize;
            if l > 1 && best.map_or(true, |(_, bl)| l < bl) {
                best = Some((k, l));
            }
            k += l;
        }
        best
    }

    fn cell_members(&self, start: usize) -> Vec<u32> {
        let mut m = self.lab[start..start + self.len[start] as usize].to_vec();
        m.sort_unstable();
        m
    }
}

#[inline]
fn mix(h: u64, x: u64) -> u64 {
    (h ^ x).wrapping_mul(0x0000_0100_0000_01b3).rotate_left(17)
}

struct Refiner {
    count: Vec<u32>,
    touched: Vec<u32>,
    cells: Vec<u32>,
    queue: VecDeque<u32>,
    queued: Vec<bool>,
}

impl Refiner {
    fn new(n: usize) -> Refiner {
        Refiner {
            count: alloc::vec![0; n],
            touched: Vec::new(),
            cells: Vec::new(),
            queue: VecDeque::new(),
            queued: alloc::vec![false; n],
        }
    }

    fn push(&mut self, cell: u32) {
        if !self.queued[cell as usize] {
            self.queued[cell as usize] = true;
            self.queue.push_back(cell);
        }
    }

    /// Refines `p` to the coarsest equitable partition below it, starting
    /// from the queued splitter cells. Returns a trace of all splits.
    fn refine<G: Adjacency + ?Sized>(&mut self, g: &G, p: &mut Partition, mut trace: u64) -> u64 {
        while let Some(sp) = self.queue.pop_front() {
            let sp = sp as usize;
            self.queued[sp] = false;
            let sp_len = p.len[sp] as usize;
            for k in sp..sp + sp_len {
                for &w in g.neighbors(p.lab[k] as usize) {
                    if self.count[w as usize] == 0 {
                        self.touched.push(w);
                    }
                    self.count[w as usize] += 1;
                }
            }
            self.cells.clear();
            self.cells
                .extend(self.touched.iter().map(|&w| p.start[p.pos[w as usize] as usize]));
            self.cells.sort_unstable();
            self.cells.dedup();
            trace = mix(trace, sp as u64);
            for ci in 0..self.cells.len() {
                let c = self.cells[ci] as usize;
                let clen = p.len[c] as usize;
                if clen == 1 {
                    trace = mix(trace, ((c as u64) << 32) | u64::from(self.count[p.lab[c] as usize]));
                    continue;
                }
                let count = &self.count;
                p.lab[c..c + clen].sort_unstable_by_key(|&v| (count[v as usize], v));
                let first = count[p.lab[c] as usize];
                if first == count[p.lab[c + clen - 1] as usize] {
                    trace = mix(trace, ((c as u64) << 32) | u64::from(first));
                    continue;
                }
                let was_queued = self.queued[c];
                let mut fragments: Vec<(usize, usize)> = Vec::new();
                let mut fs = c;
                for k in c..=c + clen {
                    if k == c + clen || count[p.lab[k] as usize] != count[p.lab[fs] as usize] {
                        fragments.push((fs, k - fs));
                        fs = k;
                    }
                }
                for &(fs, fl) in &fragments {
                    for k in fs..fs + fl {
                        p.start[k] = fs as u32;
                        p.pos[p.lab[k] as usize] = k as u32;
                    }
                    p.len[fs] = fl as u32;
                    trace = mix(trace, ((fs as u64) << 32) | ((fl as u64) << 12) | u64::from(count[p.lab[fs] as usize]));
                }
                p.cells += fragments.len() - 1;
                if was_queued {
                    for &(fs, _) in &fragments[1..] {
                        self.push(fs as u32);
                    }
                } else {
                    let largest = fragments
                        .iter()
                        .enumerate()
                        .max_by_key(|&(i, &(_, fl))| (fl, core::cmp::Reverse(i)))
                        .map(|(i, _)| i)
                        .expect("fragments");
                    for (i, &(fs, _)) in fragments.iter().enumerate() {
                        if i != largest {
                            self.push(fs as u32);
                        }
                    }
                }
            }
            for &w in &self.touched {
                self.count[w as usize] = 0;
            }
            self.touched.clear();
        }
        mix(trace, p.cells as u64)
    }

    /// Splits `v` off the front of its cell and refines.
    fn individualize<G: Adjacency + ?Sized>(&mut self, g: &G, p: &mut Partition, v: u32) -> u64 {
        let k = p.pos[v as usize] as usize;
        let c = p.start[k] as usize;
        let clen = p.len[c] as usize;
        let u = p.lab[c];
        p.lab.swap(c, k);
        p.pos[v as usize] = c as u32;
        p.pos[u as usize] = k as u32;
        p.len[c] = 1;
        for q in c + 1..c + clen {
            p.start[q] = (c + 1) as u32;
        }
        p.len[c + 1] = (clen - 1) as u32;
        p.cells += 1;
        self.push(c as u32);
        self.refine(g, p, mix(0x9e37_79b9_7f4a_7c15, c as u64))
    }
}

struct Node {
    part: Partition,
    trace: u64,
}

/// The first path of the search tree on the reference graph.
struct FirstPath {
    nodes: Vec<Node>,
    /// For each non-leaf node: target cell start and the vertex chosen.
    choices: Vec<(usize, u32)>,
}

struct Searcher<'a, G1: ?Sized, G2: ?Sized> {
    reference: &'a G1,
    other: &'a G2,
    refiner: Refiner,
    path: &'a FirstPath,
    nodes: u64,
    budget: u64,
}

impl<G1: Adjacency + ?Sized, G2: Adjacency + ?Sized> Searcher<'_, G1, G2> {
    /// Leaf map from the reference leaf onto `leaf`, if it is an isomorphism.
    fn leaf_map(&self, leaf: &Partition) -> Option<Permutation> {
        let first = &self.path.nodes.last().expect("leaf").part;
        let mut images = alloc::vec![0u32; leaf.lab.len()];
        for (k, &v) in first.lab.iter().enumerate() {
            images[v as usize] = leaf.lab[k];
        }
        let ok = (0..images.len()).all(|u| {
            let fu = images[u] as usize;
            let nu = self.reference.neighbors(u);
            nu.len() == self.other.neighbors(fu).len()
                && nu.iter().all(|&w| self.other.is_adjacent(fu, images[w as usize] as usize))
        });
        ok.then(|| Permutation::from_images_unchecked(images))
    }

    /// Individualizes `w` in `part` (a node at `depth` of the other graph)
    /// and searches below it for a leaf equivalent to the first leaf.
    fn branch(&mut self, part: &Partition, depth: usize, w: u32) -> Result<Option<Permutation>> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::SearchBudget(self.budget));
        }
        let mut child = part.clone();
        let trace = self.refiner.individualize(self.other, &mut child, w);
        let expected = &self.path.nodes[depth + 1];
        if trace != expected.trace || child.cells != expected.part.cells {
            return Ok(None);
        }
        if child.is_discrete() {
            return Ok(self.leaf_map(&child));
        }
        let (cell, _) = self.path.choices[depth + 1];
        if child.start[cell] as usize != cell || child.len[cell] != expected.part.len[cell] {
            return Ok(None);
        }
        for x in child.cell_members(cell) {
            if let Some(found) = self.branch(&child, depth + 1, x)? {
                return Ok(Some(found));
            }
        }
        Ok(None)
    }
}

fn root<G: Adjacency + ?Sized>(g: &G, refiner: &mut Refiner) -> Node {
    let mut part = Partition::unit(g.order());
    let mut trace = 0;
    if g.order() > 0 {
        refiner.push(0);
        trace = refiner.refine(g, &mut part, 0);
    }
    Node { part, trace }
}

fn first_path<G: Adjacency + ?Sized>(g: &G, refiner: &mut Refiner) -> FirstPath {
    let mut nodes = alloc::vec![root(g, refiner)];
    let mut choices = Vec::new();
    while let Some((cell, _)) = nodes.last().expect("root").part.target_cell() {
        let mut part = nodes.last().expect("root").part.clone();
        let v = part.cell_members(cell)[0];
        let trace = refiner.individualize(g, &mut part, v);
        choices.push((cell, v));
        nodes.push(Node { part, trace });
    }
    FirstPath { nodes, choices }
}

fn check_size(n: usize, cfg: &SearchConfig) -> Result<()> {
    if n > cfg.max_vertices {
        return Err(Error::TooLarge {
            vertices: n,
            guard: cfg.max_vertices,
        });
    }
    Ok(())
}

/// The full automorphism group with default limits.
pub fn automorphism_group<G: Adjacency + ?Sized>(g: &G) -> Result<PermGroup> {
    automorphism_group_with(g, &SearchConfig::default())
}

pub fn automorphism_group_with<G: Adjacency + ?Sized>(g: &G, cfg: &SearchConfig) -> Result<PermGroup> {
    let n = g.order();
    check_size(n, cfg)?;
    let mut refiner = Refiner::new(n);
    let path = first_path(g, &mut refiner);
    let base: Vec<u32> = path.choices.iter().map(|&(_, v)| v).collect();
    let mut search = Searcher {
        reference: g,
        other: g,
        refiner,
        path: &path,
        nodes: 0,
        budget: cfg.max_nodes,
    };
    let mut gens: Vec<Permutation> = Vec::new();
    let mut gen_levels: Vec<usize> = Vec::new();
    let mut in_orbit = alloc::vec![false; n];
    for depth in (0..path.choices.len()).rev() {
        let (cell, v) = path.choices[depth];
        let node = &path.nodes[depth].part;
        // generators found so far fix base[..depth]
        orbit_marks(v, &gens, &mut in_orbit);
        for w in node.cell_members(cell) {
            if in_orbit[w as usize] {
                continue;
            }
            if let Some(perm) = search.branch(node, depth, w)? {
                debug_assert_eq!(perm.apply(v as usize), w as usize);
                gens.push(perm);
                gen_levels.push(depth);
                orbit_marks(v, &gens, &mut in_orbit);
            }
        }
    }
    Ok(PermGroup::from_chain(n, gens, &base, &gen_levels))
}

fn orbit_marks(v: u32, gens: &[Permutation], marks: &mut [bool]) {
    marks.iter_mut().for_each(|m| *m = false);
    let mut stack = alloc::vec![v];
    marks[v as usize] = true;
    while let Some(x) = stack.pop() {
        for g in gens {
            let y = g.apply(x as usize);
            if !marks[y] {
                marks[y] = true;
                stack.push(y as u32);
            }
        }
    }
}

/// Searches for an isomorphism `a → b`, returned as the image array over
/// the vertices of `a`.
pub fn find_isomorphism<A, B>(a: &A, b: &B, cfg: &SearchConfig) -> Result<Option<Permutation>>
where
    A: Adjacency + ?Sized,
    B: Adjacency + ?Sized,
{
    let n = a.order();
    check_size(n.max(b.order()), cfg)?;
    if n != b.order() || a.edge_count() != b.edge_count() {
        return Ok(None);
    }
    let mut degrees_a: Vec<usize> = (0..n).map(|v| a.neighbors(v).len()).collect();
    let mut degrees_b: Vec<usize> = (0..n).map(|v| b.neighbors(v).len()).collect();
    degrees_a.sort_unstable();
    degrees_b.sort_unstable();
    if degrees_a != degrees_b {
        return Ok(None);
    }
    let mut refiner = Refiner::new(n);
    let path = first_path(a, &mut refiner);
    let root_b = root(b, &mut refiner);
    if root_b.trace != path.nodes[0].trace || root_b.part.cells != path.nodes[0].part.cells {
        return Ok(None);
    }
    let mut search = Searcher {
        reference: a,
        other: b,
        refiner,
        path: &path,
        nodes: 0,
        budget: cfg.max_nodes,
    };
    let Some(&(cell, _)) = path.choices.first() else {
        return Ok(search.leaf_map(&root_b.part));
    };
    if root_b.part.start[cell] as usize != cell || root_b.part.len[cell] != path.nodes[0].part.len[cell] {
        return Ok(None);
    }
    // One candidate per automorphism orbit of b suffices for the first choice.
    let aut_b = automorphism_group_with(b, cfg)?;
    let mut tried = alloc::vec![false; n];
    for w in root_b.part.cell_members(cell) {
        if tried[w as usize] {
            continue;
        }
        for x in aut_b.orbit(w as usize) {
            tried[x as usize] = true;
        }
        if let Some(found) = search.branch(&root_b.part, 0, w)? {
            return Ok(Some(found));
        }
    }
    Ok(None)
}
