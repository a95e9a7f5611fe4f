//! Construction of `CPM̄(m,s,n;r)`, its component `CPM(m,s,n;r)` through
//! `⟨0;0⟩`, and the Praeger-Xu graphs `PX(t,s)`.
//!
//! Vertices are indexed in breadth-first order from `⟨0;0⟩`. When a vertex is
//! expanded its undiscovered neighbours are numbered in lexicographic `(i, v)`
//! order. Each vertex stores its four neighbours in fixed slots: slots 0 and 1
//! lead to the next level (`+` then `−`), slots 2 and 3 to the previous level.

use alloc::collections::BTreeMap;
use alloc::collections::VecDeque;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::modring::{add_mod, is_valid_r, pow_mod, sub_mod, Residue};

/// The defining tuple `(m, s, n, r)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Params {
    pub m: u64,
    pub s: u64,
    pub n: u64,
    pub r: u64,
}

impl Params {
    /// Validates the tuple; `r` is reduced modulo `n` first.
    pub fn new(m: u64, s: u64, n: u64, r: u64) -> Result<Params> {
        if m == 0 || s == 0 {
            return Err(Error::InvalidParams(format!("m and s must be positive, got m={m}, s={s}")));
        }
        if n < 3 {
            return Err(Error::InvalidParams(format!("n must be at least 3, got {n}")));
        }
        let r = r % n;
        if !is_valid_r(m, s, n, r) {
            return Err(Error::InvalidParams(format!(
                "r={r} must be a unit modulo {n} with r^{} = ±1",
                m.saturating_mul(s)
            )));
        }
        Ok(Params { m, s, n, r })
    }

    pub fn ms(&self) -> u64 {
        self.m * self.s
    }

    pub fn r_residue(&self) -> Residue {
        Residue::new(self.r, self.n)
    }

    pub fn r_pow(&self, k: u64) -> u64 {
        pow_mod(self.r, k, self.n)
    }

    /// Number of vertices of the component through `⟨0;0⟩`, or `None` on overflow.
    pub fn checked_component_order(&self) -> Option<u64> {
        let ms = self.m.checked_mul(self.s)?;
        let s = u32::try_from(self.s).ok()?;
        if self.n % 2 == 1 {
            ms.checked_mul(self.n.checked_pow(s)?)
        } else {
            let base = ms.checked_mul((self.n / 2).checked_pow(s)?)?;
            if self.m % 2 == 0 {
                Some(base)
            } else {
                base.checked_mul(2)
            }
        }
    }

    /// `msn^s` for odd `n`; `ms(n/2)^s` for even `n` and even `m`; twice that for odd `m`.
    pub fn component_order(&self) -> u64 {
        self.checked_component_order().expect("component order overflows u64")
    }

    /// Number of vertices of the whole graph, `ms·n^s`.
    pub fn checked_full_order(&self) -> Option<u64> {
        let s = u32::try_from(self.s).ok()?;
        self.m.checked_mul(self.s)?.checked_mul(self.n.checked_pow(s)?)
    }

    pub fn radius(&self) -> u64 {
        if self.n % 2 == 1 {
            self.n
        } else {
            self.n / 2
        }
    }

    pub fn attachment(&self) -> Attachment {
        if self.s == 1 {
            Attachment::Tight
        } else {
            Attachment::Loose
        }
    }

    pub fn with_r(&self, r: u64) -> Result<Params> {
        Params::new(self.m, self.s, self.n, r)
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.m, self.s, self.n, self.r)
    }
}

impl FromStr for Params {
    type Err = Error;

    /// Parses `m,s,n,r` (parentheses and spaces are ignored).
    fn from_str(text: &str) -> Result<Params> {
        let cleaned: String = text
            .chars()
            .filter(|c| !c.is_whitespace() && *c != '(' && *c != ')')
            .collect();
        let parts: Vec<&str> = cleaned.split([',', ';']).collect();
        if parts.len() != 4 {
            return Err(Error::InvalidParams(format!("expected m,s,n,r, got {text:?}")));
        }
        let mut vals = [0u64; 4];
        for (slot, part) in vals.iter_mut().zip(&parts) {
            *slot = part
                .parse()
                .map_err(|_| Error::InvalidParams(format!("not a number: {part:?}")))?;
        }
        Params::new(vals[0], vals[1], vals[2], vals[3])
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Attachment {
    Tight,
    Loose,
}

/// A vertex `⟨i; v⟩`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex {
    pub i: u64,
    pub v: Vec<u64>,
}

impl Vertex {
    pub fn new(i: u64, v: Vec<u64>) -> Vertex {
        Vertex { i, v }
    }

    /// Builds `⟨i; v⟩` from signed entries, reducing `i` modulo `levels` and `v` modulo `n`.
    pub fn reduced(i: i64, v: &[i64], levels: u64, n: u64) -> Vertex {
        let red = |x: i64, k: u64| i128::from(x).rem_euclid(i128::from(k)) as u64;
        Vertex {
            i: red(i, levels),
            v: v.iter().map(|&x| red(x, n)).collect(),
        }
    }

    pub fn origin(s: usize) -> Vertex {
        Vertex { i: 0, v: vec![0; s] }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{};(", self.i)?;
        for (k, x) in self.v.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")>")
    }
}

/// Which construction a graph came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Cpm(Params),
    PraegerXu { t: u64, s: u64 },
}

impl Family {
    /// Number of levels and the modulus of the vector components.
    fn shape(&self) -> (u64, u64, usize) {
        match *self {
            Family::Cpm(p) => (p.ms(), p.n, p.s as usize),
            Family::PraegerXu { t, s } => (t, 2, s as usize),
        }
    }
}

/// An edge seen from its lower endpoint, with its label `ℓ = i mod s` and sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Edge {
    pub lower: u32,
    pub upper: u32,
    pub label: u64,
    pub positive: bool,
}

/// Anything with indexed vertices and neighbour lists.
pub trait Adjacency {
    fn order(&self) -> usize;
    fn neighbors(&self, v: usize) -> &[u32];

    fn is_adjacent(&self, a: usize, b: usize) -> bool {
        self.neighbors(a).iter().any(|&w| w as usize == b)
    }

    fn edge_count(&self) -> usize {
        (0..self.order()).map(|v| self.neighbors(v).len()).sum::<usize>() / 2
    }
}

/// A plain undirected graph, used for fixtures such as hypercubes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    adj: Vec<Vec<u32>>,
}

impl SimpleGraph {
    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> SimpleGraph {
        let mut adj = vec![Vec::new(); order];
        for &(a, b) in edges {
            adj[a].push(b as u32);
            adj[b].push(a as u32);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        SimpleGraph { adj }
    }

    pub fn from_adjacency(adj: Vec<Vec<u32>>) -> SimpleGraph {
        SimpleGraph { adj }
    }

    /// The `d`-dimensional hypercube on bit strings.
    pub fn hypercube(d: u32) -> SimpleGraph {
        let order = 1usize << d;
        let adj = (0..order)
            .map(|x| (0..d).map(|b| (x ^ (1 << b)) as u32).collect())
            .collect();
        SimpleGraph { adj }
    }
}

impl Adjacency for SimpleGraph {
    fn order(&self) -> usize {
        self.adj.len()
    }
    fn neighbors(&self, v: usize) -> &[u32] {
        &self.adj[v]
    }
}

/// A CPM or Praeger-Xu graph with indexed vertices, slot-ordered adjacency and levels.
#[derive(Clone, Debug)]
pub struct CpmGraph {
    family: Family,
    whole: bool,
    vertices: Vec<Vertex>,
    index: Vec<(u128, u32)>,
    adjacency: Vec<[u32; 4]>,
    levels: Vec<Vec<u32>>,
    modulus: u64,
    level_count: u64,
}

impl Adjacency for CpmGraph {
    fn order(&self) -> usize {
        self.vertices.len()
    }
    fn neighbors(&self, v: usize) -> &[u32] {
        &self.adjacency[v]
    }
}

/// The component of `CPM̄(p)` containing `⟨0;0⟩`.
pub fn build_component(p: Params) -> Result<CpmGraph> {
    construct(Family::Cpm(p), false)
}

/// The whole, possibly disconnected, graph `CPM̄(p)`.
pub fn build_full(p: Params) -> Result<CpmGraph> {
    construct(Family::Cpm(p), true)
}

/// The Praeger-Xu graph `PX(t,s)` on `t·2^s` vertices.
pub fn build_px(t: u64, s: u64) -> Result<CpmGraph> {
    if t < 3 || s == 0 {
        return Err(Error::InvalidParams(format!("PX(t,s) needs t >= 3 and s >= 1, got ({t},{s})")));
    }
    let g = construct(Family::PraegerXu { t, s }, false)?;
    let expected = t << s;
    if g.order() as u64 != expected {
        return Err(Error::Degenerate(format!("PX({t},{s}) is not connected")));
    }
    Ok(g)
}

/// The four rule neighbours of `x` in slot order.
pub fn neighbors_rule(family: &Family, x: &Vertex) -> [Vertex; 4] {
    match *family {
        Family::Cpm(p) => {
            let ms = p.ms();
            let n = p.n;
            let s = p.s;
            let i = x.i;
            let l = (i % s) as usize;
            let up = (i + 1) % ms;
            let c = p.r_pow(i);
            let down = (i + ms - 1) % ms;
            let ld = (down % s) as usize;
            let cd = p.r_pow(down);
            let shifted = |lev: u64, at: usize, plus: bool, c: u64| {
                let mut v = x.v.clone();
                v[at] = if plus { add_mod(v[at], c, n) } else { sub_mod(v[at], c, n) };
                Vertex { i: lev, v }
            };
            [
                shifted(up, l, true, c),
                shifted(up, l, false, c),
                shifted(down, ld, true, cd),
                shifted(down, ld, false, cd),
            ]
        }
        Family::PraegerXu { t, .. } => {
            let up = (x.i + 1) % t;
            let down = (x.i + t - 1) % t;
            let forward = |b: u64| {
                let mut v: Vec<u64> = x.v[1..].to_vec();
                v.push(b);
                Vertex { i: up, v }
            };
            let backward = |b: u64| {
                let mut v = Vec::with_capacity(x.v.len());
                v.push(b);
                v.extend_from_slice(&x.v[..x.v.len() - 1]);
                Vertex { i: down, v }
            };
            [forward(0), forward(1), backward(0), backward(1)]
        }
    }
}

fn encode(x: &Vertex, modulus: u64) -> u128 {
    let m = u128::from(modulus);
    let mut code = 0u128;
    for &c in x.v.iter().rev() {
        code = code * m + u128::from(c);
    }
    code + u128::from(x.i) * m.pow(x.v.len() as u32)
}

fn construct(family: Family, whole: bool) -> Result<CpmGraph> {
    let (level_count, modulus, s) = family.shape();
    let origin = Vertex::origin(s);
    let mut seen: BTreeMap<u128, u32> = BTreeMap::new();
    let mut vertices: Vec<Vertex> = Vec::new();

    let explore = |start: Vertex, seen: &mut BTreeMap<u128, u32>, vertices: &mut Vec<Vertex>| {
        let mut queue = VecDeque::new();
        seen.insert(encode(&start, modulus), vertices.len() as u32);
        queue.push_back(vertices.len());
        vertices.push(start);
        while let Some(x) = queue.pop_front() {
            let mut fresh: Vec<Vertex> = neighbors_rule(&family, &vertices[x])
                .into_iter()
                .filter(|y| !seen.contains_key(&encode(y, modulus)))
                .collect();
            fresh.sort();
            fresh.dedup();
            for y in fresh {
                seen.insert(encode(&y, modulus), vertices.len() as u32);
                queue.push_back(vertices.len());
                vertices.push(y);
            }
        }
    };

    explore(origin, &mut seen, &mut vertices);
    if whole {
        let total = u128::from(level_count) * u128::from(modulus).pow(s as u32);
        if total > u128::from(u32::MAX) {
            return Err(Error::InvalidParams(format!("whole graph too large: {total} vertices")));
        }
        // Lexicographic sweep over all ⟨i; v⟩ (v_0 most significant).
        let per_level = u128::from(modulus).pow(s as u32);
        for i in 0..level_count {
            for c in 0..per_level {
                let mut v = vec![0u64; s];
                let mut rest = c;
                for k in (0..s).rev() {
                    v[k] = (rest % u128::from(modulus)) as u64;
                    rest /= u128::from(modulus);
                }
                let x = Vertex { i, v };
                if !seen.contains_key(&encode(&x, modulus)) {
                    explore(x, &mut seen, &mut vertices);
                }
            }
        }
    }

    let mut adjacency = Vec::with_capacity(vertices.len());
    for (x, vx) in vertices.iter().enumerate() {
        let nb = neighbors_rule(&family, vx);
        let mut slots = [0u32; 4];
        for (slot, y) in nb.iter().enumerate() {
            slots[slot] = seen[&encode(y, modulus)];
        }
        let mut sorted = slots;
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) || slots.contains(&(x as u32)) {
            return Err(Error::Degenerate(format!("vertex {vx} has a loop or a repeated neighbour")));
        }
        adjacency.push(slots);
    }

    let mut levels = vec![Vec::new(); level_count as usize];
    for (x, vx) in vertices.iter().enumerate() {
        levels[vx.i as usize].push(x as u32);
    }
    let index: Vec<(u128, u32)> = seen.into_iter().collect();

    Ok(CpmGraph {
        family,
        whole,
        vertices,
        index,
        adjacency,
        levels,
        modulus,
        level_count,
    })
}

impl CpmGraph {
    pub fn family(&self) -> Family {
        self.family
    }

    /// Parameters of a CPM graph; `None` for Praeger-Xu graphs.
    pub fn params(&self) -> Option<Params> {
        match self.family {
            Family::Cpm(p) => Some(p),
            Family::PraegerXu { .. } => None,
        }
    }

    pub fn cpm_params(&self) -> Result<Params> {
        self.params()
            .ok_or_else(|| Error::Precondition("operation needs a CPM graph".into()))
    }

    /// True for the whole graph `CPM̄`, false for the component through `⟨0;0⟩`.
    pub fn is_whole(&self) -> bool {
        self.whole
    }

    pub fn s(&self) -> usize {
        self.vertices[0].v.len()
    }

    /// Modulus of the vector components (`n`, or 2 for Praeger-Xu graphs).
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn level_count(&self) -> u64 {
        self.level_count
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn vertex(&self, x: usize) -> &Vertex {
        &self.vertices[x]
    }

    pub fn level_of(&self, x: usize) -> u64 {
        self.vertices[x].i
    }

    pub fn levels(&self) -> &[Vec<u32>] {
        &self.levels
    }

    pub fn adjacency(&self) -> &[[u32; 4]] {
        &self.adjacency
    }

    /// Neighbours on the next level (slots 0, 1).
    pub fn forward(&self, x: usize) -> [u32; 2] {
        [self.adjacency[x][0], self.adjacency[x][1]]
    }

    /// Neighbours on the previous level (slots 2, 3).
    pub fn backward(&self, x: usize) -> [u32; 2] {
        [self.adjacency[x][2], self.adjacency[x][3]]
    }

    pub fn index_of(&self, x: &Vertex) -> Option<usize> {
        if x.i >= self.level_count || x.v.len() != self.s() || x.v.iter().any(|&c| c >= self.modulus) {
            return None;
        }
        let code = encode(x, self.modulus);
        self.index
            .binary_search_by_key(&code, |&(c, _)| c)
            .ok()
            .map(|k| self.index[k].1 as usize)
    }

    pub fn require_index(&self, x: &Vertex) -> Result<usize> {
        self.index_of(x).ok_or_else(|| Error::UnknownVertex(format!("{x}")))
    }

    /// Slot of `y` among the neighbours of `x`.
    pub fn slot_of(&self, x: usize, y: usize) -> Option<usize> {
        self.adjacency[x].iter().position(|&w| w as usize == y)
    }

    /// The edge in slot `slot` of `x`, oriented from its lower to its upper level.
    pub fn edge(&self, x: usize, slot: usize) -> Edge {
        let y = self.adjacency[x][slot];
        let s = self.s() as u64;
        if slot < 2 {
            Edge {
                lower: x as u32,
                upper: y,
                label: self.level_of(x) % s,
                positive: slot == 0,
            }
        } else {
            Edge {
                lower: y,
                upper: x as u32,
                label: self.level_of(y as usize) % s,
                positive: slot == 3,
            }
        }
    }

    /// Edges as `(a, b)` with `a < b`, in index order.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::with_capacity(self.order() * 2);
        for (x, nb) in self.adjacency.iter().enumerate() {
            for &y in nb {
                if (x as u32) < y {
                    out.push((x as u32, y));
                }
            }
        }
        out
    }

    /// Length of the cycle through `⟨0;0⟩` whose consecutive edges alternate
    /// between leaving a vertex upwards and arriving from below.
    pub fn alternating_cycle_length(&self) -> usize {
        let start = 0usize;
        let first = self.adjacency[start][0] as usize;
        let (mut prev, mut cur) = (start, first);
        let mut up_next = false;
        let mut len = 1usize;
        loop {
            let options = if up_next { self.forward(cur) } else { self.backward(cur) };
            let next = if options[0] as usize == prev { options[1] } else { options[0] } as usize;
            if cur == start && next == first {
                return len;
            }
            prev = cur;
            cur = next;
            len += 1;
            up_next = !up_next;
            if len > 2 * self.order() + 2 {
                return 0;
            }
        }
    }
}

/// Parity test for membership in the component through `⟨0;0⟩` when `n` is even.
///
/// Every step from level `i` to `i+1` changes coordinate `i mod s` by an odd
/// amount, so reaching level `i` from level 0 fixes the parity pattern of `v`,
/// up to complementation when `m` is odd.
pub fn parity_membership(p: Params, x: &Vertex) -> Result<bool> {
    if p.n % 2 == 1 {
        return Err(Error::GraphIsConnected);
    }
    let s = p.s as usize;
    if x.v.len() != s || x.i >= p.ms() || x.v.iter().any(|&c| c >= p.n) {
        return Err(Error::UnknownVertex(format!("{x}")));
    }
    let pattern = level_parity_pattern(p, x.i);
    let parity: Vec<bool> = x.v.iter().map(|&c| c % 2 == 1).collect();
    if parity == pattern {
        return Ok(true);
    }
    if p.m % 2 == 1 {
        return Ok(parity.iter().zip(&pattern).all(|(a, b)| a != b));
    }
    Ok(false)
}

/// Parity of each coordinate after walking from level 0 up to level `i`.
pub fn level_parity_pattern(p: Params, i: u64) -> Vec<bool> {
    (0..p.s)
        .map(|j| {
            let count = if j < i { (i - j + p.s - 1) / p.s } else { 0 };
            count % 2 == 1
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(m: u64, s: u64, n: u64, r: u64) -> Params {
        Params::new(m, s, n, r).unwrap()
    }

    fn set(g: &CpmGraph, x: usize) -> Vec<Vertex> {
        let mut out: Vec<Vertex> = g.neighbors(x).iter().map(|&y| g.vertex(y as usize).clone()).collect();
        out.sort();
        out
    }

    #[test]
    fn neighbor_rule_examples() {
        let fam = Family::Cpm(p(3, 2, 5, 2));
        let mut got: Vec<Vertex> = neighbors_rule(&fam, &Vertex::new(0, vec![0, 0])).to_vec();
        got.sort();
        let mut want = vec![
            Vertex::new(1, vec![1, 0]),
            Vertex::new(1, vec![4, 0]),
            Vertex::new(5, vec![0, 2]),
            Vertex::new(5, vec![0, 3]),
        ];
        want.sort();
        assert_eq!(got, want);

        let fam = Family::Cpm(p(3, 2, 3, 1));
        let mut got: Vec<Vertex> = neighbors_rule(&fam, &Vertex::new(1, vec![1, 0])).to_vec();
        got.sort();
        let mut want = vec![
            Vertex::new(2, vec![1, 1]),
            Vertex::new(2, vec![1, 2]),
            Vertex::new(0, vec![0, 0]),
            Vertex::new(0, vec![2, 0]),
        ];
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn component_sizes() {
        assert_eq!(build_component(p(3, 2, 7, 2)).unwrap().order(), 294);
        assert_eq!(build_component(p(4, 2, 4, 1)).unwrap().order(), 32);
        assert_eq!(build_component(p(1, 2, 4, 1)).unwrap().order(), 16);
        assert_eq!(p(6, 2, 9, 2).component_order(), 972);
        assert_eq!(p(2, 2, 4, 1).component_order(), 16);
        assert_eq!(p(1, 3, 3, 1).component_order(), 81);
    }

    #[test]
    fn bfs_indexing_starts_at_origin_with_sorted_neighbours() {
        let g = build_component(p(3, 2, 5, 2)).unwrap();
        assert_eq!(g.vertex(0), &Vertex::origin(2));
        let first: Vec<Vertex> = (1..5).map(|x| g.vertex(x).clone()).collect();
        let mut sorted = first.clone();
        sorted.sort();
        assert_eq!(first, sorted);
        assert_eq!(set(&g, 0), first);
    }

    #[test]
    fn parity_examples() {
        let q = p(4, 2, 4, 1);
        assert!(parity_membership(q, &Vertex::new(0, vec![0, 2])).unwrap());
        assert!(!parity_membership(q, &Vertex::new(0, vec![1, 0])).unwrap());
        assert!(parity_membership(p(1, 2, 4, 1), &Vertex::new(0, vec![1, 1])).unwrap());
        assert_eq!(
            parity_membership(p(3, 2, 7, 2), &Vertex::origin(2)),
            Err(Error::GraphIsConnected)
        );
    }

    #[test]
    fn parity_agrees_with_reachability() {
        for n in [4u64, 8, 12] {
            for m in 1..=6u64 {
                for r in 1..n {
                    let Ok(q) = Params::new(m, 2, n, r) else { continue };
                    let full = build_full(q).unwrap();
                    let comp = build_component(q).unwrap();
                    for x in full.vertices() {
                        assert_eq!(
                            parity_membership(q, x).unwrap(),
                            comp.index_of(x).is_some(),
                            "{q} {x}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn structure_invariants() {
        for (m, s, n) in [(3u64, 2u64, 5u64), (2, 3, 4), (1, 3, 3), (4, 2, 6), (1, 2, 7)] {
            for r in 1..n {
                let Ok(q) = Params::new(m, s, n, r) else { continue };
                for g in [build_component(q).unwrap(), build_full(q).unwrap()] {
                    let ms = q.ms();
                    for x in 0..g.order() {
                        for (slot, &y) in g.adjacency()[x].iter().enumerate() {
                            assert!(g.is_adjacent(y as usize, x));
                            let (lx, ly) = (g.level_of(x), g.level_of(y as usize));
                            if slot < 2 {
                                assert_eq!(ly, (lx + 1) % ms);
                            } else {
                                assert_eq!(lx, (ly + 1) % ms);
                            }
                        }
                    }
                }
                assert_eq!(build_full(q).unwrap().order() as u64, q.checked_full_order().unwrap());
            }
        }
    }

    #[test]
    fn edge_signs_follow_the_rule() {
        let q = p(3, 2, 5, 2);
        let g = build_component(q).unwrap();
        for x in 0..g.order() {
            for slot in 0..4 {
                let e = g.edge(x, slot);
                let lo = g.vertex(e.lower as usize);
                let hi = g.vertex(e.upper as usize);
                let l = e.label as usize;
                let c = q.r_pow(lo.i);
                let want = if e.positive { add_mod(lo.v[l], c, q.n) } else { sub_mod(lo.v[l], c, q.n) };
                assert_eq!(hi.v[l], want);
            }
        }
    }

    #[test]
    fn px_sizes() {
        for (t, s) in [(4u64, 2u64), (8, 2), (3, 1), (6, 3)] {
            let g = build_px(t, s).unwrap();
            assert_eq!(g.order() as u64, t << s);
            for x in 0..g.order() {
                assert_eq!(g.neighbors(x).len(), 4);
                for &y in g.neighbors(x) {
                    assert!(g.is_adjacent(y as usize, x));
                }
            }
        }
    }

    #[test]
    fn radius_matches_alternating_cycles() {
        for (m, s, n, r) in [(3u64, 2u64, 7u64, 2u64), (4, 2, 4, 1), (3, 2, 5, 2), (2, 2, 8, 3), (1, 3, 3, 1), (3, 1, 7, 2)] {
            let q = p(m, s, n, r);
            let g = build_component(q).unwrap();
            assert_eq!(g.alternating_cycle_length() as u64, 2 * q.radius(), "{q}");
        }
        assert_eq!(p(3, 2, 7, 2).radius(), 7);
        assert_eq!(p(4, 2, 4, 1).radius(), 2);
        assert_eq!(p(3, 1, 7, 2).attachment(), Attachment::Tight);
        assert_eq!(p(3, 2, 7, 2).attachment(), Attachment::Loose);
    }

    #[test]
    fn degenerate_parameters_are_rejected() {
        assert!(matches!(build_component(p(2, 1, 5, 1)), Err(Error::Degenerate(_))));
        assert!(matches!(build_component(p(1, 1, 5, 1)), Err(Error::Degenerate(_))));
    }

    #[test]
    fn params_parse() {
        assert_eq!("3,2,7,2".parse::<Params>().unwrap(), p(3, 2, 7, 2));
        assert_eq!("(6, 2, 52, 15)".parse::<Params>().unwrap(), p(6, 2, 52, 15));
        assert!("3,2,7".parse::<Params>().is_err());
        assert!("1,2,7,2".parse::<Params>().is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]
            #[test]
            fn component_order_matches_bfs(m in 1u64..8, s in 1u64..4, n in 3u64..16, r in 1u64..16) {
                let Ok(q) = Params::new(m, s, n, r) else { return Ok(()) };
                let Some(order) = q.checked_component_order() else { return Ok(()) };
                prop_assume!(order <= 2000);
                match build_component(q) {
                    Ok(g) => prop_assert_eq!(g.order() as u64, order),
                    Err(Error::Degenerate(_)) => prop_assert!(q.ms() <= 2),
                    Err(e) => prop_assert!(false, "{e}"),
                }
            }
        }
    }
}
