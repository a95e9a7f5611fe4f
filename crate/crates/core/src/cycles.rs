//! Short cycles, 2-path kinds and traces.
//!
//! A 2-path `(x, y, z)` is an anchor when `x` and `z` lie on the same side of
//! `y`: both on the previous level (positive) or both on the next level
//! (negative). Sides are read from the adjacency slots, so the notion is
//! well defined even when there are only two levels.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::graphs::{Adjacency, CpmGraph, Vertex};

/// Enumeration never goes beyond this length.
pub const MAX_CYCLE_LEN: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TwoPathKind {
    NonAnchor,
    PositiveAnchor,
    NegativeAnchor,
}

impl TwoPathKind {
    pub fn is_anchor(self) -> bool {
        self != TwoPathKind::NonAnchor
    }
}

pub fn classify_two_path(g: &CpmGraph, x: usize, y: usize, z: usize) -> Result<TwoPathKind> {
    if x == z || y >= g.order() {
        return Err(Error::NotATwoPath);
    }
    let (Some(sx), Some(sz)) = (g.slot_of(y, x), g.slot_of(y, z)) else {
        return Err(Error::NotATwoPath);
    };
    Ok(match (sx >= 2, sz >= 2) {
        (true, true) => TwoPathKind::PositiveAnchor,
        (false, false) => TwoPathKind::NegativeAnchor,
        _ => TwoPathKind::NonAnchor,
    })
}

/// Checks that `cycle` is a simple cycle of `g` (length at least 3).
pub fn validate_cycle<G: Adjacency + ?Sized>(g: &G, cycle: &[u32]) -> Result<()> {
    let k = cycle.len();
    if k < 3 {
        return Err(Error::NotACycle(alloc::format!("length {k} is too short")));
    }
    let mut sorted = cycle.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::NotACycle("repeated vertex".into()));
    }
    if let Some(&bad) = sorted.last().filter(|&&x| x as usize >= g.order()) {
        return Err(Error::NotACycle(alloc::format!("vertex {bad} out of range")));
    }
    for j in 0..k {
        let (a, b) = (cycle[j] as usize, cycle[(j + 1) % k] as usize);
        if !g.is_adjacent(a, b) {
            return Err(Error::NotACycle(alloc::format!("{a} and {b} are not adjacent")));
        }
    }
    Ok(())
}

/// The a/n code of a cycle read from its first vertex.
pub fn code_of_cycle(g: &CpmGraph, cycle: &[u32]) -> Result<String> {
    validate_cycle(g, cycle)?;
    Ok(raw_code(g, cycle))
}

fn raw_code(g: &CpmGraph, cycle: &[u32]) -> String {
    let k = cycle.len();
    (0..k)
        .map(|j| {
            let x = cycle[(j + k - 1) % k] as usize;
            let y = cycle[j] as usize;
            let z = cycle[(j + 1) % k] as usize;
            match classify_two_path(g, x, y, z) {
                Ok(kind) if kind.is_anchor() => 'a',
                _ => 'n',
            }
        })
        .collect()
}

/// Lexicographic minimum over rotations and reflections.
pub fn canonical_code(code: &str) -> String {
    let fwd: Vec<u8> = code.bytes().collect();
    let rev: Vec<u8> = fwd.iter().rev().copied().collect();
    let k = fwd.len();
    let mut best: Option<Vec<u8>> = None;
    for seq in [&fwd, &rev] {
        for start in 0..k.max(1) {
            let cand: Vec<u8> = (0..k).map(|j| seq[(start + j) % k]).collect();
            if best.as_ref().map_or(true, |b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    String::from_utf8(best.unwrap_or_default()).expect("ascii")
}

/// Equivalence class of codes under rotation and reflection.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Trace {
    code: String,
    disbalancedness: usize,
}

impl Trace {
    /// Builds the trace of any representative code over `{a, n}`.
    pub fn from_code(code: &str) -> Result<Trace> {
        if code.is_empty() || code.bytes().any(|b| b != b'a' && b != b'n') {
            return Err(Error::InvalidCode(code.into()));
        }
        let code = canonical_code(code);
        let disbalancedness = disbalancedness_of(&code);
        Ok(Trace { code, disbalancedness })
    }

    /// Parses exponent notation such as `a^3n^2an^2` or a plain code.
    pub fn parse(text: &str) -> Result<Trace> {
        let mut code = String::new();
        let bytes = text.as_bytes();
        let mut k = 0;
        while k < bytes.len() {
            let c = bytes[k];
            if c != b'a' && c != b'n' {
                return Err(Error::InvalidCode(text.into()));
            }
            k += 1;
            let mut reps = 1usize;
            if k < bytes.len() && bytes[k] == b'^' {
                k += 1;
                let start = k;
                while k < bytes.len() && bytes[k].is_ascii_digit() {
                    k += 1;
                }
                reps = text[start..k].parse().map_err(|_| Error::InvalidCode(text.into()))?;
            }
            for _ in 0..reps {
                code.push(c as char);
            }
        }
        Trace::from_code(&code)
    }

    pub fn code(&self) -> &str {
        &self.code
    }

    pub fn len(&self) -> usize {
        self.code.len()
    }

    pub fn is_empty(&self) -> bool {
        self.code.is_empty()
    }

    pub fn anchors(&self) -> usize {
        self.code.bytes().filter(|&b| b == b'a').count()
    }

    pub fn disbalancedness(&self) -> usize {
        self.disbalancedness
    }

    pub fn is_coiled(&self) -> bool {
        self.disbalancedness != 0
    }

    /// Exponent notation, e.g. `a^2n^6`.
    pub fn compact(&self) -> String {
        let mut out = String::new();
        let b = self.code.as_bytes();
        let mut k = 0;
        while k < b.len() {
            let mut j = k;
            while j < b.len() && b[j] == b[k] {
                j += 1;
            }
            out.push(b[k] as char);
            if j - k > 1 {
                out.push_str(&alloc::format!("^{}", j - k));
            }
            k = j;
        }
        out
    }
}

impl fmt::Display for Trace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.compact())
    }
}

/// Length when anchor-free; otherwise `|Σ (−1)^j k_j|` for `a n^{k_1} a n^{k_2} …`
/// read from the leading anchor of `code`.
fn disbalancedness_of(code: &str) -> usize {
    let b = code.as_bytes();
    let Some(first) = b.iter().position(|&c| c == b'a') else {
        return b.len();
    };
    let k = b.len();
    let mut sum: i64 = 0;
    let mut sign = -1i64;
    let mut run = 0i64;
    for j in 1..=k {
        if b[(first + j) % k] == b'a' {
            sum += sign * run;
            sign = -sign;
            run = 0;
        } else {
            run += 1;
        }
    }
    sum.unsigned_abs() as usize
}

pub fn trace_of_cycle(g: &CpmGraph, cycle: &[u32]) -> Result<Trace> {
    Trace::from_code(&code_of_cycle(g, cycle)?)
}

/// The explicit 8-cycle through `⟨0;0⟩` alternating anchors and non-anchors.
pub fn generic_eight_cycle(g: &CpmGraph) -> Result<Vec<u32>> {
    let p = g.cpm_params()?;
    let ms = p.ms();
    if ms < 3 {
        return Err(Error::Precondition(alloc::format!("generic 8-cycle needs ms >= 3, got {ms}")));
    }
    let s = p.s as usize;
    let l1 = 1 % s;
    let r = p.r as i64;
    let vec_of = |a: i64, b: i64| {
        let mut v = alloc::vec![0i64; s];
        v[0] += a;
        v[l1] += b;
        v
    };
    let spec: [(i64, i64, i64); 8] = [
        (0, 0, 0),
        (1, 1, 0),
        (2, 1, r),
        (1, 1, 2 * r),
        (0, 0, 2 * r),
        (1, -1, 2 * r),
        (2, -1, r),
        (1, -1, 0),
    ];
    let cycle = spec
        .iter()
        .map(|&(i, a, b)| g.require_index(&Vertex::reduced(i, &vec_of(a, b), ms, p.n)).map(|x| x as u32))
        .collect::<Result<Vec<u32>>>()?;
    validate_cycle(g, &cycle)?;
    Ok(cycle)
}

/// A cycle stored from its least vertex, in the direction with the smaller second vertex.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct CycleRecord {
    pub vertices: Vec<u32>,
    pub trace: Trace,
}

/// Every simple cycle of length at most `max_len`, each exactly once.
pub fn enumerate_cycles(g: &CpmGraph, max_len: usize) -> Result<Vec<CycleRecord>> {
    if max_len > MAX_CYCLE_LEN {
        return Err(Error::CycleLengthCap(max_len));
    }
    let mut out = Vec::new();
    let mut on_path = alloc::vec![false; g.order()];
    let mut path = Vec::with_capacity(max_len);
    for start in 0..g.order() {
        path.clear();
        path.push(start as u32);
        on_path[start] = true;
        extend(g, start, max_len, &mut path, &mut on_path, &mut |cycle| {
            out.push(CycleRecord {
                vertices: cycle.to_vec(),
                trace: Trace::from_code(&raw_code(g, cycle)).expect("valid code"),
            });
        });
        on_path[start] = false;
    }
    out.sort_by(|a, b| (a.vertices.len(), &a.vertices).cmp(&(b.vertices.len(), &b.vertices)));
    Ok(out)
}

fn extend(
    g: &CpmGraph,
    start: usize,
    max_len: usize,
    path: &mut Vec<u32>,
    on_path: &mut [bool],
    emit: &mut impl FnMut(&[u32]),
) {
    let last = *path.last().expect("non-empty") as usize;
    for &w in g.neighbors(last) {
        let w = w as usize;
        if w == start {
            if path.len() >= 3 && path[1] < path[path.len() - 1] {
                emit(path);
            }
        } else if w > start && !on_path[w] && path.len() < max_len {
            on_path[w] = true;
            path.push(w as u32);
            extend(g, start, max_len, path, on_path, emit);
            path.pop();
            on_path[w] = false;
        }
    }
}

/// Number of cycles of length at most `max_len` containing the 2-path
/// `(x, y, z)`, optionally restricted to one trace.
pub fn count_cycles_through(
    g: &CpmGraph,
    path: (usize, usize, usize),
    max_len: usize,
    trace: Option<&Trace>,
) -> Result<u64> {
    let counts = cycle_counts_through(g, path, max_len)?;
    Ok(counts
        .iter()
        .filter(|((_, t), _)| trace.map_or(true, |f| f == t))
        .map(|(_, &c)| c)
        .sum())
}

/// Counts of cycles through the 2-path `(x, y, z)`, keyed by length and trace.
pub fn cycle_counts_through(
    g: &CpmGraph,
    (x, y, z): (usize, usize, usize),
    max_len: usize,
) -> Result<BTreeMap<(usize, Trace), u64>> {
    if max_len > MAX_CYCLE_LEN {
        return Err(Error::CycleLengthCap(max_len));
    }
    classify_two_path(g, x, y, z)?;
    let mut counts = BTreeMap::new();
    let mut on_path = alloc::vec![false; g.order()];
    let mut cycle: Vec<u32> = alloc::vec![y as u32, z as u32];
    on_path[y] = true;
    on_path[z] = true;
    walk_to(g, x, max_len, &mut cycle, &mut on_path, &mut |c| {
        let t = Trace::from_code(&raw_code(g, c)).expect("valid code");
        *counts.entry((c.len(), t)).or_insert(0u64) += 1;
    });
    Ok(counts)
}

fn walk_to(
    g: &CpmGraph,
    target: usize,
    max_len: usize,
    path: &mut Vec<u32>,
    on_path: &mut [bool],
    emit: &mut impl FnMut(&[u32]),
) {
    let last = *path.last().expect("non-empty") as usize;
    for &w in g.neighbors(last) {
        let w = w as usize;
        if on_path[w] || path.len() >= max_len {
            continue;
        }
        if w == target {
            path.push(w as u32);
            emit(path);
            path.pop();
        } else {
            on_path[w] = true;
            path.push(w as u32);
            walk_to(g, target, max_len, path, on_path, emit);
            path.pop();
            on_path[w] = false;
        }
    }
}

/// Representative 2-paths centred at vertex 0.
pub fn representative_two_paths(g: &CpmGraph) -> [(TwoPathKind, (usize, usize, usize)); 3] {
    let a = g.adjacency()[0];
    let (f0, f1, b0, b1) = (a[0] as usize, a[1] as usize, a[2] as usize, a[3] as usize);
    [
        (TwoPathKind::PositiveAnchor, (b0, 0, b1)),
        (TwoPathKind::NegativeAnchor, (f0, 0, f1)),
        (TwoPathKind::NonAnchor, (b0, 0, f0)),
    ]
}

/// One line of a cycle census.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusRow {
    pub trace: Trace,
    pub length: usize,
    pub total: u64,
    pub per_positive_anchor: u64,
    pub per_negative_anchor: u64,
    pub per_non_anchor: u64,
}

/// Cycle counts by trace: totals over the graph and counts through the
/// representative anchors and non-anchor at vertex 0.
pub fn cycle_census(g: &CpmGraph, max_len: usize) -> Result<Vec<CensusRow>> {
    let mut totals: BTreeMap<(usize, Trace), u64> = BTreeMap::new();
    for c in enumerate_cycles(g, max_len)? {
        *totals.entry((c.vertices.len(), c.trace)).or_insert(0) += 1;
    }
    let reps = representative_two_paths(g);
    let local: Vec<BTreeMap<(usize, Trace), u64>> = reps
        .iter()
        .map(|&(_, p)| cycle_counts_through(g, p, max_len))
        .collect::<Result<_>>()?;
    Ok(totals
        .into_iter()
        .map(|(key, total)| CensusRow {
            per_positive_anchor: local[0].get(&key).copied().unwrap_or(0),
            per_negative_anchor: local[1].get(&key).copied().unwrap_or(0),
            per_non_anchor: local[2].get(&key).copied().unwrap_or(0),
            length: key.0,
            trace: key.1,
            total,
        })
        .collect())
}

/// Outcome of the structural checks on one cycle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LemmaReport {
    /// Positive and negative anchors alternate once non-anchors are dropped.
    pub anchors_alternate: bool,
    /// Each label occurs zero or at least two times, and a label used exactly
    /// twice is never on two consecutive edges.
    pub labels_ok: bool,
    /// Disbalancedness is a multiple of `ms`.
    pub disbalancedness_ok: bool,
}

impl LemmaReport {
    pub fn all(&self) -> bool {
        self.anchors_alternate && self.labels_ok && self.disbalancedness_ok
    }
}

pub fn check_cycle_lemmas(g: &CpmGraph, cycle: &[u32]) -> Result<LemmaReport> {
    validate_cycle(g, cycle)?;
    let p = g.cpm_params()?;
    let k = cycle.len();
    let kinds: Vec<TwoPathKind> = (0..k)
        .map(|j| {
            classify_two_path(g, cycle[(j + k - 1) % k] as usize, cycle[j] as usize, cycle[(j + 1) % k] as usize)
        })
        .collect::<Result<_>>()?;
    let anchors: Vec<TwoPathKind> = kinds.into_iter().filter(|t| t.is_anchor()).collect();
    let anchors_alternate =
        anchors.len() % 2 == 0 && (0..anchors.len()).all(|j| anchors[j] != anchors[(j + 1) % anchors.len()]);

    let labels: Vec<u64> = (0..k)
        .map(|j| {
            let (a, b) = (cycle[j] as usize, cycle[(j + 1) % k] as usize);
            g.edge(a, g.slot_of(a, b).expect("adjacent")).label
        })
        .collect();
    let mut uses: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
    for (j, &l) in labels.iter().enumerate() {
        uses.entry(l).or_default().push(j);
    }
    let labels_ok = uses.values().all(|pos| match pos.len() {
        1 => false,
        2 => {
            let d = pos[1] - pos[0];
            d != 1 && d != k - 1
        }
        _ => true,
    });

    let trace = Trace::from_code(&raw_code(g, cycle))?;
    let disbalancedness_ok = trace.disbalancedness() as u64 % p.ms() == 0;
    Ok(LemmaReport {
        anchors_alternate,
        labels_ok,
        disbalancedness_ok,
    })
}

/// Canonical codes of the only 6-cycle traces that can occur.
pub fn allowed_six_cycle_traces() -> [Trace; 3] {
    ["a^6", "an^2an^2", "n^6"].map(|t| Trace::parse(t).expect("valid"))
}

/// Named 8-cycle traces `T1 … T13`.
pub fn eight_cycle_trace(index: usize) -> Option<Trace> {
    let code = match index {
        1 => "anananan",
        2 => "a^8",
        3 => "a^3n^2an^2",
        4 => "an^3an^3",
        5 => "a^5nan",
        6 => "a^2nan^2an",
        7 => "a^3na^3n",
        8 => "a^4n^4",
        9 => "a^2na^2n^3",
        10 => "a^2n^2a^2n^2",
        11 => "an^5an",
        12 => "a^2n^6",
        13 => "n^8",
        _ => return None,
    };
    Trace::parse(code).ok()
}
