//! Explicit automorphisms of CPM graphs and the symmetry classification.
//!
//! Maps are defined on `CPM̄` by vertex rules and realized on whichever graph
//! is passed in (the whole graph or the component through `⟨0;0⟩`). A rule
//! that leaves the component is reported as [`Error::NotPreserved`].

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::graphs::{build_component, Adjacency, CpmGraph, Params, Vertex};
use crate::isomorphisms::{iso_phi, normalization_map, normalize_params};
use crate::maps::realize;
use crate::modring::{
    add_mod, cond_arc_transitive, cond_two_arc_transitive, crt_pair, inverse_mod, is_pm_one, mul_mod, neg_mod,
    pow_mod, sub_mod,
};
use crate::permgroup::{automorphism_group, PermGroup, Permutation};

fn self_map(g: &CpmGraph, name: &'static str, rule: impl Fn(&Vertex) -> Vertex) -> Result<Permutation> {
    realize(g, g, name, rule)
}

fn label(g: &CpmGraph, l: usize) -> Result<()> {
    if l >= g.s() {
        return Err(Error::Precondition(alloc::format!("label {l} out of range 0..{}", g.s())));
    }
    Ok(())
}

/// `ρ_ℓ: ⟨i; v⟩ ↦ ⟨i; v + e_ℓ⟩`. Leaves the component when `n` is even.
pub fn rho(g: &CpmGraph, l: usize) -> Result<Permutation> {
    rho_pow(g, l, 1)
}

/// `ρ_ℓ^k`, i.e. `v ↦ v + k e_ℓ`.
pub fn rho_pow(g: &CpmGraph, l: usize, k: u64) -> Result<Permutation> {
    label(g, l)?;
    let n = g.modulus();
    self_map(g, "ρ", |x| {
        let mut v = x.v.clone();
        v[l] = add_mod(v[l], k, n);
        Vertex { i: x.i, v }
    })
}

/// `τ_ℓ`: negates component `ℓ`.
pub fn tau(g: &CpmGraph, l: usize) -> Result<Permutation> {
    label(g, l)?;
    let n = g.modulus();
    self_map(g, "τ", |x| {
        let mut v = x.v.clone();
        v[l] = neg_mod(v[l], n);
        Vertex { i: x.i, v }
    })
}

fn sigma_rule(p: Params, x: &Vertex) -> Vertex {
    let s = x.v.len();
    Vertex {
        i: (x.i + 1) % p.ms(),
        v: (0..s).map(|j| mul_mod(p.r, x.v[(j + s - 1) % s], p.n)).collect(),
    }
}

/// `σ: ⟨i; v⟩ ↦ ⟨i+1; (r v_{s−1}, r v_0, …, r v_{s−2})⟩`.
pub fn sigma(g: &CpmGraph) -> Result<Permutation> {
    let p = g.cpm_params()?;
    self_map(g, "σ", |x| sigma_rule(p, x))
}

/// `σρ_0` (apply `σ`, then `ρ_0`), which preserves the component for every `n`.
pub fn sigma_rho0(g: &CpmGraph) -> Result<Permutation> {
    let p = g.cpm_params()?;
    self_map(g, "σρ0", |x| {
        let mut y = sigma_rule(p, x);
        y.v[0] = add_mod(y.v[0], 1, p.n);
        y
    })
}

/// Generators of the group `G`: `σ, ρ_0, τ_0` on a connected graph; on the
/// component of a disconnected one, `σρ_0`, every `ρ_ℓ²` and every `τ_ℓ`.
pub fn group_g_generators(g: &CpmGraph) -> Result<Vec<Permutation>> {
    let p = g.cpm_params()?;
    if g.is_whole() || p.n % 2 == 1 {
        return Ok(vec![sigma(g)?, rho(g, 0)?, tau(g, 0)?]);
    }
    let mut gens = vec![sigma_rho0(g)?];
    for l in 0..g.s() {
        gens.push(rho_pow(g, l, 2)?);
    }
    for l in 0..g.s() {
        gens.push(tau(g, l)?);
    }
    Ok(gens)
}

/// The half-arc-transitive group `G` acting on `g`.
pub fn group_g(g: &CpmGraph) -> Result<PermGroup> {
    PermGroup::new(g.order(), group_g_generators(g)?)
}

fn eta_rule(p: Params, x: &Vertex, twist: bool) -> Vertex {
    let (ms, n, s) = (p.ms(), p.n, p.s as usize);
    let inv = inverse_mod(p.r, n).expect("r is a unit");
    let i4s = (x.i % (4 * p.s)) as usize;
    Vertex {
        i: (ms - x.i) % ms,
        v: (0..s)
            .map(|j| {
                let c = mul_mod(pow_mod(inv, (2 * s - 1 - 2 * j) as u64, n), x.v[s - 1 - j], n);
                if twist && (2 * s..=4 * s - 1).contains(&(i4s + j)) {
                    add_mod(c, n / 2, n)
                } else {
                    c
                }
            })
            .collect(),
    }
}

/// `η: ⟨i; v⟩ ↦ ⟨−i; (r^{−2s+1} v_{s−1}, r^{−2s+3} v_{s−2}, …, r^{−1} v_0)⟩`, needs `r^{2s} ≡ ±1`.
pub fn eta(g: &CpmGraph) -> Result<Permutation> {
    let p = g.cpm_params()?;
    if !is_pm_one(p.r_pow(2 * p.s), p.n) {
        return Err(Error::Precondition("η needs r^{2s} = ±1".into()));
    }
    self_map(g, "η", |x| eta_rule(p, x, false))
}

/// `η′`: like [`eta`] with component `j` shifted by `n/2` when
/// `2s ≤ (i mod 4s) + j ≤ 4s − 1`; needs `2(r^{2s} ± 1) ≡ 0` but `r^{2s} ≢ ±1`.
pub fn eta_prime(g: &CpmGraph) -> Result<Permutation> {
    let p = g.cpm_params()?;
    if is_pm_one(p.r_pow(2 * p.s), p.n) || !cond_arc_transitive(p.s, p.n, p.r) {
        return Err(Error::Precondition("η' needs 2(r^{2s} ± 1) = 0 and r^{2s} ≠ ±1".into()));
    }
    self_map(g, "η'", |x| eta_rule(p, x, true))
}

/// The additive involution `(x,y,z) ↦ (y − qz, 2^{−1}(x + y + qz), 2^{−1}(z − q^{−1}x + q^{−1}y))` on `ℤ_k³`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BetaMap {
    q: u64,
    q_inv: u64,
    half: u64,
    k: u64,
}

impl BetaMap {
    pub fn new(q: u64, k: u64) -> Result<BetaMap> {
        if k == 0 || k % 2 == 0 {
            return Err(Error::Precondition(alloc::format!("β needs an odd modulus, got {k}")));
        }
        let q = q % k;
        let q_inv = inverse_mod(q, k).ok_or(Error::NotUnit { value: q, modulus: k })?;
        let half = inverse_mod(2, k).expect("k is odd");
        Ok(BetaMap { q, q_inv, half, k })
    }

    pub fn modulus(&self) -> u64 {
        self.k
    }

    pub fn apply(&self, [x, y, z]: [u64; 3]) -> [u64; 3] {
        let k = self.k;
        let qz = mul_mod(self.q, z, k);
        [
            sub_mod(y, qz, k),
            mul_mod(self.half, add_mod(add_mod(x, y, k), qz, k), k),
            mul_mod(
                self.half,
                add_mod(sub_mod(z, mul_mod(self.q_inv, x, k), k), mul_mod(self.q_inv, y, k), k),
                k,
            ),
        ]
    }
}

/// Points of the 4-cube fixed by `ν₄`, as `(i, v_0, v_1)`.
pub const NU4_FIXED: [[u64; 3]; 4] = [[2, 3, 1], [3, 2, 1], [0, 2, 2], [1, 3, 2]];
/// Prescribed images under `ν₄`.
pub const NU4_MOVES: [([u64; 3], [u64; 3]); 2] = [([1, 3, 0], [3, 0, 1]), ([2, 3, 3], [0, 0, 2])];

/// The reflection `ν₄` of `CPM(2,2,4;1)`: the unique involutory automorphism
/// fixing [`NU4_FIXED`] and realizing [`NU4_MOVES`]. Found by scanning the
/// whole automorphism group; returned as a table on `ℤ_4³` (entries outside
/// the component are `None`).
pub fn nu4_table() -> Result<Vec<Option<[u64; 3]>>> {
    let g = build_component(Params::new(2, 2, 4, 1)?)?;
    let aut = automorphism_group(&g)?;
    let idx = |t: [u64; 3]| g.require_index(&Vertex::new(t[0], vec![t[1], t[2]]));
    let fixed = NU4_FIXED.iter().map(|&t| idx(t)).collect::<Result<Vec<_>>>()?;
    let moves = NU4_MOVES
        .iter()
        .map(|&(a, b)| Ok((idx(a)?, idx(b)?)))
        .collect::<Result<Vec<_>>>()?;
    let candidates: Vec<Permutation> = aut
        .elements(1 << 12)?
        .into_iter()
        .filter(|e| !e.is_identity() && e.then(e).is_identity())
        .filter(|e| fixed.iter().all(|&x| e.apply(x) == x))
        .filter(|e| moves.iter().all(|&(a, b)| e.apply(a) == b))
        .collect();
    if candidates.len() != 1 {
        return Err(Error::AmbiguousReflection(candidates.len()));
    }
    let nu = &candidates[0];
    let mut table = vec![None; 64];
    for (x, vx) in g.vertices().iter().enumerate() {
        let w = g.vertex(nu.apply(x));
        table[code4([vx.i, vx.v[0], vx.v[1]])] = Some([w.i, w.v[0], w.v[1]]);
    }
    Ok(table)
}

fn code4(t: [u64; 3]) -> usize {
    (t[0] * 16 + t[1] * 4 + t[2]) as usize
}

/// Which construction of the 2-arc-transitive reflection applies directly.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NuCase {
    /// `n` odd, `m = n`, `r² ≡ ±1`.
    OddEqual,
    /// `n = 2m`, `m ≡ 2 (mod 4)`, `1 + r² ≡ m`.
    DoubledModulus,
}

pub fn nu_case(p: Params) -> Option<NuCase> {
    if p.s != 2 {
        return None;
    }
    if p.n % 2 == 1 && p.m == p.n && is_pm_one(p.r_pow(2), p.n) {
        return Some(NuCase::OddEqual);
    }
    if p.n == 2 * p.m && p.m % 4 == 2 && add_mod(1, p.r_pow(2), p.n) == p.m % p.n {
        return Some(NuCase::DoubledModulus);
    }
    None
}

/// The extra automorphism `ν` of a 2-arc-transitive component: it fixes
/// `⟨0;(0,0)⟩` and `⟨1;(1,0)⟩` and moves `⟨1;(−1,0)⟩`.
pub fn nu(g: &CpmGraph) -> Result<Permutation> {
    let p = g.cpm_params()?;
    if g.is_whole() && p.n % 2 == 0 {
        return Err(Error::Precondition("ν is built on the component".into()));
    }
    if !cond_two_arc_transitive(p.m, p.s, p.n, p.r) && !cond_two_arc_transitive_normalized(p) {
        return Err(Error::NotTwoArcTransitive);
    }
    match nu_case(p) {
        Some(NuCase::OddEqual) => nu_odd(g, p),
        Some(NuCase::DoubledModulus) => nu_doubled(g, p),
        None => {
            let (q, norm) = normalization_map(p)?;
            if nu_case(q).is_none() {
                return Err(Error::NotTwoArcTransitive);
            }
            let inner = nu(&build_component(q)?)?;
            Ok(norm.then(&inner).then(&norm.inverse()))
        }
    }
}

fn cond_two_arc_transitive_normalized(p: Params) -> bool {
    let q = normalize_params(p);
    cond_two_arc_transitive(q.m, q.s, q.n, q.r)
}

/// Case `n` odd, `m = n`: on `CPM(n,2,n;1)` read `⟨i;(y,z)⟩` as `(i mod 2; (i mod n, y, z))`,
/// apply `β` with `q = 1` to the triple and keep `i mod 2`; other `r` are
/// reached by conjugating with `Φ`.
fn nu_odd(g: &CpmGraph, p: Params) -> Result<Permutation> {
    let n = p.n;
    let beta = BetaMap::new(1, n)?;
    let rule = |x: &Vertex| {
        let [a, b, c] = beta.apply([x.i % n, x.v[0], x.v[1]]);
        Vertex {
            i: crt_pair(x.i % 2, 2, a, n).expect("n is odd"),
            v: vec![b, c],
        }
    };
    if p.r == 1 {
        return self_map(g, "ν", rule);
    }
    let phi = iso_phi(g, 1)?;
    let unit = build_component(p.with_r(1)?)?;
    let inner = self_map(&unit, "ν", rule)?;
    Ok(phi.map.then(&inner).then(&phi.map.inverse()))
}

/// Case `n = 4k`, `k` odd: with `r ≡ 3 (mod 4)` (replace `r` by `−r` if
/// needed), write `⟨i;(y,z)⟩` as `(i,y,z) ∈ ℤ_{4k}³` and combine `ν₄` on the
/// residues modulo 4 with `β` (`q = r mod k`) on the residues modulo `k`.
fn nu_doubled(g: &CpmGraph, p: Params) -> Result<Permutation> {
    let n = p.n;
    let k = n / 4;
    let r = if p.r % 4 == 3 { p.r } else { n - p.r };
    let beta = BetaMap::new(r % k.max(1), k)?;
    let table = nu4_table()?;
    let rule = |x: &Vertex| {
        let t = [x.i, x.v[0], x.v[1]];
        let Some(a) = table[code4(t.map(|c| c % 4))] else {
            // outside the component of the 4-cube; realize reports it
            return Vertex::new(u64::MAX, vec![0, 0]);
        };
        let b = beta.apply(t.map(|c| c % k));
        let out: Vec<u64> = (0..3).map(|c| crt_pair(a[c], 4, b[c], k).expect("k is odd")).collect();
        Vertex::new(out[0], vec![out[1], out[2]])
    };
    self_map(g, "ν", rule)
}

/// One line of the offset table for the doubled-modulus case: for an edge
/// offset `f` leaving a vertex with `i ≡ x (mod 4)`, its residues modulo 4
/// and `k`, and the image of the latter under `β`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OffsetRow {
    pub x_mod4: u64,
    pub f: [u64; 3],
    pub f4: [u64; 3],
    pub fk: [u64; 3],
    pub fk_beta: [u64; 3],
}

/// The eight offsets `(1, ±r^x e_ℓ)` for `x = 0..3`, with `r ≡ 3 (mod 4)`.
pub fn offset_table(p: Params) -> Result<Vec<OffsetRow>> {
    if nu_case(p) != Some(NuCase::DoubledModulus) {
        return Err(Error::Precondition("offset table needs n = 2m, m ≡ 2 (mod 4), 1 + r² ≡ m".into()));
    }
    let n = p.n;
    let k = n / 4;
    let r = if p.r % 4 == 3 { p.r } else { n - p.r };
    let beta = BetaMap::new(r % k, k)?;
    let mut rows = Vec::new();
    for x in 0..4u64 {
        let c = pow_mod(r, x, n);
        for c in [c, neg_mod(c, n)] {
            let f = if x % 2 == 0 { [1, c, 0] } else { [1, 0, c] };
            let fk = f.map(|t| t % k);
            rows.push(OffsetRow {
                x_mod4: x,
                f,
                f4: f.map(|t| t % 4),
                fk,
                fk_beta: beta.apply(fk),
            });
        }
    }
    Ok(rows)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SymKind {
    HalfArcTransitive,
    /// Arc-transitive, not 2-arc-transitive, isomorphic to a Praeger-Xu graph.
    ArcTransitiveNot2AtPx,
    ArcTransitiveNot2AtGeneric,
    TwoArcTransitive,
}

impl SymKind {
    pub fn short_name(self) -> &'static str {
        match self {
            SymKind::HalfArcTransitive => "HAT",
            SymKind::ArcTransitiveNot2AtPx => "AT-PX",
            SymKind::ArcTransitiveNot2AtGeneric => "AT",
            SymKind::TwoArcTransitive => "2AT",
        }
    }

    pub fn is_arc_transitive(self) -> bool {
        self != SymKind::HalfArcTransitive
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymClass {
    pub kind: SymKind,
    pub stabilizer_order: BigUint,
    pub predicted_aut_order: BigUint,
    /// Explicit automorphisms that, with `G`, generate the full group
    /// (for the Praeger-Xu case the identification map is listed instead).
    pub witness_recipe: Vec<&'static str>,
    pub normalized: Params,
}

/// Symmetry type, vertex-stabilizer order and `|Aut|` predicted from the parameters.
pub fn classify(p: Params) -> Result<SymClass> {
    if p.s < 2 {
        return Err(Error::ClassificationNeedsS2);
    }
    let q = normalize_params(p);
    let mut recipe = vec!["sigma", "rho_0", "tau_0"];
    let (kind, stab) = if cond_two_arc_transitive(q.m, q.s, q.n, q.r) {
        recipe.push("nu");
        (SymKind::TwoArcTransitive, BigUint::from(24u32))
    } else if cond_arc_transitive(q.s, q.n, q.r) {
        if q.n == 4 {
            recipe.push("px");
            (SymKind::ArcTransitiveNot2AtPx, BigUint::from(2u32).pow((q.s * (q.m - 1) + 1) as u32))
        } else {
            recipe.push(if is_pm_one(q.r_pow(2 * q.s), q.n) { "eta" } else { "eta'" });
            (SymKind::ArcTransitiveNot2AtGeneric, BigUint::from(2u32).pow((q.s + 1) as u32))
        }
    } else {
        (SymKind::HalfArcTransitive, BigUint::from(2u32).pow(q.s as u32))
    };
    Ok(SymClass {
        kind,
        predicted_aut_order: BigUint::from(q.component_order()) * &stab,
        stabilizer_order: stab,
        witness_recipe: recipe,
        normalized: q,
    })
}

/// `G` together with the extra automorphism named by the classification
/// (`η`, `η′` or `ν`), as generators on the component of `p`. Praeger-Xu
/// graphs have a much larger group and get `G` only.
pub fn witness_generators(g: &CpmGraph) -> Result<Vec<Permutation>> {
    let p = g.cpm_params()?;
    let class = classify(p)?;
    let mut gens = group_g_generators(g)?;
    match class.kind {
        SymKind::TwoArcTransitive => gens.push(nu(g)?),
        SymKind::ArcTransitiveNot2AtGeneric => {
            // η, η′ are stated for the given r; fall back through the normal form
            let extra = if is_pm_one(p.r_pow(2 * p.s), p.n) {
                eta(g)
            } else {
                eta_prime(g)
            };
            match extra {
                Ok(e) => gens.push(e),
                Err(_) => {
                    let (q, norm) = normalization_map(p)?;
                    let h = build_component(q)?;
                    let e = if is_pm_one(q.r_pow(2 * q.s), q.n) { eta(&h)? } else { eta_prime(&h)? };
                    gens.push(norm.then(&e).then(&norm.inverse()));
                }
            }
        }
        SymKind::HalfArcTransitive | SymKind::ArcTransitiveNot2AtPx => {}
    }
    Ok(gens)
}

/// Whether the levels are blocks of imprimitivity for `group`.
pub fn levels_are_blocks(group: &PermGroup, g: &CpmGraph) -> Result<bool> {
    let parts: Vec<Vec<u32>> = g.levels().iter().filter(|l| !l.is_empty()).cloned().collect();
    crate::permgroup::is_block_partition(group, &parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::build_full;

    fn comp(m: u64, s: u64, n: u64, r: u64) -> CpmGraph {
        build_component(Params::new(m, s, n, r).unwrap()).unwrap()
    }

    fn at(g: &CpmGraph, i: u64, v: &[u64]) -> usize {
        g.require_index(&Vertex::new(i, v.to_vec())).unwrap()
    }

    #[test]
    fn sigma_and_tau_examples() {
        let g = comp(3, 2, 5, 2);
        let s = sigma(&g).unwrap();
        assert_eq!(s.apply(at(&g, 0, &[0, 0])), at(&g, 1, &[0, 0]));
        assert_eq!(s.apply(at(&g, 1, &[1, 0])), at(&g, 2, &[0, 2]));
        let t = tau(&g, 0).unwrap();
        assert_eq!(t.apply(at(&g, 1, &[1, 3])), at(&g, 1, &[4, 3]));
    }

    #[test]
    fn rho_leaves_an_even_component() {
        let g = comp(4, 2, 8, 1);
        assert_eq!(rho(&g, 0), Err(Error::NotPreserved("ρ")));
        assert!(rho_pow(&g, 1, 2).is_ok());
        assert!(sigma_rho0(&g).is_ok());
    }

    #[test]
    fn relations_hold() {
        for (m, s, n, r) in [(3, 2, 5, 2), (3, 2, 7, 2), (1, 3, 3, 1), (2, 3, 7, 2)] {
            let g = build_full(Params::new(m, s, n, r).unwrap()).unwrap();
            let sg = sigma(&g).unwrap();
            for l in 0..s as usize {
                let rl = rho(&g, l).unwrap();
                for l2 in 0..s as usize {
                    let t = tau(&g, l2).unwrap();
                    let lhs = t.then(&rl).then(&t);
                    let rhs = if l == l2 { rl.inverse() } else { rl.clone() };
                    assert_eq!(lhs, rhs);
                }
                let next = (l + 1) % s as usize;
                assert_eq!(rl.conjugate_by(&sg), rho(&g, next).unwrap().pow(r as i64));
                assert_eq!(tau(&g, l).unwrap().conjugate_by(&sg), tau(&g, next).unwrap());
            }
        }
    }

    #[test]
    fn group_g_orders() {
        assert_eq!(group_g(&comp(3, 2, 7, 2)).unwrap().order(), BigUint::from(1176u32));
        let full = build_full(Params::new(3, 2, 5, 2).unwrap()).unwrap();
        assert_eq!(group_g(&full).unwrap().order(), BigUint::from(600u32));
        assert_eq!(group_g(&comp(4, 2, 4, 1)).unwrap().order(), BigUint::from(128u32));
    }

    #[test]
    fn eta_example() {
        let g = comp(1, 2, 5, 2);
        let e = eta(&g).unwrap();
        assert_eq!(e.apply(at(&g, 1, &[1, 0])), at(&g, 1, &[0, 3]));
        assert_eq!(e.apply(0), 0);
        assert!(e.then(&e).is_identity() || e.order() > BigUint::from(2u32));
    }

    #[test]
    fn beta_is_an_additive_involution() {
        for k in (1..=9).step_by(2) {
            for q in 1..k.max(2) {
                let Ok(b) = BetaMap::new(q, k) else { continue };
                for x in 0..k {
                    for y in 0..k {
                        for z in 0..k {
                            let t = [x, y, z];
                            assert_eq!(b.apply(b.apply(t)), t);
                            let u = [y, z, x];
                            let sum = [(x + y) % k, (y + z) % k, (z + x) % k];
                            let bt = b.apply(t);
                            let bu = b.apply(u);
                            assert_eq!(b.apply(sum), [0, 1, 2].map(|c| (bt[c] + bu[c]) % k));
                        }
                    }
                }
            }
        }
        let b = BetaMap::new(1, 3).unwrap();
        assert_eq!(b.apply([1, 2, 0]), [2, 0, 2]);
        assert_eq!(b.apply([1, 1, 0]), [1, 1, 0]);
        assert!(BetaMap::new(1, 4).is_err());
        assert!(BetaMap::new(3, 9).is_err());
    }

    #[test]
    fn nu4_is_unique() {
        let t = nu4_table().unwrap();
        for f in NU4_FIXED {
            assert_eq!(t[code4(f)], Some(f));
        }
        for (a, b) in NU4_MOVES {
            assert_eq!(t[code4(a)], Some(b));
        }
    }

    #[test]
    fn nu_fixes_and_moves() {
        for (m, s, n, r) in [(3, 2, 3, 1), (5, 2, 5, 1), (5, 2, 5, 4), (2, 2, 4, 1), (1, 2, 4, 1), (10, 2, 20, 3)] {
            let g = comp(m, s, n, r);
            let v = nu(&g).unwrap();
            assert_eq!(v.apply(at(&g, 0, &[0, 0])), at(&g, 0, &[0, 0]), "({m},{s},{n},{r})");
            assert_eq!(v.apply(at(&g, 1, &[1, 0])), at(&g, 1, &[1, 0]));
            let minus = at(&g, 1, &[n - 1, 0]);
            assert_ne!(v.apply(minus), minus);
        }
        assert_eq!(nu(&comp(3, 2, 7, 2)), Err(Error::NotTwoArcTransitive));
    }

    #[test]
    fn nu_case_two_image() {
        // (1,-1,0) goes to (-1,0,-r^3) for r ≡ 3 mod 4
        for (m, n, r) in [(10u64, 20u64, 3u64), (10, 20, 7), (2, 4, 3)] {
            let g = comp(m, 2, n, r);
            let v = nu(&g).unwrap();
            let img = g.vertex(v.apply(at(&g, 1, &[n - 1, 0]))).clone();
            let r3 = pow_mod(r, 3, n);
            assert_eq!(img, Vertex::new(2 * m - 1, vec![0, neg_mod(r3, n)]), "({m},2,{n},{r})");
        }
    }

    #[test]
    fn classify_examples() {
        let c = classify(Params::new(3, 2, 7, 2).unwrap()).unwrap();
        assert_eq!((c.kind, c.predicted_aut_order), (SymKind::HalfArcTransitive, BigUint::from(1176u32)));
        let c = classify(Params::new(4, 2, 4, 1).unwrap()).unwrap();
        assert_eq!((c.kind, c.stabilizer_order), (SymKind::ArcTransitiveNot2AtPx, BigUint::from(128u32)));
        let c = classify(Params::new(3, 2, 3, 1).unwrap()).unwrap();
        assert_eq!((c.kind, c.stabilizer_order), (SymKind::TwoArcTransitive, BigUint::from(24u32)));
        let c = classify(Params::new(1, 3, 3, 1).unwrap()).unwrap();
        assert_eq!((c.kind, c.stabilizer_order), (SymKind::ArcTransitiveNot2AtGeneric, BigUint::from(16u32)));
        assert_eq!(classify(Params::new(3, 1, 7, 2).unwrap()), Err(Error::ClassificationNeedsS2));
    }
}
