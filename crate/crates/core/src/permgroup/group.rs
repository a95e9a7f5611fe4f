use alloc::collections::VecDeque;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::One;

use super::perm::Permutation;
use crate::error::{Error, Result};

/// One level of a stabilizer chain.
#[derive(Clone, Debug)]
struct Level {
    point: u32,
    /// Indices into the strong generating set.
    gens: Vec<usize>,
    orbit: Vec<u32>,
    /// `transversal[x]` maps `point` to `x`.
    transversal: Vec<Option<Permutation>>,
    pending: VecDeque<(u32, usize)>,
}

impl Level {
    fn new(point: u32, degree: usize) -> Level {
        let mut transversal = alloc::vec![None; degree];
        transversal[point as usize] = Some(Permutation::identity(degree));
        Level {
            point,
            gens: Vec::new(),
            orbit: alloc::vec![point],
            transversal,
            pending: VecDeque::new(),
        }
    }
}

/// A permutation group with a base and strong generating set.
///
/// The chain is built by a deterministic Schreier-Sims, so two runs on the
/// same generators produce the same base, orbits and strong generators.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    strong: Vec<Permutation>,
    levels: Vec<Level>,
}

impl PermGroup {
    pub fn trivial(degree: usize) -> PermGroup {
        PermGroup {
            degree,
            generators: Vec::new(),
            strong: Vec::new(),
            levels: Vec::new(),
        }
    }

    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<PermGroup> {
        PermGroup::with_base(degree, generators, &[])
    }

    /// Like [`PermGroup::new`], with the base starting at `prefix`.
    pub fn with_base(degree: usize, generators: Vec<Permutation>, prefix: &[u32]) -> Result<PermGroup> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        if let Some(&b) = prefix.iter().find(|&&b| b as usize >= degree) {
            return Err(Error::MalformedPermutation(alloc::format!("base point {b} out of range")));
        }
        let mut group = PermGroup::trivial(degree);
        group.generators = generators.clone();
        for &b in prefix {
            group.levels.push(Level::new(b, degree));
        }
        for g in generators {
            let (residue, depth) = group.sift(g, 0);
            if !residue.is_identity() {
                group.insert(residue, 0, depth);
                group.process_pending();
            }
        }
        Ok(group)
    }

    /// Rebuilds a group from a known stabilizer chain: `levels[k]` is the
    /// deepest level whose stabilizer contains `generators[k]`, i.e. the
    /// generator fixes `base[0..levels[k]]`.
    pub(crate) fn from_chain(
        degree: usize,
        generators: Vec<Permutation>,
        base: &[u32],
        levels: &[usize],
    ) -> PermGroup {
        let mut group = PermGroup::trivial(degree);
        group.generators = generators.clone();
        for (l, &b) in base.iter().enumerate() {
            let mut level = Level::new(b, degree);
            level.gens = (0..generators.len()).filter(|&k| levels[k] >= l).collect();
            group.levels.push(level);
        }
        group.strong = generators;
        for l in 0..group.levels.len() {
            group.extend_orbit(l);
            group.levels[l].pending.clear();
        }
        // drop trailing trivial levels
        while group.levels.last().is_some_and(|lv| lv.orbit.len() == 1) {
            group.levels.pop();
        }
        group
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn strong_generators(&self) -> &[Permutation] {
        &self.strong
    }

    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.point).collect()
    }

    pub fn basic_orbit_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    /// Every element, each once. Refuses groups larger than `limit`.
    pub fn elements(&self, limit: usize) -> Result<Vec<Permutation>> {
        let order = self.levels.iter().try_fold(1usize, |acc, l| acc.checked_mul(l.orbit.len()));
        match order {
            Some(k) if k <= limit => {}
            _ => {
                return Err(Error::TooLarge {
                    vertices: self.degree,
                    guard: limit,
                })
            }
        }
        // sifting writes g = u_deepest ... u_1 u_0
        let mut out = alloc::vec![Permutation::identity(self.degree)];
        for level in self.levels.iter().rev() {
            let reps: Vec<&Permutation> = level.orbit.iter().map(|&x| level.transversal[x as usize].as_ref().expect("orbit point")).collect();
            out = out.iter().flat_map(|e| reps.iter().map(move |u| e.then(u))).collect();
        }
        Ok(out)
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.sift(g.clone(), 0).0.is_identity()
    }

    /// Orbit of `x`, sorted.
    pub fn orbit(&self, x: usize) -> Vec<u32> {
        let mut seen = alloc::vec![false; self.degree];
        let mut orbit = alloc::vec![x as u32];
        seen[x] = true;
        let mut k = 0;
        while k < orbit.len() {
            let y = orbit[k] as usize;
            for g in &self.generators {
                let z = g.apply(y);
                if !seen[z] {
                    seen[z] = true;
                    orbit.push(z as u32);
                }
            }
            k += 1;
        }
        orbit.sort_unstable();
        orbit
    }

    /// All orbits, each sorted, ordered by least element.
    pub fn orbits(&self) -> Vec<Vec<u32>> {
        let mut seen = alloc::vec![false; self.degree];
        let mut out = Vec::new();
        for x in 0..self.degree {
            if !seen[x] {
                let orbit = self.orbit(x);
                for &y in &orbit {
                    seen[y as usize] = true;
                }
                out.push(orbit);
            }
        }
        out
    }

    /// Generators of the stabilizer of `x`.
    pub fn stabilizer_generators(&self, x: usize) -> Vec<Permutation> {
        let Some(first) = self.levels.first() else {
            return Vec::new();
        };
        let deeper = |group: &PermGroup| -> Vec<Permutation> {
            group
                .levels
                .get(1)
                .map(|l| l.gens.iter().map(|&k| group.strong[k].clone()).collect())
                .unwrap_or_default()
        };
        if first.point as usize == x {
            return deeper(self);
        }
        if let Some(u) = &first.transversal[x] {
            // stabilizer of x is u⁻¹ G_b u
            return deeper(self).iter().map(|h| h.conjugate_by(u)).collect();
        }
        let rebased = PermGroup::with_base(self.degree, self.generators.clone(), &[x as u32])
            .expect("generators already validated");
        deeper(&rebased)
    }

    /// The stabilizer of `x` as a group.
    pub fn stabilizer(&self, x: usize) -> PermGroup {
        PermGroup::new(self.degree, self.stabilizer_generators(x)).expect("same degree")
    }

    /// Strips `g` through levels `start..`; returns the residue and the level
    /// where it dropped out (the chain length if it sifted through).
    fn sift(&self, mut g: Permutation, start: usize) -> (Permutation, usize) {
        for j in start..self.levels.len() {
            let level = &self.levels[j];
            let x = g.apply(level.point as usize);
            match &level.transversal[x] {
                None => return (g, j),
                Some(u) => g = g.then(&u.inverse()),
            }
        }
        (g, self.levels.len())
    }

    /// Adds `h` as a strong generator to levels `from..=to`.
    fn insert(&mut self, h: Permutation, from: usize, to: usize) {
        if to == self.levels.len() {
            let point = h.first_moved().expect("residue is not the identity");
            self.levels.push(Level::new(point as u32, self.degree));
        }
        let k = self.strong.len();
        self.strong.push(h);
        for l in from..=to {
            let level = &mut self.levels[l];
            level.gens.push(k);
            for &b in &level.orbit {
                level.pending.push_back((b, k));
            }
            self.extend_orbit(l);
        }
    }

    fn extend_orbit(&mut self, l: usize) {
        let level = &mut self.levels[l];
        let mut idx = 0;
        while idx < level.orbit.len() {
            let x = level.orbit[idx] as usize;
            for gi in 0..level.gens.len() {
                let g = &self.strong[level.gens[gi]];
                let y = g.apply(x);
                if level.transversal[y].is_none() {
                    let u = level.transversal[x].as_ref().expect("orbit point").then(g);
                    level.transversal[y] = Some(u);
                    level.orbit.push(y as u32);
                    for &k in &level.gens {
                        level.pending.push_back((y as u32, k));
                    }
                }
            }
            idx += 1;
        }
    }

    fn process_pending(&mut self) {
        while let Some(l) = (0..self.levels.len()).rev().find(|&l| !self.levels[l].pending.is_empty()) {
            let (b, k) = self.levels[l].pending.pop_front().expect("non-empty");
            let level = &self.levels[l];
            let s = &self.strong[k];
            let c = s.apply(b as usize);
            let ub = level.transversal[b as usize].as_ref().expect("orbit point");
            let uc = level.transversal[c].as_ref().expect("orbit is closed");
            let h = ub.then(s).then(&uc.inverse());
            if h.is_identity() {
                continue;
            }
            let (residue, depth) = self.sift(h, l + 1);
            if !residue.is_identity() {
                self.insert(residue, l + 1, depth);
            }
        }
    }
}

/// Order of the group generated by `generators`.
pub fn group_order(degree: usize, generators: &[Permutation]) -> Result<BigUint> {
    Ok(PermGroup::new(degree, generators.to_vec())?.order())
}
