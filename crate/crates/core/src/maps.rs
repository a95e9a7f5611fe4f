//! Turning vertex rules into verified index maps.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graphs::{Adjacency, CpmGraph, Vertex};
use crate::permgroup::Permutation;

/// Applies `rule` to every vertex of `src` and looks the image up in `dst`.
/// The result is checked to be a bijection preserving adjacency.
pub(crate) fn realize(
    src: &CpmGraph,
    dst: &CpmGraph,
    name: &'static str,
    rule: impl Fn(&Vertex) -> Vertex,
) -> Result<Permutation> {
    if src.order() != dst.order() {
        return Err(Error::NotAnIsomorphism(format!(
            "{name}: orders {} and {} differ",
            src.order(),
            dst.order()
        )));
    }
    let images = src
        .vertices()
        .iter()
        .map(|x| dst.index_of(&rule(x)).map(|y| y as u32).ok_or(Error::NotPreserved(name)))
        .collect::<Result<Vec<u32>>>()?;
    let map = Permutation::from_images(images).map_err(|_| Error::NotAnIsomorphism(format!("{name} is not injective")))?;
    check_isomorphism(src, dst, &map)?;
    Ok(map)
}

/// Exhaustive check that `map` sends edges of `a` onto edges of `b`.
pub fn check_isomorphism<A: Adjacency + ?Sized, B: Adjacency + ?Sized>(a: &A, b: &B, map: &Permutation) -> Result<()> {
    if map.degree() != a.order() || a.order() != b.order() {
        return Err(Error::NotAnIsomorphism("vertex counts differ".into()));
    }
    if a.edge_count() != b.edge_count() {
        return Err(Error::NotAnIsomorphism("edge counts differ".into()));
    }
    for x in 0..a.order() {
        for &y in a.neighbors(x) {
            if !b.is_adjacent(map.apply(x), map.apply(y as usize)) {
                return Err(Error::NotAnIsomorphism(format!("edge {x}-{y} is not preserved")));
            }
        }
    }
    Ok(())
}

/// Exhaustive check that `map` is an automorphism of `g`.
pub fn check_automorphism<G: Adjacency + ?Sized>(g: &G, map: &Permutation) -> Result<()> {
    check_isomorphism(g, g, map).map_err(|e| match e {
        Error::NotAnIsomorphism(msg) => Error::NotAnAutomorphism(msg),
        other => other,
    })
}
