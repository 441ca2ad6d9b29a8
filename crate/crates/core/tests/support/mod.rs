//! Independent oracles for integration and acceptance tests. Nothing here
//! touches the library's homology, orientation or Lefschetz code; only the
//! raw simplex lists of complexes and vertex assignments of maps are read.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use lefcon::algebra::Rational;
use lefcon::simplicial::{Simplex, SimplicialComplex, SimplicialMap, SimplicialPair};
use num_traits::Zero;

const P: i64 = 1_000_003;

fn inv_mod(a: i64) -> i64 {
    // Fermat: a^(p-2) mod p.
    let (mut base, mut exp, mut acc) = (a.rem_euclid(P), P - 2, 1i64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % P;
        }
        base = base * base % P;
        exp >>= 1;
    }
    acc
}

/// Rank over GF(p) by plain row reduction.
pub fn rank_mod_p(mut rows: Vec<Vec<i64>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = inv_mod(rows[rank][c]);
        for x in rows[rank].iter_mut() {
            *x = *x * inv % P;
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[c] != 0 {
                let factor = row[c];
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x = (*x - factor * p).rem_euclid(P);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Relative generators of a pair by dimension, from the raw simplex lists.
fn generators(pair: &SimplicialPair) -> Vec<Vec<Vec<usize>>> {
    let mut by_dim: Vec<Vec<Vec<usize>>> = Vec::new();
    for s in pair.total().all_simplices() {
        if pair.sub().contains(s) {
            continue;
        }
        let d = s.vertices().len() - 1;
        if by_dim.len() <= d {
            by_dim.resize(d + 1, Vec::new());
        }
        by_dim[d].push(s.vertices().to_vec());
    }
    by_dim
}

/// Betti numbers of a pair over GF(p), built from scratch. Agrees with the
/// rational Betti numbers whenever no p-torsion occurs (always, on the
/// fixtures used here).
pub fn betti_mod_p(pair: &SimplicialPair) -> Vec<usize> {
    let gens = generators(pair);
    let top = pair.total().dim().map_or(0, |d| d + 1);
    let count = |k: usize| gens.get(k).map_or(0, Vec::len);
    let rank_boundary = |k: usize| -> usize {
        if k == 0 || count(k) == 0 || count(k - 1) == 0 {
            return 0;
        }
        let index: BTreeMap<&Vec<usize>, usize> = gens[k - 1].iter().enumerate().map(|(i, s)| (s, i)).collect();
        let rows: Vec<Vec<i64>> = gens[k]
            .iter()
            .map(|s| {
                let mut row = vec![0i64; count(k - 1)];
                for i in 0..s.len() {
                    let mut face = s.clone();
                    face.remove(i);
                    if let Some(&j) = index.get(&face) {
                        row[j] = if i % 2 == 0 { 1 } else { P - 1 };
                    }
                }
                row
            })
            .collect();
        rank_mod_p(rows)
    };
    let ranks: Vec<usize> = (0..=top).map(rank_boundary).collect();
    (0..top).map(|k| count(k) - ranks[k] - ranks[k + 1]).collect()
}

/// Alternating count of relative generators.
pub fn euler_from_counts(pair: &SimplicialPair) -> i64 {
    generators(pair)
        .iter()
        .enumerate()
        .map(|(k, g)| if k % 2 == 0 { g.len() as i64 } else { -(g.len() as i64) })
        .sum()
}

/// Image of a barycentric point under a vertex map, computed directly.
pub fn push_point(f: &SimplicialMap, simplex: &Simplex, weights: &[Rational]) -> BTreeMap<usize, Rational> {
    let mut out: BTreeMap<usize, Rational> = BTreeMap::new();
    for (&v, w) in simplex.vertices().iter().zip(weights) {
        *out.entry(f.assignment()[v].expect("vertex has an image"))
            .or_insert_with(Rational::zero) += w;
    }
    out.retain(|_, w| !w.is_zero());
    out
}

/// Checks a claimed coincidence point from first principles.
pub fn is_coincidence(f: &SimplicialMap, g: &SimplicialMap, simplex: &Simplex, weights: &[Rational]) -> bool {
    let one: Rational = weights.iter().cloned().sum();
    f.source().total().contains(simplex)
        && weights.len() == simplex.vertices().len()
        && weights.iter().all(|w| *w > Rational::zero())
        && one == Rational::from_integer(1.into())
        && push_point(f, simplex, weights) == push_point(g, simplex, weights)
}

/// Whether every maximal simplex of the target is hit, by direct enumeration.
pub fn hits_every_facet(f: &SimplicialMap) -> bool {
    let images: BTreeSet<Vec<usize>> = f
        .source()
        .total()
        .all_simplices()
        .map(|s| {
            let set: BTreeSet<usize> = s.vertices().iter().map(|&v| f.assignment()[v].unwrap()).collect();
            set.into_iter().collect()
        })
        .collect();
    let target = f.target().total();
    let all: Vec<&Simplex> = target.all_simplices().collect();
    all.iter()
        .filter(|s| {
            !all.iter().any(|t| {
                t.vertices().len() > s.vertices().len() && s.vertices().iter().all(|v| t.vertices().contains(v))
            })
        })
        .all(|s| images.contains(s.vertices()))
}

/// For a vertex permutation: a fixed point exists iff some simplex is
/// mapped onto itself (its barycenter is then fixed).
pub fn permutation_has_fixed_point(f: &SimplicialMap) -> bool {
    f.source().total().all_simplices().any(|s| {
        let image: BTreeSet<usize> = s.vertices().iter().map(|&v| f.assignment()[v].unwrap()).collect();
        image == s.vertices().iter().copied().collect()
    })
}

/// Signed count of how often the edge `{0, 1}` of a target polygon is
/// covered, following the oriented polygon `0 -> 1 -> ... -> n-1 -> 0`.
pub fn winding_number(f: &SimplicialMap, source_len: usize) -> i64 {
    (0..source_len)
        .map(|i| {
            let a = f.assignment()[i].unwrap();
            let b = f.assignment()[(i + 1) % source_len].unwrap();
            match (a, b) {
                (0, 1) => 1,
                (1, 0) => -1,
                _ => 0,
            }
        })
        .sum()
}

/// Closure of a facet list on labels `0..vertex_count`, every label a vertex.
pub fn complex_from_facets(vertex_count: usize, facets: &[BTreeSet<usize>]) -> SimplicialComplex {
    let mut lists: Vec<Vec<usize>> = facets.iter().map(|f| f.iter().copied().collect()).collect();
    lists.extend((0..vertex_count).map(|v| vec![v]));
    let refs: Vec<&[usize]> = lists.iter().map(Vec::as_slice).collect();
    SimplicialComplex::from_facets_numbered(vertex_count, &refs)
}
