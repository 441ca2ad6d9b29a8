use std::collections::BTreeSet;

use super::chain::Chain;
use super::complex::{Simplex, SimplicialComplex};
use super::map::SimplicialMap;
use super::pair::SimplicialPair;
use crate::algebra;

/// Staircase triangulation of a product of pairs.
///
/// The vertex `(i, j)` has index `i * nb + j` and label `"a_i:b_j"`, so vertex
/// order is lexicographic in the factor orders. A simplex is a chain of
/// vertices nondecreasing in both coordinates whose projections are simplices
/// of the factors. The subcomplex is `A × B' ∪ A' × B`.
#[derive(Debug, Clone)]
pub struct ProductPair {
    first: SimplicialPair,
    second: SimplicialPair,
    pair: SimplicialPair,
}

/// Monotone lattice paths from `(0,0)` to `(p,q)`, each with its shuffle sign.
/// `true` in a path marks a step in the first coordinate.
pub fn shuffles(p: usize, q: usize) -> Vec<(Vec<bool>, bool)> {
    fn go(p: usize, q: usize, path: &mut Vec<bool>, inversions: usize, out: &mut Vec<(Vec<bool>, bool)>) {
        if p == 0 && q == 0 {
            out.push((path.clone(), inversions % 2 == 1));
            return;
        }
        if p > 0 {
            // Every second-coordinate step already taken precedes this one.
            let taken_second = path.iter().filter(|&&s| !s).count();
            path.push(true);
            go(p - 1, q, path, inversions + taken_second, out);
            path.pop();
        }
        if q > 0 {
            path.push(false);
            go(p, q - 1, path, inversions, out);
            path.pop();
        }
    }
    let mut out = Vec::new();
    go(p, q, &mut Vec::with_capacity(p + q), 0, &mut out);
    out
}

impl ProductPair {
    pub fn new(first: SimplicialPair, second: SimplicialPair) -> Self {
        let la = first.total().labels();
        let lb = second.total().labels();
        let nb = lb.len();
        let labels: Vec<String> = la
            .iter()
            .flat_map(|a| lb.iter().map(move |b| format!("{a}:{b}")))
            .collect();
        let mut set = BTreeSet::new();
        for sa in maximal(first.total()) {
            for sb in maximal(second.total()) {
                for (path, _) in shuffles(sa.dim(), sb.dim()) {
                    let s = staircase(&sa, &sb, &path, nb);
                    set.extend(s.all_faces());
                }
            }
        }
        let total = SimplicialComplex::from_set(labels, set);
        let sub = total.filter(|s| {
            let (pa, pb) = split_simplex(s, nb);
            first.sub().contains(&pa) || second.sub().contains(&pb)
        });
        let pair = SimplicialPair::new(total, sub).expect("product sub is a subcomplex");
        ProductPair { first, second, pair }
    }

    pub fn first(&self) -> &SimplicialPair {
        &self.first
    }

    pub fn second(&self) -> &SimplicialPair {
        &self.second
    }

    pub fn pair(&self) -> &SimplicialPair {
        &self.pair
    }

    pub fn total(&self) -> &SimplicialComplex {
        self.pair.total()
    }

    fn nb(&self) -> usize {
        self.second.total().labels().len()
    }

    pub fn vertex(&self, i: usize, j: usize) -> usize {
        i * self.nb() + j
    }

    pub fn split(&self, v: usize) -> (usize, usize) {
        (v / self.nb(), v % self.nb())
    }

    /// The two projections of a product simplex (as vertex sets).
    pub fn project(&self, s: &Simplex) -> (Simplex, Simplex) {
        split_simplex(s, self.nb())
    }

    /// Eilenberg–Zilber image of a pair of simplices.
    pub fn cross_simplices(&self, a: &Simplex, b: &Simplex) -> Chain {
        let mut out = Chain::zero(a.dim() + b.dim());
        for (path, negative) in shuffles(a.dim(), b.dim()) {
            let s = staircase(a, b, &path, self.nb());
            out.add_term(s, if negative { algebra::int(-1) } else { algebra::int(1) });
        }
        out
    }

    /// Bilinear extension of [`ProductPair::cross_simplices`].
    pub fn cross_chain(&self, a: &Chain, b: &Chain) -> Chain {
        let mut out = Chain::zero(a.degree() + b.degree());
        for (sa, ca) in a.terms() {
            for (sb, cb) in b.terms() {
                let coefficient = ca * cb;
                for (s, c) in self.cross_simplices(sa, sb).terms() {
                    out.add_term(s.clone(), c * &coefficient);
                }
            }
        }
        out
    }

    fn projection(&self, onto_first: bool, target: SimplicialPair) -> SimplicialMap {
        let n = self.total().labels().len();
        let assignment = (0..n)
            .map(|v| {
                let (i, j) = self.split(v);
                Some(if onto_first { i } else { j })
            })
            .collect();
        let source_sub = if onto_first {
            self.total().filter(|s| target.sub().contains(&self.project(s).0))
        } else {
            self.total().filter(|s| target.sub().contains(&self.project(s).1))
        };
        let source = SimplicialPair::new(self.total().clone(), source_sub).expect("preimage of a subcomplex");
        SimplicialMap::new(source, target, assignment).expect("projections are simplicial maps of pairs")
    }

    /// `(x, u) ↦ x` from `(product, π⁻¹(A'))` to the first factor pair.
    pub fn projection_first(&self) -> SimplicialMap {
        self.projection(true, self.first.clone())
    }

    /// `(x, u) ↦ u` from `(product, π⁻¹(B'))` to the second factor pair.
    pub fn projection_second(&self) -> SimplicialMap {
        self.projection(false, self.second.clone())
    }

    /// Simplices of the product lying over a subcomplex of each factor.
    pub fn restricted_total(&self, a: &SimplicialComplex, b: &SimplicialComplex) -> SimplicialComplex {
        self.total().filter(|s| {
            let (pa, pb) = self.project(s);
            a.contains(&pa) && b.contains(&pb)
        })
    }
}

fn maximal(c: &SimplicialComplex) -> Vec<Simplex> {
    let mut covered: BTreeSet<Simplex> = BTreeSet::new();
    let top = c.dim().map_or(0, |d| d + 1);
    let mut out = Vec::new();
    for k in (0..top).rev() {
        for s in c.simplices(k) {
            if !covered.contains(s) {
                out.push(s.clone());
            }
            if k > 0 {
                for (_, f) in s.faces() {
                    covered.insert(f);
                }
            }
        }
    }
    out
}

fn staircase(a: &Simplex, b: &Simplex, path: &[bool], nb: usize) -> Simplex {
    let (av, bv) = (a.vertices(), b.vertices());
    let (mut i, mut j) = (0, 0);
    let mut vertices = Vec::with_capacity(path.len() + 1);
    vertices.push(av[0] * nb + bv[0]);
    for &step in path {
        if step {
            i += 1;
        } else {
            j += 1;
        }
        vertices.push(av[i] * nb + bv[j]);
    }
    Simplex::from_sorted_unchecked(vertices)
}

fn split_simplex(s: &Simplex, nb: usize) -> (Simplex, Simplex) {
    let a = s.vertices().iter().map(|v| v / nb).collect();
    let b = s.vertices().iter().map(|v| v % nb).collect();
    (Simplex::from_unsorted(a), Simplex::from_unsorted(b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::Homology;

    fn circle() -> SimplicialPair {
        SimplicialPair::absolute(SimplicialComplex::from_facets_numbered(3, &[&[0, 1], &[1, 2], &[0, 2]]))
    }

    #[test]
    fn shuffle_counts_and_signs() {
        assert_eq!(shuffles(1, 1).len(), 2);
        assert_eq!(shuffles(2, 3).len(), 10);
        let signs: Vec<bool> = shuffles(1, 1).into_iter().map(|(_, s)| s).collect();
        assert_eq!(signs, vec![false, true]);
    }

    #[test]
    fn square_is_two_triangles() {
        let edge = SimplicialPair::absolute(SimplicialComplex::from_facets_numbered(2, &[&[0, 1]]));
        let p = ProductPair::new(edge.clone(), edge);
        assert_eq!(p.total().f_vector(), vec![4, 5, 2]);
    }

    #[test]
    fn point_times_complex() {
        let pt = SimplicialPair::absolute(SimplicialComplex::from_facets_numbered(1, &[&[0]]));
        let p = ProductPair::new(pt, circle());
        assert_eq!(p.total().f_vector(), circle().total().f_vector());
        let e = Simplex::new(vec![0, 1]).unwrap();
        assert_eq!(p.cross_simplices(&Simplex::new(vec![0]).unwrap(), &e), Chain::single(e));
    }

    #[test]
    fn torus_model() {
        let p = ProductPair::new(circle(), circle());
        assert_eq!(p.total().euler_characteristic(), 0);
        assert_eq!(Homology::compute(p.pair()).betti_numbers(), vec![1, 2, 1]);
    }

    #[test]
    fn cross_of_cycles_is_a_cycle() {
        let p = ProductPair::new(circle(), circle());
        let h = Homology::compute(&circle());
        let z = p.cross_chain(&h.cycle(1, 0), &h.cycle(1, 0));
        assert!(!z.is_zero());
        assert!(z.boundary().is_zero());
    }
}
