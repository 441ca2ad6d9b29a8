use std::collections::HashMap;

use num_traits::{One, Zero};
use thiserror::Error;

use super::chain::{Chain, Cochain};
use super::complex::Simplex;
use super::pair::SimplicialPair;
use crate::algebra::{self, Rational, RationalMatrix, RationalVector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomologyError {
    #[error("chain of degree {degree} is not a relative cycle")]
    NotACycle { degree: usize },
    #[error("cochain of degree {degree} is not a relative cocycle")]
    NotACocycle { degree: usize },
    #[error("simplex {0:?} does not belong to the complex")]
    NotInComplex(Simplex),
    #[error("class has {got} coordinates but H_{degree} has dimension {expected}")]
    WrongDimension { degree: usize, expected: usize, got: usize },
}

/// A homology class written in a chosen basis of `H_degree`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HomologyClass {
    pub degree: usize,
    pub coords: RationalVector,
}

impl HomologyClass {
    pub fn new(degree: usize, coords: RationalVector) -> Self {
        HomologyClass { degree, coords }
    }

    pub fn zero(degree: usize, dim: usize) -> Self {
        HomologyClass {
            degree,
            coords: vec![Rational::zero(); dim],
        }
    }

    pub fn basis(degree: usize, dim: usize, j: usize) -> Self {
        let mut c = Self::zero(degree, dim);
        c.coords[j] = Rational::one();
        c
    }

    pub fn is_zero(&self) -> bool {
        algebra::is_zero_vector(&self.coords)
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        HomologyClass {
            degree: self.degree,
            coords: self.coords.iter().map(|x| x * factor).collect(),
        }
    }

    /// Whether `self = factor * other` for some rational `factor`, returning it.
    pub fn multiple_of(&self, other: &HomologyClass) -> Option<Rational> {
        if self.degree != other.degree || self.coords.len() != other.coords.len() {
            return None;
        }
        let Some(pivot) = other.coords.iter().position(|x| !x.is_zero()) else {
            return self.is_zero().then(Rational::zero);
        };
        let factor = &self.coords[pivot] / &other.coords[pivot];
        (other.scale(&factor) == *self).then_some(factor)
    }
}

/// Relative simplicial chain complex `C_*(N, A)` with dense boundary matrices.
#[derive(Debug, Clone)]
pub struct ChainComplex {
    generators: Vec<Vec<Simplex>>,
    positions: Vec<HashMap<Simplex, usize>>,
    boundaries: Vec<RationalMatrix>,
}

impl ChainComplex {
    /// Generators are the simplices of the total complex not in the sub;
    /// faces lying in the sub are dropped from the boundary.
    pub fn of(pair: &SimplicialPair) -> Self {
        let top = pair.total().dim().map_or(0, |d| d + 1);
        let generators: Vec<Vec<Simplex>> = (0..top)
            .map(|k| {
                pair.total()
                    .simplices(k)
                    .iter()
                    .filter(|s| !pair.sub().contains(s))
                    .cloned()
                    .collect()
            })
            .collect();
        let positions: Vec<HashMap<Simplex, usize>> = generators
            .iter()
            .map(|g| g.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect())
            .collect();
        let mut boundaries = Vec::with_capacity(top);
        for k in 0..top {
            if k == 0 {
                boundaries.push(RationalMatrix::zeros(0, generators[0].len()));
                continue;
            }
            let mut d = RationalMatrix::zeros(generators[k - 1].len(), generators[k].len());
            for (j, s) in generators[k].iter().enumerate() {
                for (i, face) in s.faces() {
                    if let Some(&row) = positions[k - 1].get(&face) {
                        d[(row, j)] = algebra::sign(i);
                    }
                }
            }
            boundaries.push(d);
        }
        let complex = ChainComplex {
            generators,
            positions,
            boundaries,
        };
        for k in 1..top {
            assert!(
                (&complex.boundaries[k - 1] * &complex.boundaries[k]).is_zero(),
                "boundary of boundary is nonzero in degree {k}"
            );
        }
        complex
    }

    /// Number of degrees carried (top dimension + 1, or 0 when empty).
    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn generators(&self, k: usize) -> &[Simplex] {
        self.generators.get(k).map_or(&[], Vec::as_slice)
    }

    pub fn rank(&self, k: usize) -> usize {
        self.generators(k).len()
    }

    /// `∂_k : C_k -> C_{k-1}`, a `rank(k-1) x rank(k)` matrix.
    pub fn boundary(&self, k: usize) -> RationalMatrix {
        match self.boundaries.get(k) {
            Some(d) => d.clone(),
            None => RationalMatrix::zeros(self.rank(k.wrapping_sub(1)), 0),
        }
    }

    pub fn position(&self, s: &Simplex) -> Option<usize> {
        self.positions.get(s.dim())?.get(s).copied()
    }

    /// Dense coordinates of a chain, ignoring terms that are not generators.
    pub fn chain_vector(&self, chain: &Chain) -> RationalVector {
        let mut v = vec![Rational::zero(); self.rank(chain.degree())];
        for (s, c) in chain.terms() {
            if let Some(i) = self.position(s) {
                v[i] += c;
            }
        }
        v
    }

    pub fn cochain_vector(&self, cochain: &Cochain) -> RationalVector {
        let mut v = vec![Rational::zero(); self.rank(cochain.degree())];
        for (s, c) in cochain.terms() {
            if let Some(i) = self.position(s) {
                v[i] += c;
            }
        }
        v
    }

    pub fn chain_from_vector(&self, k: usize, v: &[Rational]) -> Chain {
        let mut c = Chain::zero(k);
        for (s, x) in self.generators(k).iter().zip(v) {
            c.add_term(s.clone(), x.clone());
        }
        c
    }

    pub fn cochain_from_vector(&self, k: usize, v: &[Rational]) -> Cochain {
        let mut c = Cochain::zero(k);
        for (s, x) in self.generators(k).iter().zip(v) {
            c.add_term(s.clone(), x.clone());
        }
        c
    }
}

/// Homology and cohomology of a pair over Q with Kronecker-dual bases.
///
/// For each degree `k` the cycle representatives `a_j^k` complete a basis of
/// `Im ∂_{k+1}` to a basis of `ker ∂_k` (greedily, in kernel-basis order), and
/// the cocycles `x_i^k` satisfy `<x_i^k, a_j^k> = δ_ij` and vanish on boundaries.
#[derive(Debug, Clone)]
pub struct Homology {
    pair: SimplicialPair,
    complex: ChainComplex,
    cycles: Vec<RationalMatrix>,
    cocycles: Vec<RationalMatrix>,
}

impl Homology {
    pub fn compute(pair: &SimplicialPair) -> Self {
        let complex = ChainComplex::of(pair);
        let mut cycles = Vec::with_capacity(complex.len());
        let mut cocycles = Vec::with_capacity(complex.len());
        for k in 0..complex.len() {
            let n = complex.rank(k);
            let kernel = complex.boundary(k).kernel_basis();
            let next = (k + 1 < complex.len()).then(|| complex.boundary(k + 1));
            let image: Vec<RationalVector> = match &next {
                Some(d) => {
                    let cols = d.independent_columns();
                    cols.iter().map(|&j| d.column(j)).collect()
                }
                None => Vec::new(),
            };
            let mut combined = image.clone();
            combined.extend(kernel.iter().cloned());
            let chosen: Vec<RationalVector> = RationalMatrix::from_columns(n, &combined)
                .independent_columns()
                .into_iter()
                .filter(|&j| j >= image.len())
                .map(|j| combined[j].clone())
                .collect();
            let a = RationalMatrix::from_columns(n, &chosen);

            let cocycle_space = match &next {
                Some(d) => d.transpose().kernel_basis(),
                None => RationalMatrix::identity(n).columns(),
            };
            let c = RationalMatrix::from_columns(n, &cocycle_space);
            let pairing = &a.transpose() * &c;
            let m = chosen.len();
            let duals: Vec<RationalVector> = (0..m)
                .map(|i| {
                    let mut e = vec![Rational::zero(); m];
                    e[i] = Rational::one();
                    let y = pairing
                        .solve(&e)
                        .expect("pairing system has matching dimensions")
                        .expect("Kronecker pairing is perfect over a field");
                    c.mul_vector(&y).expect("dimensions agree")
                })
                .collect();
            let x = RationalMatrix::from_columns(n, &duals);
            debug_assert_eq!(&x.transpose() * &a, RationalMatrix::identity(m));
            cycles.push(a);
            cocycles.push(x);
        }
        Homology {
            pair: pair.clone(),
            complex,
            cycles,
            cocycles,
        }
    }

    pub fn pair(&self) -> &SimplicialPair {
        &self.pair
    }

    pub fn chain_complex(&self) -> &ChainComplex {
        &self.complex
    }

    /// Number of degrees for which chain groups exist.
    pub fn degrees(&self) -> usize {
        self.complex.len()
    }

    pub fn betti(&self, k: usize) -> usize {
        self.cycles.get(k).map_or(0, RationalMatrix::cols)
    }

    pub fn betti_numbers(&self) -> Vec<usize> {
        (0..self.degrees()).map(|k| self.betti(k)).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.betti_numbers()
            .iter()
            .enumerate()
            .map(|(k, &b)| if k % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }

    /// Columns are the cycle representatives `a_j^k` over the generators of degree `k`.
    pub fn cycle_matrix(&self, k: usize) -> RationalMatrix {
        self.cycles
            .get(k)
            .cloned()
            .unwrap_or_else(|| RationalMatrix::zeros(self.complex.rank(k), 0))
    }

    pub fn cocycle_matrix(&self, k: usize) -> RationalMatrix {
        self.cocycles
            .get(k)
            .cloned()
            .unwrap_or_else(|| RationalMatrix::zeros(self.complex.rank(k), 0))
    }

    pub fn cycle(&self, k: usize, j: usize) -> Chain {
        self.complex.chain_from_vector(k, &self.cycles[k].column(j))
    }

    pub fn cocycle(&self, k: usize, j: usize) -> Cochain {
        self.complex.cochain_from_vector(k, &self.cocycles[k].column(j))
    }

    pub fn basis_class(&self, k: usize, j: usize) -> HomologyClass {
        HomologyClass::basis(k, self.betti(k), j)
    }

    pub fn zero_class(&self, k: usize) -> HomologyClass {
        HomologyClass::zero(k, self.betti(k))
    }

    /// `<x_i^k, a_j^k>` for all `i, j`.
    pub fn pairing_matrix(&self, k: usize) -> RationalMatrix {
        &self.cocycle_matrix(k).transpose() * &self.cycle_matrix(k)
    }

    fn check_dimension(&self, k: usize, len: usize) -> Result<(), HomologyError> {
        if len != self.betti(k) {
            return Err(HomologyError::WrongDimension {
                degree: k,
                expected: self.betti(k),
                got: len,
            });
        }
        Ok(())
    }

    /// A cycle representing the class: `Σ_j coords_j a_j^k`.
    pub fn representative(&self, class: &HomologyClass) -> Result<Chain, HomologyError> {
        let k = class.degree;
        self.check_dimension(k, class.coords.len())?;
        if self.betti(k) == 0 {
            return Ok(Chain::zero(k));
        }
        let v = self.cycles[k].mul_vector(&class.coords).expect("dimension checked");
        Ok(self.complex.chain_from_vector(k, &v))
    }

    /// A cocycle representing `Σ_i coords_i x_i^k`.
    pub fn cohomology_representative(&self, k: usize, coords: &[Rational]) -> Result<Cochain, HomologyError> {
        self.check_dimension(k, coords.len())?;
        if self.betti(k) == 0 {
            return Ok(Cochain::zero(k));
        }
        let v = self.cocycles[k].mul_vector(coords).expect("dimension checked");
        Ok(self.complex.cochain_from_vector(k, &v))
    }

    /// Coordinates of a relative cycle in the chosen basis. Terms on simplices
    /// of the subcomplex are discarded first.
    pub fn class_of(&self, chain: &Chain) -> Result<HomologyClass, HomologyError> {
        let k = chain.degree();
        if let Some((s, _)) = chain.terms().find(|(s, _)| !self.pair.total().contains(s)) {
            return Err(HomologyError::NotInComplex(s.clone()));
        }
        if k >= self.degrees() {
            return Ok(HomologyClass::zero(k, 0));
        }
        let v = self.complex.chain_vector(chain);
        if !algebra::is_zero_vector(&self.complex.boundary(k).mul_vector(&v).expect("generator counts agree")) {
            return Err(HomologyError::NotACycle { degree: k });
        }
        let coords = self.cocycles[k]
            .transpose()
            .mul_vector(&v)
            .expect("generator counts agree");
        Ok(HomologyClass::new(k, coords))
    }

    /// Coordinates of a relative cocycle in the dual basis `x_i^k`.
    pub fn cohomology_class_of(&self, cochain: &Cochain) -> Result<RationalVector, HomologyError> {
        let k = cochain.degree();
        if let Some((s, _)) = cochain.terms().find(|(s, _)| !self.pair.total().contains(s)) {
            return Err(HomologyError::NotInComplex(s.clone()));
        }
        if k >= self.degrees() {
            return Ok(Vec::new());
        }
        let v = self.complex.cochain_vector(cochain);
        if k + 1 < self.degrees() {
            let delta = self.complex.boundary(k + 1).transpose();
            if !algebra::is_zero_vector(&delta.mul_vector(&v).expect("ranks agree")) {
                return Err(HomologyError::NotACocycle { degree: k });
            }
        }
        Ok(self.cycles[k]
            .transpose()
            .mul_vector(&v)
            .expect("generator counts agree"))
    }
}
