use std::collections::BTreeMap;
use std::ops::{Add, Neg};

use num_traits::Zero;

use super::complex::Simplex;
use crate::algebra::Rational;

/// A finite rational combination of `degree`-simplices, stored sparsely.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chain {
    degree: usize,
    terms: BTreeMap<Simplex, Rational>,
}

/// A rational linear functional on `degree`-chains, stored by its nonzero values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cochain {
    degree: usize,
    values: BTreeMap<Simplex, Rational>,
}

macro_rules! sparse_combination {
    ($ty:ident, $field:ident) => {
        impl $ty {
            pub fn zero(degree: usize) -> Self {
                $ty {
                    degree,
                    $field: BTreeMap::new(),
                }
            }

            pub fn degree(&self) -> usize {
                self.degree
            }

            pub fn is_zero(&self) -> bool {
                self.$field.is_empty()
            }

            pub fn coefficient(&self, s: &Simplex) -> Rational {
                self.$field.get(s).cloned().unwrap_or_else(Rational::zero)
            }

            pub fn terms(&self) -> impl Iterator<Item = (&Simplex, &Rational)> {
                self.$field.iter()
            }

            /// Adds `coefficient * s`; `s` must have the chain's degree.
            pub fn add_term(&mut self, s: Simplex, coefficient: Rational) {
                assert_eq!(s.dim(), self.degree, "degree mismatch");
                if coefficient.is_zero() {
                    return;
                }
                let entry = self.$field.entry(s);
                match entry {
                    std::collections::btree_map::Entry::Vacant(v) => {
                        v.insert(coefficient);
                    }
                    std::collections::btree_map::Entry::Occupied(mut o) => {
                        *o.get_mut() += coefficient;
                        if o.get().is_zero() {
                            o.remove();
                        }
                    }
                }
            }

            pub fn scale(&self, factor: &Rational) -> Self {
                let mut out = Self::zero(self.degree);
                for (s, c) in &self.$field {
                    out.add_term(s.clone(), c * factor);
                }
                out
            }

            /// Drops every term whose simplex fails `keep`.
            pub fn retain(&mut self, mut keep: impl FnMut(&Simplex) -> bool) {
                self.$field.retain(|s, _| keep(s));
            }
        }

        impl FromIterator<(Simplex, Rational)> for $ty {
            /// Panics on an empty iterator; use `zero` for empty combinations.
            fn from_iter<I: IntoIterator<Item = (Simplex, Rational)>>(iter: I) -> Self {
                let mut it = iter.into_iter().peekable();
                let degree = it.peek().expect("degree is unknown for an empty sum").0.dim();
                let mut out = Self::zero(degree);
                for (s, c) in it {
                    out.add_term(s, c);
                }
                out
            }
        }

        impl Add<&$ty> for &$ty {
            type Output = $ty;

            fn add(self, rhs: &$ty) -> $ty {
                assert_eq!(self.degree, rhs.degree, "degree mismatch");
                let mut out = self.clone();
                for (s, c) in &rhs.$field {
                    out.add_term(s.clone(), c.clone());
                }
                out
            }
        }

        impl Neg for &$ty {
            type Output = $ty;

            fn neg(self) -> $ty {
                self.scale(&-crate::algebra::int(1))
            }
        }
    };
}

sparse_combination!(Chain, terms);
sparse_combination!(Cochain, values);

impl Chain {
    pub fn single(s: Simplex) -> Self {
        let mut c = Chain::zero(s.dim());
        c.add_term(s, crate::algebra::int(1));
        c
    }

    /// Alternating-sign face formula. The boundary of a 0-chain is recorded as
    /// the zero chain of degree 0.
    pub fn boundary(&self) -> Chain {
        if self.degree == 0 {
            return Chain::zero(0);
        }
        let mut out = Chain::zero(self.degree - 1);
        for (s, c) in &self.terms {
            for (i, face) in s.faces() {
                let term = if i % 2 == 0 { c.clone() } else { -c.clone() };
                out.add_term(face, term);
            }
        }
        out
    }
}

impl Cochain {
    /// The cochain taking value 1 on every listed vertex.
    pub fn unit(vertices: impl IntoIterator<Item = usize>) -> Self {
        let mut c = Cochain::zero(0);
        for v in vertices {
            c.add_term(Simplex::from_sorted_unchecked(vec![v]), crate::algebra::int(1));
        }
        c
    }

    pub fn value(&self, s: &Simplex) -> Rational {
        self.coefficient(s)
    }

    /// Evaluation `<self, chain>`; `None` when degrees differ.
    pub fn evaluate(&self, chain: &Chain) -> Option<Rational> {
        if self.degree != chain.degree {
            return None;
        }
        let (small, large_is_values) = if self.values.len() <= chain.terms.len() {
            (&self.values, true)
        } else {
            (&chain.terms, false)
        };
        let other = if large_is_values { &chain.terms } else { &self.values };
        Some(small.iter().fold(Rational::zero(), |acc, (s, a)| match other.get(s) {
            Some(b) => acc + a * b,
            None => acc,
        }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    fn s(v: &[usize]) -> Simplex {
        Simplex::new(v.to_vec()).unwrap()
    }

    #[test]
    fn boundary_of_boundary_vanishes_on_a_tetrahedron() {
        let t = Chain::single(s(&[0, 1, 2, 3]));
        let b = t.boundary();
        assert_eq!(b.terms().count(), 4);
        assert!(b.boundary().is_zero());
    }

    #[test]
    fn terms_cancel() {
        let mut c = Chain::single(s(&[0, 1]));
        c.add_term(s(&[0, 1]), int(-1));
        assert!(c.is_zero());
    }

    #[test]
    fn evaluation_checks_degree() {
        let x: Cochain = [(s(&[0, 1]), int(3))].into_iter().collect();
        let a: Chain = [(s(&[0, 1]), int(2)), (s(&[1, 2]), int(5))].into_iter().collect();
        assert_eq!(x.evaluate(&a), Some(int(6)));
        assert_eq!(x.evaluate(&Chain::single(s(&[0]))), None);
    }
}
