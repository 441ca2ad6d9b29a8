use super::complex::{Simplex, SimplicialComplex, ValidationError};

/// A complex together with a distinguished subcomplex over the same label table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialPair {
    total: SimplicialComplex,
    sub: SimplicialComplex,
}

impl SimplicialPair {
    pub fn new(total: SimplicialComplex, sub: SimplicialComplex) -> Result<Self, ValidationError> {
        if total.labels() != sub.labels() {
            return Err(ValidationError::LabelMismatch);
        }
        if let Some(s) = sub.all_simplices().find(|s| !total.contains(s)) {
            return Err(ValidationError::Subcomplex {
                simplex: s.vertices().to_vec(),
            });
        }
        Ok(SimplicialPair { total, sub })
    }

    /// The pair `(K, ∅)`.
    pub fn absolute(total: SimplicialComplex) -> Self {
        let sub = SimplicialComplex::empty(total.labels().to_vec());
        SimplicialPair { total, sub }
    }

    /// The pair `(K, ∂K)` where `∂K` is the pseudomanifold boundary.
    pub fn with_boundary(total: SimplicialComplex) -> Self {
        let sub = total.boundary_complex();
        SimplicialPair { total, sub }
    }

    pub fn total(&self) -> &SimplicialComplex {
        &self.total
    }

    pub fn sub(&self) -> &SimplicialComplex {
        &self.sub
    }

    pub fn is_absolute(&self) -> bool {
        self.sub.is_empty()
    }

    /// Same total complex with the subcomplex dropped.
    pub fn to_absolute(&self) -> SimplicialPair {
        Self::absolute(self.total.clone())
    }

    /// A simplex is a relative generator when it lies in the total complex but not the sub.
    pub fn is_generator(&self, s: &Simplex) -> bool {
        self.total.contains(s) && !self.sub.contains(s)
    }
}

/// Checks every structural invariant of a pair given as raw simplex lists.
///
/// Errors name the violated invariant: ordering, duplicate, face closure, or
/// subcomplex membership.
pub fn validate_pair(labels: &[String], total: &[Vec<usize>], sub: &[Vec<usize>]) -> Result<(), ValidationError> {
    let total = SimplicialComplex::new(labels.to_vec(), total.to_vec())?;
    let sub = SimplicialComplex::new(labels.to_vec(), sub.to_vec())?;
    SimplicialPair::new(total, sub).map(|_| ())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels() -> Vec<String> {
        ["a", "b", "c"].iter().map(|s| s.to_string()).collect()
    }

    fn triangle() -> Vec<Vec<usize>> {
        vec![
            vec![0],
            vec![1],
            vec![2],
            vec![0, 1],
            vec![0, 2],
            vec![1, 2],
            vec![0, 1, 2],
        ]
    }

    #[test]
    fn triangle_with_empty_sub() {
        assert_eq!(validate_pair(&labels(), &triangle(), &[]), Ok(()));
    }

    #[test]
    fn triangle_missing_edge() {
        let mut t = triangle();
        t.retain(|s| s != &vec![0, 1]);
        assert!(matches!(
            validate_pair(&labels(), &t, &[]),
            Err(ValidationError::FaceClosure { .. })
        ));
    }

    #[test]
    fn sub_not_in_total() {
        let total = vec![vec![0], vec![1], vec![2], vec![0, 1]];
        let sub = vec![vec![1], vec![2], vec![1, 2]];
        assert_eq!(
            validate_pair(&labels(), &total, &sub),
            Err(ValidationError::Subcomplex { simplex: vec![1, 2] })
        );
    }
}
