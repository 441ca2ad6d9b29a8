use std::fmt;

use super::ControlError;
use crate::algebra::RationalMatrix;
use crate::simplicial::{Homology, SimplicialMap};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Clause {
    /// The manifold is a surface.
    Surface,
    /// The coincidence set is acyclic.
    Acyclic,
    /// Every component is a homology `m`-sphere with `(m, n)` in the admissible table.
    HomologySphere,
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Clause::Surface => "a1",
            Clause::Acyclic => "a2",
            Clause::HomologySphere => "a3",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RemovabilityReport {
    /// Every clause that holds, in order a1, a2, a3.
    pub clauses: Vec<Clause>,
    /// Whether the obstruction-vanishing condition is certified by some clause.
    pub condition_holds: bool,
    /// Top-degree map of the local surrogate pairs, when supplied.
    pub local_matrix: Option<RationalMatrix>,
    /// Whether that map is zero; `None` without local data.
    pub local_zero: Option<bool>,
    pub conclusion: bool,
}

/// `(m, n)` pairs for which a homology `m`-sphere satisfies the condition:
/// `m = 4, n ≥ 6`; `m = 5, n ≥ 7`; `m = 12, n ∈ {7, 8, 9}` or `n ≥ 14`.
pub fn sphere_table_admits(m: usize, n: usize) -> bool {
    match m {
        4 => n >= 6,
        5 => n >= 7,
        12 => matches!(n, 7..=9) || n >= 14,
        _ => false,
    }
}

fn check_declaration(dims: &[usize]) -> Result<(), ControlError> {
    if dims.is_empty() {
        return Err(ControlError::MalformedHomology("no dimensions declared".into()));
    }
    if dims[0] == 0 && dims.iter().any(|&d| d > 0) {
        return Err(ControlError::MalformedHomology(
            "a nonempty space has nonzero H_0".into(),
        ));
    }
    Ok(())
}

fn is_sphere_signature(dims: &[usize], m: usize) -> bool {
    let b0 = dims[0];
    b0 > 0
        && dims.get(m).copied() == Some(b0)
        && dims.iter().enumerate().all(|(k, &d)| k == 0 || k == m || d == 0)
        && m > 0
}

/// Checks the clauses for the declared homology of the coincidence set and,
/// when a local map between surrogate pairs is given, whether its induced map
/// in degree `n` vanishes. The verdict is relative to those surrogates.
pub fn removability_precondition(
    dims: &[usize],
    n: usize,
    m: usize,
    local: Option<&SimplicialMap>,
) -> Result<RemovabilityReport, ControlError> {
    check_declaration(dims)?;
    let mut clauses = Vec::new();
    if n == 2 {
        clauses.push(Clause::Surface);
    }
    if dims.iter().skip(1).all(|&d| d == 0) {
        clauses.push(Clause::Acyclic);
    }
    if is_sphere_signature(dims, m) && sphere_table_admits(m, n) {
        clauses.push(Clause::HomologySphere);
    }
    let (local_matrix, local_zero) = match local {
        Some(f) => {
            let source = Homology::compute(f.source());
            let target = Homology::compute(f.target());
            let matrix = f.induced_homology(&source, &target, n)?;
            let zero = matrix.is_zero();
            (Some(matrix), Some(zero))
        }
        None => (None, None),
    };
    let condition_holds = !clauses.is_empty();
    Ok(RemovabilityReport {
        conclusion: condition_holds && local_zero == Some(true),
        clauses,
        condition_holds,
        local_matrix,
        local_zero,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clauses() {
        let r = removability_precondition(&[3, 1], 2, 1, None).unwrap();
        assert_eq!(r.clauses, vec![Clause::Surface]);
        assert!(!r.conclusion);
        let r = removability_precondition(&[1, 0, 0], 5, 0, None).unwrap();
        assert_eq!(r.clauses, vec![Clause::Acyclic]);
        let r = removability_precondition(&[1, 0, 0, 0, 1], 5, 4, None).unwrap();
        assert!(r.clauses.is_empty());
        let r = removability_precondition(&[1, 0, 0, 0, 1], 6, 4, None).unwrap();
        assert_eq!(r.clauses, vec![Clause::HomologySphere]);
    }

    #[test]
    fn malformed() {
        assert!(removability_precondition(&[], 2, 0, None).is_err());
        assert!(removability_precondition(&[0, 1], 2, 1, None).is_err());
    }

    #[test]
    fn table() {
        let admitted: Vec<usize> = (5..=15).filter(|&n| sphere_table_admits(12, n)).collect();
        assert_eq!(admitted, vec![7, 8, 9, 14, 15]);
        assert!(!sphere_table_admits(4, 5));
        assert!(sphere_table_admits(5, 7));
    }
}
