use num_traits::Zero;

use super::graded::{lefschetz_class, target_dim, GradedEndomorphism};
use super::oracle::{coincidence_oracle, CoincidenceWitness};
use super::LefschetzError;
use crate::algebra::{self, Rational, RationalMatrix};
use crate::products::{cap, OrientedManifold};
use crate::simplicial::{Homology, HomologyClass, MapError, SimplicialMap};

/// Outcome of an independent oracle run attached to a certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleOutcome {
    Skipped,
    /// The oracle confirmed the conclusion; coincidence oracles attach a point.
    Confirmed(Option<CoincidenceWitness>),
    Refuted,
}

/// One evaluated input of a certificate sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepEntry {
    pub input: HomologyClass,
    /// `None` when the value lives in a negative degree and so vanishes.
    pub value: Option<HomologyClass>,
}

impl SweepEntry {
    pub fn is_nonzero(&self) -> bool {
        self.value.as_ref().is_some_and(|v| !v.is_zero())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoincidenceVerdict {
    pub criterion: &'static str,
    pub entries: Vec<SweepEntry>,
    pub nonzero: bool,
    /// Index of the first entry with a nonzero value.
    pub witness: Option<usize>,
    pub oracle: OracleOutcome,
}

impl CoincidenceVerdict {
    pub fn from_entries(criterion: &'static str, entries: Vec<SweepEntry>) -> Self {
        let witness = entries.iter().position(SweepEntry::is_nonzero);
        CoincidenceVerdict {
            criterion,
            nonzero: witness.is_some(),
            entries,
            witness,
            oracle: OracleOutcome::Skipped,
        }
    }

    pub fn witness_entry(&self) -> Option<&SweepEntry> {
        self.witness.map(|i| &self.entries[i])
    }

    /// A nonzero certificate refuted by its oracle is an internal soundness bug.
    pub fn is_sound(&self) -> bool {
        !(self.nonzero && self.oracle == OracleOutcome::Refuted)
    }

    /// Runs the coincidence oracle and records its outcome.
    pub fn attach_coincidence_oracle(&mut self, f: &SimplicialMap, g: &SimplicialMap) {
        self.oracle = match coincidence_oracle(f, g) {
            Some(w) => OracleOutcome::Confirmed(Some(w)),
            None => OracleOutcome::Refuted,
        };
    }
}

/// Maps `f, g : N -> M` into an oriented manifold, with `f` a map of pairs
/// `(N, A) -> (M, ∂M)`.
#[derive(Debug, Clone)]
pub struct CoincidenceSetup {
    f: SimplicialMap,
    g: SimplicialMap,
    target: OrientedManifold,
    source_relative: Homology,
}

impl CoincidenceSetup {
    pub fn new(f: SimplicialMap, g: SimplicialMap, target: OrientedManifold) -> Result<Self, LefschetzError> {
        if f.target() != target.pair() {
            return Err(LefschetzError::PairMismatch(
                "first map must land in the oriented manifold pair".into(),
            ));
        }
        f.check_pair_condition(f.source().sub(), f.target().sub())?;
        if g.source().total() != f.source().total() {
            return Err(LefschetzError::PairMismatch("maps have different sources".into()));
        }
        if g.target().total() != target.pair().total() {
            return Err(LefschetzError::PairMismatch("maps have different targets".into()));
        }
        let source_relative = Homology::compute(f.source());
        Ok(CoincidenceSetup {
            g: g.absolute(),
            f,
            target,
            source_relative,
        })
    }

    pub fn f(&self) -> &SimplicialMap {
        &self.f
    }

    pub fn g(&self) -> &SimplicialMap {
        &self.g
    }

    pub fn target(&self) -> &OrientedManifold {
        &self.target
    }

    /// Homology of `(N, A)`, where the classes `z` live.
    pub fn source_homology(&self) -> &Homology {
        &self.source_relative
    }

    fn check_class(&self, z: &HomologyClass) -> Result<(), LefschetzError> {
        let expected = self.source_relative.betti(z.degree);
        if z.coords.len() != expected {
            return Err(LefschetzError::InvalidClass(format!(
                "class in degree {} has {} coordinates, expected {expected}",
                z.degree,
                z.coords.len()
            )));
        }
        Ok(())
    }

    /// `h^z(x) = g_*((f^* D_M^{-1} x) ⌢ z)`, of degree `s - n`.
    pub fn endomorphism(&self, z: &HomologyClass) -> Result<GradedEndomorphism, LefschetzError> {
        self.check_class(z)?;
        let n = self.target.dim();
        let s = z.degree;
        let shift = s as i64 - n as i64;
        let m_abs = self.target.absolute();
        let z_chain = self.source_relative.representative(z)?;
        let mut blocks = Vec::with_capacity(m_abs.degrees());
        for i in 0..m_abs.degrees() {
            let rows = target_dim(m_abs, i, shift);
            let mut block = RationalMatrix::zeros(rows, m_abs.betti(i));
            if rows > 0 && i <= n {
                let k = n - i;
                let inverse = self.target.dual_inverse_matrix(k)?;
                for j in 0..m_abs.betti(i) {
                    let x = self
                        .target
                        .relative()
                        .cohomology_representative(k, &inverse.column(j))?;
                    let pulled = self.f.pull(&x);
                    let capped = cap(&pulled, &z_chain)?;
                    let pushed = self.g.push(&capped);
                    let class = m_abs.class_of(&pushed)?;
                    for (r, c) in class.coords.into_iter().enumerate() {
                        block[(r, j)] = c;
                    }
                }
            }
            blocks.push(block);
        }
        Ok(GradedEndomorphism::new(shift, blocks))
    }

    /// `Λ_fg(z) = L(h^z)`; `None` when `s < n` (the value vanishes by degree).
    pub fn homomorphism(&self, z: &HomologyClass) -> Result<Option<HomologyClass>, LefschetzError> {
        let h = self.endomorphism(z)?;
        if h.shift() < 0 {
            return Ok(None);
        }
        lefschetz_class(&h, self.target.absolute()).map(Some)
    }

    /// `λ_fg = L(g_* D_N f^* D_M^{-1})` assembled from matrices, for a source
    /// that is itself an oriented manifold of the same dimension.
    pub fn classical_number(&self, source: &OrientedManifold) -> Result<Rational, LefschetzError> {
        let n = self.target.dim();
        if source.pair() != self.f.source() || source.dim() != n {
            return Err(LefschetzError::PairMismatch(
                "source is not an oriented manifold of the target dimension".into(),
            ));
        }
        let mut total = Rational::zero();
        for k in 0..=n {
            let d_m_inv = self.target.dual_inverse_matrix(n - k)?;
            let f_star = self
                .f
                .induced_cohomology(source.relative(), self.target.relative(), n - k)?;
            let d_n = source.duality_matrix(n - k)?;
            let g_star = self.g.induced_homology(source.absolute(), self.target.absolute(), k)?;
            let composite = &(&(&g_star * d_n) * &f_star) * &d_m_inv;
            total += algebra::sign(k) * composite.trace().expect("square");
        }
        Ok(total)
    }

    /// Every basis class of `H_*(N, A)`, by degree then index.
    pub fn basis_classes(&self) -> Vec<HomologyClass> {
        let h = &self.source_relative;
        (0..h.degrees())
            .flat_map(|k| (0..h.betti(k)).map(move |j| h.basis_class(k, j)))
            .collect()
    }

    /// Sweeps `Λ_fg` over the given classes (default: the whole basis) and
    /// optionally runs the coincidence oracle.
    pub fn certificate(
        &self,
        classes: Option<Vec<HomologyClass>>,
        run_oracle: bool,
    ) -> Result<CoincidenceVerdict, LefschetzError> {
        let classes = classes.unwrap_or_else(|| self.basis_classes());
        let entries = classes
            .into_iter()
            .map(|z| {
                let value = self.homomorphism(&z)?;
                Ok(SweepEntry { input: z, value })
            })
            .collect::<Result<Vec<_>, LefschetzError>>()?;
        let mut verdict = CoincidenceVerdict::from_entries("lefschetz-homomorphism", entries);
        if run_oracle {
            verdict.attach_coincidence_oracle(&self.f, &self.g);
        }
        Ok(verdict)
    }
}

impl From<MapError> for LefschetzError {
    fn from(e: MapError) -> Self {
        LefschetzError::Map(e)
    }
}
