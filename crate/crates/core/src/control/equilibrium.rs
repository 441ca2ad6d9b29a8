use num_traits::Zero;

use super::{ControlError, DiscreteSystem};
use crate::algebra::{self, Rational};
use crate::lefschetz::{CoincidenceSetup, CoincidenceVerdict, SweepEntry};
use crate::products::{cap, cap_class};
use crate::simplicial::{Chain, HomologyClass};

impl DiscreteSystem {
    fn check_input_class(&self, v: &HomologyClass) -> Result<(), ControlError> {
        let expected = self.input_homology().betti(v.degree);
        if v.coords.len() != expected {
            return Err(ControlError::InvalidClass(format!(
                "input class of degree {} has {} coordinates, expected {expected}",
                v.degree,
                v.coords.len()
            )));
        }
        Ok(())
    }

    /// Basis class `a_j^k` of `H_k(M)` carried to the source triangulation.
    fn source_basis_class(&self, k: usize, j: usize) -> HomologyClass {
        HomologyClass::new(k, self.transport(k).column(j))
    }

    /// `L(g_v) = (-1)^{ns} Σ_k (-1)^k Σ_j x_j^k ⌢ g_*(a_j^k ⊗ v)`, evaluated on
    /// chains: representatives are crossed, pushed through `g` and capped.
    pub fn fixed_point_class(&self, v: &HomologyClass) -> Result<HomologyClass, ControlError> {
        self.check_input_class(v)?;
        let n = self.dim();
        let s = v.degree;
        let m = self.state().absolute();
        let ph = self.absolute_product();
        let v_chain = ph.second().representative(v)?;
        let mut total = Chain::zero(s);
        for k in 0..m.degrees() {
            if k + s > n {
                continue;
            }
            for j in 0..m.betti(k) {
                let a = ph.first().representative(&self.source_basis_class(k, j))?;
                let pushed = self.map().push(&ph.product().cross_chain(&a, &v_chain));
                let term = cap(&m.cocycle(k, j), &pushed)?;
                total = &total + &term.scale(&algebra::sign(k));
            }
        }
        let total = total.scale(&algebra::sign(n * s));
        if s >= m.degrees() {
            return Ok(HomologyClass::zero(s, 0));
        }
        Ok(m.class_of(&total)?)
    }

    /// Same sum, with `g_*(a ⊗ v)` obtained from the product homology basis:
    /// cross coordinates first, then the matrix of `g_*`.
    pub fn fixed_point_class_via_basis(&self, v: &HomologyClass) -> Result<HomologyClass, ControlError> {
        self.check_input_class(v)?;
        let n = self.dim();
        let s = v.degree;
        let m = self.state().absolute();
        let ph = self.absolute_product();
        let mut coords = vec![Rational::zero(); m.betti(s)];
        for k in 0..m.degrees() {
            if k + s > n {
                continue;
            }
            let g_star = self.map().induced_homology(ph.homology(), m, k + s)?;
            for j in 0..m.betti(k) {
                let cross = ph.cross(&self.source_basis_class(k, j), v)?;
                let image = HomologyClass::new(k + s, g_star.mul_vector(&cross.coords).expect("sizes"));
                let capped = cap_class(&m.cocycle(k, j), &m.representative(&image)?, m)?;
                let sign = algebra::sign(k + n * s);
                for (c, x) in coords.iter_mut().zip(capped.coords) {
                    *c += &sign * x;
                }
            }
        }
        Ok(HomologyClass::new(s, coords))
    }

    /// Whether `g_*(a ⊗ v)` agrees when computed by pushing the cross chain
    /// and by multiplying cross coordinates with the matrix of `g_*`.
    pub fn kunneth_consistent(&self, a: &HomologyClass, v: &HomologyClass) -> Result<bool, ControlError> {
        let ph = self.absolute_product();
        let m = self.state().absolute();
        let chain = ph
            .product()
            .cross_chain(&ph.first().representative(a)?, &ph.second().representative(v)?);
        let direct = m.class_of(&self.map().push(&chain))?;
        let g_star = self.map().induced_homology(ph.homology(), m, a.degree + v.degree)?;
        let via_basis = g_star.mul_vector(&ph.cross(a, v)?.coords).expect("sizes");
        Ok(direct.coords == via_basis)
    }

    /// `Λ_{p,g}(O_M × v)` for the state projection `p`, through the general
    /// coincidence pipeline on `(M × U, ∂M × U)`.
    pub fn projection_homomorphism(&self, v: &HomologyClass) -> Result<Option<HomologyClass>, ControlError> {
        self.check_input_class(v)?;
        let setup = self.projection_setup()?;
        let rp = self.relative_product();
        let top = self.source_state().fundamental_class();
        let z = rp.cross(&top, v)?;
        Ok(setup.homomorphism(&z)?)
    }

    pub(crate) fn projection_setup(&self) -> Result<CoincidenceSetup, ControlError> {
        Ok(CoincidenceSetup::new(
            self.projection(),
            self.map().clone(),
            self.state().clone(),
        )?)
    }

    /// Sweeps `v` over the basis of `H_*(U)`; nonzero iff some `L(g_v) ≠ 0`.
    /// The oracle searches for a coincidence of `g` with the state projection.
    pub fn equilibrium_certificate(&self, run_oracle: bool) -> Result<CoincidenceVerdict, ControlError> {
        self.check_refinement()?;
        let hu = self.input_homology();
        let mut entries = Vec::new();
        for s in 0..hu.degrees() {
            for j in 0..hu.betti(s) {
                let v = hu.basis_class(s, j);
                let value = self.fixed_point_class(&v)?;
                entries.push(SweepEntry {
                    input: v,
                    value: Some(value),
                });
            }
        }
        let mut verdict = CoincidenceVerdict::from_entries("equilibrium", entries);
        if run_oracle {
            verdict.attach_coincidence_oracle(self.map(), &self.projection().absolute());
        }
        Ok(verdict)
    }

    /// Evaluates the two sphere conditions. Condition (1) is tested for each
    /// basis class of `H_0(U)` (one per input component) through the slice
    /// degree; condition (2) for each basis class of `H_n(U)`.
    pub fn sphere_criteria(&self) -> Result<SphereVerdict, ControlError> {
        let n = self.dim();
        let m = self.state().absolute();
        let mut signature = vec![0usize; n + 1];
        signature[0] += 1;
        signature[n] += 1;
        if n == 0 || m.betti_numbers() != signature {
            return Err(ControlError::NotASphere(m.betti_numbers()));
        }
        self.check_refinement()?;
        let ph = self.absolute_product();
        let hu = ph.second();
        let d = m
            .class_of(self.state().fundamental().cycle())
            .expect("closed manifold: the fundamental cycle is absolute");
        let target = algebra::sign(n + 1);
        let source_d = self.source_basis_class(n, 0).scale(&d.coords[0]);
        let mut slice_degrees = Vec::new();
        for j in 0..hu.betti(0) {
            let image = self.push_cross(&source_d, &hu.basis_class(0, j))?;
            let degree = image.multiple_of(&d).expect("H_n of a sphere is one-dimensional");
            slice_degrees.push(degree);
        }
        let condition_one = slice_degrees.iter().any(|deg| *deg != target);
        let unit = self.source_basis_class(0, 0);
        let mut top_images = Vec::new();
        for j in 0..hu.betti(n) {
            let image = self.push_cross(&unit, &hu.basis_class(n, j))?;
            top_images.push(image);
        }
        let condition_two = top_images.iter().any(|c| !c.is_zero());
        Ok(SphereVerdict {
            dimension: n,
            slice_degrees,
            excluded_degree: target,
            condition_one,
            top_images,
            condition_two,
        })
    }

    /// `g_*(a ⊗ v)` in `H(M)` for a class `a` on the source triangulation.
    pub fn push_cross(&self, a: &HomologyClass, v: &HomologyClass) -> Result<HomologyClass, ControlError> {
        let ph = self.absolute_product();
        let chain = ph
            .product()
            .cross_chain(&ph.first().representative(a)?, &ph.second().representative(v)?);
        Ok(self.state().absolute().class_of(&self.map().push(&chain))?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SphereVerdict {
    pub dimension: usize,
    /// Degree of `x ↦ g(x, u)` for one input vertex per component of `U`.
    pub slice_degrees: Vec<Rational>,
    /// `(-1)^{n+1}`, the slice degree condition (1) excludes.
    pub excluded_degree: Rational,
    pub condition_one: bool,
    /// `g_*(1 ⊗ v)` for each basis class `v` of `H_n(U)`.
    pub top_images: Vec<HomologyClass>,
    pub condition_two: bool,
}

impl SphereVerdict {
    pub fn certified(&self) -> bool {
        self.condition_one || self.condition_two
    }
}

/// `χ(M)` as a class: the value `fixed_point_class` takes on the projection system.
pub fn euler_class(system: &DiscreteSystem) -> HomologyClass {
    let m = system.state().absolute();
    let chi = Rational::from_integer(m.euler_characteristic().into());
    let mut coords = vec![Rational::zero(); m.betti(0)];
    if let Some(c) = coords.first_mut() {
        *c = chi;
    }
    HomologyClass::new(0, coords)
}
