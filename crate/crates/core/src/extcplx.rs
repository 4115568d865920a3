//! Two-term complexes `[A⁰ → A¹⟩` (degrees 0 and 1) and `Ext⁰(−, ℤ)`.
//!
//! Two independent routes compute `Ext⁰([A⁰ → A¹⟩, ℤ)`:
//!
//! * [`ext0_fiber_product`] replaces `A¹` by a free group `B¹ ↠ A¹`, forms
//!   `B⁰ = A⁰ ×_{A¹} B¹` and returns `coker[Hom(B¹,ℤ) → Hom(B⁰,ℤ)]`. This needs
//!   `A⁰` torsion-free and is the production path.
//! * [`ext0_resolution`] resolves both terms freely, totalizes into a free
//!   complex `F₋₁ → F₀ → F₁` quasi-isomorphic to the input, dualizes and takes
//!   `H⁰`. It works for any input and serves as the oracle.

use crate::error::{Error, Result};
use crate::fgab::{FgAbGroup, FgAbMap, InvariantFactors, Subgroup};
use crate::intlat::{self, IntMatrix};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoTermComplex {
    alpha: FgAbMap,
}

impl TwoTermComplex {
    pub fn new(alpha: FgAbMap) -> Result<Self> {
        alpha.ensure_well_defined()?;
        Ok(TwoTermComplex { alpha })
    }

    /// `[A⁰ → 0⟩`
    pub fn concentrated_in_degree_zero(a0: FgAbGroup) -> Self {
        TwoTermComplex {
            alpha: FgAbMap::zero(&a0, &FgAbGroup::trivial()),
        }
    }

    /// `[0 → A¹⟩`
    pub fn concentrated_in_degree_one(a1: FgAbGroup) -> Self {
        TwoTermComplex {
            alpha: FgAbMap::zero(&FgAbGroup::trivial(), &a1),
        }
    }

    pub fn a0(&self) -> &FgAbGroup {
        self.alpha.source()
    }

    pub fn a1(&self) -> &FgAbGroup {
        self.alpha.target()
    }

    pub fn alpha(&self) -> &FgAbMap {
        &self.alpha
    }

    pub fn h0(&self) -> Subgroup {
        self.alpha
            .kernel()
            .expect("differential checked at construction")
    }

    pub fn h1(&self) -> FgAbGroup {
        self.alpha
            .cokernel()
            .expect("differential checked at construction")
    }
}

/// A morphism of two-term complexes `(φ⁰, φ¹)`.
#[derive(Clone, Debug)]
pub struct ComplexMap {
    source: TwoTermComplex,
    target: TwoTermComplex,
    f0: FgAbMap,
    f1: FgAbMap,
}

impl ComplexMap {
    pub fn new(
        source: TwoTermComplex,
        target: TwoTermComplex,
        f0: FgAbMap,
        f1: FgAbMap,
    ) -> Result<Self> {
        if f0.source() != source.a0()
            || f0.target() != target.a0()
            || f1.source() != source.a1()
            || f1.target() != target.a1()
        {
            return Err(Error::DimensionMismatch(
                "complex map components do not match the complexes".into(),
            ));
        }
        f0.ensure_well_defined()?;
        f1.ensure_well_defined()?;
        let m = ComplexMap {
            source,
            target,
            f0,
            f1,
        };
        m.ensure_commutes()?;
        Ok(m)
    }

    pub fn identity(k: &TwoTermComplex) -> Self {
        ComplexMap {
            source: k.clone(),
            target: k.clone(),
            f0: FgAbMap::identity(k.a0()),
            f1: FgAbMap::identity(k.a1()),
        }
    }

    pub fn source(&self) -> &TwoTermComplex {
        &self.source
    }

    pub fn target(&self) -> &TwoTermComplex {
        &self.target
    }

    pub fn f0(&self) -> &FgAbMap {
        &self.f0
    }

    pub fn f1(&self) -> &FgAbMap {
        &self.f1
    }

    pub fn commutes(&self) -> bool {
        let left = self.target.alpha.compose_after(&self.f0);
        let right = self.f1.compose_after(&self.source.alpha);
        matches!((left, right), (Ok(l), Ok(r)) if l.equals(&r))
    }

    fn ensure_commutes(&self) -> Result<()> {
        if self.commutes() {
            Ok(())
        } else {
            Err(Error::IllFormedMap(
                "the square of the complex map does not commute".into(),
            ))
        }
    }

    /// Induced map `H⁰(source) → H⁰(target)` on kernels.
    pub fn on_h0(&self) -> Result<FgAbMap> {
        let hs = self.source.h0();
        let ht = self.target.h0();
        self.f0.compose_after(&hs.inclusion)?.lift_through(&ht)
    }

    /// Induced map `H¹(source) → H¹(target)` on cokernels.
    pub fn on_h1(&self) -> Result<FgAbMap> {
        FgAbMap::new_checked(self.source.h1(), self.target.h1(), self.f1.matrix().clone())
    }
}

/// True iff `φ` induces isomorphisms on `H⁰` and on `H¹`.
pub fn is_quasi_isomorphism(phi: &ComplexMap) -> Result<bool> {
    phi.ensure_commutes()?;
    Ok(phi.on_h0()?.is_isomorphism()? && phi.on_h1()?.is_isomorphism()?)
}

/// The presentation quotient `ℤ^n ↠ A¹`, `n` = number of generators of `A¹`.
pub fn default_surjection(a1: &FgAbGroup) -> FgAbMap {
    FgAbMap::new(
        FgAbGroup::free(a1.generators()),
        a1.clone(),
        IntMatrix::identity(a1.generators()),
    )
    .expect("identity has matching shape")
}

/// The free replacement `[B⁰ → B¹⟩` of `K` built from a surjection
/// `φ¹: B¹ ↠ A¹`, with `B⁰ = A⁰ ×_{A¹} B¹`, together with the comparison map
/// `φ = (φ⁰, φ¹)` to `K`, where `φ⁰` and `β: B⁰ → B¹` are the two projections.
pub fn fiber_product_replacement(
    k: &TwoTermComplex,
    phi1: &FgAbMap,
) -> Result<(TwoTermComplex, ComplexMap)> {
    if phi1.target() != k.a1() {
        return Err(Error::DimensionMismatch(
            "surjection must land in A¹".into(),
        ));
    }
    if !phi1.source().is_torsion_free() {
        return Err(Error::InvalidInput("B¹ must be torsion-free".into()));
    }
    if !phi1.is_surjective()? {
        return Err(Error::NotSurjective(format!(
            "{} does not map onto A¹ = {}",
            phi1.matrix(),
            k.a1()
        )));
    }
    let a0 = k.a0();
    let b1 = phi1.source();
    let n0 = a0.generators();
    let m = b1.generators();
    // B⁰ = ker[A⁰ ⊕ B¹ → A¹, (a, b) ↦ α(a) − φ¹(b)]
    let sum = a0.direct_sum(b1);
    let diff = k.alpha().matrix().hcat(&phi1.matrix().neg())?;
    let b0 = FgAbMap::new(sum, k.a1().clone(), diff)?.kernel()?;
    let inc = b0.inclusion.matrix();
    let phi0 = FgAbMap::new_checked(b0.group.clone(), a0.clone(), inc.select_rows(0..n0))?;
    let beta = FgAbMap::new_checked(b0.group.clone(), b1.clone(), inc.select_rows(n0..n0 + m))?;
    let replacement = TwoTermComplex::new(beta)?;
    let phi = ComplexMap::new(replacement.clone(), k.clone(), phi0, phi1.clone())?;
    Ok((replacement, phi))
}

/// `coker[Hom(B¹,ℤ) → Hom(B⁰,ℤ)]` for a complex with torsion-free terms,
/// returned before canonicalization together with the quotient map
/// `Hom(B⁰,ℤ) → coker`.
pub(crate) fn dual_cokernel(b: &TwoTermComplex) -> Result<(FgAbGroup, FgAbMap)> {
    let beta_star = b.alpha().dual()?;
    let coker = beta_star.cokernel()?;
    let q = FgAbMap::new(
        beta_star.target().clone(),
        coker.clone(),
        IntMatrix::identity(coker.generators()),
    )?;
    Ok((coker, q))
}

/// `Ext⁰(K, ℤ)` through the default fiber product (presentation quotient).
pub fn ext0_fiber_product(k: &TwoTermComplex) -> Result<FgAbGroup> {
    ext0_fiber_product_with(k, &default_surjection(k.a1()))
}

/// `Ext⁰(K, ℤ)` through the fiber product for a chosen surjection `B¹ ↠ A¹`.
pub fn ext0_fiber_product_with(k: &TwoTermComplex, phi1: &FgAbMap) -> Result<FgAbGroup> {
    let inv = k.a0().invariants();
    if !inv.torsion.is_empty() {
        return Err(Error::TorsionInDegreeZero(inv.torsion_part()));
    }
    let (b, _) = fiber_product_replacement(k, phi1)?;
    let (coker, _) = dual_cokernel(&b)?;
    Ok(coker.canonical().group)
}

/// An injective presentation `ℤ^m --R--> ℤ^n ↠ A`: a basis of the relation
/// lattice of `A`.
fn free_resolution(a: &FgAbGroup) -> IntMatrix {
    intlat::image_basis(a.relations())
}

/// `Ext⁰(K, ℤ)` from the derived-category definition, via free resolutions.
/// Handles torsion in either degree.
pub fn ext0_resolution(k: &TwoTermComplex) -> Result<FgAbGroup> {
    let r0 = free_resolution(k.a0());
    let r1 = free_resolution(k.a1());
    let f = k.alpha().matrix();
    // lift of α to the relation modules: F·R0 = R1·Q, Q unique as R1 is injective
    let q = intlat::solve_matrix(&r1, &(f * &r0))
        .ok_or_else(|| Error::IllFormedMap("α does not respect relations".into()))?;
    // F₋₁ = ℤ^{m0} → F₀ = ℤ^{n0} ⊕ ℤ^{m1} → F₁ = ℤ^{n1}
    let d_minus1 = r0.vcat(&q)?;
    let d_zero = f.hcat(&r1.neg())?;
    debug_assert!((&d_zero * &d_minus1).is_zero());
    // H⁰ of Hom(F•, ℤ): ker(d₋₁ᵀ) / im(d₀ᵀ)
    let h = FgAbGroup::homology(&d_minus1.transpose(), &d_zero.transpose())?;
    Ok(h.canonical().group)
}

/// The outer terms of the exact sequence
///
/// `Hom(A¹,ℤ) → Hom(A⁰,ℤ) → Ext⁰ → Hom(A¹_tors,ℚ/ℤ) → Hom(A⁰_tors,ℚ/ℤ)`.
#[derive(Clone, Debug)]
pub struct Ext0Bounds {
    /// `α*: Hom(A¹,ℤ) → Hom(A⁰,ℤ)`
    pub hom_map: FgAbMap,
    /// `Hom(A¹_tors, ℚ/ℤ)`
    pub torsion_dual_source: FgAbGroup,
    /// `Hom(A⁰_tors, ℚ/ℤ)`
    pub torsion_dual_target: FgAbGroup,
    /// `α*` on the torsion duals.
    pub torsion_dual_map: FgAbMap,
}

impl Ext0Bounds {
    /// `coker(α*)`, which injects into `Ext⁰`.
    pub fn sub(&self) -> InvariantFactors {
        self.hom_map
            .cokernel()
            .expect("dual map is well defined")
            .invariants()
    }

    /// `ker(α*)` on torsion duals, onto which `Ext⁰` surjects.
    pub fn quotient(&self) -> InvariantFactors {
        self.torsion_dual_map
            .kernel()
            .expect("torsion dual map is well defined")
            .group
            .invariants()
    }

    /// `Ext⁰` sits in `0 → sub → Ext⁰ → quotient → 0` with `quotient` finite,
    /// so its rank is that of `sub`, and the order of its torsion lies between
    /// `|sub_tors|` and `|sub_tors|·|quotient|`, divisibly.
    pub fn admits(&self, ext0: &InvariantFactors) -> bool {
        let sub = self.sub();
        let quot = self.quotient();
        let lo = sub.torsion_order();
        let hi = &lo * quot.torsion_order();
        let t = ext0.torsion_order();
        ext0.rank == sub.rank
            && num_integer::Integer::is_multiple_of(&t, &lo)
            && num_integer::Integer::is_multiple_of(&hi, &t)
    }

    /// The isomorphism type of `Ext⁰` when one of the flanking terms vanishes.
    pub fn forced(&self) -> Option<InvariantFactors> {
        let sub = self.sub();
        let quot = self.quotient();
        if quot.is_trivial() {
            Some(sub)
        } else if sub.is_trivial() {
            Some(quot)
        } else {
            None
        }
    }
}

pub fn cor_ext0_bounds(k: &TwoTermComplex) -> Result<Ext0Bounds> {
    let hom_map = k.alpha().dual()?;
    let torsion_dual_map = k.alpha().torsion_dual()?;
    Ok(Ext0Bounds {
        hom_map,
        torsion_dual_source: torsion_dual_map.source().clone(),
        torsion_dual_target: torsion_dual_map.target().clone(),
        torsion_dual_map,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn inv(rank: usize, torsion: &[i64]) -> InvariantFactors {
        InvariantFactors::from_i64(rank, torsion)
    }

    fn times(n: i64) -> TwoTermComplex {
        let z = FgAbGroup::free(1);
        TwoTermComplex::new(FgAbMap::new(z.clone(), z, IntMatrix::from_i64(&[&[n]])).unwrap())
            .unwrap()
    }

    fn reduction(n: i64) -> TwoTermComplex {
        TwoTermComplex::new(
            FgAbMap::new(
                FgAbGroup::free(1),
                FgAbGroup::cyclic(n),
                IntMatrix::from_i64(&[&[1]]),
            )
            .unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn fiber_product_examples() {
        for n in 1..=6 {
            assert_eq!(
                ext0_fiber_product(&times(n)).unwrap().invariants(),
                InvariantFactors::new(0, if n > 1 { vec![BigInt::from(n)] } else { vec![] })
                    .unwrap()
            );
        }
        let k = TwoTermComplex::concentrated_in_degree_zero(FgAbGroup::free(3));
        assert_eq!(ext0_fiber_product(&k).unwrap().invariants(), inv(3, &[]));
        let k = TwoTermComplex::concentrated_in_degree_one(FgAbGroup::cyclic(5));
        assert_eq!(ext0_fiber_product(&k).unwrap().invariants(), inv(0, &[5]));
        for n in 1..=6 {
            assert_eq!(
                ext0_fiber_product(&reduction(n)).unwrap().invariants(),
                inv(1, &[])
            );
        }
    }

    #[test]
    fn fiber_product_refuses_torsion_in_degree_zero() {
        let k = TwoTermComplex::concentrated_in_degree_zero(FgAbGroup::cyclic(2));
        assert!(matches!(
            ext0_fiber_product(&k),
            Err(Error::TorsionInDegreeZero(_))
        ));
        // the oracle handles it: Ext⁰(ℤ/2[0], ℤ) = Hom(ℤ/2, ℤ) = 0
        assert!(ext0_resolution(&k).unwrap().is_trivial());
    }

    #[test]
    fn resolution_examples() {
        assert_eq!(
            ext0_resolution(&times(7)).unwrap().invariants(),
            inv(0, &[7])
        );
        let k = TwoTermComplex::concentrated_in_degree_one(FgAbGroup::cyclic(2));
        assert_eq!(
            ext0_resolution(&k).unwrap().invariants(),
            FgAbGroup::cyclic(2).ext1_to_z().invariants()
        );
        let k = TwoTermComplex::concentrated_in_degree_one(FgAbGroup::free(1));
        assert!(ext0_resolution(&k).unwrap().is_trivial());
    }

    #[test]
    fn bounds_examples() {
        let b = cor_ext0_bounds(&times(4)).unwrap();
        assert_eq!(b.forced(), Some(inv(0, &[4])));
        let b = cor_ext0_bounds(&TwoTermComplex::concentrated_in_degree_one(
            FgAbGroup::cyclic(2),
        ))
        .unwrap();
        assert!(b.hom_map.matrix().is_zero());
        assert!(b.torsion_dual_map.matrix().is_zero());
        assert_eq!(b.forced(), Some(inv(0, &[2])));
        let b = cor_ext0_bounds(&TwoTermComplex::concentrated_in_degree_zero(
            FgAbGroup::free(1),
        ))
        .unwrap();
        assert_eq!(b.forced(), Some(inv(1, &[])));
        assert!(!b.admits(&inv(0, &[])));
    }

    #[test]
    fn fiber_product_replacement_is_quasi_isomorphism() {
        // A⁰ = ℤ, A¹ = ℤ/2, α = reduction, B¹ = ℤ
        let k = reduction(2);
        let (b, phi) = fiber_product_replacement(&k, &default_surjection(k.a1())).unwrap();
        assert_eq!(b.a0().invariants(), inv(2, &[]));
        // B⁰ = {(a, b) : a ≡ b mod 2} = ⟨(1,1), (0,2)⟩
        let lattice = phi.f0().matrix().vcat(b.alpha().matrix()).unwrap();
        assert!(intlat::same_lattice(
            &lattice,
            &IntMatrix::from_i64(&[&[1, 0], &[1, 2]])
        ));
        assert!(is_quasi_isomorphism(&phi).unwrap());
        assert_eq!(b.h0().group.invariants(), inv(1, &[]));
        assert!(b.h1().is_trivial());
    }

    #[test]
    fn identity_is_quasi_isomorphism() {
        let k = reduction(6);
        assert!(is_quasi_isomorphism(&ComplexMap::identity(&k)).unwrap());
    }

    #[test]
    fn zero_map_is_not_quasi_isomorphism() {
        let s = TwoTermComplex::concentrated_in_degree_one(FgAbGroup::free(1));
        let t = TwoTermComplex::concentrated_in_degree_one(FgAbGroup::cyclic(2));
        let phi = ComplexMap::new(
            s.clone(),
            t.clone(),
            FgAbMap::zero(s.a0(), t.a0()),
            FgAbMap::zero(s.a1(), t.a1()),
        )
        .unwrap();
        assert!(!is_quasi_isomorphism(&phi).unwrap());
    }

    #[test]
    fn non_commuting_square_is_rejected() {
        let k = times(2);
        let r = ComplexMap::new(
            k.clone(),
            k.clone(),
            FgAbMap::identity(k.a0()),
            FgAbMap::zero(k.a1(), k.a1()),
        );
        assert!(matches!(r, Err(Error::IllFormedMap(_))));
    }

    #[test]
    fn non_surjection_is_rejected() {
        let k = reduction(4);
        let phi1 = FgAbMap::new(
            FgAbGroup::free(1),
            FgAbGroup::cyclic(4),
            IntMatrix::from_i64(&[&[2]]),
        )
        .unwrap();
        assert!(matches!(
            ext0_fiber_product_with(&k, &phi1),
            Err(Error::NotSurjective(_))
        ));
    }
}
