//! Root data of connected reductive groups and the lattice invariants derived
//! from them: the character group `Ĝ`, the algebraic fundamental group
//! `π₁^alg`, and the group `κ_G` whose character group is `Pic(G)`.
//!
//! `X` and `X^∨` are both identified with `ℤ^rank` under the dot pairing.
//! Roots and coroots are stored as the columns of two matrices, paired by
//! index. The cocharacter lattice of a maximal torus of the simply connected
//! cover `G^sc` is the coroot lattice `ℤR^∨ ⊆ X^∨`, so
//!
//! * `π₁^alg(G) = X^∨ / ℤR^∨`,
//! * `Pic(G) ≅ Hom(κ_G, 𝔾_m)` with `κ_G ≅ sat(ℤR^∨) / ℤR^∨`.
//!
//! Unipotent radicals never enter: all of these factor through `G^red`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fgab::{FgAbGroup, FgAbMap, JsonInt};
use crate::intlat::{self, IntMatrix};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootDatum {
    rank: usize,
    roots: IntMatrix,
    coroots: IntMatrix,
}

fn pairing(x: &[BigInt], y: &[BigInt]) -> BigInt {
    x.iter().zip(y).map(|(a, b)| a * b).sum()
}

impl RootDatum {
    /// Builds a datum without checking the axioms; see [`validate_root_datum`].
    pub fn new(rank: usize, roots: IntMatrix, coroots: IntMatrix) -> Result<Self> {
        if roots.rows() != rank || coroots.rows() != rank {
            return Err(Error::InvalidRootDatum(format!(
                "roots and coroots must be vectors of length {rank}"
            )));
        }
        if roots.cols() != coroots.cols() {
            return Err(Error::InvalidRootDatum(format!(
                "{} roots but {} coroots",
                roots.cols(),
                coroots.cols()
            )));
        }
        Ok(RootDatum {
            rank,
            roots,
            coroots,
        })
    }

    pub fn from_vecs(rank: usize, roots: &[Vec<i64>], coroots: &[Vec<i64>]) -> Result<Self> {
        let r = IntMatrix::from_cols(rank, roots)
            .map_err(|e| Error::InvalidRootDatum(e.to_string()))?;
        let c = IntMatrix::from_cols(rank, coroots)
            .map_err(|e| Error::InvalidRootDatum(e.to_string()))?;
        Self::new(rank, r, c)
    }

    pub fn torus(rank: usize) -> Self {
        RootDatum {
            rank,
            roots: IntMatrix::zeros(rank, 0),
            coroots: IntMatrix::zeros(rank, 0),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn num_roots(&self) -> usize {
        self.roots.cols()
    }

    pub fn roots(&self) -> &IntMatrix {
        &self.roots
    }

    pub fn coroots(&self) -> &IntMatrix {
        &self.coroots
    }

    pub fn is_torus(&self) -> bool {
        self.num_roots() == 0
    }

    /// Swaps the roles of roots and coroots.
    pub fn dual(&self) -> RootDatum {
        RootDatum {
            rank: self.rank,
            roots: self.coroots.clone(),
            coroots: self.roots.clone(),
        }
    }

    /// Datum of the product group.
    pub fn product(&self, other: &RootDatum) -> RootDatum {
        RootDatum {
            rank: self.rank + other.rank,
            roots: self.roots.block_diag(&other.roots),
            coroots: self.coroots.block_diag(&other.coroots),
        }
    }

    /// Checks the root datum axioms, reporting the first violated one.
    pub fn validate(&self) -> Result<()> {
        let n = self.num_roots();
        let roots = self.roots.to_cols();
        let coroots = self.coroots.to_cols();
        let two = BigInt::from(2);
        let mut index: HashMap<&[BigInt], usize> = HashMap::new();
        for (i, r) in roots.iter().enumerate() {
            if r.iter().all(Zero::is_zero) {
                return Err(Error::InvalidRootDatum(format!("root {i} is zero")));
            }
            if let Some(j) = index.insert(r.as_slice(), i) {
                return Err(Error::InvalidRootDatum(format!(
                    "roots {j} and {i} coincide"
                )));
            }
        }
        for i in 0..n {
            let p = pairing(&roots[i], &coroots[i]);
            if p != two {
                return Err(Error::InvalidRootDatum(format!(
                    "<root {i}, coroot {i}> = {p}, expected 2"
                )));
            }
        }
        for i in 0..n {
            for j in 0..n {
                // s_i(α_j) = α_j − <α_j, α_i^∨> α_i
                let c = pairing(&roots[j], &coroots[i]);
                let image: Vec<BigInt> = roots[j]
                    .iter()
                    .zip(&roots[i])
                    .map(|(x, a)| x - &c * a)
                    .collect();
                let Some(&k) = index.get(image.as_slice()) else {
                    return Err(Error::InvalidRootDatum(format!(
                        "reflection in root {i} sends root {j} outside the root list"
                    )));
                };
                // s_i^∨(α_j^∨) = α_j^∨ − <α_i, α_j^∨> α_i^∨ must be α_k^∨
                let d = pairing(&roots[i], &coroots[j]);
                let coimage: Vec<BigInt> = coroots[j]
                    .iter()
                    .zip(&coroots[i])
                    .map(|(x, a)| x - &d * a)
                    .collect();
                if coimage != coroots[k] {
                    return Err(Error::InvalidRootDatum(format!(
                        "dual reflection in coroot {i} does not send coroot {j} to coroot {k}"
                    )));
                }
            }
        }
        for (i, r) in roots.iter().enumerate() {
            let doubled: Vec<BigInt> = r.iter().map(|x| x * 2).collect();
            if let Some(j) = index.get(doubled.as_slice()) {
                return Err(Error::InvalidRootDatum(format!(
                    "root {j} is twice root {i}; the datum is not reduced"
                )));
            }
        }
        Ok(())
    }

    /// Basis (columns, in `X`) of the characters vanishing on every coroot.
    pub fn character_basis(&self) -> IntMatrix {
        intlat::kernel_basis(&self.coroots.transpose())
    }

    /// True iff `ℤR^∨` is saturated in `X^∨`, i.e. `G^ss` is simply connected.
    pub fn coroot_lattice_saturated(&self) -> bool {
        intlat::snf(&self.coroots)
            .diagonal
            .iter()
            .all(num_traits::One::is_one)
    }
}

/// Validates the root datum axioms; `false` means at least one is violated.
pub fn validate_root_datum(rd: &RootDatum) -> bool {
    rd.validate().is_ok()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupDescriptor {
    /// A connected reductive group (or `G^red` of a connected group).
    Reductive(RootDatum),
    /// A group of multiplicative type given by its character group, which
    /// may have torsion (then the group is disconnected).
    Multiplicative(FgAbGroup),
}

impl GroupDescriptor {
    pub fn validate(&self) -> Result<()> {
        match self {
            GroupDescriptor::Reductive(rd) => rd.validate(),
            GroupDescriptor::Multiplicative(_) => Ok(()),
        }
    }

    pub fn is_connected(&self) -> bool {
        match self {
            GroupDescriptor::Reductive(_) => true,
            GroupDescriptor::Multiplicative(c) => c.is_torsion_free(),
        }
    }

    /// Reductive without roots, or multiplicative with torsion-free characters.
    pub fn is_torus(&self) -> bool {
        match self {
            GroupDescriptor::Reductive(rd) => rd.is_torus(),
            GroupDescriptor::Multiplicative(c) => c.is_torsion_free(),
        }
    }

    pub fn root_datum(&self) -> Option<&RootDatum> {
        match self {
            GroupDescriptor::Reductive(rd) => Some(rd),
            GroupDescriptor::Multiplicative(_) => None,
        }
    }
}

/// `Ĝ = Hom(G, 𝔾_m)`.
pub fn char_group(g: &GroupDescriptor) -> FgAbGroup {
    match g {
        GroupDescriptor::Reductive(rd) => FgAbGroup::free(rd.character_basis().cols()),
        GroupDescriptor::Multiplicative(c) => c.clone(),
    }
}

/// `π₁^alg(G) = X^∨ / ℤR^∨`. For a torus given by its character group this
/// is `Hom(Ĝ, ℤ)`; disconnected multiplicative groups are rejected.
pub fn pi1_alg(g: &GroupDescriptor) -> Result<FgAbGroup> {
    match g {
        GroupDescriptor::Reductive(rd) => FgAbGroup::new(rd.rank, rd.coroots.clone()),
        GroupDescriptor::Multiplicative(c) => {
            if c.is_torsion_free() {
                Ok(c.hom_to_z().group)
            } else {
                Err(Error::NotApplicable(format!(
                    "π₁^alg of the disconnected multiplicative group with characters {c}"
                )))
            }
        }
    }
}

/// `κ_G ≅ sat(ℤR^∨) / ℤR^∨`, a finite group (non-canonically) isomorphic to
/// `Pic(G)`. Groups of multiplicative type have trivial Picard group.
pub fn pic_group(g: &GroupDescriptor) -> Result<FgAbGroup> {
    match g {
        GroupDescriptor::Reductive(rd) => {
            let sat = intlat::saturation(&rd.coroots);
            let coords =
                intlat::solve_matrix(&sat, &rd.coroots).expect("a lattice lies in its saturation");
            Ok(FgAbGroup::new(sat.cols(), coords)?.canonical().group)
        }
        GroupDescriptor::Multiplicative(_) => Ok(FgAbGroup::trivial()),
    }
}

pub fn pic_is_trivial(g: &GroupDescriptor) -> Result<bool> {
    Ok(pic_group(g)?.is_trivial())
}

/// How `H` sits in `G` at the lattice level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EmbeddingMap {
    /// `X^∨(T_H) → X^∨(T_G)`, a `rank_G × rank_H` matrix.
    Cocharacter(IntMatrix),
    /// `i^*: Ĝ → Ĥ` written on the generators of the two character groups.
    Character(IntMatrix),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingDescriptor {
    pub map: EmbeddingMap,
    /// `None` means "derive from the descriptor kind".
    pub h_connected: Option<bool>,
    pub h_ker_char_connected: Option<bool>,
}

impl EmbeddingDescriptor {
    pub fn cocharacter(m: IntMatrix) -> Self {
        EmbeddingDescriptor {
            map: EmbeddingMap::Cocharacter(m),
            h_connected: None,
            h_ker_char_connected: None,
        }
    }

    pub fn character(m: IntMatrix) -> Self {
        EmbeddingDescriptor {
            map: EmbeddingMap::Character(m),
            h_connected: None,
            h_ker_char_connected: None,
        }
    }
}

/// Checks that a cocharacter matrix is injective with saturated image and
/// sends `ℤR^∨_H` into `ℤR^∨_G`. Necessary (not sufficient) for coming from a
/// group embedding.
pub fn validate_cocharacter_embedding(g: &RootDatum, h: &RootDatum, m: &IntMatrix) -> Result<()> {
    if m.rows() != g.rank || m.cols() != h.rank {
        return Err(Error::NotAnEmbedding(format!(
            "cocharacter matrix is {}x{}, expected {}x{}",
            m.rows(),
            m.cols(),
            g.rank,
            h.rank
        )));
    }
    if intlat::rank(m) != h.rank {
        return Err(Error::NotAnEmbedding(format!(
            "cocharacter matrix {m} is not injective"
        )));
    }
    // T_H → T_G is injective iff the cocharacter image is saturated
    if h.rank > 0 && !intlat::same_lattice(&intlat::saturation(m), m) {
        return Err(Error::NotAnEmbedding(format!(
            "cocharacter matrix {m} has non-saturated image, so the map of maximal tori has a finite kernel"
        )));
    }
    let image = m * &h.coroots;
    if !image.is_zero() && !intlat::contains_all(&g.coroots, &image) {
        return Err(Error::NotAnEmbedding(format!(
            "cocharacter matrix {m} does not send the coroot lattice of H into that of G"
        )));
    }
    Ok(())
}

/// `i^*: Ĝ → Ĥ`.
pub fn induced_char_map(
    g: &GroupDescriptor,
    h: &GroupDescriptor,
    e: &EmbeddingDescriptor,
) -> Result<FgAbMap> {
    match (&e.map, g, h) {
        (EmbeddingMap::Character(c), _, _) => {
            FgAbMap::new_checked(char_group(g), char_group(h), c.clone()).map_err(|err| match err {
                Error::DimensionMismatch(s) => Error::IllFormedMap(s),
                other => other,
            })
        }
        (
            EmbeddingMap::Cocharacter(m),
            GroupDescriptor::Reductive(gd),
            GroupDescriptor::Reductive(hd),
        ) => {
            validate_cocharacter_embedding(gd, hd, m)?;
            let kg = gd.character_basis();
            let kh = hd.character_basis();
            // restriction of characters is the transpose of the cocharacter map
            let restricted = &m.transpose() * &kg;
            let coords = intlat::solve_matrix(&kh, &restricted).ok_or_else(|| {
                Error::NotAnEmbedding("restricted characters of G are not characters of H".into())
            })?;
            FgAbMap::new_checked(
                FgAbGroup::free(kg.cols()),
                FgAbGroup::free(kh.cols()),
                coords,
            )
        }
        (EmbeddingMap::Cocharacter(_), _, _) => Err(Error::NotApplicable(
            "a cocharacter matrix needs root data for both G and H".into(),
        )),
    }
}

/// `i_*: π₁^alg(H) → π₁^alg(G)`, where `π₁^alg(H)` means `π₁^alg(H⁰)`.
///
/// The source and target are groups isomorphic to `π₁^alg(H⁰)` and
/// `π₁^alg(G)`; for tori described through characters they are the dual
/// lattices `Hom(Ĥ, ℤ)` and `Hom(Ĝ, ℤ)`.
pub fn induced_pi1alg_map(
    g: &GroupDescriptor,
    h: &GroupDescriptor,
    e: &EmbeddingDescriptor,
) -> Result<FgAbMap> {
    if let GroupDescriptor::Multiplicative(ch) = h {
        if ch.rank() == 0 {
            // finite H: H⁰ = 1
            return Ok(FgAbMap::zero(&FgAbGroup::trivial(), &pi1_alg(g)?));
        }
    }
    match (&e.map, g, h) {
        (
            EmbeddingMap::Cocharacter(m),
            GroupDescriptor::Reductive(gd),
            GroupDescriptor::Reductive(hd),
        ) => {
            validate_cocharacter_embedding(gd, hd, m)?;
            FgAbMap::new_checked(pi1_alg(h)?, pi1_alg(g)?, m.clone())
                .map_err(|err| Error::NotAnEmbedding(err.to_string()))
        }
        (EmbeddingMap::Character(_), _, _) if g.is_torus() && h_identity_component_is_torus(h) => {
            // H⁰ and G tori: cocharacters are the ℤ-duals of characters
            let chi = induced_char_map(g, h, e)?;
            let dual = chi.dual()?;
            // restrict to the identity component: Hom(Ĥ, ℤ) = Hom(Ĥ⁰, ℤ)
            Ok(dual)
        }
        _ => Err(Error::NotApplicable(
            "the map on π₁^alg needs cocharacter data unless G and H⁰ are tori".into(),
        )),
    }
}

fn h_identity_component_is_torus(h: &GroupDescriptor) -> bool {
    match h {
        GroupDescriptor::Reductive(rd) => rd.is_torus(),
        GroupDescriptor::Multiplicative(_) => true,
    }
}

/// JSON form of a root datum, with integers given as numbers or strings.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct RootDatumJson {
    pub rank: usize,
    pub roots: Vec<Vec<JsonInt>>,
    pub coroots: Vec<Vec<JsonInt>>,
}

impl From<&RootDatum> for RootDatumJson {
    fn from(rd: &RootDatum) -> Self {
        let conv = |m: &IntMatrix| {
            m.to_cols()
                .into_iter()
                .map(|c| c.into_iter().map(JsonInt).collect())
                .collect()
        };
        RootDatumJson {
            rank: rd.rank,
            roots: conv(&rd.roots),
            coroots: conv(&rd.coroots),
        }
    }
}

impl TryFrom<&RootDatumJson> for RootDatum {
    type Error = Error;
    fn try_from(j: &RootDatumJson) -> Result<Self> {
        let conv = |v: &[Vec<JsonInt>], what: &str| -> Result<IntMatrix> {
            let cols: Vec<Vec<BigInt>> = v
                .iter()
                .map(|c| c.iter().map(|x| x.0.clone()).collect())
                .collect();
            IntMatrix::from_cols(j.rank, &cols)
                .map_err(|e| Error::InvalidRootDatum(format!("{what}: {e}")))
        };
        RootDatum::new(
            j.rank,
            conv(&j.roots, "roots")?,
            conv(&j.coroots, "coroots")?,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fgab::InvariantFactors;

    fn sl2() -> RootDatum {
        RootDatum::from_vecs(1, &[vec![2], vec![-2]], &[vec![1], vec![-1]]).unwrap()
    }

    fn pgl2() -> RootDatum {
        sl2().dual()
    }

    fn gl2() -> RootDatum {
        RootDatum::from_vecs(2, &[vec![1, -1], vec![-1, 1]], &[vec![1, -1], vec![-1, 1]]).unwrap()
    }

    fn inv(rank: usize, torsion: &[i64]) -> InvariantFactors {
        InvariantFactors::from_i64(rank, torsion)
    }

    #[test]
    fn validate_examples() {
        assert!(validate_root_datum(&sl2()));
        assert!(validate_root_datum(&pgl2()));
        let bad = RootDatum::from_vecs(1, &[vec![1], vec![-1]], &[vec![1], vec![-1]]).unwrap();
        assert!(!validate_root_datum(&bad));
        assert!(validate_root_datum(&RootDatum::torus(3)));
    }

    #[test]
    fn validate_reports_specific_axioms() {
        // missing negative root
        let rd = RootDatum::from_vecs(1, &[vec![2]], &[vec![1]]).unwrap();
        let err = rd.validate().unwrap_err().to_string();
        assert!(err.contains("reflection"), "{err}");
        // non-reduced BC₁
        let rd = RootDatum::from_vecs(
            1,
            &[vec![1], vec![-1], vec![2], vec![-2]],
            &[vec![2], vec![-2], vec![1], vec![-1]],
        )
        .unwrap();
        let err = rd.validate().unwrap_err().to_string();
        assert!(err.contains("not reduced"), "{err}");
        // mismatched lengths
        assert!(RootDatum::from_vecs(1, &[vec![2]], &[]).is_err());
    }

    #[test]
    fn char_group_examples() {
        let g = GroupDescriptor::Reductive(sl2());
        assert!(char_group(&g).is_trivial());
        assert_eq!(
            char_group(&GroupDescriptor::Reductive(RootDatum::torus(3))).invariants(),
            inv(3, &[])
        );
        let b = gl2().character_basis();
        assert_eq!(b.cols(), 1);
        let v = b.col(0);
        assert!(
            v == vec![BigInt::from(1), BigInt::from(1)]
                || v == vec![BigInt::from(-1), BigInt::from(-1)]
        );
    }

    #[test]
    fn pi1_alg_examples() {
        assert!(pi1_alg(&GroupDescriptor::Reductive(sl2()))
            .unwrap()
            .is_trivial());
        assert_eq!(
            pi1_alg(&GroupDescriptor::Reductive(pgl2()))
                .unwrap()
                .invariants(),
            inv(0, &[2])
        );
        assert_eq!(
            pi1_alg(&GroupDescriptor::Reductive(gl2()))
                .unwrap()
                .invariants(),
            inv(1, &[])
        );
        let mu2 = GroupDescriptor::Multiplicative(FgAbGroup::cyclic(2));
        assert!(matches!(pi1_alg(&mu2), Err(Error::NotApplicable(_))));
    }

    #[test]
    fn pic_examples() {
        assert!(pic_group(&GroupDescriptor::Reductive(sl2()))
            .unwrap()
            .is_trivial());
        assert_eq!(
            pic_group(&GroupDescriptor::Reductive(pgl2()))
                .unwrap()
                .invariants(),
            inv(0, &[2])
        );
        assert!(pic_group(&GroupDescriptor::Reductive(RootDatum::torus(2)))
            .unwrap()
            .is_trivial());
        assert!(pic_group(&GroupDescriptor::Reductive(gl2()))
            .unwrap()
            .is_trivial());
        assert!(pic_is_trivial(&GroupDescriptor::Multiplicative(FgAbGroup::cyclic(3))).unwrap());
    }

    #[test]
    fn induced_char_map_examples() {
        let t1 = GroupDescriptor::Reductive(RootDatum::torus(1));
        let e = EmbeddingDescriptor::cocharacter(IntMatrix::identity(1));
        let f = induced_char_map(&GroupDescriptor::Reductive(sl2()), &t1, &e).unwrap();
        assert_eq!(f.source().generators(), 0);
        assert_eq!(f.target().generators(), 1);

        let t2 = GroupDescriptor::Reductive(RootDatum::torus(2));
        let e = EmbeddingDescriptor::cocharacter(IntMatrix::identity(2));
        let f = induced_char_map(&GroupDescriptor::Reductive(gl2()), &t2, &e).unwrap();
        // det ↦ (1, 1) up to the sign of the chosen basis
        let c = f.matrix().col(0);
        assert_eq!(c[0], c[1]);
        assert_eq!(num_traits::Signed::abs(&c[0]), BigInt::from(1));

        let mu2 = GroupDescriptor::Multiplicative(FgAbGroup::cyclic(2));
        let e = EmbeddingDescriptor::character(IntMatrix::zeros(1, 0));
        let f = induced_char_map(&GroupDescriptor::Reductive(sl2()), &mu2, &e).unwrap();
        assert!(f.matrix().is_zero());
    }

    #[test]
    fn induced_pi1alg_map_examples() {
        let g = GroupDescriptor::Reductive(sl2());
        let t1 = GroupDescriptor::Reductive(RootDatum::torus(1));
        let f = induced_pi1alg_map(
            &g,
            &t1,
            &EmbeddingDescriptor::cocharacter(IntMatrix::identity(1)),
        )
        .unwrap();
        assert!(f.target().is_trivial());
        assert_eq!(f.source().invariants(), inv(1, &[]));

        // SL₂ → 𝔾_m cannot send the coroot anywhere
        let e = EmbeddingDescriptor::cocharacter(IntMatrix::identity(1));
        let r = induced_pi1alg_map(&t1, &g, &e);
        assert!(matches!(r, Err(Error::NotAnEmbedding(_))));
    }

    #[test]
    fn non_injective_cocharacter_is_rejected() {
        let e = EmbeddingDescriptor::cocharacter(IntMatrix::zeros(1, 1));
        let t1 = GroupDescriptor::Reductive(RootDatum::torus(1));
        assert!(matches!(
            induced_char_map(&t1, &t1, &e),
            Err(Error::NotAnEmbedding(_))
        ));
    }

    #[test]
    fn json_round_trip() {
        let rd = gl2();
        let j = RootDatumJson::from(&rd);
        let back = RootDatum::try_from(&j).unwrap();
        assert_eq!(back, rd);
    }

    #[test]
    fn isogenies_are_rejected() {
        let t1 = RootDatum::torus(1);
        let t2 = RootDatum::torus(2);
        let m = |rows: &[Vec<i64>], cols| IntMatrix::from_rows(cols, rows).unwrap();
        assert!(validate_cocharacter_embedding(&t1, &t1, &m(&[vec![1]], 1)).is_ok());
        assert!(matches!(
            validate_cocharacter_embedding(&t1, &t1, &m(&[vec![2]], 1)),
            Err(Error::NotAnEmbedding(_))
        ));
        assert!(validate_cocharacter_embedding(&t2, &t1, &m(&[vec![1], vec![2]], 1)).is_ok());
        assert!(validate_cocharacter_embedding(&t2, &t1, &m(&[vec![2], vec![4]], 1)).is_err());
        // the isogeny SL2 → PGL2 on maximal tori
        assert!(validate_cocharacter_embedding(&pgl2(), &sl2(), &m(&[vec![2]], 1)).is_err());
    }
}
