//! Finitely generated abelian groups and their homomorphisms, both carried as
//! integer presentations.
//!
//! A group on `n` generators with relation matrix `R` (an `n × m` matrix) is
//! `ℤ^n / span(columns of R)`. Groups are kept as presentations rather than
//! canonical forms so that maps can be written on generators; the canonical
//! form is available on demand through [`FgAbGroup::invariants`] and
//! [`FgAbGroup::canonical`].

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::intlat::{self, IntMatrix};

/// Canonical form `ℤ^rank ⊕ ℤ/d₁ ⊕ … ⊕ ℤ/d_k` with `2 ≤ d₁ | d₂ | … | d_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct InvariantFactors {
    pub rank: usize,
    pub torsion: Vec<BigInt>,
}

impl InvariantFactors {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        InvariantFactors {
            rank,
            torsion: Vec::new(),
        }
    }

    /// Builds the canonical form, validating the divisibility chain.
    pub fn new(rank: usize, torsion: Vec<BigInt>) -> Result<Self> {
        let two = BigInt::from(2);
        if torsion.iter().any(|d| d < &two) {
            return Err(Error::InvalidInput(
                "torsion factors must be at least 2".into(),
            ));
        }
        if torsion.windows(2).any(|w| !w[1].is_multiple_of(&w[0])) {
            return Err(Error::InvalidInput(
                "torsion factors must form a divisibility chain".into(),
            ));
        }
        Ok(InvariantFactors { rank, torsion })
    }

    pub fn from_i64(rank: usize, torsion: &[i64]) -> Self {
        Self::new(rank, torsion.iter().map(|&d| BigInt::from(d)).collect())
            .expect("invalid invariant factor literal")
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.rank == 0
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> BigInt {
        self.torsion.iter().fold(BigInt::one(), |acc, d| acc * d)
    }

    /// The torsion subgroup as a canonical form.
    pub fn torsion_part(&self) -> InvariantFactors {
        InvariantFactors {
            rank: 0,
            torsion: self.torsion.clone(),
        }
    }
}

impl fmt::Display for InvariantFactors {
    /// `0`, `Z`, `Z^2`, `Z/2`, `Z^2 ⊕ Z/2 ⊕ Z/4`, …
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" ⊕ "))
        }
    }
}

impl FromStr for InvariantFactors {
    type Err = Error;

    /// Inverse of the `Display` form.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" {
            return Ok(Self::trivial());
        }
        let mut rank = 0;
        let mut torsion = Vec::new();
        for part in s.split('⊕').map(str::trim) {
            if part == "Z" {
                rank += 1;
            } else if let Some(r) = part.strip_prefix("Z^") {
                rank += r
                    .parse::<usize>()
                    .map_err(|e| Error::InvalidInput(format!("bad rank {r:?}: {e}")))?;
            } else if let Some(d) = part.strip_prefix("Z/") {
                torsion.push(
                    d.parse::<BigInt>()
                        .map_err(|e| Error::InvalidInput(format!("bad factor {d:?}: {e}")))?,
                );
            } else {
                return Err(Error::InvalidInput(format!(
                    "unrecognized summand {part:?}"
                )));
            }
        }
        Self::new(rank, torsion)
    }
}

/// Largest integer magnitude that survives a round trip through an IEEE
/// double; larger values are written as decimal strings.
const MAX_SAFE_JSON_INT: i64 = 1 << 53;

pub(crate) fn serialize_bigint<S: Serializer>(
    x: &BigInt,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    if x.abs() <= BigInt::from(MAX_SAFE_JSON_INT) {
        let v: i64 = x.try_into().expect("bounded by 2^53");
        s.serialize_i64(v)
    } else {
        s.serialize_str(&x.to_string())
    }
}

/// JSON integer that may also be given as a decimal string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JsonInt(pub BigInt);

impl Serialize for JsonInt {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        serialize_bigint(&self.0, s)
    }
}

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            I(i64),
            U(u64),
            S(String),
        }
        match Raw::deserialize(d)? {
            Raw::I(v) => Ok(JsonInt(BigInt::from(v))),
            Raw::U(v) => Ok(JsonInt(BigInt::from(v))),
            Raw::S(s) => s
                .trim()
                .parse::<BigInt>()
                .map(JsonInt)
                .map_err(|_| de::Error::custom(format!("expected an integer, found {s:?}"))),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct InvariantFactorsRepr {
    rank: usize,
    torsion: Vec<JsonInt>,
}

impl Serialize for InvariantFactors {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        struct Torsion<'a>(&'a [BigInt]);
        impl Serialize for Torsion<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut seq = s.serialize_seq(Some(self.0.len()))?;
                for d in self.0 {
                    seq.serialize_element(&JsonInt(d.clone()))?;
                }
                seq.end()
            }
        }
        let mut st = s.serialize_struct("InvariantFactors", 2)?;
        st.serialize_field("rank", &self.rank)?;
        st.serialize_field("torsion", &Torsion(&self.torsion))?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for InvariantFactors {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = InvariantFactorsRepr::deserialize(d)?;
        InvariantFactors::new(r.rank, r.torsion.into_iter().map(|j| j.0).collect())
            .map_err(de::Error::custom)
    }
}

/// `ℤ^generators / span(relations)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FgAbGroup {
    generators: usize,
    relations: IntMatrix,
}

/// A group in canonical form together with mutually inverse isomorphisms
/// to and from the presentation it was computed from.
#[derive(Clone, Debug)]
pub struct CanonicalForm {
    /// Generators are ordered torsion first (in divisibility order), then free.
    pub group: FgAbGroup,
    pub invariants: InvariantFactors,
    /// Original coordinates → canonical coordinates.
    pub to_canonical: IntMatrix,
    /// Canonical coordinates → original coordinates.
    pub from_canonical: IntMatrix,
}

/// `Hom(A, ℤ)` as a free group with an explicit basis of dual vectors.
#[derive(Clone, Debug)]
pub struct DualLattice {
    pub group: FgAbGroup,
    /// One row per basis homomorphism, written on the generators of `A`.
    pub basis: IntMatrix,
}

/// A subgroup presented on its own generators, with its inclusion map.
#[derive(Clone, Debug)]
pub struct Subgroup {
    pub group: FgAbGroup,
    pub inclusion: FgAbMap,
}

impl FgAbGroup {
    pub fn new(generators: usize, relations: IntMatrix) -> Result<Self> {
        if relations.rows() != generators {
            return Err(Error::DimensionMismatch(format!(
                "relation matrix has {} rows for {generators} generators",
                relations.rows()
            )));
        }
        Ok(FgAbGroup {
            generators,
            relations,
        })
    }

    pub fn free(n: usize) -> Self {
        FgAbGroup {
            generators: n,
            relations: IntMatrix::zeros(n, 0),
        }
    }

    pub fn trivial() -> Self {
        Self::free(0)
    }

    /// `ℤ/n` (for `n = 0` this is `ℤ`).
    pub fn cyclic(n: impl Into<BigInt>) -> Self {
        FgAbGroup {
            generators: 1,
            relations: IntMatrix::diagonal(1, 1, &[n.into()]),
        }
    }

    /// The group with the given canonical form, presented on generators
    /// ordered torsion first.
    pub fn from_invariants(inv: &InvariantFactors) -> Self {
        let t = inv.torsion.len();
        FgAbGroup {
            generators: t + inv.rank,
            relations: IntMatrix::diagonal(t + inv.rank, t, &inv.torsion),
        }
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn relations(&self) -> &IntMatrix {
        &self.relations
    }

    pub fn invariants(&self) -> InvariantFactors {
        let s = intlat::snf(&self.relations);
        InvariantFactors {
            rank: self.generators - s.rank(),
            torsion: s.diagonal.into_iter().filter(|d| !d.is_one()).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.invariants().rank
    }

    pub fn is_trivial(&self) -> bool {
        self.invariants().is_trivial()
    }

    pub fn is_torsion_free(&self) -> bool {
        self.invariants().torsion.is_empty()
    }

    /// True iff `v` (on the generators) is zero in the group.
    pub fn is_zero_element(&self, v: &[BigInt]) -> bool {
        v.len() == self.generators
            && (v.iter().all(Zero::is_zero) || intlat::solve(&self.relations, v).is_some())
    }

    pub fn direct_sum(&self, other: &FgAbGroup) -> FgAbGroup {
        FgAbGroup {
            generators: self.generators + other.generators,
            relations: self.relations.block_diag(&other.relations),
        }
    }

    pub fn canonical(&self) -> CanonicalForm {
        let n = self.generators;
        let s = intlat::snf(&self.relations);
        let r = s.rank();
        let torsion_idx: Vec<usize> = (0..r).filter(|&i| !s.diagonal[i].is_one()).collect();
        let keep: Vec<usize> = torsion_idx.iter().copied().chain(r..n).collect();
        let torsion: Vec<BigInt> = torsion_idx.iter().map(|&i| s.diagonal[i].clone()).collect();
        let invariants = InvariantFactors {
            rank: n - r,
            torsion,
        };
        CanonicalForm {
            group: FgAbGroup::from_invariants(&invariants),
            invariants,
            to_canonical: s.u.select_rows(keep.iter().copied()),
            from_canonical: s.u_inv.select_cols(keep.iter().copied()),
        }
    }

    /// `Ext⁰(A, ℤ) = Hom(A, ℤ) = Hom(A_t.f., ℤ)`: the dual vectors on the
    /// generators that vanish on every relation.
    pub fn hom_to_z(&self) -> DualLattice {
        let k = intlat::kernel_basis(&self.relations.transpose());
        DualLattice {
            group: FgAbGroup::free(k.cols()),
            basis: k.transpose(),
        }
    }

    /// `Ext¹(A, ℤ) ≅ Hom(A_tors, ℚ/ℤ)`, returned as the abstract finite group
    /// with the torsion invariants of `A`.
    pub fn ext1_to_z(&self) -> FgAbGroup {
        FgAbGroup::from_invariants(&self.invariants().torsion_part())
    }

    /// The torsion subgroup `A_tors` and its inclusion into `A`.
    pub fn torsion_subgroup(&self) -> Subgroup {
        let c = self.canonical();
        let t = c.invariants.torsion.len();
        let group = FgAbGroup::from_invariants(&c.invariants.torsion_part());
        let inclusion = FgAbMap {
            source: group.clone(),
            target: self.clone(),
            matrix: c.from_canonical.select_cols(0..t),
        };
        Subgroup { group, inclusion }
    }

    /// `ker(outgoing) / span(incoming)` for a complex of free groups
    /// `ℤ^a --incoming--> ℤ^n --outgoing--> ℤ^b`.
    pub fn homology(outgoing: &IntMatrix, incoming: &IntMatrix) -> Result<FgAbGroup> {
        if outgoing.cols() != incoming.rows() {
            return Err(Error::DimensionMismatch(format!(
                "homology at a term of rank {} vs {}",
                outgoing.cols(),
                incoming.rows()
            )));
        }
        let k = intlat::kernel_basis(outgoing);
        let coords = intlat::solve_matrix(&k, incoming).ok_or_else(|| {
            Error::IllFormedMap("composite of consecutive differentials is nonzero".into())
        })?;
        FgAbGroup::new(k.cols(), coords)
    }
}

impl fmt::Display for FgAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.invariants())
    }
}

/// A homomorphism given on generators: column `j` of `matrix` is the image of
/// the `j`-th source generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FgAbMap {
    source: FgAbGroup,
    target: FgAbGroup,
    matrix: IntMatrix,
}

impl FgAbMap {
    /// Checks shapes only; use [`FgAbMap::check`] or [`FgAbMap::new_checked`]
    /// for well-definedness.
    pub fn new(source: FgAbGroup, target: FgAbGroup, matrix: IntMatrix) -> Result<Self> {
        if matrix.rows() != target.generators || matrix.cols() != source.generators {
            return Err(Error::DimensionMismatch(format!(
                "map matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                target.generators,
                source.generators
            )));
        }
        Ok(FgAbMap {
            source,
            target,
            matrix,
        })
    }

    pub fn new_checked(source: FgAbGroup, target: FgAbGroup, matrix: IntMatrix) -> Result<Self> {
        let f = Self::new(source, target, matrix)?;
        f.ensure_well_defined()?;
        Ok(f)
    }

    pub fn identity(g: &FgAbGroup) -> Self {
        FgAbMap {
            source: g.clone(),
            target: g.clone(),
            matrix: IntMatrix::identity(g.generators),
        }
    }

    pub fn zero(source: &FgAbGroup, target: &FgAbGroup) -> Self {
        FgAbMap {
            source: source.clone(),
            target: target.clone(),
            matrix: IntMatrix::zeros(target.generators, source.generators),
        }
    }

    pub fn source(&self) -> &FgAbGroup {
        &self.source
    }

    pub fn target(&self) -> &FgAbGroup {
        &self.target
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    /// Well-definedness certificate `Q` with `matrix · R_source = R_target · Q`.
    pub fn certificate(&self) -> Option<IntMatrix> {
        let image = &self.matrix * &self.source.relations;
        if image.is_zero() {
            return Some(IntMatrix::zeros(self.target.relations.cols(), image.cols()));
        }
        intlat::solve_matrix(&self.target.relations, &image)
    }

    pub fn check(&self) -> bool {
        self.certificate().is_some()
    }

    pub fn ensure_well_defined(&self) -> Result<()> {
        if self.check() {
            Ok(())
        } else {
            Err(Error::IllFormedMap(format!(
                "matrix {} does not send the relations of the source into those of the target",
                self.matrix
            )))
        }
    }

    /// `self ∘ first`.
    pub fn compose_after(&self, first: &FgAbMap) -> Result<FgAbMap> {
        if first.target.generators != self.source.generators {
            return Err(Error::DimensionMismatch(
                "composition of incompatible maps".into(),
            ));
        }
        FgAbMap::new(
            first.source.clone(),
            self.target.clone(),
            &self.matrix * &first.matrix,
        )
    }

    pub fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        self.matrix.mul_vec(v)
    }

    /// True iff the two maps agree as homomorphisms (same source and target
    /// presentations; matrices equal modulo target relations).
    pub fn equals(&self, other: &FgAbMap) -> bool {
        self.source == other.source
            && self.target == other.target
            && match self.matrix.sub(&other.matrix) {
                Ok(diff) => (0..diff.cols()).all(|j| self.target.is_zero_element(&diff.col(j))),
                Err(_) => false,
            }
    }

    /// Target with the image columns appended to its relations.
    pub fn cokernel(&self) -> Result<FgAbGroup> {
        self.ensure_well_defined()?;
        FgAbGroup::new(
            self.target.generators,
            self.target.relations.hcat(&self.matrix)?,
        )
    }

    /// `{a ∈ source : f(a) = 0}`, computed by solving `F·a ∈ span(R_target)`
    /// over ℤ and quotienting by the source relations.
    pub fn kernel(&self) -> Result<Subgroup> {
        self.ensure_well_defined()?;
        let ns = self.source.generators;
        let block = self.matrix.hcat(&self.target.relations)?;
        let preimage = intlat::kernel_basis(&block).select_rows(0..ns);
        let basis = intlat::image_basis(&preimage);
        let rel = intlat::solve_matrix(&basis, &self.source.relations).ok_or_else(|| {
            Error::IllFormedMap("source relations are not in the preimage of zero".into())
        })?;
        let group = FgAbGroup::new(basis.cols(), rel)?;
        let inclusion = FgAbMap::new(group.clone(), self.source.clone(), basis)?;
        Ok(Subgroup { group, inclusion })
    }

    /// The image as a quotient of the source: `source / ker`.
    pub fn image(&self) -> Result<FgAbGroup> {
        let k = self.kernel()?;
        FgAbGroup::new(
            self.source.generators,
            self.source.relations.hcat(k.inclusion.matrix())?,
        )
    }

    pub fn is_injective(&self) -> Result<bool> {
        Ok(self.kernel()?.group.is_trivial())
    }

    pub fn is_surjective(&self) -> Result<bool> {
        Ok(self.cokernel()?.is_trivial())
    }

    pub fn is_isomorphism(&self) -> Result<bool> {
        Ok(self.is_injective()? && self.is_surjective()?)
    }

    /// Factors `self` through a subgroup `sub ↪ target` known to contain
    /// the image: returns `g: source → sub` with `inclusion ∘ g = self`.
    pub fn lift_through(&self, sub: &Subgroup) -> Result<FgAbMap> {
        let inc = &sub.inclusion;
        if inc.target != self.target {
            return Err(Error::DimensionMismatch(
                "subgroup of a different group".into(),
            ));
        }
        let k = inc.matrix.cols();
        let block = inc.matrix.hcat(&self.target.relations)?;
        let x = intlat::solve_matrix(&block, &self.matrix).ok_or_else(|| {
            Error::IllFormedMap("image does not lie in the given subgroup".into())
        })?;
        FgAbMap::new_checked(self.source.clone(), sub.group.clone(), x.select_rows(0..k))
    }

    /// The dual map `Hom(target, ℤ) → Hom(source, ℤ)`, `ψ ↦ ψ ∘ f`, written in
    /// the bases returned by [`FgAbGroup::hom_to_z`].
    pub fn dual(&self) -> Result<FgAbMap> {
        self.ensure_well_defined()?;
        let ds = self.source.hom_to_z();
        let dt = self.target.hom_to_z();
        let pulled = (&dt.basis * &self.matrix).transpose();
        let coords = intlat::solve_matrix(&ds.basis.transpose(), &pulled).ok_or_else(|| {
            Error::IllFormedMap("pulled-back functional does not vanish on relations".into())
        })?;
        FgAbMap::new(dt.group, ds.group, coords)
    }

    /// The induced map `Hom(target_tors, ℚ/ℤ) → Hom(source_tors, ℚ/ℤ)`.
    ///
    /// Both groups are written as `⊕ ℤ/dᵢ` on the characters dual to the
    /// canonical torsion generators: `χᵢ(gⱼ) = δᵢⱼ/dᵢ`.
    pub fn torsion_dual(&self) -> Result<FgAbMap> {
        self.ensure_well_defined()?;
        let cs = self.source.canonical();
        let ct = self.target.canonical();
        let ts = &cs.invariants.torsion;
        let tt = &ct.invariants.torsion;
        let src = FgAbGroup::from_invariants(&ct.invariants.torsion_part());
        let dst = FgAbGroup::from_invariants(&cs.invariants.torsion_part());
        let mut m = IntMatrix::zeros(ts.len(), tt.len());
        for (j, dj) in ts.iter().enumerate() {
            let g = cs.from_canonical.col(j);
            let img = ct.to_canonical.mul_vec(&self.matrix.mul_vec(&g));
            for (i, di) in tt.iter().enumerate() {
                // χᵢ(f(gⱼ)) = a/dᵢ = (a·dⱼ/dᵢ)/dⱼ, integral since dⱼ·f(gⱼ) = 0
                let num = &img[i] * dj;
                let (q, r) = num.div_rem(di);
                debug_assert!(r.is_zero());
                m[(j, i)] = q.mod_floor(dj);
            }
        }
        FgAbMap::new(src, dst, m)
    }
}
