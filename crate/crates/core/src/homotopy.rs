//! `π₁` and `π₂` of a homogeneous space `X = G/H`.
//!
//! Two routes compute `π₁(X)(−1)`:
//!
//! * the character route, `Ext⁰([Ĝ → Ĥ⟩, ℤ)`, valid when `Pic(G) = 0` and
//!   `H^ker.char` is connected (automatic when `H` is connected or abelian);
//! * the algebraic-fundamental-group route, `coker[π₁^alg(H) → π₁^alg(G)]`,
//!   valid when `H` is connected, with no condition on `G`.
//!
//! `π₂(X)(−1) = ker[π₁^alg(H⁰) → π₁^alg(G)]` needs no hypothesis.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::extcplx::{self, TwoTermComplex};
use crate::fgab::{FgAbMap, InvariantFactors};
use crate::intlat::{self, IntMatrix};
use crate::rootdata::{
    induced_char_map, induced_pi1alg_map, pic_group, EmbeddingDescriptor, GroupDescriptor,
};

/// `G`, `H`, the embedding, and the resolved hypothesis flags.
#[derive(Clone, Debug)]
pub struct SpaceDescriptor {
    g: GroupDescriptor,
    h: GroupDescriptor,
    e: EmbeddingDescriptor,
    h_connected: bool,
    h_ker_char_connected: bool,
}

impl SpaceDescriptor {
    /// Validates the data and resolves the flags.
    ///
    /// For `H` of multiplicative type, connectedness is read off `Ĥ` and
    /// `H^ker.char` is connected because `H` is abelian. For reductive `H`,
    /// `h_connected` defaults to true, and a connected `H` has connected
    /// `H^ker.char`. A supplied flag that contradicts these is an error.
    pub fn new(g: GroupDescriptor, h: GroupDescriptor, e: EmbeddingDescriptor) -> Result<Self> {
        g.validate()?;
        h.validate()?;
        if let GroupDescriptor::Multiplicative(c) = &g {
            if !c.is_torsion_free() {
                return Err(Error::InvalidInput(format!(
                    "G must be connected, but its character group {} has torsion",
                    c.invariants()
                )));
            }
        }
        let (h_connected, h_ker_char_connected) = match &h {
            GroupDescriptor::Multiplicative(c) => {
                let connected = c.is_torsion_free();
                if let Some(flag) = e.h_connected {
                    if flag != connected {
                        return Err(Error::InvalidInput(format!(
                            "flags.h_connected = {flag} contradicts the character group {} of H",
                            c.invariants()
                        )));
                    }
                }
                if e.h_ker_char_connected == Some(false) {
                    return Err(Error::InvalidInput(
                        "flags.h_ker_char_connected = false, but H is abelian".into(),
                    ));
                }
                (connected, true)
            }
            GroupDescriptor::Reductive(_) => {
                let connected = e.h_connected.unwrap_or(true);
                if connected && e.h_ker_char_connected == Some(false) {
                    return Err(Error::InvalidInput(
                        "flags.h_ker_char_connected = false, but H is connected".into(),
                    ));
                }
                (
                    connected,
                    connected || e.h_ker_char_connected.unwrap_or(false),
                )
            }
        };
        // surfaces malformed embeddings at construction
        induced_char_map(&g, &h, &e)?;
        Ok(SpaceDescriptor {
            g,
            h,
            e,
            h_connected,
            h_ker_char_connected,
        })
    }

    pub fn g(&self) -> &GroupDescriptor {
        &self.g
    }

    pub fn h(&self) -> &GroupDescriptor {
        &self.h
    }

    pub fn embedding(&self) -> &EmbeddingDescriptor {
        &self.e
    }

    pub fn h_connected(&self) -> bool {
        self.h_connected
    }

    pub fn h_ker_char_connected(&self) -> bool {
        self.h_ker_char_connected
    }

    /// `[Ĝ → Ĥ⟩`.
    pub fn char_complex(&self) -> Result<TwoTermComplex> {
        TwoTermComplex::new(induced_char_map(&self.g, &self.h, &self.e)?)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    ThmMain,
    ThmPi2,
    Both,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::ThmMain => "thm_main",
            Method::ThmPi2 => "thm_pi2",
            Method::Both => "both",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Gate {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Gate {
    fn new(name: &str, passed: bool, detail: impl Into<String>) -> Self {
        Gate {
            name: name.to_string(),
            passed,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomotopyResult {
    pub group: InvariantFactors,
    pub method: Method,
    pub gates: Vec<Gate>,
}

/// Checks `Pic(G) = 0` and connectedness of `H^ker.char`.
fn main_gates(s: &SpaceDescriptor) -> Result<Vec<Gate>> {
    let pic = pic_group(&s.g)?.invariants();
    if !pic.is_trivial() {
        return Err(Error::PicNonTrivial(pic));
    }
    let mut gates = vec![Gate::new("pic_trivial", true, "Pic(G) = 0")];
    if !s.h_ker_char_connected {
        return Err(Error::HKerCharNotConnected);
    }
    if !s.h_connected && matches!(s.h, GroupDescriptor::Reductive(_)) {
        // a root datum only sees H⁰, so Ĥ is unknown
        return Err(Error::NotApplicable(
            "the character group of a disconnected H cannot be read off a root datum; \
             describe H by its character group instead"
                .into(),
        ));
    }
    gates.push(Gate::new(
        "h_ker_char_connected",
        true,
        "H^ker.char is connected",
    ));
    Ok(gates)
}

/// `π₁(X)(−1) = Ext⁰([Ĝ → Ĥ⟩, ℤ)`, computed through the fiber-product
/// replacement and cross-checked against free resolutions.
pub fn pi1_thm_main(s: &SpaceDescriptor) -> Result<HomotopyResult> {
    let mut gates = main_gates(s)?;
    let k = s.char_complex()?;
    let fiber = extcplx::ext0_fiber_product(&k)?.invariants();
    let resolution = extcplx::ext0_resolution(&k)?.invariants();
    if fiber != resolution {
        return Err(Error::InternalDisagreement(format!(
            "Ext⁰ via fiber product is {fiber}, via resolution {resolution}"
        )));
    }
    gates.push(Gate::new(
        "ext0_cross_check",
        true,
        format!("resolution route gives {resolution}"),
    ));
    Ok(HomotopyResult {
        group: fiber,
        method: Method::ThmMain,
        gates,
    })
}

/// `π₁(X)(−1) = coker[π₁^alg(H) → π₁^alg(G)]` for connected `H`.
pub fn pi1_thm_pi2(s: &SpaceDescriptor) -> Result<HomotopyResult> {
    if !s.h_connected {
        return Err(Error::HNotConnected);
    }
    let map = induced_pi1alg_map(&s.g, &s.h, &s.e)?;
    let group = map.cokernel()?.invariants();
    Ok(HomotopyResult {
        group,
        method: Method::ThmPi2,
        gates: vec![Gate::new("h_connected", true, "H is connected")],
    })
}

/// `π₂(X)(−1) = ker[π₁^alg(H⁰) → π₁^alg(G)]`.
pub fn pi2(s: &SpaceDescriptor) -> Result<HomotopyResult> {
    let map = induced_pi1alg_map(&s.g, &s.h, &s.e)?;
    let group = map.kernel()?.group.invariants();
    Ok(HomotopyResult {
        group,
        method: Method::ThmPi2,
        gates: Vec::new(),
    })
}

/// Which `π₁` route to run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum MethodChoice {
    /// The algebraic-fundamental-group route for connected reductive `H`,
    /// the character route otherwise.
    #[default]
    Auto,
    ThmMain,
    ThmPi2,
    /// Both routes; they must succeed and agree.
    Both,
}

pub fn pi1(s: &SpaceDescriptor, choice: MethodChoice) -> Result<HomotopyResult> {
    match choice {
        MethodChoice::Auto => {
            if s.h_connected && matches!(s.h, GroupDescriptor::Reductive(_)) {
                pi1_thm_pi2(s)
            } else {
                pi1_thm_main(s)
            }
        }
        MethodChoice::ThmMain => pi1_thm_main(s),
        MethodChoice::ThmPi2 => pi1_thm_pi2(s),
        MethodChoice::Both => combine(pi1_thm_main(s)?, pi1_thm_pi2(s)?),
    }
}

fn combine(main: HomotopyResult, other: HomotopyResult) -> Result<HomotopyResult> {
    if main.group != other.group {
        return Err(Error::InternalDisagreement(format!(
            "π₁ is {} by the character route but {} by the π₁^alg route",
            main.group, other.group
        )));
    }
    let mut gates = main.gates;
    gates.extend(other.gates);
    Ok(HomotopyResult {
        group: main.group,
        method: Method::Both,
        gates,
    })
}

/// Every applicable computation for one space.
#[derive(Clone, Debug)]
pub struct AllResults {
    pub pi1_thm_main: Result<HomotopyResult>,
    pub pi1_thm_pi2: Result<HomotopyResult>,
    /// The agreed `π₁`: method `Both` when both routes ran.
    pub pi1: Result<HomotopyResult>,
    pub pi2: Result<HomotopyResult>,
}

pub fn compute_all(s: &SpaceDescriptor) -> AllResults {
    let main = pi1_thm_main(s);
    let other = pi1_thm_pi2(s);
    let pi1 = match (&main, &other) {
        (Ok(a), Ok(b)) => combine(a.clone(), b.clone()),
        (Ok(a), Err(e)) | (Err(e), Ok(a)) => {
            if matches!(e, Error::InternalDisagreement(_)) {
                Err(e.clone())
            } else {
                Ok(a.clone())
            }
        }
        (Err(a), Err(b)) => {
            if matches!(b, Error::InternalDisagreement(_)) {
                Err(b.clone())
            } else {
                Err(a.clone())
            }
        }
    };
    AllResults {
        pi1_thm_main: main,
        pi1_thm_pi2: other,
        pi1,
        pi2: pi2(s),
    }
}

/// The exact sequence
///
/// `Hom(Ĥ,ℤ) → Hom(Ĝ,ℤ) → π₁(X)(−1) → Hom(Ĥ_tors,ℚ/ℤ) → 0`
///
/// with its first two maps. The last term surjects because `Ĝ` is
/// torsion-free.
#[derive(Clone, Debug)]
pub struct ExactSequenceReport {
    pub hom_h: InvariantFactors,
    pub hom_g: InvariantFactors,
    pub pi1: InvariantFactors,
    pub torsion_dual_h: InvariantFactors,
    /// `i_*: Hom(Ĥ,ℤ) → Hom(Ĝ,ℤ)`.
    pub i_star: FgAbMap,
    /// `Hom(Ĝ,ℤ) → π₁`, landing in the canonical presentation of `π₁`.
    pub to_pi1: FgAbMap,
    /// When `Ĥ` is torsion-free: `coker(i_*)`, the cokernel of the map of
    /// cocharacter lattices, which equals `π₁`.
    pub torus_cokernel: Option<InvariantFactors>,
    pub gates: Vec<Gate>,
}

pub fn exact_sequence(s: &SpaceDescriptor) -> Result<ExactSequenceReport> {
    let gates = main_gates(s)?;
    let k = s.char_complex()?;
    let chi = k.alpha();
    let (b, phi) = extcplx::fiber_product_replacement(&k, &extcplx::default_surjection(k.a1()))?;
    let (coker, q) = extcplx::dual_cokernel(&b)?;
    let canon = coker.canonical();
    let to_canonical = FgAbMap::new(coker, canon.group.clone(), canon.to_canonical)?;
    let to_pi1 = to_canonical.compose_after(&q.compose_after(&phi.f0().dual()?)?)?;
    let i_star = chi.dual()?;

    let composite = to_pi1.compose_after(&i_star)?;
    let composite_zero = (0..composite.matrix().cols())
        .all(|j| canon.group.is_zero_element(&composite.matrix().col(j)));
    let kernel = to_pi1.kernel()?.inclusion.matrix().clone();
    let exact_middle = lattice_eq(&kernel, i_star.matrix());
    let torsion_dual_h = k.a1().invariants().torsion_part();
    let exact_right = to_pi1.cokernel()?.invariants() == torsion_dual_h;
    if !(composite_zero && exact_middle && exact_right) {
        return Err(Error::InternalDisagreement(format!(
            "sequence for π₁ = {} fails exactness (composite zero: {composite_zero}, \
             middle: {exact_middle}, right: {exact_right})",
            canon.invariants
        )));
    }

    let torus_cokernel = if k.a1().is_torsion_free() {
        let c = i_star.cokernel()?.invariants();
        if c != canon.invariants {
            return Err(Error::InternalDisagreement(format!(
                "cokernel of cocharacter lattices is {c}, but π₁ = {}",
                canon.invariants
            )));
        }
        Some(c)
    } else {
        None
    };

    Ok(ExactSequenceReport {
        hom_h: i_star.source().invariants(),
        hom_g: i_star.target().invariants(),
        pi1: canon.invariants,
        torsion_dual_h,
        i_star,
        to_pi1,
        torus_cokernel,
        gates,
    })
}

/// Equality of the lattices spanned by the columns, allowing empty spans.
fn lattice_eq(a: &IntMatrix, b: &IntMatrix) -> bool {
    let span = |m: &IntMatrix| intlat::image_basis(m);
    let (a, b) = (span(a), span(b));
    match (a.cols(), b.cols()) {
        (0, 0) => true,
        (0, _) | (_, 0) => false,
        _ => intlat::same_lattice(&a, &b),
    }
}
