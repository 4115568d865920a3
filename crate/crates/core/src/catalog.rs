//! Named classical groups and standard embeddings.
//!
//! Coordinate conventions (fixed, so serialized descriptors are reproducible):
//!
//! * `GL(n)`: rank `n`, roots and coroots `eᵢ − eⱼ` (i ≠ j).
//! * `SL(n)`: rank `n − 1`; `X^∨` has the simple coroots as basis and `X` the
//!   fundamental weights, so simple roots are the columns of the Cartan
//!   matrix. `SL(2)` is rank 1 with roots `±2`, coroots `±1`.
//! * `PGL(n)`: rank `n − 1`; `X` has the simple roots as basis and `X^∨` the
//!   fundamental coweights.
//! * `Sp(2m)`: rank `m`, type `C_m` in `ℤ^m`: roots `±eᵢ ± eⱼ`, `±2eᵢ`;
//!   coroots `±eᵢ ± eⱼ`, `±eᵢ`.
//! * `SO(2m+1)`: type `B_m` in `ℤ^m`: roots `±eᵢ ± eⱼ`, `±eᵢ`; coroots
//!   `±eᵢ ± eⱼ`, `±2eᵢ`. `SO(2m)`: type `D_m`, roots = coroots = `±eᵢ ± eⱼ`.
//! * `Spin(n)`: the simply connected datum of the type of `SO(n)`, in the
//!   simple-coroot basis of `X^∨` as for `SL(n)`.
//! * `Torus(n)`: rank `n`, no roots. `Mu(n)`: multiplicative, `Ĥ = ℤ/n`.
//!
//! Within each datum the positive roots come first (ordered as generated
//! below), followed by their negatives in the same order.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fgab::FgAbGroup;
use crate::intlat::{self, IntMatrix};
use crate::rootdata::{EmbeddingDescriptor, GroupDescriptor, RootDatum};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "catalog", deny_unknown_fields)]
pub enum CatalogGroup {
    SL {
        n: usize,
    },
    GL {
        n: usize,
    },
    PGL {
        n: usize,
    },
    /// `n` is the size of the matrices, so it must be even.
    Sp {
        n: usize,
    },
    SO {
        n: usize,
    },
    Spin {
        n: usize,
    },
    Torus {
        n: usize,
    },
    Mu {
        n: usize,
    },
    Product {
        factors: Vec<CatalogGroup>,
    },
}

pub const CATALOG_NAMES: &[&str] = &[
    "SL", "GL", "PGL", "Sp", "SO", "Spin", "Torus", "Mu", "Product",
];

/// Looks up a group by name and size parameter.
pub fn make_group(name: &str, n: usize) -> Result<GroupDescriptor> {
    let g = match name {
        "SL" => CatalogGroup::SL { n },
        "GL" => CatalogGroup::GL { n },
        "PGL" => CatalogGroup::PGL { n },
        "Sp" => CatalogGroup::Sp { n },
        "SO" => CatalogGroup::SO { n },
        "Spin" => CatalogGroup::Spin { n },
        "Torus" => CatalogGroup::Torus { n },
        "Mu" => CatalogGroup::Mu { n },
        other => return Err(Error::UnknownName(other.to_string())),
    };
    g.descriptor()
}

impl CatalogGroup {
    pub fn descriptor(&self) -> Result<GroupDescriptor> {
        use CatalogGroup::*;
        let rd = match *self {
            SL { n } => simply_connected(&type_a(at_least(n, 1, "SL")? - 1)),
            GL { n } => type_a(at_least(n, 1, "GL")? - 1).datum,
            PGL { n } => adjoint(&type_a(at_least(n, 1, "PGL")? - 1)),
            Sp { n } => {
                if n == 0 || n % 2 == 1 {
                    return Err(Error::BadParams(format!(
                        "Sp(n) needs a positive even n, got {n}"
                    )));
                }
                type_c(n / 2).datum
            }
            SO { n } => orthogonal(at_least(n, 3, "SO")?).datum,
            Spin { n } => simply_connected(&orthogonal(at_least(n, 3, "Spin")?)),
            Torus { n } => RootDatum::torus(n),
            Mu { n } => {
                at_least(n, 1, "Mu")?;
                return Ok(GroupDescriptor::Multiplicative(FgAbGroup::cyclic(
                    BigInt::from(n),
                )));
            }
            Product { ref factors } => return product(factors),
        };
        debug_assert!(
            rd.validate().is_ok(),
            "catalog datum for {self:?} fails the axioms"
        );
        Ok(GroupDescriptor::Reductive(rd))
    }

    pub fn name(&self) -> String {
        use CatalogGroup::*;
        match self {
            SL { n } => format!("SL({n})"),
            GL { n } => format!("GL({n})"),
            PGL { n } => format!("PGL({n})"),
            Sp { n } => format!("Sp({n})"),
            SO { n } => format!("SO({n})"),
            Spin { n } => format!("Spin({n})"),
            Torus { n } => format!("Torus({n})"),
            Mu { n } => format!("Mu({n})"),
            Product { factors } => {
                let inner: Vec<String> = factors.iter().map(|f| f.name()).collect();
                format!("Product({})", inner.join(", "))
            }
        }
    }
}

fn at_least(n: usize, min: usize, name: &str) -> Result<usize> {
    if n < min {
        Err(Error::BadParams(format!(
            "{name}(n) needs n ≥ {min}, got {n}"
        )))
    } else {
        Ok(n)
    }
}

fn product(factors: &[CatalogGroup]) -> Result<GroupDescriptor> {
    let descs = factors
        .iter()
        .map(CatalogGroup::descriptor)
        .collect::<Result<Vec<_>>>()?;
    if descs
        .iter()
        .all(|d| matches!(d, GroupDescriptor::Reductive(_)))
    {
        let rd = descs.iter().fold(RootDatum::torus(0), |acc, d| {
            acc.product(d.root_datum().expect("checked reductive"))
        });
        Ok(GroupDescriptor::Reductive(rd))
    } else if descs
        .iter()
        .all(|d| matches!(d, GroupDescriptor::Multiplicative(_)))
    {
        let ch = descs.iter().fold(FgAbGroup::trivial(), |acc, d| match d {
            GroupDescriptor::Multiplicative(c) => acc.direct_sum(c),
            GroupDescriptor::Reductive(_) => unreachable!(),
        });
        Ok(GroupDescriptor::Multiplicative(ch))
    } else {
        Err(Error::BadParams(
            "a product must have all factors reductive or all of multiplicative type".into(),
        ))
    }
}

/// A root datum in standard `ℤ^m` coordinates together with a choice of
/// simple roots and simple coroots.
struct StandardSystem {
    datum: RootDatum,
    simple_roots: IntMatrix,
    simple_coroots: IntMatrix,
}

fn unit(m: usize, i: usize, c: i64) -> Vec<i64> {
    let mut v = vec![0; m];
    v[i] += c;
    v
}

fn combo(m: usize, terms: &[(usize, i64)]) -> Vec<i64> {
    let mut v = vec![0; m];
    for &(i, c) in terms {
        v[i] += c;
    }
    v
}

/// Builds the datum from positive roots/coroots by appending the negatives.
fn with_negatives(
    m: usize,
    pos: Vec<(Vec<i64>, Vec<i64>)>,
    simple: Vec<(Vec<i64>, Vec<i64>)>,
) -> StandardSystem {
    let neg = |v: &Vec<i64>| v.iter().map(|x| -x).collect::<Vec<i64>>();
    let mut roots: Vec<Vec<i64>> = pos.iter().map(|(r, _)| r.clone()).collect();
    let mut coroots: Vec<Vec<i64>> = pos.iter().map(|(_, c)| c.clone()).collect();
    roots.extend(pos.iter().map(|(r, _)| neg(r)));
    coroots.extend(pos.iter().map(|(_, c)| neg(c)));
    let sr: Vec<Vec<i64>> = simple.iter().map(|(r, _)| r.clone()).collect();
    let sc: Vec<Vec<i64>> = simple.iter().map(|(_, c)| c.clone()).collect();
    StandardSystem {
        datum: RootDatum::from_vecs(m, &roots, &coroots).expect("consistent standard datum"),
        simple_roots: IntMatrix::from_cols(m, &sr).expect("simple roots"),
        simple_coroots: IntMatrix::from_cols(m, &sc).expect("simple coroots"),
    }
}

/// `A_r` in `ℤ^{r+1}` (the `GL(r+1)` datum).
fn type_a(r: usize) -> StandardSystem {
    let m = r + 1;
    let mut pos = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            let v = combo(m, &[(i, 1), (j, -1)]);
            pos.push((v.clone(), v));
        }
    }
    let simple = (0..r)
        .map(|i| {
            let v = combo(m, &[(i, 1), (i + 1, -1)]);
            (v.clone(), v)
        })
        .collect();
    with_negatives(m, pos, simple)
}

/// Roots `eᵢ ± eⱼ` (i < j), shared by types B, C, D.
fn long_pairs(m: usize) -> Vec<(Vec<i64>, Vec<i64>)> {
    let mut pos = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            let a = combo(m, &[(i, 1), (j, -1)]);
            let b = combo(m, &[(i, 1), (j, 1)]);
            pos.push((a.clone(), a));
            pos.push((b.clone(), b));
        }
    }
    pos
}

fn chain_simple(m: usize) -> Vec<(Vec<i64>, Vec<i64>)> {
    (0..m.saturating_sub(1))
        .map(|i| {
            let v = combo(m, &[(i, 1), (i + 1, -1)]);
            (v.clone(), v)
        })
        .collect()
}

fn type_b(m: usize) -> StandardSystem {
    let mut pos = long_pairs(m);
    pos.extend((0..m).map(|i| (unit(m, i, 1), unit(m, i, 2))));
    let mut simple = chain_simple(m);
    simple.push((unit(m, m - 1, 1), unit(m, m - 1, 2)));
    with_negatives(m, pos, simple)
}

fn type_c(m: usize) -> StandardSystem {
    let mut pos = long_pairs(m);
    pos.extend((0..m).map(|i| (unit(m, i, 2), unit(m, i, 1))));
    let mut simple = chain_simple(m);
    simple.push((unit(m, m - 1, 2), unit(m, m - 1, 1)));
    with_negatives(m, pos, simple)
}

fn type_d(m: usize) -> StandardSystem {
    let pos = long_pairs(m);
    let mut simple = chain_simple(m);
    let last = combo(m, &[(m - 2, 1), (m - 1, 1)]);
    simple.push((last.clone(), last));
    with_negatives(m, pos, simple)
}

/// `SO(n)` datum: `B_m` for `n = 2m + 1`, `D_m` for `n = 2m`.
fn orthogonal(n: usize) -> StandardSystem {
    if n % 2 == 1 {
        type_b(n / 2)
    } else {
        type_d(n / 2)
    }
}

/// Simply connected datum of the semisimple part: `X^∨ = ℤR^∨` on the simple
/// coroots, `X` its dual.
fn simply_connected(s: &StandardSystem) -> RootDatum {
    let b = &s.simple_coroots;
    let coroots = intlat::solve_matrix(b, s.datum.coroots()).expect("simple coroots span ℤR^∨");
    let roots = &b.transpose() * s.datum.roots();
    RootDatum::new(b.cols(), roots, coroots).expect("consistent shapes")
}

/// Adjoint datum: `X = ℤR` on the simple roots, `X^∨` its dual.
fn adjoint(s: &StandardSystem) -> RootDatum {
    let b = &s.simple_roots;
    let roots = intlat::solve_matrix(b, s.datum.roots()).expect("simple roots span ℤR");
    let coroots = &b.transpose() * s.datum.coroots();
    RootDatum::new(b.cols(), roots, coroots).expect("consistent shapes")
}

/// Standard embeddings `H ↪ G`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum CatalogEmbedding {
    /// The maximal torus of the given group.
    MaximalTorus { group: CatalogGroup },
    /// `SL(m) ⊂ SL(n)` as the upper-left block.
    Block { m: usize, n: usize },
    /// `μ_n ⊂ SL(n)` as the center.
    CenterMu { n: usize },
    /// A subtorus of `Torus(ambient_rank)` given by a cocharacter matrix.
    Subtorus {
        ambient_rank: usize,
        matrix: Vec<Vec<i64>>,
    },
    /// `SL(n) ⊂ GL(n)`.
    DetKernel { n: usize },
    /// The one-dimensional torus with cocharacter `(1, …, 1)` in the
    /// coordinates of the given group.
    DiagonalTorusIn { group: CatalogGroup },
    /// The trivial subgroup.
    Trivial { group: CatalogGroup },
}

/// Builds `(G, H, embedding)`. Every catalog `H` is connected or abelian, so
/// both hypothesis flags are set to true unless `H` is disconnected.
pub fn make_embedding(
    kind: &CatalogEmbedding,
) -> Result<(GroupDescriptor, GroupDescriptor, EmbeddingDescriptor)> {
    use CatalogEmbedding::*;
    let (g, h, map) = match kind {
        MaximalTorus { group } => {
            let g = group.descriptor()?;
            let r = reductive_rank(&g, "maximal_torus")?;
            (
                g,
                GroupDescriptor::Reductive(RootDatum::torus(r)),
                EmbeddingDescriptor::cocharacter(IntMatrix::identity(r)),
            )
        }
        Block { m, n } => {
            if *m == 0 || m >= n {
                return Err(Error::BadParams(format!(
                    "block SL({m}) ⊂ SL({n}) needs 1 ≤ m < n"
                )));
            }
            // simple coroots of SL(m) go to the first m − 1 simple coroots of SL(n)
            let mut mat = IntMatrix::zeros(n - 1, m - 1);
            for i in 0..m - 1 {
                mat[(i, i)] = BigInt::from(1);
            }
            (
                CatalogGroup::SL { n: *n }.descriptor()?,
                CatalogGroup::SL { n: *m }.descriptor()?,
                EmbeddingDescriptor::cocharacter(mat),
            )
        }
        CenterMu { n } => {
            let g = CatalogGroup::SL { n: *n }.descriptor()?;
            let h = CatalogGroup::Mu { n: *n }.descriptor()?;
            // Ĝ = 0
            (g, h, EmbeddingDescriptor::character(IntMatrix::zeros(1, 0)))
        }
        Subtorus {
            ambient_rank,
            matrix,
        } => {
            let k = matrix.first().map_or(0, Vec::len);
            if matrix.len() != *ambient_rank {
                return Err(Error::BadParams(format!(
                    "subtorus matrix needs {ambient_rank} rows, got {}",
                    matrix.len()
                )));
            }
            let mat =
                IntMatrix::from_rows(k, matrix).map_err(|e| Error::BadParams(e.to_string()))?;
            (
                GroupDescriptor::Reductive(RootDatum::torus(*ambient_rank)),
                GroupDescriptor::Reductive(RootDatum::torus(k)),
                EmbeddingDescriptor::cocharacter(mat),
            )
        }
        DetKernel { n } => {
            let n = at_least(*n, 1, "det_kernel")?;
            let mut mat = IntMatrix::zeros(n, n - 1);
            for i in 0..n - 1 {
                mat[(i, i)] = BigInt::from(1);
                mat[(i + 1, i)] = BigInt::from(-1);
            }
            (
                CatalogGroup::GL { n }.descriptor()?,
                CatalogGroup::SL { n }.descriptor()?,
                EmbeddingDescriptor::cocharacter(mat),
            )
        }
        DiagonalTorusIn { group } => {
            let g = group.descriptor()?;
            let r = reductive_rank(&g, "diagonal_torus_in")?;
            if r == 0 {
                return Err(Error::BadParams(
                    "diagonal torus in a group of rank 0".into(),
                ));
            }
            let mat = IntMatrix::from_rows(1, &vec![vec![1i64]; r]).expect("column of ones");
            (
                g,
                GroupDescriptor::Reductive(RootDatum::torus(1)),
                EmbeddingDescriptor::cocharacter(mat),
            )
        }
        Trivial { group } => {
            let g = group.descriptor()?;
            let r = reductive_rank(&g, "trivial")?;
            (
                g,
                GroupDescriptor::Reductive(RootDatum::torus(0)),
                EmbeddingDescriptor::cocharacter(IntMatrix::zeros(r, 0)),
            )
        }
    };
    let mut e = map;
    e.h_connected = Some(h.is_connected());
    e.h_ker_char_connected = Some(true);
    Ok((g, h, e))
}

fn reductive_rank(g: &GroupDescriptor, what: &str) -> Result<usize> {
    g.root_datum()
        .map(RootDatum::rank)
        .ok_or_else(|| Error::BadParams(format!("{what} needs a reductive group")))
}

/// Every catalog group family with sizes up to `max_n`, for listings and tests.
pub fn catalog_groups(max_n: usize) -> Vec<CatalogGroup> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.push(CatalogGroup::SL { n });
        out.push(CatalogGroup::GL { n });
        out.push(CatalogGroup::PGL { n });
        if n % 2 == 0 {
            out.push(CatalogGroup::Sp { n });
        }
        if n >= 3 {
            out.push(CatalogGroup::SO { n });
            out.push(CatalogGroup::Spin { n });
        }
        out.push(CatalogGroup::Torus { n });
    }
    out
}
