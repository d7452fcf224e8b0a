//! The bundled instances, built from their defining data. The files under
//! `fixtures/` are the canonical emission of these values.

use std::collections::BTreeMap;

use crate::constructions::{
    group_algebra, hom_group_algebra, pushforward, twist_group, yau_twist_hopf, FiniteGroup,
    HomGroup,
};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::format::StructureFile;
use crate::linalg::{LinMap, SparseVec, Vector};
use crate::qmatrix::{self, QParams};
use crate::structures::{HomAlgebra, HomBialgebra, HomCoalgebra, HomHopfCandidate};

pub const NAMES: [&str; 11] = [
    "c2_classical",
    "c3_twist",
    "c4_sq_twist",
    "example_2d",
    "example_2dbi",
    "example_2dco",
    "homgroup_c4",
    "homgroup_c4_index",
    "prim3",
    "qmatrix_d2",
    "qmatrix_d4",
];

fn two_d_names() -> Vec<String> {
    vec!["e1".into(), "e2".into()]
}

/// `e1 e1 = e1`, `e1 e2 = e2 e1 = e2 e2 = e2`, `η(1) = e1`,
/// `α(e1) = 2e1 - e2`, `α(e2) = e2`.
pub fn example_2d_algebra() -> HomAlgebra {
    let mul = LinMap::from_columns(
        2,
        vec![
            SparseVec::unit(0),
            SparseVec::unit(1),
            SparseVec::unit(1),
            SparseVec::unit(1),
        ],
    )
    .expect("four columns");
    let alpha = LinMap::from_int_rows(&[&[2, 0], &[-1, 1]]);
    HomAlgebra::new(mul, Vector::from_ints(&[1, 0]), alpha).expect("valid shapes")
}

/// `Δ(e1) = e1 ⊗ e1`, `Δ(e2) = e1 ⊗ e2 + e2 ⊗ e1 - 2 e2 ⊗ e2`,
/// `ε = (1, 0)`, `β(e1) = e1 + e2`, `β(e2) = e2`.
pub fn example_2dco_coalgebra() -> HomCoalgebra {
    let d1 = SparseVec::unit(0);
    let mut d2 = SparseVec::new();
    d2.add_term(1, &Scalar::one());
    d2.add_term(2, &Scalar::one());
    d2.add_term(3, &Scalar::from_int(-2));
    let comul = LinMap::from_columns(4, vec![d1, d2]).expect("two columns");
    let counit = LinMap::row_vector(&Vector::from_ints(&[1, 0]));
    let beta = LinMap::from_int_rows(&[&[1, 0], &[1, 1]]);
    HomCoalgebra::new(comul, counit, beta).expect("valid shapes")
}

pub fn example_2dbi() -> HomBialgebra {
    HomBialgebra::new(example_2d_algebra(), example_2dco_coalgebra()).expect("equal dimensions")
}

/// `C4` with `a ∗ b = 2(a + b)`, `α(a) = 2a`; elements of odd order need
/// one application of `α` before `a ∗ a⁻¹` reaches the unit.
pub fn homgroup_c4_index_group() -> HomGroup {
    let table = (0..4)
        .map(|a| (0..4).map(|b| (2 * (a + b)) % 4).collect())
        .collect();
    HomGroup::new(
        (0..4).map(|i| i.to_string()).collect(),
        table,
        vec![0, 2, 0, 2],
        0,
        vec![0, 0, 0, 2],
        4,
    )
    .expect("valid Hom-group")
}

/// Basis `1, x, y`: `α` projects onto `1`, `β = Id`, all products but
/// `1·1 = 1` vanish, and `x`, `y` are primitive with `S(v) = -v`.
pub fn prim3() -> HomHopfCandidate {
    let n = 3;
    let mut mul_cols = vec![SparseVec::new(); n * n];
    mul_cols[0] = SparseVec::unit(0);
    let mul = LinMap::from_columns(n, mul_cols).expect("nine columns");
    let alpha = LinMap::from_int_rows(&[&[1, 0, 0], &[0, 0, 0], &[0, 0, 0]]);
    let algebra = HomAlgebra::new(mul, Vector::basis(n, 0), alpha).expect("valid shapes");
    let comul_cols = (0..n)
        .map(|x| {
            let mut v = SparseVec::new();
            if x == 0 {
                v.add_term(0, &Scalar::one());
            } else {
                v.add_term(x * n, &Scalar::one());
                v.add_term(x, &Scalar::one());
            }
            v
        })
        .collect();
    let coalgebra = HomCoalgebra::new(
        LinMap::from_columns(n * n, comul_cols).expect("three columns"),
        LinMap::row_vector(&Vector::basis(n, 0)),
        LinMap::identity(n),
    )
    .expect("valid shapes");
    HomHopfCandidate::new(
        HomBialgebra::new(algebra, coalgebra).expect("equal dimensions"),
        LinMap::from_int_rows(&[&[1, 0, 0], &[0, -1, 0], &[0, 0, -1]]),
    )
    .expect("square antipode")
}

fn cyclic(n: usize) -> FiniteGroup {
    FiniteGroup::cyclic(n).expect("positive order")
}

fn power_map(n: usize, e: usize) -> Vec<usize> {
    (0..n).map(|a| (a * e) % n).collect()
}

fn hopf_file(h: &HomHopfCandidate, names: Vec<String>) -> StructureFile {
    StructureFile::from_hopf(h, Some(names))
}

fn qmatrix_file(degree: u32) -> Result<StructureFile> {
    let p = QParams::default();
    let b = qmatrix::to_hom_bialgebra(&p, degree)?;
    let mut f = StructureFile::from_bialgebra(&b, Some(qmatrix::basis_names(degree)));
    f.params = BTreeMap::from([
        ("degree".to_string(), Scalar::from_int(degree as i64)),
        ("lambda".to_string(), p.lambda().clone()),
        ("q".to_string(), p.q().clone()),
    ]);
    Ok(f)
}

/// The structure file for a bundled fixture name.
pub fn build(name: &str) -> Result<StructureFile> {
    let file = match name {
        "c2_classical" => {
            let g = cyclic(2);
            hopf_file(&group_algebra(&g), g.names)
        }
        "c3_twist" => {
            let g = cyclic(3);
            let h = yau_twist_hopf(&group_algebra(&g), &pushforward(&power_map(3, 2)))?;
            hopf_file(&h, g.names)
        }
        "c4_sq_twist" => {
            let g = cyclic(4);
            let h = yau_twist_hopf(&group_algebra(&g), &pushforward(&power_map(4, 2)))?;
            hopf_file(&h, g.names)
        }
        "example_2d" => StructureFile {
            basis: two_d_names(),
            algebra: Some(example_2d_algebra()),
            coalgebra: None,
            antipode: None,
            params: BTreeMap::new(),
            truncation: None,
        },
        "example_2dco" => StructureFile {
            basis: two_d_names(),
            algebra: None,
            coalgebra: Some(example_2dco_coalgebra()),
            antipode: None,
            params: BTreeMap::new(),
            truncation: None,
        },
        "example_2dbi" => StructureFile::from_bialgebra(&example_2dbi(), Some(two_d_names())),
        "homgroup_c4" => {
            let g = cyclic(4);
            let hg = twist_group(&g, &power_map(4, 3))?;
            hopf_file(&hom_group_algebra(&hg, false)?, g.names)
        }
        "homgroup_c4_index" => {
            let hg = homgroup_c4_index_group();
            let names = hg.names.clone();
            hopf_file(&hom_group_algebra(&hg, false)?, names)
        }
        "prim3" => hopf_file(&prim3(), vec!["1".into(), "x".into(), "y".into()]),
        "qmatrix_d2" => qmatrix_file(2)?,
        "qmatrix_d4" => qmatrix_file(4)?,
        _ => return Err(Error::InvalidStructure(format!("unknown fixture {name:?}"))),
    };
    Ok(file)
}
