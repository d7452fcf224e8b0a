//! Builders for Hom-structures that satisfy their axioms by construction.

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{LinMap, SparseVec, Vector};
use crate::structures::{
    is_hom_bialgebra_morphism, HomAlgebra, HomBialgebra, HomCoalgebra, HomHopfCandidate,
};

/// A finite group given by its Cayley table; element 0 is the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    pub name: String,
    pub names: Vec<String>,
    pub table: Vec<Vec<usize>>,
}

impl FiniteGroup {
    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidStructure("cyclic group of order 0".into()));
        }
        let names = (0..n)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "g".to_string(),
                _ => format!("g^{i}"),
            })
            .collect();
        let table = (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect();
        Ok(FiniteGroup {
            name: format!("C{n}"),
            names,
            table,
        })
    }

    pub fn klein() -> Self {
        let names = ["1", "a", "b", "ab"].map(String::from).to_vec();
        let table = (0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect();
        FiniteGroup {
            name: "K4".into(),
            names,
            table,
        }
    }

    /// Permutations of three points in lexicographic order of their images.
    pub fn symmetric3() -> Self {
        let perms: [[usize; 3]; 6] = [
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        let names = ["1", "(23)", "(12)", "(123)", "(132)", "(13)"]
            .map(String::from)
            .to_vec();
        let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        // (a·b)(i) = a(b(i))
        let table = perms
            .iter()
            .map(|a| {
                perms
                    .iter()
                    .map(|b| index([a[b[0]], a[b[1]], a[b[2]]]))
                    .collect()
            })
            .collect();
        FiniteGroup {
            name: "S3".into(),
            names,
            table,
        }
    }

    /// `C<n>`, `K4` or `S3`.
    pub fn by_name(name: &str) -> Result<Self> {
        match name {
            "K4" => Ok(Self::klein()),
            "S3" => Ok(Self::symmetric3()),
            _ => name
                .strip_prefix('C')
                .and_then(|n| n.parse::<usize>().ok())
                .filter(|&n| (1..=64).contains(&n))
                .map(|n| Self::cyclic(n).expect("positive order"))
                .ok_or_else(|| Error::InvalidStructure(format!("unknown group {name:?}"))),
        }
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order()).find(|&b| self.mul(a, b) == 0).unwrap()
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_endomorphism(&self, phi: &[usize]) -> bool {
        let n = self.order();
        phi.len() == n
            && phi.iter().all(|&x| x < n)
            && (0..n).all(|a| (0..n).all(|b| phi[self.mul(a, b)] == self.mul(phi[a], phi[b])))
    }

    /// Every group endomorphism, by exhaustive search over assignments.
    pub fn endomorphisms(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut out = Vec::new();
        let mut phi = vec![0; n];
        self.extend_endo(1, &mut phi, &mut out);
        out.retain(|p| self.is_endomorphism(p));
        out
    }

    fn extend_endo(&self, pos: usize, phi: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let n = self.order();
        if pos == n {
            out.push(phi.clone());
            return;
        }
        for img in 0..n {
            phi[pos] = img;
            // prune on products of already assigned elements
            let consistent = (0..=pos).all(|a| {
                (0..=pos).all(|b| {
                    let ab = self.mul(a, b);
                    ab > pos || phi[ab] == self.mul(phi[a], phi[b])
                })
            });
            if consistent {
                self.extend_endo(pos + 1, phi, out);
            }
        }
    }

    pub fn automorphisms(&self) -> Vec<Vec<usize>> {
        self.endomorphisms()
            .into_iter()
            .filter(|p| {
                let mut seen = vec![false; p.len()];
                p.iter().all(|&x| !std::mem::replace(&mut seen[x], true))
            })
            .collect()
    }
}

/// A Hom-group: a set with a product, a twist `α`, a unit, and inverses
/// that are exact only after enough applications of `α`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomGroup {
    pub names: Vec<String>,
    pub table: Vec<Vec<usize>>,
    pub alpha: Vec<usize>,
    pub unit: usize,
    pub inv: Vec<usize>,
    /// Smallest `k` with `α^k(a·a⁻¹) = α^k(a⁻¹·a) = 1`.
    pub index: Vec<u32>,
    /// Whether `α(ab) = α(a)α(b)`; recorded, not required.
    pub alpha_multiplicative: bool,
}

impl HomGroup {
    /// Validates Hom-associativity, unitality, `α(1) = 1`, compatibility
    /// `α(a⁻¹) = α(a)⁻¹`, and finds each invertibility index up to
    /// `max_index`.
    pub fn new(
        names: Vec<String>,
        table: Vec<Vec<usize>>,
        alpha: Vec<usize>,
        unit: usize,
        inv: Vec<usize>,
        max_index: u32,
    ) -> Result<Self> {
        let n = table.len();
        let fail = |m: &str| Err(Error::HypothesisFailed(m.to_string()));
        if n == 0
            || names.len() != n
            || alpha.len() != n
            || inv.len() != n
            || unit >= n
            || table
                .iter()
                .any(|r| r.len() != n || r.iter().any(|&x| x >= n))
            || alpha.iter().chain(&inv).any(|&x| x >= n)
        {
            return Err(Error::InvalidStructure(
                "inconsistent Hom-group data".into(),
            ));
        }
        let m = |a: usize, b: usize| table[a][b];
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if m(alpha[a], m(b, c)) != m(m(a, b), alpha[c]) {
                        return fail("Hom-associativity");
                    }
                }
            }
        }
        if (0..n).any(|a| m(a, unit) != alpha[a] || m(unit, a) != alpha[a]) {
            return fail("unitality");
        }
        if alpha[unit] != unit {
            return fail("alpha(1) = 1");
        }
        if (0..n).any(|a| alpha[inv[a]] != inv[alpha[a]]) {
            return fail("alpha commutes with inversion");
        }
        let mut index = Vec::with_capacity(n);
        for a in 0..n {
            let (mut l, mut r) = (m(a, inv[a]), m(inv[a], a));
            let mut k = 0;
            while l != unit || r != unit {
                if k == max_index {
                    return fail("element without relative inverse");
                }
                l = alpha[l];
                r = alpha[r];
                k += 1;
            }
            index.push(k);
        }
        let alpha_multiplicative =
            (0..n).all(|a| (0..n).all(|b| alpha[m(a, b)] == m(alpha[a], alpha[b])));
        Ok(HomGroup {
            names,
            table,
            alpha,
            unit,
            inv,
            index,
            alpha_multiplicative,
        })
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.table[a][b] == self.table[b][a]))
    }
}

/// `a ∗ b = φ(ab)`, `α = φ`, with the group inverse. `φ` must be an
/// endomorphism of `G`.
pub fn twist_group(g: &FiniteGroup, phi: &[usize]) -> Result<HomGroup> {
    if !g.is_endomorphism(phi) {
        return Err(Error::HypothesisFailed(
            "twist is not a group endomorphism".into(),
        ));
    }
    let n = g.order();
    let table = (0..n)
        .map(|a| (0..n).map(|b| phi[g.mul(a, b)]).collect())
        .collect();
    let inv = (0..n).map(|a| g.inverse(a)).collect();
    HomGroup::new(g.names.clone(), table, phi.to_vec(), 0, inv, 0)
}

fn permutation_map(images: &[usize]) -> LinMap {
    let n = images.len();
    let cols = images.iter().map(|&i| SparseVec::unit(i)).collect();
    LinMap::from_columns(n, cols).expect("column count")
}

fn table_mul(table: &[Vec<usize>]) -> LinMap {
    let n = table.len();
    let cols = (0..n * n)
        .map(|ij| SparseVec::unit(table[ij / n][ij % n]))
        .collect();
    LinMap::from_columns(n, cols).expect("column count")
}

/// `ℚG` for a Hom-group: `Δ(g) = g ⊗ g`, `β = Id`, `ε(g) = 1`,
/// `S(g) = g⁻¹`. With `comul_alpha`, `Δ(g) = α(g) ⊗ α(g)` and `β = α`.
pub fn hom_group_algebra(g: &HomGroup, comul_alpha: bool) -> Result<HomHopfCandidate> {
    let n = g.order();
    let alpha = permutation_map(&g.alpha);
    let algebra = HomAlgebra::new(table_mul(&g.table), Vector::basis(n, g.unit), alpha.clone())?;
    let diag: Vec<usize> = (0..n).map(|x| x * n + x).collect();
    let comul_cols = (0..n)
        .map(|x| {
            let y = if comul_alpha { g.alpha[x] } else { x };
            SparseVec::unit(diag[y])
        })
        .collect();
    let comul = LinMap::from_columns(n * n, comul_cols)?;
    let counit = LinMap::row_vector(&Vector(vec![Scalar::one(); n]));
    let beta = if comul_alpha {
        alpha
    } else {
        LinMap::identity(n)
    };
    let coalgebra = HomCoalgebra::new(comul, counit, beta)?;
    HomHopfCandidate::new(
        HomBialgebra::new(algebra, coalgebra)?,
        permutation_map(&g.inv),
    )
}

/// A bialgebra with identity twists that passes every axiom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassicalBialgebra(HomBialgebra);

impl ClassicalBialgebra {
    pub fn new(b: HomBialgebra) -> Result<Self> {
        let id = LinMap::identity(b.dim());
        if b.alpha() != &id || b.beta() != &id {
            return Err(Error::HypothesisFailed(
                "twist maps are not the identity".into(),
            ));
        }
        if let Some(bad) = b.check_axioms().failures().next() {
            return Err(Error::HypothesisFailed(format!("{} fails", bad.name)));
        }
        Ok(ClassicalBialgebra(b))
    }

    pub fn inner(&self) -> &HomBialgebra {
        &self.0
    }

    pub fn into_inner(self) -> HomBialgebra {
        self.0
    }
}

/// Classical `ℚG` with its group inversion as antipode.
pub fn group_algebra(g: &FiniteGroup) -> HomHopfCandidate {
    let n = g.order();
    let inv: Vec<usize> = (0..n).map(|a| g.inverse(a)).collect();
    let hg = HomGroup::new(
        g.names.clone(),
        g.table.clone(),
        (0..n).collect(),
        0,
        inv,
        0,
    )
    .expect("a group is a Hom-group with identity twist");
    hom_group_algebra(&hg, false).expect("dimensions are consistent")
}

/// The dual Hopf algebra `ℚ^G` of functions on `G`, in the basis of
/// point indicators `δ_g`.
pub fn function_algebra(g: &FiniteGroup) -> HomHopfCandidate {
    let n = g.order();
    let mul_cols = (0..n * n)
        .map(|ij| {
            if ij / n == ij % n {
                SparseVec::unit(ij / n)
            } else {
                SparseVec::new()
            }
        })
        .collect();
    let mul = LinMap::from_columns(n, mul_cols).unwrap();
    let unit = Vector(vec![Scalar::one(); n]);
    let algebra = HomAlgebra::new(mul, unit, LinMap::identity(n)).unwrap();
    let comul_cols = (0..n)
        .map(|x| {
            let mut v = SparseVec::new();
            for a in 0..n {
                let b = g.mul(g.inverse(a), x);
                v.add_term(a * n + b, &Scalar::one());
            }
            v
        })
        .collect();
    let comul = LinMap::from_columns(n * n, comul_cols).unwrap();
    let counit = LinMap::row_vector(&Vector::basis(n, 0));
    let coalgebra = HomCoalgebra::new(comul, counit, LinMap::identity(n)).unwrap();
    let inv: Vec<usize> = (0..n).map(|a| g.inverse(a)).collect();
    HomHopfCandidate::new(
        HomBialgebra::new(algebra, coalgebra).unwrap(),
        permutation_map(&inv),
    )
    .unwrap()
}

/// The linear map `ℚG -> ℚG` induced by a group endomorphism.
pub fn pushforward(phi: &[usize]) -> LinMap {
    permutation_map(phi)
}

/// The linear map `ℚ^G -> ℚ^G` given by `f ↦ f ∘ φ`.
pub fn pullback(phi: &[usize]) -> LinMap {
    let n = phi.len();
    let cols = (0..n)
        .map(|g| {
            let mut v = SparseVec::new();
            for (h, &img) in phi.iter().enumerate() {
                if img == g {
                    v.add_term(h, &Scalar::one());
                }
            }
            v
        })
        .collect();
    LinMap::from_columns(n, cols).unwrap()
}

/// `(B, φ ∘ m, η, φ, Δ ∘ φ, ε, φ)` for a bialgebra endomorphism `φ`.
pub fn yau_twist(b: &ClassicalBialgebra, phi: &LinMap) -> Result<HomBialgebra> {
    let b = b.inner();
    let report = is_hom_bialgebra_morphism(phi, b, b)?;
    if let Some(bad) = report.failures().next() {
        return Err(Error::HypothesisFailed(format!(
            "twist is not a bialgebra map: {} fails",
            bad.name
        )));
    }
    let algebra = HomAlgebra::new(
        phi.compose(b.algebra.mul())?,
        b.algebra.unit().clone(),
        phi.clone(),
    )?
    .with_truncation(b.truncation().cloned())?;
    let coalgebra = HomCoalgebra::new(
        b.coalgebra.comul().compose(phi)?,
        b.coalgebra.counit().clone(),
        phi.clone(),
    )?
    .with_truncation(b.truncation().cloned())?;
    HomBialgebra::new(algebra, coalgebra)
}

/// The Yau twist of a classical Hopf algebra, keeping its antipode.
pub fn yau_twist_hopf(h: &HomHopfCandidate, phi: &LinMap) -> Result<HomHopfCandidate> {
    let classical = ClassicalBialgebra::new(h.bialgebra.clone())?;
    HomHopfCandidate::new(yau_twist(&classical, phi)?, h.antipode.clone())
}

/// `H ⊗ K` with `(m ⊗ m') ∘ (Id ⊗ τ ⊗ Id)`, `(Id ⊗ τ ⊗ Id) ∘ (Δ ⊗ Δ')`, and
/// tensor products of the remaining maps.
pub fn tensor_hopf(h: &HomHopfCandidate, k: &HomHopfCandidate) -> Result<HomHopfCandidate> {
    let (hb, kb) = (&h.bialgebra, &k.bialgebra);
    if hb.truncation().is_some() || kb.truncation().is_some() {
        return Err(Error::InvalidStructure(
            "tensor products of truncated structures are not supported".into(),
        ));
    }
    let (nh, nk) = (h.dim(), k.dim());
    let n = nh * nk;
    let mut mul_cols = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            let left = hb.algebra.basis_product(x / nk, y / nk);
            let right = kb.algebra.basis_product(x % nk, y % nk);
            mul_cols.push(left.tensor(right, nk));
        }
    }
    let mul = LinMap::from_columns(n, mul_cols)?;
    let unit = SparseVec::from_dense(hb.algebra.unit())
        .tensor(&SparseVec::from_dense(kb.algebra.unit()), nk)
        .to_dense(n);
    let algebra = HomAlgebra::new(mul, unit, hb.alpha().kron(kb.alpha()))?;
    let mut comul_cols = Vec::with_capacity(n);
    for x in 0..n {
        let mut v = SparseVec::new();
        for (pq, c) in hb.coalgebra.comul().column(x / nk).iter() {
            for (rs, d) in kb.coalgebra.comul().column(x % nk).iter() {
                let (p, q) = (pq / nh, pq % nh);
                let (r, s) = (rs / nk, rs % nk);
                v.add_term((p * nk + r) * n + (q * nk + s), &(c * d));
            }
        }
        comul_cols.push(v);
    }
    let comul = LinMap::from_columns(n * n, comul_cols)?;
    let coalgebra = HomCoalgebra::new(
        comul,
        hb.coalgebra.counit().kron(kb.coalgebra.counit()),
        hb.beta().kron(kb.beta()),
    )?;
    HomHopfCandidate::new(
        HomBialgebra::new(algebra, coalgebra)?,
        h.antipode.kron(&k.antipode),
    )
}

/// The ground field as a one-dimensional Hopf algebra.
pub fn trivial_hopf() -> HomHopfCandidate {
    group_algebra(&FiniteGroup::cyclic(1).expect("order 1"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::compute_flags;

    #[test]
    fn group_tables() {
        let s3 = FiniteGroup::symmetric3();
        assert!(!s3.is_abelian());
        assert_eq!(s3.automorphisms().len(), 6);
        assert_eq!(s3.endomorphisms().len(), 10);
        assert_eq!(FiniteGroup::cyclic(4).unwrap().endomorphisms().len(), 4);
        assert_eq!(FiniteGroup::klein().automorphisms().len(), 6);
        assert_eq!(FiniteGroup::klein().endomorphisms().len(), 16);
        assert!(FiniteGroup::by_name("C0").is_err());
        assert!(FiniteGroup::by_name("D4").is_err());
    }

    #[test]
    fn twisted_c4() {
        let c4 = FiniteGroup::cyclic(4).unwrap();
        let g = twist_group(&c4, &[0, 3, 2, 1]).unwrap();
        assert_eq!(g.index, vec![0; 4]);
        assert!(g.alpha_multiplicative);
        assert!(twist_group(&c4, &[0, 2, 1, 3]).is_err());
        let h = hom_group_algebra(&g, false).unwrap();
        assert!(h.bialgebra.check_axioms().all_pass());
        let f = compute_flags(&h.bialgebra);
        assert!(f.cocommutative && f.commutative && f.alpha_invertible);
    }

    #[test]
    fn classical_constructions_pass() {
        for g in [FiniteGroup::symmetric3(), FiniteGroup::klein()] {
            let a = group_algebra(&g);
            let f = function_algebra(&g);
            assert!(a.bialgebra.check_axioms().all_pass());
            assert!(f.bialgebra.check_axioms().all_pass());
            let t = tensor_hopf(&a, &trivial_hopf()).unwrap();
            assert_eq!(t, a);
        }
    }

    #[test]
    fn yau_twist_identity_is_noop() {
        let a = group_algebra(&FiniteGroup::cyclic(3).unwrap());
        let c = ClassicalBialgebra::new(a.bialgebra.clone()).unwrap();
        let t = yau_twist(&c, &LinMap::identity(3)).unwrap();
        assert_eq!(&t, c.inner());
        assert!(yau_twist(&c, &LinMap::zero(3, 3)).is_err());
    }
}
