//! The convolution Hom-algebra `Hom(C, A)` and relative Hom-inverses in it.
//!
//! `f ⋆ g = m ∘ (f ⊗ g) ∘ Δ`, twisted by `γ(f) = α ∘ f ∘ β`, with unit
//! `η ∘ ε`. A relative inverse of `f` is a `g` with
//! `α^k ∘ (f ⋆ g) = α^k ∘ (g ⋆ f) = η ∘ ε` for some `k`.

use crate::error::{Error, Result};
use crate::linalg::{LinMap, SolutionSpace, SparseSystem, SparseVec, Vector};
use crate::structures::{check_identity, AxiomReport, HomAlgebra, HomCoalgebra};

/// Source coalgebra and target algebra of the convolution product.
#[derive(Clone, Copy, Debug)]
pub struct ConvContext<'a> {
    pub coalgebra: &'a HomCoalgebra,
    pub algebra: &'a HomAlgebra,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelativeInverseResult {
    /// The canonical solution: every free unknown set to zero.
    pub inverse: LinMap,
    pub exponent: u32,
    /// Directions in which `inverse` can move while staying a solution at
    /// `exponent`.
    pub nullspace: Vec<LinMap>,
}

impl RelativeInverseResult {
    pub fn nullspace_dim(&self) -> usize {
        self.nullspace.len()
    }
}

/// Outcome of comparing two relative inverses after twisting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniquenessCheck {
    /// Number of alternative solutions compared against the canonical one.
    pub compared: usize,
    /// Index of the first nullspace generator whose shifted solution differs
    /// from the canonical one after `α^{k+2} ∘ (-) ∘ β²`.
    pub first_failure: Option<usize>,
}

impl UniquenessCheck {
    pub fn holds(&self) -> bool {
        self.first_failure.is_none()
    }

    pub fn is_vacuous(&self) -> bool {
        self.compared == 0
    }
}

impl<'a> ConvContext<'a> {
    pub fn new(coalgebra: &'a HomCoalgebra, algebra: &'a HomAlgebra) -> Self {
        ConvContext { coalgebra, algebra }
    }

    fn check_map(&self, f: &LinMap) -> Result<()> {
        let (na, nc) = (self.algebra.dim(), self.coalgebra.dim());
        if f.rows() != na || f.cols() != nc {
            return Err(Error::dims("map C -> A", na * nc, f.rows() * f.cols()));
        }
        Ok(())
    }

    /// `(f ⋆ g)(x)` for a single element.
    pub fn convolve_at(&self, f: &LinMap, g: &LinMap, x: &SparseVec) -> SparseVec {
        let nc = self.coalgebra.dim();
        let mut out = SparseVec::new();
        for (pq, c) in self.coalgebra.coproduct(x).iter() {
            let prod = self.algebra.product(f.column(pq / nc), g.column(pq % nc));
            out.add_scaled(&prod, c);
        }
        out
    }

    pub fn convolve(&self, f: &LinMap, g: &LinMap) -> Result<LinMap> {
        self.check_map(f)?;
        self.check_map(g)?;
        let cols = (0..self.coalgebra.dim())
            .map(|x| self.convolve_at(f, g, &SparseVec::unit(x)))
            .collect();
        LinMap::from_columns(self.algebra.dim(), cols)
    }

    /// `α ∘ f ∘ β`.
    pub fn gamma(&self, f: &LinMap) -> Result<LinMap> {
        self.check_map(f)?;
        self.algebra
            .alpha()
            .compose(f)?
            .compose(self.coalgebra.beta())
    }

    /// `η ∘ ε`.
    pub fn unit_map(&self) -> LinMap {
        self.algebra
            .eta()
            .compose(self.coalgebra.counit())
            .expect("unit and counit shapes are fixed at construction")
    }

    fn alpha_pow(&self, k: u32) -> LinMap {
        self.algebra.alpha().pow(k).expect("alpha is square")
    }

    /// `α^k ∘ (f ⋆ g) = α^k ∘ (g ⋆ f) = η ∘ ε`, exactly.
    pub fn is_relative_inverse(&self, f: &LinMap, g: &LinMap, k: u32) -> Result<bool> {
        let ak = self.alpha_pow(k);
        let target = self.unit_map();
        Ok(ak.compose(&self.convolve(f, g)?)? == target
            && ak.compose(&self.convolve(g, f)?)? == target)
    }

    /// The linear system in the entries of `g` (unknown `t·n_C + j` is the
    /// coefficient of `e_t` in `g(e_j)`) expressing both relative-inverse
    /// equations at exponent `k`.
    pub fn relative_inverse_system(&self, f: &LinMap, k: u32) -> Result<SparseSystem> {
        self.check_map(f)?;
        let (na, nc) = (self.algebra.dim(), self.coalgebra.dim());
        let ak = self.alpha_pow(k);
        // left[p][t] = α^k(f(e_p) e_t), right[p][t] = α^k(e_t f(e_p))
        let mut left = Vec::with_capacity(nc);
        let mut right = Vec::with_capacity(nc);
        for p in 0..nc {
            let fp = f.column(p);
            let mut l = Vec::with_capacity(na);
            let mut r = Vec::with_capacity(na);
            for t in 0..na {
                let et = SparseVec::unit(t);
                l.push(ak.apply_sparse(&self.algebra.product(fp, &et)));
                r.push(ak.apply_sparse(&self.algebra.product(&et, fp)));
            }
            left.push(l);
            right.push(r);
        }
        let unit = self.algebra.unit_sparse();
        let mut system = SparseSystem::new(na * nc);
        for x in 0..nc {
            let delta = self.coalgebra.comul().column(x);
            let eps = self.coalgebra.counit().get(0, x);
            for (side, f_first) in [(&left, true), (&right, false)] {
                // rows[r] collects the coefficient of output coordinate r
                let mut rows = vec![SparseVec::new(); na];
                for (pq, c) in delta.iter() {
                    let (fixed, free) = if f_first {
                        (pq / nc, pq % nc)
                    } else {
                        (pq % nc, pq / nc)
                    };
                    for t in 0..na {
                        for (r, v) in side[fixed][t].iter() {
                            rows[r].add_term(t * nc + free, &(c * v));
                        }
                    }
                }
                for (r, row) in rows.into_iter().enumerate() {
                    system.push(row, &eps * &unit.get(r))?;
                }
            }
        }
        Ok(system)
    }

    pub(crate) fn unknowns_to_map(&self, v: &Vector) -> LinMap {
        let (na, nc) = (self.algebra.dim(), self.coalgebra.dim());
        let mut cols = vec![SparseVec::new(); nc];
        for (idx, c) in v.coords().iter().enumerate() {
            if !c.is_zero() {
                cols[idx % nc].add_term(idx / nc, c);
            }
        }
        LinMap::from_columns(na, cols).expect("column count matches")
    }

    /// Searches `k = 0, 1, …, k_max` and returns the first exponent at which
    /// a two-sided relative inverse of `f` exists. `None` if there is none
    /// up to `k_max`.
    pub fn solve_relative_inverse(
        &self,
        f: &LinMap,
        k_max: u32,
    ) -> Result<Option<RelativeInverseResult>> {
        for k in 0..=k_max {
            if let Some(found) = self.solve_relative_inverse_at(f, k)? {
                return Ok(Some(found));
            }
        }
        Ok(None)
    }

    /// The solution space at one fixed exponent.
    pub fn solve_relative_inverse_at(
        &self,
        f: &LinMap,
        k: u32,
    ) -> Result<Option<RelativeInverseResult>> {
        let system = self.relative_inverse_system(f, k)?;
        match system.solve() {
            SolutionSpace::Empty => Ok(None),
            SolutionSpace::Affine {
                particular,
                nullspace,
            } => {
                let inverse = self.unknowns_to_map(&particular);
                if !self.is_relative_inverse(f, &inverse, k)? {
                    return Err(Error::InvalidStructure(
                        "solver returned a map that is not a relative inverse".into(),
                    ));
                }
                let nullspace = nullspace.iter().map(|v| self.unknowns_to_map(v)).collect();
                Ok(Some(RelativeInverseResult {
                    inverse,
                    exponent: k,
                    nullspace,
                }))
            }
        }
    }

    /// Smallest `k ≤ k_max` with `α^k((f ⋆ g)(x)) = α^k((g ⋆ f)(x)) = ε(x)·1`.
    pub fn pointwise_inverse_exponent(
        &self,
        f: &LinMap,
        g: &LinMap,
        x: &Vector,
        k_max: u32,
    ) -> Result<Option<u32>> {
        self.check_map(f)?;
        self.check_map(g)?;
        if x.len() != self.coalgebra.dim() {
            return Err(Error::dims("element", self.coalgebra.dim(), x.len()));
        }
        let x = SparseVec::from_dense(x);
        let target = self
            .algebra
            .unit_sparse()
            .scaled(&self.coalgebra.counit_of(&x));
        let mut fg = self.convolve_at(f, g, &x);
        let mut gf = self.convolve_at(g, f, &x);
        for k in 0..=k_max {
            if fg == target && gf == target {
                return Ok(Some(k));
            }
            fg = self.algebra.alpha().apply_sparse(&fg);
            gf = self.algebra.alpha().apply_sparse(&gf);
        }
        Ok(None)
    }

    /// `α^n(f ⋆ g) = α^n f ⋆ α^n g` and `f ⋆ ηε = α f β = ηε ⋆ f`.
    ///
    /// The first law is marked as not hypothesized unless α is
    /// multiplicative; the unit laws unless the algebra is Hom-unital and
    /// the coalgebra Hom-counital.
    pub fn check_convolution_laws(&self, f: &LinMap, g: &LinMap, n: u32) -> Result<AxiomReport> {
        self.check_map(f)?;
        self.check_map(g)?;
        let nc = self.coalgebra.dim();
        let an = self.alpha_pow(n);
        let fg = self.convolve(f, g)?;
        let anf = an.compose(f)?;
        let ang = an.compose(g)?;
        let twisted = self.convolve(&anf, &ang)?;
        let mut power = check_identity("power_distributes", nc, 1, None, |t| {
            (
                an.apply_sparse(fg.column(t[0])),
                twisted.column(t[0]).clone(),
            )
        });
        power.hypothesis_met = self.algebra.alpha_is_multiplicative();

        let unit = self.unit_map();
        let gamma_f = self.gamma(f)?;
        let right_conv = self.convolve(f, &unit)?;
        let left_conv = self.convolve(&unit, f)?;
        let unital = {
            let axioms = self.algebra.check_axioms();
            let co = self.coalgebra.check_axioms();
            ["left_unitality", "right_unitality"]
                .iter()
                .all(|a| axioms.entry(a).is_some_and(|e| e.passed()))
                && ["left_counitality", "right_counitality"]
                    .iter()
                    .all(|a| co.entry(a).is_some_and(|e| e.passed()))
        };
        let mut right = check_identity("unit_right", nc, 1, None, |t| {
            (
                right_conv.column(t[0]).clone(),
                gamma_f.column(t[0]).clone(),
            )
        });
        let mut left = check_identity("unit_left", nc, 1, None, |t| {
            (left_conv.column(t[0]).clone(), gamma_f.column(t[0]).clone())
        });
        right.hypothesis_met = unital;
        left.hypothesis_met = unital;
        Ok(AxiomReport {
            entries: vec![power, right, left],
        })
    }

    /// `α^{k+2} ∘ g₁ ∘ β² = α^{k+2} ∘ g₂ ∘ β²`.
    pub fn agree_after_twist(&self, k: u32, g1: &LinMap, g2: &LinMap) -> Result<bool> {
        self.check_map(g1)?;
        self.check_map(g2)?;
        let a = self.alpha_pow(k + 2);
        let b2 = self.coalgebra.beta().pow(2)?;
        Ok(a.compose(g1)?.compose(&b2)? == a.compose(g2)?.compose(&b2)?)
    }

    /// Compares the canonical solution with `canonical + v` for every
    /// nullspace generator `v`.
    pub fn uniqueness_up_to_twist(
        &self,
        result: &RelativeInverseResult,
    ) -> Result<UniquenessCheck> {
        let mut first_failure = None;
        for (i, v) in result.nullspace.iter().enumerate() {
            let other = result.inverse.add(v)?;
            if !self.agree_after_twist(result.exponent, &result.inverse, &other)? {
                first_failure = Some(i);
                break;
            }
        }
        Ok(UniquenessCheck {
            compared: result.nullspace.len(),
            first_failure,
        })
    }
}
