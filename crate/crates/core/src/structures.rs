//! Structure constants for Hom-algebras, Hom-coalgebras and Hom-bialgebras,
//! and the axiom checkers that produce [`AxiomReport`]s.
//!
//! Every axiom is an identity between two composites of structure maps. The
//! checker evaluates both composites on each basis tuple of the source (a
//! column of the matrix identity) and records the first tuple, in
//! lexicographic order, on which they differ.

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{kron_apply, LinMap, SparseVec, Vector};

/// Degree bookkeeping for a truncated graded structure: basis element `i`
/// has degree `grading[i]`, and products whose total degree exceeds
/// `max_degree` have been cut to zero. Checks skip tuples whose total
/// degree is above the bound, since the finite model no longer represents
/// the untruncated algebra there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Truncation {
    pub grading: Vec<u32>,
    pub max_degree: u32,
}

impl Truncation {
    pub fn admits(&self, tuple: &[usize]) -> bool {
        tuple.iter().map(|&i| self.grading[i]).sum::<u32>() <= self.max_degree
    }
}

fn admits(trunc: Option<&Truncation>, tuple: &[usize]) -> bool {
    trunc.is_none_or(|t| t.admits(tuple))
}

fn check_square(map: &LinMap, n: usize, what: &str) -> Result<()> {
    if map.rows() != n || map.cols() != n {
        return Err(Error::dims(what, n * n, map.rows() * map.cols()));
    }
    Ok(())
}

fn check_truncation(t: &Option<Truncation>, n: usize) -> Result<()> {
    match t {
        Some(t) if t.grading.len() != n => Err(Error::dims("grading", n, t.grading.len())),
        _ => Ok(()),
    }
}

/// `(A, m, η, α)`. `mul` maps `A ⊗ A -> A` under the row-major tensor
/// convention.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomAlgebra {
    dim: usize,
    mul: LinMap,
    unit: Vector,
    alpha: LinMap,
    truncation: Option<Truncation>,
}

impl HomAlgebra {
    pub fn new(mul: LinMap, unit: Vector, alpha: LinMap) -> Result<Self> {
        let n = alpha.rows();
        if n == 0 {
            return Err(Error::InvalidStructure("dimension must be positive".into()));
        }
        check_square(&alpha, n, "alpha")?;
        if mul.rows() != n || mul.cols() != n * n {
            return Err(Error::dims("mul", n * n * n, mul.rows() * mul.cols()));
        }
        if unit.len() != n {
            return Err(Error::dims("unit", n, unit.len()));
        }
        Ok(HomAlgebra {
            dim: n,
            mul,
            unit,
            alpha,
            truncation: None,
        })
    }

    pub fn with_truncation(mut self, truncation: Option<Truncation>) -> Result<Self> {
        check_truncation(&truncation, self.dim)?;
        self.truncation = truncation;
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mul(&self) -> &LinMap {
        &self.mul
    }

    pub fn unit(&self) -> &Vector {
        &self.unit
    }

    pub fn alpha(&self) -> &LinMap {
        &self.alpha
    }

    pub fn truncation(&self) -> Option<&Truncation> {
        self.truncation.as_ref()
    }

    pub fn unit_sparse(&self) -> SparseVec {
        SparseVec::from_dense(&self.unit)
    }

    /// `m(x, y)`.
    pub fn product(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let n = self.dim;
        let mut out = SparseVec::new();
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                out.add_scaled(self.mul.column(i * n + j), &(a * b));
            }
        }
        out
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &SparseVec {
        self.mul.column(i * self.dim + j)
    }

    /// `m` applied to an element of `A ⊗ A`.
    pub fn multiply_tensor(&self, t: &SparseVec) -> SparseVec {
        self.mul.apply_sparse(t)
    }

    /// Unit map `η: K -> A` as a matrix.
    pub fn eta(&self) -> LinMap {
        LinMap::column_vector(&self.unit)
    }

    pub fn check_axioms(&self) -> AxiomReport {
        check_axioms(Structure::Algebra(self))
    }

    pub fn alpha_is_multiplicative(&self) -> bool {
        let n = self.dim;
        tuples(n, 2)
            .filter(|t| admits(self.truncation(), t))
            .all(|t| {
                let (i, j) = (t[0], t[1]);
                let lhs = self.alpha.apply_sparse(self.basis_product(i, j));
                let rhs = self.product(self.alpha.column(i), self.alpha.column(j));
                lhs == rhs
            })
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim;
        tuples(n, 2)
            .filter(|t| admits(self.truncation(), t))
            .all(|t| self.basis_product(t[0], t[1]) == self.basis_product(t[1], t[0]))
    }
}

/// `(C, Δ, ε, β)`. `comul` maps `C -> C ⊗ C`, `counit` is a `1 × n` map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomCoalgebra {
    dim: usize,
    comul: LinMap,
    counit: LinMap,
    beta: LinMap,
    truncation: Option<Truncation>,
}

impl HomCoalgebra {
    pub fn new(comul: LinMap, counit: LinMap, beta: LinMap) -> Result<Self> {
        let n = beta.rows();
        if n == 0 {
            return Err(Error::InvalidStructure("dimension must be positive".into()));
        }
        check_square(&beta, n, "beta")?;
        if comul.rows() != n * n || comul.cols() != n {
            return Err(Error::dims("comul", n * n * n, comul.rows() * comul.cols()));
        }
        if counit.rows() != 1 || counit.cols() != n {
            return Err(Error::dims("counit", n, counit.rows() * counit.cols()));
        }
        Ok(HomCoalgebra {
            dim: n,
            comul,
            counit,
            beta,
            truncation: None,
        })
    }

    pub fn with_truncation(mut self, truncation: Option<Truncation>) -> Result<Self> {
        check_truncation(&truncation, self.dim)?;
        self.truncation = truncation;
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn comul(&self) -> &LinMap {
        &self.comul
    }

    pub fn counit(&self) -> &LinMap {
        &self.counit
    }

    pub fn beta(&self) -> &LinMap {
        &self.beta
    }

    pub fn truncation(&self) -> Option<&Truncation> {
        self.truncation.as_ref()
    }

    pub fn coproduct(&self, x: &SparseVec) -> SparseVec {
        self.comul.apply_sparse(x)
    }

    pub fn counit_of(&self, x: &SparseVec) -> Scalar {
        self.counit.apply_sparse(x).get(0)
    }

    pub fn check_axioms(&self) -> AxiomReport {
        check_axioms(Structure::Coalgebra(self))
    }

    pub fn beta_is_comultiplicative(&self) -> bool {
        (0..self.dim).all(|x| {
            let lhs = self.comul.apply_sparse(self.beta.column(x));
            let rhs = kron_apply(&[&self.beta, &self.beta], self.comul.column(x));
            lhs == rhs
        })
    }

    pub fn is_cocommutative(&self) -> bool {
        let flip = LinMap::flip(self.dim, self.dim);
        (0..self.dim).all(|x| flip.apply_sparse(self.comul.column(x)) == *self.comul.column(x))
    }
}

/// A Hom-algebra and a Hom-coalgebra on the same space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomBialgebra {
    pub algebra: HomAlgebra,
    pub coalgebra: HomCoalgebra,
}

impl HomBialgebra {
    pub fn new(algebra: HomAlgebra, coalgebra: HomCoalgebra) -> Result<Self> {
        if algebra.dim != coalgebra.dim {
            return Err(Error::dims("bialgebra parts", algebra.dim, coalgebra.dim));
        }
        if algebra.truncation != coalgebra.truncation {
            return Err(Error::InvalidStructure(
                "algebra and coalgebra truncations differ".into(),
            ));
        }
        Ok(HomBialgebra { algebra, coalgebra })
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim
    }

    pub fn alpha(&self) -> &LinMap {
        &self.algebra.alpha
    }

    pub fn beta(&self) -> &LinMap {
        &self.coalgebra.beta
    }

    pub fn truncation(&self) -> Option<&Truncation> {
        self.algebra.truncation()
    }

    pub fn check_axioms(&self) -> AxiomReport {
        check_axioms(Structure::Bialgebra(self))
    }

    pub fn flags(&self) -> FlagSet {
        compute_flags(self)
    }
}

/// A Hom-bialgebra together with a proposed antipode. Nothing about the
/// antipode is checked here; see the `antipode` module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomHopfCandidate {
    pub bialgebra: HomBialgebra,
    pub antipode: LinMap,
}

impl HomHopfCandidate {
    pub fn new(bialgebra: HomBialgebra, antipode: LinMap) -> Result<Self> {
        check_square(&antipode, bialgebra.dim(), "antipode")?;
        Ok(HomHopfCandidate {
            bialgebra,
            antipode,
        })
    }

    pub fn dim(&self) -> usize {
        self.bialgebra.dim()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        }
    }
}

/// A basis tuple on which two sides of an identity were evaluated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub indices: Vec<usize>,
    pub lhs: SparseVec,
    pub rhs: SparseVec,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomEntry {
    pub name: String,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    /// False when the identity is only claimed under a hypothesis that the
    /// structure does not satisfy; the verdict is still reported.
    pub hypothesis_met: bool,
    /// Basis tuples left out because they leave the truncated range.
    pub skipped: usize,
}

impl AxiomEntry {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub entries: Vec<AxiomEntry>,
}

impl AxiomReport {
    /// True if every entry whose hypothesis is met passes.
    pub fn all_pass(&self) -> bool {
        self.entries
            .iter()
            .filter(|e| e.hypothesis_met)
            .all(AxiomEntry::passed)
    }

    pub fn entry(&self, name: &str) -> Option<&AxiomEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomEntry> {
        self.entries.iter().filter(|e| !e.passed())
    }

    pub fn extend(&mut self, other: AxiomReport) {
        self.entries.extend(other.entries);
    }
}

/// All tuples in `0..n` of the given arity, lexicographically.
pub fn tuples(n: usize, arity: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = n.checked_pow(arity as u32).expect("tuple count overflow");
    let dims = vec![n; arity];
    (0..total).map(move |flat| crate::linalg::split_index(flat, &dims))
}

/// Evaluates `eval` on every admissible tuple and keeps the first mismatch.
pub fn check_identity<F>(
    name: &str,
    n: usize,
    arity: usize,
    trunc: Option<&Truncation>,
    mut eval: F,
) -> AxiomEntry
where
    F: FnMut(&[usize]) -> (SparseVec, SparseVec),
{
    let mut skipped = 0;
    for t in tuples(n, arity) {
        if !admits(trunc, &t) {
            skipped += 1;
            continue;
        }
        let (lhs, rhs) = eval(&t);
        if lhs != rhs {
            return AxiomEntry {
                name: name.to_string(),
                verdict: Verdict::Fail,
                witness: Some(Witness {
                    indices: t,
                    lhs,
                    rhs,
                }),
                hypothesis_met: true,
                skipped,
            };
        }
    }
    AxiomEntry {
        name: name.to_string(),
        verdict: Verdict::Pass,
        witness: None,
        hypothesis_met: true,
        skipped,
    }
}

/// The structure a checker runs on.
#[derive(Clone, Copy, Debug)]
pub enum Structure<'a> {
    Algebra(&'a HomAlgebra),
    Coalgebra(&'a HomCoalgebra),
    Bialgebra(&'a HomBialgebra),
}

type Sides = (SparseVec, SparseVec);
type AlgebraAxiom = (&'static str, usize, fn(&HomAlgebra, &[usize]) -> Sides);
type CoalgebraAxiom = (&'static str, usize, fn(&HomCoalgebra, &[usize]) -> Sides);
type BialgebraAxiom = (&'static str, usize, fn(&HomBialgebra, &[usize]) -> Sides);

fn scalar_vec(c: Scalar) -> SparseVec {
    let mut v = SparseVec::new();
    v.add_term(0, &c);
    v
}

pub const ALGEBRA_AXIOMS: &[AlgebraAxiom] = &[
    ("hom_associativity", 3, |a, t| {
        // m ∘ (m ⊗ α) and m ∘ (α ⊗ m) on e_i ⊗ e_j ⊗ e_k
        let lhs = a.product(a.basis_product(t[0], t[1]), a.alpha.column(t[2]));
        let rhs = a.product(a.alpha.column(t[0]), a.basis_product(t[1], t[2]));
        (lhs, rhs)
    }),
    ("left_unitality", 1, |a, t| {
        let lhs = a.product(&a.unit_sparse(), &SparseVec::unit(t[0]));
        (lhs, a.alpha.column(t[0]).clone())
    }),
    ("right_unitality", 1, |a, t| {
        let lhs = a.product(&SparseVec::unit(t[0]), &a.unit_sparse());
        (lhs, a.alpha.column(t[0]).clone())
    }),
    ("unit_twist", 0, |a, _| {
        (a.alpha.apply_sparse(&a.unit_sparse()), a.unit_sparse())
    }),
];

pub const COALGEBRA_AXIOMS: &[CoalgebraAxiom] = &[
    ("hom_coassociativity", 1, |c, t| {
        let d = c.comul.column(t[0]);
        let lhs = kron_apply(&[&c.comul, &c.beta], d);
        let rhs = kron_apply(&[&c.beta, &c.comul], d);
        (lhs, rhs)
    }),
    ("left_counitality", 1, |c, t| {
        let id = LinMap::identity(c.dim);
        let lhs = kron_apply(&[&c.counit, &id], c.comul.column(t[0]));
        (lhs, c.beta.column(t[0]).clone())
    }),
    ("right_counitality", 1, |c, t| {
        let id = LinMap::identity(c.dim);
        let lhs = kron_apply(&[&id, &c.counit], c.comul.column(t[0]));
        (lhs, c.beta.column(t[0]).clone())
    }),
    ("counit_twist", 1, |c, t| {
        let lhs = c.counit.apply_sparse(c.beta.column(t[0]));
        (lhs, c.counit.column(t[0]).clone())
    }),
];

pub const COMPATIBILITY_AXIOMS: &[BialgebraAxiom] = &[
    ("comul_multiplicative", 2, |b, t| {
        let (a, c) = (&b.algebra, &b.coalgebra);
        let n = a.dim;
        let lhs = c.coproduct(a.basis_product(t[0], t[1]));
        let mut rhs = SparseVec::new();
        for (p, x) in c.comul.column(t[0]).iter() {
            for (q, y) in c.comul.column(t[1]).iter() {
                let left = a.basis_product(p / n, q / n);
                let right = a.basis_product(p % n, q % n);
                rhs.add_scaled(&left.tensor(right, n), &(x * y));
            }
        }
        (lhs, rhs)
    }),
    ("comul_unital", 0, |b, _| {
        let u = b.algebra.unit_sparse();
        (b.coalgebra.coproduct(&u), u.tensor(&u, b.dim()))
    }),
    ("counit_multiplicative", 2, |b, t| {
        let c = &b.coalgebra;
        let lhs = c.counit_of(b.algebra.basis_product(t[0], t[1]));
        let rhs = &c.counit.get(0, t[0]) * &c.counit.get(0, t[1]);
        (scalar_vec(lhs), scalar_vec(rhs))
    }),
    ("counit_unital", 0, |b, _| {
        let lhs = b.coalgebra.counit_of(&b.algebra.unit_sparse());
        (scalar_vec(lhs), scalar_vec(Scalar::one()))
    }),
    ("counit_alpha", 1, |b, t| {
        let c = &b.coalgebra;
        let lhs = c.counit.apply_sparse(b.algebra.alpha.column(t[0]));
        (lhs, c.counit.column(t[0]).clone())
    }),
];

/// Runs every axiom that applies to the structure kind.
pub fn check_axioms(s: Structure<'_>) -> AxiomReport {
    let mut report = AxiomReport::default();
    let run_algebra = |a: &HomAlgebra, report: &mut AxiomReport| {
        for (name, arity, eval) in ALGEBRA_AXIOMS {
            let entry = check_identity(name, a.dim, *arity, a.truncation(), |t| eval(a, t));
            report.entries.push(entry);
        }
    };
    let run_coalgebra = |c: &HomCoalgebra, report: &mut AxiomReport| {
        for (name, arity, eval) in COALGEBRA_AXIOMS {
            let entry = check_identity(name, c.dim, *arity, c.truncation(), |t| eval(c, t));
            report.entries.push(entry);
        }
    };
    match s {
        Structure::Algebra(a) => run_algebra(a, &mut report),
        Structure::Coalgebra(c) => run_coalgebra(c, &mut report),
        Structure::Bialgebra(b) => {
            run_algebra(&b.algebra, &mut report);
            run_coalgebra(&b.coalgebra, &mut report);
            for (name, arity, eval) in COMPATIBILITY_AXIOMS {
                let entry = check_identity(name, b.dim(), *arity, b.truncation(), |t| eval(b, t));
                report.entries.push(entry);
            }
        }
    }
    report
}

/// Re-evaluates a named axiom on one tuple. `None` if the axiom does not
/// apply to this kind of structure or the tuple has the wrong arity.
pub fn evaluate_axiom(s: Structure<'_>, name: &str, indices: &[usize]) -> Option<Sides> {
    let (alg, coalg, bialg) = match s {
        Structure::Algebra(a) => (Some(a), None, None),
        Structure::Coalgebra(c) => (None, Some(c), None),
        Structure::Bialgebra(b) => (Some(&b.algebra), Some(&b.coalgebra), Some(b)),
    };
    let valid = |arity: usize, n: usize| arity == indices.len() && indices.iter().all(|&i| i < n);
    if let Some(a) = alg {
        if let Some((_, arity, eval)) = ALGEBRA_AXIOMS.iter().find(|x| x.0 == name) {
            return valid(*arity, a.dim).then(|| eval(a, indices));
        }
    }
    if let Some(c) = coalg {
        if let Some((_, arity, eval)) = COALGEBRA_AXIOMS.iter().find(|x| x.0 == name) {
            return valid(*arity, c.dim).then(|| eval(c, indices));
        }
    }
    if let Some(b) = bialg {
        if let Some((_, arity, eval)) = COMPATIBILITY_AXIOMS.iter().find(|x| x.0 == name) {
            return valid(*arity, b.dim()).then(|| eval(b, indices));
        }
    }
    None
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct FlagSet {
    pub alpha_multiplicative: bool,
    pub beta_comultiplicative: bool,
    pub alpha_invertible: bool,
    pub beta_invertible: bool,
    pub commutative: bool,
    pub cocommutative: bool,
}

impl FlagSet {
    pub fn twists_invertible(&self) -> bool {
        self.alpha_invertible && self.beta_invertible
    }

    pub fn as_pairs(&self) -> [(&'static str, bool); 6] {
        [
            ("alpha_invertible", self.alpha_invertible),
            ("alpha_multiplicative", self.alpha_multiplicative),
            ("beta_comultiplicative", self.beta_comultiplicative),
            ("beta_invertible", self.beta_invertible),
            ("cocommutative", self.cocommutative),
            ("commutative", self.commutative),
        ]
    }
}

pub fn compute_flags(s: &HomBialgebra) -> FlagSet {
    FlagSet {
        alpha_multiplicative: s.algebra.alpha_is_multiplicative(),
        beta_comultiplicative: s.coalgebra.beta_is_comultiplicative(),
        alpha_invertible: s.alpha().is_invertible(),
        beta_invertible: s.beta().is_invertible(),
        commutative: s.algebra.is_commutative(),
        cocommutative: s.coalgebra.is_cocommutative(),
    }
}

fn check_map_dims(f: &LinMap, src: usize, dst: usize) -> Result<()> {
    if f.cols() != src || f.rows() != dst {
        return Err(Error::dims("morphism", src * dst, f.rows() * f.cols()));
    }
    Ok(())
}

/// `f(xy) = f(x) f(y)`, `f ∘ α = α' ∘ f`, `f(1) = 1'`.
pub fn is_hom_algebra_morphism(
    f: &LinMap,
    src: &HomAlgebra,
    dst: &HomAlgebra,
) -> Result<AxiomReport> {
    check_map_dims(f, src.dim, dst.dim)?;
    let trunc = src.truncation();
    let entries = vec![
        check_identity("preserves_product", src.dim, 2, trunc, |t| {
            let lhs = f.apply_sparse(src.basis_product(t[0], t[1]));
            let rhs = dst.product(f.column(t[0]), f.column(t[1]));
            (lhs, rhs)
        }),
        check_identity("commutes_alpha", src.dim, 1, trunc, |t| {
            let lhs = f.apply_sparse(src.alpha.column(t[0]));
            let rhs = dst.alpha.apply_sparse(f.column(t[0]));
            (lhs, rhs)
        }),
        check_identity("preserves_unit", src.dim, 0, trunc, |_| {
            (f.apply_sparse(&src.unit_sparse()), dst.unit_sparse())
        }),
    ];
    Ok(AxiomReport { entries })
}

/// `(f ⊗ f) ∘ Δ = Δ' ∘ f`, `f ∘ β = β' ∘ f`, `ε' ∘ f = ε`.
pub fn is_hom_coalgebra_morphism(
    f: &LinMap,
    src: &HomCoalgebra,
    dst: &HomCoalgebra,
) -> Result<AxiomReport> {
    check_map_dims(f, src.dim, dst.dim)?;
    let trunc = src.truncation();
    let entries = vec![
        check_identity("preserves_coproduct", src.dim, 1, trunc, |t| {
            let lhs = kron_apply(&[f, f], src.comul.column(t[0]));
            let rhs = dst.coproduct(f.column(t[0]));
            (lhs, rhs)
        }),
        check_identity("commutes_beta", src.dim, 1, trunc, |t| {
            let lhs = f.apply_sparse(src.beta.column(t[0]));
            let rhs = dst.beta.apply_sparse(f.column(t[0]));
            (lhs, rhs)
        }),
        check_identity("preserves_counit", src.dim, 1, trunc, |t| {
            let lhs = dst.counit.apply_sparse(f.column(t[0]));
            (lhs, src.counit.column(t[0]).clone())
        }),
    ];
    Ok(AxiomReport { entries })
}

/// Both Hom-algebra and Hom-coalgebra morphism conditions.
pub fn is_hom_bialgebra_morphism(
    f: &LinMap,
    src: &HomBialgebra,
    dst: &HomBialgebra,
) -> Result<AxiomReport> {
    let mut report = is_hom_algebra_morphism(f, &src.algebra, &dst.algebra)?;
    report.extend(is_hom_coalgebra_morphism(
        f,
        &src.coalgebra,
        &dst.coalgebra,
    )?);
    Ok(report)
}
