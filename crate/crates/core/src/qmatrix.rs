//! Quantum 2×2 matrices `𝒪_q(M₂)` with the twist
//! `α(a) = a, α(b) = λb, α(c) = λ⁻¹c, α(d) = d`, realized exactly up to a
//! total degree `D`.
//!
//! Elements are kept in the normal form `Σ coef · a^i b^j c^k d^l`, reached
//! by the rewriting rules `ba → q·ab`, `ca → q·ac`, `db → q·bd`,
//! `dc → q·cd`, `cb → bc`, `da → ad − (q⁻¹ − q)·bc`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{LinMap, SparseVec, Vector};
use crate::structures::{HomAlgebra, HomBialgebra, HomCoalgebra, Truncation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Gen {
    A,
    B,
    C,
    D,
}

impl Gen {
    pub const ALL: [Gen; 4] = [Gen::A, Gen::B, Gen::C, Gen::D];

    pub fn from_char(c: char) -> Option<Gen> {
        match c {
            'a' => Some(Gen::A),
            'b' => Some(Gen::B),
            'c' => Some(Gen::C),
            'd' => Some(Gen::D),
            _ => None,
        }
    }

    pub fn letter(self) -> char {
        ['a', 'b', 'c', 'd'][self as usize]
    }
}

/// A word over `a, b, c, d`, e.g. `"cba"`. The empty string is the unit.
pub fn parse_word(s: &str) -> Result<Vec<Gen>> {
    s.chars()
        .map(|c| Gen::from_char(c).ok_or_else(|| Error::Format(format!("not a generator: {c:?}"))))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QParams {
    q: Scalar,
    lambda: Scalar,
    q_inv: Scalar,
}

impl QParams {
    pub fn new(q: Scalar, lambda: Scalar) -> Result<Self> {
        let q_inv = q
            .inverse()
            .map_err(|_| Error::InvalidStructure("q must be nonzero".into()))?;
        if lambda.is_zero() {
            return Err(Error::InvalidStructure("lambda must be nonzero".into()));
        }
        Ok(QParams { q, lambda, q_inv })
    }

    pub fn q(&self) -> &Scalar {
        &self.q
    }

    pub fn lambda(&self) -> &Scalar {
        &self.lambda
    }
}

impl Default for QParams {
    fn default() -> Self {
        QParams::new(Scalar::from_int(2), Scalar::from_int(3)).expect("nonzero")
    }
}

/// `a^e[0] b^e[1] c^e[2] d^e[3]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct QMonomial(pub [u32; 4]);

impl QMonomial {
    pub fn one() -> Self {
        QMonomial([0; 4])
    }

    pub fn generator(g: Gen) -> Self {
        let mut e = [0; 4];
        e[g as usize] = 1;
        QMonomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn word(&self) -> Vec<Gen> {
        Gen::ALL
            .iter()
            .flat_map(|&g| std::iter::repeat_n(g, self.0[g as usize] as usize))
            .collect()
    }

    fn from_sorted(word: &[Gen]) -> Self {
        let mut e = [0; 4];
        for &g in word {
            e[g as usize] += 1;
        }
        QMonomial(e)
    }
}

impl fmt::Display for QMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            return write!(f, "1");
        }
        for g in Gen::ALL {
            match self.0[g as usize] {
                0 => {}
                1 => write!(f, "{}", g.letter())?,
                e => write!(f, "{}^{}", g.letter(), e)?,
            }
        }
        Ok(())
    }
}

/// A finite linear combination of normal-form monomials, zero-free.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct QPoly {
    terms: BTreeMap<QMonomial, Scalar>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly::default()
    }

    pub fn one() -> Self {
        QPoly::monomial(QMonomial::one(), Scalar::one())
    }

    pub fn monomial(m: QMonomial, c: Scalar) -> Self {
        let mut p = QPoly::zero();
        p.add_term(m, &c);
        p
    }

    pub fn generator(g: Gen) -> Self {
        QPoly::monomial(QMonomial::generator(g), Scalar::one())
    }

    pub fn add_term(&mut self, m: QMonomial, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(Scalar::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add_scaled(&mut self, other: &QPoly, c: &Scalar) {
        for (m, v) in &other.terms {
            self.add_term(*m, &(v * c));
        }
    }

    pub fn scaled(&self, c: &Scalar) -> QPoly {
        let mut out = QPoly::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &QMonomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&QMonomial, &Scalar)> {
        self.terms.iter()
    }

    /// Highest degree of a term; 0 for the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(QMonomial::degree).max().unwrap_or(0)
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|x, y| basis_order(x.0, y.0));
        for (i, (m, c)) in terms.into_iter().enumerate() {
            let (neg, abs) = if c.is_negative() {
                (true, -c)
            } else {
                (false, c.clone())
            };
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            match (abs.is_one(), m.degree()) {
                (true, 0) => write!(f, "1")?,
                (true, _) => write!(f, "{m}")?,
                (false, 0) => write!(f, "{abs}")?,
                (false, _) => write!(f, "{abs}*{m}")?,
            }
        }
        Ok(())
    }
}

/// Degree first, then lexicographically larger exponent vectors first:
/// `1, a, b, c, d, a², ab, …`.
pub fn basis_order(x: &QMonomial, y: &QMonomial) -> std::cmp::Ordering {
    x.degree().cmp(&y.degree()).then_with(|| y.0.cmp(&x.0))
}

/// Rewrites `word` to normal form, always resolving the leftmost
/// out-of-order adjacent pair.
pub fn normal_form(word: &[Gen], p: &QParams) -> QPoly {
    normal_form_by(word, p, |_| 0)
}

/// Rewrites `word` to normal form; `pick` chooses which of the currently
/// out-of-order adjacent pairs (given by their positions) to resolve next.
pub fn normal_form_by<F>(word: &[Gen], p: &QParams, mut pick: F) -> QPoly
where
    F: FnMut(&[usize]) -> usize,
{
    let mut out = QPoly::zero();
    let mut pending: Vec<(Vec<Gen>, Scalar)> = vec![(word.to_vec(), Scalar::one())];
    let shift = &p.q_inv - &p.q;
    while let Some((w, c)) = pending.pop() {
        if c.is_zero() {
            continue;
        }
        let descents: Vec<usize> = (0..w.len().saturating_sub(1))
            .filter(|&i| w[i] > w[i + 1])
            .collect();
        if descents.is_empty() {
            out.add_term(QMonomial::from_sorted(&w), &c);
            continue;
        }
        let i = descents[pick(&descents) % descents.len()];
        let mut swapped = w.clone();
        swapped.swap(i, i + 1);
        use Gen::*;
        match (w[i], w[i + 1]) {
            (B, A) | (C, A) | (D, B) | (D, C) => pending.push((swapped, &c * &p.q)),
            (C, B) => pending.push((swapped, c)),
            (D, A) => {
                let mut bc = w.clone();
                bc[i] = B;
                bc[i + 1] = C;
                pending.push((bc, -(&c * &shift)));
                pending.push((swapped, c));
            }
            _ => unreachable!("only descents are rewritten"),
        }
    }
    out
}

/// The untwisted product.
pub fn multiply_classical(x: &QPoly, y: &QPoly, p: &QParams) -> QPoly {
    let mut out = QPoly::zero();
    for (mx, cx) in x.terms() {
        for (my, cy) in y.terms() {
            let mut w = mx.word();
            w.extend(my.word());
            out.add_scaled(&normal_form(&w, p), &(cx * cy));
        }
    }
    out
}

fn check_degree(degree: u32, max: u32) -> Result<()> {
    if degree > max {
        return Err(Error::TruncationExceeded { degree, max });
    }
    Ok(())
}

/// The twisted product `α ∘ m`.
pub fn multiply(x: &QPoly, y: &QPoly, p: &QParams, max_degree: u32) -> Result<QPoly> {
    check_degree(x.degree() + y.degree(), max_degree)?;
    Ok(alpha_map(&multiply_classical(x, y, p), p))
}

pub fn alpha_map(x: &QPoly, p: &QParams) -> QPoly {
    let mut out = QPoly::zero();
    for (m, c) in x.terms() {
        let (j, k) = (m.0[1] as i32, m.0[2] as i32);
        let scale = p.lambda.pow(j - k).expect("lambda is nonzero");
        out.add_term(*m, &(c * &scale));
    }
    out
}

/// `ε(a) = ε(d) = 1`, `ε(b) = ε(c) = 0`, extended multiplicatively.
pub fn counit(x: &QPoly) -> Scalar {
    x.terms()
        .filter(|(m, _)| m.0[1] == 0 && m.0[2] == 0)
        .map(|(_, c)| c.clone())
        .sum()
}

/// An element of `𝒪 ⊗ 𝒪` in the basis of monomial pairs.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct QTensor {
    terms: BTreeMap<(QMonomial, QMonomial), Scalar>,
}

impl QTensor {
    pub fn zero() -> Self {
        QTensor::default()
    }

    pub fn simple(x: &QPoly, y: &QPoly) -> Self {
        let mut out = QTensor::zero();
        for (mx, cx) in x.terms() {
            for (my, cy) in y.terms() {
                out.add_term((*mx, *my), &(cx * cy));
            }
        }
        out
    }

    pub fn add_term(&mut self, key: (QMonomial, QMonomial), c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(key).or_insert_with(Scalar::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add_scaled(&mut self, other: &QTensor, c: &Scalar) {
        for (k, v) in &other.terms {
            self.add_term(*k, &(v * c));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(QMonomial, QMonomial), &Scalar)> {
        self.terms.iter()
    }

    /// Leg-wise product with `mul` applied on each leg.
    fn product_with<F>(&self, other: &QTensor, mut mul: F) -> QTensor
    where
        F: FnMut(&QPoly, &QPoly) -> QPoly,
    {
        let mut out = QTensor::zero();
        for ((x1, x2), c) in &self.terms {
            for ((y1, y2), d) in &other.terms {
                let left = mul(
                    &QPoly::monomial(*x1, Scalar::one()),
                    &QPoly::monomial(*y1, Scalar::one()),
                );
                let right = mul(
                    &QPoly::monomial(*x2, Scalar::one()),
                    &QPoly::monomial(*y2, Scalar::one()),
                );
                out.add_scaled(&QTensor::simple(&left, &right), &(c * d));
            }
        }
        out
    }

    /// Leg-wise classical product.
    pub fn multiply_classical(&self, other: &QTensor, p: &QParams) -> QTensor {
        self.product_with(other, |x, y| multiply_classical(x, y, p))
    }

    /// Leg-wise twisted product.
    pub fn multiply(&self, other: &QTensor, p: &QParams) -> QTensor {
        self.product_with(other, |x, y| alpha_map(&multiply_classical(x, y, p), p))
    }
}

/// `Δ(a) = a⊗a + b⊗c`, `Δ(b) = a⊗b + b⊗d`, `Δ(c) = c⊗a + d⊗c`,
/// `Δ(d) = c⊗b + d⊗d`, extended multiplicatively.
pub fn coproduct_classical(x: &QPoly, p: &QParams) -> QTensor {
    use Gen::*;
    let g = QPoly::generator;
    let table = |gen: Gen| -> QTensor {
        let (l1, r1, l2, r2) = match gen {
            A => (A, A, B, C),
            B => (A, B, B, D),
            C => (C, A, D, C),
            D => (C, B, D, D),
        };
        let mut t = QTensor::simple(&g(l1), &g(r1));
        t.add_scaled(&QTensor::simple(&g(l2), &g(r2)), &Scalar::one());
        t
    };
    let mut out = QTensor::zero();
    for (m, c) in x.terms() {
        let mut acc = QTensor::simple(&QPoly::one(), &QPoly::one());
        for gen in m.word() {
            acc = acc.multiply_classical(&table(gen), p);
        }
        out.add_scaled(&acc, c);
    }
    out
}

/// The twisted coproduct `Δ ∘ α`.
pub fn coproduct(x: &QPoly, p: &QParams, max_degree: u32) -> Result<QTensor> {
    check_degree(x.degree(), max_degree)?;
    Ok(coproduct_classical(&alpha_map(x, p), p))
}

/// `ad − q⁻¹bc`.
pub fn det_q(p: &QParams) -> QPoly {
    let mut out = QPoly::monomial(QMonomial([1, 0, 0, 1]), Scalar::one());
    out.add_term(QMonomial([0, 1, 1, 0]), &-&p.q_inv);
    out
}

/// All monomials of degree at most `max_degree`, in [`basis_order`].
pub fn basis(max_degree: u32) -> Vec<QMonomial> {
    let mut out = Vec::new();
    for i in 0..=max_degree {
        for j in 0..=max_degree - i {
            for k in 0..=max_degree - i - j {
                for l in 0..=max_degree - i - j - k {
                    out.push(QMonomial([i, j, k, l]));
                }
            }
        }
    }
    out.sort_by(basis_order);
    out
}

/// Basis names as used in structure files.
pub fn basis_names(max_degree: u32) -> Vec<String> {
    basis(max_degree).iter().map(|m| m.to_string()).collect()
}

/// Coordinates of `x` in [`basis`]`(max_degree)`.
pub fn to_vector(x: &QPoly, max_degree: u32) -> Result<Vector> {
    check_degree(x.degree(), max_degree)?;
    let b = basis(max_degree);
    Ok(Vector(b.iter().map(|m| x.coefficient(m)).collect()))
}

fn index_of(b: &[QMonomial]) -> BTreeMap<QMonomial, usize> {
    b.iter().enumerate().map(|(i, m)| (*m, i)).collect()
}

fn to_sparse(x: &QPoly, index: &BTreeMap<QMonomial, usize>) -> SparseVec {
    let mut v = SparseVec::new();
    for (m, c) in x.terms() {
        v.add_term(index[m], c);
    }
    v
}

fn tensor_to_sparse(t: &QTensor, index: &BTreeMap<QMonomial, usize>) -> SparseVec {
    let n = index.len();
    let mut v = SparseVec::new();
    for ((x, y), c) in t.terms() {
        v.add_term(index[x] * n + index[y], c);
    }
    v
}

fn build(p: &QParams, max_degree: u32, twisted: bool) -> Result<HomBialgebra> {
    if max_degree < 2 {
        return Err(Error::InvalidStructure(
            "truncation degree must be at least 2".into(),
        ));
    }
    let b = basis(max_degree);
    let index = index_of(&b);
    let n = b.len();
    let twist = |x: QPoly| if twisted { alpha_map(&x, p) } else { x };
    let mut mul_cols = Vec::with_capacity(n * n);
    for x in &b {
        for y in &b {
            if x.degree() + y.degree() > max_degree {
                mul_cols.push(SparseVec::new());
                continue;
            }
            let prod = multiply_classical(
                &QPoly::monomial(*x, Scalar::one()),
                &QPoly::monomial(*y, Scalar::one()),
                p,
            );
            mul_cols.push(to_sparse(&twist(prod), &index));
        }
    }
    let alpha_cols = b
        .iter()
        .map(|m| to_sparse(&twist(QPoly::monomial(*m, Scalar::one())), &index))
        .collect();
    let alpha = LinMap::from_columns(n, alpha_cols)?;
    let comul_cols = b
        .iter()
        .map(|m| {
            let x = twist(QPoly::monomial(*m, Scalar::one()));
            tensor_to_sparse(&coproduct_classical(&x, p), &index)
        })
        .collect();
    let counit = LinMap::row_vector(&Vector(
        b.iter()
            .map(|m| counit(&QPoly::monomial(*m, Scalar::one())))
            .collect(),
    ));
    let truncation = Some(Truncation {
        grading: b.iter().map(QMonomial::degree).collect(),
        max_degree,
    });
    let algebra = HomAlgebra::new(
        LinMap::from_columns(n, mul_cols)?,
        Vector::basis(n, 0),
        alpha.clone(),
    )?
    .with_truncation(truncation.clone())?;
    let coalgebra = HomCoalgebra::new(LinMap::from_columns(n * n, comul_cols)?, counit, alpha)?
        .with_truncation(truncation)?;
    HomBialgebra::new(algebra, coalgebra)
}

/// The twisted structure `(m_α, α, Δ_α, ε, α)` on monomials of degree at
/// most `max_degree`; products leaving that range are set to zero and the
/// structure carries the matching [`Truncation`].
pub fn to_hom_bialgebra(p: &QParams, max_degree: u32) -> Result<HomBialgebra> {
    build(p, max_degree, true)
}

/// The untwisted bialgebra on the same truncated basis, with identity
/// twists.
pub fn to_classical_bialgebra(p: &QParams, max_degree: u32) -> Result<HomBialgebra> {
    build(p, max_degree, false)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: &str) -> Scalar {
        x.parse().unwrap()
    }

    fn poly(pairs: &[(&str, [u32; 4])]) -> QPoly {
        let mut p = QPoly::zero();
        for (c, e) in pairs {
            p.add_term(QMonomial(*e), &s(c));
        }
        p
    }

    #[test]
    fn rewriting_examples() {
        let p = QParams::default();
        let nf = |w: &str| normal_form(&parse_word(w).unwrap(), &p);
        assert_eq!(nf("ba"), poly(&[("2", [1, 1, 0, 0])]));
        // da = ad − (1/2 − 2) bc
        assert_eq!(
            nf("da"),
            poly(&[("1", [1, 0, 0, 1]), ("3/2", [0, 1, 1, 0])])
        );
        assert_eq!(nf("cba"), poly(&[("4", [1, 1, 1, 0])]));
        assert_eq!(nf(""), QPoly::one());
        assert_eq!(nf("cb").to_string(), "bc");
        assert!(parse_word("abx").is_err());
    }

    #[test]
    fn twisted_product_examples() {
        let p = QParams::default();
        let g = QPoly::generator;
        let ad = multiply(&g(Gen::A), &g(Gen::D), &p, 2).unwrap();
        let bc = multiply(&g(Gen::B), &g(Gen::C), &p, 2).unwrap();
        let mut det = ad.clone();
        det.add_scaled(&bc, &-s("1/2"));
        assert_eq!(det, det_q(&p));
        assert_eq!(bc, poly(&[("1", [0, 1, 1, 0])]));
        assert_eq!(
            multiply(&QPoly::one(), &g(Gen::B), &p, 2).unwrap(),
            g(Gen::B).scaled(&s("3"))
        );
        assert!(matches!(
            multiply(&ad, &g(Gen::A), &p, 2),
            Err(Error::TruncationExceeded { degree: 3, max: 2 })
        ));
    }

    #[test]
    fn determinant_is_grouplike() {
        let p = QParams::default();
        let det = det_q(&p);
        assert_eq!(det.to_string(), "ad - 1/2*bc");
        assert_eq!(alpha_map(&det, &p), det);
        assert_eq!(counit(&det), Scalar::one());
        assert_eq!(coproduct(&det, &p, 2).unwrap(), QTensor::simple(&det, &det));
        let b = coproduct(&QPoly::generator(Gen::B), &p, 2).unwrap();
        let mut expected = QTensor::simple(&QPoly::generator(Gen::A), &QPoly::generator(Gen::B));
        expected.add_scaled(
            &QTensor::simple(&QPoly::generator(Gen::B), &QPoly::generator(Gen::D)),
            &Scalar::one(),
        );
        let mut want = QTensor::zero();
        want.add_scaled(&expected, &s("3"));
        assert_eq!(b, want);
    }

    #[test]
    fn basis_sizes_and_order() {
        assert_eq!(basis(2).len(), 15);
        assert_eq!(basis(4).len(), 70);
        let names = basis_names(2);
        assert_eq!(&names[..7], &["1", "a", "b", "c", "d", "a^2", "ab"]);
        assert_eq!(names[14], "d^2");
    }
}
