//! Finite-dimensional algebras given by structure constants, the polynomial
//! function model and power-associativity probes.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::identity::Identity;
use crate::linalg::{int, rat, Rational};
use crate::operad::{trees, Tree};
use crate::sigma3::{MonomialIndex, Side};

/// Coefficient ring for structure constants.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + Zero
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn from_rational(r: &Rational) -> Self;
}

impl Scalar for Rational {
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
}

/// eᵢeⱼ = Σₖ c[i][j][k] eₖ, optionally with a Z₂-grading of the basis.
#[derive(Clone, Debug, PartialEq)]
pub struct StructureAlgebra<R = Rational> {
    dim: usize,
    grading: Option<Vec<u8>>,
    constants: Vec<R>,
}

impl<R: Scalar> StructureAlgebra<R> {
    pub fn new(dim: usize) -> Self {
        StructureAlgebra { dim, grading: None, constants: vec![R::zero(); dim * dim * dim] }
    }

    pub fn graded(degrees: Vec<u8>) -> Result<Self> {
        if degrees.iter().any(|&d| d > 1) {
            return Err(Error::InvalidArgument("degrees must be 0 or 1".into()));
        }
        let mut a = Self::new(degrees.len());
        a.grading = Some(degrees);
        Ok(a)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn grading(&self) -> Option<&[u8]> {
        self.grading.as_deref()
    }

    pub fn degree(&self, i: usize) -> u8 {
        self.grading.as_ref().map_or(0, |g| g[i])
    }

    pub fn with_grading(mut self, degrees: Option<Vec<u8>>) -> Result<Self> {
        if let Some(d) = &degrees {
            if d.len() != self.dim {
                return Err(Error::Dimension { expected: self.dim, found: d.len() });
            }
            if d.iter().any(|&x| x > 1) {
                return Err(Error::InvalidArgument("degrees must be 0 or 1".into()));
            }
        }
        self.grading = degrees;
        self.check_grading()?;
        Ok(self)
    }

    fn at(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dim + j) * self.dim + k
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &R {
        &self.constants[self.at(i, j, k)]
    }

    /// Set the product eᵢeⱼ (0-based indices).
    pub fn set(&mut self, i: usize, j: usize, value: Vec<R>) -> Result<()> {
        if i >= self.dim || j >= self.dim {
            return Err(Error::InvalidArgument(format!("basis index out of range: e{} e{}", i + 1, j + 1)));
        }
        if value.len() != self.dim {
            return Err(Error::Dimension { expected: self.dim, found: value.len() });
        }
        for (k, v) in value.into_iter().enumerate() {
            let p = self.at(i, j, k);
            self.constants[p] = v;
        }
        Ok(())
    }

    pub fn set_constant(&mut self, i: usize, j: usize, k: usize, v: R) {
        let p = self.at(i, j, k);
        self.constants[p] = v;
    }

    pub fn product(&self, i: usize, j: usize) -> Vec<R> {
        (0..self.dim).map(|k| self.constant(i, j, k).clone()).collect()
    }

    pub fn basis_vector(&self, i: usize) -> Vec<R> {
        let mut v = vec![R::zero(); self.dim];
        v[i] = R::from_rational(&Rational::one());
        v
    }

    pub fn mul(&self, x: &[R], y: &[R]) -> Vec<R> {
        let mut out = vec![R::zero(); self.dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let s = xi.clone() * yj.clone();
                for (k, o) in out.iter_mut().enumerate() {
                    let c = self.constant(i, j, k);
                    if !c.is_zero() {
                        *o = o.clone() + s.clone() * c.clone();
                    }
                }
            }
        }
        out
    }

    pub fn check_grading(&self) -> Result<()> {
        let Some(g) = &self.grading else { return Ok(()) };
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    if g[k] != (g[i] + g[j]) % 2 && !self.constant(i, j, k).is_zero() {
                        return Err(Error::Grading { i: i + 1, j: j + 1 });
                    }
                }
            }
        }
        Ok(())
    }

    /// First pair (i, j) with eᵢeⱼ ≠ s·eⱼeᵢ.
    fn symmetry_witness(&self, sign: bool) -> Option<(usize, usize)> {
        for i in 0..self.dim {
            for j in i..self.dim {
                for k in 0..self.dim {
                    let a = self.constant(i, j, k).clone();
                    let b = self.constant(j, i, k).clone();
                    let ok = if sign { a == b } else { (a + b).is_zero() };
                    if !ok {
                        return Some((i, j));
                    }
                }
            }
        }
        None
    }

    pub fn commutativity_witness(&self) -> Option<(usize, usize)> {
        self.symmetry_witness(true)
    }

    pub fn anticommutativity_witness(&self) -> Option<(usize, usize)> {
        self.symmetry_witness(false)
    }

    pub fn is_commutative(&self) -> bool {
        self.commutativity_witness().is_none()
    }

    pub fn is_anticommutative(&self) -> bool {
        self.anticommutativity_witness().is_none()
    }

    pub fn map<S: Scalar>(&self, f: impl Fn(&R) -> S) -> StructureAlgebra<S> {
        StructureAlgebra { dim: self.dim, grading: self.grading.clone(), constants: self.constants.iter().map(f).collect() }
    }

    pub fn scale(&self, s: &R) -> Self {
        self.map(|c| c.clone() * s.clone())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::Dimension { expected: self.dim, found: other.dim });
        }
        let mut out = self.clone();
        for (o, c) in out.constants.iter_mut().zip(&other.constants) {
            *o = o.clone() + c.clone();
        }
        Ok(out)
    }

    /// The product (x, y) ↦ yx.
    pub fn opposite(&self) -> Self {
        let mut out = self.clone();
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    out.set_constant(i, j, k, self.constant(j, i, k).clone());
                }
            }
        }
        out
    }

    /// Relabel basis vector i as p[i].
    pub fn permute_basis(&self, p: &[usize]) -> Self {
        let mut out = Self::new(self.dim);
        out.grading = self.grading.as_ref().map(|g| {
            let mut ng = vec![0; self.dim];
            for i in 0..self.dim {
                ng[p[i]] = g[i];
            }
            ng
        });
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    out.set_constant(p[i], p[j], p[k], self.constant(i, j, k).clone());
                }
            }
        }
        out
    }

    /// Value of monomial m at basis vectors (e_t[0], e_t[1], e_t[2]) for (x1, x2, x3).
    pub fn monomial(&self, m: MonomialIndex, t: [usize; 3]) -> Vec<R> {
        let [a, b, c] = m.variables().map(|v| self.basis_vector(t[(v - 1) as usize]));
        match m.side {
            Side::Left => self.mul(&self.mul(&a, &b), &c),
            Side::Right => self.mul(&a, &self.mul(&b, &c)),
        }
    }

    /// Σ coeffs[m] · m(e_t) over the 12 monomials.
    pub fn evaluate(&self, coeffs: &[R], t: [usize; 3]) -> Vec<R> {
        let mut out = vec![R::zero(); self.dim];
        for m in MonomialIndex::all() {
            let c = &coeffs[m.index()];
            if c.is_zero() {
                continue;
            }
            for (o, v) in out.iter_mut().zip(self.monomial(m, t)) {
                *o = o.clone() + c.clone() * v;
            }
        }
        out
    }
}

impl<R: Scalar> fmt::Display for StructureAlgebra<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "dim {}", self.dim)?;
        if let Some(g) = &self.grading {
            let d: Vec<String> = g.iter().map(u8::to_string).collect();
            writeln!(f, "deg {}", d.join(" "))?;
        }
        for i in 0..self.dim {
            for j in 0..self.dim {
                let p = self.product(i, j);
                if p.iter().all(Zero::is_zero) {
                    continue;
                }
                let s: Vec<String> = p.iter().map(|x| x.to_string()).collect();
                writeln!(f, "e {} {} = {}", i + 1, j + 1, s.join(" "))?;
            }
        }
        Ok(())
    }
}

/// Outcome of checking a trilinear relation on all basis triples.
#[derive(Clone, Debug, PartialEq)]
pub enum Verdict<R = Rational> {
    Pass,
    /// Lexicographically first failing triple (0-based) and the nonzero value there.
    Fail { triple: [usize; 3], residual: Vec<R> },
}

impl<R> Verdict<R> {
    pub fn passed(&self) -> bool {
        matches!(self, Verdict::Pass)
    }
}

/// Evaluate `f` on every triple in lexicographic order and report the first nonzero value.
pub fn first_failure<R, F>(dim: usize, f: F) -> Verdict<R>
where
    R: Scalar,
    F: Fn([usize; 3]) -> Vec<R> + Sync,
{
    let n = dim * dim * dim;
    let hit = (0..n).into_par_iter().find_map_first(|idx| {
        let t = [idx / (dim * dim), (idx / dim) % dim, idx % dim];
        let v = f(t);
        (!v.iter().all(Zero::is_zero)).then_some((t, v))
    });
    match hit {
        None => Verdict::Pass,
        Some((triple, residual)) => Verdict::Fail { triple, residual },
    }
}

/// Check an ungraded identity on every basis triple. Odd basis vectors are rejected;
/// graded algebras go through the signed checker.
pub fn check_identity<R: Scalar>(alg: &StructureAlgebra<R>, id: &Identity) -> Result<Verdict<R>> {
    if alg.grading().is_some_and(|g| g.contains(&1)) {
        return Err(Error::InvalidArgument("algebra has odd basis vectors; use the signed checker".into()));
    }
    let coeffs: Vec<R> = id.to_vector().iter().map(R::from_rational).collect();
    Ok(first_failure(alg.dim(), |t| alg.evaluate(&coeffs, t)))
}

/// μ = ½(• + [,]).
pub fn depolarize_algebra<R: Scalar>(
    dot: &StructureAlgebra<R>,
    bracket: &StructureAlgebra<R>,
) -> Result<StructureAlgebra<R>> {
    if dot.dim() != bracket.dim() {
        return Err(Error::Dimension { expected: dot.dim(), found: bracket.dim() });
    }
    if !dot.is_commutative() {
        return Err(Error::Symmetry("commutative"));
    }
    if !bracket.is_anticommutative() {
        return Err(Error::Symmetry("anticommutative"));
    }
    if dot.grading() != bracket.grading() {
        return Err(Error::InvalidArgument("gradings differ".into()));
    }
    Ok(dot.add(bracket)?.scale(&R::from_rational(&rat(1, 2))))
}

/// x•y = xy + yx and [x,y] = xy − yx.
pub fn polarize_algebra<R: Scalar>(mu: &StructureAlgebra<R>) -> (StructureAlgebra<R>, StructureAlgebra<R>) {
    let op = mu.opposite();
    let dot = mu.add(&op).expect("same dim");
    let bracket = mu.add(&op.scale(&R::from_rational(&int(-1)))).expect("same dim");
    (dot, bracket)
}

/// Distinct values among all bracketings of xⁿ, in order of first appearance.
pub fn power_defect<R: Scalar>(alg: &StructureAlgebra<R>, x: &[R], n: usize) -> Result<Vec<Vec<R>>> {
    if n == 0 || n > 6 {
        return Err(Error::InvalidArgument(format!("power {n} outside 1..=6")));
    }
    if x.len() != alg.dim() {
        return Err(Error::Dimension { expected: alg.dim(), found: x.len() });
    }
    fn eval<R: Scalar>(alg: &StructureAlgebra<R>, x: &[R], t: &Tree) -> Vec<R> {
        match t {
            Tree::X => x.to_vec(),
            Tree::Node(l, r) => alg.mul(&eval(alg, x, l), &eval(alg, x, r)),
        }
    }
    let mut out: Vec<Vec<R>> = Vec::new();
    for t in trees(n) {
        let v = eval(alg, x, &t);
        if !out.contains(&v) {
            out.push(v);
        }
    }
    Ok(out)
}

/// Univariate polynomial in t with rational coefficients, keyed by exponent.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly(BTreeMap<u32, Rational>);

impl Poly {
    pub fn zero() -> Self {
        Poly(BTreeMap::new())
    }

    pub fn monomial(exp: u32, c: Rational) -> Self {
        let mut p = Poly::zero();
        if !c.is_zero() {
            p.0.insert(exp, c);
        }
        p
    }

    pub fn from_coeffs(coeffs: &[Rational]) -> Self {
        let mut p = Poly::zero();
        for (e, c) in coeffs.iter().enumerate() {
            p = p.add(&Poly::monomial(e as u32, c.clone()));
        }
        p
    }

    pub fn coeff(&self, e: u32) -> Rational {
        self.0.get(&e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.0.keys().next_back().copied()
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.0.clone();
        for (e, c) in &other.0 {
            let v = out.remove(e).unwrap_or_else(Rational::zero) + c;
            if !v.is_zero() {
                out.insert(*e, v);
            }
        }
        Poly(out)
    }

    pub fn scale(&self, s: &Rational) -> Poly {
        if s.is_zero() {
            return Poly::zero();
        }
        Poly(self.0.iter().map(|(e, c)| (*e, c * s)).collect())
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(&int(-1)))
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (e1, c1) in &self.0 {
            for (e2, c2) in &other.0 {
                out = out.add(&Poly::monomial(e1 + e2, c1 * c2));
            }
        }
        out
    }

    pub fn derivative(&self) -> Poly {
        Poly(
            self.0
                .iter()
                .filter(|(e, _)| **e > 0)
                .map(|(e, c)| (e - 1, c * Rational::from_integer((*e).into())))
                .collect(),
        )
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .0
            .iter()
            .rev()
            .map(|(e, c)| match e {
                0 => format!("{c}"),
                1 => format!("{c}*t"),
                _ => format!("{c}*t^{e}"),
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

/// μ(f,g) = ½(fg + f′g − fg′).
pub fn poly_product(f: &Poly, g: &Poly) -> Poly {
    let fg = f.mul(g);
    let br = f.derivative().mul(g).sub(&f.mul(&g.derivative()));
    fg.add(&br).scale(&rat(1, 2))
}

pub fn poly_evaluate(id: &Identity, x: [&Poly; 3]) -> Poly {
    let coeffs = id.to_vector();
    let mut out = Poly::zero();
    for m in MonomialIndex::all() {
        let c = &coeffs[m.index()];
        if c.is_zero() {
            continue;
        }
        let [a, b, d] = m.variables().map(|v| x[(v - 1) as usize]);
        let v = match m.side {
            Side::Left => poly_product(&poly_product(a, b), d),
            Side::Right => poly_product(a, &poly_product(b, d)),
        };
        out = out.add(&v.scale(c));
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolyVerdict {
    Pass { checked: usize },
    Fail { witness: [Poly; 3], residual: Poly },
}

impl PolyVerdict {
    pub fn passed(&self) -> bool {
        matches!(self, PolyVerdict::Pass { .. })
    }
}

fn random_poly(rng: &mut ChaCha8Rng, degree: u32) -> Poly {
    let coeffs: Vec<Rational> =
        (0..=degree).map(|_| rat(rng.gen_range(-9..=9), rng.gen_range(1..=4))).collect();
    Poly::from_coeffs(&coeffs)
}

/// Check an identity in the model f•g = fg, [f,g] = f′g − fg′. All monomial triples
/// tᵃ, tᵇ, tᶜ with exponents up to `degree_bound` are tried first, then `trials`
/// random polynomial triples drawn from `seed`.
pub fn poly_check(id: &Identity, degree_bound: u32, trials: usize, seed: u64) -> PolyVerdict {
    let mut checked = 0;
    for a in 0..=degree_bound {
        for b in 0..=degree_bound {
            for c in 0..=degree_bound {
                let x = [a, b, c].map(|e| Poly::monomial(e, int(1)));
                let r = poly_evaluate(id, [&x[0], &x[1], &x[2]]);
                if !r.is_zero() {
                    return PolyVerdict::Fail { witness: x, residual: r };
                }
                checked += 1;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let x = [0; 3].map(|_| random_poly(&mut rng, degree_bound));
        let r = poly_evaluate(id, [&x[0], &x[1], &x[2]]);
        if !r.is_zero() {
            return PolyVerdict::Fail { witness: x, residual: r };
        }
        checked += 1;
    }
    PolyVerdict::Pass { checked }
}

pub fn rational_algebra(dim: usize, products: &[(usize, usize, &[i64])]) -> StructureAlgebra {
    let mut a = StructureAlgebra::new(dim);
    for &(i, j, v) in products {
        a.set(i, j, v.iter().map(|&x| int(x)).collect()).expect("valid product");
    }
    a
}
