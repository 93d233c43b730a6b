//! Hom-Lie brackets, the space G(V) of endomorphisms f with [f(x),y] + [x,f(y)] = 0,
//! and the commutative product x•y = [x,f(y)].

use std::fmt;

use num_traits::Zero;

use crate::algebra::{check_identity, first_failure, rational_algebra, StructureAlgebra, Verdict};
use crate::depolarization::{aa_cyclic, flexibility};
use crate::error::{Error, Result};
use crate::identity::Identity;
use crate::linalg::{in_span, Matrix, Rational};

/// A linear map with f(e_j) = Σᵢ M[i][j] eᵢ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Endomorphism(pub Matrix);

impl Endomorphism {
    pub fn new(m: Matrix) -> Result<Self> {
        if m.rows() != m.cols() {
            return Err(Error::Dimension { expected: m.rows(), found: m.cols() });
        }
        Ok(Endomorphism(m))
    }

    pub fn identity(n: usize) -> Self {
        Endomorphism(Matrix::identity(n))
    }

    pub fn zero(n: usize) -> Self {
        Endomorphism(Matrix::zeros(n, n))
    }

    pub fn dim(&self) -> usize {
        self.0.rows()
    }

    pub fn apply(&self, x: &[Rational]) -> Vec<Rational> {
        self.0.mul_vec(x)
    }

    pub fn compose(&self, other: &Endomorphism) -> Endomorphism {
        Endomorphism(self.0.mul(&other.0))
    }

    pub fn commutator(&self, other: &Endomorphism) -> Endomorphism {
        Endomorphism(self.0.mul(&other.0).sub(&other.0.mul(&self.0)))
    }

    /// Entries in row-major order.
    pub fn flatten(&self) -> Vec<Rational> {
        self.0.row_vecs().into_iter().flatten().collect()
    }
}

impl fmt::Display for Endomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

fn require_anticommutative(bracket: &StructureAlgebra) -> Result<()> {
    if bracket.is_anticommutative() {
        Ok(())
    } else {
        Err(Error::Symmetry("anticommutative"))
    }
}

fn require_dim(bracket: &StructureAlgebra, f: &Endomorphism) -> Result<()> {
    if bracket.dim() != f.dim() {
        return Err(Error::Dimension { expected: bracket.dim(), found: f.dim() });
    }
    Ok(())
}

/// The Heisenberg algebra with [e1,e2] = e3.
pub fn heisenberg() -> StructureAlgebra {
    rational_algebra(3, &[(0, 1, &[0, 0, 1]), (1, 0, &[0, 0, -1])])
}

/// [[x1,x2],f(x3)] + [[x2,x3],f(x1)] + [[x3,x1],f(x2)] = 0 on basis triples.
pub fn hom_jacobi_check(bracket: &StructureAlgebra, f: &Endomorphism) -> Result<Verdict> {
    require_anticommutative(bracket)?;
    require_dim(bracket, f)?;
    let n = bracket.dim();
    let images: Vec<Vec<Rational>> = (0..n).map(|i| f.apply(&bracket.basis_vector(i))).collect();
    Ok(first_failure(n, |[i, j, k]| {
        let term = |a: usize, b: usize, c: usize| bracket.mul(&bracket.product(a, b), &images[c]);
        let (t1, t2, t3) = (term(i, j, k), term(j, k, i), term(k, i, j));
        t1.iter().zip(&t2).zip(&t3).map(|((x, y), z)| x + y + z).collect()
    }))
}

/// Basis of { f : [f(x),y] + [x,f(y)] = 0 }.
pub fn gv_basis(bracket: &StructureAlgebra) -> Result<Vec<Endomorphism>> {
    require_anticommutative(bracket)?;
    let n = bracket.dim();
    let var = |p: usize, q: usize| p * n + q;
    let mut rows = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut row = vec![Rational::zero(); n * n];
                for p in 0..n {
                    row[var(p, i)] += bracket.constant(p, j, k);
                    row[var(p, j)] += bracket.constant(i, p, k);
                }
                rows.push(row);
            }
        }
    }
    let system = if rows.is_empty() { Matrix::zeros(0, 0) } else { Matrix::from_rows(rows) };
    let kernel = if n == 0 { Vec::new() } else { system.kernel() };
    Ok(kernel
        .into_iter()
        .map(|v| Endomorphism(Matrix::from_rows(v.chunks(n).map(<[Rational]>::to_vec).collect())))
        .collect())
}

pub fn in_gv(bracket: &StructureAlgebra, f: &Endomorphism) -> Result<bool> {
    let basis: Vec<Vec<Rational>> = gv_basis(bracket)?.iter().map(Endomorphism::flatten).collect();
    Ok(in_span(&basis, &f.flatten()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClosureVerdict {
    Pass,
    /// Indices into the gv_basis whose commutator leaves the span.
    Fail { i: usize, j: usize },
}

/// G(V) is closed under commutators.
pub fn gv_closure_check(bracket: &StructureAlgebra) -> Result<ClosureVerdict> {
    let basis = gv_basis(bracket)?;
    let flat: Vec<Vec<Rational>> = basis.iter().map(Endomorphism::flatten).collect();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            if !in_span(&flat, &basis[i].commutator(&basis[j]).flatten()) {
                return Ok(ClosureVerdict::Fail { i, j });
            }
        }
    }
    Ok(ClosureVerdict::Pass)
}

#[derive(Clone, Debug, PartialEq)]
pub struct BulletReport {
    pub product: StructureAlgebra,
    /// First pair (i, j) with eᵢ•eⱼ ≠ eⱼ•eᵢ, if any.
    pub noncommuting: Option<(usize, usize)>,
}

impl BulletReport {
    pub fn commutative(&self) -> bool {
        self.noncommuting.is_none()
    }
}

/// x•y = [x, f(y)].
pub fn bullet_from_f(bracket: &StructureAlgebra, f: &Endomorphism) -> Result<BulletReport> {
    require_dim(bracket, f)?;
    let n = bracket.dim();
    let mut product = StructureAlgebra::new(n);
    for i in 0..n {
        for j in 0..n {
            let fj = f.apply(&bracket.basis_vector(j));
            product.set(i, j, bracket.mul(&bracket.basis_vector(i), &fj))?;
        }
    }
    let noncommuting = product.commutativity_witness();
    Ok(BulletReport { product, noncommuting })
}

/// A(x,y,z) + A(y,z,x) + A(z,x,y) = 0.
pub fn cyclic_associator() -> Identity {
    Identity::from_i64([1, 0, 0, 0, 1, 1], [-1, 0, 0, 0, -1, -1])
}

/// Checks the cyclic associator sum and flexibility of a commutative product.
pub fn lemma2_check(dot: &StructureAlgebra) -> Result<Verdict> {
    if !dot.is_commutative() {
        return Err(Error::Symmetry("commutative"));
    }
    let v = check_identity(dot, &cyclic_associator())?;
    if !v.passed() {
        return Ok(v);
    }
    check_identity(dot, &flexibility())
}

/// Alternating sum of antiassociators AA(x,y,z) = (xy)z + x(yz).
pub fn theorem7_check(mu: &StructureAlgebra) -> Result<Verdict> {
    check_identity(mu, &aa_cyclic())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::depolarize_algebra;
    use crate::linalg::int;

    #[test]
    fn identity_map_on_lie_algebra() {
        let h = heisenberg();
        assert!(hom_jacobi_check(&h, &Endomorphism::identity(3)).unwrap().passed());
        assert!(hom_jacobi_check(&h, &Endomorphism::zero(3)).unwrap().passed());
    }

    #[test]
    fn abelian_gv_is_everything() {
        let z = StructureAlgebra::new(3);
        assert_eq!(gv_basis(&z).unwrap().len(), 9);
        assert_eq!(gv_closure_check(&z).unwrap(), ClosureVerdict::Pass);
        assert_eq!(gv_basis(&StructureAlgebra::new(1)).unwrap().len(), 1);
    }

    #[test]
    fn heisenberg_gv() {
        let h = heisenberg();
        let b = gv_basis(&h).unwrap();
        assert_eq!(b.len(), 6);
        for f in &b {
            let m = &f.0;
            assert_eq!(m[(0, 2)], int(0));
            assert_eq!(m[(1, 2)], int(0));
            assert_eq!(m[(1, 1)], -m[(0, 0)].clone());
        }
        assert_eq!(gv_closure_check(&h).unwrap(), ClosureVerdict::Pass);
    }

    #[test]
    fn bullet_of_identity_map_not_commutative() {
        let r = bullet_from_f(&heisenberg(), &Endomorphism::identity(3)).unwrap();
        assert_eq!(r.noncommuting, Some((0, 1)));
        assert!(bullet_from_f(&heisenberg(), &Endomorphism::zero(3)).unwrap().commutative());
    }

    #[test]
    fn heisenberg_depolarization() {
        let h = heisenberg();
        for f in gv_basis(&h).unwrap() {
            let r = bullet_from_f(&h, &f).unwrap();
            assert!(r.commutative());
            assert!(lemma2_check(&r.product).unwrap().passed());
            let mu = depolarize_algebra(&r.product, &h).unwrap();
            assert!(theorem7_check(&mu).unwrap().passed());
        }
    }

    #[test]
    fn lemma2_rejects_noncommutative() {
        assert!(lemma2_check(&heisenberg()).is_err());
    }
}
