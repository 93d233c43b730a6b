//! Degree-3 multilinear identities, the polarization transform, distributive
//! laws, implication and consequence spaces.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{int, is_zero_vec, primitive, rat, span_basis, Certificate, Matrix, Rational, Solution};
use crate::sigma3::{combination_matrix, left_translate, GroupAlgebraElement, Perm};

/// Σ aᵢ L(σᵢ) + Σ bᵢ R(σᵢ) = 0 in the fixed monomial order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Identity {
    pub left: GroupAlgebraElement,
    pub right: GroupAlgebraElement,
}

impl Identity {
    pub fn new(left: GroupAlgebraElement, right: GroupAlgebraElement) -> Self {
        Identity { left, right }
    }

    pub fn from_i64(left: [i64; 6], right: [i64; 6]) -> Self {
        Identity::new(GroupAlgebraElement::from_i64(left), GroupAlgebraElement::from_i64(right))
    }

    pub fn zero() -> Self {
        Identity::new(GroupAlgebraElement::zero(), GroupAlgebraElement::zero())
    }

    pub fn from_vector(v: &[Rational]) -> Result<Self> {
        if v.len() != 12 {
            return Err(Error::Dimension { expected: 12, found: v.len() });
        }
        Ok(Identity::new(GroupAlgebraElement::from_slice(&v[..6])?, GroupAlgebraElement::from_slice(&v[6..])?))
    }

    /// The 12 coefficients, left block first.
    pub fn to_vector(&self) -> Vec<Rational> {
        self.left.0.iter().chain(self.right.0.iter()).cloned().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.left.is_zero() && self.right.is_zero()
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Identity::new(self.left.scale(s), self.right.scale(s))
    }

    /// The identity obtained by renaming x_i to x_σ(i).
    pub fn translate(&self, s: Perm) -> Self {
        Identity::new(left_translate(s, &self.left), left_translate(s, &self.right))
    }

    /// Smallest integer multiple with positive leading coefficient.
    pub fn normalized(&self) -> Self {
        Identity::from_vector(&primitive(&self.to_vector())).expect("length 12")
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} | {}", self.left, self.right)
    }
}

/// The 12 coordinates λ₁..λ₁₂ of an identity after polarization.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolarizedIdentity {
    pub lambda: [Rational; 12],
}

impl PolarizedIdentity {
    pub fn from_slice(v: &[Rational]) -> Result<Self> {
        if v.len() != 12 {
            return Err(Error::Dimension { expected: 12, found: v.len() });
        }
        Ok(PolarizedIdentity { lambda: std::array::from_fn(|i| v[i].clone()) })
    }
}

impl fmt::Display for PolarizedIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::linalg::fmt_vec(&self.lambda))
    }
}

// Each group of four λ's mixes two left and two right coefficients:
// (a_p + a_q) ± (b_r + b_s) and (a_p − a_q) ∓ o(b_r − b_s). The orientation o
// is −1 for the group with x2 outside, where x2(x1x3) carries [x1,x3] with a plus sign.
const GROUPS: [(usize, usize, usize, usize, i64); 3] = [(0, 1, 2, 5, 1), (2, 4, 0, 3, 1), (3, 5, 1, 4, -1)];

pub fn polarize_coeffs(id: &Identity) -> PolarizedIdentity {
    let a = &id.left.0;
    let b = &id.right.0;
    let mut l: [Rational; 12] = std::array::from_fn(|_| Rational::zero());
    for (g, &(p, q, r, s, o)) in GROUPS.iter().enumerate() {
        let skew = (&b[r] - &b[s]) * int(o);
        l[g] = &a[p] + &a[q] + &b[r] + &b[s];
        l[g + 3] = &a[p] + &a[q] - &b[r] - &b[s];
        l[g + 6] = &a[p] - &a[q] - &skew;
        l[g + 9] = &a[p] - &a[q] + &skew;
    }
    PolarizedIdentity { lambda: l }
}

pub fn depolarize_coeffs(p: &PolarizedIdentity) -> Identity {
    let l = &p.lambda;
    let quarter = rat(1, 4);
    let mut a: [Rational; 6] = std::array::from_fn(|_| Rational::zero());
    let mut b: [Rational; 6] = std::array::from_fn(|_| Rational::zero());
    for (g, &(ip, iq, ir, is, o)) in GROUPS.iter().enumerate() {
        let (s, d, u, v) = (&l[g], &l[g + 3], &l[g + 6], &l[g + 9]);
        let skew = (v - u) * int(o);
        a[ip] = (s + d + u + v) * &quarter;
        a[iq] = (s + d - u - v) * &quarter;
        b[ir] = (s - d + &skew) * &quarter;
        b[is] = (s - d - &skew) * &quarter;
    }
    Identity::new(GroupAlgebraElement(a), GroupAlgebraElement(b))
}

/// Σ αᵢ xᵢ•[x_{i+1},x_{i+2}] + Σ βᵢ [xᵢ•x_{i+1}, x_{i+2}] = 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DistributiveLaw {
    pub alpha: [Rational; 3],
    pub beta: [Rational; 3],
}

impl DistributiveLaw {
    pub fn from_i64(alpha: [i64; 3], beta: [i64; 3]) -> Self {
        DistributiveLaw { alpha: alpha.map(int), beta: beta.map(int) }
    }

    pub fn rho(&self) -> [Rational; 6] {
        let (a, b) = (&self.alpha, &self.beta);
        [&a[2] + &b[0], -&a[2] + &b[0], -&a[0] + &b[1], -&a[1] + &b[2], &a[0] + &b[1], &a[1] + &b[2]]
    }

    pub fn from_rho(rho: &[Rational; 6]) -> Self {
        let half = rat(1, 2);
        DistributiveLaw {
            alpha: [(&rho[4] - &rho[2]) * &half, (&rho[5] - &rho[3]) * &half, (&rho[0] - &rho[1]) * &half],
            beta: [(&rho[0] + &rho[1]) * &half, (&rho[2] + &rho[4]) * &half, (&rho[3] + &rho[5]) * &half],
        }
    }
}

impl fmt::Display for DistributiveLaw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "alpha: {}\nbeta: {}", crate::linalg::fmt_vec(&self.alpha), crate::linalg::fmt_vec(&self.beta))
    }
}

/// The right block forced by a left block ρ for a distributive law.
fn right_pattern(rho: &[Rational; 6]) -> [Rational; 6] {
    [-&rho[2], -&rho[5], -&rho[0], -&rho[4], -&rho[3], -&rho[1]]
}

/// The identity (ρ | pattern(ρ)) carried by a distributive law.
pub fn rho_identity(rho: &[Rational; 6]) -> Identity {
    Identity::new(GroupAlgebraElement(rho.clone()), GroupAlgebraElement(right_pattern(rho)))
}

pub fn encode_distributive(d: &DistributiveLaw) -> Identity {
    rho_identity(&d.rho())
}

pub fn decode_distributive(id: &Identity) -> Result<DistributiveLaw> {
    let rho = &id.left.0;
    if right_pattern(rho) != id.right.0 {
        return Err(Error::NotDistributive);
    }
    Ok(DistributiveLaw::from_rho(rho))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Implication {
    /// One coefficient vector per family member: Σ_k Σ_σ U_k[σ] σ·F_k = target.
    Implied { witness: Vec<GroupAlgebraElement> },
    /// Multipliers over the 12 monomial equations proving inconsistency.
    NotImplied { certificate: Certificate, system: Matrix, rhs: Vec<Rational> },
}

impl Implication {
    pub fn holds(&self) -> bool {
        matches!(self, Implication::Implied { .. })
    }

    pub fn witness(&self) -> Option<&[GroupAlgebraElement]> {
        match self {
            Implication::Implied { witness } => Some(witness),
            Implication::NotImplied { .. } => None,
        }
    }
}

/// The 12 × 6k matrix whose columns are the σ-translates of each family member.
pub fn stacked_matrix(family: &[Identity]) -> Matrix {
    let mut m = Matrix::zeros(12, 0);
    for id in family {
        let block = combination_matrix(&id.left).vstack(&combination_matrix(&id.right));
        m = m.hstack(&block);
    }
    m
}

/// Is `target` a linear combination of σ-translates of the family members?
pub fn implies_all(family: &[Identity], target: &Identity) -> Implication {
    let m = stacked_matrix(family);
    let rhs = target.to_vector();
    if family.is_empty() {
        return if is_zero_vec(&rhs) {
            Implication::Implied { witness: Vec::new() }
        } else {
            let first = rhs.iter().position(|x| !x.is_zero()).unwrap();
            let mut y = vec![Rational::zero(); 12];
            y[first] = int(1);
            Implication::NotImplied { certificate: Certificate { multipliers: y }, system: m, rhs }
        };
    }
    match m.solve(&rhs).expect("12 rows") {
        Solution::Consistent { particular, .. } => Implication::Implied {
            witness: particular.chunks(6).map(|c| GroupAlgebraElement::from_slice(c).unwrap()).collect(),
        },
        Solution::NoSolution(certificate) => Implication::NotImplied { certificate, system: m, rhs },
    }
}

pub fn implies(family: &Identity, target: &Identity) -> Implication {
    implies_all(std::slice::from_ref(family), target)
}

/// Basis of the ρ ∈ ℚ⁶ whose distributive-law identity is implied by the family.
pub fn consequence_space(family: &[Identity]) -> Vec<[Rational; 6]> {
    // Unknowns (U, ρ): stacked·U − (ρ | pattern(ρ)) = 0.
    let s = stacked_matrix(family);
    let mut p = Matrix::zeros(12, 6);
    for i in 0..6 {
        let mut e: [Rational; 6] = std::array::from_fn(|_| Rational::zero());
        e[i] = int(1);
        let col = rho_identity(&e).to_vector();
        for (r, x) in col.into_iter().enumerate() {
            p[(r, i)] = -x;
        }
    }
    let system = s.hstack(&p);
    let n = s.cols();
    let projected: Vec<Vec<Rational>> = system.kernel().into_iter().map(|k| k[n..].to_vec()).collect();
    let nonzero: Vec<Vec<Rational>> = projected.into_iter().filter(|v| !is_zero_vec(v)).collect();
    span_basis(&nonzero, 6).into_iter().map(|v| std::array::from_fn(|i| v[i].clone())).collect()
}
