//! Named identities and the solved depolarization problems: Lie and
//! associative admissibility, the JacAss family, Poisson and transposed Poisson.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::identity::{decode_distributive, implies, implies_all, DistributiveLaw, Identity, Implication};
use crate::linalg::{primitive, Certificate, Matrix, Rational, Solution};
use crate::sigma3::{combination_matrix, GroupAlgebraElement};

pub fn jacobi() -> Identity {
    Identity::from_i64([1, -1, -1, -1, 1, 1], [-1, 1, 1, 1, -1, -1])
}

pub fn associativity() -> Identity {
    Identity::from_i64([1, 1, -1, 0, -1, 0], [-1, 0, 1, -1, 0, 1])
}

pub fn leibniz() -> Identity {
    Identity::from_i64([1, 1, 1, -1, -1, 1], [-1, -1, -1, 1, 1, -1])
}

pub fn transposed_leibniz() -> Identity {
    Identity::from_i64([2, -2, 1, -1, 1, -1], [-1, 1, -2, -1, 1, 2])
}

pub fn aa_cyclic() -> Identity {
    Identity::from_i64([1, -1, -1, -1, 1, 1], [1, -1, -1, -1, 1, 1])
}

pub fn poisson() -> Identity {
    Identity::from_i64([3, 1, 0, -1, -1, 1], [-3, 0, 0, 0, 0, 0])
}

/// A(x,y,z) + A(y,x,z) = 0 with A the associator.
pub fn anti_pre_lie() -> Identity {
    Identity::from_i64([1, 1, 0, 0, 0, 0], [-1, -1, 0, 0, 0, 0])
}

/// A(x,y,z) + A(z,y,x) = 0.
pub fn flexibility() -> Identity {
    Identity::from_i64([1, 0, 1, 0, 0, 0], [-1, 0, -1, 0, 0, 0])
}

// jacass(a) = C0 + a1 C1 + a2 C2 + a3 C3 on the left block, e_Id on the right.
const JACASS_PARTS: [[i64; 6]; 4] = [
    [0, 0, 0, -2, -1, -2],
    [1, 0, 0, -3, -2, -2],
    [0, 1, 0, 2, 2, 1],
    [0, 0, 1, 2, 1, 2],
];

/// The identities whose depolarization carries a Lie bracket and an associative commutative product.
pub fn jacass_family(a1: &Rational, a2: &Rational, a3: &Rational) -> Identity {
    let parts = JACASS_PARTS.map(GroupAlgebraElement::from_i64);
    let left = parts[0].add(&parts[1].scale(a1)).add(&parts[2].scale(a2)).add(&parts[3].scale(a3));
    Identity::new(left, GroupAlgebraElement::from_i64([1, 0, 0, 0, 0, 0]))
}

pub fn lie_admissible(id: &Identity) -> bool {
    implies(id, &jacobi()).holds()
}

pub fn assoc_admissible(id: &Identity) -> bool {
    implies(id, &associativity()).holds()
}

/// Outcome of fitting the JacAss parameters so that the family implies a target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum JacAssFit {
    Solved { params: [Rational; 3], witness: GroupAlgebraElement, identity: Identity },
    /// The linear system in (a1,a2,a3) with its inconsistency certificate.
    NoSolution { system: Matrix, rhs: Vec<Rational>, certificate: Certificate },
}

/// Solve for (a1,a2,a3) such that jacass(a) implies `target` with a single
/// coefficient vector U. The right block is e_Id, so U is forced to be target.right.
pub fn fit_jacass(target: &Identity) -> Result<JacAssFit> {
    let b = combination_matrix(&GroupAlgebraElement::from_i64([1, 0, 0, 0, 0, 0]));
    let u = match b.solve(&target.right.to_vec())? {
        Solution::Consistent { particular, kernel } if kernel.is_empty() => particular,
        _ => return Err(Error::Inconsistent("right block does not determine U".into())),
    };
    let parts = JACASS_PARTS.map(GroupAlgebraElement::from_i64);
    let images: Vec<Vec<Rational>> = parts.iter().map(|p| combination_matrix(p).mul_vec(&u)).collect();
    let system = Matrix::from_columns(images[1..].to_vec());
    let rhs: Vec<Rational> = target.left.0.iter().zip(&images[0]).map(|(t, c)| t - c).collect();
    match system.solve(&rhs)? {
        Solution::Consistent { particular, kernel } => {
            if !kernel.is_empty() {
                return Err(Error::Inconsistent("JacAss parameters are not determined".into()));
            }
            let params: [Rational; 3] = std::array::from_fn(|i| particular[i].clone());
            let identity = jacass_family(&params[0], &params[1], &params[2]);
            Ok(JacAssFit::Solved { params, witness: GroupAlgebraElement::from_slice(&u)?, identity })
        }
        Solution::NoSolution(certificate) => Ok(JacAssFit::NoSolution { system, rhs, certificate }),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoissonSolution {
    pub params: [Rational; 3],
    pub witness: GroupAlgebraElement,
    pub raw: Identity,
    pub identity: Identity,
}

/// The unique member of the JacAss family implying the Leibniz law, normalized
/// to the smallest integer vector with positive leading coefficient.
pub fn solve_poisson() -> Result<PoissonSolution> {
    match fit_jacass(&leibniz())? {
        JacAssFit::Solved { params, witness, identity } => Ok(PoissonSolution {
            params,
            witness,
            identity: identity.normalized(),
            raw: identity,
        }),
        JacAssFit::NoSolution { .. } => Err(Error::Inconsistent("Leibniz target has no JacAss solution".into())),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransposedReport {
    pub system: Matrix,
    pub rhs: Vec<Rational>,
    pub certificate: Certificate,
    /// Distinct equations (coefficients then right-hand side), each scaled to a primitive integer row.
    pub equations: Vec<Vec<Rational>>,
}

/// The JacAss family cannot imply the transposed Leibniz law.
pub fn solve_transposed() -> Result<TransposedReport> {
    match fit_jacass(&transposed_leibniz())? {
        JacAssFit::NoSolution { system, rhs, certificate } => {
            let mut equations: Vec<Vec<Rational>> = Vec::new();
            for (i, b) in rhs.iter().enumerate() {
                let mut row = system.row(i).to_vec();
                row.push(b.clone());
                if row.iter().all(Zero::is_zero) {
                    continue;
                }
                let p = primitive(&row);
                if !equations.contains(&p) {
                    equations.push(p);
                }
            }
            Ok(TransposedReport { system, rhs, certificate, equations })
        }
        JacAssFit::Solved { .. } => Err(Error::Inconsistent("transposed Leibniz unexpectedly solvable".into())),
    }
}

/// Transposed Leibniz, Jacobi and associativity of the commutative part.
pub fn transposed_axioms() -> [Identity; 3] {
    [transposed_leibniz(), jacobi(), associativity()]
}

/// a x3•[x1,x2] − b [x3•x1,x2] − c [x1,x3•x2] = 0 written in μ.
pub fn abc_transposed(a: &Rational, b: &Rational, c: &Rational) -> Result<Identity> {
    if a.is_zero() {
        return Err(Error::InvalidArgument("a must be nonzero".into()));
    }
    let left = [a.clone(), -a, c.clone(), -b, c.clone(), -b];
    let right = [-c, b.clone(), -a, -c, b.clone(), a.clone()];
    Ok(Identity::new(GroupAlgebraElement(left), GroupAlgebraElement(right)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AaCyclicCertificate {
    pub u: GroupAlgebraElement,
    /// A·U for the left and right blocks of the transposed Leibniz axiom.
    pub transposed_left: Vec<Rational>,
    pub transposed_right: Vec<Rational>,
    /// Witness of the stacked implication from all three axioms.
    pub witness: Vec<GroupAlgebraElement>,
    pub law: DistributiveLaw,
}

/// Transposed Poisson axioms imply x1•[x2,x3] + x2•[x3,x1] + x3•[x1,x2] = 0.
pub fn aa_cyclic_consequence() -> Result<AaCyclicCertificate> {
    let u = GroupAlgebraElement::from_i64([1, -1, -1, -1, 1, 1]);
    let tl = transposed_leibniz();
    let witness = match implies_all(&transposed_axioms(), &aa_cyclic()) {
        Implication::Implied { witness } => witness,
        Implication::NotImplied { .. } => {
            return Err(Error::Inconsistent("axioms do not imply the cyclic law".into()));
        }
    };
    Ok(AaCyclicCertificate {
        transposed_left: combination_matrix(&tl.left).mul_vec(&u.to_vec()),
        transposed_right: combination_matrix(&tl.right).mul_vec(&u.to_vec()),
        u,
        witness,
        law: decode_distributive(&aa_cyclic())?,
    })
}

/// Eigenvalue of combination_matrix(v) on U when U is an eigenvector.
pub fn eigenvalue_on(v: &GroupAlgebraElement, u: &GroupAlgebraElement) -> Option<Rational> {
    let image = combination_matrix(v).mul_vec(&u.to_vec());
    let k = u.0.iter().position(|x| !x.is_zero())?;
    let lambda = &image[k] / &u.0[k];
    let expected: Vec<Rational> = u.0.iter().map(|x| x * &lambda).collect();
    (image == expected).then_some(lambda)
}
