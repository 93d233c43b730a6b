//! The group algebra of Σ₃ and its action on parenthesized degree-3 monomials.
//!
//! Basis order is fixed: Id, τ12, τ13, τ23, c, c² with c: 1→2→3→1.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{int, Matrix, Rational};

/// A permutation of {1,2,3}, stored as its images (σ(1), σ(2), σ(3)).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm([u8; 3]);

impl Perm {
    pub const ID: Perm = Perm([1, 2, 3]);
    pub const T12: Perm = Perm([2, 1, 3]);
    pub const T13: Perm = Perm([3, 2, 1]);
    pub const T23: Perm = Perm([1, 3, 2]);
    pub const C: Perm = Perm([2, 3, 1]);
    pub const C2: Perm = Perm([3, 1, 2]);

    pub fn new(images: [u8; 3]) -> Result<Perm> {
        let mut seen = [false; 3];
        for &x in &images {
            if !(1..=3).contains(&x) || seen[(x - 1) as usize] {
                return Err(Error::InvalidArgument(format!("{images:?} is not a permutation of 1,2,3")));
            }
            seen[(x - 1) as usize] = true;
        }
        Ok(Perm(images))
    }

    pub fn images(self) -> [u8; 3] {
        self.0
    }

    /// σ(i) for i in 1..=3.
    pub fn apply(self, i: u8) -> u8 {
        self.0[(i - 1) as usize]
    }

    /// (self ∘ other)(i) = self(other(i)).
    pub fn compose(self, other: Perm) -> Perm {
        Perm([self.apply(other.0[0]), self.apply(other.0[1]), self.apply(other.0[2])])
    }

    pub fn inverse(self) -> Perm {
        let mut inv = [0u8; 3];
        for i in 0..3 {
            inv[(self.0[i] - 1) as usize] = i as u8 + 1;
        }
        Perm(inv)
    }

    /// +1 for even permutations, −1 for odd ones.
    pub fn sign(self) -> i64 {
        match self.index() {
            0 | 4 | 5 => 1,
            _ => -1,
        }
    }

    /// Position in the fixed basis order.
    pub fn index(self) -> usize {
        BASIS.iter().position(|&p| p == self).expect("valid permutation")
    }

    pub fn name(self) -> &'static str {
        ["Id", "t12", "t13", "t23", "c", "c2"][self.index()]
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub const BASIS: [Perm; 6] = [Perm::ID, Perm::T12, Perm::T13, Perm::T23, Perm::C, Perm::C2];

pub fn compose(s: Perm, t: Perm) -> Perm {
    s.compose(t)
}

/// An element Σ v_σ σ of the group algebra, coordinates in basis order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupAlgebraElement(pub [Rational; 6]);

impl GroupAlgebraElement {
    pub fn zero() -> Self {
        GroupAlgebraElement(std::array::from_fn(|_| Rational::zero()))
    }

    /// The basis element σ.
    pub fn basis(s: Perm) -> Self {
        let mut v = Self::zero();
        v.0[s.index()] = int(1);
        v
    }

    pub fn from_i64(v: [i64; 6]) -> Self {
        GroupAlgebraElement(v.map(int))
    }

    pub fn from_slice(v: &[Rational]) -> Result<Self> {
        if v.len() != 6 {
            return Err(Error::Dimension { expected: 6, found: v.len() });
        }
        Ok(GroupAlgebraElement(std::array::from_fn(|i| v[i].clone())))
    }

    pub fn coords(&self) -> &[Rational; 6] {
        &self.0
    }

    pub fn to_vec(&self) -> Vec<Rational> {
        self.0.to_vec()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, s: &Rational) -> Self {
        GroupAlgebraElement(std::array::from_fn(|i| &self.0[i] * s))
    }

    pub fn add(&self, other: &Self) -> Self {
        GroupAlgebraElement(std::array::from_fn(|i| &self.0[i] + &other.0[i]))
    }
}

impl fmt::Display for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::linalg::fmt_vec(&self.0))
    }
}

/// Coordinates of s∘v.
pub fn left_translate(s: Perm, v: &GroupAlgebraElement) -> GroupAlgebraElement {
    let mut out = GroupAlgebraElement::zero();
    for (k, &rho) in BASIS.iter().enumerate() {
        out.0[s.compose(rho).index()] = v.0[k].clone();
    }
    out
}

/// Row σ holds the coordinates of σ∘v.
pub fn orbit_matrix(v: &GroupAlgebraElement) -> Matrix {
    Matrix::from_rows(BASIS.iter().map(|&s| left_translate(s, v).to_vec()).collect())
}

/// The matrix M with coords(Σ u_σ σ∘v) = M·u, i.e. the transpose of the orbit matrix.
pub fn combination_matrix(v: &GroupAlgebraElement) -> Matrix {
    orbit_matrix(v).transpose()
}

/// Dimension of the Σ₃-module generated by v.
pub fn module_rank(v: &GroupAlgebraElement) -> Result<usize> {
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(orbit_matrix(v).rank())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

/// One of the 12 monomials: L(σ) = (x_σ1 x_σ2) x_σ3 or R(σ) = x_σ1 (x_σ2 x_σ3).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialIndex {
    pub side: Side,
    pub sigma: Perm,
}

impl MonomialIndex {
    pub fn index(self) -> usize {
        let base = match self.side {
            Side::Left => 0,
            Side::Right => 6,
        };
        base + self.sigma.index()
    }

    pub fn from_index(i: usize) -> Option<MonomialIndex> {
        match i {
            0..=5 => Some(MonomialIndex { side: Side::Left, sigma: BASIS[i] }),
            6..=11 => Some(MonomialIndex { side: Side::Right, sigma: BASIS[i - 6] }),
            _ => None,
        }
    }

    pub fn all() -> [MonomialIndex; 12] {
        std::array::from_fn(|i| MonomialIndex::from_index(i).unwrap())
    }

    /// Variable indices (1-based) in reading order.
    pub fn variables(self) -> [u8; 3] {
        self.sigma.images()
    }
}

impl fmt::Display for MonomialIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.variables();
        match self.side {
            Side::Left => write!(f, "(x{a}x{b})x{c}"),
            Side::Right => write!(f, "x{a}(x{b}x{c})"),
        }
    }
}

/// A family from the rank classification of generators of Σ₃-modules.
pub struct RankFamily {
    pub name: &'static str,
    pub rank: usize,
    pub params: &'static [&'static str],
    pub constraint: &'static str,
    admissible: fn(&[Rational]) -> bool,
    build: fn(&[Rational]) -> [Rational; 6],
}

impl RankFamily {
    pub fn instance(&self, params: &[Rational]) -> Result<GroupAlgebraElement> {
        if params.len() != self.params.len() {
            return Err(Error::Dimension { expected: self.params.len(), found: params.len() });
        }
        if !(self.admissible)(params) {
            return Err(Error::InvalidArgument(format!("{}: requires {}", self.name, self.constraint)));
        }
        Ok(GroupAlgebraElement((self.build)(params)))
    }
}

fn always(_: &[Rational]) -> bool {
    true
}

fn fixed(v: [i64; 6]) -> [Rational; 6] {
    v.map(int)
}

pub static RANK_FAMILIES: [RankFamily; 14] = [
    RankFamily {
        name: "V1_1",
        rank: 1,
        params: &[],
        constraint: "",
        admissible: always,
        build: |_| fixed([1, -1, -1, -1, 1, 1]),
    },
    RankFamily {
        name: "V1_2",
        rank: 1,
        params: &[],
        constraint: "",
        admissible: always,
        build: |_| fixed([1, 1, 1, 1, 1, 1]),
    },
    RankFamily {
        name: "V2_1",
        rank: 2,
        params: &["b1", "b5"],
        constraint: "(b1, b5) != (0, 0)",
        admissible: |p| !(p[0].is_zero() && p[1].is_zero()),
        build: |p| {
            let (b1, b5) = (&p[0], &p[1]);
            [b1.clone(), -b1, b1 + b5, -b5, b5.clone(), -b1 - b5]
        },
    },
    RankFamily {
        name: "V2_2",
        rank: 2,
        params: &["b1", "b2"],
        constraint: "b2 != b1 and b2 != -b1",
        admissible: |p| p[1] != p[0] && p[1] != -&p[0],
        build: |p| {
            let (b1, b2) = (&p[0], &p[1]);
            [b1.clone(), b2.clone(), b2.clone(), b2.clone(), b1.clone(), b1.clone()]
        },
    },
    RankFamily {
        name: "V3_1",
        rank: 3,
        params: &["t"],
        constraint: "t != 1",
        admissible: |p| p[0] != int(1),
        build: |p| {
            let t = &p[0];
            [int(1), t.clone(), int(0), int(-1), int(0), -t]
        },
    },
    RankFamily {
        name: "V3_2",
        rank: 3,
        params: &[],
        constraint: "",
        admissible: always,
        build: |_| fixed([1, -1, 0, -2, 2, 0]),
    },
    RankFamily {
        name: "V3_3",
        rank: 3,
        params: &["t"],
        constraint: "",
        admissible: always,
        build: |p| {
            let t = &p[0];
            [int(-2), int(0), -(int(2) + t), t - int(1), -(int(1) + t), t.clone()]
        },
    },
    RankFamily {
        name: "V4_1",
        rank: 4,
        params: &["t"],
        constraint: "t != 1",
        admissible: |p| p[0] != int(1),
        build: |p| {
            let t = &p[0];
            [int(2), int(1) + t, int(1), int(0), int(1), int(1) - t]
        },
    },
    RankFamily {
        name: "V4_2",
        rank: 4,
        params: &[],
        constraint: "",
        admissible: always,
        build: |_| fixed([2, 1, 0, 1, 1, 1]),
    },
    RankFamily {
        name: "V4_3",
        rank: 4,
        params: &[],
        constraint: "",
        admissible: always,
        build: |_| fixed([2, 0, 1, -1, 3, 1]),
    },
    RankFamily {
        name: "V4_4",
        rank: 4,
        params: &["alpha", "beta"],
        constraint: "alpha^2 != 1 + beta + beta^2",
        admissible: |p| {
            let (a, b) = (&p[0], &p[1]);
            a * a != int(1) + b + b * b
        },
        build: |p| {
            let (a, b) = (&p[0], &p[1]);
            [int(1), int(0), a.clone(), -a, b.clone(), int(-1) - b]
        },
    },
    RankFamily {
        name: "V5_1",
        rank: 5,
        params: &[],
        constraint: "",
        admissible: always,
        build: |_| fixed([2, -1, -1, -1, 1, 0]),
    },
    RankFamily {
        name: "V5_2",
        rank: 5,
        params: &[],
        constraint: "",
        admissible: always,
        build: |_| fixed([2, 1, 1, 1, 1, 0]),
    },
    RankFamily {
        name: "V6_1",
        rank: 6,
        params: &[],
        constraint: "",
        admissible: always,
        build: |_| fixed([1, 0, 0, 0, 0, 0]),
    },
];

pub fn rank_family(name: &str) -> Option<&'static RankFamily> {
    RANK_FAMILIES.iter().find(|f| f.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::ints;

    #[test]
    fn composition_examples() {
        assert_eq!(compose(Perm::ID, Perm::T12), Perm::T12);
        assert_eq!(compose(Perm::T12, Perm::T13), Perm::C2);
        assert_eq!(compose(Perm::T12, Perm::C), Perm::T23);
    }

    #[test]
    fn cycle_convention() {
        assert_eq!(Perm::C.apply(1), 2);
        assert_eq!(Perm::C.apply(2), 3);
        assert_eq!(Perm::C.apply(3), 1);
        assert_eq!(Perm::C.compose(Perm::C), Perm::C2);
        assert_eq!(Perm::C.inverse(), Perm::C2);
    }

    #[test]
    fn invalid_perm_rejected() {
        assert!(Perm::new([1, 1, 2]).is_err());
        assert!(Perm::new([0, 1, 2]).is_err());
        assert!(Perm::new([3, 1, 2]).is_ok());
    }

    #[test]
    fn translate_by_t12() {
        let v = GroupAlgebraElement::from_i64([1, 2, 3, 4, 5, 6]);
        assert_eq!(left_translate(Perm::T12, &v), GroupAlgebraElement::from_i64([2, 1, 6, 5, 4, 3]));
        assert_eq!(left_translate(Perm::ID, &v), v);
        let leib = GroupAlgebraElement::from_i64([1, 1, 1, -1, -1, 1]);
        assert_eq!(left_translate(Perm::T12, &leib), leib);
    }

    #[test]
    fn orbit_matrix_of_identity_is_permutation() {
        let e = orbit_matrix(&GroupAlgebraElement::basis(Perm::ID));
        for i in 0..6 {
            assert_eq!(e[(i, i)], int(1));
            let row_sum: Rational = e.row(i).iter().sum();
            let col_sum: Rational = e.column(i).iter().sum();
            assert_eq!(row_sum, int(1));
            assert_eq!(col_sum, int(1));
        }
    }

    #[test]
    fn orbit_of_sign_vector() {
        let v = GroupAlgebraElement::from_i64([1, -1, -1, -1, 1, 1]);
        let e = orbit_matrix(&v);
        for i in 0..6 {
            let r = e.row(i).to_vec();
            assert!(r == v.to_vec() || r == v.scale(&int(-1)).to_vec());
        }
        assert_eq!(e.rank(), 1);
    }

    #[test]
    fn module_rank_examples() {
        assert_eq!(module_rank(&GroupAlgebraElement::from_i64([1; 6])).unwrap(), 1);
        assert_eq!(module_rank(&GroupAlgebraElement::from_i64([1, 0, 0, 0, 0, 0])).unwrap(), 6);
        assert_eq!(module_rank(&GroupAlgebraElement::from_i64([2, -1, -1, -1, 1, 0])).unwrap(), 5);
        assert_eq!(module_rank(&GroupAlgebraElement::zero()), Err(Error::ZeroVector));
    }

    #[test]
    fn combination_matrix_defining_property() {
        let v = GroupAlgebraElement::from_i64([3, -1, 4, 1, -5, 9]);
        let u = ints(&[2, 7, 1, -8, 2, 8]);
        let mut direct = GroupAlgebraElement::zero();
        for (k, &s) in BASIS.iter().enumerate() {
            direct = direct.add(&left_translate(s, &v).scale(&u[k]));
        }
        assert_eq!(combination_matrix(&v).mul_vec(&u), direct.to_vec());
    }

    #[test]
    fn monomial_order() {
        let names: Vec<String> = MonomialIndex::all().iter().map(|m| m.to_string()).collect();
        assert_eq!(
            names,
            [
                "(x1x2)x3", "(x2x1)x3", "(x3x2)x1", "(x1x3)x2", "(x2x3)x1", "(x3x1)x2", "x1(x2x3)", "x2(x1x3)",
                "x3(x2x1)", "x1(x3x2)", "x2(x3x1)", "x3(x1x2)"
            ]
        );
    }

    #[test]
    fn family_constraints() {
        let f = rank_family("V3_1").unwrap();
        assert!(f.instance(&[int(1)]).is_err());
        assert!(f.instance(&[int(2)]).is_ok());
        assert!(rank_family("V4_4").unwrap().instance(&[int(1), int(0)]).is_err());
    }
}
