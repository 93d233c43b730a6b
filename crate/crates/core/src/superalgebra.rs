//! Z₂-graded identities with structural sign exponents, parametric polynomials
//! and the two-dimensional superPoisson conditions.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::algebra::{first_failure, Scalar, StructureAlgebra, Verdict};
use crate::depolarization::{associativity, flexibility, jacass_family, jacobi, leibniz, poisson, transposed_leibniz};
use crate::error::{Error, Result};
use crate::identity::Identity;
use crate::linalg::{int, Rational};
use crate::sigma3::MonomialIndex;

/// A subset of the variable pairs {xy, xz, yz}, stored as bits 1, 2, 4.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct PairSet(u8);

impl PairSet {
    pub const EMPTY: PairSet = PairSet(0);
    pub const XY: PairSet = PairSet(1);
    pub const XZ: PairSet = PairSet(2);
    pub const YZ: PairSet = PairSet(4);
    pub const ALL: PairSet = PairSet(7);

    pub fn union(self, other: PairSet) -> PairSet {
        PairSet(self.0 | other.0)
    }

    pub fn contains(self, other: PairSet) -> bool {
        self.0 & other.0 == other.0
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    /// The pair of variables i < j (1-based).
    pub fn pair(i: u8, j: u8) -> PairSet {
        match (i.min(j), i.max(j)) {
            (1, 2) => PairSet::XY,
            (1, 3) => PairSet::XZ,
            (2, 3) => PairSet::YZ,
            _ => PairSet::EMPTY,
        }
    }

    /// (−1)^(Σ over chosen pairs of |xᵢ||xⱼ|).
    pub fn sign(self, degrees: [u8; 3]) -> i64 {
        let [x, y, z] = degrees.map(u32::from);
        let mut e = 0;
        if self.contains(PairSet::XY) {
            e += x * y;
        }
        if self.contains(PairSet::XZ) {
            e += x * z;
        }
        if self.contains(PairSet::YZ) {
            e += y * z;
        }
        if e % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn parse(s: &str) -> Option<PairSet> {
        let inner = s.trim().strip_prefix('{')?.strip_suffix('}')?;
        let mut set = PairSet::EMPTY;
        for part in inner.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let p = match part {
                "xy" => PairSet::XY,
                "xz" => PairSet::XZ,
                "yz" => PairSet::YZ,
                _ => return None,
            };
            set = set.union(p);
        }
        Some(set)
    }
}

impl fmt::Display for PairSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = [(PairSet::XY, "xy"), (PairSet::XZ, "xz"), (PairSet::YZ, "yz")]
            .iter()
            .filter(|(p, _)| self.contains(*p))
            .map(|(_, n)| *n)
            .collect();
        write!(f, "{{{}}}", names.join(","))
    }
}

/// Pairs of variables appearing out of order in a monomial.
pub fn koszul_pairs(m: MonomialIndex) -> PairSet {
    let v = m.variables();
    let mut s = PairSet::EMPTY;
    for p in 0..3 {
        for q in p + 1..3 {
            if v[p] > v[q] {
                s = s.union(PairSet::pair(v[p], v[q]));
            }
        }
    }
    s
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedTerm {
    pub monomial: MonomialIndex,
    pub coeff: Rational,
    pub signs: PairSet,
}

/// Twelve signed terms in monomial order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedIdentity {
    terms: Vec<SignedTerm>,
}

impl SignedIdentity {
    pub fn new(coeffs: &[Rational], signs: &[PairSet]) -> Result<Self> {
        if coeffs.len() != 12 || signs.len() != 12 {
            return Err(Error::Dimension { expected: 12, found: coeffs.len().min(signs.len()) });
        }
        let terms = MonomialIndex::all()
            .iter()
            .map(|&m| SignedTerm { monomial: m, coeff: coeffs[m.index()].clone(), signs: signs[m.index()] })
            .collect();
        Ok(SignedIdentity { terms })
    }

    /// Signs given by the Koszul rule: each transposition of odd variables costs a sign.
    pub fn koszul(id: &Identity) -> Self {
        let c = id.to_vector();
        let signs: Vec<PairSet> = MonomialIndex::all().iter().map(|&m| koszul_pairs(m)).collect();
        SignedIdentity::new(&c, &signs).expect("12 terms")
    }

    pub fn terms(&self) -> &[SignedTerm] {
        &self.terms
    }

    /// The plain coefficient vector realized on inputs of the given degrees.
    pub fn specialize(&self, degrees: [u8; 3]) -> Identity {
        let v: Vec<Rational> = self.terms.iter().map(|t| &t.coeff * int(t.signs.sign(degrees))).collect();
        Identity::from_vector(&v).expect("12 terms")
    }

    pub fn at_even(&self) -> Identity {
        self.specialize([0, 0, 0])
    }

    /// Terms whose sign set differs from the Koszul rule.
    pub fn koszul_mismatches(&self) -> Vec<MonomialIndex> {
        self.terms
            .iter()
            .filter(|t| !t.coeff.is_zero() && t.signs != koszul_pairs(t.monomial))
            .map(|t| t.monomial)
            .collect()
    }
}

impl fmt::Display for SignedIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "term {} coeff {} signs {}", t.monomial.index() + 1, t.coeff, t.signs)?;
        }
        Ok(())
    }
}

pub fn super_poisson() -> SignedIdentity {
    SignedIdentity::koszul(&poisson())
}

pub fn super_jacobi() -> SignedIdentity {
    SignedIdentity::koszul(&jacobi())
}

pub fn super_associativity() -> SignedIdentity {
    SignedIdentity::koszul(&associativity())
}

pub fn super_leibniz() -> SignedIdentity {
    SignedIdentity::koszul(&leibniz())
}

pub fn super_transposed_leibniz() -> SignedIdentity {
    SignedIdentity::koszul(&transposed_leibniz())
}

pub fn super_flexibility() -> SignedIdentity {
    SignedIdentity::koszul(&flexibility())
}

/// The two signed axioms as printed for transposed Poisson superalgebras, sign sets
/// transcribed term by term.
pub fn printed_transposed_super_axioms(a1: &Rational, a2: &Rational, a3: &Rational) -> [SignedIdentity; 2] {
    use PairSet as P;
    let first = jacass_family(a1, a2, a3).to_vector();
    let first_signs = [
        P::EMPTY,
        P::XY,
        P::XZ.union(P::YZ),
        P::YZ,
        P::XY.union(P::XZ),
        P::YZ.union(P::XZ),
        P::EMPTY,
        P::EMPTY,
        P::EMPTY,
        P::EMPTY,
        P::EMPTY,
        P::EMPTY,
    ];
    let second = transposed_leibniz().to_vector();
    let second_signs = [
        P::EMPTY,
        P::XY,
        P::XZ.union(P::YZ),
        P::YZ,
        P::XY.union(P::XZ),
        P::YZ.union(P::XZ),
        P::EMPTY,
        P::XY,
        P::XZ.union(P::YZ),
        P::EMPTY,
        P::EMPTY,
        P::EMPTY,
    ];
    [
        SignedIdentity::new(&first, &first_signs).expect("12 terms"),
        SignedIdentity::new(&second, &second_signs).expect("12 terms"),
    ]
}

/// Evaluate a signed identity on every homogeneous basis triple.
pub fn check_signed<R: Scalar>(alg: &StructureAlgebra<R>, sid: &SignedIdentity) -> Result<Verdict<R>> {
    let g = alg.grading().ok_or(Error::Ungraded)?;
    alg.check_grading()?;
    let specialized: Vec<Vec<R>> = (0..8u8)
        .map(|bits| {
            let d = [(bits >> 2) & 1, (bits >> 1) & 1, bits & 1];
            sid.specialize(d).to_vector().iter().map(R::from_rational).collect()
        })
        .collect();
    Ok(first_failure(alg.dim(), |t| {
        let bits = (g[t[0]] << 2) | (g[t[1]] << 1) | g[t[2]];
        alg.evaluate(&specialized[bits as usize], t)
    }))
}

/// A(x,y,z) + (−1)^{|x||z|+|x||y|+|y||z|} A(z,y,x) = 0 on homogeneous triples.
pub fn superflexibility_check<R: Scalar>(alg: &StructureAlgebra<R>) -> Result<Verdict<R>> {
    check_signed(alg, &super_flexibility())
}

pub const PARAM_NAMES: [&str; 4] = ["a", "b", "c", "d"];

/// Polynomial in the parameters a, b, c, d with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ParamPoly(BTreeMap<[u32; 4], Rational>);

impl ParamPoly {
    pub fn constant(c: Rational) -> Self {
        let mut m = BTreeMap::new();
        if !c.is_zero() {
            m.insert([0; 4], c);
        }
        ParamPoly(m)
    }

    /// The parameter with index i (0 = a, …, 3 = d).
    pub fn var(i: usize) -> Self {
        let mut e = [0; 4];
        e[i] = 1;
        ParamPoly(BTreeMap::from([(e, Rational::one())]))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32; 4], &Rational)> {
        self.0.iter()
    }

    pub fn eval(&self, values: &[Rational; 4]) -> Rational {
        let mut total = Rational::zero();
        for (e, c) in &self.0 {
            let mut t = c.clone();
            for (v, &k) in values.iter().zip(e) {
                for _ in 0..k {
                    t *= v;
                }
            }
            total += t;
        }
        total
    }

    /// Substitute a polynomial for each parameter.
    pub fn compose(&self, subs: &[ParamPoly; 4]) -> ParamPoly {
        let mut out = ParamPoly::zero();
        for (e, c) in &self.0 {
            let mut t = ParamPoly::constant(c.clone());
            for (s, &k) in subs.iter().zip(e) {
                for _ in 0..k {
                    t = t * s.clone();
                }
            }
            out = out + t;
        }
        out
    }

    /// Scaled so that the leading coefficient (largest exponent vector) is 1.
    pub fn monic(&self) -> ParamPoly {
        match self.0.values().next_back() {
            None => self.clone(),
            Some(lead) => {
                let inv = lead.recip();
                ParamPoly(self.0.iter().map(|(e, c)| (*e, c * &inv)).collect())
            }
        }
    }

    pub fn same_up_to_scalar(&self, other: &ParamPoly) -> bool {
        self.monic() == other.monic()
    }
}

impl Zero for ParamPoly {
    fn zero() -> Self {
        ParamPoly(BTreeMap::new())
    }
    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
}

impl Add for ParamPoly {
    type Output = ParamPoly;
    fn add(self, other: ParamPoly) -> ParamPoly {
        let mut m = self.0;
        for (e, c) in other.0 {
            let v = m.remove(&e).unwrap_or_else(Rational::zero) + c;
            if !v.is_zero() {
                m.insert(e, v);
            }
        }
        ParamPoly(m)
    }
}

impl Neg for ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        ParamPoly(self.0.into_iter().map(|(e, c)| (e, -c)).collect())
    }
}

impl Sub for ParamPoly {
    type Output = ParamPoly;
    fn sub(self, other: ParamPoly) -> ParamPoly {
        self + (-other)
    }
}

impl Mul for ParamPoly {
    type Output = ParamPoly;
    fn mul(self, other: ParamPoly) -> ParamPoly {
        let mut out = ParamPoly::zero();
        for (e1, c1) in &self.0 {
            for (e2, c2) in &other.0 {
                let e = std::array::from_fn(|i| e1[i] + e2[i]);
                out = out + ParamPoly(BTreeMap::from([(e, c1 * c2)]));
            }
        }
        out
    }
}

impl Scalar for ParamPoly {
    fn from_rational(r: &Rational) -> Self {
        ParamPoly::constant(r.clone())
    }
}

impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        for (n, (e, c)) in self.0.iter().rev().enumerate() {
            let mut vars = Vec::new();
            for (i, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => vars.push(PARAM_NAMES[i].to_string()),
                    _ => vars.push(format!("{}^{}", PARAM_NAMES[i], k)),
                }
            }
            let neg = c < &Rational::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            let sign = match (n, neg) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            };
            let body = if vars.is_empty() {
                mag.to_string()
            } else if mag.is_one() {
                vars.join("*")
            } else {
                format!("{}*{}", mag, vars.join("*"))
            };
            write!(f, "{sign}{body}")?;
        }
        Ok(())
    }
}

/// e0e0 = a e0, e0e1 = b e1, e1e0 = c e1, e1e1 = d e0 with e0 even and e1 odd.
pub fn generic_dim2() -> StructureAlgebra<ParamPoly> {
    let [a, b, c, d] = [0, 1, 2, 3].map(ParamPoly::var);
    let z = ParamPoly::zero;
    let mut alg = StructureAlgebra::<ParamPoly>::graded(vec![0, 1]).expect("valid degrees");
    alg.set(0, 0, vec![a, z()]).expect("in range");
    alg.set(0, 1, vec![z(), b]).expect("in range");
    alg.set(1, 0, vec![z(), c]).expect("in range");
    alg.set(1, 1, vec![d, z()]).expect("in range");
    alg
}

/// Distinct (up to scalar) nonzero polynomial conditions for the generic
/// two-dimensional product to satisfy the superPoisson identity.
pub fn classify_dim2_conditions() -> Vec<ParamPoly> {
    let alg = generic_dim2();
    let sp = super_poisson();
    let g = [0u8, 1];
    let mut out: Vec<ParamPoly> = Vec::new();
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                let coeffs: Vec<ParamPoly> =
                    sp.specialize([g[i], g[j], g[k]]).to_vector().iter().map(ParamPoly::from_rational).collect();
                for p in alg.evaluate(&coeffs, [i, j, k]) {
                    if p.is_zero() {
                        continue;
                    }
                    let m = p.monic();
                    if !out.contains(&m) {
                        out.push(m);
                    }
                }
            }
        }
    }
    out
}

/// Grading-consistent members of the two-dimensional Poisson superalgebra list.
pub fn sp2_family(index: usize, params: &[Rational]) -> Result<StructureAlgebra> {
    let need = match index {
        1..=3 => 1,
        4 => 2,
        _ => return Err(Error::InvalidArgument(format!("no family SP2,{index}"))),
    };
    if params.len() != need {
        return Err(Error::Dimension { expected: need, found: params.len() });
    }
    let z = Rational::zero;
    let mut alg = StructureAlgebra::<Rational>::graded(vec![0, 1])?;
    match index {
        1 => alg.set(0, 0, vec![params[0].clone(), z()])?,
        2 => {
            let a = &params[0];
            alg.set(0, 0, vec![a.clone(), z()])?;
            alg.set(0, 1, vec![z(), a.clone()])?;
            alg.set(1, 0, vec![z(), a.clone()])?;
        }
        _ => {
            let b = &params[0];
            alg.set(0, 1, vec![z(), b.clone()])?;
            alg.set(1, 0, vec![z(), -b])?;
            if index == 4 {
                alg.set(1, 1, vec![params[1].clone(), z()])?;
            }
        }
    }
    Ok(alg)
}
