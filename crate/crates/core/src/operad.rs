//! Arity-3 components of binary quadratic operads and free algebras on one generator.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::identity::Identity;
use crate::linalg::{int, ints, is_zero_vec, span_basis, Matrix, Rational};
use crate::sigma3::{MonomialIndex, Side, BASIS};

/// A Σ₃-invariant subspace of the 12 degree-3 monomials, stored as a reduced echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationSpace {
    basis: Vec<Vec<Rational>>,
}

impl RelationSpace {
    pub fn from_vectors(vectors: &[Vec<Rational>]) -> Self {
        let nonzero: Vec<Vec<Rational>> = vectors.iter().filter(|v| !is_zero_vec(v)).cloned().collect();
        RelationSpace { basis: span_basis(&nonzero, 12) }
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn matrix(&self) -> Matrix {
        if self.basis.is_empty() {
            Matrix::zeros(0, 12)
        } else {
            Matrix::from_rows(self.basis.clone())
        }
    }

    pub fn identities(&self) -> Vec<Identity> {
        self.basis.iter().map(|v| Identity::from_vector(v).expect("length 12")).collect()
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        crate::linalg::in_span(&self.basis, v)
    }
}

impl fmt::Display for RelationSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.basis.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{}", crate::linalg::fmt_vec(v))?;
        }
        Ok(())
    }
}

pub fn orbit_span(ids: &[Identity]) -> RelationSpace {
    let vectors: Vec<Vec<Rational>> =
        ids.iter().flat_map(|id| BASIS.iter().map(move |&s| id.translate(s).to_vector())).collect();
    RelationSpace::from_vectors(&vectors)
}

pub fn dim_arity3(ids: &[Identity]) -> usize {
    12 - orbit_span(ids).dim()
}

/// Diagonal form: ε(σ) on L(σ), −ε(σ) on R(σ).
pub fn pairing_diagonal() -> [Rational; 12] {
    MonomialIndex::all().map(|m| {
        let e = m.sigma.sign();
        int(match m.side {
            Side::Left => e,
            Side::Right => -e,
        })
    })
}

pub fn pairing_matrix() -> Matrix {
    let d = pairing_diagonal();
    let mut m = Matrix::zeros(12, 12);
    for (i, x) in d.into_iter().enumerate() {
        m[(i, i)] = x;
    }
    m
}

pub fn pairing(u: &[Rational], v: &[Rational]) -> Rational {
    let d = pairing_diagonal();
    u.iter().zip(v).zip(&d).fold(Rational::zero(), |acc, ((a, b), e)| acc + a * b * e)
}

/// The annihilator of r under the pairing.
pub fn dual_relations(r: &RelationSpace) -> RelationSpace {
    if r.dim() == 0 {
        return RelationSpace::from_vectors(&Matrix::identity(12).row_vecs());
    }
    let k = r.matrix().mul(&pairing_matrix()).kernel();
    RelationSpace::from_vectors(&k)
}

pub fn is_self_dual(r: &RelationSpace) -> bool {
    dual_relations(r) == *r
}

const TP_ROWS: [[i64; 12]; 6] = [
    [2, -2, 1, -1, 1, -1, -1, 1, -2, -1, 1, 2],
    [1, 1, 2, -1, -2, -1, -2, 1, -1, 2, 1, -1],
    [-1, -1, 1, 2, 1, -2, -1, 2, 1, -1, -2, 1],
    [1, -1, -1, -1, 1, 1, -1, 1, 1, 1, -1, -1],
    [1, 1, -1, 0, -1, 0, -1, 0, 1, -1, 0, 1],
    [1, 1, 0, -1, 0, -1, 0, -1, 1, 0, -1, 1],
];

const DTP_ROWS: [[i64; 12]; 6] = [
    [2, 2, -1, 1, 1, -1, 1, 1, -2, -1, -1, -2],
    [1, -1, -2, 1, -2, -1, 2, 1, -1, 2, -1, 1],
    [-1, 1, -1, -2, 1, -2, 1, 2, 1, -1, 2, -1],
    [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
    [1, -1, 1, 0, -1, 0, 1, 0, 1, -1, 0, -1],
    [1, -1, 0, 1, 0, -1, 0, -1, 1, 0, 1, -1],
];

/// Generators of the transposed Poisson relation space.
pub fn tp_matrix() -> Matrix {
    Matrix::from_rows(TP_ROWS.iter().map(|r| ints(r)).collect())
}

/// The same relations after applying the pairing.
pub fn dtp_matrix() -> Matrix {
    Matrix::from_rows(DTP_ROWS.iter().map(|r| ints(r)).collect())
}

/// A monomial in the free magma on one generator.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tree {
    X,
    Node(Arc<Tree>, Arc<Tree>),
}

impl Tree {
    pub fn node(l: &Tree, r: &Tree) -> Tree {
        Tree::Node(Arc::new(l.clone()), Arc::new(r.clone()))
    }

    pub fn degree(&self) -> usize {
        match self {
            Tree::X => 1,
            Tree::Node(l, r) => l.degree() + r.degree(),
        }
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tree::X => f.write_str("X"),
            Tree::Node(l, r) => {
                let wrap = |t: &Tree| match t {
                    Tree::X => t.to_string(),
                    _ => format!("({t})"),
                };
                write!(f, "{}{}", wrap(l), wrap(r))
            }
        }
    }
}

/// All full binary trees with n leaves, in a fixed order.
pub fn trees(n: usize) -> Vec<Tree> {
    let mut memo: Vec<Vec<Tree>> = vec![Vec::new(), vec![Tree::X]];
    for m in 2..=n {
        let mut out = Vec::new();
        for k in 1..m {
            for l in &memo[k] {
                for r in &memo[m - k] {
                    out.push(Tree::node(l, r));
                }
            }
        }
        memo.push(out);
    }
    if n == 0 {
        Vec::new()
    } else {
        memo.swap_remove(n)
    }
}

pub fn catalan(n: usize) -> usize {
    let mut c = 1usize;
    for i in 0..n {
        c = c * 2 * (2 * i + 1) / (i + 2);
    }
    c
}

pub const MAX_FREE_DEGREE: usize = 5;

type Relation = BTreeMap<Tree, Rational>;

fn substitute(id: &Identity, t: [&Tree; 3]) -> Relation {
    let mut rel = Relation::new();
    for m in MonomialIndex::all() {
        let c = &id.to_vector()[m.index()];
        if c.is_zero() {
            continue;
        }
        let [a, b, d] = m.variables().map(|i| t[(i - 1) as usize]);
        let mono = match m.side {
            Side::Left => Tree::node(&Tree::node(a, b), d),
            Side::Right => Tree::node(a, &Tree::node(b, d)),
        };
        *rel.entry(mono).or_insert_with(Rational::zero) += c;
    }
    rel.retain(|_, c| !c.is_zero());
    rel
}

/// Dimensions of the homogeneous components of the free algebra on one generator,
/// degrees 0..=max_degree.
pub fn free_dims(ids: &[Identity], max_degree: usize) -> Result<Vec<usize>> {
    if max_degree > MAX_FREE_DEGREE {
        return Err(Error::DegreeBound(max_degree));
    }
    let shapes: Vec<Vec<Tree>> = (0..=max_degree).map(trees).collect();
    // Reduced relation bases per degree, as maps over trees.
    let mut bases: Vec<Vec<Relation>> = vec![Vec::new(); max_degree + 1];
    let mut dims = vec![1];
    for n in 1..=max_degree {
        let mut rels: Vec<Relation> = Vec::new();
        for a in 1..n {
            for b in 1..n - a {
                let c = n - a - b;
                for t1 in &shapes[a] {
                    for t2 in &shapes[b] {
                        for t3 in &shapes[c] {
                            rels.extend(ids.iter().map(|id| substitute(id, [t1, t2, t3])));
                        }
                    }
                }
            }
        }
        for k in 3..n {
            for r in &bases[k] {
                for s in &shapes[n - k] {
                    rels.push(r.iter().map(|(t, c)| (Tree::node(t, s), c.clone())).collect());
                    rels.push(r.iter().map(|(t, c)| (Tree::node(s, t), c.clone())).collect());
                }
            }
        }
        let index: HashMap<&Tree, usize> = shapes[n].iter().enumerate().map(|(i, t)| (t, i)).collect();
        let rows: Vec<Vec<Rational>> = rels
            .iter()
            .filter(|r| !r.is_empty())
            .map(|r| {
                let mut row = vec![Rational::zero(); shapes[n].len()];
                for (t, c) in r {
                    row[index[t]] += c;
                }
                row
            })
            .collect();
        let basis = span_basis(&rows, shapes[n].len());
        dims.push(shapes[n].len() - basis.len());
        bases[n] = basis
            .into_iter()
            .map(|row| {
                shapes[n].iter().zip(row).filter(|(_, c)| !c.is_zero()).map(|(t, c)| (t.clone(), c)).collect()
            })
            .collect();
    }
    Ok(dims)
}
