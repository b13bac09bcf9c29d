//! Derivations of the free Lie ring in tensor coordinates, their brackets,
//! and graded ranks of Lie rings presented by degree-2 relations.
//!
//! A degree-k derivation is determined by its values on the generators,
//! which are degree-(k+1) Lie elements written as tensors; it extends to all
//! tensors by the Leibniz rule. Derivations form a graded Lie ring under the
//! operator bracket, and this is the structure that carries Johnson images.
//!
//! Ranks are computed in flat tensor coordinates. For an ideal generated in
//! degree 2, the degree-k piece is spanned by brackets of the degree-(k−1)
//! piece with the degree-1 generators: the Jacobi identity rewrites
//! `[r,[a,b]]` as `[[r,a],b] − [[r,b],a]`, so left-bracketing with
//! generators already reaches everything (cross-checked in the tests).
//! Degree-k relation lattices are carried through echelon forms that only
//! add integer multiples of rows, so reported elementary divisors are those
//! of the original lattice; all divisors equal to 1 certifies that the
//! graded quotient is free abelian.

use crate::hall::{bc_to_tensor, hall_basis, witt_rank};
use crate::series::{Monomial, SeriesError, Tensor, MAX_DEGREE, MAX_RANK};
use crate::zlin::{SparseMat, SparseRow};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum LieError {
    RankMismatch,
    DegreeMismatch,
    /// A presentation relation is not homogeneous antisymmetric of degree 2.
    InhomogeneousRelation,
    TooLarge { rank: usize, degree: usize },
    CoefficientOverflow,
    Series(SeriesError),
}

impl fmt::Display for LieError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LieError::RankMismatch => write!(f, "derivations have different ranks"),
            LieError::DegreeMismatch => write!(f, "unexpected degree"),
            LieError::InhomogeneousRelation => {
                write!(f, "relation is not an antisymmetric element of degree 2")
            }
            LieError::TooLarge { rank, degree } => {
                write!(f, "rank {rank} / degree {degree} beyond supported size")
            }
            LieError::CoefficientOverflow => write!(f, "coefficient does not fit in i128"),
            LieError::Series(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for LieError {}

impl From<SeriesError> for LieError {
    fn from(e: SeriesError) -> Self {
        LieError::Series(e)
    }
}

/// An element of Hom(V, L(k+1)) in tensor coordinates: one degree-(k+1)
/// value tensor per generator. Value tensors are expected to be Lie
/// elements; see [`is_lie_element`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Derivation {
    rank: usize,
    degree: usize,
    values: Vec<Tensor>,
}

impl Derivation {
    pub fn new(rank: usize, values: Vec<Tensor>) -> Result<Derivation, LieError> {
        if values.len() != rank {
            return Err(LieError::RankMismatch);
        }
        let degree_plus_one = values.first().map(|t| t.degree()).unwrap_or(0);
        if degree_plus_one < 2 {
            return Err(LieError::DegreeMismatch);
        }
        for v in &values {
            if v.rank() != rank || v.degree() != degree_plus_one {
                return Err(LieError::DegreeMismatch);
            }
        }
        Ok(Derivation {
            rank,
            degree: degree_plus_one - 1,
            values,
        })
    }

    pub fn zero(rank: usize, degree: usize) -> Derivation {
        Derivation {
            rank,
            degree,
            values: (0..rank).map(|_| Tensor::zero(rank, degree + 1)).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Value on `x_i` (1-based).
    pub fn value(&self, i: usize) -> &Tensor {
        &self.values[i - 1]
    }

    pub fn values(&self) -> &[Tensor] {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|t| t.is_zero())
    }

    pub fn add(&self, other: &Derivation) -> Result<Derivation, LieError> {
        if self.rank != other.rank || self.degree != other.degree {
            return Err(LieError::DegreeMismatch);
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a.add(b))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Derivation {
            rank: self.rank,
            degree: self.degree,
            values,
        })
    }

    /// Flat coordinates: generator blocks of length `rank^(degree+1)`, in
    /// generator order, monomials in lexicographic order inside a block.
    pub fn flat_entries(&self) -> Vec<(usize, i128)> {
        let block = self.rank.pow(self.degree as u32 + 1);
        let mut out = Vec::new();
        for (i, t) in self.values.iter().enumerate() {
            for (c, v) in t.flat_entries() {
                out.push((i * block + c, v));
            }
        }
        out
    }
}

/// Extends `d` to an arbitrary homogeneous tensor by the Leibniz rule:
/// every letter position is replaced by the derivation value in turn and
/// the results are summed. Constants map to zero.
pub fn leibniz_extend(d: &Derivation, t: &Tensor) -> Result<Tensor, LieError> {
    if d.rank() != t.rank() {
        return Err(LieError::RankMismatch);
    }
    let out_degree = t.degree() + d.degree();
    if out_degree + 1 > MAX_DEGREE {
        return Err(LieError::TooLarge {
            rank: t.rank(),
            degree: out_degree,
        });
    }
    let mut out = Tensor::zero(t.rank(), out_degree);
    for (m, c) in t.iter() {
        let letters = m.letters();
        for pos in 0..letters.len() {
            let value = d.value(letters[pos]);
            if value.is_zero() {
                continue;
            }
            for (mv, cv) in value.iter() {
                let mut new_letters = Vec::with_capacity(out_degree);
                new_letters.extend_from_slice(&letters[..pos]);
                new_letters.extend(mv.letters());
                new_letters.extend_from_slice(&letters[pos + 1..]);
                out.add_term(Monomial::from_letters(&new_letters)?, c * cv);
            }
        }
    }
    Ok(out)
}

/// Operator bracket `[d, e]`: the value on `x_i` is
/// `d(e(x_i)) − e(d(x_i))`. Degrees add; the bracket is antisymmetric and
/// satisfies the Jacobi identity.
pub fn der_bracket(d: &Derivation, e: &Derivation) -> Result<Derivation, LieError> {
    if d.rank() != e.rank() {
        return Err(LieError::RankMismatch);
    }
    let values = (1..=d.rank())
        .map(|i| leibniz_extend(d, e.value(i))?.sub(&leibniz_extend(e, d.value(i))?).map_err(LieError::from))
        .collect::<Result<Vec<_>, _>>()?;
    Derivation::new(d.rank(), values)
}

fn monomial_from_flat(mut idx: usize, rank: usize, degree: usize) -> Monomial {
    let mut letters = vec![0usize; degree];
    for t in (0..degree).rev() {
        letters[t] = idx % rank + 1;
        idx /= rank;
    }
    Monomial::from_letters(&letters).expect("within packed limits")
}

fn row_to_i128(row: &SparseRow) -> Result<Vec<(usize, i128)>, LieError> {
    row.iter()
        .map(|(c, v)| v.to_i128().map(|x| (*c, x)).ok_or(LieError::CoefficientOverflow))
        .collect()
}

fn derivation_from_row(row: &SparseRow, rank: usize, degree: usize) -> Result<Derivation, LieError> {
    let block = rank.pow(degree as u32 + 1);
    let mut values: Vec<Tensor> = (0..rank).map(|_| Tensor::zero(rank, degree + 1)).collect();
    for (col, v) in row_to_i128(row)? {
        let m = monomial_from_flat(col % block, rank, degree + 1);
        values[col / block].add_term(m, v);
    }
    Ok(Derivation {
        rank,
        degree,
        values,
    })
}

fn tensor_from_row(row: &SparseRow, rank: usize, degree: usize) -> Result<Tensor, LieError> {
    let mut t = Tensor::zero(rank, degree);
    for (col, v) in row_to_i128(row)? {
        t.add_term(monomial_from_flat(col, rank, degree), v);
    }
    Ok(t)
}

/// For each `k ≤ k_max`, the rank of the span of all weight-k iterated
/// brackets of the given degree-1 derivations. Weight-k brackets are
/// generated left-normed; an integer row basis is carried between weights,
/// which spans the same lattice as the full bracket set.
pub fn graded_subalgebra_ranks(
    gens: &[Derivation],
    k_max: usize,
) -> Result<Vec<usize>, LieError> {
    assert!(k_max >= 1);
    if gens.is_empty() {
        return Ok(vec![0; k_max]);
    }
    let rank = gens[0].rank();
    for g in gens {
        if g.rank() != rank {
            return Err(LieError::RankMismatch);
        }
        if g.degree() != 1 {
            return Err(LieError::DegreeMismatch);
        }
    }
    let mut ranks = Vec::with_capacity(k_max);
    let mut level: Vec<Derivation> = gens.to_vec();
    for k in 1..=k_max {
        if k > 1 {
            let mut next = Vec::new();
            for d in &level {
                for g in gens {
                    let b = der_bracket(d, g)?;
                    if !b.is_zero() {
                        next.push(b);
                    }
                }
            }
            level = next;
        }
        let cols = rank * rank.pow(k as u32 + 1);
        let mut mat = SparseMat::new(cols);
        for d in &level {
            mat.push_row_i128(&d.flat_entries());
        }
        let basis = mat.echelon_basis();
        ranks.push(basis.len());
        level = basis
            .iter()
            .map(|r| derivation_from_row(r, rank, k))
            .collect::<Result<Vec<_>, _>>()?;
    }
    Ok(ranks)
}

/// A Lie ring presented by degree-2 relations among `num_generators`
/// degree-1 symbols. Relations are antisymmetric degree-2 tensors over the
/// symbols.
#[derive(Clone, Debug)]
pub struct LiePresentation {
    num_generators: usize,
    relations: Vec<Tensor>,
}

impl LiePresentation {
    pub fn new(num_generators: usize, relations: Vec<Tensor>) -> Result<LiePresentation, LieError> {
        if num_generators == 0 || num_generators > MAX_RANK {
            return Err(LieError::TooLarge {
                rank: num_generators,
                degree: 0,
            });
        }
        for r in &relations {
            if r.rank() != num_generators || r.degree() != 2 {
                return Err(LieError::InhomogeneousRelation);
            }
            for (m, c) in r.iter() {
                let (a, b) = (m.letter(0), m.letter(1));
                if a == b && c != 0 {
                    return Err(LieError::InhomogeneousRelation);
                }
                let flipped = Monomial::from_letters(&[b, a])?;
                if r.coeff(flipped) != -c {
                    return Err(LieError::InhomogeneousRelation);
                }
            }
        }
        Ok(LiePresentation {
            num_generators,
            relations,
        })
    }

    pub fn num_generators(&self) -> usize {
        self.num_generators
    }

    pub fn relations(&self) -> &[Tensor] {
        &self.relations
    }

    fn symbol_bracket(m: usize, a: usize, b: usize) -> Tensor {
        Tensor::bracket(&Tensor::generator(m, a), &Tensor::generator(m, b)).expect("same rank")
    }

    /// The partial inner automorphism family: one symbol per `ν(p,i)` with
    /// `2 ≤ p ≤ n`, `1 ≤ i ≤ p`; brackets `[y(p,i), y(q,j)]` vanish for
    /// `j = i` or `i > q`, and equal `[y(p,i), y(p,j)]` otherwise
    /// (`2 ≤ q < p`).
    pub fn partial_inner(n: usize) -> Result<LiePresentation, LieError> {
        assert!(n >= 2);
        let mut index = std::collections::HashMap::new();
        let mut count = 0usize;
        for p in 2..=n {
            for i in 1..=p {
                count += 1;
                index.insert((p, i), count);
            }
        }
        let m = count;
        if m > MAX_RANK {
            return Err(LieError::TooLarge { rank: m, degree: 0 });
        }
        let mut relations = Vec::new();
        for p in 2..=n {
            for q in 2..p {
                for i in 1..=p {
                    for j in 1..=q {
                        let lhs = Self::symbol_bracket(m, index[&(p, i)], index[&(q, j)]);
                        let rel = if j == i || i > q {
                            lhs
                        } else {
                            lhs.sub(&Self::symbol_bracket(m, index[&(p, i)], index[&(p, j)]))?
                        };
                        relations.push(rel);
                    }
                }
            }
        }
        LiePresentation::new(m, relations)
    }

    /// The upper-triangular McCool family: one symbol per `x(p,i)` with
    /// `1 ≤ i ≤ p ≤ n−1`; `[e(p,i), e(p,j) + e(q,j)]` vanishes when
    /// `i = q+1` (the acting factor whose row conjugates `x(p,i)`), and
    /// `[e(p,i), e(q,j)]` vanishes otherwise (`1 ≤ q < p`).
    pub fn upper_mccool(n: usize) -> Result<LiePresentation, LieError> {
        assert!(n >= 2);
        let mut index = std::collections::HashMap::new();
        let mut count = 0usize;
        for p in 1..=n - 1 {
            for i in 1..=p {
                count += 1;
                index.insert((p, i), count);
            }
        }
        let m = count;
        if m > MAX_RANK {
            return Err(LieError::TooLarge { rank: m, degree: 0 });
        }
        let mut relations = Vec::new();
        for p in 2..=n - 1 {
            for q in 1..p {
                for i in 1..=p {
                    for j in 1..=q {
                        let cross = Self::symbol_bracket(m, index[&(p, i)], index[&(q, j)]);
                        let rel = if i == q + 1 {
                            cross.add(&Self::symbol_bracket(m, index[&(p, i)], index[&(p, j)]))?
                        } else {
                            cross
                        };
                        relations.push(rel);
                    }
                }
            }
        }
        LiePresentation::new(m, relations)
    }
}

/// Rank and elementary divisors of one graded piece of a presented Lie
/// ring. `divisors` are the nonzero elementary divisors of the degree-k
/// relation lattice in tensor coordinates; when they are all 1 the graded
/// piece is free abelian of the reported rank.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LieGradedRank {
    pub k: usize,
    pub rank: u64,
    pub divisors: Vec<BigInt>,
}

/// Graded ranks of the quotient of the free Lie ring on the presentation's
/// generators by the ideal its relations generate. The degree-k relation
/// lattice is spanned by the degree-2 relations bracketed up with the
/// degree-1 generators.
pub fn presented_lie_ranks(
    p: &LiePresentation,
    k_max: usize,
) -> Result<Vec<LieGradedRank>, LieError> {
    assert!(k_max >= 1);
    let m = p.num_generators();
    let mut out = Vec::with_capacity(k_max);
    out.push(LieGradedRank {
        k: 1,
        rank: m as u64,
        divisors: Vec::new(),
    });
    if k_max == 1 {
        return Ok(out);
    }
    let mut level: Vec<Tensor> = p.relations().to_vec();
    for k in 2..=k_max {
        if k > 2 {
            let mut next = Vec::new();
            for t in &level {
                for g in 1..=m {
                    let b = Tensor::bracket(t, &Tensor::generator(m, g))?;
                    if !b.is_zero() {
                        next.push(b);
                    }
                }
            }
            level = next;
        }
        let mut mat = SparseMat::new(m.pow(k as u32));
        for t in &level {
            mat.push_row_i128(&t.flat_entries());
        }
        let snf = mat.snf();
        out.push(LieGradedRank {
            k,
            rank: witt_rank(m, k) - snf.rank as u64,
            divisors: snf.nonzero_divisors().to_vec(),
        });
        level = mat
            .echelon_basis()
            .iter()
            .map(|r| tensor_from_row(r, m, k))
            .collect::<Result<Vec<_>, _>>()?;
    }
    Ok(out)
}

/// Whether the tensor lies in the span of the weight-`degree` Hall basis
/// tensors, checked by rank comparison.
pub fn is_lie_element(t: &Tensor) -> bool {
    if t.is_zero() {
        return true;
    }
    let k = t.degree();
    if k == 0 {
        return false;
    }
    let basis = hall_basis(t.rank(), k);
    let mut mat = SparseMat::new(t.rank().pow(k as u32));
    for bc in &basis {
        mat.push_row_i128(&bc_to_tensor(bc, t.rank()).flat_entries());
    }
    let base_rank = mat.rank();
    debug_assert_eq!(base_rank as u64, witt_rank(t.rank(), k));
    mat.push_row_i128(&t.flat_entries());
    mat.rank() == base_rank
}
