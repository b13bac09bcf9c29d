//! Truncated Magnus expansion of free-group words into noncommutative
//! integer power series, lower-central-series weight, and graded Lie
//! classes in tensor coordinates.
//!
//! The expansion sends `x_i ↦ 1 + X_i` and `x_i⁻¹ ↦ 1 − X_i + X_i² − …`,
//! truncated at a degree bound. A reduced word lies in the k-th term of the
//! lower central series exactly when its expansion minus 1 has lowest degree
//! at least k, which turns filtration questions into coefficient checks.
//!
//! Storage is sparse: a monomial is a packed sequence of generator indices
//! and a series is a map monomial → coefficient. Dense coordinate vectors
//! are materialized only when a rank computation flattens tensors.

use crate::word::Word;
use std::collections::HashMap;
use std::fmt;

/// Largest generator index a packed monomial can hold.
pub const MAX_RANK: usize = 15;
/// Largest monomial degree a packed monomial can hold.
pub const MAX_DEGREE: usize = 14;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SeriesError {
    /// Rank or degree beyond what packed monomials support.
    TooLarge { rank: usize, degree: usize },
    /// Operands disagree in rank or truncation degree.
    Mismatch,
    InvalidDegree(usize),
    /// The word has a nonzero graded component below the requested degree.
    NotInLowerCentral { required: usize, found: usize },
    Word(crate::word::WordError),
}

impl fmt::Display for SeriesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesError::TooLarge { rank, degree } => {
                write!(f, "rank {rank} / degree {degree} exceeds packed monomial limits ({MAX_RANK}/{MAX_DEGREE})")
            }
            SeriesError::Mismatch => write!(f, "series operands have mismatched rank or degree"),
            SeriesError::InvalidDegree(d) => write!(f, "invalid degree {d}"),
            SeriesError::NotInLowerCentral { required, found } => {
                write!(f, "word is not in the lower central series term {required} (nonzero component in degree {found})")
            }
            SeriesError::Word(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for SeriesError {}

impl From<crate::word::WordError> for SeriesError {
    fn from(e: crate::word::WordError) -> Self {
        SeriesError::Word(e)
    }
}

/// A noncommuting monomial in the letters `X_1..X_n`, packed four bits per
/// letter with the length in the top nibble. The empty monomial is 1.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(u64);

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    pub fn from_letters(letters: &[usize]) -> Result<Monomial, SeriesError> {
        if letters.len() > MAX_DEGREE {
            return Err(SeriesError::TooLarge {
                rank: 0,
                degree: letters.len(),
            });
        }
        let mut bits: u64 = 0;
        for (t, &l) in letters.iter().enumerate() {
            if l == 0 || l > MAX_RANK {
                return Err(SeriesError::TooLarge { rank: l, degree: 0 });
            }
            bits |= (l as u64) << (4 * t);
        }
        bits |= (letters.len() as u64) << 60;
        Ok(Monomial(bits))
    }

    pub fn degree(self) -> usize {
        (self.0 >> 60) as usize
    }

    /// Letter at position `t` (0-based), 1-based generator index.
    pub fn letter(self, t: usize) -> usize {
        ((self.0 >> (4 * t)) & 0xF) as usize
    }

    pub fn letters(self) -> Vec<usize> {
        (0..self.degree()).map(|t| self.letter(t)).collect()
    }

    pub fn append(self, letter: usize) -> Result<Monomial, SeriesError> {
        let d = self.degree();
        if d + 1 > MAX_DEGREE || letter == 0 || letter > MAX_RANK {
            return Err(SeriesError::TooLarge {
                rank: letter,
                degree: d + 1,
            });
        }
        let bits = (self.0 & ((1 << 60) - 1)) | ((letter as u64) << (4 * d));
        Ok(Monomial(bits | (((d + 1) as u64) << 60)))
    }

    pub fn concat(self, other: Monomial) -> Result<Monomial, SeriesError> {
        let (da, db) = (self.degree(), other.degree());
        if da + db > MAX_DEGREE {
            return Err(SeriesError::TooLarge {
                rank: 0,
                degree: da + db,
            });
        }
        let bits = (self.0 & ((1 << 60) - 1)) | ((other.0 & ((1 << 60) - 1)) << (4 * da));
        Ok(Monomial(bits | (((da + db) as u64) << 60)))
    }

    /// Position in the degree-lexicographic ordering of all monomials of the
    /// same degree over `rank` letters. Used to flatten tensors to vectors.
    pub fn flat_index(self, rank: usize) -> usize {
        let mut idx = 0usize;
        for t in 0..self.degree() {
            idx = idx * rank + (self.letter(t) - 1);
        }
        idx
    }

    /// Inverse of [`Monomial::flat_index`] at a fixed degree.
    pub fn from_flat_index(mut idx: usize, rank: usize, degree: usize) -> Monomial {
        let mut letters = vec![0usize; degree];
        for t in (0..degree).rev() {
            letters[t] = idx % rank + 1;
            idx /= rank;
        }
        Monomial::from_letters(&letters).expect("within packed limits")
    }
}

fn check_dims(rank: usize, degree: usize) -> Result<(), SeriesError> {
    if rank == 0 || rank > MAX_RANK || degree > MAX_DEGREE {
        return Err(SeriesError::TooLarge { rank, degree });
    }
    Ok(())
}

/// A degree-truncated noncommutative integer power series over `X_1..X_n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncSeries {
    rank: usize,
    degree_bound: usize,
    coeffs: HashMap<Monomial, i128>,
}

impl TruncSeries {
    pub fn zero(rank: usize, degree_bound: usize) -> TruncSeries {
        TruncSeries {
            rank,
            degree_bound,
            coeffs: HashMap::new(),
        }
    }

    pub fn one(rank: usize, degree_bound: usize) -> TruncSeries {
        let mut s = TruncSeries::zero(rank, degree_bound);
        s.add_term(Monomial::ONE, 1);
        s
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn degree_bound(&self) -> usize {
        self.degree_bound
    }

    pub fn coeff(&self, m: Monomial) -> i128 {
        self.coeffs.get(&m).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, m: Monomial, c: i128) {
        if c == 0 {
            return;
        }
        let e = self.coeffs.entry(m).or_insert(0);
        *e += c;
        if *e == 0 {
            self.coeffs.remove(&m);
        }
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    /// Terms sorted by (degree, letters); deterministic output order.
    pub fn terms_sorted(&self) -> Vec<(Vec<usize>, i128)> {
        let mut v: Vec<(Vec<usize>, i128)> = self
            .coeffs
            .iter()
            .map(|(m, &c)| (m.letters(), c))
            .collect();
        v.sort_by(|a, b| (a.0.len(), &a.0).cmp(&(b.0.len(), &b.0)));
        v
    }

    /// Right multiplication by the expansion of a single letter,
    /// `1 + X_i` or `1 − X_i + X_i² − …` truncated at the bound.
    pub fn mul_letter(&self, letter: usize, inverse: bool) -> Result<TruncSeries, SeriesError> {
        if letter == 0 || letter > self.rank {
            return Err(SeriesError::Word(crate::word::WordError::IndexOutOfRange {
                index: letter,
                rank: self.rank,
            }));
        }
        let mut out = TruncSeries::zero(self.rank, self.degree_bound);
        for (&m, &c) in &self.coeffs {
            out.add_term(m, c);
            if !inverse {
                if m.degree() < self.degree_bound {
                    out.add_term(m.append(letter)?, c);
                }
            } else {
                let mut mm = m;
                let mut coeff = c;
                for _ in m.degree()..self.degree_bound {
                    mm = mm.append(letter)?;
                    coeff = -coeff;
                    out.add_term(mm, coeff);
                }
            }
        }
        Ok(out)
    }

    /// Truncated product.
    pub fn mul(&self, other: &TruncSeries) -> Result<TruncSeries, SeriesError> {
        if self.rank != other.rank || self.degree_bound != other.degree_bound {
            return Err(SeriesError::Mismatch);
        }
        let mut out = TruncSeries::zero(self.rank, self.degree_bound);
        for (&ma, &ca) in &self.coeffs {
            for (&mb, &cb) in &other.coeffs {
                if ma.degree() + mb.degree() <= self.degree_bound {
                    out.add_term(ma.concat(mb)?, ca * cb);
                }
            }
        }
        Ok(out)
    }

    /// Lowest degree ≥ 1 carrying a nonzero coefficient, i.e. the lowest
    /// degree of `self − constant term`.
    pub fn lowest_positive_degree(&self) -> Option<usize> {
        self.coeffs
            .keys()
            .map(|m| m.degree())
            .filter(|&d| d >= 1)
            .min()
    }

    /// The degree-`d` homogeneous component as a tensor.
    pub fn homogeneous(&self, d: usize) -> Tensor {
        let mut t = Tensor::zero(self.rank, d);
        for (&m, &c) in &self.coeffs {
            if m.degree() == d {
                t.add_term(m, c);
            }
        }
        t
    }
}

/// The Magnus expansion of `w` truncated at `degree_bound`, multiplicative:
/// the expansion of a product is the truncated product of expansions.
pub fn magnus(w: &Word, rank: usize, degree_bound: usize) -> Result<TruncSeries, SeriesError> {
    check_dims(rank, degree_bound)?;
    if degree_bound < 1 {
        return Err(SeriesError::InvalidDegree(degree_bound));
    }
    w.validate_rank(rank)?;
    if let Some(offsets) = dense_offsets(rank, degree_bound) {
        return Ok(magnus_dense(w, rank, degree_bound, &offsets));
    }
    let mut s = TruncSeries::one(rank, degree_bound);
    for l in w.letters() {
        s = s.mul_letter(l.gen.value(), l.inverse)?;
    }
    Ok(s)
}

/// Per-degree slot offsets for a dense coordinate buffer, or `None` when
/// the full space would be unreasonably large for a scratch buffer.
fn dense_offsets(rank: usize, degree_bound: usize) -> Option<Vec<usize>> {
    const MAX_SLOTS: usize = 1 << 22;
    let mut offsets = Vec::with_capacity(degree_bound + 2);
    offsets.push(0usize);
    let mut size: usize = 1;
    for d in 0..=degree_bound {
        offsets.push(offsets[d] + size);
        size = size.checked_mul(rank)?;
        if offsets[d + 1] > MAX_SLOTS {
            return None;
        }
    }
    Some(offsets)
}

/// Letter-by-letter expansion on a dense per-degree buffer. Multiplying by
/// `1 + X_i` pushes every slot into its child; multiplying by the inverse
/// series solves `r + r·X_i = s` slot by slot in ascending degree.
fn magnus_dense(w: &Word, rank: usize, degree_bound: usize, offsets: &[usize]) -> TruncSeries {
    let total = offsets[degree_bound + 1];
    let mut slots = vec![0i128; total];
    slots[0] = 1;
    for l in w.letters() {
        let i = l.gen.value() - 1;
        if !l.inverse {
            for d in (0..degree_bound).rev() {
                let (src, dst) = (offsets[d], offsets[d + 1]);
                for wdx in 0..dst - src {
                    let v = slots[src + wdx];
                    if v != 0 {
                        slots[dst + wdx * rank + i] += v;
                    }
                }
            }
        } else {
            for d in 1..=degree_bound {
                let (par, cur) = (offsets[d - 1], offsets[d]);
                let mut wdx = i;
                while cur + wdx < offsets[d + 1] {
                    let p = slots[par + wdx / rank];
                    if p != 0 {
                        slots[cur + wdx] -= p;
                    }
                    wdx += rank;
                }
            }
        }
    }
    let mut out = TruncSeries::zero(rank, degree_bound);
    for d in 0..=degree_bound {
        for wdx in 0..offsets[d + 1] - offsets[d] {
            let v = slots[offsets[d] + wdx];
            if v != 0 {
                out.add_term(Monomial::from_flat_index(wdx, rank, d), v);
            }
        }
    }
    out
}

/// Weight of a word in the lower central series, as far as a truncated
/// expansion can see.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LcsWeight {
    /// The word lies in term `k` and not in term `k+1`.
    Weight(usize),
    /// Every graded component up to the bound vanishes; in particular the
    /// identity word reports this for every bound.
    ExceedsBound,
}

/// Largest `k ≤ degree_bound` with `w` in the k-th lower central term,
/// computed from the lowest nonvanishing degree of `magnus(w) − 1`.
pub fn lcs_weight(w: &Word, rank: usize, degree_bound: usize) -> Result<LcsWeight, SeriesError> {
    let s = magnus(w, rank, degree_bound)?;
    Ok(match s.lowest_positive_degree() {
        Some(d) => LcsWeight::Weight(d),
        None => LcsWeight::ExceedsBound,
    })
}

/// A homogeneous degree-`k` integer tensor over `X_1..X_n`; graded Lie
/// classes live here via their lowest-degree Magnus component.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tensor {
    rank: usize,
    degree: usize,
    coeffs: HashMap<Monomial, i128>,
}

impl Tensor {
    pub fn zero(rank: usize, degree: usize) -> Tensor {
        Tensor {
            rank,
            degree,
            coeffs: HashMap::new(),
        }
    }

    /// The degree-1 tensor `X_i`.
    pub fn generator(rank: usize, i: usize) -> Tensor {
        let mut t = Tensor::zero(rank, 1);
        t.add_term(Monomial::from_letters(&[i]).expect("generator fits"), 1);
        t
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, m: Monomial) -> i128 {
        self.coeffs.get(&m).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, m: Monomial, c: i128) {
        debug_assert_eq!(m.degree(), self.degree);
        if c == 0 {
            return;
        }
        let e = self.coeffs.entry(m).or_insert(0);
        *e += c;
        if *e == 0 {
            self.coeffs.remove(&m);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (Monomial, i128)> + '_ {
        self.coeffs.iter().map(|(&m, &c)| (m, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn add(&self, other: &Tensor) -> Result<Tensor, SeriesError> {
        if self.rank != other.rank || self.degree != other.degree {
            return Err(SeriesError::Mismatch);
        }
        let mut out = self.clone();
        for (m, c) in other.iter() {
            out.add_term(m, c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Tensor) -> Result<Tensor, SeriesError> {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, c: i128) -> Tensor {
        let mut out = Tensor::zero(self.rank, self.degree);
        if c != 0 {
            for (m, v) in self.iter() {
                out.add_term(m, v * c);
            }
        }
        out
    }

    /// Concatenation product of homogeneous tensors.
    pub fn concat_mul(&self, other: &Tensor) -> Result<Tensor, SeriesError> {
        if self.rank != other.rank {
            return Err(SeriesError::Mismatch);
        }
        let mut out = Tensor::zero(self.rank, self.degree + other.degree);
        for (ma, ca) in self.iter() {
            for (mb, cb) in other.iter() {
                out.add_term(ma.concat(mb)?, ca * cb);
            }
        }
        Ok(out)
    }

    /// Tensor bracket `[a, b] = ab − ba`.
    pub fn bracket(a: &Tensor, b: &Tensor) -> Result<Tensor, SeriesError> {
        a.concat_mul(b)?.sub(&b.concat_mul(a)?)
    }

    /// Terms sorted lexicographically; deterministic output order.
    pub fn terms_sorted(&self) -> Vec<(Vec<usize>, i128)> {
        let mut v: Vec<(Vec<usize>, i128)> = self
            .coeffs
            .iter()
            .map(|(m, &c)| (m.letters(), c))
            .collect();
        v.sort();
        v
    }

    /// Sparse flat coordinates in the `rank^degree`-dimensional monomial
    /// space, sorted by index.
    pub fn flat_entries(&self) -> Vec<(usize, i128)> {
        let mut v: Vec<(usize, i128)> = self
            .coeffs
            .iter()
            .map(|(m, &c)| (m.flat_index(self.rank), c))
            .collect();
        v.sort();
        v
    }
}

impl fmt::Display for Tensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (letters, c) in self.terms_sorted() {
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", if c < 0 { "-" } else { "+" })?;
            }
            let a = c.abs();
            if a != 1 {
                write!(f, "{a}·")?;
            }
            for l in letters {
                write!(f, "X{l}")?;
            }
        }
        Ok(())
    }
}

/// The degree-`k` graded Lie class of a word in the k-th lower central term:
/// the degree-`k` homogeneous component of `magnus(w, k) − 1`. Zero exactly
/// when the word lies one term deeper.
pub fn lie_class(w: &Word, rank: usize, k: usize) -> Result<Tensor, SeriesError> {
    if k < 1 {
        return Err(SeriesError::InvalidDegree(k));
    }
    let s = magnus(w, rank, k)?;
    if let Some(d) = s.lowest_positive_degree() {
        if d < k {
            return Err(SeriesError::NotInLowerCentral {
                required: k,
                found: d,
            });
        }
    }
    Ok(s.homogeneous(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::commutator;
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn mono(letters: &[usize]) -> Monomial {
        Monomial::from_letters(letters).unwrap()
    }

    /// Oracle: all-pairs product of term lists, no reuse of `mul`'s loops
    /// beyond arithmetic.
    fn naive_mul(a: &TruncSeries, b: &TruncSeries) -> TruncSeries {
        let mut out = TruncSeries::zero(a.rank(), a.degree_bound());
        for (la, ca) in a.terms_sorted() {
            for (lb, cb) in b.terms_sorted() {
                if la.len() + lb.len() <= a.degree_bound() {
                    let mut ls = la.clone();
                    ls.extend_from_slice(&lb);
                    out.add_term(mono(&ls), ca * cb);
                }
            }
        }
        out
    }

    /// Oracle for the expansion: expand each letter to its series, then
    /// naive-multiply left to right.
    fn naive_magnus(word: &Word, rank: usize, bound: usize) -> TruncSeries {
        let mut s = TruncSeries::one(rank, bound);
        for l in word.letters() {
            let mut ls = TruncSeries::zero(rank, bound);
            ls.add_term(Monomial::ONE, 1);
            let mut m = Monomial::ONE;
            for d in 1..=bound {
                m = m.append(l.gen.value()).unwrap();
                let c = if l.inverse {
                    if d % 2 == 1 {
                        -1
                    } else {
                        1
                    }
                } else if d == 1 {
                    1
                } else {
                    0
                };
                ls.add_term(m, c);
            }
            s = naive_mul(&s, &ls);
        }
        s
    }

    #[test]
    fn magnus_of_identity_is_one() {
        let s = magnus(&Word::identity(), 3, 3).unwrap();
        assert_eq!(s, TruncSeries::one(3, 3));
    }

    #[test]
    fn magnus_of_generator() {
        let s = magnus(&w("x1"), 2, 2).unwrap();
        assert_eq!(s.coeff(Monomial::ONE), 1);
        assert_eq!(s.coeff(mono(&[1])), 1);
        assert_eq!(s.num_terms(), 2);
    }

    #[test]
    fn magnus_of_commutator_degree_two() {
        let c = commutator(&w("x1"), &w("x2"));
        let s = magnus(&c, 2, 2).unwrap();
        assert_eq!(s.coeff(Monomial::ONE), 1);
        assert_eq!(s.coeff(mono(&[1, 2])), 1);
        assert_eq!(s.coeff(mono(&[2, 1])), -1);
        assert_eq!(s.num_terms(), 3);
        assert_eq!(s, naive_magnus(&c, 2, 2));
    }

    #[test]
    fn oversized_alphabet_falls_back_to_sparse_path() {
        // 15^6 slots exceed the dense scratch limit
        let c = commutator(&w("x15"), &w("x7"));
        let s = magnus(&c, 15, 6).unwrap();
        assert_eq!(s, naive_magnus(&c, 15, 6));
    }

    #[test]
    fn lcs_weight_examples() {
        assert_eq!(lcs_weight(&w("x1"), 2, 3).unwrap(), LcsWeight::Weight(1));
        let c = commutator(&w("x1"), &w("x2"));
        assert_eq!(lcs_weight(&c, 2, 3).unwrap(), LcsWeight::Weight(2));
        let c3 = commutator(&c, &w("x1"));
        assert_eq!(lcs_weight(&c3, 2, 4).unwrap(), LcsWeight::Weight(3));
        assert_eq!(
            lcs_weight(&Word::identity(), 2, 4).unwrap(),
            LcsWeight::ExceedsBound
        );
    }

    #[test]
    fn lie_class_examples() {
        let c = commutator(&w("x1"), &w("x2"));
        let t = lie_class(&c, 2, 2).unwrap();
        assert_eq!(t.coeff(mono(&[1, 2])), 1);
        assert_eq!(t.coeff(mono(&[2, 1])), -1);
        assert_eq!(t.num_terms(), 2);

        let z = lie_class(&Word::identity(), 2, 3).unwrap();
        assert!(z.is_zero());

        let c_rev = commutator(&w("x2"), &w("x1"));
        let t_rev = lie_class(&c_rev, 2, 2).unwrap();
        assert_eq!(t_rev, t.scale(-1));
    }

    #[test]
    fn lie_class_rejects_shallow_words() {
        let err = lie_class(&w("x1"), 2, 2).unwrap_err();
        assert!(matches!(
            err,
            SeriesError::NotInLowerCentral {
                required: 2,
                found: 1
            }
        ));
    }

    #[test]
    fn bracket_matches_hand_expansion() {
        let x1 = Tensor::generator(2, 1);
        let x2 = Tensor::generator(2, 2);
        let b = Tensor::bracket(&x2, &x1).unwrap();
        assert_eq!(b.coeff(mono(&[2, 1])), 1);
        assert_eq!(b.coeff(mono(&[1, 2])), -1);
    }

    fn arb_word(rank: usize, max_len: usize) -> impl Strategy<Value = Word> {
        prop::collection::vec((1..=rank, any::<bool>()), 0..=max_len).prop_map(|ls| {
            Word::from_letters(
                ls.into_iter()
                    .map(|(g, inv)| crate::word::Letter::new(g, inv)),
            )
        })
    }

    proptest! {
        #[test]
        fn mul_matches_naive_oracle(a in arb_word(3, 5), b in arb_word(3, 5)) {
            let sa = magnus(&a, 3, 4).unwrap();
            let sb = magnus(&b, 3, 4).unwrap();
            prop_assert_eq!(sa.mul(&sb).unwrap(), naive_mul(&sa, &sb));
        }

        #[test]
        fn magnus_is_multiplicative(u in arb_word(3, 6), v in arb_word(3, 6)) {
            let prod = magnus(&u.mul(&v), 3, 4).unwrap();
            let split = magnus(&u, 3, 4).unwrap().mul(&magnus(&v, 3, 4).unwrap()).unwrap();
            prop_assert_eq!(prod, split);
        }

        #[test]
        fn magnus_of_inverse_is_inverse(word in arb_word(3, 6)) {
            let s = magnus(&word, 3, 4).unwrap();
            let si = magnus(&word.inverse(), 3, 4).unwrap();
            prop_assert_eq!(s.mul(&si).unwrap(), TruncSeries::one(3, 4));
        }

        #[test]
        fn magnus_matches_letterwise_oracle(word in arb_word(3, 6)) {
            prop_assert_eq!(magnus(&word, 3, 4).unwrap(), naive_magnus(&word, 3, 4));
        }
    }
}
