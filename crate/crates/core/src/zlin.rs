//! Exact integer linear algebra: rank and Smith normal form over arbitrary
//! precision integers.
//!
//! Everything here is deterministic and exact. The workhorse is a sparse
//! row-echelon reduction that only ever adds integer multiples of one row to
//! another (and swaps rows), so it preserves the row lattice. Ranks are read
//! off the echelon form. For elementary divisors, an echelon form whose
//! leading entries are all ±1 certifies that every divisor is 1; otherwise a
//! unit-pivot Schur elimination runs, with a classical dense reduction on
//! whatever small core remains. Pivots are chosen by minimal absolute value
//! to control entry growth.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::{BTreeMap, BTreeSet, HashMap};

/// Sparse row: (column, value) pairs sorted by column, values nonzero.
pub type SparseRow = Vec<(usize, BigInt)>;

/// Elementary divisors `d_1 | d_2 | …` (zeros padded to `min(rows, cols)`)
/// and the rank, i.e. the number of nonzero divisors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SnfResult {
    pub divisors: Vec<BigInt>,
    pub rank: usize,
}

impl SnfResult {
    pub fn nonzero_divisors(&self) -> &[BigInt] {
        &self.divisors[..self.rank]
    }

    pub fn all_divisors_one(&self) -> bool {
        self.nonzero_divisors().iter().all(|d| d.is_one())
    }
}

/// `target += coef * source`, merging sorted sparse rows.
fn row_axpy(target: &SparseRow, coef: &BigInt, source: &SparseRow) -> SparseRow {
    let mut out = SparseRow::with_capacity(target.len() + source.len());
    let (mut i, mut j) = (0, 0);
    while i < target.len() || j < source.len() {
        let pick_target = match (target.get(i), source.get(j)) {
            (Some((ct, _)), Some((cs, _))) => {
                if ct == cs {
                    let v = &target[i].1 + coef * &source[j].1;
                    if !v.is_zero() {
                        out.push((*ct, v));
                    }
                    i += 1;
                    j += 1;
                    continue;
                }
                ct < cs
            }
            (Some(_), None) => true,
            (None, Some(_)) => false,
            (None, None) => unreachable!(),
        };
        if pick_target {
            out.push(target[i].clone());
            i += 1;
        } else {
            let v = coef * &source[j].1;
            if !v.is_zero() {
                out.push((source[j].0, v));
            }
            j += 1;
        }
    }
    out
}

/// Row-echelon accumulator over the integers. Only lattice-preserving
/// operations are used, so the rows of the final echelon span the same
/// subgroup of Z^cols as everything inserted.
struct Echelon {
    cols: usize,
    pivots: BTreeMap<usize, SparseRow>,
}

impl Echelon {
    fn new(cols: usize) -> Echelon {
        Echelon {
            cols,
            pivots: BTreeMap::new(),
        }
    }

    /// Inserts a row, reducing against existing pivots with Euclidean steps.
    /// Returns true when the rank increased.
    fn insert(&mut self, mut row: SparseRow) -> bool {
        loop {
            let Some((lead_col, lead_val)) = row.first().cloned() else {
                return false;
            };
            match self.pivots.get_mut(&lead_col) {
                None => {
                    self.pivots.insert(lead_col, row);
                    return true;
                }
                Some(pivot) => {
                    let p = pivot[0].1.clone();
                    let (q, r) = lead_val.div_mod_floor(&p);
                    if !q.is_zero() {
                        row = row_axpy(&row, &(-q), pivot);
                    }
                    debug_assert_eq!(
                        row.first().map(|(c, _)| *c == lead_col).unwrap_or(false),
                        !r.is_zero()
                    );
                    if !r.is_zero() {
                        // the smaller remainder becomes the pivot; keep
                        // reducing the displaced row
                        std::mem::swap(pivot, &mut row);
                    }
                }
            }
        }
    }

    fn rank(&self) -> usize {
        self.pivots.len()
    }

    fn is_full(&self) -> bool {
        self.pivots.len() == self.cols
    }

    fn rows(&self) -> impl Iterator<Item = &SparseRow> {
        self.pivots.values()
    }

    fn leading_entries_are_units(&self) -> bool {
        self.pivots.values().all(|r| r[0].1.abs().is_one())
    }
}

/// A stack of sparse integer rows with exact rank and Smith normal form.
#[derive(Clone, Debug, Default)]
pub struct SparseMat {
    cols: usize,
    rows: Vec<SparseRow>,
}

impl SparseMat {
    pub fn new(cols: usize) -> SparseMat {
        SparseMat {
            cols,
            rows: Vec::new(),
        }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn push_row(&mut self, mut row: SparseRow) {
        row.retain(|(_, v)| !v.is_zero());
        row.sort_by_key(|(c, _)| *c);
        debug_assert!(row.iter().all(|(c, _)| *c < self.cols));
        self.rows.push(row);
    }

    pub fn push_row_i128(&mut self, entries: &[(usize, i128)]) {
        self.push_row(
            entries
                .iter()
                .map(|&(c, v)| (c, BigInt::from(v)))
                .collect(),
        );
    }

    /// Rank over the rationals (equivalently, the number of nonzero
    /// elementary divisors).
    pub fn rank(&self) -> usize {
        let mut ech = Echelon::new(self.cols);
        for row in &self.rows {
            if ech.is_full() {
                break;
            }
            ech.insert(row.clone());
        }
        ech.rank()
    }

    /// Echelon rows spanning the same row lattice, sorted by leading column.
    pub fn echelon_basis(&self) -> Vec<SparseRow> {
        let mut ech = Echelon::new(self.cols);
        for row in &self.rows {
            ech.insert(row.clone());
        }
        ech.rows().cloned().collect()
    }

    pub fn snf(&self) -> SnfResult {
        let mut ech = Echelon::new(self.cols);
        for row in &self.rows {
            ech.insert(row.clone());
        }
        let rank = ech.rank();
        let nonzero = if ech.leading_entries_are_units() {
            vec![BigInt::one(); rank]
        } else {
            let divs = markowitz_snf(ech.rows().cloned().collect(), self.cols);
            debug_assert_eq!(divs.len(), rank);
            divs
        };
        let min_dim = self.rows.len().min(self.cols);
        let mut divisors = nonzero;
        divisors.resize(min_dim, BigInt::zero());
        SnfResult { divisors, rank }
    }
}

/// Unit-pivot Schur elimination; rows with no ±1 entry left fall through to
/// the dense classical reduction. Returns the nonzero divisors in chain
/// order.
fn markowitz_snf(rows: Vec<SparseRow>, _cols: usize) -> Vec<BigInt> {
    let mut mat: Vec<HashMap<usize, BigInt>> = rows
        .into_iter()
        .map(|r| r.into_iter().collect())
        .collect();
    let mut col_rows: HashMap<usize, BTreeSet<usize>> = HashMap::new();
    for (i, row) in mat.iter().enumerate() {
        for &c in row.keys() {
            col_rows.entry(c).or_default().insert(i);
        }
    }
    let mut active: BTreeSet<usize> = (0..mat.len()).collect();
    let mut unit_count = 0usize;

    loop {
        // deterministic: scan for the ±1 entry with the least fill estimate
        let mut best: Option<(usize, usize, usize)> = None; // (score, row, col)
        for &i in &active {
            let rl = mat[i].len();
            for (&c, v) in &mat[i] {
                if v.abs().is_one() {
                    let cl = col_rows.get(&c).map(|s| s.len()).unwrap_or(0);
                    let cand = ((rl - 1) * (cl - 1), i, c);
                    if best.is_none() || cand < best.unwrap() {
                        best = Some(cand);
                    }
                }
            }
        }
        let Some((_, pr, pc)) = best else { break };
        let pval = mat[pr][&pc].clone();
        let pivot_row: Vec<(usize, BigInt)> =
            mat[pr].iter().map(|(&c, v)| (c, v.clone())).collect();
        let touched: Vec<usize> = col_rows
            .get(&pc)
            .map(|s| s.iter().copied().filter(|&r| r != pr).collect())
            .unwrap_or_default();
        for r in touched {
            let coef = -(&mat[r][&pc] * &pval); // pval is ±1
            for (c, v) in &pivot_row {
                let e = mat[r].entry(*c).or_insert_with(BigInt::zero);
                *e += &coef * v;
                if e.is_zero() {
                    mat[r].remove(c);
                    col_rows.get_mut(c).map(|s| s.remove(&r));
                } else if *e == &coef * v {
                    // entry was newly created
                    col_rows.entry(*c).or_default().insert(r);
                }
            }
        }
        for (c, _) in &pivot_row {
            col_rows.get_mut(c).map(|s| s.remove(&pr));
        }
        active.remove(&pr);
        mat[pr].clear();
        unit_count += 1;
    }

    let mut divisors = vec![BigInt::one(); unit_count];
    // dense core: remap the surviving columns
    let mut live_cols: BTreeSet<usize> = BTreeSet::new();
    for &i in &active {
        live_cols.extend(mat[i].keys().copied());
    }
    if !live_cols.is_empty() {
        let col_index: HashMap<usize, usize> =
            live_cols.iter().enumerate().map(|(k, &c)| (c, k)).collect();
        let mut dense: Vec<Vec<BigInt>> = Vec::new();
        for &i in &active {
            if mat[i].is_empty() {
                continue;
            }
            let mut row = vec![BigInt::zero(); live_cols.len()];
            for (c, v) in &mat[i] {
                row[col_index[c]] = v.clone();
            }
            dense.push(row);
        }
        divisors.extend(dense_snf(dense));
    }
    divisors
}

/// Classical Smith reduction on a dense matrix; returns the nonzero
/// divisors. Minimal-absolute-value pivoting throughout.
fn dense_snf(mut a: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let nr = a.len();
    let nc = if nr > 0 { a[0].len() } else { 0 };
    let mut divisors = Vec::new();
    let mut t = 0;
    while t < nr.min(nc) {
        let mut best: Option<(usize, usize)> = None;
        for i in t..nr {
            for j in t..nc {
                if !a[i][j].is_zero()
                    && best
                        .map(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs())
                        .unwrap_or(true)
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        'cleanup: loop {
            for i in t + 1..nr {
                if a[i][t].is_zero() {
                    continue;
                }
                let (q, _) = a[i][t].div_mod_floor(&a[t][t]);
                if !q.is_zero() {
                    for j in t..nc {
                        let s = &a[t][j] * &q;
                        a[i][j] -= s;
                    }
                }
                if !a[i][t].is_zero() {
                    a.swap(t, i);
                    continue 'cleanup;
                }
            }
            for j in t + 1..nc {
                if a[t][j].is_zero() {
                    continue;
                }
                let (q, _) = a[t][j].div_mod_floor(&a[t][t]);
                if !q.is_zero() {
                    for i in t..nr {
                        let s = &a[i][t] * &q;
                        a[i][j] -= s;
                    }
                }
                if !a[t][j].is_zero() {
                    for row in a.iter_mut() {
                        row.swap(t, j);
                    }
                    continue 'cleanup;
                }
            }
            for i in t + 1..nr {
                for j in t + 1..nc {
                    if !(&a[i][j] % &a[t][t]).is_zero() {
                        for jj in t..nc {
                            let s = a[i][jj].clone();
                            a[t][jj] += s;
                        }
                        continue 'cleanup;
                    }
                }
            }
            break;
        }
        if a[t][t].sign() == Sign::Minus {
            let v = -a[t][t].clone();
            a[t][t] = v;
        }
        divisors.push(a[t][t].clone());
        t += 1;
    }
    divisors
}

/// A dense integer matrix with arbitrary-precision entries.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> IntMatrix {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> IntMatrix {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            *m.entry_mut(i, i) = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> IntMatrix {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        IntMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn entry_mut(&mut self, i: usize, j: usize) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *m.entry_mut(j, i) = self.entry(i, j).clone();
            }
        }
        m
    }

    fn to_sparse(&self) -> SparseMat {
        let mut s = SparseMat::new(self.cols);
        for i in 0..self.rows {
            let row: SparseRow = (0..self.cols)
                .filter(|&j| !self.entry(i, j).is_zero())
                .map(|j| (j, self.entry(i, j).clone()))
                .collect();
            s.rows.push(row);
        }
        s
    }

    /// Number of nonzero elementary divisors; equals the rank over the
    /// rationals.
    pub fn rank(&self) -> usize {
        self.to_sparse().rank()
    }

    /// Elementary divisors, invariant under row/column permutation and
    /// transpose.
    pub fn snf(&self) -> SnfResult {
        self.to_sparse().snf()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    /// Oracle: fraction-free (Bareiss) Gaussian elimination rank.
    fn bareiss_rank(mut m: Vec<Vec<BigInt>>) -> usize {
        let nr = m.len();
        if nr == 0 {
            return 0;
        }
        let nc = m[0].len();
        let mut prev = BigInt::one();
        let mut row = 0;
        for col in 0..nc {
            let Some(p) = (row..nr).find(|&i| !m[i][col].is_zero()) else {
                continue;
            };
            m.swap(row, p);
            for i in row + 1..nr {
                for j in col + 1..nc {
                    m[i][j] = (&m[row][col] * &m[i][j] - &m[i][col] * &m[row][j]) / &prev;
                }
                m[i][col] = BigInt::zero();
            }
            prev = m[row][col].clone();
            row += 1;
            if row == nr {
                break;
            }
        }
        row
    }

    /// Oracle: determinant by cofactor expansion (tiny matrices only).
    fn cofactor_det(m: &[Vec<BigInt>]) -> BigInt {
        let n = m.len();
        if n == 0 {
            return BigInt::one();
        }
        if n == 1 {
            return m[0][0].clone();
        }
        let mut det = BigInt::zero();
        for j in 0..n {
            if m[0][j].is_zero() {
                continue;
            }
            let minor: Vec<Vec<BigInt>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|(k, _)| *k != j)
                        .map(|(_, v)| v.clone())
                        .collect()
                })
                .collect();
            let term = &m[0][j] * cofactor_det(&minor);
            if j % 2 == 0 {
                det += term;
            } else {
                det -= term;
            }
        }
        det
    }

    #[test]
    fn snf_of_diag_2_3() {
        let m = IntMatrix::from_i64_rows(&[vec![2, 0], vec![0, 3]]);
        let s = m.snf();
        assert_eq!(s.divisors, vec![big(1), big(6)]);
        assert_eq!(s.rank, 2);
    }

    #[test]
    fn snf_of_zero_matrix() {
        let m = IntMatrix::zeros(2, 3);
        let s = m.snf();
        assert_eq!(s.divisors, vec![big(0), big(0)]);
        assert_eq!(s.rank, 0);
    }

    #[test]
    fn snf_with_content_two() {
        let m = IntMatrix::from_i64_rows(&[vec![2, 4], vec![6, 8]]);
        let s = m.snf();
        assert_eq!(s.divisors, vec![big(2), big(4)]);
    }

    #[test]
    fn rank_examples() {
        assert_eq!(IntMatrix::identity(3).rank(), 3);
        assert_eq!(
            IntMatrix::from_i64_rows(&[vec![1, 2], vec![2, 4]]).rank(),
            1
        );
    }

    #[test]
    fn rank_of_hall_tensor_rows() {
        // rows: the weight-2 Hall tensors on three generators
        let basis = crate::hall::hall_basis(3, 2);
        let mut m = SparseMat::new(9);
        for bc in &basis {
            m.push_row_i128(&crate::hall::bc_to_tensor(&bc, 3).flat_entries());
        }
        assert_eq!(m.rank(), 3);
    }

    #[test]
    fn snf_invariance_and_chain() {
        let m = IntMatrix::from_i64_rows(&[vec![6, 4, 2], vec![4, 4, 0], vec![2, 0, 8]]);
        let s = m.snf();
        assert_eq!(s, m.transpose().snf());
        // permuted rows
        let p = IntMatrix::from_i64_rows(&[vec![2, 0, 8], vec![6, 4, 2], vec![4, 4, 0]]);
        assert_eq!(s.divisors, p.snf().divisors);
        for w in s.nonzero_divisors().windows(2) {
            assert!((&w[1] % &w[0]).is_zero());
        }
    }

    #[test]
    fn rank_matches_bareiss_on_fixed_30x30() {
        // deterministic congruential fill, entries in [-9, 9]
        let mut state: u64 = 0x9e3779b97f4a7c15;
        let mut next = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 33) % 19) as i64 - 9
        };
        let rows: Vec<Vec<i64>> = (0..30).map(|_| (0..30).map(|_| next()).collect()).collect();
        let m = IntMatrix::from_i64_rows(&rows);
        let oracle = bareiss_rank(
            rows.iter()
                .map(|r| r.iter().map(|&v| big(v)).collect())
                .collect(),
        );
        assert_eq!(m.rank(), oracle);
    }

    proptest! {
        #[test]
        fn rank_matches_bareiss(rows in prop::collection::vec(
            prop::collection::vec(-9i64..=9, 6), 1..=8usize))
        {
            let m = IntMatrix::from_i64_rows(&rows);
            let oracle = bareiss_rank(
                rows.iter().map(|r| r.iter().map(|&v| big(v)).collect()).collect());
            prop_assert_eq!(m.rank(), oracle);
        }

        #[test]
        fn snf_divisor_product_is_abs_det(rows in prop::collection::vec(
            prop::collection::vec(-6i64..=6, 4), 4))
        {
            let m = IntMatrix::from_i64_rows(&rows);
            let det = cofactor_det(
                &rows.iter().map(|r| r.iter().map(|&v| big(v)).collect()).collect::<Vec<_>>());
            let s = m.snf();
            let product: BigInt = s.divisors.iter().product();
            prop_assert_eq!(product, det.abs());
        }

        #[test]
        fn snf_invariant_under_row_permutation(rows in prop::collection::vec(
            prop::collection::vec(-5i64..=5, 5), 3..=6usize), seed in any::<u64>())
        {
            let m = IntMatrix::from_i64_rows(&rows);
            let mut permuted = rows.clone();
            let n = permuted.len();
            let mut s = seed;
            for i in (1..n).rev() {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1);
                permuted.swap(i, (s % (i as u64 + 1)) as usize);
            }
            let p = IntMatrix::from_i64_rows(&permuted);
            prop_assert_eq!(m.snf(), p.snf());
        }
    }
}
