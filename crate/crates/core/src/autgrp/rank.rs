//! Rank pipelines: graded ranks of generator families through the Johnson
//! homomorphism, on the group side and on the derivation side.
//!
//! The group-side pipeline evaluates all weight-k left-normed simple
//! commutators of the family's generators, maps them through the k-th
//! Johnson homomorphism, and takes the exact rank of the stacked
//! derivations. The derivation-side pipeline brackets the degree-1 Johnson
//! images inside the derivation ring. Both compute the rank of the same
//! image and must agree.

use super::filtration::johnson;
use super::gens::{endo_of, endo_of_inverse, evaluate, GroupSpec, GroupWord, NamedGenerator};
use super::{AutError, SizeGuard};
use crate::hall::witt_rank;
use crate::liealg::graded_subalgebra_ranks;
use crate::word::Endo;
use crate::zlin::SparseMat;
use std::collections::HashSet;

/// All weight-k left-normed simple commutators `(h_1, …, h_k)` with entries
/// drawn from the family's generator list, repetitions included. For
/// `k = 1` this is the generator list itself. Duplicates are not removed;
/// rank computations absorb the redundancy.
pub fn gamma_generators(spec: &GroupSpec, k: usize) -> Vec<GroupWord> {
    assert!(k >= 1);
    let gens: Vec<GroupWord> = spec
        .generators()
        .into_iter()
        .map(GroupWord::generator)
        .collect();
    let mut level = gens.clone();
    for _ in 2..=k {
        let mut next = Vec::with_capacity(level.len() * gens.len());
        for w in &level {
            for g in &gens {
                next.push(GroupWord::commutator(w, g));
            }
        }
        level = next;
    }
    level
}

/// Which pipeline computes a graded rank.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Method {
    /// Evaluate weight-k commutators and stack their Johnson images.
    Johnson,
    /// Bracket the degree-1 Johnson images inside the derivation ring.
    Derivation,
}

/// Evaluates all weight-k commutator endomorphisms of the family,
/// deduplicated. Built level by level so each weight reuses the previous
/// one; the set of distinct endomorphisms equals the one obtained by
/// evaluating `gamma_generators` directly.
fn commutator_endos(spec: &GroupSpec, k: usize) -> Result<Vec<Endo>, AutError> {
    let n = spec.n;
    let gens = spec.generators();
    let mut gen_pairs = Vec::with_capacity(gens.len());
    for g in &gens {
        gen_pairs.push((endo_of(*g, n)?, endo_of_inverse(*g, n)?));
    }
    // (element, inverse) pairs for the current weight
    let mut level: Vec<(Endo, Endo)> = gen_pairs.clone();
    for _ in 2..=k {
        let mut next = Vec::new();
        let mut seen: HashSet<Vec<crate::word::Word>> = HashSet::new();
        for (a, a_inv) in &level {
            for (g, g_inv) in &gen_pairs {
                // (a, g) = a⁻¹ g⁻¹ a g and its inverse (g, a)
                let comm = a_inv.compose(g_inv)?.compose(a)?.compose(g)?;
                if !seen.insert(comm.images().to_vec()) {
                    continue;
                }
                let comm_inv = g_inv.compose(a_inv)?.compose(g)?.compose(a)?;
                next.push((comm, comm_inv));
            }
        }
        level = next;
    }
    let mut out = Vec::new();
    let mut seen: HashSet<Vec<crate::word::Word>> = HashSet::new();
    for (e, _) in level {
        if seen.insert(e.images().to_vec()) {
            out.push(e);
        }
    }
    Ok(out)
}

/// The rank of the image of the family's weight-k graded piece under the
/// k-th Johnson homomorphism. Both methods return the same value.
pub fn gr_rank(
    spec: &GroupSpec,
    k: usize,
    method: Method,
    guard: &SizeGuard,
) -> Result<usize, AutError> {
    if k < 1 {
        return Err(AutError::Input(format!("k must be >= 1, got {k}")));
    }
    if spec.n < 2 {
        return Err(AutError::Input(format!("rank must be >= 2, got {}", spec.n)));
    }
    guard.admit(spec.n, k)?;
    match method {
        Method::Johnson => {
            let n = spec.n;
            let endos = commutator_endos(spec, k)?;
            let cols = n * n.pow(k as u32 + 1);
            let mut mat = SparseMat::new(cols);
            for e in &endos {
                let d = johnson(e, k)?;
                if !d.is_zero() {
                    mat.push_row_i128(&d.flat_entries());
                }
            }
            Ok(mat.rank())
        }
        Method::Derivation => {
            let taus = spec
                .generators()
                .into_iter()
                .map(|g| johnson(&endo_of(g, spec.n)?, 1))
                .collect::<Result<Vec<_>, _>>()?;
            let ranks = graded_subalgebra_ranks(&taus, k)?;
            Ok(ranks[k - 1])
        }
    }
}

/// Rank of the Johnson images of the standard weight-2 commutator basis of
/// the basis-conjugating family: `(xi(i,j), xi(j,i))` over `i < j` together
/// with `(xi(i,j), xi(i,t))` over `j < t` distinct from `i`. Expected value
/// `n(n−1)²/2`.
pub fn psigma_gr2_basis_rank(n: usize) -> Result<usize, AutError> {
    if n < 2 {
        return Err(AutError::Input(format!("rank must be >= 2, got {n}")));
    }
    let xi = |i: usize, j: usize| GroupWord::generator(NamedGenerator::Xi(i, j));
    let mut words = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            words.push(GroupWord::commutator(&xi(i, j), &xi(j, i)));
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            for t in j + 1..=n {
                if j != i && t != i {
                    words.push(GroupWord::commutator(&xi(i, j), &xi(i, t)));
                }
            }
        }
    }
    let mut mat = SparseMat::new(n * n.pow(3));
    for w in &words {
        let d = johnson(&evaluate(w, n)?, 2)?;
        if !d.is_zero() {
            mat.push_row_i128(&d.flat_entries());
        }
    }
    Ok(mat.rank())
}

/// A computed graded rank next to the conjectured closed form
/// `(n−1)·witt_rank(n,k)` for the basis-conjugating family. The computed
/// value is a lower bound for the graded rank; no judgment is made.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ProbeReport {
    pub n: usize,
    pub k: usize,
    pub computed_rank: usize,
    pub conjectured: u64,
}

pub fn conjecture_probe(n: usize, k: usize, guard: &SizeGuard) -> Result<ProbeReport, AutError> {
    let computed_rank = gr_rank(&GroupSpec::mccool(n), k, Method::Johnson, guard)?;
    Ok(ProbeReport {
        n,
        k,
        computed_rank,
        conjectured: (n as u64 - 1) * witt_rank(n, k),
    })
}
