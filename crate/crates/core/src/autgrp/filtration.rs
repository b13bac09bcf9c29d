//! Andreadakis filtration membership and Johnson homomorphisms.
//!
//! An automorphism lies in the k-th filtration term when it acts trivially
//! on the k-th nilpotent quotient, i.e. when `x⁻¹·σ(x)` lies in the
//! (k+1)-st lower central term for every generator `x`. The k-th Johnson
//! homomorphism records the graded classes of these elements as a degree-k
//! derivation; it vanishes exactly on the (k+1)-st term.

use super::AutError;
use crate::liealg::Derivation;
use crate::series::{lcs_weight, magnus, LcsWeight, Tensor};
use crate::word::{Endo, Word};

/// The reduced word `x_i⁻¹ · e(x_i)`.
fn displacement(e: &Endo, i: usize) -> Result<Word, AutError> {
    let x = Word::generator(i);
    Ok(x.inverse().mul(&e.apply(&x)?))
}

/// Whether `e` acts trivially modulo the (k+1)-st lower central term:
/// every `x_i⁻¹·e(x_i)` has weight at least `k+1` (checked through a
/// degree-(k+2) expansion).
pub fn andreadakis_member(e: &Endo, k: usize) -> Result<bool, AutError> {
    if k < 1 {
        return Err(AutError::Input(format!("filtration index must be >= 1, got {k}")));
    }
    let n = e.rank();
    for i in 1..=n {
        let w = displacement(e, i)?;
        match lcs_weight(&w, n, k + 2)? {
            LcsWeight::Weight(d) if d <= k => return Ok(false),
            _ => {}
        }
    }
    Ok(true)
}

/// The k-th Johnson homomorphism: the derivation whose value on `x_i` is
/// the degree-(k+1) graded class of `x_i⁻¹·e(x_i)`. Elements lying one
/// filtration term deeper map to the zero derivation; elements outside the
/// k-th term are rejected.
pub fn johnson(e: &Endo, k: usize) -> Result<Derivation, AutError> {
    if k < 1 {
        return Err(AutError::Input(format!("filtration index must be >= 1, got {k}")));
    }
    let n = e.rank();
    let mut values: Vec<Tensor> = Vec::with_capacity(n);
    for i in 1..=n {
        let w = displacement(e, i)?;
        let s = magnus(&w, n, k + 1)?;
        if let Some(d) = s.lowest_positive_degree() {
            if d <= k {
                return Err(AutError::NotInFiltration { k });
            }
        }
        values.push(s.homogeneous(k + 1));
    }
    Derivation::new(n, values).map_err(AutError::from)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::autgrp::gens::{endo_of, evaluate, GroupWord, NamedGenerator};
    use crate::liealg::{der_bracket, is_lie_element};
    use crate::series::Monomial;

    fn mono(ls: &[usize]) -> Monomial {
        Monomial::from_letters(ls).unwrap()
    }

    fn xi(i: usize, j: usize) -> GroupWord {
        GroupWord::generator(NamedGenerator::Xi(i, j))
    }

    fn nu(p: usize, i: usize) -> GroupWord {
        GroupWord::generator(NamedGenerator::Nu(p, i))
    }

    #[test]
    fn identity_is_in_every_term() {
        let id = Endo::identity(3);
        for k in 1..=4 {
            assert!(andreadakis_member(&id, k).unwrap());
        }
    }

    #[test]
    fn xi_sits_in_term_one_only() {
        let e = endo_of(NamedGenerator::Xi(1, 2), 2).unwrap();
        assert!(andreadakis_member(&e, 1).unwrap());
        assert!(!andreadakis_member(&e, 2).unwrap());
    }

    #[test]
    fn weight_three_commutators_reach_term_three() {
        let w = GroupWord::commutator(&GroupWord::commutator(&nu(2, 1), &nu(2, 2)), &nu(2, 1));
        let e = evaluate(&w, 3).unwrap();
        assert!(andreadakis_member(&e, 3).unwrap());
        assert!(!andreadakis_member(&e, 4).unwrap());
    }

    #[test]
    fn johnson_of_xi() {
        let e = endo_of(NamedGenerator::Xi(1, 2), 3).unwrap();
        let d = johnson(&e, 1).unwrap();
        assert_eq!(d.value(1).coeff(mono(&[1, 2])), 1);
        assert_eq!(d.value(1).coeff(mono(&[2, 1])), -1);
        assert_eq!(d.value(1).num_terms(), 2);
        assert!(d.value(2).is_zero());
        assert!(d.value(3).is_zero());
        assert!(is_lie_element(d.value(1)));
    }

    #[test]
    fn johnson_of_identity_is_zero() {
        for k in 1..=3 {
            assert!(johnson(&Endo::identity(3), k).unwrap().is_zero());
        }
    }

    #[test]
    fn johnson_of_nu() {
        let e = endo_of(NamedGenerator::Nu(3, 1), 3).unwrap();
        let d = johnson(&e, 1).unwrap();
        assert!(d.value(1).is_zero());
        for r in [2, 3] {
            assert_eq!(d.value(r).coeff(mono(&[r, 1])), 1);
            assert_eq!(d.value(r).coeff(mono(&[1, r])), -1);
            assert_eq!(d.value(r).num_terms(), 2);
        }
    }

    #[test]
    fn johnson_rejects_shallow_elements() {
        let e = endo_of(NamedGenerator::Xi(1, 2), 2).unwrap();
        assert!(matches!(
            johnson(&e, 2),
            Err(AutError::NotInFiltration { k: 2 })
        ));
    }

    #[test]
    fn johnson_is_additive_on_products() {
        let pairs = [
            (GroupWord::commutator(&nu(2, 1), &nu(2, 2)), GroupWord::commutator(&nu(3, 1), &nu(3, 2))),
            (GroupWord::commutator(&nu(3, 3), &nu(2, 1)), GroupWord::commutator(&nu(3, 2), &nu(2, 1))),
        ];
        for (wa, wb) in pairs {
            let a = evaluate(&wa, 3).unwrap();
            let b = evaluate(&wb, 3).unwrap();
            let sum = johnson(&a, 2).unwrap().add(&johnson(&b, 2).unwrap()).unwrap();
            let product = johnson(&a.compose(&b).unwrap(), 2).unwrap();
            assert_eq!(product, sum);
        }
    }

    #[test]
    fn johnson_intertwines_the_derivation_bracket() {
        // τ of a group commutator equals the bracket of the τ images,
        // on generator pairs of the rank-3 families
        let gens = [nu(2, 1), nu(2, 2), nu(3, 1), nu(3, 2), nu(3, 3), xi(1, 2), xi(3, 1)];
        for a in &gens {
            for b in &gens {
                let ea = evaluate(a, 3).unwrap();
                let eb = evaluate(b, 3).unwrap();
                let comm = evaluate(&GroupWord::commutator(a, b), 3).unwrap();
                if !andreadakis_member(&comm, 2).unwrap() {
                    continue;
                }
                let lhs = johnson(&comm, 2).unwrap();
                let rhs = der_bracket(&johnson(&ea, 1).unwrap(), &johnson(&eb, 1).unwrap()).unwrap();
                assert_eq!(lhs, rhs, "({a}, {b})");
            }
        }
    }

    #[test]
    fn johnson_is_equivariant_under_generator_permutations() {
        // conjugating by the transposition x1 <-> x3 permutes coordinates
        let n = 3;
        let perm = [3usize, 2, 1];
        let sigma = Endo::new(n, perm.iter().map(|&p| Word::generator(p)).collect()).unwrap();
        let sigma_inv = sigma.clone(); // a transposition is an involution

        for (word, k) in [
            (xi(1, 2), 1),
            (nu(3, 1), 1),
            (GroupWord::commutator(&xi(1, 2), &xi(2, 1)), 2),
        ] {
            let e = evaluate(&word, n).unwrap();
            let conj = sigma_inv.compose(&e).unwrap().compose(&sigma).unwrap();
            let d = johnson(&e, k).unwrap();
            let dc = johnson(&conj, k).unwrap();
            // expected value on x_i: relabel letters of the value on x_perm(i)
            for i in 1..=n {
                let mut expected = Tensor::zero(n, k + 1);
                for (m, c) in d.value(perm[i - 1]).iter() {
                    let letters: Vec<usize> =
                        m.letters().iter().map(|&l| perm[l - 1]).collect();
                    expected.add_term(Monomial::from_letters(&letters).unwrap(), c);
                }
                assert_eq!(dc.value(i), &expected, "{word} k={k} i={i}");
            }
        }
    }
}
