//! Basic commutators (Hall basis) of a free group, their canonical
//! ordering, and their realizations as group words and as tensors.
//!
//! A basic commutator is either a generator or a bracket `(c, d)` of earlier
//! basic commutators subject to the Hall conditions: `c > d` in the global
//! ordering, and if `c = (s, t)` then `d ≥ t`. Weight-k basic commutators
//! form a basis of the degree-k piece of the free Lie ring; their count is
//! given by the Witt formula.
//!
//! Generators are ordered `x_1 < x_2 < …`; within one weight class
//! commutators are ordered lexicographically by the order keys of their two
//! parts, which is the canonical order used everywhere in this crate.

use crate::series::Tensor;
use crate::word::{commutator, GenIndex, Word};
use std::fmt;

/// Möbius function by trial factorization; fine for the word lengths here.
fn mobius(mut n: u64) -> i64 {
    let mut mu = 1i64;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            mu = -mu;
        }
        p += 1;
    }
    if n > 1 {
        mu = -mu;
    }
    mu
}

/// Witt formula: the rank of the degree-`k` piece of the free Lie ring on
/// `n` generators, `(1/k) Σ_{d|k} μ(d) n^{k/d}`.
pub fn witt_rank(n: usize, k: usize) -> u64 {
    assert!(n >= 1 && k >= 1, "witt_rank requires n >= 1 and k >= 1");
    let mut sum: i128 = 0;
    for d in 1..=k as u64 {
        if k as u64 % d == 0 {
            let mu = mobius(d);
            if mu != 0 {
                sum += mu as i128 * (n as i128).pow((k as u64 / d) as u32);
            }
        }
    }
    debug_assert!(sum >= 0 && sum % k as i128 == 0);
    (sum / k as i128) as u64
}

#[derive(Clone, PartialEq, Eq, Debug)]
enum BcShape {
    Leaf(GenIndex),
    Node(Box<BasicCommutator>, Box<BasicCommutator>),
}

/// A basic commutator with its weight and its position in the global
/// ordering (1-based, counted across all weights for a fixed rank).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BasicCommutator {
    shape: BcShape,
    weight: usize,
    order_key: usize,
}

impl BasicCommutator {
    pub fn weight(&self) -> usize {
        self.weight
    }

    pub fn order_key(&self) -> usize {
        self.order_key
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self.shape, BcShape::Leaf(_))
    }

    pub fn leaf_index(&self) -> Option<usize> {
        match &self.shape {
            BcShape::Leaf(g) => Some(g.value()),
            BcShape::Node(..) => None,
        }
    }

    pub fn parts(&self) -> Option<(&BasicCommutator, &BasicCommutator)> {
        match &self.shape {
            BcShape::Leaf(_) => None,
            BcShape::Node(l, r) => Some((l, r)),
        }
    }

    /// Structural check of the defining conditions (used in tests).
    pub fn satisfies_hall_conditions(&self) -> bool {
        match &self.shape {
            BcShape::Leaf(_) => self.weight == 1,
            BcShape::Node(l, r) => {
                let cond_weight = self.weight == l.weight + r.weight;
                let cond_order = l.order_key > r.order_key;
                let cond_tail = match &l.shape {
                    BcShape::Leaf(_) => true,
                    BcShape::Node(_, t) => r.order_key >= t.order_key,
                };
                cond_weight
                    && cond_order
                    && cond_tail
                    && l.satisfies_hall_conditions()
                    && r.satisfies_hall_conditions()
            }
        }
    }
}

impl fmt::Display for BasicCommutator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.shape {
            BcShape::Leaf(g) => write!(f, "x{}", g.value()),
            BcShape::Node(l, r) => write!(f, "({l},{r})"),
        }
    }
}

/// All basic commutators on `x_1..x_n` of weights `1..=k_max`, indexed by
/// weight (entry 0 holds weight 1). Order keys run consecutively across the
/// weight classes.
pub fn hall_basis_through(n: usize, k_max: usize) -> Vec<Vec<BasicCommutator>> {
    assert!(n >= 1 && k_max >= 1);
    let mut levels: Vec<Vec<BasicCommutator>> = Vec::with_capacity(k_max);
    let mut next_key = 1usize;
    let leaves: Vec<BasicCommutator> = (1..=n)
        .map(|i| {
            let bc = BasicCommutator {
                shape: BcShape::Leaf(GenIndex::new(i)),
                weight: 1,
                order_key: next_key,
            };
            next_key += 1;
            bc
        })
        .collect();
    levels.push(leaves);

    for l in 2..=k_max {
        let mut candidates: Vec<(usize, usize, BasicCommutator)> = Vec::new();
        for wl in 1..l {
            let wr = l - wl;
            for left in &levels[wl - 1] {
                for right in &levels[wr - 1] {
                    if left.order_key <= right.order_key {
                        continue;
                    }
                    if let BcShape::Node(_, t) = &left.shape {
                        if right.order_key < t.order_key {
                            continue;
                        }
                    }
                    candidates.push((
                        left.order_key,
                        right.order_key,
                        BasicCommutator {
                            shape: BcShape::Node(Box::new(left.clone()), Box::new(right.clone())),
                            weight: l,
                            order_key: 0,
                        },
                    ));
                }
            }
        }
        candidates.sort_by_key(|(lk, rk, _)| (*lk, *rk));
        let level: Vec<BasicCommutator> = candidates
            .into_iter()
            .map(|(_, _, mut bc)| {
                bc.order_key = next_key;
                next_key += 1;
                bc
            })
            .collect();
        levels.push(level);
    }
    levels
}

/// The weight-`k` basic commutators on `x_1..x_n` in canonical order; the
/// count equals `witt_rank(n, k)`.
pub fn hall_basis(n: usize, k: usize) -> Vec<BasicCommutator> {
    hall_basis_through(n, k).pop().expect("k >= 1")
}

/// Recursive expansion into a reduced group word.
pub fn bc_to_word(c: &BasicCommutator) -> Word {
    match &c.shape {
        BcShape::Leaf(g) => Word::generator(g.value()),
        BcShape::Node(l, r) => commutator(&bc_to_word(l), &bc_to_word(r)),
    }
}

/// Recursive bracket `[a, b] = ab − ba` in tensor coordinates; the degree
/// equals the weight.
pub fn bc_to_tensor(c: &BasicCommutator, rank: usize) -> Tensor {
    match &c.shape {
        BcShape::Leaf(g) => Tensor::generator(rank, g.value()),
        BcShape::Node(l, r) => {
            Tensor::bracket(&bc_to_tensor(l, rank), &bc_to_tensor(r, rank)).expect("same rank")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{lie_class, Monomial};

    #[test]
    fn witt_rank_examples() {
        for n in 1..=6 {
            assert_eq!(witt_rank(n, 1), n as u64);
        }
        assert_eq!(witt_rank(3, 3), 8);
        assert_eq!(witt_rank(2, 6), 9);
        assert_eq!(witt_rank(3, 4), 18);
        assert_eq!(witt_rank(4, 6), 670);
    }

    #[test]
    fn hall_basis_weight_two_rank_three() {
        let basis = hall_basis(3, 2);
        let shown: Vec<String> = basis.iter().map(|c| c.to_string()).collect();
        assert_eq!(shown, vec!["(x2,x1)", "(x3,x1)", "(x3,x2)"]);
    }

    #[test]
    fn hall_basis_weight_three_rank_three() {
        let basis = hall_basis(3, 3);
        let shown: Vec<String> = basis.iter().map(|c| c.to_string()).collect();
        assert_eq!(
            shown,
            vec![
                "((x2,x1),x1)",
                "((x2,x1),x2)",
                "((x2,x1),x3)",
                "((x3,x1),x1)",
                "((x3,x1),x2)",
                "((x3,x1),x3)",
                "((x3,x2),x2)",
                "((x3,x2),x3)",
            ]
        );
        assert!(!shown.contains(&"((x3,x2),x1)".to_string()));
    }

    #[test]
    fn hall_basis_weight_three_rank_two() {
        let basis = hall_basis(2, 3);
        let shown: Vec<String> = basis.iter().map(|c| c.to_string()).collect();
        assert_eq!(shown, vec!["((x2,x1),x1)", "((x2,x1),x2)"]);
        assert_eq!(basis.len() as u64, witt_rank(2, 3));
    }

    #[test]
    fn counts_match_witt_and_structure_holds() {
        for n in 1..=4 {
            let levels = hall_basis_through(n, 5);
            for (i, level) in levels.iter().enumerate() {
                let k = i + 1;
                assert_eq!(level.len() as u64, witt_rank(n, k), "n={n} k={k}");
                for bc in level {
                    assert!(bc.satisfies_hall_conditions());
                    assert_eq!(bc.weight(), k);
                }
            }
            // order keys are globally consecutive
            let mut expected = 1;
            for level in &levels {
                for bc in level {
                    assert_eq!(bc.order_key(), expected);
                    expected += 1;
                }
            }
        }
    }

    #[test]
    fn bc_to_word_examples() {
        let leaves = hall_basis(3, 1);
        assert_eq!(bc_to_word(&leaves[0]), Word::generator(1));
        let w2 = hall_basis(3, 2);
        assert_eq!(bc_to_word(&w2[0]), "x2^-1 x1^-1 x2 x1".parse().unwrap());
        let w3 = hall_basis(2, 3);
        // ((x2,x1),x1) reduces to a length-10 word
        assert_eq!(bc_to_word(&w3[0]).len(), 10);
    }

    #[test]
    fn bc_to_tensor_examples() {
        let m = |ls: &[usize]| Monomial::from_letters(ls).unwrap();
        let leaves = hall_basis(3, 1);
        assert_eq!(bc_to_tensor(&leaves[0], 3), Tensor::generator(3, 1));

        let w2 = hall_basis(2, 2);
        let t = bc_to_tensor(&w2[0], 2);
        assert_eq!(t.coeff(m(&[2, 1])), 1);
        assert_eq!(t.coeff(m(&[1, 2])), -1);

        let w3 = hall_basis(2, 3);
        let t3 = bc_to_tensor(&w3[0], 2); // ((x2,x1),x1)
        assert_eq!(t3.coeff(m(&[2, 1, 1])), 1);
        assert_eq!(t3.coeff(m(&[1, 2, 1])), -2);
        assert_eq!(t3.coeff(m(&[1, 1, 2])), 1);
        assert_eq!(t3.num_terms(), 3);
    }

    #[test]
    fn words_and_tensors_agree_through_weight_four() {
        for n in 2..=3 {
            for k in 1..=4 {
                for bc in hall_basis(n, k) {
                    let via_word = lie_class(&bc_to_word(&bc), n, k).unwrap();
                    assert_eq!(via_word, bc_to_tensor(&bc, n), "n={n} k={k} c={bc}");
                }
            }
        }
    }
}
