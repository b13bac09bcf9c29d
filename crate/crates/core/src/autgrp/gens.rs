//! Named generator families and their evaluation to endomorphisms.
//!
//! `Xi(i,j)` conjugates `x_i` by `x_j`; `XiTriple(k,s,t)` multiplies `x_k`
//! by the commutator `(x_s, x_t)`; `Nu(p,i)` conjugates the first `p`
//! generators by `x_i` (with `Nu(1,1)` the identity, making the expression
//! of `Xi(i,j)` through `Nu` total); `Upper(p,i) = Xi(p+1, i)` labels the
//! triangular family `{Xi(i,j) : j < i}` by its almost-direct factors: the
//! p-th factor is the free group on the rank-(p+1) row, and conjugation by
//! earlier factors keeps each row-subgroup invariant.
//!
//! Every named generator carries a closed-form inverse, so words in named
//! generators evaluate without ever inverting a general endomorphism.

use super::AutError;
use crate::word::{commutator, Endo, Word};
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum NamedGenerator {
    /// `x_i ↦ x_j⁻¹ x_i x_j`, all other generators fixed; `i ≠ j`.
    Xi(usize, usize),
    /// `x_k ↦ x_k (x_s, x_t)`, all other generators fixed; `k, s, t`
    /// distinct.
    XiTriple(usize, usize, usize),
    /// `x_r ↦ x_i⁻¹ x_r x_i` for `r ≤ p`, fixed for `r > p`; `1 ≤ i ≤ p`.
    Nu(usize, usize),
    /// `x(p,i) = Xi(p+1, i)` with `1 ≤ i ≤ p ≤ n−1`.
    Upper(usize, usize),
}

impl NamedGenerator {
    fn validate(&self, n: usize) -> Result<(), AutError> {
        let ok = match *self {
            NamedGenerator::Xi(i, j) => i >= 1 && j >= 1 && i <= n && j <= n && i != j,
            NamedGenerator::XiTriple(k, s, t) => {
                let within = k >= 1 && s >= 1 && t >= 1 && k <= n && s <= n && t <= n;
                within && k != s && k != t && s != t
            }
            NamedGenerator::Nu(p, i) => (p == 1 && i == 1) || (p >= 2 && p <= n && i >= 1 && i <= p),
            NamedGenerator::Upper(p, i) => n >= 2 && p >= 1 && p <= n - 1 && i >= 1 && i <= p,
        };
        if ok {
            Ok(())
        } else {
            Err(AutError::Input(format!("{self} is invalid at rank {n}")))
        }
    }
}

impl fmt::Display for NamedGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            NamedGenerator::Xi(i, j) => write!(f, "xi({i},{j})"),
            NamedGenerator::XiTriple(k, s, t) => write!(f, "xiT({k},{s},{t})"),
            NamedGenerator::Nu(p, i) => write!(f, "nu({p},{i})"),
            NamedGenerator::Upper(p, i) => write!(f, "up({p},{i})"),
        }
    }
}

/// The defining endomorphism of a named generator at ambient rank `n`.
pub fn endo_of(g: NamedGenerator, n: usize) -> Result<Endo, AutError> {
    build_endo(g, n, false)
}

/// The closed-form inverse of a named generator at ambient rank `n`.
pub fn endo_of_inverse(g: NamedGenerator, n: usize) -> Result<Endo, AutError> {
    build_endo(g, n, true)
}

fn build_endo(g: NamedGenerator, n: usize, inverse: bool) -> Result<Endo, AutError> {
    g.validate(n)?;
    let conj = |target: usize, by: usize, inv: bool| -> Word {
        let x = Word::generator(target);
        let c = Word::generator(by);
        if inv {
            // x ↦ c x c⁻¹
            c.mul(&x).mul(&c.inverse())
        } else {
            // x ↦ c⁻¹ x c
            c.inverse().mul(&x).mul(&c)
        }
    };
    let mut images: Vec<Word> = (1..=n).map(Word::generator).collect();
    match g {
        NamedGenerator::Xi(i, j) => {
            images[i - 1] = conj(i, j, inverse);
        }
        NamedGenerator::XiTriple(k, s, t) => {
            let c = if inverse {
                commutator(&Word::generator(t), &Word::generator(s))
            } else {
                commutator(&Word::generator(s), &Word::generator(t))
            };
            images[k - 1] = Word::generator(k).mul(&c);
        }
        NamedGenerator::Nu(p, i) => {
            if !(p == 1 && i == 1) {
                for r in 1..=p {
                    images[r - 1] = conj(r, i, inverse);
                }
            }
        }
        NamedGenerator::Upper(p, i) => {
            return build_endo(NamedGenerator::Xi(p + 1, i), n, inverse);
        }
    }
    Endo::new(n, images).map_err(AutError::from)
}

/// A word in named generators with nonzero integer exponents.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct GroupWord {
    factors: Vec<(NamedGenerator, i64)>,
}

impl GroupWord {
    pub fn identity() -> GroupWord {
        GroupWord::default()
    }

    pub fn generator(g: NamedGenerator) -> GroupWord {
        GroupWord {
            factors: vec![(g, 1)],
        }
    }

    pub fn from_factors(factors: Vec<(NamedGenerator, i64)>) -> Result<GroupWord, AutError> {
        if factors.iter().any(|&(_, e)| e == 0) {
            return Err(AutError::Input("zero exponent in group word".into()));
        }
        Ok(GroupWord { factors })
    }

    pub fn factors(&self) -> &[(NamedGenerator, i64)] {
        &self.factors
    }

    pub fn mul(&self, other: &GroupWord) -> GroupWord {
        GroupWord {
            factors: self
                .factors
                .iter()
                .chain(other.factors.iter())
                .copied()
                .collect(),
        }
    }

    pub fn inverse(&self) -> GroupWord {
        GroupWord {
            factors: self
                .factors
                .iter()
                .rev()
                .map(|&(g, e)| (g, -e))
                .collect(),
        }
    }

    pub fn pow(&self, e: i64) -> GroupWord {
        if e == 0 {
            return GroupWord::identity();
        }
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut out = GroupWord::identity();
        for _ in 0..e.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    /// `(a, b) = a⁻¹ b⁻¹ a b` as a group word.
    pub fn commutator(a: &GroupWord, b: &GroupWord) -> GroupWord {
        a.inverse().mul(&b.inverse()).mul(a).mul(b)
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for &(g, e) in &self.factors {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{g}")?;
            } else {
                write!(f, "{g}^{e}")?;
            }
        }
        Ok(())
    }
}

impl std::str::FromStr for GroupWord {
    type Err = AutError;

    /// Parses `"nu(3,1)^-1 xi(2,3) xiT(1,2,3) up(2,1)"`; `""`/`"1"` is the
    /// identity.
    fn from_str(s: &str) -> Result<GroupWord, AutError> {
        let mut factors = Vec::new();
        for tok in s.split_whitespace() {
            if tok == "1" {
                continue;
            }
            let (head, exp) = match tok.rsplit_once('^') {
                Some((h, e)) if !e.contains(')') => {
                    let exp: i64 = e
                        .parse()
                        .map_err(|_| AutError::Input(format!("bad exponent in `{tok}`")))?;
                    (h, exp)
                }
                _ => (tok, 1),
            };
            if exp == 0 {
                return Err(AutError::Input(format!("zero exponent in `{tok}`")));
            }
            let (name, args) = head
                .split_once('(')
                .ok_or_else(|| AutError::Input(format!("bad token `{tok}`")))?;
            let args = args
                .strip_suffix(')')
                .ok_or_else(|| AutError::Input(format!("bad token `{tok}`")))?;
            let nums: Vec<usize> = args
                .split(',')
                .map(|a| a.trim().parse::<usize>())
                .collect::<Result<_, _>>()
                .map_err(|_| AutError::Input(format!("bad indices in `{tok}`")))?;
            let g = match (name, nums.as_slice()) {
                ("xi", &[i, j]) => NamedGenerator::Xi(i, j),
                ("xiT", &[k, s, t]) => NamedGenerator::XiTriple(k, s, t),
                ("nu", &[p, i]) => NamedGenerator::Nu(p, i),
                ("up", &[p, i]) => NamedGenerator::Upper(p, i),
                _ => return Err(AutError::Input(format!("unknown generator `{tok}`"))),
            };
            factors.push((g, exp));
        }
        GroupWord::from_factors(factors)
    }
}

/// Evaluates a group word to an endomorphism at ambient rank `n`. Factors
/// multiply left to right; negative exponents use the closed-form inverses.
pub fn evaluate(w: &GroupWord, n: usize) -> Result<Endo, AutError> {
    let mut acc = Endo::identity(n);
    for &(g, e) in w.factors() {
        let step = if e < 0 {
            endo_of_inverse(g, n)?
        } else {
            endo_of(g, n)?
        };
        for _ in 0..e.unsigned_abs() {
            acc = acc.compose(&step)?;
        }
    }
    Ok(acc)
}

/// One of the subgroup families the rank pipelines understand.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Family {
    /// Partial inner automorphisms, generated by `nu(p,i)`.
    PartialInner,
    /// The full basis-conjugating family, generated by all `xi(i,j)`.
    McCool,
    /// The upper-triangular subfamily, generated by `up(p,i)`.
    UpperMcCool,
    Custom(Vec<NamedGenerator>),
}

/// A generator family at a fixed ambient rank.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupSpec {
    pub family: Family,
    pub n: usize,
}

impl GroupSpec {
    pub fn partial_inner(n: usize) -> GroupSpec {
        GroupSpec {
            family: Family::PartialInner,
            n,
        }
    }

    pub fn mccool(n: usize) -> GroupSpec {
        GroupSpec {
            family: Family::McCool,
            n,
        }
    }

    pub fn upper_mccool(n: usize) -> GroupSpec {
        GroupSpec {
            family: Family::UpperMcCool,
            n,
        }
    }

    /// The family's generator list in canonical order.
    pub fn generators(&self) -> Vec<NamedGenerator> {
        match &self.family {
            Family::PartialInner => {
                let mut v = Vec::new();
                for p in 2..=self.n {
                    for i in 1..=p {
                        v.push(NamedGenerator::Nu(p, i));
                    }
                }
                v
            }
            Family::McCool => {
                let mut v = Vec::new();
                for i in 1..=self.n {
                    for j in 1..=self.n {
                        if i != j {
                            v.push(NamedGenerator::Xi(i, j));
                        }
                    }
                }
                v
            }
            Family::UpperMcCool => {
                let mut v = Vec::new();
                for p in 1..self.n {
                    for i in 1..=p {
                        v.push(NamedGenerator::Upper(p, i));
                    }
                }
                v
            }
            Family::Custom(gens) => gens.clone(),
        }
    }
}
