//! Relation verification suites: every schema instance is evaluated on
//! both sides as an endomorphism and compared syntactically on reduced
//! generator images.
//!
//! The suites double as the calibration witness for the composition
//! convention: with products applied right factor first, every suite below
//! passes at each admissible rank.

use super::gens::{evaluate, GroupWord, NamedGenerator};
use super::{AutError, SizeGuard};
use crate::word::Endo;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Suite {
    /// Defining relations of the basis-conjugating family.
    Mccool,
    /// Conjugation formulas among the `xi` generators.
    ConjFormulas,
    /// Presentation relations of the partial inner family.
    InPresentation,
    /// Presentation relations of the upper-triangular family.
    UpperPresentation,
    /// Expression of `xi(i,j)` through `nu` generators for `j < i`.
    EmbeddingRemark,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Mccool,
        Suite::ConjFormulas,
        Suite::InPresentation,
        Suite::UpperPresentation,
        Suite::EmbeddingRemark,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Mccool => "mccool",
            Suite::ConjFormulas => "conj_formulas",
            Suite::InPresentation => "in_presentation",
            Suite::UpperPresentation => "upper_presentation",
            Suite::EmbeddingRemark => "embedding_remark",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl FromStr for Suite {
    type Err = AutError;

    fn from_str(s: &str) -> Result<Suite, AutError> {
        match s {
            "mccool" => Ok(Suite::Mccool),
            "conj_formulas" => Ok(Suite::ConjFormulas),
            "in_presentation" => Ok(Suite::InPresentation),
            "upper_presentation" => Ok(Suite::UpperPresentation),
            "embedding_remark" => Ok(Suite::EmbeddingRemark),
            other => Err(AutError::Input(format!("unknown suite `{other}`"))),
        }
    }
}

/// Outcome of a suite run; `failures` must be empty for the relations to
/// hold.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SuiteReport {
    pub suite: Suite,
    pub n: usize,
    pub instances: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

struct Checker {
    n: usize,
    instances: usize,
    failures: Vec<String>,
}

impl Checker {
    fn new(n: usize) -> Checker {
        Checker {
            n,
            instances: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, label: String, lhs: &GroupWord, rhs: &GroupWord) -> Result<(), AutError> {
        self.instances += 1;
        let l = evaluate(lhs, self.n)?;
        let r = evaluate(rhs, self.n)?;
        if l != r {
            self.failures.push(format!("{label}: {lhs} != {rhs}"));
        }
        Ok(())
    }

    fn check_endo(&mut self, label: String, lhs: &GroupWord, rhs: &Endo) -> Result<(), AutError> {
        self.instances += 1;
        let l = evaluate(lhs, self.n)?;
        if &l != rhs {
            self.failures.push(format!("{label}: {lhs} does not match"));
        }
        Ok(())
    }
}

fn xi(i: usize, j: usize) -> GroupWord {
    GroupWord::generator(NamedGenerator::Xi(i, j))
}

fn nu(p: usize, i: usize) -> GroupWord {
    GroupWord::generator(NamedGenerator::Nu(p, i))
}

fn up(p: usize, i: usize) -> GroupWord {
    GroupWord::generator(NamedGenerator::Upper(p, i))
}

fn mccool(n: usize) -> Result<Checker, AutError> {
    let mut c = Checker::new(n);
    let one = GroupWord::identity();
    // disjoint-index commutation, unordered pairs of ordered pairs
    let mut pairs = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                pairs.push((i, j));
            }
        }
    }
    for (a, &(i, j)) in pairs.iter().enumerate() {
        for &(s, t) in pairs.iter().skip(a + 1) {
            if i != s && i != t && j != s && j != t {
                c.check(
                    format!("disjoint ({i},{j}),({s},{t})"),
                    &GroupWord::commutator(&xi(i, j), &xi(s, t)),
                    &one,
                )?;
            }
        }
    }
    // common conjugator, unordered {i,k}
    for j in 1..=n {
        for i in 1..=n {
            for k in i + 1..=n {
                if i != j && k != j {
                    c.check(
                        format!("same conjugator ({i},{j}),({k},{j})"),
                        &GroupWord::commutator(&xi(i, j), &xi(k, j)),
                        &one,
                    )?;
                }
            }
        }
    }
    // (xi(i,j)·xi(k,j), xi(i,k)) = 1, ordered triples
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                if i != j && i != k && j != k {
                    c.check(
                        format!("product ({i},{j},{k})"),
                        &GroupWord::commutator(&xi(i, j).mul(&xi(k, j)), &xi(i, k)),
                        &one,
                    )?;
                }
            }
        }
    }
    Ok(c)
}

fn conj_formulas(n: usize) -> Result<Checker, AutError> {
    let mut c = Checker::new(n);
    for v in [1i64, -1] {
        // conjugation by xi(i,j)^v of a disjoint generator
        for i in 1..=n {
            for j in 1..=n {
                if i == j {
                    continue;
                }
                for k in 1..=n {
                    for l in 1..=n {
                        if k == l || k == i || k == j || l == i || l == j {
                            continue;
                        }
                        let lhs = xi(i, j).pow(-v).mul(&xi(k, l)).mul(&xi(i, j).pow(v));
                        c.check(format!("fix disjoint v={v} ({i},{j};{k},{l})"), &lhs, &xi(k, l))?;
                    }
                }
            }
        }
        for i in 1..=n {
            for j in 1..=n {
                for k in 1..=n {
                    if i == j || i == k || j == k {
                        continue;
                    }
                    let conj = |mid: GroupWord| xi(i, j).pow(-v).mul(&mid).mul(&xi(i, j).pow(v));
                    // fixes xi(k,j)
                    c.check(
                        format!("fix same column v={v} ({i},{j},{k})"),
                        &conj(xi(k, j)),
                        &xi(k, j),
                    )?;
                    // moves xi(k,i)
                    c.check(
                        format!("twist ({k},{i}) v={v} ({i},{j},{k})"),
                        &conj(xi(k, i)),
                        &xi(k, j).pow(v).mul(&xi(k, i)).mul(&xi(k, j).pow(-v)),
                    )?;
                    // moves xi(i,k)
                    c.check(
                        format!("twist ({i},{k}) v={v} ({i},{j},{k})"),
                        &conj(xi(i, k)),
                        &xi(k, j).pow(v).mul(&xi(i, k)).mul(&xi(k, j).pow(-v)),
                    )?;
                    // moves xi(j,k) by a commutator correction
                    c.check(
                        format!("twist ({j},{k}) v={v} ({i},{j},{k})"),
                        &conj(xi(j, k)),
                        &GroupWord::commutator(&xi(k, j).pow(-v), &xi(i, k)).mul(&xi(j, k)),
                    )?;
                }
            }
        }
    }
    Ok(c)
}

fn in_presentation(n: usize) -> Result<Checker, AutError> {
    let mut c = Checker::new(n);
    let one = GroupWord::identity();
    for p in 2..=n {
        for q in 2..p {
            for i in 1..=p {
                for j in 1..=q {
                    // the three schema conditions partition the index set;
                    // matched_by guards against silent overlap
                    let mut matched_by = 0;
                    let lhs = GroupWord::commutator(&nu(p, i), &nu(q, j));
                    if j == i {
                        matched_by += 1;
                        c.check(format!("equal index p={p} q={q} i={i}"), &lhs, &one)?;
                    }
                    if i > q {
                        matched_by += 1;
                        c.check(format!("deep index p={p} q={q} i={i} j={j}"), &lhs, &one)?;
                    }
                    if j != i && i <= q {
                        matched_by += 1;
                        c.check(
                            format!("fold p={p} q={q} i={i} j={j}"),
                            &lhs,
                            &GroupWord::commutator(&nu(p, i), &nu(p, j)),
                        )?;
                    }
                    if matched_by != 1 {
                        c.failures.push(format!(
                            "schema overlap at p={p} q={q} i={i} j={j}: {matched_by} lines"
                        ));
                    }
                }
            }
        }
    }
    Ok(c)
}

// An acting generator x(q,j) moves x(p,i) exactly when the conjugating
// letter of x(p,i) is the row of factor q, i.e. when i = q + 1.
fn upper_presentation(n: usize) -> Result<Checker, AutError> {
    let mut c = Checker::new(n);
    let one = GroupWord::identity();
    for p in 2..n {
        for q in 1..p {
            for i in 1..=p {
                for j in 1..=q {
                    let lhs = GroupWord::commutator(&up(p, i), &up(q, j));
                    if i == q + 1 {
                        let rhs = GroupWord::commutator(&up(p, i), &up(p, j).inverse());
                        c.check(format!("twist p={p} q={q} i={i} j={j}"), &lhs, &rhs)?;
                    } else {
                        c.check(format!("commute p={p} q={q} i={i} j={j}"), &lhs, &one)?;
                    }
                }
            }
        }
    }
    Ok(c)
}

fn embedding_remark(n: usize) -> Result<Checker, AutError> {
    let mut c = Checker::new(n);
    for i in 2..=n {
        for j in 1..i {
            let word = nu(i - 1, j).inverse().mul(&nu(i, j));
            let rhs = super::gens::endo_of(NamedGenerator::Xi(i, j), n)?;
            c.check_endo(format!("xi({i},{j}) via nu"), &word, &rhs)?;
        }
    }
    Ok(c)
}

/// Runs one relation suite at rank `n`; every schema instance must evaluate
/// to equal endomorphisms.
pub fn verify_relations(suite: Suite, n: usize, guard: &SizeGuard) -> Result<SuiteReport, AutError> {
    if n < 2 {
        return Err(AutError::Input(format!("rank must be at least 2, got {n}")));
    }
    guard.admit(n, 1)?;
    let checker = match suite {
        Suite::Mccool => mccool(n)?,
        Suite::ConjFormulas => conj_formulas(n)?,
        Suite::InPresentation => in_presentation(n)?,
        Suite::UpperPresentation => upper_presentation(n)?,
        Suite::EmbeddingRemark => embedding_remark(n)?,
    };
    Ok(SuiteReport {
        suite,
        n,
        instances: checker.instances,
        failures: checker.failures,
    })
}
