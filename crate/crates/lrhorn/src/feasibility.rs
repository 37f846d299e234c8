//! The four Horn-type decision procedures.
//!
//! Each procedure decides whether the symmetric Littlewood-Richardson
//! number of a triple is non-zero by checking a homogeneity condition plus
//! a family of linear inequalities indexed by feasible triples in smaller
//! rectangles. Verdicts carry witnesses: every violated constraint, with
//! its indexing data and both sides' values.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::oracle::Oracle;
use crate::partition::{binomial, enumerate_partitions, Partition, Rectangle, Staircase, StrictPartition};
use crate::statistics::{inner_corner_stat, outer_corner_stat, rows_cols_stat, rows_stat};

/// How a feasible-triple table is constructed: by filtering the oracle's
/// coefficients, or by the inequality recursion itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TableMethod {
    Oracle,
    Recursive,
}

/// The inequality systems on rectangles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RectSystem {
    Classical,
    Symmetric,
}

impl RectSystem {
    pub fn name(self) -> &'static str {
        match self {
            RectSystem::Classical => "classical",
            RectSystem::Symmetric => "symmetric",
        }
    }
}

/// The inequality systems on staircases.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StairSystem {
    TypeC,
    TypeD,
}

impl StairSystem {
    pub fn name(self) -> &'static str {
        match self {
            StairSystem::TypeC => "type-c",
            StairSystem::TypeD => "type-d",
        }
    }
}

/// All ordered triples (α, β, γ) ⊂ r×s whose symmetric Littlewood-Richardson
/// number is non-zero. Closed under the six permutations of each triple;
/// every listed triple satisfies |α|+|β|+|γ| = r·s.
#[derive(Debug, Clone)]
pub struct FeasibleTripleTable {
    rows: u32,
    cols: u32,
    method: TableMethod,
    triples: Vec<(Partition, Partition, Partition)>,
}

impl FeasibleTripleTable {
    pub fn rows(&self) -> u32 {
        self.rows
    }

    pub fn cols(&self) -> u32 {
        self.cols
    }

    pub fn method(&self) -> TableMethod {
        self.method
    }

    pub fn triples(&self) -> &[(Partition, Partition, Partition)] {
        &self.triples
    }

    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }
}

/// One constraint of an inequality system, before any triple is evaluated:
/// the rank r, the indexing triple(s), and the right-hand bound.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InequalityDescriptor {
    pub r: u32,
    pub triples: Vec<(Partition, Partition, Partition)>,
    pub bound: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WitnessKind {
    Homogeneity,
    Inequality,
}

/// A violated constraint: for homogeneity, `lhs` is the weight sum and
/// `bound` the ambient box count (violated when unequal); for inequalities,
/// `lhs` exceeded `bound`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Witness {
    pub kind: WitnessKind,
    pub r: u32,
    pub triples: Vec<(Partition, Partition, Partition)>,
    pub lhs: u64,
    pub bound: u64,
}

/// Outcome of a feasibility check. `feasible` is true exactly when the
/// witness list is empty.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FeasibilityVerdict {
    pub feasible: bool,
    pub witnesses: Vec<Witness>,
}

impl FeasibilityVerdict {
    fn from_witnesses(witnesses: Vec<Witness>) -> Self {
        FeasibilityVerdict {
            feasible: witnesses.is_empty(),
            witnesses,
        }
    }
}

/// Options shared by the decision procedures.
#[derive(Debug, Clone, Copy)]
pub struct CheckOptions {
    /// Where the indexing tables come from. The equality of the two methods
    /// is a theorem and is enforced by tests, not assumed.
    pub tables: TableMethod,
    /// Stop at the first violated constraint instead of collecting all of
    /// them.
    pub fail_fast: bool,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            tables: TableMethod::Oracle,
            fail_fast: false,
        }
    }
}

/// Decision procedures with memoized feasible-triple tables and a shared
/// coefficient oracle. Tables are immutable once built; concurrent queries
/// are safe.
#[derive(Default)]
pub struct HornEngine {
    oracle: Oracle,
    tables: Mutex<HashMap<(u32, u32, TableMethod), Arc<FeasibleTripleTable>>>,
}

impl HornEngine {
    pub fn new() -> Self {
        HornEngine::default()
    }

    pub fn oracle(&self) -> &Oracle {
        &self.oracle
    }

    /// The table of feasible ordered triples in r×s, memoized per
    /// (r, s, method).
    pub fn feasible_triples(
        &self,
        rows: u32,
        cols: u32,
        method: TableMethod,
    ) -> Result<Arc<FeasibleTripleTable>, Error> {
        let key = (rows, cols, method);
        if let Some(hit) = self.tables.lock().unwrap().get(&key) {
            return Ok(Arc::clone(hit));
        }
        // Build outside the lock: the recursive method re-enters this
        // function for smaller shapes.
        let rect = Rectangle::new(rows, cols)?;
        let shapes: Vec<Partition> = enumerate_partitions(rect).collect();
        let mut triples = Vec::new();
        for a in &shapes {
            for b in &shapes {
                for c in &shapes {
                    if a.weight() + b.weight() + c.weight() != rect.area() {
                        continue;
                    }
                    let feasible = match method {
                        TableMethod::Oracle => self.oracle.sym_a(a, b, c, rect)? != 0,
                        TableMethod::Recursive => {
                            let opts = CheckOptions {
                                tables: TableMethod::Recursive,
                                fail_fast: true,
                            };
                            self.classical_horn_feasible(a, b, c, rect, &opts)?.feasible
                        }
                    };
                    if feasible {
                        triples.push((a.clone(), b.clone(), c.clone()));
                    }
                }
            }
        }
        let table = Arc::new(FeasibleTripleTable {
            rows,
            cols,
            method,
            triples,
        });
        self.tables
            .lock()
            .unwrap()
            .insert(key, Arc::clone(&table));
        Ok(table)
    }

    /// Classical Horn check on λ, μ, ν ⊂ n×m: homogeneity
    /// |λ|+|μ|+|ν| = nm, and for every 0 < r < n and every feasible
    /// (α,β,γ) ⊂ r×(n−r),
    /// |λ|_α + |μ|_β + |ν|_γ ≤ (n−r)·m.
    pub fn classical_horn_feasible(
        &self,
        lambda: &Partition,
        mu: &Partition,
        nu: &Partition,
        rect: Rectangle,
        opts: &CheckOptions,
    ) -> Result<FeasibilityVerdict, Error> {
        check_rect_triple(lambda, mu, nu, rect)?;
        let (n, m) = (rect.rows(), rect.cols());
        let mut witnesses = Vec::new();
        if !check_homogeneity(lambda.weight() + mu.weight() + nu.weight(), rect.area(), &mut witnesses)
            && opts.fail_fast
        {
            return Ok(FeasibilityVerdict::from_witnesses(witnesses));
        }
        'scan: for r in 1..n {
            let table = self.feasible_triples(r, n - r, opts.tables)?;
            let bound = u64::from(n - r) * u64::from(m);
            for (alpha, beta, gamma) in table.triples() {
                let lhs = rows_stat(lambda, rect, alpha, r)?
                    + rows_stat(mu, rect, beta, r)?
                    + rows_stat(nu, rect, gamma, r)?;
                if lhs > bound {
                    witnesses.push(Witness {
                        kind: WitnessKind::Inequality,
                        r,
                        triples: vec![(alpha.clone(), beta.clone(), gamma.clone())],
                        lhs,
                        bound,
                    });
                    if opts.fail_fast {
                        break 'scan;
                    }
                }
            }
        }
        Ok(FeasibilityVerdict::from_witnesses(witnesses))
    }

    /// Symmetric Horn check on λ, μ, ν ⊂ n×m: homogeneity, and for every
    /// 0 < r < min(n,m) and every pair of feasible triples
    /// (α,β,γ) ⊂ r×(n−r), (α′,β′,γ′) ⊂ r×(m−r),
    /// |λ|_{α,α′} + |μ|_{β,β′} + |ν|_{γ,γ′} ≤ (n−r)(m−r).
    pub fn symmetric_horn_feasible(
        &self,
        lambda: &Partition,
        mu: &Partition,
        nu: &Partition,
        rect: Rectangle,
        opts: &CheckOptions,
    ) -> Result<FeasibilityVerdict, Error> {
        check_rect_triple(lambda, mu, nu, rect)?;
        let (n, m) = (rect.rows(), rect.cols());
        let mut witnesses = Vec::new();
        if !check_homogeneity(lambda.weight() + mu.weight() + nu.weight(), rect.area(), &mut witnesses)
            && opts.fail_fast
        {
            return Ok(FeasibilityVerdict::from_witnesses(witnesses));
        }
        'scan: for r in 1..n.min(m) {
            let row_table = self.feasible_triples(r, n - r, opts.tables)?;
            let col_table = self.feasible_triples(r, m - r, opts.tables)?;
            let bound = u64::from(n - r) * u64::from(m - r);
            for (alpha, beta, gamma) in row_table.triples() {
                for (alpha_p, beta_p, gamma_p) in col_table.triples() {
                    let lhs = rows_cols_stat(lambda, rect, alpha, alpha_p, r)?
                        + rows_cols_stat(mu, rect, beta, beta_p, r)?
                        + rows_cols_stat(nu, rect, gamma, gamma_p, r)?;
                    if lhs > bound {
                        witnesses.push(Witness {
                            kind: WitnessKind::Inequality,
                            r,
                            triples: vec![
                                (alpha.clone(), beta.clone(), gamma.clone()),
                                (alpha_p.clone(), beta_p.clone(), gamma_p.clone()),
                            ],
                            lhs,
                            bound,
                        });
                        if opts.fail_fast {
                            break 'scan;
                        }
                    }
                }
            }
        }
        Ok(FeasibilityVerdict::from_witnesses(witnesses))
    }

    /// Inner-corner check on strict λ, μ, ν ⊂ Λ_n: homogeneity
    /// |λ|+|μ|+|ν| = n(n+1)/2, and for every 0 < r < n and every feasible
    /// (α,β,γ) ⊂ r×(n−r),
    /// [λ]_α + [μ]_β + [ν]_γ ≤ binomial(n+1−r, 2).
    pub fn type_c_feasible(
        &self,
        lambda: &StrictPartition,
        mu: &StrictPartition,
        nu: &StrictPartition,
        stair: Staircase,
        opts: &CheckOptions,
    ) -> Result<FeasibilityVerdict, Error> {
        check_stair_triple(lambda, mu, nu, stair)?;
        let n = stair.side();
        let mut witnesses = Vec::new();
        if !check_homogeneity(
            lambda.weight() + mu.weight() + nu.weight(),
            stair.weight(),
            &mut witnesses,
        ) && opts.fail_fast
        {
            return Ok(FeasibilityVerdict::from_witnesses(witnesses));
        }
        'scan: for r in 1..n {
            let table = self.feasible_triples(r, n - r, opts.tables)?;
            let bound = binomial(u64::from(n + 1 - r), 2)?;
            for (alpha, beta, gamma) in table.triples() {
                let lhs = inner_corner_stat(lambda, stair, alpha, r)?
                    + inner_corner_stat(mu, stair, beta, r)?
                    + inner_corner_stat(nu, stair, gamma, r)?;
                if lhs > bound {
                    witnesses.push(Witness {
                        kind: WitnessKind::Inequality,
                        r,
                        triples: vec![(alpha.clone(), beta.clone(), gamma.clone())],
                        lhs,
                        bound,
                    });
                    if opts.fail_fast {
                        break 'scan;
                    }
                }
            }
        }
        Ok(FeasibilityVerdict::from_witnesses(witnesses))
    }

    /// Outer-corner check on strict λ, μ, ν ⊂ Λ_n: homogeneity, and for
    /// every even r with 0 < r < n+1 and every feasible
    /// (α,β,γ) ⊂ r×(n+1−r),
    /// {λ}_α + {μ}_β + {ν}_γ ≤ binomial(n+1−r, 2).
    pub fn type_d_feasible(
        &self,
        lambda: &StrictPartition,
        mu: &StrictPartition,
        nu: &StrictPartition,
        stair: Staircase,
        opts: &CheckOptions,
    ) -> Result<FeasibilityVerdict, Error> {
        check_stair_triple(lambda, mu, nu, stair)?;
        let n = stair.side();
        let mut witnesses = Vec::new();
        if !check_homogeneity(
            lambda.weight() + mu.weight() + nu.weight(),
            stair.weight(),
            &mut witnesses,
        ) && opts.fail_fast
        {
            return Ok(FeasibilityVerdict::from_witnesses(witnesses));
        }
        'scan: for r in (2..=n).step_by(2) {
            let table = self.feasible_triples(r, n + 1 - r, opts.tables)?;
            let bound = binomial(u64::from(n + 1 - r), 2)?;
            for (alpha, beta, gamma) in table.triples() {
                let lhs = outer_corner_stat(lambda, stair, alpha, r)?
                    + outer_corner_stat(mu, stair, beta, r)?
                    + outer_corner_stat(nu, stair, gamma, r)?;
                if lhs > bound {
                    witnesses.push(Witness {
                        kind: WitnessKind::Inequality,
                        r,
                        triples: vec![(alpha.clone(), beta.clone(), gamma.clone())],
                        lhs,
                        bound,
                    });
                    if opts.fail_fast {
                        break 'scan;
                    }
                }
            }
        }
        Ok(FeasibilityVerdict::from_witnesses(witnesses))
    }

    /// Verdict taken directly from the coefficient oracle. When the triple
    /// is infeasible, witnesses are found by the matching inequality system
    /// (classical Horn); a zero coefficient with no violated constraint is
    /// an internal inconsistency.
    pub fn oracle_rect_verdict(
        &self,
        lambda: &Partition,
        mu: &Partition,
        nu: &Partition,
        rect: Rectangle,
        opts: &CheckOptions,
    ) -> Result<FeasibilityVerdict, Error> {
        if self.oracle.sym_a(lambda, mu, nu, rect)? != 0 {
            return Ok(FeasibilityVerdict::from_witnesses(Vec::new()));
        }
        let verdict = self.classical_horn_feasible(lambda, mu, nu, rect, opts)?;
        if verdict.feasible {
            return Err(Error::Internal(
                "zero coefficient but no violated Horn constraint".to_string(),
            ));
        }
        Ok(verdict)
    }

    /// Staircase analogue of [`HornEngine::oracle_rect_verdict`], with
    /// witnesses from the inner-corner system.
    pub fn oracle_staircase_verdict(
        &self,
        lambda: &StrictPartition,
        mu: &StrictPartition,
        nu: &StrictPartition,
        stair: Staircase,
        opts: &CheckOptions,
    ) -> Result<FeasibilityVerdict, Error> {
        if self.oracle.sym_c(lambda, mu, nu, stair)? != 0 {
            return Ok(FeasibilityVerdict::from_witnesses(Vec::new()));
        }
        let verdict = self.type_c_feasible(lambda, mu, nu, stair, opts)?;
        if verdict.feasible {
            return Err(Error::Internal(
                "zero coefficient but no violated inner-corner constraint".to_string(),
            ));
        }
        Ok(verdict)
    }

    /// Every inequality a rectangle system quantifies over, without
    /// evaluating any triple.
    pub fn list_rect_inequalities(
        &self,
        system: RectSystem,
        rect: Rectangle,
        method: TableMethod,
    ) -> Result<Vec<InequalityDescriptor>, Error> {
        let (n, m) = (rect.rows(), rect.cols());
        let mut out = Vec::new();
        match system {
            RectSystem::Classical => {
                for r in 1..n {
                    let table = self.feasible_triples(r, n - r, method)?;
                    let bound = u64::from(n - r) * u64::from(m);
                    for triple in table.triples() {
                        out.push(InequalityDescriptor {
                            r,
                            triples: vec![triple.clone()],
                            bound,
                        });
                    }
                }
            }
            RectSystem::Symmetric => {
                for r in 1..n.min(m) {
                    let row_table = self.feasible_triples(r, n - r, method)?;
                    let col_table = self.feasible_triples(r, m - r, method)?;
                    let bound = u64::from(n - r) * u64::from(m - r);
                    for row_triple in row_table.triples() {
                        for col_triple in col_table.triples() {
                            out.push(InequalityDescriptor {
                                r,
                                triples: vec![row_triple.clone(), col_triple.clone()],
                                bound,
                            });
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// Every inequality a staircase system quantifies over.
    pub fn list_staircase_inequalities(
        &self,
        system: StairSystem,
        stair: Staircase,
        method: TableMethod,
    ) -> Result<Vec<InequalityDescriptor>, Error> {
        let n = stair.side();
        let mut out = Vec::new();
        let ranks: Vec<u32> = match system {
            StairSystem::TypeC => (1..n).collect(),
            StairSystem::TypeD => (2..=n).step_by(2).collect(),
        };
        for r in ranks {
            let cols = match system {
                StairSystem::TypeC => n - r,
                StairSystem::TypeD => n + 1 - r,
            };
            let table = self.feasible_triples(r, cols, method)?;
            let bound = binomial(u64::from(n + 1 - r), 2)?;
            for triple in table.triples() {
                out.push(InequalityDescriptor {
                    r,
                    triples: vec![triple.clone()],
                    bound,
                });
            }
        }
        Ok(out)
    }
}

fn check_homogeneity(total: u64, expected: u64, witnesses: &mut Vec<Witness>) -> bool {
    if total == expected {
        return true;
    }
    witnesses.push(Witness {
        kind: WitnessKind::Homogeneity,
        r: 0,
        triples: Vec::new(),
        lhs: total,
        bound: expected,
    });
    false
}

fn check_rect_triple(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    rect: Rectangle,
) -> Result<(), Error> {
    for part in [lambda, mu, nu] {
        if !part.fits_in(rect) {
            return Err(Error::NotContained {
                partition: part.to_string(),
                shape: rect.to_string(),
            });
        }
    }
    Ok(())
}

fn check_stair_triple(
    lambda: &StrictPartition,
    mu: &StrictPartition,
    nu: &StrictPartition,
    stair: Staircase,
) -> Result<(), Error> {
    for part in [lambda, mu, nu] {
        if !part.fits_in(stair) {
            return Err(Error::NotContained {
                partition: part.to_string(),
                shape: stair.to_string(),
            });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn sp(parts: &[u32]) -> StrictPartition {
        StrictPartition::new(parts.to_vec()).unwrap()
    }

    fn triple_set(table: &FeasibleTripleTable) -> Vec<(String, String, String)> {
        table
            .triples()
            .iter()
            .map(|(a, b, c)| (a.to_string(), b.to_string(), c.to_string()))
            .collect()
    }

    #[test]
    fn unit_square_table() {
        let engine = HornEngine::new();
        let table = engine.feasible_triples(1, 1, TableMethod::Oracle).unwrap();
        let mut got = triple_set(&table);
        got.sort();
        assert_eq!(
            got,
            vec![
                ("0".into(), "0".into(), "1".into()),
                ("0".into(), "1".into(), "0".into()),
                ("1".into(), "0".into(), "0".into()),
            ]
        );
    }

    #[test]
    fn one_by_two_table() {
        let engine = HornEngine::new();
        let table = engine.feasible_triples(1, 2, TableMethod::Oracle).unwrap();
        // The distinct permutations of ((2),0,0) and of ((1),(1),0).
        let mut got = triple_set(&table);
        got.sort();
        assert_eq!(
            got,
            vec![
                ("0".into(), "0".into(), "2".into()),
                ("0".into(), "1".into(), "1".into()),
                ("0".into(), "2".into(), "0".into()),
                ("1".into(), "0".into(), "1".into()),
                ("1".into(), "1".into(), "0".into()),
                ("2".into(), "0".into(), "0".into()),
            ]
        );
    }

    #[test]
    fn tables_are_permutation_closed() {
        let engine = HornEngine::new();
        for (r, s) in [(1, 3), (2, 2), (2, 3)] {
            let table = engine.feasible_triples(r, s, TableMethod::Oracle).unwrap();
            let set: std::collections::HashSet<_> = table
                .triples()
                .iter()
                .map(|(a, b, c)| (a.clone(), b.clone(), c.clone()))
                .collect();
            for (a, b, c) in table.triples() {
                for perm in [
                    (a, c, b),
                    (b, a, c),
                    (b, c, a),
                    (c, a, b),
                    (c, b, a),
                ] {
                    assert!(set.contains(&(perm.0.clone(), perm.1.clone(), perm.2.clone())));
                }
            }
        }
    }

    #[test]
    fn classical_examples() {
        let engine = HornEngine::new();
        let opts = CheckOptions::default();

        let unit = Rectangle::new(1, 1).unwrap();
        let v = engine
            .classical_horn_feasible(&p(&[1]), &Partition::empty(), &Partition::empty(), unit, &opts)
            .unwrap();
        assert!(v.feasible && v.witnesses.is_empty());

        let square = Rectangle::new(2, 2).unwrap();
        let v = engine
            .classical_horn_feasible(&p(&[2]), &p(&[1, 1]), &Partition::empty(), square, &opts)
            .unwrap();
        assert!(!v.feasible);
        let w = &v.witnesses[0];
        assert_eq!(w.kind, WitnessKind::Inequality);
        assert_eq!(w.r, 1);
        assert_eq!((w.lhs, w.bound), (3, 2));
        assert_eq!(w.triples[0], (p(&[1]), Partition::empty(), Partition::empty()));

        let v = engine
            .classical_horn_feasible(&p(&[1]), &p(&[1]), &p(&[2]), square, &opts)
            .unwrap();
        assert!(v.feasible);
    }

    #[test]
    fn homogeneity_witness_records_both_sides() {
        let engine = HornEngine::new();
        let square = Rectangle::new(2, 2).unwrap();
        let v = engine
            .classical_horn_feasible(&p(&[1]), &p(&[1]), &p(&[1]), square, &CheckOptions::default())
            .unwrap();
        assert!(!v.feasible);
        assert_eq!(v.witnesses[0].kind, WitnessKind::Homogeneity);
        assert_eq!((v.witnesses[0].lhs, v.witnesses[0].bound), (3, 4));
    }

    #[test]
    fn symmetric_on_a_unit_square_is_decided_by_homogeneity() {
        let engine = HornEngine::new();
        let unit = Rectangle::new(1, 1).unwrap();
        let opts = CheckOptions::default();
        let v = engine
            .symmetric_horn_feasible(&p(&[1]), &Partition::empty(), &Partition::empty(), unit, &opts)
            .unwrap();
        assert!(v.feasible, "empty rank range leaves homogeneity alone");
        let v = engine
            .symmetric_horn_feasible(&p(&[1]), &p(&[1]), &p(&[1]), unit, &opts)
            .unwrap();
        assert!(!v.feasible);
    }

    #[test]
    fn symmetric_agrees_with_classical_on_the_square() {
        let engine = HornEngine::new();
        let square = Rectangle::new(2, 2).unwrap();
        let opts = CheckOptions::default();
        let shapes: Vec<Partition> = enumerate_partitions(square).collect();
        for a in &shapes {
            for b in &shapes {
                for c in &shapes {
                    let classical = engine
                        .classical_horn_feasible(a, b, c, square, &opts)
                        .unwrap();
                    let symmetric = engine
                        .symmetric_horn_feasible(a, b, c, square, &opts)
                        .unwrap();
                    assert_eq!(classical.feasible, symmetric.feasible, "({a},{b},{c})");
                }
            }
        }
    }

    #[test]
    fn type_c_examples() {
        let engine = HornEngine::new();
        let opts = CheckOptions::default();

        let s2 = Staircase::new(2).unwrap();
        let v = engine
            .type_c_feasible(&sp(&[1]), &sp(&[1]), &sp(&[1]), s2, &opts)
            .unwrap();
        assert!(v.feasible);
        let v = engine
            .type_c_feasible(&sp(&[2, 1]), &StrictPartition::empty(), &StrictPartition::empty(), s2, &opts)
            .unwrap();
        assert!(v.feasible);

        let s3 = Staircase::new(3).unwrap();
        let v = engine
            .type_c_feasible(&sp(&[3]), &sp(&[3]), &StrictPartition::empty(), s3, &opts)
            .unwrap();
        assert!(!v.feasible);
        assert!(v.witnesses.iter().all(|w| w.kind == WitnessKind::Inequality));
    }

    #[test]
    fn type_d_examples() {
        let engine = HornEngine::new();
        let opts = CheckOptions::default();

        let s2 = Staircase::new(2).unwrap();
        let v = engine
            .type_d_feasible(&sp(&[1]), &sp(&[1]), &sp(&[1]), s2, &opts)
            .unwrap();
        assert!(v.feasible);

        let s3 = Staircase::new(3).unwrap();
        let v = engine
            .type_d_feasible(&sp(&[3]), &sp(&[3]), &StrictPartition::empty(), s3, &opts)
            .unwrap();
        assert!(!v.feasible);
        assert!(v.witnesses.iter().any(|w| w.r == 2));

        let v = engine
            .type_d_feasible(&sp(&[2]), &sp(&[2]), &sp(&[1]), s3, &opts)
            .unwrap();
        assert!(!v.feasible);
        assert_eq!(v.witnesses[0].kind, WitnessKind::Homogeneity);
    }

    #[test]
    fn verdict_coherence_and_permutation_invariance() {
        let engine = HornEngine::new();
        let opts = CheckOptions::default();
        let square = Rectangle::new(2, 2).unwrap();
        let shapes: Vec<Partition> = enumerate_partitions(square).collect();
        for a in &shapes {
            for b in &shapes {
                for c in &shapes {
                    let v = engine.classical_horn_feasible(a, b, c, square, &opts).unwrap();
                    assert_eq!(v.feasible, v.witnesses.is_empty());
                    for (x, y, z) in [(a, c, b), (b, a, c), (c, b, a)] {
                        let w = engine.classical_horn_feasible(x, y, z, square, &opts).unwrap();
                        assert_eq!(v.feasible, w.feasible);
                    }
                }
            }
        }
    }

    #[test]
    fn fail_fast_stops_at_first_witness() {
        let engine = HornEngine::new();
        let square = Rectangle::new(2, 2).unwrap();
        let exhaustive = engine
            .classical_horn_feasible(
                &p(&[2]),
                &p(&[1, 1]),
                &Partition::empty(),
                square,
                &CheckOptions::default(),
            )
            .unwrap();
        let fast = engine
            .classical_horn_feasible(
                &p(&[2]),
                &p(&[1, 1]),
                &Partition::empty(),
                square,
                &CheckOptions {
                    fail_fast: true,
                    ..CheckOptions::default()
                },
            )
            .unwrap();
        assert_eq!(exhaustive.feasible, fast.feasible);
        assert_eq!(fast.witnesses.len(), 1);
        assert!(exhaustive.witnesses.len() >= fast.witnesses.len());
    }

    #[test]
    fn oracle_method_verdicts() {
        let engine = HornEngine::new();
        let opts = CheckOptions::default();
        let square = Rectangle::new(2, 2).unwrap();
        let v = engine
            .oracle_rect_verdict(&p(&[1]), &p(&[1]), &p(&[2]), square, &opts)
            .unwrap();
        assert!(v.feasible);
        let v = engine
            .oracle_rect_verdict(&p(&[2]), &p(&[1, 1]), &Partition::empty(), square, &opts)
            .unwrap();
        assert!(!v.feasible && !v.witnesses.is_empty());

        let s3 = Staircase::new(3).unwrap();
        let v = engine
            .oracle_staircase_verdict(&sp(&[3]), &sp(&[3]), &StrictPartition::empty(), s3, &opts)
            .unwrap();
        assert!(!v.feasible && !v.witnesses.is_empty());
    }

    #[test]
    fn inequality_listings_match_the_examples() {
        let engine = HornEngine::new();
        let square = Rectangle::new(2, 2).unwrap();
        let classical = engine
            .list_rect_inequalities(RectSystem::Classical, square, TableMethod::Oracle)
            .unwrap();
        assert_eq!(classical.len(), 3);
        assert!(classical.iter().all(|d| d.r == 1 && d.bound == 2));

        let row = Rectangle::new(1, 5).unwrap();
        let empty = engine
            .list_rect_inequalities(RectSystem::Classical, row, TableMethod::Oracle)
            .unwrap();
        assert!(empty.is_empty());

        let s2 = Staircase::new(2).unwrap();
        let type_d = engine
            .list_staircase_inequalities(StairSystem::TypeD, s2, TableMethod::Oracle)
            .unwrap();
        assert!(!type_d.is_empty());
        assert!(type_d.iter().all(|d| d.r == 2));

        let symmetric = engine
            .list_rect_inequalities(RectSystem::Symmetric, square, TableMethod::Oracle)
            .unwrap();
        assert_eq!(symmetric.len(), 9);
        assert!(symmetric.iter().all(|d| d.triples.len() == 2));
    }

    #[test]
    fn recursive_tables_match_oracle_tables_small() {
        let engine = HornEngine::new();
        for (r, s) in [(1, 1), (1, 2), (2, 1), (2, 2), (1, 3), (3, 1)] {
            let oracle = engine.feasible_triples(r, s, TableMethod::Oracle).unwrap();
            let recursive = engine.feasible_triples(r, s, TableMethod::Recursive).unwrap();
            assert_eq!(
                triple_set(&oracle),
                triple_set(&recursive),
                "tables differ at {r}x{s}"
            );
        }
    }
}
