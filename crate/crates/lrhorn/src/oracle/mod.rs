//! Ground-truth Littlewood-Richardson numbers, computed the slow honest
//! way: build explicit polynomial models of the basis functions, multiply,
//! and peel off basis elements by lexicographic leading terms.
//!
//! This is deliberately independent of the inequality machinery it audits.

mod monomial;
mod tableaux;

pub use monomial::MonomialMap;
pub use tableaux::{schur_p_poly, schur_poly, schur_q_poly};

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use crate::error::Error;
use crate::partition::{Partition, Rectangle, Staircase, StrictPartition};

/// Which basis a symmetric polynomial is expanded in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Basis {
    Schur,
    SchurP,
    SchurQ,
}

impl Basis {
    /// Leading coefficient of the basis element indexed by `parts`: 1 for
    /// Schur and P, 2^(number of parts) for Q.
    fn leading_unit(self, parts: &[u32]) -> Result<i64, Error> {
        match self {
            Basis::Schur | Basis::SchurP => Ok(1),
            Basis::SchurQ => 1i64.checked_shl(parts.len() as u32).ok_or(Error::Overflow),
        }
    }

    fn is_valid_index(self, parts: &[u32]) -> bool {
        match self {
            Basis::Schur => true,
            Basis::SchurP | Basis::SchurQ => parts.windows(2).all(|w| w[0] > w[1]),
        }
    }
}

type BasisKey = (Basis, Vec<u32>, usize);
type PairKey = (Basis, Vec<u32>, Vec<u32>, usize);

/// Coefficient oracle with internal memo tables for basis polynomials and
/// pairwise product expansions. The caches only store deterministic values,
/// so concurrent use observes the same results as no cache at all.
#[derive(Default)]
pub struct Oracle {
    basis_cache: Mutex<HashMap<BasisKey, Arc<MonomialMap>>>,
    pair_cache: Mutex<HashMap<PairKey, Arc<BTreeMap<Partition, i64>>>>,
}

impl Oracle {
    pub fn new() -> Self {
        Oracle::default()
    }

    /// The polynomial model of one basis element, memoized per (basis,
    /// index, variable count). For P and Q the index must be strict.
    pub fn basis_poly(
        &self,
        basis: Basis,
        index: &Partition,
        n_vars: usize,
    ) -> Result<Arc<MonomialMap>, Error> {
        let key = (basis, index.parts().to_vec(), n_vars);
        if let Some(hit) = self.basis_cache.lock().unwrap().get(&key) {
            return Ok(Arc::clone(hit));
        }
        let poly = match basis {
            Basis::Schur => schur_poly(index, n_vars)?,
            Basis::SchurP => {
                schur_p_poly(&StrictPartition::from_partition(index.clone())?, n_vars)?
            }
            Basis::SchurQ => {
                schur_q_poly(&StrictPartition::from_partition(index.clone())?, n_vars)?
            }
        };
        let arc = Arc::new(poly);
        self.basis_cache
            .lock()
            .unwrap()
            .insert(key, Arc::clone(&arc));
        Ok(arc)
    }

    /// Expands a symmetric homogeneous polynomial in the requested basis by
    /// repeatedly subtracting the basis element matching the current
    /// lexicographic leading term. The variable count of `poly` must cover
    /// every basis index that has to be extracted.
    pub fn expand_in_basis(
        &self,
        poly: &MonomialMap,
        basis: Basis,
    ) -> Result<BTreeMap<Partition, i64>, Error> {
        let mut remainder = poly.clone();
        let mut out = BTreeMap::new();
        while let Some((lead, coeff)) = remainder.leading() {
            let lead = lead.clone();
            // Canonical keys are weakly decreasing, so the lead is a
            // partition; it must also be a valid index for the basis.
            if !basis.is_valid_index(trim_zeros(&lead)) {
                return Err(Error::InvalidLeadingTerm(lead));
            }
            let index = Partition::new(trim_zeros(&lead).to_vec())?;
            let unit = basis.leading_unit(index.parts())?;
            if coeff % unit != 0 {
                return Err(Error::InexactDivision {
                    value: coeff,
                    divisor: unit,
                });
            }
            let scalar = coeff / unit;
            let element = self.basis_poly(basis, &index, poly.n_vars())?;
            remainder.add_scaled(&element, scalar.checked_neg().ok_or(Error::Overflow)?)?;
            if let Some((next_lead, _)) = remainder.leading() {
                if *next_lead >= lead {
                    return Err(Error::Internal(format!(
                        "peeling did not reduce the leading term at {lead:?}"
                    )));
                }
            }
            out.insert(index, scalar);
        }
        Ok(out)
    }

    /// Expansion of basis_poly(mu) * basis_poly(nu) in the same basis,
    /// memoized per unordered pair and variable count.
    fn pair_expansion(
        &self,
        basis: Basis,
        mu: &Partition,
        nu: &Partition,
        n_vars: usize,
    ) -> Result<Arc<BTreeMap<Partition, i64>>, Error> {
        let (a, b) = if mu.parts() <= nu.parts() {
            (mu, nu)
        } else {
            (nu, mu)
        };
        let key = (basis, a.parts().to_vec(), b.parts().to_vec(), n_vars);
        if let Some(hit) = self.pair_cache.lock().unwrap().get(&key) {
            return Ok(Arc::clone(hit));
        }
        let pa = self.basis_poly(basis, a, n_vars)?;
        let pb = self.basis_poly(basis, b, n_vars)?;
        let product = pa.mul(&pb)?;
        let expansion = Arc::new(self.expand_in_basis(&product, basis)?);
        self.pair_cache
            .lock()
            .unwrap()
            .insert(key, Arc::clone(&expansion));
        Ok(expansion)
    }

    /// a^λ_{μν}: the coefficient of S_λ in S_μ·S_ν.
    pub fn lr_a(&self, lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64, Error> {
        self.lr_a_in_vars(lambda, mu, nu, lambda.len().max(1))
    }

    /// a^λ_{μν} computed in an explicit number of variables, which must be
    /// at least the number of parts of λ. The result does not depend on the
    /// choice.
    pub fn lr_a_in_vars(
        &self,
        lambda: &Partition,
        mu: &Partition,
        nu: &Partition,
        n_vars: usize,
    ) -> Result<u64, Error> {
        if lambda.weight() != mu.weight() + nu.weight() || lambda.len() > n_vars {
            return Ok(0);
        }
        let expansion = self.pair_expansion(Basis::Schur, mu, nu, n_vars)?;
        to_nonnegative(expansion.get(lambda).copied().unwrap_or(0))
    }

    /// c^λ_{μν}: the coefficient of Q_λ in Q_μ·Q_ν.
    pub fn lr_c(
        &self,
        lambda: &StrictPartition,
        mu: &StrictPartition,
        nu: &StrictPartition,
    ) -> Result<u64, Error> {
        self.lr_c_in_vars(lambda, mu, nu, lambda.len().max(1))
    }

    pub fn lr_c_in_vars(
        &self,
        lambda: &StrictPartition,
        mu: &StrictPartition,
        nu: &StrictPartition,
        n_vars: usize,
    ) -> Result<u64, Error> {
        if lambda.weight() != mu.weight() + nu.weight() || lambda.len() > n_vars {
            return Ok(0);
        }
        let expansion =
            self.pair_expansion(Basis::SchurQ, mu.as_partition(), nu.as_partition(), n_vars)?;
        to_nonnegative(expansion.get(lambda.as_partition()).copied().unwrap_or(0))
    }

    /// d^λ_{μν}: the coefficient of P_λ in P_μ·P_ν, obtained from c^λ_{μν}
    /// by the proportionality Q = 2^(parts)·P. The power-of-two rescaling
    /// must be exact.
    pub fn lr_d(
        &self,
        lambda: &StrictPartition,
        mu: &StrictPartition,
        nu: &StrictPartition,
    ) -> Result<u64, Error> {
        let c = self.lr_c(lambda, mu, nu)?;
        let shift = lambda.len() as i64 - mu.len() as i64 - nu.len() as i64;
        rescale_by_power_of_two(c, shift)
    }

    /// a_{λμν} on a rectangle: the coefficient of the full n×m shape in
    /// S_λ·S_μ·S_ν, computed as a^{λ^c}_{μν}. Symmetric in the triple.
    pub fn sym_a(
        &self,
        lambda: &Partition,
        mu: &Partition,
        nu: &Partition,
        rect: Rectangle,
    ) -> Result<u64, Error> {
        for part in [lambda, mu, nu] {
            if !part.fits_in(rect) {
                return Err(Error::NotContained {
                    partition: part.to_string(),
                    shape: rect.to_string(),
                });
            }
        }
        self.lr_a(&lambda.complement_in(rect)?, mu, nu)
    }

    /// c_{λμν} on a staircase: the coefficient of Q_{Λ_n} in Q_λ·Q_μ·Q_ν,
    /// computed as c^{λ^c}_{μν}. Symmetric in the triple.
    pub fn sym_c(
        &self,
        lambda: &StrictPartition,
        mu: &StrictPartition,
        nu: &StrictPartition,
        stair: Staircase,
    ) -> Result<u64, Error> {
        for part in [lambda, mu, nu] {
            if !part.fits_in(stair) {
                return Err(Error::NotContained {
                    partition: part.to_string(),
                    shape: stair.to_string(),
                });
            }
        }
        self.lr_c(&lambda.complement_in(stair)?, mu, nu)
    }

    /// d_{λμν} on a staircase, the P-function analogue of [`Oracle::sym_c`].
    pub fn sym_d(
        &self,
        lambda: &StrictPartition,
        mu: &StrictPartition,
        nu: &StrictPartition,
        stair: Staircase,
    ) -> Result<u64, Error> {
        for part in [lambda, mu, nu] {
            if !part.fits_in(stair) {
                return Err(Error::NotContained {
                    partition: part.to_string(),
                    shape: stair.to_string(),
                });
            }
        }
        self.lr_d(&lambda.complement_in(stair)?, mu, nu)
    }
}

fn trim_zeros(v: &[u32]) -> &[u32] {
    let end = v.iter().rposition(|&e| e != 0).map_or(0, |i| i + 1);
    &v[..end]
}

fn to_nonnegative(value: i64) -> Result<u64, Error> {
    u64::try_from(value)
        .map_err(|_| Error::Internal(format!("negative structure coefficient {value}")))
}

fn rescale_by_power_of_two(value: u64, shift: i64) -> Result<u64, Error> {
    if shift >= 0 {
        value
            .checked_shl(shift as u32)
            .filter(|scaled| scaled >> shift == value)
            .ok_or(Error::Overflow)
    } else {
        let down = (-shift) as u32;
        if value.trailing_zeros() < down && value != 0 {
            return Err(Error::InexactDivision {
                value: value as i64,
                divisor: 1i64 << down,
            });
        }
        Ok(value >> down)
    }
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

    #[test]
    fn schur_square_of_a_box() {
        let oracle = Oracle::new();
        let s1 = oracle.basis_poly(Basis::Schur, &p(&[1]), 2).unwrap();
        let product = s1.mul(&s1).unwrap();
        let expansion = oracle.expand_in_basis(&product, Basis::Schur).unwrap();
        let expected: BTreeMap<Partition, i64> =
            [(p(&[2]), 1), (p(&[1, 1]), 1)].into_iter().collect();
        assert_eq!(expansion, expected);
    }

    #[test]
    fn schur_q_square_of_a_box() {
        let oracle = Oracle::new();
        let q1 = oracle.basis_poly(Basis::SchurQ, &p(&[1]), 2).unwrap();
        let product = q1.mul(&q1).unwrap();
        let expansion = oracle.expand_in_basis(&product, Basis::SchurQ).unwrap();
        // 4(x+y)^2 = 2·Q_2 in two variables; the non-strict shape (1,1)
        // cannot appear.
        let expected: BTreeMap<Partition, i64> = [(p(&[2]), 2)].into_iter().collect();
        assert_eq!(expansion, expected);
    }

    #[test]
    fn expanding_a_basis_element_returns_a_unit_vector() {
        let oracle = Oracle::new();
        for shape in [p(&[2, 1]), p(&[3]), p(&[2, 2, 1])] {
            let s = oracle.basis_poly(Basis::Schur, &shape, 3).unwrap();
            let expansion = oracle.expand_in_basis(&s, Basis::Schur).unwrap();
            assert_eq!(expansion, [(shape, 1)].into_iter().collect());
        }
    }

    #[test]
    fn q_expands_in_p_as_a_power_of_two() {
        let oracle = Oracle::new();
        for shape in [sp(&[1]), sp(&[2]), sp(&[2, 1]), sp(&[3, 1])] {
            let q = oracle
                .basis_poly(Basis::SchurQ, shape.as_partition(), 3)
                .unwrap();
            let expansion = oracle.expand_in_basis(&q, Basis::SchurP).unwrap();
            let expected: BTreeMap<Partition, i64> =
                [(shape.as_partition().clone(), 1i64 << shape.len())]
                    .into_iter()
                    .collect();
            assert_eq!(expansion, expected);
        }
    }

    #[test]
    fn lr_a_spot_values() {
        let oracle = Oracle::new();
        assert_eq!(oracle.lr_a(&p(&[2]), &p(&[1]), &p(&[1])).unwrap(), 1);
        assert_eq!(oracle.lr_a(&p(&[1, 1]), &p(&[1]), &p(&[1])).unwrap(), 1);
        assert_eq!(oracle.lr_a(&p(&[3]), &p(&[1]), &p(&[1])).unwrap(), 0);
        // Multiplying by the empty shape is the identity.
        for lam in [p(&[4, 2, 1]), p(&[2, 2]), Partition::empty()] {
            assert_eq!(oracle.lr_a(&lam, &lam, &Partition::empty()).unwrap(), 1);
        }
    }

    #[test]
    fn lr_a_multiplicity_two() {
        // S_21 * S_21 contains S_321 with coefficient 2.
        let oracle = Oracle::new();
        assert_eq!(
            oracle.lr_a(&p(&[3, 2, 1]), &p(&[2, 1]), &p(&[2, 1])).unwrap(),
            2
        );
        assert_eq!(
            oracle.lr_a(&p(&[4, 2]), &p(&[2, 1]), &p(&[2, 1])).unwrap(),
            1
        );
        assert_eq!(
            oracle.lr_a(&p(&[3, 3]), &p(&[2, 1]), &p(&[2, 1])).unwrap(),
            1
        );
    }

    #[test]
    fn schur_dimension_count() {
        // Total tableau count for shape (2,1) in three variables is 8.
        let oracle = Oracle::new();
        let s = oracle.basis_poly(Basis::Schur, &p(&[2, 1]), 3).unwrap();
        let total: i64 = s.to_dense().iter().map(|(_, c)| c).sum();
        assert_eq!(total, 8);
    }

    #[test]
    fn lr_c_and_d_spot_values() {
        let oracle = Oracle::new();
        assert_eq!(oracle.lr_c(&sp(&[2]), &sp(&[1]), &sp(&[1])).unwrap(), 2);
        assert_eq!(oracle.lr_d(&sp(&[2]), &sp(&[1]), &sp(&[1])).unwrap(), 1);
        for lam in [sp(&[3, 1]), sp(&[2, 1]), StrictPartition::empty()] {
            assert_eq!(oracle.lr_c(&lam, &lam, &StrictPartition::empty()).unwrap(), 1);
        }
    }

    #[test]
    fn lr_d_matches_direct_p_expansion() {
        let oracle = Oracle::new();
        let cases = [
            (sp(&[2]), sp(&[1]), sp(&[1])),
            (sp(&[3, 1]), sp(&[2, 1]), sp(&[1])),
            (sp(&[3, 2, 1]), sp(&[3]), sp(&[2, 1])),
            (sp(&[4, 2]), sp(&[3, 1]), sp(&[2])),
        ];
        for (lam, mu, nu) in cases {
            let n_vars = lam.len().max(1);
            let pm = oracle
                .basis_poly(Basis::SchurP, mu.as_partition(), n_vars)
                .unwrap();
            let pn = oracle
                .basis_poly(Basis::SchurP, nu.as_partition(), n_vars)
                .unwrap();
            let expansion = oracle
                .expand_in_basis(&pm.mul(&pn).unwrap(), Basis::SchurP)
                .unwrap();
            let direct = expansion
                .get(lam.as_partition())
                .copied()
                .unwrap_or(0)
                .max(0) as u64;
            assert_eq!(
                oracle.lr_d(&lam, &mu, &nu).unwrap(),
                direct,
                "d^{lam}_{mu},{nu}"
            );
        }
    }

    #[test]
    fn sym_a_spot_values() {
        let oracle = Oracle::new();
        let unit = Rectangle::new(1, 1).unwrap();
        assert_eq!(
            oracle
                .sym_a(&p(&[1]), &Partition::empty(), &Partition::empty(), unit)
                .unwrap(),
            1
        );
        let square = Rectangle::new(2, 2).unwrap();
        assert_eq!(
            oracle.sym_a(&p(&[1]), &p(&[1]), &p(&[2]), square).unwrap(),
            1
        );
        assert_eq!(
            oracle
                .sym_a(&p(&[2]), &p(&[1, 1]), &Partition::empty(), square)
                .unwrap(),
            0
        );
        assert!(oracle
            .sym_a(&p(&[3]), &p(&[1]), &p(&[1]), square)
            .is_err());
    }

    #[test]
    fn sym_c_and_d_spot_values() {
        let oracle = Oracle::new();
        let s2 = Staircase::new(2).unwrap();
        assert_eq!(
            oracle.sym_c(&sp(&[1]), &sp(&[1]), &sp(&[1]), s2).unwrap(),
            2
        );
        assert_eq!(
            oracle
                .sym_c(&sp(&[2, 1]), &StrictPartition::empty(), &StrictPartition::empty(), s2)
                .unwrap(),
            1
        );
        let s3 = Staircase::new(3).unwrap();
        assert_eq!(
            oracle
                .sym_c(&sp(&[3]), &sp(&[3]), &StrictPartition::empty(), s3)
                .unwrap(),
            0
        );
        assert_eq!(
            oracle.sym_d(&sp(&[1]), &sp(&[1]), &sp(&[1]), s2).unwrap(),
            1
        );
    }

    #[test]
    fn lr_results_do_not_depend_on_extra_variables() {
        let oracle = Oracle::new();
        let (lam, mu, nu) = (p(&[3, 2]), p(&[2, 1]), p(&[2]));
        let base = oracle.lr_a(&lam, &mu, &nu).unwrap();
        for extra in 1..=2 {
            assert_eq!(
                oracle.lr_a_in_vars(&lam, &mu, &nu, lam.len() + extra).unwrap(),
                base
            );
        }
        let (slam, smu, snu) = (sp(&[4, 2]), sp(&[3, 1]), sp(&[2]));
        let base = oracle.lr_c(&slam, &smu, &snu).unwrap();
        for extra in 1..=2 {
            assert_eq!(
                oracle
                    .lr_c_in_vars(&slam, &smu, &snu, slam.len() + extra)
                    .unwrap(),
                base
            );
        }
    }

    #[test]
    fn power_of_two_rescaling_guards() {
        assert_eq!(rescale_by_power_of_two(2, -1).unwrap(), 1);
        assert_eq!(rescale_by_power_of_two(0, -3).unwrap(), 0);
        assert_eq!(rescale_by_power_of_two(3, 2).unwrap(), 12);
        assert!(rescale_by_power_of_two(3, -1).is_err());
    }
}
