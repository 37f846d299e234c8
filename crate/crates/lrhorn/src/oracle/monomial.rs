//! Symmetric polynomials in a fixed number of variables, stored as maps
//! from canonical exponent vectors to integer coefficients.
//!
//! Every stored exponent vector is weakly decreasing: the coefficient on a
//! sorted vector is the coefficient of that monomial, and symmetry supplies
//! the rest of the orbit. Products are computed by expanding both factors
//! into all distinct exponent permutations, convolving in N variables, and
//! reading the canonical entries back off the result. All arithmetic is
//! checked; overflow is an error, never a wrap.

use std::collections::{BTreeMap, HashMap};

use crate::error::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialMap {
    n_vars: usize,
    entries: BTreeMap<Vec<u32>, i64>,
}

impl MonomialMap {
    pub fn zero(n_vars: usize) -> Self {
        MonomialMap {
            n_vars,
            entries: BTreeMap::new(),
        }
    }

    pub fn constant(n_vars: usize, value: i64) -> Self {
        let mut m = MonomialMap::zero(n_vars);
        if value != 0 {
            m.entries.insert(vec![0; n_vars], value);
        }
        m
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Vec<u32>, i64)> {
        self.entries.iter().map(|(k, &v)| (k, v))
    }

    /// Adds `value` to the canonical exponent vector `exponents`, which must
    /// be weakly decreasing and of length `n_vars`.
    pub(crate) fn add_term(&mut self, exponents: Vec<u32>, value: i64) -> Result<(), Error> {
        debug_assert_eq!(exponents.len(), self.n_vars);
        debug_assert!(is_weakly_decreasing(&exponents));
        if value == 0 {
            return Ok(());
        }
        let slot = self.entries.entry(exponents);
        match slot {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(value);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().checked_add(value).ok_or(Error::Overflow)?;
                if sum == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
        Ok(())
    }

    /// Coefficient of the monomial whose exponent vector sorts to `parts`
    /// (zero-padded to the variable count). Zero if the padded vector does
    /// not fit in `n_vars` variables.
    pub fn coefficient(&self, parts: &[u32]) -> i64 {
        let mut key: Vec<u32> = parts.to_vec();
        key.sort_unstable_by(|a, b| b.cmp(a));
        while key.last() == Some(&0) {
            key.pop();
        }
        if key.len() > self.n_vars {
            return 0;
        }
        key.resize(self.n_vars, 0);
        self.entries.get(&key).copied().unwrap_or(0)
    }

    /// Lexicographically largest exponent vector and its coefficient.
    pub fn leading(&self) -> Option<(&Vec<u32>, i64)> {
        self.entries.iter().next_back().map(|(k, &v)| (k, v))
    }

    /// Common total degree, when the map is homogeneous and nonzero.
    pub fn degree(&self) -> Option<u64> {
        let mut degrees = self
            .entries
            .keys()
            .map(|k| k.iter().map(|&e| u64::from(e)).sum::<u64>());
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// self += scale * other, entrywise with checked arithmetic.
    pub fn add_scaled(&mut self, other: &MonomialMap, scale: i64) -> Result<(), Error> {
        if self.n_vars != other.n_vars {
            return Err(Error::Internal(format!(
                "variable count mismatch: {} vs {}",
                self.n_vars, other.n_vars
            )));
        }
        for (k, v) in &other.entries {
            let delta = v.checked_mul(scale).ok_or(Error::Overflow)?;
            self.add_term(k.clone(), delta)?;
        }
        Ok(())
    }

    /// Expands the canonical entries into every distinct exponent
    /// permutation, producing the plain polynomial.
    pub fn to_dense(&self) -> Vec<(Vec<u32>, i64)> {
        let mut dense = Vec::new();
        for (key, &coeff) in &self.entries {
            for_each_distinct_permutation(key, |perm| dense.push((perm.to_vec(), coeff)));
        }
        dense
    }

    /// Product of two symmetric polynomials in the same variables.
    pub fn mul(&self, other: &MonomialMap) -> Result<MonomialMap, Error> {
        if self.n_vars != other.n_vars {
            return Err(Error::Internal(format!(
                "variable count mismatch: {} vs {}",
                self.n_vars, other.n_vars
            )));
        }
        let a = self.to_dense();
        let b = other.to_dense();
        let mut acc: HashMap<Vec<u32>, i64> = HashMap::new();
        let mut key = vec![0u32; self.n_vars];
        for (ka, ca) in &a {
            for (kb, cb) in &b {
                for (slot, (x, y)) in key.iter_mut().zip(ka.iter().zip(kb.iter())) {
                    *slot = x.checked_add(*y).ok_or(Error::Overflow)?;
                }
                // Only canonical monomials are read back; skip the rest.
                if !is_weakly_decreasing(&key) {
                    continue;
                }
                let term = ca.checked_mul(*cb).ok_or(Error::Overflow)?;
                let slot = acc.entry(key.clone()).or_insert(0);
                *slot = slot.checked_add(term).ok_or(Error::Overflow)?;
            }
        }
        let mut out = MonomialMap::zero(self.n_vars);
        for (k, v) in acc {
            if v != 0 {
                out.entries.insert(k, v);
            }
        }
        Ok(out)
    }

    /// Divides every coefficient by `divisor` exactly.
    pub fn divide_exact(&self, divisor: i64) -> Result<MonomialMap, Error> {
        let mut out = MonomialMap::zero(self.n_vars);
        for (k, &v) in &self.entries {
            if v % divisor != 0 {
                return Err(Error::InexactDivision { value: v, divisor });
            }
            out.entries.insert(k.clone(), v / divisor);
        }
        Ok(out)
    }
}

pub(crate) fn is_weakly_decreasing(v: &[u32]) -> bool {
    v.windows(2).all(|w| w[0] >= w[1])
}

/// Calls `f` once for every distinct permutation of `sorted` (any multiset).
pub(crate) fn for_each_distinct_permutation(sorted: &[u32], mut f: impl FnMut(&[u32])) {
    let mut v: Vec<u32> = sorted.to_vec();
    v.sort_unstable();
    loop {
        f(&v);
        if !next_permutation(&mut v) {
            break;
        }
    }
}

fn next_permutation(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}
