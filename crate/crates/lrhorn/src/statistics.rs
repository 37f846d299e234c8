//! The four crossing-out statistics behind every Horn-type inequality, and
//! the index sets that drive them.
//!
//! Geometry conventions, fixed repo-wide: diagrams are drawn in matrix
//! coordinates (row 1 on top, column 1 on the left) with the partition in
//! the upper-right corner of its ambient shape. The row statistics number
//! rows Cartesian-style (row 1 at the bottom), so Cartesian row `n+1-i`
//! carries part λ_i. Staircase corners are numbered from the bottom-left:
//! inner corner k sits at matrix row `n+1-k`, column `k`; outer corner j
//! crosses matrix row `n+2-j` (absent for j = 1) and column `j` (absent for
//! j = n+1).
//!
//! Statistics are computed by explicit box enumeration; the shapes involved
//! are tiny.

use crate::error::Error;
use crate::partition::{Partition, Rectangle, Staircase, StrictPartition};

/// The r-subset I_N(α) = {N−r+i−α_i : i = 1..r} of {1..N}.
///
/// Partitions α ⊂ r×(N−r) are in bijection with r-subsets of {1..N} under
/// this map; α is zero-padded to length r.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexSet {
    elements: Vec<u32>,
    ambient: u32,
}

impl IndexSet {
    pub fn from_partition(alpha: &Partition, ambient: u32, r: u32) -> Result<Self, Error> {
        if r == 0 || r > ambient {
            return Err(Error::RankOutOfRange {
                r,
                lo: 1,
                hi: ambient,
            });
        }
        let alpha_box = format!("{}x{}", r, ambient - r);
        if alpha.len() > r as usize || alpha.part(0) > ambient - r {
            return Err(Error::NotContained {
                partition: alpha.to_string(),
                shape: alpha_box,
            });
        }
        let elements = (1..=r)
            .map(|i| ambient - r + i - alpha.part((i - 1) as usize))
            .collect();
        Ok(IndexSet { elements, ambient })
    }

    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn ambient(&self) -> u32 {
        self.ambient
    }

    pub fn contains(&self, value: u32) -> bool {
        self.elements.binary_search(&value).is_ok()
    }
}

/// Rows and columns removed from a diagram, in matrix coordinates.
#[derive(Debug, Clone, Default)]
pub struct Crossings {
    pub rows: Vec<u32>,
    pub cols: Vec<u32>,
}

/// Matrix rows crossed out by I_n(α) when rows are numbered Cartesian-style.
pub fn rows_crossings(alpha: &Partition, rect: Rectangle, r: u32) -> Result<Crossings, Error> {
    let n = rect.rows();
    check_rank(r, n)?;
    let idx = IndexSet::from_partition(alpha, n, r)?;
    Ok(Crossings {
        rows: idx.elements().iter().map(|&e| n + 1 - e).collect(),
        cols: Vec::new(),
    })
}

/// Rows crossed by I_n(α) plus columns crossed by I_m(α′).
pub fn rows_cols_crossings(
    alpha: &Partition,
    alpha_prime: &Partition,
    rect: Rectangle,
    r: u32,
) -> Result<Crossings, Error> {
    let (n, m) = (rect.rows(), rect.cols());
    check_rank(r, n.min(m))?;
    let rows = IndexSet::from_partition(alpha, n, r)?;
    let cols = IndexSet::from_partition(alpha_prime, m, r)?;
    Ok(Crossings {
        rows: rows.elements().iter().map(|&e| n + 1 - e).collect(),
        cols: cols.elements().to_vec(),
    })
}

/// Rows and columns emanating from the inner corners selected by I_n(α).
pub fn inner_crossings(alpha: &Partition, stair: Staircase, r: u32) -> Result<Crossings, Error> {
    let n = stair.side();
    check_rank(r, n)?;
    let idx = IndexSet::from_partition(alpha, n, r)?;
    Ok(Crossings {
        rows: idx.elements().iter().map(|&k| n + 1 - k).collect(),
        cols: idx.elements().to_vec(),
    })
}

/// Rows and columns emanating from the outer corners selected by I_{n+1}(α).
/// Corner 1 has no row and corner n+1 has no column; those rays remove
/// nothing.
pub fn outer_crossings(alpha: &Partition, stair: Staircase, r: u32) -> Result<Crossings, Error> {
    let n = stair.side();
    check_rank(r, n + 1)?;
    let idx = IndexSet::from_partition(alpha, n + 1, r)?;
    Ok(Crossings {
        rows: idx
            .elements()
            .iter()
            .filter(|&&j| j >= 2)
            .map(|&j| n + 2 - j)
            .collect(),
        cols: idx.elements().iter().copied().filter(|&j| j <= n).collect(),
    })
}

/// |λ|_α: boxes of λ ⊂ n×m that survive crossing out the rows indexed by
/// I_n(α).
pub fn rows_stat(lambda: &Partition, rect: Rectangle, alpha: &Partition, r: u32) -> Result<u64, Error> {
    check_contained_rect(lambda, rect)?;
    let crossings = rows_crossings(alpha, rect, r)?;
    Ok(count_surviving_rect(lambda, rect, &crossings))
}

/// |λ|_{α,α′}: boxes of λ ⊂ n×m that survive crossing out the rows indexed
/// by I_n(α) and the columns indexed by I_m(α′).
pub fn rows_cols_stat(
    lambda: &Partition,
    rect: Rectangle,
    alpha: &Partition,
    alpha_prime: &Partition,
    r: u32,
) -> Result<u64, Error> {
    check_contained_rect(lambda, rect)?;
    let crossings = rows_cols_crossings(alpha, alpha_prime, rect, r)?;
    Ok(count_surviving_rect(lambda, rect, &crossings))
}

/// [λ]_α: boxes of the strict partition λ ⊂ Λ_n that survive crossing out
/// the row and column through each inner corner indexed by I_n(α).
pub fn inner_corner_stat(
    lambda: &StrictPartition,
    stair: Staircase,
    alpha: &Partition,
    r: u32,
) -> Result<u64, Error> {
    check_contained_stair(lambda, stair)?;
    let crossings = inner_crossings(alpha, stair, r)?;
    Ok(count_surviving_staircase(lambda, stair, &crossings))
}

/// {λ}_α: boxes of λ ⊂ Λ_n that survive crossing out the rays through each
/// outer corner indexed by I_{n+1}(α).
pub fn outer_corner_stat(
    lambda: &StrictPartition,
    stair: Staircase,
    alpha: &Partition,
    r: u32,
) -> Result<u64, Error> {
    check_contained_stair(lambda, stair)?;
    let crossings = outer_crossings(alpha, stair, r)?;
    Ok(count_surviving_staircase(lambda, stair, &crossings))
}

fn check_rank(r: u32, exclusive_hi: u32) -> Result<(), Error> {
    if r == 0 || r >= exclusive_hi {
        return Err(Error::RankOutOfRange {
            r,
            lo: 1,
            hi: exclusive_hi.saturating_sub(1),
        });
    }
    Ok(())
}

fn check_contained_rect(lambda: &Partition, rect: Rectangle) -> Result<(), Error> {
    if !lambda.fits_in(rect) {
        return Err(Error::NotContained {
            partition: lambda.to_string(),
            shape: rect.to_string(),
        });
    }
    Ok(())
}

fn check_contained_stair(lambda: &StrictPartition, stair: Staircase) -> Result<(), Error> {
    if !lambda.fits_in(stair) {
        return Err(Error::NotContained {
            partition: lambda.to_string(),
            shape: stair.to_string(),
        });
    }
    Ok(())
}

/// Column span of part λ_i (1-indexed matrix row `row`) drawn upper-right in
/// a row spanning columns 1..=row_width: the rightmost λ_i columns.
fn count_surviving_span(
    row: u32,
    row_width: u32,
    part: u32,
    crossings: &Crossings,
) -> u64 {
    if crossings.rows.contains(&row) {
        return 0;
    }
    let lo = row_width - part + 1;
    (lo..=row_width)
        .filter(|c| !crossings.cols.contains(c))
        .count() as u64
}

fn count_surviving_rect(lambda: &Partition, rect: Rectangle, crossings: &Crossings) -> u64 {
    (1..=rect.rows())
        .map(|i| count_surviving_span(i, rect.cols(), lambda.part((i - 1) as usize), crossings))
        .sum()
}

fn count_surviving_staircase(
    lambda: &StrictPartition,
    stair: Staircase,
    crossings: &Crossings,
) -> u64 {
    let n = stair.side();
    (1..=lambda.len() as u32)
        .map(|i| count_surviving_span(i, n + 1 - i, lambda.part((i - 1) as usize), crossings))
        .sum()
}
