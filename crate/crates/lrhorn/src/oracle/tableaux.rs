//! Explicit polynomial models for Schur, Schur-P, and Schur-Q functions in
//! finitely many variables, built by enumerating tableaux.
//!
//! `schur_poly` sums x^weight over semistandard Young tableaux with entries
//! in {1..N}: rows weakly increase, columns strictly increase.
//!
//! `schur_q_poly` sums over marked shifted tableaux on the alphabet
//! 1' < 1 < 2' < 2 < ... < N' < N: the shifted diagram of a strict shape has
//! row i indented by i-1; rows and columns weakly increase, an unprimed
//! letter repeats only along a row, a primed letter repeats only down a
//! column, and there is no restriction on the diagonal. `schur_p_poly` is
//! the same polynomial with every coefficient divided by 2^(number of
//! parts), exactly.

use crate::error::Error;
use crate::oracle::monomial::{is_weakly_decreasing, MonomialMap};
use crate::partition::{Partition, StrictPartition};

/// The Schur polynomial S_λ(x_1..x_N). Zero when λ has more than N parts;
/// homogeneous of degree |λ|.
pub fn schur_poly(shape: &Partition, n_vars: usize) -> Result<MonomialMap, Error> {
    let mut poly = MonomialMap::zero(n_vars);
    if shape.len() > n_vars {
        return Ok(poly);
    }
    if shape.is_empty() {
        return Ok(MonomialMap::constant(n_vars, 1));
    }
    let rows: Vec<usize> = shape.parts().iter().map(|&p| p as usize).collect();
    let mut tableau: Vec<Vec<u32>> = rows.iter().map(|&w| vec![0; w]).collect();
    let mut weight = vec![0u32; n_vars];
    fill_ssyt(&rows, 0, 0, n_vars as u32, &mut tableau, &mut weight, &mut poly)?;
    Ok(poly)
}

fn fill_ssyt(
    rows: &[usize],
    row: usize,
    col: usize,
    max_value: u32,
    tableau: &mut Vec<Vec<u32>>,
    weight: &mut Vec<u32>,
    poly: &mut MonomialMap,
) -> Result<(), Error> {
    if row == rows.len() {
        if is_weakly_decreasing(weight) {
            poly.add_term(weight.clone(), 1)?;
        }
        return Ok(());
    }
    let (next_row, next_col) = if col + 1 == rows[row] {
        (row + 1, 0)
    } else {
        (row, col + 1)
    };
    let left = if col > 0 { tableau[row][col - 1] } else { 1 };
    let above = if row > 0 && col < rows[row - 1] {
        tableau[row - 1][col] + 1
    } else {
        1
    };
    let lo = left.max(above);
    for value in lo..=max_value {
        tableau[row][col] = value;
        weight[(value - 1) as usize] += 1;
        fill_ssyt(rows, next_row, next_col, max_value, tableau, weight, poly)?;
        weight[(value - 1) as usize] -= 1;
    }
    Ok(())
}

/// The Schur Q-polynomial Q_λ(x_1..x_N) for a strict shape. Zero when λ has
/// more than N parts; homogeneous of degree |λ|; the lexicographically
/// leading exponent vector is λ itself with coefficient 2^(parts of λ).
pub fn schur_q_poly(shape: &StrictPartition, n_vars: usize) -> Result<MonomialMap, Error> {
    let mut poly = MonomialMap::zero(n_vars);
    if shape.len() > n_vars {
        return Ok(poly);
    }
    if shape.is_empty() {
        return Ok(MonomialMap::constant(n_vars, 1));
    }
    let rows: Vec<usize> = shape.parts().iter().map(|&p| p as usize).collect();
    // Letters are encoded as 2v-1 for v' and 2v for v, matching the order
    // 1' < 1 < 2' < 2 < ...
    let mut tableau: Vec<Vec<u32>> = rows.iter().map(|&w| vec![0; w]).collect();
    let mut weight = vec![0u32; n_vars];
    fill_shifted(&rows, 0, 0, n_vars as u32, &mut tableau, &mut weight, &mut poly)?;
    Ok(poly)
}

fn fill_shifted(
    rows: &[usize],
    row: usize,
    col: usize,
    max_value: u32,
    tableau: &mut Vec<Vec<u32>>,
    weight: &mut Vec<u32>,
    poly: &mut MonomialMap,
) -> Result<(), Error> {
    if row == rows.len() {
        if is_weakly_decreasing(weight) {
            poly.add_term(weight.clone(), 1)?;
        }
        return Ok(());
    }
    let (next_row, next_col) = if col + 1 == rows[row] {
        (row + 1, 0)
    } else {
        (row, col + 1)
    };
    // Absolute column of this cell is row + col; the cell above, when the
    // row is not the first, is column (row + col) - (row - 1) = col + 1 of
    // the previous row, which always exists because strict rows shrink by
    // at least one while shifting right by exactly one.
    let left = if col > 0 { Some(tableau[row][col - 1]) } else { None };
    let above = if row > 0 { Some(tableau[row - 1][col + 1]) } else { None };
    for letter in 1..=2 * max_value {
        let primed = letter % 2 == 1;
        if let Some(l) = left {
            // Weakly increasing rows; a primed letter at most once per row.
            if letter < l || (letter == l && primed) {
                continue;
            }
        }
        if let Some(a) = above {
            // Weakly increasing columns; an unprimed letter at most once per
            // column.
            if letter < a || (letter == a && !primed) {
                continue;
            }
        }
        let value = letter.div_ceil(2);
        tableau[row][col] = letter;
        weight[(value - 1) as usize] += 1;
        fill_shifted(rows, next_row, next_col, max_value, tableau, weight, poly)?;
        weight[(value - 1) as usize] -= 1;
    }
    Ok(())
}

/// The Schur P-polynomial: Q_λ with every coefficient divided by 2^(number
/// of parts of λ). The division must be exact; a remainder signals an
/// internal inconsistency in the tableau model.
pub fn schur_p_poly(shape: &StrictPartition, n_vars: usize) -> Result<MonomialMap, Error> {
    let q = schur_q_poly(shape, n_vars)?;
    if q.is_zero() {
        return Ok(q);
    }
    let divisor = 1i64
        .checked_shl(shape.len() as u32)
        .ok_or(Error::Overflow)?;
    q.divide_exact(divisor)
}
