//! Enumeration tables over n presence bits, plus the two fixed display
//! layouts used by the alphabet: the 16x2 state listing and the 8x4
//! letter grid.

use serde::Serialize;

use crate::alphabet::{self, Letter};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TruthTableError {
    #[error("n_vars must be in 1..=16, got {0}")]
    VarsOutOfRange(u32),
    #[error("two-column layout needs exactly 32 rows, got {0}")]
    WrongRowCount(usize),
}

/// All 2^n_vars assignments of n_vars bits, in strictly descending order
/// from all-ones to all-zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruthTable {
    n_vars: u32,
    rows: Vec<u32>,
}

impl TruthTable {
    pub fn n_vars(&self) -> u32 {
        self.n_vars
    }

    /// Row values, descending.
    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    /// Renders one row as a bit string, most significant bit first.
    pub fn render_row(&self, index: usize) -> String {
        render_bits(self.rows[index], self.n_vars)
    }

    /// 1-based position of a row value, if present.
    pub fn position(&self, value: u32) -> Option<usize> {
        self.rows.iter().position(|&r| r == value).map(|i| i + 1)
    }
}

fn render_bits(value: u32, n_vars: u32) -> String {
    (0..n_vars)
        .rev()
        .map(|bit| if value >> bit & 1 == 1 { '1' } else { '0' })
        .collect()
}

/// Enumerates all states of `n_vars` presence bits, all-ones first.
pub fn enumerate_states(n_vars: u32) -> Result<TruthTable, TruthTableError> {
    if !(1..=16).contains(&n_vars) {
        return Err(TruthTableError::VarsOutOfRange(n_vars));
    }
    let count = 1u32 << n_vars;
    Ok(TruthTable {
        n_vars,
        rows: (0..count).rev().collect(),
    })
}

/// One display row of the 16x2 state listing: ordinals 1..=16 on the left,
/// 17..=32 on the right.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TwoColumnRow {
    pub left_code: u32,
    pub left_ordinal: usize,
    pub right_code: u32,
    pub right_ordinal: usize,
}

/// Pairs display row r with ordinals (r, r + 16). Requires all 32 states.
pub fn two_column_layout(table: &TruthTable) -> Result<Vec<TwoColumnRow>, TruthTableError> {
    if table.rows.len() != 32 {
        return Err(TruthTableError::WrongRowCount(table.rows.len()));
    }
    Ok((0..16)
        .map(|r| TwoColumnRow {
            left_code: table.rows[r],
            left_ordinal: r + 1,
            right_code: table.rows[r + 16],
            right_ordinal: r + 17,
        })
        .collect())
}

/// The 8x4 letter grid. Cell (row, column) with column 0 leftmost holds the
/// letter with ordinal `4 * row + (4 - column)`: each row lists four
/// consecutive ordinals right to left.
pub fn table4_layout() -> [[&'static Letter; 4]; 8] {
    std::array::from_fn(|r| {
        std::array::from_fn(|c| {
            let ordinal = (4 * r + (4 - c)) as u8;
            alphabet::LetterId::from_ordinal(ordinal)
                .expect("grid ordinal in range")
                .info()
        })
    })
}
