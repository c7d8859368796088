//! Modulation and coding scheme table.
//!
//! Indices 0..=26 follow the 64QAM-capable table shape (QPSK through 64QAM);
//! index 27 is the 256QAM rate-948/1024 top entry. This keeps both reference
//! operating points used throughout the crate: MCS 20 = 64QAM rate 567/1024
//! and MCS 27 = 256QAM rate 948/1024.

use super::FecError;

/// One MCS entry: constellation order and code rate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McsEntry {
    pub index: usize,
    pub bits_per_symbol: usize,
    /// Code rate as fraction of 1024.
    pub rate_x1024: f64,
    pub code_rate: f64,
    pub spectral_efficiency: f64,
}

const TABLE: [(usize, f64); 28] = [
    (2, 120.0),
    (2, 157.0),
    (2, 193.0),
    (2, 251.0),
    (2, 308.0),
    (2, 379.0),
    (2, 449.0),
    (2, 526.0),
    (2, 602.0),
    (2, 679.0),
    (4, 340.0),
    (4, 378.0),
    (4, 434.0),
    (4, 490.0),
    (4, 553.0),
    (4, 616.0),
    (4, 658.0),
    (6, 438.0),
    (6, 466.0),
    (6, 517.0),
    (6, 567.0),
    (6, 616.0),
    (6, 666.0),
    (6, 719.0),
    (6, 772.0),
    (6, 822.0),
    (6, 873.0),
    (8, 948.0),
];

pub const MCS_TABLE_LEN: usize = TABLE.len();

/// Look up an MCS index (0..=27).
pub fn mcs_lookup(index: usize) -> Result<McsEntry, FecError> {
    let (bits_per_symbol, rate_x1024) = *TABLE.get(index).ok_or(FecError::UnknownMcs(index))?;
    let code_rate = rate_x1024 / 1024.0;
    Ok(McsEntry {
        index,
        bits_per_symbol,
        rate_x1024,
        code_rate,
        spectral_efficiency: bits_per_symbol as f64 * code_rate,
    })
}
