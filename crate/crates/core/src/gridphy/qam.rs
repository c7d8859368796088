//! Gray-mapped QAM constellations (QPSK through 256QAM) and max-log soft
//! demapping.

use super::{Cpx, GridError};

fn level_scale(bits_per_symbol: usize) -> Result<f64, GridError> {
    // Unit average energy: sqrt(2), sqrt(10), sqrt(42), sqrt(170).
    match bits_per_symbol {
        2 => Ok(2.0f64.sqrt()),
        4 => Ok(10.0f64.sqrt()),
        6 => Ok(42.0f64.sqrt()),
        8 => Ok(170.0f64.sqrt()),
        other => Err(GridError::UnsupportedModulation(other)),
    }
}

/// Map one label (MSB-first bits) to its constellation point.
fn map_symbol(bits: &[u8], scale: f64) -> Cpx {
    let b = |i: usize| 1.0 - 2.0 * f64::from(bits[i]);
    let (re, im) = match bits.len() {
        2 => (b(0), b(1)),
        4 => (b(0) * (2.0 - b(2)), b(1) * (2.0 - b(3))),
        6 => (
            b(0) * (4.0 - b(2) * (2.0 - b(4))),
            b(1) * (4.0 - b(3) * (2.0 - b(5))),
        ),
        8 => (
            b(0) * (8.0 - b(2) * (4.0 - b(4) * (2.0 - b(6)))),
            b(1) * (8.0 - b(3) * (4.0 - b(5) * (2.0 - b(7)))),
        ),
        _ => unreachable!(),
    };
    Cpx::new(re / scale, im / scale)
}

/// Full constellation in label order (index = MSB-first bit label).
pub fn constellation(bits_per_symbol: usize) -> Result<Vec<Cpx>, GridError> {
    let scale = level_scale(bits_per_symbol)?;
    let n = 1usize << bits_per_symbol;
    Ok((0..n)
        .map(|label| {
            let bits: Vec<u8> = (0..bits_per_symbol)
                .map(|i| ((label >> (bits_per_symbol - 1 - i)) & 1) as u8)
                .collect();
            map_symbol(&bits, scale)
        })
        .collect())
}

/// Map a bit sequence to Gray-coded QAM symbols with unit average energy.
pub fn qam_modulate(bits: &[u8], bits_per_symbol: usize) -> Result<Vec<Cpx>, GridError> {
    let scale = level_scale(bits_per_symbol)?;
    if bits.len() % bits_per_symbol != 0 {
        return Err(GridError::LengthMismatch {
            got: bits.len(),
            bits_per_symbol,
        });
    }
    Ok(bits
        .chunks_exact(bits_per_symbol)
        .map(|chunk| map_symbol(chunk, scale))
        .collect())
}

/// Max-log per-bit LLRs, convention `log P(0)/P(1)` (positive favors bit 0),
/// for an observation `y = h_eff * s + n` with complex noise variance
/// `noise_var`.
pub fn llr_demap(
    y: Cpx,
    h_eff: Cpx,
    noise_var: f64,
    bits_per_symbol: usize,
) -> Result<Vec<f64>, GridError> {
    if !(noise_var > 0.0) {
        return Err(GridError::NonPositiveNoise(noise_var));
    }
    let points = constellation(bits_per_symbol)?;
    let mut min0 = vec![f64::INFINITY; bits_per_symbol];
    let mut min1 = vec![f64::INFINITY; bits_per_symbol];
    for (label, s) in points.iter().enumerate() {
        let d = (y - h_eff * s).norm_sqr();
        for i in 0..bits_per_symbol {
            let bit = (label >> (bits_per_symbol - 1 - i)) & 1;
            let slot = if bit == 0 { &mut min0[i] } else { &mut min1[i] };
            if d < *slot {
                *slot = d;
            }
        }
    }
    Ok((0..bits_per_symbol)
        .map(|i| (min1[i] - min0[i]) / noise_var)
        .collect())
}
