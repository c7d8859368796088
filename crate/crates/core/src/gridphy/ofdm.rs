//! Unitary OFDM modulation/demodulation with per-symbol cyclic prefixes.
//!
//! Subcarrier k of an n-subcarrier grid sits at FFT bin
//! `(k - n/2) mod fft_size`, i.e. the grid is centered on DC and the DC bin
//! is used. Both transforms carry a 1/sqrt(fft_size) factor so the pair is
//! energy preserving.

use super::{Cpx, GridError, ReKind, ResourceGrid};
use rustfft::FftPlanner;

fn bin_of(subcarrier: usize, n_subcarriers: usize, fft_size: usize) -> usize {
    let centered = subcarrier as isize - (n_subcarriers / 2) as isize;
    centered.rem_euclid(fft_size as isize) as usize
}

/// Modulate each port of `grid` into a time-domain sample stream. One CP
/// length per OFDM symbol.
pub fn ofdm_modulate(
    grid: &ResourceGrid,
    fft_size: usize,
    cp_lengths: &[usize],
) -> Result<Vec<Vec<Cpx>>, GridError> {
    if grid.n_subcarriers() > fft_size {
        return Err(GridError::GridTooWide {
            n_subcarriers: grid.n_subcarriers(),
            fft_size,
        });
    }
    assert_eq!(cp_lengths.len(), grid.n_symbols(), "one CP length per symbol");
    let mut planner = FftPlanner::new();
    let ifft = planner.plan_fft_inverse(fft_size);
    let scale = 1.0 / (fft_size as f64).sqrt();
    let mut out = Vec::with_capacity(grid.n_ports());
    for port in 0..grid.n_ports() {
        let mut stream = Vec::new();
        let mut buf = vec![Cpx::new(0.0, 0.0); fft_size];
        for (sym, &cp) in cp_lengths.iter().enumerate() {
            buf.iter_mut().for_each(|c| *c = Cpx::new(0.0, 0.0));
            for k in 0..grid.n_subcarriers() {
                buf[bin_of(k, grid.n_subcarriers(), fft_size)] = grid.get(sym, k, port);
            }
            ifft.process(&mut buf);
            buf.iter_mut().for_each(|c| *c *= scale);
            stream.extend_from_slice(&buf[fft_size - cp..]);
            stream.extend_from_slice(&buf);
        }
        out.push(stream);
    }
    Ok(out)
}

/// Demodulate `samples` (one port) back into a grid of
/// `cp_lengths.len()` symbols by `n_subcarriers`. `timing_offset` moves each
/// FFT window: negative values start inside the cyclic prefix, which shows up
/// as a pure per-subcarrier phase ramp.
pub fn ofdm_demodulate(
    samples: &[Cpx],
    fft_size: usize,
    cp_lengths: &[usize],
    timing_offset: isize,
    n_subcarriers: usize,
) -> Result<ResourceGrid, GridError> {
    if n_subcarriers > fft_size {
        return Err(GridError::GridTooWide { n_subcarriers, fft_size });
    }
    let n_symbols = cp_lengths.len();
    let mut planner = FftPlanner::new();
    let fft = planner.plan_fft_forward(fft_size);
    let scale = 1.0 / (fft_size as f64).sqrt();
    let mut grid = ResourceGrid::new(n_symbols, n_subcarriers, 1);
    let mut start = 0isize;
    for (sym, &cp) in cp_lengths.iter().enumerate() {
        let win = start + cp as isize + timing_offset;
        let end = win + fft_size as isize;
        if win < 0 || end as usize > samples.len() {
            return Err(GridError::InsufficientSamples {
                needed: end.max(0) as usize,
                got: samples.len(),
            });
        }
        let mut buf = samples[win as usize..end as usize].to_vec();
        fft.process(&mut buf);
        for k in 0..n_subcarriers {
            grid.set(sym, k, 0, buf[bin_of(k, n_subcarriers, fft_size)] * scale);
            grid.set_kind(sym, k, ReKind::Data);
        }
        start += (cp + fft_size) as isize;
    }
    Ok(grid)
}
