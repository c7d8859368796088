//! Core physical-layer math: resource grids, OFDM, pilot sequences, QAM
//! mapping and per-bit log-likelihood computation.
//!
//! Conventions fixed here and relied on everywhere else:
//!
//! * LLRs are `log P(bit=0) / P(bit=1)`: positive favors bit 0.
//! * OFDM transforms are unitary (energy preserving); the grid is centered on
//!   DC and the DC subcarrier is used.
//! * Data REs are ordered symbol-major, subcarrier-minor, bits MSB-first
//!   within each RE.

mod gold;
mod ofdm;
mod pusch;
mod qam;

pub use gold::gold_sequence;
pub use ofdm::{ofdm_demodulate, ofdm_modulate};
pub use pusch::{build_pusch_slot, data_re_capacity, dmrs_pilots};
pub use qam::{llr_demap, qam_modulate, constellation};

use num_complex::Complex;
use thiserror::Error;

/// Complex baseband sample.
pub type Cpx = Complex<f64>;

#[derive(Debug, Error, PartialEq)]
pub enum GridError {
    #[error("bit count {got} not divisible by bits_per_symbol {bits_per_symbol}")]
    LengthMismatch { got: usize, bits_per_symbol: usize },
    #[error("unsupported bits_per_symbol {0} (expected 2, 4, 6 or 8)")]
    UnsupportedModulation(usize),
    #[error("noise variance must be positive, got {0}")]
    NonPositiveNoise(f64),
    #[error("grid has {n_subcarriers} subcarriers but FFT size is {fft_size}")]
    GridTooWide { n_subcarriers: usize, fft_size: usize },
    #[error("need {needed} samples, got {got}")]
    InsufficientSamples { needed: usize, got: usize },
    #[error("coded bits {got} do not match data capacity {expected}")]
    CapacityMismatch { expected: usize, got: usize },
}

/// Resource-element label.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReKind {
    Empty,
    Data,
    Pilot,
}

/// One slot's OFDM grid: `n_symbols` x `n_subcarriers` complex cells per port,
/// plus a per-(symbol, subcarrier) RE label shared by all ports.
#[derive(Debug, Clone, PartialEq)]
pub struct ResourceGrid {
    n_symbols: usize,
    n_subcarriers: usize,
    n_ports: usize,
    cells: Vec<Cpx>,
    re_map: Vec<ReKind>,
}

impl ResourceGrid {
    pub fn new(n_symbols: usize, n_subcarriers: usize, n_ports: usize) -> Self {
        Self {
            n_symbols,
            n_subcarriers,
            n_ports,
            cells: vec![Cpx::new(0.0, 0.0); n_symbols * n_subcarriers * n_ports],
            re_map: vec![ReKind::Empty; n_symbols * n_subcarriers],
        }
    }

    pub fn n_symbols(&self) -> usize {
        self.n_symbols
    }

    pub fn n_subcarriers(&self) -> usize {
        self.n_subcarriers
    }

    pub fn n_ports(&self) -> usize {
        self.n_ports
    }

    #[inline]
    fn idx(&self, symbol: usize, subcarrier: usize, port: usize) -> usize {
        debug_assert!(symbol < self.n_symbols && subcarrier < self.n_subcarriers && port < self.n_ports);
        (symbol * self.n_subcarriers + subcarrier) * self.n_ports + port
    }

    #[inline]
    pub fn get(&self, symbol: usize, subcarrier: usize, port: usize) -> Cpx {
        self.cells[self.idx(symbol, subcarrier, port)]
    }

    #[inline]
    pub fn set(&mut self, symbol: usize, subcarrier: usize, port: usize, v: Cpx) {
        let i = self.idx(symbol, subcarrier, port);
        self.cells[i] = v;
    }

    #[inline]
    pub fn kind(&self, symbol: usize, subcarrier: usize) -> ReKind {
        self.re_map[symbol * self.n_subcarriers + subcarrier]
    }

    pub fn set_kind(&mut self, symbol: usize, subcarrier: usize, kind: ReKind) {
        self.re_map[symbol * self.n_subcarriers + subcarrier] = kind;
    }

    /// All cells of one port in (symbol, subcarrier) order.
    pub fn port_cells(&self, port: usize) -> Vec<Cpx> {
        (0..self.n_symbols)
            .flat_map(|s| (0..self.n_subcarriers).map(move |k| (s, k)))
            .map(|(s, k)| self.get(s, k, port))
            .collect()
    }

    /// Data-RE coordinates in the fixed (symbol-major, subcarrier-minor) order.
    pub fn data_res(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for s in 0..self.n_symbols {
            for k in 0..self.n_subcarriers {
                if self.kind(s, k) == ReKind::Data {
                    out.push((s, k));
                }
            }
        }
        out
    }

    /// Mean |cell|^2 over REs labeled Data, averaged across ports.
    pub fn mean_data_power(&self) -> f64 {
        let mut acc = 0.0;
        let mut n = 0usize;
        for s in 0..self.n_symbols {
            for k in 0..self.n_subcarriers {
                if self.kind(s, k) == ReKind::Data {
                    for p in 0..self.n_ports {
                        acc += self.get(s, k, p).norm_sqr();
                        n += 1;
                    }
                }
            }
        }
        if n == 0 {
            0.0
        } else {
            acc / n as f64
        }
    }

    pub fn all_finite(&self) -> bool {
        self.cells.iter().all(|c| c.re.is_finite() && c.im.is_finite())
    }
}

/// Uplink slot shape: one transmission layer, 14 symbols, DMRS configuration
/// type 1 (every other subcarrier on the DMRS symbols).
#[derive(Debug, Clone, PartialEq)]
pub struct SlotConfig {
    pub n_rb: usize,
    pub mcs_index: usize,
    pub dmrs_symbol_indices: Vec<usize>,
    pub dmrs_subcarrier_stride: usize,
    pub pci_or_scrambling_id: u16,
    pub seed: u64,
}

impl SlotConfig {
    pub const N_SYMBOLS: usize = 14;

    pub fn new(n_rb: usize, mcs_index: usize, scrambling_id: u16, seed: u64) -> Self {
        Self {
            n_rb,
            mcs_index,
            dmrs_symbol_indices: vec![2],
            dmrs_subcarrier_stride: 2,
            pci_or_scrambling_id: scrambling_id,
            seed,
        }
    }

    pub fn n_subcarriers(&self) -> usize {
        12 * self.n_rb
    }
}
