//! Uplink slot construction: type-1 comb DMRS pilots plus QAM data.

use super::{gold_sequence, qam_modulate, Cpx, GridError, ReKind, ResourceGrid, SlotConfig};
use crate::fec::mcs_lookup;

/// Pilot initialization mirrors the standard shape: mixes the scrambling
/// identity and the symbol index into a 31-bit seed.
fn dmrs_c_init(scrambling_id: u16, symbol: usize) -> u32 {
    let n_id = u32::from(scrambling_id);
    ((1u32 << 17)
        .wrapping_mul(symbol as u32 + 1)
        .wrapping_mul(2 * n_id + 1)
        .wrapping_add(2 * n_id))
        & 0x7fff_ffff
}

/// QPSK pilot values for one DMRS symbol (one per occupied pilot RE).
pub fn dmrs_pilots(cfg: &SlotConfig, symbol: usize) -> Vec<Cpx> {
    let n_pilots = cfg.n_subcarriers() / cfg.dmrs_subcarrier_stride;
    let bits = gold_sequence(dmrs_c_init(cfg.pci_or_scrambling_id, symbol), 0, 2 * n_pilots);
    qam_modulate(&bits, 2).expect("pilot bit count is even")
}

/// Number of data REs in a slot with this configuration.
pub fn data_re_capacity(cfg: &SlotConfig) -> usize {
    let n_sc = cfg.n_subcarriers();
    let per_dmrs_symbol = n_sc - n_sc / cfg.dmrs_subcarrier_stride;
    let n_dmrs = cfg.dmrs_symbol_indices.len();
    (SlotConfig::N_SYMBOLS - n_dmrs) * n_sc + n_dmrs * per_dmrs_symbol
}

/// Build a single-layer uplink slot: pilots on the type-1 comb of the DMRS
/// symbols, `coded_bits` QAM-mapped onto the data REs in symbol-major,
/// subcarrier-minor order.
pub fn build_pusch_slot(cfg: &SlotConfig, coded_bits: &[u8]) -> Result<ResourceGrid, GridError> {
    let mcs = mcs_lookup(cfg.mcs_index).expect("slot config holds a valid MCS index");
    let bps = mcs.bits_per_symbol;
    let expected = data_re_capacity(cfg) * bps;
    if coded_bits.len() != expected {
        return Err(GridError::CapacityMismatch {
            expected,
            got: coded_bits.len(),
        });
    }
    let n_sc = cfg.n_subcarriers();
    let mut grid = ResourceGrid::new(SlotConfig::N_SYMBOLS, n_sc, 1);
    for &sym in &cfg.dmrs_symbol_indices {
        let pilots = dmrs_pilots(cfg, sym);
        for (m, &p) in pilots.iter().enumerate() {
            let k = m * cfg.dmrs_subcarrier_stride;
            grid.set(sym, k, 0, p);
            grid.set_kind(sym, k, ReKind::Pilot);
        }
    }
    let symbols = qam_modulate(coded_bits, bps)?;
    let mut next = 0usize;
    for s in 0..SlotConfig::N_SYMBOLS {
        for k in 0..n_sc {
            if grid.kind(s, k) == ReKind::Pilot {
                continue;
            }
            grid.set(s, k, 0, symbols[next]);
            grid.set_kind(s, k, ReKind::Data);
            next += 1;
        }
    }
    debug_assert_eq!(next, symbols.len());
    Ok(grid)
}
