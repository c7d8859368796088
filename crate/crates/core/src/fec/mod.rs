//! Transport-block coding chain: CRC attachment, quasi-cyclic LDPC encoding,
//! circular-buffer rate matching, normalized min-sum decoding and the MCS
//! table.
//!
//! One code block per transport block. The code family is a quasi-cyclic
//! construction with a dual-diagonal core (shipped as a data file, see
//! `data/ldpc_basegraphs.txt`): BG1 carries 22 systematic base columns, BG2
//! carries 10, and the first two systematic columns are always punctured.

mod basegraph;
mod crc;
mod decode;
mod encode;
mod mcs;
mod ratematch;

pub use basegraph::{base_graph, BaseGraph, BaseGraphId};
pub use crc::{crc_attach, crc_check, CRC16_POLY, CRC24_POLY};
pub use decode::{ldpc_decode, DecodeResult, LLR_CAP};
pub use encode::ldpc_encode;
pub use mcs::{mcs_lookup, McsEntry, MCS_TABLE_LEN};
pub use ratematch::{rate_match, rate_recover};

use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum FecError {
    #[error("unknown MCS index {0}")]
    UnknownMcs(usize),
    #[error("invalid code config: {0}")]
    ConfigInvalid(String),
    #[error("capacity {capacity} bits cannot carry MCS {mcs_index} (payload would be {payload} bits)")]
    CapacityTooSmall {
        capacity: usize,
        mcs_index: usize,
        payload: isize,
    },
}

/// Lifting sizes supported by the shipped base graphs.
pub const LIFTING_SIZES: [usize; 5] = [16, 32, 64, 128, 256];

/// Derived parameters for one code block.
#[derive(Debug, Clone, PartialEq)]
pub struct CodeConfig {
    pub base_graph: BaseGraphId,
    pub lifting_size: usize,
    /// Real information bits (payload + CRC); filler bits pad up to
    /// `info_cols * lifting_size`.
    pub info_bits: usize,
    pub rate_matched_bits: usize,
    pub crc_width: usize,
}

impl CodeConfig {
    pub fn validate(&self) -> Result<(), FecError> {
        let bg = base_graph(self.base_graph);
        if !LIFTING_SIZES.contains(&self.lifting_size) {
            return Err(FecError::ConfigInvalid(format!(
                "unsupported lifting size {}",
                self.lifting_size
            )));
        }
        let k_max = bg.info_cols * self.lifting_size;
        if self.info_bits > k_max {
            return Err(FecError::ConfigInvalid(format!(
                "info_bits {} exceeds {} for {:?} Z={}",
                self.info_bits, k_max, self.base_graph, self.lifting_size
            )));
        }
        if self.info_bits <= 2 * self.lifting_size {
            return Err(FecError::ConfigInvalid(format!(
                "info_bits {} does not clear the 2Z punctured head",
                self.info_bits
            )));
        }
        if self.rate_matched_bits < self.info_bits {
            return Err(FecError::ConfigInvalid(format!(
                "rate_matched_bits {} below info_bits {}",
                self.rate_matched_bits, self.info_bits
            )));
        }
        Ok(())
    }

    /// Systematic width including fillers.
    pub fn k_full(&self) -> usize {
        base_graph(self.base_graph).info_cols * self.lifting_size
    }

    /// Mother codeword length.
    pub fn n_full(&self) -> usize {
        base_graph(self.base_graph).cols * self.lifting_size
    }

    /// Filler positions within the systematic part.
    pub fn filler_range(&self) -> std::ops::Range<usize> {
        self.info_bits..self.k_full()
    }
}

/// Transport-block plan: payload size and code config derived from an MCS and
/// a data capacity in bits.
#[derive(Debug, Clone, PartialEq)]
pub struct TbConfig {
    pub mcs: McsEntry,
    pub capacity_bits: usize,
    pub payload_bits: usize,
    pub code: CodeConfig,
}

const TB_CRC_WIDTH: usize = 24;

/// Derive the transport-block plan: payload = floor(capacity * R) - CRC,
/// BG2 for rates at or below 0.67, smallest lifting size that fits.
pub fn plan_tb(mcs_index: usize, capacity_bits: usize) -> Result<TbConfig, FecError> {
    let mcs = mcs_lookup(mcs_index)?;
    let payload = (capacity_bits as f64 * mcs.code_rate).floor() as isize - TB_CRC_WIDTH as isize;
    if payload <= 0 {
        return Err(FecError::CapacityTooSmall {
            capacity: capacity_bits,
            mcs_index,
            payload,
        });
    }
    let payload_bits = payload as usize;
    let info_bits = payload_bits + TB_CRC_WIDTH;
    let bg_id = if mcs.code_rate <= 0.67 {
        BaseGraphId::Bg2
    } else {
        BaseGraphId::Bg1
    };
    let info_cols = base_graph(bg_id).info_cols;
    let lifting_size = *LIFTING_SIZES
        .iter()
        .find(|&&z| info_cols * z >= info_bits && info_bits > 2 * z)
        .ok_or(FecError::CapacityTooSmall {
            capacity: capacity_bits,
            mcs_index,
            payload,
        })?;
    let code = CodeConfig {
        base_graph: bg_id,
        lifting_size,
        info_bits,
        rate_matched_bits: capacity_bits,
        crc_width: TB_CRC_WIDTH,
    };
    code.validate()?;
    Ok(TbConfig {
        mcs,
        capacity_bits,
        payload_bits,
        code,
    })
}

/// Payload -> CRC -> LDPC -> rate matching. Output length is
/// `capacity_bits`.
pub fn tb_encode(payload: &[u8], tb: &TbConfig) -> Vec<u8> {
    assert_eq!(payload.len(), tb.payload_bits, "payload must match the plan");
    let mut info = crc_attach(payload, tb.code.crc_width);
    info.resize(tb.code.k_full(), 0); // fillers
    let codeword = ldpc_encode(&info, &tb.code).expect("plan was validated");
    rate_match(&codeword, tb.capacity_bits, &tb.code)
}

/// Result of decoding one transport block.
#[derive(Debug, Clone, PartialEq)]
pub struct TbDecodeResult {
    pub payload: Vec<u8>,
    pub crc_pass: bool,
    pub iters_used: usize,
}

/// LLRs (length `capacity_bits`, convention log P(0)/P(1)) -> rate recovery
/// -> min-sum decoding -> CRC check.
pub fn tb_decode(llrs: &[f64], tb: &TbConfig, max_iters: usize) -> TbDecodeResult {
    assert_eq!(llrs.len(), tb.capacity_bits);
    let mother = rate_recover(llrs, &tb.code);
    let result = ldpc_decode(&mother, &tb.code, max_iters);
    let payload = result.info_bits[..tb.payload_bits].to_vec();
    TbDecodeResult {
        payload,
        crc_pass: result.crc_pass,
        iters_used: result.iters_used,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_bits(n: usize, seed: u64) -> Vec<u8> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..n).map(|_| rng.gen_range(0..2u8)).collect()
    }

    #[test]
    fn plan_matches_arithmetic_for_mcs20_nrb4() {
        // Capacity from the RE-map count: (13*48 + 24) data REs * 6 bits.
        let capacity = (13 * 48 + 24) * 6;
        let tb = plan_tb(20, capacity).unwrap();
        let expected_payload = (capacity as f64 * (567.0 / 1024.0)).floor() as usize - 24;
        assert_eq!(tb.payload_bits, expected_payload);
        assert_eq!(tb.code.base_graph, BaseGraphId::Bg2);
        assert!(tb.code.info_bits <= 10 * tb.code.lifting_size);
    }

    #[test]
    fn plan_uses_bg1_for_high_rate() {
        let tb = plan_tb(27, 5184).unwrap();
        assert_eq!(tb.code.base_graph, BaseGraphId::Bg1);
    }

    #[test]
    fn tiny_capacity_rejected() {
        assert!(matches!(
            plan_tb(27, 20),
            Err(FecError::CapacityTooSmall { .. })
        ));
    }

    #[test]
    fn noiseless_round_trip_exact() {
        for (mcs_index, capacity) in [(20usize, 3888usize), (27, 5184), (0, 1200)] {
            let tb = plan_tb(mcs_index, capacity).unwrap();
            let payload = random_bits(tb.payload_bits, 99 + mcs_index as u64);
            let coded = tb_encode(&payload, &tb);
            assert_eq!(coded.len(), capacity);
            let llrs: Vec<f64> = coded
                .iter()
                .map(|&b| if b == 0 { LLR_CAP } else { -LLR_CAP })
                .collect();
            let out = tb_decode(&llrs, &tb, 25);
            assert!(out.crc_pass, "mcs {mcs_index}");
            assert_eq!(out.payload, payload);
            assert!(out.iters_used <= 2);
        }
    }
}
