//! Bit-level CRC attachment and checking.
//!
//! CRC-24: polynomial 0x864CFB (x^24 + x^23 + x^18 + x^17 + x^14 + x^11 +
//! x^10 + x^7 + x^6 + x^5 + x^4 + x^3 + x + 1). CRC-16: polynomial 0x1021.
//! The register starts all-ones (so the all-zero block never checks), no
//! final XOR; bits are processed MSB-first.

pub const CRC24_POLY: u32 = 0x86_4c_fb;
pub const CRC16_POLY: u32 = 0x10_21;

fn poly_for(width: usize) -> u32 {
    match width {
        16 => CRC16_POLY,
        24 => CRC24_POLY,
        other => panic!("unsupported CRC width {other}"),
    }
}

fn remainder(bits: &[u8], width: usize) -> u32 {
    let poly = poly_for(width);
    let top = 1u32 << (width - 1);
    let mask = (1u32 << width) - 1;
    let mut reg = mask;
    for &b in bits {
        let fb = ((reg & top) != 0) as u32 ^ u32::from(b);
        reg = (reg << 1) & mask;
        if fb != 0 {
            reg ^= poly & mask;
        }
    }
    reg
}

/// Append a `width`-bit CRC to `bits`.
pub fn crc_attach(bits: &[u8], width: usize) -> Vec<u8> {
    let r = remainder(bits, width);
    let mut out = bits.to_vec();
    for i in (0..width).rev() {
        out.push(((r >> i) & 1) as u8);
    }
    out
}

/// Check a block produced by [`crc_attach`].
pub fn crc_check(bits: &[u8], width: usize) -> bool {
    if bits.len() < width {
        return false;
    }
    remainder(bits, width) == 0
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn round_trip_random_payloads() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for width in [16usize, 24] {
            for _ in 0..20 {
                let bits: Vec<u8> = (0..100).map(|_| rng.gen_range(0..2u8)).collect();
                assert!(crc_check(&crc_attach(&bits, width), width));
            }
        }
    }

    #[test]
    fn empty_payload() {
        let attached = crc_attach(&[], 24);
        assert_eq!(attached.len(), 24);
        assert!(crc_check(&attached, 24));
    }

    #[test]
    fn single_bit_flips_detected_exhaustively() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let payload: Vec<u8> = (0..64).map(|_| rng.gen_range(0..2u8)).collect();
        for width in [16usize, 24] {
            let block = crc_attach(&payload, width);
            for i in 0..block.len() {
                let mut bad = block.clone();
                bad[i] ^= 1;
                assert!(!crc_check(&bad, width), "flip at {i} undetected");
            }
        }
    }

    #[test]
    fn double_bit_flips_detected_sampled() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let payload: Vec<u8> = (0..64).map(|_| rng.gen_range(0..2u8)).collect();
        let block = crc_attach(&payload, 24);
        for _ in 0..10_000 {
            let i = rng.gen_range(0..block.len());
            let mut j = rng.gen_range(0..block.len());
            while j == i {
                j = rng.gen_range(0..block.len());
            }
            let mut bad = block.clone();
            bad[i] ^= 1;
            bad[j] ^= 1;
            assert!(!crc_check(&bad, 24), "flips at {i},{j} undetected");
        }
    }
}
