//! Systematic quasi-cyclic LDPC encoding.

use super::{base_graph, CodeConfig, FecError};

/// XOR `src` rotated by `shift` into `dst` (both length Z); rotation by s
/// maps src[(i + s) % Z] into position i, matching a ZxZ identity rotated
/// right by s.
fn xor_rotated(dst: &mut [u8], src: &[u8], shift: usize) {
    let z = dst.len();
    let s = shift % z;
    for i in 0..z {
        dst[i] ^= src[(i + s) % z];
    }
}

/// Encode `info` (length `info_cols * Z`, fillers included as zeros) into the
/// full mother codeword. The four core parity blocks come from the row-sum
/// closed form of the dual-diagonal core; extension parities are direct row
/// sums.
pub fn ldpc_encode(info: &[u8], cfg: &CodeConfig) -> Result<Vec<u8>, FecError> {
    cfg.validate()?;
    let bg = base_graph(cfg.base_graph);
    let z = cfg.lifting_size;
    let k = bg.info_cols;
    if info.len() != k * z {
        return Err(FecError::ConfigInvalid(format!(
            "info length {} != {}",
            info.len(),
            k * z
        )));
    }
    let mut v = vec![0u8; bg.cols * z];
    v[..k * z].copy_from_slice(info);

    let row_sum_over = |v: &[u8], row: usize, max_col: usize| -> Vec<u8> {
        let mut acc = vec![0u8; z];
        for &(c, s) in &bg.row_entries[row] {
            if c < max_col {
                xor_rotated(&mut acc, &v[c * z..(c + 1) * z], s);
            }
        }
        acc
    };

    // Core: rows 0..4 over the info columns.
    let s0 = row_sum_over(&v, 0, k);
    let s1 = row_sum_over(&v, 1, k);
    let s2 = row_sum_over(&v, 2, k);
    let s3 = row_sum_over(&v, 3, k);
    // Summing all four core rows cancels every parity term except p0
    // (shifts 1, 0, 1 telescope to the identity), so p0 = s0+s1+s2+s3.
    let mut p0 = vec![0u8; z];
    for i in 0..z {
        p0[i] = s0[i] ^ s1[i] ^ s2[i] ^ s3[i];
    }
    v[k * z..(k + 1) * z].copy_from_slice(&p0);
    // Row 0: P^1 p0 + p1 = s0.
    let mut p1 = s0.clone();
    xor_rotated(&mut p1, &p0, 1);
    v[(k + 1) * z..(k + 2) * z].copy_from_slice(&p1);
    // Row 1: p0 + p1 + p2 = s1.
    let mut p2 = s1.clone();
    for i in 0..z {
        p2[i] ^= p0[i] ^ p1[i];
    }
    v[(k + 2) * z..(k + 3) * z].copy_from_slice(&p2);
    // Row 2: p2 + p3 = s2.
    let mut p3 = s2.clone();
    for i in 0..z {
        p3[i] ^= p2[i];
    }
    v[(k + 3) * z..(k + 4) * z].copy_from_slice(&p3);

    // Extension rows: identity column makes each parity a plain row sum over
    // everything to its left.
    for r in 4..bg.rows {
        let ext_col = k + 4 + (r - 4);
        let acc = row_sum_over(&v, r, ext_col);
        v[ext_col * z..(ext_col + 1) * z].copy_from_slice(&acc);
    }
    Ok(v)
}

/// Syndrome of a full mother codeword; all-zero means valid.
pub fn syndrome(codeword: &[u8], cfg: &CodeConfig) -> Vec<u8> {
    let bg = base_graph(cfg.base_graph);
    let z = cfg.lifting_size;
    assert_eq!(codeword.len(), bg.cols * z);
    let mut out = vec![0u8; bg.rows * z];
    for r in 0..bg.rows {
        let acc = &mut out[r * z..(r + 1) * z];
        for &(c, s) in &bg.row_entries[r] {
            let src = &codeword[c * z..(c + 1) * z];
            let sh = s % z;
            for i in 0..z {
                acc[i] ^= src[(i + sh) % z];
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::super::{BaseGraphId, CodeConfig};
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn cfg(bg: BaseGraphId, z: usize) -> CodeConfig {
        let info_cols = base_graph(bg).info_cols;
        CodeConfig {
            base_graph: bg,
            lifting_size: z,
            info_bits: info_cols * z,
            rate_matched_bits: info_cols * z,
            crc_width: 24,
        }
    }

    #[test]
    fn all_zero_info_gives_all_zero_codeword() {
        let c = cfg(BaseGraphId::Bg1, 16);
        let cw = ldpc_encode(&vec![0u8; c.k_full()], &c).unwrap();
        assert!(cw.iter().all(|&b| b == 0));
    }

    #[test]
    fn random_info_has_zero_syndrome() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for bg in [BaseGraphId::Bg1, BaseGraphId::Bg2] {
            for z in [16usize, 64, 256] {
                let c = cfg(bg, z);
                let info: Vec<u8> = (0..c.k_full()).map(|_| rng.gen_range(0..2u8)).collect();
                let cw = ldpc_encode(&info, &c).unwrap();
                assert_eq!(&cw[..c.k_full()], &info[..], "systematic part preserved");
                assert!(syndrome(&cw, &c).iter().all(|&b| b == 0), "{bg:?} Z={z}");
            }
        }
    }

    #[test]
    fn code_is_linear() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let c = cfg(BaseGraphId::Bg2, 32);
        let a: Vec<u8> = (0..c.k_full()).map(|_| rng.gen_range(0..2u8)).collect();
        let b: Vec<u8> = (0..c.k_full()).map(|_| rng.gen_range(0..2u8)).collect();
        let ab: Vec<u8> = a.iter().zip(&b).map(|(x, y)| x ^ y).collect();
        let ca = ldpc_encode(&a, &c).unwrap();
        let cb = ldpc_encode(&b, &c).unwrap();
        let cab = ldpc_encode(&ab, &c).unwrap();
        for i in 0..cab.len() {
            assert_eq!(cab[i], ca[i] ^ cb[i]);
        }
    }
}
