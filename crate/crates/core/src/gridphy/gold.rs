//! Length-31 Gold sequence generator (dual LFSR, 1600-step advance), the
//! pseudo-random source behind LTE CRS and NR DMRS pilot values.

const ADVANCE: usize = 1600;

/// Generate `length` bits of the Gold sequence for `c_init`, starting at
/// `offset`. `gold_sequence(c, k, n)` equals bits `[k, k+n)` of
/// `gold_sequence(c, 0, k+n)`.
pub fn gold_sequence(c_init: u32, offset: usize, length: usize) -> Vec<u8> {
    debug_assert!(c_init < (1 << 31));
    let mut x1: u32 = 1;
    let mut x2: u32 = c_init & 0x7fff_ffff;
    // x1: x^31 + x^3 + 1, x2: x^31 + x^3 + x^2 + x + 1; step emits bit 0.
    let step = |x1: &mut u32, x2: &mut u32| -> u8 {
        let b1 = *x1 & 1;
        let b2 = *x2 & 1;
        let f1 = ((*x1 >> 3) ^ *x1) & 1;
        let f2 = ((*x2 >> 3) ^ (*x2 >> 2) ^ (*x2 >> 1) ^ *x2) & 1;
        *x1 = (*x1 >> 1) | (f1 << 30);
        *x2 = (*x2 >> 1) | (f2 << 30);
        (b1 ^ b2) as u8
    };
    for _ in 0..ADVANCE + offset {
        step(&mut x1, &mut x2);
    }
    (0..length).map(|_| step(&mut x1, &mut x2)).collect()
}
