/// Mixes a base seed with two stream indices into an independent 64-bit seed.
///
/// Used to give every (probe, trial) capture its own noise stream so that
/// results never depend on evaluation order.
pub fn derive_seed(base: u64, a: u64, b: u64) -> u64 {
    let mut s = splitmix(base);
    s = splitmix(s ^ a.wrapping_mul(0xA24B_AED4_963E_E407));
    splitmix(s ^ b.wrapping_mul(0x9FB2_1C65_1E98_DF25))
}

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}
