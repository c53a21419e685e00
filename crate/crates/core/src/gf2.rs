//! Bit-packed kernel for series over `F_2`.
//!
//! Bit `i` of a packed series is the coefficient of `t^i`, stored little-endian in
//! 64-bit words. Every routine here must agree bit-for-bit with the dense
//! reference in `series`.

#[inline]
fn words_for(bits: usize) -> usize {
    bits.div_ceil(64)
}

pub(crate) fn pack(coeffs: &[u32]) -> Vec<u64> {
    let mut words = vec![0u64; words_for(coeffs.len())];
    for (i, &c) in coeffs.iter().enumerate() {
        if c & 1 == 1 {
            words[i / 64] |= 1 << (i % 64);
        }
    }
    words
}

pub(crate) fn unpack(words: &[u64], bits: usize) -> Vec<u32> {
    (0..bits).map(|i| ((words[i / 64] >> (i % 64)) & 1) as u32).collect()
}

fn mask_tail(words: &mut [u64], bits: usize) {
    let rem = bits % 64;
    if rem != 0 {
        if let Some(last) = words.last_mut() {
            *last &= (1u64 << rem) - 1;
        }
    }
}

/// The 64 bit-shifts of a fixed multiplier, so that multiplying by it reduces to
/// word-aligned XORs.
struct ShiftTable {
    rows: Vec<Vec<u64>>,
}

impl ShiftTable {
    fn new(multiplier: &[u64], bits: usize) -> Self {
        let n = words_for(bits);
        let mut base = multiplier[..n.min(multiplier.len())].to_vec();
        base.resize(n, 0);
        mask_tail(&mut base, bits);
        let rows = (0..64)
            .map(|r| {
                let mut row = vec![0u64; n];
                for w in 0..n {
                    let lo = base[w] << r;
                    let carry = if r == 0 || w == 0 {
                        0
                    } else {
                        base[w - 1] >> (64 - r)
                    };
                    row[w] = lo | carry;
                }
                row
            })
            .collect();
        ShiftTable { rows }
    }

    /// `a * multiplier`, keeping the low `bits` coefficients.
    fn mul_into(&self, a: &[u64], bits: usize, out: &mut Vec<u64>) {
        let n = words_for(bits);
        out.clear();
        out.resize(n, 0);
        for (q, &word) in a.iter().enumerate().take(n) {
            let mut word = word;
            while word != 0 {
                let r = word.trailing_zeros() as usize;
                word &= word - 1;
                if q * 64 + r >= bits {
                    break;
                }
                let row = &self.rows[r];
                for (o, &x) in out[q..].iter_mut().zip(row) {
                    *o ^= x;
                }
            }
        }
        mask_tail(out, bits);
    }
}

/// Product truncated to the low `bits` coefficients.
pub(crate) fn mul(a: &[u64], b: &[u64], bits: usize) -> Vec<u64> {
    let table = ShiftTable::new(b, bits);
    let mut out = Vec::new();
    table.mul_into(a, bits, &mut out);
    out
}

/// `f(g)` for `g` with zero constant term, truncated to the low `bits` coefficients.
///
/// Horner's rule. The accumulator after consuming `f_k` is later multiplied by
/// `g^k`, which has valuation at least `k`, so it only needs `bits - k` coefficients.
pub(crate) fn compose(f: &[u64], g: &[u64], bits: usize) -> Vec<u64> {
    if bits == 0 {
        return Vec::new();
    }
    let bit = |i: usize| (f[i / 64] >> (i % 64)) & 1;
    let top = bits - 1;
    let table = ShiftTable::new(g, bits);
    let mut acc = vec![bit(top)];
    let mut next = Vec::with_capacity(words_for(bits));
    for k in (0..top).rev() {
        let len = bits - k;
        table.mul_into(&acc, len, &mut next);
        next[0] |= bit(k);
        std::mem::swap(&mut acc, &mut next);
    }
    acc
}
