//! Solvability of linear systems over `Z / p^e`.
//!
//! Elimination uses full pivoting on the entry of least `p`-adic valuation.
//! Every other entry of the remaining block is then a multiple of the
//! pivot, so the pivot row can be solved for its column whatever the other
//! unknowns are, provided its right-hand side has valuation at least the
//! pivot's.

/// `p`-adic valuation of `x` modulo `q = p^e`; `e` for zero.
pub fn valuation(mut x: u64, p: u64, e: u32) -> u32 {
    if x == 0 {
        return e;
    }
    let mut k = 0;
    while x.is_multiple_of(p) {
        x /= p;
        k += 1;
    }
    k
}

/// Inverse of a unit modulo `q`.
pub fn inverse_mod(a: u64, q: u64) -> Option<u64> {
    let (mut r0, mut r1) = (q as i128, (a % q) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let quotient = r0 / r1;
        (r0, r1) = (r1, r0 - quotient * r1);
        (t0, t1) = (t1, t0 - quotient * t1);
    }
    if r0 != 1 {
        return None;
    }
    Some(t0.rem_euclid(q as i128) as u64)
}

/// Whether `A x ≡ b (mod p^e)` has a solution. `rows` holds `A` row-major;
/// entries are reduced on entry.
pub fn solvable(p: u64, e: u32, mut rows: Vec<Vec<u64>>, mut rhs: Vec<u64>) -> bool {
    let q = p.pow(e);
    for row in rows.iter_mut() {
        for a in row.iter_mut() {
            *a %= q;
        }
    }
    for b in rhs.iter_mut() {
        *b %= q;
    }
    let cols = rows.first().map_or(0, |r| r.len());
    let mut live_rows: Vec<usize> = (0..rows.len()).collect();
    let mut live_cols: Vec<usize> = (0..cols).collect();
    loop {
        // entry of least valuation in the live block
        let mut best: Option<(u32, usize, usize)> = None;
        for (ri, &r) in live_rows.iter().enumerate() {
            for (ci, &c) in live_cols.iter().enumerate() {
                let a = rows[r][c];
                if a == 0 {
                    continue;
                }
                let k = valuation(a, p, e);
                if best.is_none_or(|(bk, _, _)| k < bk) {
                    best = Some((k, ri, ci));
                }
            }
        }
        let Some((k, ri, ci)) = best else {
            break;
        };
        let r = live_rows.swap_remove(ri);
        let c = live_cols.swap_remove(ci);
        let pk = p.pow(k);
        if valuation(rhs[r], p, e) < k {
            return false;
        }
        let unit = inverse_mod(rows[r][c] / pk, q).expect("pivot over p^k is a unit");
        for &o in &live_rows {
            let a = rows[o][c];
            if a == 0 {
                continue;
            }
            // a = p^k · (a / p^k); factor makes row o lose column c
            let factor = (a / pk) % q * unit % q;
            for j in 0..cols {
                let sub = factor * rows[r][j] % q;
                rows[o][j] = (rows[o][j] + q - sub) % q;
            }
            let sub = factor * rhs[r] % q;
            rhs[o] = (rhs[o] + q - sub) % q;
        }
    }
    live_rows.iter().all(|&r| rhs[r] == 0)
}
