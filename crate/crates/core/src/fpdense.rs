//! Flat dense matrices over 𝔽ₚ for the enumeration-heavy paths (resonance
//! point scans, Koszul strand ranks mod p). Entries are u64 residues in
//! [0, p) with p < 2³¹; reduction uses a precomputed Barrett constant.

#[derive(Clone, Copy, Debug)]
pub struct PrimeCtx {
    pub p: u64,
    barrett: u64,
}

impl PrimeCtx {
    pub fn new(p: u64) -> Self {
        assert!((2..1 << 31).contains(&p), "modulus out of range");
        PrimeCtx {
            p,
            barrett: (u128::MAX / p as u128) as u64,
        }
    }

    /// Reduce x < 2^62 modulo p.
    #[inline(always)]
    pub fn reduce(&self, x: u64) -> u64 {
        let q = ((x as u128 * self.barrett as u128) >> 64) as u64;
        let mut r = x.wrapping_sub(q.wrapping_mul(self.p));
        while r >= self.p {
            r -= self.p;
        }
        r
    }

    #[inline(always)]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        self.reduce(a * b)
    }

    #[inline(always)]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline(always)]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert!(a % self.p != 0, "division by zero mod p");
        self.pow(a, self.p - 2)
    }

    pub fn pow(&self, mut b: u64, mut e: u64) -> u64 {
        let mut acc = 1u64;
        b %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        acc
    }

    pub fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }
}

/// In-place rank of a row-major dense matrix mod p.
pub fn rank_dense_mod_p(data: &mut [u64], rows: usize, cols: usize, p: u64) -> usize {
    let ctx = PrimeCtx::new(p);
    let mut rank = 0usize;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let mut piv = None;
        for r in rank..rows {
            if data[r * cols + c] % p != 0 {
                piv = Some(r);
                break;
            }
        }
        let Some(pr) = piv else { continue };
        if pr != rank {
            for j in c..cols {
                data.swap(pr * cols + j, rank * cols + j);
            }
        }
        let inv = ctx.inv(data[rank * cols + c]);
        for j in c..cols {
            data[rank * cols + j] = ctx.mul(data[rank * cols + j], inv);
        }
        let (top, rest) = data.split_at_mut((rank + 1) * cols);
        let pivot_row = &top[rank * cols..];
        for r in 0..rows - rank - 1 {
            let row = &mut rest[r * cols..(r + 1) * cols];
            let f = row[c];
            if f == 0 {
                continue;
            }
            let nf = ctx.neg(f);
            for j in c..cols {
                row[j] = ctx.reduce(row[j] + nf * pivot_row[j]);
            }
        }
        rank += 1;
    }
    rank
}

/// Sparse columns, dense accumulation: rank mod p of a matrix given by
/// columns of (row, value) pairs. Incremental insertion into a row-echelon
/// basis; suited to very tall sparse inputs whose rank is near the row
/// count.
pub struct EchelonModP {
    ctx: PrimeCtx,
    width: usize,
    /// echelon rows, each normalized to leading 1, keyed by leading index
    rows: Vec<Option<Vec<u64>>>,
    rank: usize,
}

impl EchelonModP {
    pub fn new(width: usize, p: u64) -> Self {
        EchelonModP {
            ctx: PrimeCtx::new(p),
            width,
            rows: vec![None; width],
            rank: 0,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Reduce `v` against the basis; if a nonzero remainder survives, add it
    /// as a new echelon row. Returns true when the rank grew.
    pub fn insert_sparse(&mut self, v: &[(u32, i64)]) -> bool {
        let mut dense = vec![0u64; self.width];
        for &(i, x) in v {
            dense[i as usize] = self.ctx.add(dense[i as usize], self.ctx.from_i64(x));
        }
        self.insert_dense(dense)
    }

    pub fn insert_dense(&mut self, mut dense: Vec<u64>) -> bool {
        let ctx = self.ctx;
        let mut lead = 0;
        while lead < self.width {
            if dense[lead] == 0 {
                lead += 1;
                continue;
            }
            match &self.rows[lead] {
                Some(row) => {
                    let nf = ctx.neg(dense[lead]);
                    for j in lead..self.width {
                        dense[j] = ctx.reduce(dense[j] + nf * row[j]);
                    }
                }
                None => {
                    let inv = ctx.inv(dense[lead]);
                    for x in dense[lead..].iter_mut() {
                        *x = ctx.mul(*x, inv);
                    }
                    self.rows[lead] = Some(dense);
                    self.rank += 1;
                    return true;
                }
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn barrett_reduce_matches_mod() {
        for p in [2u64, 3, 5, 7, 1_000_003, (1 << 31) - 1] {
            let ctx = PrimeCtx::new(p);
            for x in [0u64, 1, p - 1, p, p + 1, p * p - 1, (1 << 62) - 1] {
                if x < (1 << 62) {
                    assert_eq!(ctx.reduce(x), x % p, "p={p} x={x}");
                }
            }
        }
    }

    #[test]
    fn rank_small() {
        let mut data = vec![1, 2, 3, 2, 4, 6, 0, 1, 1];
        assert_eq!(rank_dense_mod_p(&mut data, 3, 3, 5), 2);
    }

    #[test]
    fn echelon_matches_dense() {
        let cols: Vec<Vec<(u32, i64)>> = vec![
            vec![(0, 1), (2, 2)],
            vec![(1, 1)],
            vec![(0, 2), (2, 4)],
            vec![(0, 1), (1, 1), (2, 2)],
        ];
        let mut ech = EchelonModP::new(3, 7);
        for c in &cols {
            ech.insert_sparse(c);
        }
        let mut dense = vec![0u64; 4 * 3];
        for (j, c) in cols.iter().enumerate() {
            for &(i, x) in c {
                dense[j * 3 + i as usize] = x.rem_euclid(7) as u64;
            }
        }
        assert_eq!(ech.rank(), rank_dense_mod_p(&mut dense, 4, 3, 7));
    }
}
