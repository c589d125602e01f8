//! Integer matrices: exact rank over ℚ and Smith normal form over ℤ.
//!
//! Rank is computed by a fraction-free sparse elimination: rows are grouped
//! by leading column and reduced Euclid-style inside each group, so no
//! divisions occur and entries stay small while ±1 leads last. Entries are
//! i128 with checked arithmetic; on overflow the whole computation restarts
//! with big integers (sparse as well).

use crate::fpdense;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

#[derive(Clone, Debug)]
pub struct IntMat {
    rows: Vec<Vec<BigInt>>,
    cols: usize,
}

impl IntMat {
    pub fn from_rows(rows: Vec<Vec<BigInt>>, cols: usize) -> Self {
        for r in &rows {
            assert_eq!(r.len(), cols);
        }
        IntMat { rows, cols }
    }

    pub fn from_i64_rows(rows: Vec<Vec<i64>>, cols: usize) -> Self {
        IntMat::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(BigInt::from).collect())
                .collect(),
            cols,
        )
    }

    pub fn rows(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        &self.rows[i][j]
    }

    /// Rank over ℚ.
    pub fn rank(&self) -> usize {
        let sparse: Option<Vec<SparseRow<i128>>> = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(j, v)| v.to_i128().map(|x| (j as u32, x)))
                    .collect::<Option<SparseRow<i128>>>()
            })
            .collect();
        match sparse {
            Some(rows) => sparse_rank(rows, self.cols),
            None => sparse_rank_entries(self.to_sparse_big(), self.cols),
        }
    }

    fn to_sparse_big(&self) -> Vec<SparseRow<BigInt>> {
        self.rows
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(j, v)| (j as u32, v.clone()))
                    .collect()
            })
            .collect()
    }

    /// Rank of the reduction mod p (a lower bound for the rank over ℚ).
    pub fn rank_mod_p(&self, p: u64) -> usize {
        let mut data = Vec::with_capacity(self.rows() * self.cols);
        for r in &self.rows {
            for v in r {
                data.push(crate::scalar::bigint_mod_p(v, p).value());
            }
        }
        fpdense::rank_dense_mod_p(&mut data, self.rows(), self.cols, p)
    }

    /// Nonzero invariant factors d₁ | d₂ | … of the matrix over ℤ.
    ///
    /// ℤ^cols / (column span) ≅ ℤ^(cols − k) ⊕ ⊕ᵢ ℤ/dᵢ, with k the number
    /// of factors; row span and column span give the same list.
    pub fn smith_normal_form(&self) -> Vec<BigInt> {
        let mut a = self.rows.clone();
        let nr = a.len();
        let nc = self.cols;
        let mut t = 0usize;
        let mut diag: Vec<BigInt> = Vec::new();
        while t < nr.min(nc) {
            let mut best: Option<(usize, usize)> = None;
            for i in t..nr {
                for j in t..nc {
                    if !a[i][j].is_zero()
                        && best.map_or(true, |(bi, bj)| a[i][j].abs() < a[bi][bj].abs())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else { break };
            a.swap(t, bi);
            for row in a.iter_mut() {
                row.swap(t, bj);
            }
            loop {
                let mut clean = true;
                for i in t + 1..nr {
                    if a[i][t].is_zero() {
                        continue;
                    }
                    let q = div_round(&a[i][t], &a[t][t]);
                    if !q.is_zero() {
                        for j in t..nc {
                            let s = &a[t][j] * &q;
                            a[i][j] -= s;
                        }
                    }
                    if !a[i][t].is_zero() {
                        a.swap(t, i);
                        clean = false;
                    }
                }
                for j in t + 1..nc {
                    if a[t][j].is_zero() {
                        continue;
                    }
                    let q = div_round(&a[t][j], &a[t][t]);
                    if !q.is_zero() {
                        for row in a.iter_mut().skip(t) {
                            let s = &row[t] * &q;
                            row[j] -= s;
                        }
                    }
                    if !a[t][j].is_zero() {
                        for row in a.iter_mut() {
                            row.swap(t, j);
                        }
                        clean = false;
                    }
                }
                if !clean {
                    continue;
                }
                let mut fixed = true;
                'scan: for i in t + 1..nr {
                    for j in t + 1..nc {
                        if !(&a[i][j] % &a[t][t]).is_zero() {
                            for jj in t..nc {
                                let add = a[i][jj].clone();
                                a[t][jj] += add;
                            }
                            fixed = false;
                            break 'scan;
                        }
                    }
                }
                if fixed {
                    break;
                }
            }
            diag.push(a[t][t].abs());
            t += 1;
        }
        diag
    }
}

fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(b);
    if r.abs() * 2 > b.abs() {
        if a.sign() == b.sign() {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

pub type SparseRow<E> = Vec<(u32, E)>;

/// Entry arithmetic shared by the i128 fast path and the BigInt fallback.
trait Ent: Clone + Ord {
    fn zero_e() -> Self;
    fn abs_key(&self) -> Self;
    /// Euclidean quotient: self = q·d + r with 0 ≤ r < |d|.
    fn div_euclid_by(&self, d: &Self) -> Self;
    fn is_zero_e(&self) -> bool;
    /// a - q*b, or None on overflow.
    fn sub_mul(a: &Self, q: &Self, b: &Self) -> Option<Self>;
}

impl Ent for i128 {
    fn zero_e() -> Self {
        0
    }
    fn abs_key(&self) -> Self {
        self.saturating_abs()
    }
    fn div_euclid_by(&self, d: &Self) -> Self {
        self.div_euclid(*d)
    }
    fn is_zero_e(&self) -> bool {
        *self == 0
    }
    fn sub_mul(a: &Self, q: &Self, b: &Self) -> Option<Self> {
        a.checked_sub(q.checked_mul(*b)?)
    }
}

impl Ent for BigInt {
    fn zero_e() -> Self {
        BigInt::zero()
    }
    fn abs_key(&self) -> Self {
        self.abs()
    }
    fn div_euclid_by(&self, d: &Self) -> Self {
        self.div_floor(&d.abs()) * d.signum()
    }
    fn is_zero_e(&self) -> bool {
        self.is_zero()
    }
    fn sub_mul(a: &Self, q: &Self, b: &Self) -> Option<Self> {
        Some(a - q * b)
    }
}

/// Rank over ℚ of a sparse integer matrix with i128 entries; restarts with
/// big integers if a coefficient overflows.
pub fn sparse_rank(rows: Vec<SparseRow<i128>>, ncols: usize) -> usize {
    match sparse_rank_core(rows.clone(), ncols) {
        Some(r) => r,
        None => {
            let big: Vec<SparseRow<BigInt>> = rows
                .into_iter()
                .map(|r| r.into_iter().map(|(c, v)| (c, BigInt::from(v))).collect())
                .collect();
            sparse_rank_entries(big, ncols)
        }
    }
}

pub fn sparse_rank_entries(rows: Vec<SparseRow<BigInt>>, ncols: usize) -> usize {
    sparse_rank_core(rows, ncols).expect("BigInt elimination cannot overflow")
}

fn sparse_rank_core<E: Ent>(rows: Vec<SparseRow<E>>, ncols: usize) -> Option<usize> {
    let mut buckets: Vec<Vec<SparseRow<E>>> = vec![Vec::new(); ncols];
    for r in rows {
        if let Some((c, _)) = r.first() {
            buckets[*c as usize].push(r);
        }
    }
    let mut rank = 0usize;
    for c in 0..ncols {
        loop {
            if buckets[c].is_empty() {
                break;
            }
            if buckets[c].len() == 1 {
                rank += 1;
                buckets[c].clear();
                break;
            }
            let bucket = &mut buckets[c];
            let mut bi = 0;
            for (i, r) in bucket.iter().enumerate() {
                let (la, lb) = (r[0].1.abs_key(), bucket[bi][0].1.abs_key());
                if la < lb || (la == lb && r.len() < bucket[bi].len()) {
                    bi = i;
                }
            }
            let reducer = bucket.swap_remove(bi);
            let lead = reducer[0].1.clone();
            let pending = std::mem::take(&mut buckets[c]);
            let mut kept: Vec<SparseRow<E>> = Vec::with_capacity(pending.len());
            for row in pending {
                let q = row[0].1.div_euclid_by(&lead);
                let reduced = row_sub_mul(&row, &reducer, &q)?;
                match reduced.first() {
                    None => {}
                    Some((nc2, _)) if *nc2 as usize == c => kept.push(reduced),
                    Some((nc2, _)) => {
                        let slot = *nc2 as usize;
                        buckets[slot].push(reduced);
                    }
                }
            }
            kept.push(reducer);
            buckets[c] = kept;
        }
    }
    Some(rank)
}

/// row − q·reducer over sorted sparse rows; None on overflow.
fn row_sub_mul<E: Ent>(row: &SparseRow<E>, reducer: &SparseRow<E>, q: &E) -> Option<SparseRow<E>> {
    if q.is_zero_e() {
        return Some(row.clone());
    }
    let mut out = Vec::with_capacity(row.len() + reducer.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < reducer.len() {
        if j == reducer.len() || (i < row.len() && row[i].0 < reducer[j].0) {
            out.push(row[i].clone());
            i += 1;
        } else if i == row.len() || reducer[j].0 < row[i].0 {
            let v = E::sub_mul(&E::zero_e(), q, &reducer[j].1)?;
            if !v.is_zero_e() {
                out.push((reducer[j].0, v));
            }
            j += 1;
        } else {
            let v = E::sub_mul(&row[i].1, q, &reducer[j].1)?;
            if !v.is_zero_e() {
                out.push((row[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn snf_identity() {
        let m = IntMat::from_i64_rows(vec![vec![1, 0], vec![0, 1]], 2);
        let d = m.smith_normal_form();
        assert_eq!(d, vec![BigInt::one(), BigInt::one()]);
    }

    #[test]
    fn snf_diag_2_0() {
        let m = IntMat::from_i64_rows(vec![vec![2, 0], vec![0, 0]], 2);
        assert_eq!(m.smith_normal_form(), vec![BigInt::from(2)]);
    }

    #[test]
    fn snf_divisibility_chain() {
        let m = IntMat::from_i64_rows(vec![vec![2, 0], vec![0, 3]], 2);
        let d = m.smith_normal_form();
        assert_eq!(d, vec![BigInt::one(), BigInt::from(6)]);
    }

    #[test]
    fn snf_hand_checked() {
        // invariant factors computed by hand from gcds of k×k minors:
        // gcd of entries = 2, gcd of 2×2 minors = 4, |det| = 624
        let m = IntMat::from_i64_rows(
            vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, 4, 16]],
            3,
        );
        let d = m.smith_normal_form();
        assert_eq!(d, vec![BigInt::from(2), BigInt::from(2), BigInt::from(156)]);
    }

    #[test]
    fn rank_of_rectangular() {
        let m = IntMat::from_i64_rows(vec![vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]], 3);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn rank_equals_nonzero_snf_count() {
        let m = IntMat::from_i64_rows(
            vec![vec![3, 1, 4], vec![1, 5, 9], vec![2, 6, 5], vec![4, 6, 13]],
            3,
        );
        assert_eq!(m.rank(), m.smith_normal_form().len());
    }

    #[test]
    fn sparse_rank_with_nonunit_entries() {
        let rows: Vec<SparseRow<i128>> = vec![
            vec![(0, 2), (1, 4)],
            vec![(0, 3), (1, 6)],
            vec![(1, 5), (2, 7)],
        ];
        assert_eq!(sparse_rank(rows, 3), 2);
    }

    #[test]
    fn rank_mod_p_drops_on_torsion() {
        let m = IntMat::from_i64_rows(vec![vec![2, 0], vec![0, 1]], 2);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.rank_mod_p(2), 1);
    }
}
