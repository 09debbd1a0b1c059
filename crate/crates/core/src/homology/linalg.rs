//! Rank of sparse matrices over GF(p) by incremental row echelon insertion.

use super::Prime;

/// A sparse row: `(column, value)` pairs with strictly increasing columns and
/// values in `1..p`.
pub type SparseRow = Vec<(u32, u32)>;

/// Rank over GF(p) of the matrix with the given rows.
pub fn rank_mod_p(rows: &[SparseRow], ncols: usize, p: Prime) -> usize {
    if p.get() == 2 {
        rank_gf2(rows, ncols)
    } else {
        rank_odd(rows, ncols, p.get() as u64)
    }
}

/// Dense bit-packed elimination. Each stored pivot row owns the lowest set
/// bit of its column; reducing an incoming row only ever clears its lowest
/// bit, so the scan position moves strictly upward.
fn rank_gf2(rows: &[SparseRow], ncols: usize) -> usize {
    let words = ncols.div_ceil(64);
    let mut pivots: Vec<Option<Box<[u64]>>> = vec![None; ncols];
    let mut rank = 0;
    let mut row = vec![0u64; words];
    for sparse in rows {
        row.fill(0);
        for &(c, v) in sparse {
            if v & 1 == 1 {
                row[c as usize / 64] ^= 1 << (c % 64);
            }
        }
        let mut w = 0;
        while w < words {
            if row[w] == 0 {
                w += 1;
                continue;
            }
            let col = w * 64 + row[w].trailing_zeros() as usize;
            match &pivots[col] {
                Some(piv) => {
                    for (a, b) in row[w..].iter_mut().zip(&piv[w..]) {
                        *a ^= b;
                    }
                }
                None => {
                    pivots[col] = Some(row.clone().into_boxed_slice());
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

fn inverse(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2).
    let (mut base, mut exp, mut acc) = (a % p, p - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// `row - factor * pivot` over GF(p), both sorted by column.
fn axpy(row: &[(u32, u32)], pivot: &[(u32, u32)], factor: u64, p: u64) -> SparseRow {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let take_row = j == pivot.len() || (i < row.len() && row[i].0 < pivot[j].0);
        let take_piv = i == row.len() || (j < pivot.len() && pivot[j].0 < row[i].0);
        if take_row {
            out.push(row[i]);
            i += 1;
        } else if take_piv {
            let v = (p - factor * pivot[j].1 as u64 % p) % p;
            out.push((pivot[j].0, v as u32));
            j += 1;
        } else {
            let v = (row[i].1 as u64 + p - factor * pivot[j].1 as u64 % p) % p;
            if v != 0 {
                out.push((row[i].0, v as u32));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn rank_odd(rows: &[SparseRow], ncols: usize, p: u64) -> usize {
    let mut pivots: Vec<Option<SparseRow>> = vec![None; ncols];
    let mut rank = 0;
    for start in rows {
        let mut row: SparseRow = start
            .iter()
            .map(|&(c, v)| (c, (v as u64 % p) as u32))
            .filter(|&(_, v)| v != 0)
            .collect();
        while let Some(&(col, lead)) = row.first() {
            match &pivots[col as usize] {
                Some(piv) => row = axpy(&row, piv, lead as u64, p),
                None => {
                    let inv = inverse(lead as u64, p);
                    for e in row.iter_mut() {
                        e.1 = (e.1 as u64 * inv % p) as u32;
                    }
                    pivots[col as usize] = Some(row);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dense(rows: &[&[u32]]) -> Vec<SparseRow> {
        rows.iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(_, &v)| v != 0)
                    .map(|(c, &v)| (c as u32, v))
                    .collect()
            })
            .collect()
    }

    #[test]
    fn rank_depends_on_characteristic() {
        // det = 2: singular only mod 2.
        let m = dense(&[&[1, 1], &[1, 3]]);
        assert_eq!(rank_mod_p(&m, 2, Prime::new(2).unwrap()), 1);
        assert_eq!(rank_mod_p(&m, 2, Prime::new(3).unwrap()), 2);
        // det = 3: singular only mod 3.
        let m = dense(&[&[1, 1], &[1, 4]]);
        assert_eq!(rank_mod_p(&m, 2, Prime::new(2).unwrap()), 2);
        assert_eq!(rank_mod_p(&m, 2, Prime::new(3).unwrap()), 1);
    }

    #[test]
    fn wide_gf2_rows_cross_word_boundaries() {
        let rows: Vec<SparseRow> = (0..150u32).map(|i| vec![(i, 1), (i + 1, 1)]).collect();
        assert_eq!(rank_mod_p(&rows, 151, Prime::TWO), 150);
        let mut cyc = rows[..149].to_vec();
        cyc.push(vec![(0, 1), (149, 1)]);
        assert_eq!(rank_mod_p(&cyc, 151, Prime::TWO), 149);
    }

    #[test]
    fn inverse_mod_p() {
        for p in [3u64, 5, 7, 101] {
            for a in 1..p {
                assert_eq!(a * inverse(a, p) % p, 1);
            }
        }
    }
}
