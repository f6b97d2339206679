//! Exact integer linear algebra for the polyhedral kernel.
//!
//! Vectors are stored as `i64`; every product or sum is formed in `i128`
//! and narrowed back with a checked conversion, so an overflow surfaces as
//! [`Error::Overflow`] instead of wrapping.

use crate::error::{Error, Result};

pub type IntVec = Vec<i64>;

pub fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `(g, x, y)` with `a x + b y = g = gcd(a, b) ≥ 0`.
pub fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i128, 0i128);
    let (mut old_t, mut t) = (0i128, 1i128);
    while r != 0 {
        let q = old_r.div_euclid(r);
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    if old_r < 0 {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

pub(crate) fn narrow(x: i128, what: &'static str) -> Result<i64> {
    i64::try_from(x).map_err(|_| Error::Overflow(what))
}

pub fn dot(a: &[i64], b: &[i64]) -> i128 {
    a.iter().zip(b).map(|(&x, &y)| x as i128 * y as i128).sum()
}

/// Divides out the gcd of the entries; the zero vector is left alone.
pub fn make_primitive(v: &mut [i64]) {
    let g = v.iter().fold(0i128, |g, &x| gcd(g, x as i128));
    if g > 1 {
        for x in v.iter_mut() {
            *x /= g as i64;
        }
    }
}

pub(crate) fn primitive_from_wide(v: &[i128], what: &'static str) -> Result<IntVec> {
    let g = v.iter().fold(0i128, |g, &x| gcd(g, x));
    let g = g.max(1);
    v.iter().map(|&x| narrow(x / g, what)).collect()
}

/// Rank of a list of row vectors.
pub fn rank(rows: &[IntVec]) -> Result<usize> {
    let Some(width) = rows.first().map(|r| r.len()) else {
        return Ok(0);
    };
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut rank = 0;
    for col in 0..width {
        let Some(p) = (rank..m.len()).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, p);
        for r in rank + 1..m.len() {
            if m[r][col] == 0 {
                continue;
            }
            let (a, b) = (m[rank][col], m[r][col]);
            let g = gcd(a, b);
            let (fa, fb) = (a / g, b / g);
            for c in col..width {
                let val = fa
                    .checked_mul(m[r][c])
                    .and_then(|x| fb.checked_mul(m[rank][c]).and_then(|y| x.checked_sub(y)))
                    .ok_or(Error::Overflow("rank computation"))?;
                m[r][c] = val;
            }
            let rg = m[r].iter().fold(0, |g, &x| gcd(g, x));
            if rg > 1 {
                for x in m[r].iter_mut() {
                    *x /= rg;
                }
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    Ok(rank)
}

/// Fraction-free Gauss-Jordan inversion of a square matrix given by its
/// columns.
///
/// Returns `(d, rows)` with `rows · M = d · I`, where `d = ±det M`, or
/// `None` when `M` is singular. Row `i` of the result is therefore a
/// normal vector vanishing on every column except column `i`.
pub fn scaled_inverse(columns: &[IntVec]) -> Result<Option<(i64, Vec<IntVec>)>> {
    let Some((d, wide)) = wide_inverse(columns)? else {
        return Ok(None);
    };
    let d = narrow(d, "matrix inversion")?;
    let rows = wide
        .iter()
        .map(|row| row.iter().map(|&x| narrow(x, "matrix inversion")).collect())
        .collect::<Result<Vec<_>>>()?;
    Ok(Some((d, rows)))
}

/// Primitive rows `r_i` with `⟨r_i, c_j⟩ = 0` for `j ≠ i` and
/// `⟨r_i, c_i⟩ > 0`, or `None` when the columns are dependent.
///
/// Gauss-Jordan on `[M | I]` with every row divided by its content after
/// each step, so the determinant itself is never formed.
pub fn dual_directions(columns: &[IntVec]) -> Result<Option<Vec<IntVec>>> {
    let k = columns.len();
    let overflow = || Error::Overflow("matrix inversion");
    let mut a: Vec<Vec<i128>> = (0..k)
        .map(|r| {
            let mut row: Vec<i128> = (0..k).map(|c| columns[c][r] as i128).collect();
            row.extend((0..k).map(|c| i128::from(c == r)));
            row
        })
        .collect();
    for p in 0..k {
        let Some(piv) = (p..k).find(|&r| a[r][p] != 0) else {
            return Ok(None);
        };
        a.swap(p, piv);
        let pivot_row = a[p].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r == p || row[p] == 0 {
                continue;
            }
            let g = gcd(pivot_row[p], row[p]);
            let (s, t) = (pivot_row[p] / g, row[p] / g);
            for c in 0..2 * k {
                row[c] = s
                    .checked_mul(row[c])
                    .and_then(|x| t.checked_mul(pivot_row[c]).and_then(|y| x.checked_sub(y)))
                    .ok_or_else(overflow)?;
            }
            let content = row.iter().fold(0, |g, &x| gcd(g, x)).max(1);
            row.iter_mut().for_each(|x| *x /= content);
        }
    }
    a.iter()
        .enumerate()
        .map(|(i, row)| {
            let sign = row[i].signum();
            let v: Vec<i128> = row[k..].iter().map(|&x| x * sign).collect();
            primitive_from_wide(&v, "matrix inversion")
        })
        .collect::<Result<Vec<_>>>()
        .map(Some)
}

fn wide_inverse(columns: &[IntVec]) -> Result<Option<(i128, Vec<Vec<i128>>)>> {
    let k = columns.len();
    // augmented [M | I] stored row-major; M[r][c] = columns[c][r]
    let mut a: Vec<Vec<i128>> = (0..k)
        .map(|r| {
            let mut row: Vec<i128> = (0..k).map(|c| columns[c][r] as i128).collect();
            row.extend((0..k).map(|c| i128::from(c == r)));
            row
        })
        .collect();
    let mut prev: i128 = 1;
    for p in 0..k {
        let Some(piv) = (p..k).find(|&r| a[r][p] != 0) else {
            return Ok(None);
        };
        a.swap(p, piv);
        let pivot_row = a[p].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r == p {
                continue;
            }
            let factor = row[p];
            for c in 0..2 * k {
                let num = pivot_row[p]
                    .checked_mul(row[c])
                    .and_then(|x| factor.checked_mul(pivot_row[c]).and_then(|y| x.checked_sub(y)))
                    .ok_or(Error::Overflow("matrix inversion"))?;
                if num % prev != 0 {
                    return Err(Error::Consistency(
                        "fraction-free elimination produced a non-integral entry".into(),
                    ));
                }
                row[c] = num / prev;
            }
        }
        prev = a[p][p];
    }
    Ok(Some((prev, a.into_iter().map(|row| row[k..].to_vec()).collect())))
}

/// Smith normal form `U · M · V = diag(s_1, ..., s_r, 0, ...)` of an
/// `rows × cols` matrix, with `s_i | s_{i+1}` and `s_i > 0`.
#[derive(Debug, Clone)]
pub struct SmithForm {
    pub diagonal: Vec<i64>,
    pub u: Vec<IntVec>,
    pub u_inv: Vec<IntVec>,
    pub v: Vec<IntVec>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }
}

fn identity(n: usize) -> Vec<Vec<i128>> {
    (0..n)
        .map(|i| (0..n).map(|j| i128::from(i == j)).collect())
        .collect()
}

/// Applies `[[p, q], [r, s]]` (determinant 1) to rows `i`, `j`.
fn row_op(m: &mut [Vec<i128>], i: usize, j: usize, (p, q, r, s): (i128, i128, i128, i128)) -> Result<()> {
    for c in 0..m[i].len() {
        let (x, y) = (m[i][c], m[j][c]);
        m[i][c] = lin(p, x, q, y)?;
        m[j][c] = lin(r, x, s, y)?;
    }
    Ok(())
}

fn col_op(m: &mut [Vec<i128>], i: usize, j: usize, (p, q, r, s): (i128, i128, i128, i128)) -> Result<()> {
    for row in m.iter_mut() {
        let (x, y) = (row[i], row[j]);
        row[i] = lin(p, x, q, y)?;
        row[j] = lin(r, x, s, y)?;
    }
    Ok(())
}

fn lin(a: i128, x: i128, b: i128, y: i128) -> Result<i128> {
    a.checked_mul(x)
        .and_then(|u| b.checked_mul(y).and_then(|v| u.checked_add(v)))
        .ok_or(Error::Overflow("Smith normal form"))
}

/// `ext_gcd`, except that a pivot dividing `b` is kept in place, so the
/// elimination never trades a pivot for one of the same size.
fn pivot_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b % a == 0 {
        (a.abs(), a.signum(), 0)
    } else {
        ext_gcd(a, b)
    }
}

/// Smith normal form of the matrix with the given rows.
pub fn smith_normal_form(rows: &[IntVec], ncols: usize) -> Result<SmithForm> {
    let nrows = rows.len();
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut u = identity(nrows);
    // u_inv is maintained as the inverse of u: rows ops on u, inverse
    // column ops on u_inv
    let mut u_inv = identity(nrows);
    let mut v = identity(ncols);
    let mut diag = Vec::new();

    for t in 0..nrows.min(ncols) {
        // smallest nonzero entry of the trailing block as pivot
        let mut best: Option<(usize, usize)> = None;
        for (r, row) in m.iter().enumerate().skip(t) {
            for (c, &x) in row.iter().enumerate().skip(t) {
                if x != 0 && best.is_none_or(|(br, bc)| x.abs() < m[br][bc].abs()) {
                    best = Some((r, c));
                }
            }
        }
        let Some((pr, pc)) = best else { break };
        if pr != t {
            m.swap(pr, t);
            u.swap(pr, t);
            for row in u_inv.iter_mut() {
                row.swap(pr, t);
            }
        }
        if pc != t {
            for row in m.iter_mut() {
                row.swap(pc, t);
            }
            for row in v.iter_mut() {
                row.swap(pc, t);
            }
        }
        loop {
            for r in t + 1..nrows {
                if m[r][t] == 0 {
                    continue;
                }
                let (a, b) = (m[t][t], m[r][t]);
                let (g, x, y) = pivot_gcd(a, b);
                let op = (x, y, -b / g, a / g);
                row_op(&mut m, t, r, op)?;
                row_op(&mut u, t, r, op)?;
                // inverse of [[x, y], [-b/g, a/g]] is [[a/g, -y], [b/g, x]];
                // u_inv ← u_inv · inverse, i.e. a column operation
                col_op(&mut u_inv, t, r, (a / g, b / g, -y, x))?;
            }
            for c in t + 1..ncols {
                if m[t][c] == 0 {
                    continue;
                }
                let (a, b) = (m[t][t], m[t][c]);
                let (g, x, y) = pivot_gcd(a, b);
                // new col t = x·col_t + y·col_c, new col c = -b/g·col_t + a/g·col_c
                col_op(&mut m, t, c, (x, y, -b / g, a / g))?;
                col_op(&mut v, t, c, (x, y, -b / g, a / g))?;
            }
            let column_clear = (t + 1..nrows).all(|r| m[r][t] == 0);
            if !column_clear {
                continue;
            }
            let pivot = m[t][t];
            let bad = (t + 1..nrows).find(|&r| (t + 1..ncols).any(|c| m[r][c] % pivot != 0));
            match bad {
                Some(r) => {
                    // fold row r into row t and repeat
                    row_op(&mut m, t, r, (1, 1, 0, 1))?;
                    row_op(&mut u, t, r, (1, 1, 0, 1))?;
                    col_op(&mut u_inv, t, r, (1, 0, -1, 1))?;
                }
                None => break,
            }
        }
        if m[t][t] < 0 {
            for x in m[t].iter_mut() {
                *x = -*x;
            }
            for x in u[t].iter_mut() {
                *x = -*x;
            }
            for row in u_inv.iter_mut() {
                row[t] = -row[t];
            }
        }
        diag.push(narrow(m[t][t], "Smith normal form")?);
    }
    let to64 = |mat: Vec<Vec<i128>>| -> Result<Vec<IntVec>> {
        mat.into_iter()
            .map(|r| r.into_iter().map(|x| narrow(x, "Smith normal form")).collect())
            .collect()
    };
    Ok(SmithForm {
        diagonal: diag,
        u: to64(u)?,
        u_inv: to64(u_inv)?,
        v: to64(v)?,
    })
}
