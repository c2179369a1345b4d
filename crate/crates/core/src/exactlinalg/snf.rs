use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense matrix of arbitrary-precision integers, row major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// Builds a matrix from small integer rows. Panics if the rows are ragged.
    pub fn from_rows<T: Into<BigInt> + Copy>(rows: &[Vec<T>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged rows");
            for (j, &x) in row.iter().enumerate() {
                m.set(i, j, x.into());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.data[idx] += a * b;
                    }
                }
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += factor * row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, factor: &BigInt) {
        for j in 0..self.cols {
            let s = &self.data[src * self.cols + j];
            if !s.is_zero() {
                let delta = s * factor;
                self.data[dst * self.cols + j] += delta;
            }
        }
    }

    /// col[dst] += factor * col[src]
    fn add_col_multiple(&mut self, dst: usize, src: usize, factor: &BigInt) {
        for i in 0..self.rows {
            let s = &self.data[i * self.cols + src];
            if !s.is_zero() {
                let delta = s * factor;
                self.data[i * self.cols + dst] += delta;
            }
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let idx = r * self.cols + j;
            self.data[idx] = -std::mem::take(&mut self.data[idx]);
        }
    }
}

/// Result of a Smith normal form computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    /// Nonzero diagonal entries, positive, each dividing the next.
    pub diagonal: Vec<BigInt>,
    /// Unimodular `U` (rows x rows) and `V` (cols x cols) with `U * A * V = D`.
    pub transforms: Option<(IntMatrix, IntMatrix)>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }
}

pub fn smith_normal_form(a: &IntMatrix) -> SmithForm {
    snf_impl(a.clone(), false)
}

pub fn smith_with_transforms(a: &IntMatrix) -> SmithForm {
    snf_impl(a.clone(), true)
}

struct Work {
    a: IntMatrix,
    u: Option<IntMatrix>,
    v: Option<IntMatrix>,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        if let Some(u) = self.u.as_mut() {
            u.swap_rows(i, j);
        }
    }
    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        if let Some(v) = self.v.as_mut() {
            v.swap_cols(i, j);
        }
    }
    fn add_row(&mut self, dst: usize, src: usize, f: &BigInt) {
        self.a.add_row_multiple(dst, src, f);
        if let Some(u) = self.u.as_mut() {
            u.add_row_multiple(dst, src, f);
        }
    }
    fn add_col(&mut self, dst: usize, src: usize, f: &BigInt) {
        self.a.add_col_multiple(dst, src, f);
        if let Some(v) = self.v.as_mut() {
            v.add_col_multiple(dst, src, f);
        }
    }
    fn negate_row(&mut self, r: usize) {
        self.a.negate_row(r);
        if let Some(u) = self.u.as_mut() {
            u.negate_row(r);
        }
    }
}

fn snf_impl(a: IntMatrix, transforms: bool) -> SmithForm {
    let (rows, cols) = (a.rows, a.cols);
    let mut w = Work {
        u: transforms.then(|| IntMatrix::identity(rows)),
        v: transforms.then(|| IntMatrix::identity(cols)),
        a,
    };
    let mut diagonal = Vec::new();
    for t in 0..rows.min(cols) {
        // Pivot on the smallest nonzero absolute value of the trailing block.
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    let x = w.a.get(i, j);
                    if x.is_zero() {
                        continue;
                    }
                    match best {
                        Some((bi, bj)) if w.a.get(bi, bj).abs() <= x.abs() => {}
                        _ => best = Some((i, j)),
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return finish(w, diagonal);
            };
            w.swap_rows(t, pi);
            w.swap_cols(t, pj);
            let p = w.a.get(t, t).clone();
            let mut dirty = false;
            for i in t + 1..rows {
                let x = w.a.get(i, t);
                if x.is_zero() {
                    continue;
                }
                let q = x.div_floor(&p);
                w.add_row(i, t, &-q);
                dirty |= !w.a.get(i, t).is_zero();
            }
            for j in t + 1..cols {
                let x = w.a.get(t, j);
                if x.is_zero() {
                    continue;
                }
                let q = x.div_floor(&p);
                w.add_col(j, t, &-q);
                dirty |= !w.a.get(t, j).is_zero();
            }
            if dirty {
                continue;
            }
            let offender =
                (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !w.a.get(i, j).is_multiple_of(&p)));
            match offender {
                Some(i) => w.add_row(t, i, &BigInt::one()),
                None => break,
            }
        }
        if w.a.get(t, t).is_negative() {
            w.negate_row(t);
        }
        diagonal.push(w.a.get(t, t).clone());
    }
    finish(w, diagonal)
}

fn finish(w: Work, diagonal: Vec<BigInt>) -> SmithForm {
    let transforms = match (w.u, w.v) {
        (Some(u), Some(v)) => Some((u, v)),
        _ => None,
    };
    SmithForm {
        diagonal,
        transforms,
    }
}

/// Nonzero elementary divisors of a sparse integer matrix given by rows of
/// `(column, value)` entries.
///
/// Unit pivots are eliminated on the sparse representation first; the dense
/// Smith normal form only sees what is left. Boundary matrices of simplicial
/// and cubical complexes shrink to a tiny core this way.
pub fn elementary_divisors(ncols: usize, rows: Vec<Vec<(usize, BigInt)>>) -> Vec<BigInt> {
    let mut rows: Vec<BTreeMap<usize, BigInt>> = rows
        .into_iter()
        .map(|r| r.into_iter().filter(|(_, v)| !v.is_zero()).collect())
        .collect();
    let mut col_rows: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); ncols];
    for (i, r) in rows.iter().enumerate() {
        for &c in r.keys() {
            col_rows[c].insert(i);
        }
    }
    let mut units = 0usize;
    let mut alive = vec![true; rows.len()];
    loop {
        // Unit entry whose column has the fewest other entries.
        let mut best: Option<(usize, usize, usize)> = None;
        for (i, r) in rows.iter().enumerate() {
            if !alive[i] {
                continue;
            }
            for (&c, v) in r {
                if v.abs().is_one() {
                    let cost = col_rows[c].len();
                    if best.is_none_or(|(_, _, bc)| cost < bc) {
                        best = Some((i, c, cost));
                    }
                }
            }
            if matches!(best, Some((_, _, 1))) {
                break;
            }
        }
        let Some((pr, pc, _)) = best else { break };
        let prow = std::mem::take(&mut rows[pr]);
        alive[pr] = false;
        for &c in prow.keys() {
            col_rows[c].remove(&pr);
        }
        let pivot = prow[&pc].clone();
        let others: Vec<usize> = col_rows[pc].iter().copied().collect();
        for r in others {
            let factor = &rows[r][&pc] * &pivot; // pivot is a unit, so pivot^-1 = pivot
            for (&c, v) in &prow {
                let entry = rows[r].entry(c).or_insert_with(BigInt::zero);
                *entry -= &factor * v;
                if entry.is_zero() {
                    rows[r].remove(&c);
                    col_rows[c].remove(&r);
                } else {
                    col_rows[c].insert(r);
                }
            }
        }
        units += 1;
    }
    let live: Vec<&BTreeMap<usize, BigInt>> = rows
        .iter()
        .zip(&alive)
        .filter(|(r, &a)| a && !r.is_empty())
        .map(|(r, _)| r)
        .collect();
    let mut used: Vec<usize> = live.iter().flat_map(|r| r.keys().copied()).collect();
    used.sort_unstable();
    used.dedup();
    let mut dense = IntMatrix::zeros(live.len(), used.len());
    for (i, r) in live.iter().enumerate() {
        for (c, v) in r.iter() {
            let j = used.binary_search(c).expect("column present");
            dense.set(i, j, v.clone());
        }
    }
    let mut out = vec![BigInt::one(); units];
    out.extend(smith_normal_form(&dense).diagonal);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag(a: &IntMatrix) -> Vec<i64> {
        smith_normal_form(a)
            .diagonal
            .iter()
            .map(|d| i64::try_from(d).unwrap())
            .collect()
    }

    #[test]
    fn identity_two() {
        assert_eq!(diag(&IntMatrix::identity(2)), vec![1, 1]);
    }

    #[test]
    fn two_by_two_with_determinant_minus_two() {
        assert_eq!(
            diag(&IntMatrix::from_rows(&[vec![1, 2], vec![3, 4]])),
            vec![1, 2]
        );
    }

    #[test]
    fn zero_matrix_has_empty_diagonal() {
        assert!(diag(&IntMatrix::zeros(3, 2)).is_empty());
        assert!(diag(&IntMatrix::zeros(0, 0)).is_empty());
    }

    #[test]
    fn divisibility_fixup() {
        // diag(2,3) is not in Smith form; the answer is (1,6).
        assert_eq!(
            diag(&IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]])),
            vec![1, 6]
        );
    }

    #[test]
    fn transforms_reproduce_diagonal() {
        let a = IntMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
        let s = smith_with_transforms(&a);
        let (u, v) = s.transforms.clone().unwrap();
        let d = u.mul(&a).mul(&v);
        for i in 0..3 {
            for j in 0..3 {
                let expect = if i == j && i < s.diagonal.len() {
                    s.diagonal[i].clone()
                } else {
                    BigInt::zero()
                };
                assert_eq!(d.get(i, j), &expect);
            }
        }
        let got: Vec<i64> = s
            .diagonal
            .iter()
            .map(|d| i64::try_from(d).unwrap())
            .collect();
        assert_eq!(got, vec![2, 6, 12]);
    }

    #[test]
    fn sparse_matches_dense() {
        let rows = vec![
            vec![2i64, 4, 4],
            vec![-6, 6, 12],
            vec![10, -4, -16],
            vec![1, 0, 1],
        ];
        let dense = IntMatrix::from_rows(&rows);
        let sparse: Vec<Vec<(usize, BigInt)>> = rows
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .map(|(j, &v)| (j, BigInt::from(v)))
                    .collect()
            })
            .collect();
        let mut a = elementary_divisors(3, sparse);
        let mut b = smith_normal_form(&dense).diagonal;
        a.sort();
        b.sort();
        assert_eq!(a, b);
    }
}
