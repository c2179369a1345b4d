use crate::error::{Error, Result};

/// Bit vector over GF(2), packed into 64-bit words.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            v.set(i, b);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, b: bool) {
        let mask = 1u64 << (i % 64);
        if b {
            self.words[i / 64] |= mask;
        } else {
            self.words[i / 64] &= !mask;
        }
    }

    pub fn flip(&mut self, i: usize) {
        self.words[i / 64] ^= 1u64 << (i % 64);
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Index of the lowest set bit.
    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(k, w)| k * 64 + w.trailing_zeros() as usize)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.get(i))
    }

    pub fn to_bools(&self) -> Vec<bool> {
        (0..self.len).map(|i| self.get(i)).collect()
    }
}

/// Dense matrix over GF(2) with bit-packed rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gf2Matrix {
    cols: usize,
    rows: Vec<BitVec>,
}

impl Gf2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Gf2Matrix {
            cols,
            rows: vec![BitVec::zeros(cols); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.rows[i].set(i, true);
        }
        m
    }

    pub fn from_rows(cols: usize, rows: Vec<BitVec>) -> Result<Self> {
        if let Some(r) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch(format!(
                "row of length {} in a matrix with {cols} columns",
                r.len()
            )));
        }
        Ok(Gf2Matrix { cols, rows })
    }

    pub fn from_bools(rows: &[Vec<bool>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        Self::from_rows(cols, rows.iter().map(|r| BitVec::from_bools(r)).collect())
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, b: bool) {
        self.rows[i].set(j, b);
    }

    pub fn row(&self, i: usize) -> &BitVec {
        &self.rows[i]
    }

    /// Reduced row echelon form; returns the pivot column of each nonzero row.
    fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            let Some(p) = (r..self.rows.len()).find(|&i| self.rows[i].get(c)) else {
                continue;
            };
            self.rows.swap(r, p);
            let pivot_row = self.rows[r].clone();
            for i in 0..self.rows.len() {
                if i != r && self.rows[i].get(c) {
                    self.rows[i].xor_assign(&pivot_row);
                }
            }
            pivots.push(c);
            r += 1;
            if r == self.rows.len() {
                break;
            }
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// A solution `x` of `A x = b`, or `None` if the system is inconsistent.
    pub fn solve(&self, b: &BitVec) -> Result<Option<BitVec>> {
        if b.len() != self.rows.len() {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side of length {} for {} rows",
                b.len(),
                self.rows.len()
            )));
        }
        // Augment with b as an extra column.
        let mut aug = Gf2Matrix::zeros(self.rows.len(), self.cols + 1);
        for (i, row) in self.rows.iter().enumerate() {
            for j in row.ones() {
                aug.set(i, j, true);
            }
            aug.set(i, self.cols, b.get(i));
        }
        let pivots = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = BitVec::zeros(self.cols);
        for (r, &c) in pivots.iter().enumerate() {
            x.set(c, aug.get(r, self.cols));
        }
        Ok(Some(x))
    }

    /// Basis of the right nullspace `{x : A x = 0}`.
    pub fn nullspace(&self) -> Vec<BitVec> {
        let mut m = self.clone();
        let pivots = m.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut x = BitVec::zeros(self.cols);
            x.set(free, true);
            for (r, &c) in pivots.iter().enumerate() {
                if m.get(r, free) {
                    x.set(c, true);
                }
            }
            basis.push(x);
        }
        basis
    }

    pub fn mul_vec(&self, x: &BitVec) -> Result<BitVec> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} for {} columns",
                x.len(),
                self.cols
            )));
        }
        let mut out = BitVec::zeros(self.rows.len());
        for (i, row) in self.rows.iter().enumerate() {
            let parity = row
                .words
                .iter()
                .zip(&x.words)
                .map(|(a, b)| (a & b).count_ones())
                .sum::<u32>();
            out.set(i, parity % 2 == 1);
        }
        Ok(out)
    }
}

/// Incrementally built subspace of GF(2)^n in echelon form.
///
/// Each stored vector optionally carries a combination tag recording which
/// inserted vectors it is the sum of, so membership tests can also return
/// coordinates.
#[derive(Debug, Clone)]
pub struct Gf2Basis {
    dim: usize,
    // (pivot, reduced vector, combination of inserted vectors)
    rows: Vec<(usize, BitVec, BitVec)>,
    inserted: usize,
    capacity: usize,
}

impl Gf2Basis {
    /// `capacity` bounds the number of insertions whose combinations are tracked.
    pub fn new(dim: usize, capacity: usize) -> Self {
        Gf2Basis {
            dim,
            rows: Vec::new(),
            inserted: 0,
            capacity,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the basis; returns the remainder and the combination
    /// of inserted vectors that was subtracted.
    pub fn reduce(&self, v: &BitVec) -> (BitVec, BitVec) {
        let mut v = v.clone();
        let mut combo = BitVec::zeros(self.capacity);
        for (p, row, c) in &self.rows {
            if v.get(*p) {
                v.xor_assign(row);
                combo.xor_assign(c);
            }
        }
        (v, combo)
    }

    /// Pivot columns of the stored rows, ascending.
    pub fn pivots(&self) -> Vec<usize> {
        let mut p: Vec<usize> = self.rows.iter().map(|(p, _, _)| *p).collect();
        p.sort_unstable();
        p
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        self.reduce(v).0.is_zero()
    }

    /// Inserts `v`; returns true if it enlarged the span.
    pub fn insert(&mut self, v: &BitVec) -> bool {
        assert_eq!(v.len(), self.dim, "vector length");
        let id = self.inserted;
        self.inserted += 1;
        let (r, mut combo) = self.reduce(v);
        let Some(p) = r.first_one() else {
            return false;
        };
        if id < self.capacity {
            combo.flip(id);
        }
        // Keep the echelon property: clear the new pivot from older rows.
        for (_, row, c) in self.rows.iter_mut() {
            if row.get(p) {
                row.xor_assign(&r);
                c.xor_assign(&combo);
            }
        }
        self.rows.push((p, r, combo));
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_identity() {
        for n in [0, 1, 5, 70, 130] {
            assert_eq!(Gf2Matrix::identity(n).rank(), n);
        }
    }

    #[test]
    fn rank_all_ones() {
        let m = Gf2Matrix::from_bools(&[vec![true, true], vec![true, true]]).unwrap();
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn inconsistent_solve() {
        let m = Gf2Matrix::from_bools(&[vec![true, false], vec![false, false]]).unwrap();
        let b = BitVec::from_bools(&[true, true]);
        assert_eq!(m.solve(&b).unwrap(), None);
    }

    #[test]
    fn consistent_solve() {
        let m = Gf2Matrix::from_bools(&[vec![true, true, false], vec![false, true, true]]).unwrap();
        let b = BitVec::from_bools(&[true, false]);
        let x = m.solve(&b).unwrap().unwrap();
        assert_eq!(m.mul_vec(&x).unwrap(), b);
    }

    #[test]
    fn solve_dimension_mismatch() {
        let m = Gf2Matrix::identity(3);
        assert!(matches!(
            m.solve(&BitVec::zeros(2)),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn basis_tracks_combinations() {
        let mut b = Gf2Basis::new(3, 3);
        assert!(b.insert(&BitVec::from_bools(&[true, true, false])));
        assert!(b.insert(&BitVec::from_bools(&[false, true, true])));
        assert!(!b.insert(&BitVec::from_bools(&[true, false, true])));
        let (r, c) = b.reduce(&BitVec::from_bools(&[true, false, true]));
        assert!(r.is_zero());
        assert_eq!(c.to_bools(), vec![true, true, false]);
    }
}
