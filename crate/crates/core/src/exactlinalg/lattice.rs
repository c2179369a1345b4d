use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

pub type SparseRow = Vec<(usize, BigInt)>;

/// Sublattice of Z^n held as sparse rows in Hermite normal form.
///
/// Rows are keyed by their pivot (leading) column; pivots are positive.
/// After [`Lattice::reduce`], every entry standing above a pivot lies in
/// `[0, pivot)`.
#[derive(Debug, Clone, Default)]
pub struct Lattice {
    ncols: usize,
    rows: BTreeMap<usize, SparseRow>,
}

/// `a*x + b*y` on sorted sparse rows.
fn combine(a: &BigInt, x: &[(usize, BigInt)], b: &BigInt, y: &[(usize, BigInt)]) -> SparseRow {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let (c, v) = match (x.get(i), y.get(j)) {
            (Some((cx, vx)), Some((cy, vy))) if cx == cy => {
                i += 1;
                j += 1;
                (*cx, a * vx + b * vy)
            }
            (Some((cx, vx)), Some((cy, _))) if cx < cy => {
                i += 1;
                (*cx, a * vx)
            }
            (Some((cx, vx)), None) => {
                i += 1;
                (*cx, a * vx)
            }
            (_, Some((cy, vy))) => {
                j += 1;
                (*cy, b * vy)
            }
            (None, None) => unreachable!(),
        };
        if !v.is_zero() {
            out.push((c, v));
        }
    }
    out
}

impl Lattice {
    pub fn new(ncols: usize) -> Self {
        Lattice {
            ncols,
            rows: BTreeMap::new(),
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Adds a dense integer vector to the generating set.
    pub fn add_dense(&mut self, v: &[i64]) {
        assert_eq!(v.len(), self.ncols);
        let sparse: SparseRow = v
            .iter()
            .enumerate()
            .filter(|(_, &x)| x != 0)
            .map(|(c, &x)| (c, BigInt::from(x)))
            .collect();
        self.add(sparse);
    }

    /// Adds a sparse vector (sorted by column) to the generating set.
    pub fn add(&mut self, mut v: SparseRow) {
        v.retain(|(_, x)| !x.is_zero());
        debug_assert!(v.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(v.last().is_none_or(|(c, _)| *c < self.ncols));
        let one = BigInt::from(1);
        while let Some((p, b)) = v.first().cloned() {
            let Some(row) = self.rows.get_mut(&p) else {
                if b.is_negative() {
                    for (_, x) in v.iter_mut() {
                        *x = -std::mem::take(x);
                    }
                }
                self.rows.insert(p, v);
                return;
            };
            let a = row[0].1.clone();
            if b.is_multiple_of(&a) {
                let q = -(&b / &a);
                v = combine(&one, &v, &q, row);
            } else {
                let e = a.extended_gcd(&b);
                // g = s a + t b
                let new_row = combine(&e.x, row, &e.y, &v);
                let rest = combine(&(&a / &e.gcd), &v, &-(&b / &e.gcd), row);
                *row = new_row;
                if row[0].1.is_negative() {
                    for (_, x) in row.iter_mut() {
                        *x = -std::mem::take(x);
                    }
                }
                v = rest;
            }
        }
    }

    /// Brings the rows into reduced Hermite form.
    pub fn reduce(&mut self) {
        let pivots: Vec<usize> = self.rows.keys().copied().collect();
        let one = BigInt::from(1);
        for &p in pivots.iter().rev() {
            let mut row = self.rows.remove(&p).expect("pivot row");
            let mut k = 1;
            while k < row.len() {
                let (c, x) = row[k].clone();
                if let Some(other) = self.rows.get(&c) {
                    let d = &other[0].1;
                    let q = x.div_floor(d);
                    if !q.is_zero() {
                        row = combine(&one, &row, &-q, other);
                        // Column c is now in [0, d); continue after it.
                        k = row.partition_point(|(cc, _)| *cc <= c);
                        continue;
                    }
                }
                k += 1;
            }
            self.rows.insert(p, row);
        }
    }

    pub fn pivot_row(&self, col: usize) -> Option<&SparseRow> {
        self.rows.get(&col)
    }

    pub fn rows(&self) -> impl Iterator<Item = (usize, &SparseRow)> {
        self.rows.iter().map(|(p, r)| (*p, r))
    }
}
