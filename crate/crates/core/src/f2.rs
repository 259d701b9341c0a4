//! Linear algebra over the two-element field.
//!
//! Vectors are packed into `u64` words. Matrices are stored column-major: column `c`
//! is the image of the `c`-th source basis vector, which is the natural layout for
//! boundary matrices and chain maps.

use std::collections::HashMap;
use std::fmt;

const WORD: usize = 64;

/// A dense bit vector of fixed length.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        Self { len, words: vec![0; len.div_ceil(WORD)] }
    }

    pub fn unit(len: usize, index: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(index, true);
        v
    }

    pub fn from_indices(len: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut v = Self::zeros(len);
        for i in indices {
            v.flip(i);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, index: usize) -> bool {
        assert!(index < self.len, "bit index {index} out of range {}", self.len);
        self.words[index / WORD] >> (index % WORD) & 1 == 1
    }

    pub fn set(&mut self, index: usize, value: bool) {
        assert!(index < self.len, "bit index {index} out of range {}", self.len);
        let mask = 1u64 << (index % WORD);
        if value {
            self.words[index / WORD] |= mask;
        } else {
            self.words[index / WORD] &= !mask;
        }
    }

    pub fn flip(&mut self, index: usize) {
        assert!(index < self.len, "bit index {index} out of range {}", self.len);
        self.words[index / WORD] ^= 1u64 << (index % WORD);
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= *b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Index of the highest set bit.
    pub fn pivot(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .rev()
            .find(|(_, &w)| w != 0)
            .map(|(k, &w)| k * WORD + (WORD - 1 - w.leading_zeros() as usize))
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(k * WORD + bit)
            })
        })
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = (0..self.len).map(|i| if self.get(i) { '1' } else { '0' }).collect();
        write!(f, "BitVec[{s}]")
    }
}

/// A matrix over the two-element field, stored by columns.
#[derive(Clone, PartialEq, Eq)]
pub struct F2Matrix {
    rows: usize,
    cols: Vec<BitVec>,
}

impl F2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols: vec![BitVec::zeros(rows); cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self { rows: n, cols: (0..n).map(|i| BitVec::unit(n, i)).collect() }
    }

    pub fn from_columns(rows: usize, cols: Vec<BitVec>) -> Self {
        assert!(cols.iter().all(|c| c.len() == rows), "column length mismatch");
        Self { rows, cols }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn get(&self, row: usize, col: usize) -> bool {
        self.cols[col].get(row)
    }

    pub fn set(&mut self, row: usize, col: usize, value: bool) {
        self.cols[col].set(row, value);
    }

    pub fn flip(&mut self, row: usize, col: usize) {
        self.cols[col].flip(row);
    }

    pub fn column(&self, col: usize) -> &BitVec {
        &self.cols[col]
    }

    pub fn columns(&self) -> &[BitVec] {
        &self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(BitVec::is_zero)
    }

    /// Number of nonzero entries.
    pub fn nnz(&self) -> usize {
        self.cols.iter().map(BitVec::count_ones).sum()
    }

    pub fn apply(&self, v: &BitVec) -> BitVec {
        assert_eq!(v.len(), self.ncols(), "vector length does not match column count");
        let mut out = BitVec::zeros(self.rows);
        for c in v.ones() {
            out.xor_assign(&self.cols[c]);
        }
        out
    }

    /// `self * rhs`.
    pub fn compose(&self, rhs: &F2Matrix) -> F2Matrix {
        assert_eq!(self.ncols(), rhs.nrows(), "inner dimensions differ");
        F2Matrix { rows: self.rows, cols: rhs.cols.iter().map(|c| self.apply(c)).collect() }
    }

    pub fn rank(&self) -> usize {
        Echelon::new(self.rows).extend(self.cols.iter().cloned())
    }
}

impl fmt::Debug for F2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "F2Matrix {}x{}", self.rows, self.ncols())?;
        for r in 0..self.rows {
            let line: String = (0..self.ncols()).map(|c| if self.get(r, c) { '1' } else { '.' }).collect();
            writeln!(f, "  {line}")?;
        }
        Ok(())
    }
}

/// Vectors in echelon form keyed by their highest set bit.
#[derive(Clone, Debug)]
struct Echelon {
    len: usize,
    rows: Vec<BitVec>,
    by_pivot: HashMap<usize, usize>,
}

impl Echelon {
    fn new(len: usize) -> Self {
        Self { len, rows: Vec::new(), by_pivot: HashMap::new() }
    }

    /// Reduce `v` until its pivot is not shared with a stored row.
    fn reduce_leading(&self, v: &mut BitVec) {
        while let Some(p) = v.pivot() {
            match self.by_pivot.get(&p) {
                Some(&k) => v.xor_assign(&self.rows[k]),
                None => break,
            }
        }
    }

    /// Clear every bit of `v` that is a pivot of a stored row.
    fn reduce_full(&self, v: &mut BitVec) {
        let mut bits: Vec<usize> = v.ones().collect();
        while let Some(b) = bits.pop() {
            if !v.get(b) {
                continue;
            }
            if let Some(&k) = self.by_pivot.get(&b) {
                v.xor_assign(&self.rows[k]);
                bits = v.ones().filter(|&x| x < b).collect();
            }
        }
    }

    fn push(&mut self, v: BitVec) -> bool {
        let mut v = v;
        self.reduce_leading(&mut v);
        match v.pivot() {
            Some(p) => {
                self.by_pivot.insert(p, self.rows.len());
                self.rows.push(v);
                true
            }
            None => false,
        }
    }

    fn extend(mut self, vs: impl IntoIterator<Item = BitVec>) -> usize {
        for v in vs {
            debug_assert_eq!(v.len(), self.len);
            self.push(v);
        }
        self.rows.len()
    }
}

/// Homology of a square-zero endomorphism `d` of a finite vector space,
/// together with a fixed basis of cycle representatives.
#[derive(Clone, Debug)]
pub struct Homology {
    representatives: Vec<BitVec>,
    boundaries: Echelon,
    // Echelon rows spanning the chosen representatives; `rep_of[k]` is the
    // representative index of row k.
    cycles: Echelon,
    rep_of: Vec<usize>,
    rank_d: usize,
}

impl Homology {
    /// Computes homology by column reduction of `d`.
    ///
    /// Representatives are deterministic: kernel vectors are produced in column
    /// order and fully reduced against the boundary space, highest index first.
    pub fn compute(d: &F2Matrix) -> Self {
        let n = d.ncols();
        assert_eq!(d.nrows(), n, "boundary matrix must be square");

        // Column reduction with tracked column operations.
        let mut reduced: Vec<BitVec> = d.columns().to_vec();
        let mut ops: Vec<BitVec> = (0..n).map(|i| BitVec::unit(n, i)).collect();
        let mut owner: HashMap<usize, usize> = HashMap::new();
        let mut boundaries = Echelon::new(n);
        let mut kernel = Vec::new();
        for c in 0..n {
            while let Some(p) = reduced[c].pivot() {
                match owner.get(&p) {
                    Some(&o) => {
                        let (rc, ro) = (reduced[o].clone(), ops[o].clone());
                        reduced[c].xor_assign(&rc);
                        ops[c].xor_assign(&ro);
                    }
                    None => break,
                }
            }
            match reduced[c].pivot() {
                Some(p) => {
                    owner.insert(p, c);
                    boundaries.by_pivot.insert(p, boundaries.rows.len());
                    boundaries.rows.push(reduced[c].clone());
                }
                None => kernel.push(ops[c].clone()),
            }
        }
        let rank_d = boundaries.rows.len();

        let mut cycles = Echelon::new(n);
        let mut rep_of = Vec::new();
        let mut representatives = Vec::new();
        for z in kernel {
            let mut z = z;
            boundaries.reduce_full(&mut z);
            // Interleave the two echelon sets until the pivot is fresh.
            while let Some(p) = z.pivot() {
                if let Some(&k) = boundaries.by_pivot.get(&p) {
                    z.xor_assign(&boundaries.rows[k]);
                } else if let Some(&k) = cycles.by_pivot.get(&p) {
                    z.xor_assign(&cycles.rows[k]);
                } else {
                    break;
                }
            }
            if let Some(p) = z.pivot() {
                boundaries.reduce_full(&mut z);
                debug_assert_eq!(z.pivot(), Some(p));
                cycles.by_pivot.insert(p, cycles.rows.len());
                cycles.rows.push(z.clone());
                rep_of.push(representatives.len());
                representatives.push(z);
            }
        }
        debug_assert_eq!(representatives.len() + 2 * rank_d, n);
        Self { representatives, boundaries, cycles, rep_of, rank_d }
    }

    pub fn dim(&self) -> usize {
        self.representatives.len()
    }

    pub fn rank_of_boundary(&self) -> usize {
        self.rank_d
    }

    pub fn representatives(&self) -> &[BitVec] {
        &self.representatives
    }

    pub fn is_boundary(&self, v: &BitVec) -> bool {
        let mut v = v.clone();
        self.boundaries.reduce_leading(&mut v);
        v.is_zero()
    }

    /// Coordinates of the class of a cycle `v` in the representative basis,
    /// or `None` when `v` is not a cycle.
    pub fn coordinates(&self, v: &BitVec) -> Option<BitVec> {
        let mut v = v.clone();
        let mut coords = BitVec::zeros(self.dim());
        while let Some(p) = v.pivot() {
            if let Some(&k) = self.boundaries.by_pivot.get(&p) {
                v.xor_assign(&self.boundaries.rows[k]);
            } else if let Some(&k) = self.cycles.by_pivot.get(&p) {
                v.xor_assign(&self.cycles.rows[k]);
                coords.flip(self.rep_of[k]);
            } else {
                return None;
            }
        }
        Some(coords)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pivot_and_ones() {
        let v = BitVec::from_indices(130, [3, 64, 129]);
        assert_eq!(v.pivot(), Some(129));
        assert_eq!(v.ones().collect::<Vec<_>>(), vec![3, 64, 129]);
        assert_eq!(BitVec::zeros(10).pivot(), None);
    }

    #[test]
    fn rank_of_small_matrix() {
        let m = F2Matrix::from_columns(
            3,
            vec![
                BitVec::from_indices(3, [0, 1]),
                BitVec::from_indices(3, [1, 2]),
                BitVec::from_indices(3, [0, 2]),
            ],
        );
        assert_eq!(m.rank(), 2);
        assert_eq!(F2Matrix::identity(5).rank(), 5);
    }

    #[test]
    fn zero_boundary_has_full_homology() {
        let h = Homology::compute(&F2Matrix::zeros(4, 4));
        assert_eq!(h.dim(), 4);
        for (k, r) in h.representatives().iter().enumerate() {
            assert_eq!(r, &BitVec::unit(4, k));
        }
    }

    #[test]
    fn trefoil_slice_representative() {
        // basis a, b, c with d(b) = c
        let mut d = F2Matrix::zeros(3, 3);
        d.set(2, 1, true);
        let h = Homology::compute(&d);
        assert_eq!(h.dim(), 1);
        assert_eq!(h.representatives()[0], BitVec::unit(3, 0));
        assert!(h.is_boundary(&BitVec::unit(3, 2)));
        assert_eq!(h.coordinates(&BitVec::from_indices(3, [0, 2])), Some(BitVec::unit(1, 0)));
        assert_eq!(h.coordinates(&BitVec::unit(3, 1)), None);
    }

    #[test]
    fn acyclic_square() {
        // d(t) = r + l, d(r) = d, d(l) = d
        let mut d = F2Matrix::zeros(4, 4);
        d.set(1, 0, true);
        d.set(2, 0, true);
        d.set(3, 1, true);
        d.set(3, 2, true);
        assert!(d.compose(&d).is_zero());
        assert_eq!(Homology::compute(&d).dim(), 0);
    }
}
