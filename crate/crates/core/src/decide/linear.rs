//! Gaussian elimination over GF(2) on word-packed rows, with provenance.

use crate::bits::BitVector;

/// Echelon basis of the span of a list of vectors.
///
/// Each basis row remembers which input vectors sum to it, so a reduction
/// yields a coefficient vector `x` with `Σ x_k s_k = v`. Inputs that reduce
/// to zero contribute a kernel vector instead.
#[derive(Clone, Debug)]
pub struct Gf2Basis {
    len: usize,
    members: usize,
    rows: Vec<Row>,
    kernel: Vec<BitVector>,
    independent: Vec<usize>,
}

#[derive(Clone, Debug)]
struct Row {
    pivot: usize,
    vector: BitVector,
    coef: BitVector,
}

impl Gf2Basis {
    /// Inserts members in order; pivots are the first nonzero column of each
    /// reduced row.
    pub fn new(len: usize, members: &[BitVector]) -> Self {
        let m = members.len();
        let mut basis = Gf2Basis {
            len,
            members: m,
            rows: Vec::new(),
            kernel: Vec::new(),
            independent: Vec::new(),
        };
        for (k, s) in members.iter().enumerate() {
            let mut coef = BitVector::zeros(m);
            coef.set(k, true);
            let (residual, coef) = basis.reduce_with(s.clone(), coef);
            match residual.first_one() {
                Some(pivot) => {
                    basis.rows.push(Row {
                        pivot,
                        vector: residual,
                        coef,
                    });
                    basis.independent.push(k);
                }
                None => basis.kernel.push(coef),
            }
        }
        basis
    }

    fn reduce_with(&self, mut v: BitVector, mut coef: BitVector) -> (BitVector, BitVector) {
        for row in &self.rows {
            if v.get(row.pivot) {
                v.xor_assign(&row.vector);
                coef.xor_assign(&row.coef);
            }
        }
        (v, coef)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Indices of the members kept as a maximal independent subset.
    pub fn independent(&self) -> &[usize] {
        &self.independent
    }

    /// Basis of `{ x : Σ x_k s_k = 0 }`.
    pub fn kernel(&self) -> &[BitVector] {
        &self.kernel
    }

    /// Some `x` with `Σ x_k s_k = v`, if `v` lies in the span.
    pub fn solve(&self, v: &BitVector) -> Option<BitVector> {
        let (residual, coef) = self.reduce_with(v.clone(), BitVector::zeros(self.members));
        residual.is_zero().then_some(coef)
    }

    pub fn spans(&self, v: &BitVector) -> bool {
        self.solve(v).is_some()
    }

    /// Whether `v` is a sum of an odd number of members.
    ///
    /// Solutions form the coset `x0 + ker`; support parity is linear, so an
    /// odd solution exists iff `x0` is odd or some kernel basis vector is.
    pub fn odd_combination(&self, v: &BitVector) -> bool {
        match self.solve(v) {
            None => false,
            Some(x0) => x0.count_ones() % 2 == 1 || self.kernel.iter().any(|k| k.count_ones() % 2 == 1),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bv(s: &str) -> BitVector {
        BitVector::from_bits(s.bytes().map(|b| b == b'1'))
    }

    #[test]
    fn solves_and_reports_kernel() {
        let rows = [bv("110"), bv("011"), bv("101")];
        let b = Gf2Basis::new(3, &rows);
        assert_eq!(b.rank(), 2);
        assert_eq!(b.independent(), &[0, 1]);
        assert_eq!(b.kernel(), &[bv("111")]);
        let x = b.solve(&bv("101")).unwrap();
        let mut sum = BitVector::zeros(3);
        for k in x.iter_ones() {
            sum.xor_assign(&rows[k]);
        }
        assert_eq!(sum, bv("101"));
        assert!(b.solve(&bv("111")).is_none());
    }

    #[test]
    fn parity_of_combinations() {
        let b = Gf2Basis::new(3, &[bv("110"), bv("011")]);
        assert!(b.odd_combination(&bv("110")));
        assert!(!b.odd_combination(&bv("101")));
        let b = Gf2Basis::new(3, &[bv("110"), bv("011"), bv("000")]);
        assert!(b.odd_combination(&bv("101")));
    }
}
