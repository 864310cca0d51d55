//! Identical-column classes: the atoms of `M2 ∪ {¬}`, and the clones
//! `R2 = <x ? y : z>` and `R0 = <∨, ⊕>`.

use std::collections::HashMap;

use crate::bits::BitVector;

/// Which constant columns stay fixed in the closure.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fixed {
    /// Nothing fixed; every class is free.
    None,
    /// All-0 columns are fixed at 0.
    Zeros,
    /// All-0 and all-1 columns are fixed.
    Both,
}

/// Partition of the columns of a family into classes of identical columns,
/// after setting aside fixed constant columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColumnClasses {
    len: usize,
    classes: Vec<Vec<usize>>,
    /// Fixed columns with their value.
    fixed: BitVector,
    fixed_value: BitVector,
}

impl ColumnClasses {
    /// Classes are ordered by their smallest column.
    pub fn new(len: usize, members: &[BitVector], fixed: Fixed) -> Self {
        let mut fixed_mask = BitVector::zeros(len);
        let mut fixed_value = BitVector::zeros(len);
        let mut by_column: HashMap<Vec<bool>, usize> = HashMap::new();
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for i in 0..len {
            let column: Vec<bool> = members.iter().map(|w| w.get(i)).collect();
            let all_zero = column.iter().all(|&b| !b);
            let all_one = column.iter().all(|&b| b);
            let pinned = match fixed {
                Fixed::None => false,
                Fixed::Zeros => all_zero,
                Fixed::Both => all_zero || all_one,
            };
            if pinned {
                fixed_mask.set(i, true);
                fixed_value.set(i, all_one && !all_zero);
                continue;
            }
            match by_column.get(&column) {
                Some(&c) => classes[c].push(i),
                None => {
                    by_column.insert(column, classes.len());
                    classes.push(vec![i]);
                }
            }
        }
        ColumnClasses {
            len,
            classes,
            fixed: fixed_mask,
            fixed_value,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn fixed_mask(&self) -> &BitVector {
        &self.fixed
    }

    /// The vector with every fixed column at its value and every class at 0.
    pub fn base(&self) -> &BitVector {
        &self.fixed_value
    }

    /// Indicator vector of one class.
    pub fn class_mask(&self, c: usize) -> BitVector {
        let mut m = BitVector::zeros(self.len);
        for &i in &self.classes[c] {
            m.set(i, true);
        }
        m
    }

    pub fn contains(&self, v: &BitVector) -> bool {
        if v.and(&self.fixed) != self.fixed_value {
            return false;
        }
        self.classes.iter().all(|class| {
            let b = v.get(class[0]);
            class[1..].iter().all(|&i| v.get(i) == b)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bv(s: &str) -> BitVector {
        BitVector::from_bits(s.bytes().map(|b| b == b'1'))
    }

    #[test]
    fn r2_fixes_both_constants() {
        let c = ColumnClasses::new(3, &[bv("101"), bv("110")], Fixed::Both);
        assert_eq!(c.class_count(), 2);
        assert!(!c.contains(&bv("011")));
        assert!(c.contains(&bv("111")));
        assert!(c.contains(&bv("100")));

        let c = ColumnClasses::new(2, &[bv("10")], Fixed::Both);
        assert_eq!(c.class_count(), 0);
        assert!(c.contains(&bv("10")));
        assert!(!c.contains(&bv("01")));
    }

    #[test]
    fn r0_fixes_only_zero_columns() {
        let c = ColumnClasses::new(2, &[bv("10"), bv("11")], Fixed::Zeros);
        assert!(c.contains(&bv("01")));
        let c = ColumnClasses::new(2, &[bv("10")], Fixed::Zeros);
        assert!(c.contains(&bv("00")));
        assert!(c.contains(&bv("10")));
        assert!(!c.contains(&bv("01")));
    }

    #[test]
    fn identical_columns_share_a_class() {
        let c = ColumnClasses::new(2, &[bv("11")], Fixed::None);
        assert_eq!(c.classes(), &[vec![0, 1]]);
        assert!(c.contains(&bv("00")));
        assert!(!c.contains(&bv("01")));
    }
}
