use crate::bits::BitVector;
use crate::decide::classes::ColumnClasses;

use super::{BitEnumeration, GrayCounter};

/// Every union of column classes on top of the fixed columns, in Gray order.
///
/// Serves `M2 ∪ {¬}` (no fixed columns once the family is closed under
/// negation), `R2` and `R0`.
pub struct AtomsGray {
    masks: Vec<BitVector>,
    current: BitVector,
    gray: GrayCounter,
    empty: bool,
    work: u64,
}

impl AtomsGray {
    pub fn new(classes: &ColumnClasses, empty: bool) -> Self {
        let masks: Vec<BitVector> = (0..classes.class_count()).map(|c| classes.class_mask(c)).collect();
        AtomsGray {
            gray: GrayCounter::new(masks.len()),
            masks,
            current: classes.base().clone(),
            empty,
            work: 0,
        }
    }
}

impl Iterator for AtomsGray {
    type Item = BitVector;

    fn next(&mut self) -> Option<BitVector> {
        if self.empty {
            return None;
        }
        if let Some(c) = self.gray.next()? {
            self.current.xor_assign(&self.masks[c]);
            self.work += self.current.word_count() as u64;
        }
        self.work += self.current.word_count() as u64;
        Some(self.current.clone())
    }
}

impl BitEnumeration for AtomsGray {
    fn work(&self) -> u64 {
        self.work
    }
}
