//! Operations over larger domains: near-unanimity detection, commutative
//! groups and associative operations.

pub mod associative;
pub mod group;
pub mod zmod;

pub use associative::{decide_associative_small, AssociativeDfs};
pub use group::{Factor, GroupStructure};

use crate::op::Operation;

/// The arity `k ≥ 3` of `f` if `f(x, …, x, y, x, …, x) = x` for every
/// position of the single deviant `y`.
pub fn detect_near_unanimity(f: &Operation) -> Option<usize> {
    let k = f.arity();
    if k < 3 {
        return None;
    }
    let d = f.domain();
    let mut args = vec![0u8; k];
    for x in 0..d {
        for y in 0..d {
            for pos in 0..k {
                args.fill(x);
                args[pos] = y;
                if f.eval(&args) != x {
                    return None;
                }
            }
        }
    }
    Some(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::op::builtin;

    #[test]
    fn near_unanimity_detection() {
        assert_eq!(detect_near_unanimity(&builtin::maj()), Some(3));
        assert_eq!(detect_near_unanimity(&builtin::dual_discriminator(3)), Some(3));
        assert_eq!(detect_near_unanimity(&builtin::threshold(4)), Some(5));
        assert_eq!(detect_near_unanimity(&builtin::capped_sum()), None);
        assert_eq!(detect_near_unanimity(&builtin::xor3()), None);
        assert_eq!(detect_near_unanimity(&builtin::and_or()), None);
    }
}
