//! Subsets of tiny carriers as bitmasks. Carriers in this crate stay below
//! a handful of elements, so every "for all subsets" in a defining formula
//! is a literal loop over masks.

/// All subsets of an `n`-element carrier.
pub fn masks(n: usize) -> impl Iterator<Item = u32> {
    debug_assert!(n <= 20);
    0..(1u32 << n)
}

pub fn contains(mask: u32, i: usize) -> bool {
    mask >> i & 1 == 1
}

/// Elements of a mask in ascending order.
pub fn elems(mask: u32) -> impl Iterator<Item = usize> {
    (0..32).filter(move |i| contains(mask, *i))
}

pub fn from_slice(set: &[usize]) -> u32 {
    set.iter().fold(0, |m, i| m | 1 << i)
}

pub fn is_empty(mask: u32) -> bool {
    mask == 0
}

pub fn full(n: usize) -> u32 {
    (1u32 << n) - 1
}
