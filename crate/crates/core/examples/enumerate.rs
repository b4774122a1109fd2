//! Enumerate hook-valued, semistandard, exquisite and biflagged tableaux.

use hooktab::enumeration::{enum_biflagged, enum_exquisite, enum_hvt, enum_ssyt, EnumBounds};
use hooktab::{Partition, SkewShape};

fn main() {
    let lambda = Partition::new(vec![2, 1]).unwrap();
    let hvts = enum_hvt(&lambda, EnumBounds::new(3, 1));
    println!("HVT({lambda}), entries <= 3, excess <= 1: {}", hvts.len());
    println!("SSYT({lambda}), entries <= 3: {}", enum_ssyt(&lambda, 3).len());

    let shape = SkewShape::new(Partition::new(vec![3, 3, 1]).unwrap(), Partition::new(vec![2, 1]).unwrap()).unwrap();
    println!("EXQ({shape}):");
    for e in enum_exquisite(&shape) {
        println!("  {e}");
    }
    println!("BFT({shape}):");
    for b in enum_biflagged(&shape) {
        println!("  {b}");
    }
}
