//! The generating function three ways, and the determinant formula.

use hooktab::genfun::{det_formula_check, hvt_genfun, schur_expansion_genfun, Model};
use hooktab::{EnumBounds, Partition};

fn main() {
    let lambda = Partition::new(vec![1]).unwrap();
    let bounds = EnumBounds::new(2, 1);
    let cap = 2;
    let g = hvt_genfun(&lambda, bounds, cap);
    print!("G_(1)(x1,x2) up to degree {cap}:\n{g}");
    for model in [Model::Exquisite, Model::Biflagged] {
        let s = schur_expansion_genfun(&lambda, bounds, cap, model);
        println!("{model:?} expansion equal: {}", s == g);
    }
    let (det, vg) = det_formula_check(&lambda, 2, cap).unwrap();
    println!("determinant side: {} terms, equal: {}", det.len(), det == vg);
}
