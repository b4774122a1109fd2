//! Parse hook-valued and mixed tableaux, report violations and weights.

use hooktab::hvt::validate_hvt;
use hooktab::text::{parse_hvt, parse_hvt_cells, parse_mixed};

fn main() {
    let t = parse_hvt("1+1^2|3+3,4^4|4+4,5^9 / 3+3,5^4,6|6+7").expect("valid");
    println!("{t}");
    println!("  shape {}, arm excess {}, leg excess {}", t.shape(), t.arm_excess(), t.leg_excess());
    println!("  weight {}", t.weight());

    // Syntactically fine, but the row and column conditions fail.
    let (shape, cells) = parse_hvt_cells("1+2,2^3,4|3+4,5^5|5+6,7^7,8|7 / 4+4,5^7|7+8,9").unwrap();
    for v in validate_hvt(shape, cells).unwrap_err() {
        println!("  violation: {v}");
    }

    match parse_hvt("1|0") {
        Err(e) => println!("  rejected: {e}"),
        Ok(_) => unreachable!(),
    }

    let q = parse_mixed(".|.|a2 / .|a1|b1 / b2").unwrap();
    println!("{q}\n  {:?}", q.classify());
    println!("  exquisite: {}", q.is_exquisite());
}
