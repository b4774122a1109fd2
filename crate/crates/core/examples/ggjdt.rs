//! The GG-jdt map on a biflagged tableau, with its slides and the shifted result.

use hooktab::mixed::Sign;
use hooktab::switching::{gg_jdt_trace, gg_out_of_order};
use hooktab::text::parse_mixed;

fn main() {
    let q = parse_mixed(".|.|a2 / .|a1|b1 / b2").unwrap();
    for w in gg_out_of_order(&q).unwrap() {
        println!("out of order: {w:?}");
    }
    let trace = gg_jdt_trace(&q).unwrap();
    println!("{q}");
    for (mv, t) in &trace {
        println!("--{mv}--> {t}");
    }
    let e = trace.last().map_or(q.clone(), |(_, t)| t.clone());
    println!("exquisite: {}", e.is_exquisite());
    println!("c_beta_plus: {}", e.c_beta_shift(Sign::Plus));
}
