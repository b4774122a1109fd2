//! Tableau switching: the available moves, a seeded run, and the shuffle.

use hooktab::switching::{available_switches, fully_switch, fully_switch_trace, shuffle, Strategy};
use hooktab::text::parse_mixed;

fn main() {
    let q = parse_mixed(".|a2|a2|a1|b5|b1 / a2|a1|b6|b2|b1 / b8|b6|b5|b2").unwrap();
    let moves: Vec<String> = available_switches(&q).iter().map(ToString::to_string).collect();
    println!("{q}\navailable: {}", moves.join(" "));

    let trace = fully_switch_trace(&q, Strategy::Seeded(7)).unwrap();
    for (mv, t) in &trace {
        println!("--{mv}--> {t}");
    }

    // Every strategy reaches the same normal form, and the shuffle is one of them.
    let normal = fully_switch(&q, Strategy::Deterministic).unwrap();
    assert_eq!(shuffle(&q).unwrap(), normal);
    println!("normal form: {normal}");
}
