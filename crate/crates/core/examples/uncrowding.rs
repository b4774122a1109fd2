//! Uncrowd a hook-valued tableau step by step, then canonically.

use hooktab::text::parse_hvt;
use hooktab::uncrowding::{uncrowd, uncrowd_canonical, BumpKind, CanonicalOrder, UncrowdWord};

fn main() {
    let t = parse_hvt("1|1|1|3^5 / 2|2+4 / 3|5+7^6 / 4").unwrap();
    // Letters apply right to left: two arm steps, then two leg steps.
    let word: UncrowdWord = "LLAA".parse().unwrap();
    let res = uncrowd(&t, &word);
    println!("{t}");
    for step in &res.steps {
        let op = if step.letter == BumpKind::Arm { "A" } else { "L" };
        println!("--{op}--> {}", step.result);
    }
    println!("P = {}\nQ = {}", res.insertion, res.recording);

    for order in [CanonicalOrder::LA, CanonicalOrder::AL] {
        let r = uncrowd_canonical(&t, order);
        println!("{order:?}: P = {}, Q = {}", r.insertion, r.recording);
    }
}
