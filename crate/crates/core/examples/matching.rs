//! Essential ε-matchings and decomposed shoelace representations, in both
//! directions, and what goes wrong for a pair violating (⋆).

use shoelace::exactlin::FieldSpec;
use shoelace::zed::{
    expand_decomposed, is_essential, matching_to_rep, rep_to_matching, Barcode, Interval, Matching, Variant, Window,
};

fn main() {
    let field = FieldSpec::default();
    let i = Interval::closed;
    let eps = 2;
    let source = Barcode::from_intervals([i(0, 0), i(3, 9)]);
    let target = Barcode::from_intervals([i(1, 1), i(4, 8)]);
    let sigma = Matching::from_interval_pairs(source, target, eps, &[(i(0, 0), i(1, 1)), (i(3, 9), i(4, 8))]).unwrap();
    for (a, b) in is_essential(&sigma).unwrap() {
        println!("pair failing (⋆): {a} ~ {b}");
    }

    let w = Window::new(-6, 15).unwrap();
    let l = matching_to_rep(&sigma, &w, Variant::NonEssential, field).unwrap();
    for s in l.summands() {
        println!("summand {s}");
    }
    let e = expand_decomposed(&l).unwrap();
    println!("expanded: {} summands over {} carrier elements", e.sum.summand_count(), e.shoelace.carrier().len());
    let back = rep_to_matching(&l).unwrap();
    for (a, b) in back.matched() {
        println!("still matched after the round trip: {a} ~ {b}");
    }

    // dropping the bad pair gives an essential matching that survives intact
    let good = Matching::from_interval_pairs(sigma.source().clone(), sigma.target().clone(), eps, &[(i(3, 9), i(4, 8))]).unwrap();
    let l = matching_to_rep(&good, &w, Variant::Essential, field).unwrap();
    assert_eq!(rep_to_matching(&l).unwrap(), good);
    println!("essential matching recovered exactly");
}
