//! For short, ε-close interval pairs: (⋆), nonvanishing Hom after shifting,
//! and a nontrivial canonical interleaving all agree.

use shoelace::exactlin::FieldSpec;
use shoelace::zed::{canonical_interleaving, condition_star, hom_dimension, padded_window, Interval};

fn main() {
    let field = FieldSpec::default();
    let eps = 2;
    let i = Interval::closed(3, 5);
    println!("I = {i}, ε = {eps}");
    println!("{:<8} {:>4} {:>4} {:>6}", "J", "(⋆)", "hom", "inter");
    for lo in 1..=7 {
        for hi in lo..(lo + 4).min(8) {
            let j = Interval::closed(lo, hi);
            if !j.is_short(eps) || (lo - 3).abs() > 2 || (hi - 5).abs() > 2 {
                continue;
            }
            let w = padded_window(&i, &j, eps);
            let hom = hom_dimension(&i, &j.shifted_down(eps), &w, field).unwrap()
                + hom_dimension(&j, &i.shifted_down(eps), &w, field).unwrap();
            let inter = canonical_interleaving(&i, &j, eps, &w, field).is_ok_and(|x| !x.is_trivial());
            println!("{:<8} {:>4} {:>4} {:>6}", j.to_string(), condition_star(&i, &j, eps), hom, inter);
        }
    }
}
