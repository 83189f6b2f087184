//! DOT diagrams of a shoelace and of a decomposed shoelace representation.
//! Pipe the output through `dot -Tsvg`.

use std::sync::Arc;

use shoelace::cli::dot::{decomposed_dot, proset_dot};
use shoelace::exactlin::FieldSpec;
use shoelace::proset::{shoelace, Proset, Translation};
use shoelace::zed::{DecomposedShoelaceRep, Interval, Summand, Window};

fn main() {
    let p = Arc::new(Proset::chain(3).with_labels(vec!["1".into(), "2".into(), "3".into()]));
    let sh = shoelace(&p, &Translation::new(p.clone(), vec![1, 2, 2]).unwrap()).unwrap();
    print!("{}", proset_dot(sh.carrier()));

    let w = Window::new(-2, 8).unwrap();
    let summands = vec![Summand::pair(Interval::closed(0, 4), Interval::closed(1, 5)), Summand::left(Interval::closed(6, 6))];
    let l = DecomposedShoelaceRep::new(w, 1, FieldSpec::default(), summands).unwrap();
    print!("{}", decomposed_dot(&l));
}
