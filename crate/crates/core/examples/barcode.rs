//! A sum of interval modules hidden by a random change of basis; the barcode
//! recovers the intervals.

use std::sync::Arc;

use shoelace::exactlin::FieldSpec;
use shoelace::generate;
use shoelace::rep::change_basis;
use shoelace::zed::{barcode, interval_sum, Boundary, Interval, Window, WindowModule};

fn main() {
    let field = FieldSpec::new(5).unwrap();
    let w = Window::new(0, 7).unwrap();
    let bars = [Interval::closed(0, 3), Interval::closed(2, 7), Interval::closed(2, 5), Interval::closed(2, 5)];
    let sum = Arc::new(interval_sum(&bars, &w, field).unwrap().rep);
    let (hidden, _) = change_basis(&sum, &generate::random_basis(&mut generate::rng(1), &sum)).unwrap();
    println!("map 2 -> 5 after scrambling: {:?}", hidden.map(2, 5));

    let wm = WindowModule::new(w, hidden).unwrap();
    for (i, k) in barcode(&wm, Boundary::Finite).bars() {
        println!("{i} x{k}");
    }
    println!("treating the window edges as unbounded:");
    for (i, k) in barcode(&wm, Boundary::Infinite).bars() {
        println!("{i} x{k}");
    }
}
