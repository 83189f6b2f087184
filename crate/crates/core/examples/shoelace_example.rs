//! The shoelace of the chain 1 < 2 < 3 along Λ(i) = min(i + 1, 3).

use std::sync::Arc;

use shoelace::proset::{shoelace, Proset, Translation};

fn main() {
    let p = Arc::new(Proset::chain(3).with_labels(vec!["1".into(), "2".into(), "3".into()]));
    let lam = Translation::new(p.clone(), vec![1, 2, 2]).expect("monotone and inflationary");
    let sh = shoelace(&p, &lam).expect("valid proset");
    let c = sh.carrier();
    println!("{} elements, {} related pairs", c.len(), c.pair_count());
    for (i, j) in c.related_pairs().filter(|(i, j)| i != j) {
        println!("  {} <= {}", c.label(i), c.label(j));
    }
    for (i, j) in c.iso_pairs() {
        println!("isomorphic: {} and {}", c.label(i), c.label(j));
    }
}
