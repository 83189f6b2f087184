//! Two interleavings of the same pair, interleaved with each other over the
//! twisted lift of Λ and then over the untwisted lift of Λ∘Λ.

use std::sync::Arc;

use shoelace::exactlin::{FieldSpec, Matrix};
use shoelace::interleave::{square_interleave, untwist_square, Interleaving};
use shoelace::proset::{Proset, Translation};
use shoelace::rep::Representation;

fn main() {
    let field = FieldSpec::new(5).unwrap();
    let p = Arc::new(Proset::chain(6));
    let lam = Translation::new(p.clone(), vec![1, 2, 3, 4, 5, 5]).unwrap();
    let thin = |s: &[bool]| Arc::new(Representation::thin(p.clone(), field, s));
    let m = thin(&[false, true, true, true, false, false]);
    let n = thin(&[false, false, true, true, true, false]);
    // φ(i): M(i) -> N(i+1) and ψ(i): N(i) -> M(i+1), identity where both sides live
    let phi = (0..6).map(|i| gated(field, m.dim(i), n.dim(lam.apply(i)))).collect();
    let psi = (0..6).map(|i| gated(field, n.dim(i), m.dim(lam.apply(i)))).collect();
    let x = Interleaving::from_components(m, n, lam, phi, psi).expect("a 1-interleaving");
    let y = x.rescaled(2, 3);

    let (sh, sq) = square_interleave(&x, &y).expect("same pair");
    sq.validate().unwrap();
    println!("twisted lift over {} carrier elements: {:?}", sh.carrier().len(), sq.lam().map());
    let (_, un) = untwist_square(&x, &y).unwrap();
    un.validate().unwrap();
    println!("untwisted lift of Λ∘Λ: {:?}", un.lam().map());
}

fn gated(field: FieldSpec, from: usize, to: usize) -> Matrix {
    if from == 1 && to == 1 {
        Matrix::identity(field, 1)
    } else {
        Matrix::zeros(field, to, from)
    }
}
