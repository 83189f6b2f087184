//! An interleaving packed into a module over its shoelace and read back.

use std::sync::Arc;

use shoelace::exactlin::FieldSpec;
use shoelace::generate;
use shoelace::interleave::{pack, unpack};

fn main() {
    let rng = &mut generate::rng(5);
    let field = FieldSpec::new(5).unwrap();
    // draw until both modules are nonzero
    let (lam, x) = loop {
        let p = Arc::new(generate::random_proset(rng, 5));
        let lam = generate::random_translation(rng, &p);
        let x = generate::random_interleaving(rng, &lam, field, 3);
        if x.m().total_dim() > 0 && x.n().total_dim() > 0 {
            break (lam, x);
        }
    };
    println!("Λ = {:?}", lam.map());
    println!("dim M = {:?}, dim N = {:?}", x.m().dims(), x.n().dims());

    let v = pack(&x).expect("valid interleaving");
    v.rep.validate().expect("pack yields a functor");
    println!("packed dims over the shoelace: {:?}", v.rep.dims());

    let back = unpack(&v.shoelace, &v.rep).expect("restrictions are well formed");
    assert_eq!(back, x);
    println!("unpack(pack(x)) == x");
}
