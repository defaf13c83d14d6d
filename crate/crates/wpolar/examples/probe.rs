use nalgebra::{Complex, DMatrix};
use rand::{Rng, SeedableRng};

fn schur_check(m: &DMatrix<Complex<f64>>) -> Option<(f64, f64)> {
    let schur = m.clone().try_schur(1e-14, 2000)?;
    let (q, t) = schur.unpack();
    let rec = &q * &t * q.adjoint();
    let res = (rec - m).norm() / m.norm().max(1.0);
    let mut sub = 0.0f64;
    for i in 0..m.nrows() {
        for j in 0..i {
            sub += t[(i, j)].norm_sqr();
        }
    }
    Some((res, sub.sqrt()))
}

fn main() {
    // Jordan block / nilpotent example
    let j = DMatrix::from_row_slice(2, 2, &[
        Complex::new(1.0, 0.0), Complex::new(1.0, 0.0),
        Complex::new(0.0, 0.0), Complex::new(1.0, 0.0)]);
    println!("jordan 2x2: {:?}", schur_check(&j));
    // identity (degenerate)
    let i4 = DMatrix::<Complex<f64>>::identity(4, 4);
    println!("identity: {:?}", schur_check(&i4));
    // bigger jordan
    let mut j5 = DMatrix::<Complex<f64>>::identity(5, 5) * Complex::new(2.0, 0.0);
    for k in 0..4 { j5[(k, k + 1)] = Complex::new(1.0, 0.0); }
    println!("jordan 5x5: {:?}", schur_check(&j5));
    // random batch
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
    let mut worst = (0.0f64, 0.0f64);
    let mut fails = 0;
    for trial in 0..500 {
        let n = 2 + (trial % 9);
        let m = DMatrix::<Complex<f64>>::from_fn(n, n, |_, _| {
            Complex::new(rng.random::<f64>() * 2.0 - 1.0, rng.random::<f64>() * 2.0 - 1.0)
        });
        match schur_check(&m) {
            Some((r, s)) => { worst.0 = worst.0.max(r); worst.1 = worst.1.max(s); }
            None => fails += 1,
        }
    }
    println!("random 500: worst res {:.3e}, worst subdiag {:.3e}, fails {}", worst.0, worst.1, fails);
    // unitary with clustered eigenvalues
    for trial in 0..100 {
        let n = 6;
        let g = DMatrix::<Complex<f64>>::from_fn(n, n, |_, _| {
            Complex::new(rng.random::<f64>() * 2.0 - 1.0, rng.random::<f64>() * 2.0 - 1.0)
        });
        let qr = g.qr();
        let u = qr.q();
        match schur_check(&u) {
            Some((r, _)) => { if r > 1e-12 { println!("unitary trial {} res {:.3e}", trial, r); } }
            None => println!("unitary trial {} FAILED", trial),
        }
    }
    println!("unitary batch done");
}
