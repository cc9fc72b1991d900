use curvesing::mubasis::compute_mu_basis;
use curvesing::resmat::{build_moving_forms, build_sylvester};
use curvesing::samples;
use curvesing::singularity::delta_subresultant;
use curvesing::smithlab::singular_factors;
use std::time::Instant;

fn main() {
    let phi = samples::degree10_multibranch();
    let t = Instant::now();
    let basis = compute_mu_basis(&phi).unwrap();
    println!("mu-basis: {:?}", t.elapsed());
    let t = Instant::now();
    let mf = build_moving_forms(&phi, &basis).unwrap();
    let s = build_sylvester(&mf);
    println!("matrices: {:?}", t.elapsed());
    let t = Instant::now();
    let d = delta_subresultant(&mf, 0).unwrap();
    println!("delta: {:?} (deg {})", t.elapsed(), d.degree());
    let t = Instant::now();
    let sf = singular_factors(&s, 10, 4, 0).unwrap();
    println!("singular factors: {:?}", t.elapsed());
    for (k, f) in &sf.factors {
        println!("  d_{} deg {}", k, f.degree());
    }
}
