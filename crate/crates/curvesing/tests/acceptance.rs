use curvesing::samples;
use curvesing::singularity::analyze_curve;

#[test]
fn degree10_spot() {
    let t0 = std::time::Instant::now();
    let phi = samples::degree10_multibranch();
    let an = analyze_curve(&phi, 0).unwrap();
    println!("elapsed: {:?}", t0.elapsed());
    assert_eq!(an.basis.mu, 4);
    let expect = samples::degree10_expected_factors();
    for k in 2..=10usize {
        match expect.get(&k) {
            Some(d) => assert!(an.factors.factor(k).eq_up_to_scalar(d), "d_{} mismatch: {}", k, an.factors.factor(k)),
            None => assert_eq!(an.factors.factor(k).degree(), 0, "d_{} should be trivial", k),
        }
    }
    let reduced = an.factors.reduced.as_ref().unwrap();
    let expect_red = samples::degree10_expected_reduced();
    for k in 2..=10usize {
        match expect_red.get(&k) {
            Some(d) => assert!(reduced[&k].eq_up_to_scalar(d), "reduced d_{} mismatch: {}", k, reduced[&k]),
            None => assert_eq!(reduced[&k].degree(), 0),
        }
    }
    assert_eq!(an.delta.degree(), 72);
    println!("strata: {:#?}", an.report.strata.iter().map(|s| (s.multiplicity, s.near_chain.clone(), s.params.iter().map(|p| p.display()).collect::<Vec<_>>())).collect::<Vec<_>>());
    println!("genus: {:?}", an.report.genus);
    println!("certified: {}", an.report.fully_certified);
    println!("total elapsed: {:?}", t0.elapsed());
}
