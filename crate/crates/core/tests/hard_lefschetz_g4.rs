//! The degree-4 exterior model is the largest the projector guard allows;
//! hard Lefschetz invertibility is checked there separately because the full
//! pairwise-orthogonality verification is quadratic in the projector count.

use std::time::Instant;
use lefrep_core::hodgemotive::kleiman_projectors;

#[test]
fn hard_lefschetz_holds_up_to_g4() {
    let t0 = Instant::now();
    let family = kleiman_projectors(4).unwrap();
    let report = family.verify();
    println!("g=4 verify in {:?}", t0.elapsed());
    assert!(report.hard_lefschetz_ok);
    assert!(report.idempotent_ok);
    assert!(report.sum_is_identity);
    assert!(report.orthogonal_ok);
}
