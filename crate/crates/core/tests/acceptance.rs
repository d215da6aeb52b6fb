//! The twelve acceptance criteria, one line each.
//!
//! Criterion 6 asserts `P^1 ~ I^2, P^2 ~ I^1, P^3 ~ I^4, P^4 ~ I^3` over the big
//! component. Under the stated relations the surviving length-two paths are
//! `alpha1 beta3`, `alpha3 beta1`, `alpha2 beta4` and `alpha4 beta2`, so `P^i` has
//! socle at its partner and the true pairs are `(1,3), (3,1), (2,4), (4,2)`. The
//! check runs as stated and is expected to fail; the corrected pairs are
//! checked separately.

use cubic_dmod::verify::{criterion, run_suite, Status, Suite, VerifyConfig};

const KNOWN_UNATTAINABLE: [u8; 1] = [6];

#[test]
fn acceptance() {
    let cfg = VerifyConfig::default();
    let mut unexpected = Vec::new();
    for n in 1..=12u8 {
        let check = criterion(n, &cfg);
        println!("{check}");
        let expected_fail = KNOWN_UNATTAINABLE.contains(&n);
        match (check.status, expected_fail) {
            (Status::Pass, false) | (Status::Fail, true) => {}
            _ => unexpected.push(format!("{check}")),
        }
    }
    assert!(unexpected.is_empty(), "unexpected outcomes:\n{}", unexpected.join("\n"));
}

#[test]
fn corrected_projective_injective_pairs() {
    let report = run_suite(Suite::Quiver, &VerifyConfig::default());
    let corrected = report.checks.iter().find(|c| c.name.starts_with("projective-injective identifications from")).unwrap();
    println!("{corrected}");
    assert_eq!(corrected.status, Status::Pass);
    let stated = report.checks.iter().find(|c| c.name.starts_with("criterion 6")).unwrap();
    assert!(stated.witness.as_deref().unwrap().contains("P^1 is not isomorphic to I^2 (it is I^3)"));
}
