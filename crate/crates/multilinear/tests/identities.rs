//! The identity families with 200 seeded cases each at n = 2, 3, 4, plus the
//! orientation pairing up to n = 6.

use multilinear::identities::{check_orientation, run_all};

fn assert_all(n: usize) {
    for r in run_all(n, 200, 0x5eed) {
        assert!(r.passed(), "{} at n={n}: {:?}", r.id, r.failure);
        assert_eq!(r.cases, 200);
    }
}

#[test]
fn identities_rank_2() {
    assert_all(2);
}

#[test]
fn identities_rank_3() {
    assert_all(3);
}

#[test]
fn identities_rank_4() {
    assert_all(4);
}

#[test]
fn orientation_pairing_up_to_rank_6() {
    for n in 2..=6 {
        let r = check_orientation(n, 3, 1);
        assert!(r.passed(), "n={n}: {:?}", r.failure);
    }
}
