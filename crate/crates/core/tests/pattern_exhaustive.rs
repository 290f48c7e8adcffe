mod common;

#[test]
fn words_and_leaning_points_match_a_remainder_scan() {
    let checked = common::pattern_suite(60).unwrap();
    assert!(checked > 1000);
}

#[test]
fn flanking_factors_hold_for_every_admissible_cut() {
    let checked = common::flanking_suite(30).unwrap();
    assert!(checked > 0);
}
