use raney::coral::{bijection_p1_to_pp, bijection_pp_to_p1, coral_tiers, enumerate_coral_tuple};
use raney::numbers::{raney_closed, tier_product};
use raney::verify::{run_all, VerifyConfig};
use raney::{CoralDiagram, ExactNat, SmallNat, WideNat};

#[test]
fn aliases_agree() {
    for k in 0..=12 {
        let exact: ExactNat = raney_closed(3, 2, k);
        let small: SmallNat = raney_closed(3, 2, k);
        let wide: WideNat = raney_closed(3, 2, k);
        assert_eq!(exact.to_string(), small.to_string());
        assert_eq!(exact.to_string(), wide.to_string());
    }
}

#[test]
fn diagrams_rebuild_from_codes() {
    for d in enumerate_coral_tuple(3, 2, 3) {
        let again = CoralDiagram::from_code(3, 2, d.code().clone()).unwrap();
        assert_eq!(again, d);
        assert_eq!(CoralDiagram::new(3, 2, d.tree().clone()).unwrap(), d);
    }
}

#[test]
fn bijections_invert() {
    for d in enumerate_coral_tuple(2, 2, 4) {
        let image = bijection_pp_to_p1(&d).unwrap();
        assert_eq!(bijection_p1_to_pp(&image).unwrap(), d);
    }
}

#[test]
fn tiers_sum_to_total() {
    let tiers = coral_tiers(2, 3, 4);
    let total: ExactNat = tiers
        .iter()
        .map(|(c, codes)| {
            let product: ExactNat = tier_product(2, 3, c.parts());
            assert_eq!(product, ExactNat::from(codes.len()));
            product
        })
        .sum();
    assert_eq!(total, raney_closed(2, 3, 4));
}

#[test]
fn verify_suites_pass() {
    let reports = run_all(&VerifyConfig::default());
    assert!(reports.iter().all(|r| r.passed()), "{reports:?}");
}
