//! Every asserted closed form, perturbed, must be caught.

use tiltcert::certify::suite::{verify_lemma_computation_with, verify_skyscraper_condition_with};
use tiltcert::certify::{Status, VerifyConfig};
use tiltcert::chern::ObjectLabel;
use tiltcert::kernel::{rat, BivariatePoly};

#[test]
fn perturbing_any_closed_form_fails() {
    let n = VerifyConfig::default().forms.asserted_mut().len();
    assert_eq!(n, 16 + 3 * 8 + 1);
    for k in 0..n {
        for bump in [
            BivariatePoly::constant(rat(1, 7)),
            BivariatePoly::monomial(rat(-1, 3), 1, 1),
        ] {
            let mut config = VerifyConfig::default();
            {
                let mut forms = config.forms.asserted_mut();
                *forms[k] = &*forms[k] + &bump;
            }
            let lemma = verify_lemma_computation_with(&config);
            let status = if k + 1 == n {
                verify_skyscraper_condition_with(&config).status
            } else {
                lemma.status
            };
            assert_eq!(status, Status::Failed, "mutation {k} not caught");
        }
    }
}

#[test]
fn perturbing_a_catalog_character_fails() {
    for label in [
        ObjectLabel::Line(1),
        ObjectLabel::Line(0),
        ObjectLabel::Line(-1),
        ObjectLabel::SpinorTwisted,
    ] {
        for component in 0..4 {
            let mut config = VerifyConfig::default();
            let obj = config.catalog.iter_mut().find(|o| o.label == label).unwrap();
            let c = match component {
                0 => &mut obj.character.ch0,
                1 => &mut obj.character.ch1,
                2 => &mut obj.character.ch2,
                _ => &mut obj.character.ch3,
            };
            *c += rat(1, 5);
            let r = verify_lemma_computation_with(&config);
            assert_eq!(r.status, Status::Failed, "{label} component {component}");
        }
    }
}
