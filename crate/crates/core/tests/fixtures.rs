use hnfield::catalog::{fixture, FIXTURE_NAMES};

// Changing a fixture's content changes its digest; update deliberately.
const DIGESTS: [(&str, &str); 9] = [
    (
        "triangle_sqrt3",
        "f9047aef39a8d16664ac6fb08145521895ebf72b39e4a50db915ebf458cbbca1",
    ),
    (
        "moser_spindle",
        "49f97e531d40c34b622bd3e6332a975ec789aca4f455d56328d021492532e3ef",
    ),
    (
        "c9_sqrt7",
        "e2a354cc238b06c35f625a8a2ba3524ec1d9c9545716f8e440831ffd8289dc04",
    ),
    (
        "c5_sqrt_neg5",
        "30d970c7119cf3077b50f775a3b0f984468e6a4424102ffb1bbeff4bb123605f",
    ),
    (
        "lorentz_cycle_5",
        "ad94f2382d7b923c81cce4c63e0c21e45a9dfe246c629d0099cf02507e05f718",
    ),
    (
        "lorentz_four_cycle",
        "533d57d4744028fd6767eaf9c4295f452b2d9afe99ce19d5481fce5a34bcbf41",
    ),
    (
        "f11_table",
        "ca1082429bac3d1807602116cb0c9eb8f0e168d28cdfa678c92edc48deb46cc5",
    ),
    (
        "sqrt2_quotient",
        "ae33b072e24473fea36e75b9fab9441a6865d1b5969d2e01f60daf353622957e",
    ),
    (
        "unit_identity",
        "b925a0f873afd7ad4acc0d84c8fb80a0c4c17e7344cff577224ed24b909a8d3e",
    ),
];

#[test]
fn digests_are_pinned() {
    for (name, want) in DIGESTS {
        assert_eq!(fixture(name).unwrap().sha256(), want, "{name}");
    }
}

#[test]
fn every_fixture_is_pinned() {
    for name in FIXTURE_NAMES {
        let name = name.replace('K', "5");
        assert!(DIGESTS.iter().any(|(n, _)| *n == name), "{name}");
    }
}

#[test]
fn digests_are_stable_across_builds() {
    let a = fixture("moser_spindle").unwrap().canonical();
    let b = fixture("moser_spindle").unwrap().canonical();
    assert_eq!(a, b);
    assert!(a.starts_with("fixture moser_spindle\nfield "));
}
