use hnfield::catalog::{claims_table, claims_to_json, verify_paper, ClaimStatus, VerifyOptions};

#[test]
fn claim_suite_statuses() {
    let opts = VerifyOptions {
        samples: 2_000,
        ..VerifyOptions::default()
    };
    let claims = verify_paper(&opts);
    print!("{}", claims_table(&claims));
    let ids: Vec<&str> = claims.iter().map(|c| c.id).collect();
    let mut sorted = ids.clone();
    sorted.sort_unstable();
    assert_eq!(ids, sorted);
    for c in &claims {
        let expected = if c.id == "sqrt2_published_coloring" {
            ClaimStatus::Fail
        } else {
            ClaimStatus::Pass
        };
        assert_eq!(c.status, expected, "{}: {}", c.id, c.evidence);
    }
}

#[test]
fn report_is_deterministic() {
    let opts = VerifyOptions {
        samples: 200,
        ..VerifyOptions::default()
    };
    let a = claims_to_json(&verify_paper(&opts));
    let b = claims_to_json(&verify_paper(&opts));
    assert_eq!(a, b);
    assert!(a.contains("\"status\": \"PASS\""));
}
