use super::*;

#[test]
fn ids_are_unique() {
    let mut ids: Vec<&str> = registry().iter().map(|c| c.id).collect();
    ids.sort_unstable();
    let before = ids.len();
    ids.dedup();
    assert_eq!(before, ids.len());
}

#[test]
fn every_check_passes_on_its_fast_grid() {
    let results = run_suite(true, &GridOverrides::default(), false).unwrap();
    let failed: Vec<String> = results
        .iter()
        .filter(|r| !r.passed())
        .map(|r| format!("{} {} {:?}", r.id, r.params, r.status))
        .collect();
    assert!(failed.is_empty(), "{failed:#?}");
}

#[test]
fn unknown_ids_are_rejected() {
    assert!(matches!(lookup("nope"), Err(SuiteError::UnknownId(_))));
}
