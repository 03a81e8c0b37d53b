//! Suite-level runs through the public registry API.

use catdet::identity_suite::{lookup, registry, run_suite, verify_range, Grid, GridOverrides, SuiteError};

#[test]
fn fast_suite_passes_everywhere() {
    let results = run_suite(true, &GridOverrides::default(), false).unwrap();
    assert!(!results.is_empty());
    let failed: Vec<_> = results.iter().filter(|r| !r.passed()).map(|r| format!("{} {}", r.id, r.params)).collect();
    assert!(failed.is_empty(), "{failed:?}");
    for check in registry() {
        assert!(results.iter().any(|r| r.id == check.id), "{} produced no results", check.id);
    }
}

#[test]
fn overrides_set_the_upper_end_of_a_range() {
    let overrides = GridOverrides { n_max: Some(5), ..GridOverrides::default() };
    let grid = overrides.apply(lookup("eq1").unwrap(), true).unwrap();
    let results = verify_range("eq1", &grid, false).unwrap();
    assert_eq!(results.len(), 6);
    assert!(results.iter().all(|r| r.passed()));
}

#[test]
fn explicit_grids_are_verified_point_by_point() {
    let grid = Grid::new().range("n", 0, 6).range("k", 1, 3);
    let results = verify_range("eq54", &grid, false).unwrap();
    assert_eq!(results.len(), 21);
    assert!(results.iter().all(|r| r.passed()));
}

#[test]
fn missing_parameters_and_unknown_ids_are_errors() {
    assert!(matches!(verify_range("nope", &Grid::new(), false), Err(SuiteError::UnknownId(_))));
    assert!(verify_range("eq54", &Grid::new().range("n", 0, 2), false).is_err());
}
