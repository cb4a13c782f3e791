//! Frozen parameter specs shared by the identity suites.
//!
//! The list is shipped as `fixtures/specs.json`: every spec of length at most
//! two over the offsets `{0, 1, -1, 2, -2, 1/2}` with multiplicities in
//! `{1, 2}`, plus twenty sampled specs each of lengths three and four.

use std::sync::OnceLock;

use crate::triangles::ParameterSpec;

const SPECS_JSON: &str = include_str!("../../fixtures/specs.json");

pub fn specs() -> &'static [ParameterSpec] {
    static SPECS: OnceLock<Vec<ParameterSpec>> = OnceLock::new();
    SPECS.get_or_init(|| serde_json::from_str(SPECS_JSON).expect("fixture specs parse"))
}

/// Fixture specs with every multiplicity equal to one.
pub fn simple_specs() -> impl Iterator<Item = &'static ParameterSpec> {
    specs().iter().filter(|s| s.is_simple())
}
