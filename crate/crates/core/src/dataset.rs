//! Bundled fixtures: the tabulated examples and the worked ring and group records.

use crate::graded_ring::{RingError, RingPresentation};
use crate::input::{GroupInputRecord, LoadedGroup, ParseError, RingInputRecord};

/// One row of the table of Gorenstein shifts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ShiftTableRow {
    pub name: &'static str,
    pub prime_label: &'static str,
    pub group_label: &'static str,
    pub generator_degrees: &'static [u32],
    pub relation_degree: Option<u32>,
    pub expected_shift_a: i64,
}

impl ShiftTableRow {
    /// The presentation induced by the degree columns alone.
    pub fn presentation(&self) -> Result<RingPresentation, RingError> {
        let relations: Vec<u32> = self.relation_degree.into_iter().collect();
        RingPresentation::from_degrees(self.name, self.generator_degrees, &relations)
    }
}

const fn row(
    name: &'static str,
    prime_label: &'static str,
    group_label: &'static str,
    generator_degrees: &'static [u32],
    relation_degree: Option<u32>,
    expected_shift_a: i64,
) -> ShiftTableRow {
    ShiftTableRow {
        name,
        prime_label,
        group_label,
        generator_degrees,
        relation_degree,
        expected_shift_a,
    }
}

pub const GORENSTEIN_TABLE: [ShiftTableRow; 12] = [
    row("tmf(3)", "2", "BT_48", &[2, 2], None, -6),
    row("tmf_1(3)", "2", "C_2", &[2, 6], None, -10),
    row("tmf(2)", "3", "Σ_3", &[4, 4], None, -10),
    row("tmf_0(2)", "3", "", &[4, 8], None, -14),
    row("taf_δ6", "5", "two C_2", &[8, 12, 24], Some(48), 2),
    row("taf_δ6^ALα", "5", "", &[8, 24, 24], Some(48), -10),
    row("taf_δ6^ALβ", "5", "", &[8, 12], None, -22),
    row("taf_δ6", "±1 mod 24", "C_2×C_2", &[8, 12, 24], Some(48), 2),
    row("taf_δ6^ALαβ", "±1 mod 24", "", &[16, 24, 44], Some(88), 2),
    row("taf_δ14", "3", "", &[4, 16], None, -22),
    row("taf_δ10,√2", "3", "C_3", &[4, 4, 12], Some(24), 2),
    row("taf_δ15", "2", "C_8×C_2", &[2, 6, 12], Some(24), 2),
];

/// Bundled ring records, by key.
pub const RINGS: &[(&str, &str)] = &[
    ("ku", include_str!("../fixtures/ku.ring.toml")),
    ("tmf2", include_str!("../fixtures/tmf2.ring.toml")),
    ("taf_d6", include_str!("../fixtures/taf_d6.ring.toml")),
    (
        "taf_d6_al_alpha",
        include_str!("../fixtures/taf_d6_al_alpha.ring.toml"),
    ),
    (
        "taf_d6_al_beta",
        include_str!("../fixtures/taf_d6_al_beta.ring.toml"),
    ),
    (
        "taf_d6_al_alphabeta",
        include_str!("../fixtures/taf_d6_al_alphabeta.ring.toml"),
    ),
    ("taf_d14", include_str!("../fixtures/taf_d14.ring.toml")),
    (
        "taf_d10_sqrt2",
        include_str!("../fixtures/taf_d10_sqrt2.ring.toml"),
    ),
    ("taf_d15", include_str!("../fixtures/taf_d15.ring.toml")),
];

/// Bundled group records, by key, with the ring each acts on.
pub const GROUPS: &[(&str, &str, &str)] = &[
    ("ku_c2", "ku", include_str!("../fixtures/ku_c2.group.toml")),
    (
        "tmf2_s3",
        "tmf2",
        include_str!("../fixtures/tmf2_s3.group.toml"),
    ),
    (
        "taf_d6_alpha",
        "taf_d6",
        include_str!("../fixtures/taf_d6_alpha.group.toml"),
    ),
    (
        "taf_d6_beta",
        "taf_d6",
        include_str!("../fixtures/taf_d6_beta.group.toml"),
    ),
    (
        "taf_d6_alphabeta",
        "taf_d6",
        include_str!("../fixtures/taf_d6_alphabeta.group.toml"),
    ),
];

pub fn ring_text(key: &str) -> Option<&'static str> {
    RINGS.iter().find(|(k, _)| *k == key).map(|(_, t)| *t)
}

pub fn group_text(key: &str) -> Option<&'static str> {
    GROUPS
        .iter()
        .find(|(k, _, _)| *k == key)
        .map(|(_, _, t)| *t)
}

pub fn ring_record(key: &str) -> Option<RingInputRecord> {
    ring_text(key).map(|t| RingInputRecord::parse(t).expect("bundled ring parses"))
}

/// A bundled ring. Panics on an unknown key.
pub fn ring(key: &str) -> RingPresentation {
    ring_record(key)
        .unwrap_or_else(|| panic!("no bundled ring {key}"))
        .to_presentation()
        .expect("bundled ring is valid")
}

pub fn group_record(key: &str) -> Result<GroupInputRecord, ParseError> {
    GroupInputRecord::parse(group_text(key).unwrap_or_else(|| panic!("no bundled group {key}")))
}

/// A bundled group, enumerated. Panics on an unknown key.
pub fn group(key: &str) -> LoadedGroup {
    group_record(key)
        .expect("bundled group parses")
        .load(crate::invariants::DEFAULT_ORDER_CAP)
        .expect("bundled group is valid")
}
