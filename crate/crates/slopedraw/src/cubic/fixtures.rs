//! Stored basic-slope drawings of small cubic graphs.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use crate::drawing::Drawing;
use crate::graph::Graph;
use crate::io::drawing_from_json;

pub struct Fixture {
    pub graph: Graph,
    pub drawing: Drawing,
}

const SOURCES: [(&str, &str); 7] = [
    ("petersen", include_str!("../../data/fixtures/petersen.json")),
    ("cube", include_str!("../../data/fixtures/cube.json")),
    ("wagner", include_str!("../../data/fixtures/wagner.json")),
    ("k33_drawn", include_str!("../../data/fixtures/k33_drawn.json")),
    ("heawood_drawn", include_str!("../../data/fixtures/heawood_drawn.json")),
    ("tietze_drawn", include_str!("../../data/fixtures/tietze_drawn.json")),
    ("petersen_drawn", include_str!("../../data/fixtures/petersen_drawn.json")),
];

fn table() -> &'static BTreeMap<&'static str, Fixture> {
    static TABLE: OnceLock<BTreeMap<&'static str, Fixture>> = OnceLock::new();
    TABLE.get_or_init(|| {
        SOURCES
            .iter()
            .map(|&(name, text)| {
                let value: serde_json::Value = serde_json::from_str(text).expect("bundled fixture is JSON");
                let (graph, drawing, _) = drawing_from_json(&value).expect("bundled fixture is a drawing");
                (name, Fixture { graph, drawing })
            })
            .collect()
    })
}

pub fn fixture_names() -> impl Iterator<Item = &'static str> {
    SOURCES.iter().map(|&(name, _)| name)
}

/// Panics on an unknown name.
pub fn fixture(name: &str) -> &'static Fixture {
    table().get(name).unwrap_or_else(|| panic!("no fixture named {name:?}"))
}
