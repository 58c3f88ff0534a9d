//! Documents written by `aqm init`.

use clap::ValueEnum;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Template {
    InstrumentCluster,
    Maintainability,
}

impl Template {
    /// File name and contents of the model and its requirements skeleton.
    pub fn files(self) -> [(&'static str, &'static str); 2] {
        match self {
            Template::InstrumentCluster => [
                (
                    "instrument_cluster.model.json",
                    include_str!("../fixtures/instrument_cluster.model.json"),
                ),
                (
                    "instrument_cluster.req.json",
                    include_str!("../fixtures/instrument_cluster.req.json"),
                ),
            ],
            Template::Maintainability => [
                (
                    "maintainability.model.json",
                    include_str!("../fixtures/maintainability.model.json"),
                ),
                (
                    "maintainability.req.json",
                    include_str!("../fixtures/maintainability.req.json"),
                ),
            ],
        }
    }
}
