//! Fact × leaf-activity impact matrix.

use aqm_core::{Direction, NodeId, QualityModel};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MatrixRow {
    /// `entity | attribute`
    pub fact: String,
    pub cells: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ImpactMatrix {
    pub columns: Vec<NodeId>,
    pub rows: Vec<MatrixRow>,
}

impl ImpactMatrix {
    pub fn build(model: &QualityModel) -> Self {
        let columns: Vec<NodeId> = model.leaf_activities().into_iter().map(|a| a.id.clone()).collect();
        let rows = model
            .facts
            .iter()
            .map(|fact| {
                let key = fact.key();
                let cells = columns
                    .iter()
                    .map(|col| {
                        model
                            .impacts
                            .iter()
                            .find(|i| i.fact == key && i.activity == *col)
                            .map(|i| match i.direction {
                                Direction::Positive => "+",
                                Direction::Negative => "-",
                            })
                            .unwrap_or("")
                            .to_owned()
                    })
                    .collect();
                MatrixRow {
                    fact: key.to_string(),
                    cells,
                }
            })
            .collect();
        ImpactMatrix { columns, rows }
    }

    pub fn cell(&self, fact: &str, activity: &str) -> Option<&str> {
        let col = self.columns.iter().position(|c| c.as_str() == activity)?;
        let row = self.rows.iter().find(|r| r.fact == fact)?;
        Some(&row.cells[col])
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::CRLF)
            .from_writer(Vec::new());
        let header = std::iter::once("fact").chain(self.columns.iter().map(NodeId::as_str));
        w.write_record(header).expect("writing to memory");
        for row in &self.rows {
            let record = std::iter::once(row.fact.as_str()).chain(row.cells.iter().map(String::as_str));
            w.write_record(record).expect("writing to memory");
        }
        let bytes = w.into_inner().expect("flushing to memory");
        String::from_utf8(bytes).expect("csv of UTF-8 fields is UTF-8")
    }
}

/// CSV text of the matrix: header row, then one row per fact.
pub fn export_matrix(model: &QualityModel) -> String {
    ImpactMatrix::build(model).to_csv()
}
