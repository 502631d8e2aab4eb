//! The structured output record, one flat JSON object per run.

use serde::Serialize;
use serde_json::{Map, Value};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Record {
    pub kind: String,
    pub params: Map<String, Value>,
    pub rows: Vec<Vec<u32>>,
    /// `None` when no verification was requested.
    pub verified: Option<bool>,
}

impl Record {
    pub fn new(kind: &str) -> Self {
        Record {
            kind: kind.to_string(),
            params: Map::new(),
            rows: Vec::new(),
            verified: None,
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    pub fn rows(mut self, rows: Vec<Vec<u32>>) -> Self {
        self.rows = rows;
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("records serialize")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flat_record() {
        let r = Record::new("perm").param("n", 3).rows(vec![vec![5, 6, 4, 1, 3, 2]]);
        assert_eq!(
            r.to_json(),
            r#"{"kind":"perm","params":{"n":3},"rows":[[5,6,4,1,3,2]],"verified":null}"#
        );
    }
}
