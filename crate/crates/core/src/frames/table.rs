//! Conjugacy classes of `Co₀` with a nonzero fixed subspace on `ℂΛ`, plus the
//! identity. `23A` and `23B` share a frame shape.

use super::{fixed_dim, to_cyclotomic, FrameError, FrameShape};
use std::sync::OnceLock;

const ROWS: &[(&str, &str, i64)] = &[
    ("1A", "1^24", 24),
    ("2A", "1^8 2^8", 16),
    ("-2A", "2^16 / 1^8", 8),
    ("2C", "2^12", 12),
    ("3B", "1^6 3^6", 12),
    ("3C", "3^9 / 1^3", 6),
    ("3D", "3^8", 8),
    ("-4A", "1^8 4^8 / 2^8", 8),
    ("4B", "4^8 / 2^4", 4),
    ("4C", "1^4 2^2 4^4", 10),
    ("-4C", "2^6 4^4 / 1^4", 6),
    ("4D", "2^4 4^4", 8),
    ("4F", "4^6", 6),
    ("5B", "1^4 5^4", 8),
    ("5C", "5^5 / 1^1", 4),
    ("6C", "1^4 2^1 6^5 / 3^4", 6),
    ("-6C", "2^5 3^4 6^1 / 1^4", 6),
    ("-6D", "1^5 3^1 6^4 / 2^4", 6),
    ("6E", "1^2 2^2 3^2 6^2", 8),
    ("-6E", "2^4 6^4 / 1^2 3^2", 4),
    ("6F", "3^3 6^3 / 1^1 2^1", 4),
    ("-6F", "1^1 6^6 / 2^2 3^3", 2),
    ("6G", "2^3 6^3", 6),
    ("6I", "6^4", 4),
    ("7B", "1^3 7^3", 6),
    ("8B", "2^4 8^4 / 4^4", 4),
    ("-8C", "1^4 8^4 / 2^2 4^2", 4),
    ("8D", "8^4 / 4^2", 2),
    ("8E", "1^2 2^1 4^1 8^2", 6),
    ("-8E", "2^3 4^1 8^2 / 1^2", 4),
    ("8F", "4^2 8^2", 4),
    ("9B", "9^3 / 3^1", 2),
    ("9C", "1^3 9^3 / 3^2", 4),
    ("10D", "1^2 2^1 10^3 / 5^2", 4),
    ("-10D", "2^3 5^2 10^1 / 1^2", 4),
    ("-10E", "1^3 5^1 10^2 / 2^2", 4),
    ("10F", "2^2 10^2", 4),
    ("11A", "1^2 11^2", 4),
    ("-12D", "2^1 3^3 12^3 / 1^1 4^1 6^3", 2),
    ("-12E", "1^2 3^2 4^2 12^2 / 2^2 6^2", 4),
    ("12G", "4^2 12^2 / 2^1 6^1", 2),
    ("12H", "2^3 6^1 12^2 / 1^1 3^1 4^2", 2),
    ("-12H", "1^1 2^2 3^1 12^2 / 4^2", 4),
    ("12I", "1^2 4^1 6^2 12^1 / 3^2", 4),
    ("-12I", "2^2 3^2 4^1 12^1 / 1^2", 4),
    ("12J", "2^1 4^1 6^1 12^1", 4),
    ("-12K", "1^3 12^3 / 2^1 3^1 4^1 6^1", 2),
    ("12M", "12^2", 2),
    ("14B", "1^1 2^1 7^1 14^1", 4),
    ("-14B", "2^2 14^2 / 1^1 7^1", 2),
    ("15D", "1^1 3^1 5^1 15^1", 4),
    ("15E", "1^2 15^2 / 3^1 5^1", 2),
    ("16A", "2^2 16^2 / 4^1 8^1", 2),
    ("-16B", "1^2 16^2 / 2^1 8^1", 2),
    ("-18B", "1^2 9^1 18^1 / 2^1 3^1", 2),
    ("18C", "1^1 2^1 18^2 / 6^1 9^1", 2),
    ("-18C", "2^2 9^1 18^1 / 1^1 6^1", 2),
    ("20B", "4^1 20^1", 2),
    ("20C", "1^1 2^1 10^1 20^1 / 4^1 5^1", 2),
    ("-20C", "2^2 5^1 20^1 / 1^1 4^1", 2),
    ("21C", "3^1 21^1", 2),
    ("22A", "2^1 22^1", 2),
    ("23A", "1^1 23^1", 2),
    ("23B", "1^1 23^1", 2),
    ("24E", "2^1 6^1 8^1 24^1 / 4^1 12^1", 2),
    ("24F", "1^1 4^1 6^1 24^1 / 3^1 8^1", 2),
    ("-24F", "2^1 3^1 4^1 24^1 / 1^1 8^1", 2),
    ("-28A", "1^1 4^1 7^1 28^1 / 2^1 14^1", 2),
    ("30D", "1^1 6^1 10^1 15^1 / 3^1 5^1", 2),
    ("-30D", "2^1 3^1 5^1 30^1 / 1^1 15^1", 2),
    ("-30E", "2^1 3^1 5^1 30^1 / 6^1 10^1", 2),
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassRow {
    pub name: &'static str,
    pub shape: FrameShape,
    pub fixed_dim: i64,
}

#[derive(Debug, Clone)]
pub struct ClassTable {
    rows: Vec<ClassRow>,
}

impl ClassTable {
    /// Parses and validates every row: degree 24 and non-negative cyclotomic
    /// multiplicities (both enforced by [`FrameShape`]) and the fixed-dimension column.
    fn load() -> Result<Self, String> {
        let mut rows = Vec::with_capacity(ROWS.len());
        for &(name, shape, dim) in ROWS {
            let shape: FrameShape = shape.parse().map_err(|e: FrameError| format!("{name}: {e}"))?;
            if fixed_dim(&shape) != dim || to_cyclotomic(&shape).multiplicity(1) as i64 != dim {
                return Err(format!("{name}: fixed dimension {dim} disagrees with {shape}"));
            }
            rows.push(ClassRow { name, shape, fixed_dim: dim });
        }
        Ok(ClassTable { rows })
    }

    pub fn rows(&self) -> &[ClassRow] {
        &self.rows
    }

    pub fn get(&self, name: &str) -> Result<&ClassRow, FrameError> {
        self.rows.iter().find(|r| r.name == name).ok_or_else(|| FrameError::UnknownClass(name.to_string()))
    }
}

pub fn class_table() -> &'static ClassTable {
    static TABLE: OnceLock<ClassTable> = OnceLock::new();
    TABLE.get_or_init(|| ClassTable::load().unwrap_or_else(|e| panic!("class table: {e}")))
}
