//! JSON lattice files: `{"rank": n, "gram": ["p/q", ...]}` with the Gram matrix row-major.

use super::{GramLattice, LatticeError};
use crate::arith::{format_rational, parse_rational};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeFile {
    pub rank: usize,
    pub gram: Vec<String>,
}

impl LatticeFile {
    pub fn from_lattice(l: &GramLattice) -> Self {
        LatticeFile { rank: l.rank(), gram: l.gram().iter().flatten().map(format_rational).collect() }
    }

    pub fn to_lattice(&self) -> Result<GramLattice, LatticeError> {
        let n = self.rank;
        if self.gram.len() != n * n {
            return Err(LatticeError::Parse(format!("expected {} entries, found {}", n * n, self.gram.len())));
        }
        let mut entries = Vec::with_capacity(n * n);
        for s in &self.gram {
            entries.push(parse_rational(s).map_err(|e| LatticeError::Parse(e.to_string()))?);
        }
        let rows = entries.chunks(n.max(1)).map(|c| c.to_vec()).take(n).collect();
        GramLattice::new(rows)
    }
}

pub fn write_lattice(l: &GramLattice) -> String {
    serde_json::to_string_pretty(&LatticeFile::from_lattice(l)).expect("serializable") + "\n"
}

pub fn read_lattice(text: &str) -> Result<GramLattice, LatticeError> {
    let f: LatticeFile = serde_json::from_str(text).map_err(|e| LatticeError::Parse(e.to_string()))?;
    f.to_lattice()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::qf;

    #[test]
    fn round_trip_is_bit_exact() {
        let l = GramLattice::new(vec![vec![qf(7, 3), qf(-1, 2)], vec![qf(-1, 2), qf(4, 1)]]).unwrap();
        let text = write_lattice(&l);
        let back = read_lattice(&text).unwrap();
        assert_eq!(back, l);
        assert_eq!(write_lattice(&back), text);
        assert!(text.contains("\"7/3\""));
    }

    #[test]
    fn malformed_files() {
        assert!(read_lattice(r#"{"rank": 2, "gram": ["1","0","0"]}"#).is_err());
        assert!(read_lattice(r#"{"rank": 1, "gram": ["1/0"]}"#).is_err());
        assert!(read_lattice(r#"{"rank": 2, "gram": ["1","2","3","1"]}"#).is_err());
        assert_eq!(read_lattice(r#"{"rank": 0, "gram": []}"#).unwrap().rank(), 0);
    }
}
