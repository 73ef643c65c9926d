//! Rank-two abelian subgroups of `Co₀` fixing at least a 6-dimensional
//! subspace of `ℂΛ`, with the classes of their elements. Numbered (1)–(17).

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConwayRow {
    pub id: u32,
    /// dimension of the common fixed subspace
    pub dim: u32,
    /// `ℤ_a × ℤ_b`, `a | b`
    pub structure: (u32, u32),
    /// number of conjugacy classes of such subgroups
    pub count: u32,
    pub classes: &'static [(&'static str, usize)],
}

pub const CONWAY_ROWS: &[ConwayRow] = &[
    ConwayRow { id: 1, dim: 6, structure: (2, 2), count: 1, classes: &[("1A", 1), ("2A", 1), ("-2A", 1), ("2C", 1)] },
    ConwayRow { id: 2, dim: 6, structure: (2, 2), count: 3, classes: &[("1A", 1), ("2C", 3)] },
    ConwayRow { id: 3, dim: 6, structure: (2, 4), count: 1, classes: &[("1A", 1), ("2A", 2), ("-2A", 1), ("4C", 4)] },
    ConwayRow { id: 4, dim: 6, structure: (2, 4), count: 2, classes: &[("1A", 1), ("2A", 1), ("2C", 2), ("4C", 4)] },
    ConwayRow { id: 5, dim: 6, structure: (2, 4), count: 1, classes: &[("1A", 1), ("2A", 2), ("2C", 1), ("4C", 2), ("4D", 2)] },
    ConwayRow { id: 6, dim: 6, structure: (2, 4), count: 1, classes: &[("1A", 1), ("2A", 3), ("4C", 2), ("-4C", 2)] },
    ConwayRow { id: 7, dim: 6, structure: (2, 4), count: 1, classes: &[("1A", 1), ("2A", 3), ("4D", 4)] },
    ConwayRow { id: 8, dim: 6, structure: (3, 3), count: 1, classes: &[("1A", 1), ("3B", 6), ("3C", 2)] },
    ConwayRow { id: 9, dim: 6, structure: (2, 6), count: 2, classes: &[("1A", 1), ("2A", 3), ("3B", 2), ("6E", 6)] },
    ConwayRow { id: 10, dim: 6, structure: (4, 4), count: 2, classes: &[("1A", 1), ("2A", 3), ("4C", 12)] },
    ConwayRow { id: 11, dim: 8, structure: (2, 2), count: 2, classes: &[("1A", 1), ("2A", 1), ("2C", 2)] },
    ConwayRow { id: 12, dim: 8, structure: (2, 2), count: 1, classes: &[("1A", 1), ("2A", 2), ("-2A", 1)] },
    ConwayRow { id: 13, dim: 8, structure: (2, 4), count: 1, classes: &[("1A", 1), ("2A", 3), ("4C", 4)] },
    ConwayRow { id: 14, dim: 8, structure: (2, 4), count: 1, classes: &[("1A", 1), ("2A", 2), ("-2A", 1), ("-4A", 4)] },
    ConwayRow { id: 15, dim: 8, structure: (3, 3), count: 1, classes: &[("1A", 1), ("3B", 8)] },
    ConwayRow { id: 16, dim: 10, structure: (2, 2), count: 1, classes: &[("1A", 1), ("2A", 2), ("2C", 1)] },
    ConwayRow { id: 17, dim: 12, structure: (2, 2), count: 1, classes: &[("1A", 1), ("2A", 3)] },
];

/// Structures fixing exactly a 4-dimensional subspace, with class counts only.
pub const DIM4_CENSUS: &[((u32, u32), u32)] = &[
    ((2, 2), 3),
    ((2, 4), 18),
    ((3, 3), 2),
    ((2, 6), 8),
    ((4, 4), 10),
    ((2, 8), 8),
    ((3, 6), 6),
    ((2, 12), 1),
    ((5, 5), 1),
    ((3, 9), 1),
];

pub fn conway_row(id: u32) -> Option<&'static ConwayRow> {
    CONWAY_ROWS.iter().find(|r| r.id == id)
}
