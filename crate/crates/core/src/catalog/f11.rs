/// The 5-coloring of `F_11²`: entry `[x][y]` is the color of `(x, y)`.
/// Transcribed as printed; its checksum is pinned in the tests.
pub const F11_TABLE: [[u8; 11]; 11] = [
    [3, 1, 0, 2, 1, 2, 3, 4, 2, 0, 1],
    [1, 2, 1, 0, 4, 1, 2, 3, 4, 3, 2],
    [2, 1, 2, 3, 0, 2, 1, 2, 3, 4, 0],
    [0, 2, 3, 1, 3, 4, 0, 4, 1, 3, 4],
    [4, 0, 1, 2, 1, 3, 4, 0, 2, 1, 2],
    [3, 4, 0, 1, 2, 1, 3, 4, 1, 2, 1],
    [1, 2, 3, 4, 0, 3, 1, 0, 4, 0, 2],
    [2, 1, 4, 3, 4, 0, 2, 3, 0, 3, 4],
    [4, 2, 3, 4, 3, 4, 0, 2, 3, 4, 0],
    [0, 4, 1, 2, 1, 0, 4, 0, 2, 3, 2],
    [4, 0, 4, 1, 2, 3, 0, 3, 0, 1, 3],
];

/// The table as a [`Coloring`](crate::chromatic::Coloring) of
/// `Γ(F_11²)` in lexicographic vertex order.
pub fn f11_coloring() -> crate::chromatic::Coloring {
    let colors = F11_TABLE
        .iter()
        .flat_map(|row| row.iter().map(|&c| c as usize))
        .collect();
    crate::chromatic::Coloring::new(colors, 5).expect("colors below 5")
}
