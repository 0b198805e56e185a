//! Geometric views of a diagram: the staircase coloring and the symmetric
//! `n×n` grid.
//!
//! Grid coordinates are `(row, column)` with rows counted from the bottom
//! and columns from the left, both 1-based. The staircase occupies the
//! lower-left region `row + column ≤ n + 1`; the rest of the grid is filled
//! by the mirror `μ(r, c) = (n+1−c, n+1−r)`, which fixes exactly the
//! anti-diagonal cells `(r, n+1−r)`.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::Error;
use crate::word::{Diagram, ReducedWord};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Color {
    Black,
    White,
}

impl Color {
    pub fn is_black(self) -> bool {
        self == Color::Black
    }

    /// Single-character rendering: `#` for black, `.` for white.
    pub fn glyph(self) -> char {
        match self {
            Color::Black => '#',
            Color::White => '.',
        }
    }
}

/// Where a word position lives in the two pictures.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CellRef {
    /// Tableau row (row 1 is the shortest, with a single cell).
    pub tableau_row: usize,
    /// Column within the tableau row, `1..=tableau_row`.
    pub tableau_col: usize,
    /// Grid row, counted from the bottom.
    pub grid_row: usize,
    /// Grid column, counted from the left.
    pub grid_col: usize,
    /// The simple-reflection index written in that box.
    pub letter: usize,
}

/// Maps word position `k ∈ [t]` to its tableau cell and grid cell. Row `r`
/// of the tableau holds positions `r(r−1)/2 + 1 ..= r(r+1)/2`.
pub fn position_to_cell(n: usize, k: usize) -> Result<CellRef, Error> {
    let t = n * (n + 1) / 2;
    if k < 1 || k > t {
        return Err(Error::PositionOutOfRange { position: k, len: t });
    }
    let mut row = 1;
    while row * (row + 1) / 2 < k {
        row += 1;
    }
    let col = k - row * (row - 1) / 2;
    Ok(CellRef {
        tableau_row: row,
        tableau_col: col,
        grid_row: n + 1 - row,
        grid_col: col,
        letter: n - row + col,
    })
}

/// Black/white filling of the staircase tableau; cell of position `k` is
/// stored at index `k − 1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StaircaseColoring {
    n: usize,
    cells: Vec<Color>,
}

impl StaircaseColoring {
    /// Colors the staircase from a diagram: black exactly at the member
    /// positions.
    pub fn from_diagram(word: &ReducedWord, d: &Diagram) -> Result<Self, Error> {
        if word.rank() != d.rank() {
            return Err(Error::RankMismatch { left: word.rank(), right: d.rank() });
        }
        let cells = (1..=word.len())
            .map(|k| if d.contains(k) { Color::Black } else { Color::White })
            .collect();
        Ok(StaircaseColoring { n: word.rank(), cells })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// Color of tableau cell `(row, col)`, `1 ≤ col ≤ row ≤ n`.
    pub fn color(&self, row: usize, col: usize) -> Color {
        debug_assert!(col >= 1 && col <= row && row <= self.n);
        self.cells[row * (row - 1) / 2 + col - 1]
    }

    /// The colored-tableau criterion: a coloring is Cauchon iff
    /// (1) a black box lying below a white box of the same column has only
    /// black boxes to its left, and (2) a black diagonal box has only black
    /// boxes to its left.
    pub fn is_cauchon_lw(&self) -> bool {
        for row in 1..=self.n {
            for col in 1..=row {
                if !self.color(row, col).is_black() {
                    continue;
                }
                let row_must_be_black = if col == row {
                    // diagonal box
                    true
                } else {
                    // any white box above it in the same column?
                    (col..row).any(|above| !self.color(above, col).is_black())
                };
                if row_must_be_black && (1..col).any(|m| !self.color(row, m).is_black()) {
                    return false;
                }
            }
        }
        true
    }
}

/// The mirror image of a grid cell.
fn mirror(n: usize, row: usize, col: usize) -> (usize, usize) {
    (n + 1 - col, n + 1 - row)
}

/// An `n×n` black/white grid, mirror symmetric by construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymmetricGrid {
    n: usize,
    // row-major from the bottom row up
    colors: Vec<Color>,
}

impl SymmetricGrid {
    /// Embeds the staircase into the lower-left region and reflects it into
    /// the upper-right one.
    pub fn from_staircase(s: &StaircaseColoring) -> Self {
        let n = s.rank();
        let mut colors = alloc::vec![Color::White; n * n];
        for row in 1..=n {
            for col in 1..=n {
                let color = if row + col <= n + 1 {
                    // grid (row, col) embeds tableau cell (n+1−row, col)
                    s.color(n + 1 - row, col)
                } else {
                    let (mr, mc) = mirror(n, row, col);
                    s.color(n + 1 - mr, mc)
                };
                colors[(row - 1) * n + (col - 1)] = color;
            }
        }
        SymmetricGrid { n, colors }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// Color at grid `(row, col)`, rows from the bottom, 1-based.
    pub fn color(&self, row: usize, col: usize) -> Color {
        debug_assert!(row >= 1 && row <= self.n && col >= 1 && col <= self.n);
        self.colors[(row - 1) * self.n + (col - 1)]
    }

    pub fn is_mirror_symmetric(&self) -> bool {
        for row in 1..=self.n {
            for col in 1..=self.n {
                let (mr, mc) = mirror(self.n, row, col);
                if self.color(row, col) != self.color(mr, mc) {
                    return false;
                }
            }
        }
        true
    }

    /// Extracts the staircase restriction (the lower-left region).
    pub fn staircase(&self) -> StaircaseColoring {
        let t = self.n * (self.n + 1) / 2;
        let cells = (1..=t)
            .map(|k| {
                let cell = position_to_cell(self.n, k).expect("position in range");
                self.color(cell.grid_row, cell.grid_col)
            })
            .collect();
        StaircaseColoring { n: self.n, cells }
    }

    /// Rows rendered top-first with `#`/`.` glyphs.
    pub fn ascii_rows(&self) -> Vec<String> {
        (1..=self.n)
            .rev()
            .map(|row| (1..=self.n).map(|col| self.color(row, col).glyph()).collect())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::{is_cauchon, Diagram, ReducedWord};
    use alloc::vec;

    fn grid_blacks(g: &SymmetricGrid) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for row in 1..=g.size() {
            for col in 1..=g.size() {
                if g.color(row, col).is_black() {
                    out.push((row, col));
                }
            }
        }
        out
    }

    #[test]
    fn position_examples() {
        let c = position_to_cell(4, 1).unwrap();
        assert_eq!((c.tableau_row, c.tableau_col), (1, 1));
        assert_eq!((c.grid_row, c.grid_col), (4, 1));
        assert_eq!(c.letter, 4);

        let c = position_to_cell(2, 3).unwrap();
        assert_eq!((c.tableau_row, c.tableau_col), (2, 2));
        assert_eq!((c.grid_row, c.grid_col), (1, 2));
        assert_eq!(c.letter, 2);

        for n in 1..=6 {
            let t = n * (n + 1) / 2;
            let c = position_to_cell(n, t).unwrap();
            assert_eq!((c.tableau_row, c.tableau_col), (n, n));
            assert_eq!((c.grid_row, c.grid_col), (1, n));
            assert_eq!(c.letter, n);
        }

        assert!(position_to_cell(2, 0).is_err());
        assert!(position_to_cell(2, 4).is_err());
    }

    #[test]
    fn letters_match_word() {
        for n in 1..=6 {
            let word = ReducedWord::staircase(n).unwrap();
            for k in 1..=word.len() {
                assert_eq!(position_to_cell(n, k).unwrap().letter, word.letters()[k - 1]);
            }
        }
    }

    #[test]
    fn lw_examples() {
        let word = ReducedWord::staircase(2).unwrap();
        let all_white =
            StaircaseColoring::from_diagram(&word, &Diagram::empty(2).unwrap()).unwrap();
        assert!(all_white.is_cauchon_lw());

        // black at tableau (1,1) only: position 1
        let d = Diagram::from_positions(2, &[1]).unwrap();
        let s = StaircaseColoring::from_diagram(&word, &d).unwrap();
        assert!(s.is_cauchon_lw());

        // black at tableau (2,2) only: position 3, a diagonal box with a
        // white box on its left
        let d = Diagram::from_positions(2, &[3]).unwrap();
        let s = StaircaseColoring::from_diagram(&word, &d).unwrap();
        assert!(!s.is_cauchon_lw());
    }

    #[test]
    fn lw_matches_scan_exhaustively() {
        for n in 1..=4 {
            let word = ReducedWord::staircase(n).unwrap();
            for bits in 0..1u128 << word.len() {
                let d = Diagram::new(n, bits).unwrap();
                let s = StaircaseColoring::from_diagram(&word, &d).unwrap();
                assert_eq!(
                    s.is_cauchon_lw(),
                    is_cauchon(&word, &d).unwrap(),
                    "n = {n}, bits = {bits:b}"
                );
            }
        }
    }

    #[test]
    fn staircase_from_diagram() {
        let word = ReducedWord::staircase(2).unwrap();
        let d = Diagram::from_positions(2, &[2]).unwrap();
        let s = StaircaseColoring::from_diagram(&word, &d).unwrap();
        assert!(s.color(2, 1).is_black());
        assert!(!s.color(1, 1).is_black());
        assert!(!s.color(2, 2).is_black());
        let bad = Diagram::empty(3).unwrap();
        assert!(StaircaseColoring::from_diagram(&word, &bad).is_err());
    }

    #[test]
    fn symmetric_grid_examples() {
        let word = ReducedWord::staircase(2).unwrap();
        let full = Diagram::full(2).unwrap();
        let g = SymmetricGrid::from_staircase(
            &StaircaseColoring::from_diagram(&word, &full).unwrap(),
        );
        assert_eq!(grid_blacks(&g).len(), 4);

        // black at tableau (2,1) = position 2 ↦ grid (1,1), mirror (2,2)
        let d = Diagram::from_positions(2, &[2]).unwrap();
        let g = SymmetricGrid::from_staircase(
            &StaircaseColoring::from_diagram(&word, &d).unwrap(),
        );
        assert_eq!(grid_blacks(&g), vec![(1, 1), (2, 2)]);
    }

    /// Second pair of pictured examples: staircase blacks at grid cells
    /// (3,1), (3,2), (2,2) extend to grid blacks {(3,1),(3,2),(2,2),(4,2),(3,3)}.
    #[test]
    fn symmetric_grid_pictured_example() {
        let word = ReducedWord::staircase(4).unwrap();
        // tableau cells (2,1), (2,2), (3,2) are positions 2, 3, 5
        let d = Diagram::from_positions(4, &[2, 3, 5]).unwrap();
        let g = SymmetricGrid::from_staircase(
            &StaircaseColoring::from_diagram(&word, &d).unwrap(),
        );
        assert_eq!(grid_blacks(&g), vec![(2, 2), (3, 1), (3, 2), (3, 3), (4, 2)]);
        assert!(g.is_mirror_symmetric());
    }

    #[test]
    fn grid_roundtrip_is_identity() {
        let word = ReducedWord::staircase(3).unwrap();
        for bits in 0..1u128 << word.len() {
            let d = Diagram::new(3, bits).unwrap();
            let s = StaircaseColoring::from_diagram(&word, &d).unwrap();
            let g = SymmetricGrid::from_staircase(&s);
            assert!(g.is_mirror_symmetric());
            assert_eq!(g.staircase(), s);
            assert_eq!(SymmetricGrid::from_staircase(&g.staircase()), g);
        }
    }

    #[test]
    fn ascii_rendering() {
        let word = ReducedWord::staircase(2).unwrap();
        let d = Diagram::from_positions(2, &[2]).unwrap();
        let g = SymmetricGrid::from_staircase(
            &StaircaseColoring::from_diagram(&word, &d).unwrap(),
        );
        assert_eq!(g.ascii_rows(), vec![String::from(".#"), String::from("#.")]);
    }
}
