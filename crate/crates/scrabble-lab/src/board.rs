//! Board geometry, premium-square layouts, and the tile bag.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

/// Letter used for blank tiles in racks, bags, and move notation.
pub const BLANK_LETTER: u8 = b'?';

/// Premium kind of a board square.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Premium {
    None,
    DoubleLetter,
    TripleLetter,
    DoubleWord,
    TripleWord,
}

impl Premium {
    /// Multiplier applied to the letter placed on this square.
    pub fn letter_multiplier(self) -> u32 {
        match self {
            Premium::DoubleLetter => 2,
            Premium::TripleLetter => 3,
            _ => 1,
        }
    }

    /// Multiplier applied to every word covering this square.
    pub fn word_multiplier(self) -> u32 {
        match self {
            Premium::DoubleWord => 2,
            Premium::TripleWord => 3,
            _ => 1,
        }
    }

    fn token(self) -> &'static str {
        match self {
            Premium::None => "..",
            Premium::DoubleLetter => "DL",
            Premium::TripleLetter => "TL",
            Premium::DoubleWord => "DW",
            Premium::TripleWord => "TW",
        }
    }

    fn from_token(tok: &str) -> Option<Premium> {
        match tok {
            ".." => Some(Premium::None),
            "DL" => Some(Premium::DoubleLetter),
            "TL" => Some(Premium::TripleLetter),
            "DW" => Some(Premium::DoubleWord),
            "TW" => Some(Premium::TripleWord),
            _ => None,
        }
    }
}

/// The two board variants used by the experiments.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoardVariant {
    Standard15,
    Compact13,
}

impl BoardVariant {
    pub fn size(self) -> usize {
        match self {
            BoardVariant::Standard15 => 15,
            BoardVariant::Compact13 => 13,
        }
    }

    pub fn layout(self) -> BoardLayout {
        match self {
            BoardVariant::Standard15 => standard_layout(),
            BoardVariant::Compact13 => layout_13x13(),
        }
    }

    /// Label used in CSV files and reports.
    pub fn label(self) -> &'static str {
        match self {
            BoardVariant::Standard15 => "15x15",
            BoardVariant::Compact13 => "13x13",
        }
    }
}

impl std::str::FromStr for BoardVariant {
    type Err = BoardError;

    fn from_str(s: &str) -> Result<Self, BoardError> {
        match s.trim() {
            "15" | "15x15" => Ok(BoardVariant::Standard15),
            "13" | "13x13" => Ok(BoardVariant::Compact13),
            other => Err(BoardError::UnknownVariant(other.to_string())),
        }
    }
}

#[derive(Debug, Error)]
pub enum BoardError {
    #[error("unknown board variant {0:?} (expected 15 or 13)")]
    UnknownVariant(String),
    #[error("bad layout grid: {0}")]
    BadLayout(String),
    #[error("bad tile distribution line {line}: {reason}")]
    BadTileLine { line: usize, reason: String },
    #[error("tile distribution is empty")]
    EmptyDistribution,
}

/// Square grid of premium kinds with a designated center square.
#[derive(Debug, Clone)]
pub struct BoardLayout {
    size: usize,
    premiums: Vec<Premium>,
}

impl BoardLayout {
    /// Parses a whitespace-separated grid of `..`/`DL`/`TL`/`DW`/`TW` tokens.
    pub fn from_ascii(grid: &str) -> Result<BoardLayout, BoardError> {
        let rows: Vec<Vec<Premium>> = grid
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(|line| {
                line.split_whitespace()
                    .map(|tok| {
                        Premium::from_token(tok)
                            .ok_or_else(|| BoardError::BadLayout(format!("token {tok:?}")))
                    })
                    .collect()
            })
            .collect::<Result<_, _>>()?;
        let size = rows.len();
        if size == 0 || size % 2 == 0 {
            return Err(BoardError::BadLayout(format!("{size} rows, need odd")));
        }
        if let Some(bad) = rows.iter().find(|r| r.len() != size) {
            return Err(BoardError::BadLayout(format!(
                "row of width {} in a {size}-row grid",
                bad.len()
            )));
        }
        Ok(BoardLayout {
            size,
            premiums: rows.into_iter().flatten().collect(),
        })
    }

    /// All-`None` layout for small-board tests and fuzzing.
    pub fn plain(size: usize) -> BoardLayout {
        assert!(size % 2 == 1 && size >= 3, "plain layouts must be odd-sized");
        BoardLayout {
            size,
            premiums: vec![Premium::None; size * size],
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Center square, the mandatory first-move cell.
    pub fn center(&self) -> (usize, usize) {
        (self.size / 2, self.size / 2)
    }

    pub fn premium(&self, row: usize, col: usize) -> Premium {
        self.premiums[row * self.size + col]
    }

    /// Count of squares with the given premium kind.
    pub fn count(&self, kind: Premium) -> usize {
        self.premiums.iter().filter(|&&p| p == kind).count()
    }

    /// True when the premium grid is symmetric under 180-degree rotation.
    pub fn is_rotation_symmetric(&self) -> bool {
        let n = self.premiums.len();
        (0..n).all(|i| self.premiums[i] == self.premiums[n - 1 - i])
    }

    /// Renders the grid in the same token format accepted by `from_ascii`.
    pub fn to_ascii(&self) -> String {
        let mut out = String::new();
        for row in 0..self.size {
            for col in 0..self.size {
                if col > 0 {
                    out.push(' ');
                }
                out.push_str(self.premium(row, col).token());
            }
            out.push('\n');
        }
        out
    }
}

const STANDARD_15_GRID: &str = "\
TW .. .. DL .. .. .. TW .. .. .. DL .. .. TW
.. DW .. .. .. TL .. .. .. TL .. .. .. DW ..
.. .. DW .. .. .. DL .. DL .. .. .. DW .. ..
DL .. .. DW .. .. .. DL .. .. .. DW .. .. DL
.. .. .. .. DW .. .. .. .. .. DW .. .. .. ..
.. TL .. .. .. TL .. .. .. TL .. .. .. TL ..
.. .. DL .. .. .. DL .. DL .. .. .. DL .. ..
TW .. .. DL .. .. .. DW .. .. .. DL .. .. TW
.. .. DL .. .. .. DL .. DL .. .. .. DL .. ..
.. TL .. .. .. TL .. .. .. TL .. .. .. TL ..
.. .. .. .. DW .. .. .. .. .. DW .. .. .. ..
DL .. .. DW .. .. .. DL .. .. .. DW .. .. DL
.. .. DW .. .. .. DL .. DL .. .. .. DW .. ..
.. DW .. .. .. TL .. .. .. TL .. .. .. DW ..
TW .. .. DL .. .. .. TW .. .. .. DL .. .. TW
";

const COMPACT_13_GRID: &str = "\
DW .. .. .. TL .. .. .. TL .. .. .. DW
.. DW .. .. .. DL .. DL .. .. .. DW ..
.. .. DW .. .. .. DL .. .. .. DW .. ..
.. .. .. DW .. .. .. .. .. DW .. .. ..
TL .. .. .. TL .. .. .. TL .. .. .. TL
.. DL .. .. .. DL .. DL .. .. .. DL ..
.. .. DL .. .. .. DW .. .. .. DL .. ..
.. DL .. .. .. DL .. DL .. .. .. DL ..
TL .. .. .. TL .. .. .. TL .. .. .. TL
.. .. .. DW .. .. .. .. .. DW .. .. ..
.. .. DW .. .. .. DL .. .. .. DW .. ..
.. DW .. .. .. DL .. DL .. .. .. DW ..
DW .. .. .. TL .. .. .. TL .. .. .. DW
";

/// The standard 15x15 tournament board.
pub fn standard_layout() -> BoardLayout {
    BoardLayout::from_ascii(STANDARD_15_GRID).expect("embedded 15x15 grid is valid")
}

/// The 13x13 reduced board (24.89% smaller area than the standard board).
pub fn layout_13x13() -> BoardLayout {
    BoardLayout::from_ascii(COMPACT_13_GRID).expect("embedded 13x13 grid is valid")
}

/// One physical tile. Blanks carry `letter == b'?'` until placed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Tile {
    pub letter: u8,
    pub value: u8,
    pub is_blank: bool,
}

impl Tile {
    pub fn letter_char(&self) -> char {
        self.letter as char
    }
}

/// A tile distribution: per-letter counts and point values.
#[derive(Debug, Clone)]
pub struct TileDistribution {
    entries: Vec<(u8, u32, u8)>, // (letter or '?', count, value)
}

const ENGLISH_TILES: &str = include_str!("../data/english_tiles.txt");

impl TileDistribution {
    /// Parses "LETTER COUNT VALUE" lines; `#` starts a comment.
    pub fn parse(text: &str) -> Result<TileDistribution, BoardError> {
        let mut entries = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut parts = line.split_whitespace();
            let bad = |reason: &str| BoardError::BadTileLine {
                line: idx + 1,
                reason: reason.to_string(),
            };
            let letter = parts.next().ok_or_else(|| bad("missing letter"))?;
            let letter = match letter.as_bytes() {
                [b @ b'A'..=b'Z'] | [b @ b'?'] => *b,
                _ => return Err(bad("letter must be A-Z or ?")),
            };
            let count: u32 = parts
                .next()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| bad("bad count"))?;
            let value: u8 = parts
                .next()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| bad("bad value"))?;
            if letter == BLANK_LETTER && value != 0 {
                return Err(bad("blanks must be worth 0"));
            }
            entries.push((letter, count, value));
        }
        if entries.is_empty() {
            return Err(BoardError::EmptyDistribution);
        }
        Ok(TileDistribution { entries })
    }

    /// The conventional 100-tile English set.
    pub fn english() -> TileDistribution {
        TileDistribution::parse(ENGLISH_TILES).expect("embedded tile data is valid")
    }

    pub fn total_tiles(&self) -> u32 {
        self.entries.iter().map(|&(_, count, _)| count).sum()
    }

    pub fn total_points(&self) -> u32 {
        self.entries
            .iter()
            .map(|&(_, count, value)| count * value as u32)
            .sum()
    }

    /// Point value of a letter tile (0 for the blank and unknown letters).
    pub fn value_of(&self, letter: u8) -> u8 {
        self.entries
            .iter()
            .find(|&&(l, _, _)| l == letter)
            .map(|&(_, _, v)| v)
            .unwrap_or(0)
    }

    fn tiles(&self) -> Vec<Tile> {
        let mut tiles = Vec::with_capacity(self.total_tiles() as usize);
        for &(letter, count, value) in &self.entries {
            for _ in 0..count {
                tiles.push(Tile {
                    letter,
                    value,
                    is_blank: letter == BLANK_LETTER,
                });
            }
        }
        tiles
    }
}

/// Seeded bag of tiles. Draw order is a pure function of the seed and of the
/// sequence of draw/exchange operations.
#[derive(Debug, Clone)]
pub struct TileBag {
    tiles: Vec<Tile>,
    rng: ChaCha8Rng,
}

impl TileBag {
    pub fn new(distribution: &TileDistribution, seed: u64) -> TileBag {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut tiles = distribution.tiles();
        tiles.shuffle(&mut rng);
        TileBag { tiles, rng }
    }

    pub fn len(&self) -> usize {
        self.tiles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tiles.is_empty()
    }

    pub fn draw(&mut self) -> Option<Tile> {
        self.tiles.pop()
    }

    /// Returns tiles to the bag and reshuffles (the exchange rule).
    pub fn return_tiles(&mut self, returned: impl IntoIterator<Item = Tile>) {
        self.tiles.extend(returned);
        self.tiles.shuffle(&mut self.rng);
    }
}

/// The conventional seeded 100-tile bag.
pub fn standard_tile_bag(seed: u64) -> TileBag {
    TileBag::new(&TileDistribution::english(), seed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_board_matches_known_cells() {
        let layout = standard_layout();
        assert_eq!(layout.size(), 15);
        assert_eq!(layout.premium(0, 0), Premium::TripleWord);
        assert_eq!(layout.premium(7, 7), Premium::DoubleWord);
        assert_eq!(layout.center(), (7, 7));
    }

    #[test]
    fn standard_board_premium_counts() {
        let layout = standard_layout();
        assert_eq!(layout.count(Premium::TripleWord), 8);
        assert_eq!(layout.count(Premium::DoubleWord), 17);
        assert_eq!(layout.count(Premium::TripleLetter), 12);
        assert_eq!(layout.count(Premium::DoubleLetter), 24);
    }

    #[test]
    fn compact_board_matches_known_cells() {
        let layout = layout_13x13();
        assert_eq!(layout.size(), 13);
        assert_eq!(layout.premium(0, 0), Premium::DoubleWord);
        assert_eq!(layout.count(Premium::TripleWord), 0);
        assert_eq!(layout.premium(6, 6), Premium::DoubleWord);
        assert_eq!(layout.center(), (6, 6));
    }

    #[test]
    fn board_area_ratio() {
        let small = 13.0 * 13.0;
        let big = 15.0 * 15.0;
        let shrink = 1.0 - small / big;
        assert!((shrink - 0.2489).abs() < 1e-4);
    }

    #[test]
    fn layouts_are_rotation_symmetric() {
        assert!(standard_layout().is_rotation_symmetric());
        assert!(layout_13x13().is_rotation_symmetric());
        assert!(BoardLayout::plain(5).is_rotation_symmetric());
    }

    #[test]
    fn ascii_round_trip() {
        for layout in [standard_layout(), layout_13x13()] {
            let round = BoardLayout::from_ascii(&layout.to_ascii()).unwrap();
            assert_eq!(round.premiums, layout.premiums);
        }
    }

    #[test]
    fn english_distribution_totals() {
        let dist = TileDistribution::english();
        assert_eq!(dist.total_tiles(), 100);
        assert_eq!(dist.total_points(), 187);
    }

    #[test]
    fn bag_holds_exact_multiset_any_seed() {
        for seed in [0u64, 1, 99] {
            let mut bag = standard_tile_bag(seed);
            assert_eq!(bag.len(), 100);
            let mut blanks = 0;
            let mut points = 0u32;
            while let Some(tile) = bag.draw() {
                points += tile.value as u32;
                if tile.is_blank {
                    blanks += 1;
                    assert_eq!(tile.value, 0);
                }
            }
            assert_eq!(blanks, 2);
            assert_eq!(points, 187);
        }
    }

    #[test]
    fn equal_seeds_draw_identically() {
        let mut a = standard_tile_bag(42);
        let mut b = standard_tile_bag(42);
        for _ in 0..100 {
            assert_eq!(a.draw(), b.draw());
        }
    }

    #[test]
    fn distribution_parse_rejects_garbage() {
        assert!(TileDistribution::parse("E twelve 1").is_err());
        assert!(TileDistribution::parse("? 2 3").is_err());
        assert!(TileDistribution::parse("# only a comment\n").is_err());
    }
}
