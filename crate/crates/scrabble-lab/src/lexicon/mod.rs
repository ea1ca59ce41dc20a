//! Word lists, seeded fractional sub-dictionaries, and the word automaton.
//!
//! A master list is loaded once, a *custom dictionary* is sampled from it by
//! fraction `d`, and each player's *knowledge base* is sampled from the custom
//! dictionary by fraction `p`. All sampling is uniform without replacement
//! over the sorted word list and fully determined by a 64-bit seed.

mod automaton;

pub use automaton::WordAutomaton;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::HashSet;
use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::Path;
use thiserror::Error;

pub const MIN_WORD_LEN: usize = 2;
pub const MAX_WORD_LEN: usize = 15;

#[derive(Debug, Error)]
pub enum LexiconError {
    #[error("failed to read word list: {0}")]
    Io(#[from] std::io::Error),
    #[error("word list {0:?} contains no valid words")]
    Empty(String),
    #[error("fraction {0} out of range (0, 1]")]
    BadFraction(f64),
}

/// An immutable, sorted, deduplicated set of uppercase words.
#[derive(Debug, Clone)]
pub struct Lexicon {
    words: Vec<String>,
    source_label: String,
    skipped: usize,
}

/// How to derive a custom dictionary from a master list.
#[derive(Debug, Clone, Copy)]
pub struct SubsetSpec {
    pub fraction: f64,
    pub seed: u64,
}

/// How to derive a player's knowledge base from a custom dictionary.
#[derive(Debug, Clone, Copy)]
pub struct KnowledgeSpec {
    pub fraction: f64,
    pub seed: u64,
}

/// Normalizes one raw token; `None` when the token must be skipped.
fn normalize(token: &str) -> Option<String> {
    let token = token.trim();
    if token.is_empty() {
        return None;
    }
    let upper = token.to_ascii_uppercase();
    let ok = (MIN_WORD_LEN..=MAX_WORD_LEN).contains(&upper.len())
        && upper.bytes().all(|b| b.is_ascii_uppercase());
    ok.then_some(upper)
}

impl Lexicon {
    /// Builds a lexicon from raw tokens, skipping (and counting) tokens that
    /// are not pure A-Z words of 2 to 15 letters.
    pub fn from_tokens<I, S>(tokens: I, source_label: &str) -> Result<Lexicon, LexiconError>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut words = Vec::new();
        let mut skipped = 0usize;
        for token in tokens {
            let token = token.as_ref();
            if token.trim().is_empty() {
                continue;
            }
            match normalize(token) {
                Some(word) => words.push(word),
                None => skipped += 1,
            }
        }
        words.sort_unstable();
        words.dedup();
        if words.is_empty() {
            return Err(LexiconError::Empty(source_label.to_string()));
        }
        Ok(Lexicon {
            words,
            source_label: source_label.to_string(),
            skipped,
        })
    }

    pub fn from_reader<R: BufRead>(reader: R, source_label: &str) -> Result<Lexicon, LexiconError> {
        let lines: Vec<String> = reader.lines().collect::<Result<_, _>>()?;
        Lexicon::from_tokens(lines, source_label)
    }

    pub fn load_file<P: AsRef<Path>>(path: P) -> Result<Lexicon, LexiconError> {
        let path = path.as_ref();
        let label = path.display().to_string();
        let file = File::open(path)?;
        Lexicon::from_reader(BufReader::new(file), &label)
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Tokens dropped while this lexicon was built.
    pub fn skipped(&self) -> usize {
        self.skipped
    }

    pub fn source_label(&self) -> &str {
        &self.source_label
    }

    /// Sorted word list.
    pub fn words(&self) -> &[String] {
        &self.words
    }

    pub fn contains(&self, word: &str) -> bool {
        self.words.binary_search_by(|w| w.as_str().cmp(word)).is_ok()
    }

    /// Set of letters used by at least one word.
    pub fn alphabet(&self) -> HashSet<u8> {
        self.words.iter().flat_map(|w| w.bytes()).collect()
    }

    /// Uniform sample without replacement of `round(len * fraction)` words
    /// (at least one). The same spec always yields the same subset.
    fn sample(&self, fraction: f64, seed: u64, label: String) -> Result<Lexicon, LexiconError> {
        if !(fraction > 0.0 && fraction <= 1.0) {
            return Err(LexiconError::BadFraction(fraction));
        }
        let total = self.words.len();
        let size = subset_size(total, fraction);
        if size == total {
            return Ok(Lexicon {
                words: self.words.clone(),
                source_label: label,
                skipped: 0,
            });
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut picked: Vec<usize> = rand::seq::index::sample(&mut rng, total, size).into_vec();
        picked.sort_unstable();
        let words = picked.into_iter().map(|i| self.words[i].clone()).collect();
        Ok(Lexicon {
            words,
            source_label: label,
            skipped: 0,
        })
    }

    /// Derives the custom dictionary (the acceptable-word set of a game).
    pub fn sample_subset(&self, spec: SubsetSpec) -> Result<Lexicon, LexiconError> {
        let label = format!("{}[d={}]", self.source_label, spec.fraction);
        self.sample(spec.fraction, spec.seed, label)
    }

    /// Derives one player's knowledge base from a custom dictionary.
    pub fn sample_knowledge(&self, spec: KnowledgeSpec) -> Result<Lexicon, LexiconError> {
        let label = format!("{}[p={}]", self.source_label, spec.fraction);
        self.sample(spec.fraction, spec.seed, label)
    }

    /// Compiles the word set into its move-generation automaton.
    pub fn build_automaton(&self) -> WordAutomaton {
        WordAutomaton::build(self)
    }
}

/// Round-half-up subset size with a floor of one word.
pub fn subset_size(total: usize, fraction: f64) -> usize {
    let size = (total as f64 * fraction + 0.5).floor() as usize;
    size.clamp(1, total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn loads_and_normalizes() {
        let lex = Lexicon::from_tokens(["CAT", "AT", "DOG"], "t").unwrap();
        assert_eq!(lex.len(), 3);
        let lex = Lexicon::from_tokens(["cat"], "t").unwrap();
        assert!(lex.contains("CAT"));
    }

    #[test]
    fn skips_out_of_range_tokens() {
        let lex = Lexicon::from_tokens(["A", "CAT"], "t").unwrap();
        assert_eq!(lex.len(), 1);
        assert_eq!(lex.skipped(), 1);
        let lex = Lexicon::from_tokens(["it's", "nope", "ABCDEFGHIJKLMNOP"], "t").unwrap();
        assert_eq!(lex.len(), 1);
        assert_eq!(lex.skipped(), 2);
    }

    #[test]
    fn crlf_and_case_handled() {
        let data = "cat\r\ndog\r\nCAT\n";
        let lex = Lexicon::from_reader(data.as_bytes(), "t").unwrap();
        assert_eq!(lex.len(), 2); // CAT deduplicated
    }

    #[test]
    fn empty_list_is_an_error() {
        assert!(matches!(
            Lexicon::from_tokens(Vec::<String>::new(), "t"),
            Err(LexiconError::Empty(_))
        ));
        assert!(matches!(
            Lexicon::from_tokens(["X"], "t"),
            Err(LexiconError::Empty(_))
        ));
    }

    #[test]
    fn fraction_one_is_identity() {
        let lex = Lexicon::from_tokens(["CAT", "DOG", "BIRD"], "t").unwrap();
        for seed in [0u64, 7, 1234] {
            let sub = lex
                .sample_subset(SubsetSpec { fraction: 1.0, seed })
                .unwrap();
            assert_eq!(sub.words(), lex.words());
        }
    }

    #[test]
    fn subset_size_rounds_half_up() {
        assert_eq!(subset_size(187_632, 0.04), 7_505);
        assert_eq!(subset_size(10, 0.25), 3); // 2.5 rounds up
        assert_eq!(subset_size(1000, 0.0001), 1); // floor of one
    }

    #[test]
    fn subsets_are_reproducible() {
        let words: Vec<String> = (0..500).map(|i| format!("W{i:03}X")).collect();
        let lex = Lexicon::from_tokens(&words, "t").unwrap();
        let spec = SubsetSpec { fraction: 0.3, seed: 99 };
        let a = lex.sample_subset(spec).unwrap();
        let b = lex.sample_subset(spec).unwrap();
        assert_eq!(a.words(), b.words());
        assert_eq!(a.len(), 150);
    }

    #[test]
    fn bad_fractions_rejected() {
        let lex = Lexicon::from_tokens(["CAT"], "t").unwrap();
        for f in [0.0, -0.5, 1.5, f64::NAN] {
            assert!(lex.sample_subset(SubsetSpec { fraction: f, seed: 0 }).is_err());
        }
    }

    proptest! {
        #[test]
        fn subset_size_is_monotone(total in 1usize..10_000, a in 0.001f64..1.0, b in 0.001f64..1.0) {
            let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
            prop_assert!(subset_size(total, lo) <= subset_size(total, hi));
        }

        #[test]
        fn sampled_words_come_from_parent(seed in any::<u64>(), frac in 0.01f64..1.0) {
            let words: Vec<String> = (0..80).map(|i| format!("Q{i:02}Z")).collect();
            let lex = Lexicon::from_tokens(&words, "t").unwrap();
            let sub = lex.sample_subset(SubsetSpec { fraction: frac, seed }).unwrap();
            prop_assert_eq!(sub.len(), subset_size(80, frac));
            for w in sub.words() {
                prop_assert!(lex.contains(w));
            }
            let mut sorted = sub.words().to_vec();
            sorted.sort();
            prop_assert_eq!(&sorted, sub.words());
        }
    }
}
