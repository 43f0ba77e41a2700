//! Stopword list loading.

use std::collections::HashSet;
use std::path::Path;

use crate::error::{Error, Result};

const DEFAULT_LIST: &str = include_str!("../../assets/stopwords.txt");

/// The stopword list shipped with the crate: common English function words
/// augmented with punctuation marks.
pub fn default_stopwords() -> HashSet<String> {
    parse(DEFAULT_LIST)
}

/// Loads a stopword file: one token per line. A line starting with '#' and
/// containing further text is a comment; a line that is exactly "#" is the
/// token '#' itself.
pub fn load_stopwords(path: &Path) -> Result<HashSet<String>> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path.display().to_string(), e))?;
    Ok(parse(&text))
}

fn parse(text: &str) -> HashSet<String> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !(l.starts_with('#') && l.len() > 1))
        .map(str::to_string)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_list_contains_words_and_punctuation() {
        let set = default_stopwords();
        assert!(set.contains("the"));
        assert!(set.contains("of"));
        assert!(set.contains("."));
        assert!(set.contains(","));
        assert!(set.contains("#"));
        assert!(!set.contains("cat"));
    }

    #[test]
    fn comments_and_blank_lines_ignored() {
        let set = parse("# a comment\n\nthe\n  and  \n# another\n.\n#\n");
        assert_eq!(set.len(), 4);
        assert!(set.contains("the"));
        assert!(set.contains("and"));
        assert!(set.contains("."));
        assert!(set.contains("#"));
    }
}
