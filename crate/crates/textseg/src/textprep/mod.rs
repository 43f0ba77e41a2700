//! Raw text to preprocessed elements: sentence splitting, word tokenization,
//! stopword removal, stemming, and short-element cuts, with a kept-index map
//! so boundaries can be reported against the original document.

mod porter;
mod stopwords;

pub use porter::porter_stem;
pub use stopwords::{default_stopwords, load_stopwords};

use std::collections::HashSet;

use crate::error::{Error, Result};

/// Granularity of the elements a document is split into.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ElementLevel {
    Sentence,
    Word,
}

impl std::fmt::Display for ElementLevel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ElementLevel::Sentence => write!(f, "sentence"),
            ElementLevel::Word => write!(f, "word"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct RawDocument {
    pub id: String,
    pub text: String,
}

impl RawDocument {
    pub fn new(id: impl Into<String>, text: impl Into<String>) -> Self {
        RawDocument {
            id: id.into(),
            text: text.into(),
        }
    }
}

/// An ordered list of elements (sentences or words), each a list of tokens.
///
/// `kept_index_map[i]` is the index of element `i` in the document it was
/// derived from, so boundaries computed on a preprocessed document can be
/// mapped back. `spans`, when present, holds byte ranges into the raw text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TokenizedDocument {
    pub elements: Vec<Vec<String>>,
    pub level: ElementLevel,
    pub kept_index_map: Vec<usize>,
    pub spans: Option<Vec<(usize, usize)>>,
}

impl TokenizedDocument {
    /// Builds a document whose elements are all kept, indexed 0..n.
    pub fn from_elements(elements: Vec<Vec<String>>, level: ElementLevel) -> Self {
        let kept_index_map = (0..elements.len()).collect();
        TokenizedDocument {
            elements,
            level,
            kept_index_map,
            spans: None,
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Checks the structural invariants; used by tests and debug assertions.
    pub fn validate(&self) -> Result<()> {
        if self.kept_index_map.len() != self.elements.len() {
            return Err(Error::InvalidSegmentation(
                "kept_index_map length differs from element count".into(),
            ));
        }
        if !self.kept_index_map.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::InvalidSegmentation(
                "kept_index_map is not strictly increasing".into(),
            ));
        }
        for (i, el) in self.elements.iter().enumerate() {
            if el.iter().any(|t| t.is_empty()) {
                return Err(Error::Element {
                    element: i,
                    source: Box::new(Error::EmptyDocument),
                });
            }
            if self.level == ElementLevel::Word && el.len() != 1 {
                return Err(Error::Element {
                    element: i,
                    source: Box::new(Error::InvalidSegmentation(
                        "word-level element must hold exactly one token".into(),
                    )),
                });
            }
        }
        Ok(())
    }
}

/// Preprocessing switches. `min_element_tokens` is applied after stopword
/// removal and stemming.
#[derive(Debug, Clone, Default)]
pub struct PreprocessOptions {
    pub remove_stopwords: bool,
    pub stem: bool,
    pub min_element_tokens: usize,
    pub stopword_list: HashSet<String>,
}

impl PreprocessOptions {
    /// All switches off.
    pub fn none() -> Self {
        Self::default()
    }

    /// Stopword removal with the bundled list, no stemming, and the given
    /// short-element cut.
    pub fn with_default_stopwords(min_element_tokens: usize) -> Self {
        PreprocessOptions {
            remove_stopwords: true,
            stem: false,
            min_element_tokens,
            stopword_list: default_stopwords(),
        }
    }
}

/// Lowercases `text`, surrounds every non-alphanumeric character with spaces,
/// and splits on whitespace, keeping the byte span of each token in the
/// original text.
fn lex(text: &str) -> Vec<(String, (usize, usize))> {
    let mut tokens = Vec::new();
    let mut current = String::new();
    let mut start = 0usize;
    for (pos, ch) in text.char_indices() {
        if ch.is_alphanumeric() {
            if current.is_empty() {
                start = pos;
            }
            current.extend(ch.to_lowercase());
        } else {
            if !current.is_empty() {
                tokens.push((std::mem::take(&mut current), (start, pos)));
            }
            if !ch.is_whitespace() {
                let end = pos + ch.len_utf8();
                tokens.push((ch.to_lowercase().collect(), (pos, end)));
            }
        }
    }
    if !current.is_empty() {
        tokens.push((current, (start, text.len())));
    }
    tokens
}

/// Splits free text into sentence elements on {., !, ?} followed by
/// whitespace or end of input. Each sentence is tokenized like
/// [`tokenize_words`].
pub fn split_sentences(doc: &RawDocument) -> Result<TokenizedDocument> {
    if doc.text.trim().is_empty() {
        return Err(Error::EmptyDocument);
    }
    let text = &doc.text;
    let bytes = text.as_bytes();
    let mut sentence_spans = Vec::new();
    let mut start: Option<usize> = None;
    let mut iter = text.char_indices().peekable();
    while let Some((pos, ch)) = iter.next() {
        if ch.is_whitespace() {
            continue;
        }
        if start.is_none() {
            start = Some(pos);
        }
        if matches!(ch, '.' | '!' | '?') {
            let at_end = match iter.peek() {
                None => true,
                Some(&(_, next)) => next.is_whitespace(),
            };
            if at_end {
                let s = start.take().expect("sentence start recorded");
                sentence_spans.push((s, pos + ch.len_utf8()));
            }
        }
    }
    if let Some(s) = start {
        // Trailing text without a terminator forms the final sentence.
        let mut end = bytes.len();
        while end > s && bytes[end - 1].is_ascii_whitespace() {
            end -= 1;
        }
        sentence_spans.push((s, end));
    }

    let mut elements = Vec::new();
    let mut spans = Vec::new();
    for (s, e) in sentence_spans {
        let tokens: Vec<String> = lex(&text[s..e]).into_iter().map(|(t, _)| t).collect();
        if !tokens.is_empty() {
            elements.push(tokens);
            spans.push((s, e));
        }
    }
    if elements.is_empty() {
        return Err(Error::EmptyDocument);
    }
    let kept_index_map = (0..elements.len()).collect();
    Ok(TokenizedDocument {
        elements,
        level: ElementLevel::Sentence,
        kept_index_map,
        spans: Some(spans),
    })
}

/// Tokenizes text at the word level: lowercase, a space around every
/// non-alphanumeric character, split on whitespace. Every element holds
/// exactly one token.
pub fn tokenize_words(doc: &RawDocument) -> Result<TokenizedDocument> {
    if doc.text.trim().is_empty() {
        return Err(Error::EmptyDocument);
    }
    let lexed = lex(&doc.text);
    if lexed.is_empty() {
        return Err(Error::EmptyDocument);
    }
    let mut elements = Vec::with_capacity(lexed.len());
    let mut spans = Vec::with_capacity(lexed.len());
    for (token, span) in lexed {
        elements.push(vec![token]);
        spans.push(span);
    }
    let kept_index_map = (0..elements.len()).collect();
    Ok(TokenizedDocument {
        elements,
        level: ElementLevel::Word,
        kept_index_map,
        spans: Some(spans),
    })
}

/// Applies stopword removal, stemming and the short-element cut, composing
/// the kept-index map so surviving elements still point at their original
/// indices. Elements that lose all their tokens are dropped regardless of
/// `min_element_tokens`.
pub fn preprocess(doc: &TokenizedDocument, opts: &PreprocessOptions) -> Result<TokenizedDocument> {
    let mut elements = Vec::new();
    let mut kept_index_map = Vec::new();
    let mut spans = doc.spans.as_ref().map(|_| Vec::new());

    for (idx, element) in doc.elements.iter().enumerate() {
        let mut tokens: Vec<String> = if opts.remove_stopwords {
            element
                .iter()
                .filter(|t| !opts.stopword_list.contains(t.as_str()))
                .cloned()
                .collect()
        } else {
            element.clone()
        };
        if opts.stem {
            for t in &mut tokens {
                *t = porter_stem(t);
            }
        }
        if tokens.is_empty() || tokens.len() < opts.min_element_tokens {
            continue;
        }
        elements.push(tokens);
        kept_index_map.push(doc.kept_index_map[idx]);
        if let (Some(out), Some(src)) = (spans.as_mut(), doc.spans.as_ref()) {
            out.push(src[idx]);
        }
    }

    if elements.is_empty() {
        return Err(Error::NoSurvivingElements);
    }
    Ok(TokenizedDocument {
        elements,
        level: doc.level,
        kept_index_map,
        spans,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toks(element: &[&str]) -> Vec<String> {
        element.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn split_sentences_on_terminators() {
        let doc = RawDocument::new("d", "A b. C d.");
        let out = split_sentences(&doc).expect("two sentences");
        assert_eq!(out.elements, vec![toks(&["a", "b", "."]), toks(&["c", "d", "."])]);
        assert_eq!(out.level, ElementLevel::Sentence);
        assert_eq!(out.kept_index_map, vec![0, 1]);
        let spans = out.spans.expect("spans recorded");
        assert_eq!(&doc.text[spans[0].0..spans[0].1], "A b.");
        assert_eq!(&doc.text[spans[1].0..spans[1].1], "C d.");
    }

    #[test]
    fn split_sentences_empty_input_is_an_error() {
        assert!(matches!(
            split_sentences(&RawDocument::new("d", "")),
            Err(Error::EmptyDocument)
        ));
        assert!(matches!(
            split_sentences(&RawDocument::new("d", "  \n ")),
            Err(Error::EmptyDocument)
        ));
    }

    #[test]
    fn split_sentences_handles_missing_final_terminator() {
        let doc = RawDocument::new("d", "One here. and a tail");
        let out = split_sentences(&doc).expect("two sentences");
        assert_eq!(out.len(), 2);
        assert_eq!(out.elements[1], toks(&["and", "a", "tail"]));
    }

    #[test]
    fn abbreviation_period_inside_token_run_does_not_split() {
        // A terminator only ends a sentence when followed by whitespace.
        let doc = RawDocument::new("d", "See Eq.(3) here. Done.");
        let out = split_sentences(&doc).expect("two sentences");
        assert_eq!(out.len(), 2);
        assert_eq!(
            out.elements[0],
            toks(&["see", "eq", ".", "(", "3", ")", "here", "."])
        );
    }

    #[test]
    fn tokenize_words_separates_non_alphanumerics() {
        let doc = RawDocument::new("d", "Eq.(3)");
        let out = tokenize_words(&doc).expect("tokens");
        let flat: Vec<&str> = out.elements.iter().map(|e| e[0].as_str()).collect();
        assert_eq!(flat, vec!["eq", ".", "(", "3", ")"]);
        assert_eq!(out.level, ElementLevel::Word);
        out.validate().expect("valid word-level document");
    }

    #[test]
    fn tokenize_words_identity_on_alphanumeric() {
        let doc = RawDocument::new("d", "abc");
        let out = tokenize_words(&doc).expect("tokens");
        assert_eq!(out.elements, vec![toks(&["abc"])]);
    }

    #[test]
    fn tokenize_words_hyphen() {
        let doc = RawDocument::new("d", "a-b");
        let out = tokenize_words(&doc).expect("tokens");
        let flat: Vec<&str> = out.elements.iter().map(|e| e[0].as_str()).collect();
        assert_eq!(flat, vec!["a", "-", "b"]);
    }

    #[test]
    fn tokenize_words_empty_is_an_error() {
        assert!(tokenize_words(&RawDocument::new("d", "")).is_err());
    }

    #[test]
    fn word_spans_point_into_original_text() {
        let raw = "Ab (x)";
        let doc = RawDocument::new("d", raw);
        let out = tokenize_words(&doc).expect("tokens");
        let spans = out.spans.expect("spans");
        let slices: Vec<&str> = spans.iter().map(|&(s, e)| &raw[s..e]).collect();
        assert_eq!(slices, vec!["Ab", "(", "x", ")"]);
    }

    #[test]
    fn preprocess_removes_stopwords() {
        let doc = TokenizedDocument::from_elements(
            vec![toks(&["the", "cat"]), toks(&["sat"])],
            ElementLevel::Sentence,
        );
        let opts = PreprocessOptions {
            remove_stopwords: true,
            stopword_list: ["the".to_string()].into_iter().collect(),
            ..Default::default()
        };
        let out = preprocess(&doc, &opts).expect("preprocessed");
        assert_eq!(out.elements, vec![toks(&["cat"]), toks(&["sat"])]);
        assert_eq!(out.kept_index_map, vec![0, 1]);
    }

    #[test]
    fn preprocess_short_element_cut_updates_kept_index_map() {
        let doc = TokenizedDocument::from_elements(
            vec![
                toks(&["one", "two", "three", "four", "five"]),
                toks(&["a", "b", "c", "d"]),
                toks(&["v", "w", "x", "y", "z"]),
            ],
            ElementLevel::Sentence,
        );
        let opts = PreprocessOptions {
            min_element_tokens: 5,
            ..Default::default()
        };
        let out = preprocess(&doc, &opts).expect("preprocessed");
        assert_eq!(out.len(), 2);
        assert_eq!(out.kept_index_map, vec![0, 2]);
    }

    #[test]
    fn preprocess_with_no_options_is_identity() {
        let doc = TokenizedDocument::from_elements(
            vec![toks(&["the", "cat"]), toks(&["sat"])],
            ElementLevel::Sentence,
        );
        let out = preprocess(&doc, &PreprocessOptions::none()).expect("preprocessed");
        assert_eq!(out, doc);
    }

    #[test]
    fn preprocess_dropping_everything_is_an_error() {
        let doc =
            TokenizedDocument::from_elements(vec![toks(&["the", "a"])], ElementLevel::Sentence);
        let opts = PreprocessOptions {
            remove_stopwords: true,
            stopword_list: ["the".to_string(), "a".to_string()].into_iter().collect(),
            ..Default::default()
        };
        assert!(matches!(
            preprocess(&doc, &opts),
            Err(Error::NoSurvivingElements)
        ));
    }

    #[test]
    fn preprocess_is_idempotent() {
        let doc = TokenizedDocument::from_elements(
            vec![
                toks(&["the", "cats", "were", "running", "over", "fences", "quickly"]),
                toks(&["dogs", "barked", "loudly", "near", "houses", "yesterday"]),
                toks(&["a", "tiny", "one"]),
            ],
            ElementLevel::Sentence,
        );
        let opts = PreprocessOptions {
            remove_stopwords: true,
            stem: true,
            min_element_tokens: 3,
            stopword_list: default_stopwords(),
        };
        let once = preprocess(&doc, &opts).expect("first pass");
        let twice = preprocess(&once, &opts).expect("second pass");
        assert_eq!(once, twice);
    }

    #[test]
    fn kept_index_map_composes_under_repeated_preprocessing() {
        let doc = TokenizedDocument::from_elements(
            vec![
                toks(&["alpha", "beta", "gamma"]),
                toks(&["the"]),
                toks(&["delta", "epsilon"]),
                toks(&["zeta"]),
            ],
            ElementLevel::Sentence,
        );
        let drop_stop = PreprocessOptions {
            remove_stopwords: true,
            stopword_list: default_stopwords(),
            ..Default::default()
        };
        let cut = PreprocessOptions {
            min_element_tokens: 2,
            ..Default::default()
        };
        let first = preprocess(&doc, &drop_stop).expect("stopword pass");
        assert_eq!(first.kept_index_map, vec![0, 2, 3]);
        let second = preprocess(&first, &cut).expect("cut pass");
        assert_eq!(second.kept_index_map, vec![0, 2]);
        for (i, el) in second.elements.iter().enumerate() {
            assert_eq!(el, &doc.elements[second.kept_index_map[i]]);
        }
    }
}
