//! Porter stemming algorithm (1980), matching the reference C implementation
//! distributed with the published test vocabulary, including its two marked
//! departures in step 2 (`bli` -> `ble`, `logi` -> `log`).

/// Stems a lowercase alphabetic word. Words shorter than three letters and
/// words containing anything other than ASCII lowercase letters are returned
/// unchanged.
pub fn porter_stem(word: &str) -> String {
    if word.len() <= 2 || !word.bytes().all(|b| b.is_ascii_lowercase()) {
        return word.to_string();
    }
    let mut s = Stemmer::new(word.as_bytes());
    s.step1ab();
    s.step1c();
    s.step2();
    s.step3();
    s.step4();
    s.step5();
    String::from_utf8(s.b[..=s.k].to_vec()).expect("stemmer operates on ASCII")
}

/// Working buffer plus two cursors, mirroring the reference implementation:
/// `k` is the offset of the last letter of the current word, `j` is the
/// length of the stem left over after the most recent suffix match.
struct Stemmer {
    b: Vec<u8>,
    k: usize,
    j: usize,
}

impl Stemmer {
    fn new(word: &[u8]) -> Self {
        Stemmer {
            b: word.to_vec(),
            k: word.len() - 1,
            j: 0,
        }
    }

    fn is_consonant(&self, i: usize) -> bool {
        match self.b[i] {
            b'a' | b'e' | b'i' | b'o' | b'u' => false,
            b'y' => i == 0 || !self.is_consonant(i - 1),
            _ => true,
        }
    }

    /// Number of consonant sequences in b[0..j]; the m() of the paper.
    fn measure(&self) -> usize {
        let mut n = 0;
        let mut i = 0;
        loop {
            if i >= self.j {
                return n;
            }
            if !self.is_consonant(i) {
                break;
            }
            i += 1;
        }
        i += 1;
        loop {
            loop {
                if i >= self.j {
                    return n;
                }
                if self.is_consonant(i) {
                    break;
                }
                i += 1;
            }
            i += 1;
            n += 1;
            loop {
                if i >= self.j {
                    return n;
                }
                if !self.is_consonant(i) {
                    break;
                }
                i += 1;
            }
            i += 1;
        }
    }

    fn vowel_in_stem(&self) -> bool {
        (0..self.j).any(|i| !self.is_consonant(i))
    }

    fn double_consonant(&self, i: usize) -> bool {
        i >= 1 && self.b[i] == self.b[i - 1] && self.is_consonant(i)
    }

    /// cvc(i) tests b[i-2..=i] for consonant-vowel-consonant where the final
    /// consonant is not w, x or y; used to restore an e (hop -> hope fails,
    /// fil -> file succeeds).
    fn cvc(&self, i: usize) -> bool {
        if i < 2 || !self.is_consonant(i) || self.is_consonant(i - 1) || !self.is_consonant(i - 2) {
            return false;
        }
        !matches!(self.b[i], b'w' | b'x' | b'y')
    }

    fn ends(&mut self, s: &[u8]) -> bool {
        if s.len() > self.k + 1 {
            return false;
        }
        if &self.b[self.k + 1 - s.len()..=self.k] != s {
            return false;
        }
        self.j = self.k + 1 - s.len();
        true
    }

    /// Replaces b[j..] with s. Callers guarantee j + s.len() >= 1.
    fn set_to(&mut self, s: &[u8]) {
        self.b.truncate(self.j);
        self.b.extend_from_slice(s);
        self.k = self.j + s.len() - 1;
    }

    fn replace_if_stem(&mut self, s: &[u8]) {
        if self.measure() > 0 {
            self.set_to(s);
        }
    }

    fn step1ab(&mut self) {
        if self.b[self.k] == b's' {
            if self.ends(b"sses") {
                self.k -= 2;
            } else if self.ends(b"ies") {
                self.set_to(b"i");
            } else if self.b[self.k - 1] != b's' {
                self.k -= 1;
            }
        }
        if self.ends(b"eed") {
            if self.measure() > 0 {
                self.k -= 1;
            }
        } else if (self.ends(b"ed") || self.ends(b"ing")) && self.vowel_in_stem() {
            self.k = self.j - 1;
            if self.ends(b"at") {
                self.set_to(b"ate");
            } else if self.ends(b"bl") {
                self.set_to(b"ble");
            } else if self.ends(b"iz") {
                self.set_to(b"ize");
            } else if self.double_consonant(self.k) {
                if !matches!(self.b[self.k], b'l' | b's' | b'z') {
                    self.k -= 1;
                }
            } else {
                self.j = self.k + 1;
                if self.measure() == 1 && self.cvc(self.k) {
                    self.set_to(b"e");
                }
            }
        }
    }

    fn step1c(&mut self) {
        if self.ends(b"y") && self.vowel_in_stem() {
            self.b[self.k] = b'i';
        }
    }

    fn step2(&mut self) {
        if self.k == 0 {
            return;
        }
        match self.b[self.k - 1] {
            b'a' => {
                if self.ends(b"ational") {
                    self.replace_if_stem(b"ate");
                } else if self.ends(b"tional") {
                    self.replace_if_stem(b"tion");
                }
            }
            b'c' => {
                if self.ends(b"enci") {
                    self.replace_if_stem(b"ence");
                } else if self.ends(b"anci") {
                    self.replace_if_stem(b"ance");
                }
            }
            b'e' => {
                if self.ends(b"izer") {
                    self.replace_if_stem(b"ize");
                }
            }
            b'l' => {
                // The reference implementation uses bli -> ble in place of
                // the paper's abli -> able.
                if self.ends(b"bli") {
                    self.replace_if_stem(b"ble");
                } else if self.ends(b"alli") {
                    self.replace_if_stem(b"al");
                } else if self.ends(b"entli") {
                    self.replace_if_stem(b"ent");
                } else if self.ends(b"eli") {
                    self.replace_if_stem(b"e");
                } else if self.ends(b"ousli") {
                    self.replace_if_stem(b"ous");
                }
            }
            b'o' => {
                if self.ends(b"ization") {
                    self.replace_if_stem(b"ize");
                } else if self.ends(b"ation") {
                    self.replace_if_stem(b"ate");
                } else if self.ends(b"ator") {
                    self.replace_if_stem(b"ate");
                }
            }
            b's' => {
                if self.ends(b"alism") {
                    self.replace_if_stem(b"al");
                } else if self.ends(b"iveness") {
                    self.replace_if_stem(b"ive");
                } else if self.ends(b"fulness") {
                    self.replace_if_stem(b"ful");
                } else if self.ends(b"ousness") {
                    self.replace_if_stem(b"ous");
                }
            }
            b't' => {
                if self.ends(b"aliti") {
                    self.replace_if_stem(b"al");
                } else if self.ends(b"iviti") {
                    self.replace_if_stem(b"ive");
                } else if self.ends(b"biliti") {
                    self.replace_if_stem(b"ble");
                }
            }
            b'g' => {
                // Second departure in the reference implementation.
                if self.ends(b"logi") {
                    self.replace_if_stem(b"log");
                }
            }
            _ => {}
        }
    }

    fn step3(&mut self) {
        match self.b[self.k] {
            b'e' => {
                if self.ends(b"icate") {
                    self.replace_if_stem(b"ic");
                } else if self.ends(b"ative") {
                    self.replace_if_stem(b"");
                } else if self.ends(b"alize") {
                    self.replace_if_stem(b"al");
                }
            }
            b'i' => {
                if self.ends(b"iciti") {
                    self.replace_if_stem(b"ic");
                }
            }
            b'l' => {
                if self.ends(b"ical") {
                    self.replace_if_stem(b"ic");
                } else if self.ends(b"ful") {
                    self.replace_if_stem(b"");
                }
            }
            b's' => {
                if self.ends(b"ness") {
                    self.replace_if_stem(b"");
                }
            }
            _ => {}
        }
    }

    fn step4(&mut self) {
        if self.k == 0 {
            return;
        }
        let matched = match self.b[self.k - 1] {
            b'a' => self.ends(b"al"),
            b'c' => self.ends(b"ance") || self.ends(b"ence"),
            b'e' => self.ends(b"er"),
            b'i' => self.ends(b"ic"),
            b'l' => self.ends(b"able") || self.ends(b"ible"),
            b'n' => {
                self.ends(b"ant")
                    || self.ends(b"ement")
                    || self.ends(b"ment")
                    || self.ends(b"ent")
            }
            b'o' => {
                (self.ends(b"ion") && self.j >= 1 && matches!(self.b[self.j - 1], b's' | b't'))
                    || self.ends(b"ou")
            }
            b's' => self.ends(b"ism"),
            b't' => self.ends(b"ate") || self.ends(b"iti"),
            b'u' => self.ends(b"ous"),
            b'v' => self.ends(b"ive"),
            b'z' => self.ends(b"ize"),
            _ => false,
        };
        if matched && self.measure() > 1 {
            self.k = self.j - 1;
        }
    }

    fn step5(&mut self) {
        self.j = self.k + 1;
        if self.b[self.k] == b'e' {
            let a = self.measure();
            if a > 1 || (a == 1 && self.k >= 1 && !self.cvc(self.k - 1)) {
                self.k -= 1;
            }
        }
        if self.b[self.k] == b'l' && self.double_consonant(self.k) && self.measure() > 1 {
            self.k -= 1;
        }
    }
}
