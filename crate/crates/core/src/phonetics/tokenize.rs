use super::PhonemeAlphabet;

/// A line as ordered phoneme tokens with word boundaries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhonemeSequence {
    pub line_id: String,
    /// Word-level token lists, in order.
    pub words: Vec<Vec<char>>,
    /// Stress/markup characters dropped by normalization.
    pub dropped_count: usize,
    /// Characters that were neither alphabet tokens nor known markup.
    pub unknown_count: usize,
}

impl PhonemeSequence {
    pub fn empty(line_id: impl Into<String>) -> Self {
        Self {
            line_id: line_id.into(),
            words: Vec::new(),
            dropped_count: 0,
            unknown_count: 0,
        }
    }

    /// Concatenation of all word token lists.
    pub fn flat(&self) -> Vec<char> {
        self.words.iter().flatten().copied().collect()
    }

    pub fn token_count(&self) -> usize {
        self.words.iter().map(Vec::len).sum()
    }

    /// Vowel-only projection of the flat token stream.
    pub fn vowel_projection(&self, alphabet: &PhonemeAlphabet) -> Vec<char> {
        self.words
            .iter()
            .flatten()
            .copied()
            .filter(|&c| alphabet.is_vowel(c))
            .collect()
    }
}

fn is_markup(c: char) -> bool {
    // stress and duration marks in the transcription convention
    c == '\'' || c == ',' || c == '-' || c.is_ascii_digit()
}

/// Tokenize raw transcription text: whitespace delimits words, stress and
/// markup characters are dropped and counted, anything outside the alphabet
/// is dropped into `unknown_count`.
pub fn tokenize_transcription(
    raw: &str,
    alphabet: &PhonemeAlphabet,
    line_id: impl Into<String>,
) -> PhonemeSequence {
    let mut words = Vec::new();
    let mut dropped = 0usize;
    let mut unknown = 0usize;
    for raw_word in raw.split_whitespace() {
        let mut word = Vec::new();
        for c in raw_word.chars() {
            if is_markup(c) {
                dropped += 1;
            } else if alphabet.contains(c) {
                word.push(c);
            } else {
                unknown += 1;
            }
        }
        if !word.is_empty() {
            words.push(word);
        }
    }
    PhonemeSequence {
        line_id: line_id.into(),
        words,
        dropped_count: dropped,
        unknown_count: unknown,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alpha() -> PhonemeAlphabet {
        PhonemeAlphabet::new()
    }

    #[test]
    fn single_word_with_stress_mark() {
        let seq = tokenize_transcription("hIms'Elf", &alpha(), "l1");
        assert_eq!(seq.words, vec![vec!['h', 'I', 'm', 's', 'E', 'l', 'f']]);
        assert_eq!(seq.dropped_count, 1);
        assert_eq!(seq.unknown_count, 0);
    }

    #[test]
    fn empty_input_gives_empty_sequence() {
        let seq = tokenize_transcription("", &alpha(), "l2");
        assert!(seq.words.is_empty());
        assert_eq!(seq.token_count(), 0);
        assert_eq!(seq.dropped_count, 0);
    }

    // Hand count under the normalization rule: apostrophes, commas, hyphens
    // and digit characters are markup. The line has 21 non-space characters,
    // three apostrophes and one digit, leaving 17 tokens in 4 words.
    #[test]
    fn table2_second_line_hand_count() {
        let seq = tokenize_transcription("n'aU D@ p'IktS3 k@n'Ekts", &alpha(), "l3");
        assert_eq!(seq.words.len(), 4);
        assert_eq!(seq.token_count(), 17);
        assert_eq!(seq.dropped_count, 4);
        assert_eq!(seq.unknown_count, 0);
        assert_eq!(seq.words[0], vec!['n', 'a', 'U']);
        assert_eq!(seq.words[3], vec!['k', '@', 'n', 'E', 'k', 't', 's']);
    }

    #[test]
    fn flat_length_equals_word_length_sum() {
        let seq = tokenize_transcription("t@ gEt s,Vm rI2sp'Ekt", &alpha(), "l4");
        assert_eq!(seq.flat().len(), seq.token_count());
        let a = alpha();
        assert!(seq.flat().iter().all(|&c| a.contains(c)));
    }

    #[test]
    fn unknown_characters_counted_separately() {
        let seq = tokenize_transcription("qax!", &alpha(), "l5");
        assert_eq!(seq.words, vec![vec!['a']]);
        assert_eq!(seq.unknown_count, 3); // q, x, !
        assert_eq!(seq.dropped_count, 0);
    }
}
