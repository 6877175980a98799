use std::collections::BTreeSet;

/// The 39 base phoneme tokens, in listing order.
const BASE_TOKENS: &str = "pbtTdDsSzZkgfvhmnNljwr2Y3L5aAeEiI0VuUoO";

/// Schwa extension token: it occurs throughout real transcriptions but is
/// absent from the base listing.
const EXTENSION: char = '@';

const DEFAULT_VOWELS: &str = "aAeEiI0OouUV3@";

/// Token alphabet for phonetic transcriptions: 39 base tokens plus `@`,
/// with a configurable vowel subset.
#[derive(Debug, Clone)]
pub struct PhonemeAlphabet {
    tokens: Vec<char>,
    token_set: BTreeSet<char>,
    vowel_set: BTreeSet<char>,
}

impl PhonemeAlphabet {
    pub fn new() -> Self {
        let tokens: Vec<char> = BASE_TOKENS.chars().chain(std::iter::once(EXTENSION)).collect();
        let token_set: BTreeSet<char> = tokens.iter().copied().collect();
        let vowel_set: BTreeSet<char> = DEFAULT_VOWELS.chars().collect();
        debug_assert!(vowel_set.is_subset(&token_set));
        Self {
            tokens,
            token_set,
            vowel_set,
        }
    }

    /// Replace the vowel subset. Panics if a vowel is not an alphabet token.
    pub fn with_vowels(mut self, vowels: impl IntoIterator<Item = char>) -> Self {
        let vowel_set: BTreeSet<char> = vowels.into_iter().collect();
        assert!(
            vowel_set.is_subset(&self.token_set),
            "vowel set must be a subset of the alphabet"
        );
        self.vowel_set = vowel_set;
        self
    }

    pub fn tokens(&self) -> &[char] {
        &self.tokens
    }

    pub fn contains(&self, c: char) -> bool {
        self.token_set.contains(&c)
    }

    pub fn is_vowel(&self, c: char) -> bool {
        self.vowel_set.contains(&c)
    }

    pub fn vowels(&self) -> impl Iterator<Item = char> + '_ {
        self.vowel_set.iter().copied()
    }
}

impl Default for PhonemeAlphabet {
    fn default() -> Self {
        Self::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_alphabet_has_39_tokens_plus_extension() {
        let a = PhonemeAlphabet::new();
        assert_eq!(a.tokens().len(), 40);
        assert_eq!(BASE_TOKENS.chars().count(), 39);
        assert!(a.contains('@'));
        assert!(a.contains('p'));
        assert!(a.contains('O'));
        assert!(!a.contains('x'));
        assert!(!a.contains('\''));
    }

    #[test]
    fn default_vowels_are_a_subset() {
        let a = PhonemeAlphabet::new();
        for v in DEFAULT_VOWELS.chars() {
            assert!(a.is_vowel(v));
            assert!(a.contains(v));
        }
        assert!(!a.is_vowel('p'));
        assert!(!a.is_vowel('N'));
    }

    #[test]
    #[should_panic]
    fn non_alphabet_vowel_rejected() {
        PhonemeAlphabet::new().with_vowels(['a', 'x']);
    }
}
