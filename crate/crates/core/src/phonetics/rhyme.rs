use super::{PhonemeAlphabet, PhonemeSequence};

/// Number of matching vowel phonemes at the ends of two lines: the longest
/// common suffix of their vowel-only projections.
pub fn end_rhyme(a: &PhonemeSequence, b: &PhonemeSequence, alphabet: &PhonemeAlphabet) -> usize {
    let va = a.vowel_projection(alphabet);
    let vb = b.vowel_projection(alphabet);
    va.iter()
        .rev()
        .zip(vb.iter().rev())
        .take_while(|(x, y)| x == y)
        .count()
}

fn vowels_of(word: &[char], alphabet: &PhonemeAlphabet) -> Vec<char> {
    word.iter().copied().filter(|&c| alphabet.is_vowel(c)).collect()
}

/// Average per-word length of the longest vowel suffix of the word that
/// occurs contiguously in the vowel stream of the previous `lookback_words`
/// words. Occurrences overlapping a vowel contributed by a word identical to
/// the current one are excluded, so repeated words do not rhyme with
/// themselves.
pub fn rhyme_density(
    verse: &[PhonemeSequence],
    lookback_words: usize,
    alphabet: &PhonemeAlphabet,
) -> f64 {
    // line breaks are irrelevant: the metric runs over the verse's word stream
    let words: Vec<&Vec<char>> = verse.iter().flat_map(|l| l.words.iter()).collect();
    if words.is_empty() {
        return 0.0;
    }
    let projections: Vec<Vec<char>> = words.iter().map(|w| vowels_of(w, alphabet)).collect();

    let mut total = 0usize;
    for i in 0..words.len() {
        let window_start = i.saturating_sub(lookback_words);
        let mut stream = Vec::new();
        let mut owner = Vec::new();
        for j in window_start..i {
            for &v in &projections[j] {
                stream.push(v);
                owner.push(j);
            }
        }
        let proj = &projections[i];
        let mut best = 0usize;
        'lengths: for len in (1..=proj.len()).rev() {
            if len > stream.len() {
                continue;
            }
            let suffix = &proj[proj.len() - len..];
            'starts: for s in 0..=stream.len() - len {
                for k in 0..len {
                    if stream[s + k] != suffix[k] || words[owner[s + k]] == words[i] {
                        continue 'starts;
                    }
                }
                best = len;
                break 'lengths;
            }
        }
        total += best;
    }
    total as f64 / words.len() as f64
}
