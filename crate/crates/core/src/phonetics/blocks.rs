use super::PhonemeSequence;

/// The three prosodic blocks derived from one sample's lines: all lines in
/// order (monorhyme), the odd lines, and the even lines (alternate rhyme).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProsodicBlockSet {
    pub b_m: Vec<char>,
    pub b_o: Vec<char>,
    pub b_e: Vec<char>,
    /// Distinct identifiers for the three blocks, in (m, o, e) order.
    pub scheme_ids: [String; 3],
}

impl ProsodicBlockSet {
    pub fn blocks(&self) -> [(&str, &[char]); 3] {
        [
            (self.scheme_ids[0].as_str(), self.b_m.as_slice()),
            (self.scheme_ids[1].as_str(), self.b_o.as_slice()),
            (self.scheme_ids[2].as_str(), self.b_e.as_slice()),
        ]
    }
}

/// Build the three blocks from a sample's lines. Line 1 is odd.
pub fn build_prosodic_blocks(lines: &[PhonemeSequence]) -> ProsodicBlockSet {
    assert!(!lines.is_empty(), "need at least one line");
    let mut b_m = Vec::new();
    let mut b_o = Vec::new();
    let mut b_e = Vec::new();
    for (i, line) in lines.iter().enumerate() {
        let flat = line.flat();
        b_m.extend_from_slice(&flat);
        if i % 2 == 0 {
            b_o.extend_from_slice(&flat);
        } else {
            b_e.extend_from_slice(&flat);
        }
    }
    let base: String = lines
        .iter()
        .map(|l| l.line_id.as_str())
        .collect::<Vec<_>>()
        .join("+");
    ProsodicBlockSet {
        b_m,
        b_o,
        b_e,
        scheme_ids: [format!("{base}:m"), format!("{base}:o"), format!("{base}:e")],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::phonetics::{tokenize_transcription, PhonemeAlphabet};
    use proptest::prelude::*;
    use std::collections::BTreeMap;

    fn table2_lines() -> Vec<PhonemeSequence> {
        let a = PhonemeAlphabet::new();
        [
            "p,Ut It t@g,ED3 hIms'Elf",
            "n'aU D@ p'IktS3 k@n'Ekts",
            "n'Ev3r- 'aaskIN fO@ s'Vmw0nz h'Elp",
            "t@ gEt s,Vm rI2sp'Ekt",
        ]
        .iter()
        .enumerate()
        .map(|(i, raw)| tokenize_transcription(raw, &a, format!("p{}", i + 1)))
        .collect()
    }

    fn multiset(tokens: &[char]) -> BTreeMap<char, usize> {
        let mut m = BTreeMap::new();
        for &t in tokens {
            *m.entry(t).or_insert(0) += 1;
        }
        m
    }

    #[test]
    fn table2_odd_even_split() {
        let lines = table2_lines();
        let set = build_prosodic_blocks(&lines);
        let mut expect_o = lines[0].flat();
        expect_o.extend(lines[2].flat());
        let mut expect_e = lines[1].flat();
        expect_e.extend(lines[3].flat());
        assert_eq!(set.b_o, expect_o);
        assert_eq!(set.b_e, expect_e);
    }

    #[test]
    fn single_line_has_empty_even_block() {
        let lines = &table2_lines()[..1];
        let set = build_prosodic_blocks(lines);
        assert!(set.b_e.is_empty());
        assert_eq!(set.b_m, set.b_o);
    }

    #[test]
    fn scheme_ids_are_distinct() {
        let set = build_prosodic_blocks(&table2_lines());
        assert_ne!(set.scheme_ids[0], set.scheme_ids[1]);
        assert_ne!(set.scheme_ids[1], set.scheme_ids[2]);
    }

    proptest! {
        #[test]
        fn multiset_disjoint_union_holds(raw in proptest::collection::vec("[a-zA-Z0-9',@ -]{0,30}", 1..8)) {
            let a = PhonemeAlphabet::new();
            let lines: Vec<PhonemeSequence> = raw
                .iter()
                .enumerate()
                .map(|(i, r)| tokenize_transcription(r, &a, format!("l{i}")))
                .collect();
            let set = build_prosodic_blocks(&lines);
            let mut combined = multiset(&set.b_o);
            for (k, v) in multiset(&set.b_e) {
                *combined.entry(k).or_insert(0) += v;
            }
            prop_assert_eq!(multiset(&set.b_m), combined);
        }
    }
}
