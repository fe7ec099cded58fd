//! OEIS identifiers for the sequences that have one, with their offsets.

use crate::sequences::SeqName;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OeisEntry {
    pub id: String,
    pub offset: u64,
}

fn entry(number: u32, offset: u64) -> Option<OeisEntry> {
    Some(OeisEntry {
        id: format!("A{number:06}"),
        offset,
    })
}

/// Solutions of `A^k = I`, by `k` then `q = 2, 3, 4`.
const POWER_IDENTITY: [(u64, [u32; 3]); 11] = [
    (2, [53722, 53846, 53856]),
    (3, [53725, 53847, 53857]),
    (4, [53718, 53848, 53859]),
    (5, [53770, 53849, 53860]),
    (6, [53771, 53851, 53861]),
    (7, [53772, 53852, 53862]),
    (8, [53773, 53853, 53863]),
    (9, [53774, 53854, 0]),
    (10, [53775, 53855, 0]),
    (11, [53776, 0, 0]),
    (12, [53777, 0, 0]),
];

pub fn lookup(name: SeqName, q: u64, k: Option<u64>) -> Option<OeisEntry> {
    match (name, q) {
        (SeqName::All, 2) => entry(2416, 0),
        (SeqName::Invertible, 2) => entry(2884, 0),
        (SeqName::SubspacesTotal, 2..=8) => entry(6116 + (q - 2) as u32, 0),
        (SeqName::SubspacesTotal, 9..=24) => entry(15195 + (q - 9) as u32, 0),
        (SeqName::QbinomRow, 2..=24) => entry(22166 + (q - 2) as u32, 0),
        (SeqName::Qfactorial, 2) => entry(5329, 0),
        (SeqName::LinDerangement | SeqName::ProjDerangement, 2) => entry(2820, 2),
        (SeqName::Projection, 3) => entry(53846, 0),
        (SeqName::PowerIdentity, 2..=4) => {
            let k = k?;
            let (_, ids) = POWER_IDENTITY.iter().find(|(kk, _)| *kk == k)?;
            match ids[(q - 2) as usize] {
                0 => None,
                id => entry(id, 0),
            }
        }
        (SeqName::Nilpotent, 2) => entry(53763, 0),
        (SeqName::ConjclassesAll, 2) => entry(70933, 0),
        (SeqName::ConjclassesGl, 2) => entry(6951, 0),
        (SeqName::ConjclassesGl, 3) => entry(6952, 0),
        (SeqName::ConjclassesGl, 4) => entry(49314, 0),
        (SeqName::ConjclassesGl, 5) => entry(49315, 0),
        (SeqName::ConjclassesGl, 7) => entry(49316, 0),
        (SeqName::MaxClass, 2) => entry(70731, 1),
        (SeqName::MinCentralizer, 2) => entry(82877, 1),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn id(name: SeqName, q: u64, k: Option<u64>) -> Option<String> {
        lookup(name, q, k).map(|e| e.id)
    }

    #[test]
    fn known_ids() {
        assert_eq!(id(SeqName::Invertible, 2, None).as_deref(), Some("A002884"));
        assert_eq!(id(SeqName::SubspacesTotal, 8, None).as_deref(), Some("A006122"));
        assert_eq!(id(SeqName::SubspacesTotal, 9, None).as_deref(), Some("A015195"));
        assert_eq!(id(SeqName::QbinomRow, 24, None).as_deref(), Some("A022188"));
        assert_eq!(id(SeqName::PowerIdentity, 3, Some(8)).as_deref(), Some("A053853"));
        assert_eq!(id(SeqName::PowerIdentity, 4, Some(3)).as_deref(), Some("A053857"));
        assert_eq!(id(SeqName::PowerIdentity, 4, Some(9)), None);
        assert_eq!(id(SeqName::PowerIdentity, 2, None), None);
        assert_eq!(id(SeqName::Cyclic, 2, None), None);
        assert_eq!(lookup(SeqName::LinDerangement, 2, None).unwrap().offset, 2);
    }
}
