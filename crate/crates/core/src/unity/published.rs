//! Multiplication tables of the pseudo-operator groups as they were first
//! printed, kept verbatim (misprints included) so computed tables can be
//! audited against them cell by cell.

use alloc::vec::Vec;

use super::{multiplication_table, negative_nth_roots, parse_label, GroupTable, Notation, Rotor};

/// The groups (and one non-group) the CLI can tabulate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NamedGroup {
    /// `{+1, ⁄1, ∖1}`
    R3,
    /// `{𝕴, ⁄𝕴, ∖𝕴}`, not closed under multiplication.
    C3,
    /// `{+1, ⊤1, ⊥1, ⊣1}`
    R4,
    /// `{𝕵, ⊥𝕵, ⊤𝕵, ⊣𝕵}`, not closed under multiplication.
    C4,
    /// `R3 ∪ C3`, the cyclic group generated by `𝕴`.
    Union3,
    /// `R4 ∪ C4`, the cyclic group generated by `𝕵`.
    Union8,
}

const R3_ORDER: [Rotor; 3] = [Rotor::IDENTITY, Rotor::SLASH, Rotor::ASLASH];
const R4_ORDER: [Rotor; 4] = [Rotor::IDENTITY, Rotor::TOP, Rotor::PERP, Rotor::DASHV];

const R3_TABLE: &[&[&str]] = &[
    &["+1", "/1", "\\1"],
    &["/1", "\\1", "+1"],
    &["\\1", "+1", "/1"],
];

const UNION3_TABLE: &[&[&str]] = &[
    &["+1", "/1", "\\1", "+I", "/I", "\\I"],
    &["/1", "\\1", "+1", "/I", "\\I", "+I"],
    &["\\1", "+1", "/1", "\\I", "+I", "/I"],
    &["+I", "/I", "\\I", "/1", "\\1", "+1"],
    &["/I", "\\I", "+I", "\\1", "+1", "/1"],
    &["\\I", "+I", "/I", "1", "/1", "\\1"],
];

const R4_TABLE: &[&[&str]] = &[
    &["+1", "~1", "_1", "=1"],
    &["~1", "=1", "+1", "_1"],
    &["_1", "+1", "=1", "~1"],
    &["=1", "_1", "~1", "+1"],
];

const UNION8_TABLE: &[&[&str]] = &[
    &["+1", "~1", "_1", "=1", "+J", "~J", "_J", "=J"],
    &["~1", "=1", "+1", "_1", "~J", "=J", "+J", "_J"],
    &["_1", "+1", "=1", "~1", "_J", "+I", "=I", "~I"],
    &["=1", "_1", "~1", "+1", "=J", "_J", "~J", "+I"],
    &["+J", "~J", "_J", "=J", "_1", "+1", "=1", "~1"],
    &["~J", "=J", "+J", "_J", "+1", "~1", "_1", "=1"],
    &["_J", "+J", "=J", "~I", "=1", "_1", "~1", "+1"],
    &["=J", "_J", "~J", "+J", "~1", "=1", "+1", "_1"],
];

impl NamedGroup {
    pub const ALL: [NamedGroup; 6] = [
        NamedGroup::R3,
        NamedGroup::C3,
        NamedGroup::R4,
        NamedGroup::C4,
        NamedGroup::Union3,
        NamedGroup::Union8,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NamedGroup::R3 => "R3",
            NamedGroup::C3 => "C3",
            NamedGroup::R4 => "R4",
            NamedGroup::C4 => "C4",
            NamedGroup::Union3 => "union3",
            NamedGroup::Union8 => "union8",
        }
    }

    pub fn from_name(name: &str) -> Option<NamedGroup> {
        NamedGroup::ALL.into_iter().find(|g| g.name() == name)
    }

    pub fn notation(self) -> Notation {
        match self {
            NamedGroup::R3 | NamedGroup::C3 | NamedGroup::Union3 => Notation::Ternary,
            NamedGroup::R4 | NamedGroup::C4 | NamedGroup::Union8 => Notation::Quaternary,
        }
    }

    /// Elements in the row/column order of the printed tables.
    pub fn elements(self) -> Vec<Rotor> {
        let c3 = || R3_ORDER.iter().map(|&op| op * Rotor::PSEUDO_I);
        let c4 = || R4_ORDER.iter().map(|&op| op * Rotor::PSEUDO_J);
        match self {
            NamedGroup::R3 => R3_ORDER.to_vec(),
            NamedGroup::C3 => negative_nth_roots(3).unwrap_or_default(),
            NamedGroup::R4 => R4_ORDER.to_vec(),
            NamedGroup::C4 => [Rotor::IDENTITY, Rotor::PERP, Rotor::TOP, Rotor::DASHV]
                .iter()
                .map(|&op| op * Rotor::PSEUDO_J)
                .collect(),
            NamedGroup::Union3 => R3_ORDER.iter().copied().chain(c3()).collect(),
            NamedGroup::Union8 => R4_ORDER.iter().copied().chain(c4()).collect(),
        }
    }

    /// The printed table, if one exists for this set.
    pub fn published(self) -> Option<&'static [&'static [&'static str]]> {
        match self {
            NamedGroup::R3 => Some(R3_TABLE),
            NamedGroup::R4 => Some(R4_TABLE),
            NamedGroup::Union3 => Some(UNION3_TABLE),
            NamedGroup::Union8 => Some(UNION8_TABLE),
            NamedGroup::C3 | NamedGroup::C4 => None,
        }
    }

    pub fn table(self) -> GroupTable {
        multiplication_table(&self.elements()).expect("named groups have distinct elements")
    }
}

/// A cell where the printed product differs from the computed one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Discrepancy {
    pub row: Rotor,
    pub column: Rotor,
    pub published: &'static str,
    pub computed: Rotor,
    /// True when swapping the letters `I` and `J` in the printed label gives
    /// the computed product.
    pub letter_swap: bool,
}

/// Compares every printed cell with the computed product. Returns `None`
/// for sets that have no printed table.
pub fn compare_published(group: NamedGroup) -> Option<Vec<Discrepancy>> {
    let printed = group.published()?;
    let elements = group.elements();
    let mut found = Vec::new();
    for (i, &row) in elements.iter().enumerate() {
        for (j, &column) in elements.iter().enumerate() {
            let label = printed[i][j];
            let computed = row * column;
            if parse_label(label) == Some(computed) {
                continue;
            }
            let swapped: Vec<u8> = label
                .bytes()
                .map(|b| match b {
                    b'I' => b'J',
                    b'J' => b'I',
                    other => other,
                })
                .collect();
            let letter_swap =
                core::str::from_utf8(&swapped).ok().and_then(parse_label) == Some(computed);
            found.push(Discrepancy {
                row,
                column,
                published: label,
                computed,
                letter_swap,
            });
        }
    }
    Some(found)
}
