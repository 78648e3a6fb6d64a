use alloc::vec::Vec;

use super::{Rotor, UnityError};

/// Outcome of checking the group axioms exhaustively on a finite set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct AxiomReport {
    pub closure: bool,
    pub associativity: bool,
    pub identity: bool,
    pub inverses: bool,
}

impl AxiomReport {
    pub fn is_group(&self) -> bool {
        self.closure && self.associativity && self.identity && self.inverses
    }
}

/// Cayley table of a finite set of rotors.
///
/// `products[i][j]` indexes into `elements` when `elements[i] * elements[j]`
/// lies in the set and is `None` otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    elements: Vec<Rotor>,
    products: Vec<Vec<Option<usize>>>,
    axioms: AxiomReport,
}

impl GroupTable {
    pub fn elements(&self) -> &[Rotor] {
        &self.elements
    }

    pub fn products(&self) -> &[Vec<Option<usize>>] {
        &self.products
    }

    pub fn axioms(&self) -> AxiomReport {
        self.axioms
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// The product rotor of row `i` and column `j`, whether or not it is in
    /// the set.
    pub fn product(&self, i: usize, j: usize) -> Rotor {
        self.elements[i] * self.elements[j]
    }
}

/// Builds the table from [`Rotor`] multiplication and checks closure,
/// associativity, identity and inverses over every element (and triple).
///
/// A set that is not closed is still tabulated; the failure shows up in
/// the axiom report.
pub fn multiplication_table(elements: &[Rotor]) -> Result<GroupTable, UnityError> {
    if elements.is_empty() {
        return Err(UnityError::EmptyElements);
    }
    for (i, a) in elements.iter().enumerate() {
        if elements[..i].contains(a) {
            return Err(UnityError::DuplicateElements(*a));
        }
    }
    let index_of = |r: Rotor| elements.iter().position(|&e| e == r);
    let products: Vec<Vec<Option<usize>>> = elements
        .iter()
        .map(|&a| elements.iter().map(|&b| index_of(a * b)).collect())
        .collect();

    let closure = products.iter().flatten().all(Option::is_some);
    let associativity = elements.iter().all(|&a| {
        elements
            .iter()
            .all(|&b| elements.iter().all(|&c| (a * b) * c == a * (b * c)))
    });
    let identity_element = elements
        .iter()
        .copied()
        .find(|&e| elements.iter().all(|&x| e * x == x && x * e == x));
    let inverses = identity_element.is_some_and(|e| {
        elements
            .iter()
            .all(|&x| elements.iter().any(|&y| x * y == e && y * x == e))
    });

    Ok(GroupTable {
        elements: elements.to_vec(),
        products,
        axioms: AxiomReport {
            closure,
            associativity,
            identity: identity_element.is_some(),
            inverses,
        },
    })
}
