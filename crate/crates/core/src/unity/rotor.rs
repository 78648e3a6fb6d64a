use alloc::format;
use alloc::string::String;
use core::cmp::Ordering;
use core::f64::consts::FRAC_PI_2;
use core::fmt;
use core::ops::Mul;

use num_integer::Integer;

use super::UnityError;
use crate::Complex;

/// An exact root of unity, `exp(2πi · num/den)`, stored as a reduced
/// fraction of a full turn.
///
/// The representation is always canonical: `0 <= num < den` and
/// `gcd(num, den) == 1`, so derived equality is equality of rotations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Rotor {
    num: u64,
    den: u64,
}

impl Rotor {
    /// The identity rotation, `+1`.
    pub const IDENTITY: Rotor = Rotor { num: 0, den: 1 };
    /// `⁄1 = exp(2πi/3)`.
    pub const SLASH: Rotor = Rotor { num: 1, den: 3 };
    /// `∖1 = exp(4πi/3)`.
    pub const ASLASH: Rotor = Rotor { num: 2, den: 3 };
    /// `⊥1 = i`.
    pub const PERP: Rotor = Rotor { num: 1, den: 4 };
    /// `⊤1 = -i`.
    pub const TOP: Rotor = Rotor { num: 3, den: 4 };
    /// `⊣1 = -1`.
    pub const DASHV: Rotor = Rotor { num: 1, den: 2 };
    /// Pseudo-complex `𝕴 = exp(iπ/3)`.
    pub const PSEUDO_I: Rotor = Rotor { num: 1, den: 6 };
    /// Pseudo-complex `𝕵 = exp(iπ/4)`.
    pub const PSEUDO_J: Rotor = Rotor { num: 1, den: 8 };

    /// Builds the rotor for `num/den` of a full turn, reducing it to
    /// canonical form.
    pub fn new(num: i64, den: u64) -> Result<Self, UnityError> {
        if den == 0 {
            return Err(UnityError::InvalidOrder);
        }
        let num = (num as i128).rem_euclid(den as i128) as u128;
        Ok(Self::reduce(num, den as u128))
    }

    fn reduce(num: u128, den: u128) -> Self {
        let num = num % den;
        let g = num.gcd(&den);
        let (num, den) = (num / g, den / g);
        // Only reachable when multiplying rotors whose reduced
        // denominators have an lcm above u64::MAX.
        let den = u64::try_from(den).expect("rotor denominator overflow");
        Rotor {
            num: num as u64,
            den,
        }
    }

    pub fn numerator(self) -> u64 {
        self.num
    }

    pub fn denominator(self) -> u64 {
        self.den
    }

    /// Multiplicative order of the rotor; equal to the reduced denominator.
    pub fn order(self) -> u64 {
        self.den
    }

    /// Fraction of a full turn in `[0, 1)`.
    pub fn turns(self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// The point `(cos, sin)` of `2π · num/den`.
    ///
    /// The angle is split into whole quarter turns and a remainder below
    /// `π/2`, so rotors on the axes evaluate to exact `0` and `±1`
    /// components.
    pub fn value(self) -> Complex {
        let scaled = 4 * self.num as u128;
        let den = self.den as u128;
        let quarter = scaled / den;
        let rem = scaled % den;
        let theta = FRAC_PI_2 * (rem as f64 / self.den as f64);
        let (s, c) = (libm::sin(theta), libm::cos(theta));
        match quarter {
            0 => Complex::new(c, s),
            1 => Complex::new(-s, c),
            2 => Complex::new(-c, -s),
            _ => Complex::new(s, -c),
        }
    }

    /// `self^k` for any integer `k`, computed exactly on the turn fraction.
    pub fn pow(self, k: i64) -> Rotor {
        let num = (self.num as i128 * k as i128).rem_euclid(self.den as i128);
        Self::reduce(num as u128, self.den as u128)
    }

    pub fn inverse(self) -> Rotor {
        Rotor {
            num: (self.den - self.num) % self.den,
            den: self.den,
        }
    }
}

impl Default for Rotor {
    fn default() -> Self {
        Rotor::IDENTITY
    }
}

impl Mul for Rotor {
    type Output = Rotor;

    fn mul(self, rhs: Rotor) -> Rotor {
        let (a, b) = (self.den as u128, rhs.den as u128);
        let num = self.num as u128 * b + rhs.num as u128 * a;
        Rotor::reduce(num, a * b)
    }
}

/// Rotors order by their angle in `[0, 2π)`.
impl Ord for Rotor {
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = self.num as u128 * other.den as u128;
        let rhs = other.num as u128 * self.den as u128;
        lhs.cmp(&rhs)
    }
}

impl PartialOrd for Rotor {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Rotor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "rot({},{})", self.num, self.den)
    }
}

/// Which family of glyphs to use when naming rotors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Notation {
    /// `+ / \` acting on `1` and `I`; covers the sixth roots of unity.
    Ternary,
    /// `+ _ ~ =` acting on `1` and `J`; covers the eighth roots of unity.
    Quaternary,
}

const TERNARY_OPS: [(&str, Rotor); 3] = [
    ("+", Rotor::IDENTITY),
    ("/", Rotor::SLASH),
    ("\\", Rotor::ASLASH),
];
const QUATERNARY_OPS: [(&str, Rotor); 4] = [
    ("+", Rotor::IDENTITY),
    ("_", Rotor::PERP),
    ("~", Rotor::TOP),
    ("=", Rotor::DASHV),
];

impl Notation {
    fn ops(self) -> &'static [(&'static str, Rotor)] {
        match self {
            Notation::Ternary => &TERNARY_OPS,
            Notation::Quaternary => &QUATERNARY_OPS,
        }
    }

    fn bases(self) -> [(&'static str, Rotor); 2] {
        match self {
            Notation::Ternary => [("1", Rotor::IDENTITY), ("I", Rotor::PSEUDO_I)],
            Notation::Quaternary => [("1", Rotor::IDENTITY), ("J", Rotor::PSEUDO_J)],
        }
    }

    /// ASCII label such as `/1`, `\I` or `_J`; rotors outside the notation
    /// fall back to `rot(k,n)`.
    pub fn label(self, rotor: Rotor) -> String {
        for (base_glyph, base) in self.bases() {
            for &(op_glyph, op) in self.ops() {
                if op * base == rotor {
                    return format!("{op_glyph}{base_glyph}");
                }
            }
        }
        format!("{rotor}")
    }
}

/// Reads a label of the form `[op]base` with `op` one of `+ / \ _ ~ =`
/// (or absent, meaning `+`) and `base` one of `1`, `I`, `J`.
pub fn parse_label(label: &str) -> Option<Rotor> {
    let mut chars = label.trim().chars();
    let (op, base) = match (chars.next(), chars.next(), chars.next()) {
        (Some(base), None, None) => ('+', base),
        (Some(op), Some(base), None) => (op, base),
        _ => return None,
    };
    let op = match op {
        '+' => Rotor::IDENTITY,
        '/' => Rotor::SLASH,
        '\\' => Rotor::ASLASH,
        '_' => Rotor::PERP,
        '~' => Rotor::TOP,
        '=' | '-' => Rotor::DASHV,
        _ => return None,
    };
    let base = match base {
        '1' => Rotor::IDENTITY,
        'I' => Rotor::PSEUDO_I,
        'J' => Rotor::PSEUDO_J,
        _ => return None,
    };
    Some(op * base)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: Complex, b: Complex, tol: f64) -> bool {
        (a - b).norm() <= tol
    }

    #[test]
    fn canonical_form() {
        let r = Rotor::new(-1, 4).unwrap();
        assert_eq!(r, Rotor::TOP);
        let r = Rotor::new(6, 8).unwrap();
        assert_eq!((r.numerator(), r.denominator()), (3, 4));
        assert_eq!(Rotor::new(5, 5).unwrap(), Rotor::IDENTITY);
        assert_eq!(Rotor::new(1, 0), Err(UnityError::InvalidOrder));
    }

    #[test]
    fn values_of_named_rotors() {
        assert_eq!(Rotor::IDENTITY.value(), Complex::new(1.0, 0.0));
        assert_eq!(Rotor::PERP.value(), Complex::new(0.0, 1.0));
        assert_eq!(Rotor::DASHV.value(), Complex::new(-1.0, 0.0));
        assert_eq!(Rotor::TOP.value(), Complex::new(0.0, -1.0));
        let slash = Complex::new(-0.5, 3f64.sqrt() / 2.0);
        assert!(close(Rotor::SLASH.value(), slash, 1e-15));
        assert!(close(Rotor::ASLASH.value(), slash.conj(), 1e-15));
        let j = Complex::new(1.0, 1.0) * (2f64.sqrt() / 2.0);
        assert!(close(Rotor::PSEUDO_J.value(), j, 1e-15));
    }

    #[test]
    fn product_table_entries() {
        assert_eq!(Rotor::SLASH * Rotor::SLASH, Rotor::ASLASH);
        assert_eq!(Rotor::PERP * Rotor::TOP, Rotor::IDENTITY);
        assert_eq!(Rotor::PSEUDO_I * Rotor::PSEUDO_I, Rotor::SLASH);
        assert_eq!(Rotor::PSEUDO_J * Rotor::PSEUDO_J, Rotor::PERP);
        let x = Rotor::new(3, 7).unwrap();
        assert_eq!(x * Rotor::IDENTITY, x);
    }

    #[test]
    fn powers() {
        assert_eq!(Rotor::SLASH.pow(3), Rotor::IDENTITY);
        assert_eq!(Rotor::ASLASH.pow(3), Rotor::IDENTITY);
        assert_eq!(Rotor::PSEUDO_I.pow(3), Rotor::DASHV);
        assert_eq!(Rotor::PSEUDO_J.pow(4), Rotor::DASHV);
        assert_eq!(Rotor::PSEUDO_J.pow(-1), Rotor::new(7, 8).unwrap());
        assert_eq!(Rotor::SLASH.pow(-1), Rotor::SLASH.inverse());
    }

    #[test]
    fn exhaustive_group_laws_small_denominators() {
        let mut all = alloc::vec::Vec::new();
        for den in 1..=24u64 {
            for num in 0..den {
                let r = Rotor::new(num as i64, den).unwrap();
                if r.denominator() == den {
                    all.push(r);
                }
            }
        }
        for &a in &all {
            assert_eq!(a.pow(a.denominator() as i64), Rotor::IDENTITY);
            assert!((a.value().norm() - 1.0).abs() <= 1e-15);
            for &b in &all {
                assert_eq!(a * b, b * a);
                let lhs = (a * b).value();
                let rhs = a.value() * b.value();
                assert!(close(lhs, rhs, 1e-14), "{a} * {b}");
            }
        }
        for &a in &all {
            for &b in &all {
                for &c in &all {
                    assert_eq!((a * b) * c, a * (b * c));
                }
            }
        }
    }

    #[test]
    fn labels_round_trip() {
        for n in 0..6 {
            let r = Rotor::new(n, 6).unwrap();
            assert_eq!(parse_label(&Notation::Ternary.label(r)), Some(r));
        }
        for n in 0..8 {
            let r = Rotor::new(n, 8).unwrap();
            assert_eq!(parse_label(&Notation::Quaternary.label(r)), Some(r));
        }
        assert_eq!(Notation::Ternary.label(Rotor::DASHV), "/I");
        assert_eq!(Notation::Quaternary.label(Rotor::DASHV), "=1");
        assert_eq!(Notation::Ternary.label(Rotor::PERP), "rot(1,4)");
        assert_eq!(parse_label("1"), Some(Rotor::IDENTITY));
        assert_eq!(parse_label("?1"), None);
    }
}
