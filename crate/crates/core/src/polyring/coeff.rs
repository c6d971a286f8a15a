//! Exact coefficient arithmetic: arbitrary-precision rationals and prime
//! fields with a word-sized modulus.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;

/// Which exact field coefficients live in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    /// The rational numbers, with arbitrary-precision numerator/denominator.
    Rationals,
    /// The prime field `F_p`. The modulus must be prime and below `2^31`.
    Prime(u64),
}

impl FieldSpec {
    pub fn zero(self) -> Coefficient {
        self.from_i64(0)
    }

    pub fn one(self) -> Coefficient {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> Coefficient {
        match self {
            FieldSpec::Rationals => Coefficient::Rational(BigRational::from(BigInt::from(n))),
            FieldSpec::Prime(p) => {
                let r = n.rem_euclid(p as i64) as u64;
                Coefficient::Prime {
                    residue: r,
                    modulus: p,
                }
            }
        }
    }

    pub fn from_bigint(self, n: &BigInt) -> Coefficient {
        match self {
            FieldSpec::Rationals => Coefficient::Rational(BigRational::from(n.clone())),
            FieldSpec::Prime(p) => {
                let r = n.mod_floor(&BigInt::from(p));
                Coefficient::Prime {
                    residue: r.to_u64().expect("residue fits in u64"),
                    modulus: p,
                }
            }
        }
    }

    /// Short label used in reports and on the command line: `q` or `fp:P`.
    pub fn label(self) -> String {
        match self {
            FieldSpec::Rationals => "q".to_string(),
            FieldSpec::Prime(p) => format!("fp:{p}"),
        }
    }

    /// Inverse of [`FieldSpec::label`]. Validates primality of the modulus.
    pub fn parse_label(s: &str) -> Option<FieldSpec> {
        if s == "q" {
            return Some(FieldSpec::Rationals);
        }
        let p = s.strip_prefix("fp:")?.parse::<u64>().ok()?;
        if is_prime(p) && p < (1 << 31) {
            Some(FieldSpec::Prime(p))
        } else {
            None
        }
    }
}

/// Deterministic trial-division primality test, sufficient for word-sized moduli.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// An exact field element. Rationals are kept in lowest terms with positive
/// denominator; prime-field residues satisfy `0 <= r < p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Coefficient {
    Rational(BigRational),
    Prime { residue: u64, modulus: u64 },
}

impl Coefficient {
    pub fn field(&self) -> FieldSpec {
        match self {
            Coefficient::Rational(_) => FieldSpec::Rationals,
            Coefficient::Prime { modulus, .. } => FieldSpec::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coefficient::Rational(r) => r.is_zero(),
            Coefficient::Prime { residue, .. } => *residue == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coefficient::Rational(r) => r.is_one(),
            Coefficient::Prime { residue, .. } => *residue == 1,
        }
    }

    pub fn add(&self, other: &Coefficient) -> Coefficient {
        match (self, other) {
            (Coefficient::Rational(a), Coefficient::Rational(b)) => Coefficient::Rational(a + b),
            (
                Coefficient::Prime {
                    residue: a,
                    modulus: p,
                },
                Coefficient::Prime {
                    residue: b,
                    modulus: q,
                },
            ) => {
                assert_eq!(p, q, "coefficient moduli differ: {p} vs {q}");
                Coefficient::Prime {
                    residue: (a + b) % p,
                    modulus: *p,
                }
            }
            _ => panic!("mixed coefficient fields"),
        }
    }

    pub fn sub(&self, other: &Coefficient) -> Coefficient {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Coefficient {
        match self {
            Coefficient::Rational(a) => Coefficient::Rational(-a),
            Coefficient::Prime { residue, modulus } => Coefficient::Prime {
                residue: if *residue == 0 {
                    0
                } else {
                    modulus - residue
                },
                modulus: *modulus,
            },
        }
    }

    pub fn mul(&self, other: &Coefficient) -> Coefficient {
        match (self, other) {
            (Coefficient::Rational(a), Coefficient::Rational(b)) => Coefficient::Rational(a * b),
            (
                Coefficient::Prime {
                    residue: a,
                    modulus: p,
                },
                Coefficient::Prime {
                    residue: b,
                    modulus: q,
                },
            ) => {
                assert_eq!(p, q, "coefficient moduli differ: {p} vs {q}");
                Coefficient::Prime {
                    residue: ((*a as u128 * *b as u128) % *p as u128) as u64,
                    modulus: *p,
                }
            }
            _ => panic!("mixed coefficient fields"),
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Coefficient {
        match self {
            Coefficient::Rational(a) => {
                assert!(!a.is_zero(), "inverse of zero");
                Coefficient::Rational(a.recip())
            }
            Coefficient::Prime { residue, modulus } => {
                assert!(*residue != 0, "inverse of zero");
                // Fermat: a^(p-2) mod p
                Coefficient::Prime {
                    residue: mod_pow(*residue, modulus - 2, *modulus),
                    modulus: *modulus,
                }
            }
        }
    }

    pub fn div(&self, other: &Coefficient) -> Coefficient {
        self.mul(&other.inv())
    }

    pub fn pow(&self, mut e: u64) -> Coefficient {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// True when the printed representative carries a minus sign: negative
    /// rationals, or residues above `p/2` (printed balanced).
    pub fn is_negative_repr(&self) -> bool {
        match self {
            Coefficient::Rational(r) => r.is_negative(),
            Coefficient::Prime { residue, modulus } => *residue > modulus / 2,
        }
    }

    /// The printed magnitude: `|c|` for rationals, the balanced representative
    /// for prime fields.
    pub fn magnitude_string(&self) -> String {
        match self {
            Coefficient::Rational(r) => r.abs().to_string(),
            Coefficient::Prime { residue, modulus } => {
                if *residue > modulus / 2 {
                    (modulus - residue).to_string()
                } else {
                    residue.to_string()
                }
            }
        }
    }

    /// Magnitude is exactly one (so the coefficient is omitted when printing
    /// a nonconstant term).
    pub fn is_unit_magnitude(&self) -> bool {
        match self {
            Coefficient::Rational(r) => r.abs().is_one(),
            Coefficient::Prime { residue, modulus } => {
                *residue == 1 || (*residue != 0 && *residue == modulus - 1)
            }
        }
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_negative_repr() {
            write!(f, "-{}", self.magnitude_string())
        } else {
            write!(f, "{}", self.magnitude_string())
        }
    }
}

fn mod_pow(base: u64, mut exp: u64, modulus: u64) -> u64 {
    let m = modulus as u128;
    let mut acc: u128 = 1;
    let mut b = base as u128 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_labels_round_trip() {
        for f in [FieldSpec::Rationals, FieldSpec::Prime(32003)] {
            assert_eq!(FieldSpec::parse_label(&f.label()), Some(f));
        }
        assert_eq!(FieldSpec::parse_label("fp:32004"), None); // composite
        assert_eq!(FieldSpec::parse_label("r"), None);
    }

    #[test]
    fn primality() {
        assert!(is_prime(2));
        assert!(is_prime(32003));
        assert!(!is_prime(1));
        assert!(!is_prime(32001)); // 3 * 10667
    }

    #[test]
    fn inverses_of_random_nonzero_elements() {
        // a * a^-1 = 1 for 1000 pseudo-random nonzero elements in each field.
        for field in [FieldSpec::Rationals, FieldSpec::Prime(32003)] {
            let mut state = 0x2545F4914F6CDD1Du64;
            for _ in 0..1000 {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let n = (state >> 33) as i64 - (1 << 30);
                let d = ((state & 0xffff) as i64) + 1;
                let a = field.from_i64(n).div(&field.from_i64(d));
                if a.is_zero() {
                    continue;
                }
                assert!(a.mul(&a.inv()).is_one(), "{a} * {a}^-1 != 1");
            }
        }
    }

    #[test]
    fn rational_normalization_is_idempotent() {
        let a = FieldSpec::Rationals.from_i64(6).div(&FieldSpec::Rationals.from_i64(-4));
        match &a {
            Coefficient::Rational(r) => {
                assert_eq!(r.numer(), &BigInt::from(-3));
                assert_eq!(r.denom(), &BigInt::from(2));
            }
            _ => unreachable!(),
        }
        assert_eq!(a, a.clone().add(&FieldSpec::Rationals.zero()));
    }

    #[test]
    fn prime_field_residues_stay_reduced() {
        let p = FieldSpec::Prime(7);
        let a = p.from_i64(-1);
        assert_eq!(
            a,
            Coefficient::Prime {
                residue: 6,
                modulus: 7
            }
        );
        assert!(a.mul(&a).is_one());
        assert_eq!(p.from_i64(3).pow(6), p.one()); // Fermat
    }
}
