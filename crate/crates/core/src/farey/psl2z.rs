use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::rational::ExtendedRational;
use crate::geometry::MoebiusMap;

/// An element of PSL(2, Z): the integer matrix `(a b; c d)` with `ad - bc = 1`,
/// acting exactly on the rational projective line.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntegerMoebius {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl IntegerMoebius {
    /// Returns `None` unless the determinant is 1.
    pub fn new(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Option<Self> {
        if (&a * &d - &b * &c).is_one() {
            Some(IntegerMoebius { a, b, c, d })
        } else {
            None
        }
    }

    pub fn identity() -> Self {
        IntegerMoebius {
            a: BigInt::one(),
            b: BigInt::zero(),
            c: BigInt::zero(),
            d: BigInt::one(),
        }
    }

    pub fn translation(n: impl Into<BigInt>) -> Self {
        IntegerMoebius {
            a: BigInt::one(),
            b: n.into(),
            c: BigInt::zero(),
            d: BigInt::one(),
        }
    }

    pub fn det(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn apply(&self, x: &ExtendedRational) -> ExtendedRational {
        let (p, q) = (x.numer(), x.denom());
        ExtendedRational::new(&self.a * &p + &self.b * &q, &self.c * &p + &self.d * &q)
            .expect("unimodular maps send reduced fractions to nonzero pairs")
    }

    pub fn inverse(&self) -> Self {
        IntegerMoebius {
            a: self.d.clone(),
            b: -&self.b,
            c: -&self.c,
            d: self.a.clone(),
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, o: &Self) -> Self {
        IntegerMoebius {
            a: &self.a * &o.a + &self.b * &o.c,
            b: &self.a * &o.b + &self.b * &o.d,
            c: &self.c * &o.a + &self.d * &o.c,
            d: &self.c * &o.b + &self.d * &o.d,
        }
    }

    pub fn to_real(&self) -> MoebiusMap {
        let f = |x: &BigInt| x.to_f64().expect("finite entries");
        MoebiusMap::from_entries_unchecked(f(&self.a), f(&self.b), f(&self.c), f(&self.d))
    }
}

/// Canonical element of PSL(2, Z) sending `p` to infinity.
///
/// For `p = a/c` the bottom row is `(c, -a)`; the top row comes from the
/// penultimate convergent `p'/q'` of the continued-fraction expansion of `p`
/// (floor convention), which satisfies `a q' - p' c = ±1`.
pub fn normalizer_to_infinity(p: &ExtendedRational) -> IntegerMoebius {
    let ExtendedRational::Finite(r) = p else {
        return IntegerMoebius::identity();
    };
    let (a, c) = (r.numer().clone(), r.denom().clone());

    // Convergents h_k / k_k with h_{-1} = 1, k_{-1} = 0, h_{-2} = 0, k_{-2} = 1.
    let (mut h_prev, mut h) = (BigInt::zero(), BigInt::one());
    let (mut k_prev, mut k) = (BigInt::one(), BigInt::zero());
    let (mut num, mut den) = (a.clone(), c.clone());
    while !den.is_zero() {
        let (quot, rem) = num.div_mod_floor(&den);
        let h_next = &quot * &h + &h_prev;
        let k_next = &quot * &k + &k_prev;
        h_prev = std::mem::replace(&mut h, h_next);
        k_prev = std::mem::replace(&mut k, k_next);
        num = std::mem::replace(&mut den, rem);
    }
    debug_assert_eq!((&h, &k), (&a, &c));
    let (pp, qp) = (h_prev, k_prev);
    let m = if (&a * &qp - &pp * &c).is_positive() {
        IntegerMoebius { a: -qp, b: pp, c: c.clone(), d: -a.clone() }
    } else {
        IntegerMoebius { a: qp, b: -pp, c: c.clone(), d: -a.clone() }
    };
    debug_assert!(m.det().is_one());
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> ExtendedRational {
        s.parse().unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(normalizer_to_infinity(&q("1/0")), IntegerMoebius::identity());
        let zero = normalizer_to_infinity(&q("0"));
        assert_eq!(
            (zero.a.clone(), zero.b.clone(), zero.c.clone(), zero.d.clone()),
            (0.into(), (-1).into(), 1.into(), 0.into())
        );
        let half = normalizer_to_infinity(&q("1/2"));
        assert!(half.det().is_one());
        assert_eq!(half.apply(&q("1/2")), ExtendedRational::Infinity);
    }

    /// Exhaustive small-entry search: every determinant-one matrix with entries
    /// in [-4, 4] sending 1/2 to infinity has bottom row ±(2, -1).
    #[test]
    fn half_matches_small_entry_search() {
        let mut found = Vec::new();
        for a in -4i64..=4 {
            for b in -4i64..=4 {
                for c in -4i64..=4 {
                    for d in -4i64..=4 {
                        if a * d - b * c == 1 && c + 2 * d == 0 {
                            found.push((a, b, c, d));
                        }
                    }
                }
            }
        }
        assert!(!found.is_empty());
        let m = normalizer_to_infinity(&q("1/2"));
        let row = (m.c.to_i64().unwrap(), m.d.to_i64().unwrap());
        assert!(found.iter().any(|&(_, _, c, d)| (c, d) == row));
    }

    #[test]
    fn sends_vertices_to_infinity() {
        for s in ["3/7", "-5/3", "13/8", "-1", "4", "0", "-21/34"] {
            let p = q(s);
            let m = normalizer_to_infinity(&p);
            assert!(m.det().is_one(), "{s}");
            assert_eq!(m.apply(&p), ExtendedRational::Infinity, "{s}");
            assert_eq!(m.inverse().apply(&ExtendedRational::Infinity), p);
        }
    }
}
