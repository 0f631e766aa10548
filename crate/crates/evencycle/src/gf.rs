//! Exact arithmetic in small finite fields `GF(p^e)`.
//!
//! The geometric constructions only ever need prime powers up to `q = 32`,
//! so everything here favours simplicity and reproducibility over speed:
//! elements are plain coefficient vectors, every operation reduces eagerly,
//! and the default irreducible moduli come from a fixed table so that the
//! vertex orderings derived from field element orderings never change
//! between runs or platforms.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GfError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus has degree {got}, expected {expected}")]
    WrongModulusDegree { got: usize, expected: usize },
    #[error("modulus is reducible over GF({p})")]
    ReducibleModulus { p: u64 },
    #[error("no built-in modulus for field order {q}")]
    UnsupportedOrder { q: u64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("field order {q} is not of the form 2^(2e+1)")]
    WrongFieldOrder { q: u64 },
}

/// Element of a [`Field`], stored as the coefficient vector of a polynomial
/// of degree `< e` over `GF(p)`, constant term first. Elements are compared
/// coefficient-wise; they carry no back-reference to their field, so mixing
/// elements of different fields is a caller bug (checked by `debug_assert`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    coeffs: Vec<u64>,
}

impl FieldElement {
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }
}

/// The field `GF(p^e)` with a fixed irreducible modulus.
///
/// Immutable after construction; shared references can be sent across
/// threads freely.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Field {
    p: u64,
    e: usize,
    q: u64,
    /// Monic irreducible polynomial of degree `e`, constant term first.
    modulus: Vec<u64>,
}

/// Built-in moduli for the supported orders. Degree-one entries are the
/// polynomial `x`; the extension entries are the usual small sparse choices
/// (`x^2+x+1` for GF(4), `x^3+x+1` for GF(8), `x^2+1` for GF(9), ...).
const MODULUS_TABLE: &[(u64, usize, &[u64])] = &[
    (2, 1, &[0, 1]),
    (3, 1, &[0, 1]),
    (2, 2, &[1, 1, 1]),
    (5, 1, &[0, 1]),
    (7, 1, &[0, 1]),
    (2, 3, &[1, 1, 0, 1]),
    (3, 2, &[1, 0, 1]),
    (11, 1, &[0, 1]),
    (13, 1, &[0, 1]),
    (2, 4, &[1, 1, 0, 0, 1]),
    (5, 2, &[2, 0, 1]),
    (3, 3, &[1, 2, 0, 1]),
    (2, 5, &[1, 0, 1, 0, 0, 1]),
];

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    /// `GF(p^e)` with the built-in modulus for that order.
    pub fn new(p: u64, e: usize) -> Result<Field, GfError> {
        if !is_prime(p) {
            return Err(GfError::NotPrime(p));
        }
        let modulus = MODULUS_TABLE
            .iter()
            .find(|&&(tp, te, _)| tp == p && te == e)
            .map(|&(_, _, m)| m.to_vec())
            .ok_or(GfError::UnsupportedOrder { q: p.pow(e as u32) })?;
        Field::with_modulus(p, e, &modulus)
    }

    /// `GF(p^e)` with a caller-supplied monic irreducible modulus of degree
    /// `e`, constant term first. Irreducibility is verified by trial
    /// division against every monic polynomial of degree at most `e/2`.
    pub fn with_modulus(p: u64, e: usize, modulus: &[u64]) -> Result<Field, GfError> {
        if !is_prime(p) {
            return Err(GfError::NotPrime(p));
        }
        assert!(e >= 1, "extension degree must be at least 1");
        if modulus.len() != e + 1 || modulus[e] % p == 0 {
            return Err(GfError::WrongModulusDegree {
                got: modulus.len().saturating_sub(1),
                expected: e,
            });
        }
        // Normalise to a monic polynomial with reduced coefficients.
        let inv_lead = mod_inverse(modulus[e] % p, p);
        let modulus: Vec<u64> = modulus.iter().map(|&c| (c % p) * inv_lead % p).collect();
        if !poly_is_irreducible(&modulus, p) {
            return Err(GfError::ReducibleModulus { p });
        }
        let q = p.pow(e as u32);
        Ok(Field { p, e, q, modulus })
    }

    /// Convenience constructor resolving a prime power `q` to `GF(q)`.
    pub fn of_order(q: u64) -> Result<Field, GfError> {
        for &(p, e, _) in MODULUS_TABLE {
            if p.pow(e as u32) == q {
                return Field::new(p, e);
            }
        }
        // Distinguish "composite but a prime power we do not carry" from
        // "not a prime power at all": report NotPrime only for non-powers.
        if !is_prime(q) && prime_power_base(q).is_none() {
            return Err(GfError::NotPrime(q));
        }
        Err(GfError::UnsupportedOrder { q })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.e
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement { coeffs: vec![0; self.e] }
    }

    pub fn one(&self) -> FieldElement {
        self.from_index(1)
    }

    pub fn is_zero(&self, a: &FieldElement) -> bool {
        a.coeffs.iter().all(|&c| c == 0)
    }

    /// The element with index `i` in the canonical enumeration: `i` written
    /// in base `p`, least significant digit = constant coefficient.
    pub fn from_index(&self, mut i: u64) -> FieldElement {
        assert!(i < self.q, "element index {i} out of range for GF({})", self.q);
        let mut coeffs = vec![0; self.e];
        for c in coeffs.iter_mut() {
            *c = i % self.p;
            i /= self.p;
        }
        FieldElement { coeffs }
    }

    /// Inverse of [`Field::from_index`].
    pub fn index_of(&self, a: &FieldElement) -> u64 {
        debug_assert_eq!(a.coeffs.len(), self.e);
        a.coeffs.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    /// All `q` elements in index order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.q).map(move |i| self.from_index(i))
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let coeffs = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(&x, &y)| (x + y) % self.p)
            .collect();
        FieldElement { coeffs }
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let coeffs = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(&x, &y)| (x + self.p - y) % self.p)
            .collect();
        FieldElement { coeffs }
    }

    pub fn neg(&self, a: &FieldElement) -> FieldElement {
        let coeffs = a.coeffs.iter().map(|&x| (self.p - x) % self.p).collect();
        FieldElement { coeffs }
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let mut prod = vec![0u64; 2 * self.e - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        self.reduce(prod)
    }

    /// Scale by an integer residue.
    pub fn scale(&self, a: &FieldElement, c: u64) -> FieldElement {
        let c = c % self.p;
        let coeffs = a.coeffs.iter().map(|&x| x * c % self.p).collect();
        FieldElement { coeffs }
    }

    pub fn pow(&self, a: &FieldElement, mut n: u64) -> FieldElement {
        let mut base = a.clone();
        let mut acc = self.one();
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            n >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: &FieldElement) -> Result<FieldElement, GfError> {
        if self.is_zero(a) {
            return Err(GfError::DivisionByZero);
        }
        // a^(q-2) = a^(-1); the exponent is tiny at these orders.
        Ok(self.pow(a, self.q - 2))
    }

    /// The Tits endomorphism `x -> x^(2^(e+1))` on `GF(2^(2e+1))`; applying
    /// it twice squares the argument.
    pub fn tits_sigma(&self, a: &FieldElement) -> Result<FieldElement, GfError> {
        let half = self.tits_exponent()?;
        Ok(self.pow(a, half))
    }

    /// `2^(e+1)` for `q = 2^(2e+1)`, the exponent realising the Tits map.
    pub fn tits_exponent(&self) -> Result<u64, GfError> {
        if self.p != 2 || self.e % 2 == 0 {
            return Err(GfError::WrongFieldOrder { q: self.q });
        }
        let half_deg = (self.e - 1) / 2;
        Ok(1 << (half_deg + 1))
    }

    /// Frobenius `x -> x^p`.
    pub fn frobenius(&self, a: &FieldElement) -> FieldElement {
        self.pow(a, self.p)
    }

    fn reduce(&self, mut poly: Vec<u64>) -> FieldElement {
        // Modulus is monic, so long division needs no leading-coefficient
        // inversions.
        for i in (self.e..poly.len()).rev() {
            let c = poly[i];
            if c == 0 {
                continue;
            }
            poly[i] = 0;
            for j in 0..self.e {
                let sub = c * self.modulus[j] % self.p;
                poly[i - self.e + j] = (poly[i - self.e + j] + self.p - sub) % self.p;
            }
        }
        poly.truncate(self.e);
        FieldElement { coeffs: poly }
    }
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // p is prime and a != 0 mod p.
    let mut result = 1u64;
    let mut base = a % p;
    let mut exp = p - 2;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    result
}

fn prime_power_base(q: u64) -> Option<(u64, u32)> {
    for p in 2..=q {
        if !is_prime(p) {
            continue;
        }
        if q % p == 0 {
            let mut m = q;
            let mut e = 0;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            return if m == 1 { Some((p, e)) } else { None };
        }
    }
    None
}

/// Remainder of `poly` modulo the monic polynomial `div` over `GF(p)`.
fn poly_rem(poly: &[u64], div: &[u64], p: u64) -> Vec<u64> {
    let mut rem = poly.to_vec();
    let d = div.len() - 1;
    let mut i = rem.len();
    while i > d {
        i -= 1;
        let c = rem[i];
        if c != 0 {
            rem[i] = 0;
            for j in 0..d {
                let sub = c * div[j] % p;
                rem[i - d + j] = (rem[i - d + j] + p - sub) % p;
            }
        }
    }
    rem.truncate(d);
    rem
}

/// Trial division by every monic polynomial of degree `1..=e/2`.
fn poly_is_irreducible(modulus: &[u64], p: u64) -> bool {
    let e = modulus.len() - 1;
    if e == 1 {
        return true;
    }
    for d in 1..=e / 2 {
        // Enumerate monic polynomials of degree d: d free coefficients.
        let count = p.pow(d as u32);
        for idx in 0..count {
            let mut div = Vec::with_capacity(d + 1);
            let mut i = idx;
            for _ in 0..d {
                div.push(i % p);
                i /= p;
            }
            div.push(1);
            let rem = poly_rem(modulus, &div, p);
            if rem.iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field_orders() -> Vec<(u64, usize)> {
        MODULUS_TABLE.iter().map(|&(p, e, _)| (p, e)).collect()
    }

    #[test]
    fn builtin_table_covers_supported_orders() {
        let qs: Vec<u64> = field_orders().iter().map(|&(p, e)| p.pow(e as u32)).collect();
        let mut sorted = qs.clone();
        sorted.sort();
        assert_eq!(sorted, vec![2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32]);
    }

    #[test]
    fn field_axioms_exhaustive() {
        for (p, e) in field_orders() {
            let f = Field::new(p, e).unwrap();
            let els: Vec<FieldElement> = f.elements().collect();
            for a in &els {
                assert_eq!(f.add(a, &f.zero()), *a);
                assert_eq!(f.mul(a, &f.one()), *a);
                assert_eq!(f.add(a, &f.neg(a)), f.zero());
                if !f.is_zero(a) {
                    let inv = f.inv(a).unwrap();
                    assert_eq!(f.mul(a, &inv), f.one(), "inverse in GF({})", f.q());
                }
                for b in &els {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    assert_eq!(f.sub(a, b), f.add(a, &f.neg(b)));
                }
            }
            // Distributivity on all triples is cheap up to q = 32.
            for a in &els {
                for b in &els {
                    for c in &els {
                        let lhs = f.mul(a, &f.add(b, c));
                        let rhs = f.add(&f.mul(a, b), &f.mul(a, c));
                        assert_eq!(lhs, rhs);
                        let assoc_l = f.mul(&f.mul(a, b), c);
                        let assoc_r = f.mul(a, &f.mul(b, c));
                        assert_eq!(assoc_l, assoc_r);
                    }
                }
            }
        }
    }

    #[test]
    fn element_index_round_trip() {
        for (p, e) in field_orders() {
            let f = Field::new(p, e).unwrap();
            for i in 0..f.q() {
                assert_eq!(f.index_of(&f.from_index(i)), i);
            }
        }
    }

    #[test]
    fn gf2_addition_is_xor() {
        let f = Field::new(2, 1).unwrap();
        assert_eq!(f.q(), 2);
        let one = f.one();
        assert_eq!(f.add(&one, &one), f.zero());
    }

    #[test]
    fn gf4_generator_squares_to_generator_plus_one() {
        // GF(4) with modulus x^2 + x + 1: w * w = w + 1.
        let f = Field::with_modulus(2, 2, &[1, 1, 1]).unwrap();
        let w = f.from_index(2); // the polynomial x
        let w_sq = f.mul(&w, &w);
        let w_plus_one = f.add(&w, &f.one());
        assert_eq!(w_sq, w_plus_one);
    }

    #[test]
    fn gf3_inverse_of_two() {
        let f = Field::new(3, 1).unwrap();
        let two = f.from_index(2);
        assert_eq!(f.inv(&two).unwrap(), two);
    }

    #[test]
    fn non_prime_characteristic_rejected() {
        assert_eq!(Field::new(4, 1).unwrap_err(), GfError::NotPrime(4));
    }

    #[test]
    fn reducible_modulus_rejected() {
        // x^2 + 1 = (x+1)^2 over GF(2).
        assert_eq!(
            Field::with_modulus(2, 2, &[1, 0, 1]).unwrap_err(),
            GfError::ReducibleModulus { p: 2 }
        );
    }

    #[test]
    fn unsupported_order_without_modulus() {
        assert!(matches!(Field::new(2, 6), Err(GfError::UnsupportedOrder { q: 64 })));
        // But an explicit irreducible modulus works: x^6 + x + 1 over GF(2).
        let f = Field::with_modulus(2, 6, &[1, 1, 0, 0, 0, 0, 1]).unwrap();
        assert_eq!(f.q(), 64);
    }

    #[test]
    fn tits_sigma_examples() {
        let f2 = Field::new(2, 1).unwrap();
        assert_eq!(f2.tits_sigma(&f2.one()).unwrap(), f2.one());

        // GF(8): sigma(x) = x^4 for the generator x.
        let f8 = Field::new(2, 3).unwrap();
        let x = f8.from_index(2);
        assert_eq!(f8.tits_sigma(&x).unwrap(), f8.pow(&x, 4));

        let f4 = Field::new(2, 2).unwrap();
        assert_eq!(
            f4.tits_sigma(&f4.one()).unwrap_err(),
            GfError::WrongFieldOrder { q: 4 }
        );
        let f9 = Field::new(3, 2).unwrap();
        assert_eq!(
            f9.tits_sigma(&f9.one()).unwrap_err(),
            GfError::WrongFieldOrder { q: 9 }
        );
    }

    #[test]
    fn tits_sigma_squares_to_frobenius() {
        for q_deg in [1usize, 3, 5] {
            let f = Field::new(2, q_deg).unwrap();
            for a in f.elements() {
                let twice = f.tits_sigma(&f.tits_sigma(&a).unwrap()).unwrap();
                assert_eq!(twice, f.mul(&a, &a), "sigma^2 = squaring in GF({})", f.q());
            }
        }
    }

    #[test]
    fn division_by_zero() {
        let f = Field::new(5, 1).unwrap();
        assert_eq!(f.inv(&f.zero()).unwrap_err(), GfError::DivisionByZero);
    }

    #[test]
    fn of_order_resolves_prime_powers() {
        assert_eq!(Field::of_order(9).unwrap().p(), 3);
        assert_eq!(Field::of_order(32).unwrap().degree(), 5);
        assert!(matches!(Field::of_order(6), Err(GfError::NotPrime(6))));
        assert!(matches!(Field::of_order(64), Err(GfError::UnsupportedOrder { q: 64 })));
    }
}
