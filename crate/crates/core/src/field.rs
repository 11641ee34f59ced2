//! Exact arithmetic in GF(p^k).
//!
//! An element is stored as the index `Σ cᵢ·pⁱ` of its coefficient vector
//! `(c₀, …, c_{k-1})` over GF(p), so `0` is zero and `1` is one. All
//! operations go through precomputed tables; the tables are built once from
//! schoolbook polynomial arithmetic modulo the field's modulus.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A field element, encoded as a base-p digit index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Elem(pub u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Serialized description of a field: `{p, k, modulus: [c₀..c_k]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u64,
    pub k: u32,
    pub modulus: Vec<u64>,
}

/// GF(p^k) with lookup tables for every operation.
#[derive(Clone)]
pub struct Field {
    p: u64,
    k: u32,
    q: usize,
    modulus: Vec<u64>,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    inv: Vec<u32>,
    frobenius: Vec<u32>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("p", &self.p)
            .field("k", &self.k)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.k == other.k && self.modulus == other.modulus
    }
}

impl Eq for Field {}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Remainder of `a` modulo the monic polynomial `m`, coefficients mod p,
/// both stored low-degree-first.
fn poly_rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = *r.last().unwrap() % p;
        let shift = r.len() - 1 - dm;
        if lead != 0 {
            for (i, &c) in m.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p * p - lead * c % p) % p;
            }
        }
        r.pop();
    }
    r
}

/// Coefficient vectors (low-degree-first) of all monic polynomials of degree
/// `d`, in lexicographic order of `(c₀, c₁, …)`.
fn monic_polys(p: u64, d: u32) -> impl Iterator<Item = Vec<u64>> {
    let count = p.pow(d);
    (0..count).map(move |mut idx| {
        // c₀ is the most significant digit so that iteration is lexicographic
        // with the constant term compared first.
        let mut coeffs = vec![0u64; d as usize + 1];
        for i in (0..d as usize).rev() {
            coeffs[i] = idx % p;
            idx /= p;
        }
        coeffs[d as usize] = 1;
        coeffs
    })
}

/// Trial division by every monic polynomial of degree 1..=deg/2.
pub fn is_irreducible(poly: &[u64], p: u64) -> bool {
    let deg = poly.len() as u32 - 1;
    if deg <= 1 {
        return deg == 1;
    }
    for d in 1..=deg / 2 {
        for divisor in monic_polys(p, d) {
            if poly_rem(poly, &divisor, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn digits(mut index: usize, p: u64, k: u32) -> Vec<u64> {
    let mut out = vec![0u64; k as usize];
    for slot in out.iter_mut() {
        *slot = index as u64 % p;
        index /= p as usize;
    }
    out
}

fn undigits(coeffs: &[u64], p: u64) -> u32 {
    coeffs.iter().rev().fold(0u64, |acc, &c| acc * p + c) as u32
}

impl Field {
    /// GF(p^k) with the default cap of 64 elements.
    pub fn new(p: u64, k: u32) -> Result<Field> {
        Field::with_cap(p, k, crate::Limits::default().field_order)
    }

    pub fn with_cap(p: u64, k: u32, cap: u64) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if k == 0 {
            return Err(Error::ZeroDegree);
        }
        let q = p
            .checked_pow(k)
            .filter(|&q| q <= cap)
            .ok_or(Error::FieldTooLarge { p, k, cap })?;
        let modulus = monic_polys(p, k)
            .find(|m| is_irreducible(m, p))
            .ok_or(Error::NoIrreducible { p, k })?;
        Ok(Field::from_modulus(p, k, q as usize, modulus))
    }

    fn from_modulus(p: u64, k: u32, q: usize, modulus: Vec<u64>) -> Field {
        let polys: Vec<Vec<u64>> = (0..q).map(|i| digits(i, p, k)).collect();
        let mut add = vec![0u32; q * q];
        let mut mul = vec![0u32; q * q];
        for a in 0..q {
            for b in 0..q {
                let sum: Vec<u64> = polys[a]
                    .iter()
                    .zip(&polys[b])
                    .map(|(x, y)| (x + y) % p)
                    .collect();
                add[a * q + b] = undigits(&sum, p);

                let mut prod = vec![0u64; 2 * k as usize - 1];
                for (i, x) in polys[a].iter().enumerate() {
                    for (j, y) in polys[b].iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                let rem = poly_rem(&prod, &modulus, p);
                let mut padded = rem;
                padded.resize(k as usize, 0);
                mul[a * q + b] = undigits(&padded, p);
            }
        }
        let neg = (0..q)
            .map(|a| (0..q).find(|&b| add[a * q + b] == 0).unwrap() as u32)
            .collect();
        let inv = (0..q)
            .map(|a| {
                (0..q)
                    .find(|&b| mul[a * q + b] == 1)
                    .map(|b| b as u32)
                    .unwrap_or(0)
            })
            .collect();
        let frobenius = (0..q)
            .map(|a| {
                let mut acc = 1u32;
                for _ in 0..p {
                    acc = mul[acc as usize * q + a];
                }
                acc
            })
            .collect();
        Field {
            p,
            k,
            q,
            modulus,
            add,
            mul,
            neg,
            inv,
            frobenius,
        }
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> usize {
        self.q
    }

    /// Modulus coefficients `[c₀..c_k]`, low degree first.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn spec(&self) -> FieldSpec {
        FieldSpec {
            p: self.p,
            k: self.k,
            modulus: self.modulus.clone(),
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone {
        (0..self.q as u32).map(Elem)
    }

    pub fn nonzero(&self) -> impl Iterator<Item = Elem> + Clone {
        (1..self.q as u32).map(Elem)
    }

    /// Coefficients of the polynomial an element encodes.
    pub fn coefficients(&self, a: Elem) -> Vec<u64> {
        digits(a.index(), self.p, self.k)
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        Elem(self.add[a.index() * self.q + b.index()])
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        Elem(self.mul[a.index() * self.q + b.index()])
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        Elem(self.neg[a.index()])
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a.is_zero() {
            Err(Error::InverseOfZero)
        } else {
            Ok(Elem(self.inv[a.index()]))
        }
    }

    /// Inverse of a value already known to be nonzero.
    #[inline]
    pub(crate) fn inv_nonzero(&self, a: Elem) -> Elem {
        debug_assert!(!a.is_zero());
        Elem(self.inv[a.index()])
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Elem, mut e: u64) -> Elem {
        let mut base = a;
        let mut acc = Elem::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// x ↦ x^p.
    #[inline]
    pub fn frobenius(&self, a: Elem) -> Elem {
        Elem(self.frobenius[a.index()])
    }

    /// Every field automorphism, i.e. the Frobenius powers `j = 0..k`.
    ///
    /// Each one is checked against all pairs of elements for additivity and
    /// multiplicativity before it is returned.
    pub fn automorphisms(&self) -> Result<Vec<FieldAut>> {
        let auts: Vec<FieldAut> = (0..self.k).map(FieldAut::new).collect();
        for aut in &auts {
            let table = aut.table(self);
            let ok = self.elements().all(|a| {
                self.elements().all(|b| {
                    table[self.add(a, b).index()] == self.add(table[a.index()], table[b.index()])
                        && table[self.mul(a, b).index()]
                            == self.mul(table[a.index()], table[b.index()])
                })
            });
            let mut seen = vec![false; self.q];
            for x in &table {
                seen[x.index()] = true;
            }
            if !ok || seen.contains(&false) {
                return Err(Error::AutomorphismCheck(aut.exponent));
            }
        }
        Ok(auts)
    }
}

/// The Frobenius power x ↦ x^(p^exponent).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct FieldAut {
    pub exponent: u32,
}

impl FieldAut {
    pub const IDENTITY: FieldAut = FieldAut { exponent: 0 };

    pub fn new(exponent: u32) -> FieldAut {
        FieldAut { exponent }
    }

    pub fn is_identity(self) -> bool {
        self.exponent == 0
    }

    #[inline]
    pub fn apply(self, field: &Field, x: Elem) -> Elem {
        (0..self.exponent).fold(x, |acc, _| field.frobenius(acc))
    }

    /// Value table `x ↦ self(x)` indexed by element.
    pub fn table(self, field: &Field) -> Vec<Elem> {
        field.elements().map(|x| self.apply(field, x)).collect()
    }

    /// `self ∘ other`.
    pub fn compose(self, other: FieldAut, field: &Field) -> FieldAut {
        FieldAut::new((self.exponent + other.exponent) % field.degree())
    }

    pub fn inverse(self, field: &Field) -> FieldAut {
        FieldAut::new((field.degree() - self.exponent) % field.degree())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Schoolbook product of two encoded elements, written independently of
    /// the table construction.
    fn oracle_mul(p: u64, k: u32, modulus: &[u64], a: u32, b: u32) -> u32 {
        let da = digits(a as usize, p, k);
        let db = digits(b as usize, p, k);
        let mut prod = vec![0i64; 2 * k as usize];
        for i in 0..k as usize {
            for j in 0..k as usize {
                prod[i + j] += (da[i] * db[j]) as i64;
            }
        }
        for deg in (k as usize..prod.len()).rev() {
            let c = prod[deg];
            prod[deg] = 0;
            for i in 0..k as usize {
                prod[deg - k as usize + i] -= c * modulus[i] as i64;
            }
        }
        prod.iter()
            .take(k as usize)
            .rev()
            .fold(0i64, |acc, &c| acc * p as i64 + c.rem_euclid(p as i64)) as u32
    }

    fn small_fields() -> Vec<Field> {
        [
            (2, 1),
            (3, 1),
            (2, 2),
            (5, 1),
            (7, 1),
            (2, 3),
            (3, 2),
            (11, 1),
            (13, 1),
            (2, 4),
        ]
        .iter()
        .map(|&(p, k)| Field::new(p, k).unwrap())
        .collect()
    }

    #[test]
    fn prime_field_has_linear_modulus() {
        let f = Field::new(5, 1).unwrap();
        assert_eq!(f.order(), 5);
        assert_eq!(f.modulus(), &[0, 1]);
        assert_eq!(f.mul(Elem(2), Elem(3)), Elem(1));
    }

    #[test]
    fn gf4_modulus_and_arithmetic() {
        let f = Field::new(2, 2).unwrap();
        assert_eq!(f.order(), 4);
        assert_eq!(f.modulus(), &[1, 1, 1]);
        assert_eq!(f.mul(Elem(2), Elem(2)), Elem(3));
        assert_eq!(f.inv(Elem(2)).unwrap(), Elem(3));
    }

    #[test]
    fn gf4_modulus_is_the_only_irreducible_quadratic() {
        let found: Vec<Vec<u64>> = monic_polys(2, 2).filter(|m| is_irreducible(m, 2)).collect();
        assert_eq!(found, vec![vec![1, 1, 1]]);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(Field::new(4, 1).unwrap_err(), Error::NotPrime(4));
        assert_eq!(Field::new(1, 1).unwrap_err(), Error::NotPrime(1));
        assert_eq!(Field::new(2, 0).unwrap_err(), Error::ZeroDegree);
        assert!(matches!(
            Field::new(2, 7).unwrap_err(),
            Error::FieldTooLarge { .. }
        ));
        assert!(Field::with_cap(2, 7, 128).is_ok());
        assert_eq!(
            Field::new(3, 1).unwrap().inv(Elem::ZERO).unwrap_err(),
            Error::InverseOfZero
        );
    }

    #[test]
    fn multiplication_matches_schoolbook_oracle() {
        for f in small_fields() {
            for a in 0..f.order() as u32 {
                for b in 0..f.order() as u32 {
                    let expected = oracle_mul(f.p, f.k, &f.modulus, a, b);
                    assert_eq!(f.mul(Elem(a), Elem(b)), Elem(expected), "{f:?} {a}*{b}");
                }
            }
        }
    }

    #[test]
    fn field_axioms_hold_exhaustively() {
        for f in small_fields() {
            for a in f.elements() {
                assert_eq!(f.add(a, f.neg(a)), Elem::ZERO);
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), Elem::ONE);
                }
                for b in f.elements() {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in f.elements() {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    /// Every bijection of the field preserving + and ·, found by backtracking
    /// over images with 0 ↦ 0 and 1 ↦ 1 forced.
    fn brute_automorphisms(f: &Field) -> Vec<Vec<Elem>> {
        fn extend(f: &Field, table: &mut Vec<Option<Elem>>, next: usize, out: &mut Vec<Vec<Elem>>) {
            let q = f.order();
            if next == q {
                let t: Vec<Elem> = table.iter().map(|x| x.unwrap()).collect();
                let ok = f.elements().all(|a| {
                    f.elements().all(|b| {
                        t[f.add(a, b).index()] == f.add(t[a.index()], t[b.index()])
                            && t[f.mul(a, b).index()] == f.mul(t[a.index()], t[b.index()])
                    })
                });
                if ok {
                    out.push(t);
                }
                return;
            }
            for img in 0..q as u32 {
                if table.contains(&Some(Elem(img))) {
                    continue;
                }
                table[next] = Some(Elem(img));
                extend(f, table, next + 1, out);
                table[next] = None;
            }
        }
        let mut table = vec![None; f.order()];
        table[0] = Some(Elem::ZERO);
        table[1] = Some(Elem::ONE);
        let mut out = Vec::new();
        extend(f, &mut table, 2, &mut out);
        out.sort();
        out
    }

    #[test]
    fn automorphisms_match_exhaustive_bijection_search() {
        for (p, k) in [(5, 1), (2, 2), (2, 3), (3, 2), (7, 1)] {
            let f = Field::new(p, k).unwrap();
            let mut ours: Vec<Vec<Elem>> = f
                .automorphisms()
                .unwrap()
                .iter()
                .map(|a| a.table(&f))
                .collect();
            ours.sort();
            assert_eq!(ours, brute_automorphisms(&f), "GF({p}^{k})");
            assert_eq!(ours.len(), k as usize);
        }
    }

    #[test]
    fn gf4_frobenius_swaps_two_and_three() {
        let f = Field::new(2, 2).unwrap();
        let auts = f.automorphisms().unwrap();
        assert_eq!(auts, vec![FieldAut::new(0), FieldAut::new(1)]);
        assert_eq!(auts[1].table(&f), vec![Elem(0), Elem(1), Elem(3), Elem(2)]);
        assert_eq!(Field::new(5, 1).unwrap().automorphisms().unwrap().len(), 1);
        assert_eq!(Field::new(2, 3).unwrap().automorphisms().unwrap().len(), 3);
    }

    #[test]
    fn frobenius_iterated_k_times_is_identity() {
        for f in small_fields() {
            let frob = FieldAut::new(1);
            for x in f.elements() {
                let mut y = x;
                for _ in 0..f.degree() {
                    y = frob.apply(&f, y);
                }
                assert_eq!(y, x);
            }
            assert_eq!(frob.compose(frob.inverse(&f), &f), FieldAut::IDENTITY);
        }
    }
}
