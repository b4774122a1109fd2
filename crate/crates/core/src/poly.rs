//! Sparse polynomials in `x_i`, `α_i`, `β_i` with exact integer
//! coefficients, truncated by total degree in the `x` variables.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("truncation caps differ: {0} vs {1}")]
    CapMismatch(u32, u32),
    #[error("polynomial is not divisible by x{0} - x{1}")]
    NotDivisible(u32, u32),
}

/// A monomial `Π x_i^a · Π α_i^b · Π β_i^c`. Zero exponents are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    x: BTreeMap<u32, u32>,
    alpha: BTreeMap<u32, u32>,
    beta: BTreeMap<u32, u32>,
}

fn bump(map: &mut BTreeMap<u32, u32>, index: u32, by: u32) {
    if by > 0 {
        *map.entry(index).or_insert(0) += by;
    }
}

fn merge(a: &BTreeMap<u32, u32>, b: &BTreeMap<u32, u32>) -> BTreeMap<u32, u32> {
    let mut out = a.clone();
    for (&i, &e) in b {
        bump(&mut out, i, e);
    }
    out
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn x(i: u32) -> Self {
        Monomial::one().times_x(i, 1)
    }

    pub fn alpha(i: u32) -> Self {
        Monomial::one().times_alpha(i, 1)
    }

    pub fn beta(i: u32) -> Self {
        Monomial::one().times_beta(i, 1)
    }

    pub fn times_x(mut self, i: u32, e: u32) -> Self {
        bump(&mut self.x, i, e);
        self
    }

    pub fn times_alpha(mut self, i: u32, e: u32) -> Self {
        bump(&mut self.alpha, i, e);
        self
    }

    pub fn times_beta(mut self, i: u32, e: u32) -> Self {
        bump(&mut self.beta, i, e);
        self
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            x: merge(&self.x, &other.x),
            alpha: merge(&self.alpha, &other.alpha),
            beta: merge(&self.beta, &other.beta),
        }
    }

    pub fn x_exp(&self) -> &BTreeMap<u32, u32> {
        &self.x
    }

    pub fn alpha_exp(&self) -> &BTreeMap<u32, u32> {
        &self.alpha
    }

    pub fn beta_exp(&self) -> &BTreeMap<u32, u32> {
        &self.beta
    }

    pub fn x_degree(&self) -> u32 {
        self.x.values().sum()
    }

    pub fn alpha_degree(&self) -> u32 {
        self.alpha.values().sum()
    }

    pub fn beta_degree(&self) -> u32 {
        self.beta.values().sum()
    }

    /// The monomial with the `α`/`β` part dropped.
    pub fn x_part(&self) -> Monomial {
        Monomial { x: self.x.clone(), ..Monomial::default() }
    }

    /// The monomial with the `x` part dropped.
    pub fn parameter_part(&self) -> Monomial {
        Monomial { x: BTreeMap::new(), alpha: self.alpha.clone(), beta: self.beta.clone() }
    }

    pub fn is_one(&self) -> bool {
        self.x.is_empty() && self.alpha.is_empty() && self.beta.is_empty()
    }

    fn x_power(&self, i: u32) -> u32 {
        self.x.get(&i).copied().unwrap_or(0)
    }

    fn with_x_power(&self, i: u32, e: u32) -> Monomial {
        let mut m = self.clone();
        if e == 0 {
            m.x.remove(&i);
        } else {
            m.x.insert(i, e);
        }
        m
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (name, map) in [("x", &self.x), ("a", &self.alpha), ("b", &self.beta)] {
            for (i, e) in map {
                if !first {
                    write!(f, " ")?;
                }
                first = false;
                write!(f, "{name}{i}")?;
                if *e != 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

/// A polynomial whose monomials all have `x`-degree at most `cap`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedPolynomial {
    terms: BTreeMap<Monomial, BigInt>,
    cap: u32,
}

impl TruncatedPolynomial {
    pub fn zero(cap: u32) -> Self {
        TruncatedPolynomial { terms: BTreeMap::new(), cap }
    }

    pub fn one(cap: u32) -> Self {
        Self::monomial(Monomial::one(), 1, cap)
    }

    pub fn monomial(m: Monomial, coef: impl Into<BigInt>, cap: u32) -> Self {
        let mut p = Self::zero(cap);
        p.add_term(m, coef.into());
        p
    }

    /// Builds a polynomial from terms, dropping those above the cap.
    pub fn from_terms<I, C>(terms: I, cap: u32) -> Self
    where
        I: IntoIterator<Item = (Monomial, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero(cap);
        for (m, c) in terms {
            p.add_term(m, c.into());
        }
        p
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    /// Number of nonzero terms. Emptiness is [`Self::is_zero`].
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn sum_of_coefficients(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Adds `coef · m` in place; no-op above the cap.
    pub fn add_term(&mut self, m: Monomial, coef: BigInt) {
        if m.x_degree() > self.cap || coef.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coef);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coef;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Same terms under a different cap (dropping what no longer fits).
    pub fn with_cap(&self, cap: u32) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), c.clone())), cap)
    }

    fn check_caps(&self, other: &Self) -> Result<(), PolyError> {
        if self.cap == other.cap {
            Ok(())
        } else {
            Err(PolyError::CapMismatch(self.cap, other.cap))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_caps(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        TruncatedPolynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
            cap: self.cap,
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), c * k)), self.cap)
    }

    pub fn mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_caps(other)?;
        let mut out = Self::zero(self.cap);
        for (ma, ca) in &self.terms {
            let da = ma.x_degree();
            for (mb, cb) in &other.terms {
                if da + mb.x_degree() > self.cap {
                    continue;
                }
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    /// Multiplies every term by a monomial.
    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Self::from_terms(self.terms.iter().map(|(t, c)| (t.mul(m), c.clone())), self.cap)
    }

    /// Exact quotient by `x_i - x_j`.
    ///
    /// Truncation is by homogeneous components, so a truncated multiple of
    /// `x_i - x_j` still divides exactly. The quotient has cap `cap - 1`.
    pub fn div_by_difference(&self, i: u32, j: u32) -> Result<Self, PolyError> {
        assert_ne!(i, j);
        // Coefficients of x_i^e, as polynomials in the other variables.
        let mut by_power: BTreeMap<u32, TruncatedPolynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.x_power(i);
            by_power
                .entry(e)
                .or_insert_with(|| Self::zero(self.cap))
                .add_term(m.with_x_power(i, 0), c.clone());
        }
        let max_e = by_power.keys().copied().max().unwrap_or(0);
        let coeff = |e: u32| by_power.get(&e).cloned().unwrap_or_else(|| Self::zero(self.cap));
        let xj = Monomial::x(j);
        let mut out = Self::zero(self.cap.saturating_sub(1));
        // p = (x_i - x_j) q  gives  q_{e-1} = c_e + x_j q_e.
        let mut carry = Self::zero(self.cap);
        for e in (1..=max_e).rev() {
            let q = coeff(e).add(&carry)?;
            for (m, c) in q.terms() {
                out.add_term(m.clone().times_x(i, e - 1), c.clone());
            }
            carry = q.mul_monomial(&xj);
        }
        if !coeff(0).add(&carry)?.is_zero() {
            return Err(PolyError::NotDivisible(i, j));
        }
        Ok(out)
    }

    /// Applies a permutation of the `x` variable indices.
    pub fn permute_x(&self, f: impl Fn(u32) -> u32) -> Self {
        let terms = self.terms.iter().map(|(m, c)| {
            let mut n = m.clone();
            n.x = m.x.iter().map(|(&i, &e)| (f(i), e)).collect();
            (n, c.clone())
        });
        Self::from_terms(terms, self.cap)
    }

    /// Terms of `self` that differ from `other`, as `(monomial, self, other)`.
    pub fn diff(&self, other: &Self) -> Vec<(Monomial, BigInt, BigInt)> {
        let mut keys: Vec<&Monomial> = self.terms.keys().chain(other.terms.keys()).collect();
        keys.sort();
        keys.dedup();
        keys.into_iter()
            .filter_map(|m| {
                let a = self.coefficient(m);
                let b = other.coefficient(m);
                (a != b).then(|| (m.clone(), a, b))
            })
            .collect()
    }
}

impl fmt::Display for TruncatedPolynomial {
    /// One term per line, `coef * monomial`, in monomial order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (m, c) in &self.terms {
            writeln!(f, "{c} * {m}")?;
        }
        Ok(())
    }
}

/// `Π_{i<j} (x_i - x_j)` over `x_1..x_n`.
pub fn vandermonde(n: u32, cap: u32) -> TruncatedPolynomial {
    let mut v = TruncatedPolynomial::one(cap);
    for i in 1..=n {
        for j in i + 1..=n {
            let factor = TruncatedPolynomial::from_terms(
                [(Monomial::x(i), BigInt::one()), (Monomial::x(j), -BigInt::one())],
                cap,
            );
            v = v.mul(&factor).expect("same cap");
        }
    }
    v
}

/// Divides by the Vandermonde product, one linear factor at a time.
pub fn div_by_vandermonde(p: &TruncatedPolynomial, n: u32) -> Result<TruncatedPolynomial, PolyError> {
    let mut q = p.clone();
    for i in 1..=n {
        for j in i + 1..=n {
            q = q.div_by_difference(i, j)?;
        }
    }
    Ok(q)
}

/// True when every coefficient is positive.
pub fn has_positive_coefficients(p: &TruncatedPolynomial) -> bool {
    p.terms().all(|(_, c)| c.is_positive())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: u32) -> TruncatedPolynomial {
        TruncatedPolynomial::monomial(Monomial::x(i), 1, 6)
    }

    #[test]
    fn add_zero_and_doubling() {
        let a = x(1);
        assert_eq!(a.add(&TruncatedPolynomial::zero(6)).unwrap(), a);
        let two = a.add(&a).unwrap();
        assert_eq!(two.coefficient(&Monomial::x(1)), BigInt::from(2));
        assert_eq!(two.len(), 1);
    }

    #[test]
    fn cap_mismatch_is_an_error() {
        let a = x(1);
        let b = TruncatedPolynomial::one(3);
        assert_eq!(a.add(&b), Err(PolyError::CapMismatch(6, 3)));
        assert!(a.mul(&b).is_err());
    }

    #[test]
    fn difference_of_squares() {
        let s = x(1).add(&x(2)).unwrap();
        let d = x(1).sub(&x(2)).unwrap();
        let prod = s.mul(&d).unwrap();
        let expected = TruncatedPolynomial::from_terms(
            [(Monomial::x(1).times_x(1, 1), 1), (Monomial::x(2).times_x(2, 1), -1)],
            6,
        );
        assert_eq!(prod, expected);
        assert_eq!(prod.mul(&TruncatedPolynomial::one(6)).unwrap(), prod);
    }

    #[test]
    fn geometric_series_cancels_up_to_cap() {
        let cap = 5;
        let ax = Monomial::alpha(1).times_x(1, 1);
        let one_minus = TruncatedPolynomial::from_terms([(Monomial::one(), 1), (ax.clone(), -1)], cap);
        let mut series = TruncatedPolynomial::zero(cap);
        for k in 0..=cap {
            series.add_term(Monomial::one().times_alpha(1, k).times_x(1, k), BigInt::one());
        }
        assert_eq!(one_minus.mul(&series).unwrap(), TruncatedPolynomial::one(cap));
    }

    #[test]
    fn truncation_drops_high_terms() {
        let p = TruncatedPolynomial::monomial(Monomial::x(1).times_x(1, 2), 1, 2);
        assert!(p.is_zero());
        let q = x(1).with_cap(1).mul(&x(2).with_cap(1)).unwrap();
        assert!(q.is_zero());
    }

    #[test]
    fn vandermonde_division_roundtrip() {
        let cap = 8;
        let f = TruncatedPolynomial::from_terms(
            [
                (Monomial::x(1), 3),
                (Monomial::x(2).times_alpha(1, 1).times_x(3, 1), -2),
                (Monomial::beta(2).times_x(1, 2), 5),
                (Monomial::one(), 1),
            ],
            cap,
        );
        let v = vandermonde(3, cap);
        let prod = f.mul(&v).unwrap();
        let back = div_by_vandermonde(&prod, 3).unwrap();
        assert_eq!(back.with_cap(cap - 3), f.with_cap(cap - 3));
    }

    #[test]
    fn non_multiple_is_rejected() {
        let p = x(1).add(&TruncatedPolynomial::one(6)).unwrap();
        assert_eq!(p.div_by_difference(1, 2), Err(PolyError::NotDivisible(1, 2)));
    }

    #[test]
    fn display_format() {
        let p = TruncatedPolynomial::from_terms(
            [(Monomial::x(1).times_x(1, 1).times_alpha(2, 1).times_beta(1, 3), 2), (Monomial::one(), -1)],
            6,
        );
        assert_eq!(p.to_string(), "-1 * 1\n2 * x1^2 a2 b1^3\n");
    }
}
