//! Exact arithmetic in the group ring ℤ[H] of a free abelian group H ≅ ℤᵇ.
//!
//! Exponent vectors are dense and ordered lexicographically. By convention
//! the first `b - 1` coordinates span the fiber lattice K and the last
//! coordinate is the deck variable `z`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::upoly::{write_univariate, IntPoly};

/// Variable names of a free abelian group of rank `b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianGroup {
    names: Vec<String>,
}

impl AbelianGroup {
    pub fn new(names: Vec<String>) -> Result<Self> {
        let mut sorted = names.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != names.len() {
            return Err(Error::DimensionMismatch(
                "variable names must be unique".into(),
            ));
        }
        Ok(AbelianGroup { names })
    }

    /// `K ⊕ ⟨z⟩` with K of rank `k`: `a` for a single K-generator,
    /// otherwise `a1, …, ak`.
    pub fn fiber_and_deck(k: usize) -> Self {
        let mut names: Vec<String> = if k == 1 {
            vec!["a".into()]
        } else {
            (1..=k).map(|i| format!("a{i}")).collect()
        };
        names.push("z".into());
        AbelianGroup { names }
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }
}

/// An element of H written additively as an exponent vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement(pub Vec<i64>);

impl GroupElement {
    pub fn zero(rank: usize) -> Self {
        GroupElement(vec![0; rank])
    }

    /// The generator `e_i`.
    pub fn basis(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        GroupElement(v)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn add(&self, other: &GroupElement) -> GroupElement {
        GroupElement(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &GroupElement) -> GroupElement {
        GroupElement(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> GroupElement {
        GroupElement(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, k: i64) -> GroupElement {
        GroupElement(self.0.iter().map(|a| a * k).collect())
    }
}

/// An integral cohomology class, acting on H by the dot product.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CohomClass(pub Vec<i64>);

impl CohomClass {
    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn eval(&self, h: &GroupElement) -> i64 {
        self.0.iter().zip(&h.0).map(|(a, b)| a * b).sum()
    }

    /// gcd of the entries is 1.
    pub fn is_primitive(&self) -> bool {
        self.0.iter().fold(0i64, |g, &x| g.gcd(&x)) == 1
    }

    pub fn mod2(&self) -> CohomClass {
        CohomClass(self.0.iter().map(|x| x.rem_euclid(2)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn neg(&self) -> CohomClass {
        CohomClass(self.0.iter().map(|x| -x).collect())
    }
}

/// A multivariate Laurent polynomial with integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    rank: usize,
    terms: BTreeMap<GroupElement, BigInt>,
}

impl LaurentPoly {
    pub fn zero(rank: usize) -> Self {
        LaurentPoly {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(rank: usize) -> Self {
        LaurentPoly::monomial(GroupElement::zero(rank), BigInt::one())
    }

    pub fn constant(rank: usize, c: impl Into<BigInt>) -> Self {
        LaurentPoly::monomial(GroupElement::zero(rank), c.into())
    }

    pub fn monomial(exp: GroupElement, coeff: impl Into<BigInt>) -> Self {
        let rank = exp.rank();
        let coeff = coeff.into();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        LaurentPoly { rank, terms }
    }

    /// The variable `x_i`.
    pub fn var(rank: usize, i: usize) -> Self {
        LaurentPoly::monomial(GroupElement::basis(rank, i), 1)
    }

    pub fn from_terms(rank: usize, terms: impl IntoIterator<Item = (Vec<i64>, i64)>) -> Self {
        let mut p = LaurentPoly::zero(rank);
        for (e, c) in terms {
            assert_eq!(e.len(), rank, "exponent length");
            p.add_term(GroupElement(e), &BigInt::from(c));
        }
        p
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GroupElement, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: &GroupElement) -> BigInt {
        self.terms.get(exp).cloned().unwrap_or_default()
    }

    pub fn support(&self) -> impl Iterator<Item = &GroupElement> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, exp: GroupElement, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Lexicographically largest term.
    pub fn leading_term(&self) -> Option<(&GroupElement, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// Lexicographically smallest term.
    pub fn trailing_term(&self) -> Option<(&GroupElement, &BigInt)> {
        self.terms.iter().next()
    }

    /// Multiplication by the monomial `h`.
    pub fn shift(&self, h: &GroupElement) -> LaurentPoly {
        LaurentPoly {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.add(h), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero(self.rank);
        }
        LaurentPoly {
            rank: self.rank,
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> LaurentPoly {
        (0..k).fold(LaurentPoly::one(self.rank), |acc, _| &acc * self)
    }

    /// Per-coordinate minimum and maximum exponents of the support.
    pub fn exponent_box(&self) -> Option<(Vec<i64>, Vec<i64>)> {
        let mut it = self.terms.keys();
        let first = it.next()?;
        let mut lo = first.0.clone();
        let mut hi = first.0.clone();
        for e in it {
            for i in 0..self.rank {
                lo[i] = lo[i].min(e.0[i]);
                hi[i] = hi[i].max(e.0[i]);
            }
        }
        Some((lo, hi))
    }

    /// Exact division in ℤ[H]. Quotient terms are confined to the box allowed
    /// by the Newton polytopes, which bounds the loop when the division is
    /// not exact.
    pub fn exact_div(&self, d: &LaurentPoly) -> Result<LaurentPoly> {
        let (ld, lc) = d.leading_term().ok_or(Error::DivisionByZero)?;
        let (ld, lc) = (ld.clone(), lc.clone());
        if self.is_zero() {
            return Ok(LaurentPoly::zero(self.rank));
        }
        let (nlo, nhi) = self.exponent_box().expect("nonzero");
        let (dlo, dhi) = d.exponent_box().expect("nonzero");
        let qlo: Vec<i64> = nlo.iter().zip(&dlo).map(|(a, b)| a - b).collect();
        let qhi: Vec<i64> = nhi.iter().zip(&dhi).map(|(a, b)| a - b).collect();
        let fail = || Error::NonexactDivision(format!("({self}) / ({d})"));
        let mut r = self.clone();
        let mut q = LaurentPoly::zero(self.rank);
        while let Some((lr, cr)) = r.leading_term() {
            let qe = lr.sub(&ld);
            if qe
                .0
                .iter()
                .zip(qlo.iter().zip(&qhi))
                .any(|(x, (lo, hi))| x < lo || x > hi)
            {
                return Err(fail());
            }
            let (qc, rem) = cr.div_rem(&lc);
            if !rem.is_zero() {
                return Err(fail());
            }
            let step = LaurentPoly::monomial(qe, qc);
            r = &r - &(&step * d);
            q = &q + &step;
        }
        Ok(q)
    }

    /// Unit normal form: translate the lexicographically minimal exponent to
    /// the origin and make its coefficient positive.
    pub fn unit_normal_form(&self) -> Result<LaurentPoly> {
        let (e, c) = self.trailing_term().ok_or(Error::ZeroPolynomial)?;
        let shifted = self.shift(&e.neg());
        Ok(if c.is_negative() { -&shifted } else { shifted })
    }

    /// `p ≐ q`: equal up to multiplication by a unit `±h`.
    pub fn unit_equivalent(&self, other: &LaurentPoly) -> bool {
        match (self.unit_normal_form(), other.unit_normal_form()) {
            (Ok(a), Ok(b)) => a == b,
            (Err(_), Err(_)) => true,
            _ => false,
        }
    }

    /// The unit `±h` with `self = ±h · other`, if there is one.
    pub fn unit_quotient(&self, other: &LaurentPoly) -> Option<(i8, GroupElement)> {
        let (e1, c1) = self.trailing_term()?;
        let (e2, c2) = other.trailing_term()?;
        let h = e1.sub(e2);
        let sign = if c1.is_negative() == c2.is_negative() {
            1
        } else {
            -1
        };
        let candidate = other.shift(&h);
        let candidate = if sign < 0 { -&candidate } else { candidate };
        (candidate == *self).then_some((sign, h))
    }

    /// Form used for display: every coordinate's minimal exponent is zero and
    /// the term with the largest `z`-exponent (then lexicographically largest
    /// K-part) has a positive coefficient.
    pub fn display_form(&self) -> LaurentPoly {
        let Some((lo, _)) = self.exponent_box() else {
            return self.clone();
        };
        let shifted = self.shift(&GroupElement(lo).neg());
        let top = shifted
            .terms
            .iter()
            .max_by(|(a, _), (b, _)| {
                let (za, zb) = (a.0.last(), b.0.last());
                za.cmp(&zb).then_with(|| a.cmp(b))
            })
            .map(|(_, c)| c.is_negative())
            .unwrap_or(false);
        if top {
            -&shifted
        } else {
            shifted
        }
    }

    /// `h ↦ (-1)^{ε·h} h`.
    pub fn apply_involution(&self, eps: &CohomClass) -> LaurentPoly {
        LaurentPoly {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    if eps.eval(e).rem_euclid(2) == 1 {
                        (e.clone(), -c)
                    } else {
                        (e.clone(), c.clone())
                    }
                })
                .collect(),
        }
    }

    /// `h ↦ h⁻¹`.
    pub fn apply_inv(&self) -> LaurentPoly {
        LaurentPoly {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.neg(), c.clone()))
                .collect(),
        }
    }

    /// `Σ a_h t^{u(h)}`.
    pub fn specialize(&self, u: &CohomClass) -> LaurentPoly1V {
        let mut out = LaurentPoly1V::zero();
        for (e, c) in &self.terms {
            out.add_term(u.eval(e), c);
        }
        out
    }

    /// Coefficients reduced mod 2 and translated so the lexicographic
    /// minimum sits at the origin.
    pub fn mod2_normal_form(&self) -> Vec<GroupElement> {
        let odd: Vec<&GroupElement> = self
            .terms
            .iter()
            .filter(|(_, c)| c.is_odd())
            .map(|(e, _)| e)
            .collect();
        match odd.first() {
            None => Vec::new(),
            Some(&min) => odd.iter().map(|e| e.sub(min)).collect(),
        }
    }

    pub fn mod2_equivalent(&self, other: &LaurentPoly) -> bool {
        self.mod2_normal_form() == other.mod2_normal_form()
    }

    /// Substitute 1 for each coordinate in `coords`, keeping the others.
    pub fn augment(&self, coords: &[usize]) -> LaurentPoly {
        let mut out = LaurentPoly::zero(self.rank);
        for (e, c) in &self.terms {
            let mut e = e.clone();
            for &i in coords {
                e.0[i] = 0;
            }
            out.add_term(e, c);
        }
        out
    }

    /// Sum of the coefficients (specialization at the trivial class).
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Re-express in another coordinate system: exponent `h ↦ T·h`.
    pub fn change_coordinates(&self, t: &[Vec<i64>]) -> LaurentPoly {
        let rank = t.len();
        let mut out = LaurentPoly::zero(rank);
        for (e, c) in &self.terms {
            let img = t
                .iter()
                .map(|row| row.iter().zip(&e.0).map(|(a, b)| a * b).sum())
                .collect();
            out.add_term(GroupElement(img), c);
        }
        out
    }

    /// Renders using `names`, grouping by the last variable:
    /// `z^4 + 2z^3 + (1-7a)z^2 + 2az + a^2`.
    pub fn render(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let k = self.rank.saturating_sub(1);
        let mut groups: BTreeMap<i64, Vec<(&GroupElement, &BigInt)>> = BTreeMap::new();
        for (e, c) in &self.terms {
            let z = if self.rank == 0 { 0 } else { e.0[k] };
            groups.entry(z).or_default().push((e, c));
        }
        let zname = names.get(k).map(String::as_str).unwrap_or("z");
        let mut out = String::new();
        for (i, (z, terms)) in groups.iter().rev().enumerate() {
            let zmon = monomial_str(&[(*z, zname)]);
            let (neg, body) = if terms.len() == 1 {
                let (e, c) = terms[0];
                let kmon = monomial_str(&k_factors(e, names, k));
                let mon = format!("{kmon}{zmon}");
                let mag = c.abs();
                let body = if mon.is_empty() {
                    mag.to_string()
                } else if mag.is_one() {
                    mon
                } else {
                    format!("{mag}{mon}")
                };
                (c.is_negative(), body)
            } else {
                let mut inner = String::new();
                for (j, (e, c)) in terms.iter().enumerate() {
                    let kmon = monomial_str(&k_factors(e, names, k));
                    let mag = c.abs();
                    if j == 0 {
                        if c.is_negative() {
                            inner.push('-');
                        }
                    } else {
                        inner.push(if c.is_negative() { '-' } else { '+' });
                    }
                    if kmon.is_empty() {
                        inner.push_str(&mag.to_string());
                    } else if mag.is_one() {
                        inner.push_str(&kmon);
                    } else {
                        inner.push_str(&format!("{mag}{kmon}"));
                    }
                }
                (false, format!("({inner}){zmon}"))
            };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&body);
        }
        out
    }

    fn default_names(&self) -> Vec<String> {
        AbelianGroup::fiber_and_deck(self.rank.saturating_sub(1))
            .names()
            .to_vec()
    }
}

fn k_factors<'a>(e: &GroupElement, names: &'a [String], k: usize) -> Vec<(i64, &'a str)> {
    (0..k).map(|i| (e.0[i], names[i].as_str())).collect()
}

fn monomial_str(factors: &[(i64, &str)]) -> String {
    factors
        .iter()
        .filter(|(x, _)| *x != 0)
        .map(|(x, n)| {
            if *x == 1 {
                n.to_string()
            } else {
                format!("{n}^{x}")
            }
        })
        .collect()
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(&self.default_names()))
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c);
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), &-c);
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut acc: BTreeMap<GroupElement, BigInt> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                *acc.entry(e1.add(e2)).or_insert_with(BigInt::zero) += c1 * c2;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        LaurentPoly {
            rank: self.rank.max(rhs.rank),
            terms: acc,
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            rank: self.rank,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

/// A Laurent polynomial in one variable `t`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly1V {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly1V {
    pub fn zero() -> Self {
        LaurentPoly1V::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, i64)>) -> Self {
        let mut p = LaurentPoly1V::zero();
        for (k, c) in terms {
            p.add_term(k, &BigInt::from(c));
        }
        p
    }

    /// `t^{-deg} p(t)`-style embedding of an ordinary polynomial, i.e.
    /// `Σ c_k t^k`.
    pub fn from_poly(p: &IntPoly) -> Self {
        let mut out = LaurentPoly1V::zero();
        for (k, c) in p.coeffs().iter().enumerate() {
            out.add_term(k as i64, c);
        }
        out
    }

    /// `Σ c_k t^{-k}`, i.e. `p(1/t)`.
    pub fn from_poly_inverted(p: &IntPoly) -> Self {
        let mut out = LaurentPoly1V::zero();
        for (k, c) in p.coeffs().iter().enumerate() {
            out.add_term(-(k as i64), c);
        }
        out
    }

    pub fn add_term(&mut self, k: i64, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(k).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, k: i64) -> BigInt {
        self.terms.get(&k).cloned().unwrap_or_default()
    }

    /// Lowest and highest exponents.
    pub fn span(&self) -> Option<(i64, i64)> {
        Some((*self.terms.keys().next()?, *self.terms.keys().next_back()?))
    }

    /// Multiply by `t^{-min}` to get an ordinary polynomial with nonzero
    /// constant term.
    pub fn cleared(&self) -> IntPoly {
        let Some((lo, hi)) = self.span() else {
            return IntPoly::zero();
        };
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (k, c) in &self.terms {
            coeffs[(k - lo) as usize] = c.clone();
        }
        IntPoly::new(coeffs)
    }

    pub fn unit_normal_form(&self) -> Result<LaurentPoly1V> {
        let (&k, c) = self.terms.iter().next().ok_or(Error::ZeroPolynomial)?;
        let neg = c.is_negative();
        Ok(LaurentPoly1V {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e - k, if neg { -c } else { c.clone() }))
                .collect(),
        })
    }

    pub fn unit_equivalent(&self, other: &LaurentPoly1V) -> bool {
        match (self.unit_normal_form(), other.unit_normal_form()) {
            (Ok(a), Ok(b)) => a == b,
            (Err(_), Err(_)) => true,
            _ => false,
        }
    }
}

impl Mul for &LaurentPoly1V {
    type Output = LaurentPoly1V;
    fn mul(self, rhs: &LaurentPoly1V) -> LaurentPoly1V {
        let mut out = LaurentPoly1V::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a + b, &(x * y));
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly1V {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_univariate(f, self.terms.iter().rev().map(|(k, c)| (*k, c)), "t")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z() -> LaurentPoly {
        LaurentPoly::var(2, 1)
    }

    fn a() -> LaurentPoly {
        LaurentPoly::var(2, 0)
    }

    fn c(x: i64) -> LaurentPoly {
        LaurentPoly::constant(2, x)
    }

    #[test]
    fn exact_division_in_z() {
        let num = &(&z() - &c(2)) * &(&z() - &c(1));
        assert_eq!(num.exact_div(&(&z() - &c(1))).unwrap(), &z() - &c(2));
    }

    #[test]
    fn nonexact_division_terminates() {
        let num = &z().pow(2) - &a();
        let err = num.exact_div(&(&z() - &c(1))).unwrap_err();
        assert!(matches!(err, Error::NonexactDivision(_)));
        // 1 / (1 - z) would descend forever without the box bound.
        assert!(c(1).exact_div(&(&c(1) - &z())).is_err());
    }

    #[test]
    fn unit_normal_form_examples() {
        // -a z^3 + a^2 z  ≐  z^2 - a
        let p = &(&a() * &z().pow(3)).scale(&BigInt::from(-1)) + &(&a().pow(2) * &z());
        assert!(p.unit_equivalent(&(&z().pow(2) - &a())));
        let nf = (&z() - &c(2)).unit_normal_form().unwrap();
        assert_eq!(nf, &c(2) - &z());
        assert!((&z() - &c(2)).unit_equivalent(&(&c(2) - &z())));
        assert!(matches!(
            LaurentPoly::zero(2).unit_normal_form(),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn unit_quotient_recovers_unit() {
        let p = &z() - &c(2);
        let h = GroupElement(vec![3, -1]);
        let q = -&p.shift(&h);
        assert_eq!(q.unit_quotient(&p), Some((-1, h)));
        assert_eq!((&z() - &c(3)).unit_quotient(&p), None);
    }

    #[test]
    fn involution_and_inv() {
        let eps = CohomClass(vec![0, 1]);
        let p = &z() - &c(2);
        assert_eq!(p.apply_involution(&eps), &(-&z()) - &c(2));
        assert_eq!(p.apply_involution(&eps).apply_involution(&eps), p);
        let inv = p.apply_inv();
        assert!(inv.unit_equivalent(&(&c(1) - &z().scale(&BigInt::from(2)))));
        assert_eq!(inv.apply_inv(), p);
    }

    #[test]
    fn mod2_examples() {
        assert!((&z() - &c(2)).mod2_equivalent(&z()));
        let sq = (&z() - &c(1)).pow(2);
        assert!(sq.mod2_equivalent(&(&z().pow(2) + &c(1))));
        assert!(!sq.mod2_equivalent(&z()));
    }

    #[test]
    fn specialization_at_zero_is_coefficient_sum() {
        let p = &(&z().pow(2) - &a()) + &c(5);
        let s = p.specialize(&CohomClass(vec![0, 0]));
        assert_eq!(s, LaurentPoly1V::from_terms([(0, 5)]));
        assert_eq!(p.coefficient_sum(), BigInt::from(5));
    }

    #[test]
    fn render_grouped_by_z() {
        let d = LaurentPoly::from_terms(
            2,
            [
                (vec![0, 4], 1),
                (vec![0, 3], 2),
                (vec![0, 2], 1),
                (vec![1, 2], -7),
                (vec![1, 1], 2),
                (vec![2, 0], 1),
            ],
        );
        assert_eq!(d.to_string(), "z^4 + 2z^3 + (1-7a)z^2 + 2az + a^2");
        let one_var = LaurentPoly::from_terms(1, [(vec![1], 1), (vec![0], -2)]);
        assert_eq!(one_var.to_string(), "z - 2");
    }

    #[test]
    fn display_form_translates_and_fixes_sign() {
        let p = LaurentPoly::from_terms(2, [(vec![1, 3], -1), (vec![2, 1], 1)]);
        assert_eq!(
            p.display_form(),
            LaurentPoly::from_terms(2, [(vec![0, 2], 1), (vec![1, 0], -1)])
        );
    }

    #[test]
    fn one_variable_clearing() {
        let p = LaurentPoly1V::from_terms([(-4, 1), (-3, 2), (0, 1)]);
        assert_eq!(p.cleared(), IntPoly::from_i64(&[1, 2, 0, 0, 1]));
        assert_eq!(p.to_string(), "1 + 2t^-3 + t^-4");
    }
}
