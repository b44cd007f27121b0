//! Multivariate polynomials with exact integer coefficients.
//!
//! Polynomials live in `Z[x1, ..., xm]` where `m` is fixed per value
//! (`nvars`). Terms are kept in a sorted map keyed by exponent vectors; zero
//! coefficients are never stored.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("variable count mismatch: {0} vs {1}")]
    VariableMismatch(usize, usize),
    #[error("division by the zero linear form")]
    ZeroModulus,
    #[error("not divisible by {0}")]
    NotDivisible(String),
    #[error("elementary symmetric degree {j} exceeds input count {len}")]
    SymmetricDegree { j: usize, len: usize },
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

/// Exponent vector. Ordered graded-lexicographically: total degree first,
/// then lexicographic with `x1 > x2 > ...`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    /// The monomial `x_i` (1-based).
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i - 1] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / x_i` (1-based), if `x_i` divides.
    pub fn div_var(&self, i: usize) -> Option<Monomial> {
        if self.0[i - 1] == 0 {
            return None;
        }
        let mut e = self.0.clone();
        e[i - 1] -= 1;
        Some(Monomial(e))
    }

    /// All monomials of total degree `d` in `nvars` variables, ascending.
    pub fn all_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
        fn rec(rest: usize, d: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if rest == 1 {
                cur.push(d);
                out.push(Monomial(cur.clone()));
                cur.pop();
                return;
            }
            for a in 0..=d {
                cur.push(a);
                rec(rest - 1, d - a, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if nvars == 0 {
            if d == 0 {
                out.push(Monomial(Vec::new()));
            }
            return out;
        }
        rec(nvars, d, &mut Vec::with_capacity(nvars), &mut out);
        out.sort();
        out
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{}", e)?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// A polynomial in `Z[x1, ..., x_nvars]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigInt::one())
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        Self::monomial(nvars, Monomial::one(nvars), c)
    }

    /// The variable `x_i`, 1-based.
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= nvars, "variable x{} out of range", i);
        Self::monomial(nvars, Monomial::var(nvars, i), 1)
    }

    pub fn monomial(nvars: usize, m: Monomial, c: impl Into<BigInt>) -> Self {
        assert_eq!(m.nvars(), nvars);
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { nvars, terms }
    }

    /// Builds from `(monomial, coefficient)` pairs, merging duplicates.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, BigInt)>,
    {
        let mut p = Polynomial::zero(nvars);
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars);
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Maximum total degree, `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    /// The common degree of all terms; `None` if inhomogeneous or zero.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys();
        let d = it.next()?.degree();
        it.all(|m| m.degree() == d).then_some(d)
    }

    /// True when zero or every term has polynomial degree `d`.
    pub fn is_homogeneous_of(&self, d: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }

    pub fn homogeneous_component(&self, d: u32) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.same_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.same_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.same_ring(other)?;
        let mut out = Polynomial::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    fn same_ring(&self, other: &Polynomial) -> Result<(), PolyError> {
        if self.nvars != other.nvars {
            return Err(PolyError::VariableMismatch(self.nvars, other.nvars));
        }
        Ok(())
    }

    pub fn scale(&self, c: &BigInt) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.nvars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact division by a linear form.
    ///
    /// Eliminates one variable of the form by synthetic division in that
    /// variable. A variable with coefficient `±1` is preferred, in which case
    /// no scalar division happens at all; otherwise every scalar division
    /// must be exact, which is equivalent to divisibility in `Z[x]` for
    /// primitive forms.
    pub fn divide_exact_linear(&self, ell: &LinearForm) -> Result<Polynomial, PolyError> {
        if ell.nvars() != self.nvars {
            return Err(PolyError::VariableMismatch(self.nvars, ell.nvars()));
        }
        let pivot = ell.pivot_variable().ok_or(PolyError::ZeroModulus)?;
        if self.is_zero() {
            return Ok(Polynomial::zero(self.nvars));
        }
        let not_div = || PolyError::NotDivisible(ell.to_string());
        let t = pivot - 1;
        let u = BigInt::from(ell.coeffs()[t]);
        // rest = ell - u * x_t
        let rest = {
            let mut c = ell.coeffs().to_vec();
            c[t] = 0;
            LinearForm::new(c).to_polynomial()
        };

        // Split self by the power of x_t.
        let top = self.terms.keys().map(|m| m.0[t]).max().unwrap_or(0);
        let mut slices: Vec<Polynomial> = vec![Polynomial::zero(self.nvars); top as usize + 1];
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            let k = e[t] as usize;
            e[t] = 0;
            slices[k].add_term(Monomial(e), c.clone());
        }
        if top == 0 {
            return Err(not_div());
        }

        let div_scalar = |p: &Polynomial| -> Option<Polynomial> {
            if u.is_one() {
                return Some(p.clone());
            }
            if (-&u).is_one() {
                return Some(-p);
            }
            let mut out = Polynomial::zero(p.nvars);
            for (m, c) in &p.terms {
                let (q, r) = c.div_rem(&u);
                if !r.is_zero() {
                    return None;
                }
                out.terms.insert(m.clone(), q);
            }
            Some(out)
        };

        // q_{k-1} = (c_k - rest * q_k) / u, from the top down.
        let mut quot: Vec<Polynomial> = vec![Polynomial::zero(self.nvars); top as usize];
        let mut carry = Polynomial::zero(self.nvars);
        for k in (1..=top as usize).rev() {
            let numer = &slices[k] - &(&rest * &carry);
            let q = div_scalar(&numer).ok_or_else(not_div)?;
            quot[k - 1] = q.clone();
            carry = q;
        }
        let remainder = &slices[0] - &(&rest * &carry);
        if !remainder.is_zero() {
            return Err(not_div());
        }

        let mut out = Polynomial::zero(self.nvars);
        for (k, q) in quot.into_iter().enumerate() {
            for (m, c) in q.terms {
                let mut e = m.0;
                e[t] += k as u32;
                out.terms.insert(Monomial(e), c);
            }
        }
        Ok(out)
    }

    /// Exact division by a product of linear forms, one factor at a time.
    pub fn divide_exact_product(&self, forms: &[LinearForm]) -> Result<Polynomial, PolyError> {
        forms
            .iter()
            .try_fold(self.clone(), |acc, ell| acc.divide_exact_linear(ell))
    }

    /// The degree-one part as a linear form, if the polynomial is linear
    /// homogeneous (or zero) with machine-size coefficients.
    pub fn to_linear_form(&self) -> Option<LinearForm> {
        let mut coeffs = vec![0i64; self.nvars];
        for (m, c) in &self.terms {
            if m.degree() != 1 {
                return None;
            }
            let i = m.0.iter().position(|&e| e == 1)?;
            coeffs[i] = c.to_i64()?;
        }
        Some(LinearForm::new(coeffs))
    }

    /// Parses text such as `x2 - 2*x1 + x3` or `-x1^2*x3 + 4`.
    pub fn parse(nvars: usize, text: &str) -> Result<Polynomial, PolyError> {
        Parser {
            src: text.as_bytes(),
            pos: 0,
            nvars,
        }
        .parse()
    }

    pub fn to_json_terms(&self) -> Vec<TermJson> {
        self.terms
            .iter()
            .rev()
            .map(|(m, c)| TermJson {
                exponents: m.0.clone(),
                coeff: JsonInt(c.clone()),
            })
            .collect()
    }

    pub fn from_json_terms(nvars: usize, terms: Vec<TermJson>) -> Result<Polynomial, PolyError> {
        let mut p = Polynomial::zero(nvars);
        for t in terms {
            if t.exponents.len() != nvars {
                return Err(PolyError::VariableMismatch(nvars, t.exponents.len()));
            }
            p.add_term(Monomial(t.exponents), t.coeff.0);
        }
        Ok(p)
    }
}

/// One term of the JSON encoding: `{"exponents": [...], "coeff": int}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TermJson {
    pub exponents: Vec<u32>,
    pub coeff: JsonInt,
}

/// Integer that serializes as a JSON number when it fits in `i64` and as a
/// decimal string otherwise.
#[derive(Debug, Clone, PartialEq)]
pub struct JsonInt(pub BigInt);

impl Serialize for JsonInt {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Num(i64),
            Str(String),
        }
        match Repr::deserialize(d)? {
            Repr::Num(v) => Ok(JsonInt(BigInt::from(v))),
            Repr::Str(s) => s
                .trim()
                .parse::<BigInt>()
                .map(JsonInt)
                .map_err(serde::de::Error::custom),
        }
    }
}

impl Serialize for Polynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_json_terms().serialize(s)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (idx, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            if m.degree() == 0 {
                write!(f, "{}", a)?;
            } else if a.is_one() {
                write!(f, "{}", m)?;
            } else {
                write!(f, "{}*{}", a, m)?;
            }
        }
        Ok(())
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    nvars: usize,
}

impl Parser<'_> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, PolyError> {
        Err(PolyError::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn number(&mut self) -> Result<BigInt, PolyError> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse::<BigInt>().expect("digits parse"))
    }

    fn parse(mut self) -> Result<Polynomial, PolyError> {
        let mut out = Polynomial::zero(self.nvars);
        let mut first = true;
        loop {
            let sign = match self.peek() {
                None if first => return self.err("empty polynomial"),
                None => break,
                Some(b'+') => {
                    self.pos += 1;
                    1
                }
                Some(b'-') => {
                    self.pos += 1;
                    -1
                }
                Some(_) if first => 1,
                Some(c) => return self.err(format!("unexpected '{}'", c as char)),
            };
            first = false;
            let (m, c) = self.term()?;
            out.add_term(m, c * sign);
        }
        Ok(out)
    }

    fn term(&mut self) -> Result<(Monomial, BigInt), PolyError> {
        let mut coeff = BigInt::one();
        let mut exps = vec![0u32; self.nvars];
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => coeff *= self.number()?,
                Some(b'x') => {
                    self.pos += 1;
                    let idx = self.number()?;
                    let i = idx.to_usize().unwrap_or(0);
                    if i == 0 || i > self.nvars {
                        return self.err(format!("variable x{} out of range 1..={}", idx, self.nvars));
                    }
                    let mut e = 1u32;
                    if self.peek() == Some(b'^') {
                        self.pos += 1;
                        self.skip_ws();
                        e = self
                            .number()?
                            .to_u32()
                            .ok_or(PolyError::Parse {
                                pos: self.pos,
                                msg: "exponent too large".into(),
                            })?;
                    }
                    exps[i - 1] += e;
                }
                _ => return self.err("expected coefficient or variable"),
            }
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok((Monomial(exps), coeff))
    }
}

/// Sum over all `j`-subsets of `inputs` of the product of the chosen entries.
pub fn elementary_symmetric(
    nvars: usize,
    j: usize,
    inputs: &[Polynomial],
) -> Result<Polynomial, PolyError> {
    if j > inputs.len() {
        return Err(PolyError::SymmetricDegree {
            j,
            len: inputs.len(),
        });
    }
    // e[k] after processing a prefix of the inputs.
    let mut e = vec![Polynomial::zero(nvars); j + 1];
    e[0] = Polynomial::one(nvars);
    for (seen, y) in inputs.iter().enumerate() {
        for k in (1..=j.min(seen + 1)).rev() {
            let add = &e[k - 1] * y;
            e[k] += &add;
        }
    }
    Ok(e.swap_remove(j))
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs).expect("polynomial ring mismatch")
            }
        }
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        assert_eq!(self.nvars, rhs.nvars, "polynomial ring mismatch");
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: &Polynomial) {
        assert_eq!(self.nvars, rhs.nvars, "polynomial ring mismatch");
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c);
        }
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

/// A homogeneous degree-one polynomial stored as its coefficient vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LinearForm(Vec<i64>);

impl LinearForm {
    pub fn new(coeffs: Vec<i64>) -> Self {
        LinearForm(coeffs)
    }

    /// `x_i`, 1-based.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut c = vec![0; nvars];
        c[i - 1] = 1;
        LinearForm(c)
    }

    pub fn zero(nvars: usize) -> Self {
        LinearForm(vec![0; nvars])
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn content(&self) -> i64 {
        self.0.iter().fold(0i64, |g, &c| g.gcd(&c))
    }

    pub fn is_primitive(&self) -> bool {
        self.content() == 1
    }

    /// Every nonzero coefficient is `±1`.
    pub fn has_unit_coefficients(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&c| c.abs() <= 1)
    }

    /// 1-based index of the variable eliminated when dividing by this form:
    /// the first one with coefficient `±1`, else the one of smallest
    /// absolute coefficient.
    fn pivot_variable(&self) -> Option<usize> {
        if let Some(i) = self.0.iter().position(|c| c.abs() == 1) {
            return Some(i + 1);
        }
        self.0
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != 0)
            .min_by_key(|(_, c)| c.abs())
            .map(|(i, _)| i + 1)
    }

    pub fn to_polynomial(&self) -> Polynomial {
        let n = self.nvars();
        let mut p = Polynomial::zero(n);
        for (i, &c) in self.0.iter().enumerate() {
            p.add_term(Monomial::var(n, i + 1), BigInt::from(c));
        }
        p
    }

    /// True when `self = c * other` for some rational `c`.
    pub fn is_proportional(&self, other: &LinearForm) -> bool {
        let n = self.nvars();
        (0..n).all(|i| {
            (i..n).all(|j| {
                self.0[i] as i128 * other.0[j] as i128 == self.0[j] as i128 * other.0[i] as i128
            })
        })
    }
}

impl Add for &LinearForm {
    type Output = LinearForm;
    fn add(self, rhs: &LinearForm) -> LinearForm {
        assert_eq!(self.nvars(), rhs.nvars());
        LinearForm(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &LinearForm {
    type Output = LinearForm;
    fn sub(self, rhs: &LinearForm) -> LinearForm {
        assert_eq!(self.nvars(), rhs.nvars());
        LinearForm(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &LinearForm {
    type Output = LinearForm;
    fn neg(self) -> LinearForm {
        LinearForm(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_polynomial().fmt(f)
    }
}
