//! Exact arithmetic for invariant values.
//!
//! Values live in the subring of `Q(x, w, t)` made of Laurent polynomials with
//! integer coefficients divided by a power of `(1 - t)`. Every coefficient the
//! skein recursion multiplies by is a Laurent monomial or `t^{±1} - 1`, and the
//! unlink values only ever divide by `(1 - t)`, so no general fraction field
//! (and no multivariate gcd) is needed.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("pole: denominator (1-t)^{0} vanishes at t = 1")]
    PoleAtTOne(u32),
    #[error("division by zero: variable {0} evaluated at 0 with a negative exponent")]
    ZeroVariable(char),
    #[error("specialization failed: (1-s^2)^{0} does not divide the numerator")]
    Specialization(u32),
}

/// Exponent vector `x^ex w^ew t^et`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    pub ex: i32,
    pub ew: i32,
    pub et: i32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial {
        ex: 0,
        ew: 0,
        et: 0,
    };

    pub fn new(ex: i32, ew: i32, et: i32) -> Self {
        Monomial { ex, ew, et }
    }

    fn mul(self, o: Monomial) -> Monomial {
        Monomial::new(self.ex + o.ex, self.ew + o.ew, self.et + o.et)
    }

    /// Key used for printing: descending in `w`, then `t`, then `x`.
    fn print_key(&self) -> (i32, i32, i32) {
        (self.ew, self.et, self.ex)
    }
}

/// Integer Laurent polynomial in `x, w, t`. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0, 0)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0, 0, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, ex: i32, ew: i32, et: i32) -> Self {
        let mut p = Self::zero();
        p.add_term(Monomial::new(ex, ew, et), c.into());
        p
    }

    pub fn x() -> Self {
        Self::monomial(1, 1, 0, 0)
    }

    pub fn w() -> Self {
        Self::monomial(1, 0, 1, 0)
    }

    pub fn t() -> Self {
        Self::monomial(1, 0, 0, 1)
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Monomial::ONE).is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    /// Multiplies by the monomial `c * x^ex w^ew t^et`.
    pub fn scale(&self, c: impl Into<BigInt>, m: Monomial) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v * &c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Applies `x -> x^sx, w -> w^sw, t -> t^st` for signs `sx, sw, st` in `{1, -1}`.
    pub fn invert_vars(&self, sx: i32, sw: i32, st: i32) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Monomial::new(m.ex * sx, m.ew * sw, m.et * st), c.clone()))
                .collect(),
        }
    }

    /// Groups the terms by their `(x, w)` part; each group is a Laurent
    /// polynomial in `t`.
    fn t_slices(&self) -> BTreeMap<(i32, i32), BTreeMap<i32, BigInt>> {
        let mut out: BTreeMap<(i32, i32), BTreeMap<i32, BigInt>> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry((m.ex, m.ew)).or_default().insert(m.et, c.clone());
        }
        out
    }

    /// True when `(1 - t)` divides `self`: every `t`-slice vanishes at `t = 1`.
    pub fn divisible_by_one_minus_t(&self) -> bool {
        self.t_slices()
            .values()
            .all(|slice| slice.values().fold(BigInt::zero(), |a, c| a + c).is_zero())
    }

    /// Exact quotient by `(1 - t)`, or `None` if the division leaves a remainder.
    pub fn div_one_minus_t(&self) -> Option<Self> {
        let mut out = Self::zero();
        for ((ex, ew), slice) in self.t_slices() {
            let (lo, hi) = (*slice.keys().next()?, *slice.keys().next_back()?);
            // (1 - t) q = p  =>  q_i = p_i + q_{i-1}
            let mut run = BigInt::zero();
            for i in lo..hi {
                if let Some(c) = slice.get(&i) {
                    run += c;
                }
                out.add_term(Monomial::new(ex, ew, i), run.clone());
            }
            run += &slice[&hi];
            if !run.is_zero() {
                return None;
            }
        }
        Some(out)
    }

    pub fn eval(
        &self,
        x: &BigRational,
        w: &BigRational,
        t: &BigRational,
    ) -> Result<BigRational, PolyError> {
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let term = BigRational::from_integer(c.clone())
                * rat_pow(x, m.ex, 'x')?
                * rat_pow(w, m.ew, 'w')?
                * rat_pow(t, m.et, 't')?;
            acc += term;
        }
        Ok(acc)
    }

    fn min_exponents(&self) -> Monomial {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            return Monomial::ONE;
        };
        it.fold(*first, |a, m| {
            Monomial::new(a.ex.min(m.ex), a.ew.min(m.ew), a.et.min(m.et))
        })
    }
}

fn rat_pow(base: &BigRational, e: i32, var: char) -> Result<BigRational, PolyError> {
    if e < 0 && base.is_zero() {
        return Err(PolyError::ZeroVariable(var));
    }
    Ok(num_traits::pow::Pow::pow(base, e))
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(*mb), ca * cb);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($ty:ty, $($tr:ident :: $f:ident),*) => {$(
        impl $tr for $ty {
            type Output = $ty;
            fn $f(self, rhs: $ty) -> $ty {
                (&self).$f(&rhs)
            }
        }
    )*};
}

forward_owned!(LaurentPoly, Add::add, Sub::sub, Mul::mul);

fn fmt_factors(vars: &[(char, i32)]) -> Vec<String> {
    vars.iter()
        .filter(|(_, e)| *e != 0)
        .map(|(v, e)| {
            if *e == 1 {
                v.to_string()
            } else {
                format!("{v}^{e}")
            }
        })
        .collect()
}

/// Writes a signed sum of terms. `terms` must already be in print order.
fn fmt_sum<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (Vec<String>, &'a BigInt)>,
) -> fmt::Result {
    let mut first = true;
    for (factors, c) in terms {
        let neg = c.is_negative();
        let mag = c.abs();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, "{}", if neg { " - " } else { " + " })?;
        }
        first = false;
        let mut parts = Vec::new();
        if !mag.is_one() || factors.is_empty() {
            parts.push(mag.to_string());
        }
        parts.extend(factors);
        write!(f, "{}", parts.join("*"))?;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

fn sorted_for_print(p: &LaurentPoly) -> Vec<(&Monomial, &BigInt)> {
    let mut v: Vec<_> = p.terms.iter().collect();
    v.sort_by_key(|a| std::cmp::Reverse(a.0.print_key()));
    v
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_sum(
            f,
            sorted_for_print(self)
                .into_iter()
                .map(|(m, c)| (fmt_factors(&[('w', m.ew), ('x', m.ex), ('t', m.et)]), c)),
        )
    }
}

/// `num / (1 - t)^denom_pow`, kept normalized: when `denom_pow > 0` the
/// numerator is not divisible by `(1 - t)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkeinValue {
    num: LaurentPoly,
    denom_pow: u32,
}

impl SkeinValue {
    pub fn new(num: LaurentPoly, denom_pow: u32) -> Self {
        SkeinValue { num, denom_pow }.normalize()
    }

    /// Builds a value without normalizing. Mostly useful for tests of
    /// [`SkeinValue::normalize`] itself.
    pub fn raw(num: LaurentPoly, denom_pow: u32) -> Self {
        SkeinValue { num, denom_pow }
    }

    pub fn zero() -> Self {
        Self::raw(LaurentPoly::zero(), 0)
    }

    pub fn one() -> Self {
        Self::raw(LaurentPoly::one(), 0)
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Self::raw(p, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, ex: i32, ew: i32, et: i32) -> Self {
        Self::from_poly(LaurentPoly::monomial(c, ex, ew, et))
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denom_pow(&self) -> u32 {
        self.denom_pow
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_normalized(&self) -> bool {
        self.denom_pow == 0 || !self.num.divisible_by_one_minus_t()
    }

    pub fn normalize(mut self) -> Self {
        if self.num.is_zero() {
            self.denom_pow = 0;
            return self;
        }
        while self.denom_pow > 0 {
            match self.num.div_one_minus_t() {
                Some(q) => {
                    self.num = q;
                    self.denom_pow -= 1;
                }
                None => break,
            }
        }
        self
    }

    /// Multiplies the numerator by `(1 - t)^k`.
    fn lift(&self, k: u32) -> LaurentPoly {
        let one_minus_t = &LaurentPoly::one() - &LaurentPoly::t();
        &self.num * &one_minus_t.pow(k)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Multiplies by `c * x^ex w^ew t^et`.
    pub fn scale(&self, c: impl Into<BigInt>, m: Monomial) -> Self {
        Self::raw(self.num.scale(c, m), self.denom_pow).normalize()
    }

    pub fn eval(
        &self,
        x: &BigRational,
        w: &BigRational,
        t: &BigRational,
    ) -> Result<BigRational, PolyError> {
        let n = self.num.eval(x, w, t)?;
        if self.denom_pow == 0 {
            return Ok(n);
        }
        let d = BigRational::one() - t;
        if d.is_zero() {
            return Err(PolyError::PoleAtTOne(self.denom_pow));
        }
        Ok(n / num_traits::pow::Pow::pow(&d, self.denom_pow))
    }

    /// Substitution `w -> 1/w, t -> 1/t`.
    ///
    /// `(1 - 1/t)^k = (-1)^k t^{-k} (1 - t)^k`, so the inverted numerator picks
    /// up a factor `(-1)^k t^k`.
    pub fn invert_w_t(&self) -> Self {
        let k = self.denom_pow as i32;
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let num = self
            .num
            .invert_vars(1, -1, -1)
            .scale(sign, Monomial::new(0, 0, k));
        Self::raw(num, self.denom_pow).normalize()
    }

    /// Jones specialization `w = s, t = s^2` (`s` standing for `t^{1/2}`).
    ///
    /// The `(1 - s^2)^k` denominator has to divide the substituted numerator
    /// exactly; otherwise the value was not a monochrome invariant.
    pub fn substitute_half(&self) -> Result<XsPoly, PolyError> {
        let mut slices: BTreeMap<i32, BTreeMap<i32, BigInt>> = BTreeMap::new();
        for (m, c) in self.num.terms() {
            let e = m.ew + 2 * m.et;
            let slot = slices.entry(m.ex).or_default().entry(e).or_default();
            *slot += c;
        }
        let mut out = XsPoly::default();
        for (ex, mut slice) in slices {
            slice.retain(|_, c| !c.is_zero());
            for _ in 0..self.denom_pow {
                slice =
                    div_one_minus_s2(&slice).ok_or(PolyError::Specialization(self.denom_pow))?;
            }
            for (es, c) in slice {
                out.add_term(ex, es, c);
            }
        }
        Ok(out)
    }
}

/// Exact division of a Laurent polynomial in `s` by `1 - s^2`.
fn div_one_minus_s2(p: &BTreeMap<i32, BigInt>) -> Option<BTreeMap<i32, BigInt>> {
    let (Some(&lo), Some(&hi)) = (p.keys().next(), p.keys().next_back()) else {
        return Some(BTreeMap::new());
    };
    // (1 - s^2) q = p  =>  q_i = p_i + q_{i-2}
    let mut q: BTreeMap<i32, BigInt> = BTreeMap::new();
    for i in lo..=hi - 2 {
        let v =
            p.get(&i).cloned().unwrap_or_default() + q.get(&(i - 2)).cloned().unwrap_or_default();
        q.insert(i, v);
    }
    for i in hi - 1..=hi {
        let rem =
            p.get(&i).cloned().unwrap_or_default() + q.get(&(i - 2)).cloned().unwrap_or_default();
        if !rem.is_zero() {
            return None;
        }
    }
    q.retain(|_, c| !c.is_zero());
    Some(q)
}

impl Add for &SkeinValue {
    type Output = SkeinValue;
    fn add(self, rhs: &SkeinValue) -> SkeinValue {
        let k = self.denom_pow.max(rhs.denom_pow);
        let num = &self.lift(k - self.denom_pow) + &rhs.lift(k - rhs.denom_pow);
        SkeinValue::raw(num, k).normalize()
    }
}

impl Sub for &SkeinValue {
    type Output = SkeinValue;
    fn sub(self, rhs: &SkeinValue) -> SkeinValue {
        self + &(-rhs)
    }
}

impl Neg for &SkeinValue {
    type Output = SkeinValue;
    fn neg(self) -> SkeinValue {
        SkeinValue::raw(-&self.num, self.denom_pow)
    }
}

impl Mul for &SkeinValue {
    type Output = SkeinValue;
    fn mul(self, rhs: &SkeinValue) -> SkeinValue {
        SkeinValue::raw(&self.num * &rhs.num, self.denom_pow + rhs.denom_pow).normalize()
    }
}

forward_owned!(SkeinValue, Add::add, Sub::sub, Mul::mul);

/// `y = x (t w^2 - 1) / (1 - t)`, the factor by which an extra circle of an
/// already used color multiplies the unlink value (up to `1/(wx)`).
pub fn make_y() -> SkeinValue {
    let num = &LaurentPoly::monomial(1, 1, 2, 1) - &LaurentPoly::x();
    SkeinValue::raw(num, 1)
}

/// Renders `N / ((1-t)^k * w^b * x^a * t^c)` where the monomial is pulled out so
/// that `N` has no negative exponents. Unit factors are omitted.
impl fmt::Display for SkeinValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.num.is_zero() {
            return write!(f, "0");
        }
        let min = self.num.min_exponents();
        let shift = Monomial::new((-min.ex).max(0), (-min.ew).max(0), (-min.et).max(0));
        let numer = self.num.scale(1, shift);

        let mut den = Vec::new();
        match self.denom_pow {
            0 => {}
            1 => den.push("(1-t)".to_string()),
            k => den.push(format!("(1-t)^{k}")),
        }
        den.extend(fmt_factors(&[
            ('w', shift.ew),
            ('x', shift.ex),
            ('t', shift.et),
        ]));

        if den.is_empty() {
            return write!(f, "{numer}");
        }
        if numer.len() > 1 {
            write!(f, "({numer})")?;
        } else {
            write!(f, "{numer}")?;
        }
        if den.len() > 1 {
            write!(f, " / ({})", den.join("*"))
        } else {
            write!(f, " / {}", den[0])
        }
    }
}

/// Integer Laurent polynomial in `x` and `s`, the target of the Jones
/// specialization.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct XsPoly {
    terms: BTreeMap<(i32, i32), BigInt>,
}

impl XsPoly {
    fn add_term(&mut self, ex: i32, es: i32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((ex, es)).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(ex, es));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i32, i32), &BigInt)> {
        self.terms.iter()
    }

    /// The polynomial as a univariate one in `s`, if it does not involve `x`.
    pub fn to_s_poly(&self) -> Option<UniPoly> {
        if self.terms.keys().any(|(ex, _)| *ex != 0) {
            return None;
        }
        Some(UniPoly::from_terms(
            's',
            self.terms.iter().map(|((_, es), c)| (*es, c.clone())),
        ))
    }
}

impl fmt::Display for XsPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by_key(|a| std::cmp::Reverse((a.0 .0, a.0 .1)));
        fmt_sum(
            f,
            v.into_iter()
                .map(|((ex, es), c)| (fmt_factors(&[('x', *ex), ('s', *es)]), c)),
        )
    }
}

/// Univariate integer Laurent polynomial; the variable name is only used for
/// printing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly {
    var: char,
    terms: BTreeMap<i32, BigInt>,
}

impl UniPoly {
    pub fn zero(var: char) -> Self {
        UniPoly {
            var,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(var: char, c: impl Into<BigInt>, e: i32) -> Self {
        Self::from_terms(var, [(e, c.into())])
    }

    pub fn from_terms(var: char, terms: impl IntoIterator<Item = (i32, BigInt)>) -> Self {
        let mut p = Self::zero(var);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn var(&self) -> char {
        self.var
    }

    pub fn add_term(&mut self, e: i32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i32, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: i32) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn mul(&self, o: &UniPoly) -> UniPoly {
        let mut out = UniPoly::zero(self.var);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &o.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }

    pub fn add(&self, o: &UniPoly) -> UniPoly {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn pow(&self, n: u32) -> UniPoly {
        let mut acc = UniPoly::monomial(self.var, 1, 0);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Renames the variable and maps exponents through `f`; `None` from `f`
    /// aborts the whole map.
    pub fn map_exponents(&self, var: char, f: impl Fn(i32) -> Option<i32>) -> Option<UniPoly> {
        let mut out = UniPoly::zero(var);
        for (e, c) in &self.terms {
            out.add_term(f(*e)?, c.clone());
        }
        Some(out)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let var = self.var;
        fmt_sum(
            f,
            self.terms
                .iter()
                .rev()
                .map(|(e, c)| (fmt_factors(&[(var, *e)]), c)),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i64, i32, i32, i32)]) -> LaurentPoly {
        LaurentPoly::from_terms(
            terms
                .iter()
                .map(|&(c, ex, ew, et)| (Monomial::new(ex, ew, et), c)),
        )
    }

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn add_cancels_and_merges() {
        assert!((LaurentPoly::x() + (-&LaurentPoly::x())).is_zero());
        let tw2 = p(&[(1, 0, 2, 1)]);
        assert_eq!(
            &tw2 + &LaurentPoly::constant(-1),
            p(&[(1, 0, 2, 1), (-1, 0, 0, 0)])
        );
        let a = p(&[(1, 1, 0, 0), (1, 0, 0, 1)]);
        assert_eq!(&a + &LaurentPoly::t(), p(&[(1, 1, 0, 0), (2, 0, 0, 1)]));
    }

    #[test]
    fn mul_expands() {
        let q = p(&[(1, 0, 2, 1), (-1, 0, 0, 0)]);
        assert_eq!(&LaurentPoly::one() * &q, q);
        // brute-force convolution of (tw^2 - 1)^2
        let mut expect = BTreeMap::new();
        for (ma, ca) in [((0, 2, 1), 1i64), ((0, 0, 0), -1)] {
            for (mb, cb) in [((0, 2, 1), 1i64), ((0, 0, 0), -1)] {
                *expect
                    .entry((ma.0 + mb.0, ma.1 + mb.1, ma.2 + mb.2))
                    .or_insert(0) += ca * cb;
            }
        }
        let expect = p(&expect
            .iter()
            .map(|(&(a, b, c), &k)| (k, a, b, c))
            .collect::<Vec<_>>());
        assert_eq!(&q * &q, expect);
        assert_eq!(&q * &q, p(&[(1, 0, 4, 2), (-2, 0, 2, 1), (1, 0, 0, 0)]));
        assert!((&LaurentPoly::monomial(1, 0, -1, 0) * &LaurentPoly::w()).is_one());
    }

    #[test]
    fn normalize_examples() {
        let omt = &LaurentPoly::one() - &LaurentPoly::t();
        let v = SkeinValue::raw(&omt * &LaurentPoly::x(), 1).normalize();
        assert_eq!(v, SkeinValue::raw(LaurentPoly::x(), 0));

        let n = p(&[(1, 1, 2, 1), (-1, 1, 0, 0)]);
        let v = SkeinValue::raw(n.clone(), 1).normalize();
        assert_eq!(v, SkeinValue::raw(n, 1));

        let xw = p(&[(1, 1, 0, 0), (1, 0, 1, 0)]);
        let v = SkeinValue::raw(&omt.pow(2) * &xw, 3).normalize();
        assert_eq!(v, SkeinValue::raw(xw, 1));
    }

    #[test]
    fn add_examples() {
        let y = make_y();
        assert_eq!(&y + &SkeinValue::zero(), y);

        // (tw^2-1)/(tw^3(1-t)) + w^2(1-t)/(tw^3)
        let a = SkeinValue::new(p(&[(1, 0, -1, 0), (-1, 0, -3, -1)]), 1);
        let b = SkeinValue::new(p(&[(1, 0, -1, -1), (-1, 0, -1, 0)]), 0);
        let expect = SkeinValue::new(
            p(&[
                (1, 0, -1, 1),
                (-1, 0, -1, 0),
                (1, 0, -1, -1),
                (-1, 0, -3, -1),
            ]),
            1,
        );
        assert_eq!(&a + &b, expect);
        assert_eq!(
            expect.to_string(),
            "(w^2*t^2 - w^2*t + w^2 - 1) / ((1-t)*w^3*t)"
        );

        let u = SkeinValue::raw(LaurentPoly::one(), 1);
        let s = &u + &(-&u);
        assert!(s.is_zero());
        assert_eq!(s.denom_pow(), 0);
    }

    #[test]
    fn mul_examples() {
        let y = make_y();
        let yy = &y * &y;
        assert_eq!(yy, SkeinValue::raw(&y.num * &y.num, 2));
        assert_eq!(&y * &SkeinValue::one(), y);
        let omt = SkeinValue::from_poly(&LaurentPoly::one() - &LaurentPoly::t());
        let xv = SkeinValue::raw(LaurentPoly::x(), 1);
        assert_eq!(&omt * &xv, SkeinValue::from_poly(LaurentPoly::x()));
    }

    #[test]
    fn y_examples() {
        let y = make_y();
        assert_eq!(y.num(), &p(&[(1, 1, 2, 1), (-1, 1, 0, 0)]));
        assert_eq!(y.denom_pow(), 1);
        assert_eq!(y.eval(&r(1), &r(1), &r(2)).unwrap(), r(-1));
        let cleared = &y * &SkeinValue::from_poly(p(&[(1, -1, 0, 0), (-1, -1, 0, 1)]));
        assert_eq!(
            cleared,
            SkeinValue::from_poly(p(&[(1, 0, 2, 1), (-1, 0, 0, 0)]))
        );
    }

    #[test]
    fn eval_examples() {
        assert_eq!(SkeinValue::one().eval(&r(5), &r(-3), &r(7)).unwrap(), r(1));
        assert_eq!(make_y().eval(&r(2), &r(1), &r(3)).unwrap(), r(-2));
        assert_eq!(
            make_y().eval(&r(2), &r(1), &r(1)),
            Err(PolyError::PoleAtTOne(1))
        );
        let inv_x = SkeinValue::monomial(1, -1, 0, 0);
        assert_eq!(
            inv_x.eval(&r(0), &r(1), &r(1)),
            Err(PolyError::ZeroVariable('x'))
        );
    }

    #[test]
    fn substitute_half_examples() {
        // left trefoil: (w^2 t^2 + w^2 - 1)/(w^4 t^2)
        let tref = SkeinValue::new(p(&[(1, 0, -2, 0), (1, 0, -2, -2), (-1, 0, -4, -2)]), 0);
        let s = tref.substitute_half().unwrap().to_s_poly().unwrap();
        assert_eq!(s.to_string(), "s^-2 + s^-6 - s^-8");

        // monochrome negative Hopf
        let hopf = SkeinValue::new(
            p(&[
                (1, 0, -1, 1),
                (-1, 0, -1, 0),
                (1, 0, -1, -1),
                (-1, 0, -3, -1),
            ]),
            1,
        );
        let s = hopf.substitute_half().unwrap().to_s_poly().unwrap();
        assert_eq!(s.to_string(), "-s^-1 - s^-5");

        assert_eq!(
            SkeinValue::one().substitute_half().unwrap().to_string(),
            "1"
        );
        // y specializes to -x(1 + s^2)
        assert_eq!(
            make_y().substitute_half().unwrap().to_string(),
            "-x*s^2 - x"
        );
        assert_eq!(
            SkeinValue::new(LaurentPoly::one(), 1).substitute_half(),
            Err(PolyError::Specialization(1))
        );
    }

    #[test]
    fn invert_w_t_round_trip() {
        let y = make_y();
        let x_inv_w = SkeinValue::monomial(1, -1, -1, 0);
        // y/(xw) is fixed by w -> 1/w, t -> 1/t
        let v = &y * &x_inv_w;
        assert_eq!(v.invert_w_t(), v);
        assert_eq!(y.invert_w_t().invert_w_t(), y);
    }

    #[test]
    fn rendering() {
        assert_eq!(SkeinValue::one().to_string(), "1");
        assert_eq!(SkeinValue::zero().to_string(), "0");
        assert_eq!(SkeinValue::monomial(1, -1, -1, 0).to_string(), "1 / (w*x)");
        assert_eq!(make_y().to_string(), "(w^2*x*t - x) / (1-t)");
        let k1 = SkeinValue::new(p(&[(1, 0, -1, -1), (1, -1, -3, 0), (-1, 0, -3, -1)]), 0);
        assert_eq!(k1.to_string(), "(w^2*x + t - x) / (w^3*x*t)");
        assert_eq!(SkeinValue::monomial(-3, 0, -2, 0).to_string(), "-3 / w^2");
        assert_eq!(SkeinValue::monomial(2, 1, 2, 0).to_string(), "2*w^2*x");
    }
}
