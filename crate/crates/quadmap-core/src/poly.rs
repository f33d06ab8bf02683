//! Exact bivariate polynomials: sparse exponent map over a scalar field,
//! with resultants, gcd and squarefree parts over the rationals. These are
//! the elimination tools behind discriminants and degree counting.

use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::rational::Rational;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KernelError {
    /// Resultants and squarefree parts of the zero polynomial are undefined.
    ZeroPolynomial,
}

impl fmt::Display for KernelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KernelError::ZeroPolynomial => write!(f, "operation undefined for the zero polynomial"),
        }
    }
}

/// Graded-lex comparison on exponent pairs: total degree first, then the
/// first variable. Fixes leading terms and the canonical sign convention.
pub fn glex_cmp(a: (u32, u32), b: (u32, u32)) -> Ordering {
    (a.0 + a.1, a.0).cmp(&(b.0 + b.1, b.0))
}

/// Polynomial in two named variables. No zero coefficients are stored.
#[derive(Clone, PartialEq, Eq)]
pub struct BivariatePolynomial<S: Scalar> {
    vars: [&'static str; 2],
    terms: BTreeMap<(u32, u32), S>,
}

impl<S: Scalar> BivariatePolynomial<S> {
    pub fn zero(vars: [&'static str; 2]) -> Self {
        BivariatePolynomial { vars, terms: BTreeMap::new() }
    }

    pub fn constant(vars: [&'static str; 2], c: S) -> Self {
        let mut p = Self::zero(vars);
        p.set_term(0, 0, c);
        p
    }

    pub fn one(vars: [&'static str; 2]) -> Self {
        Self::constant(vars, S::one())
    }

    pub fn monomial(vars: [&'static str; 2], i: u32, j: u32, c: S) -> Self {
        let mut p = Self::zero(vars);
        p.set_term(i, j, c);
        p
    }

    pub fn from_terms(vars: [&'static str; 2], terms: &[(u32, u32, S)]) -> Self {
        let mut p = Self::zero(vars);
        for (i, j, c) in terms {
            let cur = p.coeff(*i, *j).add(c);
            p.set_term(*i, *j, cur);
        }
        p
    }

    pub fn vars(&self) -> [&'static str; 2] {
        self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &S)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn set_term(&mut self, i: u32, j: u32, c: S) {
        if c.is_zero() {
            self.terms.remove(&(i, j));
        } else {
            self.terms.insert((i, j), c);
        }
    }

    pub fn coeff(&self, i: u32, j: u32) -> S {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(S::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&(i, j)| i == 0 && j == 0)
    }

    /// Total degree; zero polynomial reports 0.
    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|&(i, j)| i + j).max().unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms
            .keys()
            .map(|&(i, j)| if var == 0 { i } else { j })
            .max()
            .unwrap_or(0)
    }

    pub fn leading_glex(&self) -> Option<((u32, u32), &S)> {
        self.terms
            .iter()
            .max_by(|a, b| glex_cmp(*a.0, *b.0))
            .map(|(e, c)| (*e, c))
    }

    fn assert_same_vars(&self, rhs: &Self) {
        assert_eq!(self.vars, rhs.vars, "polynomial variable mismatch");
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.assert_same_vars(rhs);
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            let cur = out.coeff(i, j).add(c);
            out.set_term(i, j, cur);
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        let mut out = Self::zero(self.vars);
        for (&(i, j), c) in &self.terms {
            out.set_term(i, j, c.neg());
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        self.assert_same_vars(rhs);
        let mut out = Self::zero(self.vars);
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &rhs.terms {
                let (i, j) = (i1 + i2, j1 + j2);
                let cur = out.coeff(i, j).add(&c1.mul(c2));
                out.set_term(i, j, cur);
            }
        }
        out
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut out = Self::zero(self.vars);
        for (&(i, j), k) in &self.terms {
            out.set_term(i, j, k.mul(c));
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.vars);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn derivative(&self, var: usize) -> Self {
        let mut out = Self::zero(self.vars);
        for (&(i, j), c) in &self.terms {
            let (e, rest) = if var == 0 { (i, (i.wrapping_sub(1), j)) } else { (j, (i, j.wrapping_sub(1))) };
            if e > 0 {
                out.set_term(rest.0, rest.1, c.mul(&S::from_i64(e as i64)));
            }
        }
        out
    }

    pub fn eval(&self, x: &S, y: &S) -> S {
        let mut acc = S::zero();
        for (&(i, j), c) in &self.terms {
            let mut t = c.clone();
            for _ in 0..i {
                t = t.mul(x);
            }
            for _ in 0..j {
                t = t.mul(y);
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Evaluates with coefficients mapped into another scalar domain.
    pub fn eval_in<T: Scalar>(&self, embed: impl Fn(&S) -> T, x: &T, y: &T) -> T {
        let mut acc = T::zero();
        for (&(i, j), c) in &self.terms {
            let mut t = embed(c);
            for _ in 0..i {
                t = t.mul(x);
            }
            for _ in 0..j {
                t = t.mul(y);
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Substitutes polynomials for the two variables.
    pub fn compose(&self, x_image: &Self, y_image: &Self) -> Self {
        let dx = self.degree_in(0);
        let dy = self.degree_in(1);
        let mut xp = vec![Self::one(self.vars)];
        for i in 1..=dx {
            xp.push(xp[(i - 1) as usize].mul(x_image));
        }
        let mut yp = vec![Self::one(self.vars)];
        for j in 1..=dy {
            yp.push(yp[(j - 1) as usize].mul(y_image));
        }
        let mut out = Self::zero(self.vars);
        for (&(i, j), c) in &self.terms {
            out = out.add(&xp[i as usize].mul(&yp[j as usize]).scale(c));
        }
        out
    }

    /// Coefficient vector with respect to `var`, ascending power. Entries are
    /// polynomials with zero degree in `var`. Trailing zeros trimmed.
    pub fn coeffs_in(&self, var: usize) -> Vec<Self> {
        let d = self.degree_in(var) as usize;
        let mut out = vec![Self::zero(self.vars); d + 1];
        for (&(i, j), c) in &self.terms {
            let (k, rest) = if var == 0 { (i, (0, j)) } else { (j, (i, 0)) };
            out[k as usize].set_term(rest.0, rest.1, c.clone());
        }
        while out.len() > 1 && out.last().unwrap().is_zero() {
            out.pop();
        }
        out
    }

    pub fn from_coeffs_in(vars: [&'static str; 2], var: usize, coeffs: &[Self]) -> Self {
        let mut out = Self::zero(vars);
        for (k, c) in coeffs.iter().enumerate() {
            for (&(i, j), v) in &c.terms {
                let (ni, nj) = if var == 0 {
                    (i + k as u32, j)
                } else {
                    (i, j + k as u32)
                };
                let cur = out.coeff(ni, nj).add(v);
                out.set_term(ni, nj, cur);
            }
        }
        out
    }

    pub fn rename(&self, vars: [&'static str; 2]) -> Self {
        BivariatePolynomial { vars, terms: self.terms.clone() }
    }

    /// Swaps the two exponent slots (and keeps the given names).
    pub fn swap_vars(&self, vars: [&'static str; 2]) -> Self {
        let mut out = Self::zero(vars);
        for (&(i, j), c) in &self.terms {
            out.set_term(j, i, c.clone());
        }
        out
    }

    pub fn map_coeffs<T: Scalar>(&self, f: impl Fn(&S) -> T) -> BivariatePolynomial<T> {
        let mut out = BivariatePolynomial::zero(self.vars);
        for (&(i, j), c) in &self.terms {
            out.set_term(i, j, f(c));
        }
        out
    }
}

impl BivariatePolynomial<Rational> {
    /// Exact division; `None` when the divisor does not divide.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        let mut r = self.clone();
        let mut q = Self::zero(self.vars);
        let (de, dc) = {
            let (e, c) = d.leading_glex().unwrap();
            (e, c.clone())
        };
        while !r.is_zero() {
            let (re, rc) = {
                let (e, c) = r.leading_glex().unwrap();
                (e, c.clone())
            };
            if re.0 < de.0 || re.1 < de.1 {
                return None;
            }
            let t = Self::monomial(self.vars, re.0 - de.0, re.1 - de.1, &rc / &dc);
            q = q.add(&t);
            r = r.sub(&d.mul(&t));
        }
        Some(q)
    }

    /// Canonical form: integer coefficients with content 1 and positive
    /// graded-lex leading coefficient. "Equal up to scalar" becomes equality.
    pub fn canonical(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut den_lcm = BigInt::one();
        let mut num_gcd = BigInt::zero();
        for c in self.terms.values() {
            den_lcm = den_lcm.lcm(c.denom());
            num_gcd = num_gcd.gcd(c.numer());
        }
        let factor = Rational::from_big(den_lcm, num_gcd);
        let mut out = self.scale(&factor);
        if out.leading_glex().unwrap().1.is_negative() {
            out = out.neg();
        }
        out
    }

    /// Resultant with respect to `var`, as the Sylvester determinant. When
    /// one argument has degree zero in `var` the convention Res(c, q) = c^deg q
    /// applies; two degree-zero arguments give 1.
    pub fn resultant(&self, rhs: &Self, var: usize) -> Result<Self, KernelError> {
        if self.is_zero() || rhs.is_zero() {
            return Err(KernelError::ZeroPolynomial);
        }
        self.assert_same_vars(rhs);
        Ok(resultant_from_coeffs(&self.coeffs_in(var), &rhs.coeffs_in(var)))
    }

    /// Product of the distinct irreducible factors, canonically normalized.
    pub fn squarefree_part(&self) -> Result<Self, KernelError> {
        if self.is_zero() {
            return Err(KernelError::ZeroPolynomial);
        }
        let g = gcd(&gcd(self, &self.derivative(0)), &self.derivative(1));
        let sf = self
            .exact_div(&g)
            .expect("gcd divides the polynomial");
        Ok(sf.canonical())
    }

    pub fn gcd_with(&self, rhs: &Self) -> Self {
        gcd(self, rhs)
    }
}

/// Resultant from ascending coefficient vectors over Q[·,·]; entries may mix
/// variables as long as they share a polynomial space. Degenerate degrees
/// follow the c^deg convention.
pub fn resultant_from_coeffs(
    p: &[BivariatePolynomial<Rational>],
    q: &[BivariatePolynomial<Rational>],
) -> BivariatePolynomial<Rational> {
    let mut pc = p.to_vec();
    let mut qc = q.to_vec();
    while pc.len() > 1 && pc.last().unwrap().is_zero() {
        pc.pop();
    }
    while qc.len() > 1 && qc.last().unwrap().is_zero() {
        qc.pop();
    }
    let vars = pc
        .first()
        .map(|c| c.vars())
        .unwrap_or_else(|| qc.first().map(|c| c.vars()).unwrap());
    let n = pc.len() - 1;
    let m = qc.len() - 1;
    if n == 0 && m == 0 {
        return BivariatePolynomial::one(vars);
    }
    if n == 0 {
        return pc[0].pow(m as u32);
    }
    if m == 0 {
        return qc[0].pow(n as u32);
    }
    let size = n + m;
    let zero = BivariatePolynomial::zero(vars);
    let mut mat = vec![vec![zero.clone(); size]; size];
    for r in 0..m {
        for k in 0..=n {
            mat[r][r + k] = pc[n - k].clone();
        }
    }
    for r in 0..n {
        for k in 0..=m {
            mat[m + r][r + k] = qc[m - k].clone();
        }
    }
    bareiss_det(mat)
}

/// Fraction-free determinant over Q[u,v]; divisions are exact by Bareiss.
fn bareiss_det(mut m: Vec<Vec<BivariatePolynomial<Rational>>>) -> BivariatePolynomial<Rational> {
    let n = m.len();
    let vars = m[0][0].vars();
    if n == 0 {
        return BivariatePolynomial::one(vars);
    }
    let mut sign = 1i32;
    let mut prev = BivariatePolynomial::one(vars);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return BivariatePolynomial::zero(vars);
            };
            m.swap(k, r);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num.exact_div(&prev).expect("Bareiss division is exact");
            }
            m[i][k] = BivariatePolynomial::zero(vars);
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        det.neg()
    } else {
        det
    }
}

/// GCD over Q[u,v] via contents and a primitive pseudo-remainder sequence,
/// returned in canonical form. gcd(p, 0) = canonical(p).
pub fn gcd(
    p: &BivariatePolynomial<Rational>,
    q: &BivariatePolynomial<Rational>,
) -> BivariatePolynomial<Rational> {
    if p.is_zero() {
        return q.canonical();
    }
    if q.is_zero() {
        return p.canonical();
    }
    let vars = p.vars();
    if p.is_constant() || q.is_constant() {
        return BivariatePolynomial::one(vars);
    }
    // Main variable: one where both polynomials actually appear, else the
    // gcd reduces to a content computation.
    let main = if p.degree_in(1) > 0 && q.degree_in(1) > 0 {
        1
    } else if p.degree_in(0) > 0 && q.degree_in(0) > 0 {
        0
    } else {
        // Disjoint variables: common divisors are constants.
        return BivariatePolynomial::one(vars);
    };
    let pc = p.coeffs_in(main);
    let qc = q.coeffs_in(main);
    let cont_p = content_of(&pc);
    let cont_q = content_of(&qc);
    let cont = gcd(&cont_p, &cont_q);
    let mut a = divide_coeffs(&pc, &cont_p);
    let mut b = divide_coeffs(&qc, &cont_q);
    if a.len() < b.len() {
        core::mem::swap(&mut a, &mut b);
    }
    loop {
        if b.iter().all(|c| c.is_zero()) {
            let prim = primitive_part(&a);
            let g = BivariatePolynomial::from_coeffs_in(vars, main, &prim);
            return cont.mul(&g).canonical();
        }
        let r = pseudo_rem(&a, &b);
        a = b;
        b = primitive_part(&trim(&r));
        if b.len() == 1 && b[0].is_constant() && !b[0].is_zero() {
            // Coprime primitive parts.
            return cont.canonical();
        }
    }
}

fn trim(v: &[BivariatePolynomial<Rational>]) -> Vec<BivariatePolynomial<Rational>> {
    let mut out = v.to_vec();
    while out.len() > 1 && out.last().unwrap().is_zero() {
        out.pop();
    }
    out
}

fn content_of(coeffs: &[BivariatePolynomial<Rational>]) -> BivariatePolynomial<Rational> {
    let mut acc = BivariatePolynomial::zero(coeffs[0].vars());
    for c in coeffs {
        acc = gcd(&acc, c);
        if acc.is_constant() && !acc.is_zero() {
            break;
        }
    }
    acc
}

fn divide_coeffs(
    coeffs: &[BivariatePolynomial<Rational>],
    d: &BivariatePolynomial<Rational>,
) -> Vec<BivariatePolynomial<Rational>> {
    coeffs
        .iter()
        .map(|c| {
            if c.is_zero() {
                c.clone()
            } else {
                c.exact_div(d).expect("content divides coefficients")
            }
        })
        .collect()
}

fn primitive_part(coeffs: &[BivariatePolynomial<Rational>]) -> Vec<BivariatePolynomial<Rational>> {
    if coeffs.iter().all(|c| c.is_zero()) {
        return coeffs.to_vec();
    }
    let cont = content_of(coeffs);
    divide_coeffs(coeffs, &cont)
}

/// Pseudo-remainder of coefficient vectors in the main variable:
/// lc(b)^(deg a − deg b + 1) · a ≡ prem (mod b).
fn pseudo_rem(
    a: &[BivariatePolynomial<Rational>],
    b: &[BivariatePolynomial<Rational>],
) -> Vec<BivariatePolynomial<Rational>> {
    let da = a.len() - 1;
    let db = b.len() - 1;
    assert!(db <= da);
    let lc_b = b[db].clone();
    let mut e = (da - db + 1) as i64;
    let mut r = a.to_vec();
    loop {
        let dr = r.len() - 1;
        if r.iter().all(|c| c.is_zero()) || dr < db {
            break;
        }
        let lc_r = r[dr].clone();
        let shift = dr - db;
        let mut next = vec![BivariatePolynomial::zero(lc_b.vars()); dr.max(db + shift) + 1];
        for (i, c) in r.iter().enumerate() {
            next[i] = c.mul(&lc_b);
        }
        for (i, c) in b.iter().enumerate() {
            next[i + shift] = next[i + shift].sub(&c.mul(&lc_r));
        }
        next.pop();
        r = trim(&next);
        e -= 1;
    }
    for _ in 0..e.max(0) {
        for c in r.iter_mut() {
            *c = c.mul(&lc_b);
        }
    }
    r
}

/// Univariate helpers over Q for degree counting and root bookkeeping.
pub mod univar {
    use super::*;

    /// Ascending coefficients; trailing zeros trimmed.
    pub fn trim(mut v: Vec<Rational>) -> Vec<Rational> {
        while v.len() > 1 && v.last().unwrap().is_zero() {
            v.pop();
        }
        if v.is_empty() {
            v.push(Rational::zero());
        }
        v
    }

    pub fn is_zero(v: &[Rational]) -> bool {
        v.iter().all(Rational::is_zero)
    }

    pub fn degree(v: &[Rational]) -> usize {
        let mut d = v.len();
        while d > 1 && v[d - 1].is_zero() {
            d -= 1;
        }
        d - 1
    }

    pub fn derivative(v: &[Rational]) -> Vec<Rational> {
        if v.len() <= 1 {
            return vec![Rational::zero()];
        }
        trim(
            v.iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * &Rational::from_i64(i as i64))
                .collect(),
        )
    }

    /// Monic gcd by the Euclidean algorithm.
    pub fn gcd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let mut a = trim(a.to_vec());
        let mut b = trim(b.to_vec());
        while !is_zero(&b) {
            let r = rem(&a, &b);
            a = b;
            b = r;
        }
        if is_zero(&a) {
            return a;
        }
        let lc = a.last().unwrap().inv().unwrap();
        trim(a.iter().map(|c| c * &lc).collect())
    }

    fn rem(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let db = degree(b);
        let lc_b = b[db].clone();
        let mut r = a.to_vec();
        while !is_zero(&r) && degree(&r) >= db {
            let dr = degree(&r);
            let q = &r[dr] / &lc_b;
            for i in 0..=db {
                let t = &r[dr - db + i] - &(&b[i] * &q);
                r[dr - db + i] = t;
            }
            r = trim(r);
            if dr == 0 {
                break;
            }
        }
        trim(r)
    }

    pub fn squarefree_degree(v: &[Rational]) -> usize {
        let g = gcd(v, &derivative(v));
        degree(v) - degree(&g)
    }

    pub fn is_squarefree(v: &[Rational]) -> bool {
        degree(&gcd(v, &derivative(v))) == 0
    }

    pub fn eval(v: &[Rational], x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in v.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }
}

impl<S: Scalar> fmt::Display for BivariatePolynomial<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut keys: Vec<(u32, u32)> = self.terms.keys().copied().collect();
        keys.sort_by(|a, b| glex_cmp(*b, *a));
        for (n, &(i, j)) in keys.iter().enumerate() {
            let c = &self.terms[&(i, j)];
            let cs = c.to_string();
            let (neg, mag) = match cs.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, cs),
            };
            if n == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit = mag == "1";
            let mut wrote_factor = false;
            if !unit || (i == 0 && j == 0) {
                write!(f, "{mag}")?;
                wrote_factor = true;
            }
            for (var, e) in [(self.vars[0], i), (self.vars[1], j)] {
                if e == 0 {
                    continue;
                }
                if wrote_factor {
                    write!(f, "*")?;
                }
                write!(f, "{var}")?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
                wrote_factor = true;
            }
        }
        Ok(())
    }
}

impl<S: Scalar> fmt::Debug for BivariatePolynomial<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = BivariatePolynomial<Rational>;

    fn q(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    const XY: [&str; 2] = ["x", "y"];
    const UV: [&str; 2] = ["u", "v"];

    fn p(terms: &[(u32, u32, i64)]) -> P {
        P::from_terms(XY, &terms.iter().map(|&(i, j, c)| (i, j, q(c))).collect::<Vec<_>>())
    }

    #[test]
    fn display_canonical_string() {
        let d = P::from_terms(UV, &[(3, 0, q(4)), (0, 2, q(-27))]);
        assert_eq!(alloc::format!("{d}"), "4*u^3 - 27*v^2");
        let e = P::from_terms(UV, &[(2, 1, q(1)), (0, 2, q(-1))]);
        assert_eq!(alloc::format!("{e}"), "u^2*v - v^2");
        assert_eq!(alloc::format!("{}", P::zero(UV)), "0");
        assert_eq!(alloc::format!("{}", P::constant(UV, q(-5))), "-5");
    }

    #[test]
    fn resultant_linear_pair() {
        // Res_y(y − x, y − 2x) expands the 2×2 Sylvester determinant to x − 2x.
        let a = p(&[(0, 1, 1), (1, 0, -1)]);
        let b = p(&[(0, 1, 1), (1, 0, -2)]);
        let r = a.resultant(&b, 1).unwrap();
        assert_eq!(r, p(&[(1, 0, -1)]));
    }

    #[test]
    fn resultant_quadratic_vs_var() {
        // Res_y(y² − x, y) = −x from the 3×3 Sylvester determinant.
        let a = p(&[(0, 2, 1), (1, 0, -1)]);
        let b = p(&[(0, 1, 1)]);
        let r = a.resultant(&b, 1).unwrap();
        assert_eq!(r, p(&[(1, 0, -1)]));
    }

    #[test]
    fn resultant_against_constant_is_one() {
        let a = p(&[(0, 2, 1), (1, 1, 3), (0, 0, -7)]);
        let one = P::one(XY);
        assert_eq!(a.resultant(&one, 1).unwrap(), P::one(XY));
        assert!(P::zero(XY).resultant(&one, 1).is_err());
    }

    #[test]
    fn resultant_multiplicative() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let mut rand_poly = |max_deg_y: u32| loop {
            let mut t = P::zero(XY);
            for j in 0..=max_deg_y {
                for i in 0..=1u32 {
                    t.set_term(i, j, q(rng.random_range(-3..=3)));
                }
            }
            if t.degree_in(1) >= 1 {
                return t;
            }
        };
        for _ in 0..40 {
            let a = rand_poly(2);
            let b = rand_poly(1);
            let c = rand_poly(2);
            let lhs = a.mul(&c).resultant(&b, 1).unwrap();
            let rhs = a.resultant(&b, 1).unwrap().mul(&c.resultant(&b, 1).unwrap());
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn squarefree_examples() {
        // x²y² → xy
        let a = p(&[(2, 2, 1)]);
        assert_eq!(a.squarefree_part().unwrap(), p(&[(1, 1, 1)]));
        // 4u³ − 27v² is already squarefree: gcd(p, p_u, p_v) is constant.
        let d = P::from_terms(UV, &[(3, 0, q(4)), (0, 2, q(-27))]);
        let g = gcd(&gcd(&d, &d.derivative(0)), &d.derivative(1));
        assert!(g.is_constant());
        assert_eq!(d.squarefree_part().unwrap(), d);
        // (y − x²)²·y → y(y − x²) up to canonical normalization.
        let f = p(&[(0, 1, 1), (2, 0, -1)]);
        let tripled = f.mul(&f).mul(&p(&[(0, 1, 1)]));
        let expected = f.mul(&p(&[(0, 1, 1)])).canonical();
        assert_eq!(tripled.squarefree_part().unwrap(), expected);
    }

    #[test]
    fn exact_division() {
        let a = p(&[(1, 0, 1), (0, 1, 1)]);
        let b = p(&[(1, 0, 2), (0, 0, -3)]);
        let prod = a.mul(&b);
        assert_eq!(prod.exact_div(&a).unwrap(), b);
        assert_eq!(prod.exact_div(&b).unwrap(), a);
        assert!(prod.exact_div(&p(&[(0, 1, 1), (0, 0, 1)])).is_none());
    }

    #[test]
    fn gcd_recovers_common_factor() {
        let f = p(&[(1, 1, 1), (0, 0, -1)]);
        let g1 = p(&[(1, 0, 1), (0, 1, 2)]);
        let g2 = p(&[(2, 0, 1), (0, 0, 5)]);
        let a = f.mul(&g1);
        let b = f.mul(&g2);
        assert_eq!(gcd(&a, &b), f.canonical());
        // Coprime pair.
        assert!(gcd(&g1, &g2).is_constant());
        // gcd with zero.
        assert_eq!(gcd(&a, &P::zero(XY)), a.canonical());
    }

    #[test]
    fn canonical_normalization() {
        let a = P::from_terms(UV, &[(0, 2, Rational::new(-3, 2)), (1, 0, Rational::new(-9, 4))]);
        let c = a.canonical();
        // Leading glex term is v² (degree 2 beats degree 1).
        assert_eq!(c, P::from_terms(UV, &[(0, 2, q(2)), (1, 0, q(3))]));
    }

    #[test]
    fn compose_affine_substitution() {
        // f = x² + y, substitute x ← x+1, y ← 2y: (x+1)² + 2y
        let f = p(&[(2, 0, 1), (0, 1, 1)]);
        let xi = p(&[(1, 0, 1), (0, 0, 1)]);
        let yi = p(&[(0, 1, 2)]);
        let g = f.compose(&xi, &yi);
        assert_eq!(g, p(&[(2, 0, 1), (1, 0, 2), (0, 1, 2), (0, 0, 1)]));
    }

    #[test]
    fn univar_helpers() {
        use super::univar;
        // (t−1)²(t+2) = t³ − 3t + 2
        let v = vec![q(2), q(-3), q(0), q(1)];
        assert_eq!(univar::degree(&v), 3);
        assert!(!univar::is_squarefree(&v));
        assert_eq!(univar::squarefree_degree(&v), 2);
        assert_eq!(univar::eval(&v, &q(1)), q(0));
        assert_eq!(univar::eval(&v, &q(2)), q(4));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_poly() -> impl Strategy<Value = P> {
            proptest::collection::vec((0u32..3, 0u32..3, -5i64..=5), 0..6).prop_map(|ts| {
                P::from_terms(
                    XY,
                    &ts.into_iter().map(|(i, j, c)| (i, j, q(c))).collect::<Vec<_>>(),
                )
            })
        }

        proptest! {
            #[test]
            fn ring_distributivity(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
                prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            }

            #[test]
            fn mul_matches_eval(a in arb_poly(), b in arb_poly(), x in -4i64..=4, y in -4i64..=4) {
                let (xq, yq) = (q(x), q(y));
                let lhs = a.mul(&b).eval(&xq, &yq);
                let rhs = &a.eval(&xq, &yq) * &b.eval(&xq, &yq);
                prop_assert_eq!(lhs, rhs);
            }
        }
    }
}
