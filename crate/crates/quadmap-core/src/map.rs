//! Quadratic maps of the plane and the two-sided affine action L∘f∘R.


use alloc::vec::Vec;
use core::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg::det2;
use crate::poly::BivariatePolynomial;
use crate::rational::Rational;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MapError {
    /// Affine pairs must have invertible linear parts.
    SingularAffine,
}

impl fmt::Display for MapError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MapError::SingularAffine => write!(f, "affine map with singular linear part"),
        }
    }
}

/// One polynomial component of degree ≤ 2:
/// `a·x² + b·xy + c·y² + d·x + e·y + f`.
#[derive(Clone, PartialEq, Eq)]
pub struct QuadraticPoly<S> {
    pub a: S,
    pub b: S,
    pub c: S,
    pub d: S,
    pub e: S,
    pub f: S,
}

impl<S: Scalar> QuadraticPoly<S> {
    pub fn zero() -> Self {
        QuadraticPoly {
            a: S::zero(),
            b: S::zero(),
            c: S::zero(),
            d: S::zero(),
            e: S::zero(),
            f: S::zero(),
        }
    }

    pub fn from_coeffs(coeffs: [S; 6]) -> Self {
        let [a, b, c, d, e, f] = coeffs;
        QuadraticPoly { a, b, c, d, e, f }
    }

    pub fn coeffs(&self) -> [S; 6] {
        [
            self.a.clone(),
            self.b.clone(),
            self.c.clone(),
            self.d.clone(),
            self.e.clone(),
            self.f.clone(),
        ]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs().iter().all(S::is_zero)
    }

    pub fn quadratic_part(&self) -> [S; 3] {
        [self.a.clone(), self.b.clone(), self.c.clone()]
    }

    pub fn linear_part(&self) -> [S; 2] {
        [self.d.clone(), self.e.clone()]
    }

    pub fn eval(&self, x: &S, y: &S) -> S {
        let xx = x.mul(x);
        let xy = x.mul(y);
        let yy = y.mul(y);
        self.a
            .mul(&xx)
            .add(&self.b.mul(&xy))
            .add(&self.c.mul(&yy))
            .add(&self.d.mul(x))
            .add(&self.e.mul(y))
            .add(&self.f)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        QuadraticPoly {
            a: self.a.add(&rhs.a),
            b: self.b.add(&rhs.b),
            c: self.c.add(&rhs.c),
            d: self.d.add(&rhs.d),
            e: self.e.add(&rhs.e),
            f: self.f.add(&rhs.f),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.scale(&S::one().neg()))
    }

    pub fn scale(&self, c: &S) -> Self {
        QuadraticPoly {
            a: self.a.mul(c),
            b: self.b.mul(c),
            c: self.c.mul(c),
            d: self.d.mul(c),
            e: self.e.mul(c),
            f: self.f.mul(c),
        }
    }

    /// Substitutes an affine change of source coordinates; the result is
    /// again of degree ≤ 2.
    pub fn compose_affine(&self, r: &AffineMap<S>) -> Self {
        let [p, q] = [r.m[0][0].clone(), r.m[0][1].clone()];
        let rr = r.t[0].clone();
        let [s, t] = [r.m[1][0].clone(), r.m[1][1].clone()];
        let u = r.t[1].clone();
        let two = S::from_i64(2);

        let a2 = self
            .a
            .mul(&p.mul(&p))
            .add(&self.b.mul(&p.mul(&s)))
            .add(&self.c.mul(&s.mul(&s)));
        let b2 = self
            .a
            .mul(&two.mul(&p.mul(&q)))
            .add(&self.b.mul(&p.mul(&t).add(&q.mul(&s))))
            .add(&self.c.mul(&two.mul(&s.mul(&t))));
        let c2 = self
            .a
            .mul(&q.mul(&q))
            .add(&self.b.mul(&q.mul(&t)))
            .add(&self.c.mul(&t.mul(&t)));
        let d2 = self
            .a
            .mul(&two.mul(&p.mul(&rr)))
            .add(&self.b.mul(&p.mul(&u).add(&rr.mul(&s))))
            .add(&self.c.mul(&two.mul(&s.mul(&u))))
            .add(&self.d.mul(&p))
            .add(&self.e.mul(&s));
        let e2 = self
            .a
            .mul(&two.mul(&q.mul(&rr)))
            .add(&self.b.mul(&q.mul(&u).add(&rr.mul(&t))))
            .add(&self.c.mul(&two.mul(&t.mul(&u))))
            .add(&self.d.mul(&q))
            .add(&self.e.mul(&t));
        let f2 = self
            .a
            .mul(&rr.mul(&rr))
            .add(&self.b.mul(&rr.mul(&u)))
            .add(&self.c.mul(&u.mul(&u)))
            .add(&self.d.mul(&rr))
            .add(&self.e.mul(&u))
            .add(&self.f);
        QuadraticPoly { a: a2, b: b2, c: c2, d: d2, e: e2, f: f2 }
    }

    pub fn to_poly(&self, vars: [&'static str; 2]) -> BivariatePolynomial<S> {
        BivariatePolynomial::from_terms(
            vars,
            &[
                (2, 0, self.a.clone()),
                (1, 1, self.b.clone()),
                (0, 2, self.c.clone()),
                (1, 0, self.d.clone()),
                (0, 1, self.e.clone()),
                (0, 0, self.f.clone()),
            ],
        )
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> QuadraticPoly<T> {
        QuadraticPoly {
            a: f(&self.a),
            b: f(&self.b),
            c: f(&self.c),
            d: f(&self.d),
            e: f(&self.e),
            f: f(&self.f),
        }
    }
}

impl<S: Scalar> fmt::Debug for QuadraticPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly(["x", "y"]))
    }
}

/// A point of the coefficient space: f = (g, h), both of degree ≤ 2.
#[derive(Clone, PartialEq, Eq)]
pub struct QuadraticMap<S> {
    pub g: QuadraticPoly<S>,
    pub h: QuadraticPoly<S>,
}

impl<S: Scalar> QuadraticMap<S> {
    pub fn new(g: QuadraticPoly<S>, h: QuadraticPoly<S>) -> Self {
        QuadraticMap { g, h }
    }

    pub fn zero() -> Self {
        QuadraticMap { g: QuadraticPoly::zero(), h: QuadraticPoly::zero() }
    }

    pub fn eval(&self, x: &S, y: &S) -> (S, S) {
        (self.g.eval(x, y), self.h.eval(x, y))
    }

    pub fn coeff_vector(&self) -> Vec<S> {
        let mut v = self.g.coeffs().to_vec();
        v.extend(self.h.coeffs());
        v
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> QuadraticMap<T> {
        QuadraticMap { g: self.g.map(&f), h: self.h.map(&f) }
    }
}

impl QuadraticMap<Rational> {
    pub fn from_int_coeffs(g: [i64; 6], h: [i64; 6]) -> Self {
        QuadraticMap {
            g: QuadraticPoly::from_coeffs(g.map(Rational::from_i64)),
            h: QuadraticPoly::from_coeffs(h.map(Rational::from_i64)),
        }
    }
}

impl<S: Scalar> fmt::Debug for QuadraticMap<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?})", self.g, self.h)
    }
}

/// Invertible affine map x ↦ M·x + t.
#[derive(Clone, PartialEq, Eq)]
pub struct AffineMap<S> {
    pub m: [[S; 2]; 2],
    pub t: [S; 2],
}

impl<S: Scalar> AffineMap<S> {
    pub fn identity() -> Self {
        AffineMap {
            m: [[S::one(), S::zero()], [S::zero(), S::one()]],
            t: [S::zero(), S::zero()],
        }
    }

    pub fn linear(m: [[S; 2]; 2]) -> Self {
        AffineMap { m, t: [S::zero(), S::zero()] }
    }

    pub fn translation(t: [S; 2]) -> Self {
        AffineMap { m: [[S::one(), S::zero()], [S::zero(), S::one()]], t }
    }

    pub fn det(&self) -> S {
        det2(&self.m)
    }

    pub fn is_invertible(&self) -> bool {
        !self.det().is_zero()
    }

    pub fn apply(&self, x: &S, y: &S) -> (S, S) {
        (
            self.m[0][0].mul(x).add(&self.m[0][1].mul(y)).add(&self.t[0]),
            self.m[1][0].mul(x).add(&self.m[1][1].mul(y)).add(&self.t[1]),
        )
    }

    /// self ∘ other (apply `other` first).
    pub fn compose(&self, other: &Self) -> Self {
        let mut m = [
            [S::zero(), S::zero()],
            [S::zero(), S::zero()],
        ];
        for i in 0..2 {
            for j in 0..2 {
                m[i][j] = self.m[i][0]
                    .mul(&other.m[0][j])
                    .add(&self.m[i][1].mul(&other.m[1][j]));
            }
        }
        let t = [
            self.m[0][0]
                .mul(&other.t[0])
                .add(&self.m[0][1].mul(&other.t[1]))
                .add(&self.t[0]),
            self.m[1][0]
                .mul(&other.t[0])
                .add(&self.m[1][1].mul(&other.t[1]))
                .add(&self.t[1]),
        ];
        AffineMap { m, t }
    }

    pub fn inverse(&self) -> Option<Self> {
        let inv_det = self.det().inv()?;
        let m = [
            [self.m[1][1].mul(&inv_det), self.m[0][1].neg().mul(&inv_det)],
            [self.m[1][0].neg().mul(&inv_det), self.m[0][0].mul(&inv_det)],
        ];
        let t = [
            m[0][0].mul(&self.t[0]).add(&m[0][1].mul(&self.t[1])).neg(),
            m[1][0].mul(&self.t[0]).add(&m[1][1].mul(&self.t[1])).neg(),
        ];
        Some(AffineMap { m, t })
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> AffineMap<T> {
        AffineMap {
            m: [
                [f(&self.m[0][0]), f(&self.m[0][1])],
                [f(&self.m[1][0]), f(&self.m[1][1])],
            ],
            t: [f(&self.t[0]), f(&self.t[1])],
        }
    }
}

impl<S: Scalar> fmt::Debug for AffineMap<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]] + ({}, {})",
            self.m[0][0], self.m[0][1], self.m[1][0], self.m[1][1], self.t[0], self.t[1]
        )
    }
}

/// A pair (L, R) acting by f ↦ L∘f∘R. Composition follows the twisted group
/// law (L₁,R₁)∘(L₂,R₂) = (L₁L₂, R₂R₁), so pairs act on the left.
#[derive(Clone, PartialEq, Eq)]
pub struct AffinePair<S> {
    pub target: AffineMap<S>,
    pub source: AffineMap<S>,
}

impl<S: Scalar> AffinePair<S> {
    pub fn new(target: AffineMap<S>, source: AffineMap<S>) -> Result<Self, MapError> {
        if !target.is_invertible() || !source.is_invertible() {
            return Err(MapError::SingularAffine);
        }
        Ok(AffinePair { target, source })
    }

    pub fn identity() -> Self {
        AffinePair { target: AffineMap::identity(), source: AffineMap::identity() }
    }

    pub fn compose(&self, rhs: &Self) -> Self {
        AffinePair {
            target: self.target.compose(&rhs.target),
            source: rhs.source.compose(&self.source),
        }
    }

    pub fn inverse(&self) -> Self {
        AffinePair {
            target: self.target.inverse().expect("pair is invertible"),
            source: self.source.inverse().expect("pair is invertible"),
        }
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> AffinePair<T> {
        AffinePair { target: self.target.map(&f), source: self.source.map(&f) }
    }
}

impl<S: Scalar> fmt::Debug for AffinePair<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L: {:?}, R: {:?}", self.target, self.source)
    }
}

/// The action (L,R)·f = L∘f∘R.
pub fn act<S: Scalar>(pair: &AffinePair<S>, f: &QuadraticMap<S>) -> QuadraticMap<S> {
    let g_r = f.g.compose_affine(&pair.source);
    let h_r = f.h.compose_affine(&pair.source);
    let l = &pair.target;
    let mut g = g_r.scale(&l.m[0][0]).add(&h_r.scale(&l.m[0][1]));
    g.f = g.f.add(&l.t[0]);
    let mut h = g_r.scale(&l.m[1][0]).add(&h_r.scale(&l.m[1][1]));
    h.f = h.f.add(&l.t[1]);
    QuadraticMap { g, h }
}

/// Homogeneous pieces of both components; reassembling them gives the map
/// back exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedParts<S> {
    pub g2: [S; 3],
    pub g1: [S; 2],
    pub g0: S,
    pub h2: [S; 3],
    pub h1: [S; 2],
    pub h0: S,
}

impl<S: Scalar> GradedParts<S> {
    pub fn reassemble(&self) -> QuadraticMap<S> {
        QuadraticMap {
            g: QuadraticPoly::from_coeffs([
                self.g2[0].clone(),
                self.g2[1].clone(),
                self.g2[2].clone(),
                self.g1[0].clone(),
                self.g1[1].clone(),
                self.g0.clone(),
            ]),
            h: QuadraticPoly::from_coeffs([
                self.h2[0].clone(),
                self.h2[1].clone(),
                self.h2[2].clone(),
                self.h1[0].clone(),
                self.h1[1].clone(),
                self.h0.clone(),
            ]),
        }
    }
}

pub fn graded_parts<S: Scalar>(f: &QuadraticMap<S>) -> GradedParts<S> {
    GradedParts {
        g2: f.g.quadratic_part(),
        g1: f.g.linear_part(),
        g0: f.g.f.clone(),
        h2: f.h.quadratic_part(),
        h1: f.h.linear_part(),
        h0: f.h.f.clone(),
    }
}

pub(crate) fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub(crate) fn random_affine_map(rng: &mut ChaCha8Rng, bound: i64) -> AffineMap<Rational> {
    loop {
        let m = [
            [
                Rational::from_i64(rng.random_range(-bound..=bound)),
                Rational::from_i64(rng.random_range(-bound..=bound)),
            ],
            [
                Rational::from_i64(rng.random_range(-bound..=bound)),
                Rational::from_i64(rng.random_range(-bound..=bound)),
            ],
        ];
        let t = [
            Rational::from_i64(rng.random_range(-bound..=bound)),
            Rational::from_i64(rng.random_range(-bound..=bound)),
        ];
        let map = AffineMap { m, t };
        if map.is_invertible() {
            return map;
        }
    }
}

/// Deterministic pseudorandom pair with integer entries in [−bound, bound],
/// resampled until both linear parts are invertible.
pub fn random_affine_pair(seed: u64, bound: u64) -> AffinePair<Rational> {
    assert!(bound >= 1, "bound must be positive");
    let mut rng = seeded_rng(seed);
    let target = random_affine_map(&mut rng, bound as i64);
    let source = random_affine_map(&mut rng, bound as i64);
    AffinePair { target, source }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    fn f1() -> QuadraticMap<Rational> {
        QuadraticMap::from_int_coeffs([1, 0, 0, 0, 1, 0], [0, 0, 1, 1, 0, 0])
    }

    #[test]
    fn identity_action_fixes_everything() {
        let id = AffinePair::identity();
        let f = f1();
        assert_eq!(act(&id, &f), f);
    }

    #[test]
    fn scaling_first_component() {
        // L = (2u, v), R = id on f₁ = (x²+y, y²+x) gives (2x²+2y, y²+x).
        let l = AffineMap::linear([[q(2), q(0)], [q(0), q(1)]]);
        let pair = AffinePair::new(l, AffineMap::identity()).unwrap();
        let out = act(&pair, &f1());
        assert_eq!(out, QuadraticMap::from_int_coeffs([2, 0, 0, 0, 2, 0], [0, 0, 1, 1, 0, 0]));
    }

    #[test]
    fn source_translation_expands() {
        // L = id, R = (x+1, y) on f₄ = (x², y²) gives (x²+2x+1, y²).
        let r = AffineMap::translation([q(1), q(0)]);
        let pair = AffinePair::new(AffineMap::identity(), r).unwrap();
        let f4 = QuadraticMap::from_int_coeffs([1, 0, 0, 0, 0, 0], [0, 0, 1, 0, 0, 0]);
        let out = act(&pair, &f4);
        assert_eq!(out, QuadraticMap::from_int_coeffs([1, 0, 0, 2, 0, 1], [0, 0, 1, 0, 0, 0]));
    }

    #[test]
    fn action_axiom_on_random_pairs() {
        for seed in 0..200u64 {
            let p1 = random_affine_pair(seed, 3);
            let p2 = random_affine_pair(seed + 1000, 3);
            let f = random_map(seed);
            let lhs = act(&p1.compose(&p2), &f);
            let rhs = act(&p1, &act(&p2, &f));
            assert_eq!(lhs, rhs, "seed {seed}");
        }
    }

    #[test]
    fn inverse_undoes_action() {
        for seed in 0..100u64 {
            let p = random_affine_pair(seed, 4);
            let f = random_map(seed);
            assert_eq!(act(&p.inverse(), &act(&p, &f)), f);
        }
    }

    #[test]
    fn swap_stabilizes_f1() {
        let sigma = AffineMap::linear([[q(0), q(1)], [q(1), q(0)]]);
        let pair = AffinePair::new(sigma.clone(), sigma).unwrap();
        assert_eq!(act(&pair, &f1()), f1());
    }

    #[test]
    fn graded_parts_examples() {
        // f₇ = (xy, x+y)
        let f7 = QuadraticMap::from_int_coeffs([0, 1, 0, 0, 0, 0], [0, 0, 0, 1, 1, 0]);
        let parts = graded_parts(&f7);
        assert_eq!(parts.g2, [q(0), q(1), q(0)]);
        assert_eq!(parts.g1, [q(0), q(0)]);
        assert_eq!(parts.h2, [q(0), q(0), q(0)]);
        assert_eq!(parts.h1, [q(1), q(1)]);
        assert_eq!(parts.reassemble(), f7);
        // f₁₇ = (0, 0)
        let zero = QuadraticMap::<Rational>::zero();
        let parts = graded_parts(&zero);
        assert!(parts.reassemble() == zero);
        // f₁₀ = (x²+y, x)
        let f10 = QuadraticMap::from_int_coeffs([1, 0, 0, 0, 1, 0], [0, 0, 0, 1, 0, 0]);
        let parts = graded_parts(&f10);
        assert_eq!(parts.g2, [q(1), q(0), q(0)]);
        assert_eq!(parts.g1, [q(0), q(1)]);
        assert_eq!(parts.h1, [q(1), q(0)]);
    }

    #[test]
    fn random_pairs_deterministic_and_bounded() {
        let a = random_affine_pair(1, 3);
        let b = random_affine_pair(1, 3);
        assert_eq!(a, b);
        let c = random_affine_pair(1, 1);
        assert!(!c.target.det().is_zero());
        assert!(!c.source.det().is_zero());
        for v in [&c.target, &c.source] {
            for row in &v.m {
                for entry in row {
                    assert!(entry.abs().cmp_value(&q(1)) != core::cmp::Ordering::Greater);
                }
            }
        }
    }

    fn random_map(seed: u64) -> QuadraticMap<Rational> {
        let mut rng = seeded_rng(seed.wrapping_mul(7919).wrapping_add(13));
        let mut c = || q(rng.random_range(-5..=5));
        QuadraticMap {
            g: QuadraticPoly::from_coeffs([c(), c(), c(), c(), c(), c()]),
            h: QuadraticPoly::from_coeffs([c(), c(), c(), c(), c(), c()]),
        }
    }

    #[test]
    fn compose_affine_matches_polynomial_substitution() {
        for seed in 0..50u64 {
            let f = random_map(seed);
            let pair = random_affine_pair(seed, 3);
            let acted = act(&pair, &f);
            // Cross-check against generic polynomial composition.
            let r = &pair.source;
            let xi = BivariatePolynomial::from_terms(
                ["x", "y"],
                &[(1, 0, r.m[0][0].clone()), (0, 1, r.m[0][1].clone()), (0, 0, r.t[0].clone())],
            );
            let yi = BivariatePolynomial::from_terms(
                ["x", "y"],
                &[(1, 0, r.m[1][0].clone()), (0, 1, r.m[1][1].clone()), (0, 0, r.t[1].clone())],
            );
            let g_poly = f.g.to_poly(["x", "y"]).compose(&xi, &yi);
            let h_poly = f.h.to_poly(["x", "y"]).compose(&xi, &yi);
            let l = &pair.target;
            let expected_g = g_poly
                .scale(&l.m[0][0])
                .add(&h_poly.scale(&l.m[0][1]))
                .add(&BivariatePolynomial::constant(["x", "y"], l.t[0].clone()));
            assert_eq!(acted.g.to_poly(["x", "y"]), expected_g);
        }
    }
}
