//! Invariant data of a quadratic map: the Jacobian conic, the coefficient
//! matrices Φ₁–Φ₄ and Ψ₁ with their determinants, ranks and real inertias,
//! the reduction into the pencil chart, and the divisibility tests that
//! drive the classification.

use alloc::vec::Vec;
use core::fmt;

use crate::linalg::{det2, det3, rank};
use crate::map::{act, graded_parts, AffineMap, AffinePair, GradedParts, QuadraticMap, QuadraticPoly};
use crate::rational::Rational;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InvariantsError {
    /// The quadratic parts are independent; no pencil reduction exists.
    NotInPencil,
}

impl fmt::Display for InvariantsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvariantsError::NotInPencil => write!(f, "quadratic parts are linearly independent"),
        }
    }
}

fn all_zero<S: Scalar>(v: &[S]) -> bool {
    v.iter().all(S::is_zero)
}

/// Coefficients of the Jacobian determinant J(f) = A·x² + B·xy + C·y² +
/// D·x + E·y + F, straight from the closed coefficient formulas.
pub fn jacobian_conic<S: Scalar>(f: &QuadraticMap<S>) -> QuadraticPoly<S> {
    let (g, h) = (&f.g, &f.h);
    let two = S::from_i64(2);
    let four = S::from_i64(4);
    let a = two.mul(&g.a.mul(&h.b).sub(&h.a.mul(&g.b)));
    let b = four.mul(&g.a.mul(&h.c).sub(&h.a.mul(&g.c)));
    let c = two.mul(&g.b.mul(&h.c).sub(&h.b.mul(&g.c)));
    let d = two
        .mul(&g.a.mul(&h.e))
        .add(&g.d.mul(&h.b))
        .sub(&two.mul(&h.a.mul(&g.e)))
        .sub(&h.d.mul(&g.b));
    let e = two
        .mul(&g.d.mul(&h.c))
        .add(&g.b.mul(&h.e))
        .sub(&two.mul(&h.d.mul(&g.c)))
        .sub(&h.b.mul(&g.e));
    let f_coeff = g.d.mul(&h.e).sub(&h.d.mul(&g.e));
    QuadraticPoly { a, b, c, d, e, f: f_coeff }
}

/// All matrix invariants of one map. Determinants and ranks are exact;
/// inertias refer to the real symmetric forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantReport {
    pub jacobian: QuadraticPoly<Rational>,
    pub phi1: [[Rational; 2]; 2],
    pub phi2: [[Rational; 3]; 3],
    pub phi3: [[Rational; 3]; 2],
    pub phi4: [[Rational; 5]; 2],
    pub psi1: [[Rational; 4]; 3],
    pub det_phi1: Rational,
    pub det_phi2: Rational,
    pub rank_phi1: usize,
    pub rank_phi2: usize,
    pub rank_phi3: usize,
    pub rank_phi4: usize,
    pub rank_psi1: usize,
    /// (positive, negative) eigen-direction counts of the quadratic part of g.
    pub inertia_g2: (u8, u8),
    /// Inertia of the quadratic part of J(f).
    pub inertia_j2: (u8, u8),
}

/// Inertia of the binary form a·x² + b·xy + c·y², decided from exact sign
/// analysis of determinant and diagonal; never numeric.
pub fn binary_form_inertia(form: &[Rational; 3]) -> (u8, u8) {
    let [a, b, c] = form;
    if a.is_zero() && b.is_zero() && c.is_zero() {
        return (0, 0);
    }
    let four_ac_minus_b2 = &(&(a * c) * &Rational::from_i64(4)) - &(b * b);
    match four_ac_minus_b2.signum() {
        1 => {
            if a.is_positive() {
                (2, 0)
            } else {
                (0, 2)
            }
        }
        -1 => (1, 1),
        _ => {
            // Rank one: the sign of the nonzero diagonal entry decides.
            let s = if !a.is_zero() { a.signum() } else { c.signum() };
            if s > 0 {
                (1, 0)
            } else {
                (0, 1)
            }
        }
    }
}

pub fn invariant_report(f: &QuadraticMap<Rational>) -> InvariantReport {
    let j = jacobian_conic(f);
    let two = Rational::from_i64(2);
    let phi1 = [[&j.a * &two, j.b.clone()], [j.b.clone(), &j.c * &two]];
    let phi2 = [
        [&j.a * &two, j.b.clone(), j.d.clone()],
        [j.b.clone(), &j.c * &two, j.e.clone()],
        [j.d.clone(), j.e.clone(), &j.f * &two],
    ];
    let (g, h) = (&f.g, &f.h);
    let phi3 = [
        [g.a.clone(), g.b.clone(), g.c.clone()],
        [h.a.clone(), h.b.clone(), h.c.clone()],
    ];
    let phi4 = [
        [g.a.clone(), g.b.clone(), g.c.clone(), g.d.clone(), g.e.clone()],
        [h.a.clone(), h.b.clone(), h.c.clone(), h.d.clone(), h.e.clone()],
    ];
    let psi1 = [
        [&g.a * &two, g.b.clone(), &h.a * &two, h.b.clone()],
        [g.b.clone(), &g.c * &two, h.b.clone(), &h.c * &two],
        [g.d.clone(), g.e.clone(), h.d.clone(), h.e.clone()],
    ];
    let det_phi1 = det2(&phi1);
    let det_phi2 = det3(&phi2);
    let rank_phi1 = rank(to_rows(&phi1));
    let rank_phi2 = rank(to_rows(&phi2));
    let rank_phi3 = rank(to_rows(&phi3));
    let rank_phi4 = rank(to_rows(&phi4));
    let rank_psi1 = rank(to_rows(&psi1));
    // rank Φ₁ = 0 exactly when the quadratic parts are dependent; the three
    // 2×2 minors of Φ₃ are A/2, B/4, C/2.
    assert_eq!(rank_phi1 == 0, rank_phi3 < 2, "Φ₁/Φ₃ rank relation violated");
    assert!(rank_phi1 <= rank_phi2 && rank_phi2 <= rank_phi1 + 2);
    let inertia_g2 = binary_form_inertia(&[g.a.clone(), g.b.clone(), g.c.clone()]);
    let inertia_j2 = binary_form_inertia(&[j.a.clone(), j.b.clone(), j.c.clone()]);
    InvariantReport {
        jacobian: j,
        phi1,
        phi2,
        phi3,
        phi4,
        psi1,
        det_phi1,
        det_phi2,
        rank_phi1,
        rank_phi2,
        rank_phi3,
        rank_phi4,
        rank_psi1,
        inertia_g2,
        inertia_j2,
    }
}

fn to_rows<const R: usize, const C: usize>(m: &[[Rational; C]; R]) -> Vec<Vec<Rational>> {
    m.iter().map(|row| row.to_vec()).collect()
}

/// Result of straightening a map with dependent quadratic parts: an
/// invertible target map L with `reduced = L∘f`, whose second component has
/// no quadratic part (and is the zero constant when the components are
/// affinely dependent).
#[derive(Clone, Debug)]
pub struct PencilReduction<S: Scalar> {
    pub target_map: AffineMap<S>,
    pub reduced: QuadraticMap<S>,
    pub essential: GradedParts<S>,
}

pub fn reduce_to_pencil_chart<S: Scalar>(
    f: &QuadraticMap<S>,
) -> Result<PencilReduction<S>, InvariantsError> {
    let parts = graded_parts(f);
    let g2_zero = all_zero(&parts.g2);
    let h2_zero = all_zero(&parts.h2);
    if !g2_zero && !h2_zero {
        // Dependence requires all three 2×2 minors of Φ₃ to vanish.
        let minors_zero = minor_zero(&parts.g2[0], &parts.g2[1], &parts.h2[0], &parts.h2[1])
            && minor_zero(&parts.g2[0], &parts.g2[2], &parts.h2[0], &parts.h2[2])
            && minor_zero(&parts.g2[1], &parts.g2[2], &parts.h2[1], &parts.h2[2]);
        if !minors_zero {
            return Err(InvariantsError::NotInPencil);
        }
    }

    // Within the pencil the two quadratic parts are proportional, so the
    // retained component is g whenever its relevant part is nonzero; the
    // pivot only switches to h when g's part vanishes identically.
    let swap = if !g2_zero {
        false
    } else if !h2_zero {
        true
    } else if !all_zero(&parts.g1) {
        false
    } else {
        !all_zero(&parts.h1)
    };

    let base = if swap {
        AffineMap::linear([[S::zero(), S::one()], [S::one(), S::zero()]])
    } else {
        AffineMap::identity()
    };
    let swapped = act(&AffinePair { target: base.clone(), source: AffineMap::identity() }, f);

    // Proportionality factor of the second component over the first, taken
    // on the quadratic part when present, else on the linear part when the
    // non-constant rows are dependent.
    let lambda = proportionality_factor(&swapped.g, &swapped.h);
    let elim = AffineMap {
        m: [[S::one(), S::zero()], [lambda.neg(), S::one()]],
        t: [S::zero(), S::zero()],
    };
    let l = elim.compose(&base);
    let mut reduced = act(&AffinePair { target: l.clone(), source: AffineMap::identity() }, f);

    // If the non-constant rows were dependent the second component is now a
    // bare constant; clear it so the component is the zero polynomial.
    let h_nonconst_zero = reduced.h.a.is_zero()
        && reduced.h.b.is_zero()
        && reduced.h.c.is_zero()
        && reduced.h.d.is_zero()
        && reduced.h.e.is_zero();
    let l = if h_nonconst_zero && !reduced.h.f.is_zero() {
        let shift = AffineMap::translation([S::zero(), reduced.h.f.neg()]);
        let total = shift.compose(&l);
        reduced = act(&AffinePair { target: total.clone(), source: AffineMap::identity() }, f);
        total
    } else {
        l
    };

    let essential = graded_parts(&reduced);
    Ok(PencilReduction { target_map: l, reduced, essential })
}

fn minor_zero<S: Scalar>(a: &S, b: &S, c: &S, d: &S) -> bool {
    a.mul(d).sub(&b.mul(c)).is_zero()
}

fn proportionality_factor<S: Scalar>(p: &QuadraticPoly<S>, q: &QuadraticPoly<S>) -> S {
    let p2 = p.quadratic_part();
    let q2 = q.quadratic_part();
    if !all_zero(&p2) {
        for (num, den) in q2.iter().zip(&p2) {
            if !den.is_zero() {
                return num.div(den).expect("nonzero pivot");
            }
        }
        unreachable!();
    }
    // Affine case: eliminate only when the linear rows are dependent.
    let p1 = p.linear_part();
    let q1 = q.linear_part();
    if all_zero(&p1) {
        return S::zero();
    }
    if minor_zero(&p1[0], &p1[1], &q1[0], &q1[1]) {
        for (num, den) in q1.iter().zip(&p1) {
            if !den.is_zero() {
                return num.div(den).expect("nonzero pivot");
            }
        }
    }
    S::zero()
}

/// Chart conditions on a reduced map (h₂ = 0). `None` marks a test whose
/// precondition fails, never silently false.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormTests {
    pub g2_is_square: bool,
    pub h1_divides_g2: Option<bool>,
    pub h1_divides_g1: Option<bool>,
    pub g1_parallel_sqrt_g2: Option<bool>,
}

pub fn form_tests<S: Scalar>(parts: &GradedParts<S>) -> FormTests {
    assert!(all_zero(&parts.h2), "form tests require the reduced chart h₂ = 0");
    let [a, b, c] = &parts.g2;
    let disc = b.mul(b).sub(&S::from_i64(4).mul(&a.mul(c)));
    let g2_is_square = disc.is_zero();
    let g2_zero = all_zero(&parts.g2);

    let [hd, he] = &parts.h1;
    let h1_zero = hd.is_zero() && he.is_zero();
    // h₁ = d·x + e·y divides a form exactly when the form vanishes on the
    // kernel direction (e, −d).
    let (h1_divides_g2, h1_divides_g1) = if h1_zero {
        (None, None)
    } else {
        let ee = he.mul(he);
        let ed = he.mul(hd);
        let dd = hd.mul(hd);
        let g2_at = a.mul(&ee).sub(&b.mul(&ed)).add(&c.mul(&dd));
        let g1_at = parts.g1[0].mul(he).sub(&parts.g1[1].mul(hd));
        (Some(g2_at.is_zero()), Some(g1_at.is_zero()))
    };

    let g1_parallel_sqrt_g2 = if g2_is_square && !g2_zero {
        let (lx, ly) = if !a.is_zero() {
            (a.double(), b.clone())
        } else {
            // b² = 4ac with a = 0 forces b = 0, so the form is c·y².
            (S::zero(), c.double())
        };
        let cross = parts.g1[0].mul(&ly).sub(&parts.g1[1].mul(&lx));
        Some(cross.is_zero())
    } else {
        None
    };

    FormTests { g2_is_square, h1_divides_g2, h1_divides_g1, g1_parallel_sqrt_g2 }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::map::{random_affine_pair, QuadraticMap};
    use crate::poly::BivariatePolynomial;

    fn q(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    fn f1() -> QuadraticMap<Rational> {
        QuadraticMap::from_int_coeffs([1, 0, 0, 0, 1, 0], [0, 0, 1, 1, 0, 0])
    }

    #[test]
    fn jacobian_examples() {
        // f₁ = (x²+y, y²+x): J = 4xy − 1
        let j = jacobian_conic(&f1());
        assert_eq!(j.coeffs(), [q(0), q(4), q(0), q(0), q(0), q(-1)]);
        // f₂ = (x²+y, xy): J = 2x² − y
        let f2 = QuadraticMap::from_int_coeffs([1, 0, 0, 0, 1, 0], [0, 1, 0, 0, 0, 0]);
        let j = jacobian_conic(&f2);
        assert_eq!(j.coeffs(), [q(2), q(0), q(0), q(0), q(-1), q(0)]);
        // Constant map: everything vanishes.
        let j = jacobian_conic(&QuadraticMap::<Rational>::zero());
        assert!(j.is_zero());
    }

    #[test]
    fn jacobian_formula_matches_symbolic_determinant() {
        use crate::map::seeded_rng;
        use rand::Rng;
        let mut rng = seeded_rng(42);
        for _ in 0..80 {
            let mut c = || q(rng.random_range(-5..=5));
            let f = QuadraticMap {
                g: crate::map::QuadraticPoly::from_coeffs([c(), c(), c(), c(), c(), c()]),
                h: crate::map::QuadraticPoly::from_coeffs([c(), c(), c(), c(), c(), c()]),
            };
            let gp = f.g.to_poly(["x", "y"]);
            let hp = f.h.to_poly(["x", "y"]);
            let sym = gp
                .derivative(0)
                .mul(&hp.derivative(1))
                .sub(&gp.derivative(1).mul(&hp.derivative(0)));
            assert_eq!(jacobian_conic(&f).to_poly(["x", "y"]), sym);
        }
    }

    #[test]
    fn report_fixture_values() {
        let r = invariant_report(&f1());
        assert_eq!(r.det_phi1, q(-16));
        assert_eq!(r.det_phi2, q(32));
        assert_eq!(r.rank_psi1, 3);

        let f4 = QuadraticMap::from_int_coeffs([1, 0, 0, 0, 0, 0], [0, 0, 1, 0, 0, 0]);
        let r = invariant_report(&f4);
        assert_eq!(r.det_phi1, q(-16));
        assert_eq!(r.det_phi2, q(0));
        assert_eq!(r.rank_psi1, 2);

        let f3 = QuadraticMap::from_int_coeffs([1, 0, 0, 0, 1, 0], [0, 0, 1, 0, 0, 0]);
        let r = invariant_report(&f3);
        assert_eq!(r.det_phi1, q(-16));
        assert_eq!(r.det_phi2, q(0));
        assert_eq!(r.rank_psi1, 3);
    }

    #[test]
    fn sign_law_small_sample() {
        for seed in 0..60u64 {
            let pair = random_affine_pair(seed, 4);
            let f = QuadraticMap::from_int_coeffs([1, -2, 0, 3, 1, -1], [0, 1, 2, -1, 0, 2]);
            let before = invariant_report(&f).det_phi1;
            let after = invariant_report(&act(&pair, &f)).det_phi1;
            let jl = pair.target.det();
            let jr = pair.source.det();
            let expected = &(&(&jl * &jl) * &jr.pow(4)) * &before;
            assert_eq!(after, expected, "seed {seed}");
        }
    }

    #[test]
    fn jacobian_chain_rule_identity() {
        for seed in 5..35u64 {
            let pair = random_affine_pair(seed, 3);
            let f = f1();
            let lhs = jacobian_conic(&act(&pair, &f)).to_poly(["x", "y"]);
            let r = &pair.source;
            let xi = BivariatePolynomial::from_terms(
                ["x", "y"],
                &[(1, 0, r.m[0][0].clone()), (0, 1, r.m[0][1].clone()), (0, 0, r.t[0].clone())],
            );
            let yi = BivariatePolynomial::from_terms(
                ["x", "y"],
                &[(1, 0, r.m[1][0].clone()), (0, 1, r.m[1][1].clone()), (0, 0, r.t[1].clone())],
            );
            let factor = &pair.target.det() * &pair.source.det();
            let rhs = jacobian_conic(&f).to_poly(["x", "y"]).compose(&xi, &yi).scale(&factor);
            assert_eq!(lhs, rhs, "seed {seed}");
        }
    }

    #[test]
    fn pencil_reduction_examples() {
        // (x², x²+x) reduces to (x², x) via L = (u, v − u).
        let f = QuadraticMap::from_int_coeffs([1, 0, 0, 0, 0, 0], [1, 0, 0, 1, 0, 0]);
        let red = reduce_to_pencil_chart(&f).unwrap();
        assert_eq!(
            red.reduced,
            QuadraticMap::from_int_coeffs([1, 0, 0, 0, 0, 0], [0, 0, 0, 1, 0, 0])
        );
        assert_eq!(red.target_map.m, [[q(1), q(0)], [q(-1), q(1)]]);
        // The reduction is realized by its own L.
        let pair = AffinePair { target: red.target_map.clone(), source: AffineMap::identity() };
        assert_eq!(act(&pair, &f), red.reduced);

        // f₇ is already in the chart.
        let f7 = QuadraticMap::from_int_coeffs([0, 1, 0, 0, 0, 0], [0, 0, 0, 1, 1, 0]);
        let red = reduce_to_pencil_chart(&f7).unwrap();
        assert_eq!(red.reduced, f7);
        assert_eq!(red.target_map, AffineMap::identity());

        // Affinely dependent components collapse to a zero second component.
        let f = QuadraticMap::from_int_coeffs([1, 0, 0, 0, 1, 0], [2, 0, 0, 0, 2, 0]);
        let red = reduce_to_pencil_chart(&f).unwrap();
        assert_eq!(
            red.reduced,
            QuadraticMap::from_int_coeffs([1, 0, 0, 0, 1, 0], [0, 0, 0, 0, 0, 0])
        );

        // Independent quadratic parts are rejected.
        let err = reduce_to_pencil_chart(&f1()).unwrap_err();
        assert_eq!(err, InvariantsError::NotInPencil);
    }

    #[test]
    fn swapped_component_is_retained() {
        // (0, x²) must retain the quadratic component.
        let f = QuadraticMap::from_int_coeffs([0, 0, 0, 0, 0, 0], [1, 0, 0, 0, 0, 0]);
        let red = reduce_to_pencil_chart(&f).unwrap();
        assert_eq!(
            red.reduced,
            QuadraticMap::from_int_coeffs([1, 0, 0, 0, 0, 0], [0, 0, 0, 0, 0, 0])
        );
        // (0, x) likewise for the affine case.
        let f = QuadraticMap::from_int_coeffs([0, 0, 0, 0, 0, 0], [0, 0, 0, 1, 0, 0]);
        let red = reduce_to_pencil_chart(&f).unwrap();
        assert_eq!(
            red.reduced,
            QuadraticMap::from_int_coeffs([0, 0, 0, 1, 0, 0], [0, 0, 0, 0, 0, 0])
        );
    }

    #[test]
    fn form_test_examples() {
        // g₂ = xy, h₁ = x: not a square; h₁ | g₂ since g₂(0,−1) = 0.
        let f = QuadraticMap::from_int_coeffs([0, 1, 0, 0, 0, 0], [0, 0, 0, 1, 0, 0]);
        let t = form_tests(&graded_parts(&f));
        assert!(!t.g2_is_square);
        assert_eq!(t.h1_divides_g2, Some(true));

        // g₂ = x²+y², h₁ = x: disc = −4 ≠ 0 so not a square; g₂(0,−1) = 1 ≠ 0.
        let f = QuadraticMap::from_int_coeffs([1, 0, 1, 0, 0, 0], [0, 0, 0, 1, 0, 0]);
        let t = form_tests(&graded_parts(&f));
        assert!(!t.g2_is_square);
        assert_eq!(t.h1_divides_g2, Some(false));

        // g₂ = x², g₁ = y: a square whose root direction is x, so g₁ ∦ ℓ.
        let f = QuadraticMap::from_int_coeffs([1, 0, 0, 0, 1, 0], [0, 0, 0, 0, 0, 0]);
        let t = form_tests(&graded_parts(&f));
        assert!(t.g2_is_square);
        assert_eq!(t.g1_parallel_sqrt_g2, Some(false));
        assert_eq!(t.h1_divides_g2, None);
    }
}
