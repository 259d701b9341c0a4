//! Model complexes: staircases of L-space knots, acyclic boxes, thin-knot and
//! Conway-knot models, and a seeded random generator built from the same parts.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::{direct_sum, direct_sum_unchecked, mirror, tensor, CfkComplex, DiffEntry, Generator};
use crate::error::ExponentError;
use crate::poly::{gcd, torus_alexander, Laurent};

/// Exponents `n_0 > n_1 > ... > n_k` of an alternating Alexander polynomial
/// `Σ (-1)^i t^{n_i}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlexanderExponents(Vec<i64>);

impl AlexanderExponents {
    pub fn new(exponents: Vec<i64>) -> Result<Self, ExponentError> {
        if exponents.is_empty() || exponents.windows(2).any(|w| w[0] <= w[1]) {
            return Err(ExponentError::NotDecreasing(exponents));
        }
        if exponents.iter().zip(exponents.iter().rev()).any(|(a, b)| *a != -*b) {
            return Err(ExponentError::NotSymmetric(exponents));
        }
        if exponents.len().is_multiple_of(2) {
            return Err(ExponentError::OddLength(exponents));
        }
        Ok(Self(exponents))
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn top(&self) -> i64 {
        self.0[0]
    }

    pub fn polynomial(&self) -> Laurent {
        Laurent::from_terms(self.0.iter().enumerate().map(|(i, &e)| (e, if i % 2 == 0 { 1 } else { -1 })))
    }

    /// Reads off exponents from a polynomial whose nonzero coefficients, in
    /// decreasing degree, are `+1, -1, +1, ...`.
    pub fn from_polynomial(p: &Laurent) -> Result<Self, ExponentError> {
        let mut exps = Vec::new();
        for (k, (e, c)) in p.terms_desc().enumerate() {
            let want = if k % 2 == 0 { 1 } else { -1 };
            if c != want {
                return Err(ExponentError::NotLSpaceForm(p.to_string()));
            }
            exps.push(e);
        }
        Self::new(exps).map_err(|_| ExponentError::NotLSpaceForm(p.to_string()))
    }
}

fn check_coprime(p: i64, q: i64) -> Result<(), ExponentError> {
    if p < 1 || q < 1 || gcd(p, q) != 1 {
        return Err(ExponentError::NotCoprime(p, q));
    }
    Ok(())
}

pub fn torus_knot_exponents(p: i64, q: i64) -> Result<AlexanderExponents, ExponentError> {
    check_coprime(p, q)?;
    AlexanderExponents::from_polynomial(&torus_alexander(p, q))
}

/// Exponents of the `(p, q)` cable of an L-space knot with exponents `base`:
/// `Δ_base(t^p) · Δ_{T(p,q)}(t)`.
///
/// Refused unless the cable is again an L-space knot (`q >= p(2g - 1)` with
/// `g = n_0`) and the product is alternating.
pub fn cable_exponents(
    base: &AlexanderExponents,
    p: i64,
    q: i64,
) -> Result<AlexanderExponents, ExponentError> {
    check_coprime(p, q)?;
    let bound = p * (2 * base.top() - 1);
    if base.top() > 0 && q < bound {
        return Err(ExponentError::NotLSpaceCable { p, q, bound });
    }
    let product = base.polynomial().substitute_power(p).mul(&torus_alexander(p, q));
    AlexanderExponents::from_polynomial(&product)
}

/// Staircase complex: generators `b0 … bk` with `A(b_i) = n_i`; for odd `i`,
/// `∂b_i = b_{i+1} + U^{n_{i-1} - n_i} b_{i-1}`.
pub fn staircase(e: &AlexanderExponents) -> CfkComplex {
    let n = e.as_slice();
    let mut maslov = vec![0i64; n.len()];
    let mut differential = Vec::new();
    for i in (1..n.len()).step_by(2) {
        let horizontal = n[i - 1] - n[i];
        maslov[i] = maslov[i - 1] + 1 - 2 * horizontal;
        maslov[i + 1] = maslov[i] - 1;
        let upower = u32::try_from(horizontal).expect("gap fits in u32");
        differential.push(DiffEntry::new(format!("b{i}"), format!("b{}", i + 1), 0));
        differential.push(DiffEntry::new(format!("b{i}"), format!("b{}", i - 1), upower));
    }
    let generators = n
        .iter()
        .zip(&maslov)
        .enumerate()
        .map(|(i, (&a, &m))| Generator::new(format!("b{i}"), a, Some(m)))
        .collect();
    let name = format!("staircase{:?}", n);
    CfkComplex::new(name, generators, differential).expect("staircase is well formed")
}

/// Four generators at the corners of a unit lattice square, with Alexander
/// gradings `offset + {1, 0, 0, -1}` and both pairs of parallel edges.
/// `maslov` is the grading of the top-right corner.
pub fn box_complex(prefix: &str, offset: i64, maslov: i64) -> CfkComplex {
    let id = |c: &str| format!("{prefix}{c}");
    CfkComplex::new(
        format!("box{offset:+}"),
        vec![
            Generator::new(id("t"), offset, Some(maslov)),
            Generator::new(id("l"), offset + 1, Some(maslov + 1)),
            Generator::new(id("r"), offset - 1, Some(maslov - 1)),
            Generator::new(id("d"), offset, Some(maslov)),
        ],
        vec![
            DiffEntry::new(id("t"), id("r"), 0),
            DiffEntry::new(id("t"), id("l"), 1),
            DiffEntry::new(id("l"), id("d"), 0),
            DiffEntry::new(id("r"), id("d"), 1),
        ],
    )
    .expect("box is well formed")
}

/// The default box, centred at the origin.
pub fn unit_box() -> CfkComplex {
    box_complex("q", 0, 0)
}

pub fn unknot() -> CfkComplex {
    CfkComplex::new("unknot", vec![Generator::new("x", 0, Some(0))], vec![]).expect("unknot is well formed")
}

/// Attaches boxes to a complex with nonzero vertical homology.
pub fn with_boxes(base: CfkComplex, boxes: impl IntoIterator<Item = CfkComplex>) -> CfkComplex {
    let name = base.name().to_string();
    let mut acc: Option<CfkComplex> = None;
    for b in boxes {
        acc = Some(match acc {
            None => b,
            Some(a) => direct_sum_unchecked(&a, &b).expect("box ids are distinct"),
        });
    }
    match acc {
        None => base,
        Some(a) => direct_sum(&base, &a).expect("boxes are acyclic").with_name(name),
    }
}

/// Thin-knot model: the staircase summand determined by `tau` plus `boxes`
/// boxes placed on the same δ-diagonal.
pub fn thin_model(tau: i64, boxes: usize) -> CfkComplex {
    let base = match tau {
        0 => unknot(),
        t => {
            let n = t.abs();
            let e =
                AlexanderExponents::new((-n..=n).rev().collect()).expect("T(2, 2n+1) exponents are valid");
            let s = staircase(&e);
            if t > 0 {
                s
            } else {
                mirror(&s)
            }
        }
    };
    let summands = (0..boxes).map(|k| box_complex(&format!("q{k}"), 0, -tau));
    with_boxes(base, summands).with_name(format!("thin(tau={tau},boxes={boxes})"))
}

/// An isolated generator at the origin plus boxes at Alexander offsets -2, 0, 2.
pub fn conway_model() -> CfkComplex {
    let boxes = [-2, 0, 2].into_iter().enumerate().map(|(k, off)| box_complex(&format!("q{k}"), off, off));
    with_boxes(unknot(), boxes).with_name("Conway")
}

fn random_exponents(rng: &mut ChaCha8Rng) -> AlexanderExponents {
    let half: Vec<i64> = (0..rng.gen_range(0..=3)).map(|_| rng.gen_range(1..=3)).collect();
    let gaps: Vec<i64> = half.iter().chain(half.iter().rev()).copied().collect();
    let mut e = vec![half.iter().sum::<i64>()];
    for g in gaps {
        e.push(e.last().unwrap() - g);
    }
    AlexanderExponents::new(e).expect("palindromic gaps give valid exponents")
}

fn random_summand(rng: &mut ChaCha8Rng, box_counter: &mut usize) -> CfkComplex {
    let base = if rng.gen_bool(0.5) {
        staircase(&random_exponents(rng))
    } else {
        thin_model(rng.gen_range(-3..=3), 0)
    };
    let base = if rng.gen_bool(0.5) { mirror(&base) } else { base };
    let boxes: Vec<_> = (0..rng.gen_range(0..=2))
        .map(|_| {
            *box_counter += 1;
            box_complex(&format!("r{box_counter}"), rng.gen_range(-2..=2), rng.gen_range(-3..=3))
        })
        .collect();
    with_boxes(base, boxes)
}

/// A valid complex drawn from the grammar `(staircase | thin) ⊕ boxes`, possibly
/// mirrored, tensored together `1..=size` times. Deterministic in `seed`.
pub fn random_model(seed: u64, size: usize) -> CfkComplex {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut boxes = 0;
    let factors = rng.gen_range(1..=size.max(1));
    let mut model = random_summand(&mut rng, &mut boxes);
    for _ in 1..factors {
        let next = random_summand(&mut rng, &mut boxes);
        model = tensor(&model, &next);
    }
    model.with_name(format!("random(seed={seed},size={size})"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::validate;

    fn exps(v: &[i64]) -> AlexanderExponents {
        AlexanderExponents::new(v.to_vec()).unwrap()
    }

    #[test]
    fn exponent_validation() {
        assert!(matches!(AlexanderExponents::new(vec![1, 1, -1]), Err(ExponentError::NotDecreasing(_))));
        assert!(matches!(AlexanderExponents::new(vec![2, 0, -1]), Err(ExponentError::NotSymmetric(_))));
        assert!(matches!(AlexanderExponents::new(vec![1, -1]), Err(ExponentError::OddLength(_))));
        assert!(matches!(AlexanderExponents::new(vec![]), Err(ExponentError::NotDecreasing(_))));
    }

    #[test]
    fn staircase_of_zero_is_unknot() {
        let s = staircase(&exps(&[0]));
        assert_eq!(s.len(), 1);
        assert!(s.edges().is_empty());
    }

    #[test]
    fn trefoil_staircase_matches_hand_model() {
        let s = staircase(&exps(&[1, 0, -1]));
        assert!(validate(&s).is_valid());
        let mut d = s.differential();
        d.sort();
        assert_eq!(d, vec![DiffEntry::new("b1", "b0", 1), DiffEntry::new("b1", "b2", 0)]);
        let m: Vec<_> = s.generators().iter().map(|g| g.maslov.unwrap()).collect();
        assert_eq!(m, vec![0, -1, -2]);
    }

    #[test]
    fn box_is_acyclic() {
        let b = unit_box();
        assert_eq!(b.vertical_homology_dim(), 0);
        assert_eq!(b.horizontal_homology_dim(), 0);
        let r = validate(&b);
        assert_eq!(r.failed_checks(), vec![crate::complex::CHECK_VERTICAL]);
    }

    #[test]
    fn unknot_plus_box() {
        let c = direct_sum(&unknot(), &unit_box()).unwrap();
        assert_eq!(c.len(), 5);
        assert_eq!(c.vertical_homology_dim(), 1);
        assert!(direct_sum(&unit_box(), &box_complex("p", 0, 0)).is_err());
    }

    #[test]
    fn conway_model_shape() {
        let c = conway_model();
        assert_eq!(c.len(), 1 + 4 * 3);
        assert!(validate(&c).is_valid());
        assert_eq!(c.genus_bound(), 3);
    }

    #[test]
    fn thin_models_validate() {
        for tau in -3..=3 {
            for b in 0..3 {
                let c = thin_model(tau, b);
                let r = validate(&c);
                assert!(r.is_valid(), "tau={tau} b={b}: {r}");
                assert_eq!(c.len(), (2 * tau.unsigned_abs() as usize + 1) + 4 * b);
            }
        }
        assert!(thin_model(1, 0).isomorphic_by_ids(&staircase(&exps(&[1, 0, -1]))));
    }

    #[test]
    fn random_models_are_deterministic() {
        let a = crate::format::serialize(&random_model(7, 2));
        let b = crate::format::serialize(&random_model(7, 2));
        assert_eq!(a, b);
    }

    #[test]
    fn coprimality_is_enforced() {
        assert_eq!(torus_knot_exponents(2, 4), Err(ExponentError::NotCoprime(2, 4)));
        assert!(torus_knot_exponents(0, 3).is_err());
    }

    #[test]
    fn non_lspace_cable_is_refused() {
        // The (2,1) cable of the trefoil is not an L-space knot.
        let t = torus_knot_exponents(2, 3).unwrap();
        assert_eq!(cable_exponents(&t, 2, 1), Err(ExponentError::NotLSpaceCable { p: 2, q: 1, bound: 2 }));
        assert!(cable_exponents(&t, 2, 3).is_ok());
    }

    #[test]
    fn non_alternating_polynomial_is_refused() {
        // figure-eight: -t + 3 - t^-1
        let fig8 = Laurent::from_terms([(1, -1), (0, 3), (-1, -1)]);
        assert!(matches!(AlexanderExponents::from_polynomial(&fig8), Err(ExponentError::NotLSpaceForm(_))));
        let gap = Laurent::from_terms([(1, 1), (0, 1), (-1, 1)]);
        assert!(AlexanderExponents::from_polynomial(&gap).is_err());
    }
}
