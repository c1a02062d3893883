//! Shared fixtures for the integration tests: a small in-memory corpus of
//! mixed opwreaths, deterministic random morphisms, and an independent
//! convolution evaluator used to cross-check the pipeline built from
//! `compose`/`tensor`.

// each test target compiles this module separately and uses its own subset
#![allow(dead_code)]

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use wreathkit::coaction::{generated_opwreath, CoactionData};
use wreathkit::mixed::{heisenberg_data, MixedOpwreathData};
use wreathkit::mor::Mor;
use wreathkit::scalar::{FieldDescriptor, Scalar};
use wreathkit::structures::{linearize, FinMonoid, MonoidData};
use wreathkit::word::ObjWord;

pub fn q() -> FieldDescriptor {
    FieldDescriptor::Rational
}

pub fn fp(p: u64) -> FieldDescriptor {
    FieldDescriptor::prime(p).expect("fixture prime")
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_scalar(r: &mut ChaCha8Rng, field: FieldDescriptor) -> Scalar {
    match field {
        FieldDescriptor::Rational => {
            let num = r.random_range(-4i64..=4);
            let den = r.random_range(1i64..=3);
            field
                .parse_scalar(&format!("{num}/{den}"))
                .expect("small rationals parse")
        }
        FieldDescriptor::Prime { p } => field.from_i64(r.random_range(0..p) as i64),
    }
}

pub fn random_mor(
    r: &mut ChaCha8Rng,
    field: FieldDescriptor,
    dom: &ObjWord,
    cod: &ObjWord,
) -> Mor {
    Mor::from_fn(field, dom.clone(), cod.clone(), |_, _| random_scalar(r, field))
}

/// The trivial coaction of `k[ℤ/2]` on itself over F₅.
pub fn trivial_coaction_f5() -> CoactionData {
    let field = fp(5);
    let b = linearize(&FinMonoid::cyclic(2), "b", field).unwrap();
    let a = linearize(&FinMonoid::cyclic(2), "a", field).unwrap().monoid();
    let gamma = Mor::identity(field, &a.carrier).tensor(&b.unit);
    let tau = a.unit.tensor(&b.unit).tensor(&b.unit);
    CoactionData { a, b, gamma, tau }
}

/// The grading coaction of `k[ℤ/2]` on itself over F₂.
pub fn graded_coaction_f2() -> CoactionData {
    let field = fp(2);
    let b = linearize(&FinMonoid::cyclic(2), "b", field).unwrap();
    let a = linearize(&FinMonoid::cyclic(2), "a", field).unwrap().monoid();
    let gamma = Mor::from_basis_map(field, a.carrier.clone(), a.carrier.tensor(&b.carrier), |g| {
        g * 2 + g
    });
    let tau = a.unit.tensor(&b.unit).tensor(&b.unit);
    CoactionData { a, b, gamma, tau }
}

/// An opwreath with trivial crossing carrier (`C = I`) over `k[ℤ/2]`.
fn unit_carrier_opwreath() -> MixedOpwreathData {
    let a: MonoidData = linearize(&FinMonoid::cyclic(2), "a", q()).unwrap().monoid();
    MixedOpwreathData {
        c: ObjWord::unit(),
        d: a.unit.clone(),
        w: a.unit.clone(),
        z: Mor::identity(q(), &a.carrier),
        monoid: a,
    }
}

/// Every opwreath the integration tests quantify over, with a label for
/// failure messages.
pub fn corpus_opwreaths() -> Vec<(&'static str, MixedOpwreathData)> {
    let hz2 = heisenberg_data(&linearize(&FinMonoid::cyclic(2), "b", q()).unwrap()).unwrap();
    let hz3 = heisenberg_data(&linearize(&FinMonoid::cyclic(3), "b", fp(3)).unwrap()).unwrap();
    vec![
        ("heisenberg-z2", hz2),
        ("heisenberg-z3", hz3),
        ("unit-carrier", unit_carrier_opwreath()),
        (
            "generated-trivial",
            generated_opwreath(&trivial_coaction_f5()).unwrap(),
        ),
        (
            "generated-graded",
            generated_opwreath(&graded_coaction_f2()).unwrap(),
        ),
    ]
}

/// Convolution evaluated by brute-force basis summation, written against
/// the raw entry tables instead of `compose`/`tensor`, and associating the
/// triple product the other way (`a₁·(a₃·a₄)` instead of `(a₁·a₃)·a₄`).
/// Agreement with [`wreathkit::mixed::convolve`] therefore checks both the
/// matrix pipeline and associativity of the monoid at once.
pub fn convolution_oracle(u: &Mor, v: &Mor, data: &MixedOpwreathData) -> Mor {
    let field = data.monoid.field();
    let na = data.monoid.carrier.dim();
    let nc = data.c.dim();
    let (d, z, mu) = (&data.d, &data.z, &data.monoid.mul);
    Mor::from_fn(field, data.c.clone(), data.monoid.carrier.clone(), |r, col| {
        let mut acc = field.zero();
        for a1 in 0..na {
            for c1 in 0..nc {
                for c2 in 0..nc {
                    let dc = d.entry((a1 * nc + c1) * nc + c2, col);
                    if dc.is_zero() {
                        continue;
                    }
                    for a2 in 0..na {
                        let uc = u.entry(a2, c1);
                        if uc.is_zero() {
                            continue;
                        }
                        for a3 in 0..na {
                            for c3 in 0..nc {
                                let zc = z.entry(a3 * nc + c3, c2 * na + a2);
                                if zc.is_zero() {
                                    continue;
                                }
                                for a4 in 0..na {
                                    let vc = v.entry(a4, c3);
                                    if vc.is_zero() {
                                        continue;
                                    }
                                    for s in 0..na {
                                        let m1 = mu.entry(s, a3 * na + a4);
                                        if m1.is_zero() {
                                            continue;
                                        }
                                        let m2 = mu.entry(r, a1 * na + s);
                                        if m2.is_zero() {
                                            continue;
                                        }
                                        let mut term = field.mul(dc, uc);
                                        term = field.mul(&term, zc);
                                        term = field.mul(&term, vc);
                                        term = field.mul(&term, m1);
                                        term = field.mul(&term, m2);
                                        acc = field.add(&acc, &term);
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        acc
    })
}
