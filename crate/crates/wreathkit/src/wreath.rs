//! Wreaths around a monoid and their wreath products.
//!
//! A wreath around a monoid `A` consists of an object `S` together with
//! three morphisms
//!
//! * `ν : S⊗S → S⊗A` — a multiplication on `S` twisted by `A`,
//! * `σ₀ : I → S⊗A` — a base point,
//! * `λ : A⊗S → S⊗A` — a crossing law letting `A` move past `S`,
//!
//! subject to seven laws (see [`check_wreath`]). When they hold, `S⊗A`
//! carries an induced monoid structure, the *wreath product*: multiply by
//! first crossing the inner `A` leg to the right with `λ`, then combining
//! the two `S` legs with `ν`, then collapsing the three `A` legs with `μ`.
//! Distributive laws `λ` between two monoids, and the trivial case `S = I`,
//! give familiar special cases.

use crate::error::{Error, Result};
use crate::mor::Mor;
use crate::report::{AxiomEntry, AxiomReport};
use crate::structures::{expect_shape, MonoidData};
use crate::word::ObjWord;

/// A candidate wreath around `monoid`; run [`check_wreath`] to find out
/// whether the seven laws hold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WreathData {
    pub monoid: MonoidData,
    pub s: ObjWord,
    pub nu: Mor,
    pub sigma0: Mor,
    pub lambda: Mor,
}

impl WreathData {
    pub(crate) fn check_shapes(&self) -> Result<()> {
        self.monoid.check_shapes()?;
        let a = &self.monoid.carrier;
        let s = &self.s;
        let sa = s.tensor(a);
        expect_shape("nu", &self.nu, &s.tensor(s), &sa)?;
        expect_shape("sigma0", &self.sigma0, &ObjWord::unit(), &sa)?;
        expect_shape("lambda", &self.lambda, &a.tensor(s), &sa)
    }
}

/// Check the seven wreath laws.
///
/// The first two make `λ` an action-like crossing (compatible with `μ` and
/// `η`), the next three interleave `σ₀`, `ν` and `λ`, and the last two are
/// the unit laws of `σ₀` against `ν`.
pub fn check_wreath(w: &WreathData) -> Result<AxiomReport> {
    w.check_shapes()?;
    let field = w.monoid.field();
    let a = &w.monoid.carrier;
    let s = &w.s;
    let id_a = Mor::identity(field, a);
    let id_s = Mor::identity(field, s);
    let mu = &w.monoid.mul;
    let eta = &w.monoid.unit;
    let (nu, sig, lam) = (&w.nu, &w.sigma0, &w.lambda);
    let s_mu = id_s.tensor(mu); // S⊗A⊗A → S⊗A
    let s_eta = id_s.tensor(eta); // S → S⊗A

    // λ∘(μ⊗1) = (1⊗μ)∘(λ⊗1)∘(1⊗λ) : A⊗A⊗S → S⊗A
    let lhs = lam.compose(&mu.tensor(&id_s))?;
    let rhs = s_mu
        .compose(&lam.tensor(&id_a))?
        .compose(&id_a.tensor(lam))?;
    let e1 = AxiomEntry::compare("lambda-mu", "λ vs μ", &lhs, &rhs);

    // λ∘(η⊗1) = 1⊗η : S → S⊗A
    let lhs = lam.compose(&eta.tensor(&id_s))?;
    let e2 = AxiomEntry::compare("lambda-eta", "λ vs η", &lhs, &s_eta);

    // (1⊗μ)∘(σ₀⊗1) = (1⊗μ)∘(λ⊗1)∘(1⊗σ₀) : A → S⊗A
    let lhs = s_mu.compose(&sig.tensor(&id_a))?;
    let rhs = s_mu
        .compose(&lam.tensor(&id_a))?
        .compose(&id_a.tensor(sig))?;
    let e3 = AxiomEntry::compare("sigma-lambda", "σ vs λ", &lhs, &rhs);

    // (1⊗μ)∘(ν⊗1)∘(1⊗λ)∘(λ⊗1) = (1⊗μ)∘(λ⊗1)∘(1⊗ν) : A⊗S⊗S → S⊗A
    let lhs = s_mu
        .compose(&nu.tensor(&id_a))?
        .compose(&id_s.tensor(lam))?
        .compose(&lam.tensor(&id_s))?;
    let rhs = s_mu
        .compose(&lam.tensor(&id_a))?
        .compose(&id_a.tensor(nu))?;
    let e4 = AxiomEntry::compare("nu-lambda", "ν vs λ", &lhs, &rhs);

    // (1⊗μ)∘(ν⊗1)∘(1⊗ν) = (1⊗μ)∘(ν⊗1)∘(1⊗λ)∘(ν⊗1) : S⊗S⊗S → S⊗A
    let lhs = s_mu
        .compose(&nu.tensor(&id_a))?
        .compose(&id_s.tensor(nu))?;
    let rhs = s_mu
        .compose(&nu.tensor(&id_a))?
        .compose(&id_s.tensor(lam))?
        .compose(&nu.tensor(&id_s))?;
    let e5 = AxiomEntry::compare("nu-coassoc", "ν coassoc-like", &lhs, &rhs);

    // (1⊗μ)∘(ν⊗1)∘(1⊗λ)∘(σ₀⊗1) = 1⊗η : S → S⊗A
    let lhs = s_mu
        .compose(&nu.tensor(&id_a))?
        .compose(&id_s.tensor(lam))?
        .compose(&sig.tensor(&id_s))?;
    let e6 = AxiomEntry::compare("sigma-unit-left", "σ unit left", &lhs, &s_eta);

    // (1⊗μ)∘(ν⊗1)∘(1⊗σ₀) = 1⊗η : S → S⊗A
    let lhs = s_mu
        .compose(&nu.tensor(&id_a))?
        .compose(&id_s.tensor(sig))?;
    let e7 = AxiomEntry::compare("sigma-unit-right", "σ unit right", &lhs, &s_eta);

    Ok(AxiomReport::new(vec![e1, e2, e3, e4, e5, e6, e7]))
}

/// The induced monoid on `S⊗A`. Validates the wreath laws first and refuses
/// invalid data; see [`wreath_product_unchecked`] to skip validation.
pub fn wreath_product(w: &WreathData) -> Result<MonoidData> {
    let report = check_wreath(w)?;
    if !report.passed() {
        return Err(Error::ValidationFailed {
            what: "wreath data".to_string(),
            report,
        });
    }
    wreath_product_unchecked(w)
}

/// The wreath-product monoid on `S⊗A`, built without validating the wreath
/// laws (the result need not be a monoid if they fail):
///
/// ```text
/// mul  = (1_S⊗μ₃) ∘ (ν⊗1_A⊗1_A) ∘ (1_S⊗λ⊗1_A)      unit = σ₀
/// ```
///
/// where `μ₃ : A⊗A⊗A → A` is the two-fold multiplication.
pub fn wreath_product_unchecked(w: &WreathData) -> Result<MonoidData> {
    w.check_shapes()?;
    let field = w.monoid.field();
    let a = &w.monoid.carrier;
    let s = &w.s;
    let id_a = Mor::identity(field, a);
    let id_s = Mor::identity(field, s);
    let mu = &w.monoid.mul;

    let mu3 = mu.compose(&mu.tensor(&id_a))?;
    let mul = id_s
        .tensor(&mu3)
        .compose(&w.nu.tensor(&id_a).tensor(&id_a))?
        .compose(&id_s.tensor(&w.lambda).tensor(&id_a))?;

    Ok(MonoidData {
        carrier: s.tensor(a),
        mul,
        unit: w.sigma0.clone(),
    })
}

/// The wreath induced by a distributive law `λ : A⊗S → S⊗A` between two
/// monoids: `ν` multiplies in `S` and emits the unit of `A`, and `σ₀` pairs
/// the two units. The wreath product then recovers the twisted product of
/// the monoids.
pub fn from_distributive_law(
    s: &MonoidData,
    a: &MonoidData,
    lambda: &Mor,
) -> Result<WreathData> {
    s.check_shapes()?;
    a.check_shapes()?;
    if s.field() != a.field() {
        return Err(Error::MixedFields {
            left: s.field().to_string(),
            right: a.field().to_string(),
        });
    }
    let id_s = Mor::identity(s.field(), &s.carrier);
    let nu = id_s.tensor(&a.unit).compose(&s.mul)?;
    let sigma0 = s.unit.tensor(&a.unit);
    let w = WreathData {
        monoid: a.clone(),
        s: s.carrier.clone(),
        nu,
        sigma0,
        lambda: lambda.clone(),
    };
    w.check_shapes()?;
    Ok(w)
}

/// The trivial wreath with `S = I`: everything collapses onto the monoid
/// itself.
pub fn trivial_wreath(a: &MonoidData) -> WreathData {
    let field = a.field();
    WreathData {
        monoid: a.clone(),
        s: ObjWord::unit(),
        nu: a.unit.clone(),
        sigma0: a.unit.clone(),
        lambda: Mor::identity(field, &a.carrier),
    }
}
