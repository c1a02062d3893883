//! Mixed opwreaths: a comonoid-like object threaded through a monoid.
//!
//! A mixed opwreath around a monoid `A` is an object `C` with three
//! morphisms
//!
//! * `d : C → A⊗C⊗C` — a comultiplication that also emits an `A` leg,
//! * `w : C → A` — a counit-like weight,
//! * `z : C⊗A → A⊗C` — a crossing letting `A` move left past `C`,
//!
//! subject to seven laws ([`check_opwreath`]). Such data makes morphisms
//! `C⊗X → A⊗Y` the arrows of a category — the Kleisli category implemented
//! by [`KleisliMor`] and [`kleisli_compose`] — and gives maps `C → A` a
//! convolution-style product ([`convolve`]). Two constructions matter in
//! practice: a bimonoid yields the Heisenberg opwreath on itself
//! ([`heisenberg_data`]), whose convolution is the Heisenberg product, and
//! a plain comonoid and monoid yield a degenerate opwreath
//! ([`degenerate_opwreath`]) whose convolution reduces to the classical one
//! whenever the comonoid is cocommutative.

use crate::error::{Error, Result};
use crate::mor::Mor;
use crate::report::{AxiomEntry, AxiomReport};
use crate::structures::{
    check_bimonoid, check_comonoid, check_monoid, expect_shape, BimonoidData, ComonoidData,
    MonoidData,
};
use crate::word::ObjWord;
use std::sync::Arc;

/// Candidate mixed-opwreath data; [`check_opwreath`] decides whether the
/// laws hold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MixedOpwreathData {
    pub monoid: MonoidData,
    pub c: ObjWord,
    pub d: Mor,
    pub w: Mor,
    pub z: Mor,
}

impl MixedOpwreathData {
    pub(crate) fn check_shapes(&self) -> Result<()> {
        self.monoid.check_shapes()?;
        let a = &self.monoid.carrier;
        let c = &self.c;
        expect_shape("d", &self.d, c, &a.tensor(c).tensor(c))?;
        expect_shape("w", &self.w, c, a)?;
        expect_shape("z", &self.z, &c.tensor(a), &a.tensor(c))
    }

    /// The two-fold multiplication `A⊗A⊗A → A`.
    fn mu3(&self) -> Result<Mor> {
        let id_a = Mor::identity(self.monoid.field(), &self.monoid.carrier);
        self.monoid.mul.compose(&self.monoid.mul.tensor(&id_a))
    }
}

/// Check the seven mixed-opwreath laws.
pub fn check_opwreath(data: &MixedOpwreathData) -> Result<AxiomReport> {
    data.check_shapes()?;
    let field = data.monoid.field();
    let a = &data.monoid.carrier;
    let c = &data.c;
    let id_a = Mor::identity(field, a);
    let id_c = Mor::identity(field, c);
    let mu = &data.monoid.mul;
    let eta = &data.monoid.unit;
    let (d, w, z) = (&data.d, &data.w, &data.z);

    // z∘(1⊗μ) = (μ⊗1)∘(1⊗z)∘(z⊗1) : C⊗A⊗A → A⊗C
    let lhs = z.compose(&id_c.tensor(mu))?;
    let rhs = mu
        .tensor(&id_c)
        .compose(&id_a.tensor(z))?
        .compose(&z.tensor(&id_a))?;
    let e1 = AxiomEntry::compare("z-mu", "z vs μ", &lhs, &rhs);

    // z∘(1⊗η) = η⊗1 : C → A⊗C
    let lhs = z.compose(&id_c.tensor(eta))?;
    let rhs = eta.tensor(&id_c);
    let e2 = AxiomEntry::compare("z-eta", "z vs η", &lhs, &rhs);

    // μ∘(w⊗1) = μ∘(1⊗w)∘z : C⊗A → A
    let lhs = mu.compose(&w.tensor(&id_a))?;
    let rhs = mu.compose(&id_a.tensor(w))?.compose(z)?;
    let e3 = AxiomEntry::compare("w-kleisli", "w crosses along z", &lhs, &rhs);

    // (μ⊗1⊗1)∘(1⊗z⊗1)∘(1⊗1⊗z)∘(d⊗1) = (μ⊗1⊗1)∘(1⊗d)∘z : C⊗A → A⊗C⊗C
    let mu_cc = mu.tensor(&id_c).tensor(&id_c);
    let lhs = mu_cc
        .compose(&id_a.tensor(z).tensor(&id_c))?
        .compose(&id_a.tensor(&id_c).tensor(z))?
        .compose(&d.tensor(&id_a))?;
    let rhs = mu_cc.compose(&id_a.tensor(d))?.compose(z)?;
    let e4 = AxiomEntry::compare("d-kleisli", "d crosses along z", &lhs, &rhs);

    // (μ⊗1³)∘(1⊗d⊗1)∘d = (μ⊗1³)∘(1⊗z⊗1⊗1)∘(1⊗1⊗d)∘d : C → A⊗C⊗C⊗C
    let mu_ccc = mu_cc.tensor(&id_c);
    let lhs = mu_ccc.compose(&id_a.tensor(d).tensor(&id_c))?.compose(d)?;
    let rhs = mu_ccc
        .compose(&id_a.tensor(z).tensor(&id_c).tensor(&id_c))?
        .compose(&id_a.tensor(&id_c).tensor(d))?
        .compose(d)?;
    let e5 = AxiomEntry::compare("d-coassoc", "twisted coassociativity", &lhs, &rhs);

    // (μ⊗1)∘(1⊗w⊗1)∘d = η⊗1 : C → A⊗C
    let eta_c = eta.tensor(&id_c);
    let lhs = mu
        .tensor(&id_c)
        .compose(&id_a.tensor(w).tensor(&id_c))?
        .compose(d)?;
    let e6 = AxiomEntry::compare("counit-left", "left counit law", &lhs, &eta_c);

    // (μ⊗1)∘(1⊗z)∘(1⊗1⊗w)∘d = η⊗1 : C → A⊗C
    let lhs = mu
        .tensor(&id_c)
        .compose(&id_a.tensor(z))?
        .compose(&id_a.tensor(&id_c).tensor(w))?
        .compose(d)?;
    let e7 = AxiomEntry::compare("counit-right", "right counit law", &lhs, &eta_c);

    Ok(AxiomReport::new(vec![e1, e2, e3, e4, e5, e6, e7]))
}

// ---- convolution ---------------------------------------------------------------

/// Convolve two maps `u, v : C → A` through the opwreath:
///
/// ```text
/// u ★ v = μ₃ ∘ (1_A⊗1_A⊗v) ∘ (1_A⊗z) ∘ (1_A⊗1_C⊗u) ∘ d
/// ```
///
/// `u` is applied to the *second* output leg of `d` and crossed to the left
/// of the remaining `C` leg before `v` acts on it.
pub fn convolve(u: &Mor, v: &Mor, data: &MixedOpwreathData) -> Result<Mor> {
    data.check_shapes()?;
    let a = &data.monoid.carrier;
    let c = &data.c;
    expect_shape("left convolution factor", u, c, a)?;
    expect_shape("right convolution factor", v, c, a)?;
    let field = data.monoid.field();
    let id_a = Mor::identity(field, a);
    let id_c = Mor::identity(field, c);
    data.mu3()?
        .compose(&id_a.tensor(&id_a).tensor(v))?
        .compose(&id_a.tensor(&data.z))?
        .compose(&id_a.tensor(&id_c).tensor(u))?
        .compose(&data.d)
}

// ---- standard instances -----------------------------------------------------------

/// The Heisenberg opwreath of a bimonoid on itself: `C = A`,
///
/// * `z = (1⊗μ) ∘ braid(A⊗A, A) ∘ (1⊗δ)` — on grouplikes, `g⊗h ↦ h⊗(gh)`,
/// * `d = η ⊗ δ`,
/// * `w = η ∘ ε`.
///
/// The bimonoid laws are validated first; [`convolve`] in this context is
/// the Heisenberg product.
pub fn heisenberg_data(b: &BimonoidData) -> Result<MixedOpwreathData> {
    let report = check_bimonoid(b)?;
    if !report.passed() {
        return Err(Error::ValidationFailed {
            what: "bimonoid data".to_string(),
            report,
        });
    }
    let field = b.mul.field();
    let a = &b.carrier;
    let id_a = Mor::identity(field, a);
    let z = id_a
        .tensor(&b.mul)
        .compose(&Mor::braid(field, &a.tensor(a), a))?
        .compose(&id_a.tensor(&b.comul))?;
    let d = b.unit.tensor(&b.comul);
    let w = b.unit.compose(&b.counit)?;
    Ok(MixedOpwreathData {
        monoid: b.monoid(),
        c: a.clone(),
        d,
        w,
        z,
    })
}

/// The Heisenberg product of `u, v : A → A` over a bimonoid.
pub fn heisenberg_product(u: &Mor, v: &Mor, b: &BimonoidData) -> Result<Mor> {
    convolve(u, v, &heisenberg_data(b)?)
}

/// The degenerate opwreath of a comonoid over an unrelated monoid:
/// `z` is the braiding, `d = η ⊗ δ`, `w = η ∘ ε`. For cocommutative `C`
/// its convolution coincides with [`classical_convolution`].
///
/// [`classical_convolution`]: crate::structures::classical_convolution
pub fn degenerate_opwreath(
    c: &ComonoidData,
    a: &MonoidData,
) -> Result<MixedOpwreathData> {
    let report = check_comonoid(c)?;
    if !report.passed() {
        return Err(Error::ValidationFailed {
            what: "comonoid data".to_string(),
            report,
        });
    }
    let report = check_monoid(a)?;
    if !report.passed() {
        return Err(Error::ValidationFailed {
            what: "monoid data".to_string(),
            report,
        });
    }
    if c.comul.field() != a.field() {
        return Err(Error::MixedFields {
            left: c.comul.field().to_string(),
            right: a.field().to_string(),
        });
    }
    let z = Mor::braid(a.field(), &c.carrier, &a.carrier);
    let d = a.unit.tensor(&c.comul);
    let w = a.unit.compose(&c.counit)?;
    Ok(MixedOpwreathData {
        monoid: a.clone(),
        c: c.carrier.clone(),
        d,
        w,
        z,
    })
}

// ---- the Kleisli category ------------------------------------------------------------

/// A morphism `X → Y` in the Kleisli category of a mixed opwreath: a matrix
/// `C⊗X → A⊗Y` tagged with its endpoints and shared context.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KleisliMor {
    context: Arc<MixedOpwreathData>,
    dom: ObjWord,
    cod: ObjWord,
    mat: Mor,
}

impl KleisliMor {
    pub fn new(
        context: Arc<MixedOpwreathData>,
        dom: ObjWord,
        cod: ObjWord,
        mat: Mor,
    ) -> Result<Self> {
        context.check_shapes()?;
        expect_shape(
            "kleisli matrix",
            &mat,
            &context.c.tensor(&dom),
            &context.monoid.carrier.tensor(&cod),
        )?;
        Ok(KleisliMor {
            context,
            dom,
            cod,
            mat,
        })
    }

    /// The Kleisli identity on `x`: `w ⊗ 1_x`.
    pub fn identity(context: Arc<MixedOpwreathData>, x: &ObjWord) -> Result<Self> {
        context.check_shapes()?;
        let field = context.monoid.field();
        let mat = context.w.tensor(&Mor::identity(field, x));
        Ok(KleisliMor {
            context,
            dom: x.clone(),
            cod: x.clone(),
            mat,
        })
    }

    pub fn dom(&self) -> &ObjWord {
        &self.dom
    }

    pub fn cod(&self) -> &ObjWord {
        &self.cod
    }

    pub fn mat(&self) -> &Mor {
        &self.mat
    }

    pub fn context(&self) -> &Arc<MixedOpwreathData> {
        &self.context
    }

    fn shares_context_with(&self, other: &KleisliMor) -> bool {
        Arc::ptr_eq(&self.context, &other.context) || self.context == other.context
    }
}

/// Compose in the Kleisli category: for `f : X → Y` and `g : Y → Z`, the
/// composite `g ∘ f : X → Z` has matrix
///
/// ```text
/// (μ₃⊗1_Z) ∘ (1_A⊗1_A⊗ĝ) ∘ (1_A⊗z⊗1_Y) ∘ (1_A⊗1_C⊗f̂) ∘ (d⊗1_X)
/// ```
///
/// feeding the extra `C` legs produced by `d` to `f` and `g` in turn and
/// collapsing the accumulated `A` legs on the left.
pub fn kleisli_compose(f: &KleisliMor, g: &KleisliMor) -> Result<KleisliMor> {
    if !f.shares_context_with(g) {
        return Err(Error::ContextMismatch);
    }
    if f.cod != g.dom {
        return Err(Error::ComposeMismatch {
            expected: g.dom.to_string(),
            actual: f.cod.to_string(),
        });
    }
    let ctx = &f.context;
    let field = ctx.monoid.field();
    let a = &ctx.monoid.carrier;
    let id_a = Mor::identity(field, a);
    let id_c = Mor::identity(field, &ctx.c);
    let id_x = Mor::identity(field, &f.dom);
    let id_y = Mor::identity(field, &f.cod);
    let id_z = Mor::identity(field, &g.cod);

    let mat = ctx
        .mu3()?
        .tensor(&id_z)
        .compose(&id_a.tensor(&id_a).tensor(&g.mat))?
        .compose(&id_a.tensor(&ctx.z).tensor(&id_y))?
        .compose(&id_a.tensor(&id_c).tensor(&f.mat))?
        .compose(&ctx.d.tensor(&id_x))?;

    Ok(KleisliMor {
        context: f.context.clone(),
        dom: f.dom.clone(),
        cod: g.cod.clone(),
        mat,
    })
}
