//! Monoids, comonoids, bimonoids — both as finite multiplication tables and
//! as matrix data over a field — together with their law checkers.
//!
//! The matrix-level structures ([`MonoidData`], [`ComonoidData`],
//! [`BimonoidData`]) hold their structure morphisms explicitly; the checkers
//! rebuild both sides of every axiom from those morphisms and compare entry
//! by entry, so a report either certifies the laws on the nose or exhibits a
//! basis tuple where they fail.

use crate::error::{Error, Result};
use crate::mor::Mor;
use crate::report::{AxiomEntry, AxiomReport};
use crate::scalar::FieldDescriptor;
use crate::word::{Generator, ObjWord};
use serde::{Deserialize, Serialize};

// ---- finite monoids --------------------------------------------------------

/// A finite monoid given by labelled elements and a full multiplication
/// table: `table[i][j]` is the index of `elements[i] · elements[j]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FinMonoid {
    pub elements: Vec<String>,
    pub table: Vec<Vec<usize>>,
    pub unit: usize,
}

impl FinMonoid {
    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.table[i][j]
    }

    /// The cyclic monoid (in fact group) of order `n`, elements `"0"…"n-1"`.
    pub fn cyclic(n: usize) -> FinMonoid {
        assert!(n > 0);
        FinMonoid {
            elements: (0..n).map(|i| i.to_string()).collect(),
            table: (0..n)
                .map(|i| (0..n).map(|j| (i + j) % n).collect())
                .collect(),
            unit: 0,
        }
    }

    /// The one-element monoid.
    pub fn trivial() -> FinMonoid {
        FinMonoid {
            elements: vec!["1".to_string()],
            table: vec![vec![0]],
            unit: 0,
        }
    }

    /// Componentwise product; element `(i, j)` sits at index `i·|other| + j`
    /// and is labelled `"(a,b)"` from the factor labels.
    pub fn direct_product(&self, other: &FinMonoid) -> FinMonoid {
        let n = other.size();
        let mut elements = Vec::with_capacity(self.size() * n);
        for a in &self.elements {
            for b in &other.elements {
                elements.push(format!("({a},{b})"));
            }
        }
        let size = self.size() * n;
        let table = (0..size)
            .map(|x| {
                let (x1, x2) = (x / n, x % n);
                (0..size)
                    .map(|y| {
                        let (y1, y2) = (y / n, y % n);
                        self.mul(x1, y1) * n + other.mul(x2, y2)
                    })
                    .collect()
            })
            .collect();
        FinMonoid {
            elements,
            unit: self.unit * n + other.unit,
            table,
        }
    }

    /// Structural sanity: table is square of the right size, entries in
    /// range, unit in range, labels distinct. Does *not* check the monoid
    /// laws — see [`FinMonoid::validate`].
    pub fn check_shape(&self) -> Result<()> {
        let n = self.size();
        let reason = |r: String| Error::BadFinMonoid { reason: r };
        if n == 0 {
            return Err(reason("no elements".into()));
        }
        if self.table.len() != n || self.table.iter().any(|row| row.len() != n) {
            return Err(reason(format!("table is not {n}×{n}")));
        }
        for (i, row) in self.table.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(reason(format!(
                        "table entry at ({i},{j}) is {v}, out of range"
                    )));
                }
            }
        }
        if self.unit >= n {
            return Err(reason(format!("unit index {} out of range", self.unit)));
        }
        for (i, a) in self.elements.iter().enumerate() {
            if self.elements[..i].contains(a) {
                return Err(reason(format!("duplicate element label {a:?}")));
            }
        }
        Ok(())
    }

    /// Full validation: shape plus associativity and the unit laws.
    pub fn validate(&self) -> Result<()> {
        self.check_shape()?;
        let n = self.size();
        let e = self.unit;
        for i in 0..n {
            if self.mul(e, i) != i || self.mul(i, e) != i {
                return Err(Error::BadFinMonoid {
                    reason: format!(
                        "element {} is not a two-sided unit (fails at {})",
                        self.elements[e], self.elements[i]
                    ),
                });
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return Err(Error::BadFinMonoid {
                            reason: format!(
                                "not associative at ({}, {}, {})",
                                self.elements[a], self.elements[b], self.elements[c]
                            ),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// Is `map` a monoid isomorphism from `self` onto `other`?
    pub fn is_isomorphic_under(&self, other: &FinMonoid, map: &[usize]) -> bool {
        let n = self.size();
        if other.size() != n || map.len() != n {
            return false;
        }
        let mut seen = vec![false; n];
        for &m in map {
            if m >= n || seen[m] {
                return false;
            }
            seen[m] = true;
        }
        if map[self.unit] != other.unit {
            return false;
        }
        for i in 0..n {
            for j in 0..n {
                if map[self.mul(i, j)] != other.mul(map[i], map[j]) {
                    return false;
                }
            }
        }
        true
    }
}

// ---- matrix-level structures ------------------------------------------------

/// A monoid object: carrier word `A`, multiplication `A⊗A → A`, unit `I → A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoidData {
    pub carrier: ObjWord,
    pub mul: Mor,
    pub unit: Mor,
}

/// A comonoid object: carrier `C`, comultiplication `C → C⊗C`, counit `C → I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComonoidData {
    pub carrier: ObjWord,
    pub comul: Mor,
    pub counit: Mor,
}

/// A bimonoid object: compatible monoid and comonoid structures on the same
/// carrier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BimonoidData {
    pub carrier: ObjWord,
    pub mul: Mor,
    pub unit: Mor,
    pub comul: Mor,
    pub counit: Mor,
}

impl BimonoidData {
    pub fn monoid(&self) -> MonoidData {
        MonoidData {
            carrier: self.carrier.clone(),
            mul: self.mul.clone(),
            unit: self.unit.clone(),
        }
    }

    pub fn comonoid(&self) -> ComonoidData {
        ComonoidData {
            carrier: self.carrier.clone(),
            comul: self.comul.clone(),
            counit: self.counit.clone(),
        }
    }
}

/// Reject a stored morphism whose endpoints differ from what its slot demands.
pub(crate) fn expect_shape(what: &str, m: &Mor, dom: &ObjWord, cod: &ObjWord) -> Result<()> {
    if m.dom() != dom || m.cod() != cod {
        return Err(Error::ShapeMismatch {
            context: what.to_string(),
            expected: format!("{dom} → {cod}"),
            actual: format!("{} → {}", m.dom(), m.cod()),
        });
    }
    Ok(())
}

impl MonoidData {
    pub(crate) fn check_shapes(&self) -> Result<()> {
        let a = &self.carrier;
        expect_shape("multiplication", &self.mul, &a.tensor(a), a)?;
        expect_shape("unit", &self.unit, &ObjWord::unit(), a)
    }

    pub fn field(&self) -> FieldDescriptor {
        self.mul.field()
    }
}

impl ComonoidData {
    pub(crate) fn check_shapes(&self) -> Result<()> {
        let c = &self.carrier;
        expect_shape("comultiplication", &self.comul, c, &c.tensor(c))?;
        expect_shape("counit", &self.counit, c, &ObjWord::unit())
    }
}

impl BimonoidData {
    pub(crate) fn check_shapes(&self) -> Result<()> {
        self.monoid().check_shapes()?;
        self.comonoid().check_shapes()
    }
}

// ---- law checkers ------------------------------------------------------------

/// Check associativity and both unit laws.
pub fn check_monoid(m: &MonoidData) -> Result<AxiomReport> {
    m.check_shapes()?;
    let field = m.field();
    let a = &m.carrier;
    let id = Mor::identity(field, a);

    let assoc_l = m.mul.compose(&m.mul.tensor(&id))?;
    let assoc_r = m.mul.compose(&id.tensor(&m.mul))?;
    let unit_l = m.mul.compose(&m.unit.tensor(&id))?;
    let unit_r = m.mul.compose(&id.tensor(&m.unit))?;

    Ok(AxiomReport::new(vec![
        AxiomEntry::compare("assoc", "associativity", &assoc_l, &assoc_r),
        AxiomEntry::compare("unit-left", "left unit", &unit_l, &id),
        AxiomEntry::compare("unit-right", "right unit", &unit_r, &id),
    ]))
}

/// Check coassociativity and both counit laws.
pub fn check_comonoid(c: &ComonoidData) -> Result<AxiomReport> {
    c.check_shapes()?;
    let field = c.comul.field();
    let w = &c.carrier;
    let id = Mor::identity(field, w);

    let coassoc_l = c.comul.tensor(&id).compose(&c.comul)?;
    let coassoc_r = id.tensor(&c.comul).compose(&c.comul)?;
    let counit_l = c.counit.tensor(&id).compose(&c.comul)?;
    let counit_r = id.tensor(&c.counit).compose(&c.comul)?;

    Ok(AxiomReport::new(vec![
        AxiomEntry::compare("coassoc", "coassociativity", &coassoc_l, &coassoc_r),
        AxiomEntry::compare("counit-left", "left counit", &counit_l, &id),
        AxiomEntry::compare("counit-right", "right counit", &counit_r, &id),
    ]))
}

/// Check the monoid laws, the comonoid laws, and the four compatibility laws
/// between them.
pub fn check_bimonoid(b: &BimonoidData) -> Result<AxiomReport> {
    b.check_shapes()?;
    let field = b.mul.field();
    let a = &b.carrier;
    let id = Mor::identity(field, a);

    let mut entries = check_monoid(&b.monoid())?.entries;
    entries.extend(check_comonoid(&b.comonoid())?.entries);

    // δ∘μ = (μ⊗μ)∘(1⊗braid⊗1)∘(δ⊗δ)
    let lhs = b.comul.compose(&b.mul)?;
    let mid = id
        .tensor(&Mor::braid(field, a, a))
        .tensor(&id)
        .compose(&b.comul.tensor(&b.comul))?;
    let rhs = b.mul.tensor(&b.mul).compose(&mid)?;
    entries.push(AxiomEntry::compare(
        "comul-mul",
        "comultiplication respects multiplication",
        &lhs,
        &rhs,
    ));

    let lhs = b.counit.compose(&b.mul)?;
    let rhs = b.counit.tensor(&b.counit);
    entries.push(AxiomEntry::compare(
        "counit-mul",
        "counit respects multiplication",
        &lhs,
        &rhs,
    ));

    let lhs = b.comul.compose(&b.unit)?;
    let rhs = b.unit.tensor(&b.unit);
    entries.push(AxiomEntry::compare(
        "comul-unit",
        "comultiplication respects the unit",
        &lhs,
        &rhs,
    ));

    let lhs = b.counit.compose(&b.unit)?;
    let rhs = Mor::identity(field, &ObjWord::unit());
    entries.push(AxiomEntry::compare(
        "counit-unit",
        "counit respects the unit",
        &lhs,
        &rhs,
    ));

    Ok(AxiomReport::new(entries))
}

// ---- constructions -------------------------------------------------------------

/// The monoid algebra of a finite monoid, with its standard bimonoid
/// structure: multiplication is the linearised table, each basis element is
/// grouplike (`δ(e_x) = e_x ⊗ e_x`) and the counit sends every basis element
/// to 1. The table is fully validated first.
pub fn linearize(fm: &FinMonoid, name: &str, field: FieldDescriptor) -> Result<BimonoidData> {
    fm.validate()?;
    let n = fm.size();
    let carrier = ObjWord::gen(&Generator::new(name, n));
    let pair = carrier.tensor(&carrier);

    let mul = Mor::from_basis_map(field, pair.clone(), carrier.clone(), |col| {
        fm.mul(col / n, col % n)
    });
    let unit = Mor::basis_vector(field, &carrier, fm.unit);
    let comul = Mor::from_basis_map(field, carrier.clone(), pair, |x| x * n + x);
    let counit = Mor::from_fn(field, carrier.clone(), ObjWord::unit(), |_, _| field.one());

    Ok(BimonoidData {
        carrier,
        mul,
        unit,
        comul,
        counit,
    })
}

/// The product monoid structure on `A ⊗ B`: multiply componentwise after
/// letting the inner legs cross, with unit `η_A ⊗ η_B`.
pub fn tensor_monoid(a: &MonoidData, b: &MonoidData) -> Result<MonoidData> {
    a.check_shapes()?;
    b.check_shapes()?;
    if a.field() != b.field() {
        return Err(Error::MixedFields {
            left: a.field().to_string(),
            right: b.field().to_string(),
        });
    }
    let field = a.field();
    let carrier = a.carrier.tensor(&b.carrier);
    let cross = Mor::identity(field, &a.carrier)
        .tensor(&Mor::braid(field, &b.carrier, &a.carrier))
        .tensor(&Mor::identity(field, &b.carrier));
    let mul = a.mul.tensor(&b.mul).compose(&cross)?;
    let unit = a.unit.tensor(&b.unit);
    Ok(MonoidData { carrier, mul, unit })
}

/// Pointwise product of two morphisms into a monoid:
/// `u • v = μ ∘ (u ⊗ v) : X ⊗ Y → M` for `u : X → M`, `v : Y → M`.
pub fn bullet(u: &Mor, v: &Mor, m: &MonoidData) -> Result<Mor> {
    m.check_shapes()?;
    expect_shape("left bullet factor", u, u.dom(), &m.carrier)?;
    expect_shape("right bullet factor", v, v.dom(), &m.carrier)?;
    m.mul.compose(&u.tensor(v))
}

/// Convolution of `u, v : C → M` against a comonoid `C` and monoid `M`:
/// `μ ∘ (u ⊗ v) ∘ δ`.
pub fn classical_convolution(
    u: &Mor,
    v: &Mor,
    c: &ComonoidData,
    m: &MonoidData,
) -> Result<Mor> {
    c.check_shapes()?;
    expect_shape("left convolution factor", u, &c.carrier, &m.carrier)?;
    expect_shape("right convolution factor", v, &c.carrier, &m.carrier)?;
    bullet(u, v, m)?.compose(&c.comul)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    fn q() -> FieldDescriptor {
        FieldDescriptor::Rational
    }

    fn ints(m: &Mor) -> Vec<i64> {
        m.entries()
            .iter()
            .map(|s| match s {
                Scalar::Rational(r) => {
                    assert!(num::One::is_one(r.denom()));
                    let n: i64 = r.numer().try_into().unwrap();
                    n
                }
                Scalar::Residue(v) => *v as i64,
            })
            .collect()
    }

    #[test]
    fn cyclic_and_product_tables_validate() {
        for n in 1..6 {
            FinMonoid::cyclic(n).validate().unwrap();
        }
        FinMonoid::trivial().validate().unwrap();
        let z6 = FinMonoid::cyclic(2).direct_product(&FinMonoid::cyclic(3));
        z6.validate().unwrap();
        assert_eq!(z6.elements[5], "(1,2)");
        // (i, j) ↦ 3i + 4j mod 6 is the usual remainder isomorphism
        assert!(z6.is_isomorphic_under(&FinMonoid::cyclic(6), &[0, 4, 2, 3, 1, 5]));
        assert!(!z6.is_isomorphic_under(&FinMonoid::cyclic(6), &[0, 1, 2, 3, 4, 5]));
    }

    #[test]
    fn bad_tables_are_rejected() {
        let not_assoc = FinMonoid {
            elements: vec!["e".into(), "x".into(), "y".into()],
            table: vec![vec![0, 1, 2], vec![1, 1, 1], vec![2, 2, 0]],
            unit: 0,
        };
        // unit laws hold, but (y·y)·x = x while y·(y·x) = e
        assert!(matches!(
            not_assoc.validate(),
            Err(Error::BadFinMonoid { .. })
        ));

        let bad_unit = FinMonoid {
            elements: vec!["a".into(), "b".into()],
            table: vec![vec![0, 0], vec![0, 0]],
            unit: 1,
        };
        assert!(bad_unit.validate().is_err());

        let ragged = FinMonoid {
            elements: vec!["a".into(), "b".into()],
            table: vec![vec![0, 1]],
            unit: 0,
        };
        assert!(ragged.check_shape().is_err());
    }

    #[test]
    fn linearized_cyclic_two_has_expected_table_matrix() {
        let b = linearize(&FinMonoid::cyclic(2), "a", q()).unwrap();
        // columns (basis pairs 00,01,10,11) land on e_0, e_1, e_1, e_0
        assert_eq!(ints(&b.mul), vec![1, 0, 0, 1, 0, 1, 1, 0]);
        assert_eq!(ints(&b.unit), vec![1, 0]);
        assert_eq!(ints(&b.comul), vec![1, 0, 0, 0, 0, 0, 0, 1]);
        assert_eq!(ints(&b.counit), vec![1, 1]);
    }

    #[test]
    fn monoid_algebra_is_a_bimonoid() {
        for field in [q(), FieldDescriptor::prime(3).unwrap()] {
            let b = linearize(&FinMonoid::cyclic(3), "a", field).unwrap();
            let report = check_bimonoid(&b).unwrap();
            assert!(report.passed(), "{report}");
            assert_eq!(report.entries.len(), 10);
        }
    }

    #[test]
    fn broken_unit_yields_witness() {
        // "multiply" by collapsing everything onto e_0: associativity holds,
        // both unit laws fail, and the first failure sits at basis (0, 1).
        let b = linearize(&FinMonoid::cyclic(2), "a", q()).unwrap();
        let m = MonoidData {
            carrier: b.carrier.clone(),
            mul: Mor::from_basis_map(q(), b.carrier.tensor(&b.carrier), b.carrier.clone(), |_| 0),
            unit: b.unit.clone(),
        };
        let report = check_monoid(&m).unwrap();
        assert!(!report.passed());
        assert_eq!(report.failing_ids(), vec!["unit-left", "unit-right"]);
        let entry = report.entry("unit-left").unwrap();
        let w = entry.witness.as_ref().unwrap();
        assert_eq!(w.at, vec![0, 1]);
        assert_eq!((w.lhs.as_str(), w.rhs.as_str()), ("1", "0"));
    }

    #[test]
    fn shape_mismatch_is_an_error_not_a_failing_report() {
        let b = linearize(&FinMonoid::cyclic(2), "a", q()).unwrap();
        let m = MonoidData {
            carrier: b.carrier.clone(),
            mul: b.mul.clone(),
            unit: Mor::identity(q(), &b.carrier), // wrong endpoints
        };
        assert!(matches!(
            check_monoid(&m),
            Err(Error::ShapeMismatch { .. })
        ));
    }

    #[test]
    fn tensor_monoid_of_algebras_satisfies_laws() {
        let a = linearize(&FinMonoid::cyclic(2), "a", q()).unwrap().monoid();
        let b = linearize(&FinMonoid::cyclic(3), "b", q()).unwrap().monoid();
        let t = tensor_monoid(&a, &b).unwrap();
        assert!(check_monoid(&t).unwrap().passed());
        // and it is exactly the algebra of the product monoid
        let prod = FinMonoid::cyclic(2).direct_product(&FinMonoid::cyclic(3));
        let lp = linearize(&prod, "p", q()).unwrap();
        assert_eq!(t.mul.entries(), lp.mul.entries());
        assert_eq!(t.unit.entries(), lp.unit.entries());
    }

    #[test]
    fn convolution_of_diagonals_on_a_group_algebra_collapses() {
        // On k[Z/2] with grouplike δ, conv(u, v)(e_g) = u_g v_g e_{g·g} and
        // g·g = e, so the product of two diagonal maps is *not* diagonal.
        let b = linearize(&FinMonoid::cyclic(2), "a", q()).unwrap();
        let diag = |d0: i64, d1: i64| {
            Mor::from_rows(
                q(),
                b.carrier.clone(),
                b.carrier.clone(),
                vec![
                    vec![q().from_i64(d0), q().zero()],
                    vec![q().zero(), q().from_i64(d1)],
                ],
            )
            .unwrap()
        };
        let u = diag(2, 3);
        let v = diag(5, 7);
        let conv = classical_convolution(&u, &v, &b.comonoid(), &b.monoid()).unwrap();
        assert_eq!(ints(&conv), vec![10, 21, 0, 0]);
    }

    #[test]
    fn convolution_of_diagonals_on_an_idempotent_monoid_multiplies_diagonals() {
        // Meet monoid on {t, f}: every element is idempotent, so the same
        // computation stays diagonal with entrywise products.
        let meet = FinMonoid {
            elements: vec!["t".into(), "f".into()],
            table: vec![vec![0, 1], vec![1, 1]],
            unit: 0,
        };
        let b = linearize(&meet, "m", q()).unwrap();
        let diag = |d0: i64, d1: i64| {
            Mor::from_rows(
                q(),
                b.carrier.clone(),
                b.carrier.clone(),
                vec![
                    vec![q().from_i64(d0), q().zero()],
                    vec![q().zero(), q().from_i64(d1)],
                ],
            )
            .unwrap()
        };
        let conv =
            classical_convolution(&diag(2, 3), &diag(5, 7), &b.comonoid(), &b.monoid()).unwrap();
        assert_eq!(ints(&conv), vec![10, 0, 0, 21]);
    }
}
