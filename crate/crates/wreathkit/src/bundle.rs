//! JSON bundles: a self-contained document format for objects, morphisms,
//! finite monoids and named algebraic structures over a single field.
//!
//! A bundle document has five top-level keys — `field`, `objects`,
//! `morphisms`, `finmonoids`, `structures` — all but `field` optional. All
//! maps are ordered (`BTreeMap`), and [`Bundle::to_canonical_json`] pretty
//! prints with a trailing newline, so canonical bundles round trip byte for
//! byte. Scalars are written as canonical strings over ℚ (`"-3/4"`, integers
//! without a denominator) and as reduced integers modulo a prime; the parser
//! additionally accepts plain JSON integers over ℚ.
//!
//! Structure documents refer to morphisms, finite monoids and other
//! structures *by name*; [`Bundle::from_json`] resolves and shape-checks
//! everything eagerly, so a successfully parsed bundle hands out
//! ready-to-check data.

use crate::coaction::{CoactionData, MonoidalCoactionData};
use crate::error::{Error, Result};
use crate::extension::{ExtensionData, FibrationData};
use crate::mixed::MixedOpwreathData;
use crate::mor::Mor;
use crate::scalar::FieldDescriptor;
use crate::structures::{BimonoidData, ComonoidData, FinMonoid, MonoidData};
use crate::word::{Generator, ObjWord};
use crate::wreath::WreathData;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// A morphism document: domain and codomain as lists of object names, and
/// a dense row-major entry matrix (`entries[r][c]`, one row per codomain
/// basis vector).
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorDoc {
    pub dom: Vec<String>,
    pub cod: Vec<String>,
    pub entries: Vec<Vec<serde_json::Value>>,
}

/// A named structure inside a bundle. Every field refers to a morphism,
/// finite monoid or structure declared elsewhere in the same document.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case", deny_unknown_fields)]
pub enum StructureDoc {
    Monoid {
        carrier: Vec<String>,
        mul: String,
        unit: String,
    },
    Comonoid {
        carrier: Vec<String>,
        comul: String,
        counit: String,
    },
    Bimonoid {
        carrier: Vec<String>,
        mul: String,
        unit: String,
        comul: String,
        counit: String,
    },
    Wreath {
        monoid: String,
        s: Vec<String>,
        nu: String,
        sigma0: String,
        lambda: String,
    },
    Opwreath {
        monoid: String,
        c: Vec<String>,
        d: String,
        w: String,
        z: String,
    },
    Coaction {
        a: String,
        b: String,
        gamma: String,
        tau: String,
    },
    MonoidalCoaction {
        base: String,
        dd: String,
    },
    Fibration {
        e: String,
        m: String,
        p: Vec<usize>,
        j: Vec<usize>,
    },
    Extension {
        m: String,
        a: String,
        alpha: Vec<Vec<usize>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        rho: Option<Vec<Vec<usize>>>,
    },
}

/// The raw serialized form of a bundle.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BundleDoc {
    pub field: FieldDescriptor,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub objects: BTreeMap<String, usize>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub morphisms: BTreeMap<String, MorDoc>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub finmonoids: BTreeMap<String, FinMonoid>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub structures: BTreeMap<String, StructureDoc>,
}

/// The pieces of a declared extension: base, fiber, action table, and the
/// factor set when the document provides one.
type ExtensionParts = (FinMonoid, FinMonoid, Vec<Vec<usize>>, Option<Vec<Vec<usize>>>);

/// A parsed bundle: the document plus resolved morphisms.
#[derive(Clone, Debug)]
pub struct Bundle {
    doc: BundleDoc,
    morphisms: BTreeMap<String, Mor>,
}

fn scalar_to_value(s: &crate::scalar::Scalar) -> serde_json::Value {
    match s {
        crate::scalar::Scalar::Rational(_) => serde_json::Value::String(s.to_string()),
        crate::scalar::Scalar::Residue(n) => serde_json::Value::from(*n),
    }
}

impl Bundle {
    /// Parse and eagerly resolve a bundle from JSON text.
    pub fn from_json(text: &str) -> Result<Bundle> {
        Bundle::from_doc(serde_json::from_str(text)?)
    }

    /// Resolve an already-deserialized document.
    pub fn from_doc(doc: BundleDoc) -> Result<Bundle> {
        doc.field.validate()?;
        let mut morphisms = BTreeMap::new();
        for (name, md) in &doc.morphisms {
            let dom = resolve_word(&doc, &md.dom)
                .map_err(|e| Error::Bundle(format!("morphism '{name}': {e}")))?;
            let cod = resolve_word(&doc, &md.cod)
                .map_err(|e| Error::Bundle(format!("morphism '{name}': {e}")))?;
            if md.entries.len() != cod.dim() {
                return Err(Error::Bundle(format!(
                    "morphism '{name}': expected {} rows, found {}",
                    cod.dim(),
                    md.entries.len()
                )));
            }
            let mut rows = Vec::with_capacity(cod.dim());
            for (r, row) in md.entries.iter().enumerate() {
                if row.len() != dom.dim() {
                    return Err(Error::Bundle(format!(
                        "morphism '{name}': row {r} has {} columns, expected {}",
                        row.len(),
                        dom.dim()
                    )));
                }
                let mut out = Vec::with_capacity(dom.dim());
                for value in row {
                    out.push(parse_scalar_value(doc.field, value).map_err(|e| {
                        Error::Bundle(format!("morphism '{name}', row {r}: {e}"))
                    })?);
                }
                rows.push(out);
            }
            morphisms.insert(name.clone(), Mor::from_rows(doc.field, dom, cod, rows)?);
        }
        for fm in doc.finmonoids.values() {
            fm.check_shape()?;
        }
        let bundle = Bundle { doc, morphisms };
        // resolve every structure once so malformed references surface at parse time
        for name in bundle.doc.structures.keys() {
            bundle.resolve_structure(name)?;
        }
        Ok(bundle)
    }

    /// Read a bundle from a file.
    pub fn from_path(path: &std::path::Path) -> Result<Bundle> {
        Bundle::from_json(&std::fs::read_to_string(path)?)
    }

    /// Serialize back to canonical JSON: pretty printed, ordered maps,
    /// trailing newline. Parsing canonical output returns it unchanged.
    pub fn to_canonical_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(&self.doc).expect("bundle serialization");
        text.push('\n');
        text
    }

    pub fn field(&self) -> FieldDescriptor {
        self.doc.field
    }

    pub fn doc(&self) -> &BundleDoc {
        &self.doc
    }

    /// All object generators declared by the bundle, in name order.
    pub fn generators(&self) -> Vec<Generator> {
        self.doc
            .objects
            .iter()
            .map(|(name, dim)| Generator::new(name, *dim))
            .collect()
    }

    pub fn word(&self, names: &[String]) -> Result<ObjWord> {
        resolve_word(&self.doc, names)
    }

    pub fn morphism(&self, name: &str) -> Result<&Mor> {
        self.morphisms.get(name).ok_or_else(|| Error::UnknownName {
            kind: "morphism",
            name: name.to_string(),
        })
    }

    pub fn finmonoid(&self, name: &str) -> Result<&FinMonoid> {
        self.doc
            .finmonoids
            .get(name)
            .ok_or_else(|| Error::UnknownName {
                kind: "finite monoid",
                name: name.to_string(),
            })
    }

    fn structure(&self, name: &str) -> Result<&StructureDoc> {
        self.doc
            .structures
            .get(name)
            .ok_or_else(|| Error::UnknownName {
                kind: "structure",
                name: name.to_string(),
            })
    }

    fn resolve_structure(&self, name: &str) -> Result<()> {
        match self.structure(name)? {
            StructureDoc::Monoid { .. } => self.monoid(name).map(drop),
            StructureDoc::Comonoid { .. } => self.comonoid(name).map(drop),
            StructureDoc::Bimonoid { .. } => self.bimonoid(name).map(drop),
            StructureDoc::Wreath { .. } => self.wreath(name).map(drop),
            StructureDoc::Opwreath { .. } => self.opwreath(name).map(drop),
            StructureDoc::Coaction { .. } => self.coaction(name).map(drop),
            StructureDoc::MonoidalCoaction { .. } => self.monoidal_coaction(name).map(drop),
            StructureDoc::Fibration { .. } => self.fibration(name).map(drop),
            // rho is optional at parse time: enumeration only needs (m, a, alpha)
            StructureDoc::Extension { .. } => self.extension_parts(name).map(drop),
        }
    }

    fn wrong_type(&self, name: &str, expected: &'static str) -> Error {
        let actual = match self.doc.structures.get(name) {
            Some(StructureDoc::Monoid { .. }) => "monoid",
            Some(StructureDoc::Comonoid { .. }) => "comonoid",
            Some(StructureDoc::Bimonoid { .. }) => "bimonoid",
            Some(StructureDoc::Wreath { .. }) => "wreath",
            Some(StructureDoc::Opwreath { .. }) => "opwreath",
            Some(StructureDoc::Coaction { .. }) => "coaction",
            Some(StructureDoc::MonoidalCoaction { .. }) => "monoidal-coaction",
            Some(StructureDoc::Fibration { .. }) => "fibration",
            Some(StructureDoc::Extension { .. }) => "extension",
            None => "missing",
        };
        Error::WrongStructureType {
            name: name.to_string(),
            expected,
            actual: actual.to_string(),
        }
    }

    pub fn monoid(&self, name: &str) -> Result<MonoidData> {
        match self.structure(name)? {
            StructureDoc::Monoid { carrier, mul, unit } => {
                let data = MonoidData {
                    carrier: self.word(carrier)?,
                    mul: self.morphism(mul)?.clone(),
                    unit: self.morphism(unit)?.clone(),
                };
                data.check_shapes()?;
                Ok(data)
            }
            StructureDoc::Bimonoid { .. } => Ok(self.bimonoid(name)?.monoid()),
            _ => Err(self.wrong_type(name, "monoid")),
        }
    }

    pub fn comonoid(&self, name: &str) -> Result<ComonoidData> {
        match self.structure(name)? {
            StructureDoc::Comonoid {
                carrier,
                comul,
                counit,
            } => {
                let data = ComonoidData {
                    carrier: self.word(carrier)?,
                    comul: self.morphism(comul)?.clone(),
                    counit: self.morphism(counit)?.clone(),
                };
                data.check_shapes()?;
                Ok(data)
            }
            StructureDoc::Bimonoid { .. } => Ok(self.bimonoid(name)?.comonoid()),
            _ => Err(self.wrong_type(name, "comonoid")),
        }
    }

    pub fn bimonoid(&self, name: &str) -> Result<BimonoidData> {
        match self.structure(name)? {
            StructureDoc::Bimonoid {
                carrier,
                mul,
                unit,
                comul,
                counit,
            } => {
                let data = BimonoidData {
                    carrier: self.word(carrier)?,
                    mul: self.morphism(mul)?.clone(),
                    unit: self.morphism(unit)?.clone(),
                    comul: self.morphism(comul)?.clone(),
                    counit: self.morphism(counit)?.clone(),
                };
                data.check_shapes()?;
                Ok(data)
            }
            _ => Err(self.wrong_type(name, "bimonoid")),
        }
    }

    pub fn wreath(&self, name: &str) -> Result<WreathData> {
        match self.structure(name)? {
            StructureDoc::Wreath {
                monoid,
                s,
                nu,
                sigma0,
                lambda,
            } => {
                let data = WreathData {
                    monoid: self.monoid(monoid)?,
                    s: self.word(s)?,
                    nu: self.morphism(nu)?.clone(),
                    sigma0: self.morphism(sigma0)?.clone(),
                    lambda: self.morphism(lambda)?.clone(),
                };
                data.check_shapes()?;
                Ok(data)
            }
            _ => Err(self.wrong_type(name, "wreath")),
        }
    }

    pub fn opwreath(&self, name: &str) -> Result<MixedOpwreathData> {
        match self.structure(name)? {
            StructureDoc::Opwreath { monoid, c, d, w, z } => {
                let data = MixedOpwreathData {
                    monoid: self.monoid(monoid)?,
                    c: self.word(c)?,
                    d: self.morphism(d)?.clone(),
                    w: self.morphism(w)?.clone(),
                    z: self.morphism(z)?.clone(),
                };
                data.check_shapes()?;
                Ok(data)
            }
            _ => Err(self.wrong_type(name, "opwreath")),
        }
    }

    pub fn coaction(&self, name: &str) -> Result<CoactionData> {
        match self.structure(name)? {
            StructureDoc::Coaction { a, b, gamma, tau } => {
                let data = CoactionData {
                    a: self.monoid(a)?,
                    b: self.bimonoid(b)?,
                    gamma: self.morphism(gamma)?.clone(),
                    tau: self.morphism(tau)?.clone(),
                };
                data.check_shapes()?;
                Ok(data)
            }
            _ => Err(self.wrong_type(name, "coaction")),
        }
    }

    pub fn monoidal_coaction(&self, name: &str) -> Result<MonoidalCoactionData> {
        match self.structure(name)? {
            StructureDoc::MonoidalCoaction { base, dd } => {
                let data = MonoidalCoactionData {
                    base: self.coaction(base)?,
                    dd: self.morphism(dd)?.clone(),
                };
                data.check_shapes()?;
                Ok(data)
            }
            _ => Err(self.wrong_type(name, "monoidal-coaction")),
        }
    }

    pub fn fibration(&self, name: &str) -> Result<FibrationData> {
        match self.structure(name)? {
            StructureDoc::Fibration { e, m, p, j } => Ok(FibrationData {
                e: self.finmonoid(e)?.clone(),
                m: self.finmonoid(m)?.clone(),
                p: p.clone(),
                j: j.clone(),
            }),
            _ => Err(self.wrong_type(name, "fibration")),
        }
    }

    fn extension_parts(&self, name: &str) -> Result<ExtensionParts> {
        match self.structure(name)? {
            StructureDoc::Extension { m, a, alpha, rho } => Ok((
                self.finmonoid(m)?.clone(),
                self.finmonoid(a)?.clone(),
                alpha.clone(),
                rho.clone(),
            )),
            _ => Err(self.wrong_type(name, "extension")),
        }
    }

    /// Resolve an extension with its factor set; errors if `rho` is absent.
    pub fn extension(&self, name: &str) -> Result<ExtensionData> {
        let (m, a, alpha, rho) = self.extension_parts(name)?;
        let rho = rho.ok_or_else(|| {
            Error::Bundle(format!("extension '{name}' declares no factor set 'rho'"))
        })?;
        let data = ExtensionData { m, a, alpha, rho };
        data.check_shape()?;
        Ok(data)
    }

    /// Resolve the action-only part of an extension (for enumeration).
    pub fn extension_action(&self, name: &str) -> Result<(FinMonoid, FinMonoid, Vec<Vec<usize>>)> {
        let (m, a, alpha, _) = self.extension_parts(name)?;
        Ok((m, a, alpha))
    }
}

fn resolve_word(doc: &BundleDoc, names: &[String]) -> Result<ObjWord> {
    let mut factors = Vec::with_capacity(names.len());
    for name in names {
        let dim = doc.objects.get(name).ok_or_else(|| Error::UnknownName {
            kind: "object",
            name: name.clone(),
        })?;
        factors.push(Generator::new(name, *dim));
    }
    Ok(ObjWord::from_factors(factors))
}

fn parse_scalar_value(
    field: FieldDescriptor,
    value: &serde_json::Value,
) -> Result<crate::scalar::Scalar> {
    match value {
        serde_json::Value::String(s) => field.parse_scalar(s),
        serde_json::Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(field.from_i64(i))
            } else {
                Err(Error::BadScalar {
                    text: n.to_string(),
                })
            }
        }
        other => Err(Error::BadScalar {
            text: other.to_string(),
        }),
    }
}

/// Build a `MorDoc` from a morphism, for writing bundles programmatically.
pub fn mor_doc(m: &Mor) -> MorDoc {
    let dom: Vec<String> = m.dom().factors().iter().map(|g| g.name.clone()).collect();
    let cod: Vec<String> = m.cod().factors().iter().map(|g| g.name.clone()).collect();
    let entries = (0..m.rows())
        .map(|r| (0..m.cols()).map(|c| scalar_to_value(m.entry(r, c))).collect())
        .collect();
    MorDoc { dom, cod, entries }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::check_monoid;

    fn sample_text() -> String {
        r#"{
  "field": { "kind": "rational" },
  "objects": { "a": 2 },
  "morphisms": {
    "eta": { "dom": [], "cod": ["a"], "entries": [[1], [0]] },
    "mul": {
      "dom": ["a", "a"],
      "cod": ["a"],
      "entries": [["1", 0, 0, "1"], [0, "1", "1", 0]]
    }
  },
  "structures": {
    "m1": { "type": "monoid", "carrier": ["a"], "mul": "mul", "unit": "eta" }
  }
}"#
        .to_string()
    }

    #[test]
    fn parse_resolve_and_check() {
        let bundle = Bundle::from_json(&sample_text()).unwrap();
        let m = bundle.monoid("m1").unwrap();
        assert!(check_monoid(&m).unwrap().passed());
        assert_eq!(bundle.generators().len(), 1);
    }

    #[test]
    fn canonical_round_trip_is_byte_exact() {
        let bundle = Bundle::from_json(&sample_text()).unwrap();
        let canon = bundle.to_canonical_json();
        let again = Bundle::from_json(&canon).unwrap();
        assert_eq!(canon, again.to_canonical_json());
        // integers serialize without denominators, as strings, over ℚ
        assert!(canon.contains("\"1\""));
    }

    #[test]
    fn unknown_references_and_bad_shapes_fail_eagerly() {
        let text = sample_text().replace("\"mul\": \"mul\"", "\"mul\": \"nope\"");
        assert!(matches!(
            Bundle::from_json(&text),
            Err(Error::UnknownName { kind: "morphism", .. })
        ));

        let text = sample_text().replace(
            "\"entries\": [[1], [0]]",
            "\"entries\": [[1, 0], [0, 1]]"
        );
        assert!(matches!(Bundle::from_json(&text), Err(Error::Bundle(_))));

        let text = sample_text().replace("\"carrier\": [\"a\"]", "\"carrier\": [\"b\"]");
        assert!(matches!(
            Bundle::from_json(&text),
            Err(Error::UnknownName { kind: "object", .. })
        ));
    }

    #[test]
    fn type_mismatches_are_reported_by_name() {
        let bundle = Bundle::from_json(&sample_text()).unwrap();
        let err = bundle.bimonoid("m1").unwrap_err();
        assert!(matches!(
            err,
            Error::WrongStructureType { expected: "bimonoid", .. }
        ));
        let err = bundle.monoid("zzz").unwrap_err();
        assert!(matches!(err, Error::UnknownName { kind: "structure", .. }));
    }

    #[test]
    fn malformed_json_is_a_json_error() {
        assert!(matches!(Bundle::from_json("{"), Err(Error::Json(_))));
    }
}
