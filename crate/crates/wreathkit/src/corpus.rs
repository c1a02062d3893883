//! A small corpus of example bundles, generated programmatically so the
//! committed JSON in `corpus/` can be regenerated (and diffed) at any time
//! with `cargo run --example gen_corpus`.

use crate::bundle::{mor_doc, Bundle, BundleDoc, StructureDoc};
use crate::coaction::{generated_opwreath_unchecked, CoactionData};
use crate::error::Result;
use crate::extension::{extension_to_wreath, FibrationData};
use crate::mixed::heisenberg_data;
use crate::mor::Mor;
use crate::scalar::FieldDescriptor;
use crate::structures::{linearize, FinMonoid, MonoidData};
use crate::word::ObjWord;
use std::collections::BTreeMap;
use std::path::Path;

/// A deliberately truncated document, for exercising parse failures.
pub const MALFORMED: &str = "{ \"field\": { \"kind\": \"rational\" },\n";

/// A well-formed document whose only morphism has too many columns.
pub const BADSHAPE: &str = r#"{
  "field": { "kind": "rational" },
  "objects": { "a": 2 },
  "morphisms": {
    "bad": { "dom": ["a"], "cod": ["a"], "entries": [[1, 0, 0], [0, 1, 0]] }
  }
}
"#;

fn names(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

/// The cyclic group of order four fibered over ℤ/2, with its classifying
/// data, two action-only extension problems, and the induced wreath (plus
/// a broken copy whose crossing is zeroed out).
pub fn z4_extension() -> BundleDoc {
    let field = FieldDescriptor::Rational;
    let z4 = FinMonoid::cyclic(4);
    let z2 = FinMonoid::cyclic(2);
    let z3 = FinMonoid::cyclic(3);
    let fib = FibrationData {
        e: z4.clone(),
        m: z2.clone(),
        p: vec![0, 1, 0, 1],
        j: vec![0, 1],
    };
    let ext = fib.analyze().expect("the z4 fibration classifies");
    let wreath = extension_to_wreath(&ext, field).expect("the z4 extension induces a wreath");

    let mut objects = BTreeMap::new();
    objects.insert("s".to_string(), 2);
    objects.insert("a".to_string(), 2);

    let mut morphisms = BTreeMap::new();
    morphisms.insert("a-mul".to_string(), mor_doc(&wreath.monoid.mul));
    morphisms.insert("a-unit".to_string(), mor_doc(&wreath.monoid.unit));
    morphisms.insert("w1-nu".to_string(), mor_doc(&wreath.nu));
    morphisms.insert("w1-sigma0".to_string(), mor_doc(&wreath.sigma0));
    morphisms.insert("w1-lambda".to_string(), mor_doc(&wreath.lambda));
    morphisms.insert(
        "w1-lambda-zero".to_string(),
        mor_doc(&Mor::zero(
            field,
            wreath.lambda.dom().clone(),
            wreath.lambda.cod().clone(),
        )),
    );

    let mut finmonoids = BTreeMap::new();
    finmonoids.insert("z4".to_string(), z4);
    finmonoids.insert("z2".to_string(), z2);
    finmonoids.insert("z3".to_string(), z3);
    finmonoids.insert("fiber-z4".to_string(), ext.a.clone());

    let mut structures = BTreeMap::new();
    structures.insert(
        "amon".to_string(),
        StructureDoc::Monoid {
            carrier: names(&["a"]),
            mul: "a-mul".to_string(),
            unit: "a-unit".to_string(),
        },
    );
    structures.insert(
        "fib-z4".to_string(),
        StructureDoc::Fibration {
            e: "z4".to_string(),
            m: "z2".to_string(),
            p: fib.p.clone(),
            j: fib.j.clone(),
        },
    );
    structures.insert(
        "ext-z4".to_string(),
        StructureDoc::Extension {
            m: "z2".to_string(),
            a: "fiber-z4".to_string(),
            alpha: ext.alpha.clone(),
            rho: Some(ext.rho.clone()),
        },
    );
    structures.insert(
        "ext-z2z2".to_string(),
        StructureDoc::Extension {
            m: "z2".to_string(),
            a: "z2".to_string(),
            alpha: vec![vec![0, 0], vec![1, 1]],
            rho: None,
        },
    );
    structures.insert(
        "ext-z2z3-inv".to_string(),
        StructureDoc::Extension {
            m: "z2".to_string(),
            a: "z3".to_string(),
            alpha: vec![vec![0, 0], vec![1, 2], vec![2, 1]],
            rho: None,
        },
    );
    let wreath_doc = |lambda: &str| StructureDoc::Wreath {
        monoid: "amon".to_string(),
        s: names(&["s"]),
        nu: "w1-nu".to_string(),
        sigma0: "w1-sigma0".to_string(),
        lambda: lambda.to_string(),
    };
    structures.insert("w1".to_string(), wreath_doc("w1-lambda"));
    structures.insert("w1-broken".to_string(), wreath_doc("w1-lambda-zero"));

    BundleDoc {
        field,
        objects,
        morphisms,
        finmonoids,
        structures,
    }
}

fn heisenberg_doc(field: FieldDescriptor, n: usize) -> BundleDoc {
    let b = linearize(&FinMonoid::cyclic(n), "b", field).expect("cyclic tables linearize");
    let hw = heisenberg_data(&b).expect("group algebras carry the twisted crossing");
    let word = &b.carrier;

    let mut objects = BTreeMap::new();
    objects.insert("b".to_string(), n);

    let mut morphisms = BTreeMap::new();
    morphisms.insert("b-mul".to_string(), mor_doc(&b.mul));
    morphisms.insert("b-unit".to_string(), mor_doc(&b.unit));
    morphisms.insert("b-comul".to_string(), mor_doc(&b.comul));
    morphisms.insert("b-counit".to_string(), mor_doc(&b.counit));
    morphisms.insert("hw-d".to_string(), mor_doc(&hw.d));
    morphisms.insert("hw-w".to_string(), mor_doc(&hw.w));
    morphisms.insert("hw-z".to_string(), mor_doc(&hw.z));
    morphisms.insert(
        "id".to_string(),
        mor_doc(&Mor::identity(field, word)),
    );
    morphisms.insert(
        "f1".to_string(),
        mor_doc(&Mor::from_fn(field, word.clone(), word.clone(), |r, c| {
            field.from_i64(((r + 2 * c + 1) % 3) as i64)
        })),
    );
    morphisms.insert(
        "g1".to_string(),
        mor_doc(&Mor::from_fn(field, word.clone(), word.clone(), |r, c| {
            field.from_i64(((2 * r + c) % 3) as i64)
        })),
    );

    let mut structures = BTreeMap::new();
    structures.insert(
        "kb".to_string(),
        StructureDoc::Bimonoid {
            carrier: names(&["b"]),
            mul: "b-mul".to_string(),
            unit: "b-unit".to_string(),
            comul: "b-comul".to_string(),
            counit: "b-counit".to_string(),
        },
    );
    structures.insert(
        "hw".to_string(),
        StructureDoc::Opwreath {
            monoid: "kb".to_string(),
            c: names(&["b"]),
            d: "hw-d".to_string(),
            w: "hw-w".to_string(),
            z: "hw-z".to_string(),
        },
    );

    BundleDoc {
        field,
        objects,
        morphisms,
        finmonoids: BTreeMap::new(),
        structures,
    }
}

/// The group algebra of ℤ/2 over ℚ acting on itself through the twisted
/// crossing, with a few sample endomorphisms for convolution demos.
pub fn heisenberg_z2() -> BundleDoc {
    heisenberg_doc(FieldDescriptor::Rational, 2)
}

/// The same construction for ℤ/3 over F₃.
pub fn heisenberg_z3() -> BundleDoc {
    heisenberg_doc(
        FieldDescriptor::prime(3).expect("3 is prime"),
        3,
    )
}

/// Two coactions of k[ℤ/2] on itself over F₅ — the trivial one and the
/// grading one — together with the opwreaths they generate.
pub fn coactions() -> BundleDoc {
    let field = FieldDescriptor::prime(5).expect("5 is prime");
    let a_bim = linearize(&FinMonoid::cyclic(2), "a", field).expect("cyclic tables linearize");
    let b = linearize(&FinMonoid::cyclic(2), "b", field).expect("cyclic tables linearize");
    let a = a_bim.monoid();
    let gamma_triv = Mor::identity(field, &a.carrier).tensor(&b.unit);
    let gamma_grade = Mor::from_basis_map(
        field,
        a.carrier.clone(),
        a.carrier.tensor(&b.carrier),
        |g| g * 2 + g,
    );
    let tau_triv = a.unit.tensor(&b.unit).tensor(&b.unit);
    let coact = |gamma: &Mor| CoactionData {
        a: a.clone(),
        b: b.clone(),
        gamma: gamma.clone(),
        tau: tau_triv.clone(),
    };
    let ow_triv = generated_opwreath_unchecked(&coact(&gamma_triv)).expect("shapes fit");
    let ow_grade = generated_opwreath_unchecked(&coact(&gamma_grade)).expect("shapes fit");

    let mut objects = BTreeMap::new();
    objects.insert("a".to_string(), 2);
    objects.insert("b".to_string(), 2);

    let mut morphisms = BTreeMap::new();
    morphisms.insert("a-mul".to_string(), mor_doc(&a.mul));
    morphisms.insert("a-unit".to_string(), mor_doc(&a.unit));
    morphisms.insert("b-mul".to_string(), mor_doc(&b.mul));
    morphisms.insert("b-unit".to_string(), mor_doc(&b.unit));
    morphisms.insert("b-comul".to_string(), mor_doc(&b.comul));
    morphisms.insert("b-counit".to_string(), mor_doc(&b.counit));
    morphisms.insert("gamma-triv".to_string(), mor_doc(&gamma_triv));
    morphisms.insert("gamma-grade".to_string(), mor_doc(&gamma_grade));
    morphisms.insert("tau-triv".to_string(), mor_doc(&tau_triv));
    for (prefix, ow) in [("ow-triv", &ow_triv), ("ow-grade", &ow_grade)] {
        morphisms.insert(format!("{prefix}-d"), mor_doc(&ow.d));
        morphisms.insert(format!("{prefix}-w"), mor_doc(&ow.w));
        morphisms.insert(format!("{prefix}-z"), mor_doc(&ow.z));
    }

    let mut structures = BTreeMap::new();
    structures.insert(
        "amon".to_string(),
        StructureDoc::Monoid {
            carrier: names(&["a"]),
            mul: "a-mul".to_string(),
            unit: "a-unit".to_string(),
        },
    );
    structures.insert(
        "bbim".to_string(),
        StructureDoc::Bimonoid {
            carrier: names(&["b"]),
            mul: "b-mul".to_string(),
            unit: "b-unit".to_string(),
            comul: "b-comul".to_string(),
            counit: "b-counit".to_string(),
        },
    );
    for (name, gamma) in [("coact-trivial", "gamma-triv"), ("coact-graded", "gamma-grade")] {
        structures.insert(
            name.to_string(),
            StructureDoc::Coaction {
                a: "amon".to_string(),
                b: "bbim".to_string(),
                gamma: gamma.to_string(),
                tau: "tau-triv".to_string(),
            },
        );
    }
    for prefix in ["ow-triv", "ow-grade"] {
        let name = if prefix == "ow-triv" { "ow-trivial" } else { "ow-graded" };
        structures.insert(
            name.to_string(),
            StructureDoc::Opwreath {
                monoid: "amon".to_string(),
                c: names(&["b"]),
                d: format!("{prefix}-d"),
                w: format!("{prefix}-w"),
                z: format!("{prefix}-z"),
            },
        );
    }

    BundleDoc {
        field,
        objects,
        morphisms,
        finmonoids: BTreeMap::new(),
        structures,
    }
}

/// A monoidal twisted coaction with trivial coacted monoid (`A = I`),
/// `B = k[ℤ/2]`, and `dd` the comultiplication.
pub fn monoidal_trivial_b() -> BundleDoc {
    let field = FieldDescriptor::Rational;
    let b = linearize(&FinMonoid::cyclic(2), "b", field).expect("cyclic tables linearize");
    let unit_monoid = MonoidData {
        carrier: ObjWord::unit(),
        mul: Mor::identity(field, &ObjWord::unit()),
        unit: Mor::identity(field, &ObjWord::unit()),
    };

    let mut objects = BTreeMap::new();
    objects.insert("b".to_string(), 2);

    let mut morphisms = BTreeMap::new();
    morphisms.insert("i-id".to_string(), mor_doc(&unit_monoid.mul));
    morphisms.insert("b-mul".to_string(), mor_doc(&b.mul));
    morphisms.insert("b-unit".to_string(), mor_doc(&b.unit));
    morphisms.insert("b-comul".to_string(), mor_doc(&b.comul));
    morphisms.insert("b-counit".to_string(), mor_doc(&b.counit));
    morphisms.insert(
        "tau0".to_string(),
        mor_doc(&b.unit.tensor(&b.unit)),
    );

    let mut structures = BTreeMap::new();
    structures.insert(
        "unitmon".to_string(),
        StructureDoc::Monoid {
            carrier: vec![],
            mul: "i-id".to_string(),
            unit: "i-id".to_string(),
        },
    );
    structures.insert(
        "kz2".to_string(),
        StructureDoc::Bimonoid {
            carrier: names(&["b"]),
            mul: "b-mul".to_string(),
            unit: "b-unit".to_string(),
            comul: "b-comul".to_string(),
            counit: "b-counit".to_string(),
        },
    );
    structures.insert(
        "coact0".to_string(),
        StructureDoc::Coaction {
            a: "unitmon".to_string(),
            b: "kz2".to_string(),
            gamma: "b-unit".to_string(),
            tau: "tau0".to_string(),
        },
    );
    structures.insert(
        "mc1".to_string(),
        StructureDoc::MonoidalCoaction {
            base: "coact0".to_string(),
            dd: "b-comul".to_string(),
        },
    );

    BundleDoc {
        field,
        objects,
        morphisms,
        finmonoids: BTreeMap::new(),
        structures,
    }
}

/// Every generated corpus file, as `(name, canonical contents)` pairs.
pub fn all() -> Result<Vec<(&'static str, String)>> {
    let canonical = |doc: BundleDoc| -> Result<String> {
        Ok(Bundle::from_doc(doc)?.to_canonical_json())
    };
    Ok(vec![
        ("z4-extension.json", canonical(z4_extension())?),
        ("heisenberg-z2.json", canonical(heisenberg_z2())?),
        ("heisenberg-z3.json", canonical(heisenberg_z3())?),
        ("coactions.json", canonical(coactions())?),
        ("monoidal-trivial-b.json", canonical(monoidal_trivial_b())?),
        ("malformed.json", MALFORMED.to_string()),
        ("badshape.json", BADSHAPE.to_string()),
    ])
}

/// Write the whole corpus into `dir`, creating it if necessary.
pub fn write_all(dir: &Path) -> Result<()> {
    std::fs::create_dir_all(dir)?;
    for (name, contents) in all()? {
        std::fs::write(dir.join(name), contents)?;
    }
    Ok(())
}
