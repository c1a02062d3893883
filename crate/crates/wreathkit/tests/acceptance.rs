//! End-to-end acceptance suite. Each test exercises one pillar of the
//! engine against independently derived expected values, prints a single
//! pass/fail line, and enforces a wall-clock budget. Everything here is
//! exact arithmetic: every comparison is strict equality.

mod common;

use common::{
    convolution_oracle, corpus_opwreaths, fp, graded_coaction_f2, q, random_mor, rng,
    trivial_coaction_f5,
};
use rand::Rng;
use std::path::Path;
use std::process::Command;
use std::sync::Arc;
use std::time::{Duration, Instant};
use wreathkit::bundle::Bundle;
use wreathkit::coaction::{
    check_eckmann_hilton, check_monoidal_twisted_coaction, check_opmonoidal,
    check_twisted_coaction, generated_opwreath, generated_opwreath_unchecked,
    verify_convolution_lemma, CoactionData, MonoidalCoactionData, OpmonoidalStructure,
};
use wreathkit::extension::{
    enumerate_cocycles, extension_to_wreath, reconstruct, verify_extension_data, ExtensionData,
    FibrationData, DEFAULT_MAX_CANDIDATES,
};
use wreathkit::mixed::{
    check_opwreath, convolve, degenerate_opwreath, heisenberg_data, heisenberg_product,
    kleisli_compose, KleisliMor,
};
use wreathkit::mor::Mor;
use wreathkit::structures::{
    bullet, classical_convolution, linearize, tensor_monoid, FinMonoid, MonoidData,
};
use wreathkit::word::{Generator, ObjWord};
use wreathkit::wreath::{check_wreath, from_distributive_law, wreath_product};

/// Run a criterion body, print its one-line verdict, and enforce a budget.
fn criterion(name: &str, budget: Duration, body: impl FnOnce()) {
    let t0 = Instant::now();
    let outcome = std::panic::catch_unwind(std::panic::AssertUnwindSafe(body));
    let elapsed = t0.elapsed();
    let ok = outcome.is_ok() && elapsed <= budget;
    println!(
        "[{}] {} in {:.3}s (budget {:.0}s)",
        name,
        if ok { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64(),
        budget.as_secs_f64(),
    );
    if let Err(e) = outcome {
        std::panic::resume_unwind(e);
    }
    assert!(
        elapsed <= budget,
        "{name} exceeded its budget: {elapsed:?} > {budget:?}"
    );
}

fn z4_over_z2() -> FibrationData {
    FibrationData {
        e: FinMonoid::cyclic(4),
        m: FinMonoid::cyclic(2),
        p: vec![0, 1, 0, 1],
        j: vec![0, 1],
    }
}

#[test]
fn criterion_01_schreier_analysis() {
    criterion("C1 schreier-analysis", Duration::from_secs(1), || {
        let ext = z4_over_z2().analyze().unwrap();
        assert_eq!(ext.a.elements, vec!["0".to_string(), "2".to_string()]);
        assert_eq!(ext.alpha, vec![vec![0, 0], vec![1, 1]]);
        assert_eq!(ext.rho, vec![vec![0, 0], vec![0, 1]]);
        assert!(verify_extension_data(&ext).unwrap().passed());
        // rebuilding and relabelling through h(x, a) = j(x)·a recovers ℤ/4
        let rebuilt = reconstruct(&ext).unwrap();
        assert!(rebuilt.is_isomorphic_under(&FinMonoid::cyclic(4), &[0, 2, 1, 3]));
    });
}

#[test]
fn criterion_02_cocycle_enumeration() {
    criterion("C2 cocycle-enumeration", Duration::from_secs(1), || {
        let z2 = FinMonoid::cyclic(2);
        let trivial_alpha = vec![vec![0, 0], vec![1, 1]];
        let found = enumerate_cocycles(&z2, &z2, &trivial_alpha, DEFAULT_MAX_CANDIDATES).unwrap();
        assert_eq!(
            found,
            vec![
                vec![vec![0, 0], vec![0, 0]],
                vec![vec![0, 0], vec![0, 1]],
            ]
        );
        let rebuild = |rho: &Vec<Vec<usize>>| {
            reconstruct(&ExtensionData {
                m: z2.clone(),
                a: z2.clone(),
                alpha: trivial_alpha.clone(),
                rho: rho.clone(),
            })
            .unwrap()
        };
        assert!(rebuild(&found[0]).is_isomorphic_under(&z2.direct_product(&z2), &[0, 1, 2, 3]));
        assert!(rebuild(&found[1]).is_isomorphic_under(&FinMonoid::cyclic(4), &[0, 2, 1, 3]));

        // ℤ/2 acting on ℤ/3 by inversion admits only the trivial factor set
        let z3 = FinMonoid::cyclic(3);
        let inversion = vec![vec![0, 0], vec![1, 2], vec![2, 1]];
        let found = enumerate_cocycles(&z2, &z3, &inversion, DEFAULT_MAX_CANDIDATES).unwrap();
        assert_eq!(found, vec![vec![vec![0, 0], vec![0, 0]]]);
    });
}

#[test]
fn criterion_03_extension_wreath() {
    criterion("C3 extension-wreath", Duration::from_secs(1), || {
        let ext = z4_over_z2().analyze().unwrap();
        let w = extension_to_wreath(&ext, q()).unwrap();
        let report = check_wreath(&w).unwrap();
        assert!(report.passed(), "{report}");
        assert_eq!(report.entries.len(), 7);
        // the wreath product multiplies exactly like the linearized rebuilt monoid
        let product = wreath_product(&w).unwrap();
        let rebuilt = linearize(&reconstruct(&ext).unwrap(), "e", q()).unwrap();
        assert_eq!(product.mul.rows(), 4);
        assert_eq!(product.mul.cols(), 16);
        assert_eq!(product.mul.entries(), rebuilt.mul.entries());
        assert_eq!(product.unit.entries(), rebuilt.unit.entries());
    });
}

#[test]
fn criterion_04_distributive_law() {
    criterion("C4 distributive-law", Duration::from_secs(1), || {
        let field = fp(5);
        let s = linearize(&FinMonoid::cyclic(2), "s", field).unwrap().monoid();
        let a = linearize(&FinMonoid::cyclic(3), "a", field).unwrap().monoid();
        let lambda = Mor::braid(field, &a.carrier, &s.carrier);
        let w = from_distributive_law(&s, &a, &lambda).unwrap();
        assert!(check_wreath(&w).unwrap().passed());
        let product = wreath_product(&w).unwrap();
        let tm = tensor_monoid(&s, &a).unwrap();
        assert_eq!(product.mul, tm.mul);
        assert_eq!(product.unit, tm.unit);
    });
}

#[test]
fn criterion_05_heisenberg() {
    criterion("C5 heisenberg", Duration::from_secs(10), || {
        for (label, n, field) in [("q-z2", 2usize, q()), ("f3-z3", 3usize, fp(3))] {
            let b = linearize(&FinMonoid::cyclic(n), "b", field).unwrap();
            let hw = heisenberg_data(&b).unwrap();
            let report = check_opwreath(&hw).unwrap();
            assert!(report.passed(), "{label}: {report}");

            // the crossing sends the group tuple (g, h) to (h, g + h)
            for g in 0..n {
                for h in 0..n {
                    let col = g * n + h;
                    let row = h * n + (g + h) % n;
                    for r in 0..n * n {
                        if r == row {
                            assert!(hw.z.entry(r, col).is_one(), "{label}");
                        } else {
                            assert!(hw.z.entry(r, col).is_zero(), "{label}");
                        }
                    }
                }
            }

            // convolution is unital and associative on all matrix units, and
            // agrees with the independent basis-summation evaluator
            let units: Vec<Mor> = (0..n * n)
                .map(|k| {
                    Mor::matrix_unit(field, b.carrier.clone(), b.carrier.clone(), k / n, k % n)
                })
                .collect();
            let conv_unit = b.unit.compose(&b.counit).unwrap();
            for u in &units {
                assert_eq!(&heisenberg_product(u, &conv_unit, &b).unwrap(), u, "{label}");
                assert_eq!(&heisenberg_product(&conv_unit, u, &b).unwrap(), u, "{label}");
                for v in &units {
                    let uv = heisenberg_product(u, v, &b).unwrap();
                    assert_eq!(uv, convolution_oracle(u, v, &hw), "{label}");
                    for t in &units {
                        let lhs = heisenberg_product(&uv, t, &b).unwrap();
                        let rhs =
                            heisenberg_product(u, &heisenberg_product(v, t, &b).unwrap(), &b)
                                .unwrap();
                        assert_eq!(lhs, rhs, "{label}");
                    }
                }
            }
        }
    });
}

#[test]
fn criterion_06_kleisli_laws() {
    criterion("C6 kleisli-laws", Duration::from_secs(30), || {
        let mut total_samples = 0usize;
        for (label, ow) in corpus_opwreaths() {
            let ctx = Arc::new(ow);
            let field = ctx.monoid.field();

            // identity absorption, exhaustively over matrix-unit morphisms
            let words = [ObjWord::unit(), ObjWord::gen(&Generator::new("x", 2))];
            for xw in &words {
                for yw in &words {
                    let dom_mat = ctx.c.tensor(xw);
                    let cod_mat = ctx.monoid.carrier.tensor(yw);
                    let idx = KleisliMor::identity(ctx.clone(), xw).unwrap();
                    let idy = KleisliMor::identity(ctx.clone(), yw).unwrap();
                    for k in 0..dom_mat.dim() * cod_mat.dim() {
                        let mat = Mor::matrix_unit(
                            field,
                            dom_mat.clone(),
                            cod_mat.clone(),
                            k / dom_mat.dim(),
                            k % dom_mat.dim(),
                        );
                        let f =
                            KleisliMor::new(ctx.clone(), xw.clone(), yw.clone(), mat).unwrap();
                        assert_eq!(kleisli_compose(&idx, &f).unwrap().mat(), f.mat(), "{label}");
                        assert_eq!(kleisli_compose(&f, &idy).unwrap().mat(), f.mat(), "{label}");
                    }
                }
            }

            // associativity on seeded random morphisms with leg dimensions ≤ 4
            let mut r = rng(0xC6);
            for _ in 0..25 {
                let ws: Vec<ObjWord> = (0..4)
                    .map(|i| {
                        ObjWord::gen(&Generator::new(format!("t{i}"), r.random_range(1..=4)))
                    })
                    .collect();
                let sample = |r: &mut _, dom: &ObjWord, cod: &ObjWord| {
                    random_mor(
                        r,
                        field,
                        &ctx.c.tensor(dom),
                        &ctx.monoid.carrier.tensor(cod),
                    )
                };
                let f = KleisliMor::new(
                    ctx.clone(),
                    ws[0].clone(),
                    ws[1].clone(),
                    sample(&mut r, &ws[0], &ws[1]),
                )
                .unwrap();
                let g = KleisliMor::new(
                    ctx.clone(),
                    ws[1].clone(),
                    ws[2].clone(),
                    sample(&mut r, &ws[1], &ws[2]),
                )
                .unwrap();
                let h = KleisliMor::new(
                    ctx.clone(),
                    ws[2].clone(),
                    ws[3].clone(),
                    sample(&mut r, &ws[2], &ws[3]),
                )
                .unwrap();
                let lhs = kleisli_compose(&kleisli_compose(&f, &g).unwrap(), &h).unwrap();
                let rhs = kleisli_compose(&f, &kleisli_compose(&g, &h).unwrap()).unwrap();
                assert_eq!(lhs.mat(), rhs.mat(), "{label}");
                total_samples += 1;
            }
        }
        assert!(total_samples >= 100, "only {total_samples} random samples ran");
    });
}

#[test]
fn criterion_07_coaction_suite() {
    criterion("C7 coaction-suite", Duration::from_secs(5), || {
        for (label, data) in [
            ("trivial-f5", trivial_coaction_f5()),
            ("graded-f2", graded_coaction_f2()),
        ] {
            let report = check_twisted_coaction(&data).unwrap();
            assert!(report.passed(), "{label}: {report}");
            assert_eq!(report.entries.len(), 7);
            let ow = generated_opwreath(&data).unwrap();
            assert!(check_opwreath(&ow).unwrap().passed(), "{label}");
            let lemma = verify_convolution_lemma(&data).unwrap();
            assert!(lemma.passed(), "{label}: {lemma}");
        }
        // the trivial coaction generates the plain braiding
        let data = trivial_coaction_f5();
        let ow = generated_opwreath(&data).unwrap();
        assert_eq!(ow.z, Mor::braid(fp(5), &data.b.carrier, &data.a.carrier));
    });
}

#[test]
fn criterion_08_opmonoidal_structure() {
    criterion("C8 opmonoidal-structure", Duration::from_secs(30), || {
        let field = q();
        let b = linearize(&FinMonoid::cyclic(2), "b", field).unwrap();
        let unit_monoid = MonoidData {
            carrier: ObjWord::unit(),
            mul: Mor::identity(field, &ObjWord::unit()),
            unit: Mor::identity(field, &ObjWord::unit()),
        };
        let base = CoactionData {
            a: unit_monoid,
            b: b.clone(),
            gamma: b.unit.clone(),
            tau: b.unit.tensor(&b.unit),
        };
        let mc = MonoidalCoactionData {
            base: base.clone(),
            dd: b.comul.clone(),
        };
        let report = check_monoidal_twisted_coaction(&mc).unwrap();
        assert!(report.passed(), "{report}");
        let ids: Vec<&str> = report.entries.iter().map(|e| e.id.as_str()).collect();
        assert_eq!(
            &ids[1..],
            [
                "montwcoact1",
                "montwcoact2",
                "montwcoact3-left",
                "montwcoact3-right",
                "montwcoact4",
            ]
        );

        let ctx = Arc::new(generated_opwreath_unchecked(&base).unwrap());
        let gens = vec![ObjWord::unit(), ObjWord::gen(&Generator::new("x", 2))];
        let report = check_opmonoidal(&ctx, &mc.dd, &gens).unwrap();
        assert!(report.passed(), "{report}");
        let ids: Vec<&str> = report.entries.iter().map(|e| e.id.as_str()).collect();
        assert_eq!(
            ids,
            ["gpsi1", "gpsi2", "gpsi3", "gpsi4", "gpsi5", "gpsi6", "gredundant"]
        );

        let os = OpmonoidalStructure::new(ctx, mc.dd.clone(), &gens).unwrap();
        assert!(check_eckmann_hilton(&os).unwrap().passed());
    });
}

#[test]
fn criterion_09_degeneration_oracle() {
    criterion("C9 degeneration-oracle", Duration::from_secs(5), || {
        for (label, n, field) in [("q-z2", 2usize, q()), ("f3-z3", 3usize, fp(3))] {
            let bim = linearize(&FinMonoid::cyclic(n), "c", field).unwrap();
            let c = bim.comonoid();
            let a = bim.monoid();
            let ow = degenerate_opwreath(&c, &a).unwrap();
            assert!(check_opwreath(&ow).unwrap().passed(), "{label}");

            let units: Vec<Mor> = (0..n * n)
                .map(|k| {
                    Mor::matrix_unit(field, c.carrier.clone(), a.carrier.clone(), k / n, k % n)
                })
                .collect();
            for u in &units {
                for v in &units {
                    let twisted = convolve(u, v, &ow).unwrap();
                    let classical = classical_convolution(u, v, &c, &a).unwrap();
                    assert_eq!(twisted, classical, "{label}");
                    assert_eq!(twisted, convolution_oracle(u, v, &ow), "{label}");
                }
            }
            let mut r = rng(0xC9);
            for _ in 0..20 {
                let u = random_mor(&mut r, field, &c.carrier, &a.carrier);
                let v = random_mor(&mut r, field, &c.carrier, &a.carrier);
                let twisted = convolve(&u, &v, &ow).unwrap();
                assert_eq!(twisted, classical_convolution(&u, &v, &c, &a).unwrap(), "{label}");
                assert_eq!(twisted, convolution_oracle(&u, &v, &ow), "{label}");
            }
        }
    });
}

#[test]
fn criterion_10_pointwise_product_laws() {
    criterion("C10 pointwise-product-laws", Duration::from_secs(5), || {
        let monoids: Vec<(&str, MonoidData)> = vec![
            ("q-z2", linearize(&FinMonoid::cyclic(2), "m", q()).unwrap().monoid()),
            ("f3-z3", linearize(&FinMonoid::cyclic(3), "m", fp(3)).unwrap().monoid()),
            ("f5-z2xz2", {
                let m = linearize(&FinMonoid::cyclic(2), "m", fp(5)).unwrap().monoid();
                tensor_monoid(&m, &m).unwrap()
            }),
        ];
        let mut r = rng(0xC10);
        let mut samples = 0usize;
        for (label, m) in &monoids {
            let field = m.field();
            for _ in 0..40 {
                let ws: Vec<ObjWord> = (0..3)
                    .map(|i| {
                        ObjWord::gen(&Generator::new(format!("y{i}"), r.random_range(1..=3)))
                    })
                    .collect();
                let u = random_mor(&mut r, field, &ws[0], &m.carrier);
                let v = random_mor(&mut r, field, &ws[1], &m.carrier);
                let t = random_mor(&mut r, field, &ws[2], &m.carrier);
                let lhs = bullet(&bullet(&u, &v, m).unwrap(), &t, m).unwrap();
                let rhs = bullet(&u, &bullet(&v, &t, m).unwrap(), m).unwrap();
                assert_eq!(lhs, rhs, "{label}");
                assert_eq!(bullet(&u, &m.unit, m).unwrap(), u, "{label}");
                assert_eq!(bullet(&m.unit, &u, m).unwrap(), u, "{label}");
                samples += 1;
            }
        }
        assert!(samples >= 100, "only {samples} random samples ran");
    });
}

#[test]
fn criterion_11_cli_round_trip() {
    criterion("C11 cli-round-trip", Duration::from_secs(1), || {
        let corpus = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus");
        for name in [
            "z4-extension.json",
            "heisenberg-z2.json",
            "heisenberg-z3.json",
            "coactions.json",
            "monoidal-trivial-b.json",
        ] {
            let text = std::fs::read_to_string(corpus.join(name)).unwrap();
            let bundle = Bundle::from_json(&text).unwrap();
            assert_eq!(bundle.to_canonical_json(), text, "{name} round trips");
        }

        let exe = env!("CARGO_BIN_EXE_wreathkit");
        let z4 = corpus.join("z4-extension.json");
        let run = |args: &[&str]| Command::new(exe).args(args).output().unwrap();
        let passing = run(&[
            "check", "wreath", "--bundle", z4.to_str().unwrap(), "--structure", "w1",
        ]);
        assert_eq!(passing.status.code(), Some(0));
        let failing = run(&[
            "check", "wreath", "--bundle", z4.to_str().unwrap(), "--structure", "w1-broken",
        ]);
        assert_eq!(failing.status.code(), Some(1));
        let unusable = run(&[
            "check", "wreath",
            "--bundle", corpus.join("malformed.json").to_str().unwrap(),
            "--structure", "w1",
        ]);
        assert_eq!(unusable.status.code(), Some(2));
    });
}
