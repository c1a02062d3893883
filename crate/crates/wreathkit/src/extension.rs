//! Extensions of finite monoids: fibrations, classifying data, and cocycle
//! enumeration.
//!
//! A fibration is a surjection `p : E → M` of finite monoids together with a
//! unit-preserving section `j : M → E` such that `(x, a) ↦ j(x)·a` is a
//! bijection `M × A → E`, where `A = p⁻¹(1)` is the fiber over the unit.
//! From such data one extracts
//!
//! * a twisting `α : A × M → A`, written `a·x`, with `j(x)·(a·x) = a·j(x)`,
//! * a factor set `ρ : M × M → A` with `j(xy)·ρ(x,y) = j(x)·j(y)`,
//!
//! and `E` can be rebuilt from `(M, A, α, ρ)` up to isomorphism:
//! `(x,a)·(y,b) = (xy, ρ(x,y)·(a·y)·b)`. The laws that make the rebuilt
//! table a monoid are exactly the five checked by [`verify_extension_data`],
//! and [`enumerate_cocycles`] searches all normalized factor sets compatible
//! with a given twisting.

// Element indices here address several tables at once (α, ρ, and the
// monoid tables); plain index loops keep the law statements readable.
#![allow(clippy::needless_range_loop)]

use crate::error::{Error, Result};
use crate::mor::Mor;
use crate::report::{AxiomEntry, AxiomReport, Witness};
use crate::scalar::FieldDescriptor;
use crate::structures::{linearize, FinMonoid};
use crate::word::ObjWord;
use crate::wreath::WreathData;
use rayon::prelude::*;
use std::sync::OnceLock;

/// Upper bound on the number of factor-set candidates a search will visit
/// unless the caller raises it.
pub const DEFAULT_MAX_CANDIDATES: u128 = 10_000_000;

// ---- fibrations -------------------------------------------------------------

/// A surjection of finite monoids with a chosen section.
///
/// `p[e]` is the image in `M` of element `e` of `E`; `j[x]` is the chosen
/// preimage in `E` of element `x` of `M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FibrationData {
    pub e: FinMonoid,
    pub m: FinMonoid,
    pub p: Vec<usize>,
    pub j: Vec<usize>,
}

impl FibrationData {
    /// Indices (into `E`) of the fiber over the unit, ascending.
    fn fiber(&self) -> Vec<usize> {
        (0..self.e.size())
            .filter(|&x| self.p[x] == self.m.unit)
            .collect()
    }

    /// Check everything that makes this a fibration: both monoids, `p` a
    /// homomorphism, `j` a unit-preserving section, and `(x,a) ↦ j(x)·a`
    /// a bijection.
    pub fn validate(&self) -> Result<()> {
        self.e.validate()?;
        self.m.validate()?;
        let bad = |reason: String| Error::BadFibration { reason };

        if self.p.len() != self.e.size() {
            return Err(bad(format!(
                "p has {} entries for {} elements",
                self.p.len(),
                self.e.size()
            )));
        }
        if let Some(&v) = self.p.iter().find(|&&v| v >= self.m.size()) {
            return Err(bad(format!("p takes the out-of-range value {v}")));
        }
        if self.p[self.e.unit] != self.m.unit {
            return Err(bad("p does not preserve the unit".to_string()));
        }
        for x in 0..self.e.size() {
            for y in 0..self.e.size() {
                if self.p[self.e.mul(x, y)] != self.m.mul(self.p[x], self.p[y]) {
                    return Err(bad(format!(
                        "p is not a homomorphism at ({}, {})",
                        self.e.elements[x], self.e.elements[y]
                    )));
                }
            }
        }

        if self.j.len() != self.m.size() {
            return Err(bad(format!(
                "j has {} entries for {} elements",
                self.j.len(),
                self.m.size()
            )));
        }
        if let Some(&v) = self.j.iter().find(|&&v| v >= self.e.size()) {
            return Err(bad(format!("j takes the out-of-range value {v}")));
        }
        for x in 0..self.m.size() {
            if self.p[self.j[x]] != x {
                return Err(bad(format!(
                    "j is not a section at {}",
                    self.m.elements[x]
                )));
            }
        }
        if self.j[self.m.unit] != self.e.unit {
            return Err(bad("j does not preserve the unit".to_string()));
        }

        let fiber = self.fiber();
        if fiber.len() * self.m.size() != self.e.size() {
            return Err(bad(format!(
                "(x,a) ↦ j(x)·a cannot be bijective: |M|·|A| = {}·{} ≠ {}",
                self.m.size(),
                fiber.len(),
                self.e.size()
            )));
        }
        let mut hit = vec![false; self.e.size()];
        for x in 0..self.m.size() {
            for &a in &fiber {
                let t = self.e.mul(self.j[x], a);
                if hit[t] {
                    return Err(bad(format!(
                        "(x,a) ↦ j(x)·a is not injective: j({})·{} collides",
                        self.m.elements[x], self.e.elements[a]
                    )));
                }
                hit[t] = true;
            }
        }
        Ok(())
    }

    /// Extract the classifying data `(M, A, α, ρ)` of the extension.
    pub fn analyze(&self) -> Result<ExtensionData> {
        self.validate()?;
        let fiber = self.fiber();
        let k = fiber.len();
        let pos_in_fiber = {
            let mut pos = vec![usize::MAX; self.e.size()];
            for (i, &a) in fiber.iter().enumerate() {
                pos[a] = i;
            }
            pos
        };

        // invert h(x, a) = j(x)·a
        let mut h_inv = vec![(0usize, 0usize); self.e.size()];
        for x in 0..self.m.size() {
            for (ai, &a) in fiber.iter().enumerate() {
                h_inv[self.e.mul(self.j[x], a)] = (x, ai);
            }
        }

        let a_monoid = FinMonoid {
            elements: fiber.iter().map(|&a| self.e.elements[a].clone()).collect(),
            table: fiber
                .iter()
                .map(|&a| {
                    fiber
                        .iter()
                        .map(|&b| pos_in_fiber[self.e.mul(a, b)])
                        .collect()
                })
                .collect(),
            unit: pos_in_fiber[self.e.unit],
        };

        // a·j(x) = j(x)·α(a, x)
        let alpha = (0..k)
            .map(|ai| {
                (0..self.m.size())
                    .map(|x| h_inv[self.e.mul(fiber[ai], self.j[x])].1)
                    .collect()
            })
            .collect();

        // j(x)·j(y) = j(xy)·ρ(x, y)
        let rho = (0..self.m.size())
            .map(|x| {
                (0..self.m.size())
                    .map(|y| h_inv[self.e.mul(self.j[x], self.j[y])].1)
                    .collect()
            })
            .collect();

        Ok(ExtensionData {
            m: self.m.clone(),
            a: a_monoid,
            alpha,
            rho,
        })
    }
}

// ---- classifying data --------------------------------------------------------

/// The data classifying an extension of `m` by `a`: a twisting table
/// `alpha[a][x]` (the element `a·x`) and a factor set `rho[x][y]`
/// (an element of `A`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionData {
    pub m: FinMonoid,
    pub a: FinMonoid,
    pub alpha: Vec<Vec<usize>>,
    pub rho: Vec<Vec<usize>>,
}

fn check_index_table(
    table: &[Vec<usize>],
    rows: usize,
    cols: usize,
    bound: usize,
    what: &str,
) -> Result<()> {
    if table.len() != rows
        || table.iter().any(|r| r.len() != cols)
        || table.iter().flatten().any(|&v| v >= bound)
    {
        return Err(Error::BadExtension {
            reason: format!("{what} must be a {rows}×{cols} table of indices below {bound}"),
        });
    }
    Ok(())
}

impl ExtensionData {
    pub(crate) fn check_shape(&self) -> Result<()> {
        self.m.validate()?;
        self.a.validate()?;
        check_index_table(&self.alpha, self.a.size(), self.m.size(), self.a.size(), "alpha")?;
        check_index_table(&self.rho, self.m.size(), self.m.size(), self.a.size(), "rho")
    }
}

// shared fast paths for the two quantified factor-set laws

fn action_compat_violation(
    m: &FinMonoid,
    a: &FinMonoid,
    alpha: &[Vec<usize>],
    rho: &[Vec<usize>],
) -> Option<(usize, usize, usize)> {
    let (nm, na) = (m.size(), a.size());
    for ai in 0..na {
        for x in 0..nm {
            for y in 0..nm {
                let lhs = a.mul(alpha[ai][m.mul(x, y)], rho[x][y]);
                let rhs = a.mul(rho[x][y], alpha[alpha[ai][x]][y]);
                if lhs != rhs {
                    return Some((ai, x, y));
                }
            }
        }
    }
    None
}

fn factorset_violation(
    m: &FinMonoid,
    a: &FinMonoid,
    alpha: &[Vec<usize>],
    rho: &[Vec<usize>],
) -> Option<(usize, usize, usize)> {
    let nm = m.size();
    for x in 0..nm {
        for y in 0..nm {
            for z in 0..nm {
                let lhs = a.mul(rho[m.mul(x, y)][z], alpha[rho[x][y]][z]);
                let rhs = a.mul(rho[x][m.mul(y, z)], rho[y][z]);
                if lhs != rhs {
                    return Some((x, y, z));
                }
            }
        }
    }
    None
}

fn alpha_shape_errors(m: &FinMonoid, a: &FinMonoid, alpha: &[Vec<usize>]) -> Result<()> {
    check_index_table(alpha, a.size(), m.size(), a.size(), "alpha")
}

/// Check the five laws that let `(M, A, α, ρ)` rebuild a monoid.
pub fn verify_extension_data(ext: &ExtensionData) -> Result<AxiomReport> {
    ext.check_shape()?;
    let (m, a, alpha, rho) = (&ext.m, &ext.a, &ext.alpha, &ext.rho);
    let (nm, na) = (m.size(), a.size());
    let label = |i: usize| a.elements[i].clone();

    // α(−, x) is an endomorphism of A for every x
    let mut endo = AxiomEntry::pass("alpha-is-endomorphism", "each a ↦ a·x is an endomorphism");
    'endo: {
        for ai in 0..na {
            for bi in 0..na {
                for x in 0..nm {
                    let lhs = alpha[a.mul(ai, bi)][x];
                    let rhs = a.mul(alpha[ai][x], alpha[bi][x]);
                    if lhs != rhs {
                        endo = AxiomEntry::fail(
                            "alpha-is-endomorphism",
                            "each a ↦ a·x is an endomorphism",
                            Witness {
                                at: vec![ai, bi, x],
                                lhs: label(lhs),
                                rhs: label(rhs),
                            },
                        );
                        break 'endo;
                    }
                }
            }
        }
        for x in 0..nm {
            if alpha[a.unit][x] != a.unit {
                endo = AxiomEntry::fail(
                    "alpha-is-endomorphism",
                    "each a ↦ a·x is an endomorphism",
                    Witness {
                        at: vec![x],
                        lhs: label(alpha[a.unit][x]),
                        rhs: label(a.unit),
                    },
                );
                break 'endo;
            }
        }
    }

    let mut unital = AxiomEntry::pass("alpha-unital", "acting by the unit of M is trivial");
    for ai in 0..na {
        if alpha[ai][m.unit] != ai {
            unital = AxiomEntry::fail(
                "alpha-unital",
                "acting by the unit of M is trivial",
                Witness {
                    at: vec![ai],
                    lhs: label(alpha[ai][m.unit]),
                    rhs: label(ai),
                },
            );
            break;
        }
    }

    let action = match action_compat_violation(m, a, alpha, rho) {
        None => AxiomEntry::pass("rho-action", "ρ intertwines the twisted action"),
        Some((ai, x, y)) => AxiomEntry::fail(
            "rho-action",
            "ρ intertwines the twisted action",
            Witness {
                at: vec![ai, x, y],
                lhs: label(a.mul(alpha[ai][m.mul(x, y)], rho[x][y])),
                rhs: label(a.mul(rho[x][y], alpha[alpha[ai][x]][y])),
            },
        ),
    };

    let factor = match factorset_violation(m, a, alpha, rho) {
        None => AxiomEntry::pass("factorset", "ρ satisfies the factor-set law"),
        Some((x, y, z)) => AxiomEntry::fail(
            "factorset",
            "ρ satisfies the factor-set law",
            Witness {
                at: vec![x, y, z],
                lhs: label(a.mul(rho[m.mul(x, y)][z], alpha[rho[x][y]][z])),
                rhs: label(a.mul(rho[x][m.mul(y, z)], rho[y][z])),
            },
        ),
    };

    let mut norm = AxiomEntry::pass("rho-normalized", "ρ is trivial on the unit row and column");
    for x in 0..nm {
        let bad = if rho[m.unit][x] != a.unit {
            Some(rho[m.unit][x])
        } else if rho[x][m.unit] != a.unit {
            Some(rho[x][m.unit])
        } else {
            None
        };
        if let Some(v) = bad {
            norm = AxiomEntry::fail(
                "rho-normalized",
                "ρ is trivial on the unit row and column",
                Witness {
                    at: vec![x],
                    lhs: label(v),
                    rhs: label(a.unit),
                },
            );
            break;
        }
    }

    Ok(AxiomReport::new(vec![endo, unital, action, factor, norm]))
}

/// Rebuild the total monoid on `M × A` from classifying data:
/// `(x,a)·(y,b) = (xy, ρ(x,y)·(a·y)·b)`, with element `(x,a)` at index
/// `x·|A| + a`. The data is verified first.
pub fn reconstruct(ext: &ExtensionData) -> Result<FinMonoid> {
    let report = verify_extension_data(ext)?;
    if !report.passed() {
        return Err(Error::ValidationFailed {
            what: "extension data".to_string(),
            report,
        });
    }
    let (m, a) = (&ext.m, &ext.a);
    let (nm, na) = (m.size(), a.size());
    let size = nm * na;
    let mut elements = Vec::with_capacity(size);
    for x in 0..nm {
        for ai in 0..na {
            elements.push(format!("({},{})", m.elements[x], a.elements[ai]));
        }
    }
    let table = (0..size)
        .map(|l| {
            let (x, ai) = (l / na, l % na);
            (0..size)
                .map(|r| {
                    let (y, bi) = (r / na, r % na);
                    let fib = a.mul(a.mul(ext.rho[x][y], ext.alpha[ai][y]), bi);
                    m.mul(x, y) * na + fib
                })
                .collect()
        })
        .collect();
    let fm = FinMonoid {
        elements,
        table,
        unit: m.unit * na + a.unit,
    };
    fm.validate()?;
    Ok(fm)
}

/// Express the extension as a wreath around the linearised fiber monoid:
/// generator `s` spans `M`, generator `a` spans `A`, and
///
/// * `ν(x ⊗ y) = xy ⊗ ρ(x,y)`
/// * `λ(a ⊗ x) = x ⊗ (a·x)`
/// * `σ₀ = 1 ⊗ 1`.
///
/// The data is verified first; the resulting wreath satisfies all seven
/// wreath laws, and its wreath product is the linearised reconstruction.
pub fn extension_to_wreath(ext: &ExtensionData, field: FieldDescriptor) -> Result<WreathData> {
    let report = verify_extension_data(ext)?;
    if !report.passed() {
        return Err(Error::ValidationFailed {
            what: "extension data".to_string(),
            report,
        });
    }
    let (nm, na) = (ext.m.size(), ext.a.size());
    let monoid = linearize(&ext.a, "a", field)?.monoid();
    let a = &monoid.carrier;
    let s = ObjWord::gen(&crate::word::Generator::new("s", nm));
    let sa = s.tensor(a);

    let nu = Mor::from_basis_map(field, s.tensor(&s), sa.clone(), |col| {
        let (x, y) = (col / nm, col % nm);
        ext.m.mul(x, y) * na + ext.rho[x][y]
    });
    let lambda = Mor::from_basis_map(field, a.tensor(&s), sa.clone(), |col| {
        let (ai, x) = (col / nm, col % nm);
        x * na + ext.alpha[ai][x]
    });
    let sigma0 = Mor::basis_vector(field, &sa, ext.m.unit * na + ext.a.unit);

    Ok(WreathData {
        monoid,
        s,
        nu,
        sigma0,
        lambda,
    })
}

// ---- cocycle search -----------------------------------------------------------

/// Run `f` on the crate's rayon pool: the global one, or a dedicated pool
/// sized by the `WREATHKIT_THREADS` environment variable.
fn run_parallel<T: Send>(f: impl FnOnce() -> T + Send) -> T {
    static POOL: OnceLock<Option<rayon::ThreadPool>> = OnceLock::new();
    let pool = POOL.get_or_init(|| {
        std::env::var("WREATHKIT_THREADS")
            .ok()
            .and_then(|s| s.parse::<usize>().ok())
            .filter(|&n| n >= 1)
            .map(|n| {
                rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build()
                    .expect("failed to build thread pool")
            })
    });
    match pool {
        Some(pool) => pool.install(f),
        None => f(),
    }
}

/// Enumerate every normalized factor set `ρ` compatible with the twisting
/// `alpha`, in lexicographic order of the table (rows scanned left to right,
/// top to bottom).
///
/// Positions `ρ(1,·)` and `ρ(·,1)` are pinned to the unit of `A`; the
/// remaining `(|M|−1)²` cells range over `A`, and a candidate survives when
/// both the factor-set law and the action-compatibility law hold. Searches
/// whose raw candidate count exceeds `max_candidates` are refused up front.
pub fn enumerate_cocycles(
    m: &FinMonoid,
    a: &FinMonoid,
    alpha: &[Vec<usize>],
    max_candidates: u128,
) -> Result<Vec<Vec<Vec<usize>>>> {
    m.validate()?;
    a.validate()?;
    alpha_shape_errors(m, a, alpha)?;
    let (nm, na) = (m.size(), a.size());

    // the α-only laws must hold before a search makes sense
    for ai in 0..na {
        if alpha[ai][m.unit] != ai {
            return Err(Error::BadExtension {
                reason: format!(
                    "alpha is not unital at {} (acting by the unit of M must be trivial)",
                    a.elements[ai]
                ),
            });
        }
        for bi in 0..na {
            for x in 0..nm {
                if alpha[a.mul(ai, bi)][x] != a.mul(alpha[ai][x], alpha[bi][x]) {
                    return Err(Error::BadExtension {
                        reason: format!(
                            "alpha(−, {}) is not an endomorphism at ({}, {})",
                            m.elements[x], a.elements[ai], a.elements[bi]
                        ),
                    });
                }
            }
        }
    }
    for x in 0..nm {
        if alpha[a.unit][x] != a.unit {
            return Err(Error::BadExtension {
                reason: format!(
                    "alpha(−, {}) is not an endomorphism (it moves the unit)",
                    m.elements[x]
                ),
            });
        }
    }

    let free: Vec<(usize, usize)> = (0..nm)
        .flat_map(|x| (0..nm).map(move |y| (x, y)))
        .filter(|&(x, y)| x != m.unit && y != m.unit)
        .collect();

    let count = u32::try_from(free.len())
        .ok()
        .and_then(|exp| (na as u128).checked_pow(exp))
        .ok_or(Error::SearchSpaceExceeded {
            candidates: u128::MAX,
            bound: max_candidates,
        })?;
    if count > max_candidates {
        return Err(Error::SearchSpaceExceeded {
            candidates: count,
            bound: max_candidates,
        });
    }
    let count = usize::try_from(count).map_err(|_| Error::SearchSpaceExceeded {
        candidates: count,
        bound: max_candidates,
    })?;

    let template: Vec<Vec<usize>> = vec![vec![a.unit; nm]; nm];
    let survivors = run_parallel(|| {
        (0..count)
            .into_par_iter()
            .filter_map(|counter| {
                let mut rho = template.clone();
                // first free cell is the most significant digit
                let mut rest = counter;
                for &(x, y) in free.iter().rev() {
                    rho[x][y] = rest % na;
                    rest /= na;
                }
                let ok = factorset_violation(m, a, alpha, &rho).is_none()
                    && action_compat_violation(m, a, alpha, &rho).is_none();
                ok.then_some(rho)
            })
            .collect::<Vec<_>>()
    });
    Ok(survivors)
}
