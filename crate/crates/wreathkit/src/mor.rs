//! Morphisms: dense exact matrices between tensor words.
//!
//! A `Mor` from `dom` to `cod` is a `cod.dim() × dom.dim()` matrix stored
//! row-major, acting on column vectors. Composition is matrix product,
//! the tensor product is the Kronecker product, and the braiding is the
//! permutation matrix that swaps basis tuples.

use crate::error::{Error, Result};
use crate::scalar::{FieldDescriptor, Scalar};
use crate::word::ObjWord;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mor {
    field: FieldDescriptor,
    dom: ObjWord,
    cod: ObjWord,
    /// Row-major: `entries[r * dom.dim() + c]`.
    entries: Vec<Scalar>,
}

impl Mor {
    // ---- constructors -----------------------------------------------------

    pub fn zero(field: FieldDescriptor, dom: ObjWord, cod: ObjWord) -> Mor {
        let entries = vec![field.zero(); dom.dim() * cod.dim()];
        Mor { field, dom, cod, entries }
    }

    pub fn identity(field: FieldDescriptor, w: &ObjWord) -> Mor {
        let n = w.dim();
        let mut m = Mor::zero(field, w.clone(), w.clone());
        for i in 0..n {
            m.entries[i * n + i] = field.one();
        }
        m
    }

    /// Build from a flat row-major entry vector, checking shape and field
    /// membership of every scalar.
    pub fn from_entries(
        field: FieldDescriptor,
        dom: ObjWord,
        cod: ObjWord,
        entries: Vec<Scalar>,
    ) -> Result<Mor> {
        let want = dom.dim() * cod.dim();
        if entries.len() != want {
            return Err(Error::ShapeMismatch {
                context: format!("matrix {} → {}", dom, cod),
                expected: format!("{} entries ({}×{})", want, cod.dim(), dom.dim()),
                actual: format!("{} entries", entries.len()),
            });
        }
        for s in &entries {
            field.check_scalar(s)?;
        }
        Ok(Mor { field, dom, cod, entries })
    }

    /// Build from rows of scalars (each row must have `dom.dim()` entries).
    pub fn from_rows(
        field: FieldDescriptor,
        dom: ObjWord,
        cod: ObjWord,
        rows: Vec<Vec<Scalar>>,
    ) -> Result<Mor> {
        if rows.len() != cod.dim() || rows.iter().any(|row| row.len() != dom.dim()) {
            return Err(Error::ShapeMismatch {
                context: format!("matrix {} → {}", dom, cod),
                expected: format!("{} rows × {} cols", cod.dim(), dom.dim()),
                actual: format!(
                    "{} rows × {} cols",
                    rows.len(),
                    rows.first().map_or(0, Vec::len)
                ),
            });
        }
        let entries = rows.into_iter().flatten().collect();
        Self::from_entries(field, dom, cod, entries)
    }

    /// Build from an entry function `(row, col) → scalar`. The callback must
    /// return canonical scalars of the ambient field.
    pub fn from_fn(
        field: FieldDescriptor,
        dom: ObjWord,
        cod: ObjWord,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Mor {
        let (rows, cols) = (cod.dim(), dom.dim());
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Mor { field, dom, cod, entries }
    }

    /// The morphism sending basis element `i` of `dom` to basis element
    /// `map(i)` of `cod` (a 0/1 matrix with one 1 per column).
    pub fn from_basis_map(
        field: FieldDescriptor,
        dom: ObjWord,
        cod: ObjWord,
        mut map: impl FnMut(usize) -> usize,
    ) -> Mor {
        let (rows, cols) = (cod.dim(), dom.dim());
        let mut m = Mor::zero(field, dom, cod);
        for c in 0..cols {
            let r = map(c);
            debug_assert!(r < rows);
            m.entries[r * cols + c] = field.one();
        }
        m
    }

    /// The elementary matrix with a single 1 at `(row, col)`.
    pub fn matrix_unit(
        field: FieldDescriptor,
        dom: ObjWord,
        cod: ObjWord,
        row: usize,
        col: usize,
    ) -> Mor {
        let mut m = Mor::zero(field, dom, cod);
        let cols = m.dom.dim();
        m.entries[row * cols + col] = field.one();
        m
    }

    /// Basis element `i` of `w`, as a morphism `I → w`.
    pub fn basis_vector(field: FieldDescriptor, w: &ObjWord, i: usize) -> Mor {
        Mor::matrix_unit(field, ObjWord::unit(), w.clone(), i, 0)
    }

    /// The braiding `x ⊗ y → y ⊗ x`, sending basis tuple `(i, j)` to `(j, i)`.
    pub fn braid(field: FieldDescriptor, x: &ObjWord, y: &ObjWord) -> Mor {
        let (dx, dy) = (x.dim(), y.dim());
        Mor::from_basis_map(field, x.tensor(y), y.tensor(x), |col| {
            let (i, j) = (col / dy, col % dy);
            j * dx + i
        })
    }

    /// Rearrange the legs of a tensor word: the result maps
    /// `words[0] ⊗ … ⊗ words[n−1]` to `words[perm[0]] ⊗ … ⊗ words[perm[n−1]]`,
    /// sending the basis tuple `(i₀,…,iₙ₋₁)` to `(i_{perm[0]},…,i_{perm[n−1]})`.
    pub fn permute_legs(field: FieldDescriptor, words: &[ObjWord], perm: &[usize]) -> Mor {
        assert_eq!(words.len(), perm.len());
        {
            let mut seen = vec![false; perm.len()];
            for &p in perm {
                assert!(!seen[p], "permute_legs: duplicate leg {p}");
                seen[p] = true;
            }
        }
        let dom = words
            .iter()
            .fold(ObjWord::unit(), |acc, w| acc.tensor(w));
        let cod = perm
            .iter()
            .fold(ObjWord::unit(), |acc, &p| acc.tensor(&words[p]));
        let dims: Vec<usize> = words.iter().map(ObjWord::dim).collect();
        Mor::from_basis_map(field, dom, cod, |col| {
            // Decode the column against one slot per input word.
            let mut rest = col;
            let mut tuple = vec![0; dims.len()];
            for k in (0..dims.len()).rev() {
                tuple[k] = rest % dims[k];
                rest /= dims[k];
            }
            let mut row = 0;
            for &p in perm {
                row = row * dims[p] + tuple[p];
            }
            row
        })
    }

    // ---- accessors --------------------------------------------------------

    pub fn field(&self) -> FieldDescriptor {
        self.field
    }

    pub fn dom(&self) -> &ObjWord {
        &self.dom
    }

    pub fn cod(&self) -> &ObjWord {
        &self.cod
    }

    pub fn rows(&self) -> usize {
        self.cod.dim()
    }

    pub fn cols(&self) -> usize {
        self.dom.dim()
    }

    pub fn entry(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.dom.dim() + c]
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    /// Position `(row, col)` of the first row-major entry where the two
    /// matrices differ, if any. Shapes must already agree.
    pub fn first_difference(&self, other: &Mor) -> Option<(usize, usize)> {
        debug_assert_eq!(self.dom, other.dom);
        debug_assert_eq!(self.cod, other.cod);
        let cols = self.cols();
        self.entries
            .iter()
            .zip(&other.entries)
            .position(|(a, b)| a != b)
            .map(|k| (k / cols, k % cols))
    }

    // ---- arithmetic -------------------------------------------------------

    /// Composition `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &Mor) -> Result<Mor> {
        if self.field != other.field {
            return Err(Error::MixedFields {
                left: self.field.to_string(),
                right: other.field.to_string(),
            });
        }
        if self.dom != other.cod {
            return Err(Error::ComposeMismatch {
                expected: self.dom.to_string(),
                actual: other.cod.to_string(),
            });
        }
        let field = self.field;
        let rows = self.rows();
        let mid = self.cols();
        let cols = other.cols();
        let mut entries = vec![field.zero(); rows * cols];
        for r in 0..rows {
            for k in 0..mid {
                let a = self.entry(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..cols {
                    let b = other.entry(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let cell = &mut entries[r * cols + c];
                    *cell = field.add(cell, &field.mul(a, b));
                }
            }
        }
        Ok(Mor {
            field,
            dom: other.dom.clone(),
            cod: self.cod.clone(),
            entries,
        })
    }

    /// Kronecker product `self ⊗ other`. Both sides must live over the same
    /// field; every bundle carries a single field, so a mismatch here is a
    /// programming error rather than bad input.
    pub fn tensor(&self, other: &Mor) -> Mor {
        assert_eq!(self.field, other.field, "tensor over mixed fields");
        let field = self.field;
        let dom = self.dom.tensor(&other.dom);
        let cod = self.cod.tensor(&other.cod);
        let (r2, c2) = (other.rows(), other.cols());
        Mor::from_fn(field, dom, cod, |r, c| {
            let (ra, rb) = (r / r2, r % r2);
            let (ca, cb) = (c / c2, c % c2);
            field.mul(self.entry(ra, ca), other.entry(rb, cb))
        })
    }

    pub fn add(&self, other: &Mor) -> Result<Mor> {
        self.zip_with(other, "sum", |f, a, b| f.add(a, b))
    }

    pub fn sub(&self, other: &Mor) -> Result<Mor> {
        self.zip_with(other, "difference", |f, a, b| f.sub(a, b))
    }

    fn zip_with(
        &self,
        other: &Mor,
        what: &str,
        op: impl Fn(&FieldDescriptor, &Scalar, &Scalar) -> Scalar,
    ) -> Result<Mor> {
        if self.field != other.field {
            return Err(Error::MixedFields {
                left: self.field.to_string(),
                right: other.field.to_string(),
            });
        }
        if self.dom != other.dom || self.cod != other.cod {
            return Err(Error::ShapeMismatch {
                context: format!("{what} of morphisms"),
                expected: format!("{} → {}", self.dom, self.cod),
                actual: format!("{} → {}", other.dom, other.cod),
            });
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| op(&self.field, a, b))
            .collect();
        Ok(Mor {
            field: self.field,
            dom: self.dom.clone(),
            cod: self.cod.clone(),
            entries,
        })
    }

    pub fn scale(&self, s: &Scalar) -> Mor {
        let entries = self.entries.iter().map(|e| self.field.mul(s, e)).collect();
        Mor {
            field: self.field,
            dom: self.dom.clone(),
            cod: self.cod.clone(),
            entries,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::Generator;

    fn q() -> FieldDescriptor {
        FieldDescriptor::Rational
    }

    fn word(name: &str, dim: usize) -> ObjWord {
        ObjWord::gen(&Generator::new(name, dim))
    }

    fn mor(dom: &ObjWord, cod: &ObjWord, ints: &[i64]) -> Mor {
        let entries = ints.iter().map(|&n| q().from_i64(n)).collect();
        Mor::from_entries(q(), dom.clone(), cod.clone(), entries).unwrap()
    }

    #[test]
    fn matrix_product() {
        let x = word("x", 2);
        let f = mor(&x, &x, &[1, 2, 0, 1]);
        let g = mor(&x, &x, &[1, 1, 1, 0]);
        // [[1,2],[0,1]] · [[1,1],[1,0]] = [[3,1],[1,0]]
        let fg = f.compose(&g).unwrap();
        assert_eq!(fg, mor(&x, &x, &[3, 1, 1, 0]));
    }

    #[test]
    fn kronecker_product_of_vectors() {
        let x = word("x", 2);
        let i = ObjWord::unit();
        let row = mor(&x, &i, &[1, 2]); // covector [a, b] = [1, 2]
        let col = mor(&i, &x, &[3, 5]); // vector [c; d] = [3; 5]
        // [a,b] ⊗ [c;d] = [[ac, bc], [ad, bd]]
        let k = row.tensor(&col);
        assert_eq!(k.dom(), &x);
        assert_eq!(k.cod(), &x);
        assert_eq!(k, mor(&x, &x, &[3, 6, 5, 10]));
    }

    #[test]
    fn braid_swaps_tuples_and_is_invertible() {
        let x = word("x", 2);
        let y = word("y", 3);
        let b = Mor::braid(q(), &x, &y);
        for i in 0..2 {
            for j in 0..3 {
                // column (i,j) carries a single 1 in row (j,i)
                for r in 0..6 {
                    let want = if r == j * 2 + i { 1 } else { 0 };
                    assert_eq!(b.entry(r, i * 3 + j), &q().from_i64(want));
                }
            }
        }
        let back = Mor::braid(q(), &y, &x);
        let round = back.compose(&b).unwrap();
        assert_eq!(round, Mor::identity(q(), &x.tensor(&y)));
    }

    #[test]
    fn braid_satisfies_hexagon() {
        let x = word("x", 2);
        let y = word("y", 2);
        let z = word("z", 3);
        let lhs = Mor::braid(q(), &x.tensor(&y), &z);
        let rhs = Mor::braid(q(), &x, &z)
            .tensor(&Mor::identity(q(), &y))
            .compose(&Mor::identity(q(), &x).tensor(&Mor::braid(q(), &y, &z)))
            .unwrap();
        assert_eq!(lhs.entries(), rhs.entries());
    }

    #[test]
    fn leg_permutation_reorders_factors() {
        let x = word("x", 2);
        let y = word("y", 3);
        let z = word("z", 2);
        let words = [x.clone(), y.clone(), z.clone()];
        let p = Mor::permute_legs(q(), &words, &[2, 0, 1]);
        assert_eq!(p.dom(), &x.tensor(&y).tensor(&z));
        assert_eq!(p.cod(), &z.tensor(&x).tensor(&y));
        // basis (i,j,k) ↦ (k,i,j)
        let col = p.dom().encode(&[1, 2, 0]);
        let row = p.cod().encode(&[0, 1, 2]);
        assert!(p.entry(row, col).is_one());
        let id = Mor::permute_legs(q(), &words, &[0, 1, 2]);
        assert_eq!(id, Mor::identity(q(), p.dom()));
    }

    #[test]
    fn compose_rejects_mismatched_shapes() {
        let x = word("x", 2);
        let y = word("y", 3);
        let f = Mor::identity(q(), &x);
        let g = Mor::identity(q(), &y);
        match f.compose(&g) {
            Err(Error::ComposeMismatch { expected, actual }) => {
                assert_eq!(expected, "x");
                assert_eq!(actual, "y");
            }
            other => panic!("expected a compose mismatch, got {other:?}"),
        }
    }
}
