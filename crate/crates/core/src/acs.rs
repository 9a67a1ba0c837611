//! Real Lie algebra plus invariant almost complex structure, and the complex
//! frame calculus derived from them.

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::complex::form::{Bidegree, Form, Monomial, Weight};
use crate::error::{Error, Result};
use crate::exterior::{self, MaskForm};
use crate::linalg::{inverse, rank, rref, ExactMatrix};
use crate::scalar::Scalar;

/// `[e_i, e_j] = value · e_k`, 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bracket {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub value: BigRational,
}

/// Structure constants of a real Lie algebra of even dimension. Entries
/// with `i > j` are optional: a missing `(j, i, k)` entry is filled in by
/// antisymmetry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebraSpec {
    pub real_dim: usize,
    pub brackets: Vec<Bracket>,
}

impl LieAlgebraSpec {
    pub fn new(real_dim: usize, brackets: Vec<Bracket>) -> Self {
        LieAlgebraSpec { real_dim, brackets }
    }

    /// Shorthand for integer constants, `(i, j, k, c)` 0-based.
    pub fn from_i64(real_dim: usize, entries: &[(usize, usize, usize, i64)]) -> Self {
        let brackets = entries
            .iter()
            .map(|&(i, j, k, v)| Bracket {
                i,
                j,
                k,
                value: BigRational::from_integer(v.into()),
            })
            .collect();
        LieAlgebraSpec::new(real_dim, brackets)
    }

    pub fn abelian(real_dim: usize) -> Self {
        LieAlgebraSpec::new(real_dim, Vec::new())
    }

    fn given(&self) -> Vec<Vec<Vec<Option<BigRational>>>> {
        let m = self.real_dim;
        let mut t = vec![vec![vec![None::<BigRational>; m]; m]; m];
        for b in &self.brackets {
            let e = t[b.i][b.j][b.k].get_or_insert_with(BigRational::zero);
            *e += &b.value;
        }
        t
    }

    /// `c[i][j][k]` with `[e_i, e_j] = Σ_k c[i][j][k] e_k`.
    pub fn structure_constants(&self) -> Vec<Vec<Vec<BigRational>>> {
        let m = self.real_dim;
        let g = self.given();
        let mut c = vec![vec![vec![BigRational::zero(); m]; m]; m];
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    c[i][j][k] = match (&g[i][j][k], &g[j][i][k]) {
                        (Some(v), _) => v.clone(),
                        (None, Some(w)) => -w.clone(),
                        (None, None) => BigRational::zero(),
                    };
                }
            }
        }
        c
    }

    /// Index triples where the given constants contradict antisymmetry.
    pub fn antisymmetry_violations(&self) -> Vec<(usize, usize, usize)> {
        let m = self.real_dim;
        let g = self.given();
        let mut out = Vec::new();
        for i in 0..m {
            for j in i..m {
                for k in 0..m {
                    let bad = if i == j {
                        g[i][i][k].as_ref().is_some_and(|v| !v.is_zero())
                    } else {
                        match (&g[i][j][k], &g[j][i][k]) {
                            (Some(a), Some(b)) => a != &-b.clone(),
                            _ => false,
                        }
                    };
                    if bad {
                        out.push((i, j, k));
                    }
                }
            }
        }
        out
    }

    /// Real bracket of two complex vectors in the real frame.
    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let c = self.structure_constants();
        bracket_with(&c, x, y)
    }

    /// `de^k = −Σ_{i<j} c^k_{ij} e^i ∧ e^j` on the real coframe.
    pub fn real_differentials(&self) -> Vec<MaskForm> {
        let c = self.structure_constants();
        let m = self.real_dim;
        (0..m)
            .map(|k| {
                let mut f = MaskForm::new();
                for i in 0..m {
                    for j in i + 1..m {
                        let v = Scalar::real(-c[i][j][k].clone());
                        exterior::add_into(&mut f, (1 << i) | (1 << j), &v);
                    }
                }
                f
            })
            .collect()
    }

    /// Generators `k` with `d(d e^k) ≠ 0`; empty exactly when Jacobi holds.
    pub fn jacobi_failures(&self) -> Vec<usize> {
        let d = self.real_differentials();
        (0..self.real_dim)
            .filter(|&k| !exterior::derive_form(&d[k], &d).is_empty())
            .collect()
    }

    /// Basis vectors whose adjoint action has nonzero trace.
    pub fn unimodularity_failures(&self) -> Vec<usize> {
        let c = self.structure_constants();
        (0..self.real_dim)
            .filter(|&i| {
                let tr: BigRational = (0..self.real_dim).map(|k| c[i][k][k].clone()).sum();
                !tr.is_zero()
            })
            .collect()
    }
}

fn bracket_with(c: &[Vec<Vec<BigRational>>], x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    let m = c.len();
    let mut out = vec![Scalar::zero(); m];
    for i in 0..m {
        if x[i].is_zero() {
            continue;
        }
        for j in 0..m {
            if y[j].is_zero() {
                continue;
            }
            let xy = &x[i] * &y[j];
            for k in 0..m {
                if !c[i][j][k].is_zero() {
                    out[k] += xy.scale(&c[i][j][k]);
                }
            }
        }
    }
    out
}

/// An endomorphism `J` of the real frame, stored column-wise: `J·e_c` is
/// column `c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlmostComplexStructure {
    pub matrix: ExactMatrix,
}

impl AlmostComplexStructure {
    /// From rows of rational entries.
    pub fn from_rows(rows: &[Vec<BigRational>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let rows: Vec<Vec<Scalar>> = rows
            .iter()
            .map(|r| r.iter().cloned().map(Scalar::real).collect())
            .collect();
        AlmostComplexStructure {
            matrix: ExactMatrix::from_rows(cols, &rows),
        }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        AlmostComplexStructure {
            matrix: ExactMatrix::from_i64(rows),
        }
    }

    /// `J e_{2a} = e_{2a+1}` on each consecutive pair.
    pub fn standard(real_dim: usize) -> Self {
        let mut m = ExactMatrix::zeros(real_dim, real_dim);
        for a in (0..real_dim).step_by(2) {
            m.set(a + 1, a, Scalar::one());
            m.set(a, a + 1, Scalar::from_i64(-1));
        }
        AlmostComplexStructure { matrix: m }
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn squares_to_minus_one(&self) -> bool {
        let n = self.dim();
        self.matrix.cols() == n
            && self.matrix.mul(&self.matrix) == ExactMatrix::identity(n).scale(&Scalar::from_i64(-1))
    }

    /// Conjugate by a real change of basis `a`: the matrix of the same
    /// endomorphism when `a` maps new coordinates to old ones.
    pub fn conjugated_by(&self, a: &ExactMatrix) -> Option<Self> {
        let ainv = inverse(a)?;
        Some(AlmostComplexStructure {
            matrix: ainv.mul(&self.matrix).mul(a),
        })
    }
}

/// Which bidegree component of `d` a generator image belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum DPart {
    Mu,
    Partial,
    PartialBar,
    MuBar,
}

impl DPart {
    pub const ALL: [DPart; 4] = [DPart::Mu, DPart::Partial, DPart::PartialBar, DPart::MuBar];

    pub fn shift(self) -> (i32, i32) {
        match self {
            DPart::Mu => (2, -1),
            DPart::Partial => (1, 0),
            DPart::PartialBar => (0, 1),
            DPart::MuBar => (-1, 2),
        }
    }

    pub fn conj(self) -> DPart {
        match self {
            DPart::Mu => DPart::MuBar,
            DPart::Partial => DPart::PartialBar,
            DPart::PartialBar => DPart::Partial,
            DPart::MuBar => DPart::Mu,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            DPart::Mu => "μ",
            DPart::Partial => "∂",
            DPart::PartialBar => "∂̄",
            DPart::MuBar => "μ̄",
        }
    }
}

/// Complex frame `Z_1..Z_n, Z̄_1..Z̄_n` of an invariant almost complex
/// structure, with its dual coframe and structure constants.
#[derive(Clone, Debug)]
pub struct ComplexFrame {
    pub n: usize,
    pub algebra: LieAlgebraSpec,
    /// Columns are the frame vectors in real coordinates, `Z`s first.
    pub frame: ExactMatrix,
    /// Rows are the coframe elements `θ^1..θ^n, θ̄^1..θ̄^n` in the real dual
    /// basis.
    pub coframe: ExactMatrix,
    /// `[W_a, W_b] = Σ_e constants[a][b][e] W_e` over the full frame.
    pub constants: Vec<Vec<Vec<Scalar>>>,
}

/// Projects the real frame with `(1 − iJ)/2` and keeps the leftmost
/// independent columns.
pub fn build_frame(algebra: &LieAlgebraSpec, j: &AlmostComplexStructure) -> Result<ComplexFrame> {
    let m = algebra.real_dim;
    if !m.is_multiple_of(2) || m == 0 {
        return Err(Error::DegenerateJ(format!("real dimension {m} is not positive and even")));
    }
    if j.dim() != m || j.matrix.cols() != m {
        return Err(Error::DegenerateJ(format!("J is {}x{}, expected {m}x{m}", j.dim(), j.matrix.cols())));
    }
    if !j.squares_to_minus_one() {
        return Err(Error::DegenerateJ("J² ≠ −1".into()));
    }
    let n = m / 2;
    let half = Scalar::ratio(1, 2);
    let proj = ExactMatrix::identity(m)
        .sub(&j.matrix.scale(&Scalar::i()))
        .scale(&half);
    let pivots = rref(&proj).pivots;
    if pivots.len() != n {
        return Err(Error::DegenerateJ(format!("+i eigenspace has dimension {}", pivots.len())));
    }
    let mut cols: Vec<Vec<Scalar>> = pivots.iter().map(|&c| proj.column(c)).collect();
    let conj_cols: Vec<Vec<Scalar>> = cols.iter().map(|v| v.iter().map(Scalar::conj).collect()).collect();
    cols.extend(conj_cols);
    let frame = ExactMatrix::from_columns(m, &cols);
    let coframe = inverse(&frame).ok_or_else(|| Error::DegenerateJ("frame is not a basis".into()))?;
    let c = algebra.structure_constants();
    let mut constants = vec![vec![vec![Scalar::zero(); m]; m]; m];
    for a in 0..m {
        for b in a + 1..m {
            let br = bracket_with(&c, &cols[a], &cols[b]);
            let coords = coframe.mul_vec(&br);
            for e in 0..m {
                constants[b][a][e] = -coords[e].clone();
                constants[a][b][e] = coords[e].clone();
            }
        }
    }
    Ok(ComplexFrame {
        n,
        algebra: algebra.clone(),
        frame,
        coframe,
        constants,
    })
}

/// Generator `g` of the full coframe as a form (`g < n` holomorphic).
pub fn generator_form(n: usize, g: usize) -> Form {
    Form::generator(g % n + 1, g >= n)
}

/// Converts a constant-coefficient form to a combined generator mask form
/// (holomorphic bits first).
pub fn to_mask_form(f: &Form, n: usize) -> MaskForm {
    let mut out = MaskForm::new();
    for (m, c) in f.terms() {
        exterior::add_into(&mut out, m.holo as u32 | ((m.anti as u32) << n), c);
    }
    out
}

pub fn from_mask_form(f: &MaskForm, n: usize, weight: &Weight) -> Form {
    let lo = (1u32 << n) - 1;
    let mut out = Form::zero();
    for (mask, c) in f {
        let holo = (mask & lo) as u16;
        let anti = (mask >> n) as u16;
        out.add_term(Monomial::new(weight.clone(), holo, anti), c);
    }
    out
}

impl ComplexFrame {
    pub fn real_dim(&self) -> usize {
        2 * self.n
    }

    /// `Z_r` (`anti = false`) or `Z̄_r` in real coordinates, 1-based.
    pub fn vector(&self, r: usize, anti: bool) -> Vec<Scalar> {
        self.frame.column(r - 1 + if anti { self.n } else { 0 })
    }

    /// `θ^r` or `θ̄^r` in the real dual basis, 1-based.
    pub fn covector(&self, r: usize, anti: bool) -> Vec<Scalar> {
        self.coframe.row_vector(r - 1 + if anti { self.n } else { 0 })
    }

    /// `dϑ^e = −Σ_{a<b} C^e_{ab} ϑ^a ∧ ϑ^b` for every coframe element.
    pub fn exterior_d_on_generators(&self) -> Vec<Form> {
        let m = self.real_dim();
        (0..m)
            .map(|e| {
                let mut f = Form::zero();
                for a in 0..m {
                    for b in a + 1..m {
                        let c = &self.constants[a][b][e];
                        if !c.is_zero() {
                            let ab = generator_form(self.n, a).wedge(&generator_form(self.n, b));
                            f = f.add(&ab.scale(&-c.clone()));
                        }
                    }
                }
                f
            })
            .collect()
    }

    pub fn split_d(&self) -> GeneratorActions {
        GeneratorActions::from_differentials(self.n, self.exterior_d_on_generators())
    }

    /// `N^t_{jk}`, the `Z_t` coefficient of `−[Z̄_j, Z̄_k]`, indexed
    /// `[t][j][k]` 0-based.
    pub fn nijenhuis(&self) -> NijenhuisData {
        let n = self.n;
        let coeffs = (0..n)
            .map(|t| {
                (0..n)
                    .map(|j| (0..n).map(|k| -self.constants[n + j][n + k][t].clone()).collect())
                    .collect()
            })
            .collect();
        NijenhuisData { n, coeffs }
    }

    /// Rank of `μ̄ : A^{1,0} → A^{0,2}` on invariant forms.
    pub fn nijenhuis_rank(&self) -> usize {
        let n = self.n;
        let acts = self.split_d();
        let pairs: Vec<u16> = (0..n)
            .flat_map(|j| (j + 1..n).map(move |k| (1u16 << j) | (1u16 << k)))
            .collect();
        let mut mat = ExactMatrix::zeros(pairs.len(), n);
        for s in 0..n {
            let img = &acts.part(DPart::MuBar)[s];
            for (r, &mask) in pairs.iter().enumerate() {
                mat.set(r, s, img.coeff(&Monomial::new(Weight::default(), 0, mask)));
            }
        }
        rank(&mat)
    }
}

/// The four bidegree components of `d` on each coframe generator.
#[derive(Clone, Debug)]
pub struct GeneratorActions {
    pub n: usize,
    pub d: Vec<Form>,
    parts: Vec<Vec<Form>>,
}

impl GeneratorActions {
    pub fn from_differentials(n: usize, d: Vec<Form>) -> Self {
        let parts = DPart::ALL
            .iter()
            .map(|&p| {
                let (dp, dq) = p.shift();
                d.iter()
                    .enumerate()
                    .map(|(g, f)| {
                        let src = if g < n { Bidegree::new(1, 0) } else { Bidegree::new(0, 1) };
                        match src.shift(dp, dq, n) {
                            Some(t) => f.component(t),
                            None => Form::zero(),
                        }
                    })
                    .collect()
            })
            .collect();
        GeneratorActions { n, d, parts }
    }

    pub fn part(&self, p: DPart) -> &[Form] {
        &self.parts[p as usize]
    }

    /// Sum of the four components on generator `g`.
    pub fn reconstruct(&self, g: usize) -> Form {
        DPart::ALL
            .iter()
            .fold(Form::zero(), |acc, &p| acc.add(&self.part(p)[g]))
    }

    /// Generator images of component `p` as mask forms.
    pub fn mask_images(&self, p: DPart) -> Vec<MaskForm> {
        self.part(p).iter().map(|f| to_mask_form(f, self.n)).collect()
    }

    pub fn d_mask_images(&self) -> Vec<MaskForm> {
        self.d.iter().map(|f| to_mask_form(f, self.n)).collect()
    }

    /// Indices `r` (1-based) with `dθ^r = 0`.
    pub fn closed_holomorphic_generators(&self) -> Vec<usize> {
        (0..self.n).filter(|&g| self.d[g].is_zero()).map(|g| g + 1).collect()
    }
}

/// Nijenhuis coefficients `N^t_{jk}`; antisymmetric in `(j, k)` and normalized
/// so that `μ̄θ^t = ½ Σ_{j,k} N^t_{jk} θ̄^j ∧ θ̄^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NijenhuisData {
    pub n: usize,
    pub coeffs: Vec<Vec<Vec<Scalar>>>,
}

impl NijenhuisData {
    /// 1-based accessor.
    pub fn get(&self, t: usize, j: usize, k: usize) -> &Scalar {
        &self.coeffs[t - 1][j - 1][k - 1]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().flatten().flatten().all(Scalar::is_zero)
    }

    /// `½ Σ_{j,k} N^t_{jk} θ̄^j ∧ θ̄^k`.
    pub fn mubar_image(&self, t: usize) -> Form {
        let half = Scalar::ratio(1, 2);
        let mut f = Form::zero();
        for j in 1..=self.n {
            for k in 1..=self.n {
                let c = self.get(t, j, k);
                if !c.is_zero() {
                    let w = Form::generator(j, true).wedge(&Form::generator(k, true));
                    f = f.add(&w.scale(&(c * &half)));
                }
            }
        }
        f
    }
}

/// Real Nijenhuis tensor `[JX,JY] − J[JX,Y] − J[X,JY] − [X,Y]` on basis
/// pairs; zero exactly when `J` is integrable.
pub fn real_nijenhuis_vanishes(algebra: &LieAlgebraSpec, j: &AlmostComplexStructure) -> bool {
    let m = algebra.real_dim;
    let c = algebra.structure_constants();
    let jm = &j.matrix;
    let basis = ExactMatrix::identity(m);
    (0..m).all(|a| {
        (a + 1..m).all(|b| {
            let x = basis.column(a);
            let y = basis.column(b);
            let jx = jm.mul_vec(&x);
            let jy = jm.mul_vec(&y);
            let t1 = bracket_with(&c, &jx, &jy);
            let t2 = jm.mul_vec(&bracket_with(&c, &jx, &y));
            let t3 = jm.mul_vec(&bracket_with(&c, &x, &jy));
            let t4 = bracket_with(&c, &x, &y);
            (0..m).all(|k| (&(&(&t1[k] - &t2[k]) - &t3[k]) - &t4[k]).is_zero())
        })
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub checks: Vec<Check>,
}

impl ValidationReport {
    pub fn push(&mut self, name: &str, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }
}

/// Checks even dimension, antisymmetry, Jacobi (`d² = 0` on the real
/// coframe), `J² = −1`, and unimodularity.
pub fn validate(algebra: &LieAlgebraSpec, j: &AlmostComplexStructure) -> ValidationReport {
    let mut r = ValidationReport::default();
    let m = algebra.real_dim;
    r.push("even_dimension", m > 0 && m.is_multiple_of(2), format!("real dimension {m}"));
    let anti = algebra.antisymmetry_violations();
    r.push(
        "antisymmetry",
        anti.is_empty(),
        if anti.is_empty() {
            String::new()
        } else {
            format!("(i,j,k) 1-based: {:?}", anti.iter().map(|t| (t.0 + 1, t.1 + 1, t.2 + 1)).collect::<Vec<_>>())
        },
    );
    let jac = algebra.jacobi_failures();
    r.push(
        "jacobi",
        jac.is_empty(),
        if jac.is_empty() {
            String::new()
        } else {
            format!("d(de^k) ≠ 0 for k = {:?}", jac.iter().map(|k| k + 1).collect::<Vec<_>>())
        },
    );
    let jsq = j.dim() == m && j.squares_to_minus_one();
    r.push("j_squared", jsq, if jsq { String::new() } else { "J² ≠ −1".to_string() });
    let uni = algebra.unimodularity_failures();
    r.push(
        "unimodular",
        uni.is_empty(),
        if uni.is_empty() {
            String::new()
        } else {
            format!("tr ad(e_i) ≠ 0 for i = {:?}", uni.iter().map(|k| k + 1).collect::<Vec<_>>())
        },
    );
    r
}

/// `true` when every entry of `v` is real.
pub fn is_real_vector(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_real)
}
