//! Fixed-dimension linear algebra on one, two and three qutrits.
//!
//! Amplitudes are either constant [`ExtScalar`]s or [`LinearForm`]s in the
//! symbolic input amplitudes `c0, c1, c2`. Flat indices follow one convention
//! everywhere: for `A1⊗A2⊗B` the index is `9·a1 + 3·a2 + b`, and for any pair
//! `X⊗Y` it is `3·x + y`, so the leftmost site varies slowest.
//!
//! The tensor product of two `c`-dependent kets is not expressible here: there
//! is no [`TensorAmplitude`] impl pairing two `LinearForm`s, so such a product
//! fails to compile.
//!
//! ```compile_fail
//! use qutrit_teleport::qutrit::{tensor, Ket, Site};
//! let phi = Ket::symbolic_input(Site::A1);
//! let other = Ket::symbolic_input(Site::A2);
//! let _ = tensor(&phi, &other);
//! ```

use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::ExtScalar;

/// `coef0·c0 + coef1·c1 + coef2·c2` with exact coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LinearForm {
    #[serde(rename = "c0")]
    pub coef0: ExtScalar,
    #[serde(rename = "c1")]
    pub coef1: ExtScalar,
    #[serde(rename = "c2")]
    pub coef2: ExtScalar,
}

impl LinearForm {
    pub fn new(coefs: [ExtScalar; 3]) -> Self {
        let [coef0, coef1, coef2] = coefs;
        LinearForm { coef0, coef1, coef2 }
    }

    /// The bare symbol `c_j`.
    pub fn symbol(j: usize) -> Self {
        let mut f = LinearForm::default();
        *f.coef_mut(j) = ExtScalar::one();
        f
    }

    pub fn coef(&self, j: usize) -> &ExtScalar {
        match j {
            0 => &self.coef0,
            1 => &self.coef1,
            2 => &self.coef2,
            _ => panic!("linear form has three coefficients, got index {j}"),
        }
    }

    fn coef_mut(&mut self, j: usize) -> &mut ExtScalar {
        match j {
            0 => &mut self.coef0,
            1 => &mut self.coef1,
            2 => &mut self.coef2,
            _ => panic!("linear form has three coefficients, got index {j}"),
        }
    }

    pub fn coefs(&self) -> [&ExtScalar; 3] {
        [&self.coef0, &self.coef1, &self.coef2]
    }

    /// Substitutes exact values for `(c0, c1, c2)`.
    pub fn evaluate(&self, c: &[ExtScalar; 3]) -> ExtScalar {
        (0..3).map(|j| self.coef(j) * &c[j]).sum()
    }

    /// Substitutes numeric complex values for `(c0, c1, c2)`.
    pub fn evaluate_complex(&self, c: &[Complex64; 3]) -> Complex64 {
        (0..3).map(|j| c[j] * self.coef(j).to_f64()).sum()
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for j in 0..3 {
            let c = self.coef(j);
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if c.is_one() {
                write!(f, "c{j}")?;
            } else if c.terms().count() == 1 {
                write!(f, "{c}·c{j}")?;
            } else {
                write!(f, "({c})·c{j}")?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Vector-space operations shared by both amplitude kinds.
pub trait Amplitude: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn scaled(&self, s: &ExtScalar) -> Self;
}

impl Amplitude for ExtScalar {
    fn zero() -> Self {
        ExtScalar::zero()
    }
    fn is_zero(&self) -> bool {
        ExtScalar::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn scaled(&self, s: &ExtScalar) -> Self {
        s * self
    }
}

impl Amplitude for LinearForm {
    fn zero() -> Self {
        LinearForm::default()
    }
    fn is_zero(&self) -> bool {
        self.coef0.is_zero() && self.coef1.is_zero() && self.coef2.is_zero()
    }
    fn plus(&self, other: &Self) -> Self {
        LinearForm {
            coef0: &self.coef0 + &other.coef0,
            coef1: &self.coef1 + &other.coef1,
            coef2: &self.coef2 + &other.coef2,
        }
    }
    fn minus(&self, other: &Self) -> Self {
        LinearForm {
            coef0: &self.coef0 - &other.coef0,
            coef1: &self.coef1 - &other.coef1,
            coef2: &self.coef2 - &other.coef2,
        }
    }
    fn scaled(&self, s: &ExtScalar) -> Self {
        LinearForm {
            coef0: s * &self.coef0,
            coef1: s * &self.coef1,
            coef2: s * &self.coef2,
        }
    }
}

/// Products that stay inside the linear model.
pub trait TensorAmplitude<Rhs> {
    type Output: Amplitude;
    fn tensor_mul(&self, rhs: &Rhs) -> Self::Output;
}

impl TensorAmplitude<ExtScalar> for ExtScalar {
    type Output = ExtScalar;
    fn tensor_mul(&self, rhs: &ExtScalar) -> ExtScalar {
        self * rhs
    }
}

impl TensorAmplitude<ExtScalar> for LinearForm {
    type Output = LinearForm;
    fn tensor_mul(&self, rhs: &ExtScalar) -> LinearForm {
        self.scaled(rhs)
    }
}

impl TensorAmplitude<LinearForm> for ExtScalar {
    type Output = LinearForm;
    fn tensor_mul(&self, rhs: &LinearForm) -> LinearForm {
        rhs.scaled(self)
    }
}

/// A single physical location in the protocol.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
enum Party {
    A1,
    A2,
    B,
}

/// Which qutrits a ket lives on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Site {
    A1,
    A2,
    B,
    A2B,
    A1A2,
    A1A2B,
}

impl Site {
    fn parties(self) -> &'static [Party] {
        match self {
            Site::A1 => &[Party::A1],
            Site::A2 => &[Party::A2],
            Site::B => &[Party::B],
            Site::A2B => &[Party::A2, Party::B],
            Site::A1A2 => &[Party::A1, Party::A2],
            Site::A1A2B => &[Party::A1, Party::A2, Party::B],
        }
    }

    fn from_parties(parties: &[Party]) -> Option<Site> {
        Some(match parties {
            [Party::A1] => Site::A1,
            [Party::A2] => Site::A2,
            [Party::B] => Site::B,
            [Party::A2, Party::B] => Site::A2B,
            [Party::A1, Party::A2] => Site::A1A2,
            [Party::A1, Party::A2, Party::B] => Site::A1A2B,
            _ => return None,
        })
    }

    pub fn dim(self) -> usize {
        3usize.pow(self.parties().len() as u32)
    }

    /// The site of `self ⊗ other`, if the parties appear in protocol order.
    pub fn tensor(self, other: Site) -> Result<Site> {
        let joined: Vec<Party> = self.parties().iter().chain(other.parties()).copied().collect();
        let ordered = joined.windows(2).all(|w| w[0] < w[1]);
        ordered
            .then(|| Site::from_parties(&joined))
            .flatten()
            .ok_or_else(|| Error::SiteMismatch {
                left: self.to_string(),
                right: other.to_string(),
            })
    }
}

impl fmt::Display for Site {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Site::A1 => "A1",
            Site::A2 => "A2",
            Site::B => "B",
            Site::A2B => "A2⊗B",
            Site::A1A2 => "A1⊗A2",
            Site::A1A2B => "A1⊗A2⊗B",
        })
    }
}

/// A state vector of dimension 3, 9 or 27 on a labelled site.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ket<A> {
    site: Site,
    amplitudes: Vec<A>,
}

impl<A: Amplitude> Ket<A> {
    pub fn new(site: Site, amplitudes: Vec<A>) -> Result<Self> {
        if amplitudes.len() != site.dim() {
            return Err(Error::DimensionMismatch {
                expected: site.dim(),
                found: amplitudes.len(),
            });
        }
        Ok(Ket { site, amplitudes })
    }

    pub fn zero(site: Site) -> Self {
        Ket {
            site,
            amplitudes: vec![A::zero(); site.dim()],
        }
    }

    pub fn site(&self) -> Site {
        self.site
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[A] {
        &self.amplitudes
    }

    pub fn amplitude(&self, index: usize) -> &A {
        &self.amplitudes[index]
    }

    pub fn is_zero(&self) -> bool {
        self.amplitudes.iter().all(A::is_zero)
    }

    /// Same amplitudes on a different site of equal dimension.
    pub fn relabel(&self, site: Site) -> Result<Self> {
        Ket::new(site, self.amplitudes.clone())
    }

    pub fn scaled(&self, s: &ExtScalar) -> Self {
        Ket {
            site: self.site,
            amplitudes: self.amplitudes.iter().map(|a| a.scaled(s)).collect(),
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, A::plus)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, A::minus)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&A, &A) -> A) -> Result<Self> {
        if self.site != other.site {
            return Err(Error::SiteMismatch {
                left: self.site.to_string(),
                right: other.site.to_string(),
            });
        }
        Ok(Ket {
            site: self.site,
            amplitudes: self.amplitudes.iter().zip(&other.amplitudes).map(|(a, b)| f(a, b)).collect(),
        })
    }
}

impl Ket<ExtScalar> {
    /// Computational basis vector `e_index`.
    pub fn basis(site: Site, index: usize) -> Result<Self> {
        crate::error::check_index("basis", index, site.dim())?;
        let mut ket = Ket::zero(site);
        ket.amplitudes[index] = ExtScalar::one();
        Ok(ket)
    }

    /// Real inner product (the field has no complex part, so no conjugation).
    pub fn inner(&self, other: &Self) -> Result<ExtScalar> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        Ok(self.amplitudes.iter().zip(&other.amplitudes).map(|(a, b)| a * b).sum())
    }

    pub fn norm_sq(&self) -> ExtScalar {
        self.amplitudes.iter().map(ExtScalar::square).sum()
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.amplitudes.iter().map(ExtScalar::to_f64).collect()
    }
}

impl Ket<LinearForm> {
    /// `c0|0⟩ + c1|1⟩ + c2|2⟩` on a single-qutrit site.
    pub fn symbolic_input(site: Site) -> Self {
        assert_eq!(site.dim(), 3, "symbolic input lives on a single qutrit");
        Ket {
            site,
            amplitudes: (0..3).map(LinearForm::symbol).collect(),
        }
    }

    pub fn specialize(&self, c: &[ExtScalar; 3]) -> Ket<ExtScalar> {
        Ket {
            site: self.site,
            amplitudes: self.amplitudes.iter().map(|f| f.evaluate(c)).collect(),
        }
    }

    pub fn evaluate_complex(&self, c: &[Complex64; 3]) -> Vec<Complex64> {
        self.amplitudes.iter().map(|f| f.evaluate_complex(c)).collect()
    }

    /// Gram matrix `Q` with `‖ket‖² = Σ Q[j][l]·c_j·c_l` for real `c`.
    pub fn quadratic_form(&self) -> [[ExtScalar; 3]; 3] {
        std::array::from_fn(|j| {
            std::array::from_fn(|l| self.amplitudes.iter().map(|f| f.coef(j) * f.coef(l)).sum())
        })
    }
}

impl<A: Serialize> Serialize for Ket<A> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.amplitudes.serialize(serializer)
    }
}

impl fmt::Display for Ket<LinearForm> {
    /// Bra-ket rendering, e.g. `(√6/6)·c1|0⟩ + (√6/6)·c0|1⟩`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (idx, amp) in self.amplitudes.iter().enumerate() {
            if Amplitude::is_zero(amp) {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({amp})|{}⟩", basis_label(self.dim(), idx))?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

fn basis_label(dim: usize, idx: usize) -> String {
    match dim {
        3 => format!("{idx}"),
        9 => format!("{}{}", idx / 3, idx % 3),
        _ => format!("{}{}{}", idx / 9, (idx / 3) % 3, idx % 3),
    }
}

/// Kronecker product under the slowest-left index convention.
pub fn tensor<A, B>(x: &Ket<A>, y: &Ket<B>) -> Result<Ket<A::Output>>
where
    A: Amplitude + TensorAmplitude<B>,
    B: Amplitude,
{
    let site = x.site.tensor(y.site)?;
    let amplitudes = x
        .amplitudes
        .iter()
        .flat_map(|a| y.amplitudes.iter().map(move |b| a.tensor_mul(b)))
        .collect();
    Ok(Ket { site, amplitudes })
}

/// Contracts a constant `A1⊗A2` bra against an `A1⊗A2⊗B` ket, leaving a ket on `B`.
///
/// `out[b] = Σ_{a1,a2} bra[3·a1 + a2] · composite[9·a1 + 3·a2 + b]`.
pub fn partial_inner(bra: &Ket<ExtScalar>, composite: &Ket<LinearForm>) -> Result<Ket<LinearForm>> {
    if bra.dim() != 9 {
        return Err(Error::DimensionMismatch { expected: 9, found: bra.dim() });
    }
    if composite.dim() != 27 {
        return Err(Error::DimensionMismatch { expected: 27, found: composite.dim() });
    }
    if bra.site != Site::A1A2 || composite.site != Site::A1A2B {
        return Err(Error::SiteMismatch {
            left: bra.site.to_string(),
            right: composite.site.to_string(),
        });
    }
    let amplitudes = (0..3)
        .map(|b| {
            bra.amplitudes
                .iter()
                .enumerate()
                .filter(|(_, w)| !w.is_zero())
                .fold(LinearForm::default(), |acc, (pair, w)| {
                    acc.plus(&composite.amplitudes[3 * pair + b].scaled(w))
                })
        })
        .collect();
    Ok(Ket { site: Site::B, amplitudes })
}

/// Reads off the unique matrix `M` with `M·φ = s`, i.e. `M[b][j]` is the `c_j`
/// coefficient of amplitude `b`.
pub fn extract_gate(s: &Ket<LinearForm>) -> Result<Operator3> {
    if s.dim() != 3 {
        return Err(Error::DimensionMismatch { expected: 3, found: s.dim() });
    }
    Ok(Operator3::new(std::array::from_fn(|b| {
        std::array::from_fn(|j| s.amplitudes[b].coef(j).clone())
    })))
}

/// Where an operator came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    Oracle,
    Paper,
    DerivedRecovery,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Oracle => "oracle",
            Provenance::Paper => "paper",
            Provenance::DerivedRecovery => "derived_recovery",
        })
    }
}

pub type Matrix3 = [[ExtScalar; 3]; 3];

/// Exact 3×3 operator on a single qutrit, tagged with its channel and outcome.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Operator3 {
    pub channel: Option<usize>,
    pub outcome: Option<usize>,
    pub provenance: Provenance,
    pub entries: Matrix3,
}

impl Operator3 {
    pub fn new(entries: Matrix3) -> Self {
        Operator3 {
            channel: None,
            outcome: None,
            provenance: Provenance::Oracle,
            entries,
        }
    }

    pub fn from_fn(f: impl Fn(usize, usize) -> ExtScalar) -> Self {
        Self::new(std::array::from_fn(|r| std::array::from_fn(|c| f(r, c))))
    }

    pub fn zero() -> Self {
        Self::from_fn(|_, _| ExtScalar::zero())
    }

    pub fn identity() -> Self {
        Self::from_fn(|r, c| if r == c { ExtScalar::one() } else { ExtScalar::zero() })
    }

    /// `s·|row⟩⟨col|`.
    pub fn outer(s: ExtScalar, row: usize, col: usize) -> Self {
        let mut m = Self::zero();
        m.entries[row][col] = s;
        m
    }

    pub fn tagged(mut self, provenance: Provenance, channel: Option<usize>, outcome: Option<usize>) -> Self {
        self.provenance = provenance;
        self.channel = channel;
        self.outcome = outcome;
        self
    }

    pub fn entry(&self, row: usize, col: usize) -> &ExtScalar {
        &self.entries[row][col]
    }

    /// Matrix equality ignoring provenance and tags.
    pub fn same_matrix(&self, other: &Operator3) -> bool {
        self.entries == other.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(ExtScalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.same_matrix(&Operator3::identity())
    }

    pub fn apply<A: Amplitude>(&self, ket: &Ket<A>) -> Result<Ket<A>> {
        if ket.dim() != 3 {
            return Err(Error::DimensionMismatch { expected: 3, found: ket.dim() });
        }
        let amplitudes = (0..3)
            .map(|r| {
                (0..3).fold(A::zero(), |acc, c| acc.plus(&ket.amplitudes[c].scaled(&self.entries[r][c])))
            })
            .collect();
        Ok(Ket { site: ket.site, amplitudes })
    }

    /// Adjoint. Entries are real, so this is the transpose.
    pub fn dagger(&self) -> Operator3 {
        self.with_entries(std::array::from_fn(|r| std::array::from_fn(|c| self.entries[c][r].clone())))
    }

    pub fn mat_mul(&self, rhs: &Operator3) -> Operator3 {
        Operator3::from_fn(|r, c| (0..3).map(|k| &self.entries[r][k] * &rhs.entries[k][c]).sum())
    }

    pub fn mat_add(&self, rhs: &Operator3) -> Operator3 {
        Operator3::from_fn(|r, c| &self.entries[r][c] + &rhs.entries[r][c])
    }

    pub fn mat_sub(&self, rhs: &Operator3) -> Operator3 {
        Operator3::from_fn(|r, c| &self.entries[r][c] - &rhs.entries[r][c])
    }

    pub fn scaled(&self, s: &ExtScalar) -> Operator3 {
        self.with_entries(std::array::from_fn(|r| std::array::from_fn(|c| s * &self.entries[r][c])))
    }

    /// `Λ†Λ`.
    pub fn gram(&self) -> Operator3 {
        self.dagger().mat_mul(self)
    }

    pub fn trace(&self) -> ExtScalar {
        (0..3).map(|i| self.entries[i][i].clone()).sum()
    }

    /// Sum of squared entries.
    pub fn frobenius_sq(&self) -> ExtScalar {
        self.entries.iter().flatten().map(ExtScalar::square).sum()
    }

    fn minor(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> ExtScalar {
        let m = &self.entries;
        &m[r0][c0] * &m[r1][c1] - &m[r0][c1] * &m[r1][c0]
    }

    pub fn det(&self) -> ExtScalar {
        let m = &self.entries;
        &(&m[0][0] * &self.minor(1, 2, 1, 2)) - &(&m[0][1] * &self.minor(1, 2, 0, 2))
            + &m[0][2] * &self.minor(1, 2, 0, 1)
    }

    /// Exact rank from the determinant, the nine 2×2 minors and the entries.
    pub fn rank(&self) -> usize {
        if !self.det().is_zero() {
            return 3;
        }
        const PAIRS: [(usize, usize); 3] = [(0, 1), (0, 2), (1, 2)];
        let has_minor = PAIRS
            .iter()
            .any(|&(r0, r1)| PAIRS.iter().any(|&(c0, c1)| !self.minor(r0, r1, c0, c1).is_zero()));
        if has_minor {
            2
        } else if self.is_zero() {
            0
        } else {
            1
        }
    }

    /// Exact inverse via the adjugate, or `None` when singular.
    pub fn inverse(&self) -> Option<Operator3> {
        let inv_det = self.det().inv().ok()?;
        // adj[r][c] = cofactor of entry (c, r)
        let cof = |r: usize, c: usize| {
            let rows: Vec<usize> = (0..3).filter(|&i| i != r).collect();
            let cols: Vec<usize> = (0..3).filter(|&i| i != c).collect();
            let m = self.minor(rows[0], rows[1], cols[0], cols[1]);
            if (r + c).is_multiple_of(2) {
                m
            } else {
                -m
            }
        };
        Some(Operator3::from_fn(|r, c| &cof(c, r) * &inv_det))
    }

    pub fn to_f64(&self) -> [[f64; 3]; 3] {
        std::array::from_fn(|r| std::array::from_fn(|c| self.entries[r][c].to_f64()))
    }

    fn with_entries(&self, entries: Matrix3) -> Operator3 {
        Operator3 {
            channel: self.channel,
            outcome: self.outcome,
            provenance: self.provenance,
            entries,
        }
    }

    /// Bra-ket rendering such as `(√6/6)|0⟩⟨1| + (√6/6)|1⟩⟨0|`.
    pub fn braket(&self) -> String {
        let mut parts = Vec::new();
        for r in 0..3 {
            for c in 0..3 {
                let e = &self.entries[r][c];
                if !e.is_zero() {
                    parts.push(format!("({e})|{r}⟩⟨{c}|"));
                }
            }
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}

/// Coefficient prefix for a LaTeX sum: empty for 1, `-` for −1, parenthesized
/// when the value has more than one radical term.
fn latex_coefficient(c: &ExtScalar) -> String {
    if c.is_one() {
        String::new()
    } else if (-c).is_one() {
        "-".to_string()
    } else if c.terms().count() == 1 {
        c.to_latex()
    } else {
        format!("({})", c.to_latex())
    }
}

pub(crate) fn latex_sum(terms: Vec<String>) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (n, t) in terms.into_iter().enumerate() {
        match (n, t.strip_prefix('-')) {
            (0, _) => out.push_str(&t),
            (_, Some(rest)) => {
                out.push_str(" - ");
                out.push_str(rest);
            }
            (_, None) => {
                out.push_str(" + ");
                out.push_str(&t);
            }
        }
    }
    out
}

pub(crate) fn latex_term(c: &ExtScalar, symbol: &str) -> String {
    format!("{}{symbol}", latex_coefficient(c))
}

impl Operator3 {
    /// LaTeX bra-ket rendering, e.g. `\frac{1}{3}|0\rangle\langle 0|`.
    pub fn to_latex(&self) -> String {
        let mut terms = Vec::new();
        for r in 0..3 {
            for c in 0..3 {
                let e = &self.entries[r][c];
                if !e.is_zero() {
                    terms.push(latex_term(e, &format!("|{r}\\rangle\\langle {c}|")));
                }
            }
        }
        latex_sum(terms)
    }
}

impl Ket<LinearForm> {
    /// LaTeX rendering with one term per nonzero `c_j|b⟩` pair.
    pub fn to_latex(&self) -> String {
        let mut terms = Vec::new();
        for (idx, amp) in self.amplitudes.iter().enumerate() {
            for j in 0..3 {
                let c = amp.coef(j);
                if !c.is_zero() {
                    terms.push(latex_term(c, &format!("c_{j}|{}\\rangle", basis_label(self.dim(), idx))));
                }
            }
        }
        latex_sum(terms)
    }
}

impl fmt::Display for Operator3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.braket())
    }
}
