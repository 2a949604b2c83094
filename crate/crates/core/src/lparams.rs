//! Langlands parameters as pairs `(y, λ)` with `y² = exp(2πiλ)`.
//!
//! Parameters are kept in torus-aligned form: `λ` lies in the diagonal Cartan
//! `𝔥∨` and `y = n_w·exp(2πi v)·δ` normalizes `H∨`, so `[λ, Ad(y)λ] = 0`
//! holds automatically. Only product L-groups `G∨ × Γ` are modelled.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::datum::{
    is_involution, tits_sign, tits_square_exponent, BasedRootDatum, CartanVector, Family,
};
use crate::error::{Error, Result};
use crate::linalg;
use crate::scalar::{rat, ExpScalar, GaussianRational};

/// An L-group `G∨ ⋊ Γ`, described by the based root datum of `G∨` and the
/// permutation `θ` by which `δ` acts on the diagonal torus. `θ = 1` is the
/// product L-group; the factor swap on `GL(n) × GL(n)` is the L-group of
/// `GL(n, ℂ)` as a real group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LGroup {
    dual: BasedRootDatum,
    theta: Vec<usize>,
}

impl LGroup {
    pub fn from_dual(dual: BasedRootDatum) -> Self {
        let theta = (0..dual.ambient_dim()).collect();
        Self { dual, theta }
    }

    /// The inner class of `PGL(2)`; `G∨ = SL(2, ℂ)`.
    pub fn pgl2() -> Self {
        Self::from_dual(BasedRootDatum::pgl(2).dual())
    }

    pub fn gl(n: usize) -> Self {
        Self::from_dual(BasedRootDatum::gl(n))
    }

    pub fn torus(n: usize) -> Self {
        Self::from_dual(BasedRootDatum::torus(n))
    }

    /// `(GL(n) × GL(n)) ⋊ Γ` with `δ` swapping the factors.
    pub fn complex_gl(n: usize) -> Self {
        Self {
            dual: BasedRootDatum::gl_pair(n),
            theta: (0..2 * n).map(|k| (k + n) % (2 * n)).collect(),
        }
    }

    pub fn dual(&self) -> &BasedRootDatum {
        &self.dual
    }

    pub fn theta(&self) -> &[usize] {
        &self.theta
    }

    pub fn is_product(&self) -> bool {
        self.theta.iter().enumerate().all(|(k, &t)| k == t)
    }

    pub fn rank(&self) -> usize {
        self.dual.ambient_dim()
    }

    pub fn is_pgl2(&self) -> bool {
        self.dual.family() == Family::Sl(2)
    }

    pub fn name(&self) -> String {
        if self.is_product() {
            format!("{}×Γ", self.dual.name())
        } else {
            format!("({})⋊Γ", self.dual.name())
        }
    }

    /// The Weyl element `w` with `Ad(y) = w∘θ` on the torus.
    pub fn weyl_part(&self, y: &ExtendedElement) -> Vec<usize> {
        // act[k] = w[θ[k]] and θ is an involution
        (0..y.weyl.len()).map(|j| y.weyl[self.theta[j]]).collect()
    }

    /// `exp(2πi·x)·y`, for `x` in the Cartan.
    pub fn left_torus_multiply(&self, y: &ExtendedElement, x: &CartanVector) -> ExtendedElement {
        // exp(2πi x)·n_w = n_w·exp(2πi w⁻¹x), and w is an involution
        ExtendedElement {
            weyl: y.weyl.clone(),
            torus: &x.permute(&self.weyl_part(y)) + &y.torus,
            gamma: y.gamma,
        }
    }

    /// `u` with `y² = exp(2πi·u)`: `u = t_w + v + Ad(y)v`.
    pub fn square_exponent(&self, y: &ExtendedElement) -> CartanVector {
        let t = tits_square_exponent(&self.weyl_part(y));
        &(&t + &y.torus) + &y.act(&y.torus)
    }
}

/// `y = n_w · exp(2πi·v) · δ^γ` in `G∨ ⋊ Γ`, stored with the full
/// permutation by which `Ad(y)` acts on the diagonal torus (`w∘θ`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExtendedElement {
    weyl: Vec<usize>,
    torus: CartanVector,
    gamma: bool,
}

impl ExtendedElement {
    pub fn new(weyl: Vec<usize>, torus: CartanVector, gamma: bool) -> Result<Self> {
        if weyl.len() != torus.len() {
            return Err(Error::DimensionMismatch {
                expected: weyl.len(),
                found: torus.len(),
            });
        }
        if !is_involution(&weyl) {
            return Err(Error::InvalidParameter(format!(
                "Weyl part {weyl:?} is not an involution"
            )));
        }
        Ok(Self { weyl, torus, gamma })
    }

    /// `exp(2πi·v)·δ`.
    pub fn diagonal(torus: CartanVector) -> Self {
        let n = torus.len();
        Self {
            weyl: (0..n).collect(),
            torus,
            gamma: true,
        }
    }

    /// `δ` itself.
    pub fn delta(n: usize) -> Self {
        Self::diagonal(CartanVector::zero(n))
    }

    pub fn weyl(&self) -> &[usize] {
        &self.weyl
    }

    pub fn torus(&self) -> &CartanVector {
        &self.torus
    }

    pub fn gamma(&self) -> bool {
        self.gamma
    }

    pub fn is_diagonal(&self) -> bool {
        self.weyl.iter().enumerate().all(|(k, &p)| k == p)
    }

    /// `Ad(y)·x`.
    pub fn act(&self, x: &CartanVector) -> CartanVector {
        x.permute(&self.weyl)
    }

    /// The `G∨`-component as a monomial matrix (product L-groups).
    pub fn matrix(&self) -> MonomialMatrix {
        let n = self.weyl.len();
        let mut entries = vec![vec![ExpScalar::zero(); n]; n];
        for k in 0..n {
            let sign = GaussianRational::from_int(tits_sign(&self.weyl, k));
            entries[self.weyl[k]][k] = ExpScalar::new(sign, self.torus[k].clone());
        }
        MonomialMatrix(entries)
    }
}

/// A matrix with at most one nonzero monomial entry per row and column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialMatrix(pub Vec<Vec<ExpScalar>>);

impl fmt::Display for MonomialMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .0
            .iter()
            .map(|r| {
                let cells: Vec<String> = r.iter().map(ToString::to_string).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LanglandsParameter {
    y: ExtendedElement,
    lambda: CartanVector,
}

impl LanglandsParameter {
    pub fn y(&self) -> &ExtendedElement {
        &self.y
    }

    pub fn lambda(&self) -> &CartanVector {
        &self.lambda
    }

    /// `Ad(y)·λ`.
    pub fn twisted_lambda(&self) -> CartanVector {
        self.y.act(&self.lambda)
    }
}

/// Checks `y² = exp(2πi·λ)` using the Tits square table and builds the parameter.
pub fn validate_parameter(
    group: &LGroup,
    y: ExtendedElement,
    lambda: CartanVector,
) -> Result<LanglandsParameter> {
    if !y.gamma {
        return Err(Error::NotInNonIdentityComponent);
    }
    let n = group.rank();
    for len in [y.weyl.len(), lambda.len()] {
        if len != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: len,
            });
        }
    }
    let datum = group.dual();
    let w = group.weyl_part(&y);
    if !datum.weyl_contains(&w) {
        return Err(Error::InvalidParameter(format!(
            "{w:?} is not in the Weyl group of {}",
            datum.name()
        )));
    }
    if !group.is_product() && w.iter().enumerate().any(|(k, &p)| k != p) {
        return Err(Error::UnsupportedGroup(format!(
            "only y with trivial Weyl part are modelled for {}",
            group.name()
        )));
    }
    if !datum.is_coweight(&lambda) || !datum.is_coweight(&y.torus) {
        return Err(Error::InvalidParameter(format!(
            "λ and the torus part of y must lie in the Cartan of {}",
            datum.name()
        )));
    }
    let square = group.square_exponent(&y).exp();
    let target = lambda.exp();
    if square != target {
        return Err(Error::SquareMismatch(format!(
            "y² = diag({}) but exp(2πiλ) = diag({})",
            join(&square),
            join(&target)
        )));
    }
    Ok(LanglandsParameter { y, lambda })
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

/// `λ + Ad(y)λ ∈ X_*(H∨) ⊗ iℝ`.
pub fn is_tempered(p: &LanglandsParameter) -> bool {
    (&p.lambda + &p.twisted_lambda()).has_zero_real_part()
}

/// `Ad(y)` acts by inversion on `H∨`, i.e. `w = −1` on the cocharacter lattice.
pub fn is_discrete_series_packet(group: &LGroup, p: &LanglandsParameter) -> bool {
    let datum = group.dual();
    let modulo = datum.coweight_quotient();
    datum.coweight_basis().iter().all(|b| {
        let v = CartanVector(b.iter().cloned().map(GaussianRational::real).collect());
        let s = &p.y.act(&v) + &v;
        let s: Vec<_> = s.iter().map(|x| x.re.clone()).collect();
        linalg::in_span(&modulo, &s)
    })
}

/// A finite abelian group by its elementary divisors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteAbelianGroup {
    divisors: Vec<u64>,
}

impl FiniteAbelianGroup {
    pub fn trivial() -> Self {
        Self { divisors: vec![] }
    }

    pub fn cyclic(n: u64) -> Self {
        if n <= 1 {
            Self::trivial()
        } else {
            Self { divisors: vec![n] }
        }
    }

    pub fn divisors(&self) -> &[u64] {
        &self.divisors
    }

    pub fn order(&self) -> u64 {
        self.divisors.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.divisors.is_empty()
    }

    /// Characters are indexed `0..order`, with 0 the trivial character.
    pub fn character_label(&self, k: u64) -> String {
        match (self.order(), k) {
            (_, 0) => "triv".into(),
            (2, 1) => "sgn".into(),
            _ => format!("chi{k}"),
        }
    }
}

impl fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.divisors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.divisors.iter().map(|d| format!("Z/{d}")).collect();
        write!(f, "{}", parts.join("×"))
    }
}

/// Component group of `Z_{G∨}(y, λ)`.
///
/// For `GL(n)`, `GL(n) × GL(n)` and tori every such centralizer is connected
/// (it is the unit group of a commutant algebra, or the torus itself). For `SL(2)` the
/// centralizer is `H∨` or `G∨` when `y` is diagonal and `{±Id}` when `y` is
/// antidiagonal.
pub fn component_group(group: &LGroup, p: &LanglandsParameter) -> Result<FiniteAbelianGroup> {
    match group.dual().family() {
        Family::Gl(_) | Family::GlPair(_) | Family::Torus(_) => Ok(FiniteAbelianGroup::trivial()),
        Family::Sl(2) => Ok(if p.y.is_diagonal() {
            FiniteAbelianGroup::trivial()
        } else {
            FiniteAbelianGroup::cyclic(2)
        }),
        _ => Err(Error::UnsupportedGroup(format!(
            "component groups are only tabulated for GL(n), tori and SL(2), not {}",
            group.dual().name()
        ))),
    }
}

/// The `Z_{G∨}(y,λ)` column of the PGL(2) tables.
pub fn centralizer_label(group: &LGroup, p: &LanglandsParameter) -> Result<String> {
    if !group.is_pgl2() {
        return Err(Error::UnsupportedGroup(group.name()));
    }
    Ok(if !p.y.is_diagonal() {
        "{±Id}".into()
    } else if p.lambda.is_zero() {
        "G∨".into()
    } else {
        "H∨".into()
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CompleteLanglandsParameter {
    param: LanglandsParameter,
    tau: u64,
}

impl CompleteLanglandsParameter {
    pub fn new(group: &LGroup, param: LanglandsParameter, tau: u64) -> Result<Self> {
        let a = component_group(group, &param)?;
        if tau >= a.order() {
            return Err(Error::InvalidParameter(format!(
                "character index {tau} out of range for component group {a}"
            )));
        }
        Ok(Self { param, tau })
    }

    pub fn param(&self) -> &LanglandsParameter {
        &self.param
    }

    pub fn tau(&self) -> u64 {
        self.tau
    }
}

/// All complete parameters over a list of parameters, characters in index order.
pub fn complete_parameters(
    group: &LGroup,
    params: &[LanglandsParameter],
) -> Result<Vec<CompleteLanglandsParameter>> {
    let mut out = Vec::new();
    for p in params {
        let a = component_group(group, p)?;
        for tau in 0..a.order() {
            out.push(CompleteLanglandsParameter {
                param: p.clone(),
                tau,
            });
        }
    }
    Ok(out)
}

/// `a ∈ {1/2, 3/2, 5/2, …}`.
pub fn is_positive_half_integer(a: &GaussianRational) -> bool {
    let twice = &a.re * rat(2, 1);
    a.is_real() && a.re.is_positive() && twice.is_integer() && !a.re.is_integer()
}

/// `Re(a) > 0`, or `Re(a) = 0` and `Im(a) ≥ 0`.
pub fn is_normalized(a: &GaussianRational) -> bool {
    a.re.is_positive() || (a.re.is_zero() && !a.im.is_negative())
}

fn check_normalized(a: &GaussianRational) -> Result<()> {
    if is_normalized(a) {
        Ok(())
    } else {
        Err(Error::NormalizationViolated(format!(
            "need Re(a) > 0, or Re(a) = 0 and Im(a) ≥ 0; got a = {a}"
        )))
    }
}

/// `λ = diag(a, −a)`.
pub fn pgl2_lambda(a: &GaussianRational) -> CartanVector {
    CartanVector(vec![a.clone(), -a])
}

/// `G∨`-conjugacy classes of parameters `(y, diag(a,−a))` for the PGL(2)
/// inner class, in table order.
pub fn enumerate_parameters(
    group: &LGroup,
    a: &GaussianRational,
) -> Result<Vec<LanglandsParameter>> {
    if !group.is_pgl2() {
        return Err(Error::UnsupportedGroup(format!(
            "enumeration is tabulated for the PGL(2) inner class only, not {}",
            group.name()
        )));
    }
    check_normalized(a)?;
    let lambda = pgl2_lambda(a);
    let ys = if is_positive_half_integer(a) {
        vec![
            ExtendedElement::diagonal(CartanVector::from_rationals(&[(1, 4), (-1, 4)])),
            ExtendedElement::diagonal(CartanVector::from_rationals(&[(-1, 4), (1, 4)])),
            ExtendedElement::new(vec![1, 0], CartanVector::zero(2), true)?,
        ]
    } else {
        let half = lambda.half();
        let minus = CartanVector::from_rationals(&[(1, 2), (-1, 2)]);
        vec![
            ExtendedElement::diagonal(half.clone()),
            ExtendedElement::diagonal(&half + &minus),
        ]
    };
    ys.into_iter()
        .map(|y| validate_parameter(group, y, lambda.clone()))
        .collect()
}

/// Brings a PGL(2)-class parameter to the normalized representative
/// `λ = diag(a, −a)` with `Re(a) > 0`, or `Re(a) = 0` and `Im(a) ≥ 0`.
pub fn normalize_pgl2(p: &LanglandsParameter) -> LanglandsParameter {
    let a = &p.lambda[0];
    if is_normalized(a) {
        return p.clone();
    }
    // conjugate by n_s: λ ↦ −λ, and the torus part of y is swapped
    let s = [1usize, 0];
    let torus = p.y.torus.permute(&s);
    LanglandsParameter {
        y: ExtendedElement {
            weyl: p.y.weyl.clone(),
            torus,
            gamma: true,
        },
        lambda: p.lambda.permute(&s),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RealForm {
    Split,
    Compact,
}

impl RealForm {
    pub fn group_name(self) -> &'static str {
        match self {
            RealForm::Split => "G_s",
            RealForm::Compact => "G_c",
        }
    }
}

impl fmt::Display for RealForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RealForm::Split => "split",
            RealForm::Compact => "compact",
        })
    }
}

/// One entry of an L-packet column: `None` for an empty packet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PacketLabel {
    pub real_form: RealForm,
    pub description: Option<String>,
    pub infinitesimal_character: CartanVector,
}

impl PacketLabel {
    pub fn text(&self) -> String {
        self.description.clone().unwrap_or_else(|| "∅".into())
    }

    /// `triv`/`sgn` for one-dimensional representations, else the description.
    pub fn short(&self) -> String {
        match self.description.as_deref() {
            Some(
                "spherical finite-dimensional of dimension 1" | "finite-dimensional of dimension 1",
            ) => "triv".into(),
            Some("non-spherical finite-dimensional of dimension 1") => "sgn".into(),
            Some(d) => d.into(),
            None => "∅".into(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Pgl2Row {
    SphericalFinite,
    NonSphericalFinite,
    DiscreteSeries,
    SphericalPrincipal,
    NonSphericalPrincipal,
}

fn pgl2_row(p: &LanglandsParameter) -> (Pgl2Row, GaussianRational) {
    let p = normalize_pgl2(p);
    let a = p.lambda[0].clone();
    if !p.y.is_diagonal() {
        return (Pgl2Row::DiscreteSeries, a);
    }
    let y0 = ExpScalar::exp(p.y.torus[0].clone());
    if is_positive_half_integer(&a) {
        let row = if y0 == ExpScalar::scalar(GaussianRational::i()) {
            Pgl2Row::SphericalFinite
        } else {
            Pgl2Row::NonSphericalFinite
        };
        (row, a)
    } else {
        let row = if y0 == ExpScalar::exp(a.scale(&rat(1, 2))) {
            Pgl2Row::SphericalPrincipal
        } else {
            Pgl2Row::NonSphericalPrincipal
        };
        (row, a)
    }
}

fn fin_dim(a: &GaussianRational) -> GaussianRational {
    a + &GaussianRational::ratio(1, 2)
}

/// The `[σ]`-level L-packet of the parameter underlying `c`: one label per
/// real form, following the PGL(2) tables.
pub fn packet_labels(group: &LGroup, c: &CompleteLanglandsParameter) -> Result<Vec<PacketLabel>> {
    if !group.is_pgl2() {
        return Err(Error::UnsupportedGroup(format!(
            "packet fixtures exist for the PGL(2) inner class only, not {}",
            group.name()
        )));
    }
    let (row, a) = pgl2_row(&c.param);
    let (split, compact) = match row {
        Pgl2Row::SphericalFinite => (
            format!("spherical finite-dimensional of dimension {}", fin_dim(&a)),
            None,
        ),
        Pgl2Row::NonSphericalFinite => (
            format!(
                "non-spherical finite-dimensional of dimension {}",
                fin_dim(&a)
            ),
            None,
        ),
        Pgl2Row::DiscreteSeries => (
            format!("discrete series of infinitesimal character {a}"),
            Some(format!("finite-dimensional of dimension {}", fin_dim(&a))),
        ),
        Pgl2Row::SphericalPrincipal => (
            format!("spherical principal series of infinitesimal character {a}"),
            None,
        ),
        Pgl2Row::NonSphericalPrincipal => (
            format!("non-spherical principal series of infinitesimal character {a}"),
            None,
        ),
    };
    let lambda = c.param.lambda.clone();
    Ok(vec![
        PacketLabel {
            real_form: RealForm::Split,
            description: Some(split),
            infinitesimal_character: lambda.clone(),
        },
        PacketLabel {
            real_form: RealForm::Compact,
            description: compact,
            infinitesimal_character: lambda,
        },
    ])
}

/// The single representation `π(φ, τ)`: the trivial character picks the
/// split-form member, the sign character of `{±Id}` the compact-form member.
pub fn representation_of(group: &LGroup, c: &CompleteLanglandsParameter) -> Result<PacketLabel> {
    let labels = packet_labels(group, c)?;
    let form = if c.tau == 0 {
        RealForm::Split
    } else {
        RealForm::Compact
    };
    labels
        .into_iter()
        .find(|l| l.real_form == form && l.description.is_some())
        .ok_or_else(|| Error::UnsupportedFixture(format!("no {form} member for τ = {}", c.tau)))
}
