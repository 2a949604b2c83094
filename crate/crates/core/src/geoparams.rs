//! Canonical flats, integral gradings and the orbit stratification of the
//! geometric parameter space `X(𝕆, G^L)` in the point and `ℙ¹` cases.

use std::fmt;

use num_traits::ToPrimitive;

use crate::datum::{BasedRootDatum, CartanVector, Family};
use crate::error::{Error, Result};
use crate::lparams::{
    component_group, enumerate_parameters, is_normalized, is_positive_half_integer, normalize_pgl2,
    pgl2_lambda, validate_parameter, CompleteLanglandsParameter, ExtendedElement,
    FiniteAbelianGroup, LGroup, LanglandsParameter,
};
use crate::scalar::{ExpScalar, GaussianRational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedRoot {
    pub root: Vec<i64>,
    pub grade: i64,
}

/// Roots of `𝔪(λ)` with their eigenvalues under `ad λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedSubsystem {
    lambda: CartanVector,
    roots: Vec<GradedRoot>,
}

impl GradedSubsystem {
    pub fn lambda(&self) -> &CartanVector {
        &self.lambda
    }

    pub fn roots(&self) -> &[GradedRoot] {
        &self.roots
    }

    /// Roots of `𝔩(λ)`.
    pub fn levi_roots(&self) -> Vec<&GradedRoot> {
        self.roots.iter().filter(|r| r.grade == 0).collect()
    }

    /// Roots of `𝔲(λ)`.
    pub fn nilradical_roots(&self) -> Vec<&GradedRoot> {
        self.roots.iter().filter(|r| r.grade > 0).collect()
    }

    /// Roots of `𝔭(λ) = 𝔩(λ) + 𝔲(λ)`.
    pub fn parabolic_roots(&self) -> Vec<&GradedRoot> {
        self.roots.iter().filter(|r| r.grade >= 0).collect()
    }

    /// `P(λ)` is a Borel of `M(λ)`: no roots of grade 0.
    pub fn is_borel(&self) -> bool {
        self.levi_roots().is_empty()
    }

    /// Closure under addition inside the subsystem, with additive grades.
    pub fn is_closed(&self) -> bool {
        self.roots.iter().all(|a| {
            self.roots.iter().all(|b| {
                let sum: Vec<i64> = a.root.iter().zip(&b.root).map(|(x, y)| x + y).collect();
                match self.roots.iter().find(|r| r.root == sum) {
                    Some(r) => r.grade == a.grade + b.grade,
                    None => true,
                }
            })
        })
    }
}

/// Roots `α` of `G∨` with `⟨α, λ⟩ ∈ ℤ`, graded by that integer.
pub fn integral_graded_system(
    dual: &BasedRootDatum,
    lambda: &CartanVector,
) -> Result<GradedSubsystem> {
    let mut roots = Vec::new();
    for r in dual.roots() {
        let v = dual.pairing(&r.root, lambda)?;
        if v.is_integer() {
            let grade =
                v.re.to_integer().to_i64().ok_or_else(|| {
                    Error::InvalidParameter("grade does not fit in 64 bits".into())
                })?;
            roots.push(GradedRoot {
                root: r.root,
                grade,
            });
        }
    }
    Ok(GradedSubsystem {
        lambda: lambda.clone(),
        roots,
    })
}

/// `F(λ) = λ + 𝔲(λ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalFlat {
    base: CartanVector,
    u_roots: Vec<Vec<i64>>,
}

impl CanonicalFlat {
    pub fn of(dual: &BasedRootDatum, lambda: &CartanVector) -> Result<Self> {
        let sys = integral_graded_system(dual, lambda)?;
        Ok(Self {
            base: lambda.clone(),
            u_roots: sys
                .nilradical_roots()
                .into_iter()
                .map(|r| r.root.clone())
                .collect(),
        })
    }

    pub fn base(&self) -> &CartanVector {
        &self.base
    }

    pub fn u_roots(&self) -> &[Vec<i64>] {
        &self.u_roots
    }

    /// `exp(2πi·F)`, read off at the base point.
    pub fn exp_value(&self) -> Vec<ExpScalar> {
        self.base.exp()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeometricParameter {
    pub y: ExtendedElement,
    pub flat: CanonicalFlat,
}

pub fn to_geometric(group: &LGroup, p: &LanglandsParameter) -> Result<GeometricParameter> {
    Ok(GeometricParameter {
        y: p.y().clone(),
        flat: CanonicalFlat::of(group.dual(), p.lambda())?,
    })
}

/// A `G∨`-orbit on `X(𝕆, G^L)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stratum {
    pub id: String,
    pub dimension: usize,
    pub fundamental_group: FiniteAbelianGroup,
    /// Strata in the closure, other than this one.
    pub boundary: Vec<String>,
    /// The `y` of the corresponding Langlands parameter class.
    pub representative: ExtendedElement,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StratumPoset {
    lambda: CartanVector,
    strata: Vec<Stratum>,
}

impl StratumPoset {
    pub fn lambda(&self) -> &CartanVector {
        &self.lambda
    }

    pub fn strata(&self) -> &[Stratum] {
        &self.strata
    }

    pub fn get(&self, id: &str) -> Result<&Stratum> {
        self.strata
            .iter()
            .find(|s| s.id == id)
            .ok_or_else(|| Error::InvalidParameter(format!("no stratum named {id}")))
    }

    /// `a ⊆ closure(b)`.
    pub fn closure_leq(&self, a: &str, b: &str) -> bool {
        a == b || self.get(b).is_ok_and(|s| s.boundary.iter().any(|x| x == a))
    }

    /// The curve stratum whose closure contains the point stratum `id`.
    pub fn curve_through(&self, id: &str) -> Option<&Stratum> {
        self.strata
            .iter()
            .find(|s| s.boundary.iter().any(|x| x == id))
    }

    /// The stratum carrying the class of `p`.
    pub fn stratum_of(&self, group: &LGroup, p: &LanglandsParameter) -> Option<&Stratum> {
        let q = if group.is_pgl2() {
            normalize_pgl2(p)
        } else {
            p.clone()
        };
        self.strata.iter().find(|s| {
            let r = &s.representative;
            if r.is_diagonal() != q.y().is_diagonal() {
                return false;
            }
            // antidiagonal classes are unique for a fixed λ
            !r.is_diagonal() || r.torus().exp() == q.y().torus().exp()
        })
    }
}

/// Strata of `X(𝕆, G^L)` for `𝕆 = G∨·λ`.
///
/// `M(λ)/P(λ)` is a point unless `λ` is integral and regular, when it is
/// `ℙ¹`; then `K(y)` is either all of `G∨` (one orbit) or `H∨` (two poles and
/// their complement).
pub fn stratify_orbit(group: &LGroup, lambda: &CartanVector) -> Result<StratumPoset> {
    let dual = group.dual();
    if lambda.len() != dual.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: dual.ambient_dim(),
            found: lambda.len(),
        });
    }
    match dual.family() {
        Family::Torus(n) => stratify_torus(group, n, lambda),
        Family::Sl(2) => stratify_sl2(group, lambda),
        _ => Err(Error::UnsupportedGeometry(format!(
            "stratification is implemented for SL(2) and torus duals, not {}",
            dual.name()
        ))),
    }
}

fn point(id: String, y: ExtendedElement) -> Stratum {
    Stratum {
        id,
        dimension: 0,
        fundamental_group: FiniteAbelianGroup::trivial(),
        boundary: vec![],
        representative: y,
    }
}

fn stratify_torus(group: &LGroup, n: usize, lambda: &CartanVector) -> Result<StratumPoset> {
    // y = exp(2πi v)δ with 2v ≡ λ; T∨ acts trivially, so each of the 2ⁿ
    // square roots is its own point orbit
    if n > 8 {
        return Err(Error::UnsupportedGeometry(format!(
            "torus of rank {n} exceeds 8"
        )));
    }
    let half = lambda.half();
    let mut strata = Vec::new();
    for mask in 0..(1u32 << n) {
        let shift = CartanVector(
            (0..n)
                .map(|k| GaussianRational::ratio(i64::from((mask >> k) & 1), 2))
                .collect(),
        );
        let y = ExtendedElement::diagonal(&half + &shift);
        validate_parameter(group, y.clone(), lambda.clone())?;
        let bits: String = (0..n)
            .map(|k| if (mask >> k) & 1 == 1 { '-' } else { '+' })
            .collect();
        let id = if n == 0 {
            "pt".to_string()
        } else {
            format!("T{bits}")
        };
        strata.push(point(id, y));
    }
    Ok(StratumPoset {
        lambda: lambda.clone(),
        strata,
    })
}

fn stratify_sl2(group: &LGroup, lambda: &CartanVector) -> Result<StratumPoset> {
    if !(&lambda[0] + &lambda[1]).is_zero() {
        return Err(Error::InvalidParameter(format!(
            "{lambda} is not traceless"
        )));
    }
    let a = if is_normalized(&lambda[0]) {
        lambda[0].clone()
    } else {
        -&lambda[0]
    };
    let params = enumerate_parameters(group, &a)?;
    let twice = &a + &a;
    let strata = if is_positive_half_integer(&a) {
        // K(y) = H∨ on ℙ¹: two poles and the open orbit H∨/{±Id}
        let mut n = point("N".into(), params[0].y().clone());
        let mut s = point("S".into(), params[1].y().clone());
        n.fundamental_group = component_group(group, &params[0])?;
        s.fundamental_group = component_group(group, &params[1])?;
        let u = Stratum {
            id: "U".into(),
            dimension: 1,
            fundamental_group: component_group(group, &params[2])?,
            boundary: vec!["N".into(), "S".into()],
            representative: params[2].y().clone(),
        };
        vec![n, s, u]
    } else {
        // y = ±Id when λ is integral and regular: K(y) = G∨ is transitive on ℙ¹
        let dimension = usize::from(twice.is_integer() && !a.is_zero());
        params
            .iter()
            .enumerate()
            .map(|(k, p)| {
                let mut st = point(format!("Y{}", k + 1), p.y().clone());
                st.dimension = dimension;
                st
            })
            .collect()
    };
    Ok(StratumPoset {
        lambda: pgl2_lambda(&a),
        strata,
    })
}

/// `(S, χ)`: a stratum with a character of its equivariant fundamental group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompleteGeometricParameter {
    pub stratum: Stratum,
    pub character: u64,
}

impl CompleteGeometricParameter {
    pub fn character_label(&self) -> String {
        self.stratum
            .fundamental_group
            .character_label(self.character)
    }
}

impl fmt::Display for CompleteGeometricParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.stratum.id, self.character_label())
    }
}

/// Complete geometric parameters ordered by dimension, id, then character.
pub fn complete_parameters_of(poset: &StratumPoset) -> Vec<CompleteGeometricParameter> {
    let mut strata: Vec<&Stratum> = poset.strata.iter().collect();
    strata.sort_by(|a, b| (a.dimension, &a.id).cmp(&(b.dimension, &b.id)));
    strata
        .into_iter()
        .flat_map(|s| {
            (0..s.fundamental_group.order()).map(move |character| CompleteGeometricParameter {
                stratum: s.clone(),
                character,
            })
        })
        .collect()
}

/// The complete Langlands parameter matching `(S, χ)`: the representative
/// of `S` at the poset's `λ`, with `χ` as the component-group character.
pub fn langlands_of(
    group: &LGroup,
    poset: &StratumPoset,
    c: &CompleteGeometricParameter,
) -> Result<CompleteLanglandsParameter> {
    let p = validate_parameter(
        group,
        c.stratum.representative.clone(),
        poset.lambda.clone(),
    )?;
    CompleteLanglandsParameter::new(group, p, c.character)
}
