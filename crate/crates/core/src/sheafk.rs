//! The Grothendieck group of equivariant constructible sheaves on a stratum
//! poset: standard (`μ`) and irreducible (`P`) bases, the decomposition
//! matrices `m_g` and `m_r`, and characteristic cycles on curves.

use std::fmt;

use crate::error::{Error, Result};
use crate::geoparams::{complete_parameters_of, CompleteGeometricParameter, StratumPoset};
use crate::linalg;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Basis {
    Mu,
    P,
}

/// Integer coefficients over the complete parameters of a poset, in
/// `complete_parameters_of` order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KClass {
    pub basis: Basis,
    pub coeffs: Vec<i64>,
}

/// A square integer matrix with a row/column legend.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChangeOfBasis {
    pub labels: Vec<String>,
    pub dims: Vec<usize>,
    pub rows: Vec<Vec<i64>>,
}

impl ChangeOfBasis {
    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn inverse(&self) -> Option<ChangeOfBasis> {
        Some(ChangeOfBasis {
            labels: self.labels.clone(),
            dims: self.dims.clone(),
            rows: linalg::integer_inverse(&self.rows)?,
        })
    }

    pub fn is_identity(&self) -> bool {
        self.rows
            .iter()
            .enumerate()
            .all(|(i, r)| r.iter().enumerate().all(|(j, &x)| x == i64::from(i == j)))
    }

    /// Ones on the diagonal; every nonzero off-diagonal entry links strata of
    /// different dimension, all in the same direction.
    pub fn is_unitriangular(&self) -> bool {
        (0..self.size()).all(|i| self.rows[i][i] == 1) && self.is_triangular_by_dimension()
    }

    fn is_triangular_by_dimension(&self) -> bool {
        // either all off-diagonal entries point down in dimension or all point up
        let n = self.size();
        let mut down = true;
        let mut up = true;
        for i in 0..n {
            for j in 0..n {
                if i != j && self.rows[i][j] != 0 {
                    down &= self.dims[i] > self.dims[j];
                    up &= self.dims[i] < self.dims[j];
                }
            }
        }
        down || up
    }
}

impl fmt::Display for ChangeOfBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (l, r) in self.labels.iter().zip(&self.rows) {
            let cells: Vec<String> = r.iter().map(|x| format!("{x:>2}")).collect();
            writeln!(f, "{l:<10} [{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

fn position(params: &[CompleteGeometricParameter], id: &str, chi: u64) -> Result<usize> {
    params
        .iter()
        .position(|c| c.stratum.id == id && c.character == chi)
        .ok_or_else(|| Error::InvalidParameter(format!("no complete parameter ({id}, {chi})")))
}

fn check_supported(poset: &StratumPoset) -> Result<()> {
    for s in poset.strata() {
        if s.dimension > 1 {
            return Err(Error::UnsupportedGeometry(format!(
                "stratum {} has dimension {}",
                s.id, s.dimension
            )));
        }
        if s.fundamental_group.order() > 2 {
            return Err(Error::UnsupportedGeometry(format!(
                "stratum {} carries local systems beyond rank one sign characters",
                s.id
            )));
        }
    }
    Ok(())
}

/// `P(S, χ)` in the `μ` basis.
///
/// A point stratum has `P = μ`. On a curve stratum, `j_!𝓛_χ` differs from the
/// intermediate extension only at punctures where `𝓛_χ` has trivial local
/// monodromy; a rank-one local system on `ℙ¹` minus two points has the same
/// monodromy at both, so the trivial character picks up `−μ(x, triv)` at every
/// boundary point and the sign character picks up nothing.
pub fn ic_class_in_mu_basis(poset: &StratumPoset, id: &str, chi: u64) -> Result<KClass> {
    check_supported(poset)?;
    let params = complete_parameters_of(poset);
    let mut coeffs = vec![0; params.len()];
    coeffs[position(&params, id, chi)?] = 1;
    let s = poset.get(id)?;
    if s.dimension == 1 && chi == 0 {
        for x in &s.boundary {
            coeffs[position(&params, x, 0)?] -= 1;
        }
    }
    Ok(KClass {
        basis: Basis::Mu,
        coeffs,
    })
}

/// Rows are the `P` classes in the `μ` basis.
fn p_in_mu(poset: &StratumPoset) -> Result<ChangeOfBasis> {
    let params = complete_parameters_of(poset);
    let rows = params
        .iter()
        .map(|c| Ok(ic_class_in_mu_basis(poset, &c.stratum.id, c.character)?.coeffs))
        .collect::<Result<Vec<_>>>()?;
    Ok(ChangeOfBasis {
        labels: params.iter().map(ToString::to_string).collect(),
        dims: params.iter().map(|c| c.stratum.dimension).collect(),
        rows,
    })
}

/// `μ(ξ,τ) = Σ m_g((ξ,τ),(ξ',τ')) P(ξ',τ')`.
pub fn m_g_matrix(poset: &StratumPoset) -> Result<ChangeOfBasis> {
    p_in_mu(poset)?
        .inverse()
        .ok_or_else(|| Error::UnsupportedGeometry("P-to-μ matrix is not invertible over ℤ".into()))
}

/// `m_r(i, j) = (−1)^{d_i − d_j} · m_g⁻¹(j, i)`.
pub fn m_r_matrix(poset: &StratumPoset) -> Result<ChangeOfBasis> {
    let a = p_in_mu(poset)?;
    let n = a.size();
    let rows = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let sign = if (a.dims[i] + a.dims[j]) % 2 == 0 {
                        1
                    } else {
                        -1
                    };
                    sign * a.rows[j][i]
                })
                .collect()
        })
        .collect();
    Ok(ChangeOfBasis {
        labels: a.labels,
        dims: a.dims,
        rows,
    })
}

/// Multiplicities of conormal bundles, one per stratum in poset order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacteristicCycle {
    pub multiplicities: Vec<(String, u64)>,
}

impl CharacteristicCycle {
    pub fn at(&self, id: &str) -> u64 {
        self.multiplicities
            .iter()
            .find(|(s, _)| s == id)
            .map_or(0, |(_, m)| *m)
    }

    pub fn support(&self) -> Vec<&str> {
        self.multiplicities
            .iter()
            .filter(|(_, m)| *m > 0)
            .map(|(s, _)| s.as_str())
            .collect()
    }
}

impl fmt::Display for CharacteristicCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .multiplicities
            .iter()
            .filter(|(_, m)| *m > 0)
            .map(|(s, m)| format!("{m}·T*_{s}"))
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// Stalk Euler characteristic of a `μ`-combination at a point of stratum `at`:
/// `j_!` vanishes off its own stratum.
fn stalk(params: &[CompleteGeometricParameter], k: &KClass, at: &str) -> i64 {
    params
        .iter()
        .zip(&k.coeffs)
        .filter(|(c, _)| c.stratum.id == at)
        .map(|(c, &x)| if c.stratum.dimension % 2 == 0 { x } else { -x })
        .sum()
}

/// `χ(P(S, χ))`.
///
/// On a curve with generic stalk Euler characteristic `n` and special values
/// `n_x`, `χ(P) = −n·T*_X X + Σ (n_x − n)·T*_x X`; an isolated point carries
/// `n_x` times its own conormal.
pub fn characteristic_cycle(
    poset: &StratumPoset,
    id: &str,
    chi: u64,
) -> Result<CharacteristicCycle> {
    let params = complete_parameters_of(poset);
    let k = ic_class_in_mu_basis(poset, id, chi)?;
    let mut multiplicities = Vec::new();
    for s in poset.strata() {
        let n_s = stalk(&params, &k, &s.id);
        let m = if s.dimension == 1 {
            -n_s
        } else if let Some(curve) = poset.curve_through(&s.id) {
            n_s - stalk(&params, &k, &curve.id)
        } else {
            n_s
        };
        let m = u64::try_from(m).map_err(|_| {
            Error::UnsupportedGeometry(format!("negative conormal multiplicity {m} at {}", s.id))
        })?;
        multiplicities.push((s.id.clone(), m));
    }
    Ok(CharacteristicCycle { multiplicities })
}

/// Complete parameters whose irreducible sheaf has the conormal bundle of
/// `id` in its characteristic cycle.
pub fn arthur_microlocal_packet(
    poset: &StratumPoset,
    id: &str,
) -> Result<Vec<CompleteGeometricParameter>> {
    poset.get(id)?;
    let mut out = Vec::new();
    for c in complete_parameters_of(poset) {
        if characteristic_cycle(poset, &c.stratum.id, c.character)?.at(id) > 0 {
            out.push(c);
        }
    }
    Ok(out)
}
