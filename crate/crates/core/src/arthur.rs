//! Arthur parameters, their Langlands parameters `φ_ψ`, the Levi splitting
//! `ψ = (ψ₀, ψ₁)`, the orbit-method duality map and Kirillov packet
//! descriptors.
//!
//! Two lanes are modelled. The real lane is the inner class of `PGL(2)`,
//! where `ψ` carries the image `j_part` of `j ∈ W_ℝ`. The complex lane is
//! `GL(n, ℂ)` viewed as a real group, where `ψ|_{ℂ×}` is
//! `z ↦ z^{λ_hol} z̄^{λ_anti}` and `j` maps to the factor swap of
//! `(GL(n) × GL(n)) ⋊ Γ`.

use std::fmt;

use crate::datum::{BasedRootDatum, CartanVector};
use crate::error::{Error, Result};
use crate::lparams::{validate_parameter, ExtendedElement, LGroup, LanglandsParameter};
use crate::orbits::{
    bind, is_integral_center, minimal_datum, CoadjointDescriptor, ComplexFunctional,
    ImaginaryValue, InductionDatum, RealCoadjointDescriptor,
};
use crate::partition::{partitions_of, LeviBlocks, Partition};
use crate::scalar::{rat, GaussianRational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ArthurGroup {
    /// The inner class of `PGL(2, ℝ)`.
    Pgl2,
    /// `GL(n, ℂ)` as a real group.
    Gl(usize),
}

impl ArthurGroup {
    pub fn l_group(self) -> LGroup {
        match self {
            ArthurGroup::Pgl2 => LGroup::pgl2(),
            ArthurGroup::Gl(n) => LGroup::complex_gl(n),
        }
    }

    /// The datum whose torus carries `λ_hol` and `λ_anti`.
    pub fn torus_datum(self) -> BasedRootDatum {
        match self {
            ArthurGroup::Pgl2 => BasedRootDatum::pgl(2).dual(),
            ArthurGroup::Gl(n) => BasedRootDatum::gl(n),
        }
    }

    pub fn rank(self) -> usize {
        match self {
            ArthurGroup::Pgl2 => 2,
            ArthurGroup::Gl(n) => n,
        }
    }
}

impl fmt::Display for ArthurGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArthurGroup::Pgl2 => write!(f, "PGL(2)"),
            ArthurGroup::Gl(n) => write!(f, "GL({n})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ArthurParameter {
    group: ArthurGroup,
    q: Partition,
    lambda_hol: CartanVector,
    lambda_anti: CartanVector,
    j_part: ExtendedElement,
}

/// `(q−1)/2, (q−3)/2, …, −(q−1)/2` on each block of `q`, blocks consecutive.
pub fn half_h(q: &Partition) -> CartanVector {
    let mut out = Vec::with_capacity(q.total());
    for &b in q.parts() {
        let b = b as i64;
        for k in 0..b {
            out.push(GaussianRational::ratio(b - 1 - 2 * k, 2));
        }
    }
    CartanVector(out)
}

fn q_ranges(q: &Partition) -> Vec<std::ops::Range<usize>> {
    LeviBlocks::new(q.parts().to_vec())
        .map(|l| l.ranges())
        .unwrap_or_default()
}

impl ArthurParameter {
    /// Validates the lattice, boundedness and `j` conditions. On the complex
    /// lane `j` must be omitted; it is the factor swap twisted by
    /// `exp(πi(λ_hol − λ_anti))` on the first factor.
    pub fn new(
        group: ArthurGroup,
        q: Partition,
        lambda_hol: CartanVector,
        lambda_anti: CartanVector,
        j_part: Option<ExtendedElement>,
    ) -> Result<Self> {
        let n = group.rank();
        for len in [q.total(), lambda_hol.len(), lambda_anti.len()] {
            if len != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: len,
                });
            }
        }
        let datum = group.torus_datum();
        if !datum.is_coweight(&lambda_hol) || !datum.is_coweight(&lambda_anti) {
            return Err(Error::InvalidParameter(format!(
                "ℂ×-part must lie in the Cartan of {}",
                datum.name()
            )));
        }
        let diff = &lambda_hol - &lambda_anti;
        if !datum.is_cocharacter(&diff) {
            return Err(Error::InvalidParameter(format!(
                "λ_hol − λ_anti = {diff} is not a cocharacter"
            )));
        }
        if !(&lambda_hol + &lambda_anti).has_zero_real_part() {
            return Err(Error::InvalidParameter(
                "ψ restricted to ℂ× is unbounded: Re(λ_hol + λ_anti) ≠ 0".into(),
            ));
        }
        let j_part = match (group, j_part) {
            (ArthurGroup::Pgl2, j) => {
                let j = j.unwrap_or_else(|| ExtendedElement::delta(2));
                check_real_j(&group.l_group(), &q, &lambda_hol, &lambda_anti, &j)?;
                j
            }
            (ArthurGroup::Gl(_), Some(_)) => {
                return Err(Error::InvalidParameter(
                    "the image of j is determined by the ℂ×-part for complex groups".into(),
                ))
            }
            (ArthurGroup::Gl(n), None) => {
                let mut u = diff.half().0;
                u.extend(std::iter::repeat_n(GaussianRational::zero(), n));
                let theta = group.l_group().theta().to_vec();
                ExtendedElement::new(theta, CartanVector(u), true)?
            }
        };
        Ok(Self {
            group,
            q,
            lambda_hol,
            lambda_anti,
            j_part,
        })
    }

    pub fn group(&self) -> ArthurGroup {
        self.group
    }

    pub fn q(&self) -> &Partition {
        &self.q
    }

    pub fn lambda_hol(&self) -> &CartanVector {
        &self.lambda_hol
    }

    pub fn lambda_anti(&self) -> &CartanVector {
        &self.lambda_anti
    }

    pub fn j_part(&self) -> &ExtendedElement {
        &self.j_part
    }

    /// `ψ(ℂ×)` commutes with `ψ(SL(2))`: the ℂ×-part is constant on each `q`-block.
    fn check_sl2_centralizes(&self) -> Result<()> {
        for r in q_ranges(&self.q) {
            let (h, a) = (&self.lambda_hol[r.start], &self.lambda_anti[r.start]);
            if r.clone()
                .any(|k| &self.lambda_hol[k] != h || &self.lambda_anti[k] != a)
            {
                return Err(Error::SL2NotInLevi(format!(
                    "ℂ×-part is not constant on the SL(2) block at coordinates {r:?}"
                )));
            }
        }
        Ok(())
    }
}

fn check_real_j(
    group: &LGroup,
    q: &Partition,
    hol: &CartanVector,
    anti: &CartanVector,
    j: &ExtendedElement,
) -> Result<()> {
    if !j.gamma() {
        return Err(Error::NotInNonIdentityComponent);
    }
    if &j.act(hol) != anti {
        return Err(Error::InvalidParameter(
            "Ad(j) must carry λ_hol to λ_anti".into(),
        ));
    }
    let want = (hol - anti).half().exp();
    if group.square_exponent(j).exp() != want {
        return Err(Error::InvalidParameter(
            "j² ≠ exp(πi(λ_hol − λ_anti))".into(),
        ));
    }
    for r in q_ranges(q).into_iter().filter(|r| r.len() > 1) {
        let e = j.torus().exp();
        let scalar = r.clone().all(|k| j.weyl()[k] == k && e[k] == e[r.start]);
        if !scalar {
            return Err(Error::InvalidParameter(
                "j must centralize the image of SL(2)".into(),
            ));
        }
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArthurClass {
    Unipotent,
    Tempered,
    Mixed,
}

impl fmt::Display for ArthurClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ArthurClass::Unipotent => "unipotent",
            ArthurClass::Tempered => "tempered",
            ArthurClass::Mixed => "mixed",
        })
    }
}

pub fn classify_arthur(psi: &ArthurParameter) -> ArthurClass {
    if psi.lambda_hol.is_zero() && psi.lambda_anti.is_zero() {
        ArthurClass::Unipotent
    } else if psi.q.is_zero_orbit() {
        ArthurClass::Tempered
    } else {
        ArthurClass::Mixed
    }
}

/// `λ(φ_ψ) = λ + h_q/2` and `y(φ_ψ) = exp(πi·λ(φ_ψ))·ψ(j)`.
pub fn phi_of_psi(psi: &ArthurParameter) -> Result<LanglandsParameter> {
    psi.check_sl2_centralizes()?;
    let h = half_h(&psi.q);
    let lambda = match psi.group {
        ArthurGroup::Pgl2 => &psi.lambda_hol + &h,
        ArthurGroup::Gl(_) => {
            let mut v = (&psi.lambda_hol + &h).0;
            v.extend((&psi.lambda_anti + &h).0);
            CartanVector(v)
        }
    };
    let group = psi.group.l_group();
    let y = group.left_torus_multiply(&psi.j_part, &lambda.half());
    validate_parameter(&group, y, lambda)
}

/// `L∨ = Z_{G∨}(ψ(ℂ×))`, the SL(2)-type inside each block of `L∨`, and the
/// central character `ξ₁` of `ψ₁`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeviSplit {
    pub levi: LeviBlocks,
    pub psi0: Vec<Partition>,
    pub xi1: ComplexFunctional,
}

/// Groups coordinates by their ℂ×-part. `ψ₁` on a block is
/// `z^{λ_hol} z̄^{λ_anti} = (z/|z|)^k·|z|^{it}` with `k = λ_hol − λ_anti` and
/// `it = λ_hol + λ_anti`, so its differential is `ξ₁ = k + it = 2λ_hol`.
pub fn split_at_levi(psi: &ArthurParameter) -> Result<LeviSplit> {
    if !matches!(psi.group, ArthurGroup::Gl(_)) {
        return Err(Error::UnsupportedGroup(format!(
            "Levi splitting is implemented for GL(n, ℂ), not {}",
            psi.group
        )));
    }
    psi.check_sl2_centralizes()?;
    let mut keys: Vec<(GaussianRational, GaussianRational)> = Vec::new();
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for r in q_ranges(&psi.q) {
        let key = (
            psi.lambda_hol[r.start].clone(),
            psi.lambda_anti[r.start].clone(),
        );
        match keys.iter().position(|k| *k == key) {
            Some(g) => groups[g].push(r.len()),
            None => {
                keys.push(key);
                groups.push(vec![r.len()]);
            }
        }
    }
    let levi = LeviBlocks::new(groups.iter().map(|g| g.iter().sum()).collect())?;
    let psi0 = groups
        .into_iter()
        .map(Partition::new)
        .collect::<Result<Vec<_>>>()?;
    let two = rat(2, 1);
    let xi1 = ComplexFunctional(keys.iter().map(|(h, _)| h.scale(&two)).collect());
    Ok(LeviSplit { levi, psi0, xi1 })
}

/// The nilpotent orbit of `L` attached to `ψ₀`: blockwise transpose.
pub fn d_zero(psi0: &[Partition], levi: &LeviBlocks) -> Result<Vec<Partition>> {
    if psi0.len() != levi.count() {
        return Err(Error::BlockMismatch(format!(
            "{} SL(2)-types for Levi {levi}",
            psi0.len()
        )));
    }
    psi0.iter()
        .zip(levi.blocks())
        .map(|(q, &b)| {
            if q.total() == b {
                Ok(q.transpose())
            } else {
                Err(Error::BlockMismatch(format!(
                    "{q} does not fit a block of size {b}"
                )))
            }
        })
        .collect()
}

/// `Bind(L, D₀(ψ₀), ξ₁)` before applying `ι`.
pub fn duality_descriptor(psi: &ArthurParameter) -> Result<CoadjointDescriptor> {
    let split = split_at_levi(psi)?;
    let orbits = d_zero(&split.psi0, &split.levi)?;
    let datum = InductionDatum::new(split.levi, orbits, &split.xi1)?;
    Ok(bind(&datum))
}

/// `D(ψ) = ι(Bind(L, D₀(ψ₀), ξ₁))`.
pub fn duality_map(psi: &ArthurParameter) -> Result<RealCoadjointDescriptor> {
    Ok(duality_descriptor(psi)?.iota())
}

/// `(L, Unip_{Õ_L}(L), ι(ξ))`: the data whose unitary inductions make up a
/// Kirillov packet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PacketDescriptor {
    pub levi: LeviBlocks,
    pub labels: Vec<String>,
    pub character: Vec<ImaginaryValue>,
}

impl PacketDescriptor {
    pub fn summary(&self) -> &'static str {
        let trivial_char = self.character.iter().all(ImaginaryValue::is_zero);
        if !self.levi.is_proper() && trivial_char {
            "unipotent"
        } else if self.levi.blocks().iter().all(|&b| b == 1) {
            "unitary principal series"
        } else {
            "unitarily induced from unipotent"
        }
    }
}

impl fmt::Display for PacketDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let chars: Vec<String> = self.character.iter().map(ToString::to_string).collect();
        write!(
            f,
            "L = {}, Unip = {{{}}}, ι(ξ) = ({})",
            self.levi,
            self.labels.join(", "),
            chars.join(", ")
        )
    }
}

/// Resolves an integral cover to its minimal datum and looks up the unipotent
/// representations of the Levi. Tables exist for tori, the zero orbit of
/// `GL(2)`, and the zero orbit of `PGL(2)` across both real forms.
pub fn kirillov_packet_descriptor(
    group: ArthurGroup,
    cover: &RealCoadjointDescriptor,
) -> Result<PacketDescriptor> {
    let desc = cover.iota_inverse()?;
    if desc.rank() != group.rank() {
        return Err(Error::DimensionMismatch {
            expected: group.rank(),
            found: desc.rank(),
        });
    }
    let datum = minimal_datum(&desc);
    let xi = ComplexFunctional(datum.xi().to_vec());
    if !is_integral_center(&xi, datum.levi())? {
        return Err(Error::UnsupportedFixture(format!(
            "cover {cover} is not integral"
        )));
    }
    let character = datum.xi().iter().map(ImaginaryValue::of).collect();
    let labels = match group {
        ArthurGroup::Pgl2 => {
            if !(desc.is_nilpotent() && desc.is_semisimple()) {
                return Err(Error::UnsupportedFixture(format!(
                    "no unipotent table for {desc} in PGL(2)"
                )));
            }
            vec!["triv of G_s".to_string(), "triv of G_c".to_string()]
        }
        ArthurGroup::Gl(_) => datum
            .levi()
            .blocks()
            .iter()
            .map(|&b| {
                if b <= 2 {
                    Ok(format!("triv of GL({b})"))
                } else {
                    Err(Error::UnsupportedFixture(format!(
                        "no unipotent table for the zero orbit of GL({b})"
                    )))
                }
            })
            .collect::<Result<Vec<_>>>()?,
    };
    Ok(PacketDescriptor {
        levi: datum.levi().clone(),
        labels,
        character,
    })
}

/// The fixed sample of `(λ_hol, λ_anti)` values used for grid checks.
pub fn sample_c_parts() -> Vec<(GaussianRational, GaussianRational)> {
    [
        ("0", "0"),
        ("i", "i"),
        ("2i", "2i"),
        ("1/2", "-1/2"),
        ("-1/2", "1/2"),
        ("1/2+i", "-1/2+i"),
    ]
    .iter()
    .map(|(h, a)| (h.parse().expect("literal"), a.parse().expect("literal")))
    .collect()
}

/// Every `GL(n, ℂ)` Arthur parameter with `q ⊢ n` and each `q`-block carrying
/// one sample ℂ×-part, one representative per conjugacy class.
pub fn arthur_grid(n: usize) -> Vec<ArthurParameter> {
    let samples = sample_c_parts();
    let mut out = Vec::new();
    for q in partitions_of(n) {
        let k = q.len();
        let total = samples.len().pow(k as u32);
        for code in 0..total {
            let idx: Vec<usize> = (0..k)
                .map(|i| code / samples.len().pow(i as u32) % samples.len())
                .collect();
            // equal-size blocks are interchangeable: keep sample indices sorted
            let canonical =
                (1..k).all(|i| q.parts()[i] != q.parts()[i - 1] || idx[i] >= idx[i - 1]);
            if !canonical {
                continue;
            }
            let mut hol = Vec::with_capacity(n);
            let mut anti = Vec::with_capacity(n);
            for (b, &s) in q.parts().iter().zip(&idx) {
                hol.extend(std::iter::repeat_n(samples[s].0.clone(), *b));
                anti.extend(std::iter::repeat_n(samples[s].1.clone(), *b));
            }
            let psi = ArthurParameter::new(
                ArthurGroup::Gl(n),
                q.clone(),
                CartanVector(hol),
                CartanVector(anti),
                None,
            )
            .expect("grid samples are valid");
            out.push(psi);
        }
    }
    out
}
