//! Type-A coadjoint orbit combinatorics: the ι-correspondence, integrality of
//! central characters, birational induction and minimal induction data.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::partition::{compositions_of, partition_colsum, partitions_of, LeviBlocks, Partition};
use crate::scalar::{fmt_rational, GaussianRational, Rational};

/// An element of `𝔤*` (or `𝔷(𝔩)*`) in coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ComplexFunctional(pub Vec<GaussianRational>);

/// An element of `Hom_ℝ(𝔤, iℝ)`, recorded by the `i`-coefficients of its
/// values on each real basis vector `X` and on `iX`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ImaginaryFunctional {
    pub on_real: Vec<Rational>,
    pub on_imag: Vec<Rational>,
}

/// `ι(μ)(X) = i·Im μ(X)`.
pub fn iota(mu: &ComplexFunctional) -> ImaginaryFunctional {
    // μ(e_k) = a + bi has Im = b; μ(i e_k) = −b + ai has Im = a
    ImaginaryFunctional {
        on_real: mu.0.iter().map(|z| z.im.clone()).collect(),
        on_imag: mu.0.iter().map(|z| z.re.clone()).collect(),
    }
}

/// `ι⁻¹(λ)(X) = λ(X) − iλ(iX)`.
pub fn iota_inverse(l: &ImaginaryFunctional) -> Result<ComplexFunctional> {
    if l.on_real.len() != l.on_imag.len() {
        return Err(Error::DimensionMismatch {
            expected: l.on_real.len(),
            found: l.on_imag.len(),
        });
    }
    // λ(X) = i·t and λ(iX) = i·k give i·t − i·(i·k) = k + it
    Ok(ComplexFunctional(
        l.on_real
            .iter()
            .zip(&l.on_imag)
            .map(|(t, k)| GaussianRational::new(k.clone(), t.clone()))
            .collect(),
    ))
}

/// One value per Levi block, from either per-block or per-coordinate input.
pub fn block_values(xi: &ComplexFunctional, levi: &LeviBlocks) -> Result<Vec<GaussianRational>> {
    if xi.0.len() == levi.count() {
        return Ok(xi.0.clone());
    }
    if xi.0.len() != levi.rank() {
        return Err(Error::BlockMismatch(format!(
            "{} central values for Levi {levi} with {} blocks of total size {}",
            xi.0.len(),
            levi.count(),
            levi.rank()
        )));
    }
    levi.ranges()
        .into_iter()
        .map(|r| {
            let v = &xi.0[r.start];
            if xi.0[r.clone()].iter().all(|x| x == v) {
                Ok(v.clone())
            } else {
                Err(Error::BlockMismatch(format!(
                    "central functional is not constant on coordinates {r:?}"
                )))
            }
        })
        .collect()
}

/// `½(ι(ξ) + conj ι(ξ)) ∈ X^*(H)`: each block value `k + it` has `k ∈ ℤ`.
///
/// A unitary character of `ℂ×` is `(z/|z|)^k·|z|^{it}` with differential
/// `k + it`, so integrality only constrains the real part.
pub fn is_integral_center(xi: &ComplexFunctional, levi: &LeviBlocks) -> Result<bool> {
    Ok(block_values(xi, levi)?.iter().all(|v| v.re.is_integer()))
}

/// `(L, 𝕆_L, ξ)` for a Levi `L = GL(n₁)×…×GL(n_k)` of `GL(n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct InductionDatum {
    levi: LeviBlocks,
    orbits: Vec<Partition>,
    xi: Vec<GaussianRational>,
}

impl InductionDatum {
    pub fn new(levi: LeviBlocks, orbits: Vec<Partition>, xi: &ComplexFunctional) -> Result<Self> {
        if orbits.len() != levi.count() {
            return Err(Error::BlockMismatch(format!(
                "{} orbits for Levi {levi}",
                orbits.len()
            )));
        }
        for (o, &b) in orbits.iter().zip(levi.blocks()) {
            if o.total() != b {
                return Err(Error::BlockMismatch(format!(
                    "orbit {o} does not live in a block of size {b}"
                )));
            }
        }
        let xi = block_values(xi, &levi)?;
        Ok(Self { levi, orbits, xi })
    }

    pub fn levi(&self) -> &LeviBlocks {
        &self.levi
    }

    pub fn orbits(&self) -> &[Partition] {
        &self.orbits
    }

    /// Central values, one per block.
    pub fn xi(&self) -> &[GaussianRational] {
        &self.xi
    }

    pub fn rank(&self) -> usize {
        self.levi.rank()
    }

    /// Every `𝕆_L` is the zero orbit, the only birationally rigid orbit in type A.
    pub fn is_minimal(&self) -> bool {
        self.orbits.iter().all(Partition::is_zero_orbit)
    }

    /// `G`-conjugacy invariant: the sorted list of (ξ, block, orbit) triples.
    pub fn conjugacy_key(&self) -> Vec<(GaussianRational, usize, Partition)> {
        let mut key: Vec<_> = self
            .xi
            .iter()
            .zip(self.levi.blocks())
            .zip(&self.orbits)
            .map(|((x, &b), o)| (x.clone(), b, o.clone()))
            .collect();
        key.sort();
        key
    }
}

impl fmt::Display for InductionDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let orbits: Vec<String> = self.orbits.iter().map(ToString::to_string).collect();
        let xi: Vec<String> = self.xi.iter().map(ToString::to_string).collect();
        write!(
            f,
            "L = {}, O_L = [{}], xi = ({})",
            self.levi,
            orbits.join(", "),
            xi.join(", ")
        )
    }
}

/// A coadjoint orbit of `GL(n)`: for each eigenvalue `ξ` of its semisimple
/// part, the partition of the nilpotent part inside that eigenspace.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoadjointDescriptor {
    entries: Vec<(GaussianRational, Partition)>,
}

impl CoadjointDescriptor {
    pub fn new(mut entries: Vec<(GaussianRational, Partition)>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptyInput(
                "a descriptor needs at least one eigenvalue".into(),
            ));
        }
        if entries.iter().any(|(_, p)| p.is_empty()) {
            return Err(Error::InvalidParameter(
                "empty partition in descriptor".into(),
            ));
        }
        entries.sort();
        if entries.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::InvalidParameter(
                "repeated eigenvalue in descriptor".into(),
            ));
        }
        Ok(Self { entries })
    }

    /// The nilpotent orbit with partition `p`.
    pub fn nilpotent(p: Partition) -> Result<Self> {
        Self::new(vec![(GaussianRational::zero(), p)])
    }

    pub fn entries(&self) -> &[(GaussianRational, Partition)] {
        &self.entries
    }

    pub fn rank(&self) -> usize {
        self.entries.iter().map(|(_, p)| p.total()).sum()
    }

    pub fn is_nilpotent(&self) -> bool {
        self.entries.iter().all(|(x, _)| x.is_zero())
    }

    pub fn is_semisimple(&self) -> bool {
        self.entries.iter().all(|(_, p)| p.is_zero_orbit())
    }

    /// Plain-language shape for reports.
    pub fn kind(&self) -> &'static str {
        match (self.is_nilpotent(), self.is_semisimple()) {
            (true, true) => "zero orbit",
            (true, false) if self.entries[0].1.len() == 1 => "principal nilpotent orbit",
            (true, false) => "nilpotent orbit",
            (false, true) => "semisimple orbit",
            (false, false) => "mixed orbit",
        }
    }

    pub fn iota(&self) -> RealCoadjointDescriptor {
        RealCoadjointDescriptor {
            entries: self
                .entries
                .iter()
                .map(|(x, p)| (ImaginaryValue::of(x), p.clone()))
                .collect(),
        }
    }
}

impl fmt::Display for CoadjointDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self
            .entries
            .iter()
            .map(|(x, p)| format!("({x}, {p})"))
            .collect();
        write!(f, "{{{}}}", body.join(", "))
    }
}

/// The value of `ι(ξ)` on a central block: `X ↦ i·t`, `iX ↦ i·k` for `ξ = k + it`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ImaginaryValue {
    pub on_real: Rational,
    pub on_imag: Rational,
}

impl ImaginaryValue {
    pub fn of(x: &GaussianRational) -> Self {
        Self {
            on_real: x.im.clone(),
            on_imag: x.re.clone(),
        }
    }

    pub fn inverse(&self) -> GaussianRational {
        GaussianRational::new(self.on_imag.clone(), self.on_real.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.on_real.is_zero() && self.on_imag.is_zero()
    }
}

impl fmt::Display for ImaginaryValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[X↦{}i, iX↦{}i]",
            fmt_rational(&self.on_real),
            fmt_rational(&self.on_imag)
        )
    }
}

/// The ι-image of a [`CoadjointDescriptor`]: an orbit in `Hom_ℝ(𝔤, iℝ)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RealCoadjointDescriptor {
    entries: Vec<(ImaginaryValue, Partition)>,
}

impl RealCoadjointDescriptor {
    pub fn entries(&self) -> &[(ImaginaryValue, Partition)] {
        &self.entries
    }

    pub fn iota_inverse(&self) -> Result<CoadjointDescriptor> {
        CoadjointDescriptor::new(
            self.entries
                .iter()
                .map(|(v, p)| (v.inverse(), p.clone()))
                .collect(),
        )
    }

    pub fn is_nilpotent(&self) -> bool {
        self.entries.iter().all(|(v, _)| v.is_zero())
    }
}

impl fmt::Display for RealCoadjointDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self
            .entries
            .iter()
            .map(|(x, p)| format!("({x}, {p})"))
            .collect();
        write!(f, "ι{{{}}}", body.join(", "))
    }
}

/// `Ind(L, 𝕆_L, ξ)`: blocks with equal `ξ` merge, and inside each merged
/// block the orbits induce by columnwise sum.
pub fn bind(d: &InductionDatum) -> CoadjointDescriptor {
    let mut groups: BTreeMap<GaussianRational, Vec<Partition>> = BTreeMap::new();
    for (x, o) in d.xi.iter().zip(&d.orbits) {
        groups.entry(x.clone()).or_default().push(o.clone());
    }
    let entries = groups
        .into_iter()
        .map(|(x, os)| (x, partition_colsum(&os).expect("each group is non-empty")))
        .collect();
    CoadjointDescriptor::new(entries).expect("group keys are distinct and partitions non-empty")
}

fn zero_xi(k: usize) -> ComplexFunctional {
    ComplexFunctional(vec![GaussianRational::zero(); k])
}

/// All ways to put an orbit in each block of every composition of `n`, with `ξ = 0`.
pub fn nilpotent_data(n: usize, proper_only: bool) -> Vec<InductionDatum> {
    let mut out = Vec::new();
    for levi in compositions_of(n) {
        if proper_only && !levi.is_proper() {
            continue;
        }
        let choices: Vec<Vec<Partition>> =
            levi.blocks().iter().map(|&b| partitions_of(b)).collect();
        for orbits in cartesian(&choices) {
            let xi = zero_xi(levi.count());
            out.push(InductionDatum::new(levi.clone(), orbits, &xi).expect("shapes match"));
        }
    }
    out
}

fn cartesian<T: Clone>(choices: &[Vec<T>]) -> Vec<Vec<T>> {
    choices.iter().fold(vec![Vec::new()], |acc, opts| {
        acc.iter()
            .flat_map(|prefix| {
                opts.iter().map(move |o| {
                    let mut v = prefix.clone();
                    v.push(o.clone());
                    v
                })
            })
            .collect()
    })
}

/// A proper-Levi datum with `ξ = 0` inducing to `p`, if one exists.
pub fn induction_witness(p: &Partition) -> Option<InductionDatum> {
    let target = CoadjointDescriptor::nilpotent(p.clone()).ok()?;
    nilpotent_data(p.total(), true)
        .into_iter()
        .find(|d| bind(d) == target)
}

/// No proper Levi datum with `ξ = 0` binds to `p`.
pub fn is_birationally_rigid(p: &Partition) -> bool {
    induction_witness(p).is_none()
}

/// For each eigenvalue, Levi blocks given by the transpose of its partition,
/// all carrying zero orbits.
pub fn minimal_datum(desc: &CoadjointDescriptor) -> InductionDatum {
    let mut blocks = Vec::new();
    let mut xi = Vec::new();
    for (x, p) in &desc.entries {
        for b in p.transpose().parts() {
            blocks.push(*b);
            xi.push(x.clone());
        }
    }
    let orbits = blocks.iter().map(|&b| Partition::zero_orbit(b)).collect();
    let levi = LeviBlocks::new(blocks).expect("descriptor partitions are non-empty");
    InductionDatum::new(levi, orbits, &ComplexFunctional(xi)).expect("shapes match")
}

/// Brute force: conjugacy classes of minimal data binding to `desc`, with
/// central values drawn from the eigenvalues of `desc`.
pub fn minimal_data_binding_to(desc: &CoadjointDescriptor) -> Vec<InductionDatum> {
    let values: Vec<GaussianRational> = desc.entries.iter().map(|(x, _)| x.clone()).collect();
    let mut seen = Vec::new();
    let mut out = Vec::new();
    for levi in compositions_of(desc.rank()) {
        let choices = vec![values.clone(); levi.count()];
        for xi in cartesian(&choices) {
            let orbits = levi
                .blocks()
                .iter()
                .map(|&b| Partition::zero_orbit(b))
                .collect();
            let d = InductionDatum::new(levi.clone(), orbits, &ComplexFunctional(xi))
                .expect("shapes match");
            if bind(&d) == *desc {
                let key = d.conjugacy_key();
                if !seen.contains(&key) {
                    seen.push(key);
                    out.push(d);
                }
            }
        }
    }
    out
}

/// Set partitions of `0..k`, each as a list of groups in first-element order.
pub fn set_partitions(k: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out: Vec<Vec<Vec<usize>>> = vec![vec![]];
    for i in 0..k {
        let mut next = Vec::new();
        for sp in &out {
            for g in 0..sp.len() {
                let mut s = sp.clone();
                s[g].push(i);
                next.push(s);
            }
            let mut s = sp.clone();
            s.push(vec![i]);
            next.push(s);
        }
        out = next;
    }
    out
}

/// Induce from `L` to the intermediate Levi `M` whose blocks merge the groups
/// of `grouping`, then from `M` to `G`. Only meaningful for `ξ = 0`.
pub fn bind_in_stages(d: &InductionDatum, grouping: &[Vec<usize>]) -> Result<CoadjointDescriptor> {
    let mut m_blocks = Vec::new();
    let mut m_orbits = Vec::new();
    for group in grouping {
        let orbits: Vec<Partition> = group.iter().map(|&i| d.orbits[i].clone()).collect();
        m_blocks.push(group.iter().map(|&i| d.levi.blocks()[i]).sum());
        m_orbits.push(partition_colsum(&orbits)?);
    }
    let levi = LeviBlocks::new(m_blocks)?;
    let xi = zero_xi(levi.count());
    Ok(bind(&InductionDatum::new(levi, m_orbits, &xi)?))
}
