//! Text formats shared by the command line and the fuzz targets.
//!
//! Coordinates are comma separated complex rationals (`1/2,-1/2+i`),
//! partitions are comma separated positive integers, lists of partitions are
//! separated by `;`, and a coadjoint descriptor is a `;`-separated list of
//! `xi:parts` entries where a bare `parts` means `xi = 0`.

use crate::arthur::{ArthurGroup, ArthurParameter};
use crate::datum::CartanVector;
use crate::error::{Error, Result};
use crate::lparams::ExtendedElement;
use crate::orbits::CoadjointDescriptor;
use crate::partition::{LeviBlocks, Partition};
use crate::scalar::GaussianRational;

/// Upper bound on ranks accepted from text, keeping every downstream
/// enumeration small.
pub const MAX_RANK: usize = 16;

fn items(s: &str, sep: char) -> Result<Vec<&str>> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::EmptyInput("empty list".into()));
    }
    Ok(s.split(sep).map(str::trim).collect())
}

pub fn parse_scalar(s: &str) -> Result<GaussianRational> {
    s.trim().parse()
}

pub fn parse_coords(s: &str) -> Result<CartanVector> {
    let v = items(s, ',')?
        .into_iter()
        .map(parse_scalar)
        .collect::<Result<Vec<_>>>()?;
    if v.len() > MAX_RANK {
        return Err(Error::InvalidParameter(format!(
            "rank {} exceeds {MAX_RANK}",
            v.len()
        )));
    }
    Ok(CartanVector(v))
}

fn parse_sizes(s: &str) -> Result<Vec<usize>> {
    let parts = items(s, ',')?
        .into_iter()
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| Error::Parse(format!("`{t}` is not a non-negative integer")))
        })
        .collect::<Result<Vec<_>>>()?;
    let total = parts.iter().try_fold(0usize, |acc, &p| acc.checked_add(p));
    match total {
        Some(t) if t <= MAX_RANK => Ok(parts),
        _ => Err(Error::InvalidParameter(format!(
            "total size exceeds {MAX_RANK}"
        ))),
    }
}

/// Parts in any order; they are sorted.
pub fn parse_partition(s: &str) -> Result<Partition> {
    Partition::new(parse_sizes(s)?)
}

pub fn parse_levi(s: &str) -> Result<LeviBlocks> {
    LeviBlocks::new(parse_sizes(s)?)
}

/// `2,1;1` → one partition per Levi block.
pub fn parse_orbits(s: &str) -> Result<Vec<Partition>> {
    items(s, ';')?.into_iter().map(parse_partition).collect()
}

/// `0:2,1;i:1` → `{(0, (2,1)), (i, (1))}`.
pub fn parse_descriptor(s: &str) -> Result<CoadjointDescriptor> {
    let entries = items(s, ';')?
        .into_iter()
        .map(|e| match e.split_once(':') {
            Some((xi, parts)) => Ok((parse_scalar(xi)?, parse_partition(parts)?)),
            None => Ok((GaussianRational::zero(), parse_partition(e)?)),
        })
        .collect::<Result<Vec<_>>>()?;
    let desc = CoadjointDescriptor::new(entries)?;
    if desc.rank() > MAX_RANK {
        return Err(Error::InvalidParameter(format!("rank exceeds {MAX_RANK}")));
    }
    Ok(desc)
}

/// `pgl2` or `gl1` … `gl5`.
pub fn parse_group(s: &str) -> Result<ArthurGroup> {
    match s.trim() {
        "pgl2" => Ok(ArthurGroup::Pgl2),
        t => match t.strip_prefix("gl").and_then(|n| n.parse::<usize>().ok()) {
            Some(n @ 1..=5) => Ok(ArthurGroup::Gl(n)),
            _ => Err(Error::Parse(format!("unknown group `{t}`"))),
        },
    }
}

/// `+` is `δ`, `-` is `−Id·δ`, and `perm|coords` gives `Ad`-permutation and
/// torus exponent explicitly, e.g. `1,0|0,0` for `n_s·δ`.
pub fn parse_j_part(s: &str, n: usize) -> Result<ExtendedElement> {
    match s.trim() {
        "+" => Ok(ExtendedElement::delta(n)),
        "-" => {
            let half = GaussianRational::ratio(1, 2);
            let torus = (0..n)
                .map(|k| if k % 2 == 0 { half.clone() } else { -&half })
                .collect();
            Ok(ExtendedElement::diagonal(CartanVector(torus)))
        }
        t => {
            let (perm, coords) = t
                .split_once('|')
                .ok_or_else(|| Error::Parse(format!("malformed j `{t}`")))?;
            let perm = items(perm, ',')?
                .into_iter()
                .map(|x| {
                    x.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad index `{x}`")))
                })
                .collect::<Result<Vec<_>>>()?;
            ExtendedElement::new(perm, parse_coords(coords)?, true)
        }
    }
}

/// Builds an Arthur parameter from its textual parts. Missing ℂ×-parts are zero.
pub fn arthur_from_parts(
    group: ArthurGroup,
    q: &str,
    hol: Option<&str>,
    anti: Option<&str>,
    j: Option<&str>,
) -> Result<ArthurParameter> {
    let n = group.rank();
    let coords = |s: Option<&str>| s.map_or_else(|| Ok(CartanVector::zero(n)), parse_coords);
    let q = parse_partition(q)?;
    let j = j.map(|s| parse_j_part(s, n)).transpose()?;
    ArthurParameter::new(group, q, coords(hol)?, coords(anti)?, j)
}

/// `group=gl2; q=2; hol=0,0; anti=0,0; j=-`. Only `q` is required and
/// `group` defaults to `pgl2`.
pub fn parse_arthur(s: &str) -> Result<ArthurParameter> {
    let mut group = ArthurGroup::Pgl2;
    let (mut q, mut hol, mut anti, mut j) = (None, None, None, None);
    for field in items(s, ';')? {
        let (k, v) = field
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("expected key=value, found `{field}`")))?;
        let slot = match k.trim() {
            "group" => {
                group = parse_group(v)?;
                continue;
            }
            "q" => &mut q,
            "hol" => &mut hol,
            "anti" => &mut anti,
            "j" => &mut j,
            other => return Err(Error::Parse(format!("unknown key `{other}`"))),
        };
        if slot.replace(v.trim()).is_some() {
            return Err(Error::Parse(format!("duplicate key `{}`", k.trim())));
        }
    }
    let q = q.ok_or_else(|| Error::EmptyInput("missing q".into()))?;
    arthur_from_parts(group, q, hol, anti, j)
}
