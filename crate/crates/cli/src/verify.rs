//! `verify all`: fast exhaustive checks over small ranks.

use std::collections::HashSet;

use langlands_core::arthur::{arthur_grid, classify_arthur, duality_map, phi_of_psi, ArthurClass};
use langlands_core::geoparams::{complete_parameters_of, stratify_orbit};
use langlands_core::lparams::{enumerate_parameters, is_tempered, pgl2_lambda, LGroup};
use langlands_core::orbits::{
    bind, bind_in_stages, iota, iota_inverse, minimal_datum, nilpotent_data, set_partitions,
    ComplexFunctional,
};
use langlands_core::partition::partitions_of;
use langlands_core::sheafk::{characteristic_cycle, m_g_matrix, m_r_matrix};
use langlands_core::{GaussianRational, Result};

use crate::report::{Block, Report};

type Check = (&'static str, fn() -> Result<bool>);

fn g(s: &str) -> GaussianRational {
    s.parse().expect("literal")
}

fn langlands_rows() -> Result<bool> {
    let group = LGroup::pgl2();
    let counts = ["1/2", "3/2", "2/3", "i"]
        .iter()
        .map(|a| enumerate_parameters(&group, &g(a)).map(|v| v.len()))
        .collect::<Result<Vec<_>>>()?;
    Ok(counts == [3, 3, 2, 2])
}

fn stratification() -> Result<bool> {
    let poset = stratify_orbit(&LGroup::pgl2(), &pgl2_lambda(&g("1/2")))?;
    let mut dims: Vec<usize> = poset.strata().iter().map(|s| s.dimension).collect();
    dims.sort_unstable();
    Ok(dims == [0, 0, 1] && complete_parameters_of(&poset).len() == 4)
}

fn inverse_transpose() -> Result<bool> {
    let poset = stratify_orbit(&LGroup::pgl2(), &pgl2_lambda(&g("1/2")))?;
    let mg = m_g_matrix(&poset)?;
    let mr = m_r_matrix(&poset)?;
    Ok(crate::inverse_transpose_holds(&mg, &mr))
}

fn cycles() -> Result<bool> {
    let poset = stratify_orbit(&LGroup::pgl2(), &pgl2_lambda(&g("1/2")))?;
    let vec = |id: &str, chi: u64| -> Result<Vec<u64>> {
        let cc = characteristic_cycle(&poset, id, chi)?;
        Ok(["N", "S", "U"].iter().map(|s| cc.at(s)).collect())
    };
    Ok(vec("U", 0)? == [0, 0, 1] && vec("U", 1)? == [1, 1, 1] && vec("N", 0)? == [1, 0, 0])
}

fn bind_bijection() -> Result<bool> {
    for (n, count) in [(1, 1), (2, 2), (3, 3), (4, 5), (5, 7)] {
        let images: HashSet<_> = nilpotent_data(n, false)
            .into_iter()
            .filter(|d| d.is_minimal())
            .map(|d| {
                let key = d.conjugacy_key();
                (key, bind(&d))
            })
            .collect();
        let keys: HashSet<_> = images.iter().map(|(k, _)| k.clone()).collect();
        let targets: HashSet<_> = images.iter().map(|(_, b)| b.clone()).collect();
        if keys.len() != count || targets.len() != count || partitions_of(n).len() != count {
            return Ok(false);
        }
    }
    Ok(true)
}

fn stages() -> Result<bool> {
    for n in 1..=5 {
        for d in nilpotent_data(n, false) {
            let direct = bind(&d);
            for grouping in set_partitions(d.levi().count()) {
                if bind_in_stages(&d, &grouping)? != direct {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

fn iota_round_trip() -> Result<bool> {
    let values: Vec<GaussianRational> = ["0", "1", "-2/3", "i", "5/7-3i", "1/2+1/2i"]
        .iter()
        .map(|s| g(s))
        .collect();
    for x in &values {
        for y in &values {
            let mu = ComplexFunctional(vec![x.clone(), y.clone()]);
            if iota_inverse(&iota(&mu))? != mu {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn minimal_round_trip() -> Result<bool> {
    for psi in arthur_grid(3) {
        let d = langlands_core::arthur::duality_descriptor(&psi)?;
        if bind(&minimal_datum(&d)) != d {
            return Ok(false);
        }
    }
    Ok(true)
}

fn duality() -> Result<bool> {
    let mut seen = HashSet::new();
    for n in 1..=3 {
        for psi in arthur_grid(n) {
            let d = duality_map(&psi)?;
            match classify_arthur(&psi) {
                ArthurClass::Unipotent if !d.is_nilpotent() => return Ok(false),
                ArthurClass::Tempered if !is_tempered(&phi_of_psi(&psi)?) => return Ok(false),
                _ => {}
            }
            if !seen.insert((n, d)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

const CHECKS: [Check; 10] = [
    (
        "PGL(2) parameter counts at a = 1/2, 3/2, 2/3, i",
        langlands_rows,
    ),
    (
        "stratification at ρ has strata of dimension 0, 0, 1",
        stratification,
    ),
    (
        "m_r is the signed inverse transpose of m_g",
        inverse_transpose,
    ),
    ("characteristic cycles (0,0,1), (1,1,1), (1,0,0)", cycles),
    (
        "Bind on minimal nilpotent data is a bijection, n ≤ 5",
        bind_bijection,
    ),
    ("induction in stages, n ≤ 5", stages),
    ("ι round trip", iota_round_trip),
    (
        "Bind ∘ minimal datum = id on duality images, n = 3",
        minimal_round_trip,
    ),
    (
        "D injective, unipotent ⇒ nilpotent, tempered chain, n ≤ 3",
        duality,
    ),
    (
        "Arthur packets ψ± resolve to the tabulated representations",
        crate::verify_packets,
    ),
];

/// Runs every check; the flag is false if any failed or errored.
pub fn all() -> (Report, bool) {
    let mut ok = true;
    let rows = CHECKS
        .iter()
        .map(|(name, f)| {
            let status = match f() {
                Ok(true) => "pass".to_string(),
                Ok(false) => "FAIL".to_string(),
                Err(e) => format!("FAIL ({})", e.name()),
            };
            ok &= status == "pass";
            vec![name.to_string(), status]
        })
        .collect();
    (
        Report::new("Consistency checks")
            .section("checks", Block::table(&["check", "result"], rows)),
        ok,
    )
}
