//! The PGL(2) and GL(n) worked examples, checked through the public API.
//! Values read off the PGL(2) tables are compared literally; derived values
//! are recomputed here by an independent route.

use langlands_core::arthur::{
    classify_arthur, d_zero, duality_descriptor, duality_map, kirillov_packet_descriptor,
    phi_of_psi, split_at_levi, ArthurClass, ArthurGroup, ArthurParameter,
};
use langlands_core::geoparams::{
    complete_parameters_of, integral_graded_system, langlands_of, stratify_orbit, to_geometric,
};
use langlands_core::lparams::{
    complete_parameters, component_group, enumerate_parameters, is_discrete_series_packet,
    is_tempered, packet_labels, pgl2_lambda, representation_of, validate_parameter,
    CompleteLanglandsParameter, ExtendedElement, LGroup,
};
use langlands_core::orbits::{
    bind, iota, iota_inverse, is_birationally_rigid, is_integral_center, minimal_datum,
    CoadjointDescriptor, ComplexFunctional, InductionDatum, RealCoadjointDescriptor,
};
use langlands_core::parse::{parse_arthur, parse_descriptor};
use langlands_core::scalar::rat;
use langlands_core::sheafk::{
    arthur_microlocal_packet, characteristic_cycle, ic_class_in_mu_basis, m_g_matrix, m_r_matrix,
};
use langlands_core::{
    partition_colsum, BasedRootDatum, CartanVector, Error, Family, GaussianRational, LeviBlocks,
    Partition,
};

fn g(s: &str) -> GaussianRational {
    s.parse().unwrap()
}

fn cv(v: &[&str]) -> CartanVector {
    CartanVector(v.iter().map(|s| g(s)).collect())
}

fn p(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn rho() -> CartanVector {
    cv(&["1/2", "-1/2"])
}

fn diag_y(a: &str, b: &str) -> ExtendedElement {
    ExtendedElement::diagonal(cv(&[a, b]))
}

fn antidiag_y() -> ExtendedElement {
    ExtendedElement::new(vec![1, 0], CartanVector::zero(2), true).unwrap()
}

/// Column lengths of a Young diagram, counted box by box.
fn columns_by_hand(parts: &[usize]) -> Vec<usize> {
    let longest = parts.iter().copied().max().unwrap_or(0);
    (1..=longest)
        .map(|j| parts.iter().filter(|&&r| r >= j).count())
        .collect()
}

/// `dim 𝕆_p = n² − Σ (pᵀ)ᵢ²` for a nilpotent orbit of `𝔤𝔩(n)`.
fn orbit_dim(parts: &[usize]) -> usize {
    let n: usize = parts.iter().sum();
    n * n - columns_by_hand(parts).iter().map(|c| c * c).sum::<usize>()
}

#[test]
fn dual_of_pgl2_is_sl2_and_gl_is_self_dual() {
    let pgl2 = BasedRootDatum::pgl(2);
    assert_eq!(pgl2.dual().family(), Family::Sl(2));
    assert_eq!(pgl2.dual().dual(), pgl2);
    assert_eq!(BasedRootDatum::gl(2).dual().family(), Family::Gl(2));
}

#[test]
fn sl2_root_pairings() {
    let sl2 = BasedRootDatum::sl(2);
    let alpha = sl2.simple_roots()[0].clone();
    assert_eq!(sl2.pairing(&alpha, &rho()).unwrap(), g("1"));
    assert_eq!(sl2.pairing(&alpha, &CartanVector::zero(2)).unwrap(), g("0"));
    for a in ["1/3", "2i", "5/2-i"] {
        let two_a = &g(a) + &g(a);
        assert_eq!(sl2.pairing(&alpha, &pgl2_lambda(&g(a))).unwrap(), two_a);
    }
}

#[test]
fn transposes_match_hand_counts() {
    assert_eq!(p(&[2, 1]).transpose(), p(&[2, 1]));
    assert_eq!(p(&[3]).transpose(), p(&[1, 1, 1]));
    assert_eq!(
        p(&[4, 2, 1]).transpose().parts(),
        columns_by_hand(&[4, 2, 1]).as_slice()
    );
    assert_eq!(p(&[4, 2, 1]).transpose(), p(&[3, 2, 1, 1]));
}

#[test]
fn colsum_satisfies_the_induction_dimension_formula() {
    // dim Ind = dim 𝕆_L + 2·dim(𝔤/𝔭) with dim(𝔤/𝔭) = (n² − Σ bᵢ²)/2
    for orbits in [
        vec![p(&[1]), p(&[1])],
        vec![p(&[1, 1]), p(&[1])],
        vec![p(&[2]), p(&[1, 1]), p(&[1])],
    ] {
        let blocks: Vec<usize> = orbits.iter().map(Partition::total).collect();
        let n: usize = blocks.iter().sum();
        let levi_orbit_dim: usize = orbits.iter().map(|o| orbit_dim(o.parts())).sum();
        let expected = levi_orbit_dim + (n * n - blocks.iter().map(|b| b * b).sum::<usize>());
        let induced = partition_colsum(&orbits).unwrap();
        assert_eq!(orbit_dim(induced.parts()), expected, "{orbits:?}");
    }
    assert_eq!(partition_colsum(&[p(&[1]), p(&[1])]).unwrap(), p(&[2]));
    assert_eq!(
        partition_colsum(&[p(&[1, 1]), p(&[1])]).unwrap(),
        p(&[2, 1])
    );
    assert_eq!(partition_colsum(&[p(&[3, 1])]).unwrap(), p(&[3, 1]));
}

#[test]
fn first_and_discrete_series_rows_validate() {
    let group = LGroup::pgl2();
    let y = diag_y("1/4", "-1/4");
    assert_eq!(y.matrix().to_string(), "[[i, 0], [0, -i]]");
    assert!(validate_parameter(&group, y, rho()).is_ok());
    let bad = validate_parameter(&group, diag_y("0", "0"), rho());
    assert!(matches!(bad, Err(Error::SquareMismatch(_))));
    assert!(validate_parameter(&group, antidiag_y(), pgl2_lambda(&g("3/2"))).is_ok());
    // n_s² = −Id needs a ∈ 1/2 + ℤ
    assert!(validate_parameter(&group, antidiag_y(), pgl2_lambda(&g("1"))).is_err());
}

#[test]
fn temperedness() {
    let group = LGroup::pgl2();
    let sp = validate_parameter(
        &group,
        ExtendedElement::diagonal(pgl2_lambda(&g("i")).half()),
        pgl2_lambda(&g("i")),
    )
    .unwrap();
    assert!(is_tempered(&sp));
    let ds = validate_parameter(&group, antidiag_y(), pgl2_lambda(&g("3/2"))).unwrap();
    assert!(is_tempered(&ds));
    let a = g("2/3");
    let ps = validate_parameter(
        &group,
        ExtendedElement::diagonal(pgl2_lambda(&a).half()),
        pgl2_lambda(&a),
    )
    .unwrap();
    // Re(2λ) = (4/3, −4/3) ≠ 0
    assert_ne!((&a + &a).re, rat(0, 1));
    assert!(!is_tempered(&ps));
}

#[test]
fn discrete_series_predicate() {
    let group = LGroup::pgl2();
    let ds = validate_parameter(&group, antidiag_y(), rho()).unwrap();
    assert!(is_discrete_series_packet(&group, &ds));
    let diag = validate_parameter(&group, diag_y("1/4", "-1/4"), rho()).unwrap();
    assert!(!is_discrete_series_packet(&group, &diag));
    let torus = LGroup::torus(0);
    let trivial =
        validate_parameter(&torus, ExtendedElement::delta(0), CartanVector::zero(0)).unwrap();
    assert!(is_discrete_series_packet(&torus, &trivial));
    let torus = LGroup::torus(1);
    let one = validate_parameter(&torus, ExtendedElement::delta(1), CartanVector::zero(1)).unwrap();
    assert!(!is_discrete_series_packet(&torus, &one));
}

#[test]
fn component_groups_follow_the_centralizer_column() {
    let group = LGroup::pgl2();
    let ds = validate_parameter(&group, antidiag_y(), rho()).unwrap();
    assert_eq!(component_group(&group, &ds).unwrap().to_string(), "Z/2");
    let fd = validate_parameter(&group, diag_y("1/4", "-1/4"), rho()).unwrap();
    assert!(component_group(&group, &fd).unwrap().is_trivial());
    let a = g("3/7i");
    let ps = validate_parameter(
        &group,
        ExtendedElement::diagonal(pgl2_lambda(&a).half()),
        pgl2_lambda(&a),
    )
    .unwrap();
    assert!(component_group(&group, &ps).unwrap().is_trivial());
}

#[test]
fn enumeration_counts() {
    let group = LGroup::pgl2();
    let half = enumerate_parameters(&group, &g("1/2")).unwrap();
    let ys: Vec<String> = half.iter().map(|p| p.y().matrix().to_string()).collect();
    assert_eq!(
        ys,
        [
            "[[i, 0], [0, -i]]",
            "[[-i, 0], [0, i]]",
            "[[0, 1], [-1, 0]]"
        ]
    );
    assert_eq!(enumerate_parameters(&group, &g("2/3")).unwrap().len(), 2);
    let imaginary = enumerate_parameters(&group, &g("i")).unwrap();
    assert_eq!(imaginary.len(), 2);
    assert!(imaginary.iter().all(is_tempered));
}

#[test]
fn packet_labels_of_the_tables() {
    let group = LGroup::pgl2();
    let ds = validate_parameter(&group, antidiag_y(), rho()).unwrap();
    let labels = packet_labels(
        &group,
        &CompleteLanglandsParameter::new(&group, ds, 0).unwrap(),
    )
    .unwrap();
    assert_eq!(
        labels[0].text(),
        "discrete series of infinitesimal character 1/2"
    );
    assert_eq!(labels[1].text(), "finite-dimensional of dimension 1");
    let fd = validate_parameter(&group, diag_y("1/4", "-1/4"), rho()).unwrap();
    let labels = packet_labels(
        &group,
        &CompleteLanglandsParameter::new(&group, fd, 0).unwrap(),
    )
    .unwrap();
    assert_eq!(
        labels[0].text(),
        "spherical finite-dimensional of dimension 1"
    );
    assert_eq!(labels[1].description, None);
    let a = g("2/3");
    let ps = validate_parameter(
        &group,
        ExtendedElement::diagonal(pgl2_lambda(&a).half()),
        pgl2_lambda(&a),
    )
    .unwrap();
    let labels = packet_labels(
        &group,
        &CompleteLanglandsParameter::new(&group, ps, 0).unwrap(),
    )
    .unwrap();
    assert!(labels[0].text().starts_with("spherical principal series"));
    assert_eq!(labels[1].description, None);
}

#[test]
fn integral_gradings() {
    let sl2 = BasedRootDatum::sl(2);
    let sys = integral_graded_system(&sl2, &rho()).unwrap();
    let mut grades: Vec<i64> = sys.roots().iter().map(|r| r.grade).collect();
    grades.sort_unstable();
    assert_eq!(grades, [-1, 1]);
    assert!(sys.is_borel());
    // ⟨α, diag(2/3, −2/3)⟩ = 4/3
    assert!(integral_graded_system(&sl2, &pgl2_lambda(&g("2/3")))
        .unwrap()
        .roots()
        .is_empty());
    let zero = integral_graded_system(&sl2, &CartanVector::zero(2)).unwrap();
    assert!(zero.roots().iter().all(|r| r.grade == 0));
    assert!(zero.nilradical_roots().is_empty());
}

#[test]
fn canonical_flats() {
    let group = LGroup::pgl2();
    let fd = validate_parameter(&group, diag_y("1/4", "-1/4"), rho()).unwrap();
    let geo = to_geometric(&group, &fd).unwrap();
    assert_eq!(geo.flat.base(), &rho());
    assert_eq!(geo.flat.u_roots().len(), 1);
    let zero = validate_parameter(&group, diag_y("0", "0"), CartanVector::zero(2)).unwrap();
    assert!(to_geometric(&group, &zero)
        .unwrap()
        .flat
        .u_roots()
        .is_empty());
}

#[test]
fn stratifications() {
    let group = LGroup::pgl2();
    let poset = stratify_orbit(&group, &rho()).unwrap();
    let shape: Vec<(String, usize, u64)> = poset
        .strata()
        .iter()
        .map(|s| (s.id.clone(), s.dimension, s.fundamental_group.order()))
        .collect();
    assert_eq!(
        shape,
        [("N".into(), 0, 1), ("S".into(), 0, 1), ("U".into(), 1, 2)]
    );
    let point = stratify_orbit(&group, &pgl2_lambda(&g("2/3"))).unwrap();
    assert_eq!(point.strata().len(), 2);
    assert!(point.strata().iter().all(|s| s.dimension == 0));
    // one stratum per subset of the coordinates
    let torus = stratify_orbit(&LGroup::torus(1), &CartanVector::zero(1)).unwrap();
    assert_eq!(torus.strata().len(), 2);
    assert_eq!(
        stratify_orbit(&LGroup::torus(0), &CartanVector::zero(0))
            .unwrap()
            .strata()
            .len(),
        1
    );
}

#[test]
fn complete_geometric_parameters_match_the_langlands_side() {
    let group = LGroup::pgl2();
    let poset = stratify_orbit(&group, &rho()).unwrap();
    let names: Vec<String> = complete_parameters_of(&poset)
        .iter()
        .map(ToString::to_string)
        .collect();
    assert_eq!(names, ["(N,triv)", "(S,triv)", "(U,triv)", "(U,sgn)"]);
    let params = enumerate_parameters(&group, &g("1/2")).unwrap();
    assert_eq!(
        complete_parameters(&group, &params).unwrap().len(),
        names.len()
    );
    let point = stratify_orbit(&group, &pgl2_lambda(&g("2/3"))).unwrap();
    assert_eq!(complete_parameters_of(&point).len(), point.strata().len());
    // the π(S,𝓛) column
    let reps: Vec<String> = complete_parameters_of(&poset)
        .iter()
        .map(|c| {
            let r = representation_of(&group, &langlands_of(&group, &poset, c).unwrap()).unwrap();
            format!("{} of {}", r.short(), r.real_form.group_name())
        })
        .collect();
    assert_eq!(
        reps,
        [
            "triv of G_s",
            "sgn of G_s",
            "discrete series of infinitesimal character 1/2 of G_s",
            "triv of G_c"
        ]
    );
}

#[test]
fn intersection_cohomology_classes() {
    let poset = stratify_orbit(&LGroup::pgl2(), &rho()).unwrap();
    assert_eq!(
        ic_class_in_mu_basis(&poset, "U", 0).unwrap().coeffs,
        [-1, -1, 1, 0]
    );
    assert_eq!(
        ic_class_in_mu_basis(&poset, "U", 1).unwrap().coeffs,
        [0, 0, 0, 1]
    );
    assert_eq!(
        ic_class_in_mu_basis(&poset, "N", 0).unwrap().coeffs,
        [1, 0, 0, 0]
    );
}

#[test]
fn decomposition_matrices() {
    let group = LGroup::pgl2();
    let poset = stratify_orbit(&group, &rho()).unwrap();
    assert_eq!(
        m_g_matrix(&poset).unwrap().rows,
        [[1, 0, 0, 0], [0, 1, 0, 0], [1, 1, 1, 0], [0, 0, 0, 1]]
    );
    assert_eq!(
        m_r_matrix(&poset).unwrap().rows,
        [[1, 0, 1, 0], [0, 1, 1, 0], [0, 0, 1, 0], [0, 0, 0, 1]]
    );
    for lambda in [pgl2_lambda(&g("2/3")), pgl2_lambda(&g("i"))] {
        let point = stratify_orbit(&group, &lambda).unwrap();
        assert!(m_g_matrix(&point).unwrap().is_identity());
        assert!(m_r_matrix(&point).unwrap().is_identity());
    }
    let torus = stratify_orbit(&LGroup::torus(1), &CartanVector::zero(1)).unwrap();
    assert!(m_g_matrix(&torus).unwrap().is_identity());
}

#[test]
fn characteristic_cycles() {
    let poset = stratify_orbit(&LGroup::pgl2(), &rho()).unwrap();
    let at = |id: &str, chi: u64| {
        let cc = characteristic_cycle(&poset, id, chi).unwrap();
        ["N", "S", "U"].map(|s| cc.at(s))
    };
    assert_eq!(at("U", 0), [0, 0, 1]);
    assert_eq!(at("U", 1), [1, 1, 1]);
    // stalks: n = 0 on U, n_N = 1, so the multiplicity at N is 1 − 0
    assert_eq!(at("N", 0), [1, 0, 0]);
}

#[test]
fn microlocal_packets() {
    let poset = stratify_orbit(&LGroup::pgl2(), &rho()).unwrap();
    let names = |s: &str| -> Vec<String> {
        arthur_microlocal_packet(&poset, s)
            .unwrap()
            .iter()
            .map(ToString::to_string)
            .collect()
    };
    assert_eq!(names("N"), ["(N,triv)", "(U,sgn)"]);
    assert_eq!(names("S"), ["(S,triv)", "(U,sgn)"]);
    assert_eq!(names("U"), ["(U,triv)", "(U,sgn)"]);
}

#[test]
fn iota_rank_one() {
    assert_eq!(iota(&ComplexFunctional(vec![g("0")])).on_real[0], rat(0, 1));
    let mu = ComplexFunctional(vec![g("2/3+i"), g("-1/2")]);
    assert_eq!(iota_inverse(&iota(&mu)).unwrap(), mu);
    // ι(μ)(X) = μX − conj: for μ = k + it, λ(1) = it and λ(i) = ik
    let l = iota(&ComplexFunctional(vec![g("3+5i")]));
    assert_eq!(
        (l.on_real[0].clone(), l.on_imag[0].clone()),
        (rat(5, 1), rat(3, 1))
    );
}

#[test]
fn integrality_examples() {
    let whole = LeviBlocks::whole(1);
    let cf = |v: &[&str]| ComplexFunctional(v.iter().map(|s| g(s)).collect());
    assert!(is_integral_center(&cf(&["0", "0"]), &LeviBlocks::torus(2)).unwrap());
    assert!(is_integral_center(&cf(&["2+5i"]), &whole).unwrap());
    assert!(!is_integral_center(&cf(&["1/2"]), &whole).unwrap());
    assert!(is_integral_center(&cf(&["1", "-3"]), &LeviBlocks::new(vec![2, 1]).unwrap()).unwrap());
}

#[test]
fn induction_examples() {
    let torus = LeviBlocks::torus(2);
    let ones = vec![p(&[1]), p(&[1])];
    let cf = |v: &[&str]| ComplexFunctional(v.iter().map(|s| g(s)).collect());
    let same = InductionDatum::new(torus.clone(), ones.clone(), &cf(&["1/3i", "1/3i"])).unwrap();
    assert_eq!(bind(&same).to_string(), "{(1/3i, (2))}");
    let apart = InductionDatum::new(torus, ones, &cf(&["1", "-2i"])).unwrap();
    assert_eq!(bind(&apart).to_string(), "{(-2i, (1)), (1, (1))}");
    let whole = InductionDatum::new(LeviBlocks::whole(4), vec![p(&[2, 2])], &cf(&["0"])).unwrap();
    assert_eq!(
        bind(&whole),
        CoadjointDescriptor::nilpotent(p(&[2, 2])).unwrap()
    );
}

#[test]
fn rigidity_examples() {
    for n in 1..=6 {
        assert!(is_birationally_rigid(&Partition::zero_orbit(n)));
    }
    assert!(!is_birationally_rigid(&p(&[2])));
    assert!(!is_birationally_rigid(&p(&[2, 1])));
}

#[test]
fn minimal_data_examples() {
    let d = minimal_datum(&parse_descriptor("2,1").unwrap());
    assert_eq!(d.levi().blocks(), &[2, 1]);
    assert!(d.is_minimal() && d.xi().iter().all(GaussianRational::is_zero));
    let z = minimal_datum(&parse_descriptor("1,1,1").unwrap());
    assert_eq!(z.levi().blocks(), &[3]);
    let rs = minimal_datum(&parse_descriptor("1:1;i:1").unwrap());
    assert_eq!(rs.levi(), &LeviBlocks::torus(2));
    // blocks are listed in eigenvalue order, i before 1
    assert_eq!(rs.xi(), &[g("i"), g("1")]);
}

fn psi_plus() -> ArthurParameter {
    parse_arthur("q=2").unwrap()
}

fn psi_minus() -> ArthurParameter {
    parse_arthur("q=2;j=-").unwrap()
}

#[test]
fn arthur_classes() {
    assert_eq!(classify_arthur(&psi_plus()), ArthurClass::Unipotent);
    let sp = parse_arthur("q=1,1;hol=i,-i;anti=i,-i").unwrap();
    assert_eq!(classify_arthur(&sp), ArthurClass::Tempered);
    let mixed = parse_arthur("group=gl3;q=2,1;hol=i,i,0;anti=i,i,0").unwrap();
    assert_eq!(classify_arthur(&mixed), ArthurClass::Mixed);
}

#[test]
fn langlands_parameters_of_arthur_parameters() {
    let plus = phi_of_psi(&psi_plus()).unwrap();
    assert_eq!(plus.lambda(), &rho());
    assert_eq!(plus.y().matrix().to_string(), "[[i, 0], [0, -i]]");
    let minus = phi_of_psi(&psi_minus()).unwrap();
    assert_eq!(minus.lambda(), &rho());
    assert_eq!(minus.y().matrix().to_string(), "[[-i, 0], [0, i]]");
    let ds = parse_arthur("q=1,1;hol=3/2,-3/2;anti=-3/2,3/2;j=1,0|0,0").unwrap();
    let phi = phi_of_psi(&ds).unwrap();
    let group = LGroup::pgl2();
    assert_eq!(phi.lambda(), &pgl2_lambda(&g("3/2")));
    assert!(is_discrete_series_packet(&group, &phi));
    let labels = packet_labels(
        &group,
        &CompleteLanglandsParameter::new(&group, phi, 0).unwrap(),
    )
    .unwrap();
    assert_eq!(
        labels[0].text(),
        "discrete series of infinitesimal character 3/2"
    );
}

#[test]
fn levi_splittings() {
    let trivial = parse_arthur("group=gl2;q=2").unwrap();
    let s = split_at_levi(&trivial).unwrap();
    assert_eq!(s.levi, LeviBlocks::whole(2));
    assert_eq!(s.psi0, [p(&[2])]);
    assert!(s.xi1.0.iter().all(GaussianRational::is_zero));
    // ψ₁(z) = (z/|z|)^0·|z|^{2it}: ξ₁ = k + it' with t' = 2t
    let torus = parse_arthur("group=gl2;q=1,1;hol=3i,0;anti=3i,0").unwrap();
    let s = split_at_levi(&torus).unwrap();
    assert_eq!(s.levi, LeviBlocks::torus(2));
    assert_eq!(s.xi1.0, [g("6i"), g("0")]);
    let bad = parse_arthur("group=gl2;q=2;hol=i,0;anti=i,0");
    assert!(matches!(
        bad.and_then(|psi| split_at_levi(&psi)),
        Err(Error::SL2NotInLevi(_))
    ));
}

#[test]
fn d_zero_is_blockwise_transpose() {
    assert_eq!(
        d_zero(&[p(&[2])], &LeviBlocks::whole(2)).unwrap(),
        [p(&[1, 1])]
    );
    assert_eq!(
        d_zero(&[p(&[1, 1])], &LeviBlocks::whole(2)).unwrap(),
        [p(&[2])]
    );
    assert_eq!(
        d_zero(&[p(&[1])], &LeviBlocks::whole(1)).unwrap(),
        [p(&[1])]
    );
    assert!(matches!(
        d_zero(&[p(&[2])], &LeviBlocks::torus(2)),
        Err(Error::BlockMismatch(_))
    ));
}

#[test]
fn duality_examples() {
    let zero = duality_descriptor(&parse_arthur("group=gl2;q=2").unwrap()).unwrap();
    assert_eq!(zero.kind(), "zero orbit");
    let principal = duality_descriptor(&parse_arthur("group=gl2;q=1,1").unwrap()).unwrap();
    assert_eq!(principal.kind(), "principal nilpotent orbit");
    let psi = parse_arthur("group=gl2;q=1,1;hol=i,0;anti=i,0").unwrap();
    let ss = duality_descriptor(&psi).unwrap();
    assert_eq!(ss.kind(), "semisimple orbit");
    assert_eq!(
        ss,
        CoadjointDescriptor::new(vec![(g("0"), p(&[1])), (g("2i"), p(&[1]))]).unwrap()
    );
    assert_eq!(duality_map(&psi).unwrap(), ss.iota());
}

#[test]
fn kirillov_fixtures() {
    let zero = CoadjointDescriptor::nilpotent(p(&[1, 1])).unwrap().iota();
    let pgl2 = kirillov_packet_descriptor(ArthurGroup::Pgl2, &zero).unwrap();
    assert_eq!(pgl2.labels, ["triv of G_s", "triv of G_c"]);
    let rs = parse_descriptor("1:1;2i:1").unwrap().iota();
    let ps = kirillov_packet_descriptor(ArthurGroup::Gl(2), &rs).unwrap();
    assert_eq!(ps.levi, LeviBlocks::torus(2));
    assert_eq!(ps.summary(), "unitary principal series");
    let non_integral: RealCoadjointDescriptor = parse_descriptor("1/2:1;0:1").unwrap().iota();
    assert!(matches!(
        kirillov_packet_descriptor(ArthurGroup::Gl(2), &non_integral),
        Err(Error::UnsupportedFixture(_))
    ));
}
