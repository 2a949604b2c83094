//! The `langlands` command line: argument grammar, dispatch, and the report
//! builders behind each subcommand.

pub mod report;
pub mod verify;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use langlands_core::arthur::{
    classify_arthur, duality_descriptor, duality_map, kirillov_packet_descriptor, phi_of_psi,
    split_at_levi, ArthurGroup, ArthurParameter,
};
use langlands_core::geoparams::{
    complete_parameters_of, langlands_of, stratify_orbit, StratumPoset,
};
use langlands_core::lparams::{
    centralizer_label, component_group, enumerate_parameters, is_discrete_series_packet,
    is_tempered, packet_labels, pgl2_lambda, representation_of, validate_parameter,
    CompleteLanglandsParameter, ExtendedElement, LGroup, LanglandsParameter,
};
use langlands_core::orbits::{
    bind, induction_witness, is_birationally_rigid, is_integral_center, minimal_data_binding_to,
    minimal_datum, ComplexFunctional, InductionDatum,
};
use langlands_core::parse;
use langlands_core::sheafk::{
    arthur_microlocal_packet, characteristic_cycle, m_g_matrix, m_r_matrix, ChangeOfBasis,
};
use langlands_core::{CartanVector, Error, GaussianRational, LeviBlocks, Partition, Result};

use report::{Block, Report};

#[derive(Parser, Debug)]
#[command(
    name = "langlands",
    version,
    about = "Exact tables for Langlands parameters, geometric parameters, Arthur packets and orbit duality"
)]
struct Cli {
    /// Print the machine block only.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Langlands parameters (y, λ).
    #[command(subcommand)]
    Params(ParamsCmd),
    /// Orbit stratification of the geometric parameter space.
    #[command(subcommand)]
    Geo(GeoCmd),
    /// Grothendieck group bases, characteristic cycles, microlocal packets.
    #[command(subcommand)]
    Kgroup(KgroupCmd),
    /// Nilpotent and coadjoint orbit data for GL(n).
    #[command(subcommand)]
    Orbit(OrbitCmd),
    /// Arthur parameters and the duality map.
    #[command(subcommand)]
    Duality(DualityCmd),
    /// Bundled reports.
    #[command(subcommand)]
    Report(ReportCmd),
    /// Built-in consistency checks.
    #[command(subcommand)]
    Verify(VerifyCmd),
}

#[derive(Subcommand, Debug)]
enum ParamsCmd {
    /// All parameter classes with λ = diag(a, −a), with their L-packets.
    Enumerate {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long, value_parser = scalar_arg, allow_hyphen_values = true)]
        a: GaussianRational,
    },
    /// Validate one pair (y, λ) and report its invariants.
    Classify {
        #[command(flatten)]
        group: GroupArg,
        #[command(flatten)]
        lambda: LambdaArgs,
        /// The permutation Ad(y) induces on coordinates; identity if omitted.
        #[arg(long, value_parser = indices_arg)]
        weyl: Option<Indices>,
        /// Exponent t with torus part exp(2πi·t).
        #[arg(long, value_parser = coords_arg, allow_hyphen_values = true)]
        torus: CartanVector,
    },
}

#[derive(Subcommand, Debug)]
enum GeoCmd {
    /// Strata, their closures and fundamental groups.
    Stratify {
        #[command(flatten)]
        group: GroupArg,
        #[command(flatten)]
        lambda: LambdaArgs,
    },
}

#[derive(Subcommand, Debug)]
enum KgroupCmd {
    /// Change of basis from extensions by zero to intersection cohomology.
    Mg(GeoArgs),
    /// Change of basis from standard to irreducible representations.
    Mr(GeoArgs),
    /// Characteristic cycles of the simple perverse sheaves.
    Cc {
        #[command(flatten)]
        geo: GeoArgs,
        #[arg(long)]
        stratum: Option<String>,
        #[arg(long, value_parser = chi_arg, requires = "stratum")]
        chi: Option<u64>,
    },
    /// The microlocal Arthur packet attached to a stratum.
    Packet {
        #[command(flatten)]
        geo: GeoArgs,
        #[arg(long)]
        stratum: String,
    },
}

#[derive(Subcommand, Debug)]
enum OrbitCmd {
    /// Birational induction from a Levi.
    Bind {
        /// Levi block sizes, e.g. 2,1.
        #[arg(long, value_parser = levi_arg)]
        blocks: LeviBlocks,
        /// One partition per block separated by `;`; zero orbits if omitted.
        #[arg(long, value_parser = orbits_arg)]
        orbits: Option<Orbits>,
        /// Central character, one value per block or per coordinate.
        #[arg(long, value_parser = coords_arg, allow_hyphen_values = true)]
        xi: Option<CartanVector>,
    },
    /// The minimal induction datum of a coadjoint orbit.
    Minimal {
        /// `xi:parts` entries separated by `;`, e.g. `0:2,1;i:1`.
        #[arg(long, value_parser = descriptor_arg, allow_hyphen_values = true)]
        desc: langlands_core::orbits::CoadjointDescriptor,
    },
    /// Whether a nilpotent orbit is birationally rigid.
    Rigid {
        #[arg(long, value_parser = partition_arg)]
        partition: Partition,
    },
}

#[derive(Subcommand, Debug)]
enum DualityCmd {
    /// D(ψ) = ι(Bind(L, D₀(ψ₀), ξ₁)).
    Map(ArthurArgs),
    /// The Levi L∨ = Z(ψ(ℂ×)), the SL(2)-types ψ₀ and the character ξ₁.
    Split(ArthurArgs),
}

#[derive(Subcommand, Debug)]
enum ReportCmd {
    /// The PGL(2) worked example.
    Pgl2 {
        #[arg(long, value_parser = scalar_arg, allow_hyphen_values = true, default_value = "1/2")]
        a: GaussianRational,
        /// Also emit the geometric side and the unipotent Arthur packets.
        #[arg(long)]
        all: bool,
    },
}

#[derive(Subcommand, Debug)]
enum VerifyCmd {
    /// Run every check.
    All,
}

#[derive(Args, Debug)]
struct GroupArg {
    /// pgl2 or gl1 … gl5.
    #[arg(long, value_parser = group_arg, default_value = "pgl2")]
    group: ArthurGroup,
}

#[derive(Args, Debug)]
struct LambdaArgs {
    /// `rho` or a coordinate list.
    #[arg(long, value_parser = lambda_arg, allow_hyphen_values = true, conflicts_with = "a")]
    lambda: Option<LambdaArg>,
    /// PGL(2) shorthand for λ = diag(a, −a).
    #[arg(long, value_parser = scalar_arg, allow_hyphen_values = true)]
    a: Option<GaussianRational>,
}

#[derive(Args, Debug)]
struct GeoArgs {
    #[command(flatten)]
    group: GroupArg,
    #[command(flatten)]
    lambda: LambdaArgs,
}

#[derive(Args, Debug)]
struct ArthurArgs {
    #[command(flatten)]
    group: GroupArg,
    /// The SL(2)-type as a partition.
    #[arg(long)]
    q: String,
    /// λ_hol; a single value is repeated on every coordinate.
    #[arg(long, allow_hyphen_values = true)]
    chol: Option<String>,
    /// λ_anti; a single value is repeated on every coordinate.
    #[arg(long, allow_hyphen_values = true)]
    canti: Option<String>,
    /// Image of j (real groups): `+`, `-`, or `perm|coords`.
    #[arg(long, allow_hyphen_values = true)]
    j: Option<String>,
}

#[derive(Clone, Debug)]
struct Indices(Vec<usize>);

#[derive(Clone, Debug)]
struct Orbits(Vec<Partition>);

#[derive(Clone, Debug)]
enum LambdaArg {
    Rho,
    Coords(CartanVector),
}

fn scalar_arg(s: &str) -> std::result::Result<GaussianRational, String> {
    parse::parse_scalar(s).map_err(|e| e.to_string())
}

fn coords_arg(s: &str) -> std::result::Result<CartanVector, String> {
    parse::parse_coords(s).map_err(|e| e.to_string())
}

fn lambda_arg(s: &str) -> std::result::Result<LambdaArg, String> {
    if s.trim() == "rho" {
        Ok(LambdaArg::Rho)
    } else {
        coords_arg(s).map(LambdaArg::Coords)
    }
}

fn group_arg(s: &str) -> std::result::Result<ArthurGroup, String> {
    parse::parse_group(s).map_err(|e| e.to_string())
}

fn levi_arg(s: &str) -> std::result::Result<LeviBlocks, String> {
    parse::parse_levi(s).map_err(|e| e.to_string())
}

fn partition_arg(s: &str) -> std::result::Result<Partition, String> {
    parse::parse_partition(s).map_err(|e| e.to_string())
}

fn orbits_arg(s: &str) -> std::result::Result<Orbits, String> {
    parse::parse_orbits(s)
        .map(Orbits)
        .map_err(|e| e.to_string())
}

fn descriptor_arg(
    s: &str,
) -> std::result::Result<langlands_core::orbits::CoadjointDescriptor, String> {
    parse::parse_descriptor(s).map_err(|e| e.to_string())
}

fn indices_arg(s: &str) -> std::result::Result<Indices, String> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("`{t}` is not an index"))
        })
        .collect::<std::result::Result<_, _>>()
        .map(Indices)
}

fn chi_arg(s: &str) -> std::result::Result<u64, String> {
    match s {
        "triv" | "0" => Ok(0),
        "sgn" | "1" => Ok(1),
        _ => Err(format!("`{s}` is not a character (triv, sgn)")),
    }
}

/// The L-group whose parameters the `params`, `geo` and `kgroup` commands use.
fn langlands_group(g: ArthurGroup) -> LGroup {
    match g {
        ArthurGroup::Pgl2 => LGroup::pgl2(),
        ArthurGroup::Gl(n) => LGroup::gl(n),
    }
}

/// Half the sum of positive coroots, `((n−1)/2, …, −(n−1)/2)`.
fn rho(n: usize) -> CartanVector {
    let n = n as i64;
    CartanVector(
        (0..n)
            .map(|k| GaussianRational::ratio(n - 1 - 2 * k, 2))
            .collect(),
    )
}

impl LambdaArgs {
    fn resolve(&self, g: ArthurGroup) -> Result<CartanVector> {
        match (&self.lambda, &self.a) {
            (Some(LambdaArg::Coords(v)), _) => Ok(v.clone()),
            (_, Some(a)) if g == ArthurGroup::Pgl2 => Ok(pgl2_lambda(a)),
            (_, Some(_)) => Err(Error::UnsupportedGroup(format!(
                "--a is a PGL(2) shorthand, not for {g}"
            ))),
            _ => Ok(rho(g.rank())),
        }
    }
}

fn broadcast(s: &Option<String>, n: usize) -> Result<Option<String>> {
    let Some(s) = s else { return Ok(None) };
    let v = parse::parse_coords(s)?;
    Ok(Some(if v.len() == 1 && n > 1 {
        vec![v[0].to_string(); n].join(",")
    } else {
        s.clone()
    }))
}

impl ArthurArgs {
    fn parameter(&self) -> Result<ArthurParameter> {
        let g = self.group.group;
        let n = g.rank();
        parse::arthur_from_parts(
            g,
            &self.q,
            broadcast(&self.chol, n)?.as_deref(),
            broadcast(&self.canti, n)?.as_deref(),
            self.j.as_deref(),
        )
    }
}

/// Parses `argv` (without the program name) and runs the command. Returns the
/// exit code and the text to print: 0 with a report, 1 with the computation
/// error's name, 2 with a usage message.
pub fn execute<I, S>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let args = std::iter::once(std::ffi::OsString::from("langlands"))
        .chain(argv.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            return (code, e.render().to_string());
        }
    };
    match run(&cli.command) {
        Ok((report, ok)) => (if ok { 0 } else { 1 }, report.render(cli.json)),
        Err(e) => (1, format!("error: {}: {e}\n", e.name())),
    }
}

fn run(cmd: &Command) -> Result<(Report, bool)> {
    let report = match cmd {
        Command::Params(ParamsCmd::Enumerate { group, a }) => params_enumerate(group.group, a)?,
        Command::Params(ParamsCmd::Classify {
            group,
            lambda,
            weyl,
            torus,
        }) => params_classify(
            group.group,
            lambda.resolve(group.group)?,
            weyl.clone().map(|w| w.0),
            torus.clone(),
        )?,
        Command::Geo(GeoCmd::Stratify { group, lambda }) => {
            geo_stratify(group.group, &lambda.resolve(group.group)?)?
        }
        Command::Kgroup(KgroupCmd::Mg(geo)) => kgroup_matrix(geo, false)?,
        Command::Kgroup(KgroupCmd::Mr(geo)) => kgroup_matrix(geo, true)?,
        Command::Kgroup(KgroupCmd::Cc { geo, stratum, chi }) => {
            kgroup_cc(geo, stratum.as_deref(), *chi)?
        }
        Command::Kgroup(KgroupCmd::Packet { geo, stratum }) => kgroup_packet(geo, stratum)?,
        Command::Orbit(OrbitCmd::Bind { blocks, orbits, xi }) => {
            orbit_bind(blocks, orbits.clone().map(|o| o.0), xi.clone())?
        }
        Command::Orbit(OrbitCmd::Minimal { desc }) => orbit_minimal(desc),
        Command::Orbit(OrbitCmd::Rigid { partition }) => orbit_rigid(partition),
        Command::Duality(DualityCmd::Map(args)) => duality_map_report(&args.parameter()?)?,
        Command::Duality(DualityCmd::Split(args)) => duality_split_report(&args.parameter()?)?,
        Command::Report(ReportCmd::Pgl2 { a, all }) => report_pgl2(a, *all)?,
        Command::Verify(VerifyCmd::All) => return Ok(verify::all()),
    };
    Ok((report, true))
}

fn parameter_row(group: &LGroup, p: &LanglandsParameter) -> Result<Vec<String>> {
    let c = CompleteLanglandsParameter::new(group, p.clone(), 0)?;
    let labels = packet_labels(group, &c)?;
    Ok(vec![
        p.lambda().display_diag(),
        p.y().matrix().to_string(),
        labels[0].text(),
        labels[1].text(),
        centralizer_label(group, p)?,
    ])
}

fn langlands_table(g: ArthurGroup, a: &GaussianRational) -> Result<Block> {
    let group = langlands_group(g);
    let rows = enumerate_parameters(&group, a)?
        .iter()
        .map(|p| parameter_row(&group, p))
        .collect::<Result<Vec<_>>>()?;
    Ok(Block::table(
        &["λ", "y", "Π(G_s)", "Π(G_c)", "Z(y,λ)"],
        rows,
    ))
}

fn params_enumerate(g: ArthurGroup, a: &GaussianRational) -> Result<Report> {
    Ok(Report::new(format!(
        "Langlands parameters for {g} with λ = diag({a}, {})",
        -a
    ))
    .section("parameters", langlands_table(g, a)?))
}

fn params_classify(
    g: ArthurGroup,
    lambda: CartanVector,
    weyl: Option<Vec<usize>>,
    torus: CartanVector,
) -> Result<Report> {
    let group = langlands_group(g);
    let n = group.dual().ambient_dim();
    let weyl = weyl.unwrap_or_else(|| (0..n).collect());
    let y = ExtendedElement::new(weyl, torus, true)?;
    let p = validate_parameter(&group, y, lambda)?;
    let a = component_group(&group, &p)?;
    let mut fields = vec![
        ("λ".to_string(), p.lambda().display_diag()),
        ("y".to_string(), p.y().matrix().to_string()),
        ("tempered".to_string(), yes_no(is_tempered(&p))),
        (
            "discrete series".to_string(),
            yes_no(is_discrete_series_packet(&group, &p)),
        ),
        ("component group".to_string(), a.to_string()),
    ];
    if group.is_pgl2() {
        fields.push(("Z(y,λ)".to_string(), centralizer_label(&group, &p)?));
    }
    let mut report = Report::new(format!("Langlands parameter for {g}"))
        .section("invariants", Block::Fields(fields));
    if group.is_pgl2() {
        let rows = (0..a.order())
            .map(|tau| {
                let c = CompleteLanglandsParameter::new(&group, p.clone(), tau)?;
                let r = representation_of(&group, &c)?;
                Ok(vec![
                    a.character_label(tau),
                    r.real_form.group_name().to_string(),
                    r.text(),
                ])
            })
            .collect::<Result<Vec<_>>>()?;
        report = report.section(
            "complete parameters",
            Block::table(&["τ", "real form", "π(φ,τ)"], rows),
        );
    }
    Ok(report)
}

fn yes_no(b: bool) -> String {
    if b { "yes" } else { "no" }.to_string()
}

/// `π(S, χ)` for the PGL(2) inner class, `-` where no fixture applies.
fn representation_label(
    group: &LGroup,
    poset: &StratumPoset,
    c: &langlands_core::geoparams::CompleteGeometricParameter,
) -> String {
    langlands_of(group, poset, c)
        .and_then(|cl| representation_of(group, &cl))
        .map(|r| format!("{} of {}", r.short(), r.real_form.group_name()))
        .unwrap_or_else(|_| "-".into())
}

fn strata_blocks(g: ArthurGroup, lambda: &CartanVector) -> Result<(StratumPoset, Block, Block)> {
    let group = langlands_group(g);
    let poset = stratify_orbit(&group, lambda)?;
    let strata = poset
        .strata()
        .iter()
        .map(|s| {
            let closure = if s.boundary.is_empty() {
                "-".to_string()
            } else {
                s.boundary.join(", ")
            };
            vec![
                s.id.clone(),
                s.dimension.to_string(),
                s.fundamental_group.to_string(),
                closure,
                s.representative.matrix().to_string(),
            ]
        })
        .collect();
    let complete = complete_parameters_of(&poset)
        .iter()
        .map(|c| vec![c.to_string(), representation_label(&group, &poset, c)])
        .collect();
    Ok((
        poset,
        Block::table(&["stratum", "dim", "π₁", "boundary", "y"], strata),
        Block::table(&["(S,χ)", "π(S,χ)"], complete),
    ))
}

fn geo_stratify(g: ArthurGroup, lambda: &CartanVector) -> Result<Report> {
    let (_, strata, complete) = strata_blocks(g, lambda)?;
    Ok(Report::new(format!(
        "Strata of X(𝕆, G^L) for {g}, λ = {}",
        lambda.display_diag()
    ))
    .section("strata", strata)
    .section("complete parameters", complete))
}

fn matrix_block(m: &ChangeOfBasis) -> Block {
    Block::Matrix {
        legend: m.labels.clone(),
        rows: m.rows.clone(),
    }
}

/// `m_r[i][j] = (−1)^{d_i−d_j}·(m_g⁻¹)[j][i]`, checked entrywise.
fn inverse_transpose_holds(mg: &ChangeOfBasis, mr: &ChangeOfBasis) -> bool {
    let Some(inv) = mg.inverse() else {
        return false;
    };
    let n = mg.size();
    (0..n).all(|i| {
        (0..n).all(|j| {
            let sign = if (mg.dims[i] + mg.dims[j]).is_multiple_of(2) {
                1
            } else {
                -1
            };
            mr.rows[i][j] == sign * inv.rows[j][i]
        })
    })
}

fn poset_of(geo: &GeoArgs) -> Result<(LGroup, StratumPoset)> {
    let g = geo.group.group;
    let group = langlands_group(g);
    let poset = stratify_orbit(&group, &geo.lambda.resolve(g)?)?;
    Ok((group, poset))
}

fn kgroup_matrix(geo: &GeoArgs, standard: bool) -> Result<Report> {
    let (_, poset) = poset_of(geo)?;
    let mg = m_g_matrix(&poset)?;
    let lambda = poset.lambda().display_diag();
    if !standard {
        return Ok(Report::new(format!(
            "m_g at λ = {lambda}: extensions by zero to intersection cohomology"
        ))
        .section("m_g", matrix_block(&mg)));
    }
    let mr = m_r_matrix(&poset)?;
    let check = inverse_transpose_holds(&mg, &mr);
    Ok(
        Report::new(format!("m_r at λ = {lambda}: standard to irreducible"))
            .section("m_r", matrix_block(&mr))
            .section(
                "inverse transpose",
                Block::fields([(
                    "m_r[i][j] = (−1)^(d_i−d_j)·(m_g⁻¹)[j][i]",
                    if check { "holds" } else { "fails" },
                )]),
            ),
    )
}

fn cycle_table(poset: &StratumPoset, only: Option<(&str, Option<u64>)>) -> Result<Block> {
    let ids: Vec<String> = poset.strata().iter().map(|s| s.id.clone()).collect();
    let mut columns = vec!["P(S,χ)".to_string()];
    columns.extend(ids.iter().cloned());
    columns.push("χ(P)".into());
    let mut rows = Vec::new();
    for c in complete_parameters_of(poset) {
        if let Some((id, chi)) = only {
            if c.stratum.id != id || chi.is_some_and(|x| x != c.character) {
                continue;
            }
        }
        let cc = characteristic_cycle(poset, &c.stratum.id, c.character)?;
        let mut row = vec![c.to_string()];
        row.extend(ids.iter().map(|s| cc.at(s).to_string()));
        row.push(cc.to_string());
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(Error::InvalidParameter(
            "no matching complete parameter".into(),
        ));
    }
    Ok(Block::Table { columns, rows })
}

fn kgroup_cc(geo: &GeoArgs, stratum: Option<&str>, chi: Option<u64>) -> Result<Report> {
    let (_, poset) = poset_of(geo)?;
    if let Some(s) = stratum {
        poset.get(s)?;
    }
    Ok(Report::new(format!(
        "Characteristic cycles at λ = {}",
        poset.lambda().display_diag()
    ))
    .section(
        "characteristic cycles",
        cycle_table(&poset, stratum.map(|s| (s, chi)))?,
    ))
}

fn packet_block(group: &LGroup, poset: &StratumPoset, stratum: &str) -> Result<Block> {
    let rows = arthur_microlocal_packet(poset, stratum)?
        .iter()
        .map(|c| vec![c.to_string(), representation_label(group, poset, c)])
        .collect();
    Ok(Block::table(&["(S,χ)", "π(S,χ)"], rows))
}

fn kgroup_packet(geo: &GeoArgs, stratum: &str) -> Result<Report> {
    let (group, poset) = poset_of(geo)?;
    Ok(Report::new(format!(
        "Microlocal Arthur packet along {stratum} at λ = {}",
        poset.lambda().display_diag()
    ))
    .section("packet", packet_block(&group, &poset, stratum)?))
}

fn list<T: ToString>(v: &[T]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

fn xi_summary(d: &langlands_core::orbits::CoadjointDescriptor) -> String {
    if d.is_nilpotent() {
        "0".into()
    } else {
        format!(
            "({})",
            list(
                &d.entries()
                    .iter()
                    .map(|(x, _)| x.clone())
                    .collect::<Vec<_>>()
            )
        )
    }
}

fn orbit_bind(
    blocks: &LeviBlocks,
    orbits: Option<Vec<Partition>>,
    xi: Option<CartanVector>,
) -> Result<Report> {
    let orbits = orbits.unwrap_or_else(|| {
        blocks
            .blocks()
            .iter()
            .map(|&b| Partition::zero_orbit(b))
            .collect()
    });
    let xi = ComplexFunctional(
        xi.map_or_else(|| vec![GaussianRational::zero(); blocks.count()], |v| v.0),
    );
    let datum = InductionDatum::new(blocks.clone(), orbits, &xi)?;
    let d = bind(&datum);
    Ok(
        Report::new(format!("Birational induction to GL({})", datum.rank())).section(
            "induction",
            Block::fields([
                ("datum", datum.to_string()),
                ("Bind", d.to_string()),
                ("orbit", format!("{}, xi = {}", d.kind(), xi_summary(&d))),
                ("ι", d.iota().to_string()),
            ]),
        ),
    )
}

fn orbit_minimal(desc: &langlands_core::orbits::CoadjointDescriptor) -> Report {
    let datum = minimal_datum(desc);
    let all = minimal_data_binding_to(desc);
    Report::new(format!("Minimal induction datum in GL({})", desc.rank())).section(
        "minimal datum",
        Block::fields([
            ("descriptor", desc.to_string()),
            (
                "orbit",
                format!("{}, xi = {}", desc.kind(), xi_summary(desc)),
            ),
            ("minimal datum", datum.to_string()),
            ("Bind of minimal datum", bind(&datum).to_string()),
            ("minimal data up to conjugacy", all.len().to_string()),
        ]),
    )
}

fn orbit_rigid(p: &Partition) -> Report {
    let witness = induction_witness(p).map_or_else(|| "-".to_string(), |d| d.to_string());
    Report::new(format!("Rigidity of the nilpotent orbit {p}")).section(
        "rigidity",
        Block::fields([
            ("partition", p.to_string()),
            ("birationally rigid", yes_no(is_birationally_rigid(p))),
            ("induced from", witness),
        ]),
    )
}

fn psi_fields(psi: &ArthurParameter) -> Vec<(String, String)> {
    vec![
        ("group".into(), psi.group().to_string()),
        ("q".into(), psi.q().to_string()),
        ("λ_hol".into(), psi.lambda_hol().to_string()),
        ("λ_anti".into(), psi.lambda_anti().to_string()),
        ("class".into(), classify_arthur(psi).to_string()),
    ]
}

fn split_fields(psi: &ArthurParameter) -> Result<Vec<(String, String)>> {
    let split = split_at_levi(psi)?;
    let integral = is_integral_center(&split.xi1, &split.levi)?;
    Ok(vec![
        ("L".into(), split.levi.to_string()),
        ("ψ₀".into(), format!("[{}]", list(&split.psi0))),
        ("ξ₁".into(), format!("({})", list(&split.xi1.0))),
        ("ξ₁ integral".into(), yes_no(integral)),
    ])
}

fn duality_split_report(psi: &ArthurParameter) -> Result<Report> {
    let mut fields = psi_fields(psi);
    fields.extend(split_fields(psi)?);
    Ok(
        Report::new(format!("Levi splitting of ψ for {}", psi.group()))
            .section("splitting", Block::Fields(fields)),
    )
}

fn duality_map_report(psi: &ArthurParameter) -> Result<Report> {
    let mut fields = psi_fields(psi);
    let phi = phi_of_psi(psi)?;
    fields.push(("λ(φ_ψ)".into(), phi.lambda().to_string()));
    fields.extend(split_fields(psi)?);
    let d = duality_descriptor(psi)?;
    fields.push(("Bind".into(), d.to_string()));
    fields.push((
        "orbit".into(),
        format!("{}, xi = {}", d.kind(), xi_summary(&d)),
    ));
    let cover = duality_map(psi)?;
    fields.push(("D(ψ)".into(), cover.to_string()));
    let packet = match kirillov_packet_descriptor(psi.group(), &cover) {
        Ok(p) => format!("{p} ({})", p.summary()),
        Err(e) => format!("no fixture: {}", e.name()),
    };
    fields.push(("Kirillov packet".into(), packet));
    Ok(Report::new(format!("Duality map for {}", psi.group()))
        .section("duality", Block::Fields(fields)))
}

fn report_pgl2(a: &GaussianRational, all: bool) -> Result<Report> {
    let g = ArthurGroup::Pgl2;
    let mut report = Report::new("The PGL(2) inner class").section(
        format!("Langlands parameters, a = {a}"),
        langlands_table(g, a)?,
    );
    if !all {
        return Ok(report);
    }
    let group = langlands_group(g);
    let (poset, strata, complete) = strata_blocks(g, &rho(2))?;
    let mg = m_g_matrix(&poset)?;
    let mr = m_r_matrix(&poset)?;
    report = report
        .section("strata at λ = ρ", strata)
        .section("complete geometric parameters", complete)
        .section("m_g", matrix_block(&mg))
        .section("m_r", matrix_block(&mr))
        .section("characteristic cycles", cycle_table(&poset, None)?);
    for (name, j) in [("ψ⁺", "+"), ("ψ⁻", "-")] {
        let psi = parse::arthur_from_parts(g, "2", None, None, Some(j))?;
        let phi = phi_of_psi(&psi)?;
        let s = poset
            .stratum_of(&group, &phi)
            .ok_or_else(|| Error::UnsupportedGeometry(format!("φ_{name} lies on no stratum")))?;
        let heading = format!("Arthur packet {name}, φ_ψ on {}", s.id);
        let block = packet_block(&group, &poset, &s.id.clone())?;
        report = report.section(heading, block);
    }
    Ok(report)
}

/// ψ⁺ and ψ⁻ resolve to {triv G_s, triv G_c} and {sgn G_s, triv G_c}.
fn verify_packets() -> Result<bool> {
    let r = report_pgl2(&GaussianRational::ratio(1, 2), true)?;
    let labels = |prefix: &str| -> Vec<String> {
        r.sections
            .iter()
            .filter(|s| s.heading.starts_with(prefix))
            .flat_map(|s| match &s.block {
                Block::Table { rows, .. } => rows.iter().map(|r| r[1].clone()).collect(),
                _ => Vec::new(),
            })
            .collect()
    };
    Ok(labels("Arthur packet ψ⁺") == ["triv of G_s", "triv of G_c"]
        && labels("Arthur packet ψ⁻") == ["sgn of G_s", "triv of G_c"])
}
