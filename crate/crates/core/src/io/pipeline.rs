//! Command driver: loads inputs, runs the module chain for a command and
//! assembles the report.

use super::input::{builtin_ring, load_any, load_group, load_measure, load_pair, Loaded, LoadedPair};
use super::report::{sci, Report, Section, Status};
use crate::approx_props::{
    block_norms, chebyshev_state, measure_fourier, parse_rational, pushforward, rel_t_obstruction, tv_distance,
    FiniteMeasure,
};
use crate::bicrossed::KacAlgebra;
use crate::config::{Caps, RunConfig};
use crate::crossed_product::{
    check_lemma_fourier, crossed_invariant_groups, fourier_transform, inverse_fourier, length_l0,
    rd_inequality_sample, word_length, CrossedInstance, DualElement, FourierContext, FusionRing, LengthFunction,
};
use crate::error::{Error, Result};
use crate::groups::{abelian_invariants, abelianization, is_isomorphic_small, FiniteGroup, Presentation};
use crate::matched_pair::MatchedPair;
use crate::rep_theory::{
    audit_candidates, audit_flip, audit_fusion_formula, corep_defect, coefficient_rank, enumerate_irreps,
    fusion_consistency, invariant_groups, mor_dim_haar, mor_dim_solver, tensor, IrrepCatalog,
};
use crate::standard;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::path::Path;

/// Upper bound on the candidate triples compared by the fusion oracle.
const ORACLE_TRIPLES: usize = 4096;
/// Residual allowed for the Fourier identities and round trip.
const FOURIER_TOL: f64 = 1e-9;
/// Residual allowed for the transform of the uniform measure.
const UNIFORM_TOL: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq)]
pub enum Shadow {
    Chebyshev {
        n: i64,
        t: String,
        cutoff: usize,
        eps: Option<String>,
    },
    Obstruction {
        group: String,
        grid: u64,
        samples: usize,
    },
    Tv {
        mu: String,
        nu: String,
    },
    Pushforward {
        measure: String,
        pair: String,
        gamma: String,
    },
    MeasureFourier {
        measure: String,
    },
    Sl2z,
    Center {
        n: usize,
        p: u64,
    },
}

/// A pipeline command. Pair arguments are file paths or `builtin:<name>`;
/// see [`builtin_pair`].
#[derive(Debug, Clone, PartialEq)]
pub enum Command {
    Validate { files: Vec<String> },
    Build { pair: String, dump: bool },
    Irreps { pair: String },
    Fusion { target: String },
    Invariants { pair: String },
    Deform { pair: String },
    Crossed { pair: String, draws: usize },
    Audit { pair: String },
    Shadow(Shadow),
}

impl Command {
    pub fn name(&self) -> String {
        match self {
            Command::Validate { .. } => "validate".into(),
            Command::Build { .. } => "build".into(),
            Command::Irreps { .. } => "irreps".into(),
            Command::Fusion { .. } => "fusion".into(),
            Command::Invariants { .. } => "invariants".into(),
            Command::Deform { .. } => "deform".into(),
            Command::Crossed { .. } => "crossed".into(),
            Command::Audit { .. } => "audit".into(),
            Command::Shadow(s) => format!(
                "shadow {}",
                match s {
                    Shadow::Chebyshev { .. } => "chebyshev",
                    Shadow::Obstruction { .. } => "obstruction",
                    Shadow::Tv { .. } => "tv",
                    Shadow::Pushforward { .. } => "pushforward",
                    Shadow::MeasureFourier { .. } => "measure-fourier",
                    Shadow::Sl2z => "sl2z",
                    Shadow::Center { .. } => "center",
                }
            ),
        }
    }

    fn inputs(&self) -> Vec<String> {
        match self {
            Command::Validate { files } => files.clone(),
            Command::Build { pair, .. }
            | Command::Irreps { pair }
            | Command::Invariants { pair }
            | Command::Deform { pair }
            | Command::Crossed { pair, .. }
            | Command::Audit { pair } => vec![pair.clone()],
            Command::Fusion { target } => vec![target.clone()],
            Command::Shadow(s) => match s {
                Shadow::Obstruction { group, .. } => vec![group.clone()],
                Shadow::Tv { mu, nu } => vec![mu.clone(), nu.clone()],
                Shadow::Pushforward { measure, pair, .. } => vec![measure.clone(), pair.clone()],
                Shadow::MeasureFourier { measure } => vec![measure.clone()],
                _ => Vec::new(),
            },
        }
    }
}

/// Exit status for an error: 1 for input and validation failures, 2 for
/// numerical checks that exceeded their tolerance.
pub fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::NonIntegral { .. }
        | Error::AxiomViolation { .. }
        | Error::IdentityViolated { .. }
        | Error::PeterWeylMismatch { .. }
        | Error::SeedDegenerate { .. }
        | Error::ExtractionFailed { .. } => 2,
        _ => 1,
    }
}

/// Named pairs from the standard library, addressable as `builtin:<name>`.
pub fn builtin_pair(name: &str) -> Option<LoadedPair> {
    let plain = |pair| LoadedPair { pair, base: None };
    Some(match name {
        "s3_z2_z3" => plain(standard::s3_z2_z3()),
        "s3_z3_z2" => plain(standard::s3_z3_z2()),
        "s4_s3_z4" => plain(standard::s4_s3_z4()),
        "s4_z4_s3" => plain(standard::s4_z4_s3()),
        "a4_z3_v4" => plain(standard::a4_z3_v4()),
        "s4_z2_a4" => plain(standard::s4_z2_a4()),
        "s4_d4_z3" => plain(standard::s4_d4_z3()),
        "s3_conjugation_z3" => plain(standard::s3_conjugation_z3()),
        "z2_inverting_z3" => plain(standard::z2_inverting_z3()),
        "lambda_sign" => LoadedPair {
            pair: standard::lambda_sign_deformed(),
            base: Some(standard::lambda_sign_base().0),
        },
        "quotient_s3" => LoadedPair {
            pair: standard::quotient_s3_deformed(),
            base: Some(standard::quotient_s3_base().0),
        },
        _ => return None,
    })
}

pub const BUILTIN_PAIRS: &[&str] = &[
    "s3_z2_z3",
    "s3_z3_z2",
    "s4_s3_z4",
    "s4_z4_s3",
    "a4_z3_v4",
    "s4_z2_a4",
    "s4_d4_z3",
    "s3_conjugation_z3",
    "z2_inverting_z3",
    "lambda_sign",
    "quotient_s3",
];

pub fn load_pair_arg(arg: &str, cfg: &RunConfig) -> Result<LoadedPair> {
    match arg.strip_prefix("builtin:") {
        Some(name) => builtin_pair(name).ok_or_else(|| Error::ValidationError {
            invariant: format!("`{name}` is a built-in pair ({})", BUILTIN_PAIRS.join(", ")),
        }),
        None => load_pair(Path::new(arg), cfg),
    }
}

/// A group file, or one of `cyclic:n`, `symmetric:n`, `dihedral:n`, `sl:n:p`.
pub fn load_group_arg(arg: &str, cfg: &RunConfig) -> Result<FiniteGroup> {
    let parts: Vec<&str> = arg.split(':').collect();
    let num = |s: &str| -> Result<u64> {
        s.parse().map_err(|_| Error::ValidationError {
            invariant: format!("`{s}` in `{arg}` is a positive integer"),
        })
    };
    match parts.as_slice() {
        ["cyclic", n] => Ok(FiniteGroup::cyclic(num(n)?.max(1) as usize)),
        ["symmetric", n] => Ok(FiniteGroup::symmetric(num(n)?.max(1) as usize)),
        ["dihedral", n] => Ok(FiniteGroup::dihedral(num(n)?.max(1) as usize)),
        ["sl", n, p] => FiniteGroup::special_linear(num(n)? as usize, num(p)?, &cfg.caps),
        _ => load_group(Path::new(arg), cfg),
    }
}

/// Short description of a small group up to isomorphism.
pub fn describe_group(g: &FiniteGroup, caps: &Caps) -> String {
    let n = g.order();
    if g.is_abelian() {
        return abelianization(g).to_string();
    }
    let mut named: Vec<(String, FiniteGroup)> = Vec::new();
    for k in 3..=5 {
        if (1..=k).product::<usize>() == n {
            named.push((format!("S{k}"), FiniteGroup::symmetric(k)));
        }
    }
    if n.is_multiple_of(2) {
        named.push((format!("D{}", n / 2), FiniteGroup::dihedral(n / 2)));
    }
    for (name, h) in named {
        if let Ok(Some(_)) = is_isomorphic_small(g, &h, caps) {
            return name;
        }
    }
    format!("nonabelian of order {n}, abelianization {}", abelianization(g))
}

pub fn run_pipeline(cmd: &Command, cfg: &RunConfig) -> Result<Report> {
    let mut report = Report::new(cmd.name(), cfg.seed, cmd.inputs());
    match cmd {
        Command::Validate { files } => validate(&mut report, files, cfg)?,
        Command::Build { pair, dump } => {
            let lp = load_pair_arg(pair, cfg)?;
            report.push(pair_section("pair", &lp.pair));
            let a = KacAlgebra::new(lp.pair);
            report.push(algebra_section("algebra", &a, cfg));
            if *dump {
                report.push(dump_section(&a));
            }
        }
        Command::Irreps { pair } => {
            let a = KacAlgebra::new(load_pair_arg(pair, cfg)?.pair);
            let cat = enumerate_irreps(&a, cfg)?;
            report.push(irreps_section(&a, &cat, cfg));
        }
        Command::Fusion { target } => fusion(&mut report, target, cfg)?,
        Command::Invariants { pair } => {
            let a = KacAlgebra::new(load_pair_arg(pair, cfg)?.pair);
            let cat = enumerate_irreps(&a, cfg)?;
            report.push(invariants_section("invariants", &a, &cat, cfg)?);
        }
        Command::Deform { pair } => deform(&mut report, pair, cfg)?,
        Command::Crossed { pair, draws } => crossed(&mut report, pair, *draws, cfg)?,
        Command::Audit { pair } => audit(&mut report, pair, cfg)?,
        Command::Shadow(s) => shadow(&mut report, s, cfg)?,
    }
    Ok(report)
}

fn validate(report: &mut Report, files: &[String], cfg: &RunConfig) -> Result<()> {
    let mut s = Section::new("validate");
    for f in files {
        let loaded = load_any(Path::new(f), cfg)?;
        let detail = match &loaded {
            Loaded::Group(g) => format!("group of order {}", g.order()),
            Loaded::Pair(p) => format!(
                "matched pair |Gamma| = {}, |G| = {}, alpha {}, beta {}{}",
                p.pair.gamma().order(),
                p.pair.g().order(),
                if p.pair.is_alpha_trivial() { "trivial" } else { "nontrivial" },
                if p.pair.is_beta_trivial() { "trivial" } else { "nontrivial" },
                if p.base.is_some() { ", deformed" } else { "" },
            ),
            Loaded::Ring(r) => format!(
                "fusion ring `{}` with {} labels{}",
                r.name,
                r.len(),
                if r.truncated { " (truncated)" } else { "" }
            ),
            Loaded::Measure(m) => format!("probability measure on a group of order {}", m.group.order()),
        };
        s.entry(format!("{} {f}", loaded.kind()), Status::Pass, detail);
    }
    report.push(s);
    Ok(())
}

fn pair_section(name: &str, mp: &MatchedPair) -> Section {
    let mut s = Section::new(name);
    s.datum("|Gamma|", mp.gamma().order());
    s.datum("|G|", mp.g().order());
    s.datum("alpha trivial", mp.is_alpha_trivial());
    s.datum("beta trivial", mp.is_beta_trivial());
    let sizes: Vec<String> = mp.orbits().iter().map(|o| o.len().to_string()).collect();
    s.datum("beta-orbit sizes", sizes.join(" "));
    s.datum("|Gamma^beta|", mp.gamma_fixed().len());
    s.datum("|G^alpha|", mp.g_fixed().len());
    s.datum("|ker beta|", mp.beta_kernel().len());
    for (k, orbit) in mp.orbits().iter().enumerate() {
        let u = mp.magic_unitary(orbit);
        for c in u.check_relations(mp.g()) {
            s.check(format!("magic unitary, orbit {k}: {}", c.relation), c.holds, "")
                .with_witness(c.witness);
        }
    }
    s
}

fn algebra_section(name: &str, a: &KacAlgebra, cfg: &RunConfig) -> Section {
    let mut s = Section::new(name);
    s.datum("dim", a.dim());
    let tol = cfg.tolerances.axiom;
    let rep = a.axiom_report(tol);
    for c in &rep.checks {
        s.residual(c.axiom, c.residual, tol).with_witness(c.witness.clone());
    }
    let g = a.group_subalgebra_check();
    s.check(
        "group-like unitaries form a subalgebra",
        g.passed(),
        format!("{} group-like u_gamma", g.group_like.len()),
    );
    s
}

fn dump_section(a: &KacAlgebra) -> Section {
    let mut s = Section::new("dump");
    let n = a.dim();
    let lab = |b: usize| a.basis_label(b);
    let mut product = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if let Some(z) = a.basis_mul(x, y) {
                product.push(format!("{} * {} = {}", lab(x), lab(y), lab(z)));
            }
        }
    }
    let coproduct: Vec<String> = (0..n)
        .map(|b| {
            let terms: Vec<String> = a
                .basis_coproduct(b)
                .into_iter()
                .map(|(p, q)| format!("{} (x) {}", lab(p), lab(q)))
                .collect();
            format!("D({}) = {}", lab(b), terms.join(" + "))
        })
        .collect();
    let unary: Vec<String> = (0..n)
        .map(|b| {
            format!(
                "{}: star {}, antipode {}, counit {}, haar {}",
                lab(b),
                lab(a.basis_star(b)),
                lab(a.basis_antipode(b)),
                a.basis_counit(b),
                a.basis_haar(b)
            )
        })
        .collect();
    s.datum("product", product.join("\n"));
    s.datum("coproduct", coproduct.join("\n"));
    s.datum("unary maps", unary.join("\n"));
    s
}

fn irreps_section(a: &KacAlgebra, cat: &IrrepCatalog, cfg: &RunConfig) -> Section {
    let mut s = Section::new("irreps");
    let pw = cat.peter_weyl_sum();
    s.check("Peter-Weyl", pw == a.dim(), format!("sum of squared dimensions {pw}, dim A {}", a.dim()));
    let rank = coefficient_rank(a, &cat.canonical);
    s.check(
        "matrix coefficients span the algebra",
        rank == a.dim(),
        format!("rank {rank}"),
    );
    let defect = cat
        .canonical
        .iter()
        .map(|c| corep_defect(a, c))
        .fold(0.0, f64::max);
    s.residual("corepresentation identity", defect, cfg.tolerances.equality);
    let dims: Vec<String> = cat.dim_multiset().iter().map(|d| d.to_string()).collect();
    s.datum("dimensions", dims.join(" "));
    let canon: Vec<String> = cat
        .canonical
        .iter()
        .enumerate()
        .map(|(i, c)| format!("{i}: {} (dim {})", c.label, c.dim))
        .collect();
    s.datum("canonical", canon.join("\n"));
    let cands: Vec<String> = cat
        .candidates
        .iter()
        .zip(&cat.decomposition)
        .map(|(c, d)| {
            let parts: Vec<String> = d
                .iter()
                .map(|&(k, m)| if m == 1 { format!("[{k}]") } else { format!("{m}[{k}]") })
                .collect();
            format!("{} = {}", c.corep.label, parts.join(" + "))
        })
        .collect();
    s.datum("candidates", cands.join("\n"));
    s
}

fn fusion(report: &mut Report, target: &str, cfg: &RunConfig) -> Result<()> {
    let is_builtin_ring = ["group:", "dual-group:", "free-orthogonal:"]
        .iter()
        .any(|p| target.starts_with(p));
    if is_builtin_ring {
        let ring = builtin_ring(target, Path::new("."), cfg)?;
        report.push(ring_section(&ring)?);
        return Ok(());
    }
    if !target.starts_with("builtin:") {
        if let Loaded::Ring(ring) = load_any(Path::new(target), cfg)? {
            report.push(ring_section(&ring)?);
            return Ok(());
        }
    }
    let a = KacAlgebra::new(load_pair_arg(target, cfg)?.pair);
    let cat = enumerate_irreps(&a, cfg)?;
    let tol = cfg.tolerances.integer_residual;
    let c = &cat.canonical;
    let mut s = Section::new("fusion");
    let mut lines = Vec::new();
    let mut dims_ok = true;
    for i in 0..c.len() {
        for j in 0..c.len() {
            let t = tensor(&a, &c[i], &c[j]);
            let mut terms = Vec::new();
            let mut total = 0;
            for (k, ck) in c.iter().enumerate() {
                let m = mor_dim_haar(&a, ck, &t, tol)?;
                total += m * ck.dim;
                if m > 0 {
                    terms.push(if m == 1 { format!("[{k}]") } else { format!("{m}[{k}]") });
                }
            }
            dims_ok &= total == c[i].dim * c[j].dim;
            lines.push(format!("[{i}] x [{j}] = {}", terms.join(" + ")));
        }
    }
    s.check("dimension count of every tensor product", dims_ok, "");
    let cons = fusion_consistency(&a, &cat, tol, ORACLE_TRIPLES)?;
    s.check(
        "character and linear-system multiplicities agree",
        cons.passed(),
        format!("{} candidate triples", cons.checked),
    )
    .with_witness(cons.mismatches.first().cloned());
    let labels: Vec<String> = c.iter().enumerate().map(|(i, x)| format!("{i}: {}", x.label)).collect();
    s.datum("labels", labels.join("\n"));
    s.datum("fusion table", lines.join("\n"));
    report.push(s);
    Ok(())
}

fn ring_section(ring: &FusionRing) -> Result<Section> {
    let mut s = Section::new("fusion ring");
    s.check("ring axioms", ring.validate().is_ok(), ring.name.clone());
    s.datum("labels", ring.labels.join(" "));
    let dims: Vec<String> = match &ring.exact_dims {
        Some(d) => d.iter().map(|x| x.to_string()).collect(),
        None => ring.dims.iter().map(|x| x.to_string()).collect(),
    };
    s.datum("dimensions", dims.join(" "));
    let mut lines = Vec::new();
    for x in 0..ring.len() {
        for y in 0..ring.len() {
            let (out, note) = match ring.fuse(x, y) {
                Ok(v) => (v, ""),
                Err(Error::TruncationOverflow { .. }) => (ring.fuse_truncated(x, y), " (truncated)"),
                Err(e) => return Err(e),
            };
            let terms: Vec<String> = out
                .iter()
                .map(|&(z, m)| {
                    if m == 1 {
                        ring.labels[z].clone()
                    } else {
                        format!("{m} {}", ring.labels[z])
                    }
                })
                .collect();
            lines.push(format!("{} x {} = {}{note}", ring.labels[x], ring.labels[y], terms.join(" + ")));
        }
    }
    s.datum("fusion table", lines.join("\n"));
    Ok(s)
}

fn invariants_section(name: &str, a: &KacAlgebra, cat: &IrrepCatalog, cfg: &RunConfig) -> Result<Section> {
    let inv = invariant_groups(a, cat, cfg)?;
    let r = &inv.report;
    let mut s = Section::new(name);
    s.check(
        "intrinsic group is Sp(G) x| Gamma^beta",
        r.intrinsic_isomorphic && r.intrinsic_map_ok,
        format!("order {} vs model {}", r.intrinsic_order, r.intrinsic_model_order),
    );
    s.check(
        "spectrum is G^alpha x| Sp(Gamma)",
        r.spectrum_isomorphic && r.spectrum_map_ok,
        format!("order {} vs model {}", r.spectrum_order, r.spectrum_model_order),
    );
    s.datum("intrinsic order", r.intrinsic_order);
    s.datum("intrinsic group", describe_group(&inv.intrinsic.group, &cfg.caps));
    s.datum("spectrum order", r.spectrum_order);
    s.datum("spectrum", describe_group(&inv.spectrum.group, &cfg.caps));
    Ok(s)
}

fn deform(report: &mut Report, pair: &str, cfg: &RunConfig) -> Result<()> {
    let lp = load_pair_arg(pair, cfg)?;
    let base = lp.base.ok_or_else(|| Error::ValidationError {
        invariant: "deform input is a deformation recipe".into(),
    })?;
    let deformed = lp.pair;
    let mut s = Section::new("deformation");
    s.check(
        "underlying sets preserved",
        base.gamma().order() == deformed.gamma().order() && base.g().order() == deformed.g().order(),
        format!(
            "|Gamma| {} -> {}, |G| {} -> {}",
            base.gamma().order(),
            deformed.gamma().order(),
            base.g().order(),
            deformed.g().order()
        ),
    );
    s.datum("deformed Gamma", describe_group(deformed.gamma(), &cfg.caps));
    s.datum("deformed G", describe_group(deformed.g(), &cfg.caps));
    report.push(s);
    for (name, mp) in [("base", base), ("deformed", deformed)] {
        let a = KacAlgebra::new(mp);
        let rep = a.axiom_report(cfg.tolerances.axiom);
        let mut ax = Section::new(format!("{name} algebra"));
        ax.datum("dim", a.dim());
        let worst = rep
            .checks
            .iter()
            .max_by(|x, y| x.residual.total_cmp(&y.residual))
            .expect("axiom list is nonempty");
        ax.residual("Hopf and Kac axioms", rep.max_residual(), cfg.tolerances.axiom)
            .with_witness(worst.witness.clone().filter(|_| !rep.passed()));
        report.push(ax);
        let cat = enumerate_irreps(&a, cfg)?;
        report.push(invariants_section(&format!("{name} invariants"), &a, &cat, cfg)?);
    }
    Ok(())
}

fn crossed(report: &mut Report, pair: &str, draws: usize, cfg: &RunConfig) -> Result<()> {
    let mp = load_pair_arg(pair, cfg)?.pair;
    let inst = CrossedInstance::from_pair(mp, cfg)?;
    let tol = cfg.tolerances.integer_residual;

    let mut ring = Section::new("crossed ring");
    let flat = inst.ring.flatten();
    ring.check("ring axioms", flat.validate().is_ok(), format!("{} labels", inst.ring.len()));
    let n = inst.ring.len();
    let coreps: Vec<_> = (0..n).map(|i| inst.corep(i)).collect();
    let mut checked = 0;
    let mut mismatch = None;
    'outer: for x in 0..n {
        for y in 0..n {
            let t = tensor(&inst.algebra, &coreps[x], &coreps[y]);
            for z in 0..n {
                if checked >= ORACLE_TRIPLES {
                    break 'outer;
                }
                let formula = inst.ring.n(x, y, z)? as usize;
                let oracle = mor_dim_haar(&inst.algebra, &coreps[z], &t, tol)?;
                checked += 1;
                if formula != oracle && mismatch.is_none() {
                    mismatch = Some(format!(
                        "N({}, {}; {}) = {formula}, algebra {oracle}",
                        inst.ring.label(x),
                        inst.ring.label(y),
                        inst.ring.label(z)
                    ));
                }
            }
        }
    }
    ring.check(
        "crossed fusion rule matches the algebra",
        mismatch.is_none(),
        format!("{checked} triples"),
    )
    .with_witness(mismatch);
    let labels: Vec<String> = (0..n)
        .map(|i| format!("{} (dim {})", inst.ring.label(i), inst.ring.dim(i)))
        .collect();
    ring.datum("labels", labels.join("\n"));
    report.push(ring);

    let (inv, r) = crossed_invariant_groups(&inst, cfg)?;
    let mut s = Section::new("crossed invariants");
    s.check(
        "intrinsic group is Gamma x| Sp(G)",
        r.intrinsic_matches,
        format!("order {}", r.intrinsic_order),
    );
    s.check(
        "spectrum is G^alpha x Sp(Gamma)",
        r.spectrum_matches,
        format!("order {}", r.spectrum_order),
    );
    s.datum("intrinsic group", describe_group(&inv.intrinsic.group, &cfg.caps));
    s.datum("spectrum", describe_group(&inv.spectrum.group, &cfg.caps));
    report.push(s);

    let mut f = Section::new("fourier");
    let lemma = check_lemma_fourier(&inst, cfg, draws, FOURIER_TOL)?;
    f.residual("transform of conjugated irreducibles", lemma.transform_deviation, FOURIER_TOL);
    f.residual("Sobolev-0 norm against Haar L2 norm", lemma.norm_deviation, FOURIER_TOL);
    round_trip(&mut f, &inst.fourier, cfg.seed);
    let hat = measure_fourier(&inst.fourier, &FiniteMeasure::uniform(inst.fourier.group.order()));
    f.residual(
        "uniform measure transforms to the unit projection",
        hat.distance(&inst.fourier.projection(0)),
        UNIFORM_TOL,
    );
    f.datum("draws", lemma.draws);
    report.push(f);

    let mp = inst.algebra.pair();
    let l_gamma = word_length(mp.gamma(), &mp.gamma().generators())?;
    let l0 = length_l0(&inst.ring, &l_gamma, &LengthFunction::zero(inst.ring.base.len()))?;
    let bound = (inst.algebra.dim() as f64).sqrt();
    let rd = rd_inequality_sample(&inst, &l0, &[bound], draws.max(1), cfg.seed)?;
    let mut d = Section::new("rapid decay");
    d.check(
        "operator norm bounded by P(k) times Sobolev-0 norm",
        rd.passed,
        format!("P = {}, max ratio {}", sci(bound), sci(rd.max_ratio)),
    );
    report.push(d);
    Ok(())
}

fn round_trip(s: &mut Section, ctx: &FourierContext, seed: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a = DualElement::random(&ctx.labels_with_dims(), &mut rng);
    let back = inverse_fourier(ctx, &fourier_transform(ctx, &a));
    s.residual("inverse transform round trip", back.distance(&a), FOURIER_TOL);
}

fn audit(report: &mut Report, pair: &str, cfg: &RunConfig) -> Result<()> {
    let a = KacAlgebra::new(load_pair_arg(pair, cfg)?.pair);
    let cat = enumerate_irreps(&a, cfg)?;
    let tol = cfg.tolerances.integer_residual;
    let mut s = Section::new("audit");
    let entries = audit_candidates(&cat)
        .into_iter()
        .chain(audit_fusion_formula(&a, &cat))
        .chain(audit_flip(&a, &cat, tol)?);
    for e in entries {
        s.entry(
            e.claim,
            e.status.into(),
            format!("predicted {}, computed {}", e.predicted, e.computed),
        )
        .with_witness(e.witness);
    }
    report.push(s);

    let mut o = Section::new("oracle");
    let c = &cat.candidates;
    let mut mismatch = None;
    for i in 0..c.len() {
        for j in 0..c.len() {
            let h = mor_dim_haar(&a, &c[i].corep, &c[j].corep, tol)?;
            let l = mor_dim_solver(&c[i].corep, &c[j].corep);
            if h != l && mismatch.is_none() {
                mismatch = Some(format!("({}, {}): character {h}, solver {l}", c[i].corep.label, c[j].corep.label));
            }
        }
    }
    o.check(
        "character and linear-system intertwiner dimensions agree",
        mismatch.is_none(),
        format!("{} candidate pairs", c.len() * c.len()),
    )
    .with_witness(mismatch);
    let cons = fusion_consistency(&a, &cat, tol, ORACLE_TRIPLES)?;
    o.check(
        "character and linear-system multiplicities agree",
        cons.passed(),
        format!("{} candidate triples", cons.checked),
    )
    .with_witness(cons.mismatches.first().cloned());
    report.push(o);
    Ok(())
}

fn rational(s: &str) -> Result<num_rational::BigRational> {
    parse_rational(s).ok_or_else(|| Error::ValidationError {
        invariant: format!("`{s}` is a rational number"),
    })
}

fn shadow(report: &mut Report, s: &Shadow, cfg: &RunConfig) -> Result<()> {
    match s {
        Shadow::Chebyshev { n, t, cutoff, eps } => {
            let t = rational(t)?;
            let state = chebyshev_state(*n, &t, *cutoff)?;
            let mut sec = Section::new("chebyshev");
            sec.check("three-term recursion", state.recursion_holds(), "exact");
            // Monotonicity is only claimed for 1 < t < N.
            if t > num_rational::BigRational::from_integer(1.into()) {
                sec.check("strictly decreasing from k = 1", state.strictly_decreasing_from_one(), "exact");
            }
            if let Some(e) = eps {
                let k = state.c0_profile(&rational(e)?);
                sec.datum(
                    format!("first k with value below {e}"),
                    k.map_or("none within cutoff".to_string(), |k| k.to_string()),
                );
            }
            let table: Vec<String> = state
                .values
                .iter()
                .enumerate()
                .map(|(k, v)| format!("{k:>4}  {v}"))
                .collect();
            sec.datum("values", table.join("\n"));
            report.push(sec);
        }
        Shadow::Obstruction { group, grid, samples } => {
            let g = load_group_arg(group, cfg)?;
            let r = rel_t_obstruction(&g, *grid, *samples, cfg.seed);
            let mut sec = Section::new("relative property (T) obstruction");
            sec.check("tv(mu, delta_e) = 2(1 - mu(e))", r.identity_holds, "exact");
            sec.check(
                "tv(mu, delta_e) = 2 whenever mu(e) = 0",
                r.passed(),
                format!("minimum {}", r.min_distance_avoiding),
            );
            sec.datum("group order", r.group_order);
            sec.datum("grid denominator", r.grid_denominator);
            sec.datum("grid measures checked", r.grid_checked);
            sec.datum("avoiding the identity", r.avoiding_identity);
            sec.datum("random measures", r.sampled);
            report.push(sec);
        }
        Shadow::Tv { mu, nu } => {
            let a = load_measure(Path::new(mu), cfg)?;
            let b = load_measure(Path::new(nu), cfg)?;
            if a.group != b.group {
                return Err(Error::ValidationError {
                    invariant: "both measures live on the same group".into(),
                });
            }
            let mut sec = Section::new("tv");
            sec.datum("tv distance", tv_distance(&a.measure, &b.measure));
            report.push(sec);
        }
        Shadow::Pushforward { measure, pair, gamma } => {
            let m = load_measure(Path::new(measure), cfg)?;
            let mp = load_pair_arg(pair, cfg)?.pair;
            if &m.group != mp.g() {
                return Err(Error::ValidationError {
                    invariant: "the measure lives on G of the pair".into(),
                });
            }
            let r = super::input::find_element(mp.gamma(), gamma)?;
            let pushed = pushforward(&m.measure, r, &mp);
            let mut sec = Section::new("pushforward");
            let lines: Vec<String> = mp
                .g()
                .elements()
                .map(|x| format!("{}: {}", mp.g().label(x), pushed.weight(x)))
                .collect();
            sec.datum("weights", lines.join("\n"));
            sec.datum("tv to the original", tv_distance(&m.measure, &pushed));
            report.push(sec);
        }
        Shadow::MeasureFourier { measure } => {
            let m = load_measure(Path::new(measure), cfg)?;
            let ctx = FourierContext::new(&m.group, &cfg.caps, cfg.seed)?;
            let hat = measure_fourier(&ctx, &m.measure);
            let mut sec = Section::new("measure fourier");
            let lines: Vec<String> = block_norms(&hat)
                .into_iter()
                .map(|(x, v)| format!("irrep {x} (dim {}): {}", ctx.dim(x), sci(v)))
                .collect();
            sec.datum("block operator norms", lines.join("\n"));
            report.push(sec);
        }
        Shadow::Sl2z => {
            let p = Presentation {
                n_generators: 2,
                relators: vec![vec![4, 0], vec![0, 6], vec![2, -3]],
            };
            let ab = abelian_invariants(&p)?;
            let mut sec = Section::new("SL2(Z) abelianization");
            sec.check("finite of order 12", ab.order() == Some(12), ab.to_string());
            sec.datum("presentation", "<s, t | s^4, t^6, s^2 t^-3>");
            sec.datum("abelian invariants", ab);
            report.push(sec);
        }
        Shadow::Center { n, p } => {
            let g = FiniteGroup::special_linear(*n, *p, &cfg.caps)?;
            let z = g.center();
            let d = num_integer::gcd(*n as u64, p - 1) as usize;
            let (zg, _) = g.restrict(&z)?;
            let cyclic = is_isomorphic_small(&zg, &FiniteGroup::cyclic(d), &cfg.caps)?.is_some();
            let mut sec = Section::new(format!("center of SL({n}, {p})"));
            sec.check("center is Z/gcd(n, p - 1)", z.len() == d && cyclic, format!("gcd {d}"));
            sec.datum("group order", g.order());
            sec.datum("center order", z.len());
            report.push(sec);
        }
    }
    Ok(())
}
