//! TOML input files: groups, matched pairs, fusion rings and measures.
//!
//! One file holds one object under a top-level table named after its kind.
//! Files that reference other files do so by path, relative to the
//! referencing file.

use crate::approx_props::{parse_rational, FiniteMeasure};
use crate::config::RunConfig;
use crate::crossed_product::{dual_group_ring, free_orthogonal, group_ring, FusionRing};
use crate::error::{Error, Result};
use crate::groups::{parse_cycles, perm_label, FiniteGroup, GroupSource, Matrix};
use crate::matched_pair::MatchedPair;
use num_rational::BigRational;
use serde::Deserialize;
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum GroupSpec {
    Cayley {
        table: Vec<Vec<usize>>,
        labels: Option<Vec<String>>,
    },
    Perm {
        degree: usize,
        generators: Vec<String>,
    },
    Matmod {
        modulus: u64,
        generators: Vec<Vec<Vec<i64>>>,
    },
}

/// A group given by path or inline.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum GroupRef {
    Path(String),
    Inline(GroupSpec),
}

#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum PairSpec {
    /// Two subgroups of an ambient group, each given by generators.
    Ambient {
        ambient: GroupRef,
        gamma: Vec<String>,
        g: Vec<String>,
    },
    /// Explicit action tables on two groups; `beta` defaults to trivial.
    Tables {
        gamma: GroupRef,
        g: GroupRef,
        alpha: Vec<Vec<usize>>,
        beta: Option<Vec<Vec<usize>>>,
    },
    /// A subgroup of the ambient group acting on it by conjugation.
    Conjugation { ambient: GroupRef, gamma: Vec<String> },
    /// A crossed homomorphism applied to a base pair. `side = "g"` deforms
    /// `G` by `χ: G → Γ`, `side = "gamma"` deforms `Γ` by `χ: Γ → G`.
    Deformation {
        base: String,
        side: DeformSide,
        chi: BTreeMap<String, String>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DeformSide {
    G,
    Gamma,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FusionEntry {
    pub x: String,
    pub y: String,
    pub z: String,
    pub n: u64,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingSpec {
    pub builtin: Option<String>,
    pub name: Option<String>,
    pub labels: Option<Vec<String>>,
    pub dims: Option<Vec<f64>>,
    pub dual: Option<Vec<String>>,
    pub unit: Option<String>,
    #[serde(default)]
    pub fusion: Vec<FusionEntry>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MeasureSpec {
    pub group: GroupRef,
    pub weights: BTreeMap<String, toml::Value>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupDoc {
    group: GroupSpec,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct PairDoc {
    pair: PairSpec,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RingDoc {
    ring: RingSpec,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigDoc {
    config: RunConfig,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct MeasureDoc {
    measure: MeasureSpec,
}

/// A matched pair together with the base it was deformed from, if any.
#[derive(Debug, Clone)]
pub struct LoadedPair {
    pub pair: MatchedPair,
    pub base: Option<MatchedPair>,
}

#[derive(Debug, Clone)]
pub struct LoadedMeasure {
    pub group: FiniteGroup,
    pub measure: FiniteMeasure,
}

#[derive(Debug, Clone)]
pub enum Loaded {
    Group(FiniteGroup),
    Pair(LoadedPair),
    Ring(FusionRing),
    Measure(LoadedMeasure),
}

impl Loaded {
    pub fn kind(&self) -> &'static str {
        match self {
            Loaded::Group(_) => "group",
            Loaded::Pair(_) => "pair",
            Loaded::Ring(_) => "ring",
            Loaded::Measure(_) => "measure",
        }
    }
}

/// Line and column (1-based) of a byte offset.
pub fn line_column(src: &str, offset: usize) -> (usize, usize) {
    let offset = offset.min(src.len());
    let before = &src[..offset];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    (line, column)
}

fn parse_error(src: &str, e: toml::de::Error) -> Error {
    let (line, column) = e.span().map_or((1, 1), |s| line_column(src, s.start));
    Error::ParseError {
        line,
        column,
        message: e.message().to_string(),
    }
}

fn invalid(what: &str, e: Error) -> Error {
    match e {
        Error::ParseError { .. } | Error::ValidationError { .. } | Error::Io { .. } => e,
        other => Error::ValidationError {
            invariant: format!("{what}: {other}"),
        },
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })
}

fn parse_doc<T: for<'de> Deserialize<'de>>(src: &str) -> Result<T> {
    toml::from_str(src).map_err(|e| parse_error(src, e))
}

fn resolve(base: &Path, rel: &str) -> PathBuf {
    let p = Path::new(rel);
    if p.is_absolute() {
        p.to_path_buf()
    } else {
        base.parent().unwrap_or(Path::new(".")).join(p)
    }
}

/// Builds a group from its description; every group axiom is checked.
pub fn build_group(spec: &GroupSpec, cfg: &RunConfig) -> Result<FiniteGroup> {
    let g = match spec {
        GroupSpec::Cayley { table, labels } => {
            FiniteGroup::from_cayley(table.clone(), labels.clone(), &cfg.caps, cfg.seed)
        }
        GroupSpec::Perm { degree, generators } => {
            let gens = generators
                .iter()
                .map(|s| parse_cycles(s, *degree))
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|m| Error::ValidationError {
                    invariant: format!("generator is a permutation of degree {degree}: {m}"),
                })?;
            FiniteGroup::from_permutations(&gens, *degree, &cfg.caps)
        }
        GroupSpec::Matmod { modulus, generators } => {
            let gens = generators
                .iter()
                .map(|rows| Matrix::new(rows, *modulus))
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|m| Error::ValidationError {
                    invariant: format!("generator is a square matrix: {m}"),
                })?;
            FiniteGroup::from_matrices_mod(&gens, *modulus, &cfg.caps)
        }
    };
    g.map_err(|e| invalid("group axioms", e))
}

fn load_group_ref(r: &GroupRef, base: &Path, cfg: &RunConfig) -> Result<FiniteGroup> {
    match r {
        GroupRef::Path(p) => load_group(&resolve(base, p), cfg),
        GroupRef::Inline(spec) => build_group(spec, cfg),
    }
}

pub fn load_group(path: &Path, cfg: &RunConfig) -> Result<FiniteGroup> {
    let src = read(path)?;
    let doc: GroupDoc = parse_doc(&src)?;
    build_group(&doc.group, cfg)
}

/// Finds an element by label. Permutations may be written in any cycle
/// order and matrices with any spacing.
pub fn find_element(g: &FiniteGroup, s: &str) -> Result<usize> {
    let s = s.trim();
    if let Some(x) = g.find_label(s) {
        return Ok(x);
    }
    let normalized = match g.source() {
        GroupSource::Perm { degree } => parse_cycles(s, *degree).ok().map(|p| perm_label(&p)),
        GroupSource::MatMod { .. } => Some(s.chars().filter(|c| !c.is_whitespace()).collect()),
        GroupSource::Cayley => None,
    };
    normalized
        .and_then(|l| g.find_label(&l))
        .ok_or_else(|| Error::ValidationError {
            invariant: format!("`{s}` names an element of the group"),
        })
}

fn elements(g: &FiniteGroup, names: &[String]) -> Result<Vec<usize>> {
    names.iter().map(|s| find_element(g, s)).collect()
}

pub fn build_pair(spec: &PairSpec, base: &Path, cfg: &RunConfig) -> Result<LoadedPair> {
    let plain = |pair| LoadedPair { pair, base: None };
    match spec {
        PairSpec::Ambient { ambient, gamma, g } => {
            let h = load_group_ref(ambient, base, cfg)?;
            let gamma = h.subgroup_closure(&elements(&h, gamma)?);
            let g = h.subgroup_closure(&elements(&h, g)?);
            MatchedPair::derive_actions(&h, &gamma, &g)
                .map(plain)
                .map_err(|e| invalid("matched pair", e))
        }
        PairSpec::Tables { gamma, g, alpha, beta } => {
            let gamma = load_group_ref(gamma, base, cfg)?;
            let g = load_group_ref(g, base, cfg)?;
            let beta = beta
                .clone()
                .unwrap_or_else(|| vec![gamma.elements().collect(); g.order()]);
            MatchedPair::from_tables(gamma, g, alpha.clone(), beta)
                .map(plain)
                .map_err(|e| invalid("matched pair", e))
        }
        PairSpec::Conjugation { ambient, gamma } => {
            let h = load_group_ref(ambient, base, cfg)?;
            let gamma = h.subgroup_closure(&elements(&h, gamma)?);
            MatchedPair::conjugation(&h, &gamma)
                .map(plain)
                .map_err(|e| invalid("conjugation action", e))
        }
        PairSpec::Deformation { base: b, side, chi } => {
            let parent = load_pair(&resolve(base, b), cfg)?.pair;
            let (src, dst) = match side {
                DeformSide::G => (parent.g(), parent.gamma()),
                DeformSide::Gamma => (parent.gamma(), parent.g()),
            };
            let mut map = vec![None; src.order()];
            for (k, v) in chi {
                map[find_element(src, k)?] = Some(find_element(dst, v)?);
            }
            let map: Vec<usize> = map
                .into_iter()
                .enumerate()
                .map(|(x, v)| {
                    v.ok_or_else(|| Error::ValidationError {
                        invariant: format!("chi is defined at {}", src.label(x)),
                    })
                })
                .collect::<Result<_>>()?;
            let deformed = match side {
                DeformSide::G => parent.deform_by_chi_g(&map, &cfg.caps, cfg.seed),
                DeformSide::Gamma => parent.deform_by_chi_gamma(&map, &cfg.caps, cfg.seed),
            }
            .map_err(|e| invalid("crossed homomorphism", e))?;
            Ok(LoadedPair {
                pair: deformed,
                base: Some(parent),
            })
        }
    }
}

pub fn load_pair(path: &Path, cfg: &RunConfig) -> Result<LoadedPair> {
    let src = read(path)?;
    let doc: PairDoc = parse_doc(&src)?;
    build_pair(&doc.pair, path, cfg)
}

/// Parses `key=value` options of a built-in ring name.
fn builtin_options(s: &str) -> Result<BTreeMap<String, String>> {
    s.split(',')
        .filter(|p| !p.trim().is_empty())
        .map(|p| {
            p.split_once('=')
                .map(|(k, v)| (k.trim().to_string(), v.trim().to_string()))
                .ok_or_else(|| Error::ValidationError {
                    invariant: format!("ring option `{p}` has the form key=value"),
                })
        })
        .collect()
}

pub fn builtin_ring(name: &str, base: &Path, cfg: &RunConfig) -> Result<FusionRing> {
    let (kind, arg) = name.split_once(':').unwrap_or((name, ""));
    match kind {
        "group" => Ok(group_ring(&load_group(&resolve(base, arg), cfg)?)),
        "dual-group" => {
            let g = load_group(&resolve(base, arg), cfg)?;
            Ok(dual_group_ring(&g, &cfg.caps, cfg.seed)?.0)
        }
        "free-orthogonal" => {
            let opts = builtin_options(arg)?;
            let get = |k: &str| -> Result<i64> {
                opts.get(k).and_then(|v| v.parse().ok()).ok_or_else(|| Error::ValidationError {
                    invariant: format!("free-orthogonal ring needs an integer `{k}`"),
                })
            };
            let cutoff = get("cutoff")?;
            if cutoff < 0 {
                return Err(Error::ValidationError {
                    invariant: "cutoff is nonnegative".into(),
                });
            }
            free_orthogonal(get("N")?, cutoff as usize).map_err(|e| invalid("free orthogonal ring", e))
        }
        _ => Err(Error::ValidationError {
            invariant: format!("`{name}` is a known built-in ring (group:, dual-group:, free-orthogonal:)"),
        }),
    }
}

pub fn build_ring(spec: &RingSpec, base: &Path, cfg: &RunConfig) -> Result<FusionRing> {
    let ring = if let Some(b) = &spec.builtin {
        builtin_ring(b, base, cfg)?
    } else {
        let missing = |f: &str| Error::ValidationError {
            invariant: format!("explicit ring has `{f}`"),
        };
        let labels = spec.labels.clone().ok_or_else(|| missing("labels"))?;
        let dims = spec.dims.clone().ok_or_else(|| missing("dims"))?;
        let find = |s: &str| {
            labels.iter().position(|l| l == s).ok_or_else(|| Error::ValidationError {
                invariant: format!("`{s}` is a ring label"),
            })
        };
        let dual = match &spec.dual {
            Some(d) => d.iter().map(|s| find(s)).collect::<Result<Vec<_>>>()?,
            None => (0..labels.len()).collect(),
        };
        let unit = find(spec.unit.as_deref().ok_or_else(|| missing("unit"))?)?;
        let mut products: BTreeMap<(usize, usize), Vec<(usize, u64)>> = BTreeMap::new();
        for x in 0..labels.len() {
            for y in 0..labels.len() {
                products.insert((x, y), Vec::new());
            }
        }
        for e in &spec.fusion {
            let out = products.get_mut(&(find(&e.x)?, find(&e.y)?)).expect("all pairs present");
            let z = find(&e.z)?;
            if out.iter().any(|(w, _)| *w == z) {
                return Err(Error::ValidationError {
                    invariant: format!("N({}, {}, {}) is given once", e.x, e.y, e.z),
                });
            }
            if e.n > 0 {
                out.push((z, e.n));
            }
        }
        for out in products.values_mut() {
            out.sort_unstable();
        }
        FusionRing {
            name: spec.name.clone().unwrap_or_else(|| "explicit".into()),
            labels,
            unit,
            dual,
            dims,
            products,
            truncated: false,
            exact_dims: None,
            partial: BTreeMap::new(),
        }
    };
    ring.validate().map_err(|e| invalid("fusion ring", e))?;
    Ok(ring)
}

pub fn load_ring(path: &Path, cfg: &RunConfig) -> Result<FusionRing> {
    let src = read(path)?;
    let doc: RingDoc = parse_doc(&src)?;
    build_ring(&doc.ring, path, cfg)
}

fn weight(v: &toml::Value) -> Option<BigRational> {
    match v {
        toml::Value::String(s) => parse_rational(s),
        toml::Value::Integer(i) => Some(BigRational::from_integer((*i).into())),
        toml::Value::Float(f) => parse_rational(&f.to_string()),
        _ => None,
    }
}

pub fn build_measure(spec: &MeasureSpec, base: &Path, cfg: &RunConfig) -> Result<LoadedMeasure> {
    let group = load_group_ref(&spec.group, base, cfg)?;
    let mut weights = vec![BigRational::from_integer(0.into()); group.order()];
    for (k, v) in &spec.weights {
        let w = weight(v).ok_or_else(|| Error::ValidationError {
            invariant: format!("weight of `{k}` is a rational number"),
        })?;
        weights[find_element(&group, k)?] = w;
    }
    let measure = FiniteMeasure::new(weights).map_err(|e| invalid("probability measure", e))?;
    Ok(LoadedMeasure { group, measure })
}

pub fn load_measure(path: &Path, cfg: &RunConfig) -> Result<LoadedMeasure> {
    let src = read(path)?;
    let doc: MeasureDoc = parse_doc(&src)?;
    build_measure(&doc.measure, path, cfg)
}

/// Reads a `[config]` table; absent fields keep their defaults.
pub fn load_config(path: &Path) -> Result<RunConfig> {
    let src = read(path)?;
    let cfg = parse_doc::<ConfigDoc>(&src)?.config;
    cfg.validate()?;
    Ok(cfg)
}

/// Loads any input file, dispatching on its top-level table.
pub fn load_any(path: &Path, cfg: &RunConfig) -> Result<Loaded> {
    let src = read(path)?;
    let table: toml::Table = parse_doc(&src)?;
    let kinds: Vec<&str> = ["group", "pair", "ring", "measure"]
        .into_iter()
        .filter(|k| table.contains_key(*k))
        .collect();
    match kinds.as_slice() {
        ["group"] => Ok(Loaded::Group(build_group(&parse_doc::<GroupDoc>(&src)?.group, cfg)?)),
        ["pair"] => Ok(Loaded::Pair(build_pair(&parse_doc::<PairDoc>(&src)?.pair, path, cfg)?)),
        ["ring"] => Ok(Loaded::Ring(build_ring(&parse_doc::<RingDoc>(&src)?.ring, path, cfg)?)),
        ["measure"] => Ok(Loaded::Measure(build_measure(
            &parse_doc::<MeasureDoc>(&src)?.measure,
            path,
            cfg,
        )?)),
        _ => Err(Error::ValidationError {
            invariant: "file has exactly one top-level table: group, pair, ring or measure".into(),
        }),
    }
}
