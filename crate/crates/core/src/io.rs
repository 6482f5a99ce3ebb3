//! File formats and the command implementations behind the CLI. Every
//! command returns a JSON value; errors map to exit codes via [`exit_code`].

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::alperin::{verify_certificate_with, Certificate, Decomposer, Factor};
use crate::arith::prime_divisors;
use crate::cohomology::{check_cartan_eilenberg, cohomology_functor, GModule};
use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup, Subgroup};
use crate::library;
use crate::linalg::AbPres;
use crate::locality::{DeltaSpec, Locality};
use crate::perm::Perm;
use crate::transporter::{
    build_transporter, fixed_point_functor, inverse_limit, t_essential_objects, t_essential_subcategory, FunctorPres,
    Matrix, TransporterCat,
};

/// `{"name", "kind", "n", "generators"}`; a bare string names a built-in.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum GroupSource {
    Builtin(String),
    Spec(GroupSpec),
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpec {
    #[serde(default)]
    pub name: Option<String>,
    pub kind: GroupKind,
    pub n: usize,
    #[serde(default)]
    pub generators: Vec<String>,
}

#[derive(Clone, Copy, Debug, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupKind {
    Symmetric,
    /// Symmetries of an `n`-gon, of order `2n`.
    Dihedral,
    Cyclic,
    Permutation,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum DeltaSource {
    Keyword(String),
    Tagged(DeltaTagged),
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "snake_case")]
pub enum DeltaTagged {
    OvergroupsOf(Vec<String>),
    Explicit(Vec<Vec<String>>),
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LocalitySpec {
    pub group: GroupSource,
    pub p: u64,
    #[serde(rename = "S", default)]
    pub s: Option<Vec<String>>,
    #[serde(default = "default_delta")]
    pub delta: DeltaSource,
}

fn default_delta() -> DeltaSource {
    DeltaSource::Keyword("all".into())
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateJson {
    pub target: String,
    pub factors: Vec<FactorJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorJson {
    #[serde(rename = "Q")]
    pub q: Vec<String>,
    pub x: String,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctorJson {
    pub values: BTreeMap<String, Vec<u64>>,
    pub maps: BTreeMap<String, Matrix>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleJson {
    pub orders: Vec<u64>,
    pub action: BTreeMap<String, Matrix>,
}

pub fn parse_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

pub fn build_group(source: &GroupSource) -> Result<FiniteGroup> {
    let spec = match source {
        GroupSource::Builtin(name) => return library::builtin(name),
        GroupSource::Spec(spec) => spec,
    };
    let mut g = match spec.kind {
        GroupKind::Symmetric => library::symmetric(spec.n)?,
        GroupKind::Dihedral => library::dihedral(spec.n)?,
        GroupKind::Cyclic => library::cyclic(spec.n)?,
        GroupKind::Permutation => {
            if spec.generators.is_empty() {
                return Err(Error::InvalidInput("a permutation group needs generators".into()));
            }
            let gens: Vec<Perm> = spec.generators.iter().map(|s| Perm::parse(spec.n, s)).collect::<Result<_>>()?;
            FiniteGroup::from_permutations(spec.name.as_deref().unwrap_or("G"), spec.n, &gens)?
        }
    };
    if let Some(name) = &spec.name {
        g.rename(name);
    }
    Ok(g)
}

fn subgroup_of(g: &FiniteGroup, gens: &[String]) -> Result<Subgroup> {
    g.subgroup_from_labels(gens)
}

pub fn parse_delta(g: &FiniteGroup, source: &DeltaSource) -> Result<DeltaSpec> {
    match source {
        DeltaSource::Keyword(k) => match k.as_str() {
            "all" => Ok(DeltaSpec::All),
            "nontrivial" => Ok(DeltaSpec::Nontrivial),
            other => Err(Error::InvalidInput(format!("unknown delta keyword {other:?}"))),
        },
        DeltaSource::Tagged(DeltaTagged::OvergroupsOf(gens)) => Ok(DeltaSpec::OvergroupsOf(subgroup_of(g, gens)?)),
        DeltaSource::Tagged(DeltaTagged::Explicit(list)) => {
            Ok(DeltaSpec::Explicit(list.iter().map(|gens| subgroup_of(g, gens)).collect::<Result<_>>()?))
        }
    }
}

/// Builds the locality described by a spec.
pub fn build_locality(spec: &LocalitySpec) -> Result<Locality> {
    let g = Arc::new(build_group(&spec.group)?);
    let delta = parse_delta(&g, &spec.delta)?;
    match &spec.s {
        None => Locality::build(g, spec.p, &delta),
        Some(gens) => {
            let s = subgroup_of(&g, gens)?;
            Locality::build_with_sylow(g, spec.p, s, &delta)
        }
    }
}

/// Exit code for an error: 1 internal invariant, 2 spec, 3 domain, 4 functor.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InternalInvariantViolation(_) => 1,
        Error::FunctorInconsistent(_) => 4,
        Error::NotInLocality
        | Error::NotInDomain
        | Error::NotAMorphism
        | Error::PNotInDelta
        | Error::EmptyWord
        | Error::NotInSpan
        | Error::NotConjugatable
        | Error::NotNormal => 3,
        _ => 2,
    }
}

/// Short machine-readable name of an error.
pub fn error_kind(e: &Error) -> &'static str {
    match exit_code(e) {
        1 => "internal_invariant",
        3 => "domain",
        4 => "functor",
        _ => "spec",
    }
}

pub fn error_json(e: &Error) -> Value {
    json!({ "error": error_kind(e), "detail": e.to_string() })
}

fn gens_json(g: &FiniteGroup, h: &Subgroup) -> Vec<String> {
    g.generators(h).into_iter().map(|x| g.label(x)).collect()
}

pub fn cmd_group_info(g: &FiniteGroup) -> Value {
    let gens = gens_json(g, &g.whole());
    let sylow: BTreeMap<String, usize> = prime_divisors(g.order() as u64)
        .into_iter()
        .map(|p| (p.to_string(), g.sylow(&g.whole(), p).order()))
        .collect();
    json!({
        "name": g.name(),
        "order": g.order(),
        "degree": g.degree(),
        "generators": gens,
        "abelian": g.is_abelian(),
        "sylow_orders": sylow,
    })
}

pub fn cmd_locality_build(l: &Locality) -> Value {
    let g = l.ambient();
    json!({
        "group": g.name(),
        "p": l.p(),
        "S": gens_json(g, l.s()),
        "delta": l.delta().iter().map(|d| gens_json(g, d)).collect::<Vec<_>>(),
        "size": l.size(),
        "elements": l.elements().iter().map(|x| g.label(x)).collect::<Vec<_>>(),
    })
}

/// The axiom report, and whether it passed.
pub fn cmd_locality_verify(l: &Locality, max_len: usize) -> (Value, bool) {
    let r = l.verify_axioms(max_len);
    (serde_json::to_value(&r).expect("report serializes"), r.passed())
}

pub fn cmd_essentials(l: &Locality) -> Value {
    let d = Decomposer::new(Arc::new(l.clone()));
    json!(d.essentials().iter().map(|q| gens_json(l.ambient(), q)).collect::<Vec<_>>())
}

pub fn certificate_to_json(g: &FiniteGroup, c: &Certificate) -> CertificateJson {
    CertificateJson {
        target: g.label(c.target),
        factors: c.factors.iter().map(|f| FactorJson { q: gens_json(g, &f.q), x: g.label(f.x) }).collect(),
    }
}

pub fn certificate_from_json(g: &FiniteGroup, c: &CertificateJson) -> Result<Certificate> {
    Ok(Certificate {
        target: g.element(&c.target)?,
        factors: c
            .factors
            .iter()
            .map(|f| Ok(Factor { q: subgroup_of(g, &f.q)?, x: g.element(&f.x)? }))
            .collect::<Result<_>>()?,
    })
}

/// Decomposes `element`, re-verifying the certificate before returning it.
pub fn cmd_decompose(l: Arc<Locality>, element: &str) -> Result<Value> {
    let g = l.ambient_arc().clone();
    let x = g.element(element)?;
    let d = Decomposer::new(l.clone());
    let c = d.decompose(x)?;
    let report = verify_certificate_with(&l, d.essentials(), &c);
    if !report.passed() {
        return Err(Error::InternalInvariantViolation(report.to_string()));
    }
    Ok(serde_json::to_value(certificate_to_json(&g, &c)).expect("certificate serializes"))
}

pub fn cmd_verify_cert(l: Arc<Locality>, cert: &CertificateJson) -> Result<(Value, bool)> {
    let c = certificate_from_json(l.ambient(), cert)?;
    let d = Decomposer::new(l.clone());
    let r = verify_certificate_with(&l, d.essentials(), &c);
    Ok((serde_json::to_value(&r).expect("report serializes"), r.passed()))
}

pub fn cmd_transporter_info(l: Arc<Locality>) -> Result<Value> {
    let t = build_transporter(l);
    let g = t.group();
    let essential = t_essential_objects(&t)?;
    let n = t.objects().len();
    Ok(json!({
        "objects": t.objects().iter().enumerate().map(|(i, p)| json!({
            "id": i,
            "order": p.order(),
            "generators": gens_json(g, p),
        })).collect::<Vec<_>>(),
        "hom_sizes": (0..n).map(|i| (0..n).map(|j| t.hom(i, j).len()).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "morphisms": t.morphism_count(),
        "essential": essential.iter().map(|p| t.index_of(p).expect("object")).collect::<Vec<_>>(),
        "category_laws": t.verify_category_laws().passed(),
    }))
}

pub fn module_from_json(g: Arc<FiniteGroup>, p: u64, m: &ModuleJson) -> Result<GModule> {
    let gens: Vec<(Elem, Matrix)> =
        m.action.iter().map(|(label, mat)| Ok((g.element(label)?, mat.clone()))).collect::<Result<_>>()?;
    GModule::from_generators(g, p, m.orders.clone(), &gens)
}

/// Module named on the command line: absent means the trivial module of
/// order `p`; "permutation" is the natural permutation module over `F_p`.
pub fn module_from_source(g: Arc<FiniteGroup>, p: u64, source: Option<&str>) -> Result<GModule> {
    match source {
        None | Some("trivial") => GModule::trivial(g, p, vec![p]),
        Some("permutation") => GModule::permutation(g, p),
        Some(text) => module_from_json(g, p, &parse_json(text)?),
    }
}

/// A user functor on `t`: object ids are indices into the sorted object
/// list and morphism ids read `"i->j:<element>"`.
pub fn functor_from_json(t: &TransporterCat, f: &FunctorJson) -> Result<FunctorPres> {
    let n = t.objects().len();
    let g = t.group();
    let bad = |m: String| Error::FunctorInconsistent(m);
    let mut values = Vec::with_capacity(n);
    for i in 0..n {
        let orders = f.values.get(&i.to_string()).ok_or_else(|| bad(format!("no value at object {i}")))?;
        values.push(AbPres::new(orders.clone()).map_err(|e| bad(e.to_string()))?);
    }
    if f.values.len() != n {
        return Err(bad("values for unknown objects".into()));
    }
    let mut used = 0;
    let mut maps = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            let ms = t
                .hom(i, j)
                .iter()
                .map(|&x| {
                    let key = format!("{i}->{j}:{}", g.label(x));
                    used += 1;
                    f.maps.get(&key).cloned().ok_or_else(|| bad(format!("no matrix for {key}")))
                })
                .collect::<Result<Vec<_>>>()?;
            row.push(ms);
        }
        maps.push(row);
    }
    if used != f.maps.len() {
        return Err(bad("matrices for unknown morphisms".into()));
    }
    FunctorPres::new(t.clone(), values, maps)
}

/// Where the functor for `limit` comes from.
pub enum FunctorSource<'a> {
    FixedPoints(Option<&'a str>),
    Cohomology(usize, Option<&'a str>),
    Json(&'a str),
}

impl<'a> FunctorSource<'a> {
    /// `fixed-points`, `h0`, `h1`, `h2`, or JSON text.
    pub fn parse(name: &str, json_text: Option<&'a str>, module: Option<&'a str>) -> Result<Self> {
        match name {
            "fixed-points" => Ok(FunctorSource::FixedPoints(module)),
            "h0" | "h1" | "h2" => Ok(FunctorSource::Cohomology(name[1..].parse().expect("digit"), module)),
            _ => json_text
                .map(FunctorSource::Json)
                .ok_or_else(|| Error::InvalidInput(format!("unknown functor {name:?}"))),
        }
    }
}

pub fn cmd_limit(l: Arc<Locality>, source: FunctorSource, essential_only: bool) -> Result<Value> {
    let g = l.ambient_arc().clone();
    let p = l.p();
    let t = build_transporter(l);
    let f = match source {
        FunctorSource::FixedPoints(m) => fixed_point_functor(&t, &module_from_source(g, p, m)?)?,
        FunctorSource::Cohomology(n, m) => cohomology_functor(&t, &module_from_source(g, p, m)?, n)?,
        FunctorSource::Json(text) => functor_from_json(&t, &parse_json(text)?)?,
    };
    let te = t_essential_subcategory(&t)?;
    let lim_te = inverse_limit(&te, &f)?.invariant_factors();
    if essential_only {
        return Ok(json!({ "invariant_factors": lim_te }));
    }
    let lim_t = inverse_limit(&t, &f)?.invariant_factors();
    Ok(json!({ "lim_T": lim_t, "lim_Te": lim_te, "equal": lim_t == lim_te }))
}

pub fn cmd_cohomology(l: &Locality, degree: usize, module: Option<&str>) -> Result<Value> {
    let g = l.ambient_arc().clone();
    let m = module_from_source(g.clone(), l.p(), module)?;
    let r = check_cartan_eilenberg(g, l.p(), &m, degree)?;
    Ok(serde_json::to_value(r).expect("report serializes"))
}
