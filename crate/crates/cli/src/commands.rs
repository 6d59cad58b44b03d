use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use std::path::{Path, PathBuf};

use kneser_extremal::bounds;
use kneser_extremal::constructions;
use kneser_extremal::families;
use kneser_extremal::peel;
use kneser_extremal::search;
use kneser_extremal::{Family, FamilyMember, GroundParams, PatternGraph};

use crate::report::{certificate_text, emit, family_inline};

/// Whether the computation succeeded and, if it checked a property,
/// whether the property held.
pub enum Outcome {
    Ok,
    PropertyFailed,
}

#[derive(Parser)]
#[command(
    name = "kneser",
    version,
    about = "Exact bounds, constructions, certificates, and searches for extremal families in Kneser graphs"
)]
pub struct Cli {
    /// Worker threads for parallel verification (default: KNESER_THREADS,
    /// then all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Evaluate a closed-form bound, with its threshold when it has one.
    Bounds(BoundsArgs),
    /// Generate a named extremal family and write it as a family file.
    Construct(ConstructArgs),
    /// Check a property of a family file (exit 2 when it fails).
    Check(CheckArgs),
    /// Exact ell statistic: distance from the largest intersecting subfamily.
    Ell(EllArgs),
    /// Run the peeling procedure and emit its transcript (or the one-pass
    /// chain report with --hm-chain).
    Peel(PeelArgs),
    /// Re-verify a certificate: a peel transcript, a skew pair sequence, or
    /// the extremal structure of a bound-attaining family (exit 2 on failure).
    Verify(VerifyArgs),
    /// Exact maximum pattern-free family by branch and bound.
    Search(SearchArgs),
    /// Exact maximum pattern-free family by exhaustive subfamily scan.
    Oracle(OracleArgs),
}

pub fn run(cli: Cli) -> Result<Outcome> {
    match cli.command {
        Command::Bounds(a) => bounds_cmd(a),
        Command::Construct(a) => construct_cmd(a),
        Command::Check(a) => check_cmd(a),
        Command::Ell(a) => ell_cmd(a),
        Command::Peel(a) => peel_cmd(a),
        Command::Verify(a) => verify_cmd(a),
        Command::Search(a) => search_cmd(a),
        Command::Oracle(a) => oracle_cmd(a),
    }
}

fn load_family(path: &Path) -> Result<Family> {
    Family::from_path(path).with_context(|| format!("reading family file {}", path.display()))
}

fn load_pattern(spec: &str) -> Result<PatternGraph> {
    // A shorthand like K3 / K_{2,3} / C5 / P4 / E3, or a pattern file path.
    if let Ok(g) = PatternGraph::parse_spec(spec) {
        return Ok(g);
    }
    let path = Path::new(spec);
    if path.exists() {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading pattern file {}", path.display()))?;
        return PatternGraph::parse(&text)
            .with_context(|| format!("parsing pattern file {}", path.display()));
    }
    bail!("cannot interpret pattern {spec:?}: not a known shorthand and no such file");
}

fn params(n: u32, k: u32) -> Result<GroundParams> {
    Ok(GroundParams::new(n, k)?)
}

// ---------------------------------------------------------------------------
// bounds

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TheoremName {
    /// Independence number of the full Kneser graph, n >= 2k.
    Ekr,
    /// Hilton-Milner bound M+1 on nontrivial intersecting families, n > 2k.
    HiltonMilner,
    /// Clique-free bound C(n,k)-C(n-s,k) attained by s-constellations.
    Frankl,
    /// General forbidden-pattern bound C(n,k)-C(n-q+1,k)+eta-1.
    PatternFree,
    /// Union-intersecting bound C(n-1,k-1)+s-1 with explicit threshold.
    UnionIntersecting,
    /// Star containment bound for (1,t)-union intersecting families.
    StarContainment,
    /// Kovari-Sos-Turan edge bound for K_{s,t}-free graphs.
    KstEdge,
    /// Peeling edge lower bound ceil(ell^2 / C(2k,k)).
    EdgeLower,
}

#[derive(Args)]
pub struct BoundsArgs {
    #[arg(long, value_enum)]
    theorem: TheoremName,
    #[arg(long)]
    n: Option<u64>,
    #[arg(long)]
    k: Option<u64>,
    #[arg(long)]
    s: Option<u64>,
    #[arg(long)]
    t: Option<u64>,
    /// Pattern for --theorem pattern-free.
    #[arg(long)]
    pattern: Option<String>,
    /// ell value for --theorem edge-lower.
    #[arg(long)]
    ell: Option<u64>,
    /// Vertex count for --theorem kst-edge.
    #[arg(long)]
    vertices: Option<u64>,
    #[arg(long)]
    json: bool,
}

fn need<T: Copy>(v: Option<T>, what: &str) -> Result<T> {
    v.with_context(|| format!("missing required --{what} for this theorem"))
}

fn bound_text(r: &bounds::BoundReport) -> String {
    let mut out = format!("{} bound: {}", r.theorem, r.bound);
    if let Some(t) = r.threshold {
        out.push_str(&format!(
            "\nthreshold: n >= {} (raw {:.4}); met: {}",
            t.ceil,
            t.raw,
            r.threshold_met.unwrap_or(false)
        ));
        if r.threshold_met == Some(false) {
            out.push_str("\nwarning: below the threshold the theorem does not assert this bound");
        }
    } else {
        out.push_str("\nthreshold: not computable from the statement");
    }
    out
}

fn bounds_cmd(a: BoundsArgs) -> Result<Outcome> {
    match a.theorem {
        TheoremName::Ekr => {
            let (n, k) = (need(a.n, "n")?, need(a.k, "k")?);
            let bound = bounds::ekr_bound(n, k)?;
            let value = json!({
                "theorem": "ekr",
                "params": {"n": n, "k": k},
                "bound": bound.to_string(),
                "threshold": 2 * k,
                "threshold_met": true,
            });
            emit(a.json, &value, || {
                format!("ekr bound: {bound}\nvalid for n >= 2k = {}", 2 * k)
            });
        }
        TheoremName::HiltonMilner => {
            let (n, k) = (need(a.n, "n")?, need(a.k, "k")?);
            let m = bounds::m_value(n, k)?;
            let bound = bounds::hm_bound(n, k)?;
            let value = json!({
                "theorem": "hilton-milner",
                "params": {"n": n, "k": k},
                "M": m.to_string(),
                "bound": bound.to_string(),
                "threshold": 2 * k + 1,
                "threshold_met": true,
            });
            emit(a.json, &value, || {
                format!("M: {m}\nhilton-milner bound: {bound}\nvalid for n > 2k")
            });
        }
        TheoremName::Frankl => {
            let (n, k, s) = (need(a.n, "n")?, need(a.k, "k")?, need(a.s, "s")?);
            let r = bounds::frankl_bound(n, k, s);
            emit(a.json, &r, || bound_text(&r));
        }
        TheoremName::PatternFree => {
            let (n, k) = (need(a.n, "n")?, need(a.k, "k")?);
            let spec = a.pattern.as_deref().context("missing --pattern")?;
            let g = load_pattern(spec)?;
            let r = bounds::pattern_free_bound(n, k, &g);
            emit(a.json, &r, || bound_text(&r));
        }
        TheoremName::UnionIntersecting => {
            let (n, k) = (need(a.n, "n")?, need(a.k, "k")?);
            let (s, t) = (need(a.s, "s")?, need(a.t, "t")?);
            let r = bounds::union_intersecting_bound(n, k, s, t)?;
            emit(a.json, &r, || bound_text(&r));
        }
        TheoremName::StarContainment => {
            let (n, k, t) = (need(a.n, "n")?, need(a.k, "k")?, need(a.t, "t")?);
            let r = bounds::star_containment_bound(n, k, t)?;
            emit(a.json, &r, || bound_text(&r));
        }
        TheoremName::KstEdge => {
            let nv = need(a.vertices, "vertices")?;
            let (s, t) = (need(a.s, "s")?, need(a.t, "t")?);
            let bound = bounds::kst_edge_bound(nv, s, t)?;
            let value = json!({
                "theorem": "kst-edge",
                "params": {"vertices": nv, "s": s, "t": t},
                "bound_real": bound,
            });
            emit(a.json, &value, || {
                format!("kst edge bound on {nv} vertices: {bound}")
            });
        }
        TheoremName::EdgeLower => {
            let k = need(a.k, "k")?;
            let ell = need(a.ell, "ell")?;
            let bound = bounds::edge_lower_bound(ell, k);
            let value = json!({
                "theorem": "edge-lower",
                "params": {"ell": ell, "k": k},
                "bound": bound.to_string(),
            });
            emit(a.json, &value, || {
                format!("edge lower bound for ell={ell}, k={k}: {bound}")
            });
        }
    }
    Ok(Outcome::Ok)
}

// ---------------------------------------------------------------------------
// construct

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConstructKind {
    Star,
    Constellation,
    HiltonMilner,
    StarPlus,
    ConstellationPlus,
}

#[derive(Args)]
pub struct ConstructArgs {
    #[arg(long, value_enum)]
    kind: ConstructKind,
    #[arg(long)]
    n: u32,
    #[arg(long)]
    k: u32,
    /// Star center for star / star-plus.
    #[arg(long)]
    center: Option<u32>,
    /// Comma-separated elements of L for constellation / constellation-plus.
    #[arg(long)]
    l: Option<String>,
    /// Extra members, semicolon-separated, each as space-separated elements
    /// (e.g. "2 3;4 5").
    #[arg(long)]
    extras: Option<String>,
    /// Forbidden pattern for constellation-plus validity checking.
    #[arg(long)]
    pattern: Option<String>,
    /// Write the family file here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long)]
    json: bool,
}

fn parse_l(spec: &str) -> Result<Vec<u32>> {
    spec.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<u32>()
                .with_context(|| format!("bad element {tok:?} in L"))
        })
        .collect()
}

fn parse_extras(p: GroundParams, spec: &str) -> Result<Vec<FamilyMember>> {
    spec.split(';')
        .filter(|part| !part.trim().is_empty())
        .map(|part| {
            let elems: Vec<u32> = part
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<u32>()
                        .with_context(|| format!("bad element {tok:?} in extras"))
                })
                .collect::<Result<_>>()?;
            Ok(FamilyMember::from_elements(p, &elems)?)
        })
        .collect()
}

fn construct_cmd(a: ConstructArgs) -> Result<Outcome> {
    let p = params(a.n, a.k)?;
    let mut validity_ok = true;
    let (kind_name, family, extra_json) = match a.kind {
        ConstructKind::Star => {
            let center = a.center.context("--kind star needs --center")?;
            ("star", constructions::star(p, center)?, json!({}))
        }
        ConstructKind::Constellation => {
            let l = parse_l(a.l.as_deref().context("--kind constellation needs --l")?)?;
            ("constellation", constructions::constellation(p, &l)?, json!({"l": l}))
        }
        ConstructKind::HiltonMilner => {
            ("hilton-milner", constructions::hilton_milner(p)?, json!({}))
        }
        ConstructKind::StarPlus => {
            let center = a.center.context("--kind star-plus needs --center")?;
            let extras = parse_extras(p, a.extras.as_deref().unwrap_or(""))?;
            (
                "star-plus",
                constructions::star_plus(p, center, &extras)?,
                json!({"extras": extras.len()}),
            )
        }
        ConstructKind::ConstellationPlus => {
            let l = parse_l(a.l.as_deref().context("--kind constellation-plus needs --l")?)?;
            let extras = parse_extras(p, a.extras.as_deref().unwrap_or(""))?;
            let spec = a
                .pattern
                .as_deref()
                .context("--kind constellation-plus needs --pattern")?;
            let g = load_pattern(spec)?;
            let (family, validity) = constructions::constellation_plus(p, &l, &extras, &g)?;
            validity_ok = validity.valid;
            let violation = validity
                .violation
                .as_ref()
                .map(|(s, _)| s.vertices.clone());
            (
                "constellation-plus",
                family,
                json!({"l": l, "extras_valid": validity.valid, "violated_special_set": violation}),
            )
        }
    };

    let text = family.to_text();
    if let Some(path) = &a.output {
        std::fs::write(path, &text)
            .with_context(|| format!("writing family file {}", path.display()))?;
    }
    let mut value = json!({
        "kind": kind_name,
        "params": {"n": a.n, "k": a.k},
        "size": family.len(),
        "family": family,
    });
    if let (Some(obj), Some(extra)) = (value.as_object_mut(), extra_json.as_object()) {
        for (k, v) in extra {
            obj.insert(k.clone(), v.clone());
        }
    }
    emit(a.json, &value, || {
        if a.output.is_some() {
            format!("{kind_name}: {} members", family.len())
        } else {
            text.trim_end().to_string()
        }
    });
    if validity_ok {
        Ok(Outcome::Ok)
    } else {
        Ok(Outcome::PropertyFailed)
    }
}

// ---------------------------------------------------------------------------
// check

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Property {
    Intersecting,
    Star,
    UnionIntersecting,
    PatternFree,
}

#[derive(Args)]
pub struct CheckArgs {
    #[arg(long)]
    family: PathBuf,
    #[arg(long, value_enum)]
    property: Property,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
    #[arg(long)]
    pattern: Option<String>,
    #[arg(long)]
    json: bool,
}

fn check_cmd(a: CheckArgs) -> Result<Outcome> {
    let family = load_family(&a.family)?;
    let (holds, detail) = match a.property {
        Property::Intersecting => match families::intersecting_violation(&family) {
            None => (true, json!({})),
            Some(w) => (false, json!({"violation": w})),
        },
        Property::Star => match families::star_center(&family) {
            Some(center) => (true, json!({"center": center})),
            None => (false, json!({})),
        },
        Property::UnionIntersecting => {
            let s = a.s.context("--property union-intersecting needs --s")?;
            let t = a.t.context("--property union-intersecting needs --t")?;
            match families::union_intersecting_violation(&family, s, t)? {
                None => (true, json!({"s": s, "t": t})),
                Some(w) => (false, json!({"s": s, "t": t, "violation": w})),
            }
        }
        Property::PatternFree => {
            let spec = a.pattern.as_deref().context("--property pattern-free needs --pattern")?;
            let g = load_pattern(spec)?;
            let graph = kneser_extremal::induce(&family);
            match kneser_extremal::pattern::contains_pattern(&graph, &g) {
                None => (true, json!({"pattern": g.label()})),
                Some(hit) => (false, json!({"pattern": g.label(), "embedding": hit})),
            }
        }
    };
    let mut value = json!({
        "property": match a.property {
            Property::Intersecting => "intersecting",
            Property::Star => "star",
            Property::UnionIntersecting => "union-intersecting",
            Property::PatternFree => "pattern-free",
        },
        "family_size": family.len(),
        "holds": holds,
    });
    if let (Some(obj), Some(extra)) = (value.as_object_mut(), detail.as_object()) {
        for (k, v) in extra {
            obj.insert(k.clone(), v.clone());
        }
    }
    emit(a.json, &value, || {
        format!(
            "{}: {}",
            value["property"].as_str().unwrap(),
            if holds { "holds" } else { "FAILS" }
        )
    });
    Ok(if holds { Outcome::Ok } else { Outcome::PropertyFailed })
}

// ---------------------------------------------------------------------------
// ell

#[derive(Args)]
pub struct EllArgs {
    #[arg(long)]
    family: PathBuf,
    #[arg(long)]
    json: bool,
}

fn ell_cmd(a: EllArgs) -> Result<Outcome> {
    let family = load_family(&a.family)?;
    let r = families::ell(&family).context(
        "exact ell unavailable for this size; use `bounds --theorem edge-lower` style reasoning",
    )?;
    let value = json!({
        "family_size": family.len(),
        "alpha": r.alpha,
        "ell": r.ell,
        "witness_star_center": r.witness_star_center,
        "astar_indices": r.astar_indices,
    });
    emit(a.json, &value, || {
        format!(
            "alpha: {}\nell: {}\nstar center of witness: {}",
            r.alpha,
            r.ell,
            r.witness_star_center
                .map_or("none".to_string(), |c| c.to_string())
        )
    });
    Ok(Outcome::Ok)
}

// ---------------------------------------------------------------------------
// peel

#[derive(Args)]
pub struct PeelArgs {
    #[arg(long)]
    family: PathBuf,
    /// Write the transcript JSON here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Run the one-pass chain variant instead of the full peel.
    #[arg(long)]
    hm_chain: bool,
    /// Degree parameter for --hm-chain.
    #[arg(long)]
    t: Option<u32>,
    #[arg(long)]
    json: bool,
}

fn peel_cmd(a: PeelArgs) -> Result<Outcome> {
    let family = load_family(&a.family)?;
    if a.hm_chain {
        let t = a.t.context("--hm-chain needs --t")?;
        let r = peel::hm_chain(&family, t);
        emit(a.json, &r, || {
            format!(
                "chain length m: {}\nwithin cap: {}\nmax degree: {}\nneighbor bound |C| <= (t-1)m: {}\nresidual intersecting: {}",
                r.m,
                r.chain_within_cap,
                r.max_degree,
                r.neighbor_bound_ok
                    .map_or("n/a (max degree >= t)".to_string(), |b| b.to_string()),
                r.residual_intersecting
            )
        });
        return Ok(if r.residual_intersecting && r.chain_within_cap {
            Outcome::Ok
        } else {
            Outcome::PropertyFailed
        });
    }
    let transcript = peel::peel_decompose(&family);
    let json_text = transcript.to_json();
    match &a.output {
        Some(path) => {
            std::fs::write(path, &json_text)
                .with_context(|| format!("writing transcript {}", path.display()))?;
            println!(
                "peeled {} members in {} rounds; residual {}",
                family.len(),
                transcript.p,
                transcript.residual.len()
            );
        }
        None => println!("{json_text}"),
    }
    Ok(Outcome::Ok)
}

// ---------------------------------------------------------------------------
// verify

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VerifyKind {
    /// Re-check every invariant of a peel transcript against a family.
    Transcript,
    /// Check the skew cross-intersecting conditions on a pair sequence.
    Skew,
    /// Find the constellation-plus-extras decomposition of a family that
    /// attains the pattern-free bound.
    Structure,
}

#[derive(Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value = "transcript")]
    kind: VerifyKind,
    #[arg(long)]
    family: Option<PathBuf>,
    #[arg(long)]
    transcript: Option<PathBuf>,
    /// JSON file of pairs [[A, B], ...] with members as element arrays.
    #[arg(long)]
    pairs: Option<PathBuf>,
    #[arg(long)]
    k: Option<u32>,
    #[arg(long)]
    l: Option<u32>,
    #[arg(long)]
    pattern: Option<String>,
    #[arg(long)]
    json: bool,
}

fn verify_cmd(a: VerifyArgs) -> Result<Outcome> {
    match a.kind {
        VerifyKind::Transcript => {
            let family = load_family(a.family.as_deref().context("needs --family")?)?;
            let path = a.transcript.as_deref().context("needs --transcript")?;
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("reading transcript {}", path.display()))?;
            let transcript = peel::PeelTranscript::from_json(&text)?;
            match peel::verify_transcript(&transcript, &family) {
                Ok(()) => {
                    emit(a.json, &json!({"valid": true}), || "transcript: valid".into());
                    Ok(Outcome::Ok)
                }
                Err(violation) => {
                    emit(
                        a.json,
                        &json!({"valid": false, "failed_check": violation.to_string()}),
                        || format!("transcript: INVALID ({violation})"),
                    );
                    Ok(Outcome::PropertyFailed)
                }
            }
        }
        VerifyKind::Skew => {
            let path = a.pairs.as_deref().context("needs --pairs")?;
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("reading pairs {}", path.display()))?;
            let pairs: Vec<(Vec<u32>, Vec<u32>)> =
                serde_json::from_str(&text).context("pairs must be [[A, B], ...]")?;
            let raw: Vec<(u64, u64)> = pairs
                .iter()
                .map(|(a, b)| {
                    let to_bits = |elems: &Vec<u32>| -> Result<u64> {
                        let mut bits = 0u64;
                        for &e in elems {
                            if e == 0 || e > 64 {
                                bail!("element {e} out of range 1..=64");
                            }
                            bits |= 1 << (e - 1);
                        }
                        Ok(bits)
                    };
                    Ok((to_bits(a)?, to_bits(b)?))
                })
                .collect::<Result<_>>()?;
            let k = a
                .k
                .or_else(|| pairs.first().map(|(x, _)| x.len() as u32))
                .context("needs --k (or at least one pair)")?;
            let l = a
                .l
                .or_else(|| pairs.first().map(|(_, y)| y.len() as u32))
                .context("needs --l (or at least one pair)")?;
            let report = peel::verify_skew(&raw, k, l)?;
            let ok = report.valid && report.within_cap;
            emit(a.json, &report, || {
                format!(
                    "skew conditions: {}\nh: {} (cap C(k+l,k) = {}), within cap: {}",
                    if report.valid { "hold" } else { "FAIL" },
                    report.h,
                    report.cap,
                    report.within_cap
                )
            });
            Ok(if ok { Outcome::Ok } else { Outcome::PropertyFailed })
        }
        VerifyKind::Structure => {
            let family = load_family(a.family.as_deref().context("needs --family")?)?;
            let spec = a.pattern.as_deref().context("needs --pattern")?;
            let g = load_pattern(spec)?;
            match search::verify_extremal_structure(&family, &g)? {
                Some(hit) => {
                    emit(
                        a.json,
                        &json!({"extremal": true, "l": hit.l, "extras": hit.extras}),
                        || format!("extremal structure: L = {:?}, {} extras", hit.l, hit.extras.len()),
                    );
                    Ok(Outcome::Ok)
                }
                None => {
                    emit(a.json, &json!({"extremal": false}), || {
                        "extremal structure: none (family attains the bound but is not \
                         constellation-plus-extras shaped)"
                            .into()
                    });
                    Ok(Outcome::PropertyFailed)
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// search / oracle

#[derive(Args)]
pub struct SearchArgs {
    #[arg(long)]
    n: u32,
    #[arg(long)]
    k: u32,
    #[arg(long)]
    pattern: Option<String>,
    /// Search for the largest intersecting family contained in no star
    /// instead of a pattern-free family.
    #[arg(long)]
    nontrivial_intersecting: bool,
    /// Also enumerate every optimum family.
    #[arg(long)]
    enumerate_all: bool,
    /// Write each optimum as a family file into this directory.
    #[arg(long)]
    optima_dir: Option<PathBuf>,
    #[arg(long)]
    json: bool,
}

fn write_optima(dir: &Path, cert: &search::SearchCertificate) -> Result<()> {
    let Some(extrema) = &cert.all_extrema else {
        return Ok(());
    };
    std::fs::create_dir_all(dir)
        .with_context(|| format!("creating optima directory {}", dir.display()))?;
    for (i, fam) in extrema.iter().enumerate() {
        let path = dir.join(format!("optimum_{i:05}.txt"));
        std::fs::write(&path, fam.to_text())
            .with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}

fn search_cmd(a: SearchArgs) -> Result<Outcome> {
    let p = params(a.n, a.k)?;
    let cert = if a.nontrivial_intersecting {
        if a.pattern.is_some() {
            bail!("--nontrivial-intersecting and --pattern are mutually exclusive");
        }
        search::max_intersecting_nontrivial(p)?
    } else {
        let spec = a
            .pattern
            .as_deref()
            .context("needs --pattern (or --nontrivial-intersecting)")?;
        let g = load_pattern(spec)?;
        search::max_pattern_free(p, &g, a.enumerate_all)?
    };
    if let Some(dir) = &a.optima_dir {
        write_optima(dir, &cert)?;
    }
    emit(a.json, &cert, || certificate_text(&cert));
    Ok(Outcome::Ok)
}

#[derive(Args)]
pub struct OracleArgs {
    #[arg(long)]
    n: u32,
    #[arg(long)]
    k: u32,
    #[arg(long)]
    pattern: String,
    #[arg(long)]
    optima_dir: Option<PathBuf>,
    #[arg(long)]
    json: bool,
}

fn oracle_cmd(a: OracleArgs) -> Result<Outcome> {
    let p = params(a.n, a.k)?;
    let g = load_pattern(&a.pattern)?;
    let cert = search::exhaustive_oracle(p, &g)?;
    if let Some(dir) = &a.optima_dir {
        write_optima(dir, &cert)?;
    }
    emit(a.json, &cert, || certificate_text(&cert));
    Ok(Outcome::Ok)
}

// `family_inline` is pulled in by report.rs; re-export keeps both text
// renderers in one place.
pub(crate) use family_inline as _family_inline;
