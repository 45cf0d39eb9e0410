//! Command dispatch behind the binary: each command produces a
//! human-readable text block, a one-line summary, and a JSON document with
//! the fixed shape `{command, inputs, results, warnings}`.

use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::alexander::AlexanderError;
use crate::hf::{self, HfError, KnotDescriptor};
use crate::jsj::{self, JsjError};
use crate::laurent::LaurentError;
use crate::parse::{self, ParseError};
use crate::pattern::{BergeGabaiPattern, PatternError};
use crate::surgery::{self, Slope, SurgeryError};

/// A parsed, not-yet-validated command.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    PatternInfo { w: i64, b: i64, t: i64 },
    Check { descriptor: String },
    Rank { descriptor: String, slope: String },
    Surgery { descriptor: String, p: i64 },
    Alexander { descriptor: String },
    Homology { w: i64, slope: String },
    MinTwist { w: i64, b: i64, t: i64, gk: i64 },
    Jsj { seifert: i64, hyperbolic: i64 },
    Identity { w: i64, b: i64, t: i64, gk: i64 },
}

/// Failures of a command run, split by exit-code class: usage and parse
/// problems exit 1, domain precondition failures exit 2.
#[derive(Debug, PartialEq, Eq)]
pub enum CliError {
    Usage(String),
    Semantic { code: String, message: String },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Usage(_) => 1,
            Self::Semantic { .. } => 2,
        }
    }

    pub fn message(&self) -> String {
        match self {
            Self::Usage(m) => m.clone(),
            Self::Semantic { code, message } => format!("{message} [{code}]"),
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.message())
    }
}

impl std::error::Error for CliError {}

fn semantic(code: &str, err: impl std::fmt::Display) -> CliError {
    CliError::Semantic { code: code.to_string(), message: err.to_string() }
}

fn pattern_code(e: &PatternError) -> &'static str {
    match e {
        PatternError::WindingTooSmall(_) => "winding-too-small",
        PatternError::BridgeOutOfRange { .. } => "bridge-out-of-range",
        PatternError::ZeroTwist => "zero-twist",
        PatternError::TwistMultipleOfWinding { .. } => "twist-multiple-of-winding",
        PatternError::DisallowedTwistResidue { .. } => "disallowed-twist-residue",
        PatternError::NonCoprimeTorus { .. } => "non-coprime-torus",
        PatternError::MultiComponentClosure(_) => "multi-component-closure",
        PatternError::NoSolidTorusSlope { .. } => "no-solid-torus-slope",
    }
}

fn alexander_code(e: &AlexanderError) -> &'static str {
    match e {
        AlexanderError::MultiComponentClosure(_) => "multi-component-closure",
        AlexanderError::NonCoprimeTorus(..) => "non-coprime-torus",
        AlexanderError::TorusParameterTooSmall(..) => "torus-parameter-too-small",
        AlexanderError::Laurent(LaurentError::ZeroPolynomial) => "zero-polynomial",
        AlexanderError::Laurent(LaurentError::NotPalindromic) => "not-palindromic",
        AlexanderError::InexactDivision => "inexact-division",
    }
}

fn hf_code(e: &HfError) -> &'static str {
    match e {
        HfError::InvalidData(_) => "invalid-knot-data",
        HfError::NotDetermined(_) => "hf-data-not-determined",
        HfError::NotLspaceData => "not-lspace-data",
        HfError::NegativeSlopeOutOfScope => "negative-slope-out-of-scope",
        HfError::TrivialCompanion => "trivial-companion",
        HfError::NonPositiveTwist => "non-positive-twist",
        HfError::NotASatellite => "not-a-satellite",
        HfError::HypothesesNotMet(_) => "hypotheses-not-met",
        HfError::NoPolynomialData(_) => "no-polynomial-data",
        HfError::Alexander(a) => alexander_code(a),
    }
}

fn surgery_code(e: &SurgeryError) -> &'static str {
    match e {
        SurgeryError::ZeroDenominator => "zero-denominator",
        SurgeryError::BadSlopeLiteral(_) => "bad-slope-literal",
        SurgeryError::ZeroWinding => "zero-winding",
        SurgeryError::NotACandidateSlope { .. } => "not-a-candidate-slope",
    }
}

fn jsj_code(e: &JsjError) -> &'static str {
    match e {
        JsjError::EmptyPlan => "empty-plan",
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        match e {
            ParseError::Syntax { .. } => CliError::Usage(e.to_string()),
            ParseError::Pattern(ref p) => semantic(pattern_code(p), &e),
            ParseError::Knot(ref k) => semantic(hf_code(k), &e),
        }
    }
}

impl From<PatternError> for CliError {
    fn from(e: PatternError) -> Self {
        semantic(pattern_code(&e), &e)
    }
}

impl From<HfError> for CliError {
    fn from(e: HfError) -> Self {
        semantic(hf_code(&e), &e)
    }
}

impl From<SurgeryError> for CliError {
    fn from(e: SurgeryError) -> Self {
        match e {
            SurgeryError::BadSlopeLiteral(_) | SurgeryError::ZeroDenominator => {
                CliError::Usage(e.to_string())
            }
            _ => semantic(surgery_code(&e), &e),
        }
    }
}

impl From<AlexanderError> for CliError {
    fn from(e: AlexanderError) -> Self {
        semantic(alexander_code(&e), &e)
    }
}

impl From<JsjError> for CliError {
    fn from(e: JsjError) -> Self {
        semantic(jsj_code(&e), &e)
    }
}

/// A rendered command result.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    /// One-line result for quiet mode.
    pub summary: String,
    /// Full human-readable text.
    pub text: String,
    /// `{command, inputs, results, warnings}`.
    pub json: Value,
}

fn output(command: &str, inputs: Value, results: Value, warnings: Vec<String>, summary: String, text: String) -> Output {
    Output {
        summary,
        text,
        json: json!({
            "command": command,
            "inputs": inputs,
            "results": results,
            "warnings": warnings,
        }),
    }
}

fn parse_slope(text: &str) -> Result<Slope, CliError> {
    text.parse::<Slope>().map_err(CliError::from)
}

fn descriptor_warnings(d: &KnotDescriptor) -> Vec<String> {
    fn contains_catalog(d: &KnotDescriptor) -> bool {
        match d {
            KnotDescriptor::Catalog { .. } => true,
            KnotDescriptor::BgSat { companion, .. } => contains_catalog(companion),
            _ => false,
        }
    }
    if contains_catalog(d) {
        vec!["catalog knot data (genus, invariants) is asserted, not computed".to_string()]
    } else {
        Vec::new()
    }
}

pub fn run(cmd: &Command) -> Result<Output, CliError> {
    match cmd {
        Command::PatternInfo { w, b, t } => run_pattern(*w, *b, *t),
        Command::Check { descriptor } => run_check(descriptor),
        Command::Rank { descriptor, slope } => run_rank(descriptor, slope),
        Command::Surgery { descriptor, p } => run_surgery(descriptor, *p),
        Command::Alexander { descriptor } => run_alexander(descriptor),
        Command::Homology { w, slope } => run_homology(*w, slope),
        Command::MinTwist { w, b, t, gk } => run_mintwist(*w, *b, *t, *gk),
        Command::Jsj { seifert, hyperbolic } => run_jsj(*seifert, *hyperbolic),
        Command::Identity { w, b, t, gk } => run_identity(*w, *b, *t, *gk),
    }
}

fn run_pattern(w: i64, b: i64, t: i64) -> Result<Output, CliError> {
    let p = BergeGabaiPattern::new(w, b, t)?;
    let word = p.braid_word();
    let candidates: Vec<i64> = p.exceptional_slope_candidates().into_iter().collect();
    let results = json!({
        "pattern": p.to_string(),
        "w": p.winding(),
        "b": p.bridge(),
        "t": p.twist_number(),
        "t0": p.twist_residue(),
        "q": p.full_twists(),
        "genus": p.genus(),
        "braid_word": word.letters(),
        "braid_length": word.len(),
        "exponent_sum": word.exponent_sum(),
        "candidate_slopes": candidates,
        "lspace_knot_in_s3": p.is_lspace_knot_in_s3(),
    });
    let summary = format!(
        "{p}: genus {}, candidate slopes {candidates:?}",
        p.genus()
    );
    let mut text = format!("{summary}\n");
    let _ = writeln!(text, "  t = {} + {}*{}", p.twist_residue(), p.full_twists(), w);
    let _ = writeln!(
        text,
        "  braid word ({} letters, exponent sum {}): {:?}",
        word.len(),
        word.exponent_sum(),
        word.letters()
    );
    let _ = writeln!(text, "  L-space knot in S^3: {}", p.is_lspace_knot_in_s3());
    Ok(output(
        "pattern",
        json!({"w": w, "b": b, "t": t}),
        results,
        Vec::new(),
        summary,
        text,
    ))
}

fn run_check(descriptor: &str) -> Result<Output, CliError> {
    let d = parse::parse_descriptor(descriptor)?;
    let canonical = parse::render_descriptor(&d);
    let genus = d.genus();
    let lspace = d.is_lspace_knot();
    let (tau, four_ball) = if lspace {
        (json!(genus), json!(genus))
    } else {
        (Value::Null, Value::Null)
    };
    let certified: Vec<i64> = match &d {
        KnotDescriptor::BgSat { pattern, .. } if lspace => {
            pattern.exceptional_slope_candidates().into_iter().collect()
        }
        _ => Vec::new(),
    };
    let results = json!({
        "descriptor": canonical,
        "genus": genus,
        "lspace_knot": lspace,
        "tau": tau,
        "four_ball_genus": four_ball,
        "certified_slopes": certified,
    });
    let summary = format!("{canonical}: lspace_knot={lspace}, genus={genus}");
    let mut text = format!("{summary}\n");
    if lspace {
        let _ = writeln!(text, "  tau = g_4 = {genus}");
    }
    if !certified.is_empty() {
        let _ = writeln!(text, "  certified L-space surgery slopes: {certified:?}");
    }
    Ok(output(
        "check",
        json!({"descriptor": descriptor}),
        results,
        descriptor_warnings(&d),
        summary,
        text,
    ))
}

fn run_rank(descriptor: &str, slope_text: &str) -> Result<Output, CliError> {
    let d = parse::parse_descriptor(descriptor)?;
    let slope = parse_slope(slope_text)?;
    let data = d.hf_data()?;
    let rank = hf::rank_surgery(&data, slope)?;
    let lspace_surgery = hf::is_lspace_surgery(&data, slope)?;
    let canonical = parse::render_descriptor(&d);
    let results = json!({
        "descriptor": canonical,
        "slope": slope.to_string(),
        "rank": rank,
        "lspace_surgery": lspace_surgery,
        "genus": data.genus,
    });
    let summary = format!("rank HF-hat of {slope}-surgery on {canonical} = {rank}");
    let text = format!("{summary}\n  L-space surgery: {lspace_surgery}\n");
    Ok(output(
        "rank",
        json!({"descriptor": descriptor, "slope": slope_text}),
        results,
        descriptor_warnings(&d),
        summary,
        text,
    ))
}

fn run_surgery(descriptor: &str, p: i64) -> Result<Output, CliError> {
    let d = parse::parse_descriptor(descriptor)?;
    let KnotDescriptor::BgSat { pattern, companion } = &d else {
        return Err(HfError::NotASatellite.into());
    };
    let companion_slope = surgery::satellite_surgery_correspondence(pattern, p)?;
    let lspace_surgery = match companion.hf_data() {
        Ok(data) => json!(hf::is_lspace_surgery(&data, companion_slope).ok()),
        Err(_) => Value::Null,
    };
    let results = json!({
        "pattern": pattern.to_string(),
        "companion": companion.to_string(),
        "winding": pattern.winding(),
        "satellite_slope": p,
        "companion_slope": companion_slope.to_string(),
        "companion_lspace_surgery": lspace_surgery,
    });
    let summary = format!(
        "{p}-surgery on {} = {companion_slope}-surgery on {}",
        parse::render_descriptor(&d),
        companion
    );
    Ok(output(
        "surgery",
        json!({"descriptor": descriptor, "p": p}),
        results,
        descriptor_warnings(&d),
        summary.clone(),
        format!("{summary}\n"),
    ))
}

fn run_alexander(descriptor: &str) -> Result<Output, CliError> {
    let d = parse::parse_descriptor(descriptor)?;
    let poly = d.alexander()?;
    let degree = poly.top_degree().map_err(|e| CliError::from(AlexanderError::from(e)))?;
    let results = json!({
        "descriptor": parse::render_descriptor(&d),
        "polynomial": poly.to_string(),
        "coefficients": poly.coeff_strings(),
        "top_degree": degree,
    });
    let summary = format!("Alexander({}) = {poly}", parse::render_descriptor(&d));
    Ok(output(
        "alexander",
        json!({"descriptor": descriptor}),
        results,
        descriptor_warnings(&d),
        summary.clone(),
        format!("{summary}\n  top degree {degree}\n"),
    ))
}

fn run_homology(w: i64, slope_text: &str) -> Result<Output, CliError> {
    let slope = parse_slope(slope_text)?;
    if w < 1 {
        return Err(SurgeryError::ZeroWinding.into());
    }
    let h = surgery::filling_homology(w, slope);
    let gen = surgery::filling_kernel_generator(w, slope)?;
    let group = match (h.free_rank, h.torsion_order) {
        (0, 1) => "0".to_string(),
        (0, n) => format!("Z/{n}"),
        (1, 1) => "Z".to_string(),
        (r, 1) => format!("Z^{r}"),
        (1, n) => format!("Z + Z/{n}"),
        (r, n) => format!("Z^{r} + Z/{n}"),
    };
    let results = json!({
        "w": w,
        "slope": slope.to_string(),
        "free_rank": h.free_rank,
        "torsion_order": h.torsion_order,
        "group": group,
        "kernel_generator": {"m": gen.m, "l": gen.l},
    });
    let summary = format!("H_1 of the {slope}-filling at winding {w}: {group}");
    let text = format!("{summary}\n  kernel generator {}m + {}l on the outer boundary\n", gen.m, gen.l);
    Ok(output(
        "homology",
        json!({"w": w, "slope": slope_text}),
        results,
        Vec::new(),
        summary,
        text,
    ))
}

fn run_mintwist(w: i64, b: i64, t: i64, gk: i64) -> Result<Output, CliError> {
    let p = BergeGabaiPattern::new(w, b, t)?;
    let k = hf::min_twist(&p, gk)?;
    let twisted = p.twist(k);
    let results = json!({
        "pattern": p.to_string(),
        "companion_genus": gk,
        "min_twist": k,
        "twisted_pattern": twisted.to_string(),
        "threshold_q": 2 * gk - 1,
    });
    let summary = format!("{p} with companion genus {gk}: {k} extra full twists -> {twisted}");
    Ok(output(
        "mintwist",
        json!({"w": w, "b": b, "t": t, "gk": gk}),
        results,
        Vec::new(),
        summary.clone(),
        format!("{summary}\n"),
    ))
}

fn run_jsj(seifert: i64, hyperbolic: i64) -> Result<Output, CliError> {
    let plan = jsj::build_plan(seifert, hyperbolic)?;
    let warnings = if plan.layers.iter().any(|l| l.asserted_hyperbolic) {
        vec!["hyperbolicity of pattern layers and seeds is asserted from a catalog, not computed".to_string()]
    } else {
        Vec::new()
    };
    let summary = format!(
        "{}: genus {}, L-space slopes >= {}",
        plan.descriptor, plan.genus, plan.lspace_slope_threshold
    );
    let mut text = format!("{summary}\n");
    for layer in &plan.layers {
        let _ = writeln!(
            text,
            "  layer {}: {} ({:?}), genus {}",
            layer.index, layer.description, layer.kind, layer.genus_after
        );
    }
    if !plan.certified_slopes.is_empty() {
        let _ = writeln!(text, "  certified slopes: {:?}", plan.certified_slope_set());
    }
    Ok(output(
        "jsj",
        json!({"seifert": seifert, "hyperbolic": hyperbolic}),
        plan.document(),
        warnings,
        summary,
        text,
    ))
}

fn run_identity(w: i64, b: i64, t: i64, gk: i64) -> Result<Output, CliError> {
    let p = BergeGabaiPattern::new(w, b, t)?;
    let report = hf::proof_identity_report(&p, gk)?;
    let entries: Vec<Value> = report
        .entries
        .iter()
        .map(|e| {
            json!({
                "d": e.d,
                "slope": e.m,
                "t_satellite": e.t_satellite_rank,
                "t_satellite_expanded": e.t_satellite_params,
                "companion_side": e.companion_side,
                "sides_equal": e.sides_equal,
                "both_zero": e.both_zero,
            })
        })
        .collect();
    let claim = report.claim_holds();
    let results = json!({
        "pattern": p.to_string(),
        "companion_genus": gk,
        "entries": entries,
        "claim_holds": claim,
    });
    let summary = format!(
        "{p}, companion genus {gk}: identities agree only when both sides vanish ({claim})"
    );
    let mut text = format!("{summary}\n");
    for e in &report.entries {
        let _ = writeln!(
            text,
            "  slope {} (d={}): satellite side {}, companion side {}",
            e.m, e.d, e.t_satellite_rank, e.companion_side
        );
    }
    Ok(output(
        "identity",
        json!({"w": w, "b": b, "t": t, "gk": gk}),
        results,
        Vec::new(),
        summary,
        text,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn check_example() {
        let out = run(&Command::Check { descriptor: "BG(5,2,8)[T(2,3)]".into() }).unwrap();
        let r = &out.json["results"];
        assert_eq!(r["lspace_knot"], true);
        assert_eq!(r["genus"], 20);
        assert_eq!(r["tau"], 20);
        assert_eq!(r["certified_slopes"], json!([42, 43]));
        assert!(out.json["warnings"].as_array().unwrap().is_empty());
    }

    #[test]
    fn rank_example() {
        let out = run(&Command::Rank {
            descriptor: "T(2,3)".into(),
            slope: "1/2".into(),
        })
        .unwrap();
        assert_eq!(out.json["results"]["rank"], 3);
        assert_eq!(out.json["results"]["lspace_surgery"], false);
    }

    #[test]
    fn jsj_example() {
        let out = run(&Command::Jsj { seifert: 1, hyperbolic: 1 }).unwrap();
        let r = &out.json["results"];
        assert_eq!(r["descriptor"], "BG(5,2,8)[T(2,3)]");
        assert_eq!(r["genus"], 20);
        assert_eq!(r["lspace_slope_threshold"], 39);
        assert_eq!(out.json["warnings"].as_array().unwrap().len(), 1);
    }

    #[test]
    fn schema_is_uniform() {
        let commands = [
            Command::PatternInfo { w: 5, b: 2, t: 3 },
            Command::Check { descriptor: "T(2,3)".into() },
            Command::Rank { descriptor: "T(2,3)".into(), slope: "7".into() },
            Command::Surgery { descriptor: "BG(5,2,8)[T(2,3)]".into(), p: 42 },
            Command::Alexander { descriptor: "C(2,3)[T(2,3)]".into() },
            Command::Homology { w: 6, slope: "4/1".into() },
            Command::MinTwist { w: 5, b: 2, t: 3, gk: 1 },
            Command::Jsj { seifert: 2, hyperbolic: 0 },
            Command::Identity { w: 5, b: 2, t: 3, gk: 1 },
        ];
        for cmd in commands {
            let out = run(&cmd).unwrap();
            let obj = out.json.as_object().unwrap();
            let keys: Vec<&String> = obj.keys().collect();
            assert_eq!(keys, ["command", "inputs", "results", "warnings"], "{cmd:?}");
            assert!(!out.summary.is_empty());
            assert!(out.text.starts_with(&out.summary));
        }
    }

    #[test]
    fn exit_code_classes() {
        let usage = run(&Command::Check { descriptor: "T(2,3".into() }).unwrap_err();
        assert_eq!(usage.exit_code(), 1);
        assert!(matches!(usage, CliError::Usage(_)));

        let semantic = run(&Command::Check { descriptor: "BG(5,3,3)[U]".into() }).unwrap_err();
        assert_eq!(semantic.exit_code(), 2);
        let CliError::Semantic { code, .. } = semantic else { panic!() };
        assert_eq!(code, "multi-component-closure");

        let bad_slope = run(&Command::Rank {
            descriptor: "T(2,3)".into(),
            slope: "1/0".into(),
        })
        .unwrap_err();
        assert_eq!(bad_slope.exit_code(), 1);

        let not_candidate = run(&Command::Surgery {
            descriptor: "BG(5,2,8)[T(2,3)]".into(),
            p: 40,
        })
        .unwrap_err();
        let CliError::Semantic { code, .. } = not_candidate else { panic!() };
        assert_eq!(code, "not-a-candidate-slope");

        let not_sat = run(&Command::Surgery { descriptor: "T(2,3)".into(), p: 7 }).unwrap_err();
        let CliError::Semantic { code, .. } = not_sat else { panic!() };
        assert_eq!(code, "not-a-satellite");
    }

    #[test]
    fn surgery_example() {
        let out = run(&Command::Surgery {
            descriptor: "BG(5,2,8)[T(2,3)]".into(),
            p: 42,
        })
        .unwrap();
        let r = &out.json["results"];
        assert_eq!(r["companion_slope"], "42/25");
        assert_eq!(r["companion_lspace_surgery"], true);
    }

    #[test]
    fn homology_example() {
        let out = run(&Command::Homology { w: 6, slope: "4/1".into() }).unwrap();
        let r = &out.json["results"];
        assert_eq!(r["free_rank"], 1);
        assert_eq!(r["torsion_order"], 2);
        assert_eq!(r["kernel_generator"], json!({"m": 2, "l": 18}));
    }

    #[test]
    fn catalog_warning_surfaces() {
        let out = run(&Command::Check { descriptor: "PRETZEL(-2,3,7)".into() }).unwrap();
        assert_eq!(out.json["warnings"].as_array().unwrap().len(), 1);
    }
}
