use std::fmt::Write;

use num_rational::BigRational;
use serde::Serialize;

use nfsize::intpoly::{factor_witness, make_family, FamilyKind, IntPolynomial};
use nfsize::lattice::lattice_report;
use nfsize::measures::{
    compare_guarded, compositum_signature, m_lower_bound_signature, mk_lt_one_criterion,
    norm_lower_bound, relative_m, relative_square_size, size_profile, unit_necessity_gate,
    universal_m_floor, ExtensionSignature, Guarded, SizeProfile,
};
use nfsize::roots::{
    erdos_turan_dyadic, find_roots_with, multinacci_location_check, pisot_check, raw_roots,
    ConjugateSet, ErdosTuranRecord, MultinacciLocation, RootConfig, GANELIUS_CONSTANT_UPPER,
};
use nfsize::search::{enumerate_m_lt_one, SearchOptions};
use nfsize::verify::{records_to_csv, run_suite, suite_passed, Suite, Verdict};
use nfsize::{Error, Result};

use crate::Format;

pub struct Outcome {
    pub text: String,
    pub success: bool,
}

fn ok(text: String) -> Result<Outcome> {
    Ok(Outcome { text, success: true })
}

fn json<T: Serialize>(v: &T) -> Result<String> {
    serde_json::to_string_pretty(v)
        .map(|s| s + "\n")
        .map_err(|e| Error::Internal(e.to_string()))
}

const DISJOINTNESS: &str =
    "assumes Q(alpha) and the extension are linearly disjoint; the formula is wrong otherwise";

#[derive(Serialize)]
struct Bounds {
    m_floor: f64,
    m_vs_floor: Guarded,
    signature_bound: f64,
    m_vs_signature_bound: Guarded,
    norm_bound: f64,
    size_vs_norm_bound: Guarded,
    /// The norm alone forces `m > 1` at this degree.
    norm_forces_m_above_one: bool,
}

#[derive(Serialize)]
struct ExtensionReport {
    extension: ExtensionSignature,
    compositum_signature: (usize, usize),
    relative_square_size: f64,
    relative_m: f64,
    m_lt_one: Option<bool>,
    criterion_error: Option<String>,
    hypothesis: &'static str,
}

#[derive(Serialize)]
struct AnalyzeReport {
    irreducibility: &'static str,
    roots: ConjugateSet,
    profile: SizeProfile,
    bounds: Bounds,
    #[serde(skip_serializing_if = "Option::is_none")]
    extension: Option<ExtensionReport>,
}

fn irreducibility(p: &IntPolynomial) -> Result<&'static str> {
    match factor_witness(p) {
        Ok(None) => Ok("certified"),
        Ok(Some(f)) => Err(Error::HypothesisViolated(format!("{p} is reducible, divisible by {f}"))),
        Err(Error::BeyondReach(_)) => Ok("not certified"),
        Err(e) => Err(e),
    }
}

fn guarded_str(g: Guarded) -> &'static str {
    match g {
        Guarded::Less => "below",
        Guarded::Greater => "above",
        Guarded::Inconclusive => "within guard of",
    }
}

pub fn analyze(
    p: &IntPolynomial,
    extension: Option<ExtensionSignature>,
    config: &RootConfig,
    format: Format,
) -> Result<Outcome> {
    let irr = irreducibility(p)?;
    let roots = find_roots_with(p, config)?;
    let profile = size_profile(&roots)?;
    let (s, t) = profile.signature();
    let n = profile.degree();
    let floor = universal_m_floor();
    let sig_bound = m_lower_bound_signature(s, t)?;
    let norm_bound = norm_lower_bound(n, s, &profile.norm_abs)?;
    let bounds = Bounds {
        m_floor: floor,
        m_vs_floor: compare_guarded(profile.m, floor),
        signature_bound: sig_bound,
        m_vs_signature_bound: compare_guarded(profile.m, sig_bound),
        norm_bound,
        size_vs_norm_bound: compare_guarded(profile.abs_square_size, norm_bound),
        norm_forces_m_above_one: unit_necessity_gate(n, &profile.norm_abs),
    };
    let extension = extension.map(|ext| {
        let (m_lt_one, criterion_error) = match mk_lt_one_criterion(&profile, ext) {
            Ok(b) => (Some(b), None),
            Err(e) => (None, Some(e.to_string())),
        };
        ExtensionReport {
            extension: ext,
            compositum_signature: compositum_signature((s, t), ext),
            relative_square_size: relative_square_size(&profile, ext),
            relative_m: relative_m(&profile, ext),
            m_lt_one,
            criterion_error,
            hypothesis: DISJOINTNESS,
        }
    });
    let report = AnalyzeReport { irreducibility: irr, roots, profile, bounds, extension };
    match format {
        Format::Json => ok(json(&report)?),
        Format::Csv => {
            let mut out = String::from("polynomial,s,t,R,C,abs_square_size,m,norm,mahler,lower_bound\n");
            let pr = &report.profile;
            writeln!(
                out,
                "\"{}\",{},{},{:.12},{:.12},{:.12},{:.12},{},{:.12},{:.9}",
                pr.polynomial, pr.s, pr.t, pr.r, pr.c, pr.abs_square_size, pr.m, pr.norm_abs, pr.mahler, sig_bound
            )
            .unwrap();
            ok(out)
        }
        Format::Text => ok(analyze_text(&report)),
    }
}

fn analyze_text(r: &AnalyzeReport) -> String {
    let p = &r.profile;
    let mut o = String::new();
    writeln!(o, "polynomial      {}", p.polynomial).unwrap();
    writeln!(o, "irreducibility  {}", r.irreducibility).unwrap();
    writeln!(o, "signature       ({}, {})", p.s, p.t).unwrap();
    for x in &r.roots.real_roots {
        writeln!(o, "real root       {x:.15}").unwrap();
    }
    for z in &r.roots.complex_reps {
        writeln!(o, "complex root    {:.15} + {:.15}i", z.re, z.im).unwrap();
    }
    writeln!(o, "max residual    {:.3e}", r.roots.max_residual).unwrap();
    writeln!(o, "R               {:.12}", p.r).unwrap();
    writeln!(o, "C               {:.12}", p.c).unwrap();
    writeln!(o, "||alpha||^2     {:.12}", p.abs_square_size).unwrap();
    writeln!(o, "m               {:.12}", p.m).unwrap();
    writeln!(o, "|norm|          {}", p.norm_abs).unwrap();
    writeln!(o, "Mahler measure  {:.12}", p.mahler).unwrap();
    match &p.discriminant {
        Some(d) => writeln!(o, "discriminant    {d}").unwrap(),
        None => writeln!(o, "discriminant    (not computed at this degree)").unwrap(),
    }
    let b = &r.bounds;
    writeln!(o, "m is {} the universal floor {:.9}", guarded_str(b.m_vs_floor), b.m_floor).unwrap();
    writeln!(o, "m is {} the signature bound {:.9}", guarded_str(b.m_vs_signature_bound), b.signature_bound).unwrap();
    writeln!(o, "||alpha||^2 is {} the norm bound {:.9}", guarded_str(b.size_vs_norm_bound), b.norm_bound).unwrap();
    writeln!(o, "norm forces m > 1: {}", b.norm_forces_m_above_one).unwrap();
    if let Some(e) = &r.extension {
        writeln!(o, "extension       ({}, {})", e.extension.s2, e.extension.t2).unwrap();
        writeln!(o, "compositum      ({}, {})", e.compositum_signature.0, e.compositum_signature.1).unwrap();
        writeln!(o, "relative size   {:.12}", e.relative_square_size).unwrap();
        writeln!(o, "relative m      {:.12}", e.relative_m).unwrap();
        match (e.m_lt_one, &e.criterion_error) {
            (Some(v), _) => writeln!(o, "criterion m<1   {v}").unwrap(),
            (None, Some(err)) => writeln!(o, "criterion m<1   not applicable: {err}").unwrap(),
            _ => {}
        }
        writeln!(o, "note: {}", e.hypothesis).unwrap();
    }
    o
}

pub fn search(
    n: usize,
    signature: Option<(usize, usize)>,
    prune: bool,
    threads: Option<usize>,
    format: Format,
) -> Result<Outcome> {
    let options = SearchOptions { signature, prune, threads };
    let report = enumerate_m_lt_one(n, &options)?;
    let text = match format {
        Format::Json => json(&report)?,
        Format::Csv => report.to_csv(),
        Format::Text => {
            let mut o = String::new();
            writeln!(o, "degree {n}, {} search", if report.pruned { "pruned" } else { "raw" }).unwrap();
            for g in &report.groups {
                writeln!(
                    o,
                    "signature ({}, {}): {} polynomials, lower bound {:.6}",
                    g.signature.0, g.signature.1, g.count, g.lower_bound
                )
                .unwrap();
                for h in &g.polynomials {
                    writeln!(o, "  {:<40} m = {:.9}", h.polynomial.to_string(), h.m).unwrap();
                }
                for h in &g.inconclusive {
                    writeln!(o, "  {:<40} m = {:.9} (within guard of 1)", h.polynomial.to_string(), h.m).unwrap();
                }
            }
            let st = &report.stats;
            writeln!(
                o,
                "orbit representatives: candidates {}, past bounds {}, irreducible {}, m < 1 {}",
                st.generated, st.passed_bounds, st.passed_irreducibility, st.passed_m
            )
            .unwrap();
            for f in &report.failures {
                writeln!(o, "failure: {f}").unwrap();
            }
            o
        }
    };
    Ok(Outcome { text, success: report.failures.is_empty() })
}

pub fn lattice(
    p: &IntPolynomial,
    basis: Option<&[Vec<BigRational>]>,
    config: &RootConfig,
    format: Format,
) -> Result<Outcome> {
    irreducibility(p)?;
    let roots = find_roots_with(p, config)?;
    let r = lattice_report(&roots, basis)?;
    match format {
        Format::Json => ok(json(&r)?),
        Format::Csv => {
            let coords: Vec<String> = r.minimizer.coordinates.iter().map(|c| c.to_string()).collect();
            ok(format!(
                "polynomial,s,t,determinant,order_disc,d_squared,m,coordinates,minimal_polynomial,caveat\n\
                 \"{}\",{},{},{:.12},{},{:.12},{:.12},\"{}\",\"{}\",\"{}\"\n",
                r.polynomial,
                r.signature.0,
                r.signature.1,
                r.determinant,
                r.order_disc,
                r.d_squared,
                r.m,
                coords.join(" "),
                r.minimizer.minimizer_minpoly,
                r.caveat
            ))
        }
        Format::Text => {
            let mut o = String::new();
            writeln!(o, "polynomial      {}", r.polynomial).unwrap();
            writeln!(o, "signature       ({}, {})", r.signature.0, r.signature.1).unwrap();
            writeln!(o, "|det|           {:.12} (expected {:.12})", r.determinant, r.expected_determinant).unwrap();
            writeln!(o, "order disc      {}", r.order_disc).unwrap();
            writeln!(o, "d^2             {:.12}", r.d_squared).unwrap();
            writeln!(o, "m               {:.12}", r.m).unwrap();
            writeln!(o, "coordinates     {:?}", r.minimizer.coordinates).unwrap();
            let elem: Vec<String> = r.minimizer.element.iter().map(|c| c.to_string()).collect();
            writeln!(o, "element         [{}] in the power basis", elem.join(", ")).unwrap();
            writeln!(
                o,
                "minimizer       degree {}, minimal polynomial {}",
                r.minimizer.minimizer_degree, r.minimizer.minimizer_minpoly
            )
            .unwrap();
            writeln!(o, "note: {}", r.caveat).unwrap();
            ok(o)
        }
    }
}

#[derive(Serialize)]
struct FamilyReport {
    family: FamilyKind,
    polynomial: IntPolynomial,
    #[serde(skip_serializing_if = "Option::is_none")]
    profile: Option<SizeProfile>,
    #[serde(skip_serializing_if = "Option::is_none")]
    location: Option<MultinacciLocation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pisot: Option<bool>,
    erdos_turan: Vec<ErdosTuranRecord>,
}

pub fn family(kind: FamilyKind, config: &RootConfig, format: Format) -> Result<Outcome> {
    let p = make_family(kind)?;
    let profile = match kind {
        FamilyKind::MultinacciCofactor(_) => None,
        _ => Some(size_profile(&find_roots_with(&p, config)?)?),
    };
    let (location, pisot) = match kind {
        FamilyKind::Multinacci(n) => {
            let set = find_roots_with(&p, config)?;
            (Some(multinacci_location_check(n)?), Some(pisot_check(&set)?))
        }
        _ => (None, None),
    };
    let k = ((p.degree() as f64).powf(0.25).floor() as usize).max(1);
    let erdos_turan = erdos_turan_dyadic(&p, k, GANELIUS_CONSTANT_UPPER)?;
    let report = FamilyReport { family: kind, polynomial: p, profile, location, pisot, erdos_turan };
    let success = report.location.as_ref().is_none_or(|l| l.all_hold())
        && report.pisot.unwrap_or(true)
        && report.erdos_turan.iter().all(|r| r.holds);
    let text = match format {
        Format::Json => json(&report)?,
        Format::Csv => {
            let mut o = String::from("family,polynomial,s,t,m,location,pisot,erdos_turan\n");
            let (s, t, m) = report.profile.as_ref().map_or((String::new(), String::new(), String::new()), |pr| {
                (pr.s.to_string(), pr.t.to_string(), format!("{:.12}", pr.m))
            });
            writeln!(
                o,
                "{},\"{}\",{},{},{},{},{},{}",
                kind,
                report.polynomial,
                s,
                t,
                m,
                report.location.as_ref().map_or(String::new(), |l| l.all_hold().to_string()),
                report.pisot.map_or(String::new(), |b| b.to_string()),
                report.erdos_turan.iter().all(|r| r.holds)
            )
            .unwrap();
            o
        }
        Format::Text => {
            let mut o = String::new();
            writeln!(o, "family          {kind}").unwrap();
            writeln!(o, "polynomial      {}", report.polynomial).unwrap();
            if let Some(pr) = &report.profile {
                writeln!(o, "signature       ({}, {})", pr.s, pr.t).unwrap();
                writeln!(o, "m               {:.12}", pr.m).unwrap();
            } else {
                let roots = raw_roots(&report.polynomial, config)?;
                writeln!(o, "roots           {} (reducible; no size profile)", roots.len()).unwrap();
            }
            if let Some(l) = &report.location {
                writeln!(o, "dominant root   {:.15} in (2n/(n+1), 2): {}", l.dominant_root, l.dominant_in_range).unwrap();
                writeln!(o, "second real     {:?}, present iff n even: {}, in range: {}", l.second_real_root, l.second_real_iff_even, l.second_real_in_range).unwrap();
                writeln!(o, "annulus         ({:?}, {:?}): {}", l.min_complex_modulus, l.max_complex_modulus, l.annulus).unwrap();
            }
            if let Some(b) = report.pisot {
                writeln!(o, "Pisot           {b}").unwrap();
            }
            let worst = report.erdos_turan.iter().map(|r| r.lhs / r.rhs).fold(0.0, f64::max);
            writeln!(
                o,
                "sector bound    {} sectors, constant {}, worst lhs/rhs {:.4}",
                report.erdos_turan.len(),
                GANELIUS_CONSTANT_UPPER,
                worst
            )
            .unwrap();
            o
        }
    };
    Ok(Outcome { text, success })
}

pub fn verify(suite: Suite, format: Format) -> Result<Outcome> {
    let records = run_suite(suite);
    let success = suite_passed(&records);
    let text = match format {
        Format::Json => json(&records)?,
        Format::Csv => records_to_csv(&records),
        Format::Text => {
            let mut o = String::new();
            for r in &records {
                writeln!(o, "{r}").unwrap();
            }
            let count = |v: Verdict| records.iter().filter(|r| r.verdict == v).count();
            writeln!(
                o,
                "{} checks: {} pass, {} fail, {} inconclusive",
                records.len(),
                count(Verdict::Pass),
                count(Verdict::Fail),
                count(Verdict::Inconclusive)
            )
            .unwrap();
            o
        }
    };
    Ok(Outcome { text, success })
}
