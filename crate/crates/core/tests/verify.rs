use nfsize::error::Error;
use nfsize::intpoly::IntPolynomial;
use nfsize::search::{enumerate_m_lt_one, SearchOptions};
use nfsize::verify::*;

const LN2: f64 = std::f64::consts::LN_2;

fn p(s: &str) -> IntPolynomial {
    s.parse().unwrap()
}

/// Real root of the depressed cubic `y^3 + a y + b` by Cardano's formula
/// (one real root case).
fn cardano(a: f64, b: f64) -> f64 {
    let d = (b * b / 4.0 + a * a * a / 27.0).sqrt();
    (-b / 2.0 + d).cbrt() + (-b / 2.0 - d).cbrt()
}

#[test]
fn lopo_cubic_by_cardano() {
    // x^3 + x^2 + x - 1 with x = y - 1/3: y^3 + (2/3) y - 34/27
    let alpha = cardano(2.0 / 3.0, -34.0 / 27.0) - 1.0 / 3.0;
    assert!((alpha.powi(3) + alpha.powi(2) + alpha - 1.0).abs() < 1e-14);
    // the roots multiply to 1, so the pair has |beta|^2 = 1/alpha
    let expected = (1.0 / alpha - 1.0 - LN2).abs();
    let r = check_sum_asymptotic(3, 2.0).unwrap();
    assert!((r.residual - expected).abs() < 1e-12, "{} vs {}", r.residual, expected);
    assert!((r.predicted[0] - (1.0 + LN2)).abs() < 1e-15);
    assert_eq!(r.verdict, Verdict::Pass);
}

#[test]
fn lopo_offsets() {
    let r = check_sum_asymptotic(402, 1.0).unwrap();
    assert!((r.predicted[0] - (200.0 + 0.346574)).abs() < 1e-6);
    assert!(r.residual < 2e-3);
    let other = check_sum_asymptotic(100, 1.5).unwrap();
    assert_eq!(other.verdict, Verdict::Inconclusive);
    assert!(check_sum_asymptotic(2, 1.0).is_err());
}

#[test]
fn lopo_scaled_residuals_stay_bounded() {
    for q in [1.0, 2.0] {
        for n in [50, 100, 200, 400, 800] {
            let r = check_sum_asymptotic(n, q).unwrap();
            assert_eq!(r.verdict, Verdict::Pass, "{r}");
        }
    }
}

#[test]
fn bhu1_examples() {
    let r = check_bhu1(5).unwrap();
    assert!((r.predicted[0] - 2.943147).abs() < 1e-6);
    assert_eq!(r.verdict, Verdict::Pass);
    let two = check_bhu1(2).unwrap();
    assert_eq!(two.verdict, Verdict::Inconclusive);
    // golden ratio conjugates: 0.618^2 + 1.618^2 = 3
    assert!((two.observed[1] - 3.0).abs() < 1e-12);
    for n in [51, 101, 201, 401] {
        assert!(check_bhu1(n).unwrap().passed());
        assert!(check_bhu1_real(n).unwrap().passed());
    }
}

#[test]
fn kiy_examples() {
    let r = check_kiy(1).unwrap();
    assert!((r.predicted[0] - 3.693147).abs() < 1e-6);
    assert!(r.passed());
    assert!(nfsize::intpoly::is_irreducible(&p("x^6+x^4+x^2-1")).unwrap());
    for k in [12, 25, 50, 100] {
        assert!(check_kiy(k).unwrap().passed());
        assert!(check_kiy_m(k).unwrap().passed());
    }
}

#[test]
fn kiy1_composition() {
    let base = check_kiy(1).unwrap().observed[0];
    let r = check_kiy1(2, 1).unwrap();
    assert!((r.predicted[0] - 3.693147).abs() < 1e-6);
    assert!((r.observed[0] - base).abs() < 1e-12);
    let r4 = check_kiy1(4, 1).unwrap();
    assert_eq!(r4.parameters["n"], "12");
    assert!((r4.observed[0] - 2.0 * base).abs() < 1e-12);
    assert!(r4.passed());
    assert!(check_kiy1(3, 1).is_err());
    // the normalized value keeps below 1 and rises with k
    let ms: Vec<f64> = [1, 2, 5, 10, 25].iter().map(|&k| check_kiy1(2, k).unwrap().observed[1]).collect();
    assert!(ms.iter().all(|&m| m < 1.0));
    assert!(ms.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn cubic_floor() {
    let report = enumerate_m_lt_one(3, &SearchOptions::default()).unwrap();
    let r = check_cubic(&report).unwrap();
    assert!(r.passed(), "{r}");
    assert!((r.predicted[0] - 1.894558).abs() < 1e-6);
    let e = check_cubic_element(&p("x^3+x+1")).unwrap();
    assert!((e.observed[0] - 2.0 * 0.965571).abs() < 2e-6);
    assert!(e.passed());
    let two = check_cubic_element(&p("x^3-2")).unwrap();
    // 3 * 2^(-2/3) * 2^(2/3)
    assert!((two.predicted[1] - 3.0).abs() < 1e-12);
    assert!(two.observed[0] >= 3.0);
}

#[test]
fn cubic2_paths_agree() {
    let one = check_cubic2(1).unwrap();
    assert!((one.observed[0] - 0.947279).abs() < 1e-6);
    assert_eq!(one.parameters["irreducibility"], "certified");
    for n in 1..=50 {
        let r = check_cubic2(n).unwrap();
        assert!(r.passed(), "{r}");
        assert!(r.observed[0] < 1.0);
    }
    assert_eq!(check_cubic2(9).unwrap().parameters["irreducibility"], "assumed");
}

#[test]
fn cubic2_closed_form_even() {
    let theta = 1.324717957244746f64;
    let y = theta.sqrt();
    let (sig, v) = cubic2_closed_form(2).unwrap();
    assert_eq!(sig, (2, 2));
    assert!((v - (2.0 * y.powi(-2) + 2.0 * y)).abs() < 1e-12);
}

#[test]
fn al_scaled_residual() {
    for n in [5, 15, 45] {
        let r = check_al(&p("x^3-2"), n).unwrap();
        assert!(r.passed(), "{r}");
    }
    assert!(check_al(&p("x^3-2"), 4).is_err());
}

#[test]
fn schur_examples() {
    let set = nfsize::roots::find_roots(&p("x^2-x-1")).unwrap();
    let (lhs, rhs) = schur_sides(&set.real_roots).unwrap();
    assert!((lhs - 5f64.ln()).abs() < 1e-12);
    assert!((rhs - 6f64.ln()).abs() < 1e-12);
    let (lhs, rhs) = schur_sides(&[1.0, -1.0]).unwrap();
    assert!((lhs - 4f64.ln()).abs() < 1e-12 && (rhs - 4f64.ln()).abs() < 1e-12);
    assert!(check_schur(&[1.0, -1.0]).unwrap().passed());
    assert_eq!(check_schur(&[1.0]).unwrap_err(), Error::TooFewPoints);
    // an equally spaced configuration scaled up only moves both sides
    let xs: Vec<f64> = (0..7).map(|i| i as f64 * 3.0 - 9.0).collect();
    assert!(check_schur(&xs).unwrap().passed());
}

#[test]
fn prod_deviation_bounded() {
    for s in [2, 100, 500] {
        let r = check_prod(s).unwrap();
        assert!(r.passed(), "{r}");
    }
    // 1^1 * 2^2 = 4
    assert!((log_kk(2) - 4f64.ln()).abs() < 1e-15);
}

#[test]
fn structural_checks() {
    for n in [2, 3, 54, 100, 200] {
        assert!(check_multinacci_location(n).unwrap().passed(), "n = {n}");
        assert!(check_pisot(n).unwrap().passed(), "n = {n}");
    }
    for k in 1..=5 {
        let r = check_even_spread(k).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.parameters["irreducibility"], "certified");
    }
    assert!(check_smyth(2, 5).unwrap().passed());
}

#[test]
fn erdos_turan_records() {
    let recs = check_erdos_turan_suite(true);
    assert!(!recs.is_empty());
    assert!(recs.iter().all(|r| r.passed()));
}

#[test]
fn suite_names_parse() {
    assert_eq!("fast".parse::<Suite>().unwrap(), Suite::Fast);
    assert!("slow".parse::<Suite>().is_err());
}

#[test]
fn fast_suite_is_deterministic_and_clean() {
    let a = run_suite(Suite::Fast);
    assert!(suite_passed(&a), "{}", records_to_csv(&a));
    let b = run_suite(Suite::Fast);
    assert_eq!(records_to_csv(&a), records_to_csv(&b));
    let ids: Vec<&str> = a.iter().map(|r| r.check_id.as_str()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
}
