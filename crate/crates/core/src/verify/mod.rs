//! Named numeric checks of the size identities, constructions and
//! asymptotic estimates, each emitting a [`CheckRecord`].
//!
//! Asymptotic checks never assert a convergence rate. They scale the
//! residual by the stated rate and compare it with a regression bound from
//! [`frozen`].

mod checks;
pub mod frozen;
mod record;

use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::search::{enumerate_m_lt_one, SearchOptions, SubelementPattern};

pub use checks::*;
pub use record::{records_to_csv, CheckRecord, Verdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    Fast,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(Suite::All),
            "fast" => Ok(Suite::Fast),
            _ => Err(Error::Parse(format!("unknown suite `{s}`, expected all or fast"))),
        }
    }
}

type Job = Box<dyn Fn() -> Vec<CheckRecord> + Send + Sync>;

fn one<F>(template: CheckRecord, f: F) -> Job
where
    F: Fn() -> Result<CheckRecord> + Send + Sync + 'static,
{
    Box::new(move || vec![settle(template.clone(), f())])
}

fn jobs(suite: Suite) -> Vec<Job> {
    let fast = suite == Suite::Fast;
    let mut jobs: Vec<Job> = Vec::new();

    jobs.push(Box::new(|| match check_constants() {
        Ok(v) => v,
        Err(e) => vec![CheckRecord::new("constants").with_verdict(Verdict::Fail, e.to_string())],
    }));

    let lopo_n: &[u32] = if fast { &[3, 10, 50, 100, 200] } else { &[3, 10, 25, 50, 100, 200, 400, 402, 800] };
    for &q in &[1.0, 2.0] {
        for &n in lopo_n {
            jobs.push(one(CheckRecord::new("lopo").param("n", n).param("q", q), move || {
                check_sum_asymptotic(n, q)
            }));
        }
    }

    let bhu_n: &[u32] = if fast { &[2, 5, 11, 51, 101, 200] } else { &[2, 5, 10, 11, 25, 50, 51, 100, 101, 200, 201, 400, 401, 800] };
    for &n in bhu_n {
        jobs.push(one(CheckRecord::new("bhu1").param("n", n), move || check_bhu1(n)));
        jobs.push(one(CheckRecord::new("bhu1_real").param("n", n), move || check_bhu1_real(n)));
    }

    let kiy_k: &[u32] = if fast { &[1, 2, 5, 12, 25, 49] } else { &[1, 2, 5, 12, 25, 50, 100, 199] };
    for &k in kiy_k {
        jobs.push(one(CheckRecord::new("kiy").param("k", k), move || check_kiy(k)));
        jobs.push(one(CheckRecord::new("kiy_m").param("k", k), move || check_kiy_m(k)));
    }

    let kiy1: &[(u32, u32)] = if fast {
        &[(2, 1), (2, 5), (4, 1), (6, 3)]
    } else {
        &[(2, 1), (2, 2), (2, 5), (2, 10), (2, 25), (2, 50), (4, 1), (4, 5), (6, 3), (10, 10)]
    };
    for &(s, k) in kiy1 {
        jobs.push(one(CheckRecord::new("kiy1").param("s", s).param("k", k), move || check_kiy1(s, k)));
    }

    jobs.push(one(CheckRecord::new("cubic"), || {
        check_cubic(&enumerate_m_lt_one(3, &SearchOptions::default())?)
    }));
    for p in ["x^3+x^2-1", "x^3+x-1", "x^3-x-1", "x^3-2"] {
        jobs.push(one(CheckRecord::new("cubic_element").param("polynomial", p), move || {
            check_cubic_element(&p.parse()?)
        }));
    }

    let cubic2_max = if fast { 10 } else { 50 };
    for n in 1..=cubic2_max {
        jobs.push(one(CheckRecord::new("cubic2").param("n", n), move || check_cubic2(n)));
    }

    for n in [3u32, 5, 15, 45] {
        jobs.push(one(CheckRecord::new("al").param("base", "x^3 - 2").param("n", n), move || {
            check_al(&"x^3-2".parse()?, n)
        }));
    }

    for p in ["x^2-x-1", "x^3-3x-1", "x^4-4x^2+2", "x^5-5x^3+5x-1"] {
        jobs.push(one(CheckRecord::new("schur").param("polynomial", p), move || {
            let set = crate::roots::find_roots(&p.parse()?)?;
            check_schur(&set.real_roots).map(|r| r.param("polynomial", p))
        }));
    }
    jobs.push(one(CheckRecord::new("schur").param("points", "{1, -1}"), || {
        check_schur(&[1.0, -1.0]).map(|r| r.param("points", "{1, -1}"))
    }));
    let prod_s: &[usize] = if fast { &[2, 10, 100] } else { &[2, 5, 10, 50, 100, 500] };
    for &s in prod_s {
        jobs.push(one(CheckRecord::new("prod").param("s", s), move || check_prod(s)));
    }

    jobs.push(Box::new(move || check_erdos_turan_suite(fast)));

    let top = if fast { 60 } else { 200 };
    for n in 2..=top {
        jobs.push(one(CheckRecord::new("multinacci_location").param("n", n), move || {
            check_multinacci_location(n)
        }));
        jobs.push(one(CheckRecord::new("pisot").param("n", n), move || check_pisot(n)));
    }
    for k in 1..=5 {
        jobs.push(one(CheckRecord::new("even_spread").param("k", k), move || check_even_spread(k)));
    }

    jobs.push(one(CheckRecord::new("smyth").param("degrees", "2..=5"), || check_smyth(2, 5)));
    let patterns: Vec<fn() -> SubelementPattern> = vec![
        SubelementPattern::quartic,
        SubelementPattern::sextic_2_2_quadratic,
        SubelementPattern::sextic_2_2_cubic,
        SubelementPattern::sextic_4_1_quadratic,
        SubelementPattern::sextic_4_1_cubic,
    ];
    for make in patterns {
        jobs.push(one(CheckRecord::new("subelement").param("pattern", make().name), move || {
            check_subelement(&make())
        }));
    }
    jobs
}

/// Runs every check of the suite. Records are grouped by `check_id` in a
/// fixed order and keep their parameter order within a group.
pub fn run_suite(suite: Suite) -> Vec<CheckRecord> {
    let mut out: Vec<CheckRecord> = jobs(suite).par_iter().flat_map_iter(|job| job()).collect();
    out.sort_by(|a, b| a.check_id.cmp(&b.check_id));
    out
}

/// True iff no record failed.
pub fn suite_passed(records: &[CheckRecord]) -> bool {
    records.iter().all(|r| r.verdict != Verdict::Fail)
}
