//! Checks keyed by identifier; suites expand into concrete jobs.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use trigcenter::central::{
    verify_at_exact, verify_centrality, verify_comm1_exact, verify_h_valuation, verify_pairwise_commute,
    verify_qdet_classical, verify_rtt_exact, verify_theta_classical, AuxKind, SeriesId, TruncRep,
};
use trigcenter::coeffring::SeriesWindow;
use trigcenter::fusion::{build_antisymmetrizer, verify_ad_commutation, verify_fusion};
use trigcenter::normalizer::{
    check_display, check_equal, check_highest_component, solve_g_appendix_a, solve_g_froute, verify_g_relations,
    GSeries,
};
use trigcenter::report::{CheckOutcome, Status};
use trigcenter::rmatrix::{verify_crossing, verify_rational_limit, verify_unitarity, verify_ybe, RMatrixBundle};
use trigcenter::{Error, Rational, Result};

/// Largest `n` for which the representation checks run.
pub const CENTRAL_MAX_N: usize = 2;

pub const CHECKS: &[&str] = &[
    "g-crossval",
    "g-display",
    "g-relations",
    "g-highest",
    "unitarity",
    "crossing",
    "ybe",
    "rational-limit",
    "fusion",
    "central",
    "commute",
    "theta-valuation",
    "classical",
    "exact-rep",
];

pub const GROUPS: &[(&str, &[&str])] = &[
    ("normalizer", &["g-crossval", "g-display", "g-relations", "g-highest"]),
    ("rmatrix", &["unitarity", "crossing", "ybe", "rational-limit"]),
];

#[derive(Clone, Debug)]
pub struct Params {
    pub n: usize,
    pub window: SeriesWindow,
    pub level: Option<Rational>,
    pub series: Option<String>,
    pub k: Option<usize>,
}

impl Params {
    pub fn level(&self) -> Rational {
        self.level.clone().unwrap_or_else(|| Rational::from_integer((-(self.n as i64)).into()))
    }

    fn base(&self) -> BTreeMap<String, String> {
        let w = &self.window;
        BTreeMap::from([
            ("n".to_string(), self.n.to_string()),
            ("window".to_string(), format!("[{}, {}] x h^{}", w.u_low, w.u_high, w.h_high)),
        ])
    }
}

/// Shared lazily computed artifacts.
pub struct Ctx {
    pub params: Params,
    bundle: OnceLock<std::result::Result<RMatrixBundle<Rational>, Error>>,
    g: OnceLock<std::result::Result<GSeries<Rational>, Error>>,
}

impl Ctx {
    pub fn new(params: Params) -> Self {
        Self {
            params,
            bundle: OnceLock::new(),
            g: OnceLock::new(),
        }
    }

    fn bundle(&self) -> Result<&RMatrixBundle<Rational>> {
        self.bundle
            .get_or_init(|| RMatrixBundle::new(self.params.n, &self.params.window))
            .as_ref()
            .map_err(Clone::clone)
    }

    fn g(&self) -> Result<&GSeries<Rational>> {
        let p = &self.params;
        self.g
            .get_or_init(|| solve_g_froute(p.n, &p.window.padded(2 * p.window.h_high as i64 + 4)))
            .as_ref()
            .map_err(Clone::clone)
    }

    fn rep(&self, aux: AuxKind) -> Result<TruncRep<Rational>> {
        TruncRep::new(self.params.n, aux, &self.params.window)
    }
}

type RunFn = Box<dyn Fn(&Ctx) -> Result<CheckOutcome> + Send + Sync>;

pub struct Job {
    pub id: String,
    pub params: BTreeMap<String, String>,
    pub run: RunFn,
}

fn job(id: impl Into<String>, params: BTreeMap<String, String>, run: RunFn) -> Job {
    Job {
        id: id.into(),
        params,
        run,
    }
}

fn skipped(why: &str) -> RunFn {
    let why = why.to_string();
    Box::new(move |_| {
        Ok(CheckOutcome {
            status: Status::Skipped,
            witness: None,
            detail: why.clone(),
        })
    })
}

/// Expands `--suites` (checks or groups) into known check ids.
pub fn resolve_suites(names: &[String], all: bool) -> std::result::Result<Vec<&'static str>, String> {
    if all {
        return Ok(CHECKS.to_vec());
    }
    let mut out: Vec<&'static str> = Vec::new();
    for name in names {
        let name = name.trim();
        let ids: Vec<&'static str> = if let Some((_, ids)) = GROUPS.iter().find(|(g, _)| *g == name) {
            ids.to_vec()
        } else if let Some(id) = CHECKS.iter().find(|c| **c == name) {
            vec![*id]
        } else {
            return Err(format!("unknown suite `{name}`"));
        };
        for id in ids {
            if !out.contains(&id) {
                out.push(id);
            }
        }
    }
    Ok(out)
}

fn central_series(p: &Params) -> std::result::Result<Vec<SeriesId>, String> {
    match (&p.series, p.k) {
        // Θ_m is a combination of θ_0, ..., θ_m.
        (Some(s), k) if s == "Theta" => Ok((1..=k.unwrap_or(1)).map(SeriesId::Theta).collect()),
        (Some(s), k) => {
            let k = if s == "qdet" { p.n } else { k.unwrap_or(1) };
            SeriesId::parse(s, k).map(|id| vec![id]).map_err(|e| e.to_string())
        }
        (None, _) => {
            let mut v: Vec<SeriesId> = (1..=p.n).flat_map(|k| [SeriesId::Phi(k), SeriesId::Theta(k)]).collect();
            v.push(SeriesId::Qdet);
            Ok(v)
        }
    }
}

fn fusion_ks(p: &Params) -> Vec<usize> {
    match p.k {
        Some(k) => vec![k],
        None => (2..=3).collect(),
    }
}

/// Concrete jobs for one check id.
pub fn jobs_for(id: &str, p: &Params) -> std::result::Result<Vec<Job>, String> {
    let base = p.base();
    let n = p.n;
    let big = n > CENTRAL_MAX_N;
    let too_big = format!("representation checks are limited to n <= {CENTRAL_MAX_N}");
    let jobs = match id {
        "g-crossval" => vec![job(
            id,
            base,
            Box::new(|c: &Ctx| {
                let w = &c.params.window;
                let a = solve_g_appendix_a::<Rational>(c.params.n, w)?;
                Ok(check_equal(&c.g()?.g, &a.series, w))
            }),
        )],
        "g-display" => vec![job(id, base, Box::new(|c: &Ctx| check_display(&c.g()?.g, c.params.n, &c.params.window)))],
        "g-relations" => vec![job(
            id,
            base,
            Box::new(|c: &Ctx| Ok(verify_g_relations(&c.g()?.g, c.params.n, &c.params.window))),
        )],
        "g-highest" => vec![job(
            id,
            base,
            Box::new(|c: &Ctx| {
                let g = c.g()?;
                Ok(check_highest_component(&g.g, &g.gbar_rat, &c.params.window))
            }),
        )],
        "unitarity" => vec![job(
            id,
            base,
            Box::new(|c: &Ctx| {
                let b = c.bundle()?;
                verify_unitarity(&b.r_norm, &b.window)
            }),
        )],
        "crossing" => vec![job(
            id,
            base,
            Box::new(|c: &Ctx| {
                let b = c.bundle()?;
                verify_crossing(&b.r_norm, b.n, &b.work, &b.window)
            }),
        )],
        "ybe" => vec![job(id, base, Box::new(|c: &Ctx| verify_ybe::<Rational>(c.params.n)))],
        "rational-limit" => vec![job(id, base, Box::new(|c: &Ctx| verify_rational_limit(c.bundle()?)))],
        "fusion" => fusion_ks(p)
            .into_iter()
            .map(|k| {
                let mut params = base.clone();
                params.insert("k".into(), k.to_string());
                job(
                    format!("fusion/k{k}"),
                    params,
                    Box::new(move |c: &Ctx| {
                        let n = c.params.n;
                        let a = build_antisymmetrizer::<Rational>(n, k)?;
                        let mut parts = vec![
                            ("idempotent".to_string(), a.verify_idempotent()?),
                            ("trace".to_string(), a.verify_trace()),
                            ("AD".to_string(), verify_ad_commutation::<Rational>(n, k)?),
                        ];
                        if k >= 2 {
                            parts.push(("fusion".to_string(), verify_fusion::<Rational>(n, k)?));
                        }
                        Ok(CheckOutcome::all(parts))
                    }),
                )
            })
            .collect(),
        "central" => {
            let level = p.level();
            central_series(p)?
                .into_iter()
                .map(|sid| {
                    let mut params = base.clone();
                    params.insert("series".into(), sid.to_string());
                    params.insert("level".into(), level.to_string());
                    let run: RunFn = if big {
                        skipped(&too_big)
                    } else {
                        let level = level.clone();
                        Box::new(move |c: &Ctx| verify_centrality(&c.rep(AuxKind::Single)?, sid, &level))
                    };
                    job(format!("central/{sid}@c={level}"), params, run)
                })
                .collect()
        }
        "commute" => vec![job(
            id,
            base,
            if big {
                skipped(&too_big)
            } else {
                Box::new(|c: &Ctx| verify_pairwise_commute(&c.rep(AuxKind::Pair)?))
            },
        )],
        "theta-valuation" => vec![job(
            id,
            base,
            if big {
                skipped(&too_big)
            } else {
                Box::new(|c: &Ctx| {
                    let r = c.rep(AuxKind::Single)?;
                    let top = c.params.window.h_high.min(2);
                    let parts = (0..=top)
                        .map(|m| Ok((format!("m={m}"), verify_h_valuation(&r, m)?)))
                        .collect::<Result<Vec<_>>>()?;
                    Ok(CheckOutcome::all(parts))
                })
            },
        )],
        "classical" => vec![job(
            id,
            base,
            if big {
                skipped(&too_big)
            } else {
                Box::new(|c: &Ctx| {
                    let r = c.rep(AuxKind::Single)?;
                    let top = c.params.window.h_high.min(2);
                    let mut parts = (0..=top)
                        .map(|m| Ok((format!("Theta{m}"), verify_theta_classical(&r, m)?)))
                        .collect::<Result<Vec<_>>>()?;
                    parts.push(("qdet".to_string(), verify_qdet_classical(&r)?));
                    Ok(CheckOutcome::all(parts))
                })
            },
        )],
        "exact-rep" => vec![job(
            id,
            base,
            Box::new(|c: &Ctx| {
                let n = c.params.n;
                let mut parts = vec![("RTT".to_string(), verify_rtt_exact::<Rational>(n)?)];
                for k in 1..=n.min(3) {
                    parts.push((format!("AT k={k}"), verify_at_exact::<Rational>(n, k)?));
                }
                for k in 2..=3 {
                    parts.push((format!("comm1 k={k}"), verify_comm1_exact::<Rational>(n, k)?));
                }
                Ok(CheckOutcome::all(parts))
            }),
        )],
        other => return Err(format!("unknown check `{other}`")),
    };
    Ok(jobs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(n: usize) -> Params {
        Params {
            n,
            window: SeriesWindow::new(-4, 2, 2).unwrap(),
            level: None,
            series: None,
            k: None,
        }
    }

    #[test]
    fn groups_expand_without_duplicates() {
        let ids = resolve_suites(&["rmatrix".into(), "ybe".into()], false).unwrap();
        assert_eq!(ids, vec!["unitarity", "crossing", "ybe", "rational-limit"]);
        assert_eq!(resolve_suites(&[], true).unwrap().len(), CHECKS.len());
        assert!(resolve_suites(&["nope".into()], false).is_err());
    }

    #[test]
    fn central_defaults_to_all_series_at_critical_level() {
        let jobs = jobs_for("central", &params(2)).unwrap();
        let ids: Vec<&str> = jobs.iter().map(|j| j.id.as_str()).collect();
        assert!(ids.contains(&"central/phi2@c=-2"));
        assert!(ids.contains(&"central/qdet@c=-2"));
        assert_eq!(jobs.len(), 5);
        let mut p = params(2);
        p.series = Some("Theta".into());
        p.k = Some(2);
        assert_eq!(jobs_for("central", &p).unwrap().len(), 2);
    }

    #[test]
    fn every_check_has_jobs() {
        for id in CHECKS {
            assert!(!jobs_for(id, &params(1)).unwrap().is_empty(), "{id}");
        }
        assert!(jobs_for("nope", &params(1)).is_err());
    }

    #[test]
    fn large_n_skips_representation_checks() {
        let ctx = Ctx::new(params(3));
        let jobs = jobs_for("commute", &ctx.params).unwrap();
        assert_eq!((jobs[0].run)(&ctx).unwrap().status, Status::Skipped);
    }

    #[test]
    fn ybe_job_runs() {
        let ctx = Ctx::new(params(2));
        let jobs = jobs_for("ybe", &ctx.params).unwrap();
        assert!((jobs[0].run)(&ctx).unwrap().passed());
    }
}
