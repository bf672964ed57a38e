//! One function per subcommand. Each returns the finished report text.

use serde::{Deserialize, Serialize};

use schubert_core::peterson::{peterson_translate, TranslateRequest};
use schubert_core::report::{
    ElementJson, IntervalJson, RootsJson, SmoothnessJson, TangentBoundsJson, TranslateJson, UNVERIFIED_LABEL,
};
use schubert_core::singloc::{gp_smooth_at, smooth_at, smoothness_report, tangent_space_bounds};
use schubert_core::sweep::{sweep, SweepFilter};
use schubert_core::{Error, Result, SchubertVariety, SmoothnessOptions, Verdict, WeylGroup};

use crate::{element, group, table, Cli, Command, Format, PointTarget, Target};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointVerdictJson {
    #[serde(rename = "type")]
    pub type_name: String,
    pub word: Vec<usize>,
    pub at: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parabolic: Option<Vec<usize>>,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verification: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalJson {
    #[serde(rename = "type")]
    pub type_name: String,
    pub word: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub at: Option<Vec<usize>>,
    pub rationally_smooth: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub poincare: Option<Vec<usize>>,
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

fn render<T: Serialize>(cli: &Cli, value: &T, as_table: impl FnOnce(&T) -> String) -> String {
    match cli.format {
        Format::Json => json(value),
        Format::Table => as_table(value),
    }
}

fn opts(cli: &Cli) -> SmoothnessOptions {
    SmoothnessOptions { allow_g2: cli.allow_g2 }
}

fn unverified(g: &WeylGroup) -> Option<String> {
    g.root_system().descriptor().has_g2().then(|| UNVERIFIED_LABEL.to_string())
}

fn load(cli: &Cli, t: &Target) -> Result<(WeylGroup, schubert_core::WeylElement)> {
    let g = group(&t.ty.descriptor, cli.allow_g2)?;
    let w = element(&g, &t.word.0)?;
    Ok((g, w))
}

fn smooth_verdict(smooth: bool) -> Verdict {
    if smooth {
        Verdict::Smooth
    } else {
        Verdict::Singular
    }
}

pub fn run(cli: &Cli) -> Result<String> {
    match &cli.command {
        Command::Roots(ty) => {
            let g = group(&ty.descriptor, cli.allow_g2)?;
            Ok(render(cli, &RootsJson::new(g.root_system()), table::roots))
        }
        Command::Element(t) => {
            let (g, w) = load(cli, t)?;
            Ok(render(cli, &ElementJson::new(&g, &w), table::element))
        }
        Command::Interval(t) => {
            let (g, w) = load(cli, t)?;
            let iv = g.lower_interval(&w);
            Ok(render(cli, &IntervalJson::new(g.root_system(), &iv), table::interval))
        }
        Command::TangentWeights { point, curves, bounds } => tangent_weights(cli, point, *curves, *bounds),
        Command::Translate { point, from, curve } => {
            let (g, w) = load(cli, &point.target)?;
            let x = element(&g, &point.at.0)?;
            let rs = g.root_system();
            let req = match (from, curve) {
                (Some(y), _) => TranslateRequest::between(&g, &x, &element(&g, &y.0)?)?,
                (None, Some(mu)) => {
                    let mu = rs.root(&mu.0)?;
                    TranslateRequest::new(g.reflect_left(mu, &x), mu)
                }
                (None, None) => unreachable!("clap requires --from or --curve"),
            };
            let var = SchubertVariety::lazy(&g, w.clone());
            if !rs.is_positive(req.alpha) || !var.contains(&req.y) || req.y.length() <= x.length() {
                return Err(if var.contains(&req.y) { Error::NotAnUpwardCurve } else { Error::NotInInterval });
            }
            if !smooth_at(&g, &w, &req.y, opts(cli))? {
                return Err(Error::NotSmoothUpperPoint);
            }
            let t = peterson_translate(&var, &req)?;
            let te = var.curve_weights(&x)?;
            Ok(render(cli, &TranslateJson::new(rs, &t, &te), table::translate))
        }
        Command::SmoothAt(point) => {
            let (g, w) = load(cli, &point.target)?;
            let x = element(&g, &point.at.0)?;
            let smooth = smooth_at(&g, &w, &x, opts(cli))?;
            let out = PointVerdictJson {
                type_name: g.root_system().descriptor().to_string(),
                word: w.reduced_word(),
                at: x.reduced_word(),
                parabolic: None,
                verdict: smooth_verdict(smooth),
                verification: unverified(&g),
            };
            Ok(render(cli, &out, table::point_verdict))
        }
        Command::SingularLocus(t) => {
            let (g, w) = load(cli, t)?;
            let mut var = SchubertVariety::new(&g, w);
            let report = smoothness_report(&mut var, opts(cli))?;
            let (rational, _) = var.rationally_smooth()?;
            Ok(render(cli, &SmoothnessJson::new(&mut var, &report, rational), table::smoothness))
        }
        Command::RationallySmooth { target, at } => {
            let (g, w) = load(cli, target)?;
            let mut var = SchubertVariety::new(&g, w.clone());
            let out = match at {
                Some(at) => {
                    let x = element(&g, &at.0)?;
                    RationalJson {
                        type_name: g.root_system().descriptor().to_string(),
                        word: w.reduced_word(),
                        at: Some(x.reduced_word()),
                        rationally_smooth: var.rationally_smooth_at(&x)?,
                        poincare: None,
                    }
                }
                None => {
                    let (v, ev) = var.rationally_smooth()?;
                    RationalJson {
                        type_name: g.root_system().descriptor().to_string(),
                        word: w.reduced_word(),
                        at: None,
                        rationally_smooth: v,
                        poincare: Some(ev.poincare),
                    }
                }
            };
            Ok(render(cli, &out, table::rational))
        }
        Command::GpSmoothAt { point, parabolic } => {
            let (g, w) = load(cli, &point.target)?;
            let x = element(&g, &point.at.0)?;
            let smooth = gp_smooth_at(&g, &parabolic.0, &w, &x, opts(cli))?;
            let out = PointVerdictJson {
                type_name: g.root_system().descriptor().to_string(),
                word: w.reduced_word(),
                at: x.reduced_word(),
                parabolic: Some(parabolic.0.clone()),
                verdict: smooth_verdict(smooth),
                verification: unverified(&g),
            };
            Ok(render(cli, &out, table::point_verdict))
        }
        Command::Sweep { ty, length, max_length, budget } => {
            let g = group(&ty.descriptor, cli.allow_g2)?;
            let filter = SweepFilter { length: *length, max_length: *max_length };
            let report = sweep(&g, filter, *budget, opts(cli))?;
            Ok(render(cli, &report, table::sweep))
        }
    }
}

fn tangent_weights(cli: &Cli, point: &PointTarget, curves: bool, bounds: bool) -> Result<String> {
    let (g, w) = load(cli, &point.target)?;
    let x = element(&g, &point.at.0)?;
    let rs = g.root_system();
    let mut var = SchubertVariety::new(&g, w);
    if curves {
        let te = var.curve_weights(&x)?.to_coords(rs);
        return Ok(render(cli, &te, |v| table::weights(v)));
    }
    if !var.contains(&x) {
        return Err(Error::NotInInterval);
    }
    let report = smoothness_report(&mut var, opts(cli))?;
    let all = tangent_space_bounds(&var, &report)?;
    let b = all.iter().find(|b| b.x == x).expect("x lies in the interval");
    if bounds {
        return Ok(render(cli, &TangentBoundsJson::new(rs, b), table::bounds));
    }
    let exact = b.exact().ok_or(Error::TangentSpaceUndetermined)?.to_coords(rs);
    Ok(render(cli, &exact, |v| table::weights(v)))
}
