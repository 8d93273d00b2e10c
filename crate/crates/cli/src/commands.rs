use std::fmt::Write as _;
use std::path::Path;

use brodmann_core::ass::format_primes;
use brodmann_core::io::{parse_ideal, parse_monomial, parse_system, system_to_text};
use brodmann_core::polyhedra::{
    bound_a1, bound_a2, build_system, extreme_rays, hilbert_generators, module_generators,
    power_membership_system, solve_feasible, ConeGenerators, ConstraintSystem, IntVector,
};
use brodmann_core::{
    a0_observed, ass_power, ass_profile_with, bound_report, compare_with_observed,
    max_ideal_in_ass, ratliff_rush, AssMethod, AssProfile, Error, MonomialIdeal, PrimeSet,
};
use serde_json::json;

use crate::{examples, Cli, Command, Failure, Format, MethodArg};

type Out = Result<String, Failure>;

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into(), dump: None }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure {
        code: 1,
        message: format!("{}: {e}", path.display()),
        dump: None,
    })
}

/// Parse errors keep their line and gain the file name.
fn located(path: &Path, e: Error) -> Failure {
    let mut f = Failure::from(e);
    f.message = format!("{}: {}", path.display(), f.message);
    f
}

fn load_ideal(path: &Path) -> Result<MonomialIdeal, Failure> {
    parse_ideal(&read(path)?).map_err(|e| located(path, e))
}

fn load_system(path: &Path) -> Result<ConstraintSystem, Failure> {
    parse_system(&read(path)?).map_err(|e| located(path, e))
}

fn pretty(v: &serde_json::Value) -> String {
    format!("{}\n", serde_json::to_string_pretty(v).expect("json values serialize"))
}

fn primes_json(p: &PrimeSet) -> serde_json::Value {
    json!(p.iter().map(|q| q.indices().to_vec()).collect::<Vec<_>>())
}

pub fn run(cli: &Cli) -> Out {
    let parallel = cli.jobs != 1;
    match &cli.command {
        Command::AssProfile { ideal, n_max, method } => {
            let i = load_ideal(ideal)?;
            ass_profile_cmd(cli.format, &i, *n_max, *method, parallel)
        }
        Command::Ass { ideal, n, method } => ass_cmd(cli.format, &load_ideal(ideal)?, *n, *method),
        Command::Rr { ideal, n, m_cap } => {
            let rr = ratliff_rush(&load_ideal(ideal)?, *n, *m_cap)?;
            Ok(match cli.format {
                Format::Json => pretty(&serde_json::to_value(&rr).expect("serializes")),
                Format::Tsv => {
                    let mut out = String::new();
                    let _ = writeln!(out, "n\t{}", rr.n);
                    let _ = writeln!(out, "stabilized_at_m\t{}", rr.stabilized_at_m);
                    let _ = writeln!(out, "certified\t{}", rr.certified);
                    let _ = writeln!(out, "evaluated_up_to_m\t{}", rr.evaluated_up_to_m);
                    let _ = writeln!(out, "chain_monotone\t{}", rr.chain_monotone);
                    for g in rr.closure.generators() {
                        let _ = writeln!(out, "generator\t{g}");
                    }
                    out
                }
            })
        }
        Command::A0 { ideal, n_max, m_cap } => {
            let rep = a0_observed(&load_ideal(ideal)?, *n_max, *m_cap)?;
            Ok(match cli.format {
                Format::Json => pretty(&serde_json::to_value(&rep).expect("serializes")),
                Format::Tsv => {
                    let mut out = String::new();
                    let a0 = rep.a0.map_or("-inf".to_string(), |a| a.to_string());
                    let _ = writeln!(out, "a0\t{a0}");
                    let _ = writeln!(out, "certified\t{}", rep.certified);
                    let _ = writeln!(out, "degree\tnonzero");
                    for (k, f) in rep.per_degree_flags.iter().enumerate() {
                        let _ = writeln!(out, "{k}\t{f}");
                    }
                    for w in &rep.warnings {
                        let _ = writeln!(out, "# warning: {w}");
                    }
                    out
                }
            })
        }
        Command::Bound { r, s, d, ideal, n_max } => bound_cmd(cli, *r, *s, *d, ideal.as_deref(), *n_max),
        Command::Cone { system, rays, hilbert, module, cap, bound } => {
            let sys = load_system(system)?;
            cone_cmd(cli, &sys, *rays, *hilbert, *module, *cap, *bound)
        }
        Command::BuildSystem { ideal, mode } => {
            let ed = build_system(&load_ideal(ideal)?, *mode)?;
            let checks = ed.column_checks();
            let out = match cli.format {
                Format::Json => pretty(&serde_json::to_value(json!({
                    "system": ed,
                    "column_checks": checks,
                    "column_checks_hold": ed.column_checks_hold(),
                }))
                .expect("serializes")),
                Format::Tsv => {
                    let mut out = String::new();
                    let order: Vec<String> = ed.generator_order.iter().map(ToString::to_string).collect();
                    let _ = writeln!(out, "# r={} s={} d={} generators a1..as: {}", ed.r, ed.s, ed.d, order.join(", "));
                    for c in &checks {
                        let rel = if c.strict { "<" } else { "<=" };
                        let verdict = if c.holds() { "ok" } else { "FAILS" };
                        let _ = writeln!(out, "# |{}|^2 = {} {rel} {} {verdict}", c.label, c.norm_sq, c.bound);
                    }
                    out.push_str(&system_to_text(&ed.system));
                    out
                }
            };
            if ed.column_checks_hold() {
                Ok(out)
            } else {
                Err(Failure {
                    code: 4,
                    message: "a column-norm check failed".into(),
                    dump: Some(out),
                })
            }
        }
        Command::Feasible { system, fix, box_cap, ideal, n, monomial } => match (system, ideal) {
            (Some(path), None) => feasible_system(cli, &load_system(path)?, fix, *box_cap),
            (None, Some(path)) => {
                let (n, text) = (n.expect("clap requires --n"), monomial.as_deref().expect("clap requires --monomial"));
                feasible_power(cli, &load_ideal(path)?, n, text, *box_cap)
            }
            _ => Err(usage("give either --system or --ideal with --n and --monomial")),
        },
        Command::ReferenceExamples => examples::run(cli.format),
    }
}

fn profile_tsv(p: &AssProfile) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# entry n is Ass(I^n/I^(n+1)); shifted_n = n+1 indexes the same set as Ass(I^(m-1)/I^m)");
    let _ = writeln!(out, "n\tprimes\tshifted_n");
    for (n, e) in p.entries.iter().enumerate() {
        let _ = writeln!(out, "{n}\t{}\t{}", format_primes(e), n + 1);
    }
    match p.observed_stable_at {
        Some(n0) => {
            let _ = writeln!(
                out,
                "# observed_stable_at\t{n0}\t(shifted {}) with {} through n = {}",
                n0 + 1,
                format_primes(&p.entries[n0 as usize]),
                p.n_max()
            );
        }
        None => {
            let _ = writeln!(out, "# observed_stable_at\tnone\t(last two entries differ)");
        }
    }
    if !p.is_monotone() {
        let _ = writeln!(
            out,
            "# non-monotone: increases at {:?}, decreases at {:?}, incomparable at {:?}",
            p.increases_at, p.decreases_at, p.incomparable_at
        );
    }
    out
}

fn profile_json(p: &AssProfile) -> serde_json::Value {
    let entries: Vec<_> = p
        .entries
        .iter()
        .enumerate()
        .map(|(n, e)| json!({"n": n, "shifted_n": n + 1, "primes": primes_json(e), "display": format_primes(e)}))
        .collect();
    json!({
        "method": p.method,
        "entries": entries,
        "observed_stable_at": p.observed_stable_at,
        "observed_stable_at_shifted": p.observed_stable_at.map(|n| n + 1),
        "increases_at": p.increases_at,
        "decreases_at": p.decreases_at,
        "incomparable_at": p.incomparable_at,
    })
}

fn render_profile(format: Format, p: &AssProfile) -> String {
    match format {
        Format::Tsv => profile_tsv(p),
        Format::Json => pretty(&profile_json(p)),
    }
}

fn ass_profile_cmd(format: Format, i: &MonomialIdeal, n_max: u64, method: MethodArg, parallel: bool) -> Out {
    let p = match method {
        MethodArg::Quotient => ass_profile_with(i, n_max, AssMethod::Quotient, parallel)?,
        MethodArg::Recursion => ass_profile_with(i, n_max, AssMethod::Recursion, parallel)?,
        MethodArg::Both => {
            let q = ass_profile_with(i, n_max, AssMethod::Quotient, parallel)?;
            let r = ass_profile_with(i, n_max, AssMethod::Recursion, parallel)?;
            if q.entries != r.entries {
                let first = q.entries.iter().zip(&r.entries).position(|(a, b)| a != b).unwrap_or(0);
                return Err(Failure {
                    code: 4,
                    message: format!("quotient and recursion methods disagree at n = {first}"),
                    dump: Some(format!(
                        "quotient:\n{}recursion:\n{}",
                        render_profile(format, &q),
                        render_profile(format, &r)
                    )),
                });
            }
            q
        }
    };
    Ok(render_profile(format, &p))
}

fn ass_cmd(format: Format, i: &MonomialIdeal, n: u64, method: MethodArg) -> Out {
    let primes = match method {
        MethodArg::Quotient => ass_power(i, n, AssMethod::Quotient)?,
        MethodArg::Recursion => ass_power(i, n, AssMethod::Recursion)?,
        MethodArg::Both => {
            let q = ass_power(i, n, AssMethod::Quotient)?;
            let r = ass_power(i, n, AssMethod::Recursion)?;
            if q != r {
                return Err(Failure {
                    code: 4,
                    message: format!("quotient and recursion methods disagree at n = {n}"),
                    dump: Some(format!("quotient\t{}\nrecursion\t{}", format_primes(&q), format_primes(&r))),
                });
            }
            q
        }
    };
    let max_ideal = i.is_proper_nonzero() && max_ideal_in_ass(i, n)?;
    Ok(match format {
        Format::Json => pretty(&json!({
            "n": n,
            "shifted_n": n + 1,
            "primes": primes_json(&primes),
            "display": format_primes(&primes),
            "max_ideal_in_ass": max_ideal,
        })),
        Format::Tsv => format!(
            "# Ass(I^n/I^(n+1)); shifted_n = n+1\nn\tprimes\tshifted_n\tmax_ideal_in_ass\n{n}\t{}\t{}\t{max_ideal}\n",
            format_primes(&primes),
            n + 1
        ),
    })
}

fn bound_cmd(
    cli: &Cli,
    r: Option<u64>,
    s: Option<u64>,
    d: Option<u64>,
    ideal: Option<&Path>,
    n_max: u64,
) -> Out {
    let Some(path) = ideal else {
        let (Some(r), Some(s), Some(d)) = (r, s, d) else {
            return Err(usage("bound needs --r, --s and --d, or --ideal"));
        };
        let rep = bound_report(r, s, d)?;
        return Ok(match cli.format {
            Format::Json => pretty(&rep.to_json()),
            Format::Tsv => rep.to_tsv(),
        });
    };
    let i = load_ideal(path)?;
    if !i.is_proper_nonzero() {
        return Err(Error::InvalidInput("the ideal must be proper and nonzero".into()).into());
    }
    let (ri, si, di) = (i.r() as u64, i.len() as u64, i.max_degree());
    for (name, given, actual) in [("r", r, ri), ("s", s, si), ("d", d, di)] {
        if given.is_some_and(|g| g != actual) {
            return Err(usage(format!("--{name} {} does not match the ideal's {name} = {actual}", given.unwrap_or(0))));
        }
    }
    let rep = bound_report(ri, si, di)?;
    let profile = ass_profile_with(&i, n_max, AssMethod::Quotient, cli.jobs != 1)?;
    let cmp = compare_with_observed(&i, &profile)?;
    Ok(match cli.format {
        Format::Json => pretty(&json!({"bounds": rep.to_json(), "comparison": cmp})),
        Format::Tsv => {
            let mut out = rep.to_tsv();
            let stable = cmp.observed_stable_at.map_or("none".to_string(), |n| n.to_string());
            let _ = writeln!(out, "observed_stable_at\t{stable}");
            let _ = writeln!(out, "scanned_up_to\t{}", cmp.n_max);
            if let Some(slack) = &cmp.slack {
                let _ = writeln!(out, "slack\t{slack}");
            }
            let _ = writeln!(out, "# {}", cmp.note);
            out
        }
    })
}

fn cone_cmd(cli: &Cli, sys: &ConstraintSystem, rays: bool, hilbert: bool, module: bool, cap: u64, bound: bool) -> Out {
    let (rays, bound) = if !(rays || hilbert || module || bound) { (true, true) } else { (rays, bound) };
    let hom = sys.homogenized();
    let mut notes = Vec::new();
    let ray_list = if rays { extreme_rays(&hom, cli.budget)? } else { Vec::new() };
    let a1 = bound_a1(&hom);
    let hilbert_list = if hilbert {
        let c = a1.ceil();
        if c > cap.into() {
            notes.push(format!("box side {cap} is below the certified bound {c}; the list may be incomplete"));
        }
        Some(hilbert_generators(&hom, cap, cli.budget)?)
    } else {
        None
    };
    let a2 = bound_a2(sys);
    let module_list = if module {
        let c = a2.ceil();
        if c > cap.into() {
            notes.push(format!("box side {cap} is below the certified module bound {c}; the list may be incomplete"));
        }
        Some(module_generators(sys, cap, cli.budget)?)
    } else {
        None
    };
    let (bound_star, bound_star_ceiling) = if sys.is_homogeneous() {
        (a1.to_string(), a1.ceil().to_string())
    } else {
        (a2.to_string(), a2.ceil().to_string())
    };
    let cone = ConeGenerators {
        rays: ray_list,
        hilbert: hilbert_list,
        module_gens: module_list,
        bound_star,
        bound_star_ceiling,
    };
    Ok(match cli.format {
        Format::Json => {
            let mut v = serde_json::to_value(&cone).expect("serializes");
            v["notes"] = json!(notes);
            pretty(&v)
        }
        Format::Tsv => {
            let mut out = String::new();
            let mut list = |name: &str, vs: &[IntVector]| {
                for v in vs {
                    let _ = writeln!(out, "{name}\t{v}");
                }
            };
            if rays {
                list("ray", &cone.rays);
            }
            if let Some(h) = &cone.hilbert {
                list("hilbert", h);
            }
            if let Some(m) = &cone.module_gens {
                list("module", m);
            }
            if bound {
                let _ = writeln!(out, "bound_star\t{}", cone.bound_star);
                let _ = writeln!(out, "bound_star_ceiling\t{}", cone.bound_star_ceiling);
            }
            for n in &notes {
                let _ = writeln!(out, "# {n}");
            }
            out
        }
    })
}

fn render_feasible(format: Format, sys: &ConstraintSystem, point: &Option<IntVector>, box_cap: u64) -> String {
    match format {
        Format::Json => pretty(&json!({
            "feasible": point.is_some(),
            "box": box_cap,
            "labels": sys.labels,
            "point": point,
        })),
        Format::Tsv => match point {
            Some(p) => {
                let mut out = format!("feasible\t{p}\n");
                for (l, x) in sys.labels.iter().zip(p.entries()) {
                    let _ = writeln!(out, "{l}\t{x}");
                }
                out
            }
            None => format!("infeasible\twithin box [0,{box_cap}]\n"),
        },
    }
}

fn feasible_system(cli: &Cli, sys: &ConstraintSystem, fix: &[String], box_cap: u64) -> Out {
    let mut fixed = vec![None; sys.e];
    for f in fix {
        let (label, value) = f
            .split_once('=')
            .ok_or_else(|| usage(format!("--fix expects label=value, found `{f}`")))?;
        let k = sys
            .label_index(label.trim())
            .ok_or_else(|| usage(format!("no variable labelled `{}`", label.trim())))?;
        let v: i64 = value
            .trim()
            .parse()
            .map_err(|_| usage(format!("`{}` is not an integer", value.trim())))?;
        fixed[k] = Some(v);
    }
    let point = solve_feasible(sys, &fixed, box_cap, cli.budget)?;
    Ok(render_feasible(cli.format, sys, &point, box_cap))
}

/// `t^b ∈ I^n` through the membership system, cross-checked against the power.
fn feasible_power(cli: &Cli, i: &MonomialIdeal, n: u64, monomial: &str, box_cap: u64) -> Out {
    let b = parse_monomial(monomial, i.r())?;
    let sys = power_membership_system(i)?;
    let mut fixed = vec![None; sys.e];
    fixed[0] = Some(n as i64);
    for (j, &bj) in b.exponents().iter().enumerate() {
        fixed[1 + j] = Some(bj as i64);
    }
    let point = solve_feasible(&sys, &fixed, box_cap, cli.budget)?;
    let direct = i.power(n).contains(&b)?;
    // the multiplicities never exceed n, so a box of side n is exhaustive
    if (point.is_some() != direct) && (point.is_some() || box_cap >= n) {
        return Err(Error::Inconsistent(format!(
            "membership system says {} but I^{n} {} {b}",
            point.is_some(),
            if direct { "contains" } else { "does not contain" }
        ))
        .into());
    }
    let mut out = render_feasible(cli.format, &sys, &point, box_cap);
    if cli.format == Format::Tsv {
        let _ = writeln!(out, "# {b} in I^{n}: {direct}");
    }
    Ok(out)
}
