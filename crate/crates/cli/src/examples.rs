//! Built-in reference examples: the E11 family of ideals and the staircase cone.

use std::fmt::Write as _;

use brodmann_core::ass::format_primes;
use brodmann_core::polyhedra::{
    build_system, extreme_rays, hilbert_generators, ConstraintSystem, EdMode, IntVector,
    DEFAULT_BUDGET,
};
use brodmann_core::{
    ass_profile, bound_report, e11_ideal, h0_m_monomials, max_ideal_in_ass, Monomial,
    MonomialIdeal,
};
use serde_json::json;

use crate::{Failure, Format};

struct Check {
    name: String,
    pass: bool,
    detail: String,
}

fn check(name: impl Into<String>, f: impl FnOnce() -> brodmann_core::Result<(bool, String)>) -> Check {
    let name = name.into();
    match f() {
        Ok((pass, detail)) => Check { name, pass, detail },
        Err(e) => Check { name, pass: false, detail: format!("error: {e}") },
    }
}

/// `Ass(I^n/I^(n+1))` is `{(x,y),(x,y,z)}` for `n < d-3` and `{(x,y)}` from `n = d-3` on.
fn e11_profile(d: u64) -> Check {
    check(format!("e11_profile_d{d}"), || {
        let p = ass_profile(&e11_ideal(d), d + 1)?;
        let ok = p.entries.iter().enumerate().all(|(n, e)| {
            let names: Vec<String> = e.iter().map(ToString::to_string).collect();
            if (n as u64) < d - 3 {
                names == ["{x1,x2}", "{x1,x2,x3}"]
            } else {
                names == ["{x1,x2}"]
            }
        }) && p.observed_stable_at == Some(d - 3);
        let last = format_primes(p.entries.last().expect("n_max >= 1"));
        Ok((ok, format!("stable from n = {:?} at {last}", p.observed_stable_at)))
    })
}

fn e11_max_ideal() -> Check {
    check("e11_d5_max_ideal_in_ass", || {
        let i = e11_ideal(5);
        let (a, b) = (max_ideal_in_ass(&i, 1)?, max_ideal_in_ass(&i, 2)?);
        Ok((a && !b, format!("n=1: {a}, n=2: {b}")))
    })
}

fn e11_saturation() -> Check {
    check("e11_d5_saturation", || {
        let i = e11_ideal(5);
        let sat = i.saturate(&MonomialIdeal::generated_by_variables(3, [0, 1, 2]))?;
        let expected = MonomialIdeal::from_exponents(3, &[&[5, 0, 0], &[4, 1, 0], &[1, 4, 0], &[0, 5, 0], &[2, 3, 0]]);
        Ok((sat == expected && i.delete_variable(3)? == expected, format!("{} generators", sat.len())))
    })
}

fn e11_h0() -> Check {
    check("e11_d5_h0", || {
        let i = e11_ideal(5);
        let h0 = h0_m_monomials(&i, 0)?;
        let h2 = h0_m_monomials(&i, 2)?;
        let mut found = h0.witness_monomials.clone();
        found.sort_by(|a, b| a.exponents().cmp(b.exponents()));
        let expected = vec![Monomial::new(vec![2, 3, 0]), Monomial::new(vec![3, 3, 0])];
        let ok = found == expected && !h2.nonzero;
        Ok((ok, format!("n=0: {} witnesses, n=2 nonzero: {}", h0.witness_monomials.len(), h2.nonzero)))
    })
}

fn e11_ed_sizes() -> Check {
    check("e11_d5_ed_variables", || {
        let i = e11_ideal(5);
        let ed1 = build_system(&i, EdMode::Ed1)?;
        let ed3 = build_system(&i, EdMode::Ed3)?;
        let ok = ed1.system.e == 20 && ed3.system.e == 25 && ed1.column_checks_hold() && ed3.column_checks_hold();
        Ok((ok, format!("ED1 {} vars, ED3 {} vars", ed1.system.e, ed3.system.e)))
    })
}

fn staircase() -> Vec<Check> {
    let sys = ConstraintSystem::staircase(3, 2);
    let u = IntVector(vec![1, 2, 4]);
    vec![
        check("staircase_e3_d2_ray", || {
            let rays = extreme_rays(&sys, DEFAULT_BUDGET)?;
            Ok((rays.contains(&u), format!("{} rays", rays.len())))
        }),
        check("staircase_e3_d2_hilbert", || {
            let h = hilbert_generators(&sys, 8, DEFAULT_BUDGET)?;
            Ok((h.contains(&u), format!("{} generators", h.len())))
        }),
    ]
}

fn bounds() -> Vec<Check> {
    vec![
        check("bound_2_2_2", || {
            let b = bound_report(2, 2, 2)?.b_ceiling.to_string();
            Ok((b == "16777216", format!("B = {b}")))
        }),
        check("bound_3_5_5", || {
            let rep = bound_report(3, 5, 5)?;
            let b = rep.b_ceiling.to_string();
            let ok = b == "762939453125000000000000000000000000000000000" && rep.b2.to_string() == b;
            Ok((ok, format!("B has {} digits", b.len())))
        }),
    ]
}

pub fn run(format: Format) -> Result<String, Failure> {
    let mut checks: Vec<Check> = [5, 6, 7].into_iter().map(e11_profile).collect();
    checks.extend([e11_max_ideal(), e11_saturation(), e11_h0(), e11_ed_sizes()]);
    checks.extend(staircase());
    checks.extend(bounds());
    let all = checks.iter().all(|c| c.pass);
    let out = match format {
        Format::Json => {
            let rows: Vec<_> = checks
                .iter()
                .map(|c| json!({"name": c.name, "pass": c.pass, "detail": c.detail}))
                .collect();
            format!("{}\n", serde_json::to_string_pretty(&json!({"all_pass": all, "checks": rows})).expect("serializes"))
        }
        Format::Tsv => {
            let mut out = String::from("example\tresult\tdetail\n");
            for c in &checks {
                let _ = writeln!(out, "{}\t{}\t{}", c.name, if c.pass { "PASS" } else { "FAIL" }, c.detail);
            }
            out
        }
    };
    if all {
        Ok(out)
    } else {
        Err(Failure { code: 4, message: "some reference examples failed".into(), dump: Some(out) })
    }
}
