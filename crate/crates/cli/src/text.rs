//! Plain-text rendering of the reports.

use std::fmt::Write;

use crate::report::*;

fn group_line(out: &mut String, g: &GroupInfo) {
    let _ = write!(
        out,
        "group {} over F_{}: order {}, N = {}, s = {} (adjusted {}), d = {}",
        g.spec, g.q, g.order, g.cyclic_order, g.s, g.s_adjusted, g.d
    );
    if g.abelian {
        out.push_str(", abelian");
    }
    if let Some(case) = &g.case {
        let _ = write!(out, ", case {case}");
    }
    out.push('\n');
}

fn flag(b: Option<bool>) -> &'static str {
    match b {
        Some(true) => "yes",
        Some(false) => "no",
        None => "-",
    }
}

pub fn factorization(f: &FactorizationInfo) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "x^{} - 1 over F_{}: {} factors, splitting degree {}", f.n, f.q, f.factors.len(), f.splitting_degree);
    if let (Some(s), Some(d)) = (f.s, f.d) {
        let _ = writeln!(out, "s = {s}, d = {d}, r = {}, t = {}", f.r.unwrap_or(0), f.t.unwrap_or(0));
    }
    for fi in &f.factors {
        let _ = write!(out, "  f{} = {}  (deg {}, root order {}, coset {:?}", fi.index, fi.poly, fi.degree, fi.root_order, fi.coset);
        if fi.self_involutive.is_some() {
            let _ = write!(out, ", self-involutive {}, divides x^d-1 {}", flag(fi.self_involutive), flag(fi.divides_xd));
        }
        if let Some(p) = fi.partner {
            let _ = write!(out, ", partner f{p}");
        }
        out.push_str(")\n");
    }
    out
}

pub fn decomposition(r: &DecompositionReport) -> String {
    let mut out = String::new();
    group_line(&mut out, &r.group);
    out.push_str(&factorization(&r.factorization));
    let _ = writeln!(
        out,
        "{} components ({} abelian), dimension sum {} = |G| {}, center dimension {}",
        r.totals.components, r.totals.abelian_components, r.totals.dimension_sum, r.totals.group_order, r.totals.center_dimension
    );
    let shape: Vec<String> =
        r.totals.shape.iter().map(|e| format!("{}x M_{}(F_{{q^{}}})", e.multiplicity, e.l, e.m)).collect();
    let _ = writeln!(out, "shape: {}", shape.join(" + "));
    for c in &r.components {
        let _ = write!(out, "  [{}] M_{}(F_{{q^{}}})  dim {}  from {} f{}", c.index, c.m, c.l, c.dimension, c.source.kind, c.source.factor);
        if let Some(p) = c.source.partner {
            let _ = write!(out, "/f{p}");
        }
        if let Some(sign) = c.source.sign {
            let _ = write!(out, " sign {sign}");
        }
        let _ = write!(out, "  via {}", c.construction);
        if let Some(case) = &c.case {
            let _ = write!(out, " ({case})");
        }
        let _ = writeln!(out, "\n      root {}  x -> {:?}  y -> {:?}", c.root, c.image_x, c.image_y);
    }
    out
}

fn coeffs_text(coeffs: &[CoeffInfo]) -> String {
    if coeffs.is_empty() {
        return "0".into();
    }
    let terms: Vec<String> = coeffs
        .iter()
        .map(|c| {
            let mut t = c.value.to_string();
            match c.power_of_x {
                0 => {}
                1 => t.push_str("*x"),
                k => {
                    let _ = write!(t, "*x^{k}");
                }
            }
            if c.has_y {
                t.push_str("*y");
            }
            t
        })
        .collect();
    terms.join(" + ")
}

pub fn idempotents(r: &IdempotentReport) -> String {
    let mut out = String::new();
    group_line(&mut out, &r.group);
    for e in &r.idempotents {
        let _ = write!(out, "{} {} component {}", e.label, e.kind, e.component);
        if let Some(p) = &e.parent {
            let _ = write!(out, " (in {p})");
        }
        let _ = writeln!(out, ": {}\n    = {}", e.description, coeffs_text(&e.coeffs));
    }
    for p in &r.noncentral {
        let _ = writeln!(
            out,
            "pair f{} component {}: {}, printed first {}, printed first idempotent {}, printed second {}",
            p.factor,
            p.component,
            p.case,
            flag(p.printed_first_matches),
            flag(p.printed_first_idempotent),
            flag(p.printed_second_matches)
        );
    }
    for u in &r.unavailable {
        let _ = writeln!(out, "pair f{} unavailable [{}]: {}", u.factor, u.code, u.message);
    }
    out
}

pub fn verify(r: &VerifyReport) -> String {
    let mut out = String::new();
    group_line(&mut out, &r.group);
    for c in &r.checks {
        let _ = write!(out, "  {:<30} {}", c.invariant, c.status);
        if c.literal {
            out.push_str(" (literal)");
        }
        if let Some(d) = &c.detail {
            let _ = write!(out, ": {d}");
        }
        out.push('\n');
    }
    let _ = writeln!(out, "{}", if r.passed { "PASS" } else { "FAIL" });
    out
}

pub fn battery(r: &BatteryReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} instances, seed {}", r.instances, r.seed);
    let _ = writeln!(out, "  {:<30} {:>6} {:>6} {:>6}", "invariant", "pass", "fail", "skip");
    for row in &r.rows {
        let _ = write!(out, "  {:<30} {:>6} {:>6} {:>6}", row.invariant, row.pass, row.fail, row.skip);
        if row.literal {
            out.push_str("  (literal, not gating)");
        }
        out.push('\n');
    }
    for f in &r.failures {
        let _ = writeln!(out, "FAIL {} {}: {}", f.group, f.invariant, f.detail);
    }
    let _ = writeln!(out, "{}", if r.passed { "PASS" } else { "FAIL" });
    out
}
