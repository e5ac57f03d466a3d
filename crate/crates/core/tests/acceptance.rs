//! One line per acceptance criterion. Statements that are false as printed
//! are reported as `FAIL (literal)` next to the corrected check; the run
//! exits nonzero only if a corrected check fails.

use std::collections::BTreeMap;
use std::process::ExitCode;

use metacyclic_core::battery::{check_instance, instances, summarize, BatteryConfig, InstanceReport, Invariant, Tally};
use metacyclic_core::ffield::int::{lifted_valuation, padic_valuation};
use metacyclic_core::idempotents::{central_idempotents, factor_index, noncentral_split};
use metacyclic_core::oracle::Oracle;
use metacyclic_core::wedderburn::{base_field, decompose};
use metacyclic_core::{GroupKind, GroupPresentation, Poly};

struct Line {
    criterion: u8,
    ok: bool,
    literal_ok: Option<bool>,
    text: String,
}

fn tally_text(name: &str, t: &Tally) -> String {
    format!("{name} {}/{}", t.pass, t.pass + t.fail)
}

fn main() -> ExitCode {
    let all = instances(&BatteryConfig::default());
    let triples: Vec<(u64, u64, u64)> = (0..64u64).map(|i| (i * 7 + 1, i * 13 + 5, i * 31 + 11)).collect();
    let reports: Vec<InstanceReport> = all.iter().map(|g| check_instance(g, &triples)).collect();
    let totals: BTreeMap<Invariant, Tally> = summarize(&reports).into_iter().collect();
    let clean = |inv: Invariant| totals[&inv].fail == 0;
    let t = |inv: Invariant| tally_text(inv.name(), &totals[&inv]);

    let mut lines = Vec::new();
    lines.push(Line {
        criterion: 1,
        ok: all.len() >= 150 && clean(Invariant::Dimension) && clean(Invariant::ComponentImages) && clean(Invariant::Associativity),
        literal_ok: None,
        text: format!("{} instances; {}; {}", all.len(), t(Invariant::Dimension), t(Invariant::ComponentImages)),
    });
    lines.push(Line {
        criterion: 2,
        ok: clean(Invariant::CenterDimension) && clean(Invariant::ComponentCount),
        literal_ok: Some(clean(Invariant::LiteralCenterCount)),
        text: format!(
            "{}; {}; {}",
            t(Invariant::CenterDimension),
            t(Invariant::ComponentCount),
            t(Invariant::LiteralCenterCount)
        ),
    });
    lines.push(Line {
        criterion: 3,
        ok: clean(Invariant::CentralIdempotents) && clean(Invariant::CyclicIdempotentForms),
        literal_ok: None,
        text: format!("{}; {}", t(Invariant::CentralIdempotents), t(Invariant::CyclicIdempotentForms)),
    });
    let nc = &totals[&Invariant::NonCentralPairs];
    lines.push(Line {
        criterion: 4,
        ok: clean(Invariant::NonCentralPairs) && nc.pass > 0,
        literal_ok: None,
        text: format!("{} instances with pairs, each pair reproduced by interpolation", tally_text("noncentral-pairs", nc)),
    });
    let (pinned_ok, q8_literal, pinned_text) = pinned();
    lines.push(Line { criterion: 5, ok: pinned_ok, literal_ok: Some(q8_literal), text: pinned_text });
    lines.push(Line {
        criterion: 6,
        ok: clean(Invariant::TowerIndex) && clean(Invariant::TwoAdicCharacterization),
        literal_ok: Some(clean(Invariant::LiteralTwoAdicLemma)),
        text: format!(
            "{}; {}; {}",
            t(Invariant::TowerIndex),
            t(Invariant::TwoAdicCharacterization),
            t(Invariant::LiteralTwoAdicLemma)
        ),
    });
    let (lel_ok, lel_text) = lifting_the_exponent();
    lines.push(Line { criterion: 7, ok: lel_ok, literal_ok: None, text: lel_text });
    lines.push(Line {
        criterion: 8,
        ok: clean(Invariant::PerlisWalker),
        literal_ok: None,
        text: format!("{}; {} (abelianization lemma as printed)", t(Invariant::PerlisWalker), t(Invariant::LiteralAbelianLemma)),
    });
    lines.push(Line {
        criterion: 9,
        ok: clean(Invariant::SelfInvolutiveCriterion),
        literal_ok: Some(clean(Invariant::LiteralCriterionAllFactors)),
        text: format!(
            "{} (factors coprime to x^d-1); {}",
            t(Invariant::SelfInvolutiveCriterion),
            t(Invariant::LiteralCriterionAllFactors)
        ),
    });

    for l in &lines {
        let status = match (l.ok, l.literal_ok) {
            (false, _) => "FAIL",
            (true, Some(false)) => "FAIL (literal)",
            _ => "PASS",
        };
        println!("criterion {}: {status} | {}", l.criterion, l.text);
    }
    for r in &reports {
        for (inv, why) in r.failures() {
            println!("  {} {}: {why}", r.group, inv.name());
        }
    }
    if lines.iter().all(|l| l.ok) {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

/// F₃D₈ and F₃Q₈. Returns (corrected checks pass, Q₈ as printed holds, text).
fn pinned() -> (bool, bool, String) {
    let f3 = base_field(3).unwrap();
    let d8 = GroupPresentation::new(GroupKind::Split, 4, 3, 3).unwrap();
    let dec = decompose(&d8).unwrap();
    let o = Oracle::new(&d8, &f3);
    let central = central_idempotents(&o, &dec).unwrap().central_elements();
    let x2m1 = o.from_pq(&Poly::from_ints(&f3, &[-1, 0, 1]), &Poly::zero(&f3));
    let pair = noncentral_split(&o, &dec, factor_index(&dec, &Poly::from_ints(&f3, &[1, 0, 1])).unwrap()).unwrap();
    let two_minus_y = o.sub(&o.scale(&f3.from_int(2), &o.one()), &o.basis(0, 1)).unwrap();
    let d8_ok = dec.shape().into_iter().collect::<Vec<_>>() == [((1, 1), 4), ((2, 1), 1)]
        && central.len() == 5
        && central.contains(&x2m1)
        && pair.first == o.multiply(&x2m1, &two_minus_y).unwrap();

    let q8 = GroupPresentation::new(GroupKind::NonSplit, 2, 3, 3).unwrap();
    let dec = decompose(&q8).unwrap();
    let o = Oracle::new(&q8, &f3);
    let shape: Vec<_> = dec.shape().into_iter().collect();
    let central = central_idempotents(&o, &dec).unwrap().central_elements();
    let q8_literal = shape == [((1, 1), 2), ((1, 2), 1), ((2, 1), 1)] && central.len() == 4;
    // the oracle decides what is correct for Q₈
    let q8_ok = central.len() == o.frobenius_fixed_dimension()
        && o.center_basis().len() == dec.center_dimension()
        && o.sums_to_one(&central)
        && o.are_orthogonal(&central);
    (
        d8_ok && q8_ok,
        q8_literal,
        format!(
            "F3D8 shape and idempotents {}; F3Q8 shape {:?} with {} central idempotents (oracle agrees: {q8_ok}), printed (1,1)x2+(1,2)+(2,1) with 4",
            if d8_ok { "match" } else { "differ" },
            shape,
            central.len()
        ),
    )
}

fn lifting_the_exponent() -> (bool, String) {
    let (mut checked, mut bad) = (0, Vec::new());
    for p in [2u64, 3, 5, 7] {
        for a in 2..=20i128 {
            for k in 1..=10u64 {
                let Some(predicted) = lifted_valuation(p, a, k) else { continue };
                checked += 1;
                let actual = padic_valuation(p, a.pow(k as u32) - 1).unwrap();
                if actual != predicted {
                    bad.push(format!("p={p} a={a} k={k}"));
                }
            }
        }
    }
    (checked > 0 && bad.is_empty(), format!("{checked} cases under the hypotheses, {} mismatches {bad:?}", bad.len()))
}
