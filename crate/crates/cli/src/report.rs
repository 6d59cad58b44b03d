//! Output helpers: every subcommand emits either one JSON document or a
//! text report carrying the same numbers.

use kneser_extremal::search::SearchCertificate;
use kneser_extremal::Family;

pub fn emit(json: bool, value: &impl serde::Serialize, text: impl FnOnce() -> String) {
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(value).expect("report serializes")
        );
    } else {
        println!("{}", text());
    }
}

pub fn family_inline(family: &Family) -> String {
    let members: Vec<String> = family
        .members()
        .iter()
        .map(|m| m.to_string())
        .collect();
    members.join(" ")
}

pub fn certificate_text(cert: &SearchCertificate) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "pattern {} on {}: optimum {}\n",
        cert.pattern,
        cert.params,
        cert.optimum
    ));
    out.push_str(&format!("witness: {}\n", family_inline(&cert.witness)));
    if let Some(count) = cert.extrema_count {
        out.push_str(&format!(
            "optima: {count}{}\n",
            if cert.extrema_truncated {
                " (list truncated)"
            } else {
                ""
            }
        ));
    }
    out.push_str(&format!(
        "nodes explored: {} ({})",
        cert.nodes_explored,
        match cert.mode {
            kneser_extremal::search::SearchMode::BranchAndBound => "branch and bound",
            kneser_extremal::search::SearchMode::ExhaustiveOracle => "exhaustive oracle",
        }
    ));
    out
}
