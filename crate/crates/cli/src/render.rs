//! Plain-text rendering of engine output.

use std::fmt::Write as _;

use isob_core::charclass::{ChernPolynomial, FlatKernelDescription, Polynomial};
use isob_core::num::fmt_q;
use isob_core::obstruction::{CandidateRecord, Evidence, ObstructionReport};
use isob_core::rootsys::RootSystemDescription;
use isob_core::sympair::PairDescription;
use isob_core::verify::VerifySummary;
use isob_core::WeightMultiset;
use num_bigint::BigUint;

use crate::Audit;

pub(crate) fn with_notes(mut head: String, notes: &[String]) -> String {
    for n in notes {
        let _ = write!(head, "\nnote: {n}");
    }
    head
}

pub(crate) fn root_system(d: &RootSystemDescription) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "type: {} ({})", d.simple_type, d.algebra);
    let _ = writeln!(s, "rank: {}, ambient dimension: {}", d.rank, d.ambient_dim);
    let _ = writeln!(s, "dim g: {}", d.algebra_dim);
    let _ = writeln!(s, "|W|: {}", d.weyl_group_order);
    let _ = writeln!(s, "positive roots: {}", d.positive_root_count);
    let _ = writeln!(s, "cartan matrix:");
    for row in &d.cartan_matrix {
        let cells: Vec<String> = row.iter().map(|x| format!("{x:>3}")).collect();
        let _ = writeln!(s, " {}", cells.join(""));
    }
    for (i, a) in d.simple_roots.iter().enumerate() {
        let _ = writeln!(s, "alpha_{} = {a}", i + 1);
    }
    for (i, w) in d.fundamental_weights.iter().enumerate() {
        let _ = writeln!(s, "omega_{} = {w}", i + 1);
    }
    let _ = writeln!(s, "rho = {}", d.weyl_vector);
    s
}

pub(crate) fn multiset(m: &WeightMultiset) -> String {
    let mut s = String::new();
    for (w, k) in m.iter().collect::<Vec<_>>().into_iter().rev() {
        let _ = writeln!(s, "{w} x{k}");
    }
    let _ = writeln!(s, "total: {}", m.total());
    s
}

pub(crate) fn pair(d: &PairDescription) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "pair: {} ({} in {})", d.pair, d.k, d.g);
    let _ = writeln!(s, "dim g = {}, dim k = {}, dim p = {}", d.dim_g, d.dim_k, d.dim_p);
    if let Some(m) = &d.restriction {
        let _ = writeln!(s, "restriction:");
        for row in m {
            let _ = writeln!(s, "  [{}]", row.join(", "));
        }
    }
    if let Some(h) = &d.isotropy_highest {
        let _ = writeln!(s, "isotropy highest weight: {h}");
    }
    if let Some(w) = &d.isotropy_weights {
        let _ = writeln!(s, "isotropy weights:");
        for (x, k) in w.iter().collect::<Vec<_>>().into_iter().rev() {
            let _ = writeln!(s, "  {x} x{k}");
        }
    }
    for n in &d.notes {
        let _ = writeln!(s, "note: {n}");
    }
    s
}

fn candidate(c: &CandidateRecord) -> String {
    let status = if c.eliminated { "eliminated" } else { "SURVIVES" };
    let who = match &c.family_direction {
        Some(d) => format!("V{} + c V{d}", c.weight),
        None => format!("V{}", c.weight),
    };
    let cmp = |v: &BigUint, p: &BigUint| if v == p { "=" } else if v > p { ">" } else { "<" };
    match &c.evidence {
        Evidence::Exact { value, dim_p } => format!("{who}: dim {value} {} dim p = {dim_p}, {status}", cmp(value, dim_p)),
        Evidence::LowerBound { value, dim_p, valid_from, orbits } => {
            let sizes: Vec<String> = orbits.iter().map(|o| o.size.to_string()).collect();
            format!(
                "{who}, c >= {valid_from}: dim >= {} = {value} {} dim p = {dim_p}, {status}",
                sizes.join(" + "),
                cmp(value, dim_p)
            )
        }
        Evidence::Gap { value, dim_p } => {
            format!("smallest nontrivial {who}: dim {value} {} dim p = {dim_p}, {status}", cmp(value, dim_p))
        }
        Evidence::WeightExcluded { value, .. } => {
            format!("{who} (dim {value}): restricted weights not among the isotropy weights, {status}")
        }
        Evidence::WeightMatch { value, components, matches, .. } => {
            let parts: Vec<String> = components.iter().map(|w| format!("V{w}")).collect();
            format!(
                "{} (dim {value}): restricted weights {}, {status}",
                parts.join(" + "),
                if *matches { "match" } else { "differ" }
            )
        }
    }
}

pub(crate) fn report(r: &ObstructionReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "pair: {}", r.pair);
    let _ = writeln!(s, "verdict: {}", r.verdict);
    let _ = writeln!(s, "method: {}", r.method);
    let _ = writeln!(s, "dim p: {}", r.dim_p);
    if !r.constraints_log.is_empty() {
        let _ = writeln!(s, "derivation:");
        for line in &r.constraints_log {
            let _ = writeln!(s, "  {line}");
        }
    }
    if !r.candidates.is_empty() {
        let _ = writeln!(s, "candidates:");
        for c in &r.candidates {
            let _ = writeln!(s, "  {}", candidate(c));
        }
    }
    if let Some(cx) = &r.complex {
        let _ = writeln!(s, "d = dim V{} = {}, d^2 = {}, dim g = {}", cx.witness, cx.d, cx.d_squared, cx.dim_g);
        let inv: Vec<String> = cx.involution.iter().map(|i| i.to_string()).collect();
        let _ = writeln!(s, "weyl involution on fundamental weights: [{}]", inv.join(", "));
        let _ = writeln!(s, "{}", cx.rationale);
    }
    for n in &r.notes {
        let _ = writeln!(s, "note: {n}");
    }
    s
}

pub(crate) fn audit(a: &Audit) -> String {
    let mut s = format!("audit: {}\n", if a.passed { "passed" } else { "FAILED" });
    let _ = writeln!(s, "  certificate replayed: {}", a.replayed);
    if let Some(n) = a.searched {
        let _ = writeln!(s, "  brute-force candidates with |a_i| <= {}: {n}", a.bound);
    }
    for w in &a.uncovered {
        let _ = writeln!(s, "  not covered by a derived family: {w}");
    }
    if let Some(note) = &a.note {
        let _ = writeln!(s, "  {note}");
    }
    s
}

/// `-w1^2 + 2 w1 w2`, highest degree first.
pub(crate) fn polynomial(p: &Polynomial) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (m, c)) in p.terms().collect::<Vec<_>>().into_iter().rev().enumerate() {
        let vars: Vec<String> = m
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(j, &e)| if e == 1 { format!("w{}", j + 1) } else { format!("w{}^{e}", j + 1) })
            .collect();
        let neg = c < &isob_core::num::q(0);
        let abs = if neg { -c.clone() } else { c.clone() };
        let coef = fmt_q(&abs);
        let body = match (vars.is_empty(), coef.as_str()) {
            (true, _) => coef,
            (false, "1") => vars.join(" "),
            (false, _) => format!("{coef} {}", vars.join(" ")),
        };
        match (i, neg) {
            (0, true) => out.push_str(&format!("-{body}")),
            (0, false) => out.push_str(&body),
            (_, true) => out.push_str(&format!(" - {body}")),
            (_, false) => out.push_str(&format!(" + {body}")),
        }
    }
    out
}

pub(crate) fn chern(c: &ChernPolynomial) -> String {
    let mut s = String::new();
    for (d, p) in c.pieces().iter().enumerate() {
        let _ = writeln!(s, "c{d} = {}", polynomial(p));
    }
    s
}

pub(crate) fn flat_kernel(k: &FlatKernelDescription) -> String {
    let mut s = format!("flat SO({}) bundles: kernel generated by\n", k.n);
    for g in &k.kernel_generators {
        let _ = writeln!(s, "  {} (degree {}) = {}", g.name, g.degree, polynomial(&g.polynomial));
    }
    match &k.euler {
        Some(e) => {
            let _ = writeln!(
                s,
                "euler class e (degree {}): in kernel {}; e^2 = p{} {}; e^2 in kernel {}",
                e.degree,
                e.in_kernel,
                k.n / 2,
                if e.square_equals_top_pontryagin { "holds" } else { "FAILS" },
                e.square_in_kernel
            );
        }
        None => {
            let _ = writeln!(s, "no euler class (n odd)");
        }
    }
    let _ = writeln!(s, "odd chern classes of the complexification vanish: {}", k.odd_chern_vanish);
    s
}

pub(crate) fn summary(v: &VerifySummary) -> String {
    let mut s = String::new();
    let width = v.items.iter().map(|i| i.name.len()).max().unwrap_or(0);
    for item in &v.items {
        let _ = writeln!(
            s,
            "{}  {:<width$}  {}",
            if item.passed { "PASS" } else { "FAIL" },
            item.name,
            item.detail
        );
        for n in &item.notes {
            let _ = writeln!(s, "      note: {n}");
        }
    }
    let failed = v.items.iter().filter(|i| !i.passed).count();
    let _ = writeln!(s, "{} checks, {} passed, {failed} failed", v.items.len(), v.items.len() - failed);
    s
}
