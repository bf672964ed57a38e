//! Plain-text renderings. Elements print as comma-separated words with `e`
//! for the identity; roots print as bracketed coordinate vectors.

use std::fmt::Write as _;

use schubert_core::report::{ElementJson, IntervalJson, RootsJson, SmoothnessJson, TangentBoundsJson, TranslateJson};
use schubert_core::sweep::SweepReport;

use crate::commands::{PointVerdictJson, RationalJson};

pub fn word(w: &[usize]) -> String {
    if w.is_empty() {
        "e".to_string()
    } else {
        w.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
    }
}

pub fn root(c: &[i32]) -> String {
    format!("[{}]", c.iter().map(i32::to_string).collect::<Vec<_>>().join(","))
}

fn roots_list(v: &[Vec<i32>]) -> String {
    v.iter().map(|c| root(c)).collect::<Vec<_>>().join(" ")
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn roots(r: &RootsJson) -> String {
    let mut s = format!("type {}  rank {}  roots {}\n", r.type_name, r.rank, r.count);
    for row in &r.cartan_matrix {
        let _ = writeln!(s, "  {}", row.iter().map(|x| format!("{x:>3}")).collect::<String>());
    }
    let _ = writeln!(s, "{:<20} {:>6} {:>8} {:>5}", "root", "height", "positive", "long");
    for e in &r.roots {
        let _ = writeln!(s, "{:<20} {:>6} {:>8} {:>5}", root(&e.coords), e.height, yes_no(e.positive), yes_no(e.long));
    }
    s
}

pub fn element(e: &ElementJson) -> String {
    let mut s = format!("type {}  word {}  length {}\n", e.type_name, word(&e.word), e.length);
    let _ = writeln!(s, "inverse {}", word(&e.inverse));
    for (i, img) in e.simple_images.iter().enumerate() {
        let _ = writeln!(s, "w(alpha_{}) = {}", i + 1, root(img));
    }
    if let Some(p) = &e.one_line {
        let _ = writeln!(s, "one-line {}", p.iter().map(usize::to_string).collect::<Vec<_>>().join(" "));
    }
    s
}

pub fn interval(iv: &IntervalJson) -> String {
    let mut s = format!("type {}  [e, {}]  size {}\n", iv.type_name, word(&iv.word), iv.size);
    let _ = writeln!(s, "rank table {:?}", iv.rank_table);
    for (i, e) in iv.elements.iter().enumerate() {
        let below: Vec<String> = e.covers.iter().map(|&j| word(&iv.elements[j].word)).collect();
        let _ = writeln!(s, "{i:>5}  {:<24} covers {}", word(&e.word), below.join(" "));
    }
    s
}

pub fn weights(v: &[Vec<i32>]) -> String {
    let mut s = String::new();
    for c in v {
        let _ = writeln!(s, "{}", root(c));
    }
    s
}

pub fn bounds(b: &TangentBoundsJson) -> String {
    format!(
        "x {}\nlower {}\nupper {}\nexact {}\n",
        word(&b.x),
        roots_list(&b.lower),
        roots_list(&b.upper),
        yes_no(b.exact)
    )
}

pub fn translate(t: &TranslateJson) -> String {
    format!(
        "x {}  y {}  curve {}\ntau {}\nequals TE {}\n",
        word(&t.x),
        word(&t.y),
        root(&t.curve_root),
        roots_list(&t.tau),
        yes_no(t.equals_te)
    )
}

pub fn point_verdict(p: &PointVerdictJson) -> String {
    let mut s = format!("type {}  w {}", p.type_name, word(&p.word));
    if let Some(j) = &p.parabolic {
        let _ = write!(s, "  J {{{}}}", j.iter().map(usize::to_string).collect::<Vec<_>>().join(","));
    }
    let _ = writeln!(s, "\n{:<24} {}", word(&p.at), verdict_str(p.verdict));
    if let Some(v) = &p.verification {
        let _ = writeln!(s, "note: {v}");
    }
    s
}

fn verdict_str(v: schubert_core::Verdict) -> &'static str {
    match v {
        schubert_core::Verdict::Smooth => "smooth",
        schubert_core::Verdict::Singular => "singular",
    }
}

pub fn smoothness(r: &SmoothnessJson) -> String {
    let mut s = format!("type {}  w {}  dim {}\n", r.type_name, word(&r.word), r.dim);
    let _ = writeln!(s, "{:<24} {:>6}  verdict", "element", "length");
    for v in &r.verdicts {
        let _ = writeln!(s, "{:<24} {:>6}  {}", word(&v.element), v.length, verdict_str(v.verdict));
    }
    let maxs: Vec<String> = r.max_singular.iter().map(|m| word(m)).collect();
    let _ = writeln!(s, "max_singular {}", if maxs.is_empty() { "-".to_string() } else { maxs.join(" ") });
    let _ = writeln!(s, "poincare {:?}", r.poincare);
    let _ = writeln!(s, "rationally smooth {}", yes_no(r.rationally_smooth));
    if let Some(v) = &r.verification {
        let _ = writeln!(s, "note: {v}");
    }
    s
}

pub fn rational(r: &RationalJson) -> String {
    let mut s = format!("type {}  w {}", r.type_name, word(&r.word));
    if let Some(at) = &r.at {
        let _ = write!(s, "  at {}", word(at));
    }
    let _ = writeln!(s, "\nrationally smooth {}", yes_no(r.rationally_smooth));
    if let Some(p) = &r.poincare {
        let _ = writeln!(s, "poincare {p:?}");
    }
    s
}

pub fn sweep(r: &SweepReport) -> String {
    let mut s = format!("type {}\n", r.type_name);
    let _ = writeln!(s, "{:<32} {:>6} {:>8} {:>12} {:>10}", "word", "length", "smooth", "max_singular", "palindrome");
    for e in &r.entries {
        let _ = writeln!(
            s,
            "{:<32} {:>6} {:>8} {:>12} {:>10}",
            word(&e.word),
            e.length,
            yes_no(e.smooth),
            e.max_singular,
            yes_no(e.poincare_symmetric)
        );
    }
    let _ = writeln!(
        s,
        "total {}  smooth {}  singular {}  palindromic {}",
        r.count, r.smooth, r.singular, r.poincare_symmetric
    );
    s
}
