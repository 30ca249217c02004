//! Markdown rendering of a batch of certificates, one section per family.

use super::certificate::Certificate;
use std::collections::BTreeMap;
use std::fmt::Write;

pub fn markdown_report(certs: &[Certificate]) -> String {
    let mut by_family: BTreeMap<String, Vec<&Certificate>> = BTreeMap::new();
    for c in certs {
        let key = match c.params.n {
            Some(n) => format!("{} (n = {n})", c.family),
            None => c.family.clone(),
        };
        by_family.entry(key).or_default().push(c);
    }
    let mut out = String::from("# Codegree verification report\n");
    for (fam, list) in by_family {
        let _ = writeln!(out, "\n## {fam}\n");
        let _ = writeln!(out, "| group | order | verdict |\n|---|---|---|");
        for c in &list {
            let _ = writeln!(out, "| {} | {} | {:?} |", c.name, c.order_factorization, c.verdict);
        }
        let _ = writeln!(out, "\n### Step 1\n");
        for c in &list {
            if c.step1.is_empty() {
                let _ = writeln!(out, "- {}: trivial multiplier", c.name);
            }
            for s in &c.step1 {
                let _ = writeln!(
                    out,
                    "- {}, r = {}: {:?} ({:?}), witness {}; {}",
                    c.name,
                    s.r,
                    s.verdict,
                    s.mode,
                    s.witness.as_deref().unwrap_or("none"),
                    s.detail
                );
            }
        }
        let _ = writeln!(out, "\n### Step 2\n");
        let _ = writeln!(out, "| group | r | j | e | log_r |H|_r | verdict |\n|---|---|---|---|---|---|");
        for c in &list {
            for s in &c.step2 {
                let _ = writeln!(
                    out,
                    "| {} | {} | {} | {} | {} | {:?} |",
                    c.name, s.r, s.j, s.e, s.sylow_exponent, s.verdict
                );
            }
        }
        let _ = writeln!(out, "\n### Step 3\n");
        for c in &list {
            let s = &c.step3;
            let _ = writeln!(
                out,
                "- {}: 2·{}·{} = {} vs {} ({:?}){}",
                c.name,
                s.d,
                s.f,
                s.lhs,
                s.rhs,
                s.verdict,
                s.residual.as_deref().map(|r| format!("; {r}")).unwrap_or_default()
            );
        }
        let _ = writeln!(out, "\n### Step 4\n");
        let mut any = false;
        for c in &list {
            if let Some(s) = &c.step4 {
                any = true;
                let _ = writeln!(out, "- {}: {} ({:?})", c.name, s.note, s.verdict);
            }
        }
        if !any {
            let _ = writeln!(out, "- not needed");
        }
    }
    out
}
