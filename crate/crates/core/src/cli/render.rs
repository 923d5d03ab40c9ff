//! Plain-text rendering of reports.

use std::fmt::Write;

use crate::report::Report;
use crate::unexpected::{Certification, Region};

pub fn render(r: &Report) -> String {
    let mut s = String::new();
    if let Some(info) = &r.scheme {
        let _ = writeln!(s, "scheme: {} ({} variables, field {})", info.source, info.nvars, r.field_mode);
    }
    for n in &r.notices {
        let _ = writeln!(s, "note: {n}");
    }
    if let Some(h) = &r.hilbert {
        let _ = writeln!(s, "{:>4}  h(t)", "t");
        for (k, v) in h.values.iter().enumerate() {
            let _ = writeln!(s, "{:>4}  {v}", h.offset + k);
        }
        if let Some(d) = h.stable_from {
            let _ = writeln!(s, "constant from t = {d}");
        }
    }
    if let Some(g) = &r.gin {
        let _ = writeln!(s, "gin through degree {}:", g.degree_cap);
        let _ = writeln!(s, "  ({})", g.generators.join(", "));
        let _ = writeln!(s, "strongly stable: {}", g.borel_certified);
        let _ = writeln!(s, "lex segment through the cap: {}", g.lex_segment_through_cap);
    }
    if let Some(av) = &r.av {
        let _ = writeln!(s, "AV_{{X,{}}}(m) by route {}", av.j, av.route);
        let _ = writeln!(s, "{:>4}  value", "m");
        for (k, v) in av.values.iter().enumerate() {
            let _ = writeln!(s, "{:>4}  {v}", k + 1);
        }
        let _ = writeln!(s, "tail: {:?}{}", av.tail, if av.tail_certified { "" } else { " (read off the window)" });
        let _ = writeln!(s, "positive part: {:?}", av.positive_part);
        let _ = writeln!(s, "O-sequence after shifting: {}", av.o_seq);
        let si = match av.si.verdict {
            Some(true) => "yes".to_string(),
            Some(false) => format!("no ({})", av.si.reason),
            None => format!("undetermined ({})", av.si.reason),
        };
        let _ = writeln!(s, "SI-sequence: {si}");
    }
    for t in &r.triples {
        let _ = writeln!(
            s,
            "t = {}, m = {}: adim {}, vdim {}, edim {} -> {:?}{}",
            t.t,
            t.m,
            t.adim,
            t.vdim,
            t.edim,
            t.verdict,
            if t.trials_agreed { "" } else { " (trials disagreed, minimum taken)" }
        );
        if let Some(h) = &t.witness_hint {
            let _ = writeln!(s, "  {h}");
        }
    }
    if let Some(tab) = &r.table {
        let _ = writeln!(s, "persistence table, alpha = {} (regions I, II, III)", tab.alpha);
        let _ = write!(s, "{:>4}", "t\\m");
        for m in 1..=tab.m_max {
            let _ = write!(s, "{m:>7}");
        }
        let _ = writeln!(s);
        for t in 1..=tab.t_max {
            let _ = write!(s, "{t:>4}");
            for m in 1..=tab.m_max {
                match tab.get(t, m) {
                    Some(c) => {
                        let reg = match c.region {
                            Region::I => "I",
                            Region::II => "II",
                            Region::III => "III",
                        };
                        let _ = write!(s, "{:>7}", format!("{}:{reg}", c.value));
                    }
                    None => {
                        let _ = write!(s, "{:>7}", ".");
                    }
                }
            }
            let _ = writeln!(s);
        }
        let _ = writeln!(s, "nonzero cells: {:?}", tab.nonzero());
    }
    for c in &r.certificates {
        match c {
            Certification::Certificate { alpha, .. } => {
                let _ = writeln!(s, "certificate: AV_{{X,0}}({alpha}) = 0, no unexpected hypersurface of any degree");
            }
            Certification::Refusal { alpha, av, .. } => {
                let _ = writeln!(s, "no certificate: AV_{{X,0}}({alpha}) = {av}");
            }
        }
    }
    if let Some(w) = &r.witness {
        let _ = writeln!(s, "CI({}, {}) in P^{}, j = {}: degree t = {}, multiplicity m = {}", w.a, w.b, w.nvars - 1, w.j, w.t, w.m);
        let _ = writeln!(s, "vdim(t, m) = {}", w.vdim);
        let _ = writeln!(s, "F = {}", w.f);
        let _ = writeln!(s, "G = {}", w.g);
        let _ = writeln!(s, "det M = {}", w.matrix_det);
        let _ = writeln!(s, "T = {}", w.witness_form);
    }
    for f in &r.fixtures {
        let _ = writeln!(s, "{} {}", if f.passed { "PASS" } else { "FAIL" }, f.fixture);
        for c in &f.checks {
            let _ = writeln!(s, "    [{}] {}: {}", if c.passed { "ok" } else { "MISMATCH" }, c.check, c.detail);
        }
        if let Some(e) = &f.error {
            let _ = writeln!(s, "    error: {e}");
        }
    }
    if !r.seeds.is_empty() {
        let _ = writeln!(s, "seeds: {:?}", r.seeds);
    }
    s
}
