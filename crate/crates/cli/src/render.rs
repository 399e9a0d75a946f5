//! Text renderers: human-readable summaries, the DOT adjacency graph of the
//! chamber decomposition, and a plain-text ray/cone listing for
//! cross-checking fans against external toric software.

use std::collections::BTreeSet;
use std::fmt::Write;

use crate::report::{ChambersReport, ProjReport, RegradeReport, RelevanceReport};

fn ray_str(ray: &[String]) -> String {
    format!("({})", ray.join(","))
}

fn rays_str(rays: &[Vec<String>]) -> String {
    if rays.is_empty() {
        "{0}".to_string()
    } else {
        rays.iter().map(|r| ray_str(r)).collect::<Vec<_>>().join(" ")
    }
}

fn support_str(s: &[usize]) -> String {
    format!(
        "{{{}}}",
        s.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")
    )
}

pub fn relevance_text(r: &RelevanceReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "monomial exponents: [{}]", r.monomial.join(", "));
    let _ = writeln!(
        out,
        "degree: free ({}), torsion ({})",
        r.degree.free.join(","),
        r.degree.torsion.join(",")
    );
    let _ = writeln!(
        out,
        "cone: rays {} (dim {} of {})",
        rays_str(&r.cone.rays),
        r.cone.dim,
        r.free_rank
    );
    let _ = writeln!(out, "relevant: {}", r.relevant);
    out
}

pub fn proj_text(r: &ProjReport) -> String {
    let mut out = String::new();
    if r.status == "empty" {
        let _ = writeln!(out, "empty spectrum: no relevant element");
        return out;
    }
    let _ = writeln!(
        out,
        "{} charts, dimension {}",
        r.charts.len(),
        r.dimension.map_or("-".to_string(), |d| d.to_string())
    );
    for (i, c) in r.charts.iter().enumerate() {
        let _ = writeln!(
            out,
            "  chart {i}: support {} sigma {}",
            support_str(&c.support),
            rays_str(&c.sigma.rays)
        );
    }
    let _ = writeln!(out, "separated: {}", r.separated);
    if let Some(w) = &r.separation_witness {
        let _ = writeln!(
            out,
            "  witness: charts {} and {}",
            support_str(&w.supports[0]),
            support_str(&w.supports[1])
        );
    }
    if let Some(fc) = r.fan_complete {
        let _ = writeln!(out, "fan complete: {fc}");
    }
    if let Some(cliques) = &r.maximal_separated {
        let _ = writeln!(out, "maximal separated subcollections:");
        for c in cliques {
            let _ = writeln!(
                out,
                "  {}",
                c.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(" ")
            );
        }
    }
    out
}

pub fn chambers_text(r: &ChambersReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "degree cone: {} ({} chambers, {} walls)",
        rays_str(&r.degree_cone.rays),
        r.chambers.len(),
        r.walls.len()
    );
    for (i, c) in r.chambers.iter().enumerate() {
        let _ = writeln!(
            out,
            "  chamber {i}: rays {} sample ({}) model{} with {} maximal cones{}",
            rays_str(&c.cone.rays),
            c.sample_point.join(","),
            if c.summary.complete { " complete" } else { "" },
            c.summary.maximal_cones,
            if c.summary.contracted.is_empty() {
                String::new()
            } else {
                format!(", contracts {}", support_str(&c.summary.contracted))
            }
        );
    }
    for w in &r.walls {
        let _ = writeln!(
            out,
            "  wall between {} and {}: {}",
            w.chambers[0],
            w.chambers[1],
            rays_str(&w.cone.rays)
        );
    }
    if let Some(a) = r.embedding.ample_chamber {
        let _ = writeln!(out, "ample chamber: {a}");
    }
    let _ = writeln!(out, "model claims: {}", r.embedding.model_claims);
    out
}

pub fn regrade_text(r: &RegradeReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "regraded to free rank {} (torsion [{}])",
        r.target_group.free_rank,
        r.target_group.torsion.join(",")
    );
    let _ = writeln!(
        out,
        "relevant supports: {} before, {} after, {} gained",
        r.relevant_supports_before.len(),
        r.relevant_supports_after.len(),
        r.supports_gained.len()
    );
    for s in &r.supports_gained {
        let _ = writeln!(out, "  gained {}", support_str(s));
    }
    let _ = writeln!(out, "chart containment: {}", r.chart_containment_ok);
    let _ = writeln!(
        out,
        "dimension: {} -> {}",
        r.dimension_before.map_or("-".to_string(), |d| d.to_string()),
        r.dimension_after.map_or("-".to_string(), |d| d.to_string())
    );
    if let Some(refinement) = &r.chamber_refinement {
        let _ = writeln!(out, "chamber refinement:");
        for e in refinement {
            let _ = writeln!(
                out,
                "  regraded chamber {} covered by images of {:?}",
                e.chamber, e.covered_by
            );
        }
    }
    out
}

/// DOT graph of the chamber adjacency: one node per chamber, one edge per
/// wall, labeled with the wall rays.
pub fn chambers_dot(r: &ChambersReport) -> String {
    let mut out = String::new();
    out.push_str("graph chambers {\n");
    out.push_str("  node [shape=box];\n");
    for (i, c) in r.chambers.iter().enumerate() {
        let label = format!(
            "chamber {i}\\nrays {}\\n{} maximal cones{}",
            rays_str(&c.cone.rays),
            c.summary.maximal_cones,
            if c.summary.contracted.is_empty() {
                String::new()
            } else {
                format!("\\ncontracts {}", support_str(&c.summary.contracted))
            }
        );
        let _ = writeln!(out, "  c{i} [label=\"{label}\"];");
    }
    for w in &r.walls {
        let _ = writeln!(
            out,
            "  c{} -- c{} [label=\"{}\"];",
            w.chambers[0],
            w.chambers[1],
            rays_str(&w.cone.rays)
        );
    }
    out.push_str("}\n");
    out
}

/// Plain-text ray/cone listing of the chart fan: a deduplicated ray table
/// followed by one line of ray indices per chart.
pub fn proj_fan_text(r: &ProjReport) -> String {
    let mut rays: BTreeSet<Vec<String>> = BTreeSet::new();
    for c in &r.charts {
        for ray in &c.sigma.rays {
            rays.insert(ray.clone());
        }
    }
    let rays: Vec<Vec<String>> = rays.into_iter().collect();
    let index_of = |ray: &Vec<String>| rays.iter().position(|x| x == ray).unwrap();
    let mut out = String::new();
    out.push_str("# multiproj fan listing\n");
    out.push_str("AMBIENT_DIM\n");
    let ambient = r.m_basis.len();
    let _ = writeln!(out, "{ambient}");
    out.push_str("RAYS\n");
    for ray in &rays {
        let _ = writeln!(out, "{}", ray.join(" "));
    }
    out.push_str("CONES\n");
    for c in &r.charts {
        let mut idx: Vec<usize> = c.sigma.rays.iter().map(&index_of).collect();
        idx.sort();
        let _ = writeln!(
            out,
            "{{{}}}",
            idx.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(" ")
        );
    }
    out
}
