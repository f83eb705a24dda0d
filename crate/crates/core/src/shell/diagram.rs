//! ASCII and TeX renderings of the Dynkin diagram decorated with the
//! spherical data.

use std::fmt::Write as _;

use crate::cartan::GeneralizedCartanMatrix;
use crate::datum::HomogeneousSphericalDatum;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiagramFormat {
    Ascii,
    Tex,
}

impl std::str::FromStr for DiagramFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "ascii" => Ok(DiagramFormat::Ascii),
            "tex" => Ok(DiagramFormat::Tex),
            other => Err(format!("unknown diagram format {other:?}, expected ascii or tex")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramRendering {
    pub text: String,
}

struct Decorations {
    types: Vec<String>,
    sigma: Vec<String>,
    shared: Vec<(String, Vec<String>)>,
}

fn decorations(d: &HomogeneousSphericalDatum) -> Decorations {
    let n = d.simple_count();
    let types = match d.type_partition() {
        Ok(p) => (0..n).map(|i| p.type_of(i).to_string()).collect(),
        Err(_) => vec!["?".to_string(); n],
    };
    let sigma = (0..d.sigma().len()).map(|k| d.describe_sigma(k)).collect();
    let shared = d
        .derive_colors()
        .map(|cs| {
            cs.into_iter()
                .filter(|c| c.movers.len() > 1)
                .map(|c| (c.id, c.movers.iter().map(|i| d.label(i).to_string()).collect()))
                .collect()
        })
        .unwrap_or_default();
    Decorations { types, sigma, shared }
}

fn edge_glyph(g: &GeneralizedCartanMatrix, i: usize, j: usize, width: usize) -> String {
    let (aij, aji) = (g.entry(i, j).abs(), g.entry(j, i).abs());
    if aij == 0 {
        return " ".repeat(width);
    }
    let mid = match aij * aji {
        1 => '-',
        2 => '=',
        _ => '#',
    };
    let mut chars = vec![mid; width];
    if aij > 1 {
        chars[0] = '<';
    }
    if aji > 1 {
        chars[width - 1] = '>';
    }
    chars.into_iter().collect()
}

fn pad(s: &str, width: usize) -> String {
    format!("{s:<width$}")
}

fn ascii(d: &HomogeneousSphericalDatum) -> String {
    let g = d.space().gcm();
    let n = g.rank();
    let dec = decorations(d);
    let cell = g.labels().iter().map(String::len).chain(dec.types.iter().map(String::len)).max().unwrap_or(1).max(3) + 1;

    let mut top = String::new();
    let mut nodes = String::new();
    let mut bottom = String::new();
    for i in 0..n {
        top.push_str(&pad(&dec.types[i], cell));
        nodes.push('o');
        if i + 1 < n {
            nodes.push_str(&edge_glyph(g, i, i + 1, cell - 1));
        }
        bottom.push_str(&pad(g.label(i), cell));
    }
    let mut out = String::new();
    for line in [top, nodes, bottom] {
        out.push_str(line.trim_end());
        out.push('\n');
    }
    for i in 0..n {
        for j in i + 2..n {
            if g.adjacent(i, j) {
                let _ = writeln!(
                    out,
                    "edge {} -- {}: a[{}][{}] = {}, a[{}][{}] = {}",
                    g.label(i),
                    g.label(j),
                    g.label(i),
                    g.label(j),
                    g.entry(i, j),
                    g.label(j),
                    g.label(i),
                    g.entry(j, i)
                );
            }
        }
    }
    let _ = writeln!(out, "Sp: {{{}}}", g.subset_labels(d.sp()).join(", "));
    let _ = writeln!(out, "Sigma: {{{}}}", dec.sigma.join(", "));
    for (id, movers) in &dec.shared {
        let _ = writeln!(out, "shared color {id}: {}", movers.join(", "));
    }
    out
}

fn tex_label(label: &str) -> String {
    match label.strip_prefix('a') {
        Some(rest) if !rest.is_empty() && rest.chars().all(|c| c.is_ascii_digit()) => {
            format!("$\\alpha_{{{rest}}}$")
        }
        _ => format!("\\texttt{{{}}}", label.replace('_', "\\_")),
    }
}

fn tex_text(s: &str) -> String {
    s.replace('_', "\\_").replace('{', "\\{").replace('}', "\\}")
}

fn tex(d: &HomogeneousSphericalDatum) -> String {
    let g = d.space().gcm();
    let n = g.rank();
    let dec = decorations(d);
    let step = 12;
    let width = step * n.max(1);
    let extra: Vec<String> = {
        let mut v = Vec::new();
        for i in 0..n {
            for j in i + 2..n {
                if g.adjacent(i, j) {
                    v.push(format!("edge {} -- {}", g.label(i), g.label(j)));
                }
            }
        }
        v.push(format!("Sigma: {}", dec.sigma.join(", ")));
        for (id, movers) in &dec.shared {
            v.push(format!("shared color {id}: {}", movers.join(", ")));
        }
        v
    };
    let height = 20 + 5 * extra.len();

    let mut out = String::new();
    out.push_str("\\documentclass{standalone}\n\\begin{document}\n\\setlength{\\unitlength}{1mm}\n");
    let _ = writeln!(out, "\\begin{{picture}}({width},{height})(0,-{})", 5 * extra.len());
    for i in 0..n {
        let x = step * i + step / 2;
        let _ = writeln!(out, "\\put({x},10){{\\circle{{2}}}}");
        let _ = writeln!(out, "\\put({x},15){{\\makebox(0,0){{{}}}}}", tex_text(&dec.types[i]));
        let _ = writeln!(out, "\\put({x},5){{\\makebox(0,0){{{}}}}}", tex_label(g.label(i)));
        if i + 1 < n && g.adjacent(i, i + 1) {
            let (aij, aji) = (g.entry(i, i + 1).abs(), g.entry(i + 1, i).abs());
            let lines = (aij * aji).min(3);
            let offsets: &[f64] = match lines {
                1 => &[0.0],
                2 => &[-0.5, 0.5],
                _ => &[-0.6, 0.0, 0.6],
            };
            for off in offsets {
                let _ = writeln!(out, "\\put({},{}){{\\line(1,0){{{}}}}}", x + 1, 10.0 + off, step - 2);
            }
            let mid = x + step / 2;
            if aij > 1 {
                let _ = writeln!(out, "\\put({},10){{\\makebox(0,0){{$<$}}}}", mid - 2);
            }
            if aji > 1 {
                let _ = writeln!(out, "\\put({},10){{\\makebox(0,0){{$>$}}}}", mid + 2);
            }
        }
    }
    for (k, line) in extra.iter().enumerate() {
        let y = -(5 * k as i64);
        let _ = writeln!(out, "\\put(0,{y}){{\\makebox(0,0)[l]{{{}}}}}", tex_text(line));
    }
    out.push_str("\\end{picture}\n\\end{document}\n");
    out
}

pub fn emit_diagram(d: &HomogeneousSphericalDatum, format: DiagramFormat) -> DiagramRendering {
    let text = match format {
        DiagramFormat::Ascii => ascii(d),
        DiagramFormat::Tex => tex(d),
    };
    DiagramRendering { text }
}
