//! The diagram DSL.
//!
//! ```text
//! # comment
//! verts 3
//! edge 1 2 3
//! edge 2 3 inf
//! ```
//!
//! Vertices are 1-based; unlisted pairs default to label 2 (commuting), and
//! labels are integers >= 2 or `inf`.

use super::{CoxeterMatrix, DiagramError, Label};

pub fn parse_diagram(text: &str) -> Result<CoxeterMatrix, DiagramError> {
    let mut n: Option<usize> = None;
    let mut edges: Vec<(usize, usize, Label, usize)> = Vec::new(); // + line no
    for (lidx, raw) in text.lines().enumerate() {
        let line_no = lidx + 1;
        let code = raw.split('#').next().unwrap_or("");
        if code.trim().is_empty() {
            continue;
        }
        let mut toks = tokens(code);
        let (head, col) = toks.next().unwrap();
        match head {
            "verts" => {
                if n.is_some() {
                    return Err(syntax(line_no, col, "duplicate `verts` line"));
                }
                let (tok, c) = toks
                    .next()
                    .ok_or_else(|| syntax(line_no, col, "missing vertex count"))?;
                let v: usize = tok
                    .parse()
                    .map_err(|_| syntax(line_no, c, "bad vertex count"))?;
                if v == 0 {
                    return Err(syntax(line_no, c, "vertex count must be positive"));
                }
                n = Some(v);
            }
            "edge" => {
                let nv = n.ok_or_else(|| syntax(line_no, col, "`edge` before `verts`"))?;
                let mut next_num = |what: &str| -> Result<(usize, usize), DiagramError> {
                    let (tok, c) = toks
                        .next()
                        .ok_or_else(|| syntax(line_no, col, &format!("missing {what}")))?;
                    let v: usize = tok
                        .parse()
                        .map_err(|_| syntax(line_no, c, &format!("bad {what} `{tok}`")))?;
                    Ok((v, c))
                };
                let (i, ci) = next_num("vertex")?;
                let (j, cj) = next_num("vertex")?;
                if i == 0 || i > nv {
                    return Err(syntax(line_no, ci, &format!("vertex {i} out of 1..{nv}")));
                }
                if j == 0 || j > nv {
                    return Err(syntax(line_no, cj, &format!("vertex {j} out of 1..{nv}")));
                }
                if i == j {
                    return Err(syntax(line_no, ci, "edge endpoints must differ"));
                }
                let (ltok, lc) = toks
                    .next()
                    .ok_or_else(|| syntax(line_no, col, "missing label"))?;
                let label = if ltok == "inf" {
                    Label::Infinity
                } else {
                    let v: u32 = ltok
                        .parse()
                        .map_err(|_| syntax(line_no, lc, &format!("bad label `{ltok}`")))?;
                    if v < 2 {
                        return Err(DiagramError::LabelRange { line: line_no });
                    }
                    Label::Finite(v)
                };
                if let Some((t, _)) = toks.next() {
                    return Err(syntax(line_no, col, &format!("trailing token `{t}`")));
                }
                edges.push((i - 1, j - 1, label, line_no));
            }
            other => {
                return Err(syntax(
                    line_no,
                    col,
                    &format!("unknown directive `{other}`"),
                ));
            }
        }
    }
    let n = n.ok_or_else(|| syntax(1, 1, "missing `verts` line"))?;
    let mut mat = CoxeterMatrix::right_angled_free(n);
    let mut set: Vec<Option<Label>> = vec![None; n * n];
    for (i, j, l, line) in edges {
        let slot = i.min(j) * n + i.max(j);
        match set[slot] {
            Some(prev) if prev != l => {
                return Err(DiagramError::ConflictingEdge {
                    line,
                    i: i + 1,
                    j: j + 1,
                })
            }
            _ => set[slot] = Some(l),
        }
        mat.m[i * n + j] = l;
        mat.m[j * n + i] = l;
    }
    Ok(mat)
}

fn syntax(line: usize, col: usize, msg: &str) -> DiagramError {
    DiagramError::Syntax {
        line,
        col,
        msg: msg.to_string(),
    }
}

/// Whitespace tokens with their 1-based starting columns.
fn tokens(line: &str) -> impl Iterator<Item = (&str, usize)> {
    let mut out = Vec::new();
    let mut start: Option<usize> = None;
    for (i, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((&line[s..i], s + 1));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((&line[s..], s + 1));
    }
    out.into_iter()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{classify, ComponentType, Family, GlobalType};

    #[test]
    fn parses_triangle_presentation() {
        let m = parse_diagram("verts 3\nedge 1 2 3\nedge 2 3 3\nedge 1 3 3").unwrap();
        assert_eq!(m.n(), 3);
        for i in 0..3 {
            for j in 0..3 {
                let expect = if i == j {
                    Label::Finite(1)
                } else {
                    Label::Finite(3)
                };
                assert_eq!(m.label(i, j), expect);
            }
        }
        assert_eq!(classify(&m).global, GlobalType::Affine);
    }

    #[test]
    fn parses_single_vertex() {
        let m = parse_diagram("verts 1").unwrap();
        assert_eq!(m.n(), 1);
        assert_eq!(m.label(0, 0), Label::Finite(1));
    }

    #[test]
    fn parses_infinite_dihedral() {
        let m = parse_diagram("verts 2\nedge 1 2 inf").unwrap();
        assert_eq!(m.label(0, 1), Label::Infinity);
        assert_eq!(m.label(1, 0), Label::Infinity);
        assert_eq!(
            classify(&m).components[0].1,
            ComponentType::Affine(Family::AffA(1))
        );
    }

    #[test]
    fn unlisted_pairs_default_to_two() {
        let m = parse_diagram("verts 3\nedge 1 2 5").unwrap();
        assert_eq!(m.label(0, 2), Label::Finite(2));
        assert_eq!(m.label(1, 2), Label::Finite(2));
    }

    #[test]
    fn comments_and_blank_lines() {
        let m =
            parse_diagram("# a triangle\nverts 3\n\nedge 1 2 3 # first\nedge 2 3 3\nedge 1 3 3\n")
                .unwrap();
        assert_eq!(m.n(), 3);
    }

    #[test]
    fn error_positions() {
        match parse_diagram("verts x") {
            Err(DiagramError::Syntax { line: 1, col, .. }) => assert_eq!(col, 7),
            other => panic!("unexpected {other:?}"),
        }
        match parse_diagram("verts 2\nedge 1 2 1") {
            Err(DiagramError::LabelRange { line: 2 }) => {}
            other => panic!("unexpected {other:?}"),
        }
        match parse_diagram("verts 2\nedge 1 2 3\nedge 2 1 4") {
            Err(DiagramError::ConflictingEdge {
                line: 3,
                i: 2,
                j: 1,
            }) => {}
            other => panic!("unexpected {other:?}"),
        }
        // duplicate with the same label is allowed
        assert!(parse_diagram("verts 2\nedge 1 2 3\nedge 2 1 3").is_ok());
        match parse_diagram("verts 2\nedge 1 3 3") {
            Err(DiagramError::Syntax { line: 2, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
    }
}
