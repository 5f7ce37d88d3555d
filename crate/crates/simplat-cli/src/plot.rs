//! Fixed-frame SVG rendering of points in dimension 2 or 3.
//!
//! The frame is always `viewBox="0 0 1000 1000"` with a 100-unit margin.
//! Dimension 2 draws the triangle with corners `(0,0)`, `(0,1)`, `(1,1)`;
//! dimension 3 projects through the fixed oblique matrix with columns
//! `(-0.5, -0.3)`, `(1, 0)`, `(0, 1)` and draws the six edges of the
//! tetrahedron. Output bytes are a pure function of the input.

use simplat::Simplex;
use std::fmt::Write;

const VIEW: f64 = 1000.0;
const MARGIN: f64 = 100.0;
const SPAN: f64 = 800.0;

fn project(coords: &[f64]) -> (f64, f64) {
    match coords.len() {
        2 => (coords[0], coords[1]),
        3 => (
            coords[1] - 0.5 * coords[0],
            coords[2] - 0.3 * coords[0],
        ),
        _ => unreachable!("caller checks the dimension"),
    }
}

fn to_frame(world: (f64, f64)) -> (f64, f64) {
    (MARGIN + SPAN * world.0, VIEW - MARGIN - SPAN * world.1)
}

fn corner(coords: &[f64]) -> (f64, f64) {
    to_frame(project(coords))
}

pub fn render(points: &[(Simplex, String)], dim: usize) -> Result<String, String> {
    if dim != 2 && dim != 3 {
        return Err(format!("cannot plot dimension {dim}; only 2 and 3 are drawable"));
    }
    if let Some((s, label)) = points.iter().find(|(s, _)| s.dim() != dim) {
        return Err(format!(
            "mixed dimensions: point {label} has dimension {} in a dimension-{dim} plot",
            s.dim()
        ));
    }

    let mut svg = String::new();
    writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 1000 1000">"#
    )
    .unwrap();
    writeln!(svg, r#"  <rect width="1000" height="1000" fill="white"/>"#).unwrap();

    let vertices: Vec<Vec<f64>> = Simplex::vertices(dim)
        .expect("dimension is 2 or 3")
        .into_iter()
        .map(Simplex::into_coords)
        .collect();

    if dim == 2 {
        let pts: Vec<(f64, f64)> = vertices.iter().map(|v| corner(v)).collect();
        writeln!(
            svg,
            r#"  <path d="M {:.2} {:.2} L {:.2} {:.2} L {:.2} {:.2} Z" fill="lavender" stroke="black" stroke-width="2"/>"#,
            pts[0].0, pts[0].1, pts[1].0, pts[1].1, pts[2].0, pts[2].1
        )
        .unwrap();
    } else {
        for a in 0..vertices.len() {
            for b in a + 1..vertices.len() {
                let pa = corner(&vertices[a]);
                let pb = corner(&vertices[b]);
                writeln!(
                    svg,
                    r#"  <line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="black" stroke-width="2"/>"#,
                    pa.0, pa.1, pb.0, pb.1
                )
                .unwrap();
            }
        }
    }

    for (k, v) in vertices.iter().enumerate() {
        let p = corner(v);
        writeln!(
            svg,
            r#"  <text x="{:.2}" y="{:.2}" font-size="24">v{k}</text>"#,
            p.0 + 8.0,
            p.1 - 8.0
        )
        .unwrap();
    }

    for (s, label) in points {
        let p = corner(s.coords());
        writeln!(
            svg,
            r#"  <circle cx="{:.2}" cy="{:.2}" r="6" fill="crimson"/>"#,
            p.0, p.1
        )
        .unwrap();
        writeln!(
            svg,
            r#"  <text x="{:.2}" y="{:.2}" font-size="20">{label}</text>"#,
            p.0 + 10.0,
            p.1 - 10.0
        )
        .unwrap();
    }

    svg.push_str("</svg>\n");
    Ok(svg)
}
