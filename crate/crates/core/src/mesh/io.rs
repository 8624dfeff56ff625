use serde::{Deserialize, Serialize};

use super::{Mesh, MeshError};
use crate::geometry2d::Point2;

/// On-disk mesh: `{"vertices": [[x, y], …], "triangles": [[i, j, k], …]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MeshFile {
    pub vertices: Vec<Point2>,
    pub triangles: Vec<[u32; 3]>,
}

impl MeshFile {
    pub fn from_json(text: &str) -> Result<MeshFile, serde_json::Error> {
        serde_json::from_str(text)
    }

    /// Compact JSON, one vertex or triangle per line, newline terminated.
    pub fn to_json(&self) -> String {
        let mut out = String::from("{\"vertices\": [");
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push_str("\n  ");
            out.push_str(&serde_json::to_string(v).expect("finite coordinates serialize"));
        }
        out.push_str("\n],\n\"triangles\": [");
        for (i, t) in self.triangles.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push_str(&format!("\n  [{}, {}, {}]", t[0], t[1], t[2]));
        }
        out.push_str("\n]}\n");
        out
    }

    pub fn build(self) -> Result<Mesh, MeshError> {
        Mesh::from_triangles(self.vertices, &self.triangles)
    }
}

impl From<&Mesh> for MeshFile {
    fn from(m: &Mesh) -> Self {
        MeshFile { vertices: m.vertices().to_vec(), triangles: m.triangles() }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum OffError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("vertex {0} has non-zero z coordinate")]
    NonPlanar(usize),
    #[error("face {0} is not a triangle")]
    NotTriangle(usize),
}

fn syntax(line: usize, msg: &str) -> OffError {
    OffError::Syntax { line, msg: msg.to_string() }
}

fn parse_next<'a, T: std::str::FromStr>(
    tokens: &mut impl Iterator<Item = (usize, &'a str)>,
    what: &str,
) -> Result<T, OffError> {
    let (line, t) = tokens.next().ok_or_else(|| syntax(0, &format!("unexpected end of input reading {what}")))?;
    t.parse().map_err(|_| syntax(line, &format!("bad {what} '{t}'")))
}

/// Reads a 2D triangle mesh from OFF text. Every `z` must be 0.
pub fn parse_off(text: &str) -> Result<MeshFile, OffError> {
    let mut tokens = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("")))
        .flat_map(|(i, l)| l.split_whitespace().map(move |t| (i, t)));

    match tokens.next() {
        Some((_, "OFF")) => {}
        Some((line, _)) => return Err(syntax(line, "missing OFF header")),
        None => return Err(syntax(1, "empty input")),
    }
    let nv = parse_next::<usize>(&mut tokens, "vertex count")?;
    let nf = parse_next::<usize>(&mut tokens, "face count")?;
    let _ne = parse_next::<usize>(&mut tokens, "edge count")?;

    let mut vertices = Vec::with_capacity(nv);
    for v in 0..nv {
        let mut xyz = [0.0; 3];
        for c in &mut xyz {
            *c = parse_next::<f64>(&mut tokens, "coordinate")?;
        }
        if xyz[2] != 0.0 {
            return Err(OffError::NonPlanar(v));
        }
        let p = Point2::try_new(xyz[0], xyz[1]).map_err(|_| syntax(0, &format!("vertex {v} is not finite")))?;
        vertices.push(p);
    }
    let mut triangles = Vec::with_capacity(nf);
    for f in 0..nf {
        if parse_next::<usize>(&mut tokens, "face size")? != 3 {
            return Err(OffError::NotTriangle(f));
        }
        let mut tri = [0u32; 3];
        for i in &mut tri {
            *i = parse_next::<u32>(&mut tokens, "vertex index")?;
        }
        triangles.push(tri);
    }
    Ok(MeshFile { vertices, triangles })
}
