//! Isotropy weights and the momentum-polytope image for the torus action on
//! the Eschenburg flag `SU(3)//S_12`.
//!
//! The two-torus acts through the fibration `H/T -> G//T -> G//H` with base
//! `CP^2`: horizontal weights are pulled back from the standard `T^3` action
//! on `CP^2` along the `S -> T^3` homomorphism, fiber weights are pulled
//! back from the `CP^1` fiber along one explicit homomorphism per fixed
//! fiber. Everything is exact integer/rational arithmetic.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polyring::{format_rational, parse_rational, Rational};

/// Dense integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<i64>) -> Result<Self> {
        if rows == 0 || cols == 0 || data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix holding {} entries",
                rows,
                cols,
                data.len()
            )));
        }
        Ok(IntMatrix { rows, cols, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    pub fn apply(&self, v: &[i64]) -> Result<Vec<i64>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "applying a {}x{} matrix to a vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.entry(r, c) * v[c]).sum())
            .collect())
    }
}

/// Multiset of integer covectors of one common dimension; comparison is
/// order-free (weights are kept sorted).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSet {
    dim: usize,
    weights: Vec<Vec<i64>>,
}

impl WeightSet {
    pub fn new(dim: usize, mut weights: Vec<Vec<i64>>) -> Result<Self> {
        for w in &weights {
            if w.len() != dim {
                return Err(Error::DimensionMismatch(format!(
                    "weight of length {} in a dimension-{} set",
                    w.len(),
                    dim
                )));
            }
        }
        weights.sort();
        Ok(WeightSet { dim, weights })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn weights(&self) -> &[Vec<i64>] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn contains(&self, w: &[i64]) -> bool {
        self.weights.iter().any(|v| v == w)
    }
}

/// Fixed points of the standard torus action on the base `CP^2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum BasePoint {
    /// `[1:0:0]`
    E1,
    /// `[0:1:0]`
    E2,
    /// `[0:0:1]`
    E3,
}

impl fmt::Display for BasePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasePoint::E1 => write!(f, "[1:0:0]"),
            BasePoint::E2 => write!(f, "[0:1:0]"),
            BasePoint::E3 => write!(f, "[0:0:1]"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Label {
    P1,
    P2,
    P3,
    P4,
    P5,
    P6,
}

impl Label {
    pub const ALL: [Label; 6] = [Label::P1, Label::P2, Label::P3, Label::P4, Label::P5, Label::P6];

    pub fn as_str(&self) -> &'static str {
        match self {
            Label::P1 => "p1",
            Label::P2 => "p2",
            Label::P3 => "p3",
            Label::P4 => "p4",
            Label::P5 => "p5",
            Label::P6 => "p6",
        }
    }

    pub fn parse(s: &str) -> Result<Label> {
        Label::ALL
            .into_iter()
            .find(|l| l.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown fixed-point label `{s}`")))
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointKind {
    Vertex,
    Interior,
}

/// Weight data at one fixed point of the two-torus action.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedPointData {
    pub label: Label,
    pub base_point: BasePoint,
    /// The two weights inherited from the base.
    pub horizontal: WeightSet,
    /// The single weight along the fiber.
    pub vertical: Vec<i64>,
    pub kind: PointKind,
}

impl FixedPointData {
    /// All three weights as one multiset.
    pub fn weights(&self) -> WeightSet {
        let mut all = self.horizontal.weights().to_vec();
        all.push(self.vertical.clone());
        WeightSet::new(2, all).expect("dimensions agree")
    }
}

/// Isotropy weights of the standard (non-effective) `T^3` action on `CP^2`
/// at its three fixed points.
pub fn base_weights_cp2() -> Vec<(BasePoint, WeightSet)> {
    let ws = |a: [i64; 3], b: [i64; 3]| {
        WeightSet::new(3, vec![a.to_vec(), b.to_vec()]).expect("dimension 3")
    };
    vec![
        (BasePoint::E1, ws([-1, 1, 0], [-1, 0, 1])),
        (BasePoint::E2, ws([1, -1, 0], [0, -1, 1])),
        (BasePoint::E3, ws([1, 0, -1], [0, 1, -1])),
    ]
}

/// Push a weight set through a homomorphism given on Lie algebras:
/// weights as columns, `result = h * w`.
pub fn pullback_weights(h: &IntMatrix, ws: &WeightSet) -> Result<WeightSet> {
    let mapped = ws
        .weights()
        .iter()
        .map(|w| h.apply(w))
        .collect::<Result<Vec<_>>>()?;
    WeightSet::new(h.rows(), mapped)
}

/// Lie-algebra matrices of the three fiber homomorphisms `S -> T`.
pub fn fiber_homomorphisms() -> (IntMatrix, IntMatrix, IntMatrix) {
    let m = |data: [i64; 4]| IntMatrix::new(2, 2, data.to_vec()).expect("2x2");
    (
        m([1, -1, -1, 0]),
        m([0, -1, -1, 1]),
        m([-1, 0, 0, -1]),
    )
}

/// The `S -> T^3` homomorphism of the base action, transposed to act on
/// weights: rows `(1,1,0)` and `(1,0,1)`.
pub fn base_homomorphism_transposed() -> IntMatrix {
    IntMatrix::new(2, 3, vec![1, 1, 0, 1, 0, 1]).expect("2x3")
}

/// Assemble the weights at the six fixed points `p1..p6`.
///
/// Fiber pairs `(p1,p5)`, `(p2,p4)`, `(p3,p6)` share a base point and the
/// horizontal weights; their fiber weights are `+phi_i (1,-1)` at `p1,p2,p3`
/// and the negatives at the partner points.
pub fn fixed_point_weights() -> Vec<FixedPointData> {
    let h = base_homomorphism_transposed();
    let horizontal: BTreeMap<BasePoint, WeightSet> = base_weights_cp2()
        .into_iter()
        .map(|(bp, ws)| (bp, pullback_weights(&h, &ws).expect("dimensions agree")))
        .collect();
    let (phi1, phi2, phi3) = fiber_homomorphisms();
    let fiber = [1i64, -1];
    let v = [
        phi1.apply(&fiber).expect("2x2"),
        phi2.apply(&fiber).expect("2x2"),
        phi3.apply(&fiber).expect("2x2"),
    ];
    let neg = |w: &[i64]| w.iter().map(|x| -x).collect::<Vec<_>>();
    let spec: [(Label, BasePoint, Vec<i64>); 6] = [
        (Label::P1, BasePoint::E3, v[0].clone()),
        (Label::P2, BasePoint::E2, v[1].clone()),
        (Label::P3, BasePoint::E1, v[2].clone()),
        (Label::P4, BasePoint::E2, neg(&v[1])),
        (Label::P5, BasePoint::E3, neg(&v[0])),
        (Label::P6, BasePoint::E1, neg(&v[2])),
    ];
    spec.into_iter()
        .map(|(label, base_point, vertical)| {
            let horizontal = horizontal[&base_point].clone();
            let mut all = horizontal.weights().to_vec();
            all.push(vertical.clone());
            let kind = classify(&WeightSet::new(2, all).expect("dimension 2"))
                .expect("fixed-point weights are nonzero");
            FixedPointData { label, base_point, horizontal, vertical, kind }
        })
        .collect()
}

/// Cone test: `Interior` iff the weights positively span the plane, i.e.
/// zero is a strictly positive combination. Exact: the cone is proper iff
/// some closed half-plane through a generator contains all weights.
pub fn classify(ws: &WeightSet) -> Result<PointKind> {
    if ws.dim() != 2 {
        return Err(Error::DimensionMismatch("cone test needs dimension 2".into()));
    }
    if ws.weights().iter().any(|w| w.iter().all(|&x| x == 0)) {
        return Err(Error::ZeroWeight);
    }
    if ws.is_empty() {
        return Ok(PointKind::Vertex);
    }
    for w in ws.weights() {
        for u in [[-w[1], w[0]], [w[1], -w[0]]] {
            if ws.weights().iter().all(|v| u[0] * v[0] + u[1] * v[1] >= 0) {
                return Ok(PointKind::Vertex);
            }
        }
    }
    Ok(PointKind::Interior)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeStyle {
    Solid,
    Dashed,
}

impl EdgeStyle {
    fn as_str(&self) -> &'static str {
        match self {
            EdgeStyle::Solid => "solid",
            EdgeStyle::Dashed => "dashed",
        }
    }

    fn parse(s: &str) -> Result<Self> {
        match s {
            "solid" => Ok(EdgeStyle::Solid),
            "dashed" => Ok(EdgeStyle::Dashed),
            other => Err(Error::Parse(format!("unknown edge style `{other}`"))),
        }
    }
}

/// The momentum image: six labelled rational points, the nine 1-skeleton
/// edges with their drawing style, and the three edge-scale parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolytopeImage {
    points: Vec<(Label, [Rational; 2])>,
    edges: Vec<(Label, Label, EdgeStyle)>,
    params: [Rational; 3],
}

impl PolytopeImage {
    pub fn points(&self) -> &[(Label, [Rational; 2])] {
        &self.points
    }

    pub fn point(&self, l: Label) -> &[Rational; 2] {
        &self.points.iter().find(|(p, _)| *p == l).expect("all labels present").1
    }

    pub fn edges(&self) -> &[(Label, Label, EdgeStyle)] {
        &self.edges
    }

    pub fn params(&self) -> &[Rational; 3] {
        &self.params
    }
}

fn q64(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn pt(x: Rational, y: Rational) -> [Rational; 2] {
    [x, y]
}

fn add(p: &[Rational; 2], dir: [i64; 2], t: &Rational) -> [Rational; 2] {
    [&p[0] + &(q64(dir[0]) * t), &p[1] + &(q64(dir[1]) * t)]
}

/// Strict interiority of `q` in the convex polygon `hull` (vertices in
/// cyclic order), by exact signed-area tests. Returns the offending edge.
fn strictly_inside(hull: &[(Label, [Rational; 2])], q: &[Rational; 2]) -> std::result::Result<(), String> {
    let n = hull.len();
    let cross = |a: &[Rational; 2], b: &[Rational; 2], c: &[Rational; 2]| -> Rational {
        let abx = &b[0] - &a[0];
        let aby = &b[1] - &a[1];
        let acx = &c[0] - &a[0];
        let acy = &c[1] - &a[1];
        &abx * &acy - &aby * &acx
    };
    // orientation from the polygon itself
    let mut orient = Rational::zero();
    for i in 0..n {
        let (_, a) = &hull[i];
        let (_, b) = &hull[(i + 1) % n];
        orient += &(&a[0] * &b[1]) - &(&a[1] * &b[0]);
    }
    for i in 0..n {
        let (la, a) = &hull[i];
        let (lb, b) = &hull[(i + 1) % n];
        let side = cross(a, b, q);
        if side.is_zero() || side.is_positive() != orient.is_positive() {
            return Err(format!("the hull edge {la}-{lb}"));
        }
    }
    Ok(())
}

/// Build the momentum image for edge-scale parameters `(a, b, c)` scaling
/// the three parallel edges between `(p3,p6)`, `(p2,p5)` and `(p1,p4)`
/// relative to the default picture, which uses `(1, 1, 1)`.
///
/// The underlying fibration leaves two degrees of freedom (the common fiber
/// scale and the base scale), so the three lengths obey `4c = 3a + b`;
/// parameter triples violating that cannot produce straight weight-parallel
/// skeleton edges. Shrinking `a` (with the relation maintained) shrinks all
/// three fiber edges and the image degenerates to the base triangle.
pub fn polytope_image(params: [Rational; 3]) -> Result<PolytopeImage> {
    let [a, b, c] = &params;
    for (name, v) in [("a", a), ("b", b), ("c", c)] {
        if !v.is_positive() {
            return Err(Error::InfeasibleParams(format!(
                "parameter {name} must be positive, got {}",
                format_rational(v)
            )));
        }
    }
    // lengths along the lattice directions; defaults are 1, 1 and 4
    let l1 = a.clone();
    let l3 = q64(4) * c;
    let gap = &l3 - &(q64(3) * &l1);
    if !gap.is_positive() {
        return Err(Error::InfeasibleParams(format!(
            "interiority violated: fiber edges scaled by a = {} against c = {} force the \
             interior points p2 and p5 to collide or pass each other (need 4c > 3a)",
            format_rational(a),
            format_rational(c),
        )));
    }
    if &gap != b {
        return Err(Error::InfeasibleParams(format!(
            "inconsistent edge scales: the p2-p5 edge length is forced to 4c - 3a = {}, got b = {}",
            format_rational(&gap),
            format_rational(b),
        )));
    }
    let p3 = pt(q64(2), q64(0));
    let p6 = add(&p3, [-1, 1], &l1);
    let p1 = add(&p6, [-1, 0], &(&l3 - &l1));
    let p4 = add(&p1, [1, -1], &l3);
    let p5 = add(&p1, [2, -1], &l1);
    let p2 = add(&p6, [0, -1], &(&l3 - &(q64(2) * &l1)));
    let hull = vec![
        (Label::P1, p1.clone()),
        (Label::P6, p6.clone()),
        (Label::P3, p3.clone()),
        (Label::P4, p4.clone()),
    ];
    for (label, point) in [(Label::P5, &p5), (Label::P2, &p2)] {
        strictly_inside(&hull, point).map_err(|edge| {
            Error::InfeasibleParams(format!(
                "interiority violated: {label} is not strictly inside {edge}"
            ))
        })?;
    }
    let points = vec![
        (Label::P1, p1),
        (Label::P2, p2),
        (Label::P3, p3),
        (Label::P4, p4),
        (Label::P5, p5),
        (Label::P6, p6),
    ];
    let edges = vec![
        (Label::P6, Label::P1, EdgeStyle::Solid),
        (Label::P1, Label::P4, EdgeStyle::Solid),
        (Label::P4, Label::P3, EdgeStyle::Solid),
        (Label::P3, Label::P6, EdgeStyle::Solid),
        (Label::P4, Label::P2, EdgeStyle::Dashed),
        (Label::P2, Label::P6, EdgeStyle::Dashed),
        (Label::P2, Label::P5, EdgeStyle::Dashed),
        (Label::P5, Label::P3, EdgeStyle::Dashed),
        (Label::P5, Label::P1, EdgeStyle::Dashed),
    ];
    Ok(PolytopeImage { points, edges, params })
}

pub fn default_params() -> [Rational; 3] {
    [q64(1), q64(1), q64(1)]
}

#[derive(Serialize, Deserialize)]
struct ImageJson {
    points: BTreeMap<String, [String; 2]>,
    edges: Vec<[String; 3]>,
    weights: BTreeMap<String, Vec<[i64; 2]>>,
    params: [String; 3],
}

impl PolytopeImage {
    /// Deterministic JSON: `{ "points": {...}, "edges": [...], "weights": {...},
    /// "params": [...] }` with rationals in canonical text form.
    pub fn to_json_string(&self) -> String {
        let points = self
            .points
            .iter()
            .map(|(l, p)| {
                (l.as_str().to_string(), [format_rational(&p[0]), format_rational(&p[1])])
            })
            .collect();
        let edges = self
            .edges
            .iter()
            .map(|(a, b, s)| {
                [a.as_str().to_string(), b.as_str().to_string(), s.as_str().to_string()]
            })
            .collect();
        let weights = fixed_point_weights()
            .iter()
            .map(|fp| {
                let ws = fp
                    .weights()
                    .weights()
                    .iter()
                    .map(|w| [w[0], w[1]])
                    .collect();
                (fp.label.as_str().to_string(), ws)
            })
            .collect();
        let params = [
            format_rational(&self.params[0]),
            format_rational(&self.params[1]),
            format_rational(&self.params[2]),
        ];
        let json = ImageJson { points, edges, weights, params };
        serde_json::to_string_pretty(&json).expect("image serializes")
    }

    /// Inverse of [`PolytopeImage::to_json_string`]; validates labels and that
    /// the embedded weight table matches [`fixed_point_weights`].
    pub fn from_json_str(s: &str) -> Result<Self> {
        let raw: ImageJson =
            serde_json::from_str(s).map_err(|e| Error::Parse(format!("image json: {e}")))?;
        let mut points = Vec::new();
        for l in Label::ALL {
            let p = raw
                .points
                .get(l.as_str())
                .ok_or_else(|| Error::Parse(format!("missing point {l}")))?;
            points.push((l, [parse_rational(&p[0])?, parse_rational(&p[1])?]));
        }
        if raw.points.len() != 6 {
            return Err(Error::Parse("unexpected extra points".into()));
        }
        let mut edges = Vec::new();
        for e in &raw.edges {
            edges.push((Label::parse(&e[0])?, Label::parse(&e[1])?, EdgeStyle::parse(&e[2])?));
        }
        let params = [
            parse_rational(&raw.params[0])?,
            parse_rational(&raw.params[1])?,
            parse_rational(&raw.params[2])?,
        ];
        for fp in fixed_point_weights() {
            let expect: Vec<[i64; 2]> =
                fp.weights().weights().iter().map(|w| [w[0], w[1]]).collect();
            match raw.weights.get(fp.label.as_str()) {
                Some(ws) if *ws == expect => {}
                _ => {
                    return Err(Error::Parse(format!(
                        "weight table for {} does not match the fixed-point data",
                        fp.label
                    )))
                }
            }
        }
        Ok(PolytopeImage { points, edges, params })
    }

    /// Deterministic SVG with 1 lattice unit = 40 px; dots for fixed points,
    /// solid boundary edges and dashed 1-skeleton segments, labels beside
    /// the dots.
    pub fn to_svg_string(&self) -> String {
        const UNIT: f64 = 40.0;
        const PAD: f64 = 1.0;
        let xs: Vec<f64> = self.points.iter().map(|(_, p)| rational_f64(&p[0])).collect();
        let ys: Vec<f64> = self.points.iter().map(|(_, p)| rational_f64(&p[1])).collect();
        let minx = xs.iter().cloned().fold(f64::INFINITY, f64::min) - PAD;
        let maxx = xs.iter().cloned().fold(f64::NEG_INFINITY, f64::max) + PAD;
        let miny = ys.iter().cloned().fold(f64::INFINITY, f64::min) - PAD;
        let maxy = ys.iter().cloned().fold(f64::NEG_INFINITY, f64::max) + PAD;
        let width = (maxx - minx) * UNIT;
        let height = (maxy - miny) * UNIT;
        let sx = |x: f64| (x - minx) * UNIT;
        let sy = |y: f64| (maxy - y) * UNIT;
        let mut out = String::new();
        out.push_str(&format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {:.2} {:.2}\">\n",
            width, height
        ));
        for (a, b, style) in &self.edges {
            let pa = self.point(*a);
            let pb = self.point(*b);
            let dash = match style {
                EdgeStyle::Solid => "",
                EdgeStyle::Dashed => " stroke-dasharray=\"8 6\"",
            };
            out.push_str(&format!(
                "  <line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"black\" stroke-width=\"3\"{} />\n",
                sx(rational_f64(&pa[0])),
                sy(rational_f64(&pa[1])),
                sx(rational_f64(&pb[0])),
                sy(rational_f64(&pb[1])),
                dash
            ));
        }
        for (l, p) in &self.points {
            let cx = sx(rational_f64(&p[0]));
            let cy = sy(rational_f64(&p[1]));
            out.push_str(&format!(
                "  <circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"5\" fill=\"black\" />\n",
                cx, cy
            ));
            out.push_str(&format!(
                "  <text x=\"{:.2}\" y=\"{:.2}\" font-family=\"sans-serif\" font-size=\"16\">{}</text>\n",
                cx + 8.0,
                cy - 8.0,
                l
            ));
        }
        out.push_str("</svg>\n");
        out
    }
}

fn rational_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(0.0)
}
