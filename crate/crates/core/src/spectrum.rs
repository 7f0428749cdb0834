//! Proper joint spectra of pair restrictions, as multisets of lines and
//! ellipses, plus SVG rendering.

use std::collections::BTreeMap;
use std::fmt;
use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::bipoly::{det_pencil, BiPoly};
use crate::dihedral::{irrep_curve, ord_of_product, RepSpec};
use crate::error::{Error, Result};
use crate::exactnum::intmath::gcd32;
use crate::exactnum::{CycMatrix, CyclotomicNumber};

/// Sign pattern of a line `±x₁ ± x₂ − 1 = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum LineCode {
    PP,
    MM,
    MP,
    PM,
}

impl LineCode {
    pub const ALL: [LineCode; 4] = [LineCode::PP, LineCode::MM, LineCode::MP, LineCode::PM];

    /// Coefficients `(a, b)` of `a·x₁ + b·x₂ − 1`.
    pub fn coefficients(self) -> (i64, i64) {
        match self {
            LineCode::PP => (1, 1),
            LineCode::MM => (-1, -1),
            LineCode::MP => (-1, 1),
            LineCode::PM => (1, -1),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            LineCode::PP => "PP",
            LineCode::MM => "MM",
            LineCode::MP => "MP",
            LineCode::PM => "PM",
        }
    }
}

/// A component of a pair spectrum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Curve {
    Line(LineCode),
    /// `1 − x₁² − x₂² − 2cos(2π·num/den)·x₁x₂ = 0` with `num/den` reduced
    /// and strictly between 0 and 1/2.
    Ellipse { num: u32, den: u32 },
}

impl Curve {
    /// Validated ellipse constructor.
    pub fn ellipse(num: u32, den: u32) -> Result<Self> {
        if den == 0 || num == 0 || 2 * num >= den {
            return Err(Error::InvalidCurveSet(format!("ellipse label {num}/{den} is outside (0, 1/2)")));
        }
        if gcd32(num, den) != 1 {
            return Err(Error::InvalidCurveSet(format!("ellipse label {num}/{den} is not reduced")));
        }
        Ok(Curve::Ellipse { num, den })
    }

    /// Curve of `ρ₂,ₖ` at parameter `n`: label `min(k mod n, n − k mod n)/n`,
    /// reduced.
    pub fn for_two_dim(k: u32, n: u32) -> Self {
        let k = k % n;
        let k = k.min(n - k);
        let g = gcd32(k, n);
        Curve::Ellipse { num: k / g, den: n / g }
    }

    pub fn is_line(&self) -> bool {
        matches!(self, Curve::Line(_))
    }

    /// Number of irreducible dimensions this curve accounts for.
    pub fn degree(&self) -> usize {
        match self {
            Curve::Line(_) => 1,
            Curve::Ellipse { .. } => 2,
        }
    }
}

impl Ord for Curve {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        match (self, other) {
            (Curve::Line(a), Curve::Line(b)) => a.cmp(b),
            (Curve::Line(_), Curve::Ellipse { .. }) => Ordering::Less,
            (Curve::Ellipse { .. }, Curve::Line(_)) => Ordering::Greater,
            (Curve::Ellipse { num: a, den: b }, Curve::Ellipse { num: c, den: d }) => {
                (u64::from(*a) * u64::from(*d)).cmp(&(u64::from(*c) * u64::from(*b)))
            }
        }
    }
}

impl PartialOrd for Curve {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Curve::Line(code) => f.write_str(code.as_str()),
            Curve::Ellipse { num, den } => write!(f, "E({num}/{den})"),
        }
    }
}

/// Normalized defining polynomial of a curve.
pub fn curve_poly(c: &Curve) -> BiPoly {
    match *c {
        Curve::Line(code) => {
            let (a, b) = code.coefficients();
            BiPoly::from_i64_terms(&[(1, 0, a), (0, 1, b), (0, 0, -1)])
        }
        Curve::Ellipse { num, den } => {
            let base = BiPoly::from_i64_terms(&[(0, 0, 1), (2, 0, -1), (0, 2, -1)]);
            let cross = BiPoly::x1()
                .mul(&BiPoly::x2())
                .scale(&CyclotomicNumber::two_cos(i64::from(num), den).neg());
            base.add(&cross)
        }
    }
}

/// Multiset of curves.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CurveSet {
    curves: BTreeMap<Curve, u32>,
}

impl CurveSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `mult` copies of `c`. Zero multiplicities are ignored.
    pub fn insert(&mut self, c: Curve, mult: u32) {
        if mult > 0 {
            *self.curves.entry(c).or_insert(0) += mult;
        }
    }

    pub fn from_pairs(items: impl IntoIterator<Item = (Curve, u32)>) -> Self {
        let mut set = Self::new();
        for (c, m) in items {
            set.insert(c, m);
        }
        set
    }

    pub fn iter(&self) -> impl Iterator<Item = (Curve, u32)> + '_ {
        self.curves.iter().map(|(c, m)| (*c, *m))
    }

    pub fn multiplicity(&self, c: &Curve) -> u32 {
        self.curves.get(c).copied().unwrap_or(0)
    }

    pub fn contains(&self, c: &Curve) -> bool {
        self.curves.contains_key(c)
    }

    pub fn len(&self) -> usize {
        self.curves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.curves.is_empty()
    }

    /// The underlying set, each curve with multiplicity one.
    pub fn support(&self) -> CurveSet {
        CurveSet {
            curves: self.curves.keys().map(|c| (*c, 1)).collect(),
        }
    }

    pub fn lines(&self) -> impl Iterator<Item = (LineCode, u32)> + '_ {
        self.iter().filter_map(|(c, m)| match c {
            Curve::Line(code) => Some((code, m)),
            Curve::Ellipse { .. } => None,
        })
    }

    pub fn ellipses(&self) -> impl Iterator<Item = (u32, u32, u32)> + '_ {
        self.iter().filter_map(|(c, m)| match c {
            Curve::Ellipse { num, den } => Some((num, den, m)),
            Curve::Line(_) => None,
        })
    }

    /// Total degree `Σ mult · deg`, the dimension of any representation
    /// with this spectrum.
    pub fn degree(&self) -> usize {
        self.iter().map(|(c, m)| c.degree() * m as usize).sum()
    }

    /// `∏ curve_poly(c)^mult`.
    pub fn product(&self) -> BiPoly {
        self.iter()
            .fold(BiPoly::one(), |acc, (c, m)| acc.mul(&curve_poly(&c).pow(m)))
    }

    /// Checks every ellipse label is reduced and inside `(0, 1/2)`.
    pub fn validate(&self) -> Result<()> {
        for (num, den, _) in self.ellipses() {
            Curve::ellipse(num, den)?;
        }
        Ok(())
    }
}

impl fmt::Display for CurveSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (c, m)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}:{m}")?;
        }
        f.write_str("}")
    }
}

/// The catalog curve of every constituent, with its multiplicity.
pub fn spectrum_of_spec(spec: &RepSpec) -> Result<CurveSet> {
    let mut set = CurveSet::new();
    for (label, mult) in spec.terms() {
        set.insert(irrep_curve(spec.n(), label)?, mult);
    }
    Ok(set)
}

/// Result of factoring a pair pencil.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairSpectrum {
    pub poly: BiPoly,
    pub curves: CurveSet,
    /// Dihedral parameter: the order of `AB`, raised to 2 when it is 1.
    pub n: u32,
}

/// Candidate factors for parameter `n`: the four lines, then every ellipse
/// `k/n` with `1 ≤ k ≤ ⌊(n−1)/2⌋`.
pub fn candidate_curves(n: u32) -> Vec<Curve> {
    let mut out: Vec<Curve> = LineCode::ALL.iter().map(|c| Curve::Line(*c)).collect();
    for k in 1..=(n.saturating_sub(1) / 2) {
        let c = Curve::for_two_dim(k, n);
        if !out.contains(&c) {
            out.push(c);
        }
    }
    out
}

/// Factors `F` by repeated trial division over `candidates`. The residual
/// must be exactly 1.
pub fn factor_over(poly: &BiPoly, candidates: &[Curve]) -> Result<CurveSet> {
    let mut rest = poly.clone();
    let mut set = CurveSet::new();
    for c in candidates {
        if rest.is_constant() {
            break;
        }
        let p = curve_poly(c);
        let mut mult = 0;
        while let Some(q) = rest.exact_div(&p)? {
            rest = q;
            mult += 1;
        }
        set.insert(*c, mult);
    }
    if rest != BiPoly::one() {
        return Err(Error::NotFullyFactorable {
            residual: rest.to_string(),
        });
    }
    Ok(set)
}

/// Determinant of `−I + x₁A + x₂B` and its factorization into catalog curves.
pub fn spectrum_of_matrices(a: &CycMatrix, b: &CycMatrix, max_order: u32) -> Result<PairSpectrum> {
    let n = ord_of_product(a, b, max_order)?.max(2);
    let poly = det_pencil(a, b)?;
    let curves = factor_over(&poly, &candidate_curves(n))?;
    Ok(PairSpectrum { poly, curves, n })
}

/// Equality of supports, ignoring multiplicities.
pub fn curveset_equal_support(a: &CurveSet, b: &CurveSet) -> bool {
    a.curves.keys().eq(b.curves.keys())
}

/// One generator pair's spectrum inside a curve-set file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairCurves {
    pub i: usize,
    pub j: usize,
    pub curves: CurveSet,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LineEntry {
    code: LineCode,
    mult: u32,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EllipseEntry {
    num: u32,
    den: u32,
    mult: u32,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PairEntry {
    i: usize,
    j: usize,
    #[serde(default)]
    lines: Vec<LineEntry>,
    #[serde(default)]
    ellipses: Vec<EllipseEntry>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CurveSetFile {
    pairs: Vec<PairEntry>,
}

/// Serializes pair spectra in the curve-set file layout.
pub fn curvesets_to_json(pairs: &[PairCurves]) -> String {
    let file = CurveSetFile {
        pairs: pairs
            .iter()
            .map(|p| PairEntry {
                i: p.i,
                j: p.j,
                lines: p.curves.lines().map(|(code, mult)| LineEntry { code, mult }).collect(),
                ellipses: p
                    .curves
                    .ellipses()
                    .map(|(num, den, mult)| EllipseEntry { num, den, mult })
                    .collect(),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&file).expect("curve sets always serialize")
}

/// Parses and validates a curve-set file.
pub fn curvesets_from_json(text: &str) -> Result<Vec<PairCurves>> {
    let file: CurveSetFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::with_capacity(file.pairs.len());
    for p in file.pairs {
        if p.i >= p.j {
            return Err(Error::InvalidCurveSet(format!("pair ({}, {}) must have i < j", p.i, p.j)));
        }
        if !seen.insert((p.i, p.j)) {
            return Err(Error::InvalidCurveSet(format!("pair ({}, {}) listed twice", p.i, p.j)));
        }
        let mut curves = CurveSet::new();
        let mut push = |c: Curve, mult: u32| {
            if mult == 0 {
                return Err(Error::InvalidCurveSet(format!("{c} has multiplicity 0")));
            }
            if curves.contains(&c) {
                return Err(Error::InvalidCurveSet(format!("{c} listed twice")));
            }
            curves.insert(c, mult);
            Ok(())
        };
        for l in p.lines {
            push(Curve::Line(l.code), l.mult)?;
        }
        for e in p.ellipses {
            push(Curve::ellipse(e.num, e.den)?, e.mult)?;
        }
        out.push(PairCurves { i: p.i, j: p.j, curves });
    }
    Ok(out)
}

const LINE_COLORS: [(LineCode, &str); 4] = [
    (LineCode::PP, "#1f77b4"),
    (LineCode::MM, "#d62728"),
    (LineCode::MP, "#2ca02c"),
    (LineCode::PM, "#9467bd"),
];
const ELLIPSE_COLORS: [&str; 6] = ["#ff7f0e", "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f"];

fn num(v: f64) -> String {
    let s = format!("{v:.6}");
    // avoid "-0.000000"
    if s.trim_start_matches('-').chars().all(|c| c == '0' || c == '.') {
        "0.000000".into()
    } else {
        s
    }
}

/// Part of `a·x + b·y = 1` inside `[−r, r]²`.
fn clip_line(a: f64, b: f64, r: f64) -> Option<((f64, f64), (f64, f64))> {
    let mut pts: Vec<(f64, f64)> = Vec::new();
    let eps = 1e-12;
    for edge in [-r, r] {
        let y = (1.0 - a * edge) / b;
        if y.abs() <= r + eps {
            pts.push((edge, y));
        }
        let x = (1.0 - b * edge) / a;
        if x.abs() <= r + eps {
            pts.push((x, edge));
        }
    }
    pts.sort_by(|p, q| p.partial_cmp(q).expect("finite"));
    pts.dedup_by(|p, q| (p.0 - q.0).abs() < eps && (p.1 - q.1).abs() < eps);
    match pts.as_slice() {
        [first, .., last] => Some((*first, *last)),
        _ => None,
    }
}

/// Renders the curves over `[−range, range]²` as an SVG document.
pub fn svg_string(curves: &CurveSet, range: f64) -> Result<String> {
    if !(range.is_finite() && range > 1.0) {
        return Err(Error::InvalidSpec(format!("plot range {range} must exceed 1")));
    }
    let r = range;
    let stroke = num(r / 150.0);
    let mut s = String::new();
    s.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    s.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"600\" height=\"600\" viewBox=\"{} {} {} {}\">\n",
        num(-r),
        num(-r),
        num(2.0 * r),
        num(2.0 * r)
    ));
    s.push_str(&format!(
        "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"white\"/>\n",
        num(-r),
        num(-r),
        num(2.0 * r),
        num(2.0 * r)
    ));
    s.push_str("<g transform=\"scale(1,-1)\" fill=\"none\">\n");
    s.push_str(&format!(
        "<g stroke=\"#999999\" stroke-width=\"{stroke}\">\n<line x1=\"{0}\" y1=\"0\" x2=\"{1}\" y2=\"0\"/>\n<line x1=\"0\" y1=\"{0}\" x2=\"0\" y2=\"{1}\"/>\n</g>\n",
        num(-r),
        num(r)
    ));
    let mut palette = ELLIPSE_COLORS.iter().cycle();
    for (c, m) in curves.iter() {
        match c {
            Curve::Line(code) => {
                let (a, b) = code.coefficients();
                let color = LINE_COLORS.iter().find(|(k, _)| *k == code).map(|(_, col)| *col).unwrap_or("black");
                if let Some(((x1, y1), (x2, y2))) = clip_line(a as f64, b as f64, r) {
                    s.push_str(&format!(
                        "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{color}\" stroke-width=\"{stroke}\"><title>{c}, multiplicity {m}</title></line>\n",
                        num(x1),
                        num(y1),
                        num(x2),
                        num(y2)
                    ));
                }
            }
            Curve::Ellipse { num: k, den } => {
                // x² + y² + c·xy = 1 diagonalizes along the diagonals:
                // (1 + c/2)u² + (1 − c/2)v² = 1.
                let (c2, _) = CyclotomicNumber::two_cos(i64::from(k), den).approx();
                let ru = 1.0 / (1.0 + c2 / 2.0).sqrt();
                let rv = 1.0 / (1.0 - c2 / 2.0).sqrt();
                let color = palette.next().expect("cycle");
                s.push_str(&format!(
                    "<ellipse cx=\"0\" cy=\"0\" rx=\"{}\" ry=\"{}\" transform=\"rotate(45)\" stroke=\"{color}\" stroke-width=\"{stroke}\"><title>{c}, multiplicity {m}</title></ellipse>\n",
                    num(ru),
                    num(rv)
                ));
            }
        }
    }
    s.push_str("</g>\n</svg>\n");
    Ok(s)
}

/// Writes [`svg_string`] to `sink`.
pub fn emit_svg(curves: &CurveSet, range: f64, sink: &mut impl Write) -> Result<()> {
    let doc = svg_string(curves, range)?;
    sink.write_all(doc.as_bytes())
        .and_then(|_| sink.flush())
        .map_err(|e| Error::SinkFailure(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dihedral::{assemble, geometric_representation, CoxeterMatrix, IrrepLabel};

    fn ell(num: u32, den: u32) -> Curve {
        Curve::ellipse(num, den).unwrap()
    }

    #[test]
    fn curve_polys() {
        assert_eq!(
            curve_poly(&Curve::Line(LineCode::PP)),
            BiPoly::from_i64_terms(&[(1, 0, 1), (0, 1, 1), (0, 0, -1)])
        );
        assert_eq!(
            curve_poly(&ell(1, 4)),
            BiPoly::from_i64_terms(&[(0, 0, 1), (2, 0, -1), (0, 2, -1)])
        );
        assert_eq!(
            curve_poly(&ell(1, 3)),
            BiPoly::from_i64_terms(&[(0, 0, 1), (2, 0, -1), (0, 2, -1), (1, 1, 1)])
        );
    }

    #[test]
    fn ellipse_labels() {
        assert_eq!(Curve::for_two_dim(2, 6), ell(1, 3));
        assert_eq!(Curve::for_two_dim(4, 6), ell(1, 3));
        assert_eq!(Curve::for_two_dim(3, 8), ell(3, 8));
        assert!(Curve::ellipse(2, 6).is_err());
        assert!(Curve::ellipse(1, 2).is_err());
        assert!(Curve::ellipse(0, 5).is_err());
        assert!(ell(1, 5) < ell(1, 4));
        assert!(Curve::Line(LineCode::PM) < ell(1, 8));
    }

    #[test]
    fn spectra_from_specs() {
        let regular = RepSpec::regular(3).unwrap();
        let expected = CurveSet::from_pairs([
            (Curve::Line(LineCode::PP), 1),
            (Curve::Line(LineCode::MM), 1),
            (ell(1, 3), 2),
        ]);
        assert_eq!(spectrum_of_spec(&regular).unwrap(), expected);

        let spec = RepSpec::from_support(2, [IrrepLabel::OneDim(3), IrrepLabel::OneDim(4)]).unwrap();
        assert_eq!(
            spectrum_of_spec(&spec).unwrap(),
            CurveSet::from_pairs([(Curve::Line(LineCode::MP), 1), (Curve::Line(LineCode::PM), 1)])
        );

        let spec = RepSpec::from_support(6, [IrrepLabel::TwoDim(2)]).unwrap();
        assert_eq!(spectrum_of_spec(&spec).unwrap(), CurveSet::from_pairs([(ell(1, 3), 1)]));
    }

    #[test]
    fn spectra_from_matrices() {
        let regular = RepSpec::regular(3).unwrap();
        let (a, b) = assemble(&regular).unwrap();
        let ps = spectrum_of_matrices(&a, &b, 64).unwrap();
        assert_eq!(ps.n, 3);
        assert_eq!(ps.curves, spectrum_of_spec(&regular).unwrap());
        assert_eq!(ps.poly, ps.curves.product());

        let one = CycMatrix::identity(1);
        let ps = spectrum_of_matrices(&one, &one, 64).unwrap();
        assert_eq!(ps.n, 2);
        assert_eq!(ps.poly, curve_poly(&Curve::Line(LineCode::PP)));
        assert_eq!(ps.curves, CurveSet::from_pairs([(Curve::Line(LineCode::PP), 1)]));

        let geo = geometric_representation(&CoxeterMatrix::dihedral(3).unwrap());
        let (a, b) = geo.pair(0, 1);
        let ps = spectrum_of_matrices(a, b, 64).unwrap();
        assert_eq!(ps.curves, CurveSet::from_pairs([(ell(1, 3), 1)]));
    }

    #[test]
    fn unfactorable_pencil() {
        // A reflection and the identity pencil times 2 is not a catalog product.
        let p = BiPoly::from_i64_terms(&[(2, 0, 1), (0, 0, -2)]);
        assert!(matches!(
            factor_over(&p, &candidate_curves(4)),
            Err(Error::NotFullyFactorable { .. })
        ));
    }

    #[test]
    fn support_equality() {
        let pp = Curve::Line(LineCode::PP);
        assert!(curveset_equal_support(
            &CurveSet::from_pairs([(pp, 1)]),
            &CurveSet::from_pairs([(pp, 7)])
        ));
        assert!(!curveset_equal_support(
            &CurveSet::from_pairs([(pp, 1)]),
            &CurveSet::from_pairs([(Curve::Line(LineCode::MM), 1)])
        ));
    }

    #[test]
    fn json_round_trip() {
        let pairs = vec![
            PairCurves {
                i: 0,
                j: 1,
                curves: CurveSet::from_pairs([(Curve::Line(LineCode::MP), 1), (ell(1, 4), 2)]),
            },
            PairCurves {
                i: 0,
                j: 2,
                curves: CurveSet::new(),
            },
        ];
        let text = curvesets_to_json(&pairs);
        assert_eq!(curvesets_from_json(&text).unwrap(), pairs);
        assert!(matches!(
            curvesets_from_json(r#"{"pairs":[{"i":0,"j":1,"ellipses":[{"num":2,"den":8,"mult":1}]}]}"#),
            Err(Error::InvalidCurveSet(_))
        ));
        assert!(matches!(
            curvesets_from_json(r#"{"pairs":[{"i":0,"j":1,"lines":[{"code":"QQ","mult":1}]}]}"#),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            curvesets_from_json(r#"{"pairs":[{"i":1,"j":1}]}"#),
            Err(Error::InvalidCurveSet(_))
        ));
    }

    #[test]
    fn svg_output() {
        let empty = svg_string(&CurveSet::new(), 3.0).unwrap();
        assert!(!empty.contains("<ellipse"));
        assert_eq!(empty.matches("<line").count(), 2);

        let circle = svg_string(&CurveSet::from_pairs([(ell(1, 4), 1)]), 2.0).unwrap();
        assert!(circle.contains("rx=\"1.000000\" ry=\"1.000000\""));

        let square = CurveSet::from_pairs(LineCode::ALL.map(|c| (Curve::Line(c), 1)));
        let doc = svg_string(&square, 4.0).unwrap();
        assert_eq!(doc.matches("<line").count(), 6);
        assert_eq!(doc, svg_string(&square, 4.0).unwrap());
        assert!(svg_string(&square, 1.0).is_err());
    }

    #[test]
    fn clipping() {
        // x + y = 1 inside [-4,4]^2 runs from (-3, 4) to (4, -3)
        let ((x1, y1), (x2, y2)) = clip_line(1.0, 1.0, 4.0).unwrap();
        assert_eq!((x1, y1, x2, y2), (-3.0, 4.0, 4.0, -3.0));
    }
}
