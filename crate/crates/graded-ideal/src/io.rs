//! Line-oriented ideal file format.
//!
//! ```text
//! n = 5
//! x*z + y^2
//! x^2*y + x*y*z
//! x^3 + x^2*z
//! # support: (0:0:1) x 3 tangent: x
//! # support: (-1:1:1) x 1
//! ```
//!
//! The header declares the expected length; each following non-comment line
//! is one generator in the polynomial grammar.  `# support:` lines are
//! optional machine-readable hints; any other `#` line is a plain comment.

use exact_core::{parse_polynomial, HomogeneousPolynomial, Rational};

use crate::{HomogeneousIdeal, IdealError, PointPlace, PointScheme, SupportHint};

/// Parsed contents of an ideal file.
#[derive(Debug, Clone)]
pub struct IdealFile {
    pub n: u32,
    pub generators: Vec<HomogeneousPolynomial>,
    pub hints: Vec<SupportHint>,
}

impl IdealFile {
    /// Saturate and validate into a [`PointScheme`].
    pub fn to_scheme(&self) -> Result<PointScheme, IdealError> {
        PointScheme::new(
            HomogeneousIdeal::from_generators(self.generators.clone()),
            self.n,
            self.hints.clone(),
        )
    }
}

fn parse_rational_text(text: &str) -> Result<Rational, IdealError> {
    let text = text.trim();
    let (sign, rest) = match text.strip_prefix('-') {
        Some(rest) => (-1i64, rest),
        None => (1, text.strip_prefix('+').unwrap_or(text)),
    };
    let (num, den) = match rest.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (rest, "1"),
    };
    let num: i128 = num
        .parse()
        .map_err(|_| IdealError::FileFormat(format!("bad rational `{text}`")))?;
    let den: i128 = den
        .parse()
        .map_err(|_| IdealError::FileFormat(format!("bad rational `{text}`")))?;
    if den == 0 {
        return Err(IdealError::FileFormat(format!("zero denominator in `{text}`")));
    }
    Ok(Rational::new((sign as i128 * num).into(), den.into()))
}

fn parse_support_line(line: &str) -> Result<SupportHint, IdealError> {
    // format: (a:b:c) x mult [tangent: <linear form>]
    let body = line.trim();
    let open = body
        .find('(')
        .ok_or_else(|| IdealError::FileFormat(format!("missing point in `{line}`")))?;
    let close = body
        .find(')')
        .ok_or_else(|| IdealError::FileFormat(format!("missing `)` in `{line}`")))?;
    let coords: Vec<&str> = body[open + 1..close].split(':').collect();
    if coords.len() != 3 {
        return Err(IdealError::FileFormat(format!(
            "expected three coordinates in `{line}`"
        )));
    }
    let point = PointPlace::new([
        parse_rational_text(coords[0])?,
        parse_rational_text(coords[1])?,
        parse_rational_text(coords[2])?,
    ])?;
    let rest = body[close + 1..].trim();
    let rest = rest
        .strip_prefix('x')
        .ok_or_else(|| IdealError::FileFormat(format!("missing `x mult` in `{line}`")))?
        .trim();
    let (mult_text, tangent_text) = match rest.split_once("tangent:") {
        Some((m, t)) => (m.trim(), Some(t.trim())),
        None => (rest, None),
    };
    let multiplicity: u32 = mult_text
        .parse()
        .map_err(|_| IdealError::FileFormat(format!("bad multiplicity in `{line}`")))?;
    let tangent = match tangent_text {
        Some(t) => {
            let form = parse_polynomial(t).map_err(IdealError::Core)?;
            if form.degree() != 1 {
                return Err(IdealError::FileFormat(format!(
                    "tangent must be linear in `{line}`"
                )));
            }
            Some(form)
        }
        None => None,
    };
    Ok(SupportHint {
        point,
        multiplicity,
        tangent,
    })
}

/// Parse the ideal file format.
pub fn parse_ideal_file(text: &str) -> Result<IdealFile, IdealError> {
    let mut n = None;
    let mut generators = Vec::new();
    let mut hints = Vec::new();
    for raw in text.lines() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('#') {
            if let Some(support) = rest.trim().strip_prefix("support:") {
                hints.push(parse_support_line(support)?);
            }
            continue;
        }
        if n.is_none() {
            let rest = line
                .strip_prefix('n')
                .map(str::trim)
                .and_then(|r| r.strip_prefix('='))
                .ok_or_else(|| {
                    IdealError::FileFormat("first line must be the `n = <int>` header".into())
                })?;
            n = Some(rest.trim().parse::<u32>().map_err(|_| {
                IdealError::FileFormat(format!("bad length in header `{line}`"))
            })?);
            continue;
        }
        generators.push(parse_polynomial(line).map_err(IdealError::Core)?);
    }
    let n = n.ok_or_else(|| IdealError::FileFormat("missing `n = <int>` header".into()))?;
    if generators.is_empty() {
        return Err(IdealError::FileFormat("no generators given".into()));
    }
    Ok(IdealFile {
        n,
        generators,
        hints,
    })
}

/// Render back into the file format (canonical form).
pub fn render_ideal_file(file: &IdealFile) -> String {
    let mut out = format!("n = {}\n", file.n);
    for g in &file.generators {
        out.push_str(&g.to_string());
        out.push('\n');
    }
    for h in &file.hints {
        let [a, b, c] = h.point.coords();
        out.push_str(&format!("# support: ({a}:{b}:{c}) x {}", h.multiplicity));
        if let Some(t) = &h.tangent {
            out.push_str(&format!(" tangent: {t}"));
        }
        out.push('\n');
    }
    out
}
