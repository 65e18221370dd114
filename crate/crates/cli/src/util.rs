//! Small parsers for command-line arguments: rationals, weight pairs,
//! coordinate vectors, and 3×3 matrices.

use anyhow::{anyhow, bail, Context, Result};
use exact_core::{OneParamSubgroup, Rational, RationalMatrix};

/// Parse a rational like `3`, `-9/2`, or `+1/3`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let (sign, rest) = match text.strip_prefix('-') {
        Some(rest) => (-1i64, rest),
        None => (1, text.strip_prefix('+').unwrap_or(text)),
    };
    let (num, den) = match rest.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (rest, "1"),
    };
    let num: i64 = num.parse().with_context(|| format!("bad rational `{text}`"))?;
    let den: i64 = den.parse().with_context(|| format!("bad rational `{text}`"))?;
    if den == 0 {
        bail!("zero denominator in `{text}`");
    }
    Ok(Rational::new((sign * num).into(), den.into()))
}

/// Parse a comma-separated list of rationals.
pub fn parse_rational_list(text: &str) -> Result<Vec<Rational>> {
    text.split(',').map(parse_rational).collect()
}

/// Parse a one-parameter subgroup from `a,b` (weights `(a, b, -a-b)`).
pub fn parse_subgroup(text: &str) -> Result<OneParamSubgroup> {
    let parts = parse_rational_list(text)?;
    if parts.len() != 2 {
        bail!("expected two comma-separated weights, found {}", parts.len());
    }
    let lambda = OneParamSubgroup::new(parts[0].clone(), parts[1].clone())
        .ok_or_else(|| anyhow!("invalid subgroup weights"))?;
    if lambda.is_trivial() {
        bail!("the weights 0,0 give the trivial subgroup");
    }
    Ok(lambda)
}

/// Parse a 3×3 matrix from `a,b,c;d,e,f;g,h,i` (rows separated by `;`).
pub fn parse_matrix(text: &str) -> Result<RationalMatrix> {
    let rows: Vec<Vec<Rational>> = text
        .split(';')
        .map(parse_rational_list)
        .collect::<Result<_>>()?;
    if rows.len() != 3 || rows.iter().any(|r| r.len() != 3) {
        bail!("expected three rows of three entries");
    }
    Ok(RationalMatrix::from_rows(rows))
}

/// Render a rational in the `p/q` (or plain integer) form used everywhere
/// in the JSON output.
pub fn show(r: &Rational) -> String {
    r.to_string()
}
