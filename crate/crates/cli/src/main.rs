//! `gitp2`: exact stability computations for zero-dimensional subschemes
//! of the projective plane.
//!
//! Exit codes: 0 on success, 1 when a verification suite reports a
//! failing check, 2 on usage or input errors.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use num_traits::Zero;
use serde_json::{json, Value};

use cli::util::{parse_matrix, parse_rational, parse_rational_list, parse_subgroup, show};
use cli::verify::run_suite;
use degeneration::{affine_weight_of, corner_cut, corner_cut_ideal, flat_limit, off_wall};
use exact_core::Rational;
use graded_ideal::{parse_ideal_file, PointScheme};
use hilbert_git::{
    chow_stability, hilbert_point_defined, mu, state_polytope, ChowVerdict, ChowWitness,
    Linearization, MuOutcome,
};
use final_model_7::{
    act, basis, coordinates, family_x1, family_x2, family_x3, minimal_orbit, mu14_max,
    unstable_pattern, CoordVector, MinimalOrbitParam,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Human,
    Json,
}

#[derive(Parser)]
#[command(name = "gitp2", version, about = "Exact GIT stability of point configurations in the plane")]
struct Cli {
    /// Seed for every randomized construction.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Output::Human)]
    output: Output,
    /// Cap for degree scans (defaults chosen per command).
    #[arg(long, global = true)]
    degree_cap: Option<u32>,
    /// Worker threads (reserved; the exact kernels are single-threaded).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Hilbert-Mumford index of an ideal against a diagonal subgroup.
    Mu {
        /// Ideal file (a `n = …` header followed by generator lines).
        #[arg(long)]
        ideal: PathBuf,
        /// Linearization parameter: a rational, or `inf` for the Chow slope.
        #[arg(long)]
        m: String,
        /// Diagonal subgroup as `a,b` (weights `(a, b, -a-b)`).
        #[arg(long)]
        lambda: String,
        /// Interpolation base degree (defaults to the first defined one).
        #[arg(long)]
        base_degree: Option<u32>,
    },
    /// Vertices of the degree-m state polytope of an ideal.
    StatePolytope {
        #[arg(long)]
        ideal: PathBuf,
        #[arg(long)]
        degree: u32,
    },
    /// Flat limit of an ideal under a diagonal subgroup.
    Limit {
        #[arg(long)]
        ideal: PathBuf,
        /// Diagonal subgroup as `a,b`.
        #[arg(long)]
        lambda: String,
    },
    /// Corner-cut staircase for a chamber weight.
    CornerCut {
        #[arg(long)]
        n: u32,
        /// Diagonal parameter r (must avoid the walls for this n).
        #[arg(long)]
        r: String,
    },
    /// All GIT walls of the three witness families for length n.
    WallScan {
        #[arg(long)]
        n: u32,
    },
    /// Numerical tilt-stability walls for the ideal sheaf class of n points.
    BridgelandWalls {
        #[arg(long)]
        n: u32,
    },
    /// Quiver relations, character pairings, and thresholds for length n.
    QuiverCheck {
        #[arg(long)]
        n: usize,
    },
    /// The length-7 final model.
    Final7 {
        #[command(subcommand)]
        command: Final7Command,
    },
    /// Replay a frozen verification suite.
    Verify {
        /// One of: n5, walls, bridgeland, quiver, final7, corner, all.
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// Chow stability of the cycle of an ideal.
    Chow {
        #[arg(long)]
        ideal: PathBuf,
    },
}

#[derive(Subcommand)]
enum Final7Command {
    /// The fifteen basis sections.
    Basis,
    /// Act by a 3×3 matrix on a coordinate vector.
    Act {
        /// Matrix as `a,b,c;d,e,f;g,h,i`.
        #[arg(long)]
        matrix: String,
        /// Fifteen comma-separated coordinates.
        #[arg(long)]
        coords: String,
    },
    /// Maximal diagonal index over the stability interval.
    Mu {
        #[arg(long)]
        coords: String,
    },
    /// The minimal orbit at a parameter (`inf` for the ideal point).
    Orbit {
        #[arg(long)]
        w: String,
    },
    /// One of the three boundary families.
    Family {
        /// `x1`, `x2`, or `x3`.
        #[arg(long)]
        which: String,
        /// Family parameters, comma-separated.
        #[arg(long)]
        params: String,
    },
}

fn load_scheme(path: &PathBuf) -> Result<PointScheme> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    let file = parse_ideal_file(&text).with_context(|| format!("parsing {}", path.display()))?;
    file.to_scheme()
        .with_context(|| format!("validating the ideal in {}", path.display()))
}

fn default_base(z: &PointScheme) -> Result<u32> {
    (1..=z.length() + 2)
        .find(|&m| hilbert_point_defined(z, m))
        .ok_or_else(|| anyhow!("no defined Hilbert point up to degree {}", z.length() + 2))
}

fn coord_vector(text: &str) -> Result<CoordVector> {
    let list = parse_rational_list(text)?;
    let arr: [Rational; 15] = list
        .try_into()
        .map_err(|v: Vec<Rational>| anyhow!("expected 15 coordinates, found {}", v.len()))?;
    CoordVector::new(arr).map_err(|e| anyhow!("{e}"))
}

fn coords_value(v: &CoordVector) -> Value {
    Value::Array(v.coords().iter().map(|c| json!(show(c))).collect())
}

fn generators_value(ideal: &graded_ideal::HomogeneousIdeal) -> Value {
    match ideal.generators() {
        Some(gens) => Value::Array(gens.iter().map(|g| json!(g.to_string())).collect()),
        None => Value::Null,
    }
}

fn chow_witness_value(w: &ChowWitness) -> Value {
    match w {
        ChowWitness::Line { line, mass } => json!({
            "kind": "line",
            "line": line.as_ref().map(|l| l.to_string()),
            "mass": mass,
        }),
        ChowWitness::Point {
            point,
            multiplicity,
        } => {
            let [a, b, c] = point.coords();
            json!({
                "kind": "point",
                "point": format!("({}:{}:{})", show(a), show(b), show(c)),
                "multiplicity": multiplicity,
            })
        }
    }
}

fn run(cli: &Cli) -> Result<(Value, bool)> {
    let seed = cli.seed;
    let value = match &cli.command {
        Command::Mu {
            ideal,
            m,
            lambda,
            base_degree,
        } => {
            let z = load_scheme(ideal)?;
            let lambda = parse_subgroup(lambda)?;
            let base = match base_degree {
                Some(d) => *d,
                None => default_base(&z)?,
            };
            let linearization = if m.trim() == "inf" {
                Linearization::Infinity
            } else {
                Linearization::finite(parse_rational(m)?)
            };
            let outcome = mu(&z, &linearization, &lambda, base)?;
            let (kind, v) = match outcome {
                MuOutcome::Finite(v) => ("finite", v),
                MuOutcome::InfinitySlope(s) => ("slope-at-infinity", s),
            };
            json!({
                "command": "mu",
                "length": z.length(),
                "base_degree": base,
                "lambda": lambda.to_string(),
                "m": m.trim(),
                "kind": kind,
                "mu": show(&v),
            })
        }
        Command::StatePolytope { ideal, degree } => {
            let z = load_scheme(ideal)?;
            let polytope = state_polytope(&z, *degree)?;
            json!({
                "command": "state-polytope",
                "length": z.length(),
                "degree": polytope.degree,
                "vertices": polytope.vertices,
            })
        }
        Command::Limit { ideal, lambda } => {
            let z = load_scheme(ideal)?;
            let lambda = parse_subgroup(lambda)?;
            let limit = flat_limit(&z, &lambda)?;
            json!({
                "command": "limit",
                "length": limit.length(),
                "lambda": lambda.to_string(),
                "generators": generators_value(limit.ideal()),
            })
        }
        Command::CornerCut { n, r } => {
            let r = parse_rational(r)?;
            if !off_wall(&r, *n) {
                bail!("r = {} lies on a wall for length {n}", show(&r));
            }
            let cut = corner_cut(&affine_weight_of(&r), *n).map_err(|e| anyhow!("{e}"))?;
            let ideal = corner_cut_ideal(&cut);
            json!({
                "command": "corner-cut",
                "n": n,
                "r": show(&r),
                "cells": cut.cells(),
                "generators": generators_value(&ideal),
            })
        }
        Command::WallScan { n } => {
            let table = wall_atlas::wall_table(*n).map_err(|e| anyhow!("{e}"))?;
            let walls: Vec<Value> = table
                .iter()
                .map(|w| {
                    json!({
                        "family": format!("{:?}", w.family),
                        "m": show(&w.m_star),
                        "lambda": w.destabilizer.to_string(),
                        "base_degree": w.base_degree,
                    })
                })
                .collect();
            json!({ "command": "wall-scan", "n": n, "walls": walls })
        }
        Command::BridgelandWalls { n } => {
            let walls: Vec<Value> = bridgeland::walls_catalog(*n)
                .iter()
                .map(|w| {
                    json!({
                        "l": show(&w.l),
                        "center": show(&w.center),
                        "radius_sq": show(&w.radius_sq),
                        "divisor": show(&w.divisor),
                    })
                })
                .collect();
            json!({
                "command": "bridgeland-walls",
                "n": n,
                "slope_two_effective": bridgeland::d2_effective(*n),
                "walls": walls,
            })
        }
        Command::QuiverCheck { n } => {
            let checks = cli_quiver_checks(*n)?;
            json!({ "command": "quiver-check", "n": n, "checks": checks })
        }
        Command::Final7 { command } => final7(command)?,
        Command::Verify { suite } => {
            let checks = run_suite(suite, seed)?
                .ok_or_else(|| anyhow!("unknown suite `{suite}`"))?;
            let failed: Vec<&str> = checks
                .iter()
                .filter(|c| !c.pass)
                .map(|c| c.id.as_str())
                .collect();
            let ok = failed.is_empty();
            let value = json!({
                "command": "verify",
                "suite": suite,
                "seed": seed,
                "total": checks.len(),
                "failed": failed,
                "checks": checks,
            });
            return Ok((value, ok));
        }
        Command::Chow { ideal } => {
            let z = load_scheme(ideal)?;
            let cycle = z.cycle()?;
            let (verdict, witness) = match chow_stability(&cycle) {
                ChowVerdict::Stable => ("stable", Value::Null),
                ChowVerdict::StrictlySemistable(w) => {
                    ("strictly-semistable", chow_witness_value(&w))
                }
                ChowVerdict::Unstable(w) => ("unstable", chow_witness_value(&w)),
            };
            json!({
                "command": "chow",
                "length": z.length(),
                "verdict": verdict,
                "witness": witness,
            })
        }
    };
    Ok((value, true))
}

fn cli_quiver_checks(n: usize) -> Result<Vec<Value>> {
    use quiver_stability::{characters, rep_locus1, rep_locus2, rep_locus3};
    if n < 4 {
        bail!("the quiver model needs n >= 4");
    }
    let (t1, t2) = characters(n);
    let mut out = Vec::new();
    let l1 = rep_locus1(n);
    out.push(json!({
        "locus": "line-plus-point",
        "relations_hold": l1.relations_hold(),
        "dimension_vector": [n, n - 1, n - 3],
        "outer_pairing": t1.pair(l1.dimension_vector()),
        "inner_pairing": t2.pair(l1.dimension_vector()),
    }));
    let a = vec![exact_core::rat(1); n - 3];
    let l2 = rep_locus2(n, &a).map_err(|e| anyhow!("{e}"))?;
    out.push(json!({
        "locus": "point-extension",
        "relations_hold": l2.relations_hold(),
        "outer_pairing": t1.pair(l2.dimension_vector()),
        "inner_pairing": t2.pair(l2.dimension_vector()),
    }));
    if n >= 6 {
        let a: Vec<Rational> = (1..=n as i64 - 4).map(exact_core::rat).collect();
        let l3 = rep_locus3(n, &a).map_err(|e| anyhow!("{e}"))?;
        out.push(json!({
            "locus": "length-two-extension",
            "relations_hold": l3.relations_hold(),
            "outer_pairing": t1.pair(l3.dimension_vector()),
            "inner_pairing": t2.pair(l3.dimension_vector()),
        }));
    }
    Ok(out)
}

fn final7(command: &Final7Command) -> Result<Value> {
    Ok(match command {
        Final7Command::Basis => {
            let sections: Vec<Value> = basis()
                .iter()
                .map(|s| {
                    let (f, g, h) = s.components();
                    json!([f.to_string(), g.to_string(), h.to_string()])
                })
                .collect();
            json!({ "command": "final7-basis", "sections": sections })
        }
        Final7Command::Act { matrix, coords } => {
            let a = parse_matrix(matrix)?;
            let v = coord_vector(coords)?;
            let moved = act(&a, &v.section())?;
            let image = coordinates(&moved)
                .ok_or_else(|| anyhow!("the image does not lie in the fifteen-dimensional space"))?;
            json!({
                "command": "final7-act",
                "coords": coords_value(&v),
                "image": coords_value(&image),
            })
        }
        Final7Command::Mu { coords } => {
            let v = coord_vector(coords)?;
            let (max, argmax) = mu14_max(&v);
            json!({
                "command": "final7-mu",
                "coords": coords_value(&v),
                "max": show(&max),
                "argmax_r": show(&argmax),
                "pattern": format!("{:?}", unstable_pattern(&v)),
                "semistable_on_interval": max.is_zero(),
            })
        }
        Final7Command::Orbit { w } => {
            let param = if w.trim() == "inf" {
                MinimalOrbitParam::Infinity
            } else {
                MinimalOrbitParam::Finite(parse_rational(w)?)
            };
            let orbit = minimal_orbit(&param)?;
            json!({
                "command": "final7-orbit",
                "w": w.trim(),
                "coords": coords_value(&orbit.coords),
                "ideal_point": param.is_ideal_point(),
                "generators": orbit
                    .scheme
                    .as_ref()
                    .map(|z| generators_value(z.ideal()))
                    .unwrap_or(Value::Null),
            })
        }
        Final7Command::Family { which, params } => {
            let params = parse_rational_list(params)?;
            let (coords, scheme) = match (which.as_str(), params.as_slice()) {
                ("x1", [u]) => family_x1(u)?,
                ("x2", [t, u]) => family_x2(t, u)?,
                ("x3", [u, v, w]) => family_x3(u, v, w)?,
                ("x1", _) => bail!("family x1 takes one parameter"),
                ("x2", _) => bail!("family x2 takes two parameters"),
                ("x3", _) => bail!("family x3 takes three parameters"),
                _ => bail!("unknown family `{which}` (expected x1, x2, or x3)"),
            };
            json!({
                "command": "final7-family",
                "which": which,
                "coords": coords_value(&coords),
                "pattern": format!("{:?}", unstable_pattern(&coords)),
                "generators": generators_value(scheme.ideal()),
            })
        }
    })
}

fn print_human(value: &Value, indent: usize) {
    let pad = "  ".repeat(indent);
    match value {
        Value::Object(map) => {
            for (key, inner) in map {
                match inner {
                    Value::Object(_) | Value::Array(_) => {
                        println!("{pad}{key}:");
                        print_human(inner, indent + 1);
                    }
                    _ => println!("{pad}{key}: {}", scalar(inner)),
                }
            }
        }
        Value::Array(items) => {
            for inner in items {
                match inner {
                    Value::Object(_) => {
                        println!("{pad}-");
                        print_human(inner, indent + 1);
                    }
                    Value::Array(_) => println!("{pad}- {}", serde_json::to_string(inner).unwrap()),
                    _ => println!("{pad}- {}", scalar(inner)),
                }
            }
        }
        _ => println!("{pad}{}", scalar(value)),
    }
}

fn scalar(value: &Value) -> String {
    match value {
        Value::String(s) => s.clone(),
        Value::Null => "-".to_string(),
        other => other.to_string(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((value, ok)) => {
            match cli.output {
                Output::Json => println!("{}", serde_json::to_string_pretty(&value).unwrap()),
                Output::Human => print_human(&value, 0),
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(error) => {
            eprintln!("error: {error:#}");
            ExitCode::from(2)
        }
    }
}
