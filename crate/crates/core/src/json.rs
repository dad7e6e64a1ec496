//! JSON encodings of the file formats: plumbing graphs, manifold records,
//! and graded polynomials.
//!
//! All integers are emitted as JSON numbers with their full digit strings
//! (`serde_json`'s `arbitrary_precision` mode), never as floats; rationals
//! are emitted as `"p/q"` strings in lowest terms.  Object keys keep a fixed
//! order and polynomial terms follow the canonical partition order, so equal
//! values serialize to identical text.
//!
//! Parsing is strict: floats where integers are expected, unknown structure,
//! or records violating the manifold invariants are reported as errors (JSON
//! syntax errors keep `serde_json`'s line/column info).

use num_bigint::BigInt;
use serde_json::{json, Map, Number, Value};

use crate::error::{Error, Result};
use crate::genera::PontrjaginNumbers;
use crate::numbers::{format_rational, parse_rational};
use crate::plumbing::{PlumbingGraph, PlumbingVertex};
use crate::surgery::{ChernData, VirtualManifold};
use crate::symmetric::{GradedPoly, Partition};

/// A `BigInt` as a JSON number (exact, arbitrary precision).
pub fn bigint_to_json(b: &BigInt) -> Value {
    let n: Number = serde_json::from_str(&b.to_string())
        .expect("integer digit strings are valid JSON numbers");
    Value::Number(n)
}

/// Reads an exact integer from a JSON value; floats and exponents are
/// errors, not truncations.
pub fn bigint_from_json(v: &Value, what: &str) -> Result<BigInt> {
    let n = match v {
        Value::Number(n) => n,
        other => {
            return Err(Error::parse(format!(
                "{what}: expected an integer, got {other}"
            )))
        }
    };
    let s = n.to_string();
    s.parse::<BigInt>()
        .map_err(|_| Error::parse(format!("{what}: expected an integer, got {s}")))
}

fn u32_from_json(v: &Value, what: &str) -> Result<u32> {
    let b = bigint_from_json(v, what)?;
    u32::try_from(&b).map_err(|_| Error::parse(format!("{what}: {b} is out of range")))
}

fn i64_from_json(v: &Value, what: &str) -> Result<i64> {
    let b = bigint_from_json(v, what)?;
    i64::try_from(&b).map_err(|_| Error::parse(format!("{what}: {b} is out of range")))
}

fn bool_from_json(v: &Value, what: &str) -> Result<bool> {
    v.as_bool()
        .ok_or_else(|| Error::parse(format!("{what}: expected a boolean")))
}

fn as_object<'a>(v: &'a Value, what: &str) -> Result<&'a Map<String, Value>> {
    v.as_object()
        .ok_or_else(|| Error::parse(format!("{what}: expected an object")))
}

fn as_array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array()
        .ok_or_else(|| Error::parse(format!("{what}: expected an array")))
}

fn field<'a>(obj: &'a Map<String, Value>, key: &str, what: &str) -> Result<&'a Value> {
    obj.get(key)
        .ok_or_else(|| Error::parse(format!("{what}: missing field `{key}`")))
}

fn partition_from_json(v: &Value, what: &str) -> Result<Partition> {
    let arr = as_array(v, what)?;
    let parts = arr
        .iter()
        .map(|p| u32_from_json(p, what))
        .collect::<Result<Vec<_>>>()?;
    Partition::try_new(parts).map_err(|e| Error::parse(format!("{what}: {e}")))
}

// ---------------------------------------------------------------------------
// plumbing graphs

/// Encodes a plumbing graph as
/// `{"fiber_half_dim": m, "vertices": [{"id", "euler"}, ...], "edges": [[a, b], ...]}`.
pub fn graph_to_json(g: &PlumbingGraph) -> Value {
    json!({
        "fiber_half_dim": g.fiber_half_dim(),
        "vertices": g.vertices().iter()
            .map(|v| json!({"id": v.id, "euler": v.euler}))
            .collect::<Vec<_>>(),
        "edges": g.edges().iter().map(|&(a, b)| json!([a, b])).collect::<Vec<_>>(),
    })
}

/// Decodes and validates a plumbing graph.
pub fn graph_from_json(v: &Value) -> Result<PlumbingGraph> {
    let obj = as_object(v, "plumbing graph")?;
    let m = u32_from_json(field(obj, "fiber_half_dim", "plumbing graph")?, "fiber_half_dim")?;
    let mut vertices = Vec::new();
    for (i, vv) in as_array(field(obj, "vertices", "plumbing graph")?, "vertices")?
        .iter()
        .enumerate()
    {
        let what = format!("vertices[{i}]");
        let vo = as_object(vv, &what)?;
        vertices.push(PlumbingVertex {
            id: u32_from_json(field(vo, "id", &what)?, &format!("{what}.id"))?,
            euler: i64_from_json(field(vo, "euler", &what)?, &format!("{what}.euler"))?,
        });
    }
    let mut edges = Vec::new();
    for (i, ev) in as_array(field(obj, "edges", "plumbing graph")?, "edges")?
        .iter()
        .enumerate()
    {
        let what = format!("edges[{i}]");
        let pair = as_array(ev, &what)?;
        if pair.len() != 2 {
            return Err(Error::parse(format!("{what}: expected a pair [a, b]")));
        }
        edges.push((
            u32_from_json(&pair[0], &what)?,
            u32_from_json(&pair[1], &what)?,
        ));
    }
    PlumbingGraph::new(m, vertices, edges)
}

/// Parses a plumbing graph from JSON text.
pub fn graph_from_str(s: &str) -> Result<PlumbingGraph> {
    let v: Value = serde_json::from_str(s)?;
    graph_from_json(&v)
}

/// Pretty-printed graph JSON.
pub fn graph_to_string(g: &PlumbingGraph) -> String {
    serde_json::to_string_pretty(&graph_to_json(g)).expect("graph JSON serializes")
}

// ---------------------------------------------------------------------------
// manifold records

/// Encodes a manifold record with the fixed key order `dim, chi, sigma,
/// pontrjagin, chern_decomposable, chern_top_stable, spin,
/// almost_parallelisable, name`.
///
/// Absent structures encode as `null`: a record with no Chern data has
/// `"chern_decomposable": null`, while recorded-but-empty data is `[]`.
pub fn manifold_to_json(m: &VirtualManifold) -> Value {
    let pontrjagin = match &m.pontrjagin {
        None => Value::Null,
        Some(pn) => Value::Array(
            pn.iter()
                .map(|(la, v)| {
                    json!({
                        "partition": la.parts(),
                        "value": bigint_to_json(v),
                    })
                })
                .collect(),
        ),
    };
    let (chern_decomposable, chern_top_stable) = match &m.chern {
        None => (Value::Null, Value::Null),
        Some(cd) => (
            Value::Array(
                cd.iter_decomposable()
                    .map(|(&(i, j), v)| {
                        json!({"i": i, "j": j, "value": bigint_to_json(v)})
                    })
                    .collect(),
            ),
            match cd.top_stable() {
                None => Value::Null,
                Some(v) => bigint_to_json(v),
            },
        ),
    };
    json!({
        "dim": m.dim,
        "chi": bigint_to_json(&m.chi),
        "sigma": bigint_to_json(&m.sigma),
        "pontrjagin": pontrjagin,
        "chern_decomposable": chern_decomposable,
        "chern_top_stable": chern_top_stable,
        "spin": m.spin,
        "almost_parallelisable": m.almost_parallelisable,
        "name": m.name,
    })
}

/// Decodes a manifold record, enforcing every record invariant (via
/// [`VirtualManifold::new`]).
pub fn manifold_from_json(v: &Value) -> Result<VirtualManifold> {
    let obj = as_object(v, "manifold record")?;
    let dim = u32_from_json(field(obj, "dim", "manifold record")?, "dim")?;
    let chi = bigint_from_json(field(obj, "chi", "manifold record")?, "chi")?;
    let sigma = bigint_from_json(field(obj, "sigma", "manifold record")?, "sigma")?;

    let pontrjagin = match field(obj, "pontrjagin", "manifold record")? {
        Value::Null => None,
        arr => {
            let entries = as_array(arr, "pontrjagin")?;
            if entries.is_empty() && dim % 4 != 0 {
                None
            } else {
                let mut pn = PontrjaginNumbers::new(dim).map_err(|_| {
                    Error::parse(format!(
                        "pontrjagin: numbers listed but dim = {dim} is not a multiple of 4"
                    ))
                })?;
                for (i, e) in entries.iter().enumerate() {
                    let what = format!("pontrjagin[{i}]");
                    let eo = as_object(e, &what)?;
                    let la = partition_from_json(
                        field(eo, "partition", &what)?,
                        &format!("{what}.partition"),
                    )?;
                    let value =
                        bigint_from_json(field(eo, "value", &what)?, &format!("{what}.value"))?;
                    pn.set(la, value)
                        .map_err(|e| Error::parse(format!("{what}: {e}")))?;
                }
                Some(pn)
            }
        }
    };

    let decomposable = field(obj, "chern_decomposable", "manifold record")?;
    let top_stable = field(obj, "chern_top_stable", "manifold record")?;
    let chern = match (decomposable, top_stable) {
        (Value::Null, Value::Null) => None,
        (dec, top) => {
            if dim % 2 != 0 {
                return Err(Error::parse(format!(
                    "chern data listed but dim = {dim} is odd"
                )));
            }
            let mut cd = ChernData::new(dim / 2);
            if !dec.is_null() {
                for (i, e) in as_array(dec, "chern_decomposable")?.iter().enumerate() {
                    let what = format!("chern_decomposable[{i}]");
                    let eo = as_object(e, &what)?;
                    let ci = u32_from_json(field(eo, "i", &what)?, &format!("{what}.i"))?;
                    let cj = u32_from_json(field(eo, "j", &what)?, &format!("{what}.j"))?;
                    let value =
                        bigint_from_json(field(eo, "value", &what)?, &format!("{what}.value"))?;
                    cd.set_decomposable(ci, cj, value)
                        .map_err(|e| Error::parse(format!("{what}: {e}")))?;
                }
            }
            if !top.is_null() {
                cd.set_top_stable(Some(bigint_from_json(top, "chern_top_stable")?));
            }
            Some(cd)
        }
    };

    let spin = bool_from_json(field(obj, "spin", "manifold record")?, "spin")?;
    let almost_parallelisable = bool_from_json(
        field(obj, "almost_parallelisable", "manifold record")?,
        "almost_parallelisable",
    )?;
    let name = match obj.get("name") {
        None | Some(Value::Null) => String::new(),
        Some(Value::String(s)) => s.clone(),
        Some(other) => {
            return Err(Error::parse(format!("name: expected a string, got {other}")))
        }
    };

    VirtualManifold::new(
        dim,
        chi,
        sigma,
        pontrjagin,
        chern,
        spin,
        almost_parallelisable,
        name,
    )
}

/// Parses a manifold record from JSON text.
pub fn manifold_from_str(s: &str) -> Result<VirtualManifold> {
    let v: Value = serde_json::from_str(s)?;
    manifold_from_json(&v)
}

/// Pretty-printed manifold JSON.
pub fn manifold_to_string(m: &VirtualManifold) -> String {
    serde_json::to_string_pretty(&manifold_to_json(m)).expect("manifold JSON serializes")
}

// ---------------------------------------------------------------------------
// graded polynomials

/// Encodes a graded polynomial as an array of
/// `{"partition": [...], "coefficient": "p/q"}` in canonical term order.
pub fn graded_poly_to_json(p: &GradedPoly) -> Value {
    Value::Array(
        p.terms()
            .map(|(la, c)| {
                json!({
                    "partition": la.parts(),
                    "coefficient": format_rational(c),
                })
            })
            .collect(),
    )
}

/// Decodes a graded polynomial (repeated partitions accumulate).
pub fn graded_poly_from_json(v: &Value) -> Result<GradedPoly> {
    let mut out = GradedPoly::zero();
    for (i, e) in as_array(v, "graded polynomial")?.iter().enumerate() {
        let what = format!("term[{i}]");
        let eo = as_object(e, &what)?;
        let la = partition_from_json(
            field(eo, "partition", &what)?,
            &format!("{what}.partition"),
        )?;
        let c = field(eo, "coefficient", &what)?
            .as_str()
            .ok_or_else(|| Error::parse(format!("{what}.coefficient: expected a string")))?;
        out.insert_add(la, parse_rational(c)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genera::l_poly;
    use crate::plumbing::e8_graph;
    use crate::surgery::{build_w0, product_of_spheres, quaternionic_projective_plane};

    #[test]
    fn graph_round_trip() {
        let g = e8_graph(2).unwrap();
        let v = graph_to_json(&g);
        assert_eq!(graph_from_json(&v).unwrap(), g);
        let text = graph_to_string(&g);
        assert_eq!(graph_from_str(&text).unwrap(), g);
    }

    #[test]
    fn graph_parse_errors_are_specific() {
        let missing = r#"{"vertices": [], "edges": []}"#;
        let err = graph_from_str(missing).unwrap_err().to_string();
        assert!(err.contains("fiber_half_dim"), "{err}");

        let float_euler =
            r#"{"fiber_half_dim": 2, "vertices": [{"id": 1, "euler": 2.5}], "edges": []}"#;
        let err = graph_from_str(float_euler).unwrap_err().to_string();
        assert!(err.contains("euler"), "{err}");

        let syntax = "{\n  \"fiber_half_dim\": 2,\n  oops\n}";
        let err = graph_from_str(syntax).unwrap_err().to_string();
        assert!(err.contains("line 3"), "{err}");
    }

    #[test]
    fn manifold_round_trips() {
        for m in [
            build_w0(2).unwrap(),
            quaternionic_projective_plane(),
            product_of_spheres(3, 5).unwrap(),
            crate::surgery::sphere(7),
        ] {
            let v = manifold_to_json(&m);
            assert_eq!(manifold_from_json(&v).unwrap(), m, "{}", m.name);
        }
    }

    #[test]
    fn manifold_json_distinguishes_absent_from_empty_chern() {
        let w0 = build_w0(2).unwrap(); // chern recorded, all zero, no stable top
        let v = manifold_to_json(&w0);
        assert_eq!(v["chern_decomposable"], json!([]));
        assert_eq!(v["chern_top_stable"], Value::Null);

        let hp2 = quaternionic_projective_plane(); // no chern at all
        let v = manifold_to_json(&hp2);
        assert_eq!(v["chern_decomposable"], Value::Null);

        let s44 = product_of_spheres(4, 4).unwrap(); // stable top recorded as 0
        let v = manifold_to_json(&s44);
        assert_eq!(v["chern_top_stable"], json!(0));
    }

    #[test]
    fn huge_numbers_survive_exactly() {
        let big: BigInt = "123456789012345678901234567890123456789".parse().unwrap();
        let v = bigint_to_json(&big);
        assert_eq!(bigint_from_json(&v, "x").unwrap(), big);
        // and through a full record
        let mut w = build_w0(2).unwrap();
        w.chi = big.clone();
        let round = manifold_from_json(&manifold_to_json(&w)).unwrap();
        assert_eq!(round.chi, big);
    }

    #[test]
    fn manifold_parse_rejects_floats_and_bad_records() {
        let float_chi = r#"{"dim": 8, "chi": 2.5, "sigma": 0, "pontrjagin": [],
            "chern_decomposable": null, "chern_top_stable": null,
            "spin": true, "almost_parallelisable": true, "name": "x"}"#;
        let err = manifold_from_str(float_chi).unwrap_err().to_string();
        assert!(err.contains("chi"), "{err}");

        // sigma must vanish in dimension 6
        let bad_sigma = r#"{"dim": 6, "chi": 0, "sigma": 1, "pontrjagin": null,
            "chern_decomposable": null, "chern_top_stable": null,
            "spin": true, "almost_parallelisable": true, "name": "x"}"#;
        assert!(manifold_from_str(bad_sigma).is_err());

        // partition of the wrong weight
        let bad_weight = r#"{"dim": 8, "chi": 0, "sigma": 0,
            "pontrjagin": [{"partition": [3], "value": 1}],
            "chern_decomposable": null, "chern_top_stable": null,
            "spin": true, "almost_parallelisable": true, "name": "x"}"#;
        let err = manifold_from_str(bad_weight).unwrap_err().to_string();
        assert!(err.contains("pontrjagin[0]"), "{err}");
    }

    #[test]
    fn graded_poly_serialization_is_canonical() {
        let v = graded_poly_to_json(&l_poly(2));
        let expect = json!([
            {"partition": [2], "coefficient": "7/45"},
            {"partition": [1, 1], "coefficient": "-1/45"},
        ]);
        assert_eq!(v, expect);
        assert_eq!(graded_poly_from_json(&v).unwrap(), l_poly(2));
    }

    #[test]
    fn graded_poly_accumulates_repeated_partitions() {
        let v = json!([
            {"partition": [1], "coefficient": "1/2"},
            {"partition": [1], "coefficient": "1/2"},
        ]);
        let p = graded_poly_from_json(&v).unwrap();
        assert_eq!(p.coeff(&Partition::single(1)), crate::numbers::rational(1, 1));
    }
}
