//! JSON documents and their plain-text rendering.
//!
//! Objects are `BTreeMap`-backed, so keys come out sorted and repeated runs
//! are byte-identical. Floats use the shortest decimal that round-trips.

use ellrot::{BMatrix, EVector, EllipticQuaternion, EllipticSpace, RotationSolution, VerifyReport};
use serde_json::{json, Map, Value};

pub fn vector(v: &EVector) -> Value {
    json!(v.as_slice())
}

pub fn matrix(r: &BMatrix) -> Value {
    json!(r.rows())
}

fn quaternion(q: &EllipticQuaternion) -> Value {
    json!(q.components())
}

fn report_fields(report: &VerifyReport) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("class".into(), json!(report.class.name()));
    m.insert("det".into(), json!(report.det));
    m.insert("det_residual".into(), json!(report.det_residual));
    m.insert(
        "residual_orthogonality".into(),
        json!(report.orthogonality_residual),
    );
    m.insert("trace".into(), json!(report.trace));
    m.insert("char_poly".into(), json!(report.char_poly));
    m.insert(
        "unit_eigen_residual".into(),
        json!(report.unit_eigen_residual),
    );
    m.insert("rotation_cos".into(), json!(report.rotation_cos));
    m
}

/// A matrix with its diagnostics; `verify` reads these back.
pub fn matrix_doc(
    space: &EllipticSpace,
    method: Option<&str>,
    r: &BMatrix,
    report: &VerifyReport,
) -> Value {
    let mut m = report_fields(report);
    m.insert("a".into(), json!(space.coefficients()));
    m.insert("matrix".into(), matrix(r));
    if let Some(method) = method {
        m.insert("method".into(), json!(method));
    }
    Value::Object(m)
}

pub fn solution_doc(sol: &RotationSolution, from: &EVector, to: &EVector) -> Value {
    let mut methods = Map::new();
    for method in ellrot::Method::ALL {
        methods.insert(
            method.name().into(),
            sol.matrix(method).map_or(Value::Null, matrix),
        );
    }
    let mapping: Map<String, Value> = sol
        .residuals
        .mapping
        .iter()
        .map(|(m, r)| (m.name().to_string(), json!(r)))
        .collect();
    let pairwise: Map<String, Value> = sol
        .residuals
        .pairwise
        .iter()
        .map(|(m1, m2, r)| (format!("{}-{}", m1.name(), m2.name()), json!(r)))
        .collect();
    json!({
        "a": sol.space.coefficients(),
        "from": vector(from),
        "to": vector(to),
        "axis": vector(&sol.axis),
        "cos": sol.cos_angle,
        "sin": sol.sin_angle,
        "angle": sol.angle(),
        "degenerate_axis": sol.degenerate_axis,
        "quaternion": quaternion(&sol.quaternion),
        "methods": methods,
        "residuals": {
            "mapping": mapping,
            "pairwise": pairwise,
            "max_mapping": sol.residuals.max_mapping(),
            "max_pairwise": sol.residuals.max_pairwise(),
        },
    })
}

pub fn quaternion_doc(
    space: &EllipticSpace,
    p: &EllipticQuaternion,
    q: &EllipticQuaternion,
    product: &EllipticQuaternion,
) -> Value {
    json!({
        "a": space.coefficients(),
        "p": quaternion(p),
        "q": quaternion(q),
        "product": quaternion(product),
        "norm": product.norm(),
        "norm_p": p.norm(),
        "norm_q": q.norm(),
    })
}

pub fn reflection_doc(
    space: &EllipticSpace,
    normal: &EVector,
    point: &EVector,
    image: &EVector,
    h: &BMatrix,
) -> Value {
    json!({
        "a": space.coefficients(),
        "normal": vector(normal),
        "point": vector(point),
        "image": vector(image),
        "matrix": matrix(h),
        "det": h.det(),
    })
}

/// Pretty JSON with a trailing newline.
pub fn to_json(doc: &Value) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents contain only plain values");
    s.push('\n');
    s
}

/// One `key: value` line per top-level field, values in compact JSON.
pub fn to_text(doc: &Value) -> String {
    match doc {
        Value::Object(map) => map.iter().map(|(k, v)| format!("{k}: {v}\n")).collect(),
        other => format!("{other}\n"),
    }
}
