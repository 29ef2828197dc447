//! JSON input formats.
//!
//! * group: `{"points": n, "generators": [[...], ...]}` (0-based one-line
//!   permutations) or `{"table": [[...], ...]}` (identity at index 0), or
//!   `{"name": "S4"}` for the built-in families `C<n>`, `S<n>`, `A<n>`,
//!   `D<n>` (order `2n`) and `Q8`;
//! * subgroup: `{"elements": [...]}`;
//! * outer action: `{"gamma": group, "target": group, "reps": {"i": images}}`,
//!   missing representatives default to the identity;
//! * extension: `{"total": group, "kernel_images": [...], "proj_images": [...]}`
//!   with optional `"kernel"` and `"gamma"` groups; without them the kernel
//!   is the subgroup of listed elements and `Γ` the quotient;
//! * module: `{"ambient_rank": m, "relations": [[...], ...], "group": group,
//!   "action": {"i": matrix}}`, one relation vector per entry and row-major
//!   matrices keyed by element index;
//! * rationals: integers or `"num/den"` strings.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::Deserialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::extension::GroupExtension;
use crate::group::{Automorphism, FiniteGroup, GroupHom, Subgroup};
use crate::lattice::{GaloisLattice, IntMatrix};
use crate::numfield::{PolyQ, Q};
use crate::outer::OuterAction;

fn parse_err(e: impl std::fmt::Display) -> Error {
    Error::Parse(e.to_string())
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| Error::Parse(format!("missing field {key:?}")))
}

fn from_value<T: for<'de> Deserialize<'de>>(v: &Value) -> Result<T> {
    T::deserialize(v).map_err(parse_err)
}

pub fn parse_group(v: &Value, cap: usize) -> Result<FiniteGroup> {
    if let Some(name) = v.get("name") {
        let name: String = from_value(name)?;
        return named_group(&name, cap);
    }
    if let Some(table) = v.get("table") {
        return FiniteGroup::from_table(&from_value::<Vec<Vec<usize>>>(table)?, cap);
    }
    let points: usize = from_value(field(v, "points")?)?;
    let gens: Vec<Vec<usize>> = from_value(field(v, "generators")?)?;
    FiniteGroup::from_permutations(points, &gens, cap)
}

/// `C6`, `S4`, `A5`, `D4`, `Q8`.
pub fn named_group(name: &str, cap: usize) -> Result<FiniteGroup> {
    let bad = || Error::Parse(format!("unknown group name {name:?}"));
    if name == "Q8" {
        return Ok(FiniteGroup::quaternion());
    }
    let (kind, n) = name.split_at(1.min(name.len()));
    let n: usize = n.parse().map_err(|_| bad())?;
    let order = match kind {
        "C" => Some(n),
        "D" => n.checked_mul(2),
        "S" => (1..=n).try_fold(1usize, |acc, k| acc.checked_mul(k)),
        "A" => (1..=n).try_fold(1usize, |acc, k| acc.checked_mul(k)).map(|f| (f / 2).max(1)),
        _ => return Err(bad()),
    };
    if order.is_none_or(|o| o > cap) {
        return Err(Error::CapExceeded { cap });
    }
    Ok(match kind {
        "C" if n >= 1 => FiniteGroup::cyclic(n),
        "D" if n >= 2 => FiniteGroup::dihedral(n),
        "S" if n >= 1 => FiniteGroup::symmetric(n),
        "A" if n >= 1 => FiniteGroup::alternating(n),
        _ => return Err(bad()),
    })
}

pub fn parse_subgroup(v: &Value, parent: &FiniteGroup) -> Result<Subgroup> {
    let elements: Vec<usize> = from_value(field(v, "elements")?)?;
    Subgroup::new(parent, elements)
}

fn index_key(k: &str) -> Result<usize> {
    k.parse().map_err(|_| Error::Parse(format!("expected an element index, got {k:?}")))
}

pub fn parse_action(v: &Value, cap: usize) -> Result<OuterAction> {
    let gamma = parse_group(field(v, "gamma")?, cap)?;
    let target = parse_group(field(v, "target")?, cap)?;
    let mut reps: Vec<Automorphism> = gamma.elements().map(|_| Automorphism::identity(&target)).collect();
    if let Some(r) = v.get("reps") {
        let r: BTreeMap<String, Vec<usize>> = from_value(r)?;
        for (k, images) in r {
            let i = index_key(&k)?;
            if i >= gamma.order() {
                return Err(Error::Parse(format!("gamma has no element {i}")));
            }
            reps[i] = Automorphism::new(&target, images)?;
        }
    }
    OuterAction::new(&gamma, &target, reps)
}

pub fn parse_extension(v: &Value, cap: usize) -> Result<GroupExtension> {
    let total = parse_group(field(v, "total")?, cap)?;
    let kernel_images: Vec<usize> = from_value(field(v, "kernel_images")?)?;
    match (v.get("kernel"), v.get("gamma")) {
        (Some(k), Some(g)) => {
            let kernel = parse_group(k, cap)?;
            let gamma = parse_group(g, cap)?;
            let proj_images: Vec<usize> = from_value(field(v, "proj_images")?)?;
            GroupExtension::new(
                GroupHom::new(&kernel, &total, kernel_images)?,
                GroupHom::new(&total, &gamma, proj_images)?,
            )
        }
        _ => {
            let n = Subgroup::new(&total, kernel_images)?;
            GroupExtension::from_normal_subgroup(&total, &n)
        }
    }
}

fn bigint_value(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => n.as_i64().map(BigInt::from).ok_or_else(|| Error::Parse(format!("not an integer: {n}"))),
        Value::String(s) => s.parse().map_err(parse_err),
        _ => Err(Error::Parse(format!("not an integer: {v}"))),
    }
}

fn matrix_value(v: &Value, rows: usize, cols: usize) -> Result<IntMatrix> {
    let r: Vec<Value> = from_value(v)?;
    if r.len() != rows {
        return Err(Error::Parse(format!("matrix has {} rows, expected {rows}", r.len())));
    }
    let mut m = IntMatrix::zeros(rows, cols);
    for (i, row) in r.iter().enumerate() {
        let row: Vec<Value> = from_value(row)?;
        if row.len() != cols {
            return Err(Error::Parse(format!("matrix row has {} entries, expected {cols}", row.len())));
        }
        for (j, x) in row.iter().enumerate() {
            m.set(i, j, bigint_value(x)?);
        }
    }
    Ok(m)
}

pub fn parse_module(v: &Value, cap: usize) -> Result<GaloisLattice> {
    let gamma = parse_group(field(v, "group")?, cap)?;
    let m: usize = from_value(field(v, "ambient_rank")?)?;
    let rels: Vec<Vec<Value>> = match v.get("relations") {
        Some(r) => from_value(r)?,
        None => Vec::new(),
    };
    let mut columns = Vec::with_capacity(rels.len());
    for r in &rels {
        if r.len() != m {
            return Err(Error::Parse(format!("relation has {} entries, ambient rank is {m}", r.len())));
        }
        columns.push(r.iter().map(bigint_value).collect::<Result<Vec<_>>>()?);
    }
    let relations = IntMatrix::from_columns(m, &columns);
    let action: BTreeMap<String, Value> = match v.get("action") {
        Some(a) => from_value(a)?,
        None => BTreeMap::new(),
    };
    let mut gens = Vec::with_capacity(action.len());
    for (k, a) in &action {
        let i = index_key(k)?;
        if i >= gamma.order() {
            return Err(Error::Parse(format!("group has no element {i}")));
        }
        gens.push((i, matrix_value(a, m, m)?));
    }
    GaloisLattice::new(&gamma, m, relations, &gens)
}

/// Integers, `"a/b"` strings, or integer strings.
pub fn parse_rational(v: &Value) -> Result<Q> {
    match v {
        Value::Number(_) => Ok(Q::from_integer(bigint_value(v)?)),
        Value::String(s) => parse_rational_str(s),
        _ => Err(Error::Parse(format!("not a rational: {v}"))),
    }
}

pub fn parse_rational_str(s: &str) -> Result<Q> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d == BigInt::from(0) {
                return Err(Error::ZeroArgument);
            }
            Ok(Q::new(n, d))
        }
        None => Ok(Q::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Coefficients, constant first.
pub fn parse_poly(v: &Value) -> Result<PolyQ> {
    let cs: Vec<Value> = from_value(v)?;
    Ok(PolyQ::new(cs.iter().map(parse_rational).collect::<Result<Vec<_>>>()?))
}

/// Comma-separated coefficients, constant first, e.g. `-2,0,1`.
pub fn parse_poly_str(s: &str) -> Result<PolyQ> {
    let s = s.trim().trim_start_matches('[').trim_end_matches(']');
    Ok(PolyQ::new(s.split(',').map(parse_rational_str).collect::<Result<Vec<_>>>()?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn groups() {
        let s3 = parse_group(&json!({"points": 3, "generators": [[1, 0, 2], [1, 2, 0]]}), 100).unwrap();
        assert_eq!(s3.order(), 6);
        let c2 = parse_group(&json!({"table": [[0, 1], [1, 0]]}), 100).unwrap();
        assert_eq!(c2.order(), 2);
        assert_eq!(parse_group(&json!({"name": "A5"}), 100).unwrap().order(), 60);
        assert!(parse_group(&json!({"name": "S8"}), 5040).is_err());
        assert!(parse_group(&json!({"name": "X3"}), 100).is_err());
        assert!(parse_group(&json!({"points": 3}), 100).is_err());
    }

    #[test]
    fn actions_and_extensions() {
        let a = parse_action(&json!({"gamma": {"name": "C2"}, "target": {"name": "C3"}, "reps": {"1": [0, 2, 1]}}), 100)
            .unwrap();
        assert!(a.is_genuine());
        let s3 = FiniteGroup::symmetric(3);
        let a3: Vec<usize> = s3.elements().filter(|&x| s3.element_order(x) != 2).collect();
        let e = parse_extension(&json!({"total": {"name": "S3"}, "kernel_images": a3}), 100).unwrap();
        assert_eq!((e.kernel().order(), e.gamma().order()), (3, 2));
        assert!(parse_extension(&json!({"total": {"name": "S3"}, "kernel_images": [0, 1]}), 100).is_err());
    }

    #[test]
    fn modules_and_rationals() {
        let m = parse_module(
            &json!({"ambient_rank": 2, "relations": [[1, 1]], "group": {"name": "C2"}, "action": {"1": [[0, 1], [1, 0]]}}),
            100,
        )
        .unwrap();
        assert_eq!(m.free_rank(), 1);
        assert_eq!(parse_rational(&json!("-13/3")).unwrap(), Q::new((-13).into(), 3.into()));
        assert_eq!(parse_rational(&json!(4)).unwrap(), Q::from_integer(4.into()));
        assert!(parse_rational_str("1/0").is_err());
        assert_eq!(parse_poly_str("-2,0,1").unwrap(), PolyQ::from_ints(&[-2, 0, 1]));
    }
}
