//! JSON descriptors for instances and deformations: the input format of
//! the command-line front end. Scalars appear as strings ("p/q" or
//! integers), with the ring declared once per document.

use crate::catalog::AssocAlgebra;
use crate::error::{Error, Result};
use crate::grassmann::SplitForm;
use crate::homotope::Jts;
use crate::jordan::{JordanAlgebra, JordanPair, Tensor2, Tensor3};
use crate::linalg::Mat;
use crate::scalar::{Fp, Rat, Ring, F64};
use serde::Deserialize;
use serde_json::Value;

/// Ring selector: `q`, `gf:p`, or `f64`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RingSel {
    Rational,
    Gf(u64),
    Float,
}

impl RingSel {
    pub fn parse(s: &str) -> Result<RingSel> {
        let s = s.trim();
        if s == "q" {
            return Ok(RingSel::Rational);
        }
        if s == "f64" {
            return Ok(RingSel::Float);
        }
        if let Some(p) = s.strip_prefix("gf:") {
            let p: u64 = p
                .parse()
                .map_err(|_| Error::ParseError(format!("bad modulus in {s:?}")))?;
            // surface the 2,3-invertibility constraint at parse time
            Fp::field(p)?;
            return Ok(RingSel::Gf(p));
        }
        Err(Error::ParseError(format!(
            "unknown ring {s:?} (expected q | gf:p | f64)"
        )))
    }

    pub fn label(&self) -> String {
        match self {
            RingSel::Rational => "q".into(),
            RingSel::Gf(p) => format!("gf:{p}"),
            RingSel::Float => "f64".into(),
        }
    }

    pub fn proto_rat(&self) -> Result<Rat> {
        match self {
            RingSel::Rational => Ok(crate::scalar::rat_int(0)),
            _ => Err(Error::ParseError(format!("{} is not q", self.label()))),
        }
    }

    pub fn proto_fp(&self) -> Result<Fp> {
        match self {
            RingSel::Gf(p) => Fp::field(*p),
            _ => Err(Error::ParseError(format!("{} is not gf:p", self.label()))),
        }
    }

    pub fn proto_f64(&self) -> Result<F64> {
        match self {
            RingSel::Float => Ok(F64(0.0)),
            _ => Err(Error::ParseError(format!("{} is not f64", self.label()))),
        }
    }
}

/// Raw instance descriptor:
/// `{ name, ring, kind: "rectangular"|"tensor"|"algebra", parameters, structure_tensor? }`.
#[derive(Clone, Debug, Deserialize)]
pub struct InstanceSpec {
    pub name: String,
    pub ring: String,
    pub kind: String,
    #[serde(default)]
    pub parameters: Value,
    #[serde(default)]
    pub structure_tensor: Value,
}

impl InstanceSpec {
    pub fn from_json(text: &str) -> Result<InstanceSpec> {
        serde_json::from_str(text).map_err(|e| Error::ParseError(format!("instance spec: {e}")))
    }

    pub fn ring(&self) -> Result<RingSel> {
        RingSel::parse(&self.ring)
    }

    fn param_usize(&self, key: &str) -> Result<usize> {
        self.parameters
            .get(key)
            .and_then(Value::as_u64)
            .map(|v| v as usize)
            .ok_or_else(|| Error::ParseError(format!("missing integer parameter {key:?}")))
    }

    /// Build a Jordan pair instance over the given scalar witness.
    pub fn build_pair<R: Ring>(&self, proto: &R) -> Result<JordanPair<R>> {
        match self.kind.as_str() {
            "rectangular" => {
                let p = self.param_usize("p")?;
                let q = self.param_usize("q")?;
                if p == 0 || q == 0 {
                    return Err(Error::ParseError("p, q must be positive".into()));
                }
                let mut pair = JordanPair::rectangular(p, q, proto.ring_zero());
                pair.name = self.name.clone();
                Ok(pair)
            }
            "tensor" => {
                let rank = self.param_usize("rank")?;
                let plus = parse_tensor3(
                    self.structure_tensor
                        .get("plus")
                        .ok_or_else(|| Error::ParseError("missing structure_tensor.plus".into()))?,
                    rank,
                    proto,
                )?;
                let minus = parse_tensor3(
                    self.structure_tensor
                        .get("minus")
                        .ok_or_else(|| Error::ParseError("missing structure_tensor.minus".into()))?,
                    rank,
                    proto,
                )?;
                Ok(JordanPair::from_tensors(
                    &self.name,
                    (rank, 1),
                    (rank, 1),
                    plus,
                    minus,
                    proto.ring_zero(),
                ))
            }
            other => Err(Error::UnknownInstance(format!(
                "kind {other:?} does not describe a pair"
            ))),
        }
    }

    /// Build a JTS instance: `rectangular` uses the matrix triple product,
    /// `tensor` a single structure tensor.
    pub fn build_jts<R: Ring>(&self, proto: &R) -> Result<Jts<R>> {
        match self.kind.as_str() {
            "rectangular" => {
                let p = self.param_usize("p")?;
                let q = self.param_usize("q")?;
                let mut jts = Jts::rectangular(p, q, proto.ring_zero());
                jts.name = self.name.clone();
                Ok(jts)
            }
            "tensor" => {
                let rank = self.param_usize("rank")?;
                let t = parse_tensor3(&self.structure_tensor, rank, proto)?;
                Ok(Jts::from_tensor(&self.name, (rank, 1), t, proto.ring_zero()))
            }
            other => Err(Error::UnknownInstance(format!(
                "kind {other:?} does not describe a JTS"
            ))),
        }
    }

    /// Build a Jordan algebra: full matrix algebras and structure-constant
    /// algebras.
    pub fn build_algebra<R: Ring>(&self, proto: &R) -> Result<JordanAlgebra<R>> {
        match self.kind.as_str() {
            "algebra" => {
                if let Some(n) = self.parameters.get("n").and_then(Value::as_u64) {
                    let mut alg = JordanAlgebra::full_matrix(n as usize, proto.ring_zero());
                    alg.name = self.name.clone();
                    return Ok(alg);
                }
                let rank = self.param_usize("rank")?;
                let t = parse_tensor2(&self.structure_tensor, rank, proto)?;
                let unit = match self.parameters.get("unit") {
                    Some(u) => Some(parse_matrix(u, (rank, 1), proto)?),
                    None => None,
                };
                Ok(JordanAlgebra::from_structure(&self.name, t, unit, proto.ring_zero()))
            }
            other => Err(Error::UnknownInstance(format!(
                "kind {other:?} does not describe an algebra"
            ))),
        }
    }
}

/// Group descriptor: `{ ring, n, deformation }`.
#[derive(Clone, Debug, Deserialize)]
pub struct GroupSpec {
    pub ring: String,
    pub n: usize,
    pub deformation: Value,
}

impl GroupSpec {
    pub fn from_json(text: &str) -> Result<GroupSpec> {
        serde_json::from_str(text).map_err(|e| Error::ParseError(format!("group spec: {e}")))
    }

    pub fn ring(&self) -> Result<RingSel> {
        RingSel::parse(&self.ring)
    }

    pub fn build<R: Ring>(&self, proto: &R) -> Result<(AssocAlgebra<R>, Mat<R>)> {
        let alg = AssocAlgebra::matrix_algebra(self.n, proto.ring_zero());
        let a = parse_matrix(&self.deformation, (self.n, self.n), proto)?;
        Ok((alg, a))
    }
}

/// Grassmannian descriptor: `{ ring, p, q, b1, b2, skew }`.
#[derive(Clone, Debug, Deserialize)]
pub struct GrassmannSpec {
    pub ring: String,
    pub p: usize,
    pub q: usize,
    pub b1: Value,
    pub b2: Value,
    #[serde(default)]
    pub skew: bool,
}

impl GrassmannSpec {
    pub fn from_json(text: &str) -> Result<GrassmannSpec> {
        serde_json::from_str(text).map_err(|e| Error::ParseError(format!("grassmann spec: {e}")))
    }

    pub fn ring(&self) -> Result<RingSel> {
        RingSel::parse(&self.ring)
    }

    pub fn build<R: Ring>(&self, proto: &R) -> Result<SplitForm<R>> {
        let b1 = parse_matrix(&self.b1, (self.p, self.p), proto)?;
        let b2 = parse_matrix(&self.b2, (self.q, self.q), proto)?;
        SplitForm::new(b1, b2, self.skew)
    }
}

/// Deformation descriptor: `{ kind: "element"|"alpha", value }`.
#[derive(Clone, Debug, Deserialize)]
pub struct DeformationSpec {
    pub kind: String,
    pub value: Value,
}

impl DeformationSpec {
    pub fn from_value(v: &Value) -> Result<DeformationSpec> {
        serde_json::from_value(v.clone())
            .map_err(|e| Error::ParseError(format!("deformation: {e}")))
    }
}

/// Parse one scalar from a JSON string or number.
pub fn parse_scalar<R: Ring>(v: &Value, proto: &R) -> Result<R> {
    match v {
        Value::String(s) => proto.parse(s),
        Value::Number(n) => proto.parse(&n.to_string()),
        other => Err(Error::ParseError(format!("expected scalar, got {other}"))),
    }
}

/// Parse a matrix from nested JSON arrays of scalar strings.
pub fn parse_matrix<R: Ring>(v: &Value, shape: (usize, usize), proto: &R) -> Result<Mat<R>> {
    let rows = v
        .as_array()
        .ok_or_else(|| Error::ParseError(format!("expected matrix rows, got {v}")))?;
    // accept a flat array for column vectors
    if shape.1 == 1 && rows.first().map(|r| !r.is_array()).unwrap_or(false) {
        if rows.len() != shape.0 {
            return Err(Error::ParseError(format!(
                "expected {} entries, got {}",
                shape.0,
                rows.len()
            )));
        }
        let data = rows
            .iter()
            .map(|e| parse_scalar(e, proto))
            .collect::<Result<Vec<_>>>()?;
        return Ok(Mat::from_vec(shape.0, 1, data));
    }
    if rows.len() != shape.0 {
        return Err(Error::ParseError(format!(
            "expected {} rows, got {}",
            shape.0,
            rows.len()
        )));
    }
    let mut data = Vec::with_capacity(shape.0 * shape.1);
    for row in rows {
        let cols = row
            .as_array()
            .ok_or_else(|| Error::ParseError(format!("expected row array, got {row}")))?;
        if cols.len() != shape.1 {
            return Err(Error::ParseError(format!(
                "expected {} columns, got {}",
                shape.1,
                cols.len()
            )));
        }
        for e in cols {
            data.push(parse_scalar(e, proto)?);
        }
    }
    Ok(Mat::from_vec(shape.0, shape.1, data))
}

fn parse_tensor3<R: Ring>(v: &Value, rank: usize, proto: &R) -> Result<Tensor3<R>> {
    // nested [i][j][k][l] arrays of scalar strings
    let mut t = Tensor3::zero(rank, rank, rank, rank, proto);
    let outer = v
        .as_array()
        .ok_or_else(|| Error::ParseError("structure tensor must be an array".into()))?;
    if outer.len() != rank {
        return Err(Error::ParseError("structure tensor rank mismatch".into()));
    }
    for (i, vi) in outer.iter().enumerate() {
        let a1 = vi
            .as_array()
            .ok_or_else(|| Error::ParseError("tensor nesting".into()))?;
        for (j, vj) in a1.iter().enumerate() {
            let a2 = vj
                .as_array()
                .ok_or_else(|| Error::ParseError("tensor nesting".into()))?;
            for (k, vk) in a2.iter().enumerate() {
                let a3 = vk
                    .as_array()
                    .ok_or_else(|| Error::ParseError("tensor nesting".into()))?;
                for (l, vl) in a3.iter().enumerate() {
                    t.set_coeff(i, j, k, l, parse_scalar(vl, proto)?);
                }
            }
        }
    }
    Ok(t)
}

fn parse_tensor2<R: Ring>(v: &Value, rank: usize, proto: &R) -> Result<Tensor2<R>> {
    let mut t = Tensor2::zero(rank, rank, rank, proto);
    let outer = v
        .as_array()
        .ok_or_else(|| Error::ParseError("structure constants must be an array".into()))?;
    for (i, vi) in outer.iter().enumerate() {
        let a1 = vi
            .as_array()
            .ok_or_else(|| Error::ParseError("tensor nesting".into()))?;
        for (j, vj) in a1.iter().enumerate() {
            let a2 = vj
                .as_array()
                .ok_or_else(|| Error::ParseError("tensor nesting".into()))?;
            for (k, vk) in a2.iter().enumerate() {
                t.set_coeff(i, j, k, parse_scalar(vk, proto)?);
            }
        }
    }
    Ok(t)
}
