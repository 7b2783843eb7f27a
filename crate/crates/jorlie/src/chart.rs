//! Partially-defined conformal transformations of an affine chart, given
//! as words in translations, quasi-translations, linear maps, negation,
//! and dilations. Evaluation is pointwise; partiality is an outcome, not
//! an error.

use crate::error::{Error, Result};
use crate::jordan::{apply_op, JordanPair};
use crate::linalg::Mat;
use crate::scalar::Ring;

#[derive(Clone, PartialEq, Debug)]
pub enum Generator<R> {
    /// x -> x + v, v in V+.
    Translate(Mat<R>),
    /// x -> x^a (quasi-inverse), a in V-.
    QuasiTranslate(Mat<R>),
    /// x -> h(x) for an invertible operator h on V+.
    Linear(Mat<R>),
    /// x -> -x.
    Negate,
    /// x -> r x for a unit scalar r.
    Dilate(R),
}

/// Evaluation result: either a chart point, or the index of the generator
/// whose quasi-inversion failed together with the witness pair (the
/// Bergman operator B(point, qt) is singular there).
#[derive(Clone, PartialEq, Debug)]
pub enum Outcome<R> {
    Value(Mat<R>),
    Undefined {
        index: usize,
        point: Mat<R>,
        qt: Mat<R>,
    },
}

impl<R: Ring> Outcome<R> {
    pub fn value(self) -> Option<Mat<R>> {
        match self {
            Outcome::Value(v) => Some(v),
            Outcome::Undefined { .. } => None,
        }
    }

    pub fn expect_value(self) -> Mat<R> {
        match self {
            Outcome::Value(v) => v,
            Outcome::Undefined { index, point, qt } => panic!(
                "undefined at generator {index}: B({}, {}) singular",
                point.render(),
                qt.render()
            ),
        }
    }
}

/// A word of generators; evaluation applies them left to right.
#[derive(Clone, PartialEq, Debug)]
pub struct Word<R> {
    pub gens: Vec<Generator<R>>,
}

impl<R: Ring> Word<R> {
    pub fn new(gens: Vec<Generator<R>>) -> Self {
        Word { gens }
    }

    pub fn then(&self, other: &Word<R>) -> Word<R> {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Word { gens }
    }

    /// Evaluate on the V+ chart.
    pub fn eval(&self, pair: &JordanPair<R>, x: &Mat<R>) -> Result<Outcome<R>> {
        pair.check_plus(x)?;
        let mut cur = x.clone();
        for (index, g) in self.gens.iter().enumerate() {
            cur = match g {
                Generator::Translate(v) => cur.add(v),
                Generator::QuasiTranslate(a) => match pair.quasi_inv_plus(&cur, a) {
                    Ok(v) => v,
                    Err(_) => {
                        return Ok(Outcome::Undefined {
                            index,
                            point: cur,
                            qt: a.clone(),
                        })
                    }
                },
                Generator::Linear(h) => apply_op(h, &cur, pair.plus_shape()),
                Generator::Negate => cur.neg(),
                Generator::Dilate(r) => cur.scale(r),
            };
        }
        Ok(Outcome::Value(cur))
    }

    /// Evaluate the paired V- action: each generator pairs with its dual
    /// automorphism component (translations with quasi-translations and
    /// conversely; dilations invert). Linear generators carry no canonical
    /// dual here and are rejected.
    pub fn eval_minus(&self, pair: &JordanPair<R>, b: &Mat<R>) -> Result<Outcome<R>> {
        pair.check_minus(b)?;
        let mut cur = b.clone();
        for (index, g) in self.gens.iter().enumerate() {
            cur = match g {
                Generator::Translate(v) => match pair.quasi_inv_minus(&cur, v) {
                    Ok(w) => w,
                    Err(_) => {
                        return Ok(Outcome::Undefined {
                            index,
                            point: cur,
                            qt: v.clone(),
                        })
                    }
                },
                Generator::QuasiTranslate(a) => cur.add(a),
                Generator::Linear(_) => {
                    return Err(Error::InvalidInput(
                        "linear generators have no paired minus action".into(),
                    ))
                }
                Generator::Negate => cur.neg(),
                Generator::Dilate(r) => cur.scale(&r.inv()?),
            };
        }
        Ok(Outcome::Value(cur))
    }

    pub fn map_scalars<S: Ring>(&self, f: impl Fn(&R) -> S + Copy) -> Word<S> {
        Word {
            gens: self
                .gens
                .iter()
                .map(|g| match g {
                    Generator::Translate(v) => Generator::Translate(v.map(f)),
                    Generator::QuasiTranslate(a) => Generator::QuasiTranslate(a.map(f)),
                    Generator::Linear(h) => Generator::Linear(h.map(f)),
                    Generator::Negate => Generator::Negate,
                    Generator::Dilate(r) => Generator::Dilate(f(r)),
                })
                .collect(),
        }
    }

    /// Serialize as a JSON array of tagged generators.
    pub fn to_json(&self) -> serde_json::Value {
        use serde_json::json;
        let items: Vec<serde_json::Value> = self
            .gens
            .iter()
            .map(|g| match g {
                Generator::Translate(v) => json!({ "translate": matrix_json(v) }),
                Generator::QuasiTranslate(a) => json!({ "quasi_translate": matrix_json(a) }),
                Generator::Linear(h) => json!({ "linear": matrix_json(h) }),
                Generator::Negate => json!("negate"),
                Generator::Dilate(r) => json!({ "dilate": format!("{r}") }),
            })
            .collect();
        serde_json::Value::Array(items)
    }

    /// Parse a word for the given pair; translations must take V+ shapes,
    /// quasi-translations V- shapes.
    pub fn from_json(value: &serde_json::Value, pair: &JordanPair<R>) -> Result<Word<R>> {
        let items = value
            .as_array()
            .ok_or_else(|| Error::ParseError("word must be a JSON array".into()))?;
        let proto = pair.proto();
        let mut gens = Vec::with_capacity(items.len());
        for item in items {
            if item.as_str() == Some("negate") {
                gens.push(Generator::Negate);
                continue;
            }
            let obj = item
                .as_object()
                .ok_or_else(|| Error::ParseError(format!("bad generator {item}")))?;
            let (tag, body) = obj
                .iter()
                .next()
                .ok_or_else(|| Error::ParseError("empty generator".into()))?;
            let gen = match tag.as_str() {
                "translate" => Generator::Translate(crate::descriptor::parse_matrix(
                    body,
                    pair.plus_shape(),
                    proto,
                )?),
                "quasi_translate" => Generator::QuasiTranslate(crate::descriptor::parse_matrix(
                    body,
                    pair.minus_shape(),
                    proto,
                )?),
                "linear" => {
                    let n = pair.plus_rank();
                    Generator::Linear(crate::descriptor::parse_matrix(body, (n, n), proto)?)
                }
                "dilate" => Generator::Dilate(crate::descriptor::parse_scalar(body, proto)?),
                other => return Err(Error::ParseError(format!("unknown generator {other:?}"))),
            };
            gens.push(gen);
        }
        Ok(Word::new(gens))
    }
}

fn matrix_json<R: Ring>(m: &Mat<R>) -> serde_json::Value {
    let rows: Vec<serde_json::Value> = (0..m.rows)
        .map(|r| {
            serde_json::Value::Array(
                (0..m.cols)
                    .map(|c| serde_json::Value::String(format!("{}", m.at(r, c))))
                    .collect(),
            )
        })
        .collect();
    serde_json::Value::Array(rows)
}

/// The point reflection (-1)_{z,b} expressed through translations and one
/// quasi-translation: applied left to right, negate, translate by z,
/// quasi-translate by 2 b^{-z}, translate by z. Requires (b, -z)
/// quasi-invertible.
pub fn point_reflection_word<R: Ring>(
    pair: &JordanPair<R>,
    z: &Mat<R>,
    b: &Mat<R>,
) -> Result<Word<R>> {
    pair.check_plus(z)?;
    pair.check_minus(b)?;
    let inner = pair.quasi_inv_minus(b, &z.neg())?;
    let two = inner.scale(&inner.proto().embed_i64(2));
    Ok(Word::new(vec![
        Generator::Negate,
        Generator::Translate(z.clone()),
        Generator::QuasiTranslate(two),
        Generator::Translate(z.clone()),
    ]))
}

/// Midpoint datum p(x) = (a/2)^{-x} on the V- side.
pub fn midpoint<R: Ring>(pair: &JordanPair<R>, a: &Mat<R>, x: &Mat<R>) -> Result<Mat<R>> {
    pair.check_minus(a)?;
    pair.check_plus(x)?;
    let d = a.map(|c| c.halve());
    pair.quasi_inv_minus(&d, &x.neg())
}

/// The geometric symmetry sigma_x of the chart deformed by a in V-:
/// conjugate the point reflection (-1)_{2x, a/2} by the translation tau_x.
pub fn symmetry_word<R: Ring>(
    pair: &JordanPair<R>,
    a: &Mat<R>,
    x: &Mat<R>,
) -> Result<Word<R>> {
    let d = a.map(|c| c.halve());
    let two_x = x.scale(&x.proto().embed_i64(2));
    let refl = point_reflection_word(pair, &two_x, &d)?;
    let mut gens = vec![Generator::Translate(x.clone())];
    gens.extend(refl.gens);
    gens.push(Generator::Translate(x.neg()));
    Ok(Word::new(gens))
}

/// The base-point symmetry sigma_0 = tilde-tau_a . (-1) as a word.
pub fn base_symmetry_word<R: Ring>(a: &Mat<R>) -> Word<R> {
    Word::new(vec![Generator::Negate, Generator::QuasiTranslate(a.clone())])
}

/// Evaluate the geometric symmetry at y.
pub fn sigma_geometric<R: Ring>(
    pair: &JordanPair<R>,
    a: &Mat<R>,
    x: &Mat<R>,
    y: &Mat<R>,
) -> Result<Outcome<R>> {
    let w = symmetry_word(pair, a, x)?;
    w.eval(pair, y)
}

/// The denominator B(v, w) of the transformation tilde-tau_w . tau_v.
pub fn denominator<R: Ring>(pair: &JordanPair<R>, v: &Mat<R>, w: &Mat<R>) -> Mat<R> {
    pair.bergman_plus(v, w)
}

/// Translation and linear part of an affine word: the value at 0 and the
/// dual-number differential there. Fails if the word is undefined at 0.
pub fn affine_parts<R: Ring>(
    pair: &JordanPair<R>,
    word: &Word<R>,
) -> Result<(Mat<R>, Mat<R>)> {
    use crate::dual::Dual;
    let zero = pair.zero_plus();
    let translation = match word.eval(pair, &zero)? {
        Outcome::Value(v) => v,
        Outcome::Undefined { .. } => {
            return Err(Error::OutOfDomain("word undefined at the origin".into()))
        }
    };
    let dpair = pair.map_scalars(|c| Dual::constant(c.clone()));
    let dword = word.map_scalars(|c| Dual::constant(c.clone()));
    let n = pair.plus_rank();
    let mut linear = Mat::zero(n, n, pair.proto());
    for j in 0..n {
        let e = pair.basis_plus(j);
        let pert = e.map(|c| Dual::new(c.ring_zero(), c.clone()));
        let out = match dword.eval(&dpair, &pert)? {
            Outcome::Value(v) => v,
            Outcome::Undefined { .. } => {
                return Err(Error::OutOfDomain("word undefined near the origin".into()))
            }
        };
        let col = out.map(|d| d.eps.clone()).flatten();
        for i in 0..n {
            linear.set(i, j, col.at(i, 0).clone());
        }
    }
    Ok((translation, linear))
}
