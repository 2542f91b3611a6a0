//! Scalar extension of structures, morphisms, subspaces and comodules along
//! a simple field extension, and the coordinate-wise descent of comodule
//! structures back to the base field.

use crate::comodules::Comodule;
use crate::error::{Error, Result};
use crate::linalg::{ExactMatrix, Subspace};
use crate::scalars::{Field, Value};
use crate::structures::{
    Algebra, Bialgebra, Coalgebra, HopfAlgebra, Morphism, Object, QuotientPresentation,
};

/// A simple extension `base <= ext` with its power basis `1, t, ..., t^{d-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionContext {
    base: Field,
    ext: Field,
}

impl ExtensionContext {
    pub fn new(ext: &Field) -> Result<Self> {
        let (base, _) = ext
            .extension_parts()
            .ok_or_else(|| Error::Unsupported(format!("{ext} is not a simple extension")))?;
        Ok(ExtensionContext {
            base: base.clone(),
            ext: ext.clone(),
        })
    }

    pub fn base(&self) -> &Field {
        &self.base
    }

    pub fn ext(&self) -> &Field {
        &self.ext
    }

    pub fn degree(&self) -> usize {
        self.ext.degree()
    }
}

fn check_base(ext: &Field, field: &Field) -> Result<()> {
    match ext.extension_parts() {
        Some((base, _)) if base == field => Ok(()),
        _ => Err(Error::FieldMismatch(field.to_string(), ext.to_string())),
    }
}

pub fn extend_coalgebra(c: &Coalgebra, ext: &Field) -> Result<Coalgebra> {
    check_base(ext, c.field())?;
    Coalgebra::new(ext, c.dim(), c.delta().embed(ext)?, c.counit().embed(ext)?)
}

pub fn extend_algebra(a: &Algebra, ext: &Field) -> Result<Algebra> {
    check_base(ext, a.field())?;
    Algebra::new(ext, a.dim(), a.mul().embed(ext)?, a.unit().embed(ext)?)
}

/// Extends any structure entry-wise; the result revalidates over `ext` and
/// keeps the same dimension.
pub fn extend_object(obj: &Object, ext: &Field) -> Result<Object> {
    Ok(match obj {
        Object::Coalgebra(c) => Object::Coalgebra(extend_coalgebra(c, ext)?),
        Object::Algebra(a) => Object::Algebra(extend_algebra(a, ext)?),
        Object::Bialgebra(b) => Object::Bialgebra(Bialgebra::new(
            extend_coalgebra(&b.coalgebra, ext)?,
            extend_algebra(&b.algebra, ext)?,
        )?),
        Object::Hopf(h) => Object::Hopf(HopfAlgebra::new(
            Bialgebra::new(
                extend_coalgebra(h.coalgebra(), ext)?,
                extend_algebra(h.algebra(), ext)?,
            )?,
            h.antipode.embed(ext)?,
        )?),
    })
}

pub fn extend_morphism(m: &Morphism, ext: &Field) -> Result<Morphism> {
    Morphism::new(
        m.kind,
        extend_object(&m.src, ext)?,
        extend_object(&m.dst, ext)?,
        m.matrix.embed(ext)?,
    )
}

pub fn extend_subspace(s: &Subspace, ext: &Field) -> Result<Subspace> {
    s.embed(ext)
}

pub fn extend_quotient(q: &QuotientPresentation, ext: &Field) -> Result<QuotientPresentation> {
    Ok(QuotientPresentation {
        total: extend_object(&q.total, ext)?,
        kernel: q.kernel.embed(ext)?,
        projection: q.projection.embed(ext)?,
        section: q.section.embed(ext)?,
        quotient: extend_object(&q.quotient, ext)?,
    })
}

pub fn extend_comodule(v: &Comodule, ext: &Field) -> Result<Comodule> {
    v.embed(ext)
}

/// Splits an extension-field value on the power basis; `Ok` carries the base
/// component when all higher components vanish.
fn base_component(ext: &Field, v: &Value) -> std::result::Result<Value, usize> {
    let (base, _) = ext.extension_parts().expect("extension field");
    match v {
        Value::Ext(coeffs) => {
            for (k, c) in coeffs.iter().enumerate().skip(1) {
                if !base.is_zero(c) {
                    return Err(k);
                }
            }
            Ok(coeffs[0].clone())
        }
        _ => unreachable!("extension values are coefficient vectors"),
    }
}

/// Descends a comodule over `extend(base)` to a comodule over `base`: every
/// structure constant is split on the power basis, and the components away
/// from the identity basis element must all vanish. Inputs violating that are
/// rejected with the offending coordinate; extensions of genuine base
/// comodules always pass and round-trip exactly.
pub fn descend_comodule(v: &Comodule, base: &Coalgebra, ext: &Field) -> Result<Comodule> {
    check_base(ext, base.field())?;
    let extended = extend_coalgebra(base, ext)?;
    if *v.over() != extended {
        return Err(Error::ShapeMismatch(
            "comodule is not over the extension of the given coalgebra".into(),
        ));
    }
    let rho = v.rho();
    let mut descended = ExactMatrix::zeros(base.field(), rho.rows(), rho.cols());
    for i in 0..rho.rows() {
        for j in 0..rho.cols() {
            match base_component(ext, rho.at(i, j)) {
                Ok(c) => descended.set(i, j, c),
                Err(k) => {
                    return Err(Error::DescentFailure(format!(
                        "structure constant at row {i}, column {j} has a nonzero \
                         coefficient on t^{k}"
                    )))
                }
            }
        }
    }
    Comodule::new(base, v.side(), v.dim(), descended)
}
