//! Structure-constant presentations of coalgebras, algebras, bialgebras and
//! Hopf algebras, their validation, duality, tensor products, quotients by
//! coideals and reflexive coequalizers.
//!
//! Conventions: a comultiplication is an `n^2 x n` matrix whose column `k`
//! holds the coordinates of `Delta(e_k)` in the flat `e_i (x) e_j` basis
//! (index `i*n + j`); a multiplication is the transpose shape `n x n^2` with
//! column `i*n + j` holding `e_i * e_j`.

use crate::error::{Error, Result};
use crate::linalg::{flip, ExactMatrix, Subspace};
use crate::scalars::{Field, Value};

/// Coalgebra `(C, Delta, eps)` given by structure constants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coalgebra {
    field: Field,
    dim: usize,
    delta: ExactMatrix,
    counit: ExactMatrix,
}

/// Associative unital algebra given by structure constants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Algebra {
    field: Field,
    dim: usize,
    mul: ExactMatrix,
    unit: ExactMatrix,
}

/// Bialgebra: compatible coalgebra and algebra on one carrier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bialgebra {
    pub coalgebra: Coalgebra,
    pub algebra: Algebra,
}

/// Hopf algebra: bialgebra with antipode.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HopfAlgebra {
    pub bialgebra: Bialgebra,
    pub antipode: ExactMatrix,
}

/// Any of the four structure kinds, as stored in workspaces and catalogs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Object {
    Coalgebra(Coalgebra),
    Algebra(Algebra),
    Bialgebra(Bialgebra),
    Hopf(HopfAlgebra),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ObjectKind {
    Coalgebra,
    Algebra,
    Bialgebra,
    Hopf,
}

impl std::fmt::Display for ObjectKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            ObjectKind::Coalgebra => "coalgebra",
            ObjectKind::Algebra => "algebra",
            ObjectKind::Bialgebra => "bialgebra",
            ObjectKind::Hopf => "hopf",
        };
        write!(f, "{s}")
    }
}

// ---- sparse builders shared with the catalog and the file format ----

/// Assembles a comultiplication matrix from entries `(k, i, j, c)` meaning
/// `Delta(e_k) += c * e_i (x) e_j`.
pub fn delta_matrix(
    field: &Field,
    dim: usize,
    entries: &[(usize, usize, usize, Value)],
) -> ExactMatrix {
    let mut m = ExactMatrix::zeros(field, dim * dim, dim);
    for (k, i, j, c) in entries {
        let cur = m.at(i * dim + j, *k).clone();
        m.set(i * dim + j, *k, field.add(&cur, c));
    }
    m
}

/// Assembles a multiplication matrix from entries `(k, i, j, c)` meaning
/// `e_i * e_j += c * e_k`.
pub fn mul_matrix(
    field: &Field,
    dim: usize,
    entries: &[(usize, usize, usize, Value)],
) -> ExactMatrix {
    let mut m = ExactMatrix::zeros(field, dim, dim * dim);
    for (k, i, j, c) in entries {
        let cur = m.at(*k, i * dim + j).clone();
        m.set(*k, i * dim + j, field.add(&cur, c));
    }
    m
}

impl Coalgebra {
    pub fn new(field: &Field, dim: usize, delta: ExactMatrix, counit: ExactMatrix) -> Result<Self> {
        let c = Coalgebra {
            field: field.clone(),
            dim,
            delta,
            counit,
        };
        let violations = c.violations();
        if violations.is_empty() {
            Ok(c)
        } else {
            Err(Error::AxiomViolations(violations))
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn delta(&self) -> &ExactMatrix {
        &self.delta
    }

    pub fn counit(&self) -> &ExactMatrix {
        &self.counit
    }

    pub fn violations(&self) -> Vec<String> {
        let n = self.dim;
        let mut out = Vec::new();
        if self.delta.rows() != n * n || self.delta.cols() != n {
            out.push("delta-shape".into());
        }
        if self.counit.rows() != 1 || self.counit.cols() != n {
            out.push("counit-shape".into());
        }
        if !out.is_empty() {
            return out;
        }
        let id = ExactMatrix::identity(&self.field, n);
        let lhs = self.delta.kron(&id).matmul(&self.delta);
        let rhs = id.kron(&self.delta).matmul(&self.delta);
        if lhs != rhs {
            out.push("coassociativity".into());
        }
        if self.counit.kron(&id).matmul(&self.delta) != id {
            out.push("counit-left".into());
        }
        if id.kron(&self.counit).matmul(&self.delta) != id {
            out.push("counit-right".into());
        }
        out
    }

    /// Whether the flip of tensor legs fixes the comultiplication.
    pub fn is_cocommutative(&self) -> bool {
        flip(&self.field, self.dim, self.dim).matmul(&self.delta) == self.delta
    }

    /// Dual algebra: multiplication is the transpose of the comultiplication.
    pub fn dualize(&self) -> Algebra {
        Algebra {
            field: self.field.clone(),
            dim: self.dim,
            mul: self.delta.transpose(),
            unit: self.counit.transpose(),
        }
    }
}

impl Algebra {
    pub fn new(field: &Field, dim: usize, mul: ExactMatrix, unit: ExactMatrix) -> Result<Self> {
        let a = Algebra {
            field: field.clone(),
            dim,
            mul,
            unit,
        };
        let violations = a.violations();
        if violations.is_empty() {
            Ok(a)
        } else {
            Err(Error::AxiomViolations(violations))
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mul(&self) -> &ExactMatrix {
        &self.mul
    }

    pub fn unit(&self) -> &ExactMatrix {
        &self.unit
    }

    pub fn violations(&self) -> Vec<String> {
        let n = self.dim;
        let mut out = Vec::new();
        if self.mul.rows() != n || self.mul.cols() != n * n {
            out.push("mul-shape".into());
        }
        if self.unit.rows() != n || self.unit.cols() != 1 {
            out.push("unit-shape".into());
        }
        if !out.is_empty() {
            return out;
        }
        let id = ExactMatrix::identity(&self.field, n);
        let lhs = self.mul.matmul(&self.mul.kron(&id));
        let rhs = self.mul.matmul(&id.kron(&self.mul));
        if lhs != rhs {
            out.push("associativity".into());
        }
        if self.mul.matmul(&self.unit.kron(&id)) != id {
            out.push("unit-left".into());
        }
        if self.mul.matmul(&id.kron(&self.unit)) != id {
            out.push("unit-right".into());
        }
        out
    }

    /// Product of two elements given by coordinate vectors.
    pub fn multiply(&self, a: &[Value], b: &[Value]) -> Vec<Value> {
        let f = &self.field;
        let mut ab = vec![f.zero(); self.dim * self.dim];
        for (i, x) in a.iter().enumerate() {
            if f.is_zero(x) {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !f.is_zero(y) {
                    ab[i * self.dim + j] = f.mul(x, y);
                }
            }
        }
        self.mul.apply(&ab)
    }

    pub fn unit_vector(&self) -> Vec<Value> {
        self.unit.col(0)
    }

    pub fn is_commutative(&self) -> bool {
        self.mul.matmul(&flip(&self.field, self.dim, self.dim)) == self.mul
    }

    /// Dual coalgebra: comultiplication is the transpose of multiplication.
    pub fn dualize(&self) -> Coalgebra {
        Coalgebra {
            field: self.field.clone(),
            dim: self.dim,
            delta: self.mul.transpose(),
            counit: self.unit.transpose(),
        }
    }
}

impl Bialgebra {
    pub fn new(coalgebra: Coalgebra, algebra: Algebra) -> Result<Self> {
        let b = Bialgebra { coalgebra, algebra };
        let violations = b.violations();
        if violations.is_empty() {
            Ok(b)
        } else {
            Err(Error::AxiomViolations(violations))
        }
    }

    pub fn dim(&self) -> usize {
        self.coalgebra.dim
    }

    pub fn field(&self) -> &Field {
        &self.coalgebra.field
    }

    pub fn violations(&self) -> Vec<String> {
        let mut out = self.coalgebra.violations();
        out.extend(self.algebra.violations());
        if self.coalgebra.dim != self.algebra.dim || self.coalgebra.field != self.algebra.field {
            out.push("carrier-mismatch".into());
            return out;
        }
        if !out.is_empty() {
            return out;
        }
        let f = self.field();
        let n = self.dim();
        let delta = &self.coalgebra.delta;
        let counit = &self.coalgebra.counit;
        let mul = &self.algebra.mul;
        let unit = &self.algebra.unit;
        // Delta(e_i e_j) = Delta(e_i) Delta(e_j), column by column to avoid
        // materializing the n^4-row comparison matrices.
        let multiplicative = (0..n * n).all(|col| {
            let lhs = delta.apply(&mul.col(col));
            let rhs = tensor_vec_multiply(
                &self.algebra,
                &self.algebra,
                &delta.col(col / n),
                &delta.col(col % n),
            );
            lhs == rhs
        });
        if !multiplicative {
            out.push("bialgebra-delta-multiplicative".into());
        }
        if counit.matmul(mul) != counit.kron(counit) {
            out.push("bialgebra-counit-multiplicative".into());
        }
        if delta.matmul(unit) != unit.kron(unit) {
            out.push("bialgebra-delta-unit".into());
        }
        if counit.matmul(unit) != ExactMatrix::identity(f, 1) {
            out.push("bialgebra-counit-unit".into());
        }
        out
    }
}

impl HopfAlgebra {
    pub fn new(bialgebra: Bialgebra, antipode: ExactMatrix) -> Result<Self> {
        let h = HopfAlgebra {
            bialgebra,
            antipode,
        };
        let violations = h.violations();
        if violations.is_empty() {
            Ok(h)
        } else {
            Err(Error::AxiomViolations(violations))
        }
    }

    pub fn dim(&self) -> usize {
        self.bialgebra.dim()
    }

    pub fn field(&self) -> &Field {
        self.bialgebra.field()
    }

    pub fn coalgebra(&self) -> &Coalgebra {
        &self.bialgebra.coalgebra
    }

    pub fn algebra(&self) -> &Algebra {
        &self.bialgebra.algebra
    }

    pub fn violations(&self) -> Vec<String> {
        let mut out = self.bialgebra.violations();
        let n = self.dim();
        if self.antipode.rows() != n || self.antipode.cols() != n {
            out.push("antipode-shape".into());
        }
        if !out.is_empty() {
            return out;
        }
        let f = self.field();
        let id = ExactMatrix::identity(f, n);
        let delta = &self.bialgebra.coalgebra.delta;
        let mul = &self.bialgebra.algebra.mul;
        let target = self
            .bialgebra
            .algebra
            .unit
            .matmul(&self.bialgebra.coalgebra.counit);
        if mul.matmul(&self.antipode.kron(&id)).matmul(delta) != target {
            out.push("antipode-left".into());
        }
        if mul.matmul(&id.kron(&self.antipode)).matmul(delta) != target {
            out.push("antipode-right".into());
        }
        out
    }

    /// Dual Hopf algebra.
    pub fn dualize(&self) -> HopfAlgebra {
        HopfAlgebra {
            bialgebra: Bialgebra {
                coalgebra: self.bialgebra.algebra.dualize(),
                algebra: self.bialgebra.coalgebra.dualize(),
            },
            antipode: self.antipode.transpose(),
        }
    }
}

impl Object {
    pub fn kind(&self) -> ObjectKind {
        match self {
            Object::Coalgebra(_) => ObjectKind::Coalgebra,
            Object::Algebra(_) => ObjectKind::Algebra,
            Object::Bialgebra(_) => ObjectKind::Bialgebra,
            Object::Hopf(_) => ObjectKind::Hopf,
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            Object::Coalgebra(c) => c.dim,
            Object::Algebra(a) => a.dim,
            Object::Bialgebra(b) => b.dim(),
            Object::Hopf(h) => h.dim(),
        }
    }

    pub fn field(&self) -> &Field {
        match self {
            Object::Coalgebra(c) => &c.field,
            Object::Algebra(a) => &a.field,
            Object::Bialgebra(b) => b.field(),
            Object::Hopf(h) => h.field(),
        }
    }

    pub fn coalgebra(&self) -> Option<&Coalgebra> {
        match self {
            Object::Coalgebra(c) => Some(c),
            Object::Bialgebra(b) => Some(&b.coalgebra),
            Object::Hopf(h) => Some(h.coalgebra()),
            Object::Algebra(_) => None,
        }
    }

    pub fn algebra(&self) -> Option<&Algebra> {
        match self {
            Object::Algebra(a) => Some(a),
            Object::Bialgebra(b) => Some(&b.algebra),
            Object::Hopf(h) => Some(h.algebra()),
            Object::Coalgebra(_) => None,
        }
    }

    pub fn antipode(&self) -> Option<&ExactMatrix> {
        match self {
            Object::Hopf(h) => Some(&h.antipode),
            _ => None,
        }
    }

    pub fn violations(&self) -> Vec<String> {
        match self {
            Object::Coalgebra(c) => c.violations(),
            Object::Algebra(a) => a.violations(),
            Object::Bialgebra(b) => b.violations(),
            Object::Hopf(h) => h.violations(),
        }
    }

    pub fn dualize(&self) -> Object {
        match self {
            Object::Coalgebra(c) => Object::Algebra(c.dualize()),
            Object::Algebra(a) => Object::Coalgebra(a.dualize()),
            Object::Bialgebra(b) => Object::Bialgebra(Bialgebra {
                coalgebra: b.algebra.dualize(),
                algebra: b.coalgebra.dualize(),
            }),
            Object::Hopf(h) => Object::Hopf(h.dualize()),
        }
    }
}

/// Tensor product of two objects, at the weaker of the two kinds. Dimension
/// multiplies; the flat index of `e_i (x) e_j` is `i*dim_Y + j`.
pub fn tensor_objects(x: &Object, y: &Object) -> Result<Object> {
    if x.field() != y.field() {
        return Err(Error::FieldMismatch(
            x.field().to_string(),
            y.field().to_string(),
        ));
    }
    let f = x.field();
    let (a, b) = (x.dim(), y.dim());
    use ObjectKind::*;
    let kind = match (x.kind(), y.kind()) {
        (Hopf, Hopf) => Hopf,
        (Coalgebra, Algebra) | (Algebra, Coalgebra) => {
            return Err(Error::ShapeMismatch(
                "cannot tensor an algebra with a coalgebra".into(),
            ))
        }
        (Algebra, _) | (_, Algebra) => Algebra,
        (Coalgebra, _) | (_, Coalgebra) => Coalgebra,
        _ => Bialgebra,
    };

    let dim = a * b;
    let coalg = match (x.coalgebra(), y.coalgebra()) {
        (Some(cx), Some(cy)) => {
            // Delta(e_i (x) e_j) interleaves the legs of Delta(e_i), Delta(e_j)
            let mut delta = ExactMatrix::zeros(f, dim * dim, dim);
            for i in 0..a {
                let dx = cx.delta.col(i);
                for j in 0..b {
                    let dy = cy.delta.col(j);
                    for (p, u) in dx.iter().enumerate() {
                        if f.is_zero(u) {
                            continue;
                        }
                        let (c1, c2) = (p / a, p % a);
                        for (r, v) in dy.iter().enumerate() {
                            if f.is_zero(v) {
                                continue;
                            }
                            let (d1, d2) = (r / b, r % b);
                            let row = (c1 * b + d1) * dim + (c2 * b + d2);
                            delta.set(row, i * b + j, f.mul(u, v));
                        }
                    }
                }
            }
            let counit = cx.counit.kron(&cy.counit);
            Some(self::Coalgebra::new(f, dim, delta, counit).expect("tensor coalgebra axioms"))
        }
        _ => None,
    };
    let alg = match (x.algebra(), y.algebra()) {
        (Some(ax), Some(ay)) => {
            // (e_i (x) e_j)(e_k (x) e_l) = (e_i e_k) (x) (e_j e_l)
            let mut mul = ExactMatrix::zeros(f, dim, dim * dim);
            for i in 0..a {
                for k in 0..a {
                    let px = ax.mul.col(i * a + k);
                    for j in 0..b {
                        for l in 0..b {
                            let py = ay.mul.col(j * b + l);
                            let col = (i * b + j) * dim + (k * b + l);
                            for (s, u) in px.iter().enumerate() {
                                if f.is_zero(u) {
                                    continue;
                                }
                                for (t, v) in py.iter().enumerate() {
                                    if !f.is_zero(v) {
                                        mul.set(s * b + t, col, f.mul(u, v));
                                    }
                                }
                            }
                        }
                    }
                }
            }
            let unit = ax.unit.kron(&ay.unit);
            Some(self::Algebra::new(f, dim, mul, unit).expect("tensor algebra axioms"))
        }
        _ => None,
    };
    Ok(match kind {
        Coalgebra => Object::Coalgebra(coalg.unwrap()),
        Algebra => Object::Algebra(alg.unwrap()),
        Bialgebra => Object::Bialgebra(
            self::Bialgebra::new(coalg.unwrap(), alg.unwrap()).expect("tensor bialgebra axioms"),
        ),
        Hopf => {
            let s = x.antipode().unwrap().kron(y.antipode().unwrap());
            Object::Hopf(
                HopfAlgebra::new(
                    self::Bialgebra::new(coalg.unwrap(), alg.unwrap())
                        .expect("tensor bialgebra axioms"),
                    s,
                )
                .expect("tensor antipode axioms"),
            )
        }
    })
}

// ---- morphisms ----

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MorphismKind {
    Coalg,
    Alg,
    Bialg,
    Hopf,
    Linear,
}

impl std::fmt::Display for MorphismKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            MorphismKind::Coalg => "coalg",
            MorphismKind::Alg => "alg",
            MorphismKind::Bialg => "bialg",
            MorphismKind::Hopf => "hopf",
            MorphismKind::Linear => "linear",
        };
        write!(f, "{s}")
    }
}

impl MorphismKind {
    /// The strongest morphism kind two object kinds can support.
    pub fn strongest(src: ObjectKind, dst: ObjectKind) -> MorphismKind {
        use ObjectKind::*;
        match (src, dst) {
            (Hopf, Hopf) => MorphismKind::Hopf,
            (Hopf | Bialgebra, Hopf | Bialgebra) => MorphismKind::Bialg,
            (Algebra, Algebra | Hopf | Bialgebra) | (Hopf | Bialgebra, Algebra) => {
                MorphismKind::Alg
            }
            (Coalgebra, Coalgebra | Hopf | Bialgebra) | (Hopf | Bialgebra, Coalgebra) => {
                MorphismKind::Coalg
            }
            (Coalgebra, Algebra) | (Algebra, Coalgebra) => MorphismKind::Linear,
        }
    }

    pub fn respects_coalgebra(self) -> bool {
        matches!(
            self,
            MorphismKind::Coalg | MorphismKind::Bialg | MorphismKind::Hopf
        )
    }

    pub fn respects_algebra(self) -> bool {
        matches!(
            self,
            MorphismKind::Alg | MorphismKind::Bialg | MorphismKind::Hopf
        )
    }
}

/// A morphism between two structures; the matrix acts on coordinate columns,
/// so its shape is `dim(dst) x dim(src)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    pub kind: MorphismKind,
    pub src: Object,
    pub dst: Object,
    pub matrix: ExactMatrix,
}

/// Axiom failures of a would-be coalgebra morphism, by name.
pub fn coalgebra_morphism_violations(
    src: &Coalgebra,
    dst: &Coalgebra,
    m: &ExactMatrix,
) -> Vec<String> {
    if m.rows() != dst.dim || m.cols() != src.dim {
        return vec!["matrix-shape".into()];
    }
    let mut out = Vec::new();
    if m.kron(m).matmul(&src.delta) != dst.delta.matmul(m) {
        out.push("comultiplicative".into());
    }
    if dst.counit.matmul(m) != src.counit {
        out.push("counit-preserving".into());
    }
    out
}

/// Fast boolean form of [`coalgebra_morphism_violations`].
pub fn is_coalgebra_morphism(src: &Coalgebra, dst: &Coalgebra, m: &ExactMatrix) -> bool {
    m.rows() == dst.dim
        && m.cols() == src.dim
        && dst.counit.matmul(m) == src.counit
        && m.kron(m).matmul(&src.delta) == dst.delta.matmul(m)
}

pub fn algebra_morphism_violations(src: &Algebra, dst: &Algebra, m: &ExactMatrix) -> Vec<String> {
    if m.rows() != dst.dim || m.cols() != src.dim {
        return vec!["matrix-shape".into()];
    }
    let mut out = Vec::new();
    if m.matmul(&src.mul) != dst.mul.matmul(&m.kron(m)) {
        out.push("multiplicative".into());
    }
    if m.matmul(&src.unit) != dst.unit {
        out.push("unit-preserving".into());
    }
    out
}

impl Morphism {
    pub fn new(kind: MorphismKind, src: Object, dst: Object, matrix: ExactMatrix) -> Result<Self> {
        let violations = Self::violations(kind, &src, &dst, &matrix);
        if violations.is_empty() {
            Ok(Morphism {
                kind,
                src,
                dst,
                matrix,
            })
        } else {
            Err(Error::AxiomViolations(violations))
        }
    }

    pub fn violations(
        kind: MorphismKind,
        src: &Object,
        dst: &Object,
        matrix: &ExactMatrix,
    ) -> Vec<String> {
        if src.field() != dst.field() || *matrix.field() != *src.field() {
            return vec!["field-mismatch".into()];
        }
        if matrix.rows() != dst.dim() || matrix.cols() != src.dim() {
            return vec!["matrix-shape".into()];
        }
        let mut out = Vec::new();
        if kind.respects_coalgebra() {
            match (src.coalgebra(), dst.coalgebra()) {
                (Some(cs), Some(cd)) => out.extend(coalgebra_morphism_violations(cs, cd, matrix)),
                _ => out.push("missing-coalgebra-structure".into()),
            }
        }
        if kind.respects_algebra() {
            match (src.algebra(), dst.algebra()) {
                (Some(sa), Some(da)) => out.extend(algebra_morphism_violations(sa, da, matrix)),
                _ => out.push("missing-algebra-structure".into()),
            }
        }
        if kind == MorphismKind::Hopf {
            // Hopf morphisms commute with antipodes; checked, not assumed.
            match (src.antipode(), dst.antipode()) {
                (Some(ss), Some(sd)) => {
                    if sd.matmul(matrix) != matrix.matmul(ss) {
                        out.push("antipode-compatible".into());
                    }
                }
                _ => out.push("missing-antipode".into()),
            }
        }
        out
    }

    pub fn identity(obj: &Object, kind: MorphismKind) -> Morphism {
        let matrix = ExactMatrix::identity(obj.field(), obj.dim());
        Morphism {
            kind,
            src: obj.clone(),
            dst: obj.clone(),
            matrix,
        }
    }

    /// `g . f`, keeping the kind when both agree and `linear` otherwise.
    pub fn compose(g: &Morphism, f: &Morphism) -> Result<Morphism> {
        if f.dst != g.src {
            return Err(Error::ShapeMismatch("composition endpoints differ".into()));
        }
        let kind = if g.kind == f.kind {
            g.kind
        } else {
            MorphismKind::Linear
        };
        Ok(Morphism {
            kind,
            src: f.src.clone(),
            dst: g.dst.clone(),
            matrix: g.matrix.matmul(&f.matrix),
        })
    }

    /// Contravariant dual: transpose matrix between dualized objects.
    pub fn dualize(&self) -> Morphism {
        let kind = match self.kind {
            MorphismKind::Coalg => MorphismKind::Alg,
            MorphismKind::Alg => MorphismKind::Coalg,
            k => k,
        };
        Morphism {
            kind,
            src: self.dst.dualize(),
            dst: self.src.dualize(),
            matrix: self.matrix.transpose(),
        }
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }
}

// ---- quotients ----

/// A quotient presentation: the kernel, a projection, a section splitting it,
/// and the induced structure on the quotient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientPresentation {
    pub total: Object,
    pub kernel: Subspace,
    pub projection: ExactMatrix,
    pub section: ExactMatrix,
    pub quotient: Object,
}

impl QuotientPresentation {
    pub fn quotient_dim(&self) -> usize {
        self.quotient.dim()
    }

    pub fn projection_morphism(&self) -> Morphism {
        let kind = MorphismKind::strongest(self.total.kind(), self.quotient.kind());
        Morphism::new(
            kind,
            self.total.clone(),
            self.quotient.clone(),
            self.projection.clone(),
        )
        .expect("projection is a morphism")
    }
}

/// Names the coideal condition violated by `K` in `C`, if any.
pub fn coideal_violation(c: &Coalgebra, k: &Subspace) -> Option<String> {
    if k.ambient_dim() != c.dim {
        return Some(format!(
            "ambient dimension {} differs from dim C = {}",
            k.ambient_dim(),
            c.dim
        ));
    }
    let f = &c.field;
    for row in k.basis_rows() {
        let e = c.counit.apply(&row);
        if !f.is_zero(&e[0]) {
            return Some(format!(
                "counit does not vanish on a kernel vector (value {})",
                f.value_string(&e[0])
            ));
        }
    }
    if k.dim() == 0 {
        return None;
    }
    // Delta(K) inside K (x) C + C (x) K
    let id = ExactMatrix::identity(f, c.dim);
    let kc = Subspace::from_matrix_rows(&k.basis().kron(&id));
    let ck = Subspace::from_matrix_rows(&id.kron(k.basis()));
    let window = kc.sum(&ck).expect("same ambient");
    for row in k.basis_rows() {
        let dk = c.delta.apply(&row);
        if !window.contains_vector(&dk) {
            return Some("Delta(K) not contained in K(x)C + C(x)K".into());
        }
    }
    None
}

/// Quotient of a coalgebra by a coideal, with canonical projection/section.
pub fn quotient_by_coideal(c: &Coalgebra, kernel: &Subspace) -> Result<QuotientPresentation> {
    quotient_object_by_kernel(&Object::Coalgebra(c.clone()), kernel)
}

/// Quotient of any coalgebra-bearing object by a kernel subspace. The kernel
/// must be a coideal; when the object carries an algebra it must also be a
/// two-sided ideal, and for Hopf objects antipode-stable. Violations surface
/// as `NotACoideal` since they make the induced structure ill-defined.
pub fn quotient_object_by_kernel(obj: &Object, kernel: &Subspace) -> Result<QuotientPresentation> {
    let f = obj.field();
    let c = obj
        .coalgebra()
        .ok_or_else(|| Error::ShapeMismatch("quotient requires a coalgebra structure".into()))?;
    if let Some(reason) = coideal_violation(c, kernel) {
        return Err(Error::NotACoideal(reason));
    }
    let (projection, section) = kernel.quotient_maps();
    let q = projection.rows();
    let delta_q = projection
        .kron(&projection)
        .matmul(&c.delta)
        .matmul(&section);
    let counit_q = c.counit.matmul(&section);
    let coalg_q = Coalgebra::new(f, q, delta_q, counit_q).map_err(|_| {
        Error::NotACoideal("induced comultiplication fails coalgebra axioms".into())
    })?;

    let alg_q = match obj.algebra() {
        None => None,
        Some(alg) => {
            if !ideal_stable(alg, kernel) {
                return Err(Error::NotACoideal("kernel is not a two-sided ideal".into()));
            }
            let mul_q = projection.matmul(&alg.mul).matmul(&section.kron(&section));
            let unit_q = projection.matmul(&alg.unit);
            Some(Algebra::new(f, q, mul_q, unit_q).map_err(|_| {
                Error::NotACoideal("induced multiplication fails algebra axioms".into())
            })?)
        }
    };
    let quotient =
        match (alg_q, obj.antipode()) {
            (None, _) => Object::Coalgebra(coalg_q),
            (Some(a), None) => Object::Bialgebra(Bialgebra::new(coalg_q, a).map_err(|_| {
                Error::NotACoideal("induced structure fails bialgebra axioms".into())
            })?),
            (Some(a), Some(s)) => {
                if !map_stable(s, kernel) {
                    return Err(Error::NotACoideal("kernel is not antipode-stable".into()));
                }
                let s_q = projection.matmul(s).matmul(&section);
                Object::Hopf(
                    HopfAlgebra::new(
                        Bialgebra::new(coalg_q, a).map_err(|_| {
                            Error::NotACoideal("induced structure fails bialgebra axioms".into())
                        })?,
                        s_q,
                    )
                    .map_err(|_| Error::NotACoideal("induced antipode fails Hopf axioms".into()))?,
                )
            }
        };
    debug_assert!(
        Morphism::violations(
            MorphismKind::strongest(obj.kind(), quotient.kind()),
            obj,
            &quotient,
            &projection
        )
        .is_empty(),
        "projection must be a morphism"
    );
    Ok(QuotientPresentation {
        total: obj.clone(),
        kernel: kernel.clone(),
        projection,
        section,
        quotient,
    })
}

/// Product of two flat vectors in the tensor-product algebra `A (x) B`,
/// computed from structure constants without building any Kronecker matrix.
pub fn tensor_vec_multiply(a: &Algebra, b: &Algebra, u: &[Value], v: &[Value]) -> Vec<Value> {
    let f = &a.field;
    let (na, nb) = (a.dim, b.dim);
    debug_assert_eq!(u.len(), na * nb);
    debug_assert_eq!(v.len(), na * nb);
    let mut out = vec![f.zero(); na * nb];
    for (p, cu) in u.iter().enumerate() {
        if f.is_zero(cu) {
            continue;
        }
        let (i, j) = (p / nb, p % nb);
        for (r, cv) in v.iter().enumerate() {
            if f.is_zero(cv) {
                continue;
            }
            let (k, l) = (r / nb, r % nb);
            let coeff = f.mul(cu, cv);
            let left = a.mul.col(i * na + k);
            let right = b.mul.col(j * nb + l);
            for (x, lx) in left.iter().enumerate() {
                if f.is_zero(lx) {
                    continue;
                }
                for (y, ry) in right.iter().enumerate() {
                    if f.is_zero(ry) {
                        continue;
                    }
                    let idx = x * nb + y;
                    let t = f.mul(&coeff, &f.mul(lx, ry));
                    out[idx] = f.add(&out[idx], &t);
                }
            }
        }
    }
    out
}

/// Is `K` stable under left and right multiplication by the whole algebra?
pub fn ideal_stable(alg: &Algebra, k: &Subspace) -> bool {
    let f = &alg.field;
    let n = alg.dim;
    let basis: Vec<Vec<Value>> = (0..n)
        .map(|i| {
            let mut v = vec![f.zero(); n];
            v[i] = f.one();
            v
        })
        .collect();
    for kv in k.basis_rows() {
        for h in &basis {
            if !k.contains_vector(&alg.multiply(h, &kv))
                || !k.contains_vector(&alg.multiply(&kv, h))
            {
                return false;
            }
        }
    }
    true
}

/// Is `K` mapped into itself by the matrix `m`?
pub fn map_stable(m: &ExactMatrix, k: &Subspace) -> bool {
    k.basis_rows()
        .iter()
        .all(|v| k.contains_vector(&m.apply(v)))
}

/// Coequalizer of a reflexive pair `f1, f2 : X -> Y` with common section `s`.
/// The kernel is the image of `f1 - f2`; by reflexivity it is simultaneously
/// a coideal and (for bialgebra or Hopf morphisms) a two-sided ideal, so the
/// vector-space coequalizer carries the induced structure of `Y`'s kind.
pub fn reflexive_coequalizer(
    f1: &Morphism,
    f2: &Morphism,
    s: &Morphism,
) -> Result<QuotientPresentation> {
    if f1.src != f2.src || f1.dst != f2.dst {
        return Err(Error::ShapeMismatch(
            "parallel pair endpoints differ".into(),
        ));
    }
    if s.src != f1.dst || s.dst != f1.src {
        return Err(Error::NotReflexive(
            "section endpoints do not match the pair".into(),
        ));
    }
    let y = &f1.dst;
    let id = ExactMatrix::identity(y.field(), y.dim());
    if f1.matrix.matmul(&s.matrix) != id || f2.matrix.matmul(&s.matrix) != id {
        return Err(Error::NotReflexive(
            "the given section does not split both maps".into(),
        ));
    }
    let diff = f1.matrix.sub(&f2.matrix);
    let kernel = Subspace::from_matrix_cols(&diff);
    quotient_object_by_kernel(y, &kernel)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::rationals()
    }

    /// Group algebra of C2, as a Hopf object.
    fn kc2(f: &Field) -> Object {
        let one = f.one();
        let delta = delta_matrix(f, 2, &[(0, 0, 0, one.clone()), (1, 1, 1, one.clone())]);
        let counit = ExactMatrix::from_rows(f, vec![vec![one.clone(), one.clone()]]);
        let mul = mul_matrix(
            f,
            2,
            &[
                (0, 0, 0, one.clone()),
                (1, 0, 1, one.clone()),
                (1, 1, 0, one.clone()),
                (0, 1, 1, one.clone()),
            ],
        );
        let unit = ExactMatrix::column(f, vec![one.clone(), f.zero()]);
        let antipode = ExactMatrix::identity(f, 2);
        Object::Hopf(
            HopfAlgebra::new(
                Bialgebra::new(
                    Coalgebra::new(f, 2, delta, counit).unwrap(),
                    Algebra::new(f, 2, mul, unit).unwrap(),
                )
                .unwrap(),
                antipode,
            )
            .unwrap(),
        )
    }

    /// Comatrix coalgebra M_n^c.
    fn comatrix(f: &Field, n: usize) -> Coalgebra {
        let dim = n * n;
        let mut entries = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    entries.push((i * n + j, i * n + k, k * n + j, f.one()));
                }
            }
        }
        let delta = delta_matrix(f, dim, &entries);
        let counit =
            ExactMatrix::from_fn(
                f,
                1,
                dim,
                |_, e| {
                    if e / n == e % n {
                        f.one()
                    } else {
                        f.zero()
                    }
                },
            );
        Coalgebra::new(f, dim, delta, counit).unwrap()
    }

    #[test]
    fn group_like_coalgebra_validates() {
        let obj = kc2(&q());
        assert!(obj.violations().is_empty());
        assert!(obj.coalgebra().unwrap().is_cocommutative());
    }

    #[test]
    fn comatrix_validates_and_is_not_cocommutative() {
        let c = comatrix(&q(), 2);
        assert!(c.violations().is_empty());
        assert!(!c.is_cocommutative());
    }

    #[test]
    fn broken_counit_is_named() {
        let f = q();
        // Delta(g) = g (x) 1 with eps(g) = 1 fails exactly the left counit law.
        let delta = delta_matrix(&f, 2, &[(0, 0, 0, f.one()), (1, 1, 0, f.one())]);
        let counit = ExactMatrix::from_rows(&f, vec![vec![f.one(), f.one()]]);
        let err = Coalgebra::new(&f, 2, delta, counit).unwrap_err();
        assert_eq!(err, Error::AxiomViolations(vec!["counit-left".into()]));
    }

    #[test]
    fn every_single_entry_mutation_breaks_some_axiom() {
        let f = q();
        let Object::Hopf(h) = kc2(&f) else {
            unreachable!()
        };
        let c = h.coalgebra();
        for r in 0..4 {
            for col in 0..2 {
                let mut delta = c.delta().clone();
                let bumped = f.add(delta.at(r, col), &f.one());
                delta.set(r, col, bumped);
                assert!(
                    Coalgebra::new(&f, 2, delta, c.counit().clone()).is_err(),
                    "perturbing delta[{r},{col}] must fail"
                );
            }
        }
    }

    #[test]
    fn dual_of_group_algebra_is_function_algebra() {
        let f = q();
        let Object::Hopf(h) = kc2(&f) else {
            unreachable!()
        };
        let dual = h.coalgebra().dualize();
        assert!(dual.violations().is_empty());
        // delta_x * delta_y = [x = y] delta_x
        let e0 = vec![f.one(), f.zero()];
        let e1 = vec![f.zero(), f.one()];
        assert_eq!(dual.multiply(&e0, &e0), e0);
        assert_eq!(dual.multiply(&e0, &e1), vec![f.zero(), f.zero()]);
        assert_eq!(dual.multiply(&e1, &e1), e1);
        // double dual gives back the original presentation
        assert_eq!(dual.dualize().delta, *h.coalgebra().delta());
    }

    #[test]
    fn dual_of_comatrix_is_full_matrix_algebra() {
        let f = q();
        let alg = comatrix(&f, 2).dualize();
        assert!(alg.violations().is_empty());
        let e = |i: usize, j: usize| {
            let mut v = vec![f.zero(); 4];
            v[i * 2 + j] = f.one();
            v
        };
        assert_eq!(alg.multiply(&e(0, 1), &e(1, 0)), e(0, 0));
        assert_eq!(alg.multiply(&e(0, 1), &e(0, 1)), vec![f.zero(); 4]);
        let mut unit = vec![f.zero(); 4];
        unit[0] = f.one();
        unit[3] = f.one();
        assert_eq!(alg.unit_vector(), unit);
    }

    #[test]
    fn tensor_square_of_group_algebra() {
        let x = kc2(&q());
        let t = tensor_objects(&x, &x).unwrap();
        assert_eq!(t.kind(), ObjectKind::Hopf);
        assert_eq!(t.dim(), 4);
        assert!(t.violations().is_empty());
        assert!(t.coalgebra().unwrap().is_cocommutative());
        // all four basis vectors are group-like
        let c = t.coalgebra().unwrap();
        for k in 0..4 {
            let col = c.delta().col(k);
            for (idx, v) in col.iter().enumerate() {
                assert_eq!(!q().is_zero(v), idx == k * 4 + k);
            }
        }
    }

    #[test]
    fn tensor_with_unit_object_is_identity() {
        let f = q();
        let triv = Object::Coalgebra(
            Coalgebra::new(
                &f,
                1,
                delta_matrix(&f, 1, &[(0, 0, 0, f.one())]),
                ExactMatrix::from_rows(&f, vec![vec![f.one()]]),
            )
            .unwrap(),
        );
        let Object::Hopf(h) = kc2(&f) else {
            unreachable!()
        };
        let c = Object::Coalgebra(h.coalgebra().clone());
        let t = tensor_objects(&triv, &c).unwrap();
        assert_eq!(t.coalgebra().unwrap().delta(), h.coalgebra().delta());
    }

    #[test]
    fn tensor_of_comatrix_and_group_algebra_validates() {
        let f = q();
        let Object::Hopf(h) = kc2(&f) else {
            unreachable!()
        };
        let t = tensor_objects(
            &Object::Coalgebra(comatrix(&f, 2)),
            &Object::Coalgebra(h.coalgebra().clone()),
        )
        .unwrap();
        assert_eq!(t.dim(), 8);
        assert!(t.violations().is_empty());
    }

    #[test]
    fn quotient_by_zero_is_identity_presentation() {
        let f = q();
        let Object::Hopf(h) = kc2(&f) else {
            unreachable!()
        };
        let c = h.coalgebra().clone();
        let pres = quotient_by_coideal(&c, &Subspace::zero(&f, 2)).unwrap();
        assert_eq!(pres.projection, ExactMatrix::identity(&f, 2));
        assert_eq!(pres.quotient.coalgebra().unwrap(), &c);
    }

    #[test]
    fn quotient_of_group_algebra_by_augmentation_coideal() {
        let f = q();
        let Object::Hopf(h) = kc2(&f) else {
            unreachable!()
        };
        let c = h.coalgebra().clone();
        // span(g - 1)
        let k = Subspace::from_rows(&f, 2, vec![vec![f.from_i64(-1), f.from_i64(1)]]);
        let pres = quotient_by_coideal(&c, &k).unwrap();
        assert_eq!(pres.quotient_dim(), 1);
        assert_eq!(
            pres.projection.matmul(&pres.section),
            ExactMatrix::identity(&f, 1)
        );
        let qc = pres.quotient.coalgebra().unwrap();
        assert!(f.is_one(qc.delta().at(0, 0)));
        assert!(f.is_one(qc.counit().at(0, 0)));
    }

    #[test]
    fn non_coideal_is_rejected() {
        let f = q();
        let Object::Hopf(h) = kc2(&f) else {
            unreachable!()
        };
        let k = Subspace::from_rows(&f, 2, vec![vec![f.zero(), f.one()]]); // span(g)
        let err = quotient_by_coideal(h.coalgebra(), &k).unwrap_err();
        assert!(matches!(err, Error::NotACoideal(m) if m.contains("counit")));
    }

    #[test]
    fn quotient_structure_is_section_independent() {
        let f = q();
        let Object::Hopf(h) = kc2(&f) else {
            unreachable!()
        };
        let c = h.coalgebra().clone();
        let k = Subspace::from_rows(&f, 2, vec![vec![f.from_i64(-1), f.from_i64(1)]]);
        let pres = quotient_by_coideal(&c, &k).unwrap();
        // alternative section: add a kernel component to the canonical one
        let mut alt = pres.section.clone();
        for (i, v) in k.basis_rows()[0].iter().enumerate() {
            let bump = f.add(alt.at(i, 0), v);
            alt.set(i, 0, bump);
        }
        assert_eq!(
            pres.projection.matmul(&alt),
            ExactMatrix::identity(&f, 1),
            "alternative section splits the projection"
        );
        let p2 = pres.projection.kron(&pres.projection);
        let delta_alt = p2.matmul(c.delta()).matmul(&alt);
        assert_eq!(&delta_alt, pres.quotient.coalgebra().unwrap().delta());
    }

    #[test]
    fn reflexive_coequalizer_of_multiplication_pair() {
        let f = q();
        let y = kc2(&f);
        let x = tensor_objects(&y, &y).unwrap();
        let alg = y.algebra().unwrap();
        let coalg = y.coalgebra().unwrap();
        let id2 = ExactMatrix::identity(&f, 2);
        let mult =
            Morphism::new(MorphismKind::Hopf, x.clone(), y.clone(), alg.mul().clone()).unwrap();
        let id_eps = Morphism::new(
            MorphismKind::Hopf,
            x.clone(),
            y.clone(),
            id2.kron(coalg.counit()),
        )
        .unwrap();
        let s = Morphism::new(
            MorphismKind::Hopf,
            y.clone(),
            x.clone(),
            id2.kron(alg.unit()),
        )
        .unwrap();

        let pres = reflexive_coequalizer(&mult, &id_eps, &s).unwrap();
        let expected = Subspace::from_rows(&f, 2, vec![vec![f.from_i64(-1), f.from_i64(1)]]);
        assert_eq!(pres.kernel, expected);
        assert_eq!(pres.quotient_dim(), 1);
        assert_eq!(pres.quotient.kind(), ObjectKind::Hopf);

        // mirrored version
        let eps_id = Morphism::new(
            MorphismKind::Hopf,
            x.clone(),
            y.clone(),
            coalg.counit().kron(&id2),
        )
        .unwrap();
        let s2 = Morphism::new(
            MorphismKind::Hopf,
            y.clone(),
            x.clone(),
            alg.unit().kron(&id2),
        )
        .unwrap();
        let pres2 = reflexive_coequalizer(&mult, &eps_id, &s2).unwrap();
        assert_eq!(pres2.kernel, expected);
    }

    #[test]
    fn equal_pair_coequalizes_to_identity() {
        let f = q();
        let y = kc2(&f);
        let idm = Morphism::identity(&y, MorphismKind::Hopf);
        let pres = reflexive_coequalizer(&idm, &idm, &idm).unwrap();
        assert_eq!(pres.kernel.dim(), 0);
        assert_eq!(pres.quotient_dim(), 2);
    }

    #[test]
    fn failed_section_is_reported() {
        let f = q();
        let y = kc2(&f);
        let x = tensor_objects(&y, &y).unwrap();
        let alg = y.algebra().unwrap();
        let mult =
            Morphism::new(MorphismKind::Hopf, x.clone(), y.clone(), alg.mul().clone()).unwrap();
        let bad = Morphism {
            kind: MorphismKind::Linear,
            src: y.clone(),
            dst: x.clone(),
            matrix: ExactMatrix::zeros(&f, 4, 2),
        };
        assert!(matches!(
            reflexive_coequalizer(&mult, &mult, &bad),
            Err(Error::NotReflexive(_))
        ));
    }

    #[test]
    fn dualize_is_contravariant_on_composites() {
        let f = q();
        let y = kc2(&f);
        let Object::Hopf(h) = &y else { unreachable!() };
        let c = Object::Coalgebra(h.coalgebra().clone());
        // coalgebra endo g -> 1 composed with the identity
        let endo = Morphism::new(
            MorphismKind::Coalg,
            c.clone(),
            c.clone(),
            ExactMatrix::from_rows(&f, vec![vec![f.one(), f.one()], vec![f.zero(), f.zero()]]),
        )
        .unwrap();
        let idm = Morphism::identity(&c, MorphismKind::Coalg);
        let comp = Morphism::compose(&idm, &endo).unwrap();
        let dual_comp = comp.dualize();
        let expected = Morphism::compose(&endo.dualize(), &idm.dualize()).unwrap();
        assert_eq!(dual_comp.matrix, expected.matrix);
        assert_eq!(endo.dualize().kind, MorphismKind::Alg);
    }

    #[test]
    fn zero_dimensional_objects_are_permitted() {
        let f = q();
        let zero = Coalgebra::new(
            &f,
            0,
            ExactMatrix::zeros(&f, 0, 0),
            ExactMatrix::zeros(&f, 1, 0),
        )
        .unwrap();
        assert!(zero.violations().is_empty());
        assert!(zero.is_cocommutative());
    }
}
