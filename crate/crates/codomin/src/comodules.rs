//! Right/left comodules and bicomodules, corestriction along coalgebra
//! morphisms, cotensor products, coinvariants, colinear Hom solvers, and the
//! injectivity (coflatness) and splitting tests.
//!
//! A right coaction on an `m`-dimensional space over an `n`-dimensional
//! coalgebra is an `mn x m` matrix whose column `v` holds `rho(e_v)` in the
//! flat `V (x) C` basis (index `w*n + c`); left coactions land in `C (x) V`
//! (index `c*m + w`). Hom spaces are flattened row-major, so the matrix entry
//! `phi[r][s]` of a map `V -> W` sits at index `r*dim(V) + s`, matching the
//! `W (x) V*` identification.

use crate::error::{Error, Result};
use crate::linalg::{ExactMatrix, Subspace};
use crate::scalars::{Field, Value};
use crate::structures::{Coalgebra, Morphism, MorphismKind, Object};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", if *self == Side::Left { "left" } else { "right" })
    }
}

/// A comodule over a coalgebra, on one side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comodule {
    over: Coalgebra,
    side: Side,
    dim: usize,
    rho: ExactMatrix,
}

/// A bicomodule: compatible left and right coactions over one coalgebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bicomodule {
    pub left: Comodule,
    pub right: Comodule,
}

impl Comodule {
    pub fn new(over: &Coalgebra, side: Side, dim: usize, rho: ExactMatrix) -> Result<Self> {
        let v = Comodule {
            over: over.clone(),
            side,
            dim,
            rho,
        };
        let violations = v.violations();
        if violations.is_empty() {
            Ok(v)
        } else {
            Err(Error::AxiomViolations(violations))
        }
    }

    pub fn over(&self) -> &Coalgebra {
        &self.over
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rho(&self) -> &ExactMatrix {
        &self.rho
    }

    pub fn field(&self) -> &Field {
        self.over.field()
    }

    pub fn violations(&self) -> Vec<String> {
        let (m, n) = (self.dim, self.over.dim());
        if self.rho.rows() != m * n || self.rho.cols() != m {
            return vec!["rho-shape".into()];
        }
        let f = self.field();
        let id_v = ExactMatrix::identity(f, m);
        let id_c = ExactMatrix::identity(f, n);
        let mut out = Vec::new();
        match self.side {
            Side::Right => {
                let lhs = self.rho.kron(&id_c).matmul(&self.rho);
                let rhs = id_v.kron(self.over.delta()).matmul(&self.rho);
                if lhs != rhs {
                    out.push("coassociativity".into());
                }
                if id_v.kron(self.over.counit()).matmul(&self.rho) != id_v {
                    out.push("counit".into());
                }
            }
            Side::Left => {
                let lhs = id_c.kron(&self.rho).matmul(&self.rho);
                let rhs = self.over.delta().kron(&id_v).matmul(&self.rho);
                if lhs != rhs {
                    out.push("coassociativity".into());
                }
                if self.over.counit().kron(&id_v).matmul(&self.rho) != id_v {
                    out.push("counit".into());
                }
            }
        }
        out
    }

    /// The (co)regular comodule: the coalgebra coacting on itself by `Delta`.
    pub fn regular(c: &Coalgebra, side: Side) -> Comodule {
        Comodule {
            over: c.clone(),
            side,
            dim: c.dim(),
            rho: c.delta().clone(),
        }
    }

    /// Trivial coaction `v -> v (x) 1` over a bialgebra-bearing object.
    pub fn trivial(h: &Object, dim: usize, side: Side) -> Result<Comodule> {
        let alg = h.algebra().ok_or_else(|| {
            Error::NotABialgebra("a trivial comodule needs a unit element".into())
        })?;
        let c = h
            .coalgebra()
            .ok_or_else(|| Error::NotABialgebra("a trivial comodule needs a coalgebra".into()))?;
        let f = h.field();
        let n = c.dim();
        let unit = alg.unit_vector();
        let mut rho = ExactMatrix::zeros(f, dim * n, dim);
        for v in 0..dim {
            for (cidx, u) in unit.iter().enumerate() {
                if f.is_zero(u) {
                    continue;
                }
                let row = match side {
                    Side::Right => v * n + cidx,
                    Side::Left => cidx * dim + v,
                };
                rho.set(row, v, u.clone());
            }
        }
        Comodule::new(c, side, dim, rho)
    }

    /// The cofree comodule `V (x) C` (right) or `C (x) V` (left) on an
    /// `m`-dimensional space.
    pub fn cofree(c: &Coalgebra, m: usize, side: Side) -> Comodule {
        let f = c.field();
        let id = ExactMatrix::identity(f, m);
        let rho = match side {
            Side::Right => id.kron(c.delta()),
            Side::Left => c.delta().kron(&id),
        };
        Comodule {
            over: c.clone(),
            side,
            dim: m * c.dim(),
            rho,
        }
    }

    /// Corestriction along a coalgebra morphism out of the base coalgebra.
    pub fn corestrict(&self, f: &Morphism) -> Result<Comodule> {
        if !f.kind.respects_coalgebra() {
            return Err(Error::ShapeMismatch(
                "corestriction needs a coalgebra morphism".into(),
            ));
        }
        let src = f.src.coalgebra().ok_or_else(|| {
            Error::ShapeMismatch("corestriction source must be a coalgebra".into())
        })?;
        if *src != self.over {
            return Err(Error::ShapeMismatch(
                "comodule is not over the morphism source".into(),
            ));
        }
        let dst = f.dst.coalgebra().expect("coalgebra morphism target");
        let id = ExactMatrix::identity(self.field(), self.dim);
        let rho = match self.side {
            Side::Right => id.kron(&f.matrix).matmul(&self.rho),
            Side::Left => f.matrix.kron(&id).matmul(&self.rho),
        };
        Comodule::new(dst, self.side, self.dim, rho)
    }

    /// Reinterprets a left comodule as a right comodule over the co-opposite
    /// coalgebra (and conversely); right comodules are returned unchanged.
    pub fn right_over_coopposite(&self) -> Comodule {
        if self.side == Side::Right {
            return self.clone();
        }
        let f = self.field();
        let n = self.over.dim();
        let cop = coopposite(&self.over);
        let mut rho = ExactMatrix::zeros(f, self.dim * n, self.dim);
        for v in 0..self.dim {
            for c in 0..n {
                for w in 0..self.dim {
                    let val = self.rho.at(c * self.dim + w, v);
                    if !f.is_zero(val) {
                        rho.set(w * n + c, v, val.clone());
                    }
                }
            }
        }
        Comodule {
            over: cop,
            side: Side::Right,
            dim: self.dim,
            rho,
        }
    }

    /// Entry-wise scalar extension.
    pub fn embed(&self, ext: &Field) -> Result<Comodule> {
        let over = crate::extension::extend_coalgebra(&self.over, ext)?;
        Ok(Comodule {
            over,
            side: self.side,
            dim: self.dim,
            rho: self.rho.embed(ext)?,
        })
    }
}

/// The co-opposite coalgebra (flipped comultiplication).
pub fn coopposite(c: &Coalgebra) -> Coalgebra {
    let n = c.dim();
    let flipped = crate::linalg::flip(c.field(), n, n).matmul(c.delta());
    Coalgebra::new(c.field(), n, flipped, c.counit().clone()).expect("co-opposite axioms")
}

impl Bicomodule {
    pub fn new(left: Comodule, right: Comodule) -> Result<Self> {
        let b = Bicomodule { left, right };
        let violations = b.violations();
        if violations.is_empty() {
            Ok(b)
        } else {
            Err(Error::AxiomViolations(violations))
        }
    }

    pub fn dim(&self) -> usize {
        self.right.dim
    }

    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.left.side != Side::Left || self.right.side != Side::Right {
            out.push("sides".into());
            return out;
        }
        if self.left.over != self.right.over || self.left.dim != self.right.dim {
            out.push("carrier-mismatch".into());
            return out;
        }
        out.extend(
            self.left
                .violations()
                .into_iter()
                .map(|v| format!("left-{v}")),
        );
        out.extend(
            self.right
                .violations()
                .into_iter()
                .map(|v| format!("right-{v}")),
        );
        if !out.is_empty() {
            return out;
        }
        // (1 (x) rho) . lambda = (lambda (x) 1) . rho : V -> C (x) V (x) C
        let f = self.right.field();
        let n = self.right.over.dim();
        let id_c = ExactMatrix::identity(f, n);
        let lhs = id_c.kron(&self.right.rho).matmul(&self.left.rho);
        let rhs = self.left.rho.kron(&id_c).matmul(&self.right.rho);
        if lhs != rhs {
            out.push("bicomodule-compatibility".into());
        }
        out
    }

    /// The regular bicomodule: `C` with both coactions `Delta`.
    pub fn regular(c: &Coalgebra) -> Bicomodule {
        Bicomodule {
            left: Comodule::regular(c, Side::Left),
            right: Comodule::regular(c, Side::Right),
        }
    }
}

/// Cotensor product `V []_D W` of a right comodule and a left comodule over
/// the same coalgebra: the kernel of `rho_V (x) 1 - 1 (x) lambda_W` inside
/// `V (x) W`, in canonical form.
pub fn cotensor(v: &Comodule, w: &Comodule) -> Result<Subspace> {
    if v.side != Side::Right || w.side != Side::Left {
        return Err(Error::ShapeMismatch(
            "cotensor takes a right comodule and a left comodule".into(),
        ));
    }
    if v.over != w.over {
        return Err(Error::ShapeMismatch(
            "cotensor factors live over different coalgebras".into(),
        ));
    }
    let f = v.field();
    let id_v = ExactMatrix::identity(f, v.dim);
    let id_w = ExactMatrix::identity(f, w.dim);
    let lhs = v.rho.kron(&id_w);
    let rhs = id_v.kron(&w.rho);
    Ok(lhs.sub(&rhs).kernel())
}

/// Coinvariants of a comodule over a bialgebra-bearing object: vectors with
/// `rho(v) = v (x) 1` (right) or `rho(v) = 1 (x) v` (left).
pub fn coinvariants(v: &Comodule, ambient: &Object) -> Result<Subspace> {
    let alg = ambient
        .algebra()
        .ok_or_else(|| Error::NotABialgebra("coinvariants need a unit element".into()))?;
    let c = ambient
        .coalgebra()
        .ok_or_else(|| Error::NotABialgebra("coinvariants need a coalgebra".into()))?;
    if *c != v.over {
        return Err(Error::ShapeMismatch(
            "comodule is not over the given object".into(),
        ));
    }
    let f = v.field();
    let n = c.dim();
    let unit = alg.unit_vector();
    let mut t = ExactMatrix::zeros(f, v.dim * n, v.dim);
    for x in 0..v.dim {
        for (cidx, u) in unit.iter().enumerate() {
            if f.is_zero(u) {
                continue;
            }
            let row = match v.side {
                Side::Right => x * n + cidx,
                Side::Left => cidx * v.dim + x,
            };
            t.set(row, x, u.clone());
        }
    }
    Ok(v.rho.sub(&t).kernel())
}

/// Coinvariants after corestricting along `pi`; `pi.dst` must carry a unit.
pub fn coinvariants_along(v: &Comodule, pi: &Morphism) -> Result<Subspace> {
    coinvariants(&v.corestrict(pi)?, &pi.dst)
}

/// Constraint matrix for colinearity of maps `V -> W` between two same-side
/// comodules over one coalgebra; its kernel, under the row-major flattening,
/// is the space of colinear maps.
fn colinear_constraints(v: &Comodule, w: &Comodule) -> ExactMatrix {
    debug_assert_eq!(v.side, Side::Right);
    debug_assert_eq!(w.side, Side::Right);
    debug_assert_eq!(v.over, w.over);
    let f = v.field();
    let n = v.over.dim();
    let (mv, mw) = (v.dim, w.dim);
    let mut m = ExactMatrix::zeros(f, mv * mw * n, mw * mv);
    // rows (x, widx, c); unknown phi[r][s] at r*mv + s
    for x in 0..mv {
        // -(phi (x) 1)(rho_V e_x): entries rho_V[(u, c), x]
        for u in 0..mv {
            for c in 0..n {
                let val = v.rho.at(u * n + c, x);
                if f.is_zero(val) {
                    continue;
                }
                for widx in 0..mw {
                    let row = x * (mw * n) + widx * n + c;
                    let col = widx * mv + u;
                    let cur = m.at(row, col).clone();
                    m.set(row, col, f.sub(&cur, val));
                }
            }
        }
    }
    for r in 0..mw {
        // +rho_W(phi e_x): entries rho_W[(widx, c), r]
        for widx in 0..mw {
            for c in 0..n {
                let val = w.rho.at(widx * n + c, r);
                if f.is_zero(val) {
                    continue;
                }
                for x in 0..mv {
                    let row = x * (mw * n) + widx * n + c;
                    let col = r * mv + x;
                    let cur = m.at(row, col).clone();
                    m.set(row, col, f.add(&cur, val));
                }
            }
        }
    }
    m
}

/// The space of colinear maps `V -> W` as a subspace of the flat `mw*mv`
/// matrix space.
pub fn hom_colinear(v: &Comodule, w: &Comodule) -> Result<Subspace> {
    if v.side != w.side {
        return Err(Error::ShapeMismatch(
            "hom requires comodules on one side".into(),
        ));
    }
    if v.over != w.over {
        return Err(Error::ShapeMismatch(
            "hom requires comodules over one coalgebra".into(),
        ));
    }
    let (rv, rw) = (v.right_over_coopposite(), w.right_over_coopposite());
    Ok(colinear_constraints(&rv, &rw).kernel())
}

/// Tensor product of two right comodules over a bialgebra-bearing object:
/// `rho(x (x) y) = x_0 (x) y_0 (x) x_1 y_1`.
pub fn tensor_comodules(ambient: &Object, v: &Comodule, w: &Comodule) -> Result<Comodule> {
    let alg = ambient
        .algebra()
        .ok_or_else(|| Error::NotABialgebra("tensor comodules need a multiplication".into()))?;
    let c = ambient
        .coalgebra()
        .ok_or_else(|| Error::NotABialgebra("tensor comodules need a coalgebra".into()))?;
    if v.side != Side::Right || w.side != Side::Right || v.over != *c || w.over != *c {
        return Err(Error::ShapeMismatch(
            "tensor comodules takes right comodules over the ambient object".into(),
        ));
    }
    let f = v.field();
    let n = c.dim();
    let (mv, mw) = (v.dim, w.dim);
    let dim = mv * mw;
    let mut rho = ExactMatrix::zeros(f, dim * n, dim);
    for x in 0..mv {
        for y in 0..mw {
            let col = x * mw + y;
            for u in 0..mv {
                for cc in 0..n {
                    let a = v.rho.at(u * n + cc, x);
                    if f.is_zero(a) {
                        continue;
                    }
                    for s in 0..mw {
                        for d in 0..n {
                            let b = w.rho.at(s * n + d, y);
                            if f.is_zero(b) {
                                continue;
                            }
                            let coeff = f.mul(a, b);
                            let prod = alg.mul().col(cc * n + d);
                            for (e, pe) in prod.iter().enumerate() {
                                if f.is_zero(pe) {
                                    continue;
                                }
                                let row = (u * mw + s) * n + e;
                                let cur = rho.at(row, col).clone();
                                rho.set(row, col, f.add(&cur, &f.mul(&coeff, pe)));
                            }
                        }
                    }
                }
            }
        }
    }
    Comodule::new(c, Side::Right, dim, rho)
}

/// Dual of a right comodule over a Hopf object, via the antipode:
/// `rho(e^v) = sum_u e^u (x) S(c)` where `rho_V(e_u) = ... e_v (x) c ...`.
pub fn dual_comodule(ambient: &Object, v: &Comodule) -> Result<Comodule> {
    let s = ambient
        .antipode()
        .ok_or_else(|| Error::NotABialgebra("dual comodules need an antipode".into()))?;
    let c = ambient.coalgebra().expect("Hopf object has a coalgebra");
    if v.side != Side::Right || v.over != *c {
        return Err(Error::ShapeMismatch(
            "dual comodule takes a right comodule over the ambient object".into(),
        ));
    }
    let f = v.field();
    let n = c.dim();
    let m = v.dim;
    let mut rho = ExactMatrix::zeros(f, m * n, m);
    for x in 0..m {
        // rho*(e^x): sum over u, c of rho[(x, c), u] * e^u (x) S(e_c)
        for u in 0..m {
            for cc in 0..n {
                let a = v.rho.at(x * n + cc, u);
                if f.is_zero(a) {
                    continue;
                }
                for d in 0..n {
                    let sv = s.at(d, cc);
                    if f.is_zero(sv) {
                        continue;
                    }
                    let row = u * n + d;
                    let cur = rho.at(row, x).clone();
                    rho.set(row, x, f.add(&cur, &f.mul(a, sv)));
                }
            }
        }
    }
    Comodule::new(c, Side::Right, m, rho)
}

/// Decides injectivity of a comodule by solving for a colinear retraction of
/// the cofree embedding `rho : V -> V (x) C`; returns the witness when one
/// exists. Injectivity is equivalent to coflatness at this finite scale.
pub fn injective_witness(v: &Comodule) -> Option<ExactMatrix> {
    let rv = v.right_over_coopposite();
    let f = rv.field();
    let n = rv.over.dim();
    let m = rv.dim;
    let cofree = Comodule::cofree(&rv.over, m, Side::Right);
    // unknowns: sigma (m x mn) flattened row-major
    let colinear = colinear_constraints(&cofree, &rv);
    let cols = m * (m * n);
    let mut rows: Vec<Vec<Value>> = Vec::new();
    let mut rhs: Vec<Value> = Vec::new();
    for i in 0..colinear.rows() {
        rows.push(colinear.row(i));
        rhs.push(f.zero());
    }
    // sigma . rho = id_V
    for w in 0..m {
        for x in 0..m {
            let mut row = vec![f.zero(); cols];
            for p in 0..m * n {
                let val = rv.rho.at(p, x);
                if !f.is_zero(val) {
                    row[w * (m * n) + p] = val.clone();
                }
            }
            rows.push(row);
            rhs.push(if w == x { f.one() } else { f.zero() });
        }
    }
    let system = ExactMatrix::from_rows(f, rows);
    let sol = system.solve(&rhs)?;
    let mut sigma = ExactMatrix::zeros(f, m, m * n);
    for r in 0..m {
        for cc in 0..m * n {
            sigma.set(r, cc, sol.particular[r * (m * n) + cc].clone());
        }
    }
    Some(sigma)
}

/// Splits a surjective coalgebra morphism in the category of comodules over
/// its target, on the requested side: finds `s : D -> C` with `f . s = id`
/// colinear for the corestricted regular coactions, or reports that no such
/// section exists.
pub fn find_comodule_splitting(f: &Morphism, side: Side) -> Result<Option<Morphism>> {
    if !f.kind.respects_coalgebra() {
        return Err(Error::ShapeMismatch(
            "splitting needs a coalgebra morphism".into(),
        ));
    }
    let dc = f.dst.coalgebra().expect("coalgebra morphism target");
    if f.rank() != dc.dim() {
        return Err(Error::NotSurjective);
    }
    let field = f.src.field().clone();
    let src_c = f.src.coalgebra().expect("coalgebra morphism source");
    let c_as_d = Comodule::regular(src_c, side).corestrict(f)?;
    let d_reg = Comodule::regular(dc, side);
    let (rv, rw) = (
        d_reg.right_over_coopposite(),
        c_as_d.right_over_coopposite(),
    );
    // unknowns: s (dim C x dim D) flattened row-major
    let (nd, nc) = (dc.dim(), src_c.dim());
    let colinear = colinear_constraints(&rv, &rw);
    let cols = nc * nd;
    let mut rows: Vec<Vec<Value>> = Vec::new();
    let mut rhs: Vec<Value> = Vec::new();
    for i in 0..colinear.rows() {
        rows.push(colinear.row(i));
        rhs.push(field.zero());
    }
    // f . s = id_D
    for i in 0..nd {
        for d in 0..nd {
            let mut row = vec![field.zero(); cols];
            for r in 0..nc {
                let val = f.matrix.at(i, r);
                if !field.is_zero(val) {
                    row[r * nd + d] = val.clone();
                }
            }
            rows.push(row);
            rhs.push(if i == d { field.one() } else { field.zero() });
        }
    }
    let system = ExactMatrix::from_rows(&field, rows);
    let Some(sol) = system.solve(&rhs) else {
        return Ok(None);
    };
    let mut s = ExactMatrix::zeros(&field, nc, nd);
    for r in 0..nc {
        for d in 0..nd {
            s.set(r, d, sol.particular[r * nd + d].clone());
        }
    }
    Ok(Some(Morphism {
        kind: MorphismKind::Linear,
        src: f.dst.clone(),
        dst: f.src.clone(),
        matrix: s,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{self, CayleyTable};

    fn q() -> Field {
        Field::rationals()
    }

    fn kc2(f: &Field) -> Object {
        catalog::group_algebra(f, &CayleyTable::cyclic(2)).unwrap()
    }

    fn kc4(f: &Field) -> Object {
        catalog::group_algebra(f, &CayleyTable::cyclic(4)).unwrap()
    }

    fn proj_c4_c2(f: &Field) -> Morphism {
        let out = catalog::cyclic_pair(f, 4, 2).unwrap();
        out.morphisms
            .into_iter()
            .find(|(n, _)| n == "proj_c4_c2")
            .unwrap()
            .1
    }

    #[test]
    fn regular_and_trivial_comodules_validate() {
        let f = q();
        let h = kc2(&f);
        let c = h.coalgebra().unwrap();
        for side in [Side::Left, Side::Right] {
            assert!(Comodule::regular(c, side).violations().is_empty());
            assert!(Comodule::trivial(&h, 3, side)
                .unwrap()
                .violations()
                .is_empty());
        }
        assert!(Bicomodule::regular(c).violations().is_empty());
    }

    #[test]
    fn broken_counit_axiom_is_reported() {
        let f = q();
        let h = kc2(&f);
        let c = h.coalgebra().unwrap();
        // the zero coaction is coassociative but not counital
        let rho = ExactMatrix::zeros(&f, 2, 1);
        let err = Comodule::new(c, Side::Right, 1, rho).unwrap_err();
        assert_eq!(err, Error::AxiomViolations(vec!["counit".into()]));
        // coaction by a group-like element is a valid comodule
        let mut by_g = ExactMatrix::zeros(&f, 2, 1);
        by_g.set(1, 0, f.one());
        assert!(Comodule::new(c, Side::Right, 1, by_g).is_ok());
    }

    #[test]
    fn corestriction_along_identity_and_counit() {
        let f = q();
        let h = kc4(&f);
        let c = h.coalgebra().unwrap();
        let reg = Comodule::regular(c, Side::Right);
        let idm = Morphism::identity(&h, MorphismKind::Hopf);
        assert_eq!(reg.corestrict(&idm).unwrap().rho(), reg.rho());

        // along eps : C -> k the coaction becomes trivial
        let triv = catalog::trivial(&f);
        let eps = Morphism::new(
            MorphismKind::Hopf,
            h.clone(),
            triv.clone(),
            c.counit().clone(),
        )
        .unwrap();
        let co = reg.corestrict(&eps).unwrap();
        assert_eq!(co, Comodule::trivial(&triv, 4, Side::Right).unwrap());
    }

    #[test]
    fn corestricted_regular_coaction_of_c4_over_c2() {
        let f = q();
        let pi = proj_c4_c2(&f);
        let c4 = pi.src.coalgebra().unwrap().clone();
        let reg = Comodule::regular(&c4, Side::Right);
        let co = reg.corestrict(&pi).unwrap();
        // rho(g^k) = g^k (x) gbar^(k mod 2)
        for k in 0..4usize {
            let col = co.rho().col(k);
            for (idx, v) in col.iter().enumerate() {
                assert_eq!(!f.is_zero(v), idx == k * 2 + (k % 2), "k={k} idx={idx}");
            }
        }
    }

    #[test]
    fn corestriction_is_functorial() {
        let f = q();
        let pi = proj_c4_c2(&f);
        let triv = catalog::trivial(&f);
        let c2 = pi.dst.clone();
        let eps2 = Morphism::new(
            MorphismKind::Hopf,
            c2.clone(),
            triv.clone(),
            c2.coalgebra().unwrap().counit().clone(),
        )
        .unwrap();
        let both = Morphism::compose(&eps2, &pi).unwrap();
        let reg = Comodule::regular(pi.src.coalgebra().unwrap(), Side::Right);
        let two_steps = reg.corestrict(&pi).unwrap().corestrict(&eps2).unwrap();
        let one_step = reg.corestrict(&both).unwrap();
        assert_eq!(two_steps, one_step);
    }

    #[test]
    fn cotensor_of_group_algebra_over_itself_is_the_diagonal() {
        let f = q();
        let h = kc2(&f);
        let c = h.coalgebra().unwrap();
        let v = Comodule::regular(c, Side::Right);
        let w = Comodule::regular(c, Side::Left);
        let ct = cotensor(&v, &w).unwrap();
        assert_eq!(ct.dim(), 2);
        // span{1 (x) 1, g (x) g} = flat indices 0 and 3
        let e0 = {
            let mut v = vec![f.zero(); 4];
            v[0] = f.one();
            v
        };
        let e3 = {
            let mut v = vec![f.zero(); 4];
            v[3] = f.one();
            v
        };
        assert!(ct.contains_vector(&e0) && ct.contains_vector(&e3));
    }

    #[test]
    fn cotensor_over_trivial_coalgebra_is_everything() {
        let f = q();
        let triv = catalog::trivial(&f);
        let tc = triv.coalgebra().unwrap();
        let v = Comodule::trivial(&triv, 2, Side::Right).unwrap();
        let w = Comodule::trivial(&triv, 3, Side::Left).unwrap();
        assert_eq!(cotensor(&v, &w).unwrap().dim(), 6);
        assert_eq!(tc.dim(), 1);
    }

    #[test]
    fn cotensor_of_triangular_dual_along_its_surjection() {
        let f = q();
        let tri = catalog::triangular_pair(&f).unwrap();
        let qm = tri
            .morphisms
            .iter()
            .find(|(n, _)| n == "q_t2d_d2d")
            .unwrap()
            .1
            .clone();
        let t2d = qm.src.coalgebra().unwrap().clone();
        let v = Comodule::regular(&t2d, Side::Right)
            .corestrict(&qm)
            .unwrap();
        let w = Comodule::regular(&t2d, Side::Left).corestrict(&qm).unwrap();
        // e11*, e12* share a left class while e12*, e22* share a right class:
        // the matching pairs are (0,0), (0,1), (1,2), (2,2), so dimension 4.
        assert_eq!(cotensor(&v, &w).unwrap().dim(), 4);
    }

    #[test]
    fn coinvariants_of_regular_comodules() {
        let f = q();
        let h = kc4(&f);
        let c = h.coalgebra().unwrap();
        let reg = Comodule::regular(c, Side::Right);
        let coin = coinvariants(&reg, &h).unwrap();
        assert_eq!(coin.dim(), 1);
        assert!(coin.contains_vector(&h.algebra().unwrap().unit_vector()));

        // corestricted along eps everything is coinvariant
        let triv = catalog::trivial(&f);
        let eps = Morphism::new(
            MorphismKind::Hopf,
            h.clone(),
            triv.clone(),
            c.counit().clone(),
        )
        .unwrap();
        assert_eq!(coinvariants_along(&reg, &eps).unwrap().dim(), 4);

        // along the projection to kC2 the coinvariants are span{1, g^2}
        let pi = proj_c4_c2(&f);
        let coin2 = coinvariants_along(&reg, &pi).unwrap();
        assert_eq!(coin2.dim(), 2);
        let mut g2 = vec![f.zero(); 4];
        g2[2] = f.one();
        assert!(coin2.contains_vector(&g2));
    }

    #[test]
    fn hom_spaces_over_trivial_and_group_coalgebras() {
        let f = q();
        let triv = catalog::trivial(&f);
        let v = Comodule::trivial(&triv, 2, Side::Right).unwrap();
        let w = Comodule::trivial(&triv, 3, Side::Right).unwrap();
        assert_eq!(hom_colinear(&v, &w).unwrap().dim(), 6);

        let h = kc2(&f);
        let reg = Comodule::regular(h.coalgebra().unwrap(), Side::Right);
        assert_eq!(hom_colinear(&reg, &reg).unwrap().dim(), 2);

        let m2c = catalog::comatrix(&f, 2).unwrap();
        let regm = Comodule::regular(m2c.coalgebra().unwrap(), Side::Right);
        assert_eq!(hom_colinear(&regm, &regm).unwrap().dim(), 4);
    }

    #[test]
    fn hom_dimension_matches_coinvariants_of_internal_hom() {
        let f = q();
        for h in [kc2(&f), kc4(&f), catalog::sweedler4(&f).unwrap()] {
            let c = h.coalgebra().unwrap();
            let reg = Comodule::regular(c, Side::Right);
            let triv1 = Comodule::trivial(&h, 1, Side::Right).unwrap();
            for (v, w) in [(&reg, &reg), (&reg, &triv1), (&triv1, &reg)] {
                let hom = hom_colinear(v, w).unwrap();
                let internal = tensor_comodules(&h, w, &dual_comodule(&h, v).unwrap()).unwrap();
                let coin = coinvariants(&internal, &h).unwrap();
                assert_eq!(hom.dim(), coin.dim(), "{h:?}");
            }
        }
    }

    #[test]
    fn injectivity_of_regular_and_trivial_comodules() {
        let f2 = Field::prime(2).unwrap();
        let h2 = kc2(&f2);
        let reg2 = Comodule::regular(h2.coalgebra().unwrap(), Side::Right);
        assert!(
            injective_witness(&reg2).is_some(),
            "regular comodules are injective"
        );

        // over the group-algebra coalgebra the dual algebra is F2 x F2, so
        // even the trivial comodule is injective in characteristic 2
        let triv_group = Comodule::trivial(&h2, 1, Side::Right).unwrap();
        assert!(injective_witness(&triv_group).is_some());

        // over the function-algebra coalgebra the dual algebra is the local
        // ring F2[C2]; its trivial comodule is not injective
        let fn2 = catalog::function_algebra(&f2, &CayleyTable::cyclic(2)).unwrap();
        let triv_fn = Comodule::trivial(&fn2, 1, Side::Right).unwrap();
        assert!(injective_witness(&triv_fn).is_none());

        // in characteristic 0 the same comodule becomes injective
        let fnq = catalog::function_algebra(&q(), &CayleyTable::cyclic(2)).unwrap();
        let triv_q = Comodule::trivial(&fnq, 1, Side::Right).unwrap();
        let sigma = injective_witness(&triv_q).unwrap();
        assert_eq!(sigma.matmul(triv_q.rho()), ExactMatrix::identity(&q(), 1));
    }

    #[test]
    fn splitting_of_identity_and_cyclic_projection() {
        let f = q();
        let h = kc2(&f);
        let idm = Morphism::identity(&h, MorphismKind::Hopf);
        let s = find_comodule_splitting(&idm, Side::Right).unwrap().unwrap();
        assert_eq!(s.matrix, ExactMatrix::identity(&f, 2));

        let pi = proj_c4_c2(&f);
        let s = find_comodule_splitting(&pi, Side::Right).unwrap().unwrap();
        assert_eq!(pi.matrix.matmul(&s.matrix), ExactMatrix::identity(&f, 2));
        // the halved-orbit section is one valid witness
        let mut expected = ExactMatrix::zeros(&f, 4, 2);
        let half = f.from_ratio(1, 2).unwrap();
        expected.set(0, 0, half.clone());
        expected.set(2, 0, half.clone());
        expected.set(1, 1, half.clone());
        expected.set(3, 1, half.clone());
        let c4 = pi.src.coalgebra().unwrap();
        let c_as_d = Comodule::regular(c4, Side::Right).corestrict(&pi).unwrap();
        let d_reg = Comodule::regular(pi.dst.coalgebra().unwrap(), Side::Right);
        let homs = hom_colinear(&d_reg, &c_as_d).unwrap();
        let flat: Vec<Value> = (0..4)
            .flat_map(|r| (0..2).map(move |c| (r, c)))
            .map(|(r, c)| expected.at(r, c).clone())
            .collect();
        assert!(
            homs.contains_vector(&flat),
            "the stated witness is colinear"
        );
        assert_eq!(pi.matrix.matmul(&expected), ExactMatrix::identity(&f, 2));
    }

    #[test]
    fn splitting_of_sweedler_projection_exists() {
        let f = q();
        let corpus = catalog::corpus(&f).unwrap();
        let kill = corpus.morphism("kill_x");
        let s = find_comodule_splitting(kill, Side::Right).unwrap().unwrap();
        assert_eq!(kill.matrix.matmul(&s.matrix), ExactMatrix::identity(&f, 2));
    }

    #[test]
    fn splitting_requires_surjectivity() {
        let f = q();
        let corpus = catalog::corpus(&f).unwrap();
        let incl = corpus.morphism("incl_c2_c4");
        assert!(matches!(
            find_comodule_splitting(incl, Side::Right),
            Err(Error::NotSurjective)
        ));
    }

    #[test]
    fn cyclic_projection_splits_in_every_characteristic() {
        // coset sections of group quotients are colinear, so the splitting
        // exists even where no invariant averaging is available
        let f2 = Field::prime(2).unwrap();
        let pi = proj_c4_c2(&f2);
        for side in [Side::Right, Side::Left] {
            let s = find_comodule_splitting(&pi, side).unwrap().unwrap();
            assert_eq!(pi.matrix.matmul(&s.matrix), ExactMatrix::identity(&f2, 2));
        }
    }

    #[test]
    fn corestriction_widens_hom_spaces() {
        let f = q();
        let pi = proj_c4_c2(&f);
        let c4 = pi.src.coalgebra().unwrap();
        let reg = Comodule::regular(c4, Side::Right);
        let fine = hom_colinear(&reg, &reg).unwrap();
        let co = reg.corestrict(&pi).unwrap();
        let coarse = hom_colinear(&co, &co).unwrap();
        assert!(coarse.contains(&fine).unwrap());
        assert!(coarse.dim() > fine.dim());
    }
}
