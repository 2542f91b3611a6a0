//! The Takeuchi correspondence for a Hopf algebra `H`: the operator `r`
//! sending a right coideal subalgebra `A` to the left-module quotient
//! coalgebra `H / H A+`, the operator `l` sending a quotient `pi` to
//! `{ h : pi(h_1) (x) h_2 = pi(1) (x) h }`, their Galois connection, and the
//! induced closure operators.
//!
//! Quotients are ordered by reverse kernel inclusion: `q1 <= q2` exactly when
//! `ker q1` contains `ker q2`.

use crate::error::{Error, Result};
use crate::linalg::{ExactMatrix, Subspace};
use crate::structures::{
    quotient_object_by_kernel, Algebra, Coalgebra, Morphism, MorphismKind, Object,
    QuotientPresentation,
};

/// A right coideal subalgebra `A <= H`: contains the unit, closed under
/// multiplication, and `Delta(A) <= A (x) H`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoidealSubalgebra {
    ambient: Object,
    subspace: Subspace,
}

/// A left `H`-module quotient coalgebra of `H`: the kernel is simultaneously
/// a coideal and a left ideal, and the projection is left `H`-linear for the
/// induced action on the quotient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleQuotientCoalgebra {
    ambient: Object,
    pub quotient: QuotientPresentation,
    /// The induced action `H (x) H/I -> H/I`, a `q x (n*q)` matrix.
    pub action: ExactMatrix,
}

fn hopf_parts(h: &Object) -> Result<(&Coalgebra, &Algebra)> {
    match (h.coalgebra(), h.algebra()) {
        (Some(c), Some(a)) => Ok((c, a)),
        _ => Err(Error::NotABialgebra(
            "the Takeuchi operators need a bialgebra or Hopf algebra".into(),
        )),
    }
}

impl CoidealSubalgebra {
    pub fn new(ambient: &Object, subspace: &Subspace) -> Result<Self> {
        let violations = Self::violations(ambient, subspace)?;
        if violations.is_empty() {
            Ok(CoidealSubalgebra {
                ambient: ambient.clone(),
                subspace: subspace.clone(),
            })
        } else {
            Err(Error::AxiomViolations(violations))
        }
    }

    pub fn violations(ambient: &Object, a: &Subspace) -> Result<Vec<String>> {
        let (c, alg) = hopf_parts(ambient)?;
        if a.ambient_dim() != ambient.dim() {
            return Ok(vec!["ambient-dimension".into()]);
        }
        let mut out = Vec::new();
        if !a.contains_vector(&alg.unit_vector()) {
            out.push("unit".into());
        }
        let rows = a.basis_rows();
        if !rows
            .iter()
            .all(|x| rows.iter().all(|y| a.contains_vector(&alg.multiply(x, y))))
        {
            out.push("subalgebra".into());
        }
        if a.dim() > 0 {
            let id = ExactMatrix::identity(ambient.field(), ambient.dim());
            let window = Subspace::from_matrix_rows(&a.basis().kron(&id));
            if !rows
                .iter()
                .all(|x| window.contains_vector(&c.delta().apply(x)))
            {
                out.push("right-coideal".into());
            }
        }
        Ok(out)
    }

    pub fn ambient(&self) -> &Object {
        &self.ambient
    }

    pub fn subspace(&self) -> &Subspace {
        &self.subspace
    }

    pub fn dim(&self) -> usize {
        self.subspace.dim()
    }

    /// The inclusion `A -> H` as an algebra morphism, with `A` presented on
    /// its own canonical basis.
    pub fn inclusion(&self) -> Result<Morphism> {
        let (_, alg) = hopf_parts(&self.ambient)?;
        let field = self.ambient.field();
        let dim = self.subspace.dim();
        let rows = self.subspace.basis_rows();
        let mut mul = ExactMatrix::zeros(field, dim, dim * dim);
        for (i, x) in rows.iter().enumerate() {
            for (j, y) in rows.iter().enumerate() {
                let prod = alg.multiply(x, y);
                let coords = self
                    .subspace
                    .coordinates(&prod)
                    .expect("subalgebra closed under multiplication");
                for (k, ck) in coords.into_iter().enumerate() {
                    mul.set(k, i * dim + j, ck);
                }
            }
        }
        let unit_coords = self
            .subspace
            .coordinates(&alg.unit_vector())
            .expect("subalgebra contains the unit");
        let unit = ExactMatrix::column(field, unit_coords);
        let sub = Algebra::new(field, dim, mul, unit)?;
        let ambient_alg = Object::Algebra(alg.clone());
        Morphism::new(
            MorphismKind::Alg,
            Object::Algebra(sub),
            ambient_alg,
            self.subspace.basis().transpose(),
        )
    }
}

impl ModuleQuotientCoalgebra {
    /// Builds the quotient of `H` by a kernel subspace, verifying that the
    /// kernel is a coideal and a left ideal and that the projection is left
    /// `H`-linear for the induced action.
    pub fn from_kernel(ambient: &Object, kernel: &Subspace) -> Result<Self> {
        let (c, alg) = hopf_parts(ambient)?;
        let n = ambient.dim();
        let field = ambient.field();
        // left ideal: H * K <= K
        for kv in kernel.basis_rows() {
            for i in 0..n {
                let mut e = vec![field.zero(); n];
                e[i] = field.one();
                if !kernel.contains_vector(&alg.multiply(&e, &kv)) {
                    return Err(Error::NotACoideal("kernel is not a left ideal".into()));
                }
            }
        }
        let quotient = quotient_object_by_kernel(&Object::Coalgebra(c.clone()), kernel)?;
        let id = ExactMatrix::identity(field, n);
        let action = quotient
            .projection
            .matmul(alg.mul())
            .matmul(&id.kron(&quotient.section));
        // the projection is left H-linear: P . mul = action . (1 (x) P)
        let lhs = quotient.projection.matmul(alg.mul());
        let rhs = action.matmul(&id.kron(&quotient.projection));
        if lhs != rhs {
            return Err(Error::NotACoideal(
                "projection is not left-linear for the induced action".into(),
            ));
        }
        Ok(ModuleQuotientCoalgebra {
            ambient: ambient.clone(),
            quotient,
            action,
        })
    }

    pub fn ambient(&self) -> &Object {
        &self.ambient
    }

    pub fn kernel(&self) -> &Subspace {
        &self.quotient.kernel
    }

    pub fn quotient_dim(&self) -> usize {
        self.quotient.quotient_dim()
    }
}

/// Reverse-kernel-inclusion order on quotients: `q1 <= q2` iff
/// `ker q1 >= ker q2`.
pub fn quotient_le(q1: &ModuleQuotientCoalgebra, q2: &ModuleQuotientCoalgebra) -> Result<bool> {
    q1.kernel().contains(q2.kernel())
}

/// `r(A) = H / H A+` with `A+ = A` intersected with `ker eps`.
pub fn op_r(a: &CoidealSubalgebra) -> Result<ModuleQuotientCoalgebra> {
    let (c, alg) = hopf_parts(&a.ambient)?;
    let field = a.ambient.field();
    let n = a.ambient.dim();
    let aplus = a.subspace.intersect(&c.counit().kernel())?;
    let mut generators = Vec::new();
    for av in aplus.basis_rows() {
        for i in 0..n {
            let mut e = vec![field.zero(); n];
            e[i] = field.one();
            generators.push(alg.multiply(&e, &av));
        }
    }
    let kernel = Subspace::from_rows(field, n, generators);
    ModuleQuotientCoalgebra::from_kernel(&a.ambient, &kernel)
}

/// `l(pi) = { h : pi(h_1) (x) h_2 = pi(1) (x) h }`.
pub fn op_l(q: &ModuleQuotientCoalgebra) -> Result<CoidealSubalgebra> {
    let (c, alg) = hopf_parts(&q.ambient)?;
    let field = q.ambient.field();
    let n = q.ambient.dim();
    let id = ExactMatrix::identity(field, n);
    let lhs = q.quotient.projection.kron(&id).matmul(c.delta());
    let pi_one = q
        .quotient
        .projection
        .matmul(&ExactMatrix::column(field, alg.unit_vector()));
    let rhs = pi_one.kron(&id);
    let subspace = lhs.sub(&rhs).kernel();
    CoidealSubalgebra::new(&q.ambient, &subspace)
}

/// The closure `l(r(A))` of a coideal subalgebra; always contains `A`.
pub fn closure_subalgebra(a: &CoidealSubalgebra) -> Result<CoidealSubalgebra> {
    let closed = op_l(&op_r(a)?)?;
    debug_assert!(closed.subspace.contains(&a.subspace).unwrap_or(false));
    Ok(closed)
}

/// The closure `r(l(q))` of a module quotient coalgebra; always below `q` in
/// the reverse-kernel order.
pub fn closure_quotient(q: &ModuleQuotientCoalgebra) -> Result<ModuleQuotientCoalgebra> {
    let closed = op_r(&op_l(q)?)?;
    debug_assert!(closed.kernel().contains(q.kernel()).unwrap_or(false));
    Ok(closed)
}

/// Both sides of the Galois biconditional for a pair `(A, q)`:
/// `q <= r(A)` (i.e. `ker q >= H A+`) on the left, `A <= l(q)` on the right.
pub fn galois_sides(a: &CoidealSubalgebra, q: &ModuleQuotientCoalgebra) -> Result<(bool, bool)> {
    let ra = op_r(a)?;
    let lq = op_l(q)?;
    Ok((
        q.kernel().contains(ra.kernel())?,
        lq.subspace.contains(&a.subspace)?,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::scalars::Field;

    fn q() -> Field {
        Field::rationals()
    }

    fn corpus() -> catalog::Corpus {
        catalog::corpus(&q()).unwrap()
    }

    fn span_unit(h: &Object) -> CoidealSubalgebra {
        let unit = h.algebra().unwrap().unit_vector();
        let s = Subspace::from_rows(h.field(), h.dim(), vec![unit]);
        CoidealSubalgebra::new(h, &s).unwrap()
    }

    fn full(h: &Object) -> CoidealSubalgebra {
        CoidealSubalgebra::new(h, &Subspace::full(h.field(), h.dim())).unwrap()
    }

    #[test]
    fn validation_examples_on_the_sweedler_algebra() {
        let c = corpus();
        let h4 = c.object("sweedler4");
        let f = q();
        // span{1, gx} is a right coideal subalgebra
        let a = Subspace::from_rows(
            &f,
            4,
            vec![
                vec![f.one(), f.zero(), f.zero(), f.zero()],
                vec![f.zero(), f.zero(), f.zero(), f.one()],
            ],
        );
        assert!(CoidealSubalgebra::new(h4, &a).is_ok());
        // span{1, x} fails the right-coideal condition
        let bad = Subspace::from_rows(
            &f,
            4,
            vec![
                vec![f.one(), f.zero(), f.zero(), f.zero()],
                vec![f.zero(), f.zero(), f.one(), f.zero()],
            ],
        );
        let err = CoidealSubalgebra::new(h4, &bad).unwrap_err();
        assert_eq!(err, Error::AxiomViolations(vec!["right-coideal".into()]));
        // the scalars always work
        assert!(CoidealSubalgebra::new(h4, span_unit(h4).subspace()).is_ok());
    }

    #[test]
    fn op_r_of_scalars_is_the_identity_quotient() {
        let c = corpus();
        for name in ["kC4", "sweedler4", "kC2xC2"] {
            let h = c.object(name);
            let r = op_r(&span_unit(h)).unwrap();
            assert_eq!(r.kernel().dim(), 0, "{name}");
            assert_eq!(r.quotient_dim(), h.dim(), "{name}");
        }
    }

    #[test]
    fn op_r_of_the_even_subalgebra_of_kc4() {
        let c = corpus();
        let h = c.object("kC4");
        let f = q();
        // k[g^2] = span{1, g^2}
        let a = Subspace::from_rows(
            &f,
            4,
            vec![
                vec![f.one(), f.zero(), f.zero(), f.zero()],
                vec![f.zero(), f.zero(), f.one(), f.zero()],
            ],
        );
        let sub = CoidealSubalgebra::new(h, &a).unwrap();
        let r = op_r(&sub).unwrap();
        assert_eq!(r.kernel().dim(), 2);
        assert_eq!(r.quotient_dim(), 2);
        // kernel = span{g^2 - 1, g^3 - g}
        let mut v1 = vec![f.from_i64(-1), f.zero(), f.one(), f.zero()];
        let mut v2 = vec![f.zero(), f.from_i64(-1), f.zero(), f.one()];
        assert!(r.kernel().contains_vector(&v1));
        assert!(r.kernel().contains_vector(&v2));
        v1[0] = f.one();
        v2[1] = f.one();
        assert!(!r.kernel().contains_vector(&v1));
        assert!(!r.kernel().contains_vector(&v2));
    }

    #[test]
    fn op_r_of_the_grouplike_nilpotent_subalgebra_of_sweedler() {
        let c = corpus();
        let h4 = c.object("sweedler4");
        let f = q();
        let a = Subspace::from_rows(
            &f,
            4,
            vec![
                vec![f.one(), f.zero(), f.zero(), f.zero()],
                vec![f.zero(), f.zero(), f.zero(), f.one()],
            ],
        );
        let sub = CoidealSubalgebra::new(h4, &a).unwrap();
        let r = op_r(&sub).unwrap();
        // H * gx = span{x, gx}
        assert_eq!(r.kernel().dim(), 2);
        let mut x = vec![f.zero(); 4];
        x[2] = f.one();
        let mut gx = vec![f.zero(); 4];
        gx[3] = f.one();
        assert!(r.kernel().contains_vector(&x));
        assert!(r.kernel().contains_vector(&gx));
        assert_eq!(r.quotient_dim(), 2);
    }

    #[test]
    fn op_l_of_extreme_quotients() {
        let c = corpus();
        for name in ["kC4", "sweedler4"] {
            let h = c.object(name);
            let f = h.field();
            let identity_q =
                ModuleQuotientCoalgebra::from_kernel(h, &Subspace::zero(f, h.dim())).unwrap();
            let l_id = op_l(&identity_q).unwrap();
            assert_eq!(l_id.dim(), 1, "{name}: l(id) = scalars");
            assert!(l_id
                .subspace()
                .contains_vector(&h.algebra().unwrap().unit_vector()));

            let eps_kernel = h.coalgebra().unwrap().counit().kernel();
            let collapse = ModuleQuotientCoalgebra::from_kernel(h, &eps_kernel).unwrap();
            let l_all = op_l(&collapse).unwrap();
            assert_eq!(l_all.dim(), h.dim(), "{name}: l(k) = H");
        }
    }

    #[test]
    fn op_l_recovers_the_even_subalgebra() {
        let c = corpus();
        let h = c.object("kC4");
        let pi = c.morphism("proj_c4_c2");
        let quot = ModuleQuotientCoalgebra::from_kernel(h, &pi.matrix.kernel()).unwrap();
        let l = op_l(&quot).unwrap();
        assert_eq!(l.dim(), 2);
        let f = q();
        let mut g2 = vec![f.zero(); 4];
        g2[2] = f.one();
        assert!(l.subspace().contains_vector(&g2));
    }

    #[test]
    fn closures_fix_the_catalog_subalgebras() {
        let c = corpus();
        let f = q();
        let h4 = c.object("sweedler4");
        let kc4 = c.object("kC4");
        let even = Subspace::from_rows(
            &f,
            4,
            vec![
                vec![f.one(), f.zero(), f.zero(), f.zero()],
                vec![f.zero(), f.zero(), f.one(), f.zero()],
            ],
        );
        let gx_line = Subspace::from_rows(
            &f,
            4,
            vec![
                vec![f.one(), f.zero(), f.zero(), f.zero()],
                vec![f.zero(), f.zero(), f.zero(), f.one()],
            ],
        );
        let cases = vec![
            span_unit(kc4),
            CoidealSubalgebra::new(kc4, &even).unwrap(),
            full(kc4),
            span_unit(h4),
            CoidealSubalgebra::new(h4, &gx_line).unwrap(),
            full(h4),
        ];
        for a in cases {
            let closed = closure_subalgebra(&a).unwrap();
            assert_eq!(closed.subspace(), a.subspace(), "closure fixes {a:?}");
            let twice = closure_subalgebra(&closed).unwrap();
            assert_eq!(twice.subspace(), closed.subspace());
        }
    }

    #[test]
    fn quotient_closures_are_idempotent_and_coarsening() {
        let c = corpus();
        let h = c.object("kC4");
        let f = q();
        let pi = c.morphism("proj_c4_c2");
        let quotients = vec![
            ModuleQuotientCoalgebra::from_kernel(h, &Subspace::zero(&f, 4)).unwrap(),
            ModuleQuotientCoalgebra::from_kernel(h, &pi.matrix.kernel()).unwrap(),
            ModuleQuotientCoalgebra::from_kernel(h, &h.coalgebra().unwrap().counit().kernel())
                .unwrap(),
        ];
        for qt in quotients {
            let closed = closure_quotient(&qt).unwrap();
            assert!(quotient_le(&closed, &qt).unwrap());
            let twice = closure_quotient(&closed).unwrap();
            assert_eq!(twice.kernel(), closed.kernel());
        }
    }

    #[test]
    fn galois_biconditional_on_kc4_pairs() {
        let c = corpus();
        let h = c.object("kC4");
        let f = q();
        let even = Subspace::from_rows(
            &f,
            4,
            vec![
                vec![f.one(), f.zero(), f.zero(), f.zero()],
                vec![f.zero(), f.zero(), f.one(), f.zero()],
            ],
        );
        let subalgebras = vec![
            span_unit(h),
            CoidealSubalgebra::new(h, &even).unwrap(),
            full(h),
        ];
        let pi = c.morphism("proj_c4_c2");
        let quotients = vec![
            ModuleQuotientCoalgebra::from_kernel(h, &Subspace::zero(&f, 4)).unwrap(),
            ModuleQuotientCoalgebra::from_kernel(h, &pi.matrix.kernel()).unwrap(),
            ModuleQuotientCoalgebra::from_kernel(h, &h.coalgebra().unwrap().counit().kernel())
                .unwrap(),
        ];
        for a in &subalgebras {
            for qt in &quotients {
                let (lhs, rhs) = galois_sides(a, qt).unwrap();
                assert_eq!(
                    lhs,
                    rhs,
                    "Galois condition at {:?}",
                    (a.dim(), qt.quotient_dim())
                );
            }
        }
    }

    #[test]
    fn r_reverses_inclusions() {
        let c = corpus();
        let h = c.object("kC4");
        let f = q();
        let even = Subspace::from_rows(
            &f,
            4,
            vec![
                vec![f.one(), f.zero(), f.zero(), f.zero()],
                vec![f.zero(), f.zero(), f.one(), f.zero()],
            ],
        );
        let small = span_unit(h);
        let mid = CoidealSubalgebra::new(h, &even).unwrap();
        let big = full(h);
        let rs = op_r(&small).unwrap();
        let rm = op_r(&mid).unwrap();
        let rb = op_r(&big).unwrap();
        assert!(rm.kernel().contains(rs.kernel()).unwrap());
        assert!(rb.kernel().contains(rm.kernel()).unwrap());
    }

    #[test]
    fn subalgebra_inclusion_is_a_valid_algebra_morphism() {
        let c = corpus();
        let h = c.object("sweedler4");
        let f = q();
        let gx_line = Subspace::from_rows(
            &f,
            4,
            vec![
                vec![f.one(), f.zero(), f.zero(), f.zero()],
                vec![f.zero(), f.zero(), f.zero(), f.one()],
            ],
        );
        let a = CoidealSubalgebra::new(h, &gx_line).unwrap();
        let incl = a.inclusion().unwrap();
        assert_eq!(incl.src.dim(), 2);
        assert_eq!(incl.rank(), 2);
    }
}
