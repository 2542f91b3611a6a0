//! Brute-force enumeration oracles over `F_2`: all matrices of a Hom space
//! (capped at 4096 candidates), all subspaces of a small ambient space, the
//! maximal comultiplication-stable subspace by direct search, and the
//! left-cancellation test that characterizes domination.
//!
//! Candidate order is the lexicographic order of the flattened bit pattern,
//! and all parallel evaluation aggregates order-independently, so results are
//! deterministic with or without the `parallel` feature.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::{ExactMatrix, Subspace};
use crate::scalars::Field;
use crate::structures::{is_coalgebra_morphism, Coalgebra, Morphism};

/// Hard cap on enumerated candidate matrices per Hom space.
pub const CANDIDATE_CAP: usize = 4096;

/// The `idx`-th 0/1 matrix in lexicographic order: entry `(i, j)` is bit
/// `i*cols + j` of `idx`, most significant first.
pub fn matrix_from_index(field: &Field, rows: usize, cols: usize, idx: usize) -> ExactMatrix {
    let bits = rows * cols;
    ExactMatrix::from_fn(field, rows, cols, |i, j| {
        let pos = i * cols + j;
        if idx >> (bits - 1 - pos) & 1 == 1 {
            field.one()
        } else {
            field.zero()
        }
    })
}

fn check_f2(field: &Field) -> Result<()> {
    if field.prime_modulus() != Some(2) {
        return Err(Error::Unsupported(
            "the enumeration oracle only runs over F2".into(),
        ));
    }
    Ok(())
}

/// All coalgebra morphisms `src -> dst` over `F2`, by filtering every
/// candidate matrix; errors when the Hom space exceeds the candidate cap.
pub fn coalgebra_morphisms_f2(src: &Coalgebra, dst: &Coalgebra) -> Result<Vec<ExactMatrix>> {
    check_f2(src.field())?;
    let bits = src.dim() * dst.dim();
    let total = 1usize
        .checked_shl(bits as u32)
        .filter(|&t| t <= CANDIDATE_CAP)
        .ok_or_else(|| {
            Error::Unsupported(format!(
                "Hom space of {bits} bits exceeds the {CANDIDATE_CAP}-candidate cap"
            ))
        })?;
    let field = src.field().clone();
    let build = |idx: usize| {
        let m = matrix_from_index(&field, dst.dim(), src.dim(), idx);
        is_coalgebra_morphism(src, dst, &m).then_some(m)
    };
    #[cfg(feature = "parallel")]
    let candidates: Vec<Option<ExactMatrix>> = (0..total).into_par_iter().map(build).collect();
    #[cfg(not(feature = "parallel"))]
    let candidates: Vec<Option<ExactMatrix>> = (0..total).map(build).collect();
    Ok(candidates.into_iter().flatten().collect())
}

/// Packs an `F2` matrix into a comparable key.
fn residue_key(m: &ExactMatrix) -> Vec<u64> {
    let f = m.field();
    let mut out = Vec::with_capacity(m.rows() * m.cols());
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            out.push(if f.is_zero(m.at(i, j)) { 0 } else { 1 });
        }
    }
    out
}

/// The cancellation property of `th`e pair `(f, pi)` against an enumerated
/// family of morphisms into the source: `f . h1 = f . h2` implies
/// `pi . h1 = pi . h2` for all `h1, h2` in the family.
pub fn cancellation_property(f: &Morphism, pi: &ExactMatrix, family: &[ExactMatrix]) -> bool {
    let classify = |h: &ExactMatrix| (residue_key(&f.matrix.matmul(h)), residue_key(&pi.matmul(h)));
    #[cfg(feature = "parallel")]
    let keys: Vec<(Vec<u64>, Vec<u64>)> = family.par_iter().map(classify).collect();
    #[cfg(not(feature = "parallel"))]
    let keys: Vec<(Vec<u64>, Vec<u64>)> = family.iter().map(classify).collect();
    let mut groups: std::collections::BTreeMap<Vec<u64>, Vec<u64>> = Default::default();
    for (kf, kp) in keys {
        match groups.entry(kf) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(kp);
            }
            std::collections::btree_map::Entry::Occupied(e) => {
                if *e.get() != kp {
                    return false;
                }
            }
        }
    }
    true
}

/// All subspaces of `F2^ambient`, enumerated through their canonical reduced
/// row-echelon bases: pivot sets in lexicographic order, free entries in
/// binary counting order.
pub fn all_subspaces_f2(field: &Field, ambient: usize) -> Result<Vec<Subspace>> {
    check_f2(field)?;
    if ambient > 5 {
        return Err(Error::Unsupported(
            "subspace enumeration is capped at ambient dimension 5".into(),
        ));
    }
    let mut out = Vec::new();
    for k in 0..=ambient {
        for pivots in combinations(ambient, k) {
            // free positions: (row i, col j) with j > pivots[i], j not a pivot
            let mut free = Vec::new();
            for (i, &p) in pivots.iter().enumerate() {
                for j in p + 1..ambient {
                    if !pivots.contains(&j) {
                        free.push((i, j));
                    }
                }
            }
            for pattern in 0..1usize << free.len() {
                let mut rows = vec![vec![field.zero(); ambient]; k];
                for (i, &p) in pivots.iter().enumerate() {
                    rows[i][p] = field.one();
                }
                for (b, &(i, j)) in free.iter().enumerate() {
                    if pattern >> b & 1 == 1 {
                        rows[i][j] = field.one();
                    }
                }
                let s = Subspace::from_rows(field, ambient, rows);
                debug_assert_eq!(s.dim(), k, "echelon pattern must already be canonical");
                out.push(s);
            }
        }
    }
    Ok(out)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 0..n {
        for mut rest in combinations(n, k - 1) {
            if rest.iter().all(|&r| r > first) {
                let mut c = vec![first];
                c.append(&mut rest);
                out.push(c);
            }
        }
    }
    out.retain(|c| c.len() == k);
    out
}

/// Is `Delta(W) <= W (x) W`?
pub fn is_delta_stable(c: &Coalgebra, w: &Subspace) -> bool {
    if w.dim() == 0 {
        return true;
    }
    let window = Subspace::from_matrix_rows(&w.basis().kron(w.basis()));
    w.basis_rows()
        .iter()
        .all(|row| window.contains_vector(&c.delta().apply(row)))
}

/// Brute-force oracle for the largest subcoalgebra contained in `v`: the sum
/// of every comultiplication-stable subspace of `v`, found by exhausting all
/// subspaces of the ambient space.
pub fn max_delta_stable_subspace(c: &Coalgebra, v: &Subspace) -> Result<Subspace> {
    let all = all_subspaces_f2(c.field(), c.dim())?;
    let keep = |w: &Subspace| v.contains(w).unwrap_or(false) && is_delta_stable(c, w);
    #[cfg(feature = "parallel")]
    let stable: Vec<Subspace> = all.into_par_iter().filter(keep).collect();
    #[cfg(not(feature = "parallel"))]
    let stable: Vec<Subspace> = all.into_iter().filter(keep).collect();
    let mut acc = Subspace::zero(c.field(), c.dim());
    for w in stable {
        acc = acc.sum(&w)?;
    }
    Ok(acc)
}

/// All coideals of a small `F2` coalgebra, by filtering every subspace.
pub fn coideals_f2(c: &Coalgebra) -> Result<Vec<Subspace>> {
    let all = all_subspaces_f2(c.field(), c.dim())?;
    let keep = |k: &Subspace| crate::structures::coideal_violation(c, k).is_none();
    #[cfg(feature = "parallel")]
    let out: Vec<Subspace> = all.into_par_iter().filter(keep).collect();
    #[cfg(not(feature = "parallel"))]
    let out: Vec<Subspace> = all.into_iter().filter(keep).collect();
    Ok(out)
}
