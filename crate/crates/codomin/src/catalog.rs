//! Deterministic constructors for the standard example objects and
//! morphisms: group algebras and their function-algebra duals, the Sweedler
//! and Taft algebras, comatrix and divided-power coalgebras, the
//! triangular/diagonal algebra pair, cyclic-group pairs, and the assembled
//! standard corpus used by the test suites and the command line.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::linalg::ExactMatrix;
use crate::scalars::{Field, Scalar, Value};
use crate::structures::{
    delta_matrix, mul_matrix, tensor_vec_multiply, Algebra, Bialgebra, Coalgebra, HopfAlgebra,
    Morphism, MorphismKind, Object,
};

/// A finite group multiplication table, 0-indexed with element 0 the
/// identity; `table[i][j]` is the product `i * j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyTable(Vec<Vec<usize>>);

impl CayleyTable {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let n = rows.len();
        let bad = |m: String| Error::BadParams(m);
        if n == 0 {
            return Err(bad("empty Cayley table".into()));
        }
        for row in &rows {
            if row.len() != n || row.iter().any(|&e| e >= n) {
                return Err(bad("Cayley table is not square over 0..n".into()));
            }
        }
        for i in 0..n {
            if rows[0][i] != i || rows[i][0] != i {
                return Err(bad("row 0 must be the identity element".into()));
            }
        }
        // Latin square
        for i in 0..n {
            let mut seen_row = vec![false; n];
            let mut seen_col = vec![false; n];
            for j in 0..n {
                seen_row[rows[i][j]] = true;
                seen_col[rows[j][i]] = true;
            }
            if seen_row.contains(&false) || seen_col.contains(&false) {
                return Err(bad("Cayley table rows/columns are not permutations".into()));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if rows[rows[a][b]][c] != rows[a][rows[b][c]] {
                        return Err(bad(format!("associativity fails at ({a},{b},{c})")));
                    }
                }
            }
        }
        Ok(CayleyTable(rows))
    }

    pub fn cyclic(n: usize) -> CayleyTable {
        let rows = (0..n)
            .map(|i| (0..n).map(|j| (i + j) % n).collect())
            .collect();
        CayleyTable(rows)
    }

    /// Direct product; element `(a, b)` has index `a * |B| + b`.
    pub fn product(a: &CayleyTable, b: &CayleyTable) -> CayleyTable {
        let (na, nb) = (a.order(), b.order());
        let rows = (0..na * nb)
            .map(|x| {
                (0..na * nb)
                    .map(|y| a.0[x / nb][y / nb] * nb + b.0[x % nb][y % nb])
                    .collect()
            })
            .collect();
        CayleyTable(rows)
    }

    pub fn order(&self) -> usize {
        self.0.len()
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.0[i][j]
    }

    pub fn inverse(&self, i: usize) -> usize {
        (0..self.order())
            .find(|&j| self.0[i][j] == 0)
            .expect("group inverse")
    }
}

/// The ground field as a one-dimensional Hopf algebra.
pub fn trivial(field: &Field) -> Object {
    let one = field.one();
    let delta = delta_matrix(field, 1, &[(0, 0, 0, one.clone())]);
    let counit = ExactMatrix::from_rows(field, vec![vec![one.clone()]]);
    let mul = mul_matrix(field, 1, &[(0, 0, 0, one.clone())]);
    let unit = ExactMatrix::column(field, vec![one]);
    Object::Hopf(
        HopfAlgebra::new(
            Bialgebra::new(
                Coalgebra::new(field, 1, delta, counit).expect("trivial coalgebra"),
                Algebra::new(field, 1, mul, unit).expect("trivial algebra"),
            )
            .expect("trivial bialgebra"),
            ExactMatrix::identity(field, 1),
        )
        .expect("trivial Hopf algebra"),
    )
}

/// Group algebra `kG`: basis the group elements, all of them group-like,
/// antipode `g -> g^{-1}`.
pub fn group_algebra(field: &Field, table: &CayleyTable) -> Result<Object> {
    let n = table.order();
    let one = field.one();
    let delta_entries: Vec<_> = (0..n).map(|k| (k, k, k, one.clone())).collect();
    let delta = delta_matrix(field, n, &delta_entries);
    let counit = ExactMatrix::from_fn(field, 1, n, |_, _| one.clone());
    let mul_entries: Vec<_> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| (table.mul(i, j), i, j, one.clone()))
        .collect();
    let mul = mul_matrix(field, n, &mul_entries);
    let mut unit = ExactMatrix::zeros(field, n, 1);
    unit.set(0, 0, one.clone());
    let mut antipode = ExactMatrix::zeros(field, n, n);
    for g in 0..n {
        antipode.set(table.inverse(g), g, one.clone());
    }
    Ok(Object::Hopf(HopfAlgebra::new(
        Bialgebra::new(
            Coalgebra::new(field, n, delta, counit)?,
            Algebra::new(field, n, mul, unit)?,
        )?,
        antipode,
    )?))
}

/// Function algebra `k^G`, the Hopf dual of the group algebra.
pub fn function_algebra(field: &Field, table: &CayleyTable) -> Result<Object> {
    Ok(group_algebra(field, table)?.dualize())
}

/// Sweedler's four-dimensional Hopf algebra, basis `1, g, x, gx`;
/// `Delta g = g(x)g`, `Delta x = x(x)1 + g(x)x`, `S(x) = -gx`. Char != 2.
pub fn sweedler4(field: &Field) -> Result<Object> {
    if field.characteristic() == 2 {
        return Err(Error::BadParams(
            "the Sweedler algebra requires characteristic different from 2".into(),
        ));
    }
    let one = field.one();
    let neg = field.from_i64(-1);
    // indices: 1 -> 0, g -> 1, x -> 2, gx -> 3
    let mul_entries = vec![
        (0, 0, 0, one.clone()),
        (1, 0, 1, one.clone()),
        (2, 0, 2, one.clone()),
        (3, 0, 3, one.clone()),
        (1, 1, 0, one.clone()),
        (2, 2, 0, one.clone()),
        (3, 3, 0, one.clone()),
        (0, 1, 1, one.clone()),
        (3, 1, 2, one.clone()),
        (2, 1, 3, one.clone()),
        (3, 2, 1, neg.clone()),
        (2, 3, 1, neg.clone()),
    ];
    let mul = mul_matrix(field, 4, &mul_entries);
    let mut unit = ExactMatrix::zeros(field, 4, 1);
    unit.set(0, 0, one.clone());
    let delta_entries = vec![
        (0, 0, 0, one.clone()),
        (1, 1, 1, one.clone()),
        (2, 2, 0, one.clone()),
        (2, 1, 2, one.clone()),
        (3, 3, 1, one.clone()),
        (3, 0, 3, one.clone()),
    ];
    let delta = delta_matrix(field, 4, &delta_entries);
    let counit = ExactMatrix::from_rows(
        field,
        vec![vec![one.clone(), one.clone(), field.zero(), field.zero()]],
    );
    let mut antipode = ExactMatrix::zeros(field, 4, 4);
    antipode.set(0, 0, one.clone());
    antipode.set(1, 1, one.clone());
    antipode.set(3, 2, neg.clone());
    antipode.set(2, 3, one.clone());
    Ok(Object::Hopf(HopfAlgebra::new(
        Bialgebra::new(
            Coalgebra::new(field, 4, delta, counit)?,
            Algebra::new(field, 4, mul, unit)?,
        )?,
        antipode,
    )?))
}

/// Taft algebra of dimension `n^2`: generators `g, x` with `g^n = 1`,
/// `x^n = 0`, `gx = q xg` for a primitive `n`-th root of unity `q`.
/// Basis `g^a x^b` at flat index `a*n + b`.
pub fn taft(field: &Field, n: usize, q: &Scalar) -> Result<Object> {
    if n < 2 {
        return Err(Error::BadParams("Taft algebras need n >= 2".into()));
    }
    if q.field() != field {
        return Err(Error::FieldMismatch(
            q.field().to_string(),
            field.to_string(),
        ));
    }
    // q must be a primitive n-th root of unity
    let mut pow = field.one();
    for k in 1..=n {
        pow = field.mul(&pow, q.value());
        if field.is_one(&pow) != (k == n) {
            return Err(Error::BadParams(format!(
                "parameter q is not a primitive {n}-th root of unity"
            )));
        }
    }
    let dim = n * n;
    let qpow = |e: usize| -> Value {
        let mut acc = field.one();
        for _ in 0..(e % n) {
            acc = field.mul(&acc, q.value());
        }
        acc
    };
    // multiplication: (g^a x^b)(g^c x^d) = q^{-bc} g^{a+c} x^{b+d}, zero past x^n
    let mut mul_entries = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    if b + d >= n {
                        continue;
                    }
                    let coeff = qpow((n - (b * c) % n) % n);
                    let target = ((a + c) % n) * n + (b + d);
                    mul_entries.push((target, a * n + b, c * n + d, coeff));
                }
            }
        }
    }
    let mul = mul_matrix(field, dim, &mul_entries);
    let mut unit = ExactMatrix::zeros(field, dim, 1);
    unit.set(0, 0, field.one());
    let algebra = Algebra::new(field, dim, mul, unit)?;

    // Comultiplication by multiplicativity inside the tensor-square algebra:
    // Delta(g^a x^b) = (g(x)g)^a (x(x)1 + g(x)x)^b.
    let basis_tensor = |i: usize, j: usize| -> Vec<Value> {
        let mut v = vec![field.zero(); dim * dim];
        v[i * dim + j] = field.one();
        v
    };
    let dg = basis_tensor(n, n); // g (x) g
    let dx = {
        let mut v = basis_tensor(1, 0); // x (x) 1
        let w = basis_tensor(n, 1); // g (x) x
        for (slot, x) in v.iter_mut().zip(w) {
            *slot = field.add(slot, &x);
        }
        v
    };
    let dunit = basis_tensor(0, 0);
    let mut delta = ExactMatrix::zeros(field, dim * dim, dim);
    for a in 0..n {
        for b in 0..n {
            let mut acc = dunit.clone();
            for _ in 0..a {
                acc = tensor_vec_multiply(&algebra, &algebra, &acc, &dg);
            }
            for _ in 0..b {
                acc = tensor_vec_multiply(&algebra, &algebra, &acc, &dx);
            }
            for (row, v) in acc.into_iter().enumerate() {
                delta.set(row, a * n + b, v);
            }
        }
    }
    let counit = ExactMatrix::from_fn(field, 1, dim, |_, e| {
        if e % n == 0 {
            field.one()
        } else {
            field.zero()
        }
    });
    // S(g^a x^b) = S(x)^b S(g)^a with S(g) = g^{n-1}, S(x) = -g^{n-1} x
    let sg = {
        let mut v = vec![field.zero(); dim];
        v[(n - 1) * n] = field.one();
        v
    };
    let sx = {
        let mut v = vec![field.zero(); dim];
        v[(n - 1) * n + 1] = field.from_i64(-1);
        v
    };
    let mut antipode = ExactMatrix::zeros(field, dim, dim);
    for a in 0..n {
        for b in 0..n {
            let mut acc = algebra.unit_vector();
            for _ in 0..b {
                acc = algebra.multiply(&acc, &sx);
            }
            for _ in 0..a {
                acc = algebra.multiply(&acc, &sg);
            }
            for (row, v) in acc.into_iter().enumerate() {
                antipode.set(row, a * n + b, v);
            }
        }
    }
    Ok(Object::Hopf(HopfAlgebra::new(
        Bialgebra::new(Coalgebra::new(field, dim, delta, counit)?, algebra)?,
        antipode,
    )?))
}

/// Comatrix coalgebra `M_n^c`: `Delta e_ij = sum_k e_ik (x) e_kj`.
pub fn comatrix(field: &Field, n: usize) -> Result<Object> {
    let dim = n * n;
    let mut entries = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                entries.push((i * n + j, i * n + k, k * n + j, field.one()));
            }
        }
    }
    let delta = delta_matrix(field, dim, &entries);
    let counit = ExactMatrix::from_fn(field, 1, dim, |_, e| {
        if e / n == e % n {
            field.one()
        } else {
            field.zero()
        }
    });
    Ok(Object::Coalgebra(Coalgebra::new(
        field, dim, delta, counit,
    )?))
}

/// Divided-power coalgebra: the dual of `k[t]/(t^n)`;
/// `Delta d_k = sum_{i+j=k} d_i (x) d_j`.
pub fn divided_power(field: &Field, n: usize) -> Result<Object> {
    if n == 0 {
        return Err(Error::BadParams("divided_power needs n >= 1".into()));
    }
    let mut entries = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i + j < n {
                entries.push((i + j, i, j, field.one()));
            }
        }
    }
    let mul = mul_matrix(field, n, &entries);
    let mut unit = ExactMatrix::zeros(field, n, 1);
    unit.set(0, 0, field.one());
    let truncated = Algebra::new(field, n, mul, unit)?;
    Ok(Object::Coalgebra(truncated.dualize()))
}

/// Upper-triangular 2x2 matrices as an algebra, basis `e11, e12, e22`.
pub fn upper_triangular2(field: &Field) -> Result<Object> {
    let one = field.one();
    let entries = vec![
        (0, 0, 0, one.clone()), // e11 e11
        (1, 0, 1, one.clone()), // e11 e12
        (1, 1, 2, one.clone()), // e12 e22
        (2, 2, 2, one.clone()), // e22 e22
    ];
    let mul = mul_matrix(field, 3, &entries);
    let unit = ExactMatrix::column(field, vec![one.clone(), field.zero(), one.clone()]);
    Ok(Object::Algebra(Algebra::new(field, 3, mul, unit)?))
}

/// Diagonal 2x2 matrices as an algebra, basis `e11, e22`.
pub fn diagonal2(field: &Field) -> Result<Object> {
    let one = field.one();
    let entries = vec![(0, 0, 0, one.clone()), (1, 1, 1, one.clone())];
    let mul = mul_matrix(field, 2, &entries);
    let unit = ExactMatrix::column(field, vec![one.clone(), one.clone()]);
    Ok(Object::Algebra(Algebra::new(field, 2, mul, unit)?))
}

/// Output of a catalog build: named objects and distinguished morphisms.
#[derive(Debug, Clone, Default)]
pub struct CatalogOutput {
    pub objects: Vec<(String, Object)>,
    pub morphisms: Vec<(String, Morphism)>,
}

impl CatalogOutput {
    fn object(&self, name: &str) -> &Object {
        &self
            .objects
            .iter()
            .find(|(n, _)| n == name)
            .expect("catalog object")
            .1
    }
}

/// The triangular landmark data: the diagonal/upper-triangular algebra
/// inclusion and its dual coalgebra surjection.
pub fn triangular_pair(field: &Field) -> Result<CatalogOutput> {
    let t2 = upper_triangular2(field)?;
    let d2 = diagonal2(field)?;
    let t2d = t2.dualize();
    let d2d = d2.dualize();
    let mut incl = ExactMatrix::zeros(field, 3, 2);
    incl.set(0, 0, field.one());
    incl.set(2, 1, field.one());
    let incl_m = Morphism::new(MorphismKind::Alg, d2.clone(), t2.clone(), incl.clone())?;
    let q_m = Morphism::new(
        MorphismKind::Coalg,
        t2d.clone(),
        d2d.clone(),
        incl.transpose(),
    )?;
    Ok(CatalogOutput {
        objects: vec![
            ("T2".into(), t2),
            ("D2".into(), d2),
            ("T2d".into(), t2d),
            ("D2d".into(), d2d),
        ],
        morphisms: vec![("incl_d2_t2".into(), incl_m), ("q_t2d_d2d".into(), q_m)],
    })
}

/// Cyclic pair for `n | m`: the Hopf inclusion `kC_n -> kC_m`, the group
/// surjection `kC_m -> kC_n`, and their function-algebra duals.
pub fn cyclic_pair(field: &Field, m: usize, n: usize) -> Result<CatalogOutput> {
    if n == 0 || m % n != 0 {
        return Err(Error::BadParams(format!(
            "cyclic_pair needs n | m, got m={m}, n={n}"
        )));
    }
    let kcm = group_algebra(field, &CayleyTable::cyclic(m))?;
    let kcn = group_algebra(field, &CayleyTable::cyclic(n))?;
    let fnm = kcm.dualize();
    let fnn = kcn.dualize();
    let step = m / n;
    let mut incl = ExactMatrix::zeros(field, m, n);
    for j in 0..n {
        incl.set(j * step, j, field.one());
    }
    let mut proj = ExactMatrix::zeros(field, n, m);
    for j in 0..m {
        let cur = proj.at(j % n, j).clone();
        proj.set(j % n, j, field.add(&cur, &field.one()));
    }
    let incl_m = Morphism::new(MorphismKind::Hopf, kcn.clone(), kcm.clone(), incl.clone())?;
    let proj_m = Morphism::new(MorphismKind::Hopf, kcm.clone(), kcn.clone(), proj.clone())?;
    let dual_proj = Morphism::new(
        MorphismKind::Hopf,
        fnm.clone(),
        fnn.clone(),
        incl.transpose(),
    )?;
    let dual_incl = Morphism::new(
        MorphismKind::Hopf,
        fnn.clone(),
        fnm.clone(),
        proj.transpose(),
    )?;
    Ok(CatalogOutput {
        objects: vec![
            (format!("kC{m}"), kcm),
            (format!("kC{n}"), kcn),
            (format!("fnC{m}"), fnm),
            (format!("fnC{n}"), fnn),
        ],
        morphisms: vec![
            (format!("incl_c{n}_c{m}"), incl_m),
            (format!("proj_c{m}_c{n}"), proj_m),
            (format!("dual_proj_c{m}_c{n}"), dual_proj),
            (format!("dual_incl_c{n}_c{m}"), dual_incl),
        ],
    })
}

fn parse_table(spec: &str) -> Result<CayleyTable> {
    let rows: Vec<Vec<usize>> = spec
        .split(';')
        .map(|row| {
            row.split(',')
                .map(|e| e.trim().parse::<usize>())
                .collect::<std::result::Result<Vec<_>, _>>()
        })
        .collect::<std::result::Result<Vec<_>, _>>()
        .map_err(|_| Error::BadParams(format!("unparseable Cayley table `{spec}`")))?;
    CayleyTable::new(rows)
}

fn get_usize(params: &BTreeMap<String, String>, key: &str) -> Result<usize> {
    params
        .get(key)
        .ok_or_else(|| Error::BadParams(format!("missing parameter `{key}`")))?
        .parse()
        .map_err(|_| Error::BadParams(format!("parameter `{key}` must be a nonnegative integer")))
}

fn table_param(params: &BTreeMap<String, String>) -> Result<CayleyTable> {
    if let Some(spec) = params.get("table") {
        return parse_table(spec);
    }
    if params.contains_key("cyclic") {
        return Ok(CayleyTable::cyclic(get_usize(params, "cyclic")?));
    }
    Err(Error::BadParams(
        "expected `table=r0;r1;...` or `cyclic=n`".into(),
    ))
}

/// Builds a catalog entry by name with string parameters, as used by the
/// command line: `trivial`, `group_algebra`, `function_algebra`, `sweedler4`,
/// `taft`, `comatrix`, `divided_power`, `triangular_pair`, `cyclic_pair`,
/// `corpus`.
pub fn build(
    field: &Field,
    name: &str,
    params: &BTreeMap<String, String>,
) -> Result<CatalogOutput> {
    let single = |n: &str, obj: Object| CatalogOutput {
        objects: vec![(n.to_string(), obj)],
        morphisms: vec![],
    };
    match name {
        "trivial" => Ok(single("triv", trivial(field))),
        "group_algebra" => {
            let t = table_param(params)?;
            Ok(single(
                &format!("kG{}", t.order()),
                group_algebra(field, &t)?,
            ))
        }
        "function_algebra" => {
            let t = table_param(params)?;
            Ok(single(
                &format!("fnG{}", t.order()),
                function_algebra(field, &t)?,
            ))
        }
        "sweedler4" => Ok(single("sweedler4", sweedler4(field)?)),
        "taft" => {
            let n = get_usize(params, "n")?;
            let q = match params.get("q") {
                Some(s) => field.parse_scalar(s)?,
                None if field.characteristic() == 0 && n == 2 => field.scalar_from_i64(-1),
                None => {
                    return Err(Error::BadParams(
                        "taft requires an explicit primitive root `q=...` over this field".into(),
                    ))
                }
            };
            Ok(single(&format!("taft{n}"), taft(field, n, &q)?))
        }
        "comatrix" => {
            let n = get_usize(params, "n")?;
            Ok(single(&format!("M{n}c"), comatrix(field, n)?))
        }
        "divided_power" => {
            let n = get_usize(params, "n")?;
            Ok(single(&format!("dp{n}"), divided_power(field, n)?))
        }
        "triangular_pair" => triangular_pair(field),
        "cyclic_pair" => {
            let m = get_usize(params, "m")?;
            let n = get_usize(params, "n")?;
            cyclic_pair(field, m, n)
        }
        "corpus" => {
            let c = corpus(field)?;
            Ok(CatalogOutput {
                objects: c.objects,
                morphisms: c.morphisms,
            })
        }
        other => Err(Error::BadParams(format!("unknown catalog entry `{other}`"))),
    }
}

/// The standard corpus over one field: every catalog object that exists
/// there plus the distinguished morphisms between them.
#[derive(Debug, Clone)]
pub struct Corpus {
    pub field: Field,
    pub objects: Vec<(String, Object)>,
    pub morphisms: Vec<(String, Morphism)>,
}

impl Corpus {
    pub fn object(&self, name: &str) -> &Object {
        &self
            .objects
            .iter()
            .find(|(n, _)| n == name)
            .unwrap_or_else(|| panic!("no corpus object `{name}`"))
            .1
    }

    pub fn morphism(&self, name: &str) -> &Morphism {
        &self
            .morphisms
            .iter()
            .find(|(n, _)| n == name)
            .unwrap_or_else(|| panic!("no corpus morphism `{name}`"))
            .1
    }

    /// Morphisms whose kind respects comultiplication.
    pub fn coalgebra_morphisms(&self) -> impl Iterator<Item = &(String, Morphism)> {
        self.morphisms
            .iter()
            .filter(|(_, m)| m.kind.respects_coalgebra())
    }

    /// Morphisms between Hopf objects, validated at Hopf kind.
    pub fn hopf_morphisms(&self) -> impl Iterator<Item = &(String, Morphism)> {
        self.morphisms
            .iter()
            .filter(|(_, m)| m.kind == MorphismKind::Hopf)
    }

    pub fn algebra_morphisms(&self) -> impl Iterator<Item = &(String, Morphism)> {
        self.morphisms
            .iter()
            .filter(|(_, m)| m.kind.respects_algebra())
    }
}

pub fn corpus(field: &Field) -> Result<Corpus> {
    let mut objects: Vec<(String, Object)> = Vec::new();
    let mut morphisms: Vec<(String, Morphism)> = Vec::new();

    let triv = trivial(field);
    objects.push(("triv".into(), triv.clone()));

    let cyc = cyclic_pair(field, 4, 2)?;
    for (n, o) in &cyc.objects {
        objects.push((n.clone(), o.clone()));
    }
    for (n, m) in &cyc.morphisms {
        morphisms.push((n.clone(), m.clone()));
    }
    let kc2 = cyc.object("kC2").clone();
    let kc4 = cyc.object("kC4").clone();

    let kc3 = group_algebra(field, &CayleyTable::cyclic(3))?;
    objects.push(("kC3".into(), kc3));

    let klein = group_algebra(
        field,
        &CayleyTable::product(&CayleyTable::cyclic(2), &CayleyTable::cyclic(2)),
    )?;
    objects.push(("kC2xC2".into(), klein.clone()));

    let m2c = comatrix(field, 2)?;
    objects.push(("M2c".into(), m2c.clone()));
    let m2 = m2c.dualize();
    objects.push(("M2".into(), m2.clone()));

    objects.push(("dp2".into(), divided_power(field, 2)?));
    objects.push(("dp3".into(), divided_power(field, 3)?));

    let tri = triangular_pair(field)?;
    for (n, o) in &tri.objects {
        objects.push((n.clone(), o.clone()));
    }
    for (n, m) in &tri.morphisms {
        morphisms.push((n.clone(), m.clone()));
    }

    let sweedler = if field.characteristic() != 2 {
        let h4 = sweedler4(field)?;
        objects.push(("sweedler4".into(), h4.clone()));
        Some(h4)
    } else {
        None
    };

    // identities
    morphisms.push((
        "id_kC2".into(),
        Morphism::identity(&kc2, MorphismKind::Hopf),
    ));
    morphisms.push((
        "id_M2c".into(),
        Morphism::identity(&m2c, MorphismKind::Coalg),
    ));

    // counits to the trivial object, on every coalgebra-bearing object
    for (name, obj) in objects.clone() {
        let Some(c) = obj.coalgebra() else { continue };
        if name == "triv" {
            continue;
        }
        let kind = MorphismKind::strongest(obj.kind(), triv.kind());
        let m = Morphism::new(kind, obj.clone(), triv.clone(), c.counit().clone())?;
        morphisms.push((format!("eps_{name}"), m));
    }

    // unit inclusions
    let unit_incl = |dst: &Object| -> Result<Morphism> {
        let kind = MorphismKind::strongest(triv.kind(), dst.kind());
        Morphism::new(
            kind,
            triv.clone(),
            dst.clone(),
            dst.algebra().unwrap().unit().clone(),
        )
    };
    morphisms.push(("unit_kC2".into(), unit_incl(&kc2)?));
    morphisms.push(("unit_M2".into(), unit_incl(&m2)?));

    // the Frobenius-style automorphism g -> g^3 of kC4
    {
        let mut a = ExactMatrix::zeros(field, 4, 4);
        for j in 0..4usize {
            a.set((3 * j) % 4, j, field.one());
        }
        morphisms.push((
            "auto_c4".into(),
            Morphism::new(MorphismKind::Hopf, kc4.clone(), kc4.clone(), a)?,
        ));
    }

    // cocommutative product structure maps on kC2 (x) kC2
    {
        let id2 = ExactMatrix::identity(field, 2);
        let c2 = kc2.coalgebra().unwrap();
        let a2 = kc2.algebra().unwrap();
        let diag = {
            // g -> g (x) g on the Klein-group basis (a, b) -> index 2a + b
            let mut m = ExactMatrix::zeros(field, 4, 2);
            m.set(0, 0, field.one());
            m.set(3, 1, field.one());
            m
        };
        morphisms.push((
            "diag_c2".into(),
            Morphism::new(MorphismKind::Hopf, kc2.clone(), klein.clone(), diag)?,
        ));
        morphisms.push((
            "mult_c2".into(),
            Morphism::new(
                MorphismKind::Hopf,
                klein.clone(),
                kc2.clone(),
                a2.mul().clone(),
            )?,
        ));
        morphisms.push((
            "p1_c2".into(),
            Morphism::new(
                MorphismKind::Hopf,
                klein.clone(),
                kc2.clone(),
                id2.kron(c2.counit()),
            )?,
        ));
        morphisms.push((
            "p2_c2".into(),
            Morphism::new(
                MorphismKind::Hopf,
                klein.clone(),
                kc2.clone(),
                c2.counit().kron(&id2),
            )?,
        ));
        let swap = crate::linalg::flip(field, 2, 2);
        morphisms.push((
            "swap_c2".into(),
            Morphism::new(MorphismKind::Hopf, klein.clone(), klein.clone(), swap)?,
        ));
    }

    // Sweedler morphisms (char != 2): kill x, include kC2
    if let Some(h4) = &sweedler {
        let mut kill = ExactMatrix::zeros(field, 2, 4);
        kill.set(0, 0, field.one());
        kill.set(1, 1, field.one());
        morphisms.push((
            "kill_x".into(),
            Morphism::new(MorphismKind::Hopf, h4.clone(), kc2.clone(), kill)?,
        ));
        let mut incl = ExactMatrix::zeros(field, 4, 2);
        incl.set(0, 0, field.one());
        incl.set(1, 1, field.one());
        morphisms.push((
            "incl_c2_h4".into(),
            Morphism::new(MorphismKind::Hopf, kc2.clone(), h4.clone(), incl)?,
        ));
    }

    // the epic algebra landmark: upper-triangular inside full 2x2 matrices,
    // and its dual coalgebra surjection
    {
        let t2 = corpus_obj(&objects, "T2");
        let t2d = corpus_obj(&objects, "T2d");
        // T2 basis (e11, e12, e22) -> M2 basis (e11, e12, e21, e22)
        let mut incl = ExactMatrix::zeros(field, 4, 3);
        incl.set(0, 0, field.one());
        incl.set(1, 1, field.one());
        incl.set(3, 2, field.one());
        morphisms.push((
            "incl_t2_m2".into(),
            Morphism::new(MorphismKind::Alg, t2.clone(), m2.clone(), incl.clone())?,
        ));
        morphisms.push((
            "surj_m2c_t2d".into(),
            Morphism::new(
                MorphismKind::Coalg,
                m2c.clone(),
                t2d.clone(),
                incl.transpose(),
            )?,
        ));
    }

    Ok(Corpus {
        field: field.clone(),
        objects,
        morphisms,
    })
}

fn corpus_obj<'a>(objects: &'a [(String, Object)], name: &str) -> &'a Object {
    &objects
        .iter()
        .find(|(n, _)| n == name)
        .expect("corpus object")
        .1
}
