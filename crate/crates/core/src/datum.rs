//! Based root data realized inside an ambient lattice `ℤⁿ`.
//!
//! Every supported group (GL, SL, PGL, tori, and A₁×A₁) has its character and
//! cocharacter lattices cut out of, or quotiented from, `ℤⁿ` by a few integer
//! functionals. Roots and coroots are stored as ambient integer vectors and
//! the pairing is the dot product, which is well defined on the
//! sublattice/quotient pair.

use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg;
use crate::scalar::{rat, rat_int, ExpScalar, GaussianRational, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Gl(usize),
    Sl(usize),
    Pgl(usize),
    Torus(usize),
    Sl2xSl2,
    Pgl2xPgl2,
    /// `GL(n) × GL(n)`, the dual group of `GL(n, ℂ)` viewed as a real group.
    GlPair(usize),
}

impl Family {
    pub fn dual(self) -> Family {
        match self {
            Family::Gl(n) => Family::Gl(n),
            Family::Sl(n) => Family::Pgl(n),
            Family::Pgl(n) => Family::Sl(n),
            Family::Torus(n) => Family::Torus(n),
            Family::Sl2xSl2 => Family::Pgl2xPgl2,
            Family::Pgl2xPgl2 => Family::Sl2xSl2,
            Family::GlPair(n) => Family::GlPair(n),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Gl(n) => write!(f, "GL({n})"),
            Family::Sl(n) => write!(f, "SL({n})"),
            Family::Pgl(n) => write!(f, "PGL({n})"),
            Family::Torus(n) => write!(f, "T({n})"),
            Family::Sl2xSl2 => write!(f, "SL(2)×SL(2)"),
            Family::Pgl2xPgl2 => write!(f, "PGL(2)×PGL(2)"),
            Family::GlPair(n) => write!(f, "GL({n})×GL({n})"),
        }
    }
}

/// A vector in the complexified Cartan, in ambient diagonal coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanVector(pub Vec<GaussianRational>);

impl CartanVector {
    pub fn zero(n: usize) -> Self {
        Self(vec![GaussianRational::zero(); n])
    }

    pub fn from_rationals(entries: &[(i64, i64)]) -> Self {
        Self(
            entries
                .iter()
                .map(|&(n, d)| GaussianRational::ratio(n, d))
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(GaussianRational::is_zero)
    }

    pub fn iter(&self) -> std::slice::Iter<'_, GaussianRational> {
        self.0.iter()
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self(self.0.iter().map(|x| x.scale(r)).collect())
    }

    pub fn half(&self) -> Self {
        self.scale(&rat(1, 2))
    }

    /// Coordinatewise `exp(2πi·x)`: the torus element this vector exponentiates to.
    pub fn exp(&self) -> Vec<ExpScalar> {
        self.0.iter().cloned().map(ExpScalar::exp).collect()
    }

    pub fn has_zero_real_part(&self) -> bool {
        self.0.iter().all(|x| x.re.is_zero())
    }

    /// Every coordinate is an integer (real, integral).
    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|x| x.is_real() && x.re.is_integer())
    }

    /// `(w·v)[perm[k]] = v[k]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        let mut out = self.0.clone();
        for (k, &p) in perm.iter().enumerate() {
            out[p] = self.0[k].clone();
        }
        Self(out)
    }

    pub fn display_diag(&self) -> String {
        let body: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        format!("diag({})", body.join(", "))
    }
}

impl fmt::Display for CartanVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", body.join(", "))
    }
}

impl Index<usize> for CartanVector {
    type Output = GaussianRational;
    fn index(&self, k: usize) -> &GaussianRational {
        &self.0[k]
    }
}

impl Add for &CartanVector {
    type Output = CartanVector;
    fn add(self, rhs: &CartanVector) -> CartanVector {
        CartanVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &CartanVector {
    type Output = CartanVector;
    fn sub(self, rhs: &CartanVector) -> CartanVector {
        CartanVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &CartanVector {
    type Output = CartanVector;
    fn neg(self) -> CartanVector {
        CartanVector(self.0.iter().map(|a| -a).collect())
    }
}

/// A root together with its coroot, and its expansion in simple roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Root {
    pub root: Vec<i64>,
    pub coroot: Vec<i64>,
    pub simple_coeffs: Vec<i64>,
}

impl Root {
    pub fn is_positive(&self) -> bool {
        self.simple_coeffs.iter().all(|&c| c >= 0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasedRootDatum {
    family: Family,
    ambient: usize,
    simple_roots: Vec<Vec<i64>>,
    simple_coroots: Vec<Vec<i64>>,
    /// `X_* = {c : ⟨k,c⟩ = 0}` and `X^* = ℤⁿ / ⟨k⟩`.
    coweight_constraints: Vec<Vec<i64>>,
    /// `X^* = {x : ⟨x,k⟩ = 0}` and `X_* = ℤⁿ / ⟨k⟩`.
    weight_constraints: Vec<Vec<i64>>,
}

fn unit_diffs(n: usize, offset: usize, total: usize) -> Vec<Vec<i64>> {
    (0..n.saturating_sub(1))
        .map(|i| {
            let mut v = vec![0; total];
            v[offset + i] = 1;
            v[offset + i + 1] = -1;
            v
        })
        .collect()
}

fn block_ones(offset: usize, len: usize, total: usize) -> Vec<i64> {
    let mut v = vec![0; total];
    v[offset..offset + len].iter_mut().for_each(|x| *x = 1);
    v
}

impl BasedRootDatum {
    pub fn gl(n: usize) -> Self {
        Self {
            family: Family::Gl(n),
            ambient: n,
            simple_roots: unit_diffs(n, 0, n),
            simple_coroots: unit_diffs(n, 0, n),
            coweight_constraints: vec![],
            weight_constraints: vec![],
        }
    }

    pub fn sl(n: usize) -> Self {
        Self {
            family: Family::Sl(n),
            ambient: n,
            simple_roots: unit_diffs(n, 0, n),
            simple_coroots: unit_diffs(n, 0, n),
            coweight_constraints: vec![block_ones(0, n, n)],
            weight_constraints: vec![],
        }
    }

    pub fn pgl(n: usize) -> Self {
        Self::sl(n).dual()
    }

    pub fn torus(n: usize) -> Self {
        Self {
            family: Family::Torus(n),
            ambient: n,
            simple_roots: vec![],
            simple_coroots: vec![],
            coweight_constraints: vec![],
            weight_constraints: vec![],
        }
    }

    /// SL(2)×SL(2), an A₁×A₁ datum in `ℤ⁴`.
    pub fn sl2_x_sl2() -> Self {
        let roots: Vec<Vec<i64>> = unit_diffs(2, 0, 4)
            .into_iter()
            .chain(unit_diffs(2, 2, 4))
            .collect();
        Self {
            family: Family::Sl2xSl2,
            ambient: 4,
            simple_roots: roots.clone(),
            simple_coroots: roots,
            coweight_constraints: vec![block_ones(0, 2, 4), block_ones(2, 2, 4)],
            weight_constraints: vec![],
        }
    }

    /// `GL(n) × GL(n)` in `ℤ^{2n}`.
    pub fn gl_pair(n: usize) -> Self {
        let roots: Vec<Vec<i64>> = unit_diffs(n, 0, 2 * n)
            .into_iter()
            .chain(unit_diffs(n, n, 2 * n))
            .collect();
        Self {
            family: Family::GlPair(n),
            ambient: 2 * n,
            simple_roots: roots.clone(),
            simple_coroots: roots,
            coweight_constraints: vec![],
            weight_constraints: vec![],
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn name(&self) -> String {
        self.family.to_string()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    /// Semisimple rank.
    pub fn rank(&self) -> usize {
        self.simple_roots.len()
    }

    pub fn simple_roots(&self) -> &[Vec<i64>] {
        &self.simple_roots
    }

    pub fn simple_coroots(&self) -> &[Vec<i64>] {
        &self.simple_coroots
    }

    /// Swap roots with coroots and the character lattice with the cocharacter lattice.
    pub fn dual(&self) -> Self {
        Self {
            family: self.family.dual(),
            ambient: self.ambient,
            simple_roots: self.simple_coroots.clone(),
            simple_coroots: self.simple_roots.clone(),
            coweight_constraints: self.weight_constraints.clone(),
            weight_constraints: self.coweight_constraints.clone(),
        }
    }

    /// `⟨α_i, α_j∨⟩`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        self.simple_roots
            .iter()
            .map(|a| self.simple_coroots.iter().map(|c| dot(a, c)).collect())
            .collect()
    }

    pub fn is_valid(&self) -> bool {
        let c = self.cartan_matrix();
        let r = self.rank();
        let cartan_ok = (0..r).all(|i| {
            (0..r).all(|j| {
                if i == j {
                    c[i][j] == 2
                } else {
                    c[i][j] <= 0 && ((c[i][j] == 0) == (c[j][i] == 0))
                }
            })
        });
        let dims_ok = self.simple_coroots.len() == r
            && self
                .simple_roots
                .iter()
                .chain(&self.simple_coroots)
                .all(|v| v.len() == self.ambient);
        let lattices_ok = self
            .simple_coroots
            .iter()
            .all(|c| self.coweight_constraints.iter().all(|k| dot(k, c) == 0))
            && self
                .simple_roots
                .iter()
                .all(|a| self.weight_constraints.iter().all(|k| dot(a, k) == 0));
        cartan_ok && dims_ok && lattices_ok
    }

    /// `⟨w, c⟩` for a weight in ambient coordinates and a coweight.
    pub fn pairing(&self, weight: &[i64], coweight: &CartanVector) -> Result<GaussianRational> {
        if weight.len() != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: weight.len(),
            });
        }
        if coweight.len() != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: coweight.len(),
            });
        }
        Ok(weight
            .iter()
            .zip(coweight.iter())
            .fold(GaussianRational::zero(), |acc, (&w, c)| {
                acc + c.scale(&rat_int(w))
            }))
    }

    /// Whether `v` lies in `X_*(T) ⊗ ℂ`, i.e. satisfies the coweight constraints.
    pub fn is_coweight(&self, v: &CartanVector) -> bool {
        v.len() == self.ambient
            && self.coweight_constraints.iter().all(|k| {
                let s = self.pairing(k, v).expect("ambient dimension checked");
                s.is_zero()
            })
    }

    /// Whether `v` lies in the cocharacter lattice `X_*(T)`.
    pub fn is_cocharacter(&self, v: &CartanVector) -> bool {
        if !self.is_coweight(v) || v.iter().any(|x| !x.is_real()) {
            return false;
        }
        if self.weight_constraints.is_empty() {
            return v.is_integral();
        }
        // quotient lattice: integral modulo the span of the weight constraints
        // (only the PGL-type families, where each constraint is a block of ones)
        self.weight_constraints.iter().all(|k| {
            let idx: Vec<usize> = (0..self.ambient).filter(|&i| k[i] != 0).collect();
            idx.windows(2)
                .all(|w| (&v[w[0]].re - &v[w[1]].re).is_integer())
        }) && (0..self.ambient)
            .filter(|&i| self.weight_constraints.iter().all(|k| k[i] == 0))
            .all(|i| v[i].re.is_integer())
    }

    /// A ℚ-basis of the real span of `X_*(T)` as a subspace of `ℚⁿ`.
    pub fn coweight_basis(&self) -> Vec<Vec<Rational>> {
        let m: Vec<Vec<Rational>> = self
            .coweight_constraints
            .iter()
            .map(|k| k.iter().map(|&x| rat_int(x)).collect())
            .collect();
        linalg::kernel(&m, self.ambient)
    }

    /// Generators of the subspace the coweight space is taken modulo.
    pub fn coweight_quotient(&self) -> Vec<Vec<Rational>> {
        self.weight_constraints
            .iter()
            .map(|k| k.iter().map(|&x| rat_int(x)).collect())
            .collect()
    }

    /// All roots with their coroots, closed under the simple reflections.
    pub fn roots(&self) -> Vec<Root> {
        let r = self.rank();
        let mut out: Vec<Root> = (0..r)
            .map(|i| {
                let mut c = vec![0; r];
                c[i] = 1;
                Root {
                    root: self.simple_roots[i].clone(),
                    coroot: self.simple_coroots[i].clone(),
                    simple_coeffs: c,
                }
            })
            .collect();
        let mut k = 0;
        while k < out.len() {
            for i in 0..r {
                let b = &out[k];
                let n = dot(&b.root, &self.simple_coroots[i]);
                let m = dot(&self.simple_roots[i], &b.coroot);
                let root: Vec<i64> = b
                    .root
                    .iter()
                    .zip(&self.simple_roots[i])
                    .map(|(x, a)| x - n * a)
                    .collect();
                let coroot: Vec<i64> = b
                    .coroot
                    .iter()
                    .zip(&self.simple_coroots[i])
                    .map(|(x, a)| x - m * a)
                    .collect();
                let mut coeffs = b.simple_coeffs.clone();
                coeffs[i] -= n;
                if !out.iter().any(|o| o.simple_coeffs == coeffs) {
                    out.push(Root {
                        root,
                        coroot,
                        simple_coeffs: coeffs,
                    });
                }
            }
            k += 1;
        }
        out
    }

    /// Whether a permutation of the ambient coordinates lies in the Weyl group:
    /// every cycle must stay inside a connected component of the root graph.
    pub fn weyl_contains(&self, perm: &[usize]) -> bool {
        if perm.len() != self.ambient || !is_permutation(perm) {
            return false;
        }
        let comp = self.coordinate_components();
        perm.iter().enumerate().all(|(k, &p)| comp[k] == comp[p])
    }

    fn coordinate_components(&self) -> Vec<usize> {
        let mut comp: Vec<usize> = (0..self.ambient).collect();
        fn find(c: &mut [usize], x: usize) -> usize {
            let mut x = x;
            while c[x] != x {
                c[x] = c[c[x]];
                x = c[x];
            }
            x
        }
        for a in &self.simple_roots {
            let support: Vec<usize> = (0..self.ambient).filter(|&i| a[i] != 0).collect();
            for w in support.windows(2) {
                let (x, y) = (find(&mut comp, w[0]), find(&mut comp, w[1]));
                comp[x] = y;
            }
        }
        (0..self.ambient).map(|i| find(&mut comp, i)).collect()
    }
}

pub(crate) fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn is_permutation(perm: &[usize]) -> bool {
    let mut seen = vec![false; perm.len()];
    perm.iter()
        .all(|&p| p < seen.len() && !std::mem::replace(&mut seen[p], true))
}

pub fn is_involution(perm: &[usize]) -> bool {
    is_permutation(perm) && perm.iter().enumerate().all(|(k, &p)| perm[p] == k)
}

/// Disjoint transpositions `(i, j)` with `i < j` of an involution.
pub fn transpositions(perm: &[usize]) -> Vec<(usize, usize)> {
    perm.iter()
        .enumerate()
        .filter(|&(k, &p)| k < p)
        .map(|(k, &p)| (k, p))
        .collect()
}

/// `t_w` with `n_w² = exp(2πi·t_w)` for the Tits representative of an
/// involution built from antidiagonal `[[0,1],[-1,0]]` blocks: each
/// transposition contributes half its coroot.
pub fn tits_square_exponent(perm: &[usize]) -> CartanVector {
    let mut t = CartanVector::zero(perm.len());
    for (i, j) in transpositions(perm) {
        t.0[i] = GaussianRational::ratio(1, 2);
        t.0[j] = GaussianRational::ratio(-1, 2);
    }
    t
}

/// Sign of column `k` of the Tits representative `n_w`.
pub fn tits_sign(perm: &[usize], k: usize) -> i64 {
    if perm[k] > k {
        -1
    } else {
        1
    }
}
