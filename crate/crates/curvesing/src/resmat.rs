//! Resultant-style matrices: the Sylvester matrix of the moving forms, the
//! hybrid family interpolating between Sylvester and Bezout, the Bezout
//! matrix of the symmetric forms F and G, and the symbolic Bezout matrix
//! with its factorization through the Sylvester matrix.
//!
//! Moving forms are bihomogeneous: degree mu or n - mu in (s, v) and
//! degree n in (t, u). They are stored as coefficient lists along s-powers
//! with (t, u)-forms as entries, and all determinant work happens on the
//! dehomogenized u = 1 side with explicit re-homogenization against known
//! degrees.

use crate::error::{Error, Result};
use crate::mubasis::{MuBasis, Parameterization};
use crate::polycore::mat::{self, Mat};
use crate::polycore::rat::Rat;
use crate::polycore::{BiHomPoly, MoebiusChange, TriPoly, UniPoly, VarPair};
use num_traits::Zero;

/// A form bihomogeneous in (s, v) and (t, u): coefficient i along s^i
/// v^(sv_deg - i) is a (t, u)-form of degree tu_deg.
#[derive(Clone, Debug)]
pub struct MovingForm {
    pub sv_deg: usize,
    pub tu_deg: usize,
    pub coeffs: Vec<BiHomPoly>,
}

impl MovingForm {
    pub(crate) fn tu_zero(tu_deg: usize) -> BiHomPoly {
        BiHomPoly::homogenize(&UniPoly::zero(), tu_deg, VarPair::TU)
    }

    pub fn new(sv_deg: usize, tu_deg: usize, coeffs: Vec<BiHomPoly>) -> Self {
        assert_eq!(coeffs.len(), sv_deg + 1);
        MovingForm {
            sv_deg,
            tu_deg,
            coeffs,
        }
    }

    /// sum_i triple_i(s, v) * forms_i(t, u).
    pub fn from_syzygy(triple: &[BiHomPoly; 3], forms_tu: &[BiHomPoly; 3]) -> Self {
        let d = triple[0].degree();
        let n = forms_tu[0].degree();
        let coeffs = (0..=d)
            .map(|i| {
                let mut acc = Self::tu_zero(n);
                for k in 0..3 {
                    let c = triple[k].coeff(i);
                    if !c.is_zero() {
                        acc = acc.add(&forms_tu[k].scale(&c));
                    }
                }
                acc
            })
            .collect();
        MovingForm::new(d, n, coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Coefficients at u = 1: univariate polynomials in t along s-powers.
    pub fn dehom(&self) -> Vec<UniPoly> {
        self.coeffs.iter().map(|c| c.dehom()).collect()
    }

    /// Exact division by the diagonal form su - tv, dropping both partial
    /// degrees by one. Fails when the input does not vanish on the diagonal.
    pub fn divide_diagonal(&self) -> Result<MovingForm> {
        if self.sv_deg == 0 || self.tu_deg == 0 {
            return Err(Error::InexactDivision(
                "diagonal divisor needs positive bidegree",
            ));
        }
        let c = self.dehom();
        let d = self.sv_deg;
        // Divide by (s - t) at u = v = 1, building the quotient top down.
        let mut q = vec![UniPoly::zero(); d];
        q[d - 1] = c[d].clone();
        for i in (1..d).rev() {
            q[i - 1] = &c[i] + &q[i].shift_up(1);
        }
        let rem = &c[0] + &q[0].shift_up(1);
        if !rem.is_zero() {
            return Err(Error::InexactDivision(
                "form does not vanish on the diagonal su = tv",
            ));
        }
        let tu = self.tu_deg - 1;
        let coeffs = q
            .into_iter()
            .map(|p| {
                assert!(
                    p.is_zero() || p.deg_or0() <= tu,
                    "diagonal quotient exceeds its degree bound"
                );
                BiHomPoly::homogenize(&p, tu, VarPair::TU)
            })
            .collect();
        Ok(MovingForm::new(d - 1, tu, coeffs))
    }

    /// Evaluate the (s, v) pair, leaving a (t, u)-form.
    pub fn eval_sv(&self, s0: &Rat, v0: &Rat) -> BiHomPoly {
        let one = Rat::from_integer(1.into());
        let mut sp = vec![one.clone()];
        let mut vp = vec![one];
        for _ in 0..self.sv_deg {
            sp.push(sp.last().unwrap() * s0);
            vp.push(vp.last().unwrap() * v0);
        }
        let mut acc = Self::tu_zero(self.tu_deg);
        for (i, c) in self.coeffs.iter().enumerate() {
            let f = &sp[i] * &vp[self.sv_deg - i];
            if !f.is_zero() {
                acc = acc.add(&c.scale(&f));
            }
        }
        acc
    }
}

/// The pair of moving forms attached to a mu-basis.
#[derive(Clone, Debug)]
pub struct MovingForms {
    pub p_phi: MovingForm,
    pub q_phi: MovingForm,
    pub n: usize,
    pub mu: usize,
}

/// Build the moving forms and verify that both vanish on the diagonal
/// (exact divisibility by su - tv).
pub fn build_moving_forms(phi: &Parameterization, basis: &MuBasis) -> Result<MovingForms> {
    let forms_tu = phi.forms_tu();
    let p_phi = MovingForm::from_syzygy(&basis.p, &forms_tu);
    let q_phi = MovingForm::from_syzygy(&basis.q, &forms_tu);
    p_phi.divide_diagonal().map_err(|_| {
        Error::BadParameterization("p-form fails diagonal divisibility; invalid basis".into())
    })?;
    q_phi.divide_diagonal().map_err(|_| {
        Error::BadParameterization("q-form fails diagonal divisibility; invalid basis".into())
    })?;
    Ok(MovingForms {
        p_phi,
        q_phi,
        n: phi.degree(),
        mu: basis.mu,
    })
}

/// Which construction produced a matrix; carried for diagnostics and
/// serialization.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatrixKind {
    Sylvester,
    Hybrid(usize),
    BezoutFG,
}

impl MatrixKind {
    pub fn label(&self) -> String {
        match self {
            MatrixKind::Sylvester => "sylvester".into(),
            MatrixKind::Hybrid(j) => format!("hybrid-{}", j),
            MatrixKind::BezoutFG => "bezout-fg".into(),
        }
    }
}

/// A matrix with homogeneous (t, u)-form entries. Entries carry their own
/// degrees; mixed degrees across columns occur in the hybrid family.
#[derive(Clone, Debug)]
pub struct PolyMatrix {
    pub mat: Mat<BiHomPoly>,
    pub kind: MatrixKind,
}

impl PolyMatrix {
    pub fn size(&self) -> usize {
        self.mat.rows()
    }

    /// Entries at u = 1.
    pub fn dehom(&self) -> Mat<UniPoly> {
        self.mat.map(|e| e.dehom())
    }

    /// Entrywise coordinate change on (t, u).
    pub fn apply_moebius(&self, m: &MoebiusChange) -> PolyMatrix {
        PolyMatrix {
            mat: self.mat.map(|e| m.apply(e)),
            kind: self.kind,
        }
    }

    /// Evaluate every entry at a parameter point.
    pub fn eval_at(&self, t0: &Rat, u0: &Rat) -> Mat<Rat> {
        self.mat.map(|e| e.eval(t0, u0))
    }

    pub fn det(&self) -> BiHomPoly {
        let d = mat::det_interp(&self.dehom());
        if d.is_zero() {
            return BiHomPoly::zero(VarPair::TU);
        }
        // One entry per column in each determinant term, so the homogeneous
        // degree is the sum of per-column entry degrees.
        let mut total = 0;
        for j in 0..self.mat.cols() {
            total += (0..self.mat.rows())
                .map(|i| self.mat[(i, j)].degree())
                .max()
                .unwrap();
        }
        BiHomPoly::homogenize(&d, total, VarPair::TU)
    }
}

/// Sylvester matrix of the moving forms: n x n, rows indexed by the
/// monomials s^(n-1) ... v^(n-1) top to bottom, columns n - mu shifted
/// copies of p_phi (lowest shift first) then mu shifted copies of q_phi.
pub fn build_sylvester(m: &MovingForms) -> PolyMatrix {
    let zero = MovingForm::tu_zero(m.n);
    let mat = mat::sylvester_matrix(&m.p_phi.coeffs, m.mu, &m.q_phi.coeffs, m.n - m.mu, &zero);
    PolyMatrix {
        mat,
        kind: MatrixKind::Sylvester,
    }
}

fn spoly_mul(a: &[BiHomPoly], b: &[BiHomPoly], tu_deg: usize) -> Vec<BiHomPoly> {
    let mut out =
        vec![BiHomPoly::homogenize(&UniPoly::zero(), tu_deg, VarPair::TU); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                out[i + j] = out[i + j].add(&ai.mul(bj));
            }
        }
    }
    out
}

/// Matrix of the map psi_j for the dehomogenized pair f = q_phi(s, 1),
/// g = p_phi(s, 1) with declared s-degrees N = n - mu >= M = mu. Size
/// (N + M - j) x (N + M - j); j = 0 is Sylvester-equivalent, j = M is the
/// hybrid Bezout matrix. Columns: the j correction polynomials
/// p_(M-j), ..., p_(M-1) in ascending k, then M - j shifts of f, then
/// N - j shifts of g; row r is the coefficient of s^r.
pub fn build_hybrid(m: &MovingForms, j: usize) -> Result<PolyMatrix> {
    let big_n = m.n - m.mu;
    let big_m = m.mu;
    if j > big_m {
        return Err(Error::HybridIndexOutOfRange { j, max: big_m });
    }
    let f = &m.q_phi.coeffs;
    let g = &m.p_phi.coeffs;
    let size = big_n + big_m - j;
    let zero_n = MovingForm::tu_zero(m.n);
    let zero_2n = MovingForm::tu_zero(2 * m.n);
    // p_k = g_k f - f_k g with f_k, g_k the leading truncations.
    let mut corrections: Vec<Vec<BiHomPoly>> = Vec::new();
    for k in big_m - j..big_m {
        let f_k: Vec<BiHomPoly> = f[big_m - k..=big_n].to_vec();
        let g_k: Vec<BiHomPoly> = g[big_m - k..=big_m].to_vec();
        let lhs = spoly_mul(&g_k, f, 2 * m.n);
        let rhs = spoly_mul(&f_k, g, 2 * m.n);
        let len = lhs.len().max(rhs.len());
        let mut p_k = vec![zero_2n.clone(); len];
        for (i, v) in lhs.into_iter().enumerate() {
            p_k[i] = p_k[i].add(&v);
        }
        for (i, v) in rhs.into_iter().enumerate() {
            p_k[i] = p_k[i].sub(&v);
        }
        for extra in p_k.iter().skip(size) {
            assert!(
                extra.is_zero(),
                "correction polynomial exceeds the target space"
            );
        }
        p_k.truncate(size);
        p_k.resize(size, zero_2n.clone());
        corrections.push(p_k);
    }
    let mat = Mat::from_fn(size, size, |row, col| {
        if col < j {
            corrections[col][row].clone()
        } else if col < big_m {
            let shift = col - j;
            if row >= shift && row - shift <= big_n {
                f[row - shift].clone()
            } else {
                zero_n.clone()
            }
        } else {
            let shift = col - big_m;
            if row >= shift && row - shift <= big_m {
                g[row - shift].clone()
            } else {
                zero_n.clone()
            }
        }
    });
    Ok(PolyMatrix {
        mat,
        kind: MatrixKind::Hybrid(j),
    })
}

/// The symmetric difference forms F and G and their exact quotients by the
/// diagonal su - tv.
#[derive(Clone, Debug)]
pub struct DiagonalQuotients {
    pub f: MovingForm,
    pub g: MovingForm,
    pub p: MovingForm,
    pub q: MovingForm,
}

/// x(s,v) z(t,u) - x(t,u) z(s,v) as a moving form of bidegree (n, n).
pub fn difference_form(x: &BiHomPoly, z: &BiHomPoly) -> MovingForm {
    let n = x.degree();
    assert_eq!(z.degree(), n);
    let xt = x.retag(VarPair::TU);
    let zt = z.retag(VarPair::TU);
    let coeffs = (0..=n)
        .map(|i| {
            let acc = zt.scale(&x.coeff(i)).sub(&xt.scale(&z.coeff(i)));
            if acc.is_zero() {
                MovingForm::tu_zero(n)
            } else {
                acc
            }
        })
        .collect();
    MovingForm::new(n, n, coeffs)
}

/// F = a(s,v) c(t,u) - a(t,u) c(s,v), G likewise for b; both vanish on the
/// diagonal, so the quotients are exact.
pub fn diagonal_quotients(phi: &Parameterization) -> Result<DiagonalQuotients> {
    let f = difference_form(phi.a(), phi.c());
    let g = difference_form(phi.b(), phi.c());
    let p = f.divide_diagonal()?;
    let q = g.divide_diagonal()?;
    Ok(DiagonalQuotients { f, g, p, q })
}

/// Bezout matrix of F and G in (s, v): n x n with entries of degree 2n,
/// identically singular because su - tv divides both forms.
pub fn build_bezout_fg(phi: &Parameterization) -> Result<PolyMatrix> {
    let f = difference_form(phi.a(), phi.c());
    let g = difference_form(phi.b(), phi.c());
    let zero = MovingForm::tu_zero(2 * phi.degree());
    let mat = mat::cayley_bezout(&f.coeffs, &g.coeffs, &zero);
    Ok(PolyMatrix {
        mat,
        kind: MatrixKind::BezoutFG,
    })
}

/// The symbolic Bezout matrix B(x1, x2, x3) of the pencil forms
/// a x3 - c x1 and b x3 - c x2, together with its factorization
/// B = x3 * N * S through the syzygy coefficient matrix.
#[derive(Clone, Debug)]
pub struct SymbolicBezout {
    pub bezout: Mat<TriPoly>,
    /// B with the common x3 divided out.
    pub reduced: Mat<TriPoly>,
    /// The invertible rational factor in B = x3 * N * S.
    pub n_matrix: Mat<Rat>,
    /// S in row convention: row k is the coefficient vector of the k-th
    /// shifted basis syzygy against ascending s-powers.
    pub sylvester_rows: Mat<TriPoly>,
}

/// Symbolic Sylvester matrix in the same column layout as
/// [`build_sylvester`], with x-linear entries.
pub fn symbolic_sylvester(basis: &MuBasis) -> Mat<TriPoly> {
    let (pc, qc) = basis.symbolic_coeff_lists();
    mat::sylvester_matrix(&pc, basis.mu, &qc, basis.n - basis.mu, &TriPoly::zero())
}

pub fn build_symbolic_bezout(phi: &Parameterization, basis: &MuBasis) -> Result<SymbolicBezout> {
    let n = phi.degree();
    let fc: Vec<TriPoly> = (0..=n)
        .map(|i| TriPoly::linear(&[-phi.c().coeff(i), Rat::zero(), phi.a().coeff(i)]))
        .collect();
    let hc: Vec<TriPoly> = (0..=n)
        .map(|i| TriPoly::linear(&[Rat::zero(), -phi.c().coeff(i), phi.b().coeff(i)]))
        .collect();
    let bezout = mat::cayley_bezout(&fc, &hc, &TriPoly::zero());
    let mut reduced_entries = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let q = bezout[(i, j)].div_x3().ok_or_else(|| {
                Error::Internal("symbolic Bezout entry not divisible by x3".into())
            })?;
            reduced_entries.push(q);
        }
    }
    let reduced = Mat::from_fn(n, n, |i, j| reduced_entries[i * n + j].clone());
    // Row convention for S: row k is the k-th column of the Sylvester
    // matrix read against ascending s-powers.
    let s_col = symbolic_sylvester(basis);
    let srows = Mat::from_fn(n, n, |k, i| s_col[(n - 1 - i, k)].clone());
    // Solve reduced = N * srows. The coefficient matrix stacks, per column
    // j and x-variable v, the entries srows[k][j].coeff(x_v); it is shared
    // by every row of N.
    let t = Mat::from_fn(3 * n, n, |ji, k| {
        let j = ji / 3;
        let v = ji % 3;
        let mut e = [0u32; 3];
        e[v] = 1;
        srows[(k, j)].coeff(e)
    });
    let mut n_rows = Vec::with_capacity(n);
    for i in 0..n {
        let rhs: Vec<Rat> = (0..3 * n)
            .map(|ji| {
                let j = ji / 3;
                let v = ji % 3;
                let mut e = [0u32; 3];
                e[v] = 1;
                reduced[(i, j)].coeff(e)
            })
            .collect();
        let sol = mat::solve_rat(&t, &rhs)
            .ok_or_else(|| Error::Internal("no constant factorization B = x3 N S".into()))?;
        n_rows.push(sol);
    }
    let n_matrix = Mat::from_rows(n_rows);
    if mat::det_rat(&n_matrix).is_zero() {
        return Err(Error::BadParameterization(
            "constant factor N is singular; gcd(a, b, c) != 1?".into(),
        ));
    }
    // Entrywise verification of B = x3 N S.
    let prod = n_matrix
        .map(|r| TriPoly::term(r.clone(), [0, 0, 0]))
        .matmul(&srows, &TriPoly::zero());
    for i in 0..n {
        for j in 0..n {
            if !reduced[(i, j)].sub(&prod[(i, j)]).is_zero() {
                return Err(Error::Internal("B = x3 N S failed entrywise".into()));
            }
        }
    }
    Ok(SymbolicBezout {
        bezout,
        reduced,
        n_matrix,
        sylvester_rows: srows,
    })
}

/// Resultant of two moving forms with respect to (s, v): a homogeneous
/// (t, u)-form of degree sv(f) * tu(g) + sv(g) * tu(f).
pub fn resultant_sv(f: &MovingForm, g: &MovingForm) -> BiHomPoly {
    let zero = MovingForm::tu_zero(f.tu_deg);
    let m = mat::sylvester_matrix(&f.coeffs, f.sv_deg, &g.coeffs, g.sv_deg, &zero);
    let total = g.sv_deg * f.tu_deg + f.sv_deg * g.tu_deg;
    let d = mat::det_interp(&m.map(|e| e.dehom()));
    if d.is_zero() {
        BiHomPoly::zero(VarPair::TU)
    } else {
        BiHomPoly::homogenize(&d, total, VarPair::TU)
    }
}

/// Resultant of two plain forms in the same pair; a zero input yields 0
/// with the degeneracy flagged.
pub struct FormResultant {
    pub value: Rat,
    pub zero_input: bool,
}

pub fn resultant_forms(f: &BiHomPoly, g: &BiHomPoly) -> FormResultant {
    if f.is_zero() || g.is_zero() {
        return FormResultant {
            value: Rat::zero(),
            zero_input: true,
        };
    }
    let m = mat::sylvester_matrix(f.coeffs(), f.degree(), g.coeffs(), g.degree(), &Rat::zero());
    FormResultant {
        value: mat::det_rat(&m),
        zero_input: false,
    }
}

/// First principal subresultant minor of a moving-form Sylvester matrix:
/// drop the boundary monomial rows s^(n-1) and v^(n-1) and the top shifted
/// copy of each block. The remaining (n-2)-minor equals u^(n-2) times the
/// conductor form Delta.
pub fn sres1_minor(s: &PolyMatrix, mu: usize) -> BiHomPoly {
    assert_eq!(s.kind, MatrixKind::Sylvester);
    let n = s.size();
    assert!(n >= 3);
    let keep_rows: Vec<usize> = (1..n - 1).collect();
    let mut keep_cols: Vec<usize> = (0..n - mu - 1).collect();
    keep_cols.extend(n - mu..n - 1);
    let sub = s.mat.submatrix(&keep_rows, &keep_cols);
    let d = mat::det_interp(&sub.map(|e| e.dehom()));
    if d.is_zero() {
        return BiHomPoly::zero(VarPair::TU);
    }
    let mut total = 0;
    for j in 0..sub.cols() {
        total += (0..sub.rows()).map(|i| sub[(i, j)].degree()).max().unwrap();
    }
    BiHomPoly::homogenize(&d, total, VarPair::TU)
}
