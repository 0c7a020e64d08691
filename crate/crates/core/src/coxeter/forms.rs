use super::{CoxeterError, ReflectionKind, ReflectionMatrix};
use crate::polyring::{bilinear, PolyMatrix, Polynomial, Rational};
use crate::quiverdsl::Quiver;

fn half_q() -> Polynomial {
    Polynomial::monomial(Rational::new(1.into(), 2.into()), 1)
}

fn check_len(n: usize, v: &[Polynomial]) -> Result<(), CoxeterError> {
    if v.len() != n {
        return Err(CoxeterError::DimensionMismatch {
            expected: n,
            found: v.len(),
        });
    }
    Ok(())
}

/// Gram matrix `G = E - (q/2)(B + B^T)` of the graph form.
pub fn gram_matrix(q: &Quiver) -> PolyMatrix {
    let hq = half_q();
    PolyMatrix::from_fn(q.n(), |i, j| {
        let off = hq.scale(&Rational::from_integer((q.arrow_count(i, j) + q.arrow_count(j, i)).into()));
        if i == j {
            &Polynomial::one() - &off
        } else {
            -off
        }
    })
}

/// `(x, y)_q = sum_i x_i y_i - (q/2) sum_{a: s -> t} (x_s y_t + x_t y_s)`.
pub fn bilinear_form_graph(q: &Quiver, x: &[Polynomial], y: &[Polynomial]) -> Result<Polynomial, CoxeterError> {
    check_len(q.n(), x)?;
    check_len(q.n(), y)?;
    let mut diag = Polynomial::zero();
    for (a, b) in x.iter().zip(y) {
        diag = &diag + &(a * b);
    }
    let mut cross = Polynomial::zero();
    for arrow in q.arrows() {
        let (s, t) = (arrow.source, arrow.target);
        cross = &cross + &(&(&x[s] * &y[t]) + &(&x[t] * &y[s]));
    }
    Ok(&diag - &(&half_q() * &cross))
}

/// `q(x) = sum_i x_i^2 - q sum_{a: s -> t} x_s x_t`.
pub fn quadratic_form_graph(q: &Quiver, x: &[Polynomial]) -> Result<Polynomial, CoxeterError> {
    check_len(q.n(), x)?;
    let mut sq = Polynomial::zero();
    for a in x {
        sq = &sq + &(a * a);
    }
    let mut cross = Polynomial::zero();
    for arrow in q.arrows() {
        cross = &cross + &(&x[arrow.source] * &x[arrow.target]);
    }
    Ok(&sq - &(&Polynomial::q() * &cross))
}

/// A unimodular q-Cartan matrix together with its inverse and the
/// symmetrized matrix `A_q = C_q^{-1} + C_q^{-T}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanForms {
    cartan: PolyMatrix,
    inverse: PolyMatrix,
    symmetric: PolyMatrix,
}

impl CartanForms {
    pub fn new(cartan: PolyMatrix) -> Result<Self, CoxeterError> {
        let inverse = cartan.inverse_unimodular()?;
        let symmetric = inverse.add(&inverse.transpose());
        Ok(Self {
            cartan,
            inverse,
            symmetric,
        })
    }

    pub fn n(&self) -> usize {
        self.cartan.order()
    }

    pub fn cartan(&self) -> &PolyMatrix {
        &self.cartan
    }

    pub fn inverse(&self) -> &PolyMatrix {
        &self.inverse
    }

    pub fn symmetric(&self) -> &PolyMatrix {
        &self.symmetric
    }

    /// Euler form `<x, y>_q = x^T C_q^{-1} y`.
    pub fn euler(&self, x: &[Polynomial], y: &[Polynomial]) -> Result<Polynomial, CoxeterError> {
        Ok(bilinear(&self.inverse, x, y)?)
    }

    /// `(x, y)_q = (1/2) x^T A_q y`, the symmetrization of the Euler form.
    pub fn symmetric_form(&self, x: &[Polynomial], y: &[Polynomial]) -> Result<Polynomial, CoxeterError> {
        Ok(bilinear(&self.symmetric, x, y)?.scale(&Rational::new(1.into(), 2.into())))
    }

    /// `gamma_i`: identity except row `i`, which is `e_i^T - (A_q)_{i,*}`.
    pub fn gamma(&self, i: usize) -> Result<ReflectionMatrix, CoxeterError> {
        let n = self.n();
        if i >= n {
            return Err(CoxeterError::InvalidVertex(i));
        }
        let mut m = PolyMatrix::identity(n);
        for j in 0..n {
            let a = self.symmetric.get(i, j);
            let v = if j == i { &Polynomial::one() - a } else { -a.clone() };
            m.set(i, j, v);
        }
        Ok(ReflectionMatrix {
            matrix: m,
            vertex: i,
            kind: ReflectionKind::Gamma,
        })
    }

    /// `gamma_{a_1} ... gamma_{a_n}`.
    pub fn coxeter_by_reflections(&self, order: &[usize]) -> Result<PolyMatrix, CoxeterError> {
        let factors = order
            .iter()
            .map(|&v| self.gamma(v).map(|r| r.matrix))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(PolyMatrix::product(self.n(), &factors))
    }

    /// `-C_q^T C_q^{-1}`.
    pub fn coxeter(&self) -> PolyMatrix {
        self.cartan.transpose().mul(&self.inverse).neg()
    }
}

/// `A_q = C_q^{-1} + C_q^{-T}`.
pub fn symmetric_form_matrix(cartan: &PolyMatrix) -> Result<PolyMatrix, CoxeterError> {
    Ok(CartanForms::new(cartan.clone())?.symmetric)
}

/// `<x, y>_q = x^T C_q^{-1} y`.
pub fn euler_form(cartan: &PolyMatrix, x: &[Polynomial], y: &[Polynomial]) -> Result<Polynomial, CoxeterError> {
    CartanForms::new(cartan.clone())?.euler(x, y)
}
