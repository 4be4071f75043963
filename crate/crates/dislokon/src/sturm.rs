//! Symmetric tridiagonal eigensolver: Sturm-sequence bisection for selected
//! eigenvalues and inverse iteration for the matching eigenvectors.
//!
//! The radial discretizations only ever need the lowest handful of states of
//! a (possibly very large) tridiagonal matrix, so full diagonalization would
//! be wasted work.  Bisection on the Sturm count is deterministic, has no
//! external dependencies, and computes exactly the states asked for.

/// A real symmetric tridiagonal matrix, stored as its diagonal and
/// subdiagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct SymTridiagonal {
    /// Main diagonal, length `n`.
    pub diag: Vec<f64>,
    /// Off-diagonal (sub- = super-), length `n - 1`.
    pub offdiag: Vec<f64>,
}

impl SymTridiagonal {
    pub fn new(diag: Vec<f64>, offdiag: Vec<f64>) -> Self {
        assert!(!diag.is_empty(), "matrix must have at least one row");
        assert_eq!(
            offdiag.len(),
            diag.len() - 1,
            "offdiag length must be n - 1"
        );
        Self { diag, offdiag }
    }

    pub fn n(&self) -> usize {
        self.diag.len()
    }

    /// Gershgorin interval `[lo, hi]` guaranteed to contain every eigenvalue.
    pub fn gershgorin(&self) -> (f64, f64) {
        let n = self.n();
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..n {
            let mut radius = 0.0;
            if i > 0 {
                radius += self.offdiag[i - 1].abs();
            }
            if i + 1 < n {
                radius += self.offdiag[i].abs();
            }
            lo = lo.min(self.diag[i] - radius);
            hi = hi.max(self.diag[i] + radius);
        }
        (lo, hi)
    }

    /// Smallest admissible pivot magnitude for the Sturm recurrence; pivots
    /// closer to zero than this are snapped to `-pivmin` so the count stays
    /// well defined (the same guard LAPACK's bisection uses).
    fn pivmin(&self) -> f64 {
        let max_off_sq = self
            .offdiag
            .iter()
            .fold(0.0_f64, |m, &e| m.max(e * e));
        f64::MIN_POSITIVE * max_off_sq.max(1.0)
    }

    /// Smallest pivot magnitude admitted in the inverse-iteration
    /// factorization.  Unlike [`pivmin`](Self::pivmin) this must be
    /// eps-relative, not underflow-relative: when the shift equals an
    /// eigenvalue to working precision the last pivot cancels to (near)
    /// zero, and dividing by a denormal-scale replacement overflows the
    /// solve to infinity.  Snapping to `eps * ||A||` instead caps the
    /// amplification per solve at ~1/eps, exactly the healthy growth
    /// inverse iteration relies on.
    fn lu_floor(&self) -> f64 {
        let (lo, hi) = self.gershgorin();
        f64::EPSILON * lo.abs().max(hi.abs()).max(f64::MIN_POSITIVE)
    }

    /// Number of eigenvalues strictly less than `x`, from the signs of the
    /// `L·D·Lᵀ` pivots of `A - x·I`.
    pub fn count_below(&self, x: f64) -> usize {
        let pivmin = self.pivmin();
        let mut count = 0usize;
        // A pivot that underflows to (near) zero is snapped to -pivmin
        // *before* its sign is counted: an exactly singular leading block
        // means x is an eigenvalue of it, and the count must treat that
        // pivot as negative or the count becomes non-monotone in x.
        let mut q = self.diag[0] - x;
        if q.abs() < pivmin {
            q = -pivmin;
        }
        if q < 0.0 {
            count += 1;
        }
        for i in 1..self.n() {
            let e = self.offdiag[i - 1];
            q = self.diag[i] - x - e * e / q;
            if q.abs() < pivmin {
                q = -pivmin;
            }
            if q < 0.0 {
                count += 1;
            }
        }
        count
    }

    /// The `k`-th smallest eigenvalue (`k = 0` is the lowest), by bisection
    /// on the Sturm count down to a spacing of a few ulps of the bounds.
    pub fn eigenvalue(&self, k: usize) -> f64 {
        assert!(k < self.n(), "eigenvalue index {k} out of range (n = {})", self.n());
        let (mut lo, mut hi) = self.gershgorin();
        let tol = 2.0 * f64::EPSILON * lo.abs().max(hi.abs()) + f64::MIN_POSITIVE;
        let mut iter = 0;
        while hi - lo > tol && iter < 200 {
            let mid = 0.5 * (lo + hi);
            if self.count_below(mid) >= k + 1 {
                hi = mid;
            } else {
                lo = mid;
            }
            iter += 1;
        }
        0.5 * (lo + hi)
    }

    /// The lowest `count` eigenvalues in ascending order.
    pub fn lowest(&self, count: usize) -> Vec<f64> {
        assert!(count >= 1 && count <= self.n());
        (0..count).map(|k| self.eigenvalue(k)).collect()
    }

    /// Eigenvector for an eigenvalue estimate `lambda`, by two rounds of
    /// inverse iteration from an all-ones start, normalized to unit max-abs.
    ///
    /// The shifted matrix is factored once with partial pivoting (the
    /// standard tridiagonal `P·L·U` with a second superdiagonal fill-in);
    /// near-singularity of `A - λI` is the desired situation, not a problem:
    /// the solve blows up along the eigenvector and normalization rescales.
    pub fn eigenvector(&self, lambda: f64) -> Vec<f64> {
        let n = self.n();
        if n == 1 {
            return vec![1.0];
        }
        let lu = PivotedTridiagonalLu::factor(
            &self.offdiag,
            &self.diag.iter().map(|d| d - lambda).collect::<Vec<_>>(),
            &self.offdiag,
            self.lu_floor(),
        );
        let mut v = vec![1.0_f64; n];
        for _ in 0..2 {
            lu.solve_in_place(&mut v);
            let max = v.iter().fold(0.0_f64, |m, x| m.max(x.abs()));
            // An exactly-zero solve result cannot happen with guarded pivots,
            // but dividing by it would poison everything downstream.
            assert!(max > 0.0, "inverse iteration collapsed to the zero vector");
            for x in &mut v {
                *x /= max;
            }
        }
        v
    }
}

/// `P·L·U` factorization of a general tridiagonal matrix with partial
/// pivoting.  Row swaps introduce a second superdiagonal, stored in `du2`.
struct PivotedTridiagonalLu {
    dl: Vec<f64>,
    d: Vec<f64>,
    du: Vec<f64>,
    du2: Vec<f64>,
    swapped: Vec<bool>,
}

impl PivotedTridiagonalLu {
    fn factor(sub: &[f64], diag: &[f64], sup: &[f64], pivot_floor: f64) -> Self {
        let n = diag.len();
        let mut dl = sub.to_vec();
        let mut d = diag.to_vec();
        let mut du = sup.to_vec();
        let mut du2 = vec![0.0_f64; n.saturating_sub(2)];
        let mut swapped = vec![false; n.saturating_sub(1)];
        for i in 0..n - 1 {
            if d[i].abs() >= dl[i].abs() {
                // no interchange; eliminate the subdiagonal entry
                if d[i] != 0.0 {
                    let fact = dl[i] / d[i];
                    dl[i] = fact;
                    d[i + 1] -= fact * du[i];
                } else {
                    // both candidate pivots are zero: decoupled block; nudge
                    d[i] = pivot_floor;
                    dl[i] = 0.0;
                }
            } else {
                // interchange rows i and i+1
                let fact = d[i] / dl[i];
                d[i] = dl[i];
                dl[i] = fact;
                let temp = du[i];
                du[i] = d[i + 1];
                d[i + 1] = temp - fact * d[i + 1];
                if i + 2 < n {
                    du2[i] = du[i + 1];
                    du[i + 1] = -fact * du[i + 1];
                }
                swapped[i] = true;
            }
        }
        // Snap every tiny pivot of U, sign-preserving, so the solve divides
        // by at worst `pivot_floor` — equivalent to factoring a matrix
        // perturbed by at most the floor at those entries, which is the
        // standard treatment of a shift that is an eigenvalue to working
        // precision.
        for di in &mut d {
            if di.abs() < pivot_floor {
                *di = pivot_floor.copysign(*di);
            }
        }
        Self { dl, d, du, du2, swapped }
    }

    fn solve_in_place(&self, b: &mut [f64]) {
        let n = self.d.len();
        // forward sweep applying P and L⁻¹
        for i in 0..n - 1 {
            if self.swapped[i] {
                b.swap(i, i + 1);
            }
            b[i + 1] -= self.dl[i] * b[i];
        }
        // Back substitution through U (diag + two superdiagonals).  Growth
        // through a near-singular pivot is the point of inverse iteration,
        // and only the direction of the solution matters to the caller, so
        // a division that would push past `big` rescales the whole vector
        // first instead of overflowing (the LAPACK dlagts treatment).
        let big = f64::MAX.sqrt();
        for i in (0..n).rev() {
            let mut num = b[i];
            if i + 1 < n {
                num -= self.du[i] * b[i + 1];
            }
            if i + 2 < n {
                num -= self.du2[i] * b[i + 2];
            }
            let d = self.d[i];
            if num.abs() > d.abs() * big {
                let scale = (d.abs() * big) / num.abs();
                for x in b.iter_mut() {
                    *x *= scale;
                }
                num *= scale;
            }
            b[i] = num / d;
        }
    }
}
