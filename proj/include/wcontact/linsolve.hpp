#pragma once

// Sparse SPD linear algebra behind a thin facade: direct Cholesky (LDLT) by
// default, diagonal-preconditioned CG above a dof threshold. Solver objects
// are immutable after factorization and reusable across right-hand sides.

#include "wcontact/common.hpp"

#include <Eigen/IterativeLinearSolvers>
#include <Eigen/SparseCholesky>

#include <memory>

namespace wcontact {

struct SpdSolverOptions {
  int direct_dof_threshold = 50000;  // CG above this size
  int cg_max_iter_factor = 20;       // cap = factor * n
};

class SpdSolver {
 public:
  using Options = SpdSolverOptions;

  /// Factorizes a symmetric positive-definite sparse matrix. Indefinite or
  /// singular input is rejected with the first offending pivot index.
  static SpdSolver factorize(const SpMat& a, Options opt = Options{}) {
    require_symmetric(a);
    SpdSolver s;
    s.a_ = a;
    s.a_.makeCompressed();
    s.opt_ = opt;
    s.direct_ = a.rows() <= opt.direct_dof_threshold;
    if (s.direct_) {
      s.ldlt_ = std::make_shared<Eigen::SimplicialLDLT<SpMat>>();
      s.ldlt_->compute(s.a_);
      if (s.ldlt_->info() != Eigen::Success)
        throw SolveError("factorization failed (matrix not positive definite)");
      // LDLT does not pivot, so an indefinite matrix can still "succeed";
      // scan D for the first non-positive (or numerically zero) pivot.
      const Vec d = s.ldlt_->vectorD();
      const double dmax = d.size() ? d.cwiseAbs().maxCoeff() : 0.0;
      for (Eigen::Index i = 0; i < d.size(); ++i)
        if (!(d[i] > 1e-14 * dmax))
          throw SolveError(strfmt("matrix not positive definite: pivot %ld = %g",
                                  long(i), d[i]));
    } else {
      s.cg_ = std::make_shared<Cg>();
      s.cg_->setMaxIterations(Eigen::Index(opt.cg_max_iter_factor) * a.rows());
      s.cg_->compute(s.a_);
      if (s.cg_->info() != Eigen::Success)
        throw SolveError("CG preconditioner setup failed");
    }
    return s;
  }

  /// Solves A x = rhs with verified residual ‖Ax-b‖ ≤ tol·‖b‖.
  Vec solve(const Vec& rhs, double tol = 1e-10) const {
    if (rhs.size() != a_.rows())
      throw SolveError(strfmt("rhs size %ld does not match system size %ld",
                              long(rhs.size()), long(a_.rows())));
    if (a_.rows() == 0) return Vec(0);
    const double rhs_norm = rhs.norm();
    Vec x;
    if (direct_) {
      x = ldlt_->solve(rhs);
      double res = (a_ * x - rhs).norm();
      if (res > tol * rhs_norm) {
        x += ldlt_->solve(rhs - a_ * x);  // one step of iterative refinement
        res = (a_ * x - rhs).norm();
        if (res > tol * rhs_norm)
          throw SolveError(strfmt("direct solve residual %g exceeds %g", res, tol * rhs_norm));
      }
    } else {
      Cg& cg = *cg_;
      cg.setTolerance(tol);
      x = cg.solve(rhs);
      if (cg.info() != Eigen::Success)
        throw SolveError(strfmt("CG did not reach tolerance %g within %ld iterations "
                                "(achieved relative residual %g)",
                                tol, long(cg.maxIterations()), cg.error()));
    }
    return x;
  }

  Eigen::Index dim() const { return a_.rows(); }
  const SpMat& matrix() const { return a_; }

 private:
  using Cg = Eigen::ConjugateGradient<SpMat, Eigen::Lower | Eigen::Upper,
                                      Eigen::DiagonalPreconditioner<double>>;
  SpMat a_;
  std::shared_ptr<Eigen::SimplicialLDLT<SpMat>> ldlt_;
  std::shared_ptr<Cg> cg_;  // mutable tolerance, guarded by const usage pattern
  bool direct_ = true;
  Options opt_;
};

}  // namespace wcontact
