#pragma once

// Finite-section model of H(b) on polynomials of degree < N.
//
// The defect D = I - T T^* is the exact compression of I - T_b T_b^* to that
// subspace (T_b is lower triangular). The H(b) inner product is realized as
// <f, g>_b = <D^+ f, g>, which is exact for elements of the form
// (I - T_b T_b^*) x with x of degree < N, represented by their first N Taylor
// coefficients D x. Polynomials outside that class converge like O(1/N).

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "drk/ratfun.hpp"

namespace drk {

using CoefVector = Eigen::VectorXcd;

/// First n Taylor coefficients of a rational function analytic at 0.
std::vector<Complex> taylor_coefficients(const RationalFunction& f, int n);

/// n x n lower-triangular Toeplitz section of b: entry (j, k) = b_hat(j - k).
Eigen::MatrixXcd toeplitz_section(const RationalSymbol& b, int n);

/// Coefficients (conj(w)^j) of the Szego kernel, truncated to n.
CoefVector szego_coefficients(DiskPoint w, int n);
/// Coefficients of k^b_w, truncated to n.
CoefVector kernel_coefficients(const RationalSymbol& b, DiskPoint w, int n);
/// Zero-padded coefficient vector of a polynomial (throws if deg p >= n).
CoefVector coefficients_of(const Poly& p, int n);

class DefectModel {
 public:
  /// tau_rel scales the pseudo-inverse cutoff: eigenvalues <= tau_rel * ||D||
  /// are treated as zero.
  static DefectModel build(const RationalSymbol& b, int n, double tau_rel = 1e-10);

  int order() const noexcept { return n_; }
  const RationalSymbol& symbol() const noexcept { return b_; }
  const Eigen::MatrixXcd& defect() const noexcept { return d_; }
  const Eigen::VectorXd& spectrum() const noexcept { return evals_; }  // ascending
  double threshold() const noexcept { return tau_; }
  int numerical_rank() const noexcept { return rank_; }
  /// b_hat(0) .. b_hat(N).
  const std::vector<Complex>& taylor() const noexcept { return taylor_; }

  CoefVector apply_pinv(const CoefVector& f) const;
  /// ||f - P f|| / ||f|| for P the projection onto the numerical range.
  double range_residual(const CoefVector& f) const;
  /// Rows 0..N-1 of I - T T^* at order N + 1, so that shifting a model
  /// preimage x by one place loses nothing.
  const Eigen::MatrixXcd& defect_extended_rows() const noexcept { return d_ext_; }

 private:
  DefectModel(RationalSymbol b) : b_(std::move(b)) {}
  RationalSymbol b_;
  int n_ = 0;
  std::vector<Complex> taylor_;
  Eigen::MatrixXcd d_;
  Eigen::MatrixXcd d_ext_;
  Eigen::VectorXd evals_;
  Eigen::MatrixXcd evecs_;
  double tau_ = 0.0;
  int rank_ = 0;
};

struct HbInner {
  Complex value;
  double range_residual;  // max over f and g
  bool out_of_range;      // range_residual > 1e-6
};

/// <D^+ f, g> (linear in f, conjugate-linear in g).
HbInner hb_inner(const DefectModel& m, const CoefVector& f, const CoefVector& g);
double hb_norm(const DefectModel& m, const CoefVector& f);

struct ShiftResult {
  CoefVector value;
  bool truncation_loss;  // a nonzero top coefficient was dropped
};

CoefVector apply_backward_shift(const CoefVector& f);
ShiftResult apply_forward_shift(const CoefVector& f);

/// (f(z) - f(w)) / (z - w) by synthetic division; same length as f.
CoefVector apply_Q(const CoefVector& f, Complex w);

/// H(b)-norm of the gap between two computations of X_b^* f:
/// the model adjoint of the backward shift, D_ext S D^+ f, against
/// z f - <f, S^* b>_b b.
double check_adjoint_identity(const DefectModel& m, const CoefVector& f);

/// |f(w) - <f, k^b_w>_b| with k^b_w truncated to the model order.
double check_reproducing(const DefectModel& m, const CoefVector& f, DiskPoint w);

/// ||X f||_b / ||f||_b with X the backward shift.
double contraction_ratio(const DefectModel& m, const CoefVector& f);

struct RangeSplitReport {
  double orthogonality = 0.0;   // max |<(S - w) g, k^b_w>_b| over unit-norm g
  double reconstruction = 0.0;  // max ||(S - w) Q_w f - f||_b / ||f||_b, f(w) = 0
  int trials = 0;
  bool truncation_loss = false;
};

/// Random polynomial trials (degree <= 8, seeded) of the two identities
/// behind the range description ran(S_b - w) = (C k^b_w)^perp.
RangeSplitReport check_range_split(const DefectModel& m, DiskPoint w, int trials, std::uint64_t seed = 7);

/// Random complex polynomial coefficients of degree <= deg, padded to n,
/// scaled to unit l2 norm.
CoefVector random_polynomial(int deg, int n, std::uint64_t seed);

struct ResidualRow {
  int n = 0;
  int numerical_rank = 0;
  double reproducing = 0.0;
  double adjoint = 0.0;
  double range_orthogonality = 0.0;
  double range_reconstruction = 0.0;
  double contraction = 0.0;  // max ratio
  double kernel_norm = 0.0;  // hb_norm(k^b_w)^2
  bool out_of_range = false;
};

/// One row per order, each with `trials` random polynomials of degree <= 8.
std::vector<ResidualRow> residual_table(const RationalSymbol& b, const std::vector<int>& orders,
                                        DiskPoint w, int trials = 10, std::uint64_t seed = 7);

/// True when every step r[i+1] <= r[i] or r[i+1] sits below floor.
bool non_increasing(const std::vector<double>& r, double floor = 1e-10);

}  // namespace drk
