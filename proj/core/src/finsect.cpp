#include "drk/finsect.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <random>

#include "drk/errors.hpp"
#include "parallel.hpp"

namespace drk {

std::vector<Complex> taylor_coefficients(const RationalFunction& f, int n) {
  if (n < 0) throw MathError(ErrorCode::InvalidArgument, "negative coefficient count");
  const Poly& p = f.num();
  const Poly& q = f.den();
  if (q[0] == Complex{}) throw MathError(ErrorCode::PoleAtPoint, "rational function has a pole at 0");
  std::vector<Complex> c(static_cast<std::size_t>(n));
  const int dq = q.degree();
  for (int k = 0; k < n; ++k) {
    Complex s = p[k];
    for (int j = 1; j <= std::min(k, dq); ++j) s -= q[j] * c[static_cast<std::size_t>(k - j)];
    c[static_cast<std::size_t>(k)] = s / q[0];
  }
  return c;
}

namespace {

Eigen::MatrixXcd lower_toeplitz(const std::vector<Complex>& t, int n) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k <= j; ++k) m(j, k) = t[static_cast<std::size_t>(j - k)];
  return m;
}

Complex horner(const CoefVector& f, Complex z) {
  Complex acc{};
  for (Eigen::Index k = f.size() - 1; k >= 0; --k) acc = acc * z + f(k);
  return acc;
}

}  // namespace

Eigen::MatrixXcd toeplitz_section(const RationalSymbol& b, int n) {
  if (n < 2) throw MathError(ErrorCode::InvalidArgument, "section order must be at least 2");
  return lower_toeplitz(taylor_coefficients(b.function(), n), n);
}

CoefVector szego_coefficients(DiskPoint w, int n) {
  CoefVector c(n);
  const Complex wc = std::conj(w.value());
  Complex pw = 1.0;
  for (int j = 0; j < n; ++j) {
    c(j) = pw;
    pw *= wc;
  }
  return c;
}

CoefVector kernel_coefficients(const RationalSymbol& b, DiskPoint w, int n) {
  const CoefVector k = szego_coefficients(w, n);
  const auto bh = taylor_coefficients(b.function(), n);
  const Complex bw = std::conj(b(w.value()));
  CoefVector out = k;
  for (int j = 0; j < n; ++j) {
    Complex s{};
    for (int i = 0; i <= j; ++i) s += bh[static_cast<std::size_t>(i)] * k(j - i);
    out(j) -= bw * s;
  }
  return out;
}

CoefVector coefficients_of(const Poly& p, int n) {
  if (p.degree() >= n) throw MathError(ErrorCode::InvalidArgument, "polynomial degree exceeds model order");
  CoefVector c = CoefVector::Zero(n);
  for (int k = 0; k <= p.degree(); ++k) c(k) = p[k];
  return c;
}

DefectModel DefectModel::build(const RationalSymbol& b, int n, double tau_rel) {
  if (n < 2) throw MathError(ErrorCode::InvalidArgument, "section order must be at least 2");
  DefectModel m(b);
  m.n_ = n;
  m.taylor_ = taylor_coefficients(b.function(), n + 1);
  const Eigen::MatrixXcd t = lower_toeplitz(m.taylor_, n);
  m.d_ = Eigen::MatrixXcd::Identity(n, n) - t * t.adjoint();
  m.d_ = 0.5 * (m.d_ + m.d_.adjoint()).eval();

  const Eigen::MatrixXcd t1 = lower_toeplitz(m.taylor_, n + 1);
  const Eigen::MatrixXcd d1 = Eigen::MatrixXcd::Identity(n + 1, n + 1) - t1 * t1.adjoint();
  m.d_ext_ = d1.topRows(n);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m.d_);
  m.evals_ = es.eigenvalues();
  m.evecs_ = es.eigenvectors();
  const double norm = m.evals_.cwiseAbs().maxCoeff();
  m.tau_ = tau_rel * norm;
  m.rank_ = static_cast<int>((m.evals_.array() > m.tau_).count());
  return m;
}

CoefVector DefectModel::apply_pinv(const CoefVector& f) const {
  CoefVector y = evecs_.adjoint() * f;
  for (int i = 0; i < n_; ++i) y(i) = evals_(i) > tau_ ? y(i) / evals_(i) : Complex{};
  return evecs_ * y;
}

double DefectModel::range_residual(const CoefVector& f) const {
  const double nf = f.norm();
  if (nf == 0.0) return 0.0;
  CoefVector y = evecs_.adjoint() * f;
  for (int i = 0; i < n_; ++i)
    if (evals_(i) <= tau_) y(i) = 0.0;
  return (f - evecs_ * y).norm() / nf;
}

HbInner hb_inner(const DefectModel& m, const CoefVector& f, const CoefVector& g) {
  const double res = std::max(m.range_residual(f), m.range_residual(g));
  return {g.dot(m.apply_pinv(f)), res, res > 1e-6};
}

double hb_norm(const DefectModel& m, const CoefVector& f) {
  return std::sqrt(std::max(0.0, hb_inner(m, f, f).value.real()));
}

CoefVector apply_backward_shift(const CoefVector& f) {
  CoefVector out = CoefVector::Zero(f.size());
  if (f.size() > 1) out.head(f.size() - 1) = f.tail(f.size() - 1);
  return out;
}

ShiftResult apply_forward_shift(const CoefVector& f) {
  CoefVector out = CoefVector::Zero(f.size());
  if (f.size() == 0) return {out, false};
  if (f.size() > 1) out.tail(f.size() - 1) = f.head(f.size() - 1);
  return {out, f(f.size() - 1) != Complex{}};
}

CoefVector apply_Q(const CoefVector& f, Complex w) {
  const Eigen::Index n = f.size();
  CoefVector out = CoefVector::Zero(n);
  Complex acc{};
  for (Eigen::Index k = n - 1; k >= 1; --k) {
    acc = acc * w + f(k);
    out(k - 1) = acc;
  }
  return out;
}

double check_adjoint_identity(const DefectModel& m, const CoefVector& f) {
  const int n = m.order();
  if (f.norm() == 0.0) return 0.0;
  const CoefVector x = m.apply_pinv(f);
  CoefVector sx = CoefVector::Zero(n + 1);
  sx.tail(n) = x;
  const CoefVector first = m.defect_extended_rows() * sx;

  const auto& bh = m.taylor();
  CoefVector b(n), sstar_b(n);
  for (int j = 0; j < n; ++j) {
    b(j) = bh[static_cast<std::size_t>(j)];
    sstar_b(j) = bh[static_cast<std::size_t>(j + 1)];
  }
  const CoefVector second = apply_forward_shift(f).value - hb_inner(m, f, sstar_b).value * b;
  return hb_norm(m, first - second);
}

double check_reproducing(const DefectModel& m, const CoefVector& f, DiskPoint w) {
  const CoefVector k = kernel_coefficients(m.symbol(), w, m.order());
  return std::abs(horner(f, w.value()) - hb_inner(m, f, k).value);
}

double contraction_ratio(const DefectModel& m, const CoefVector& f) {
  const double nf = hb_norm(m, f);
  if (nf == 0.0) return 0.0;
  return hb_norm(m, apply_backward_shift(f)) / nf;
}

CoefVector random_polynomial(int deg, int n, std::uint64_t seed) {
  if (deg >= n) throw MathError(ErrorCode::InvalidArgument, "polynomial degree exceeds model order");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd;
  CoefVector c = CoefVector::Zero(n);
  for (int k = 0; k <= deg; ++k) c(k) = Complex(nd(rng), nd(rng));
  return c / c.norm();
}

RangeSplitReport check_range_split(const DefectModel& m, DiskPoint w, int trials, std::uint64_t seed) {
  const int n = m.order();
  const Complex wv = w.value();
  const CoefVector k = kernel_coefficients(m.symbol(), w, n);
  RangeSplitReport rep;
  rep.trials = trials;
  const int deg = std::min(8, n - 2);
  std::vector<double> orth(static_cast<std::size_t>(trials)), recon(orth.size());
  std::vector<char> lost(orth.size());
  detail::parallel_for(orth.size(), [&](std::size_t t) {
    const CoefVector g = random_polynomial(deg, n, seed + 2 * t);
    const ShiftResult sg = apply_forward_shift(g);
    orth[t] = std::abs(hb_inner(m, sg.value - wv * g, k).value);

    CoefVector h = random_polynomial(deg - 1, n, seed + 2 * t + 1);
    const ShiftResult sh = apply_forward_shift(h);
    const CoefVector f = sh.value - wv * h;
    const CoefVector q = apply_Q(f, wv);
    const ShiftResult sq = apply_forward_shift(q);
    const CoefVector back = sq.value - wv * q;
    const double nf = hb_norm(m, f);
    recon[t] = nf == 0.0 ? 0.0 : hb_norm(m, back - f) / nf;
    lost[t] = sg.truncation_loss || sh.truncation_loss || sq.truncation_loss;
  });
  for (std::size_t t = 0; t < orth.size(); ++t) {
    rep.orthogonality = std::max(rep.orthogonality, orth[t]);
    rep.reconstruction = std::max(rep.reconstruction, recon[t]);
    rep.truncation_loss = rep.truncation_loss || lost[t];
  }
  return rep;
}

std::vector<ResidualRow> residual_table(const RationalSymbol& b, const std::vector<int>& orders,
                                        DiskPoint w, int trials, std::uint64_t seed) {
  std::vector<ResidualRow> rows;
  for (int n : orders) {
    const DefectModel m = DefectModel::build(b, n);
    ResidualRow row;
    row.n = n;
    row.numerical_rank = m.numerical_rank();
    const int deg = std::min(8, n - 2);
    std::vector<double> rep(static_cast<std::size_t>(trials)), adj(rep.size()), con(rep.size());
    std::vector<char> oor(rep.size());
    detail::parallel_for(rep.size(), [&](std::size_t t) {
      const CoefVector f = random_polynomial(deg, n, seed + 1000 + t);
      rep[t] = check_reproducing(m, f, w);
      adj[t] = check_adjoint_identity(m, f);
      con[t] = contraction_ratio(m, f);
      oor[t] = m.range_residual(f) > 1e-6;
    });
    for (std::size_t t = 0; t < rep.size(); ++t) {
      row.reproducing = std::max(row.reproducing, rep[t]);
      row.adjoint = std::max(row.adjoint, adj[t]);
      row.contraction = std::max(row.contraction, con[t]);
      row.out_of_range = row.out_of_range || oor[t];
    }
    const RangeSplitReport l = check_range_split(m, w, trials, seed);
    row.range_orthogonality = l.orthogonality;
    row.range_reconstruction = l.reconstruction;
    const CoefVector k = kernel_coefficients(b, w, n);
    row.kernel_norm = hb_inner(m, k, k).value.real();
    rows.push_back(row);
  }
  return rows;
}

bool non_increasing(const std::vector<double>& r, double floor) {
  for (std::size_t i = 1; i < r.size(); ++i)
    if (!(r[i] <= r[i - 1] || r[i] <= floor)) return false;
  return true;
}

}  // namespace drk
