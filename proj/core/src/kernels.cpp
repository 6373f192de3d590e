#include "drk/kernels.hpp"

#include <cmath>

namespace drk {

Complex szego(DiskPoint w, DiskPoint z) { return 1.0 / (1.0 - std::conj(w.value()) * z.value()); }

Complex kb_eval(const RationalSymbol& b, DiskPoint w, DiskPoint z) {
  return (1.0 - std::conj(b(w.value())) * b(z.value())) * szego(w, z);
}

double norm_kb_sq(const RationalSymbol& b, DiskPoint w) {
  return (1.0 - std::norm(b(w.value()))) / (1.0 - std::norm(w.value()));
}

double norm_cauchy_sq(const PythagoreanPair& pair, DiskPoint w) {
  return (1.0 + std::norm(pair.phi(w.value()))) / (1.0 - std::norm(w.value()));
}

CrossSection cross_section(const PythagoreanPair& pair, DiskPoint w) {
  const DiskPoint wc = w.conj();
  return {SectionOperator::Xb, w,
          [wc](Complex z) { return 1.0 / (1.0 - std::conj(wc.value()) * z); },
          norm_cauchy_sq(pair, wc), std::abs(w.value()) > 0.99};
}

CrossSection cross_section(const RationalSymbol& b, DiskPoint w) {
  const DiskPoint wc = w.conj();
  const Complex bw = b(wc.value());
  return {SectionOperator::SbStar, w,
          [b, wc, bw](Complex z) { return (1.0 - std::conj(bw) * b(z)) / (1.0 - std::conj(wc.value()) * z); },
          norm_kb_sq(b, wc), std::abs(w.value()) > 0.99};
}

CrossSection cross_section(SectionOperator op, const RationalSymbol& b, DiskPoint w, const Tolerances& tol) {
  if (op == SectionOperator::Xb) return cross_section(mate(b, tol), w);
  return cross_section(b, w);
}

}  // namespace drk
