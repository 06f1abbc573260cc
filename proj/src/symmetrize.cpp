#include "hsob/symmetrize.hpp"

#include <stdexcept>

#include "hsob/sobolev_gram.hpp"

namespace hsob {

Real pochhammer(const Real& a, int i) {
  if (i < 0) throw std::invalid_argument("pochhammer index must be nonnegative");
  Real p(1L, a.precision());
  for (int k = 0; k < i; ++k) p *= a + k;
  return p;
}

mpz_class pochhammer(long a, int i) {
  if (i < 0) throw std::invalid_argument("pochhammer index must be nonnegative");
  mpz_class p = 1;
  for (int k = 0; k < i; ++k) p *= a + k;
  return p;
}

std::vector<mpq_class> MassMap::even_side() const {
  std::vector<mpq_class> out;
  for (size_t i = 0; i < n.size(); i += 2) out.push_back(n[i]);
  return out;
}

std::vector<mpq_class> MassMap::odd_side() const {
  std::vector<mpq_class> out;
  for (size_t i = 1; i < n.size(); i += 2) out.push_back(n[i]);
  return out;
}

MassMap mass_map(int r, const std::vector<mpq_class>& masses) {
  if (r < 1) throw std::invalid_argument("r must be at least 1");
  if (masses.size() != static_cast<size_t>(2 * r))
    throw std::invalid_argument("expected " + std::to_string(2 * r) + " masses, got " + std::to_string(masses.size()));
  MassMap mm;
  mm.r = r;
  mm.m = masses;
  for (int i = 0; i < r; ++i) {
    if (masses[2 * i] < 0 || masses[2 * i + 1] < 0) throw std::invalid_argument("masses must be nonnegative");
    const mpz_class pe = pochhammer(i + 1, i);
    const mpz_class po = pochhammer(i + 1, i + 1);
    mm.n.push_back(mpq_class(pe * pe) * masses[2 * i]);
    mm.n.push_back(mpq_class(po * po) * masses[2 * i + 1]);
  }
  for (auto& v : mm.n) v.canonicalize();
  return mm;
}

Poly laguerre_sobolev_poly(const mpq_class& alpha, const std::vector<mpq_class>& masses, int n) {
  return gram_orthogonalize(SobolevProduct{WeightSpec::laguerre(alpha), MassMatrix::diagonal(masses)}, n);
}

SymmetrizationResidual symmetrization_residual(int n, const std::vector<mpq_class>& masses) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  if (masses.empty() || masses.size() % 2 != 0) throw std::invalid_argument("masses must come in pairs");
  const MassMap mm = mass_map(static_cast<int>(masses.size()) / 2, masses);
  const SobolevProduct line{WeightSpec::hermite(), MassMatrix::diagonal(masses)};

  const Poly s_even = gram_orthogonalize(line, 2 * n);
  const Poly s_odd = gram_orthogonalize(line, 2 * n + 1);
  const Poly l_even = laguerre_sobolev_poly(mpq_class(-1, 2), mm.even_side(), n).composed_with_square();
  const Poly l_odd = laguerre_sobolev_poly(mpq_class(1, 2), mm.odd_side(), n).composed_with_square().shifted_up(1);
  return {max_coeff_difference(s_even, l_even), max_coeff_difference(s_odd, l_odd)};
}

}  // namespace hsob
