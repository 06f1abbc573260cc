#include "hsob/sobolev_gram.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

#include "hsob/hermite.hpp"

namespace hsob {

namespace {

mpq_class canonical(mpq_class q) {
  q.canonicalize();
  return q;
}

// Gamma(a) for rational a > 0: exact for integers and half-integers.
Real gamma_rational(const mpq_class& a, precision_t bits) {
  if (a.get_den() == 1) return Real::from_mpz(factorial(a.get_num().get_si() - 1).get_mpz_t(), bits);
  if (a.get_den() == 2) {
    const long m = (a.get_num().get_si() - 1) / 2;  // a = m + 1/2
    const mpq_class q = canonical(mpq_class(factorial(2 * m), factorial(m) * (mpz_class(1) << (2 * m))));
    return Real::from_mpq(q.get_mpq_t(), bits) * sqrt_pi(bits);
  }
  const Real x = Real::from_mpq(a.get_mpq_t(), bits + 32);
  return Real(gamma(x), bits);
}

std::vector<Real> moments(const WeightSpec& w, int kmax, precision_t bits) {
  std::vector<Real> mu;
  mu.reserve(static_cast<size_t>(kmax) + 1);
  if (w.kind == WeightSpec::Kind::HermiteLine) {
    const Real spi = sqrt_pi(bits);
    mpq_class r(1);  // (k-1)!! / 2^{k/2} for even k
    for (int k = 0; k <= kmax; ++k) {
      if (k % 2 == 1) {
        mu.emplace_back(0L, bits);
        continue;
      }
      if (k > 0) r = canonical(r * mpq_class(k - 1, 2));
      mu.push_back(Real::from_mpq(r.get_mpq_t(), bits) * spi);
    }
    return mu;
  }
  const mpq_class a1 = w.alpha + 1;
  const Real g = gamma_rational(a1, bits);
  mpq_class poch(1);  // (alpha + 1)_k
  for (int k = 0; k <= kmax; ++k) {
    if (k > 0) poch *= a1 + (k - 1);
    mu.push_back(Real::from_mpq(poch.get_mpq_t(), bits) * g);
  }
  return mu;
}

// Mass contribution A_ij i! j! for monomials x^i, x^j.
mpq_class mass_term(const MassMatrix& a, int i, int j) {
  if (i >= a.size() || j >= a.size()) return 0;
  const mpq_class& v = a(i, j);
  if (v == 0) return 0;
  return canonical(v * mpq_class(factorial(i) * factorial(j)));
}

// Exact PSD test by symmetric elimination over Q.
bool exactly_psd(std::vector<std::vector<mpq_class>> m) {
  const size_t s = m.size();
  for (size_t k = 0; k < s; ++k) {
    if (m[k][k] < 0) return false;
    if (m[k][k] == 0) {
      for (size_t j = k + 1; j < s; ++j)
        if (m[k][j] != 0) return false;
      continue;
    }
    for (size_t i = k + 1; i < s; ++i) {
      const mpq_class f = m[i][k] / m[k][k];
      for (size_t j = k; j < s; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return true;
}

std::string q_str(const mpq_class& q) { return q.get_str(); }

}  // namespace

WeightSpec WeightSpec::laguerre(const mpq_class& alpha) {
  if (alpha <= -1) throw std::invalid_argument("Laguerre weight needs alpha > -1");
  return WeightSpec{Kind::LaguerreHalfLine, canonical(alpha)};
}

std::string WeightSpec::key() const {
  return kind == Kind::HermiteLine ? "hermite" : "laguerre(" + q_str(alpha) + ")";
}

MassMatrix::MassMatrix(std::vector<std::vector<mpq_class>> entries) : a_(std::move(entries)) {
  const size_t s = a_.size();
  for (auto& row : a_) {
    if (row.size() != s) throw std::invalid_argument("mass matrix must be square");
    for (auto& v : row) v.canonicalize();
  }
  for (size_t i = 0; i < s; ++i)
    for (size_t j = 0; j < i; ++j)
      if (a_[i][j] != a_[j][i]) throw NotPositiveSemidefinite("mass matrix is not symmetric");
  if (!exactly_psd(a_)) throw NotPositiveSemidefinite("mass matrix is not positive semidefinite: " + key());
}

MassMatrix MassMatrix::diagonal(const std::vector<mpq_class>& masses) {
  const size_t s = masses.size();
  std::vector<std::vector<mpq_class>> e(s, std::vector<mpq_class>(s, mpq_class(0)));
  for (size_t i = 0; i < s; ++i) e[i][i] = masses[i];
  return MassMatrix(std::move(e));
}

mpq_class MassMatrix::at(int i, int j) const {
  if (i < 0 || j < 0 || i >= size() || j >= size()) return 0;
  return (*this)(i, j);
}

bool MassMatrix::is_zero() const {
  for (const auto& row : a_)
    for (const auto& v : row)
      if (v != 0) return false;
  return true;
}

bool MassMatrix::is_diagonal() const {
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j)
      if (i != j && (*this)(i, j) != 0) return false;
  return true;
}

bool MassMatrix::parity_decoupled() const {
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j)
      if ((i + j) % 2 == 1 && (*this)(i, j) != 0) return false;
  return true;
}

std::string MassMatrix::key() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < size(); ++i) {
    if (i > 0) os << ';';
    for (int j = 0; j < size(); ++j) os << (j > 0 ? "," : "") << (*this)(i, j).get_str();
  }
  os << ']';
  return os.str();
}

std::string SobolevProduct::key() const { return weight.key() + "|" + mass.key() + "|" + q_str(scale); }

Real weight_moment(const WeightSpec& w, int k, precision_t bits) {
  if (k < 0) throw std::invalid_argument("moment index must be >= 0");
  return moments(w, k, bits).back();
}

Real gram_entry(const SobolevProduct& p, int i, int j, precision_t bits) {
  Real v = weight_moment(p.weight, i + j, bits);
  const mpq_class m = mass_term(p.mass, i, j);
  if (m != 0) v += Real::from_mpq(m.get_mpq_t(), bits);
  return v * Real::from_mpq(p.scale.get_mpq_t(), bits);
}

Real sobolev_inner(const SobolevProduct& p, const Poly& f, const Poly& g) {
  const precision_t bits = f.precision();
  const Poly fg = f * g;
  const std::vector<Real> mu = moments(p.weight, fg.degree(), bits);
  Real integral(0L, bits);
  for (int k = 0; k <= fg.degree(); ++k) integral.add_product(fg[k], mu[static_cast<size_t>(k)]);
  // F(0)_i = i! f_i
  Real mass(0L, bits);
  for (int i = 0; i < p.mass.size() && i <= f.degree(); ++i) {
    for (int j = 0; j < p.mass.size() && j <= g.degree(); ++j) {
      const mpq_class m = mass_term(p.mass, i, j);
      if (m == 0) continue;
      mass += Real::from_mpq(m.get_mpq_t(), bits) * f[i] * g[j];
    }
  }
  return (integral + mass) * Real::from_mpq(p.scale.get_mpq_t(), bits);
}

GramSystem::GramSystem(SobolevProduct product, int max_degree) : GramSystem(std::move(product), max_degree, Options{}) {}

GramSystem::GramSystem(SobolevProduct product, int max_degree, Options options)
    : product_(std::move(product)), max_degree_(max_degree), options_(options) {
  if (max_degree < 0) throw std::invalid_argument("degree must be >= 0");
  if (product_.scale <= 0) throw std::invalid_argument("inner product scale must be positive");
  target_ = options_.target_bits > 0 ? options_.target_bits : working_precision();
  split_ = product_.weight.kind == WeightSpec::Kind::HermiteLine && product_.mass.parity_decoupled();
  precision_t bits = std::max<precision_t>(2 * target_, target_ + 64);
  for (;;) {
    if (factorize(bits)) return;
    if (2 * bits > options_.ceiling_bits) break;
    bits *= 2;
  }
  // Report the worst pivot at the last precision tried.
  std::ostringstream msg;
  msg << "Gram factorization of " << product_.key() << " up to degree " << max_degree_ << " needs more than "
      << bits << " bits";
  for (const Block& b : blocks_) {
    for (size_t k = 0; k < b.pivots.size(); ++k) {
      if (b.pivots[k].sign() <= 0) {
        msg << "; pivot for degree " << b.degrees[k] << " is not positive";
        throw PrecisionInsufficient(msg.str());
      }
    }
  }
  msg << "; accuracy loss " << loss_ << " bits";
  throw PrecisionInsufficient(msg.str());
}

bool GramSystem::factorize(precision_t bits) {
  internal_ = bits;
  loss_ = 0;
  blocks_.clear();
  const std::vector<Real> mu = moments(product_.weight, 2 * max_degree_, bits);
  const Real scale = Real::from_mpq(product_.scale.get_mpq_t(), bits);
  auto entry = [&](int i, int j) {
    Real v = mu[static_cast<size_t>(i + j)];
    const mpq_class m = mass_term(product_.mass, i, j);
    if (m != 0) v += Real::from_mpq(m.get_mpq_t(), bits);
    return v * scale;
  };

  const int nblocks = split_ ? 2 : 1;
  for (int b = 0; b < nblocks; ++b) {
    Block blk;
    for (int d = split_ ? b : 0; d <= max_degree_; d += nblocks) blk.degrees.push_back(d);
    const size_t m = blk.degrees.size();
    blk.lower.assign(m, {});
    blk.pivots.reserve(m);
    for (size_t j = 0; j < m; ++j) {
      blk.lower[j].resize(j, Real(0L, bits));
      // Row j of L (entries k < j) and the pivot D_j; scaled[t] = L_jt D_t.
      std::vector<Real> scaled;
      scaled.reserve(j);
      Real djj = entry(blk.degrees[j], blk.degrees[j]);
      const Real gjj = djj;
      for (size_t k = 0; k < j; ++k) {
        Real v = entry(blk.degrees[j], blk.degrees[k]);
        const std::vector<Real>& lk = blk.lower[k];
        for (size_t t = 0; t < k; ++t) v.sub_product(scaled[t], lk[t]);
        scaled.push_back(v);
        v /= blk.pivots[k];
        djj.sub_product(v, scaled.back());
        blk.lower[j][k] = std::move(v);
      }
      blk.pivots.push_back(djj);
      if (djj.sign() <= 0) {
        blocks_.push_back(std::move(blk));
        return false;
      }
      loss_ = std::max(loss_, log2_abs(gjj) - log2_abs(djj));
    }
    blocks_.push_back(std::move(blk));
  }
  return loss_ + static_cast<double>(options_.guard_bits) <= static_cast<double>(bits - target_);
}

std::pair<const GramSystem::Block*, int> GramSystem::locate(int n) const {
  if (n < 0 || n > max_degree_) throw std::out_of_range("degree outside the factorized range");
  const Block& b = blocks_[split_ ? static_cast<size_t>(n % 2) : 0];
  return {&b, split_ ? n / 2 : n};
}

Poly GramSystem::monic_internal(int n) const {
  const auto [blk, t] = locate(n);
  // Row t of L^{-1}: w_t = 1, w_k = -sum_{j=k+1..t} L_jk w_j.
  std::vector<Real> w(static_cast<size_t>(t) + 1, Real(0L, internal_));
  w[static_cast<size_t>(t)] = Real(1L, internal_);
  for (int k = t - 1; k >= 0; --k) {
    Real s(0L, internal_);
    for (int j = k + 1; j <= t; ++j) s.add_product(blk->lower[static_cast<size_t>(j)][static_cast<size_t>(k)], w[static_cast<size_t>(j)]);
    w[static_cast<size_t>(k)] = -s;
  }
  std::vector<Real> c(static_cast<size_t>(n) + 1, Real(0L, internal_));
  for (int k = 0; k <= t; ++k) c[static_cast<size_t>(blk->degrees[static_cast<size_t>(k)])] = w[static_cast<size_t>(k)];
  return Poly(std::move(c));
}

Poly GramSystem::monic(int n) const { return monic_internal(n).rounded(target_); }

Real GramSystem::norm_sq(int n) const {
  const auto [blk, t] = locate(n);
  return Real(blk->pivots[static_cast<size_t>(t)], target_);
}

std::shared_ptr<const GramSystem> gram_system(const SobolevProduct& p, int n) {
  static std::mutex mu;
  static std::map<std::pair<std::string, precision_t>, std::shared_ptr<const GramSystem>> cache;
  const auto key = std::make_pair(p.key(), working_precision());
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end() && it->second->max_degree() >= n) return it->second;
  }
  // Grow in steps so that ascending requests do not refactorize each time.
  const int degree = std::max(n, 16) + 15 - (std::max(n, 16) + 15) % 16;
  auto sys = std::make_shared<const GramSystem>(p, degree);
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[key];
  if (!slot || slot->max_degree() < sys->max_degree()) slot = sys;
  return slot;
}

Poly gram_orthogonalize(const SobolevProduct& p, int n) { return gram_system(p, n)->monic(n); }

std::pair<mpq_class, mpq_class> inner_exact_hermite(const std::vector<mpq_class>& f, const std::vector<mpq_class>& g,
                                                    const MassMatrix& a) {
  // Moments mu_{2m} = sqrt(pi) (2m-1)!! / 2^m.
  const size_t deg = f.size() + g.size();
  std::vector<mpq_class> mu_s(deg + 1, mpq_class(0));
  mpq_class r(1);
  for (size_t k = 0; k <= deg; k += 2) {
    if (k > 0) r = canonical(r * mpq_class(static_cast<long>(k) - 1, 2));
    mu_s[k] = r;
  }
  mpq_class s(0);
  for (size_t i = 0; i < f.size(); ++i)
    for (size_t j = 0; j < g.size(); ++j)
      if ((i + j) % 2 == 0) s += f[i] * g[j] * mu_s[i + j];
  mpq_class rational(0);
  for (int i = 0; i < a.size() && static_cast<size_t>(i) < f.size(); ++i)
    for (int j = 0; j < a.size() && static_cast<size_t>(j) < g.size(); ++j)
      rational += mass_term(a, i, j) * f[static_cast<size_t>(i)] * g[static_cast<size_t>(j)];
  return {canonical(rational), canonical(s)};
}

}  // namespace hsob
