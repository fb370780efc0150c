#include "qblocks/uqsl2.hpp"

#include <bit>
#include <exception>
#include <stdexcept>

#include "qblocks/linalg.hpp"

namespace qblocks {

namespace {

std::uint64_t bit(int b) { return std::uint64_t{1} << b; }

int popcount(std::uint64_t x) { return std::popcount(x); }

// #0 - #1 among `count` factors held in the low bits of `bits`.
int weight(std::uint64_t bits, int count) {
  const int ones = popcount(bits);
  return count - 2 * ones;
}

const RatQ& inv_q_minus_qinv() {
  static const RatQ value =
      RatQ(LaurentPoly::from_terms({{1, 1}, {-1, -1}})).inverse();
  return value;
}

}  // namespace

// ------------------------------------------------------------------ TensorVec

TensorVec::TensorVec(int n) : n_(n) {
  if (n < 0 || n > kMaxTensorFactors) throw std::invalid_argument("tensor power out of range");
}

TensorVec TensorVec::basis(int n, std::uint64_t key, const RatQ& c) {
  TensorVec v(n);
  if (n < 64 && (key >> n) != 0) throw std::invalid_argument("basis key has bits beyond the tensor power");
  v.add_term(key, c);
  return v;
}

std::uint64_t TensorVec::key_from_bits(const std::string& bits) {
  if (bits.size() > static_cast<std::size_t>(kMaxTensorFactors)) throw std::invalid_argument("bitstring too long");
  std::uint64_t key = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw std::invalid_argument("bitstring must contain only 0 and 1");
    key = (key << 1) | static_cast<std::uint64_t>(c - '0');
  }
  return key;
}

std::string TensorVec::bits_from_key(std::uint64_t key, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int p = 1; p <= n; ++p) {
    if (key & bit(p - 1)) s[static_cast<std::size_t>(n - p)] = '1';
  }
  return s;
}

RatQ TensorVec::coefficient(std::uint64_t key) const {
  auto it = coeffs_.find(key);
  return it == coeffs_.end() ? RatQ() : it->second;
}

void TensorVec::add_term(std::uint64_t key, const RatQ& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(key, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) coeffs_.erase(it);
}

TensorVec TensorVec::operator-() const {
  TensorVec out(n_);
  for (const auto& [k, c] : coeffs_) out.coeffs_.emplace(k, -c);
  return out;
}

TensorVec& TensorVec::operator+=(const TensorVec& rhs) {
  if (rhs.n_ != n_) throw std::invalid_argument("adding tensors of different powers");
  for (const auto& [k, c] : rhs.coeffs_) add_term(k, c);
  return *this;
}

TensorVec& TensorVec::operator-=(const TensorVec& rhs) { return *this += -rhs; }

TensorVec& TensorVec::operator*=(const RatQ& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [k, x] : coeffs_) x *= c;
  return *this;
}

TensorVec tensor(const TensorVec& left, const TensorVec& right) {
  TensorVec out(left.n() + right.n());
  for (const auto& [kl, cl] : left.coeffs()) {
    for (const auto& [kr, cr] : right.coeffs()) out.add_term((kl << right.n()) | kr, cl * cr);
  }
  return out;
}

// ------------------------------------------------------------------- actions

TensorVec act(Generator g, const TensorVec& v) {
  const int n = v.n();
  TensorVec out(n);
  for (const auto& [key, c] : v.coeffs()) {
    switch (g) {
      case Generator::K:
        out.add_term(key, c.mul_q_power(weight(key, n)));
        break;
      case Generator::Kinv:
        out.add_term(key, c.mul_q_power(-weight(key, n)));
        break;
      case Generator::E:
        for (int b = 0; b < n; ++b) {
          if (!(key & bit(b))) continue;
          const int k = weight(key & (bit(b) - 1), b);
          out.add_term(key & ~bit(b), c.mul_q_power(k));
        }
        break;
      case Generator::F:
        for (int b = 0; b < n; ++b) {
          if (key & bit(b)) continue;
          const int k = weight(key >> (b + 1), n - b - 1);
          out.add_term(key | bit(b), c.mul_q_power(-k));
        }
        break;
    }
  }
  return out;
}

bool is_highest_weight(const TensorVec& v, int s) {
  if (!act(Generator::E, v).is_zero()) return false;
  return act(Generator::K, v) == v * RatQ::q_power(s);
}

TensorVec pi_hat(const TensorVec& v, int j) {
  const int n = v.n();
  if (j < 1 || j > n - 1) throw std::out_of_range("pi_hat: j must lie in [1, n-1]");
  static const RatQ c01 = (RatQ::q_power(-1) - RatQ::q_power(1)) / qint(2);
  static const RatQ c10 = (RatQ(1) - RatQ::q_power(-2)) / qint(2);
  TensorVec out(n - 2);
  for (const auto& [key, c] : v.coeffs()) {
    const bool a = key & bit(j);      // factor j + 1
    const bool b = key & bit(j - 1);  // factor j
    if (a == b) continue;
    const std::uint64_t rest = ((key >> (j + 1)) << (j - 1)) | (key & (bit(j - 1) - 1));
    out.add_term(rest, c * (a ? c10 : c01));
  }
  return out;
}

TensorVec singlet() {
  TensorVec s(2);
  s.add_term(0b10, inv_q_minus_qinv());
  s.add_term(0b01, -RatQ::q_power(1) * inv_q_minus_qinv());
  return s;
}

TensorVec triplet_plus() { return TensorVec::basis(2, 0b00); }

TensorVec triplet_zero() {
  TensorVec t(2);
  t.add_term(0b01, RatQ::q_power(-1));
  t.add_term(0b10, RatQ(1));
  return t;
}

TensorVec triplet_minus() { return TensorVec::basis(2, 0b11, qint(2)); }

RatQ singlet_component(const TensorVec& v) {
  if (v.n() != 2) throw std::invalid_argument("singlet_component: expected a vector in M2 (x) M2");
  const TensorVec cols[4] = {singlet(), triplet_plus(), triplet_zero(), triplet_minus()};
  DenseMatrix<RatQ> aug(4, 5);
  for (std::uint64_t key = 0; key < 4; ++key) {
    for (int i = 0; i < 4; ++i) aug(key, i) = cols[i].coefficient(key);
    aug(key, 4) = v.coefficient(key);
  }
  const auto pivots = row_reduce(aug);
  if (pivots.size() != 4 || pivots[3] != 3) throw std::logic_error("singlet/triplet basis is degenerate");
  return aug(0, 4);
}

// -------------------------------------------------------------- block vectors

RatQ c_alpha(const DyckPath& alpha) {
  RatQ c(1);
  for (int i = 1; i < alpha.steps_count(); ++i) {
    const LocalShape s = local_shape(alpha, i);
    if (s == LocalShape::UpWedge) c /= qint(alpha[i] + 1);
    if (s == LocalShape::DownWedge) c *= qint(alpha[i] + 1);
  }
  return c;
}

BlockVector build_u(const DyckPath& alpha) {
  const int steps = alpha.steps_count();
  BlockVector out{alpha, TensorVec(steps), RatQ(1), {}};
  out.prefixes.reserve(static_cast<std::size_t>(steps + 1));
  TensorVec u = TensorVec::basis(0, 0);
  out.prefixes.push_back(u);
  for (int k = 0; k < steps; ++k) {
    TensorVec next(k + 1);
    if (alpha[k + 1] > alpha[k]) {
      for (const auto& [key, c] : u.coeffs()) next.add_term(key, c);
    } else {
      const RatQ coeff = RatQ::q_power(alpha[k]) / qint(alpha[k]);
      for (const auto& [key, c] : u.coeffs()) next.add_term(key | bit(k), c);
      const TensorVec fu = act(Generator::F, u);
      for (const auto& [key, c] : fu.coeffs()) next.add_term(key, -coeff * c);
      next *= inv_q_minus_qinv();
    }
    u = std::move(next);
    out.prefixes.push_back(u);
  }
  RatQ norm = c_alpha(alpha);
  for (int i = 0; i < alpha.semilength(); ++i) norm *= qint(2);
  out.normalization = norm;
  out.vec = u * norm;
  return out;
}

bool verify_prefixes(const BlockVector& b) {
  for (std::size_t k = 0; k < b.prefixes.size(); ++k) {
    if (!is_highest_weight(b.prefixes[k], b.path[static_cast<int>(k)])) return false;
  }
  return true;
}

// ---------------------------------------------------------------- projections

int ProjectionReport::failures() const {
  int f = 0;
  for (const auto& c : checks) f += c.ok ? 0 : 1;
  return f;
}

RatQ projection_coefficient(const DyckPath& alpha, int j) {
  switch (local_shape(alpha, j)) {
    case LocalShape::UpWedge:
      return RatQ(1);
    case LocalShape::DownWedge:
      return -(qint(alpha[j] + 1) / qint(alpha[j] + 2));
    default:
      return RatQ(0);
  }
}

ProjectionReport verify_projections(const DyckPath& alpha) {
  ProjectionReport report{alpha, {}};
  const TensorVec full = build_u(alpha).vec;
  for (int j = 1; j < alpha.steps_count(); ++j) {
    ProjectionCheck check;
    check.j = j;
    check.shape = local_shape(alpha, j);
    check.predicted = projection_coefficient(alpha, j);
    const TensorVec actual = pi_hat(full, j);
    if (!is_wedge(check.shape)) {
      if (actual.is_zero()) check.measured = RatQ(0);
      check.ok = actual.is_zero();
    } else {
      const TensorVec target = build_u(remove_wedge(alpha, j)).vec;
      const auto& [key, tc] = *target.coeffs().begin();
      const RatQ ratio = actual.coefficient(key) / tc;
      if (actual == target * ratio) check.measured = ratio;
      check.ok = actual == target * check.predicted;
    }
    report.checks.push_back(std::move(check));
  }
  return report;
}

std::vector<ProjectionReport> verify_all_projections(int n, Exec exec) {
  const auto paths = enumerate_paths(n);
  std::vector<ProjectionReport> out(paths.size());
  if (exec == Exec::Serial) {
    for (std::size_t i = 0; i < paths.size(); ++i) out[i] = verify_projections(paths[i]);
    return out;
  }
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(paths.size()); ++i) {
    try {
      out[static_cast<std::size_t>(i)] = verify_projections(paths[static_cast<std::size_t>(i)]);
    } catch (...) {
#pragma omp critical(qblocks_projection_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

// ------------------------------------------------------------ linear algebra

std::size_t basis_rank(int n) {
  const auto paths = enumerate_paths(n);
  std::vector<TensorVec> vecs;
  std::map<std::uint64_t, std::size_t> column;
  for (const auto& p : paths) {
    vecs.push_back(build_u(p).vec);
    for (const auto& [key, c] : vecs.back().coeffs()) column.try_emplace(key, 0);
  }
  std::size_t idx = 0;
  for (auto& [key, col] : column) col = idx++;
  DenseMatrix<RatQ> m(vecs.size(), column.size());
  for (std::size_t i = 0; i < vecs.size(); ++i) {
    for (const auto& [key, c] : vecs[i].coeffs()) m(i, column[key]) = c;
  }
  return rank(std::move(m));
}

namespace {

std::vector<std::uint64_t> keys_with_ones(int factors, int ones) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t key = 0; key < bit(factors); ++key) {
    if (popcount(key) == ones) out.push_back(key);
  }
  return out;
}

// Basis of H^(0)_{2N} as the kernel of E on the weight-zero monomials.
std::vector<TensorVec> trivial_subspace_basis(int n) {
  const int factors = 2 * n;
  const auto source = keys_with_ones(factors, n);
  std::vector<std::uint64_t> target = n > 0 ? keys_with_ones(factors, n - 1) : std::vector<std::uint64_t>{};
  std::map<std::uint64_t, std::size_t> row;
  for (std::size_t i = 0; i < target.size(); ++i) row[target[i]] = i;
  DenseMatrix<RatQ> m(target.size(), source.size());
  for (std::size_t c = 0; c < source.size(); ++c) {
    const TensorVec image = act(Generator::E, TensorVec::basis(factors, source[c]));
    for (const auto& [key, x] : image.coeffs()) {
      m(row.at(key), c) = x;
    }
  }
  std::vector<TensorVec> basis;
  for (const auto& v : nullspace(std::move(m))) {
    TensorVec t(factors);
    for (std::size_t c = 0; c < source.size(); ++c) t.add_term(source[c], v[c]);
    basis.push_back(std::move(t));
  }
  return basis;
}

}  // namespace

std::size_t trivial_subspace_dimension(int n) { return trivial_subspace_basis(n).size(); }

bool homogeneous_kernel_trivial(int n) {
  const auto basis = trivial_subspace_basis(n);
  if (n == 0) return basis.size() == 1;
  std::map<std::pair<int, std::uint64_t>, std::size_t> row;
  std::vector<std::vector<std::pair<std::size_t, RatQ>>> cols(basis.size());
  for (std::size_t c = 0; c < basis.size(); ++c) {
    for (int j = 1; j < 2 * n; ++j) {
      const TensorVec image = pi_hat(basis[c], j);
      for (const auto& [key, x] : image.coeffs()) {
        auto [it, inserted] = row.try_emplace({j, key}, row.size());
        cols[c].emplace_back(it->second, x);
      }
    }
  }
  DenseMatrix<RatQ> m(row.size(), basis.size());
  for (std::size_t c = 0; c < basis.size(); ++c) {
    for (const auto& [r, x] : cols[c]) m(r, c) = x;
  }
  return rank(std::move(m)) == basis.size();
}

}  // namespace qblocks
