#include "qblocks/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "qblocks/blocks.hpp"
#include "qblocks/dyck.hpp"
#include "qblocks/qfield_io.hpp"
#include "qblocks/qmatrix.hpp"
#include "qblocks/tilings.hpp"

namespace qblocks {

bool SuiteResult::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

double SuiteResult::seconds() const {
  double s = 0;
  for (const auto& c : checks) s += c.seconds;
  return s;
}

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

CheckResult timed(const std::string& name, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  CheckResult r{name, false, "", 0.0};
  try {
    Outcome o = body();
    r.passed = o.passed;
    r.detail = std::move(o.detail);
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

Outcome fail(const std::string& detail) { return {false, detail}; }

std::string num(long double x) {
  std::ostringstream os;
  os.precision(3);
  os << static_cast<double>(x);
  return os.str();
}

int clamp_n(int n_max, int cap) { return std::min(n_max, cap); }

}  // namespace

// ---------------------------------------------------------------- random data

LaurentPoly random_laurent(std::mt19937_64& rng, int max_terms, int max_exp, int max_coeff) {
  std::uniform_int_distribution<int> terms(1, max_terms);
  std::uniform_int_distribution<int> exp(-max_exp, max_exp);
  std::uniform_int_distribution<int> coeff(-max_coeff, max_coeff);
  std::uniform_int_distribution<int> den(1, 3);
  std::vector<std::pair<int, mpq_class>> t;
  const int count = terms(rng);
  for (int i = 0; i < count; ++i) {
    mpq_class c(coeff(rng), den(rng));
    c.canonicalize();
    t.emplace_back(exp(rng), c);
  }
  return LaurentPoly::from_terms(t);
}

RatQ random_ratq(std::mt19937_64& rng) {
  std::bernoulli_distribution laurent_only(0.5);
  LaurentPoly num = random_laurent(rng);
  if (laurent_only(rng)) return RatQ(num);
  LaurentPoly den;
  while (den.is_zero()) den = random_laurent(rng, 3, 2, 3);
  return RatQ(num, den);
}

TensorVec random_tensor(std::mt19937_64& rng, int n, int max_terms) {
  std::uniform_int_distribution<int> terms(1, max_terms);
  std::uniform_int_distribution<std::uint64_t> key(0, (std::uint64_t{1} << n) - 1);
  TensorVec v(n);
  const int count = terms(rng);
  for (int i = 0; i < count; ++i) v.add_term(key(rng), random_ratq(rng));
  return v;
}

// ------------------------------------------------------------ headline checks

CheckResult check_catalan_counts(int n_max) {
  return timed("catalan counts N <= " + std::to_string(n_max), [&] {
    for (int n = 0; n <= n_max; ++n) {
      const auto paths = enumerate_paths(n);
      if (static_cast<long long>(paths.size()) != catalan(n)) {
        return fail("N=" + std::to_string(n) + " gives " + std::to_string(paths.size()));
      }
      if (!std::is_sorted(paths.begin(), paths.end()) ||
          std::adjacent_find(paths.begin(), paths.end()) != paths.end()) {
        return fail("N=" + std::to_string(n) + " not strictly increasing");
      }
    }
    return Outcome{};
  });
}

CheckResult check_inverse_theorem(int n_max, int eliminate_n) {
  return timed("M * Minv = I for N <= " + std::to_string(n_max) + ", elimination oracle at N = " +
                   std::to_string(eliminate_n),
               [&] {
                 for (int n = 0; n <= n_max; ++n) {
                   const auto m = build_M(n);
                   const auto minv = build_Minv_tilings(n);
                   const auto id = DenseMatrix<RatQ>::identity(m.size());
                   if (!(multiply(m.entries, minv.entries) == id)) return fail("M Minv != I at N=" + std::to_string(n));
                   if (!(multiply(minv.entries, m.entries) == id)) return fail("Minv M != I at N=" + std::to_string(n));
                 }
                 const auto minv = build_Minv_tilings(eliminate_n);
                 if (!(eliminate_inverse(build_M(eliminate_n)) == minv)) {
                   return fail("elimination inverse differs at N=" + std::to_string(eliminate_n));
                 }
                 return Outcome{};
               });
}

CheckResult check_recursion(int n_max) {
  return timed("wedge recursion equals nested-tiling M for N <= " + std::to_string(n_max), [&] {
    for (int n = 0; n <= n_max; ++n) {
      if (!(build_M_recursive(n) == build_M(n))) return fail("mismatch at N=" + std::to_string(n));
    }
    return Outcome{};
  });
}

CheckResult check_relations(std::uint64_t seed, int samples, int n_lo, int n_hi) {
  return timed("U_q(sl2) relations on " + std::to_string(samples) + " random vectors per n in [" +
                   std::to_string(n_lo) + ", " + std::to_string(n_hi) + "]",
               [&] {
                 std::mt19937_64 rng(seed);
                 const RatQ q2 = RatQ::q_power(2);
                 const RatQ qm2 = RatQ::q_power(-2);
                 const RatQ inv = (RatQ::q_power(1) - RatQ::q_power(-1)).inverse();
                 for (int n = n_lo; n <= n_hi; ++n) {
                   for (int s = 0; s < samples; ++s) {
                     const TensorVec v = random_tensor(rng, n);
                     const std::string where = " (n=" + std::to_string(n) + ", sample " + std::to_string(s) + ")";
                     if (!(act(Generator::K, act(Generator::Kinv, v)) == v)) return fail("K Kinv != id" + where);
                     if (!(act(Generator::K, act(Generator::E, v)) == act(Generator::E, act(Generator::K, v)) * q2)) {
                       return fail("K E != q^2 E K" + where);
                     }
                     if (!(act(Generator::K, act(Generator::F, v)) == act(Generator::F, act(Generator::K, v)) * qm2)) {
                       return fail("K F != q^-2 F K" + where);
                     }
                     const TensorVec lhs = act(Generator::E, act(Generator::F, v)) - act(Generator::F, act(Generator::E, v));
                     const TensorVec rhs = (act(Generator::K, v) - act(Generator::Kinv, v)) * inv;
                     if (!(lhs == rhs)) return fail("[E, F] != (K - Kinv)/(q - q^-1)" + where);
                   }
                 }
                 return Outcome{};
               });
}

CheckResult check_highest_weight_and_projections(int n_max) {
  return timed("prefixes highest weight and projection cases for N <= " + std::to_string(n_max), [&] {
    int columns = 0;
    for (int n = 0; n <= n_max; ++n) {
      for (const auto& report : verify_all_projections(n, Exec::Parallel)) {
        if (report.failures() > 0) return fail("projection failure for " + report.path.steps());
        columns += static_cast<int>(report.checks.size());
        const auto b = build_u(report.path);
        if (!verify_prefixes(b)) return fail("prefix not highest weight for " + report.path.steps());
      }
    }
    return Outcome{true, std::to_string(columns) + " projections checked"};
  });
}

CheckResult check_basis(int rank_n_max, int kernel_n_max) {
  return timed("basis rank = C_N for N <= " + std::to_string(rank_n_max) + ", trivial joint kernel for N <= " +
                   std::to_string(kernel_n_max),
               [&] {
                 for (int n = 0; n <= rank_n_max; ++n) {
                   const auto r = basis_rank(n);
                   if (static_cast<long long>(r) != catalan(n)) return fail("rank " + std::to_string(r) + " at N=" + std::to_string(n));
                 }
                 for (int n = 0; n <= kernel_n_max; ++n) {
                   if (static_cast<long long>(trivial_subspace_dimension(n)) != catalan(n)) {
                     return fail("dim H^(0) != C_N at N=" + std::to_string(n));
                   }
                   if (!homogeneous_kernel_trivial(n)) return fail("nonzero joint kernel at N=" + std::to_string(n));
                 }
                 return Outcome{};
               });
}

CheckResult check_cross_module(int n_max, const std::vector<double>& kappas) {
  return timed("exact projection coefficients match numeric case coefficients, N <= " + std::to_string(n_max), [&] {
    long double worst = 0;
    int count = 0;
    for (int n = 1; n <= n_max; ++n) {
      for (const auto& report : verify_all_projections(n, Exec::Parallel)) {
        for (const auto& c : report.checks) {
          if (!c.measured) return fail("no proportionality constant for " + report.path.steps());
          for (double k : kappas) {
            const auto exact = eval_at_kappa(*c.measured, QNumeric::from_kappa(k));
            const long double numeric = uasy_coefficient(report.path, c.j, k);
            const long double err = std::abs(std::complex<long double>(exact.real(), exact.imag()) - numeric);
            worst = std::max(worst, err);
            ++count;
            if (err > 1e-10L) {
              return fail(report.path.steps() + " j=" + std::to_string(c.j) + " kappa=" + num(k) + " error " + num(err));
            }
          }
        }
      }
    }
    return Outcome{true, std::to_string(count) + " comparisons, max error " + num(worst)};
  });
}

CheckResult check_block_analytics() {
  return timed("ODE residuals < 1e-6 and wedge limits within 1e-6 on the grid", [&] {
    const BlockGrid grid;
    long double worst_res = 0;
    for (const auto& r : ode_grid(grid)) {
      worst_res = std::max({worst_res, std::fabs(r.residual1), std::fabs(r.residual2)});
      if (!(std::fabs(r.residual1) < 1e-6L && std::fabs(r.residual2) < 1e-6L)) {
        return fail(std::string(block_shape_code(r.shape)) + " kappa=" + num(r.kappa) + " lambda=" +
                    std::to_string(r.lambda) + " z=" + num(r.z) + " residuals " + num(r.residual1) + ", " +
                    num(r.residual2));
      }
    }
    long double worst_asy = 0;
    for (const auto& r : asymptotic_grid(grid)) {
      worst_asy = std::max(worst_asy, r.error);
      if (!(r.error < 1e-6L)) {
        return fail(std::string(block_shape_code(r.shape)) + " kappa=" + num(r.kappa) + " lambda=" +
                    std::to_string(r.lambda) + " limit error " + num(r.error));
      }
      if (r.shape == LocalShape::DownWedge) {
        const auto exact = -eval_at_kappa(qint(r.lambda) / qint(r.lambda + 1), QNumeric::from_kappa(static_cast<double>(r.kappa)));
        if (std::fabs(exact.real() - r.expected) > 1e-9L) return fail("sine ratio disagrees with [l]/[l+1]");
      }
    }
    return Outcome{true, "max residual " + num(worst_res) + ", max limit error " + num(worst_asy)};
  });
}

CheckResult check_q1_degeneration(int n_max) {
  return timed("q = 1 specialisation equals the h/(h+1) pipeline for N <= " + std::to_string(n_max), [&] {
    for (int n = 0; n <= n_max; ++n) {
      const auto m1 = build_M_weighted<mpq_class>(n, tile_weight_q1);
      const auto minv1 = build_Minv_weighted<mpq_class>(n, tile_weight_q1);
      if (!(specialize_q1(build_M(n)) == m1)) return fail("M differs at N=" + std::to_string(n));
      if (!(specialize_q1(build_Minv_tilings(n)) == minv1)) return fail("Minv differs at N=" + std::to_string(n));
      if (!(eliminate_inverse(m1) == minv1)) return fail("rational inverse differs at N=" + std::to_string(n));
      if (!(build_M_recursive_weighted<mpq_class>(n, tile_weight_q1) == m1)) {
        return fail("rational recursion differs at N=" + std::to_string(n));
      }
    }
    return Outcome{};
  });
}

// -------------------------------------------------------------------- suites

namespace {

SuiteResult qfield_suite(const VerifyOptions& o) {
  SuiteResult s{"qfield", {}};
  std::mt19937_64 rng(o.seed);
  const LaurentPoly q = LaurentPoly::monomial(1);
  const LaurentPoly qinv = LaurentPoly::monomial(-1);
  s.checks.push_back(timed("[m+n] = [m] q^n + [n] q^-m", [&] {
    std::uniform_int_distribution<int> d(1, 20);
    for (int i = 0; i < o.samples; ++i) {
      const int m = d(rng), n = d(rng);
      if (!(q_integer(m + n) == q_integer(m).shifted(n) + q_integer(n).shifted(-m))) {
        return fail("m=" + std::to_string(m) + " n=" + std::to_string(n));
      }
    }
    return Outcome{};
  }));
  s.checks.push_back(timed("[n](q - q^-1) = q^n - q^-n", [&] {
    for (int n = 0; n <= 40; ++n) {
      if (!(q_integer(n) * (q - qinv) == LaurentPoly::monomial(n) - LaurentPoly::monomial(-n))) {
        return fail("n=" + std::to_string(n));
      }
    }
    return Outcome{};
  }));
  s.checks.push_back(timed("canonical equality agrees with cross-multiplication", [&] {
    for (int i = 0; i < o.samples; ++i) {
      const LaurentPoly a = random_laurent(rng), k = random_laurent(rng, 2, 2, 3);
      LaurentPoly b;
      while (b.is_zero()) b = random_laurent(rng);
      LaurentPoly c = random_laurent(rng), d;
      while (d.is_zero()) d = random_laurent(rng);
      if (i % 2 == 0 && !k.is_zero()) {
        c = a * k;
        d = b * k;
      }
      const RatQ x(a, b), y(c, d);
      if ((x == y) != (a * d == c * b)) return fail("sample " + std::to_string(i));
      if (!(RatQ(x.num(), x.den()) == x)) return fail("canonicalisation not idempotent");
    }
    return Outcome{};
  }));
  s.checks.push_back(timed("field axioms on random elements", [&] {
    for (int i = 0; i < o.samples; ++i) {
      const RatQ a = random_ratq(rng), b = random_ratq(rng), c = random_ratq(rng);
      if (!(a + b == b + a) || !(a * b == b * a)) return fail("commutativity");
      if (!((a + b) + c == a + (b + c)) || !((a * b) * c == a * (b * c))) return fail("associativity");
      if (!(a * (b + c) == a * b + a * c)) return fail("distributivity");
      if (!(a - a).is_zero()) return fail("additive inverse");
      if (!a.is_zero() && !(a / a).is_one()) return fail("multiplicative inverse");
    }
    return Outcome{};
  }));
  s.checks.push_back(timed("evaluation at kappa is a homomorphism", [&] {
    const auto ctx = QNumeric::from_kappa(3.7);
    for (int i = 0; i < o.samples; ++i) {
      const RatQ a = random_ratq(rng), b = random_ratq(rng);
      try {
        const auto lhs = eval_at_kappa(a * b, ctx);
        const auto rhs = eval_at_kappa(a, ctx) * eval_at_kappa(b, ctx);
        if (std::abs(lhs - rhs) > 1e-10 * std::max(1.0, std::abs(rhs))) return fail("sample " + std::to_string(i));
      } catch (const PoleError&) {
      }
    }
    return Outcome{};
  }));
  s.checks.push_back(timed("JSON round trip", [&] {
    for (int i = 0; i < o.samples; ++i) {
      const RatQ a = random_ratq(rng);
      const auto text = to_json(a).dump();
      if (!(ratq_from_json(nlohmann::json::parse(text)) == a) || to_json(ratq_from_json(nlohmann::json::parse(text))).dump() != text) {
        return fail("sample " + std::to_string(i));
      }
    }
    return Outcome{};
  }));
  return s;
}

SuiteResult dyck_suite(const VerifyOptions& o) {
  SuiteResult s{"dyck", {}};
  const int n = clamp_n(o.n_max, 5);
  s.checks.push_back(check_catalan_counts(8));
  s.checks.push_back(timed("pointwise order is a partial order refined by the canonical order", [&] {
    for (int k = 0; k <= n; ++k) {
      const auto paths = enumerate_paths(k);
      for (std::size_t i = 0; i < paths.size(); ++i) {
        if (!path_leq(paths[i], paths[i])) return fail("reflexivity");
        for (std::size_t j = 0; j < paths.size(); ++j) {
          const bool ij = path_leq(paths[i], paths[j]);
          if (ij && path_leq(paths[j], paths[i]) && i != j) return fail("antisymmetry");
          if (ij && j < i) return fail("order compatibility");
          if (!ij) continue;
          for (std::size_t l = 0; l < paths.size(); ++l) {
            if (path_leq(paths[j], paths[l]) && !path_leq(paths[i], paths[l])) return fail("transitivity");
          }
        }
      }
    }
    return Outcome{};
  }));
  s.checks.push_back(timed("wedge removal and insertion round trip", [&] {
    for (int k = 1; k <= n; ++k) {
      for (const auto& p : enumerate_paths(k)) {
        for (int j = 1; j < p.steps_count(); ++j) {
          const auto shape = local_shape(p, j);
          if (!is_wedge(shape)) continue;
          if (!(insert_wedge(remove_wedge(p, j), j, shape) == p)) return fail(p.steps() + " j=" + std::to_string(j));
        }
      }
    }
    return Outcome{};
  }));
  s.checks.push_back(timed("step strings round trip", [&] {
    for (int k = 0; k <= n; ++k) {
      for (const auto& p : enumerate_paths(k)) {
        if (!(DyckPath::from_steps(p.steps()) == p)) return fail(p.steps());
      }
    }
    return Outcome{};
  }));
  return s;
}

SuiteResult tilings_suite(const VerifyOptions& o) {
  SuiteResult s{"tilings", {}};
  const int n4 = clamp_n(o.n_max, 4);
  const int n5 = clamp_n(o.n_max, 5);
  s.checks.push_back(timed("nested tilings are unique among all Dyck tilings", [&] {
    for (int k = 0; k <= n4; ++k) {
      const auto paths = enumerate_paths(k);
      for (const auto& a : paths) {
        for (const auto& b : paths) {
          int nested = 0;
          for (const auto& t : enumerate_tilings(a, b)) {
            if (!is_valid_tiling(t)) return fail("invalid tiling of " + a.steps() + "/" + b.steps());
            nested += is_nested(t) ? 1 : 0;
          }
          if (nested > 1) return fail("two nested tilings of " + a.steps() + "/" + b.steps());
          if ((nested == 1) != nested_tiling(a, b).has_value()) return fail("pruned search disagrees");
        }
      }
    }
    return Outcome{};
  }));
  s.checks.push_back(timed("cover-inclusive tilings exist and are valid", [&] {
    for (int k = 0; k <= n4; ++k) {
      const auto paths = enumerate_paths(k);
      for (const auto& a : paths) {
        for (const auto& b : paths) {
          const auto tilings = enumerate_cover_inclusive(a, b);
          if (path_leq(a, b) && tilings.empty()) return fail("none for " + a.steps() + "/" + b.steps());
          if (!path_leq(a, b) && !tilings.empty()) return fail("tiling of a non-skew pair");
          std::size_t filtered = 0;
          for (const auto& t : enumerate_tilings(a, b)) filtered += is_cover_inclusive(t) ? 1 : 0;
          if (filtered != tilings.size()) return fail("pruned search disagrees for " + a.steps() + "/" + b.steps());
          for (const auto& t : tilings) {
            if (!is_valid_tiling(t) || !is_cover_inclusive(t)) return fail("bad tiling " + a.steps() + "/" + b.steps());
          }
        }
      }
    }
    return Outcome{};
  }));
  s.checks.push_back(timed("parenthesis reversal implies pointwise order", [&] {
    for (int k = 0; k <= n5; ++k) {
      const auto paths = enumerate_paths(k);
      for (const auto& a : paths) {
        for (const auto& b : paths) {
          if (nested_tiling(a, b) && !path_leq(a, b)) return fail(a.steps() + " ~> " + b.steps());
        }
      }
    }
    return Outcome{};
  }));
  return s;
}

SuiteResult qmatrix_suite(const VerifyOptions& o) {
  SuiteResult s{"qmatrix", {}};
  const int n5 = clamp_n(o.n_max, 5);
  s.checks.push_back(timed("M and Minv unit upper triangular", [&] {
    for (int k = 0; k <= n5; ++k) {
      if (!is_unit_upper_triangular(build_M(k)) || !is_unit_upper_triangular(build_Minv_tilings(k))) {
        return fail("N=" + std::to_string(k));
      }
    }
    return Outcome{};
  }));
  s.checks.push_back(check_inverse_theorem(n5, clamp_n(o.n_max, 4)));
  s.checks.push_back(check_recursion(n5));
  s.checks.push_back(check_q1_degeneration(clamp_n(o.n_max, 3)));
  s.checks.push_back(timed("change of basis round trip", [&] {
    std::mt19937_64 rng(o.seed);
    for (int k = 0; k <= clamp_n(o.n_max, 4); ++k) {
      const auto m = build_M(k);
      const auto minv = build_Minv_tilings(k);
      for (int i = 0; i < 10; ++i) {
        CoeffVector v{k, {}};
        for (const auto& p : m.order) {
          const RatQ c = random_ratq(rng);
          if (!c.is_zero()) v.coeffs.emplace(p, c);
        }
        const auto w = change_basis(change_basis(v, BasisDirection::U_from_Z, m, minv), BasisDirection::Z_from_U, m, minv);
        if (w.coeffs != v.coeffs) return fail("N=" + std::to_string(k));
      }
    }
    return Outcome{};
  }));
  return s;
}

SuiteResult uqsl2_suite(const VerifyOptions& o) {
  SuiteResult s{"uqsl2", {}};
  s.checks.push_back(check_relations(o.seed, o.samples, 2, 6));
  s.checks.push_back(timed("coproduct is coassociative on flattened tensors", [&] {
    std::mt19937_64 rng(o.seed + 1);
    for (int i = 0; i < o.samples / 4 + 1; ++i) {
      const TensorVec u = random_tensor(rng, 1 + i % 2), v = random_tensor(rng, 2), w = random_tensor(rng, 1 + i % 3);
      for (Generator g : {Generator::E, Generator::F, Generator::K, Generator::Kinv}) {
        if (!(act(g, tensor(tensor(u, v), w)) == act(g, tensor(u, tensor(v, w))))) return fail("sample " + std::to_string(i));
      }
      if (!(act(Generator::E, tensor(u, v)) == tensor(act(Generator::E, u), act(Generator::K, v)) + tensor(u, act(Generator::E, v)))) {
        return fail("E coproduct");
      }
      if (!(act(Generator::F, tensor(u, v)) == tensor(act(Generator::F, u), v) + tensor(act(Generator::Kinv, u), act(Generator::F, v)))) {
        return fail("F coproduct");
      }
    }
    return Outcome{};
  }));
  s.checks.push_back(check_highest_weight_and_projections(clamp_n(o.n_max, 5)));
  s.checks.push_back(check_basis(clamp_n(o.n_max, 4), clamp_n(o.n_max, 3)));
  s.checks.push_back(timed("singlet projection equals pi_hat times s on M2 (x) M2", [&] {
    const TensorVec sv = singlet();
    for (std::uint64_t key = 0; key < 4; ++key) {
      const TensorVec m = TensorVec::basis(2, key);
      if (!(pi_hat(m, 1).coefficient(0) == singlet_component(m))) return fail("monomial " + TensorVec::bits_from_key(key, 2));
    }
    if (!pi_hat(sv, 1).coefficient(0).is_one()) return fail("pi_hat(s) != 1");
    return Outcome{};
  }));
  return s;
}

SuiteResult blocks_suite(const VerifyOptions& o) {
  SuiteResult s{"blocks", {}};
  s.checks.push_back(check_block_analytics());
  s.checks.push_back(timed("the two ODEs coincide for wedges", [&] {
    std::mt19937_64 rng(o.seed);
    std::uniform_real_distribution<double> zd(0.05, 0.95);
    for (double k : {2.5, 3.7, 5.3, 6.9}) {
      for (int l = 1; l <= 3; ++l) {
        for (LocalShape sh : {LocalShape::UpWedge, LocalShape::DownWedge}) {
          const BlockContext ctx(k, l, sh);
          for (int i = 0; i < 10; ++i) {
            const auto [a, b] = ode_coefficients(ctx, zd(rng));
            if (std::fabs(a.a2 - b.a2) > 1e-12L || std::fabs(a.a1 - b.a1) > 1e-12L || std::fabs(a.a0 - b.a0) > 1e-12L) {
              return fail("kappa=" + num(k) + " lambda=" + std::to_string(l));
            }
          }
        }
      }
    }
    return Outcome{};
  }));
  s.checks.push_back(timed("hyp2f1 continuous across z = 1/2", [&] {
    long double worst = 0;
    for (double k : {2.5, 3.7, 5.3, 6.9}) {
      for (int l = 0; l <= 3; ++l) {
        const long double a = (k - 4) / k, b = 4 * l / k, c = (4 * l + 4) / k;
        for (int i = 0; i <= 100; ++i) {
          const long double z = 0.45L + 0.001L * i;
          worst = std::max(worst, std::fabs(hyp2f1_series(a, b, c, z) - hyp2f1_connection(a, b, c, z)));
        }
      }
    }
    return worst < 1e-9L ? Outcome{true, "max jump " + num(worst)} : fail("max jump " + num(worst));
  }));
  s.checks.push_back(timed("residual detects a perturbed solution", [&] {
    const BlockContext ctx(3.7, 1, LocalShape::UpWedge);
    const auto [r1, r2] = ode_residual([&](long double z) { return block_g(ctx, z) * (1 + 1e-3L * z); }, ctx, 0.5L, 1e-4L);
    return std::fabs(r1) > 1e-4L && std::fabs(r2) > 1e-4L ? Outcome{} : fail("perturbation not detected");
  }));
  return s;
}

SuiteResult cross_suite(const VerifyOptions& o) {
  SuiteResult s{"cross", {}};
  s.checks.push_back(check_cross_module(clamp_n(o.n_max, 3), {2.5, 3.7, 5.3}));
  return s;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"qfield", "dyck", "tilings", "qmatrix", "uqsl2", "blocks", "cross"};
  return names;
}

SuiteResult run_suite(const std::string& name, const VerifyOptions& opts) {
  if (opts.n_max < 0) throw std::invalid_argument("n-max must be nonnegative");
  if (name == "qfield") return qfield_suite(opts);
  if (name == "dyck") return dyck_suite(opts);
  if (name == "tilings") return tilings_suite(opts);
  if (name == "qmatrix") return qmatrix_suite(opts);
  if (name == "uqsl2") return uqsl2_suite(opts);
  if (name == "blocks") return blocks_suite(opts);
  if (name == "cross") return cross_suite(opts);
  throw std::invalid_argument("unknown suite: " + name);
}

std::vector<SuiteResult> run_all_suites(const VerifyOptions& opts) {
  std::vector<SuiteResult> out;
  for (const auto& name : suite_names()) out.push_back(run_suite(name, opts));
  return out;
}

}  // namespace qblocks
