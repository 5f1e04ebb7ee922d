#include "newton_segre/lattice_sum.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <thread>
#include <unordered_map>

#include "newton_segre/error.hpp"
#include "newton_segre/lct.hpp"
#include "newton_segre/polygamma.hpp"
#include "newton_segre/polyhedron.hpp"
#include "newton_segre/segre.hpp"

namespace nsegre {

Exponent EstimatorConfig::effective_cutoff() const {
  if (ray_cutoff) return *ray_cutoff;
  Exponent c = 0;
  if (__builtin_mul_overflow(m, m, &c) || __builtin_mul_overflow(c, Exponent{10}, &c))
    throw Error(ErrorCode::Overflow, "default ray cutoff 10*m^2 overflows");
  return c;
}

Rational kernel_term(std::span<const Exponent> a, Exponent m, std::span<const Rational> x) {
  if (a.size() != x.size()) throw Error(ErrorCode::DimensionMismatch, "lattice point and X differ in length");
  const std::size_t n = a.size();
  Rational numerator = static_cast<long>(m);
  Rational denominator = static_cast<long>(m);
  for (std::size_t i = 0; i < n; ++i) {
    numerator *= x[i] * static_cast<unsigned long>(i + 1);  // folds n! in
    denominator += static_cast<long>(a[i]) * x[i];
  }
  Rational power = 1;
  for (std::size_t i = 0; i <= n; ++i) power *= denominator;
  return numerator / power;
}

double kernel_term(std::span<const Exponent> a, Exponent m, std::span<const double> x) {
  if (a.size() != x.size()) throw Error(ErrorCode::DimensionMismatch, "lattice point and X differ in length");
  const std::size_t n = a.size();
  double numerator = static_cast<double>(m), denominator = static_cast<double>(m);
  for (std::size_t i = 0; i < n; ++i) {
    numerator *= x[i] * static_cast<double>(i + 1);
    denominator += static_cast<double>(a[i]) * x[i];
  }
  return numerator / std::pow(denominator, static_cast<double>(n + 1));
}

namespace {

constexpr Exponent kBlockSize = 512;
constexpr Exponent kDirectFiberLimit = 64;

Exponent to_exponent(const Rational& q) {
  if (q.get_den() != 1 || !q.get_num().fits_slong_p())
    throw Error(ErrorCode::Overflow, "facet coefficient does not fit in 64 bits");
  return q.get_num().get_si();
}

// a/m in the Newton region, tested on the integer form <w,a> <= c*m of the
// diagram facets (the same test as in_newton_region after scaling by m).
class MembershipOracle {
 public:
  MembershipOracle(const NewtonPolyhedron& poly, Exponent m, Exponent cutoff) : m_(m), cutoff_(cutoff) {
    for (const auto& f : poly.diagram_facets()) {
      Row row;
      for (const auto& w : f.normal) row.w.push_back(to_exponent(w));
      row.bound = static_cast<__int128>(to_exponent(f.offset)) * m;
      rows_.push_back(std::move(row));
    }
  }

  bool contains(std::span<const Exponent> a) const {
    return std::any_of(rows_.begin(), rows_.end(), [&](const Row& r) {
      __int128 s = 0;
      for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<__int128>(r.w[i]) * a[i];
      return s <= r.bound;
    });
  }

  // Largest a_n in [0, cutoff] with (prefix, a_n) in the region.
  Exponent fiber_extent(std::span<Exponent> point) const {
    const std::size_t last = point.size() - 1;
    __int128 best = 0;
    for (const auto& r : rows_) {
      __int128 s = 0;
      for (std::size_t i = 0; i < last; ++i) s += static_cast<__int128>(r.w[i]) * point[i];
      const __int128 room = r.bound - s;
      if (room < 0) continue;
      if (r.w[last] == 0) return cutoff_;
      best = std::max(best, room / r.w[last]);
    }
    return static_cast<Exponent>(std::min<__int128>(best, cutoff_));
  }

  Exponent m() const { return m_; }

 private:
  struct Row {
    std::vector<Exponent> w;
    __int128 bound = 0;
  };
  Exponent m_, cutoff_;
  std::vector<Row> rows_;
};

struct VectorHash {
  std::size_t operator()(const ExponentVector& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto e : v) h = (h ^ static_cast<std::size_t>(e)) * 0x100000001b3ULL;
    return h;
  }
};

// a/m in the region iff a1...an * lct(I_{a2..an, ..., a1..a_{n-1}}) <= m.
// lct values are memoized by the stretch tuple divided by its gcd, using
// lct(I_{g r}) = lct(I_r) / g. Not thread-safe; one instance per worker.
class LctOracle {
 public:
  LctOracle(const MonomialIdeal& ideal, Exponent m, Exponent cutoff) : ideal_(ideal), m_(m), cutoff_(cutoff) {}

  bool contains(std::span<const Exponent> a) const {
    ExponentVector r = region_stretch_factors(a);
    Exponent g = 0;
    for (auto v : r) g = std::gcd(g, v);
    for (auto& v : r) v /= g;
    auto it = memo_.find(r);
    if (it == memo_.end()) it = memo_.emplace(r, lct(stretch(ideal_, r))).first;
    Integer product = 1;
    for (auto v : a) product *= static_cast<long>(v);
    return Rational(product) * it->second <= Rational(Integer(static_cast<long>(m_)) * static_cast<long>(g));
  }

  Exponent fiber_extent(std::span<Exponent> point) const {
    Exponent& tip = point.back();
    auto inside = [&](Exponent v) {
      tip = v;
      return contains(point);
    };
    Exponent extent = last_inside(inside, cutoff_);
    tip = 1;
    return extent;
  }

  // Largest v in [0, limit] with inside(v), assuming inside is monotone
  // (true up to some point, false after); galloping then bisection.
  static Exponent last_inside(const std::function<bool(Exponent)>& inside, Exponent limit) {
    if (limit < 1 || !inside(1)) return 0;
    Exponent lo = 1, step = 1;
    Exponent hi = limit + 1;  // first known-outside candidate
    while (lo < limit) {
      Exponent probe = std::min(limit, lo + step);
      if (inside(probe)) {
        lo = probe;
        step *= 2;
      } else {
        hi = probe;
        break;
      }
    }
    while (hi - lo > 1) {
      Exponent mid = lo + (hi - lo) / 2;
      if (inside(mid)) lo = mid;
      else hi = mid;
    }
    return lo;
  }

 private:
  const MonomialIdeal& ideal_;
  Exponent m_, cutoff_;
  mutable std::unordered_map<ExponentVector, Rational, VectorHash> memo_;
};

// Largest a1 in [0, cutoff] with (a1, 1, ..., 1) in the region.
template <typename Oracle>
Exponent first_axis_extent(const Oracle& oracle, std::size_t n, Exponent cutoff) {
  ExponentVector point(n, 1);
  return LctOracle::last_inside(
      [&](Exponent v) {
        point[0] = v;
        return oracle.contains(point);
      },
      cutoff);
}

// Visits every fiber (prefix, extent) with a1 in [a1_lo, a1_hi]. For n == 1
// there is a single fiber with an empty prefix.
template <typename Oracle, typename Visit>
void for_each_fiber(const Oracle& oracle, std::size_t n, Exponent cutoff, Exponent a1_lo, Exponent a1_hi,
                    Visit&& visit) {
  ExponentVector point(n, 1);
  if (n == 1) {
    visit(std::span<const Exponent>(point.data(), 0), oracle.fiber_extent(point));
    return;
  }
  std::function<void(std::size_t)> recurse = [&](std::size_t depth) {
    if (depth == n - 1) {
      point[n - 1] = 1;
      Exponent h = oracle.fiber_extent(point);
      visit(std::span<const Exponent>(point.data(), n - 1), h);
      return;
    }
    const Exponent lo = depth == 0 ? a1_lo : 1;
    const Exponent hi = depth == 0 ? a1_hi : cutoff;
    for (Exponent v = lo; v <= hi; ++v) {
      point[depth] = v;
      std::fill(point.begin() + static_cast<std::ptrdiff_t>(depth) + 1, point.end(), 1);
      if (depth > 0 && !oracle.contains(point)) break;  // down-set: later values are outside too
      recurse(depth + 1);
    }
  };
  recurse(0);
}

struct Accumulator {
  long double sum = 0.0L, carry = 0.0L;
  void add(long double v) {
    long double t = sum + v;
    carry += std::fabs(sum) >= std::fabs(v) ? (sum - t) + v : (v - t) + sum;
    sum = t;
  }
  long double value() const { return sum + carry; }
};

// sum_{k=1}^{h} K / (k + c)^{n+1} for the fiber over `prefix`, where
// K = m n! prod X / X_n^{n+1} and c = (m + prefix . X') / X_n.
long double fiber_sum_float(std::span<const Exponent> prefix, Exponent h, Exponent m, std::span<const long double> x) {
  const std::size_t n = x.size();
  const long double xn = x[n - 1];
  long double shift = static_cast<long double>(m);
  for (std::size_t i = 0; i < prefix.size(); ++i) shift += prefix[i] * x[i];
  const long double c = shift / xn;
  long double coeff = static_cast<long double>(m);
  for (std::size_t i = 0; i < n; ++i) coeff *= x[i] * static_cast<long double>(i + 1);
  coeff /= std::pow(xn, static_cast<long double>(n + 1));

  const long double power = static_cast<long double>(n + 1);
  if (h <= kDirectFiberLimit) {
    long double s = 0.0L;
    for (Exponent k = h; k >= 1; --k) s += std::pow(k + c, -power);
    return coeff * s;
  }
  // sum_{a>=0} (a + y)^{-(n+1)} = (-1)^{n+1} Psi^{(n)}(y) / n!
  long double factorial = 1.0L;
  for (std::size_t i = 2; i <= n; ++i) factorial *= static_cast<long double>(i);
  const int order = static_cast<int>(n);
  const long double sign = (n % 2 == 1) ? 1.0L : -1.0L;
  const long double head = polygamma_extended(order, 1.0L + c);
  const long double rest = polygamma_extended(order, static_cast<long double>(h) + 1.0L + c);
  return coeff * sign * (head - rest) / factorial;
}

double truncation_tail_bound(const NewtonPolyhedron& poly, Exponent m, Exponent cutoff,
                             std::span<const long double> x) {
  double bound = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    auto extent = poly.axis_extent(i);
    if (extent && *extent * static_cast<long>(m) <= static_cast<long>(cutoff)) continue;
    // Kernel mass of the orthant slab y_i >= cutoff/m is 1/(1 + (cutoff/m) X_i).
    bound += static_cast<double>(1.0L / (1.0L + static_cast<long double>(cutoff) / m * x[i]));
  }
  return bound;
}

// Pairwise summation: denominators grow with every addition, so adding
// similar-sized partial sums is far cheaper than a running total.
class PairwiseSum {
 public:
  void add(Rational v) {
    std::size_t level = 0;
    while (level < slots_.size() && slots_[level]) {
      v += *slots_[level];
      slots_[level].reset();
      ++level;
    }
    if (level == slots_.size()) slots_.emplace_back();
    slots_[level] = std::move(v);
  }
  Rational total() const {
    Rational out;
    for (const auto& s : slots_)
      if (s) out += *s;
    return out;
  }

 private:
  std::vector<std::optional<Rational>> slots_;
};

// kernel_term(a) = factor / (base + a.x)^{n+1} with integer base and x:
// Q = lcm of the X denominators, x_i = Q X_i, base = Q m.
struct ScaledKernel {
  Integer base;
  std::vector<Integer> x;
  Rational factor;

  ScaledKernel(Exponent m, std::span<const Rational> params) {
    Integer q = 1;
    for (const auto& p : params) mpz_lcm(q.get_mpz_t(), q.get_mpz_t(), p.get_den_mpz_t());
    base = q * static_cast<long>(m);
    factor = static_cast<long>(m);
    for (std::size_t i = 0; i < params.size(); ++i) {
      x.push_back(Integer(params[i] * q));
      factor *= params[i] * static_cast<unsigned long>(i + 1);
    }
    Integer qpow;
    mpz_pow_ui(qpow.get_mpz_t(), q.get_mpz_t(), params.size() + 1);
    factor *= qpow;
  }
};

struct BlockResult {
  long double value = 0.0L;
  long double carry = 0.0L;
  Rational exact;
  std::uint64_t points = 0, fibers = 0;
};

template <typename MakeOracle>
EstimateResult run_estimate(const MonomialIdeal& ideal, const EstimatorConfig& cfg, Exponent cutoff,
                            MakeOracle&& make_oracle) {
  const std::size_t n = ideal.dimension();
  std::vector<long double> xf;
  for (const auto& q : cfg.x) xf.push_back(to_long_double(q));
  const ScaledKernel scaled(cfg.m, cfg.x);

  Exponent a1_max = 0;
  {
    auto oracle = make_oracle();
    a1_max = n == 1 ? 1 : first_axis_extent(oracle, n, cutoff);
  }
  const Exponent blocks = a1_max == 0 ? 0 : (a1_max + kBlockSize - 1) / kBlockSize;
  std::vector<BlockResult> results(static_cast<std::size_t>(blocks));

  std::atomic<Exponent> next{0};
  auto worker = [&] {
    auto oracle = make_oracle();
    for (Exponent b = next++; b < blocks; b = next++) {
      BlockResult& out = results[static_cast<std::size_t>(b)];
      Accumulator acc;
      PairwiseSum exact_sum;
      const Exponent lo = b * kBlockSize + 1, hi = std::min(a1_max, lo + kBlockSize - 1);
      for_each_fiber(oracle, n, cutoff, lo, hi, [&](std::span<const Exponent> prefix, Exponent h) {
        ++out.fibers;
        if (h < 1) return;
        out.points += static_cast<std::uint64_t>(h);
        if (cfg.arithmetic == Arithmetic::ExactRational) {
          // Each term is K / N^{n+1} with N = Q (m + a.X) an integer.
          Integer base = scaled.base;
          for (std::size_t i = 0; i < prefix.size(); ++i) base += scaled.x[i] * static_cast<long>(prefix[i]);
          Integer denom;
          for (Exponent k = 1; k <= h; ++k) {
            base += scaled.x[n - 1];
            mpz_pow_ui(denom.get_mpz_t(), base.get_mpz_t(), n + 1);
            exact_sum.add(Rational(Integer(1), denom));
          }
        } else {
          acc.add(fiber_sum_float(prefix, h, cfg.m, xf));
        }
      });
      out.exact = exact_sum.total();
      out.value = acc.sum;
      out.carry = acc.carry;
    }
  };

  const unsigned threads = std::max(1U, std::min<unsigned>(cfg.threads, static_cast<unsigned>(std::max<Exponent>(blocks, 1))));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  EstimateResult result;
  Accumulator total;
  PairwiseSum exact;
  for (const auto& r : results) {  // fixed reduction order
    total.add(r.value);
    total.add(r.carry);
    exact.add(r.exact);
    result.points += r.points;
    result.fibers += r.fibers;
  }
  if (cfg.arithmetic == Arithmetic::ExactRational) {
    result.exact = exact.total() * scaled.factor;
    result.value = result.exact->get_d();
  } else {
    result.value = static_cast<double>(total.value());
  }
  return result;
}

void validate(const MonomialIdeal& ideal, const EstimatorConfig& cfg, Exponent cutoff) {
  if (cfg.m < 1) throw Error(ErrorCode::InvalidArgument, "m must be >= 1");
  if (cfg.x.size() != ideal.dimension())
    throw Error(ErrorCode::DimensionMismatch, "X needs one value per variable");
  for (const auto& q : cfg.x)
    if (sgn(q) <= 0) throw Error(ErrorCode::NonPositiveParameter, "X parameters must be positive");
  if (cutoff < cfg.m) throw Error(ErrorCode::CutoffTooSmall, "ray cutoff must be at least m");
}

}  // namespace

EstimateResult estimate(const MonomialIdeal& ideal, const EstimatorConfig& cfg) {
  const Exponent cutoff = cfg.effective_cutoff();
  validate(ideal, cfg, cutoff);
  const NewtonPolyhedron poly = newton_polyhedron(ideal);

  std::vector<long double> xf;
  for (const auto& q : cfg.x) xf.push_back(to_long_double(q));
  const double tail = truncation_tail_bound(poly, cfg.m, cutoff, xf);
  if (cfg.tolerance && tail > *cfg.tolerance)
    throw Error(ErrorCode::CutoffTooSmall, "truncation tail bound " + std::to_string(tail) + " exceeds tolerance");

  EstimateResult result;
  if (cfg.mode == ConditionMode::MembershipBased) {
    result = run_estimate(ideal, cfg, cutoff, [&] { return MembershipOracle(poly, cfg.m, cutoff); });
  } else {
    result = run_estimate(ideal, cfg, cutoff, [&] { return LctOracle(ideal, cfg.m, cutoff); });
  }
  result.tail_bound = tail;
  return result;
}

std::vector<ConvergenceRow> convergence_report(const MonomialIdeal& ideal, const EstimatorConfig& config,
                                               std::span<const Exponent> m_list) {
  for (std::size_t i = 1; i < m_list.size(); ++i)
    if (m_list[i] <= m_list[i - 1]) throw Error(ErrorCode::InvalidArgument, "m list must be strictly increasing");
  if (config.x.size() != ideal.dimension())
    throw Error(ErrorCode::DimensionMismatch, "X needs one value per variable");
  const double exact = segre_value(ideal, config.x).get_d();

  std::vector<ConvergenceRow> rows;
  for (Exponent m : m_list) {
    EstimatorConfig cfg = config;
    cfg.m = m;
    const auto start = std::chrono::steady_clock::now();
    const EstimateResult r = estimate(ideal, cfg);
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    rows.push_back({m, r.value, exact, std::fabs(r.value - exact), elapsed.count()});
  }
  return rows;
}

std::string convergence_csv(std::span<const ConvergenceRow> rows) {
  std::string out = "m,estimate,exact,abs_error,seconds\r\n";
  char buf[160];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%lld,%.17g,%.17g,%.17g,%.17g\r\n", static_cast<long long>(r.m), r.estimate,
                  r.exact, r.abs_error, r.seconds);
    out += buf;
  }
  return out;
}

ModeAgreement compare_modes(const MonomialIdeal& ideal, Exponent m, Exponent window, Exponent ray_cutoff) {
  const std::size_t n = ideal.dimension();
  if (m < 1 || window < 1 || ray_cutoff < m) throw Error(ErrorCode::InvalidArgument, "invalid comparison ranges");
  const NewtonPolyhedron poly = newton_polyhedron(ideal);
  const MembershipOracle member(poly, m, ray_cutoff);
  const LctOracle by_lct(ideal, m, ray_cutoff);
  ModeAgreement report;

  ExponentVector a(n, 1);
  RationalPoint p(n);
  std::function<void(std::size_t)> sweep = [&](std::size_t depth) {
    if (depth == n) {
      for (std::size_t i = 0; i < n; ++i) p[i] = Rational(static_cast<long>(a[i]), static_cast<long>(m));
      ++report.points_checked;
      if (poly.in_newton_region(p) != by_lct.contains(a)) {
        if (std::find(a.begin(), a.end(), 1) != a.end()) ++report.unit_coordinate_mismatches;
        else ++report.interior_mismatches;
      }
      return;
    }
    for (Exponent v = 1; v <= window; ++v) {
      a[depth] = v;
      sweep(depth + 1);
    }
  };
  sweep(0);

  const Exponent a1_member = n == 1 ? 1 : first_axis_extent(member, n, ray_cutoff);
  const Exponent a1_lct = n == 1 ? 1 : first_axis_extent(by_lct, n, ray_cutoff);
  ++report.fibers_checked;
  if (a1_member != a1_lct) ++report.fiber_mismatches;
  for_each_fiber(member, n, ray_cutoff, 1, a1_member, [&](std::span<const Exponent> prefix, Exponent h) {
    ExponentVector point(prefix.begin(), prefix.end());
    point.push_back(1);
    ++report.fibers_checked;
    if (by_lct.fiber_extent(point) != h) ++report.fiber_mismatches;
  });
  return report;
}

}  // namespace nsegre
