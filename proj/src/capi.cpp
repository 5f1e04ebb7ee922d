#include "newton_segre/newton_segre.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <span>
#include <cstdio>
#include <cstring>
#include <functional>
#include <map>
#include <new>
#include <string>

#include "newton_segre/error.hpp"
#include "newton_segre/io.hpp"
#include "newton_segre/lattice_sum.hpp"
#include "newton_segre/lct.hpp"
#include "newton_segre/polygamma.hpp"
#include "newton_segre/polyhedron.hpp"
#include "newton_segre/segre.hpp"

struct nsg_ideal {
  nsegre::MonomialIdeal ideal;
};

namespace {

thread_local std::string last_error;

nsg_status to_status(nsegre::ErrorCode code) {
  using nsegre::ErrorCode;
  switch (code) {
    case ErrorCode::ZeroGenerator: return NSG_ZERO_GENERATOR;
    case ErrorCode::DimensionMismatch: return NSG_DIMENSION_MISMATCH;
    case ErrorCode::NegativeCoordinate: return NSG_NEGATIVE_COORDINATE;
    case ErrorCode::AmbientTooSmall: return NSG_AMBIENT_TOO_SMALL;
    case ErrorCode::NonPositiveParameter: return NSG_NON_POSITIVE_PARAMETER;
    case ErrorCode::NonPositiveArgument: return NSG_NON_POSITIVE_ARGUMENT;
    case ErrorCode::CutoffTooSmall: return NSG_CUTOFF_TOO_SMALL;
    case ErrorCode::PrecisionUnreachable: return NSG_PRECISION_UNREACHABLE;
    case ErrorCode::DegenerateFacet: return NSG_DEGENERATE_FACET;
    case ErrorCode::ParseError: return NSG_PARSE_ERROR;
    case ErrorCode::InvalidArgument: return NSG_INVALID_ARGUMENT;
    case ErrorCode::Overflow: return NSG_OVERFLOW;
  }
  return NSG_INTERNAL_ERROR;
}

nsg_status guarded(const std::function<void()>& body) {
  try {
    body();
    last_error.clear();
    return NSG_OK;
  } catch (const nsegre::Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  }
  return NSG_INTERNAL_ERROR;
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void* p, const char* what) {
  if (!p) throw nsegre::Error(nsegre::ErrorCode::InvalidArgument, std::string(what) + " is null");
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto end = text.find(sep, start);
    parts.push_back(text.substr(start, end - start));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return parts;
}

nsegre::EstimatorConfig to_config(const nsg_ideal* ideal, const nsg_estimate_config* c) {
  require(c, "config");
  require(c->x, "config.x");
  nsegre::EstimatorConfig cfg;
  cfg.m = c->m;
  for (const auto& part : split(c->x, ',')) cfg.x.push_back(nsegre::parse_rational(part));
  if (cfg.x.size() != ideal->ideal.dimension())
    throw nsegre::Error(nsegre::ErrorCode::DimensionMismatch, "--X needs one value per variable");
  cfg.mode = c->mode == NSG_MODE_LCT ? nsegre::ConditionMode::LctBased : nsegre::ConditionMode::MembershipBased;
  if (c->cutoff > 0) cfg.ray_cutoff = c->cutoff;
  cfg.arithmetic = c->exact ? nsegre::Arithmetic::ExactRational : nsegre::Arithmetic::Float64;
  cfg.threads = c->threads == 0 ? 1 : c->threads;
  if (c->tolerance > 0) cfg.tolerance = c->tolerance;
  return cfg;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

extern "C" {

const char* nsg_status_name(nsg_status status) {
  switch (status) {
    case NSG_OK: return "Ok";
    case NSG_ZERO_GENERATOR: return "ZeroGenerator";
    case NSG_DIMENSION_MISMATCH: return "DimensionMismatch";
    case NSG_NEGATIVE_COORDINATE: return "NegativeCoordinate";
    case NSG_AMBIENT_TOO_SMALL: return "AmbientTooSmall";
    case NSG_NON_POSITIVE_PARAMETER: return "NonPositiveParameter";
    case NSG_NON_POSITIVE_ARGUMENT: return "NonPositiveArgument";
    case NSG_CUTOFF_TOO_SMALL: return "CutoffTooSmall";
    case NSG_PRECISION_UNREACHABLE: return "PrecisionUnreachable";
    case NSG_DEGENERATE_FACET: return "DegenerateFacet";
    case NSG_PARSE_ERROR: return "ParseError";
    case NSG_INVALID_ARGUMENT: return "InvalidArgument";
    case NSG_OVERFLOW: return "Overflow";
    case NSG_INTERNAL_ERROR: return "InternalError";
  }
  return "Unknown";
}

const char* nsg_last_error(void) { return last_error.c_str(); }

void nsg_string_free(char* s) { std::free(s); }

nsg_status nsg_ideal_parse(const char* text, size_t n_override, nsg_ideal** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    std::optional<std::size_t> n;
    if (n_override > 0) n = n_override;
    *out = new nsg_ideal{nsegre::parse_ideal(text, n)};
  });
}

nsg_status nsg_ideal_from_exponents(size_t n, size_t count, const int64_t* exponents, nsg_ideal** out) {
  return guarded([&] {
    require(out, "out");
    if (count > 0) require(exponents, "exponents");
    std::vector<nsegre::ExponentVector> gens;
    for (size_t i = 0; i < count; ++i) gens.emplace_back(exponents + i * n, exponents + (i + 1) * n);
    *out = new nsg_ideal{nsegre::MonomialIdeal::make(n, std::move(gens))};
  });
}

void nsg_ideal_free(nsg_ideal* ideal) { delete ideal; }

size_t nsg_ideal_dimension(const nsg_ideal* ideal) { return ideal ? ideal->ideal.dimension() : 0; }

nsg_status nsg_ideal_to_text(const nsg_ideal* ideal, char** out) {
  return guarded([&] {
    require(ideal, "ideal");
    require(out, "out");
    *out = duplicate(nsegre::format_ideal(ideal->ideal));
  });
}

nsg_status nsg_ideal_to_json(const nsg_ideal* ideal, char** out) {
  return guarded([&] {
    require(ideal, "ideal");
    require(out, "out");
    *out = duplicate(nsegre::ideal_to_json(ideal->ideal).dump());
  });
}

nsg_status nsg_lct_json(const nsg_ideal* ideal, char** out) {
  return guarded([&] {
    require(ideal, "ideal");
    require(out, "out");
    const nsegre::Rational value = nsegre::lct(ideal->ideal);
    const nlohmann::json doc = {{"lct", nsegre::to_string(value)},
                                {"sigma", nsegre::to_string(nsegre::Rational(1) / value)}};
    *out = duplicate(doc.dump());
  });
}

nsg_status nsg_segre_json(const nsg_ideal* ideal, int ambient_dim, char** out) {
  return guarded([&] {
    require(ideal, "ideal");
    require(out, "out");
    const int ambient = ambient_dim < 0 ? static_cast<int>(ideal->ideal.dimension()) : ambient_dim;
    *out = duplicate(nsegre::segre_to_json(nsegre::segre_class(ideal->ideal, ambient)).dump());
  });
}

nsg_status nsg_diagram_json(const nsg_ideal* ideal, char** out) {
  return guarded([&] {
    require(ideal, "ideal");
    require(out, "out");
    *out = duplicate(nsegre::polyhedron_to_json(nsegre::newton_polyhedron(ideal->ideal)).dump());
  });
}

nsg_status nsg_diagram_svg(const nsg_ideal* ideal, char** out) {
  return guarded([&] {
    require(ideal, "ideal");
    require(out, "out");
    *out = duplicate(nsegre::staircase_svg(ideal->ideal, nsegre::newton_polyhedron(ideal->ideal)));
  });
}

nsg_status nsg_estimate_json(const nsg_ideal* ideal, const nsg_estimate_config* config, char** out) {
  return guarded([&] {
    require(ideal, "ideal");
    require(out, "out");
    const nsegre::EstimatorConfig cfg = to_config(ideal, config);
    const nsegre::EstimateResult r = nsegre::estimate(ideal->ideal, cfg);
    // The bias is first order in 1/m, so |S(m) - S(m/2)| estimates it.
    nsegre::EstimatorConfig half = cfg;
    half.m = std::max<nsegre::Exponent>(1, cfg.m / 2);
    half.tolerance.reset();
    if (half.ray_cutoff && *half.ray_cutoff < half.m) half.ray_cutoff = half.m;
    const nsegre::EstimateResult coarse = nsegre::estimate(ideal->ideal, half);

    nlohmann::json doc;
    doc["m"] = cfg.m;
    doc["value"] = format_double(r.value);
    if (r.exact) doc["exact"] = nsegre::to_string(*r.exact);
    doc["tail_bound"] = format_double(r.tail_bound);
    doc["error_estimate"] = format_double(std::fabs(r.value - coarse.value) + r.tail_bound);
    doc["points"] = r.points;
    doc["fibers"] = r.fibers;
    *out = duplicate(doc.dump());
  });
}

nsg_status nsg_convergence_csv(const nsg_ideal* ideal, const nsg_estimate_config* config, const int64_t* m_list,
                               size_t count, char** out) {
  return guarded([&] {
    require(ideal, "ideal");
    require(out, "out");
    require(m_list, "m_list");
    const nsegre::EstimatorConfig cfg = to_config(ideal, config);
    const auto rows = nsegre::convergence_report(ideal->ideal, cfg, std::span<const int64_t>(m_list, count));
    *out = duplicate(nsegre::convergence_csv(rows));
  });
}

nsg_status nsg_verify_csv(const char* identity, const char* params, const int64_t* m_list, size_t count, char** out) {
  return guarded([&] {
    require(identity, "identity");
    require(params, "params");
    require(m_list, "m_list");
    require(out, "out");
    std::map<std::string, double> p;
    for (const auto& item : split(params, ',')) {
      if (item.empty()) continue;
      const auto eq = item.find('=');
      if (eq == std::string::npos)
        throw nsegre::Error(nsegre::ErrorCode::ParseError, "parameter '" + item + "' is not key=value");
      p[item.substr(0, eq)] = nsegre::parse_rational(item.substr(eq + 1)).get_d();
    }
    auto get = [&](const char* key) {
      auto it = p.find(key);
      if (it == p.end()) throw nsegre::Error(nsegre::ErrorCode::InvalidArgument, std::string("missing parameter ") + key);
      return it->second;
    };
    auto integer = [&](const char* key) {
      const double v = get(key);
      if (v != std::floor(v) || v < 1)
        throw nsegre::Error(nsegre::ErrorCode::InvalidArgument, std::string(key) + " must be a positive integer");
      return static_cast<std::int64_t>(v);
    };
    const double tol = p.count("tol") ? p["tol"] : 1e-3;
    // Smallest a1 cutoff whose estimated tail m X2 / (X1^2 cutoff) is below tol/10.
    auto cutoff_for = [&](std::int64_t m, std::int64_t floor, double x1, double x2) {
      if (p.count("cutoff")) return static_cast<std::int64_t>(p["cutoff"]);
      const double want = 11.0 * static_cast<double>(m) * x2 / (x1 * x1 * tol);
      return std::max(floor, static_cast<std::int64_t>(std::ceil(want)));
    };

    const std::string id = identity;
    std::string csv = "m,value,target,abs_error\r\n";
    for (size_t i = 0; i < count; ++i) {
      const std::int64_t m = m_list[i];
      double value = 0, target = 0;
      if (id == "power") {
        const auto ell = integer("ell");
        const double x = get("X");
        value = nsegre::verify_power_identity(ell, x, m);
        target = 1.0 / (1.0 + ell * x);
      } else if (id == "two-var") {
        const auto ell = integer("ell");
        const double x1 = get("X1"), x2 = get("X2");
        value = nsegre::verify_two_variable_identity(ell, x1, x2, m, cutoff_for(m, m * ell, x1, x2), tol);
        target = ell * x1 / (1.0 + ell * x1);
      } else if (id == "diagonal") {
        const auto l1 = integer("ell1"), l2 = integer("ell2");
        const double x1 = get("X1"), x2 = get("X2");
        value = nsegre::verify_diagonal_identity(l1, l2, x1, x2, m, cutoff_for(m, m * l1, x1, x2), tol);
        target = l1 * l2 * x1 * x2 / ((1.0 + l1 * x1) * (1.0 + l2 * x2));
      } else {
        throw nsegre::Error(nsegre::ErrorCode::InvalidArgument, "unknown identity '" + id + "'");
      }
      csv += std::to_string(m) + ',' + format_double(value) + ',' + format_double(target) + ',' +
             format_double(std::fabs(value - target)) + "\r\n";
    }
    *out = duplicate(csv);
  });
}

nsg_status nsg_polygamma(int r, double x, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = nsegre::polygamma(r, x);
  });
}

}  // extern "C"
