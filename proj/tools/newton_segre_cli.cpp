// Command-line front end; talks to the library only through the C API.
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "newton_segre/newton_segre.h"

namespace {

struct Failure {
  std::string code;
  std::string message;
};

void check(nsg_status status) {
  if (status != NSG_OK) throw Failure{nsg_status_name(status), nsg_last_error()};
}

using IdealPtr = std::unique_ptr<nsg_ideal, decltype(&nsg_ideal_free)>;

// "@path" reads the ideal from a file.
IdealPtr load_ideal(const std::string& arg, std::size_t n) {
  std::string text = arg;
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw Failure{"InvalidArgument", "cannot read " + arg.substr(1)};
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  nsg_ideal* raw = nullptr;
  check(nsg_ideal_parse(text.c_str(), n, &raw));
  return IdealPtr(raw, nsg_ideal_free);
}

std::string take(char* s) {
  std::string out(s);
  nsg_string_free(s);
  return out;
}

unsigned default_threads() {
  if (const char* env = std::getenv("NEWTON_SEGRE_THREADS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return 1;
}

int emit_error(const std::string& code, const std::string& message) {
  std::cout << nlohmann::json{{"error", code}, {"message", message}}.dump() << '\n';
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Newton polyhedra, log canonical thresholds and Segre classes of monomial ideals"};
  app.require_subcommand(1);

  std::string ideal_arg;
  std::size_t n = 0;

  auto* lct_cmd = app.add_subcommand("lct", "log canonical threshold");
  lct_cmd->add_option("ideal", ideal_arg, "ideal as text, JSON, or @file")->required();
  lct_cmd->add_option("--n", n, "number of variables");

  int ambient = -1;
  auto* segre_cmd = app.add_subcommand("segre", "exact Segre class");
  segre_cmd->add_option("ideal", ideal_arg, "ideal as text, JSON, or @file")->required();
  segre_cmd->add_option("--ambient", ambient, "ambient projective dimension (default n)");
  segre_cmd->add_option("--n", n, "number of variables");

  std::int64_t m = 0;
  std::vector<std::int64_t> m_list;
  std::string x_arg, mode = "membership", arith = "float";
  std::int64_t cutoff = 0;
  unsigned threads = default_threads();
  double tolerance = 0;
  auto* est_cmd = app.add_subcommand("estimate", "lattice-sum estimate of the Segre class value");
  est_cmd->add_option("ideal", ideal_arg, "ideal as text, JSON, or @file")->required();
  auto* m_opt = est_cmd->add_option("--m", m, "refinement parameter");
  auto* ml_opt = est_cmd->add_option("--m-list", m_list, "comma-separated m values (CSV output)")->delimiter(',');
  m_opt->excludes(ml_opt);
  est_cmd->add_option("--X", x_arg, "comma-separated positive rationals")->required();
  est_cmd->add_option("--mode", mode, "membership or lct")->check(CLI::IsMember({"membership", "lct"}));
  est_cmd->add_option("--cutoff", cutoff, "ray cutoff (default 10 m^2)");
  est_cmd->add_option("--threads", threads, "worker threads (default $NEWTON_SEGRE_THREADS or 1)");
  est_cmd->add_option("--arith", arith, "float or exact")->check(CLI::IsMember({"float", "exact"}));
  est_cmd->add_option("--tol", tolerance, "fail if the truncation tail exceeds this");
  est_cmd->add_option("--n", n, "number of variables");

  std::string identity, params;
  std::vector<std::int64_t> verify_m;
  auto* verify_cmd = app.add_subcommand("verify", "polygamma identity checks");
  verify_cmd->add_option("--identity", identity, "power, two-var or diagonal")
      ->required()
      ->check(CLI::IsMember({"power", "two-var", "diagonal"}));
  verify_cmd->add_option("--params", params, "key=value list, e.g. ell=2,X=1/2")->required();
  verify_cmd->add_option("--m-list", verify_m, "comma-separated m values")->required()->delimiter(',');

  std::string svg_path;
  auto* diagram_cmd = app.add_subcommand("diagram", "extreme points and facets of the Newton polyhedron");
  diagram_cmd->add_option("ideal", ideal_arg, "ideal as text, JSON, or @file")->required();
  diagram_cmd->add_option("--svg", svg_path, "write the staircase picture here (n = 2)");
  diagram_cmd->add_option("--n", n, "number of variables");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    emit_error("InvalidArgument", e.what());
    return 2;
  }

  try {
    char* out = nullptr;
    if (lct_cmd->parsed()) {
      auto ideal = load_ideal(ideal_arg, n);
      check(nsg_lct_json(ideal.get(), &out));
      std::cout << take(out) << '\n';
    } else if (segre_cmd->parsed()) {
      auto ideal = load_ideal(ideal_arg, n);
      check(nsg_segre_json(ideal.get(), ambient, &out));
      std::cout << take(out) << '\n';
    } else if (est_cmd->parsed()) {
      auto ideal = load_ideal(ideal_arg, n);
      nsg_estimate_config cfg{};
      cfg.m = m;
      cfg.x = x_arg.c_str();
      cfg.mode = mode == "lct" ? NSG_MODE_LCT : NSG_MODE_MEMBERSHIP;
      cfg.cutoff = cutoff;
      cfg.exact = arith == "exact";
      cfg.threads = threads;
      cfg.tolerance = tolerance;
      if (!m_list.empty()) {
        check(nsg_convergence_csv(ideal.get(), &cfg, m_list.data(), m_list.size(), &out));
        std::cout << take(out);
      } else {
        if (m_opt->count() == 0) throw Failure{"InvalidArgument", "estimate needs --m or --m-list"};
        check(nsg_estimate_json(ideal.get(), &cfg, &out));
        std::cout << take(out) << '\n';
      }
    } else if (verify_cmd->parsed()) {
      check(nsg_verify_csv(identity.c_str(), params.c_str(), verify_m.data(), verify_m.size(), &out));
      std::cout << take(out);
    } else if (diagram_cmd->parsed()) {
      auto ideal = load_ideal(ideal_arg, n);
      check(nsg_diagram_json(ideal.get(), &out));
      auto doc = nlohmann::json::parse(take(out));
      if (nsg_ideal_dimension(ideal.get()) == 2) {
        check(nsg_diagram_svg(ideal.get(), &out));
        std::string svg = take(out);
        if (svg_path.empty()) {
          doc["svg"] = svg;
        } else {
          std::ofstream file(svg_path, std::ios::binary);
          if (!file) throw Failure{"InvalidArgument", "cannot write " + svg_path};
          file << svg;
        }
      } else if (!svg_path.empty()) {
        throw Failure{"InvalidArgument", "staircase pictures need n = 2"};
      }
      std::cout << doc.dump() << '\n';
    }
  } catch (const Failure& f) {
    return emit_error(f.code, f.message);
  }
  return 0;
}
