#include "newton_segre/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <map>

#include "newton_segre/error.hpp"

namespace nsegre {

namespace {

class TextParser {
 public:
  explicit TextParser(std::string_view text) : text_(text) {}

  std::vector<std::map<std::size_t, Exponent>> parse() {
    std::vector<std::map<std::size_t, Exponent>> gens;
    skip_space();
    if (at_end()) fail("empty ideal");
    while (true) {
      gens.push_back(monomial());
      skip_space();
      if (at_end()) break;
      if (peek() != ',') fail("expected ',' between generators");
      ++pos_;
      skip_space();
    }
    return gens;
  }

 private:
  std::map<std::size_t, Exponent> monomial() {
    std::map<std::size_t, Exponent> factors;
    bool any = false;
    while (true) {
      skip_space();
      if (at_end() || peek() == ',') break;
      if (any && peek() == '*') {
        ++pos_;
        skip_space();
      }
      if (at_end() || (peek() != 'x' && peek() != 'X')) fail("expected a variable x<index>");
      ++pos_;
      const std::size_t start = pos_;
      const auto index = number();
      if (index == 0) fail_at(start, "variable indices start at 1");
      Exponent e = 1;
      skip_space();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_space();
        e = number();
      }
      Exponent& slot = factors[static_cast<std::size_t>(index)];
      if (__builtin_add_overflow(slot, e, &slot)) throw Error(ErrorCode::Overflow, "exponent overflows");
      any = true;
    }
    if (!any) fail("expected a monomial");
    return factors;
  }

  Exponent number() {
    const std::size_t start = pos_;
    Exponent v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      if (__builtin_mul_overflow(v, Exponent{10}, &v) || __builtin_add_overflow(v, Exponent{peek() - '0'}, &v))
        throw Error(ErrorCode::Overflow, "integer too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    return v;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const { fail_at(pos_, what); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& what) const {
    throw ParseError(at, what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

MonomialIdeal parse_ideal_text(std::string_view text, std::optional<std::size_t> n_override) {
  auto parsed = TextParser(text).parse();
  std::size_t n = 0;
  for (const auto& g : parsed)
    for (const auto& [index, e] : g) n = std::max(n, index);
  if (n_override) {
    if (*n_override < n)
      throw Error(ErrorCode::DimensionMismatch, "--n is smaller than the highest variable index");
    n = *n_override;
  }
  std::vector<ExponentVector> gens;
  for (const auto& g : parsed) {
    ExponentVector v(n, 0);
    for (const auto& [index, e] : g) v[index - 1] = e;
    gens.push_back(std::move(v));
  }
  return MonomialIdeal::make(n, std::move(gens));
}

MonomialIdeal parse_ideal_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.byte == 0 ? 0 : e.byte - 1, "invalid JSON");
  }
  try {
    const auto n = doc.at("n").get<std::size_t>();
    auto gens = doc.at("generators").get<std::vector<ExponentVector>>();
    return MonomialIdeal::make(n, std::move(gens));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("malformed ideal JSON: ") + e.what());
  }
}

MonomialIdeal parse_ideal(std::string_view text, std::optional<std::size_t> n_override) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    MonomialIdeal ideal = parse_ideal_json(text);
    if (n_override) {
      if (*n_override < ideal.dimension())
        throw Error(ErrorCode::DimensionMismatch, "--n is smaller than the ideal's dimension");
      return ideal.embed(*n_override);
    }
    return ideal;
  }
  return parse_ideal_text(text, n_override);
}

std::string format_ideal(const MonomialIdeal& ideal) {
  std::string out;
  for (const auto& g : ideal.generators()) {
    if (!out.empty()) out += ", ";
    bool first = true;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i] == 0) continue;
      if (!first) out += '*';
      first = false;
      out += 'x' + std::to_string(i + 1);
      if (g[i] != 1) out += '^' + std::to_string(g[i]);
    }
  }
  return out;
}

nlohmann::json ideal_to_json(const MonomialIdeal& ideal) {
  return {{"n", ideal.dimension()}, {"generators", ideal.generators()}};
}

namespace {

nlohmann::json rational_array(const std::vector<Rational>& values) {
  auto out = nlohmann::json::array();
  for (const auto& q : values) out.push_back(to_string(q));
  return out;
}

}  // namespace

nlohmann::json polyhedron_to_json(const NewtonPolyhedron& polyhedron) {
  auto facets = nlohmann::json::array();
  for (const auto& f : polyhedron.facets())
    facets.push_back({{"normal", rational_array(f.normal)},
                      {"offset", to_string(f.offset)},
                      {"kind", f.is_diagram() ? "diagram" : "coordinate"}});
  return {{"n", polyhedron.dimension()}, {"extreme_points", polyhedron.extreme_points()}, {"facets", facets}};
}

nlohmann::json pushforward_to_json(const SegreClassResult& result) { return rational_array(result.pushforward); }

nlohmann::json segre_to_json(const SegreClassResult& result) {
  std::vector<std::pair<TruncatedSeries::Monomial, Rational>> terms(result.multivariate.terms().begin(),
                                                                    result.multivariate.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    const int da = total_degree(a.first), db = total_degree(b.first);
    if (da != db) return da < db;
    return a.first > b.first;
  });
  auto multivariate = nlohmann::json::array();
  for (const auto& [exp, coeff] : terms) multivariate.push_back({{"exp", exp}, {"coeff", to_string(coeff)}});
  return {{"ambient_dim", result.ambient_dim},
          {"pushforward", pushforward_to_json(result)},
          {"multivariate", multivariate},
          {"pieces", result.pieces.size()}};
}

std::string staircase_svg(const MonomialIdeal& ideal, const NewtonPolyhedron& polyhedron) {
  if (ideal.dimension() != 2) throw Error(ErrorCode::InvalidArgument, "staircase pictures need n = 2");
  Exponent extent = 1;
  for (const auto& g : ideal.generators()) extent = std::max({extent, g[0], g[1]});
  extent += 1;
  const double cell = 360.0 / static_cast<double>(extent), margin = 20.0, size = 400.0;
  auto sx = [&](double v) { return margin + v * cell; };
  auto sy = [&](double v) { return size - margin - v * cell; };
  char buf[256];
  std::string out =
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"400\" viewBox=\"0 0 400 400\">\n";
  std::snprintf(buf, sizeof buf,
                "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"black\"/>\n"
                "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"black\"/>\n",
                sx(0), sy(0), sx(static_cast<double>(extent)), sy(0), sx(0), sy(0), sx(0),
                sy(static_cast<double>(extent)));
  out += buf;

  // Staircase of the ideal: union of the orthants above each generator.
  auto gens = ideal.generators();
  std::sort(gens.begin(), gens.end(), [](const auto& a, const auto& b) { return a[0] < b[0]; });
  std::string path;
  const double top = static_cast<double>(extent);
  std::snprintf(buf, sizeof buf, "M %.2f %.2f", sx(static_cast<double>(gens[0][0])), sy(top));
  path += buf;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const double x = static_cast<double>(gens[i][0]), y = static_cast<double>(gens[i][1]);
    const double next_x = i + 1 < gens.size() ? static_cast<double>(gens[i + 1][0]) : top;
    std::snprintf(buf, sizeof buf, " L %.2f %.2f L %.2f %.2f", sx(x), sy(y), sx(next_x), sy(y));
    path += buf;
  }
  out += "<path d=\"" + path + "\" fill=\"none\" stroke=\"#888\"/>\n";

  // Newton diagram: bounded edges of the polyhedron between extreme points.
  for (const auto& f : polyhedron.diagram_facets()) {
    std::vector<const ExponentVector*> on;
    for (const auto& v : polyhedron.extreme_points())
      if (f.normal[0] * v[0] + f.normal[1] * v[1] == f.offset) on.push_back(&v);
    if (on.size() == 2) {
      std::snprintf(buf, sizeof buf,
                    "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"#c03\" stroke-width=\"2\"/>\n",
                    sx(static_cast<double>((*on[0])[0])), sy(static_cast<double>((*on[0])[1])),
                    sx(static_cast<double>((*on[1])[0])), sy(static_cast<double>((*on[1])[1])));
      out += buf;
    }
  }
  for (const auto& v : polyhedron.extreme_points()) {
    std::snprintf(buf, sizeof buf, "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"3\" fill=\"#c03\"/>\n",
                  sx(static_cast<double>(v[0])), sy(static_cast<double>(v[1])));
    out += buf;
  }
  out += "</svg>\n";
  return out;
}

}  // namespace nsegre
