#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "newton_segre/monomial.hpp"
#include "newton_segre/polyhedron.hpp"
#include "newton_segre/segre.hpp"

namespace nsegre {

// "x1^2, x1*x2", "x1^2 x2", "x1x2^3". n is the highest variable index unless
// `n_override` is given (it must not be smaller). Throws ParseError with a
// byte position, ZeroGenerator, DimensionMismatch.
MonomialIdeal parse_ideal_text(std::string_view text, std::optional<std::size_t> n_override = {});

// {"n": 2, "generators": [[2,0],[1,1]]}
MonomialIdeal parse_ideal_json(std::string_view text);

// Dispatches on a leading '{'.
MonomialIdeal parse_ideal(std::string_view text, std::optional<std::size_t> n_override = {});

std::string format_ideal(const MonomialIdeal& ideal);
nlohmann::json ideal_to_json(const MonomialIdeal& ideal);

nlohmann::json polyhedron_to_json(const NewtonPolyhedron& polyhedron);
nlohmann::json segre_to_json(const SegreClassResult& result);
nlohmann::json pushforward_to_json(const SegreClassResult& result);

// Staircase picture for n = 2 (InvalidArgument otherwise).
std::string staircase_svg(const MonomialIdeal& ideal, const NewtonPolyhedron& polyhedron);

}  // namespace nsegre
