#pragma once
#include <cstdint>
#include <random>
#include <vector>

#include "newton_segre/monomial.hpp"
#include "newton_segre/rational.hpp"

namespace testing_support {

inline nsegre::MonomialIdeal random_ideal(std::mt19937_64& rng, std::size_t n, std::size_t max_gens,
                                          nsegre::Exponent max_exp) {
  std::uniform_int_distribution<std::size_t> count(1, max_gens);
  std::uniform_int_distribution<nsegre::Exponent> exp(0, max_exp);
  while (true) {
    std::vector<nsegre::ExponentVector> gens;
    const std::size_t k = count(rng);
    for (std::size_t i = 0; i < k; ++i) {
      nsegre::ExponentVector v(n);
      bool nonzero = false;
      for (auto& e : v) nonzero |= (e = exp(rng)) != 0;
      if (nonzero) gens.push_back(v);
    }
    if (!gens.empty()) return nsegre::MonomialIdeal::make(n, gens);
  }
}

inline nsegre::Rational random_rational(std::mt19937_64& rng, long max_num, long max_den) {
  std::uniform_int_distribution<long> num(0, max_num), den(1, max_den);
  return nsegre::make_rational(num(rng), den(rng));
}

}  // namespace testing_support
