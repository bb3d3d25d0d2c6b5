// Searches the smallest boards in 2..5 dimensions that carry a tour and prints
// each one in ndkt v1 format.

#include <iostream>

#include "ndkt/ndkt.hpp"

int main() {
  struct Case {
    const char* shape;
    ndkt::Mode mode;
  };
  const Case cases[] = {
      {"3x4", ndkt::Mode::open},
      {"3x4x2", ndkt::Mode::closed},
      {"3x4x2x2", ndkt::Mode::closed},
      {"3x4x2x2x2", ndkt::Mode::closed},
  };
  for (const auto& c : cases) {
    ndkt::SearchConfig config;
    config.mode = c.mode;
    const auto shape = ndkt::Shape::parse(c.shape);
    const auto outcome = ndkt::find_tour(shape, config);
    std::cout << "# " << c.shape << ' ' << ndkt::to_key_values(outcome) << '\n';
    if (outcome.tour) std::cout << ndkt::write_tour_file(ndkt::grid_from_tour(*outcome.tour)) << '\n';
  }
}
