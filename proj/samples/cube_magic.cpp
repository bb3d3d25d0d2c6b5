// Checks the bundled 4x4x4 magic tours, then lets the search finish a magic
// tour from the first sixteen moves of the closed one.

#include <iostream>

#include "ndkt/ndkt.hpp"

int main() {
  for (const char* id : {"fig2", "fig3"}) {
    const auto grid = ndkt::find_corpus_entry(id)->grid();
    ndkt::MagicOptions options;
    options.include_diagonals = true;
    std::cout << id << ' ' << ndkt::to_key_values(ndkt::magic_report(grid, options)) << '\n';
  }

  const auto closed = ndkt::tour_from_grid(ndkt::find_corpus_entry("fig2")->grid());
  ndkt::SearchConfig config;
  config.prefix.assign(closed.sequence().begin(), closed.sequence().begin() + 16);
  const auto outcome = ndkt::find_magic_tour(closed.shape(), config);
  std::cout << ndkt::to_key_values(outcome) << '\n';
  if (outcome.tour) std::cout << ndkt::write_tour_file(ndkt::grid_from_tour(*outcome.tour));
  return outcome.tour ? 0 : 1;
}
