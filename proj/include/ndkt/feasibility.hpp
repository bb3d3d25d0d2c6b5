#pragma once

// Existence predicates for closed tours and magic tours. Every verdict says
// whether it rests on a theorem, a conjecture, or a bundled example.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ndkt/error.hpp"
#include "ndkt/lattice.hpp"

namespace ndkt {

enum class Answer { impossible, possible, unknown };

inline const char* to_string(Answer a) {
  switch (a) {
    case Answer::impossible: return "impossible";
    case Answer::possible: return "possible";
    case Answer::unknown: return "unknown";
  }
  return "?";
}

struct Provenance {
  enum class Kind { proven, conjectured, established_by_example, open };
  Kind kind = Kind::open;
  std::string rule;  // rule name, or corpus id for established_by_example
};

inline const char* to_string(Provenance::Kind k) {
  switch (k) {
    case Provenance::Kind::proven: return "proven";
    case Provenance::Kind::conjectured: return "conjectured";
    case Provenance::Kind::established_by_example: return "established-by-example";
    case Provenance::Kind::open: return "open";
  }
  return "?";
}

inline std::string to_string(const Provenance& p) {
  if (p.rule.empty()) return to_string(p.kind);
  return std::string(to_string(p.kind)) + "(" + p.rule + ")";
}

struct FeasibilityVerdict {
  Answer answer = Answer::unknown;
  Provenance provenance;
  std::string citation;
  std::optional<std::string> corroborated_by;  // corpus id of a bundled tour on this shape
};

inline std::string to_key_values(const FeasibilityVerdict& v) {
  std::string out = std::string("answer=") + to_string(v.answer) + " provenance=" + to_string(v.provenance);
  if (v.corroborated_by) out += " corroborated_by=" + *v.corroborated_by;
  return out;
}

namespace detail {

inline FeasibilityVerdict verdict(Answer a, Provenance::Kind k, std::string rule, std::string citation) {
  return FeasibilityVerdict{a, Provenance{k, std::move(rule)}, std::move(citation), std::nullopt};
}

inline bool all_odd(const std::vector<int>& e) {
  return std::all_of(e.begin(), e.end(), [](int x) { return x % 2 == 1; });
}

// Schwenk: an m x n board (m <= n) has a closed tour unless both are odd,
// m is 1, 2 or 4, or m = 3 and n is 4, 6 or 8.
inline FeasibilityVerdict schwenk(int m, int n) {
  const std::string board = std::to_string(m) + "x" + std::to_string(n);
  if (m % 2 == 1 && n % 2 == 1)
    return verdict(Answer::impossible, Provenance::Kind::proven, "schwenk-a",
                   "Schwenk (1991), condition (a): " + board + " has both sides odd");
  if (m == 1 || m == 2 || m == 4)
    return verdict(Answer::impossible, Provenance::Kind::proven, "schwenk-b",
                   "Schwenk (1991), condition (b): shorter side " + std::to_string(m) + " is 1, 2 or 4");
  if (m == 3 && (n == 4 || n == 6 || n == 8))
    return verdict(Answer::impossible, Provenance::Kind::proven, "schwenk-c",
                   "Schwenk (1991), condition (c): 3 x n with n in {4, 6, 8}");
  return verdict(Answer::possible, Provenance::Kind::proven, "schwenk",
                 "Schwenk (1991): " + board + " meets none of the exclusions");
}

// DeMaio and Mathew for i <= j <= k, all >= 2.
inline FeasibilityVerdict demaio_mathew(int i, int j, int k) {
  if (i % 2 == 1 && j % 2 == 1 && k % 2 == 1)
    return verdict(Answer::impossible, Provenance::Kind::proven, "demaio-mathew-a",
                   "DeMaio and Mathew (2011), condition (a): all three extents odd");
  if (i == 2 && j == 2)
    return verdict(Answer::impossible, Provenance::Kind::proven, "demaio-mathew-b",
                   "DeMaio and Mathew (2011), condition (b): i = j = 2");
  if (i == 2 && j == 3 && k == 3)
    return verdict(Answer::impossible, Provenance::Kind::proven, "demaio-mathew-c",
                   "DeMaio and Mathew (2011), condition (c): i = 2 and j = k = 3");
  return verdict(Answer::possible, Provenance::Kind::proven, "demaio-mathew",
                 "DeMaio and Mathew (2011): meets none of the exclusions");
}

// Conjectured conditions for d >= 4 extents, all >= 2, sorted ascending.
inline FeasibilityVerdict conjectured(const std::vector<int>& e) {
  const std::size_t d = e.size();
  const std::string name = d == 4 ? "conjecture-1" : d == 5 ? "conjecture-2" : "conjecture-3";
  const std::string who = "closed-tour " + name + " for " + std::to_string(d) + "D";
  if (all_odd(e))
    return verdict(Answer::impossible, Provenance::Kind::proven, "parity-odd-cells",
                   "odd cell count: first and last cells share a colour, so they are never a knight move apart");
  const bool leading_twos = std::all_of(e.begin(), e.end() - 1, [](int x) { return x == 2; });
  if (leading_twos)
    return verdict(Answer::impossible, Provenance::Kind::conjectured, name + "-b",
                   who + ", condition (b): the " + std::to_string(d - 1) + " smallest extents are 2");
  const bool twos_then_threes =
      std::all_of(e.begin(), e.end() - 2, [](int x) { return x == 2; }) && e[d - 2] == 3 && e[d - 1] == 3;
  if (twos_then_threes)
    return verdict(Answer::impossible, Provenance::Kind::conjectured, name + "-c",
                   who + ", condition (c): " + std::to_string(d - 2) + " extents of 2 and two of 3");
  return verdict(Answer::possible, Provenance::Kind::conjectured, name,
                 who + ": meets none of the exclusions");
}

}  // namespace detail

// Shape ids of bundled closed tours; kept here so verdicts can point at them.
inline std::optional<std::string> closed_tour_example(std::vector<int> sorted_extents) {
  if (sorted_extents == std::vector<int>{2, 2, 3, 4}) return "fig6";
  if (sorted_extents == std::vector<int>{2, 2, 2, 3, 4}) return "fig8";
  if (sorted_extents == std::vector<int>{4, 4, 4}) return "fig2";
  if (sorted_extents == std::vector<int>{6, 6}) return "fig1b";
  return std::nullopt;
}

// Closed-tour existence. Extents of 1 are inert and stripped first; what is
// left is judged by Schwenk (2D), DeMaio-Mathew (3D) or the conjectured
// extension of their exclusions (4D and up). Order of extents never matters.
inline FeasibilityVerdict closed_tour_feasible(const Shape& shape) {
  std::vector<int> e;
  for (int x : shape.extents())
    if (x > 1) e.push_back(x);
  std::sort(e.begin(), e.end());

  FeasibilityVerdict v;
  if (e.size() <= 2) {
    // 1 x n and 1 x 1 fall under Schwenk's m = 1 clause.
    const int m = e.size() == 2 ? e[0] : 1;
    const int n = e.size() == 2 ? e[1] : e.size() == 1 ? e[0] : 1;
    v = detail::schwenk(m, n);
  } else if (e.size() == 3) {
    v = detail::demaio_mathew(e[0], e[1], e[2]);
  } else {
    v = detail::conjectured(e);
  }
  if (v.answer == Answer::possible) v.corroborated_by = closed_tour_example(e);
  return v;
}

// Magic-tour existence on an order-m, d-dimensional hypercube.
inline FeasibilityVerdict magic_tour_feasible(int order, int dimension) {
  if (order < 1 || dimension < 2) throw InputError("magic_tour_feasible needs order >= 1 and dimension >= 2");
  using detail::verdict;
  using K = Provenance::Kind;
  if (order == 1)
    return verdict(Answer::possible, K::proven, "single-cell", "a one-cell board is trivially a magic tour");
  if (order % 2 == 1)
    return verdict(Answer::impossible, K::proven, "odd-order-magic",
                   "odd order: numbers alternate parity along the tour, and neighbouring parallel lines hold "
                   "(m+1)/2 and (m-1)/2 cells of the odd-numbered colour, so their sums differ in parity");
  if (order % 4 == 2 && dimension == 2)
    return verdict(Answer::impossible, K::proven, "jelliss-singly-even",
                   "Jelliss (2003): no magic knight's tour on a plane board with singly-even sides");
  if (order == 2)
    return verdict(Answer::impossible, K::proven, "no-knight-moves",
                   "every extent is 2, so no axis admits the 2-step of a knight move");
  if (order == 4 && dimension >= 3 && dimension <= 5) {
    const char* id = dimension == 3 ? "fig2" : dimension == 4 ? "fig9" : "fig10";
    return verdict(Answer::possible, K::established_by_example, id,
                   std::string("bundled magic tour ") + id + " on the order-4 " + std::to_string(dimension) +
                       "D hypercube");
  }
  return verdict(Answer::unknown, K::open, "", "no theorem or bundled example covers this case");
}

// All shapes with `dimension` axes, extents in [lo, hi] sorted ascending.
inline std::vector<Shape> shape_family(std::size_t dimension, int lo, int hi) {
  std::vector<Shape> out;
  std::vector<int> e(dimension, lo);
  while (true) {
    out.emplace_back(e);
    std::size_t k = dimension;
    while (k > 0 && e[k - 1] == hi) --k;
    if (k == 0) break;
    const int next = e[k - 1] + 1;
    for (std::size_t i = k - 1; i < dimension; ++i) e[i] = next;
  }
  return out;
}

enum class Observed { exists, not_exists, skipped_over_budget, search_budget_exceeded };

inline const char* to_string(Observed o) {
  switch (o) {
    case Observed::exists: return "exists";
    case Observed::not_exists: return "not-exists";
    case Observed::skipped_over_budget: return "skipped";
    case Observed::search_budget_exceeded: return "budget-exceeded";
  }
  return "?";
}

struct ConjectureCheck {
  Shape shape;
  FeasibilityVerdict predicted;
  Observed observed;

  // Only a definite observation can disagree.
  bool disagrees() const {
    if (observed == Observed::exists) return predicted.answer == Answer::impossible;
    if (observed == Observed::not_exists) return predicted.answer == Answer::possible;
    return false;
  }
};

// Compares closed_tour_feasible against a search for each shape. The hook
// returns true/false for exists/not-exists and nullopt when it ran out of
// budget. Shapes above the cell budget are flagged and not searched.
template <class SearchHook>
std::vector<ConjectureCheck> verify_conjecture(const std::vector<Shape>& shapes, std::uint64_t cell_budget,
                                               SearchHook&& hook) {
  std::vector<ConjectureCheck> out;
  for (const Shape& shape : shapes) {
    ConjectureCheck check{shape, closed_tour_feasible(shape), Observed::skipped_over_budget};
    if (shape.cell_count() <= cell_budget) {
      const std::optional<bool> exists = hook(shape);
      check.observed = !exists ? Observed::search_budget_exceeded : *exists ? Observed::exists : Observed::not_exists;
    }
    out.push_back(std::move(check));
  }
  return out;
}

inline std::vector<ConjectureCheck> disagreements(const std::vector<ConjectureCheck>& checks) {
  std::vector<ConjectureCheck> out;
  for (const auto& c : checks)
    if (c.disagrees()) out.push_back(c);
  return out;
}

}  // namespace ndkt
