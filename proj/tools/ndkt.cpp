// ndkt: verify, search and analyze knight's tours on n-dimensional boards.
//
// Exit codes: 0 success / found / verified, 1 verification failed / not found /
// exhausted, 2 usage or input error.

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ndkt/ndkt.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ndkt::InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ndkt::InputError("cannot write '" + path + "'");
  out << text;
}

// "60s", "10m", "250ms", "1h" are wall-clock limits; a bare integer is a node limit.
ndkt::Budget parse_budget(const std::string& text) {
  ndkt::Budget b;
  if (text.empty()) return b;
  std::size_t digits = 0;
  while (digits < text.size() && std::isdigit(static_cast<unsigned char>(text[digits]))) ++digits;
  if (digits == 0) throw ndkt::InputError("bad budget '" + text + "'");
  const std::uint64_t value = std::stoull(text.substr(0, digits));
  const std::string unit = text.substr(digits);
  using namespace std::chrono;
  if (unit.empty()) b.nodes = value;
  else if (unit == "ms") b.wall = milliseconds(value);
  else if (unit == "s") b.wall = seconds(value);
  else if (unit == "m") b.wall = minutes(value);
  else if (unit == "h") b.wall = hours(value);
  else throw ndkt::InputError("bad budget unit in '" + text + "' (use ms, s, m, h or a plain node count)");
  return b;
}

unsigned default_jobs() {
  if (const char* env = std::getenv("NDKT_JOBS")) {
    try {
      return static_cast<unsigned>(std::max(1, std::stoi(env)));
    } catch (...) {
      std::cerr << "warning: ignoring NDKT_JOBS='" << env << "'\n";
    }
  }
  return 1;
}

void print_progress(const ndkt::Progress& p) {
  std::size_t deepest = 0;
  for (std::size_t d = 0; d < p.depth_histogram.size(); ++d)
    if (p.depth_histogram[d]) deepest = d;
  std::cerr << "progress nodes=" << p.nodes << " rate=" << static_cast<std::uint64_t>(p.nodes_per_second)
            << "/s elapsed_ms=" << std::chrono::duration_cast<std::chrono::milliseconds>(p.elapsed).count()
            << " deepest=" << deepest;
  if (!p.depth_histogram.empty()) {
    std::cerr << " depth_histogram=";
    bool first = true;
    for (std::size_t d = 0; d < p.depth_histogram.size(); ++d) {
      if (!p.depth_histogram[d]) continue;
      if (!first) std::cerr << ',';
      std::cerr << d << ':' << p.depth_histogram[d];
      first = false;
    }
  }
  std::cerr << '\n';
}

std::string axis_name(std::size_t axis) {
  static const char* names[] = {"x", "y", "z", "w", "v", "u"};
  return axis < 6 ? names[axis] : "a" + std::to_string(axis);
}

void print_verdict(const ndkt::FeasibilityVerdict& v) {
  std::cout << "answer      " << ndkt::to_string(v.answer) << '\n'
            << "provenance  " << ndkt::to_string(v.provenance) << '\n'
            << "citation    " << v.citation << '\n';
  if (v.corroborated_by) std::cout << "example     " << *v.corroborated_by << '\n';
  std::cout << ndkt::to_key_values(v) << '\n';
}

struct VerifyArgs {
  std::string file;
  bool magic = false;
  bool diagonals = false;
  bool quartiles = false;
  bool ratio_with_diagonals = false;
};

int run_verify(const VerifyArgs& a) {
  const ndkt::Grid grid = ndkt::parse_tour_file(read_file(a.file));
  const auto report = ndkt::validate(grid);
  std::cout << "shape    " << grid.shape().to_string() << " (" << grid.size() << " cells)\n";
  std::cout << "tour     " << (report.valid ? "valid" : "invalid");
  if (report.valid) std::cout << ", " << ndkt::to_string(report.closure);
  std::cout << '\n';
  if (report.first_violation) std::cout << "violation " << report.first_violation->reason << '\n';
  std::cout << "valid=" << (report.valid ? "true" : "false") << " closure=" << ndkt::to_string(report.closure) << '\n';
  bool ok = report.valid;

  if (a.magic || a.diagonals) {
    if (!report.valid && report.first_violation && report.first_violation->kind != ndkt::Violation::Kind::not_adjacent)
      return exit_failed;
    ndkt::MagicOptions options;
    options.include_diagonals = a.diagonals;
    if (a.ratio_with_diagonals) options.ratio_mode = ndkt::RatioMode::with_diagonals;
    const auto magic = ndkt::magic_report(grid, options);
    std::cout << ndkt::render_table(magic) << ndkt::to_key_values(magic) << '\n';
    if (a.magic) ok = ok && magic.is_magic.value_or(false);
    if (a.diagonals) ok = ok && magic.is_diagonally_magic.value_or(false);
    if (!magic.is_magic) std::cerr << "note: magic is undefined for non-cubic shapes; sums only\n";
  }
  if (a.quartiles) {
    const auto q = ndkt::quartile_report(grid);
    std::cout << ndkt::to_key_values(q) << '\n';
    ok = ok && q.balanced;
  }
  return ok ? exit_ok : exit_failed;
}

struct SearchArgs {
  std::string shape;
  std::string mode = "open";
  std::string budget;
  std::uint64_t seed = 0;
  bool exhaustive = false;
  std::string out;
  unsigned jobs = 1;
  std::string heuristic = "warnsdorff";
  bool force = false;
  bool verbose = false;
  std::string prefix_file;
  std::size_t prefix_steps = 0;
  bool quartiles = false;
};

std::vector<ndkt::Index> load_prefix(const SearchArgs& a, const ndkt::Shape& shape) {
  if (a.prefix_file.empty()) return {};
  const ndkt::Grid grid = ndkt::parse_tour_file(read_file(a.prefix_file));
  if (!(grid.shape() == shape)) throw ndkt::InputError("prefix file shape does not match --shape");
  const ndkt::Tour tour = ndkt::tour_from_grid(grid);
  const std::size_t steps = a.prefix_steps ? std::min(a.prefix_steps, tour.size()) : tour.size();
  return {tour.sequence().begin(), tour.sequence().begin() + static_cast<std::ptrdiff_t>(steps)};
}

int report_outcome(const ndkt::SearchOutcome& outcome, const SearchArgs& a, const ndkt::Shape& shape) {
  std::ostream& report = a.out.empty() ? std::cerr : std::cout;
  report << ndkt::to_key_values(outcome) << " shape=" << shape.to_string() << " mode=" << a.mode << '\n';
  std::cerr << "elapsed " << std::chrono::duration<double>(outcome.elapsed).count() << " s\n";
  if (outcome.status != ndkt::Status::found) return exit_failed;
  const std::string text = ndkt::write_tour_file(ndkt::grid_from_tour(*outcome.tour));
  if (a.out.empty()) std::cout << text;
  else write_file(a.out, text);
  return exit_ok;
}

ndkt::SearchConfig make_config(const SearchArgs& a, const ndkt::Shape& shape) {
  ndkt::SearchConfig c;
  c.budget = parse_budget(a.budget);
  c.seed = a.seed;
  c.exhaustive = a.exhaustive;
  c.jobs = a.jobs;
  c.quartile_pruning = a.quartiles;
  if (a.heuristic == "warnsdorff") c.heuristic = ndkt::Heuristic::warnsdorff;
  else if (a.heuristic == "lexicographic") c.heuristic = ndkt::Heuristic::lexicographic;
  else throw ndkt::InputError("unknown heuristic '" + a.heuristic + "'");
  c.prefix = load_prefix(a, shape);
  if (a.verbose) c.on_progress = print_progress;
  return c;
}

int run_search(const SearchArgs& a) {
  const ndkt::Shape shape = ndkt::Shape::parse(a.shape);
  ndkt::SearchConfig config = make_config(a, shape);
  if (a.mode == "open") config.mode = ndkt::Mode::open;
  else if (a.mode == "closed") config.mode = ndkt::Mode::closed;
  else throw ndkt::InputError("--mode must be open or closed (use magic-search for magic tours)");

  if (config.mode == ndkt::Mode::closed) {
    const auto verdict = ndkt::closed_tour_feasible(shape);
    if (verdict.answer == ndkt::Answer::impossible) {
      const bool proven = verdict.provenance.kind == ndkt::Provenance::Kind::proven;
      if (proven && !a.force) {
        std::cout << "status=infeasible nodes=0 shape=" << shape.to_string() << " rule=" << verdict.provenance.rule
                  << '\n'
                  << "citation " << verdict.citation << '\n';
        return exit_failed;
      }
      std::cerr << "warning: " << (proven ? "proven" : "conjectured") << " infeasible (" << verdict.provenance.rule
                << "): " << verdict.citation << "; searching anyway\n";
    }
  }
  return report_outcome(ndkt::find_tour(shape, config), a, shape);
}

int run_magic_search(SearchArgs a) {
  a.mode = "magic";
  const ndkt::Shape shape = ndkt::Shape::parse(a.shape);
  const ndkt::SearchConfig config = make_config(a, shape);
  try {
    const auto outcome = ndkt::find_magic_tour(shape, config);
    const int code = report_outcome(outcome, a, shape);
    if (outcome.tour) {
      const auto magic = ndkt::magic_report(ndkt::grid_from_tour(*outcome.tour));
      (a.out.empty() ? std::cerr : std::cout) << ndkt::to_key_values(magic) << '\n';
    }
    return code;
  } catch (const ndkt::InfeasibleError& e) {
    std::cout << "status=infeasible nodes=0 shape=" << shape.to_string() << " rule=" << e.verdict().provenance.rule
              << '\n'
              << "citation " << e.verdict().citation << '\n';
    return exit_failed;
  }
}

struct FeasibilityArgs {
  std::string shape;
  int order = 0;
  int dim = 0;
  bool magic = false;
};

int run_feasibility(const FeasibilityArgs& a) {
  if (a.magic) {
    if (a.order < 1 || a.dim < 2) throw ndkt::InputError("--magic needs --order >= 1 and --dim >= 2");
    std::cout << "magic tour on order " << a.order << ", dimension " << a.dim << '\n';
    print_verdict(ndkt::magic_tour_feasible(a.order, a.dim));
    return exit_ok;
  }
  if (a.shape.empty()) throw ndkt::InputError("give --shape, or --order/--dim with --magic");
  const ndkt::Shape shape = ndkt::Shape::parse(a.shape);
  std::cout << "closed tour on " << shape.to_string() << '\n';
  print_verdict(ndkt::closed_tour_feasible(shape));
  return exit_ok;
}

struct AnalyzeArgs {
  std::string shape;
  bool degrees = false;
  bool lines = false;
};

int run_analyze(const AnalyzeArgs& a) {
  const ndkt::Shape shape = ndkt::Shape::parse(a.shape);
  if (!a.degrees && !a.lines) throw ndkt::InputError("analyze needs --degrees or --lines");
  if (a.degrees) {
    const auto profile = ndkt::degree_profile(shape);
    const auto classes = profile.layout_classes();
    std::cout << "knight moves per coordinate plane on " << shape.to_string() << '\n';
    std::cout << "plane";
    for (std::size_t k = 0; k < classes.size(); ++k)
      std::cout << '\t' << (k < 26 ? std::string(1, static_cast<char>('A' + k)) : "#" + std::to_string(k + 1));
    std::cout << '\n';
    // columns ordered by plane counts, last plane most significant
    std::vector<ndkt::DegreeClass> ordered(classes.begin(), classes.end());
    std::stable_sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
      for (std::size_t p = x.per_plane.size(); p-- > 0;)
        if (x.per_plane[p] != y.per_plane[p]) return x.per_plane[p] < y.per_plane[p];
      return false;
    });
    const auto planes = profile.planes();
    for (std::size_t p = 0; p < planes.size(); ++p) {
      std::cout << axis_name(planes[p].first) << axis_name(planes[p].second);
      for (const auto& c : ordered) std::cout << '\t' << c.per_plane[p];
      std::cout << '\n';
    }
    std::cout << "Total";
    for (const auto& c : ordered) std::cout << '\t' << c.total;
    std::cout << '\n';
    std::cout << "min=" << profile.min_total() << " max=" << profile.max_total()
              << " distinct_profiles=" << profile.distinct().size() << " layout_classes=" << classes.size() << '\n';
  }
  if (a.lines) {
    const auto lines = ndkt::enumerate_lines(shape);
    std::vector<std::size_t> per_axis(shape.dimension(), 0);
    for (const auto& l : lines) ++per_axis[l.axis];
    for (std::size_t axis = 0; axis < shape.dimension(); ++axis)
      std::cout << "axis " << axis << " (" << axis_name(axis) << ")  " << per_axis[axis] << " lines of length "
                << shape.extent(axis) << '\n';
    std::cout << "lines=" << lines.size() << " cells=" << shape.cell_count();
    if (shape.is_cubic()) std::cout << " space_diagonals=" << ndkt::enumerate_space_diagonals(shape).size();
    std::cout << '\n';
  }
  return exit_ok;
}

int run_corpus(const std::string& action, const std::string& id) {
  if (action == "list") {
    for (const auto& e : ndkt::corpus_entries())
      std::cout << e.id << '\t' << e.grid().shape().to_string() << '\t' << e.caption << '\n';
    return exit_ok;
  }
  if (action == "show") {
    const auto* e = ndkt::find_corpus_entry(id);
    if (!e) {
      std::cerr << "error: unknown corpus id '" << id << "'\n";
      return exit_usage;
    }
    std::cout << e->text;
    return exit_ok;
  }
  if (action == "verify-all") {
    bool all = true;
    for (const auto& r : ndkt::corpus_verify_all()) {
      std::cout << (r.passed ? "PASS " : "FAIL ") << r.id << "  tour=" << (r.tour.valid ? "valid" : "invalid")
                << " closure=" << ndkt::to_string(r.tour.closure);
      if (r.magic) std::cout << ' ' << ndkt::to_key_values(*r.magic);
      std::cout << '\n';
      for (const auto& f : r.failures) std::cout << "  " << f << '\n';
      all = all && r.passed;
    }
    return all ? exit_ok : exit_failed;
  }
  std::cerr << "error: corpus action must be list, show or verify-all\n";
  return exit_usage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Knight's tours on n-dimensional boards"};
  app.require_subcommand(1);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Validate a tour file and report line sums");
  verify_cmd->add_option("file", verify.file, "ndkt v1 tour file")->required();
  verify_cmd->add_flag("--magic", verify.magic, "Require every axis line to hit the magic constant");
  verify_cmd->add_flag("--diagonals", verify.diagonals, "Also require the space diagonals to be magic");
  verify_cmd->add_flag("--quartiles", verify.quartiles, "Require quartile balance (order-4 boards)");
  verify_cmd->add_flag("--ratio-with-diagonals", verify.ratio_with_diagonals,
                       "Count space diagonals in the magic ratio");

  SearchArgs search;
  search.jobs = default_jobs();
  auto add_search_options = [](CLI::App* cmd, SearchArgs& s) {
    cmd->add_option("--shape", s.shape, "Board extents, e.g. 3x4x2x2")->required();
    cmd->add_option("--budget", s.budget, "Wall-clock limit (60s, 10m, 500ms) or node count");
    cmd->add_option("--seed", s.seed, "Tie-breaking seed; 0 is deterministic flat-index order");
    cmd->add_flag("--exhaustive", s.exhaustive, "Search the full tree when needed to prove no tour exists");
    cmd->add_option("--out", s.out, "Write the tour here instead of stdout");
    cmd->add_option("--jobs", s.jobs, "Worker threads (default: NDKT_JOBS or 1)");
    cmd->add_option("--heuristic", s.heuristic, "warnsdorff or lexicographic");
    cmd->add_option("--prefix", s.prefix_file, "Tour file whose opening steps are kept");
    cmd->add_option("--prefix-steps", s.prefix_steps, "How many opening steps of --prefix to keep (default all)");
    cmd->add_flag("-v,--verbose", s.verbose, "Progress on stderr");
  };
  auto* search_cmd = app.add_subcommand("search", "Find an open or closed tour");
  add_search_options(search_cmd, search);
  search_cmd->add_option("--mode", search.mode, "open or closed");
  search_cmd->add_flag("--force", search.force, "Search even when a theorem rules the shape out");

  SearchArgs magic;
  magic.jobs = default_jobs();
  auto* magic_cmd = app.add_subcommand("magic-search", "Find a magic tour on a hypercube");
  add_search_options(magic_cmd, magic);
  magic_cmd->add_flag("--quartiles", magic.quartiles, "Prune with quartile-group balance (order 4)");

  FeasibilityArgs feas;
  auto* feas_cmd = app.add_subcommand("feasibility", "Closed-tour or magic-tour existence verdict");
  feas_cmd->add_option("--shape", feas.shape, "Board extents for a closed-tour verdict");
  feas_cmd->add_option("--order", feas.order, "Hypercube order for --magic");
  feas_cmd->add_option("--dim", feas.dim, "Hypercube dimension for --magic");
  feas_cmd->add_flag("--magic", feas.magic, "Ask about magic tours");

  AnalyzeArgs analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "Board geometry: move counts or line inventory");
  analyze_cmd->add_option("--shape", analyze.shape, "Board extents")->required();
  analyze_cmd->add_flag("--degrees", analyze.degrees, "Knight move counts per coordinate plane");
  analyze_cmd->add_flag("--lines", analyze.lines, "Axis lines and space diagonals");

  std::string corpus_action;
  std::string corpus_id;
  auto* corpus_cmd = app.add_subcommand("corpus", "Bundled reference tours");
  corpus_cmd->add_option("action", corpus_action, "list, show <id> or verify-all")->required();
  corpus_cmd->add_option("id", corpus_id, "Entry id for show");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (verify_cmd->parsed()) return run_verify(verify);
    if (search_cmd->parsed()) return run_search(search);
    if (magic_cmd->parsed()) return run_magic_search(magic);
    if (feas_cmd->parsed()) return run_feasibility(feas);
    if (analyze_cmd->parsed()) return run_analyze(analyze);
    if (corpus_cmd->parsed()) return run_corpus(corpus_action, corpus_id);
  } catch (const ndkt::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return exit_usage;
  } catch (const ndkt::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}
