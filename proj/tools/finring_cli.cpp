// finring command line: build rings from construction expressions,
// inspect their structural sets, classify them, and run the
// verification suite.
//
// Exit codes: 0 success, 1 check failure, 2 usage/parse error,
// 3 size/cap error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "finring/cache.hpp"
#include "finring/classify.hpp"
#include "finring/harness.hpp"
#include "finring/parse.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSize = 3;

struct GlobalOptions {
  std::size_t cap = finring::kDefaultOrderCap;
  std::string cache_dir;
  bool no_cache = false;
};

std::string default_cache_dir() {
  if (const char* env = std::getenv("FINRING_CACHE_DIR")) return env;
  if (const char* home = std::getenv("HOME")) {
    return std::string(home) + "/.cache/finring";
  }
  return ".finring-cache";
}

std::unique_ptr<finring::SetsCache> open_cache(const GlobalOptions& opts) {
  if (opts.no_cache) return nullptr;
  std::string dir = opts.cache_dir.empty() ? default_cache_dir() : opts.cache_dir;
  return std::make_unique<finring::SetsCache>(dir);
}

void print_set(std::ostream& os, const char* name, const finring::ElemSet& set,
               const finring::Codec* codec, bool pretty) {
  os << name << ": {";
  bool first = true;
  for (finring::elem m : set) {
    if (!first) os << ", ";
    os << m;
    if (pretty && codec) os << "=" << codec->render(m);
    first = false;
  }
  os << "}\n";
}

int cmd_sets(const GlobalOptions& opts, const std::string& expr, bool pretty, bool json) {
  finring::BuiltRing built = finring::build_from_expr(expr);
  auto cache = open_cache(opts);
  finring::StructuralSets sets = finring::load_structural_sets(*built.ring, cache.get());
  if (json) {
    std::cout << finring::SetsCache::serialize(*built.ring, sets) << "\n";
    return kExitOk;
  }
  std::cout << "ring: " << built.ring->label() << " (order " << built.ring->order()
            << ")\n";
  print_set(std::cout, "units", sets.units, built.codec.get(), pretty);
  print_set(std::cout, "idempotents", sets.idempotents, built.codec.get(), pretty);
  print_set(std::cout, "nilpotents", sets.nilpotents, built.codec.get(), pretty);
  print_set(std::cout, "jacobson", sets.jacobson, built.codec.get(), pretty);
  print_set(std::cout, "j_sharp", sets.j_sharp, built.codec.get(), pretty);
  print_set(std::cout, "quasi_nilpotents", sets.quasi_nilpotents, built.codec.get(),
            pretty);
  print_set(std::cout, "delta_nilpotents", sets.delta_nilpotents, built.codec.get(),
            pretty);
  return kExitOk;
}

int cmd_classify(const std::string& expr, bool json) {
  finring::BuiltRing built = finring::build_from_expr(expr);
  finring::RingClassReport report = finring::ring_class_report(*built.ring);
  if (json) {
    std::cout << finring::to_json(report) << "\n";
  } else {
    std::cout << finring::to_table(report);
  }
  return kExitOk;
}

int cmd_element(const std::string& expr, std::size_t index, const std::string& kind_name,
                bool json) {
  auto kind = finring::parse_clean_kind(kind_name);
  if (!kind) {
    std::cerr << "unknown decomposition kind '" << kind_name << "'; one of:";
    for (auto k : finring::all_clean_kinds()) std::cerr << " " << to_string(k);
    std::cerr << "\n";
    return kExitUsage;
  }
  finring::BuiltRing built = finring::build_from_expr(expr);
  if (index >= built.ring->order()) {
    std::cerr << "element index " << index << " out of range for "
              << built.ring->label() << " (order " << built.ring->order() << ")\n";
    return kExitUsage;
  }
  auto decomps =
      finring::decompositions(*built.ring, static_cast<finring::elem>(index), *kind);
  if (json) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < decomps.size(); ++i) {
      if (i) os << ",";
      os << "{\"idempotent\":" << decomps[i].idempotent
         << ",\"complement\":" << decomps[i].complement
         << ",\"commuting\":" << (decomps[i].commuting ? "true" : "false") << "}";
    }
    os << "]";
    std::cout << os.str() << "\n";
    return kExitOk;
  }
  std::cout << built.ring->label() << ", element " << index << " ("
            << built.codec->render(static_cast<finring::elem>(index)) << "), kind "
            << to_string(*kind) << ":\n";
  if (decomps.empty()) {
    std::cout << "  no decomposition\n";
    return kExitOk;
  }
  for (const auto& d : decomps) {
    std::cout << "  e=" << d.idempotent << " (" << built.codec->render(d.idempotent)
              << "), j=" << d.complement << " (" << built.codec->render(d.complement)
              << "), commuting=" << (d.commuting ? "true" : "false") << "\n";
  }
  return kExitOk;
}

int cmd_verify(const std::string& catalog_file, const std::vector<std::string>& checks,
               int jobs) {
  std::vector<std::string> exprs;
  if (catalog_file.empty()) {
    exprs = finring::default_catalog();
  } else {
    std::ifstream in(catalog_file);
    if (!in) {
      std::cerr << "cannot open catalog file: " << catalog_file << "\n";
      return kExitUsage;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    exprs = finring::parse_catalog_text(buffer.str());
  }
  finring::SuiteOptions options;
  options.only_checks = checks;
  options.jobs = jobs;
  finring::SuiteReport report = finring::run_suite(exprs, options);
  for (const auto& result : report.results) {
    std::cout << finring::to_json_line(result) << "\n";
  }
  std::cout << finring::summary_json(report) << "\n";
  return report.all_passed() ? kExitOk : kExitCheckFailure;
}

int cmd_catalog() {
  for (const auto& expr : finring::default_catalog()) {
    auto start = std::chrono::steady_clock::now();
    finring::BuiltRing built = finring::build_from_expr(expr);
    double ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
    std::cout << expr << "  order=" << built.ring->order() << "  build_ms=" << ms
              << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite ring toolkit: structural sets, clean-family classifiers and "
               "an exhaustive verification suite"};
  app.require_subcommand(1);

  GlobalOptions global;
  app.add_option("--cap", global.cap, "order cap for constructed rings");
  app.add_option("--cache", global.cache_dir, "directory for the structural-set cache");
  app.add_flag("--no-cache", global.no_cache, "disable the structural-set cache");

  std::string expr;
  bool pretty = false, json = false;
  auto* sets = app.add_subcommand("sets", "print the structural sets of a ring");
  sets->add_option("expr", expr, "construction expression")->required();
  sets->add_flag("--pretty", pretty, "render elements structurally");
  sets->add_flag("--json", json, "machine-readable output");

  auto* classify = app.add_subcommand("classify", "ring-class report");
  classify->add_option("expr", expr, "construction expression")->required();
  classify->add_flag("--json", json, "machine-readable output");

  std::size_t element_index = 0;
  std::string kind_name = "strongly-jsharp-clean";
  auto* element = app.add_subcommand("element", "list decompositions of one element");
  element->add_option("expr", expr, "construction expression")->required();
  element->add_option("--index", element_index, "element index")->required();
  element->add_option("--kind", kind_name, "decomposition kind");
  element->add_flag("--json", json, "machine-readable output");

  std::string catalog_file;
  std::vector<std::string> only_checks;
  int jobs = 1;
  auto* verify = app.add_subcommand("verify", "run the verification suite");
  verify->add_option("--catalog", catalog_file, "catalog manifest file");
  verify->add_option("--check", only_checks, "run only these check ids");
  verify->add_option("--jobs", jobs, "parallel workers");

  auto* catalog = app.add_subcommand("catalog", "print the default catalog");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    finring::set_order_cap(global.cap);
    if (sets->parsed()) return cmd_sets(global, expr, pretty, json);
    if (classify->parsed()) return cmd_classify(expr, json);
    if (element->parsed()) return cmd_element(expr, element_index, kind_name, json);
    if (verify->parsed()) return cmd_verify(catalog_file, only_checks, jobs);
    if (catalog->parsed()) return cmd_catalog();
  } catch (const finring::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const finring::SizeExceeded& e) {
    std::cerr << e.what() << "\n";
    return kExitSize;
  } catch (const finring::Error& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
