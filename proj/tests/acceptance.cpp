// Acceptance suite: every criterion below runs end to end and prints
// one [PASS]/[FAIL] line; the process exits nonzero when any fail.
//
// Usage: acceptance [path-to-finring-cli]

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "finring/cache.hpp"
#include "finring/classify.hpp"
#include "finring/harness.hpp"
#include "finring/parse.hpp"

using namespace finring;
namespace fs = std::filesystem;

namespace {

std::vector<SubjectPtr> g_subjects;
std::string g_cli_path;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

SubjectPtr find_subject(const std::string& expr) {
  for (const auto& s : g_subjects) {
    if (s->expr() == expr) return s;
  }
  return nullptr;
}

int run_cli(const std::string& args) {
  std::string cmd = g_cli_path + " " + args + " > /tmp/finring_acceptance_cli.out 2>&1";
  int status = std::system(cmd.c_str());
  if (status < 0) return -1;
  return WEXITSTATUS(status);
}

// C1: strongly J#-clean and strongly J-clean coincide on the whole
// catalog, within the time budget.
bool criterion1(std::string& detail) {
  auto t0 = std::chrono::steady_clock::now();
  clear_structural_memo();
  g_subjects = make_subjects(default_catalog());
  if (g_subjects.size() != 24) {
    detail = "expected 24 catalog subjects, got " + std::to_string(g_subjects.size());
    return false;
  }
  std::size_t agreements = 0;
  for (const auto& s : g_subjects) {
    bool sharp = s->ring_kind(CleanKind::strongly_jsharp_clean);
    bool plain = s->ring_kind(CleanKind::strongly_j_clean);
    if (sharp != plain) {
      detail = "disagreement on " + s->expr();
      return false;
    }
    ++agreements;
  }
  double elapsed = seconds_since(t0);
  std::ostringstream os;
  os << agreements << "/24 agree in " << elapsed << "s";
  detail = os.str();
  return agreements == 24 && elapsed < 120.0;
}

// C2: classification fixtures, negatives with replayable witnesses.
bool criterion2(std::string& detail) {
  const std::vector<std::string> positives = {
      "Z2", "Z4", "Z8", "prod(Z2,Z4)", "T2(Z4)", "GR(Z2,C2)", "GR(Z4,C2)",
      "GR(Z2,C2xC2)"};
  const std::vector<std::string> negatives = {"Z3",        "Z6",        "M2(Z2)",
                                              "GR(Z2,C3)", "GR(Z4,C3)", "GR(Z2,S3)"};
  for (const auto& expr : positives) {
    auto s = find_subject(expr);
    if (!s || !s->ring_kind(CleanKind::strongly_jsharp_clean)) {
      detail = expr + " should be strongly J#-clean";
      return false;
    }
  }
  for (const auto& expr : negatives) {
    auto s = find_subject(expr);
    if (!s) {
      detail = expr + " missing from catalog";
      return false;
    }
    const auto& flags = s->kind_flags(CleanKind::strongly_jsharp_clean);
    std::size_t witness = flags.size();
    for (std::size_t a = 0; a < flags.size(); ++a) {
      if (!flags[a]) {
        witness = a;
        break;
      }
    }
    if (witness == flags.size()) {
      detail = expr + " should not be strongly J#-clean";
      return false;
    }
    // replay: the witness element really has no decomposition
    if (!decompositions(s->ring(), static_cast<elem>(witness),
                        CleanKind::strongly_jsharp_clean)
             .empty()) {
      detail = expr + ": witness " + std::to_string(witness) + " does not replay";
      return false;
    }
  }
  detail = "8 positives, 6 negatives with replayable witnesses";
  return true;
}

// C3: structural consequences on every strongly J#-clean catalog ring.
bool criterion3(std::string& detail) {
  std::size_t checked = 0;
  for (const auto& s : g_subjects) {
    if (!s->ring_kind(CleanKind::strongly_jsharp_clean)) continue;
    ++checked;
    const FiniteRing& R = s->ring();
    const auto& S = s->sets();
    if (!S.jacobson.contains(R.add(R.one(), R.one()))) {
      detail = s->expr() + ": 2 outside J";
      return false;
    }
    if (!units_equal_one_plus(R, S.units, S.j_sharp)) {
      detail = s->expr() + ": U differs from 1 + J#";
      return false;
    }
    const BuiltRing& q = s->quotient_by_radical();
    for (std::size_t v = 0; v < q.ring->order(); ++v) {
      if (q.ring->mul(static_cast<elem>(v), static_cast<elem>(v)) != v) {
        detail = s->expr() + ": R/J not Boolean";
        return false;
      }
    }
    if (!s->ring_kind(CleanKind::strongly_clean)) {
      detail = s->expr() + ": not strongly clean";
      return false;
    }
  }
  detail = std::to_string(checked) + " strongly J#-clean rings, 4 consequences each";
  return checked > 0;
}

// C4: the three-case classification matches the decomposition search on
// all four K_s subjects, within the time budget.
bool criterion4(std::string& detail) {
  auto t0 = std::chrono::steady_clock::now();
  const std::vector<std::string> ks = {"K(Z4,2)", "K(Z4,0)", "K(Z2,1)", "K(Z8,2)"};
  for (const auto& expr : ks) {
    auto s = find_subject(expr);
    CheckResult r = run_check("CHK-locstr", *s);
    if (r.status != CheckStatus::pass) {
      detail = expr + ": " + to_string(r.status) + " " + r.note;
      return false;
    }
  }
  double elapsed = seconds_since(t0);
  std::ostringstream os;
  os << "4 subjects classified in " << elapsed << "s";
  detail = os.str();
  return elapsed < 300.0;
}

// C5: the radical block formula and unit criterion.
bool criterion5(std::string& detail) {
  for (const char* expr : {"K(Z4,2)", "K(Z4,0)", "K(Z2,1)", "K(Z8,2)"}) {
    auto s = find_subject(expr);
    CheckResult r = run_check("CHK-Ks-radical", *s);
    if (r.status != CheckStatus::pass) {
      detail = std::string(expr) + ": " + to_string(r.status) + " " + r.note;
      return false;
    }
  }
  detail = "block formula and unit criterion hold on all four subjects";
  return true;
}

// C6: reverse symmetry on every catalog ring of order <= 64.
bool criterion6(std::string& detail) {
  std::size_t rings = 0, pairs = 0;
  for (const auto& s : g_subjects) {
    const FiniteRing& R = s->ring();
    if (R.order() > 64) continue;
    ++rings;
    const auto& flags = s->kind_flags(CleanKind::strongly_jsharp_clean);
    for (std::size_t a = 0; a < R.order(); ++a) {
      for (std::size_t b = 0; b < R.order(); ++b) {
        elem ab = R.mul(static_cast<elem>(a), static_cast<elem>(b));
        elem ba = R.mul(static_cast<elem>(b), static_cast<elem>(a));
        if (flags[ab] && !flags[ba]) {
          detail = s->expr() + ": (" + std::to_string(a) + "," + std::to_string(b) + ")";
          return false;
        }
        ++pairs;
      }
    }
  }
  detail = std::to_string(pairs) + " ordered pairs over " + std::to_string(rings) +
           " rings";
  return rings > 0;
}

// C7: the strong J/QN/DN equivalence plus the DNU and UU-quotient implications.
bool criterion7(std::string& detail) {
  for (const auto& s : g_subjects) {
    for (const char* id : {"CHK-main-equiv", "CHK-deltanu", "CHK-UU-quotient"}) {
      CheckResult r = run_check(id, *s);
      if (r.status == CheckStatus::fail) {
        detail = s->expr() + ": " + id + " failed";
        return false;
      }
    }
  }
  detail = "equivalence and implications hold wherever applicable";
  return true;
}

// C8: the two radical characterizations agree; inclusion chains hold.
bool criterion8(std::string& detail) {
  for (const auto& s : g_subjects) {
    const auto& S = s->sets();
    if (!(jacobson_radical_two_sided(s->ring()) == S.jacobson)) {
      detail = s->expr() + ": radical characterizations disagree";
      return false;
    }
    if (!S.jacobson.subset_of(S.quasi_nilpotents) ||
        !S.quasi_nilpotents.subset_of(S.delta_nilpotents) ||
        !S.nilpotents.subset_of(S.quasi_nilpotents)) {
      detail = s->expr() + ": inclusion chain broken";
      return false;
    }
  }
  detail = "both characterizations and the chains agree on all 24 rings";
  return true;
}

// C9: builders validate; a perturbed table is caught with a witness.
bool criterion9(std::string& detail) {
  for (const auto& s : g_subjects) {
    const FiniteRing& R = s->ring();
    std::vector<elem> add(R.add_table().begin(), R.add_table().end());
    std::vector<elem> mul(R.mul_table().begin(), R.mul_table().end());
    if (find_axiom_violation(R.order(), add, mul, R.zero(), R.one())) {
      detail = s->expr() + ": validator rejects a built ring";
      return false;
    }
  }
  std::vector<elem> add(16), mul(16);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      add[i * 4 + j] = static_cast<elem>((i + j) % 4);
      mul[i * 4 + j] = static_cast<elem>((i * j) % 4);
    }
  mul[2 * 4 + 2] = 1;
  auto v = find_axiom_violation(4, add, mul, 0, 1);
  if (!v) {
    detail = "perturbed Z4 not detected";
    return false;
  }
  if (v->triple[0] >= 4 || v->triple[1] >= 4 || v->triple[2] >= 4) {
    detail = "witness triple not concrete";
    return false;
  }
  detail = "24 builders validated; perturbation caught at " + v->detail;
  return true;
}

// C10: DSL round trips, byte-identical cache, and a green verify run.
bool criterion10(std::string& detail) {
  for (const auto& expr : default_catalog()) {
    ConstructionAst ast = parse_ring_expr(expr);
    if (canonical_text(ast) != expr) {
      detail = expr + ": canonical form differs";
      return false;
    }
    if (!(parse_ring_expr(canonical_text(ast)) == ast)) {
      detail = expr + ": reparse differs";
      return false;
    }
  }

  // shipped manifest matches the embedded default catalog
  {
    std::ifstream in(std::string(FINRING_SOURCE_DIR) + "/catalogs/default.txt");
    std::stringstream buffer;
    buffer << in.rdbuf();
    if (buffer.str() != default_catalog_text()) {
      detail = "catalogs/default.txt differs from the embedded manifest";
      return false;
    }
  }

  fs::path cache_dir = fs::temp_directory_path() / "finring-acceptance-cache";
  fs::remove_all(cache_dir);
  SetsCache cache(cache_dir.string());
  for (const auto& s : g_subjects) {
    if (s->ring().order() > 256) continue;  // keep the disk round trip quick
    StructuralSets computed = load_structural_sets(s->ring(), &cache);
    auto hit = cache.get(s->ring());
    if (!hit) {
      detail = s->expr() + ": cache miss after put";
      return false;
    }
    if (SetsCache::serialize(s->ring(), *hit) !=
        SetsCache::serialize(s->ring(), computed)) {
      detail = s->expr() + ": cached record differs from fresh computation";
      return false;
    }
  }
  fs::remove_all(cache_dir);

  if (g_cli_path.empty()) {
    detail = "cli path not provided";
    return false;
  }
  int rc = run_cli("verify --jobs 2");
  if (rc != 0) {
    detail = "verify exited with " + std::to_string(rc);
    return false;
  }

  // a second cached `sets` invocation prints identical output
  {
    fs::path cli_cache = fs::temp_directory_path() / "finring-acceptance-cli-cache";
    fs::remove_all(cli_cache);
    std::string common = "--cache " + cli_cache.string() + " sets \"K(Z4,2)\" --json";
    if (run_cli(common) != 0) {
      detail = "cached sets run failed";
      return false;
    }
    std::string first = [&] {
      std::ifstream in("/tmp/finring_acceptance_cli.out");
      std::stringstream ss;
      ss << in.rdbuf();
      return ss.str();
    }();
    if (run_cli(common) != 0) {
      detail = "second cached sets run failed";
      return false;
    }
    std::string second = [&] {
      std::ifstream in("/tmp/finring_acceptance_cli.out");
      std::stringstream ss;
      ss << in.rdbuf();
      return ss.str();
    }();
    fs::remove_all(cli_cache);
    if (first.empty() || first != second) {
      detail = "cached sets output differs between runs";
      return false;
    }
  }
  if (run_cli("sets \"GR(Z4,C2xC2\"") != 2) {
    detail = "parse error should exit 2";
    return false;
  }
  if (run_cli("--cap 8 sets Z100") != 3) {
    detail = "size error should exit 3";
    return false;
  }
  detail = "round trips, byte-identical cache, verify exit 0";
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_cli_path = argv[1];

  struct Criterion {
    const char* id;
    const char* title;
    std::function<bool(std::string&)> run;
  };
  const std::vector<Criterion> criteria = {
      {"C1", "strong J- and J#-cleanness coincide on the catalog", criterion1},
      {"C2", "positive/negative classification fixtures", criterion2},
      {"C3", "structural consequences on strongly J#-clean rings", criterion3},
      {"C4", "three-case classification on the K subjects", criterion4},
      {"C5", "radical block formula and unit criterion", criterion5},
      {"C6", "ab to ba transfer on rings of order <= 64", criterion6},
      {"C7", "strong J/QN/DN equivalence and the DNU/UU implications", criterion7},
      {"C8", "radical oracle agreement and inclusion chains", criterion8},
      {"C9", "axiom validation and mutation sensitivity", criterion9},
      {"C10", "DSL round trip, cache identity, verify exit 0", criterion10},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << c.id << " " << c.title;
    if (!detail.empty()) std::cout << " -- " << detail;
    std::cout << std::endl;
    if (!ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
