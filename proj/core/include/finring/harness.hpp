#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "finring/classify.hpp"
#include "finring/construct.hpp"
#include "finring/parse.hpp"

namespace finring {

enum class CheckStatus { pass, fail, skipped };

std::string to_string(CheckStatus status);

/// Counterexample payload: named element indices plus a free-form tag
/// telling the replayer which sub-predicate was violated.
struct Witness {
  std::vector<std::pair<std::string, std::int64_t>> slots;
  std::string tag;

  std::optional<std::int64_t> get(const std::string& name) const;
};

struct CheckResult {
  std::string check_id;
  std::string subject;
  CheckStatus status = CheckStatus::pass;
  std::string reason;  // populated when skipped
  std::optional<Witness> witness;
  std::string note;
  double elapsed_ms = 0.0;
};

/// One catalog entry: the built ring plus the facets its root
/// construction exposes (group-ring pairs, generalized matrix data).
/// Element-level kind flags are cached per subject because several
/// checks share them.
class Subject {
 public:
  struct GroupRingFacet {
    BuiltRing base;
    GroupPtr group;
  };
  struct KsFacet {
    BuiltRing base;
    elem multiplier;
  };

  Subject(std::string expr, BuiltRing built);

  const std::string& expr() const { return expr_; }
  const FiniteRing& ring() const { return *built_.ring; }
  const BuiltRing& built() const { return built_; }
  const StructuralSets& sets() const;
  const std::vector<std::uint8_t>& kind_flags(CleanKind kind) const;
  bool ring_kind(CleanKind kind) const;
  /// R/J(R), built on demand.
  const BuiltRing& quotient_by_radical() const;

  std::optional<GroupRingFacet> group_ring;
  std::optional<KsFacet> ks;

 private:
  std::string expr_;
  BuiltRing built_;
  mutable std::mutex mutex_;
  mutable SetsPtr sets_;
  mutable std::map<CleanKind, std::vector<std::uint8_t>> flags_;
  mutable std::optional<BuiltRing> radical_quotient_;
};

using SubjectPtr = std::shared_ptr<Subject>;

enum class CheckSort { ring, group_ring, gen_matrix };

struct CheckInfo {
  std::string id;
  std::string summary;
  CheckSort sort;
};

std::vector<CheckInfo> list_checks();

/// Builds subjects from catalog expressions.  When the catalog carries
/// no group-ring (resp. generalized-matrix) entries, small derived
/// subjects are synthesized so those check families still run.
std::vector<SubjectPtr> make_subjects(const std::vector<std::string>& exprs);

CheckResult run_check(const std::string& check_id, const Subject& subject);

/// Re-evaluates a failed result's witness against the subject.
/// Returns true when the witness still demonstrates the violation.
bool replay_witness(const CheckResult& result, const Subject& subject);

struct SuiteOptions {
  std::vector<std::string> only_checks;  // empty = all
  int jobs = 1;
};

struct SuiteReport {
  std::vector<CheckResult> results;
  std::size_t checks = 0;    // active checks
  std::size_t subjects = 0;  // catalog plus synthesized subjects
  double elapsed_ms = 0.0;

  std::size_t count(CheckStatus status) const;
  bool all_passed() const { return count(CheckStatus::fail) == 0; }
};

/// Runs every applicable (check, subject) pair; deterministic order.
/// Throws EmptyCatalog for an empty expression list.
SuiteReport run_suite(const std::vector<std::string>& exprs,
                      const SuiteOptions& options = {});

std::string to_json_line(const CheckResult& result);
std::string summary_json(const SuiteReport& report);

/// The default catalog manifest (text, one expression per line).
const char* default_catalog_text();
std::vector<std::string> default_catalog();

}  // namespace finring
