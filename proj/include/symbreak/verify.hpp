#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symbreak/automorphism.hpp"
#include "symbreak/generators.hpp"

namespace symbreak::verify {

struct RunConfig {
  std::uint64_t aut_cap = kDefaultAutCap;
  /// Instances above this order are skipped entirely.
  std::size_t max_vertices = 20;
  /// The edge oracle runs only up to this many edges.
  std::size_t max_edges = 16;
  std::optional<Label> max_labels;
  unsigned jobs = 1;
  /// Per-instance wall-clock budget for the labeling searches; 0 disables it.
  std::uint64_t time_budget_ms = 0;
  /// Include elapsed_ms in reports. Off by default so reports are
  /// byte-identical between runs.
  bool timing = false;
};

/// Which theorem an instance checks.
enum class Check {
  kDutch,       // closed form D, D' and |Aut| of D(n,k)
  kFriendship,  // closed forms for F_n
  kQGraph,      // D(Q(m,n)) formula, D' = 2
  kChemical,    // spiro / poly / nanostar constants
  kTransfer,    // D'(D(n,k)) = D(D(n,k+1)), both by the solver
  kBound,       // composition upper bounds
};

struct Instance {
  std::string family;
  std::vector<std::int64_t> params;
  gen::FamilySpec spec;
  Check check = Check::kDutch;
};

enum class Status { kMatch, kMismatch, kSkipped };

struct Record {
  std::string family;
  std::vector<std::int64_t> params;
  gen::FamilySpec spec;
  std::size_t n_vertices = 0;
  std::size_t n_edges = 0;
  std::string formula_kind;  // "exact", "upper_bound" or "oracle"
  std::optional<std::uint64_t> formula_D;
  std::optional<std::uint64_t> formula_Dprime;
  std::optional<std::uint64_t> oracle_D;
  std::optional<std::uint64_t> oracle_Dprime;
  std::optional<std::string> formula_aut_order;
  std::optional<std::uint64_t> aut_order;
  std::vector<Label> D_witness;
  std::vector<Label> Dprime_witness;
  bool D_checked_below = false;
  bool Dprime_checked_below = false;
  bool kernel_nontrivial = false;
  Status status = Status::kSkipped;
  std::string reason;
  std::optional<double> elapsed_ms;
};

struct Summary {
  std::size_t total = 0;
  std::size_t matched = 0;
  std::size_t mismatched = 0;
  std::size_t skipped_too_large = 0;
  /// Matched rows whose edge oracle did not run.
  std::size_t dprime_unchecked = 0;
};

struct Report {
  RunConfig config;
  std::optional<std::uint64_t> seed;
  std::vector<Record> records;
  Summary summary;
};

/// Inclusive integer ranges keyed by parameter name ("n", "k", "q", ...).
using Ranges = std::map<std::string, std::pair<std::int64_t, std::int64_t>>;

/// Instances for a family selector: dutch, friendship, q, spiro, poly,
/// nanostar, transfer, or all of them ("all" uses built-in ranges).
/// Spiro and poly silently drop h outside 1..floor(q/2). Throws
/// kUnknownFamily, kBadParams.
std::vector<Instance> make_instances(const std::string& family, const Ranges& ranges);

/// `samples` random bouquet/circuit/chain/link compositions of complete,
/// cycle, path and star parts with at most `max_order` vertices. Draws whose
/// group exceeds `aut_limit` elements are redrawn from the same stream.
std::vector<Instance> make_bound_instances(std::size_t samples, std::uint64_t seed,
                                           std::size_t max_order = 14,
                                           std::uint64_t aut_limit = 100'000);

Record evaluate(const Instance& instance, const RunConfig& config);

/// Evaluates on `config.jobs` workers; records come back sorted by
/// (family, params) whatever the completion order.
Report run(const std::vector<Instance>& instances, const RunConfig& config,
           std::optional<std::uint64_t> seed = std::nullopt);

Summary summarize(const std::vector<Record>& records);

/// Rebuilds the graph from the record's spec and re-checks both witnesses at
/// their reported values. Records without witnesses pass trivially.
bool revalidate(const Record& record, std::uint64_t aut_cap = kDefaultAutCap);

}  // namespace symbreak::verify
