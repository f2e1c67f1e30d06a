#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "symbreak/bigint.hpp"
#include "symbreak/error.hpp"
#include "symbreak/generators.hpp"

namespace symbreak::formulas {

inline constexpr std::uint64_t kMinRLimit = 1'000'000'000;

/// Least r >= 1 with pred(r), for pred monotone nondecreasing. Doubling probe
/// followed by bisection; throws kNoSolutionBelowLimit if pred(limit) fails.
template <class Pred>
std::uint64_t min_r(Pred&& pred, std::uint64_t limit = kMinRLimit) {
  auto none = [limit] {
    return Error(ErrorCode::kNoSolutionBelowLimit,
                 "predicate never holds for r <= " + std::to_string(limit));
  };
  if (limit == 0) throw none();
  if (pred(std::uint64_t{1})) return 1;
  // Invariant: pred(lo) is false, pred(hi) is true.
  std::uint64_t lo = 1;
  std::uint64_t hi = 2;
  for (;;) {
    if (hi >= limit) {
      hi = limit;
      if (!pred(hi)) throw none();
      break;
    }
    if (pred(hi)) break;
    lo = hi;
    hi *= 2;
  }
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (pred(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

/// C(r, j); zero when j > r.
BigInt binomial(std::uint64_t r, std::uint64_t j);

enum class ResultKind { kExact, kUpperBound };

struct FormulaResult {
  std::uint64_t D = 0;
  /// Absent when no theorem covers the index for these parameters.
  std::optional<std::uint64_t> Dprime;
  ResultKind kind = ResultKind::kExact;
  std::string source;
};

/// min{r : r * C(r, n-1) >= m}; m, n >= 2.
std::uint64_t d_q(std::int64_t m, std::int64_t n);
/// 2 for m >= 2, n >= 3. n == 2 (single-edge blades) is refused.
std::uint64_t dprime_q(std::int64_t m, std::int64_t n);

/// min{r : (r^(k-1) - r^ceil((k-1)/2)) / 2 >= n}; n >= 2, k >= 3.
std::uint64_t d_dutch(std::int64_t n, std::int64_t k);
/// The odd-k closed form ceil(((1 + sqrt(8n+1)) / 2)^(1/m)), evaluated as
/// min{r : r^m (r^m - 1) >= 2n}, the same integer without radicals.
std::uint64_t d_dutch_odd_closed(std::int64_t n, std::int64_t m);
/// d_dutch(n, k + 1).
std::uint64_t dprime_dutch(std::int64_t n, std::int64_t k);

struct FriendshipValues {
  std::uint64_t D = 0;
  std::uint64_t Dprime = 0;
  // Naive floating-point evaluation of the two radical forms, kept only to
  // expose where rounding disagrees with the exact integers.
  std::uint64_t float_D = 0;
  std::uint64_t float_Dprime = 0;

  bool float_agrees() const { return D == float_D && Dprime == float_Dprime; }
};

/// D = ceil((1 + sqrt(8n+1)) / 2) as min{r : r(r-1) >= 2n}.
/// D' = ceil(a^(1/3)/3 + 1/(3 a^(1/3)) + 1/3), a = 1 + 27n + 3 sqrt(81n^2 + 6n),
/// which is the ceiling of the real root of x^3 - x^2 = 2n, computed as
/// min{r : r^2 (r-1) >= 2n}.
FriendshipValues friendship_closed(std::int64_t n);

/// Constant values for spiro-chains, polyphenylenes and nanostar dendrimers.
/// Chains and links with k = 1 are refused with kOutOfTheoremScope.
FormulaResult chemical_constants(const gen::FamilySpec& spec);

enum class CompositionKind { kBouquet, kCircuit, kChain, kLink };

struct PartValues {
  std::uint64_t D = 0;
  std::uint64_t Dprime = 0;
};

struct CompositionInputs {
  CompositionKind kind = CompositionKind::kBouquet;
  std::vector<PartValues> parts;
  /// Chain only: degrees, in the composed graph, of x_2..x_k.
  std::vector<std::uint64_t> contact_degrees;
  /// Circuit only: D(C_k) and D'(C_k).
  std::optional<PartValues> cycle;
};

/// Upper bounds for the four point-attaching compositions:
///   bouquet  D <= sum D(G_i),                 D' <= sum D'(G_i)
///   circuit  D <= max(max D(G_i), D(C_k)),    likewise for D'
///   chain    D <= max(max D(G_i), max deg x_i for i >= 2), likewise for D'
///   link     D <= max D(G_i),                 D' <= max D'(G_i)
FormulaResult composition_bound(const CompositionInputs& inputs);

/// Dispatch used by the CLI: exact values or constants for a named family.
FormulaResult for_family(const gen::FamilySpec& spec);

}  // namespace symbreak::formulas
