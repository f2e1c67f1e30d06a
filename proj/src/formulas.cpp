#include "symbreak/formulas.hpp"

#include <algorithm>
#include <cmath>

namespace symbreak::formulas {

namespace {

using gen::FamilyKind;

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::kBadParams, what);
}

BigInt power(std::uint64_t base, std::uint64_t exp) {
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exp));
}

void require_params(const gen::FamilySpec& spec, std::size_t count) {
  if (spec.params.size() != count) {
    throw Error(ErrorCode::kBadParams, std::string(gen::to_string(spec.kind)) + " takes " +
                                           std::to_string(count) + " parameter(s)");
  }
}

}  // namespace

BigInt binomial(std::uint64_t r, std::uint64_t j) {
  if (j > r) return 0;
  j = std::min(j, r - j);
  BigInt c = 1;
  for (std::uint64_t i = 1; i <= j; ++i) {
    c *= r - j + i;
    c /= i;
  }
  return c;
}

std::uint64_t d_q(std::int64_t m, std::int64_t n) {
  require(m >= 2 && n >= 2, "Q(m,n) needs m >= 2 and n >= 2");
  const BigInt target = m;
  const auto j = static_cast<std::uint64_t>(n - 1);
  return min_r([&](std::uint64_t r) { return BigInt(r) * binomial(r, j) >= target; });
}

std::uint64_t dprime_q(std::int64_t m, std::int64_t n) {
  require(m >= 2 && n >= 3, "the index of Q(m,n) is only known for m >= 2 and n >= 3");
  return 2;
}

std::uint64_t d_dutch(std::int64_t n, std::int64_t k) {
  require(n >= 2 && k >= 3, "dutch windmill needs n >= 2 and k >= 3");
  const auto full = static_cast<std::uint64_t>(k - 1);
  const auto half = (full + 1) / 2;
  const BigInt target = BigInt(2) * n;
  return min_r([&](std::uint64_t r) { return power(r, full) - power(r, half) >= target; });
}

std::uint64_t d_dutch_odd_closed(std::int64_t n, std::int64_t m) {
  require(n >= 2 && m >= 1, "odd-k closed form needs n >= 2 and m >= 1");
  const BigInt target = BigInt(2) * n;
  const auto e = static_cast<std::uint64_t>(m);
  return min_r([&](std::uint64_t r) {
    BigInt rm = power(r, e);
    return rm * (rm - 1) >= target;
  });
}

std::uint64_t dprime_dutch(std::int64_t n, std::int64_t k) {
  require(n >= 2 && k >= 3, "dutch windmill needs n >= 2 and k >= 3");
  return d_dutch(n, k + 1);
}

FriendshipValues friendship_closed(std::int64_t n) {
  require(n >= 2, "friendship graph needs n >= 2");
  FriendshipValues v;
  const BigInt target = BigInt(2) * n;
  v.D = min_r([&](std::uint64_t r) { return BigInt(r) * (r - 1) >= target; });
  v.Dprime = min_r([&](std::uint64_t r) { return BigInt(r) * r * (r - 1) >= target; });

  const auto x = static_cast<double>(n);
  v.float_D = static_cast<std::uint64_t>(std::ceil((1.0 + std::sqrt(8.0 * x + 1.0)) / 2.0));
  const double a = 1.0 + 27.0 * x + 3.0 * std::sqrt(81.0 * x * x + 6.0 * x);
  const double c = std::cbrt(a);
  v.float_Dprime = static_cast<std::uint64_t>(std::ceil(c / 3.0 + 1.0 / (3.0 * c) + 1.0 / 3.0));
  return v;
}

FormulaResult chemical_constants(const gen::FamilySpec& spec) {
  FormulaResult result;
  result.kind = ResultKind::kExact;
  switch (spec.kind) {
    case FamilyKind::kSpiro:
    case FamilyKind::kPoly: {
      require_params(spec, 3);
      const auto q = spec.params[0];
      const auto h = spec.params[1];
      const auto k = spec.params[2];
      require(q >= 3 && h >= 1 && h <= q / 2 && k >= 1, "need q >= 3, 1 <= h <= floor(q/2), k >= 1");
      if (k < 2) {
        throw Error(ErrorCode::kOutOfTheoremScope, "chains and links of a single cycle are not covered");
      }
      if (spec.kind == FamilyKind::kSpiro) {
        const bool friendship_case = q == 3 && h == 1 && k == 2;
        result.D = friendship_case ? 3 : 2;
        result.Dprime = 2;
        result.source = friendship_case ? "spiro-chain S(3,1,2) = F_2: D = 3, D' = 2"
                                        : "spiro-chain: D = D' = 2";
      } else {
        result.D = 2;
        result.Dprime = 2;
        result.source = "polyphenylene: D = D' = 2";
      }
      return result;
    }
    case FamilyKind::kNanostar:
      require_params(spec, 1);
      require(spec.params[0] >= 1, "nanostar needs k >= 1");
      result.D = 2;
      result.Dprime = 2;
      result.source = "nanostar dendrimer: D = D' = 2";
      return result;
    default:
      break;
  }
  throw Error(ErrorCode::kBadParams,
              std::string(gen::to_string(spec.kind)) + " is not a spiro, poly or nanostar family");
}

FormulaResult composition_bound(const CompositionInputs& in) {
  require(!in.parts.empty(), "composition bound needs at least one part");
  FormulaResult result;
  result.kind = ResultKind::kUpperBound;
  std::uint64_t max_d = 0;
  std::uint64_t max_dp = 0;
  std::uint64_t sum_d = 0;
  std::uint64_t sum_dp = 0;
  for (const auto& p : in.parts) {
    max_d = std::max(max_d, p.D);
    max_dp = std::max(max_dp, p.Dprime);
    sum_d += p.D;
    sum_dp += p.Dprime;
  }
  switch (in.kind) {
    case CompositionKind::kBouquet:
      result.D = sum_d;
      result.Dprime = sum_dp;
      result.source = "bouquet: D <= sum D(G_i), D' <= sum D'(G_i)";
      break;
    case CompositionKind::kCircuit:
      require(in.cycle.has_value(), "circuit bound needs D(C_k) and D'(C_k)");
      result.D = std::max(max_d, in.cycle->D);
      result.Dprime = std::max(max_dp, in.cycle->Dprime);
      result.source = "circuit: D <= max(max D(G_i), D(C_k)), same for D'";
      break;
    case CompositionKind::kChain: {
      require(in.contact_degrees.size() + 1 == in.parts.size(),
              "chain bound needs the degrees of x_2..x_k");
      std::uint64_t max_deg = 0;
      for (auto d : in.contact_degrees) max_deg = std::max(max_deg, d);
      result.D = std::max(max_d, max_deg);
      result.Dprime = std::max(max_dp, max_deg);
      result.source = "chain: D <= max(max D(G_i), max deg x_i for i >= 2), same for D'";
      break;
    }
    case CompositionKind::kLink:
      result.D = max_d;
      result.Dprime = max_dp;
      result.source = "link: D <= max D(G_i), D' <= max D'(G_i)";
      break;
  }
  return result;
}

FormulaResult for_family(const gen::FamilySpec& spec) {
  FormulaResult result;
  result.kind = ResultKind::kExact;
  const auto& p = spec.params;
  switch (spec.kind) {
    case FamilyKind::kQGraph:
      require_params(spec, 2);
      result.D = d_q(p[0], p[1]);
      if (p[1] >= 3) result.Dprime = dprime_q(p[0], p[1]);
      result.source = "Q(m,n): D = min{r : r C(r, n-1) >= m}; D' = 2 for n >= 3";
      return result;
    case FamilyKind::kDutch:
      require_params(spec, 2);
      result.D = d_dutch(p[0], p[1]);
      result.Dprime = dprime_dutch(p[0], p[1]);
      result.source = "dutch windmill: D = min{r : (r^(k-1) - r^ceil((k-1)/2))/2 >= n}; D'(D(n,k)) = D(D(n,k+1))";
      return result;
    case FamilyKind::kFriendship: {
      require_params(spec, 1);
      auto v = friendship_closed(p[0]);
      result.D = v.D;
      result.Dprime = v.Dprime;
      result.source = "friendship: D = min{r : r(r-1) >= 2n}; D' = min{r : r^2(r-1) >= 2n}";
      return result;
    }
    case FamilyKind::kSpiro:
    case FamilyKind::kPoly:
    case FamilyKind::kNanostar:
      return chemical_constants(spec);
    default:
      break;
  }
  throw Error(ErrorCode::kUnknownFamily,
              "no closed form for family '" + std::string(gen::to_string(spec.kind)) + "'");
}

}  // namespace symbreak::formulas
