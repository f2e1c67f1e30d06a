#include "symbreak/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <random>
#include <thread>

#include "symbreak/distinguishing.hpp"
#include "symbreak/error.hpp"
#include "symbreak/formulas.hpp"

namespace symbreak::verify {

namespace {

using gen::FamilyKind;
using gen::FamilySpec;
using Clock = std::chrono::steady_clock;

FamilySpec simple_spec(FamilyKind kind, std::vector<std::int64_t> params) {
  FamilySpec spec;
  spec.kind = kind;
  spec.params = std::move(params);
  return spec;
}

std::pair<std::int64_t, std::int64_t> range_of(const Ranges& ranges, const std::string& name,
                                                std::pair<std::int64_t, std::int64_t> fallback) {
  auto it = ranges.find(name);
  auto r = it == ranges.end() ? fallback : it->second;
  if (r.first > r.second) {
    throw Error(ErrorCode::kBadParams, "empty range for --" + name);
  }
  return r;
}

void add_family(std::vector<Instance>& out, const std::string& family, const Ranges& ranges) {
  if (family == "dutch" || family == "transfer") {
    auto [n0, n1] = range_of(ranges, "n", {2, 4});
    auto [k0, k1] = range_of(ranges, "k", {3, 5});
    for (auto n = n0; n <= n1; ++n)
      for (auto k = k0; k <= k1; ++k)
        out.push_back({family, {n, k}, simple_spec(FamilyKind::kDutch, {n, k}),
                       family == "dutch" ? Check::kDutch : Check::kTransfer});
  } else if (family == "friendship") {
    auto [n0, n1] = range_of(ranges, "n", {2, 5});
    for (auto n = n0; n <= n1; ++n)
      out.push_back({family, {n}, simple_spec(FamilyKind::kFriendship, {n}), Check::kFriendship});
  } else if (family == "q" || family == "q_graph") {
    auto [m0, m1] = range_of(ranges, "m", {2, 5});
    auto [n0, n1] = range_of(ranges, "n", {2, 3});
    for (auto m = m0; m <= m1; ++m)
      for (auto n = n0; n <= n1; ++n)
        out.push_back({"q_graph", {m, n}, simple_spec(FamilyKind::kQGraph, {m, n}), Check::kQGraph});
  } else if (family == "spiro" || family == "poly") {
    auto [q0, q1] = range_of(ranges, "q", {3, 6});
    auto [h0, h1] = range_of(ranges, "h", {1, 3});
    auto [k0, k1] = range_of(ranges, "k", {2, 3});
    const auto kind = family == "spiro" ? FamilyKind::kSpiro : FamilyKind::kPoly;
    for (auto q = q0; q <= q1; ++q)
      for (auto h = std::max<std::int64_t>(h0, 1); h <= std::min(h1, q / 2); ++h)
        for (auto k = k0; k <= k1; ++k)
          out.push_back({family, {q, h, k}, simple_spec(kind, {q, h, k}), Check::kChemical});
  } else if (family == "nanostar") {
    auto [k0, k1] = range_of(ranges, "k", {1, 1});
    for (auto k = k0; k <= k1; ++k)
      out.push_back({family, {k}, simple_spec(FamilyKind::kNanostar, {k}), Check::kChemical});
  } else {
    throw Error(ErrorCode::kUnknownFamily, "no verification sweep for family '" + family + "'");
  }
}

std::string join_reason(const std::string& a, const std::string& b) {
  return a.empty() ? b : a + "; " + b;
}

struct Solved {
  AutGroup group;
  std::optional<DistResult> d;
  std::optional<DistResult> dprime;
};

Solved solve_part(const Graph& g, const RunConfig& config, const SearchLimits& limits) {
  Solved s;
  s.group = enumerate_automorphisms(g, config.aut_cap);
  if (s.group.capped()) throw Error(ErrorCode::kCappedGroup, "part group exceeds the cap");
  s.d = distinguishing_number(g, s.group, config.max_labels, limits);
  if (g.size() > 0) s.dprime = distinguishing_index(g, s.group, config.max_labels, limits);
  return s;
}

formulas::FormulaResult bound_for(const FamilySpec& spec, const Graph& g, const RunConfig& config,
                                  const SearchLimits& limits) {
  formulas::CompositionInputs in;
  switch (spec.kind) {
    case FamilyKind::kBouquet: in.kind = formulas::CompositionKind::kBouquet; break;
    case FamilyKind::kCircuit: in.kind = formulas::CompositionKind::kCircuit; break;
    case FamilyKind::kChain: in.kind = formulas::CompositionKind::kChain; break;
    case FamilyKind::kLink: in.kind = formulas::CompositionKind::kLink; break;
    default: throw Error(ErrorCode::kBadParams, "bound check needs a composition spec");
  }
  for (const auto& part : spec.parts) {
    auto solved = solve_part(gen::family(part.spec), config, limits);
    in.parts.push_back({solved.d->value, solved.dprime ? solved.dprime->value : 1});
  }
  if (in.kind == formulas::CompositionKind::kCircuit) {
    auto solved = solve_part(gen::cycle(spec.parts.size()), config, limits);
    in.cycle = formulas::PartValues{solved.d->value, solved.dprime->value};
  }
  if (in.kind == formulas::CompositionKind::kChain) {
    for (std::size_t i = 1; i < spec.parts.size(); ++i) {
      auto x = g.role("contact:" + std::to_string(i) + ":x");
      in.contact_degrees.push_back(g.degree(*x));
    }
  }
  return formulas::composition_bound(in);
}

bool compare(const std::string& kind, std::optional<std::uint64_t> formula,
             std::optional<std::uint64_t> oracle) {
  if (!formula || !oracle) return true;
  return kind == "upper_bound" ? *oracle <= *formula : *oracle == *formula;
}

void finish(Record& rec) {
  std::string why;
  if (!compare(rec.formula_kind, rec.formula_D, rec.oracle_D)) why = join_reason(why, "D differs");
  if (!compare(rec.formula_kind, rec.formula_Dprime, rec.oracle_Dprime)) {
    why = join_reason(why, "Dprime differs");
  }
  if (rec.formula_aut_order && rec.aut_order &&
      *rec.formula_aut_order != std::to_string(*rec.aut_order)) {
    why = join_reason(why, "aut_order differs");
  }
  const bool compared = (rec.formula_D && rec.oracle_D) || (rec.formula_Dprime && rec.oracle_Dprime);
  if (!why.empty()) {
    rec.status = Status::kMismatch;
    rec.reason = join_reason(rec.reason, why);
  } else if (!compared) {
    rec.status = Status::kSkipped;
    rec.reason = join_reason(rec.reason, "nothing compared");
  } else {
    rec.status = Status::kMatch;
  }
}

Record evaluate_unchecked(const Instance& inst, const RunConfig& config, Clock::time_point start) {
  Record rec;
  rec.family = inst.family;
  rec.params = inst.params;
  rec.spec = inst.spec;
  rec.formula_kind = "exact";

  const Graph g = gen::family(inst.spec);
  rec.n_vertices = g.order();
  rec.n_edges = g.size();
  if (g.order() > config.max_vertices) {
    rec.status = Status::kSkipped;
    rec.reason = "too_large: " + std::to_string(g.order()) + " vertices";
    return rec;
  }

  // Expected values never consult the graph.
  const auto& p = inst.params;
  switch (inst.check) {
    case Check::kDutch:
    case Check::kFriendship:
    case Check::kQGraph: {
      auto f = formulas::for_family(inst.spec);
      rec.formula_D = f.D;
      rec.formula_Dprime = f.Dprime;
      if (inst.check == Check::kDutch) {
        rec.formula_aut_order = group_order_formula_dutch(p[0], p[1]).str();
      } else if (inst.check == Check::kFriendship) {
        rec.formula_aut_order = group_order_formula_dutch(p[0], 3).str();
      }
      break;
    }
    case Check::kChemical: {
      try {
        auto f = formulas::chemical_constants(inst.spec);
        rec.formula_D = f.D;
        rec.formula_Dprime = f.Dprime;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kOutOfTheoremScope) throw;
        rec.status = Status::kSkipped;
        rec.reason = e.what();
        return rec;
      }
      break;
    }
    case Check::kTransfer:
      rec.formula_kind = "oracle";
      break;
    case Check::kBound:
      rec.formula_kind = "upper_bound";
      break;
  }

  SearchLimits limits;
  if (config.time_budget_ms > 0) limits.deadline = start + std::chrono::milliseconds(config.time_budget_ms);

  AutGroup group = enumerate_automorphisms(g, config.aut_cap);
  if (group.capped()) {
    rec.status = Status::kSkipped;
    rec.reason = "aut_cap: more than " + std::to_string(config.aut_cap) + " automorphisms";
    return rec;
  }
  rec.aut_order = group.order();

  if (inst.check == Check::kBound) {
    auto f = bound_for(inst.spec, g, config, limits);
    rec.formula_D = f.D;
    rec.formula_Dprime = f.Dprime;
  }

  if (inst.check != Check::kTransfer) {
    auto d = distinguishing_number(g, group, config.max_labels, limits);
    rec.oracle_D = d.value;
    rec.D_witness = d.witness;
    rec.D_checked_below = d.checked_r_below;
  }

  if (g.size() > 0 && g.size() <= config.max_edges) {
    if (inst.check == Check::kTransfer) {
      const Graph bigger = gen::dutch(p[0], p[1] + 1);
      if (bigger.order() > config.max_vertices) {
        rec.status = Status::kSkipped;
        rec.reason = "too_large: D(n,k+1) has " + std::to_string(bigger.order()) + " vertices";
        return rec;
      }
      AutGroup big_group = enumerate_automorphisms(bigger, config.aut_cap);
      if (big_group.capped()) {
        rec.status = Status::kSkipped;
        rec.reason = "aut_cap on D(n,k+1)";
        return rec;
      }
      rec.formula_Dprime = distinguishing_number(bigger, big_group, config.max_labels, limits).value;
    }
    auto dp = distinguishing_index(g, group, config.max_labels, limits);
    rec.oracle_Dprime = dp.value;
    rec.Dprime_witness = dp.witness;
    rec.Dprime_checked_below = dp.checked_r_below;
    rec.kernel_nontrivial = dp.kernel_nontrivial;
  } else if (g.size() > config.max_edges) {
    rec.reason = "edge oracle skipped: " + std::to_string(g.size()) + " edges";
  }
  finish(rec);
  return rec;
}

}  // namespace

std::vector<Instance> make_instances(const std::string& family, const Ranges& ranges) {
  std::vector<Instance> out;
  if (family == "all") {
    for (const char* f : {"dutch", "friendship", "q", "spiro", "poly", "nanostar", "transfer"}) {
      add_family(out, f, {});
    }
  } else {
    add_family(out, family, ranges);
  }
  return out;
}

std::vector<Instance> make_bound_instances(std::size_t samples, std::uint64_t seed,
                                           std::size_t max_order, std::uint64_t aut_limit) {
  std::vector<Instance> out;
  for (std::size_t i = 0; i < samples; ++i) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(i)};
    std::mt19937_64 rng(seq);
    auto uniform = [&](std::int64_t lo, std::int64_t hi) {
      return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
    };
    for (;;) {
      FamilySpec spec;
      const auto kinds = std::array{FamilyKind::kBouquet, FamilyKind::kCircuit, FamilyKind::kChain,
                                    FamilyKind::kLink};
      spec.kind = kinds[static_cast<std::size_t>(uniform(0, 3))];
      const auto parts = spec.kind == FamilyKind::kCircuit ? uniform(3, 4) : uniform(2, 3);
      std::size_t order = 0;
      for (std::int64_t j = 0; j < parts; ++j) {
        // K2 parts are left out: the edge convention D'(K2) = 1 is degenerate
        // for these bounds (a link of K2s is a path with D' = 2).
        gen::FamilyPart part;
        switch (uniform(0, 3)) {
          case 0: part.spec = simple_spec(FamilyKind::kComplete, {uniform(3, 5)}); break;
          case 1: part.spec = simple_spec(FamilyKind::kCycle, {uniform(3, 7)}); break;
          case 2: part.spec = simple_spec(FamilyKind::kPath, {uniform(3, 6)}); break;
          default: part.spec = simple_spec(FamilyKind::kStar, {uniform(2, 5)}); break;
        }
        const auto n = static_cast<std::int64_t>(gen::family(part.spec).order());
        part.x = static_cast<Vertex>(uniform(0, n - 1));
        if (spec.kind == FamilyKind::kChain || spec.kind == FamilyKind::kLink) {
          auto y = uniform(0, n - 2);
          if (y >= static_cast<std::int64_t>(std::get<Vertex>(part.x))) ++y;
          part.y = static_cast<Vertex>(y);
        }
        order += static_cast<std::size_t>(n);
        spec.parts.push_back(std::move(part));
      }
      const Graph g = gen::family(spec);
      if (g.order() > max_order) continue;
      if (enumerate_automorphisms(g, aut_limit).capped()) continue;
      out.push_back({"bounds", {static_cast<std::int64_t>(i)}, std::move(spec), Check::kBound});
      break;
    }
  }
  return out;
}

Record evaluate(const Instance& instance, const RunConfig& config) {
  const auto start = Clock::now();
  Record rec;
  try {
    rec = evaluate_unchecked(instance, config, start);
  } catch (const Error& e) {
    rec.family = instance.family;
    rec.params = instance.params;
    rec.spec = instance.spec;
    if (e.code() == ErrorCode::kTimeBudgetExceeded || e.code() == ErrorCode::kCappedGroup) {
      rec.status = Status::kSkipped;
    } else {
      rec.status = Status::kMismatch;
    }
    rec.reason = e.what();
  } catch (const std::exception& e) {
    rec.family = instance.family;
    rec.params = instance.params;
    rec.spec = instance.spec;
    rec.status = Status::kMismatch;
    rec.reason = e.what();
  }
  if (config.timing) {
    rec.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  }
  return rec;
}

Summary summarize(const std::vector<Record>& records) {
  Summary s;
  s.total = records.size();
  for (const auto& r : records) {
    switch (r.status) {
      case Status::kMatch:
        ++s.matched;
        if (!r.oracle_Dprime) ++s.dprime_unchecked;
        break;
      case Status::kMismatch: ++s.mismatched; break;
      case Status::kSkipped: ++s.skipped_too_large; break;
    }
  }
  return s;
}

Report run(const std::vector<Instance>& instances, const RunConfig& config,
           std::optional<std::uint64_t> seed) {
  Report report;
  report.config = config;
  report.seed = seed;
  report.records.resize(instances.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < instances.size(); i = next++) {
      report.records[i] = evaluate(instances[i], config);
    }
  };
  const unsigned jobs = std::max(1u, config.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }
  std::stable_sort(report.records.begin(), report.records.end(), [](const Record& a, const Record& b) {
    return std::tie(a.family, a.params) < std::tie(b.family, b.params);
  });
  report.summary = summarize(report.records);
  return report;
}

bool revalidate(const Record& record, std::uint64_t aut_cap) {
  if (record.D_witness.empty() && record.Dprime_witness.empty()) return true;
  const Graph g = gen::family(record.spec);
  const AutGroup group = enumerate_automorphisms(g, aut_cap);
  if (group.capped()) return false;
  if (!record.D_witness.empty()) {
    if (!record.oracle_D) return false;
    VertexLabeling labels(record.D_witness, static_cast<Label>(*record.oracle_D));
    if (!is_distinguishing_vertex(g, group, labels)) return false;
  }
  if (!record.Dprime_witness.empty()) {
    if (!record.oracle_Dprime) return false;
    EdgeLabeling labels(record.Dprime_witness, static_cast<Label>(*record.oracle_Dprime));
    if (!is_distinguishing_edge(g, group, labels)) return false;
  }
  return true;
}

}  // namespace symbreak::verify
