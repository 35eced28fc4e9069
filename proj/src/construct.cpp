#include "ppcd/construct.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "ppcd/verify.hpp"

namespace ppcd {

int Generator::weight() const {
  int w = 0;
  for (auto b : bits) w += b ? 1 : 0;
  return w;
}

Generator Generator::complemented() const {
  Generator g = *this;
  for (auto& b : g.bits) b ^= 1;
  return g;
}

Generator generator_from_string(const std::string& bits) {
  return Generator{profile_from_string(bits)};
}

std::string generator_to_string(const Generator& g) { return profile_to_string(g.bits); }

void validate_generator_set(const GeneratorSet& g, int n, int rho) {
  int lo = std::min(rho, n - rho), hi = std::max(rho, n - rho);
  if (lo + 1 > hi - 1 && !g.generators.empty())
    throw std::invalid_argument("generator weight range (" + std::to_string(lo) + "," +
                                std::to_string(hi) + ") is empty for n = " + std::to_string(n) +
                                ", rho = " + std::to_string(rho));
  for (size_t i = 0; i < g.generators.size(); ++i) {
    const auto& gi = g.generators[i];
    if (static_cast<int>(gi.bits.size()) != n)
      throw std::invalid_argument("generator length must equal n");
    int w = gi.weight();
    if (w <= lo || w >= hi)
      throw std::invalid_argument("generator " + generator_to_string(gi) + " has weight " +
                                  std::to_string(w) + ", outside the open range (" +
                                  std::to_string(lo) + "," + std::to_string(hi) + ")");
    for (size_t j = 0; j < i; ++j) {
      if (g.generators[j] == gi)
        throw std::invalid_argument("generator " + generator_to_string(gi) + " repeated");
      if (g.generators[j] == gi.complemented())
        throw std::invalid_argument("generators " + generator_to_string(g.generators[j]) + " and " +
                                    generator_to_string(gi) + " are complements of each other");
    }
  }
}

std::string method_name(Method m) {
  switch (m) {
    case Method::SaturatedW: return "saturated";
    case Method::MethodW: return "Method-W";
    case Method::MethodH: return "Method-H";
  }
  return "?";
}

IntMatrix cyclic_incidence(int n, int k) {
  if (k < 1 || k > n) throw std::invalid_argument("cyclic_incidence: need 1 <= k <= n");
  int rows = n / std::gcd(n, k);
  IntMatrix m(rows, std::vector<int>(n, 0));
  for (int b = 0; b < rows; ++b)
    for (int i = 0; i < k; ++i) m[b][(b * k + i) % n] = 1;
  return m;
}

namespace {

// Expands an incidence matrix: each 1 of a row becomes the next unused
// column of `w` (left to right), each 0 a zero column. Rows of blocks are
// stacked into the difference matrix.
PartialDesign expand_incidence(const IntMatrix& incidence, const IntMatrix& w, int n, int rho,
                               int fixed_level) {
  int block_rows = static_cast<int>(w.size());
  DifferenceMatrix x;
  for (const auto& row : incidence) {
    std::vector<int> assignment(n, -1);
    int next_col = 0;
    for (int j = 0; j < n; ++j)
      if (row[j]) assignment[j] = next_col++;
    for (int r = 0; r < block_rows; ++r) {
      std::vector<int> xrow(n, 0);
      for (int j = 0; j < n; ++j)
        if (assignment[j] >= 0) xrow[j] = w[r][assignment[j]];
      x.entries.push_back(std::move(xrow));
    }
  }
  DesignParams params{n, 2, rho, static_cast<int>(x.entries.size())};
  return paired_design_from_difference(x, params, fixed_level);
}

}  // namespace

std::optional<PartialDesign> construct_saturated(const Catalog& cat, int n, int rho,
                                                 int fixed_level) {
  auto w = cat.weighing(n, rho);
  if (!w) return std::nullopt;
  DifferenceMatrix x{w->entries};
  DesignParams params{n, 2, rho, n};
  return paired_design_from_difference(x, params, fixed_level);
}

PartialDesign construct_method_w(const Catalog& cat, int n, int rho, int nu, int fixed_level) {
  if (n < nu) throw std::invalid_argument("construct_method_w: need n >= nu");
  auto w = cat.weighing(nu, rho);
  if (!w) throw std::invalid_argument("construct_method_w: no W(" + std::to_string(nu) + "," +
                                      std::to_string(rho) + ") in the catalog");
  return expand_incidence(cyclic_incidence(n, nu), w->entries, n, rho, fixed_level);
}

PartialDesign construct_method_h(const Catalog& cat, int n, int rho, int fixed_level) {
  int h = cat.h_of(rho);
  auto hm = cat.hadamard(h);
  if (!hm) throw std::logic_error("construct_method_h: h_of returned an unavailable order");
  return expand_incidence(cyclic_incidence(n, rho), hm->entries, n, rho, fixed_level);
}

ConstructionPlan plan_minimum_N(const Catalog& cat, int n, int rho) {
  ConstructionPlan plan;
  plan.n = n;
  plan.rho = rho;
  if (n < 1 || rho < 1 || rho > n) {
    plan.reason = "need 1 <= rho <= n";
    return plan;
  }

  // Step 1: saturated design from W(n, rho).
  if (cat.weighing(n, rho)) {
    plan.plannable = true;
    plan.method = Method::SaturatedW;
    plan.N = n;
    return plan;
  }

  // Steps 2-4: best Method-W candidate over all smaller weighing orders.
  long long n1 = 0;
  int best_nu = 0;
  for (int nu : cat.weighing_orders_up_to(rho, n - 1)) {
    long long k = static_cast<long long>(n) * nu / std::gcd(n, nu);
    plan.candidates.emplace_back(nu, k);
    if (best_nu == 0 || k < n1) {
      n1 = k;
      best_nu = nu;
    }
  }
  plan.N1 = n1;
  plan.nu = best_nu;

  // Step 5: Method-H count.
  plan.h = cat.h_of(rho);
  plan.N2 = static_cast<long long>(n) * plan.h / std::gcd(n, rho);

  // Step 6. A tie goes to Method-W, except when the tying weighing matrix
  // is the Hadamard matrix H_rho itself (nu == rho): then Method-W and
  // Method-H build the identical design and the plan reports Method-H.
  if (best_nu != 0 && (n1 < plan.N2 || (n1 == plan.N2 && best_nu != rho))) {
    plan.plannable = true;
    plan.method = Method::MethodW;
    plan.N = n1;
  } else {
    plan.plannable = true;
    plan.method = Method::MethodH;
    plan.N = plan.N2;
    plan.nu = 0;
  }
  return plan;
}

PartialDesign construct_from_plan(const Catalog& cat, const ConstructionPlan& plan,
                                  int fixed_level) {
  if (!plan.plannable) throw std::invalid_argument("construct_from_plan: plan is not plannable");
  switch (plan.method) {
    case Method::SaturatedW: {
      auto d = construct_saturated(cat, plan.n, plan.rho, fixed_level);
      if (!d) throw std::logic_error("construct_from_plan: saturated plan without W(n,rho)");
      return *d;
    }
    case Method::MethodW:
      return construct_method_w(cat, plan.n, plan.rho, plan.nu, fixed_level);
    case Method::MethodH:
      return construct_method_h(cat, plan.n, plan.rho, fixed_level);
  }
  throw std::logic_error("construct_from_plan: unknown method");
}

Profile apply_generator(const Profile& option, const std::vector<std::uint8_t>& active,
                        const Generator& g) {
  if (option.size() != g.bits.size() || active.size() != g.bits.size())
    throw std::invalid_argument("apply_generator: length mismatch");
  Profile out = option;
  for (size_t r = 0; r < out.size(); ++r)
    if (active[r]) out[r] = static_cast<std::uint8_t>((out[r] + g.bits[r]) % 2);
  return out;
}

PartialDesign extend_to_m(const PartialDesign& d2, const GeneratorSet& g, int m) {
  if (d2.params.m != 2) throw std::invalid_argument("extend_to_m: base design must have m = 2");
  int alpha = static_cast<int>(g.generators.size());
  if (m < 2 || m > 2 * alpha + 2)
    throw std::invalid_argument("extend_to_m: need 2 <= m <= 2*alpha + 2");
  validate_generator_set(g, d2.params.n, d2.params.rho);
  if (!certify(d2, Model::Main).passed)
    throw std::invalid_argument("extend_to_m: base paired design fails the main-effects certificate");
  if (m == 2) return d2;

  PartialDesign d;
  d.params = d2.params;
  d.params.m = m;
  d.sets.reserve(d2.sets.size());
  for (const auto& cs : d2.sets) {
    ChoiceSet out;
    out.active = cs.active;
    out.profiles = cs.profiles;
    for (int i = 2; i < m; ++i)
      out.profiles.push_back(apply_generator(cs.profiles[i % 2], cs.active, g.generators[(i - 2) / 2]));
    d.sets.push_back(std::move(out));
  }
  auto report = validate_structure(d);
  for (const auto& issue : report.issues)
    if (issue.message.rfind("duplicate profiles", 0) == 0)
      throw std::invalid_argument("extend_to_m: generator set produces duplicate profiles in set " +
                                  std::to_string(issue.set + 1));
  if (!report.ok()) throw std::logic_error("extend_to_m: produced a structurally invalid design");
  return d;
}

std::optional<GeneratorSet> auto_generators(const PartialDesign& base, int count) {
  int n = base.params.n, rho = base.params.rho;
  int lo = std::min(rho, n - rho), hi = std::max(rho, n - rho);
  GeneratorSet g;
  g.rho = rho;
  if (count == 0) return g;
  if (lo + 1 > hi - 1) return std::nullopt;
  if (!certify(base, Model::Main).passed)
    throw std::invalid_argument("auto_generators: base design fails the main-effects certificate");

  // Candidates in ascending weight, lexicographic bit pattern within a
  // weight. A candidate is kept if the generator-set invariants still hold
  // and every choice set stays duplicate-free after extension.
  for (int w = lo + 1; w <= hi - 1 && static_cast<int>(g.generators.size()) < count; ++w) {
    // all n-bit patterns of weight w, lexicographic by one-position set
    std::vector<int> pos(w);
    std::iota(pos.begin(), pos.end(), 0);
    while (true) {
      Generator cand;
      cand.bits.assign(n, 0);
      for (int p : pos) cand.bits[p] = 1;
      GeneratorSet trial = g;
      trial.generators.push_back(cand);
      bool ok = true;
      try {
        validate_generator_set(trial, n, rho);
        extend_to_m(base, trial, 2 * static_cast<int>(trial.generators.size()) + 2);
      } catch (const std::invalid_argument&) {
        ok = false;
      }
      if (ok) {
        g = std::move(trial);
        if (static_cast<int>(g.generators.size()) == count) return g;
      }
      // next combination
      int i = w - 1;
      while (i >= 0 && pos[i] == n - w + i) --i;
      if (i < 0) break;
      ++pos[i];
      for (int j = i + 1; j < w; ++j) pos[j] = pos[j - 1] + 1;
    }
  }
  if (static_cast<int>(g.generators.size()) == count) return g;
  return std::nullopt;
}

PartialDesign construct_broader(const PartialDesign& d) {
  if (!certify(d, Model::Main).passed)
    throw std::invalid_argument("construct_broader: input fails the main-effects certificate");
  return stack(d, complement(d));
}

}  // namespace ppcd
