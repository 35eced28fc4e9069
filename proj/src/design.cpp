#include "ppcd/design.hpp"

#include <algorithm>
#include <set>

namespace ppcd {

void DesignParams::validate() const {
  if (n < 1) throw std::invalid_argument("DesignParams: n must be positive");
  if (m < 2) throw std::invalid_argument("DesignParams: m must be at least 2");
  if (rho < 1 || rho > n) throw std::invalid_argument("DesignParams: need 1 <= rho <= n");
  if (N < 1) throw std::invalid_argument("DesignParams: N must be positive");
}

Profile profile_from_string(const std::string& bits) {
  Profile p;
  p.reserve(bits.size());
  for (char c : bits) {
    if (c != '0' && c != '1') throw std::invalid_argument("profile_from_string: bad character");
    p.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return p;
}

std::string profile_to_string(const Profile& p) {
  std::string s;
  s.reserve(p.size());
  for (auto b : p) s.push_back(b ? '1' : '0');
  return s;
}

int ChoiceSet::active_count() const {
  int c = 0;
  for (auto a : active) c += a ? 1 : 0;
  return c;
}

PartialDesign paired_design_from_difference(const DifferenceMatrix& x, const DesignParams& params,
                                            int fixed_level) {
  params.validate();
  if (params.m != 2)
    throw std::invalid_argument("paired_design_from_difference: only m = 2 is supported");
  if (fixed_level != 0 && fixed_level != 1)
    throw std::invalid_argument("paired_design_from_difference: fixed_level must be 0 or 1");
  if (x.rows() != params.N || x.cols() != params.n)
    throw std::invalid_argument("paired_design_from_difference: X shape does not match params");

  PartialDesign d;
  d.params = params;
  d.sets.reserve(params.N);
  for (int p = 0; p < params.N; ++p) {
    ChoiceSet cs;
    cs.active.assign(params.n, 0);
    Profile a1(params.n), a2(params.n);
    int nonzeros = 0;
    for (int r = 0; r < params.n; ++r) {
      switch (x.entries[p][r]) {
        case 1:
          a1[r] = 1;
          a2[r] = 0;
          cs.active[r] = 1;
          ++nonzeros;
          break;
        case -1:
          a1[r] = 0;
          a2[r] = 1;
          cs.active[r] = 1;
          ++nonzeros;
          break;
        case 0:
          a1[r] = a2[r] = static_cast<std::uint8_t>(fixed_level);
          break;
        default:
          throw std::invalid_argument("paired_design_from_difference: entries must be in {-1,0,1}");
      }
    }
    if (nonzeros != params.rho)
      throw std::invalid_argument("paired_design_from_difference: row " + std::to_string(p) +
                                  " has " + std::to_string(nonzeros) + " nonzeros, expected rho = " +
                                  std::to_string(params.rho));
    cs.profiles = {std::move(a1), std::move(a2)};
    d.sets.push_back(std::move(cs));
  }
  return d;
}

DifferenceMatrix difference_from_paired_design(const PartialDesign& d) {
  if (d.params.m != 2)
    throw std::invalid_argument("difference_from_paired_design: only m = 2 is supported");
  DifferenceMatrix x;
  x.entries.assign(d.sets.size(), std::vector<int>(d.params.n, 0));
  for (size_t p = 0; p < d.sets.size(); ++p) {
    const auto& cs = d.sets[p];
    for (int r = 0; r < d.params.n; ++r)
      if (cs.active[r]) x.entries[p][r] = static_cast<int>(cs.profiles[0][r]) - cs.profiles[1][r];
  }
  return x;
}

PartialDesign complement(const PartialDesign& d) {
  PartialDesign r = d;
  for (auto& cs : r.sets)
    for (auto& prof : cs.profiles)
      for (auto& b : prof) b ^= 1;
  return r;
}

PartialDesign stack(const PartialDesign& d1, const PartialDesign& d2) {
  if (d1.params.n != d2.params.n || d1.params.m != d2.params.m || d1.params.rho != d2.params.rho)
    throw std::invalid_argument("stack: designs must share n, m and rho");
  PartialDesign r = d1;
  r.params.N = d1.params.N + d2.params.N;
  r.sets.insert(r.sets.end(), d2.sets.begin(), d2.sets.end());
  return r;
}

PartialDesign kronecker_inflate(const PartialDesign& d, int t, int fixed_level) {
  if (t < 1) throw std::invalid_argument("kronecker_inflate: t must be at least 1");
  if (fixed_level != 0 && fixed_level != 1)
    throw std::invalid_argument("kronecker_inflate: fixed_level must be 0 or 1");
  int n = d.params.n;
  PartialDesign r;
  r.params = d.params;
  r.params.n = n * t;
  r.params.N = d.params.N * t;
  r.sets.reserve(r.params.N);
  for (int b = 0; b < t; ++b) {
    for (const auto& cs : d.sets) {
      ChoiceSet out;
      out.active.assign(n * t, 0);
      for (int j = 0; j < n; ++j) out.active[b * n + j] = cs.active[j];
      for (const auto& prof : cs.profiles) {
        Profile p(n * t, static_cast<std::uint8_t>(fixed_level));
        for (int j = 0; j < n; ++j) p[b * n + j] = prof[j];
        out.profiles.push_back(std::move(p));
      }
      r.sets.push_back(std::move(out));
    }
  }
  return r;
}

ValidationReport validate_structure(const PartialDesign& d) {
  ValidationReport rep;
  auto add = [&rep](int set, int pos, std::string msg) {
    rep.issues.push_back({set, pos, std::move(msg)});
  };

  try {
    d.params.validate();
  } catch (const std::invalid_argument& e) {
    add(-1, -1, e.what());
    return rep;
  }
  if (static_cast<int>(d.sets.size()) != d.params.N)
    add(-1, -1, "design has " + std::to_string(d.sets.size()) + " sets, header says N = " +
                    std::to_string(d.params.N));

  for (size_t p = 0; p < d.sets.size(); ++p) {
    const auto& cs = d.sets[p];
    int sp = static_cast<int>(p);
    if (static_cast<int>(cs.active.size()) != d.params.n) {
      add(sp, -1, "active mask length mismatch");
      continue;
    }
    if (static_cast<int>(cs.profiles.size()) != d.params.m)
      add(sp, -1, "choice set has " + std::to_string(cs.profiles.size()) + " profiles, expected m = " +
                      std::to_string(d.params.m));
    if (cs.active_count() != d.params.rho)
      add(sp, -1, "active mask has " + std::to_string(cs.active_count()) +
                      " active factors, expected rho = " + std::to_string(d.params.rho));
    bool lengths_ok = true;
    for (const auto& prof : cs.profiles)
      if (static_cast<int>(prof.size()) != d.params.n) lengths_ok = false;
    if (!lengths_ok) {
      add(sp, -1, "profile length mismatch");
      continue;
    }
    for (int h = 0; h < d.params.n; ++h) {
      if (cs.active[h] || cs.profiles.empty()) continue;
      auto level = cs.profiles[0][h];
      for (const auto& prof : cs.profiles)
        if (prof[h] != level) {
          add(sp, h, "inactive position carries two different levels");
          break;
        }
    }
    for (size_t i = 0; i < cs.profiles.size(); ++i)
      for (size_t j = i + 1; j < cs.profiles.size(); ++j)
        if (cs.profiles[i] == cs.profiles[j])
          add(sp, -1, "duplicate profiles at options " + std::to_string(i + 1) + " and " +
                          std::to_string(j + 1));
  }
  return rep;
}

}  // namespace ppcd
