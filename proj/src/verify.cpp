#include "ppcd/verify.hpp"

#include <stdexcept>

namespace ppcd {

int BalanceCounts::unordered_pair_index(int h, int k) const {
  // h < k, both in [0, n)
  return h * (2 * n - h - 1) / 2 + (k - h - 1);
}

BalanceCounts tally_counts(const PartialDesign& d) {
  const int n = d.params.n, m = d.params.m;
  BalanceCounts c;
  c.n = n;
  c.m = m;
  c.n_star = static_cast<long long>(d.sets.size()) * m * (m - 1) / 2;
  int npairs = n * (n - 1) / 2;
  c.eta1_plus.assign(npairs, 0);
  c.eta1_minus.assign(npairs, 0);
  c.eta2_plus.assign(n * n, 0);
  c.eta2_minus.assign(n * n, 0);
  c.eta3_plus.assign(static_cast<size_t>(n) * npairs, 0);
  c.eta3_minus.assign(static_cast<size_t>(n) * npairs, 0);
  c.n_ph.assign(d.sets.size(), std::vector<int>(n, 0));

  for (size_t p = 0; p < d.sets.size(); ++p) {
    const auto& cs = d.sets[p];
    for (int h = 0; h < n; ++h)
      for (const auto& prof : cs.profiles) c.n_ph[p][h] += prof[h] == 0;

    for (size_t i = 0; i < cs.profiles.size(); ++i) {
      for (size_t j = i + 1; j < cs.profiles.size(); ++j) {
        const Profile& a = cs.profiles[i];
        const Profile& b = cs.profiles[j];
        for (int h = 0; h < n; ++h) {
          if (a[h] == b[h]) continue;
          // a_h != b_h: orient the pair so `zero` is the profile with level 0 at h
          const Profile& zero = a[h] == 0 ? a : b;
          const Profile& one = a[h] == 0 ? b : a;
          for (int k = 0; k < n; ++k) {
            if (k == h) continue;
            if (a[k] != b[k]) {
              if (k > h) {  // count each unordered {h,k} once
                int idx = c.unordered_pair_index(h, k);
                // both factors change: {00,11} when the h and k levels agree
                // within each profile, {01,10} otherwise
                (a[h] == a[k] ? c.eta1_plus : c.eta1_minus)[idx]++;
              }
            } else {
              (a[k] == 1 ? c.eta2_plus : c.eta2_minus)[static_cast<size_t>(h) * n + k]++;
            }
          }
          for (int k = 0; k < n; ++k) {
            if (k == h) continue;
            for (int l = k + 1; l < n; ++l) {
              if (l == h) continue;
              bool zero_mixed = zero[k] != zero[l];
              bool one_mixed = one[k] != one[l];
              if (zero_mixed == one_mixed) continue;
              size_t idx = static_cast<size_t>(h) * (n * (n - 1) / 2) + c.unordered_pair_index(k, l);
              (zero_mixed ? c.eta3_plus : c.eta3_minus)[idx]++;
            }
          }
        }
      }
    }
  }
  return c;
}

Rational InformationMatrix::trace() const {
  Rational t(0);
  for (int i = 0; i < dim(); ++i) t = t + entries[i][i];
  return t;
}

bool InformationMatrix::is_diagonal() const {
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j)
      if (i != j && entries[i][j] != Rational(0)) return false;
  return true;
}

InformationMatrix c_matrix_from_counts(const BalanceCounts& counts, const DesignParams& params) {
  if (params.n > 40) throw std::invalid_argument("c_matrix_from_counts: n too large for exact 2^n");
  const int n = params.n, m = params.m;
  long long denom = (1LL << n) * params.N * m * m;
  InformationMatrix c;
  c.entries.assign(n, std::vector<Rational>(n, Rational(0)));
  for (int h = 0; h < n; ++h) {
    long long diag = 0;
    for (const auto& row : counts.n_ph) diag += 4LL * row[h] * (m - row[h]);
    c.entries[h][h] = Rational(diag, denom);
    for (int k = h + 1; k < n; ++k) {
      int idx = counts.unordered_pair_index(h, k);
      Rational off(4 * (counts.eta1_plus[idx] - counts.eta1_minus[idx]), denom);
      c.entries[h][k] = off;
      c.entries[k][h] = off;
    }
  }
  return c;
}

Rational max_trace_bound(const DesignParams& params) {
  if (params.n > 40) throw std::invalid_argument("max_trace_bound: n too large for exact 2^n");
  long long two_n = 1LL << params.n;
  if (params.m % 2 == 0) return Rational(params.rho, two_n);
  return Rational(static_cast<long long>(params.rho) * (params.m * params.m - 1),
                  two_n * params.m * params.m);
}

std::string model_name(Model m) { return m == Model::Main ? "main" : "broader"; }

OptimalityCertificate certify(const PartialDesign& d, Model model) {
  auto structure = validate_structure(d);
  if (!structure.ok())
    throw std::invalid_argument("certify: design is structurally invalid: " +
                                structure.issues.front().message);

  const int n = d.params.n, m = d.params.m;
  auto counts = tally_counts(d);

  OptimalityCertificate cert;
  cert.model = model;

  for (int h = 0; h < n; ++h)
    for (int k = h + 1; k < n; ++k) {
      int idx = counts.unordered_pair_index(h, k);
      if (counts.eta1_plus[idx] != counts.eta1_minus[idx]) cert.unbalanced_eta1.emplace_back(h, k);
    }

  // Trace is maximal iff every active n_ph splits the m profiles as evenly
  // as possible.
  for (size_t p = 0; p < d.sets.size(); ++p)
    for (int h = 0; h < n; ++h) {
      if (!d.sets[p].active[h]) continue;
      int z = counts.n_ph[p][h];
      bool ok = m % 2 == 0 ? z == m / 2 : (z == (m - 1) / 2 || z == (m + 1) / 2);
      if (!ok) cert.bad_nph.emplace_back(static_cast<int>(p), h);
    }

  auto c = c_matrix_from_counts(counts, d.params);
  cert.trace = c.trace();
  cert.trace_bound = max_trace_bound(d.params);
  cert.trace_max = cert.trace == cert.trace_bound;

  cert.connected = cert.unbalanced_eta1.empty();
  for (int h = 0; h < n && cert.connected; ++h)
    if (!(c.entries[h][h].num > 0)) cert.connected = false;

  cert.passed = cert.unbalanced_eta1.empty() && cert.bad_nph.empty() && cert.trace_max &&
                cert.connected;

  if (model == Model::Broader) {
    for (int h = 0; h < n; ++h)
      for (int k = 0; k < n; ++k) {
        if (h == k) continue;
        size_t idx = static_cast<size_t>(h) * n + k;
        if (counts.eta2_plus[idx] != counts.eta2_minus[idx]) cert.unbalanced_eta2.emplace_back(h, k);
      }
    for (int h = 0; h < n; ++h)
      for (int k = 0; k < n; ++k) {
        if (k == h) continue;
        for (int l = k + 1; l < n; ++l) {
          if (l == h) continue;
          size_t idx = static_cast<size_t>(h) * (n * (n - 1) / 2) + counts.unordered_pair_index(k, l);
          if (counts.eta3_plus[idx] != counts.eta3_minus[idx])
            cert.unbalanced_eta3.emplace_back(h, k, l);
        }
      }
    cert.passed = cert.passed && cert.unbalanced_eta2.empty() && cert.unbalanced_eta3.empty();
  }
  return cert;
}

// ---------------------------------------------------------------------------
// Brute-force engine
// ---------------------------------------------------------------------------

int treatment_index(const Profile& p) {
  int idx = 0;
  for (auto b : p) idx = (idx << 1) | b;
  return idx;
}

Eigen::MatrixXd brute_force_lambda(const PartialDesign& d) {
  const int n = d.params.n, m = d.params.m;
  if (n > kBruteForceMaxFactors)
    throw std::invalid_argument("brute_force_lambda: n exceeds the 2^n size guard");
  const long size = 1L << n;
  Eigen::MatrixXd lambda = Eigen::MatrixXd::Zero(size, size);
  for (const auto& cs : d.sets) {
    std::vector<int> members;
    members.reserve(cs.profiles.size());
    for (const auto& prof : cs.profiles) members.push_back(treatment_index(prof));
    for (int s : members) lambda(s, s) += m - 1;
    for (int s : members)
      for (int t : members)
        if (s != t) lambda(s, t) -= 1;
  }
  lambda /= static_cast<double>(d.params.N) * m * m;
  return lambda;
}

Eigen::MatrixXd main_effect_contrasts(int n) {
  const long size = 1L << n;
  Eigen::MatrixXd b(n, size);
  for (int h = 0; h < n; ++h)
    for (long i = 0; i < size; ++i) b(h, i) = ((i >> (n - 1 - h)) & 1) ? 1.0 : -1.0;
  return b;
}

Eigen::MatrixXd interaction_contrasts(int n) {
  const long size = 1L << n;
  auto b1 = main_effect_contrasts(n);
  Eigen::MatrixXd b(n * (n - 1) / 2, size);
  int r = 0;
  for (int k = 0; k < n; ++k)
    for (int l = k + 1; l < n; ++l, ++r) b.row(r) = b1.row(k).cwiseProduct(b1.row(l));
  return b;
}

int effect_value(const Effect& e, const Profile& p) {
  auto bit = [&p](int h) { return p[h] ? 1 : -1; };
  return e.is_main() ? bit(e.h) : bit(e.h) * bit(e.k);
}

long long pair_contrast(const Profile& a, const Profile& b, const Effect& x, const Effect& y) {
  long long dx = effect_value(x, a) - effect_value(x, b);
  long long dy = effect_value(y, a) - effect_value(y, b);
  return dx * dy;
}

long long contrast_product(const Effect& x, const Effect& y, const PartialDesign& d) {
  long long total = 0;
  for (const auto& cs : d.sets)
    for (size_t i = 0; i < cs.profiles.size(); ++i)
      for (size_t j = i + 1; j < cs.profiles.size(); ++j)
        total += pair_contrast(cs.profiles[i], cs.profiles[j], x, y);
  return total;
}

Eigen::MatrixXd brute_force_c_matrix(const PartialDesign& d) {
  auto lambda = brute_force_lambda(d);
  auto b1 = main_effect_contrasts(d.params.n);
  return (b1 * lambda * b1.transpose()) / std::pow(2.0, d.params.n);
}

Eigen::MatrixXd broader_c_matrix(const PartialDesign& d) {
  auto lambda = brute_force_lambda(d);
  auto b1 = main_effect_contrasts(d.params.n);
  auto b2 = interaction_contrasts(d.params.n);
  Eigen::MatrixXd l1 = b1 * lambda * b1.transpose();
  Eigen::MatrixXd l12 = b1 * lambda * b2.transpose();
  Eigen::MatrixXd l22 = b2 * lambda * b2.transpose();

  // Generalized inverse by eigendecomposition; Lambda is rank deficient
  // (zero row sums), so small eigenvalues are treated as exact zeros.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(l22);
  Eigen::VectorXd inv = eig.eigenvalues();
  for (int i = 0; i < inv.size(); ++i) inv(i) = std::abs(inv(i)) > 1e-9 ? 1.0 / inv(i) : 0.0;
  Eigen::MatrixXd l22_ginv =
      eig.eigenvectors() * inv.asDiagonal() * eig.eigenvectors().transpose();

  return (l1 - l12 * l22_ginv * l12.transpose()) / std::pow(2.0, d.params.n);
}

}  // namespace ppcd
