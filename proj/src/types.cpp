#include "ppcd/types.hpp"

namespace ppcd {

IntMatrix transpose(const IntMatrix& a) {
  if (a.empty()) return {};
  IntMatrix r(a[0].size(), std::vector<int>(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) r[j][i] = a[i][j];
  return r;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.empty() || b.empty()) return {};
  size_t rows = a.size(), inner = b.size(), cols = b[0].size();
  IntMatrix r(rows, std::vector<int>(cols, 0));
  for (size_t i = 0; i < rows; ++i)
    for (size_t k = 0; k < inner; ++k) {
      int aik = a[i][k];
      if (aik == 0) continue;
      for (size_t j = 0; j < cols; ++j) r[i][j] += aik * b[k][j];
    }
  return r;
}

IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b) {
  if (a.empty() || b.empty()) return {};
  size_t ar = a.size(), ac = a[0].size(), br = b.size(), bc = b[0].size();
  IntMatrix r(ar * br, std::vector<int>(ac * bc, 0));
  for (size_t i = 0; i < ar; ++i)
    for (size_t j = 0; j < ac; ++j)
      for (size_t p = 0; p < br; ++p)
        for (size_t q = 0; q < bc; ++q) r[i * br + p][j * bc + q] = a[i][j] * b[p][q];
  return r;
}

IntMatrix scaled_identity(int n, int c) {
  IntMatrix r(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) r[i][i] = c;
  return r;
}

IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks) {
  int total = 0;
  for (const auto& b : blocks) total += static_cast<int>(b.size());
  IntMatrix r(total, std::vector<int>(total, 0));
  int off = 0;
  for (const auto& b : blocks) {
    int k = static_cast<int>(b.size());
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) r[off + i][off + j] = b[i][j];
    off += k;
  }
  return r;
}

}  // namespace ppcd
