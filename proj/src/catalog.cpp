#include "ppcd/catalog.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace ppcd {

namespace detail {
extern const char* embedded_catalog_text;
}

bool is_weighing(const IntMatrix& entries, int weight) {
  int n = static_cast<int>(entries.size());
  if (n == 0) return false;
  for (const auto& row : entries)
    if (static_cast<int>(row.size()) != n) return false;
  for (int i = 0; i < n; ++i) {
    int row_nz = 0, col_nz = 0;
    for (int j = 0; j < n; ++j) {
      if (entries[i][j] < -1 || entries[i][j] > 1) return false;
      row_nz += entries[i][j] != 0;
      col_nz += entries[j][i] != 0;
    }
    if (row_nz != weight || col_nz != weight) return false;
  }
  auto wt = transpose(entries);
  return multiply(entries, wt) == scaled_identity(n, weight) &&
         multiply(wt, entries) == scaled_identity(n, weight);
}

namespace {

bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

// Paley type I: H = I + S over GF(q), q prime, q = 3 (mod 4).
IntMatrix paley_hadamard(int q) {
  std::vector<int> chi(q, -1);
  chi[0] = 0;
  for (int x = 1; x < q; ++x) chi[static_cast<int>((static_cast<long long>(x) * x) % q)] = 1;
  int r = q + 1;
  IntMatrix h(r, std::vector<int>(r, 0));
  for (int j = 1; j < r; ++j) h[0][j] = 1;
  for (int i = 1; i < r; ++i) h[i][0] = -1;
  for (int i = 1; i < r; ++i)
    for (int j = 1; j < r; ++j) h[i][j] = chi[((j - i) % q + q) % q];
  for (int i = 0; i < r; ++i) h[i][i] += 1;
  return h;
}

}  // namespace

Catalog Catalog::parse(std::istream& in, const std::string& source_name) {
  Catalog cat;
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw std::runtime_error(source_name + ":" + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream head(line);
    std::string kw;
    int order = 0, weight = 0;
    head >> kw >> order >> weight;
    if (kw != "matrix" || head.fail()) fail("expected 'matrix <order> <weight> <provenance>'");
    std::string provenance;
    std::getline(head, provenance);
    if (!provenance.empty() && provenance[0] == ' ') provenance.erase(0, 1);
    if (order < 1 || weight < 1 || weight > order) fail("bad order/weight");

    CatalogEntry e{order, weight, {}, provenance};
    for (int i = 0; i < order; ++i) {
      if (!std::getline(in, line)) fail("unexpected end of file inside matrix record");
      ++lineno;
      if (static_cast<int>(line.size()) != order) fail("row has wrong length");
      std::vector<int> row(order);
      for (int j = 0; j < order; ++j) {
        switch (line[j]) {
          case '+': row[j] = 1; break;
          case '-': row[j] = -1; break;
          case '0': row[j] = 0; break;
          default: fail("row characters must be one of '+', '-', '0'");
        }
      }
      e.entries.push_back(std::move(row));
    }
    if (!is_weighing(e.entries, e.weight))
      fail("matrix W(" + std::to_string(order) + "," + std::to_string(weight) +
           ") fails W W' = W' W = rho I verification");
    cat.entries_.push_back(std::move(e));
  }
  return cat;
}

Catalog Catalog::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open catalog file: " + path);
  return parse(in, path);
}

Catalog Catalog::load_default() {
  std::istringstream in(detail::embedded_catalog_text);
  return parse(in, "<embedded catalog>");
}

std::optional<WeighingMatrix> Catalog::hadamard(int r) const {
  if (r < 1) return std::nullopt;
  std::map<int, std::optional<IntMatrix>> memo;
  auto rec = [&](auto&& self, int k) -> std::optional<IntMatrix> {
    if (auto it = memo.find(k); it != memo.end()) return it->second;
    std::optional<IntMatrix> result;
    if (k == 1) {
      result = IntMatrix{{1}};
    } else if (k == 2) {
      result = IntMatrix{{1, 1}, {1, -1}};
    } else if (k % 4 == 0) {
      if (k % 2 == 0)
        if (auto half = self(self, k / 2)) result = kronecker(IntMatrix{{1, 1}, {1, -1}}, *half);
      if (!result && is_prime(k - 1) && (k - 1) % 4 == 3) result = paley_hadamard(k - 1);
      if (!result) {
        for (int a = 4; !result && a * a <= k; ++a) {
          if (k % a != 0) continue;
          auto ha = self(self, a);
          auto hb = self(self, k / a);
          if (ha && hb) result = kronecker(*ha, *hb);
        }
      }
    }
    if (!result) {
      for (const auto& e : entries_)
        if (e.order == k && e.weight == k) {
          result = e.entries;
          break;
        }
    }
    memo[k] = result;
    return result;
  };
  auto h = rec(rec, r);
  if (!h) return std::nullopt;
  if (!is_weighing(*h, r)) throw std::logic_error("hadamard construction failed verification");
  return WeighingMatrix{r, r, std::move(*h)};
}

std::optional<WeighingMatrix> Catalog::weighing(int n, int rho) const {
  if (rho < 1 || n < 1 || rho > n)
    throw std::invalid_argument("weighing: need 1 <= rho <= n");
  if (rho == n) return hadamard(n);
  if (rho == 1) return WeighingMatrix{n, 1, scaled_identity(n, 1)};
  if (rho == 2) {
    if (n % 2 != 0) return std::nullopt;
    IntMatrix h2{{1, 1}, {1, -1}};
    auto w = block_diagonal(std::vector<IntMatrix>(n / 2, h2));
    return WeighingMatrix{n, 2, std::move(w)};
  }
  for (const auto& e : entries_)
    if (e.order == n && e.weight == rho) return WeighingMatrix{n, rho, e.entries};
  return std::nullopt;
}

int Catalog::h_of(int rho) const {
  if (rho < 1) throw std::invalid_argument("h_of: rho must be positive");
  for (int r = rho;; ++r)
    if (hadamard(r)) return r;  // terminates: every power of two is constructible
}

std::vector<int> Catalog::weighing_orders_up_to(int rho, int n_max) const {
  std::vector<int> orders;
  for (int nu = rho; nu <= n_max; ++nu)
    if (weighing(nu, rho)) orders.push_back(nu);
  return orders;
}

}  // namespace ppcd
