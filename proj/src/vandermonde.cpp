#include "sdspectra/vandermonde.hpp"

#include <cmath>

#include "sdspectra/error.hpp"

namespace sdspectra {

CMat vandermonde_matrix(const std::vector<cplx>& nodes) {
  const int n = int(nodes.size());
  CMat a(n, n);
  for (int i = 0; i < n; ++i) {
    cplx p = 1.0;
    for (int j = 0; j < n; ++j) {
      a(i, j) = p;
      p *= nodes[std::size_t(i)];
    }
  }
  return a;
}

void check_nodes(const std::vector<cplx>& nodes, double guard) {
  for (std::size_t a = 0; a < nodes.size(); ++a)
    for (std::size_t b = a + 1; b < nodes.size(); ++b)
      if (std::abs(nodes[a] - nodes[b]) < guard)
        throw ConditioningError("Vandermonde nodes " + std::to_string(a + 1) + " and " + std::to_string(b + 1) + " nearly coincide");
}

CMat inv_L(const std::vector<cplx>& nodes) {
  check_nodes(nodes);
  const int n = int(nodes.size());
  CMat li = CMat::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    // (L^{-1})_{i,j} = prod_{k<=i, k!=j} 1/(x_j - x_k); extend the product row by row
    cplx p = 1.0;
    for (int k = 0; k < j; ++k) p /= nodes[std::size_t(j)] - nodes[std::size_t(k)];
    li(j, j) = p;
    for (int i = j + 1; i < n; ++i) {
      p /= nodes[std::size_t(j)] - nodes[std::size_t(i)];
      li(i, j) = p;
    }
  }
  return li;
}

CMat inv_U(const std::vector<cplx>& nodes) {
  const int n = int(nodes.size());
  CMat ui = CMat::Zero(n, n);
  // e[m] = e_m(x_1..x_{j-1}) while filling column j
  std::vector<cplx> e(std::size_t(n) + 1, 0.0);
  e[0] = 1.0;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i <= j; ++i) ui(i, j) = ((i + j) % 2 == 0 ? 1.0 : -1.0) * e[std::size_t(j - i)];
    for (int m = j + 1; m >= 1; --m) e[std::size_t(m)] += nodes[std::size_t(j)] * e[std::size_t(m - 1)];
  }
  return ui;
}

CMat inv_U_recursive(const std::vector<cplx>& nodes) {
  const int n = int(nodes.size());
  CMat ui = CMat::Zero(n, n);
  if (n == 0) return ui;
  ui(0, 0) = 1.0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i <= j; ++i) {
      const cplx up = i > 0 ? ui(i - 1, j - 1) : cplx(0.0);
      ui(i, j) = up - ui(i, j - 1) * nodes[std::size_t(j - 1)];
    }
  return ui;
}

CMat vand_inverse(const std::vector<cplx>& nodes) { return inv_U(nodes) * inv_L(nodes); }

}  // namespace sdspectra
