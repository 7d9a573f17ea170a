#pragma once

#include <vector>

#include "sdspectra/linalg.hpp"

namespace sdspectra {

// A_{i,j} = x_i^{j-1}, 1-based.
CMat vandermonde_matrix(const std::vector<cplx>& nodes);

// Throws ConditioningError when two nodes are closer than 1e-10.
void check_nodes(const std::vector<cplx>& nodes, double guard = 1e-10);

// A = L U with U unit upper triangular; these are the explicit inverse factors.
CMat inv_L(const std::vector<cplx>& nodes);
CMat inv_U(const std::vector<cplx>& nodes);            // elementary symmetric form
CMat inv_U_recursive(const std::vector<cplx>& nodes);  // column recursion form
CMat vand_inverse(const std::vector<cplx>& nodes);     // inv_U * inv_L

}  // namespace sdspectra
