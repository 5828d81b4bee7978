#ifndef IE_CTREP_HPP
#define IE_CTREP_HPP

#include <vector>

#include "ie/ctvector.hpp"
#include "ie/liealg.hpp"
#include "ie/linalg.hpp"

namespace ie {

/// The defining action on the tree vector space, extended bilinearly:
/// insertion grafts t below every vertex, elimination sums root parts over
/// cuts whose pruned part equals t, and the grading element scales a tree
/// by its vertex count. All three annihilate the empty tree.
CTVector act(const LieElement& x, const CTVector& v);

/// The action on the quotient by the empty-tree line. The input must carry
/// no empty-tree component (DomainError otherwise); the empty-tree
/// component of the image is deleted.
CTVector act_on_m(const LieElement& x, const CTVector& v);

/// Matrix of act restricted to degree n -> degree n + deg(x), in the
/// enumerate_trees bases (degree 0 is spanned by the empty tree).
/// x must be homogeneous and nonzero.
RationalMatrix operator_matrix(const LieElement& x, int n, int max_size = kDefaultMaxSize);

struct OracleReport {
  bool ok = true;
  /// Degree of the first discrepancy, or -1.
  int first_failure_n = -1;
  int checked_levels = 0;
};

/// Verifies that the structure-constant bracket of two basis elements acts
/// as the commutator of their operator matrices on every applicable degree
/// up to max_n. A discrepancy is a report outcome, not an exception.
OracleReport oracle_bracket_check(const BasisElement& x, const BasisElement& y,
                                  int max_n, int max_size = kDefaultMaxSize);

/// Dimensions of the graded pieces of the tree space: 1, r_1, ..., r_n.
std::vector<long long> ct_character(int n, int max_size = kDefaultMaxSize);

}  // namespace ie

#endif
