#ifndef IE_VERMA_HPP
#define IE_VERMA_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "ie/liealg.hpp"
#include "ie/linalg.hpp"
#include "ie/poly.hpp"
#include "ie/tree.hpp"

namespace ie {

/// Default guard for singular-vector systems; the largest default pencil is
/// about 30 x 20.
inline constexpr int kDefaultSystemGuard = 5;

/// Element of a Verma module with symbolic lowest weight: a finite
/// combination of forest monomials D+_{t_k} ... D+_{t_1}.v (members sorted
/// non-decreasing, the smallest applied first) with coefficients in ZZ[lam].
/// All supporting forests share the same total size, the weight offset
/// above the lowest weight.
class VermaVector {
public:
  VermaVector() = default;
  explicit VermaVector(int weight_offset) : weight_offset_(weight_offset) {}

  static VermaVector monomial(Forest f);

  int weight_offset() const { return weight_offset_; }
  const std::map<Forest, LambdaPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LambdaPoly coeff(const Forest& f) const;

  void add(const Forest& f, const LambdaPoly& c);

  VermaVector& operator+=(const VermaVector& o);
  VermaVector& operator-=(const VermaVector& o);
  VermaVector& operator*=(const LambdaPoly& c);

  friend VermaVector operator+(VermaVector a, const VermaVector& b) { return a += b; }
  friend VermaVector operator-(VermaVector a, const VermaVector& b) { return a -= b; }

  friend bool operator==(const VermaVector& a, const VermaVector& b) {
    return a.terms_ == b.terms_ && (a.is_zero() || a.weight_offset_ == b.weight_offset_);
  }
  friend bool operator!=(const VermaVector& a, const VermaVector& b) { return !(a == b); }

  /// Terms "poly*[forest]" joined by "+"/"-", e.g. "(2*lam+1)*[()] + 1*[(())]";
  /// the empty forest renders as "[1]" and the zero vector as "0".
  std::string to_string() const;

private:
  std::map<Forest, LambdaPoly> terms_;
  int weight_offset_ = 0;
};

/// Rewrites the operator word D+_{word[0]} D+_{word[1]} ... (leftmost
/// outermost, the last entry applied to the generator first) into the
/// normal-ordered monomial basis. Coefficients are integers.
VermaVector pbw_sort(const std::vector<RootedTree>& word);

/// Action of a generator on a Verma vector: insertion multiplies and
/// re-sorts, the grading element scales by (lam + offset), elimination
/// pushes through by the normal-ordering identity and kills the generator.
VermaVector apply_basis_op(const BasisElement& b, const VermaVector& w);

/// One lowest-weight condition row: the coefficient of monomial J in
/// D-_t applied to a column monomial.
struct SingularRow {
  RootedTree t;
  Forest j;
};

/// The linear system expressing "D-_t w = 0 for all |t| <= n" on the weight
/// space at offset n, split as A + lam*B with integer matrices.
struct SingularSystem {
  int n = 0;
  std::vector<Forest> columns;
  std::vector<SingularRow> rows;
  ZMatrix a;
  ZMatrix b;

  PolyMatrix pencil() const;
};

/// Assembles the full (generally overdetermined) system: columns indexed by
/// the forests of size n, one row per pair (t, J) with 1 <= |t| <= n and
/// |J| = n - |t|. Rows are grouped by t in descending tree order, J
/// ascending within a group.
SingularSystem singular_system(int n, int max_n = kDefaultSystemGuard);

struct GenericDetReport {
  /// The pencil has nontrivial kernel for every lam.
  bool rank_deficient = false;
  std::size_t generic_rank = 0;
  /// Determinant of the selected maximal square submatrix (of the whole
  /// matrix when square). Its roots contain every weight where the kernel
  /// jumps.
  LambdaPoly det;
  /// Rows of the selected submatrix, ascending.
  std::vector<std::size_t> pivot_rows;
};

GenericDetReport generic_det(const SingularSystem& sys);
GenericDetReport generic_det(int n, int max_n = kDefaultSystemGuard);

struct ExceptionalReport {
  bool rank_deficient = false;
  /// Rational weights where the kernel is confirmed nontrivial, ascending.
  std::vector<Rational> confirmed;
  /// Cofactor of the generic determinant with no rational roots; its
  /// complex roots remain undecided.
  LambdaPoly residual;
};

/// Rational members of the exceptional set at offset n: rational roots of
/// the generic determinant, each confirmed by evaluating the pencil and
/// computing its kernel.
ExceptionalReport exceptional_candidates(int n, int max_n = kDefaultSystemGuard);

/// Kernel basis of the pencil at a concrete weight, returned as Verma
/// vectors with primitive integer coefficients. Every returned vector is
/// re-verified by applying each D-_t directly.
std::vector<VermaVector> kernel_at(const Rational& lambda0, int n,
                                   int max_n = kDefaultSystemGuard);

struct VermaCharacterReport {
  /// Weight-space dimensions f_0 ... f_n.
  std::vector<long long> dims;
  /// f_k = r_{k+1} holds elementwise.
  bool add_root_identity = false;
  /// sum f_k q^k matches prod_{m>=1} (1 - q^m)^{-r_m} through order n.
  bool product_identity = false;
};

VermaCharacterReport verma_character(int n, int max_size = kDefaultMaxSize);

struct Z1Report {
  int n = 0;
  std::size_t size = 0;
  bool square = false;
  bool invertible = false;
  bool intertwines = false;
  ZMatrix matrix;
};

/// Transports the forest monomials at offset n - 1 into degree-n tree
/// vectors by acting on the one-vertex tree, and checks that the resulting
/// square matrix is invertible and that the transport commutes with every
/// lowering operator at lowest weight 1.
Z1Report z1_isomorphism_check(int n, int max_size = kDefaultMaxSize);

}  // namespace ie

#endif
