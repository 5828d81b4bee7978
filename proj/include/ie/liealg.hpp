#ifndef IE_LIEALG_HPP
#define IE_LIEALG_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ie/rational.hpp"
#include "ie/tree.hpp"

namespace ie {

/// The three families of generators: insertion operators D+_t, elimination
/// operators D-_t, and the grading element d.
enum class OpKind { insertion, elimination, grading };

class BasisElement {
public:
  static BasisElement insertion(RootedTree t) {
    return BasisElement(OpKind::insertion, std::move(t));
  }
  static BasisElement elimination(RootedTree t) {
    return BasisElement(OpKind::elimination, std::move(t));
  }
  static BasisElement grading() { return BasisElement(OpKind::grading, std::nullopt); }

  OpKind kind() const { return kind_; }
  bool has_tree() const { return tree_.has_value(); }
  const RootedTree& tree() const { return *tree_; }

  /// |t| for insertion, -|t| for elimination, 0 for the grading element.
  int degree() const;

  /// Text atoms: "Dp[tree]", "Dm[tree]", "d".
  std::string to_string() const;

  /// Order used for canonical rendering: insertions by tree order, then
  /// eliminations by tree order, then d.
  friend bool operator<(const BasisElement& a, const BasisElement& b);
  friend bool operator==(const BasisElement& a, const BasisElement& b) {
    return a.kind_ == b.kind_ && a.tree_ == b.tree_;
  }
  friend bool operator!=(const BasisElement& a, const BasisElement& b) {
    return !(a == b);
  }

private:
  BasisElement(OpKind kind, std::optional<RootedTree> tree)
      : kind_(kind), tree_(std::move(tree)) {}

  OpKind kind_;
  std::optional<RootedTree> tree_;
};

/// Finite rational combination of basis elements.
class LieElement {
public:
  using TermMap = std::map<BasisElement, Rational>;

  LieElement() = default;  // zero

  static LieElement basis(BasisElement b);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const BasisElement& b) const;
  void add(const BasisElement& b, const Rational& c);

  /// The common degree when the element is homogeneous and nonzero.
  std::optional<int> degree() const;

  LieElement& operator+=(const LieElement& o);
  LieElement& operator-=(const LieElement& o);
  LieElement& operator*=(const Rational& c);
  LieElement operator-() const;

  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
  friend LieElement operator*(const Rational& c, LieElement x) { return x *= c; }

  friend bool operator==(const LieElement& a, const LieElement& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const LieElement& a, const LieElement& b) { return !(a == b); }

  /// Canonical text, e.g. "Dp[(()())] + 2*Dm[()] - d"; zero renders as "0".
  std::string to_string() const;

private:
  TermMap terms_;
};

/// Number of edges of t2 whose cut leaves root part t and prunes t1.
/// Nonzero only when |t| = |t2| - |t1|.
long long alpha(const RootedTree& t1, const RootedTree& t2, const RootedTree& t);

/// Number of edges of t1 whose cut leaves root part t and prunes t2.
long long beta(const RootedTree& t1, const RootedTree& t2, const RootedTree& t);

/// The Lie bracket, extended bilinearly from the brackets of generators.
/// The structure constants are read off the defining action on the tree
/// space (the commutators of the grafting and cutting operators), which the
/// oracle in the representation module re-verifies degree by degree:
///   [D+_t1, D+_t2]: grafting multiplicities,
///   [D-_t1, D-_t2]: the coefficient of D-_B counts cuts of B recovering
///                   the ordered pair (t1, t2), minus the swapped count,
///   [D-_t1, D+_t2] = sum_u alpha(t1,t2;u) D+_u + delta_{t1,t2} d
///                    + sum_u m_u D-_u,  m_u = #{v in V(u): u graft_v t2 = t1}.
LieElement bracket(const LieElement& x, const LieElement& y);
LieElement bracket(const BasisElement& a, const BasisElement& b);

/// The gradation-reversing automorphism: D+_t <-> D-_t, d -> -d.
LieElement involution(const LieElement& x);

struct DescentStep {
  RootedTree xi;
  LieElement result;
};

struct DescentReport {
  std::vector<DescentStep> steps;
  /// The element after the last step (the input when no step was needed).
  LieElement final_element;
  /// True when some bracket came out zero; the offending step is the last
  /// entry of steps. A finding, not an error.
  bool vanished = false;
};

/// The lowering procedure used to reach degree one: repeatedly pick the
/// largest root branch xi over the support (ties broken by taking the
/// canonical-order maximum) and bracket with D-_xi.
///
/// Requires a nonzero homogeneous element supported on insertion operators;
/// throws DomainError otherwise.
DescentReport descend(const LieElement& x);

/// Parses the element grammar: term (("+"|"-") term)*, with
/// term := [rational "*"] atom and atom := "Dp[" tree "]" | "Dm[" tree "]"
/// | "d". The text "0" denotes the zero element.
LieElement parse_element(std::string_view text);

}  // namespace ie

#endif
