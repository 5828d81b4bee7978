#ifndef IE_CTVECTOR_HPP
#define IE_CTVECTOR_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "ie/rational.hpp"
#include "ie/tree.hpp"

namespace ie {

/// Finite rational combination of rooted trees together with the empty tree
/// (degree 0), i.e. an element of the tree vector space. No zero
/// coefficients are stored.
class CTVector {
public:
  /// Basis index: nullopt stands for the empty tree.
  using Key = std::optional<RootedTree>;

  struct KeyLess {
    bool operator()(const Key& a, const Key& b) const {
      if (!a || !b) return static_cast<bool>(b) && !a;
      return *a < *b;
    }
  };

  using TermMap = std::map<Key, Rational, KeyLess>;

  CTVector() = default;  // zero

  static CTVector unit();  // the empty tree
  static CTVector tree(RootedTree t);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool has_unit_component() const;
  Rational coeff(const Key& k) const;

  void add(const Key& k, const Rational& c);
  /// Deletes the empty-tree component.
  void drop_unit();

  CTVector& operator+=(const CTVector& o);
  CTVector& operator-=(const CTVector& o);
  CTVector& operator*=(const Rational& c);
  CTVector operator-() const;

  friend CTVector operator+(CTVector a, const CTVector& b) { return a += b; }
  friend CTVector operator-(CTVector a, const CTVector& b) { return a -= b; }
  friend CTVector operator*(const Rational& c, CTVector v) { return v *= c; }

  friend bool operator==(const CTVector& a, const CTVector& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const CTVector& a, const CTVector& b) { return !(a == b); }

  /// Terms joined by "+"/"-" with tree atoms, e.g. "2*(()()) - ((()))";
  /// the empty tree renders as "1" and the zero vector as "0".
  std::string to_string() const;

private:
  TermMap terms_;
};

/// Parses the vector grammar: term (("+"|"-") term)*, term := [rational "*"]
/// atom, atom := tree | "1". The text "0" denotes the zero vector.
CTVector parse_ct_vector(std::string_view text);

/// Sum over all vertices v of s of the tree obtained by attaching t below v,
/// with isomorphic results aggregated. The coefficients total |V(s)|.
CTVector graft(const RootedTree& s, const RootedTree& t);

}  // namespace ie

#endif
