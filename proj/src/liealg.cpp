#include "ie/liealg.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "ie/errors.hpp"

namespace ie {

int BasisElement::degree() const {
  switch (kind_) {
    case OpKind::insertion:
      return tree_->size();
    case OpKind::elimination:
      return -tree_->size();
    case OpKind::grading:
      return 0;
  }
  return 0;
}

std::string BasisElement::to_string() const {
  switch (kind_) {
    case OpKind::insertion:
      return "Dp[" + tree_->repr() + "]";
    case OpKind::elimination:
      return "Dm[" + tree_->repr() + "]";
    case OpKind::grading:
      return "d";
  }
  return {};
}

bool operator<(const BasisElement& a, const BasisElement& b) {
  auto rank = [](OpKind k) {
    return k == OpKind::insertion ? 0 : (k == OpKind::elimination ? 1 : 2);
  };
  if (rank(a.kind_) != rank(b.kind_)) return rank(a.kind_) < rank(b.kind_);
  if (a.kind_ == OpKind::grading) return false;
  return *a.tree_ < *b.tree_;
}

LieElement LieElement::basis(BasisElement b) {
  LieElement x;
  x.terms_.emplace(std::move(b), Rational(1));
  return x;
}

Rational LieElement::coeff(const BasisElement& b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LieElement::add(const BasisElement& b, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(b, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::optional<int> LieElement::degree() const {
  if (terms_.empty()) return std::nullopt;
  int deg = terms_.begin()->first.degree();
  for (const auto& [b, c] : terms_) {
    if (b.degree() != deg) return std::nullopt;
  }
  return deg;
}

LieElement& LieElement::operator+=(const LieElement& o) {
  for (const auto& [b, c] : o.terms_) add(b, c);
  return *this;
}

LieElement& LieElement::operator-=(const LieElement& o) {
  for (const auto& [b, c] : o.terms_) add(b, -c);
  return *this;
}

LieElement& LieElement::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [b, v] : terms_) v *= c;
  return *this;
}

LieElement LieElement::operator-() const {
  LieElement x = *this;
  for (auto& [b, c] : x.terms_) c = -c;
  return x;
}

std::string LieElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [b, c] : terms_) {
    Rational mag = c.sign() < 0 ? -c : c;
    if (out.empty()) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    if (!(mag == Rational(1))) {
      out += mag.to_string();
      out += '*';
    } else if (out == "-") {
      out += "1*";  // keep the leading term inside the term grammar
    }
    out += b.to_string();
  }
  return out;
}

long long alpha(const RootedTree& t1, const RootedTree& t2, const RootedTree& t) {
  long long count = 0;
  for (const auto& cut : cuts(t2)) {
    if (cut.root_part == t && cut.pruned_part == t1) ++count;
  }
  return count;
}

long long beta(const RootedTree& t1, const RootedTree& t2, const RootedTree& t) {
  long long count = 0;
  for (const auto& cut : cuts(t1)) {
    if (cut.root_part == t && cut.pruned_part == t2) ++count;
  }
  return count;
}

// #{e in E(whole): R_e = root_part, P_e = pruned_part}
static long long cut_multiplicity(const RootedTree& whole, const RootedTree& root_part,
                                  const RootedTree& pruned_part) {
  long long count = 0;
  for (const auto& cut : cuts(whole)) {
    if (cut.root_part == root_part && cut.pruned_part == pruned_part) ++count;
  }
  return count;
}

LieElement bracket(const BasisElement& a, const BasisElement& b) {
  LieElement out;
  if (a.kind() == OpKind::grading && b.kind() == OpKind::grading) return out;
  if (a.kind() == OpKind::grading) {
    // [d, D+-_t] = deg(D+-_t) D+-_t
    out.add(b, Rational(b.degree()));
    return out;
  }
  if (b.kind() == OpKind::grading) {
    out.add(a, Rational(-a.degree()));
    return out;
  }
  const RootedTree& ta = a.tree();
  const RootedTree& tb = b.tree();
  if (a.kind() == OpKind::insertion && b.kind() == OpKind::insertion) {
    for (const auto& [g, cnt] : graft_counts(tb, ta))
      out.add(BasisElement::insertion(g), Rational(cnt));
    for (const auto& [g, cnt] : graft_counts(ta, tb))
      out.add(BasisElement::insertion(g), Rational(-cnt));
    return out;
  }
  if (a.kind() == OpKind::elimination && b.kind() == OpKind::elimination) {
    // The coefficient of D-_B is the number of cuts of B that recover the
    // ordered pair (ta, tb) minus those recovering (tb, ta). These are cut
    // multiplicities, not graft multiplicities; the two differ by tree
    // symmetry factors, and only the former matches the commutator of the
    // elimination operators on the tree space.
    for (const auto& [g, cnt] : graft_counts(ta, tb))
      out.add(BasisElement::elimination(g), Rational(cut_multiplicity(g, ta, tb)));
    for (const auto& [g, cnt] : graft_counts(tb, ta))
      out.add(BasisElement::elimination(g), Rational(-cut_multiplicity(g, tb, ta)));
    return out;
  }
  if (a.kind() == OpKind::elimination && b.kind() == OpKind::insertion) {
    // insertion terms: cuts of tb that prune ta
    for (const auto& cut : cuts(tb)) {
      if (cut.pruned_part == ta) out.add(BasisElement::insertion(cut.root_part), 1);
    }
    // elimination terms: distinct root parts u of cuts of ta that prune tb,
    // each weighted by the number of vertices of u at which grafting tb
    // recovers ta (again the representation-side count)
    std::map<RootedTree, bool> seen;
    for (const auto& cut : cuts(ta)) {
      if (cut.pruned_part != tb || seen.count(cut.root_part)) continue;
      seen.emplace(cut.root_part, true);
      auto grafts = graft_counts(cut.root_part, tb);
      auto it = grafts.find(ta);
      if (it != grafts.end())
        out.add(BasisElement::elimination(cut.root_part), Rational(it->second));
    }
    if (ta == tb) out.add(BasisElement::grading(), 1);
    return out;
  }
  return -bracket(b, a);
}

LieElement bracket(const LieElement& x, const LieElement& y) {
  LieElement out;
  for (const auto& [a, ca] : x.terms()) {
    for (const auto& [b, cb] : y.terms()) {
      LieElement part = bracket(a, b);
      part *= ca * cb;
      out += part;
    }
  }
  return out;
}

LieElement involution(const LieElement& x) {
  LieElement out;
  for (const auto& [b, c] : x.terms()) {
    switch (b.kind()) {
      case OpKind::insertion:
        out.add(BasisElement::elimination(b.tree()), c);
        break;
      case OpKind::elimination:
        out.add(BasisElement::insertion(b.tree()), c);
        break;
      case OpKind::grading:
        out.add(BasisElement::grading(), -c);
        break;
    }
  }
  return out;
}

DescentReport descend(const LieElement& x) {
  if (x.is_zero()) throw DomainError("descend requires a nonzero element");
  for (const auto& [b, c] : x.terms()) {
    if (b.kind() != OpKind::insertion)
      throw DomainError("descend requires an element supported on insertion operators");
  }
  std::optional<int> deg = x.degree();
  if (!deg) throw DomainError("descend requires a homogeneous element");

  DescentReport report;
  LieElement cur = x;
  int cur_deg = *deg;
  while (cur_deg > 1) {
    // largest root branch over the support; the tree order already breaks
    // size ties by canonical-order maximum
    std::optional<RootedTree> xi;
    for (const auto& [b, c] : cur.terms()) {
      Forest st = branches(b.tree());
      for (const auto& br : st.members()) {
        if (!xi || *xi < br) xi = br;
      }
    }
    LieElement next = bracket(LieElement::basis(BasisElement::elimination(*xi)), cur);
    report.steps.push_back({*xi, next});
    if (next.is_zero()) {
      report.vanished = true;
      report.final_element = next;
      return report;
    }
    cur = std::move(next);
    cur_deg -= xi->size();
  }
  report.final_element = cur;
  return report;
}

namespace {

class ElementParser {
public:
  explicit ElementParser(std::string_view text) : text_(text) {}

  LieElement parse() {
    skip_ws();
    if (trimmed_rest() == "0") return LieElement();
    LieElement out;
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    while (true) {
      auto [b, c] = term();
      out.add(b, negative ? -c : c);
      skip_ws();
      if (pos_ == text_.size()) break;
      if (peek() == '+') {
        negative = false;
        ++pos_;
      } else if (peek() == '-') {
        negative = true;
        ++pos_;
      } else {
        throw ParseError("expected '+' or '-' between terms", pos_);
      }
    }
    return out;
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  std::string_view trimmed_rest() const {
    std::size_t end = text_.size();
    while (end > pos_ && std::isspace(static_cast<unsigned char>(text_[end - 1]))) --end;
    return text_.substr(pos_, end - pos_);
  }

  std::pair<BasisElement, Rational> term() {
    skip_ws();
    Rational coeff = 1;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string digits;
      while (pos_ < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/'))
        digits.push_back(text_[pos_++]);
      skip_ws();
      if (peek() != '*') throw ParseError("expected '*' after coefficient", pos_);
      ++pos_;
      coeff = Rational::from_string(digits);
      skip_ws();
    }
    return {atom(), coeff};
  }

  BasisElement atom() {
    skip_ws();
    if (peek() == 'd') {
      ++pos_;
      return BasisElement::grading();
    }
    if (peek() == 'D') {
      std::size_t start = pos_;
      ++pos_;
      char which = peek();
      if (which != 'p' && which != 'm') throw ParseError("unknown atom", start);
      ++pos_;
      skip_ws();
      if (peek() != '[') throw ParseError("expected '[' after operator name", pos_);
      ++pos_;
      std::size_t tree_start = pos_;
      std::size_t depth = 0;
      while (pos_ < text_.size()) {
        char ch = text_[pos_];
        if (ch == '(') ++depth;
        if (ch == ')') {
          if (depth == 0) throw ParseError("unbalanced ')' in atom", pos_);
          --depth;
        }
        if (ch == ']' && depth == 0) break;
        ++pos_;
      }
      if (pos_ >= text_.size()) throw ParseError("missing ']'", pos_);
      RootedTree t = parse_tree(text_.substr(tree_start, pos_ - tree_start));
      ++pos_;  // consume ']'
      return which == 'p' ? BasisElement::insertion(std::move(t))
                          : BasisElement::elimination(std::move(t));
    }
    throw ParseError("expected atom 'Dp[...]', 'Dm[...]', or 'd'", pos_);
  }
};

}  // namespace

LieElement parse_element(std::string_view text) { return ElementParser(text).parse(); }

}  // namespace ie
