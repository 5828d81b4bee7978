#include "ie/ctvector.hpp"

#include <cctype>
#include <utility>

#include "ie/errors.hpp"

namespace ie {

CTVector CTVector::unit() {
  CTVector v;
  v.terms_[std::nullopt] = 1;
  return v;
}

CTVector CTVector::tree(RootedTree t) {
  CTVector v;
  v.terms_[Key(std::move(t))] = 1;
  return v;
}

bool CTVector::has_unit_component() const {
  return terms_.find(std::nullopt) != terms_.end();
}

Rational CTVector::coeff(const Key& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Rational(0) : it->second;
}

void CTVector::add(const Key& k, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void CTVector::drop_unit() { terms_.erase(std::nullopt); }

CTVector& CTVector::operator+=(const CTVector& o) {
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

CTVector& CTVector::operator-=(const CTVector& o) {
  for (const auto& [k, c] : o.terms_) add(k, -c);
  return *this;
}

CTVector& CTVector::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

CTVector CTVector::operator-() const {
  CTVector v = *this;
  for (auto& [k, c] : v.terms_) c = -c;
  return v;
}

std::string CTVector::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : terms_) {
    Rational mag = c.sign() < 0 ? -c : c;
    if (out.empty()) {
      if (c.sign() < 0) out += "-";
      if (!(mag == Rational(1))) {
        out += mag.to_string();
        out += '*';
      }
    } else {
      out += c.sign() < 0 ? " - " : " + ";
      if (!(mag == Rational(1))) {
        out += mag.to_string();
        out += '*';
      }
    }
    out += k ? k->repr() : "1";
  }
  return out;
}

namespace {

class VectorParser {
public:
  explicit VectorParser(std::string_view text) : text_(text) {}

  CTVector parse() {
    skip_ws();
    if (rest() == "0") return CTVector();
    CTVector out;
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    while (true) {
      auto [key, coeff] = term();
      out.add(key, negative ? -coeff : coeff);
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

  std::string_view rest() const {
    std::size_t end = text_.size();
    while (end > pos_ && std::isspace(static_cast<unsigned char>(text_[end - 1]))) --end;
    return text_.substr(pos_, end - pos_);
  }

  std::pair<CTVector::Key, Rational> term() {
    skip_ws();
    Rational coeff = 1;
    // a digit run followed by '*' is a coefficient; a lone "1" is the
    // empty tree
    std::size_t save = pos_;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string digits;
      while (pos_ < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/'))
        digits.push_back(text_[pos_++]);
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        coeff = Rational::from_string(digits);
        skip_ws();
      } else {
        pos_ = save;
      }
    }
    if (peek() == '(') {
      TreeParserAdapter adapter(text_, pos_);
      RootedTree t = adapter.parse_node();
      pos_ = adapter.pos();
      return {CTVector::Key(std::move(t)), coeff};
    }
    if (peek() == '1') {
      ++pos_;
      return {std::nullopt, coeff};
    }
    throw ParseError("expected tree, '1', or coefficient", pos_);
  }

  // reuses the tree grammar on a slice of the input
  class TreeParserAdapter {
  public:
    TreeParserAdapter(std::string_view text, std::size_t pos) : text_(text), pos_(pos) {}

    RootedTree parse_node() {
      std::size_t depth = 0;
      std::size_t start = pos_;
      do {
        if (pos_ >= text_.size()) throw ParseError("unbalanced tree, missing ')'", pos_);
        char ch = text_[pos_];
        if (ch == '(') {
          ++depth;
        } else if (ch == ')') {
          if (depth == 0) throw ParseError("unbalanced ')'", pos_);
          --depth;
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
          throw ParseError("unexpected character in tree", pos_);
        }
        ++pos_;
      } while (depth > 0);
      return parse_tree(text_.substr(start, pos_ - start));
    }

    std::size_t pos() const { return pos_; }

  private:
    std::string_view text_;
    std::size_t pos_;
  };
};

}  // namespace

CTVector parse_ct_vector(std::string_view text) { return VectorParser(text).parse(); }

CTVector graft(const RootedTree& s, const RootedTree& t) {
  CTVector out;
  for (const auto& [tree, cnt] : graft_counts(s, t)) {
    out.add(CTVector::Key(tree), Rational(cnt));
  }
  return out;
}

}  // namespace ie
