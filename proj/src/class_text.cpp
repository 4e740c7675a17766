#include "realiz/class_text.hpp"

#include <cctype>

#include "realiz/errors.hpp"

namespace realiz {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) throw SyntaxError(std::string("expected '") + c + "'", pos_);
  }
  std::size_t pos() const { return pos_; }

  /// Optional signed integer; returns false if no digits follow.
  bool integer(Integer& out) {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      return false;
    }
    std::string literal(text_.substr(start, pos_ - start));
    if (literal[0] == '+') literal.erase(0, 1);
    out = Integer(literal, 10);
    return true;
  }

  Partition partition() {
    skip_ws();
    std::size_t start = pos_;
    expect('[');
    std::vector<int> parts;
    if (!accept(']')) {
      for (;;) {
        skip_ws();
        std::size_t digits = pos_;
        long value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          value = value * 10 + (text_[pos_] - '0');
          if (value > 1'000'000) throw InvalidPartition("partition part too large");
          ++pos_;
        }
        if (pos_ == digits) throw SyntaxError("expected a nonnegative integer", pos_);
        parts.push_back(static_cast<int>(value));
        if (accept(',')) continue;
        if (accept(']')) break;
        throw SyntaxError("expected ',' or ']'", pos_);
      }
    }
    try {
      return Partition(std::move(parts));
    } catch (const NotAPartition& e) {
      throw InvalidPartition(std::string(text_.substr(start, pos_ - start)) + ": " + e.what());
    }
  }

  Partition schubert() {
    if (!accept('s')) throw SyntaxError("expected 's'", pos_);
    return partition();
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

/// Parses `[coeff "*"] body` repeatedly, separated by '+'.
template <typename Body>
void parse_terms(Cursor& cur, Body&& body) {
  if (cur.at_end()) throw SyntaxError("empty class", cur.pos());
  for (;;) {
    Integer coeff = 1;
    if (cur.integer(coeff)) {
      if (cur.at_end()) {
        if (coeff != 0) throw SyntaxError("expected '*'", cur.pos());
        return;  // the literal zero class
      }
      cur.expect('*');
    }
    body(coeff);
    if (cur.at_end()) return;
    cur.expect('+');
  }
}

std::string coeff_prefix(const Integer& coeff) {
  return coeff == 1 ? std::string() : coeff.get_str() + "*";
}

}  // namespace

CohomologyClass parse_class(std::string_view text, const GrassmannianSpec& g) {
  Cursor cur(text);
  CohomologyClass out(g);
  parse_terms(cur, [&](const Integer& coeff) {
    Partition lambda = cur.schubert();
    if (!validate_partition(lambda, g))
      throw InvalidPartition("s" + lambda.str() + " does not fit the box of " + g.str());
    out.add(lambda, coeff);
  });
  return out;
}

std::string format_class(const CohomologyClass& c) {
  if (c.is_zero()) return "0";
  std::string out;
  for (const auto& [lambda, coeff] : c.terms()) {
    if (!out.empty()) out += " + ";
    out += coeff_prefix(coeff) + "s" + lambda.str();
  }
  return out;
}

ProductClass parse_product_class(std::string_view text, const ProductSpec& spec) {
  Cursor cur(text);
  ProductClass out(spec);
  parse_terms(cur, [&](const Integer& coeff) {
    std::size_t start = cur.pos();
    cur.expect('(');
    ProductKey key;
    do {
      key.push_back(cur.schubert());
    } while (cur.accept('|'));
    cur.expect(')');
    if (static_cast<int>(key.size()) != spec.size())
      throw SpecMismatch("term at position " + std::to_string(start) + " has " +
                         std::to_string(key.size()) + " slots, expected " + std::to_string(spec.size()));
    out.add(key, coeff);
  });
  return out;
}

std::string format_product_class(const ProductClass& c) {
  if (c.is_zero()) return "0";
  std::string out;
  for (const auto& [key, coeff] : c.terms()) {
    if (!out.empty()) out += " + ";
    out += coeff_prefix(coeff) + "(";
    for (std::size_t i = 0; i < key.size(); ++i) {
      if (i) out += "|";
      out += "s" + key[i].str();
    }
    out += ")";
  }
  return out;
}

}  // namespace realiz
