#include "svir/expr.hpp"

#include <cctype>
#include <charconv>

#include "svir/errors.hpp"

namespace svir {
namespace {

class Parser {
 public:
  Parser(std::string_view src, Family f, bool allow_outer)
      : src_(src), family_(f), allow_outer_(allow_outer), inner_(f) {}

  void run() {
    skip_ws();
    if (at_end()) fail("empty expression");
    Rational sign(1);
    if (accept('-')) sign = Rational(-1);
    bool first = true;
    for (;;) {
      term(sign, first);
      first = false;
      skip_ws();
      if (at_end()) break;
      if (accept('+'))
        sign = Rational(1);
      else if (accept('-'))
        sign = Rational(-1);
      else
        fail("expected '+' or '-'");
    }
  }

  Element& inner() { return inner_; }
  Rational& outer() { return outer_; }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what, pos_); }

  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return at_end() ? '\0' : src_[pos_]; }
  bool is_digit() const { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string_view digits() {
    const std::size_t start = pos_;
    while (is_digit()) ++pos_;
    if (start == pos_) fail("expected digits");
    return src_.substr(start, pos_ - start);
  }

  Rational rational() {
    const std::size_t start = pos_;
    if (peek() == '-') ++pos_;
    digits();
    if (peek() == '/') {
      ++pos_;
      digits();
    }
    try {
      return Rational::parse(src_.substr(start, pos_ - start));
    } catch (const std::invalid_argument& e) {
      pos_ = start;
      fail(e.what());
    }
  }

  HalfInt index() {
    skip_ws();
    const std::size_t start = pos_;
    const bool negative = peek() == '-';
    if (negative) ++pos_;
    const std::string_view text = digits();
    std::int64_t n = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
    if (ec != std::errc() || n > (std::int64_t{1} << 60)) {
      pos_ = start;
      fail("index out of range");
    }
    if (negative) n = -n;
    if (peek() == '/') {
      ++pos_;
      if (peek() != '2') fail("index denominator must be 2");
      ++pos_;
      if (is_digit()) fail("index denominator must be 2");
      if (n % 2 == 0) {
        pos_ = start;
        fail("half-integer index needs an odd numerator");
      }
      return HalfInt::from_twice(n);
    }
    return HalfInt::integer(n);
  }

  void term(const Rational& sign, bool first) {
    skip_ws();
    Rational coeff(1);
    if (is_digit() || peek() == '-') {
      coeff = rational();
      skip_ws();
      // A lone "0" denotes the zero element.
      if (first && at_end() && coeff.is_zero()) return;
      expect('*');
    }
    coeff *= sign;
    generator(coeff);
  }

  void generator(const Rational& coeff) {
    skip_ws();
    const std::size_t start = pos_;
    const char c = peek();
    Kind kind;
    HalfInt idx;
    switch (c) {
      case 'L': kind = Kind::L; break;
      case 'G': kind = Kind::G; break;
      case 'I': kind = Kind::I; break;
      case 'Q': kind = Kind::Q; break;
      case 'C': kind = Kind::C; break;
      case 'D':
        ++pos_;
        if (!allow_outer_) {
          pos_ = start;
          fail("unknown generator 'D'");
        }
        if (family_ != Family::SW22) throw KindNotInFamily("D is an outer derivation of sw22 only");
        outer_ += coeff;
        return;
      default: fail("expected a generator");
    }
    ++pos_;
    if (kind == Kind::C) {
      if (peek() == '1') {
        kind = Kind::C1;
        ++pos_;
      } else if (peek() == '2') {
        kind = Kind::C2;
        ++pos_;
      }
    } else {
      expect('[');
      idx = index();
      expect(']');
    }
    inner_.add_term(make_basis(family_, kind, idx), coeff);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  Family family_;
  bool allow_outer_;
  Element inner_;
  Rational outer_;
};

void append_term(std::string& out, const Rational& coeff, const std::string& gen) {
  const bool negative = coeff.sign() < 0;
  const Rational magnitude = negative ? -coeff : coeff;
  if (out.empty())
    out += negative ? "-" : "";
  else
    out += negative ? " - " : " + ";
  if (magnitude != Rational(1)) out += magnitude.str() + "*";
  out += gen;
}

std::string generator_text(const BasisVector& b) {
  std::string s(kind_name(b.kind));
  if (!is_central(b.kind)) s += "[" + b.index.str() + "]";
  return s;
}

}  // namespace

Element parse_element(std::string_view src, Family f) {
  Parser p(src, f, /*allow_outer=*/false);
  p.run();
  return std::move(p.inner());
}

SuperDerivation parse_derivation(std::string_view src, Family f) {
  Parser p(src, f, /*allow_outer=*/true);
  p.run();
  return SuperDerivation(std::move(p.inner()), std::move(p.outer()));
}

std::string format_element(const Element& x) {
  std::string out;
  for (const auto& [b, c] : x.terms()) append_term(out, c, generator_text(b));
  return out.empty() ? "0" : out;
}

std::string format_derivation(const SuperDerivation& d) {
  std::string out;
  for (const auto& [b, c] : d.inner().terms()) append_term(out, c, generator_text(b));
  if (!d.outer_lambda().is_zero()) append_term(out, d.outer_lambda(), "D");
  return out.empty() ? "0" : out;
}

}  // namespace svir
