#include "fourvec/io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "fourvec/errors.hpp"

namespace fourvec {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  std::size_t pos() const { return pos_; }

  bool accept(char c) {
    skip_ws();
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c, const char* expected) {
    if (!accept(c)) throw ParseError(pos_, expected);
  }

  bool digit_ahead() const {
    return !at_end() && std::isdigit(static_cast<unsigned char>(peek()));
  }

  // Unsigned decimal literal: digits [. digits] | . digits, optional
  // exponent. Returns false without consuming if no literal starts here.
  bool unsigned_real(double& value) {
    const std::size_t start = pos_;
    std::size_t digits = 0;
    while (digit_ahead()) { ++pos_; ++digits; }
    if (peek() == '.') {
      ++pos_;
      while (digit_ahead()) { ++pos_; ++digits; }
    }
    if (digits == 0) {
      pos_ = start;
      return false;
    }
    if (peek() == 'e' || peek() == 'E') {
      const std::size_t mark = pos_;
      ++pos_;
      if (peek() == '+' || peek() == '-') ++pos_;
      if (!digit_ahead()) {
        pos_ = mark;
      } else {
        while (digit_ahead()) ++pos_;
      }
    }
    const char* first = text_.data() + start;
    const char* last = text_.data() + pos_;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || !std::isfinite(value)) {
      throw ParseError(start, "a finite decimal literal");
    }
    return true;
  }

  // complex := real | real (+|-) real i | real i   (a bare i means 1i)
  Complex complex_literal() {
    skip_ws();
    double sign = 1.0;
    if (peek() == '+' || peek() == '-') {
      sign = peek() == '-' ? -1.0 : 1.0;
      ++pos_;
      skip_ws();
    }
    double first = 1.0;
    const bool has_number = unsigned_real(first);
    skip_ws();
    if (peek() == 'i') {
      ++pos_;
      return {0.0, sign * first};
    }
    if (!has_number) throw ParseError(pos_, "a number or 'i'");
    const double re = sign * first;
    if (peek() != '+' && peek() != '-') return {re, 0.0};
    const double im_sign = peek() == '-' ? -1.0 : 1.0;
    ++pos_;
    skip_ws();
    double second = 1.0;
    unsigned_real(second);
    skip_ws();
    if (peek() != 'i') throw ParseError(pos_, "'i' after imaginary part");
    ++pos_;
    return {re, im_sign * second};
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string format_real(double v, int precision) {
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, v);
  return buf;
}

}  // namespace

Fourvectorcd parse_fourvector(std::string_view text) {
  Cursor cur(text);
  cur.expect('(', "'('");
  Complex c[4];
  for (int i = 0; i < 4; ++i) {
    if (i > 0) cur.expect(',', "','");
    c[i] = cur.complex_literal();
  }
  cur.expect(')', "')'");
  cur.skip_ws();
  if (!cur.at_end()) throw ParseError(cur.pos(), "end of input");
  return Fourvectorcd(c[0], c[1], c[2], c[3]);
}

Complex parse_complex(std::string_view text) {
  Cursor cur(text);
  const Complex c = cur.complex_literal();
  cur.skip_ws();
  if (!cur.at_end()) throw ParseError(cur.pos(), "end of input");
  return c;
}

std::string format_complex(const Complex& c, int precision) {
  if (precision < 1 || precision > 17) {
    throw std::out_of_range("precision must be in 1..17");
  }
  const double re = c.real();
  const double im = c.imag();
  if (im == 0.0) return format_real(re, precision);
  if (re == 0.0) return format_real(im, precision) + "i";
  return format_real(re, precision) + (im < 0.0 ? "-" : "+") +
         format_real(std::abs(im), precision) + "i";
}

std::string format_fourvector(const Fourvectorcd& a, int precision) {
  std::string out = "(";
  for (Eigen::Index i = 0; i < 4; ++i) {
    if (i > 0) out += ", ";
    out += format_complex(a[i], precision);
  }
  return out + ")";
}

nlohmann::json to_json(const Fourvectorcd& a) {
  static constexpr const char* kKeys[] = {"t", "x", "y", "z"};
  nlohmann::json j = nlohmann::json::object();
  for (Eigen::Index i = 0; i < 4; ++i) {
    j[kKeys[i]] = {a[i].real(), a[i].imag()};
  }
  return j;
}

Fourvectorcd fourvector_from_json(const nlohmann::json& j) {
  auto get = [&](const char* key) {
    const auto& pair = j.at(key);
    return Complex(pair.at(0).get<double>(), pair.at(1).get<double>());
  };
  return Fourvectorcd(get("t"), get("x"), get("y"), get("z"));
}

}  // namespace fourvec
