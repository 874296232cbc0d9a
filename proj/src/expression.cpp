// Copyright 2026 The pgquant Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pgq/expression.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>

namespace pgq {

namespace {

class Parser {
 public:
  Parser(std::string_view text, int modes) : text_(text), modes_(modes) {}

  Expression run() {
    Expression e = sum();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool starts_with(std::string_view s) const { return text_.substr(pos_).starts_with(s); }

  Expression sum() {
    Expression node;
    node.kind = Expression::Kind::Sum;
    skip_ws();
    bool negative = false;
    if (accept('-')) {
      negative = true;
    } else {
      accept('+');
    }
    while (true) {
      Expression term = product();
      if (negative) term = negate(std::move(term));
      node.children.push_back(std::move(term));
      if (accept('+')) {
        negative = false;
      } else if (accept('-')) {
        negative = true;
      } else {
        break;
      }
    }
    if (node.children.size() == 1) return std::move(node.children.front());
    return node;
  }

  Expression product() {
    Expression node;
    node.kind = Expression::Kind::Product;
    node.children.push_back(unary());
    while (accept('*')) node.children.push_back(unary());
    if (node.children.size() == 1) return std::move(node.children.front());
    return node;
  }

  Expression power() {
    Expression base = atom();
    if (!accept('^')) return base;
    skip_ws();
    const std::size_t start = pos_;
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc() || ptr == text_.data() + start) fail("expected non-negative integer exponent");
    pos_ = ptr - text_.data();
    if (value > 1024) fail("exponent too large");
    Expression node;
    node.kind = Expression::Kind::Power;
    node.exponent = static_cast<int>(value);
    node.children.push_back(std::move(base));
    return node;
  }

  static Expression negate(Expression e) {
    Expression node;
    node.kind = Expression::Kind::Negate;
    node.children.push_back(std::move(e));
    return node;
  }

  Expression unary() {
    if (accept('-')) return negate(unary());
    return power();
  }

  Expression atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Expression inner = sum();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (starts_with("bth")) return generator(3, true);
    if (starts_with("th")) return generator(2, false);
    if (c == 'i') {
      ++pos_;
      return literal({0.0, 1.0});
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  static Expression literal(cplx v) {
    Expression e;
    e.kind = Expression::Kind::Literal;
    e.value = v;
    return e;
  }

  Expression number() {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), v);
    if (ec != std::errc()) fail("malformed number");
    pos_ = ptr - text_.data();
    if (pos_ < text_.size() && text_[pos_] == 'i') {
      ++pos_;
      return literal({0.0, v});
    }
    return literal({v, 0.0});
  }

  Expression generator(std::size_t token_len, bool barred) {
    const std::size_t start = pos_;
    pos_ += token_len;
    int index = 0;
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      index = index * 10 + (text_[pos_] - '0');
      if (index > 1'000'000) break;
      ++pos_;
    }
    if (pos_ == digits) {
      if (modes_ != 1) {
        pos_ = start;
        fail("generator index required when modes > 1");
      }
      index = 1;
    }
    if (index < 1 || index > modes_) {
      pos_ = start;
      fail("unknown generator index " + std::to_string(index) + " (modes = " +
           std::to_string(modes_) + ")");
    }
    Expression e;
    e.kind = Expression::Kind::Generator;
    e.gen = {index - 1, barred};
    return e;
  }

  std::string_view text_;
  int modes_;
  std::size_t pos_ = 0;
};

}  // namespace

Expression parse(std::string_view text, int modes) {
  if (modes < 1) throw std::invalid_argument("parse: modes must be >= 1");
  return Parser(text, modes).run();
}

ParaPoly eval(const Expression& e, const Deformation& def, int modes) {
  switch (e.kind) {
    case Expression::Kind::Literal:
      return ParaPoly::constant(def, modes, e.value);
    case Expression::Kind::Generator:
      if (e.gen.mode < 0 || e.gen.mode >= modes) {
        throw std::invalid_argument("eval: generator outside declared modes");
      }
      return ParaPoly::generator(def, modes, e.gen);
    case Expression::Kind::Product: {
      ParaPoly r = eval(e.children.front(), def, modes);
      for (std::size_t i = 1; i < e.children.size(); ++i) {
        r = multiply(r, eval(e.children[i], def, modes));
      }
      return r;
    }
    case Expression::Kind::Sum: {
      ParaPoly r(def, modes);
      for (const auto& c : e.children) r = r + eval(c, def, modes);
      return r;
    }
    case Expression::Kind::Power: {
      const ParaPoly base = eval(e.children.front(), def, modes);
      ParaPoly r = ParaPoly::constant(def, modes, 1.0);
      for (int i = 0; i < e.exponent && !r.is_zero(); ++i) r = multiply(r, base);
      return r;
    }
    case Expression::Kind::Negate:
      return -eval(e.children.front(), def, modes);
  }
  throw std::logic_error("eval: unknown node");
}

ParaPoly parse_poly(std::string_view text, const Deformation& def, int modes) {
  return eval(parse(text, modes), def, modes);
}

namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_complex(cplx c) {
  std::string s = "(" + format_double(c.real());
  s += std::signbit(c.imag()) ? "-" : "+";
  s += format_double(std::abs(c.imag())) + "i)";
  return s;
}

}  // namespace

std::string to_expression(const ParaPoly& p) {
  if (p.is_zero()) return "0";
  const int modes = p.modes();
  std::string out;
  for (const auto& [m, c] : p.terms()) {
    if (!out.empty()) out += " + ";
    out += format_complex(c);
    auto emit = [&](const char* token, int mode, int power) {
      if (power == 0) return;
      out += "*";
      out += token;
      if (modes > 1) out += std::to_string(mode + 1);
      if (power > 1) out += "^" + std::to_string(power);
    };
    for (int i = 0; i < modes; ++i) emit("th", i, m.theta(i));
    for (int i = 0; i < modes; ++i) emit("bth", i, m.bar(i));
  }
  return out;
}

}  // namespace pgq
