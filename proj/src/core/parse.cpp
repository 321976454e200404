/*
 *   Copyright 2026 The cartanh Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#include "cartanh/parse.hpp"

#include <cctype>
#include <string>

#include "cartanh/quantization.hpp"

namespace cartanh {

namespace {

class Parser {
 public:
  Parser(const Enveloping& env, std::string text) : env_(env), s_(std::move(text)) {}

  UElement parse() {
    if (s_.empty()) throw ParseError("empty element");
    UElement r;
    bool first = true;
    while (pos_ < s_.size() || first) {
      Scalar sign = env_.field().one();
      if (peek() == '+' || peek() == '-') {
        if (peek() == '-') sign = -sign;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      UElement t = term();
      t *= sign;
      r += t;
    }
    return r;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + s_ + "'");
  }

  UElement term() {
    UElement r = factor();
    while (peek() == '*') {
      ++pos_;
      r = env_.multiply(r, factor());
    }
    return r;
  }

  UElement factor() {
    if (std::isdigit(static_cast<unsigned char>(peek()))) return env_.scalar(number());
    if (s_.compare(pos_, 2, "DH") == 0) return basis();
    fail("expected a number or a DH token");
  }

  std::string digits() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return s_.substr(start, pos_ - start);
  }

  Scalar number() {
    mpq_class q{mpz_class{digits()}};
    if (peek() == '/') {
      ++pos_;
      mpz_class den(digits());
      if (den == 0) fail("zero denominator");
      q /= den;
    }
    try {
      return env_.field().from_rational(q);
    } catch (const ReductionUndefined&) {
      fail("coefficient " + q.get_str() + " has no residue mod " + std::to_string(env_.field().p));
    }
  }

  UElement basis() {
    std::size_t start = pos_;
    std::size_t close = s_.find(']', pos_);
    if (close == std::string::npos) fail("missing ']'");
    pos_ = close + 1;
    if (peek() == '@') {
      ++pos_;
      digits();
    }
    std::string token = s_.substr(start, pos_ - start);
    std::pair<LieContext, MultiIndex> parsed;
    try {
      parsed = parse_basis(token);
    } catch (const std::exception& e) {
      pos_ = start;
      fail(e.what());
    }
    const auto& [ctx, a] = parsed;
    const LieContext& want = env_.context();
    if (ctx.is_modular() != want.is_modular())
      throw InadmissibleElement(token + (want.is_modular() ? " is a char-0 token in a modular algebra"
                                                           : " is a modular token in a char-0 algebra"));
    if (ctx.is_modular() && ctx.p != want.p)
      throw InadmissibleElement(token + " names p=" + std::to_string(ctx.p) + ", the algebra has p=" +
                                std::to_string(want.p));
    if (a.rank() != want.n)
      throw InadmissibleElement(token + " has rank " + std::to_string(a.rank()) + ", expected " +
                                std::to_string(want.n));
    if (!want.admissible(a)) throw InadmissibleElement(token + " is not a basis vector of " + want.to_string());
    return env_.generator(a);
  }

  const Enveloping& env_;
  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

UElement parse_element(const Enveloping& env, std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  return Parser(env, std::move(s)).parse();
}

}  // namespace cartanh
