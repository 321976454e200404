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


#include <doctest.h>

#include "cartanh/parse.hpp"
#include "cartanh/quantization.hpp"

using namespace cartanh;

namespace {

Enveloping char0(int n) { return Enveloping(LieContext::plus(n)); }

MultiIndex idx(const std::string& s) { return MultiIndex::parse(s); }

}  // namespace

TEST_CASE("single tokens and linear combinations") {
  auto env = char0(1);
  auto h = env.generator(idx("1;1"));
  auto e = env.generator(idx("1;2"));
  CHECK(parse_element(env, "DH[1;1]") == h);
  CHECK(parse_element(env, "  DH[ 1 ; 1 ]  ") == h);
  UElement want = h;
  want *= Scalar::rational(3, 2);
  want -= e;
  CHECK(parse_element(env, "3/2*DH[1;1] - DH[1;2]") == want);
  CHECK(parse_element(env, "-DH[1;2] + 3/2 * DH[1;1]") == want);
  CHECK(parse_element(env, "DH[1;1]-DH[1;1]").is_zero());
  CHECK(parse_element(env, "7") == env.scalar(Scalar::rational(7)));
}

TEST_CASE("products are PBW products") {
  auto env = char0(1);
  auto h = env.generator(idx("1;1"));
  auto e = env.generator(idx("1;2"));
  CHECK(parse_element(env, "DH[1;2]*DH[1;1]") == env.multiply(e, h));
  CHECK(parse_element(env, "2*DH[1;1]*DH[1;1]") == env.multiply(env.scalar(Scalar::rational(2)), env.multiply(h, h)));
}

TEST_CASE("modular tokens") {
  Enveloping env(LieContext::modular(1, 3));
  auto x = env.generator(idx("1;1"));
  CHECK(parse_element(env, "DHp[1;1]@3") == x);
  UElement half = x;
  half *= Scalar::modular(2, 3);
  CHECK(parse_element(env, "1/2*DHp[1;1]@3") == half);
  CHECK_THROWS_AS(parse_element(env, "1/3*DHp[1;1]@3"), ParseError);
  CHECK_THROWS_AS(parse_element(env, "DHp[1;1]@5"), InadmissibleElement);
  CHECK_THROWS_AS(parse_element(env, "DH[1;1]"), InadmissibleElement);
  CHECK_THROWS_AS(parse_element(env, "DHp[3;0]@3"), InadmissibleElement);
}

TEST_CASE("malformed and inadmissible input") {
  auto env = char0(1);
  for (const char* bad : {"", "DH[1;1", "DH[1;1]+", "DH[1;1] DH[1;2]x", "1/0*DH[1;1]", "*DH[1;1]", "DX[1;1]",
                          "DH[a;1]"})
    CHECK_THROWS_AS(parse_element(env, bad), ParseError);
  CHECK_THROWS_AS(parse_element(env, "DH[1,0;1,0]"), InadmissibleElement);
  CHECK_THROWS_AS(parse_element(env, "DH[0;0]"), InadmissibleElement);
  CHECK_THROWS_AS(parse_element(char0(2), "DH[1;1]"), InadmissibleElement);
}
