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

#ifndef CARTANH_PARSE_HPP
#define CARTANH_PARSE_HPP

#include <stdexcept>
#include <string_view>

#include "cartanh/enveloping.hpp"

namespace cartanh {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Element grammar, whitespace-insensitive:
///
///   expr   := [+|-] term { (+|-) term }
///   term   := factor { * factor }
///   factor := integer [ / integer ] | DH[a;b] | DHp[a;b]@p
///
/// Products of basis tokens are PBW products in env. Throws ParseError on
/// malformed text and InadmissibleElement (from quantization.hpp) when a token
/// names a vector outside env's Lie algebra.
UElement parse_element(const Enveloping& env, std::string_view text);

}  // namespace cartanh

#endif  // CARTANH_PARSE_HPP
