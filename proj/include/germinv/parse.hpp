#pragma once

#include <array>
#include <string>

#include "germinv/polynomial.hpp"

namespace germinv {

/// Parses `text` with the shared grammar: integers, rationals p/q, the
/// variables x y x' y' X Y Z t u w, `+ - * ^` and parentheses. `*` may be
/// omitted before a variable or an opening parenthesis. Every variable must
/// belong to `ring`.
Polynomial parse_polynomial(const std::string& text, const RingPtr& ring);

/// Parses a parenthesized triple `(f1, f2, f3)`.
std::array<Polynomial, 3> parse_triple(const std::string& text, const RingPtr& ring);

}  // namespace germinv
