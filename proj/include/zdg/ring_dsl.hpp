#pragma once

#include "zdg/ring.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace zdg::dsl {

// Grammar (case-insensitive, whitespace-insensitive):
//   spec := term ('x' term)*
//   term := 'Z' int | 'Z' int '[x]/(' rel (',' rel)* ')'
//   rel  := polynomial in x with integer coefficients
//
// Relation lists must normalize to one monic leading relation x^d = g(x)
// (deg g < d) plus zero or more coefficient relations c*x^j = 0.

struct ZnSpec {
    uint32_t n;
    friend bool operator==(const ZnSpec&, const ZnSpec&) = default;
};

struct QuotientSpec {
    uint32_t n;                                      // base modulus
    std::vector<uint32_t> lead_rhs;                  // g: x^d = g(x); size d, coeffs mod n
    std::vector<std::pair<uint32_t, uint32_t>> kills; // (j, c): c*x^j = 0, ascending j
    uint32_t degree() const { return static_cast<uint32_t>(lead_rhs.size()); }
    friend bool operator==(const QuotientSpec&, const QuotientSpec&) = default;
};

struct RingSpec;

struct ProductSpec {
    std::vector<RingSpec> factors; // >= 2, each Zn or Quotient
    friend bool operator==(const ProductSpec&, const ProductSpec&);
};

struct RingSpec {
    std::variant<ZnSpec, QuotientSpec, ProductSpec> node;
    friend bool operator==(const RingSpec&, const RingSpec&);
};

// Throws SyntaxError with a deterministic byte offset, or
// UnsupportedPresentationError when relations do not normalize.
RingSpec parse(std::string_view text);

// Canonical text; parse(format(s)) is structurally equal to s.
std::string format(const RingSpec& spec);

FiniteRing compile(const RingSpec& spec,
                   uint32_t table_cap = FiniteRing::kDefaultTableCap);
FiniteRing compile(std::string_view text,
                   uint32_t table_cap = FiniteRing::kDefaultTableCap);

// format(parse(text)): the identifier used for cache keys and report rows.
std::string canonical(std::string_view text);

} // namespace zdg::dsl
