#pragma once

#include "zdg/bitset.hpp"
#include "zdg/errors.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace zdg {

// Element of a finite ring, encoded as a mixed-radix index into the additive
// decomposition Z_{m_0} e_0 (+) ... (+) Z_{m_{k-1}} e_{k-1}.
using Elem = uint32_t;

// Coefficient vector in the additive basis; entry t is reduced mod m_t.
using CoeffVec = std::vector<uint32_t>;

enum class LabelStyle {
    kDecimal, // single cyclic factor: "3"
    kTuple,   // generic multi-basis presentation: "(1,0)"
    kPoly,    // polynomial quotient basis {1, x, ..., x^{d-1}}: "2+x"
};

// A structure-constant presentation of a finite commutative ring.
// table is k*k row-major; set_product keeps it symmetric.
struct Presentation {
    Presentation(std::vector<uint32_t> mods, Elem one_index);

    void set_product(uint32_t i, uint32_t j, CoeffVec coeffs);
    const CoeffVec& product(uint32_t i, uint32_t j) const;
    uint32_t basis_size() const { return static_cast<uint32_t>(moduli.size()); }

    std::vector<uint32_t> moduli;
    Elem one = 0;
    std::vector<CoeffVec> table;
    std::string label;
    LabelStyle label_style = LabelStyle::kTuple;
};

struct AxiomViolation {
    std::string axiom; // "additive-order", "identity", "commutativity", "associativity"
    std::array<Elem, 3> witness{0, 0, 0};
    std::string message;
};

struct ValidationReport {
    std::optional<AxiomViolation> violation;
    bool ok() const { return !violation.has_value(); }
};

// Immutable finite commutative ring with identity. Multiplication is bilinear
// expansion through the structure constants; the full product table is cached
// at construction when order <= table cap so that graph construction and the
// solvers run on table lookups.
class FiniteRing {
public:
    static constexpr uint32_t kDefaultTableCap = 1u << 12;
    static constexpr uint32_t kMaxOrder = 1u << 26;

    uint32_t order() const { return order_; }
    uint32_t basis_size() const { return static_cast<uint32_t>(moduli_.size()); }
    const std::vector<uint32_t>& moduli() const { return moduli_; }
    const std::string& label() const { return label_; }

    Elem zero() const { return 0; }
    Elem one() const { return one_; }
    Elem add(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;

    std::vector<uint32_t> decode(Elem a) const;
    Elem encode(std::span<const uint32_t> coeffs) const;
    std::string element_label(Elem a) const;

    // ann(a) = { x in R : ax = 0 }; always contains 0.
    Bitset annihilator(Elem a) const;
    // Z(R)*: nonzero elements with a nonzero annihilating partner.
    Bitset zero_divisor_set() const;
    bool is_domain() const;
    // { e : e^2 = e }; always contains 0 and 1.
    Bitset idempotents() const;
    // Sorted elements of the Peirce corner e*R.
    std::vector<Elem> corner(Elem idem) const;
    // Least idempotent e not in {0,1} with |eR| = 2 and (1-e)R a domain;
    // decides R isomorphic to Z_2 x D for finite R.
    std::optional<Elem> is_z2_times_domain() const;
    // Least a in Z(R)* with ann(a) = Z(R) (as a set including 0).
    std::optional<Elem> annihilator_ideal_witness() const;

    // Exhaustive identity/commutativity check over all pairs; associativity
    // over all triples when order <= assoc_cap, seeded random triples above.
    ValidationReport validate(uint32_t assoc_cap = kDefaultTableCap) const;

private:
    struct Factor {
        uint32_t offset;
        uint32_t len;
        LabelStyle style;
    };

    FiniteRing() = default;
    void init(std::vector<uint32_t> moduli, std::vector<CoeffVec> table, Elem one,
              std::string label, std::vector<Factor> factors, uint32_t table_cap);
    Elem mul_raw(Elem a, Elem b) const;
    void check_elem(Elem a) const;
    std::string factor_label(const Factor& f, std::span<const uint32_t> coeffs) const;

    std::vector<uint32_t> moduli_;
    std::vector<uint32_t> strides_;
    std::vector<CoeffVec> table_; // k*k row-major coefficient vectors
    uint32_t order_ = 0;
    Elem one_ = 0;
    std::string label_;
    std::vector<Factor> factors_;
    std::vector<Elem> mul_table_; // order*order when cached, else empty

    friend FiniteRing make_zn(uint32_t, uint32_t);
    friend FiniteRing make_product(const FiniteRing&, const FiniteRing&, uint32_t);
    friend FiniteRing make_presented(const Presentation&, uint32_t);
};

// The ring Z_n of integers modulo n; n >= 2.
FiniteRing make_zn(uint32_t n, uint32_t table_cap = FiniteRing::kDefaultTableCap);

// Componentwise product ring on the concatenated basis.
FiniteRing make_product(const FiniteRing& a, const FiniteRing& b,
                        uint32_t table_cap = FiniteRing::kDefaultTableCap);

// Builds and validates a structure-constant presentation; throws
// PresentationError naming the failed axiom and a witness triple.
FiniteRing make_presented(const Presentation& p,
                          uint32_t table_cap = FiniteRing::kDefaultTableCap);

// Plain-text structure-constant format:
//   moduli: m0 m1 ...
//   one: <index>
//   e<i>*e<j> = c0 c1 ...      (one line per pair i <= j)
Presentation parse_presentation(std::string_view text);
std::string format_presentation(const Presentation& p);

// "{2, 3, 4}" using element labels, ascending.
std::string element_set_to_string(const FiniteRing& ring, const Bitset& set);

} // namespace zdg
