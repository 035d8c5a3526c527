#include "zdg/ring_dsl.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

namespace zdg::dsl {

bool operator==(const ProductSpec& a, const ProductSpec& b) { return a.factors == b.factors; }
bool operator==(const RingSpec& a, const RingSpec& b) { return a.node == b.node; }

namespace {

struct Cursor {
    std::string_view text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    // Peeks the next significant character, lowercased; '\0' at end.
    char peek() {
        skip_ws();
        return pos < text.size() ? static_cast<char>(std::tolower(static_cast<unsigned char>(text[pos]))) : '\0';
    }
    char take() {
        char c = peek();
        if (pos < text.size()) ++pos;
        return c;
    }
    void expect(char c, const std::string& what) {
        size_t at = (skip_ws(), pos);
        if (take() != c) throw SyntaxError(at, what);
    }
    uint64_t parse_int() {
        skip_ws();
        size_t at = pos;
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw SyntaxError(at, "an integer");
        uint64_t v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + static_cast<uint64_t>(text[pos] - '0');
            if (v > 100000000ull) throw SyntaxError(at, "a smaller integer");
            ++pos;
        }
        return v;
    }
};

// Polynomial as degree -> coefficient (may be negative before reduction).
using Poly = std::map<uint32_t, int64_t>;

Poly parse_poly(Cursor& cur) {
    Poly p;
    bool first = true;
    while (true) {
        cur.skip_ws();
        size_t term_at = cur.pos;
        int64_t sign = 1;
        char c = cur.peek();
        if (c == '+' || c == '-') {
            sign = (c == '-') ? -1 : 1;
            cur.take();
        } else if (!first && c != '\0') {
            // terms after the first must be joined by +/-; stop otherwise
            break;
        }
        cur.skip_ws();
        term_at = cur.pos;
        c = cur.peek();

        int64_t coeff = 1;
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            coeff = static_cast<int64_t>(cur.parse_int());
            have_coeff = true;
        }
        uint32_t deg = 0;
        if (cur.peek() == 'x') {
            cur.take();
            deg = 1;
            if (cur.peek() == '^') {
                cur.take();
                uint64_t e = cur.parse_int();
                if (e > 16) throw SyntaxError(term_at, "exponent <= 16");
                deg = static_cast<uint32_t>(e);
            }
        } else if (!have_coeff) {
            throw SyntaxError(term_at, "a polynomial term");
        }
        p[deg] += sign * coeff;
        first = false;

        char next = cur.peek();
        if (next != '+' && next != '-') break;
    }
    return p;
}

QuotientSpec normalize_quotient(uint32_t n, const std::vector<Poly>& rels, size_t rel_list_at) {
    auto unsupported = [&](const std::string& why) {
        throw UnsupportedPresentationError("unsupported presentation at offset " +
                                           std::to_string(rel_list_at) + ": " + why);
    };

    struct Reduced {
        std::map<uint32_t, uint32_t> terms; // deg -> coeff in (0, n)
        uint32_t degree;
    };
    std::vector<Reduced> reduced;
    for (const Poly& p : rels) {
        Reduced r;
        for (auto [deg, c] : p) {
            int64_t cm = ((c % n) + n) % n;
            if (cm != 0) r.terms[deg] = static_cast<uint32_t>(cm);
        }
        if (r.terms.empty()) unsupported("relation reduces to 0 = 0");
        r.degree = r.terms.rbegin()->first;
        if (r.degree == 0) unsupported("constant relation");
        reduced.push_back(std::move(r));
    }

    // leading candidates are the monic relations
    int lead_idx = -1;
    for (size_t i = 0; i < reduced.size(); ++i) {
        if (reduced[i].terms.rbegin()->second == 1) {
            if (lead_idx >= 0) unsupported("more than one monic relation");
            lead_idx = static_cast<int>(i);
        }
    }
    if (lead_idx < 0) unsupported("no monic leading relation");
    const Reduced& lead = reduced[static_cast<size_t>(lead_idx)];
    const uint32_t d = lead.degree;

    QuotientSpec q;
    q.n = n;
    q.lead_rhs.assign(d, 0);
    for (auto [deg, c] : lead.terms) {
        if (deg == d) continue;
        q.lead_rhs[deg] = (n - c) % n; // x^d = -(lower terms)
    }

    std::map<uint32_t, uint32_t> kill_gcd;
    for (size_t i = 0; i < reduced.size(); ++i) {
        if (static_cast<int>(i) == lead_idx) continue;
        const Reduced& r = reduced[i];
        if (r.terms.size() != 1) unsupported("non-monic relation with multiple terms");
        auto [j, c] = *r.terms.begin();
        if (j >= d) unsupported("coefficient relation degree not below the leading degree");
        auto it = kill_gcd.find(j);
        kill_gcd[j] = (it == kill_gcd.end()) ? c : std::gcd(it->second, c);
    }
    for (auto [j, c] : kill_gcd) {
        if (c < 2) unsupported("coefficient relations for x^" + std::to_string(j) +
                               " combine to kill the basis element");
        if (n % c != 0) unsupported("coefficient " + std::to_string(c) +
                                    " does not divide the base modulus");
        q.kills.emplace_back(j, c);
    }
    return q;
}

RingSpec parse_term(Cursor& cur) {
    cur.skip_ws();
    size_t at = cur.pos;
    if (cur.take() != 'z') throw SyntaxError(at, "'Z'");
    uint64_t n = cur.parse_int();
    if (n < 2) throw SyntaxError(at, "a modulus >= 2");

    if (cur.peek() != '[') return RingSpec{ZnSpec{static_cast<uint32_t>(n)}};

    cur.skip_ws();
    size_t bracket_at = cur.pos;
    auto expect_suffix = [&](char c) {
        if (cur.take() != c) throw SyntaxError(bracket_at, "quotient suffix '[x]/('");
    };
    expect_suffix('[');
    expect_suffix('x');
    expect_suffix(']');
    expect_suffix('/');
    expect_suffix('(');

    cur.skip_ws();
    size_t rels_at = cur.pos;
    std::vector<Poly> rels;
    rels.push_back(parse_poly(cur));
    while (cur.peek() == ',') {
        cur.take();
        rels.push_back(parse_poly(cur));
    }
    cur.expect(')', "')'");

    return RingSpec{normalize_quotient(static_cast<uint32_t>(n), rels, rels_at)};
}

FiniteRing compile_quotient(const QuotientSpec& q, uint32_t table_cap) {
    const uint32_t d = q.degree();
    const uint32_t n = q.n;

    std::vector<uint32_t> moduli(d, n);
    for (auto [j, c] : q.kills) moduli[j] = c;

    // x^t reduced against x^d = g(x), coefficients mod n
    std::vector<std::vector<uint64_t>> rep;
    rep.reserve(2 * d - 1);
    for (uint32_t t = 0; t < d; ++t) {
        std::vector<uint64_t> unit(d, 0);
        unit[t] = 1;
        rep.push_back(std::move(unit));
    }
    for (uint32_t t = d; t <= 2 * (d - 1); ++t) {
        const auto& prev = rep[t - 1];
        std::vector<uint64_t> next(d, 0);
        for (uint32_t i = 0; i + 1 < d; ++i) next[i + 1] = prev[i];
        uint64_t top = prev[d - 1];
        if (top) {
            for (uint32_t i = 0; i < d; ++i) next[i] = (next[i] + top * q.lead_rhs[i]) % n;
        }
        rep.push_back(std::move(next));
    }

    Presentation p(moduli, /*one_index=*/1);
    p.label = format(RingSpec{q});
    p.label_style = LabelStyle::kPoly;
    for (uint32_t i = 0; i < d; ++i)
        for (uint32_t j = i; j < d; ++j) {
            CoeffVec coeffs(d);
            for (uint32_t t = 0; t < d; ++t)
                coeffs[t] = static_cast<uint32_t>(rep[i + j][t] % moduli[t]);
            p.set_product(i, j, std::move(coeffs));
        }
    return make_presented(p, table_cap);
}

} // namespace

RingSpec parse(std::string_view text) {
    Cursor cur{text};
    RingSpec first = parse_term(cur);
    std::vector<RingSpec> factors;
    factors.push_back(std::move(first));
    while (cur.peek() == 'x') {
        cur.take();
        factors.push_back(parse_term(cur));
    }
    if (!cur.eof()) throw SyntaxError(cur.pos, "end of input or 'x'");
    if (factors.size() == 1) return std::move(factors[0]);
    return RingSpec{ProductSpec{std::move(factors)}};
}

std::string format(const RingSpec& spec) {
    struct Visitor {
        std::string operator()(const ZnSpec& z) const { return "Z" + std::to_string(z.n); }
        std::string operator()(const QuotientSpec& q) const {
            const uint32_t d = q.degree();
            std::string lead = (d == 1) ? "x" : "x^" + std::to_string(d);
            for (uint32_t j = d; j-- > 0;) {
                uint32_t h = (q.n - q.lead_rhs[j]) % q.n;
                if (h == 0) continue;
                lead += "+";
                if (j == 0) {
                    lead += std::to_string(h);
                } else {
                    if (h != 1) lead += std::to_string(h);
                    lead += "x";
                    if (j > 1) lead += "^" + std::to_string(j);
                }
            }
            std::string out = "Z" + std::to_string(q.n) + "[x]/(" + lead;
            for (auto [j, c] : q.kills) {
                out += ", " + std::to_string(c) + "x";
                if (j > 1) out += "^" + std::to_string(j);
            }
            return out + ")";
        }
        std::string operator()(const ProductSpec& p) const {
            std::string out;
            for (size_t i = 0; i < p.factors.size(); ++i) {
                if (i) out += " x ";
                out += format(p.factors[i]);
            }
            return out;
        }
    };
    return std::visit(Visitor{}, spec.node);
}

FiniteRing compile(const RingSpec& spec, uint32_t table_cap) {
    struct Visitor {
        uint32_t cap;
        FiniteRing operator()(const ZnSpec& z) const { return make_zn(z.n, cap); }
        FiniteRing operator()(const QuotientSpec& q) const { return compile_quotient(q, cap); }
        FiniteRing operator()(const ProductSpec& p) const {
            FiniteRing acc = compile(p.factors[0], cap);
            for (size_t i = 1; i < p.factors.size(); ++i)
                acc = make_product(acc, compile(p.factors[i], cap), cap);
            return acc;
        }
    };
    return std::visit(Visitor{table_cap}, spec.node);
}

FiniteRing compile(std::string_view text, uint32_t table_cap) {
    return compile(parse(text), table_cap);
}

std::string canonical(std::string_view text) { return format(parse(text)); }

} // namespace zdg::dsl
