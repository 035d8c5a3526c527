#include "zdg/ring.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace zdg {

namespace {

uint64_t checked_order(const std::vector<uint32_t>& moduli) {
    uint64_t order = 1;
    for (uint32_t m : moduli) {
        if (m == 0) throw InvalidParameterError("moduli must be positive");
        order *= m;
        if (order > FiniteRing::kMaxOrder)
            throw InvalidParameterError("ring order exceeds supported maximum");
    }
    return order;
}

} // namespace

Presentation::Presentation(std::vector<uint32_t> mods, Elem one_index)
    : moduli(std::move(mods)), one(one_index) {
    if (moduli.empty()) throw InvalidParameterError("presentation needs at least one basis element");
    checked_order(moduli);
    const uint32_t k = basis_size();
    table.assign(static_cast<size_t>(k) * k, CoeffVec(k, 0));
}

void Presentation::set_product(uint32_t i, uint32_t j, CoeffVec coeffs) {
    const uint32_t k = basis_size();
    if (i >= k || j >= k) throw InvalidParameterError("basis index out of range");
    if (coeffs.size() != k) throw InvalidParameterError("coefficient vector has wrong length");
    for (uint32_t t = 0; t < k; ++t) coeffs[t] %= moduli[t];
    table[static_cast<size_t>(i) * k + j] = coeffs;
    table[static_cast<size_t>(j) * k + i] = std::move(coeffs);
}

const CoeffVec& Presentation::product(uint32_t i, uint32_t j) const {
    return table[static_cast<size_t>(i) * basis_size() + j];
}

void FiniteRing::init(std::vector<uint32_t> moduli, std::vector<CoeffVec> table, Elem one,
                      std::string label, std::vector<Factor> factors, uint32_t table_cap) {
    moduli_ = std::move(moduli);
    table_ = std::move(table);
    label_ = std::move(label);
    factors_ = std::move(factors);
    one_ = one;

    const uint64_t order = checked_order(moduli_);
    if (order < 2) throw InvalidParameterError("trivial ring excluded (order must be >= 2)");
    order_ = static_cast<uint32_t>(order);

    strides_.resize(moduli_.size());
    uint64_t stride = 1;
    for (size_t i = 0; i < moduli_.size(); ++i) {
        strides_[i] = static_cast<uint32_t>(stride);
        stride *= moduli_[i];
    }
    if (one_ >= order_) throw InvalidParameterError("identity index out of range");

    if (order_ <= table_cap) {
        mul_table_.resize(static_cast<size_t>(order_) * order_);
        for (Elem a = 0; a < order_; ++a)
            for (Elem b = a; b < order_; ++b) {
                Elem p = mul_raw(a, b);
                mul_table_[static_cast<size_t>(a) * order_ + b] = p;
                mul_table_[static_cast<size_t>(b) * order_ + a] = p;
            }
    }
}

void FiniteRing::check_elem(Elem a) const {
    if (a >= order_) throw InvalidParameterError("element index out of range");
}

std::vector<uint32_t> FiniteRing::decode(Elem a) const {
    check_elem(a);
    std::vector<uint32_t> coeffs(moduli_.size());
    for (size_t i = 0; i < moduli_.size(); ++i) coeffs[i] = (a / strides_[i]) % moduli_[i];
    return coeffs;
}

Elem FiniteRing::encode(std::span<const uint32_t> coeffs) const {
    if (coeffs.size() != moduli_.size())
        throw InvalidParameterError("coefficient vector has wrong length");
    uint64_t a = 0;
    for (size_t i = 0; i < moduli_.size(); ++i) {
        if (coeffs[i] >= moduli_[i]) throw InvalidParameterError("coefficient out of range");
        a += static_cast<uint64_t>(coeffs[i]) * strides_[i];
    }
    return static_cast<Elem>(a);
}

Elem FiniteRing::add(Elem a, Elem b) const {
    check_elem(a);
    check_elem(b);
    uint64_t r = 0;
    for (size_t i = 0; i < moduli_.size(); ++i) {
        uint32_t ai = (a / strides_[i]) % moduli_[i];
        uint32_t bi = (b / strides_[i]) % moduli_[i];
        r += static_cast<uint64_t>((ai + bi) % moduli_[i]) * strides_[i];
    }
    return static_cast<Elem>(r);
}

Elem FiniteRing::neg(Elem a) const {
    check_elem(a);
    uint64_t r = 0;
    for (size_t i = 0; i < moduli_.size(); ++i) {
        uint32_t ai = (a / strides_[i]) % moduli_[i];
        r += static_cast<uint64_t>((moduli_[i] - ai) % moduli_[i]) * strides_[i];
    }
    return static_cast<Elem>(r);
}

Elem FiniteRing::mul_raw(Elem a, Elem b) const {
    const uint32_t k = basis_size();
    std::array<uint64_t, 16> acc_small{};
    std::vector<uint64_t> acc_big;
    uint64_t* acc = acc_small.data();
    if (k > acc_small.size()) {
        acc_big.assign(k, 0);
        acc = acc_big.data();
    }
    for (uint32_t i = 0; i < k; ++i) {
        uint32_t ai = (a / strides_[i]) % moduli_[i];
        if (ai == 0) continue;
        for (uint32_t j = 0; j < k; ++j) {
            uint32_t bj = (b / strides_[j]) % moduli_[j];
            if (bj == 0) continue;
            uint64_t w = static_cast<uint64_t>(ai) * bj;
            const CoeffVec& sc = table_[static_cast<size_t>(i) * k + j];
            for (uint32_t t = 0; t < k; ++t) {
                if (sc[t] == 0) continue;
                acc[t] = (acc[t] + (w % moduli_[t]) * sc[t]) % moduli_[t];
            }
        }
    }
    uint64_t r = 0;
    for (uint32_t t = 0; t < k; ++t) r += (acc[t] % moduli_[t]) * strides_[t];
    return static_cast<Elem>(r);
}

Elem FiniteRing::mul(Elem a, Elem b) const {
    check_elem(a);
    check_elem(b);
    if (!mul_table_.empty()) return mul_table_[static_cast<size_t>(a) * order_ + b];
    return mul_raw(a, b);
}

std::string FiniteRing::factor_label(const Factor& f, std::span<const uint32_t> coeffs) const {
    switch (f.style) {
    case LabelStyle::kDecimal:
        return std::to_string(coeffs[f.offset]);
    case LabelStyle::kPoly: {
        std::string out;
        for (uint32_t t = 0; t < f.len; ++t) {
            uint32_t c = coeffs[f.offset + t];
            if (c == 0) continue;
            if (!out.empty()) out += "+";
            if (t == 0) {
                out += std::to_string(c);
            } else {
                if (c != 1) out += std::to_string(c);
                out += "x";
                if (t > 1) out += "^" + std::to_string(t);
            }
        }
        return out.empty() ? "0" : out;
    }
    case LabelStyle::kTuple:
    default: {
        if (f.len == 1) return std::to_string(coeffs[f.offset]);
        std::string out = "(";
        for (uint32_t t = 0; t < f.len; ++t) {
            if (t) out += ",";
            out += std::to_string(coeffs[f.offset + t]);
        }
        return out + ")";
    }
    }
}

std::string FiniteRing::element_label(Elem a) const {
    auto coeffs = decode(a);
    if (factors_.size() == 1) return factor_label(factors_[0], coeffs);
    std::string out = "(";
    for (size_t i = 0; i < factors_.size(); ++i) {
        if (i) out += ",";
        out += factor_label(factors_[i], coeffs);
    }
    return out + ")";
}

Bitset FiniteRing::annihilator(Elem a) const {
    check_elem(a);
    Bitset ann(order_);
    for (Elem x = 0; x < order_; ++x)
        if (mul(a, x) == 0) ann.set(x);
    return ann;
}

Bitset FiniteRing::zero_divisor_set() const {
    Bitset zs(order_);
    for (Elem a = 1; a < order_; ++a) {
        for (Elem b = 1; b < order_; ++b) {
            if (mul(a, b) == 0) {
                zs.set(a);
                break;
            }
        }
    }
    return zs;
}

bool FiniteRing::is_domain() const {
    for (Elem a = 1; a < order_; ++a)
        for (Elem b = a; b < order_; ++b)
            if (mul(a, b) == 0) return false;
    return true;
}

Bitset FiniteRing::idempotents() const {
    Bitset idem(order_);
    for (Elem e = 0; e < order_; ++e)
        if (mul(e, e) == e) idem.set(e);
    return idem;
}

std::vector<Elem> FiniteRing::corner(Elem idem) const {
    check_elem(idem);
    Bitset seen(order_);
    for (Elem x = 0; x < order_; ++x) seen.set(mul(idem, x));
    std::vector<Elem> out;
    seen.for_each([&](uint32_t e) { out.push_back(e); });
    return out;
}

std::optional<Elem> FiniteRing::is_z2_times_domain() const {
    std::optional<Elem> found;
    idempotents().for_each([&](uint32_t e) {
        if (found || e == 0 || e == one_) return;
        if (corner(e).size() != 2) return;
        Elem f = add(one_, neg(static_cast<Elem>(e)));
        auto fc = corner(f);
        for (Elem a : fc) {
            if (a == 0) continue;
            for (Elem b : fc) {
                if (b == 0) continue;
                if (mul(a, b) == 0) return; // complement has zero-divisors
            }
        }
        found = static_cast<Elem>(e);
    });
    return found;
}

std::optional<Elem> FiniteRing::annihilator_ideal_witness() const {
    Bitset target = zero_divisor_set();
    if (target.none()) return std::nullopt;
    target.set(0);
    std::optional<Elem> found;
    target.for_each([&](uint32_t a) {
        if (found || a == 0) return;
        if (annihilator(static_cast<Elem>(a)) == target) found = static_cast<Elem>(a);
    });
    return found;
}

ValidationReport FiniteRing::validate(uint32_t assoc_cap) const {
    const uint32_t k = basis_size();

    // additive-order consistency: m_i * (e_i e_j) = 0
    for (uint32_t i = 0; i < k; ++i) {
        for (uint32_t j = 0; j < k; ++j) {
            const CoeffVec& sc = table_[static_cast<size_t>(i) * k + j];
            for (uint32_t t = 0; t < k; ++t) {
                if ((static_cast<uint64_t>(moduli_[i]) * sc[t]) % moduli_[t] != 0) {
                    AxiomViolation v;
                    v.axiom = "additive-order";
                    v.witness = {strides_[i] < order_ ? strides_[i] : 0,
                                 strides_[j] < order_ ? strides_[j] : 0, 0};
                    v.message = "m_" + std::to_string(i) + " * (e_" + std::to_string(i) +
                                "*e_" + std::to_string(j) + ") != 0";
                    return {v};
                }
            }
        }
    }

    for (Elem a = 0; a < order_; ++a) {
        if (mul(one_, a) != a) {
            AxiomViolation v;
            v.axiom = "identity";
            v.witness = {one_, a, 0};
            v.message = "1 * " + element_label(a) + " != " + element_label(a);
            return {v};
        }
    }

    for (Elem a = 0; a < order_; ++a) {
        for (Elem b = a + 1; b < order_; ++b) {
            if (mul(a, b) != mul(b, a)) {
                AxiomViolation v;
                v.axiom = "commutativity";
                v.witness = {a, b, 0};
                v.message = element_label(a) + " * " + element_label(b) + " is not symmetric";
                return {v};
            }
        }
    }

    auto assoc_check = [&](Elem a, Elem b, Elem c) -> bool {
        return mul(mul(a, b), c) == mul(a, mul(b, c));
    };
    auto assoc_violation = [&](Elem a, Elem b, Elem c) {
        AxiomViolation v;
        v.axiom = "associativity";
        v.witness = {a, b, c};
        v.message = "(" + element_label(a) + "*" + element_label(b) + ")*" + element_label(c) +
                    " != " + element_label(a) + "*(" + element_label(b) + "*" + element_label(c) + ")";
        return ValidationReport{v};
    };

    if (order_ <= assoc_cap) {
        for (Elem a = 0; a < order_; ++a)
            for (Elem b = a; b < order_; ++b)
                for (Elem c = b; c < order_; ++c)
                    if (!assoc_check(a, b, c)) return assoc_violation(a, b, c);
    } else {
        std::mt19937_64 rng(0x7a6467u);
        std::uniform_int_distribution<uint32_t> dist(0, order_ - 1);
        for (int trial = 0; trial < 200000; ++trial) {
            Elem a = dist(rng), b = dist(rng), c = dist(rng);
            if (!assoc_check(a, b, c)) return assoc_violation(a, b, c);
        }
    }

    return {};
}

FiniteRing make_zn(uint32_t n, uint32_t table_cap) {
    if (n < 2) throw InvalidParameterError("make_zn requires n >= 2");
    FiniteRing r;
    std::vector<CoeffVec> table{CoeffVec{1}};
    r.init({n}, std::move(table), 1, "Z" + std::to_string(n),
           {{0, 1, LabelStyle::kDecimal}}, table_cap);
    return r;
}

FiniteRing make_product(const FiniteRing& a, const FiniteRing& b, uint32_t table_cap) {
    const uint32_t ka = a.basis_size(), kb = b.basis_size(), k = ka + kb;

    std::vector<uint32_t> moduli;
    moduli.reserve(k);
    moduli.insert(moduli.end(), a.moduli_.begin(), a.moduli_.end());
    moduli.insert(moduli.end(), b.moduli_.begin(), b.moduli_.end());

    std::vector<CoeffVec> table(static_cast<size_t>(k) * k, CoeffVec(k, 0));
    for (uint32_t i = 0; i < ka; ++i)
        for (uint32_t j = 0; j < ka; ++j) {
            CoeffVec& c = table[static_cast<size_t>(i) * k + j];
            const CoeffVec& src = a.table_[static_cast<size_t>(i) * ka + j];
            std::copy(src.begin(), src.end(), c.begin());
        }
    for (uint32_t i = 0; i < kb; ++i)
        for (uint32_t j = 0; j < kb; ++j) {
            CoeffVec& c = table[static_cast<size_t>(ka + i) * k + (ka + j)];
            const CoeffVec& src = b.table_[static_cast<size_t>(i) * kb + j];
            std::copy(src.begin(), src.end(), c.begin() + ka);
        }

    std::vector<uint32_t> one_coeffs(k, 0);
    auto oa = a.decode(a.one_), ob = b.decode(b.one_);
    std::copy(oa.begin(), oa.end(), one_coeffs.begin());
    std::copy(ob.begin(), ob.end(), one_coeffs.begin() + ka);

    std::vector<FiniteRing::Factor> factors = a.factors_;
    for (FiniteRing::Factor f : b.factors_) {
        f.offset += ka;
        factors.push_back(f);
    }

    FiniteRing r;
    r.init(std::move(moduli), std::move(table), 0, a.label_ + " x " + b.label_,
           std::move(factors), table_cap);
    r.one_ = r.encode(one_coeffs);
    return r;
}

FiniteRing make_presented(const Presentation& p, uint32_t table_cap) {
    FiniteRing r;
    std::string label = p.label.empty() ? "presented" : p.label;
    LabelStyle style = p.label_style;
    if (p.basis_size() == 1 && style == LabelStyle::kTuple) style = LabelStyle::kDecimal;
    r.init(p.moduli, p.table, p.one, std::move(label),
           {{0, p.basis_size(), style}}, table_cap);
    auto report = r.validate();
    if (!report.ok()) {
        const AxiomViolation& v = *report.violation;
        std::string msg = "presentation invalid: axiom " + v.axiom + " fails (" + v.message +
                          "); witness (" + r.element_label(v.witness[0]) + ", " +
                          r.element_label(v.witness[1]) + ", " + r.element_label(v.witness[2]) + ")";
        throw PresentationError(v.axiom, msg);
    }
    return r;
}

Presentation parse_presentation(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::vector<uint32_t> moduli;
    std::optional<Elem> one;
    std::vector<std::tuple<uint32_t, uint32_t, CoeffVec>> products;

    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head) || head[0] == '#') continue;
        if (head == "moduli:") {
            uint32_t m;
            while (ls >> m) moduli.push_back(m);
            if (moduli.empty())
                throw InvalidParameterError("presentation line " + std::to_string(lineno) +
                                            ": empty moduli list");
        } else if (head == "one:") {
            uint32_t v;
            if (!(ls >> v))
                throw InvalidParameterError("presentation line " + std::to_string(lineno) +
                                            ": missing identity index");
            one = v;
        } else {
            // e<i>*e<j> = c0 c1 ...
            uint32_t i, j;
            char star, e2;
            std::istringstream hs(head);
            char e1;
            if (!(hs >> e1 >> i >> star >> e2 >> j) || e1 != 'e' || star != '*' || e2 != 'e')
                throw InvalidParameterError("presentation line " + std::to_string(lineno) +
                                            ": expected e<i>*e<j> = c0 c1 ...");
            std::string eq;
            if (!(ls >> eq) || eq != "=")
                throw InvalidParameterError("presentation line " + std::to_string(lineno) +
                                            ": expected '='");
            CoeffVec coeffs;
            uint32_t c;
            while (ls >> c) coeffs.push_back(c);
            products.emplace_back(i, j, std::move(coeffs));
        }
    }

    if (moduli.empty()) throw InvalidParameterError("presentation: missing moduli line");
    if (!one) throw InvalidParameterError("presentation: missing one line");
    Presentation p(std::move(moduli), *one);
    for (auto& [i, j, coeffs] : products) p.set_product(i, j, std::move(coeffs));
    return p;
}

std::string format_presentation(const Presentation& p) {
    std::string out = "moduli:";
    for (uint32_t m : p.moduli) out += " " + std::to_string(m);
    out += "\none: " + std::to_string(p.one) + "\n";
    const uint32_t k = p.basis_size();
    for (uint32_t i = 0; i < k; ++i)
        for (uint32_t j = i; j < k; ++j) {
            out += "e" + std::to_string(i) + "*e" + std::to_string(j) + " =";
            for (uint32_t c : p.product(i, j)) out += " " + std::to_string(c);
            out += "\n";
        }
    return out;
}

std::string element_set_to_string(const FiniteRing& ring, const Bitset& set) {
    std::string out = "{";
    bool first = true;
    set.for_each([&](uint32_t e) {
        if (!first) out += ", ";
        first = false;
        out += ring.element_label(e);
    });
    return out + "}";
}

} // namespace zdg
