#include "fpcanon/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "fpcanon/rng.hpp"

namespace fpcanon {

Poly::Poly(Prime p, std::vector<uint8_t> coeffs) : p_(p), c_(std::move(coeffs)) {
    for (uint8_t c : c_) {
        if (c >= p.value()) {
            throw DomainError("coefficient " + std::to_string(c) +
                              " out of range for F_" + std::to_string(p.value()));
        }
    }
    prune();
}

void Poly::prune() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::monomial(Prime p, uint8_t c, int k) {
    if (c == 0) return zero(p);
    std::vector<uint8_t> v(size_t(k) + 1, 0);
    v[size_t(k)] = c;
    return Poly(p, std::move(v));
}

uint8_t Poly::eval(uint8_t x) const {
    const uint32_t p = p_.value();
    uint8_t acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = fp_add(fp_mul(acc, x, p), *it, p);
    }
    return acc;
}

Poly Poly::operator+(const Poly& rhs) const {
    require_same_prime(p_, rhs.p_, "poly add");
    const uint32_t p = p_.value();
    Poly out(p_);
    out.c_.resize(std::max(c_.size(), rhs.c_.size()), 0);
    for (size_t i = 0; i < out.c_.size(); ++i) {
        out.c_[i] = fp_add(i < c_.size() ? c_[i] : 0, i < rhs.c_.size() ? rhs.c_[i] : 0, p);
    }
    out.prune();
    return out;
}

Poly Poly::operator-(const Poly& rhs) const {
    require_same_prime(p_, rhs.p_, "poly sub");
    const uint32_t p = p_.value();
    Poly out(p_);
    out.c_.resize(std::max(c_.size(), rhs.c_.size()), 0);
    for (size_t i = 0; i < out.c_.size(); ++i) {
        out.c_[i] = fp_sub(i < c_.size() ? c_[i] : 0, i < rhs.c_.size() ? rhs.c_[i] : 0, p);
    }
    out.prune();
    return out;
}

Poly Poly::operator*(const Poly& rhs) const {
    require_same_prime(p_, rhs.p_, "poly mul");
    if (is_zero() || rhs.is_zero()) return zero(p_);
    const uint32_t p = p_.value();
    Poly out(p_);
    out.c_.assign(c_.size() + rhs.c_.size() - 1, 0);
    // Schoolbook with a 64-bit accumulator per output coefficient; degrees in
    // this library stay in the tens, so no overflow and no need for FFT.
    for (size_t k = 0; k < out.c_.size(); ++k) {
        uint64_t acc = 0;
        const size_t lo = k >= rhs.c_.size() ? k - rhs.c_.size() + 1 : 0;
        const size_t hi = std::min(k, c_.size() - 1);
        for (size_t i = lo; i <= hi; ++i) acc += uint64_t(c_[i]) * rhs.c_[k - i];
        out.c_[k] = uint8_t(acc % p);
    }
    out.prune();
    return out;
}

Poly Poly::scaled(uint8_t c) const {
    const uint32_t p = p_.value();
    if (c >= p) throw DomainError("scalar out of range");
    if (c == 0) return zero(p_);
    Poly out = *this;
    for (auto& x : out.c_) x = fp_mul(x, c, p);
    return out;
}

Poly Poly::shifted(int k) const {
    if (is_zero() || k == 0) return k == 0 ? *this : *this;
    Poly out(p_);
    out.c_.assign(c_.size() + size_t(k), 0);
    std::copy(c_.begin(), c_.end(), out.c_.begin() + k);
    return out;
}

Poly Poly::monic() const {
    if (is_zero()) throw DomainError("monic() of zero polynomial");
    if (is_monic()) return *this;
    return scaled(fp_inv(leading_coeff(), p_.value()));
}

Poly Poly::derivative() const {
    const uint32_t p = p_.value();
    Poly out(p_);
    if (c_.size() <= 1) return out;
    out.c_.resize(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) {
        out.c_[i - 1] = uint8_t(uint64_t(c_[i]) * (i % p) % p);
    }
    out.prune();
    return out;
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
    require_same_prime(a.prime(), b.prime(), "divrem");
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    const uint32_t p = a.prime().value();
    if (a.degree() < b.degree()) return {Poly::zero(a.prime()), a};

    std::vector<uint8_t> rem = a.coeffs();
    const auto& bc = b.coeffs();
    const int db = b.degree();
    const uint8_t lead_inv = fp_inv(b.leading_coeff(), p);
    std::vector<uint8_t> quot(rem.size() - bc.size() + 1, 0);
    for (int k = int(rem.size()) - 1; k >= db; --k) {
        const uint8_t r = rem[size_t(k)];
        if (r == 0) continue;
        const uint8_t q = fp_mul(r, lead_inv, p);
        quot[size_t(k - db)] = q;
        for (int i = 0; i <= db; ++i) {
            rem[size_t(k - db + i)] = fp_sub(rem[size_t(k - db + i)], fp_mul(q, bc[size_t(i)], p), p);
        }
    }
    rem.resize(size_t(db));
    return {Poly(a.prime(), std::move(quot)), Poly(a.prime(), std::move(rem))};
}

Poly poly_mod(const Poly& a, const Poly& b) { return divrem(a, b).second; }

Poly divexact(const Poly& a, const Poly& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw InternalCheckError("divexact: nonzero remainder");
    return q;
}

Poly gcd(const Poly& a, const Poly& b) {
    require_same_prime(a.prime(), b.prime(), "gcd");
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = poly_mod(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return x.is_zero() ? x : x.monic();
}

Poly powmod(const Poly& base, const std::vector<bool>& e_bits, const Poly& m) {
    Poly acc = Poly::one(base.prime());
    Poly b = poly_mod(base, m);
    for (bool bit : e_bits) {
        acc = poly_mod(acc * acc, m);
        if (bit) acc = poly_mod(acc * b, m);
    }
    return acc;
}

Poly powmod(const Poly& base, uint64_t e, const Poly& m) {
    std::vector<bool> bits;
    for (int i = 63; i >= 0; --i) {
        if (!bits.empty() || ((e >> i) & 1)) bits.push_back((e >> i) & 1);
    }
    if (bits.empty()) return poly_mod(Poly::one(base.prime()), m);
    return powmod(base, bits, m);
}

bool poly_less(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
        if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
    }
    return false;
}

namespace {

// t^(p^k) mod g by iterated Frobenius: p-th powers of the previous image.
Poly frobenius_power_of_t(const Poly& g, int k) {
    Poly h = poly_mod(Poly::t(g.prime()), g);
    for (int i = 0; i < k; ++i) h = powmod(h, uint64_t(g.prime().value()), g);
    return h;
}

std::vector<int> prime_divisors(int d) {
    std::vector<int> out;
    for (int q = 2; q <= d; ++q) {
        if (d % q == 0) {
            out.push_back(q);
            while (d % q == 0) d /= q;
        }
    }
    return out;
}

}  // namespace

bool is_irreducible(const Poly& g) {
    if (g.is_zero()) throw DomainError("is_irreducible: zero polynomial");
    const int d = g.degree();
    if (d < 1) return false;
    if (d == 1) return true;
    const Poly t = Poly::t(g.prime());
    if (frobenius_power_of_t(g, d) != poly_mod(t, g)) return false;
    for (int q : prime_divisors(d)) {
        Poly h = frobenius_power_of_t(g, d / q) - poly_mod(t, g);
        if (gcd(h, g).degree() != 0) return false;
    }
    return true;
}

IrreduciblePoly::IrreduciblePoly(Poly f) : f_(std::move(f)) {
    if (!f_.is_monic() || f_.is_constant()) {
        throw DomainError("not a monic nonconstant polynomial: " + f_.to_pretty_string());
    }
    if (!is_irreducible(f_)) {
        throw DomainError("not irreducible over F_" + std::to_string(f_.prime().value()) +
                          ": " + f_.to_pretty_string());
    }
}

namespace {

// g(t) = h(t^p) -> h. Valid in characteristic p because c^(1/p) = c on F_p.
Poly pth_root(const Poly& g) {
    const uint32_t p = g.prime().value();
    std::vector<uint8_t> out(size_t(g.degree() / int(p)) + 1, 0);
    for (int i = 0; i <= g.degree(); ++i) {
        const uint8_t c = g.coeff(i);
        if (c == 0) continue;
        if (i % int(p) != 0) throw InternalCheckError("pth_root: exponent not divisible by p");
        out[size_t(i / int(p))] = c;
    }
    return Poly(g.prime(), std::move(out));
}

// Yun-style squarefree decomposition adapted to characteristic p: the
// derivative can vanish (g = h(t^p)), in which case recurse on the p-th root.
void squarefree_decompose(const Poly& g, int outer_mult,
                          std::vector<std::pair<Poly, int>>& out) {
    const uint32_t p = g.prime().value();
    Poly deriv = g.derivative();
    if (deriv.is_zero()) {
        squarefree_decompose(pth_root(g), outer_mult * int(p), out);
        return;
    }
    Poly c = gcd(g, deriv);
    Poly w = divexact(g, c);
    int i = 1;
    while (w.degree() > 0) {
        Poly y = gcd(w, c);
        Poly z = divexact(w, y);
        if (z.degree() > 0) out.emplace_back(z.monic(), i * outer_mult);
        c = divexact(c, y);
        w = std::move(y);
        ++i;
    }
    if (c.degree() > 0) squarefree_decompose(c, outer_mult * int(p), out);
}

// Distinct-degree splitting of a squarefree monic polynomial: returns pairs
// (product of irreducible factors of degree d, d).
std::vector<std::pair<Poly, int>> distinct_degree_split(const Poly& f) {
    std::vector<std::pair<Poly, int>> out;
    const Poly t = Poly::t(f.prime());
    Poly h = poly_mod(t, f);
    Poly rest = f;
    for (int d = 1; 2 * d <= rest.degree(); ++d) {
        h = powmod(h, uint64_t(f.prime().value()), rest);
        Poly g = gcd(h - poly_mod(t, rest), rest);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            rest = divexact(rest, g);
            h = poly_mod(h, rest);
        }
    }
    if (rest.degree() > 0) out.emplace_back(rest, rest.degree());
    return out;
}

// (p^d - 1) / 2 as a most-significant-first bit string, for odd p.
std::vector<bool> cz_exponent_bits(uint32_t p, int d) {
    // Little-endian base-2 long arithmetic on a vector of limbs.
    std::vector<uint32_t> n{1};
    auto mul_small = [&](uint32_t m) {
        uint64_t carry = 0;
        for (auto& limb : n) {
            uint64_t v = uint64_t(limb) * m + carry;
            limb = uint32_t(v & 0xffffffffu);
            carry = v >> 32;
        }
        if (carry) n.push_back(uint32_t(carry));
    };
    for (int i = 0; i < d; ++i) mul_small(p);
    // subtract 1 (p^d >= 3 here)
    for (auto& limb : n) {
        if (limb > 0) {
            --limb;
            break;
        }
        limb = 0xffffffffu;
    }
    // divide by 2
    uint32_t carry = 0;
    for (int i = int(n.size()) - 1; i >= 0; --i) {
        uint64_t v = (uint64_t(carry) << 32) | n[size_t(i)];
        n[size_t(i)] = uint32_t(v >> 1);
        carry = uint32_t(v & 1);
    }
    std::vector<bool> bits;
    for (int i = int(n.size()) - 1; i >= 0; --i) {
        for (int b = 31; b >= 0; --b) {
            bool bit = (n[size_t(i)] >> b) & 1;
            if (!bits.empty() || bit) bits.push_back(bit);
        }
    }
    return bits;
}

Poly random_poly_below(int max_deg, Prime p, SplitMix64& rng) {
    std::vector<uint8_t> c(size_t(max_deg), 0);
    for (auto& x : c) x = uint8_t(rng.next() % p.value());
    return Poly(p, std::move(c));
}

// Cantor-Zassenhaus equal-degree splitting of a squarefree product of
// irreducibles that all have degree d. Characteristic 2 uses the trace map.
void equal_degree_split(const Poly& f, int d, SplitMix64& rng, std::vector<Poly>& out) {
    if (f.degree() == d) {
        out.push_back(f.monic());
        return;
    }
    const uint32_t p = f.prime().value();
    for (;;) {
        Poly r = random_poly_below(f.degree(), f.prime(), rng);
        if (r.is_zero()) continue;
        Poly g(f.prime());
        if (p == 2) {
            Poly acc = poly_mod(r, f);
            Poly term = acc;
            for (int i = 1; i < d; ++i) {
                term = poly_mod(term * term, f);
                acc = acc + term;
            }
            g = gcd(acc, f);
        } else {
            Poly h = powmod(r, cz_exponent_bits(p, d), f);
            g = gcd(h - Poly::one(f.prime()), f);
        }
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree_split(g, d, rng, out);
            equal_degree_split(divexact(f, g), d, rng, out);
            return;
        }
    }
}

}  // namespace

std::vector<std::pair<IrreduciblePoly, int>> factor(const Poly& g, uint64_t seed) {
    if (!g.is_monic() || g.is_constant()) {
        throw DomainError("factor requires a monic nonconstant polynomial");
    }
    std::vector<std::pair<Poly, int>> squarefree;
    squarefree_decompose(g, 1, squarefree);

    std::vector<std::pair<Poly, int>> raw;
    uint64_t subseed = seed;
    for (const auto& [part, mult] : squarefree) {
        for (const auto& [prod, d] : distinct_degree_split(part)) {
            std::vector<Poly> irreducibles;
            SplitMix64 rng(derive_seed(seed, 0x5eedf00d, subseed++));
            equal_degree_split(prod, d, rng, irreducibles);
            for (auto& f : irreducibles) raw.emplace_back(std::move(f), mult);
        }
    }
    std::sort(raw.begin(), raw.end(),
              [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
    std::vector<std::pair<IrreduciblePoly, int>> out;
    out.reserve(raw.size());
    for (auto& [f, e] : raw) out.emplace_back(IrreduciblePoly(std::move(f)), e);
    return out;
}

int val_of(const Poly& g, const IrreduciblePoly& f) {
    if (g.is_zero()) throw DomainError("valuation of the zero polynomial is infinite");
    require_same_prime(g.prime(), f.prime(), "val_of");
    int e = 0;
    Poly rest = g;
    for (;;) {
        auto [q, r] = divrem(rest, f.poly());
        if (!r.is_zero()) return e;
        rest = std::move(q);
        ++e;
    }
}

std::string Poly::to_coeff_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ',';
        os << int(c_[i]);
    }
    return os.str();
}

std::string Poly::to_pretty_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const uint8_t c = coeff(i);
        if (c == 0) continue;
        if (!first) os << '+';
        first = false;
        if (i == 0) {
            os << int(c);
        } else {
            if (c != 1) os << int(c);
            os << 't';
            if (i > 1) os << '^' << i;
        }
    }
    return os.str();
}

Poly Poly::parse_coeffs(Prime p, const std::string& text) {
    std::vector<uint8_t> c;
    std::string tok;
    std::istringstream is(text);
    while (std::getline(is, tok, ',')) {
        size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw ParseError("bad coefficient '" + tok + "' in '" + text + "'");
        }
        while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
        if (pos != tok.size() || v < 0 || uint32_t(v) >= p.value()) {
            throw ParseError("bad coefficient '" + tok + "' for F_" +
                             std::to_string(p.value()));
        }
        c.push_back(uint8_t(v));
    }
    if (c.empty()) throw ParseError("empty polynomial text");
    return Poly(p, std::move(c));
}

Poly Poly::parse_pretty(Prime p, const std::string& text) {
    std::string s;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    }
    if (s.empty()) throw ParseError("empty polynomial text");
    Poly out = Poly::zero(p);
    size_t i = 0;
    while (i < s.size()) {
        if (s[i] == '+') {
            ++i;
            if (i == s.size()) throw ParseError("dangling '+' in '" + text + "'");
        }
        uint32_t c = 1;
        bool saw_digits = false;
        uint32_t digits = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            digits = digits * 10 + uint32_t(s[i] - '0');
            if (digits > 100000) throw ParseError("coefficient overflow in '" + text + "'");
            saw_digits = true;
            ++i;
        }
        if (saw_digits) c = digits;
        int e = 0;
        if (i < s.size() && s[i] == 't') {
            ++i;
            e = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                if (i == s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) {
                    throw ParseError("missing exponent in '" + text + "'");
                }
                uint32_t ex = 0;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                    ex = ex * 10 + uint32_t(s[i] - '0');
                    if (ex > 4096) throw ParseError("exponent overflow in '" + text + "'");
                    ++i;
                }
                e = int(ex);
            }
        } else if (!saw_digits) {
            throw ParseError("unexpected character '" + std::string(1, s[i]) + "' in '" +
                             text + "'");
        }
        if (c >= p.value()) {
            throw ParseError("coefficient " + std::to_string(c) + " out of range for F_" +
                             std::to_string(p.value()) + " in '" + text + "'");
        }
        out = out + Poly::monomial(p, uint8_t(c), e);
    }
    return out;
}

}  // namespace fpcanon
