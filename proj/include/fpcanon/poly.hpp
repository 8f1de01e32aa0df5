#ifndef FPCANON_POLY_HPP
#define FPCANON_POLY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fpcanon/fp.hpp"

namespace fpcanon {

/// Dense univariate polynomial over F_p. Coefficient i is the coefficient of
/// t^i; no trailing zeros are stored, so the zero polynomial has an empty
/// coefficient vector and degree() == kZeroDegree.
class Poly {
  public:
    /// Degree reported for the zero polynomial. Comparisons against any real
    /// degree behave like negative infinity at the scales this library handles.
    static constexpr int kZeroDegree = -0x40000000;

    explicit Poly(Prime p) : p_(p) {}
    Poly(Prime p, std::vector<uint8_t> coeffs);

    static Poly zero(Prime p) { return Poly(p); }
    static Poly one(Prime p) { return Poly(p, {1}); }
    static Poly t(Prime p) { return Poly(p, {0, 1}); }
    /// c * t^k
    static Poly monomial(Prime p, uint8_t c, int k);
    /// Parse "1,0,1" (lowest degree first).
    static Poly parse_coeffs(Prime p, const std::string& text);
    /// Parse the human form used in keys: "t^2+t+1", "2t", "0".
    static Poly parse_pretty(Prime p, const std::string& text);

    Prime prime() const { return p_; }
    int degree() const { return c_.empty() ? kZeroDegree : int(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    bool is_constant() const { return c_.size() <= 1; }
    uint8_t coeff(int i) const {
        return (i >= 0 && i < int(c_.size())) ? c_[i] : uint8_t(0);
    }
    uint8_t leading_coeff() const { return c_.empty() ? uint8_t(0) : c_.back(); }
    const std::vector<uint8_t>& coeffs() const { return c_; }

    uint8_t eval(uint8_t x) const;

    Poly operator+(const Poly& rhs) const;
    Poly operator-(const Poly& rhs) const;
    Poly operator*(const Poly& rhs) const;
    Poly scaled(uint8_t c) const;
    Poly shifted(int k) const;  // * t^k
    Poly monic() const;         // scale by inverse of leading coefficient
    Poly derivative() const;

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.p_ == b.p_ && a.c_ == b.c_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// "1,0,1" (lowest degree first), "0" for zero.
    std::string to_coeff_string() const;
    /// "t^2+1", "2t^3+t", "0".
    std::string to_pretty_string() const;

  private:
    void prune();

    Prime p_;
    std::vector<uint8_t> c_;
};

/// (q, r) with a = q*b + r and deg r < deg b. Throws on b == 0.
std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
/// Remainder only.
Poly poly_mod(const Poly& a, const Poly& b);
/// Exact quotient; throws InternalCheckError if the division leaves a remainder.
Poly divexact(const Poly& a, const Poly& b);
/// Monic gcd; gcd(0, 0) == 0.
Poly gcd(const Poly& a, const Poly& b);
/// base^e mod m, e as a bit string most-significant first (for huge exponents).
Poly powmod(const Poly& base, const std::vector<bool>& e_bits, const Poly& m);
/// base^e mod m for small exponents.
Poly powmod(const Poly& base, uint64_t e, const Poly& m);

/// Canonical irreducible ordering: by degree, then by coefficients compared
/// from the highest degree down. Used everywhere a deterministic order of
/// polynomials is needed (factor output, module-type keys, RCF blocks).
bool poly_less(const Poly& a, const Poly& b);

struct PolyLess {
    bool operator()(const Poly& a, const Poly& b) const { return poly_less(a, b); }
};

/// Distinct-degree irreducibility test: g of degree d is irreducible iff
/// t^(p^d) == t (mod g) and gcd(t^(p^(d/q)) - t, g) = 1 for every prime q | d.
bool is_irreducible(const Poly& g);

/// A monic, nonconstant, irreducible polynomial (a member of S). Validated at
/// construction.
class IrreduciblePoly {
  public:
    explicit IrreduciblePoly(Poly f);

    const Poly& poly() const { return f_; }
    Prime prime() const { return f_.prime(); }
    int degree() const { return f_.degree(); }

    friend bool operator==(const IrreduciblePoly& a, const IrreduciblePoly& b) {
        return a.f_ == b.f_;
    }
    friend bool operator!=(const IrreduciblePoly& a, const IrreduciblePoly& b) {
        return !(a == b);
    }

  private:
    Poly f_;
};

/// Full factorization of a monic nonconstant polynomial into members of S,
/// sorted canonically. Squarefree decomposition, then distinct-degree
/// splitting, then Cantor-Zassenhaus equal-degree splitting; all random
/// choices derive from `seed`, with deterministic retries on failed splits.
std::vector<std::pair<IrreduciblePoly, int>> factor(const Poly& g, uint64_t seed);

/// Largest e with f^e | g. Throws DomainError on g == 0.
int val_of(const Poly& g, const IrreduciblePoly& f);

}  // namespace fpcanon

#endif  // FPCANON_POLY_HPP
