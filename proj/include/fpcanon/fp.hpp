#ifndef FPCANON_FP_HPP
#define FPCANON_FP_HPP

#include <cstdint>
#include <compare>

#include "fpcanon/errors.hpp"

namespace fpcanon {

/// A verified prime modulus. Entries of matrices and polynomial coefficients
/// are canonical representatives in [0, p), stored as bytes, so p < 256.
class Prime {
  public:
    explicit Prime(uint32_t p);

    uint32_t value() const { return p_; }

    friend bool operator==(Prime a, Prime b) { return a.p_ == b.p_; }
    friend bool operator!=(Prime a, Prime b) { return a.p_ != b.p_; }

  private:
    uint32_t p_;
};

/// Throws PrimeMismatchError unless a == b. `what` names the operation.
void require_same_prime(Prime a, Prime b, const char* what);

// Arithmetic on canonical representatives. Inputs must already be in [0, p).
inline uint8_t fp_add(uint8_t a, uint8_t b, uint32_t p) {
    uint32_t s = uint32_t(a) + b;
    return uint8_t(s >= p ? s - p : s);
}

inline uint8_t fp_sub(uint8_t a, uint8_t b, uint32_t p) {
    return uint8_t(a >= b ? a - b : a + p - b);
}

inline uint8_t fp_neg(uint8_t a, uint32_t p) {
    return uint8_t(a == 0 ? 0 : p - a);
}

inline uint8_t fp_mul(uint8_t a, uint8_t b, uint32_t p) {
    return uint8_t(uint32_t(a) * b % p);
}

/// a^e mod p (e >= 0).
uint8_t fp_pow(uint8_t a, uint64_t e, uint32_t p);

/// Multiplicative inverse; throws DomainError on zero.
uint8_t fp_inv(uint8_t a, uint32_t p);

}  // namespace fpcanon

#endif  // FPCANON_FP_HPP
