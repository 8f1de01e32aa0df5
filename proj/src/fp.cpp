#include "fpcanon/fp.hpp"

#include <string>

namespace fpcanon {

Prime::Prime(uint32_t p) : p_(p) {
    if (p < 2 || p > 255) {
        throw DomainError("prime modulus must be in [2, 255], got " + std::to_string(p));
    }
    // Trial division; moduli are tiny.
    for (uint32_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) {
            throw DomainError(std::to_string(p) + " is not prime (divisible by " +
                              std::to_string(d) + ")");
        }
    }
}

void require_same_prime(Prime a, Prime b, const char* what) {
    if (a != b) {
        throw PrimeMismatchError(std::string(what) + ": operands over F_" +
                                 std::to_string(a.value()) + " and F_" +
                                 std::to_string(b.value()));
    }
}

uint8_t fp_pow(uint8_t a, uint64_t e, uint32_t p) {
    uint32_t base = a % p;
    uint32_t acc = 1;
    while (e > 0) {
        if (e & 1) acc = acc * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return uint8_t(acc);
}

uint8_t fp_inv(uint8_t a, uint32_t p) {
    if (a == 0) throw DomainError("inverse of zero in F_" + std::to_string(p));
    // Fermat: a^(p-2). p is prime and tiny, so this is as fast as ext-gcd.
    return fp_pow(a, p - 2, p);
}

}  // namespace fpcanon
