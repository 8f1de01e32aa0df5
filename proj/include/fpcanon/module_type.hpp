#ifndef FPCANON_MODULE_TYPE_HPP
#define FPCANON_MODULE_TYPE_HPP

#include <map>
#include <string>

#include "fpcanon/partition.hpp"
#include "fpcanon/poly.hpp"

namespace fpcanon {

/// Isomorphism type of a finite F_p[t]-module: a finite map from irreducible
/// monic polynomials to nonzero partitions, keyed in the canonical polynomial
/// order. The entry at f records the exponents of the f-primary summands.
class ModuleType {
  public:
    explicit ModuleType(Prime p) : p_(p) {}

    Prime prime() const { return p_; }
    const std::map<Poly, Partition, PolyLess>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    /// Inserts or replaces; dropping is implicit for empty partitions.
    void set(const IrreduciblePoly& f, const Partition& lambda);
    /// Zero partition if f is absent.
    Partition at(const IrreduciblePoly& f) const;

    /// Dimension over F_p of any realization: sum of deg f * |lambda^(f)|.
    uint64_t dimension() const;

    /// "t:2+1;t+1:1"; "" for the empty type.
    std::string to_string() const;
    static ModuleType parse(Prime p, const std::string& text);

    friend bool operator==(const ModuleType& a, const ModuleType& b) {
        return a.p_ == b.p_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const ModuleType& a, const ModuleType& b) { return !(a == b); }

  private:
    Prime p_;
    std::map<Poly, Partition, PolyLess> entries_;
};

}  // namespace fpcanon

#endif  // FPCANON_MODULE_TYPE_HPP
