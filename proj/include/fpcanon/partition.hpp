#ifndef FPCANON_PARTITION_HPP
#define FPCANON_PARTITION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "fpcanon/errors.hpp"

namespace fpcanon {

/// Integer partition: weakly decreasing positive parts; the empty partition
/// is the zero partition. Value type with the total order (size, then
/// reverse-lexicographic) used for deterministic enumeration and histogram
/// keys.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<uint32_t> parts);

    static Partition parse(const std::string& text);  // "2+1", "0"

    const std::vector<uint32_t>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    size_t part_count() const { return parts_.size(); }

    /// |lambda| = sum of parts.
    uint64_t size() const;
    /// n(lambda) = sum (i-1) * lambda_i.
    uint64_t weighted_index() const;
    /// m_k(lambda) = number of parts equal to k (k >= 1).
    uint32_t multiplicity(uint32_t k) const;
    Partition conjugate() const;

    std::string to_string() const;

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.parts_ == b.parts_;
    }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    /// (size, then reverse-lex): for equal sizes the lexicographically larger
    /// part vector comes first, so (2) precedes (1,1).
    friend bool operator<(const Partition& a, const Partition& b);

  private:
    std::vector<uint32_t> parts_;
};

/// All partitions with |lambda| <= max_size in the total order above.
std::vector<Partition> enumerate_partitions(uint32_t max_size);
/// All partitions with |lambda| == size, reverse-lexicographic.
std::vector<Partition> enumerate_partitions_of(uint32_t size);

}  // namespace fpcanon

#endif  // FPCANON_PARTITION_HPP
