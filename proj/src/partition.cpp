#include "fpcanon/partition.hpp"

#include <algorithm>
#include <sstream>

namespace fpcanon {

Partition::Partition(std::vector<uint32_t> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] == 0 || (i > 0 && parts_[i] > parts_[i - 1])) {
            throw DomainError("parts must be weakly decreasing positive integers");
        }
    }
}

uint64_t Partition::size() const {
    uint64_t s = 0;
    for (uint32_t x : parts_) s += x;
    return s;
}

uint64_t Partition::weighted_index() const {
    uint64_t s = 0;
    for (size_t i = 0; i < parts_.size(); ++i) s += uint64_t(i) * parts_[i];
    return s;
}

uint32_t Partition::multiplicity(uint32_t k) const {
    if (k == 0) throw DomainError("multiplicity requires k >= 1");
    uint32_t c = 0;
    for (uint32_t x : parts_) c += (x == k);
    return c;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<uint32_t> conj(parts_[0], 0);
    for (uint32_t x : parts_) {
        for (uint32_t i = 0; i < x; ++i) ++conj[i];
    }
    return Partition(std::move(conj));
}

bool operator<(const Partition& a, const Partition& b) {
    const uint64_t sa = a.size(), sb = b.size();
    if (sa != sb) return sa < sb;
    // Reverse-lexicographic: larger leading parts first.
    return std::lexicographical_compare(b.parts_.begin(), b.parts_.end(),
                                        a.parts_.begin(), a.parts_.end());
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "0";
    std::ostringstream os;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << '+';
        os << parts_[i];
    }
    return os.str();
}

Partition Partition::parse(const std::string& text) {
    if (text == "0") return {};
    std::vector<uint32_t> parts;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, '+')) {
        size_t pos = 0;
        long v = 0;
        try {
            v = std::stol(tok, &pos);
        } catch (const std::exception&) {
            throw ParseError("bad partition part '" + tok + "'");
        }
        if (pos != tok.size() || v <= 0 || v > 1'000'000) {
            throw ParseError("bad partition part '" + tok + "'");
        }
        parts.push_back(uint32_t(v));
    }
    if (parts.empty()) throw ParseError("empty partition text");
    return Partition(std::move(parts));
}

namespace {

void emit(uint32_t remaining, uint32_t max_part, std::vector<uint32_t>& acc,
          std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(acc));
        return;
    }
    for (uint32_t part = std::min(remaining, max_part); part >= 1; --part) {
        acc.push_back(part);
        emit(remaining - part, part, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions_of(uint32_t size) {
    std::vector<Partition> out;
    std::vector<uint32_t> acc;
    emit(size, size == 0 ? 1 : size, acc, out);
    return out;
}

std::vector<Partition> enumerate_partitions(uint32_t max_size) {
    std::vector<Partition> out;
    for (uint32_t s = 0; s <= max_size; ++s) {
        auto level = enumerate_partitions_of(s);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

}  // namespace fpcanon
