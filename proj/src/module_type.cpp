#include "fpcanon/module_type.hpp"

#include <sstream>

namespace fpcanon {

void ModuleType::set(const IrreduciblePoly& f, const Partition& lambda) {
    require_same_prime(p_, f.prime(), "ModuleType::set");
    if (lambda.empty()) {
        entries_.erase(f.poly());
    } else {
        entries_[f.poly()] = lambda;
    }
}

Partition ModuleType::at(const IrreduciblePoly& f) const {
    auto it = entries_.find(f.poly());
    return it == entries_.end() ? Partition() : it->second;
}

uint64_t ModuleType::dimension() const {
    uint64_t d = 0;
    for (const auto& [f, lambda] : entries_) d += uint64_t(f.degree()) * lambda.size();
    return d;
}

std::string ModuleType::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [f, lambda] : entries_) {
        if (!first) os << ';';
        first = false;
        os << f.to_pretty_string() << ':' << lambda.to_string();
    }
    return os.str();
}

ModuleType ModuleType::parse(Prime p, const std::string& text) {
    ModuleType out(p);
    std::istringstream is(text);
    std::string item;
    while (std::getline(is, item, ';')) {
        if (item.empty()) continue;
        auto colon = item.find(':');
        if (colon == std::string::npos) {
            throw ParseError("module type entry '" + item + "' lacks ':'");
        }
        IrreduciblePoly f(Poly::parse_pretty(p, item.substr(0, colon)));
        Partition lambda = Partition::parse(item.substr(colon + 1));
        if (!out.at(f).empty()) throw ParseError("duplicate polynomial in module type");
        out.set(f, lambda);
    }
    return out;
}

}  // namespace fpcanon
