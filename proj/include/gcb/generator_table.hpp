#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace gcb {

/// One generator of a graded commutative polynomial algebra.
struct Generator {
    std::string name;
    int degree = 0;

    bool odd() const { return degree % 2 != 0; }
    bool operator==(const Generator& o) const { return name == o.name && degree == o.degree; }
};

/// Ordered list of named generators with degrees. The list order is the
/// canonical monomial order; odd-degree generators square to zero.
class GeneratorTable {
public:
    explicit GeneratorTable(std::vector<Generator> gens) : gens_(std::move(gens)) {
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            const auto& g = gens_[i];
            if (g.degree < 0) throw std::invalid_argument("generator degree must be >= 0: " + g.name);
            if (!index_.emplace(g.name, i).second)
                throw std::invalid_argument("duplicate generator name: " + g.name);
        }
    }

    std::size_t size() const { return gens_.size(); }
    const Generator& at(std::size_t i) const { return gens_.at(i); }
    int degree(std::size_t i) const { return gens_.at(i).degree; }
    bool odd(std::size_t i) const { return gens_.at(i).odd(); }
    const std::string& name(std::size_t i) const { return gens_.at(i).name; }

    std::size_t index(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) throw std::invalid_argument("unknown generator: " + name);
        return it->second;
    }
    bool has(const std::string& name) const { return index_.count(name) != 0; }

    bool operator==(const GeneratorTable& o) const { return gens_ == o.gens_; }

    /// True when this table's generators form a prefix of `larger`'s.
    bool prefix_of(const GeneratorTable& larger) const {
        if (size() > larger.size()) return false;
        for (std::size_t i = 0; i < size(); ++i)
            if (!(gens_[i] == larger.gens_[i])) return false;
        return true;
    }

private:
    std::vector<Generator> gens_;
    std::map<std::string, std::size_t> index_;
};

using TablePtr = std::shared_ptr<const GeneratorTable>;

inline TablePtr make_table(std::vector<Generator> gens) {
    return std::make_shared<const GeneratorTable>(std::move(gens));
}

inline bool same_table(const TablePtr& a, const TablePtr& b) {
    return a == b || (a && b && *a == *b);
}

} // namespace gcb
