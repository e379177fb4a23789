#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "gcb/poly.hpp"

namespace gcb {

/// Deterministic random source. Bounded draws avoid std::uniform_int_distribution
/// so streams are reproducible for a given seed independent of the standard
/// library implementation.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    /// Uniform-ish integer in [lo, hi], inclusive.
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        if (hi <= lo) return lo;
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(next() % span);
    }

    bool chance(int num, int den) { return range(1, den) <= num; }

    Rational rational(int max_num = 9, int max_den = 3) {
        return Rational(Integer(range(-max_num, max_num)), Integer(range(1, max_den)));
    }

    Rational nonzero_rational(int max_num = 9, int max_den = 3) {
        Integer num(range(1, max_num));
        if (chance(1, 2)) num = -num;
        return Rational(num, Integer(range(1, max_den)));
    }

private:
    std::mt19937_64 eng_;
};

/// Random monomial of the requested total degree, or nullopt when the degree
/// cannot be assembled from the table. Degree-0 generators get exponents up
/// to max_deg0_exp.
inline std::optional<Monomial> random_monomial(const TablePtr& table, int degree, Rng& rng,
                                               int max_deg0_exp = 2) {
    const auto& t = *table;
    const std::size_t n = t.size();
    std::vector<std::size_t> positive;
    for (std::size_t i = 0; i < n; ++i)
        if (t.degree(i) > 0) positive.push_back(i);

    for (int attempt = 0; attempt < 400; ++attempt) {
        Monomial m(n);
        int rem = degree;
        int guard = 0;
        while (rem > 0 && guard++ < 64) {
            std::vector<std::size_t> usable;
            for (auto i : positive)
                if (t.degree(i) <= rem && (!t.odd(i) || m.exponent(i) == 0)) usable.push_back(i);
            if (usable.empty()) break;
            const auto i = usable[static_cast<std::size_t>(rng.range(0, static_cast<std::int64_t>(usable.size()) - 1))];
            m.set_exponent(i, m.exponent(i) + 1);
            rem -= t.degree(i);
        }
        if (rem != 0) continue;
        for (std::size_t i = 0; i < n; ++i)
            if (t.degree(i) == 0 && rng.chance(1, 2))
                m.set_exponent(i, static_cast<std::uint32_t>(rng.range(1, max_deg0_exp)));
        return m;
    }
    return std::nullopt;
}

/// Random homogeneous polynomial; returns zero if the degree is unreachable.
inline GradedPoly random_homogeneous(const TablePtr& table, int degree, int n_terms, Rng& rng,
                                     int max_deg0_exp = 2) {
    GradedPoly p(table);
    for (int i = 0; i < n_terms; ++i) {
        auto m = random_monomial(table, degree, rng, max_deg0_exp);
        if (!m) break;
        p += GradedPoly::term(table, *m, rng.nonzero_rational());
    }
    return p;
}

} // namespace gcb
