#pragma once

#include <string>
#include <utility>
#include <vector>

namespace glcq {

/// Finite box of (m, n) exponents truncating the Z^2-indexed families.
/// An inverted range (lo > hi) denotes the empty window.
struct ExponentWindow {
    long long m_lo = 0, m_hi = -1;
    long long n_lo = 0, n_hi = -1;

    static ExponentWindow box(long long lo, long long hi) { return {lo, hi, lo, hi}; }

    static ExponentWindow empty() { return {}; }

    bool is_empty() const { return m_lo > m_hi || n_lo > n_hi; }

    bool contains(long long m, long long n) const {
        return m >= m_lo && m <= m_hi && n >= n_lo && n <= n_hi;
    }

    std::size_t count() const {
        if (is_empty()) return 0;
        return static_cast<std::size_t>(m_hi - m_lo + 1) * static_cast<std::size_t>(n_hi - n_lo + 1);
    }

    /// Grid points in lexicographic (m, n) order.
    std::vector<std::pair<long long, long long>> points() const {
        std::vector<std::pair<long long, long long>> out;
        if (is_empty()) return out;
        out.reserve(count());
        for (long long m = m_lo; m <= m_hi; ++m)
            for (long long n = n_lo; n <= n_hi; ++n) out.emplace_back(m, n);
        return out;
    }

    ExponentWindow dilated(long long k) const {
        if (is_empty()) return *this;
        return {m_lo - k, m_hi + k, n_lo - k, n_hi + k};
    }

    std::string to_string() const {
        if (is_empty()) return "empty";
        return std::to_string(m_lo) + ":" + std::to_string(m_hi) + "," + std::to_string(n_lo) +
               ":" + std::to_string(n_hi);
    }

    bool operator==(const ExponentWindow&) const = default;
};

} // namespace glcq
