#pragma once

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "rational.hpp"

namespace symcalc {

/// Integer vector used as a Schur index before straightening; entries may be
/// negative or unsorted.
using IntVector = std::vector<int>;

/// A weakly decreasing sequence of positive integers.
///
/// Partitions are totally ordered by size first and then in reverse
/// lexicographic order, so that iterating a std::map keyed by partitions
/// visits [], [1], [2], [1,1], [3], [2,1], [1,1,1], ...
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0) throw DomainError("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw DomainError("partition parts must be weakly decreasing");
        }
        size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
    }

    /// Sorts the entries and drops zeros; negative entries are rejected.
    static Partition from_unsorted(std::vector<int> parts) {
        std::erase(parts, 0);
        std::sort(parts.begin(), parts.end(), std::greater<>());
        return Partition(std::move(parts));
    }

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// i-th part (0-based), zero past the end.
    int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    int multiplicity(int part) const {
        return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
    }

    /// m[i] = multiplicity of part i, for i = 0..largest part (m[0] unused).
    std::vector<int> multiplicities() const {
        std::vector<int> m(parts_.empty() ? 1 : parts_.front() + 1, 0);
        for (int p : parts_) ++m[p];
        return m;
    }

    auto begin() const { return parts_.begin(); }
    auto end() const { return parts_.end(); }

    friend bool operator==(const Partition&, const Partition&) = default;

    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        if (auto c = a.size_ <=> b.size_; c != 0) return c;
        // reverse lexicographic: larger sequence first
        return std::lexicographical_compare_three_way(b.parts_.begin(), b.parts_.end(),
                                                      a.parts_.begin(), a.parts_.end());
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

inline std::string to_string(const Partition& p) {
    std::string s = "[";
    for (int i = 0; i < p.length(); ++i) {
        if (i) s += ",";
        s += std::to_string(p[i]);
    }
    return s + "]";
}

/// Comma separated parts, e.g. "2,1"; the empty string gives the empty partition.
inline Partition parse_partition(const std::string& text) {
    std::vector<int> parts;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) return;
        try {
            parts.push_back(std::stoi(cur));
        } catch (const std::exception&) {
            throw DomainError("bad partition part '" + cur + "'");
        }
        cur.clear();
    };
    for (char c : text) {
        if (c == ',' || c == ' ') flush();
        else if (c != '[' && c != ']') cur += c;
    }
    flush();
    return Partition(std::move(parts));
}

inline void to_json(nlohmann::json& j, const Partition& p) { j = p.parts(); }
inline void from_json(const nlohmann::json& j, Partition& p) {
    p = Partition(j.get<std::vector<int>>());
}

/// prod_i i^{m_i} m_i!, the order of the centralizer of a permutation of cycle type mu.
inline Integer z_value(const Partition& mu) {
    Integer z = 1;
    auto m = mu.multiplicities();
    for (std::size_t i = 1; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        Integer ipow = 1;
        for (int k = 0; k < m[i]; ++k) ipow *= static_cast<long>(i);
        z *= ipow * factorial(m[i]);
    }
    return z;
}

inline Partition conjugate(const Partition& lam) {
    std::vector<int> out(lam.empty() ? 0 : lam[0], 0);
    for (int p : lam)
        for (int j = 0; j < p; ++j) ++out[j];
    return Partition(std::move(out));
}

/// Cycle type of tau^k when tau has cycle type mu.
inline Partition power_cycle_type(const Partition& mu, int k) {
    if (k < 1) throw DomainError("power_cycle_type needs k >= 1");
    std::vector<int> out;
    for (int d : mu) {
        int g = std::gcd(d, k);
        out.insert(out.end(), g, d / g);
    }
    return Partition::from_unsorted(std::move(out));
}

/// Partitions of n with all parts <= max_part, in reverse lexicographic order.
inline void partitions_with_max(int n, int max_part, std::vector<int>& prefix,
                                std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int k = std::min(n, max_part); k >= 1; --k) {
        prefix.push_back(k);
        partitions_with_max(n - k, k, prefix, out);
        prefix.pop_back();
    }
}

/// All partitions of n in reverse lexicographic order: [n], [n-1,1], ..., [1^n].
inline std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw DomainError("partitions_of needs n >= 0");
    std::vector<Partition> out;
    std::vector<int> prefix;
    partitions_with_max(n, n, prefix, out);
    return out;
}

/// Partitions of every size 0..n, in the canonical order.
inline std::vector<Partition> partitions_up_to(int n) {
    std::vector<Partition> out;
    for (int k = 0; k <= n; ++k) {
        auto ps = partitions_of(k);
        out.insert(out.end(), ps.begin(), ps.end());
    }
    return out;
}

/// Multiset union of parts.
inline Partition merge(const Partition& a, const Partition& b) {
    std::vector<int> parts(a.parts());
    parts.insert(parts.end(), b.begin(), b.end());
    return Partition::from_unsorted(std::move(parts));
}

/// Every part multiplied by k (the index of p_k o p_mu).
inline Partition scale_parts(const Partition& mu, int k) {
    std::vector<int> parts(mu.parts());
    for (int& p : parts) p *= k;
    return Partition(std::move(parts));
}

/// Young diagram containment mu subset of lam.
inline bool contains(const Partition& lam, const Partition& mu) {
    if (mu.length() > lam.length()) return false;
    for (int i = 0; i < mu.length(); ++i)
        if (mu[i] > lam[i]) return false;
    return true;
}

/// lam/alpha is a horizontal strip: alpha subset of lam and at most one box per column.
inline bool is_horizontal_strip(const Partition& lam, const Partition& alpha) {
    if (!contains(lam, alpha)) return false;
    for (int i = 0; i < lam.length(); ++i)
        if (lam[i + 1] > alpha[i]) return false;
    return true;
}

}  // namespace symcalc
