#pragma once

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <sstream>
#include <thread>
#include <string>
#include <vector>

#include <boost/crc.hpp>
#include <json.hpp>

#include "partition.hpp"
#include "rational.hpp"
#include "symexpr.hpp"

namespace symcalc {

/// Square matrix indexed by the partitions of one degree, in canonical order.
struct DegreeMatrix {
    int degree = 0;
    std::vector<Partition> index;
    std::map<Partition, int> position;
    std::vector<std::vector<Rational>> rows;

    explicit DegreeMatrix(int n = 0) : degree(n), index(partitions_of(n)) {
        for (int i = 0; i < static_cast<int>(index.size()); ++i) position.emplace(index[i], i);
        rows.assign(index.size(), std::vector<Rational>(index.size()));
    }

    std::size_t dim() const { return index.size(); }
    const Rational& at(const Partition& r, const Partition& c) const {
        return rows[position.at(r)][position.at(c)];
    }
};

inline nlohmann::json matrix_to_json(const DegreeMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : m.rows) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& x : row) r.push_back(x.str());
        rows.push_back(std::move(r));
    }
    return {{"degree", m.degree}, {"rows", rows}};
}

inline DegreeMatrix matrix_from_json(const nlohmann::json& j) {
    DegreeMatrix m(j.at("degree").get<int>());
    const auto& rows = j.at("rows");
    if (rows.size() != m.dim()) throw IOError("matrix dimension mismatch");
    for (std::size_t i = 0; i < m.dim(); ++i) {
        if (rows[i].size() != m.dim()) throw IOError("matrix dimension mismatch");
        for (std::size_t k = 0; k < m.dim(); ++k) m.rows[i][k] = Rational(rows[i][k].get<std::string>());
    }
    return m;
}

/// Exact Gauss-Jordan inverse. Throws DomainError on a singular matrix.
inline DegreeMatrix invert(const DegreeMatrix& m) {
    const std::size_t d = m.dim();
    auto a = m.rows;
    DegreeMatrix inv(m.degree);
    for (std::size_t i = 0; i < d; ++i) inv.rows[i][i] = 1;
    for (std::size_t col = 0; col < d; ++col) {
        std::size_t piv = col;
        while (piv < d && a[piv][col].is_zero()) ++piv;
        if (piv == d) throw DomainError("singular transition matrix");
        std::swap(a[piv], a[col]);
        std::swap(inv.rows[piv], inv.rows[col]);
        Rational f = 1 / a[col][col];
        for (std::size_t k = 0; k < d; ++k) {
            a[col][k] *= f;
            inv.rows[col][k] *= f;
        }
        for (std::size_t r = 0; r < d; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            Rational g = a[r][col];
            for (std::size_t k = 0; k < d; ++k) {
                if (!a[col][k].is_zero()) a[r][k] -= g * a[col][k];
                if (!inv.rows[col][k].is_zero()) inv.rows[r][k] -= g * inv.rows[col][k];
            }
        }
    }
    return inv;
}

namespace detail {

/// Number of maps from the parts of mu to the rows of lam such that the parts
/// sent to row i sum to lam_i; this is the coefficient of m_lam in p_mu.
inline long monomial_count(const std::vector<int>& mu, std::size_t k, std::vector<int>& room) {
    if (k == mu.size()) {
        for (int r : room)
            if (r != 0) return 0;
        return 1;
    }
    long total = 0;
    for (std::size_t i = 0; i < room.size(); ++i) {
        if (room[i] < mu[k]) continue;
        room[i] -= mu[k];
        total += monomial_count(mu, k + 1, room);
        room[i] += mu[k];
    }
    return total;
}

/// Murnaghan-Nakayama on beta-sets: remove rim hooks of sizes mu[k], mu[k+1], ...
inline long mn_beta(std::vector<int>& beta, const std::vector<int>& mu, std::size_t k) {
    if (k == mu.size()) return 1;
    const int r = mu[k];
    long total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        int b = beta[i], target = b - r;
        if (target < 0) continue;
        bool occupied = false;
        int between = 0;
        for (int x : beta) {
            if (x == target) occupied = true;
            if (x > target && x < b) ++between;
        }
        if (occupied) continue;
        beta[i] = target;
        long sub = mn_beta(beta, mu, k + 1);
        beta[i] = b;
        total += (between % 2 ? -sub : sub);
    }
    return total;
}

}  // namespace detail

inline Integer monomial_count(const Partition& mu, const Partition& lam) {
    if (mu.size() != lam.size()) return 0;
    std::vector<int> room(lam.parts());
    return detail::monomial_count(mu.parts(), 0, room);
}

inline Integer mn_character_direct(const Partition& lam, const Partition& mu) {
    if (lam.size() != mu.size()) throw DomainError("mn_character: |lambda| != |mu|");
    std::vector<int> beta;
    const int l = lam.length();
    for (int i = 0; i < l; ++i) beta.push_back(lam[i] + (l - 1 - i));
    return detail::mn_beta(beta, mu.parts(), 0);
}

/// Memo of per-degree transition matrices and character tables, shared by all
/// operations. Readers take a shared lock; a missing entry is computed outside
/// the lock and inserted under an exclusive lock (first writer wins).
///
/// With a cache directory set, entries are also persisted as one JSON file per
/// (operation, degree); a file whose version or checksum does not match is
/// recomputed and rewritten, with a warning.
class TransitionCache {
public:
    static constexpr int format_version = 1;
    using Handle = std::shared_ptr<const DegreeMatrix>;

    static TransitionCache& instance() {
        static TransitionCache cache;
        return cache;
    }

    void set_directory(std::optional<std::filesystem::path> dir) {
        std::unique_lock lock(mutex_);
        dir_.reset();
        if (!dir) return;
        std::error_code ec;
        std::filesystem::create_directories(*dir, ec);
        if (ec || !std::filesystem::is_directory(*dir)) {
            warn("cache directory " + dir->string() + " unusable, using memory only");
            return;
        }
        dir_ = std::move(dir);
    }

    std::optional<std::filesystem::path> directory() const {
        std::shared_lock lock(mutex_);
        return dir_;
    }

    void set_warning_sink(std::function<void(const std::string&)> sink) {
        std::lock_guard lock(sink_mutex_);
        sink_ = std::move(sink);
    }

    /// Drops the in-memory memo (the disk cache is left alone).
    void clear_memory() {
        std::unique_lock lock(mutex_);
        memo_.clear();
    }

    /// chi[lam][mu] = character of lam at class mu.
    Handle characters(int n) {
        return get("characters", n, [n] {
            DegreeMatrix m(n);
            for (std::size_t i = 0; i < m.dim(); ++i)
                for (std::size_t k = 0; k < m.dim(); ++k)
                    m.rows[i][k] = Rational(mn_character_direct(m.index[i], m.index[k]));
            return m;
        });
    }

    /// L[mu][lam] = coefficient of m_lam in p_mu.
    Handle monomial_counts(int n) {
        return get("p-to-m", n, [n] {
            DegreeMatrix m(n);
            for (std::size_t i = 0; i < m.dim(); ++i)
                for (std::size_t k = 0; k < m.dim(); ++k)
                    m.rows[i][k] = Rational(monomial_count(m.index[i], m.index[k]));
            return m;
        });
    }

    /// Row lam = p-expansion of b_lam.
    Handle to_p(Basis b, int n) {
        return get(std::string(1, basis_letter(b)) + "-to-p", n, [this, b, n] { return compute_to_p(b, n); });
    }

    /// Row mu = b-expansion of p_mu.
    Handle from_p(Basis b, int n) {
        if (b == Basis::m) return monomial_counts(n);
        return get(std::string("p-to-") + basis_letter(b), n, [this, b, n] { return compute_from_p(b, n); });
    }

private:
    TransitionCache() = default;

    DegreeMatrix compute_to_p(Basis b, int n) {
        DegreeMatrix m(n);
        switch (b) {
        case Basis::p:
            for (std::size_t i = 0; i < m.dim(); ++i) m.rows[i][i] = 1;
            break;
        case Basis::s: {
            auto chi = characters(n);
            for (std::size_t i = 0; i < m.dim(); ++i)
                for (std::size_t k = 0; k < m.dim(); ++k)
                    m.rows[i][k] = chi->rows[i][k] / Rational(z_value(m.index[k]));
            break;
        }
        case Basis::h:
        case Basis::e: {
            // <h_lam, p_mu> = L[mu][lam]; e differs by the sign of mu.
            auto L = monomial_counts(n);
            for (std::size_t i = 0; i < m.dim(); ++i)
                for (std::size_t k = 0; k < m.dim(); ++k) {
                    const Partition& mu = m.index[k];
                    Rational v = L->rows[k][i] / Rational(z_value(mu));
                    if (b == Basis::e && (n - mu.length()) % 2) v = -v;
                    m.rows[i][k] = v;
                }
            break;
        }
        case Basis::m:
            return invert(*monomial_counts(n));
        }
        return m;
    }

    DegreeMatrix compute_from_p(Basis b, int n) {
        switch (b) {
        case Basis::s: {
            // p_mu = sum_lam chi[lam][mu] s_lam
            auto chi = characters(n);
            DegreeMatrix m(n);
            for (std::size_t i = 0; i < m.dim(); ++i)
                for (std::size_t k = 0; k < m.dim(); ++k) m.rows[i][k] = chi->rows[k][i];
            return m;
        }
        default:
            return invert(*to_p(b, n));
        }
    }

    template <class F>
    Handle get(const std::string& op, int n, F compute) {
        const std::string key = op + "-" + std::to_string(n);
        {
            std::shared_lock lock(mutex_);
            if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        }
        Handle value;
        if (auto loaded = load(key)) value = std::make_shared<const DegreeMatrix>(std::move(*loaded));
        else {
            value = std::make_shared<const DegreeMatrix>(compute());
            store(key, *value);
        }
        std::unique_lock lock(mutex_);
        return memo_.try_emplace(key, value).first->second;
    }

    static std::uint32_t checksum(const std::string& payload) {
        boost::crc_32_type crc;
        crc.process_bytes(payload.data(), payload.size());
        return crc.checksum();
    }

    std::optional<DegreeMatrix> load(const std::string& key) {
        auto dir = directory();
        if (!dir) return std::nullopt;
        auto path = *dir / (key + ".json");
        std::error_code ec;
        if (!std::filesystem::exists(path, ec)) return std::nullopt;
        try {
            std::ifstream in(path);
            std::stringstream buf;
            buf << in.rdbuf();
            auto doc = nlohmann::json::parse(buf.str());
            if (doc.at("version").get<int>() != format_version) throw IOError("version mismatch");
            std::string payload = doc.at("payload").dump();
            if (doc.at("checksum").get<std::uint32_t>() != checksum(payload)) throw IOError("checksum mismatch");
            return matrix_from_json(doc.at("payload"));
        } catch (const std::exception& ex) {
            warn("cache entry " + path.string() + " is corrupt (" + ex.what() + "), recomputing");
            return std::nullopt;
        }
    }

    void store(const std::string& key, const DegreeMatrix& m) {
        auto dir = directory();
        if (!dir) return;
        nlohmann::json payload = matrix_to_json(m);
        nlohmann::json doc = {{"version", format_version},
                              {"op", key},
                              {"checksum", checksum(payload.dump())},
                              {"payload", payload}};
        auto path = *dir / (key + ".json");
        std::ostringstream tmpname;
        tmpname << key << ".json.tmp." << std::hash<std::thread::id>{}(std::this_thread::get_id()) << "."
                << reinterpret_cast<std::uintptr_t>(&m);
        auto tmp = *dir / tmpname.str();
        try {
            {
                std::ofstream out(tmp);
                if (!out) throw IOError("cannot open " + tmp.string());
                out << doc.dump(1) << "\n";
                if (!out) throw IOError("write failed for " + tmp.string());
            }
            std::filesystem::rename(tmp, path);
        } catch (const std::exception& ex) {
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            warn(std::string("cache write failed: ") + ex.what());
        }
    }

    void warn(const std::string& msg) {
        std::lock_guard lock(sink_mutex_);
        if (sink_) sink_(msg);
        else std::cerr << "symcalc: warning: " << msg << "\n";
    }

    mutable std::shared_mutex mutex_;
    std::map<std::string, Handle> memo_;
    std::optional<std::filesystem::path> dir_;
    std::mutex sink_mutex_;
    std::function<void(const std::string&)> sink_;
};

inline TransitionCache& cache() { return TransitionCache::instance(); }

}  // namespace symcalc
