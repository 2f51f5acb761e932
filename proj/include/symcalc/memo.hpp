#pragma once

#include <map>
#include <mutex>
#include <shared_mutex>

namespace symcalc {

/// Thread-safe lazily filled map. Values are computed outside the lock, so a
/// computation may itself consult the memo; concurrent computations of the
/// same key both run and the first insertion wins.
template <class K, class V>
class Memo {
public:
    template <class F>
    V get(const K& key, F compute) {
        {
            std::shared_lock lock(mutex_);
            if (auto it = map_.find(key); it != map_.end()) return it->second;
        }
        V value = compute();
        std::unique_lock lock(mutex_);
        return map_.try_emplace(key, std::move(value)).first->second;
    }

    void clear() {
        std::unique_lock lock(mutex_);
        map_.clear();
    }

private:
    std::shared_mutex mutex_;
    std::map<K, V> map_;
};

}  // namespace symcalc
