#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>

#include "tropdesc/invariant_key.hpp"
#include "tropdesc/rational.hpp"

namespace tropdesc {

/// Memo table from canonical key strings to exact values, persistable as
/// {"version":1,"entries":{"<key>":"<rational>"}}.
///
/// get_or_compute runs the computation outside the lock, so recursive
/// computations may re-enter the store. Two threads racing on the same key may
/// both compute; the first stored value wins and both results are identical
/// because every computation is deterministic.
class CacheStore {
public:
    static constexpr int kVersion = 1;

    CacheStore() = default;
    CacheStore(const CacheStore& other);
    CacheStore& operator=(const CacheStore& other);

    std::optional<Rational> get(const std::string& key) const;
    void put(const std::string& key, const Rational& value);

    Rational get_or_compute(const InvariantKey& key, const std::function<Rational()>& compute);
    Rational get_or_compute(const std::string& key, const std::function<Rational()>& compute);

    std::size_t size() const;
    void clear();

    /// Entries in key order.
    std::map<std::string, Rational> entries() const;

    std::string to_json() const;
    /// Parses a cache document. Throws CacheError with the byte position of the problem.
    static CacheStore from_json(std::string_view text);

    /// Merges the entries of `path` into this store. A missing file is not an error.
    void load(const std::filesystem::path& path);
    void save(const std::filesystem::path& path) const;

private:
    mutable std::mutex mutex_;
    std::unordered_map<std::string, Rational> entries_;
};

}  // namespace tropdesc
