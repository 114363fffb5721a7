#include "tropdesc/cache_store.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

#include "tropdesc/errors.hpp"

namespace tropdesc {

CacheStore::CacheStore(const CacheStore& other) {
    std::lock_guard lock(other.mutex_);
    entries_ = other.entries_;
}

CacheStore& CacheStore::operator=(const CacheStore& other) {
    if (this == &other) return *this;
    std::scoped_lock lock(mutex_, other.mutex_);
    entries_ = other.entries_;
    return *this;
}

std::optional<Rational> CacheStore::get(const std::string& key) const {
    std::lock_guard lock(mutex_);
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void CacheStore::put(const std::string& key, const Rational& value) {
    std::lock_guard lock(mutex_);
    entries_.insert_or_assign(key, value);
}

Rational CacheStore::get_or_compute(const InvariantKey& key, const std::function<Rational()>& compute) {
    return get_or_compute(key.str(), compute);
}

Rational CacheStore::get_or_compute(const std::string& key, const std::function<Rational()>& compute) {
    if (auto hit = get(key)) return *hit;
    Rational value = compute();
    std::lock_guard lock(mutex_);
    return entries_.try_emplace(key, value).first->second;
}

std::size_t CacheStore::size() const {
    std::lock_guard lock(mutex_);
    return entries_.size();
}

void CacheStore::clear() {
    std::lock_guard lock(mutex_);
    entries_.clear();
}

std::map<std::string, Rational> CacheStore::entries() const {
    std::lock_guard lock(mutex_);
    return {entries_.begin(), entries_.end()};
}

std::string CacheStore::to_json() const {
    nlohmann::ordered_json doc;
    doc["version"] = kVersion;
    auto& out = doc["entries"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : entries()) out[k] = v.to_string();
    return doc.dump(1) + "\n";
}

CacheStore CacheStore::from_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw CacheError(std::string("cache file is not valid JSON: ") + e.what(), e.byte);
    }
    if (!doc.is_object() || !doc.contains("version") || !doc.contains("entries"))
        throw CacheError("cache file lacks 'version' or 'entries'", 0);
    const auto& version = doc["version"];
    if (!version.is_number_integer() || version.get<int>() != kVersion) {
        const auto pos = text.find("\"version\"");
        throw CacheError("unsupported cache version " + version.dump(), pos == std::string_view::npos ? 0 : pos);
    }
    const auto& entries = doc["entries"];
    if (!entries.is_object()) throw CacheError("'entries' must be an object", text.find("\"entries\""));

    CacheStore store;
    for (const auto& [k, v] : entries.items()) {
        const auto quoted = nlohmann::json(k).dump();
        const auto at = text.find(quoted);
        const std::size_t pos = at == std::string_view::npos ? 0 : at;
        if (!v.is_string()) throw CacheError("value of '" + k + "' is not a string", pos);
        try {
            const auto key = InvariantKey::parse(k);
            if (key.str() != k) throw ParseError("key '" + k + "' is not canonical (expected '" + key.str() + "')");
            store.entries_.insert_or_assign(k, Rational::parse(v.get<std::string>()));
        } catch (const ParseError& e) {
            throw CacheError(std::string("bad cache entry: ") + e.what(), pos);
        }
    }
    return store;
}

void CacheStore::load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return;
    std::stringstream buffer;
    buffer << in.rdbuf();
    CacheStore loaded = from_json(buffer.str());
    std::lock_guard lock(mutex_);
    for (auto& [k, v] : loaded.entries_) entries_.insert_or_assign(k, v);
}

void CacheStore::save(const std::filesystem::path& path) const {
    const auto tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot write cache file " + tmp);
        out << to_json();
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace tropdesc
