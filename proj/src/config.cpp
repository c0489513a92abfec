#include "semigrav/config.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

#include "semigrav/errors.hpp"

namespace semigrav {

namespace {
std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}
}  // namespace

ConfigDocument ConfigDocument::parse(std::istream& in, const std::string& source) {
    ConfigDocument doc;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        const std::string where = source + ":" + std::to_string(lineno);
        if (eq == std::string::npos) throw ConfigError(where + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError(where + ": empty key");
        if (doc.has(key)) throw ConfigError(where + ": duplicate key '" + key + "'");
        doc.entries_[key] = value;
    }
    return doc;
}

ConfigDocument ConfigDocument::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file " + path.string());
    return parse(in, path.string());
}

std::optional<std::string> ConfigDocument::get(const std::string& key) const {
    const auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

std::string ConfigDocument::text(const std::string& key, const std::string& fallback) const {
    return get(key).value_or(fallback);
}

double ConfigDocument::quantity(const std::string& key, Quantity q, double fallback) const {
    return optional_quantity(key, q).value_or(fallback);
}

std::optional<double> ConfigDocument::optional_quantity(const std::string& key, Quantity q) const {
    const auto v = get(key);
    if (!v) return std::nullopt;
    try {
        return parse_quantity(*v, q);
    } catch (const ConfigError& e) {
        throw ConfigError("key '" + key + "': " + e.what());
    }
}

std::uint64_t ConfigDocument::integer(const std::string& key, std::uint64_t fallback) const {
    const auto v = get(key);
    if (!v) return fallback;
    std::uint64_t out = 0;
    const auto [ptr, ec] = std::from_chars(v->data(), v->data() + v->size(), out);
    if (ec == std::errc() && ptr == v->data() + v->size()) return out;
    // Accept integral values written in floating-point form, e.g. 1e5.
    double d = 0.0;
    const auto [p2, e2] = std::from_chars(v->data(), v->data() + v->size(), d);
    if (e2 == std::errc() && p2 == v->data() + v->size() && d >= 0.0 && d < 1.8e19 &&
        d == static_cast<double>(static_cast<std::uint64_t>(d))) {
        return static_cast<std::uint64_t>(d);
    }
    throw ConfigError("key '" + key + "': expected a non-negative integer, got '" + *v + "'");
}

void ConfigDocument::require_known(const std::set<std::string>& known) const {
    for (const auto& [k, v] : entries_) {
        if (!known.count(k)) throw ConfigError("unknown config key '" + k + "'");
    }
}

void ConfigDocument::write(std::ostream& os) const {
    for (const auto& [k, v] : entries_) os << k << " = " << v << '\n';
}

}  // namespace semigrav
