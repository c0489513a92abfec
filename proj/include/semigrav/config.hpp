#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "semigrav/units.hpp"

namespace semigrav {

/// Flat key = value document. '#' starts a comment; blank lines are ignored;
/// keys are case-sensitive and may appear once.
class ConfigDocument {
public:
    static ConfigDocument parse(std::istream& in, const std::string& source = "<input>");
    static ConfigDocument load(const std::filesystem::path& path);

    void set(const std::string& key, const std::string& value) { entries_[key] = value; }
    bool has(const std::string& key) const { return entries_.count(key) != 0; }
    std::optional<std::string> get(const std::string& key) const;
    const std::map<std::string, std::string>& entries() const { return entries_; }

    std::string text(const std::string& key, const std::string& fallback) const;
    double quantity(const std::string& key, Quantity q, double fallback) const;
    std::optional<double> optional_quantity(const std::string& key, Quantity q) const;
    std::uint64_t integer(const std::string& key, std::uint64_t fallback) const;

    /// ConfigError naming the first key not in `known`.
    void require_known(const std::set<std::string>& known) const;

    void write(std::ostream& os) const;

private:
    std::map<std::string, std::string> entries_;
};

}  // namespace semigrav
