#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace oppsim {

// Raised for malformed settings text and for semantic validation failures.
// The message always names the offending key or line.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Ordered key/value table parsed from a ONE-style settings file.
// Keys are case-sensitive; a duplicate key overwrites the earlier value
// (last-write-wins) and the overwrite is recorded as a warning.
class SettingsTable {
public:
    struct Entry {
        std::string key;
        std::string value;
        int line = 0; // 1-based source line, 0 for programmatic inserts
    };

    void set(const std::string& key, const std::string& value, int line = 0);
    bool has(const std::string& key) const;
    const Entry* find(const std::string& key) const;

    // Typed getters. The *_or variants return the fallback when the key is
    // absent; the plain variants throw ConfigError naming the key.
    std::string get_string(const std::string& key) const;
    std::string get_string_or(const std::string& key, const std::string& fallback) const;
    double get_number(const std::string& key) const;
    double get_number_or(const std::string& key, double fallback) const;
    // Accepts decimal suffixes: k = 1e3, M = 1e6 ("30M" -> 30000000).
    double get_quantity(const std::string& key) const;
    double get_quantity_or(const std::string& key, double fallback) const;
    // "a, b" pairs such as nodeLocation and speed ranges.
    std::pair<double, double> get_pair(const std::string& key) const;
    // Comma-separated identifier list.
    std::vector<std::string> get_list(const std::string& key) const;

    const std::vector<Entry>& entries() const { return entries_; }
    const std::vector<std::string>& warnings() const { return warnings_; }

    static double parse_quantity(const std::string& text, const std::string& key_for_error);

private:
    std::vector<Entry> entries_;
    std::vector<std::string> warnings_;
};

// Parses line-oriented "key = value" text. '#' lines and blank lines are
// skipped; a non-comment line without '=' is a parse error naming the line.
SettingsTable parse_settings(const std::string& text);

// Reads a file and parses it. I/O failures raise ConfigError.
SettingsTable parse_settings_file(const std::string& path);

} // namespace oppsim
