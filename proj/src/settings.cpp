#include "oppsim/settings.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace oppsim {

namespace {

std::string trim(const std::string& s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

double parse_double(const std::string& text, const std::string& key) {
    const std::string t = trim(text);
    if (t.empty()) throw ConfigError("key '" + key + "': empty numeric value");
    char* end = nullptr;
    const double v = std::strtod(t.c_str(), &end);
    if (end != t.c_str() + t.size() || !std::isfinite(v))
        throw ConfigError("key '" + key + "': cannot parse number from '" + t + "'");
    return v;
}

} // namespace

void SettingsTable::set(const std::string& key, const std::string& value, int line) {
    for (auto& e : entries_) {
        if (e.key == key) {
            warnings_.push_back("duplicate key '" + key + "' (line " + std::to_string(line) +
                                ") overrides earlier value from line " + std::to_string(e.line));
            e.value = value;
            e.line = line;
            return;
        }
    }
    entries_.push_back({key, value, line});
}

bool SettingsTable::has(const std::string& key) const { return find(key) != nullptr; }

const SettingsTable::Entry* SettingsTable::find(const std::string& key) const {
    for (const auto& e : entries_)
        if (e.key == key) return &e;
    return nullptr;
}

std::string SettingsTable::get_string(const std::string& key) const {
    const Entry* e = find(key);
    if (!e) throw ConfigError("missing required key '" + key + "'");
    return e->value;
}

std::string SettingsTable::get_string_or(const std::string& key, const std::string& fallback) const {
    const Entry* e = find(key);
    return e ? e->value : fallback;
}

double SettingsTable::get_number(const std::string& key) const {
    return parse_double(get_string(key), key);
}

double SettingsTable::get_number_or(const std::string& key, double fallback) const {
    const Entry* e = find(key);
    return e ? parse_double(e->value, key) : fallback;
}

double SettingsTable::parse_quantity(const std::string& text, const std::string& key) {
    std::string t = trim(text);
    double scale = 1.0;
    if (!t.empty() && (t.back() == 'k' || t.back() == 'M')) {
        scale = t.back() == 'k' ? 1e3 : 1e6;
        t.pop_back();
    }
    return parse_double(t, key) * scale;
}

double SettingsTable::get_quantity(const std::string& key) const {
    return parse_quantity(get_string(key), key);
}

double SettingsTable::get_quantity_or(const std::string& key, double fallback) const {
    const Entry* e = find(key);
    return e ? parse_quantity(e->value, key) : fallback;
}

std::pair<double, double> SettingsTable::get_pair(const std::string& key) const {
    const std::string v = get_string(key);
    const size_t comma = v.find(',');
    if (comma == std::string::npos)
        throw ConfigError("key '" + key + "': expected 'a, b' pair, got '" + v + "'");
    return {parse_double(v.substr(0, comma), key), parse_double(v.substr(comma + 1), key)};
}

std::vector<std::string> SettingsTable::get_list(const std::string& key) const {
    const std::string v = get_string(key);
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(v);
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    if (out.empty()) throw ConfigError("key '" + key + "': empty list");
    return out;
}

SettingsTable parse_settings(const std::string& text) {
    SettingsTable table;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw ConfigError("settings line " + std::to_string(lineno) + ": no '=' in '" + t + "'");
        const std::string key = trim(t.substr(0, eq));
        const std::string value = trim(t.substr(eq + 1));
        if (key.empty())
            throw ConfigError("settings line " + std::to_string(lineno) + ": empty key");
        table.set(key, value, lineno);
    }
    return table;
}

SettingsTable parse_settings_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open settings file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_settings(buf.str());
}

} // namespace oppsim
