#include "panelcast/core/keyval.hpp"

#include "panelcast/core/text.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace panelcast {

KeyValueFile KeyValueFile::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open config file: " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

KeyValueFile KeyValueFile::parse(const std::string& content) {
    KeyValueFile kv;
    std::istringstream in(content);
    std::string line;
    std::string section;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (t.front() == '[') {
            if (t.back() != ']') {
                throw std::runtime_error("malformed section header on line " + std::to_string(line_no));
            }
            section = trim(t.substr(1, t.size() - 2));
            continue;
        }
        size_t eq = t.find('=');
        if (eq == std::string::npos) {
            throw std::runtime_error("expected 'key = value' on line " + std::to_string(line_no));
        }
        std::string key = trim(t.substr(0, eq));
        std::string value = trim(t.substr(eq + 1));
        if (key.empty()) {
            throw std::runtime_error("empty key on line " + std::to_string(line_no));
        }
        std::string full = section.empty() ? key : section + "." + key;
        if (kv.by_key_.count(full)) {
            throw std::runtime_error("duplicate key '" + full + "' on line " + std::to_string(line_no));
        }
        kv.entries_.emplace_back(full, value);
        kv.by_key_[full] = value;
    }
    return kv;
}

std::optional<std::string> KeyValueFile::find(const std::string& key) const {
    auto it = by_key_.find(key);
    if (it == by_key_.end()) return std::nullopt;
    return it->second;
}

bool KeyValueFile::has(const std::string& key) const { return by_key_.count(key) > 0; }

std::string KeyValueFile::get_string(const std::string& key) const {
    auto v = find(key);
    if (!v) throw std::runtime_error("missing config key: '" + key + "'");
    return *v;
}

std::string KeyValueFile::get_string(const std::string& key, const std::string& fallback) const {
    auto v = find(key);
    return v ? *v : fallback;
}

double KeyValueFile::get_double(const std::string& key) const {
    return parse_double(get_string(key));
}

double KeyValueFile::get_double(const std::string& key, double fallback) const {
    auto v = find(key);
    return v ? parse_double(*v) : fallback;
}

std::int64_t KeyValueFile::get_int(const std::string& key) const {
    return parse_int64(get_string(key));
}

std::int64_t KeyValueFile::get_int(const std::string& key, std::int64_t fallback) const {
    auto v = find(key);
    return v ? parse_int64(*v) : fallback;
}

bool KeyValueFile::get_bool(const std::string& key, bool fallback) const {
    auto v = find(key);
    if (!v) return fallback;
    std::string s = to_lower(*v);
    if (s == "true" || s == "1" || s == "yes" || s == "on") return true;
    if (s == "false" || s == "0" || s == "no" || s == "off") return false;
    throw std::runtime_error("invalid boolean for '" + key + "': '" + *v + "'");
}

std::vector<std::string> KeyValueFile::get_list(const std::string& key) const {
    auto v = find(key);
    std::vector<std::string> out;
    if (!v || trim(*v).empty()) return out;
    for (auto& part : split(*v, ',')) {
        out.push_back(trim(part));
    }
    return out;
}

std::vector<std::string> KeyValueFile::sections(const std::string& prefix) const {
    std::vector<std::string> names;
    const std::string p = prefix + ".";
    for (const auto& [key, value] : entries_) {
        (void)value;
        if (key.rfind(p, 0) != 0) continue;
        std::string rest = key.substr(p.size());
        size_t dot = rest.find('.');
        if (dot == std::string::npos) continue;
        std::string name = rest.substr(0, dot);
        bool seen = false;
        for (const auto& n : names) {
            if (n == name) { seen = true; break; }
        }
        if (!seen) names.push_back(name);
    }
    return names;
}

std::vector<std::string> KeyValueFile::keys_under(const std::string& prefix) const {
    std::vector<std::string> out;
    const std::string p = prefix + ".";
    for (const auto& [key, value] : entries_) {
        (void)value;
        if (key.rfind(p, 0) == 0) out.push_back(key.substr(p.size()));
    }
    return out;
}

} // namespace panelcast
