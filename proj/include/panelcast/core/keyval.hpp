#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace panelcast {

/// Hierarchical key-value text format:
///
///   # comment
///   top_key = value
///   [section.subsection]
///   key = value            # stored as "section.subsection.key"
///
/// Keys are flattened with '.' separators. Section order is preserved for
/// enumeration (e.g. to keep the configured model order).
class KeyValueFile {
public:
    static KeyValueFile load(const std::string& path);
    static KeyValueFile parse(const std::string& content);

    bool has(const std::string& key) const;

    std::string get_string(const std::string& key) const;
    std::string get_string(const std::string& key, const std::string& fallback) const;
    double get_double(const std::string& key) const;
    double get_double(const std::string& key, double fallback) const;
    std::int64_t get_int(const std::string& key) const;
    std::int64_t get_int(const std::string& key, std::int64_t fallback) const;
    bool get_bool(const std::string& key, bool fallback) const;

    /// Comma-separated list value; empty value -> empty list.
    std::vector<std::string> get_list(const std::string& key) const;

    /// Immediate child section names under `prefix`, in file order.
    /// sections("model") on [model.naive] [model.tft] -> {"naive", "tft"}.
    std::vector<std::string> sections(const std::string& prefix) const;

    /// All keys under "prefix." (suffix only), in file order.
    std::vector<std::string> keys_under(const std::string& prefix) const;

    const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }

private:
    std::optional<std::string> find(const std::string& key) const;

    std::vector<std::pair<std::string, std::string>> entries_; // file order
    std::map<std::string, std::string> by_key_;
};

} // namespace panelcast
