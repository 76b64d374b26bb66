/**
 * @file config.hpp
 * @brief Line-oriented `key = value` configuration files
 *
 * One assignment per line, `#` starts a comment, blank lines are ignored.
 * Keys may be dotted (`problem.kind`). Later assignments override earlier
 * ones, which is also how `--set key=value` overrides are applied.
 */

#pragma once

#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace expnls {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

}  // namespace detail

class Config {
public:
    /// Parse `key = value` text; `origin` is used in error messages.
    static Config parse(std::istream& in, const std::string& origin = "<config>") {
        Config cfg;
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            std::string_view view = line;
            if (const auto hash = view.find('#'); hash != std::string_view::npos) {
                view = view.substr(0, hash);
            }
            view = detail::trim(view);
            if (view.empty()) {
                continue;
            }
            try {
                cfg.assign(view);
            } catch (const ConfigError& e) {
                throw ConfigError(origin + ":" + std::to_string(lineno) + ": " + e.what());
            }
        }
        return cfg;
    }

    static Config parse_string(const std::string& text, const std::string& origin = "<config>") {
        std::istringstream in(text);
        return parse(in, origin);
    }

    static Config load(const std::string& path) {
        std::ifstream in(path);
        if (!in) {
            throw ConfigError("cannot open config file '" + path + "'");
        }
        return parse(in, path);
    }

    /// Apply one `key=value` assignment.
    void assign(std::string_view assignment) {
        const auto eq = assignment.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("expected 'key = value', got '" + std::string(assignment) + "'");
        }
        const auto key = detail::trim(assignment.substr(0, eq));
        const auto value = detail::trim(assignment.substr(eq + 1));
        if (key.empty()) {
            throw ConfigError("empty key in '" + std::string(assignment) + "'");
        }
        values_[std::string(key)] = std::string(value);
    }

    void set(const std::string& key, const std::string& value) { values_[key] = value; }

    /// Copy every entry of `other` over this one.
    void merge(const Config& other) {
        for (const auto& [k, v] : other.values_) {
            values_[k] = v;
        }
    }

    [[nodiscard]] bool contains(const std::string& key) const { return values_.count(key) != 0; }

    void erase(const std::string& key) { values_.erase(key); }

    [[nodiscard]] std::optional<std::string> get(const std::string& key) const {
        const auto it = values_.find(key);
        if (it == values_.end()) {
            return std::nullopt;
        }
        return it->second;
    }

    [[nodiscard]] std::string get_string(const std::string& key, const std::string& fallback) const {
        return get(key).value_or(fallback);
    }

    [[nodiscard]] std::optional<double> get_double(const std::string& key) const {
        const auto v = get(key);
        if (!v) {
            return std::nullopt;
        }
        double out = 0.0;
        const char* first = v->data();
        const char* last = first + v->size();
        const auto [ptr, ec] = std::from_chars(first, last, out);
        if (ec != std::errc{} || ptr != last) {
            throw ConfigError("key '" + key + "': expected a number, got '" + *v + "'");
        }
        return out;
    }

    [[nodiscard]] double get_double(const std::string& key, double fallback) const {
        return get_double(key).value_or(fallback);
    }

    [[nodiscard]] std::optional<long> get_int(const std::string& key) const {
        const auto v = get(key);
        if (!v) {
            return std::nullopt;
        }
        long out = 0;
        const char* first = v->data();
        const char* last = first + v->size();
        const auto [ptr, ec] = std::from_chars(first, last, out);
        if (ec != std::errc{} || ptr != last) {
            throw ConfigError("key '" + key + "': expected an integer, got '" + *v + "'");
        }
        return out;
    }

    [[nodiscard]] long get_int(const std::string& key, long fallback) const {
        return get_int(key).value_or(fallback);
    }

    [[nodiscard]] bool get_bool(const std::string& key, bool fallback) const {
        const auto v = get(key);
        if (!v) {
            return fallback;
        }
        if (*v == "true" || *v == "1" || *v == "yes" || *v == "on") {
            return true;
        }
        if (*v == "false" || *v == "0" || *v == "no" || *v == "off") {
            return false;
        }
        throw ConfigError("key '" + key + "': expected true/false, got '" + *v + "'");
    }

    /// Throws if any key is not in `known`.
    void require_known(const std::set<std::string, std::less<>>& known) const {
        for (const auto& [k, v] : values_) {
            if (known.find(k) == known.end()) {
                throw ConfigError("unknown config key '" + k + "'");
            }
        }
    }

    [[nodiscard]] const std::map<std::string, std::string>& entries() const noexcept { return values_; }

private:
    std::map<std::string, std::string> values_;
};

}  // namespace expnls
