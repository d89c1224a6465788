#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

namespace mbslab {

// Malformed request: bad syntax, a missing field, or a value of the wrong
// type. Distinct from DomainError, which covers well-formed but invalid values.
class RequestError : public std::runtime_error {
public:
    RequestError(std::string field, const std::string& message)
        : std::runtime_error(message), field_(std::move(field)) {}
    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

// Human-readable scenario file: one `key = value` per line, `#` starts a
// comment line. Dotted keys address nested fields (`old_terms.notional`).
// Values that parse as JSON (numbers, true/false, [lists]) keep that type;
// anything else is a string.
class ScenarioDocument {
public:
    using Entry = std::pair<std::string, std::string>;

    static ScenarioDocument parse(std::string_view text);
    static ScenarioDocument load(const std::string& path);

    std::string serialize() const;

    // Replaces an existing key in place or appends a new one.
    void set(std::string key, std::string value);
    std::optional<std::string> get(std::string_view key) const;
    const std::vector<Entry>& entries() const noexcept { return entries_; }

    // Nested JSON object equivalent of the document.
    nlohmann::json to_json() const;

    friend bool operator==(const ScenarioDocument&, const ScenarioDocument&) = default;

private:
    std::vector<Entry> entries_;
};

}  // namespace mbslab
