#include "mbslab/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace mbslab {
namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

bool valid_key(std::string_view key) {
    if (key.empty() || key.front() == '.' || key.back() == '.') return false;
    if (key.find("..") != std::string_view::npos) return false;
    return std::all_of(key.begin(), key.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' ||
               c == '.';
    });
}

nlohmann::json typed_value(const std::string& raw) {
    nlohmann::json parsed = nlohmann::json::parse(raw, nullptr, /*allow_exceptions=*/false);
    if (parsed.is_discarded()) return raw;
    return parsed;
}

}  // namespace

ScenarioDocument ScenarioDocument::parse(std::string_view text) {
    ScenarioDocument doc;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto eol = text.find('\n');
        const std::string_view line = trim(text.substr(0, eol));
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++line_no;
        if (line.empty() || line.front() == '#') continue;

        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw RequestError("", "line " + std::to_string(line_no) + ": expected key = value");
        const std::string key(trim(line.substr(0, eq)));
        if (!valid_key(key))
            throw RequestError(key, "line " + std::to_string(line_no) + ": invalid key '" + key + "'");
        if (doc.get(key))
            throw RequestError(key, "line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
        doc.entries_.emplace_back(key, std::string(trim(line.substr(eq + 1))));
    }
    return doc;
}

ScenarioDocument ScenarioDocument::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw RequestError("scenario", "cannot read scenario file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse(buffer.str());
}

std::string ScenarioDocument::serialize() const {
    std::string out;
    for (const auto& [key, value] : entries_) out += key + " = " + value + "\n";
    return out;
}

void ScenarioDocument::set(std::string key, std::string value) {
    if (!valid_key(key)) throw RequestError(key, "invalid key '" + key + "'");
    value = std::string(trim(value));
    for (auto& entry : entries_)
        if (entry.first == key) {
            entry.second = std::move(value);
            return;
        }
    entries_.emplace_back(std::move(key), std::move(value));
}

std::optional<std::string> ScenarioDocument::get(std::string_view key) const {
    for (const auto& entry : entries_)
        if (entry.first == key) return entry.second;
    return std::nullopt;
}

nlohmann::json ScenarioDocument::to_json() const {
    nlohmann::json root = nlohmann::json::object();
    for (const auto& [key, value] : entries_) {
        nlohmann::json* node = &root;
        std::string_view rest = key;
        for (auto dot = rest.find('.'); dot != std::string_view::npos; dot = rest.find('.')) {
            const std::string part(rest.substr(0, dot));
            nlohmann::json& child = (*node)[part];
            if (child.is_null()) child = nlohmann::json::object();
            if (!child.is_object()) throw RequestError(key, "key '" + key + "' nests under a scalar");
            node = &child;
            rest = rest.substr(dot + 1);
        }
        const std::string leaf(rest);
        if (node->contains(leaf)) throw RequestError(key, "key '" + key + "' conflicts with a nested key");
        (*node)[leaf] = typed_value(value);
    }
    return root;
}

}  // namespace mbslab
