#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace halfstep::cli {

enum class OutputFormat { table, json, csv };

/// Number as JSON: shortest round-trip text, `null` when non-finite.
std::string json_number(double v);
std::string json_string(std::string_view s);
std::string json_array(const std::vector<double>& xs);
std::string json_array(const std::vector<std::string>& xs);

/// Object whose keys serialize in insertion order, so output is byte-stable.
class JsonObject {
public:
    JsonObject& number(std::string_view key, double v);
    JsonObject& integer(std::string_view key, std::size_t v);
    JsonObject& string(std::string_view key, std::string_view v);
    JsonObject& boolean(std::string_view key, bool v);
    JsonObject& raw(std::string_view key, std::string json);

    std::string str() const;

private:
    std::vector<std::pair<std::string, std::string>> fields_;
};

/// CSV field, quoted when it contains a separator, quote or newline.
std::string csv_field(std::string_view s);

}  // namespace halfstep::cli
