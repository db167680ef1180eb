#include "output.hpp"

#include <cmath>
#include <cstdio>

#include "halfstep/numfmt.hpp"

namespace halfstep::cli {

std::string json_number(double v) {
    if (!std::isfinite(v)) return "null";
    return shortest(v);
}

std::string json_string(std::string_view s) {
    std::string out = "\"";
    for (const char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", static_cast<unsigned>(c));
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    out += '"';
    return out;
}

std::string json_array(const std::vector<double>& xs) {
    std::string out = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ',';
        out += json_number(xs[i]);
    }
    return out + "]";
}

std::string json_array(const std::vector<std::string>& xs) {
    std::string out = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ',';
        out += json_string(xs[i]);
    }
    return out + "]";
}

JsonObject& JsonObject::number(std::string_view key, double v) { return raw(key, json_number(v)); }

JsonObject& JsonObject::integer(std::string_view key, std::size_t v) { return raw(key, std::to_string(v)); }

JsonObject& JsonObject::string(std::string_view key, std::string_view v) { return raw(key, json_string(v)); }

JsonObject& JsonObject::boolean(std::string_view key, bool v) { return raw(key, v ? "true" : "false"); }

JsonObject& JsonObject::raw(std::string_view key, std::string json) {
    fields_.emplace_back(std::string(key), std::move(json));
    return *this;
}

std::string JsonObject::str() const {
    std::string out = "{";
    for (std::size_t i = 0; i < fields_.size(); ++i) {
        if (i) out += ',';
        out += json_string(fields_[i].first);
        out += ':';
        out += fields_[i].second;
    }
    return out + "}";
}

std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (const char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace halfstep::cli
