#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace cycleguess {

// All floats in structured output are printed with 12 significant digits.
std::string fmt_double(double v);

// Ordered key/value document, one "key: value" line each. Every
// structured output starts with the schema header, so identical inputs
// serialize byte-identically.
struct Doc {
    std::string body;

    explicit Doc(std::string_view kind);

    void kv(std::string_view key, std::string_view value);
    void kv(std::string_view key, const std::string& value);
    void kv(std::string_view key, const char* value);
    void kv(std::string_view key, double value);
    void kv(std::string_view key, std::uint64_t value);
    void kv(std::string_view key, int value);
    void kv(std::string_view key, bool value);

    const std::string& str() const { return body; }
};

} // namespace cycleguess
