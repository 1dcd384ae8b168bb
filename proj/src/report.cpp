#include "cycleguess/report.hpp"

#include <cstdio>

namespace cycleguess {

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

Doc::Doc(std::string_view kind) {
    kv("schema", "cycleguess/v1");
    kv("kind", kind);
}

void Doc::kv(std::string_view key, std::string_view value) {
    body.append(key);
    body.append(": ");
    body.append(value);
    body.push_back('\n');
}

void Doc::kv(std::string_view key, const std::string& value) {
    kv(key, std::string_view(value));
}

void Doc::kv(std::string_view key, const char* value) {
    kv(key, std::string_view(value));
}

void Doc::kv(std::string_view key, double value) {
    kv(key, std::string_view(fmt_double(value)));
}

void Doc::kv(std::string_view key, std::uint64_t value) {
    kv(key, std::string_view(std::to_string(value)));
}

void Doc::kv(std::string_view key, int value) {
    kv(key, std::string_view(std::to_string(value)));
}

void Doc::kv(std::string_view key, bool value) {
    kv(key, std::string_view(value ? "true" : "false"));
}

} // namespace cycleguess
