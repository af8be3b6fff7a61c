#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <variant>

namespace partot {

/// Opaque vertex / element label: an integer or a string. Integers sort
/// numerically and before all strings.
class Label {
public:
    Label() = default;
    Label(std::int64_t v) : value_(v) {}
    Label(int v) : value_(std::int64_t{v}) {}
    Label(std::string v) : value_(std::move(v)) {}
    Label(const char* v) : value_(std::string(v)) {}

    bool is_integer() const { return std::holds_alternative<std::int64_t>(value_); }
    std::int64_t as_integer() const { return std::get<std::int64_t>(value_); }
    const std::string& as_string() const { return std::get<std::string>(value_); }

    /// Integers print as digits, strings verbatim.
    std::string to_string() const;

    friend auto operator<=>(const Label&, const Label&) = default;
    friend bool operator==(const Label&, const Label&) = default;

private:
    std::variant<std::int64_t, std::string> value_;
};

} // namespace partot
