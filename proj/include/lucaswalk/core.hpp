#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace lucaswalk {

// Exact integers everywhere; sequence values outgrow 64 bits within a few dozen indices.
using Int = boost::multiprecision::cpp_int;
using Index = std::int64_t;

inline constexpr Index kDefaultMaxIndex = 1'000'000;
inline constexpr Index kDefaultScanMargin = 50;

// Process-wide ceiling on sequence indices. Every operation that walks or
// searches the sequence refuses to look past it, so hostile or runaway inputs
// fail fast instead of allocating unbounded bigints.
inline Index& max_index() {
    static Index ceiling = kDefaultMaxIndex;
    return ceiling;
}

inline void set_max_index(Index ceiling) {
    if (ceiling < 16) throw std::domain_error("max_index: ceiling must be at least 16");
    max_index() = ceiling;
}

// Default width of the exhaustive no-step scan above the certificate threshold.
inline Index& default_scan_margin() {
    static Index margin = kDefaultScanMargin;
    return margin;
}

inline void set_default_scan_margin(Index margin) {
    if (margin < 0) throw std::domain_error("scan_margin: must be nonnegative");
    default_scan_margin() = margin;
}

struct resource_limit_error : std::runtime_error {
    explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

struct certification_error : std::runtime_error {
    certification_error(std::string cond, const std::string& what)
        : std::runtime_error(what), condition(std::move(cond)) {}
    std::string condition;
};

inline Int pow_int(const Int& base, Index exp) {
    if (exp < 0) throw std::domain_error("pow_int: negative exponent");
    return boost::multiprecision::pow(base, static_cast<unsigned>(exp));
}

/// Fixed-point decimal rendering, the one floating-point touchpoint in reports.
inline std::string format_fixed(double value, int places) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", places, value);
    return buf;
}

}  // namespace lucaswalk
