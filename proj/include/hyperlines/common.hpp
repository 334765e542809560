#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hyperlines {

enum class Colour : std::uint8_t { red, blue };

constexpr Colour opposite(Colour c) {
    return c == Colour::red ? Colour::blue : Colour::red;
}

inline const char* colour_name(Colour c) {
    return c == Colour::red ? "red" : "blue";
}

/// Thrown when a request is outside the supported regime (size caps,
/// unsupported parameter families), as opposed to a malformed argument.
class capability_error : public std::runtime_error {
  public:
    explicit capability_error(const std::string& what) : std::runtime_error(what) {}
};

/// Exact binomial coefficient via the multiplicative formula; every
/// intermediate division is exact. Safe for the n <= 64 range used here.
constexpr std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

constexpr std::uint64_t choose2(std::uint64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }
constexpr std::uint64_t choose3(std::uint64_t n) { return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6; }

}  // namespace hyperlines
