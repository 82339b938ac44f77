#ifndef SENTIPROFILE_POLARITY_HPP_
#define SENTIPROFILE_POLARITY_HPP_

#include <array>        // std::array
#include <cstddef>      // std::size_t
#include <optional>     // std::optional
#include <string_view>  // std::string_view

namespace sentiprofile {

enum class polarity {
    negative,
    neutral,
    positive
};

inline constexpr std::size_t num_polarities = 3;

/// Fixed class order; also the tie-breaking order used by apportionment.
inline constexpr std::array<polarity, num_polarities> all_polarities{ polarity::negative, polarity::neutral, polarity::positive };

[[nodiscard]] constexpr std::size_t index_of(const polarity p) noexcept { return static_cast<std::size_t>(p); }

[[nodiscard]] constexpr std::string_view to_string(const polarity p) noexcept {
    switch (p) {
        case polarity::negative: return "negative";
        case polarity::neutral: return "neutral";
        case polarity::positive: return "positive";
    }
    return "";
}

/// Exact, case-sensitive match against "negative", "neutral", "positive".
[[nodiscard]] constexpr std::optional<polarity> parse_polarity(const std::string_view s) noexcept {
    for (const polarity p : all_polarities) {
        if (s == to_string(p)) {
            return p;
        }
    }
    return std::nullopt;
}

}  // namespace sentiprofile

#endif  // SENTIPROFILE_POLARITY_HPP_
