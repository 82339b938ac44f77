#ifndef SENTIPROFILE_SAMPLING_HPP_
#define SENTIPROFILE_SAMPLING_HPP_

#include "sentiprofile/corpus.hpp"
#include "sentiprofile/polarity.hpp"

#include <array>     // std::array
#include <cstddef>   // std::size_t
#include <cstdint>   // std::uint64_t
#include <optional>  // std::optional

namespace sentiprofile {

/// Parameters of a minimum sample-size computation.
struct sample_spec {
    std::size_t population{ 1 };
    double confidence{ 0.95 };
    double margin_of_error{ 0.05 };
    double expected_proportion{ 0.5 };
    /// Standard-normal quantile; derived from `confidence` when absent.
    std::optional<double> z;

    /// Two-sided quantile: z = Phi^-1(1 - (1 - confidence) / 2).
    [[nodiscard]] double z_score() const;
};

/// Cochran's n0 = z^2 p (1 - p) / e^2 without the finite-population correction.
[[nodiscard]] double infinite_population_size(const sample_spec &spec);

/// ceil(n0 / (1 + (n0 - 1) / N)), never more than N.
/// Throws std::invalid_argument when N = 0, e or p is outside (0, 1), or z <= 0.
[[nodiscard]] std::size_t min_sample_size(const sample_spec &spec);

/// Largest-remainder apportionment of `n` over `class_sizes`. Remainders are
/// compared exactly; ties go to the earlier class (negative < neutral < positive).
[[nodiscard]] std::array<std::size_t, num_polarities> apportion(std::size_t n, const std::array<std::size_t, num_polarities> &class_sizes);

/// Proportional per-class sample. Within each class a seeded Fisher-Yates
/// shuffle picks the members; the output keeps the input order.
/// Throws std::invalid_argument for unlabeled documents or n > corpus size.
[[nodiscard]] corpus stratified_sample(const corpus &c, std::size_t n, std::uint64_t seed);

/// Like stratified_sample but keeps every document of `retained`. The other
/// classes share n minus the retained class's proportional share, so the
/// output holds n + (retained count - proportional share) documents.
[[nodiscard]] corpus sample_with_minority_retention(const corpus &c, std::size_t n, polarity retained, std::uint64_t seed);

}  // namespace sentiprofile

#endif  // SENTIPROFILE_SAMPLING_HPP_
