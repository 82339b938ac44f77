#ifndef SENTIPROFILE_METRICS_HPP_
#define SENTIPROFILE_METRICS_HPP_

#include "sentiprofile/polarity.hpp"

#include <algorithm>    // std::count
#include <array>        // std::array
#include <cstddef>      // std::size_t
#include <optional>     // std::optional
#include <span>         // std::span
#include <stdexcept>    // std::invalid_argument
#include <string_view>  // std::string_view
#include <vector>       // std::vector

namespace sentiprofile {

//*************************************************************************************************************************************//
//                                                      classification report                                                          //
//*************************************************************************************************************************************//

struct class_metrics {
    double precision{ 0.0 };
    double recall{ 0.0 };
    double f1{ 0.0 };
    std::size_t support{ 0 };
    /// False when the class occurs in neither gold nor predicted labels.
    bool present{ false };
};

/// Rows are gold classes, columns predicted classes.
using confusion_matrix = std::array<std::array<std::size_t, num_polarities>, num_polarities>;

struct classification_report {
    std::array<class_metrics, num_polarities> per_class{};
    confusion_matrix confusion{};
    double accuracy{ 0.0 };
    double micro_f1{ 0.0 };
    double macro_f1{ 0.0 };
    /// (micro_f1 + macro_f1) / 2
    double overall_score{ 0.0 };
    std::size_t samples{ 0 };

    [[nodiscard]] const class_metrics &operator[](const polarity p) const noexcept { return per_class[index_of(p)]; }
};

/// Per-class precision, recall and F1 with the zero-division -> 0 convention.
/// Macro F1 averages the classes that occur in gold or predicted labels.
/// Throws std::invalid_argument on empty input or a length mismatch.
[[nodiscard]] classification_report make_classification_report(std::span<const polarity> gold, std::span<const polarity> predicted);

//*************************************************************************************************************************************//
//                                                         rater agreement                                                             //
//*************************************************************************************************************************************//

/// items x categories table; cell (i, j) = raters who put item i into category j.
class rating_matrix {
  public:
    /// Throws std::invalid_argument if there are no items, fewer than two
    /// categories, fewer than two raters, or rows with differing sums.
    explicit rating_matrix(std::vector<std::vector<std::size_t>> counts);

    /// Builds the count table from per-item rater choices (category indices).
    [[nodiscard]] static rating_matrix from_ratings(std::span<const std::vector<std::size_t>> ratings, std::size_t categories);

    [[nodiscard]] std::size_t items() const noexcept { return counts_.size(); }
    [[nodiscard]] std::size_t categories() const noexcept { return counts_.front().size(); }
    [[nodiscard]] std::size_t raters() const noexcept { return raters_; }
    [[nodiscard]] std::size_t operator()(const std::size_t item, const std::size_t category) const { return counts_[item][category]; }
    [[nodiscard]] const std::vector<std::vector<std::size_t>> &rows() const noexcept { return counts_; }

  private:
    std::vector<std::vector<std::size_t>> counts_;
    std::size_t raters_{ 0 };
};

/// Fleiss' kappa, (P - Pe) / (1 - Pe). Returns nullopt when Pe = 1, i.e. all
/// ratings fall into one category and kappa is undefined.
[[nodiscard]] std::optional<double> fleiss_kappa(const rating_matrix &m);

/// Share of items on which all raters chose the same category.
[[nodiscard]] double raw_agreement(const rating_matrix &m);

enum class agreement_band {
    poor,
    slight,
    fair,
    moderate,
    substantial,
    almost_perfect
};

[[nodiscard]] std::string_view to_string(agreement_band b) noexcept;

/// Landis & Koch: < 0 poor, [0, .2] slight, (.2, .4] fair, (.4, .6] moderate,
/// (.6, .8] substantial, (.8, 1] almost perfect.
/// Throws std::invalid_argument outside [-1, 1] or for NaN.
[[nodiscard]] agreement_band landis_koch(double kappa);

struct agreement_result {
    std::optional<double> kappa;
    double raw_agreement{ 0.0 };
    /// Absent when kappa is undefined.
    std::optional<agreement_band> interpretation;
};

[[nodiscard]] agreement_result assess_agreement(const rating_matrix &m);

/// Strict-majority label among `ratings`; nullopt when no label has more than
/// half of the votes. Throws std::invalid_argument for fewer than two ratings.
template <typename Label>
[[nodiscard]] std::optional<Label> majority_vote(const std::span<const Label> ratings) {
    if (ratings.size() < 2) {
        throw std::invalid_argument{ ratings.empty() ? "majority vote over an empty rating list" : "majority vote needs at least two ratings" };
    }
    for (const Label &candidate : ratings) {
        if (2 * static_cast<std::size_t>(std::count(ratings.begin(), ratings.end(), candidate)) > ratings.size()) {
            return candidate;
        }
    }
    return std::nullopt;
}

}  // namespace sentiprofile

#endif  // SENTIPROFILE_METRICS_HPP_
