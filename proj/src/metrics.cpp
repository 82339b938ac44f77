#include "sentiprofile/metrics.hpp"

#include <cmath>    // std::isnan
#include <string>   // std::to_string
#include <utility>  // std::move

namespace sentiprofile {

namespace {

double ratio(const std::size_t num, const std::size_t den) noexcept {
    return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

classification_report make_classification_report(const std::span<const polarity> gold, const std::span<const polarity> predicted) {
    if (gold.size() != predicted.size()) {
        throw std::invalid_argument{ "gold and predicted label counts differ: " + std::to_string(gold.size()) + " vs " + std::to_string(predicted.size()) };
    }
    if (gold.empty()) {
        throw std::invalid_argument{ "classification report over zero samples" };
    }

    classification_report report;
    report.samples = gold.size();
    for (std::size_t i = 0; i < gold.size(); ++i) {
        ++report.confusion[index_of(gold[i])][index_of(predicted[i])];
    }

    std::size_t tp_sum = 0;
    std::size_t fp_sum = 0;
    std::size_t fn_sum = 0;
    double f1_sum = 0.0;
    std::size_t present = 0;
    for (std::size_t k = 0; k < num_polarities; ++k) {
        const std::size_t tp = report.confusion[k][k];
        std::size_t gold_k = 0;
        std::size_t pred_k = 0;
        for (std::size_t j = 0; j < num_polarities; ++j) {
            gold_k += report.confusion[k][j];
            pred_k += report.confusion[j][k];
        }
        const std::size_t fp = pred_k - tp;
        const std::size_t fn = gold_k - tp;

        class_metrics &m = report.per_class[k];
        m.support = gold_k;
        m.present = gold_k + pred_k > 0;
        m.precision = ratio(tp, pred_k);
        m.recall = ratio(tp, gold_k);
        // 2TP / (2TP + FP + FN) equals the harmonic mean and is 0 when undefined
        m.f1 = ratio(2 * tp, 2 * tp + fp + fn);

        tp_sum += tp;
        fp_sum += fp;
        fn_sum += fn;
        if (m.present) {
            f1_sum += m.f1;
            ++present;
        }
    }
    report.accuracy = ratio(tp_sum, gold.size());
    report.micro_f1 = ratio(2 * tp_sum, 2 * tp_sum + fp_sum + fn_sum);
    report.macro_f1 = f1_sum / static_cast<double>(present);
    report.overall_score = (report.micro_f1 + report.macro_f1) / 2.0;
    return report;
}

rating_matrix::rating_matrix(std::vector<std::vector<std::size_t>> counts) :
    counts_{ std::move(counts) } {
    if (counts_.empty()) {
        throw std::invalid_argument{ "rating matrix has no items" };
    }
    const std::size_t cats = counts_.front().size();
    if (cats < 2) {
        throw std::invalid_argument{ "rating matrix needs at least two categories" };
    }
    for (std::size_t i = 0; i < counts_.size(); ++i) {
        if (counts_[i].size() != cats) {
            throw std::invalid_argument{ "item " + std::to_string(i) + " has " + std::to_string(counts_[i].size()) + " categories, expected " + std::to_string(cats) };
        }
        std::size_t sum = 0;
        for (const std::size_t c : counts_[i]) {
            sum += c;
        }
        if (i == 0) {
            raters_ = sum;
        } else if (sum != raters_) {
            throw std::invalid_argument{ "item " + std::to_string(i) + " has " + std::to_string(sum) + " ratings, expected " + std::to_string(raters_) };
        }
    }
    if (raters_ < 2) {
        throw std::invalid_argument{ "rating matrix needs at least two raters per item" };
    }
}

rating_matrix rating_matrix::from_ratings(const std::span<const std::vector<std::size_t>> ratings, const std::size_t categories) {
    std::vector<std::vector<std::size_t>> counts;
    counts.reserve(ratings.size());
    for (std::size_t i = 0; i < ratings.size(); ++i) {
        std::vector<std::size_t> row(categories, 0);
        for (const std::size_t c : ratings[i]) {
            if (c >= categories) {
                throw std::invalid_argument{ "item " + std::to_string(i) + " uses category " + std::to_string(c) + " of " + std::to_string(categories) };
            }
            ++row[c];
        }
        counts.push_back(std::move(row));
    }
    return rating_matrix{ std::move(counts) };
}

std::optional<double> fleiss_kappa(const rating_matrix &m) {
    const std::size_t n_items = m.items();
    const std::size_t k = m.categories();
    const auto r = static_cast<double>(m.raters());
    const double total = static_cast<double>(n_items) * r;

    std::vector<std::size_t> column_totals(k, 0);
    double p_bar = 0.0;
    for (const auto &row : m.rows()) {
        std::size_t squares = 0;
        for (std::size_t j = 0; j < k; ++j) {
            squares += row[j] * row[j];
            column_totals[j] += row[j];
        }
        p_bar += (static_cast<double>(squares) - r) / (r * (r - 1.0));
    }
    p_bar /= static_cast<double>(n_items);

    std::size_t used = 0;
    double p_e = 0.0;
    for (const std::size_t t : column_totals) {
        const double p_j = static_cast<double>(t) / total;
        p_e += p_j * p_j;
        used += t > 0 ? 1 : 0;
    }
    if (used <= 1) {
        return std::nullopt;
    }
    return (p_bar - p_e) / (1.0 - p_e);
}

double raw_agreement(const rating_matrix &m) {
    std::size_t unanimous = 0;
    for (const auto &row : m.rows()) {
        for (const std::size_t c : row) {
            if (c == m.raters()) {
                ++unanimous;
                break;
            }
        }
    }
    return static_cast<double>(unanimous) / static_cast<double>(m.items());
}

std::string_view to_string(const agreement_band b) noexcept {
    switch (b) {
        case agreement_band::poor: return "poor";
        case agreement_band::slight: return "slight";
        case agreement_band::fair: return "fair";
        case agreement_band::moderate: return "moderate";
        case agreement_band::substantial: return "substantial";
        case agreement_band::almost_perfect: return "almost perfect";
    }
    return "";
}

agreement_band landis_koch(const double kappa) {
    if (std::isnan(kappa) || kappa < -1.0 || kappa > 1.0) {
        throw std::invalid_argument{ "kappa must lie in [-1, 1], got " + std::to_string(kappa) };
    }
    if (kappa < 0.0) {
        return agreement_band::poor;
    }
    if (kappa <= 0.20) {
        return agreement_band::slight;
    }
    if (kappa <= 0.40) {
        return agreement_band::fair;
    }
    if (kappa <= 0.60) {
        return agreement_band::moderate;
    }
    if (kappa <= 0.80) {
        return agreement_band::substantial;
    }
    return agreement_band::almost_perfect;
}

agreement_result assess_agreement(const rating_matrix &m) {
    agreement_result result;
    result.kappa = fleiss_kappa(m);
    result.raw_agreement = raw_agreement(m);
    if (result.kappa) {
        result.interpretation = landis_koch(*result.kappa);
    }
    return result;
}

}  // namespace sentiprofile
