#include "sentiprofile/sampling.hpp"

#include <boost/math/distributions/normal.hpp>  // boost::math::normal, boost::math::quantile
#include <boost/multiprecision/cpp_int.hpp>     // boost::multiprecision::uint128_t

#include <algorithm>  // std::min, std::sort
#include <cmath>      // std::ceil, std::isfinite
#include <numeric>    // std::accumulate
#include <random>     // std::mt19937_64
#include <stdexcept>  // std::invalid_argument
#include <string>     // std::to_string
#include <vector>     // std::vector

namespace sentiprofile {

double sample_spec::z_score() const {
    if (z.has_value()) {
        return *z;
    }
    if (!(confidence > 0.0 && confidence < 1.0)) {
        throw std::invalid_argument{ "confidence must lie in (0, 1), got " + std::to_string(confidence) };
    }
    const boost::math::normal standard;
    return boost::math::quantile(standard, 1.0 - (1.0 - confidence) / 2.0);
}

double infinite_population_size(const sample_spec &spec) {
    const double e = spec.margin_of_error;
    const double p = spec.expected_proportion;
    if (!(e > 0.0 && e < 1.0)) {
        throw std::invalid_argument{ "margin of error must lie in (0, 1), got " + std::to_string(e) };
    }
    if (!(p > 0.0 && p < 1.0)) {
        throw std::invalid_argument{ "expected proportion must lie in (0, 1), got " + std::to_string(p) };
    }
    const double z = spec.z_score();
    if (!(z > 0.0) || !std::isfinite(z)) {
        throw std::invalid_argument{ "z must be positive, got " + std::to_string(z) };
    }
    return z * z * p * (1.0 - p) / (e * e);
}

std::size_t min_sample_size(const sample_spec &spec) {
    if (spec.population == 0) {
        throw std::invalid_argument{ "population size must be at least 1" };
    }
    const double n0 = infinite_population_size(spec);
    const auto population = static_cast<double>(spec.population);
    const double corrected = n0 / (1.0 + (n0 - 1.0) / population);
    const auto n = static_cast<std::size_t>(std::ceil(corrected));
    return std::min(n, spec.population);
}

std::array<std::size_t, num_polarities> apportion(const std::size_t n, const std::array<std::size_t, num_polarities> &class_sizes) {
    const std::size_t total = std::accumulate(class_sizes.begin(), class_sizes.end(), std::size_t{ 0 });
    std::array<std::size_t, num_polarities> quota{};
    if (total == 0 || n == 0) {
        return quota;
    }
    // n * size = quota * total + remainder, exact in integers
    std::array<std::size_t, num_polarities> remainder{};
    std::size_t assigned = 0;
    for (std::size_t k = 0; k < num_polarities; ++k) {
        const boost::multiprecision::uint128_t product = boost::multiprecision::uint128_t{ n } * class_sizes[k];
        quota[k] = static_cast<std::size_t>(product / total);
        remainder[k] = static_cast<std::size_t>(product % total);
        assigned += quota[k];
    }
    std::array<std::size_t, num_polarities> order{ 0, 1, 2 };
    std::stable_sort(order.begin(), order.end(), [&](const std::size_t a, const std::size_t b) { return remainder[a] > remainder[b]; });
    for (std::size_t i = 0; assigned < n && i < num_polarities; ++i) {
        ++quota[order[i]];
        ++assigned;
    }
    return quota;
}

namespace {

// Uniform integer in [0, bound) by rejection; mt19937_64 output is fully
// specified, so results match across standard libraries.
std::uint64_t bounded(std::mt19937_64 &rng, const std::uint64_t bound) {
    const std::uint64_t limit = std::mt19937_64::max() - (std::mt19937_64::max() % bound);
    std::uint64_t x = 0;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

using strata = std::array<std::vector<std::size_t>, num_polarities>;

strata split_by_class(const corpus &c, const std::size_t n) {
    if (n > c.size()) {
        throw std::invalid_argument{ "sample size " + std::to_string(n) + " exceeds population " + std::to_string(c.size()) };
    }
    strata members;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (!c[i].label) {
            throw std::invalid_argument{ "stratified sampling needs labels; document '" + c[i].id + "' is unlabeled" };
        }
        members[index_of(*c[i].label)].push_back(i);
    }
    return members;
}

corpus draw(const corpus &c, strata members, const std::array<std::size_t, num_polarities> &take, const std::uint64_t seed) {
    std::mt19937_64 rng{ seed };
    std::vector<std::size_t> chosen;
    for (std::size_t k = 0; k < num_polarities; ++k) {
        std::vector<std::size_t> &pool = members[k];
        const std::size_t want = std::min(take[k], pool.size());
        // partial Fisher-Yates: the first `want` slots become the sample
        for (std::size_t i = 0; i < want; ++i) {
            const std::size_t j = i + static_cast<std::size_t>(bounded(rng, pool.size() - i));
            std::swap(pool[i], pool[j]);
        }
        chosen.insert(chosen.end(), pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(want));
    }
    std::sort(chosen.begin(), chosen.end());
    std::vector<document> docs;
    docs.reserve(chosen.size());
    for (const std::size_t i : chosen) {
        docs.push_back(c[i]);
    }
    return corpus{ std::move(docs), c.source() };
}

std::array<std::size_t, num_polarities> sizes_of(const strata &members) {
    return { members[0].size(), members[1].size(), members[2].size() };
}

}  // namespace

corpus stratified_sample(const corpus &c, const std::size_t n, const std::uint64_t seed) {
    strata members = split_by_class(c, n);
    const auto take = apportion(n, sizes_of(members));
    return draw(c, std::move(members), take, seed);
}

corpus sample_with_minority_retention(const corpus &c, const std::size_t n, const polarity retained, const std::uint64_t seed) {
    strata members = split_by_class(c, n);
    const auto sizes = sizes_of(members);
    const std::size_t r = index_of(retained);
    const std::size_t share = apportion(n, sizes)[r];

    std::array<std::size_t, num_polarities> others = sizes;
    others[r] = 0;
    auto take = apportion(n - share, others);
    take[r] = sizes[r];
    return draw(c, std::move(members), take, seed);
}

}  // namespace sentiprofile
