#include "heavytail/sample.hpp"

#include <algorithm>
#include <cmath>

namespace heavytail {

Sample Sample::from_sorted(std::vector<double> values) {
    if (values.empty())
        throw data_error("no usable observations");
    if (!std::is_sorted(values.begin(), values.end()))
        std::sort(values.begin(), values.end());
    if (!(values.front() > 0.0) || !std::isfinite(values.back()))
        throw data_error("sample values must be positive and finite");
    return Sample(std::move(values));
}

SampleIntake make_sample(std::vector<double> raw) {
    std::vector<double> kept;
    kept.reserve(raw.size());
    std::size_t nonpositive = 0;
    std::size_t nonfinite = 0;
    for (double v : raw) {
        if (!std::isfinite(v)) {
            ++nonfinite;
        } else if (v <= 0.0) {
            ++nonpositive;
        } else {
            kept.push_back(v);
        }
    }
    if (kept.empty())
        throw data_error("no usable observations");
    std::sort(kept.begin(), kept.end());
    return SampleIntake{Sample::from_sorted(std::move(kept)), nonpositive, nonfinite};
}

Sample tail_truncate(const Sample& s, double threshold) {
    const auto& v = s.values();
    auto first = std::upper_bound(v.begin(), v.end(), threshold);
    if (std::distance(first, v.end()) < 2)
        throw data_error("tail_truncate: fewer than 2 observations exceed the threshold");
    return Sample::from_sorted(std::vector<double>(first, v.end()));
}

} // namespace heavytail
