#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace heavytail {

// Raised for problems with the data itself (empty input, too few points,
// degenerate samples) as opposed to bad parameters or configuration.
class data_error : public std::runtime_error {
public:
    explicit data_error(const std::string& what) : std::runtime_error(what) {}
};

// Validated observation vector: strictly positive, finite, sorted ascending.
class Sample {
public:
    // `values` must already be positive and finite; sorts if needed.
    static Sample from_sorted(std::vector<double> values);

    const std::vector<double>& values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }
    double min() const noexcept { return values_.front(); }
    double max() const noexcept { return values_.back(); }

private:
    explicit Sample(std::vector<double> v) : values_(std::move(v)) {}
    std::vector<double> values_;
};

struct SampleIntake {
    Sample sample;
    std::size_t dropped_nonpositive = 0;
    std::size_t dropped_nonfinite = 0;
};

// Filters non-finite and non-positive entries (counting them), sorts the
// remainder. Throws data_error("no usable observations") if nothing is left.
SampleIntake make_sample(std::vector<double> raw);

// Strict exceedances over `threshold`; requires at least 2 of them.
Sample tail_truncate(const Sample& s, double threshold);

} // namespace heavytail
