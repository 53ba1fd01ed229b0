#pragma once

#include <cmath>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "eigencone/partition.hpp"

namespace eigencone {

/// Real spectrum: nonempty, sorted descending. Construction validates the
/// order; unsorted input is rejected, never silently fixed.
class Spectrum {
public:
    explicit Spectrum(std::vector<double> values) : values_(std::move(values)) {
        if (values_.empty()) throw std::invalid_argument("spectrum must be nonempty");
        for (std::size_t i = 1; i < values_.size(); ++i) {
            if (!(values_[i] <= values_[i - 1]))
                throw std::invalid_argument("spectrum must be sorted descending");
        }
        for (double v : values_) {
            if (!std::isfinite(v))
                throw std::invalid_argument("spectrum entries must be finite");
        }
    }

    Spectrum(std::initializer_list<double> values)
        : Spectrum(std::vector<double>(values)) {}

    /// Partition parts padded with zeros to the given length.
    static Spectrum of_partition(const Partition& p, std::size_t length) {
        if (p.size() > length)
            throw std::invalid_argument("partition has more parts than the requested length");
        std::vector<double> v(length, 0.0);
        for (std::size_t i = 0; i < p.size(); ++i) v[i] = p.part(i);
        return Spectrum(std::move(v));
    }

    const std::vector<double>& values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t i) const { return values_.at(i); }

    double sum() const {
        double s = 0;
        for (double v : values_) s += v;
        return s;
    }

    double spread() const { return values_.front() - values_.back(); }

    /// Spectrum of the negated operator: negate and reverse.
    Spectrum negated_reversed() const {
        std::vector<double> v(values_.rbegin(), values_.rend());
        for (double& x : v) x = -x;
        return Spectrum(std::move(v));
    }

    /// Every entry shifted by s.
    Spectrum shifted(double s) const {
        std::vector<double> v(values_);
        for (double& x : v) x += s;
        return Spectrum(std::move(v));
    }

    friend bool operator==(const Spectrum&, const Spectrum&) = default;

    std::string to_string() const {
        std::ostringstream os;
        os << '(';
        for (std::size_t i = 0; i < values_.size(); ++i) {
            if (i) os << ',';
            os << values_[i];
        }
        os << ')';
        return os.str();
    }

private:
    std::vector<double> values_;
};

/// Sum of the entries of s selected by the 1-based index set I.
inline double subset_sum(const Spectrum& s, const SchubertIndex& I) {
    if (static_cast<std::size_t>(I.n()) != s.size())
        throw std::invalid_argument("index set and spectrum sizes differ");
    double total = 0;
    for (int i : I.elements()) total += s[static_cast<std::size_t>(i - 1)];
    return total;
}

}  // namespace eigencone
