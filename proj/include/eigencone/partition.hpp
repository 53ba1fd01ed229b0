#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace eigencone {

/// Integer partition in canonical form: weakly decreasing positive parts,
/// trailing zeros stripped at construction. The empty partition is valid.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 0)
                throw std::invalid_argument("partition part must be nonnegative");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }

    /// Number of nonzero parts.
    std::size_t size() const { return parts_.size(); }

    bool empty() const { return parts_.empty(); }

    /// Part at 0-based row index; zero beyond the last nonzero part.
    int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    /// Total number of cells.
    long long weight() const {
        long long w = 0;
        for (int p : parts_) w += p;
        return w;
    }

    /// Every part multiplied by n >= 0.
    Partition scaled(int n) const {
        if (n < 0) throw std::invalid_argument("scale factor must be nonnegative");
        std::vector<int> out(parts_);
        for (int& p : out) p *= n;
        return Partition(std::move(out));
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) {
        return std::lexicographical_compare_three_way(
            a.parts_.begin(), a.parts_.end(), b.parts_.begin(), b.parts_.end());
    }

    std::string to_string() const {
        std::ostringstream os;
        os << '(';
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) os << ',';
            os << parts_[i];
        }
        os << ')';
        return os.str();
    }

private:
    std::vector<int> parts_;
};

/// Whether the diagram of b fits inside the diagram of a row by row.
inline bool contains(const Partition& a, const Partition& b) {
    if (b.size() > a.size()) return false;
    for (std::size_t i = 0; i < b.size(); ++i)
        if (a.part(i) < b.part(i)) return false;
    return true;
}

/// Cardinality-p subset of {1,...,n}, kept sorted ascending, 1-based.
class SchubertIndex {
public:
    SchubertIndex(int n, std::vector<int> elements)
        : n_(n), elements_(std::move(elements)) {
        if (n_ < 1) throw std::invalid_argument("ambient size must be >= 1");
        if (elements_.empty() || elements_.size() > static_cast<std::size_t>(n_))
            throw std::invalid_argument("subset cardinality must be in [1, n]");
        for (std::size_t i = 0; i < elements_.size(); ++i) {
            if (elements_[i] < 1 || elements_[i] > n_)
                throw std::invalid_argument("subset element out of range");
            if (i > 0 && elements_[i] <= elements_[i - 1])
                throw std::invalid_argument("subset elements must be strictly increasing");
        }
    }

    int n() const { return n_; }
    int p() const { return static_cast<int>(elements_.size()); }
    const std::vector<int>& elements() const { return elements_; }

    friend bool operator==(const SchubertIndex& a, const SchubertIndex& b) {
        return a.n_ == b.n_ && a.elements_ == b.elements_;
    }
    friend auto operator<=>(const SchubertIndex& a, const SchubertIndex& b) {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        return std::lexicographical_compare_three_way(
            a.elements_.begin(), a.elements_.end(),
            b.elements_.begin(), b.elements_.end());
    }

    std::string to_string() const {
        std::ostringstream os;
        os << '{';
        for (std::size_t i = 0; i < elements_.size(); ++i) {
            if (i) os << ',';
            os << elements_[i];
        }
        os << '}';
        return os.str();
    }

private:
    int n_;
    std::vector<int> elements_;
};

/// Diagram of the subset I = {i_1 < ... < i_p} inside the p x (n-p) box:
/// row a (1-based) has i_{p+1-a} - (p+1-a) cells.
inline Partition partition_of_subset(const SchubertIndex& I) {
    const auto& e = I.elements();
    const int p = I.p();
    std::vector<int> parts(static_cast<std::size_t>(p));
    for (int a = 1; a <= p; ++a)
        parts[static_cast<std::size_t>(a - 1)] = e[static_cast<std::size_t>(p - a)] - (p + 1 - a);
    return Partition(std::move(parts));
}

/// Inverse of partition_of_subset for diagrams fitting the p x (n-p) box.
inline SchubertIndex subset_of_partition(const Partition& lambda, int p, int n) {
    if (p < 1 || p > n) throw std::invalid_argument("need 1 <= p <= n");
    if (lambda.size() > static_cast<std::size_t>(p) || lambda.part(0) > n - p)
        throw std::invalid_argument("diagram does not fit the p x (n-p) box");
    std::vector<int> elements(static_cast<std::size_t>(p));
    for (int k = 1; k <= p; ++k)
        elements[static_cast<std::size_t>(k - 1)] = lambda.part(static_cast<std::size_t>(p - k)) + k;
    return SchubertIndex(n, std::move(elements));
}

/// K* = { n+1-k : k in K }. Involution; the diagram of K* is the rotated
/// complement of the diagram of K in its box.
inline SchubertIndex dual_subset(const SchubertIndex& K) {
    std::vector<int> out;
    out.reserve(K.elements().size());
    for (auto it = K.elements().rbegin(); it != K.elements().rend(); ++it)
        out.push_back(K.n() + 1 - *it);
    return SchubertIndex(K.n(), std::move(out));
}

}  // namespace eigencone

template <>
struct std::hash<eigencone::Partition> {
    std::size_t operator()(const eigencone::Partition& p) const noexcept {
        std::size_t h = 0x9e3779b97f4a7c15ull;
        for (int v : p.parts())
            h = (h ^ static_cast<std::size_t>(v)) * 0x100000001b3ull;
        return h;
    }
};
