#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "eigencone/horn.hpp"
#include "eigencone/lr.hpp"
#include "eigencone/partition.hpp"
#include "eigencone/spectrum.hpp"

namespace eigencone {

/// One term of a quantum product: coefficient of q^d sigma_K.
struct QuantumTerm {
    SchubertIndex K;
    int d;
    Multiplicity c;

    friend bool operator==(const QuantumTerm& a, const QuantumTerm& b) {
        return a.K == b.K && a.d == b.d && a.c == b.c;
    }
};

namespace detail {

/// Removes size-n rim hooks from a diagram with at most p rows until it fits
/// the p x (n-p) box. Returns the reduced diagram, the number of hooks
/// removed, and the accumulated sign (each hook of height h contributes
/// (-1)^(p-h)); nullopt when the reduction dead-ends, in which case the
/// class vanishes. Works on first-column hook lengths, where removing a
/// size-n hook subtracts n from one entry while keeping all entries
/// distinct and nonnegative.
inline std::optional<std::tuple<Partition, int, int>> rim_hook_reduce(const Partition& gamma,
                                                                      int p, int n) {
    const int q = n - p;
    if (static_cast<int>(gamma.size()) > p) return std::nullopt;
    std::vector<long long> b(static_cast<std::size_t>(p));
    for (int i = 0; i < p; ++i)
        b[static_cast<std::size_t>(i)] = gamma.part(static_cast<std::size_t>(i)) + (p - 1 - i);

    int d = 0, sign = 1;
    while (b[0] - (p - 1) > q) {
        bool removed = false;
        for (std::size_t i = 0; i < b.size(); ++i) {
            const long long target = b[i] - n;
            if (target < 0) break;  // entries are sorted descending
            bool collides = false;
            int crossed = 0;
            for (std::size_t j = 0; j < b.size(); ++j) {
                if (j == i) continue;
                if (b[j] == target) { collides = true; break; }
                if (b[j] > target && b[j] < b[i]) ++crossed;
            }
            if (collides) continue;
            const int height = crossed + 1;
            if ((p - height) % 2 != 0) sign = -sign;
            b[i] = target;
            std::sort(b.begin(), b.end(), std::greater<>());
            ++d;
            removed = true;
            break;
        }
        if (!removed) return std::nullopt;
    }

    std::vector<int> parts(static_cast<std::size_t>(p));
    for (int i = 0; i < p; ++i)
        parts[static_cast<std::size_t>(i)] = static_cast<int>(b[static_cast<std::size_t>(i)] - (p - 1 - i));
    return std::make_tuple(Partition(std::move(parts)), d, sign);
}

struct QuantumCache {
    std::shared_mutex mutex;
    std::map<std::tuple<int, std::vector<int>, std::vector<int>>, std::vector<QuantumTerm>> table;
};

inline QuantumCache& quantum_cache() {
    static QuantumCache cache;
    return cache;
}

}  // namespace detail

/// Expansion of sigma_I * sigma_J over q^d sigma_K, ordered by (d, K).
/// Computed as the unboxed classical decomposition followed by size-n
/// rim-hook reduction of every component; signed contributions to the same
/// (K, d) must leave a nonnegative total, anything else is an internal
/// error. Every term satisfies |sigma_I| + |sigma_J| = |sigma_K| + n*d.
inline std::vector<QuantumTerm> quantum_product(const SchubertIndex& I, const SchubertIndex& J) {
    if (I.n() != J.n()) throw std::invalid_argument("index sets must share the ambient size");
    if (I.p() != J.p()) throw std::invalid_argument("index sets must have equal cardinality");
    const int n = I.n(), p = I.p();
    if (p == n) {
        // One-point Grassmannian: the only class is the identity.
        return {QuantumTerm{I, 0, 1}};
    }

    auto key = std::make_tuple(n, I.elements(), J.elements());
    auto& cache = detail::quantum_cache();
    {
        std::shared_lock lock(cache.mutex);
        if (auto it = cache.table.find(key); it != cache.table.end()) return it->second;
    }

    const Partition a = partition_of_subset(I), b = partition_of_subset(J);
    std::map<std::pair<int, Partition>, long long> acc;
    for (const auto& [gamma, c] : tensor_decompose(a, b, p)) {
        auto reduced = detail::rim_hook_reduce(gamma, p, n);
        if (!reduced) continue;
        const auto& [core, d, sign] = *reduced;
        if (c > static_cast<Multiplicity>(std::numeric_limits<long long>::max()))
            throw std::overflow_error("quantum coefficient overflow");
        long long& slot = acc[{d, core}];
        long long delta = sign > 0 ? static_cast<long long>(c) : -static_cast<long long>(c);
        if (__builtin_add_overflow(slot, delta, &slot))
            throw std::overflow_error("quantum coefficient overflow");
    }

    std::vector<QuantumTerm> terms;
    for (const auto& [dk, value] : acc) {
        if (value < 0)
            throw std::logic_error("negative quantum coefficient after reduction");
        if (value == 0) continue;
        terms.push_back(QuantumTerm{subset_of_partition(dk.second, p, n), dk.first,
                                    static_cast<Multiplicity>(value)});
    }
    std::sort(terms.begin(), terms.end(), [](const QuantumTerm& x, const QuantumTerm& y) {
        if (x.d != y.d) return x.d < y.d;
        return x.K.elements() < y.K.elements();
    });

    std::unique_lock lock(cache.mutex);
    cache.table.emplace(std::move(key), terms);
    return terms;
}

/// Coefficient of q^d sigma_K in sigma_I * sigma_J; zero unless
/// |sigma_I| + |sigma_J| = |sigma_K| + n*d.
inline Multiplicity quantum_lr(const SchubertIndex& I, const SchubertIndex& J,
                               const SchubertIndex& K, int d) {
    if (K.n() != I.n()) throw std::invalid_argument("index sets must share the ambient size");
    if (K.p() != I.p()) throw std::invalid_argument("index sets must have equal cardinality");
    if (d < 0) throw std::invalid_argument("degree must be nonnegative");
    for (const auto& t : quantum_product(I, J))
        if (t.d == d && t.K == K) return t.c;
    return 0;
}

/// Normalized angle vector plus a flag for lifts that sit exactly on the
/// unit-spread boundary (within tol).
struct UnitaryLift {
    Spectrum spectrum;
    bool boundary = false;
};

/// Canonical representative of unitary eigenvalue angles: congruent mod 1 to
/// the input, sorted descending, summing to zero, with spread at most 1.
/// The representative is unique: reducing mod 1 fixes the multiset, the
/// integer sum of the inputs fixes how many entries shift down by one, and
/// only one cyclic cut of the sorted values does that. Non-integer total
/// angle (a non-unimodular determinant) is rejected.
inline UnitaryLift normalize_unitary_spectrum(const std::vector<double>& angles,
                                              double tol = 1e-9) {
    if (angles.empty()) throw std::invalid_argument("need at least one angle");
    if (tol < 0) throw std::invalid_argument("tolerance must be nonnegative");
    const std::size_t n = angles.size();

    std::vector<double> f(n);
    double sum = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::isfinite(angles[i])) throw std::invalid_argument("angles must be finite");
        f[i] = angles[i] - std::floor(angles[i]);
        if (f[i] >= 1.0) f[i] = 0.0;  // guards against floor rounding at the seam
        sum += f[i];
    }
    const long long s = std::llround(sum);
    if (std::abs(sum - static_cast<double>(s)) > tol)
        throw std::invalid_argument("angles must sum to an integer within tol");

    std::sort(f.begin(), f.end(), std::greater<>());
    const long long nn = static_cast<long long>(n);
    const long long r = ((s % nn) + nn) % nn;
    const long long t = (s - r) / nn;

    std::vector<double> lift;
    lift.reserve(n);
    for (std::size_t i = static_cast<std::size_t>(r); i < n; ++i)
        lift.push_back(f[i] - static_cast<double>(t));
    for (std::size_t i = 0; i < static_cast<std::size_t>(r); ++i)
        lift.push_back(f[i] - 1.0 - static_cast<double>(t));

    UnitaryLift out{Spectrum(std::move(lift)), false};
    out.boundary = std::abs(out.spectrum.spread() - 1.0) <= tol;
    return out;
}

/// Whether lambdaW can be the normalized spectrum of a product UV of
/// unitaries with normalized spectra lambdaU, lambdaV: for every (I,J,K,d)
/// with nonzero quantum coefficient,
///   subset_sum(lambdaW,K) <= subset_sum(lambdaU,I) + subset_sum(lambdaV,J) + d + tol.
/// At d = 0 this degenerates to the Hermitian inequality system. All three
/// inputs must be normalized (zero sum, spread at most 1) within tol.
inline Verdict check_unitary_product(const Spectrum& lambdaU, const Spectrum& lambdaV,
                                     const Spectrum& lambdaW, double tol = 1e-9) {
    if (lambdaU.size() != lambdaV.size() || lambdaU.size() != lambdaW.size())
        throw std::invalid_argument("spectra must have equal lengths");
    if (tol < 0) throw std::invalid_argument("tolerance must be nonnegative");
    for (const Spectrum* s : {&lambdaU, &lambdaV, &lambdaW}) {
        if (std::abs(s->sum()) > tol)
            throw std::invalid_argument("spectrum is not normalized: nonzero sum");
        if (s->spread() > 1.0 + tol)
            throw std::invalid_argument("spectrum is not normalized: spread exceeds 1");
    }

    const int n = static_cast<int>(lambdaU.size());
    Verdict v;
    v.feasible = true;
    v.slack = std::numeric_limits<double>::infinity();
    for (int p = 1; p < n; ++p) {
        auto subs = detail::subsets(n, p);
        for (const auto& i : subs) {
            SchubertIndex I(n, i);
            const double su = subset_sum(lambdaU, I);
            for (const auto& j : subs) {
                SchubertIndex J(n, j);
                const double sv = subset_sum(lambdaV, J);
                for (const auto& term : quantum_product(I, J)) {
                    const double lhs = subset_sum(lambdaW, term.K);
                    const double rhs = su + sv + term.d;
                    v.slack = std::min(v.slack, rhs - lhs);
                    if (lhs > rhs + tol) {
                        v.feasible = false;
                        v.witness = Witness{"quantum", {I, J}, term.K, term.d, term.c, lhs, rhs};
                        return v;
                    }
                }
            }
        }
    }
    if (!std::isfinite(v.slack)) v.slack = 0;
    return v;
}

}  // namespace eigencone
