#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "eigencone/lr.hpp"
#include "eigencone/partition.hpp"
#include "eigencone/spectrum.hpp"

namespace eigencone {

/// Index triple (I,J,K) of equal cardinality p < n whose diagrams satisfy
/// the weight balance |sigma_I| + |sigma_J| = |sigma_K| and whose
/// coefficient c = lr_coefficient(sigma_I, sigma_J, sigma_K) is nonzero.
/// All of this is revalidated at construction.
struct HornTriple {
    int p;
    SchubertIndex I, J, K;
    Multiplicity c;

    HornTriple(SchubertIndex i, SchubertIndex j, SchubertIndex k, Multiplicity coeff)
        : p(i.p()), I(std::move(i)), J(std::move(j)), K(std::move(k)), c(coeff) {
        if (J.p() != p || K.p() != p)
            throw std::invalid_argument("index sets must have equal cardinality");
        if (I.n() != J.n() || I.n() != K.n())
            throw std::invalid_argument("index sets must share the ambient size");
        if (p >= I.n())
            throw std::invalid_argument("cardinality must be smaller than the ambient size");
        Partition a = partition_of_subset(I), b = partition_of_subset(J),
                  g = partition_of_subset(K);
        if (a.weight() + b.weight() != g.weight())
            throw std::invalid_argument("diagram weights are not balanced");
        if (c == 0 || c != lr_coefficient(a, b, g))
            throw std::invalid_argument("coefficient does not match the diagrams");
    }

    friend bool operator==(const HornTriple& x, const HornTriple& y) {
        return x.I == y.I && x.J == y.J && x.K == y.K && x.c == y.c;
    }
};

namespace detail {

/// All p-subsets of {1..n} in lexicographic order.
inline std::vector<std::vector<int>> subsets(int n, int p) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(p));
    for (int i = 0; i < p; ++i) cur[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
        out.push_back(cur);
        int i = p - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - (p - 1 - i)) --i;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < p; ++j)
            cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

/// Integer diagram row sums of subsets, padded to length p.
inline std::vector<long long> padded_diagram(const std::vector<int>& subset) {
    const int p = static_cast<int>(subset.size());
    std::vector<long long> parts(static_cast<std::size_t>(p), 0);
    for (int a = 1; a <= p; ++a)
        parts[static_cast<std::size_t>(a - 1)] = subset[static_cast<std::size_t>(p - a)] - (p + 1 - a);
    return parts;
}

struct HornCache {
    std::shared_mutex mutex;
    std::map<int, std::vector<HornTriple>> direct;
    std::map<int, std::vector<HornTriple>> recursive;
};

inline HornCache& horn_cache() {
    static HornCache cache;
    return cache;
}

}  // namespace detail

/// Every triple (I,J,K) of p-subsets of {1..n}, p = 1..n-1, whose diagram
/// coefficient is nonzero, ordered by (p, I, J, K) lexicographically.
/// With facets_only, only triples with coefficient exactly 1 are kept.
inline std::vector<HornTriple> horn_list(int n, bool facets_only = false) {
    if (n < 1) throw std::invalid_argument("ambient size must be >= 1");
    auto& cache = detail::horn_cache();
    {
        std::shared_lock lock(cache.mutex);
        if (auto it = cache.direct.find(n); it != cache.direct.end()) {
            if (!facets_only) return it->second;
            std::vector<HornTriple> facets;
            for (const auto& t : it->second)
                if (t.c == 1) facets.push_back(t);
            return facets;
        }
    }

    std::vector<HornTriple> all;
    for (int p = 1; p < n; ++p) {
        auto subs = detail::subsets(n, p);
        std::vector<Partition> diag;
        std::vector<long long> weight;
        diag.reserve(subs.size());
        for (const auto& s : subs) {
            diag.push_back(partition_of_subset(SchubertIndex(n, s)));
            weight.push_back(diag.back().weight());
        }
        for (std::size_t i = 0; i < subs.size(); ++i)
            for (std::size_t j = 0; j < subs.size(); ++j)
                for (std::size_t k = 0; k < subs.size(); ++k) {
                    if (weight[i] + weight[j] != weight[k]) continue;
                    Multiplicity c = lr_coefficient(diag[i], diag[j], diag[k]);
                    if (c == 0) continue;
                    all.emplace_back(SchubertIndex(n, subs[i]), SchubertIndex(n, subs[j]),
                                     SchubertIndex(n, subs[k]), c);
                }
    }

    {
        std::unique_lock lock(cache.mutex);
        cache.direct.emplace(n, all);
    }
    if (!facets_only) return all;
    std::vector<HornTriple> facets;
    for (const auto& t : all)
        if (t.c == 1) facets.push_back(t);
    return facets;
}

/// Same list as horn_list(n), generated without evaluating any coefficient
/// at cardinality p: a triple is admitted by weight balance plus the
/// lower-cardinality triple inequalities over ambient size p, applied to the
/// integer diagram spectra. The recursion bottoms out at p = 1, where weight
/// balance alone decides. Coefficients on the returned triples are filled in
/// afterwards as bookkeeping; a mismatch with the admissibility decision
/// throws, since it would mean the two routes disagree.
inline std::vector<HornTriple> horn_list_recursive(int n) {
    if (n < 1) throw std::invalid_argument("ambient size must be >= 1");
    auto& cache = detail::horn_cache();
    {
        std::shared_lock lock(cache.mutex);
        if (auto it = cache.recursive.find(n); it != cache.recursive.end()) return it->second;
    }

    std::vector<HornTriple> all;
    for (int p = 1; p < n; ++p) {
        // Admissibility constraints for cardinality p live over ambient
        // size p and strictly smaller cardinality.
        std::vector<std::array<std::vector<int>, 3>> constraints;
        if (p >= 2) {
            for (const auto& t : horn_list_recursive(p))
                constraints.push_back({t.I.elements(), t.J.elements(), t.K.elements()});
        }
        auto subs = detail::subsets(n, p);
        std::vector<std::vector<long long>> diag;
        std::vector<long long> weight;
        diag.reserve(subs.size());
        for (const auto& s : subs) {
            diag.push_back(detail::padded_diagram(s));
            long long w = 0;
            for (long long v : diag.back()) w += v;
            weight.push_back(w);
        }
        auto pick = [](const std::vector<long long>& vals, const std::vector<int>& idx) {
            long long s = 0;
            for (int i : idx) s += vals[static_cast<std::size_t>(i - 1)];
            return s;
        };
        for (std::size_t i = 0; i < subs.size(); ++i)
            for (std::size_t j = 0; j < subs.size(); ++j)
                for (std::size_t k = 0; k < subs.size(); ++k) {
                    if (weight[i] + weight[j] != weight[k]) continue;
                    bool ok = true;
                    for (const auto& c : constraints) {
                        if (pick(diag[k], c[2]) > pick(diag[i], c[0]) + pick(diag[j], c[1])) {
                            ok = false;
                            break;
                        }
                    }
                    if (!ok) continue;
                    Multiplicity c = lr_coefficient(
                        partition_of_subset(SchubertIndex(n, subs[i])),
                        partition_of_subset(SchubertIndex(n, subs[j])),
                        partition_of_subset(SchubertIndex(n, subs[k])));
                    if (c == 0)
                        throw std::logic_error(
                            "admissible triple has zero coefficient: routes disagree");
                    all.emplace_back(SchubertIndex(n, subs[i]), SchubertIndex(n, subs[j]),
                                     SchubertIndex(n, subs[k]), c);
                }
    }

    std::unique_lock lock(cache.mutex);
    cache.recursive.emplace(n, all);
    return all;
}

/// Violated or tightest constraint attached to a Verdict.
struct Witness {
    std::string kind;                   // "trace", "pairing", "horn", "multi", "quantum", "toric"
    std::vector<SchubertIndex> subsets; // left-hand side index sets, in argument order
    std::optional<SchubertIndex> K;     // right-hand side index set, when applicable
    int d = 0;                          // quantum degree, 0 otherwise
    Multiplicity c = 0;                 // coefficient of the defining triple, 0 if n/a
    double lhs = 0, rhs = 0;            // evaluated sides of the constraint

    std::string to_string() const {
        std::string s = kind;
        if (!subsets.empty()) {
            s += " (";
            for (std::size_t i = 0; i < subsets.size(); ++i) {
                if (i) s += ",";
                s += subsets[i].to_string();
            }
            if (K) s += ";" + K->to_string();
            if (d != 0) s += ";d=" + std::to_string(d);
            s += ")";
        }
        s += " lhs=" + std::to_string(lhs) + " rhs=" + std::to_string(rhs);
        return s;
    }
};

/// Feasibility answer. slack is the minimum over all checked constraints of
/// (rhs - lhs); equality constraints contribute -|deviation|. feasible iff
/// slack >= -tol, and an infeasible verdict always carries a witness.
struct Verdict {
    bool feasible = false;
    double slack = 0;
    std::optional<Witness> witness;
};

/// Whether gamma can be the spectrum of a sum of two Hermitian operators
/// with spectra alpha and beta. Checks the trace identity and, for every
/// listed triple (I,J,K), subset_sum(gamma,K) <= subset_sum(alpha,I) +
/// subset_sum(beta,J) + tol.
inline Verdict check_hermitian_sum(const Spectrum& alpha, const Spectrum& beta,
                                   const Spectrum& gamma, double tol = 1e-9,
                                   bool facets_only = false) {
    if (alpha.size() != beta.size() || alpha.size() != gamma.size())
        throw std::invalid_argument("spectra must have equal lengths");
    if (tol < 0) throw std::invalid_argument("tolerance must be nonnegative");
    const int n = static_cast<int>(alpha.size());

    Verdict v;
    v.slack = std::numeric_limits<double>::infinity();

    const double mismatch = std::abs(gamma.sum() - alpha.sum() - beta.sum());
    v.slack = -mismatch;
    if (mismatch > tol) {
        v.feasible = false;
        v.witness = Witness{"trace", {}, std::nullopt, 0, 0,
                            gamma.sum(), alpha.sum() + beta.sum()};
        return v;
    }

    for (const auto& t : horn_list(n, facets_only)) {
        const double lhs = subset_sum(gamma, t.K);
        const double rhs = subset_sum(alpha, t.I) + subset_sum(beta, t.J);
        v.slack = std::min(v.slack, rhs - lhs);
        if (lhs > rhs + tol) {
            v.feasible = false;
            v.witness = Witness{"horn", {t.I, t.J}, t.K, 0, t.c, lhs, rhs};
            return v;
        }
    }
    v.feasible = true;
    return v;
}

/// Whether Hermitian operators with the given spectra can sum to zero.
/// Two spectra force an exact pairing; three reduce to check_hermitian_sum;
/// more are handled by the iterated inequality system over nonzero
/// multi-factor coefficients (cross-validated numerically, not by the
/// two-route equivalence available at N <= 3).
inline Verdict check_zero_sum(const std::vector<Spectrum>& spectra, double tol = 1e-9) {
    if (spectra.size() < 2) throw std::invalid_argument("need at least two spectra");
    const std::size_t n = spectra[0].size();
    for (const auto& s : spectra)
        if (s.size() != n) throw std::invalid_argument("spectra must have equal lengths");
    if (tol < 0) throw std::invalid_argument("tolerance must be nonnegative");

    double total = 0;
    for (const auto& s : spectra) total += s.sum();
    if (std::abs(total) > tol) {
        Verdict v;
        v.feasible = false;
        v.slack = -std::abs(total);
        v.witness = Witness{"trace", {}, std::nullopt, 0, 0, total, 0.0};
        return v;
    }

    if (spectra.size() == 2) {
        const Spectrum target = spectra[0].negated_reversed();
        double dev = 0;
        for (std::size_t i = 0; i < n; ++i)
            dev = std::max(dev, std::abs(spectra[1][i] - target[i]));
        Verdict v;
        v.feasible = dev <= tol;
        v.slack = -dev;
        if (!v.feasible)
            v.witness = Witness{"pairing", {}, std::nullopt, 0, 0, dev, 0.0};
        return v;
    }

    if (spectra.size() == 3)
        return check_hermitian_sum(spectra[0], spectra[1],
                                   spectra[2].negated_reversed(), tol);

    // N > 3: gamma plays the role of the negated last factor; an index
    // tuple constrains whenever the multi-factor coefficient is nonzero.
    const Spectrum gamma = spectra.back().negated_reversed();
    const std::size_t m = spectra.size() - 1;
    const int nn = static_cast<int>(n);
    Verdict v;
    v.feasible = true;
    v.slack = std::numeric_limits<double>::infinity();
    for (int p = 1; p < nn; ++p) {
        auto subs = detail::subsets(nn, p);
        std::vector<Partition> diag;
        diag.reserve(subs.size());
        for (const auto& s : subs) diag.push_back(partition_of_subset(SchubertIndex(nn, s)));

        std::vector<std::size_t> choice(m, 0);
        const std::size_t count = subs.size();
        while (true) {
            long long w = 0;
            for (std::size_t a = 0; a < m; ++a) w += diag[choice[a]].weight();
            for (std::size_t k = 0; k < count; ++k) {
                if (diag[k].weight() != w) continue;
                std::vector<Partition> factors;
                factors.reserve(m);
                for (std::size_t a = 0; a < m; ++a) factors.push_back(diag[choice[a]]);
                Multiplicity c = multi_lr(factors, diag[k]);
                if (c == 0) continue;
                double rhs = 0;
                std::vector<SchubertIndex> lhsSets;
                for (std::size_t a = 0; a < m; ++a) {
                    SchubertIndex idx(nn, subs[choice[a]]);
                    rhs += subset_sum(spectra[a], idx);
                    lhsSets.push_back(std::move(idx));
                }
                SchubertIndex Kidx(nn, subs[k]);
                const double lhs = subset_sum(gamma, Kidx);
                v.slack = std::min(v.slack, rhs - lhs);
                if (lhs > rhs + tol) {
                    v.feasible = false;
                    v.witness = Witness{"multi", lhsSets, Kidx, 0, c, lhs, rhs};
                    return v;
                }
            }
            std::size_t a = 0;
            while (a < m && ++choice[a] == count) choice[a++] = 0;
            if (a == m) break;
        }
    }
    return v;
}

/// Whether gamma can be the spectrum after adding a rank-one perturbation of
/// trace b >= 0 to a Hermitian operator with spectrum alpha: the entries must
/// interlace (gamma_1 >= alpha_1 >= gamma_2 >= ... >= gamma_n >= alpha_n) and
/// the traces must balance.
inline bool interlacing_check(const Spectrum& alpha, double b, const Spectrum& gamma,
                              double tol = 0.0) {
    if (alpha.size() != gamma.size()) return false;
    if (b < -tol) return false;
    if (std::abs(gamma.sum() - alpha.sum() - b) > tol) return false;
    const std::size_t n = alpha.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (gamma[i] < alpha[i] - tol) return false;
        if (i + 1 < n && alpha[i] < gamma[i + 1] - tol) return false;
    }
    return true;
}

enum class Stability { stable, semistable_only, unstable };

inline const char* to_string(Stability s) {
    switch (s) {
        case Stability::stable: return "stable";
        case Stability::semistable_only: return "semistable_only";
        case Stability::unstable: return "unstable";
    }
    return "unstable";
}

/// Stability classification with the tightest margin and the constraint
/// that attains it.
struct StabilityVerdict {
    Stability kind = Stability::unstable;
    double min_slack = 0;
    std::optional<Witness> witness;
};

/// Slope-stability test for a triple of filtrations with the given spectra.
/// For every triple (I,J,K) with nonzero diagram coefficient, the mean over
/// the p-dimensional position indexed by (dual(I), dual(J), K) is compared
/// with the global mean (1/n)(sum alpha + sum beta + sum gamma). All
/// strictly below: stable; none above within tol: semistable_only;
/// otherwise unstable.
inline StabilityVerdict toric_stability_check(const Spectrum& alpha, const Spectrum& beta,
                                              const Spectrum& gamma, double tol = 1e-9) {
    if (alpha.size() != beta.size() || alpha.size() != gamma.size())
        throw std::invalid_argument("spectra must have equal lengths");
    if (tol < 0) throw std::invalid_argument("tolerance must be nonnegative");
    const int n = static_cast<int>(alpha.size());
    const double mean = (alpha.sum() + beta.sum() + gamma.sum()) / n;

    StabilityVerdict out;
    out.min_slack = std::numeric_limits<double>::infinity();
    for (const auto& t : horn_list(n)) {
        const double lhs = (subset_sum(alpha, dual_subset(t.I)) +
                            subset_sum(beta, dual_subset(t.J)) + subset_sum(gamma, t.K)) /
                           t.p;
        const double slack = mean - lhs;
        if (slack < out.min_slack) {
            out.min_slack = slack;
            out.witness = Witness{"toric", {dual_subset(t.I), dual_subset(t.J)},
                                  t.K, 0, t.c, lhs, mean};
        }
    }
    if (out.min_slack > tol)
        out.kind = Stability::stable;
    else if (out.min_slack >= -tol)
        out.kind = Stability::semistable_only;
    else
        out.kind = Stability::unstable;
    return out;
}

/// Whether operators with the given singular spectra can multiply to the
/// identity. Each spectrum must be strictly positive with product of entries
/// within tol of 1; the question reduces to a zero sum of the elementwise
/// logarithms.
inline Verdict check_singular_product(const std::vector<Spectrum>& sigmas, double tol = 1e-9) {
    if (sigmas.size() < 2) throw std::invalid_argument("need at least two spectra");
    for (const auto& s : sigmas) {
        double prod = 1;
        for (double x : s.values()) {
            if (!(x > 0)) throw std::invalid_argument("singular values must be positive");
            prod *= x;
        }
        if (std::abs(prod - 1) > tol)
            throw std::invalid_argument("product of singular values must be 1 within tol");
    }
    std::vector<Spectrum> logs;
    logs.reserve(sigmas.size());
    for (const auto& s : sigmas) {
        std::vector<double> v(s.values());
        for (double& x : v) x = std::log(x);
        logs.emplace_back(std::move(v));
    }
    return check_zero_sum(logs, tol);
}

/// Density test for a list of conjugacy classes: the class dimensions must
/// sum to at least (n+1)(n-2) and the root-space codimensions to at least n.
inline bool simpson_density_check(const std::vector<long long>& class_dims,
                                  const std::vector<int>& root_codims, int n) {
    if (n < 2) throw std::invalid_argument("ambient size must be >= 2");
    if (class_dims.size() != root_codims.size() || class_dims.empty())
        throw std::invalid_argument("need matching nonempty dimension lists");
    long long dims = 0, roots = 0;
    for (long long d : class_dims) {
        if (d < 0) throw std::invalid_argument("class dimension must be nonnegative");
        dims += d;
    }
    for (int r : root_codims) {
        if (r < 0 || r > n) throw std::invalid_argument("root codimension must be in [0, n]");
        roots += r;
    }
    return dims >= static_cast<long long>(n + 1) * (n - 2) && roots >= n;
}

}  // namespace eigencone
