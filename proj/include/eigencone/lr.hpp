#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "eigencone/partition.hpp"

namespace eigencone {

/// Nonnegative 64-bit multiplicity. Arithmetic that would wrap must go
/// through the checked helpers below, which throw instead of wrapping.
using Multiplicity = std::uint64_t;

inline Multiplicity checked_add(Multiplicity a, Multiplicity b) {
    Multiplicity r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("multiplicity addition overflow");
    return r;
}

inline Multiplicity checked_mul(Multiplicity a, Multiplicity b) {
    Multiplicity r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("multiplicity multiplication overflow");
    return r;
}

namespace detail {

/// Counts fillings of the skew shape gamma/alpha with content beta such that
/// rows weakly increase left to right, columns strictly increase top to
/// bottom, and the reading word (right to left within a row, rows top to
/// bottom) is a lattice word. Cells are visited in reading order, so the
/// lattice condition can be enforced incrementally: symbol s may be placed
/// only while count[s] < count[s-1].
inline Multiplicity count_lattice_fillings(const Partition& alpha,
                                           const Partition& beta,
                                           const Partition& gamma) {
    const int rows = static_cast<int>(gamma.size());
    const int m = static_cast<int>(beta.size());

    // Cell list in reading order plus the structural neighbours needed for
    // the row and column constraints.
    struct Cell {
        int row, col;
        int right;  // index of cell (row, col+1) in this list, -1 if none
        int up;     // index of cell (row-1, col) in this list, -1 if none
    };
    std::vector<Cell> cells;
    std::vector<std::vector<int>> index_of(static_cast<std::size_t>(rows));
    for (int r = 0; r < rows; ++r) {
        index_of[static_cast<std::size_t>(r)].assign(
            static_cast<std::size_t>(gamma.part(static_cast<std::size_t>(r))), -1);
        for (int c = gamma.part(static_cast<std::size_t>(r)) - 1;
             c >= alpha.part(static_cast<std::size_t>(r)); --c) {
            Cell cell{r, c, -1, -1};
            if (c + 1 < gamma.part(static_cast<std::size_t>(r)))
                cell.right = index_of[static_cast<std::size_t>(r)][static_cast<std::size_t>(c + 1)];
            if (r > 0 && c >= alpha.part(static_cast<std::size_t>(r - 1)))
                cell.up = index_of[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)];
            index_of[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                static_cast<int>(cells.size());
            cells.push_back(cell);
        }
    }

    std::vector<int> symbol(cells.size(), 0);
    std::vector<int> count(static_cast<std::size_t>(m) + 1, 0);
    Multiplicity total = 0;

    auto fill = [&](auto&& self, std::size_t k) -> void {
        if (k == cells.size()) {
            total = checked_add(total, 1);
            return;
        }
        const Cell& cell = cells[k];
        const int hi = cell.right >= 0 ? symbol[static_cast<std::size_t>(cell.right)] : m;
        const int lo = cell.up >= 0 ? symbol[static_cast<std::size_t>(cell.up)] + 1 : 1;
        for (int s = lo; s <= hi; ++s) {
            if (count[static_cast<std::size_t>(s)] >= beta.part(static_cast<std::size_t>(s - 1)))
                continue;
            if (s > 1 && count[static_cast<std::size_t>(s)] >= count[static_cast<std::size_t>(s - 1)])
                continue;
            symbol[k] = s;
            ++count[static_cast<std::size_t>(s)];
            self(self, k + 1);
            --count[static_cast<std::size_t>(s)];
        }
    };
    fill(fill, 0);
    return total;
}

struct LrCache {
    std::shared_mutex mutex;
    std::map<std::tuple<Partition, Partition, Partition>, Multiplicity> table;
};

inline LrCache& lr_cache() {
    static LrCache cache;
    return cache;
}

}  // namespace detail

/// Multiplicity of gamma in the product of alpha and beta. Zero unless
/// |gamma| = |alpha| + |beta| and gamma contains both factors. Results are
/// memoized; the cache allows concurrent readers and serializes insertion.
inline Multiplicity lr_coefficient(const Partition& alpha, const Partition& beta,
                                   const Partition& gamma) {
    if (gamma.weight() != alpha.weight() + beta.weight()) return 0;
    if (!contains(gamma, alpha) || !contains(gamma, beta)) return 0;
    if (beta.empty()) return gamma == alpha ? 1 : 0;

    auto key = std::make_tuple(alpha, beta, gamma);
    auto& cache = detail::lr_cache();
    {
        std::shared_lock lock(cache.mutex);
        if (auto it = cache.table.find(key); it != cache.table.end()) return it->second;
    }
    Multiplicity value = detail::count_lattice_fillings(alpha, beta, gamma);
    {
        std::unique_lock lock(cache.mutex);
        cache.table.emplace(std::move(key), value);
    }
    return value;
}

/// Full decomposition of the product of alpha and beta into components with
/// at most `rows` rows, as (gamma, multiplicity) pairs with multiplicity > 0,
/// ordered lexicographically descending by gamma.
inline std::vector<std::pair<Partition, Multiplicity>>
tensor_decompose(const Partition& alpha, const Partition& beta, int rows) {
    if (rows < 1) throw std::invalid_argument("row bound must be >= 1");
    if (static_cast<std::size_t>(rows) < alpha.size() ||
        static_cast<std::size_t>(rows) < beta.size())
        throw std::invalid_argument("row bound must cover both factors");

    const long long total = alpha.weight() + beta.weight();
    const int cap = alpha.part(0) + beta.part(0);
    std::vector<std::pair<Partition, Multiplicity>> out;
    std::vector<int> parts;

    // Enumerate candidate shapes of the right weight in lex descending
    // order; every component must contain both factors and cannot be wider
    // than the combined first rows.
    auto emit = [&](auto&& self, long long remaining, int maxPart, int depth) -> void {
        if (remaining == 0) {
            Partition gamma(parts);
            if (contains(gamma, alpha) && contains(gamma, beta)) {
                Multiplicity c = lr_coefficient(alpha, beta, gamma);
                if (c > 0) out.emplace_back(std::move(gamma), c);
            }
            return;
        }
        if (depth == rows) return;
        int hi = static_cast<int>(std::min<long long>(maxPart, remaining));
        // The remaining rows must be able to absorb the remaining weight.
        for (int v = hi; v >= 1; --v) {
            if (static_cast<long long>(v) * (rows - depth) < remaining) break;
            parts.push_back(v);
            self(self, remaining - v, v, depth + 1);
            parts.pop_back();
        }
    };
    emit(emit, total, cap, 0);
    return out;
}

/// Multiplicity of gamma in the product of all factors (at least one).
/// Folds pairwise decompositions, pruning intermediates not contained in
/// gamma; the final factor is matched against gamma directly.
inline Multiplicity multi_lr(const std::vector<Partition>& factors, const Partition& gamma) {
    if (factors.empty()) throw std::invalid_argument("need at least one factor");
    long long total = 0;
    for (const auto& f : factors) total += f.weight();
    if (total != gamma.weight()) return 0;
    if (factors.size() == 1) return factors[0] == gamma ? 1 : 0;

    const int rows = gamma.empty() ? 1 : static_cast<int>(gamma.size());
    std::map<Partition, Multiplicity> current{{factors[0], 1}};
    if (!contains(gamma, factors[0])) return 0;

    for (std::size_t k = 1; k + 1 < factors.size(); ++k) {
        std::map<Partition, Multiplicity> next;
        for (const auto& [mu, mult] : current) {
            int bound = std::max({rows, static_cast<int>(mu.size()),
                                  static_cast<int>(factors[k].size())});
            for (auto& [nu, c] : tensor_decompose(mu, factors[k], bound)) {
                if (!contains(gamma, nu)) continue;
                auto [it, inserted] = next.emplace(std::move(nu), 0);
                it->second = checked_add(it->second, checked_mul(mult, c));
            }
        }
        current = std::move(next);
        if (current.empty()) return 0;
    }

    Multiplicity result = 0;
    for (const auto& [mu, mult] : current)
        result = checked_add(result, checked_mul(mult, lr_coefficient(mu, factors.back(), gamma)));
    return result;
}

/// Whether gamma appears in alpha x beta, paired with the same question for
/// the N-scaled triple. The two answers agree for every N >= 1.
inline std::pair<bool, bool> saturation_pair(const Partition& alpha, const Partition& beta,
                                             const Partition& gamma, int N) {
    if (N < 1) throw std::invalid_argument("scale factor must be >= 1");
    bool base = lr_coefficient(alpha, beta, gamma) != 0;
    bool scaled = lr_coefficient(alpha.scaled(N), beta.scaled(N), gamma.scaled(N)) != 0;
    return {base, scaled};
}

}  // namespace eigencone
