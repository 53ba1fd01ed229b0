#pragma once

// Brute-force reference implementations used only by the tests. These follow
// a different route than the library: symmetric polynomials expanded from
// explicit tableau enumerations and decomposed by leading-term subtraction.
// Agreement between the two routes is what the tests certify, so nothing
// here may call into the library's counting code.

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "eigencone/partition.hpp"

namespace oracle {

using Exponent = std::vector<int>;
using Poly = std::map<Exponent, long long>;  // exponent vector -> coefficient

/// Monomial expansion of the Schur polynomial s_shape(x_1..x_m): enumerate
/// every semistandard tableau (rows weakly increase, columns strictly
/// increase, entries in 1..m) and collect content vectors.
inline Poly schur_polynomial(const std::vector<int>& shape, int m) {
    Poly out;
    if (shape.empty()) {
        out[Exponent(static_cast<std::size_t>(m), 0)] = 1;
        return out;
    }
    if (static_cast<int>(shape.size()) > m) return out;

    std::vector<std::vector<int>> t(shape.size());
    for (std::size_t r = 0; r < shape.size(); ++r)
        t[r].assign(static_cast<std::size_t>(shape[r]), 0);

    Exponent content(static_cast<std::size_t>(m), 0);
    auto fill = [&](auto&& self, std::size_t r, std::size_t c) -> void {
        if (r == t.size()) {
            auto [it, fresh] = out.emplace(content, 1);
            if (!fresh) ++it->second;
            return;
        }
        std::size_t nr = r, nc = c + 1;
        if (nc == t[r].size()) { nr = r + 1; nc = 0; }
        int lo = 1;
        if (c > 0) lo = std::max(lo, t[r][c - 1]);                     // row weak
        if (r > 0 && c < t[r - 1].size()) lo = std::max(lo, t[r - 1][c] + 1);  // column strict
        for (int v = lo; v <= m; ++v) {
            t[r][c] = v;
            ++content[static_cast<std::size_t>(v - 1)];
            self(self, nr, nc);
            --content[static_cast<std::size_t>(v - 1)];
        }
    };
    fill(fill, 0, 0);
    return out;
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            Exponent e(ea);
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            out[e] += ca * cb;
        }
    return out;
}

/// Decompose a symmetric polynomial in m variables into Schur polynomials by
/// peeling the lexicographically leading term, whose exponent is always a
/// partition with coefficient equal to the Schur multiplicity.
inline std::map<std::vector<int>, long long> schur_expand(Poly poly, int m) {
    std::map<std::vector<int>, long long> out;
    while (true) {
        while (!poly.empty() && poly.rbegin()->second == 0)
            poly.erase(std::prev(poly.end()));
        if (poly.empty()) break;
        const Exponent lead = poly.rbegin()->first;
        const long long coeff = poly.rbegin()->second;
        for (std::size_t i = 1; i < lead.size(); ++i)
            if (lead[i] > lead[i - 1])
                throw std::logic_error("leading exponent is not a partition");
        std::vector<int> shape;
        for (int v : lead)
            if (v > 0) shape.push_back(v);
        out[shape] += coeff;
        for (const auto& [e, c] : schur_polynomial(shape, m)) {
            auto it = poly.emplace(e, 0).first;
            it->second -= coeff * c;
            if (it->second == 0) poly.erase(it);
        }
    }
    return out;
}

inline std::vector<int> parts_of(const eigencone::Partition& p) {
    std::vector<int> v;
    for (std::size_t i = 0; i < p.size(); ++i) v.push_back(p.part(i));
    return v;
}

/// Full product decomposition s_alpha * s_beta via polynomial algebra, using
/// enough variables to keep every row count that can appear.
inline std::map<std::vector<int>, long long> brute_tensor(const eigencone::Partition& a,
                                                          const eigencone::Partition& b) {
    const int m = static_cast<int>(a.size() + b.size());
    const int mm = std::max(m, 1);
    Poly prod = poly_mul(schur_polynomial(parts_of(a), mm), schur_polynomial(parts_of(b), mm));
    return schur_expand(std::move(prod), mm);
}

inline long long brute_lr(const eigencone::Partition& a, const eigencone::Partition& b,
                          const eigencone::Partition& g) {
    auto table = brute_tensor(a, b);
    auto it = table.find(parts_of(g));
    return it == table.end() ? 0 : it->second;
}

}  // namespace oracle
