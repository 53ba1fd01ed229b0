// A short tour of the library: one exact decision per problem family,
// followed by a randomized cross-check of each answer.

#include <cstdio>

#include <eigencone/eigencone.hpp>

namespace ec = eigencone;

int main() {
    // Eigenvalues of a sum of two Hermitian matrices. (2,1,0) + (1,1,0) can
    // reach (3,2,0) but not (4,0,0): the largest eigenvalue of the sum is
    // bounded by the sum of the largest eigenvalues.
    ec::Spectrum alpha{2, 1, 0}, beta{1, 1, 0};
    ec::Verdict yes = ec::check_hermitian_sum(alpha, beta, ec::Spectrum{3, 2, 0});
    ec::Verdict no = ec::check_hermitian_sum(alpha, beta, ec::Spectrum{4, 0, 0});
    std::printf("sum (3,2,0): %s  slack=%.3f\n", yes.feasible ? "feasible" : "infeasible",
                yes.slack);
    std::printf("sum (4,0,0): %s  violated: %s\n", no.feasible ? "feasible" : "infeasible",
                no.witness ? no.witness->to_string().c_str() : "-");

    // The same question asked of random matrices with those spectra. Every
    // sampled sum must land inside the region the inequalities carve out.
    ec::SampleReport r = ec::monte_carlo_sum(alpha, beta, 2000, 42);
    std::printf("random sums: %llu trials, all inside: %s, worst slack=%.6f\n",
                static_cast<unsigned long long>(r.trials), r.all_pass ? "yes" : "no",
                r.worst_slack);

    // Eigenvalue angles of a product of two special unitary matrices. For
    // 2x2 factors with angles (1/4, -1/4) the product can reach any angle
    // pair (c, -c), including the tight corner c = 1/2.
    ec::Spectrum u{0.25, -0.25};
    ec::Verdict corner = ec::check_unitary_product(u, u, ec::Spectrum{0.5, -0.5});
    std::printf("product (1/2,-1/2): %s  slack=%.6f\n",
                corner.feasible ? "feasible" : "infeasible", corner.slack);

    ec::SampleReport p = ec::monte_carlo_product(u, u, 2000, 42);
    std::printf("random products: all inside: %s, worst slack=%.6f\n",
                p.all_pass ? "yes" : "no", p.worst_slack);

    // Singular values of a matrix product, checked on the logarithmic scale.
    ec::Spectrum sigma{2.0, 0.5};
    ec::Verdict sv = ec::check_singular_product({sigma, sigma, ec::Spectrum{4.0, 0.25}});
    std::printf("singular (4,1/4): %s  slack=%.6f\n",
                sv.feasible ? "feasible" : "infeasible", sv.slack);
    return 0;
}
