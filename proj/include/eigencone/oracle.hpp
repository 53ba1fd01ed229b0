#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "eigencone/eig.hpp"
#include "eigencone/horn.hpp"
#include "eigencone/quantum.hpp"
#include "eigencone/rng.hpp"
#include "eigencone/sampling.hpp"

namespace eigencone {

struct SampleFailure {
    std::uint64_t trial = 0;
    std::uint64_t seed = 0;             // substream seed reproducing this trial
    std::vector<double> spectrum;       // measured spectrum that failed the check
};

/// Outcome of a Monte-Carlo sampling run. worst_slack is the minimum verdict
/// slack seen over all trials: how close any sample came to violating a
/// constraint (negative means a violation occurred).
struct SampleReport {
    std::string check;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    double tol = 0;
    bool all_pass = false;
    double worst_slack = 0;
    std::vector<SampleFailure> failures;
};

namespace detail {

struct TrialOutcome {
    bool pass = false;
    double slack = 0;
    std::vector<double> spectrum;  // populated only on failure
};

/// Runs fn(trial) for trial in [0, trials), splitting the range into
/// contiguous blocks across jobs threads. Every trial derives its own RNG
/// substream from (seed, trial), so results are identical for any jobs
/// value; outcomes land in preallocated slots and are merged in trial order.
inline SampleReport run_trials(std::string check, std::uint64_t trials,
                               std::uint64_t seed, double tol, unsigned jobs,
                               const std::function<TrialOutcome(std::uint64_t, Rng&)>& fn) {
    if (trials == 0) throw std::invalid_argument("need at least one trial");
    jobs = std::clamp(jobs, 1u, 64u);
    if (jobs > trials) jobs = static_cast<unsigned>(trials);

    std::vector<TrialOutcome> slots(trials);
    std::vector<std::exception_ptr> errors(jobs);

    auto block = [&](unsigned t) {
        const std::uint64_t lo = trials * t / jobs;
        const std::uint64_t hi = trials * (t + 1) / jobs;
        try {
            for (std::uint64_t i = lo; i < hi; ++i) {
                Rng rng = Rng::substream(seed, i);
                slots[i] = fn(i, rng);
            }
        } catch (...) {
            errors[t] = std::current_exception();
        }
    };

    if (jobs == 1) {
        block(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(block, t);
        for (auto& th : pool) th.join();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    SampleReport report;
    report.check = std::move(check);
    report.trials = trials;
    report.seed = seed;
    report.tol = tol;
    report.all_pass = true;
    report.worst_slack = std::numeric_limits<double>::infinity();
    for (std::uint64_t i = 0; i < trials; ++i) {
        report.worst_slack = std::min(report.worst_slack, slots[i].slack);
        if (!slots[i].pass) {
            report.all_pass = false;
            report.failures.push_back(
                {i, Rng::substream_seed(seed, i), std::move(slots[i].spectrum)});
        }
    }
    return report;
}

}  // namespace detail

/// Samples sums A + B of random Hermitian matrices with the prescribed
/// spectra (independent eigenbases drawn from the rotation-invariant
/// distribution) and checks the measured spectrum of the sum against the
/// inequality system. Every sample must pass; failures are recorded with
/// the substream seed that reproduces them.
inline SampleReport monte_carlo_sum(const Spectrum& alpha, const Spectrum& beta,
                                    std::uint64_t trials, std::uint64_t seed,
                                    double tol = 1e-8, unsigned jobs = 1) {
    if (alpha.size() != beta.size())
        throw std::invalid_argument("spectra must have equal lengths");
    const std::size_t n = alpha.size();
    return detail::run_trials(
        "hermitian-sum", trials, seed, tol, jobs,
        [&, n](std::uint64_t, Rng& rng) {
            ComplexMatrix A = hermitian_with_spectrum(alpha, haar_unitary(n, rng));
            ComplexMatrix B = hermitian_with_spectrum(beta, haar_unitary(n, rng));
            Spectrum gamma = eig_hermitian((A + B).hermitized());
            Verdict v = check_hermitian_sum(alpha, beta, gamma, tol);
            return detail::TrialOutcome{v.feasible, v.slack,
                                        v.feasible ? std::vector<double>{} : gamma.values()};
        });
}

/// Samples products W = U V of random unitary matrices with the prescribed
/// normalized eigenvalue angles and checks the measured spectrum of W
/// against the degree-weighted inequality system.
inline SampleReport monte_carlo_product(const Spectrum& lambdaU, const Spectrum& lambdaV,
                                        std::uint64_t trials, std::uint64_t seed,
                                        double tol = 1e-7, unsigned jobs = 1) {
    if (lambdaU.size() != lambdaV.size())
        throw std::invalid_argument("spectra must have equal lengths");
    check_unitary_product(lambdaU, lambdaV, lambdaU, tol);  // validates normalization
    const std::size_t n = lambdaU.size();
    return detail::run_trials(
        "unitary-product", trials, seed, tol, jobs,
        [&, n](std::uint64_t, Rng& rng) {
            ComplexMatrix U = unitary_with_spectrum(lambdaU, haar_unitary(n, rng));
            ComplexMatrix V = unitary_with_spectrum(lambdaV, haar_unitary(n, rng));
            UnitaryLift lift = eig_unitary(U * V);
            Verdict v = check_unitary_product(lambdaU, lambdaV, lift.spectrum, tol);
            return detail::TrialOutcome{v.feasible, v.slack,
                                        v.feasible ? std::vector<double>{}
                                                   : lift.spectrum.values()};
        });
}

/// Samples products of random matrices A_i = U_i diag(sigma_i) V_i* with the
/// prescribed singular spectra and checks the measured singular spectrum of
/// the product against the multiplicative inequality system (applied to
/// logarithms).
inline SampleReport monte_carlo_singular(const std::vector<Spectrum>& sigmas,
                                         std::uint64_t trials, std::uint64_t seed,
                                         double tol = 1e-7, unsigned jobs = 1) {
    if (sigmas.size() < 2) throw std::invalid_argument("need at least two spectra");
    const std::size_t n = sigmas[0].size();
    for (const auto& s : sigmas) {
        if (s.size() != n) throw std::invalid_argument("spectra must have equal lengths");
        for (double x : s.values())
            if (!(x > 0)) throw std::invalid_argument("singular values must be positive");
    }
    return detail::run_trials(
        "singular-product", trials, seed, tol, jobs,
        [&, n](std::uint64_t, Rng& rng) {
            ComplexMatrix P = ComplexMatrix::identity(n);
            for (const auto& sig : sigmas) {
                ComplexMatrix U = haar_unitary(n, rng);
                ComplexMatrix V = haar_unitary(n, rng);
                ComplexMatrix UD(n);
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j) UD(i, j) = U(i, j) * sig[j];
                P = P * (UD * V.adjoint());
            }
            Spectrum s = singular_spectrum(P);
            std::vector<Spectrum> logs;
            logs.reserve(sigmas.size() + 1);
            for (const auto& sig : sigmas) {
                std::vector<double> v(sig.values());
                for (double& x : v) x = std::log(x);
                logs.emplace_back(std::move(v));
            }
            std::vector<double> ls(s.values());
            for (double& x : ls) x = std::log(std::max(x, 1e-300));
            logs.emplace_back(Spectrum(ls).negated_reversed());
            Verdict v = check_zero_sum(logs, tol);
            return detail::TrialOutcome{v.feasible, v.slack,
                                        v.feasible ? std::vector<double>{} : s.values()};
        });
}

}  // namespace eigencone
