// Command line front end for the eigencone library.
//
// Subcommands: lr, tensor, horn, check, sample. Exit code 0 means success
// (and, for decisions, feasible/stable/all samples passed), 1 means
// infeasible/unstable/failed samples, 2 means malformed input, 3 means an
// internal numerical failure. Identical argv and seed produce identical
// stdout bytes; warnings go to stderr.
//
// Spectra are written as comma-separated decimals on the command line, or
// as @path where the file holds a JSON array of arrays (each inner array
// one spectrum). Partitions are comma-separated nonnegative integers; "0"
// denotes the empty partition. Ordering is validated, never silently fixed.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <eigencone/eigencone.hpp>

namespace ec = eigencone;
using nlohmann::json;

namespace {

// Input problems detected past argv parsing. Mapped to exit code 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

double parse_double(const std::string& s) {
    if (s.empty()) throw InputError("empty numeric field");
    std::size_t idx = 0;
    double v = 0;
    try {
        v = std::stod(s, &idx);
    } catch (const std::exception&) {
        throw InputError("not a number: '" + s + "'");
    }
    if (idx != s.size()) throw InputError("trailing junk in number: '" + s + "'");
    return v;
}

int parse_int(const std::string& s) {
    if (s.empty()) throw InputError("empty integer field");
    std::size_t idx = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &idx);
    } catch (const std::exception&) {
        throw InputError("not an integer: '" + s + "'");
    }
    if (idx != s.size()) throw InputError("trailing junk in integer: '" + s + "'");
    if (v < -1000000 || v > 1000000) throw InputError("integer out of range: '" + s + "'");
    return static_cast<int>(v);
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    for (const std::string& f : split_commas(s)) out.push_back(parse_int(f));
    return out;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw InputError("bad JSON in " + path + ": " + e.what());
    }
    return j;
}

// A @path file holds either one spectrum (flat array) or several (array of
// arrays); a plain argument is one comma-separated spectrum.
std::vector<std::vector<double>> parse_spectrum_arg(const std::string& arg) {
    if (!arg.empty() && arg[0] == '@') {
        json j = load_json_file(arg.substr(1));
        if (!j.is_array() || j.empty())
            throw InputError("spectrum file must hold a nonempty JSON array");
        std::vector<std::vector<double>> out;
        if (j[0].is_array()) {
            for (const json& row : j) {
                if (!row.is_array()) throw InputError("mixed array shapes in spectrum file");
                out.push_back(row.get<std::vector<double>>());
            }
        } else {
            out.push_back(j.get<std::vector<double>>());
        }
        return out;
    }
    std::vector<double> vals;
    for (const std::string& f : split_commas(arg)) vals.push_back(parse_double(f));
    return {vals};
}

ec::Spectrum one_spectrum(const std::string& arg, const char* name) {
    std::vector<std::vector<double>> rows = parse_spectrum_arg(arg);
    if (rows.size() != 1)
        throw InputError(std::string(name) + " takes exactly one spectrum");
    try {
        return ec::Spectrum(std::move(rows[0]));
    } catch (const std::invalid_argument& e) {
        throw InputError(std::string(name) + ": " + e.what());
    }
}

std::vector<ec::Spectrum> many_spectra(const std::vector<std::string>& args) {
    std::vector<ec::Spectrum> out;
    for (const std::string& a : args) {
        for (std::vector<double>& row : parse_spectrum_arg(a)) {
            try {
                out.emplace_back(std::move(row));
            } catch (const std::invalid_argument& e) {
                throw InputError(std::string("spectrum: ") + e.what());
            }
        }
    }
    return out;
}

ec::Partition parse_partition(const std::string& s, const char* name) {
    try {
        return ec::Partition(parse_int_list(s));
    } catch (const std::invalid_argument& e) {
        throw InputError(std::string(name) + ": " + e.what());
    }
}

json envelope(const std::string& command, json inputs, json result) {
    return json{{"schema", "eigencone/response/v1"},
                {"version", ec::version_string},
                {"command", command},
                {"inputs", std::move(inputs)},
                {"result", std::move(result)}};
}

void emit(bool json_mode, const std::string& command, json inputs, json result,
          const std::string& human) {
    if (json_mode)
        std::cout << envelope(command, std::move(inputs), std::move(result)).dump(2) << "\n";
    else
        std::cout << human;
}

std::string human_verdict(const ec::Verdict& v) {
    std::string s = v.feasible ? "feasible" : "infeasible";
    s += " slack=" + fmt(v.slack);
    if (v.witness) s += " " + v.witness->to_string();
    return s + "\n";
}

std::string human_report(const ec::SampleReport& r) {
    std::ostringstream os;
    os << "check=" << r.check << " trials=" << r.trials << " seed=" << r.seed
       << " tol=" << fmt(r.tol) << " all_pass=" << (r.all_pass ? "true" : "false")
       << " worst_slack=" << fmt(r.worst_slack) << "\n";
    for (const ec::SampleFailure& f : r.failures) {
        os << "failure trial=" << f.trial << " seed=" << f.seed << " spectrum=";
        const std::vector<double>& vals = f.spectrum;
        for (std::size_t i = 0; i < vals.size(); ++i) {
            if (i) os << ",";
            os << fmt(vals[i]);
        }
        os << "\n";
    }
    return os.str();
}

struct Options {
    bool json = false;
    double tol = 1e-9;       // exact checks
    double tol_sum = 1e-8;   // sample sum
    double tol_prod = 1e-7;  // sample product and singular
    std::uint64_t seed = 0;
    std::uint64_t trials = 1000;
    unsigned jobs = 1;
    bool facets_only = false;
    bool recursive = false;

    std::string alpha, beta, gamma, u, v, w;
    std::vector<std::string> spectra;
    std::string dims, codims;
    int n = 0;
    int rows = 0;
    double b = 0;
};

int verdict_exit(bool feasible) { return feasible ? 0 : 1; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral feasibility decisions for sums and products of matrices"};
    app.set_version_flag("--version", ec::version_string);
    app.require_subcommand(1);

    Options o;
    int exit_code = 0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_flag("--json", o.json, "emit a JSON response envelope");
    };
    auto add_tol = [&](CLI::App* sub, double& target) {
        sub->add_option("--tol", target, "numerical tolerance")->capture_default_str();
    };

    // lr: one structure constant.
    CLI::App* lr = app.add_subcommand("lr", "structure constant of a triple of partitions");
    add_common(lr);
    lr->add_option("--alpha", o.alpha, "first partition")->required();
    lr->add_option("--beta", o.beta, "second partition")->required();
    lr->add_option("--gamma", o.gamma, "product partition")->required();
    lr->callback([&] {
        ec::Partition a = parse_partition(o.alpha, "--alpha");
        ec::Partition b = parse_partition(o.beta, "--beta");
        ec::Partition g = parse_partition(o.gamma, "--gamma");
        ec::Multiplicity c = ec::lr_coefficient(a, b, g);
        emit(o.json, "lr", json{{"alpha", a}, {"beta", b}, {"gamma", g}},
             json{{"coefficient", c}}, std::to_string(c) + "\n");
    });

    // tensor: full decomposition with a row bound.
    CLI::App* tensor = app.add_subcommand("tensor", "decompose a product of two partitions");
    add_common(tensor);
    tensor->add_option("--alpha", o.alpha, "first partition")->required();
    tensor->add_option("--beta", o.beta, "second partition")->required();
    tensor->add_option("--rows", o.rows, "maximum number of rows")->required();
    tensor->callback([&] {
        ec::Partition a = parse_partition(o.alpha, "--alpha");
        ec::Partition b = parse_partition(o.beta, "--beta");
        std::vector<std::pair<ec::Partition, ec::Multiplicity>> terms;
        try {
            terms = ec::tensor_decompose(a, b, o.rows);
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
        json jterms = json::array();
        std::ostringstream human;
        for (const auto& [shape, mult] : terms) {
            jterms.push_back(json{{"gamma", shape}, {"multiplicity", mult}});
            human << shape.to_string() << " " << mult << "\n";
        }
        emit(o.json, "tensor",
             json{{"alpha", a}, {"beta", b}, {"rows", o.rows}},
             json{{"terms", jterms}}, human.str());
    });

    // horn: the full inequality list for one ambient size.
    CLI::App* horn = app.add_subcommand("horn", "list the defining inequalities for size n");
    add_common(horn);
    horn->add_option("--n", o.n, "ambient size")->required();
    horn->add_flag("--facets-only", o.facets_only, "keep only coefficient-one triples");
    horn->add_flag("--recursive", o.recursive, "use the recursive generator");
    horn->callback([&] {
        if (o.n < 1 || o.n > 12) throw InputError("--n must be in [1, 12]");
        if (o.n > 8)
            std::cerr << "warning: n=" << o.n
                      << " enumerates a very large list; expect a long run\n";
        std::vector<ec::HornTriple> triples;
        if (o.recursive) {
            triples = ec::horn_list_recursive(o.n);
            if (o.facets_only) {
                std::erase_if(triples, [](const ec::HornTriple& t) { return t.c != 1; });
            }
        } else {
            triples = ec::horn_list(o.n, o.facets_only);
        }
        std::ostringstream human;
        human << "n=" << o.n << " count=" << triples.size() << "\n";
        for (const ec::HornTriple& t : triples) {
            human << "p=" << t.p << " I=" << t.I.to_string() << " J=" << t.J.to_string()
                  << " K=" << t.K.to_string() << " c=" << t.c << "\n";
        }
        emit(o.json, "horn",
             json{{"n", o.n}, {"facets_only", o.facets_only}, {"recursive", o.recursive}},
             json{{"count", triples.size()}, {"triples", triples}}, human.str());
    });

    // check: exact feasibility and stability decisions.
    CLI::App* check = app.add_subcommand("check", "decide a spectral feasibility question");
    check->require_subcommand(1);

    CLI::App* hermitian = check->add_subcommand("hermitian", "eigenvalues of a Hermitian sum");
    add_common(hermitian);
    add_tol(hermitian, o.tol);
    hermitian->add_option("--alpha", o.alpha, "first summand spectrum")->required();
    hermitian->add_option("--beta", o.beta, "second summand spectrum")->required();
    hermitian->add_option("--gamma", o.gamma, "candidate sum spectrum")->required();
    hermitian->add_flag("--facets-only", o.facets_only, "test only coefficient-one triples");
    hermitian->callback([&] {
        ec::Spectrum a = one_spectrum(o.alpha, "--alpha");
        ec::Spectrum b = one_spectrum(o.beta, "--beta");
        ec::Spectrum g = one_spectrum(o.gamma, "--gamma");
        ec::Verdict v = ec::check_hermitian_sum(a, b, g, o.tol, o.facets_only);
        emit(o.json, "check.hermitian",
             json{{"alpha", a}, {"beta", b}, {"gamma", g}, {"tol", o.tol},
                  {"facets_only", o.facets_only}},
             json(v), human_verdict(v));
        exit_code = verdict_exit(v.feasible);
    });

    CLI::App* unitary = check->add_subcommand("unitary", "angles of a unitary product");
    add_common(unitary);
    add_tol(unitary, o.tol);
    unitary->add_option("--u", o.u, "first factor angles")->required();
    unitary->add_option("--v", o.v, "second factor angles")->required();
    unitary->add_option("--w", o.w, "candidate product angles")->required();
    unitary->callback([&] {
        ec::Spectrum a = one_spectrum(o.u, "--u");
        ec::Spectrum b = one_spectrum(o.v, "--v");
        ec::Spectrum c = one_spectrum(o.w, "--w");
        ec::Verdict v;
        try {
            v = ec::check_unitary_product(a, b, c, o.tol);
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
        emit(o.json, "check.unitary",
             json{{"u", a}, {"v", b}, {"w", c}, {"tol", o.tol}},
             json(v), human_verdict(v));
        exit_code = verdict_exit(v.feasible);
    });

    CLI::App* singular = check->add_subcommand("singular", "singular values of a matrix product");
    add_common(singular);
    add_tol(singular, o.tol);
    singular->add_option("--spectrum", o.spectra,
                         "factor singular spectra, last entry the candidate product "
                         "(repeatable, or @file with an array of arrays)")
        ->required();
    singular->callback([&] {
        std::vector<ec::Spectrum> sigmas = many_spectra(o.spectra);
        ec::Verdict v;
        try {
            v = ec::check_singular_product(sigmas, o.tol);
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
        emit(o.json, "check.singular",
             json{{"spectra", sigmas}, {"tol", o.tol}},
             json(v), human_verdict(v));
        exit_code = verdict_exit(v.feasible);
    });

    CLI::App* interlace = check->add_subcommand("interlace", "rank-one update admissibility");
    add_common(interlace);
    add_tol(interlace, o.tol);
    interlace->add_option("--alpha", o.alpha, "starting spectrum")->required();
    interlace->add_option("--b", o.b, "trace of the rank-one update")->required();
    interlace->add_option("--gamma", o.gamma, "candidate updated spectrum")->required();
    interlace->callback([&] {
        ec::Spectrum a = one_spectrum(o.alpha, "--alpha");
        ec::Spectrum g = one_spectrum(o.gamma, "--gamma");
        bool ok = ec::interlacing_check(a, o.b, g, o.tol);
        emit(o.json, "check.interlace",
             json{{"alpha", a}, {"b", o.b}, {"gamma", g}, {"tol", o.tol}},
             json{{"admissible", ok}},
             std::string(ok ? "admissible" : "not-admissible") + "\n");
        exit_code = verdict_exit(ok);
    });

    CLI::App* stability = check->add_subcommand("stability", "slope stability of a filtration triple");
    add_common(stability);
    add_tol(stability, o.tol);
    stability->add_option("--alpha", o.alpha, "first filtration spectrum")->required();
    stability->add_option("--beta", o.beta, "second filtration spectrum")->required();
    stability->add_option("--gamma", o.gamma, "third filtration spectrum")->required();
    stability->callback([&] {
        ec::Spectrum a = one_spectrum(o.alpha, "--alpha");
        ec::Spectrum b = one_spectrum(o.beta, "--beta");
        ec::Spectrum g = one_spectrum(o.gamma, "--gamma");
        ec::StabilityVerdict v = ec::toric_stability_check(a, b, g, o.tol);
        std::string kind = ec::to_string(v.kind);
        std::string human = kind + " min_slack=" + fmt(v.min_slack);
        if (v.witness) human += " " + v.witness->to_string();
        emit(o.json, "check.stability",
             json{{"alpha", a}, {"beta", b}, {"gamma", g}, {"tol", o.tol}},
             json(v), human + "\n");
        exit_code = v.kind == ec::Stability::unstable ? 1 : 0;
    });

    CLI::App* zero_sum = check->add_subcommand("zero-sum", "traceless sum reaching zero");
    add_common(zero_sum);
    add_tol(zero_sum, o.tol);
    zero_sum->add_option("--spectrum", o.spectra,
                         "summand spectra (repeatable, or @file with an array of arrays)")
        ->required();
    zero_sum->callback([&] {
        std::vector<ec::Spectrum> spectra = many_spectra(o.spectra);
        ec::Verdict v;
        try {
            v = ec::check_zero_sum(spectra, o.tol);
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
        emit(o.json, "check.zero-sum",
             json{{"spectra", spectra}, {"tol", o.tol}},
             json(v), human_verdict(v));
        exit_code = verdict_exit(v.feasible);
    });

    CLI::App* simpson = check->add_subcommand("simpson", "density of a conjugacy-class product");
    add_common(simpson);
    simpson->add_option("--dims", o.dims, "class dimensions, comma separated")->required();
    simpson->add_option("--codims", o.codims, "root-space codimensions, comma separated")
        ->required();
    simpson->add_option("--n", o.n, "ambient size")->required();
    simpson->callback([&] {
        std::vector<int> d = parse_int_list(o.dims);
        std::vector<long long> dims(d.begin(), d.end());
        std::vector<int> codims = parse_int_list(o.codims);
        bool dense = false;
        try {
            dense = ec::simpson_density_check(dims, codims, o.n);
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
        emit(o.json, "check.simpson",
             json{{"dims", dims}, {"codims", codims}, {"n", o.n}},
             json{{"dense", dense}},
             std::string(dense ? "dense" : "not-dense") + "\n");
        exit_code = verdict_exit(dense);
    });

    // sample: randomized cross-checks against the exact decisions.
    CLI::App* sample = app.add_subcommand("sample", "randomized verification of a decision");
    sample->require_subcommand(1);

    auto add_sampling = [&](CLI::App* sub, double& tol_target) {
        add_common(sub);
        add_tol(sub, tol_target);
        sub->add_option("--trials", o.trials, "number of random trials")->capture_default_str();
        sub->add_option("--seed", o.seed, "random seed")->capture_default_str();
        sub->add_option("--jobs", o.jobs, "worker threads")->capture_default_str();
    };

    CLI::App* ssum = sample->add_subcommand("sum", "random Hermitian sums");
    add_sampling(ssum, o.tol_sum);
    ssum->add_option("--alpha", o.alpha, "first summand spectrum")->required();
    ssum->add_option("--beta", o.beta, "second summand spectrum")->required();
    ssum->callback([&] {
        ec::Spectrum a = one_spectrum(o.alpha, "--alpha");
        ec::Spectrum b = one_spectrum(o.beta, "--beta");
        ec::SampleReport r;
        try {
            r = ec::monte_carlo_sum(a, b, o.trials, o.seed, o.tol_sum, o.jobs);
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
        emit(o.json, "sample.sum",
             json{{"alpha", a}, {"beta", b}, {"trials", o.trials}, {"seed", o.seed},
                  {"tol", o.tol_sum}},
             json(r), human_report(r));
        exit_code = verdict_exit(r.all_pass);
    });

    CLI::App* sprod = sample->add_subcommand("product", "random unitary products");
    add_sampling(sprod, o.tol_prod);
    sprod->add_option("--u", o.u, "first factor angles")->required();
    sprod->add_option("--v", o.v, "second factor angles")->required();
    sprod->callback([&] {
        ec::Spectrum a = one_spectrum(o.u, "--u");
        ec::Spectrum b = one_spectrum(o.v, "--v");
        ec::SampleReport r;
        try {
            r = ec::monte_carlo_product(a, b, o.trials, o.seed, o.tol_prod, o.jobs);
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
        emit(o.json, "sample.product",
             json{{"u", a}, {"v", b}, {"trials", o.trials}, {"seed", o.seed},
                  {"tol", o.tol_prod}},
             json(r), human_report(r));
        exit_code = verdict_exit(r.all_pass);
    });

    CLI::App* ssing = sample->add_subcommand("singular", "random matrix products");
    add_sampling(ssing, o.tol_prod);
    ssing->add_option("--spectrum", o.spectra,
                      "factor singular spectra (repeatable, or @file with an array of arrays)")
        ->required();
    ssing->callback([&] {
        std::vector<ec::Spectrum> sigmas = many_spectra(o.spectra);
        ec::SampleReport r;
        try {
            r = ec::monte_carlo_singular(sigmas, o.trials, o.seed, o.tol_prod, o.jobs);
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
        emit(o.json, "sample.singular",
             json{{"spectra", sigmas}, {"trials", o.trials}, {"seed", o.seed},
                  {"tol", o.tol_prod}},
             json(r), human_report(r));
        exit_code = verdict_exit(r.all_pass);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return exit_code;
}
