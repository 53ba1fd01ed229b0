#pragma once

#include <json.hpp>

#include "eigencone/horn.hpp"
#include "eigencone/oracle.hpp"
#include "eigencone/partition.hpp"
#include "eigencone/quantum.hpp"
#include "eigencone/spectrum.hpp"

// JSON views of the library types, picked up by nlohmann::json through ADL.
// Layouts are versioned by the schema tags embedded in the CLI envelopes.

namespace eigencone {

inline void to_json(nlohmann::json& j, const Partition& p) { j = p.parts(); }

inline void to_json(nlohmann::json& j, const SchubertIndex& I) { j = I.elements(); }

inline void to_json(nlohmann::json& j, const Spectrum& s) { j = s.values(); }

inline void to_json(nlohmann::json& j, const HornTriple& t) {
    j = nlohmann::json{{"p", t.p}, {"n", t.I.n()}, {"I", t.I}, {"J", t.J}, {"K", t.K},
                       {"c", t.c}};
}

inline void to_json(nlohmann::json& j, const QuantumTerm& t) {
    j = nlohmann::json{{"K", t.K}, {"d", t.d}, {"c", t.c}};
}

inline void to_json(nlohmann::json& j, const Witness& w) {
    j = nlohmann::json{{"kind", w.kind}, {"subsets", w.subsets},
                       {"lhs", w.lhs},   {"rhs", w.rhs}};
    if (w.K) j["K"] = *w.K;
    if (w.d != 0) j["d"] = w.d;
    if (w.c != 0) j["c"] = w.c;
}

inline void to_json(nlohmann::json& j, const Verdict& v) {
    j = nlohmann::json{{"feasible", v.feasible}, {"slack", v.slack}};
    if (v.witness) j["witness"] = *v.witness;
}

inline void to_json(nlohmann::json& j, const StabilityVerdict& v) {
    j = nlohmann::json{{"kind", to_string(v.kind)}, {"min_slack", v.min_slack}};
    if (v.witness) j["witness"] = *v.witness;
}

inline void to_json(nlohmann::json& j, const UnitaryLift& l) {
    j = nlohmann::json{{"spectrum", l.spectrum}, {"boundary", l.boundary}};
}

inline void to_json(nlohmann::json& j, const SampleFailure& f) {
    j = nlohmann::json{{"trial", f.trial}, {"seed", f.seed}, {"spectrum", f.spectrum}};
}

inline void to_json(nlohmann::json& j, const SampleReport& r) {
    j = nlohmann::json{{"schema", "eigencone/sample-report/v1"},
                       {"check", r.check},
                       {"trials", r.trials},
                       {"seed", r.seed},
                       {"tol", r.tol},
                       {"all_pass", r.all_pass},
                       {"worst_slack", r.worst_slack},
                       {"failures", r.failures}};
}

}  // namespace eigencone
