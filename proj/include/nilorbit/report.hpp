#pragma once

#include <sstream>
#include <string>

#include <json.hpp>

#include "nilorbit/classify.hpp"
#include "nilorbit/coadjoint.hpp"
#include "nilorbit/lie_algebra.hpp"

namespace nilorbit {

using Json = nlohmann::ordered_json;

struct InvariantsReport {
    std::string name;
    InvariantFingerprint fp;
    ClassTVerdict class_t_verdict;
};

inline InvariantsReport build_invariants_report(const LieAlgebra& L,
                                                const ClassTOptions& opts = {}) {
    InvariantsReport r;
    r.name = L.name();
    r.fp.dim = L.dim();
    r.fp.lcs_dims = L.lcs_dims();
    r.fp.center_dim = L.center().dim();
    r.fp.index = index(L);
    r.fp.real_rank = L.dim() - r.fp.lcs_dims[1];
    r.fp.two_step = r.fp.lcs_dims.size() <= 3;
    r.class_t_verdict = class_t(L, opts);
    r.fp.class_t_status = r.class_t_verdict.status;
    return r;
}

inline Json class_t_json(const ClassTVerdict& v) {
    Json j;
    j["status"] = to_string(v.status);
    if (v.witness) {
        Json w = Json::array();
        for (const Rational& q : *v.witness) w.push_back(q.str());
        j["witness"] = w;
    }
    if (v.certificate) j["certificate"] = to_string(*v.certificate);
    return j;
}

/// The fixed report schema: {"name", "dim", "lcs_dims", "center_dim",
/// "index", "real_rank", "two_step", "class_t"}.
inline Json invariants_json(const InvariantsReport& r) {
    Json j;
    j["name"] = r.name;
    j["dim"] = r.fp.dim;
    j["lcs_dims"] = r.fp.lcs_dims;
    j["center_dim"] = r.fp.center_dim;
    j["index"] = r.fp.index;
    j["real_rank"] = r.fp.real_rank;
    j["two_step"] = r.fp.two_step;
    j["class_t"] = class_t_json(r.class_t_verdict);
    return j;
}

inline std::string covector_str(const Covector& xi) {
    std::string s;
    for (std::size_t i = 0; i < xi.size(); ++i) {
        if (i) s += ", ";
        s += xi[i].str();
    }
    return s;
}

inline std::string class_t_text(const ClassTVerdict& v) {
    switch (v.status) {
        case ClassTStatus::Holds:
            return "Holds (" + to_string(*v.certificate) + ")";
        case ClassTStatus::Fails:
            return "Fails (witness: " + covector_str(*v.witness) + ")";
        case ClassTStatus::Unknown:
            return "Unknown (samples tried: " + std::to_string(v.samples_tried) + ")";
    }
    return "";
}

inline std::string invariants_text(const InvariantsReport& r) {
    std::ostringstream os;
    os << "name: " << r.name << "\n";
    os << "dim: " << r.fp.dim << "\n";
    os << "lcs_dims:";
    for (std::size_t d : r.fp.lcs_dims) os << " " << d;
    os << "\n";
    os << "center_dim: " << r.fp.center_dim << "\n";
    os << "index: " << r.fp.index << "\n";
    os << "real_rank: " << r.fp.real_rank << "\n";
    os << "two_step: " << (r.fp.two_step ? "true" : "false") << "\n";
    os << "class_t: " << class_t_text(r.class_t_verdict) << "\n";
    return os.str();
}

inline Json compare_json(const RigidityReport& r) {
    Json j;
    j["same_rr"] = r.same_rr;
    j["same_index"] = r.same_index;
    j["parity_obstruction"] = r.parity_obstruction;
    j["separating_invariants"] = r.separating_invariants;
    j["verdict"] = to_string(r.verdict);
    return j;
}

inline std::string compare_text(const RigidityReport& r) {
    std::ostringstream os;
    os << "same_rr: " << (r.same_rr ? "true" : "false") << "\n";
    os << "same_index: " << (r.same_index ? "true" : "false") << "\n";
    os << "parity_obstruction: " << (r.parity_obstruction ? "true" : "false") << "\n";
    os << "separating_invariants:";
    for (const std::string& s : r.separating_invariants) os << " " << s;
    os << "\n";
    os << "verdict: " << to_string(r.verdict) << "\n";
    return os.str();
}

}  // namespace nilorbit
