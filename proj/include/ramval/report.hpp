#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ramval/invariants.hpp"
#include "ramval/kummer.hpp"

namespace ramval {

using Json = nlohmann::ordered_json;

struct OracleCheck {
    std::string name;
    std::string result; // "pass" (failures abort the pipeline instead)
    friend bool operator==(const OracleCheck& a, const OracleCheck& b) {
        return a.name == b.name && a.result == b.result;
    }
};

/// Full result of one scenario run. Everything that appears here is exact:
/// rationals serialize as "a/b" strings, never as floats.
struct Report {
    std::string scenario;
    std::string kind; // artin_schreier | tower_as | kummer_formula

    int degree = 0, e = 1, f = 1, d = 1, nu = 0;
    bool residue_separable = false;
    bool ostrowski_ok = false;
    std::optional<Rat> v_theta;
    ValueGroup vK, vL;

    std::optional<std::vector<std::optional<Rat>>> profile_values;
    std::optional<Rat> profile_sup;

    std::optional<RamificationReport> ram;
    std::optional<TowerReport> tower;
    std::vector<TraceReport> traces;
    std::optional<DifferentReport> diff;
    std::optional<NormReport> norm;

    std::optional<Rat> v_zeta_minus_1; // Kummer formula mode
    std::string kummer_case;

    std::vector<OracleCheck> oracle_summary;
    int samples = 0;
    std::uint64_t seed = 0;

    friend bool operator==(const Report& a, const Report& b) = default;
};

// ---------------------------------------------------------------------------
// JSON encoding

inline Json to_json(const Rat& r) { return r.str(); }
inline Rat rat_from_json(const Json& j) { return Rat::parse(j.get<std::string>()); }

inline Json to_json(const std::optional<Rat>& r) {
    if (!r) return "inf";
    return r->str();
}
inline std::optional<Rat> opt_rat_from_json(const Json& j) {
    auto s = j.get<std::string>();
    if (s == "inf") return std::nullopt;
    return Rat::parse(s);
}

inline Json to_json(const ValueGroup& g) {
    Json j;
    j["p"] = g.p();
    Json gens = Json::array();
    for (const auto& x : g.generators()) gens.push_back(x.str());
    j["generators"] = gens;
    j["divisible_coprime_to_p"] = g.divisible_coprime_to_p();
    return j;
}
inline ValueGroup value_group_from_json(const Json& j) {
    std::vector<Rat> gens;
    for (const auto& g : j.at("generators")) gens.push_back(Rat::parse(g.get<std::string>()));
    return ValueGroup(j.at("p").get<std::int64_t>(), std::move(gens),
                      j.at("divisible_coprime_to_p").get<bool>());
}

inline Json to_json(const FinalSegment& s) {
    Json j;
    j["bound"] = s.bound.str();
    j["attained"] = s.attained;
    j["group"] = to_json(s.group);
    return j;
}
inline FinalSegment final_segment_from_json(const Json& j) {
    return FinalSegment{Rat::parse(j.at("bound").get<std::string>()), j.at("attained").get<bool>(),
                        value_group_from_json(j.at("group"))};
}

inline Json to_json(const IdealDescriptor& d) {
    Json j;
    j["segment"] = to_json(d.segment);
    j["principal"] = d.principal;
    if (d.principal) j["generator_value"] = d.generator_value.str();
    return j;
}
inline IdealDescriptor ideal_from_json(const Json& j) {
    IdealDescriptor d;
    d.segment = final_segment_from_json(j.at("segment"));
    d.principal = j.at("principal").get<bool>();
    d.generator_value = d.principal ? Rat::parse(j.at("generator_value").get<std::string>())
                                    : d.segment.bound;
    return d;
}

inline Json to_json(const RamificationReport& r) {
    Json j;
    j["gamma"] = r.gamma.str();
    j["ideal"] = to_json(r.ideal);
    j["jump"] = to_json(r.jump);
    j["defect_case"] = r.defect_case;
    j["witness"] = r.witness;
    Json wv = Json::array();
    for (const auto& v : r.witness_values) wv.push_back(v.str());
    j["witness_values"] = wv;
    j["oracle_min"] = to_json(r.oracle_min);
    j["samples"] = r.samples_used;
    j["seed"] = r.seed;
    return j;
}
inline RamificationReport ram_from_json(const Json& j) {
    RamificationReport r;
    r.gamma = Rat::parse(j.at("gamma").get<std::string>());
    r.ideal = ideal_from_json(j.at("ideal"));
    r.jump = final_segment_from_json(j.at("jump"));
    r.defect_case = j.at("defect_case").get<bool>();
    r.witness = j.at("witness").get<std::string>();
    for (const auto& v : j.at("witness_values")) r.witness_values.push_back(Rat::parse(v.get<std::string>()));
    r.oracle_min = opt_rat_from_json(j.at("oracle_min"));
    r.samples_used = j.at("samples").get<int>();
    r.seed = j.at("seed").get<std::uint64_t>();
    return r;
}

inline Json to_json(const TraceReport& t) {
    Json j;
    j["z_value"] = t.z_value.str();
    j["ideal_in_K"] = to_json(t.ideal_in_K);
    j["formula"] = t.formula_used;
    Json ov = Json::array();
    for (const auto& v : t.oracle_values) ov.push_back(v.str());
    j["oracle_values"] = ov;
    return j;
}
inline TraceReport trace_from_json(const Json& j) {
    TraceReport t;
    t.z_value = Rat::parse(j.at("z_value").get<std::string>());
    t.ideal_in_K = final_segment_from_json(j.at("ideal_in_K"));
    t.formula_used = j.at("formula").get<std::string>();
    for (const auto& v : j.at("oracle_values")) t.oracle_values.push_back(Rat::parse(v.get<std::string>()));
    return t;
}

inline Json to_json(const DifferentReport& d) {
    Json j;
    j["complementary"] = to_json(d.complementary);
    j["different"] = to_json(d.different);
    j["naive"] = to_json(d.naive);
    j["ann_kahler"] = to_json(d.ann_kahler);
    j["m_E"] = to_json(d.m_E);
    j["equal_D_ann"] = d.equal_D_ann;
    j["equal_D_D0"] = d.equal_D_D0;
    j["branch"] = d.branch;
    Json ov = Json::array();
    for (const auto& v : d.delta_oracle_values) ov.push_back(v.str());
    j["delta_oracle_values"] = ov;
    return j;
}
inline DifferentReport different_from_json(const Json& j) {
    DifferentReport d;
    d.complementary = ideal_from_json(j.at("complementary"));
    d.different = ideal_from_json(j.at("different"));
    d.naive = ideal_from_json(j.at("naive"));
    d.ann_kahler = ideal_from_json(j.at("ann_kahler"));
    d.m_E = ideal_from_json(j.at("m_E"));
    d.equal_D_ann = j.at("equal_D_ann").get<bool>();
    d.equal_D_D0 = j.at("equal_D_D0").get<bool>();
    d.branch = j.at("branch").get<std::string>();
    for (const auto& v : j.at("delta_oracle_values"))
        d.delta_oracle_values.push_back(Rat::parse(v.get<std::string>()));
    return d;
}

inline Json to_json(const NormReport& n) {
    Json j;
    j["ideal_in_K"] = to_json(n.ideal_in_K);
    Json ov = Json::array();
    for (const auto& v : n.oracle_values) ov.push_back(v.str());
    j["oracle_values"] = ov;
    return j;
}
inline NormReport norm_from_json(const Json& j) {
    NormReport n;
    n.ideal_in_K = ideal_from_json(j.at("ideal_in_K"));
    for (const auto& v : j.at("oracle_values")) n.oracle_values.push_back(Rat::parse(v.get<std::string>()));
    return n;
}

inline Json to_json(const TowerReport& t) {
    Json j;
    Json subs;
    for (const auto& [label, rep] : t.subgroup_ideals) subs[label] = to_json(rep);
    j["subgroup_ideals"] = subs;
    j["lower_ideal"] = to_json(t.lower_ideal);
    j["all_coincide_principal"] = t.all_coincide_principal;
    j["strict_inequality_certified"] = t.strict_inequality_certified;
    j["strict_inequality_note"] = t.strict_inequality_note;
    j["d_lower"] = t.d_lower;
    j["d_upper"] = t.d_upper;
    j["d_total"] = t.d_total;
    j["ostrowski_ok"] = t.ostrowski_ok;
    return j;
}
inline TowerReport tower_from_json(const Json& j) {
    TowerReport t;
    for (auto it = j.at("subgroup_ideals").begin(); it != j.at("subgroup_ideals").end(); ++it)
        t.subgroup_ideals.emplace(it.key(), ram_from_json(it.value()));
    t.lower_ideal = ram_from_json(j.at("lower_ideal"));
    t.all_coincide_principal = j.at("all_coincide_principal").get<bool>();
    t.strict_inequality_certified = j.at("strict_inequality_certified").get<bool>();
    t.strict_inequality_note = j.at("strict_inequality_note").get<std::string>();
    t.d_lower = j.at("d_lower").get<int>();
    t.d_upper = j.at("d_upper").get<int>();
    t.d_total = j.at("d_total").get<int>();
    t.ostrowski_ok = j.at("ostrowski_ok").get<bool>();
    return t;
}

inline bool operator==(const TowerReport& a, const TowerReport& b) {
    return a.subgroup_ideals == b.subgroup_ideals && a.lower_ideal == b.lower_ideal &&
           a.all_coincide_principal == b.all_coincide_principal &&
           a.strict_inequality_certified == b.strict_inequality_certified &&
           a.strict_inequality_note == b.strict_inequality_note && a.d_lower == b.d_lower &&
           a.d_upper == b.d_upper && a.d_total == b.d_total && a.ostrowski_ok == b.ostrowski_ok;
}

inline Json to_json(const Report& r) {
    Json j;
    j["scenario"] = r.scenario;
    j["kind"] = r.kind;
    Json cls;
    cls["degree"] = r.degree;
    cls["e"] = r.e;
    cls["f"] = r.f;
    cls["d"] = r.d;
    cls["nu"] = r.nu;
    cls["residue_separable"] = r.residue_separable;
    cls["ostrowski_ok"] = r.ostrowski_ok;
    if (r.v_theta) cls["v_theta"] = r.v_theta->str();
    cls["vK"] = to_json(r.vK);
    cls["vL"] = to_json(r.vL);
    j["classification"] = cls;
    if (r.profile_values) {
        Json pv = Json::array();
        for (const auto& v : *r.profile_values) pv.push_back(to_json(v));
        j["profile_values"] = pv;
        j["profile_sup"] = to_json(r.profile_sup);
    }
    if (r.ram) j["ramification"] = to_json(*r.ram);
    if (r.tower) j["tower"] = to_json(*r.tower);
    if (!r.traces.empty()) {
        Json ts = Json::array();
        for (const auto& t : r.traces) ts.push_back(to_json(t));
        j["traces"] = ts;
    }
    if (r.diff) j["different"] = to_json(*r.diff);
    if (r.norm) j["norm"] = to_json(*r.norm);
    if (r.v_zeta_minus_1) {
        j["v_zeta_minus_1"] = r.v_zeta_minus_1->str();
        j["kummer_case"] = r.kummer_case;
    }
    Json oc = Json::array();
    for (const auto& c : r.oracle_summary) {
        Json e;
        e["check"] = c.name;
        e["result"] = c.result;
        oc.push_back(e);
    }
    j["oracle_summary"] = oc;
    j["samples"] = r.samples;
    j["seed"] = r.seed;
    return j;
}

inline Report report_from_json(const Json& j) {
    Report r;
    r.scenario = j.at("scenario").get<std::string>();
    r.kind = j.at("kind").get<std::string>();
    const Json& cls = j.at("classification");
    r.degree = cls.at("degree").get<int>();
    r.e = cls.at("e").get<int>();
    r.f = cls.at("f").get<int>();
    r.d = cls.at("d").get<int>();
    r.nu = cls.at("nu").get<int>();
    r.residue_separable = cls.at("residue_separable").get<bool>();
    r.ostrowski_ok = cls.at("ostrowski_ok").get<bool>();
    if (cls.contains("v_theta")) r.v_theta = Rat::parse(cls.at("v_theta").get<std::string>());
    r.vK = value_group_from_json(cls.at("vK"));
    r.vL = value_group_from_json(cls.at("vL"));
    if (j.contains("profile_values")) {
        std::vector<std::optional<Rat>> pv;
        for (const auto& v : j.at("profile_values")) pv.push_back(opt_rat_from_json(v));
        r.profile_values = pv;
        r.profile_sup = opt_rat_from_json(j.at("profile_sup"));
    }
    if (j.contains("ramification")) r.ram = ram_from_json(j.at("ramification"));
    if (j.contains("tower")) r.tower = tower_from_json(j.at("tower"));
    if (j.contains("traces"))
        for (const auto& t : j.at("traces")) r.traces.push_back(trace_from_json(t));
    if (j.contains("different")) r.diff = different_from_json(j.at("different"));
    if (j.contains("norm")) r.norm = norm_from_json(j.at("norm"));
    if (j.contains("v_zeta_minus_1")) {
        r.v_zeta_minus_1 = Rat::parse(j.at("v_zeta_minus_1").get<std::string>());
        r.kummer_case = j.at("kummer_case").get<std::string>();
    }
    for (const auto& c : j.at("oracle_summary"))
        r.oracle_summary.push_back({c.at("check").get<std::string>(), c.at("result").get<std::string>()});
    r.samples = j.at("samples").get<int>();
    r.seed = j.at("seed").get<std::uint64_t>();
    return r;
}

inline std::string emit_structured(const Report& r) { return to_json(r).dump(2) + "\n"; }
inline Report parse_structured(const std::string& text) {
    return report_from_json(Json::parse(text));
}

// ---------------------------------------------------------------------------
// human-readable text

namespace detail {

inline std::string seg_str(const FinalSegment& s) {
    return (s.attained ? "[" : "(") + s.bound.str() + ", inf)";
}
inline std::string ideal_str(const IdealDescriptor& d) {
    if (d.principal) return "principal at " + d.generator_value.str();
    return "nonprincipal, open cut at " + d.segment.bound.str();
}

} // namespace detail

inline std::string emit_text(const Report& r) {
    std::ostringstream os;
    os << "scenario: " << r.scenario << "  (" << r.kind << ")\n";
    os << "  classification: degree " << r.degree << ", e = " << r.e << ", f = " << r.f
       << ", d = " << r.d << ", nu = " << r.nu;
    if (r.v_theta) os << ", v(theta) = " << r.v_theta->str();
    os << "\n  vK = " << r.vK.str() << "\n  vL = " << r.vL.str() << "\n";
    if (r.f > 1) os << "  residue extension " << (r.residue_separable ? "separable" : "inseparable") << "\n";
    os << "  degree formula (d*e*f): " << (r.ostrowski_ok ? "consistent" : "VIOLATED") << "\n";
    if (r.profile_values) {
        os << "  approximant profile v(a - c_k):";
        for (const auto& v : *r.profile_values) os << " " << (v ? v->str() : "inf");
        os << "\n    sup = " << (r.profile_sup ? r.profile_sup->str() : "inf") << "\n";
    }
    if (r.ram) {
        os << "  ramification: gamma = " << r.ram->gamma.str() << ", ideal "
           << detail::ideal_str(r.ram->ideal) << ", jump " << detail::seg_str(r.ram->jump) << "\n";
        os << "    witness: " << r.ram->witness << "\n";
        if (r.ram->oracle_min)
            os << "    sampled minimum: " << r.ram->oracle_min->str() << " over "
               << r.ram->samples_used << " samples\n";
    }
    if (r.tower) {
        os << "  tower defect chain: d(lower) = " << r.tower->d_lower
           << ", d(upper) = " << r.tower->d_upper << ", d(total) = " << r.tower->d_total << "\n";
        for (const auto& [label, rep] : r.tower->subgroup_ideals)
            os << "    I_" << label << ": " << detail::ideal_str(rep.ideal) << "  (gamma = "
               << rep.gamma.str() << ")\n";
        os << "    lower-step ideal: " << detail::ideal_str(r.tower->lower_ideal.ideal) << "\n";
        os << "    all subgroup ideals coincide and are principal: "
           << (r.tower->all_coincide_principal ? "yes" : "no") << "\n";
        os << "    strict lower-field bound: "
           << (r.tower->strict_inequality_certified ? "certified" : "NOT certified") << " ("
           << r.tower->strict_inequality_note << ")\n";
    }
    for (const auto& t : r.traces)
        os << "  trace ideal (vz = " << t.z_value.str() << "): " << detail::seg_str(t.ideal_in_K)
           << " over vK  [" << t.formula_used << "]\n";
    if (r.diff) {
        os << "  complementary: " << detail::ideal_str(r.diff->complementary) << "\n";
        os << "  different:     " << detail::ideal_str(r.diff->different) << "  [" << r.diff->branch
           << "]\n";
        os << "  naive:         " << detail::ideal_str(r.diff->naive)
           << (r.diff->equal_D_D0 ? "  (= D)" : "  (!= D)") << "\n";
        os << "  ann Omega:     " << detail::ideal_str(r.diff->ann_kahler)
           << (r.diff->equal_D_ann ? "  (= D)" : "  (!= D)") << "\n";
        os << "  m_E:           " << detail::ideal_str(r.diff->m_E) << "\n";
    }
    if (r.norm) os << "  norm of I_E:   " << detail::ideal_str(r.norm->ideal_in_K) << " over vK\n";
    if (r.v_zeta_minus_1)
        os << "  Kummer case " << r.kummer_case << ": v(zeta_p - 1) = " << r.v_zeta_minus_1->str()
           << "\n";
    os << "  oracle checks:\n";
    for (const auto& c : r.oracle_summary) os << "    " << c.name << ": " << c.result << "\n";
    return os.str();
}

} // namespace ramval
