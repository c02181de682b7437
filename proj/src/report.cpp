#include "ringlab/report.hpp"

#include <sstream>

#include "ringlab/poly.hpp"

namespace ringlab {

Json elem_set_json(const Ring& ring, const ElemSet& set, const ReportOptions& opt) {
    Json out;
    out["count"] = set.size();
    Json elems = Json::array();
    std::size_t listed = 0;
    for (Elem e : set.members()) {
        if (listed == opt.elems_cap) break;
        elems.push_back(ring.elem_label(e));
        ++listed;
    }
    out["elements"] = std::move(elems);
    out["truncated"] = set.size() > opt.elems_cap;
    return out;
}

Json ring_info_json(const Ring& ring, const AxiomCheck& axioms, bool list_elements,
                    const ReportOptions& opt) {
    Json out;
    out["type"] = "ring_info";
    out["ring"] = ring.label();
    out["order"] = ring.order();
    out["zero"] = ring.elem_label(ring.zero());
    out["one"] = ring.elem_label(ring.one());
    out["axioms"] = Json{{"ok", axioms.ok},
                         {"mode", axioms.exhaustive ? "exhaustive" : "sampled"},
                         {"triples_checked", axioms.triples_checked}};
    if (!axioms.ok) out["axioms"]["failure"] = axioms.failure;
    if (list_elements) {
        Json elems = Json::array();
        std::size_t cap = std::max<std::size_t>(opt.elems_cap, 4096);
        for (std::uint64_t i = 0; i < ring.order() && i < cap; ++i)
            elems.push_back(ring.elem_label(Elem{i}));
        out["elements"] = std::move(elems);
        out["elements_truncated"] = ring.order() > cap;
    }
    return out;
}

Json radical_report_json(const Ring& ring, const RadicalReport& report, const ReportOptions& opt) {
    Json out;
    out["type"] = "radical_report";
    out["ring"] = report.ring_label;
    out["order"] = report.order;
    out["units"] = elem_set_json(ring, report.units, opt);
    out["jacobson"] = elem_set_json(ring, report.jacobson, opt);
    out["nilpotents"] = elem_set_json(ring, report.nilpotents, opt);
    out["is_j_semisimple"] = report.is_j_semisimple;
    return out;
}

namespace {

Json pair_json(const ZeroPair& pair) {
    Json out;
    out["f"] = poly_to_string(pair.f);
    out["g"] = poly_to_string(pair.g);
    Json fc = Json::array(), gc = Json::array();
    for (Elem c : pair.f.coeffs()) fc.push_back(pair.f.ring()->elem_label(c));
    for (Elem c : pair.g.coeffs()) gc.push_back(pair.g.ring()->elem_label(c));
    out["f_coeffs"] = std::move(fc);
    out["g_coeffs"] = std::move(gc);
    return out;
}

}  // namespace

Json verdict_json(const Verdict& verdict, const ReportOptions&) {
    Json out;
    out["type"] = "verdict";
    out["ring"] = verdict.ring_label;
    out["property"] = Json{{"family", family_name(verdict.kind.family)},
                           {"side", side_name(verdict.kind.side)}};
    out["max_degree"] = verdict.dmax;
    out["outcome"] = verdict.holds ? "holds_up_to_degree" : "counterexample";
    if (verdict.holds)
        out["holds_up_to_degree"] = verdict.dmax;
    else
        out["counterexample"] = pair_json(*verdict.counterexample);
    out["pairs_examined"] = verdict.pairs_examined;
    Json log = Json::array();
    for (const WitnessEntry& e : verdict.witness_log) {
        Json entry = pair_json(e.pair);
        entry["witness"] = e.pair.f.ring()->elem_label(e.witness);
        entry["witness_index"] = e.witness.v;
        log.push_back(std::move(entry));
    }
    out["witness_log"] = std::move(log);
    out["witness_log_truncated"] = verdict.log_truncated;
    out["workers"] = verdict.workers;
    return out;
}

Json audit_report_json(const AuditReport& report) {
    Json out;
    out["type"] = "implication_audit";
    out["ring"] = report.ring_label;
    out["max_degree"] = report.dmax;
    out["pairs"] = report.pairs;
    out["mccoy_witnessed"] = report.mccoy_witnessed;
    out["nc_witnessed"] = report.nc_witnessed;
    out["j_witnessed"] = report.j_witnessed;
    out["j_semisimple"] = report.j_semisimple;
    out["nil_inside_radical"] = report.nil_inside_radical;
    out["nc_not_j_pairs"] = report.nc_not_j_pairs;
    out["ok"] = report.ok;
    return out;
}

Json validation_json(const Validation& v) {
    Json out;
    out["name"] = v.name;
    out["claim"] = v.claim;
    out["instances"] = v.instances;
    switch (v.status) {
        case Validation::Status::Pass: out["status"] = "pass"; break;
        case Validation::Status::Fail: out["status"] = "fail"; break;
        case Validation::Status::Skipped: out["status"] = "skipped"; break;
    }
    if (!v.reason.empty()) out["reason"] = v.reason;
    out["evidence"] = v.evidence;
    return out;
}

Json suite_report_json(const std::vector<Validation>& validations) {
    Json out;
    out["type"] = "suite_report";
    out["suite"] = "paper";
    std::size_t pass = 0, fail = 0, skipped = 0;
    Json items = Json::array();
    for (const Validation& v : validations) {
        items.push_back(validation_json(v));
        switch (v.status) {
            case Validation::Status::Pass: ++pass; break;
            case Validation::Status::Fail: ++fail; break;
            case Validation::Status::Skipped: ++skipped; break;
        }
    }
    out["pass"] = pass;
    out["fail"] = fail;
    out["skipped"] = skipped;
    out["validations"] = std::move(items);
    return out;
}

namespace {

void render_value(const Json& v, const std::string& prefix, std::ostringstream& os) {
    if (v.is_object()) {
        for (const auto& [key, value] : v.items()) {
            std::string next = prefix.empty() ? key : prefix + "." + key;
            render_value(value, next, os);
        }
    } else if (v.is_array()) {
        std::size_t i = 0;
        for (const auto& value : v) {
            render_value(value, prefix + "[" + std::to_string(i) + "]", os);
            ++i;
        }
        if (v.empty()) os << prefix << ": []\n";
    } else {
        os << prefix << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
}

}  // namespace

std::string render_text(const Json& report) {
    std::ostringstream os;
    render_value(report, "", os);
    return os.str();
}

}  // namespace ringlab
