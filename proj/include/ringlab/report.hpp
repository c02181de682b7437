#pragma once

#include <string>

#include <json.hpp>

#include "ringlab/mccoy.hpp"
#include "ringlab/radical.hpp"
#include "ringlab/ring.hpp"
#include "ringlab/validations.hpp"

namespace ringlab {

// All reports use ordered JSON so byte-identical inputs yield byte-identical
// output. Element sets are serialized as labels, truncated past `elems_cap`
// with the exact count always present.
using Json = nlohmann::ordered_json;

struct ReportOptions {
    std::size_t elems_cap = 64;
};

Json elem_set_json(const Ring& ring, const ElemSet& set, const ReportOptions& opt = {});

Json ring_info_json(const Ring& ring, const AxiomCheck& axioms, bool list_elements,
                    const ReportOptions& opt = {});
Json radical_report_json(const Ring& ring, const RadicalReport& report,
                         const ReportOptions& opt = {});
Json verdict_json(const Verdict& verdict, const ReportOptions& opt = {});
Json audit_report_json(const AuditReport& report);
Json validation_json(const Validation& validation);
Json suite_report_json(const std::vector<Validation>& validations);

std::string render_text(const Json& report);  // human-readable flat rendering

}  // namespace ringlab
