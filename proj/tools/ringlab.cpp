// ringlab: construct finite rings, compute their radicals, and decide the
// McCoy-style zero-divisor witness properties up to a degree bound.
//
// Exit codes: 0 ok, 1 validation failure, 2 usage or construction error,
// 3 counterexample found, 4 budget refused, 5 internal consistency fault.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ringlab/expr.hpp"
#include "ringlab/mccoy.hpp"
#include "ringlab/radical.hpp"
#include "ringlab/report.hpp"
#include "ringlab/validations.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitSuiteFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCounterexample = 3;
constexpr int kExitBudget = 4;
constexpr int kExitFault = 5;

void emit(const ringlab::Json& doc, const std::string& format) {
    if (format == "text")
        std::cout << ringlab::render_text(doc);
    else
        std::cout << doc.dump(2) << "\n";
    std::cout.flush();
}

ringlab::Json error_doc(const char* kind, const std::string& message) {
    ringlab::Json doc;
    doc["type"] = "error";
    doc["kind"] = kind;
    doc["message"] = message;
    return doc;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace ringlab;

    CLI::App app{"finite ring workbench: constructions, Jacobson radicals, and McCoy-style "
                 "witness searches at bounded polynomial degree"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    std::string format = "json";
    std::uint64_t budget = 1'000'000'000;
    int workers = 1;
    std::string defs_file;
    bool seedless = false;
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--budget", budget, "cost ceiling in partial products / scan steps");
    app.add_option("--workers", workers, "worker threads for the pair search")
        ->check(CLI::PositiveNumber);
    app.add_option("--defs", defs_file, "definitions file with named sigmas and bimodules");
    app.add_flag("--seedless", seedless,
                 "accepted for compatibility; every run is deterministic already");

    auto* build = app.add_subcommand("build", "construct a ring, check its axioms, report basics");
    std::string build_expr;
    bool list_elements = false;
    std::uint64_t axiom_cap = 256;
    build->add_option("expr", build_expr, "ring expression, e.g. Mat(Z2,2)")->required();
    build->add_flag("--elements", list_elements, "list canonical element labels");
    build->add_option("--axiom-cap", axiom_cap, "exhaustive axiom check up to this order");

    auto* radical = app.add_subcommand("radical", "units, Jacobson radical and nilpotents");
    std::string radical_expr;
    radical->add_option("expr", radical_expr)->required();

    auto* check = app.add_subcommand("check", "decide a McCoy-style property up to a degree bound");
    std::string check_expr, check_property_name = "j-mccoy", check_side_name = "right";
    int check_dmax = 2;
    check->add_option("expr", check_expr)->required();
    check->add_option("--property", check_property_name, "mccoy | nc-mccoy | j-mccoy")
        ->check(CLI::IsMember({"mccoy", "nc-mccoy", "j-mccoy"}));
    check->add_option("--side", check_side_name, "right | left")
        ->check(CLI::IsMember({"right", "left"}));
    check->add_option("--max-degree", check_dmax, "degree bound for both polynomials")->required();

    auto* hunt = app.add_subcommand("hunt", "stream counterexamples across a list of rings");
    std::vector<std::string> hunt_exprs;
    std::string hunt_property = "all", hunt_side = "right";
    int hunt_dmax = 2;
    hunt->add_option("exprs", hunt_exprs, "ring expressions")->required()->expected(-1);
    hunt->add_option("--property", hunt_property, "mccoy | nc-mccoy | j-mccoy | all")
        ->check(CLI::IsMember({"mccoy", "nc-mccoy", "j-mccoy", "all"}));
    hunt->add_option("--side", hunt_side, "right | left")
        ->check(CLI::IsMember({"right", "left"}));
    hunt->add_option("--max-degree", hunt_dmax)->required();

    auto* validate = app.add_subcommand("validate", "run the built-in validation suite");
    std::string suite_name = "paper";
    std::uint32_t truncation = 4;
    int suite_dmax = 2;
    validate->add_option("--suite", suite_name, "suite name (only: paper)");
    validate->add_option("--truncation", truncation, "series truncation for the matrix example");
    validate->add_option("--max-degree", suite_dmax, "default degree bound for the suite");

    auto* audit = app.add_subcommand("audit", "per-pair witness-set containment audit");
    std::string audit_expr;
    int audit_dmax = 1;
    audit->add_option("expr", audit_expr)->required();
    audit->add_option("--max-degree", audit_dmax)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    Config cfg;
    Registry registry;
    CheckOptions copt;
    copt.budget = budget;
    copt.workers = workers;
    RadicalOptions ropt{budget};

    try {
        if (!defs_file.empty()) registry.load_defs_file(defs_file, cfg);

        if (*build) {
            ExprPtr expr = parse_ring_expr(build_expr);
            RingPtr ring = evaluate(*expr, registry, cfg);
            AxiomCheckOptions aopt;
            aopt.exhaustive_cap = axiom_cap;
            AxiomCheck axioms = verify_ring_axioms(*ring, aopt);
            ringlab::Json doc = ring_info_json(*ring, axioms, list_elements);
            ElemSet idem = idempotents(*ring);
            doc["idempotents"] = elem_set_json(*ring, idem);
            doc["abelian"] = is_abelian(*ring);
            emit(doc, format);
            return axioms.ok ? kExitOk : kExitFault;
        }

        if (*radical) {
            RingPtr ring = evaluate(*parse_ring_expr(radical_expr), registry, cfg);
            RadicalReport report = radical_report(*ring, ropt);
            ringlab::Json doc = radical_report_json(*ring, report);
            doc["is_local"] = is_local(*ring, ropt);
            emit(doc, format);
            return kExitOk;
        }

        if (*check) {
            RingPtr ring = evaluate(*parse_ring_expr(check_expr), registry, cfg);
            PropertyKind kind{*family_from_name(check_property_name),
                              *side_from_name(check_side_name)};
            Verdict verdict = check_property(ring, kind, check_dmax, copt);
            emit(verdict_json(verdict), format);
            return verdict.holds ? kExitOk : kExitCounterexample;
        }

        if (*hunt) {
            std::vector<Family> fams;
            if (hunt_property == "all")
                fams = {Family::McCoy, Family::NcMcCoy, Family::JMcCoy};
            else
                fams = {*family_from_name(hunt_property)};
            Side side = *side_from_name(hunt_side);
            std::size_t found = 0, checked = 0;
            for (const std::string& text : hunt_exprs) {
                RingPtr ring = evaluate(*parse_ring_expr(text), registry, cfg);
                for (Family fam : fams) {
                    ++checked;
                    Verdict verdict = check_property(ring, PropertyKind{fam, side}, hunt_dmax, copt);
                    if (!verdict.holds) {
                        ++found;
                        ringlab::Json doc = verdict_json(verdict);
                        if (format == "text")
                            std::cout << render_text(doc) << "\n";
                        else
                            std::cout << doc.dump() << "\n";  // one document per line
                        std::cout.flush();
                    }
                }
            }
            ringlab::Json summary;
            summary["type"] = "hunt_summary";
            summary["checks"] = checked;
            summary["counterexamples"] = found;
            if (format == "text")
                std::cout << render_text(summary);
            else
                std::cout << summary.dump() << "\n";  // keep the stream line-oriented
            return found ? kExitCounterexample : kExitOk;
        }

        if (*validate) {
            if (suite_name != "paper") {
                emit(error_doc("usage", "unknown suite: " + suite_name), format);
                return kExitUsage;
            }
            SuiteOptions sopt;
            sopt.truncation = truncation;
            sopt.dmax = suite_dmax;
            sopt.budget = budget;
            sopt.workers = workers;
            std::vector<Validation> results = run_builtin_suite(sopt);
            ringlab::Json doc = suite_report_json(results);
            emit(doc, format);
            for (const Validation& v : results)
                if (v.status == Validation::Status::Fail) return kExitSuiteFail;
            return kExitOk;
        }

        if (*audit) {
            RingPtr ring = evaluate(*parse_ring_expr(audit_expr), registry, cfg);
            AuditReport report = implication_audit(ring, audit_dmax, copt);
            emit(audit_report_json(report), format);
            return kExitOk;
        }
    } catch (const ParseError& e) {
        emit(error_doc("parse", e.what()), format);
        return kExitUsage;
    } catch (const ConstructionError& e) {
        emit(error_doc("construction", e.what()), format);
        return kExitUsage;
    } catch (const BudgetRefusal& e) {
        ringlab::Json doc = error_doc("budget", e.what());
        doc["estimated_cost"] = e.estimated_cost;
        doc["budget"] = e.budget_limit;
        emit(doc, format);
        return kExitBudget;
    } catch (const ConsistencyFault& e) {
        emit(error_doc("consistency", e.what()), format);
        return kExitFault;
    }
    return kExitUsage;
}
