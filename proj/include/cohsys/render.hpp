#pragma once
// Deterministic rendering of reports to aligned tables, JSON (stable key
// order, rationals as {"num", "den"}), and RFC-4180-style CSV (rationals as
// "num/den" strings). No decimals anywhere.

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cohsys/butler.hpp"
#include "cohsys/constructions.hpp"
#include "cohsys/profile_engine.hpp"
#include "cohsys/profile_json.hpp"
#include "cohsys/stability_core.hpp"

namespace cohsys {

enum class Format { Table, Json, Csv };

inline OrderedJson rat_json(const Rat& r) {
    return OrderedJson{{"num", r.num()}, {"den", r.den()}};
}

namespace detail {

inline std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

// A rectangular grid with a header row, renderable as table or CSV.
struct Grid {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    [[nodiscard]] std::string to_table() const {
        std::vector<size_t> widths(header.size(), 0);
        auto widen = [&](const std::vector<std::string>& row) {
            for (size_t i = 0; i < row.size() && i < widths.size(); ++i)
                widths[i] = std::max(widths[i], row[i].size());
        };
        widen(header);
        for (const auto& r : rows) widen(r);
        std::ostringstream os;
        auto emit = [&](const std::vector<std::string>& row) {
            for (size_t i = 0; i < row.size(); ++i) {
                os << row[i];
                if (i + 1 < row.size())
                    os << std::string(widths[i] - row[i].size() + 2, ' ');
            }
            os << '\n';
        };
        emit(header);
        std::vector<std::string> rule;
        for (size_t w : widths) rule.push_back(std::string(w, '-'));
        emit(rule);
        for (const auto& r : rows) emit(r);
        return os.str();
    }

    [[nodiscard]] std::string to_csv() const {
        std::ostringstream os;
        auto emit = [&](const std::vector<std::string>& row) {
            for (size_t i = 0; i < row.size(); ++i) {
                if (i) os << ',';
                os << csv_quote(row[i]);
            }
            os << "\r\n";
        };
        emit(header);
        for (const auto& r : rows) emit(r);
        return os.str();
    }
};

inline std::string render_grid(const Grid& g, const OrderedJson& j, Format f) {
    switch (f) {
        case Format::Table: return g.to_table();
        case Format::Csv: return g.to_csv();
        case Format::Json: return j.dump(2) + "\n";
    }
    return {};
}

inline std::string type_str(int rank, long long degree, int sections) {
    return "(" + std::to_string(rank) + ", " + std::to_string(degree) + ", " +
           std::to_string(sections) + ")";
}

} // namespace detail

inline std::string outcome_str(Outcome o) {
    switch (o) {
        case Outcome::Stable: return "Stable";
        case Outcome::StrictlySemistable: return "StrictlySemistable";
        case Outcome::Unstable: return "Unstable";
        case Outcome::Undetermined: return "Undetermined";
    }
    return {};
}

inline std::string regime_str(const Regime& r) {
    switch (r.kind) {
        case Regime::Kind::SmallAlpha: return "small-alpha";
        case Regime::Kind::LargeAlpha: return "large-alpha";
        case Regime::Kind::AtAlpha: return "alpha = " + r.alpha.str();
        case Regime::Kind::Linear: return "linear";
    }
    return {};
}

inline OrderedJson verdict_json(const Verdict& v) {
    OrderedJson j;
    j["regime"] = regime_str(v.regime);
    j["outcome"] = outcome_str(v.outcome);
    if (v.witness)
        j["witness"] = OrderedJson::array(
            {v.witness->rank, v.witness->degree, v.witness->sections, v.witness->generated});
    if (!v.region.empty()) j["note"] = v.region;
    return j;
}

inline std::vector<std::string> verdict_row(const Verdict& v) {
    return {regime_str(v.regime), outcome_str(v.outcome),
            v.witness ? detail::type_str(v.witness->rank, v.witness->degree,
                                         v.witness->sections)
                      : "",
            v.region};
}

inline std::string render_verdicts(const std::vector<Verdict>& vs, Format f) {
    detail::Grid g;
    g.header = {"regime", "outcome", "witness", "note"};
    OrderedJson j = OrderedJson::array();
    for (const auto& v : vs) {
        g.rows.push_back(verdict_row(v));
        j.push_back(verdict_json(v));
    }
    return detail::render_grid(g, j, f);
}

inline std::string render_tri(const TriVerdict& t, Format f) {
    return render_verdicts({t.alpha_small, t.alpha_large, t.linear}, f);
}

inline std::string render_walls(const std::vector<Wall>& walls, Format f) {
    detail::Grid g;
    g.header = {"alpha", "witness", "system"};
    OrderedJson j = OrderedJson::array();
    for (const auto& w : walls) {
        g.rows.push_back({w.alpha.str(),
                          detail::type_str(w.witness.rank, w.witness.degree,
                                           w.witness.sections),
                          detail::type_str(w.sys.rank, w.sys.degree, w.sys.sections)});
        OrderedJson e;
        e["alpha"] = rat_json(w.alpha);
        e["witness"] = OrderedJson::array(
            {w.witness.rank, w.witness.degree, w.witness.sections});
        j.push_back(e);
    }
    return detail::render_grid(g, j, f);
}

// Scalar oracle results as a one-row report.
inline std::string render_value(const std::string& name, const Rat& value, Format f) {
    detail::Grid g;
    g.header = {"quantity", "value"};
    g.rows.push_back({name, value.str()});
    OrderedJson j;
    j["quantity"] = name;
    j["value"] = value.is_integer() ? OrderedJson(value.num()) : rat_json(value);
    return detail::render_grid(g, j, f);
}

inline std::string render_example(const ExampleReport& rep, Format f) {
    detail::Grid g;
    g.header = {"item", "status", "detail"};
    for (const auto& t : rep.trace)
        g.rows.push_back({t.name, t.pass ? "ok" : "FAIL", t.detail});
    auto add_verdict = [&](const char* label, const Verdict& v) {
        g.rows.push_back({label, outcome_str(v.outcome),
                          v.witness ? "witness " + detail::type_str(v.witness->rank,
                                                                   v.witness->degree,
                                                                   v.witness->sections)
                                    : v.region});
    };
    add_verdict("small-alpha verdict", rep.computed.alpha_small);
    add_verdict("large-alpha verdict", rep.computed.alpha_large);
    add_verdict("linear verdict", rep.computed.linear);

    OrderedJson j;
    j["name"] = rep.name;
    j["genus"] = rep.genus;
    j["params"] = OrderedJson(rep.params);
    j["profile"] = profile_to_json(rep.profile);
    j["trace"] = OrderedJson::array();
    for (const auto& t : rep.trace)
        j["trace"].push_back({{"check", t.name}, {"pass", t.pass}, {"detail", t.detail}});
    j["verdicts"] = {{"smallAlpha", verdict_json(rep.computed.alpha_small)},
                     {"largeAlpha", verdict_json(rep.computed.alpha_large)},
                     {"linear", verdict_json(rep.computed.linear)}};
    j["notes"] = rep.notes;
    j["ok"] = rep.ok;
    return detail::render_grid(g, j, f);
}

inline std::string render_overview(const OverviewTable& t, Format f) {
    detail::Grid g;
    g.header = {"pattern", "genus", "small-alpha", "large-alpha", "linear", "note"};
    OrderedJson j;
    j["rows"] = OrderedJson::array();
    for (const auto& r : t.rows) {
        std::istringstream cells(r.grid);
        std::string a, b, c;
        cells >> a >> b >> c;
        g.rows.push_back({r.name, std::to_string(r.genus), a, b, c, r.note});
        j["rows"].push_back({{"pattern", r.name},
                             {"genus", r.genus},
                             {"grid", r.grid},
                             {"note", r.note},
                             {"ok", r.ok}});
    }
    g.rows.push_back({"-", "-", "Y", "N", "Y", t.impossible_row.substr(7)});
    j["impossibleRow"] = t.impossible_row;
    return detail::render_grid(g, j, f);
}

inline std::string render_feasibility(const ButlerFeasibility& r, Format f) {
    detail::Grid g;
    g.header = {"check", "status", "detail"};
    for (const auto& c : r.checks)
        g.rows.push_back({c.name, c.pass ? "ok" : "FAIL", c.detail});
    g.rows.push_back({"overall", r.feasible ? "feasible" : "infeasible",
                      "case " + std::string(r.which == ButlerCase::A ? "A" : "B") +
                          ", d = " + std::to_string(r.d) +
                          ", d_2 = " + std::to_string(r.d2) +
                          (r.strict_mode ? ", strict mode" : ", proof mode")});
    OrderedJson j;
    j["genus"] = r.g;
    j["case"] = r.which == ButlerCase::A ? "A" : "B";
    j["d2"] = r.d2;
    j["d"] = r.d;
    j["epsilon"] = r.epsilon;
    j["strictMode"] = r.strict_mode;
    j["checks"] = OrderedJson::array();
    for (const auto& c : r.checks)
        j["checks"].push_back({{"check", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    j["feasible"] = r.feasible;
    return detail::render_grid(g, j, f);
}

inline std::string render_sweep(const std::vector<ButlerSweepRow>& rows, Format f) {
    detail::Grid g;
    g.header = {"genus", "caseA-strict", "caseA-proof", "caseB-strict", "caseB-proof",
                "note"};
    OrderedJson j = OrderedJson::array();
    auto yn = [](bool b) { return b ? std::string("Y") : std::string("N"); };
    for (const auto& r : rows) {
        g.rows.push_back({std::to_string(r.g), yn(r.case_a_strict), yn(r.case_a_proof),
                          yn(r.case_b_strict), yn(r.case_b_proof), r.annotation});
        j.push_back({{"genus", r.g},
                     {"caseAStrict", r.case_a_strict},
                     {"caseAProof", r.case_a_proof},
                     {"caseBStrict", r.case_b_strict},
                     {"caseBProof", r.case_b_proof},
                     {"note", r.annotation}});
    }
    return detail::render_grid(g, j, f);
}

} // namespace cohsys
