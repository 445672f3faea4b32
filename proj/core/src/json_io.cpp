#include "lkrep/json_io.hpp"

namespace lkrep {

using nlohmann::json;

json laurent_to_json(const Laurent& p) {
    json out = json::array();
    for (const auto& [e, c] : p.terms())
        out.push_back(json::array({e.s_exp, e.t_exp, c.get_str()}));
    return out;
}

namespace {

template <class T>
json matrix_entries(const Matrix<T>& m, auto&& render) {
    json entries = json::array();
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) entries.push_back(render(m.at(r, c)));
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

}  // namespace

json matrix_to_json(const RingMatrix& m) {
    return matrix_entries(m, [](const Laurent& x) { return x.str(); });
}

json matrix_to_json(const QMatrix& m) {
    return matrix_entries(m, [](const Rational& x) { return to_string(x); });
}

json word_to_json(const BraidWord& w) {
    return json{{"n", w.strands()}, {"letters", w.letters()}};
}

json rep_matrix_to_json(const RingMatrix& m, const PairBasis& basis) {
    json columns = json::object();
    for (int c = 0; c < m.cols(); ++c) {
        json column = json::object();
        for (int r = 0; r < m.rows(); ++r) {
            if (m.at(r, c).is_zero()) continue;
            column[basis.label(r)] = m.at(r, c).str();
        }
        columns[basis.label(c)] = std::move(column);
    }
    json labels = json::array();
    for (int i = 0; i < basis.size(); ++i) labels.push_back(basis.label(i));
    return json{{"n", basis.n()},
                {"dim", basis.size()},
                {"basis", labels},
                {"columns", columns},
                {"matrix", matrix_to_json(m)}};
}

json tl_element_to_json(const TLElement& x) {
    json terms = json::object();
    for (const auto& [d, c] : x.terms()) terms[d.str()] = laurent_to_json(c);
    return json{{"n", x.n()}, {"terms", terms}};
}

json quotient_report_to_json(const QuotientReport& report) {
    json gens = json::array();
    for (const auto& g : report.quotient_generators) gens.push_back(matrix_to_json(g));
    json out{{"n", report.n},
             {"s0", to_string(report.s0)},
             {"dim_ambient", report.dim_ambient},
             {"dim_invariant", report.dim_invariant},
             {"dim_quotient", report.dim_quotient},
             {"hecke_ok", report.hecke_ok},
             {"z_ok", report.z_ok},
             {"braid_relations_ok", report.braid_relations_ok},
             {"quotient_generators", gens},
             {"intertwiner_found", report.intertwiner.has_value()}};
    out["intertwiner"] = report.intertwiner ? matrix_to_json(*report.intertwiner) : json();
    return out;
}

}  // namespace lkrep
