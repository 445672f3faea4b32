#pragma once

#include <json.hpp>

#include "lkrep/braid.hpp"
#include "lkrep/reduce.hpp"
#include "lkrep/tl.hpp"

namespace lkrep {

// Laurent polynomial as a list of [s_exp, t_exp, coefficient-string] in
// canonical term order.
nlohmann::json laurent_to_json(const Laurent& p);

// {"rows": r, "cols": c, "entries": [entry strings, row-major]}
nlohmann::json matrix_to_json(const RingMatrix& m);
nlohmann::json matrix_to_json(const QMatrix& m);

// {"n": n, "letters": [...]}
nlohmann::json word_to_json(const BraidWord& w);

// Krammer matrix keyed by basis pairs: nonzero column entries under
// "columns", e.g. columns["F(1,3)"]["F(1,2)"] = "q^2 - q".
nlohmann::json rep_matrix_to_json(const RingMatrix& m, const PairBasis& basis);

// {"n": n, "terms": {"[(1,2),...]": <laurent json>, ...}}
nlohmann::json tl_element_to_json(const TLElement& x);

nlohmann::json quotient_report_to_json(const QuotientReport& report);

}  // namespace lkrep
