#ifndef SLIDE_IO_HPP
#define SLIDE_IO_HPP

#include <string>

#include <json.hpp>

#include "slide/pipedreams.hpp"
#include "slide/polynomial.hpp"
#include "slide/tableaux.hpp"

namespace slide {

using Json = nlohmann::ordered_json;

// {"nvars": n, "terms": [{"exp": [...], "coeff": "<decimal>"}, ...]},
// terms in the canonical term order.
Json polynomial_to_json(const Polynomial& f);
Polynomial polynomial_from_json(const Json& j);

// {"basis": "...", "terms": [{"index": [...], "coeff": "<decimal>"}, ...]}
Json expansion_to_json(const SlideExpansion& e);
Json expansion_to_json(const QsymExpansion& e);
// Schubert indices serialize as one-line arrays.
Json expansion_to_json(const SchubertExpansion& e);
SlideExpansion slide_expansion_from_json(const Json& j);
QsymExpansion qsym_expansion_from_json(const Json& j);
SchubertExpansion schubert_expansion_from_json(const Json& j);

// {"shape": [...], "rows": [[...], ...]} bottom row first.
Json tableau_to_json(const Tableau& T);
Tableau tableau_from_json(const Json& j);

// {"shape": "2,4,1,5,3", "crosses": [[row, col], ...]} in reading order.
Json pipe_dream_to_json(const PipeDream& P);
PipeDream pipe_dream_from_json(const Json& j);

// Human-readable one-term-per-line renderings used by the CLI.
std::string format_polynomial(const Polynomial& f);
std::string format_expansion(const SlideExpansion& e);
std::string format_expansion(const QsymExpansion& e);
std::string format_expansion(const SchubertExpansion& e);

std::string basis_symbol(Basis b);

}  // namespace slide

#endif
