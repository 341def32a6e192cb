#pragma once

// JSON forms.  Big integers are always decimal strings.

#include <nlohmann/json.hpp>

#include "qmarkov/cluster.hpp"
#include "qmarkov/cohn.hpp"
#include "qmarkov/laurent.hpp"
#include "qmarkov/snake.hpp"

namespace qmarkov {

/// {"min_exp": int, "coeffs": [decimal strings from min_exp upward]}.
/// Zero is {"min_exp": 0, "coeffs": []}.
nlohmann::json to_json(const LaurentPoly& p);
/// Throws Error(MalformedInput).
LaurentPoly laurent_from_json(const nlohmann::json& j);

/// [[p11, p12], [p21, p22]] of LaurentPoly objects.
nlohmann::json to_json(const QMatrix2& m);

/// {"terms": [{"exp": [e1, e2, e3], "coeff": "c"}, ...]} in exponent order.
nlohmann::json to_json(const TriPoly& p);
TriPoly tripoly_from_json(const nlohmann::json& j);

nlohmann::json to_json(const TriMatrix2& m);

/// Label, boxes, pieces and edges with weight exponents.
nlohmann::json to_json(const SnakeGraph& g);

}  // namespace qmarkov
