#include "qmarkov/serialize.hpp"

#include "qmarkov/error.hpp"

namespace qmarkov {

namespace {

using nlohmann::json;

BigInt parse_big(const json& j) {
  if (!j.is_string()) throw Error(ErrorCode::MalformedInput, "coefficient must be a decimal string");
  const std::string& s = j.get_ref<const std::string&>();
  BigInt v;
  if (s.empty() || v.set_str(s, 10) != 0) throw Error(ErrorCode::MalformedInput, "bad integer: " + s);
  return v;
}

const char* step_name(Step s) {
  switch (s) {
    case Step::Start: return "start";
    case Step::Right: return "right";
    case Step::Up: return "up";
  }
  return "";
}

const char* piece_name(PieceKind k) {
  switch (k) {
    case PieceKind::SingleBox: return "single";
    case PieceKind::InitialA: return "initial_a";
    case PieceKind::A: return "a";
    case PieceKind::B: return "b";
    case PieceKind::FinalB: return "final_b";
  }
  return "";
}

}  // namespace

json to_json(const LaurentPoly& p) {
  json coeffs = json::array();
  if (p.is_zero()) return {{"min_exp", 0}, {"coeffs", coeffs}};
  for (const BigInt& c : p.dense()) coeffs.push_back(c.get_str());
  return {{"min_exp", p.min_degree()}, {"coeffs", coeffs}};
}

LaurentPoly laurent_from_json(const json& j) {
  if (!j.is_object() || !j.contains("min_exp") || !j.contains("coeffs") || !j["min_exp"].is_number_integer() ||
      !j["coeffs"].is_array()) {
    throw Error(ErrorCode::MalformedInput, "expected {\"min_exp\": int, \"coeffs\": [...]}");
  }
  std::vector<BigInt> coeffs;
  for (const json& c : j["coeffs"]) coeffs.push_back(parse_big(c));
  return LaurentPoly::from_dense(j["min_exp"].get<int>(), coeffs);
}

json to_json(const QMatrix2& m) {
  return json::array({json::array({to_json(m.e11()), to_json(m.e12())}), json::array({to_json(m.e21()), to_json(m.e22())})});
}

json to_json(const TriPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exp", e}, {"coeff", c.get_str()}});
  return {{"terms", terms}};
}

TriPoly tripoly_from_json(const json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array()) {
    throw Error(ErrorCode::MalformedInput, "expected {\"terms\": [...]}");
  }
  TriPoly out;
  for (const json& t : j["terms"]) {
    if (!t.is_object() || !t.contains("exp") || !t["exp"].is_array() || t["exp"].size() != 3 || !t.contains("coeff")) {
      throw Error(ErrorCode::MalformedInput, "bad term");
    }
    TriPoly::Exponent e{};
    for (std::size_t i = 0; i < 3; ++i) {
      if (!t["exp"][i].is_number_integer()) throw Error(ErrorCode::MalformedInput, "bad exponent");
      e[i] = t["exp"][i].get<int>();
    }
    out += TriPoly::monomial(parse_big(t["coeff"]), e);
  }
  return out;
}

json to_json(const TriMatrix2& m) {
  return json::array({json::array({to_json(m.e11()), to_json(m.e12())}), json::array({to_json(m.e21()), to_json(m.e22())})});
}

json to_json(const SnakeGraph& g) {
  json boxes = json::array();
  for (const Box& b : g.boxes()) boxes.push_back({{"x", b.corner.x}, {"y", b.corner.y}, {"step", step_name(b.step)}});
  json pieces = json::array();
  for (PieceKind k : g.pieces()) pieces.push_back(piece_name(k));
  json edges = json::array();
  for (const Edge& e : g.edges()) {
    edges.push_back({{"from", {e.from.x, e.from.y}}, {"to", {e.to.x, e.to.y}}, {"weight_exp", e.weight_exp}});
  }
  return {{"label", g.label().to_string()}, {"boxes", boxes}, {"pieces", pieces}, {"edges", edges}};
}

}  // namespace qmarkov
