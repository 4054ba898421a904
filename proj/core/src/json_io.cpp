#include "pke/json_io.hpp"

#include <stdexcept>
#include <string>

namespace pke {
namespace {

std::string integer_text(const Json& j, const char* field) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  if (j.is_number_unsigned()) return std::to_string(j.get<unsigned long long>());
  throw std::invalid_argument(std::string("field '") + field + "' must be an integer or a decimal string");
}

const Json& require(const Json& j, const char* field) {
  if (!j.is_object() || !j.contains(field)) throw std::invalid_argument(std::string("missing field '") + field + "'");
  return j.at(field);
}

}  // namespace

Json poly_to_json(const MultiPoly& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) {
    terms.push_back(Json{{"exp", std::vector<unsigned>(m.exponents().begin(), m.exponents().end())},
                         {"num", numerator_string(c)},
                         {"den", denominator_string(c)}});
  }
  return Json{{"nvars", p.nvars()}, {"terms", std::move(terms)}};
}

MultiPoly poly_from_json(const Json& j) {
  const Json& nv = require(j, "nvars");
  if (!nv.is_number_integer() || nv.get<long long>() <= 0) {
    throw std::invalid_argument("'nvars' must be a positive integer");
  }
  const auto nvars = static_cast<std::size_t>(nv.get<long long>());
  const Json& terms = require(j, "terms");
  if (!terms.is_array()) throw std::invalid_argument("'terms' must be an array");
  MultiPoly p(nvars);
  for (const auto& t : terms) {
    const Json& exp = require(t, "exp");
    if (!exp.is_array() || exp.size() != nvars) {
      throw std::invalid_argument("each 'exp' must list exactly nvars exponents");
    }
    std::vector<unsigned> e;
    for (const auto& v : exp) {
      if (!v.is_number_integer() || v.get<long long>() < 0) {
        throw std::invalid_argument("exponents must be non-negative integers");
      }
      e.push_back(static_cast<unsigned>(v.get<long long>()));
    }
    const std::string num = integer_text(require(t, "num"), "num");
    const std::string den = t.contains("den") ? integer_text(t.at("den"), "den") : "1";
    p.add_term(Monomial(std::move(e)), make_rational(num, den));
  }
  return p;
}

Json potential_to_json(const ToricPotential& potential) {
  if (potential.kind() == PotentialKind::Poly) {
    return Json{{"kind", "poly"}, {"P", poly_to_json(potential.P())}};
  }
  return Json{{"kind", "log"},
              {"P", poly_to_json(potential.P())},
              {"k_num", numerator_string(potential.k())},
              {"k_den", denominator_string(potential.k())}};
}

ToricPotential potential_from_json(const Json& j) {
  const Json& kind = require(j, "kind");
  if (!kind.is_string()) throw std::invalid_argument("'kind' must be a string");
  MultiPoly p = poly_from_json(require(j, "P"));
  if (kind == "poly") return ToricPotential::polynomial(std::move(p));
  if (kind == "log") {
    const std::string num = integer_text(require(j, "k_num"), "k_num");
    const std::string den = j.contains("k_den") ? integer_text(j.at("k_den"), "k_den") : "1";
    return ToricPotential::logarithmic(std::move(p), make_rational(num, den));
  }
  throw std::invalid_argument("'kind' must be \"poly\" or \"log\"");
}

Json rational_to_json(const Rational& r) { return to_string(r); }

Json ma_result_to_json(const MAResult& result) {
  return Json{{"is_solution", result.is_solution},
              {"sign", result.sign == 0 ? "none" : (result.sign > 0 ? "+" : "-")},
              {"witness", poly_to_json(result.witness)}};
}

Json axis_profile_to_json(const AxisProfile& profile) {
  return Json{{"axis", profile.axis + 1},
              {"epsilon", profile.epsilon},
              {"r", rational_to_json(profile.r)},
              {"k", profile.k},
              {"q_sign", profile.q_sign}};
}

Json continuation_to_json(const Continuation& continuation) {
  Json coeffs = Json::array();
  for (const auto& c : continuation.coefficients) coeffs.push_back(poly_to_json(c));
  return Json{{"polynomial", poly_to_json(continuation.polynomial)},
              {"coefficients", std::move(coeffs)},
              {"sign", continuation.sign > 0 ? "+" : "-"}};
}

Json flat_classification_to_json(const FlatClassification& flat) {
  Json out{{"verdict", flat.linear() ? "linear" : "not_solution"}, {"lhs", poly_to_json(flat.lhs)}};
  if (flat.linear()) {
    Json coeffs = Json::array();
    for (const auto& c : flat.coefficients) coeffs.push_back(rational_to_json(c));
    out["coefficients"] = std::move(coeffs);
    out["product"] = rational_to_json(flat.product);
  }
  return out;
}

Json record_to_json(const SolutionRecord& record) {
  return Json{{"name", record.name},
              {"partition", record.partition},
              {"n", record.n},
              {"P", poly_to_json(record.P)},
              {"h", record.h},
              {"K", record.K},
              {"potential", potential_to_json(record.potential)},
              {"min_embedding_dim", record.min_embedding_dim},
              {"manifold_label", record.manifold_label}};
}

SolutionRecord record_from_json(const Json& j) {
  try {
    return SolutionRecord{
        require(j, "name").get<std::string>(),
        require(j, "partition").get<std::vector<unsigned>>(),
        require(j, "n").get<unsigned>(),
        poly_from_json(require(j, "P")),
        require(j, "h").get<unsigned>(),
        require(j, "K").get<unsigned>(),
        potential_from_json(require(j, "potential")),
        require(j, "min_embedding_dim").get<unsigned>(),
        require(j, "manifold_label").get<std::string>(),
    };
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed solution record: ") + e.what());
  }
}

}  // namespace pke
