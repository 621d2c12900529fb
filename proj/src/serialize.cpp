// Copyright 2026 The tate Authors.
// SPDX-License-Identifier: Apache-2.0
#include "tate/serialize.hpp"

namespace tate {

Json to_json(const CycNumber& x) {
  Json out = Json::array();
  for (const auto& c : x.coeffs()) {
    out.push_back(c.get_num().get_str() + "/" + c.get_den().get_str());
  }
  return out;
}

Json to_json(const TorsionPoint& t) { return Json::array({t.a(), t.b()}); }

Json to_json(const LaurentMonomial& m) {
  Json out = Json::array();
  for (const auto& [point, exp] : m.factors()) {
    out.push_back(Json{{"point", point.to_string()}, {"exp", exp}});
  }
  return out;
}

Json to_json(const LaurentPoly& f) {
  Json out = Json::array();
  for (const auto& [monomial, coeff] : f.terms()) {
    out.push_back(Json{{"coeff", to_json(coeff)}, {"monomial", to_json(monomial)}});
  }
  return out;
}

Json to_json(const AlgebraElement<SymbolicRing>& f) {
  Json out = Json::array();
  for (const auto& [t, c] : f.support()) out.push_back(Json{{"point", t.to_string()}, {"coeff", to_json(c)}});
  return out;
}

Json to_json(const AlgebraElement<ModularRing>& f) {
  Json out = Json::array();
  for (const auto& [t, c] : f.support()) out.push_back(Json{{"point", t.to_string()}, {"coeff", c}});
  return out;
}

Json to_json(const PairingValue& value, const TameFieldModel& model) {
  return Json{{"value", value.to_string()},
              {"model", Json{{"p", model.p()}, {"q", model.q()}, {"g", model.generator()}, {"zeta", model.zeta()}}},
              {"convention", std::string(kConvention)}};
}

std::string point_label(const TorsionPoint& t, const Basis& basis) {
  const auto [a, b] = basis.coordinates(t);
  if (a == 0 && b == 0) return "O";
  std::string out;
  if (b != 0) out += (b == 1 ? "" : std::to_string(b)) + "Q";
  if (a != 0) {
    if (!out.empty()) out += "+";
    out += (a == 1 ? "" : std::to_string(a)) + "P";
  }
  return out;
}

namespace {

std::string latex_rational(const mpq_class& c) {
  if (c.get_den() == 1) return c.get_num().get_str();
  return "\\tfrac{" + c.get_num().get_str() + "}{" + c.get_den().get_str() + "}";
}

// Signed sum of pieces "coeff * body"; body may be empty for constants.
struct SignedSum {
  std::string text;
  void add(const mpq_class& c, const std::string& body) {
    if (c == 0) return;
    const mpq_class magnitude = abs(c);
    if (text.empty()) {
      if (c < 0) text += "-";
    } else {
      text += c < 0 ? " - " : " + ";
    }
    if (body.empty()) {
      text += latex_rational(magnitude);
    } else {
      if (magnitude != 1) text += latex_rational(magnitude);
      text += body;
    }
  }
  std::string str() const { return text.empty() ? "0" : text; }
};

std::string zeta_power(std::size_t i) {
  if (i == 0) return "";
  return i == 1 ? "\\zeta_p" : "\\zeta_p^{" + std::to_string(i) + "}";
}

// Coefficient text that can precede a product; parenthesized unless it is a
// signed rational.
std::pair<mpq_class, std::string> split_coefficient(const CycNumber& x) {
  std::size_t nonzero = 0;
  std::size_t last = 0;
  for (std::size_t i = 0; i < x.coeffs().size(); ++i) {
    if (x.coeffs()[i] != 0) {
      ++nonzero;
      last = i;
    }
  }
  if (nonzero == 1) return {x.coeffs()[last], zeta_power(last)};
  return {1, "\\left(" + latex(x) + "\\right)"};
}

std::string power(const std::string& base, int exp) {
  return exp == 1 ? base : base + "^{" + std::to_string(exp) + "}";
}

}  // namespace

std::string latex(const CycNumber& x) {
  SignedSum sum;
  for (std::size_t i = 0; i < x.coeffs().size(); ++i) sum.add(x.coeffs()[i], zeta_power(i));
  return sum.str();
}

std::string latex(const LaurentPoly& f, const Basis& basis) {
  SignedSum sum;
  for (const auto& [monomial, coeff] : f.terms()) {
    std::string body;
    for (const auto& [point, exp] : monomial.factors()) {
      body += power("\\gamma(" + point_label(point, basis) + ")", exp);
    }
    auto [scalar, zeta_part] = split_coefficient(coeff);
    const bool constant = body.empty() && zeta_part.empty();
    sum.add(scalar, constant ? "" : zeta_part + body);
  }
  return sum.str();
}

std::string latex(const BivariatePoly& f) {
  SignedSum sum;
  for (const auto& [exp, coeff] : f.terms()) {
    std::string body;
    if (exp.first != 0) body += power("x", exp.first);
    if (exp.second != 0) body += power("y", exp.second);
    auto [scalar, zeta_part] = split_coefficient(coeff);
    sum.add(scalar, zeta_part + body);
  }
  return sum.str();
}

std::string latex(const QPlaneElement& f) {
  SignedSum sum;
  for (const auto& [exp, coeff] : f.terms()) {
    std::string body;
    if (exp.first != 0) body += power("X", exp.first);
    if (exp.second != 0) body += power("Y", exp.second);
    auto [scalar, zeta_part] = split_coefficient(coeff);
    sum.add(scalar, zeta_part + body);
  }
  return sum.str();
}

std::string latex(const UniPoly& f) {
  SignedSum sum;
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
    if (f.coeffs[i].is_zero()) continue;
    auto [scalar, zeta_part] = split_coefficient(f.coeffs[i]);
    sum.add(scalar, zeta_part + (i == 0 ? "" : power("t", static_cast<int>(i))));
  }
  return sum.str();
}

std::string latex_closed_form(FormKind kind, const Basis& basis, const LaurentPoly& collected) {
  const std::string p = std::to_string(basis.p());
  std::string out = "\\Delta_{P,Q}^{*" + p + "} = ";
  const std::string full_index = "i_1,\\ldots,i_{" + p + "}\\in\\mathbb{Z}/" + p + "\\mathbb{Z}";
  const std::string restricted = "\\substack{" + full_index + "\\\\ " + p + "\\mid\\sum_\\ell i_\\ell}";
  switch (kind) {
    case FormKind::kGamma:
      out += "\\sum_{" + restricted + "} e_{" + p + "}(Q,P)^{\\sum_{\\ell=1}^{" + p +
             "}\\ell i_\\ell}\\prod_{\\ell=1}^{" + p + "}\\gamma(Q+i_\\ell P)\\,\\delta_{\\mathcal O}";
      break;
    case FormKind::kRho:
      out += "\\sum_{" + restricted + "} e_{" + p + "}(Q,P)^{\\sum_{\\ell=1}^{" + p +
             "}\\ell i_\\ell}\\prod_{j=1}^{" + std::to_string(basis.p() - 1) +
             "}\\rho\\Bigl(jQ+\\sum_{\\ell=1}^{j}i_\\ell P,\\,Q+i_{j+1}P\\Bigr)\\,\\delta_{\\mathcal O}";
      break;
    case FormKind::kIntermediate:
      out += "\\sum_{" + full_index + "} \\varepsilon_{" + p + "}(Q,P)^{\\sum_{\\ell=1}^{" + p +
             "}(2\\ell-1)i_\\ell}\\frac{\\prod_{\\ell=1}^{" + p +
             "}\\gamma(Q+i_\\ell P)}{\\gamma((\\sum_\\ell i_\\ell)P)}\\,\\delta_{(\\sum_\\ell i_\\ell)P}";
      break;
  }
  out += "\n  = \\Bigl(" + latex(collected, basis) + "\\Bigr)\\,\\delta_{\\mathcal O}";
  return out;
}

}  // namespace tate
