// Copyright 2026 The tate Authors.
// SPDX-License-Identifier: Apache-2.0
//
// JSON and LaTeX renderings. JSON keys keep insertion order and terms follow
// the canonical monomial / point order, so output is byte-stable.
#pragma once

#include <json.hpp>
#include <string>

#include "tate/algebra.hpp"
#include "tate/cyclotomic.hpp"
#include "tate/laurent.hpp"
#include "tate/local_pairing.hpp"
#include "tate/qplane.hpp"

namespace tate {

using Json = nlohmann::ordered_json;

/// Array of "num/den" strings in the power basis.
Json to_json(const CycNumber& x);
/// [a, b]
Json to_json(const TorsionPoint& t);
/// [{"point":"a,b","exp":n}, ...]
Json to_json(const LaurentMonomial& m);
/// [{"coeff":<CycNumber>,"monomial":<LaurentMonomial>}, ...]
Json to_json(const LaurentPoly& f);
/// [{"point":"a,b","coeff":<LaurentPoly>}, ...]
Json to_json(const AlgebraElement<SymbolicRing>& f);
/// [{"point":"a,b","coeff":n}, ...]
Json to_json(const AlgebraElement<ModularRing>& f);
/// {"value":"k/p","model":{...},"convention":"e(Q,P)=zeta"}
Json to_json(const PairingValue& value, const TameFieldModel& model);

/// "Q+2P", "2Q", "P", "O" relative to the basis.
std::string point_label(const TorsionPoint& t, const Basis& basis);

std::string latex(const CycNumber& x);
std::string latex(const LaurentPoly& f, const Basis& basis);
std::string latex(const BivariatePoly& f);
std::string latex(const QPlaneElement& f);
std::string latex(const UniPoly& f);

enum class FormKind { kGamma, kRho, kIntermediate };

/// Display of Delta^{*p} as an index-tuple sum followed by its collected value.
std::string latex_closed_form(FormKind kind, const Basis& basis, const LaurentPoly& collected);

}  // namespace tate
