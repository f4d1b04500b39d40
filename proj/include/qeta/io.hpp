#ifndef QETA_IO_HPP
#define QETA_IO_HPP

#include <string>
#include <variant>

#include <json.hpp>

#include "qeta/elements.hpp"
#include "qeta/nsym.hpp"
#include "qeta/oracle.hpp"

namespace qeta {

using ParsedElement =
    std::variant<QSymElement, NSymElement, FreeWordElement, QTensor, NTensor>;

/// Parses either the JSON element format or the shorthand
/// "<basis>:<composition>" with basis one of M, L, eta, H, etastar, x.
ParsedElement parse_element(const std::string& text);

Rational parse_rational(const std::string& text);

nlohmann::json to_json(const Scalar& s);
Scalar scalar_from_json(const nlohmann::json& j);

nlohmann::json to_json(const QSymElement& f);
QSymElement qsym_from_json(const nlohmann::json& j);

nlohmann::json to_json(const NSymElement& f);
NSymElement nsym_from_json(const nlohmann::json& j);

nlohmann::json to_json(const FreeWordElement& f);
FreeWordElement word_from_json(const nlohmann::json& j);

nlohmann::json to_json(const QTensor& t);
nlohmann::json to_json(const NTensor& t);
QTensor qtensor_from_json(const nlohmann::json& j);
NTensor ntensor_from_json(const nlohmann::json& j);

nlohmann::json to_json(const NSymSeries& s);
NSymSeries series_from_json(const nlohmann::json& j);

/// Human-readable term lists, one "coeff * basis[entries]" per line,
/// in canonical term order.
std::string format_element(const QSymElement& f);
std::string format_element(const NSymElement& f);
std::string format_element(const FreeWordElement& f);
std::string format_tensor(const QTensor& t);
std::string format_tensor(const NTensor& t);
std::string format_tensor(const FreeTensor& t);

}  // namespace qeta

#endif
