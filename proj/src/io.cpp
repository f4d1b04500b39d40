#include "qeta/io.hpp"

#include <limits>
#include <sstream>

namespace qeta {

namespace {

using nlohmann::json;

json int_to_json(const Int& value) {
  // Coefficients at desk scale fit comfortably in 64 bits.
  if (value < std::numeric_limits<int64_t>::min() ||
      value > std::numeric_limits<int64_t>::max()) {
    throw ParseError("integer coefficient too large for JSON");
  }
  return json(static_cast<int64_t>(value));
}

json poly_to_json(const IntPolynomial& p) {
  json arr = json::array();
  if (p.is_zero()) {
    arr.push_back(0);
    return arr;
  }
  for (const Int& c : p.coeffs()) arr.push_back(int_to_json(c));
  return arr;
}

IntPolynomial poly_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("polynomial must be an integer array");
  std::vector<Int> coeffs;
  for (const auto& c : j) {
    if (!c.is_number_integer()) {
      throw ParseError("polynomial coefficients must be integers");
    }
    coeffs.push_back(Int(c.get<int64_t>()));
  }
  return IntPolynomial(std::move(coeffs));
}

json comp_to_json(const Composition& alpha) {
  json arr = json::array();
  for (int e : alpha.entries()) arr.push_back(e);
  return arr;
}

Composition comp_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("composition must be an integer array");
  std::vector<int> entries;
  for (const auto& e : j) {
    if (!e.is_number_integer()) {
      throw ParseError("composition entries must be integers");
    }
    entries.push_back(e.get<int>());
  }
  try {
    return Composition(std::move(entries));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

QBasis qbasis_from_name(const std::string& name) {
  if (name == "M") return QBasis::M;
  if (name == "L") return QBasis::L;
  if (name == "Eta" || name == "eta") return QBasis::Eta;
  throw ParseError("unknown QSym basis '" + name + "'");
}

NBasis nbasis_from_name(const std::string& name) {
  if (name == "H") return NBasis::H;
  if (name == "EtaStar" || name == "etastar") return NBasis::EtaStar;
  throw ParseError("unknown NSym basis '" + name + "'");
}

std::string display_name(QBasis b) {
  switch (b) {
    case QBasis::M: return "M";
    case QBasis::L: return "L";
    case QBasis::Eta: return "eta";
  }
  return "?";
}

std::string display_name(NBasis b) {
  switch (b) {
    case NBasis::H: return "H";
    case NBasis::EtaStar: return "etastar";
  }
  return "?";
}

template <class Element>
std::string format_term_lines(const Element& f, const std::string& symbol) {
  if (f.terms().empty()) return "0\n";
  std::ostringstream out;
  for (const auto& [comp, c] : f.terms()) {
    out << c.to_string() << " * " << symbol << '[' << comp.to_string()
        << "]\n";
  }
  return out.str();
}

template <class Tensor>
std::string format_tensor_lines(const Tensor& t, const std::string& left,
                                const std::string& right) {
  if (t.terms().empty()) return "0\n";
  std::ostringstream out;
  for (const auto& [key, c] : t.terms()) {
    out << c.to_string() << " * " << left << '[' << key.first.to_string()
        << "] (x) " << right << '[' << key.second.to_string() << "]\n";
  }
  return out.str();
}

json tensor_terms_to_json(const PairTermMap& terms) {
  json arr = json::array();
  for (const auto& [key, c] : terms) {
    arr.push_back(json{{"left", comp_to_json(key.first)},
                       {"right", comp_to_json(key.second)},
                       {"coeff", to_json(c)}});
  }
  return arr;
}

}  // namespace

json to_json(const Scalar& s) {
  return json{{"num", poly_to_json(s.num())}, {"den", poly_to_json(s.den())}};
}

Scalar scalar_from_json(const json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) {
    throw ParseError("scalar needs {\"num\":[...],\"den\":[...]}");
  }
  const IntPolynomial den = poly_from_json(j["den"]);
  if (den.is_zero()) throw ParseError("scalar with zero denominator");
  return Scalar(poly_from_json(j["num"]), den);
}

json to_json(const QSymElement& f) {
  json terms = json::array();
  for (const auto& [comp, c] : f.terms()) {
    terms.push_back(json{{"comp", comp_to_json(comp)}, {"coeff", to_json(c)}});
  }
  return json{{"algebra", "QSym"},
              {"basis", basis_name(f.basis())},
              {"terms", terms}};
}

QSymElement qsym_from_json(const json& j) {
  QSymElement result(qbasis_from_name(j.at("basis").get<std::string>()));
  for (const auto& term : j.at("terms")) {
    result.add(comp_from_json(term.at("comp")),
               scalar_from_json(term.at("coeff")));
  }
  return result;
}

json to_json(const NSymElement& f) {
  json terms = json::array();
  for (const auto& [comp, c] : f.terms()) {
    terms.push_back(json{{"comp", comp_to_json(comp)}, {"coeff", to_json(c)}});
  }
  return json{{"algebra", "NSym"},
              {"basis", basis_name(f.basis())},
              {"terms", terms}};
}

NSymElement nsym_from_json(const json& j) {
  NSymElement result(nbasis_from_name(j.at("basis").get<std::string>()));
  for (const auto& term : j.at("terms")) {
    result.add(comp_from_json(term.at("comp")),
               scalar_from_json(term.at("coeff")));
  }
  return result;
}

json to_json(const FreeWordElement& f) {
  json terms = json::array();
  for (const auto& [word, c] : f.terms()) {
    terms.push_back(json{{"comp", comp_to_json(word)}, {"coeff", to_json(c)}});
  }
  return json{{"algebra", "Free"}, {"terms", terms}};
}

FreeWordElement word_from_json(const json& j) {
  FreeWordElement result;
  for (const auto& term : j.at("terms")) {
    result.add(comp_from_json(term.at("comp")),
               scalar_from_json(term.at("coeff")));
  }
  return result;
}

json to_json(const QTensor& t) {
  return json{{"algebra", "QSym"},
              {"tensor", true},
              {"left_basis", basis_name(t.left_basis())},
              {"right_basis", basis_name(t.right_basis())},
              {"terms", tensor_terms_to_json(t.terms())}};
}

json to_json(const NTensor& t) {
  return json{{"algebra", "NSym"},
              {"tensor", true},
              {"left_basis", basis_name(t.left_basis())},
              {"right_basis", basis_name(t.right_basis())},
              {"terms", tensor_terms_to_json(t.terms())}};
}

QTensor qtensor_from_json(const json& j) {
  QTensor result(qbasis_from_name(j.at("left_basis").get<std::string>()),
                 qbasis_from_name(j.at("right_basis").get<std::string>()));
  for (const auto& term : j.at("terms")) {
    result.add(comp_from_json(term.at("left")),
               comp_from_json(term.at("right")),
               scalar_from_json(term.at("coeff")));
  }
  return result;
}

NTensor ntensor_from_json(const json& j) {
  NTensor result(nbasis_from_name(j.at("left_basis").get<std::string>()),
                 nbasis_from_name(j.at("right_basis").get<std::string>()));
  for (const auto& term : j.at("terms")) {
    result.add(comp_from_json(term.at("left")),
               comp_from_json(term.at("right")),
               scalar_from_json(term.at("coeff")));
  }
  return result;
}

json to_json(const NSymSeries& s) {
  json coeffs = json::array();
  for (int d = 0; d <= s.trunc(); ++d) coeffs.push_back(to_json(s.coeff(d)));
  return json{{"trunc", s.trunc()}, {"coeffs", coeffs}};
}

NSymSeries series_from_json(const json& j) {
  NSymSeries result(j.at("trunc").get<int>());
  const auto& coeffs = j.at("coeffs");
  for (int d = 0; d <= result.trunc() && d < static_cast<int>(coeffs.size());
       ++d) {
    result.set_coeff(d, nsym_from_json(coeffs[static_cast<size_t>(d)]));
  }
  return result;
}

ParsedElement parse_element(const std::string& text) {
  std::string trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(
                                 trimmed.front()))) {
    trimmed.erase(trimmed.begin());
  }
  while (!trimmed.empty() &&
         std::isspace(static_cast<unsigned char>(trimmed.back()))) {
    trimmed.pop_back();
  }
  if (!trimmed.empty() && trimmed.front() == '{') {
    json j;
    try {
      j = json::parse(trimmed);
    } catch (const json::exception& e) {
      throw ParseError(std::string("bad JSON: ") + e.what());
    }
    try {
      const std::string algebra = j.at("algebra").get<std::string>();
      if (j.value("tensor", false)) {
        if (algebra == "QSym") return qtensor_from_json(j);
        if (algebra == "NSym") return ntensor_from_json(j);
        throw ParseError("unknown tensor algebra '" + algebra + "'");
      }
      if (algebra == "QSym") return qsym_from_json(j);
      if (algebra == "NSym") return nsym_from_json(j);
      if (algebra == "Free") return word_from_json(j);
      throw ParseError("unknown algebra '" + algebra + "'");
    } catch (const json::exception& e) {
      throw ParseError(std::string("bad element JSON: ") + e.what());
    }
  }
  const size_t colon = trimmed.find(':');
  if (colon == std::string::npos) {
    throw ParseError("element shorthand needs '<basis>:<composition>'");
  }
  const std::string head = trimmed.substr(0, colon);
  const Composition comp = parse_composition(trimmed.substr(colon + 1));
  if (head == "M") return QSymElement(QBasis::M, comp, Scalar::one());
  if (head == "L") return QSymElement(QBasis::L, comp, Scalar::one());
  if (head == "eta" || head == "Eta") {
    return QSymElement(QBasis::Eta, comp, Scalar::one());
  }
  if (head == "H") return NSymElement(NBasis::H, comp, Scalar::one());
  if (head == "etastar" || head == "EtaStar") {
    return NSymElement(NBasis::EtaStar, comp, Scalar::one());
  }
  if (head == "x" || head == "word") {
    return FreeWordElement(comp, Scalar::one());
  }
  throw ParseError("unknown basis prefix '" + head + "'");
}

Rational parse_rational(const std::string& text) {
  try {
    const size_t slash = text.find('/');
    if (slash == std::string::npos) return Rational(Int(text));
    const Int num(text.substr(0, slash));
    const Int den(text.substr(slash + 1));
    if (den == 0) throw ParseError("rational with zero denominator");
    return Rational(num, den);
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("bad rational '" + text + "'");
  }
}

std::string format_element(const QSymElement& f) {
  return format_term_lines(f, display_name(f.basis()));
}

std::string format_element(const NSymElement& f) {
  return format_term_lines(f, display_name(f.basis()));
}

std::string format_element(const FreeWordElement& f) {
  return format_term_lines(f, "x");
}

std::string format_tensor(const QTensor& t) {
  return format_tensor_lines(t, display_name(t.left_basis()),
                             display_name(t.right_basis()));
}

std::string format_tensor(const NTensor& t) {
  return format_tensor_lines(t, display_name(t.left_basis()),
                             display_name(t.right_basis()));
}

std::string format_tensor(const FreeTensor& t) {
  return format_tensor_lines(t, "x", "x");
}

}  // namespace qeta
