#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qeta/fshuffle.hpp"
#include "qeta/io.hpp"
#include "qeta/nsym.hpp"
#include "qeta/oracle.hpp"
#include "qeta/products.hpp"
#include "qeta/verify.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace qeta;

struct OutputOptions {
  bool json = false;
  std::optional<Rational> q0;
};

QSymElement maybe_specialize(QSymElement e, const OutputOptions& opts) {
  return opts.q0 ? specialize(e, *opts.q0) : e;
}

NSymElement maybe_specialize(NSymElement e, const OutputOptions& opts) {
  return opts.q0 ? specialize(e, *opts.q0) : e;
}

void print_qsym(const QSymElement& e, const OutputOptions& opts) {
  const QSymElement out = maybe_specialize(e, opts);
  if (opts.json) {
    std::cout << to_json(out).dump() << '\n';
  } else {
    std::cout << format_element(out);
  }
}

void print_nsym(const NSymElement& e, const OutputOptions& opts) {
  const NSymElement out = maybe_specialize(e, opts);
  if (opts.json) {
    std::cout << to_json(out).dump() << '\n';
  } else {
    std::cout << format_element(out);
  }
}

void print_word(const FreeWordElement& e, const OutputOptions& opts) {
  FreeWordElement out = e;
  if (opts.q0) {
    FreeWordElement spec;
    for (const auto& [word, c] : e.terms()) {
      spec.add(word, Scalar::from_rational(c.evaluate(*opts.q0)));
    }
    out = spec;
  }
  if (opts.json) {
    std::cout << to_json(out).dump() << '\n';
  } else {
    std::cout << format_element(out);
  }
}

template <class Tensor>
Tensor specialize_tensor(const Tensor& t, const Rational& q0) {
  Tensor out(t.left_basis(), t.right_basis());
  for (const auto& [key, c] : t.terms()) {
    out.add(key.first, key.second, Scalar::from_rational(c.evaluate(q0)));
  }
  return out;
}

template <class Tensor>
void print_tensor(const Tensor& t, const OutputOptions& opts) {
  const Tensor out = opts.q0 ? specialize_tensor(t, *opts.q0) : t;
  if (opts.json) {
    std::cout << to_json(out).dump() << '\n';
  } else {
    std::cout << format_tensor(out);
  }
}

// Element arguments may be inline text or the path of a file holding it.
ParsedElement parse_element_arg(const std::string& spec) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(spec, ec)) {
    std::ifstream in(spec);
    if (!in) throw ParseError("cannot read element file '" + spec + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_element(buf.str());
  }
  return parse_element(spec);
}

QSymElement as_qsym(const ParsedElement& e, const char* where) {
  if (const auto* q = std::get_if<QSymElement>(&e)) return *q;
  throw UsageError(std::string(where) + " needs a QSym element");
}

NSymElement as_nsym(const ParsedElement& e, const char* where) {
  if (const auto* n = std::get_if<NSymElement>(&e)) return *n;
  throw UsageError(std::string(where) + " needs an NSym element");
}

int default_maxdeg() {
  if (const char* env = std::getenv("QETA_MAXDEG")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw UsageError("QETA_MAXDEG must be an integer");
    }
  }
  return 6;
}

int run_verify(const std::string& suite, int maxdeg, bool serial,
               int threads) {
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#else
  (void)threads;
#endif
  const std::vector<Family> families = build_suite(suite, maxdeg);
  const std::vector<FamilyResult> results = run_families(families, !serial);
  int total = 0;
  int failed = 0;
  for (const FamilyResult& r : results) {
    total += r.total;
    failed += r.failed;
    std::cout << r.name << ": ";
    if (r.failed == 0) {
      std::cout << "pass (" << r.total << " checks)\n";
    } else {
      std::cout << "FAIL (" << r.failed << "/" << r.total << " failed";
      if (!r.failures.empty()) {
        std::cout << "; e.g. " << r.failures.front();
      }
      std::cout << ")\n";
    }
  }
  std::cout << "suite " << suite << " maxdeg " << maxdeg << ": "
            << (failed == 0 ? "pass" : "FAIL") << " (" << total
            << " checks, " << failed << " failed)\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "qeta: exact kernel for the enriched q-monomial basis of QSym and its "
      "dual"};
  app.require_subcommand(1);
  app.fallthrough(true);

  OutputOptions opts;
  app.add_flag("--json", opts.json, "emit JSON instead of term lines");
  app.add_option_function<std::string>(
      "--q",
      [&opts](const std::string& text) { opts.q0 = parse_rational(text); },
      "specialize q to this rational at output time");

  int rc = 0;

  // expand
  auto* expand_cmd =
      app.add_subcommand("expand", "truncated polynomial expansion");
  std::string expand_elem;
  int expand_nvars = -1;
  int expand_deg = -1;
  expand_cmd->add_option("--elem", expand_elem, "element to expand")
      ->required();
  expand_cmd->add_option("--nvars", expand_nvars, "number of variables");
  expand_cmd->add_option("--maxdeg", expand_deg, "truncation degree");
  expand_cmd->callback([&] {
    const QSymElement elem = as_qsym(parse_element_arg(expand_elem), "expand");
    const int d = expand_deg >= 0 ? expand_deg : to_m(elem).degree();
    const int n = expand_nvars >= 0 ? expand_nvars : d;
    TruncatedPolynomial poly = expand(elem, n, d);
    if (opts.q0) {
      TruncatedPolynomial spec(poly.nvars(), poly.maxdeg());
      for (const auto& [mono, c] : poly.terms()) {
        spec.add(mono, Scalar::from_rational(c.evaluate(*opts.q0)));
      }
      poly = spec;
    }
    std::cout << poly.to_string();
  });

  // convert
  auto* convert_cmd = app.add_subcommand("convert", "change of basis");
  std::string convert_elem, convert_to;
  convert_cmd->add_option("--elem", convert_elem, "element to convert")
      ->required();
  convert_cmd->add_option("--to", convert_to, "target basis (M, L, Eta, H, EtaStar)")
      ->required();
  convert_cmd->callback([&] {
    const ParsedElement parsed = parse_element_arg(convert_elem);
    if (const auto* q = std::get_if<QSymElement>(&parsed)) {
      QBasis target;
      if (convert_to == "M") {
        target = QBasis::M;
      } else if (convert_to == "L") {
        target = QBasis::L;
      } else if (convert_to == "Eta" || convert_to == "eta") {
        target = QBasis::Eta;
      } else {
        throw UsageError("QSym target basis must be M, L, or Eta");
      }
      print_qsym(to_basis(*q, target), opts);
    } else if (const auto* n = std::get_if<NSymElement>(&parsed)) {
      if (convert_to == "H") {
        print_nsym(to_h(*n), opts);
      } else if (convert_to == "EtaStar" || convert_to == "etastar") {
        print_nsym(to_eta_star(to_h(*n)), opts);
      } else {
        throw UsageError("NSym conversion target must be H or EtaStar");
      }
    } else {
      throw UsageError("convert needs a QSym or NSym element");
    }
  });

  // product
  auto* product_cmd = app.add_subcommand("product", "multiply two elements");
  std::string product_left, product_right, product_method = "v1";
  product_cmd->add_option("--left", product_left, "left factor")->required();
  product_cmd->add_option("--right", product_right, "right factor")
      ->required();
  product_cmd->add_option("--method", product_method,
                          "v1|v2|v3|m|oracle (QSym) or h (NSym)");
  product_cmd->callback([&] {
    // Bare compositions are accepted as eta_<comp> for the eta rules.
    auto parse_factor = [&](const std::string& text) -> ParsedElement {
      if (text.find(':') == std::string::npos && text.find('{') != 0) {
        return QSymElement(QBasis::Eta, parse_composition(text),
                           Scalar::one());
      }
      return parse_element_arg(text);
    };
    const ParsedElement left = parse_factor(product_left);
    const ParsedElement right = parse_factor(product_right);
    if (std::holds_alternative<NSymElement>(left) ||
        std::holds_alternative<NSymElement>(right)) {
      const NSymElement l = to_h(as_nsym(left, "product"));
      const NSymElement r = to_h(as_nsym(right, "product"));
      print_nsym(h_product(l, r), opts);
      return;
    }
    const QSymElement l = as_qsym(left, "product");
    const QSymElement r = as_qsym(right, "product");
    if (product_method == "m") {
      print_qsym(m_product(to_m(l), to_m(r)), opts);
      return;
    }
    if (product_method == "oracle") {
      const QSymElement lm = to_m(l);
      const QSymElement rm = to_m(r);
      const int n = std::max(1, lm.degree() + rm.degree());
      print_qsym(extract_m(poly_product(expand(lm, n, n), expand(rm, n, n))),
                 opts);
      return;
    }
    QSymElement (*rule)(const Composition&, const Composition&) = nullptr;
    if (product_method == "v1") rule = eta_product_v1;
    else if (product_method == "v2") rule = eta_product_v2;
    else if (product_method == "v3") rule = eta_product_v3;
    else throw UsageError("unknown product method '" + product_method + "'");
    const QSymElement le = to_basis(l, QBasis::Eta);
    const QSymElement re = to_basis(r, QBasis::Eta);
    QSymElement result(QBasis::Eta);
    for (const auto& [a, ca] : le.terms()) {
      for (const auto& [b, cb] : re.terms()) {
        const QSymElement prod = rule(a, b);
        for (const auto& [comp, c] : prod.terms()) {
          result.add(comp, ca * cb * c);
        }
      }
    }
    print_qsym(result, opts);
  });

  // coproduct
  auto* coproduct_cmd = app.add_subcommand("coproduct", "comultiply");
  std::string coproduct_elem;
  coproduct_cmd->add_option("--elem", coproduct_elem, "element")->required();
  coproduct_cmd->callback([&] {
    const ParsedElement parsed = parse_element_arg(coproduct_elem);
    if (const auto* q = std::get_if<QSymElement>(&parsed)) {
      if (q->basis() == QBasis::Eta) {
        QTensor result(QBasis::Eta, QBasis::Eta);
        for (const auto& [alpha, c] : q->terms()) {
          const QTensor part = coproduct_eta(alpha);
          for (const auto& [key, d] : part.terms()) {
            result.add(key.first, key.second, c * d);
          }
        }
        print_tensor(result, opts);
      } else {
        print_tensor(coproduct_m(to_m(*q)), opts);
      }
    } else if (const auto* n = std::get_if<NSymElement>(&parsed)) {
      if (n->basis() == NBasis::EtaStar) {
        NTensor result(NBasis::EtaStar, NBasis::EtaStar);
        for (const auto& [alpha, c] : n->terms()) {
          const NTensor part = coproduct_eta_star(alpha);
          for (const auto& [key, d] : part.terms()) {
            result.add(key.first, key.second, c * d);
          }
        }
        print_tensor(result, opts);
      } else {
        print_tensor(coproduct_h(*n), opts);
      }
    } else if (const auto* w = std::get_if<FreeWordElement>(&parsed)) {
      if (opts.json) throw UsageError("no JSON form for free-word tensors");
      std::cout << format_tensor(deconcat(*w));
    } else {
      throw UsageError("coproduct needs an element, not a tensor");
    }
  });

  // antipode
  auto* antipode_cmd = app.add_subcommand("antipode", "apply the antipode");
  std::string antipode_elem, antipode_comp, antipode_method = "m";
  antipode_cmd->add_option("--elem", antipode_elem, "QSym element");
  antipode_cmd->add_option("--comp", antipode_comp,
                           "composition (shorthand for an eta term)");
  antipode_cmd->add_option("--method", antipode_method, "m|s|s2");
  antipode_cmd->callback([&] {
    QSymElement elem(QBasis::Eta);
    if (!antipode_comp.empty() || antipode_elem.empty()) {
      elem = QSymElement(QBasis::Eta, parse_composition(antipode_comp),
                         Scalar::one());
    } else {
      elem = as_qsym(parse_element_arg(antipode_elem), "antipode");
    }
    if (antipode_method == "m") {
      print_qsym(antipode_m(to_m(elem)), opts);
    } else if (antipode_method == "s2") {
      const QSymElement in_eta = to_basis(elem, QBasis::Eta);
      QSymElement result(QBasis::Eta);
      for (const auto& [alpha, c] : in_eta.terms()) {
        const QSymElement part = antipode_eta_s2(alpha);
        for (const auto& [beta, d] : part.terms()) {
          result.add(beta, c * d);
        }
      }
      print_qsym(result, opts);
    } else if (antipode_method == "s") {
      if (opts.q0 && *opts.q0 == 0) {
        throw PoleError(
            "antipode method s uses the reciprocal parameter 1/q; q = 0 is "
            "a pole");
      }
      const QSymElement in_eta = to_basis(elem, QBasis::Eta);
      QSymElement result(QBasis::M);
      for (const auto& [alpha, c] : in_eta.terms()) {
        const QSymElement part = antipode_eta_s(alpha);
        for (const auto& [beta, d] : part.terms()) {
          result.add(beta, c * d);
        }
      }
      print_qsym(result, opts);
    } else {
      throw UsageError("unknown antipode method '" + antipode_method + "'");
    }
  });

  // pair
  auto* pair_cmd =
      app.add_subcommand("pair", "duality pairing <NSym, QSym>");
  std::string pair_nsym, pair_qsym;
  pair_cmd->add_option("--nsym", pair_nsym, "NSym element")->required();
  pair_cmd->add_option("--qsym", pair_qsym, "QSym element")->required();
  pair_cmd->callback([&] {
    const NSymElement h = as_nsym(parse_element_arg(pair_nsym), "pair");
    const QSymElement f = as_qsym(parse_element_arg(pair_qsym), "pair");
    Scalar value = pairing(h, f);
    if (opts.q0) value = Scalar::from_rational(value.evaluate(*opts.q0));
    if (opts.json) {
      std::cout << to_json(value).dump() << '\n';
    } else {
      std::cout << value.to_string() << '\n';
    }
  });

  // stufufufflers
  auto* stuff_cmd = app.add_subcommand(
      "stufufufflers", "enumerate stufufufflers with their statistics");
  std::string stuff_left, stuff_right;
  stuff_cmd->add_option("--left", stuff_left, "left composition")->required();
  stuff_cmd->add_option("--right", stuff_right, "right composition")
      ->required();
  stuff_cmd->callback([&] {
    const Composition delta = parse_composition(stuff_left);
    const Composition epsilon = parse_composition(stuff_right);
    const auto all = enumerate_stufufufflers(delta.length(), epsilon.length());
    for (const Stufufuffler& f : all) {
      const StufuffleStats st = stats(f, delta, epsilon);
      std::cout << f.to_string() << "  wt=(" << st.wt.to_string()
                << ") loss=" << st.loss << " poise=" << st.poise << '\n';
    }
    std::cout << all.size() << " stufufufflers\n";
  });

  // sharp
  auto* sharp_cmd =
      app.add_subcommand("sharp", "stufufuffle product in the free algebra");
  std::string sharp_left, sharp_right, sharp_a = "0", sharp_b = "0",
                                       sharp_u;
  sharp_cmd->add_option("--left", sharp_left, "left word")->required();
  sharp_cmd->add_option("--right", sharp_right, "right word")->required();
  sharp_cmd->add_option("--a", sharp_a, "parameter a (rational)");
  sharp_cmd->add_option("--b", sharp_b, "parameter b (rational)");
  sharp_cmd->add_option("--u", sharp_u,
                        "use a = (q-1)u, b = -q u^2 for this rational u");
  sharp_cmd->callback([&] {
    SharpParams params{Scalar::from_rational(parse_rational(sharp_a)),
                       Scalar::from_rational(parse_rational(sharp_b))};
    if (!sharp_u.empty()) params = sharp_params_for(parse_rational(sharp_u));
    const FreeWordElement left(parse_composition(sharp_left), Scalar::one());
    const FreeWordElement right(parse_composition(sharp_right),
                                Scalar::one());
    print_word(sharp(left, right, params), opts);
  });

  // verify
  auto* verify_cmd =
      app.add_subcommand("verify", "run the identity verification suites");
  std::string verify_suite = "all";
  int verify_maxdeg = -1;
  bool verify_serial = false;
  int verify_threads = 0;
  verify_cmd->add_option("--suite", verify_suite,
                         "compositions|bases|products|coproduct|antipode|"
                         "dual|series|shuffle|subalg|all");
  verify_cmd->add_option("--maxdeg", verify_maxdeg,
                         "degree bound (default 6, env QETA_MAXDEG)");
  verify_cmd->add_flag("--serial", verify_serial,
                       "run the serial reference instead of OpenMP");
  verify_cmd->add_option("--threads", verify_threads,
                         "OpenMP thread count (0 = default)");
  verify_cmd->callback([&] {
    const int maxdeg = verify_maxdeg >= 0 ? verify_maxdeg : default_maxdeg();
    rc = run_verify(verify_suite, maxdeg, verify_serial, verify_threads);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const PoleError& e) {
    std::cerr << "pole error: " << e.what() << '\n';
    return 3;
  } catch (const ArithmeticError& e) {
    std::cerr << "arithmetic error: " << e.what() << '\n';
    return 3;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << '\n';
    return 3;
  }
  return rc;
}
