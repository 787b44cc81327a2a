#include "tlhat/json_io.hpp"

#include <cstdlib>
#include <fstream>

#include "json.hpp"

namespace tlhat {

using nlohmann::json;

namespace {

json coeffs_to_json(const Poly& p) {
  json out = json::array();
  for (const mpz_class& c : p.coeffs()) {
    if (c.fits_slong_p())
      out.push_back(c.get_si());
    else
      out.push_back(c.get_str());
  }
  return out;
}

Poly coeffs_from_json(const json& j) {
  if (!j.is_array()) throw UsageError("coefficient list must be an array");
  std::vector<mpz_class> c;
  for (const auto& x : j) {
    if (x.is_number_integer())
      c.emplace_back(std::to_string(x.get<long long>()));
    else if (x.is_string())
      c.emplace_back(x.get<std::string>());
    else
      throw UsageError("coefficients must be integers or decimal strings");
  }
  return Poly(std::move(c));
}

json ring_json(const RingElem& c) { return {{"num", coeffs_to_json(c.num())}, {"den", coeffs_to_json(c.den())}}; }

RingElem ring_value(const json& j) {
  Poly den = coeffs_from_json(j.at("den"));
  if (den.is_zero()) throw UsageError("zero denominator");
  return RingElem(coeffs_from_json(j.at("num")), std::move(den));
}

json word_json(const System& sys, const Heap& h) {
  json w = json::array();
  for (Letter s : h.letters()) w.push_back(sys.letter_name(s));
  return w;
}

Heap heap_value(const System& sys, const json& w) {
  std::vector<Letter> letters;
  for (const auto& x : w) letters.push_back(sys.parse_letter(x.get<std::string>()));
  return heap_of(sys, letters);
}

json system_json(const System& sys) { return {{"rank", sys.rank}, {"affine", sys.affine}}; }

System system_value(const json& j) {
  const int rank = j.at("rank").get<int>();
  if (rank < 0) throw UsageError("rank must be non-negative");
  return j.at("affine").get<bool>() ? System::affine_of(rank) : System::finite(rank);
}

json terms_json(const System& sys, const Terms& t) {
  json out = json::array();
  for (const auto& [h, c] : t) out.push_back({{"word", word_json(sys, h)}, {"coeff", ring_json(c)}});
  return out;
}

json element_json(const Element& a) {
  return {{"system", system_json(a.system())}, {"basis", basis_name(a.basis())}, {"terms", terms_json(a.system(), a.terms())}};
}

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

std::string ring_to_json(const RingElem& c) { return ring_json(c).dump(); }

RingElem ring_from_json(const std::string& text) {
  try {
    return ring_value(parse_text(text));
  } catch (const json::exception& e) {
    throw UsageError(std::string("bad scalar JSON: ") + e.what());
  }
}

std::string element_to_json(const Element& a) { return element_json(a).dump(); }

Element element_from_json(const std::string& text) {
  try {
    const json j = parse_text(text);
    const System sys = system_value(j.at("system"));
    const Basis basis = parse_basis(j.at("basis").get<std::string>());
    Element out(sys, basis);
    for (const auto& t : j.at("terms")) out.add_term(heap_value(sys, t.at("word")), ring_value(t.at("coeff")));
    return out;
  } catch (const json::exception& e) {
    throw UsageError(std::string("bad element JSON: ") + e.what());
  }
}

std::string markov_combination_to_json(const MarkovCombination& m) {
  json terms = json::array();
  for (const auto& t : m.terms) {
    terms.push_back({{"coeff", ring_json(t.coeff)},
                     {"A_preimage", element_json(t.element.a_pre)},
                     {"epsilon", t.element.epsilon},
                     {"B_preimage", element_json(t.element.b_pre)}});
  }
  json audit = json::array();
  for (const auto& s : m.audit)
    audit.push_back({{"kind", s.kind == AuditStep::Kind::CyclicMove ? "cyclic-move" : "algebra-identity"}, {"text", s.text}});
  json residual = json::array();
  for (const auto& r : m.residual) residual.push_back({{"c_preimage", element_json(r.c_pre)}, {"k", r.k}});
  return json{{"n1", m.n1}, {"terms", terms}, {"residual", residual}, {"audit", audit}}.dump();
}

std::string cache_directory() {
  if (const char* d = std::getenv("TLHAT_CACHE_DIR"); d && *d) return d;
  if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return std::string(x) + "/tlhat";
  if (const char* h = std::getenv("HOME"); h && *h) return std::string(h) + "/.cache/tlhat";
  return ".tlhat-cache";
}

std::size_t save_product_cache(const std::string& path, const System& sys) {
  json entries = json::array();
  for (const auto& e : product_cache_entries()) {
    if (e.sys != sys) continue;
    entries.push_back({{"heap", word_json(sys, e.heap)}, {"letter", sys.letter_name(e.s)}, {"product", terms_json(sys, e.product)}});
  }
  const json doc{{"version", kJsonSchemaVersion}, {"kind", "product-cache"}, {"system", system_json(sys)}, {"entries", entries}};
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write cache file " + path);
  out << doc.dump() << '\n';
  return entries.size();
}

std::size_t load_product_cache(const std::string& path) {
  std::ifstream in(path);
  if (!in) return 0;
  try {
    const json doc = json::parse(in);
    if (doc.value("version", 0) != kJsonSchemaVersion || doc.value("kind", "") != "product-cache") return 0;
    const System sys = system_value(doc.at("system"));
    std::size_t n = 0;
    for (const auto& e : doc.at("entries")) {
      Terms t;
      for (const auto& term : e.at("product")) t.emplace(heap_value(sys, term.at("word")), ring_value(term.at("coeff")));
      seed_product_cache(sys, heap_value(sys, e.at("heap")), sys.parse_letter(e.at("letter").get<std::string>()), std::move(t));
      ++n;
    }
    return n;
  } catch (const std::exception& e) {
    throw UsageError("unreadable cache file " + path + ": " + e.what());
  }
}

}  // namespace tlhat
