// tlhat: command-line front end for the affine Temperley-Lieb engine.

#include <filesystem>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"
#include "tlhat/expr.hpp"
#include "tlhat/json_io.hpp"
#include "tlhat/maps.hpp"
#include "tlhat/markov.hpp"
#include "tlhat/trace.hpp"
#include "tlhat/verify.hpp"

namespace {

using nlohmann::json;
using namespace tlhat;

struct Options {
  int n = 0;
  bool affine = false;
  std::string basis = "g";
  std::string format = "json";
  unsigned long long seed = 1;
  int max_len = 0;
  int samples = 100;
  std::string suite = "all";
  std::string apply;
  int power = 1;
  std::string type = "jones";
  bool cache = false;
  std::vector<std::string> inputs;
};

bool text_output(const Options& o) { return o.format == "text"; }

System system_of(const Options& o) {
  if (o.n < 1) throw UsageError("--n must be at least 1");
  return o.affine ? System::affine_of(o.n - 1) : System::finite(o.n);
}

Element read_element(const std::string& input, const System& sys) {
  const auto first = input.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && input[first] == '{') return element_from_json(input);
  return parse_element(input, sys);
}

const std::string& single_input(const Options& o) {
  if (o.inputs.size() != 1) throw UsageError("expected exactly one input expression");
  return o.inputs.front();
}

json envelope(const std::string& command) { return {{"version", kJsonSchemaVersion}, {"command", command}}; }

void emit_element(const Options& o, const std::string& command, const Element& a) {
  const Element out = convert_basis(a, parse_basis(o.basis));
  if (text_output(o)) {
    std::cout << element_to_expr(out) << '\n';
    return;
  }
  json doc = envelope(command);
  doc["result"] = json::parse(element_to_json(out));
  std::cout << doc.dump() << '\n';
}

void emit_scalar(const Options& o, const std::string& command, const RingElem& c) {
  if (text_output(o)) {
    std::cout << c.to_string() << '\n';
    return;
  }
  json doc = envelope(command);
  doc["result"] = json::parse(ring_to_json(c));
  doc["text"] = c.to_string();
  std::cout << doc.dump() << '\n';
}

int cmd_nf(const Options& o) {
  emit_element(o, "nf", read_element(single_input(o), system_of(o)));
  return 0;
}

int cmd_mul(const Options& o) {
  if (o.inputs.empty()) throw UsageError("mul needs at least one factor");
  const System sys = system_of(o);
  Element acc = read_element(o.inputs.front(), sys);
  for (std::size_t i = 1; i < o.inputs.size(); ++i) acc = multiply(acc, read_element(o.inputs[i], acc.system()));
  emit_element(o, "mul", acc);
  return 0;
}

int cmd_inv(const Options& o) {
  const Element a = convert_basis(read_element(single_input(o), system_of(o)), Basis::g);
  if (a.terms().size() != 1) throw UsageError("only a multiple of a single basis element is invertible");
  const auto& [h, c] = *a.terms().begin();
  emit_element(o, "inv", inverse_of_basis_element(Element::basis_element(a.system(), h)) * c.inverse());
  return 0;
}

int cmd_trace(Options o) {
  RingElem value;
  if (o.type == "rho") {
    o.affine = true;
    value = rho(o.n, read_element(single_input(o), system_of(o)));
  } else if (o.type == "jones") {
    if (o.affine) throw UsageError("the Jones trace is defined on the finite algebra");
    value = jones_tau(read_element(single_input(o), system_of(o)));
  } else {
    throw UsageError("unknown trace type '" + o.type + "'");
  }
  emit_scalar(o, "trace", value);
  return 0;
}

int cmd_map(const Options& o) {
  const std::string& in = single_input(o);
  Element out;
  if (o.apply == "F") {
    if (o.power < 0) throw UsageError("F can only be iterated a non-negative number of times");
    out = read_element(in, System::affine_of(o.n - 1));
    for (int i = 0; i < o.power; ++i) out = apply_F(o.n + i, out);
  } else if (o.power != 1 && o.apply != "psi") {
    throw UsageError("--power applies to F and psi only");
  } else if (o.apply == "E") {
    out = apply_E(o.n, read_element(in, System::affine_of(o.n)));
  } else if (o.apply == "incl") {
    out = incl(read_element(in, System::finite(o.n)));
  } else if (o.apply == "psi") {
    out = apply_psi(read_element(in, System::affine_of(o.n - 1)), o.power);
  } else {
    throw UsageError("--apply must be one of F, E, incl, psi");
  }
  emit_element(o, "map", out);
  return 0;
}

int cmd_reduce(Options o) {
  o.affine = true;
  if (o.n == 0) o.n = 3;
  const MarkovCombination mc = reduce_trace_to_markov(read_element(single_input(o), system_of(o)));
  if (text_output(o)) {
    for (const auto& t : mc.terms)
      std::cout << "(" << t.coeff.to_string() << ") * [" << element_to_expr(t.element.a_pre) << "] g^" << t.element.epsilon
                << " [" << element_to_expr(t.element.b_pre) << "]\n";
    for (const auto& s : mc.audit)
      std::cout << "# " << (s.kind == AuditStep::Kind::CyclicMove ? "cyclic-move" : "algebra-identity") << ": " << s.text << '\n';
  } else {
    json doc = envelope("reduce-markov");
    doc["result"] = json::parse(markov_combination_to_json(mc));
    std::cout << doc.dump() << '\n';
  }
  return mc.residual.empty() ? 0 : 1;
}

int cmd_verify(const Options& o) {
  std::vector<std::string> suites = o.suite == "all" ? suite_names() : std::vector<std::string>{o.suite};
  for (const auto& s : suites)
    if (!is_suite(s)) throw UsageError("unknown suite '" + s + "'");
  SuiteConfig cfg{o.n, o.max_len, o.seed, o.samples};
  json report = json::array();
  bool ok = true;
  for (const auto& s : suites) {
    for (const Verification& v : run_suite(s, cfg)) {
      ok = ok && v.ok();
      if (text_output(o)) {
        std::cout << (v.ok() ? "PASS " : "FAIL ") << s << ": " << v.name << " (" << v.checks << " checks)\n";
        for (const auto& f : v.failures) std::cout << "  falsified: " << f << '\n';
      }
      report.push_back({{"suite", s}, {"name", v.name}, {"checks", v.checks}, {"failures", v.failures}});
    }
  }
  if (!text_output(o)) {
    json doc = envelope("verify");
    doc["ok"] = ok;
    doc["results"] = report;
    std::cout << doc.dump() << '\n';
  }
  return ok ? 0 : 1;
}

int cmd_enumerate(const Options& o) {
  const System sys = system_of(o);
  if (sys.affine && o.max_len <= 0) throw UsageError("enumerating an affine algebra needs --max-len");
  const auto heaps = enumerate_fc(sys, o.max_len > 0 ? o.max_len : -1);
  if (text_output(o)) {
    for (const Heap& h : heaps) std::cout << h.to_string(sys) << '\n';
    return 0;
  }
  json words = json::array();
  for (const Heap& h : heaps) {
    json w = json::array();
    for (Letter s : h.letters()) w.push_back(sys.letter_name(s));
    words.push_back(w);
  }
  json doc = envelope("enumerate");
  doc["system"] = {{"rank", sys.rank}, {"affine", sys.affine}};
  doc["count"] = heaps.size();
  doc["words"] = words;
  std::cout << doc.dump() << '\n';
  return 0;
}

std::optional<std::string> cache_file(const Options& o) {
  if (!o.cache || o.n < 1) return std::nullopt;
  const System sys = system_of(o);
  std::filesystem::path dir(cache_directory());
  std::filesystem::create_directories(dir);
  return (dir / ("products-" + std::string(sys.affine ? "affine-" : "finite-") + std::to_string(sys.rank) + ".json")).string();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Affine Temperley-Lieb algebra engine"};
  app.require_subcommand(1);
  Options o;

  auto common = [&o](CLI::App* c) {
    c->add_option("--n", o.n, "Rank: TL_N, or TL-hat_N with --affine");
    c->add_flag("--affine", o.affine, "Work in the affine algebra");
    c->add_option("--basis", o.basis, "Output basis")->check(CLI::IsMember({"g", "T", "f"}));
    c->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    c->add_flag("--cache", o.cache, "Load and save the product cache for this system");
  };
  auto with_inputs = [&o](CLI::App* c) { c->add_option("inputs", o.inputs, "Expressions or element JSON"); };

  std::map<std::string, std::function<int()>> run;
  auto add = [&](const std::string& name, const std::string& help, std::function<int()> fn) {
    CLI::App* c = app.add_subcommand(name, help);
    common(c);
    run[name] = std::move(fn);
    return c;
  };

  with_inputs(add("nf", "Normal form of an expression", [&] { return cmd_nf(o); }));
  with_inputs(add("mul", "Product of the given factors", [&] { return cmd_mul(o); }));
  with_inputs(add("inv", "Inverse of a multiple of a basis element", [&] { return cmd_inv(o); }));
  CLI::App* trace = add("trace", "Jones trace or affine trace rho", [&] { return cmd_trace(o); });
  trace->add_option("--type", o.type, "jones or rho")->check(CLI::IsMember({"jones", "rho"}));
  with_inputs(trace);
  CLI::App* map = add("map", "Apply F, E, incl or psi", [&] { return cmd_map(o); });
  map->add_option("--apply", o.apply, "F, E, incl or psi")->required()->check(CLI::IsMember({"F", "E", "incl", "psi"}));
  map->add_option("--power", o.power, "Rotation for psi, iteration count for F");
  with_inputs(map);
  with_inputs(add("reduce-markov", "Rewrite a trace of TL-hat_3 over Markov elements", [&] { return cmd_reduce(o); }));
  CLI::App* verify = add("verify", "Run verification suites", [&] { return cmd_verify(o); });
  verify->add_option("--suite", o.suite, "Suite name or 'all'");
  verify->add_option("--max-len", o.max_len, "Length bound");
  verify->add_option("--seed", o.seed, "Random seed");
  verify->add_option("--samples", o.samples, "Random samples per property");
  CLI::App* enumerate = add("enumerate", "List fully commutative heaps", [&] { return cmd_enumerate(o); });
  enumerate->add_option("--max-len", o.max_len, "Length bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const auto file = cache_file(o);
    if (file) load_product_cache(*file);
    const int status = run.at(app.get_subcommands().front()->get_name())();
    if (file) save_product_cache(*file, system_of(o));
    return status;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
