// Command-line frontend: analyze tables, generate tables from permutation
// generators, construct catalog fixtures, and run the verification battery.
//
// Exit codes: 0 clean, 1 counterexample or internal inconsistency found,
// 2 malformed input, 3 generation failure, 4 usage error.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "nlohmann/json.hpp"

#include "centra/centra.hpp"

namespace {

using nlohmann::json;
using namespace centra;

constexpr int kExitClean = 0;
constexpr int kExitFinding = 1;
constexpr int kExitMalformed = 2;
constexpr int kExitGeneration = 3;
constexpr int kExitUsage = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot open \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int autotopism_cap(int flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("CENTRA_MAX_ORDER")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw UsageError("CENTRA_MAX_ORDER is not an integer: " + std::string(env));
    }
  }
  return 10;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) parts.push_back(item);
  return parts;
}

// Catalog name grammar: c12 | d4 | q8 | o16 | cyclic:N | product:AxBxC where
// the product components use the same grammar minus product.
CayleyTable construct_by_name(const std::string& name) {
  if (name == "c12") return c_loop_12();
  if (name == "d4") return dihedral(4);
  if (name == "q8") return quaternion();
  if (name == "o16") return cayley_loop();
  if (name.rfind("cyclic:", 0) == 0) {
    try {
      return cyclic(std::stoi(name.substr(7)));
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      throw UsageError("bad cyclic order in \"" + name + "\"");
    }
  }
  if (name.rfind("product:", 0) == 0) {
    std::vector<std::string> parts = split(name.substr(8), 'x');
    if (parts.size() < 2) throw UsageError("product needs at least two components");
    CayleyTable result = construct_by_name(parts[0]);
    for (std::size_t i = 1; i < parts.size(); ++i)
      result = direct_product(result, construct_by_name(parts[i]));
    return result;
  }
  throw UsageError("unknown fixture name \"" + name + "\"");
}

// Corpus grammar: comma-separated items. Each item is a fixture name,
// exhaustive:N (all normalized loops of order N), upto:N (orders 1..N),
// random:N:COUNT (seeded), or file:PATH.
std::vector<std::pair<std::string, CayleyTable>> build_corpus(
    const std::string& spec, std::uint64_t seed) {
  std::vector<std::pair<std::string, CayleyTable>> corpus;
  for (const std::string& item : split(spec, ',')) {
    if (item.empty()) continue;
    auto add_enumerated = [&](int order) {
      int index = 0;
      for (CayleyTable& t : enumerate_loops(order))
        corpus.emplace_back("exhaustive:" + std::to_string(order) + "#" +
                                std::to_string(index++),
                            std::move(t));
    };
    if (item.rfind("exhaustive:", 0) == 0) {
      add_enumerated(std::stoi(item.substr(11)));
    } else if (item.rfind("upto:", 0) == 0) {
      int max_order = std::stoi(item.substr(5));
      for (int n = 1; n <= max_order; ++n) add_enumerated(n);
    } else if (item.rfind("random:", 0) == 0) {
      std::vector<std::string> parts = split(item, ':');
      if (parts.size() != 3) throw UsageError("expected random:ORDER:COUNT");
      int order = std::stoi(parts[1]);
      int count = std::stoi(parts[2]);
      int index = 0;
      for (CayleyTable& t : random_loops(order, count, seed + static_cast<std::uint64_t>(order)))
        corpus.emplace_back("random:" + std::to_string(order) + "#" +
                                std::to_string(index++),
                            std::move(t));
    } else if (item.rfind("file:", 0) == 0) {
      corpus.emplace_back(item, CayleyTable::parse(read_input(item.substr(5))));
    } else {
      corpus.emplace_back(item, construct_by_name(item));
    }
  }
  if (corpus.empty()) throw UsageError("corpus \"" + spec + "\" is empty");
  return corpus;
}

json analyze_table(const CayleyTable& t, bool with_autotopisms, int cap) {
  PropertyReport props = analyze_properties(t);
  json doc = props.to_json();

  PermSet lambda = lambda_regular_set(t);
  PermSet rho = rho_regular_set(t);
  std::vector<MuPair> mu = mu_regular_set(t);
  json lambda_json = json::array(), rho_json = json::array(), mu_json = json::array();
  for (const Permutation& p : lambda) lambda_json.push_back(format_cycles(p));
  for (const Permutation& p : rho) rho_json.push_back(format_cycles(p));
  for (const MuPair& p : mu)
    mu_json.push_back({{"u", format_cycles(p.u)}, {"adjoint", format_cycles(p.adjoint)}});
  doc["regular"] = {{"lambda", lambda_json},
                    {"rho", rho_json},
                    {"mu", mu_json},
                    {"lambda_size", lambda.size()},
                    {"rho_size", rho.size()},
                    {"mu_size", mu.size()}};

  doc["theorems"] = {{"lc_auto_agree", check_theorem_lc_auto(t)},
                     {"rc_auto_agree", check_theorem_rc_auto(t)},
                     {"c_mu_agree", check_theorem_c_mu(t)}};

  PowerClosureResult pl = check_power_closure(t, Side::left, -6, 6);
  PowerClosureResult pr = check_power_closure(t, Side::right, -6, 6);
  doc["closures"] = {{"lcrc_left_agree", check_closure_lcrc(t, Side::left)},
                     {"lcrc_right_agree", check_closure_lcrc(t, Side::right)},
                     {"c_left_agree", check_closure_c(t, Side::left)},
                     {"c_right_agree", check_closure_c(t, Side::right)},
                     {"power_left", {{"holds", pl.holds}, {"vacuous", pl.vacuous}}},
                     {"power_right", {{"holds", pr.holds}, {"vacuous", pr.vacuous}}}};

  if (with_autotopisms) {
    AutotopismGroup group = enumerate_autotopisms(t, cap);
    doc["autotopisms"] = {{"count", group.size()}, {"triples", json(group)}};
  }
  return doc;
}

std::string render_witness(const std::vector<int>& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(w[i]);
  }
  return out + ")";
}

std::string render_set(const json& values) {
  std::string out = "{";
  bool first = true;
  for (const auto& v : values) {
    if (!first) out += ", ";
    out += v.dump();
    first = false;
  }
  return out + "}";
}

// Human rendering of the same structure; never parsed back.
void render_text(const json& doc, std::ostream& out) {
  out << "table " << doc["digest"].get<std::string>() << " of order "
      << doc["order"].get<int>() << "\n";
  out << "predicates:\n";
  for (const auto& [name, entry] : doc["predicates"].items()) {
    out << "  " << name << std::string(name.size() < 18 ? 18 - name.size() : 1, ' ')
        << (entry["holds"].get<bool>() ? "true" : "false");
    if (!entry["witness"].is_null()) {
      out << "  witness " << render_witness(entry["witness"].get<std::vector<int>>());
    }
    out << "\n";
  }
  out << "center: " << render_set(doc["center"]) << "\n";
  out << "nuclei: left " << render_set(doc["nuclei"]["left"]) << "  middle "
      << render_set(doc["nuclei"]["middle"]) << "  right "
      << render_set(doc["nuclei"]["right"]) << "\n";
  out << "regular sets: |lambda| " << doc["regular"]["lambda_size"].get<int>()
      << "  |rho| " << doc["regular"]["rho_size"].get<int>() << "  |mu| "
      << doc["regular"]["mu_size"].get<int>() << "\n";
  out << "theorem agreement: lc-auto "
      << (doc["theorems"]["lc_auto_agree"].get<bool>() ? "yes" : "NO") << "  rc-auto "
      << (doc["theorems"]["rc_auto_agree"].get<bool>() ? "yes" : "NO") << "  c-mu "
      << (doc["theorems"]["c_mu_agree"].get<bool>() ? "yes" : "NO") << "\n";
  const json& cl = doc["closures"];
  out << "closure agreement: lcrc left "
      << (cl["lcrc_left_agree"].get<bool>() ? "yes" : "NO") << " right "
      << (cl["lcrc_right_agree"].get<bool>() ? "yes" : "NO") << "; c left "
      << (cl["c_left_agree"].get<bool>() ? "yes" : "NO") << " right "
      << (cl["c_right_agree"].get<bool>() ? "yes" : "NO") << "\n";
  auto power_line = [&](const char* label, const json& p) {
    out << "power closure [-6,6] " << label << ": "
        << (p["vacuous"].get<bool>() ? "vacuous"
                                     : (p["holds"].get<bool>() ? "holds" : "FAILS"))
        << "\n";
  };
  power_line("left", cl["power_left"]);
  power_line("right", cl["power_right"]);
  if (doc.contains("autotopisms"))
    out << "autotopism group size: " << doc["autotopisms"]["count"].get<std::size_t>()
        << "\n";
}

int run_verify(const std::string& theorem, const std::string& corpus_spec,
               Shape shape, std::uint64_t seed, long budget, int power_range) {
  json doc;
  doc["theorem"] = theorem;
  doc["seed"] = seed;
  bool clean = true;

  auto corpus_checks = [&](auto&& check_item) {
    json items = json::array();
    for (const auto& [name, table] : build_corpus(corpus_spec, seed)) {
      json item;
      item["name"] = name;
      item["digest"] = table.digest();
      item["order"] = table.order();
      check_item(table, item);
      items.push_back(std::move(item));
    }
    doc["items"] = std::move(items);
  };

  if (theorem == "lc-auto" || theorem == "rc-auto" || theorem == "c-mu") {
    corpus_checks([&](const CayleyTable& t, json& item) {
      bool agree = theorem == "lc-auto"   ? check_theorem_lc_auto(t)
                   : theorem == "rc-auto" ? check_theorem_rc_auto(t)
                                          : check_theorem_c_mu(t);
      item["agree"] = agree;
      clean = clean && agree;
    });
  } else if (theorem == "closure-lcrc" || theorem == "closure-c") {
    corpus_checks([&](const CayleyTable& t, json& item) {
      bool left = theorem == "closure-lcrc" ? check_closure_lcrc(t, Side::left)
                                            : check_closure_c(t, Side::left);
      bool right = theorem == "closure-lcrc" ? check_closure_lcrc(t, Side::right)
                                             : check_closure_c(t, Side::right);
      item["left_agree"] = left;
      item["right_agree"] = right;
      clean = clean && left && right;
    });
  } else if (theorem == "power") {
    corpus_checks([&](const CayleyTable& t, json& item) {
      PowerClosureResult left = check_power_closure(t, Side::left, -power_range, power_range);
      PowerClosureResult right =
          check_power_closure(t, Side::right, -power_range, power_range);
      item["left"] = {{"holds", left.holds}, {"vacuous", left.vacuous}};
      item["right"] = {{"holds", right.holds}, {"vacuous", right.vacuous}};
      clean = clean && left.holds && right.holds;
    });
    doc["power_range"] = power_range;
  } else if (theorem == "iso-lcrc" || theorem == "iso-c" || theorem == "iso-cc") {
    doc["shape"] = shape_name(shape);
    doc["budget"] = budget;
    corpus_checks([&](const CayleyTable& t, json& item) {
      FindingsReport report = theorem == "iso-lcrc"
                                  ? verify_iso_invariance_lcrc(t, shape, budget, seed)
                              : theorem == "iso-c" ? verify_iso_c(t, shape, budget, seed)
                                                   : verify_iso_cc(t, shape, budget, seed);
      item["report"] = report.to_json();
      clean = clean && report.clean();
    });
  } else if (theorem == "corollary") {
    doc["shape"] = shape_name(shape);
    doc["budget"] = budget;
    json items = json::array();
    for (const auto& [name, report] : verify_corollary_fixtures(shape, budget, seed)) {
      json item;
      item["name"] = name;
      item["report"] = report.to_json();
      clean = clean && report.clean();
      items.push_back(std::move(item));
    }
    doc["items"] = std::move(items);
  } else {
    throw UsageError("unknown theorem id \"" + theorem + "\"");
  }

  doc["clean"] = clean;
  std::cout << doc.dump(2) << "\n";
  return clean ? kExitClean : kExitFinding;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite central-loop toolkit"};
  app.require_subcommand(1);

  std::string input, format = "json", law = "c", name, theorem, corpus, shape_str = "ABB";
  bool with_autotopisms = false;
  int max_order = 0, power_range = 6;
  std::uint64_t seed = 0;
  long budget = 10000;

  CLI::App* analyze = app.add_subcommand("analyze", "full predicate battery for a table file");
  analyze->add_option("--input", input, "table file, or - for stdin")->required();
  analyze->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  analyze->add_flag("--autotopisms", with_autotopisms,
                    "include the enumerated autotopism group");
  analyze->add_option("--max-order", max_order,
                      "autotopism enumeration cap (default 10; env CENTRA_MAX_ORDER)");

  CLI::App* generate =
      app.add_subcommand("generate", "close permutation generators into a loop table");
  generate->add_option("--input", input, "permutation file, or - for stdin")->required();
  generate->add_option("--law", law, "closure law: lcrc or c")
      ->check(CLI::IsMember({"lcrc", "c"}));

  CLI::App* construct = app.add_subcommand("construct", "emit a catalog fixture");
  construct->add_option("--name", name,
                        "c12 | d4 | q8 | o16 | cyclic:N | product:AxBxC")
      ->required();

  CLI::App* verify = app.add_subcommand("verify", "run a theorem check over a corpus");
  verify->add_option("--theorem", theorem,
                     "lc-auto | rc-auto | c-mu | closure-lcrc | closure-c | power | "
                     "iso-lcrc | iso-c | iso-cc | corollary")
      ->required();
  verify->add_option("--corpus", corpus,
                     "comma-separated: fixture name | exhaustive:N | upto:N | "
                     "random:N:COUNT | file:PATH");
  verify->add_option("--shape", shape_str, "isotopism shape: ABB or ABA")
      ->check(CLI::IsMember({"ABB", "ABA"}));
  verify->add_option("--seed", seed, "RNG seed (mandatory for verification runs)")
      ->required();
  verify->add_option("--budget", budget, "sampling budget per source");
  verify->add_option("--power-range", power_range, "power closure exponent bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*analyze) {
      CayleyTable t = CayleyTable::parse(read_input(input));
      json doc = analyze_table(t, with_autotopisms, autotopism_cap(max_order));
      if (format == "json")
        std::cout << doc.dump(2) << "\n";
      else
        render_text(doc, std::cout);
      return kExitClean;
    }
    if (*generate) {
      std::istringstream in(read_input(input));
      auto [degree, perms] = read_permutation_file(in);
      CayleyTable t = generate_from_generators(perms, degree,
                                               law == "c" ? Law::c : Law::lcrc);
      std::cout << t.serialize();
      return kExitClean;
    }
    if (*construct) {
      std::cout << construct_by_name(name).serialize();
      return kExitClean;
    }
    if (*verify) {
      if (corpus.empty() && theorem != "corollary")
        throw UsageError("--corpus is required for theorem \"" + theorem + "\"");
      return run_verify(theorem, corpus,
                        shape_str == "ABB" ? Shape::ABB : Shape::ABA, seed, budget,
                        power_range);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const OrderCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ClosureOverflow& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitGeneration;
  } catch (const NotSharplyTransitive& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitGeneration;
  } catch (const LawViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitGeneration;
  } catch (const InternalInconsistency& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return kExitFinding;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMalformed;
  }
  return kExitUsage;
}
