#include "thompson/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "thompson/annular_diagram.hpp"
#include "thompson/bracket.hpp"
#include "thompson/constructions.hpp"
#include "thompson/errors.hpp"
#include "thompson/jones.hpp"
#include "thompson/simplify.hpp"
#include "thompson/svg.hpp"
#include "thompson/two_bridge.hpp"

namespace thompson::cli {
namespace {

using Json = nlohmann::ordered_json;
constexpr int kSchemaVersion = 1;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

TreePair parse_element(const std::string& text) {
  auto first = text.find_first_not_of(" \t\n");
  if (first != std::string::npos && text[first] == '{') return reduce(tree_pair_from_json(text));
  return from_word(GeneratorWord::parse(text));
}

std::string word_text(const TreePair& p) {
  GeneratorWord w = to_word(p);
  return w.empty() ? "identity" : w.to_string();
}

Json element_json(const TreePair& p) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["source"] = p.source().bits();
  j["target"] = p.target().bits();
  j["leaves"] = p.leaf_count();
  j["reduced"] = p.is_reduced();
  j["word"] = word_text(reduce(p));
  return j;
}

Json pd_json(const LinkDiagram& d) {
  Json crossings = Json::array();
  for (const Crossing& x : d.crossings()) crossings.push_back(x.arcs);
  return crossings;
}

std::string read_source(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path);
  if (!in) throw Error("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

struct Options {
  std::string format = "text";
  std::string element_action;
  std::vector<std::string> element_inputs;
  std::string link_input;
  std::string route = "direct";
  bool simplify = false;
  std::string bracket_input;
  std::string bracket_pd;
  std::size_t max_crossings = 24;
  std::string conj_a, conj_b;
  std::string experiment;
  std::size_t n = 0;
  std::string seed;
  std::string gen = "x0";
  std::size_t experiment_bound = 64;
  std::string oracle_kind;
  std::string oracle_code;
};

void require_format(const Options& o, std::initializer_list<const char*> allowed, const std::string& verb) {
  for (const char* f : allowed) {
    if (o.format == f) return;
  }
  throw UsageError("--format " + o.format + " is not available for '" + verb + "'");
}

int do_element(const Options& o, std::ostream& out) {
  require_format(o, {"text", "json", "svg"}, "element");
  const auto& in = o.element_inputs;
  auto need = [&](std::size_t lo, std::size_t hi) {
    if (in.size() < lo || in.size() > hi) throw UsageError("element " + o.element_action + ": wrong number of arguments");
  };
  TreePair result;
  if (o.element_action == "parse") {
    need(1, 1);
    auto first = in[0].find_first_not_of(" \t\n");
    result = first != std::string::npos && in[0][first] == '{' ? tree_pair_from_json(in[0])
                                                                : from_word(GeneratorWord::parse(in[0]));
  } else if (o.element_action == "reduce") {
    need(1, 1);
    result = parse_element(in[0]);
  } else if (o.element_action == "mul") {
    need(1, 64);
    for (const auto& w : in) result = multiply(result, parse_element(w));
  } else if (o.element_action == "inv") {
    need(1, 1);
    result = invert(parse_element(in[0]));
  } else if (o.element_action == "word") {
    need(1, 1);
    result = parse_element(in[0]);
    if (o.format == "text") {
      out << word_text(result) << '\n';
      return kOk;
    }
  } else {
    throw UsageError("unknown element action '" + o.element_action + "'");
  }
  if (o.format == "svg") {
    out << tree_pair_svg(result);
  } else if (o.format == "json") {
    out << element_json(result).dump() << '\n';
  } else {
    out << "source " << result.source().bits() << '\n'
        << "target " << result.target().bits() << '\n'
        << "leaves " << result.leaf_count() << '\n'
        << "word " << word_text(reduce(result)) << '\n';
  }
  return kOk;
}

int do_link(const Options& o, std::ostream& out) {
  TreePair p = parse_element(o.link_input);
  if (o.format == "svg") {
    out << tait_graph_svg(tait_graph(p));
    return kOk;
  }
  LinkDiagram d = o.route == "tait" ? medial_link(tait_graph(p)) : direct_link(p);
  SimplificationReport report{d, 0, 0, 0};
  if (o.simplify) report = simplify(d);
  const LinkDiagram& shown = report.diagram;
  if (o.format == "json") {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["route"] = o.route;
    j["element"] = element_json(p);
    if (o.route == "tait") j["tait_graph"] = Json::parse(tait_graph(p).to_json());
    j["crossings"] = shown.crossing_count();
    j["components"] = shown.component_count();
    j["free_loops"] = shown.free_loops();
    j["pd"] = pd_json(shown);
    if (o.simplify) {
      j["simplification"] = {{"removed_unknots", report.removed_unknots},
                             {"r1_moves", report.r1_moves},
                             {"r2_moves", report.r2_moves}};
    }
    out << j.dump() << '\n';
  } else {
    out << shown.to_pd();
  }
  return kOk;
}

int do_bracket(const Options& o, std::ostream& out) {
  require_format(o, {"text", "json"}, "bracket");
  LinkDiagram d;
  if (!o.bracket_pd.empty()) {
    if (!o.bracket_input.empty()) throw UsageError("bracket takes an element or --pd, not both");
    d = LinkDiagram::from_pd(read_source(o.bracket_pd));
  } else {
    if (o.bracket_input.empty()) throw UsageError("bracket needs an element or --pd FILE");
    TreePair p = parse_element(o.bracket_input);
    d = o.route == "tait" ? medial_link(tait_graph(p)) : direct_link(p);
  }
  LaurentPolynomial b = kauffman_bracket(d, {o.max_crossings});
  if (o.format == "json") {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["crossings"] = d.crossing_count();
    j["components"] = d.component_count();
    j["bracket"] = b.to_string();
    j["determinant"] = determinant(b);
    out << j.dump() << '\n';
  } else {
    out << b.to_string() << '\n';
  }
  return kOk;
}

int do_conjugate(const Options& o, std::ostream& out) {
  require_format(o, {"text", "json"}, "conjugate");
  TreePair a = parse_element(o.conj_a);
  TreePair b = parse_element(o.conj_b);
  CanonicalCode ca = canonical_code(reduced_annular(a));
  CanonicalCode cb = canonical_code(reduced_annular(b));
  bool same = ca == cb;
  if (o.format == "json") {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["conjugate"] = same;
    j["codes"] = {ca.to_string(), cb.to_string()};
    j["components"] = {ca.components.size(), cb.components.size()};
    out << j.dump() << '\n';
  } else {
    out << (same ? "conjugate" : "not conjugate") << '\n';
  }
  return kOk;
}

int do_thm1(const Options& o, std::ostream& out) {
  if (o.n < 1) throw UsageError("experiment thm1 needs --n >= 1");
  TreePair seed = o.seed.empty() ? element_a() : parse_element(o.seed);
  HSequence seq = h_sequence(seed, o.n);
  Json rows = Json::array();
  std::optional<LaurentPolynomial> first;
  std::vector<CanonicalCode> codes;
  for (std::size_t i = 0; i < seq.elements.size(); ++i) {
    const TreePair& h = seq.elements[i];
    LinkDiagram d = jones_link(h);
    LaurentPolynomial b = kauffman_bracket(d, {o.experiment_bound});
    if (!first) first = b;
    AnnularStrandDiagram r = reduced_annular(h);
    CanonicalCode code = canonical_code(r);
    bool distinct = true;
    for (const auto& c : codes) distinct = distinct && !(c == code);
    codes.push_back(code);
    rows.push_back({{"index", i + 1},
                    {"leaves", h.leaf_count()},
                    {"crossings", d.crossing_count()},
                    {"bracket", b.to_string()},
                    {"bracket_matches_h1", equivalent_up_to_units(b, *first)},
                    {"annular_components", component_count(r)},
                    {"canonical_code", code.to_string()},
                    {"new_conjugacy_class", distinct}});
  }
  if (o.format == "json") {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["sequence"] = "thm1";
    j["seed"] = element_json(seed);
    j["n"] = o.n;
    j["rows"] = rows;
    out << j.dump() << '\n';
    return kOk;
  }
  out << "i  leaves  crossings  annular_components  link=L(h1)  new_class  bracket\n";
  for (const auto& r : rows) {
    out << r["index"].get<std::size_t>() << "  " << r["leaves"].get<std::size_t>() << "  "
        << r["crossings"].get<std::size_t>() << "  " << r["annular_components"].get<std::size_t>() << "  "
        << (r["bracket_matches_h1"].get<bool>() ? "yes" : "no") << "  "
        << (r["new_conjugacy_class"].get<bool>() ? "yes" : "no") << "  " << r["bracket"].get<std::string>() << '\n';
  }
  return kOk;
}

int do_thm2(const Options& o, std::ostream& out) {
  if (o.n < 1) throw UsageError("experiment thm2 needs --n >= 1");
  if (o.gen != "x0" && o.gen != "x1") throw UsageError("--gen must be x0 or x1");
  const bool x1 = o.gen == "x1";
  const TreePair x = make_generator(x1 ? 1 : 0);
  Json rows = Json::array();
  for (std::size_t n = 1; n <= o.n; ++n) {
    TreePair g = x1 ? h_element(n) : g_element(n);
    TreePair c = conjugate(g, x);
    ConwayCode code = ConwayCode::ones(2 * n);
    Fraction f = continued_fraction(code);
    LaurentPolynomial oracle = kauffman_bracket(two_bridge_diagram(code, o.experiment_bound), {o.experiment_bound});
    if (x1) oracle *= LaurentPolynomial::delta();
    LinkDiagram d = jones_link(c);
    LaurentPolynomial b = kauffman_bracket(d, {o.experiment_bound});
    rows.push_back({{"n", n},
                    {"element", element_json(c)},
                    {"conjugate_to_generator", are_conjugate(c, x)},
                    {"crossings", d.crossing_count()},
                    {"bracket", b.to_string()},
                    {"oracle", code.to_string() + (x1 ? " + unknot" : "")},
                    {"fraction", std::to_string(f.p) + "/" + std::to_string(f.q)},
                    {"matches_oracle", equivalent_up_to_units(b, oracle, 0)}});
  }
  if (o.format == "json") {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["sequence"] = "thm2";
    j["generator"] = o.gen;
    j["n"] = o.n;
    j["rows"] = rows;
    out << j.dump() << '\n';
    return kOk;
  }
  const char* conj = x1 ? "h_n x1 h_n^-1" : "g_n x0 g_n^-1";
  for (const auto& r : rows) {
    std::size_t n = r["n"].get<std::size_t>();
    bool match = r["matches_oracle"].get<bool>();
    out << "n=" << n << "  " << conj << "  leaves " << r["element"]["leaves"].get<std::size_t>() << "  "
        << (r["conjugate_to_generator"].get<bool>() ? "conjugate to " : "NOT conjugate to ") << o.gen << "  link "
        << (match ? "matches " : "does not match ") << r["oracle"].get<std::string>() << " (p/q "
        << r["fraction"].get<std::string>() << ")  bracket " << r["bracket"].get<std::string>() << '\n';
  }
  return kOk;
}

int do_oracle(const Options& o, std::ostream& out) {
  require_format(o, {"text", "json", "pd"}, "oracle");
  if (o.oracle_kind != "two-bridge") throw UsageError("unknown oracle '" + o.oracle_kind + "'");
  ConwayCode code = ConwayCode::parse(o.oracle_code);
  LinkDiagram d = two_bridge_diagram(code, o.max_crossings);
  if (o.format == "pd") {
    out << d.to_pd();
    return kOk;
  }
  Fraction f = continued_fraction(code);
  LaurentPolynomial b = kauffman_bracket(d, {o.max_crossings});
  if (o.format == "json") {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["code"] = code.to_string();
    j["fraction"] = {f.p, f.q};
    j["components"] = d.component_count();
    j["bracket"] = b.to_string();
    j["pd"] = pd_json(d);
    out << j.dump() << '\n';
    return kOk;
  }
  out << code.to_string() << "  p/q " << f.p << '/' << f.q << "  components " << d.component_count() << '\n'
      << "bracket " << b.to_string() << '\n'
      << d.to_pd();
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Thompson group elements, their links, and conjugacy", "thompson_links"};
  app.require_subcommand(1, 1);
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "pd", "svg"}));

  auto* element = app.add_subcommand("element", "Parse, reduce, multiply, invert elements");
  element->add_option("action", o.element_action, "parse | reduce | mul | inv | word")
      ->required()
      ->check(CLI::IsMember({"parse", "reduce", "mul", "inv", "word"}));
  element->add_option("inputs", o.element_inputs, "Words or TreePair JSON")->required();

  auto* link = app.add_subcommand("link", "PD code of the link of an element");
  link->add_option("element", o.link_input, "Word or TreePair JSON")->required();
  link->add_option("--route", o.route, "tait | direct")->check(CLI::IsMember({"tait", "direct"}));
  link->add_flag("--simplify", o.simplify, "Apply Reidemeister I/II reductions");

  auto* bracket = app.add_subcommand("bracket", "Kauffman bracket");
  bracket->add_option("element", o.bracket_input, "Word or TreePair JSON");
  bracket->add_option("--pd", o.bracket_pd, "Read a PD code from a file ('-' for stdin)");
  bracket->add_option("--route", o.route, "tait | direct")->check(CLI::IsMember({"tait", "direct"}));
  bracket->add_option("--max-crossings", o.max_crossings, "Crossing bound");

  auto* conj = app.add_subcommand("conjugate", "Decide conjugacy of two elements");
  conj->add_option("first", o.conj_a)->required();
  conj->add_option("second", o.conj_b)->required();

  auto* experiment = app.add_subcommand("experiment", "Reproduce the two theorems");
  experiment->require_subcommand(1, 1);
  auto* thm1 = experiment->add_subcommand("thm1", "One link from infinitely many conjugacy classes");
  thm1->add_option("--n", o.n, "Sequence length")->required();
  thm1->add_option("--seed", o.seed, "h_1 (default a = x0^3 x2^-1 x0^-3)");
  thm1->add_option("--max-crossings", o.experiment_bound, "Crossing bound");
  auto* thm2 = experiment->add_subcommand("thm2", "Infinitely many 2-bridge links from one conjugacy class");
  thm2->add_option("--gen", o.gen, "x0 | x1")->check(CLI::IsMember({"x0", "x1"}));
  thm2->add_option("--n", o.n, "Largest n")->required();
  thm2->add_option("--max-crossings", o.experiment_bound, "Crossing bound");

  auto* oracle = app.add_subcommand("oracle", "Reference diagrams");
  oracle->add_option("kind", o.oracle_kind, "two-bridge")->required()->check(CLI::IsMember({"two-bridge"}));
  oracle->add_option("code", o.oracle_code, "Conway code, e.g. 1,1,1,1")->required();
  oracle->add_option("--max-crossings", o.max_crossings, "Crossing bound");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kUsageError;
  }

  try {
    if (o.format == "svg" && !element->parsed() && !link->parsed()) {
      throw UsageError("--format svg is only available for 'element' and 'link'");
    }
    if (o.format == "pd" && !link->parsed() && !oracle->parsed()) {
      throw UsageError("--format pd is only available for 'link' and 'oracle'");
    }
    if (element->parsed()) return do_element(o, out);
    if (link->parsed()) return do_link(o, out);
    if (bracket->parsed()) return do_bracket(o, out);
    if (conj->parsed()) return do_conjugate(o, out);
    if (thm1->parsed()) return do_thm1(o, out);
    if (thm2->parsed()) return do_thm2(o, out);
    if (oracle->parsed()) return do_oracle(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
  return kUsageError;
}

}  // namespace thompson::cli
