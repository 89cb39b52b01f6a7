#include "cli.hpp"

#include "contractad/canonical.hpp"
#include "contractad/chromatic.hpp"
#include "contractad/family_series.hpp"
#include "contractad/hilbert.hpp"
#include "contractad/trees.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace contractad::cli {

using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json integer_to_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) return Integer(j.get<std::string>());
  throw std::invalid_argument("expected an integer or a decimal string");
}

struct GraphSource {
  std::string spec, edges, file, graph6;

  void add_to(CLI::App* cmd) {
    auto* g = cmd->add_option("--graph", spec, "family shorthand: K4, P7, C6, St5, K[2,2,1]");
    auto* e = cmd->add_option("--edges", edges, "inline edge list such as 0-1,1-2");
    auto* f = cmd->add_option("--file", file, "graph file in text or graph6 format");
    auto* s = cmd->add_option("--graph6", graph6, "graph6 string");
    g->excludes(e, f, s);
    e->excludes(f, s);
    f->excludes(s);
  }

  Graph load() const {
    const int given = !spec.empty() + !edges.empty() + !file.empty() + !graph6.empty();
    if (given != 1) throw UsageError("exactly one of --graph, --edges, --file, --graph6 is required");
    if (!spec.empty()) return parse_family_spec(spec);
    if (!edges.empty()) return parse_edge_list(edges);
    if (!graph6.empty()) return parse_graph6(graph6);
    std::ifstream in(file);
    if (!in) throw UsageError("cannot read " + file);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_graph_file_content(buf.str());
  }
};

QFunction hilbert_function(const std::string& target) {
  if (target == "complex") return wonderful_complex_hilbert();
  if (target == "real") return wonderful_real_hilbert();
  if (target == "gerst") return gerst_hilbert();
  if (target == "hyper") return hyper_weighted_hilbert();
  if (target == "grav") return grav_weighted_hilbert();
  if (target == "mobius") return mobius();
  if (target == "chromatic") return chromatic_gf();
  throw UsageError("unknown target " + target);
}

FamilyTag family_tag(const std::string& name) {
  static const std::map<std::string, FamilyTag> tags = {
      {"path", FamilyTag::P}, {"cycle", FamilyTag::C}, {"complete", FamilyTag::K}, {"star", FamilyTag::St}};
  return tags.at(name);
}

std::string graph_one_line(const Graph& g) {
  std::string s = to_graph_text(g);
  std::replace(s.begin(), s.end(), '\n', ';');
  while (!s.empty() && s.back() == ';') s.pop_back();
  return s;
}

void print_poly(std::ostream& out, bool as_json, const json& meta, const QPoly& p) {
  if (!as_json) {
    out << p.to_string() << "\n";
    return;
  }
  json j = meta;
  j["value"] = to_json(p);
  out << j.dump() << "\n";
}

void print_series(std::ostream& out, const PowerSeries& s) {
  const char var = s.var() == SeriesVar::t ? 't' : 'z';
  for (int k = 0; k <= s.order(); ++k) {
    std::ostringstream label;
    label << var << "^" << k;
    out << std::left << std::setw(6) << label.str() << s[k].to_string() << "\n";
  }
}

// One verification suite.  check returns an empty string on success and a
// description of the mismatch otherwise.
struct SuiteResult {
  std::vector<std::string> checked;
  std::string failure;
  std::string offending_graph;
};

SuiteResult run_graph_suite(int max_vertices, const std::function<std::string(const Graph&)>& check) {
  SuiteResult r;
  for (const Graph& g : connected_graphs_up_to(max_vertices)) {
    std::string why = check(g);
    if (!why.empty()) {
      r.failure = why;
      r.offending_graph = to_graph_text(g);
      return r;
    }
    r.checked.push_back(graph_one_line(g));
  }
  return r;
}

SuiteResult suite_koszul(int k) {
  const QPoly q = QPoly::q();
  QFunction lie_com = convolve(pointwise_product(one_x(q), mobius()), one_x(q));
  QFunction hyper_grav = convolve(hyper_weighted_hilbert(), grav_weighted_hilbert());
  QFunction eps = epsilon();
  return run_graph_suite(k, [&](const Graph& g) -> std::string {
    if (lie_com(g) != eps(g)) return "(1_q . mu) * 1_q differs from epsilon: " + lie_com(g).to_string();
    if (hyper_grav(g) != eps(g)) return "hyper * grav differs from epsilon: " + hyper_grav(g).to_string();
    return {};
  });
}

SuiteResult suite_chromatic(int k) {
  QFunction x = chromatic_gf();
  return run_graph_suite(k, [&](const Graph& g) -> std::string {
    const QPoly lhs = x.evaluate_direct(g), rhs = chromatic_delcon(g);
    if (lhs != rhs) return "q(1_q * mu) = " + lhs.to_string() + " but deletion-contraction gives " + rhs.to_string();
    return {};
  });
}

SuiteResult suite_oracle(int k) {
  QFunction mu = mobius(), hyper = hyper_weighted_hilbert(), gerst = gerst_hilbert();
  return run_graph_suite(k, [&](const Graph& g) -> std::string {
    const Integer acyclic = count_acyclic_orientations(g);
    if (Rational(gclie_normal_count(g)) != abs(mu(g).coeff(0))) return "gcLie normal count differs from |mu|";
    const Integer ass = gcass_dimension(g);
    if (ass != acyclic || Rational(ass) != gerst(g).eval(-1)) return "gcAss dimension differs from gcGerst";
    if (g.n() < 2) return {};
    const QPoly h = hyper(g);
    std::vector<Integer> coeffs;
    for (int r = 1; r <= h.degree(); ++r) {
      const Rational c = h.coeff(r);
      if (c.get_den() != 1) return "hyper coefficient is not an integer";
      coeffs.push_back(c.get_num());
    }
    if (gchyper_normal_counts(g) != coeffs) return "gcHyper normal counts differ from " + h.to_string();
    Integer grav = 0;
    for (const auto& c : gcgrav_normal_counts(g)) grav += c;
    if (2 * grav != acyclic) return "twice the gcGrav normal count differs from dim gcGerst";
    return {};
  });
}

SuiteResult suite_composition(int order) {
  const QPoly q = QPoly::q();
  const std::vector<QFunction> fs = {one(), one_x(q), mobius(), chromatic_gf()};
  SuiteResult r;
  for (FamilyTag fam : {FamilyTag::P, FamilyTag::C, FamilyTag::K, FamilyTag::St})
    for (const auto& f : fs)
      for (const auto& g : fs) {
        if (fam == FamilyTag::St && g(path_graph(1)) != QPoly(1)) continue;
        const std::string label = family_name(fam) + ": " + f.name() + " * " + g.name();
        CompositionReport rep = check_family_composition(f, g, fam, order);
        if (!rep.holds) {
          r.failure = label + " lhs " + rep.lhs.to_string() + " rhs " + rep.rhs.to_string();
          for (int n = 1; n <= order; ++n)
            if (rep.lhs[n] != rep.rhs[n]) {
              r.offending_graph = to_graph_text(family_member(fam, n));
              break;
            }
          return r;
        }
        r.checked.push_back(label);
      }
  return r;
}

int parse_positive(const std::string& what, int value) {
  if (value < 1) throw UsageError(what + " must be at least 1");
  return value;
}

}  // namespace

Graph parse_family_spec(const std::string& spec) {
  static const std::regex simple(R"((K|P|C|St)(\d+))");
  static const std::regex multipartite(R"(K\[(\d+(?:,\d+)*)\])");
  std::smatch m;
  if (std::regex_match(spec, m, simple)) {
    const int n = std::stoi(m[2]);
    if (n < 1 || n > kMaxVertices) throw std::invalid_argument("family size out of range: " + spec);
    const std::string f = m[1];
    if (f == "K") return complete_graph(n);
    if (f == "P") return path_graph(n);
    if (f == "C") return family_member(FamilyTag::C, n);
    return star_graph(n);
  }
  if (std::regex_match(spec, m, multipartite)) {
    std::vector<int> parts;
    std::stringstream ss(m[1]);
    for (std::string tok; std::getline(ss, tok, ',');) parts.push_back(std::stoi(tok));
    std::sort(parts.rbegin(), parts.rend());
    if (parts.front() < 1) throw std::invalid_argument("multipartite parts must be positive: " + spec);
    return complete_multipartite(parts);
  }
  throw std::invalid_argument("unrecognised graph shorthand: " + spec);
}

Graph parse_edge_list(const std::string& text) {
  static const std::regex edge(R"(\s*(\d+)\s*-\s*(\d+)\s*)");
  std::vector<std::pair<int, int>> edges;
  int n = 1;
  std::stringstream ss(text);
  for (std::string tok; std::getline(ss, tok, ',');) {
    std::smatch m;
    if (!std::regex_match(tok, m, edge)) throw std::invalid_argument("bad edge '" + tok + "'");
    const int u = std::stoi(m[1]), v = std::stoi(m[2]);
    if (std::max(u, v) >= kMaxVertices) throw std::invalid_argument("vertex label out of range in '" + tok + "'");
    edges.emplace_back(u, v);
    n = std::max(n, std::max(u, v) + 1);
  }
  return Graph(n, edges);
}

Graph parse_graph_file_content(const std::string& content) {
  const auto start = content.find_first_not_of(" \t\r\n");
  if (start == std::string::npos) throw std::invalid_argument("empty graph file");
  if (content.compare(start, 2, "n=") == 0) return parse_graph_text(content);
  std::string line = content.substr(start);
  line = line.substr(0, line.find_first_of("\r\n"));
  return parse_graph6(line);
}

json to_json(const QPoly& p) {
  json j = json::object();
  for (const auto& [e, c] : p.terms())
    j[std::to_string(e)] = json::array({integer_to_json(c.get_num()), integer_to_json(c.get_den())});
  return j;
}

QPoly qpoly_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("polynomial must be a JSON object");
  std::map<unsigned, Rational> terms;
  for (const auto& [key, value] : j.items()) {
    if (!value.is_array() || value.size() != 2) throw std::invalid_argument("coefficient must be [num, den]");
    Rational c(integer_from_json(value[0]), integer_from_json(value[1]));
    c.canonicalize();
    terms[static_cast<unsigned>(std::stoul(key))] = c;
  }
  return QPoly::from_terms(terms);
}

json to_json(const PowerSeries& s) {
  json coeffs = json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(to_json(c));
  return {{"variable", s.var() == SeriesVar::t ? "t" : "z"}, {"order", s.order()}, {"coefficients", coeffs}};
}

PowerSeries series_from_json(const json& j) {
  std::vector<QPoly> coeffs;
  for (const auto& c : j.at("coefficients")) coeffs.push_back(qpoly_from_json(c));
  const SeriesVar var = j.at("variable").get<std::string>() == "z" ? SeriesVar::z : SeriesVar::t;
  return PowerSeries(std::move(coeffs), j.at("order").get<int>(), var);
}

json to_json(const YoungSeries& y) {
  json terms = json::array();
  for (int n = 0; n <= y.bound(); ++n)
    for (const auto& [la, c] : y.zcoeff(n).terms()) terms.push_back({{"z", n}, {"m", la}, {"coeff", to_json(c)}});
  return {{"degree", y.bound()}, {"terms", terms}};
}

YoungSeries young_from_json(const json& j) {
  YoungSeries y(j.at("degree").get<int>());
  for (const auto& t : j.at("terms"))
    y.add(t.at("z").get<int>(), t.at("m").get<YoungDiagram>(), qpoly_from_json(t.at("coeff")));
  return y;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Hilbert series of graphic contractads"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit JSON instead of text");

  GraphSource hilbert_src, mobius_src, chromatic_src;
  std::string hilbert_target;
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert series of one graph");
  hilbert->add_option("--target", hilbert_target)->required()->check(
      CLI::IsMember({"complex", "real", "gerst", "hyper", "grav"}));
  hilbert_src.add_to(hilbert);

  auto* mobius_cmd = app.add_subcommand("mobius", "Moebius function value");
  mobius_src.add_to(mobius_cmd);

  auto* chromatic_cmd = app.add_subcommand("chromatic", "chromatic polynomial as q(1_q * mu)");
  chromatic_src.add_to(chromatic_cmd);

  std::string series_family, series_target = "complex";
  int series_order = 8;
  bool series_closed = false;
  auto* series = app.add_subcommand("series", "generating series of a graph family");
  series->add_option("--family", series_family)->required()->check(
      CLI::IsMember({"path", "cycle", "complete", "star"}));
  series->add_option("--target", series_target)
      ->check(CLI::IsMember({"complex", "real", "gerst", "hyper", "grav", "mobius", "chromatic"}));
  series->add_option("--order", series_order, "truncation order N");
  series->add_flag("--closed-form", series_closed, "closed form instead of the recurrence (complex and real)");

  std::string young_target = "chromatic";
  int young_degree = 4;
  bool young_closed = false;
  auto* young = app.add_subcommand("young", "Young generating series of complete multipartite graphs");
  young->add_option("--target", young_target)->check(CLI::IsMember({"chromatic", "complex", "real"}));
  young->add_option("--degree", young_degree, "total degree D");
  young->add_flag("--closed-form", young_closed, "closed form instead of the recurrence");

  std::string suite;
  int max_vertices = 5;
  auto* verify = app.add_subcommand("verify", "exhaustive verification suites");
  verify->add_option("--suite", suite)->required()->check(
      CLI::IsMember({"koszul", "chromatic", "oracle", "composition"}));
  verify->add_option("--max-vertices", max_vertices, "largest vertex count (series order for composition)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (hilbert->parsed()) {
      const Graph g = hilbert_src.load();
      const QPoly p = hilbert_function(hilbert_target)(g);
      if (hilbert_target == "complex" && !p.is_integral())
        throw std::logic_error("complex Hilbert series has a half-integer exponent");
      print_poly(out, as_json, {{"command", "hilbert"}, {"target", hilbert_target}, {"graph6", to_graph6(g)}}, p);
    } else if (mobius_cmd->parsed()) {
      const Graph g = mobius_src.load();
      print_poly(out, as_json, {{"command", "mobius"}, {"graph6", to_graph6(g)}}, mobius()(g));
    } else if (chromatic_cmd->parsed()) {
      const Graph g = chromatic_src.load();
      print_poly(out, as_json, {{"command", "chromatic"}, {"graph6", to_graph6(g)}}, chromatic_gf()(g));
    } else if (series->parsed()) {
      const int order = parse_positive("--order", series_order);
      const FamilyTag tag = family_tag(series_family);
      PowerSeries s(order);
      if (series_closed) {
        if (series_target != "complex" && series_target != "real")
          throw UsageError("--closed-form needs --target complex or real");
        s = closed_form(series_target == "complex" ? Target::complex : Target::real, tag, order);
      } else {
        s = family_series(hilbert_function(series_target), tag, order).series;
      }
      if (as_json) {
        json j = to_json(s);
        j["command"] = "series";
        j["family"] = series_family;
        j["target"] = series_target;
        out << j.dump() << "\n";
      } else {
        print_series(out, s);
      }
    } else if (young->parsed()) {
      const int D = parse_positive("--degree", young_degree);
      YoungSeries y(D);
      if (young_target == "chromatic") {
        y = young_closed ? young_closed_form(YoungTarget::chromatic, D) : young_of_graphic(chromatic_gf(), D);
      } else if (young_target == "complex") {
        y = young_closed ? young_reverse(young_closed_form(YoungTarget::modular_complex_G, D))
                         : young_of_graphic(wonderful_complex_hilbert(), D);
      } else {
        y = young_closed ? young_closed_form(YoungTarget::modular_real, D)
                         : young_of_graphic(wonderful_real_hilbert(), D);
      }
      if (as_json) {
        json j = to_json(y);
        j["command"] = "young";
        j["target"] = young_target;
        out << j.dump() << "\n";
      } else {
        out << y.to_string() << "\n";
      }
    } else if (verify->parsed()) {
      const int k = parse_positive("--max-vertices", max_vertices);
      if (suite != "composition" && k > 7) throw UsageError("--max-vertices is capped at 7");
      SuiteResult r = suite == "koszul"      ? suite_koszul(k)
                      : suite == "chromatic" ? suite_chromatic(k)
                      : suite == "oracle"    ? suite_oracle(k)
                                             : suite_composition(k);
      const bool ok = r.failure.empty();
      if (as_json) {
        json j = {{"command", "verify"}, {"suite", suite}, {"passed", ok}, {"checked", r.checked}};
        if (!ok) {
          j["failure"] = r.failure;
          j["graph"] = r.offending_graph;
        }
        out << j.dump() << "\n";
      } else {
        for (const auto& c : r.checked) out << "PASS " << suite << " " << c << "\n";
        if (ok) {
          out << "PASS " << suite << ": " << r.checked.size() << " checks\n";
        } else {
          out << "FAIL " << suite << ": " << r.failure << "\n" << r.offending_graph;
          if (!r.offending_graph.empty() && r.offending_graph.back() != '\n') out << "\n";
        }
      }
      return ok ? kSuccess : kVerificationFailure;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kSuccess;
}

}  // namespace contractad::cli
