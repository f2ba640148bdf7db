#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "specgap/canon.hpp"
#include "specgap/covers.hpp"
#include "specgap/decomp.hpp"
#include "specgap/enumerate.hpp"
#include "specgap/families.hpp"
#include "specgap/spectra.hpp"
#include "specgap/transforms.hpp"

namespace specgap::cli {

namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Input {
  std::string path;

  std::vector<Graph> graphs(std::istream& fallback) const {
    std::ifstream file;
    std::istream* in = &fallback;
    if (!path.empty() && path != "-") {
      file.open(path);
      if (!file) throw UsageError("cannot open " + path);
      in = &file;
    }
    std::vector<Graph> out;
    std::string line;
    int number = 0;
    while (std::getline(*in, line)) {
      ++number;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      try {
        out.push_back(parse_graph6(line));
      } catch (const Graph6Error& e) {
        throw UsageError("line " + std::to_string(number) + ": " + e.what());
      }
    }
    return out;
  }
};

std::vector<int> parse_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("bad vertex list entry '" + item + "'");
    }
  }
  return out;
}

json graph_json(const Graph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.order()}, {"m", g.size()}, {"graph6", to_graph6(g)}, {"edges", edges}};
}

void print_edges(std::ostream& out, const Graph& g) {
  out << "n=" << g.order() << " m=" << g.size() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact spectral tools for cubic graphs without eigenvalues in (-1,1)", "specgap"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Machine-readable output");

  auto* family = app.add_subcommand("family", "Build B(k), KS(k) or GM(k)");
  std::string kind;
  int k = 0;
  bool family_graph6 = false;
  family->add_option("--kind", kind, "base, ks or gm")
      ->required()
      ->check(CLI::IsMember({"base", "ks", "gm"}));
  family->add_option("--k", k, "Number of 4-cycles")->required();
  family->add_flag("--graph6", family_graph6, "Print the graph6 line only");

  auto* sporadic_cmd = app.add_subcommand("sporadic", "Sporadic graph registry");
  int sporadic_id = 0;
  bool sporadic_all = false;
  auto* id_opt = sporadic_cmd->add_option("--id", sporadic_id, "Row 1..14")->check(CLI::Range(1, 14));
  auto* all_opt = sporadic_cmd->add_flag("--all", sporadic_all, "Every row");
  id_opt->excludes(all_opt);

  Input input;
  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("--in", input.path, "graph6 file, one graph per line (default stdin)");
  };

  auto* certify = app.add_subcommand("certify", "Exact gap certificate per graph");
  add_input(certify);
  auto* charpoly = app.add_subcommand("charpoly", "Characteristic polynomial per graph");
  add_input(charpoly);

  auto* sturm = app.add_subcommand("sturm", "Count real roots in an open interval");
  std::string poly_text, a_text, b_text;
  bool with_multiplicity = false;
  sturm->add_option("--poly", poly_text, "Coefficients low to high, comma separated")->required();
  sturm->add_option("--a", a_text, "Left end (integer, p/q or decimal)")->required();
  sturm->add_option("--b", b_text, "Right end")->required();
  sturm->add_flag("--multiplicity", with_multiplicity, "Count roots with multiplicity");

  auto* double_cmd = app.add_subcommand("double", "Bipartite double");
  add_input(double_cmd);
  auto* d2_cmd = app.add_subcommand("d2", "Distance-two graph");
  add_input(d2_cmd);
  auto* line_cmd = app.add_subcommand("linegraph", "Line graph");
  add_input(line_cmd);
  auto* truncate_cmd = app.add_subcommand("truncate", "Replace vertices by triangles");
  add_input(truncate_cmd);
  std::string vertex_list;
  truncate_cmd->add_option("--vertices", vertex_list, "Comma-separated vertices")->required();

  auto* preimages_cmd = app.add_subcommand("preimages", "Non-bipartite H with H x K2 = G");
  add_input(preimages_cmd);

  auto* decompose = app.add_subcommand("decompose", "Triangle decompositions as geometries");
  add_input(decompose);
  std::size_t limit = 0;
  bool labeled = false;
  decompose->add_option("--limit", limit, "Stop after this many (0 = all)");
  decompose->add_flag("--labeled", labeled, "Do not merge decompositions related by automorphisms");

  auto* classify = app.add_subcommand("classify", "Enumerate and certify connected cubic graphs");
  int max_n = 0;
  int jobs = 1;
  classify->add_option("--max-n", max_n, "Largest order")->required()->check(CLI::Range(4, 20));
  classify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify-identities", "Check the family identities exactly");
  int k_max = 0;
  verify->add_option("--k-max", k_max, "Largest k")->required()->check(CLI::Range(2, 8));

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (*family) {
      Graph g;
      if (kind == "base") {
        g = base_graph(k);
      } else if (kind == "ks") {
        g = kollar_sarnak(k);
      } else {
        g = guo_mohar(k);
      }
      if (as_json) {
        json j = graph_json(g);
        j["family"] = kind;
        j["k"] = k;
        out << j.dump() << '\n';
      } else if (family_graph6) {
        out << to_graph6(g) << '\n';
      } else {
        print_edges(out, g);
      }
      return 0;
    }

    if (*sporadic_cmd) {
      if (!sporadic_all && sporadic_id == 0) throw UsageError("sporadic needs --id or --all");
      if (as_json) {
        if (sporadic_all) {
          out << registry_json() << '\n';
        } else {
          const auto& row = sporadic(sporadic_id);
          out << json{{"id", row.id},
                      {"n", row.order},
                      {"bipartite", row.bipartite},
                      {"description", row.description},
                      {"recipe", row.recipe},
                      {"graph6", row.graph6}}
                     .dump()
              << '\n';
        }
        return 0;
      }
      auto print = [&](const SporadicEntry& row) {
        out << std::setw(3) << row.id << "  " << std::setw(3) << row.order << "  "
            << (row.bipartite ? "bipartite " : "          ") << row.description << "\n     "
            << row.graph6 << '\n';
      };
      if (sporadic_all) {
        for (const auto& row : sporadic_registry()) print(row);
      } else {
        print(sporadic(sporadic_id));
      }
      return 0;
    }

    if (*certify) {
      for (const auto& g : input.graphs(in)) {
        const auto cert = certify_gap(g);
        if (as_json) {
          out << certificate_json(cert) << '\n';
        } else {
          out << cert.graph6 << "  n=" << cert.n << "  gap=" << yes_no(cert.verdict)
              << "  roots_in_gap=" << cert.roots_in_gap << "  mult(+1)=" << cert.mult_plus1
              << "  mult(-1)=" << cert.mult_minus1 << '\n';
        }
      }
      return 0;
    }

    if (*charpoly) {
      for (const auto& g : input.graphs(in)) {
        const auto p = char_poly(g);
        if (as_json) {
          out << json{{"graph6", to_graph6(g)}, {"charpoly", to_coefficient_strings(p)}}.dump()
              << '\n';
        } else {
          out << to_text(p) << '\n';
        }
      }
      return 0;
    }

    if (*sturm) {
      IntPoly p;
      BigRat a, b;
      try {
        p = parse_coefficients(poly_text);
        a = parse_rational(a_text);
        b = parse_rational(b_text);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      if (p.is_zero()) throw UsageError("the zero polynomial has no finite root count");
      if (!(a < b)) throw UsageError("need a < b");
      const int count = count_roots_open(p, a, b, with_multiplicity);
      if (as_json) {
        out << json{{"poly", to_coefficient_strings(p)},
                    {"a", to_string(a)},
                    {"b", to_string(b)},
                    {"with_multiplicity", with_multiplicity},
                    {"count", count}}
                   .dump()
            << '\n';
      } else {
        out << count << '\n';
      }
      return 0;
    }

    auto transform = [&](auto&& f) {
      for (const auto& g : input.graphs(in)) {
        const Graph h = f(g);
        if (as_json) {
          out << json{{"input", to_graph6(g)}, {"output", to_graph6(h)}}.dump() << '\n';
        } else {
          out << to_graph6(h) << '\n';
        }
      }
      return 0;
    };
    if (*double_cmd) return transform([](const Graph& g) { return bipartite_double(g); });
    if (*d2_cmd) return transform([](const Graph& g) { return distance_two_graph(g); });
    if (*line_cmd) return transform([](const Graph& g) { return line_graph(g); });
    if (*truncate_cmd) {
      const auto vertices = parse_list(vertex_list);
      return transform([&](const Graph& g) { return truncate(g, vertices); });
    }

    if (*preimages_cmd) {
      for (const auto& g : input.graphs(in)) {
        const auto pre = preimages(g);
        if (as_json) {
          json list = json::array();
          for (const auto& h : pre) list.push_back(canonical_form(h).bytes);
          out << json{{"input", to_graph6(g)}, {"preimages", list}}.dump() << '\n';
        } else {
          out << "# " << to_graph6(g) << ": " << pre.size() << " preimage"
              << (pre.size() == 1 ? "" : "s") << '\n';
          for (const auto& h : pre) out << canonical_form(h).bytes << '\n';
        }
      }
      return 0;
    }

    if (*decompose) {
      DecompositionOptions options;
      options.up_to_automorphism = !labeled;
      if (limit > 0) options.limit = limit;
      for (const auto& g : input.graphs(in)) {
        const auto found = triangle_decompositions(g, options);
        if (as_json) {
          json list = json::array();
          for (const auto& d : found) list.push_back(d.triangles);
          out << json{{"input", to_graph6(g)}, {"decompositions", list}}.dump() << '\n';
        } else {
          out << "# " << to_graph6(g) << ": " << found.size() << " decomposition"
              << (found.size() == 1 ? "" : "s") << '\n';
          for (const auto& d : found) out << to_text(decomposition_to_geometry(g, d)) << '\n';
        }
      }
      return 0;
    }

    if (*classify) {
      const auto report = classify_gap(max_n, jobs);
      out << (as_json ? report_json(report) + "\n" : report_table(report));
      const bool complete =
          std::all_of(report.survivors.begin(), report.survivors.end(),
                      [](const GapEntry& e) { return e.tag.has_value() || e.n > 16; });
      if (!complete) err << "unclassified survivor at order <= 16\n";
      return complete ? 0 : 1;
    }

    if (*verify) {
      bool all_pass = true;
      json results = json::array();
      auto record = [&](const std::string& name, bool pass) {
        all_pass = all_pass && pass;
        if (as_json) {
          results.push_back({{"check", name}, {"pass", pass}});
        } else {
          out << (pass ? "PASS  " : "FAIL  ") << name << '\n';
        }
      };
      for (int j = 2; j <= k_max; ++j) {
        const std::string tag = "k=" + std::to_string(j);
        record("double(KS(k)) = GM(2k), " + tag,
               are_isomorphic(bipartite_double(kollar_sarnak(j)), guo_mohar(2 * j)));
        record("sameeigs identity, " + tag, verify_sameeigs_identity(j));
        record("(x^2-1)^k divides phi(GM(k)) and matches the closed form, " + tag,
               gm_spectrum_check(j));
      }
      for (int j = 1; j <= std::min(k_max, 3); ++j) {
        const std::string tag = "k=" + std::to_string(j);
        if (j >= 2) {
          const auto pre = preimages(guo_mohar(2 * j));
          record("preimages(GM(2k)) = {KS(k)}, " + tag,
                 pre.size() == 1 && are_isomorphic(pre.front(), kollar_sarnak(j)));
        }
        record("preimages(GM(2k+1)) is empty, " + tag, preimages(guo_mohar(2 * j + 1)).empty());
      }
      if (as_json) out << json{{"pass", all_pass}, {"checks", results}}.dump(2) << '\n';
      return all_pass ? 0 : 1;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace specgap::cli
