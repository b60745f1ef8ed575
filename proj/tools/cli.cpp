#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "sepenum/errors.hpp"
#include "sepenum/graph.hpp"
#include "sepenum/important.hpp"
#include "sepenum/mincut.hpp"
#include "sepenum/oracle.hpp"
#include "sepenum/ranked.hpp"
#include "sepenum/small_minimal.hpp"

namespace sepenum::cli {
namespace {

using nlohmann::json;

struct Config {
  std::string input;
  std::string source;
  std::string target;
  std::size_t k = 1;
  std::optional<std::size_t> limit;
  std::string format = "plain";
  std::string set;
  std::string vertex;
  std::size_t max_n = 20;
};

// Failures that carry their own exit status.
struct Exit {
  int code;
  std::string message;
};

class Printer {
 public:
  Printer(const Graph& g, std::ostream& out, bool json_lines)
      : g_(g), out_(out), json_(json_lines) {}

  bool json_lines() const { return json_; }

  void separator(const Separator& x) {
    if (json_) {
      out_ << record(x).dump() << '\n';
    } else {
      out_ << plain(x) << '\n';
    }
    out_.flush();
  }

  void line(const std::string& text) { out_ << text << '\n' << std::flush; }
  void object(const json& j) { out_ << j.dump() << '\n' << std::flush; }

  json labels(const Separator& x) const {
    json arr = json::array();
    for (VertexId v : x) arr.push_back(g_.label(v));
    return arr;
  }

  json record(const Separator& x) const {
    return json{{"separator", labels(x)}, {"size", x.size()}};
  }

  std::string plain(const Separator& x) const {
    std::string text;
    for (VertexId v : x) {
      if (!text.empty()) text += ',';
      text += g_.label(v);
    }
    return text;
  }

 private:
  const Graph& g_;
  std::ostream& out_;
  bool json_;
};

Graph load(const std::string& path, std::istream& in) {
  std::stringstream buffer;
  if (path == "-") {
    buffer << in.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw Exit{kUsage, "cannot open " + path};
    buffer << file.rdbuf();
  }
  return parse_graph(buffer.str());
}

VertexId resolve(const Graph& g, const std::string& label, int code) {
  auto id = g.find(label);
  if (!id) throw Exit{code, "unknown vertex label '" + label + "'"};
  return *id;
}

VertexSet resolve_set(const Graph& g, const std::string& text) {
  std::vector<VertexId> ids;
  std::stringstream fields(text);
  for (std::string label; std::getline(fields, label, ',');) {
    if (!label.empty()) ids.push_back(resolve(g, label, kUsage));
  }
  return VertexSet::from_unsorted(std::move(ids));
}

bool under_limit(const Config& cfg, std::size_t emitted) {
  return !cfg.limit || emitted < *cfg.limit;
}

void run_minsep(const Graph& g, Terminals term, Printer& p) {
  CutResult cut = kappa(g, term);
  if (p.json_lines()) {
    json j = p.record(cut.separator);
    j["kappa"] = cut.kappa;
    p.object(j);
  } else {
    p.line("kappa " + std::to_string(cut.kappa));
    p.separator(cut.separator);
  }
}

void run_list_minimal(const Graph& g, Terminals term, const Config& cfg,
                      Printer& p) {
  if (g.has_edge(term.s, term.t)) {
    p.line("BOTTOM");
    throw Exit{kInvalidTerminals, "terminals are adjacent"};
  }
  std::size_t emitted = 0;
  if (!under_limit(cfg, emitted)) return;
  enumerate_small_minimal(g, term, cfg.k, [&](const Separator& x) {
    p.separator(x);
    return under_limit(cfg, ++emitted);
  });
}

void run_ranked(const Graph& g, Terminals term, const Config& cfg,
                Printer& p) {
  require_separable(g, term);
  std::size_t emitted = 0;
  if (!under_limit(cfg, emitted)) return;
  ranked_separators(g, term, [&](const Separator& x) {
    p.separator(x);
    return under_limit(cfg, ++emitted);
  });
}

void run_minimum_all(const Graph& g, Terminals term, Printer& p) {
  minimum_separators(g, term, [&](const Separator& x) {
    p.separator(x);
    return true;
  });
}

void run_important(const Graph& g, Terminals term, const Config& cfg,
                   Printer& p) {
  for (const auto& x : enumerate_important(g, term, cfg.k).separators) {
    p.separator(x);
  }
}

void run_check(const Graph& g, Terminals term, const Config& cfg,
               Printer& p) {
  require_separable(g, term);
  VertexSet x = resolve_set(g, cfg.set);
  const bool separates = is_separator(g, term, x);
  const bool minimal = separates && is_minimal_separator(g, term, x);
  const bool important = minimal && is_important(g, term, x);
  const bool minimum = separates && x.size() == kappa(g, term).kappa;
  if (p.json_lines()) {
    json j = p.record(x);
    j["is_separator"] = separates;
    j["is_minimal"] = minimal;
    j["is_important"] = important;
    j["is_minimum"] = minimum;
    p.object(j);
  } else {
    auto yes = [](bool b) { return b ? std::string("yes") : std::string("no"); };
    p.line("separator " + yes(separates));
    p.line("minimal " + yes(minimal));
    p.line("important " + yes(important));
    p.line("minimum " + yes(minimum));
  }
}

void run_witness(const Graph& g, Terminals term, const Config& cfg,
                 Printer& p) {
  require_separable(g, term);
  VertexId v = resolve(g, cfg.vertex, kUsage);
  if (v == term.s || v == term.t) {
    throw Exit{kUsage, "witness vertex must differ from the terminals"};
  }
  auto path = oracle::find_chordless_path_through(g, term, v, cfg.max_n);
  if (!path) {
    if (p.json_lines()) {
      p.object(json{{"separator", nullptr}});
    } else {
      p.line("none");
    }
    return;
  }
  Separator x = chordless_path_to_separator(g, term, *path, v);
  if (p.json_lines()) {
    json j = p.record(x);
    json walk = json::array();
    for (VertexId u : *path) walk.push_back(g.label(u));
    j["path"] = std::move(walk);
    p.object(j);
  } else {
    p.separator(x);
  }
}

int exit_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidTerminals:
    case ErrorCode::kTerminalsAdjacent:
      return kInvalidTerminals;
    case ErrorCode::kAlreadySeparated:
      return kSeparated;
    default:
      return kUsage;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"Enumerate vertex separators between two terminals"};
  app.name(args.empty() ? "sepenum" : args.front());
  app.require_subcommand(1);

  Config cfg;
  auto common = [&cfg](CLI::App* sub) {
    sub->add_option("file", cfg.input, "Edge-list file, or - for stdin")
        ->required();
    sub->add_option("-s,--source", cfg.source, "Source vertex label")
        ->required();
    sub->add_option("-t,--target", cfg.target, "Target vertex label")
        ->required();
    sub->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"plain", "json-lines"}));
  };
  auto bound = [&cfg](CLI::App* sub) {
    sub->add_option("-k", cfg.k, "Size bound")
        ->required()
        ->check(CLI::PositiveNumber);
  };
  auto limit = [&cfg](CLI::App* sub) {
    sub->add_option("--limit", cfg.limit, "Stop after N separators")
        ->check(CLI::NonNegativeNumber);
  };

  auto* minsep = app.add_subcommand("minsep", "kappa and a minimum separator");
  common(minsep);
  auto* list = app.add_subcommand(
      "list-minimal", "stream minimal separators of size <= k");
  common(list);
  bound(list);
  limit(list);
  auto* ranked = app.add_subcommand(
      "ranked", "stream separators by non-decreasing size");
  common(ranked);
  limit(ranked);
  auto* minimum = app.add_subcommand("minimum-all",
                                     "stream all minimum separators");
  common(minimum);
  auto* important = app.add_subcommand(
      "important", "important separators of size <= k");
  common(important);
  bound(important);
  auto* check = app.add_subcommand("check", "classify a vertex set");
  common(check);
  check->add_option("--set", cfg.set, "Comma-separated labels")->required();
  auto* witness = app.add_subcommand(
      "witness", "minimal separator through V via a chordless path");
  common(witness);
  witness->add_option("-v,--vertex", cfg.vertex, "Vertex label")->required();
  witness->add_option("--max-n", cfg.max_n, "Largest graph searched")
      ->check(CLI::PositiveNumber);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsage;
  }

  try {
    Graph g = load(cfg.input, in);
    Terminals term{resolve(g, cfg.source, kInvalidTerminals),
                   resolve(g, cfg.target, kInvalidTerminals)};
    if (term.s == term.t) {
      throw Exit{kInvalidTerminals, "source and target are the same vertex"};
    }
    Printer p(g, out, cfg.format == "json-lines");
    if (*minsep) {
      run_minsep(g, term, p);
    } else if (*list) {
      run_list_minimal(g, term, cfg, p);
    } else if (*ranked) {
      run_ranked(g, term, cfg, p);
    } else if (*minimum) {
      run_minimum_all(g, term, p);
    } else if (*important) {
      run_important(g, term, cfg, p);
    } else if (*check) {
      run_check(g, term, cfg, p);
    } else if (*witness) {
      run_witness(g, term, cfg, p);
    }
  } catch (const Exit& e) {
    err << "error: " << e.message << '\n';
    return e.code;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_for(e.code());
  }
  return kOk;
}

}  // namespace sepenum::cli
