#include "avoid/cli.hpp"

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "avoid/catalog.hpp"
#include "avoid/occurrence.hpp"
#include "avoid/report.hpp"

namespace avoid {
namespace {

using nlohmann::json;

struct Clock {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

// --morphism accepts either a file path or a catalog name like g_y.
Morphism resolve_morphism(const std::string& file, const std::string& data_dir) {
  return std::filesystem::exists(file) ? Morphism::load(file) : load_catalog_morphism(file, data_dir);
}

struct SearchFlags {
  int threads = 0;
  std::uint64_t node_budget = 1'000'000'000;
  int split_depth = 12;
  bool serial = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--threads", threads, "worker threads (0 = default)");
    cmd->add_option("--node-budget", node_budget, "abort after this many search nodes");
    cmd->add_option("--split-depth", split_depth, "prefix depth for parallel fan-out");
    cmd->add_flag("--serial", serial, "use the single-threaded reference search");
  }
  SearchOptions options() const { return {threads, split_depth, node_budget, serial}; }
};

struct ConstraintFlags {
  std::vector<std::string> formulas;
  std::vector<std::string> forbidden;
  int square_floor = 0;
  int alphabet = 2;

  void attach(CLI::App* cmd, bool with_alphabet = true) {
    cmd->add_option("--formula,-f", formulas, "formula to avoid (fragments joined by dots)");
    cmd->add_option("--forbid", forbidden, "forbidden factor (digits)");
    cmd->add_option("--sq", square_floor, "forbid squares of period >= this");
    if (with_alphabet) cmd->add_option("--alphabet,-k", alphabet, "alphabet size");
  }
  ConstraintSet constraints() const {
    ConstraintSet c;
    for (const std::string& s : formulas) c.formulas.push_back(parse_formula(s));
    for (const std::string& s : forbidden)
      c.forbidden_factors.push_back(Word::parse(s, Alphabet(alphabet)));
    c.square_floor = square_floor;
    return c;
  }
};

int exit_for(const AvoidanceTable& t, int ok = 0) { return t.budget_exhausted ? 3 : ok; }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"avoid: search and certification workbench for formulas on words"};
  app.require_subcommand(1);
  std::string data_dir;
  app.add_option("--data", data_dir, "directory with morphism files")->envname("AVOID_DATA_DIR");

  std::function<int()> action;

  // ---- check ----
  {
    auto* cmd = app.add_subcommand("check", "look for an occurrence of a formula in a word");
    auto formula = std::make_shared<std::string>();
    auto word = std::make_shared<std::string>();
    auto alphabet = std::make_shared<int>(2);
    cmd->add_option("--formula,-f", *formula, "formula")->required();
    cmd->add_option("--word,-w", *word, "word (digits)")->required();
    cmd->add_option("--alphabet,-k", *alphabet, "alphabet size");
    cmd->callback([&action, formula, word, alphabet, &out]() {
      action = [formula, word, alphabet, &out]() {
        Clock clock;
        const Formula f = parse_formula(*formula);
        const Word w = Word::parse(*word, Alphabet(*alphabet));
        const auto occ = find_occurrence(w, f);
        json result{{"formula", format_formula(f)}, {"word", w.str()}, {"avoided", !occ}};
        if (occ) {
          if (!occurrence_valid(w, f, *occ)) throw std::logic_error("witness failed validation");
          json h = json::object();
          for (const auto& [v, img] : occ->assignment) h[std::string(1, v)] = img.str();
          result["witness"] = h;
        }
        out << report_envelope("check", result, clock.ms()).dump(2) << '\n';
        return occ ? 1 : 0;
      };
    });
  }

  // ---- divides ----
  {
    auto* cmd = app.add_subcommand("divides", "test whether one formula divides another");
    auto big = std::make_shared<std::string>();
    auto small = std::make_shared<std::string>();
    cmd->add_option("--big", *big, "candidate multiple")->required();
    cmd->add_option("--small", *small, "candidate divisor")->required();
    cmd->callback([&action, big, small, &out]() {
      action = [big, small, &out]() {
        Clock clock;
        const Formula fb = parse_formula(*big);
        const Formula fs = parse_formula(*small);
        const bool div = is_divisible_by(fb, fs);
        json result{
            {"big", format_formula(fb)}, {"small", format_formula(fs)}, {"divisible", div}};
        out << report_envelope("divides", result, clock.ms()).dump(2) << '\n';
        return div ? 0 : 1;
      };
    });
  }

  // ---- enumerate ----
  {
    auto* cmd = app.add_subcommand("enumerate", "count words satisfying the constraints");
    auto cons = std::make_shared<ConstraintFlags>();
    auto flags = std::make_shared<SearchFlags>();
    auto limit = std::make_shared<int>(200);
    auto format = std::make_shared<std::string>("json");
    cons->attach(cmd);
    flags->attach(cmd);
    cmd->add_option("--limit,-n", *limit, "length limit");
    cmd->add_option("--format", *format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->callback([&action, cons, flags, limit, format, &out]() {
      action = [cons, flags, limit, format, &out]() {
        Clock clock;
        const auto c = cons->constraints();
        const AvoidanceTable t =
            flags->serial ? enumerate_avoiders_serial(c, cons->alphabet, *limit, flags->options())
                          : enumerate_avoiders(c, cons->alphabet, *limit, flags->options());
        if (*format == "csv")
          out << table_csv(t);
        else
          out << report_envelope("enumerate", to_json(t), clock.ms()).dump(2) << '\n';
        return exit_for(t);
      };
    });
  }

  // ---- classify ----
  {
    auto* cmd = app.add_subcommand("classify", "estimate the growth of the avoiding language");
    auto formula = std::make_shared<std::string>();
    auto alphabet = std::make_shared<int>(2);
    auto flags = std::make_shared<SearchFlags>();
    auto gopts = std::make_shared<GrowthOptions>();
    cmd->add_option("--formula,-f", *formula, "formula")->required();
    cmd->add_option("--alphabet,-k", *alphabet, "alphabet size");
    cmd->add_option("--limit,-n", gopts->limit, "length probed");
    cmd->add_option("--ratio-threshold", gopts->ratio_threshold, "exponential ratio threshold");
    cmd->add_option("--diff-bound", gopts->diff_bound, "polynomial step bound");
    cmd->add_option("--window", gopts->window, "trailing lengths examined");
    flags->attach(cmd);
    cmd->callback([&action, formula, alphabet, flags, gopts, &out]() {
      action = [formula, alphabet, flags, gopts, &out]() {
        Clock clock;
        GrowthOptions o = *gopts;
        o.search = flags->options();
        const GrowthVerdict v = classify_growth(parse_formula(*formula), *alphabet, o);
        out << report_envelope("classify", to_json(v), clock.ms()).dump(2) << '\n';
        return exit_for(v.table);
      };
    });
  }

  // ---- figure1 ----
  {
    auto* cmd = app.add_subcommand(
        "figure1", "reproduce the finite-language table for the unavoidable-limit formulas");
    auto flags = std::make_shared<SearchFlags>();
    auto limit = std::make_shared<int>(120);
    auto format = std::make_shared<std::string>("json");
    flags->attach(cmd);
    cmd->add_option("--limit,-n", *limit, "search length limit");
    cmd->add_option("--format", *format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    cmd->callback([&action, flags, limit, format, &out]() {
      action = [flags, limit, format, &out]() {
        Clock clock;
        bool all_match = true;
        bool budget = false;
        json rows = json::array();
        std::ostringstream csv;
        csv << "formula,max_length,total,expected_max,expected_total,match\n";
        for (const FiniteRow& row : finite_binary_rows()) {
          Clock row_clock;
          ConstraintSet c;
          c.formulas.push_back(parse_formula(row.formula));
          const AvoidanceTable t = enumerate_avoiders(c, 2, *limit, flags->options());
          budget = budget || t.budget_exhausted;
          const bool match =
              t.exhausted && t.max_length == row.max_length && t.total() == row.total;
          all_match = all_match && match;
          rows.push_back(json{{"formula", row.formula},
                              {"max_length", t.max_length ? json(*t.max_length) : json()},
                              {"total", t.total()},
                              {"expected_max", row.max_length},
                              {"expected_total", row.total},
                              {"match", match},
                              {"wall_ms", row_clock.ms()}});
          csv << row.formula << ',' << (t.max_length ? std::to_string(*t.max_length) : "-") << ','
              << t.total() << ',' << row.max_length << ',' << row.total << ','
              << (match ? "yes" : "no") << '\n';
        }
        if (*format == "csv")
          out << csv.str();
        else
          out << report_envelope("figure1", json{{"rows", rows}, {"all_match", all_match}},
                                 clock.ms())
                     .dump(2)
              << '\n';
        return budget ? 3 : all_match ? 0 : 1;
      };
    });
  }

  // ---- morphic ----
  {
    auto* cmd = app.add_subcommand("morphic", "print a prefix of a named or custom infinite word");
    auto name = std::make_shared<std::string>();
    auto inner_file = std::make_shared<std::string>();
    auto outer_file = std::make_shared<std::string>();
    auto seed = std::make_shared<int>(0);
    auto length = std::make_shared<int>(0);
    auto format = std::make_shared<std::string>("text");
    cmd->add_option("--name", *name, "built-in word name");
    cmd->add_option("--morphism", *inner_file, "fixed-point morphism file");
    cmd->add_option("--outer", *outer_file, "morphism applied on top");
    cmd->add_option("--seed", *seed, "fixed-point seed letter");
    cmd->add_option("--length,-n", *length, "prefix length")->required();
    cmd->add_option("--format", *format, "text or json")->check(CLI::IsMember({"text", "json"}));
    cmd->callback([&action, name, inner_file, outer_file, seed, length, format, &data_dir, &out]() {
      action = [name, inner_file, outer_file, seed, length, format, &data_dir, &out]() {
        Clock clock;
        MorphicWordSpec spec = [&]() {
          if (!name->empty()) return builtin_word(*name, data_dir);
          if (inner_file->empty())
            throw std::invalid_argument("need --name or --morphism");
          MorphicWordSpec s{*inner_file, resolve_morphism(*inner_file, data_dir),
                            static_cast<Letter>(*seed), std::nullopt};
          if (!outer_file->empty()) s.outer = resolve_morphism(*outer_file, data_dir);
          return s;
        }();
        const Word w = fixed_point_prefix(spec, *length);
        if (*format == "text") {
          out << w.str() << '\n';
        } else {
          json result{{"name", spec.name}, {"length", w.size()}, {"word", w.str()}};
          out << report_envelope("morphic", result, clock.ms()).dump(2) << '\n';
        }
        return 0;
      };
    });
  }

  // ---- image ----
  {
    auto* cmd = app.add_subcommand("image", "apply a morphism to a word");
    auto file = std::make_shared<std::string>();
    auto word = std::make_shared<std::string>();
    auto format = std::make_shared<std::string>("text");
    cmd->add_option("--morphism", *file, "morphism file")->required();
    cmd->add_option("--word,-w", *word, "word over the domain (digits)")->required();
    cmd->add_option("--format", *format, "text or json")->check(CLI::IsMember({"text", "json"}));
    cmd->callback([&action, file, word, format, &data_dir, &out]() {
      action = [file, word, format, &data_dir, &out]() {
        Clock clock;
        const Morphism g = resolve_morphism(*file, data_dir);
        const Word w = Word::parse(*word, g.domain());
        const Word img = apply_morphism(g, w);
        if (*format == "text") {
          out << img.str() << '\n';
        } else {
          json result{{"word", w.str()}, {"image", img.str()}};
          out << report_envelope("image", result, clock.ms()).dump(2) << '\n';
        }
        return 0;
      };
    });
  }

  // ---- verify ----
  {
    auto* cmd = app.add_subcommand(
        "verify", "certify that a uniform morphism avoids large squares and a formula");
    auto file = std::make_shared<std::string>();
    auto formula = std::make_shared<std::string>();
    auto sq = std::make_shared<int>(0);
    auto reverse = std::make_shared<bool>(false);
    auto x_bound = std::make_shared<int>(8);
    cmd->add_option("--morphism", *file, "morphism file (or catalog file name)")->required();
    cmd->add_option("--formula,-f", *formula, "formula claimed avoided");
    cmd->add_option("--sq", *sq, "claimed square period floor")->required();
    cmd->add_flag("--reverse", *reverse, "also verify the reversed formula");
    cmd->add_option("--x-bound", *x_bound, "context bound for the reduction scan");
    cmd->callback([&action, file, formula, sq, reverse, x_bound, &data_dir, &out]() {
      action = [file, formula, sq, reverse, x_bound, &data_dir, &out]() {
        Clock clock;
        const Morphism g = resolve_morphism(*file, data_dir);
        VerifyOptions vo;
        vo.x_bound = *x_bound;
        std::vector<CertificateSection> sections{verify_squares(g, *sq)};
        if (!formula->empty()) {
          const Formula f = parse_formula(*formula);
          sections.push_back(verify_formula(g, f, *sq, vo));
          if (*reverse) sections.push_back(verify_formula(g, reverse_formula(f), *sq, vo));
        }
        json out_sections = json::array();
        bool ok = true;
        for (const CertificateSection& s : sections) {
          ok = ok && s.all_passed() && s.verdict != Verdict::refuted;
          out_sections.push_back(to_json(s));
        }
        json result{{"morphism", g.str()},
                    {"width", g.uniform_width() ? json(*g.uniform_width()) : json()},
                    {"sections", out_sections},
                    {"pass", ok}};
        out << report_envelope("verify", result, clock.ms()).dump(2) << '\n';
        return ok ? 0 : 1;
      };
    });
  }

  // ---- essential ----
  {
    auto* cmd = app.add_subcommand(
        "essential", "compare extendable factors of the constraints with generator factors");
    auto gens = std::make_shared<std::vector<std::string>>();
    auto cons = std::make_shared<ConstraintFlags>();
    auto flags = std::make_shared<SearchFlags>();
    auto length = std::make_shared<int>(20);
    auto margin = std::make_shared<int>(20);
    cmd->add_option("--gen", *gens, "built-in word name")->required();
    cons->attach(cmd, false);
    flags->attach(cmd);
    cmd->add_option("--length,-n", *length, "factor length compared");
    cmd->add_option("--margin,-m", *margin, "extension margin on each side");
    cmd->callback([&action, gens, cons, flags, length, margin, &data_dir, &out]() {
      action = [gens, cons, flags, length, margin, &data_dir, &out]() {
        Clock clock;
        std::vector<MorphicWordSpec> specs;
        for (const std::string& n : *gens) specs.push_back(builtin_word(n, data_dir));
        cons->alphabet =
            specs.front().outer ? specs.front().outer->codomain().size()
                                : specs.front().inner.domain().size();
        const EssentialReport rep =
            essential_avoidance_check(specs, cons->constraints(), *length, *margin,
                                      flags->options());
        out << report_envelope("essential", to_json(rep), clock.ms()).dump(2) << '\n';
        return rep.pass ? 0 : 1;
      };
    });
  }

  // ---- catalog ----
  {
    auto* cmd = app.add_subcommand("catalog", "list known formulas, claims, and words");
    cmd->callback([&action, &out]() {
      action = [&out]() {
        Clock clock;
        json formulas = json::array();
        for (const CatalogFormula& cf : formula_catalog()) {
          const char* cls = cf.cls == CatalogClass::finite        ? "finite"
                            : cf.cls == CatalogClass::polynomial  ? "polynomial"
                                                                  : "exponential";
          formulas.push_back(json{{"formula", cf.text}, {"class", cls}});
        }
        json rows = json::array();
        for (const FiniteRow& r : finite_binary_rows())
          rows.push_back(
              json{{"formula", r.formula}, {"max_length", r.max_length}, {"total", r.total}});
        json claims = json::array();
        for (const MorphismClaim& m : morphism_claims())
          claims.push_back(json{{"file", m.file},
                                {"formula", m.formula},
                                {"width", m.width},
                                {"square_floor", m.square_floor},
                                {"with_reverse", m.with_reverse}});
        json result{{"formulas", formulas},
                    {"finite_rows", rows},
                    {"morphism_claims", claims},
                    {"words", builtin_word_names()}};
        out << report_envelope("catalog", result, clock.ms()).dump(2) << '\n';
        return 0;
      };
    });
  }

  std::vector<const char*> argv;
  argv.push_back("avoid");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    return action ? action() : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace avoid
