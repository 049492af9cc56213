// colmon - collision-table monoids and their subshifts

#include "colmon/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"

#include "colmon/presentation.hpp"
#include "colmon/reconstruction.hpp"
#include "colmon/report.hpp"
#include "colmon/rewrite.hpp"
#include "colmon/structure.hpp"
#include "colmon/subshift.hpp"

namespace colmon::cli {

  namespace {
    using report::ordered_json;

    // Invocation errors detected after argument parsing.
    struct InvalidInput : std::runtime_error {
      using std::runtime_error::runtime_error;
    };

    struct Options {
      std::string path;
      bool        json = false;

      std::string word;
      std::size_t max_len   = 4;
      std::size_t long_len  = 10;
      std::size_t max_n     = 8;
      bool        enumerate = false;
      std::size_t n         = 2;
      std::optional<std::size_t> margin;
      std::optional<std::size_t> probe;
      std::size_t word_len = 5;
      bool        table    = false;
    };

    std::string read_file(std::string const& path) {
      std::ifstream in(path, std::ios::binary);
      if (!in) {
        throw InvalidInput("cannot read " + path);
      }
      std::ostringstream buf;
      buf << in.rdbuf();
      return buf.str();
    }

    ParseResult load(std::string const& path) {
      if (path.starts_with('@')) {
        try {
          return {catalog::get(path.substr(1)), {}};
        } catch (std::invalid_argument const& e) {
          throw InvalidInput(e.what());
        }
      }
      return parse_presentation(read_file(path));
    }

    void print_issues(ValidationReport const& r, std::ostream& out) {
      for (auto const& i : r.issues) {
        out << to_string(i.kind);
        if (i.line != 0) {
          out << " (line " << i.line << ")";
        }
        out << ": " << i.detail << '\n';
      }
    }

    Presentation require(Options const& o, std::ostream& out) {
      auto r = load(o.path);
      if (!r.presentation) {
        if (o.json) {
          out << report::to_json(r.report).dump(2) << '\n';
        } else {
          print_issues(r.report, out);
        }
        throw InvalidInput("invalid presentation " + o.path);
      }
      return *r.presentation;
    }

    Word parse_input_word(Presentation const& p, std::string const& text) {
      try {
        return parse_word(p, text);
      } catch (std::invalid_argument const& e) {
        throw InvalidInput(e.what());
      }
    }

    std::size_t default_probe(Presentation const& p) {
      return 2 * p.left_size() * p.right_size();
    }

    void emit(Options const& o, std::ostream& out, ordered_json const& j) {
      if (o.json) {
        out << j.dump(2) << '\n';
      }
    }

    ////////////////////////////////////////////////////////////////////////
    // Subcommands
    ////////////////////////////////////////////////////////////////////////

    int cmd_validate(Options const& o, std::ostream& out) {
      auto const r = load(o.path);
      if (o.json) {
        out << report::to_json(r.report).dump(2) << '\n';
      } else if (r.report.ok()) {
        out << "ok: " << r.presentation->left_size() << " left and "
            << r.presentation->right_size() << " right generators\n";
      } else {
        print_issues(r.report, out);
      }
      return r.report.ok() ? ExitCode::ok : ExitCode::invalid;
    }

    int cmd_reduce(Options const& o, std::ostream& out) {
      auto const p = require(o, out);
      Word const w = parse_input_word(p, o.word);
      auto const e = reduce(p, w);
      emit(o,
           out,
           {{"word", format_word(p, w)},
            {"normal_form", format_normal_form(p, e)},
            {"zero", e.is_zero()}});
      if (!o.json) {
        out << format_normal_form(p, e) << '\n';
      }
      return ExitCode::ok;
    }

    int cmd_analyze(Options const& o, std::ostream& out) {
      auto const p = require(o, out);
      auto const r = check_theorem_hypotheses(p, o.max_len);
      if (o.json) {
        out << report::to_json(p, r).dump(2) << '\n';
      } else {
        auto flag = [&](char const* name, bool b) {
          out << (b ? "  yes " : "  no  ") << name << '\n';
        };
        out << "hypotheses for " << (p.name().empty() ? o.path : p.name())
            << '\n';
        flag("unique factorization M = M+ M-", r.factorization_ok);
        flag("M+ and M- meet only in the unit", r.unit_intersection_ok);
        flag("left generators have right inverses", r.right_inverses_ok);
        flag("right generators have left inverses", r.left_inverses_ok);
        flag("plus map injective at scale", r.plus_map_injective);
        flag("minus map injective at scale", r.minus_map_injective);
        auto bound = [&](char const* name, BoundMeasurement const& b) {
          out << "  " << name << ": " << b.measured << " <= " << b.claimed
              << ", mirror " << b.mirror_measured
              << " <= " << b.mirror_claimed << '\n';
        };
        bound("inverse witness length", r.inverse_bound);
        bound("annihilator length", r.annihilation_bound);
        bound("separating probe length", r.separation_bound);
        for (auto const& v : r.violations) {
          out << "  violation: " << v << '\n';
        }
      }
      return r.ok() ? ExitCode::ok : ExitCode::negative;
    }

    int cmd_language(Options const& o, std::ostream& out) {
      auto const p      = require(o, out);
      auto const counts = language_counts(p, o.max_n);
      ordered_json rows = ordered_json::array();
      for (std::size_t n = 0; n < counts.size(); ++n) {
        rows.push_back({n, counts[n]});
      }
      ordered_json j{{"presentation", p.name()},
                     {"max_n", o.max_n},
                     {"counts", rows}};
      if (o.enumerate) {
        ordered_json words = ordered_json::array();
        for (std::size_t n = 0; n <= o.max_n; ++n) {
          language_enumerate(p, n, [&](Word const& w) {
            words.push_back(format_word(p, w));
          });
        }
        j["words"] = std::move(words);
      }
      if (o.json) {
        out << j.dump(2) << '\n';
      } else {
        for (std::size_t n = 0; n < counts.size(); ++n) {
          out << n << '\t' << counts[n] << '\n';
        }
        if (o.enumerate) {
          for (auto const& w : j["words"]) {
            out << w.get<std::string>() << '\n';
          }
        }
      }
      return ExitCode::ok;
    }

    int cmd_contexts(Options const& o, std::ostream& out) {
      auto const        p = require(o, out);
      Word const        w = parse_input_word(p, o.word);
      std::size_t const m = o.probe.value_or(2);
      double            probes = 1;
      for (std::size_t k = 0; k < m; ++k) {
        probes = probes * static_cast<double>(p.alphabet_size()) + 1;
      }
      if (probes * probes > 1e8) {
        throw InvalidInput("probe length " + std::to_string(m)
                           + " gives too many context pairs to list");
      }
      if (!admissible(p, w)) {
        emit(o,
             out,
             {{"word", format_word(p, w)},
              {"probe", m},
              {"admissible", false}});
        if (!o.json) {
          out << "not admissible\n";
        }
        return ExitCode::negative;
      }
      auto const   ctx = finite_context(p, w, m);
      ordered_json pairs = ordered_json::array();
      for (auto const& [u, v] : ctx) {
        pairs.push_back({format_word(p, u), format_word(p, v)});
      }
      auto const sig = context_signature(p, w);
      emit(o,
           out,
           {{"word", format_word(p, w)},
            {"probe", m},
            {"admissible", true},
            {"signature", format_normal_form(p, sig)},
            {"size", ctx.size()},
            {"context", std::move(pairs)}});
      if (!o.json) {
        out << "signature " << format_normal_form(p, sig) << ", " << ctx.size()
            << " pairs at probe length " << m << '\n';
        for (auto const& [u, v] : ctx) {
          out << '[' << format_word(p, u) << "] . [" << format_word(p, v)
              << "]\n";
        }
      }
      return ExitCode::ok;
    }

    int cmd_property_a(Options const& o, std::ostream& out) {
      auto const           p = require(o, out);
      PropertyACheckParams params;
      params.n     = o.n;
      params.H     = o.margin.value_or(o.n);
      params.L_max = o.long_len;
      params.m     = o.probe.value_or(default_probe(p));
      try {
        params.validate();
      } catch (std::invalid_argument const& e) {
        throw InvalidInput(e.what());
      }
      auto const r = property_a_check(p, params);
      if (o.json) {
        out << report::to_json(p, r).dump(2) << '\n';
      } else {
        out << (r.ok() ? "pass" : "fail") << ": n=" << params.n
            << " H=" << params.H << " L_max=" << params.L_max
            << " m=" << params.m << ", " << r.words << " words in "
            << r.groups << " groups, " << r.groups_compared
            << " compared, " << r.violations.size() << " violations\n";
        for (auto const& [a, b] : r.violations) {
          out << "  " << format_word(p, a) << "  vs  " << format_word(p, b)
              << '\n';
        }
        out << "bounded check: corroborates at this scale only\n";
      }
      return r.ok() ? ExitCode::ok : ExitCode::negative;
    }

    int cmd_reconstruct(Options const& o, std::ostream& out) {
      auto const        p = require(o, out);
      std::size_t const m = o.probe.value_or(default_probe(p));
      auto const        t = reconstruct_ball(p, o.word_len, m);
      auto const        c = certify_isomorphism(p, t);
      ordered_json      j = report::to_json(p, c);
      j["table"]          = report::to_json(p, t, o.table);
      if (o.json) {
        out << j.dump(2) << '\n';
      } else {
        out << (c.valid() ? "valid" : "invalid") << " at word length "
            << c.word_length << ", probe length " << c.probe_length << ": "
            << t.classes().size() << " classes of " << t.words().size()
            << " words\n";
        out << "  homomorphism " << (c.homomorphism_ok ? "yes" : "no")
            << "\n  injective " << (c.injective_ok ? "yes" : "no")
            << "\n  surjective at scale "
            << (c.surjective_at_scale_ok ? "yes" : "no") << '\n';
        if (auto const& v = t.violation()) {
          out << "  scale too small: [" << format_word(p, v->left) << "] ["
              << format_word(p, v->right)
              << "] changes class with the representatives\n";
        }
      }
      return c.valid() ? ExitCode::ok : ExitCode::negative;
    }

    int cmd_emit_dot(Options const& o, std::ostream& out) {
      auto const p = require(o, out);
      out << CollisionAutomaton(p, Side::left).to_dot(p, "collision_left")
          << CollisionAutomaton(p, Side::right).to_dot(p, "collision_right");
      return ExitCode::ok;
    }
  }  // namespace

  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err) {
    Options  o;
    CLI::App app("Collision-table monoids and their subshifts", "colmon");
    app.require_subcommand(1);

    auto add = [&](char const* name, char const* help) {
      auto* sub = app.add_subcommand(name, help);
      sub->add_option("presentation", o.path, ".smp file, or @name for a "
                                              "built-in presentation")
          ->required();
      sub->add_flag("--json", o.json, "JSON output");
      return sub;
    };

    auto* validate = add("validate", "check a presentation file");
    auto* reduce_  = add("reduce", "normal form of a word");
    reduce_->add_option("--word", o.word, "whitespace-separated symbols")
        ->required();
    auto* analyze = add("analyze", "check the structural hypotheses");
    analyze->add_option("--max-len", o.max_len, "injectivity word length")
        ->check(CLI::PositiveNumber);
    auto* language = add("language", "count admissible words");
    language->add_option("--max-n", o.max_n, "largest length")->required();
    language->add_flag("--enumerate", o.enumerate, "list the words");
    auto* contexts = add("contexts", "finite context of a word");
    contexts->add_option("--word", o.word, "whitespace-separated symbols")
        ->required();
    contexts->add_option("--probe", o.probe, "probe length (default 2)");
    auto* property_a = add("property-a", "bounded property (a,n,H) check");
    property_a->add_option("--n", o.n, "window size");
    property_a->add_option("--margin", o.margin, "H (default n)");
    property_a->add_option("--max-len", o.long_len, "longest word");
    property_a->add_option("--probe", o.probe, "probe length");
    auto* reconstruct = add("reconstruct", "rebuild the monoid at scale");
    reconstruct->add_option("--word-len", o.word_len, "ball radius");
    reconstruct->add_option("--probe", o.probe, "probe length");
    reconstruct->add_flag("--table", o.table, "include the product table");
    auto* emit_dot = add("emit-dot", "collision automata as DOT graphs");

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::CallForHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::CallForAllHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::ParseError const& e) {
      app.exit(e, out, err);
      return ExitCode::invalid;
    }

    try {
      if (validate->parsed()) {
        return cmd_validate(o, out);
      }
      if (reduce_->parsed()) {
        return cmd_reduce(o, out);
      }
      if (analyze->parsed()) {
        return cmd_analyze(o, out);
      }
      if (language->parsed()) {
        return cmd_language(o, out);
      }
      if (contexts->parsed()) {
        return cmd_contexts(o, out);
      }
      if (property_a->parsed()) {
        return cmd_property_a(o, out);
      }
      if (reconstruct->parsed()) {
        return cmd_reconstruct(o, out);
      }
      if (emit_dot->parsed()) {
        return cmd_emit_dot(o, out);
      }
    } catch (InvalidInput const& e) {
      err << "error: " << e.what() << '\n';
      return ExitCode::invalid;
    } catch (std::overflow_error const& e) {
      err << "error: " << e.what() << '\n';
      return ExitCode::negative;
    } catch (std::exception const& e) {
      err << "internal error: " << e.what() << '\n';
      return ExitCode::internal;
    }
    return ExitCode::internal;
  }

}  // namespace colmon::cli
