// colmon - collision-table monoids and their subshifts

#include "colmon/report.hpp"

namespace colmon::report {

  namespace {
    ordered_json word(Presentation const& p, Word const& w) {
      return format_word(p, w);
    }

    ordered_json generators(Presentation const&                  p,
                            std::vector<GeneratorWitness> const& ws) {
      ordered_json out = ordered_json::array();
      for (auto const& w : ws) {
        ordered_json j = {{"generator", p.symbol(w.generator)}};
        j.update(to_json(p, w.report));
        out.push_back(std::move(j));
      }
      return out;
    }

  }  // namespace

  ordered_json to_json(ValidationReport const& r) {
    ordered_json issues = ordered_json::array();
    for (auto const& i : r.issues) {
      issues.push_back({{"kind", to_string(i.kind)},
                        {"line", i.line},
                        {"detail", i.detail}});
    }
    return {{"ok", r.ok()}, {"issues", std::move(issues)}};
  }

  ordered_json to_json(Presentation const& p, WitnessReport const& r) {
    ordered_json j;
    j["exists"]        = r.exists;
    j["witness"]       = r.witness ? word(p, *r.witness) : ordered_json();
    j["length"]        = r.length ? ordered_json(*r.length) : ordered_json();
    j["bound_claimed"] = r.bound_claimed;
    j["within_bound"]
        = r.within_bound ? ordered_json(*r.within_bound) : ordered_json();
    return j;
  }

  ordered_json to_json(Presentation const& p, InjectivityReport const& r) {
    ordered_json pairs = ordered_json::array();
    for (auto const& [a, b] : r.indistinguishable) {
      pairs.push_back({word(p, a), word(p, b)});
    }
    return {{"injective", r.injective()},
            {"max_len", r.max_len},
            {"probe_bound", r.probe_bound},
            {"words", r.words},
            {"pairs", r.pairs},
            {"max_separation", r.max_separation},
            {"indistinguishable", std::move(pairs)}};
  }

  ordered_json to_json(BoundMeasurement const& b) {
    return {{"claimed", b.claimed},
            {"measured", b.measured},
            {"mirror_claimed", b.mirror_claimed},
            {"mirror_measured", b.mirror_measured},
            {"within", b.within()}};
  }

  ordered_json to_json(Presentation const& p, HypothesisReport const& r) {
    ordered_json separations = ordered_json::array();
    for (auto const& s : r.separations) {
      ordered_json j = {{"first", p.symbol(s.first)},
                        {"second", p.symbol(s.second)}};
      j.update(to_json(p, s.report));
      separations.push_back(std::move(j));
    }
    ordered_json j;
    j["presentation"]         = p.name();
    j["ok"]                   = r.ok();
    j["factorization_ok"]     = r.factorization_ok;
    j["unit_intersection_ok"] = r.unit_intersection_ok;
    j["right_inverses_ok"]    = r.right_inverses_ok;
    j["left_inverses_ok"]     = r.left_inverses_ok;
    j["plus_map_injective"]   = r.plus_map_injective;
    j["minus_map_injective"]  = r.minus_map_injective;
    j["right_inverses"]       = generators(p, r.right_inverses);
    j["left_inverses"]        = generators(p, r.left_inverses);
    j["right_annihilators"]   = generators(p, r.right_annihilators);
    j["left_annihilators"]    = generators(p, r.left_annihilators);
    j["separations"]          = std::move(separations);
    j["plus_injectivity"]     = to_json(p, r.plus_injectivity);
    j["minus_injectivity"]    = to_json(p, r.minus_injectivity);
    j["inverse_bound"]        = to_json(r.inverse_bound);
    j["annihilation_bound"]   = to_json(r.annihilation_bound);
    j["separation_bound"]     = to_json(r.separation_bound);
    j["violations"]           = r.violations;
    return j;
  }

  ordered_json to_json(Presentation const& p, PropertyAReport const& r) {
    ordered_json violations = ordered_json::array();
    for (auto const& [a, b] : r.violations) {
      violations.push_back({word(p, a), word(p, b)});
    }
    return {{"presentation", p.name()},
            {"n", r.params.n},
            {"margin", r.params.H},
            {"max_len", r.params.L_max},
            {"probe", r.params.m},
            {"ok", r.ok()},
            {"words", r.words},
            {"groups", r.groups},
            {"groups_compared", r.groups_compared},
            {"violations", std::move(violations)},
            {"note",
             "bounded check: a violation refutes the property at this "
             "scale, its absence only corroborates it"}};
  }

  ordered_json to_json(Presentation const&      p,
                       ContextClassTable const& t,
                       bool                     detailed) {
    ordered_json j;
    j["word_len"]     = t.word_length();
    j["probe"]        = t.probe_length();
    j["words"]        = t.words().size();
    j["classes"]      = t.classes().size();
    j["well_defined"] = t.well_defined();
    if (auto const& v = t.violation()) {
      j["violation"] = {{"left", word(p, v->left)},
                        {"right", word(p, v->right)},
                        {"expected", v->expected},
                        {"found", v->found}};
    } else {
      j["violation"] = nullptr;
    }
    if (!detailed) {
      return j;
    }
    ordered_json classes = ordered_json::array();
    for (auto const& c : t.classes()) {
      classes.push_back({{"representative", word(p, c.representative)},
                         {"size", c.members.size()}});
    }
    std::size_t const k       = t.classes().size();
    ordered_json      product = ordered_json::array();
    for (std::size_t a = 0; a < k; ++a) {
      ordered_json row = ordered_json::array();
      for (std::size_t b = 0; b < k; ++b) {
        std::int32_t const c = t.product(a, b);
        if (c == ContextClassTable::undefined) {
          row.push_back(nullptr);
        } else if (c == ContextClassTable::zero) {
          row.push_back("0");
        } else {
          row.push_back(c);
        }
      }
      product.push_back(std::move(row));
    }
    j["representatives"] = std::move(classes);
    j["product"]         = std::move(product);
    return j;
  }

  ordered_json to_json(Presentation const& p, IsoCertificate const& c) {
    ordered_json mapping = ordered_json::array();
    for (auto const& e : c.mapping) {
      mapping.push_back(format_normal_form(p, e));
    }
    return {{"presentation", p.name()},
            {"word_len", c.word_length},
            {"probe", c.probe_length},
            {"valid", c.valid()},
            {"homomorphism_ok", c.homomorphism_ok},
            {"injective_ok", c.injective_ok},
            {"surjective_at_scale_ok", c.surjective_at_scale_ok},
            {"mapping", std::move(mapping)}};
  }

}  // namespace colmon::report
