// colmon - collision-table monoids and their subshifts

#include "colmon/reconstruction.hpp"

#include <set>
#include <stdexcept>

namespace colmon {

  namespace {
    void require_canonical(Presentation const&      p,
                           YPointDescription const& y,
                           char const*              who) {
      if (!is_canonical(p, y)) {
        throw std::invalid_argument(
            std::string(who)
            + ": point is not canonical for this presentation (normalize "
              "it with embed_in_Y)");
      }
    }
  }  // namespace

  NormalForm y_class_of(Presentation const& p, YPointDescription const& y) {
    require_canonical(p, y, "y_class_of");
    return reduce(p, y.core);
  }

  SymbolicProduct symbolic_product(Presentation const&      p,
                                   YPointDescription const& y1,
                                   YPointDescription const& y2) {
    require_canonical(p, y1, "symbolic_product");
    require_canonical(p, y2, "symbolic_product");
    SymbolicProduct r{multiply(p, y_class_of(p, y1), y_class_of(p, y2)),
                      std::nullopt};
    if (!r.element.is_zero()) {
      Word core = y1.core;
      auto const& unit = y1.right_cycle.letters();
      core.insert(core.end(), unit.begin(), unit.end());
      core.insert(core.end(), y2.core.begin(), y2.core.end());
      r.defining_point
          = YPointDescription{y1.left_cycle, std::move(core), y2.right_cycle};
    }
    return r;
  }

  std::optional<std::size_t> ContextClassTable::class_of(Word const& w) const {
    auto it = _index.find(w);
    if (it == _index.end()) {
      return std::nullopt;
    }
    return _class_of[it->second];
  }

  ContextClassTable reconstruct_ball(Presentation const& p,
                                     std::size_t         word_len,
                                     std::size_t         m) {
    ContextClassTable t;
    t._word_len = word_len;
    t._m        = m;
    t._domain   = fingerprint(p);
    t._words    = language_ball(p, word_len);
    for (std::size_t i = 0; i < t._words.size(); ++i) {
      t._index.emplace(t._words[i], i);
    }
    t._class_of = context_classes(p, t._words, m);

    // Classes are numbered by first occurrence in shortlex order, so the
    // first member is the shortlex-least word.
    for (std::size_t i = 0; i < t._words.size(); ++i) {
      std::size_t const c = t._class_of[i];
      if (c == t._classes.size()) {
        t._classes.push_back({t._words[i], {}});
      }
      t._classes[c].members.push_back(i);
    }

    auto class_of_concat = [&](Word const& x, Word const& y) -> std::int32_t {
      Word xy = x;
      xy.insert(xy.end(), y.begin(), y.end());
      auto c = t.class_of(xy);
      return c ? static_cast<std::int32_t>(*c) : ContextClassTable::zero;
    };

    std::size_t const k = t._classes.size();
    t._product.assign(k * k, ContextClassTable::undefined);
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        auto const& x = t._classes[a].representative;
        auto const& y = t._classes[b].representative;
        if (x.size() + y.size() <= word_len) {
          t._product[a * k + b] = class_of_concat(x, y);
        }
      }
    }

    // Representatives are no longer than any member, so every entry looked
    // up here is defined. Words are shortlex, so each inner scan stops at
    // the first word that is too long.
    for (std::size_t i = 0; i < t._words.size() && !t._violation; ++i) {
      auto const& x = t._words[i];
      for (std::size_t j = 0; j < t._words.size(); ++j) {
        auto const& y = t._words[j];
        if (x.size() + y.size() > word_len) {
          break;
        }
        std::int32_t const expected = t.product(t._class_of[i], t._class_of[j]);
        std::int32_t const found    = class_of_concat(x, y);
        if (expected != found) {
          t._violation = ContextClassTable::Violation{x, y, expected, found};
          break;
        }
      }
    }
    return t;
  }

  IsoCertificate certify_isomorphism(Presentation const&      p,
                                     ContextClassTable const& t) {
    if (t.domain() != fingerprint(p)) {
      throw std::invalid_argument(
          "certify_isomorphism: table was built over another presentation");
    }
    IsoCertificate c;
    c.word_length  = t.word_length();
    c.probe_length = t.probe_length();
    auto const& classes = t.classes();
    for (auto const& cls : classes) {
      c.mapping.push_back(reduce(p, cls.representative));
    }

    c.homomorphism_ok = t.well_defined();
    for (std::size_t a = 0; a < classes.size() && c.homomorphism_ok; ++a) {
      for (std::size_t b = 0; b < classes.size(); ++b) {
        std::int32_t const ab = t.product(a, b);
        if (ab == ContextClassTable::undefined) {
          continue;
        }
        NormalForm const image
            = ab == ContextClassTable::zero ? NormalForm::zero()
                                            : c.mapping[ab];
        if (image != multiply(p, c.mapping[a], c.mapping[b])) {
          c.homomorphism_ok = false;
          break;
        }
      }
    }

    std::set<NormalForm> images(c.mapping.begin(), c.mapping.end());
    c.injective_ok = images.size() == c.mapping.size();
    for (std::size_t a = 0; a < classes.size() && c.injective_ok; ++a) {
      for (std::size_t i : classes[a].members) {
        if (context_signature(p, t.words()[i]) != c.mapping[a]) {
          c.injective_ok = false;
          break;
        }
      }
    }

    c.surjective_at_scale_ok = true;
    std::size_t const n = t.word_length();
    Word plus;
    for (std::size_t a = 0; a <= n && c.surjective_at_scale_ok; ++a) {
      for_each_word(p.right_size(), a, [&](Word const& r) {
        plus.clear();
        for (Letter x : r) {
          plus.push_back(p.right_letter(x));
        }
        for (std::size_t b = 0; a + b <= n; ++b) {
          for_each_word(p.left_size(), b, [&](Word const& l) {
            if (!images.contains(NormalForm::pair(plus, l))) {
              c.surjective_at_scale_ok = false;
            }
          });
        }
      });
    }
    return c;
  }

}  // namespace colmon
