// colmon - collision-table monoids and their subshifts

#include "colmon/structure.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace colmon {

  namespace {

    // Collision of a fixed minus word with a right word, one letter at a
    // time. Configuration ids: 0 zero, 1 used up with nothing left over,
    // 2 used up with right letters left over, and 3 + (d - 1) * |L| + top
    // while the first d letters of the minus word remain, the last of them
    // replaced by top.
    class MinusCollision {
     public:
      using Config = std::size_t;

      static constexpr Config zero     = 0;
      static constexpr Config done     = 1;
      static constexpr Config overflow = 2;

      MinusCollision(Presentation const& p, Word minus)
          : _p(&p), _minus(std::move(minus)) {}

      Config initial() const noexcept {
        return _minus.empty() ? done : live(_minus.size(), _minus.back());
      }

      std::size_t num_configs() const noexcept {
        return 3 + _minus.size() * _p->left_size();
      }

      Config step(Config c, Letter x) const noexcept {
        if (c == zero || c == overflow) {
          return c;
        }
        if (c == done) {
          return overflow;
        }
        std::size_t d   = (c - 3) / _p->left_size() + 1;
        Letter      top = static_cast<Letter>((c - 3) % _p->left_size());
        while (true) {
          Outcome const o = _p->collide(top, x);
          if (o.is_zero()) {
            return zero;
          }
          if (o.is_gen() && _p->is_left(o.letter())) {
            return live(d, o.letter());
          }
          // The top letter is used up.
          --d;
          if (d == 0) {
            return o.is_one() ? done : overflow;
          }
          top = _minus[d - 1];
          if (o.is_one()) {
            return live(d, top);
          }
          x = o.letter();
        }
      }

     private:
      Config live(std::size_t d, Letter top) const noexcept {
        return 3 + (d - 1) * _p->left_size() + top;
      }

      Presentation const* _p;
      Word                _minus;
    };

    // Breadth-first search from `start` over right letters in declaration
    // order; returns the first (hence shortest and declaration-least) word
    // reaching a configuration satisfying `target`, exploring at most
    // `max_depth` letters.
    template <typename Step, typename Target>
    std::optional<Word> shortest_right_word(Presentation const& p,
                                            std::size_t         num_configs,
                                            std::size_t         start,
                                            Step&&              step,
                                            Target&&            target,
                                            std::size_t         max_depth) {
      if (target(start)) {
        return Word{};
      }
      struct Visit {
        std::size_t parent;
        Letter      via;
        std::size_t depth;
        bool        seen = false;
      };
      std::vector<Visit>      visit(num_configs);
      std::deque<std::size_t> queue{start};
      visit[start] = {start, 0, 0, true};
      while (!queue.empty()) {
        std::size_t const c = queue.front();
        queue.pop_front();
        if (visit[c].depth == max_depth) {
          continue;
        }
        for (std::size_t i = 0; i < p.right_size(); ++i) {
          Letter const      x    = p.right_letter(i);
          std::size_t const next = step(c, x);
          if (visit[next].seen) {
            continue;
          }
          visit[next] = {c, x, visit[c].depth + 1, true};
          if (target(next)) {
            Word        w;
            std::size_t k = next;
            while (k != start) {
              w.push_back(visit[k].via);
              k = visit[k].parent;
            }
            std::reverse(w.begin(), w.end());
            return w;
          }
          queue.push_back(next);
        }
      }
      return std::nullopt;
    }

    WitnessReport make_report(std::optional<Word> w, std::size_t bound) {
      WitnessReport r;
      r.bound_claimed = bound;
      if (w) {
        r.exists       = true;
        r.length       = w->size();
        r.within_bound = w->size() <= bound;
        r.witness      = std::move(w);
      }
      return r;
    }

    // Maps a witness found on the mirror presentation back: the mirror's
    // steps were letters applied on the left one after another, so the word
    // as written is their reverse.
    WitnessReport from_mirror(Presentation const& mirror, WitnessReport r) {
      if (r.witness) {
        r.witness = mirror.mirror_word(*r.witness);
      }
      return r;
    }

    NormalForm mirror_nf(Presentation const& p, NormalForm const& e) {
      if (e.is_zero()) {
        return e;
      }
      return NormalForm::pair(p.mirror_word(e.minus()),
                              p.mirror_word(e.plus()));
    }

    // Shortest right word putting exactly one of two minus words into zero.
    std::optional<Word> separate(Presentation const& p,
                                 Word const&         u,
                                 Word const&         v,
                                 std::size_t         max_depth) {
      MinusCollision const a(p, u), b(p, v);
      std::size_t const    nb = b.num_configs();
      return shortest_right_word(
          p,
          a.num_configs() * nb,
          a.initial() * nb + b.initial(),
          [&](std::size_t c, Letter x) {
            return a.step(c / nb, x) * nb + b.step(c % nb, x);
          },
          [&](std::size_t c) {
            return (c / nb == MinusCollision::zero)
                   != (c % nb == MinusCollision::zero);
          },
          max_depth);
    }

    std::vector<Word> left_words_up_to(Presentation const& p,
                                       std::size_t         max_len) {
      std::vector<Word> out{Word{}};
      std::size_t       begin = 0;
      for (std::size_t len = 1; len <= max_len; ++len) {
        std::size_t const end = out.size();
        for (std::size_t i = begin; i < end; ++i) {
          for (Letter l = 0; l < p.left_size(); ++l) {
            Word w = out[i];
            w.push_back(l);
            out.push_back(std::move(w));
          }
        }
        begin = end;
      }
      return out;
    }

    std::string symbols(Presentation const& p, Word const& w) {
      return w.empty() ? std::string("ε") : format_word(p, w);
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // CollisionAutomaton
  ////////////////////////////////////////////////////////////////////////

  CollisionAutomaton::CollisionAutomaton(Presentation const& p, Side side)
      : _side(side) {
    for (Letter x = 0; x < p.alphabet_size(); ++x) {
      (p.side(x) == side ? _generators : _inputs).push_back(x);
    }
    std::size_t const I = _inputs.size();
    _delta.assign(num_states() * I, overflow);
    for (std::size_t i = 0; i < I; ++i) {
      _delta[zero * I + i] = zero;
      _delta[one * I + i]  = overflow;
    }
    for (std::size_t g = 0; g < _generators.size(); ++g) {
      for (std::size_t i = 0; i < I; ++i) {
        Outcome const o = side == Side::left
                              ? p.collide(_generators[g], _inputs[i])
                              : p.collide(_inputs[i], _generators[g]);
        State s = overflow;
        if (o.is_zero()) {
          s = zero;
        } else if (o.is_one()) {
          s = one;
        } else if (p.side(o.letter()) == side) {
          s = state_of(o.letter());
        }
        _delta[(3 + g) * I + i] = s;
      }
    }
  }

  CollisionAutomaton::State CollisionAutomaton::state_of(Letter g) const {
    auto it = std::find(_generators.begin(), _generators.end(), g);
    if (it == _generators.end()) {
      throw std::invalid_argument("letter is not a generator on this side");
    }
    return 3 + static_cast<State>(it - _generators.begin());
  }

  std::optional<Letter> CollisionAutomaton::generator(State s) const {
    if (s < 3 || s >= num_states()) {
      return std::nullopt;
    }
    return _generators[s - 3];
  }

  std::string CollisionAutomaton::to_dot(Presentation const& p,
                                         std::string const&  name) const {
    std::ostringstream os;
    os << "digraph \"" << name << "\" {\n";
    os << "  rankdir=LR;\n";
    os << "  s0 [label=\"0\", shape=box];\n";
    os << "  s1 [label=\"1\", shape=doublecircle];\n";
    os << "  s2 [label=\"" << (_side == Side::left ? "+" : "-")
       << "\", shape=box];\n";
    for (std::size_t g = 0; g < _generators.size(); ++g) {
      os << "  s" << (3 + g) << " [label=\"" << p.symbol(_generators[g])
         << "\"];\n";
    }
    for (State s = 0; s < num_states(); ++s) {
      // Group parallel edges under one label.
      std::vector<std::pair<State, std::string>> edges;
      for (std::size_t i = 0; i < _inputs.size(); ++i) {
        State const t  = step(s, i);
        auto        it = std::find_if(edges.begin(), edges.end(), [&](auto& e) {
          return e.first == t;
        });
        if (it == edges.end()) {
          edges.emplace_back(t, p.symbol(_inputs[i]));
        } else {
          it->second += "," + p.symbol(_inputs[i]);
        }
      }
      for (auto const& [t, label] : edges) {
        os << "  s" << s << " -> s" << t << " [label=\"" << label << "\"];\n";
      }
    }
    os << "}\n";
    return os.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Annihilation and inverses
  ////////////////////////////////////////////////////////////////////////

  WitnessReport right_annihilable(Presentation const& p, NormalForm const& e) {
    if (e.is_zero()) {
      throw std::domain_error("right_annihilable: zero has no context");
    }
    std::size_t const bound = p.right_size();
    if (e.minus().empty()) {
      return make_report(std::nullopt, bound);
    }
    MinusCollision const mc(p, e.minus());
    auto                 w = shortest_right_word(
        p,
        mc.num_configs(),
        mc.initial(),
        [&](std::size_t c, Letter x) { return mc.step(c, x); },
        [](std::size_t c) { return c == MinusCollision::zero; },
        mc.num_configs());
    return make_report(std::move(w), bound);
  }

  WitnessReport left_annihilable(Presentation const& p, NormalForm const& e) {
    if (e.is_zero()) {
      throw std::domain_error("left_annihilable: zero has no context");
    }
    Presentation const mirror = p.mirrored();
    return from_mirror(mirror, right_annihilable(mirror, mirror_nf(p, e)));
  }

  bool in_M_plus(Presentation const& p, NormalForm const& e) {
    return !right_annihilable(p, e).exists;
  }

  bool in_M_minus(Presentation const& p, NormalForm const& e) {
    return !left_annihilable(p, e).exists;
  }

  WitnessReport right_inverse(Presentation const& p, NormalForm const& e) {
    if (e.is_zero() || !e.plus().empty()) {
      throw std::invalid_argument(
          "right_inverse: expected a nonzero element with empty plus part");
    }
    MinusCollision const mc(p, e.minus());
    auto                 w = shortest_right_word(
        p,
        mc.num_configs(),
        mc.initial(),
        [&](std::size_t c, Letter x) { return mc.step(c, x); },
        [](std::size_t c) { return c == MinusCollision::done; },
        mc.num_configs());
    return make_report(std::move(w), p.right_size());
  }

  WitnessReport left_inverse(Presentation const& p, NormalForm const& e) {
    if (e.is_zero() || !e.minus().empty()) {
      throw std::invalid_argument(
          "left_inverse: expected a nonzero element with empty minus part");
    }
    Presentation const mirror = p.mirrored();
    return from_mirror(mirror, right_inverse(mirror, mirror_nf(p, e)));
  }

  UnitIntersectionReport unit_intersection_trivial(Presentation const& p) {
    UnitIntersectionReport r;
    for (Letter x = 0; x < p.alphabet_size(); ++x) {
      NormalForm const e = p.is_left(x) ? NormalForm::pair({}, {x})
                                        : NormalForm::pair({x}, {});
      if (p.is_left(x) && !right_annihilable(p, e).exists) {
        r.violations.push_back(p.symbol(x)
                               + " is not right annihilable, so it lies in "
                                 "both M+ and M-");
      } else if (p.is_right(x) && !left_annihilable(p, e).exists) {
        r.violations.push_back(p.symbol(x)
                               + " is not left annihilable, so it lies in "
                                 "both M+ and M-");
      }
    }
    r.trivial = r.violations.empty();
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Context separation
  ////////////////////////////////////////////////////////////////////////

  WitnessReport context_distinguishable(Presentation const& p,
                                        Letter              g,
                                        Letter              h) {
    check_word(p, Word{g, h});
    if (p.side(g) != p.side(h)) {
      throw std::invalid_argument(
          "context_distinguishable: generators on different sides");
    }
    std::size_t const        bound = 2 * p.left_size() * p.right_size();
    CollisionAutomaton const a(p, p.side(g));
    std::size_t const        n = a.num_states();
    std::size_t const        I = a.num_inputs();

    // Breadth-first search on the product automaton.
    struct Visit {
      std::size_t parent;
      std::size_t via;
      bool        seen = false;
    };
    std::vector<Visit>      visit(n * n);
    std::size_t const       start = a.state_of(g) * n + a.state_of(h);
    std::deque<std::size_t> queue{start};
    visit[start].seen = true;
    std::optional<Word> found;
    while (!queue.empty() && !found) {
      std::size_t const c = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < I; ++i) {
        std::size_t const s = a.step(c / n, i), t = a.step(c % n, i);
        std::size_t const next = s * n + t;
        if (visit[next].seen) {
          continue;
        }
        visit[next] = {c, i, true};
        if ((s == CollisionAutomaton::zero)
            != (t == CollisionAutomaton::zero)) {
          Word        steps;
          std::size_t k = next;
          while (k != start) {
            steps.push_back(a.input(visit[k].via));
            k = visit[k].parent;
          }
          std::reverse(steps.begin(), steps.end());
          if (p.is_right(g)) {
            // Left letters act on the left one after another.
            std::reverse(steps.begin(), steps.end());
          }
          found = std::move(steps);
          break;
        }
        queue.push_back(next);
      }
    }
    return make_report(std::move(found), bound);
  }

  InjectivityReport minus_map_injectivity(Presentation const& p,
                                          std::size_t         max_len) {
    if (max_len == 0) {
      throw std::invalid_argument("injectivity check needs max_len >= 1");
    }
    InjectivityReport r;
    r.max_len     = max_len;
    r.probe_bound = 2 * p.left_size() * p.right_size();
    auto const words = left_words_up_to(p, max_len);
    r.words          = words.size();
    for (std::size_t i = 0; i < words.size(); ++i) {
      for (std::size_t j = i + 1; j < words.size(); ++j) {
        ++r.pairs;
        auto w = separate(p, words[i], words[j], r.probe_bound);
        if (!w) {
          r.indistinguishable.emplace_back(words[i], words[j]);
        } else {
          r.max_separation = std::max(r.max_separation, w->size());
        }
      }
    }
    return r;
  }

  InjectivityReport plus_map_injectivity(Presentation const& p,
                                         std::size_t         max_len) {
    Presentation const mirror = p.mirrored();
    InjectivityReport  r      = minus_map_injectivity(mirror, max_len);
    for (auto& [u, v] : r.indistinguishable) {
      u = mirror.mirror_word(u);
      v = mirror.mirror_word(v);
    }
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Aggregate report
  ////////////////////////////////////////////////////////////////////////

  HypothesisReport check_theorem_hypotheses(Presentation const& p,
                                            std::size_t         max_len) {
    HypothesisReport r;
    auto&            v = r.violations;

    // Every reduced word has shape R* L*; sampled as a sanity check of the
    // rewriting engine.
    {
      std::mt19937_64                            rng(0x5eed);
      std::uniform_int_distribution<std::size_t> len(0, 24);
      std::uniform_int_distribution<Letter>      letter(
          0, static_cast<Letter>(p.alphabet_size() - 1));
      r.factorization_ok = true;
      for (int k = 0; k < 256; ++k) {
        Word w(len(rng));
        for (auto& x : w) {
          x = letter(rng);
        }
        NormalForm const e = reduce(p, w);
        if (e.is_zero()) {
          continue;
        }
        bool const shape
            = std::all_of(e.plus().begin(),
                          e.plus().end(),
                          [&](Letter x) { return p.is_right(x); })
              && std::all_of(e.minus().begin(), e.minus().end(), [&](Letter x) {
                   return p.is_left(x);
                 });
        if (!shape || reduce(p, canonical_word(e)) != e) {
          r.factorization_ok = false;
          v.push_back("reduced form of " + symbols(p, w)
                      + " is not an R*L* normal form");
          break;
        }
      }
    }

    auto const ui          = unit_intersection_trivial(p);
    r.unit_intersection_ok = ui.trivial;
    for (auto const& s : ui.violations) {
      v.push_back("unit intersection: " + s);
    }

    std::size_t const L = p.left_size(), R = p.right_size();
    r.inverse_bound      = {R, 0, L, 0};
    r.annihilation_bound = {R, 0, L, 0};
    r.separation_bound   = {2 * L * R, 0, 2 * L * R, 0};

    r.right_inverses_ok = true;
    r.left_inverses_ok  = true;
    for (Letter x = 0; x < p.alphabet_size(); ++x) {
      if (p.is_left(x)) {
        NormalForm const e   = NormalForm::pair({}, {x});
        auto             inv = right_inverse(p, e);
        auto             ann = right_annihilable(p, e);
        if (!inv.exists) {
          r.right_inverses_ok = false;
          v.push_back(p.symbol(x) + " has no right inverse");
        } else {
          r.inverse_bound.measured
              = std::max(r.inverse_bound.measured, *inv.length);
        }
        if (ann.exists) {
          r.annihilation_bound.measured
              = std::max(r.annihilation_bound.measured, *ann.length);
        }
        r.right_inverses.push_back({x, std::move(inv)});
        r.right_annihilators.push_back({x, std::move(ann)});
      } else {
        NormalForm const e   = NormalForm::pair({x}, {});
        auto             inv = left_inverse(p, e);
        auto             ann = left_annihilable(p, e);
        if (!inv.exists) {
          r.left_inverses_ok = false;
          v.push_back(p.symbol(x) + " has no left inverse");
        } else {
          r.inverse_bound.mirror_measured
              = std::max(r.inverse_bound.mirror_measured, *inv.length);
        }
        if (ann.exists) {
          r.annihilation_bound.mirror_measured
              = std::max(r.annihilation_bound.mirror_measured, *ann.length);
        }
        r.left_inverses.push_back({x, std::move(inv)});
        r.left_annihilators.push_back({x, std::move(ann)});
      }
    }

    for (Letter g = 0; g < p.alphabet_size(); ++g) {
      for (Letter h = g + 1; h < p.alphabet_size(); ++h) {
        if (p.side(g) != p.side(h)) {
          continue;
        }
        auto sep = context_distinguishable(p, g, h);
        if (sep.exists) {
          auto& m = p.is_left(g) ? r.separation_bound.measured
                                 : r.separation_bound.mirror_measured;
          m       = std::max(m, *sep.length);
        }
        r.separations.push_back({g, h, std::move(sep)});
      }
    }

    r.plus_injectivity    = plus_map_injectivity(p, max_len);
    r.minus_injectivity   = minus_map_injectivity(p, max_len);
    r.plus_map_injective  = r.plus_injectivity.injective();
    r.minus_map_injective = r.minus_injectivity.injective();
    for (auto const& [a, b] : r.plus_injectivity.indistinguishable) {
      v.push_back("plus words " + symbols(p, a) + " and " + symbols(p, b)
                  + " have the same left context at scale");
    }
    for (auto const& [a, b] : r.minus_injectivity.indistinguishable) {
      v.push_back("minus words " + symbols(p, a) + " and " + symbols(p, b)
                  + " have the same right context at scale");
    }
    return r;
  }

}  // namespace colmon
