// colmon - collision-table monoids and their subshifts

#include "colmon/rewrite.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace colmon {

  std::size_t NormalFormHash::operator()(NormalForm const& nf) const noexcept {
    if (nf.is_zero()) {
      return 0x9e3779b97f4a7c15ULL;
    }
    WordHash    h;
    std::size_t seed = h(nf.plus());
    seed ^= h(nf.minus()) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
    return seed;
  }

  std::size_t WordHash::operator()(Word const& w) const noexcept {
    // FNV-1a over the letters.
    std::size_t h = 1469598103934665603ULL;
    for (Letter x : w) {
      h ^= x;
      h *= 1099511628211ULL;
    }
    return h ^ w.size();
  }

  ////////////////////////////////////////////////////////////////////////
  // Scanner
  ////////////////////////////////////////////////////////////////////////

  Scanner::Scanner(Presentation const& p, NormalForm const& nf) : _p(&p) {
    if (nf.is_zero()) {
      _zero = true;
      return;
    }
    _stack = nf.plus();
    _stack.insert(_stack.end(), nf.minus().begin(), nf.minus().end());
    _plus_size = nf.plus().size();
  }

  void Scanner::push(Letter x) {
    if (_zero) {
      return;
    }
    if (_p->is_left(x)) {
      _stack.push_back(x);
      return;
    }
    while (_stack.size() > _plus_size) {
      Outcome const o = _p->collide(_stack.back(), x);
      _stack.pop_back();
      switch (o.kind()) {
        case Outcome::Kind::one:
          return;
        case Outcome::Kind::zero:
          _zero = true;
          _stack.clear();
          _plus_size = 0;
          return;
        case Outcome::Kind::gen:
          if (_p->is_left(o.letter())) {
            _stack.push_back(o.letter());
            return;
          }
          x = o.letter();
          break;
      }
    }
    _stack.push_back(x);
    ++_plus_size;
  }

  NormalForm Scanner::normal_form() const {
    if (_zero) {
      return NormalForm::zero();
    }
    return NormalForm::pair(Word(_stack.begin(), _stack.begin() + _plus_size),
                            Word(_stack.begin() + _plus_size, _stack.end()));
  }

  ////////////////////////////////////////////////////////////////////////
  // Operations
  ////////////////////////////////////////////////////////////////////////

  void check_word(Presentation const& p, std::span<Letter const> w) {
    for (Letter x : w) {
      if (x >= p.alphabet_size()) {
        throw std::invalid_argument("letter " + std::to_string(x)
                                    + " is not a generator of the "
                                      "presentation");
      }
    }
  }

  NormalForm reduce(Presentation const& p, std::span<Letter const> w) {
    check_word(p, w);
    Scanner s(p);
    s.push(w);
    return s.normal_form();
  }

  NormalForm multiply(Presentation const& p,
                      NormalForm const&   a,
                      NormalForm const&   b) {
    if (a.is_zero() || b.is_zero()) {
      return NormalForm::zero();
    }
    // The collision happens between a.minus and b.plus only; b.minus is
    // appended unchanged.
    Scanner s(p, a);
    s.push(b.plus());
    s.push(b.minus());
    return s.normal_form();
  }

  Word canonical_word(NormalForm const& e) {
    if (e.is_zero()) {
      throw std::domain_error("zero has no word representative");
    }
    Word w = e.plus();
    w.insert(w.end(), e.minus().begin(), e.minus().end());
    return w;
  }

  namespace {
    // Left letters whose single-letter collision can leave the minus part,
    // either by reaching the unit or by producing a right letter. A minus
    // word containing any other letter can never be consumed down to the
    // unit.
    std::vector<bool> consumable_left_letters(Presentation const& p) {
      std::size_t const L = p.left_size();
      std::vector<bool> ok(L, false);
      bool              changed = true;
      while (changed) {
        changed = false;
        for (std::size_t l = 0; l < L; ++l) {
          if (ok[l]) {
            continue;
          }
          for (std::size_t r = 0; r < p.right_size(); ++r) {
            Outcome const o
                = p.collide(static_cast<Letter>(l), p.right_letter(r));
            if (o.is_one() || (o.is_gen() && p.is_right(o.letter()))
                || (o.is_gen() && ok[o.letter()])) {
              ok[l]   = true;
              changed = true;
              break;
            }
          }
        }
      }
      return ok;
    }
  }  // namespace

  Word unit_factorization(Presentation const& p) {
    std::size_t const bound = 2 * p.left_size() * p.right_size();
    auto const        live  = consumable_left_letters(p);

    struct Node {
      NormalForm  nf;
      std::size_t parent;
      Letter      via;
      std::size_t depth;
    };
    std::vector<Node>                  nodes{{NormalForm::one(), 0, 0, 0}};
    std::map<NormalForm, std::size_t>  seen{{NormalForm::one(), 0}};

    auto path_to = [&](std::size_t i) {
      Word w;
      while (i != 0) {
        w.push_back(nodes[i].via);
        i = nodes[i].parent;
      }
      std::reverse(w.begin(), w.end());
      return w;
    };

    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (nodes[i].depth == bound) {
        break;
      }
      for (Letter x = 0; x < p.alphabet_size(); ++x) {
        Scanner s(p, nodes[i].nf);
        s.push(x);
        if (s.is_zero() || !s.plus().empty()) {
          // A nonempty plus part never shrinks under right multiplication.
          continue;
        }
        auto const minus = s.minus();
        if (std::any_of(minus.begin(), minus.end(), [&](Letter l) {
              return !live[l];
            })) {
          continue;
        }
        NormalForm nf = s.normal_form();
        if (nf.is_one()) {
          Word w = path_to(i);
          w.push_back(x);
          return w;
        }
        if (seen.emplace(nf, nodes.size()).second) {
          nodes.push_back({std::move(nf), i, x, nodes[i].depth + 1});
        }
      }
    }
    throw std::runtime_error("unit not expressible by a nonempty word of "
                             "length at most "
                             + std::to_string(bound));
  }

  ////////////////////////////////////////////////////////////////////////
  // Text forms
  ////////////////////////////////////////////////////////////////////////

  std::string format_word(Presentation const& p, std::span<Letter const> w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i != 0) {
        out += ' ';
      }
      out += p.symbol(w[i]);
    }
    return out;
  }

  Word parse_word(Presentation const& p, std::string_view text) {
    Word               w;
    std::istringstream is{std::string(text)};
    std::string        tok;
    while (is >> tok) {
      auto x = p.find(tok);
      if (!x) {
        throw std::invalid_argument("'" + tok + "' is not a generator");
      }
      w.push_back(*x);
    }
    return w;
  }

  std::string format_normal_form(Presentation const& p, NormalForm const& e) {
    if (e.is_zero()) {
      return "0";
    }
    return format_word(p, e.plus()) + "|" + format_word(p, e.minus());
  }

  NormalForm parse_normal_form(Presentation const& p, std::string_view text) {
    auto bar = text.find('|');
    if (bar == std::string_view::npos) {
      std::istringstream is{std::string(text)};
      std::string        tok, extra;
      if (is >> tok && tok == "0" && !(is >> extra)) {
        return NormalForm::zero();
      }
      throw std::invalid_argument("normal form must be '0' or contain '|'");
    }
    Word w = parse_word(p, text.substr(0, bar));
    Word m = parse_word(p, text.substr(bar + 1));
    w.insert(w.end(), m.begin(), m.end());
    return reduce(p, w);
  }

  void for_each_word(std::size_t                             alphabet_size,
                     std::size_t                             n,
                     std::function<void(Word const&)> const& f) {
    if (alphabet_size == 0 && n > 0) {
      return;
    }
    Word w(n, 0);
    while (true) {
      f(w);
      std::size_t i = n;
      while (i > 0 && w[i - 1] + 1u == alphabet_size) {
        w[i - 1] = 0;
        --i;
      }
      if (i == 0) {
        return;
      }
      ++w[i - 1];
    }
  }

}  // namespace colmon
