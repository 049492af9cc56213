// colmon - collision-table monoids and their subshifts

#include "colmon/subshift.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "colmon/structure.hpp"

namespace colmon {

  namespace {
    void require_admissible(Presentation const& p,
                            Word const&         w,
                            char const*         who) {
      if (!admissible(p, w)) {
        throw std::domain_error(std::string(who)
                                + ": word is not admissible");
      }
    }

    // Words over the letters [first, first + count) of length <= m, in
    // shortlex order.
    std::vector<Word> words_over(Letter first, std::size_t count, std::size_t m) {
      std::vector<Word> out{Word{}};
      std::size_t       begin = 0;
      for (std::size_t len = 1; len <= m; ++len) {
        std::size_t const end = out.size();
        for (std::size_t i = begin; i < end; ++i) {
          for (std::size_t x = 0; x < count; ++x) {
            Word w = out[i];
            w.push_back(static_cast<Letter>(first + x));
            out.push_back(std::move(w));
          }
        }
        begin = end;
      }
      return out;
    }

    // Membership of single letters in the bounded follower sets, cached per
    // window.
    class FollowerCache {
     public:
      FollowerCache(Presentation const& p, std::size_t M) : _p(&p), _M(M) {}

      bool plus(Word const& window, Letter x) {
        return lookup(_plus, window, x, true);
      }
      bool minus(Word const& window, Letter x) {
        return lookup(_minus, window, x, false);
      }

     private:
      using Cache = std::unordered_map<Word, std::vector<bool>, WordHash>;

      bool lookup(Cache& cache, Word const& window, Letter x, bool plus_side) {
        auto it = cache.find(window);
        if (it == cache.end()) {
          std::vector<bool> ok(_p->alphabet_size(), false);
          auto const        letters = plus_side ? omega_plus(*_p, window, 1, _M)
                                                : omega_minus(*_p, window, 1, _M);
          for (auto const& b : letters) {
            ok[b[0]] = true;
          }
          it = cache.emplace(window, std::move(ok)).first;
        }
        return it->second[x];
      }

      Presentation const* _p;
      std::size_t         _M;
      Cache               _plus;
      Cache               _minus;
    };
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Language
  ////////////////////////////////////////////////////////////////////////

  bool admissible(Presentation const& p, std::span<Letter const> w) {
    return !reduce(p, w).is_zero();
  }

  std::vector<std::uint64_t> language_counts(Presentation const& p,
                                             std::size_t         max_n) {
    // Dynamic programming over reachable normal forms. Letters appended
    // later only ever meet the minus part, so normal forms with the same
    // minus part are merged.
    std::vector<std::uint64_t>                    counts{1};
    std::unordered_map<Word, std::uint64_t, WordHash> layer{{Word{}, 1}};
    for (std::size_t n = 1; n <= max_n; ++n) {
      std::unordered_map<Word, std::uint64_t, WordHash> next;
      std::uint64_t                                     total = 0;
      for (auto const& [minus, c] : layer) {
        for (Letter x = 0; x < p.alphabet_size(); ++x) {
          Scanner s(p, NormalForm::pair({}, minus));
          s.push(x);
          if (s.is_zero()) {
            continue;
          }
          auto m = s.minus();
          auto& slot = next[Word(m.begin(), m.end())];
          if (__builtin_add_overflow(slot, c, &slot)
              || __builtin_add_overflow(total, c, &total)) {
            throw std::overflow_error("language count exceeds 64 bits");
          }
        }
      }
      counts.push_back(total);
      layer = std::move(next);
    }
    return counts;
  }

  std::uint64_t language_count(Presentation const& p, std::size_t n) {
    return language_counts(p, n).back();
  }

  namespace {
    void enumerate_rec(Presentation const&                     p,
                       Scanner const&                          s,
                       Word&                                   w,
                       std::size_t                             n,
                       std::function<void(Word const&)> const& f) {
      if (w.size() == n) {
        f(w);
        return;
      }
      for (Letter x = 0; x < p.alphabet_size(); ++x) {
        Scanner t = s;
        t.push(x);
        if (t.is_zero()) {
          continue;
        }
        w.push_back(x);
        enumerate_rec(p, t, w, n, f);
        w.pop_back();
      }
    }
  }  // namespace

  void language_enumerate(Presentation const&                     p,
                          std::size_t                             n,
                          std::function<void(Word const&)> const& f) {
    Word w;
    enumerate_rec(p, Scanner(p), w, n, f);
  }

  std::vector<Word> language_enumerate(Presentation const& p, std::size_t n) {
    std::vector<Word> out;
    language_enumerate(p, n, [&](Word const& w) { out.push_back(w); });
    return out;
  }

  std::vector<Word> language_ball(Presentation const& p, std::size_t n) {
    std::vector<Word> out;
    for (std::size_t k = 0; k <= n; ++k) {
      language_enumerate(p, k, [&](Word const& w) { out.push_back(w); });
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Contexts
  ////////////////////////////////////////////////////////////////////////

  NormalForm context_signature(Presentation const& p, Word const& w) {
    NormalForm e = reduce(p, w);
    if (e.is_zero()) {
      throw std::domain_error("context_signature: word is not admissible");
    }
    return e;
  }

  std::vector<Word> words_up_to(std::size_t alphabet_size, std::size_t m) {
    return words_over(0, alphabet_size, m);
  }

  FiniteContextTable::FiniteContextTable(Presentation const& p, std::size_t m)
      : _p(&p),
        _m(m),
        _probes(words_up_to(p.alphabet_size(), m)),
        _row_words((_probes.size() + 63) / 64),
        _rows() {}

  FiniteContextTable::Bits const&
  FiniteContextTable::row(std::span<Letter const> minus) {
    Word key(minus.begin(), minus.end());
    auto it = _rows.find(key);
    if (it != _rows.end()) {
      return it->second;
    }
    Bits              r(_row_words, 0);
    NormalForm const  start = NormalForm::pair({}, key);
    for (std::size_t v = 0; v < _probes.size(); ++v) {
      Scanner s(*_p, start);
      s.push(_probes[v]);
      if (!s.is_zero()) {
        r[v / 64] |= std::uint64_t(1) << (v % 64);
      }
    }
    return _rows.emplace(std::move(key), std::move(r)).first->second;
  }

  FiniteContextTable::Bits FiniteContextTable::bits(Word const& w) {
    check_word(*_p, w);
    Bits out(_probes.size() * _row_words, 0);
    bool any = false;
    for (std::size_t u = 0; u < _probes.size(); ++u) {
      Scanner s(*_p);
      s.push(_probes[u]);
      s.push(w);
      if (s.is_zero()) {
        continue;
      }
      any        = true;
      auto const& r = row(s.minus());
      std::copy(r.begin(), r.end(), out.begin() + u * _row_words);
    }
    // The probe (empty, empty) is admissible iff w is.
    if (!any || !contains(out, 0, 0)) {
      throw std::domain_error("finite_context: word is not admissible");
    }
    return out;
  }

  std::vector<std::pair<Word, Word>> finite_context(Presentation const& p,
                                                    Word const&         w,
                                                    std::size_t         m) {
    FiniteContextTable t(p, m);
    auto const         bits = t.bits(w);
    std::vector<std::pair<Word, Word>> out;
    for (std::size_t u = 0; u < t.probes().size(); ++u) {
      for (std::size_t v = 0; v < t.probes().size(); ++v) {
        if (t.contains(bits, u, v)) {
          out.emplace_back(t.probes()[u], t.probes()[v]);
        }
      }
    }
    return out;
  }

  std::vector<std::size_t> context_classes(Presentation const&      p,
                                           std::vector<Word> const& words,
                                           std::size_t              m) {
    // One probed word per signature.
    std::map<NormalForm, std::size_t> by_signature;
    std::vector<std::size_t>          sig_of(words.size());
    std::vector<Word const*>          reps;
    for (std::size_t i = 0; i < words.size(); ++i) {
      auto [it, fresh]
          = by_signature.emplace(context_signature(p, words[i]), reps.size());
      if (fresh) {
        reps.push_back(&words[i]);
      }
      sig_of[i] = it->second;
    }

    // A class holding a single signature is final.
    std::vector<std::size_t> cls(reps.size(), 0);
    std::vector<std::size_t> size{reps.size()};
    for (std::size_t k = 0; k <= m; ++k) {
      if (std::ranges::all_of(size, [](std::size_t c) { return c <= 1; })) {
        break;
      }
      auto const lefts  = words_over(0, p.left_size(), k);
      auto const rights = words_over(
          static_cast<Letter>(p.left_size()), p.right_size(), k);
      std::map<std::pair<std::size_t, std::vector<bool>>, std::size_t> split;
      std::vector<std::size_t> next(reps.size());
      for (std::size_t i = 0; i < reps.size(); ++i) {
        // Only probes of length exactly k on at least one side are new.
        std::vector<bool> bits;
        if (size[cls[i]] > 1) {
          for (auto const& u : lefts) {
            Scanner s(p);
            s.push(u);
            s.push(*reps[i]);
            for (auto const& v : rights) {
              if (u.size() != k && v.size() != k) {
                continue;
              }
              Scanner t = s;
              t.push(v);
              bits.push_back(!t.is_zero());
            }
          }
        }
        auto key = std::make_pair(cls[i], std::move(bits));
        auto it  = split.find(key);
        if (it == split.end()) {
          it = split.emplace(std::move(key), split.size()).first;
        }
        next[i] = it->second;
      }
      cls = std::move(next);
      size.assign(split.size(), 0);
      for (auto c : cls) {
        ++size[c];
      }
    }

    // Renumber by first occurrence.
    std::vector<std::size_t>                     out(words.size());
    std::unordered_map<std::size_t, std::size_t> renumber;
    for (std::size_t i = 0; i < words.size(); ++i) {
      auto it = renumber.emplace(cls[sig_of[i]], renumber.size()).first;
      out[i]  = it->second;
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Followers and windows
  ////////////////////////////////////////////////////////////////////////

  std::vector<Word> omega_plus(Presentation const& p,
                               Word const&         a,
                               std::size_t         N,
                               std::size_t         M) {
    require_admissible(p, a, "omega_plus");
    std::vector<Word> candidates;
    for_each_word(p.alphabet_size(), N, [&](Word const& b) {
      Scanner s(p);
      s.push(a);
      s.push(b);
      if (!s.is_zero()) {
        candidates.push_back(b);
      }
    });
    for (auto const& u : words_over(0, p.left_size(), M)) {
      if (candidates.empty()) {
        break;
      }
      Scanner s(p);
      s.push(u);
      s.push(a);
      if (s.is_zero()) {
        continue;
      }
      std::erase_if(candidates, [&](Word const& b) {
        Scanner t = s;
        t.push(b);
        return t.is_zero();
      });
    }
    return candidates;
  }

  std::vector<Word> omega_minus(Presentation const& p,
                                Word const&         a,
                                std::size_t         N,
                                std::size_t         M) {
    require_admissible(p, a, "omega_minus");
    std::vector<Word> candidates;
    for_each_word(p.alphabet_size(), N, [&](Word const& b) {
      Scanner s(p);
      s.push(b);
      s.push(a);
      if (!s.is_zero()) {
        candidates.push_back(b);
      }
    });
    auto const rights
        = words_over(static_cast<Letter>(p.left_size()), p.right_size(), M);
    for (auto const& v : rights) {
      if (candidates.empty()) {
        break;
      }
      if (!admissible(p, [&] {
            Word av = a;
            av.insert(av.end(), v.begin(), v.end());
            return av;
          }())) {
        continue;
      }
      std::erase_if(candidates, [&](Word const& b) {
        Scanner t(p);
        t.push(b);
        t.push(a);
        t.push(v);
        return t.is_zero();
      });
    }
    return candidates;
  }

  WindowReport xn_window_check(Presentation const& p,
                               Word const&         w,
                               std::size_t         n,
                               std::size_t         M) {
    if (w.size() <= 2 * n) {
      throw std::invalid_argument("xn_window_check: word length must exceed "
                                  "twice the window size");
    }
    require_admissible(p, w, "xn_window_check");
    FollowerCache cache(p, M);
    WindowReport  r{w, n, M, std::vector<bool>(w.size(), false), true};
    for (std::size_t i = 0; i < w.size(); ++i) {
      Word const past(w.begin() + (i > n ? i - n : 0), w.begin() + i);
      Word const future(w.begin() + i + 1,
                        w.begin() + std::min(w.size(), i + 1 + n));
      bool const ok = cache.plus(past, w[i]) && cache.minus(future, w[i]);
      r.positions_ok[i] = ok;
      r.ok              = r.ok && ok;
    }
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Periodic and bi-asymptotic points
  ////////////////////////////////////////////////////////////////////////

  CyclicWord::CyclicWord(Presentation const& p, Word letters)
      : _letters(std::move(letters)), _domain(fingerprint(p)) {
    if (_letters.empty()) {
      throw std::invalid_argument("a cyclic word must be nonempty");
    }
    check_word(p, _letters);
  }

  bool operator==(CyclicWord const& a, CyclicWord const& b) {
    if (a._domain != b._domain || a._letters.size() != b._letters.size()) {
      return false;
    }
    Word doubled = a._letters;
    doubled.insert(doubled.end(), a._letters.begin(), a._letters.end());
    return std::search(doubled.begin(),
                       doubled.end(),
                       b._letters.begin(),
                       b._letters.end())
           != doubled.end();
  }

  CyclicWord periodic_point_from_unit(Presentation const& p) {
    return CyclicWord(p, unit_factorization(p));
  }

  YPointDescription embed_in_Y(Presentation const& p, Word const& w) {
    require_admissible(p, w, "embed_in_Y");
    CyclicWord const unit = periodic_point_from_unit(p);
    return {unit, w, unit};
  }

  bool is_canonical(Presentation const& p, YPointDescription const& y) {
    std::size_t const domain = fingerprint(p);
    if (y.left_cycle.domain() != domain || y.right_cycle.domain() != domain) {
      return false;
    }
    Word const unit = unit_factorization(p);
    return y.left_cycle.letters() == unit && y.right_cycle.letters() == unit;
  }

  Word materialize(YPointDescription const& y, std::size_t width) {
    auto const& lc = y.left_cycle.letters();
    auto const& rc = y.right_cycle.letters();
    Word        out;
    for (std::size_t k = 0; k < width / lc.size() + 2; ++k) {
      out.insert(out.end(), lc.begin(), lc.end());
    }
    out.insert(out.end(), y.core.begin(), y.core.end());
    for (std::size_t k = 0; k < width / rc.size() + 2; ++k) {
      out.insert(out.end(), rc.begin(), rc.end());
    }
    return out;
  }

  std::optional<Word> first_bad_window(Presentation const&      p,
                                       YPointDescription const& y,
                                       std::size_t              width) {
    Word const w = materialize(y, width);
    for (std::size_t start = 0; start < w.size(); ++start) {
      Scanner           s(p);
      std::size_t const end = std::min(w.size(), start + width);
      for (std::size_t i = start; i < end; ++i) {
        s.push(w[i]);
        if (s.is_zero()) {
          return Word(w.begin() + start, w.begin() + i + 1);
        }
      }
    }
    return std::nullopt;
  }

  Word join_words(Presentation const& p, Word const& u, Word const& v) {
    NormalForm const ru = reduce(p, u);
    NormalForm const rv = reduce(p, v);
    if (ru.is_zero() || rv.is_zero()) {
      throw std::domain_error("join_words: word is not admissible");
    }
    Word w;
    if (!ru.minus().empty()) {
      auto inv = right_inverse(p, NormalForm::pair({}, ru.minus()));
      if (!inv.exists) {
        throw std::runtime_error("join_words: the minus part "
                                 + format_word(p, ru.minus())
                                 + " has no right inverse");
      }
      w = *inv.witness;
    }
    if (!rv.plus().empty()) {
      auto inv = left_inverse(p, NormalForm::pair(rv.plus(), {}));
      if (!inv.exists) {
        throw std::runtime_error("join_words: the plus part "
                                 + format_word(p, rv.plus())
                                 + " has no left inverse");
      }
      w.insert(w.end(), inv.witness->begin(), inv.witness->end());
    }
    return w;
  }

  YPointDescription connect_periodic(Presentation const& pres,
                                     CyclicWord const&   p,
                                     CyclicWord const&   q,
                                     std::size_t         width) {
    std::size_t const domain = fingerprint(pres);
    if (p.domain() != domain || q.domain() != domain) {
      throw std::invalid_argument(
          "connect_periodic: cycles belong to another presentation");
    }
    for (auto const* c : {&p, &q}) {
      if (first_bad_window(pres, {*c, {}, *c}, width)) {
        throw std::runtime_error("connect_periodic: cycle "
                                 + format_word(pres, c->letters())
                                 + " is not an admissible periodic point");
      }
    }
    YPointDescription y{p, join_words(pres, p.letters(), q.letters()), q};
    if (auto bad = first_bad_window(pres, y, width)) {
      throw std::runtime_error("connect_periodic: window "
                               + format_word(pres, *bad)
                               + " of the connecting point is not "
                                 "admissible");
    }
    return y;
  }

  ////////////////////////////////////////////////////////////////////////
  // Property (a, n, H)
  ////////////////////////////////////////////////////////////////////////

  void PropertyACheckParams::validate() const {
    if (n == 0 || H == 0 || L_max == 0 || m == 0) {
      throw std::invalid_argument("property (a,n,H) parameters must be "
                                  "positive");
    }
    if (L_max < 3 * H + 2) {
      throw std::invalid_argument("property (a,n,H) needs L_max >= 3H + 2");
    }
  }

  namespace {
    struct PropertyASearch {
      Presentation const&         p;
      PropertyACheckParams const& params;
      std::size_t                 min_len;
      FollowerCache               followers;
      // (first H letters, last H letters) -> signature -> first word seen.
      std::map<std::pair<Word, Word>, std::map<NormalForm, Word>> groups;
      std::size_t                                                 words = 0;

      // Positions j < |w| - n were checked against full future windows on
      // the way down; the last n positions have truncated windows.
      bool tail_ok(Word const& w) {
        std::size_t const n = params.n;
        for (std::size_t j = w.size() > n ? w.size() - n : 0; j < w.size();
             ++j) {
          Word const future(w.begin() + j + 1, w.end());
          if (!followers.minus(future, w[j])) {
            return false;
          }
        }
        return true;
      }

      void run(Scanner const& s, Word& w) {
        std::size_t const n = params.n;
        if (w.size() >= min_len && tail_ok(w)) {
          ++words;
          Word const head(w.begin(), w.begin() + params.H);
          Word const tail(w.end() - params.H, w.end());
          groups[{head, tail}].emplace(s.normal_form(), w);
        }
        if (w.size() == params.L_max) {
          return;
        }
        std::size_t const len = w.size();
        Word const        past(w.begin() + (len > n ? len - n : 0), w.end());
        for (Letter x = 0; x < p.alphabet_size(); ++x) {
          Scanner t = s;
          t.push(x);
          if (t.is_zero() || !followers.plus(past, x)) {
            continue;
          }
          w.push_back(x);
          // Position len - n now has its full future window.
          bool ok = true;
          if (len >= n) {
            std::size_t const j = len - n;
            Word const        future(w.begin() + j + 1, w.end());
            ok = followers.minus(future, w[j]);
          }
          if (ok) {
            run(t, w);
          }
          w.pop_back();
        }
      }
    };
  }  // namespace

  PropertyAReport property_a_check(Presentation const&         p,
                                   PropertyACheckParams const& params) {
    params.validate();
    PropertyASearch search{p,
                           params,
                           std::max(3 * params.H + 2, 2 * params.n + 1),
                           FollowerCache(p, params.m),
                           {},
                           0};
    Word w;
    search.run(Scanner(p), w);

    PropertyAReport r;
    r.params = params;
    r.words  = search.words;
    r.groups = search.groups.size();
    for (auto const& [key, by_signature] : search.groups) {
      if (by_signature.size() < 2) {
        continue;
      }
      ++r.groups_compared;
      std::vector<Word> reps;
      for (auto const& [nf, word] : by_signature) {
        reps.push_back(word);
      }
      std::sort(reps.begin(), reps.end());
      auto const cls = context_classes(p, reps, params.m);
      // One representative per context class.
      std::map<std::size_t, Word const*> first;
      for (std::size_t i = 0; i < reps.size(); ++i) {
        first.emplace(cls[i], &reps[i]);
      }
      for (auto i = first.begin(); i != first.end(); ++i) {
        for (auto j = std::next(i); j != first.end(); ++j) {
          r.violations.emplace_back(*i->second, *j->second);
        }
      }
    }
    std::sort(r.violations.begin(), r.violations.end());
    return r;
  }

}  // namespace colmon
