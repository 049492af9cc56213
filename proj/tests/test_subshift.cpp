#include <map>
#include <random>
#include <set>

#include "doctest.h"

#include "colmon/structure.hpp"
#include "colmon/subshift.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace colmon;
using support::word;

namespace {
  std::set<Word> as_set(std::vector<Word> const& ws) {
    return {ws.begin(), ws.end()};
  }

  std::set<std::pair<Word, Word>> context_set(Presentation const& p,
                                              Word const&         w,
                                              std::size_t         m) {
    auto const c = finite_context(p, w, m);
    return {c.begin(), c.end()};
  }

  // Classes of an index vector as a set of sets.
  std::set<std::set<std::size_t>> blocks(std::vector<std::size_t> const& cls) {
    std::map<std::size_t, std::set<std::size_t>> by;
    for (std::size_t i = 0; i < cls.size(); ++i) {
      by[cls[i]].insert(i);
    }
    std::set<std::set<std::size_t>> out;
    for (auto& [c, b] : by) {
      out.insert(std::move(b));
    }
    return out;
  }
}  // namespace

TEST_CASE("admissible") {
  auto const p = catalog::get("polycyclic2");
  CHECK_FALSE(admissible(p, word(p, "λ ρ′")));
  CHECK(admissible(p, Word{}));
  CHECK(admissible(p, word(p, "ρ λ λ′ ρ′")));
  CHECK_THROWS_AS(admissible(p, Word{4}), std::invalid_argument);
}

TEST_CASE("language counts") {
  auto const p = catalog::get("polycyclic2");
  CHECK(language_count(p, 0) == 1);
  CHECK(language_count(p, 1) == 4);
  CHECK(language_count(p, 2) == 14);
  for (auto const& q : support::catalog()) {
    CAPTURE(q.name());
    auto const counts = language_counts(q, 6);
    for (std::size_t n = 0; n <= 6; ++n) {
      CHECK(counts[n] == oracle::count(q, n));
    }
  }
  // No zero in the table: every word is admissible.
  auto const b = support::bicyclic();
  CHECK(language_count(b, 63) == std::uint64_t{1} << 63);
  CHECK_THROWS_AS(language_counts(b, 64), std::overflow_error);
}

TEST_CASE("language enumeration") {
  auto const p  = catalog::get("polycyclic2");
  auto const w2 = language_enumerate(p, 2);
  REQUIRE(w2.size() == 14);
  CHECK(w2.front() == word(p, "λ λ"));
  CHECK(std::is_sorted(w2.begin(), w2.end()));
  for (auto const& q : support::catalog()) {
    for (std::size_t n = 0; n <= 4; ++n) {
      std::set<Word> expected;
      for (auto const& w : oracle::words(oracle::alphabet(q), n, n)) {
        if (oracle::admissible(q, w)) {
          expected.insert(w);
        }
      }
      auto const got = language_enumerate(q, n);
      CHECK(got.size() == expected.size());
      CHECK(as_set(got) == expected);
    }
    auto const ball = language_ball(q, 3);
    CHECK(ball.size()
          == 1 + language_count(q, 1) + language_count(q, 2)
                 + language_count(q, 3));
    for (std::size_t i = 1; i < ball.size(); ++i) {
      CHECK(ball[i - 1].size() <= ball[i].size());
    }
  }
}

TEST_CASE("factorial and extendable") {
  std::mt19937_64 rng(41);
  for (auto const& p : support::catalog()) {
    for (int i = 0; i < 100; ++i) {
      Word const w = support::random_admissible(p, 10, rng);
      for (Letter l = 0; l < p.left_size(); ++l) {
        CHECK(admissible(p, oracle::cat(w, {l})));
      }
      for (std::size_t r = 0; r < p.right_size(); ++r) {
        CHECK(admissible(p, oracle::cat({p.right_letter(r)}, w)));
      }
    }
  }
}

TEST_CASE("context signature") {
  auto const p = catalog::get("polycyclic2");
  CHECK(context_signature(p, word(p, "λ ρ")).is_one());
  CHECK(context_signature(p, word(p, "λ′ ρ′")).is_one());
  CHECK(context_signature(p, word(p, "ρ λ"))
        == NormalForm::pair(word(p, "ρ"), word(p, "λ")));
  CHECK_THROWS_AS(context_signature(p, word(p, "λ ρ′")), std::domain_error);
  for (std::size_t m = 0; m <= 4; ++m) {
    CHECK(context_set(p, word(p, "λ ρ"), m)
          == context_set(p, word(p, "λ′ ρ′"), m));
  }
  auto const a = context_set(p, word(p, "λ"), 1);
  auto const b = context_set(p, word(p, "λ′"), 1);
  CHECK(a != b);
  CHECK(a.contains({Word{}, word(p, "ρ")}));
  CHECK_FALSE(b.contains({Word{}, word(p, "ρ")}));
}

TEST_CASE("finite context agrees with enumeration") {
  auto const p = catalog::get("polycyclic2");
  // 25 probe pairs minus λ·ρ′ and λ′·ρ.
  CHECK(finite_context(p, Word{}, 1).size() == oracle::context(p, {}, 1).size());
  CHECK(finite_context(p, Word{}, 1).size() == 23);
  CHECK_THROWS_AS(finite_context(p, word(p, "λ ρ′"), 1), std::domain_error);

  std::mt19937_64 rng(43);
  for (auto const& q : support::catalog()) {
    std::size_t const m = q.alphabet_size() == 4 ? 3 : 2;
    for (int i = 0; i < 10; ++i) {
      Word const w = support::random_admissible(q, i % 5, rng);
      CHECK(context_set(q, w, m) == oracle::context(q, w, m));
    }
  }

  FiniteContextTable t(p, 2);
  CHECK(t.probe_length() == 2);
  CHECK(t.probes().size() == 21);
  auto const bits = t.bits(word(p, "λ"));
  CHECK(t.contains(bits, 0, 0));
  auto const r1 = std::find(t.probes().begin(), t.probes().end(),
                            word(p, "ρ′"))
                  - t.probes().begin();
  CHECK_FALSE(t.contains(bits, 0, static_cast<std::size_t>(r1)));
  CHECK_THROWS_AS(t.bits(word(p, "λ ρ′")), std::domain_error);
}

TEST_CASE("context classes agree with raw contexts") {
  for (auto const& p : support::catalog()) {
    CAPTURE(p.name());
    std::size_t const n = p.alphabet_size() == 4 ? 4 : 3;
    std::size_t const m = 2;
    auto const        ws = language_ball(p, n);
    FiniteContextTable t(p, m);
    std::map<FiniteContextTable::Bits, std::size_t> seen;
    std::vector<std::size_t>                        raw;
    for (auto const& w : ws) {
      raw.push_back(seen.emplace(t.bits(w), seen.size()).first->second);
    }
    auto const cls = context_classes(p, ws, m);
    CHECK(blocks(cls) == blocks(raw));
    CHECK(cls[0] == 0);
  }
  auto const p = catalog::get("polycyclic2");
  auto const ws = language_ball(p, 3);
  CHECK(blocks(context_classes(p, ws, 0)).size() == 1);
}

TEST_CASE("omega") {
  auto const p = catalog::get("polycyclic2");
  CHECK(as_set(omega_plus(p, word(p, "λ"), 1, 0))
        == std::set<Word>{word(p, "λ"), word(p, "λ′"), word(p, "ρ")});
  for (Word const& a : {Word{}, word(p, "ρ"), word(p, "λ ρ")}) {
    CHECK(omega_plus(p, a, 0, 3) == std::vector<Word>{Word{}});
  }
  CHECK_THROWS_AS(omega_plus(p, word(p, "λ ρ′"), 1, 1), std::domain_error);
  CHECK_THROWS_AS(omega_minus(p, word(p, "λ ρ′"), 1, 1), std::domain_error);

  // Appending ρ′ after ρ dies under the probe λ λ.
  CHECK(as_set(omega_plus(p, word(p, "ρ"), 1, 2))
        == oracle::omega_plus(p, word(p, "ρ"), 1, 2));

  for (auto const& q : support::catalog()) {
    CAPTURE(q.name());
    std::size_t const M = q.alphabet_size() == 4 ? 4 : 3;
    for (std::size_t len = 0; len <= 2; ++len) {
      for (auto const& a : language_enumerate(q, len)) {
        for (std::size_t N = 0; N <= 2; ++N) {
          CHECK(as_set(omega_plus(q, a, N, M))
                == oracle::omega_plus(q, a, N, M));
          CHECK(as_set(omega_minus(q, a, N, M))
                == oracle::omega_minus(q, a, N, M));
        }
      }
    }
  }
}

TEST_CASE("omega shrinks as the probe grows") {
  auto const p = catalog::get("example4");
  for (auto const& a : language_enumerate(p, 2)) {
    auto prev = as_set(omega_plus(p, a, 1, 0));
    for (std::size_t M = 1; M <= 4; ++M) {
      auto const next = as_set(omega_plus(p, a, 1, M));
      CHECK(std::includes(prev.begin(), prev.end(), next.begin(), next.end()));
      prev = next;
    }
  }
}

TEST_CASE("window check") {
  auto const p = catalog::get("polycyclic2");
  auto const r = xn_window_check(p, word(p, "λ ρ λ ρ λ ρ"), 2, 2);
  CHECK(r.ok);
  CHECK(r.positions_ok.size() == 6);

  Word const w = word(p, "λ λ λ ρ");
  auto const s = xn_window_check(p, w, 1, 2);
  for (std::size_t i = 0; i < w.size(); ++i) {
    CAPTURE(i);
    Word const past(w.begin() + (i > 1 ? i - 1 : 0), w.begin() + i);
    Word const future(w.begin() + i + 1, w.begin() + std::min(w.size(), i + 2));
    bool const expected
        = oracle::omega_plus(p, past, 1, 2).contains({w[i]})
          && oracle::omega_minus(p, future, 1, 2).contains({w[i]});
    CHECK(s.positions_ok[i] == expected);
  }
  CHECK(s.ok == oracle::in_window_language(p, w, 1, 2));

  auto const z = xn_window_check(p, word(p, "ρ′ λ"), 0, 0);
  CHECK(z.ok);

  CHECK_THROWS_AS(xn_window_check(p, word(p, "λ ρ λ ρ"), 2, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(xn_window_check(p, word(p, "λ ρ′ λ ρ λ"), 2, 2),
                  std::domain_error);
}

TEST_CASE("window check agrees with enumeration") {
  auto const p = catalog::get("polycyclic2");
  for (std::size_t len = 5; len <= 6; ++len) {
    for (auto const& w : language_enumerate(p, len)) {
      CHECK(xn_window_check(p, w, 2, 3).ok
            == oracle::in_window_language(p, w, 2, 3));
    }
  }
}

TEST_CASE("periodic points") {
  for (auto const& p : support::catalog()) {
    CAPTURE(p.name());
    auto const c = periodic_point_from_unit(p);
    CHECK(c.letters() == word(p, "λ ρ"));
    Word five;
    for (int k = 0; k < 5; ++k) {
      five.insert(five.end(), c.letters().begin(), c.letters().end());
    }
    CHECK(xn_window_check(p, five, 2, 3).ok);
  }
  auto const p = catalog::get("polycyclic2");
  CHECK(CyclicWord(p, word(p, "λ ρ")) == CyclicWord(p, word(p, "ρ λ")));
  CHECK_FALSE(CyclicWord(p, word(p, "λ ρ")) == CyclicWord(p, word(p, "λ′ ρ′")));
  auto const e2 = catalog::get("example2");
  CHECK_FALSE(CyclicWord(p, Word{0, 2}) == CyclicWord(e2, Word{0, 3}));
  CHECK_THROWS_AS(CyclicWord(p, Word{}), std::invalid_argument);
}

TEST_CASE("embedding in Y") {
  auto const p = catalog::get("polycyclic2");
  auto const y = embed_in_Y(p, word(p, "ρ λ"));
  CHECK(is_canonical(p, y));
  CHECK(y.core == word(p, "ρ λ"));
  CHECK_FALSE(first_bad_window(p, y, 12));
  auto const e = embed_in_Y(p, Word{});
  CHECK(e.core.empty());
  CHECK(e.left_cycle == periodic_point_from_unit(p));
  CHECK_THROWS_AS(embed_in_Y(p, word(p, "λ ρ′")), std::domain_error);

  for (auto const& w : language_ball(p, 4)) {
    auto const z     = embed_in_Y(p, w);
    auto const width = 3 * 2 + w.size() + 6;
    auto const m     = materialize(z, width);
    for (std::size_t a = 0; a < m.size(); ++a) {
      for (std::size_t b = a; b <= std::min(m.size(), a + width); ++b) {
        CHECK(oracle::admissible(p, Word(m.begin() + a, m.begin() + b)));
      }
    }
  }

  YPointDescription bad{CyclicWord(p, word(p, "λ ρ′")),
                        {},
                        CyclicWord(p, word(p, "λ ρ"))};
  CHECK_FALSE(is_canonical(p, bad));
  auto const win = first_bad_window(p, bad, 4);
  REQUIRE(win);
  CHECK_FALSE(oracle::admissible(p, *win));
}

TEST_CASE("join words") {
  auto const p = catalog::get("polycyclic2");
  CHECK(join_words(p, word(p, "λ"), word(p, "λ′")) == word(p, "ρ"));
  CHECK(join_words(p, {}, {}).empty());
  Word const w = join_words(p, word(p, "ρ"), word(p, "ρ′"));
  CHECK(oracle::admissible(p, oracle::cat(word(p, "ρ"), w, word(p, "ρ′"))));
  CHECK_THROWS_AS(join_words(p, word(p, "λ ρ′"), {}), std::domain_error);

  std::mt19937_64 rng(47);
  for (auto const& q : support::catalog()) {
    for (int i = 0; i < 200; ++i) {
      Word const u = support::random_admissible(q, i % 9, rng);
      Word const v = support::random_admissible(q, (i * 5) % 9, rng);
      Word const j = join_words(q, u, v);
      auto const r = oracle::reduce(q, oracle::cat(u, j, v));
      REQUIRE(r);
      auto const ru = reduce(q, u);
      auto const rv = reduce(q, v);
      CHECK(reduce(q, *r) == NormalForm::pair(ru.plus(), rv.minus()));
    }
  }
  // No left inverse for ρ in a column without a one.
  Presentation const dead({"λ", "λ′"},
                          {"ρ", "ρ′"},
                          {Outcome::zero(), Outcome::one(), Outcome::zero(),
                           Outcome::one()});
  CHECK_THROWS_AS(join_words(dead, {}, word(dead, "ρ")), std::runtime_error);
}

TEST_CASE("connect periodic points") {
  auto const p    = catalog::get("polycyclic2");
  auto const unit = periodic_point_from_unit(p);
  auto const y    = connect_periodic(p, unit, unit);
  CHECK(y.core.empty());

  CyclicWord const q(p, word(p, "ρ′ λ′"));
  auto const       z = connect_periodic(p, unit, q);
  CHECK_FALSE(first_bad_window(p, z, 12));
  auto const back = connect_periodic(p, q, unit);
  CHECK_FALSE(first_bad_window(p, back, 12));

  auto const e2 = catalog::get("example2");
  CHECK_THROWS_AS(connect_periodic(p, unit, periodic_point_from_unit(e2)),
                  std::invalid_argument);
  CHECK_THROWS_AS(connect_periodic(p, unit, CyclicWord(p, word(p, "λ ρ′"))),
                  std::runtime_error);

  // Admissible cycles outside the window language need not connect: every
  // finite core leaves surplus λ that meet ρ′.
  CHECK_THROWS_AS(connect_periodic(p,
                                   CyclicWord(p, word(p, "λ")),
                                   CyclicWord(p, word(p, "ρ′"))),
                  std::runtime_error);

  // Every pair of short cycles inside the window language connects.
  for (auto const& q2 : support::catalog()) {
    CAPTURE(q2.name());
    std::vector<CyclicWord> cycles;
    for (std::size_t len = 1; len <= 4; ++len) {
      for (auto const& w : language_enumerate(q2, len)) {
        CyclicWord        c(q2, w);
        YPointDescription self{c, {}, c};
        if (first_bad_window(q2, self, 12)) {
          continue;
        }
        Word reps;
        for (int k = 0; k < 6; ++k) {
          reps.insert(reps.end(), w.begin(), w.end());
        }
        if (xn_window_check(q2, reps, 2, 4).ok) {
          cycles.push_back(c);
        }
      }
    }
    CHECK(cycles.size() > 1);
    for (auto const& a : cycles) {
      for (auto const& b : cycles) {
        CHECK_FALSE(first_bad_window(q2, connect_periodic(q2, a, b), 12));
      }
    }
  }
}

TEST_CASE("property (a,n,H)") {
  PropertyACheckParams bad;
  bad.L_max = 7;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = {};
  bad.n = 0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

  auto const p = catalog::get("polycyclic2");
  auto const r = property_a_check(p, {2, 2, 10, 4});
  CHECK(r.ok());
  CHECK(r.words > 0);

  auto const e2 = catalog::get("example2");
  CHECK(property_a_check(e2, {2, 2, 8, 4}).ok());
}

TEST_CASE("property (a,n,H) enumerates the window language") {
  auto const           p = catalog::get("polycyclic2");
  PropertyACheckParams params{1, 1, 6, 2};
  auto const           r = property_a_check(p, params);
  // Brute force: same words, grouped and compared by raw contexts.
  std::map<std::pair<Word, Word>, std::vector<Word>> groups;
  std::size_t                                        words = 0;
  for (std::size_t len = 5; len <= 6; ++len) {
    for (auto const& w : oracle::words(oracle::alphabet(p), len, len)) {
      if (!oracle::admissible(p, w) || !oracle::in_window_language(p, w, 1, 2)) {
        continue;
      }
      ++words;
      groups[{Word(w.begin(), w.begin() + 1), Word(w.end() - 1, w.end())}]
          .push_back(w);
    }
  }
  CHECK(r.words == words);
  CHECK(r.groups == groups.size());
  std::size_t violating_groups = 0;
  for (auto const& [key, ws] : groups) {
    std::set<std::set<std::pair<Word, Word>>> contexts;
    for (auto const& w : ws) {
      contexts.insert(oracle::context(p, w, 2));
    }
    violating_groups += contexts.size() > 1;
  }
  CHECK(r.ok() == (violating_groups == 0));
}

TEST_CASE("property (a,n,H) finds violations when the windows are loose") {
  // With n large relative to the words only the ends are constrained, and
  // words sharing their ends can differ in context.
  auto const           p = catalog::get("polycyclic2");
  PropertyACheckParams params{3, 1, 7, 2};
  auto const           r = property_a_check(p, params);
  for (auto const& [a, b] : r.violations) {
    CHECK(a.front() == b.front());
    CHECK(a.back() == b.back());
    CHECK(oracle::context(p, a, 2) != oracle::context(p, b, 2));
  }
}
