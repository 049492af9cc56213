// colmon - collision-table monoids and their subshifts
//
// The subshift whose admissible words are the words over L and R with
// nonzero product. Its language is factorial (zero is absorbing) and
// extendable (appending a left letter or prepending a right letter never
// produces zero).
//
// Follower sets, X_n windows and contexts are defined through infinite
// pasts and futures; everything here works with finite probes of a stated
// length instead. Probe sets shrink as the probe length grows, so every
// bounded answer approximates the infinite one from above.

#ifndef COLMON_SUBSHIFT_HPP_
#define COLMON_SUBSHIFT_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "colmon/presentation.hpp"
#include "colmon/rewrite.hpp"

namespace colmon {

  ////////////////////////////////////////////////////////////////////////
  // Language
  ////////////////////////////////////////////////////////////////////////

  // Throws std::invalid_argument on undeclared letters.
  bool admissible(Presentation const& p, std::span<Letter const> w);

  // Number of admissible words of length exactly n. Throws
  // std::overflow_error if the count does not fit in 64 bits.
  std::uint64_t language_count(Presentation const& p, std::size_t n);
  // Counts for every length 0..max_n.
  std::vector<std::uint64_t> language_counts(Presentation const& p,
                                             std::size_t         max_n);

  // Admissible words of length exactly n in lexicographic order (letters in
  // declaration order, left generators first).
  void language_enumerate(Presentation const&                     p,
                          std::size_t                             n,
                          std::function<void(Word const&)> const& f);
  std::vector<Word> language_enumerate(Presentation const& p, std::size_t n);

  // All admissible words of length <= n in shortlex order.
  std::vector<Word> language_ball(Presentation const& p, std::size_t n);

  ////////////////////////////////////////////////////////////////////////
  // Contexts
  ////////////////////////////////////////////////////////////////////////

  // reduce(w); words with the same signature have the same context at every
  // probe length. Throws std::domain_error if w is not admissible.
  NormalForm context_signature(Presentation const& p, Word const& w);

  // Every word over the alphabet of length <= m, in shortlex order.
  std::vector<Word> words_up_to(std::size_t alphabet_size, std::size_t m);

  // Finite contexts over unrestricted probes: all (u, v) with |u|, |v| <= m
  // and u w v admissible, as a bit table with one padded row per u, both
  // indexed by position in words_up_to(alphabet_size, m). Rows of right
  // extensions are cached per minus part of the scan state (appended
  // letters never reach the plus part), so one table serves many words.
  class FiniteContextTable {
   public:
    using Bits = std::vector<std::uint64_t>;

    FiniteContextTable(Presentation const& p, std::size_t m);

    std::size_t probe_length() const noexcept {
      return _m;
    }
    std::vector<Word> const& probes() const noexcept {
      return _probes;
    }

    // Throws std::domain_error if w is not admissible.
    Bits bits(Word const& w);

    bool contains(Bits const& bits, std::size_t u, std::size_t v) const
        noexcept {
      return (bits[u * _row_words + v / 64] >> (v % 64)) & 1U;
    }

   private:
    Bits const& row(std::span<Letter const> minus);

    Presentation const*                      _p;
    std::size_t                              _m;
    std::vector<Word>                        _probes;
    std::size_t                              _row_words;
    std::unordered_map<Word, Bits, WordHash> _rows;
  };

  // All (u, v), |u|, |v| <= m, with u w v admissible, sorted shortlex by u
  // then v. Throws std::domain_error if w is not admissible.
  std::vector<std::pair<Word, Word>> finite_context(Presentation const& p,
                                                    Word const&         w,
                                                    std::size_t         m);

  // Partition of admissible words by finite context at probe length m;
  // returns one class id per word, numbered by first occurrence.
  //
  // For u = u+ u- and v = v+ v-, u w v = u+ (u- w v+) v-, and neither a
  // leading plus part nor a trailing minus part can produce zero, so two
  // words have the same context at scale m iff they agree on probes
  // (u-, v+) with u- in L^{<=m} and v+ in R^{<=m}. Those probes are tried
  // in order of length, each membership decided by scanning the
  // concatenated word, and the partition is refined level by level. Words
  // with equal signatures share their context at every length, so
  // refinement stops as soon as every class has a single signature.
  std::vector<std::size_t> context_classes(Presentation const&      p,
                                           std::vector<Word> const& words,
                                           std::size_t              m);

  ////////////////////////////////////////////////////////////////////////
  // Followers and windows
  ////////////////////////////////////////////////////////////////////////

  // All b with |b| = N such that u a b is admissible for every u with
  // |u| <= M and u a admissible. Only probes u in L^{<=M} need to be tried
  // (a leading plus part never produces zero). Throws std::domain_error if
  // a is not admissible.
  std::vector<Word> omega_plus(Presentation const& p,
                               Word const&         a,
                               std::size_t         N,
                               std::size_t         M);
  // All b with |b| = N such that b a v is admissible for every v with
  // |v| <= M and a v admissible.
  std::vector<Word> omega_minus(Presentation const& p,
                                Word const&         a,
                                std::size_t         N,
                                std::size_t         M);

  struct WindowReport {
    Word              word;
    std::size_t       n = 0;
    std::size_t       M = 0;
    std::vector<bool> positions_ok;
    bool              ok = false;
  };

  // Position i passes iff w_i is in omega_plus(w[i-n, i), 1, M) and in
  // omega_minus(w(i, i+n], 1, M), windows truncated at the ends. Throws
  // std::invalid_argument unless |w| > 2n, std::domain_error if w is not
  // admissible.
  WindowReport xn_window_check(Presentation const& p,
                               Word const&         w,
                               std::size_t         n,
                               std::size_t         M);

  ////////////////////////////////////////////////////////////////////////
  // Periodic and bi-asymptotic points
  ////////////////////////////////////////////////////////////////////////

  // A nonempty word up to rotation, recorded with the presentation it was
  // built over.
  class CyclicWord {
   public:
    CyclicWord(Presentation const& p, Word letters);

    Word const& letters() const noexcept {
      return _letters;
    }
    std::size_t domain() const noexcept {
      return _domain;
    }

    friend bool operator==(CyclicWord const& a, CyclicWord const& b);

   private:
    Word        _letters;
    std::size_t _domain;
  };

  // The bi-infinite point ... c c core d d ... with c = left_cycle repeated
  // to the left and d = right_cycle repeated to the right.
  struct YPointDescription {
    CyclicWord left_cycle;
    Word       core;
    CyclicWord right_cycle;

    friend bool operator==(YPointDescription const&,
                           YPointDescription const&) = default;
  };

  // The cycle of unit_factorization(); every power has product 1.
  CyclicWord periodic_point_from_unit(Presentation const& p);

  // (unit cycle, w, unit cycle). Throws std::domain_error if w is not
  // admissible.
  YPointDescription embed_in_Y(Presentation const& p, Word const& w);

  // Both cycles are literally the unit factorization of p.
  bool is_canonical(Presentation const& p, YPointDescription const& y);

  // The finite word containing every window of width <= width of y:
  // enough copies of each cycle around the core.
  Word materialize(YPointDescription const& y, std::size_t width);

  // The first window (as a word) of width <= width that is not admissible,
  // or nullopt if all are.
  std::optional<Word> first_bad_window(Presentation const&      p,
                                       YPointDescription const& y,
                                       std::size_t              width);

  // w = (right inverse of the minus part of u) ++ (left inverse of the plus
  // part of v), so that u w v has product u+ v- != 0. Throws
  // std::domain_error if u or v is not admissible and std::runtime_error if
  // an inverse is missing.
  Word join_words(Presentation const& p, Word const& u, Word const& v);

  // (p, join_words(period of p, period of q), q), checked to have admissible
  // windows up to `width`. Throws std::invalid_argument if the cycles come
  // from another presentation and std::runtime_error if no admissible
  // connection results.
  YPointDescription connect_periodic(Presentation const& pres,
                                     CyclicWord const&   p,
                                     CyclicWord const&   q,
                                     std::size_t         width = 12);

  ////////////////////////////////////////////////////////////////////////
  // Property (a, n, H) at scale
  ////////////////////////////////////////////////////////////////////////

  struct PropertyACheckParams {
    std::size_t n     = 2;
    std::size_t H     = 2;
    std::size_t L_max = 10;
    std::size_t m     = 4;

    // Throws std::invalid_argument unless all are positive and
    // L_max >= 3H + 2.
    void validate() const;
  };

  struct PropertyAReport {
    PropertyACheckParams params;
    // Admissible words with lengths in range that pass the window check.
    std::size_t words = 0;
    // Classes of such words sharing their first and last H letters.
    std::size_t groups = 0;
    // Groups holding more than one signature, whose contexts had to be
    // compared.
    std::size_t groups_compared = 0;
    // One pair of representatives for each pair of distinct contexts
    // inside a group, sorted.
    std::vector<std::pair<Word, Word>> violations;

    bool ok() const noexcept {
      return violations.empty();
    }
  };

  // Enumerates every admissible word a with 3H + 2 <= |a| <= L_max and
  // |a| > 2n passing xn_window_check(a, n, m), groups them by their first
  // and last H letters, and compares finite contexts at probe length m
  // inside each group. Finding no violation corroborates the property at
  // this scale; it proves nothing beyond it.
  PropertyAReport property_a_check(Presentation const&         p,
                                   PropertyACheckParams const& params);

}  // namespace colmon

#endif  // COLMON_SUBSHIFT_HPP_
