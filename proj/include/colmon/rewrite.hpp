// colmon - collision-table monoids and their subshifts
//
// The rewriting system l r -> T(l, r). Left-hand sides are two-letter words
// l r with l in L and r in R, and L and R are disjoint, so no two left-hand
// sides overlap: the system has no critical pairs and is confluent. Every
// rule shortens the word, so it terminates. The irreducible words are
// exactly those in R*L*, and every nonzero element has a unique normal form
// plus * minus with plus in R* and minus in L*.

#ifndef COLMON_REWRITE_HPP_
#define COLMON_REWRITE_HPP_

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "colmon/presentation.hpp"

namespace colmon {

  class NormalForm {
   public:
    // The unit.
    NormalForm() = default;

    static NormalForm zero() {
      NormalForm nf;
      nf._zero = true;
      return nf;
    }
    static NormalForm one() {
      return NormalForm();
    }
    // plus must lie in R* and minus in L*; not checked here.
    static NormalForm pair(Word plus, Word minus) {
      NormalForm nf;
      nf._plus  = std::move(plus);
      nf._minus = std::move(minus);
      return nf;
    }

    bool is_zero() const noexcept {
      return _zero;
    }
    bool is_one() const noexcept {
      return !_zero && _plus.empty() && _minus.empty();
    }
    Word const& plus() const noexcept {
      return _plus;
    }
    Word const& minus() const noexcept {
      return _minus;
    }
    std::size_t length() const noexcept {
      return _plus.size() + _minus.size();
    }

    friend bool operator==(NormalForm const&, NormalForm const&) = default;
    friend auto operator<=>(NormalForm const&, NormalForm const&) = default;

   private:
    bool _zero = false;
    Word _plus;
    Word _minus;
  };

  struct NormalFormHash {
    std::size_t operator()(NormalForm const& nf) const noexcept;
  };

  struct WordHash {
    std::size_t operator()(Word const& w) const noexcept;
  };

  // Incremental left-to-right reduction with a pushback stack. The stack
  // always holds an irreducible word plus * minus; pushing a right letter
  // collides it with the top of the minus part, and an outcome in R
  // collides again with the next letter down.
  class Scanner {
   public:
    explicit Scanner(Presentation const& p) : _p(&p) {}
    // Starts from the element nf.
    Scanner(Presentation const& p, NormalForm const& nf);

    void push(Letter x);
    void push(std::span<Letter const> w) {
      for (Letter x : w) {
        push(x);
        if (_zero) {
          return;
        }
      }
    }

    bool is_zero() const noexcept {
      return _zero;
    }
    std::span<Letter const> plus() const noexcept {
      return {_stack.data(), _plus_size};
    }
    std::span<Letter const> minus() const noexcept {
      return {_stack.data() + _plus_size, _stack.size() - _plus_size};
    }
    NormalForm normal_form() const;

   private:
    Presentation const* _p;
    Word                _stack;
    std::size_t         _plus_size = 0;
    bool                _zero      = false;
  };

  // Throws std::invalid_argument if w contains a letter outside the
  // alphabet of p.
  void check_word(Presentation const& p, std::span<Letter const> w);

  NormalForm reduce(Presentation const& p, std::span<Letter const> w);
  NormalForm multiply(Presentation const& p,
                      NormalForm const&   a,
                      NormalForm const&   b);

  // plus ++ minus. Throws std::domain_error for zero, which has no word
  // representative among the admissible words.
  Word canonical_word(NormalForm const& e);

  // A shortest nonempty word whose product is the unit, found by
  // breadth-first search in declaration order up to length
  // 2 * |L| * |R|. Throws std::runtime_error when there is none.
  Word unit_factorization(Presentation const& p);

  // Words are written as whitespace-separated generator symbols.
  std::string format_word(Presentation const& p, std::span<Letter const> w);
  // Throws std::invalid_argument on an undeclared symbol.
  Word parse_word(Presentation const& p, std::string_view text);

  // "0", or the plus and minus words separated by '|'; "|" is the unit.
  std::string format_normal_form(Presentation const& p, NormalForm const& e);
  // Accepts the format above; the result is reduced, so any word pair is
  // allowed on either side of '|'.
  NormalForm parse_normal_form(Presentation const& p, std::string_view text);

  // Shortlex successor enumeration of all words of exactly length n, in
  // declaration order. Calls f for each one.
  void for_each_word(std::size_t                            alphabet_size,
                     std::size_t                            n,
                     std::function<void(Word const&)> const& f);

}  // namespace colmon

#endif  // COLMON_REWRITE_HPP_
