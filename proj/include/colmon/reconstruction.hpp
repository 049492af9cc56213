// colmon - collision-table monoids and their subshifts
//
// The monoid associated with the subshift, rebuilt at bounded scale from
// context classes of admissible words, and compared with the presented
// monoid.

#ifndef COLMON_RECONSTRUCTION_HPP_
#define COLMON_RECONSTRUCTION_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "colmon/presentation.hpp"
#include "colmon/rewrite.hpp"
#include "colmon/subshift.hpp"

namespace colmon {

  ////////////////////////////////////////////////////////////////////////
  // Classes of bi-asymptotic points
  ////////////////////////////////////////////////////////////////////////

  // reduce(y.core); the flanking cycles multiply to the unit. Throws
  // std::invalid_argument unless y is canonical for p.
  NormalForm y_class_of(Presentation const& p, YPointDescription const& y);

  struct SymbolicProduct {
    NormalForm                       element;
    std::optional<YPointDescription> defining_point;
  };

  // The product of the classes of y1 and y2 and, when it is nonzero, the
  // point (unit cycle, y1.core ++ unit ++ y2.core, unit cycle). Throws
  // std::invalid_argument unless both are canonical for p.
  SymbolicProduct symbolic_product(Presentation const&      p,
                                   YPointDescription const& y1,
                                   YPointDescription const& y2);

  ////////////////////////////////////////////////////////////////////////
  // Context classes
  ////////////////////////////////////////////////////////////////////////

  class ContextClassTable {
   public:
    static constexpr std::int32_t undefined = -2;
    static constexpr std::int32_t zero      = -1;

    struct Class {
      Word                     representative;
      std::vector<std::size_t> members;  // indices into words()
    };

    // Words x, y and the class of x ++ y differing from that of
    // rep(x) ++ rep(y) (zero when inadmissible).
    struct Violation {
      Word         left;
      Word         right;
      std::int32_t expected;
      std::int32_t found;
    };

    std::size_t word_length() const noexcept {
      return _word_len;
    }
    std::size_t probe_length() const noexcept {
      return _m;
    }
    std::size_t domain() const noexcept {
      return _domain;
    }

    // Admissible words of length <= word_length(), shortlex.
    std::vector<Word> const& words() const noexcept {
      return _words;
    }
    std::vector<Class> const& classes() const noexcept {
      return _classes;
    }
    std::size_t class_of_index(std::size_t i) const noexcept {
      return _class_of[i];
    }
    // Class of an admissible word of the ball, or nullopt.
    std::optional<std::size_t> class_of(Word const& w) const;

    // Class of rep(a) ++ rep(b), zero if inadmissible, undefined if longer
    // than word_length().
    std::int32_t product(std::size_t a, std::size_t b) const noexcept {
      return _product[a * _classes.size() + b];
    }

    // First pair found whose class product depends on the representatives.
    std::optional<Violation> const& violation() const noexcept {
      return _violation;
    }
    bool well_defined() const noexcept {
      return !_violation.has_value();
    }

   private:
    friend ContextClassTable reconstruct_ball(Presentation const& p,
                                              std::size_t         word_len,
                                              std::size_t         m);

    std::size_t                                        _word_len = 0;
    std::size_t                                        _m        = 0;
    std::size_t                                        _domain   = 0;
    std::vector<Word>                                  _words;
    std::unordered_map<Word, std::size_t, WordHash>    _index;
    std::vector<std::size_t>                           _class_of;
    std::vector<Class>                                 _classes;
    std::vector<std::int32_t>                          _product;
    std::optional<Violation>                           _violation;
  };

  // Partitions the admissible words of length <= word_len by context at
  // probe length m and tabulates the concatenation product on classes.
  // Well-definedness is checked on every pair of words whose total length
  // fits in the ball; a failure is recorded in violation().
  ContextClassTable reconstruct_ball(Presentation const& p,
                                     std::size_t         word_len,
                                     std::size_t         m);

  struct IsoCertificate {
    std::size_t             word_length  = 0;
    std::size_t             probe_length = 0;
    std::vector<NormalForm> mapping;  // per class, reduce(representative)
    bool                    homomorphism_ok       = false;
    bool                    injective_ok          = false;
    bool                    surjective_at_scale_ok = false;

    bool valid() const noexcept {
      return homomorphism_ok && injective_ok && surjective_at_scale_ok;
    }
  };

  // homomorphism_ok: the table is well defined and mapping(a b) =
  // mapping(a) mapping(b) on every defined entry. injective_ok: distinct
  // classes have distinct images and every class has a single signature.
  // surjective_at_scale_ok: every normal form whose canonical word has
  // length <= word_length() is an image. Throws std::invalid_argument if t
  // was built over another presentation.
  IsoCertificate certify_isomorphism(Presentation const&      p,
                                     ContextClassTable const& t);

}  // namespace colmon

#endif  // COLMON_RECONSTRUCTION_HPP_
