// colmon - collision-table monoids and their subshifts
//
// Presentations of monoids with zero generated by two disjoint alphabets
// L and R, subject to one relation l r = T(l, r) per pair, where T(l, r) is
// 0, the unit, or a single generator.

#ifndef COLMON_PRESENTATION_HPP_
#define COLMON_PRESENTATION_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace colmon {

  // Letters are indices into the alphabet of a presentation: the left
  // generators come first (in declaration order), followed by the right
  // generators.
  using Letter = std::uint16_t;
  using Word   = std::vector<Letter>;

  enum class Side : std::uint8_t { left, right };

  class Outcome {
   public:
    enum class Kind : std::uint8_t { zero, one, gen };

    constexpr Outcome() = default;

    static constexpr Outcome zero() {
      return Outcome(Kind::zero, 0);
    }
    static constexpr Outcome one() {
      return Outcome(Kind::one, 0);
    }
    static constexpr Outcome gen(Letter g) {
      return Outcome(Kind::gen, g);
    }

    constexpr Kind kind() const noexcept {
      return _kind;
    }
    constexpr bool is_zero() const noexcept {
      return _kind == Kind::zero;
    }
    constexpr bool is_one() const noexcept {
      return _kind == Kind::one;
    }
    constexpr bool is_gen() const noexcept {
      return _kind == Kind::gen;
    }
    // Only meaningful when is_gen().
    constexpr Letter letter() const noexcept {
      return _gen;
    }

    friend constexpr bool operator==(Outcome const&, Outcome const&) = default;

   private:
    constexpr Outcome(Kind k, Letter g) : _kind(k), _gen(g) {}

    Kind   _kind = Kind::zero;
    Letter _gen  = 0;
  };

  struct ValidationIssue {
    enum class Kind : std::uint8_t {
      syntax,
      missing_pair,
      duplicate_rule,
      unknown_symbol,
      empty_side,
      reserved_symbol,
      duplicate_symbol
    };

    Kind        kind;
    std::size_t line;  // 1-based; 0 when the issue has no single line
    std::string detail;
  };

  std::string_view to_string(ValidationIssue::Kind k) noexcept;

  struct ValidationReport {
    std::vector<ValidationIssue> issues;

    bool ok() const noexcept {
      return issues.empty();
    }
  };

  // Thrown when a presentation cannot be constructed; carries every issue
  // that was found, not just the first.
  class PresentationError : public std::runtime_error {
   public:
    explicit PresentationError(ValidationReport report);

    ValidationReport const& report() const noexcept {
      return _report;
    }

   private:
    ValidationReport _report;
  };

  class Presentation {
   public:
    // Throws PresentationError unless the symbols are valid and disjoint and
    // table has exactly left.size() * right.size() entries (row-major,
    // indexed by left then right) whose generators are in range.
    Presentation(std::vector<std::string> left,
                 std::vector<std::string> right,
                 std::vector<Outcome>     table,
                 std::string              name = {});

    std::size_t left_size() const noexcept {
      return _left_size;
    }
    std::size_t right_size() const noexcept {
      return _symbols.size() - _left_size;
    }
    std::size_t alphabet_size() const noexcept {
      return _symbols.size();
    }

    bool is_left(Letter x) const noexcept {
      return x < _left_size;
    }
    bool is_right(Letter x) const noexcept {
      return x >= _left_size && x < _symbols.size();
    }
    Side side(Letter x) const noexcept {
      return is_left(x) ? Side::left : Side::right;
    }

    // The i-th right generator as a letter.
    Letter right_letter(std::size_t i) const noexcept {
      return static_cast<Letter>(_left_size + i);
    }

    // T(l, r); l must be a left letter and r a right letter.
    Outcome collide(Letter l, Letter r) const noexcept {
      return _table[l * right_size() + (r - _left_size)];
    }

    std::string const& symbol(Letter x) const {
      return _symbols.at(x);
    }
    std::optional<Letter> find(std::string_view sym) const;

    std::string const& name() const noexcept {
      return _name;
    }

    // The anti-isomorphic presentation: reversing words turns l r = T(l, r)
    // into r l = T(l, r), so the roles of L and R swap. Letter x of this
    // presentation corresponds to letter mirror_letter(x) of the mirror.
    Presentation mirrored() const;
    Letter       mirror_letter(Letter x) const noexcept;
    Word         mirror_word(Word const& w) const;

    friend bool operator==(Presentation const&, Presentation const&)
        = default;

   private:
    std::vector<std::string> _symbols;
    std::size_t              _left_size;
    std::vector<Outcome>     _table;
    std::string              _name;
  };

  // Presentation file format (.smp), one directive per line:
  //   # comment
  //   name: <label>            (optional)
  //   left: <sym> <sym> ...
  //   right: <sym> <sym> ...
  //   <lsym> <rsym> = <rhs>    (rhs is 0, 1 or a declared symbol)
  struct ParseResult {
    std::optional<Presentation> presentation;
    ValidationReport            report;
  };

  ParseResult  parse_presentation(std::string_view text);
  Presentation parse_presentation_or_throw(std::string_view text);
  std::string  serialize(Presentation const& p);

  // Hash of the alphabets and table, ignoring the name. Objects built over
  // one presentation record it to reject mixing with another.
  std::size_t fingerprint(Presentation const& p);

  // Whether sym may be used as a generator symbol.
  bool is_valid_symbol(std::string_view sym) noexcept;

  namespace catalog {
    std::vector<std::string> names();

    // Throws std::invalid_argument listing the available names.
    Presentation get(std::string_view name);

    // Built-in entries whose table had to be reconstructed from a defective
    // source display.
    bool is_reconstructed(std::string_view name);
  }  // namespace catalog

}  // namespace colmon

#endif  // COLMON_PRESENTATION_HPP_
