// colmon - collision-table monoids and their subshifts
//
// Built-in presentations. Letters: l = λ, l' = λ′, l'' = λ″ and likewise
// for ρ. Tables are written row by row over (λ, λ′, λ″) x (ρ, ρ′, ρ″).

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

#include "colmon/presentation.hpp"

namespace colmon::catalog {

  namespace {
    // Outcome spelled with single characters: '0', '1', or a generator
    // index written as 'a' + index.
    Presentation build(std::string                     name,
                       std::vector<std::string> const& left,
                       std::vector<std::string> const& right,
                       std::string_view                cells) {
      std::vector<Outcome> table;
      for (char c : cells) {
        if (c == '0') {
          table.push_back(Outcome::zero());
        } else if (c == '1') {
          table.push_back(Outcome::one());
        } else {
          table.push_back(Outcome::gen(static_cast<Letter>(c - 'a')));
        }
      }
      return Presentation(left, right, std::move(table), std::move(name));
    }

    std::vector<std::string> const two_left  = {"λ", "λ′"};
    std::vector<std::string> const two_right = {"ρ", "ρ′"};
    std::vector<std::string> const three_left  = {"λ", "λ′", "λ″"};
    std::vector<std::string> const three_right = {"ρ", "ρ′", "ρ″"};

    // The polycyclic monoid on two generators: λρ = λ′ρ′ = 1 and
    // λρ′ = λ′ρ = 0. The source display of the zero relations is garbled;
    // this is the standard reading.
    Presentation polycyclic2() {
      return build("polycyclic2", two_left, two_right, "10"
                                                       "01");
    }

    // λρ = λρ′ = λ′ρ′ = λ″ρ″ = 1, every other product 0.
    Presentation example2() {
      return build("example2", three_left, three_right, "110"
                                                        "010"
                                                        "001");
    }

    // λρ = λ′ρ = λ′ρ′ = λ″ρ″ = 1, every other product 0. The source display
    // leaves (λ″, ρ′) unassigned; it is set to 0, which keeps a zero in
    // every row and column.
    Presentation example3() {
      return build("example3", three_left, three_right, "100"
                                                        "110"
                                                        "001");
    }

    // λρ = λ′ρ′ = λ″ρ″ = 1; λρ″ = λ′ρ = λ″ρ′ = 0; λρ′ = λ, λ′ρ″ = λ′ and
    // λ″ρ = λ″. The source display assigns (λ″, ρ′) twice (to 0 and to λ″)
    // and never assigns (λ″, ρ); the zero is kept and the monadic rule is
    // moved to the one unassigned pair.
    Presentation example4() {
      return build("example4", three_left, three_right, "1a0"
                                                        "01b"
                                                        "c01");
    }

    struct Entry {
      std::string_view name;
      Presentation (*make)();
      bool reconstructed;
    };

    std::array<Entry, 4> const entries = {{
        {"polycyclic2", &polycyclic2, false},
        {"example2", &example2, false},
        {"example3", &example3, true},
        {"example4", &example4, true},
    }};
  }  // namespace

  std::vector<std::string> names() {
    std::vector<std::string> out;
    for (auto const& e : entries) {
      out.emplace_back(e.name);
    }
    return out;
  }

  Presentation get(std::string_view name) {
    for (auto const& e : entries) {
      if (e.name == name) {
        return e.make();
      }
    }
    std::string msg = "unknown catalog entry '" + std::string(name)
                      + "'; available:";
    for (auto const& e : entries) {
      msg += ' ';
      msg += e.name;
    }
    throw std::invalid_argument(msg);
  }

  bool is_reconstructed(std::string_view name) {
    return std::any_of(entries.begin(), entries.end(), [&](Entry const& e) {
      return e.name == name && e.reconstructed;
    });
  }

}  // namespace colmon::catalog
