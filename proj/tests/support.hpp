// Shared helpers for the test binaries.

#ifndef COLMON_TESTS_SUPPORT_HPP_
#define COLMON_TESTS_SUPPORT_HPP_

#include <random>
#include <string>
#include <vector>

#include "colmon/presentation.hpp"
#include "colmon/rewrite.hpp"

namespace support {

  using colmon::Letter;
  using colmon::NormalForm;
  using colmon::Presentation;
  using colmon::Word;

  using Rng = std::mt19937_64;

  inline Word random_word(Presentation const& p, std::size_t len, Rng& rng) {
    std::uniform_int_distribution<std::size_t> pick(0, p.alphabet_size() - 1);
    Word                                        w(len);
    for (auto& x : w) {
      x = static_cast<Letter>(pick(rng));
    }
    return w;
  }

  // Random admissible word of the given length, built letter by letter.
  inline Word random_admissible(Presentation const& p,
                                std::size_t         len,
                                Rng&                rng) {
    std::uniform_int_distribution<std::size_t> pick(0, p.alphabet_size() - 1);
    colmon::Scanner                             s(p);
    Word                                        w;
    while (w.size() < len) {
      Letter const    x = static_cast<Letter>(pick(rng));
      colmon::Scanner t = s;
      t.push(x);
      if (!t.is_zero()) {
        s = t;
        w.push_back(x);
      }
    }
    return w;
  }

  // Random nonzero normal form with parts of length <= max_part.
  inline NormalForm random_normal_form(Presentation const& p,
                                       std::size_t         max_part,
                                       Rng&                rng) {
    std::uniform_int_distribution<std::size_t> len(0, max_part);
    std::uniform_int_distribution<std::size_t> l(0, p.left_size() - 1);
    std::uniform_int_distribution<std::size_t> r(0, p.right_size() - 1);
    Word plus(len(rng)), minus(len(rng));
    for (auto& x : plus) {
      x = p.right_letter(r(rng));
    }
    for (auto& x : minus) {
      x = static_cast<Letter>(l(rng));
    }
    return NormalForm::pair(std::move(plus), std::move(minus));
  }

  inline NormalForm nf(Presentation const& p, std::string const& text) {
    return colmon::parse_normal_form(p, text);
  }
  inline Word word(Presentation const& p, std::string const& text) {
    return colmon::parse_word(p, text);
  }

  inline std::vector<Presentation> catalog() {
    std::vector<Presentation> out;
    for (auto const& name : colmon::catalog::names()) {
      out.push_back(colmon::catalog::get(name));
    }
    return out;
  }

  inline Presentation bicyclic() {
    return Presentation({"λ"}, {"ρ"}, {colmon::Outcome::one()}, "bicyclic");
  }

}  // namespace support

#endif  // COLMON_TESTS_SUPPORT_HPP_
