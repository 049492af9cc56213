// colmon - collision-table monoids and their subshifts

#include "colmon/presentation.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <utility>

namespace colmon {

  namespace {
    bool is_space(char c) noexcept {
      return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v'
             || c == '\f';
    }

    std::string_view trim(std::string_view s) noexcept {
      while (!s.empty() && is_space(s.front())) {
        s.remove_prefix(1);
      }
      while (!s.empty() && is_space(s.back())) {
        s.remove_suffix(1);
      }
      return s;
    }

    std::vector<std::string> tokenize(std::string_view s) {
      std::vector<std::string> out;
      std::size_t              i = 0;
      while (i < s.size()) {
        while (i < s.size() && is_space(s[i])) {
          ++i;
        }
        std::size_t j = i;
        while (j < s.size() && !is_space(s[j])) {
          ++j;
        }
        if (j > i) {
          out.emplace_back(s.substr(i, j - i));
        }
        i = j;
      }
      return out;
    }

    bool starts_with(std::string_view s, std::string_view prefix) noexcept {
      return s.substr(0, prefix.size()) == prefix;
    }

    void check_symbols(std::vector<std::string> const& left,
                       std::vector<std::string> const& right,
                       std::size_t                     left_line,
                       std::size_t                     right_line,
                       ValidationReport&               report) {
      if (left.empty()) {
        report.issues.push_back({ValidationIssue::Kind::empty_side,
                                 left_line,
                                 "no left generators declared"});
      }
      if (right.empty()) {
        report.issues.push_back({ValidationIssue::Kind::empty_side,
                                 right_line,
                                 "no right generators declared"});
      }
      std::set<std::string> seen;
      auto                  visit = [&](std::vector<std::string> const& syms,
                       std::size_t                     line) {
        for (auto const& s : syms) {
          if (!is_valid_symbol(s)) {
            report.issues.push_back({ValidationIssue::Kind::reserved_symbol,
                                     line,
                                     "'" + s + "' cannot be a generator"});
          } else if (!seen.insert(s).second) {
            report.issues.push_back({ValidationIssue::Kind::duplicate_symbol,
                                     line,
                                     "'" + s + "' declared more than once"});
          }
        }
      };
      visit(left, left_line);
      visit(right, right_line);
    }
  }  // namespace

  std::string_view to_string(ValidationIssue::Kind k) noexcept {
    switch (k) {
      case ValidationIssue::Kind::syntax:
        return "syntax";
      case ValidationIssue::Kind::missing_pair:
        return "missing-pair";
      case ValidationIssue::Kind::duplicate_rule:
        return "duplicate-rule";
      case ValidationIssue::Kind::unknown_symbol:
        return "unknown-symbol";
      case ValidationIssue::Kind::empty_side:
        return "empty-side";
      case ValidationIssue::Kind::reserved_symbol:
        return "reserved-symbol";
      case ValidationIssue::Kind::duplicate_symbol:
        return "duplicate-symbol";
    }
    return "unknown";
  }

  namespace {
    std::string describe(ValidationReport const& report) {
      std::ostringstream os;
      os << "invalid presentation:";
      for (auto const& issue : report.issues) {
        os << "\n  " << to_string(issue.kind);
        if (issue.line != 0) {
          os << " (line " << issue.line << ")";
        }
        os << ": " << issue.detail;
      }
      return os.str();
    }
  }  // namespace

  PresentationError::PresentationError(ValidationReport report)
      : std::runtime_error(describe(report)), _report(std::move(report)) {}

  bool is_valid_symbol(std::string_view sym) noexcept {
    if (sym.empty() || sym == "0" || sym == "1") {
      return false;
    }
    return std::none_of(sym.begin(), sym.end(), [](char c) {
      return is_space(c) || c == '#' || c == '=' || c == '|' || c == ':';
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // Presentation
  ////////////////////////////////////////////////////////////////////////

  Presentation::Presentation(std::vector<std::string> left,
                             std::vector<std::string> right,
                             std::vector<Outcome>     table,
                             std::string              name)
      : _symbols(),
        _left_size(left.size()),
        _table(std::move(table)),
        _name(std::move(name)) {
    ValidationReport report;
    check_symbols(left, right, 0, 0, report);
    std::size_t const n = left.size() + right.size();
    if (n > 0xFFFF) {
      report.issues.push_back(
          {ValidationIssue::Kind::syntax, 0, "alphabet too large"});
    }
    if (_table.size() != left.size() * right.size()) {
      report.issues.push_back({ValidationIssue::Kind::missing_pair,
                               0,
                               "collision table has "
                                   + std::to_string(_table.size())
                                   + " entries, expected "
                                   + std::to_string(left.size()
                                                    * right.size())});
    }
    for (auto const& o : _table) {
      if (o.is_gen() && o.letter() >= n) {
        report.issues.push_back({ValidationIssue::Kind::unknown_symbol,
                                 0,
                                 "table refers to generator index "
                                     + std::to_string(o.letter())});
        break;
      }
    }
    if (!report.ok()) {
      throw PresentationError(std::move(report));
    }
    _symbols = std::move(left);
    _symbols.insert(_symbols.end(),
                    std::make_move_iterator(right.begin()),
                    std::make_move_iterator(right.end()));
  }

  std::optional<Letter> Presentation::find(std::string_view sym) const {
    auto it = std::find(_symbols.begin(), _symbols.end(), sym);
    if (it == _symbols.end()) {
      return std::nullopt;
    }
    return static_cast<Letter>(it - _symbols.begin());
  }

  Letter Presentation::mirror_letter(Letter x) const noexcept {
    if (is_left(x)) {
      return static_cast<Letter>(right_size() + x);
    }
    return static_cast<Letter>(x - _left_size);
  }

  Word Presentation::mirror_word(Word const& w) const {
    Word out(w.rbegin(), w.rend());
    for (auto& x : out) {
      x = mirror_letter(x);
    }
    return out;
  }

  Presentation Presentation::mirrored() const {
    std::vector<std::string> left(_symbols.begin() + _left_size,
                                  _symbols.end());
    std::vector<std::string> right(_symbols.begin(),
                                   _symbols.begin() + _left_size);
    std::size_t const        L = left_size(), R = right_size();
    std::vector<Outcome>     table(L * R);
    for (std::size_t r = 0; r < R; ++r) {
      for (std::size_t l = 0; l < L; ++l) {
        Outcome o = _table[l * R + r];
        if (o.is_gen()) {
          o = Outcome::gen(mirror_letter(o.letter()));
        }
        table[r * L + l] = o;
      }
    }
    return Presentation(std::move(left),
                        std::move(right),
                        std::move(table),
                        _name.empty() ? std::string() : _name + "-mirror");
  }

  ////////////////////////////////////////////////////////////////////////
  // Parsing and serialization
  ////////////////////////////////////////////////////////////////////////

  ParseResult parse_presentation(std::string_view text) {
    struct Rule {
      std::string lhs_left, lhs_right, rhs;
      std::size_t line;
    };

    ValidationReport         report;
    std::vector<std::string> left, right;
    std::size_t              left_line = 0, right_line = 0;
    std::string              name;
    bool                     seen_name = false;
    std::vector<Rule>        rules;

    auto issue = [&](ValidationIssue::Kind k, std::size_t line, std::string d) {
      report.issues.push_back({k, line, std::move(d)});
    };

    std::size_t line_no = 0;
    std::size_t pos     = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) {
        end = text.size();
      }
      ++line_no;
      std::string_view line = trim(text.substr(pos, end - pos));
      pos                   = end + 1;

      if (line.empty() || line.front() == '#') {
        continue;
      }
      if (starts_with(line, "left:") || starts_with(line, "right:")) {
        bool const is_left = starts_with(line, "left:");
        auto&      target  = is_left ? left : right;
        auto&      at      = is_left ? left_line : right_line;
        if (at != 0) {
          issue(ValidationIssue::Kind::syntax,
                line_no,
                std::string("second '") + (is_left ? "left" : "right")
                    + ":' declaration (first on line " + std::to_string(at)
                    + ")");
          continue;
        }
        at     = line_no;
        target = tokenize(line.substr(is_left ? 5 : 6));
        continue;
      }
      if (starts_with(line, "name:")) {
        if (seen_name) {
          issue(ValidationIssue::Kind::syntax,
                line_no,
                "second 'name:' declaration");
          continue;
        }
        seen_name = true;
        name      = std::string(trim(line.substr(5)));
        continue;
      }
      auto eq = line.find('=');
      if (eq == std::string_view::npos) {
        issue(ValidationIssue::Kind::syntax,
              line_no,
              "expected '<left> <right> = <rhs>', got '" + std::string(line)
                  + "'");
        continue;
      }
      auto lhs = tokenize(line.substr(0, eq));
      auto rhs = tokenize(line.substr(eq + 1));
      if (lhs.size() != 2 || rhs.size() != 1) {
        issue(ValidationIssue::Kind::syntax,
              line_no,
              "expected '<left> <right> = <rhs>', got '" + std::string(line)
                  + "'");
        continue;
      }
      rules.push_back({lhs[0], lhs[1], rhs[0], line_no});
    }

    check_symbols(left, right, left_line, right_line, report);

    std::map<std::string, std::size_t> left_index, right_index;
    for (std::size_t i = 0; i < left.size(); ++i) {
      left_index.emplace(left[i], i);
    }
    for (std::size_t i = 0; i < right.size(); ++i) {
      right_index.emplace(right[i], i);
    }

    std::size_t const                     L = left.size(), R = right.size();
    std::vector<std::optional<Outcome>>   table(L * R);
    std::vector<std::size_t>              defined_at(L * R, 0);
    for (auto const& rule : rules) {
      auto li = left_index.find(rule.lhs_left);
      auto ri = right_index.find(rule.lhs_right);
      bool bad = false;
      if (li == left_index.end()) {
        issue(ValidationIssue::Kind::unknown_symbol,
              rule.line,
              "'" + rule.lhs_left + "' is not a declared left generator");
        bad = true;
      }
      if (ri == right_index.end()) {
        issue(ValidationIssue::Kind::unknown_symbol,
              rule.line,
              "'" + rule.lhs_right + "' is not a declared right generator");
        bad = true;
      }
      std::optional<Outcome> outcome;
      if (rule.rhs == "0") {
        outcome = Outcome::zero();
      } else if (rule.rhs == "1") {
        outcome = Outcome::one();
      } else if (auto it = left_index.find(rule.rhs);
                 it != left_index.end()) {
        outcome = Outcome::gen(static_cast<Letter>(it->second));
      } else if (auto jt = right_index.find(rule.rhs);
                 jt != right_index.end()) {
        outcome = Outcome::gen(static_cast<Letter>(L + jt->second));
      } else {
        issue(ValidationIssue::Kind::unknown_symbol,
              rule.line,
              "right-hand side '" + rule.rhs
                  + "' is neither 0, 1 nor a declared generator");
        bad = true;
      }
      if (bad) {
        continue;
      }
      std::size_t const k = li->second * R + ri->second;
      if (defined_at[k] != 0) {
        issue(ValidationIssue::Kind::duplicate_rule,
              rule.line,
              "(" + rule.lhs_left + ", " + rule.lhs_right
                  + ") already defined on line "
                  + std::to_string(defined_at[k]));
        continue;
      }
      defined_at[k] = rule.line;
      table[k]      = outcome;
    }
    for (std::size_t l = 0; l < L; ++l) {
      for (std::size_t r = 0; r < R; ++r) {
        if (!table[l * R + r]) {
          issue(ValidationIssue::Kind::missing_pair,
                0,
                "(" + left[l] + ", " + right[r] + ")");
        }
      }
    }

    ParseResult result;
    if (report.ok()) {
      std::vector<Outcome> flat;
      flat.reserve(table.size());
      for (auto const& o : table) {
        flat.push_back(*o);
      }
      result.presentation.emplace(
          std::move(left), std::move(right), std::move(flat), std::move(name));
    }
    result.report = std::move(report);
    return result;
  }

  Presentation parse_presentation_or_throw(std::string_view text) {
    auto result = parse_presentation(text);
    if (!result.presentation) {
      throw PresentationError(std::move(result.report));
    }
    return std::move(*result.presentation);
  }

  std::size_t fingerprint(Presentation const& p) {
    std::string s;
    for (Letter x = 0; x < p.alphabet_size(); ++x) {
      s += p.symbol(x);
      s += p.is_left(x) ? '<' : '>';
    }
    for (std::size_t l = 0; l < p.left_size(); ++l) {
      for (std::size_t r = 0; r < p.right_size(); ++r) {
        Outcome const o = p.collide(static_cast<Letter>(l), p.right_letter(r));
        s += static_cast<char>('0' + static_cast<int>(o.kind()));
        s += std::to_string(o.letter());
        s += ',';
      }
    }
    return std::hash<std::string>{}(s);
  }

  std::string serialize(Presentation const& p) {
    std::ostringstream os;
    if (!p.name().empty()) {
      os << "name: " << p.name() << '\n';
    }
    os << "left:";
    for (std::size_t i = 0; i < p.left_size(); ++i) {
      os << ' ' << p.symbol(static_cast<Letter>(i));
    }
    os << "\nright:";
    for (std::size_t i = 0; i < p.right_size(); ++i) {
      os << ' ' << p.symbol(p.right_letter(i));
    }
    os << '\n';
    for (std::size_t l = 0; l < p.left_size(); ++l) {
      for (std::size_t r = 0; r < p.right_size(); ++r) {
        auto const    ll = static_cast<Letter>(l);
        Letter const  rr = p.right_letter(r);
        Outcome const o  = p.collide(ll, rr);
        os << p.symbol(ll) << ' ' << p.symbol(rr) << " = ";
        if (o.is_zero()) {
          os << '0';
        } else if (o.is_one()) {
          os << '1';
        } else {
          os << p.symbol(o.letter());
        }
        os << '\n';
      }
    }
    return os.str();
  }

}  // namespace colmon
